use super::{sha256_hex, to_sorted_json};
use crate::classify::{HorizonConfig, PropertyReport};
use crate::error::Result;
use crate::ENGINE_VERSION;
use serde_json::json;
use std::path::{Path, PathBuf};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "SG_CACHE_DIR";

/// Key over the input, the horizon configuration and the engine version.
/// `input` is the word spec, or a description of an external prefix.
pub fn cache_key(input: &serde_json::Value, cfg: &HorizonConfig) -> Result<String> {
    let doc = json!({ "engine": ENGINE_VERSION, "horizon": cfg, "input": input });
    Ok(sha256_hex(to_sorted_json(&doc)?.as_bytes()))
}

/// Serialized reports stored as `<key>.json`.
#[derive(Clone, Debug)]
pub struct ResultCache {
    dir: PathBuf,
}

impl ResultCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir)?;
        Ok(ResultCache { dir })
    }

    /// The cache named by `SG_CACHE_DIR`, if set and non-empty.
    pub fn from_env() -> Result<Option<Self>> {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Ok(Some(Self::new(PathBuf::from(d))?)),
            _ => Ok(None),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Stored text of the report, if any.
    pub fn get_text(&self, key: &str) -> Option<String> {
        std::fs::read_to_string(self.path(key)).ok()
    }

    pub fn get(&self, key: &str) -> Option<PropertyReport> {
        self.get_text(key).and_then(|t| serde_json::from_str(&t).ok())
    }

    /// Stores the report and returns its serialized text.
    pub fn put(&self, key: &str, report: &PropertyReport) -> Result<String> {
        let text = to_sorted_json(report)?;
        let tmp = self.dir.join(format!("{key}.json.tmp{}", std::process::id()));
        std::fs::write(&tmp, &text)?;
        std::fs::rename(&tmp, self.path(key))?;
        Ok(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::source::{Source, SubstitutionSpec, WordSpec};

    #[test]
    fn cached_report_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultCache::new(dir.path()).unwrap();
        let spec = WordSpec::new("fib", Source::Substitution(SubstitutionSpec::new(&[('a', "ab"), ('b', "a")], 'a')));
        let cfg = HorizonConfig {
            n_max: 20,
            min_prefix: 4096,
            ac_cap: 50,
            ..Default::default()
        };
        let key = cache_key(&serde_json::to_value(&spec).unwrap(), &cfg).unwrap();
        let fresh = classify(&spec, &cfg).unwrap();
        let stored = cache.put(&key, &fresh).unwrap();
        let hit = cache.get(&key).unwrap();
        assert_eq!(hit, fresh);
        assert_eq!(to_sorted_json(&hit).unwrap(), stored);
        assert_eq!(cache.get_text(&key).unwrap(), stored);
        let other = cache_key(&serde_json::to_value(&spec).unwrap(), &HorizonConfig { n_max: 21, ..cfg }).unwrap();
        assert_ne!(key, other);
        assert!(cache.get(&other).is_none());
    }
}
