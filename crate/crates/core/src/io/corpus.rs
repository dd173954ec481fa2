use super::{cache_key, sha256_hex, ResultCache};
use crate::classify::{
    classify, classify_prefix, view_for, view_for_prefix, HorizonConfig, HorizonOverride, PropertyReport,
};
use crate::factor::LanguageView;
use crate::error::{Error, Result};
use crate::source::{FinitePrefix, WordSpec};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::json;
use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq)]
pub enum FixtureInput {
    Spec(WordSpec),
    /// Externally supplied symbol file.
    PrefixFile(PathBuf),
}

/// One `ex_<label>.json` file of the corpus.
#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub label: String,
    pub input: FixtureInput,
    pub horizon: HorizonOverride,
    pub path: PathBuf,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureFile {
    #[serde(default)]
    label: Option<String>,
    #[serde(default)]
    #[allow(dead_code)]
    description: Option<String>,
    #[serde(default)]
    spec: Option<WordSpec>,
    #[serde(default)]
    prefix_file: Option<String>,
    #[serde(default)]
    horizon: HorizonOverride,
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

pub fn load_fixture(path: &Path) -> Result<Fixture> {
    let parse = |message: String| Error::Parse {
        path: path.display().to_string(),
        message,
    };
    let text = std::fs::read_to_string(path)?;
    let f: FixtureFile = serde_json::from_str(&text).map_err(|e| parse(e.to_string()))?;
    let stem = stem(path);
    let label = f
        .label
        .unwrap_or_else(|| stem.strip_prefix("ex_").unwrap_or(&stem).to_string());
    let input = match (f.spec, f.prefix_file) {
        (Some(spec), None) => FixtureInput::Spec(spec),
        (None, Some(file)) => {
            let base = path.parent().unwrap_or(Path::new("."));
            FixtureInput::PrefixFile(base.join(file))
        }
        _ => return Err(parse("exactly one of `spec` and `prefix_file` is required".into())),
    };
    Ok(Fixture {
        label,
        input,
        horizon: f.horizon,
        path: path.to_path_buf(),
    })
}

/// Reads a fixture file, a bare word spec (any other `.json`) or a symbol file.
pub fn load_input(path: &Path) -> Result<Fixture> {
    let external = Fixture {
        label: stem(path),
        input: FixtureInput::PrefixFile(path.to_path_buf()),
        horizon: HorizonOverride::default(),
        path: path.to_path_buf(),
    };
    if path.extension().is_none_or(|e| e != "json") {
        if !path.is_file() {
            return Err(Error::Io(std::io::Error::new(
                std::io::ErrorKind::NotFound,
                format!("{}: no such file", path.display()),
            )));
        }
        return Ok(external);
    }
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    if value.get("spec").is_some() || value.get("prefix_file").is_some() {
        return load_fixture(path);
    }
    let mut spec = WordSpec::from_file(path)?;
    if spec.name.is_empty() {
        spec.name = stem(path);
    }
    Ok(Fixture {
        label: spec.name.clone(),
        input: FixtureInput::Spec(spec),
        ..external
    })
}

/// Fixtures of a directory plus notices about entries that were skipped.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub fixtures: Vec<Fixture>,
    pub notices: Vec<String>,
    /// Files that failed to parse, by label.
    pub broken: BTreeMap<String, String>,
}

/// Loads every `ex_*.json` in `dir`, sorted by file name. Fixtures whose
/// prefix file is absent are skipped with a notice; unreadable ones are
/// collected in `broken`.
pub fn load_corpus(dir: &Path) -> Result<Corpus> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let name = p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            name.starts_with("ex_") && name.ends_with(".json")
        })
        .collect();
    paths.sort();
    let mut corpus = Corpus::default();
    for p in paths {
        let f = match load_fixture(&p) {
            Ok(f) => f,
            Err(e) => {
                let s = stem(&p);
                corpus
                    .broken
                    .insert(s.strip_prefix("ex_").unwrap_or(&s).to_string(), e.to_string());
                continue;
            }
        };
        if let FixtureInput::PrefixFile(file) = &f.input {
            if !file.exists() {
                corpus
                    .notices
                    .push(format!("{}: prefix file {} not found, skipped", f.label, file.display()));
                continue;
            }
        }
        corpus.fixtures.push(f);
    }
    Ok(corpus)
}

impl Fixture {
    pub fn config(&self, base: &HorizonConfig) -> HorizonConfig {
        base.with(&self.horizon)
    }

    /// Cache key of the report under `cfg`.
    pub fn key(&self, cfg: &HorizonConfig) -> Result<String> {
        let input = match &self.input {
            FixtureInput::Spec(s) => serde_json::to_value(s)?,
            FixtureInput::PrefixFile(p) => {
                json!({ "name": self.label, "prefix_sha256": sha256_hex(&std::fs::read(p)?) })
            }
        };
        cache_key(&input, cfg)
    }

    /// The indexed prefix the report is computed on.
    pub fn view(&self, base: &HorizonConfig) -> Result<(LanguageView, Vec<String>)> {
        let cfg = self.config(base);
        match &self.input {
            FixtureInput::Spec(s) => view_for(s, &cfg),
            FixtureInput::PrefixFile(p) => view_for_prefix(self.external_prefix(p)?, &cfg),
        }
    }

    fn external_prefix(&self, p: &Path) -> Result<FinitePrefix> {
        let mut prefix = FinitePrefix::from_file(p)?;
        prefix.name = self.label.clone();
        Ok(prefix)
    }

    pub fn classify(&self, base: &HorizonConfig) -> Result<PropertyReport> {
        let cfg = self.config(base);
        match &self.input {
            FixtureInput::Spec(s) => classify(s, &cfg),
            FixtureInput::PrefixFile(p) => classify_prefix(self.external_prefix(p)?, &cfg),
        }
    }
}

/// Classifies fixtures in parallel on `jobs` threads (0: available
/// parallelism), computing identical inputs once and consulting `cache`.
pub fn classify_corpus(
    fixtures: &[Fixture],
    base: &HorizonConfig,
    cache: Option<&ResultCache>,
    jobs: usize,
) -> Result<BTreeMap<String, Result<PropertyReport>>> {
    let mut keys = Vec::with_capacity(fixtures.len());
    let mut first: HashMap<String, usize> = HashMap::new();
    for (i, f) in fixtures.iter().enumerate() {
        let k = f.key(&f.config(base))?;
        first.entry(k.clone()).or_insert(i);
        keys.push(k);
    }
    let mut unique: Vec<usize> = first.values().copied().collect();
    unique.sort_unstable();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let results: Vec<(usize, Result<PropertyReport>)> = pool.install(|| {
        unique
            .par_iter()
            .map(|&i| {
                let f = &fixtures[i];
                if let Some(r) = cache.and_then(|c| c.get(&keys[i])) {
                    return (i, Ok(r));
                }
                let r = f.classify(base);
                if let (Some(c), Ok(rep)) = (cache, &r) {
                    if let Err(e) = c.put(&keys[i], rep) {
                        return (i, Err(e));
                    }
                }
                (i, r)
            })
            .collect()
    });
    let by_index: HashMap<usize, Result<PropertyReport>> = results.into_iter().collect();
    let mut out = BTreeMap::new();
    for (i, f) in fixtures.iter().enumerate() {
        let src = first[&keys[i]];
        let r = match &by_index[&src] {
            Ok(rep) => Ok(rep.clone()),
            Err(e) if src == i => Err(Error::GenerationFailed {
                name: f.label.clone(),
                source: Box::new(Error::InvalidArgument(e.to_string())),
            }),
            Err(e) => Err(Error::GenerationFailed {
                name: f.label.clone(),
                source: Box::new(Error::InvalidArgument(format!("as for {}: {e}", fixtures[src].label))),
            }),
        };
        out.insert(f.label.clone(), r);
    }
    Ok(out)
}
