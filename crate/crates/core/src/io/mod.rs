//! Symbol files, machine-readable exports, the result cache and the fixture
//! corpus.

mod cache;
mod corpus;

pub use cache::{cache_key, ResultCache, CACHE_ENV};
pub use corpus::{classify_corpus, load_corpus, load_fixture, load_input, Corpus, Fixture, FixtureInput};

use crate::abelian::BalanceTable;
use crate::classify::PropertyReport;
use crate::error::Result;
use crate::source::{FinitePrefix, Provenance};
use crate::ENGINE_VERSION;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Pretty JSON with object keys in sorted order.
pub fn to_sorted_json<T: Serialize>(v: &T) -> Result<String> {
    let value = serde_json::to_value(v)?;
    let mut s = serde_json::to_string_pretty(&value)?;
    s.push('\n');
    Ok(s)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Sidecar metadata path of a symbol file: `x.txt` gives `x.txt.meta.json`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

#[derive(Serialize)]
struct PrefixMeta<'a> {
    name: &'a str,
    length: usize,
    alphabet: String,
    sha256: String,
    engine: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    spec: Option<&'a crate::source::WordSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    source_file: Option<&'a str>,
}

/// Writes the prefix as one character per symbol and a JSON sidecar.
pub fn write_prefix(prefix: &FinitePrefix, path: &Path) -> Result<PathBuf> {
    let text = prefix.text();
    std::fs::write(path, &text)?;
    let meta = PrefixMeta {
        name: &prefix.name,
        length: prefix.len(),
        alphabet: prefix.alphabet.to_string(),
        sha256: sha256_hex(text.as_bytes()),
        engine: ENGINE_VERSION,
        spec: prefix.spec(),
        source_file: match &prefix.provenance {
            Provenance::External { path } => Some(path),
            Provenance::Spec(_) => None,
        },
    };
    let side = sidecar_path(path);
    std::fs::write(&side, to_sorted_json(&meta)?)?;
    Ok(side)
}

/// `n,C,dC,d2C,P,AC,defect` for `n <= n_max`; cells outside a table's
/// range are left empty.
pub fn complexity_csv(report: &PropertyReport) -> String {
    let t = &report.tables;
    let mut s = String::from("n,C,dC,d2C,P,AC,defect\n");
    let cell = |v: Option<String>| v.unwrap_or_default();
    for n in 0..=report.horizon.n_max {
        let _ = writeln!(
            s,
            "{n},{},{},{},{},{},{}",
            cell(t.complexity.get(n).map(|v| v.to_string())),
            cell(t.first_differences.get(n).map(|v| v.to_string())),
            cell(t.second_differences.get(n).map(|v| v.to_string())),
            cell(t.palindromic.get(n).map(|v| v.to_string())),
            cell(n.checked_sub(1).and_then(|i| t.abelian.get(i)).map(|v| v.to_string())),
            cell(t.prefix_defect.get(n).map(|v| v.to_string())),
        );
    }
    s
}

/// `n,AC` followed by the minimum, maximum and spread of every letter.
pub fn abelian_csv(alphabet: &crate::alphabet::Alphabet, t: &BalanceTable) -> String {
    let mut s = String::from("n,AC");
    for a in 0..t.k {
        let l = alphabet.letter(a as u8);
        let _ = write!(s, ",min_{l},max_{l},spread_{l}");
    }
    s.push('\n');
    for n in 1..=t.max_n {
        let _ = write!(s, "{n},{}", t.ac(n));
        for a in 0..t.k {
            let _ = write!(s, ",{},{},{}", t.min[n - 1][a], t.max[n - 1][a], t.spread(n, a));
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, HorizonConfig};
    use crate::source::{PeriodicSpec, Source, WordSpec};

    #[test]
    fn sorted_json_orders_keys() {
        #[derive(Serialize)]
        struct T {
            z: u8,
            a: u8,
        }
        let s = to_sorted_json(&T { z: 1, a: 2 }).unwrap();
        assert!(s.find("\"a\"").unwrap() < s.find("\"z\"").unwrap());
    }

    #[test]
    fn csv_has_one_row_per_length() {
        let spec = WordSpec::new("p", Source::Periodic(PeriodicSpec::new("abcba")));
        let cfg = HorizonConfig {
            n_max: 10,
            min_prefix: 1000,
            ac_cap: 20,
            ..Default::default()
        };
        let r = classify(&spec, &cfg).unwrap();
        let csv = complexity_csv(&r);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 12);
        assert_eq!(lines[0], "n,C,dC,d2C,P,AC,defect");
        assert_eq!(lines[1], "0,1,2,0,1,,0");
        assert_eq!(lines[6], "5,5,0,0,1,1,0");
    }

    #[test]
    fn prefix_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("w.txt");
        let p = FinitePrefix::from_text("w", "abaababaab").unwrap();
        let side = write_prefix(&p, &path).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "abaababaab");
        let meta: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(side).unwrap()).unwrap();
        assert_eq!(meta["length"], 10);
        assert_eq!(FinitePrefix::from_file(&path).unwrap().symbols, p.symbols);
    }
}
