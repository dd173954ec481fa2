//! Property reports, the relation matrix and the example table.

mod checks;
pub mod relations;
pub mod table;

pub use checks::{bs_palindromic, bs_rows, no_weak_bs, property_bo, property_c, property_lr, BsRow};

use crate::abelian::{property_b_checks, BalanceTable};
use crate::error::{Error, Result};
use crate::factor::{saturate, LanguageView, SaturationStatus};
use crate::palindrome::{self, FacPalRow, PalindromeIndex};
use crate::returns::{property_r, recurrence_diagnostics, GapRow, ReturnScan};
use crate::source::{FinitePrefix, Provenance, WordSpec};
use crate::verdict::Verdict;
use crate::ENGINE_VERSION;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Verdict keys every report carries.
pub const KEYS: [&str; 14] = [
    "C", "LR", "BO", "R", "P", "PE", "B_forall", "B_exists", "AC", "rich", "CuR", "UR", "recurrent", "aperiodic",
];

/// Further keys used by the relation matrix.
pub const EXTRA_KEYS: [&str; 8] = [
    "BO_p",
    "pal_returns",
    "lpp_lps",
    "infinite_palindromes",
    "bs_palindromic",
    "fac_pal_equality",
    "no_weak_bs",
    "parity_law",
];

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HorizonConfig {
    pub n_max: usize,
    /// Largest prefix the saturation schedule may generate.
    pub prefix_cap: usize,
    /// Shortest prefix analysed once saturated.
    pub min_prefix: usize,
    /// Longest factor whose return words are counted.
    pub len_cap: usize,
    /// Longest window in the abelian tables.
    pub ac_cap: usize,
}

impl Default for HorizonConfig {
    fn default() -> Self {
        HorizonConfig {
            n_max: 100,
            prefix_cap: 1 << 27,
            min_prefix: 1 << 18,
            len_cap: 30,
            ac_cap: 2000,
        }
    }
}

/// Per-fixture adjustments of a [`HorizonConfig`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HorizonOverride {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prefix_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_prefix: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub len_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ac_cap: Option<usize>,
}

impl HorizonConfig {
    pub fn with(&self, o: &HorizonOverride) -> Self {
        HorizonConfig {
            n_max: o.n_max.unwrap_or(self.n_max),
            prefix_cap: o.prefix_cap.unwrap_or(self.prefix_cap),
            min_prefix: o.min_prefix.unwrap_or(self.min_prefix),
            len_cap: o.len_cap.unwrap_or(self.len_cap),
            ac_cap: o.ac_cap.unwrap_or(self.ac_cap),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (field, v) in [
            ("n_max", self.n_max),
            ("prefix_cap", self.prefix_cap),
            ("len_cap", self.len_cap),
            ("ac_cap", self.ac_cap),
        ] {
            if v == 0 {
                return Err(Error::InvalidArgument(format!("{field} must be positive")));
            }
        }
        Ok(())
    }
}

impl HorizonOverride {
    /// `top` wins wherever it is set.
    pub fn overlay(&self, top: &HorizonOverride) -> HorizonOverride {
        HorizonOverride {
            n_max: top.n_max.or(self.n_max),
            prefix_cap: top.prefix_cap.or(self.prefix_cap),
            min_prefix: top.min_prefix.or(self.min_prefix),
            len_cap: top.len_cap.or(self.len_cap),
            ac_cap: top.ac_cap.or(self.ac_cap),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Horizon {
    /// Prefix length `L` the verdicts were computed on.
    pub length: usize,
    pub n_max: usize,
    pub len_cap: usize,
    pub ac_cap: usize,
    /// `spec` for generated words, `external` for prefix files.
    pub generator: String,
    pub saturation: SaturationStatus,
}

/// Numeric evidence behind the verdicts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    /// `C(n)` for `n <= n_max + 2`.
    pub complexity: Vec<usize>,
    pub first_differences: Vec<i64>,
    pub second_differences: Vec<i64>,
    /// `P(n)` for `n <= n_max + 2`.
    pub palindromic: Vec<usize>,
    pub fac_pal: Vec<FacPalRow>,
    pub bispecial: Vec<BsRow>,
    /// Fewest and most return words among factors of each length.
    pub returns: Vec<ReturnRow>,
    pub gaps: Vec<GapRow>,
    /// `AC(n)` for `1 <= n <= ac_cap`.
    pub abelian: Vec<usize>,
    /// Largest letter-count spread over all window lengths, per letter.
    pub max_spread: BTreeMap<String, u32>,
    /// Palindromic defect of the prefixes of length `n <= n_max`.
    pub prefix_defect: Vec<usize>,
    /// Distinct palindromes in the prefix, `ε` included.
    pub distinct_palindromes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReturnRow {
    pub n: usize,
    pub min: usize,
    pub max: usize,
    /// Some factor had more than the tracked maximum of return words.
    pub overflow: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub word: String,
    pub engine: String,
    pub alphabet: String,
    pub k: usize,
    pub horizon: Horizon,
    pub verdicts: BTreeMap<String, Verdict>,
    pub tables: Tables,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PropertyReport {
    pub fn verdict(&self, key: &str) -> Option<&Verdict> {
        self.verdicts.get(key)
    }

    pub fn holds(&self, key: &str) -> bool {
        self.verdict(key).is_some_and(Verdict::holds)
    }

    pub fn fails(&self, key: &str) -> bool {
        self.verdict(key).is_some_and(Verdict::fails)
    }

    /// Verdicts that a longer prefix might overturn, as `key: reason`.
    pub fn inconclusive(&self) -> Vec<String> {
        self.verdicts
            .iter()
            .filter_map(|(k, v)| match v {
                Verdict::Inconclusive { reason } => Some(format!("{k}: {reason}")),
                _ => None,
            })
            .collect()
    }
}

/// Saturates `spec` and indexes `max(2L, min_prefix)` symbols. Returns the
/// view with notes about the horizon.
pub fn view_for(spec: &WordSpec, cfg: &HorizonConfig) -> Result<(LanguageView, Vec<String>)> {
    cfg.validate()?;
    let wrap = |e: Error| Error::GenerationFailed {
        name: spec.name.clone(),
        source: Box::new(e),
    };
    let sat = saturate(spec, cfg.n_max, cfg.prefix_cap).map_err(wrap)?;
    let mut notes = Vec::new();
    let len = match sat.status.length {
        Some(l) => (2 * l).max(cfg.min_prefix).min(cfg.prefix_cap),
        None => {
            notes.push(format!(
                "no saturation below the prefix cap {}; failures a longer prefix could repair are inconclusive",
                cfg.prefix_cap
            ));
            sat.consumed().max(cfg.min_prefix.min(cfg.prefix_cap))
        }
    };
    let view = sat.into_view(len).map_err(wrap)?;
    Ok((view, notes))
}

/// Indexes an external prefix, judging saturation by halves.
pub fn view_for_prefix(prefix: FinitePrefix, cfg: &HorizonConfig) -> Result<(LanguageView, Vec<String>)> {
    cfg.validate()?;
    let view = LanguageView::build(prefix, cfg.n_max)?;
    let note = "generator unknown: saturation judged by comparing the first half of the prefix with the whole";
    Ok((view, vec![note.into()]))
}

pub fn classify(spec: &WordSpec, cfg: &HorizonConfig) -> Result<PropertyReport> {
    let (view, notes) = view_for(spec, cfg)?;
    let mut report = analyze(&view, cfg);
    report.notes.splice(0..0, notes);
    Ok(report)
}

pub fn classify_prefix(prefix: FinitePrefix, cfg: &HorizonConfig) -> Result<PropertyReport> {
    let (view, notes) = view_for_prefix(prefix, cfg)?;
    let mut report = analyze(&view, cfg);
    report.notes.splice(0..0, notes);
    Ok(report)
}

/// Computes every verdict and table on an indexed prefix.
pub fn analyze(view: &LanguageView, cfg: &HorizonConfig) -> PropertyReport {
    let pal = PalindromeIndex::build(view);
    let p = pal.complexity(view);
    let scan = ReturnScan::new(view, cfg.len_cap.min(view.n_max()));
    let rec = recurrence_diagnostics(view, &scan);
    let balance = BalanceTable::from_view(view, cfg.ac_cap);
    let bv = property_b_checks(view, &balance, None);
    let fac_pal = palindrome::fac_pal_balance(view, &p);
    let richness = pal.richness();
    let (pal_returns, _) = palindrome::palindromic_return_check(view, &scan);

    let mut verdicts = BTreeMap::new();
    let mut put = |k: &str, v: Verdict| {
        verdicts.insert(k.to_string(), v);
    };
    put("C", property_c(view));
    put("LR", property_lr(view));
    put("BO", property_bo(view));
    put("R", property_r(view, &scan));
    put("P", palindrome::property_p(view, &p));
    put("PE", palindrome::property_pe(view));
    put("B_forall", bv.b_forall);
    put("B_exists", bv.b_exists);
    put("AC", bv.ac);
    put("rich", richness.verdict(view));
    put("CuR", view.closed_under_reversal());
    put("UR", rec.uniform);
    put("recurrent", rec.recurrent);
    put("aperiodic", view.aperiodic());
    put("BO_p", palindrome::bilateral_richness_check(view));
    put("pal_returns", pal_returns);
    put("lpp_lps", palindrome::lpp_lps_check(view, cfg.len_cap));
    put("infinite_palindromes", palindrome::infinite_palindromes(view, &p));
    put("bs_palindromic", bs_palindromic(view));
    put("fac_pal_equality", palindrome::fac_pal_equality(view, &fac_pal));
    put("no_weak_bs", no_weak_bs(view));
    put("parity_law", palindrome::parity_law(view));

    let returns = (1..=scan.cap.min(view.n_max()))
        .map(|n| {
            let stats = view.factors(n).iter().map(|&w| scan.stats(w));
            let (min, max, overflow) = stats.fold((usize::MAX, 0, false), |(lo, hi, o), s| {
                (lo.min(s.return_count()), hi.max(s.return_count()), o || s.overflow)
            });
            ReturnRow {
                n,
                min: if min == usize::MAX { 0 } else { min },
                max,
                overflow,
            }
        })
        .collect();
    let alphabet = &view.prefix().alphabet;
    let max_spread = (0..view.k())
        .map(|a| (alphabet.letter(a as u8).to_string(), balance.max_spread(a)))
        .collect();
    let tables = Tables {
        complexity: view.complexity(),
        first_differences: view.first_differences(),
        second_differences: view.second_differences(),
        palindromic: p,
        fac_pal,
        bispecial: bs_rows(view),
        returns,
        gaps: rec.gaps,
        abelian: balance.ac.clone(),
        max_spread,
        prefix_defect: (0..=view.n_max().min(view.len())).map(|i| richness.defect(i)).collect(),
        distinct_palindromes: pal.tree.distinct(),
    };
    let prefix = view.prefix();
    let generator = match &prefix.provenance {
        Provenance::Spec(_) => "spec".to_string(),
        Provenance::External { .. } => "external".to_string(),
    };
    let mut notes = Vec::new();
    if let Some(c) = bv.chain_violation {
        notes.push(format!("balance chain violated: {c}"));
    }
    let missing = prefix.missing_letters();
    if !missing.is_empty() {
        notes.push(format!("letters absent from the prefix: {missing:?}"));
    }
    PropertyReport {
        word: prefix.name.clone(),
        engine: ENGINE_VERSION.to_string(),
        alphabet: alphabet.to_string(),
        k: view.k(),
        horizon: Horizon {
            length: view.len(),
            n_max: view.n_max(),
            len_cap: scan.cap,
            ac_cap: balance.max_n,
            generator,
            saturation: view.saturation().clone(),
        },
        verdicts,
        tables,
        notes,
    }
}
