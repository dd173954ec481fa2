use super::{check_guard, FactorTrie, LanguageView};
use crate::error::{Error, Result};
use crate::source::{FinitePrefix, Generator, WordSpec};
use serde::{Deserialize, Serialize};

/// Whether factor counts up to the indexed depth had stopped changing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationStatus {
    pub saturated: bool,
    /// Prefix length `L` whose counts equal those at `2L`.
    pub length: Option<usize>,
    /// Largest `n` with `C(0..=n)` unchanged in the last comparison.
    pub stable_upto: Option<usize>,
    pub note: String,
}

impl SaturationStatus {
    pub fn unchecked() -> Self {
        SaturationStatus {
            saturated: false,
            length: None,
            stable_upto: None,
            note: "saturation not checked".into(),
        }
    }

    fn compare(before: &[usize], after: &[usize], length: usize, note: String) -> Self {
        let stable = before.iter().zip(after).take_while(|(a, b)| a == b).count();
        SaturationStatus {
            saturated: stable == after.len(),
            length: (stable == after.len()).then_some(length),
            stable_upto: stable.checked_sub(1),
            note,
        }
    }
}

/// Builds a view of `prefix`, counting it saturated when its first half
/// already has every factor of the indexed lengths.
pub(crate) fn build_halving(prefix: FinitePrefix, n_max: usize) -> Result<LanguageView> {
    check_guard(n_max, prefix.len())?;
    let mut trie = FactorTrie::new(prefix.k(), n_max + 2);
    let half = prefix.len() / 2;
    trie.extend(&prefix.symbols[..half]);
    let before = trie.counts().to_vec();
    trie.extend(&prefix.symbols[half..]);
    let status = SaturationStatus::compare(
        &before,
        trie.counts(),
        half,
        format!("first half ({half}) against the whole prefix ({})", prefix.len()),
    );
    Ok(LanguageView::from_trie(prefix, trie, n_max, status))
}

/// Result of the doubling schedule, ready to be deepened into a view.
pub struct Saturation {
    pub status: SaturationStatus,
    pub cap: usize,
    spec: WordSpec,
    generator: Box<dyn Generator>,
    trie: FactorTrie,
    n_max: usize,
}

impl Saturation {
    /// Errors with `NoSaturation` when the cap was hit.
    pub fn check(&self) -> Result<usize> {
        self.status.length.ok_or(Error::NoSaturation {
            cap: self.cap,
            stable_upto: self.status.stable_upto,
        })
    }

    /// Symbols consumed so far.
    pub fn consumed(&self) -> usize {
        self.trie.text_len()
    }

    /// Extends to `len` symbols (never shortening) and indexes the result.
    pub fn into_view(mut self, len: usize) -> Result<LanguageView> {
        let len = len.max(self.trie.text_len());
        self.generator.extend_to(len)?;
        let have = self.trie.text_len();
        self.trie.extend(&self.generator.symbols()[have..len]);
        let prefix = FinitePrefix::from_generator(&self.spec, self.generator.as_ref(), len);
        check_guard(self.n_max, prefix.len())?;
        Ok(LanguageView::from_trie(prefix, self.trie, self.n_max, self.status))
    }
}

/// Doubles `L` from `max(64, 4(n_max+2))` until `C(n)`, `n <= n_max + 2`,
/// agrees at `L` and `2L`, or `2L` would pass `cap`.
pub fn saturate(spec: &WordSpec, n_max: usize, cap: usize) -> Result<Saturation> {
    let mut generator = spec.generator()?;
    let depth = n_max + 2;
    let k = generator.alphabet().len();
    let mut trie = FactorTrie::new(k, depth);
    let mut l = (4 * depth).max(64).next_power_of_two();
    let mut status = None;
    let mut last = None;
    while 2 * l <= cap {
        generator.extend_to(2 * l)?;
        let have = trie.text_len();
        trie.extend(&generator.symbols()[have..l]);
        let before = trie.counts().to_vec();
        trie.extend(&generator.symbols()[l..2 * l]);
        let s = SaturationStatus::compare(&before, trie.counts(), l, format!("C stable from {l} to {}", 2 * l));
        if s.saturated {
            status = Some(s);
            break;
        }
        last = Some(s);
        l *= 2;
    }
    let status = status.unwrap_or_else(|| {
        let stable = last.and_then(|s| s.stable_upto);
        SaturationStatus {
            saturated: false,
            length: None,
            stable_upto: stable,
            note: format!("no stabilisation below the cap {cap}"),
        }
    });
    Ok(Saturation {
        status,
        cap,
        spec: spec.clone(),
        generator,
        trie,
        n_max,
    })
}
