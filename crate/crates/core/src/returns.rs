//! Occurrences, return words and recurrence diagnostics.

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::factor::{FactorId, LanguageView, ROOT};
use crate::verdict::{Verdict, Witness};
use serde::{Deserialize, Serialize};

/// Return sets larger than this are truncated and flagged.
pub const MAX_RETURNS: usize = 64;

/// All occurrences of `w` in the prefix, ascending.
pub fn occurrences(view: &LanguageView, w: &[Symbol]) -> Vec<usize> {
    let text = view.symbols();
    if w.is_empty() {
        return (0..=text.len()).collect();
    }
    if w.len() > text.len() {
        return Vec::new();
    }
    let start = match view.find(w) {
        Some(id) => view.first_occurrence(id),
        None if w.len() <= view.depth() => return Vec::new(),
        None => 0,
    };
    (start..=text.len() - w.len())
        .filter(|&i| text[i] == w[0] && &text[i..i + w.len()] == w)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReturnProfile {
    pub factor: String,
    pub occurrences: Vec<usize>,
    /// Distinct return words, sorted.
    pub returns: Vec<String>,
    pub complete_returns: Vec<String>,
    pub max_gap: usize,
}

/// Return words of `w`; needs at least two occurrences.
pub fn return_words(view: &LanguageView, w: &str) -> Result<ReturnProfile> {
    let a = &view.prefix().alphabet;
    let syms = a.encode(w).map_err(|_| Error::UnknownFactor(w.into()))?;
    let occ = occurrences(view, &syms);
    if occ.len() < 2 {
        if occ.is_empty() {
            return Err(Error::UnknownFactor(w.into()));
        }
        return Err(Error::TooFewOccurrences {
            factor: w.into(),
            occurrences: occ.len(),
        });
    }
    let text = view.symbols();
    let mut returns: Vec<String> = occ.windows(2).map(|p| a.decode(&text[p[0]..p[1]])).collect();
    returns.sort();
    returns.dedup();
    let complete_returns = returns.iter().map(|r| format!("{r}{w}")).collect();
    let max_gap = occ.windows(2).map(|p| p[1] - p[0]).max().unwrap_or(0);
    Ok(ReturnProfile {
        factor: w.into(),
        occurrences: occ,
        returns,
        complete_returns,
        max_gap,
    })
}

/// Polynomial hashes of all prefixes modulo `2^61 - 1`.
struct PrefixHash {
    h: Vec<u64>,
    pw: Vec<u64>,
}

const MOD: u64 = (1 << 61) - 1;
const BASE: u64 = 0x1f3d_5b79_a2c4_e681 % MOD;

fn mulmod(a: u64, b: u64) -> u64 {
    let p = a as u128 * b as u128;
    let r = (p & MOD as u128) as u64 + (p >> 61) as u64;
    if r >= MOD {
        r - MOD
    } else {
        r
    }
}

impl PrefixHash {
    fn new(text: &[Symbol]) -> Self {
        let mut h = Vec::with_capacity(text.len() + 1);
        let mut pw = Vec::with_capacity(text.len() + 1);
        h.push(0);
        pw.push(1);
        for (i, &c) in text.iter().enumerate() {
            let x = mulmod(h[i], BASE) + c as u64 + 1;
            h.push(if x >= MOD { x - MOD } else { x });
            pw.push(mulmod(pw[i], BASE));
        }
        PrefixHash { h, pw }
    }

    fn get(&self, start: usize, len: usize) -> u64 {
        let a = self.h[start + len];
        let b = mulmod(self.h[start], self.pw[len]);
        if a >= b {
            a - b
        } else {
            a + MOD - b
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ReturnStats {
    pub occurrences: u32,
    pub first: u32,
    pub last: u32,
    pub max_gap: u32,
    /// Largest gap between occurrences that both start in the first half.
    pub max_gap_half: u32,
    /// Distinct returns as `(start, length)` of a representative.
    pub returns: Vec<(u32, u32)>,
    hashes: Vec<u64>,
    /// Distinct returns already seen among occurrences in the first half.
    pub returns_half: u32,
    pub overflow: bool,
}

impl ReturnStats {
    pub fn return_count(&self) -> usize {
        self.returns.len()
    }
}

/// One pass over the prefix gathering occurrence and return statistics for
/// every factor of length `1..=cap`.
pub struct ReturnScan {
    pub cap: usize,
    stats: Vec<ReturnStats>,
}

impl ReturnScan {
    pub fn new(view: &LanguageView, cap: usize) -> Self {
        let cap = cap.min(view.depth());
        let text = view.symbols();
        let trie = view.trie();
        let hash = PrefixHash::new(text);
        let mut stats = vec![ReturnStats::default(); trie.node_count()];
        let half = text.len() / 2;
        for i in 0..text.len() {
            let mut v = ROOT;
            for n in 1..=cap.min(text.len() - i) {
                v = trie.child(v, text[i + n - 1]).expect("factor indexed");
                let s = &mut stats[v as usize];
                let pos = i as u32;
                if s.occurrences == 0 {
                    s.first = pos;
                } else {
                    let gap = pos - s.last;
                    s.max_gap = s.max_gap.max(gap);
                    if i < half {
                        s.max_gap_half = s.max_gap_half.max(gap);
                    }
                    if !s.overflow {
                        let start = s.last as usize;
                        let h = hash.get(start, gap as usize);
                        let known = s.returns.iter().zip(&s.hashes).any(|(&(rs, rl), &rh)| {
                            rl == gap
                                && rh == h
                                && text[rs as usize..(rs + rl) as usize] == text[start..start + gap as usize]
                        });
                        if !known {
                            if s.returns.len() == MAX_RETURNS {
                                s.overflow = true;
                            } else {
                                s.returns.push((s.last, gap));
                                s.hashes.push(h);
                                if i < half {
                                    s.returns_half += 1;
                                }
                            }
                        }
                    }
                }
                s.last = pos;
                s.occurrences += 1;
            }
        }
        ReturnScan { cap, stats }
    }

    pub fn stats(&self, w: FactorId) -> &ReturnStats {
        &self.stats[w as usize]
    }

    /// Return words of `w` as symbol slices of the prefix.
    pub fn returns<'a>(&self, view: &'a LanguageView, w: FactorId) -> Vec<&'a [Symbol]> {
        self.stats(w)
            .returns
            .iter()
            .map(|&(s, l)| &view.symbols()[s as usize..(s + l) as usize])
            .collect()
    }
}

/// Every factor of length `1..=len_cap` has exactly `k` return words.
pub fn property_r(view: &LanguageView, scan: &ReturnScan) -> Verdict {
    let k = view.k();
    let cap = scan.cap.min(view.n_max());
    for n in 1..=cap {
        for &w in view.factors(n) {
            let s = scan.stats(w);
            let count = s.return_count();
            if count == k && !s.overflow {
                continue;
            }
            let t = view.text_of(w);
            let shown = if s.overflow {
                format!("more than {MAX_RETURNS}")
            } else {
                count.to_string()
            };
            let witness = Witness::new(format!("{t} has {shown} return words, expected {k}"))
                .factor(t)
                .count("returns", count as i64)
                .count("occurrences", s.occurrences as i64);
            if count > k || s.overflow {
                return Verdict::fails_at(n, witness);
            }
            let stable = s.returns_half as usize == count && s.occurrences >= 2;
            return Verdict::fails_at(n, witness).non_monotone(view.saturated() && stable);
        }
    }
    view.holds(cap)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRow {
    pub n: usize,
    pub max_gap_half: usize,
    pub max_gap: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Recurrence {
    pub recurrent: Verdict,
    pub uniform: Verdict,
    pub gaps: Vec<GapRow>,
}

/// Recurrence from occurrence counts up to `n_max`; uniform recurrence from
/// whether the largest gaps up to the scan cap were already reached in the
/// first half of the prefix.
pub fn recurrence_diagnostics(view: &LanguageView, scan: &ReturnScan) -> Recurrence {
    let half = view.len() / 2;
    let mut recurrent = None;
    'outer: for n in 1..=view.n_max() {
        for &w in view.factors(n) {
            if view.occurrence_count(w) == 1 && view.first_occurrence(w) < half {
                let t = view.text_of(w);
                recurrent = Some(
                    Verdict::fails_at(
                        n,
                        Witness::new(format!("{t} occurs only once, at {}", view.first_occurrence(w)))
                            .factor(t)
                            .count("occurrences", 1),
                    )
                    .non_monotone(view.saturated()),
                );
                break 'outer;
            }
        }
    }
    let recurrent = recurrent.unwrap_or_else(|| view.holds(view.n_max()));
    let cap = scan.cap.min(view.n_max());
    let gaps: Vec<GapRow> = (1..=cap)
        .map(|n| {
            let (h, f) = view.factors(n).iter().fold((0, 0), |(h, f), &w| {
                let s = scan.stats(w);
                (h.max(s.max_gap_half as usize), f.max(s.max_gap as usize))
            });
            GapRow {
                n,
                max_gap_half: h,
                max_gap: f,
            }
        })
        .collect();
    let uniform = if recurrent.fails() {
        recurrent.clone()
    } else if let Some(g) = gaps.iter().find(|g| g.max_gap != g.max_gap_half) {
        Verdict::inconclusive(format!(
            "largest gap between occurrences of length-{} factors grew from {} to {} over the second half",
            g.n, g.max_gap_half, g.max_gap
        ))
    } else if recurrent.holds() {
        view.holds(cap)
    } else {
        recurrent.clone()
    };
    Recurrence {
        recurrent,
        uniform,
        gaps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{FinitePrefix, PeriodicSpec, Source, SubstitutionSpec, WordSpec};

    fn view(spec: Source, len: usize, n_max: usize) -> LanguageView {
        LanguageView::build(WordSpec::new("t", spec).generate(len).unwrap(), n_max).unwrap()
    }

    fn sub(rules: &[(char, &str)], len: usize, n_max: usize) -> LanguageView {
        view(Source::Substitution(SubstitutionSpec::new(rules, 'a')), len, n_max)
    }

    #[test]
    fn occurrence_lists() {
        let v = LanguageView::build_unguarded(FinitePrefix::from_text("t", "abaab").unwrap(), 2);
        assert_eq!(occurrences(&v, &[0, 1]), vec![0, 3]);
        let v = view(Source::Periodic(PeriodicSpec::eventually("a", "b")), 100, 5);
        assert_eq!(occurrences(&v, &[0]), vec![0]);
    }

    #[test]
    fn chacon_returns_of_bc() {
        let v = sub(&[('a', "ab"), ('b', "cab"), ('c', "ccab")], 100_000, 20);
        let r = return_words(&v, "bc").unwrap();
        assert_eq!(r.returns, ["bca", "bcaba", "bcca", "bccaba"]);
        let scan = ReturnScan::new(&v, 20);
        match property_r(&v, &scan) {
            Verdict::FailsAt { n, witness } => {
                assert_eq!(n, 2);
                assert_eq!(witness.factors, ["bc"]);
                assert_eq!(witness.counts["returns"], 4);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lrlr_returns_of_c() {
        let spec = Source::Morphic(crate::source::MorphicSpec::new(
            WordSpec::new("f", Source::Substitution(SubstitutionSpec::new(&[('A', "AB"), ('B', "A")], 'A'))),
            &[('A', "a"), ('B', "bc")],
        ));
        let v = view(spec, 50_000, 10);
        assert_eq!(return_words(&v, "c").unwrap().returns, ["caab", "cab"]);
    }

    #[test]
    fn unary_returns() {
        let v = view(Source::Periodic(PeriodicSpec::new("a")), 100, 5);
        assert_eq!(return_words(&v, "aa").unwrap().returns, ["a"]);
        let v = view(Source::Periodic(PeriodicSpec::eventually("a", "b")), 100, 5);
        assert!(matches!(
            return_words(&v, "a"),
            Err(Error::TooFewOccurrences { occurrences: 1, .. })
        ));
        assert!(matches!(return_words(&v, "ba"), Err(Error::UnknownFactor(_))));
    }

    #[test]
    fn scan_agrees_with_direct_returns() {
        let v = sub(&[('a', "aab"), ('b', "ac"), ('c', "a")], 20_000, 12);
        let scan = ReturnScan::new(&v, 12);
        for n in 1..=12 {
            for &w in v.factors(n) {
                let direct = return_words(&v, &v.text_of(w)).unwrap();
                let mut via: Vec<String> = scan
                    .returns(&v, w)
                    .iter()
                    .map(|r| v.prefix().alphabet.decode(r))
                    .collect();
                via.sort();
                assert_eq!(via, direct.returns);
                assert_eq!(scan.stats(w).occurrences as usize, direct.occurrences.len());
                assert_eq!(scan.stats(w).max_gap as usize, direct.max_gap);
            }
        }
        assert!(property_r(&v, &scan).holds());
    }

    #[test]
    fn recurrence() {
        let v = view(Source::Periodic(PeriodicSpec::eventually("a", "b")), 1000, 5);
        let r = recurrence_diagnostics(&v, &ReturnScan::new(&v, 5));
        assert_eq!(r.recurrent.witness().unwrap().factors, ["a"]);
        let v = view(Source::Periodic(PeriodicSpec::new("abcba")), 1000, 10);
        let r = recurrence_diagnostics(&v, &ReturnScan::new(&v, 10));
        assert!(r.recurrent.holds() && r.uniform.holds());
        assert!(r.gaps[0].max_gap <= 5);
    }
}
