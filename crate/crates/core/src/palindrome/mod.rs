//! Palindromic complexity, extensions, richness and its characterisations.

mod branches;
mod eertree;

pub use branches::{palindromic_branches, Branch};
pub use eertree::{Eertree, PalId, EVEN_ROOT, ODD_ROOT};

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::factor::{FactorId, LanguageView};
use crate::returns::{occurrences, ReturnScan};
use crate::verdict::{Verdict, Witness};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Palindromic tree of a view's prefix.
pub struct PalindromeIndex {
    pub tree: Eertree,
}

impl PalindromeIndex {
    pub fn build(view: &LanguageView) -> Self {
        PalindromeIndex {
            tree: Eertree::build(view.symbols(), view.k()),
        }
    }

    /// `P(n)` for `n` in `0..=depth`.
    pub fn complexity(&self, view: &LanguageView) -> Vec<usize> {
        self.tree.counts_by_length(view.depth())
    }

    /// Palindromic extensions `awa` of the palindrome `w`.
    pub fn extensions(&self, view: &LanguageView, w: &str) -> Result<Vec<String>> {
        let a = &view.prefix().alphabet;
        let syms = a.encode(w).map_err(|_| Error::UnknownFactor(w.into()))?;
        if !syms.iter().eq(syms.iter().rev()) {
            return Err(Error::NotAPalindrome(w.into()));
        }
        let v = self.tree.find(&syms).ok_or_else(|| Error::UnknownFactor(w.into()))?;
        let v = if syms.is_empty() { EVEN_ROOT } else { v };
        Ok(self
            .tree
            .extension_letters(v)
            .map(|c| {
                let l = a.letter(c);
                format!("{l}{w}{l}")
            })
            .collect())
    }

    pub fn richness(&self) -> RichnessProfile {
        let counts = self.tree.prefix_counts().to_vec();
        let first_defect = counts.iter().enumerate().position(|(i, &c)| c as usize != i + 1);
        RichnessProfile {
            counts,
            first_defect,
        }
    }
}

/// Distinct palindromes per prefix length and the resulting defect.
#[derive(Clone, Debug)]
pub struct RichnessProfile {
    pub counts: Vec<u32>,
    /// Shortest prefix length with positive defect.
    pub first_defect: Option<usize>,
}

impl RichnessProfile {
    pub fn defect(&self, i: usize) -> usize {
        i + 1 - self.counts[i] as usize
    }

    /// A prefix with positive defect is a factor with too few palindromes,
    /// so the failure is definitive.
    pub fn verdict(&self, view: &LanguageView) -> Verdict {
        match self.first_defect {
            Some(i) => {
                let t = view.prefix().alphabet.decode(&view.symbols()[..i]);
                let shown = if t.len() > 40 { format!("{}…", &t[..40]) } else { t.clone() };
                Verdict::fails_at(
                    i,
                    Witness::new(format!("prefix {shown} of length {i} has {} palindromes", self.counts[i]))
                        .factor(t)
                        .count("palindromes", self.counts[i] as i64)
                        .count("defect", self.defect(i) as i64),
                )
            }
            None => view.holds(view.len()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacPalRow {
    pub n: usize,
    /// `P(n) + P(n+1)`.
    pub lhs: usize,
    /// `ΔC(n) + 2`.
    pub rhs: i64,
    pub slack: i64,
}

/// `P(n) + P(n+1)` against `ΔC(n) + 2` for `n <= n_max`.
pub fn fac_pal_balance(view: &LanguageView, p: &[usize]) -> Vec<FacPalRow> {
    let d = view.first_differences();
    (0..=view.n_max())
        .map(|n| {
            let lhs = p[n] + p[n + 1];
            let rhs = d[n] + 2;
            FacPalRow {
                n,
                lhs,
                rhs,
                slack: rhs - lhs as i64,
            }
        })
        .collect()
}

/// Verdict for the equality `P(n) + P(n+1) = ΔC(n) + 2`.
pub fn fac_pal_equality(view: &LanguageView, rows: &[FacPalRow]) -> Verdict {
    match rows.iter().find(|r| r.slack != 0) {
        Some(r) => Verdict::fails_at(
            r.n,
            Witness::new(format!("P({0}) + P({0}+1) = {1} but ΔC({0}) + 2 = {2}", r.n, r.lhs, r.rhs))
                .count("lhs", r.lhs as i64)
                .count("rhs", r.rhs),
        )
        .non_monotone(view.saturated()),
        None => view.holds(view.n_max()),
    }
}

/// `P(n) + P(n+1) = k + 1` for `n <= n_max`.
pub fn property_p(view: &LanguageView, p: &[usize]) -> Verdict {
    let k = view.k();
    for n in 0..=view.n_max() {
        let s = p[n] + p[n + 1];
        if s != k + 1 {
            let w = Witness::new(format!("P({n}) + P({}) = {s}, expected {}", n + 1, k + 1))
                .count("P(n)", p[n] as i64)
                .count("P(n+1)", p[n + 1] as i64);
            let v = Verdict::fails_at(n, w);
            return if s > k + 1 { v } else { v.non_monotone(view.saturated()) };
        }
    }
    view.holds(view.n_max())
}

/// Palindromic factors of length `n` in the view, lexicographically.
fn palindromes(view: &LanguageView, n: usize) -> impl Iterator<Item = FactorId> + '_ {
    view.factors(n).iter().copied().filter(move |&w| view.is_palindrome(w))
}

/// Letters `a` with `awa` a factor.
pub fn pext_mask(view: &LanguageView, w: FactorId) -> u32 {
    view.bext_rows(w)
        .iter()
        .enumerate()
        .fold(0, |m, (a, row)| if row >> a & 1 == 1 { m | 1 << a } else { m })
}

/// Every palindrome of length at most `n_max - 2` has exactly one
/// palindromic extension.
pub fn property_pe(view: &LanguageView) -> Verdict {
    for n in 0..=view.n_max().saturating_sub(2) {
        for w in palindromes(view, n) {
            let m = pext_mask(view, w);
            if m.count_ones() != 1 {
                let t = view.text_of(w);
                let ext: Vec<String> = (0..view.k())
                    .filter(|a| m >> a & 1 == 1)
                    .map(|a| {
                        let l = view.prefix().alphabet.letter(a as Symbol);
                        format!("{l}{t}{l}")
                    })
                    .collect();
                let mut wit = Witness::new(format!(
                    "palindrome '{t}' has {} palindromic extensions",
                    m.count_ones()
                ))
                .factor(t)
                .count("extensions", m.count_ones() as i64);
                wit.factors.extend(ext);
                let v = Verdict::fails_at(n, wit);
                return if m.count_ones() > 1 { v } else { v.non_monotone(view.saturated()) };
            }
        }
    }
    view.holds(view.n_max())
}

/// Palindromes of unbounded length: some palindrome of length `n` or
/// `n + 1` for every `n <= n_max`.
pub fn infinite_palindromes(view: &LanguageView, p: &[usize]) -> Verdict {
    match (0..=view.n_max()).find(|&n| p[n] + p[n + 1] == 0) {
        Some(n) => Verdict::fails_at(
            n,
            Witness::new(format!("no palindrome of length {n} or {}", n + 1)).count("P(n)", 0),
        )
        .non_monotone(view.saturated()),
        None => view.holds(view.n_max()),
    }
}

/// Complete return words of palindromes up to the scan cap are palindromes.
/// Returns the verdicts for complete and for plain return words.
pub fn palindromic_return_check(view: &LanguageView, scan: &ReturnScan) -> (Verdict, Verdict) {
    let cap = scan.cap.min(view.n_max());
    let a = &view.prefix().alphabet;
    let mut complete = None;
    let mut plain = None;
    for n in 1..=cap {
        for w in palindromes(view, n) {
            let ws = view.symbols_of(w);
            for r in scan.returns(view, w) {
                let full: Vec<Symbol> = r.iter().chain(ws).copied().collect();
                if complete.is_none() && !full.iter().eq(full.iter().rev()) {
                    let (t, c) = (view.text_of(w), a.decode(&full));
                    complete = Some(Verdict::fails_at(
                        n,
                        Witness::new(format!("complete return word {c} of palindrome {t} is not a palindrome"))
                            .factor(t)
                            .factor(c),
                    ));
                }
                if plain.is_none() && !r.iter().eq(r.iter().rev()) {
                    let (t, c) = (view.text_of(w), a.decode(r));
                    plain = Some(Verdict::fails_at(
                        n,
                        Witness::new(format!("return word {c} of palindrome {t} is not a palindrome"))
                            .factor(t)
                            .factor(c),
                    ));
                }
            }
            if complete.is_some() && plain.is_some() {
                break;
            }
        }
    }
    (
        complete.unwrap_or_else(|| view.holds(cap)),
        plain.unwrap_or_else(|| view.holds(cap)),
    )
}

/// Occurrences of `w` and its reversal alternate.
pub fn alternation_check(view: &LanguageView, w: &str) -> Result<Verdict> {
    let id = view.require(w)?;
    let syms = view.symbols_of(id).to_vec();
    let rev: Vec<Symbol> = syms.iter().rev().copied().collect();
    if syms == rev {
        return Ok(view.holds(syms.len()));
    }
    let mut merged: Vec<(usize, bool)> = occurrences(view, &syms).into_iter().map(|i| (i, false)).collect();
    merged.extend(occurrences(view, &rev).into_iter().map(|i| (i, true)));
    merged.sort_unstable();
    for p in merged.windows(2) {
        if p[0].1 == p[1].1 {
            let which = if p[0].1 { rev_text(w) } else { w.to_string() };
            return Ok(Verdict::fails_at(
                syms.len(),
                Witness::new(format!(
                    "{which} occurs at {} and {} with no occurrence of its reversal between",
                    p[0].0, p[1].0
                ))
                .factor(which)
                .count("first", p[0].0 as i64)
                .count("second", p[1].0 as i64),
            ));
        }
    }
    Ok(view.holds(syms.len()))
}

fn rev_text(w: &str) -> String {
    w.chars().rev().collect()
}

/// Bispecial factors: non-palindromes ordinary, palindromes with
/// `b(w) = #Pext(w) - 1`.
pub fn bilateral_richness_check(view: &LanguageView) -> Verdict {
    for n in 0..=view.n_max() {
        for &w in view.factors(n) {
            if !view.is_bispecial(w) {
                continue;
            }
            let b = view.bilateral_order(w);
            let t = view.text_of(w);
            let bad = if view.is_palindrome(w) {
                let pe = pext_mask(view, w).count_ones() as i64;
                (b != pe - 1).then(|| {
                    Witness::new(format!("palindromic BS factor '{t}' has b = {b} but {pe} palindromic extensions"))
                        .factor(t.clone())
                        .count("b", b)
                        .count("pext", pe)
                })
            } else {
                (b != 0).then(|| {
                    Witness::new(format!("non-palindromic BS factor '{t}' has b = {b}"))
                        .factor(t.clone())
                        .count("b", b)
                })
            };
            if let Some(wit) = bad {
                return Verdict::fails_at(n, wit).non_monotone(view.saturated());
            }
        }
    }
    view.holds(view.n_max())
}

/// `parity(b(w)) != parity(#Pext(w))` for every palindromic bispecial factor.
pub fn parity_law(view: &LanguageView) -> Verdict {
    for n in 0..=view.n_max() {
        for w in palindromes(view, n) {
            if !view.is_bispecial(w) {
                continue;
            }
            let b = view.bilateral_order(w);
            let pe = pext_mask(view, w).count_ones() as i64;
            if (b - pe).rem_euclid(2) == 0 {
                let t = view.text_of(w);
                return Verdict::fails_at(
                    n,
                    Witness::new(format!("'{t}': b = {b}, #Pext = {pe}"))
                        .factor(t)
                        .count("b", b)
                        .count("pext", pe),
                )
                .non_monotone(view.saturated());
            }
        }
    }
    view.holds(view.n_max())
}

fn longest_palindromic_prefix(w: &[Symbol]) -> usize {
    (0..=w.len())
        .rev()
        .find(|&l| w[..l].iter().eq(w[..l].iter().rev()))
        .unwrap_or(0)
}

fn longest_palindromic_suffix(w: &[Symbol]) -> usize {
    let n = w.len();
    (0..=n)
        .rev()
        .find(|&l| w[n - l..].iter().eq(w[n - l..].iter().rev()))
        .unwrap_or(0)
}

/// No two factors of length at most `cap` share both their longest
/// palindromic prefix and their longest palindromic suffix.
pub fn lpp_lps_check(view: &LanguageView, cap: usize) -> Verdict {
    let cap = cap.min(view.n_max());
    let mut seen: HashMap<(FactorId, FactorId), FactorId> = HashMap::new();
    for n in 1..=cap {
        for &w in view.factors(n) {
            let s = view.symbols_of(w);
            let p = view.find(&s[..longest_palindromic_prefix(s)]).expect("prefix of a factor");
            let q = view
                .find(&s[s.len() - longest_palindromic_suffix(s)..])
                .expect("suffix of a factor");
            if let Some(&other) = seen.get(&(p, q)) {
                let (a, b) = (view.text_of(other), view.text_of(w));
                return Verdict::fails_at(
                    n,
                    Witness::new(format!(
                        "{a} and {b} share longest palindromic prefix {} and suffix {}",
                        view.text_of(p),
                        view.text_of(q)
                    ))
                    .factor(a)
                    .factor(b),
                );
            }
            seen.insert((p, q), w);
        }
    }
    view.holds(cap)
}

/// Every factor of length at most `max_len` that starts with `w`, ends with
/// its reversal and contains neither elsewhere is a palindrome; `|w| <= max_w`.
pub fn prefix_suffix_sampler(view: &LanguageView, max_w: usize, max_len: usize) -> Verdict {
    let max_len = max_len.min(view.depth());
    let count = |v: &[Symbol], x: &[Symbol]| v.windows(x.len()).filter(|s| *s == x).count();
    for n in 1..=max_len {
        for &v in view.factors(n) {
            let s = view.symbols_of(v);
            for m in 1..=max_w.min(n) {
                let w = &s[..m];
                let r: Vec<Symbol> = w.iter().rev().copied().collect();
                if s[n - m..] != r[..] || count(s, w) != 1 + usize::from(w == &r[..] && n > m) {
                    continue;
                }
                if w != &r[..] && count(s, &r) != 1 {
                    continue;
                }
                if !s.iter().eq(s.iter().rev()) {
                    let a = &view.prefix().alphabet;
                    return Verdict::fails_at(
                        n,
                        Witness::new(format!(
                            "{} starts with {} and ends with its reversal only there, yet is not a palindrome",
                            a.decode(s),
                            a.decode(w)
                        ))
                        .factor(a.decode(w))
                        .factor(a.decode(s)),
                    );
                }
            }
        }
    }
    view.holds(max_len)
}
