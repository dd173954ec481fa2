//! Factor-level property checks: C, LR, BO and bispecial summaries.

use crate::factor::{BsKind, LanguageView};
use crate::verdict::{Verdict, Witness};
use serde::{Deserialize, Serialize};

/// `C(n) = (k-1)n + 1` for `n <= n_max`.
pub fn property_c(view: &LanguageView) -> Verdict {
    let k = view.k();
    for n in 0..=view.n_max() {
        let want = (k - 1) * n + 1;
        let c = view.c(n);
        if c != want {
            let w = Witness::new(format!("C({n}) = {c}, expected {want}"))
                .count("C", c as i64)
                .count("expected", want as i64);
            let v = Verdict::fails_at(n, w);
            return if c > want { v } else { v.non_monotone(view.saturated()) };
        }
    }
    view.holds(view.n_max())
}

/// Exactly one left special and one right special factor of each length
/// `1..=n_max`.
pub fn property_lr(view: &LanguageView) -> Verdict {
    for n in 1..=view.n_max() {
        let s = view.specials(n);
        if s.ls.len() == 1 && s.rs.len() == 1 {
            continue;
        }
        let mut w = Witness::new(format!(
            "{} left special and {} right special factors of length {n}",
            s.ls.len(),
            s.rs.len()
        ))
        .count("LS", s.ls.len() as i64)
        .count("RS", s.rs.len() as i64);
        for &f in s.ls.iter().chain(&s.rs).take(6) {
            w = w.factor(view.text_of(f));
        }
        let v = Verdict::fails_at(n, w);
        return if s.ls.len() > 1 || s.rs.len() > 1 { v } else { v.non_monotone(view.saturated()) };
    }
    view.holds(view.n_max())
}

fn first_bs(view: &LanguageView, bad: impl Fn(i64) -> bool) -> Option<(usize, u32, i64)> {
    (0..=view.n_max()).find_map(|n| {
        view.factors(n)
            .iter()
            .filter(|&&w| view.is_bispecial(w))
            .map(|&w| (n, w, view.bilateral_order(w)))
            .find(|&(_, _, b)| bad(b))
    })
}

fn bs_witness(view: &LanguageView, w: u32, b: i64) -> Witness {
    let t = view.text_of(w);
    let kind = match BsKind::of(b) {
        BsKind::Strong => "strong",
        BsKind::Weak => "weak",
        BsKind::Ordinary => "ordinary",
    };
    Witness::new(format!("bispecial '{t}' is {kind} with b = {b}")).factor(t).count("b", b)
}

/// Every bispecial factor of length at most `n_max` is ordinary.
pub fn property_bo(view: &LanguageView) -> Verdict {
    match first_bs(view, |b| b != 0) {
        Some((n, w, b)) => Verdict::fails_at(n, bs_witness(view, w, b)).non_monotone(view.saturated()),
        None => view.holds(view.n_max()),
    }
}

/// No bispecial factor of length at most `n_max` is weak.
pub fn no_weak_bs(view: &LanguageView) -> Verdict {
    match first_bs(view, |b| b < 0) {
        Some((n, w, b)) => Verdict::fails_at(n, bs_witness(view, w, b)).non_monotone(view.saturated()),
        None => view.holds(view.n_max()),
    }
}

/// Every bispecial factor of length at most `n_max` is a palindrome.
/// A non-palindromic bispecial factor stays bispecial in longer prefixes.
pub fn bs_palindromic(view: &LanguageView) -> Verdict {
    for n in 0..=view.n_max() {
        for &w in view.factors(n) {
            if view.is_bispecial(w) && !view.is_palindrome(w) {
                let t = view.text_of(w);
                let b = view.bilateral_order(w);
                return Verdict::fails_at(
                    n,
                    Witness::new(format!("'{t}' is bispecial (b = {b}) but not a palindrome"))
                        .factor(t)
                        .count("b", b),
                );
            }
        }
    }
    view.holds(view.n_max())
}

/// Bispecial factors of one length by sign of the bilateral order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BsRow {
    pub n: usize,
    pub strong: usize,
    pub weak: usize,
    pub ordinary: usize,
    pub palindromic: usize,
    /// `Σ b(w)` over the bispecial factors, equal to `Δ²C(n)`.
    pub b_sum: i64,
}

pub fn bs_rows(view: &LanguageView) -> Vec<BsRow> {
    (0..=view.n_max())
        .map(|n| {
            let mut row = BsRow {
                n,
                ..Default::default()
            };
            for &w in view.factors(n) {
                if !view.is_bispecial(w) {
                    continue;
                }
                let b = view.bilateral_order(w);
                row.b_sum += b;
                match BsKind::of(b) {
                    BsKind::Strong => row.strong += 1,
                    BsKind::Weak => row.weak += 1,
                    BsKind::Ordinary => row.ordinary += 1,
                }
                if view.is_palindrome(w) {
                    row.palindromic += 1;
                }
            }
            row
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{FinitePrefix, Source, SubstitutionSpec, WordSpec};

    fn sub(rules: &[(char, &str)], len: usize, n_max: usize) -> LanguageView {
        let p = WordSpec::new("t", Source::Substitution(SubstitutionSpec::new(rules, 'a')))
            .generate(len)
            .unwrap();
        LanguageView::build(p, n_max).unwrap()
    }

    #[test]
    fn fibonacci_is_c_lr_bo() {
        let v = sub(&[('a', "ab"), ('b', "a")], 100_000, 100);
        assert!(property_c(&v).holds());
        assert!(property_lr(&v).holds());
        assert!(property_bo(&v).holds());
        assert!(bs_palindromic(&v).holds());
    }

    #[test]
    fn chacon_recoding_is_c_not_bo() {
        let v = sub(&[('a', "ab"), ('b', "cab"), ('c', "ccab")], 100_000, 60);
        assert!(property_c(&v).holds());
        assert!(property_bo(&v).fails());
        assert!(no_weak_bs(&v).fails());
        let rows = bs_rows(&v);
        assert!(rows.iter().any(|r| r.strong > 0));
        assert!(rows.iter().any(|r| r.weak > 0));
    }

    #[test]
    fn bs_rows_sum_to_second_difference() {
        let v = sub(&[('a', "aba"), ('b', "cac"), ('c', "aca")], 50_000, 40);
        let d2 = v.second_differences();
        for r in bs_rows(&v) {
            assert_eq!(r.b_sum, d2[r.n], "n = {}", r.n);
        }
    }

    #[test]
    fn lr_fails_with_two_left_specials() {
        let v = LanguageView::build_unguarded(FinitePrefix::from_text("t", "aabbaabbcc").unwrap(), 2);
        assert!(property_lr(&v).fails());
    }
}
