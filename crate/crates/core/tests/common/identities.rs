//! Counting identities that hold on every indexed prefix.

use wordlab::palindrome::{pext_mask, PalindromeIndex};
use wordlab::LanguageView;

/// `C(n+2) - 2C(n+1) + C(n)` equals the sum of bilateral orders over
/// factors of length `n`, and the Rauzy graph of order `n` has `C(n+1)`
/// edges.
pub fn check_counts(view: &LanguageView, label: &str) {
    for (n, &d2) in view.second_differences().iter().enumerate().take(view.n_max()) {
        let sum: i64 = view.factors(n).iter().map(|&w| view.bilateral_order(w)).sum();
        assert_eq!(d2, sum, "{label}: second difference at {n}");
        let g = view.rauzy_graph(n);
        assert_eq!(g.vertex_count(), view.c(n), "{label}: vertices at {n}");
        assert_eq!(g.edge_count(), view.c(n + 1), "{label}: edges at {n}");
    }
}

pub fn check_palindrome_bound(view: &LanguageView, label: &str) {
    let index = PalindromeIndex::build(view);
    for (i, &c) in index.tree.prefix_counts().iter().enumerate() {
        assert!(c as usize <= i + 1, "{label}: {c} palindromes in a prefix of length {i}");
    }
}

/// On languages closed under reversal, a palindromic bispecial factor has
/// `b(w)` and `#Pext(w)` of different parity. Checked where closure is
/// known for factors two letters longer than `w`.
pub fn check_parity(view: &LanguageView, label: &str) -> usize {
    let closed_to = match view.reversal_gap(view.n_max()) {
        Some(w) => view.len_of(w) - 1,
        None => view.n_max(),
    };
    let mut checked = 0;
    for n in (0..=view.n_max()).take_while(|n| n + 2 <= closed_to) {
        for &w in view.factors(n) {
            if !view.is_palindrome(w) || !view.is_bispecial(w) {
                continue;
            }
            let b = view.bilateral_order(w);
            let pe = i64::from(pext_mask(view, w).count_ones());
            assert_ne!(b.rem_euclid(2), pe % 2, "{label}: '{}' has b = {b}, #Pext = {pe}", view.text_of(w));
            checked += 1;
        }
    }
    checked
}
