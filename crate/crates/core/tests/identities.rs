//! Counting identities on fixtures and random words.

mod common;

use common::identities::{check_counts, check_palindrome_bound, check_parity};
use proptest::prelude::*;
use wordlab::classify::HorizonConfig;
use wordlab::{FinitePrefix, LanguageView};

#[test]
fn identities_on_fixtures() {
    let base = HorizonConfig::default();
    let mut parity_cases = 0;
    for f in common::fixtures() {
        let (view, _) = f.view(&base).unwrap();
        check_counts(&view, &f.label);
        check_palindrome_bound(&view, &f.label);
        parity_cases += check_parity(&view, &f.label);
    }
    assert!(parity_cases > 50, "only {parity_cases} parity cases");
}

fn view_of(text: &str, n_max: usize) -> LanguageView {
    LanguageView::build_unguarded(FinitePrefix::from_text("w", text).unwrap(), n_max)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, ..ProptestConfig::default() })]

    #[test]
    fn identities_on_random_words(text in "[a-d]{1,800}", n_max in 1usize..12) {
        let view = view_of(&text, n_max);
        check_counts(&view, &text);
        check_palindrome_bound(&view, &text);
    }

    /// Words built from a palindromic skeleton so that reversal closure and
    /// bispecial palindromes are common.
    #[test]
    fn parity_on_reversal_closed_words(half in "[a-c]{1,40}", reps in 1usize..30, n_max in 2usize..10) {
        let rev: String = half.chars().rev().collect();
        let text = format!("{half}{rev}").repeat(reps);
        let view = view_of(&text, n_max);
        check_parity(&view, &text);
    }
}
