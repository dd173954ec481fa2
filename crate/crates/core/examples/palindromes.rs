//! Palindromic complexity, richness and palindromic branches.
//!
//! cargo run --example palindromes

use wordlab::palindrome::{fac_pal_balance, palindromic_branches, PalindromeIndex};
use wordlab::{FinitePrefix, LanguageView, WordSpec};

fn main() -> wordlab::Result<()> {
    let fib = WordSpec::from_json(r#"{"name": "fibonacci", "kind": "substitution", "rules": {"a": "ab", "b": "a"}, "seed": "a"}"#)?;
    let view = LanguageView::build(fib.generate(1 << 16)?, 40)?;
    let index = PalindromeIndex::build(&view);
    let p = index.complexity(&view);
    println!("Fibonacci P(n), n <= 20: {:?}", &p[..=20]);
    println!("palindromic extensions of aba: {:?}", index.extensions(&view, "aba")?);
    let slack: Vec<i64> = fac_pal_balance(&view, &p).iter().map(|r| r.slack).take(20).collect();
    println!("P(n) + P(n+1) - dC(n) - 2: {slack:?}");
    println!("branches at depth 15:");
    for b in palindromic_branches(&view, &index, 15)? {
        println!("  {}", b.line());
    }

    // A prefix with too few palindromes.
    for text in ["caccbccca", "abcbaabcbaabcba"] {
        let w = FinitePrefix::from_text("w", text)?;
        let idx = PalindromeIndex::build(&LanguageView::build_unguarded(w, 1));
        let rich = idx.richness();
        println!(
            "{text}: {} distinct palindromes counting the empty word, defect {}",
            idx.tree.distinct(),
            rich.defect(text.len())
        );
    }
    Ok(())
}
