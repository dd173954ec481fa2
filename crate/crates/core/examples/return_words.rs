//! Return words and recurrence.
//!
//! cargo run --example return_words

use wordlab::returns::{property_r, return_words, ReturnScan};
use wordlab::{LanguageView, WordSpec};

fn main() -> wordlab::Result<()> {
    for json in [
        r#"{"name": "tribonacci", "kind": "substitution", "rules": {"a": "ab", "b": "ac", "c": "a"}, "seed": "a"}"#,
        r#"{"name": "chacon_recoding", "kind": "substitution", "rules": {"a": "ab", "b": "cab", "c": "ccab"}, "seed": "a"}"#,
    ] {
        let spec = WordSpec::from_json(json)?;
        let view = LanguageView::build(spec.generate(1 << 16)?, 25)?;
        println!("{}", spec.name);
        for w in ["a", "bc", "ab", "aba"] {
            match return_words(&view, w) {
                Ok(r) => println!("  {w:<4} returns {:?} (largest gap {})", r.returns, r.max_gap),
                Err(e) => println!("  {w:<4} {e}"),
            }
        }
        let scan = ReturnScan::new(&view, 25);
        println!("  every factor up to length 25 has k return words: {}", property_r(&view, &scan).short());
    }
    Ok(())
}
