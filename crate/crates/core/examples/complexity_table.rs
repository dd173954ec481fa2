//! Factor complexity, its differences and the bispecial factors behind them.
//!
//! cargo run --example complexity_table

use wordlab::classify::bs_rows;
use wordlab::factor::BsKind;
use wordlab::source::{Source, SubstitutionSpec};
use wordlab::{LanguageView, WordSpec};

fn main() -> wordlab::Result<()> {
    let spec = WordSpec::new(
        "chacon_recoding",
        Source::Substitution(SubstitutionSpec::new(&[('a', "ab"), ('b', "cab"), ('c', "ccab")], 'a')),
    );
    let view = LanguageView::build(spec.generate(1 << 16)?, 30)?;
    let c = view.complexity();
    let d1 = view.first_differences();
    let d2 = view.second_differences();
    println!(" n    C   dC  d2C  sum b(w)  strong weak");
    for row in bs_rows(&view).iter().take(16) {
        let n = row.n;
        println!(
            "{n:>2} {:>4} {:>4} {:>4} {:>9} {:>7} {:>4}",
            c[n], d1[n], d2[n], row.b_sum, row.strong, row.weak
        );
    }

    println!("\nbispecial factors up to length 12:");
    for n in 0..=12 {
        for &w in &view.specials(n).bs {
            let b = view.bilateral_order(w);
            if BsKind::of(b) != BsKind::Ordinary {
                println!("  {:<14} b = {b:>2}  {:?}", view.text_of(w), BsKind::of(b));
            }
        }
    }
    let p = view.extensions("abc")?;
    println!("\nextensions of {}: left {:?}, right {:?}, both {:?}", p.factor, p.lext, p.rext, p.bext);
    Ok(())
}
