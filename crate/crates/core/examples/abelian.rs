//! Letter balance and abelian complexity.
//!
//! cargo run --release --example abelian

use wordlab::abelian::BalanceTable;
use wordlab::WordSpec;

fn main() -> wordlab::Result<()> {
    for json in [
        r#"{"name": "tribonacci", "kind": "substitution", "rules": {"a": "ab", "b": "ac", "c": "a"}, "seed": "a"}"#,
        r#"{"name": "beta_coding", "kind": "substitution", "rules": {"a": "aab", "b": "c", "c": "ab"}, "seed": "a"}"#,
    ] {
        let spec = WordSpec::from_json(json)?;
        let p = spec.generate(1 << 17)?;
        let t = BalanceTable::compute(&p.symbols, p.k(), 500);
        let ac: Vec<usize> = (1..=20).map(|n| t.ac(n)).collect();
        println!("{}: AC(1..=20) = {ac:?}", spec.name);
        for a in 0..t.k {
            let l = p.alphabet.letter(a as u8);
            print!("  spread of {l}: at most {}", t.max_spread(a));
            if let Some(n) = t.first_excess(a, 2) {
                let (lo, hi) = t.extreme_windows(n, a);
                print!(", exceeds 2 at n = {n} (windows at {lo} and {hi})");
            }
            println!();
        }
    }
    Ok(())
}
