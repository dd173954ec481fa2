//! Prefixes of substitution fixed points, morphic images, recursive and
//! periodic words.
//!
//! cargo run --example fixed_point

use wordlab::source::{MorphicSpec, PeriodicSpec, RecursiveSpec, Source, SubstitutionSpec};
use wordlab::WordSpec;

fn main() -> wordlab::Result<()> {
    let fib = WordSpec::new(
        "fibonacci",
        Source::Substitution(SubstitutionSpec::new(&[('a', "ab"), ('b', "a")], 'a')),
    );
    let specs = [
        fib.clone(),
        WordSpec::new(
            "tribonacci",
            Source::Substitution(SubstitutionSpec::new(&[('a', "ab"), ('b', "ac"), ('c', "a")], 'a')),
        ),
        WordSpec::new(
            "chacon_recoding",
            Source::Substitution(SubstitutionSpec::new(&[('a', "ab"), ('b', "cab"), ('c', "ccab")], 'a')),
        ),
        WordSpec::new(
            "fibonacci_b_to_bc",
            Source::Morphic(MorphicSpec::new(fib, &[('a', "a"), ('b', "bc")])),
        ),
        WordSpec::new("finite_pals", Source::Recursive(RecursiveSpec::new("ab", "u ab reverse(u)"))),
        WordSpec::new("abcba", Source::Periodic(PeriodicSpec::new("abcba"))),
    ];
    for spec in &specs {
        let p = spec.generate(40)?;
        println!("{:<18} {}", spec.name, p.text());
    }

    // Specs are plain JSON.
    let json = r#"{"name": "thue_morse", "kind": "substitution", "rules": {"a": "ab", "b": "ba"}, "seed": "a"}"#;
    let tm = WordSpec::from_json(json)?;
    println!("{:<18} {}", tm.name, tm.generate(40)?.text());
    println!("\n{}", serde_json::to_string(&specs[0]).expect("serializable"));
    Ok(())
}
