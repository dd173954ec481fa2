//! Codings of interval exchange transformations.
//!
//! cargo run --example iet_coding

use wordlab::classify::{classify, HorizonConfig};
use wordlab::source::{IetSpec, Source};
use wordlab::WordSpec;

fn main() -> wordlab::Result<()> {
    // Two intervals of golden-ratio lengths give a Sturmian word. Quadratic
    // surds (p + q sqrt d) / r are compared exactly.
    let sturmian = WordSpec::from_json(
        r#"{"name": "golden_2iet", "kind": "iet",
            "alphas": [{"p": 3, "q": -1, "d": 5, "r": 2}, {"p": -1, "q": 1, "d": 5, "r": 2}],
            "start": "1/2"}"#,
    )?;
    println!("{}", sturmian.generate(60)?.text());

    // Three intervals with the symmetric permutation (3 2 1), decimal lengths.
    let three = WordSpec::new(
        "iet3",
        Source::Iet(IetSpec::new(&["0.2360679774997897", "0.3819660112501051", "0.3819660112501052"], None, "0.1")),
    );
    println!("{}", three.generate(60)?.text());

    let cfg = HorizonConfig {
        n_max: 30,
        min_prefix: 1 << 14,
        ac_cap: 200,
        ..Default::default()
    };
    for spec in [&sturmian, &three] {
        let r = classify(spec, &cfg)?;
        let c: Vec<String> = r.tables.complexity[..8].iter().map(|c| c.to_string()).collect();
        println!(
            "{}: C = {} ...; C {}, CuR {}, R {}",
            r.word,
            c.join(" "),
            r.verdicts["C"].short(),
            r.verdicts["CuR"].short(),
            r.verdicts["R"].short()
        );
    }
    Ok(())
}
