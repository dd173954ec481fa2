//! Full property report of a word given as a JSON spec file, or of the
//! Tribonacci word.
//!
//! cargo run --release --example classify_word -- [spec.json]

use wordlab::classify::{classify, HorizonConfig};
use wordlab::io::{complexity_csv, to_sorted_json};
use wordlab::WordSpec;

fn main() -> wordlab::Result<()> {
    let spec = match std::env::args().nth(1) {
        Some(p) => WordSpec::from_file(p.as_ref())?,
        None => WordSpec::from_json(
            r#"{"name": "tribonacci", "kind": "substitution", "rules": {"a": "ab", "b": "ac", "c": "a"}, "seed": "a"}"#,
        )?,
    };
    let cfg = HorizonConfig {
        n_max: 40,
        min_prefix: 1 << 16,
        ac_cap: 300,
        ..Default::default()
    };
    let report = classify(&spec, &cfg)?;
    println!("{} on {} symbols", report.word, report.horizon.length);
    for (k, v) in &report.verdicts {
        let why = v.witness().map(|w| w.summary.as_str()).unwrap_or("");
        println!("  {k:<22} {:<14} {why}", v.short());
    }
    for n in &report.notes {
        println!("  note: {n}");
    }
    print!("\n{}", complexity_csv(&report).lines().take(8).collect::<Vec<_>>().join("\n"));
    println!("\n\nreport JSON: {} bytes", to_sorted_json(&report)?.len());
    Ok(())
}
