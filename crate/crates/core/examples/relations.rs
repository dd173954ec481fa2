//! Implications between properties, checked on the fixture corpus, and the
//! table of examples.
//!
//! cargo run --release --example relations -- [corpus dir]

use std::collections::BTreeMap;
use std::path::PathBuf;
use wordlab::classify::relations::verify_relations;
use wordlab::classify::table::reproduce_table;
use wordlab::classify::HorizonConfig;
use wordlab::io::{classify_corpus, load_corpus};

fn main() -> wordlab::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")));
    let corpus = load_corpus(&dir)?;
    for n in &corpus.notices {
        eprintln!("{n}");
    }
    let results = classify_corpus(&corpus.fixtures, &HorizonConfig::default(), None, 0)?;
    let mut reports = BTreeMap::new();
    for (label, r) in results {
        reports.insert(label, r?);
    }
    let m = verify_relations(&reports)?;
    print!("{}", m.summary());
    println!();
    print!("{}", reproduce_table(&reports).render());
    Ok(())
}
