//! Rauzy graphs as Graphviz DOT.
//!
//! cargo run --example rauzy_dot > tribonacci.dot && dot -Tsvg tribonacci.dot

use wordlab::factor::RauzyGraph;
use wordlab::source::{Source, SubstitutionSpec};
use wordlab::{LanguageView, WordSpec};

fn main() -> wordlab::Result<()> {
    let spec = WordSpec::new(
        "tribonacci",
        Source::Substitution(SubstitutionSpec::new(&[('a', "ab"), ('b', "ac"), ('c', "a")], 'a')),
    );
    let view = LanguageView::build(spec.generate(1 << 14)?, 8)?;
    for n in 1..=8 {
        let g = RauzyGraph::build(&view, n);
        eprintln!(
            "n = {n}: {} vertices, {} edges, strongly connected: {}",
            g.vertex_count(),
            g.edge_count(),
            g.strongly_connected()
        );
    }
    print!("{}", RauzyGraph::build(&view, 4).to_dot(&view, "tribonacci"));
    Ok(())
}
