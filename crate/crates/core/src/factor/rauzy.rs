use super::{FactorId, LanguageView};
use petgraph::algo::kosaraju_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use std::collections::HashMap;
use std::fmt::Write;

/// Vertices are the factors of length `n`, edges those of length `n + 1`.
pub struct RauzyGraph {
    pub n: usize,
    pub graph: DiGraph<FactorId, FactorId>,
}

impl RauzyGraph {
    pub fn build(view: &LanguageView, n: usize) -> Self {
        assert!(n < view.depth(), "edges need factors of length n + 1");
        let trie = view.trie();
        let mut graph = DiGraph::new();
        let index: HashMap<FactorId, NodeIndex> =
            view.factors(n).iter().map(|&w| (w, graph.add_node(w))).collect();
        for &e in view.factors(n + 1) {
            let src = trie.parent(e).expect("non-root");
            let dst = trie.link(e);
            graph.add_edge(index[&src], index[&dst], e);
        }
        RauzyGraph { n, graph }
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn out_degree(&self, v: NodeIndex) -> usize {
        self.graph.neighbors_directed(v, petgraph::Outgoing).count()
    }

    pub fn in_degree(&self, v: NodeIndex) -> usize {
        self.graph.neighbors_directed(v, petgraph::Incoming).count()
    }

    pub fn component_count(&self) -> usize {
        kosaraju_scc(&self.graph).len()
    }

    pub fn strongly_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn to_dot(&self, view: &LanguageView, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"rauzy_{}_{}\" {{", name, self.n);
        for v in self.graph.node_indices() {
            let label = view.text_of(self.graph[v]);
            let _ = writeln!(out, "  \"{}\";", display(&label));
        }
        for e in self.graph.edge_indices() {
            let (s, t) = self.graph.edge_endpoints(e).expect("edge");
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                display(&view.text_of(self.graph[s])),
                display(&view.text_of(self.graph[t])),
                view.text_of(self.graph[e]),
            );
        }
        out.push_str("}\n");
        out
    }
}

fn display(w: &str) -> &str {
    if w.is_empty() {
        "ε"
    } else {
        w
    }
}
