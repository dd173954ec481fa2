//! Online suffix trie truncated at a fixed depth.
//!
//! Every factor of length at most `depth` of the text seen so far is a node.
//! Appending a symbol walks the suffix-link chain of the longest stored
//! suffix and stops at the first node that already has the child, so the
//! amortised cost per symbol is one plus the number of nodes created.

use crate::alphabet::Symbol;

pub type NodeId = u32;
pub const ROOT: NodeId = 0;
const NONE: NodeId = NodeId::MAX;

#[derive(Clone, Debug)]
pub struct FactorTrie {
    k: usize,
    depth: usize,
    children: Vec<NodeId>,
    link: Vec<NodeId>,
    parent: Vec<NodeId>,
    len: Vec<u32>,
    first: Vec<Symbol>,
    last: Vec<Symbol>,
    /// End index of the first occurrence.
    first_end: Vec<u32>,
    /// Occurrences whose longest stored suffix is this node.
    raw: Vec<u32>,
    counts: Vec<usize>,
    top: NodeId,
    text_len: usize,
}

impl FactorTrie {
    pub fn new(k: usize, depth: usize) -> Self {
        let mut t = FactorTrie {
            k,
            depth,
            children: Vec::new(),
            link: Vec::new(),
            parent: Vec::new(),
            len: Vec::new(),
            first: Vec::new(),
            last: Vec::new(),
            first_end: Vec::new(),
            raw: Vec::new(),
            counts: vec![0; depth + 1],
            top: ROOT,
            text_len: 0,
        };
        t.add_node(NONE, 0, 0, 0, u32::MAX);
        t.link[0] = ROOT;
        t
    }

    fn add_node(&mut self, parent: NodeId, len: u32, first: Symbol, last: Symbol, end: u32) -> NodeId {
        let id = self.len.len() as NodeId;
        self.children.extend(std::iter::repeat_n(NONE, self.k));
        self.link.push(NONE);
        self.parent.push(parent);
        self.len.push(len);
        self.first.push(first);
        self.last.push(last);
        self.first_end.push(end);
        self.raw.push(0);
        self.counts[len as usize] += 1;
        id
    }

    pub fn push(&mut self, c: Symbol) {
        let pos = self.text_len as u32;
        let mut s = self.top;
        if self.len[s as usize] as usize == self.depth {
            s = self.link[s as usize];
        }
        let mut prev: Option<NodeId> = None;
        let mut new_top = NONE;
        loop {
            let slot = s as usize * self.k + c as usize;
            let existing = self.children[slot];
            if existing != NONE {
                if let Some(p) = prev {
                    self.link[p as usize] = existing;
                }
                if new_top == NONE {
                    new_top = existing;
                }
                break;
            }
            let first = if s == ROOT { c } else { self.first[s as usize] };
            let x = self.add_node(s, self.len[s as usize] + 1, first, c, pos);
            self.children[slot] = x;
            if let Some(p) = prev {
                self.link[p as usize] = x;
            }
            if new_top == NONE {
                new_top = x;
            }
            if s == ROOT {
                self.link[x as usize] = ROOT;
                break;
            }
            prev = Some(x);
            s = self.link[s as usize];
        }
        self.top = new_top;
        self.raw[new_top as usize] += 1;
        self.text_len += 1;
    }

    pub fn extend(&mut self, symbols: &[Symbol]) {
        for &c in symbols {
            self.push(c);
        }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn text_len(&self) -> usize {
        self.text_len
    }

    pub fn node_count(&self) -> usize {
        self.len.len()
    }

    /// Distinct factors per length `0..=depth`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn child(&self, v: NodeId, c: Symbol) -> Option<NodeId> {
        let x = self.children[v as usize * self.k + c as usize];
        (x != NONE).then_some(x)
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        let i = v as usize * self.k;
        &self.children[i..i + self.k]
    }

    pub fn link(&self, v: NodeId) -> NodeId {
        self.link[v as usize]
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        let p = self.parent[v as usize];
        (p != NONE).then_some(p)
    }

    pub fn len(&self, v: NodeId) -> usize {
        self.len[v as usize] as usize
    }

    pub fn first_letter(&self, v: NodeId) -> Symbol {
        self.first[v as usize]
    }

    pub fn last_letter(&self, v: NodeId) -> Symbol {
        self.last[v as usize]
    }

    pub fn first_end(&self, v: NodeId) -> usize {
        self.first_end[v as usize] as usize
    }

    pub fn raw_counts(&self) -> &[u32] {
        &self.raw
    }

    pub fn find(&self, w: &[Symbol]) -> Option<NodeId> {
        if w.len() > self.depth {
            return None;
        }
        let mut v = ROOT;
        for &c in w {
            if c as usize >= self.k {
                return None;
            }
            v = self.child(v, c)?;
        }
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn naive_counts(text: &[u8], depth: usize) -> Vec<usize> {
        (0..=depth)
            .map(|n| {
                if n > text.len() {
                    return 0;
                }
                (0..=text.len() - n).map(|i| &text[i..i + n]).collect::<HashSet<_>>().len()
            })
            .collect()
    }

    #[test]
    fn counts_match_enumeration() {
        let text: Vec<u8> = b"abaababaabaababaababaabaababaabaab".iter().map(|c| c - b'a').collect();
        for depth in [1, 2, 5, 9] {
            let mut t = FactorTrie::new(2, depth);
            for (i, &c) in text.iter().enumerate() {
                t.push(c);
                assert_eq!(t.counts(), &naive_counts(&text[..=i], depth)[..], "depth {depth} at {i}");
            }
        }
    }

    #[test]
    fn links_point_to_suffixes() {
        let text: Vec<u8> = b"abcacbbacabcca".iter().map(|c| c - b'a').collect();
        let mut t = FactorTrie::new(3, 4);
        t.extend(&text);
        for v in 1..t.node_count() as NodeId {
            let e = t.first_end(v);
            let l = t.len(v);
            let w = &text[e + 1 - l..=e];
            assert_eq!(t.find(w), Some(v));
            assert_eq!(t.find(&w[1..]), Some(t.link(v)));
            assert_eq!(t.first_letter(v), w[0]);
            assert_eq!(t.last_letter(v), w[l - 1]);
        }
    }

    #[test]
    fn unary_text() {
        let mut t = FactorTrie::new(1, 3);
        t.extend(&[0; 10]);
        assert_eq!(t.counts(), &[1, 1, 1, 1]);
        assert_eq!(t.node_count(), 4);
    }
}
