//! Palindromic tree built in one left-to-right pass.

use crate::alphabet::Symbol;

pub type PalId = u32;
/// Root of odd palindromes (length -1).
pub const ODD_ROOT: PalId = 0;
/// Root of even palindromes (the empty word).
pub const EVEN_ROOT: PalId = 1;
const NONE: PalId = PalId::MAX;

#[derive(Clone, Debug)]
pub struct Eertree {
    k: usize,
    len: Vec<i32>,
    link: Vec<PalId>,
    children: Vec<PalId>,
    first_end: Vec<u32>,
    /// Distinct palindromes, the empty word included, in each prefix `0..=L`.
    prefix_counts: Vec<u32>,
}

impl Eertree {
    pub fn build(text: &[Symbol], k: usize) -> Self {
        let mut t = Eertree {
            k,
            len: vec![-1, 0],
            link: vec![ODD_ROOT, ODD_ROOT],
            children: vec![NONE; 2 * k],
            first_end: vec![0, 0],
            prefix_counts: Vec::with_capacity(text.len() + 1),
        };
        t.prefix_counts.push(1);
        let mut last = EVEN_ROOT;
        for (i, &c) in text.iter().enumerate() {
            let fits = |t: &Eertree, v: PalId| {
                let l = t.len[v as usize];
                let j = i as i64 - l as i64 - 1;
                j >= 0 && text[j as usize] == c
            };
            let mut v = last;
            while !fits(&t, v) {
                v = t.link[v as usize];
            }
            let slot = v as usize * k + c as usize;
            if t.children[slot] != NONE {
                last = t.children[slot];
            } else {
                let id = t.len.len() as PalId;
                let l = t.len[v as usize] + 2;
                let link = if l == 1 {
                    EVEN_ROOT
                } else {
                    let mut u = t.link[v as usize];
                    while !fits(&t, u) {
                        u = t.link[u as usize];
                    }
                    t.children[u as usize * k + c as usize]
                };
                t.len.push(l);
                t.link.push(link);
                t.first_end.push(i as u32);
                t.children.extend(std::iter::repeat_n(NONE, k));
                t.children[slot] = id;
                last = id;
            }
            t.prefix_counts.push(t.len.len() as u32 - 1);
        }
        t
    }

    /// Number of nodes, both roots included.
    pub fn node_count(&self) -> usize {
        self.len.len()
    }

    /// Distinct palindromes (empty word included) of the whole text.
    pub fn distinct(&self) -> usize {
        self.node_count() - 1
    }

    pub fn prefix_counts(&self) -> &[u32] {
        &self.prefix_counts
    }

    pub fn len(&self, v: PalId) -> i32 {
        self.len[v as usize]
    }

    pub fn first_end(&self, v: PalId) -> usize {
        self.first_end[v as usize] as usize
    }

    pub fn link(&self, v: PalId) -> PalId {
        self.link[v as usize]
    }

    /// `awa` for the palindrome `w` at `v`.
    pub fn child(&self, v: PalId, a: Symbol) -> Option<PalId> {
        let x = self.children[v as usize * self.k + a as usize];
        (x != NONE).then_some(x)
    }

    pub fn extension_letters(&self, v: PalId) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.k as Symbol).filter(move |&a| self.child(v, a).is_some())
    }

    /// Non-root nodes.
    pub fn nodes(&self) -> impl Iterator<Item = PalId> {
        2..self.len.len() as PalId
    }

    /// `P(n)` for `n` in `0..=max_len`.
    pub fn counts_by_length(&self, max_len: usize) -> Vec<usize> {
        let mut p = vec![0; max_len + 1];
        p[0] = 1;
        for v in self.nodes() {
            let l = self.len(v) as usize;
            if l <= max_len {
                p[l] += 1;
            }
        }
        p
    }

    pub fn max_len(&self) -> usize {
        self.len.iter().copied().max().unwrap_or(0).max(0) as usize
    }

    /// Node of palindrome `w`, found by walking out from its centre.
    pub fn find(&self, w: &[Symbol]) -> Option<PalId> {
        if !w.iter().eq(w.iter().rev()) {
            return None;
        }
        let n = w.len();
        let (mut v, start) = if n.is_multiple_of(2) {
            (EVEN_ROOT, n / 2)
        } else {
            (ODD_ROOT, n / 2)
        };
        for &c in &w[start..] {
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

    fn enc(s: &str) -> Vec<Symbol> {
        s.bytes().map(|b| b - b'a').collect()
    }

    fn naive(text: &[Symbol]) -> usize {
        let mut set = HashSet::new();
        for i in 0..text.len() {
            for j in i + 1..=text.len() {
                let w = &text[i..j];
                if w.iter().eq(w.iter().rev()) {
                    set.insert(w.to_vec());
                }
            }
        }
        set.len() + 1
    }

    #[test]
    fn defect_example() {
        let text = enc("caccbccca");
        let t = Eertree::build(&text, 3);
        assert_eq!(t.distinct(), 9);
        assert_eq!(*t.prefix_counts().last().unwrap(), 9);
        assert!(t.find(&enc("ccbcc")).is_some());
        assert!(t.find(&enc("cbc")).is_some());
        assert!(t.find(&enc("bcb")).is_none());
    }

    #[test]
    fn prefix_counts_match_enumeration() {
        let text = enc("abacabacbbcabbacbabcaacb");
        let t = Eertree::build(&text, 3);
        for i in 0..=text.len() {
            assert_eq!(t.prefix_counts()[i] as usize, naive(&text[..i]), "prefix {i}");
        }
    }

    #[test]
    fn empty_text() {
        let t = Eertree::build(&[], 2);
        assert_eq!(t.prefix_counts(), &[1]);
        assert_eq!(t.counts_by_length(3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn extensions() {
        let t = Eertree::build(&enc("aaaa"), 1);
        let a = t.find(&enc("a")).unwrap();
        assert_eq!(t.extension_letters(a).collect::<Vec<_>>(), vec![0]);
        assert_eq!(t.len(t.child(a, 0).unwrap()), 3);
    }
}
