//! Brute-force reference implementations over raw symbol slices.

use std::collections::{BTreeSet, HashMap, HashSet};

pub type Word = Vec<u8>;

pub fn factors(t: &[u8], n: usize) -> BTreeSet<Word> {
    if n == 0 {
        return BTreeSet::from([Vec::new()]);
    }
    t.windows(n).map(|w| w.to_vec()).collect()
}

pub fn complexity(t: &[u8], n: usize) -> usize {
    factors(t, n).len()
}

/// Every factor of length `0..=max_len`, by length.
pub struct FactorSets {
    sets: Vec<HashSet<Word>>,
}

impl FactorSets {
    pub fn new(t: &[u8], max_len: usize) -> Self {
        FactorSets {
            sets: (0..=max_len).map(|n| factors(t, n).into_iter().collect()).collect(),
        }
    }

    pub fn contains(&self, w: &[u8]) -> bool {
        self.sets.get(w.len()).expect("length covered").contains(w)
    }

    pub fn left_ext(&self, w: &[u8], k: usize) -> BTreeSet<u8> {
        (0..k as u8)
            .filter(|&a| self.contains(&[&[a][..], w].concat()))
            .collect()
    }

    pub fn right_ext(&self, w: &[u8], k: usize) -> BTreeSet<u8> {
        (0..k as u8)
            .filter(|&b| self.contains(&[w, &[b][..]].concat()))
            .collect()
    }

    pub fn bi_ext(&self, w: &[u8], k: usize) -> BTreeSet<(u8, u8)> {
        let mut out = BTreeSet::new();
        for a in 0..k as u8 {
            for b in 0..k as u8 {
                if self.contains(&[&[a][..], w, &[b][..]].concat()) {
                    out.insert((a, b));
                }
            }
        }
        out
    }

    pub fn bilateral_order(&self, w: &[u8], k: usize) -> i64 {
        self.bi_ext(w, k).len() as i64 - self.left_ext(w, k).len() as i64 - self.right_ext(w, k).len() as i64 + 1
    }

    /// Letters `a` with `awa` a factor.
    pub fn pal_ext(&self, w: &[u8], k: usize) -> BTreeSet<u8> {
        self.bi_ext(w, k).into_iter().filter(|(a, b)| a == b).map(|(a, _)| a).collect()
    }
}

pub fn occurrences(t: &[u8], w: &[u8]) -> Vec<usize> {
    if w.len() > t.len() {
        return Vec::new();
    }
    (0..=t.len() - w.len()).filter(|&i| &t[i..i + w.len()] == w).collect()
}

/// Distinct return words of `w`.
pub fn return_words(t: &[u8], w: &[u8]) -> BTreeSet<Word> {
    let occ = occurrences(t, w);
    occ.windows(2).map(|p| t[p[0]..p[1]].to_vec()).collect()
}

pub fn is_palindrome(w: &[u8]) -> bool {
    w.iter().eq(w.iter().rev())
}

/// Distinct non-empty palindromic factors with the end index of their first
/// occurrence.
pub fn palindromes_first_end(t: &[u8]) -> HashMap<Word, usize> {
    let mut first: HashMap<Word, usize> = HashMap::new();
    for e in 0..t.len() {
        for s in 0..=e {
            let w = &t[s..=e];
            if is_palindrome(w) && !first.contains_key(w) {
                first.insert(w.to_vec(), e);
            }
        }
    }
    first
}

/// Distinct palindromes, empty word included, of every prefix `t[..i]`.
pub fn palindrome_prefix_counts(t: &[u8]) -> Vec<usize> {
    let first = palindromes_first_end(t);
    let mut new_at = vec![0usize; t.len()];
    for &e in first.values() {
        new_at[e] += 1;
    }
    let mut out = vec![1];
    for i in 0..t.len() {
        out.push(out[i] + new_at[i]);
    }
    out
}

pub fn palindromic_complexity(t: &[u8], n: usize) -> usize {
    factors(t, n).iter().filter(|w| is_palindrome(w)).count()
}

pub fn parikh(w: &[u8], k: usize) -> Vec<u32> {
    let mut v = vec![0; k];
    for &c in w {
        v[c as usize] += 1;
    }
    v
}

/// Per-letter minimum and maximum count, and the number of distinct Parikh
/// vectors, over windows of length `n`.
pub fn abelian(t: &[u8], k: usize, n: usize) -> (Vec<u32>, Vec<u32>, usize) {
    assert!(k <= 8);
    let vecs: Vec<[u32; 8]> = t
        .windows(n)
        .map(|w| {
            let mut v = [0; 8];
            for &c in w {
                v[c as usize] += 1;
            }
            v
        })
        .collect();
    let lo = (0..k).map(|a| vecs.iter().map(|v| v[a]).min().unwrap()).collect();
    let hi = (0..k).map(|a| vecs.iter().map(|v| v[a]).max().unwrap()).collect();
    let distinct: HashSet<&[u32; 8]> = vecs.iter().collect();
    (lo, hi, distinct.len())
}

/// Edges of the Rauzy graph of order `n`: `u -> v` for each factor `x` of
/// length `n + 1` with prefix `u` and suffix `v`.
pub fn rauzy_edges(t: &[u8], n: usize) -> BTreeSet<(Word, Word, Word)> {
    factors(t, n + 1)
        .into_iter()
        .map(|x| (x[..n].to_vec(), x[1..].to_vec(), x))
        .collect()
}
