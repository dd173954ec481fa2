//! Factor index over a finite prefix with extension and special-factor queries.

mod rauzy;
mod saturation;
mod trie;

pub use rauzy::RauzyGraph;
pub use saturation::{saturate, Saturation, SaturationStatus};
pub use trie::{FactorTrie, NodeId, ROOT};

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::source::FinitePrefix;
use crate::verdict::{Verdict, Witness};
use serde::{Deserialize, Serialize};

/// Canonical handle of a factor inside one [`LanguageView`].
pub type FactorId = NodeId;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionProfile {
    pub factor: String,
    pub lext: Vec<char>,
    pub rext: Vec<char>,
    pub bext: Vec<(char, char)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BsKind {
    Strong,
    Weak,
    Ordinary,
}

impl BsKind {
    pub fn of(b: i64) -> Self {
        match b.signum() {
            1 => BsKind::Strong,
            -1 => BsKind::Weak,
            _ => BsKind::Ordinary,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Specials {
    pub ls: Vec<FactorId>,
    pub rs: Vec<FactorId>,
    pub bs: Vec<FactorId>,
}

/// All factors of length at most `n_max + 2` of a prefix.
///
/// Extensions are read off the factor set: `a` is a left extension of `w`
/// when `aw` is a factor of the prefix, and likewise on the right and for
/// pairs. With this reading `Σ b(w) = C(n+2) - 2C(n+1) + C(n)` holds exactly.
pub struct LanguageView {
    prefix: FinitePrefix,
    n_max: usize,
    trie: FactorTrie,
    by_length: Vec<Vec<FactorId>>,
    lext: Vec<u32>,
    bext: Vec<u32>,
    occ: Vec<u32>,
    saturation: SaturationStatus,
}

impl LanguageView {
    /// Indexes `prefix`; it counts as saturated when its first half
    /// already contains every factor of length at most `n_max + 2`.
    pub fn build(prefix: FinitePrefix, n_max: usize) -> Result<Self> {
        saturation::build_halving(prefix, n_max)
    }

    /// Indexes `prefix` without the `4 n_max <= length` guard or a saturation check.
    pub fn build_unguarded(prefix: FinitePrefix, n_max: usize) -> Self {
        let mut trie = FactorTrie::new(prefix.k(), n_max + 2);
        trie.extend(&prefix.symbols);
        Self::from_trie(prefix, trie, n_max, SaturationStatus::unchecked())
    }

    pub fn build_with(prefix: FinitePrefix, n_max: usize, saturation: SaturationStatus) -> Result<Self> {
        check_guard(n_max, prefix.len())?;
        let mut trie = FactorTrie::new(prefix.k(), n_max + 2);
        trie.extend(&prefix.symbols);
        Ok(Self::from_trie(prefix, trie, n_max, saturation))
    }

    /// Wraps a trie that has consumed exactly `prefix.symbols`.
    pub fn from_trie(prefix: FinitePrefix, trie: FactorTrie, n_max: usize, saturation: SaturationStatus) -> Self {
        assert_eq!(trie.text_len(), prefix.len());
        assert_eq!(trie.depth(), n_max + 2);
        let k = trie.k();
        let nodes = trie.node_count();
        // breadth-first with children in letter order lists each length lexicographically
        let mut by_length = vec![Vec::new(); trie.depth() + 1];
        let mut queue = std::collections::VecDeque::from([ROOT]);
        while let Some(v) = queue.pop_front() {
            by_length[trie.len(v)].push(v);
            queue.extend(trie.children(v).iter().copied().filter(|&c| c != NodeId::MAX));
        }
        let mut lext = vec![0u32; nodes];
        let mut bext = vec![0u32; nodes * k];
        for v in 1..nodes as NodeId {
            lext[trie.link(v) as usize] |= 1 << trie.first_letter(v);
            if let Some(p) = trie.parent(v).filter(|_| trie.len(v) >= 2) {
                let w = trie.link(p);
                bext[w as usize * k + trie.first_letter(v) as usize] |= 1 << trie.last_letter(v);
            }
        }
        let mut occ: Vec<u32> = trie.raw_counts().to_vec();
        for l in (1..by_length.len()).rev() {
            for &v in &by_length[l] {
                occ[trie.link(v) as usize] += occ[v as usize];
            }
        }
        occ[ROOT as usize] = prefix.len() as u32 + 1;
        LanguageView {
            prefix,
            n_max,
            trie,
            by_length,
            lext,
            bext,
            occ,
            saturation,
        }
    }

    pub fn prefix(&self) -> &FinitePrefix {
        &self.prefix
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.prefix.symbols
    }

    pub fn k(&self) -> usize {
        self.prefix.k()
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Longest factor length indexed (`n_max + 2`).
    pub fn depth(&self) -> usize {
        self.trie.depth()
    }

    pub fn len(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.is_empty()
    }

    pub fn saturation(&self) -> &SaturationStatus {
        &self.saturation
    }

    pub fn saturated(&self) -> bool {
        self.saturation.saturated
    }

    pub fn trie(&self) -> &FactorTrie {
        &self.trie
    }

    /// `HoldsUpTo(horizon)` on a saturated prefix, otherwise inconclusive.
    pub fn holds(&self, horizon: usize) -> Verdict {
        if self.saturated() {
            Verdict::HoldsUpTo { horizon }
        } else {
            Verdict::inconclusive(format!(
                "no violation up to {horizon}, but the prefix is not saturated"
            ))
        }
    }

    /// Factors of length `n` in lexicographic order.
    pub fn factors(&self, n: usize) -> &[FactorId] {
        self.by_length.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `C(n)` for `n` in `0..=depth`.
    pub fn complexity(&self) -> Vec<usize> {
        self.trie.counts().to_vec()
    }

    pub fn c(&self, n: usize) -> usize {
        self.trie.counts().get(n).copied().unwrap_or(0)
    }

    /// `ΔC(n)` for `n <= n_max + 1`.
    pub fn first_differences(&self) -> Vec<i64> {
        let c = self.trie.counts();
        (0..self.depth()).map(|n| c[n + 1] as i64 - c[n] as i64).collect()
    }

    /// `Δ²C(n)` for `n <= n_max`.
    pub fn second_differences(&self) -> Vec<i64> {
        let d = self.first_differences();
        (0..=self.n_max).map(|n| d[n + 1] - d[n]).collect()
    }

    pub fn len_of(&self, w: FactorId) -> usize {
        self.trie.len(w)
    }

    pub fn symbols_of(&self, w: FactorId) -> &[Symbol] {
        let l = self.trie.len(w);
        if l == 0 {
            return &[];
        }
        let e = self.trie.first_end(w);
        &self.prefix.symbols[e + 1 - l..=e]
    }

    pub fn text_of(&self, w: FactorId) -> String {
        self.prefix.alphabet.decode(self.symbols_of(w))
    }

    pub fn find(&self, w: &[Symbol]) -> Option<FactorId> {
        self.trie.find(w)
    }

    pub fn find_str(&self, w: &str) -> Option<FactorId> {
        let syms = self.prefix.alphabet.encode(w).ok()?;
        self.find(&syms)
    }

    pub(crate) fn require(&self, w: &str) -> Result<FactorId> {
        self.find_str(w).ok_or_else(|| Error::UnknownFactor(w.into()))
    }

    /// Index of the first occurrence.
    pub fn first_occurrence(&self, w: FactorId) -> usize {
        (self.trie.first_end(w) + 1).saturating_sub(self.trie.len(w))
    }

    /// Number of occurrences in the prefix.
    pub fn occurrence_count(&self, w: FactorId) -> usize {
        self.occ[w as usize] as usize
    }

    pub fn lext_mask(&self, w: FactorId) -> u32 {
        self.lext[w as usize]
    }

    pub fn rext_mask(&self, w: FactorId) -> u32 {
        self.trie
            .children(w)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != NodeId::MAX)
            .fold(0, |m, (a, _)| m | 1 << a)
    }

    /// Row `a` holds the letters `b` with `awb` a factor.
    pub fn bext_rows(&self, w: FactorId) -> &[u32] {
        let k = self.k();
        &self.bext[w as usize * k..(w as usize + 1) * k]
    }

    pub fn bext_count(&self, w: FactorId) -> u32 {
        self.bext_rows(w).iter().map(|r| r.count_ones()).sum()
    }

    pub fn lext_count(&self, w: FactorId) -> u32 {
        self.lext_mask(w).count_ones()
    }

    pub fn rext_count(&self, w: FactorId) -> u32 {
        self.rext_mask(w).count_ones()
    }

    /// `b(w) = #Bext(w) - #Rext(w) - #Lext(w) + 1`, for `|w| <= n_max`.
    pub fn bilateral_order(&self, w: FactorId) -> i64 {
        debug_assert!(self.len_of(w) <= self.n_max);
        self.bext_count(w) as i64 - self.rext_count(w) as i64 - self.lext_count(w) as i64 + 1
    }

    pub fn is_left_special(&self, w: FactorId) -> bool {
        self.lext_count(w) >= 2
    }

    pub fn is_right_special(&self, w: FactorId) -> bool {
        self.rext_count(w) >= 2
    }

    pub fn is_bispecial(&self, w: FactorId) -> bool {
        self.is_left_special(w) && self.is_right_special(w)
    }

    pub fn specials(&self, n: usize) -> Specials {
        let mut s = Specials::default();
        for &w in self.factors(n) {
            let (l, r) = (self.is_left_special(w), self.is_right_special(w));
            if l {
                s.ls.push(w);
            }
            if r {
                s.rs.push(w);
            }
            if l && r {
                s.bs.push(w);
            }
        }
        s
    }

    pub fn extensions(&self, w: &str) -> Result<ExtensionProfile> {
        let id = self.require(w)?;
        if self.len_of(id) > self.n_max {
            return Err(Error::UnknownFactor(w.into()));
        }
        Ok(self.profile(id))
    }

    pub fn profile(&self, w: FactorId) -> ExtensionProfile {
        let a = &self.prefix.alphabet;
        let letters = |m: u32| (0..self.k()).filter(|i| m >> i & 1 == 1).map(|i| a.letter(i as Symbol)).collect();
        let mut bext = Vec::new();
        for (x, row) in self.bext_rows(w).iter().enumerate() {
            for y in 0..self.k() {
                if row >> y & 1 == 1 {
                    bext.push((a.letter(x as Symbol), a.letter(y as Symbol)));
                }
            }
        }
        ExtensionProfile {
            factor: self.text_of(w),
            lext: letters(self.lext_mask(w)),
            rext: letters(self.rext_mask(w)),
            bext,
        }
    }

    pub fn is_palindrome(&self, w: FactorId) -> bool {
        let s = self.symbols_of(w);
        s.iter().eq(s.iter().rev())
    }

    pub fn reversal(&self, w: FactorId) -> Option<FactorId> {
        let r: Vec<Symbol> = self.symbols_of(w).iter().rev().copied().collect();
        self.find(&r)
    }

    /// First factor, by length then lexicographically, whose reversal is absent.
    pub fn reversal_gap(&self, up_to: usize) -> Option<FactorId> {
        (1..=up_to.min(self.depth()))
            .flat_map(|n| self.factors(n).iter().copied())
            .find(|&w| self.reversal(w).is_none())
    }

    pub fn closed_under_reversal(&self) -> Verdict {
        match self.reversal_gap(self.n_max) {
            Some(w) => {
                let t = self.text_of(w);
                let r: String = t.chars().rev().collect();
                Verdict::fails_at(
                    t.len(),
                    Witness::new(format!("{t} occurs but {r} does not"))
                        .factor(t)
                        .factor(r),
                )
                .non_monotone(self.saturated())
            }
            None => self.holds(self.n_max),
        }
    }

    /// Smallest `n >= 1` with `C(n) <= n`, which forces eventual periodicity.
    pub fn morse_hedlund_witness(&self) -> Option<usize> {
        (1..=self.depth()).find(|&n| self.c(n) <= n)
    }

    pub fn aperiodic(&self) -> Verdict {
        match self.morse_hedlund_witness() {
            Some(n) => Verdict::fails_at(
                n,
                Witness::new(format!("C({n}) = {} <= {n}", self.c(n))).count("C", self.c(n) as i64),
            )
            .non_monotone(self.saturated()),
            None => self.holds(self.depth()),
        }
    }

    pub fn rauzy_graph(&self, n: usize) -> RauzyGraph {
        RauzyGraph::build(self, n)
    }
}

pub(crate) fn check_guard(n_max: usize, len: usize) -> Result<()> {
    if n_max.saturating_mul(4) > len {
        return Err(Error::HorizonTooDeep { n_max, length: len });
    }
    Ok(())
}
