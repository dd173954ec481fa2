//! Parikh vectors, abelian complexity and letter balance.

use crate::alphabet::Symbol;
use crate::factor::LanguageView;
use crate::verdict::{Verdict, Witness};
use serde::Serialize;
use std::collections::HashSet;

pub fn parikh(w: &[Symbol], k: usize) -> Vec<usize> {
    let mut v = vec![0; k];
    for &c in w {
        v[c as usize] += 1;
    }
    v
}

/// Per-length letter-count ranges and abelian complexity over all windows
/// of a prefix.
#[derive(Clone, Debug, Serialize)]
pub struct BalanceTable {
    pub k: usize,
    /// Window lengths `1..=max_n`; row `n - 1` describes length `n`.
    pub max_n: usize,
    /// `min[n-1][a]`, `max[n-1][a]`: extreme counts of letter `a`.
    pub min: Vec<Vec<u32>>,
    pub max: Vec<Vec<u32>>,
    /// `ac[n-1] = AC(n)`.
    pub ac: Vec<usize>,
    #[serde(skip)]
    prefix_sums: Vec<Vec<u32>>,
}

impl BalanceTable {
    /// Scans windows of every length `1..=max_n` (clamped to the text length).
    pub fn compute(text: &[Symbol], k: usize, max_n: usize) -> Self {
        let max_n = max_n.min(text.len());
        let mut ps = vec![vec![0u32; text.len() + 1]; k];
        for (i, &c) in text.iter().enumerate() {
            for (a, row) in ps.iter_mut().enumerate() {
                row[i + 1] = row[i] + u32::from(c as usize == a);
            }
        }
        let mut min = Vec::with_capacity(max_n);
        let mut max = Vec::with_capacity(max_n);
        let mut ac = Vec::with_capacity(max_n);
        let mut sweep = Sweep::new(k);
        for n in 1..=max_n {
            let (lo, hi, distinct) = sweep.run(text, n);
            min.push(lo);
            max.push(hi);
            ac.push(distinct);
        }
        BalanceTable {
            k,
            max_n,
            min,
            max,
            ac,
            prefix_sums: ps,
        }
    }

    pub fn from_view(view: &LanguageView, max_n: usize) -> Self {
        Self::compute(view.symbols(), view.k(), max_n)
    }

    pub fn spread(&self, n: usize, a: usize) -> u32 {
        self.max[n - 1][a] - self.min[n - 1][a]
    }

    /// Largest spread of letter `a` over all lengths.
    pub fn max_spread(&self, a: usize) -> u32 {
        (1..=self.max_n).map(|n| self.spread(n, a)).max().unwrap_or(0)
    }

    pub fn ac(&self, n: usize) -> usize {
        self.ac[n - 1]
    }

    /// Start positions of windows of length `n` with the fewest and the most `a`.
    pub fn extreme_windows(&self, n: usize, a: usize) -> (usize, usize) {
        let p = &self.prefix_sums[a];
        let (lo, hi) = (self.min[n - 1][a], self.max[n - 1][a]);
        let windows = p.len() - n;
        let i = (0..windows).find(|&i| p[i + n] - p[i] == lo).expect("minimum attained");
        let j = (0..windows).find(|&i| p[i + n] - p[i] == hi).expect("maximum attained");
        (i, j)
    }

    /// First length at which the spread of `a` exceeds `c`.
    pub fn first_excess(&self, a: usize, c: u32) -> Option<usize> {
        (1..=self.max_n).find(|&n| self.spread(n, a) > c)
    }
}

/// Counts in a window are keyed by their offset from the first window of the
/// same length; offsets beyond `RADIUS` fall back to hashing.
const RADIUS: i64 = 16;
const SIDE: usize = 2 * RADIUS as usize + 1;

struct Sweep {
    k: usize,
    free: usize,
    stride: Vec<i64>,
    seen: Option<Vec<u32>>,
    stamp: u32,
}

impl Sweep {
    fn new(k: usize) -> Self {
        let free = k.saturating_sub(1);
        let size = SIDE.checked_pow(free as u32).filter(|&s| s <= 1 << 20);
        let mut stride = vec![0i64; k];
        let mut w = 1i64;
        for a in (0..free).rev() {
            stride[a] = w;
            w *= SIDE as i64;
        }
        Sweep {
            k,
            free,
            stride,
            seen: size.map(|s| vec![0; s]),
            stamp: 0,
        }
    }

    fn run(&mut self, text: &[Symbol], n: usize) -> (Vec<u32>, Vec<u32>, usize) {
        let mut counts = vec![0u32; self.k];
        for &c in &text[..n] {
            counts[c as usize] += 1;
        }
        let base = counts.clone();
        let mut lo = base.clone();
        let mut hi = base.clone();
        let mut spill: HashSet<Vec<u32>> = HashSet::new();
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            if let Some(seen) = self.seen.as_mut() {
                seen.fill(0);
            }
            self.stamp = 1;
        }
        let stamp = self.stamp;
        let centre: i64 = self.stride.iter().map(|s| s * RADIUS).sum();
        let mut key = centre;
        let mut out_of_range = 0usize;
        let mut count = 0usize;
        let free = self.free;
        let mut record = |counts: &[u32], key: i64, out: usize, seen: &mut Option<Vec<u32>>| {
            match seen {
                Some(seen) if out == 0 => {
                    let slot = &mut seen[key as usize];
                    if *slot != stamp {
                        *slot = stamp;
                        count += 1;
                    }
                }
                _ => {
                    if spill.insert(counts[..free].to_vec()) {
                        count += 1;
                    }
                }
            }
        };
        record(&counts, key, 0, &mut self.seen);
        let mut out = vec![false; self.k];
        for i in 0..text.len() - n {
            let gone = text[i] as usize;
            let come = text[i + n] as usize;
            if gone == come {
                record(&counts, key, out_of_range, &mut self.seen);
                continue;
            }
            counts[gone] -= 1;
            counts[come] += 1;
            lo[gone] = lo[gone].min(counts[gone]);
            hi[come] = hi[come].max(counts[come]);
            key += self.stride[come] - self.stride[gone];
            for a in [gone, come] {
                if a < free {
                    let off = counts[a] as i64 - base[a] as i64;
                    let now = off.abs() > RADIUS;
                    if now != out[a] {
                        out[a] = now;
                        if now {
                            out_of_range += 1;
                        } else {
                            out_of_range -= 1;
                        }
                    }
                }
            }
            record(&counts, key, out_of_range, &mut self.seen);
        }
        (lo, hi, count)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BalanceVerdicts {
    pub b_forall: Verdict,
    pub b_exists: Verdict,
    pub ac: Verdict,
    /// Set when `AC ⇒ B∀ ⇒ B∃` is violated by the verdicts above.
    pub chain_violation: Option<String>,
}

fn excess_witness(view: &LanguageView, t: &BalanceTable, n: usize, a: usize, c: u32) -> Witness {
    let (i, j) = t.extreme_windows(n, a);
    let al = &view.prefix().alphabet;
    let s = view.symbols();
    let letter = al.letter(a as Symbol);
    let (lo, hi) = (t.min[n - 1][a], t.max[n - 1][a]);
    Witness::new(format!(
        "length-{n} factors at {i} and {j} contain {lo} and {hi} letters {letter}; spread {} > {c}",
        hi - lo
    ))
    .factor(al.decode(&s[i..i + n]))
    .factor(al.decode(&s[j..j + n]))
    .count("spread", (hi - lo) as i64)
    .count("min_pos", i as i64)
    .count("max_pos", j as i64)
}

/// `B∀`, `B∃` and `AC`, gated on the aperiodicity screen. `letters`
/// restricts the letters examined for the balance properties.
pub fn property_b_checks(view: &LanguageView, t: &BalanceTable, letters: Option<&[usize]>) -> BalanceVerdicts {
    let k = view.k();
    let horizon = t.max_n;
    let aperiodic = view.aperiodic();
    if !aperiodic.holds() {
        let v = match aperiodic {
            Verdict::FailsAt { n, witness } => Verdict::FailsAt {
                n,
                witness: Witness {
                    summary: format!("eventually periodic: {}", witness.summary),
                    ..witness
                },
            },
            _ => Verdict::inconclusive("aperiodicity not established (periodic suspect)"),
        };
        return BalanceVerdicts {
            b_forall: v.clone(),
            b_exists: v.clone(),
            ac: v,
            chain_violation: None,
        };
    }
    let c = k as u32 - 1;
    let all: Vec<usize> = (0..k).collect();
    let letters = letters.unwrap_or(&all);
    let firsts: Vec<(usize, Option<usize>)> = letters.iter().map(|&a| (a, t.first_excess(a, c))).collect();
    let b_forall = match firsts.iter().filter_map(|&(a, f)| f.map(|n| (n, a))).min() {
        Some((n, a)) => Verdict::fails_at(n, excess_witness(view, t, n, a, c)),
        None => view.holds(horizon),
    };
    let b_exists = if firsts.iter().any(|(_, f)| f.is_none()) {
        view.holds(horizon)
    } else {
        let (n, a) = firsts.iter().map(|&(a, f)| (f.unwrap(), a)).max().expect("non-empty");
        let mut w = excess_witness(view, t, n, a, c);
        w.summary = format!("every letter exceeds spread {c}; last to do so: {}", w.summary);
        Verdict::fails_at(n, w)
    };
    let ac = match (1..=horizon).find(|&n| t.ac(n) != k) {
        Some(n) => {
            let w = Witness::new(format!("AC({n}) = {}, expected {k}", t.ac(n))).count("AC", t.ac(n) as i64);
            if t.ac(n) > k {
                Verdict::fails_at(n, w)
            } else {
                Verdict::fails_at(n, w).non_monotone(view.saturated())
            }
        }
        None => view.holds(horizon),
    };
    let chain_violation = if ac.holds() && b_forall.fails() {
        Some("AC holds but B∀ fails".to_string())
    } else if b_forall.holds() && b_exists.fails() {
        Some("B∀ holds but B∃ fails".to_string())
    } else {
        None
    };
    BalanceVerdicts {
        b_forall,
        b_exists,
        ac,
        chain_violation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{Source, SubstitutionSpec, WordSpec};

    fn text(rules: &[(char, &str)], len: usize) -> (Vec<Symbol>, usize) {
        let p = WordSpec::new("t", Source::Substitution(SubstitutionSpec::new(rules, 'a')))
            .generate(len)
            .unwrap();
        let k = p.k();
        (p.symbols, k)
    }

    #[test]
    fn fibonacci_is_balanced() {
        let (s, k) = text(&[('a', "ab"), ('b', "a")], 100_000);
        let t = BalanceTable::compute(&s, k, 500);
        for n in 1..=500 {
            assert_eq!(t.ac(n), 2);
            assert!(t.spread(n, 0) <= 1 && t.spread(n, 1) <= 1);
        }
    }

    #[test]
    fn tribonacci_spreads_and_ac() {
        let (s, k) = text(&[('a', "ab"), ('b', "ac"), ('c', "a")], 100_000);
        let t = BalanceTable::compute(&s, k, 300);
        assert_eq!((0..3).map(|a| t.max_spread(a)).max(), Some(2));
        assert!(t.ac.iter().all(|&v| (3..=7).contains(&v)));
    }

    #[test]
    fn matches_brute_force_on_short_text() {
        let (s, k) = text(&[('a', "aab"), ('b', "c"), ('c', "ab")], 400);
        let t = BalanceTable::compute(&s, k, 60);
        for n in 1..=60 {
            let vecs: HashSet<Vec<usize>> = s.windows(n).map(|w| parikh(w, k)).collect();
            assert_eq!(t.ac(n), vecs.len());
            for a in 0..k {
                let lo = vecs.iter().map(|v| v[a]).min().unwrap() as u32;
                let hi = vecs.iter().map(|v| v[a]).max().unwrap() as u32;
                assert_eq!((t.min[n - 1][a], t.max[n - 1][a]), (lo, hi));
            }
        }
    }

    #[test]
    fn extreme_windows_attain_the_bounds() {
        let (s, k) = text(&[('a', "aab"), ('b', "c"), ('c', "ab")], 5000);
        let t = BalanceTable::compute(&s, k, 50);
        let n = t.first_excess(0, 2).expect("a-spread reaches 3");
        let (i, j) = t.extreme_windows(n, 0);
        let count = |p: usize| s[p..p + n].iter().filter(|&&c| c == 0).count() as u32;
        assert_eq!(count(j) - count(i), 3);
    }

    #[test]
    fn spill_path_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for k in [1usize, 2, 3, 5] {
            let s: Vec<Symbol> = (0..300)
                .map(|i| if i < 120 { 0 } else { rng.gen_range(0..k) as Symbol })
                .collect();
            let t = BalanceTable::compute(&s, k, 150);
            for n in 1..=150 {
                let vecs: HashSet<Vec<usize>> = s.windows(n).map(|w| parikh(w, k)).collect();
                assert_eq!(t.ac(n), vecs.len(), "k={k} n={n}");
            }
        }
    }
}
