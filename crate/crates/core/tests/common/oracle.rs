//! Engines against brute-force references.

use super::naive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use wordlab::abelian::BalanceTable;
use wordlab::factor::RauzyGraph;
use wordlab::palindrome::{pext_mask, PalindromeIndex};
use wordlab::returns::{ReturnScan, MAX_RETURNS};
use wordlab::{Alphabet, FinitePrefix, LanguageView};

pub const N_MAX: usize = 10;
pub const PAL_PREFIX: usize = 700;
pub const AC_CAP: usize = 200;

fn mask_set(m: u32) -> BTreeSet<u8> {
    (0..32).filter(|a| m >> a & 1 == 1).collect()
}

/// Uniform, repetitive or substitutive words over `k` letters.
pub fn random_word(k: usize, len: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w: Vec<u8> = match seed % 3 {
        0 => (0..len).map(|_| rng.gen_range(0..k as u8)).collect(),
        1 => {
            let block: Vec<u8> = (0..rng.gen_range(1..=12)).map(|_| rng.gen_range(0..k as u8)).collect();
            let mut w: Vec<u8> = block.iter().copied().cycle().take(len).collect();
            for _ in 0..rng.gen_range(0..4) {
                let i = rng.gen_range(0..len);
                w[i] = rng.gen_range(0..k as u8);
            }
            w
        }
        _ => {
            let images: Vec<Vec<u8>> = (0..k)
                .map(|_| (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..k as u8)).collect())
                .collect();
            let mut w = vec![rng.gen_range(0..k as u8)];
            while w.len() < len {
                let next: Vec<u8> = w.iter().flat_map(|&c| images[c as usize].clone()).collect();
                if next.len() <= w.len() {
                    w.extend(next);
                    w.push(rng.gen_range(0..k as u8));
                } else {
                    w = next;
                }
            }
            w
        }
    };
    w.truncate(len);
    w
}

pub fn prefix_of(symbols: &[u8], k: usize) -> FinitePrefix {
    let alphabet = Alphabet::new((0..k).map(|i| (b'a' + i as u8) as char)).unwrap();
    let text = alphabet.decode(symbols);
    let mut p = FinitePrefix::from_text("w", &text).unwrap();
    // Keep letters absent from the text in the alphabet.
    p.alphabet = alphabet.clone();
    p.symbols = symbols.to_vec();
    p
}

fn check_factor_engine(view: &LanguageView, t: &[u8], k: usize) {
    let sets = naive::FactorSets::new(t, view.depth());
    for n in 0..=view.depth() {
        assert_eq!(view.c(n), naive::complexity(t, n), "C({n})");
    }
    for n in 0..=view.n_max().min(t.len()) {
        let mut ls = BTreeSet::new();
        let mut rs = BTreeSet::new();
        for w in naive::factors(t, n) {
            let id = view.find(&w).expect("factor indexed");
            assert_eq!(view.symbols_of(id), &w[..]);
            let l = sets.left_ext(&w, k);
            let r = sets.right_ext(&w, k);
            assert_eq!(mask_set(view.lext_mask(id)), l, "Lext {w:?}");
            assert_eq!(mask_set(view.rext_mask(id)), r, "Rext {w:?}");
            assert_eq!(view.bext_count(id) as usize, sets.bi_ext(&w, k).len(), "Bext {w:?}");
            assert_eq!(view.bilateral_order(id), sets.bilateral_order(&w, k), "b({w:?})");
            let occ = naive::occurrences(t, &w);
            if !w.is_empty() {
                assert_eq!(view.first_occurrence(id), occ[0], "first occurrence of {w:?}");
                assert_eq!(view.occurrence_count(id), occ.len(), "occurrences of {w:?}");
            }
            if l.len() >= 2 {
                ls.insert(w.clone());
            }
            if r.len() >= 2 {
                rs.insert(w.clone());
            }
        }
        let sp = view.specials(n);
        let got = |ids: &[u32]| ids.iter().map(|&i| view.symbols_of(i).to_vec()).collect::<BTreeSet<_>>();
        assert_eq!(got(&sp.ls), ls, "LS of length {n}");
        assert_eq!(got(&sp.rs), rs, "RS of length {n}");
        assert_eq!(got(&sp.bs), ls.intersection(&rs).cloned().collect(), "BS of length {n}");
        if n < view.n_max() {
            let g = RauzyGraph::build(view, n);
            assert_eq!(g.vertex_count(), naive::complexity(t, n));
            let edges: BTreeSet<_> = g
                .graph
                .edge_indices()
                .map(|e| {
                    let (s, d) = g.graph.edge_endpoints(e).unwrap();
                    let text = |i: u32| view.symbols_of(i).to_vec();
                    (text(g.graph[s]), text(g.graph[d]), text(g.graph[e]))
                })
                .collect();
            assert_eq!(g.edge_count(), edges.len());
            assert_eq!(edges, naive::rauzy_edges(t, n), "edges of the Rauzy graph of order {n}");
        }
    }
}

fn check_palindromes(view: &LanguageView, t: &[u8], k: usize) {
    let sets = naive::FactorSets::new(t, view.depth());
    let index = PalindromeIndex::build(view);
    let p = index.complexity(view);
    for (n, &pn) in p.iter().enumerate() {
        assert_eq!(pn, naive::palindromic_complexity(t, n), "P({n})");
    }
    let cut = t.len().min(PAL_PREFIX);
    let counts = naive::palindrome_prefix_counts(&t[..cut]);
    let got: Vec<usize> = index.tree.prefix_counts()[..=cut].iter().map(|&c| c as usize).collect();
    assert_eq!(got, counts, "palindromes per prefix");
    if cut == t.len() {
        assert_eq!(index.tree.distinct(), counts[cut]);
    }
    for n in 0..=view.n_max().min(t.len()) {
        for w in naive::factors(t, n).into_iter().filter(|w| naive::is_palindrome(w)) {
            let id = view.find(&w).unwrap();
            assert_eq!(mask_set(pext_mask(view, id)), sets.pal_ext(&w, k), "Pext {w:?}");
        }
    }
}

fn check_returns(view: &LanguageView, t: &[u8], cap: usize) {
    let scan = ReturnScan::new(view, cap);
    for n in 1..=scan.cap.min(t.len()) {
        for w in naive::factors(t, n) {
            let id = view.find(&w).unwrap();
            let s = scan.stats(id);
            let occ = naive::occurrences(t, &w);
            assert_eq!(s.occurrences as usize, occ.len());
            let gap = occ.windows(2).map(|p| p[1] - p[0]).max().unwrap_or(0);
            assert_eq!(s.max_gap as usize, gap, "largest gap of {w:?}");
            let want = naive::return_words(t, &w);
            let got: BTreeSet<Vec<u8>> = scan.returns(view, id).iter().map(|r| r.to_vec()).collect();
            if want.len() > MAX_RETURNS {
                assert!(s.overflow, "overflow of {w:?}");
                assert_eq!(got.len(), MAX_RETURNS);
                assert!(got.is_subset(&want));
            } else {
                assert!(!s.overflow);
                assert_eq!(got, want, "returns of {w:?}");
            }
        }
    }
}

fn check_abelian(t: &[u8], k: usize) {
    let table = BalanceTable::compute(t, k, AC_CAP);
    assert_eq!(table.max_n, AC_CAP.min(t.len()));
    for n in 1..=table.max_n {
        let (lo, hi, ac) = naive::abelian(t, k, n);
        assert_eq!(table.min[n - 1], lo, "minima at n = {n}");
        assert_eq!(table.max[n - 1], hi, "maxima at n = {n}");
        assert_eq!(table.ac(n), ac, "AC({n})");
    }
}

/// Every engine against its reference on `t` over `k` letters.
pub fn check_all(t: &[u8], k: usize) {
    let view = LanguageView::build_unguarded(prefix_of(t, k), N_MAX);
    check_factor_engine(&view, t, k);
    check_palindromes(&view, t, k);
    check_returns(&view, t, N_MAX);
    check_abelian(t, k);
}
