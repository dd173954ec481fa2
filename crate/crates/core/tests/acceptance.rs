//! Acceptance battery. Prints one PASS or FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use common::naive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::{Duration, Instant};
use wordlab::abelian::BalanceTable;
use wordlab::classify::relations::verify_relations;
use wordlab::classify::{analyze, view_for, HorizonConfig, PropertyReport};
use wordlab::io::{classify_corpus, Fixture, ResultCache, CACHE_ENV};
use wordlab::palindrome::{palindromic_branches, Eertree, PalindromeIndex};
use wordlab::returns::{return_words, ReturnScan};
use wordlab::source::{Source, SubstitutionSpec};
use wordlab::{LanguageView, WordSpec};

/// Failed expectations of one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
}

impl Check {
    fn ensure(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }
}

fn base() -> HorizonConfig {
    HorizonConfig::default()
}

fn fixture_view(label: &str, cfg: &HorizonConfig) -> (Fixture, LanguageView, HorizonConfig) {
    let f = common::fixture(label);
    let (view, _) = f.view(cfg).expect("fixture indexes");
    let cfg = f.config(cfg);
    (f, view, cfg)
}

fn specials_per_length(c: &mut Check, view: &LanguageView, ls: usize, rs: usize) {
    for n in 0..=view.n_max() {
        let sp = view.specials(n);
        c.ensure(sp.ls.len() == ls && sp.rs.len() == rs, || {
            format!("length {n}: {} LS, {} RS", sp.ls.len(), sp.rs.len())
        });
    }
}

fn returns_exactly(c: &mut Check, view: &LanguageView, up_to: usize, count: usize) {
    let scan = ReturnScan::new(view, up_to);
    for n in 1..=up_to {
        for &w in view.factors(n) {
            let s = scan.stats(w);
            c.ensure(!s.overflow && s.return_count() == count, || {
                format!("'{}' has {} return words", view.text_of(w), s.return_count())
            });
        }
    }
}

fn defect_zero(c: &mut Check, view: &LanguageView) {
    let t = Eertree::build(view.symbols(), view.k());
    let bad = t.prefix_counts().iter().enumerate().find(|&(i, &p)| p as usize != i + 1);
    c.ensure(bad.is_none(), || format!("prefix of length {} is not rich", bad.unwrap().0));
}

fn sturmian_battery() -> Check {
    let mut c = Check::default();
    let (_, view, cfg) = fixture_view("fibonacci", &base());
    c.ensure(view.len() >= 1_000_000 && view.n_max() == 100, || {
        format!("prefix {} with n_max {}", view.len(), view.n_max())
    });
    for n in 0..=view.n_max() + 2 {
        c.ensure(view.c(n) == n + 1, || format!("C({n}) = {}", view.c(n)));
    }
    specials_per_length(&mut c, &view, 1, 1);
    for n in 0..=view.n_max() {
        for w in view.specials(n).bs {
            c.ensure(view.bilateral_order(w) == 0, || format!("'{}' is not ordinary", view.text_of(w)));
        }
    }
    returns_exactly(&mut c, &view, 30, 2);
    let index = PalindromeIndex::build(&view);
    for (n, &p) in index.complexity(&view).iter().enumerate() {
        c.ensure(p == 1 + n % 2, || format!("P({n}) = {p}"));
    }
    let report = analyze(&view, &cfg);
    for key in ["C", "PE", "B_forall", "rich", "R", "LR", "BO"] {
        c.ensure(report.holds(key), || format!("{key}: {}", report.verdicts[key].short()));
    }
    let balance = BalanceTable::from_view(&view, cfg.ac_cap);
    for a in 0..2 {
        c.ensure(balance.max_spread(a) <= 1, || format!("spread of letter {a} reaches {}", balance.max_spread(a)));
    }
    for n in 1..=balance.max_n {
        c.ensure(balance.ac(n) == 2, || format!("AC({n}) = {}", balance.ac(n)));
    }
    defect_zero(&mut c, &view);
    match palindromic_branches(&view, &index, 40) {
        Ok(b) => c.ensure(b.len() == 3, || format!("{} branches at depth 40", b.len())),
        Err(e) => c.ensure(false, || e.to_string()),
    }
    c
}

fn tribonacci() -> Check {
    let mut c = Check::default();
    let (_, view, cfg) = fixture_view("Tribonacci", &base());
    for n in 0..=100 {
        c.ensure(view.c(n) == 2 * n + 1, || format!("C({n}) = {}", view.c(n)));
    }
    returns_exactly(&mut c, &view, 25, 3);
    let p = PalindromeIndex::build(&view).complexity(&view);
    for n in 0..p.len() - 1 {
        c.ensure(p[n] + p[n + 1] == 4, || format!("P({n}) + P({}) = {}", n + 1, p[n] + p[n + 1]));
    }
    let report = analyze(&view, &cfg);
    c.ensure(report.holds("PE"), || format!("PE: {}", report.verdicts["PE"].short()));
    let balance = BalanceTable::from_view(&view, cfg.ac_cap);
    for a in 0..3 {
        c.ensure(balance.max_spread(a) <= 2, || format!("spread of letter {a} reaches {}", balance.max_spread(a)));
    }
    let values: BTreeSet<usize> = (1..=balance.max_n).map(|n| balance.ac(n)).collect();
    c.ensure(values == BTreeSet::from([3, 4, 5, 6, 7]), || {
        format!("AC values {values:?} up to {}", balance.max_n)
    });
    c
}

fn chacon() -> Check {
    let mut c = Check::default();
    let (_, view, _) = fixture_view("recoded_chacon", &base());
    for n in 0..=100 {
        c.ensure(view.c(n) == 2 * n + 1, || format!("C({n}) = {}", view.c(n)));
    }
    match return_words(&view, "bc") {
        Ok(p) => {
            let got: BTreeSet<&str> = p.returns.iter().map(String::as_str).collect();
            let want = BTreeSet::from(["bca", "bcca", "bcaba", "bccaba"]);
            c.ensure(got == want, || format!("R(bc) = {got:?}"));
        }
        Err(e) => c.ensure(false, || e.to_string()),
    }
    let mut strong = None;
    let mut weak = None;
    for n in 0..=view.n_max() {
        for w in view.specials(n).bs {
            let b = view.bilateral_order(w);
            if b > 0 && strong.is_none() {
                strong = Some(w);
            }
            if b < 0 && weak.is_none() {
                weak = Some(w);
            }
        }
    }
    c.ensure(strong.is_some(), || "no strong bispecial factor".into());
    c.ensure(weak.is_some(), || "no weak bispecial factor".into());
    // Recount the bilateral orders from scratch.
    let longest = [strong, weak].iter().flatten().map(|&w| view.len_of(w)).max().unwrap_or(0);
    let sets = naive::FactorSets::new(view.symbols(), longest + 2);
    for (w, sign) in [(strong, 1), (weak, -1)] {
        if let Some(w) = w {
            let b = sets.bilateral_order(view.symbols_of(w), view.k());
            c.ensure(b.signum() == sign && b == view.bilateral_order(w), || {
                format!("'{}': b = {b} by direct count", view.text_of(w))
            });
        }
    }
    c
}

fn richness() -> Check {
    let mut c = Check::default();
    let p = common::spec("inf_pals_not_rec").generate(9).unwrap();
    c.ensure(p.text() == "caccbccca", || format!("prefix {}", p.text()));
    let t = Eertree::build(&p.symbols, p.k());
    c.ensure(t.distinct() == 9, || format!("{} distinct palindromes", t.distinct()));
    c.ensure(naive::palindromes_first_end(&p.symbols).len() + 1 == 9, || "direct count differs".into());

    let (_, view, _) = fixture_view("rich_bounded_comp", &base());
    defect_zero(&mut c, &view);

    let (_, view, cfg) = fixture_view("rovnost_bez_C", &base());
    let report = analyze(&view, &cfg);
    let rows = &report.tables.fac_pal;
    c.ensure(rows.len() == 101, || format!("{} rows", rows.len()));
    for r in rows {
        c.ensure(r.slack == 0, || format!("slack {} at n = {}", r.slack, r.n));
    }
    c
}

fn balance_fixture() -> Check {
    let mut c = Check::default();
    let cfg = HorizonConfig {
        min_prefix: 1_000_000,
        ..base()
    };
    let (_, view, cfg) = fixture_view("beta_coding", &cfg);
    c.ensure(view.len() >= 1_000_000, || format!("prefix {}", view.len()));
    let balance = BalanceTable::from_view(&view, cfg.ac_cap);
    for a in [1, 2] {
        c.ensure(balance.max_spread(a) <= 2, || format!("spread of letter {a} reaches {}", balance.max_spread(a)));
    }
    c.ensure(balance.max_spread(0) == 3, || format!("spread of a reaches {}", balance.max_spread(0)));
    let report = analyze(&view, &cfg);
    c.ensure(report.holds("B_exists"), || format!("B_exists: {}", report.verdicts["B_exists"].short()));
    let forall = &report.verdicts["B_forall"];
    match forall.witness() {
        Some(w) if forall.fails() && w.factors.len() == 2 => {
            let (u, v) = (&w.factors[0], &w.factors[1]);
            let count = |s: &str| s.chars().filter(|&x| x == 'a').count() as i64;
            c.ensure(u.len() == v.len() && (count(u) - count(v)).abs() > 2, || {
                format!("witness pair {u}, {v} is not unbalanced")
            });
            c.ensure(view.find_str(u).is_some() && view.find_str(v).is_some(), || "witness not a factor".into());
        }
        _ => c.ensure(false, || format!("B_forall: {}", forall.short())),
    }
    c
}

fn complexity_three() -> Check {
    let mut c = Check::default();
    let spec = WordSpec::new(
        "aba_bb",
        Source::Substitution(SubstitutionSpec::new(&[('a', "aba"), ('b', "bb")], 'a')),
    );
    let cfg = HorizonConfig {
        n_max: 10,
        min_prefix: 1 << 14,
        ..base()
    };
    let (view, _) = view_for(&spec, &cfg).unwrap();
    c.ensure(view.c(3) == 5, || format!("C(3) = {}", view.c(3)));
    let direct = naive::complexity(view.symbols(), 3);
    c.ensure(direct == 5, || format!("direct count gives {direct}"));
    c
}

fn identity_suite() -> Check {
    use common::identities::{check_counts, check_palindrome_bound, check_parity};
    let c = Check::default();
    let mut parity = 0;
    for f in common::fixtures() {
        let (view, _) = f.view(&base()).unwrap();
        check_counts(&view, &f.label);
        check_palindrome_bound(&view, &f.label);
        parity += check_parity(&view, &f.label);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let k = rng.gen_range(1..=4);
        let len = rng.gen_range(1..=800);
        let t = common::oracle::random_word(k, len, rng.gen());
        let view = LanguageView::build_unguarded(common::oracle::prefix_of(&t, k), rng.gen_range(1..12));
        check_counts(&view, "random word");
        check_palindrome_bound(&view, "random word");
    }
    assert!(parity > 0);
    c
}

fn oracle() -> Check {
    let c = Check::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let k = rng.gen_range(1..=4);
        let len = rng.gen_range(1..=2000);
        let t = common::oracle::random_word(k, len, rng.gen());
        common::oracle::check_all(&t, k);
    }
    for f in common::fixtures() {
        let p = common::fixture_prefix(&f, 2000);
        common::oracle::check_all(&p.symbols, p.k());
    }
    c
}

fn reproduce(cache: &std::path::Path) -> Check {
    let mut c = Check::default();
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_wordlab"))
        .arg("reproduce")
        .arg(common::fixtures_dir())
        .env(CACHE_ENV, cache)
        .output()
        .expect("binary runs");
    let took = start.elapsed();
    c.ensure(out.status.code() == Some(0), || {
        format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    });
    let table = String::from_utf8_lossy(&out.stdout);
    c.ensure(!table.contains("MISMATCH"), || table.to_string());
    c.ensure(took <= Duration::from_secs(600), || format!("took {took:?}"));
    c
}

fn relations(cache: &std::path::Path) -> Check {
    let mut c = Check::default();
    let cache = ResultCache::new(cache).unwrap();
    let results = classify_corpus(&common::fixtures(), &base(), Some(&cache), 0).unwrap();
    let reports: BTreeMap<String, PropertyReport> = results
        .into_iter()
        .map(|(l, r)| (l, r.expect("fixture classifies")))
        .collect();
    let m = verify_relations(&reports).unwrap();
    c.ensure(m.red_flags.is_empty(), || format!("red flags: {:?}", m.red_flags));
    c.ensure(m.unwitnessed.is_empty(), || format!("unwitnessed: {:?}", m.unwitnessed));
    c.ensure(m.sturmian.is_empty(), || format!("Sturmian disagreements: {:?}", m.sturmian));
    c
}

fn run(id: usize, name: &str, f: impl FnOnce() -> Check + std::panic::UnwindSafe) -> (usize, String, bool) {
    let start = Instant::now();
    let result = std::panic::catch_unwind(f);
    let secs = start.elapsed().as_secs_f64();
    let (ok, detail) = match result {
        Ok(c) if c.failures.is_empty() => (true, String::new()),
        Ok(c) => (false, c.failures.join("; ")),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            (false, msg)
        }
    };
    let status = if ok { "PASS" } else { "FAIL" };
    let mut line = format!("{status} {id:>2} {name} ({secs:.1} s)");
    if !ok {
        line.push_str(": ");
        line.push_str(&detail);
    }
    (id, line, ok)
}

fn main() {
    let cache = tempfile::tempdir().unwrap();
    let dir = cache.path().to_path_buf();
    let dir2 = dir.clone();
    // The table runs uncached first so its wall time is honest; the
    // relation matrix then reads the reports it stored.
    let mut results = vec![
        run(1, "Sturmian battery on the Fibonacci word", sturmian_battery),
        run(2, "Tribonacci word", tribonacci),
        run(3, "Chacon recoding", chacon),
        run(4, "richness fixtures", richness),
        run(5, "balance fixture a -> aab, b -> c, c -> ab", balance_fixture),
        run(6, "C(3) of a -> aba, b -> bb", complexity_three),
        run(7, "identity suite", identity_suite),
        run(8, "brute-force oracle", oracle),
        run(10, "table reproduction", move || reproduce(&dir)),
        run(9, "relation matrix", move || relations(&dir2)),
    ];
    results.sort_by_key(|r| r.0);
    for (_, line, _) in &results {
        println!("{line}");
    }
    let failed = results.iter().filter(|r| !r.2).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
