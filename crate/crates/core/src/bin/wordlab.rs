//! Command-line front end.
//!
//! Exit codes: 0 on success (possibly with warnings), 1 when a verification
//! finds a mismatch, 2 on usage, parse and generation errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use wordlab::classify::relations::verify_relations;
use wordlab::classify::table::reproduce_corpus;
use wordlab::classify::{HorizonConfig, HorizonOverride, PropertyReport};
use wordlab::factor::RauzyGraph;
use wordlab::io::{
    classify_corpus, complexity_csv, load_corpus, load_input, to_sorted_json, write_prefix, Fixture, FixtureInput,
    ResultCache,
};
use wordlab::palindrome::{palindromic_branches, PalindromeIndex};
use wordlab::returns::return_words;

#[derive(Parser)]
#[command(name = "wordlab", version, about = "Generate and analyse prefixes of infinite words")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Longest factor length the verdicts cover.
    #[arg(long, global = true)]
    n_max: Option<usize>,
    /// Largest prefix the saturation schedule may generate.
    #[arg(long, global = true)]
    prefix_cap: Option<usize>,
    /// Shortest prefix analysed once saturated.
    #[arg(long, global = true)]
    min_prefix: Option<usize>,
    /// Longest factor whose return words are counted.
    #[arg(long, global = true)]
    len_cap: Option<usize>,
    /// Longest window of the abelian tables.
    #[arg(long, global = true)]
    ac_cap: Option<usize>,
    /// Output file, or output directory for `analyze`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output formats, comma separated.
    #[arg(long, global = true, value_enum, value_delimiter = ',')]
    format: Vec<Format>,
    /// Worker threads for corpus commands (0: available parallelism).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a prefix of a word spec as a symbol file with JSON sidecar.
    Generate {
        /// Word spec or fixture file.
        spec: PathBuf,
        #[arg(long, short = 'l')]
        length: usize,
    },
    /// Classify one input and write its report, complexity CSV and Rauzy graphs.
    Analyze {
        /// Fixture, word spec or symbol file.
        input: PathBuf,
        /// Rauzy graph orders written with `--format dot`.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        rauzy_n: Vec<usize>,
    },
    /// Verdict summary for inputs and corpus directories.
    Classify {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Return words of the given factors.
    Returns {
        input: PathBuf,
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Palindromic branches cut at the given depth.
    Branches {
        input: PathBuf,
        #[arg(long, default_value_t = 20)]
        depth: usize,
    },
    /// Rauzy graph of order n.
    Rauzy {
        input: PathBuf,
        #[arg(long, short = 'n')]
        n: usize,
    },
    /// Compare a corpus with the table of examples.
    Reproduce { corpus: PathBuf },
    /// Check the implication diagram against a corpus.
    VerifyRelations { corpus: PathBuf },
}

enum Failure {
    Mismatch(String),
    Usage(String),
}

impl From<wordlab::Error> for Failure {
    fn from(e: wordlab::Error) -> Self {
        let mut msg = e.to_string();
        let mut src = std::error::Error::source(&e);
        while let Some(s) = src {
            msg.push_str(&format!(": {s}"));
            src = s.source();
        }
        Failure::Usage(msg)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let o = &cli.opts;
    match &cli.cmd {
        Cmd::Generate { spec, length } => generate(o, spec, *length),
        Cmd::Analyze { input, rauzy_n } => analyze_cmd(o, input, rauzy_n),
        Cmd::Classify { inputs } => classify_cmd(o, inputs),
        Cmd::Returns { input, factors } => returns_cmd(o, input, factors),
        Cmd::Branches { input, depth } => branches_cmd(o, input, *depth),
        Cmd::Rauzy { input, n } => rauzy_cmd(o, input, *n),
        Cmd::Reproduce { corpus } => reproduce_cmd(o, corpus),
        Cmd::VerifyRelations { corpus } => relations_cmd(o, corpus),
    }
}

impl Opts {
    fn horizon(&self) -> HorizonOverride {
        HorizonOverride {
            n_max: self.n_max,
            prefix_cap: self.prefix_cap,
            min_prefix: self.min_prefix,
            len_cap: self.len_cap,
            ac_cap: self.ac_cap,
        }
    }

    /// Flags take precedence over the fixture's own horizon.
    fn apply(&self, mut f: Fixture) -> Fixture {
        f.horizon = f.horizon.overlay(&self.horizon());
        f
    }

    fn wants(&self, f: Format, default: &[Format]) -> bool {
        if self.format.is_empty() {
            default.contains(&f)
        } else {
            self.format.contains(&f)
        }
    }

    fn emit(&self, text: &str) -> Outcome {
        match &self.out {
            Some(p) => write_file(p, text),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes()).map_err(wordlab::Error::from)?;
                Ok(())
            }
        }
    }
}

fn write_file(p: &Path, text: &str) -> Outcome {
    if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(wordlab::Error::from)?;
    }
    std::fs::write(p, text).map_err(wordlab::Error::from)?;
    Ok(())
}

fn cache() -> Result<Option<ResultCache>, Failure> {
    Ok(ResultCache::from_env()?)
}

fn input(o: &Opts, path: &Path) -> Result<Fixture, Failure> {
    Ok(o.apply(load_input(path)?))
}

fn report_for(f: &Fixture) -> Result<PropertyReport, Failure> {
    let base = HorizonConfig::default();
    let cache = cache()?;
    let key = f.key(&f.config(&base))?;
    if let Some(r) = cache.as_ref().and_then(|c| c.get(&key)) {
        return Ok(r);
    }
    let r = f.classify(&base)?;
    if let Some(c) = &cache {
        c.put(&key, &r)?;
    }
    Ok(r)
}

fn warn_inconclusive(r: &PropertyReport) {
    for w in r.inconclusive() {
        eprintln!("warning: {}: {w}", r.word);
    }
}

fn generate(o: &Opts, spec: &Path, length: usize) -> Outcome {
    let spec = match load_input(spec)?.input {
        FixtureInput::Spec(s) => s,
        FixtureInput::PrefixFile(p) => {
            return Err(Failure::Usage(format!("{} is not a word spec", p.display())));
        }
    };
    let prefix = spec.generate(length)?;
    match &o.out {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(wordlab::Error::from)?;
            }
            write_prefix(&prefix, p)?;
            Ok(())
        }
        None => o.emit(&format!("{}\n", prefix.text())),
    }
}

fn analyze_cmd(o: &Opts, path: &Path, rauzy_n: &[usize]) -> Outcome {
    let f = input(o, path)?;
    let dir = o.out.clone().unwrap_or_else(|| PathBuf::from("."));
    let default = [Format::Json, Format::Csv];
    let report = report_for(&f)?;
    if o.wants(Format::Json, &default) {
        write_file(&dir.join(format!("{}.report.json", f.label)), &to_sorted_json(&report)?)?;
    }
    if o.wants(Format::Csv, &default) {
        write_file(&dir.join(format!("{}.complexity.csv", f.label)), &complexity_csv(&report))?;
    }
    if o.wants(Format::Dot, &default) {
        let (view, _) = f.view(&HorizonConfig::default())?;
        for &n in rauzy_n {
            if n > view.n_max() {
                return Err(Failure::Usage(format!("Rauzy order {n} exceeds n_max {}", view.n_max())));
            }
            let dot = RauzyGraph::build(&view, n).to_dot(&view, &f.label);
            write_file(&dir.join(format!("{}.rauzy{n}.dot", f.label)), &dot)?;
        }
    }
    for (k, v) in &report.verdicts {
        eprintln!("{:<22} {}", k, v.short());
    }
    warn_inconclusive(&report);
    Ok(())
}

fn classify_cmd(o: &Opts, inputs: &[PathBuf]) -> Outcome {
    let mut fixtures = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let c = load_corpus(p)?;
            for n in &c.notices {
                eprintln!("notice: {n}");
            }
            if let Some((label, e)) = c.broken.iter().next() {
                return Err(Failure::Usage(format!("fixture {label}: {e}")));
            }
            fixtures.extend(c.fixtures.into_iter().map(|f| o.apply(f)));
        } else {
            fixtures.push(input(o, p)?);
        }
    }
    let results = classify_corpus(&fixtures, &HorizonConfig::default(), cache()?.as_ref(), o.jobs)?;
    let mut reports = BTreeMap::new();
    for (label, r) in results {
        reports.insert(label, r?);
    }
    for r in reports.values() {
        warn_inconclusive(r);
    }
    if o.wants(Format::Csv, &[Format::Json]) {
        let mut s = String::from("word,property,verdict\n");
        for (label, r) in &reports {
            for (k, v) in &r.verdicts {
                s.push_str(&format!("{label},{k},{}\n", v.short()));
            }
        }
        return o.emit(&s);
    }
    let summary: BTreeMap<&String, BTreeMap<&String, String>> = reports
        .iter()
        .map(|(l, r)| (l, r.verdicts.iter().map(|(k, v)| (k, v.short())).collect()))
        .collect();
    o.emit(&to_sorted_json(&summary)?)
}

fn returns_cmd(o: &Opts, path: &Path, factors: &[String]) -> Outcome {
    let f = input(o, path)?;
    let (view, _) = f.view(&HorizonConfig::default())?;
    let profiles = factors
        .iter()
        .map(|w| return_words(&view, w))
        .collect::<wordlab::Result<Vec<_>>>()?;
    if o.wants(Format::Csv, &[Format::Json]) {
        let mut s = String::from("factor,return_word,complete_return_word\n");
        for p in &profiles {
            for (r, c) in p.returns.iter().zip(&p.complete_returns) {
                s.push_str(&format!("{},{r},{c}\n", p.factor));
            }
        }
        return o.emit(&s);
    }
    let by_factor: BTreeMap<&str, serde_json::Value> = profiles
        .iter()
        .map(|p| {
            let v = json!({
                "returns": p.returns,
                "complete_returns": p.complete_returns,
                "occurrences": p.occurrences.len(),
                "max_gap": p.max_gap,
            });
            (p.factor.as_str(), v)
        })
        .collect();
    o.emit(&to_sorted_json(&json!({ "word": f.label, "prefix_length": view.len(), "factors": by_factor }))?)
}

fn branches_cmd(o: &Opts, path: &Path, depth: usize) -> Outcome {
    let f = input(o, path)?;
    let (view, _) = f.view(&HorizonConfig::default())?;
    let index = PalindromeIndex::build(&view);
    let branches = palindromic_branches(&view, &index, depth)?;
    if o.wants(Format::Json, &[Format::Csv]) {
        return o.emit(&to_sorted_json(&json!({ "word": f.label, "depth": depth, "branches": branches }))?);
    }
    let mut s = String::from("center,half\n");
    for b in &branches {
        let c = b.center.map(String::from).unwrap_or_default();
        s.push_str(&format!("{c},{}\n", b.half));
    }
    o.emit(&s)
}

fn rauzy_cmd(o: &Opts, path: &Path, n: usize) -> Outcome {
    let f = input(o, path)?;
    let (view, _) = f.view(&HorizonConfig::default())?;
    if n > view.n_max() {
        return Err(Failure::Usage(format!("order {n} exceeds n_max {}", view.n_max())));
    }
    let g = RauzyGraph::build(&view, n);
    if o.wants(Format::Json, &[Format::Dot]) {
        let v = json!({
            "word": f.label,
            "n": n,
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "strongly_connected": g.strongly_connected(),
        });
        return o.emit(&to_sorted_json(&v)?);
    }
    o.emit(&g.to_dot(&view, &f.label))
}

fn corpus_results(
    o: &Opts,
    dir: &Path,
) -> Result<BTreeMap<String, wordlab::Result<PropertyReport>>, Failure> {
    let c = load_corpus(dir)?;
    for n in &c.notices {
        eprintln!("notice: {n}");
    }
    let fixtures: Vec<Fixture> = c.fixtures.into_iter().map(|f| o.apply(f)).collect();
    let mut results = classify_corpus(&fixtures, &HorizonConfig::default(), cache()?.as_ref(), o.jobs)?;
    for (label, e) in c.broken {
        results.insert(label.clone(), Err(wordlab::Error::Parse { path: label, message: e }));
    }
    Ok(results)
}

fn reproduce_cmd(o: &Opts, dir: &Path) -> Outcome {
    let results = corpus_results(o, dir)?;
    let table = reproduce_corpus(&results);
    if o.wants(Format::Json, &[]) {
        o.emit(&to_sorted_json(&table)?)?;
    } else {
        print!("{}", table.render());
    }
    let missing = table.missing();
    if !missing.is_empty() {
        return Err(Failure::Usage(format!("missing fixtures: {}", missing.join(", "))));
    }
    if !table.ok() {
        let bad: Vec<&str> = table
            .rows
            .iter()
            .filter(|r| r.status == wordlab::classify::table::RowStatus::Mismatch)
            .map(|r| r.label.as_str())
            .collect();
        return Err(Failure::Mismatch(format!("rows differ: {}", bad.join(", "))));
    }
    Ok(())
}

fn relations_cmd(o: &Opts, dir: &Path) -> Outcome {
    let results = corpus_results(o, dir)?;
    let mut reports = BTreeMap::new();
    for (label, r) in results {
        match r {
            Ok(r) => {
                reports.insert(label, r);
            }
            Err(e) => eprintln!("warning: {label} left out: {e}"),
        }
    }
    let m = verify_relations(&reports)?;
    if o.wants(Format::Csv, &[]) {
        o.emit(&m.to_csv())?;
    } else if o.wants(Format::Json, &[]) {
        o.emit(&to_sorted_json(&m)?)?;
    }
    print!("{}", m.summary());
    if !m.ok() {
        return Err(Failure::Mismatch(format!(
            "{} red flag(s), {} unwitnessed non-implication(s), {} Sturmian mismatch(es)",
            m.red_flags.len(),
            m.unwitnessed.len(),
            m.sturmian.len()
        )));
    }
    Ok(())
}
