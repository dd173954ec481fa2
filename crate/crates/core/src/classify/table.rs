//! The overview table of examples and its comparison with computed reports.

use super::PropertyReport;
use crate::verdict::Verdict;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Debug)]
pub struct Row {
    /// Fixture label the row is checked on.
    pub label: &'static str,
    pub word: &'static str,
    pub claims: &'static [(&'static str, bool)],
    /// Closed form of `C(n)`, checked for `n <= n_max` when present.
    pub complexity: Option<fn(usize) -> usize>,
    /// `C(n)` is claimed even; checked for `1 <= n <= n_max` since `C(0) = 1`.
    pub even_complexity: bool,
    /// The row may be skipped when its fixture is absent.
    pub optional: bool,
}

const fn row(label: &'static str, word: &'static str, claims: &'static [(&'static str, bool)]) -> Row {
    Row {
        label,
        word,
        claims,
        complexity: None,
        even_complexity: false,
        optional: false,
    }
}

fn billiard_complexity(n: usize) -> usize {
    n * n + n + 1
}

pub const TABLE: &[Row] = &[
    row(
        "finite_pals",
        "u0 = ab, u(n+1) = u(n) ab reverse(u(n))",
        &[("UR", true), ("CuR", true), ("infinite_palindromes", false)],
    ),
    row(
        "pals_not_closed",
        "u0 = ε, u(n+1) = u(n) ab c^(n+1) u(n)",
        &[("recurrent", true), ("infinite_palindromes", true), ("CuR", false)],
    ),
    row(
        "recoded_chacon",
        "a -> ab, b -> cab, c -> ccab",
        &[("C", true), ("BO", false), ("R", false)],
    ),
    row(
        "lrlr",
        "Fibonacci A -> AB, B -> A; then A -> a, B -> bc",
        &[
            ("LR", true),
            ("CuR", false),
            ("infinite_palindromes", false),
            ("C", false),
            ("R", false),
        ],
    ),
    row("bapest", "a -> aab, b -> ac, c -> a", &[("R", true), ("CuR", false)]),
    Row {
        even_complexity: true,
        ..row(
            "ter_R_not_C",
            "a -> acbca, b -> acbcadbdaca, c -> dbcbdacadbd, d -> dbcbd",
            &[("R", true), ("CuR", true), ("C", false), ("P", false)],
        )
    },
    row(
        "inf_pals_not_rec",
        "c a cc b ccc a cccc b ...",
        &[("infinite_palindromes", true), ("CuR", false), ("rich", false)],
    ),
    Row {
        complexity: Some(billiard_complexity),
        optional: true,
        ..row(
            "bo",
            "billiard sequence on three letters",
            &[("CuR", true), ("PE", true), ("C", false), ("rich", false)],
        )
    },
    row(
        "rovnost_bez_C",
        "a -> aab, b -> aac, c -> aa",
        &[("rich", true), ("C", false), ("P", false)],
    ),
    row(
        "ter_PE_not_C",
        "a -> aba, b -> cac, c -> aca",
        &[("CuR", true), ("PE", true), ("C", false), ("R", false)],
    ),
    row(
        "ter_P_not_PE",
        "A -> ABBABBA, B -> ABA; then A -> bc, B -> baa",
        &[("CuR", true), ("C", true), ("P", true), ("PE", false)],
    ),
    row("rich_bounded_comp", "(abcba)^ω", &[("rich", true), ("C", false)]),
    row(
        "C_Ret_not_Cur",
        "a -> aab, b -> ac, c -> a",
        &[("C", true), ("R", true), ("CuR", false)],
    ),
    row(
        "rich_non_pal_BS",
        "A -> CAC, B -> CACBD, C -> BDBCA, D -> BDB; then A -> ba, B -> b, C -> a, D -> abc",
        &[
            ("PE", true),
            ("C", true),
            ("CuR", true),
            ("rich", true),
            ("bs_palindromic", false),
        ],
    ),
    row("psi", "image of an aperiodic word under A -> abc, B -> acb", &[("AC", true)]),
    row(
        "Tribonacci",
        "a -> ab, b -> ac, c -> a",
        &[
            ("LR", true),
            ("BO", true),
            ("R", true),
            ("PE", true),
            ("B_forall", true),
            ("AC", false),
        ],
    ),
    row(
        "beta_coding",
        "a -> aab, b -> c, c -> ab",
        &[
            ("B_exists", true),
            ("B_forall", false),
            ("CuR", false),
            ("BO", true),
            ("LR", false),
            ("R", true),
        ],
    ),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub key: String,
    pub expected: bool,
    pub computed: String,
    pub ok: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Match,
    Mismatch,
    Skipped,
    Missing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowResult {
    pub label: String,
    pub word: String,
    pub status: RowStatus,
    pub cells: Vec<Cell>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TableReport {
    pub rows: Vec<RowResult>,
}

impl TableReport {
    pub fn ok(&self) -> bool {
        self.rows
            .iter()
            .all(|r| matches!(r.status, RowStatus::Match | RowStatus::Skipped))
    }

    pub fn missing(&self) -> Vec<&str> {
        self.rows
            .iter()
            .filter(|r| r.status == RowStatus::Missing)
            .map(|r| r.label.as_str())
            .collect()
    }

    /// Expected and computed values side by side.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let width = self.rows.iter().map(|r| r.label.len()).max().unwrap_or(5).max(5);
        for r in &self.rows {
            let status = match r.status {
                RowStatus::Match => "ok",
                RowStatus::Mismatch => "MISMATCH",
                RowStatus::Skipped => "skipped",
                RowStatus::Missing => "MISSING",
            };
            let _ = writeln!(s, "{:<width$}  {status:<8}  {}", r.label, r.word);
            for c in &r.cells {
                let want = if c.expected { "yes" } else { "no" };
                let mark = if c.ok { "" } else { "  <--" };
                let _ = writeln!(s, "{:<width$}    {:<22} expected {want:<3}  computed {}{mark}", "", c.key, c.computed);
            }
            for n in &r.notes {
                let _ = writeln!(s, "{:<width$}    note: {n}", "");
            }
        }
        s
    }
}

fn cell(report: &PropertyReport, key: &str, expected: bool) -> Cell {
    let (computed, ok) = match report.verdict(key) {
        Some(v) => (v.short(), v.as_bool() == Some(expected)),
        None => ("missing".into(), false),
    };
    Cell {
        key: key.into(),
        expected,
        computed,
        ok,
    }
}

fn even_cell(report: &PropertyReport) -> Cell {
    let c = &report.tables.complexity;
    let upto = report.horizon.n_max.min(c.len().saturating_sub(1));
    let bad = (1..=upto).find(|&n| c[n] % 2 == 1);
    let computed = match bad {
        Some(n) => format!("C({n}) = {} is odd", c[n]),
        None => format!("even for 1 <= n <= {upto}"),
    };
    Cell {
        key: "C(n) even".into(),
        expected: true,
        computed,
        ok: bad.is_none(),
    }
}

fn complexity_cell(report: &PropertyReport, f: fn(usize) -> usize) -> Cell {
    let c = &report.tables.complexity;
    let upto = report.horizon.n_max.min(c.len().saturating_sub(1));
    let bad = (0..=upto).find(|&n| c[n] != f(n));
    let computed = match bad {
        Some(n) => format!("C({n}) = {}, formula gives {}", c[n], f(n)),
        None => format!("matches for n <= {upto}"),
    };
    Cell {
        key: "C(n) closed form".into(),
        expected: true,
        computed,
        ok: bad.is_none(),
    }
}

/// Compares every row with the report of its fixture.
pub fn reproduce_table(reports: &BTreeMap<String, PropertyReport>) -> TableReport {
    let rows = TABLE
        .iter()
        .map(|row| {
            let Some(report) = reports.get(row.label) else {
                let (status, note) = if row.optional {
                    (RowStatus::Skipped, "fixture not supplied; row skipped")
                } else {
                    (RowStatus::Missing, "fixture missing")
                };
                return RowResult {
                    label: row.label.into(),
                    word: row.word.into(),
                    status,
                    cells: Vec::new(),
                    notes: vec![note.into()],
                };
            };
            let mut cells: Vec<Cell> = row.claims.iter().map(|&(k, e)| cell(report, k, e)).collect();
            if let Some(f) = row.complexity {
                cells.push(complexity_cell(report, f));
            }
            if row.even_complexity {
                cells.push(even_cell(report));
            }
            let mut notes: Vec<String> = cells
                .iter()
                .filter(|c| !c.ok)
                .filter_map(|c| match report.verdict(&c.key) {
                    Some(Verdict::Inconclusive { reason }) => Some(format!("{}: {reason}", c.key)),
                    Some(Verdict::FailsAt { witness, .. }) => Some(format!("{}: {}", c.key, witness.summary)),
                    _ => None,
                })
                .collect();
            if row.even_complexity {
                notes.push("C(0) = 1 is odd, so evenness is claimed and checked for n >= 1 only".into());
            }
            let status = if cells.iter().all(|c| c.ok) {
                RowStatus::Match
            } else {
                RowStatus::Mismatch
            };
            RowResult {
                label: row.label.into(),
                word: row.word.into(),
                status,
                cells,
                notes,
            }
        })
        .collect();
    TableReport { rows }
}

/// Like [`reproduce_table`], reporting fixtures that failed to load or
/// generate as mismatches.
pub fn reproduce_corpus(results: &BTreeMap<String, crate::error::Result<PropertyReport>>) -> TableReport {
    let reports = results
        .iter()
        .filter_map(|(k, r)| r.as_ref().ok().map(|r| (k.clone(), r.clone())))
        .collect();
    let mut t = reproduce_table(&reports);
    for row in &mut t.rows {
        if let Some(Err(e)) = results.get(&row.label) {
            row.status = RowStatus::Mismatch;
            row.notes = vec![format!("fixture failed: {e}")];
        }
    }
    t
}
