//! Known implications and non-implications between the properties, checked
//! against a corpus of reports.

use super::PropertyReport;
use crate::error::{Error, Result};
use crate::verdict::Verdict;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity {
    Implication,
    NonImplication,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationRule {
    pub id: &'static str,
    pub hypotheses: &'static [&'static str],
    /// Alphabet size the rule is restricted to.
    pub alphabet: Option<usize>,
    pub conclusion: &'static str,
    pub polarity: Polarity,
    /// Fixtures expected to witness a non-implication.
    pub witnesses: &'static [&'static str],
}

const fn imp(id: &'static str, hypotheses: &'static [&'static str], conclusion: &'static str) -> RelationRule {
    RelationRule {
        id,
        hypotheses,
        alphabet: None,
        conclusion,
        polarity: Polarity::Implication,
        witnesses: &[],
    }
}

const fn imp3(id: &'static str, hypotheses: &'static [&'static str], conclusion: &'static str) -> RelationRule {
    RelationRule {
        alphabet: Some(3),
        ..imp(id, hypotheses, conclusion)
    }
}

const fn non(
    id: &'static str,
    hypotheses: &'static [&'static str],
    conclusion: &'static str,
    witnesses: &'static [&'static str],
) -> RelationRule {
    RelationRule {
        id,
        hypotheses,
        alphabet: None,
        conclusion,
        polarity: Polarity::NonImplication,
        witnesses,
    }
}

/// Fixtures whose absence is tolerated.
pub const OPTIONAL_FIXTURES: &[&str] = &["bo"];

pub const RULES: &[RelationRule] = &[
    imp("BO => C", &["BO"], "C"),
    imp("AC => B_forall", &["AC"], "B_forall"),
    imp("B_forall => B_exists", &["B_forall"], "B_exists"),
    imp("UR + BO => R", &["UR", "BO"], "R"),
    imp3("UR + 3 letters + R => BO", &["UR", "R"], "BO"),
    imp("no weak BS + UR + C => R", &["no_weak_bs", "UR", "C"], "R"),
    imp("no weak BS + R => C", &["no_weak_bs", "R"], "C"),
    imp("R => recurrent", &["R"], "recurrent"),
    imp3("CuR + 3 letters + C => P", &["CuR", "C"], "P"),
    imp3("CuR + 3 letters + BO => PE", &["CuR", "BO"], "PE"),
    imp3("CuR + 3 letters + R => PE", &["CuR", "R"], "PE"),
    imp3("CuR + 3 letters + C => rich", &["CuR", "C"], "rich"),
    imp("CuR + C + PE => BO", &["CuR", "C", "PE"], "BO"),
    imp("CuR + C + BO => PE", &["CuR", "C", "BO"], "PE"),
    imp("CuR + BO => rich", &["CuR", "BO"], "rich"),
    imp("CuR + P + C => rich", &["CuR", "P", "C"], "rich"),
    imp("CuR + C + P => BO_p", &["CuR", "C", "P"], "BO_p"),
    imp("CuR + C + BO_p => P", &["CuR", "C", "BO_p"], "P"),
    imp("CuR + C + rich => P", &["CuR", "C", "rich"], "P"),
    imp("CuR + rich => BO_p", &["CuR", "rich"], "BO_p"),
    imp("CuR + BO_p => rich", &["CuR", "BO_p"], "rich"),
    imp("CuR + rich => fac_pal_equality", &["CuR", "rich"], "fac_pal_equality"),
    imp("CuR + fac_pal_equality => rich", &["CuR", "fac_pal_equality"], "rich"),
    imp("CuR => parity_law", &["CuR"], "parity_law"),
    imp("UR + C + PE => R", &["UR", "C", "PE"], "R"),
    imp("UR + PE + rich => R", &["UR", "PE", "rich"], "R"),
    imp("UR + PE + R => rich", &["UR", "PE", "R"], "rich"),
    imp("PE => P", &["PE"], "P"),
    imp("PE => infinite_palindromes", &["PE"], "infinite_palindromes"),
    imp("UR + infinite_palindromes => CuR", &["UR", "infinite_palindromes"], "CuR"),
    imp("rich => pal_returns", &["rich"], "pal_returns"),
    imp("pal_returns => rich", &["pal_returns"], "rich"),
    imp("rich => lpp_lps", &["rich"], "lpp_lps"),
    non("C =/=> BO", &["C"], "BO", &["recoded_chacon"]),
    non("C =/=> R", &["C"], "R", &["ter_not_R"]),
    non("LR =/=> CuR", &["LR"], "CuR", &["lrlr"]),
    non("LR =/=> C", &["LR"], "C", &["lrlr"]),
    non("LR =/=> BO", &["LR"], "BO", &["lrlr"]),
    non("LR =/=> R", &["LR"], "R", &["lrlr"]),
    non("LR =/=> P", &["LR"], "P", &["lrlr"]),
    non("LR =/=> PE", &["LR"], "PE", &["lrlr"]),
    non("BO =/=> LR", &["BO"], "LR", &["beta_coding"]),
    non("R =/=> P", &["R"], "P", &["bapest"]),
    RelationRule {
        alphabet: Some(4),
        ..non("4 letters: R =/=> BO", &["R"], "BO", &["ter_R_not_C"])
    },
    non("PE =/=> CuR", &["PE"], "CuR", &["inf_pals_not_rec"]),
    non("PE =/=> rich", &["PE"], "rich", &["inf_pals_not_rec", "bo"]),
    non("PE =/=> C", &["PE"], "C", &["ter_PE_not_C", "bo"]),
    non("PE =/=> R", &["PE"], "R", &["no_Ret"]),
    non("rich =/=> P", &["rich"], "P", &["rovnost_bez_C"]),
    non("rich =/=> C", &["rich"], "C", &["rich_bounded_comp", "rovnost_bez_C"]),
    non("P =/=> PE", &["P"], "PE", &["ter_P_not_PE"]),
    non("R + C =/=> P", &["R", "C"], "P", &["C_Ret_not_Cur"]),
    non("R + CuR =/=> P", &["R", "CuR"], "P", &["w2"]),
    non("B_forall =/=> AC", &["B_forall"], "AC", &["Tribonacci"]),
    non("B_exists =/=> B_forall", &["B_exists"], "B_forall", &["beta_coding"]),
    non(
        "UR + CuR =/=> infinite_palindromes",
        &["UR", "CuR"],
        "infinite_palindromes",
        &["finite_pals"],
    ),
    non(
        "recurrent + infinite_palindromes =/=> CuR",
        &["recurrent", "infinite_palindromes"],
        "CuR",
        &["pals_not_closed"],
    ),
    non(
        "rich + C + CuR + PE =/=> bs_palindromic",
        &["rich", "C", "CuR", "PE"],
        "bs_palindromic",
        &["rich_non_pal_BS"],
    ),
];

/// The eight equivalent characterisations of Sturmian words, as report keys.
pub const STURMIAN_KEYS: [&str; 8] = ["C", "LR", "BO", "R", "P", "PE", "B_forall", "AC"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Hypotheses and conclusion hold.
    Confirmed,
    /// Some hypothesis is not established on this fixture.
    Vacuous,
    /// Hypotheses hold, the conclusion is inconclusive.
    Open,
    /// The conclusion fails beyond the horizon the hypotheses were checked to.
    BeyondHorizon,
    /// Hypotheses hold up to the failure of the conclusion.
    RedFlag,
    Witnessed,
    NotWitnessed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleOutcome {
    pub rule: String,
    pub polarity: Polarity,
    pub fixture: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationMatrix {
    pub outcomes: Vec<RuleOutcome>,
    /// Implications contradicted by some fixture.
    pub red_flags: Vec<String>,
    /// Non-implications none of whose named fixtures witnesses them.
    pub unwitnessed: Vec<String>,
    /// Binary fixtures on which the Sturmian characterisations disagree.
    pub sturmian: Vec<String>,
    /// Fixtures with CuR, C and R established, with their PE verdict.
    pub observations: Vec<String>,
    pub skipped: Vec<String>,
}

impl RelationMatrix {
    pub fn ok(&self) -> bool {
        self.red_flags.is_empty() && self.unwitnessed.is_empty() && self.sturmian.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("rule,polarity,fixture,outcome,detail\n");
        for o in &self.outcomes {
            let pol = match o.polarity {
                Polarity::Implication => "implication",
                Polarity::NonImplication => "non_implication",
            };
            let out = serde_json::to_value(o.outcome).expect("serializable");
            let _ = writeln!(
                s,
                "{},{pol},{},{},{}",
                csv_field(&o.rule),
                csv_field(&o.fixture),
                out.as_str().unwrap_or_default(),
                csv_field(&o.detail)
            );
        }
        s
    }

    pub fn summary(&self) -> String {
        let count = |p: Polarity, o: Outcome| {
            self.outcomes
                .iter()
                .filter(|r| r.polarity == p && r.outcome == o)
                .count()
        };
        let mut s = String::new();
        let _ = writeln!(
            s,
            "implications: {} confirmed, {} open, {} beyond horizon, {} vacuous, {} red flags",
            count(Polarity::Implication, Outcome::Confirmed),
            count(Polarity::Implication, Outcome::Open),
            count(Polarity::Implication, Outcome::BeyondHorizon),
            count(Polarity::Implication, Outcome::Vacuous),
            self.red_flags.len()
        );
        let non_rules = RULES.iter().filter(|r| r.polarity == Polarity::NonImplication).count();
        let _ = writeln!(
            s,
            "non-implications: {} of {} witnessed",
            non_rules - self.unwitnessed.len(),
            non_rules
        );
        for (title, list) in [
            ("RED FLAG", &self.red_flags),
            ("UNWITNESSED", &self.unwitnessed),
            ("STURMIAN MISMATCH", &self.sturmian),
            ("open question (CuR + C + R => PE?)", &self.observations),
            ("skipped", &self.skipped),
        ] {
            for line in list {
                let _ = writeln!(s, "{title}: {line}");
            }
        }
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn status(r: &PropertyReport, key: &str) -> &'static str {
    match r.verdict(key) {
        Some(v) if v.holds() => "holds",
        Some(v) if v.fails() => "fails",
        Some(_) => "inconclusive",
        None => "missing",
    }
}

fn applies(rule: &RelationRule, r: &PropertyReport) -> bool {
    rule.alphabet.is_none_or(|k| k == r.k) && rule.hypotheses.iter().all(|h| r.holds(h))
}

fn hypothesis_horizon(rule: &RelationRule, r: &PropertyReport) -> usize {
    rule.hypotheses
        .iter()
        .filter_map(|h| match r.verdict(h) {
            Some(Verdict::HoldsUpTo { horizon }) => Some(*horizon),
            _ => None,
        })
        .min()
        .unwrap_or(usize::MAX)
}

fn judge(rule: &RelationRule, r: &PropertyReport) -> (Outcome, String) {
    let hyps = rule
        .hypotheses
        .iter()
        .map(|h| format!("{h} {}", status(r, h)))
        .collect::<Vec<_>>()
        .join(", ");
    let concl = r.verdict(rule.conclusion);
    let detail = format!(
        "{hyps}; {} {}",
        rule.conclusion,
        concl.map(Verdict::short).unwrap_or_else(|| "missing".into())
    );
    if !applies(rule, r) {
        let outcome = match rule.polarity {
            Polarity::Implication => Outcome::Vacuous,
            Polarity::NonImplication => Outcome::NotWitnessed,
        };
        return (outcome, detail);
    }
    let outcome = match (rule.polarity, concl) {
        (Polarity::Implication, Some(Verdict::HoldsUpTo { .. })) => Outcome::Confirmed,
        (Polarity::Implication, Some(Verdict::FailsAt { n, .. })) => {
            if *n > hypothesis_horizon(rule, r) {
                Outcome::BeyondHorizon
            } else {
                Outcome::RedFlag
            }
        }
        (Polarity::Implication, _) => Outcome::Open,
        (Polarity::NonImplication, Some(Verdict::FailsAt { .. })) => Outcome::Witnessed,
        (Polarity::NonImplication, _) => Outcome::NotWitnessed,
    };
    (outcome, detail)
}

/// Checks every rule against every report (keyed by fixture label).
/// Errors with `MissingFixture` when no named witness of a non-implication
/// is present and none of them is optional.
pub fn verify_relations(reports: &BTreeMap<String, PropertyReport>) -> Result<RelationMatrix> {
    let mut m = RelationMatrix::default();
    for rule in RULES {
        match rule.polarity {
            Polarity::Implication => {
                for (label, r) in reports {
                    let (outcome, detail) = judge(rule, r);
                    if outcome == Outcome::RedFlag {
                        m.red_flags.push(format!("{}: {label} ({detail})", rule.id));
                    }
                    m.outcomes.push(RuleOutcome {
                        rule: rule.id.into(),
                        polarity: rule.polarity,
                        fixture: label.clone(),
                        outcome,
                        detail,
                    });
                }
            }
            Polarity::NonImplication => {
                let present: Vec<&str> = rule
                    .witnesses
                    .iter()
                    .copied()
                    .filter(|w| reports.contains_key(*w))
                    .collect();
                if present.is_empty() {
                    if rule.witnesses.iter().all(|w| OPTIONAL_FIXTURES.contains(w)) {
                        m.skipped.push(format!("{}: witness fixtures absent", rule.id));
                        continue;
                    }
                    return Err(Error::MissingFixture(rule.witnesses.join(", ")));
                }
                let mut any = false;
                for w in present {
                    let (outcome, detail) = judge(rule, &reports[w]);
                    any |= outcome == Outcome::Witnessed;
                    m.outcomes.push(RuleOutcome {
                        rule: rule.id.into(),
                        polarity: rule.polarity,
                        fixture: w.into(),
                        outcome,
                        detail,
                    });
                }
                if !any {
                    m.unwitnessed.push(rule.id.into());
                }
            }
        }
    }
    for (label, r) in reports.iter().filter(|(_, r)| r.k == 2) {
        let holding: Vec<&str> = STURMIAN_KEYS.iter().copied().filter(|k| r.holds(k)).collect();
        let failing: Vec<&str> = STURMIAN_KEYS.iter().copied().filter(|k| r.fails(k)).collect();
        if !holding.is_empty() && !failing.is_empty() {
            m.sturmian.push(format!(
                "{label}: {} hold but {} fail",
                holding.join(", "),
                failing.join(", ")
            ));
        }
    }
    for (label, r) in reports {
        if ["CuR", "C", "R"].iter().all(|k| r.holds(k)) {
            m.observations.push(format!(
                "{label}: PE {}",
                r.verdict("PE").map(Verdict::short).unwrap_or_default()
            ));
        }
    }
    Ok(m)
}
