use super::Generator;
use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// `u_0` and a template for `u_(n+1)` in terms of `u_n`.
///
/// The template is a whitespace-separated list of terms:
/// `u`, `reverse(u)`, a run `x^(a*n+b)` (also `x^{an+b}`), or a literal word.
/// A literal that would read as a term is written in single quotes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecursiveSpec {
    #[serde(default)]
    pub u0: String,
    pub step: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Prev,
    Reversed,
    Literal(String),
    Run { letter: char, scale: i64, offset: i64 },
}

impl RecursiveSpec {
    pub fn new(u0: &str, step: &str) -> Self {
        RecursiveSpec {
            u0: u0.into(),
            step: step.into(),
        }
    }

    pub fn terms(&self) -> Result<Vec<Term>> {
        self.step.split_whitespace().map(parse_term).collect()
    }

    pub(crate) fn generator(&self) -> Result<Recursive> {
        let terms = self.terms()?;
        if terms.is_empty() {
            return Err(Error::spec("step", "empty template"));
        }
        let mut letters: Vec<char> = self.u0.chars().collect();
        for t in &terms {
            match t {
                Term::Literal(w) => letters.extend(w.chars()),
                Term::Run { letter, .. } => letters.push(*letter),
                _ => {}
            }
        }
        letters.sort_unstable();
        letters.dedup();
        let alphabet = Alphabet::new(letters)?;
        let buf = alphabet.encode(&self.u0)?;
        let terms = terms
            .into_iter()
            .map(|t| {
                Ok(match t {
                    Term::Prev => CompiledTerm::Prev,
                    Term::Reversed => CompiledTerm::Reversed,
                    Term::Literal(w) => CompiledTerm::Literal(alphabet.encode(&w)?),
                    Term::Run {
                        letter,
                        scale,
                        offset,
                    } => CompiledTerm::Run {
                        letter: alphabet.index(letter).expect("letter collected above"),
                        scale,
                        offset,
                    },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Recursive {
            alphabet,
            terms,
            buf,
            step: 0,
        })
    }
}

fn parse_term(tok: &str) -> Result<Term> {
    if tok == "u" {
        return Ok(Term::Prev);
    }
    if tok == "reverse(u)" || tok == "~u" {
        return Ok(Term::Reversed);
    }
    if let Some(inner) = tok.strip_prefix('\'').and_then(|t| t.strip_suffix('\'')) {
        return Ok(Term::Literal(inner.into()));
    }
    if let Some((base, exp)) = tok.split_once('^') {
        let mut chars = base.chars();
        let letter = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => return Err(Error::spec("step", format!("run base must be one letter: {tok:?}"))),
        };
        let (scale, offset) = parse_affine(exp)
            .ok_or_else(|| Error::spec("step", format!("cannot read exponent in {tok:?}")))?;
        return Ok(Term::Run {
            letter,
            scale,
            offset,
        });
    }
    if tok.contains(['(', ')', '{', '}']) {
        return Err(Error::spec("step", format!("unrecognised term {tok:?}")));
    }
    Ok(Term::Literal(tok.into()))
}

/// Reads `a*n+b`, `an+b`, `n`, `b`, optionally wrapped in `()` or `{}`.
fn parse_affine(exp: &str) -> Option<(i64, i64)> {
    let e = exp
        .strip_prefix('(')
        .and_then(|e| e.strip_suffix(')'))
        .or_else(|| exp.strip_prefix('{').and_then(|e| e.strip_suffix('}')))
        .unwrap_or(exp);
    let e: String = e.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let (lin, rest) = match e.find('n') {
        Some(i) => (Some(&e[..i]), &e[i + 1..]),
        None => (None, e.as_str()),
    };
    let scale = match lin {
        None => 0,
        Some("") | Some("+") => 1,
        Some("-") => -1,
        Some(s) => s.parse().ok()?,
    };
    let offset = if rest.is_empty() { 0 } else { rest.parse().ok()? };
    if lin.is_none() && rest.is_empty() {
        return None;
    }
    Some((scale, offset))
}

enum CompiledTerm {
    Prev,
    Reversed,
    Literal(Vec<Symbol>),
    Run { letter: Symbol, scale: i64, offset: i64 },
}

pub struct Recursive {
    alphabet: Alphabet,
    terms: Vec<CompiledTerm>,
    buf: Vec<Symbol>,
    step: usize,
}

impl Recursive {
    fn advance(&mut self) -> Result<()> {
        let n = self.step as i64;
        let mut next = Vec::with_capacity(2 * self.buf.len() + 8);
        for t in &self.terms {
            match t {
                CompiledTerm::Prev => next.extend_from_slice(&self.buf),
                CompiledTerm::Reversed => next.extend(self.buf.iter().rev()),
                CompiledTerm::Literal(w) => next.extend_from_slice(w),
                CompiledTerm::Run {
                    letter,
                    scale,
                    offset,
                } => {
                    let count = scale * n + offset;
                    if count < 0 {
                        return Err(Error::spec("step", format!("negative run length at n = {n}")));
                    }
                    next.extend(std::iter::repeat_n(*letter, count as usize));
                }
            }
        }
        self.step += 1;
        if next.len() <= self.buf.len() || !next.starts_with(&self.buf) {
            return Err(Error::NotNested { step: self.step });
        }
        self.buf = next;
        Ok(())
    }
}

impl Generator for Recursive {
    fn extend_to(&mut self, len: usize) -> Result<()> {
        while self.buf.len() < len {
            self.advance()?;
        }
        Ok(())
    }

    fn symbols(&self) -> &[Symbol] {
        &self.buf
    }

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}
