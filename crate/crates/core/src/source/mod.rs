//! Declarative word recipes and the generators that materialize them.

mod iet;
mod morphic;
mod periodic;
mod recursive;
mod substitution;

pub use iet::{IetMode, IetSpec, Number};
pub use morphic::MorphicSpec;
pub use periodic::PeriodicSpec;
pub use recursive::{RecursiveSpec, Term};
pub use substitution::SubstitutionSpec;

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// A named recipe for an infinite word.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WordSpec {
    #[serde(default)]
    pub name: String,
    #[serde(flatten)]
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Source {
    Substitution(SubstitutionSpec),
    Morphic(MorphicSpec),
    Recursive(RecursiveSpec),
    Iet(IetSpec),
    Periodic(PeriodicSpec),
}

/// Streaming producer of a prefix. `symbols` may run past the requested length.
pub trait Generator: Send {
    fn extend_to(&mut self, len: usize) -> Result<()>;
    fn symbols(&self) -> &[Symbol];
    fn alphabet(&self) -> &Alphabet;
}

impl Generator for Box<dyn Generator> {
    fn extend_to(&mut self, len: usize) -> Result<()> {
        (**self).extend_to(len)
    }

    fn symbols(&self) -> &[Symbol] {
        (**self).symbols()
    }

    fn alphabet(&self) -> &Alphabet {
        (**self).alphabet()
    }
}

impl WordSpec {
    pub fn new(name: impl Into<String>, source: Source) -> Self {
        WordSpec {
            name: name.into(),
            source,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Parse {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }

    pub fn generator(&self) -> Result<Box<dyn Generator>> {
        match &self.source {
            Source::Substitution(s) => Ok(Box::new(s.generator()?)),
            Source::Morphic(s) => Ok(Box::new(s.generator()?)),
            Source::Recursive(s) => Ok(Box::new(s.generator()?)),
            Source::Iet(s) => s.generator(),
            Source::Periodic(s) => Ok(Box::new(s.generator()?)),
        }
    }

    pub fn generate(&self, len: usize) -> Result<FinitePrefix> {
        let mut g = self.generator()?;
        g.extend_to(len)?;
        Ok(FinitePrefix::from_generator(self, g.as_ref(), len))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    Spec(WordSpec),
    External { path: String },
}

/// A materialized prefix over a dense alphabet.
#[derive(Clone, Debug)]
pub struct FinitePrefix {
    pub name: String,
    pub symbols: Vec<Symbol>,
    pub alphabet: Alphabet,
    pub provenance: Provenance,
}

impl FinitePrefix {
    pub(crate) fn from_generator(spec: &WordSpec, g: &dyn Generator, len: usize) -> Self {
        let s = g.symbols();
        FinitePrefix {
            name: spec.name.clone(),
            symbols: s[..len.min(s.len())].to_vec(),
            alphabet: g.alphabet().clone(),
            provenance: Provenance::Spec(spec.clone()),
        }
    }

    /// Wraps literal text; the alphabet is its sorted letter set.
    pub fn from_text(name: impl Into<String>, text: &str) -> Result<Self> {
        let alphabet = Alphabet::from_text_sorted(text)?;
        Ok(FinitePrefix {
            name: name.into(),
            symbols: alphabet.encode(text)?,
            alphabet,
            provenance: Provenance::External {
                path: String::new(),
            },
        })
    }

    /// Reads a symbol file, ignoring whitespace.
    pub fn from_file(path: &Path) -> Result<Self> {
        let raw = std::fs::read_to_string(path)?;
        let text: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse {
                path: path.display().to_string(),
                message: "empty symbol file".into(),
            });
        }
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let mut p = FinitePrefix::from_text(name, &text)?;
        p.provenance = Provenance::External {
            path: path.display().to_string(),
        };
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn k(&self) -> usize {
        self.alphabet.len()
    }

    pub fn text(&self) -> String {
        self.alphabet.decode(&self.symbols)
    }

    pub fn truncated(&self, len: usize) -> FinitePrefix {
        FinitePrefix {
            symbols: self.symbols[..len.min(self.len())].to_vec(),
            ..self.clone()
        }
    }

    pub fn spec(&self) -> Option<&WordSpec> {
        match &self.provenance {
            Provenance::Spec(s) => Some(s),
            Provenance::External { .. } => None,
        }
    }

    /// Letters of the alphabet that do not occur in the prefix.
    pub fn missing_letters(&self) -> Vec<char> {
        let mut seen = vec![false; self.k()];
        for &s in &self.symbols {
            seen[s as usize] = true;
        }
        (0..self.k())
            .filter(|&i| !seen[i])
            .map(|i| self.alphabet.letter(i as Symbol))
            .collect()
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn spec(json: &str) -> WordSpec {
        WordSpec::from_json(json).unwrap()
    }

    #[test]
    fn json_dispatch() {
        let s = spec(r#"{"name":"fib","kind":"substitution","rules":{"a":"ab","b":"a"},"seed":"a"}"#);
        assert_eq!(s.generate(15).unwrap().text(), "abaababaabaabab");
        let p = spec(r#"{"name":"p","kind":"periodic","period":"abcba"}"#);
        assert_eq!(p.generate(7).unwrap().text(), "abcbaab");
    }

    #[test]
    fn unknown_kind_is_rejected() {
        let e = WordSpec::from_json(r#"{"name":"x","kind":"automatic"}"#).unwrap_err();
        assert!(e.to_string().contains("automatic"), "{e}");
    }

    #[test]
    fn missing_field_is_named() {
        let e = WordSpec::from_json(r#"{"name":"x","kind":"substitution","seed":"a"}"#).unwrap_err();
        assert!(e.to_string().contains("rules"), "{e}");
    }

    #[test]
    fn spec_roundtrips_through_json() {
        let s = spec(r#"{"name":"t","kind":"substitution","rules":{"a":"ab","b":"ac","c":"a"},"seed":"a"}"#);
        let back = WordSpec::from_json(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn from_text_uses_sorted_letters() {
        let p = FinitePrefix::from_text("t", "cab").unwrap();
        assert_eq!(p.alphabet.letters(), &['a', 'b', 'c']);
        assert_eq!(p.symbols, vec![2, 0, 1]);
        assert!(p.missing_letters().is_empty());
    }
}
