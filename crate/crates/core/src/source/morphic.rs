use super::{Generator, WordSpec};
use crate::alphabet::{single_char, Alphabet, Symbol};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Letter-to-word image of another word.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphicSpec {
    pub inner: Box<WordSpec>,
    pub morphism: BTreeMap<String, String>,
}

impl MorphicSpec {
    pub fn new(inner: WordSpec, morphism: &[(char, &str)]) -> Self {
        MorphicSpec {
            inner: Box::new(inner),
            morphism: morphism
                .iter()
                .map(|(c, w)| (c.to_string(), w.to_string()))
                .collect(),
        }
    }

    pub(crate) fn generator(&self) -> Result<MorphicImage> {
        let inner = self.inner.generator()?;
        let mut targets: Vec<char> = self.morphism.values().flat_map(|w| w.chars()).collect();
        targets.sort_unstable();
        targets.dedup();
        let alphabet = Alphabet::new(targets)?;
        let mut images = Vec::new();
        for &c in inner.alphabet().letters() {
            let img = self
                .morphism
                .iter()
                .find(|(k, _)| single_char("morphism", k).ok() == Some(c))
                .map(|(_, v)| v)
                .ok_or(Error::MissingRule(c))?;
            if img.is_empty() {
                return Err(Error::EmptyImage(c));
            }
            images.push(alphabet.encode(img)?);
        }
        for k in self.morphism.keys() {
            single_char("morphism", k)?;
        }
        Ok(MorphicImage {
            inner,
            images,
            alphabet,
            buf: Vec::new(),
            cursor: 0,
        })
    }
}

pub struct MorphicImage {
    inner: Box<dyn Generator>,
    images: Vec<Vec<Symbol>>,
    alphabet: Alphabet,
    buf: Vec<Symbol>,
    cursor: usize,
}

impl Generator for MorphicImage {
    fn extend_to(&mut self, len: usize) -> Result<()> {
        while self.buf.len() < len {
            if self.cursor >= self.inner.symbols().len() {
                let want = (self.cursor + 1).max(2 * self.inner.symbols().len()).max(64);
                self.inner.extend_to(want)?;
            }
            let s = self.inner.symbols()[self.cursor];
            self.buf.extend_from_slice(&self.images[s as usize]);
            self.cursor += 1;
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{PeriodicSpec, Source, SubstitutionSpec};

    fn fib() -> WordSpec {
        WordSpec::new(
            "fib",
            Source::Substitution(SubstitutionSpec::new(&[('A', "AB"), ('B', "A")], 'A')),
        )
    }

    #[test]
    fn periodic_inner() {
        let inner = WordSpec::new("ab", Source::Periodic(PeriodicSpec::new("AB")));
        let s = WordSpec::new("m", Source::Morphic(MorphicSpec::new(inner, &[('A', "abc"), ('B', "acb")])));
        assert_eq!(s.generate(8).unwrap().text(), "abcacbab");
    }

    #[test]
    fn fibonacci_with_b_replaced() {
        let s = WordSpec::new("m", Source::Morphic(MorphicSpec::new(fib(), &[('A', "a"), ('B', "bc")])));
        assert_eq!(s.generate(10).unwrap().text(), "abcaabcabc");
    }

    #[test]
    fn identity_morphism_is_transparent() {
        let s = WordSpec::new("m", Source::Morphic(MorphicSpec::new(fib(), &[('A', "A"), ('B', "B")])));
        assert_eq!(s.generate(300).unwrap().symbols, fib().generate(300).unwrap().symbols);
    }

    #[test]
    fn missing_image() {
        let s = WordSpec::new("m", Source::Morphic(MorphicSpec::new(fib(), &[('A', "a")])));
        assert!(matches!(s.generate(3), Err(Error::MissingRule('B'))));
    }
}
