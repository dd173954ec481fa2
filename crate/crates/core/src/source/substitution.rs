use super::Generator;
use crate::alphabet::{single_char, Alphabet, Symbol};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Fixed point of a prolongable substitution, optionally of one of its powers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubstitutionSpec {
    pub rules: BTreeMap<String, String>,
    pub seed: String,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub power: u32,
}

fn one() -> u32 {
    1
}

fn is_one(p: &u32) -> bool {
    *p == 1
}

/// A validated substitution over a dense alphabet.
#[derive(Clone, Debug)]
pub struct Substitution {
    pub alphabet: Alphabet,
    pub images: Vec<Vec<Symbol>>,
    pub seed: Symbol,
}

impl Substitution {
    pub fn apply(&self, word: &[Symbol]) -> Vec<Symbol> {
        word.iter()
            .flat_map(|&s| self.images[s as usize].iter().copied())
            .collect()
    }

    fn compose(&self, other: &Substitution) -> Substitution {
        let images = self.images.iter().map(|img| other.apply(img)).collect();
        Substitution {
            alphabet: self.alphabet.clone(),
            images,
            seed: self.seed,
        }
    }
}

impl SubstitutionSpec {
    pub fn new(rules: &[(char, &str)], seed: char) -> Self {
        SubstitutionSpec {
            rules: rules
                .iter()
                .map(|(c, w)| (c.to_string(), w.to_string()))
                .collect(),
            seed: seed.to_string(),
            power: 1,
        }
    }

    pub fn compile(&self) -> Result<Substitution> {
        let letters = self
            .rules
            .keys()
            .map(|k| single_char("rules", k))
            .collect::<Result<Vec<_>>>()?;
        let alphabet = Alphabet::new(letters)?;
        let mut images = Vec::with_capacity(alphabet.len());
        for (key, img) in &self.rules {
            let c = single_char("rules", key)?;
            if img.is_empty() {
                return Err(Error::EmptyImage(c));
            }
            let mut v = Vec::with_capacity(img.len());
            for d in img.chars() {
                v.push(alphabet.index(d).ok_or(Error::MissingRule(d))?);
            }
            images.push(v);
        }
        let seed_char = single_char("seed", &self.seed)?;
        let seed = alphabet.index(seed_char).ok_or(Error::MissingRule(seed_char))?;
        if self.power == 0 {
            return Err(Error::spec("power", "must be at least 1"));
        }
        let base = Substitution {
            alphabet,
            images,
            seed,
        };
        let mut sub = base.clone();
        for _ in 1..self.power {
            sub = sub.compose(&base);
        }
        let img = &sub.images[seed as usize];
        let unary = sub.alphabet.len() == 1;
        if img[0] != seed || (img.len() < 2 && !unary) {
            return Err(Error::NonProlongable {
                seed: seed_char,
                image: sub.alphabet.decode(img),
            });
        }
        let mut reached = vec![false; sub.alphabet.len()];
        let mut stack = vec![seed];
        reached[seed as usize] = true;
        while let Some(s) = stack.pop() {
            for &t in &sub.images[s as usize] {
                if !reached[t as usize] {
                    reached[t as usize] = true;
                    stack.push(t);
                }
            }
        }
        if let Some(i) = reached.iter().position(|r| !r) {
            return Err(Error::UnreachableLetter(sub.alphabet.letter(i as Symbol)));
        }
        Ok(sub)
    }

    pub(crate) fn generator(&self) -> Result<FixedPoint> {
        FixedPoint::new(self.compile()?)
    }
}

/// Streams the fixed point: the image of the letter at `cursor` is appended
/// to the buffer, which stays a prefix of the fixed point throughout.
pub struct FixedPoint {
    sub: Substitution,
    buf: Vec<Symbol>,
    cursor: usize,
}

impl FixedPoint {
    pub fn new(sub: Substitution) -> Result<Self> {
        let buf = sub.images[sub.seed as usize].clone();
        Ok(FixedPoint {
            sub,
            buf,
            cursor: 1,
        })
    }
}

impl Generator for FixedPoint {
    fn extend_to(&mut self, len: usize) -> Result<()> {
        if self.sub.alphabet.len() == 1 {
            self.buf.resize(self.buf.len().max(len), self.sub.seed);
            return Ok(());
        }
        self.buf.reserve(len.saturating_sub(self.buf.len()));
        while self.buf.len() < len {
            let s = self.buf[self.cursor];
            self.buf.extend_from_slice(&self.sub.images[s as usize]);
            self.cursor += 1;
        }
        Ok(())
    }

    fn symbols(&self) -> &[Symbol] {
        &self.buf
    }

    fn alphabet(&self) -> &Alphabet {
        &self.sub.alphabet
    }
}
