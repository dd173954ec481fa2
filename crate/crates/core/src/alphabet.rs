use crate::error::{Error, Result};

/// Dense letter index, `0..k`.
pub type Symbol = u8;

/// Ordered set of single-character letters with a dense index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("no letters".into()));
        }
        if letters.len() > 32 {
            return Err(Error::InvalidAlphabet(format!(
                "{} letters, at most 32 supported",
                letters.len()
            )));
        }
        for (i, c) in letters.iter().enumerate() {
            if letters[..i].contains(c) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter '{c}'")));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Letters of `text` in sorted order.
    pub fn from_text_sorted(text: &str) -> Result<Self> {
        let mut letters: Vec<char> = text.chars().collect();
        letters.sort_unstable();
        letters.dedup();
        Alphabet::new(letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn index(&self, c: char) -> Option<Symbol> {
        self.letters.iter().position(|&l| l == c).map(|i| i as Symbol)
    }

    pub fn letter(&self, s: Symbol) -> char {
        self.letters[s as usize]
    }

    pub fn encode(&self, text: &str) -> Result<Vec<Symbol>> {
        text.chars()
            .map(|c| {
                self.index(c)
                    .ok_or_else(|| Error::InvalidAlphabet(format!("letter '{c}' not in alphabet")))
            })
            .collect()
    }

    pub fn decode(&self, symbols: &[Symbol]) -> String {
        symbols.iter().map(|&s| self.letter(s)).collect()
    }
}

impl std::fmt::Display for Alphabet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses a JSON letter key, rejecting anything but a single character.
pub(crate) fn single_char(field: &str, s: &str) -> Result<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::spec(field, format!("letters must be single characters, got {s:?}"))),
    }
}
