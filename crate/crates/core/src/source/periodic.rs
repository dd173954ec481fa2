use super::Generator;
use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// `preperiod · period^ω`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeriodicSpec {
    pub period: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub preperiod: String,
}

impl PeriodicSpec {
    pub fn new(period: &str) -> Self {
        PeriodicSpec {
            period: period.into(),
            preperiod: String::new(),
        }
    }

    pub fn eventually(preperiod: &str, period: &str) -> Self {
        PeriodicSpec {
            period: period.into(),
            preperiod: preperiod.into(),
        }
    }

    pub(crate) fn generator(&self) -> Result<Periodic> {
        if self.period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let alphabet = Alphabet::from_text_sorted(&format!("{}{}", self.preperiod, self.period))?;
        let mut buf = alphabet.encode(&self.preperiod)?;
        let period = alphabet.encode(&self.period)?;
        buf.extend_from_slice(&period);
        Ok(Periodic {
            alphabet,
            period,
            buf,
        })
    }
}

pub struct Periodic {
    alphabet: Alphabet,
    period: Vec<Symbol>,
    buf: Vec<Symbol>,
}

impl Generator for Periodic {
    fn extend_to(&mut self, len: usize) -> Result<()> {
        while self.buf.len() < len {
            self.buf.extend_from_slice(&self.period);
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
