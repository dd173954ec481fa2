//! Finite-prefix toolkit for infinite words.
//!
//! Generators materialize prefixes of substitution fixed points, morphic
//! images, recursively defined words, periodic words and interval exchange
//! codings. The analysis layers index a prefix and decide, at an explicit
//! horizon, factor-complexity, palindromic, return-word and balance
//! properties of the underlying infinite word.

pub mod abelian;
pub mod alphabet;
pub mod classify;
pub mod error;
pub mod factor;
pub mod io;
pub mod palindrome;
pub mod returns;
pub mod source;
pub mod verdict;

pub use alphabet::{Alphabet, Symbol};
pub use error::{Error, Result};
pub use factor::{FactorId, LanguageView};
pub use source::{FinitePrefix, WordSpec};
pub use verdict::{Verdict, Witness};

/// Bumped whenever a change to the engine can alter a report.
pub const ENGINE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+engine.1");
