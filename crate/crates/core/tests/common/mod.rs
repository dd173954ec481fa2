//! Shared helpers for the integration tests.

#![allow(dead_code)]

pub mod identities;
pub mod naive;
pub mod oracle;

use std::path::{Path, PathBuf};
use wordlab::io::{load_corpus, Fixture, FixtureInput};
use wordlab::{FinitePrefix, WordSpec};

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixtures() -> Vec<Fixture> {
    load_corpus(&fixtures_dir()).expect("corpus loads").fixtures
}

pub fn fixture(label: &str) -> Fixture {
    fixtures()
        .into_iter()
        .find(|f| f.label == label)
        .unwrap_or_else(|| panic!("fixture {label}"))
}

pub fn spec(label: &str) -> WordSpec {
    match fixture(label).input {
        FixtureInput::Spec(s) => s,
        FixtureInput::PrefixFile(p) => panic!("{label} is a prefix file: {}", p.display()),
    }
}

/// First `len` symbols of a fixture, generated or read from its file.
pub fn fixture_prefix(f: &Fixture, len: usize) -> FinitePrefix {
    match &f.input {
        FixtureInput::Spec(s) => s.generate(len).expect("generates"),
        FixtureInput::PrefixFile(p) => FinitePrefix::from_file(p).expect("readable").truncated(len),
    }
}
