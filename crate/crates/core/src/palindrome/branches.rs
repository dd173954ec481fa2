use super::PalindromeIndex;
use crate::error::{Error, Result};
use crate::factor::LanguageView;
use serde::Serialize;

/// Finite approximation of a palindromic branch: `reverse(half) center half`
/// is a factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Branch {
    /// `None` for the empty centre.
    pub center: Option<char>,
    pub half: String,
}

impl Branch {
    pub fn line(&self) -> String {
        let c = self.center.map(String::from).unwrap_or_else(|| "ε".into());
        format!("{c}\t{}", self.half)
    }
}

/// All palindromes of length `2 depth` and `2 depth + 1`, as branches.
/// Several branches may share a centre.
pub fn palindromic_branches(view: &LanguageView, index: &PalindromeIndex, depth: usize) -> Result<Vec<Branch>> {
    if 2 * depth + 1 > view.n_max() {
        return Err(Error::InvalidArgument(format!(
            "branch depth {depth} needs n_max >= {}, have {}",
            2 * depth + 1,
            view.n_max()
        )));
    }
    let t = &index.tree;
    let a = &view.prefix().alphabet;
    let mut out = Vec::new();
    for v in t.nodes() {
        let l = t.len(v) as usize;
        if l != 2 * depth && l != 2 * depth + 1 {
            continue;
        }
        let e = t.first_end(v);
        let p = &view.symbols()[e + 1 - l..=e];
        let center = (l % 2 == 1).then(|| a.letter(p[depth]));
        out.push(Branch {
            center,
            half: a.decode(&p[l - depth..]),
        });
    }
    out.sort();
    Ok(out)
}
