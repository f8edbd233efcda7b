//! The palindromic-cut bijection between factors of complementary lengths of
//! a Christoffel word, and the suffix-by-prefix decomposition of its factor
//! set.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::geometry::{palindromic_factorization, PalindromicCut};
use crate::spectrum::BivariatePoly;
use crate::word::{ParikhVector, Word};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    LeftToRight,
    RightToLeft,
}

/// Length-`k` factors whose window `[t, t+k-1]` (1-based) contains position
/// `cut` or `cut + 1`, the two letters next to the cut. A factor crossing at
/// several windows is kept at its leftmost one.
pub fn crossing_factors(w: &Word, cut: usize, k: usize, order: Order) -> Result<Vec<Word>> {
    let n = w.len();
    if cut == 0 || cut >= n {
        return Err(Error::OutOfRange { what: "cut", value: cut, min: 1, max: n.saturating_sub(1) });
    }
    if k == 0 || k > n {
        return Err(Error::OutOfRange { what: "factor length", value: k, min: 1, max: n });
    }
    let mut seen = HashSet::new();
    let mut out: Vec<Word> = (1..=n - k + 1)
        .filter(|&t| t <= cut + 1 && t + k > cut)
        .map(|t| w.slice(t - 1, t - 1 + k))
        .filter(|f| seen.insert(f.clone()))
        .collect();
    if order == Order::RightToLeft {
        out.reverse();
    }
    Ok(out)
}

/// Pairs `(f_i, g_i)` of a length-`k` crossing factor read left to right with
/// a length-`(n-k)` crossing factor read right to left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionTable {
    pub word: Word,
    pub k: usize,
    pub cut: usize,
    pub pairs: Vec<(Word, Word)>,
}

impl BijectionTable {
    /// Checks the table against the brute-force factor sets: both columns
    /// distinct and complete, Parikh vectors complementary in every row.
    pub fn verify(&self) -> Result<()> {
        let n = self.word.len();
        let total = self.word.parikh();
        let violation = |what: String| Err(Error::TheoremViolation(format!("{} k={}: {what}", self.word, self.k)));

        let left: BTreeSet<&Word> = self.pairs.iter().map(|(f, _)| f).collect();
        let right: BTreeSet<&Word> = self.pairs.iter().map(|(_, g)| g).collect();
        if left.len() != self.pairs.len() || right.len() != self.pairs.len() {
            return violation("repeated factor in a column".into());
        }
        let expect_left = self.word.factors_of_length(self.k);
        let expect_right = self.word.factors_of_length(n - self.k);
        if left.into_iter().cloned().collect::<BTreeSet<_>>() != expect_left {
            return violation(format!("f's are not all length-{} factors", self.k));
        }
        if right.into_iter().cloned().collect::<BTreeSet<_>>() != expect_right {
            return violation(format!("g's are not all length-{} factors", n - self.k));
        }
        for (f, g) in &self.pairs {
            if f.parikh() + g.parikh() != total {
                return violation(format!("{f} and {g} do not complement {total}"));
            }
        }
        Ok(())
    }

    /// Aligned two-column text, one pair per line; `ε` for the empty word.
    pub fn to_text(&self) -> String {
        let show = |x: &Word| if x.is_empty() { "ε".to_string() } else { x.to_string() };
        let width = self.pairs.iter().map(|(f, _)| show(f).chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (f, g) in &self.pairs {
            let f = show(f);
            let pad = width - f.chars().count();
            let _ = writeln!(out, "{f}{}  {}", " ".repeat(pad), show(g));
        }
        out
    }
}

/// The bijection table of a Christoffel word for `0 <= k <= n`. The endpoints
/// are the single pair `(ε, w)` or `(w, ε)`.
pub fn bijection_table(w: &Word, k: usize) -> Result<BijectionTable> {
    let PalindromicCut { cut, .. } = palindromic_factorization(w)?;
    let n = w.len();
    let pairs = match k {
        0 => vec![(Word::empty(), w.clone())],
        _ if k == n => vec![(w.clone(), Word::empty())],
        _ if k > n => {
            return Err(Error::OutOfRange { what: "factor length", value: k, min: 0, max: n });
        }
        _ => {
            let f = crossing_factors(w, cut, k, Order::LeftToRight)?;
            let g = crossing_factors(w, cut, n - k, Order::RightToLeft)?;
            if f.len() != g.len() {
                return Err(Error::TheoremViolation(format!(
                    "{w} k={k}: {} crossing factors against {}",
                    f.len(),
                    g.len()
                )));
            }
            f.into_iter().zip(g).collect()
        }
    };
    Ok(BijectionTable { word: w.clone(), k, cut, pairs })
}

/// Number of pairs per Parikh vector of the left column, i.e. a copy of the
/// spectrum on antidiagonal `k` read through the table.
pub fn paired_classes(table: &BijectionTable) -> BTreeMap<ParikhVector, (usize, usize)> {
    let total = table.word.parikh();
    let mut out: BTreeMap<ParikhVector, (usize, usize)> = BTreeMap::new();
    for (f, g) in &table.pairs {
        out.entry(f.parikh()).or_default().0 += 1;
        if let Some(c) = g.parikh().complement_in(total) {
            out.entry(c).or_default().1 += 1;
        }
    }
    out
}

/// The products `s·t` with `s` a suffix of `u` and `t` a prefix of `v`,
/// `(u, v)` the palindromic cut. Fails if two products coincide or if the
/// products are not exactly the factors of `w`.
pub fn suffix_prefix_product(w: &Word) -> Result<BTreeSet<Word>> {
    let PalindromicCut { left, right, .. } = palindromic_factorization(w)?;
    let products: Vec<Word> = suffixes(&left)
        .iter()
        .flat_map(|s| prefixes(&right).into_iter().map(move |t| s.concat(&t)))
        .collect();
    let expected = (left.len() + 1) * (right.len() + 1);
    let set: BTreeSet<Word> = products.into_iter().collect();
    if set.len() != expected {
        return Err(Error::TheoremViolation(format!(
            "{w}: {} distinct products out of {expected}",
            set.len()
        )));
    }
    if set != w.factor_set() {
        return Err(Error::TheoremViolation(format!("{w}: products differ from the factor set")));
    }
    Ok(set)
}

/// Suffixes of `x` including `ε`, shortest first.
pub fn suffixes(x: &Word) -> Vec<Word> {
    (0..=x.len()).rev().map(|s| x.slice(s, x.len())).collect()
}

/// Prefixes of `x` including `ε`, shortest first.
pub fn prefixes(x: &Word) -> Vec<Word> {
    (0..=x.len()).map(|e| x.slice(0, e)).collect()
}

/// Spectrum polynomial predicted by the cut: (suffixes of `u`) × (prefixes
/// of `v`) with commuting letters.
pub fn product_polynomial(cut: &PalindromicCut) -> BivariatePoly {
    let s = BivariatePoly::from_words(&suffixes(&cut.left));
    let p = BivariatePoly::from_words(&prefixes(&cut.right));
    s.mul(&p)
}
