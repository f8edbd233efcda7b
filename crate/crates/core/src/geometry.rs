//! Christoffel words as discretized segments, their palindromic cut, and
//! lattice paths.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::is_christoffel;
use crate::spectrum::SupportSet;
use crate::word::{Letter, ParikhVector, Word};
use crate::{Error, Result};

pub(crate) fn gcd(mut x: usize, mut y: usize) -> usize {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

fn check_coprime(p: usize, q: usize) -> Result<()> {
    if gcd(p, q) != 1 {
        return Err(Error::NonCoprime(p, q));
    }
    Ok(())
}

/// The lower Christoffel word with Parikh vector `(p, q)`: letter `t` is `b`
/// exactly when `⌊t·q / n⌋` steps past `⌊(t-1)·q / n⌋`, `n = p + q`.
pub fn generate_lower(p: usize, q: usize) -> Result<Word> {
    check_coprime(p, q)?;
    let n = p + q;
    Ok((1..=n)
        .map(|t| if t * q / n > (t - 1) * q / n { Letter::B } else { Letter::A })
        .collect())
}

/// The upper Christoffel word with Parikh vector `(p, q)`, the reversal of
/// the lower one.
pub fn generate_upper(p: usize, q: usize) -> Result<Word> {
    Ok(generate_lower(p, q)?.reversal())
}

/// Iterator over every Christoffel word with `1 <= p + q <= max_len`, by
/// length, then `p` ascending, lower form before upper form. Single letters
/// appear once.
pub fn christoffel_words(max_len: usize) -> impl Iterator<Item = Word> {
    (1..=max_len).flat_map(|n| {
        (0..=n).filter(move |&p| gcd(p, n - p) == 1).flat_map(move |p| {
            let lower = generate_lower(p, n - p).expect("coprime by filter");
            let upper = (n >= 2).then(|| lower.reversal());
            std::iter::once(lower).chain(upper)
        })
    })
}

/// The factorization `w = u·v` of a Christoffel word into two non-empty
/// palindromes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PalindromicCut {
    pub word: Word,
    /// `|u|`.
    pub cut: usize,
    pub left: Word,
    pub right: Word,
}

/// Scans the `|w| - 1` cuts and insists on exactly one palindromic one.
pub fn palindromic_factorization(w: &Word) -> Result<PalindromicCut> {
    if w.len() < 2 || !is_christoffel(w)? {
        return Err(Error::NotChristoffel("palindromic cut undefined"));
    }
    let mut cuts = (1..w.len()).filter(|&c| w.slice(0, c).is_palindrome() && w.slice(c, w.len()).is_palindrome());
    let cut = cuts
        .next()
        .ok_or_else(|| Error::TheoremViolation(format!("{w} has no palindromic factorization")))?;
    if let Some(other) = cuts.next() {
        return Err(Error::TheoremViolation(format!(
            "{w} has two palindromic cuts, {cut} and {other}"
        )));
    }
    Ok(PalindromicCut {
        word: w.clone(),
        cut,
        left: w.slice(0, cut),
        right: w.slice(cut, w.len()),
    })
}

/// Lattice points visited when `a` is an east step and `b` a north step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LatticePath {
    points: Vec<ParikhVector>,
}

impl LatticePath {
    pub fn points(&self) -> &[ParikhVector] {
        &self.points
    }

    pub fn end(&self) -> ParikhVector {
        *self.points.last().expect("paths start at the origin")
    }

    /// One `x y` line per point.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for pt in &self.points {
            let _ = writeln!(out, "{} {}", pt.a, pt.b);
        }
        out
    }
}

pub fn path(w: &Word) -> LatticePath {
    let mut points = Vec::with_capacity(w.len() + 1);
    let mut at = ParikhVector::default();
    points.push(at);
    for l in w.iter() {
        match l {
            Letter::A => at.a += 1,
            Letter::B => at.b += 1,
        }
        points.push(at);
    }
    LatticePath { points }
}

/// Points of the paths of `w` and of its reversal. For a Christoffel word this
/// is the support of its spectrum; either form may be given, since the two
/// forms have the same support and the same pair of paths.
pub fn predicted_support(w: &Word) -> Result<SupportSet> {
    if w.is_empty() || !is_christoffel(w)? {
        return Err(Error::NotChristoffel("predicted support"));
    }
    Ok(path(w)
        .points
        .into_iter()
        .chain(path(&w.reversal()).points)
        .collect())
}

/// Lattice points strictly between the path of a lower word and the path of
/// the matching upper word: in each column, the heights above the lower
/// path's top point and below the upper path's bottom point.
pub fn points_between_paths(lower: &LatticePath, upper: &LatticePath) -> BTreeSet<ParikhVector> {
    let width = lower.end().a.max(upper.end().a);
    let column = |path: &LatticePath, x: usize| {
        let ys = path.points.iter().filter(|pt| pt.a == x).map(|pt| pt.b);
        (ys.clone().min(), ys.max())
    };
    let mut out = BTreeSet::new();
    for x in 0..=width {
        let (_, Some(lower_top)) = column(lower, x) else { continue };
        let (Some(upper_bottom), _) = column(upper, x) else { continue };
        out.extend((lower_top + 1..upper_bottom).map(|y| ParikhVector::new(x, y)));
    }
    out
}
