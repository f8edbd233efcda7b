//! Word-class predicates: balanced, Lyndon, unbordered, trapezoidal,
//! Christoffel and conjugate of Christoffel.

use serde::Serialize;

use crate::geometry::{gcd, generate_lower, generate_upper};
use crate::spectrum::complexity_profile;
use crate::word::{Letter, Word};
use crate::{Error, Result};

fn non_empty(w: &Word) -> Result<()> {
    if w.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(())
    }
}

/// Any two factors of equal length have `a`-counts differing by at most one.
/// Checked per length over the `a`-counts of all windows.
pub fn is_balanced(w: &Word) -> bool {
    let n = w.len();
    let mut prefix_a = vec![0usize; n + 1];
    for (i, l) in w.iter().enumerate() {
        prefix_a[i + 1] = prefix_a[i] + usize::from(l == Letter::A);
    }
    (1..n).all(|k| {
        let (min, max) = (0..=n - k)
            .map(|s| prefix_a[s + k] - prefix_a[s])
            .fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        max - min <= 1
    })
}

/// Finite Sturmian words (factors of Christoffel words) are exactly the
/// balanced words.
pub fn is_sturmian_finite(w: &Word) -> bool {
    is_balanced(w)
}

/// Strictly smaller than each proper non-empty suffix.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    non_empty(w)?;
    let letters = w.letters();
    Ok((1..letters.len()).all(|s| letters < &letters[s..]))
}

/// No non-empty proper prefix is also a suffix.
pub fn is_unbordered(w: &Word) -> Result<bool> {
    Ok(w.smallest_period()? == w.len())
}

/// At most `k + 1` distinct factors of each length `k`.
pub fn is_trapezoidal(w: &Word) -> bool {
    complexity_profile(w).within_trapezoid_bound()
}

/// Christoffel test by construction: a single letter, or a coprime Parikh
/// vector whose lower or upper Christoffel word is `w`.
pub fn is_christoffel(w: &Word) -> Result<bool> {
    non_empty(w)?;
    if w.len() == 1 {
        return Ok(true);
    }
    let pv = w.parikh();
    if gcd(pv.a, pv.b) != 1 {
        return Ok(false);
    }
    Ok(*w == generate_lower(pv.a, pv.b)? || *w == generate_upper(pv.a, pv.b)?)
}

/// Christoffel test as "balanced Lyndon word", for the lower form, or for the
/// letter-exchanged word (upper form).
pub fn is_christoffel_by_lyndon(w: &Word) -> Result<bool> {
    Ok(is_balanced(w) && (is_lyndon(w)? || is_lyndon(&w.exchange())?))
}

/// Christoffel test as "balanced unbordered word".
pub fn is_christoffel_by_unbordered(w: &Word) -> Result<bool> {
    Ok(is_balanced(w) && is_unbordered(w)?)
}

/// Some rotation of `u` is a Christoffel word. All Christoffel words with a
/// given Parikh vector are rotations of each other, so this reduces to a
/// rotation match against the lower word.
pub fn is_conjugate_of_christoffel(u: &Word) -> Result<bool> {
    non_empty(u)?;
    let pv = u.parikh();
    if u.len() > 1 && gcd(pv.a, pv.b) != 1 {
        return Ok(false);
    }
    if u.len() == 1 {
        return Ok(true);
    }
    let lower = generate_lower(pv.a, pv.b)?;
    let doubled = lower.concat(&lower);
    Ok(doubled.letters().windows(u.len()).any(|win| win == u.letters()))
}

/// Literal form of [`is_conjugate_of_christoffel`]: test every rotation.
pub fn is_conjugate_of_christoffel_naive(u: &Word) -> Result<bool> {
    non_empty(u)?;
    for c in u.conjugates() {
        if is_christoffel(&c)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every predicate of this module evaluated on one word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub word: Word,
    pub balanced: bool,
    pub lyndon: bool,
    pub unbordered: bool,
    pub primitive: bool,
    pub trapezoidal: bool,
    pub christoffel: bool,
    pub conjugate_of_christoffel: bool,
}

pub fn classify(w: &Word) -> Result<ClassificationReport> {
    non_empty(w)?;
    Ok(ClassificationReport {
        word: w.clone(),
        balanced: is_balanced(w),
        lyndon: is_lyndon(w)?,
        unbordered: is_unbordered(w)?,
        primitive: w.is_primitive()?,
        trapezoidal: is_trapezoidal(w),
        christoffel: is_christoffel(w)?,
        conjugate_of_christoffel: is_conjugate_of_christoffel(w)?,
    })
}
