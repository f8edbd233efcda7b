//! Exhaustive sweeps over bounded word spaces.
//!
//! Each [`TheoremId`] names one executable property. A sweep enumerates its
//! whole space (words by length then lexicographically, or Christoffel words
//! by length then `p`), evaluates the property, and collects counterexamples
//! in enumeration order. Work is spread with rayon over indexed ranges and
//! collected in order, so output does not depend on the thread count.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::attractor::cut_attractor;
use crate::bijection::{bijection_table, product_polynomial, suffix_prefix_product};
use crate::classify::{is_balanced, is_christoffel, is_conjugate_of_christoffel, is_trapezoidal};
use crate::geometry::{christoffel_words, palindromic_factorization, predicted_support};
use crate::spectrum::{delta_fast, is_factor_symmetric};
use crate::word::Word;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Christoffel words are strongly factor-symmetric.
    T1,
    /// Primitive, balanced, support-symmetric words are Christoffel.
    T2,
    /// For primitive `u` and `k >= 2`: `u^k` strongly factor-symmetric iff `u` Christoffel.
    T3,
    /// The cut bijection table is valid for every `k`.
    T4,
    /// The support is the union of the lower and upper path points.
    T5,
    /// For primitive `u` and `k >= 2`: `u^k` factor-symmetric iff `u` is a conjugate of a Christoffel word.
    T6,
    /// `p` is a period iff the support meets `i + j = p` in one point.
    PPeriod,
    /// Factors are the unambiguous product of suffixes of `u` and prefixes of `v`.
    PProduct,
    /// `{|u|, |u|+1}` is an attractor.
    PAttractor,
    /// Trapezoidal iff factor-symmetric.
    PTrapezoid,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::PPeriod,
        TheoremId::PProduct,
        TheoremId::PAttractor,
        TheoremId::PTrapezoid,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::PPeriod => "P-period",
            TheoremId::PProduct => "P-product",
            TheoremId::PAttractor => "P-attractor",
            TheoremId::PTrapezoid => "P-trapezoid",
        }
    }

    /// Upper limit on the bound accepted by [`verify`].
    pub fn cap(self) -> usize {
        match self {
            TheoremId::T1 | TheoremId::T5 => 24,
            TheoremId::T2 => 18,
            TheoremId::T3 | TheoremId::T6 => 10,
            TheoremId::T4 | TheoremId::PProduct | TheoremId::PAttractor => 18,
            TheoremId::PPeriod => 14,
            TheoremId::PTrapezoid => 16,
        }
    }

    /// What the bound measures.
    pub fn bound_kind(self) -> &'static str {
        match self {
            TheoremId::T1 | TheoremId::T4 | TheoremId::T5 | TheoremId::PProduct | TheoremId::PAttractor => "max p+q",
            TheoremId::T3 | TheoremId::T6 => "max |u|",
            TheoremId::T2 | TheoremId::PPeriod | TheoremId::PTrapezoid => "max length",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Largest power exponent accepted for T3 and T6.
pub const MAX_POWER: usize = 4;

/// Bounds of one sweep. `max_k` only matters for T3 and T6 (exponents
/// `2..=max_k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub bound: usize,
    pub max_k: usize,
}

impl Bounds {
    pub fn new(bound: usize) -> Self {
        Bounds { bound, max_k: 3 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRun {
    pub theorem: TheoremId,
    pub bounds: Bounds,
    pub counterexamples: Vec<Word>,
    pub checked_count: u64,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

fn seconds<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerificationRun {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks every word of length `min_len..=max_len`, returning the failures in
/// lexicographic order and the number of words checked.
fn sweep_words<F>(min_len: usize, max_len: usize, check: F) -> (Vec<Word>, u64)
where
    F: Fn(&Word) -> bool + Sync,
{
    let mut failures = Vec::new();
    let mut count = 0u64;
    for n in min_len..=max_len {
        let total = 1u64 << n;
        failures.extend(
            (0..total)
                .into_par_iter()
                .map(|bits| Word::from_bits(n, bits))
                .filter(|w| !check(w))
                .collect::<Vec<_>>(),
        );
        count += total;
    }
    (failures, count)
}

fn sweep_list<F>(words: Vec<Word>, check: F) -> (Vec<Word>, u64)
where
    F: Fn(&Word) -> bool + Sync,
{
    let count = words.len() as u64;
    let failures = words.into_par_iter().filter(|w| !check(w)).collect();
    (failures, count)
}

fn holds(r: Result<bool>) -> bool {
    r.unwrap_or(false)
}

fn power_check<F>(bounds: Bounds, check: F) -> (Vec<Word>, u64)
where
    F: Fn(&Word, &Word) -> Result<bool> + Sync + Send,
{
    let words: Vec<Word> = (1..=bounds.bound)
        .flat_map(crate::word::words_of_length)
        .filter(|u| u.is_primitive().unwrap_or(false))
        .collect();
    let failures: Vec<Word> = words
        .par_iter()
        .flat_map_iter(|u| {
            let check = &check;
            (2..=bounds.max_k).filter_map(move |k| {
                let power = u.power(k).ok()?;
                (!holds(check(u, &power))).then_some(power)
            })
        })
        .collect();
    let count = words.len() as u64 * bounds.max_k.saturating_sub(1) as u64;
    (failures, count)
}

fn theorem_1(w: &Word) -> bool {
    delta_fast(w).is_strongly_symmetric()
}

fn theorem_2(w: &Word) -> bool {
    // Cheapest test first; balance fails for most words.
    if !is_balanced(w) || !w.is_primitive().unwrap_or(false) {
        return true;
    }
    if !delta_fast(w).support().is_symmetric_in(w.parikh()) {
        return true;
    }
    holds(is_christoffel(w))
}

fn theorem_4(w: &Word) -> bool {
    (0..=w.len()).all(|k| bijection_table(w, k).and_then(|t| t.verify()).is_ok())
}

fn theorem_5(w: &Word) -> bool {
    predicted_support(w).is_ok_and(|s| s == delta_fast(w).support())
}

fn period_lemma(w: &Word) -> bool {
    let Ok(periods) = w.periods() else { return false };
    let support = delta_fast(w).support();
    (1..w.len()).all(|p| (support.on_antidiagonal(p).count() == 1) == periods.contains(&p))
}

fn product_lemma(w: &Word) -> bool {
    let Ok(cut) = palindromic_factorization(w) else { return false };
    let Ok(products) = suffix_prefix_product(w) else { return false };
    products.len() == (cut.left.len() + 1) * (cut.right.len() + 1)
        && product_polynomial(&cut) == delta_fast(w).polynomial()
}

/// Runs one sweep. Fails only on an unusable request (bound over the cap);
/// counterexamples are reported in the result.
pub fn verify(theorem: TheoremId, bounds: Bounds) -> Result<VerificationRun> {
    if bounds.bound > theorem.cap() {
        return Err(Error::OutOfRange { what: "bound", value: bounds.bound, min: 0, max: theorem.cap() });
    }
    if matches!(theorem, TheoremId::T3 | TheoremId::T6) && !(2..=MAX_POWER).contains(&bounds.max_k) {
        return Err(Error::OutOfRange { what: "max k", value: bounds.max_k, min: 2, max: MAX_POWER });
    }
    let start = Instant::now();
    let christoffel = || christoffel_words(bounds.bound).collect::<Vec<_>>();
    let christoffel_2 = || christoffel_words(bounds.bound).filter(|w| w.len() >= 2).collect::<Vec<_>>();
    let (counterexamples, checked_count) = match theorem {
        TheoremId::T1 => sweep_list(christoffel(), theorem_1),
        TheoremId::T2 => sweep_words(1, bounds.bound, theorem_2),
        TheoremId::T3 => power_check(bounds, |u, p| Ok(delta_fast(p).is_strongly_symmetric() == is_christoffel(u)?)),
        TheoremId::T4 => sweep_list(christoffel_2(), theorem_4),
        TheoremId::T5 => sweep_list(christoffel(), theorem_5),
        TheoremId::T6 => {
            power_check(bounds, |u, p| Ok(is_factor_symmetric(p) == is_conjugate_of_christoffel(u)?))
        }
        TheoremId::PPeriod => sweep_words(2, bounds.bound, period_lemma),
        TheoremId::PProduct => sweep_list(christoffel_2(), product_lemma),
        TheoremId::PAttractor => sweep_list(christoffel_2(), |w| cut_attractor(w).is_ok()),
        TheoremId::PTrapezoid => sweep_words(0, bounds.bound, |w| is_trapezoidal(w) == is_factor_symmetric(w)),
    };
    Ok(VerificationRun { theorem, bounds, counterexamples, checked_count, elapsed: start.elapsed() })
}

/// Largest length accepted by [`scan_open_question`].
pub const MAX_SCAN_LEN: usize = 18;

/// Words of one length found by [`scan_open_question`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub length: usize,
    pub words: Vec<Word>,
}

/// Primitive, trapezoidal, unbalanced words that are strongly
/// factor-symmetric, for every length `1..=max_length`.
pub fn scan_open_question(max_length: usize) -> Result<Vec<ScanResult>> {
    if max_length > MAX_SCAN_LEN {
        return Err(Error::OutOfRange { what: "max length", value: max_length, min: 0, max: MAX_SCAN_LEN });
    }
    Ok((1..=max_length)
        .map(|length| {
            let words = (0..1u64 << length)
                .into_par_iter()
                .map(|bits| Word::from_bits(length, bits))
                .filter(is_open_question_hit)
                .collect();
            ScanResult { length, words }
        })
        .collect())
}

pub fn is_open_question_hit(w: &Word) -> bool {
    !is_balanced(w)
        && w.is_primitive().unwrap_or(false)
        && is_trapezoidal(w)
        && delta_fast(w).is_strongly_symmetric()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_phi(n: usize) -> usize {
        (1..=n).filter(|&k| crate::geometry::gcd(n, k) == 1).count()
    }

    fn mobius(n: usize) -> i64 {
        let (mut m, mut result, mut d) = (n, 1, 2);
        while d * d <= m {
            if m % d == 0 {
                m /= d;
                if m % d == 0 {
                    return 0;
                }
                result = -result;
            }
            d += 1;
        }
        if m > 1 {
            result = -result;
        }
        result
    }

    fn primitive_count(n: usize) -> u64 {
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .map(|d| mobius(d) * (1i64 << (n / d)))
            .sum::<i64>() as u64
    }

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("p-period".parse::<TheoremId>().unwrap(), TheoremId::PPeriod);
        assert!(matches!("T7".parse::<TheoremId>(), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn caps_are_enforced() {
        assert!(verify(TheoremId::T1, Bounds::new(25)).is_err());
        assert!(verify(TheoremId::T2, Bounds::new(19)).is_err());
        assert!(verify(TheoremId::T3, Bounds { bound: 4, max_k: 5 }).is_err());
        assert!(verify(TheoremId::T3, Bounds { bound: 4, max_k: 1 }).is_err());
        assert!(verify(TheoremId::PPeriod, Bounds::new(15)).is_err());
    }

    #[test]
    fn christoffel_sweep_counts() {
        for bound in [1, 5, 12] {
            let run = verify(TheoremId::T1, Bounds::new(bound)).unwrap();
            let expected = 2 + (2..=bound).map(|n| 2 * euler_phi(n)).sum::<usize>();
            assert_eq!(run.checked_count, expected as u64);
            assert!(run.passed());
        }
    }

    #[test]
    fn word_sweep_counts() {
        let run = verify(TheoremId::T2, Bounds::new(10)).unwrap();
        assert_eq!(run.checked_count, (1 << 11) - 2);
        let run = verify(TheoremId::PPeriod, Bounds::new(8)).unwrap();
        assert_eq!(run.checked_count, (1 << 9) - 4);
        let run = verify(TheoremId::PTrapezoid, Bounds::new(8)).unwrap();
        assert_eq!(run.checked_count, (1 << 9) - 1);
    }

    #[test]
    fn power_sweep_counts() {
        let run = verify(TheoremId::T3, Bounds::new(6)).unwrap();
        let primitive: u64 = (1..=6).map(primitive_count).sum();
        assert_eq!(run.checked_count, primitive * 2);
        assert!(run.passed());
    }

    #[test]
    fn small_sweeps_pass() {
        for id in TheoremId::ALL {
            let run = verify(id, Bounds::new(id.cap().min(8))).unwrap();
            assert!(run.passed(), "{id}: {:?}", run.counterexamples);
        }
    }

    #[test]
    fn scan_small() {
        let scan = scan_open_question(2).unwrap();
        assert!(scan.iter().all(|r| r.words.is_empty()));
        let scan = scan_open_question(5).unwrap();
        assert_eq!(scan[3].words, vec!["aabb".parse::<Word>().unwrap(), "bbaa".parse().unwrap()]);
        assert!(scan_open_question(19).is_err());
    }

    #[test]
    fn run_json() {
        let run = verify(TheoremId::T1, Bounds::new(2)).unwrap();
        let v = serde_json::to_value(&run).unwrap();
        assert_eq!(v["theorem"], "T1");
        assert_eq!(v["checked_count"], 4);
        assert_eq!(v["counterexamples"], serde_json::json!([]));
    }
}
