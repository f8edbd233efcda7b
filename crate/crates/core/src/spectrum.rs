//! The factor spectrum `δ_w` and the symmetry predicates built on it.
//!
//! `δ_w(i, j)` is the number of distinct factors of `w` with Parikh vector
//! `(i, j)`. Only non-zero entries are stored; an absent key means zero.
//! [`delta_naive`] enumerates the factor set directly and is the oracle;
//! [`delta_fast`] walks a suffix automaton and must agree with it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::word::{Letter, ParikhVector, Word};
use crate::{Error, Result};

/// The map `(i, j) ↦ δ_w(i, j)` together with the Parikh vector of `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSpectrum {
    total: ParikhVector,
    counts: BTreeMap<ParikhVector, usize>,
}

impl FactorSpectrum {
    pub fn total(&self) -> ParikhVector {
        self.total
    }

    pub fn counts(&self) -> &BTreeMap<ParikhVector, usize> {
        &self.counts
    }

    /// `δ_w(i, j)`, zero outside the support.
    pub fn get(&self, at: ParikhVector) -> usize {
        self.counts.get(&at).copied().unwrap_or(0)
    }

    pub fn support(&self) -> SupportSet {
        SupportSet(self.counts.keys().copied().collect())
    }

    /// Antidiagonal sums `c(k) = Σ_{i+j=k} δ_w(i, j)` for `k = 0..=n`.
    pub fn profile(&self) -> ComplexityProfile {
        let mut values = vec![0; self.total.len() + 1];
        for (at, &c) in &self.counts {
            values[at.len()] += c;
        }
        ComplexityProfile(values)
    }

    /// `δ_w(i, j) = δ_w(p - i, q - j)` over the whole `(p+1) x (q+1)` box.
    pub fn is_strongly_symmetric(&self) -> bool {
        let ParikhVector { a: p, b: q } = self.total;
        (0..=p).all(|i| {
            (0..=q).all(|j| self.get(ParikhVector::new(i, j)) == self.get(ParikhVector::new(p - i, q - j)))
        })
    }

    /// The spectrum as a bivariate polynomial `Σ δ_w(i, j) a^i b^j`.
    pub fn polynomial(&self) -> BivariatePoly {
        let mut poly = BivariatePoly::zero(self.total.a, self.total.b);
        for (&at, &c) in &self.counts {
            poly.add_term(at, c as u64);
        }
        poly
    }

    /// The factor array: `q + 1` lines of `p + 1` space-separated counts,
    /// top line `j = q`, each line newline-terminated.
    pub fn to_grid(&self) -> String {
        let ParikhVector { a: p, b: q } = self.total;
        let mut out = String::new();
        for j in (0..=q).rev() {
            let row: Vec<String> = (0..=p).map(|i| self.get(ParikhVector::new(i, j)).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, word: &Word) -> SpectrumJson {
        SpectrumJson {
            word: word.to_string(),
            parikh: self.total,
            counts: self.counts.iter().map(|(at, &c)| [at.a, at.b, c]).collect(),
        }
    }
}

/// Wire form of a spectrum: `{"word", "parikh": [p,q], "counts": [[i,j,δ], …]}`
/// with `counts` sorted by `(i, j)`.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumJson {
    pub word: String,
    pub parikh: ParikhVector,
    pub counts: Vec<[usize; 3]>,
}

/// The sequence `c(0), …, c(n)` of distinct-factor counts by length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ComplexityProfile(Vec<usize>);

impl ComplexityProfile {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// `c(k) <= k + 1` for every `k`.
    pub fn within_trapezoid_bound(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &c)| c <= k + 1)
    }

    /// Unit steps up from `c(0) = 1`, a (possibly empty) plateau, unit steps
    /// down to `c(n) = 1`.
    pub fn has_trapezoid_shape(&self) -> bool {
        let c = &self.0;
        if c.first() != Some(&1) || c.last() != Some(&1) {
            return false;
        }
        let mut i = 0;
        while i + 1 < c.len() && c[i + 1] == c[i] + 1 {
            i += 1;
        }
        while i + 1 < c.len() && c[i + 1] == c[i] {
            i += 1;
        }
        while i + 1 < c.len() && c[i + 1] + 1 == c[i] {
            i += 1;
        }
        i + 1 == c.len()
    }
}

/// A set of lattice points; the support of a spectrum or a path's point set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SupportSet(BTreeSet<ParikhVector>);

impl SupportSet {
    pub fn new(points: BTreeSet<ParikhVector>) -> Self {
        SupportSet(points)
    }

    pub fn points(&self) -> &BTreeSet<ParikhVector> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, at: ParikhVector) -> bool {
        self.0.contains(&at)
    }

    /// Points with `i + j = level`.
    pub fn on_antidiagonal(&self, level: usize) -> impl Iterator<Item = ParikhVector> + '_ {
        self.0.iter().copied().filter(move |at| at.len() == level)
    }

    /// `(i, j)` in the set iff `(p - i, q - j)` is.
    pub fn is_symmetric_in(&self, total: ParikhVector) -> bool {
        self.0
            .iter()
            .all(|at| at.complement_in(total).is_some_and(|c| self.0.contains(&c)))
    }
}

impl FromIterator<ParikhVector> for SupportSet {
    fn from_iter<I: IntoIterator<Item = ParikhVector>>(iter: I) -> Self {
        SupportSet(iter.into_iter().collect())
    }
}

/// Dense polynomial in commuting variables `a`, `b` with non-negative
/// coefficients, stored over a fixed degree box `(deg_a, deg_b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    deg_a: usize,
    deg_b: usize,
    coeffs: Vec<u64>,
}

impl BivariatePoly {
    pub fn zero(deg_a: usize, deg_b: usize) -> Self {
        BivariatePoly { deg_a, deg_b, coeffs: vec![0; (deg_a + 1) * (deg_b + 1)] }
    }

    /// `Σ a^{|x|_a} b^{|x|_b}` over the given words, in the smallest box that
    /// holds them.
    pub fn from_words<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Self {
        let vectors: Vec<ParikhVector> = words.into_iter().map(Word::parikh).collect();
        let deg_a = vectors.iter().map(|v| v.a).max().unwrap_or(0);
        let deg_b = vectors.iter().map(|v| v.b).max().unwrap_or(0);
        let mut poly = BivariatePoly::zero(deg_a, deg_b);
        for v in vectors {
            poly.add_term(v, 1);
        }
        poly
    }

    fn index(&self, i: usize, j: usize) -> usize {
        i * (self.deg_b + 1) + j
    }

    pub fn coeff(&self, i: usize, j: usize) -> u64 {
        if i > self.deg_a || j > self.deg_b {
            return 0;
        }
        self.coeffs[self.index(i, j)]
    }

    fn add_term(&mut self, at: ParikhVector, c: u64) {
        let idx = self.index(at.a, at.b);
        self.coeffs[idx] += c;
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.deg_a, self.deg_b)
    }

    /// `a^{deg_a} b^{deg_b} P(1/a, 1/b)`.
    pub fn reciprocal(&self) -> BivariatePoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        BivariatePoly { coeffs, ..*self }
    }

    pub fn is_reciprocal(&self) -> bool {
        *self == self.reciprocal()
    }

    pub fn mul(&self, other: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero(self.deg_a + other.deg_a, self.deg_b + other.deg_b);
        for i in 0..=self.deg_a {
            for j in 0..=self.deg_b {
                let x = self.coeff(i, j);
                if x == 0 {
                    continue;
                }
                for k in 0..=other.deg_a {
                    for l in 0..=other.deg_b {
                        let idx = out.index(i + k, j + l);
                        out.coeffs[idx] += x * other.coeff(k, l);
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms = String::new();
        for i in 0..=self.deg_a {
            for j in 0..=self.deg_b {
                let c = self.coeff(i, j);
                if c != 0 {
                    if !terms.is_empty() {
                        terms.push_str(" + ");
                    }
                    let _ = write!(terms, "{c}a^{i}b^{j}");
                }
            }
        }
        if terms.is_empty() {
            terms.push('0');
        }
        f.write_str(&terms)
    }
}

/// Spectrum by grouping the brute-force factor set by Parikh vector.
pub fn delta_naive(w: &Word) -> FactorSpectrum {
    let mut counts = BTreeMap::new();
    for f in w.factor_set() {
        *counts.entry(f.parikh()).or_insert(0) += 1;
    }
    FactorSpectrum { total: w.parikh(), counts }
}

const NONE: usize = usize::MAX;

#[derive(Clone)]
struct State {
    len: usize,
    link: usize,
    next: [usize; 2],
    /// End index (0-based, inclusive) of one occurrence of the state's factors.
    end: usize,
}

/// Suffix automaton over `{a, b}`; state 0 is the initial state.
struct SuffixAutomaton {
    states: Vec<State>,
}

impl SuffixAutomaton {
    fn build(letters: &[Letter]) -> Self {
        let mut states = Vec::with_capacity(2 * letters.len() + 1);
        states.push(State { len: 0, link: NONE, next: [NONE; 2], end: NONE });
        let mut last = 0;
        for (pos, &letter) in letters.iter().enumerate() {
            let c = letter as usize;
            let cur = states.len();
            states.push(State { len: states[last].len + 1, link: 0, next: [NONE; 2], end: pos });
            let mut p = last;
            while p != NONE && states[p].next[c] == NONE {
                states[p].next[c] = cur;
                p = states[p].link;
            }
            if p != NONE {
                let q = states[p].next[c];
                if states[p].len + 1 == states[q].len {
                    states[cur].link = q;
                } else {
                    let clone = states.len();
                    let mut cloned = states[q].clone();
                    cloned.len = states[p].len + 1;
                    states.push(cloned);
                    while p != NONE && states[p].next[c] == q {
                        states[p].next[c] = clone;
                        p = states[p].link;
                    }
                    states[q].link = clone;
                    states[cur].link = clone;
                }
            }
            last = cur;
        }
        SuffixAutomaton { states }
    }
}

/// Same result as [`delta_naive`], computed from a suffix automaton. Each
/// state represents the factors ending at one position with lengths in
/// `(len(link), len]`; all occurrences of a factor share its Parikh vector,
/// so one end position per state and a prefix sum of `a`-counts resolve them.
pub fn delta_fast(w: &Word) -> FactorSpectrum {
    let letters = w.letters();
    let total = w.parikh();
    let mut prefix_a = Vec::with_capacity(letters.len() + 1);
    prefix_a.push(0usize);
    for &l in letters {
        prefix_a.push(prefix_a.last().unwrap() + usize::from(l == Letter::A));
    }

    let width = total.b + 1;
    let mut grid = vec![0usize; (total.a + 1) * width];
    grid[0] = 1;

    let automaton = SuffixAutomaton::build(letters);
    for state in &automaton.states[1..] {
        let shortest = automaton.states[state.link].len + 1;
        let stop = state.end + 1;
        for len in shortest..=state.len {
            let a = prefix_a[stop] - prefix_a[stop - len];
            grid[a * width + (len - a)] += 1;
        }
    }

    let counts = grid
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(idx, &c)| (ParikhVector::new(idx / width, idx % width), c))
        .collect();
    FactorSpectrum { total, counts }
}

pub fn complexity_profile(w: &Word) -> ComplexityProfile {
    delta_fast(w).profile()
}

pub fn is_strongly_factor_symmetric(w: &Word) -> bool {
    delta_fast(w).is_strongly_symmetric()
}

pub fn is_factor_symmetric(w: &Word) -> bool {
    complexity_profile(w).is_symmetric()
}

pub fn support(w: &Word) -> SupportSet {
    delta_fast(w).support()
}

pub fn is_support_symmetric(w: &Word) -> bool {
    support(w).is_symmetric_in(w.parikh())
}

/// Whether the support meets the antidiagonal `i + j = p` in exactly one
/// point. For `1 <= p < |w|` this holds iff `p` is a period of `w`.
pub fn period_antidiagonal_check(w: &Word, p: usize) -> Result<bool> {
    if p == 0 || p >= w.len() {
        return Err(Error::OutOfRange {
            what: "period",
            value: p,
            min: 1,
            max: w.len().saturating_sub(1),
        });
    }
    Ok(support(w).on_antidiagonal(p).count() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::words_of_length;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn pv(a: usize, b: usize) -> ParikhVector {
        ParikhVector::new(a, b)
    }

    fn grid_rows(spectrum: &FactorSpectrum) -> Vec<Vec<usize>> {
        let t = spectrum.total();
        (0..=t.b)
            .rev()
            .map(|j| (0..=t.a).map(|i| spectrum.get(pv(i, j))).collect())
            .collect()
    }

    #[test]
    fn aabab_factor_array() {
        let s = delta_naive(&w("aabab"));
        assert_eq!(grid_rows(&s), vec![vec![0, 1, 1, 1], vec![1, 2, 2, 1], vec![1, 1, 1, 0]]);
        assert_eq!(s.to_grid(), "0 1 1 1\n1 2 2 1\n1 1 1 0\n");
        assert_eq!(delta_fast(&w("aabab")), s);
    }

    #[test]
    fn aabb_all_ones() {
        let s = delta_naive(&w("aabb"));
        assert_eq!(grid_rows(&s), vec![vec![1; 3]; 3]);
        assert_eq!(delta_fast(&w("aabb")), s);
    }

    #[test]
    fn figure_word_labels() {
        let s = delta_naive(&w("aabaabaabab"));
        for (at, c) in [(pv(1, 1), 2), (pv(2, 1), 3), (pv(4, 1), 1), (pv(3, 2), 3), (pv(5, 3), 3), (pv(6, 4), 1)] {
            assert_eq!(s.get(at), c, "{at}");
        }
    }

    #[test]
    fn empty_word_spectrum() {
        let s = delta_fast(&Word::empty());
        assert_eq!(s.counts().len(), 1);
        assert_eq!(s.get(pv(0, 0)), 1);
        assert_eq!(s, delta_naive(&Word::empty()));
        assert_eq!(s.to_grid(), "1\n");
    }

    #[test]
    fn profiles() {
        assert_eq!(complexity_profile(&w("aabab")).values(), &[1, 2, 3, 3, 2, 1]);
        assert_eq!(complexity_profile(&w("aaaa")).values(), &[1, 1, 1, 1, 1]);
        assert_eq!(complexity_profile(&w("aabb")).values(), &[1, 2, 3, 2, 1]);
    }

    #[test]
    fn strong_symmetry_examples() {
        assert!(is_strongly_factor_symmetric(&w("aabab")));
        assert!(is_strongly_factor_symmetric(&w("aabb")));
        assert!(!is_strongly_factor_symmetric(&w("aabbaabb")));
    }

    #[test]
    fn factor_symmetry_examples() {
        assert!(is_factor_symmetric(&w("aabab")));
        assert!(is_factor_symmetric(&Word::empty()));
        // Profile 1,2,4,4,4,4,3,2,1.
        assert_eq!(complexity_profile(&w("aabbaabb")).values(), &[1, 2, 4, 4, 4, 4, 3, 2, 1]);
        assert!(!is_factor_symmetric(&w("aabbaabb")));
    }

    #[test]
    fn support_examples() {
        let s = support(&w("aabab"));
        let mut expected: BTreeSet<ParikhVector> =
            (0..=3).flat_map(|i| (0..=2).map(move |j| pv(i, j))).collect();
        expected.remove(&pv(3, 0));
        expected.remove(&pv(0, 2));
        assert_eq!(s.points(), &expected);
        assert_eq!(support(&w("aabb")).len(), 9);
        assert_eq!(support(&w("aabaabaabab")).len(), 22);
    }

    #[test]
    fn support_symmetry_examples() {
        assert!(is_support_symmetric(&w("aabab")));
        assert!(is_support_symmetric(&w("aab")));
        assert!(is_support_symmetric(&w("aabb")));
        assert!(!is_support_symmetric(&w("aaba")));
    }

    #[test]
    fn antidiagonal_examples() {
        assert_eq!(period_antidiagonal_check(&w("abab"), 2), Ok(true));
        assert_eq!(period_antidiagonal_check(&w("aabab"), 2), Ok(false));
        assert_eq!(period_antidiagonal_check(&w("aaaa"), 1), Ok(true));
        assert!(period_antidiagonal_check(&w("aaaa"), 0).is_err());
        assert!(period_antidiagonal_check(&w("aaaa"), 4).is_err());
        assert!(period_antidiagonal_check(&w("a"), 1).is_err());
    }

    #[test]
    fn json_shape() {
        let word = w("ab");
        let json = serde_json::to_string(&delta_fast(&word).to_json(&word)).unwrap();
        assert_eq!(
            json,
            r#"{"word":"ab","parikh":[1,1],"counts":[[0,0,1],[0,1,1],[1,0,1],[1,1,1]]}"#
        );
    }

    #[test]
    fn trapezoid_shape_detector() {
        let shape = |v: Vec<usize>| ComplexityProfile(v).has_trapezoid_shape();
        assert!(shape(vec![1]));
        assert!(shape(vec![1, 2, 3, 3, 2, 1]));
        assert!(shape(vec![1, 1, 1]));
        assert!(!shape(vec![1, 2, 4, 3, 2, 1]));
        assert!(!shape(vec![1, 2, 2, 3, 2, 1]));
        assert!(!shape(vec![1, 2, 1, 2, 1]));
    }

    #[test]
    fn fast_matches_naive_exhaustively_small() {
        for n in 0..=10 {
            for word in words_of_length(n) {
                assert_eq!(delta_fast(&word), delta_naive(&word), "{word}");
            }
        }
    }

    #[test]
    fn periodicity_lemma_small() {
        for n in 2..=10 {
            for word in words_of_length(n) {
                let periods = word.periods().unwrap();
                for p in 1..n {
                    assert_eq!(period_antidiagonal_check(&word, p).unwrap(), periods.contains(&p), "{word} {p}");
                }
            }
        }
    }

    #[test]
    fn trapezoidal_profiles_have_trapezoid_shape() {
        for n in 0..=12 {
            for word in words_of_length(n) {
                let profile = complexity_profile(&word);
                if profile.within_trapezoid_bound() {
                    assert!(profile.has_trapezoid_shape(), "{word} {:?}", profile.values());
                }
            }
        }
    }

    #[test]
    fn reciprocal_polynomial_example() {
        let poly = delta_fast(&w("aabab")).polynomial();
        assert!(poly.is_reciprocal());
        assert_eq!(poly.coeff(1, 1), 2);
        assert_eq!(poly.reciprocal().coeff(3, 0), poly.coeff(0, 2));
        assert!(!delta_fast(&w("aabbaabb")).polynomial().is_reciprocal());
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::bool::ANY, 0..=max_len)
            .prop_map(|bits| bits.into_iter().map(|b| if b { Letter::B } else { Letter::A }).collect())
    }

    proptest! {
        #[test]
        fn spectrum_invariants(word in arb_word(40)) {
            let s = delta_fast(&word);
            let t = word.parikh();
            prop_assert_eq!(s.get(ParikhVector::default()), 1);
            prop_assert_eq!(s.get(t), 1);
            for at in s.counts().keys() {
                prop_assert!(at.a <= t.a && at.b <= t.b);
            }
            let profile = s.profile();
            for k in 0..=word.len() {
                prop_assert_eq!(profile.values()[k], word.factors_of_length(k).len());
            }
        }

        #[test]
        fn strong_symmetry_is_polynomial_reciprocity(word in arb_word(20)) {
            let s = delta_fast(&word);
            prop_assert_eq!(s.is_strongly_symmetric(), s.polynomial().is_reciprocal());
        }

        #[test]
        fn strong_symmetry_implies_support_symmetry(word in arb_word(20)) {
            if is_strongly_factor_symmetric(&word) {
                prop_assert!(is_support_symmetric(&word));
                prop_assert!(is_factor_symmetric(&word));
            }
        }
    }
}
