//! String attractors: position sets that every factor (or circular factor)
//! has an occurrence through.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use serde::Serialize;

use crate::geometry::{palindromic_factorization, PalindromicCut};
use crate::word::{Letter, Word};
use crate::{Error, Result};

/// Largest word length [`minimum_attractor`] will search.
pub const MAX_SEARCH_LEN: usize = 24;

/// A set of 1-based positions of a word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PositionSet(BTreeSet<usize>);

impl PositionSet {
    pub fn new<I: IntoIterator<Item = usize>>(positions: I) -> Self {
        PositionSet(positions.into_iter().collect())
    }

    pub fn positions(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &PositionSet) -> bool {
        self.0.is_subset(&other.0)
    }

    fn check_range(&self, w: &Word) -> Result<()> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        match self.0.iter().find(|&&p| p == 0 || p > w.len()) {
            Some(&p) => Err(Error::OutOfRange { what: "position", value: p, min: 1, max: w.len() }),
            None => Ok(()),
        }
    }

    fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &p| m | 1 << (p - 1))
    }
}

impl std::fmt::Display for PositionSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// Every non-empty factor has an occurrence whose window contains a position
/// of `positions`.
pub fn is_attractor(w: &Word, positions: &PositionSet) -> Result<bool> {
    positions.check_range(w)?;
    let letters = w.letters();
    let n = letters.len();
    let mut covered: HashMap<&[Letter], bool> = HashMap::new();
    for start in 0..n {
        for end in start + 1..=n {
            // 1-based window start+1..=end
            let hit = positions.0.range(start + 1..=end).next().is_some();
            *covered.entry(&letters[start..end]).or_insert(false) |= hit;
        }
    }
    Ok(covered.values().all(|&c| c))
}

/// Circular version: occurrences are the windows of `w·w` of length at most
/// `n` starting at positions `1..=n`, their positions taken modulo `n`.
pub fn is_circular_attractor(w: &Word, positions: &PositionSet) -> Result<bool> {
    positions.check_range(w)?;
    let n = w.len();
    let doubled = w.concat(w);
    let letters = doubled.letters();
    let mut covered: HashMap<&[Letter], bool> = HashMap::new();
    for start in 0..n {
        for len in 1..=n {
            let hit = (start..start + len).any(|i| positions.0.contains(&(i % n + 1)));
            *covered.entry(&letters[start..start + len]).or_insert(false) |= hit;
        }
    }
    Ok(covered.values().all(|&c| c))
}

/// Smallest attractor, ties broken by the lexicographically smallest sorted
/// position list. Exhaustive, so limited to `|w| <= 24`.
pub fn minimum_attractor(w: &Word) -> Result<PositionSet> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    if n > MAX_SEARCH_LEN {
        return Err(Error::SearchBoundExceeded { length: n, max: MAX_SEARCH_LEN });
    }

    // Per distinct factor, the bitmask of positions of each occurrence.
    let letters = w.letters();
    let mut occurrences: HashMap<&[Letter], Vec<u64>> = HashMap::new();
    for start in 0..n {
        for end in start + 1..=n {
            let window = ((1u64 << (end - start)) - 1) << start;
            occurrences.entry(&letters[start..end]).or_default().push(window);
        }
    }
    let mut windows: Vec<Vec<u64>> = occurrences.into_values().collect();
    // Short factors have few occurrences and fail first.
    windows.sort_by_key(Vec::len);

    for size in 1..=n {
        for combo in (1..=n).combinations(size) {
            let candidate = PositionSet::new(combo);
            let mask = candidate.mask();
            if windows.iter().all(|occ| occ.iter().any(|&win| win & mask != 0)) {
                return Ok(candidate);
            }
        }
    }
    unreachable!("the full position set is always an attractor")
}

/// `{|u|, |u| + 1}` for the palindromic cut `u·v` of a Christoffel word;
/// fails if it is not an attractor.
pub fn cut_attractor(w: &Word) -> Result<PositionSet> {
    let PalindromicCut { cut, .. } = palindromic_factorization(w)?;
    let positions = PositionSet::new([cut, cut + 1]);
    if !is_attractor(w, &positions)? {
        return Err(Error::TheoremViolation(format!("{w}: cut positions {positions} are not an attractor")));
    }
    Ok(positions)
}
