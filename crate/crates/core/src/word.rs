//! Binary words and the exact primitives everything else is checked against.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Index};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A letter of the ordered alphabet `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    /// The other letter.
    pub fn exchanged(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }
}

impl TryFrom<char> for Letter {
    type Error = char;

    fn try_from(c: char) -> std::result::Result<Self, char> {
        match c {
            'a' => Ok(Letter::A),
            'b' => Ok(Letter::B),
            other => Err(other),
        }
    }
}

/// Number of `a`s and `b`s of a word.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParikhVector {
    pub a: usize,
    pub b: usize,
}

impl ParikhVector {
    pub const fn new(a: usize, b: usize) -> Self {
        ParikhVector { a, b }
    }

    /// Total number of letters `a + b`.
    pub fn len(self) -> usize {
        self.a + self.b
    }

    pub fn is_empty(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// `(p - i, q - j)` for `self = (i, j)` and `total = (p, q)`, or `None`
    /// when `self` lies outside the `(p+1) x (q+1)` box.
    pub fn complement_in(self, total: ParikhVector) -> Option<ParikhVector> {
        Some(ParikhVector::new(
            total.a.checked_sub(self.a)?,
            total.b.checked_sub(self.b)?,
        ))
    }
}

impl Add for ParikhVector {
    type Output = ParikhVector;

    fn add(self, rhs: ParikhVector) -> ParikhVector {
        ParikhVector::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl From<(usize, usize)> for ParikhVector {
    fn from((a, b): (usize, usize)) -> Self {
        ParikhVector::new(a, b)
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Serialize for ParikhVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(serializer)
    }
}

/// A finite word over `{a, b}`. The empty word is a valid value.
///
/// Ordering is lexicographic with `a < b` and a proper prefix before its
/// extensions.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The word of length `len` whose letters are the bits of `bits`, most
    /// significant first, `0 = a` and `1 = b`. Counting `bits` upwards
    /// enumerates the words of a length in lexicographic order.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        debug_assert!(len <= 64);
        Word(
            (0..len)
                .map(|i| {
                    if (bits >> (len - 1 - i)) & 1 == 0 {
                        Letter::A
                    } else {
                        Letter::B
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().copied()
    }

    /// The factor occupying the 0-based half-open range `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn parikh(&self) -> ParikhVector {
        parikh_of(&self.0)
    }

    pub fn reversal(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The word with `a` and `b` swapped.
    pub fn exchange(&self) -> Word {
        Word(self.0.iter().map(|l| l.exchanged()).collect())
    }

    /// Rotation by `shift` letters to the left.
    pub fn rotate(&self, shift: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let mut letters = self.0.clone();
        letters.rotate_left(shift % self.len());
        Word(letters)
    }

    /// The `n` rotations in shift order `0, 1, ..., n-1`, duplicates kept.
    /// The empty word has the single conjugate `ε`.
    pub fn conjugates(&self) -> Vec<Word> {
        if self.is_empty() {
            return vec![Word::empty()];
        }
        (0..self.len()).map(|s| self.rotate(s)).collect()
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Lengths of the borders (non-empty proper prefixes that are also
    /// suffixes), longest first.
    fn borders(&self) -> Vec<usize> {
        let failure = prefix_function(&self.0);
        let mut out = Vec::new();
        let mut b = failure.last().copied().unwrap_or(0);
        while b > 0 {
            out.push(b);
            b = failure[b - 1];
        }
        out
    }

    /// All periods `1 <= p <= n`; `n` itself is always included.
    pub fn periods(&self) -> Result<BTreeSet<usize>> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = self.len();
        let mut out: BTreeSet<usize> = self.borders().into_iter().map(|b| n - b).collect();
        out.insert(n);
        Ok(out)
    }

    /// Smallest period of a non-empty word.
    pub fn smallest_period(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(self.len() - self.borders().first().copied().unwrap_or(0))
    }

    pub fn is_primitive(&self) -> Result<bool> {
        let n = self.len();
        let p = self.smallest_period()?;
        Ok(p == n || !n.is_multiple_of(p))
    }

    /// `k` copies of `self`, `k >= 1`.
    pub fn power(&self, k: usize) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        Ok(Word(self.0.repeat(k)))
    }

    /// The distinct factors of `self`, `ε` and `self` included. Brute force
    /// over all windows, deduplicated by the set.
    pub fn factor_set(&self) -> BTreeSet<Word> {
        let n = self.len();
        let mut out = BTreeSet::new();
        out.insert(Word::empty());
        for start in 0..n {
            for end in start + 1..=n {
                out.insert(self.slice(start, end));
            }
        }
        out
    }

    /// Distinct length-`k` factors of `self` (brute force).
    pub fn factors_of_length(&self, k: usize) -> BTreeSet<Word> {
        if k > self.len() {
            return BTreeSet::new();
        }
        (0..=self.len() - k).map(|s| self.slice(s, s + k)).collect()
    }

    /// Distinct length-`k` circular factors: the windows of `self·self`
    /// starting at positions `1..=n`.
    pub fn circular_factor_set(&self, k: usize) -> Result<BTreeSet<Word>> {
        self.check_circular_length(k)?;
        if k == 0 {
            return Ok(BTreeSet::from([Word::empty()]));
        }
        let doubled = self.concat(self);
        Ok((0..self.len()).map(|s| doubled.slice(s, s + k)).collect())
    }

    /// Same set as [`Word::circular_factor_set`], built as the union of the
    /// length-`k` factors of every conjugate.
    pub fn circular_factor_set_via_conjugates(&self, k: usize) -> Result<BTreeSet<Word>> {
        self.check_circular_length(k)?;
        Ok(self
            .conjugates()
            .iter()
            .flat_map(|c| c.factors_of_length(k))
            .collect())
    }

    fn check_circular_length(&self, k: usize) -> Result<()> {
        if k > self.len() {
            return Err(Error::OutOfRange {
                what: "circular factor length",
                value: k,
                min: 0,
                max: self.len(),
            });
        }
        Ok(())
    }
}

pub(crate) fn parikh_of(letters: &[Letter]) -> ParikhVector {
    let a = letters.iter().filter(|&&l| l == Letter::A).count();
    ParikhVector::new(a, letters.len() - a)
}

/// Knuth–Morris–Pratt failure function: `out[i]` is the length of the
/// longest border of `s[..=i]`.
fn prefix_function(s: &[Letter]) -> Vec<usize> {
    let mut out = vec![0; s.len()];
    for i in 1..s.len() {
        let mut k = out[i - 1];
        while k > 0 && s[i] != s[k] {
            k = out[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        out[i] = k;
    }
    out
}

/// All words of length `len` in lexicographic order.
pub fn words_of_length(len: usize) -> impl Iterator<Item = Word> {
    assert!(len < 64, "word enumeration limited to length < 64");
    (0..1u64 << len).map(move |bits| Word::from_bits(len, bits))
}

impl Index<usize> for Word {
    type Output = Letter;

    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, c)| {
                Letter::try_from(c).map_err(|letter| Error::InvalidLetter { letter, position })
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Word> {
        items.iter().map(|s| w(s)).collect()
    }

    fn periods_brute(word: &Word) -> BTreeSet<usize> {
        let n = word.len();
        (1..=n)
            .filter(|&p| (0..n - p).all(|i| word[i] == word[i + p]))
            .collect()
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::bool::ANY, 0..=max_len)
            .prop_map(|bits| bits.into_iter().map(|b| if b { Letter::B } else { Letter::A }).collect())
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("aabab").to_string(), "aabab");
        assert_eq!(w("").len(), 0);
        assert_eq!(
            "abc".parse::<Word>(),
            Err(Error::InvalidLetter { letter: 'c', position: 2 })
        );
    }

    #[test]
    fn parikh_examples() {
        assert_eq!(w("aabab").parikh(), ParikhVector::new(3, 2));
        assert_eq!(w("").parikh(), ParikhVector::new(0, 0));
        assert_eq!(w("aabaabaabab").parikh(), ParikhVector::new(7, 4));
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(w("aabab").reversal(), w("babaa"));
        assert_eq!(w("").reversal(), w(""));
        assert_eq!(w("aba").reversal(), w("aba"));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(w("ab").conjugates(), vec![w("ab"), w("ba")]);
        assert_eq!(w("aa").conjugates(), vec![w("aa"), w("aa")]);
        assert_eq!(
            w("aabab").conjugates(),
            vec![w("aabab"), w("ababa"), w("babaa"), w("abaab"), w("baaba")]
        );
        assert_eq!(w("").conjugates(), vec![w("")]);
    }

    #[test]
    fn palindrome_examples() {
        assert!(w("aba").is_palindrome());
        assert!(!w("aabab").is_palindrome());
        assert!(w("babab").is_palindrome());
        assert!(w("").is_palindrome());
    }

    #[test]
    fn period_examples() {
        // 3 is not a period of abab: w[1] = a but w[4] = b.
        assert_eq!(w("abab").periods().unwrap(), BTreeSet::from([2, 4]));
        assert_eq!(w("aaaa").periods().unwrap(), BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(w("aabab").periods().unwrap(), BTreeSet::from([5]));
        assert_eq!(w("").periods(), Err(Error::EmptyWord));
    }

    #[test]
    fn primitive_examples() {
        assert!(w("aabb").is_primitive().unwrap());
        assert!(!w("aabbaabb").is_primitive().unwrap());
        assert!(w("a").is_primitive().unwrap());
        assert!(w("aba").is_primitive().unwrap());
        assert!(!w("aa").is_primitive().unwrap());
        assert_eq!(w("").is_primitive(), Err(Error::EmptyWord));
    }

    #[test]
    fn power_examples() {
        assert_eq!(w("aabb").power(2).unwrap(), w("aabbaabb"));
        assert_eq!(w("ab").power(1).unwrap(), w("ab"));
        assert_eq!(w("aab").power(3).unwrap(), w("aabaabaab"));
        assert_eq!(w("ab").power(0), Err(Error::ZeroExponent));
        assert_eq!(w("").power(2), Err(Error::EmptyWord));
    }

    #[test]
    fn factor_set_examples() {
        assert_eq!(
            w("aabab").factor_set(),
            set(&["", "a", "b", "aa", "ab", "ba", "aab", "aba", "bab", "aaba", "abab", "aabab"])
        );
        assert_eq!(w("").factor_set(), set(&[""]));
        assert_eq!(w("aa").factor_set(), set(&["", "a", "aa"]));
    }

    #[test]
    fn circular_factor_examples() {
        assert_eq!(w("aabab").circular_factor_set(2).unwrap(), set(&["aa", "ab", "ba"]));
        assert_eq!(w("aabab").circular_factor_set(0).unwrap(), set(&[""]));
        assert_eq!(w("ab").circular_factor_set(2).unwrap(), set(&["ab", "ba"]));
        assert_eq!(w("").circular_factor_set(0).unwrap(), set(&[""]));
        assert!(matches!(
            w("ab").circular_factor_set(3),
            Err(Error::OutOfRange { .. })
        ));
        assert!(w("ab").circular_factor_set_via_conjugates(3).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let words: Vec<Word> = words_of_length(3).collect();
        assert_eq!(words.len(), 8);
        assert_eq!(words[0], w("aaa"));
        assert_eq!(words[1], w("aab"));
        assert_eq!(words[7], w("bbb"));
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn periods_match_brute_force_exhaustively() {
        for n in 1..=12 {
            for word in words_of_length(n) {
                assert_eq!(word.periods().unwrap(), periods_brute(&word), "{word}");
            }
        }
    }

    proptest! {
        #[test]
        fn window_count_bound(word in arb_word(24)) {
            let factors = word.factor_set();
            for k in 0..=word.len() {
                let c = factors.iter().filter(|f| f.len() == k).count();
                prop_assert!(c <= word.len() - k + 1);
            }
        }

        #[test]
        fn parikh_invariant_under_reversal(word in arb_word(64)) {
            prop_assert_eq!(word.reversal().parikh(), word.parikh());
            prop_assert_eq!(word.parikh().len(), word.len());
        }

        #[test]
        fn primitivity_matches_smallest_period(word in arb_word(24).prop_filter("non-empty", |w| !w.is_empty())) {
            let n = word.len();
            let p = *word.periods().unwrap().iter().next().unwrap();
            let is_power_of_prefix = n % p == 0 && word.slice(0, p).power(n / p).unwrap() == word;
            prop_assert!(is_power_of_prefix == (n % p == 0));
            // No proper divisor-length prefix generates the word.
            let brute_primitive = (1..n)
                .filter(|d| n % d == 0)
                .all(|d| word.slice(0, d).power(n / d).unwrap() != word);
            prop_assert_eq!(word.is_primitive().unwrap(), brute_primitive);
        }

        #[test]
        fn circular_constructions_agree(word in arb_word(16), k in 0usize..=16) {
            prop_assume!(k <= word.len());
            prop_assert_eq!(
                word.circular_factor_set(k).unwrap(),
                word.circular_factor_set_via_conjugates(k).unwrap()
            );
        }
    }
}
