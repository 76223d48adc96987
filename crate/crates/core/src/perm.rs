//! Permutations in one-line notation.
//!
//! Positions and values are 1-based throughout: a permutation of length `n`
//! is a word over `1..=n` in which every value occurs once.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_avoiders`] unless a cap is given.
pub const DEFAULT_N_CAP: usize = 10;

/// `n + 1 - i`, the reflection of `i` inside `1..=n`.
#[inline]
pub fn bar(n: usize, i: usize) -> usize {
    debug_assert!((1..=n).contains(&i));
    n + 1 - i
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    entries: Vec<usize>,
}

/// The two length-3 patterns this crate works with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pattern {
    #[serde(rename = "321")]
    P321,
    #[serde(rename = "132")]
    P132,
}

impl Pattern {
    /// Whether the values at positions `i < j < k` form this pattern.
    #[inline]
    pub fn matches(self, a: usize, b: usize, c: usize) -> bool {
        match self {
            Pattern::P321 => a > b && b > c,
            Pattern::P132 => b > c && c > a,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::P321 => "321",
            Pattern::P132 => "132",
        })
    }
}

impl FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "321" => Ok(Pattern::P321),
            "132" => Ok(Pattern::P132),
            other => Err(format!(
                "unsupported pattern {other:?} (expected 321 or 132)"
            )),
        }
    }
}

/// Positions `i < j < k` (1-based) of a length-3 pattern occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternTriple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// Positions of 2-elements and 1-elements of a 321-avoider.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TwoOneClasses {
    pub twos: Vec<usize>,
    pub ones: Vec<usize>,
}

impl Permutation {
    /// Validates that `entries` is a permutation of `1..=entries.len()`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return Err(Error::OutOfRange {
                    token: v.to_string(),
                    n,
                });
            }
            if seen[v] {
                return Err(Error::Duplicate {
                    token: v.to_string(),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have n >= 1");
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    /// Parses whitespace- or comma-separated values, or a bare digit string when `n <= 9`.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return Err(Error::Empty);
        }
        if tokens.len() == 1 && tokens[0].len() > 1 {
            let word = tokens[0];
            if !word.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::BadToken {
                    token: word.to_string(),
                });
            }
            if word.len() > 9 {
                return Err(Error::CompactTooLong {
                    token: word.to_string(),
                });
            }
            let digits: Vec<String> = word.chars().map(String::from).collect();
            return Self::from_tokens(&digits);
        }
        Self::from_tokens(&tokens)
    }

    fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let n = tokens.len();
        let mut seen = vec![false; n + 1];
        let mut entries = Vec::with_capacity(n);
        for tok in tokens {
            let tok = tok.as_ref();
            let v: usize = tok.parse().map_err(|_| Error::BadToken {
                token: tok.to_string(),
            })?;
            if v == 0 || v > n {
                return Err(Error::OutOfRange {
                    token: tok.to_string(),
                    n,
                });
            }
            if seen[v] {
                return Err(Error::Duplicate {
                    token: tok.to_string(),
                });
            }
            seen[v] = true;
            entries.push(v);
        }
        Ok(Permutation { entries })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }

    /// The value at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// 1-based position holding value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.entries
            .iter()
            .position(|&x| x == v)
            .expect("value in range")
            + 1
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Digit-string form, available only when `n <= 9`.
    pub fn compact(&self) -> Option<String> {
        (self.n() <= 9).then(|| self.entries.iter().map(|v| v.to_string()).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { entries: inv }
    }

    pub fn reverse(&self) -> Self {
        Permutation {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        Permutation {
            entries: self.entries.iter().map(|&v| bar(n, v)).collect(),
        }
    }

    /// Reverse of the complement (the two commute).
    pub fn rc(&self) -> Self {
        self.complement().reverse()
    }

    /// Inverse of [`Permutation::rc`].
    pub fn irc(&self) -> Self {
        self.rc().inverse()
    }

    pub fn find_pattern(&self, pattern: Pattern) -> Option<PatternTriple> {
        let e = &self.entries;
        let n = e.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if pattern.matches(e[i], e[j], e[k]) {
                        return Some(PatternTriple {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn avoids(&self, pattern: Pattern) -> bool {
        self.find_pattern(pattern).is_none()
    }

    /// The lexicographically least 132 occurrence `(i, j, k)`.
    pub fn smallest_132(&self) -> Option<PatternTriple> {
        // The scan runs in lexicographic order of (i, j, k).
        self.find_pattern(Pattern::P132)
    }

    pub(crate) fn require_avoids(&self, pattern: Pattern) -> Result<()> {
        if self.avoids(pattern) {
            Ok(())
        } else {
            Err(Error::ContainsPattern {
                perm: self.to_string(),
                pattern,
            })
        }
    }

    pub fn fixed_points(&self) -> usize {
        self.entries
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i + 1)
            .count()
    }

    pub fn excedances(&self) -> usize {
        self.entries
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v > i + 1)
            .count()
    }

    /// All 21-patterns as 1-based position pairs `(x, y)`, `x < y`, in lexicographic order.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let e = &self.entries;
        let mut out = Vec::new();
        for x in 0..e.len() {
            for y in x + 1..e.len() {
                if e[x] > e[y] {
                    out.push((x + 1, y + 1));
                }
            }
        }
        out
    }

    /// Splits the positions of a 321-avoider into 2-elements and 1-elements.
    pub fn two_one_classify(&self) -> Result<TwoOneClasses> {
        self.require_avoids(Pattern::P321)?;
        let n = self.n();
        let mut is_two = vec![false; n + 1];
        let mut is_one = vec![false; n + 1];
        for (x, y) in self.inversions() {
            is_two[x] = true;
            is_one[y] = true;
        }
        let twos: Vec<usize> = (1..=n).filter(|&i| is_two[i]).collect();
        let ones: Vec<usize> = (1..=n).filter(|&i| is_one[i]).collect();
        debug_assert!(twos.iter().all(|&i| !is_one[i]));
        debug_assert!(twos.windows(2).all(|w| self.at(w[0]) < self.at(w[1])));
        debug_assert!(ones.windows(2).all(|w| self.at(w[0]) < self.at(w[1])));
        Ok(TwoOneClasses { twos, ones })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.entries {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.entries
    }
}

/// `C_n`, via the convolution recurrence `C_{m+1} = sum C_i C_{m-i}`.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

/// Members of `S_n(pattern)` in lexicographic order of their one-line words.
///
/// Built depth-first: a prefix is extended only while it still avoids the
/// pattern, since containment is inherited by every extension.
pub fn enumerate_avoiders(n: usize, pattern: Pattern) -> Result<Avoiders> {
    enumerate_avoiders_capped(n, pattern, DEFAULT_N_CAP)
}

pub fn enumerate_avoiders_capped(n: usize, pattern: Pattern, cap: usize) -> Result<Avoiders> {
    if n == 0 || n > cap {
        return Err(Error::NOutOfRange { n, cap });
    }
    Ok(Avoiders {
        n,
        pattern,
        prefix: Vec::with_capacity(n),
        used: vec![false; n + 1],
        cursor: vec![1],
    })
}

/// Streaming iterator returned by [`enumerate_avoiders`].
#[derive(Debug, Clone)]
pub struct Avoiders {
    n: usize,
    pattern: Pattern,
    prefix: Vec<usize>,
    used: Vec<bool>,
    // Next candidate value at each depth; one entry deeper than `prefix`.
    cursor: Vec<usize>,
}

impl Avoiders {
    fn extends(&self, v: usize) -> bool {
        let p = &self.prefix;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if self.pattern.matches(p[i], p[j], v) {
                    return false;
                }
            }
        }
        true
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            let mut c = *self.cursor.last()?;
            while c <= self.n && (self.used[c] || !self.extends(c)) {
                c += 1;
            }
            if c > self.n {
                self.cursor.pop();
                if let Some(v) = self.prefix.pop() {
                    self.used[v] = false;
                    if let Some(top) = self.cursor.last_mut() {
                        *top += 1;
                    }
                }
                continue;
            }
            *self.cursor.last_mut().unwrap() = c;
            self.prefix.push(c);
            self.used[c] = true;
            if self.prefix.len() == self.n {
                let out = Permutation {
                    entries: self.prefix.clone(),
                };
                self.prefix.pop();
                self.used[c] = false;
                *self.cursor.last_mut().unwrap() += 1;
                return Some(out);
            }
            self.cursor.push(1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("1 4 2 3 7 5 8 6").entries(), &[1, 4, 2, 3, 7, 5, 8, 6]);
        assert_eq!(p("14237586"), p("1,4,2,3,7,5,8,6"));
        assert_eq!(p("1").entries(), &[1]);
        assert_eq!(p("10 1 2 3 4 5 6 7 8 9").n(), 10);
        assert_eq!(p("1 4 2 3 7 5 8 6").to_string(), "1 4 2 3 7 5 8 6");
    }

    #[test]
    fn parse_errors_name_the_token() {
        assert_eq!(Permutation::parse("  "), Err(Error::Empty));
        assert_eq!(
            Permutation::parse("1 2 2"),
            Err(Error::Duplicate { token: "2".into() })
        );
        assert_eq!(
            Permutation::parse("1 4 2"),
            Err(Error::OutOfRange {
                token: "4".into(),
                n: 3
            })
        );
        assert_eq!(
            Permutation::parse("0"),
            Err(Error::OutOfRange {
                token: "0".into(),
                n: 1
            })
        );
        assert_eq!(
            Permutation::parse("1 x"),
            Err(Error::BadToken { token: "x".into() })
        );
        assert!(matches!(
            Permutation::parse("1234567891"),
            Err(Error::CompactTooLong { .. })
        ));
        assert_eq!(
            Permutation::parse("112"),
            Err(Error::Duplicate { token: "1".into() })
        );
    }

    #[test]
    fn symmetries_on_worked_example() {
        let s = p("14237586");
        assert_eq!(s.inverse(), p("13426857"));
        assert_eq!(s.reverse(), p("68573241"));
        assert_eq!(s.complement(), p("85762413"));
        assert_eq!(s.rc(), p("31426758"));
        assert_eq!(s.irc(), p("24137568"));
        let q = p("21");
        assert_eq!(q.inverse(), q);
        assert_eq!(q.reverse(), p("12"));
        assert_eq!(q.complement(), p("12"));
        assert_eq!(q.rc(), q);
        assert_eq!(q.irc(), q);
        let id = Permutation::identity(3);
        assert_eq!(id.reverse(), p("321"));
        assert_eq!(id.complement(), p("321"));
        assert_eq!(id.rc(), id);
        assert_eq!(id.inverse(), id);
    }

    #[test]
    fn patterns_and_statistics() {
        assert!(p("14237586").avoids(Pattern::P321));
        assert!(p("78643521").avoids(Pattern::P132));
        assert!(!p("321").avoids(Pattern::P321));
        assert_eq!(
            p("14237586").smallest_132(),
            Some(PatternTriple { i: 1, j: 2, k: 3 })
        );
        assert_eq!(
            p("132").smallest_132(),
            Some(PatternTriple { i: 1, j: 2, k: 3 })
        );
        assert_eq!(Permutation::identity(6).smallest_132(), None);

        assert_eq!(p("14237586").fixed_points(), 1);
        assert_eq!(Permutation::identity(5).fixed_points(), 5);
        assert_eq!(p("78643521").fixed_points(), 1);
        assert_eq!(p("14237586").excedances(), 3);
        assert_eq!(Permutation::identity(5).excedances(), 0);
        assert_eq!(p("78643521").excedances(), 3);
    }

    #[test]
    fn two_one_classes() {
        let c = p("14237586").two_one_classify().unwrap();
        assert_eq!(c.twos, vec![2, 5, 7]);
        assert_eq!(c.ones, vec![3, 4, 6, 8]);
        assert_eq!(
            Permutation::identity(4).two_one_classify().unwrap(),
            TwoOneClasses::default()
        );
        let c = p("21").two_one_classify().unwrap();
        assert_eq!((c.twos, c.ones), (vec![1], vec![2]));
        assert!(matches!(
            p("321").two_one_classify(),
            Err(Error::ContainsPattern {
                pattern: Pattern::P321,
                ..
            })
        ));
    }

    #[test]
    fn enumeration_small_cases() {
        let s3: Vec<String> = enumerate_avoiders(3, Pattern::P321)
            .unwrap()
            .map(|q| q.compact().unwrap())
            .collect();
        assert_eq!(s3, ["123", "132", "213", "231", "312"]);
        let s1: Vec<_> = enumerate_avoiders(1, Pattern::P132).unwrap().collect();
        assert_eq!(s1, vec![Permutation::identity(1)]);
        assert_eq!(enumerate_avoiders(4, Pattern::P321).unwrap().count(), 14);
        assert_eq!(
            enumerate_avoiders(11, Pattern::P321).unwrap_err(),
            Error::NOutOfRange { n: 11, cap: 10 }
        );
        assert!(enumerate_avoiders(0, Pattern::P132).is_err());
    }

    #[test]
    fn catalan_values() {
        let got: Vec<u64> = (1..=10).map(catalan).collect();
        assert_eq!(got, [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
    }

    #[test]
    fn serde_is_a_plain_array() {
        let s = p("2 3 1");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[2,3,1]");
        assert!(serde_json::from_str::<Permutation>("[2,2,1]").is_err());
    }
}
