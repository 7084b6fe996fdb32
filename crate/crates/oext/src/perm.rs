//! Core arithmetic of the symmetric group `S_n`: permutations in one-line
//! notation, products, length, content, descents, reduced words and the
//! Bruhat order.
//!
//! Composition is fixed globally as `(u·v)(i) = u(v(i))`. Consequently
//! `w·s_i` swaps the entries of `w` at positions `i, i+1`, while `s_i·w`
//! swaps the values `i, i+1`. Everything downstream of this module is
//! written against that choice; `w0·s_i·w0 = s_{n-i}` pins it in the tests.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Index of a simple reflection `s_i` (adjacent transposition of `i, i+1`),
/// with `1 <= i <= n-1` for the ambient rank `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleReflection(pub usize);

impl SimpleReflection {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for SimpleReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

/// A permutation of `{1..n}` in one-line notation: `entries[p]` is the image
/// of `p+1`. Immutable value with structural equality.
///
/// The derived-by-hand `Ord` below is *not* the Bruhat order; it is the
/// global deterministic output order (length first, then lexicographic
/// one-line notation) used everywhere results are listed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    entries: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from one-line notation. Rejects anything that is
    /// not a bijection on `{1..n}` and the empty sequence (rank 0).
    pub fn from_one_line(entries: &[usize]) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty sequence".into()));
        }
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("rank {n} too large")));
        }
        let mut seen = vec![false; n];
        for &e in entries {
            if e < 1 || e > n || seen[e - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a bijection on 1..{}",
                    entries, n
                )));
            }
            seen[e - 1] = true;
        }
        Ok(Self {
            entries: entries.iter().map(|&e| e as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("rank 0 rejected".into()));
        }
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("rank {n} too large")));
        }
        Ok(Self {
            entries: (1..=n as u8).collect(),
        })
    }

    /// The longest element `w0 = [n, n-1, ..., 1]`.
    pub fn longest_element(n: usize) -> Result<Self> {
        let mut w = Self::identity(n)?;
        w.entries.reverse();
        Ok(w)
    }

    /// The simple reflection `s_i` as an element of `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i < 1 || i >= n {
            return Err(Error::SimpleOutOfRange { index: i, n });
        }
        let mut w = Self::identity(n)?;
        w.entries.swap(i - 1, i);
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Image of `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.entries[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.entries.iter().map(|&e| e as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(p, &e)| e as usize == p + 1)
    }

    /// `(u·v)(i) = u(v(i))`.
    ///
    /// Panics on rank mismatch; all callers in this crate work inside a
    /// single ambient rank.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.n(),
            other.n(),
            "rank mismatch in composition: {} vs {}",
            self.n(),
            other.n()
        );
        Self {
            entries: other
                .entries
                .iter()
                .map(|&e| self.entries[e as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut entries = vec![0u8; self.entries.len()];
        for (p, &e) in self.entries.iter().enumerate() {
            entries[e as usize - 1] = (p + 1) as u8;
        }
        Self { entries }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let e = &self.entries;
        let mut count = 0;
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                if e[a] > e[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Content `c(w)`: the number of distinct simple reflections in any
    /// reduced word, i.e. the number of `i < n` with `w({1..i}) != {1..i}`.
    pub fn content(&self) -> usize {
        let mut running_max = 0u8;
        let mut count = 0;
        for (p, &e) in self.entries.iter().enumerate().take(self.n() - 1) {
            running_max = running_max.max(e);
            if running_max as usize > p + 1 {
                count += 1;
            }
        }
        count
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.n() && self.entries[i - 1] > self.entries[i]
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        // s_i·w < w iff the value i sits to the right of i+1.
        if i < 1 || i >= self.n() {
            return false;
        }
        let mut pos_i = 0;
        let mut pos_i1 = 0;
        for (p, &e) in self.entries.iter().enumerate() {
            if e as usize == i {
                pos_i = p;
            } else if e as usize == i + 1 {
                pos_i1 = p;
            }
        }
        pos_i > pos_i1
    }

    /// `{s_i : w(i) > w(i+1)}`.
    pub fn right_descents(&self) -> BTreeSet<SimpleReflection> {
        (1..self.n())
            .filter(|&i| self.has_right_descent(i))
            .map(SimpleReflection)
            .collect()
    }

    /// `left_descents(w) = right_descents(w^{-1})`.
    pub fn left_descents(&self) -> BTreeSet<SimpleReflection> {
        self.inverse().right_descents()
    }

    /// Deterministic reduced word: repeatedly strip the smallest right
    /// descent. The product of the letters equals `w` and the word length
    /// equals `length(w)`.
    pub fn reduced_word(&self) -> Vec<SimpleReflection> {
        let mut word = Vec::with_capacity(self.length());
        let mut u = self.clone();
        while let Some(i) = (1..u.n()).find(|&i| u.has_right_descent(i)) {
            u.entries.swap(i - 1, i);
            word.push(SimpleReflection(i));
        }
        word.reverse();
        word
    }

    /// All of `S_n` in the global deterministic order (length, then
    /// lexicographic one-line notation). Empty for rank 0.
    pub fn all(n: usize) -> Vec<Permutation> {
        if n == 0 || n > u8::MAX as usize {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation {
                entries: current.clone(),
            });
            if !next_lex(&mut current) {
                break;
            }
        }
        out.sort_by_cached_key(|w| (w.length(), w.entries.clone()));
        out
    }
}

/// Advances to the next permutation in lexicographic order, returning false
/// once the sequence wraps.
fn next_lex(a: &mut [u8]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &e in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        Permutation::from_one_line(&entries)
    }
}

/// Bruhat order via the rank-matrix criterion:
/// `x <= y` iff `|{p <= a : x(p) >= b}| <= |{p <= a : y(p) >= b}|` for all `a, b`.
///
/// Panics on rank mismatch.
pub fn bruhat_leq(x: &Permutation, y: &Permutation) -> bool {
    assert_eq!(
        x.n(),
        y.n(),
        "rank mismatch in Bruhat comparison: {} vs {}",
        x.n(),
        y.n()
    );
    if x == y {
        return true;
    }
    if x.length() >= y.length() {
        return false;
    }
    let n = x.n();
    // x_ge[b] counts p <= a with x(p) >= b for the current prefix length a.
    let mut x_ge = vec![0u16; n + 1];
    let mut y_ge = vec![0u16; n + 1];
    for a in 0..n {
        for slot in &mut x_ge[1..=x.entries[a] as usize] {
            *slot += 1;
        }
        for slot in &mut y_ge[1..=y.entries[a] as usize] {
            *slot += 1;
        }
        for b in 1..=n {
            if x_ge[b] > y_ge[b] {
                return false;
            }
        }
    }
    true
}

/// The set of all `x <= y`, computed by exhaustive subword search over a
/// fixed reduced word of `y` (reachable-set memoization). Independent of the
/// rank-matrix route in [`bruhat_leq`].
///
/// Guarded at rank 7 for cost.
pub fn subword_down_set(y: &Permutation) -> Result<HashSet<Permutation>> {
    let n = y.n();
    if n > 7 {
        return Err(Error::RankGuard { n, max: 7 });
    }
    let word = y.reduced_word();
    let mut reachable: HashSet<Permutation> = HashSet::new();
    reachable.insert(Permutation::identity(n)?);
    for letter in word {
        let extensions: Vec<Permutation> = reachable
            .iter()
            .filter(|u| !u.has_right_descent(letter.index()))
            .map(|u| {
                let mut v = u.clone();
                v.entries.swap(letter.index() - 1, letter.index());
                v
            })
            .collect();
        reachable.extend(extensions);
    }
    Ok(reachable)
}

/// Independent test oracle for the Bruhat order: `x <= y` iff some subword
/// of a fixed reduced word of `y` is a reduced word of `x`.
pub fn bruhat_leq_oracle(x: &Permutation, y: &Permutation) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::RankMismatch(x.n(), y.n()));
    }
    Ok(subword_down_set(y)?.contains(x))
}
