//! Letters, finite words, Parikh vectors and the infinite-word abstraction.

mod analysis;
mod index;

use std::borrow::Borrow;
use std::fmt;
use std::ops::{Add, Deref, DerefMut};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

pub use analysis::*;
pub use index::{AbelianIndex, FactorTrie, Stability};

pub type Letter = u8;

/// Ordered set of letter names; letter `i` displays as `names[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() || names.len() > 256 {
            return Err(Error::AlphabetMismatch(format!(
                "alphabet size must be 1..=256, got {}",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(Error::AlphabetMismatch(format!("bad or repeated letter name `{n}`")));
            }
        }
        Ok(Alphabet { names })
    }

    /// `0, 1, ..., k-1`
    pub fn digits(k: usize) -> Self {
        Alphabet::new((0..k).map(|i| i.to_string())).expect("1 <= k <= 256")
    }

    /// Digit strings get `0..=max(digit, 1)`; anything else gets its sorted
    /// distinct characters.
    pub fn infer(s: &str) -> Result<Self> {
        if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
            let top = s.bytes().map(|b| b - b'0').max().unwrap_or(1).max(1);
            return Ok(Alphabet::digits(top as usize + 1));
        }
        let mut cs: Vec<char> = s.chars().collect();
        cs.sort_unstable();
        cs.dedup();
        Alphabet::new(cs.into_iter().map(String::from))
    }

    /// Sorted union by name.
    pub fn union(&self, other: &Alphabet) -> Result<Self> {
        let mut names: Vec<String> = self.names.iter().chain(&other.names).cloned().collect();
        names.sort();
        names.dedup();
        Alphabet::new(names)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|i| i as Letter)
    }

    pub fn contains_all(&self, other: &Alphabet) -> bool {
        other.names.iter().all(|n| self.names.contains(n))
    }

    /// Letter map from `other` into `self`, matched by name.
    pub fn embedding_of(&self, other: &Alphabet) -> Result<Vec<Letter>> {
        other
            .names
            .iter()
            .map(|n| {
                self.index_of(n).ok_or_else(|| {
                    Error::AlphabetMismatch(format!("letter `{n}` not in {{{}}}", self.names.join(",")))
                })
            })
            .collect()
    }

    pub fn render(&self, w: &[Letter]) -> String {
        w.iter().map(|&l| self.name(l)).collect()
    }

    /// Reads a word letter by letter; names must be single characters.
    pub fn parse_word(&self, s: &str) -> Result<FiniteWord> {
        s.chars()
            .map(|c| {
                let mut buf = [0u8; 4];
                self.index_of(c.encode_utf8(&mut buf)).ok_or_else(|| {
                    Error::AlphabetMismatch(format!("`{c}` not in {{{}}}", self.names.join(",")))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(FiniteWord)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct FiniteWord(pub Vec<Letter>);

impl FiniteWord {
    pub fn new(v: Vec<Letter>) -> Self {
        FiniteWord(v)
    }

    pub fn reversed(&self) -> Self {
        FiniteWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &[Letter]) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        FiniteWord(v)
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn into_inner(self) -> Vec<Letter> {
        self.0
    }
}

impl Deref for FiniteWord {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl DerefMut for FiniteWord {
    fn deref_mut(&mut self) -> &mut [Letter] {
        &mut self.0
    }
}

impl From<Vec<Letter>> for FiniteWord {
    fn from(v: Vec<Letter>) -> Self {
        FiniteWord(v)
    }
}

impl From<&[Letter]> for FiniteWord {
    fn from(v: &[Letter]) -> Self {
        FiniteWord(v.to_vec())
    }
}

impl fmt::Debug for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.0 {
            if l < 10 {
                write!(f, "{l}")?;
            } else {
                write!(f, "<{l}>")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct ParikhVector(pub Vec<u32>);

impl ParikhVector {
    pub fn zero(k: usize) -> Self {
        ParikhVector(vec![0; k])
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn count(&self, l: Letter) -> u32 {
        self.0.get(l as usize).copied().unwrap_or(0)
    }
}

impl Borrow<[u32]> for ParikhVector {
    fn borrow(&self) -> &[u32] {
        &self.0
    }
}

impl Deref for ParikhVector {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl Add for &ParikhVector {
    type Output = ParikhVector;
    fn add(self, o: &ParikhVector) -> ParikhVector {
        let k = self.0.len().max(o.0.len());
        ParikhVector((0..k).map(|i| self.count(i as u8) + o.count(i as u8)).collect())
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Counts over an alphabet of size `k`; letters outside are ignored.
pub fn parikh(w: &[Letter], k: usize) -> ParikhVector {
    let mut v = vec![0u32; k];
    for &l in w {
        if let Some(c) = v.get_mut(l as usize) {
            *c += 1;
        }
    }
    ParikhVector(v)
}

pub fn abelian_equiv(u: &[Letter], v: &[Letter], k: usize) -> bool {
    u.len() == v.len() && parikh(u, k) == parikh(v, k)
}

/// A deterministic prefix producer. `prefix(m)` is always a prefix of
/// `prefix(n)` for `m <= n`.
pub trait InfiniteWord: Send + Sync + fmt::Debug {
    fn alphabet(&self) -> &Alphabet;
    fn name(&self) -> String;
    fn prefix(&self, n: usize) -> Result<FiniteWord>;
    /// Finite approximants (reversals, truncations) report their length.
    fn finite_len(&self) -> Option<usize> {
        None
    }
}

pub type WordRef = Arc<dyn InfiniteWord>;

/// `prefix(min(n, finite_len))`
pub fn window_prefix(x: &dyn InfiniteWord, n: usize) -> Result<FiniteWord> {
    x.prefix(x.finite_len().map_or(n, |l| l.min(n)))
}

pub fn effective_window(x: &dyn InfiniteWord, n: usize) -> usize {
    x.finite_len().map_or(n, |l| l.min(n))
}
