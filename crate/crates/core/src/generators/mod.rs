//! Prefix producers for every word family: periodic and morphic words,
//! rotation codings, Arnoux-Rauzy words, interleavings, Champernowne.

mod interleave;
mod morphic;
mod palindromic;
mod rotation;

use std::sync::Arc;

use crate::error::{invalid, Error, Result};
use crate::words::{Alphabet, FiniteWord, InfiniteWord, Letter, WordRef};

pub use interleave::{is_constant_gap, Interleave};
pub use morphic::{fibonacci, fm_min_complexity_word, thue_morse, tribonacci, MorphicFixedPoint, MorphicImage, Morphism};
pub use palindromic::{arnoux_rauzy, palindromic_closure, ArnouxRauzy};
pub use rotation::{BinaryRotation, Convention, TernaryRotation, TernarySpec};

/// `u v v v ...`; a purely periodic word has empty `u`.
#[derive(Clone, Debug)]
pub struct Periodic {
    alphabet: Alphabet,
    pre: Vec<Letter>,
    period: Vec<Letter>,
    label: String,
}

impl Periodic {
    pub fn new(alphabet: Alphabet, pre: Vec<Letter>, period: Vec<Letter>) -> Result<Self> {
        if period.is_empty() {
            return invalid("periodic word needs a non-empty period");
        }
        let label = if pre.is_empty() {
            format!("periodic({})", alphabet.render(&period))
        } else {
            format!("preperiodic({}, {})", alphabet.render(&pre), alphabet.render(&period))
        };
        Ok(Periodic {
            alphabet,
            pre,
            period,
            label,
        })
    }

    /// Letters named by characters, alphabet inferred from the text.
    pub fn parse(pre: &str, period: &str) -> Result<Self> {
        let alphabet = Alphabet::infer(&format!("{pre}{period}"))?;
        let pre = alphabet.parse_word(pre)?.into_inner();
        let period = alphabet.parse_word(period)?.into_inner();
        Self::new(alphabet, pre, period)
    }

    pub fn pure(period: &str) -> Result<Self> {
        Self::parse("", period)
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    pub fn preperiod(&self) -> &[Letter] {
        &self.pre
    }
}

impl InfiniteWord for Periodic {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn name(&self) -> String {
        self.label.clone()
    }
    fn prefix(&self, n: usize) -> Result<FiniteWord> {
        Ok(self
            .pre
            .iter()
            .chain(self.period.iter().cycle())
            .take(n)
            .copied()
            .collect::<Vec<_>>()
            .into())
    }
}

/// A finite word posing as an infinite one; requests beyond its end fail.
#[derive(Clone, Debug)]
pub struct Truncated {
    alphabet: Alphabet,
    word: FiniteWord,
    label: String,
}

impl Truncated {
    pub fn new(alphabet: Alphabet, word: FiniteWord, label: impl Into<String>) -> Self {
        Truncated {
            alphabet,
            word,
            label: label.into(),
        }
    }
}

impl InfiniteWord for Truncated {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn name(&self) -> String {
        self.label.clone()
    }
    fn prefix(&self, n: usize) -> Result<FiniteWord> {
        if n > self.word.len() {
            return Err(Error::WindowTooSmall {
                n,
                window: self.word.len(),
            });
        }
        Ok(FiniteWord::from(&self.word[..n]))
    }
    fn finite_len(&self) -> Option<usize> {
        Some(self.word.len())
    }
}

/// Reversal of `prefix(N)`, a finite approximant of the reversed word.
pub fn reversal_prefix(x: &dyn InfiniteWord, n: usize) -> Result<FiniteWord> {
    Ok(x.prefix(n)?.reversed())
}

pub fn reversal_word(x: &WordRef, n: usize) -> Result<Truncated> {
    Ok(Truncated::new(
        x.alphabet().clone(),
        reversal_prefix(x.as_ref(), n)?,
        format!("reverse({}, {n})", x.name()),
    ))
}

/// `w x`, letters of both matched by name into the union alphabet.
#[derive(Clone, Debug)]
pub struct Prefixed {
    alphabet: Alphabet,
    head: Vec<Letter>,
    inner: WordRef,
    map: Vec<Letter>,
}

impl Prefixed {
    pub fn new(head: &str, inner: WordRef) -> Result<Self> {
        let alphabet = inner.alphabet().union(&Alphabet::infer(head)?)?;
        let head = alphabet.parse_word(head)?.into_inner();
        let map = alphabet.embedding_of(inner.alphabet())?;
        Ok(Prefixed {
            alphabet,
            head,
            inner,
            map,
        })
    }
}

impl InfiniteWord for Prefixed {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn name(&self) -> String {
        format!("prefixed({}; {})", self.alphabet.render(&self.head), self.inner.name())
    }
    fn prefix(&self, n: usize) -> Result<FiniteWord> {
        let mut out: Vec<Letter> = self.head.iter().take(n).copied().collect();
        let rest = n - out.len();
        let inner = self.inner.prefix(rest)?;
        out.extend(inner.iter().map(|&l| self.map[l as usize]));
        Ok(out.into())
    }
    fn finite_len(&self) -> Option<usize> {
        self.inner.finite_len().map(|l| l + self.head.len())
    }
}

/// `T^k x`: the word with its first `k` letters dropped.
#[derive(Clone, Debug)]
pub struct Shifted {
    inner: WordRef,
    k: usize,
}

impl Shifted {
    pub fn new(inner: WordRef, k: usize) -> Self {
        Shifted { inner, k }
    }
}

impl InfiniteWord for Shifted {
    fn alphabet(&self) -> &Alphabet {
        self.inner.alphabet()
    }
    fn name(&self) -> String {
        format!("shift({}; {})", self.k, self.inner.name())
    }
    fn prefix(&self, n: usize) -> Result<FiniteWord> {
        Ok(FiniteWord::from(&self.inner.prefix(n + self.k)?[self.k..]))
    }
    fn finite_len(&self) -> Option<usize> {
        self.inner.finite_len().map(|l| l.saturating_sub(self.k))
    }
}

/// Concatenation of all words over `0..k` in length-major, then
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct Champernowne {
    k: usize,
    alphabet: Alphabet,
}

impl Champernowne {
    pub fn new(k: usize) -> Result<Self> {
        if !(2..=256).contains(&k) {
            return invalid(format!("champernowne needs 2 <= k <= 256, got {k}"));
        }
        Ok(Champernowne {
            k,
            alphabet: Alphabet::digits(k),
        })
    }
}

impl InfiniteWord for Champernowne {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn name(&self) -> String {
        format!("champ({})", self.k)
    }
    fn prefix(&self, n: usize) -> Result<FiniteWord> {
        let mut out = Vec::with_capacity(n);
        let mut len = 1;
        while out.len() < n {
            // odometer over words of length `len`
            let mut w = vec![0 as Letter; len];
            'words: loop {
                for &l in &w {
                    if out.len() == n {
                        break 'words;
                    }
                    out.push(l);
                }
                let mut i = len;
                loop {
                    if i == 0 {
                        break 'words;
                    }
                    i -= 1;
                    if (w[i] as usize) + 1 < self.k {
                        w[i] += 1;
                        break;
                    }
                    w[i] = 0;
                }
            }
            len += 1;
        }
        Ok(out.into())
    }
}

pub fn arc<W: InfiniteWord + 'static>(w: W) -> WordRef {
    Arc::new(w)
}
