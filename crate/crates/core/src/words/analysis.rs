//! Window statistics of an infinite word: factor sets, complexities,
//! corridors, balance, frequency bounds and periodicity.

use std::collections::BTreeSet;

use num_rational::Rational64;
use serde::Serialize;

use super::index::{AbelianIndex, FactorTrie};
use super::{effective_window, window_prefix, FiniteWord, InfiniteWord, Letter, ParikhVector};
use crate::error::{Error, Result};

fn need(n: usize, x: &dyn InfiniteWord, window: usize) -> Result<usize> {
    let w = effective_window(x, window);
    if n > w {
        return Err(Error::WindowTooSmall { n, window: w });
    }
    Ok(w)
}

fn index_for(x: &dyn InfiniteWord, n: usize, window: usize) -> Result<AbelianIndex> {
    let w = need(n, x, window)?;
    AbelianIndex::build(x, n, w)
}

pub fn factor_parikhs(x: &dyn InfiniteWord, n: usize, window: usize) -> Result<BTreeSet<ParikhVector>> {
    Ok(index_for(x, n, window)?.parikhs(n)?.clone())
}

pub fn abelian_complexity(x: &dyn InfiniteWord, n: usize, window: usize) -> Result<usize> {
    Ok(index_for(x, n, window)?.parikhs(n)?.len())
}

pub fn factor_complexity(x: &dyn InfiniteWord, n: usize, window: usize) -> Result<usize> {
    let w = need(n, x, window)?;
    let p = x.prefix(w)?;
    Ok(FactorTrie::new(&p, x.alphabet().size(), n).count(n))
}

/// Distinct factors of each length `0..=max_len`, in lexicographic order.
pub fn factor_sets(x: &dyn InfiniteWord, max_len: usize, window: usize) -> Result<Vec<Vec<FiniteWord>>> {
    let w = need(max_len, x, window)?;
    let t = FactorTrie::new(&x.prefix(w)?, x.alphabet().size(), max_len);
    Ok((0..=max_len).map(|n| t.factors(n)).collect())
}

pub fn corridor(x: &dyn InfiniteWord, a: Letter, n: usize, window: usize) -> Result<(u32, u32)> {
    index_for(x, n, window)?.corridor(a, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceWitness {
    pub n: usize,
    pub letter: Letter,
    pub light: FiniteWord,
    pub heavy: FiniteWord,
}

/// Finds the shortest length at which some letter's count varies by more
/// than one.
pub fn balance_in(ix: &AbelianIndex, max_len: usize) -> Result<Option<BalanceWitness>> {
    for n in 1..=max_len {
        for a in 0..ix.alphabet_size() {
            let a = a as Letter;
            let (lo, hi) = ix.corridor(a, n)?;
            if hi - lo > 1 {
                return Ok(Some(BalanceWitness {
                    n,
                    letter: a,
                    light: ix.extreme_factor(a, n, false)?,
                    heavy: ix.extreme_factor(a, n, true)?,
                }));
            }
        }
    }
    Ok(None)
}

/// `Ok(None)` when balanced up to `max_len`.
pub fn is_balanced(x: &dyn InfiniteWord, max_len: usize, window: usize) -> Result<Option<BalanceWitness>> {
    balance_in(&index_for(x, max_len, window)?, max_len)
}

/// `(min/n, max/n)` of the letter count over length-`n` factors.
pub fn freq_bounds(
    x: &dyn InfiniteWord,
    a: Letter,
    n: usize,
    window: usize,
) -> Result<(Rational64, Rational64)> {
    if n == 0 {
        return Err(Error::InvalidSpec("frequency bounds need n >= 1".into()));
    }
    let (lo, hi) = corridor(x, a, n, window)?;
    Ok((Rational64::new(lo as i64, n as i64), Rational64::new(hi as i64, n as i64)))
}

/// Least period of a finite word, from the border array.
pub fn least_period(w: &[Letter]) -> usize {
    if w.is_empty() {
        return 0;
    }
    let mut fail = vec![0usize; w.len() + 1];
    let mut k = 0;
    for i in 1..w.len() {
        while k > 0 && w[i] != w[k] {
            k = fail[k];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i + 1] = k;
    }
    w.len() - fail[w.len()]
}

/// Least `n <= max` such that all length-`n` factors of `w` share one
/// Parikh vector.
pub fn abelian_period_length(w: &[Letter], k: usize, max: usize) -> Option<usize> {
    let max = max.min(w.len());
    let ix = AbelianIndex::from_word(FiniteWord::from(w), k, max).ok()?;
    (1..=max).find(|&n| ix.parikhs(n).map(|s| s.len() == 1).unwrap_or(false))
}

/// Least period `p` of `prefix(N)` with at least four repetitions in the
/// window (`p <= N/4`). Shorter bounds mistake Sturmian prefixes for
/// periodic ones: a Fibonacci prefix of length 500 has period 233.
pub fn is_periodic_window(x: &dyn InfiniteWord, window: usize) -> Result<Option<usize>> {
    let w = window_prefix(x, window)?;
    if w.len() < 4 {
        return Ok(None);
    }
    let p = least_period(&w);
    if 4 * p > w.len() {
        return Ok(None);
    }
    // Coven-Hedlund: a single abelian class at length n forces period n
    debug_assert_eq!(abelian_period_length(&w, x.alphabet().size(), p), Some(p));
    Ok(Some(p))
}
