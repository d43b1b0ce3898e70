use std::collections::BTreeSet;

use serde::Serialize;

use super::{parikh, window_prefix, FiniteWord, InfiniteWord, Letter, ParikhVector};
use crate::error::{Error, Result};

/// Parikh vectors and per-letter count corridors of every factor of length
/// `1..=max_len` in a finite window.
#[derive(Clone, Debug)]
pub struct AbelianIndex {
    k: usize,
    window: usize,
    sets: Vec<BTreeSet<ParikhVector>>,
    corridor: Vec<Vec<(u32, u32)>>,
    // start positions of a factor realizing each min / max
    extremes: Vec<Vec<(usize, usize)>>,
    word: FiniteWord,
}

/// How a window was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Stability {
    pub window: usize,
    pub stabilized: bool,
}

impl AbelianIndex {
    pub fn from_word(word: FiniteWord, k: usize, max_len: usize) -> Result<Self> {
        if max_len > word.len() {
            return Err(Error::WindowTooSmall {
                n: max_len,
                window: word.len(),
            });
        }
        let mut sets = vec![BTreeSet::from([ParikhVector::zero(k)])];
        let mut corridor = vec![vec![(0, 0); k]];
        let mut extremes = vec![vec![(0, 0); k]];
        for n in 1..=max_len {
            let mut cur = parikh(&word[..n], k);
            let mut set = BTreeSet::new();
            let mut cor: Vec<(u32, u32)> = cur.0.iter().map(|&c| (c, c)).collect();
            let mut ext = vec![(0usize, 0usize); k];
            set.insert(cur.clone());
            for i in 1..=word.len() - n {
                cur.0[word[i - 1] as usize] -= 1;
                cur.0[word[i + n - 1] as usize] += 1;
                if !set.contains(&cur.0[..]) {
                    set.insert(cur.clone());
                }
                for a in 0..k {
                    let c = cur.0[a];
                    if c < cor[a].0 {
                        cor[a].0 = c;
                        ext[a].0 = i;
                    }
                    if c > cor[a].1 {
                        cor[a].1 = c;
                        ext[a].1 = i;
                    }
                }
            }
            sets.push(set);
            corridor.push(cor);
            extremes.push(ext);
        }
        Ok(AbelianIndex {
            k,
            window: word.len(),
            sets,
            corridor,
            extremes,
            word,
        })
    }

    pub fn build(x: &dyn InfiniteWord, max_len: usize, window: usize) -> Result<Self> {
        let w = window_prefix(x, window)?;
        Self::from_word(w, x.alphabet().size(), max_len)
    }

    /// Doubles the window from `start` until the Parikh sets for all lengths
    /// up to `max_len` agree across two consecutive doublings, or `limit` is
    /// reached. Finite approximants stop growing and count as stable.
    pub fn stabilized(
        x: &dyn InfiniteWord,
        max_len: usize,
        start: usize,
        limit: usize,
    ) -> Result<(Self, Stability)> {
        let mut n = start.max(max_len).max(1);
        let mut prev = Self::build(x, max_len, n)?;
        let mut agreeing = 0;
        loop {
            let next_n = super::effective_window(x, n * 2);
            if next_n == prev.window {
                return Ok((prev, Stability { window: next_n, stabilized: true }));
            }
            if next_n > limit {
                let w = prev.window;
                return Ok((prev, Stability { window: w, stabilized: false }));
            }
            let next = Self::build(x, max_len, next_n)?;
            agreeing = if next.sets == prev.sets { agreeing + 1 } else { 0 };
            prev = next;
            n = next_n;
            if agreeing >= 2 {
                return Ok((prev, Stability { window: n, stabilized: true }));
            }
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn max_len(&self) -> usize {
        self.sets.len() - 1
    }

    pub fn word(&self) -> &FiniteWord {
        &self.word
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_len() {
            return Err(Error::WindowTooSmall { n, window: self.max_len() });
        }
        Ok(())
    }

    pub fn parikhs(&self, n: usize) -> Result<&BTreeSet<ParikhVector>> {
        self.check(n)?;
        Ok(&self.sets[n])
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let n: u32 = v.iter().sum();
        self.sets.get(n as usize).is_some_and(|s| s.contains(v))
    }

    pub fn corridor(&self, a: Letter, n: usize) -> Result<(u32, u32)> {
        self.check(n)?;
        Ok(self.corridor[n][a as usize])
    }

    /// A factor with the fewest (`heavy = false`) or most occurrences of `a`.
    pub fn extreme_factor(&self, a: Letter, n: usize, heavy: bool) -> Result<FiniteWord> {
        self.check(n)?;
        let (lo, hi) = self.extremes[n][a as usize];
        let i = if heavy { hi } else { lo };
        Ok(FiniteWord::from(&self.word[i..i + n]))
    }
}

/// Trie of all factors of length up to `max_len`.
#[derive(Clone, Debug)]
pub struct FactorTrie {
    k: usize,
    max_len: usize,
    // children[node * k + a], 0 meaning absent (the root is never a child)
    children: Vec<u32>,
    per_len: Vec<usize>,
}

impl FactorTrie {
    pub fn new(word: &[Letter], k: usize, max_len: usize) -> Self {
        let mut t = FactorTrie {
            k,
            max_len,
            children: vec![0; k],
            per_len: vec![0; max_len + 1],
        };
        t.per_len[0] = 1;
        for i in 0..word.len() {
            let mut node = 0usize;
            for (depth, &a) in word[i..(i + max_len).min(word.len())].iter().enumerate() {
                let slot = node * k + a as usize;
                if t.children[slot] == 0 {
                    let id = t.children.len() / k;
                    t.children.extend(std::iter::repeat_n(0, k));
                    t.children[slot] = id as u32;
                    t.per_len[depth + 1] += 1;
                }
                node = t.children[slot] as usize;
            }
        }
        t
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn count(&self, n: usize) -> usize {
        self.per_len.get(n).copied().unwrap_or(0)
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        assert!(w.len() <= self.max_len, "query longer than trie depth");
        let mut node = 0usize;
        for &a in w {
            if a as usize >= self.k {
                return false;
            }
            let c = self.children[node * self.k + a as usize];
            if c == 0 {
                return false;
            }
            node = c as usize;
        }
        true
    }

    /// Factors of length `n` in lexicographic order.
    pub fn factors(&self, n: usize) -> Vec<FiniteWord> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.walk(0, n, &mut path, &mut out);
        out
    }

    fn walk(&self, node: usize, n: usize, path: &mut Vec<Letter>, out: &mut Vec<FiniteWord>) {
        if path.len() == n {
            out.push(FiniteWord::from(path.as_slice()));
            return;
        }
        for a in 0..self.k {
            let c = self.children[node * self.k + a];
            if c != 0 {
                path.push(a as Letter);
                self.walk(c as usize, n, path, out);
                path.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn trie_counts_match_brute_force() {
        let w: Vec<u8> = "0110100110010110100101100110100110010110"
            .bytes()
            .map(|b| b - b'0')
            .collect();
        let t = FactorTrie::new(&w, 2, 8);
        for n in 1..=8 {
            let brute: HashSet<&[u8]> = w.windows(n).collect();
            assert_eq!(t.count(n), brute.len(), "n = {n}");
            assert_eq!(t.factors(n).len(), brute.len());
            for f in &brute {
                assert!(t.contains(f));
            }
        }
        assert!(!t.contains(&[1, 1, 1]));
    }

    #[test]
    fn index_extremes_realize_corridor() {
        let w = FiniteWord::from(vec![0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1]);
        let ix = AbelianIndex::from_word(w, 2, 6).unwrap();
        for n in 1..=6 {
            let (lo, hi) = ix.corridor(1, n).unwrap();
            assert_eq!(parikh(&ix.extreme_factor(1, n, false).unwrap(), 2).count(1), lo);
            assert_eq!(parikh(&ix.extreme_factor(1, n, true).unwrap(), 2).count(1), hi);
        }
        assert!(ix.corridor(1, 7).is_err());
    }
}
