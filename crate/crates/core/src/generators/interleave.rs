use crate::error::{invalid, Result};
use crate::words::{window_prefix, Alphabet, FiniteWord, InfiniteWord, Letter, WordRef};

/// `𝒮(x, z0, z1)`: the n-th 0 of the binary backbone `x` becomes the n-th
/// letter of `z0`, the n-th 1 the n-th letter of `z1`.
#[derive(Clone, Debug)]
pub struct Interleave {
    backbone: WordRef,
    z0: WordRef,
    z1: WordRef,
    alphabet: Alphabet,
    map0: Vec<Letter>,
    map1: Vec<Letter>,
}

impl Interleave {
    pub fn new(backbone: WordRef, z0: WordRef, z1: WordRef) -> Result<Self> {
        if backbone.alphabet().size() != 2 {
            return invalid(format!("interleave backbone must be binary: {}", backbone.name()));
        }
        let alphabet = z0.alphabet().union(z1.alphabet())?;
        let map0 = alphabet.embedding_of(z0.alphabet())?;
        let map1 = alphabet.embedding_of(z1.alphabet())?;
        Ok(Interleave {
            backbone,
            z0,
            z1,
            alphabet,
            map0,
            map1,
        })
    }
}

impl InfiniteWord for Interleave {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn name(&self) -> String {
        format!(
            "interleave({}; {}; {})",
            self.backbone.name(),
            self.z0.name(),
            self.z1.name()
        )
    }
    fn prefix(&self, n: usize) -> Result<FiniteWord> {
        let x = self.backbone.prefix(n)?;
        let zeros = x.iter().filter(|&&l| l == 0).count();
        let a = self.z0.prefix(zeros)?;
        let b = self.z1.prefix(n - zeros)?;
        let (mut i, mut j) = (0, 0);
        let out: Vec<Letter> = x
            .iter()
            .map(|&l| {
                if l == 0 {
                    i += 1;
                    self.map0[a[i - 1] as usize]
                } else {
                    j += 1;
                    self.map1[b[j - 1] as usize]
                }
            })
            .collect();
        Ok(out.into())
    }
}

/// Within `prefix(N)`, every letter recurs with a single gap. The stretch
/// before a letter's first occurrence must not exceed its gap either.
pub fn is_constant_gap(z: &dyn InfiniteWord, window: usize) -> Result<bool> {
    let w = window_prefix(z, window)?;
    let k = z.alphabet().size();
    let mut last: Vec<Option<usize>> = vec![None; k];
    let mut gap: Vec<Option<usize>> = vec![None; k];
    for (i, &l) in w.iter().enumerate() {
        let l = l as usize;
        if let Some(p) = last[l] {
            match gap[l] {
                None => gap[l] = Some(i - p),
                Some(g) if g != i - p => return Ok(false),
                _ => {}
            }
        }
        last[l] = Some(i);
    }
    for (l, g) in gap.iter().enumerate() {
        if let (Some(first), Some(g)) = (w.iter().position(|&c| c as usize == l), *g) {
            if first >= g {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{arc, fibonacci, Periodic};

    #[test]
    fn fibonacci_interleave_prefix() {
        let s = Interleave::new(
            arc(fibonacci()),
            arc(Periodic::pure("0102").unwrap()),
            arc(Periodic::pure("ab").unwrap()),
        )
        .unwrap();
        assert_eq!(s.alphabet().render(&s.prefix(20).unwrap()), "0a10b2a01b02a0b10a2b");
    }

    #[test]
    fn trivial_interleave() {
        let s = Interleave::new(
            arc(Periodic::pure("01").unwrap()),
            arc(Periodic::pure("a").unwrap()),
            arc(Periodic::pure("b").unwrap()),
        )
        .unwrap();
        assert_eq!(s.alphabet().render(&s.prefix(6).unwrap()), "ababab");
    }

    #[test]
    fn constant_gap_examples() {
        assert!(is_constant_gap(&Periodic::pure("abac").unwrap(), 100).unwrap());
        assert!(!is_constant_gap(&Periodic::pure("aab").unwrap(), 100).unwrap());
        assert!(is_constant_gap(&Periodic::pure("0102").unwrap(), 100).unwrap());
        assert!(!is_constant_gap(&fibonacci(), 100).unwrap());
    }

    #[test]
    fn erasing_recovers_components() {
        let z0 = arc(Periodic::pure("0102").unwrap());
        let s = Interleave::new(arc(fibonacci()), z0.clone(), arc(Periodic::pure("ab").unwrap())).unwrap();
        let w = s.prefix(500).unwrap();
        let kept: String = s
            .alphabet()
            .render(&w)
            .chars()
            .filter(|c| c.is_ascii_digit())
            .collect();
        assert_eq!(kept, z0.alphabet().render(&z0.prefix(kept.len()).unwrap()));
    }
}
