use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::generators::Periodic;
use crate::words::{abelian_period_length, is_periodic_window, AbelianIndex, FiniteWord, InfiniteWord, Letter};

use super::member_in_index;

/// Periodic words in `𝒜(z)`, one representative per shift orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub word: String,
    pub period: usize,
    pub n0: usize,
    #[serde(rename = "L")]
    pub max_len: usize,
    pub window: usize,
    pub candidates: usize,
    pub orbits: Vec<String>,
    #[serde(skip)]
    pub representatives: Vec<FiniteWord>,
}

/// Lexicographically least rotation.
pub fn canonical_rotation(w: &[Letter]) -> FiniteWord {
    let n = w.len();
    (0..n.max(1))
        .map(|r| w[r.min(n)..].iter().chain(&w[..r.min(n)]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
        .into()
}

fn is_primitive(w: &[Letter]) -> bool {
    let n = w.len();
    (1..n).filter(|d| n.is_multiple_of(*d)).all(|d| (d..n).any(|i| w[i] != w[i - d]))
}

/// Primitive, rotation-minimal words of length `q` over `k` letters.
fn necklaces(q: usize, k: usize) -> Vec<FiniteWord> {
    let total = (k as u64).checked_pow(q as u32).expect("census enumeration overflow");
    let mut out = Vec::new();
    let mut w = vec![0 as Letter; q];
    for code in 0..total {
        let mut c = code;
        for slot in w.iter_mut().rev() {
            *slot = (c % k as u64) as Letter;
            c /= k as u64;
        }
        if is_primitive(&w) && canonical_rotation(&w)[..] == w[..] {
            out.push(FiniteWord::from(w.clone()));
        }
    }
    out
}

struct Setup {
    period: usize,
    n0: usize,
    max_len: usize,
    ix: AbelianIndex,
}

fn setup(z: &dyn InfiniteWord, window: usize) -> Result<Setup> {
    let Some(period) = is_periodic_window(z, window)? else {
        return invalid(format!("{} is not periodic on a window of {window}", z.name()));
    };
    // the whole window has period p, so z is purely periodic there
    let w = z.prefix(window)?;
    let n0 = abelian_period_length(&w, z.alphabet().size(), period).unwrap_or(period);
    let max_len = 2 * n0;
    let ix = AbelianIndex::build(z, max_len, window.max(max_len + period))?;
    Ok(Setup { period, n0, max_len, ix })
}

fn members_of_lengths(z: &dyn InfiniteWord, s: &Setup, lengths: &[usize]) -> Result<(usize, Vec<FiniteWord>)> {
    let k = z.alphabet().size();
    let cands: Vec<FiniteWord> = lengths.iter().flat_map(|&q| necklaces(q, k)).collect();
    let hits = cands
        .par_iter()
        .map(|c| {
            let y = Periodic::new(z.alphabet().clone(), vec![], c.0.clone())?;
            let v = member_in_index(&y, z.alphabet(), &s.ix, s.max_len, s.max_len + c.len(), String::new())?;
            Ok(v.is_member().then(|| c.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut found: Vec<FiniteWord> = hits.into_iter().flatten().collect();
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok((cands.len(), found))
}

fn census_from(z: &dyn InfiniteWord, s: Setup, candidates: usize, found: Vec<FiniteWord>) -> Census {
    Census {
        word: z.name(),
        period: s.period,
        n0: s.n0,
        max_len: s.max_len,
        window: s.ix.window(),
        candidates,
        orbits: found.iter().map(|w| format!("({})^w", z.alphabet().render(w))).collect(),
        representatives: found,
    }
}

/// Every periodic word of `𝒜(z)` has a period dividing the abelian
/// periodicity length `n0` of `z`, so only those lengths are enumerated.
/// Candidates are tested up to `L = 2 n0`.
pub fn periodic_census(z: &dyn InfiniteWord, window: usize) -> Result<Census> {
    let s = setup(z, window)?;
    let lengths: Vec<usize> = (1..=s.n0).filter(|q| s.n0 % q == 0).collect();
    let (c, found) = members_of_lengths(z, &s, &lengths)?;
    Ok(census_from(z, s, c, found))
}

/// Like [`periodic_census`] but enumerates every period `q <= max_q`.
pub fn periodic_members(z: &dyn InfiniteWord, window: usize, max_q: usize) -> Result<Census> {
    let s = setup(z, window)?;
    let lengths: Vec<usize> = (1..=max_q).collect();
    let (c, found) = members_of_lengths(z, &s, &lengths)?;
    Ok(census_from(z, s, c, found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fibonacci;

    fn orbits(p: &str) -> Vec<String> {
        periodic_census(&Periodic::pure(p).unwrap(), 500).unwrap().orbits
    }

    #[test]
    fn rotations() {
        assert_eq!(canonical_rotation(&[1, 0, 0, 1]).0, vec![0, 0, 1, 1]);
        assert!(is_primitive(&[0, 1, 1]));
        assert!(!is_primitive(&[0, 1, 0, 1]));
        // binary necklaces of length 6: (64 - 8 - 4 + 2) / 6 = 9
        assert_eq!(necklaces(6, 2).len(), 9);
    }

    #[test]
    fn small_censuses() {
        assert_eq!(orbits("01"), vec!["(01)^w"]);
        assert_eq!(orbits("00011"), vec!["(00011)^w", "(00101)^w"]);
        assert_eq!(orbits("0000011").len(), 3);
    }

    #[test]
    fn aperiodic_rejected() {
        assert!(periodic_census(&fibonacci(), 500).is_err());
    }
}
