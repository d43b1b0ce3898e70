//! Abelian-closure membership up to a length bound, plus the structural
//! probes built on it.

mod blocks;
mod census;
mod heavy;
mod probes;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{
    parikh, window_prefix, AbelianIndex, Alphabet, FiniteWord, InfiniteWord, Letter,
};

pub use blocks::{blocks_decompose, Decomposition, Orientation};
pub use census::{canonical_rotation, periodic_census, periodic_members, Census};
pub use heavy::{
    exists_hl_factor, heavy_light_classify, heavy_prefix_predicate, scan_hl_factor, HeavyLight, HlKind, HlOutcome,
    HlTag,
};
pub(crate) use probes::battery;
pub(crate) use heavy::scan_in_index;
pub use probes::{
    ar_closure_probe, minimal_subshift_probe_4letter, np2_closure_probe, offset_order_member, ArProbe,
    LightWitness, OffsetOrder, ProbeEntry, ProbeReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    #[serde(rename = "member-up-to-L")]
    MemberUpToL,
    Rejected,
}

/// A factor of `y` with no abelian match in `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub factor: String,
    pub length: usize,
    pub position: usize,
    #[serde(skip)]
    pub word: FiniteWord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipVerdict {
    pub query: String,
    pub window: usize,
    #[serde(rename = "L")]
    pub max_len: usize,
    pub result: Verdict,
    pub witness: Option<Witness>,
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        self.result == Verdict::MemberUpToL
    }
}

fn query(y: &dyn InfiniteWord, x: &dyn InfiniteWord) -> String {
    format!("{} in A({})", y.name(), x.name())
}

/// `y`'s prefix re-lettered into `x`'s alphabet by name.
fn embedded_prefix(y: &dyn InfiniteWord, xa: &Alphabet, window: usize, max_len: usize) -> Result<FiniteWord> {
    let map = xa.embedding_of(y.alphabet())?;
    let w = window_prefix(y, window)?;
    if w.len() < max_len {
        return Err(Error::WindowTooSmall {
            n: max_len,
            window: w.len(),
        });
    }
    Ok(w.iter().map(|&l| map[l as usize]).collect::<Vec<_>>().into())
}

/// Leftmost factor of length `n` whose Parikh vector `ix` lacks and which
/// satisfies `keep`.
fn first_missing(
    w: &[Letter],
    ix: &AbelianIndex,
    n: usize,
    mut keep: impl FnMut(&[u32]) -> bool,
) -> Option<usize> {
    let k = ix.alphabet_size();
    let mut cur = parikh(&w[..n], k).0;
    for i in 0..=w.len() - n {
        if i > 0 {
            cur[w[i - 1] as usize] -= 1;
            cur[w[i + n - 1] as usize] += 1;
        }
        if !ix.contains(&cur) && keep(&cur) {
            return Some(i);
        }
    }
    None
}

/// Membership of `y` against a prebuilt index of `x`; the shortest, then
/// leftmost, missing factor is the witness.
pub fn member_in_index(
    y: &dyn InfiniteWord,
    x_alphabet: &Alphabet,
    ix: &AbelianIndex,
    max_len: usize,
    y_window: usize,
    query: String,
) -> Result<MembershipVerdict> {
    if max_len > ix.max_len() {
        return Err(Error::WindowTooSmall {
            n: max_len,
            window: ix.max_len(),
        });
    }
    let w = embedded_prefix(y, x_alphabet, y_window, max_len)?;
    for n in 1..=max_len {
        if let Some(i) = first_missing(&w, ix, n, |_| true) {
            let word = FiniteWord::from(&w[i..i + n]);
            return Ok(MembershipVerdict {
                query,
                window: ix.window(),
                max_len,
                result: Verdict::Rejected,
                witness: Some(Witness {
                    factor: x_alphabet.render(&word),
                    length: n,
                    position: i,
                    word,
                }),
            });
        }
    }
    Ok(MembershipVerdict {
        query,
        window: ix.window(),
        max_len,
        result: Verdict::MemberUpToL,
        witness: None,
    })
}

/// `y ∈ 𝒜(x)` up to length `L`, both words read on windows of length `N`.
pub fn abelian_member(
    y: &dyn InfiniteWord,
    x: &dyn InfiniteWord,
    max_len: usize,
    window: usize,
) -> Result<MembershipVerdict> {
    if max_len > window {
        return Err(Error::WindowTooSmall { n: max_len, window });
    }
    let ix = AbelianIndex::build(x, max_len, window)?;
    member_in_index(y, x.alphabet(), &ix, max_len, window, query(y, x))
}

/// Binary criterion: for every `n <= L` the range of `|v|_1` over factors
/// of `y` lies inside the range over factors of `x`.
pub fn corridor_member(
    y: &dyn InfiniteWord,
    x: &dyn InfiniteWord,
    max_len: usize,
    window: usize,
) -> Result<MembershipVerdict> {
    for a in [x.alphabet(), y.alphabet()] {
        if a.size() != 2 {
            return Err(Error::NotBinary(a.size()));
        }
    }
    if max_len > window {
        return Err(Error::WindowTooSmall { n: max_len, window });
    }
    let xi = AbelianIndex::build(x, max_len, window)?;
    let w = embedded_prefix(y, x.alphabet(), window, max_len)?;
    let yi = AbelianIndex::from_word(w, 2, max_len)?;
    for n in 1..=max_len {
        let (xlo, xhi) = xi.corridor(1, n)?;
        let (ylo, yhi) = yi.corridor(1, n)?;
        let bad = if ylo < xlo {
            Some(false)
        } else if yhi > xhi {
            Some(true)
        } else {
            None
        };
        if let Some(heavy) = bad {
            let word = yi.extreme_factor(1, n, heavy)?;
            let position = yi
                .word()
                .windows(n)
                .position(|f| f == &word[..])
                .expect("extreme factor occurs");
            return Ok(MembershipVerdict {
                query: query(y, x),
                window: xi.window(),
                max_len,
                result: Verdict::Rejected,
                witness: Some(Witness {
                    factor: x.alphabet().render(&word),
                    length: n,
                    position,
                    word,
                }),
            });
        }
    }
    Ok(MembershipVerdict {
        query: query(y, x),
        window: xi.window(),
        max_len,
        result: Verdict::MemberUpToL,
        witness: None,
    })
}
