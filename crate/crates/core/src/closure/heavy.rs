use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exactnum::{circle_distance, orbit_hits, qe_compare, reduce_mod1, QuadExt, TorusPoint};
use crate::generators::{BinaryRotation, TernarySpec};
use crate::words::{window_prefix, AbelianIndex, InfiniteWord, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HlTag {
    Heavy,
    Light,
}

/// Heavy/light tags of a factor for the letters 1 and 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeavyLight {
    pub one: HlTag,
    pub two: HlTag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HlKind {
    #[serde(rename = "12heavy")]
    BothHeavy,
    #[serde(rename = "12light")]
    BothLight,
    #[serde(rename = "1heavy2light")]
    OneHeavyTwoLight,
    #[serde(rename = "2heavy1light")]
    TwoHeavyOneLight,
}

impl HlKind {
    pub const ALL: [HlKind; 4] = [
        HlKind::BothHeavy,
        HlKind::BothLight,
        HlKind::OneHeavyTwoLight,
        HlKind::TwoHeavyOneLight,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            HlKind::BothHeavy => "12heavy",
            HlKind::BothLight => "12light",
            HlKind::OneHeavyTwoLight => "1heavy2light",
            HlKind::TwoHeavyOneLight => "2heavy1light",
        }
    }

    fn matches(self, c: HeavyLight) -> bool {
        use HlTag::*;
        matches!(
            (self, c.one, c.two),
            (HlKind::BothHeavy, Heavy, Heavy)
                | (HlKind::BothLight, Light, Light)
                | (HlKind::OneHeavyTwoLight, Heavy, Light)
                | (HlKind::TwoHeavyOneLight, Light, Heavy)
        )
    }
}

impl fmt::Display for HlKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HlKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HlKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown kind `{s}` (12heavy, 12light, 1heavy2light, 2heavy1light)")))
    }
}

/// Answer of the circle criterion plus the branch that decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HlOutcome {
    pub kind: HlKind,
    pub m: usize,
    pub value: bool,
    #[serde(rename = "branch-taken")]
    pub branch: &'static str,
    pub mu: QuadExt,
    pub zeta_norm: QuadExt,
}

fn tag(count: u32, (lo, hi): (u32, u32)) -> HlTag {
    // corridors of the two Sturmian projections have width one, so a
    // non-maximal count is the minimum
    debug_assert!(hi - lo <= 1 || count == hi || count == lo);
    if count == hi {
        HlTag::Heavy
    } else {
        HlTag::Light
    }
}

fn classify_counts(ix: &AbelianIndex, v: &[Letter]) -> Result<HeavyLight> {
    let n = v.len();
    let c1 = v.iter().filter(|&&l| l == 1).count() as u32;
    let c2 = v.iter().filter(|&&l| l == 2).count() as u32;
    Ok(HeavyLight {
        one: tag(c1, ix.corridor(1, n)?),
        two: tag(c2, ix.corridor(2, n)?),
    })
}

/// Tags `v` against the corridors of `x` on `prefix(N)`.
pub fn heavy_light_classify(v: &[Letter], x: &dyn InfiniteWord, window: usize) -> Result<HeavyLight> {
    if x.alphabet().size() != 3 {
        return invalid("heavy/light classification needs a ternary word");
    }
    if v.is_empty() {
        return invalid("heavy/light classification of the empty word");
    }
    let w = window_prefix(x, window)?;
    if !w.windows(v.len()).any(|f| f == v) {
        return invalid(format!(
            "`{}` is not a factor of prefix({})",
            x.alphabet().render(v),
            w.len()
        ));
    }
    let ix = AbelianIndex::from_word(w, 3, v.len())?;
    classify_counts(&ix, v)
}

/// Window oracle: does some length-`m` factor of `prefix(N)` fall in `kind`?
pub fn scan_hl_factor(kind: HlKind, x: &dyn InfiniteWord, m: usize, window: usize) -> Result<bool> {
    let ix = AbelianIndex::build(x, m, window)?;
    scan_in_index(kind, &ix, m)
}

pub(crate) fn scan_in_index(kind: HlKind, ix: &AbelianIndex, m: usize) -> Result<bool> {
    let c1 = ix.corridor(1, m)?;
    let c2 = ix.corridor(2, m)?;
    Ok(ix.parikhs(m)?.iter().any(|p| {
        kind.matches(HeavyLight {
            one: tag(p.0[1], c1),
            two: tag(p.0[2], c2),
        })
    }))
}

fn frac_neg(alpha: &QuadExt, m: usize) -> TorusPoint {
    reduce_mod1(&alpha.scale(-(m as i64)))
}

/// Circle criterion for the existence of a length-`m` factor of
/// `t_{α,ζ,ρ}` of the given kind. At the boundary `μ = 1-‖ζ‖` (resp.
/// `‖ζ‖`) the answer depends on the endpoint conventions and on whether
/// the orbit of ρ reaches the critical point; `branch` names the case.
pub fn exists_hl_factor(kind: HlKind, spec: &TernarySpec, m: usize) -> Result<HlOutcome> {
    spec.partition()?;
    if m == 0 {
        return invalid("factor length must be positive");
    }
    let alpha = &spec.alpha;
    let zeta = &spec.zeta;
    let mu = frac_neg(alpha, m);
    let plus = reduce_mod1(&alpha.scale(m as i64));
    let znorm = circle_distance(zeta);
    let out = |value, branch| {
        Ok(HlOutcome {
            kind,
            m,
            value,
            branch,
            mu: mu.value().clone(),
            zeta_norm: znorm.clone(),
        })
    };
    let hits = |target: &TorusPoint| -> Result<bool> { Ok(orbit_hits(alpha, &spec.rho, target)?.is_some()) };
    let conv_a = spec.one_in_j1 && !spec.zeta_in_j2;
    let conv_b = !spec.one_in_j1 && spec.zeta_in_j2;
    match kind {
        HlKind::OneHeavyTwoLight | HlKind::TwoHeavyOneLight => out(true, "always"),
        HlKind::BothHeavy => {
            let bound = &QuadExt::one() - &znorm;
            match qe_compare(mu.value(), &bound)? {
                Ordering::Less => out(true, "mu < 1-|zeta|"),
                Ordering::Greater => out(false, "mu > 1-|zeta|"),
                Ordering::Equal => {
                    if conv_a && zeta == &plus && hits(&TorusPoint::zero())? {
                        out(true, "boundary: bar alpha, zeta = {m alpha}, orbit reaches 0")
                    } else if conv_b && zeta == &mu && hits(zeta)? {
                        out(true, "boundary: bar zeta, zeta = {-m alpha}, orbit reaches zeta")
                    } else {
                        out(false, "boundary: mu = 1-|zeta|, no exceptional word")
                    }
                }
            }
        }
        HlKind::BothLight => match qe_compare(mu.value(), &znorm)? {
            Ordering::Greater => out(true, "mu > |zeta|"),
            Ordering::Less => out(false, "mu < |zeta|"),
            Ordering::Equal => {
                if conv_a && zeta == &mu && hits(zeta)? {
                    out(true, "boundary: bar alpha, zeta = {-m alpha}, orbit reaches zeta")
                } else if conv_b && zeta == &plus && hits(&TorusPoint::zero())? {
                    out(true, "boundary: bar zeta, zeta = {m alpha}, orbit reaches 0")
                } else {
                    out(false, "boundary: mu = |zeta|, no exceptional word")
                }
            }
        },
    }
}

/// The length-`m` prefix of the binary rotation word is heavy iff
/// `ρ ∈ I({-mα}, 1)`, the arc carrying `{-mα}` exactly when `1 ∉ I_1`.
pub fn heavy_prefix_predicate(s: &BinaryRotation, m: usize) -> Result<bool> {
    let mu = frac_neg(&s.alpha, m);
    s.conv.interval(mu.value(), &QuadExt::one()).contains(&s.rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{Convention, TernaryRotation};

    fn a() -> QuadExt {
        QuadExt::quad(-1, 1, 1, 1, 2)
    }

    fn spec(z: QuadExt, rho: QuadExt, f1: bool, f2: bool) -> TernarySpec {
        TernarySpec::new(a(), z, rho, f1, f2)
    }

    #[test]
    fn light_single_letter() {
        let s = spec(QuadExt::from_ratio(9, 20), QuadExt::zero(), false, false);
        let o = exists_hl_factor(HlKind::BothLight, &s, 1).unwrap();
        assert!(o.value);
        let t = TernaryRotation::new(s).unwrap();
        assert!(scan_hl_factor(HlKind::BothLight, &t, 1, 5000).unwrap());
        let c = heavy_light_classify(&[0], &t, 5000).unwrap();
        assert_eq!((c.one, c.two), (HlTag::Light, HlTag::Light));
        let one = heavy_light_classify(&[1], &t, 5000).unwrap();
        assert_eq!(one.one, HlTag::Heavy);
    }

    #[test]
    fn non_factor_rejected() {
        let t = TernaryRotation::new(spec(a(), a().scale(2), false, false)).unwrap();
        assert!(heavy_light_classify(&[1, 1], &t, 2000).is_err());
    }

    #[test]
    fn mixed_kinds_always_hold() {
        let s = spec(QuadExt::from_ratio(1, 2), QuadExt::zero(), true, true);
        for m in 1..30 {
            assert!(exists_hl_factor(HlKind::OneHeavyTwoLight, &s, m).unwrap().value);
            assert!(exists_hl_factor(HlKind::TwoHeavyOneLight, &s, m).unwrap().value);
        }
    }

    #[test]
    fn circle_matches_scan_off_boundary() {
        let s = spec(QuadExt::from_ratio(9, 20), a().scale(3), false, true);
        let t = TernaryRotation::new(s.clone()).unwrap();
        for m in 1..=25 {
            for k in HlKind::ALL {
                let geo = exists_hl_factor(k, &s, m).unwrap();
                assert_eq!(geo.value, scan_hl_factor(k, &t, m, 20_000).unwrap(), "{k} m={m} {}", geo.branch);
            }
        }
    }

    #[test]
    fn heavy_prefix_matches_scan() {
        let alpha = QuadExt::quad(3, 2, -1, 2, 5);
        for conv in [Convention::Under, Convention::Bar] {
            for j in 0..20 {
                let rho = reduce_mod1(&alpha.scale(j * 7 - 30)).into_value();
                let s = BinaryRotation::new(alpha.clone(), rho, conv).unwrap();
                let w = s.prefix(4000).unwrap();
                let ix = AbelianIndex::from_word(w.clone(), 2, 30).unwrap();
                for m in 1..=30 {
                    let ones = w[..m].iter().filter(|&&l| l == 1).count() as u32;
                    let heavy = ones == ix.corridor(1, m).unwrap().1;
                    assert_eq!(heavy_prefix_predicate(&s, m).unwrap(), heavy, "j={j} m={m} {conv:?}");
                }
            }
        }
    }
}
