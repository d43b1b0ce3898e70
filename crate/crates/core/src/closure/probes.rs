use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exactnum::{circle_distance, qe_compare, reduce_mod1, QuadExt};
use crate::generators::{
    arc, fm_min_complexity_word, reversal_word, ArnouxRauzy, MorphicImage, Morphism, Periodic, Prefixed,
    TernaryRotation, TernarySpec, Truncated,
};
use crate::words::{window_prefix, AbelianIndex, FactorTrie, FiniteWord, InfiniteWord, WordRef};

use super::{abelian_member, first_missing, member_in_index, MembershipVerdict};

/// One word tested against a closure, with the verdict the theory predicts.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeEntry {
    pub label: String,
    pub expect_member: bool,
    pub verdict: MembershipVerdict,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub probe: String,
    pub base: String,
    #[serde(rename = "L")]
    pub max_len: usize,
    pub window: usize,
    pub entries: Vec<ProbeEntry>,
    pub passed: bool,
}

/// Runs each `(label, word, expect_member)` against one shared index of `x`.
pub(crate) fn battery(
    probe: &str,
    x: &dyn InfiniteWord,
    candidates: Vec<(String, WordRef, bool)>,
    max_len: usize,
    window: usize,
) -> Result<ProbeReport> {
    let ix = AbelianIndex::build(x, max_len, window)?;
    let entries = candidates
        .into_par_iter()
        .map(|(label, y, expect)| {
            let q = format!("{} in A({})", label, x.name());
            let v = member_in_index(y.as_ref(), x.alphabet(), &ix, max_len, window, q)?;
            Ok(ProbeEntry {
                ok: v.is_member() == expect,
                label,
                expect_member: expect,
                verdict: v,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProbeReport {
        probe: probe.into(),
        base: x.name(),
        max_len,
        window: ix.window(),
        passed: entries.iter().all(|e| e.ok),
        entries,
    })
}

/// A 1-2-light factor of the lower-offset word missing from the closure of
/// the higher one, at a length `m` with `‖ζ_hi‖ > {-mα} > ‖ζ_lo‖`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LightWitness {
    pub m: usize,
    pub mu: QuadExt,
    pub factor: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OffsetOrder {
    pub a_in_b: MembershipVerdict,
    pub b_in_a: MembershipVerdict,
    /// which word has the larger `‖ζ‖`: "A", "B" or "equal"
    pub larger: &'static str,
    pub light_witness: Option<LightWitness>,
    pub consistent: bool,
}

/// Checks `t_hi ∈ 𝒜(t_lo)` and `t_lo ∉ 𝒜(t_hi)` for `‖ζ_hi‖ > ‖ζ_lo‖`.
pub fn offset_order_member(a: &TernarySpec, b: &TernarySpec, max_len: usize, window: usize) -> Result<OffsetOrder> {
    if a.alpha != b.alpha {
        return invalid(format!("slope mismatch: {} vs {}", a.alpha, b.alpha));
    }
    let ta = TernaryRotation::new(a.clone())?;
    let tb = TernaryRotation::new(b.clone())?;
    let a_in_b = abelian_member(&ta, &tb, max_len, window)?;
    let b_in_a = abelian_member(&tb, &ta, max_len, window)?;
    let (na, nb) = (circle_distance(&a.zeta), circle_distance(&b.zeta));
    let order = qe_compare(&na, &nb)?;
    let (larger, hi, lo, zhi, zlo, hi_in_lo, lo_in_hi) = match order {
        Ordering::Equal => {
            let consistent = a_in_b.is_member() && b_in_a.is_member();
            return Ok(OffsetOrder {
                a_in_b,
                b_in_a,
                larger: "equal",
                light_witness: None,
                consistent,
            });
        }
        Ordering::Greater => ("A", &ta, &tb, &na, &nb, &a_in_b, &b_in_a),
        Ordering::Less => ("B", &tb, &ta, &nb, &na, &b_in_a, &a_in_b),
    };
    let ix_hi = AbelianIndex::build(hi, max_len, window)?;
    let lo_word = window_prefix(lo, window)?;
    let ix_lo = AbelianIndex::from_word(lo_word.clone(), 3, max_len)?;
    let mut light_witness = None;
    for m in 1..=max_len {
        let mu = reduce_mod1(&a.alpha.scale(-(m as i64)));
        let in_gap = qe_compare(zhi, mu.value())? == Ordering::Greater
            && qe_compare(mu.value(), zlo)? == Ordering::Greater;
        if !in_gap {
            continue;
        }
        let (l1, l2) = (ix_lo.corridor(1, m)?.0, ix_lo.corridor(2, m)?.0);
        if let Some(i) = first_missing(&lo_word, &ix_hi, m, |p| p[1] == l1 && p[2] == l2) {
            light_witness = Some(LightWitness {
                m,
                mu: mu.into_value(),
                factor: lo.alphabet().render(&lo_word[i..i + m]),
            });
            break;
        }
    }
    let consistent = hi_in_lo.is_member() && !lo_in_hi.is_member() && light_witness.is_some();
    Ok(OffsetOrder {
        a_in_b,
        b_in_a,
        larger,
        light_witness,
        consistent,
    })
}

/// Samples `𝒜(u)` for the minimal-complexity coding `u = t_{α,α,ρ}`:
/// candidates carry the verdict the characterization predicts.
pub fn np2_closure_probe(
    u: &TernarySpec,
    candidates: Vec<(String, WordRef, bool)>,
    max_len: usize,
    window: usize,
) -> Result<ProbeReport> {
    if u.zeta.value() != &reduce_mod1(&u.alpha).into_value() {
        return invalid("the probe needs the offset zeta = alpha");
    }
    let t = TernaryRotation::new(u.clone())?;
    battery("np2-closure", &t, candidates, max_len, window)
}

/// The four-letter fm word `u = σ(s)` against its reversal approximant and
/// three block mutations.
pub fn minimal_subshift_probe_4letter(
    g: &str,
    e: &str,
    f: &str,
    s: WordRef,
    max_len: usize,
    window: usize,
) -> Result<ProbeReport> {
    let u = fm_min_complexity_word(g, e, f, s.clone())?;
    if u.alphabet().size() < 4 {
        return invalid("the probe needs at least four letters");
    }
    let sigma = u.morphism().clone();
    let u: WordRef = arc(u);
    let mut cands: Vec<(String, WordRef, bool)> = vec![
        ("u".into(), u.clone(), true),
        ("reversal approximant".into(), arc(reversal_word(&u, window)?), true),
    ];

    // σ(0) forward, σ(1) reversed
    let mut mixed = sigma.clone();
    mixed.images[1] = mixed.images[1].reversed();
    cands.push(("mixed orientation".into(), arc(MorphicImage::new(mixed, s.clone())?), false));

    // blocks arranged by a word of the wrong frequency
    let alt = Periodic::new(s.alphabet().clone(), vec![], vec![0, 1])?;
    cands.push(("blocks of (01)^w".into(), arc(MorphicImage::new(sigma.clone(), arc(alt))?), false));

    cands.push(("one block reversed".into(), arc(reverse_middle_block(&sigma, s.as_ref(), u.as_ref(), window)?), false));

    battery("fm-4letter", u.as_ref(), cands, max_len, window)
}

fn reverse_middle_block(sigma: &Morphism, s: &dyn InfiniteWord, u: &dyn InfiniteWord, window: usize) -> Result<Truncated> {
    let src = s.prefix(window)?;
    let mut w = u.prefix(window)?.into_inner();
    let mut pos = 0;
    for (j, &l) in src.iter().enumerate() {
        let b = &sigma.images[l as usize];
        if pos + b.len() > w.len() {
            break;
        }
        // first block σ(1) past the middle, so the reversal changes letters
        if pos >= w.len() / 2 && j > 0 && l == 1 {
            w[pos..pos + b.len()].reverse();
            break;
        }
        pos += b.len();
    }
    Ok(Truncated::new(
        u.alphabet().clone(),
        FiniteWord::from(w),
        format!("reverse-one-block({})", u.name()),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct ArProbe {
    pub word: String,
    pub member: MembershipVerdict,
    pub self_member: MembershipVerdict,
    /// shortest factor of `20c` missing from `L(c)` on the window
    pub absent_factor: Option<String>,
    pub passed: bool,
}

/// Directive must start `0{0,1}*1{0,1}*2`.
fn check_directive(d: &dyn InfiniteWord) -> Result<()> {
    let a = d.alphabet();
    let w = window_prefix(d, 4096)?;
    let names: Vec<&str> = w.iter().map(|&l| a.name(l)).collect();
    let Some(two) = names.iter().position(|&n| n == "2") else {
        return invalid("directive never reaches letter 2");
    };
    let head = &names[..two];
    if head.first() != Some(&"0") || !head.contains(&"1") || head.iter().any(|&n| n != "0" && n != "1") {
        return invalid("directive must start with 0{0,1}*1{0,1}*2");
    }
    Ok(())
}

/// `20c ∈ 𝒜(c)` up to `L`, while some factor of `20c` of length at most
/// `max_absent` does not occur in `c` on the window.
pub fn ar_closure_probe(directive: WordRef, max_len: usize, window: usize, max_absent: usize) -> Result<ArProbe> {
    check_directive(directive.as_ref())?;
    let c = arc(ArnouxRauzy::new(directive));
    let y = Prefixed::new("20", c.clone())?;
    let member = abelian_member(&y, c.as_ref(), max_len, window)?;
    let self_member = abelian_member(c.as_ref(), c.as_ref(), max_len, window)?;
    let cw = window_prefix(c.as_ref(), window)?;
    let trie = FactorTrie::new(&cw, c.alphabet().size(), max_absent);
    let map = c.alphabet().embedding_of(y.alphabet())?;
    let yw: Vec<_> = window_prefix(&y, window)?.iter().map(|&l| map[l as usize]).collect();
    let absent = (1..=max_absent).find_map(|n| {
        yw.windows(n)
            .find(|f| !trie.contains(f))
            .map(|f| c.alphabet().render(f))
    });
    Ok(ArProbe {
        word: c.name(),
        passed: member.is_member() && self_member.is_member() && absent.is_some(),
        member,
        self_member,
        absent_factor: absent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fibonacci;

    fn a() -> QuadExt {
        QuadExt::quad(-1, 1, 1, 1, 2)
    }

    #[test]
    fn offset_order_small() {
        let hi = TernarySpec::new(a(), QuadExt::from_ratio(1, 2), QuadExt::zero(), false, false);
        let lo = hi.with_zeta(QuadExt::from_ratio(9, 20));
        let r = offset_order_member(&hi, &lo, 40, 20_000).unwrap();
        assert_eq!(r.larger, "A");
        assert!(r.a_in_b.is_member());
        assert!(!r.b_in_a.is_member());
        assert!(r.consistent, "{r:?}");
        let same = offset_order_member(&hi, &hi, 30, 5000).unwrap();
        assert!(same.consistent);
        let other = TernarySpec::new(QuadExt::quad(3, 2, -1, 2, 5), QuadExt::from_ratio(1, 2), QuadExt::zero(), false, false);
        assert!(offset_order_member(&hi, &other, 10, 100).is_err());
    }

    #[test]
    fn fm_probe() {
        let r = minimal_subshift_probe_4letter("23", "0", "1", arc(fibonacci()), 30, 3000).unwrap();
        for e in &r.entries {
            assert!(e.ok, "{}: {:?}", e.label, e.verdict);
        }
    }

    #[test]
    fn ar_probe() {
        let r = ar_closure_probe(arc(Periodic::pure("012").unwrap()), 50, 5000, 10).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(ar_closure_probe(arc(Periodic::pure("102").unwrap()), 10, 100, 10).is_err());
    }
}
