use std::collections::BTreeSet;

use abclosure::closure::{
    abelian_member, canonical_rotation, corridor_member, exists_hl_factor, periodic_census, scan_hl_factor, HlKind,
};
use abclosure::exactnum::QuadExt;
use abclosure::generators::{arc, Periodic, TernaryRotation, TernarySpec};
use abclosure::spec::parse_word_spec;
use abclosure::words::{parikh, Alphabet, InfiniteWord, ParikhVector, WordRef};
use proptest::prelude::*;

/// Oracle: Parikh vectors of every length-`n` window of a prefix.
fn parikhs(w: &[u8], n: usize, k: usize) -> BTreeSet<ParikhVector> {
    w.windows(n).map(|f| parikh(f, k)).collect()
}

fn oracle_member(y: &dyn InfiniteWord, x: &dyn InfiniteWord, max_len: usize, window: usize) -> bool {
    let k = x.alphabet().size();
    let (yw, xw) = (y.prefix(window).unwrap(), x.prefix(window).unwrap());
    (1..=max_len).all(|n| parikhs(&yw, n, k).is_subset(&parikhs(&xw, n, k)))
}

fn periodic(k: usize, p: &[u8]) -> WordRef {
    arc(Periodic::new(Alphabet::digits(k), vec![], p.to_vec()).unwrap())
}

fn word(k: usize, max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..k as u8, 1..max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn binary_membership_matches_oracle_and_corridors(p in word(2, 9), q in word(2, 9), l in 1usize..16) {
        let (y, x) = (periodic(2, &p), periodic(2, &q));
        let a = abelian_member(y.as_ref(), x.as_ref(), l, 300).unwrap();
        let c = corridor_member(y.as_ref(), x.as_ref(), l, 300).unwrap();
        prop_assert_eq!(a.is_member(), oracle_member(y.as_ref(), x.as_ref(), l, 300));
        prop_assert_eq!(a.is_member(), c.is_member());
        if let Some(w) = a.witness {
            // the witness is a shortest missing factor
            prop_assert!(oracle_member(y.as_ref(), x.as_ref(), w.length - 1, 300));
            prop_assert_eq!(&y.prefix(w.position + w.length).unwrap()[w.position..], &w.word[..]);
        }
    }

    #[test]
    fn ternary_membership_matches_oracle(p in word(3, 8), q in word(3, 8), l in 1usize..12) {
        let (y, x) = (periodic(3, &p), periodic(3, &q));
        let a = abelian_member(y.as_ref(), x.as_ref(), l, 300).unwrap();
        prop_assert_eq!(a.is_member(), oracle_member(y.as_ref(), x.as_ref(), l, 300));
    }

    #[test]
    fn census_is_complete_and_minimal(p in word(2, 8)) {
        let z = periodic(2, &p);
        let c = periodic_census(z.as_ref(), 500).unwrap();
        // oracle: every primitive word of length up to n0, by rotation class
        let mut want = BTreeSet::new();
        for q in 1..=c.n0 {
            for code in 0..1u32 << q {
                let w: Vec<u8> = (0..q).rev().map(|i| ((code >> i) & 1) as u8).collect();
                let primitive = (1..q).filter(|d| q % d == 0).all(|d| (d..q).any(|i| w[i] != w[i - d]));
                if primitive && oracle_member(periodic(2, &w).as_ref(), z.as_ref(), c.max_len, 500) {
                    want.insert(canonical_rotation(&w));
                }
            }
        }
        let got: BTreeSet<_> = c.representatives.iter().cloned().collect();
        prop_assert_eq!(got.len(), c.representatives.len());
        prop_assert_eq!(got, want);
    }

    #[test]
    fn circle_criterion_matches_scan(zn in 43u32..57, rn in 0u32..100, j1: bool, j2: bool, m in 1usize..25) {
        let a = QuadExt::quad(-1, 1, 1, 1, 2);
        let spec = TernarySpec::new(a, QuadExt::from_ratio(zn as i64, 100), QuadExt::from_ratio(rn as i64, 100), j1, j2);
        let x = TernaryRotation::new(spec.clone()).unwrap();
        for kind in HlKind::ALL {
            let geo = exists_hl_factor(kind, &spec, m).unwrap();
            prop_assert_eq!(geo.value, scan_hl_factor(kind, &x, m, 5000).unwrap(), "{} at m = {}", kind, m);
        }
    }
}

#[test]
fn frequency_gate_rejects() {
    let x = parse_word_spec("fib").unwrap();
    let xw = x.prefix(20_000).unwrap();
    let xr = ones(&xw, 200);
    for s in ["periodic(01)", "periodic(001)", "sturmian(alpha=quad(-1,1,2))", "tm", "periodic(00101)"] {
        let y = parse_word_spec(s).unwrap();
        let yr = ones(&y.prefix(20_000).unwrap(), 200);
        if yr.0 < xr.0 || yr.1 > xr.1 {
            assert!(!abelian_member(y.as_ref(), x.as_ref(), 200, 20_000).unwrap().is_member(), "{s}");
        }
    }
}

fn ones(w: &[u8], n: usize) -> (usize, usize) {
    let c: Vec<usize> = w.windows(n).map(|f| f.iter().filter(|&&l| l == 1).count()).collect();
    (*c.iter().min().unwrap(), *c.iter().max().unwrap())
}

#[test]
fn membership_is_reflexive_and_shift_invariant() {
    for s in ["tm", "fib", "trib", "ternary(alpha=quad(-1,1,2), zeta=1/2)", "interleave(fib; periodic(0102); periodic(ab))"] {
        let x = parse_word_spec(s).unwrap();
        let shifted = parse_word_spec(&format!("shift(13; {s})")).unwrap();
        assert!(abelian_member(x.as_ref(), x.as_ref(), 30, 4000).unwrap().is_member(), "{s}");
        assert!(abelian_member(shifted.as_ref(), x.as_ref(), 30, 4000).unwrap().is_member(), "{s}");
    }
}
