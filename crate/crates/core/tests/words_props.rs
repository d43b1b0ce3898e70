use std::collections::BTreeSet;

use abclosure::exactnum::QuadExt;
use abclosure::generators::{arc, fibonacci, BinaryRotation, Convention};
use abclosure::spec::parse_word_spec;
use abclosure::words::{
    abelian_complexity, corridor, factor_complexity, factor_sets, is_periodic_window, parikh, WordRef,
};
use proptest::prelude::*;

const FIXTURES: [&str; 12] = [
    "tm",
    "fib",
    "trib",
    "champ(2)",
    "periodic(0010)",
    "preperiodic(0011, 001101)",
    "sturmian(alpha=quad(-1,1,2), rho=1/3, conv=bar)",
    "ternary(alpha=quad(-1,1,2), zeta=1/2)",
    "interleave(fib; periodic(0102); periodic(ab))",
    "image(0->02, 1->12; fib)",
    "ar(periodic(012))",
    "fm(G=23; E=0; F=1; s=fib)",
];

fn fixture(s: &str) -> WordRef {
    parse_word_spec(s).unwrap()
}

/// Oracle: counts of letter 1 over all length-`n` windows, straight from
/// the prefix.
fn ones_range(w: &[u8], n: usize) -> BTreeSet<usize> {
    w.windows(n).map(|f| f.iter().filter(|&&l| l == 1).count()).collect()
}

#[test]
fn binary_corridors_have_no_gaps() {
    for s in ["tm", "fib", "periodic(0010)", "preperiodic(0011, 001101)", "champ(2)", "sturmian(alpha=quad(0,1/2,2))"] {
        let x = fixture(s);
        let w = x.prefix(3000).unwrap();
        for n in 1..=50 {
            let seen = ones_range(&w, n);
            let (lo, hi) = corridor(x.as_ref(), 1, n, 3000).unwrap();
            let want: BTreeSet<usize> = (lo as usize..=hi as usize).collect();
            assert_eq!(seen, want, "{s} at n = {n}");
        }
    }
}

#[test]
fn abelian_complexity_at_most_factor_complexity() {
    for s in FIXTURES {
        let x = fixture(s);
        for n in 1..=25 {
            let a = abelian_complexity(x.as_ref(), n, 4000).unwrap();
            let f = factor_complexity(x.as_ref(), n, 4000).unwrap();
            assert!(a <= f, "{s} at n = {n}: {a} > {f}");
        }
    }
}

#[test]
fn prefixes_are_consistent() {
    for s in FIXTURES {
        let x = fixture(s);
        let long = x.prefix(10_000).unwrap();
        for m in [0, 1, 7, 100, 2047, 9999] {
            assert_eq!(&x.prefix(m).unwrap()[..], &long[..m], "{s} at {m}");
        }
    }
}

#[test]
fn rational_slopes_are_periodic_and_irrational_ones_are_not() {
    for (p, q) in [(1, 3), (2, 5), (3, 7), (5, 12)] {
        let x = BinaryRotation::new(QuadExt::from_ratio(p, q), QuadExt::zero(), Convention::Under).unwrap();
        let per = is_periodic_window(&x, 10_000).unwrap().expect("periodic");
        assert_eq!(q as usize % per, 0, "{p}/{q} has period {per}");
    }
    for a in [QuadExt::quad(-1, 1, 1, 1, 2), QuadExt::quad(3, 2, -1, 2, 5), QuadExt::quad(0, 1, 1, 3, 3)] {
        let x = BinaryRotation::new(a.clone(), QuadExt::zero(), Convention::Under).unwrap();
        assert_eq!(is_periodic_window(&x, 10_000).unwrap(), None, "{a}");
    }
}

#[test]
fn rotation_and_morphic_fibonacci_share_factors() {
    let g = QuadExt::quad(3, 2, -1, 2, 5);
    let rot = BinaryRotation::new(g.clone(), g, Convention::Under).unwrap();
    let fib = fibonacci();
    assert_eq!(factor_sets(&rot, 30, 5000).unwrap(), factor_sets(&fib, 30, 5000).unwrap());
}

#[test]
fn arnoux_rauzy_palindromic_prefixes() {
    let x = fixture("ar(periodic(012))");
    let w = x.prefix(2000).unwrap();
    let mut lens = vec![0usize];
    // Justin: |ψ(va)| = 2|ψ(v)| + 1 for a new letter, else 2|ψ(v)| - |ψ(v1)|
    // with v1 the prefix before the last a
    let mut last: [Option<usize>; 3] = [None; 3];
    for k in 0..12 {
        let a = k % 3;
        let prev = *lens.last().unwrap();
        lens.push(match last[a] {
            None => 2 * prev + 1,
            Some(l) => 2 * prev - l,
        });
        last[a] = Some(prev);
    }
    assert_eq!(&lens[..7], &[0, 1, 3, 7, 14, 27, 51]);
    for &n in lens.iter().filter(|&&n| n <= w.len()) {
        let p = &w[..n];
        assert!(p.iter().eq(p.iter().rev()), "prefix of length {n} is not a palindrome");
    }
}

fn binary_word() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, 1..12)
}

proptest! {
    #[test]
    fn parikh_is_additive(u in prop::collection::vec(0u8..4, 0..30), v in prop::collection::vec(0u8..4, 0..30)) {
        let mut uv = u.clone();
        uv.extend(&v);
        prop_assert_eq!(parikh(&uv, 4), &parikh(&u, 4) + &parikh(&v, 4));
    }

    #[test]
    fn periodic_corridors_match_the_window_oracle(p in binary_word(), n in 1usize..20) {
        let x = arc(abclosure::generators::Periodic::new(
            abclosure::words::Alphabet::digits(2), vec![], p.clone()).unwrap());
        let w = x.prefix(400).unwrap();
        let seen = ones_range(&w, n);
        let (lo, hi) = corridor(x.as_ref(), 1, n, 400).unwrap();
        prop_assert_eq!(*seen.first().unwrap(), lo as usize);
        prop_assert_eq!(*seen.last().unwrap(), hi as usize);
    }
}
