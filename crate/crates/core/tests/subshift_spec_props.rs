use abclosure::spec::{eval, parse_spec, parse_word_spec};
use abclosure::subshift::{
    bounded_language, golden_mean, legal, minimal_forbidden, parse_forbidden, three_letter, ForbiddenSet,
};
use abclosure::words::{Alphabet, FiniteWord};
use proptest::prelude::*;

fn all_words(k: usize, n: usize) -> Vec<Vec<u8>> {
    (0..(k as u32).pow(n as u32))
        .map(|mut c| {
            let mut w = vec![0u8; n];
            for s in w.iter_mut().rev() {
                *s = (c % k as u32) as u8;
                c /= k as u32;
            }
            w
        })
        .collect()
}

fn contains_factor(w: &[u8], f: &[u8]) -> bool {
    f.is_empty() || w.windows(f.len()).any(|v| v == f)
}

/// Every returned word is minimal, and every short word outside the
/// language contains one.
fn check_minimal(f: &ForbiddenSet, max_len: usize) -> Result<(), TestCaseError> {
    let mf = minimal_forbidden(f, max_len).unwrap();
    let lang = bounded_language(f, 2 * max_len).unwrap();
    for w in &mf {
        prop_assert!(!lang.is_extendable(w));
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                if j - i < w.len() {
                    prop_assert!(lang.is_extendable(&w[i..j]), "proper factor of {:?}", w);
                }
            }
        }
    }
    for n in 1..=max_len {
        for w in all_words(f.alphabet.size(), n) {
            if !lang.is_extendable(&w) {
                prop_assert!(mf.iter().any(|m| contains_factor(&w, m)), "{:?} not covered", w);
            }
        }
    }
    Ok(())
}

#[test]
fn fixtures_minimal_forbidden() {
    for f in [golden_mean(), three_letter()] {
        check_minimal(&f, 6).unwrap();
    }
}

fn forbidden_list() -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(prop::collection::vec(0u8..2, 2..5), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_lists_minimal_forbidden(ws in forbidden_list()) {
        let f = ForbiddenSet::finite(Alphabet::digits(2), ws.into_iter().map(FiniteWord).collect()).unwrap();
        check_minimal(&f, 6)?;
    }

    #[test]
    fn list_text_round_trip(ws in forbidden_list(), probe in prop::collection::vec(0u8..2, 0..12)) {
        let a = Alphabet::digits(2);
        let text: String = std::iter::once("alphabet 0 1\n".to_string())
            .chain(ws.iter().map(|w| a.render(w) + "\n"))
            .collect();
        let parsed = parse_forbidden(&text).unwrap();
        let direct = ForbiddenSet::finite(a, ws.into_iter().map(FiniteWord).collect()).unwrap();
        prop_assert_eq!(&parsed, &direct);
        prop_assert_eq!(legal(&probe, &parsed), legal(&probe, &direct));
    }

    #[test]
    fn specs_round_trip(text in spec_text()) {
        let ast = parse_spec(&text).unwrap();
        prop_assert_eq!(&parse_spec(&ast.to_string()).unwrap(), &ast);
        let w = eval(&ast).unwrap();
        let again = parse_word_spec(&w.name()).unwrap();
        prop_assert_eq!(w.prefix(200).unwrap(), again.prefix(200).unwrap());
    }
}

fn spec_text() -> impl Strategy<Value = String> {
    let bin = || "[01]{1,6}";
    let leaf = prop_oneof![
        Just("tm".to_string()),
        Just("fib".to_string()),
        Just("champ".to_string()),
        bin().prop_map(|p| format!("periodic({p})")),
        (bin(), bin()).prop_map(|(a, b)| format!("preperiodic(pre={a}, period={b})")),
        (1i64..30, 31i64..60).prop_map(|(p, q)| format!("sturmian(alpha={p}/{q}, conv=bar)")),
        Just("sturmian(quad(-1,1,2), 1/3)".to_string()),
    ];
    let binary = leaf.prop_recursive(3, 8, 1, move |inner| {
        prop_oneof![
            (0usize..20, inner.clone()).prop_map(|(k, w)| format!("shift({k}; {w})")),
            ("[01]{1,4}", inner.clone()).prop_map(|(h, w)| format!("prefixed({h}; {w})")),
            inner.prop_map(|w| format!("image(0->01, 1->0; {w})")),
        ]
    });
    // interleaving needs disjoint component alphabets, so it only wraps
    prop_oneof![
        binary.clone(),
        (binary, "[ab]{1,4}").prop_map(|(w, z)| format!("interleave(backbone=tm; z0={w}; z1=periodic({z}))")),
    ]
}
