use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::words::{parikh, Alphabet, FiniteWord, Letter};

use super::{bounded_language, Dfa, ForbiddenSet};

/// `ℱ = {11}`
pub fn golden_mean() -> ForbiddenSet {
    ForbiddenSet::from_strs(Alphabet::digits(2), &["11"]).expect("static")
}

/// Walks on the graph `a → b → c → a` with a loop at `c`.
pub fn three_letter() -> ForbiddenSet {
    let a = Alphabet::new(["a", "b", "c"]).expect("static");
    ForbiddenSet::from_strs(a, &["aa", "ac", "ba", "bb", "cb"]).expect("static")
}

/// `ℱ = {a,b,d}c ∪ d{a,b,c} ∪ cRd` with `R = {a,b}* \ (ab)*`, as an
/// automaton recognizing exactly `ℱ`.
pub fn four_letter_nonsofic() -> ForbiddenSet {
    let alphabet = Alphabet::new(["a", "b", "c", "d"]).expect("static");
    // 0 start, 1 after a|b, 2 after d, 3 after c(ab)^k, 4 after c(ab)^k a,
    // 5 after c w with w off the (ab)^ω track, 6 accept, 7 sink
    let (a, b, c, d) = (0, 1, 2, 3);
    let mut t = vec![vec![7; 4]; 8];
    t[0][a] = 1;
    t[0][b] = 1;
    t[0][c] = 3;
    t[0][d] = 2;
    t[1][c] = 6;
    t[2][a] = 6;
    t[2][b] = 6;
    t[2][c] = 6;
    t[3][a] = 4;
    t[3][b] = 5;
    t[4][a] = 5;
    t[4][b] = 3;
    t[4][d] = 6;
    t[5][a] = 5;
    t[5][b] = 5;
    t[5][d] = 6;
    let dfa = Dfa::new(4, 0, BTreeSet::from([6]), t).expect("static");
    ForbiddenSet::regular(alphabet, dfa).expect("static")
}

/// Allowed blocks of length 6 for the binary order-6 SFT: the factors of
/// `(0011)^ω` and `(000111)^ω` plus the bridge `011000` taking the first
/// cycle into the second.
pub const ORDER6_ALLOWED: [&str; 11] = [
    "001100", "011001", "110011", "100110", "000111", "001110", "011100", "111000", "110001", "100011",
    "011000",
];

/// Binary SFT of order 6 carrying `(0011)^ω`, `(000111)^ω` and the
/// one-way passage `⋯0011 0011 000111 000111⋯`. Only its shape is known,
/// so this list is a reconstruction: every 6-block outside
/// [`ORDER6_ALLOWED`] is forbidden.
pub fn binary_order6() -> ForbiddenSet {
    let a = Alphabet::digits(2);
    let allowed: BTreeSet<&str> = ORDER6_ALLOWED.into_iter().collect();
    let words: Vec<FiniteWord> = (0..64u32)
        .map(|c| (0..6).rev().map(|i| ((c >> i) & 1) as Letter).collect::<Vec<_>>())
        .filter(|w| !allowed.contains(a.render(w).as_str()))
        .map(FiniteWord)
        .collect();
    ForbiddenSet::finite(a, words).expect("static")
}

#[derive(Clone, Debug, Serialize)]
pub struct SftReport {
    pub n: usize,
    pub fragment: String,
    pub horizon: usize,
    /// every factor of length at most n is abelian-legal
    pub short_factors_ok: bool,
    pub long_factor: String,
    pub long_factor_rejected: bool,
    pub passed: bool,
}

/// `c^K ab c^n ba c^K` with `K = n+2` in the three-letter SFT: short
/// factors pass the abelian test while `b c^n b` fails it.
pub fn sft_counterexample_report(n: usize) -> Result<SftReport> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    let f = three_letter();
    let horizon = n + 2;
    let lang = bounded_language(&f, horizon)?;
    let k = n + 2;
    let text = format!("{}ab{}ba{}", "c".repeat(k), "c".repeat(n), "c".repeat(k));
    let frag = f.alphabet.parse_word(&text)?;
    let short_ok = (1..=n).all(|m| {
        frag.windows(m)
            .all(|v| lang.parikhs[m].contains(&parikh(v, f.alphabet.size())))
    });
    let long = format!("b{}b", "c".repeat(n));
    let rejected = !lang.abelian_legal(&f.alphabet.parse_word(&long)?)?;
    Ok(SftReport {
        n,
        fragment: text,
        horizon,
        short_factors_ok: short_ok,
        passed: short_ok && rejected,
        long_factor: long,
        long_factor_rejected: rejected,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BinarySftReport {
    pub k: usize,
    pub horizon: usize,
    pub accepted: String,
    pub accepted_ok: bool,
    pub rejected: String,
    pub rejected_witness: Option<String>,
    pub passed: bool,
}

/// One surplus `0` between `0011` blocks is abelian-legal in the order-6
/// SFT; two surplus zeros separated by `(0011)^k` are not.
pub fn binary_sft_report(k: usize) -> Result<BinarySftReport> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let f = binary_order6();
    let good = format!("{}0{}", "0011".repeat(3), "0011".repeat(3));
    let bad = format!("{}0{}0{}", "0011".repeat(2), "0011".repeat(k), "0011".repeat(3));
    let horizon = bad.len().max(good.len());
    let lang = bounded_language(&f, horizon)?;
    let gw = f.alphabet.parse_word(&good)?;
    let bw = f.alphabet.parse_word(&bad)?;
    let accepted_ok = lang.abelian_legal(&gw)?;
    let witness = lang
        .first_abelian_illegal(&bw)
        .map(|(i, n)| f.alphabet.render(&bw[i..i + n]));
    Ok(BinarySftReport {
        k,
        horizon,
        passed: accepted_ok && witness.is_some(),
        accepted: good,
        accepted_ok,
        rejected: bad,
        rejected_witness: witness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NonSoficReport {
    #[serde(rename = "L")]
    pub max_len: usize,
    pub horizon: usize,
    pub witnesses: Vec<String>,
    /// per `|w|`: (found, `2^n` minus balanced words)
    pub counts: BTreeMap<usize, (usize, u64)>,
    pub matches_unbalanced: bool,
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Brute force over `w ∈ {a,b}^{≤L}`: `cwd` is minimal forbidden for the
/// abelian closure of the four-letter sofic shift exactly when
/// `|w|_a ≠ |w|_b`.
pub fn nonsofic_witness(max_len: usize) -> Result<NonSoficReport> {
    if max_len == 0 {
        return invalid("L must be at least 1");
    }
    let f = four_letter_nonsofic();
    let horizon = max_len + 4;
    let lang = bounded_language(&f, horizon)?;
    let ok = |w: &[Letter]| lang.first_abelian_illegal(w).is_none();
    let mut witnesses = Vec::new();
    let mut counts = BTreeMap::new();
    let mut matches = true;
    for n in 0..=max_len {
        let mut found = 0;
        for code in 0..1u32 << n {
            let w: Vec<Letter> = (0..n).rev().map(|i| ((code >> i) & 1) as Letter).collect();
            let mut cwd = vec![2];
            cwd.extend_from_slice(&w);
            cwd.push(3);
            let minimal = !ok(&cwd) && ok(&cwd[1..]) && ok(&cwd[..cwd.len() - 1]);
            let unbalanced = w.iter().filter(|&&l| l == 0).count() * 2 != n;
            matches &= minimal == unbalanced;
            if minimal {
                found += 1;
                witnesses.push(f.alphabet.render(&cwd));
            }
        }
        let expected = (1u64 << n) - if n % 2 == 0 { binomial(n as u64, n as u64 / 2) } else { 0 };
        matches &= found as u64 == expected;
        counts.insert(n, (found, expected));
    }
    Ok(NonSoficReport {
        max_len,
        horizon,
        witnesses,
        counts,
        matches_unbalanced: matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sft_reports() {
        for n in [1, 4, 10] {
            let r = sft_counterexample_report(n).unwrap();
            assert!(r.passed, "{r:?}");
        }
        assert!(sft_counterexample_report(0).is_err());
    }

    #[test]
    fn binary_reports() {
        for k in 1..=3 {
            let r = binary_sft_report(k).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn nonsofic_small() {
        let r = nonsofic_witness(3).unwrap();
        assert!(r.matches_unbalanced);
        assert!(r.witnesses.contains(&"cad".to_string()));
        assert!(!r.witnesses.contains(&"cabd".to_string()));
        assert!(!r.witnesses.contains(&"cd".to_string()));
        assert_eq!(r.counts[&2], (2, 2));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(binomial(4, 2), 6);
    }
}
