//! Subshifts given by forbidden factors, their finite languages, and the
//! counterexample fixtures for abelian closures of subshifts.

mod fixtures;
mod format;

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::words::{parikh, Alphabet, FiniteWord, Letter, ParikhVector};

pub use fixtures::{
    binary_order6, binary_sft_report, four_letter_nonsofic, golden_mean, nonsofic_witness, sft_counterexample_report,
    three_letter, BinarySftReport, NonSoficReport, SftReport,
};
pub use format::parse_forbidden;

/// Complete deterministic automaton; `trans[s][a]` is the successor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dfa {
    pub start: usize,
    pub accept: BTreeSet<usize>,
    pub trans: Vec<Vec<usize>>,
    #[serde(skip)]
    live: Vec<bool>,
}

impl Dfa {
    pub fn new(k: usize, start: usize, accept: BTreeSet<usize>, trans: Vec<Vec<usize>>) -> Result<Self> {
        let n = trans.len();
        if start >= n || accept.iter().any(|&s| s >= n) {
            return invalid("automaton refers to a missing state");
        }
        for (s, row) in trans.iter().enumerate() {
            if row.len() != k {
                return invalid(format!("state {s} lacks a transition for some letter"));
            }
            if row.iter().any(|&t| t >= n) {
                return invalid(format!("state {s} moves to a missing state"));
            }
        }
        // states that can still reach acceptance
        let mut live: Vec<bool> = (0..n).map(|s| accept.contains(&s)).collect();
        loop {
            let mut changed = false;
            for s in 0..n {
                if !live[s] && trans[s].iter().any(|&t| live[t]) {
                    live[s] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Ok(Dfa {
            start,
            accept,
            trans,
            live,
        })
    }

    pub fn states(&self) -> usize {
        self.trans.len()
    }

    pub fn accepts(&self, w: &[Letter]) -> bool {
        let s = w.iter().fold(self.start, |s, &a| self.trans[s][a as usize]);
        self.accept.contains(&s)
    }

    /// Does some prefix of `w` lie in the language?
    fn accepts_prefix_of(&self, w: &[Letter]) -> bool {
        let mut s = self.start;
        if self.accept.contains(&s) {
            return true;
        }
        for &a in w {
            s = self.trans[s][a as usize];
            if self.accept.contains(&s) {
                return true;
            }
            if !self.live[s] {
                return false;
            }
        }
        false
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Forbidden {
    Finite(Vec<FiniteWord>),
    Regular(Dfa),
}

/// A set `ℱ` of forbidden words over an alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenSet {
    pub alphabet: Alphabet,
    pub forbidden: Forbidden,
}

impl ForbiddenSet {
    /// Deduplicates and keeps only factor-minimal words.
    pub fn finite(alphabet: Alphabet, words: Vec<FiniteWord>) -> Result<Self> {
        if words.iter().any(|w| w.iter().any(|&l| l as usize >= alphabet.size())) {
            return Err(Error::AlphabetMismatch("forbidden word leaves the alphabet".into()));
        }
        let mut words = words;
        words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        words.dedup();
        let mut kept: Vec<FiniteWord> = Vec::new();
        for w in words {
            if !kept.iter().any(|u| w.windows(u.len().max(1)).any(|f| f == &u[..])) {
                kept.push(w);
            }
        }
        kept.sort();
        Ok(ForbiddenSet {
            alphabet,
            forbidden: Forbidden::Finite(kept),
        })
    }

    pub fn from_strs(alphabet: Alphabet, words: &[&str]) -> Result<Self> {
        let ws = words.iter().map(|w| alphabet.parse_word(w)).collect::<Result<Vec<_>>>()?;
        Self::finite(alphabet, ws)
    }

    pub fn regular(alphabet: Alphabet, dfa: Dfa) -> Result<Self> {
        if dfa.trans.first().map_or(0, |r| r.len()) != alphabet.size() {
            return invalid("automaton and alphabet disagree on the number of letters");
        }
        Ok(ForbiddenSet {
            alphabet,
            forbidden: Forbidden::Regular(dfa),
        })
    }

    /// Trie automaton recognizing exactly a finite list.
    pub fn to_dfa(&self) -> Dfa {
        match &self.forbidden {
            Forbidden::Regular(d) => d.clone(),
            Forbidden::Finite(words) => {
                let k = self.alphabet.size();
                // state 0 is the sink, 1 the root
                let mut trans = vec![vec![0; k], vec![0; k]];
                let mut accept = BTreeSet::new();
                for w in words {
                    let mut s = 1;
                    for &a in w.iter() {
                        if trans[s][a as usize] == 0 {
                            trans.push(vec![0; k]);
                            let id = trans.len() - 1;
                            trans[s][a as usize] = id;
                        }
                        s = trans[s][a as usize];
                    }
                    accept.insert(s);
                }
                Dfa::new(k, 1, accept, trans).expect("trie automaton is complete")
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.forbidden, Forbidden::Finite(_))
    }
}

/// No factor of `w` belongs to `ℱ`.
pub fn legal(w: &[Letter], f: &ForbiddenSet) -> bool {
    match &f.forbidden {
        Forbidden::Finite(words) => !words
            .iter()
            .any(|u| u.is_empty() || w.windows(u.len()).any(|x| x == &u[..])),
        Forbidden::Regular(d) => !(0..=w.len()).any(|i| d.accepts_prefix_of(&w[i..])),
    }
}

/// Legal words of each length up to the horizon, with two-sided
/// extendability tags.
#[derive(Clone, Debug)]
pub struct BoundedLanguage {
    pub alphabet: Alphabet,
    pub horizon: usize,
    /// `words[n]`: legal words of length n, sorted, each with its tag
    pub words: Vec<Vec<(FiniteWord, bool)>>,
    parikhs: Vec<HashSet<ParikhVector>>,
}

impl BoundedLanguage {
    pub fn legal_words(&self, n: usize) -> impl Iterator<Item = &FiniteWord> {
        self.words[n].iter().map(|(w, _)| w)
    }

    pub fn extendable_words(&self, n: usize) -> impl Iterator<Item = &FiniteWord> {
        self.words[n].iter().filter(|(_, e)| *e).map(|(w, _)| w)
    }

    pub fn is_legal(&self, w: &[Letter]) -> bool {
        w.len() <= self.horizon && self.words[w.len()].binary_search_by(|(u, _)| u[..].cmp(w)).is_ok()
    }

    pub fn is_extendable(&self, w: &[Letter]) -> bool {
        w.len() <= self.horizon
            && self.words[w.len()]
                .binary_search_by(|(u, _)| u[..].cmp(w))
                .is_ok_and(|i| self.words[w.len()][i].1)
    }

    /// Every factor of `w` matches a bi-extendable word abelianly.
    pub fn abelian_legal(&self, w: &[Letter]) -> Result<bool> {
        if w.len() > self.horizon {
            return Err(Error::WindowTooSmall {
                n: w.len(),
                window: self.horizon,
            });
        }
        Ok(self.first_abelian_illegal(w).is_none())
    }

    /// Shortest, then leftmost, factor of `w` with no abelian match.
    pub fn first_abelian_illegal(&self, w: &[Letter]) -> Option<(usize, usize)> {
        let k = self.alphabet.size();
        (1..=w.len().min(self.horizon)).find_map(|n| {
            (0..=w.len() - n)
                .find(|&i| !self.parikhs[n].contains(&parikh(&w[i..i + n], k)))
                .map(|i| (i, n))
        })
    }
}

/// All legal words up to length `L`; a word is bi-extendable when it has
/// a bi-extendable left and right one-letter extension, words of length
/// `L` counting as extendable.
pub fn bounded_language(f: &ForbiddenSet, horizon: usize) -> Result<BoundedLanguage> {
    if horizon == 0 {
        return invalid("horizon must be at least 1");
    }
    let k = f.alphabet.size();
    let mut layers: Vec<Vec<FiniteWord>> = vec![vec![FiniteWord::default()]];
    for n in 1..=horizon {
        let mut next = Vec::new();
        for w in &layers[n - 1] {
            for a in 0..k as Letter {
                let mut v = w.0.clone();
                v.push(a);
                // only factors ending at the new letter are new
                let new_ok = (0..v.len()).all(|i| legal_suffix(&v[i..], f));
                if new_ok {
                    next.push(FiniteWord(v));
                }
            }
        }
        next.sort();
        layers.push(next);
    }
    let mut ext: Vec<HashSet<FiniteWord>> = vec![HashSet::new(); horizon + 1];
    ext[horizon] = layers[horizon].iter().cloned().collect();
    for n in (0..horizon).rev() {
        let up = &ext[n + 1];
        let here: HashSet<FiniteWord> = layers[n]
            .iter()
            .filter(|w| {
                let right = (0..k as Letter).any(|a| up.contains(&w.concat(&[a])));
                let left = (0..k as Letter).any(|a| {
                    let mut v = vec![a];
                    v.extend_from_slice(w);
                    up.contains(&FiniteWord(v))
                });
                left && right
            })
            .cloned()
            .collect();
        ext[n] = here;
    }
    let parikhs = (0..=horizon)
        .map(|n| ext[n].iter().map(|w| parikh(w, k)).collect())
        .collect();
    let words = layers
        .into_iter()
        .enumerate()
        .map(|(n, ws)| ws.into_iter().map(|w| {
            let e = ext[n].contains(&w);
            (w, e)
        }).collect())
        .collect();
    Ok(BoundedLanguage {
        alphabet: f.alphabet.clone(),
        horizon,
        words,
        parikhs,
    })
}

/// Is `w` itself outside `ℱ`? Used for suffixes during extension.
fn legal_suffix(w: &[Letter], f: &ForbiddenSet) -> bool {
    match &f.forbidden {
        Forbidden::Finite(words) => !words.iter().any(|u| &u[..] == w),
        Forbidden::Regular(d) => !d.accepts(w),
    }
}

/// `w` of length up to `|w| <= L` abelian-legal at horizon `L`.
pub fn abelian_legal(w: &[Letter], f: &ForbiddenSet, horizon: usize) -> Result<bool> {
    bounded_language(f, horizon)?.abelian_legal(w)
}

/// Minimal forbidden words of the subshift up to length `L`: not
/// bi-extendable, while both maximal proper factors are. Extendability is
/// read at horizon `2L`.
pub fn minimal_forbidden(f: &ForbiddenSet, max_len: usize) -> Result<Vec<FiniteWord>> {
    let lang = bounded_language(f, (2 * max_len).max(1))?;
    minimal_forbidden_in(&lang, max_len, |w| lang.is_extendable(w))
}

/// Minimal forbidden words of the abelian closure up to length `L`.
pub fn abelian_minimal_forbidden(f: &ForbiddenSet, max_len: usize, horizon: usize) -> Result<Vec<FiniteWord>> {
    let lang = bounded_language(f, horizon.max(max_len))?;
    minimal_forbidden_in(&lang, max_len, |w| lang.first_abelian_illegal(w).is_none())
}

fn minimal_forbidden_in(
    lang: &BoundedLanguage,
    max_len: usize,
    ok: impl Fn(&[Letter]) -> bool,
) -> Result<Vec<FiniteWord>> {
    let k = lang.alphabet.size();
    let mut memo: HashMap<FiniteWord, bool> = HashMap::new();
    let mut okm = |w: &[Letter]| *memo.entry(FiniteWord::from(w)).or_insert_with(|| ok(w));
    // an empty subshift: the empty word alone is minimal forbidden
    if !okm(&[]) {
        return Ok(vec![FiniteWord::default()]);
    }
    let mut out = Vec::new();
    // candidates: one letter added to an admissible word on the right
    let mut layer: Vec<FiniteWord> = vec![FiniteWord::default()];
    for _ in 1..=max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..k as Letter {
                let v = w.concat(&[a]);
                if okm(&v) {
                    next.push(v);
                } else if okm(&v[1..]) {
                    out.push(v);
                }
            }
        }
        layer = next;
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(a: &Alphabet, s: &str) -> FiniteWord {
        a.parse_word(s).unwrap()
    }

    #[test]
    fn normalization() {
        let a = Alphabet::digits(2);
        let f = ForbiddenSet::from_strs(a, &["011", "11", "11", "0110"]).unwrap();
        assert_eq!(f.forbidden, Forbidden::Finite(vec![FiniteWord(vec![1, 1])]));
    }

    #[test]
    fn legality_examples() {
        let g = golden_mean();
        assert!(legal(&w(&g.alphabet, "010010"), &g));
        assert!(!legal(&w(&g.alphabet, "0110"), &g));
        let t = three_letter();
        assert!(legal(&w(&t.alphabet, "abccca"), &t));
        assert!(!legal(&w(&t.alphabet, "bcb"), &t));
        let empty = ForbiddenSet::finite(Alphabet::digits(2), vec![]).unwrap();
        assert!(legal(&[0, 1, 1, 1], &empty));
        assert!(minimal_forbidden(&empty, 5).unwrap().is_empty());
    }

    #[test]
    fn golden_mean_counts_are_fibonacci() {
        let l = bounded_language(&golden_mean(), 6).unwrap();
        let counts: Vec<usize> = (1..=6).map(|n| l.words[n].len()).collect();
        assert_eq!(counts, vec![2, 3, 5, 8, 13, 21]);
        assert_eq!(minimal_forbidden(&golden_mean(), 6).unwrap(), vec![FiniteWord(vec![1, 1])]);
    }

    #[test]
    fn four_letter_abelian_examples() {
        let f = four_letter_nonsofic();
        let a = f.alphabet.clone();
        assert!(abelian_legal(&w(&a, "cabd"), &f, 8).unwrap());
        assert!(!abelian_legal(&w(&a, "cad"), &f, 8).unwrap());
        assert!(abelian_legal(&w(&a, "cbad"), &f, 8).unwrap());
        assert!(abelian_legal(&w(&a, "cabd"), &f, 3).is_err());
    }

    #[test]
    fn three_letter_two_bs_need_an_a() {
        let f = three_letter();
        assert!(!abelian_legal(&w(&f.alphabet, "bcccb"), &f, 7).unwrap());
    }

    #[test]
    fn binary_order6_forbids_short_alternations() {
        let m = minimal_forbidden(&binary_order6(), 6).unwrap();
        let a = binary_order6().alphabet;
        for s in ["010", "101"] {
            assert!(m.contains(&w(&a, s)), "{s}");
        }
        assert!(m.iter().all(|u| u.len() <= 6));
    }

    fn fixtures() -> Vec<ForbiddenSet> {
        vec![golden_mean(), three_letter(), four_letter_nonsofic(), binary_order6()]
    }

    #[test]
    fn factor_closed_and_minimal() {
        for f in fixtures() {
            let l = bounded_language(&f, 10).unwrap();
            for n in 1..=10 {
                for v in l.legal_words(n) {
                    assert!(l.is_legal(&v[1..]) && l.is_legal(&v[..n - 1]));
                }
            }
            for m in minimal_forbidden(&f, 5).unwrap() {
                let big = bounded_language(&f, 10).unwrap();
                assert!(!big.is_extendable(&m));
                assert!(big.is_extendable(&m[1..]) && big.is_extendable(&m[..m.len() - 1]));
            }
        }
    }

    #[test]
    fn empty_subshift_forbids_the_empty_word() {
        let f = ForbiddenSet::from_strs(Alphabet::digits(2), &["00", "01", "11"]).unwrap();
        assert_eq!(minimal_forbidden(&f, 4).unwrap(), vec![FiniteWord::default()]);
    }

    #[test]
    fn golden_mean_is_its_own_closure() {
        let f = golden_mean();
        let l = bounded_language(&f, 10).unwrap();
        for n in 1..=10usize {
            for code in 0..1u32 << n {
                let v: Vec<Letter> = (0..n).map(|i| ((code >> i) & 1) as Letter).collect();
                assert_eq!(l.abelian_legal(&v).unwrap(), legal(&v, &f), "{v:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn list_and_automaton_agree(
            which in 0usize..3,
            v in proptest::collection::vec(0u8..4, 0..14),
        ) {
            let f = [golden_mean(), three_letter(), binary_order6()][which].clone();
            let k = f.alphabet.size() as u8;
            let v: Vec<Letter> = v.into_iter().map(|l| l % k).collect();
            let g = ForbiddenSet::regular(f.alphabet.clone(), f.to_dfa()).unwrap();
            prop_assert_eq!(legal(&v, &f), legal(&v, &g));
        }
    }
}
