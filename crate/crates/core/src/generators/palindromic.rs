use crate::error::{Error, Result};
use crate::words::{Alphabet, FiniteWord, InfiniteWord, Letter, WordRef};

/// Length of the longest palindromic suffix, via the border array of
/// `rev(u) # u`.
fn longest_palindromic_suffix(u: &[Letter]) -> usize {
    const SEP: u16 = 256;
    let s: Vec<u16> = u
        .iter()
        .rev()
        .map(|&l| l as u16)
        .chain(std::iter::once(SEP))
        .chain(u.iter().map(|&l| l as u16))
        .collect();
    let mut fail = vec![0usize; s.len() + 1];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = fail[k];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i + 1] = k;
    }
    fail[s.len()]
}

/// Shortest palindrome having `u` as a prefix.
pub fn palindromic_closure(u: &[Letter]) -> FiniteWord {
    let p = longest_palindromic_suffix(u);
    let mut out = u.to_vec();
    out.extend(u[..u.len() - p].iter().rev());
    out.into()
}

/// Default number of directive letters a prefix request may consume.
pub const DIRECTIVE_WINDOW: usize = 1 << 14;

/// Prefix of length `n` of `ψ(Δ)`. Every letter of the directive's
/// alphabet must show up within `directive_window` letters.
pub fn arnoux_rauzy_with(directive: &dyn InfiniteWord, n: usize, directive_window: usize) -> Result<FiniteWord> {
    let k = directive.alphabet().size();
    let mut seen = vec![false; k];
    let mut missing = k;
    let mut w: Vec<Letter> = Vec::new();
    let mut consumed = 0;
    let mut chunk = 64usize;
    let mut delta = FiniteWord::default();
    while w.len() < n || missing > 0 {
        if consumed == delta.len() {
            if consumed >= directive_window {
                return Err(Error::DirectiveExhausted {
                    consumed,
                    reached: w.len().min(n),
                    wanted: n,
                });
            }
            chunk = (chunk * 2).min(directive_window);
            delta = crate::words::window_prefix(directive, chunk)?;
            if consumed == delta.len() {
                return Err(Error::DirectiveExhausted {
                    consumed,
                    reached: w.len().min(n),
                    wanted: n,
                });
            }
        }
        let a = delta[consumed];
        consumed += 1;
        if !seen[a as usize] {
            seen[a as usize] = true;
            missing -= 1;
        }
        if w.len() < n {
            w.push(a);
            w = palindromic_closure(&w).into_inner();
        }
    }
    w.truncate(n);
    Ok(w.into())
}

pub fn arnoux_rauzy(directive: &dyn InfiniteWord, n: usize) -> Result<FiniteWord> {
    arnoux_rauzy_with(directive, n, DIRECTIVE_WINDOW)
}

/// The characteristic word `ψ(Δ)`.
#[derive(Clone, Debug)]
pub struct ArnouxRauzy {
    directive: WordRef,
    directive_window: usize,
}

impl ArnouxRauzy {
    pub fn new(directive: WordRef) -> Self {
        ArnouxRauzy {
            directive,
            directive_window: DIRECTIVE_WINDOW,
        }
    }

    pub fn with_window(mut self, w: usize) -> Self {
        self.directive_window = w;
        self
    }

    pub fn directive(&self) -> &WordRef {
        &self.directive
    }
}

impl InfiniteWord for ArnouxRauzy {
    fn alphabet(&self) -> &Alphabet {
        self.directive.alphabet()
    }
    fn name(&self) -> String {
        format!("ar(directive={})", self.directive.name())
    }
    fn prefix(&self, n: usize) -> Result<FiniteWord> {
        arnoux_rauzy_with(self.directive.as_ref(), n, self.directive_window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{arc, fibonacci, Periodic};
    use proptest::prelude::*;

    fn w(s: &str) -> Vec<Letter> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(palindromic_closure(&w("001")).0, w("00100"));
        assert_eq!(palindromic_closure(&w("0")).0, w("0"));
        assert_eq!(palindromic_closure(&w("01")).0, w("010"));
        assert_eq!(palindromic_closure(&[]).0, Vec::<Letter>::new());
    }

    #[test]
    fn fibonacci_from_alternating_directive() {
        let d = Periodic::pure("01").unwrap();
        let c = arnoux_rauzy(&d, 500).unwrap();
        assert_eq!(c, fibonacci().prefix(500).unwrap());
    }

    #[test]
    fn degenerate_directive_rejected() {
        let d = Periodic::new(Alphabet::digits(2), vec![], vec![0]).unwrap();
        match arnoux_rauzy(&d, 10) {
            Err(Error::DirectiveExhausted { .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn prefixes_nest() {
        let c = ArnouxRauzy::new(arc(Periodic::pure("012").unwrap()));
        let long = c.prefix(300).unwrap();
        for n in [1, 7, 50, 299] {
            assert_eq!(&c.prefix(n).unwrap()[..], &long[..n]);
        }
    }

    proptest! {
        #[test]
        fn closure_is_minimal_palindrome(u in proptest::collection::vec(0u8..3, 0..30)) {
            let c = palindromic_closure(&u);
            prop_assert!(c.is_palindrome());
            prop_assert_eq!(&c[..u.len()], &u[..]);
            // a palindrome of length len with prefix u is forced letter by
            // letter; none may exist below the closure's length
            for len in u.len()..c.len() {
                let consistent = (0..u.len()).all(|i| {
                    let j = len - 1 - i;
                    j >= u.len() || u[j] == u[i]
                });
                prop_assert!(!consistent, "palindrome of length {} exists", len);
            }
        }

        #[test]
        fn directive_prefixes_give_palindromes(d in proptest::collection::vec(0u8..3, 1..12)) {
            let mut w: Vec<Letter> = Vec::new();
            for &a in &d {
                w.push(a);
                w = palindromic_closure(&w).into_inner();
                prop_assert!(FiniteWord::from(w.clone()).is_palindrome());
            }
        }
    }
}
