use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::words::{Alphabet, FiniteWord};

use super::{Dfa, ForbiddenSet};

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        col,
        msg: msg.into(),
    })
}

/// Reads a forbidden set. Blank lines and `#` comments are skipped. A
/// list is one word per line, optionally after `alphabet <names...>`; an
/// automaton uses `alphabet`, `states n`, `start s`, `accept s...` and
/// one `trans s a t` line per state and letter.
///
/// ```text
/// alphabet 0 1
/// 11
/// ```
pub fn parse_forbidden(text: &str) -> Result<ForbiddenSet> {
    let mut alphabet: Option<(Alphabet, usize)> = None;
    let mut words: Vec<(usize, String)> = Vec::new();
    let mut states: Option<usize> = None;
    let mut start: Option<usize> = None;
    let mut accept: BTreeSet<usize> = BTreeSet::new();
    let mut trans: Vec<(usize, usize, String, usize)> = Vec::new();
    let mut automaton_line: Option<usize> = None;

    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        let mut toks: Vec<(usize, &str)> = Vec::new();
        let mut rest = line;
        let mut off = 0;
        while let Some(p) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[p..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            toks.push((off + p + 1, &tail[..len]));
            off += p + len;
            rest = &tail[len..];
        }
        let Some(&(col, head)) = toks.first() else { continue };
        let num = |k: usize| -> Result<usize> {
            let Some(&(c, t)) = toks.get(k) else {
                return err(ln, line.len() + 1, format!("`{head}` expects a state number"));
            };
            t.parse().or_else(|_| err(ln, c, format!("expected a state number, found `{t}`")))
        };
        match head {
            "alphabet" => {
                if alphabet.is_some() {
                    return err(ln, col, "second `alphabet` line");
                }
                let a = Alphabet::new(toks[1..].iter().map(|t| t.1)).or_else(|e| err(ln, col, e.to_string()))?;
                alphabet = Some((a, ln));
            }
            "states" | "start" | "accept" | "trans" => {
                automaton_line.get_or_insert(ln);
                match head {
                    "states" => states = Some(num(1)?),
                    "start" => start = Some(num(1)?),
                    "accept" => {
                        for k in 1..toks.len() {
                            accept.insert(num(k)?);
                        }
                    }
                    _ => {
                        let s = num(1)?;
                        let Some(&(_, a)) = toks.get(2) else {
                            return err(ln, line.len() + 1, "`trans` expects `s a t`");
                        };
                        let t = num(3)?;
                        if toks.len() > 4 {
                            return err(ln, toks[4].0, "trailing input after `trans s a t`");
                        }
                        trans.push((ln, s, a.to_string(), t));
                    }
                }
            }
            _ => {
                if toks.len() > 1 {
                    return err(ln, toks[1].0, "one forbidden word per line");
                }
                words.push((ln, head.to_string()));
            }
        }
    }

    if let Some(al) = automaton_line {
        if let Some((ln, _)) = words.first() {
            return err(*ln, 1, "word lines cannot be mixed with an automaton");
        }
        let Some((alphabet, _)) = alphabet else {
            return err(al, 1, "an automaton needs an `alphabet` line");
        };
        let Some(n) = states else {
            return err(al, 1, "missing `states` line");
        };
        let Some(s0) = start else {
            return err(al, 1, "missing `start` line");
        };
        let k = alphabet.size();
        let mut table = vec![vec![usize::MAX; k]; n];
        for (ln, s, a, t) in trans {
            let Some(l) = alphabet.index_of(&a) else {
                return err(ln, 1, format!("unknown letter `{a}`"));
            };
            if s >= n || t >= n {
                return err(ln, 1, format!("state out of range 0..{n}"));
            }
            if table[s][l as usize] != usize::MAX {
                return err(ln, 1, format!("second transition for state {s} on `{a}`"));
            }
            table[s][l as usize] = t;
        }
        for (s, row) in table.iter().enumerate() {
            if let Some(l) = row.iter().position(|&t| t == usize::MAX) {
                return err(al, 1, format!("automaton is incomplete: no transition for state {s} on `{}`", alphabet.names()[l]));
            }
        }
        let dfa = Dfa::new(k, s0, accept, table).or_else(|e| err(al, 1, e.to_string()))?;
        return ForbiddenSet::regular(alphabet, dfa);
    }

    let alphabet = match alphabet {
        Some((a, _)) => a,
        None => {
            let all: String = words.iter().map(|w| w.1.as_str()).collect();
            if all.is_empty() {
                return err(1, 1, "empty forbidden set needs an `alphabet` line");
            }
            Alphabet::infer(&all)?
        }
    };
    let ws = words
        .into_iter()
        .map(|(ln, w)| alphabet.parse_word(&w).or_else(|e| err(ln, 1, e.to_string())))
        .collect::<Result<Vec<FiniteWord>>>()?;
    ForbiddenSet::finite(alphabet, ws)
}
