//! Word spec strings, e.g.
//! `interleave(fib; periodic(0102); periodic(ab))`.
//!
//! ```text
//! spec  := ATOM [ "(" [ arg { sep arg } ] ")" ]
//! arg   := spec [ "=" [ spec ] ]        (left side a bare ATOM)
//! sep   := "," | ";"
//! ```
//!
//! An ATOM is a maximal run of characters other than whitespace and
//! `( ) = , ;`, so `3/2`, `-1/2` and rules like `0->01` are single atoms.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::QuadExt;
use crate::generators::{
    arc, fibonacci, fm_min_complexity_word, reversal_word, thue_morse, tribonacci, ArnouxRauzy, BinaryRotation,
    Champernowne, Convention, Interleave, MorphicFixedPoint, MorphicImage, Morphism, Periodic, Prefixed, Shifted,
    TernaryRotation, TernarySpec,
};
use crate::words::{Alphabet, WordRef};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Atom(String),
    LParen,
    RParen,
    Eq,
    Comma,
    Semi,
    End,
}

impl Tok {
    fn show(&self) -> String {
        match self {
            Tok::Atom(a) => format!("`{a}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Vec<(Tok, usize, usize)> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let at = (line, col);
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '=' => Some(Tok::Eq),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            _ => None,
        };
        if c == '\n' {
            line += 1;
            col = 1;
            chars.next();
        } else if c.is_whitespace() {
            col += 1;
            chars.next();
        } else if let Some(t) = single {
            out.push((t, at.0, at.1));
            col += 1;
            chars.next();
        } else {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_whitespace() || "()=,;".contains(d) {
                    break;
                }
                s.push(d);
                col += 1;
                chars.next();
            }
            out.push((Tok::Atom(s), at.0, at.1));
        }
    }
    out.push((Tok::End, line, col));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arg {
    pub key: Option<String>,
    pub value: Spec,
    /// separated from the previous argument by `;` rather than `,`
    pub semi: bool,
}

/// Parsed constructor application; `args` is `None` for a bare name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spec {
    pub name: String,
    pub args: Option<Vec<Arg>>,
}

impl fmt::Display for Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if let Some(args) = &self.args {
            f.write_str("(")?;
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    f.write_str(if a.semi { "; " } else { ", " })?;
                }
                if let Some(k) = &a.key {
                    write!(f, "{k}=")?;
                }
                write!(f, "{}", a.value)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        let (t, line, col) = &self.toks[self.i];
        Err(Error::Parse {
            line: *line,
            col: *col,
            msg: format!("expected one of {}, found {}", expected.join(", "), t.show()),
        })
    }

    fn spec(&mut self) -> Result<Spec> {
        let Tok::Atom(name) = self.peek().clone() else {
            return self.fail(&["a name"]);
        };
        self.i += 1;
        if self.peek() != &Tok::LParen {
            return Ok(Spec { name, args: None });
        }
        self.i += 1;
        let mut args = Vec::new();
        if self.peek() == &Tok::RParen {
            self.i += 1;
            return Ok(Spec { name, args: Some(args) });
        }
        let mut semi = false;
        loop {
            args.push(self.arg(semi)?);
            match self.peek() {
                Tok::Comma => semi = false,
                Tok::Semi => semi = true,
                Tok::RParen => {
                    self.i += 1;
                    return Ok(Spec { name, args: Some(args) });
                }
                _ => return self.fail(&["`,`", "`;`", "`)`"]),
            }
            self.i += 1;
        }
    }

    fn arg(&mut self, semi: bool) -> Result<Arg> {
        let value = self.spec()?;
        if self.peek() != &Tok::Eq {
            return Ok(Arg { key: None, value, semi });
        }
        if value.args.is_some() {
            return self.fail(&["`,`", "`;`", "`)`"]);
        }
        self.i += 1;
        let rhs = match self.peek() {
            Tok::Comma | Tok::Semi | Tok::RParen => Spec {
                name: String::new(),
                args: None,
            },
            _ => self.spec()?,
        };
        Ok(Arg {
            key: Some(value.name),
            value: rhs,
            semi,
        })
    }
}

pub fn parse_spec(text: &str) -> Result<Spec> {
    let mut p = Parser { toks: lex(text), i: 0 };
    let s = p.spec()?;
    if p.peek() != &Tok::End {
        return p.fail(&["end of input"]);
    }
    Ok(s)
}

pub const CONSTRUCTORS: [&str; 16] = [
    "tm", "fib", "trib", "champ", "periodic", "preperiodic", "sturmian", "ternary", "interleave", "morphic",
    "image", "ar", "fm", "prefixed", "shift", "reverse",
];

fn bad(s: &Spec, msg: impl fmt::Display) -> Error {
    Error::InvalidSpec(format!("{}: {msg}", s.name))
}

/// Binds keyed and positional arguments to parameter names in order.
struct Bound<'a> {
    spec: &'a Spec,
    vals: Vec<Option<&'a Spec>>,
    params: &'a [&'a str],
}

impl<'a> Bound<'a> {
    fn new(spec: &'a Spec, args: &'a [Arg], params: &'a [&'a str], required: usize) -> Result<Self> {
        let mut vals: Vec<Option<&Spec>> = vec![None; params.len()];
        let mut next = 0;
        for a in args {
            let slot = match &a.key {
                Some(k) => params
                    .iter()
                    .position(|p| p == k)
                    .ok_or_else(|| bad(spec, format!("unknown parameter `{k}` (expected {})", params.join(", "))))?,
                None => {
                    while next < params.len() && vals[next].is_some() {
                        next += 1;
                    }
                    if next == params.len() {
                        return Err(bad(spec, format!("takes at most {} arguments", params.len())));
                    }
                    next
                }
            };
            if vals[slot].is_some() {
                return Err(bad(spec, format!("parameter `{}` given twice", params[slot])));
            }
            vals[slot] = Some(&a.value);
        }
        if let Some(miss) = (0..required).find(|&i| vals[i].is_none()) {
            return Err(bad(spec, format!("missing parameter `{}`", params[miss])));
        }
        Ok(Bound { spec, vals, params })
    }

    fn atom(&self, i: usize) -> Result<Option<&'a str>> {
        match self.vals[i] {
            None => Ok(None),
            Some(v) if v.args.is_none() => Ok(Some(&v.name)),
            Some(v) => Err(bad(self.spec, format!("`{}` must be a plain value, got `{v}`", self.params[i]))),
        }
    }

    fn number(&self, i: usize) -> Result<Option<QuadExt>> {
        self.vals[i]
            .map(|v| v.to_string().parse::<QuadExt>().map_err(|e| bad(self.spec, e)))
            .transpose()
    }

    fn usize(&self, i: usize) -> Result<Option<usize>> {
        self.atom(i)?
            .map(|a| {
                a.parse()
                    .map_err(|_| bad(self.spec, format!("`{}` must be a non-negative integer, got `{a}`", self.params[i])))
            })
            .transpose()
    }

    fn flag(&self, i: usize) -> Result<bool> {
        match self.atom(i)? {
            None | Some("false") => Ok(false),
            Some("true") => Ok(true),
            Some(o) => Err(bad(self.spec, format!("`{}` must be true or false, got `{o}`", self.params[i]))),
        }
    }

    fn word(&self, i: usize) -> Result<WordRef> {
        eval(self.vals[i].expect("required"))
    }
}

type Rules<'a> = Vec<(&'a str, &'a str)>;

fn split_rules<'a>(s: &Spec, args: &'a [Arg]) -> Result<(Rules<'a>, Vec<Arg>)> {
    let mut rules = Vec::new();
    let mut rest = Vec::new();
    for a in args {
        match (&a.key, &a.value.args) {
            (None, None) if a.value.name.contains("->") => {
                let (l, r) = a.value.name.split_once("->").expect("checked");
                rules.push((l, r));
            }
            _ => rest.push(a.clone()),
        }
    }
    if rules.is_empty() {
        return Err(bad(s, "needs rules like `0->01`"));
    }
    Ok((rules, rest))
}

/// Builds the word a spec denotes.
pub fn eval(s: &Spec) -> Result<WordRef> {
    let empty = Vec::new();
    let args = s.args.as_ref().unwrap_or(&empty);
    let bind = |params: &'static [&'static str], required: usize| Bound::new(s, args, params, required);
    match s.name.as_str() {
        "tm" | "fib" | "trib" => {
            bind(&[], 0)?;
            Ok(match s.name.as_str() {
                "tm" => arc(thue_morse()),
                "fib" => arc(fibonacci()),
                _ => arc(tribonacci()),
            })
        }
        "champ" => {
            let b = bind(&["k"], 0)?;
            Ok(arc(Champernowne::new(b.usize(0)?.unwrap_or(2))?))
        }
        "periodic" => {
            let b = bind(&["period"], 1)?;
            Ok(arc(Periodic::pure(b.atom(0)?.unwrap_or_default())?))
        }
        "preperiodic" => {
            let b = bind(&["pre", "period"], 2)?;
            Ok(arc(Periodic::parse(b.atom(0)?.unwrap_or_default(), b.atom(1)?.unwrap_or_default())?))
        }
        "sturmian" => {
            let b = bind(&["alpha", "rho", "conv"], 1)?;
            let conv = match b.atom(2)? {
                None | Some("under") => Convention::Under,
                Some("bar") => Convention::Bar,
                Some(o) => return Err(bad(s, format!("conv must be under or bar, got `{o}`"))),
            };
            let alpha = b.number(0)?.expect("required");
            Ok(arc(BinaryRotation::new(alpha, b.number(1)?.unwrap_or_else(QuadExt::zero), conv)?))
        }
        "ternary" => Ok(arc(TernaryRotation::new(ternary_of(s)?)?)),
        "interleave" => {
            let b = bind(&["backbone", "z0", "z1"], 3)?;
            Ok(arc(Interleave::new(b.word(0)?, b.word(1)?, b.word(2)?)?))
        }
        "morphic" => {
            let (rules, rest) = split_rules(s, args)?;
            let b = Bound::new(s, &rest, &["start"], 0)?;
            let m = Morphism::from_rules(&rules)?;
            let start = match b.atom(0)? {
                Some(a) => m
                    .source
                    .index_of(a)
                    .ok_or_else(|| bad(s, format!("start letter `{a}` has no rule")))?,
                None => m.source.index_of(rules[0].0).expect("ruled letter"),
            };
            Ok(arc(MorphicFixedPoint::new(m, start)?))
        }
        "image" => {
            let (rules, rest) = split_rules(s, args)?;
            let b = Bound::new(s, &rest, &["word"], 1)?;
            let inner = b.word(0)?;
            // letters a rule does not mention keep their inner names
            let mut text = String::new();
            for (l, r) in &rules {
                text.push_str(l);
                text.push_str(r);
            }
            let target = Alphabet::infer(&text)?;
            let source = inner.alphabet().clone();
            let images = source
                .names()
                .iter()
                .map(|n| {
                    let img = rules
                        .iter()
                        .find(|(l, _)| l == n)
                        .ok_or_else(|| bad(s, format!("no rule for letter `{n}`")))?
                        .1;
                    target.parse_word(img)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(arc(MorphicImage::new(Morphism::new(source, target, images)?, inner)?))
        }
        "ar" => {
            let b = bind(&["directive"], 1)?;
            Ok(arc(ArnouxRauzy::new(b.word(0)?)))
        }
        "fm" => {
            let b = bind(&["G", "E", "F", "s"], 4)?;
            let g = |i| b.atom(i).map(|a| a.unwrap_or_default().to_string());
            Ok(arc(fm_min_complexity_word(&g(0)?, &g(1)?, &g(2)?, b.word(3)?)?))
        }
        "prefixed" => {
            let b = bind(&["head", "word"], 2)?;
            Ok(arc(Prefixed::new(b.atom(0)?.unwrap_or_default(), b.word(1)?)?))
        }
        "shift" => {
            let b = bind(&["k", "word"], 2)?;
            Ok(arc(Shifted::new(b.word(1)?, b.usize(0)?.expect("required"))))
        }
        "reverse" => {
            let b = bind(&["word", "n"], 2)?;
            Ok(arc(reversal_word(&b.word(0)?, b.usize(1)?.expect("required"))?))
        }
        other => {
            Err(Error::InvalidSpec(format!(
                "unknown constructor `{other}` (expected one of {})",
                CONSTRUCTORS.join(", ")
            )))
        }
    }
}

pub fn parse_word_spec(text: &str) -> Result<WordRef> {
    eval(&parse_spec(text)?)
}

fn ternary_of(s: &Spec) -> Result<TernarySpec> {
    let empty = Vec::new();
    let b = Bound::new(s, s.args.as_ref().unwrap_or(&empty), &["alpha", "zeta", "rho", "one_in_j1", "zeta_in_j2"], 2)?;
    Ok(TernarySpec::new(
        b.number(0)?.expect("required"),
        b.number(1)?.expect("required"),
        b.number(2)?.unwrap_or_else(QuadExt::zero),
        b.flag(3)?,
        b.flag(4)?,
    ))
}

/// Parameters of a `ternary(...)` spec.
pub fn ternary_spec(text: &str) -> Result<TernarySpec> {
    let s = parse_spec(text)?;
    if s.name != "ternary" {
        return Err(bad(&s, "expected a ternary(...) spec"));
    }
    let spec = ternary_of(&s)?;
    spec.partition()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(text: &str, n: usize) -> String {
        let w = parse_word_spec(text).unwrap();
        w.alphabet().render(&w.prefix(n).unwrap())
    }

    #[test]
    fn documented_specs() {
        assert_eq!(parse_spec("tm").unwrap(), Spec { name: "tm".into(), args: None });
        let s = parse_spec("sturmian(alpha=quad(3/2,-1/2,5), rho=quad(3/2,-1/2,5), conv=under)").unwrap();
        let args = s.args.as_ref().unwrap();
        assert_eq!(args.len(), 3);
        assert_eq!(args[0].key.as_deref(), Some("alpha"));
        assert_eq!(args[0].value.to_string(), "quad(3/2, -1/2, 5)");
        let i = parse_spec("interleave(fib; periodic(0102); periodic(ab))").unwrap();
        assert_eq!(i.args.as_ref().unwrap().len(), 3);
        assert_eq!(render("interleave(fib; periodic(0102); periodic(ab))", 20), "0a10b2a01b02a0b10a2b");
        assert_eq!(render("tm", 12), "011010011001");
        assert_eq!(render("sturmian(alpha=quad(3/2,-1/2,5), rho=quad(3/2,-1/2,5), conv=under)", 10), "0100101001");
    }

    #[test]
    fn diagnostics_name_expected_tokens() {
        let e = parse_spec("periodic(01").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 1,
                col: 12,
                msg: "expected one of `,`, `;`, `)`, found end of input".into()
            }
        );
        let e = parse_spec("tm)").unwrap_err();
        assert!(e.to_string().starts_with("1:3: expected one of end of input"), "{e}");
        let e = parse_spec("fm(\n  G=2;\n  ;").unwrap_err();
        assert_eq!(e.to_string(), "3:3: expected one of a name, found `;`");
        assert!(parse_word_spec("foo").unwrap_err().to_string().contains("unknown constructor"));
        assert!(parse_word_spec("periodic(01, 10)").unwrap_err().to_string().contains("at most"));
        assert!(parse_word_spec("sturmian(alpha=1/0)").unwrap_err().to_string().contains("malformed"));
        assert!(parse_word_spec("ternary(alpha=1/3)").unwrap_err().to_string().contains("missing"));
        assert!(ternary_spec("fib").is_err());
        assert_eq!(ternary_spec("ternary(quad(-1,1,2), 1/2)").unwrap().zeta.value(), &QuadExt::from_ratio(1, 2));
    }

    #[test]
    fn names_reparse_to_the_same_word() {
        let texts = [
            "tm",
            "fib",
            "trib",
            "champ(3)",
            "periodic(0102)",
            "preperiodic(0011, 001101)",
            "sturmian(alpha=quad(3/2,-1/2,5), rho=1/3, conv=bar)",
            "ternary(alpha=quad(-1,1,2), zeta=9/20, rho=0, one_in_j1=true)",
            "interleave(fib; periodic(0102); periodic(ab))",
            "morphic(0->01, 1->10; start=0)",
            "image(0->02, 1->12; fib)",
            "ar(directive=periodic(012))",
            "fm(G=23; E=0; F=1; s=fib)",
            "prefixed(20; ar(periodic(012)))",
            "shift(3; tm)",
            "reverse(fib, 50)",
        ];
        for t in texts {
            let w = parse_word_spec(t).unwrap();
            let again = parse_word_spec(&w.name()).unwrap_or_else(|e| panic!("{t} -> {}: {e}", w.name()));
            assert_eq!(w.prefix(40).unwrap(), again.prefix(40).unwrap(), "{t}");
            assert_eq!(w.alphabet(), again.alphabet(), "{t}");
            let ast = parse_spec(t).unwrap();
            assert_eq!(parse_spec(&ast.to_string()).unwrap(), ast, "{t}");
        }
    }

    #[test]
    fn empty_group_in_fm() {
        let w = parse_word_spec("fm(G=2; E=; F=1; s=fib)").unwrap();
        assert_eq!(w.alphabet().render(&w.prefix(6).unwrap()), "221222");
    }
}
