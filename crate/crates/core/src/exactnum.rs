//! Exact arithmetic in Q(√D) and on the torus [0,1).
//!
//! Every decision (comparison, floor, interval membership) is made with
//! integer sign tests; `to_f64` exists only for human-readable output.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `q0 + q1·√d`, kept normalized: `d` is square-free, and `d == 0` exactly
/// when `q1 == 0`. With that normal form structural equality is numeric
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    q0: BigRational,
    q1: BigRational,
    d: u64,
}

fn square_free_part(d: u64) -> (u64, u64) {
    // d = s² · r with r square-free
    let mut s = 1u64;
    let mut r = d;
    let mut p = 2u64;
    while p * p <= r {
        while r.is_multiple_of(p * p) {
            r /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, r)
}

impl QuadExt {
    pub fn new(q0: BigRational, q1: BigRational, d: u64) -> Self {
        if d == 0 || q1.is_zero() {
            return Self::rational(q0);
        }
        let (s, r) = square_free_part(d);
        let q1 = q1 * BigRational::from_integer(BigInt::from(s));
        if r == 1 {
            return Self::rational(q0 + q1);
        }
        QuadExt { q0, q1, d: r }
    }

    pub fn rational(q: BigRational) -> Self {
        QuadExt {
            q0: q,
            q1: BigRational::zero(),
            d: 0,
        }
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::rational(BigRational::new(p.into(), q.into()))
    }

    pub fn from_int(p: i64) -> Self {
        Self::from_ratio(p, 1)
    }

    /// `(p0/q0) + (p1/q1)·√d`
    pub fn quad(p0: i64, q0: i64, p1: i64, q1: i64, d: u64) -> Self {
        Self::new(
            BigRational::new(p0.into(), q0.into()),
            BigRational::new(p1.into(), q1.into()),
            d,
        )
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn q0(&self) -> &BigRational {
        &self.q0
    }

    pub fn q1(&self) -> &BigRational {
        &self.q1
    }

    /// Radicand, 0 for rationals.
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0 && self.q0.is_zero()
    }

    pub fn field_with(&self, other: &QuadExt) -> Result<u64> {
        match (self.d, other.d) {
            (0, e) | (e, 0) => Ok(e),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::IncompatibleField(a, b)),
        }
    }

    pub fn signum(&self) -> Ordering {
        let s0 = rat_sign(&self.q0);
        let s1 = rat_sign(&self.q1);
        if s1 == Ordering::Equal || s0 == s1 {
            return s0;
        }
        if s0 == Ordering::Equal {
            return s1;
        }
        // opposite signs: the larger magnitude wins; equality is impossible
        // because d is square-free and > 1
        let lhs = &self.q0 * &self.q0;
        let rhs = &self.q1 * &self.q1 * BigRational::from_integer(self.d.into());
        if lhs > rhs {
            s0
        } else {
            s1
        }
    }

    pub fn try_add(&self, o: &QuadExt) -> Result<QuadExt> {
        let d = self.field_with(o)?;
        Ok(QuadExt::new(&self.q0 + &o.q0, &self.q1 + &o.q1, d))
    }

    pub fn try_sub(&self, o: &QuadExt) -> Result<QuadExt> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &QuadExt) -> Result<QuadExt> {
        let d = self.field_with(o)?;
        let dd = BigRational::from_integer(d.into());
        let q0 = &self.q0 * &o.q0 + &self.q1 * &o.q1 * dd;
        let q1 = &self.q0 * &o.q1 + &self.q1 * &o.q0;
        Ok(QuadExt::new(q0, q1, d))
    }

    pub fn scale(&self, k: i64) -> QuadExt {
        let k = BigRational::from_integer(k.into());
        QuadExt::new(&self.q0 * &k, &self.q1 * &k, self.d)
    }

    /// Exact floor, bracketed by an integer square root and then corrected
    /// with exact comparisons.
    pub fn floor(&self) -> BigInt {
        if self.d == 0 {
            return self.q0.floor().to_integer();
        }
        // |q1|·√d = √(n/m) with n/m = q1²·d; √(n/m) = √(n·m)/m
        let r = &self.q1 * &self.q1 * BigRational::from_integer(self.d.into());
        let (n, m) = (r.numer().clone(), r.denom().clone());
        let s = (&n * &m).sqrt();
        let mut approx = BigRational::new(s, m);
        if self.q1.is_negative() {
            approx = -approx;
        }
        let mut k = (&self.q0 + approx).floor().to_integer();
        loop {
            let diff = self.clone() - QuadExt::rational(BigRational::from_integer(k.clone()));
            if diff.signum() == Ordering::Less {
                k -= 1;
                continue;
            }
            let next = diff - QuadExt::one();
            if next.signum() != Ordering::Less {
                k += 1;
                continue;
            }
            return k;
        }
    }

    /// Lossy, for display only.
    pub fn to_f64(&self) -> f64 {
        let q0 = self.q0.to_f64().unwrap_or(f64::NAN);
        let q1 = self.q1.to_f64().unwrap_or(f64::NAN);
        q0 + q1 * (self.d as f64).sqrt()
    }
}

fn rat_sign(q: &BigRational) -> Ordering {
    if q.is_zero() {
        Ordering::Equal
    } else if q.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 0 {
            write!(f, "{}", fmt_rat(&self.q0))
        } else {
            write!(
                f,
                "quad({},{},{})",
                fmt_rat(&self.q0),
                fmt_rat(&self.q1),
                self.d
            )
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for QuadExt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses `p`, `p/q`, or a decimal-free `quad(p0/q0,p1/q1,D)` literal.
impl FromStr for QuadExt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(inner) = t.strip_prefix("quad(").and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 3 {
                return Err(Error::Format(format!("quad literal needs 3 parts: {s}")));
            }
            let d: u64 = parts[2]
                .parse()
                .map_err(|_| Error::Format(format!("bad radicand in {s}")))?;
            return Ok(QuadExt::new(
                parse_rational(parts[0])?,
                parse_rational(parts[1])?,
                d,
            ));
        }
        Ok(QuadExt::rational(parse_rational(&t)?))
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Format(format!("malformed number literal `{s}`"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            q0: -&self.q0,
            q1: -&self.q1,
            d: self.d,
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

// The operator forms panic on mixed fields; use the try_ forms when the
// fields are not known to agree.
macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $m(self, o: &QuadExt) -> QuadExt {
                self.$try(o).expect("mixed quadratic fields")
            }
        }
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: QuadExt) -> QuadExt {
                (&self).$m(&o)
            }
        }
        impl $tr<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: &QuadExt) -> QuadExt {
                (&self).$m(o)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

pub fn qe_compare(a: &QuadExt, b: &QuadExt) -> Result<Ordering> {
    Ok(a.try_sub(b)?.signum())
}

/// Point of the torus; the wrapped value always satisfies 0 ≤ v < 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct TorusPoint(QuadExt);

impl TorusPoint {
    pub fn new(v: QuadExt) -> Self {
        reduce_mod1(&v)
    }

    pub fn zero() -> Self {
        TorusPoint(QuadExt::zero())
    }

    pub fn value(&self) -> &QuadExt {
        &self.0
    }

    pub fn into_value(self) -> QuadExt {
        self.0
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({})", self.0)
    }
}

pub fn reduce_mod1(a: &QuadExt) -> TorusPoint {
    let k = a.floor();
    TorusPoint(a - &QuadExt::rational(BigRational::from_integer(k)))
}

pub fn rotate(p: &TorusPoint, alpha: &QuadExt) -> Result<TorusPoint> {
    Ok(reduce_mod1(&p.0.try_add(alpha)?))
}

/// ‖x‖ = min(x, 1−x)
pub fn circle_distance(x: &TorusPoint) -> QuadExt {
    let other = QuadExt::one() - &x.0;
    if x.0.try_sub(&other).unwrap().signum() == Ordering::Greater {
        other
    } else {
        x.0.clone()
    }
}

/// Counter-clockwise arc from `start` to `end` with explicit endpoint flags.
/// `start == end` denotes the whole circle; the shared endpoint then belongs
/// to the arc when either flag is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircleInterval {
    pub start: TorusPoint,
    pub end: TorusPoint,
    pub include_start: bool,
    pub include_end: bool,
}

impl CircleInterval {
    pub fn new(start: TorusPoint, end: TorusPoint, include_start: bool, include_end: bool) -> Self {
        CircleInterval {
            start,
            end,
            include_start,
            include_end,
        }
    }

    /// Underlined `I(x,y)`: closed at x, open at y.
    pub fn underline(x: &QuadExt, y: &QuadExt) -> Self {
        Self::new(reduce_mod1(x), reduce_mod1(y), true, false)
    }

    /// Barred `I(x,y)`: open at x, closed at y.
    pub fn bar(x: &QuadExt, y: &QuadExt) -> Self {
        Self::new(reduce_mod1(x), reduce_mod1(y), false, true)
    }

    pub fn contains(&self, p: &TorusPoint) -> Result<bool> {
        interval_contains(self, p)
    }
}

pub fn interval_contains(iv: &CircleInterval, p: &TorusPoint) -> Result<bool> {
    let s = qe_compare(p.value(), iv.start.value())?;
    let e = qe_compare(p.value(), iv.end.value())?;
    let full = iv.start == iv.end;
    if s == Ordering::Equal {
        return Ok(iv.include_start || (full && iv.include_end));
    }
    if e == Ordering::Equal {
        return Ok(iv.include_end);
    }
    if full {
        return Ok(true);
    }
    let wraps = qe_compare(iv.start.value(), iv.end.value())? == Ordering::Greater;
    Ok(if wraps {
        s == Ordering::Greater || e == Ordering::Less
    } else {
        s == Ordering::Greater && e == Ordering::Less
    })
}

/// Smallest n ≥ 0 with R_α^n(ρ) = target, if any.
pub fn orbit_hits(alpha: &QuadExt, rho: &TorusPoint, target: &TorusPoint) -> Result<Option<u64>> {
    alpha.field_with(rho.value())?;
    alpha.field_with(target.value())?;
    rho.value().field_with(target.value())?;
    if alpha.is_rational() {
        if rho.value().q1() != target.value().q1() {
            return Ok(None);
        }
        let period = reduce_mod1(alpha).value().q0().denom().to_u64().unwrap_or(u64::MAX);
        let mut p = rho.clone();
        for n in 0..period {
            if &p == target {
                return Ok(Some(n));
            }
            p = rotate(&p, alpha)?;
        }
        return Ok(None);
    }
    // ρ + nα − k = target forces the √d parts to agree
    let n = (target.value().q1() - rho.value().q1()) / alpha.q1();
    if !n.is_integer() || n.is_negative() {
        return Ok(None);
    }
    let rest = rho.value().q0() + alpha.q0() * &n - target.value().q0();
    if !rest.is_integer() {
        return Ok(None);
    }
    Ok(n.to_integer().to_u64())
}

/// Where a torus point sits relative to a sorted list of distinct cuts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Loc {
    At(usize),
    /// Open arc from cut i counter-clockwise to cut (i+1) mod k.
    Arc(usize),
}

pub fn common_field(xs: &[&QuadExt]) -> Result<u64> {
    let mut d = 0;
    for x in xs {
        match (d, x.d()) {
            (_, 0) => {}
            (0, e) => d = e,
            (a, e) if a == e => {}
            (a, e) => return Err(Error::IncompatibleField(a, e)),
        }
    }
    Ok(d)
}

/// Integer image `(a + b√d)/den` shared by a whole orbit, so that rotation
/// and location cost a few i128 operations per step.
#[derive(Clone, Debug)]
pub struct FastOrbit {
    den: i128,
    d: i128,
    alpha: (i128, i128),
    cur: (i128, i128),
    cuts: Vec<(i128, i128)>,
}

fn lcm_den(xs: &[&QuadExt]) -> BigInt {
    xs.iter().fold(BigInt::one(), |acc, x| {
        acc.lcm(x.q0().denom()).lcm(x.q1().denom())
    })
}

fn scaled(x: &QuadExt, den: &BigInt) -> Option<(i128, i128)> {
    let a = (x.q0() * BigRational::from_integer(den.clone())).to_integer();
    let b = (x.q1() * BigRational::from_integer(den.clone())).to_integer();
    let lim = BigInt::from(1u128 << 62);
    if a.abs() >= lim || b.abs() >= lim {
        return None;
    }
    Some((a.to_i128()?, b.to_i128()?))
}

/// sign of a + b√d for integers, exact; falls back to big integers when
/// the squares do not fit.
fn sign_ab(a: i128, b: i128, d: i128) -> Ordering {
    let sa = a.cmp(&0);
    let sb = b.cmp(&0);
    if sb == Ordering::Equal || sa == sb {
        return sa;
    }
    if sa == Ordering::Equal {
        return sb;
    }
    let lhs = a.checked_mul(a);
    let rhs = b.checked_mul(b).and_then(|x| x.checked_mul(d));
    let bigger = match (lhs, rhs) {
        (Some(l), Some(r)) => l > r,
        _ => {
            let (a, b, d) = (BigInt::from(a), BigInt::from(b), BigInt::from(d));
            &a * &a > &b * &b * d
        }
    };
    if bigger {
        sa
    } else {
        sb
    }
}

impl FastOrbit {
    /// `cuts` must be distinct and sorted increasingly.
    pub fn new(alpha: &QuadExt, rho: &TorusPoint, cuts: &[TorusPoint]) -> Result<Self> {
        let mut vals: Vec<&QuadExt> = vec![alpha, rho.value()];
        vals.extend(cuts.iter().map(|c| c.value()));
        let d = common_field(&vals)?;
        let a = reduce_mod1(alpha);
        let mut all: Vec<&QuadExt> = vec![a.value(), rho.value()];
        all.extend(cuts.iter().map(|c| c.value()));
        let den = lcm_den(&all);
        let overflow = || Error::InvalidSpec("orbit coordinates too large for fast iteration".into());
        let sc = |x: &QuadExt| scaled(x, &den).ok_or_else(overflow);
        Ok(FastOrbit {
            den: den.to_i128().ok_or_else(overflow)?,
            d: d as i128,
            alpha: sc(a.value())?,
            cur: sc(rho.value())?,
            cuts: cuts.iter().map(|c| sc(c.value())).collect::<Result<_>>()?,
        })
    }

    fn cmp_with(&self, c: (i128, i128)) -> Ordering {
        sign_ab(self.cur.0 - c.0, self.cur.1 - c.1, self.d)
    }

    pub fn locate(&self) -> Loc {
        // few cuts: a linear scan is fastest
        let k = self.cuts.len();
        for i in 0..k {
            match self.cmp_with(self.cuts[i]) {
                Ordering::Equal => return Loc::At(i),
                Ordering::Less => return Loc::Arc((i + k - 1) % k),
                Ordering::Greater => {}
            }
        }
        Loc::Arc(k - 1)
    }

    pub fn step(&mut self) {
        self.cur.0 += self.alpha.0;
        self.cur.1 = self.cur.1.checked_add(self.alpha.1).expect("orbit overflow");
        if sign_ab(self.cur.0 - self.den, self.cur.1, self.d) != Ordering::Less {
            self.cur.0 -= self.den;
        }
    }
}

/// Partition of the circle into labelled arcs, precompiled against its cut
/// points so orbit codings only need [`FastOrbit::locate`].
#[derive(Clone, Debug)]
pub struct Partition {
    cuts: Vec<TorusPoint>,
    at_label: Vec<u8>,
    arc_label: Vec<u8>,
}

impl Partition {
    /// Fails unless every point of the circle lies in exactly one interval.
    pub fn new(parts: &[(CircleInterval, u8)]) -> Result<Self> {
        Self::with_points(parts, &[])
    }

    /// Like [`Partition::new`], with extra single-point regions.
    pub fn with_points(parts: &[(CircleInterval, u8)], points: &[(TorusPoint, u8)]) -> Result<Self> {
        let mut cuts: Vec<TorusPoint> = Vec::new();
        let ends = parts.iter().flat_map(|(iv, _)| [&iv.start, &iv.end]);
        for p in ends.chain(points.iter().map(|(p, _)| p)) {
            if !cuts.contains(p) {
                cuts.push(p.clone());
            }
        }
        let mut err = None;
        cuts.sort_by(|a, b| {
            qe_compare(a.value(), b.value()).unwrap_or_else(|e| {
                err = Some(e);
                Ordering::Equal
            })
        });
        if let Some(e) = err {
            return Err(e);
        }
        let label_of = |p: &TorusPoint| -> Result<u8> {
            let mut hit = points.iter().find(|(q, _)| q == p).map(|(_, l)| *l);
            for (iv, l) in parts {
                if interval_contains(iv, p)? {
                    if hit.is_some() {
                        return Err(Error::InvalidSpec(format!("intervals overlap at {p}")));
                    }
                    hit = Some(*l);
                }
            }
            hit.ok_or_else(|| Error::InvalidSpec(format!("intervals leave {p} uncovered")))
        };
        let k = cuts.len();
        let mut at_label = Vec::with_capacity(k);
        let mut arc_label = Vec::with_capacity(k);
        for i in 0..k {
            at_label.push(label_of(&cuts[i])?);
            let (a, b) = (cuts[i].value(), cuts[(i + 1) % k].value());
            let b = if i + 1 == k { b + &QuadExt::one() } else { b.clone() };
            let mid = reduce_mod1(&(a + &b).try_mul(&QuadExt::from_ratio(1, 2))?);
            arc_label.push(label_of(&mid)?);
        }
        Ok(Partition {
            cuts,
            at_label,
            arc_label,
        })
    }

    pub fn cuts(&self) -> &[TorusPoint] {
        &self.cuts
    }

    pub fn label(&self, loc: Loc) -> u8 {
        match loc {
            Loc::At(i) => self.at_label[i],
            Loc::Arc(i) => self.arc_label[i],
        }
    }

    /// Slow path, exact.
    pub fn label_of_point(&self, p: &TorusPoint) -> Result<u8> {
        for (i, c) in self.cuts.iter().enumerate() {
            if c == p {
                return Ok(self.at_label[i]);
            }
        }
        let k = self.cuts.len();
        for i in 0..k {
            let next = (i + 1) % k;
            let iv = CircleInterval::new(self.cuts[i].clone(), self.cuts[next].clone(), false, false);
            if k == 1 || interval_contains(&iv, p)? {
                return Ok(self.arc_label[i]);
            }
        }
        unreachable!("cuts cover the circle")
    }

    /// Codes `n` steps of the orbit of `rho` under rotation by `alpha`.
    pub fn code_orbit(&self, alpha: &QuadExt, rho: &TorusPoint, n: usize) -> Result<Vec<u8>> {
        let mut orbit = FastOrbit::new(alpha, rho, &self.cuts)?;
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            out.push(self.label(orbit.locate()));
            orbit.step();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sqrt2m1() -> QuadExt {
        QuadExt::quad(-1, 1, 1, 1, 2)
    }

    #[test]
    fn compare_examples() {
        let h = QuadExt::from_ratio(1, 2);
        assert_eq!(qe_compare(&h, &h).unwrap(), Ordering::Equal);
        let a = QuadExt::quad(-2, 1, 1, 1, 5);
        assert_eq!(qe_compare(&a, &QuadExt::zero()).unwrap(), Ordering::Greater);
        let b = QuadExt::quad(2, 1, -1, 1, 2);
        assert_eq!(qe_compare(&b, &QuadExt::from_ratio(3, 5)).unwrap(), Ordering::Less);
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = QuadExt::quad(0, 1, 1, 1, 2);
        let b = QuadExt::quad(0, 1, 1, 1, 5);
        assert_eq!(qe_compare(&a, &b), Err(Error::IncompatibleField(2, 5)));
        // rationals live in every field
        assert!(qe_compare(&a, &QuadExt::from_ratio(1, 3)).is_ok());
    }

    #[test]
    fn normalizes_radicand() {
        // √8 = 2√2, √9 = 3
        assert_eq!(QuadExt::quad(0, 1, 1, 1, 8), QuadExt::quad(0, 1, 2, 1, 2));
        assert_eq!(QuadExt::quad(1, 1, 1, 1, 9), QuadExt::from_int(4));
        assert_eq!(QuadExt::quad(1, 2, 0, 1, 7), QuadExt::from_ratio(1, 2));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_mod1(&QuadExt::from_ratio(7, 3)).value(), &QuadExt::from_ratio(1, 3));
        assert_eq!(reduce_mod1(&-sqrt2m1()).value(), &QuadExt::quad(2, 1, -1, 1, 2));
        assert_eq!(reduce_mod1(&QuadExt::zero()), TorusPoint::zero());
        assert_eq!(reduce_mod1(&QuadExt::from_ratio(-1, 3)).value(), &QuadExt::from_ratio(2, 3));
    }

    #[test]
    fn rotate_examples() {
        let z = TorusPoint::zero();
        assert_eq!(rotate(&z, &QuadExt::zero()).unwrap(), z);
        let p = TorusPoint::new(QuadExt::from_ratio(3, 4));
        assert_eq!(
            rotate(&p, &QuadExt::from_ratio(1, 2)).unwrap().value(),
            &QuadExt::from_ratio(1, 4)
        );
        let a = sqrt2m1();
        let two = rotate(&rotate(&z, &a).unwrap(), &a).unwrap();
        assert_eq!(two.value(), &QuadExt::quad(-2, 1, 2, 1, 2));
    }

    #[test]
    fn distance_examples() {
        let d = |x: QuadExt| circle_distance(&TorusPoint::new(x));
        assert_eq!(d(QuadExt::from_ratio(1, 4)), QuadExt::from_ratio(1, 4));
        assert_eq!(d(QuadExt::from_ratio(2, 3)), QuadExt::from_ratio(1, 3));
        assert_eq!(d(QuadExt::quad(2, 1, -1, 1, 2)), sqrt2m1());
    }

    #[test]
    fn interval_examples() {
        let q = QuadExt::from_ratio;
        let iv = CircleInterval::underline(&q(0, 1), &q(1, 2));
        assert!(iv.contains(&TorusPoint::zero()).unwrap());
        assert!(!iv.contains(&TorusPoint::new(q(1, 2))).unwrap());
        let wrap = CircleInterval::bar(&q(3, 4), &q(1, 4));
        assert!(wrap.contains(&TorusPoint::zero()).unwrap());
        assert!(!wrap.contains(&TorusPoint::new(q(1, 2))).unwrap());
        let a = sqrt2m1();
        let j1 = CircleInterval::underline(&(QuadExt::one() - &a), &QuadExt::one());
        assert!(j1.contains(&TorusPoint::new(a.scale(2))).unwrap());
        assert!(!j1.contains(&TorusPoint::zero()).unwrap());
        let j1bar = CircleInterval::bar(&(QuadExt::one() - &a), &QuadExt::one());
        assert!(j1bar.contains(&TorusPoint::zero()).unwrap());
    }

    #[test]
    fn floor_near_integers() {
        // 3 - √8 ≈ 0.1716, 17 - 12√2 ≈ 0.0294
        assert_eq!(QuadExt::quad(3, 1, -2, 1, 2).floor(), BigInt::from(0));
        assert_eq!(QuadExt::quad(17, 1, -12, 1, 2).floor(), BigInt::from(0));
        assert_eq!(QuadExt::quad(-17, 1, 12, 1, 2).floor(), BigInt::from(-1));
        assert_eq!(QuadExt::quad(0, 1, 1, 3, 2).floor(), BigInt::from(0));
        assert_eq!(QuadExt::quad(0, 1, 10, 1, 5).floor(), BigInt::from(22));
    }

    #[test]
    fn parse_literals() {
        let x: QuadExt = "quad(3/2,-1/2,5)".parse().unwrap();
        assert_eq!(x, QuadExt::quad(3, 2, -1, 2, 5));
        assert_eq!("-7/21".parse::<QuadExt>().unwrap(), QuadExt::from_ratio(-1, 3));
        assert!("1/0".parse::<QuadExt>().is_err());
        assert!("quad(1,2)".parse::<QuadExt>().is_err());
        assert_eq!(x.to_string(), "quad(3/2,-1/2,5)");
    }

    #[test]
    fn irrational_orbit_has_no_collision() {
        let a = sqrt2m1();
        let mut seen = std::collections::HashSet::new();
        let mut p = TorusPoint::zero();
        for _ in 0..=10_000 {
            assert!(seen.insert(p.clone()));
            p = rotate(&p, &a).unwrap();
        }
    }

    #[test]
    fn orbit_hit_detection() {
        let a = sqrt2m1();
        let rho = TorusPoint::new(a.scale(-7));
        assert_eq!(orbit_hits(&a, &rho, &TorusPoint::zero()).unwrap(), Some(7));
        assert_eq!(orbit_hits(&a, &TorusPoint::zero(), &rho).unwrap(), None);
        let h = QuadExt::from_ratio(2, 5);
        let r = TorusPoint::new(QuadExt::from_ratio(1, 5));
        assert_eq!(orbit_hits(&h, &r, &TorusPoint::zero()).unwrap(), Some(2));
    }

    #[test]
    fn fast_orbit_matches_slow() {
        let a = sqrt2m1();
        let parts = [
            (CircleInterval::underline(&QuadExt::zero(), &(QuadExt::one() - &a)), 0u8),
            (CircleInterval::underline(&(QuadExt::one() - &a), &QuadExt::one()), 1u8),
        ];
        let part = Partition::new(&parts).unwrap();
        let rho = TorusPoint::new(QuadExt::from_ratio(1, 3));
        let fast = part.code_orbit(&a, &rho, 500).unwrap();
        let mut p = rho;
        for (i, &l) in fast.iter().enumerate() {
            assert_eq!(part.label_of_point(&p).unwrap(), l, "step {i}");
            p = rotate(&p, &a).unwrap();
        }
    }

    #[test]
    fn overlapping_partition_rejected() {
        let q = QuadExt::from_ratio;
        let parts = [
            (CircleInterval::underline(&q(0, 1), &q(1, 2)), 0u8),
            (CircleInterval::new(TorusPoint::new(q(1, 2)), TorusPoint::zero(), true, true), 1u8),
        ];
        assert!(Partition::new(&parts).is_err());
    }

    fn small_quad() -> impl Strategy<Value = QuadExt> {
        (-50i64..50, 1i64..20, -20i64..20, 1i64..20)
            .prop_map(|(a, b, c, e)| QuadExt::quad(a, b, c, e, 2))
    }

    proptest! {
        #[test]
        fn trichotomy_and_transitivity(a in small_quad(), b in small_quad(), c in small_quad()) {
            let ab = qe_compare(&a, &b).unwrap();
            prop_assert_eq!(ab.reverse(), qe_compare(&b, &a).unwrap());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            let bc = qe_compare(&b, &c).unwrap();
            if ab != Ordering::Greater && bc != Ordering::Greater {
                prop_assert_ne!(qe_compare(&a, &c).unwrap(), Ordering::Greater);
            }
            // agrees with floats away from ties
            let fa = a.to_f64() - b.to_f64();
            if fa.abs() > 1e-9 {
                prop_assert_eq!(ab, fa.partial_cmp(&0.0).unwrap());
            }
        }

        #[test]
        fn floor_brackets(a in small_quad()) {
            let r = reduce_mod1(&a);
            prop_assert_ne!(r.value().signum(), Ordering::Less);
            prop_assert_eq!((r.value() - &QuadExt::one()).signum(), Ordering::Less);
        }

        #[test]
        fn rotation_inverts(p in small_quad(), a in small_quad()) {
            let p = TorusPoint::new(p);
            let back = reduce_mod1(&-&a);
            let there = rotate(&p, &a).unwrap();
            prop_assert_eq!(rotate(&there, back.value()).unwrap(), p);
        }

        #[test]
        fn distance_bounds(p in small_quad()) {
            let d = circle_distance(&TorusPoint::new(p));
            prop_assert_ne!(d.signum(), Ordering::Less);
            prop_assert_ne!(qe_compare(&d, &QuadExt::from_ratio(1, 2)).unwrap(), Ordering::Greater);
        }

        #[test]
        fn ternary_partition_is_exact(p in small_quad(), z in 0i64..32) {
            // J0, J1, J2 cover every point exactly once
            let a = sqrt2m1();
            let zeta = QuadExt::from_ratio(21, 50) + QuadExt::from_ratio(z, 200);
            let one = QuadExt::one();
            let j1 = CircleInterval::underline(&(&one - &a), &one);
            let j2 = CircleInterval::underline(&(&zeta - &a), &zeta);
            let j0a = CircleInterval::underline(&QuadExt::zero(), &(&zeta - &a));
            let j0b = CircleInterval::underline(&zeta, &(&one - &a));
            let p = TorusPoint::new(p);
            let hits = [j1, j2, j0a, j0b].iter().filter(|iv| iv.contains(&p).unwrap()).count();
            prop_assert_eq!(hits, 1);
        }
    }
}
