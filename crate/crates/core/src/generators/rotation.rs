use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exactnum::{qe_compare, reduce_mod1, CircleInterval, Partition, QuadExt, TorusPoint};
use crate::words::{Alphabet, FiniteWord, InfiniteWord};

/// Which endpoint of the coding intervals is closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `[x, y)`
    Under,
    /// `(x, y]`
    Bar,
}

impl Convention {
    pub fn interval(self, x: &QuadExt, y: &QuadExt) -> CircleInterval {
        match self {
            Convention::Under => CircleInterval::underline(x, y),
            Convention::Bar => CircleInterval::bar(x, y),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Under => "under",
            Convention::Bar => "bar",
        }
    }
}

fn lt(a: &QuadExt, b: &QuadExt) -> Result<bool> {
    Ok(qe_compare(a, b)? == Ordering::Less)
}

/// Sturmian (or periodic, for rational slope) coding of `R_α` with
/// `I_0 = I(0, 1-α)` and `I_1 = I(1-α, 1)`.
#[derive(Clone, Debug)]
pub struct BinaryRotation {
    pub alpha: QuadExt,
    pub rho: TorusPoint,
    pub conv: Convention,
    partition: Partition,
    alphabet: Alphabet,
}

impl BinaryRotation {
    pub fn new(alpha: QuadExt, rho: QuadExt, conv: Convention) -> Result<Self> {
        alpha.field_with(&rho)?;
        if !lt(&QuadExt::zero(), &alpha)? || !lt(&alpha, &QuadExt::one())? {
            return invalid(format!("slope must satisfy 0 < alpha < 1, got {alpha}"));
        }
        let one = QuadExt::one();
        let cut = &one - &alpha;
        let partition = Partition::new(&[
            (conv.interval(&QuadExt::zero(), &cut), 0),
            (conv.interval(&cut, &one), 1),
        ])?;
        Ok(BinaryRotation {
            alpha,
            rho: reduce_mod1(&rho),
            conv,
            partition,
            alphabet: Alphabet::digits(2),
        })
    }

    pub fn letter_at_point(&self, p: &TorusPoint) -> Result<u8> {
        self.partition.label_of_point(p)
    }
}

impl InfiniteWord for BinaryRotation {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn name(&self) -> String {
        format!(
            "sturmian(alpha={}, rho={}, conv={})",
            self.alpha,
            self.rho,
            self.conv.as_str()
        )
    }
    fn prefix(&self, n: usize) -> Result<FiniteWord> {
        Ok(self.partition.code_orbit(&self.alpha, &self.rho, n)?.into())
    }
}

/// Parameters of a ternary coding `t_{α,ζ,ρ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TernarySpec {
    pub alpha: QuadExt,
    pub zeta: TorusPoint,
    pub rho: TorusPoint,
    /// whether `1 ≡ 0` belongs to `J_1` (barred slope)
    pub one_in_j1: bool,
    /// whether `ζ` belongs to `J_2` (barred offset)
    pub zeta_in_j2: bool,
}

impl TernarySpec {
    pub fn new(alpha: QuadExt, zeta: QuadExt, rho: QuadExt, one_in_j1: bool, zeta_in_j2: bool) -> Self {
        TernarySpec {
            alpha,
            zeta: reduce_mod1(&zeta),
            rho: reduce_mod1(&rho),
            one_in_j1,
            zeta_in_j2,
        }
    }

    pub fn with_rho(&self, rho: QuadExt) -> Self {
        TernarySpec {
            rho: reduce_mod1(&rho),
            ..self.clone()
        }
    }

    pub fn with_zeta(&self, zeta: QuadExt) -> Self {
        TernarySpec {
            zeta: reduce_mod1(&zeta),
            ..self.clone()
        }
    }

    /// Checks the range and endpoint constraints and builds `J_0, J_1, J_2`.
    pub fn partition(&self) -> Result<Partition> {
        let a = &self.alpha;
        let z = self.zeta.value();
        a.field_with(z)?;
        a.field_with(self.rho.value())?;
        z.field_with(self.rho.value())?;
        let zero = QuadExt::zero();
        let one = QuadExt::one();
        let half = QuadExt::from_ratio(1, 2);
        if !lt(&zero, a)? || !lt(a, &half)? {
            return invalid(format!("ternary coding needs 0 < alpha < 1/2, got {a}"));
        }
        let hi = &one - a;
        if lt(z, a)? || lt(&hi, z)? {
            return invalid(format!("offset zeta = {z} lies outside [alpha, 1 - alpha]"));
        }
        let at_lo = z == a;
        let at_hi = z == &hi;
        if at_lo && self.one_in_j1 && !self.zeta_in_j2 {
            return invalid("t with barred alpha and underlined zeta = alpha is undefined: J1 and J2 overlap");
        }
        if at_hi && !self.one_in_j1 && self.zeta_in_j2 {
            return invalid("t with underlined alpha and barred zeta = 1 - alpha is undefined: J1 and J2 overlap");
        }
        let zl = z - a;
        let j1 = CircleInterval::new(reduce_mod1(&hi), TorusPoint::zero(), !self.one_in_j1, self.one_in_j1);
        let j2 = CircleInterval::new(
            reduce_mod1(&zl),
            self.zeta.clone(),
            !self.zeta_in_j2,
            self.zeta_in_j2,
        );
        let mut parts = vec![(j1, 1), (j2, 2)];
        let mut points = Vec::new();
        // J_0 = I_0 \ J_2: the arcs (0, ζ-α) and (ζ, 1-α); a collapsed arc
        // leaves at most its single endpoint
        let j0a = (!self.one_in_j1, self.zeta_in_j2);
        if at_lo {
            if j0a.0 && j0a.1 {
                points.push((TorusPoint::zero(), 0));
            }
        } else {
            parts.push((CircleInterval::new(TorusPoint::zero(), reduce_mod1(&zl), j0a.0, j0a.1), 0));
        }
        let j0b = (!self.zeta_in_j2, self.one_in_j1);
        if at_hi {
            if j0b.0 && j0b.1 {
                points.push((self.zeta.clone(), 0));
            }
        } else {
            parts.push((CircleInterval::new(self.zeta.clone(), reduce_mod1(&hi), j0b.0, j0b.1), 0));
        }
        Partition::with_points(&parts, &points)
    }
}

#[derive(Clone, Debug)]
pub struct TernaryRotation {
    spec: TernarySpec,
    partition: Partition,
    alphabet: Alphabet,
}

impl TernaryRotation {
    pub fn new(spec: TernarySpec) -> Result<Self> {
        let partition = spec.partition()?;
        Ok(TernaryRotation {
            spec,
            partition,
            alphabet: Alphabet::digits(3),
        })
    }

    pub fn spec(&self) -> &TernarySpec {
        &self.spec
    }

    pub fn letter_at_point(&self, p: &TorusPoint) -> Result<u8> {
        self.partition.label_of_point(p)
    }
}

impl InfiniteWord for TernaryRotation {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn name(&self) -> String {
        let s = &self.spec;
        format!(
            "ternary(alpha={}, zeta={}, rho={}, one_in_j1={}, zeta_in_j2={})",
            s.alpha, s.zeta, s.rho, s.one_in_j1, s.zeta_in_j2
        )
    }
    fn prefix(&self, n: usize) -> Result<FiniteWord> {
        Ok(self.partition.code_orbit(&self.spec.alpha, &self.spec.rho, n)?.into())
    }
}
