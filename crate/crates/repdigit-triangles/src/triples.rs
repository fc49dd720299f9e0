//! The `(delta, m, n)` parametrization of Pythagorean triples, its inverse,
//! and the two repdigit-triangle classification checks.
//!
//! Every Pythagorean triple is `(delta*(m^2 - n^2), delta*2mn, delta*(m^2 + n^2))`
//! for a unique `delta >= 1` and coprime `m > n >= 1` of opposite parity.

use crate::bigmath::{self, Natural};
use crate::error::Error;
use crate::repdigit::RepdigitSpec;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Which of the two repdigit-triangle shapes a witness certifies.
///
/// Type 1: one leg `d^k`, hypotenuse `d_{k,b}`.
/// Type 2: the two legs are `d^k` and `d_{k,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriangleType {
    Type1,
    Type2,
}

impl TriangleType {
    /// Short flag form used by reports and the CLI (`t1` / `t2`).
    pub fn code(&self) -> &'static str {
        match self {
            TriangleType::Type1 => "t1",
            TriangleType::Type2 => "t2",
        }
    }
}

impl fmt::Display for TriangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleType::Type1 => write!(f, "type-1"),
            TriangleType::Type2 => write!(f, "type-2"),
        }
    }
}

/// Validated generator parameters: `m > n >= 1`, `gcd(m, n) = 1`, `m + n` odd,
/// `delta >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleParams {
    delta: Natural,
    m: Natural,
    n: Natural,
}

impl TripleParams {
    pub fn new(delta: Natural, m: Natural, n: Natural) -> Result<Self, Error> {
        let violated = |constraint| Error::TripleConstraint {
            constraint,
            delta: delta.to_string(),
            m: m.to_string(),
            n: n.to_string(),
        };
        if delta.is_zero() {
            return Err(violated("delta >= 1"));
        }
        if n.is_zero() || m <= n {
            return Err(violated("m > n >= 1"));
        }
        if !bigmath::gcd(&m, &n).is_one() {
            return Err(violated("gcd(m, n) = 1"));
        }
        if m.is_odd() == n.is_odd() {
            return Err(violated("m + n odd"));
        }
        Ok(Self { delta, m, n })
    }

    pub fn delta(&self) -> &Natural {
        &self.delta
    }

    pub fn m(&self) -> &Natural {
        &self.m
    }

    pub fn n(&self) -> &Natural {
        &self.n
    }

    /// `(delta*(m^2 - n^2), delta*2mn, delta*(m^2 + n^2))`; the last
    /// component is the hypotenuse.
    pub fn compose(&self) -> (Natural, Natural, Natural) {
        let m2 = &self.m * &self.m;
        let n2 = &self.n * &self.n;
        let odd_leg = &self.delta * (&m2 - &n2);
        let even_leg = (&self.delta * &self.m * &self.n) << 1;
        let hypotenuse = &self.delta * (m2 + n2);
        (odd_leg, even_leg, hypotenuse)
    }
}

/// Recovers the unique `(delta, m, n)` generating the triple `(a, b, c)`
/// with hypotenuse `c`. Leg order does not matter; the parity roles are
/// fixed internally.
///
/// `delta` is the three-way gcd; `m` and `n` come out of the primitive part
/// via `m^2 = (c' + odd leg')/2`, `n^2 = (c' - odd leg')/2`. The recovered
/// parameters are re-verified against the inputs rather than trusted.
pub fn decompose_triple(a: &Natural, b: &Natural, c: &Natural) -> Result<TripleParams, Error> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::DegenerateSide);
    }
    if a * a + b * b != c * c {
        return Err(Error::NotPythagorean {
            a: a.to_string(),
            b: b.to_string(),
            c: c.to_string(),
        });
    }
    let delta = bigmath::gcd(a, &bigmath::gcd(b, c));
    let first = a / &delta;
    let second = b / &delta;
    let hyp = c / &delta;
    // the primitive part has exactly one odd leg
    let (odd_leg, even_leg) = if first.is_odd() {
        (first, second)
    } else {
        (second, first)
    };
    let m = bigmath::isqrt(&((&hyp + &odd_leg) >> 1));
    let n = bigmath::isqrt(&((&hyp - &odd_leg) >> 1));
    let params = TripleParams::new(delta, m, n)?;
    let (ra, rb, rc) = params.compose();
    // asserted, not assumed: the identities must reproduce the inputs
    assert!(
        ra == &odd_leg * &params.delta && rb == &even_leg * &params.delta && &rc == c,
        "parametrization recovery failed for a verified triple"
    );
    Ok(params)
}

/// A verified repdigit triangle: three exact sides, the spec that produced
/// it, and the recovered generator parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleWitness {
    /// The digit-power side `d^k`; always listed first.
    pub leg_a: Natural,
    pub leg_b: Natural,
    pub hypotenuse: Natural,
    pub type_tag: TriangleType,
    pub spec: RepdigitSpec,
    pub params: Option<TripleParams>,
}

impl TriangleWitness {
    /// Common factor of the three sides. Repdigit triangles are never
    /// primitive: both named sides carry the factor `d`.
    pub fn side_gcd(&self) -> Natural {
        bigmath::gcd(&self.leg_a, &bigmath::gcd(&self.leg_b, &self.hypotenuse))
    }
}

/// Tests whether `(k, b, d)` yields a triangle with leg `d^k` and
/// hypotenuse `d_{k,b}`; absence is a normal outcome.
pub fn check_type1(spec: &RepdigitSpec) -> Option<TriangleWitness> {
    let hyp = spec.value();
    let leg = spec.digit_power();
    // d_{k,b} > d^k always, so the difference is positive (no isosceles
    // degenerate exists)
    assert!(hyp > leg, "repdigit value must exceed digit power");
    let diff = &hyp * &hyp - &leg * &leg;
    let companion = bigmath::sqrt_exact(&diff)?;
    let params = decompose_triple(&leg, &companion, &hyp)
        .expect("sides verified square-exact form a triple");
    Some(TriangleWitness {
        leg_a: leg,
        leg_b: companion,
        hypotenuse: hyp,
        type_tag: TriangleType::Type1,
        spec: *spec,
        params: Some(params),
    })
}

/// Tests whether `(k, b, d)` yields a triangle whose legs are `d^k` and
/// `d_{k,b}`; absence is a normal outcome.
pub fn check_type2(spec: &RepdigitSpec) -> Option<TriangleWitness> {
    let big_leg = spec.value();
    let small_leg = spec.digit_power();
    let sum = &big_leg * &big_leg + &small_leg * &small_leg;
    let hyp = bigmath::sqrt_exact(&sum)?;
    let params = decompose_triple(&small_leg, &big_leg, &hyp)
        .expect("sides verified square-exact form a triple");
    Some(TriangleWitness {
        leg_a: small_leg,
        leg_b: big_leg,
        hypotenuse: hyp,
        type_tag: TriangleType::Type2,
        spec: *spec,
        params: Some(params),
    })
}
