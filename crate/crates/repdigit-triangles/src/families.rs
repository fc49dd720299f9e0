//! Constructive two-digit (`k = 2`) families and the per-digit corollary
//! constructors.
//!
//! Everything here is an instance of one identity:
//! `(r^2 - q^2)^2 + (2rq)^2 = (r^2 + q^2)^2`. Choosing which of the three
//! members plays the repdigit `d*(b + 1)`, the digit power `d^2`, and the
//! remaining side gives five parametric families - two of type 2
//! (`F1`, `F2`) and three of type 1 (`S1`, `S2`, `U`).

use crate::bigmath::Natural;
use crate::error::Error;
use crate::repdigit::RepdigitSpec;
use crate::triples::{check_type1, check_type2, TriangleType, TriangleWitness};
use std::fmt;

/// The five constructive families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    F1,
    F2,
    S1,
    S2,
    U,
}

impl FamilyId {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::F1 => "F1",
            FamilyId::F2 => "F2",
            FamilyId::S1 => "S1",
            FamilyId::S2 => "S2",
            FamilyId::U => "U",
        }
    }

    /// Triangle type every member of the family certifies.
    pub fn triangle_type(&self) -> TriangleType {
        match self {
            FamilyId::F1 | FamilyId::F2 => TriangleType::Type2,
            FamilyId::S1 | FamilyId::S2 | FamilyId::U => TriangleType::Type1,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters for one family instance.
///
/// * `F1 { l, q }` with `l^2 <= 2q^2 - 2`: `r = q + l`, `b = 2rq - 1`,
///   `d = r^2 - q^2` - type 2.
/// * `F2 { l, q }` with `l^2 >= 2q^2 + 2`: `r = q + l`, `b = r^2 - q^2 - 1`,
///   `d = 2rq` - type 2.
/// * `S1 { r, q }` with `r > q >= 1`: `b = r^2 + q^2 - 1`, `d = r^2 - q^2` -
///   type 1.
/// * `S2 { r, q }` with `r >= q + 2`: `b = r^2 + q^2 - 1`, `d = 2rq` -
///   type 1.
/// * `U { t }` with `t >= 2`: `b = t^2`, `d = b - 1` - type 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    F1 { l: u64, q: u64 },
    F2 { l: u64, q: u64 },
    S1 { r: u64, q: u64 },
    S2 { r: u64, q: u64 },
    U { t: u64 },
}

impl FamilyParams {
    pub fn family(&self) -> FamilyId {
        match self {
            FamilyParams::F1 { .. } => FamilyId::F1,
            FamilyParams::F2 { .. } => FamilyId::F2,
            FamilyParams::S1 { .. } => FamilyId::S1,
            FamilyParams::S2 { .. } => FamilyId::S2,
            FamilyParams::U { .. } => FamilyId::U,
        }
    }

    /// Human-readable parameter listing, e.g. `l=1,q=2`.
    pub fn describe(&self) -> String {
        match self {
            FamilyParams::F1 { l, q } | FamilyParams::F2 { l, q } => format!("l={l},q={q}"),
            FamilyParams::S1 { r, q } | FamilyParams::S2 { r, q } => format!("r={r},q={q}"),
            FamilyParams::U { t } => format!("t={t}"),
        }
    }

    /// Checks positivity and the family's defining inequality.
    pub fn validate(&self) -> Result<(), Error> {
        let fail = |condition| {
            Err(Error::FamilyConstraint {
                family: self.family(),
                condition,
                given: self.describe(),
            })
        };
        match *self {
            FamilyParams::F1 { l, q } => {
                if l < 1 || q < 1 {
                    return fail("l >= 1 and q >= 1");
                }
                // u128 keeps the comparison exact for any u64 parameters
                if (l as u128) * (l as u128) + 2 > 2 * (q as u128) * (q as u128) {
                    return fail("l^2 <= 2*q^2 - 2");
                }
            }
            FamilyParams::F2 { l, q } => {
                if l < 1 || q < 1 {
                    return fail("l >= 1 and q >= 1");
                }
                if (l as u128) * (l as u128) < 2 * (q as u128) * (q as u128) + 2 {
                    return fail("l^2 >= 2*q^2 + 2");
                }
            }
            FamilyParams::S1 { r, q } => {
                if q < 1 || r <= q {
                    return fail("r > q >= 1");
                }
            }
            FamilyParams::S2 { r, q } => {
                if q < 1 || r < q + 2 {
                    return fail("r >= q + 2");
                }
            }
            FamilyParams::U { t } => {
                if t < 2 {
                    return fail("t >= 2");
                }
            }
        }
        Ok(())
    }

    /// `(base, digit)` from the family's defining formulas. Assumes the
    /// parameters validate.
    fn base_and_digit(&self) -> Result<(u64, u64), Error> {
        let (b, d): (u128, u128) = match *self {
            FamilyParams::F1 { l, q } => {
                let (l, q) = (l as u128, q as u128);
                let r = q + l;
                (2 * r * q - 1, r * r - q * q)
            }
            FamilyParams::F2 { l, q } => {
                let (l, q) = (l as u128, q as u128);
                let r = q + l;
                (r * r - q * q - 1, 2 * r * q)
            }
            FamilyParams::S1 { r, q } => {
                let (r, q) = (r as u128, q as u128);
                (r * r + q * q - 1, r * r - q * q)
            }
            FamilyParams::S2 { r, q } => {
                let (r, q) = (r as u128, q as u128);
                (r * r + q * q - 1, 2 * r * q)
            }
            FamilyParams::U { t } => {
                let t = t as u128;
                (t * t, t * t - 1)
            }
        };
        Ok((
            u64::try_from(b).map_err(|_| Error::ParameterOverflow)?,
            u64::try_from(d).map_err(|_| Error::ParameterOverflow)?,
        ))
    }
}

/// The identity behind every family, evaluated exactly:
/// `(r^2 - q^2)^2 + (2rq)^2 = (r^2 + q^2)^2`.
pub fn basic_principle_check(r: u64, q: u64) -> bool {
    let r = Natural::from(r);
    let q = Natural::from(q);
    let r2 = &r * &r;
    let q2 = &q * &q;
    let diff = if r2 >= q2 { &r2 - &q2 } else { &q2 - &r2 };
    let cross = (&r * &q) << 1;
    let sum = r2 + q2;
    &diff * &diff + &cross * &cross == &sum * &sum
}

/// Instantiates a family member: the two-digit spec plus its witness from
/// the matching classification check. The witness is obtained by running
/// the check, never assumed.
pub fn generate_family(params: &FamilyParams) -> Result<(RepdigitSpec, TriangleWitness), Error> {
    params.validate()?;
    let (base, digit) = params.base_and_digit()?;
    let spec = RepdigitSpec::new(2, base, digit)
        .expect("family formulas keep 2 <= d <= b - 1 and b >= 3");
    let witness = match params.family().triangle_type() {
        TriangleType::Type1 => check_type1(&spec),
        TriangleType::Type2 => check_type2(&spec),
    }
    .expect("family identity guarantees a witness");
    Ok((spec, witness))
}

/// For a digit `d`, the base produced by the matching corollary
/// construction together with the family instance that proves it.
///
/// Type 1: odd `d >= 3` via `S1`, even `d >= 6` via `S2`. Type 2: odd
/// `d >= 5` via `F1`, even `d >= 6` via `F2`. The excluded digits admit no
/// two-digit triangle of that type in any base, so they are errors rather
/// than gaps.
pub fn corollary_base(digit: u64, triangle: TriangleType) -> Result<(u64, FamilyParams), Error> {
    if digit < 2 {
        return Err(Error::DigitTooSmall { digit });
    }
    let unsupported = || Error::UnsupportedCorollaryDigit { digit, triangle };
    let d = digit as u128;
    let params = match (triangle, digit % 2) {
        (TriangleType::Type1, 1) => FamilyParams::S1 {
            // d = u^2 - v^2 with u = v + 1
            r: digit.div_ceil(2),
            q: (digit - 1) / 2,
        },
        (TriangleType::Type1, _) => {
            if digit < 6 {
                return Err(unsupported()); // digits 2 and 4 have no base
            }
            FamilyParams::S2 { r: digit / 2, q: 1 }
        }
        (TriangleType::Type2, 1) => {
            if digit < 5 {
                return Err(unsupported()); // digit 3 has no base
            }
            FamilyParams::F1 {
                l: 1,
                q: (digit - 1) / 2,
            }
        }
        (TriangleType::Type2, _) => {
            if digit < 6 {
                return Err(unsupported()); // digits 2 and 4 have no base
            }
            FamilyParams::F2 {
                l: digit / 2 - 1,
                q: 1,
            }
        }
    };
    let expected_base: u128 = match (triangle, digit % 2) {
        (TriangleType::Type1, 1) => (d * d - 1) / 2,
        (TriangleType::Type1, _) => d * d / 4,
        (TriangleType::Type2, 1) => (d * d - 3) / 2,
        (TriangleType::Type2, _) => (d * d - 8) / 4,
    };
    params.validate()?;
    let (base, got_digit) = params.base_and_digit()?;
    debug_assert_eq!(base as u128, expected_base);
    debug_assert_eq!(got_digit, digit);
    Ok((base, params))
}

/// All valid parameter tuples of one family with every parameter at most
/// `bound`, in lexicographic parameter order, each paired with its
/// generated spec and witness.
pub fn enumerate_family(
    id: FamilyId,
    bound: u64,
) -> Box<dyn Iterator<Item = (FamilyParams, RepdigitSpec, TriangleWitness)>> {
    let build = move |params: FamilyParams| {
        params.validate().ok()?;
        let (spec, witness) =
            generate_family(&params).expect("validated family parameters generate");
        Some((params, spec, witness))
    };
    match id {
        FamilyId::F1 => Box::new(grid(bound).filter_map(move |(l, q)| build(FamilyParams::F1 { l, q }))),
        FamilyId::F2 => Box::new(grid(bound).filter_map(move |(l, q)| build(FamilyParams::F2 { l, q }))),
        FamilyId::S1 => Box::new(grid(bound).filter_map(move |(r, q)| build(FamilyParams::S1 { r, q }))),
        FamilyId::S2 => Box::new(grid(bound).filter_map(move |(r, q)| build(FamilyParams::S2 { r, q }))),
        FamilyId::U => Box::new((1..=bound).filter_map(move |t| build(FamilyParams::U { t }))),
    }
}

fn grid(bound: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=bound).flat_map(move |x| (1..=bound).map(move |y| (x, y)))
}
