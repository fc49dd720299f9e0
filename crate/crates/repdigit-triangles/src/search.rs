//! Bounded exhaustive verification of the five non-existence statements and
//! open-ended discovery over `(k, b, d)`, with congruence prefilters.
//!
//! The `(b, d)` plane is split into independent per-base chunks; each chunk
//! reports its own hits and counters, and the merge is a sum plus a sort, so
//! results are byte-identical for any worker count.

use crate::bigmath::{square_residue_mask, Natural};
use crate::error::Error;
use crate::repdigit::RepdigitSpec;
use crate::triples::{check_type1, check_type2, TriangleType, TriangleWitness};
use num_traits::One;
use rayon::prelude::*;
use std::fmt;
use std::time::{Duration, Instant};

/// What to scan: an inclusive base interval, an optional digit restriction
/// (default: every `2..=b-1`), the largest digit count, and the triangle
/// types of interest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRange {
    base_lo: u64,
    base_hi: u64,
    digits: Option<Vec<u64>>,
    k_max: u32,
    types: Vec<TriangleType>,
}

impl SearchRange {
    pub fn new(
        base_lo: u64,
        base_hi: u64,
        digits: Option<Vec<u64>>,
        k_max: u32,
        types: &[TriangleType],
    ) -> Result<Self, Error> {
        if base_lo < 3 {
            return Err(Error::SearchBaseTooSmall { lo: base_lo });
        }
        if base_hi < base_lo {
            return Err(Error::EmptyBaseRange {
                lo: base_lo,
                hi: base_hi,
            });
        }
        if k_max < 2 {
            return Err(Error::KMaxTooSmall { k_max });
        }
        if types.is_empty() {
            return Err(Error::NoTypesSelected);
        }
        let digits = match digits {
            Some(mut list) => {
                if let Some(&bad) = list.iter().find(|&&d| d < 2) {
                    return Err(Error::DigitTooSmall { digit: bad });
                }
                list.sort_unstable();
                list.dedup();
                Some(list)
            }
            None => None,
        };
        let mut types = types.to_vec();
        types.sort_unstable();
        types.dedup();
        Ok(Self {
            base_lo,
            base_hi,
            digits,
            k_max,
            types,
        })
    }

    pub fn bases(&self) -> (u64, u64) {
        (self.base_lo, self.base_hi)
    }

    pub fn digits(&self) -> Option<&[u64]> {
        self.digits.as_deref()
    }

    pub fn k_max(&self) -> u32 {
        self.k_max
    }

    pub fn types(&self) -> &[TriangleType] {
        &self.types
    }

    /// Digits actually scanned for one base, ascending.
    fn digits_for_base(&self, base: u64) -> Vec<u64> {
        match &self.digits {
            Some(list) => list.iter().copied().filter(|&d| d < base).collect(),
            None => (2..=base - 1).collect(),
        }
    }
}

/// Outcome of a bounded scan. `specs_tested` counts `(spec, type)` pairs
/// and always equals `prefilter_rejections` plus the number of full checks.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub range: SearchRange,
    pub prefiltered: bool,
    pub hits: Vec<TriangleWitness>,
    pub specs_tested: u64,
    pub prefilter_rejections: u64,
    pub elapsed: Duration,
}

/// Scans every `(k, b, d, type)` in the range. Hits come back sorted by
/// `(b, d, k, type)`; the result is the same with prefilters on or off and
/// for any worker count.
pub fn search(range: &SearchRange, use_prefilters: bool) -> SearchReport {
    let start = Instant::now();
    let scans: Vec<BaseScan> = (range.base_lo..=range.base_hi)
        .into_par_iter()
        .map(|base| scan_base(range, base, use_prefilters))
        .collect();
    let mut hits = Vec::new();
    let mut specs_tested = 0;
    let mut prefilter_rejections = 0;
    for scan in scans {
        hits.extend(scan.hits);
        specs_tested += scan.tested;
        prefilter_rejections += scan.rejected;
    }
    hits.sort_by_key(|w| (w.spec.base(), w.spec.digit(), w.spec.k(), w.type_tag));
    SearchReport {
        range: range.clone(),
        prefiltered: use_prefilters,
        hits,
        specs_tested,
        prefilter_rejections,
        elapsed: start.elapsed(),
    }
}

#[derive(Default)]
struct BaseScan {
    hits: Vec<TriangleWitness>,
    tested: u64,
    rejected: u64,
}

fn scan_base(range: &SearchRange, base: u64, use_prefilters: bool) -> BaseScan {
    let mut out = BaseScan::default();
    for digit in range.digits_for_base(base) {
        for k in 2..=range.k_max {
            let spec = RepdigitSpec::new(k, base, digit).expect("scan emits valid specs");
            for &ty in range.types() {
                out.tested += 1;
                if use_prefilters {
                    if let Prefilter::Rejected(_) = prefilter(&spec, ty) {
                        out.rejected += 1;
                        continue;
                    }
                }
                let witness = match ty {
                    TriangleType::Type1 => check_type1(&spec),
                    TriangleType::Type2 => check_type2(&spec),
                };
                if let Some(w) = witness {
                    debug_assert!(
                        w.side_gcd() > Natural::one(),
                        "repdigit triangles share the factor d"
                    );
                    out.hits.push(w);
                }
            }
        }
    }
    out
}

/// Prefilter outcome: either the candidate survives to a full
/// perfect-square test, or a congruence obstruction already proves no
/// witness can exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prefilter {
    MaybeHit,
    Rejected(RejectReason),
}

/// The congruence obstruction that discarded a candidate. Each rule is an
/// exact consequence of the `(delta, m, n)` form of Pythagorean triples;
/// none is heuristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    /// Both would-be legs are odd; a sum of two odd squares is 2 mod 4,
    /// never a square.
    BothLegsOdd,
    /// In any Pythagorean triple the even-role leg carries at least two
    /// more factors of 2 than the odd-role leg; these legs differ by less.
    LegValuationGap { leg: u64, companion: u64 },
    /// The hypotenuse has the 2-adic valuation of the common factor, so a
    /// leg matches it exactly or exceeds it by at least 2; this pair does
    /// neither.
    HypotenuseValuationGap { leg: u64, hypotenuse: u64 },
    /// A power-of-two side forces `delta = 2^v`, `m = 2^u`, `n = 1`, which
    /// pins the companion side to `2^v * (4^u -+ 1)`; the candidate's
    /// companion differs.
    PowerOfTwoDecomposition,
    /// The quantity that must be a perfect square falls in a non-square
    /// residue class.
    NonResidue { modulus: u32 },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::BothLegsOdd => write!(f, "both legs odd (sum of squares is 2 mod 4)"),
            RejectReason::LegValuationGap { leg, companion } => write!(
                f,
                "leg 2-adic valuations {leg} and {companion} differ by less than 2"
            ),
            RejectReason::HypotenuseValuationGap { leg, hypotenuse } => write!(
                f,
                "leg valuation {leg} incompatible with hypotenuse valuation {hypotenuse}"
            ),
            RejectReason::PowerOfTwoDecomposition => {
                write!(f, "power-of-two side admits no coprime (m, n) decomposition")
            }
            RejectReason::NonResidue { modulus } => {
                write!(f, "square candidate is a non-residue mod {modulus}")
            }
        }
    }
}

/// Small-modulus residues of the digit power and the repdigit value,
/// without big-integer arithmetic.
fn side_residues(spec: &RepdigitSpec, modulus: u64) -> (u64, u64) {
    let d = spec.digit() % modulus;
    let b = spec.base() % modulus;
    let mut leg = 1u64;
    let mut rep = 0u64;
    for _ in 0..spec.k() {
        leg = leg * d % modulus;
        rep = (rep * b + d) % modulus;
    }
    (leg, rep)
}

/// 2-adic valuation of the repdigit value, from its low 64 bits when they
/// are nonzero (they almost always are), else from the full value.
fn repdigit_two_adic(spec: &RepdigitSpec) -> u64 {
    let mut low = 0u64;
    for _ in 0..spec.k() {
        low = low.wrapping_mul(spec.base()).wrapping_add(spec.digit());
    }
    if low != 0 {
        low.trailing_zeros() as u64
    } else {
        spec.value().trailing_zeros().expect("repdigit is nonzero")
    }
}

fn residue_is_square(value: u64, modulus: u64) -> bool {
    (square_residue_mask(modulus) >> (value % modulus)) & 1 == 1
}

/// The quantity that must be square, reduced mod `modulus`: `H^2 + L^2`
/// for type 2, `H^2 - L^2` for type 1.
fn square_candidate_residue(spec: &RepdigitSpec, ty: TriangleType, modulus: u64) -> u64 {
    let (leg, rep) = side_residues(spec, modulus);
    let h2 = rep * rep % modulus;
    let l2 = leg * leg % modulus;
    match ty {
        TriangleType::Type2 => (h2 + l2) % modulus,
        TriangleType::Type1 => (h2 + modulus - l2) % modulus,
    }
}

/// Smallest modulus in the refinement chain that certifies the rejection.
/// Called only after the mod-64 or mod-63 mask failed, so one entry always
/// fires (63 and 64 close the chain).
fn refine_rejection_modulus(spec: &RepdigitSpec, ty: TriangleType) -> u32 {
    for m in [3u64, 4, 7, 8, 9, 16, 32, 63, 64] {
        if !residue_is_square(square_candidate_residue(spec, ty, m), m) {
            return m as u32;
        }
    }
    unreachable!("refinement is only invoked on a certified non-residue")
}

/// Applies the congruence rules for one candidate. `Rejected` is returned
/// only when the obstruction proves no witness can exist; every rule is
/// covered by the soundness property suite.
pub fn prefilter(spec: &RepdigitSpec, ty: TriangleType) -> Prefilter {
    let leg_v2 = spec.digit().trailing_zeros() as u64 * spec.k() as u64;
    let rep_v2 = repdigit_two_adic(spec);

    match ty {
        TriangleType::Type2 => {
            if leg_v2 == 0 && rep_v2 == 0 {
                return Prefilter::Rejected(RejectReason::BothLegsOdd);
            }
            if leg_v2.abs_diff(rep_v2) < 2 {
                return Prefilter::Rejected(RejectReason::LegValuationGap {
                    leg: leg_v2,
                    companion: rep_v2,
                });
            }
        }
        TriangleType::Type1 => {
            // delta divides the leg and nu2(hypotenuse) = nu2(delta)
            if leg_v2 < rep_v2 || leg_v2 == rep_v2 + 1 {
                return Prefilter::Rejected(RejectReason::HypotenuseValuationGap {
                    leg: leg_v2,
                    hypotenuse: rep_v2,
                });
            }
        }
    }

    for m in [64u64, 63] {
        if !residue_is_square(square_candidate_residue(spec, ty, m), m) {
            return Prefilter::Rejected(RejectReason::NonResidue {
                modulus: refine_rejection_modulus(spec, ty),
            });
        }
    }

    if spec.digit().is_power_of_two() && !power_of_two_leg_feasible(spec, ty, leg_v2, rep_v2) {
        return Prefilter::Rejected(RejectReason::PowerOfTwoDecomposition);
    }

    Prefilter::MaybeHit
}

/// When the digit power is exactly `2^j` it cannot be the odd-role leg
/// (` delta*(m^2 - n^2)` has an odd factor of at least 3), so `delta = 2^v`,
/// `m = 2^u`, `n = 1` with `j = u + v + 1` are forced and the other named
/// side must equal `2^v * (4^u - 1)` (type 2 companion leg) or
/// `2^v * (4^u + 1)` (type 1 hypotenuse). Checks that forced form exactly.
fn power_of_two_leg_feasible(
    spec: &RepdigitSpec,
    ty: TriangleType,
    leg_v2: u64,
    rep_v2: u64,
) -> bool {
    // v is the 2-adic valuation of the companion, u >= 1 comes from m > n
    if leg_v2 < rep_v2 + 2 {
        return false;
    }
    let u = leg_v2 - rep_v2 - 1;
    let pow4 = Natural::one() << (2 * u);
    let expected = match ty {
        TriangleType::Type2 => (pow4 - 1u32) << rep_v2,
        TriangleType::Type1 => (pow4 + 1u32) << rep_v2,
    };
    expected == spec.value()
}

/// Bounds for theorem verification: `k_max` applies to statements sweeping
/// digit counts (1-4), `b_max` to the statement sweeping bases (5).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremBounds {
    pub k_max: u32,
    pub b_max: u64,
}

impl Default for TheoremBounds {
    /// Seconds-scale on commodity hardware while far beyond any plausible
    /// small counterexample.
    fn default() -> Self {
        Self {
            k_max: 64,
            b_max: 10_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The scan found exactly the predicted hit set.
    Consistent,
    /// The scan disagreed with the statement: a would-be counterexample.
    Violation,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::Violation => "violation",
        }
    }
}

/// A finite-prefix check of one of the five statements.
#[derive(Debug, Clone)]
pub struct TheoremVerification {
    pub theorem: u8,
    pub report: SearchReport,
    /// Hit set the statement predicts over the scanned range.
    pub expected: Vec<(RepdigitSpec, TriangleType)>,
    /// Hits found but not predicted.
    pub unexpected: Vec<TriangleWitness>,
    /// Predicted hits that did not appear.
    pub missing: Vec<(RepdigitSpec, TriangleType)>,
    pub verdict: Verdict,
}

/// Runs the scan matching one statement:
///
/// 1. no type-2 triangle in base 4;
/// 2. the single type-1 triangle in base 4 is `(2, 4, 3)`;
/// 3. no type-2 triangle in base 3;
/// 4. no type-1 triangle in base 3;
/// 5. no two-digit type-2 triangle with digit 2, 3, or 4, in any base.
///
/// Statements 1-4 sweep `2 <= k <= k_max`; statement 5 sweeps
/// `3 <= b <= b_max` at `k = 2`.
pub fn verify_theorem(id: u8, bounds: &TheoremBounds) -> Result<TheoremVerification, Error> {
    if bounds.k_max < 2 {
        return Err(Error::KMaxTooSmall {
            k_max: bounds.k_max,
        });
    }
    let (range, expected) = match id {
        1 => (
            SearchRange::new(4, 4, None, bounds.k_max, &[TriangleType::Type2])?,
            vec![],
        ),
        2 => (
            SearchRange::new(4, 4, None, bounds.k_max, &[TriangleType::Type1])?,
            vec![(RepdigitSpec::new(2, 4, 3).unwrap(), TriangleType::Type1)],
        ),
        3 => (
            SearchRange::new(3, 3, None, bounds.k_max, &[TriangleType::Type2])?,
            vec![],
        ),
        4 => (
            SearchRange::new(3, 3, None, bounds.k_max, &[TriangleType::Type1])?,
            vec![],
        ),
        5 => {
            if bounds.b_max < 5 {
                return Err(Error::BMaxTooSmall { b_max: bounds.b_max });
            }
            (
                SearchRange::new(3, bounds.b_max, Some(vec![2, 3, 4]), 2, &[TriangleType::Type2])?,
                vec![],
            )
        }
        other => return Err(Error::UnknownTheorem { id: other }),
    };
    let report = search(&range, true);
    let unexpected: Vec<TriangleWitness> = report
        .hits
        .iter()
        .filter(|w| !expected.contains(&(w.spec, w.type_tag)))
        .cloned()
        .collect();
    let missing: Vec<(RepdigitSpec, TriangleType)> = expected
        .iter()
        .filter(|(spec, ty)| {
            !report
                .hits
                .iter()
                .any(|w| w.spec == *spec && w.type_tag == *ty)
        })
        .copied()
        .collect();
    let verdict = if unexpected.is_empty() && missing.is_empty() {
        Verdict::Consistent
    } else {
        Verdict::Violation
    };
    Ok(TheoremVerification {
        theorem: id,
        report,
        expected,
        unexpected,
        missing,
        verdict,
    })
}
