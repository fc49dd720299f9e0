use crate::families::FamilyId;
use crate::triples::TriangleType;

/// Errors surfaced by constructors and search entry points.
///
/// Every variant names the violated bound; callers can print them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("base must be at least 3 (got base={base})")]
    BaseTooSmall { base: u64 },

    #[error("digit must satisfy 2 <= digit <= base - 1 (got digit={digit}, base={base})")]
    DigitOutOfRange { digit: u64, base: u64 },

    #[error("digit count must be at least 2 (got k={k})")]
    DigitCountTooSmall { k: u32 },

    #[error("rendering base must be at least 2 (got base={base})")]
    RenderBaseTooSmall { base: u64 },

    #[error("cannot parse {text:?} as a base-{base} numeral")]
    MalformedNumeral { text: String, base: u64 },

    #[error("triple parameters require {constraint} (got delta={delta}, m={m}, n={n})")]
    TripleConstraint {
        constraint: &'static str,
        delta: String,
        m: String,
        n: String,
    },

    #[error("all sides of a Pythagorean triangle must be positive")]
    DegenerateSide,

    #[error("{a}^2 + {b}^2 != {c}^2: not a Pythagorean triple")]
    NotPythagorean { a: String, b: String, c: String },

    #[error("family {family} requires {condition} (got {given})")]
    FamilyConstraint {
        family: FamilyId,
        condition: &'static str,
        given: String,
    },

    #[error("family parameters exceed the supported magnitude for base and digit")]
    ParameterOverflow,

    #[error("digit must be at least 2 (got digit={digit})")]
    DigitTooSmall { digit: u64 },

    #[error("digit {digit} admits no two-digit {triangle} triangle in any base")]
    UnsupportedCorollaryDigit { digit: u64, triangle: TriangleType },

    #[error("theorem id must be between 1 and 5 (got {id})")]
    UnknownTheorem { id: u8 },

    #[error("search base range must start at 3 or above (got {lo})")]
    SearchBaseTooSmall { lo: u64 },

    #[error("search base range is empty ({lo}..{hi})")]
    EmptyBaseRange { lo: u64, hi: u64 },

    #[error("k_max must be at least 2 (got {k_max})")]
    KMaxTooSmall { k_max: u32 },

    #[error("b_max must be at least 5 (got {b_max})")]
    BMaxTooSmall { b_max: u64 },

    #[error("at least one triangle type must be searched")]
    NoTypesSelected,
}
