//! Independent oracles for the acceptance suite. Nothing here goes through
//! the library's classification or square-detection paths: the square root
//! is a bisection, repdigits are folded digit by digit, and the generator
//! parameters come from plain enumeration.

use repdigit_triangles::Natural;
use repdigit_triangles::triples::TriangleType;

/// Floor square root by bisection.
pub fn bisect_sqrt(n: &Natural) -> Natural {
    let mut lo = Natural::from(0u32);
    let mut hi = Natural::from(1u32) << (n.bits() / 2 + 1);
    // invariant: lo^2 <= n < hi^2
    while &lo + 1u32 < hi {
        let mid: Natural = (&lo + &hi) >> 1;
        if &mid * &mid <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// One hit found by the naive scan: the spec tuple plus the full sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveHit {
    pub k: u32,
    pub base: u64,
    pub digit: u64,
    pub triangle: TriangleType,
    pub sides: (Natural, Natural, Natural),
}

/// Scans every spec in the block by direct evaluation: fold the repdigit,
/// multiply out the digit power, and test `H^2 -+ L^2` by bisection.
/// Hits come back ordered by `(base, digit, k, type)`.
pub fn naive_search(
    bases: (u64, u64),
    k_max: u32,
    types: &[TriangleType],
) -> Vec<NaiveHit> {
    let mut hits = Vec::new();
    for base in bases.0..=bases.1 {
        for digit in 2..base {
            for k in 2..=k_max {
                let mut rep = Natural::from(0u32);
                let mut power = Natural::from(1u32);
                for _ in 0..k {
                    rep = rep * base + digit;
                    power *= digit;
                }
                let rep_sq = &rep * &rep;
                let pow_sq = &power * &power;
                for &triangle in types {
                    let candidate = match triangle {
                        TriangleType::Type1 => &rep_sq - &pow_sq,
                        TriangleType::Type2 => &rep_sq + &pow_sq,
                    };
                    let root = bisect_sqrt(&candidate);
                    if &root * &root != candidate {
                        continue;
                    }
                    let sides = match triangle {
                        TriangleType::Type1 => (power.clone(), root, rep.clone()),
                        TriangleType::Type2 => (power.clone(), rep.clone(), root),
                    };
                    hits.push(NaiveHit {
                        k,
                        base,
                        digit,
                        triangle,
                        sides,
                    });
                }
            }
        }
    }
    hits.sort_by_key(|h| (h.base, h.digit, h.k, h.triangle));
    hits
}

/// Enumerates (delta, m, n) up to the bound and returns every tuple whose
/// generated triple has the given legs (in either order) and hypotenuse.
pub fn brute_force_params(
    legs: (u64, u64),
    hypotenuse: u64,
    bound: u64,
) -> Vec<(u64, u64, u64)> {
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut found = Vec::new();
    for delta in 1..=bound {
        for m in 2..=bound {
            for n in 1..m {
                if gcd(m, n) != 1 || (m + n) % 2 == 0 {
                    continue;
                }
                let a = delta * (m * m - n * n);
                let b = delta * 2 * m * n;
                let c = delta * (m * m + n * n);
                if c == hypotenuse && ((a, b) == legs || (b, a) == legs) {
                    found.push((delta, m, n));
                }
            }
        }
    }
    found
}
