//! Exact arbitrary-precision integer primitives used by every other module.
//!
//! All operations are pure functions of their inputs; [`Natural`] values are
//! immutable and freely shared between worker threads.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

/// Arbitrary-precision non-negative integer.
///
/// Side lengths, repdigit values, and their squares all live here: a
/// repdigit with 256 digits in base 10^6 is over 5000 bits, far beyond any
/// fixed-width type.
pub type Natural = BigUint;

/// Floor of the real square root of `n`.
///
/// Newton iteration seeded from the bit length. The seed is an upper bound
/// on the true root, so the iterates decrease monotonically and the first
/// non-decreasing step lands exactly on the floor.
pub fn isqrt(n: &Natural) -> Natural {
    if n.bits() < 2 {
        return n.clone(); // 0 and 1 are their own roots
    }
    // n < 2^bits implies sqrt(n) < 2^ceil(bits/2)
    let mut x = Natural::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Bit `i` is set iff `i` is congruent to a square modulo `modulus`.
///
/// Built from the squares themselves, so a residue test against the mask
/// can never reject an actual square.
pub(crate) const fn square_residue_mask(modulus: u64) -> u64 {
    let mut mask = 0u64;
    let mut i = 0u64;
    while i < modulus {
        mask |= 1 << ((i * i) % modulus);
        i += 1;
    }
    mask
}

const SQUARES_MOD_64: u64 = square_residue_mask(64);
const SQUARES_MOD_63: u64 = square_residue_mask(63);

fn residue(n: &Natural, modulus: u32) -> u64 {
    (n % modulus).to_u64().expect("residue below 64 fits in u64")
}

/// Exact square root: `Some(r)` iff `n = r^2`.
///
/// Residue classes modulo 64 and 63 reject most non-squares before any
/// big-integer root is taken; 63 = 9 * 7 folds the mod-3, mod-7 and mod-9
/// square conditions into one table lookup.
pub fn sqrt_exact(n: &Natural) -> Option<Natural> {
    if (SQUARES_MOD_64 >> residue(n, 64)) & 1 == 0 {
        return None;
    }
    if (SQUARES_MOD_63 >> residue(n, 63)) & 1 == 0 {
        return None;
    }
    let r = isqrt(n);
    (&(&r * &r) == n).then_some(r)
}

/// `true` iff `n` is a perfect square.
pub fn is_perfect_square(n: &Natural) -> bool {
    sqrt_exact(n).is_some()
}

/// Greatest common divisor, with `gcd(0, b) = b`.
pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    a.gcd(b)
}

/// Exact integer power. `pow(_, 0) = 1`, including `0^0 = 1` (the empty
/// product, matching how repdigit sums expand).
pub fn pow(base: &Natural, exp: u32) -> Natural {
    base.pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn isqrt_small_values() {
        assert_eq!(isqrt(&Natural::zero()), nat(0));
        assert_eq!(isqrt(&nat(1)), nat(1));
        assert_eq!(isqrt(&nat(24)), nat(4));
        assert_eq!(isqrt(&nat(25)), nat(5));
    }

    #[test]
    fn isqrt_of_anchor_leg_difference() {
        // 666^2 - 216^2 = 396900 and 630^2 = 396900
        let diff = nat(666) * nat(666) - nat(216) * nat(216);
        assert_eq!(diff, nat(396_900));
        assert_eq!(isqrt(&diff), nat(630));
    }

    #[test]
    fn sqrt_exact_examples() {
        assert_eq!(sqrt_exact(&nat(4225)), Some(nat(65)));
        assert_eq!(sqrt_exact(&nat(48)), None); // 6^2 = 36 < 48 < 49 = 7^2
        assert_eq!(sqrt_exact(&nat(1)), Some(nat(1)));
        assert_eq!(sqrt_exact(&Natural::zero()), Some(nat(0)));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&nat(216), &nat(630)), nat(18));
        assert_eq!(gcd(&nat(0), &nat(7)), nat(7));
        assert_eq!(gcd(&nat(6), &nat(1)), nat(1));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(pow(&nat(6), 3), nat(216));
        assert_eq!(pow(&nat(4), 5), nat(1024));
        assert_eq!(pow(&nat(17), 1), nat(17));
        assert_eq!(pow(&Natural::zero(), 0), nat(1));
    }

    #[test]
    fn residue_masks_contain_every_square_residue() {
        // exhaustive for one full period of each modulus
        for x in 0u64..(64 * 63) {
            let sq = x * x;
            assert_ne!((SQUARES_MOD_64 >> (sq % 64)) & 1, 0);
            assert_ne!((SQUARES_MOD_63 >> (sq % 63)) & 1, 0);
        }
    }
}
