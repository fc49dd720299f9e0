//! Base-b repdigit values and positional rendering in arbitrary bases.

use crate::bigmath::Natural;
use crate::error::Error;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// A candidate `(k, b, d)`: the number written with `k` copies of digit `d`
/// in base `b`, paired with the digit power `d^k`.
///
/// Bounds are enforced eagerly: `b >= 3`, `2 <= d <= b - 1`, `k >= 2`.
/// No Pythagorean triangle has a side of length 1 (forcing `d >= 2`, hence
/// `b >= 3`) and none is isosceles (forcing `k >= 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepdigitSpec {
    k: u32,
    base: u64,
    digit: u64,
}

impl RepdigitSpec {
    pub fn new(k: u32, base: u64, digit: u64) -> Result<Self, Error> {
        if base < 3 {
            return Err(Error::BaseTooSmall { base });
        }
        if digit < 2 || digit > base - 1 {
            return Err(Error::DigitOutOfRange { digit, base });
        }
        if k < 2 {
            return Err(Error::DigitCountTooSmall { k });
        }
        Ok(Self { k, base, digit })
    }

    /// Number of repeated digits.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digit(&self) -> u64 {
        self.digit
    }

    /// The repdigit value `d * (b^{k-1} + ... + b + 1)`, evaluated by
    /// Horner's scheme; the closed form `d * (b^k - 1) / (b - 1)` is kept
    /// as a property test instead of an implementation path.
    pub fn value(&self) -> Natural {
        let mut acc = Natural::from(self.digit);
        for _ in 1..self.k {
            acc = acc * self.base + self.digit;
        }
        acc
    }

    /// The digit power `d^k`. Always strictly below [`Self::value`].
    pub fn digit_power(&self) -> Natural {
        Natural::from(self.digit).pow(self.k)
    }
}

/// Renders `n` positionally in `base`, most significant digit first.
///
/// Bases up to 10 use plain contiguous digits. Above 10 every digit is a
/// bracketed decimal value and digits are joined with `:`, e.g. 60 in base
/// 11 is `[5]:[5]`; unambiguous for any base.
pub fn render_base(n: &Natural, base: u64) -> Result<String, Error> {
    if base < 2 {
        return Err(Error::RenderBaseTooSmall { base });
    }
    let digits = digits_of(n, base);
    if base <= 10 {
        Ok(digits
            .iter()
            .map(|d| char::from(b'0' + *d as u8))
            .collect())
    } else {
        Ok(digits
            .iter()
            .map(|d| format!("[{d}]"))
            .collect::<Vec<_>>()
            .join(":"))
    }
}

/// Inverse of [`render_base`] for both digit-string styles.
pub fn parse_base(text: &str, base: u64) -> Result<Natural, Error> {
    if base < 2 {
        return Err(Error::RenderBaseTooSmall { base });
    }
    let malformed = || Error::MalformedNumeral {
        text: text.to_owned(),
        base,
    };
    if text.is_empty() {
        return Err(malformed());
    }
    let mut acc = Natural::zero();
    if base <= 10 {
        for c in text.chars() {
            let d = c.to_digit(10).ok_or_else(malformed)? as u64;
            if d >= base {
                return Err(malformed());
            }
            acc = acc * base + d;
        }
    } else {
        for part in text.split(':') {
            let inner = part
                .strip_prefix('[')
                .and_then(|p| p.strip_suffix(']'))
                .ok_or_else(malformed)?;
            let d: u64 = inner.parse().map_err(|_| malformed())?;
            if d >= base {
                return Err(malformed());
            }
            acc = acc * base + d;
        }
    }
    Ok(acc)
}

/// Digit values of `n` in `base`, most significant first; `[0]` for zero.
fn digits_of(n: &Natural, base: u64) -> Vec<u64> {
    if n.is_zero() {
        return vec![0];
    }
    let big_base = Natural::from(base);
    let mut rest = n.clone();
    let mut digits = Vec::new();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&big_base);
        digits.push(r.to_u64().expect("digit below base fits in u64"));
        rest = q;
    }
    digits.reverse();
    digits
}
