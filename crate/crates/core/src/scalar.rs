//! Coefficient fields for the polynomial and elimination layers.
//!
//! Everything above this module is generic over [`Field`]. The exact default
//! is [`BigRational`]; [`Fp`] is a word-size prime field that gives a fast
//! lower bound on ranks (rank over F_p never exceeds rank over Q for a matrix
//! with rational entries whose denominators are prime to p).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};

/// A commutative field usable as a coefficient ring.
pub trait Field:
    Clone + fmt::Debug + PartialEq + Send + Sync + Num + Neg<Output = Self> + 'static
{
    /// The element `num / den`. `den` must be nonzero in the field.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Image of an exact rational.
    fn from_rational(r: &BigRational) -> Self;

    /// Multiplicative inverse of a nonzero element.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

/// The Mersenne prime 2^61 - 1.
pub const FP_MODULUS: u64 = (1 << 61) - 1;

/// Element of the prime field Z / (2^61 - 1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % FP_MODULUS)
    }

    pub fn from_i64(v: i64) -> Self {
        let m = FP_MODULUS as i128;
        Fp((((v as i128) % m + m) % m) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn from_bigint(v: &BigInt) -> Self {
        let m = BigInt::from(FP_MODULUS);
        let r = v.mod_floor(&m);
        Fp(r.to_u64().expect("residue fits in u64"))
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let s = self.0 + rhs.0;
        Fp(if s >= FP_MODULUS { s - FP_MODULUS } else { s })
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        if self.0 >= rhs.0 {
            Fp(self.0 - rhs.0)
        } else {
            Fp(self.0 + FP_MODULUS - rhs.0)
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp(((self.0 as u128 * rhs.0 as u128) % FP_MODULUS as u128) as u64)
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        assert!(rhs.0 != 0, "division by zero in F_p");
        self * rhs.pow(FP_MODULUS - 2)
    }
}

impl Rem for Fp {
    type Output = Fp;
    fn rem(self, rhs: Fp) -> Fp {
        assert!(rhs.0 != 0, "remainder by zero in F_p");
        Fp(0)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.0 == 0 {
            self
        } else {
            Fp(FP_MODULUS - self.0)
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp(1)
    }
}

impl Num for Fp {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::from_i64)
    }
}

impl Field for Fp {
    fn from_ratio(num: i64, den: i64) -> Self {
        Fp::from_i64(num) / Fp::from_i64(den)
    }

    fn from_rational(r: &BigRational) -> Self {
        Fp::from_bigint(r.numer()) / Fp::from_bigint(r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_round_trips() {
        for v in [1i64, 2, 3, 7, -5, 123_456_789] {
            let x = Fp::from_i64(v);
            assert_eq!(x * x.inv(), Fp::one());
        }
    }

    #[test]
    fn fp_negation_and_subtraction_agree() {
        let a = Fp::from_i64(17);
        let b = Fp::from_i64(40);
        assert_eq!(a - b, -(b - a));
        assert_eq!(Fp::from_i64(-23), -Fp::from_i64(23));
    }

    #[test]
    fn rational_images_agree() {
        let r = BigRational::new(BigInt::from(-3), BigInt::from(2));
        assert_eq!(Fp::from_rational(&r), Fp::from_ratio(-3, 2));
        assert_eq!(Fp::from_ratio(-3, 2) * Fp::from_i64(2), Fp::from_i64(-3));
        assert_eq!(BigRational::from_ratio(-3, 2), r);
    }
}
