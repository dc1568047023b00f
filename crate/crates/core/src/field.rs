//! Coefficient fields.
//!
//! Everything in this crate is generic over [`Field`]. The production
//! instance is [`num_rational::BigRational`]; [`Fp`] is a small prime field
//! that is handy for fast randomized testing of the Gröbner machinery.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, NumRef, One, Signed, ToPrimitive, Zero};

/// An exact field. Floating point types deliberately do not implement this.
pub trait Field:
    Num + NumRef + Neg<Output = Self> + Clone + Eq + Hash + Debug + Display + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;

    /// The field element `num / den`, or `None` when `den` vanishes in the field.
    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Used only for pretty printing signs.
    fn is_negative(&self) -> bool {
        false
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Integers modulo a prime `P` (`P` must be prime and below 2^31).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P as u64;
            }
            base = base * base % P as u64;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u64 + o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp((self.0 as u64 * o.0 as u64 % P as u64) as u32)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        assert!(o.0 != 0, "division by zero in Fp");
        self * o.pow(P as u64 - 2)
    }
}

impl<const P: u32> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, _o: Self) -> Self {
        Fp(0)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

macro_rules! fp_ref_op {
    ($tr:ident, $m:ident) => {
        impl<'a, const P: u32> $tr<&'a Fp<P>> for Fp<P> {
            type Output = Fp<P>;
            fn $m(self, o: &'a Fp<P>) -> Fp<P> {
                $tr::$m(self, *o)
            }
        }
    };
}
fp_ref_op!(Add, add);
fp_ref_op!(Sub, sub);
fp_ref_op!(Mul, mul);
fp_ref_op!(Div, div);
fp_ref_op!(Rem, rem);

impl<const P: u32> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(P);
        let n = num.mod_floor(&p).to_i64()?;
        let d = den.mod_floor(&p).to_i64()?;
        if d == 0 {
            None
        } else {
            Some(Fp::new(n) / Fp::new(d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_inverse() {
        for a in 1..7 {
            let x = F7::new(a);
            assert_eq!(x * x.inv(), F7::one());
        }
        assert_eq!(-F7::new(3), F7::new(4));
    }

    #[test]
    fn rational_fraction_literal() {
        let q = BigRational::from_fraction(&BigInt::from(-6), &BigInt::from(4)).unwrap();
        assert_eq!(q, BigRational::new(BigInt::from(-3), BigInt::from(2)));
        assert!(Field::is_negative(&q));
        assert!(BigRational::from_fraction(&BigInt::from(1), &BigInt::from(0)).is_none());
    }
}
