//! Exact coefficient arithmetic over the rationals and over prime fields.
//!
//! Every operation is exact: rationals are arbitrary-precision and kept in
//! lowest terms, prime-field values are kept reduced into `0..p`. Mixing
//! scalars from different fields is an error, never a coercion.

use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::BigRational;

use crate::error::AlgebraError;

/// Exclusive upper bound on prime moduli.
///
/// Keeping `p < 2^16` lets prime-field products stay inside `u64` without
/// widening.
pub const MAX_PRIME: u64 = 1 << 16;

/// Descriptor of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The field of rational numbers.
    Rationals,
    /// The prime field with the given modulus.
    Prime(u64),
}

impl Field {
    /// Returns the prime field with modulus `p`, rejecting composites and
    /// primes at or above [`MAX_PRIME`].
    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime { value: p });
        }
        if p >= MAX_PRIME {
            return Err(AlgebraError::PrimeTooLarge { value: p });
        }
        Ok(Field::Prime(p))
    }

    /// Parses a field code: `q`, `f2`, `f3`, or `fp:P` (case-insensitive).
    pub fn parse_code(code: &str) -> Result<Field, AlgebraError> {
        let lower = code.trim().to_ascii_lowercase();
        if lower == "q" {
            return Ok(Field::Rationals);
        }
        let digits = lower
            .strip_prefix("fp:")
            .or_else(|| lower.strip_prefix('f'))
            .ok_or_else(|| AlgebraError::InvalidFieldCode {
                code: code.to_owned(),
            })?;
        let p: u64 = digits.parse().map_err(|_| AlgebraError::InvalidFieldCode {
            code: code.to_owned(),
        })?;
        Field::prime(p)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn has_characteristic_two(self) -> bool {
        self.characteristic() == 2
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod { value: 0, prime: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.integer(1)
    }

    /// The image of the integer `value` in this field.
    pub fn integer(self, value: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from(BigInt::from(value))),
            Field::Prime(p) => {
                let value = BigInt::from(value)
                    .mod_floor(&BigInt::from(p))
                    .to_u64()
                    .expect("residue fits in u64");
                Scalar::Mod { value, prime: p }
            }
        }
    }

    /// The image of a decimal digit string in this field.
    pub fn integer_from_decimal(self, digits: &str) -> Option<Scalar> {
        let n: BigInt = digits.parse().ok()?;
        Some(match self {
            Field::Rationals => Scalar::Rational(BigRational::from(n)),
            Field::Prime(p) => {
                let value = n
                    .mod_floor(&BigInt::from(p))
                    .to_u64()
                    .expect("residue fits in u64");
                Scalar::Mod { value, prime: p }
            }
        })
    }

    /// `(-1)^parity` as a scalar of this field.
    pub fn sign(self, parity: bool) -> Scalar {
        if parity {
            self.integer(-1)
        } else {
            self.one()
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// A nonzero-or-zero element of a coefficient field.
///
/// Invariants: `Rational` values are in lowest terms (maintained by
/// `BigRational`); `Mod` values satisfy `value < prime`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, prime: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Mod { prime, .. } => Field::Prime(*prime),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    fn check_same_field(&self, rhs: &Scalar) -> Result<(), AlgebraError> {
        if self.field() == rhs.field() {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch {
                left: self.field(),
                right: rhs.field(),
            })
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar, AlgebraError> {
        self.check_same_field(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, prime }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a + b) % prime,
                prime: *prime,
            },
            _ => unreachable!("fields already matched"),
        })
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar, AlgebraError> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar, AlgebraError> {
        self.check_same_field(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, prime }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a * b) % prime,
                prime: *prime,
            },
            _ => unreachable!("fields already matched"),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Mod { value, prime } => Scalar::Mod {
                value: (prime - value) % prime,
                prime: *prime,
            },
        }
    }

    /// Multiplicative inverse. Fails on zero.
    pub fn inv(&self) -> Result<Scalar, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero {
                field: self.field(),
            });
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Mod { value, prime } => {
                // Fermat: a^(p-2) = a^(-1) in F_p.
                Scalar::Mod {
                    value: mod_pow(*value, prime - 2, *prime),
                    prime: *prime,
                }
            }
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Mod { value, prime } => write!(f, "{value} mod {prime}"),
        }
    }
}

/// Splits a rational into a negativity flag and its magnitude rendering,
/// for pretty-printers that place signs between terms.
pub(crate) fn rational_parts(r: &BigRational) -> (bool, String) {
    (r.is_negative(), r.abs().to_string())
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
