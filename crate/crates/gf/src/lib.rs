//! Exact arithmetic over finite fields.
//!
//! A [`Field`] is either a prime field `F_p` or an extension of degree `d` of
//! another field, so towers such as `F_{9^4} ⊃ F_9 ⊃ F_3` are expressed
//! directly. Elements are plain [`Elem`] values holding the canonical integer
//! encoding `Σ c_i · b^i`, where `c_i` are the coordinates over the base field
//! (power basis of the modulus root) and `b` is the order of the base field.
//! Encodings of base-field elements coincide with their encodings in every
//! extension, and the integer order of encodings is the canonical element
//! order used for every "smallest element" choice downstream.

mod field;
mod poly;

pub use field::{Elem, Field};
pub use poly::Poly;

/// Errors raised while building fields or parsing polynomials.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GfError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible")]
    NotIrreducible,
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: isize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("coefficient {0} is not an element of the base field")]
    BadCoefficient(u64),
    #[error("field degree must be positive")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum")]
    TooLarge(u64),
    #[error("{sub} is not the order of a subfield of GF({order})")]
    NotASubfield { sub: u64, order: u32 },
    #[error("invalid polynomial text: {0}")]
    Parse(String),
}

/// Returns true when `n` is prime.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Greatest common divisor of two unsigned integers.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
