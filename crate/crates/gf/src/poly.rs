use std::fmt;

use crate::field::{Elem, Field};
use crate::GfError;

/// Univariate polynomial with coefficients low to high, trailing zeros trimmed.
///
/// The coefficient field is passed to each arithmetic operation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { coeffs: vec![1] }
    }

    /// The monomial `x`.
    pub fn x() -> Poly {
        Poly { coeffs: vec![0, 1] }
    }

    /// `c · x^k`.
    pub fn monomial(c: Elem, k: usize) -> Poly {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `x − r`.
    pub fn linear(field: &Field, r: Elem) -> Poly {
        Poly::new(vec![field.neg(r), 1])
    }

    /// `∏ (x − r)` over the given roots.
    pub fn from_roots(field: &Field, roots: &[Elem]) -> Poly {
        roots.iter().fold(Poly::one(), |acc, &r| {
            acc.mul(field, &Poly::linear(field, r))
        })
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Degree, with −1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, field: &Field, x: Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| field.add(field.mul(acc, x), c))
    }

    pub fn add(&self, field: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| field.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, field: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| field.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, field: &Field, c: Elem) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, field: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder. Panics when `divisor` is zero.
    pub fn div_rem(&self, field: &Field, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = field.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = field.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = field.sub(rem[k + j], field.mul(c, b));
            }
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, field: &Field, divisor: &Poly) -> Poly {
        self.div_rem(field, divisor).1
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self, field: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(field, field.inv(self.leading()))
    }

    /// Monic greatest common divisor.
    pub fn gcd(field: &Field, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, field: &Field, mut e: u64, modulus: &Poly) -> Poly {
        let mut acc = Poly::one().rem(field, modulus);
        let mut sq = self.rem(field, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &sq).rem(field, modulus);
            }
            sq = sq.mul(field, &sq).rem(field, modulus);
            e >>= 1;
        }
        acc
    }

    /// Roots in `field` with multiplicity (ascending canonical order) and the
    /// rootless cofactor `g` with `self = ∏(x − r) · g`.
    pub fn roots(&self, field: &Field) -> (Vec<Elem>, Poly) {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut g = self.clone();
        let mut roots = Vec::new();
        for x in field.elements() {
            while g.degree() >= 1 && g.eval(field, x) == 0 {
                roots.push(x);
                g = g.div_rem(field, &Poly::linear(field, x)).0;
            }
        }
        (roots, g)
    }

    /// Irreducibility over `field`: root scan up to degree 3, otherwise
    /// `gcd(x^{q^i} − x, f) = 1` for all `i ≤ deg/2`.
    pub fn is_irreducible(&self, field: &Field) -> bool {
        let d = self.degree();
        if d <= 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        if d <= 3 {
            return field.elements().all(|x| self.eval(field, x) != 0);
        }
        let q = field.order() as u64;
        let x = Poly::x();
        let mut h = x.clone();
        for _ in 0..d / 2 {
            h = h.pow_mod(field, q, self);
            let g = Poly::gcd(field, &h.sub(field, &x), self);
            if g.degree() != 0 {
                return false;
            }
        }
        true
    }

    /// Parses comma-separated integer coefficients, low to high.
    pub fn parse(text: &str) -> Result<Poly, GfError> {
        let coeffs = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<Elem>()
                    .map_err(|_| GfError::Parse(text.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }

    /// Comma-separated coefficients, low to high (`0` for the zero polynomial).
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
