use std::fmt;
use std::sync::Arc;

use crate::poly::Poly;
use crate::{is_prime, prime_factors, GfError};

/// Canonical integer encoding of a field element.
pub type Elem = u32;

const MAX_ORDER: u64 = 1 << 22;
const ADD_TABLE_MAX: u32 = 1024;

/// A finite field, cheap to clone and safe to share across threads.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

struct Inner {
    p: u32,
    order: u32,
    degree: u32,
    base: Option<Field>,
    modulus: Vec<Elem>,
    arith: Arith,
    primitive: Elem,
}

enum Arith {
    Prime {
        inv: Vec<Elem>,
    },
    Ext {
        exp: Vec<Elem>,
        log: Vec<u32>,
        neg: Vec<Elem>,
        add: Option<Vec<u16>>,
    },
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field, GfError> {
        if !is_prime(p as u64) {
            return Err(GfError::NotPrime(p as u64));
        }
        if p as u64 > MAX_ORDER {
            return Err(GfError::TooLarge(p as u64));
        }
        let mut inv = vec![0; p as usize];
        for a in 1..p {
            inv[a as usize] = pow_mod_u64(a as u64, (p - 2) as u64, p as u64) as Elem;
        }
        let mut f = Field {
            inner: Arc::new(Inner {
                p,
                order: p,
                degree: 1,
                base: None,
                modulus: Vec::new(),
                arith: Arith::Prime { inv },
                primitive: 0,
            }),
        };
        let g = (1..p).find(|&a| f.mult_order(a) == p - 1).unwrap_or(1);
        Arc::get_mut(&mut f.inner).expect("fresh field").primitive = g;
        Ok(f)
    }

    /// `F_{p^deg}` over its prime field. Without a modulus the
    /// lexicographically smallest monic irreducible is used.
    pub fn new(p: u32, deg: u32, modulus: Option<&[Elem]>) -> Result<Field, GfError> {
        let prime = Field::prime(p)?;
        if deg == 0 {
            return Err(GfError::ZeroDegree);
        }
        if deg == 1 {
            if let Some(md) = modulus {
                let poly = Poly::new(md.to_vec());
                if poly.degree() != 1 {
                    return Err(GfError::DegreeMismatch {
                        expected: 1,
                        got: poly.degree(),
                    });
                }
            }
            return Ok(prime);
        }
        Field::extension(&prime, deg, modulus)
    }

    /// Degree-`deg` extension of `base`; the modulus has coefficients in `base`.
    pub fn extension(base: &Field, deg: u32, modulus: Option<&[Elem]>) -> Result<Field, GfError> {
        if deg == 0 {
            return Err(GfError::ZeroDegree);
        }
        let qb = base.order() as u64;
        let order = qb
            .checked_pow(deg)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or(GfError::TooLarge(qb.saturating_pow(deg)))?;
        let modulus = match modulus {
            Some(md) => {
                if let Some(&bad) = md.iter().find(|&&c| c as u64 >= qb) {
                    return Err(GfError::BadCoefficient(bad as u64));
                }
                let poly = Poly::new(md.to_vec());
                if poly.degree() != deg as isize {
                    return Err(GfError::DegreeMismatch {
                        expected: deg as usize,
                        got: poly.degree(),
                    });
                }
                if poly.leading() != 1 {
                    return Err(GfError::NotMonic);
                }
                if !poly.is_irreducible(base) {
                    return Err(GfError::NotIrreducible);
                }
                poly.coeffs().to_vec()
            }
            None => smallest_irreducible(base, deg),
        };
        let order = order as u32;
        let d = deg as usize;
        let to_digits = |a: Elem| -> Vec<Elem> {
            let mut out = vec![0; d];
            let mut a = a as u64;
            for c in out.iter_mut() {
                *c = (a % qb) as Elem;
                a /= qb;
            }
            out
        };
        let from_digits = |ds: &[Elem]| -> Elem {
            ds.iter().rev().fold(0u64, |acc, &c| acc * qb + c as u64) as Elem
        };
        let slow_mul = |a: Elem, b: Elem| -> Elem {
            let prod = Poly::new(to_digits(a)).mul(base, &Poly::new(to_digits(b)));
            let r = prod.rem(base, &Poly::new(modulus.clone()));
            let mut ds = r.coeffs().to_vec();
            ds.resize(d, 0);
            from_digits(&ds)
        };
        let slow_pow = |a: Elem, mut e: u64| -> Elem {
            let (mut acc, mut sq) = (1, a);
            while e > 0 {
                if e & 1 == 1 {
                    acc = slow_mul(acc, sq);
                }
                sq = slow_mul(sq, sq);
                e >>= 1;
            }
            acc
        };
        let n = (order - 1) as u64;
        let factors = prime_factors(n);
        let primitive = (1..order)
            .find(|&a| factors.iter().all(|&r| slow_pow(a, n / r) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![0u32; order as usize];
        let mut cur: Elem = 1;
        for i in 0..n as u32 {
            exp.push(cur);
            log[cur as usize] = i;
            cur = slow_mul(cur, primitive);
        }
        let add_digits = |a: Elem, b: Elem| -> Elem {
            let (da, db) = (to_digits(a), to_digits(b));
            let ds: Vec<Elem> = da.iter().zip(&db).map(|(&x, &y)| base.add(x, y)).collect();
            from_digits(&ds)
        };
        let neg: Vec<Elem> = (0..order)
            .map(|a| {
                from_digits(
                    &to_digits(a)
                        .iter()
                        .map(|&c| base.neg(c))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let add = (order <= ADD_TABLE_MAX).then(|| {
            let mut t = vec![0u16; (order * order) as usize];
            for a in 0..order {
                for b in 0..order {
                    t[(a * order + b) as usize] = add_digits(a, b) as u16;
                }
            }
            t
        });
        Ok(Field {
            inner: Arc::new(Inner {
                p: base.characteristic(),
                order,
                degree: deg,
                base: Some(base.clone()),
                modulus,
                arith: Arith::Ext { exp, log, neg, add },
                primitive,
            }),
        })
    }

    /// Characteristic `p`.
    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    /// Number of elements `q`.
    pub fn order(&self) -> u32 {
        self.inner.order
    }

    /// Degree over the base field (1 for a prime field).
    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    /// Degree over the prime field.
    pub fn absolute_degree(&self) -> u32 {
        match &self.inner.base {
            None => 1,
            Some(b) => self.inner.degree * b.absolute_degree(),
        }
    }

    /// The field this one extends; `None` for a prime field.
    pub fn base(&self) -> Option<&Field> {
        self.inner.base.as_ref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.base.is_none()
    }

    /// Monic modulus over the base field, low to high; empty for a prime field.
    pub fn modulus(&self) -> &[Elem] {
        &self.inner.modulus
    }

    /// Order of the base field (`p` for an extension of a prime field).
    pub fn base_order(&self) -> u32 {
        self.inner.base.as_ref().map_or(1, |b| b.order())
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.inner.order
    }

    /// Nonzero elements in canonical order.
    pub fn nonzero(&self) -> std::ops::Range<Elem> {
        1..self.inner.order
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        v.rem_euclid(self.inner.p as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.arith {
            Arith::Prime { .. } => {
                let s = a + b;
                if s >= self.inner.p {
                    s - self.inner.p
                } else {
                    s
                }
            }
            Arith::Ext { add: Some(t), .. } => t[(a * self.inner.order + b) as usize] as Elem,
            Arith::Ext { .. } => self.add_slow(a, b),
        }
    }

    fn add_slow(&self, a: Elem, b: Elem) -> Elem {
        let base = self.inner.base.as_ref().expect("extension");
        let qb = base.order();
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.inner.degree {
            out += base.add(a % qb, b % qb) * place;
            a /= qb;
            b /= qb;
            place = place.wrapping_mul(qb);
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.inner.arith {
            Arith::Prime { .. } => {
                if a == 0 {
                    0
                } else {
                    self.inner.p - a
                }
            }
            Arith::Ext { neg, .. } => neg[a as usize],
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.arith {
            Arith::Prime { .. } => ((a as u64 * b as u64) % self.inner.p as u64) as Elem,
            Arith::Ext { exp, log, .. } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    let n = exp.len();
                    let s = log[a as usize] as usize + log[b as usize] as usize;
                    exp[if s >= n { s - n } else { s }]
                }
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn try_inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        Some(match &self.inner.arith {
            Arith::Prime { inv } => inv[a as usize],
            Arith::Ext { exp, log, .. } => {
                let n = exp.len();
                exp[(n - log[a as usize] as usize) % n]
            }
        })
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.try_inv(a).expect("inverse of zero")
    }

    /// `a / b`. Panics when `b` is zero.
    #[inline]
    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    /// `a^e` with `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        match &self.inner.arith {
            Arith::Prime { .. } => pow_mod_u64(a as u64, e, self.inner.p as u64) as Elem,
            Arith::Ext { exp, log, .. } => {
                let n = exp.len() as u128;
                exp[((log[a as usize] as u128 * e as u128) % n) as usize]
            }
        }
    }

    /// `a^e` for a signed exponent; `None` when `a = 0` and `e < 0`.
    pub fn pow_signed(&self, a: Elem, e: i64) -> Option<Elem> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.try_inv(a).map(|b| self.pow(b, e.unsigned_abs()))
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Elem) -> u32 {
        assert!(a != 0, "zero has no multiplicative order");
        let mut n = (self.inner.order - 1) as u64;
        for r in prime_factors(n) {
            while n % r == 0 && self.pow(a, n / r) == 1 {
                n /= r;
            }
        }
        n as u32
    }

    /// Smallest element (in canonical order) of multiplicative order `q − 1`.
    pub fn primitive(&self) -> Elem {
        self.inner.primitive
    }

    /// `a^b` where `b` is the base-field order (the relative Frobenius).
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.base_order().max(self.inner.p) as u64)
    }

    /// Norm `θ^{(q−1)/(s−1)}` onto the subfield with `sub_order = s` elements.
    pub fn norm(&self, theta: Elem, sub_order: u64) -> Result<Elem, GfError> {
        let q = self.inner.order as u64;
        let not_sub = GfError::NotASubfield {
            sub: sub_order,
            order: self.inner.order,
        };
        let p = self.inner.p as u64;
        let mut e = 0u32;
        let mut s = sub_order;
        while s > 1 && s % p == 0 {
            s /= p;
            e += 1;
        }
        if s != 1 || e == 0 || self.absolute_degree() % e != 0 {
            return Err(not_sub);
        }
        Ok(self.pow(theta, (q - 1) / (sub_order - 1)))
    }

    /// Coordinates over the base field, low to high (length = degree).
    pub fn digits(&self, a: Elem) -> Vec<Elem> {
        let qb = self.base_order().max(self.inner.p);
        let mut a = a;
        (0..self.inner.degree)
            .map(|_| {
                let c = a % qb;
                a /= qb;
                c
            })
            .collect()
    }

    /// Inverse of [`Field::digits`].
    pub fn from_digits(&self, ds: &[Elem]) -> Elem {
        let qb = self.base_order().max(self.inner.p) as u64;
        ds.iter().rev().fold(0u64, |acc, &c| acc * qb + c as u64) as Elem
    }

    /// The element as a base-field element when it lies in the base field.
    pub fn to_base(&self, a: Elem) -> Option<Elem> {
        (a < self.base_order()).then_some(a)
    }

    /// True when `a` is an element of this field.
    pub fn contains(&self, a: u64) -> bool {
        a < self.inner.order as u64
    }

    /// Short description, e.g. `GF(9)`.
    pub fn name(&self) -> String {
        format!("GF({})", self.inner.order)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.order == other.inner.order
                && self.inner.modulus == other.inner.modulus
                && self.inner.base == other.inner.base)
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.order.hash(state);
        self.inner.modulus.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.inner.base {
            None => write!(f, "GF({})", self.inner.p),
            Some(b) => write!(
                f,
                "GF({}) = {:?}[x]/({:?})",
                self.inner.order, b, self.inner.modulus
            ),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.order)
    }
}

fn pow_mod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    acc
}

/// Lexicographically smallest monic irreducible of degree `deg` over `base`,
/// comparing coefficient tuples `(c_0, …, c_{deg−1})` from `c_0` onwards.
fn smallest_irreducible(base: &Field, deg: u32) -> Vec<Elem> {
    let qb = base.order() as u64;
    let total = qb.pow(deg);
    for idx in 0..total {
        let mut coeffs = vec![0; deg as usize + 1];
        let mut rest = idx;
        for i in (0..deg as usize).rev() {
            coeffs[i] = (rest % qb) as Elem;
            rest /= qb;
        }
        coeffs[deg as usize] = 1;
        let poly = Poly::new(coeffs);
        if poly.is_irreducible(base) {
            return poly.coeffs().to_vec();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
