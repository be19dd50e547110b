use perfbase_gf::{Elem, Field, GfError, Poly};
use proptest::prelude::*;

/// Schoolbook multiplication in F_p[x]/(modulus) on coefficient vectors,
/// independent of the table-driven implementation.
fn oracle_mul(p: u64, modulus: &[Elem], a: &[u64], b: &[u64]) -> Vec<u64> {
    let d = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * d];
    for i in 0..d {
        for j in 0..d {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    for k in (d..2 * d).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        for (j, &m) in modulus.iter().enumerate() {
            prod[k - d + j] = (prod[k - d + j] + p * p - c * m as u64 % p) % p;
        }
    }
    prod.truncate(d);
    prod
}

fn decode(p: u64, d: usize, mut a: u64) -> Vec<u64> {
    (0..d)
        .map(|_| {
            let c = a % p;
            a /= p;
            c
        })
        .collect()
}

fn encode(p: u64, v: &[u64]) -> Elem {
    v.iter().rev().fold(0, |acc, &c| acc * p + c) as Elem
}

fn small_fields() -> Vec<Field> {
    [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]
        .iter()
        .map(|&(p, d)| Field::new(p, d, None).unwrap())
        .collect()
}

#[test]
fn axioms_hold_exhaustively_up_to_nine() {
    for f in small_fields() {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1, "{f:?} a={a}");
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

#[test]
fn multiplication_matches_schoolbook_oracle_up_to_49() {
    for (p, d) in [
        (2u32, 2u32),
        (2, 3),
        (3, 2),
        (2, 4),
        (5, 2),
        (2, 5),
        (3, 3),
        (7, 2),
    ] {
        let f = Field::new(p, d, None).unwrap();
        let md = f.modulus().to_vec();
        for a in 0..f.order() {
            for b in 0..f.order() {
                let want = oracle_mul(
                    p as u64,
                    &md,
                    &decode(p as u64, d as usize, a as u64),
                    &decode(p as u64, d as usize, b as u64),
                );
                assert_eq!(f.mul(a, b), encode(p as u64, &want), "GF({p}^{d}) {a}*{b}");
            }
        }
    }
}

#[test]
fn encoding_is_a_bijection() {
    for (p, d) in [(2u32, 1u32), (7, 1), (2, 4), (3, 3), (5, 2), (7, 2)] {
        let f = Field::new(p, d, None).unwrap();
        for a in f.elements() {
            let ds = f.digits(a);
            assert!(ds.iter().all(|&c| c < p));
            assert_eq!(f.from_digits(&ds), a);
        }
    }
}

#[test]
fn field_make_examples() {
    let f5 = Field::new(5, 1, None).unwrap();
    assert_eq!(f5.order(), 5);
    let f4 = Field::new(2, 2, None).unwrap();
    assert_eq!(f4.modulus(), &[1, 1, 1]);
    assert_eq!(Field::new(4, 1, None).unwrap_err(), GfError::NotPrime(4));
    assert_eq!(
        Field::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
        GfError::NotIrreducible
    );
    assert!(matches!(
        Field::new(2, 3, Some(&[1, 1, 1])),
        Err(GfError::DegreeMismatch { .. })
    ));
}

#[test]
fn default_modulus_is_lexicographically_smallest() {
    // Brute-force oracle: irreducible means no factorization into two monic
    // factors of positive degree, checked by multiplying all pairs.
    for (p, d) in [(2u32, 3u32), (3, 2), (5, 2), (2, 4), (3, 3)] {
        let prime = Field::prime(p).unwrap();
        let monics = |deg: usize| -> Vec<Poly> {
            let count = (p as u64).pow(deg as u32);
            (0..count)
                .map(|i| {
                    let mut c = decode(p as u64, deg, i)
                        .iter()
                        .map(|&x| x as Elem)
                        .collect::<Vec<_>>();
                    c.push(1);
                    Poly::new(c)
                })
                .collect()
        };
        let mut reducible = std::collections::HashSet::new();
        for k in 1..d as usize {
            for a in monics(k) {
                for b in monics(d as usize - k) {
                    reducible.insert(a.mul(&prime, &b));
                }
            }
        }
        let count = (p as u64).pow(d);
        let best = (0..count)
            .map(|idx| {
                // idx read with c_0 as the most significant digit
                let mut c = decode(p as u64, d as usize, idx);
                c.reverse();
                let mut c: Vec<Elem> = c.iter().map(|&x| x as Elem).collect();
                c.push(1);
                Poly::new(c)
            })
            .find(|f| !reducible.contains(f))
            .unwrap();
        let f = Field::new(p, d, None).unwrap();
        assert_eq!(f.modulus(), best.coeffs(), "GF({p}^{d})");
    }
}

#[test]
fn primitive_elements() {
    assert_eq!(Field::new(5, 1, None).unwrap().primitive(), 2);
    assert_eq!(Field::new(2, 1, None).unwrap().primitive(), 1);
    assert_eq!(Field::new(7, 1, None).unwrap().primitive(), 3);
    for (p, d) in [(2u32, 4u32), (3, 2), (5, 2), (3, 3), (7, 1), (11, 1)] {
        let f = Field::new(p, d, None).unwrap();
        let g = f.primitive();
        assert_eq!(f.mult_order(g), f.order() - 1);
        // smallest: every smaller nonzero element has smaller order
        for a in 1..g {
            let mut x = a;
            let mut ord = 1;
            while x != 1 {
                x = f.mul(x, a);
                ord += 1;
            }
            assert!(ord < f.order() - 1);
        }
    }
}

#[test]
fn norms() {
    let f4 = Field::new(2, 2, None).unwrap();
    assert_eq!(f4.norm(1, 2).unwrap(), 1);
    assert_eq!(f4.norm(0, 2).unwrap(), 0);
    // ω = x is a root of x²+x+1; N(ω) = ω³ = 1
    assert_eq!(f4.norm(2, 2).unwrap(), 1);
    assert_eq!(f4.mul(2, f4.mul(2, 2)), 1);
    assert!(f4.norm(2, 3).is_err());
    // every norm lands in the subfield
    let f27 = Field::new(3, 3, None).unwrap();
    for t in f27.elements() {
        assert!(f27.norm(t, 3).unwrap() < 3);
    }
}

#[test]
fn towers_nest_encodings() {
    let f9 = Field::new(3, 2, None).unwrap();
    let f81 = Field::extension(&f9, 2, None).unwrap();
    assert_eq!(f81.order(), 81);
    assert_eq!(f81.absolute_degree(), 4);
    for a in f9.elements() {
        for b in f9.elements() {
            assert_eq!(f81.mul(a, b), f9.mul(a, b));
            assert_eq!(f81.add(a, b), f9.add(a, b));
        }
    }
    for t in f81.elements() {
        let n = f81.norm(t, 9).unwrap();
        assert!(f81.to_base(n).is_some());
        // frobenius fixes exactly the base field
        assert_eq!(f81.frobenius(t) == t, t < 9);
    }
}

#[test]
fn poly_roots_examples() {
    let f7 = Field::prime(7).unwrap();
    let g = Poly::new(vec![4, 0, 6, 1]);
    let f = Poly::from_roots(&f7, &[1, 2]).mul(&f7, &g);
    let (roots, cof) = f.roots(&f7);
    assert_eq!(roots, vec![1, 2]);
    assert_eq!(cof, g);
    assert!(g.is_irreducible(&f7));

    let xm = Poly::monomial(1, 4);
    let (roots, cof) = xm.roots(&f7);
    assert_eq!(roots, vec![0; 4]);
    assert_eq!(cof, Poly::one());

    let h = Poly::parse("4,1,0,0,0,1").unwrap();
    let (roots, cof) = h.roots(&f7);
    assert!(roots.is_empty());
    assert_eq!(cof, h);
    assert_eq!(h.to_text(), "4,1,0,0,0,1");
}

proptest! {
    #[test]
    fn roots_times_cofactor_reconstructs(coeffs in proptest::collection::vec(0u32..5, 1..8)) {
        let f5 = Field::prime(5).unwrap();
        let mut c = coeffs;
        c.push(1);
        let f = Poly::new(c);
        let (roots, cof) = f.roots(&f5);
        prop_assert_eq!(Poly::from_roots(&f5, &roots).mul(&f5, &cof), f);
        prop_assert!(f5.elements().all(|x| cof.eval(&f5, x) != 0));
    }

    #[test]
    fn div_rem_identity(a in proptest::collection::vec(0u32..9, 0..9), b in proptest::collection::vec(0u32..9, 1..5)) {
        let f9 = Field::new(3, 2, None).unwrap();
        let (a, mut b) = (Poly::new(a), b);
        b.push(1);
        let b = Poly::new(b);
        let (q, r) = a.div_rem(&f9, &b);
        prop_assert!(r.degree() < b.degree());
        prop_assert_eq!(q.mul(&f9, &b).add(&f9, &r), a);
    }
}
