use perfbase_construct::y_n;
use perfbase_exactla::{FqMatrix, MatrixSpace};
use perfbase_gf::{Elem, Field};
use perfbase_rmcode::*;
use perfbase_tensor3::{kruskal_bound, min_rank, verify_base, BaseCandidate, DEFAULT_GUARD};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GUARD: u64 = DISTANCE_GUARD;

fn fp(p: u32) -> Field {
    Field::prime(p).unwrap()
}

fn ints(field: &Field, rows: &[&[i64]]) -> FqMatrix {
    FqMatrix::from_ints(field, rows)
}

fn powers(ext: &Field, theta: Elem, n: usize) -> Vec<Elem> {
    (0..n).map(|i| ext.pow(theta, i as u64)).collect()
}

fn one_dim(gamma: &GammaBasis, v: Vec<Elem>) -> RankCode {
    let code = VectorCode::new(gamma.ext(), v.len(), vec![v]).unwrap();
    gamma_expand_code(&code, gamma).unwrap()
}

#[test]
fn power_vectors_expand_to_companion_rows() {
    for (p, m) in [(5u32, 4usize), (3, 3), (2, 5), (7, 2)] {
        let gamma = GammaBasis::over(&fp(p), m).unwrap();
        let ext = gamma.ext();
        let alpha = gamma.generator().unwrap();
        let spec = gamma.companion().unwrap();
        for s in 1..=m {
            for i in 0..2 * m {
                let v: Vec<Elem> = powers(ext, alpha, s)
                    .into_iter()
                    .map(|x| ext.mul(x, ext.pow(alpha, i as u64)))
                    .collect();
                let expected = y_n(gamma.base(), s, m).mul(&spec.power(i as i64).unwrap());
                assert_eq!(gamma_expand(&v, &gamma).unwrap(), expected);
            }
        }
    }
}

#[test]
fn zero_vector_expands_to_zero() {
    let gamma = GammaBasis::over(&fp(3), 3).unwrap();
    let z = gamma_expand(&[0, 0], &gamma).unwrap();
    assert!(z.is_zero());
    assert_eq!(z.shape(), (2, 3));
}

#[test]
fn coordinates_round_trip() {
    let f9 = Field::new(3, 2, None).unwrap();
    let gamma = GammaBasis::over(&f9, 2).unwrap();
    assert_eq!(gamma.base(), &f9);
    for theta in gamma.ext().elements() {
        assert_eq!(gamma.element(&gamma.coords(theta)), theta);
    }
    let alpha = gamma.generator().unwrap();
    let mult = gamma.mult_matrix(alpha);
    assert_eq!(mult, gamma.companion().unwrap().matrix());
}

#[test]
fn one_dim_code_over_f27() {
    let gamma = GammaBasis::over(&fp(3), 3).unwrap();
    let ext = gamma.ext();
    let v = powers(ext, gamma.generator().unwrap(), 3);
    let code = one_dim(&gamma, v.clone());
    assert_eq!(code.k(), 3);
    // Independent check: every nonzero multiple expands to rank 3.
    for theta in ext.nonzero() {
        let w: Vec<Elem> = v.iter().map(|&x| ext.mul(theta, x)).collect();
        assert_eq!(gamma_expand(&w, &gamma).unwrap().rank(), 3);
    }
    assert_eq!(code.distance(GUARD).unwrap(), 3);
    assert_eq!(code.cached_distance(), Some(3));

    let dual = dual_code(&code);
    assert_eq!(dual.k(), 6);
    assert_eq!(min_rank_distance(&dual, GUARD).unwrap(), 2);
    assert!(is_mrd(&code, GUARD).unwrap());
    assert!(is_mrd(&dual, GUARD).unwrap());
}

#[test]
fn gabidulin_one_dim_is_mrd() {
    for (p, m, n) in [(3u32, 3usize, 3usize), (2, 3, 2), (2, 4, 3), (5, 2, 2)] {
        let gamma = GammaBasis::over(&fp(p), m).unwrap();
        let ext = gamma.ext();
        let pts = powers(ext, gamma.generator().unwrap(), n);
        let c = gabidulin(ext, &pts, 1, 1, 0).unwrap();
        assert_eq!(c.dim(), 1);
        let code = gamma_expand_code(&c, &gamma).unwrap();
        assert_eq!(code.k(), m);
        assert_eq!(code.distance(GUARD).unwrap(), n);
    }
}

#[test]
fn gabidulin_f8_length_two_by_enumeration() {
    let gamma = GammaBasis::over(&fp(2), 3).unwrap();
    let ext = gamma.ext();
    let pts = powers(ext, gamma.generator().unwrap(), 2);
    let c = gabidulin(ext, &pts, 1, 1, 0).unwrap();
    let g = &c.generators()[0];
    let ranks: Vec<usize> = ext
        .nonzero()
        .map(|theta| {
            let w: Vec<Elem> = g.iter().map(|&x| ext.mul(theta, x)).collect();
            gamma_expand(&w, &gamma).unwrap().rank()
        })
        .collect();
    assert_eq!(ranks.len(), 7);
    assert!(ranks.iter().all(|&r| r == 2));
    let code = gamma_expand_code(&c, &gamma).unwrap();
    assert_eq!(code.distance(GUARD).unwrap(), 2);
}

#[test]
fn gabidulin_parameter_errors() {
    let gamma = GammaBasis::over(&fp(3), 3).unwrap();
    let ext = gamma.ext();
    let pts = powers(ext, gamma.generator().unwrap(), 3);
    // m·k = 3 is odd, so eta with norm -1 is rejected.
    let bad_eta = ext
        .nonzero()
        .find(|&e| ext.norm(e, 3).unwrap() == ext.neg(1))
        .unwrap();
    assert_eq!(gabidulin(ext, &pts, 1, 1, bad_eta), Err(RmError::BadEta));
    assert!(gabidulin(ext, &pts, 1, 1, 1).is_ok());
    assert_eq!(
        gabidulin(ext, &pts, 1, 3, 0),
        Err(RmError::NotCoprime { s: 3, m: 3 })
    );
    assert_eq!(
        gabidulin(ext, &[1, 2, 3], 1, 1, 0),
        Err(RmError::DependentBasis)
    );
    assert!(matches!(
        gabidulin(ext, &pts, 3, 1, 0),
        Err(RmError::BadParameter(_))
    ));
    assert!(matches!(
        gabidulin(&fp(3), &[1, 2], 1, 1, 0),
        Err(RmError::NotAnExtension(_))
    ));
}

#[test]
fn twisted_gabidulin_codes_are_mrd() {
    let gamma = GammaBasis::over(&fp(3), 3).unwrap();
    let ext = gamma.ext();
    let pts = powers(ext, gamma.generator().unwrap(), 3);
    let mut tried = 0;
    for eta in ext.elements().take(8) {
        for (k, s) in [(1usize, 1u32), (2, 1), (2, 2), (1, 2)] {
            let Ok(c) = gabidulin(ext, &pts, k, s, eta) else {
                continue;
            };
            let code = gamma_expand_code(&c, &gamma).unwrap();
            assert_eq!(code.k(), 3 * k);
            assert_eq!(
                code.distance(GUARD).unwrap(),
                3 - k + 1,
                "eta={eta} k={k} s={s}"
            );
            assert!(is_mrd(&code, GUARD).unwrap());
            tried += 1;
        }
    }
    assert!(tried >= 12, "{tried}");
}

#[test]
fn linearized_eval_matches_powering() {
    let gamma = GammaBasis::over(&fp(2), 4).unwrap();
    let ext = gamma.ext();
    let f = LinearizedPoly::new(vec![3, 0, 7], 3);
    assert_eq!(f.exponents(2), vec![1, 8, 64]);
    for x in ext.elements() {
        let direct = ext.add(ext.mul(3, x), ext.mul(7, ext.pow(x, 64)));
        assert_eq!(f.eval(ext, x), direct);
    }
}

#[test]
fn zero_and_full_codes() {
    let f3 = fp(3);
    let zero = RankCode::new(MatrixSpace::zero(&f3, 2, 3));
    assert_eq!(zero.distance(GUARD).unwrap(), 3);
    let full = RankCode::new(MatrixSpace::full(&f3, 2, 3));
    assert_eq!(full.distance(GUARD).unwrap(), 1);
    assert!(is_mrd(&full, GUARD).unwrap());
    let units: Vec<FqMatrix> = (0..2)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| FqMatrix::unit(&f3, 2, 3, i, j))
        .collect();
    assert!(is_mtr(&full, &units, GUARD).unwrap());
    assert!(!is_mtr(&full, &units[1..], GUARD).unwrap());
    assert_eq!(dual_code(&zero), full);
    assert!(matches!(
        is_mtr(&full, &[FqMatrix::identity(&f3, 3)], GUARD),
        Err(RmError::InvalidWitness(_))
    ));
}

#[test]
fn guard_is_enforced() {
    let f5 = fp(5);
    let full = RankCode::new(MatrixSpace::full(&f5, 3, 3));
    assert_eq!(
        full.distance(1000),
        Err(RmError::GuardExceeded { guard: 1000 })
    );
}

#[test]
fn power_code_witness_sizes() {
    // (p, m, t): the last two need the point at infinity.
    for (p, m, t) in [
        (7u32, 3usize, 3usize),
        (5, 4, 2),
        (5, 4, 3),
        (3, 3, 2),
        (2, 2, 2),
    ] {
        let gamma = GammaBasis::over(&fp(p), m).unwrap();
        let (code, witness) = power_code_witness(&gamma, t).unwrap();
        assert_eq!(witness.len(), m + t - 1);
        assert_eq!(code.k(), m);
        assert!(verify_base(&witness).unwrap().passed());
        assert!(is_mtr(&code, &witness.members, GUARD).unwrap());
    }
    let gamma = GammaBasis::over(&fp(3), 4).unwrap();
    assert_eq!(
        power_code_witness(&gamma, 3).unwrap_err(),
        RmError::FieldTooSmall {
            needed: 5,
            order: 3
        }
    );
}

#[test]
fn dual_gabidulin_table_rows() {
    for (q, n, m, size) in [
        (3u32, 3usize, 3usize, 7usize),
        (5, 3, 4, 9),
        (3, 2, 3, 4),
        (4, 3, 4, 9),
    ] {
        let gamma = GammaBasis::over(&field_of_order(q).unwrap(), m).unwrap();
        let (code, res) = dual_gabidulin_mtr_base(&gamma, n).unwrap();
        assert_eq!(res.len(), size);
        assert_eq!(code.k(), m * (n - 1));
        let d = code.distance(GUARD).unwrap();
        assert_eq!(d, 2);
        assert_eq!(kruskal_bound(code.k(), d), size);
        assert!(is_mtr(&code, res.members(), GUARD).unwrap());
    }
    let gamma = GammaBasis::over(&fp(3), 4).unwrap();
    assert!(matches!(
        dual_gabidulin_mtr_base(&gamma, 3),
        Err(RmError::FieldTooSmall {
            needed: 4,
            order: 3
        })
    ));
}

#[test]
fn extension_by_zero_rows() {
    let f5 = fp(5);
    let gamma = GammaBasis::over(&f5, 3).unwrap();
    let (_, witness) = power_code_witness(&gamma, 2).unwrap();
    let ext = extend_base_lindep(&witness, &FqMatrix::zeros(&f5, 2, 2)).unwrap();
    for (a, b) in witness.members.iter().zip(&ext.members) {
        assert_eq!(b.top_rows(2), *a);
        assert!(b.submatrix(2, 0, 2, 3).is_zero());
    }
    assert!(verify_base(&ext).unwrap().passed());
    assert!(extend_base_lindep(&witness, &FqMatrix::zeros(&f5, 1, 3)).is_err());
}

/// `F_5[α]` with `α⁴ = α³·0 − 4α² − 4α − 2`, the 3-row power code and its
/// extension by the row `4·r_1 + 3·r_2 + 2·r_3`.
#[test]
fn worked_extension_f5_m4() {
    let f5 = fp(5);
    let ext = Field::extension(&f5, 4, Some(&[2, 4, 4, 0, 1])).unwrap();
    let alpha = 5;
    let gamma = GammaBasis::power_basis(&ext, alpha).unwrap();
    assert_eq!(gamma.companion().unwrap().bottom(), &[3, 1, 1, 0]);

    let listed: [[[i64; 4]; 3]; 6] = [
        [[4, 2, 0, 1], [3, 4, 0, 2], [1, 3, 0, 4]],
        [[1, 1, 0, 1], [3, 3, 0, 3], [4, 4, 0, 4]],
        [[3, 0, 2, 4], [2, 0, 3, 1], [3, 0, 2, 4]],
        [[2, 3, 3, 4], [2, 3, 3, 4], [2, 3, 3, 4]],
        [[3, 3, 4, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 2, 1, 1]],
    ];
    let extra_rows: [[i64; 4]; 6] = [
        [2, 1, 0, 3],
        [1, 1, 0, 1],
        [4, 0, 1, 2],
        [3, 2, 2, 1],
        [2, 1, 1, 0],
        [0, 4, 2, 2],
    ];
    let to_mat = |rows: &[[i64; 4]; 3]| {
        let r: Vec<&[i64]> = rows.iter().map(|x| &x[..]).collect();
        ints(&f5, &r)
    };
    let short_code = one_dim(&gamma, powers(&ext, alpha, 3));
    let n_row = ext.from_digits(&[4, 3, 2, 0]);
    let mut long_v = powers(&ext, alpha, 3);
    long_v.push(n_row);
    let long_code = one_dim(&gamma, long_v);
    let lambdas = ints(&f5, &[&[4, 3, 2]]);

    let as_listed = BaseCandidate::new(
        listed.iter().map(to_mat).collect(),
        short_code.space().clone(),
    );
    let extended = extend_base_lindep(&as_listed, &lambdas).unwrap();
    assert_eq!(extended.target, *long_code.space());
    for (i, (a, row)) in extended.members.iter().zip(&extra_rows).enumerate() {
        let expected: Vec<Elem> = row.iter().map(|&x| x as Elem).collect();
        assert_eq!(a.top_rows(3), to_mat(&listed[i]));
        if i == 4 {
            // 4·(3,3,4,0) = (2,2,1,0).
            assert_eq!(a.row(3), &[2, 2, 1, 0]);
            assert_ne!(a.row(3), &expected[..]);
        } else {
            assert_eq!(a.row(3), &expected[..]);
        }
    }
    // As listed, the six members miss one target direction.
    let report = verify_base(&as_listed).unwrap();
    assert!(report.rank_one && report.independent && !report.contains_target);

    // With first row (3,4,4,0) in the fifth member everything is consistent,
    // including the listed extra row.
    let mut fixed = listed;
    fixed[4][0] = [3, 4, 4, 0];
    let fixed_base = BaseCandidate::new(
        fixed.iter().map(to_mat).collect(),
        short_code.space().clone(),
    );
    assert!(verify_base(&fixed_base).unwrap().passed());
    let fixed_ext = extend_base_lindep(&fixed_base, &lambdas).unwrap();
    assert!(verify_base(&fixed_ext).unwrap().passed());
    for (a, row) in fixed_ext.members.iter().zip(&extra_rows) {
        let expected: Vec<Elem> = row.iter().map(|&x| x as Elem).collect();
        assert_eq!(a.row(3), &expected[..]);
    }
    // Both codes have k = 4 and d = 3, so tensor rank is at least 6 for
    // each, and the six members give equality.
    for code in [&short_code, &long_code] {
        assert_eq!(code.k(), 4);
        assert_eq!(min_rank(code.space(), DEFAULT_GUARD).unwrap(), 3);
        assert_eq!(kruskal_bound(code.k(), 3), 6);
    }
    assert!(is_mtr(&long_code, &fixed_ext.members, GUARD).unwrap());
}

#[test]
fn two_dim_bounds() {
    for (p, m) in [(7u32, 3usize), (5, 4)] {
        let gamma = GammaBasis::over(&fp(p), m).unwrap();
        let ext = gamma.ext();
        let pts = powers(ext, gamma.generator().unwrap(), m);
        let g = gabidulin(ext, &pts, 2, 1, 0).unwrap();
        let res = two_dim_bound(&gamma, g.generators()).unwrap();
        assert_eq!((res.lower, res.upper), (3 * m - 2, 4 * m - 4), "m={m}");
        assert_eq!(res.code.k(), 2 * m);
        assert!(verify_base(&res.witness).unwrap().passed());
        assert_eq!(res.code.distance(GUARD).unwrap(), m - 1);
    }
}

#[test]
fn two_dim_degenerate_falls_back() {
    let gamma = GammaBasis::over(&fp(7), 3).unwrap();
    let ext = gamma.ext();
    let a = gamma.generator().unwrap();
    let v = vec![1, a, ext.mul(a, a)];
    let w: Vec<Elem> = v.iter().map(|&x| ext.mul(3, x)).collect();
    let res = two_dim_bound(&gamma, &[v, w]).unwrap();
    assert_eq!((res.lower, res.upper), (5, 5));
    assert!(verify_base(&res.witness).unwrap().passed());

    let small = GammaBasis::over(&fp(2), 3).unwrap();
    assert!(matches!(
        two_dim_bound(&small, &[vec![1, 0, 0], vec![0, 1, 0]]),
        Err(RmError::FieldTooSmall { .. })
    ));
}

#[test]
fn one_dim_witness_for_twisted_spans() {
    let gamma = GammaBasis::over(&fp(5), 3).unwrap();
    let ext = gamma.ext();
    let a = gamma.generator().unwrap();
    let lambda = ext.pow(a, 17);
    // λ·(1, α^q, α^{2q}) with an extra dependent coordinate.
    let v = vec![
        lambda,
        ext.mul(lambda, ext.frobenius(a)),
        ext.mul(lambda, ext.frobenius(ext.mul(a, a))),
        ext.mul(2, lambda),
    ];
    let (code, witness) = one_dim_witness(&gamma, &v).unwrap();
    assert_eq!(witness.len(), 5);
    assert!(is_mtr(&code, &witness.members, GUARD).unwrap());
}

#[test]
fn psi_block_examples() {
    let f3 = fp(3);
    let full = RankCode::new(MatrixSpace::full(&f3, 2, 2));
    let units: Vec<FqMatrix> = (0..4)
        .map(|t| FqMatrix::unit(&f3, 2, 2, t / 2, t % 2))
        .collect();
    let block = psi_block(&full, &units).unwrap();
    assert_eq!(block.generator(), &FqMatrix::identity(&f3, 4));

    let gamma = GammaBasis::over(&f3, 3).unwrap();
    let (code, res) = dual_gabidulin_mtr_base(&gamma, 3).unwrap();
    let block = psi_block(&code, res.members()).unwrap();
    assert_eq!((block.len(), block.k()), (7, 6));
    assert_eq!(min_hamming_distance(&block, GUARD).unwrap(), 2);
    assert!(block.is_mds(GUARD).unwrap());

    let (code, witness) = power_code_witness(&GammaBasis::over(&fp(5), 3).unwrap(), 3).unwrap();
    let block = psi_block(&code, &witness.members).unwrap();
    assert_eq!(block.distance(GUARD).unwrap(), 3);
    assert!(block.is_mds(GUARD).unwrap());

    assert!(matches!(
        psi_block(&code, &witness.members[1..]),
        Err(RmError::NotABase(_))
    ));
}

#[test]
fn shortening_cases() {
    let gamma = GammaBasis::over(&fp(7), 3).unwrap();
    let (code, witness) = power_code_witness(&gamma, 3).unwrap();
    let all: Vec<usize> = (0..5).collect();
    match shorten_mtr(&code, &witness.members, &all).unwrap() {
        Shortened::Code {
            code: c,
            witness: w,
        } => {
            assert_eq!(c, code);
            assert_eq!(w.len(), 5);
        }
        Shortened::Trivial => panic!("expected the full code"),
    }
    assert_eq!(
        shorten_mtr(&code, &witness.members, &[0, 3]).unwrap(),
        Shortened::Trivial
    );
    match shorten_mtr(&code, &witness.members, &[4, 1, 2]).unwrap() {
        Shortened::Code {
            code: c,
            witness: w,
        } => {
            assert_eq!(c.k(), 1);
            assert_eq!(c.distance(GUARD).unwrap(), 3);
            assert!(is_mtr(&c, &w.members, GUARD).unwrap());
        }
        Shortened::Trivial => panic!("expected a 1-dimensional code"),
    }
    assert!(matches!(
        shorten_mtr(&code, &witness.members, &[0, 0, 1]),
        Err(RmError::BadSubset(_))
    ));
    assert!(matches!(
        shorten_mtr(&code, &witness.members, &[9]),
        Err(RmError::BadSubset(_))
    ));
    assert!(matches!(
        shorten_mtr(&code, &witness.members[..4], &[0]),
        Err(RmError::InvalidWitness(_))
    ));
}

#[test]
fn build_mtr_examples() {
    let (code, witness) = build_mtr(7, 3, 3, 2, 3).unwrap();
    assert_eq!((code.n(), code.m(), code.k()), (3, 3, 2));
    assert_eq!(code.distance(GUARD).unwrap(), 3);
    assert_eq!(witness.len(), 4);
    assert!(is_mtr(&code, &witness.members, GUARD).unwrap());

    let (code, witness) = build_mtr(5, 4, 3, 2, 1).unwrap();
    assert_eq!((code.k(), witness.len()), (2, 2));
    assert!(is_mtr(&code, &witness.members, GUARD).unwrap());

    // k = m, d = n: the full power code.
    let (code, witness) = build_mtr(5, 3, 4, 4, 3).unwrap();
    assert_eq!(witness.len(), 4 + 3 - 1);
    let gamma = GammaBasis::over(&fp(5), 4).unwrap();
    assert_eq!(code, power_code_witness(&gamma, 3).unwrap().0);

    // Zero rows appended below a 2-row code.
    let (code, _) = build_mtr(5, 4, 3, 3, 2).unwrap();
    assert_eq!((code.n(), code.distance(GUARD).unwrap()), (4, 2));

    for bad in [
        (5, 3, 3, 0, 2),
        (5, 3, 3, 4, 2),
        (5, 3, 3, 2, 4),
        (3, 4, 4, 2, 3),
        (5, 4, 2, 1, 3),
    ] {
        assert!(matches!(
            build_mtr(bad.0, bad.1, bad.2, bad.3, bad.4),
            Err(RmError::ParametersOutOfRange(_))
        ));
    }
    assert!(matches!(
        build_mtr(6, 2, 2, 1, 2),
        Err(RmError::BadParameter(_))
    ));
}

#[test]
fn expansion_is_injective_and_scales_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let gamma = GammaBasis::over(&fp(3), 4).unwrap();
    let ext = gamma.ext();
    let mut seen = std::collections::HashMap::new();
    for _ in 0..200 {
        let v: Vec<Elem> = (0..3).map(|_| rng.gen_range(0..ext.order())).collect();
        let img = gamma_expand(&v, &gamma).unwrap();
        if let Some(prev) = seen.insert(img.clone(), v.clone()) {
            assert_eq!(prev, v);
        }
        // Additivity.
        let w: Vec<Elem> = (0..3).map(|_| rng.gen_range(0..ext.order())).collect();
        let sum: Vec<Elem> = v.iter().zip(&w).map(|(&a, &b)| ext.add(a, b)).collect();
        assert_eq!(
            gamma_expand(&sum, &gamma).unwrap(),
            img.add(&gamma_expand(&w, &gamma).unwrap())
        );
    }
    for k in 1..=3 {
        let gens: Vec<Vec<Elem>> = (0..k)
            .map(|i| {
                (0..3)
                    .map(|j| ((i == j) as Elem) + if j == 2 { 5 } else { 0 })
                    .collect()
            })
            .collect();
        let c = VectorCode::new(ext, 3, gens).unwrap();
        assert_eq!(gamma_expand_code(&c, &gamma).unwrap().k(), 4 * k);
    }
    let theta = 7;
    assert_eq!(
        VectorCode::new(ext, 2, vec![vec![1, 2], vec![theta, ext.mul(theta, 2)]]).err(),
        Some(RmError::DependentGenerators)
    );
}

#[test]
fn distance_is_basis_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, m) in [(2u32, 3usize), (3, 3), (2, 4)] {
        let power = GammaBasis::over(&fp(p), m).unwrap();
        let ext = power.ext().clone();
        let other = loop {
            let elems: Vec<Elem> = (0..m).map(|_| rng.gen_range(1..ext.order())).collect();
            if let Ok(b) = GammaBasis::new(&ext, elems) {
                break b;
            }
        };
        for n in 2..=m {
            for k in 1..n {
                let gens: Vec<Vec<Elem>> = (0..k)
                    .map(|_| (0..n).map(|_| rng.gen_range(0..ext.order())).collect())
                    .collect();
                let Ok(c) = VectorCode::new(&ext, n, gens) else {
                    continue;
                };
                let d1 = gamma_expand_code(&c, &power)
                    .unwrap()
                    .distance(GUARD)
                    .unwrap();
                let d2 = gamma_expand_code(&c, &other)
                    .unwrap()
                    .distance(GUARD)
                    .unwrap();
                assert_eq!(d1, d2);
            }
        }
    }
    let f3 = fp(3);
    let wrong = GammaBasis::over(&f3, 2).unwrap();
    let c = VectorCode::new(GammaBasis::over(&f3, 3).unwrap().ext(), 1, vec![vec![1]]).unwrap();
    assert_eq!(gamma_expand_code(&c, &wrong), Err(RmError::FieldMismatch));
}

#[test]
fn mrd_duality_small_instances() {
    let mut count = 0;
    for (p, m) in [(2u32, 2usize), (2, 3), (3, 2), (3, 3)] {
        let gamma = GammaBasis::over(&fp(p), m).unwrap();
        let ext = gamma.ext();
        let pts = powers(ext, gamma.generator().unwrap(), m);
        for n in 2..=m {
            if n * m > 9 {
                continue;
            }
            for k in 1..n {
                let c = gabidulin(ext, &pts[..n], k, 1, 0).unwrap();
                let code = gamma_expand_code(&c, &gamma).unwrap();
                let dual = dual_code(&code);
                assert!(is_mrd(&code, GUARD).unwrap());
                assert!(is_mrd(&dual, GUARD).unwrap());
                assert_eq!(dual_code(&dual), code);
                count += 1;
            }
        }
    }
    assert!(count >= 4);
}
