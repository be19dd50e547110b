use perfbase_gf::{Elem, Field};
use perfbase_rmcode::*;
use perfbase_tensor3::{kruskal_bound, verify_base};
use proptest::prelude::*;

const GUARD: u64 = DISTANCE_GUARD;

fn singleton_holds(code: &RankCode, d: usize) -> bool {
    let (n, m) = (code.n(), code.m());
    code.k() + n.max(m) * (d - 1) <= n.max(m) * n.min(m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn vector_codes_obey_bounds(
        p in prop::sample::select(vec![2u32, 3]),
        m in 2usize..=3,
        n in 1usize..=3,
        k in 1usize..=2,
        seed in prop::collection::vec(any::<u32>(), 6),
    ) {
        let gamma = GammaBasis::over(&Field::prime(p).unwrap(), m).unwrap();
        let ext = gamma.ext();
        let gens: Vec<Vec<Elem>> = (0..k)
            .map(|i| (0..n).map(|j| seed[(i * n + j) % 6] % ext.order()).collect())
            .collect();
        let Ok(c) = VectorCode::new(ext, n, gens) else {
            return Ok(());
        };
        let code = gamma_expand_code(&c, &gamma).unwrap();
        prop_assert_eq!(code.k(), m * k);
        let d = code.distance(GUARD).unwrap();
        prop_assert!(singleton_holds(&code, d));
        prop_assert_eq!(is_mrd(&code, GUARD).unwrap(), code.k() + n.max(m) * (d - 1) == n.max(m) * n.min(m));

        let dual = dual_code(&code);
        prop_assert_eq!(dual.k() + code.k(), n * m);
        prop_assert_eq!(&dual_code(&dual), &code);
        if dual.k() > 0 {
            let dd = dual.distance(GUARD).unwrap();
            prop_assert!(singleton_holds(&dual, dd));
        }
    }

    #[test]
    fn twisted_gabidulin_is_mrd(
        p in prop::sample::select(vec![2u32, 3]),
        m in 2usize..=4,
        n_seed in 0usize..4,
        k_seed in 0usize..4,
        s in 1u32..=3,
        eta_seed in any::<u32>(),
    ) {
        let gamma = GammaBasis::over(&Field::prime(p).unwrap(), m).unwrap();
        let ext = gamma.ext();
        let n = 2 + n_seed % (m - 1);
        let k = 1 + k_seed % (n - 1);
        let alpha = gamma.generator().unwrap();
        let pts: Vec<Elem> = (0..n).map(|i| ext.pow(alpha, i as u64)).collect();
        let eta = eta_seed % ext.order();
        match gabidulin(ext, &pts, k, s, eta) {
            Ok(c) => {
                let code = gamma_expand_code(&c, &gamma).unwrap();
                if (p as u64).pow(code.k() as u32) <= 1 << 20 {
                    prop_assert_eq!(code.distance(GUARD).unwrap(), n - k + 1);
                    prop_assert!(is_mrd(&code, GUARD).unwrap());
                }
            }
            Err(RmError::NotCoprime { .. }) => prop_assert!(perfbase_gf::gcd_u64(s as u64, m as u64) != 1),
            Err(RmError::BadEta) => prop_assert!(eta != 0),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn power_witnesses_are_mtr_and_mds(
        q in prop::sample::select(vec![3u32, 4, 5, 7]),
        m in 2usize..=4,
        t_seed in 0usize..4,
    ) {
        let t = 1 + t_seed % m;
        let gamma = GammaBasis::over(&field_of_order(q).unwrap(), m).unwrap();
        match power_code_witness(&gamma, t) {
            Ok((code, witness)) => {
                prop_assert!(q as usize + 2 >= m + t);
                let d = code.distance(GUARD).unwrap();
                prop_assert_eq!(d, t);
                prop_assert_eq!(witness.len(), kruskal_bound(code.k(), d));
                prop_assert!(is_mtr(&code, &witness.members, GUARD).unwrap());
                let block = psi_block(&code, &witness.members).unwrap();
                prop_assert!(block.is_mds(GUARD).unwrap());
            }
            Err(RmError::FieldTooSmall { .. }) => prop_assert!((q as usize) + 2 < m + t),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}

/// Every admissible `(q, n, m, k, d)` with `q ∈ {5, 7}` and `n, m ≤ 4`.
#[test]
fn build_mtr_sweep() {
    let mut built = 0;
    for q in [5u32, 7] {
        for n in 1..=4usize {
            for m in 1..=4usize {
                for k in 1..=m {
                    for d in 1..=n.min(m) {
                        if (q as usize) + 2 < m + d {
                            continue;
                        }
                        let (code, witness) = build_mtr(q, n, m, k, d).unwrap();
                        assert_eq!((code.n(), code.m(), code.k()), (n, m, k));
                        assert_eq!(code.distance(GUARD).unwrap(), d, "{q} {n} {m} {k} {d}");
                        assert_eq!(witness.len(), k + d - 1);
                        assert!(verify_base(&witness).unwrap().passed());
                        assert!(is_mtr(&code, &witness.members, GUARD).unwrap());
                        built += 1;
                    }
                }
            }
        }
    }
    assert!(built > 100);
}
