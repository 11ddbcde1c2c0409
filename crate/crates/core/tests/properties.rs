use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use formring::exactalg::hom::ReduceMod;
use formring::exactalg::matrix;
use formring::pairs::{form_to_raw_pair, Perturbation};
use formring::ringmod::dual_pairing_matrix;
use formring::{
    build_module, build_ring, form_to_pair, normalize, pair_to_form, reconstruct_from_coefficients,
    ring_disc, validate_pair, ActionTable, BinaryForm, BinaryPair, Gl2, IntMatrix, Integers,
    MultTable,
};

fn form_of(c: &[i64]) -> BinaryForm<Integers> {
    BinaryForm::from_ints(c).unwrap()
}

fn coeffs(lo: usize, hi: usize, h: i64) -> impl Strategy<Value = Vec<i64>> {
    (lo..=hi).prop_flat_map(move |n| prop::collection::vec(-h..=h, n + 1))
}

fn unimodular() -> impl Strategy<Value = Gl2<BigInt>> {
    // products of swaps, shears and sign changes
    prop::collection::vec(0u8..4, 0..6).prop_map(|ops| {
        let r = Integers;
        ops.iter().fold(Gl2::identity(&r), |g, op| {
            let step = match op {
                0 => Gl2::swap(&r),
                1 => Gl2::shear(&r),
                2 => Gl2::new(1.into(), (-1).into(), 0.into(), 1.into()),
                _ => Gl2::new((-1).into(), 0.into(), 0.into(), 1.into()),
            };
            step.mul(&g, &r)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_tables_satisfy_axioms(c in coeffs(2, 6, 30)) {
        let f = form_of(&c);
        let t = build_ring(&f);
        prop_assert!(t.check().is_ok());
        for k in -1..f.degree() as i32 {
            prop_assert!(build_module(&f, k).unwrap().check(&t).is_ok(), "k = {}", k);
        }
    }

    #[test]
    fn discriminants_agree(c in coeffs(2, 6, 50)) {
        let f = form_of(&c);
        prop_assert_eq!(ring_disc(&build_ring(&f)).unwrap(), f.disc().unwrap());
    }

    #[test]
    fn gl2_action_composes(c in coeffs(2, 5, 20), g1 in unimodular(), g2 in unimodular(), twist in -2i32..=2) {
        let f = form_of(&c).with_twist(twist);
        let r = Integers;
        let lhs = f.act(&g1).unwrap().act(&g2).unwrap();
        let rhs = f.act(&g2.mul(&g1, &r)).unwrap();
        prop_assert!(lhs.same_as(&rhs));
    }

    #[test]
    fn discriminant_is_invariant(c in coeffs(2, 5, 20), g in unimodular()) {
        let f = form_of(&c);
        prop_assert_eq!(f.act(&g).unwrap().disc().unwrap(), f.disc().unwrap());
    }

    #[test]
    fn duality_is_identity(c in coeffs(2, 6, 20)) {
        let f = form_of(&c);
        for k in -1..f.degree() as i32 {
            prop_assert!(matrix::is_identity(&Integers, &dual_pairing_matrix(&f, k).unwrap()));
        }
    }

    #[test]
    fn base_change_commutes(c in coeffs(2, 5, 40), m in 2i64..=30) {
        let f = form_of(&c);
        let red = ReduceMod::new(m).unwrap();
        let fm = f.map(&red);
        prop_assert!(build_ring(&f).map(&red).equal(&build_ring(&fm)));
        for k in -1..f.degree() as i32 {
            prop_assert!(build_module(&f, k).unwrap().map(&red).equal(&build_module(&fm, k).unwrap()));
        }
    }

    #[test]
    fn pairs_round_trip(c in coeffs(3, 7, 25)) {
        let f = form_of(&c);
        let b = form_to_pair(&f).unwrap();
        prop_assert_eq!(&b.a, f.coeffs());
        prop_assert!(pair_to_form(&b.pair).unwrap().same_as(&f));
        let rebuilt = reconstruct_from_coefficients(&Integers, &b.a).unwrap();
        prop_assert_eq!(b.pair.first_difference(&rebuilt.pair), None);
    }

    #[test]
    fn normalization_ignores_lifts(c in coeffs(3, 6, 15), seed in prop::collection::vec(-9i64..=9, 20)) {
        let f = form_of(&c);
        let n = f.degree();
        let raw = form_to_raw_pair(&f).unwrap();
        let take = |off: usize, len: usize| -> Vec<BigInt> {
            (0..len).map(|i| BigInt::from(seed[(off + i) % seed.len()])).collect()
        };
        let moved = raw.relift(&take(0, n - 2), &take(7, n - 2), &take(13, n - 1)).unwrap();
        prop_assert!(normalize(&moved).unwrap().equal(&normalize(&raw).unwrap()));
        prop_assert!(pair_to_form(&moved).unwrap().same_as(&f));
    }

    #[test]
    fn criteria_agree_on_perturbations(
        c in coeffs(3, 6, 10),
        pick in (0usize..64, 0usize..64, 0usize..64),
        delta in prop_oneof![-3i64..=-1, 1i64..=3],
        on_phi in any::<bool>(),
    ) {
        let f = form_of(&c);
        let n = f.degree();
        let p = form_to_raw_pair(&f).unwrap();
        let kind = if on_phi {
            Perturbation::Phi { i: pick.0 % (n - 1), j: pick.1 % (n - 1) }
        } else {
            Perturbation::Action { i: 1 + pick.0 % (n - 1), s: pick.1 % n, t: pick.2 % n }
        };
        let q = p.perturbed(kind, &BigInt::from(delta)).unwrap();
        let (a, b) = formring::pairs::criteria_agree(&q).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn json_round_trips(c in coeffs(3, 5, 1000)) {
        let f = form_of(&c);
        let t = build_ring(&f);
        prop_assert!(MultTable::from_json(Integers, &t.to_json()).unwrap().equal(&t));
        let m = build_module(&f, 1).unwrap();
        prop_assert!(ActionTable::from_json(Integers, &m.to_json()).unwrap().equal(&m));
        let p = form_to_pair(&f).unwrap().pair;
        prop_assert!(BinaryPair::from_json(Integers, &p.to_json()).unwrap().equal(&p));
    }

    #[test]
    fn smith_form_is_equivalence_invariant(
        rows in prop::collection::vec(prop::collection::vec(-20i64..=20, 4), 3),
        g in unimodular(),
    ) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let a = IntMatrix::from_i64(&refs);
        let snf = a.smith_normal_form();
        prop_assert_eq!(snf.u.mul(&a).unwrap().mul(&snf.v).unwrap(), snf.d.clone());
        let inv = snf.invariant_factors();
        for w in inv.windows(2) {
            if !w[1].abs().eq(&BigInt::from(0)) {
                prop_assert!((w[1].abs() % w[0].abs()) == BigInt::from(0));
            }
        }
        // mixing the first two rows keeps the invariants
        let m = g.to_mat();
        let mut u = IntMatrix::identity(3);
        for i in 0..2 {
            for j in 0..2 {
                u.set(i, j, m[i][j].clone());
            }
        }
        let b = u.mul(&a).unwrap();
        let abs = |v: Vec<BigInt>| v.into_iter().map(|x| x.abs()).collect::<Vec<_>>();
        prop_assert_eq!(abs(b.smith_normal_form().invariant_factors()), abs(inv));
    }

    #[test]
    fn valid_pairs_validate(c in coeffs(3, 6, 20)) {
        let report = validate_pair(&form_to_raw_pair(&form_of(&c)).unwrap()).unwrap();
        prop_assert!(report.passes());
        prop_assert_eq!(report.exact, Some(true));
    }
}

#[test]
fn invertibility_matches_primitivity_on_small_forms() {
    use formring::{is_gorenstein, is_invertible_family};
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            for d in [-2i64, 2, 4] {
                let f = form_of(&[d, a * d, b * d, 2 * d]);
                if f.is_zero() {
                    continue;
                }
                let p = f.is_primitive().unwrap();
                assert_eq!(is_invertible_family(&f).unwrap(), p);
                assert_eq!(is_gorenstein(&f).unwrap(), p);
                let g = form_of(&[1, a, b, d]);
                assert!(is_gorenstein(&g).unwrap());
            }
        }
    }
}

#[test]
fn modular_forms_reduce_signs() {
    let f = form_of(&[-1, 3, -5, 7]);
    let red = ReduceMod::new(4).unwrap();
    let fm = f.map(&red);
    assert!(fm.coeffs().iter().all(|c| !c.is_negative()));
}
