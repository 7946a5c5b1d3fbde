use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use hurwitz_core::algebra::operators::{apply_wdw, div_by_difference};
use hurwitz_core::algebra::scalar::{binomial, rat, Rational};
use hurwitz_core::algebra::series::{expand_y_to_w, fit_y_poly, DegreeBound};
use hurwitz_core::algebra::symmetric::{elementary_to_symmetric, evaluate_e_poly, symmetric_to_elementary};
use hurwitz_core::algebra::{Monomial, SparsePoly, VarKind};
use hurwitz_core::engine::pde_operator;
use hurwitz_core::formulas::{f_from_c, hurwitz};
use hurwitz_core::oracle::dfs::dfs_count;
use hurwitz_core::oracle::table::{all_counts, exponentiate, transitive_counts};
use hurwitz_core::{Partition, YPoly};

fn y_poly(arity: usize, max_exp: u16) -> impl Strategy<Value = YPoly> {
    proptest::collection::vec((proptest::collection::vec(0..=max_exp, arity), -20i64..20, 1i64..7), 0..8).prop_map(
        move |terms| {
            let mut p = YPoly::zero(VarKind::Y, arity);
            for (exps, n, d) in terms {
                p.add_term(Monomial::from_slice(&exps), rat(n, d));
            }
            p
        },
    )
}

fn e_poly(arity: usize) -> impl Strategy<Value = SparsePoly<Rational>> {
    proptest::collection::vec((proptest::collection::vec(0u16..3, arity), -9i64..9), 0..6).prop_map(move |terms| {
        let mut p = SparsePoly::zero(VarKind::E, arity);
        for (exps, n) in terms {
            p.add_term(Monomial::from_slice(&exps), rat(n, 1));
        }
        p
    })
}

fn partition(max_n: u32) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn expanding_and_fitting_recovers_the_polynomial(p in y_poly(2, 4)) {
        let jet = expand_y_to_w(&p, 6).unwrap();
        let back = fit_y_poly(&jet, 2, DegreeBound::PerVariable(4)).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn division_by_a_difference_inverts_multiplication(p in y_poly(3, 3)) {
        let diff = &YPoly::var(VarKind::Y, 3, 0) - &YPoly::var(VarKind::Y, 3, 2);
        let q = div_by_difference(&(&p * &diff), 0, 2).unwrap();
        prop_assert_eq!(q, p);
    }

    #[test]
    fn pde_operator_matches_the_euler_operator(p in y_poly(2, 4), c in 1i64..6) {
        let mut expected = apply_wdw(&p, 0);
        expected.add_assign_poly(&apply_wdw(&p, 1));
        expected.add_scaled(&p, &Rational::from_integer(c.into()));
        prop_assert_eq!(pde_operator(&p, c), expected);
    }

    #[test]
    fn elementary_basis_round_trip(p in e_poly(3)) {
        let sym = elementary_to_symmetric(&p);
        prop_assert!(sym.is_symmetric());
        prop_assert_eq!(symmetric_to_elementary(&sym).unwrap(), p);
    }

    #[test]
    fn partitions_parse_their_own_display(alpha in partition(9)) {
        let text = alpha.dashed();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), alpha.clone());
        let sizes: u32 = alpha.parts().iter().sum();
        prop_assert_eq!(sizes, alpha.n());
    }

    #[test]
    fn counts_and_f_invert(alpha in partition(7), g in 0u32..3, c in 0u64..10_000) {
        let c = BigInt::from(c);
        let f = f_from_c(&alpha, g, &c);
        prop_assert_eq!(hurwitz(&alpha, g, f).unwrap().c, c);
    }

    #[test]
    fn e_polynomials_evaluate_like_their_symmetric_expansion(p in e_poly(2), a in 1i64..6, b in 1i64..6) {
        let point = [rat(a, 1), rat(b, 1)];
        prop_assert_eq!(evaluate_e_poly(&p, &point), elementary_to_symmetric(&p).evaluate(&point));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dp_agrees_with_brute_force(alpha in partition(4), j in 0u32..7) {
        let all = all_counts(4, 6).unwrap();
        let transitive = transitive_counts(&all).unwrap();
        let n = alpha.n();
        prop_assert_eq!(all.get(n, j, &alpha).unwrap(), &dfs_count(&alpha, j, false).unwrap());
        prop_assert_eq!(transitive.get(n, j, &alpha).unwrap(), &dfs_count(&alpha, j, true).unwrap());
    }
}

#[test]
fn factorization_counts_keep_mass_and_parity() {
    let all = all_counts(6, 8).unwrap();
    for n in 1..=6u32 {
        for j in 0..=8u32 {
            let mut mass = BigInt::zero();
            for alpha in Partition::all(n) {
                let c = all.get(n, j, &alpha).unwrap();
                // a product of j transpositions has sign (-1)^j
                if (n - alpha.len() as u32 + j) % 2 == 1 {
                    assert!(c.is_zero(), "n={n} j={j} {alpha}");
                }
                mass += c * alpha.class_size();
            }
            assert_eq!(mass, num_traits::pow(binomial(n as u64, 2), j as usize), "n={n} j={j}");
        }
    }
}

#[test]
fn log_and_exp_of_the_factorization_series_are_inverse() {
    let all = all_counts(6, 8).unwrap();
    let back = exponentiate(&transitive_counts(&all).unwrap()).unwrap();
    assert_eq!(back.entries, all.entries);
}
