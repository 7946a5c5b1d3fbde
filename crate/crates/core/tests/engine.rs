use hurwitz_core::algebra::scalar::{factorial, rat, Rational};
use hurwitz_core::algebra::series::{compose_with_tree, expand_y_to_w};
use hurwitz_core::algebra::VarKind;
use hurwitz_core::engine::{assemble_k, k11, theta_placements, Engine};
use hurwitz_core::formulas::f_from_c;
use hurwitz_core::oracle::c_count;
use hurwitz_core::{Partition, YPoly};
use num_bigint::BigInt;

/// `[x^alpha] Psi = f(alpha) alpha^alpha / alpha!`, with `f` from the
/// brute-force count.
fn oracle_x_coefficient(parts: &[u32], g: u32) -> Rational {
    let alpha = Partition::new(parts.to_vec()).unwrap();
    let f = f_from_c(&alpha, g, &c_count(&alpha, g).unwrap());
    let mut scale = Rational::from_integer(1.into());
    for &a in parts {
        scale *= Rational::new(num_traits::pow(BigInt::from(a), a as usize), factorial(a as u64));
    }
    f * scale
}

fn x_jet(psi: &YPoly, order: u32) -> hurwitz_core::RSeries {
    let w = expand_y_to_w(psi, order).unwrap();
    compose_with_tree(&w, order).unwrap()
}

#[test]
fn psi_1_1_x_expansion_matches_counts() {
    let mut e = Engine::new();
    let psi = e.compute_psi(1, 1).unwrap().poly.clone();
    let jet = x_jet(&psi, 6);
    assert_eq!(jet.coeff_of(&[2]), rat(1, 12));
    assert_eq!(jet.coeff_of(&[3]), rat(3, 8));
    for n in 1..=6u32 {
        assert_eq!(jet.coeff_of(&[n as u16]), oracle_x_coefficient(&[n], 1), "n={n}");
    }
}

#[test]
fn psi_2_1_x_expansion_matches_counts() {
    let mut e = Engine::new();
    let psi = e.compute_psi(2, 1).unwrap().poly.clone();
    let jet = x_jet(&psi, 6);
    for a in 1..=3u32 {
        for b in 1..=3u32 {
            let mut parts = vec![a, b];
            parts.sort_unstable_by(|x, y| y.cmp(x));
            assert_eq!(jet.coeff_of(&[a as u16, b as u16]), oracle_x_coefficient(&parts, 1), "({a},{b})");
        }
    }
}

#[test]
fn genus_one_seed() {
    let expected = YPoly::univariate(VarKind::Y, &[rat(1, 24), rat(0, 1), rat(0, 1), rat(-4, 24), rat(3, 24)]);
    assert_eq!(k11().unwrap(), expected);
    let e = Engine::new();
    assert_eq!(assemble_k(1, 1, &e).unwrap().poly, expected);
}

#[test]
fn right_hand_sides_are_symmetric_polynomials() {
    let mut e = Engine::new();
    e.compute_psi(3, 0).unwrap();
    e.compute_psi(1, 1).unwrap();
    let k = assemble_k(2, 1, &e).unwrap();
    assert!(k.poly.is_symmetric());
    assert_eq!(k.poly.arity(), 2);
    // Psi_1^(2) needs Psi_2^(1) and Psi_1^(1)
    assert!(assemble_k(1, 2, &e).is_err());
    e.compute_psi(2, 1).unwrap();
    assert!(assemble_k(1, 2, &e).unwrap().poly.is_symmetric());
}

#[test]
fn genus_two_single_part() {
    let mut e = Engine::new();
    let f = e.extract(1, 2).unwrap().f_e.clone();
    assert_eq!(f.coeff_of(&[4]), rat(5, 5760));
    assert_eq!(f.coeff_of(&[3]), rat(-12, 5760));
    assert_eq!(f.coeff_of(&[2]), rat(7, 5760));
    assert_eq!(f.len(), 3);
}

#[test]
fn theta_placement_counts() {
    assert_eq!(theta_placements(0, 2).len(), 2);
    assert_eq!(theta_placements(1, 3).len(), 6);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut first = Engine::with_cache_dir(dir.path());
    let f = first.extract(2, 1).unwrap().f_e.clone();
    let psi = first.cell(2, 1).unwrap().psi.clone();
    assert!(!first.cell(2, 1).unwrap().from_disk);
    assert_eq!(first.cached_on_disk(), vec![(1, 1), (2, 1), (3, 0)]);

    let mut second = Engine::with_cache_dir(dir.path());
    assert_eq!(second.extract(2, 1).unwrap().f_e, f);
    let cell = second.cell(2, 1).unwrap();
    assert!(cell.from_disk);
    assert_eq!(cell.psi, psi);
    second.verify_residual(2, 1).unwrap();

    assert_eq!(second.clear_cache().unwrap(), 3);
    assert!(second.cached_on_disk().is_empty());
}

#[test]
fn budget_refusal() {
    let mut e = Engine::new();
    e.set_max_degree(10);
    assert!(e.compute_psi(1, 1).is_ok());
    let err = e.compute_psi(2, 2).unwrap_err();
    assert!(err.to_string().contains("budget"), "{err}");
}
