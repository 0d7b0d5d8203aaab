//! Property tests: backend rank agreement on rational matrices, subspace
//! lattice dimension counting, projection behavior, and the structural
//! identities of the exterior operations on random data.

use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use skewprol::combin::binomial;
use skewprol::exterior::{contract_adjoint, flat, form_action, sharp, KForm};
use skewprol::linalg::{
    exact_rank, rank_nullspace, rat, RationalMap, Subspace,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn float_rank_matches_exact_rank_on_rationals(
        (rows, cols, data) in (1usize..6, 1usize..6)
            .prop_flat_map(|(r, c)| {
                proptest::collection::vec((-9i64..10, 1i64..4), r * c)
                    .prop_map(move |d| (r, c, d))
            })
    ) {
        let exact = RationalMap::from_rows(
            (0..rows)
                .map(|i| (0..cols).map(|j| rat(data[i * cols + j].0, data[i * cols + j].1)).collect())
                .collect(),
        );
        let dense = exact.to_dense();
        let (r_float, kernel) = rank_nullspace(&dense, 1e-9).unwrap();
        let r_exact = exact_rank(&exact);
        prop_assert_eq!(r_float, r_exact);
        prop_assert_eq!(r_float + kernel.dim(), cols);
        // kernel vectors actually lie in the kernel
        for v in kernel.basis_vectors() {
            let img = &dense * &v;
            prop_assert!(img.norm() <= 1e-9 * dense.norm().max(1.0));
        }
    }

    #[test]
    fn subspace_dimension_count(
        a in proptest::collection::vec(proptest::collection::vec(-5.0f64..5.0, 6), 1..5),
        b in proptest::collection::vec(proptest::collection::vec(-5.0f64..5.0, 6), 1..5),
    ) {
        let tol = 1e-9;
        let ra: Vec<DVector<f64>> = a.iter().map(|v| DVector::from_vec(v.clone())).collect();
        let rb: Vec<DVector<f64>> = b.iter().map(|v| DVector::from_vec(v.clone())).collect();
        let sa = Subspace::span(6, &ra, tol);
        let sb = Subspace::span(6, &rb, tol);
        let cap = sa.intersect(&sb).unwrap();
        let sum = sa.sum(&sb).unwrap();
        prop_assert_eq!(cap.dim() + sum.dim(), sa.dim() + sb.dim());
    }

    #[test]
    fn projection_idempotent_and_contractive(
        a in proptest::collection::vec(proptest::collection::vec(-5.0f64..5.0, 5), 1..4),
        v in proptest::collection::vec(-5.0f64..5.0, 5),
    ) {
        let tol = 1e-9;
        let rows: Vec<DVector<f64>> = a.iter().map(|r| DVector::from_vec(r.clone())).collect();
        let s = Subspace::span(5, &rows, tol);
        let x = DVector::from_vec(v);
        let p1 = s.project_vector(&x).unwrap();
        let p2 = s.project_vector(&p1).unwrap();
        prop_assert!((&p1 - &p2).norm() <= 1e-9 * p1.norm().max(1.0));
        prop_assert!(p1.norm() <= x.norm() * (1.0 + 1e-12) + 1e-12);
    }

    #[test]
    fn wedge_degree_and_anticommutativity(
        ac in proptest::collection::vec(-2.0f64..2.0, 10),
        bc in proptest::collection::vec(-2.0f64..2.0, 10),
    ) {
        // degree (2, 3) on R^5
        let a = KForm::from_coeffs(5, 2, ac).unwrap();
        let b = KForm::from_coeffs(5, 3, bc).unwrap();
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        prop_assert_eq!(ab.degree(), 5);
        prop_assert!(ab.sub(&ba).norm() <= 1e-12);
    }

    #[test]
    fn action_realizes_commutators(
        ac in proptest::collection::vec(-2.0f64..2.0, 15),
        bc in proptest::collection::vec(-2.0f64..2.0, 15),
    ) {
        let a = KForm::from_coeffs(6, 2, ac).unwrap();
        let b = KForm::from_coeffs(6, 2, bc).unwrap();
        let action = form_action(&a, &b).unwrap();
        let comm = flat(&sharp(&a).unwrap().commutator(&sharp(&b).unwrap()));
        prop_assert!(action.sub(&comm).norm() <= 1e-12 * (1.0 + a.norm() * b.norm()));
    }

    #[test]
    fn contraction_is_adjoint_to_wedge(
        zc in proptest::collection::vec(-2.0f64..2.0, 10),
        tc in proptest::collection::vec(-2.0f64..2.0, 5),
        sc in proptest::collection::vec(-2.0f64..2.0, 10),
    ) {
        // zeta degree 2, t degree 4 on R^5, s degree 2
        let z = KForm::from_coeffs(5, 2, zc).unwrap();
        let t = KForm::from_coeffs(5, 4, tc).unwrap();
        let s = KForm::from_coeffs(5, 2, sc).unwrap();
        let lhs = contract_adjoint(&z, &t).unwrap().dot(&s);
        let rhs = t.dot(&z.wedge(&s).unwrap());
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + t.norm() * z.norm() * s.norm()));
    }

    #[test]
    fn sharp_flat_isometry(ac in proptest::collection::vec(-3.0f64..3.0, 10)) {
        let a = KForm::from_coeffs(5, 2, ac).unwrap();
        let f = sharp(&a).unwrap();
        let back = flat(&f);
        prop_assert!(a.sub(&back).norm() <= 1e-13 * a.norm().max(1.0));
        let tr = (f.matrix().transpose() * f.matrix()).trace();
        prop_assert!((0.5 * tr - a.dot(&a)).abs() <= 1e-11 * a.dot(&a).max(1.0));
    }

    #[test]
    fn json_form_roundtrip(
        tc in proptest::collection::vec(-3.0f64..3.0, 20),
    ) {
        let t = KForm::from_coeffs(6, 3, tc).unwrap();
        let json = serde_json::to_string(&t.to_json()).unwrap();
        let parsed: skewprol::exterior::KFormJson = serde_json::from_str(&json).unwrap();
        let back = KForm::from_json(&parsed).unwrap();
        prop_assert!(t.sub(&back).norm() == 0.0);
    }
}

#[test]
fn rank_matrix_shapes_cover_padding_branch() {
    // wide matrices exercise the square-padding path
    let m = DMatrix::from_row_slice(2, 5, &[1.0, 0.0, 2.0, 0.0, 0.0, 0.0, 1.0, 0.0, 3.0, 0.0]);
    let (r, k) = rank_nullspace(&m, 1e-9).unwrap();
    assert_eq!(r, 2);
    assert_eq!(k.dim(), 3);
    let _ = binomial(5, 2);
}
