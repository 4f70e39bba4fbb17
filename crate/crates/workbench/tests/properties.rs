//! Randomized properties: linear-algebra invariants on random rational
//! matrices, and gauge/BCH group laws on random nilpotent elements.

use dgla_workbench::coeff::{artinian_ideal, tensor};
use dgla_workbench::corpus::{three_step, uwz};
use dgla_workbench::graded::GradedElement;
use dgla_workbench::matrix::Mat;
use dgla_workbench::mc::{bch, gauge_action, gauge_group_law_check, mc_residual};
use dgla_workbench::rational::{rat, rint};
use proptest::prelude::*;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |vals| {
        let mut m = Mat::zeros(rows, cols);
        for (k, v) in vals.iter().enumerate() {
            m.set(k / cols, k % cols, rint(*v));
        }
        m
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in small_matrix(3, 4)) {
        let rank = m.rank();
        let null = m.nullspace();
        prop_assert_eq!(rank + null.cols(), 4);
        // every nullspace column really is killed
        for k in 0..null.cols() {
            let v = null.column(k);
            prop_assert!(m.mul_vec(&v).iter().all(|c| c == &rint(0)));
        }
    }

    #[test]
    fn solve_is_consistent(m in small_matrix(3, 3), v in proptest::collection::vec(-3i64..=3, 3)) {
        let rhs: Vec<_> = v.into_iter().map(rint).collect();
        if let Ok(sol) = m.solve(&rhs) {
            prop_assert_eq!(m.mul_vec(&sol), rhs);
        }
    }
}

fn random_elem(deg: i32, coords: &[i64]) -> GradedElement {
    GradedElement::from_degree(deg, coords.iter().map(|&c| rint(c)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn gauge_group_law_uwz(
        a in proptest::collection::vec(-2i64..=2, 4),
        b in proptest::collection::vec(-2i64..=2, 4),
        w in proptest::collection::vec(-2i64..=2, 8),
    ) {
        let t = tensor(&uwz(), &artinian_ideal(5).unwrap()).unwrap();
        let g = &t.dgla;
        let ae = random_elem(0, &a);
        let be = random_elem(0, &b);
        let we = random_elem(1, &w);
        prop_assert!(gauge_group_law_check(g, &ae, &be, &we, 5).unwrap());
        // identity and inverse
        prop_assert_eq!(gauge_action(g, &GradedElement::zero(), &we).unwrap(), we.clone());
        let back = gauge_action(g, &ae.scale(&rat(-1, 1)), &gauge_action(g, &ae, &we).unwrap()).unwrap();
        prop_assert_eq!(back, we);
    }

    #[test]
    fn bch_associativity_three_step(
        a in proptest::collection::vec(-1i64..=1, 9),
        b in proptest::collection::vec(-1i64..=1, 9),
        c in proptest::collection::vec(-1i64..=1, 9),
    ) {
        let t = tensor(&three_step(), &artinian_ideal(4).unwrap()).unwrap();
        let g = &t.dgla;
        let dim = g.dim(0);
        let ae = random_elem(0, &a[..dim]);
        let be = random_elem(0, &b[..dim]);
        let ce = random_elem(0, &c[..dim]);
        let lhs = bch(g, &bch(g, &ae, &be, 4).unwrap(), &ce, 4).unwrap();
        let rhs = bch(g, &ae, &bch(g, &be, &ce, 4).unwrap(), 4).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gauge_preserves_maurer_cartan(
        a in proptest::collection::vec(-2i64..=2, 4),
        s in -2i64..=2,
    ) {
        let t = tensor(&uwz(), &artinian_ideal(5).unwrap()).unwrap();
        let g = &t.dgla;
        // s·(w⊗t) is Maurer-Cartan (dw = 0, [w,w] = 0)
        let x = g.space().basis_element(1, 0).scale(&rint(s));
        prop_assert!(mc_residual(g, &x).unwrap().is_zero());
        let moved = gauge_action(g, &random_elem(0, &a), &x).unwrap();
        prop_assert!(mc_residual(g, &moved).unwrap().is_zero());
    }
}
