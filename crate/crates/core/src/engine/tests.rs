use super::*;
use crate::algebra::repaired_table;
use crate::rational::to_fraction;

fn module(l: Rational, m: Rational, k: u32) -> DensityModule {
    DensityModule::new(l, m, k)
}

fn zero() -> Rational {
    Rational::zero()
}

#[test]
fn dims_at_k_zero() {
    let m = module(qi(0), q(1, 2), 3);
    assert_eq!(h_dims(&m, repaired_table(), Complex::Full, 3, &zero()), vec![1, 2, 1, 0]);
}

#[test]
fn dims_at_lambda_equal_mu() {
    let m = module(qi(1), qi(1), 3);
    assert_eq!(h_dims(&m, repaired_table(), Complex::Full, 2, &zero()), vec![1, 1, 0]);
    assert_eq!(h_dim(&m, repaired_table(), 1, &zero()), 1);
}

#[test]
fn dims_generic() {
    let m = module(q(1, 3), qi(0), 3);
    assert_eq!(h_dims(&m, repaired_table(), Complex::Full, 3, &zero()), vec![0; 4]);
}

#[test]
fn large_block_assembles() {
    let m = module(qi(0), q(1, 2), 2);
    let b = build_block(&m, repaired_table(), Complex::Full, 3, &zero());
    let expected: usize = crate::algebra::monomial_basis(3)
        .iter()
        .map(|u| m.weight_basis(&q(u.weight2(), 2)).len())
        .sum();
    assert_eq!(b.domain.len(), expected);
    assert_eq!(b.matrix.ncols(), expected);
}

#[test]
fn empty_slice() {
    let m = module(q(1, 3), qi(0), 3);
    let b = build_block(&m, repaired_table(), Complex::Full, 1, &zero());
    assert_eq!((b.matrix.nrows(), b.matrix.ncols()), (0, 0));
}

#[test]
fn theorem_predictions() {
    assert_eq!(predict_theorem(&module(q(2, 3), q(2, 3), 2), 4).unwrap(), vec![1, 1, 0, 0, 0]);
    for k0 in 0..3i64 {
        let m = module(q(-k0, 2), q(k0 + 1, 2), k0 as u32 + 2);
        assert_eq!(predict_theorem(&m, 4).unwrap(), vec![1, 2, 1, 0, 0], "k0={k0}");
    }
    assert_eq!(predict_theorem(&module(qi(0), q(1, 3), 3), 3).unwrap(), vec![0; 4]);
}

#[test]
fn proposition_cases() {
    assert_eq!(predict_proposition(&q(3, 4), &q(3, 4), 3), vec![1, 1, 0, 0]);
    assert_eq!(predict_proposition(&qi(-1), &q(3, 2), 3), vec![1, 2, 1, 0]);
    assert_eq!(predict_proposition(&qi(0), &qi(2), 3), vec![0; 4]);
    assert_eq!(predict_proposition(&q(1, 2), &qi(0), 3), vec![0; 4]);
}

#[test]
fn sl2_prediction_matches_brute_force() {
    let grid = [(qi(0), qi(0)), (qi(1), qi(1)), (qi(0), q(1, 2)), (q(-1, 2), qi(1)), (qi(-1), q(3, 2)), (q(1, 3), qi(0))];
    for (l, m) in grid {
        let md = module(l.clone(), m.clone(), 3);
        let computed = h_dims(&md, repaired_table(), Complex::Sl2, 3, &zero());
        assert_eq!(computed, predict_sl2(&md, 3).unwrap(), "({l},{m})");
    }
    assert_eq!(predict_sl2(&module(qi(0), q(1, 3), 3), 3).unwrap(), vec![0; 4]);
    assert!(predict_sl2(&module(qi(2), qi(2), 3), 3).unwrap()[0] >= 1);
}

#[test]
fn guard_raises_truncation() {
    assert_eq!(guarded_kmax(&qi(0), &q(5, 2)), 4);
    assert_eq!(guarded(&module(qi(0), q(5, 2), 1)).kmax(), 4);
    assert_eq!(guarded(&module(qi(0), q(5, 2), 6)).kmax(), 6);
}

#[test]
fn report_round_trips_and_matches() {
    let r = compute_report(&qi(0), &q(1, 2), &ReportConfig::default(), repaired_table()).unwrap();
    assert!(r.matches);
    assert_eq!(r.weight_zero(), vec![1, 2, 1, 0, 0]);
    let text = serde_json::to_string(&r).unwrap();
    let back: CohomologyReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    assert_eq!(r.csv_rows().len(), 5 * r.weights.len());
    // The H^0 class of D_{0,1/2} is odd.
    assert_eq!(r.computed["0"]["0/1"], DimEntry { total: 1, even: 0, odd: 1 });
}

#[test]
fn restriction_is_injective() {
    let r = restriction_injectivity_check(&module(qi(0), q(1, 2), 3), repaired_table(), 2).unwrap();
    assert_eq!(r.classes.iter().filter(|c| c.degree == 1).count(), 2);
    assert!(r.injective);
    let r = restriction_injectivity_check(&module(q(-1, 2), qi(1), 3), repaired_table(), 2).unwrap();
    assert!(r.classes.iter().any(|c| c.degree == 2));
    assert!(r.injective);
    let r = restriction_injectivity_check(&module(q(1, 3), qi(0), 3), repaired_table(), 2).unwrap();
    assert!(r.classes.is_empty() && r.injective);
}

#[test]
fn gelfand_fuchs_constants() {
    for k in 0..=2 {
        let r = gelfand_fuchs_check(k, repaired_table()).unwrap();
        assert!(!r.constant.is_zero(), "k={k}");
        assert!(!r.is_coboundary);
        assert!(!r.sl2_restriction_is_coboundary);
        assert_eq!(r.pairs.iter().filter(|p| p.omega != 0).count(), 1);
    }
}

#[test]
fn lemma_holds_at_half_integer_shift() {
    for k0 in 0..=2i64 {
        for lambda in [q(-k0, 2), q(1, 3), qi(1)] {
            let m = module(lambda.clone(), &lambda + q(2 * k0 + 1, 2), k0 as u32 + 2);
            let r = lemma_check(&m).unwrap();
            assert!(r.holds, "k0={k0} λ={}", to_fraction(&lambda));
        }
    }
}

#[test]
fn localization_is_injective() {
    let weights = ReportConfig::default().weights();
    for (l, m) in [(qi(0), q(1, 2)), (qi(1), qi(1)), (q(-1, 2), qi(1))] {
        for n in 1..=3 {
            let r = localization_check(&module(l.clone(), m.clone(), 3), repaired_table(), n, &weights);
            assert!(r.injective, "({l},{m}) n={n}: {:?}", r.kernels);
        }
    }
}
