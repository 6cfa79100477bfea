use proptest::prelude::*;

use super::*;
use crate::algebra::repaired_table;
use crate::module::DensityModule;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn arb_monomial() -> impl Strategy<Value = OpMonomial> {
    (0u32..4, 0u8..2, 0u8..2, 0u32..4).prop_map(|(m, a, b, k)| OpMonomial::new(m, a, b, k))
}

fn arb_operator() -> impl Strategy<Value = Operator> {
    prop::collection::vec((arb_rational(), arb_monomial()), 0..4).prop_map(|ts| {
        let mut op = Operator::zero();
        for (c, m) in ts {
            op.add_term(c, m);
        }
        op
    })
}

fn arb_function() -> impl Strategy<Value = SuperFunction> {
    prop::collection::vec((arb_rational(), 0u32..5, 0u8..2), 0..4).prop_map(|ts| {
        let mut f = SuperFunction::zero();
        for (c, j, e) in ts {
            f.add_term(c, j, e);
        }
        f
    })
}

/// A homogeneous function: monomials of one θ-degree.
fn arb_homogeneous() -> impl Strategy<Value = SuperFunction> {
    (0u8..2, prop::collection::vec((arb_rational(), 0u32..4), 1..3)).prop_map(|(e, ts)| {
        let mut f = SuperFunction::zero();
        for (c, j) in ts {
            f.add_term(c, j, e);
        }
        f
    })
}

fn arb_basis_vector() -> impl Strategy<Value = BasisVector> {
    (0usize..4, 0u32..4, 0u32..4).prop_map(|(f, m, k)| BasisVector::new(Family::ALL[f], m, k))
}

#[test]
fn constants_for_adopted_table() {
    let r = realization();
    let c: Vec<Rational> = [Generator::H, Generator::X, Generator::Y, Generator::A, Generator::B]
        .iter()
        .map(|&g| r.constant(g).clone())
        .collect();
    assert_eq!(c, vec![qi(-1), qi(1), qi(-1), qi(2), qi(2)]);
}

#[test]
fn odd_generator_is_eta() {
    assert_eq!(realization().operator(Generator::A, &q(3, 7)), eta());
}

#[test]
fn eta_squares_to_dx() {
    assert_eq!(eta().compose(&eta()), Operator::dx());
}

#[test]
fn dtheta_theta_relation() {
    let lhs = Operator::dtheta().compose(&Operator::mult(0, 1));
    assert_eq!(lhs, parse_operator("1 - θ∂θ").unwrap());
}

#[test]
fn contact_bracket_examples() {
    let f = |j, e| SuperFunction::monomial(j, e);
    assert_eq!(contact_bracket(&f(0, 0), &f(1, 0)), f(0, 0));
    assert_eq!(contact_bracket(&f(0, 1), &f(0, 1)), f(0, 0).scale(&q(1, 2)));
    assert_eq!(contact_bracket(&f(0, 1), &f(1, 1)), f(1, 0).scale(&q(1, 2)));
}

#[test]
fn vector_field_examples() {
    assert_eq!(vector_field(&SuperFunction::monomial(0, 0)), Operator::dx());
    assert_eq!(vector_field(&SuperFunction::monomial(0, 1)), parse_operator("1/2∂θ + 1/2θ∂x").unwrap());
    assert_eq!(vector_field(&SuperFunction::monomial(2, 0)), parse_operator("x^2∂x + xθ∂θ").unwrap());
    assert_eq!(
        density_action(&SuperFunction::monomial(2, 0), &q(3, 2)),
        parse_operator("x^2∂x + xθ∂θ + 3x").unwrap()
    );
}

#[test]
fn compose_examples() {
    assert_eq!(parse_operator("∂x").unwrap().compose(&parse_operator("x").unwrap()), parse_operator("x∂x + 1").unwrap());
    for k in 1..4u32 {
        let lhs = parse_operator(&format!("∂θ∂x^{k} - θ∂x^{}", k + 1)).unwrap().compose(&Operator::mult(1, 0));
        let rhs = parse_operator(&format!("x∂θ∂x^{k} + {k}∂θ∂x^{} - xθ∂x^{} - {}θ∂x^{k}", k - 1, k + 1, k + 1)).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn eta_examples() {
    assert_eq!(eta().apply(&SuperFunction::monomial(0, 1)), SuperFunction::monomial(0, 0));
    assert_eq!(eta_bar().apply(&SuperFunction::monomial(1, 1)), SuperFunction::monomial(1, 0));
}

#[test]
fn b_acts_on_theta_by_x() {
    let r = realization();
    let t = Operator::mult(0, 1);
    assert_eq!(r.act(Generator::B, &t, &q(2, 5), &q(2, 5)), Operator::mult(1, 0));
}

#[test]
fn printed_table_has_no_realization() {
    assert!(solve_constants(&StructureTable::printed()).is_err());
}

#[test]
fn d_vector_round_trip() {
    let v = ModuleVector::basis(BasisVector::d(2, 1));
    let op = Operator::from_module_vector(&v);
    assert_eq!(op, parse_operator("x^2∂θ∂x - x^2θ∂x^2").unwrap());
    assert_eq!(op.to_module_vector(), v);
}

#[test]
fn notation_accepts_ascii() {
    assert_eq!(parse_operator("2 x^2 t dt dx^3").unwrap(), parse_operator("2x^2θ∂θ∂x^3").unwrap());
    assert_eq!(parse_operator("∂x x").unwrap(), parse_operator("x∂x + 1").unwrap());
    assert_eq!(parse_operator("id").unwrap(), Operator::identity());
    assert!(parse_operator("x +").is_err());
    assert!(parse_operator("q").is_err());
}

proptest! {
    #[test]
    fn compose_is_associative(a in arb_operator(), b in arb_operator(), c in arb_operator()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn apply_respects_compose(a in arb_operator(), b in arb_operator(), f in arb_function()) {
        prop_assert_eq!(a.compose(&b).apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn fields_close_under_bracket(f in arb_homogeneous(), g in arb_homogeneous()) {
        let lhs = vector_field(&f).supercommutator(&vector_field(&g));
        prop_assert_eq!(lhs, vector_field(&contact_bracket(&f, &g)));
    }

    #[test]
    fn density_action_is_a_representation(f in arb_homogeneous(), g in arb_homogeneous(), nu in arb_rational()) {
        let lhs = density_action(&f, &nu).supercommutator(&density_action(&g, &nu));
        prop_assert_eq!(lhs, density_action(&contact_bracket(&f, &g), &nu));
    }

    #[test]
    fn table_matches_realization(
        v in arb_basis_vector(),
        gi in 0usize..5,
        lambda in arb_rational(),
        mu in arb_rational(),
    ) {
        let g = Generator::from_index(gi);
        let module = DensityModule::new(lambda.clone(), mu.clone(), 4);
        let table = module.act(g, &v).unwrap();
        let oracle = realization().act_on_basis(g, &v, &lambda, &mu);
        prop_assert_eq!(table, oracle);
    }

    #[test]
    fn module_axiom_on_random_vectors(
        v in arb_basis_vector(),
        ui in 0usize..5,
        wi in 0usize..5,
        lambda in arb_rational(),
        mu in arb_rational(),
    ) {
        let module = DensityModule::new(lambda, mu, 4);
        let d = module
            .action_compat_defect(repaired_table(), Generator::from_index(ui), Generator::from_index(wi), &v)
            .unwrap();
        prop_assert!(d.is_zero());
    }

    #[test]
    fn notation_round_trip(a in arb_operator()) {
        let text = format_operator(&a);
        prop_assert_eq!(parse_operator(&text).unwrap(), a);
    }
}
