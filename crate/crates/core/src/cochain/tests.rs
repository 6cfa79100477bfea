use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::{koszul, repaired_table};
use crate::module::{BasisVector, Family};
use crate::rational::q;
use crate::realization::Operator;

use Generator::{A, B, H, X, Y};

fn mono(gs: &[Generator]) -> SuperMonomial {
    canonicalize(gs).0.unwrap()
}

fn bv(f: char, m: u32, k: u32) -> BasisVector {
    BasisVector::new(Family::from_letter(f).unwrap(), m, k)
}

/// A random parity-homogeneous cochain with small supports.
fn random_cochain(rng: &mut ChaCha8Rng, module: &DensityModule, degree: u32, parity: Parity) -> Cochain {
    let mut f = Cochain::zero(module.clone(), degree, parity);
    for u in monomial_basis(degree) {
        let want = parity + u.parity();
        let mut v = ModuleVector::zero();
        for _ in 0..rng.gen_range(0..3) {
            let fam = Family::ALL[rng.gen_range(0..4)];
            if fam.parity() != want {
                continue;
            }
            let b = BasisVector::new(fam, rng.gen_range(0..3), rng.gen_range(0..=module.kmax()));
            v.add_term(q(rng.gen_range(-4..=4), rng.gen_range(1..=3)), b);
        }
        f.set(u, v).unwrap();
    }
    f
}

fn random_module(rng: &mut ChaCha8Rng) -> DensityModule {
    let lambda = q(rng.gen_range(-6..=6), rng.gen_range(1..=4));
    let mu = q(rng.gen_range(-6..=6), rng.gen_range(1..=4));
    DensityModule::new(lambda, mu, 3)
}

fn random_parity(rng: &mut ChaCha8Rng) -> Parity {
    if rng.gen_bool(0.5) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

#[test]
fn evaluate_odd_pair_is_symmetric() {
    let module = DensityModule::new(qi(0), qi(0), 2);
    let mut f = Cochain::zero(module, 2, Parity::Even);
    let v = ModuleVector::basis(bv('a', 1, 0));
    f.set(mono(&[A, B]), v.clone()).unwrap();
    assert_eq!(f.evaluate(&[B, A]).unwrap(), v);
    assert!(f.evaluate(&[H, H]).unwrap().is_zero());
}

#[test]
fn evaluate_matches_transpositions() {
    let module = DensityModule::new(qi(0), qi(0), 2);
    let mut f = Cochain::zero(module, 3, Parity::Even);
    let v = ModuleVector::basis(bv('c', 0, 1));
    f.set(mono(&[H, B, Y]), v.clone()).unwrap();
    // (Y,H,B) -> (H,Y,B) -> (H,B,Y): two swaps, each of sign -1.
    assert_eq!(f.evaluate(&[Y, H, B]).unwrap(), v);
    assert_eq!(f.evaluate(&[B, H, Y]).unwrap(), v.scale(&qi(-1)));
    assert!(f.evaluate(&[H, B]).is_err());
}

#[test]
fn coboundary_of_zero_cochain() {
    let module = DensityModule::new(q(1, 3), q(-2, 5), 2);
    for v in [bv('a', 1, 1), bv('c', 0, 2)] {
        let mut f = Cochain::zero(module.clone(), 0, v.parity());
        f.set(SuperMonomial::unit(), ModuleVector::basis(v)).unwrap();
        let df = f.coboundary(repaired_table()).unwrap();
        for g in Generator::ALL {
            let expect = module.act(g, &v).unwrap().scale(&qi(koszul(v.parity(), g.parity())));
            assert_eq!(df.evaluate(&[g]).unwrap(), expect);
        }
    }
}

#[test]
fn coboundary_on_ab_for_reduced_even_cochain() {
    let table = repaired_table();
    let module = DensityModule::new(q(1, 2), q(3, 2), 2);
    let mut f = Cochain::zero(module.clone(), 1, Parity::Even);
    f.set(mono(&[B]), ModuleVector::basis(bv('c', 1, 1))).unwrap();
    f.set(mono(&[H]), ModuleVector::basis(bv('a', 0, 2))).unwrap();
    let lhs = f.coboundary_at(&[A, B], table).unwrap();
    let mut rhs = module.act_vec(A, &f.value(&mono(&[B]))).unwrap();
    for (g, c) in table.bracket(A, B).terms() {
        rhs = rhs.sub(&f.value(&mono(&[g])).scale(c));
    }
    assert_eq!(lhs, rhs);
}

#[test]
fn coboundary_squares_to_zero_on_random_cochains() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let table = repaired_table();
    for i in 0..50 {
        let module = random_module(&mut rng);
        let parity = random_parity(&mut rng);
        let g = random_cochain(&mut rng, &module, i % 3, parity);
        let dd = g.coboundary(table).unwrap().coboundary(table).unwrap();
        assert!(dd.is_zero(), "∂∂g ≠ 0 for {g:?}");
    }
}

#[test]
fn coboundary_squares_to_zero_on_spanning_set() {
    let table = repaired_table();
    let module = DensityModule::new(q(2, 3), q(-1, 5), 3);
    for n in 0..4u32 {
        for w in (-8..=8).map(|t| q(t, 2)) {
            let Some(_) = blocks::block_parity(&module, &w) else { continue };
            let hi = build_block(&module, table, Complex::Full, n + 1, &w);
            let lo = build_block(&module, table, Complex::Full, n, &w);
            assert_eq!(hi.domain, lo.codomain);
            assert!(hi.matrix.mul(&lo.matrix).is_zero(), "n={n} w={w}");
        }
    }
}

#[test]
fn block_matches_cochain_coboundary() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let table = repaired_table();
    for _ in 0..10 {
        let module = random_module(&mut rng);
        let parity = random_parity(&mut rng);
        let f = random_cochain(&mut rng, &module, 1, parity);
        let df = f.coboundary(table).unwrap();
        for w in f.weights() {
            let part = f.weight_component(&w);
            if blocks::block_parity(&module, &w) != Some(f.parity()) {
                assert!(part.is_zero());
                continue;
            }
            let block = build_block(&module, table, Complex::Full, 1, &w);
            let x = part.to_coordinates(&block.domain).unwrap();
            let image = Cochain::from_coordinates(&module, 2, f.parity(), &block.codomain, &block.matrix.mul_vec(&x));
            assert_eq!(image, df.weight_component(&w));
        }
    }
}

#[test]
fn zero_is_reduced() {
    let module = DensityModule::new(qi(0), qi(0), 1);
    assert!(Cochain::zero(module.clone(), 2, Parity::Odd).is_reduced());
    let mut f = Cochain::zero(module, 1, Parity::Odd);
    f.set(mono(&[A]), ModuleVector::basis(bv('a', 0, 0))).unwrap();
    assert!(!f.is_reduced());
}

#[test]
fn reduce_leaves_reduced_cochains_alone() {
    let f = make_f_k(1).unwrap().cochain;
    let (g, red) = f.reduce(repaired_table()).unwrap();
    assert!(g.is_zero());
    assert_eq!(red, f);
}

#[test]
fn reduce_pure_a_cochain() {
    let table = repaired_table();
    let module = DensityModule::new(q(1, 3), q(1, 3), 2);
    let mut f = Cochain::zero(module, 1, Parity::Odd);
    f.set(mono(&[A]), ModuleVector::basis(bv('a', 1, 0))).unwrap();
    let (g, red) = f.reduce(table).unwrap();
    assert!(red.is_reduced());
    assert_eq!(f.sub(&red).unwrap(), g.coboundary(table).unwrap());
}

#[test]
fn reduce_random_coboundaries() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let table = repaired_table();
    for i in 0..20 {
        let module = random_module(&mut rng);
        let n = 1 + i % 3;
        let parity = random_parity(&mut rng);
        let f = random_cochain(&mut rng, &module, n - 1, parity).coboundary(table).unwrap();
        let (g, red) = f.reduce(table).unwrap();
        assert!(red.is_reduced());
        assert_eq!(f.sub(&red).unwrap(), g.coboundary(table).unwrap());
    }
}

#[test]
fn reduce_disguised_cocycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let table = repaired_table();
    for k in 0..3 {
        let fk = make_f_k(k).unwrap().cochain;
        let g0 = random_cochain(&mut rng, fk.module(), 0, Parity::Odd);
        let f = fk.add(&g0.coboundary(table).unwrap()).unwrap();
        let (_, red) = f.reduce(table).unwrap();
        assert!(red.is_reduced());
        assert!(red.sub(&fk).unwrap().is_coboundary(table).unwrap().is_some());
    }
}

#[test]
fn is_coboundary_finds_primitives() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let table = repaired_table();
    for i in 0..10 {
        let module = random_module(&mut rng);
        let parity = random_parity(&mut rng);
        let g0 = random_cochain(&mut rng, &module, i % 3, parity);
        let f = g0.coboundary(table).unwrap();
        let g = f.is_coboundary(table).unwrap().expect("exact by construction");
        assert_eq!(g.coboundary(table).unwrap(), f);
    }
}

#[test]
fn is_coboundary_rejects_non_cocycles() {
    let module = DensityModule::new(q(1, 3), q(1, 7), 1);
    let mut f = Cochain::zero(module, 1, Parity::Even);
    f.set(mono(&[H]), ModuleVector::basis(bv('a', 0, 1))).unwrap();
    assert!(matches!(f.is_coboundary(repaired_table()), Err(Error::NotACocycle)));
}

#[test]
fn restriction_commutes_with_coboundary() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let table = repaired_table();
    for i in 0..20 {
        let module = random_module(&mut rng);
        let parity = random_parity(&mut rng);
        let f = random_cochain(&mut rng, &module, i % 3, parity);
        let lhs = restrict_sl2(&f.coboundary(table).unwrap());
        let rhs = sl2_coboundary(&restrict_sl2(&f), table).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn restriction_of_four_cochain_vanishes() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let module = random_module(&mut rng);
    let f = random_cochain(&mut rng, &module, 4, Parity::Even);
    assert!(restrict_sl2(&f).is_zero());
}

#[test]
fn h_lambda_ratios() {
    for lambda in [qi(0), q(1, 2), q(-3, 2), q(2, 7)] {
        let h = make_h_lambda(&lambda).unwrap();
        assert_eq!(h.ratio(H), Some(&q(1, 2)));
        assert_eq!(h.ratio(B), Some(&qi(1)));
        assert_eq!(h.ratio(Y), Some(&q(1, 2)));
        assert_eq!(Operator::from_module_vector(&h.cochain.value(&mono(&[B]))), Operator::mult(0, 1));
        assert!(h.cochain.evaluate(&[X]).unwrap().is_zero());
        assert!(h.cochain.is_reduced());
    }
}

#[test]
fn f_k_cocycles() {
    let table = repaired_table();
    for k in 0..=3 {
        let f = make_f_k(k).unwrap();
        assert!(f.cochain.coboundary(table).unwrap().is_zero());
        assert!(f.cochain.is_reduced());
        assert!(f.cochain.evaluate(&[X]).unwrap().is_zero());
        assert_eq!(f.ratio(H), Some(&q(1, 2)));
        assert_eq!(f.ratio(Y), Some(&q(1, 2)));
        assert_eq!(f.cochain.is_coboundary(table).unwrap(), None);
    }
}

#[test]
fn ftilde_k_cocycles() {
    let table = repaired_table();
    for k in 0..=3 {
        let f = make_ftilde_k(k).unwrap();
        assert_eq!(f.cochain.value(&mono(&[B])), ModuleVector::basis(bv('a', 0, k)));
        assert_eq!(f.ratio(Y), Some(&q(1, 2)));
        assert!(f.cochain.value(&mono(&[H])).is_zero());
        assert!(restrict_sl2(&f.cochain).value(&mono(&[H])).is_zero());
        assert!(f.cochain.is_reduced());
        assert_eq!(f.cochain.is_coboundary(table).unwrap(), None);
    }
}

#[test]
fn cup_with_zero_is_zero() {
    let f = make_f_k(2).unwrap().cochain;
    let h = Cochain::zero(DensityModule::new(qi(-1), qi(-1), 0), 1, Parity::Even);
    assert!(cup(&f, &h, CupSign::Printed).unwrap().is_zero());
}

#[test]
fn cup_rejects_mismatched_weights() {
    let f = make_f_k(2).unwrap().cochain;
    let h = make_h_lambda(&qi(3)).unwrap().cochain;
    assert!(matches!(cup(&f, &h, CupSign::Printed), Err(Error::TypeMismatch(_))));
}

#[test]
fn cup_of_f_k_and_h_is_a_cocycle() {
    let table = repaired_table();
    for k in 0..=2u32 {
        let f = make_f_k(k).unwrap().cochain;
        let h = make_h_lambda(&q(-(k as i64), 2)).unwrap().cochain;
        let (omega, sign) = cup_cocycle(&f, &h, table).unwrap();
        assert_eq!(sign, CupSign::Printed, "k={k}");
        assert!(omega.coboundary(table).unwrap().is_zero());
        // Ω(H,Y) is proportional to k d_{0,k-1} - c_{0,k}.
        let mut shape = ModuleVector::term(qi(-1), bv('c', 0, k));
        if k > 0 {
            shape.add_term(qi(k as i64), bv('d', 0, k - 1));
        }
        let hy = omega.evaluate(&[H, Y]).unwrap();
        assert!(!hy.is_zero());
        let (b, c) = shape.iter().next().unwrap();
        assert_eq!(hy, shape.scale(&(hy.get(b) / c)));
    }
}

proptest! {
    #[test]
    fn coboundary_respects_argument_permutations(seed in any::<u64>(), n in 1u32..3, swaps in prop::collection::vec(0usize..2, 1..4)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let table = repaired_table();
        let module = random_module(&mut rng);
        let parity = random_parity(&mut rng);
        let f = random_cochain(&mut rng, &module, n, parity);
        let df = f.coboundary(table).unwrap();
        let target = monomial_basis(n + 1);
        let mut tuple = target[rng.gen_range(0..target.len())].tuple();
        for i in swaps {
            let i = i.min(tuple.len() - 2);
            tuple.swap(i, i + 1);
        }
        prop_assert_eq!(f.coboundary_at(&tuple, table).unwrap(), df.evaluate(&tuple).unwrap());
    }
}
