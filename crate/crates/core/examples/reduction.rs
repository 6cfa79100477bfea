//! A cocycle disguised by a coboundary is brought back to reduced form,
//! and a reduced cocycle is pinned down by its value on B^n.
//!
//!     cargo run --release --example reduction

use osp_cohomology::algebra::{repaired_table, Parity, SuperMonomial};
use osp_cohomology::cochain::{make_f_k, Cochain};
use osp_cohomology::engine::localization_check;
use osp_cohomology::module::{BasisVector, ModuleVector};
use osp_cohomology::rational::q;

fn main() {
    let table = repaired_table();
    let f = make_f_k(1).unwrap().cochain;
    let mut g0 = Cochain::zero(f.module().clone(), 0, Parity::Odd);
    g0.set(SuperMonomial::unit(), ModuleVector::basis(BasisVector::c(1, 1))).unwrap();
    let disguised = f.add(&g0.coboundary(table).unwrap()).unwrap();
    println!("disguised f_1 reduced: {}", disguised.is_reduced());
    for (u, v) in disguised.values() {
        println!("  {u:>2} ↦ {v}");
    }
    let (g, red) = disguised.reduce(table).unwrap();
    println!("after reduction (primitive {}):", g.value(&SuperMonomial::unit()));
    for (u, v) in red.values() {
        println!("  {u:>2} ↦ {v}");
    }

    let weights: Vec<_> = (-4..=4).map(|t| q(t, 2)).collect();
    for n in 1..=3 {
        let r = localization_check(f.module(), table, n, &weights);
        println!("degree {n}: reduced cocycles vanishing on B^{n} form a space of dimension {}", r.kernels.iter().map(|k| k.1).sum::<usize>());
    }
}
