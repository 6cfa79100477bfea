//! The explicit 1-cocycles h_λ, f_k and f̃_k, re-derived from their printed
//! shapes, with the solved scale of each slot.
//!
//!     cargo run --release --example explicit_cocycles

use osp_cohomology::algebra::repaired_table;
use osp_cohomology::cochain::{make_f_k, make_ftilde_k, make_h_lambda, restrict_sl2, ExplicitCocycle};
use osp_cohomology::rational::{q, to_compact};
use osp_cohomology::realization::{format_operator, Operator};

fn show(e: &ExplicitCocycle) {
    let table = repaired_table();
    let c = &e.cochain;
    println!("{} on D_{{{},{}}}", e.name, to_compact(c.module().lambda()), to_compact(c.module().mu()));
    for (u, v) in c.values() {
        println!("  {u:>2} ↦ {}", format_operator(&Operator::from_module_vector(v)));
    }
    let ratios: Vec<String> = e.ratios.iter().map(|r| format!("{} {}", r.slot, to_compact(&r.ratio))).collect();
    println!("  ratio to printed: {}", ratios.join(", "));
    println!(
        "  cocycle {}, nontrivial {}, sl(2) restriction nontrivial {}",
        c.coboundary(table).unwrap().is_zero(),
        c.is_coboundary(table).unwrap().is_none(),
        restrict_sl2(c).is_coboundary(table).unwrap().is_none()
    );
}

fn main() {
    for lambda in [q(0, 1), q(5, 2)] {
        show(&make_h_lambda(&lambda).unwrap());
    }
    for k in 0..=2 {
        show(&make_f_k(k).unwrap());
        show(&make_ftilde_k(k).unwrap());
    }
}
