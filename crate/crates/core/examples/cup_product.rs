//! The cup product Ω_k = f_k ∨ h_{-k/2} and its restriction to sl(2),
//! compared with the Gelfand–Fuchs cocycle ω(f, g) = f′g″ - g′f″.
//!
//!     cargo run --release --example cup_product

use osp_cohomology::algebra::repaired_table;
use osp_cohomology::cochain::{cup_cocycle, make_f_k, make_h_lambda};
use osp_cohomology::engine::gelfand_fuchs_check;
use osp_cohomology::rational::{q, to_compact};
use osp_cohomology::realization::{format_operator, Operator};

fn main() {
    let table = repaired_table();
    for k in 0..=3u32 {
        let f = make_f_k(k).unwrap().cochain;
        let h = make_h_lambda(&q(-(k as i64), 2)).unwrap().cochain;
        let (omega, sign) = cup_cocycle(&f, &h, table).unwrap();
        println!("Ω_{k} ({} sign)", sign.name());
        for (u, v) in omega.values() {
            println!("  {u:>4} ↦ {}", format_operator(&Operator::from_module_vector(v)));
        }
        let gf = gelfand_fuchs_check(k, table).unwrap();
        println!(
            "  C_{k} = {}, ratio to -(-1)^k: {}, coboundary: {}, sl(2) part a coboundary: {}",
            to_compact(&gf.constant),
            to_compact(&gf.ratio_to_printed),
            gf.is_coboundary,
            gf.sl2_restriction_is_coboundary
        );
    }
}
