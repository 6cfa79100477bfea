//! Restriction of cohomology classes to the even part sl(2), and the
//! sl(2) dimensions beside the osp(1|2) ones.
//!
//!     cargo run --release --example sl2_restriction

use num_traits::Zero;
use osp_cohomology::algebra::repaired_table;
use osp_cohomology::cochain::Complex;
use osp_cohomology::engine::{guarded_kmax, h_dims, predict_sl2, restriction_injectivity_check};
use osp_cohomology::module::DensityModule;
use osp_cohomology::rational::{q, to_compact, Rational};

fn main() {
    let table = repaired_table();
    for (l, m) in [(q(0, 1), q(1, 2)), (q(-1, 2), q(1, 1)), (q(1, 1), q(1, 1)), (q(1, 3), q(0, 1))] {
        let module = DensityModule::new(l.clone(), m.clone(), 3.max(guarded_kmax(&l, &m)));
        let zero = Rational::zero();
        let osp = h_dims(&module, table, Complex::Full, 3, &zero);
        let sl2 = h_dims(&module, table, Complex::Sl2, 3, &zero);
        let predicted = predict_sl2(&module, 3).unwrap();
        let r = restriction_injectivity_check(&module, table, 2).unwrap();
        println!(
            "D_{{{},{}}}: osp(1|2) {osp:?}, sl(2) {sl2:?} (predicted {predicted:?}), restriction injective: {}",
            to_compact(&l),
            to_compact(&m),
            r.injective
        );
        for c in &r.classes {
            println!("  H^{} class {}: restricts nontrivially {}", c.degree, c.index, c.restricts_nontrivially);
        }
    }
}
