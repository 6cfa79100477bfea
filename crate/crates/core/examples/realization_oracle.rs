//! The closed-form action on the a/b/c/d basis next to the action computed
//! from super differential operators, which serves as its oracle.
//!
//!     cargo run --example realization_oracle

use osp_cohomology::algebra::Generator;
use osp_cohomology::module::{BasisVector, DensityModule};
use osp_cohomology::rational::q;
use osp_cohomology::realization::{basis_operator, realization};

fn main() {
    let r = realization();
    println!("realization constants (H, X, Y, A, B):");
    for g in [Generator::H, Generator::X, Generator::Y, Generator::A, Generator::B] {
        println!("  {}: {}  field {}", g.symbol(), r.constant(g), r.operator(g, &q(0, 1)));
    }

    let (lambda, mu) = (q(-1, 2), q(1, 1));
    let module = DensityModule::new(lambda.clone(), mu.clone(), 3);
    println!("\nD_{{{lambda},{mu}}}");
    for v in [BasisVector::a(1, 1), BasisVector::c(0, 2), BasisVector::d(1, 0)] {
        println!("{v} = {}", basis_operator(&v));
        for g in Generator::ALL {
            let table = module.act(g, &v).unwrap();
            let oracle = r.act_on_basis(g, &v, &lambda, &mu);
            let mark = if table == oracle { "ok" } else { "MISMATCH" };
            println!("  {} · {v} = {table}  [{mark}]", g.symbol());
        }
    }
}
