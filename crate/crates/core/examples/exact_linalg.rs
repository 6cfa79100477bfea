//! Exact sparse linear algebra over the rationals: rank, kernel, solving
//! and subspace arithmetic.
//!
//!     cargo run --example exact_linalg

use osp_cohomology::linalg::{kernel_basis, rank, solve, SparseMatrix, SparseVec, Subspace};
use osp_cohomology::rational::{q, to_compact};

fn show(v: &SparseVec, n: usize) -> String {
    let parts: Vec<String> = v.to_dense(n).iter().map(to_compact).collect();
    format!("({})", parts.join(", "))
}

fn main() {
    let m = SparseMatrix::from_dense(&[
        vec![q(1, 1), q(2, 1), q(0, 1), q(-1, 2)],
        vec![q(0, 1), q(1, 3), q(1, 1), q(0, 1)],
        vec![q(1, 1), q(7, 3), q(1, 1), q(-1, 2)],
    ]);
    println!("rank {}", rank(&m));
    let kernel = kernel_basis(&m);
    for z in &kernel {
        println!("kernel vector {}  image {}", show(z, 4), show(&m.mul_vec(z), 3));
    }

    let b = SparseVec::from_dense(&[q(1, 1), q(1, 1), q(2, 1)]);
    match solve(&m, &b) {
        Some(x) => println!("solution {} of Mx = {}", show(&x, 4), show(&b, 3)),
        None => println!("no solution"),
    }
    let bad = SparseVec::from_dense(&[q(1, 1), q(1, 1), q(0, 1)]);
    println!("Mx = {} solvable: {}", show(&bad, 3), solve(&m, &bad).is_some());

    let u = Subspace::span(4, &kernel);
    let e = Subspace::span(4, &[SparseVec::unit(3), SparseVec::unit(2)]);
    println!(
        "dim ker {}, dim e {}, dim sum {}, dim intersection {}",
        u.dim(),
        e.dim(),
        u.sum(&e).unwrap().dim(),
        u.intersection(&e).unwrap().dim()
    );
    print!("{}", m.to_matrix_market());
}
