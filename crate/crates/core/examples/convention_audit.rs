//! Checks the printed bracket table of osp(1|2) against the graded Jacobi
//! identity and searches for the smallest sign repair that also makes the
//! density action table a module.
//!
//!     cargo run --example convention_audit

use osp_cohomology::algebra::{audit_and_repair, jacobi_report, Generator, StructureTable};

fn main() {
    let printed = StructureTable::printed();
    let failures = jacobi_report(&printed);
    println!("printed table: {} Jacobi failures", failures.len());
    for f in failures.iter().take(6) {
        println!("  {}  defect {}", f.triple, f.defect);
    }

    let (adopted, report) = audit_and_repair(&printed).expect("a consistent repair exists");
    println!("\nadopted variant: {}", report.variant);
    for c in &report.changes {
        println!("  {}: {} -> {}", c.pair, c.from, c.to);
    }
    println!("Jacobi-consistent sign patterns examined:");
    for cand in &report.candidates {
        let flips: Vec<String> = cand.changes.iter().map(|c| c.pair.clone()).collect();
        println!("  flip {:<24} module: {}", flips.join(" "), cand.module_compatible);
    }

    println!("\nadopted brackets:");
    for (i, &u) in Generator::ALL.iter().enumerate() {
        for &v in &Generator::ALL[i..] {
            let b = adopted.bracket(u, v);
            if !b.is_zero() {
                println!("  [{},{}] = {}", u.symbol(), v.symbol(), b);
            }
        }
    }
}
