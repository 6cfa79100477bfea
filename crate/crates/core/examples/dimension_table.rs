//! Weight-0 cohomology dimensions of the truncated operator modules
//! D_{λ,μ} for n = 0..4, with the kernel-formula and case-table predictions.
//!
//!     cargo run --release --example dimension_table

use osp_cohomology::algebra::repaired_table;
use osp_cohomology::engine::{compute_report, ReportConfig};
use osp_cohomology::rational::{parse_rational, to_compact};

fn main() {
    let points = [
        ("0", "0"),
        ("1", "1"),
        ("5/2", "5/2"),
        ("0", "1/2"),
        ("-1/2", "1"),
        ("-1", "3/2"),
        ("-3/2", "2"),
        ("1/3", "0"),
        ("0", "2"),
        ("1", "1/2"),
    ];
    let config = ReportConfig::default();
    println!("{:>6} {:>6} {:>3}  {:<16} {:<16} {:<16} match", "λ", "μ", "K", "computed", "theorem", "sl(2)");
    for (l, m) in points {
        let (l, m) = (parse_rational(l).unwrap(), parse_rational(m).unwrap());
        let r = compute_report(&l, &m, &config, repaired_table()).unwrap();
        let theorem: Vec<usize> = r.theorem.values().copied().collect();
        let sl2: Vec<usize> = r.sl2_computed.values().copied().collect();
        println!(
            "{:>6} {:>6} {:>3}  {:<16} {:<16} {:<16} {}",
            to_compact(&l),
            to_compact(&m),
            r.kmax,
            format!("{:?}", r.weight_zero()),
            format!("{theorem:?}"),
            format!("{sl2:?}"),
            r.matches
        );
    }
}
