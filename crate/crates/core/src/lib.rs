//! Exact Chevalley–Eilenberg cohomology of osp(1|2) with coefficients in
//! modules of differential operators between weighted densities on the
//! superline R^{1|1}.

pub mod algebra;
pub mod cli;
pub mod cochain;
pub mod engine;
pub mod error;
pub mod linalg;
pub mod module;
pub mod rational;
pub mod realization;
pub mod selftest;
