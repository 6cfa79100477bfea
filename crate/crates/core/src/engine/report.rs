//! Dimension reports for one (λ, μ) and their JSON/CSV forms.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{guarded_kmax, h_dims, predict_proposition, predict_sl2, predict_theorem};
use crate::algebra::{Parity, StructureTable};
use crate::cochain::{block_parity, Complex};
use crate::error::Result;
use crate::module::DensityModule;
use crate::rational::{q, to_fraction, Rational};

#[derive(Clone, Debug)]
pub struct ReportConfig {
    pub kmax: u32,
    pub nmax: u32,
    /// Weights w ∈ ½Z with |w| ≤ bound are computed.
    pub weight_bound: Rational,
}

impl Default for ReportConfig {
    fn default() -> Self {
        Self { kmax: 3, nmax: 4, weight_bound: Rational::from_integer(2.into()) }
    }
}

impl ReportConfig {
    pub fn weights(&self) -> Vec<Rational> {
        let t = (&self.weight_bound * Rational::from_integer(2.into())).floor().to_integer();
        let t: i64 = t.try_into().expect("small window");
        (-t..=t).map(|i| q(i, 2)).collect()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimEntry {
    pub total: usize,
    pub even: usize,
    pub odd: usize,
}

impl DimEntry {
    fn new(total: usize, parity: Option<Parity>) -> Self {
        match parity {
            Some(Parity::Odd) => Self { total, even: 0, odd: total },
            _ => Self { total, even: total, odd: 0 },
        }
    }
}

fn by_degree(dims: &[usize]) -> BTreeMap<String, usize> {
    dims.iter().enumerate().map(|(n, d)| (n.to_string(), *d)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub lambda: String,
    pub mu: String,
    #[serde(rename = "K")]
    pub kmax: u32,
    pub nmax: u32,
    pub weights: Vec<String>,
    /// degree → weight → dims
    pub computed: BTreeMap<String, BTreeMap<String, DimEntry>>,
    pub theorem: BTreeMap<String, usize>,
    pub proposition: BTreeMap<String, usize>,
    pub sl2_computed: BTreeMap<String, usize>,
    pub sl2_predicted: BTreeMap<String, usize>,
    /// All weights other than 0 have vanishing cohomology.
    pub weight_vanishing: bool,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Computes every block in the window and compares weight 0 with the
/// predictions. K is raised to the guard `⌈|μ-λ|⌉ + 1` when smaller.
pub fn compute_report(lambda: &Rational, mu: &Rational, config: &ReportConfig, table: &StructureTable) -> Result<CohomologyReport> {
    let kmax = config.kmax.max(guarded_kmax(lambda, mu));
    let module = DensityModule::new(lambda.clone(), mu.clone(), kmax);
    let weights = config.weights();
    let per_weight: Vec<(Rational, Vec<usize>)> = weights
        .par_iter()
        .map(|w| (w.clone(), h_dims(&module, table, Complex::Full, config.nmax, w)))
        .collect();
    let zero = Rational::zero();
    let mut computed: BTreeMap<String, BTreeMap<String, DimEntry>> = BTreeMap::new();
    let mut at_zero = vec![0; config.nmax as usize + 1];
    let mut weight_vanishing = true;
    for (w, dims) in &per_weight {
        let parity = block_parity(&module, w);
        for (n, d) in dims.iter().enumerate() {
            computed.entry(n.to_string()).or_default().insert(to_fraction(w), DimEntry::new(*d, parity));
        }
        if *w == zero {
            at_zero = dims.clone();
        } else if dims.iter().any(|d| *d != 0) {
            weight_vanishing = false;
        }
    }
    let theorem = predict_theorem(&module, config.nmax)?;
    let proposition = predict_proposition(lambda, mu, config.nmax);
    let sl2_computed = h_dims(&module, table, Complex::Sl2, config.nmax, &zero);
    let sl2_predicted = predict_sl2(&module, config.nmax)?;
    let matches = at_zero == theorem && at_zero == proposition && sl2_computed == sl2_predicted && weight_vanishing;
    Ok(CohomologyReport {
        lambda: to_fraction(lambda),
        mu: to_fraction(mu),
        kmax,
        nmax: config.nmax,
        weights: weights.iter().map(to_fraction).collect(),
        computed,
        theorem: by_degree(&theorem),
        proposition: by_degree(&proposition),
        sl2_computed: by_degree(&sl2_computed),
        sl2_predicted: by_degree(&sl2_predicted),
        weight_vanishing,
        matches,
    })
}

impl CohomologyReport {
    /// Weight-0 dimensions by degree.
    pub fn weight_zero(&self) -> Vec<usize> {
        (0..=self.nmax)
            .map(|n| self.computed.get(&n.to_string()).and_then(|m| m.get("0/1")).map_or(0, |e| e.total))
            .collect()
    }

    pub const CSV_HEADER: [&'static str; 11] =
        ["lambda", "mu", "K", "n", "w", "total", "even", "odd", "theorem", "proposition", "match"];

    /// One row per (n, w); predictions are filled in at w = 0 only.
    pub fn csv_rows(&self) -> Vec<[String; 11]> {
        let mut rows = Vec::new();
        for n in 0..=self.nmax {
            let key = n.to_string();
            for w in &self.weights {
                let e = self.computed.get(&key).and_then(|m| m.get(w)).copied().unwrap_or_default();
                let (th, pr) = if w == "0/1" {
                    (self.theorem[&key].to_string(), self.proposition[&key].to_string())
                } else {
                    (String::new(), String::new())
                };
                rows.push([
                    self.lambda.clone(),
                    self.mu.clone(),
                    self.kmax.to_string(),
                    key.clone(),
                    w.clone(),
                    e.total.to_string(),
                    e.even.to_string(),
                    e.odd.to_string(),
                    th,
                    pr,
                    self.matches.to_string(),
                ]);
            }
        }
        rows
    }
}
