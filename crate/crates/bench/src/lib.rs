//! Inputs shared by the benchmarks.

use std::f64::consts::TAU;

use zetakit::catalog::{self, Instance, Target};
use zetakit::CatalogKey;

/// Every entry that assembles to zeta(3).
pub fn zeta3_instances() -> Vec<Instance> {
    catalog::registry()
        .iter()
        .filter(|d| d.targets.contains(&Target::Zeta3) && !d.is_family())
        .map(|d| Instance::new(&CatalogKey::new(d.id)).expect("scalar entry"))
        .collect()
}

/// `n` angles evenly spread over `(0, 2pi)`.
pub fn angle_grid(n: usize) -> Vec<f64> {
    (1..=n).map(|i| TAU * i as f64 / (n + 1) as f64).collect()
}

/// Sums `inst` far enough that the assembled error is below `tol`.
pub fn assemble(inst: &Instance, tol: f64) -> f64 {
    let n = inst
        .terms_for_tail(0.5 * tol / inst.error_gain(), 1_000_000)
        .expect("fast series");
    inst.assembled_sum(n).expect("n >= start").value
}
