//! The table of homotopy types of `N(n, k)` (or its clique complex).

use arcnerve::homotopy::{clique_homotopy, nerve_homotopy};
use arcnerve::Variant;
use rayon::prelude::*;

/// Tab-separated rows `n = 2..=n_max`, columns `k = 0..=k_max`. The first
/// line is a header `n\k 0 1 …`.
pub fn render(n_max: usize, k_max: usize, variant: Variant) -> String {
    let classify = match variant {
        Variant::Nerve => nerve_homotopy,
        Variant::Clique => clique_homotopy,
    };
    let rows: Vec<String> = (2..=n_max.max(1))
        .into_par_iter()
        .map(|n| {
            let mut row = n.to_string();
            for k in 0..=k_max {
                row.push('\t');
                row.push_str(&classify(n, k).to_string());
            }
            row
        })
        .collect();
    let mut out = String::from("n\\k");
    for k in 0..=k_max {
        out.push('\t');
        out.push_str(&k.to_string());
    }
    out.push('\n');
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}
