//! Pattern decisions: row/column budget decomposition, minimum line cover
//! and the longest monotone diagonal, swept over growing boxes.
//!
//! ```text
//! cargo run --example patterns
//! ```

use schurpat::patterns::{dd_decompose, extract_monotone_diagonal, minimal_cover, Pattern, Part};

fn smallest_budgets(p: &Pattern) -> Vec<(usize, usize)> {
    // Pareto frontier of feasible (r, c).
    let mut frontier = Vec::new();
    let mut c = p.n();
    for r in 0..=p.n() {
        while c > 0 && dd_decompose(p, r, c - 1).is_some() {
            c -= 1;
        }
        if dd_decompose(p, r, c).is_some() && frontier.last().is_none_or(|&(_, lc)| c < lc) {
            frontier.push((r, c));
        }
    }
    frontier
}

fn main() -> schurpat::Result<()> {
    let p = Pattern::full(2);
    let d = dd_decompose(&p, 1, 1).expect("2x2 splits with one cell per line");
    println!("full(2), r = c = 1: R = {:?}, C = {:?}", d.cells_in(Part::Row).collect::<Vec<_>>(), d.cells_in(Part::Column).collect::<Vec<_>>());
    println!("full(3), r = c = 1: {}", if dd_decompose(&Pattern::full(3), 1, 1).is_some() { "feasible" } else { "infeasible" });

    println!("\n{:>4} {:>10} {:>8} {:>8} {:>8}   budgets", "n", "pattern", "cells", "cover", "chain");
    for n in [4usize, 8, 16, 32] {
        let named = [
            ("diagonal", Pattern::diagonal(n)),
            ("toeplitz", Pattern::toeplitz(&[-1, 2], n)),
            ("lacunary", Pattern::lacunary_hankel(2.0, n)?),
            ("random", Pattern::random(n, 0.1, 7)?),
        ];
        for (name, p) in named {
            let cover = minimal_cover(&p).len();
            let chain = extract_monotone_diagonal(&p).len();
            println!("{n:>4} {name:>10} {:>8} {cover:>8} {chain:>8}   {:?}", p.len(), smallest_budgets(&p));
        }
    }
    Ok(())
}
