//! Lacunary Hankel patterns: estimates on the operator norm stay small,
//! while Schatten 1/2 picks up the monotone diagonals hidden inside.
//!
//! ```text
//! cargo run --example hankel_probe
//! ```

use schurpat::multipliers::hankel_probe;
use schurpat::IdealNorm;

fn main() -> schurpat::Result<()> {
    let sizes = [8usize, 16, 32, 64];
    for norm in ["op", "schatten:1/2"] {
        let norm: IdealNorm = norm.parse()?;
        let probe = hankel_probe(2.0, norm, &sizes, 30, 0)?;
        println!("{norm} (bounded heuristic: {})", probe.bounded_heuristic);
        for i in 0..sizes.len() {
            println!(
                "  n = {:>3}: cells {:>4}, chain {:>2}, ratio {:.4}",
                probe.report.sizes[i], probe.cells[i], probe.lis_lengths[i], probe.report.ratios[i]
            );
        }
        println!("  fitted exponent {:?}", probe.report.fit_exponent);
    }
    Ok(())
}
