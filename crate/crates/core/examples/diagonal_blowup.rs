//! The diagonal multiplier on the rank-one witness J_n/n: bounded on the
//! trace class and above, growing like n^{1/p - 1} below it.
//!
//! ```text
//! cargo run --example diagonal_blowup > blowup.csv
//! python3 crates/core/scripts/plot_blowup.py blowup.csv
//! ```

use schurpat::multipliers::diagonal_blowup;

fn main() -> schurpat::Result<()> {
    let sizes = [2usize, 4, 8, 16, 32, 64];
    println!("p,size,ratio,expected");
    for p in [1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0] {
        let report = diagonal_blowup(p, &sizes)?;
        for (&n, &ratio) in report.sizes.iter().zip(&report.ratios) {
            println!("{p},{n},{ratio},{}", (n as f64).powf(1.0 / p - 1.0));
        }
        eprintln!("p = {p:.4}: fitted exponent {:.6}", report.fit_exponent.unwrap_or(f64::NAN));
    }
    Ok(())
}
