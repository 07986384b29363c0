//! Monte-Carlo lower bounds on multiplier norms for a few patterns and
//! norms. Hilbert-Schmidt never exceeds 1; quasi-norms grow with the
//! longest monotone diagonal.
//!
//! ```text
//! cargo run --example estimate
//! ```

use schurpat::multipliers::{estimate_multiplier_norm, witness_lower_bound};
use schurpat::patterns::Pattern;
use schurpat::IdealNorm;

fn main() -> schurpat::Result<()> {
    let n = 12;
    let patterns = [
        ("diagonal", Pattern::diagonal(n)),
        ("upper triangle", Pattern::new(n, (0..n).flat_map(|i| (i..n).map(move |j| (i, j))))?),
        ("anti-diagonal", Pattern::hankel(&[n - 1], n)),
        ("random 0.3", Pattern::random(n, 0.3, 1)?),
    ];
    let norms = ["schatten:1/2", "trace", "schatten:2", "op"];
    print!("{:<16}", "");
    for norm in norms {
        print!("{norm:>14}");
    }
    println!("{:>14}", "witness 1/2");
    for (name, p) in &patterns {
        print!("{name:<16}");
        for norm in norms {
            let norm: IdealNorm = norm.parse()?;
            print!("{:>14.4}", estimate_multiplier_norm(p, norm, 30, 0)?);
        }
        println!("{:>14.4}", witness_lower_bound(p, IdealNorm::schatten(0.5)?)?);
    }
    Ok(())
}
