//! Singular values, Schatten quasi-norms and the exact diagonal average.
//!
//! ```text
//! cargo run --example singular_values
//! ```

use schurpat::random;
use schurpat::spectra::{diag_average, diag_extract, ideal_norm, singular_values};
use schurpat::{IdealNorm, Matrix};

fn main() -> schurpat::Result<()> {
    let j3 = Matrix::ones(3).scale(1.0 / 3.0);
    println!("mu(J_3/3)       = {:?}", singular_values(&j3)?.as_slice());

    let a = random::complex_gaussian(6, &mut random::rng(0));
    let mu = singular_values(&a)?;
    println!("mu(A)           = {:.4?}", mu.as_slice());

    for norm in ["schatten:1/2", "trace", "schatten:2", "op", "kyfan:3"] {
        let norm: IdealNorm = norm.parse()?;
        println!("{:<15} = {:.6}", norm.to_string(), ideal_norm(&a, norm)?);
    }

    // The n-point average of U_k A U_k* kills everything off the diagonal.
    let avg = diag_average(&a);
    println!("off-diagonal    = {:.2e}", avg.max_off_diagonal());
    let diag: Vec<f64> = diag_extract(&a).iter().map(|z| z.norm()).collect();
    println!("|diag(A)|       = {diag:.4?}");
    Ok(())
}
