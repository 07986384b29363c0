//! Moving the diagonal witness onto a Toeplitz line: offset d inside an
//! n x n box behaves like the diagonal of size n - |d|.
//!
//! ```text
//! cargo run --example toeplitz_transfer
//! ```

use schurpat::multipliers::toeplitz_transfer_check;

fn main() -> schurpat::Result<()> {
    let n = 8;
    println!("Schatten 1/2 ratios in an {n} x {n} box");
    for d in -(n as i64 - 1)..n as i64 {
        let ratio = toeplitz_transfer_check(d, 0.5, n)?;
        println!("d = {d:>3}: {ratio:>8.4}  {}", "#".repeat(ratio.round() as usize));
    }
    Ok(())
}
