//! A positive matrix with prescribed diagonal whose singular values stay
//! below a given sequence, built from plane rotations.
//!
//! ```text
//! cargo run --example witness
//! ```

use schurpat::schur_horn::{kaftal_weiss_witness, schur_horn_rotations, verify_witness, SpectrumDiagonalPair};
use schurpat::RealSeq;

fn main() -> schurpat::Result<()> {
    let pair = SpectrumDiagonalPair::new(RealSeq::parse_list("2, 1.5, 0.5")?, RealSeq::parse_list("3, 1, 0")?)?;
    let built = schur_horn_rotations(&pair)?;
    println!("{} rotations:", built.rotations.len());
    for r in &built.rotations {
        println!("  ({}, {}) cos={:.4} sin={:.4}", r.i, r.j, r.cos, r.sin);
    }
    print_real(&built.matrix);

    // y is only submajorised by x; the witness first shrinks x to x' with y < x'.
    let y = RealSeq::parse_list("0.25, 0.25, 0.25, 0.25")?;
    let x = RealSeq::parse_list("1")?;
    let v = kaftal_weiss_witness(&y, &x, 4)?;
    println!("\nwitness for y = (1/4, ..., 1/4), x = (1, 0, ...):");
    print_real(&v);
    println!("{:?}", verify_witness(&v, &y, &x)?);
    Ok(())
}

fn print_real(m: &schurpat::Matrix) {
    for i in 0..m.n() {
        let row: Vec<String> = (0..m.n()).map(|j| format!("{:7.4}", m.get(i, j).re)).collect();
        println!("  [{}]", row.join(" "));
    }
}
