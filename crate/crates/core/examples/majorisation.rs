//! Submajorisation, the intermediate sequence, and how the distortion
//! functional separates p < 1 from p >= 1.
//!
//! ```text
//! cargo run --example majorisation
//! ```

use schurpat::major::{distortion, intermediate, is_majorised, is_submajorised, ky_fan_sum};
use schurpat::{IdealNorm, RealSeq};

fn main() -> schurpat::Result<()> {
    let x = RealSeq::parse_list("1, 0")?;
    let y = RealSeq::parse_list("0.6, 0.3")?;
    println!("y <<  x: {}", is_submajorised(&y, &x));
    println!("y <   x: {}", is_majorised(&y, &x));

    let mid = intermediate(&y, &x)?;
    println!("intermediate: {:?} (y < x': {})", mid.values(), is_majorised(&y, &mid));
    println!("Ky Fan sums of x': {:?}", (0..=2).map(|k| ky_fan_sum(&mid, k)).collect::<Vec<_>>());

    let b = RealSeq::parse_list("1")?;
    println!("\n{:>4} {:>14} {:>14}", "n", "schatten:1/2", "schatten:1");
    for n in [1usize, 2, 4, 8, 16, 32] {
        let half = distortion(&b, IdealNorm::schatten(0.5)?, n)?;
        let one = distortion(&b, IdealNorm::trace(), n)?;
        println!("{n:>4} {half:>14.3} {one:>14.3}");
    }
    Ok(())
}
