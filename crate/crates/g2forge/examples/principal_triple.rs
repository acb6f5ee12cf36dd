//! The principal three-dimensional subalgebra: the explicit triple over
//! ℚ(√15), its bracket relations, spectrum, and absolute irreducibility.
//!
//! Run with `cargo run --release --example principal_triple`.

use g2forge::g2::{apply_im, G2};
use g2forge::matrix::Mat;
use g2forge::octonion::{ImOctonion, BASIS_NAMES};
use g2forge::repr::commutant_dim;
use g2forge::subalgebras::{build_h8, principal_triple};
use g2forge::Scalar;

fn main() -> g2forge::Result<()> {
    let (h, x, y) = principal_triple();
    println!(
        "[h,x] - y        = zero: {}",
        (&Mat::commutator(&h, &x) - &y).is_zero()
    );
    println!(
        "[h,y] + x        = zero: {}",
        (&Mat::commutator(&h, &y) + &x).is_zero()
    );
    let target = h.scale(&Scalar::from_ratio(8, 3));
    println!(
        "[x,y] - (8/3)h   = zero: {}",
        (&Mat::commutator(&x, &y) - &target).is_zero()
    );

    println!("\naction of h on the imaginary units:");
    for t in 0..7 {
        let img = apply_im(&h, &ImOctonion::unit(t));
        println!("  h({:>2}) = {}", BASIS_NAMES[t + 1], img);
    }
    println!(
        "\nchar poly of h on the imaginary octonions: {}",
        h.char_poly()
    );

    let g2 = G2::build()?;
    let h8 = build_h8(&g2)?;
    println!("dim h8 = {}", h8.dim());
    println!(
        "commutant of h8 acting on the 7-dim space: {} (absolute irreducibility)",
        commutant_dim(&h8.basis)
    );
    Ok(())
}
