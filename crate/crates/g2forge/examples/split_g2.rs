//! The split model: binary forms, transvections, and the simple Lie algebra
//! structure on V₂ ⊕ V₁₀ with its integer ad-spectrum and indefinite
//! Killing form.
//!
//! Run with `cargo run --release --example split_g2`.

use g2forge::scalar::Rat;
use g2forge::transvection::{transvect, BinaryForm, SplitG2};

fn main() -> g2forge::Result<()> {
    // transvections of small forms
    let x2 = BinaryForm::monomial(2, 2);
    let y2 = BinaryForm::monomial(2, 0);
    println!("(X^2, Y^2)_1 = {}", transvect(&x2, &y2, 1)?);
    let f = BinaryForm::monomial(10, 3);
    let h = BinaryForm::monomial(2, 1).scale(&Rat::from_integer(4.into()));
    println!(
        "5(4XY, X^3 Y^7)_1 = {}",
        transvect(&h, &f, 1)?.scale(&Rat::from_integer(5.into()))
    );

    let split = SplitG2::build()?;
    println!("\nJacobi identity on 364 triples: {}", split.jacobi_holds());
    println!(
        "simple (ideal closure from every basis vector): {}",
        split.is_simple()
    );
    println!(
        "Killing signature (pos, neg, zero): {:?}",
        split.killing_signature()
    );
    println!(
        "ad(4XY) spectrum: {:?}",
        split
            .ad_h_spectrum()
            .expect("diagonal with integer entries")
    );
    Ok(())
}
