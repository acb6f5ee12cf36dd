//! Builds the 14-dimensional derivation algebra of the octonions and prints
//! its structural facts: basis selection, Jacobi identity, Killing form.
//!
//! Run with `cargo run --release --example build_g2`.

use g2forge::g2::{self, G2};

fn main() -> g2forge::Result<()> {
    let g2 = G2::build()?;
    println!("dimension: {}", g2.basis().len());
    println!(
        "basis derivations D_{{e_a,e_b}} chosen at index pairs: {:?}",
        g2.basis_pairs()
    );
    println!(
        "every basis element is a derivation: {}",
        g2.basis().iter().all(g2::is_derivation)
    );
    println!(
        "Jacobi identity on all 364 basis triples: {}",
        g2.jacobi_holds()
    );
    println!(
        "Killing form negative definite: {}",
        g2.killing().is_negative_definite()
    );
    println!(
        "Killing form / 7-dim trace form ratio: {}",
        g2.trace_form_ratio().expect("the ratio is constant")
    );
    println!(
        "ad-invariance of the Killing form: {}",
        g2.killing_ad_invariant()
    );
    Ok(())
}
