//! Solves the defining constraints of the eight reductive subalgebras,
//! verifies the classical generator presentations, and prints the reductive
//! complements and structural certificates.
//!
//! Run with `cargo run --release --example subalgebras`.

use g2forge::g2::G2;
use g2forge::subalgebras::{
    build_all, complement_of_h6_matches, grading, presentations_match, reductive_complement,
};

fn main() -> g2forge::Result<()> {
    let g2 = G2::build()?;
    let subs = build_all(&g2)?;
    println!("label  dim  center  derived  complement");
    for sub in &subs {
        let pair = reductive_complement(&g2, sub)?;
        println!(
            "{:5} {:4} {:7} {:8} {:11}",
            sub.label.to_string(),
            sub.dim(),
            sub.center_dim(&g2),
            sub.derived_dim(&g2),
            pair.complement.len(),
        );
    }
    presentations_match(&g2, &subs)?;
    println!("\ngenerator presentations match the constraint solutions");
    complement_of_h6_matches(&g2, &subs)?;
    println!("D_{{i,w}} for w perp <1,i> spans the invariant complement of h6");
    let gr = grading(&g2, &subs)?;
    println!(
        "doubling grading: even part dim {}, odd part dim {}",
        gr.even.len(),
        gr.odd.len()
    );
    Ok(())
}
