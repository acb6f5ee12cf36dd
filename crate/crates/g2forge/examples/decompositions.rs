//! su(2)-module decompositions of the 7- and 14-dimensional modules under
//! the four three-dimensional subalgebras, with centralizer dimensions and
//! Dynkin indices computed by two independent routes.
//!
//! Run with `cargo run --release --example decompositions`.

use g2forge::g2::G2;
use g2forge::repr::{dynkin_index, dynkin_index_trace_oracle, sl2_decompose, Space};
use g2forge::subalgebras::{build, Label};

fn main() -> g2forge::Result<()> {
    let g2 = G2::build()?;
    for label in [Label::H3, Label::H5, Label::H7, Label::H8] {
        let sub = build(&g2, label)?;
        let on7 = sl2_decompose(&g2, &sub, Space::ImaginaryOctonions)?;
        let on14 = sl2_decompose(&g2, &sub, Space::Adjoint)?;
        let (z_e, z_h) = on14.centralizer_dims();
        let j_weights = dynkin_index(&g2, &sub)?;
        let j_trace = dynkin_index_trace_oracle(&g2, &sub)?;
        println!("{label}:");
        println!("  on the imaginary octonions: {on7}");
        println!("  on the adjoint module:      {on14}");
        println!("  dim z(e) = {z_e}, dim z(h) = {z_h}");
        println!("  Dynkin index = {j_weights} (weights) = {j_trace} (trace ratio)");
    }
    Ok(())
}
