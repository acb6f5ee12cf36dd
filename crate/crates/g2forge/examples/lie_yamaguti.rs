//! Lie-Yamaguti algebras: the binary-ternary structure of each reductive
//! pair g₂ = h ⊕ m, and the transvection-defined structure on V₁₀, with all
//! six axioms verified exactly.
//!
//! Run with `cargo run --release --example lie_yamaguti`.

use g2forge::g2::G2;
use g2forge::repr::lie_yamaguti_from_pair;
use g2forge::subalgebras::{build_all, reductive_complement};
use g2forge::transvection::{ly_products_v10, v10_lie_yamaguti, BinaryForm};

fn main() -> g2forge::Result<()> {
    let g2 = G2::build()?;
    for sub in build_all(&g2)? {
        let label = sub.label;
        let pair = reductive_complement(&g2, &sub)?;
        let ly = lie_yamaguti_from_pair(&g2, &pair)?;
        ly.verify_axioms()?;
        println!(
            "pair with {label}: dim m = {:2}, six axioms hold, binary product {}",
            ly.dim(),
            if ly.binary_is_zero() {
                "vanishes (symmetric pair)"
            } else {
                "is nonzero"
            }
        );
    }

    let ly = v10_lie_yamaguti();
    ly.verify_axioms()?;
    println!("\nV10 transvection products: six axioms hold on the monomial basis");
    let f1 = BinaryForm::monomial(10, 10);
    let f2 = BinaryForm::monomial(10, 0);
    let f3 = BinaryForm::monomial(10, 1);
    let (binary, ternary) = ly_products_v10(&f1, &f2, &f3)?;
    println!("X^10 . Y^10          = {binary}");
    println!("[X^10, Y^10, X Y^9]  = {ternary}");
    Ok(())
}
