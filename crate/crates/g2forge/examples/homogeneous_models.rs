//! The homogeneous models: Cayley triples and their automorphisms, the
//! coassociative duality, twistor witnesses, the quadric map, projections
//! and their equivariance, and the principal-subalgebra membership test.
//!
//! Run with `cargo run --release --example homogeneous_models`.

use g2forge::g2::{conjugate, G2};
use g2forge::homogeneous::{
    act, automorphism_from_triple, coassoc_duality, is_principal_subalgebra, m4_alpha, m5_witness,
    project, quadric_map, seeded_cayley_triples, subtriple_n, CayleyTriple, CoassocPlane, Point,
    Projection, QuatTwistorPoint,
};
use g2forge::matrix::Mat;
use g2forge::octonion::{im_idx::*, ImOctonion};
use g2forge::subalgebras::{build, build_h8, Label};

fn main() -> g2forge::Result<()> {
    let u = ImOctonion::unit;

    // the group as Cayley triples
    let t = CayleyTriple::new(u(J), u(K), u(L))?;
    let f = automorphism_from_triple(&t)?;
    println!(
        "automorphism from (j,k,l) is orthogonal: {}",
        &f.transpose() * &f == Mat::identity(7)
    );

    // the two views of the symmetric space
    let q = coassoc_duality(CoassocPlane::standard().basis())?;
    println!(
        "dual of the standard plane contains 1, i, j, k: {}",
        q.span_equals(&g2forge::homogeneous::QuatSubalgebra::standard())
    );

    // twistor data
    let plane = CoassocPlane::standard();
    let jl_structure = g2forge::g2::d_left(&u(I))?;
    println!(
        "alpha(left structure)  = {:+}",
        m4_alpha(&plane, &jl_structure, &u(L), &u(JL))?
    );
    let p = plane.projection();
    let jr = &(&p * &g2forge::g2::d_right(&u(I))?) * &p;
    println!(
        "alpha(right structure) = {:+}",
        m4_alpha(&plane, &jr, &u(L), &u(JL))?
    );
    let witness = m5_witness(&QuatTwistorPoint::standard())?;
    println!(
        "quaternionic twistor witness at the base point: {}",
        witness == Mat::identity(7)
    );

    // the quadric certificate
    let flag = quadric_map(&u(J), &u(K))?;
    println!("oriented frame (j,k) maps to w = {}", flag.w);

    // projections are equivariant
    let base = Point::Group(CayleyTriple::standard());
    let mut checked = 0;
    for t in seeded_cayley_triples(0, 5) {
        let g = automorphism_from_triple(&t)?;
        for which in [Projection::P03, Projection::P05, Projection::P07] {
            assert_eq!(
                act(&g, &project(&base, which)?)?,
                project(&act(&g, &base)?, which)?
            );
            checked += 1;
        }
    }
    println!("equivariance verified for {checked} (automorphism, projection) pairs");

    // the subtriple and the principal membership predicate
    let g2 = G2::build()?;
    println!(
        "subtriple span{{D_{{p,pl}}}} has dimension {}",
        subtriple_n(&g2)?.len()
    );
    let h8 = build_h8(&g2)?;
    let conj: Vec<Mat> = h8.basis.iter().map(|b| conjugate(&f, b)).collect();
    println!(
        "principal membership: h8 {}, conjugated h8 {}, h3 {}",
        is_principal_subalgebra(&g2, &h8.basis),
        is_principal_subalgebra(&g2, &conj),
        is_principal_subalgebra(&g2, &build(&g2, Label::H3)?.basis),
    );
    Ok(())
}
