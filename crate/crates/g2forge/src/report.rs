//! The machine-checkable verification suite: every constructive claim the
//! crate implements, run as one named check each, with a JSON-serializable
//! report for CI consumption.

use serde::{Deserialize, Serialize};
use std::time::Instant;

use crate::g2::{self, apply_im, conjugate, d_left, d_right, is_automorphism, G2};
use crate::homogeneous::{
    self, act, automorphism_from_triple, coassoc_duality, flag_to_oriented_plane, m4_alpha,
    m4_witness, m5_witness, project, quadric_map, seeded_cayley_triples, subtriple_n, CayleyTriple,
    CoassocFlag, CoassocPlane, Frame2, Point, Projection, QuatSubalgebra, QuatTwistorPoint,
    TwistorPoint,
};
use crate::matrix::Mat;
use crate::octonion::{im_idx, ImOctonion, Octonion};
use crate::poly::expand_weights;
use crate::repr::{
    commutant_dim, dynkin_index, dynkin_index_trace_oracle, index_from_decomposition,
    lie_yamaguti_from_pair, principal_coeffs, sl2_decompose, Decomposition, Space,
};
use crate::scalar::{Rat, Scalar};
use crate::subalgebras::{
    self, principal_triple, reductive_complement, Label, ReductivePair, Subalgebra,
};
use crate::transvection::{self, ly_products_v10, v10_lie_yamaguti, BinaryForm, SplitG2};

/// Everything the checks need, built once.
pub struct Context {
    pub g2: G2,
    pub subs: Vec<Subalgebra>,
    pub pairs: Vec<ReductivePair>,
    pub split: SplitG2,
    pub seed: u64,
}

impl Context {
    pub fn new(seed: u64) -> crate::Result<Context> {
        let g2 = G2::build()?;
        let subs = subalgebras::build_all(&g2)?;
        let pairs = subs
            .iter()
            .map(|s| reductive_complement(&g2, s))
            .collect::<crate::Result<Vec<_>>>()?;
        let split = SplitG2::build()?;
        Ok(Context {
            g2,
            subs,
            pairs,
            split,
            seed,
        })
    }

    fn sub(&self, label: Label) -> &Subalgebra {
        &self.subs[label.index()]
    }
}

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One executed check.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub wall_time_ms: u128,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct Report {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn passed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }
}

type CheckFn = fn(&Context) -> Result<(), String>;

pub struct CheckDef {
    pub id: &'static str,
    pub claim: &'static str,
    run: CheckFn,
}

/// Simple `*`-glob matching for check ids: the first segment is anchored at
/// the start, the last at the end, and the middle segments must appear in
/// order in between.
pub fn matches_filter(id: &str, pattern: &str) -> bool {
    let parts: Vec<&str> = pattern.split('*').collect();
    if parts.len() == 1 {
        return id == pattern;
    }
    let (first, last) = (parts[0], parts[parts.len() - 1]);
    if id.len() < first.len() + last.len() || !id.starts_with(first) || !id.ends_with(last) {
        return false;
    }
    let mut rest = &id[first.len()..id.len() - last.len()];
    for part in &parts[1..parts.len() - 1] {
        if part.is_empty() {
            continue;
        }
        match rest.find(part) {
            Some(pos) => rest = &rest[pos + part.len()..],
            None => return false,
        }
    }
    true
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn err_str<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ------------------------------------------------------------------- checks

fn check_g2_dimension(ctx: &Context) -> Result<(), String> {
    ensure(ctx.g2.basis().len() == 14, "dimension is not 14")
}

fn check_g2_jacobi(ctx: &Context) -> Result<(), String> {
    ensure(
        ctx.g2.jacobi_holds(),
        "Jacobi identity fails on a basis triple",
    )
}

fn check_g2_killing(ctx: &Context) -> Result<(), String> {
    ensure(
        ctx.g2.killing().is_negative_definite(),
        "Killing form is not negative definite",
    )?;
    ensure(
        ctx.g2.trace_form_ratio() == Some(Scalar::from_int(4)),
        "Killing form is not 4 times the 7-dimensional trace form",
    )
}

fn check_pointwise_formula(_ctx: &Context) -> Result<(), String> {
    // D_{x,y}(z) = [[x,y],z] - 3(x,y,z) on all 343 basis triples. With the
    // operator-commutator definition of D this is the sign that holds; it is
    // the classical inner-derivation identity for alternative algebras.
    let basis = ImOctonion::basis();
    for x in &basis {
        for y in &basis {
            let d = g2::d_xy(x, y);
            let br = Octonion::bracket(&x.embed(), &y.embed());
            for z in &basis {
                let expected = &Octonion::bracket(&br, &z.embed())
                    - &Octonion::associator(&x.embed(), &y.embed(), &z.embed())
                        .scale(&Scalar::from_int(3));
                if apply_im(&d, z).embed() != expected {
                    return Err(format!("fails at ({x}, {y}, {z})"));
                }
            }
        }
    }
    Ok(())
}

fn check_sub_dimensions(ctx: &Context) -> Result<(), String> {
    let dims: Vec<usize> = ctx.subs.iter().map(Subalgebra::dim).collect();
    ensure(
        dims == vec![6, 4, 3, 4, 3, 8, 3, 3],
        &format!("dimensions are {dims:?}"),
    )
}

fn check_sub_closure(ctx: &Context) -> Result<(), String> {
    for sub in &ctx.subs {
        let span = sub.coord_span();
        for i in 0..sub.dim() {
            for j in i + 1..sub.dim() {
                if !span.contains(&ctx.g2.bracket_coords(&sub.coords[i], &sub.coords[j])) {
                    return Err(format!("{} is not bracket-closed", sub.label));
                }
            }
        }
        if !sub.killing_restriction(&ctx.g2).is_negative_definite() {
            return Err(format!(
                "Killing restriction to {} is not negative definite",
                sub.label
            ));
        }
    }
    Ok(())
}

fn check_sub_presentations(ctx: &Context) -> Result<(), String> {
    err_str(subalgebras::presentations_match(&ctx.g2, &ctx.subs))?;
    err_str(subalgebras::complement_of_h6_matches(&ctx.g2, &ctx.subs))
}

fn check_sub_grading(ctx: &Context) -> Result<(), String> {
    let gr = err_str(subalgebras::grading(&ctx.g2, &ctx.subs))?;
    ensure(
        gr.even.len() == 6 && gr.odd.len() == 8,
        "grading dimensions are wrong",
    )?;
    // the odd part is the complement of h₁
    let pair = &ctx.pairs[Label::H1.index()];
    let odd = crate::matrix::Span::from_vectors(14, gr.odd);
    let comp = crate::matrix::Span::from_vectors(14, pair.complement.iter().cloned());
    ensure(
        odd.equals(&comp),
        "odd part differs from the complement of h1",
    )
}

fn check_complement_dimensions(ctx: &Context) -> Result<(), String> {
    let dims: Vec<usize> = ctx.pairs.iter().map(|p| p.complement.len()).collect();
    ensure(
        dims == vec![8, 10, 11, 10, 11, 6, 11, 11],
        &format!("complement dimensions are {dims:?}"),
    )
}

fn check_h8_brackets(_ctx: &Context) -> Result<(), String> {
    let (h, x, y) = principal_triple();
    ensure(Mat::commutator(&h, &x) == y, "[h,x] != y")?;
    ensure(Mat::commutator(&h, &y) == -&x, "[h,y] != -x")?;
    ensure(
        Mat::commutator(&x, &y) == h.scale(&Scalar::from_ratio(8, 3)),
        "[x,y] != (8/3)h",
    )?;
    use im_idx::*;
    let u = ImOctonion::unit;
    ensure(apply_im(&h, &u(J)) == u(K), "h(j) != k")?;
    ensure(
        apply_im(&h, &u(L)) == u(IL).scale(&Scalar::from_int(2)),
        "h(l) != 2il",
    )
}

fn check_h8_charpoly(_ctx: &Context) -> Result<(), String> {
    let (h, _, _) = principal_triple();
    ensure(
        h.char_poly() == expand_weights(1, &[1, 1, 1]),
        "char poly of h is not \u{3bb}(\u{3bb}\u{b2}+1)(\u{3bb}\u{b2}+4)(\u{3bb}\u{b2}+9)",
    )
}

fn check_h8_commutant_o0(ctx: &Context) -> Result<(), String> {
    let d = commutant_dim(&ctx.sub(Label::H8).basis);
    ensure(
        d == 1,
        &format!("commutant on the 7-dim space has dimension {d}"),
    )
}

fn check_h8_commutant_complement(ctx: &Context) -> Result<(), String> {
    let pair = &ctx.pairs[Label::H8.index()];
    let span = crate::matrix::Span::from_vectors(14, pair.complement.iter().cloned());
    let solver = crate::matrix::SpanSolver::new(&span);
    let action: Vec<Mat> = ctx
        .sub(Label::H8)
        .coords
        .iter()
        .map(|c| {
            let cols: Vec<Vec<Scalar>> = pair
                .complement
                .iter()
                .map(|m| solver.coords(&ctx.g2.bracket_coords(c, m)).unwrap())
                .collect();
            Mat::from_cols(11, &cols)
        })
        .collect();
    let d = commutant_dim(&action);
    ensure(
        d == 1,
        &format!("commutant on the complement has dimension {d}"),
    )
}

fn expected_adjoint() -> [(Label, Vec<usize>, (usize, usize)); 4] {
    [
        (Label::H3, vec![2, 1, 1, 1, 1, 0, 0, 0], (8, 4)),
        (Label::H5, vec![3, 3, 2, 0, 0, 0], (6, 4)),
        (Label::H7, vec![4, 2, 2, 2], (4, 4)),
        (Label::H8, vec![10, 2], (2, 2)),
    ]
}

fn check_decompositions_adjoint(ctx: &Context) -> Result<(), String> {
    for (label, expected, _) in expected_adjoint() {
        let dec = err_str(sl2_decompose(&ctx.g2, ctx.sub(label), Space::Adjoint))?;
        let want = Decomposition::new(expected);
        if dec != want {
            return Err(format!("{label}: got {dec}, expected {want}"));
        }
    }
    Ok(())
}

fn check_decompositions_centralizers(ctx: &Context) -> Result<(), String> {
    for (label, _, zs) in expected_adjoint() {
        let dec = err_str(sl2_decompose(&ctx.g2, ctx.sub(label), Space::Adjoint))?;
        if dec.centralizer_dims() != zs {
            return Err(format!(
                "{label}: centralizers {:?}",
                dec.centralizer_dims()
            ));
        }
    }
    Ok(())
}

fn check_decompositions_seven(ctx: &Context) -> Result<(), String> {
    let cases = [
        (Label::H3, vec![1, 1, 0, 0, 0]),
        (Label::H5, vec![2, 1, 1]),
        (Label::H7, vec![2, 2, 0]),
        (Label::H8, vec![6]),
    ];
    for (label, expected) in cases {
        let dec = err_str(sl2_decompose(
            &ctx.g2,
            ctx.sub(label),
            Space::ImaginaryOctonions,
        ))?;
        let want = Decomposition::new(expected);
        if dec != want {
            return Err(format!("{label}: got {dec}, expected {want}"));
        }
    }
    Ok(())
}

fn check_dynkin(ctx: &Context) -> Result<(), String> {
    let rat = |n: i64| Rat::from_integer(n.into());
    for (label, j) in [
        (Label::H3, 1i64),
        (Label::H5, 3),
        (Label::H7, 4),
        (Label::H8, 28),
    ] {
        let weight = err_str(dynkin_index(&ctx.g2, ctx.sub(label)))?;
        let trace = err_str(dynkin_index_trace_oracle(&ctx.g2, ctx.sub(label)))?;
        let dec = err_str(sl2_decompose(
            &ctx.g2,
            ctx.sub(label),
            Space::ImaginaryOctonions,
        ))?;
        let formula = index_from_decomposition(&dec);
        if weight != rat(j) || trace != rat(j) || formula != rat(j) {
            return Err(format!(
                "{label}: routes give {weight}, {trace}, {formula}, expected {j}"
            ));
        }
    }
    Ok(())
}

fn check_principal_coeffs(_ctx: &Context) -> Result<(), String> {
    let rat = |n: i64| Rat::from_integer(n.into());
    let g2c = err_str(principal_coeffs(&[vec![2, -1], vec![-3, 2]]))?;
    ensure(
        g2c == vec![rat(6), rat(10)],
        "coefficients for the rank-2 exceptional system",
    )?;
    let a1 = err_str(principal_coeffs(&[vec![2]]))?;
    ensure(a1 == vec![rat(1)], "coefficients for the rank-1 system")?;
    ensure(
        g2c.iter().all(|c| c > &Rat::from_integer(0.into())),
        "coefficients must be positive",
    )
}

fn check_split_jacobi(ctx: &Context) -> Result<(), String> {
    ensure(ctx.split.jacobi_holds(), "Jacobi identity fails")
}

fn check_split_simplicity(ctx: &Context) -> Result<(), String> {
    ensure(ctx.split.is_simple(), "a proper ideal exists")
}

fn check_split_spectrum(ctx: &Context) -> Result<(), String> {
    let spectrum = ctx
        .split
        .ad_h_spectrum()
        .ok_or("ad(4XY) is not diagonal with integer entries")?;
    let mut expected: Vec<i64> = vec![2, 0, -2];
    expected.extend((0..=10).map(|k| 10 - 2 * k));
    ensure(spectrum == expected, &format!("spectrum is {spectrum:?}"))
}

fn check_split_signature(ctx: &Context) -> Result<(), String> {
    let sig = ctx.split.killing_signature();
    ensure(sig == (8, 6, 0), &format!("signature is {sig:?}"))
}

fn check_split_jacobian_value(_ctx: &Context) -> Result<(), String> {
    let f1 = BinaryForm::monomial(10, 10);
    let f2 = BinaryForm::monomial(10, 0);
    let f3 = BinaryForm::monomial(10, 1);
    let t = |a: &BinaryForm, b: &BinaryForm, c: &BinaryForm| -> Result<BinaryForm, String> {
        Ok(err_str(ly_products_v10(a, b, c))?.1)
    };
    let total = &(&t(&f1, &f2, &f3)? + &t(&f2, &f3, &f1)?) + &t(&f3, &f1, &f2)?;
    let expected = BinaryForm::monomial(10, 1).scale(&Rat::new(5.into(), 252.into()));
    ensure(total == expected, &format!("cyclic sum is {total}"))
}

fn check_ly_v10(_ctx: &Context) -> Result<(), String> {
    let ly = v10_lie_yamaguti();
    ensure(!ly.binary_is_zero(), "the binary product should not vanish")?;
    err_str(ly.verify_axioms())
}

fn check_ly_pairs(ctx: &Context) -> Result<(), String> {
    for pair in &ctx.pairs {
        let ly = err_str(lie_yamaguti_from_pair(&ctx.g2, pair))?;
        err_str(ly.verify_axioms()).map_err(|e| format!("{}: {e}", pair.sub.label))?;
        if pair.sub.label == Label::H1 && !ly.binary_is_zero() {
            return Err("the symmetric pair must have vanishing binary product".into());
        }
    }
    Ok(())
}

fn check_ly_projection_consistency(_ctx: &Context) -> Result<(), String> {
    // The V₁₀ products agree with the projected bracket of the split model.
    for i in 0..11usize {
        let fi = BinaryForm::monomial(10, i);
        let ei = err_str(transvection::SplitElement::from_v10(fi.clone()))?;
        for j in 0..11usize {
            let fj = BinaryForm::monomial(10, j);
            let ej = err_str(transvection::SplitElement::from_v10(fj.clone()))?;
            let br = transvection::bracket(&ei, &ej);
            let (binary, _) = err_str(ly_products_v10(&fi, &fj, &fi))?;
            if br.v10 != binary {
                return Err(format!("binary product mismatch at ({i},{j})"));
            }
            let v2_part = err_str(transvection::SplitElement::from_v2(br.v2.clone()))?;
            for k in 0..11usize {
                let fk = BinaryForm::monomial(10, k);
                let ek = err_str(transvection::SplitElement::from_v10(fk.clone()))?;
                let (_, ternary) = err_str(ly_products_v10(&fi, &fj, &fk))?;
                let projected = transvection::bracket(&v2_part, &ek);
                if !projected.v2.is_zero() || projected.v10 != ternary {
                    return Err(format!("ternary product mismatch at ({i},{j},{k})"));
                }
            }
        }
    }
    Ok(())
}

fn check_models_cayley(_ctx: &Context) -> Result<(), String> {
    use im_idx::*;
    let u = ImOctonion::unit;
    ensure(
        homogeneous::is_cayley_triple(&u(I), &u(J), &u(L)),
        "(i,j,l) must be a Cayley triple",
    )?;
    ensure(
        !homogeneous::is_cayley_triple(&u(I), &u(J), &u(K)),
        "(i,j,k) has \u{3a9} = 1",
    )?;
    ensure(
        !homogeneous::is_cayley_triple(&u(I), &u(I), &u(L)),
        "(i,i,l) is not orthonormal",
    )
}

fn check_models_automorphisms(ctx: &Context) -> Result<(), String> {
    let triples = seeded_cayley_triples(ctx.seed, 6);
    let mut previous: Option<Mat> = None;
    for t in &triples {
        let f = err_str(automorphism_from_triple(t))?;
        ensure(is_automorphism(&f), "multiplicativity fails")?;
        ensure(&f.transpose() * &f == Mat::identity(7), "not orthogonal")?;
        ensure(g2::preserves_omega(&f), "does not preserve the calibration")?;
        if let Some(p) = previous {
            ensure(is_automorphism(&(&p * &f)), "composition fails")?;
        }
        previous = Some(f);
    }
    Ok(())
}

fn check_models_duality(_ctx: &Context) -> Result<(), String> {
    use im_idx::*;
    let u = ImOctonion::unit;
    let hl = CoassocPlane::standard();
    let q = err_str(coassoc_duality(hl.basis()))?;
    ensure(
        q.span_equals(&QuatSubalgebra::standard()),
        "dual of \u{210d}l is not \u{210d}",
    )?;
    ensure(
        coassoc_duality(&[u(I), u(J), u(K), u(L)]).is_err(),
        "span{i,j,k,l} is not coassociative",
    )?;
    let back = err_str(homogeneous::quat_to_coassoc(&q))?;
    ensure(back.span_equals(&hl), "round trip fails")
}

fn check_models_alpha(_ctx: &Context) -> Result<(), String> {
    use im_idx::*;
    let u = ImOctonion::unit;
    let plane = CoassocPlane::standard();
    let jl_struct = err_str(d_left(&u(I)))?;
    let a = err_str(m4_alpha(&plane, &jl_struct, &u(L), &u(JL)))?;
    ensure(a == 1, "left structure must have \u{3b1} = +1")?;
    let proj = plane.projection();
    let dr = err_str(d_right(&u(I)))?;
    let jr = &(&proj * &dr) * &proj;
    let a = err_str(m4_alpha(&plane, &jr, &u(L), &u(JL)))?;
    ensure(a == -1, "right structure must have \u{3b1} = -1")
}

fn check_models_twistor_witness(_ctx: &Context) -> Result<(), String> {
    use im_idx::*;
    let u = ImOctonion::unit;
    let base = TwistorPoint::standard();
    err_str(m4_witness(&base))?;
    let t = err_str(CayleyTriple::new(u(J), u(K), u(L)))?;
    let f = err_str(automorphism_from_triple(&t))?;
    let moved = match err_str(act(&f, &Point::Twistor(base)))? {
        Point::Twistor(t) => t,
        _ => unreachable!(),
    };
    let w = err_str(m4_witness(&moved))?;
    ensure(
        conjugate(&w, &err_str(d_left(&u(I)))?) == moved.j,
        "witness does not carry the base structure to the target",
    )
}

fn check_models_quat_twistor_witness(_ctx: &Context) -> Result<(), String> {
    use im_idx::*;
    let u = ImOctonion::unit;
    let base = QuatTwistorPoint::standard();
    err_str(m5_witness(&base))?;
    let t = err_str(CayleyTriple::new(u(I), u(K), u(JL)))?;
    let f = err_str(automorphism_from_triple(&t))?;
    let moved = match err_str(act(&f, &Point::QuatTwistor(base)))? {
        Point::QuatTwistor(t) => t,
        _ => unreachable!(),
    };
    let w = err_str(m5_witness(&moved))?;
    ensure(
        conjugate(&w, &err_str(d_left(&u(I)))?) == moved.j
            && conjugate(&w, &err_str(d_left(&u(J)))?) == moved.k,
        "witness does not carry the base structures to the targets",
    )
}

fn check_models_subtriple(ctx: &Context) -> Result<(), String> {
    let basis = err_str(subtriple_n(&ctx.g2))?;
    ensure(basis.len() == 5, "subtriple dimension is not 5")
}

fn check_models_quadric(_ctx: &Context) -> Result<(), String> {
    use im_idx::*;
    let u = ImOctonion::unit;
    let fp = err_str(quadric_map(&u(J), &u(K)))?;
    ensure(fp.w == u(I), "the frame (j,k) must map to w = i")?;
    ensure(
        fp.quat.span_equals(&QuatSubalgebra::standard()),
        "and to W = \u{210d}",
    )?;
    ensure(
        quadric_map(&u(I), &u(J).scale(&Scalar::from_int(2))).is_err(),
        "non-unit frames are rejected",
    )?;
    let (a, b) = err_str(flag_to_oriented_plane(&fp))?;
    let plane =
        crate::matrix::Span::from_vectors(7, [u(J), u(K)].iter().map(|v| v.coords().to_vec()));
    let recovered = crate::matrix::Span::from_vectors(
        7,
        [a.clone(), b.clone()].iter().map(|v| v.coords().to_vec()),
    );
    ensure(recovered.equals(&plane), "round trip plane differs")?;
    let (uj, uk) = (u(J), u(K));
    let m = Mat::from_fn(2, 2, |r, c| {
        let target = if c == 0 { &a } else { &b };
        ImOctonion::polar(target, if r == 0 { &uj } else { &uk })
    });
    ensure(m.det().sign() == 1, "orientation flips")
}

fn check_models_equivariance(ctx: &Context) -> Result<(), String> {
    use im_idx::*;
    let u = ImOctonion::unit;
    let triples = seeded_cayley_triples(ctx.seed, 6);
    ensure(triples.len() >= 5, "need at least five automorphisms")?;
    let base = Point::Group(CayleyTriple::standard());
    let quadric_base = Point::Quadric(err_str(quadric_map(&u(J), &u(K)))?);
    let m5_base = Point::QuatTwistor(QuatTwistorPoint::standard());
    let m4_base = Point::Twistor(TwistorPoint::standard());
    let m7_base = Point::Flag5(err_str(CoassocFlag::new(u(L), CoassocPlane::standard()))?);
    let tangent_base = Point::Tangent(err_str(Frame2::new(u(I), u(J)))?);
    for t in &triples {
        let f = err_str(automorphism_from_triple(t))?;
        for which in Projection::ALL {
            use Projection::*;
            let source = match which {
                P03 | P05 | P07 => &base,
                P36 | P31 => &tangent_base,
                P26 | P21 => &quadric_base,
                P76 | P71 => &m7_base,
                P54 => &m5_base,
                P41 => &m4_base,
            };
            let lhs = err_str(act(&f, &err_str(project(source, which))?))?;
            let rhs = err_str(project(&err_str(act(&f, source))?, which))?;
            if lhs != rhs {
                return Err(format!("equivariance fails for {which:?}"));
            }
        }
    }
    Ok(())
}

fn check_principal_membership(ctx: &Context) -> Result<(), String> {
    use im_idx::*;
    let u = ImOctonion::unit;
    ensure(
        homogeneous::is_principal_subalgebra(&ctx.g2, &ctx.sub(Label::H8).basis),
        "h8 must be principal",
    )?;
    for l in [Label::H3, Label::H5, Label::H7] {
        ensure(
            !homogeneous::is_principal_subalgebra(&ctx.g2, &ctx.sub(l).basis),
            "only h8 is principal",
        )?;
    }
    let t = err_str(CayleyTriple::new(u(J), u(K), u(L)))?;
    let f = err_str(automorphism_from_triple(&t))?;
    let conjugated: Vec<Mat> = ctx
        .sub(Label::H8)
        .basis
        .iter()
        .map(|b| conjugate(&f, b))
        .collect();
    ensure(
        homogeneous::is_principal_subalgebra(&ctx.g2, &conjugated),
        "the predicate must be conjugation invariant",
    )
}

fn check_tangent_model(ctx: &Context) -> Result<(), String> {
    use im_idx::*;
    let u = ImOctonion::unit;
    let d = g2::d_xy(&u(I), &u(L));
    let images = err_str(homogeneous::tangent_model(&d))?;
    let expected = &images[0].clone() * &Octonion::l();
    ensure(
        apply_im(&d, &u(I)).embed() == expected,
        "defining relation fails",
    )?;
    ensure(
        homogeneous::tangent_constraint_dim() == 8,
        "constrained space must be 8-dimensional",
    )?;
    let odd = err_str(subalgebras::grading(&ctx.g2, &ctx.subs))?.odd;
    let mut rows = Vec::new();
    for c in &odd {
        let images = err_str(homogeneous::tangent_model(&ctx.g2.from_coords(c)))?;
        let mut row = Vec::new();
        for img in &images {
            row.extend(img.coords()[..4].iter().cloned());
        }
        rows.push(row);
    }
    ensure(
        Mat::from_rows(rows).rank() == 8,
        "the tangent map must be injective",
    )
}

fn check_invariance_identity(ctx: &Context) -> Result<(), String> {
    // [d, D_{x,y}] = D_{d(x),y} + D_{x,d(y)} for every basis derivation and
    // every pair of index-basis vectors.
    let units: Vec<ImOctonion> = (1..=7).map(|a| Octonion::e(a).im().unwrap()).collect();
    for d in ctx.g2.basis() {
        for a in 0..7 {
            for b in a + 1..7 {
                if !g2::invariance_identity(d, &units[a], &units[b]) {
                    return Err(format!("fails for basis pair ({a},{b})"));
                }
            }
        }
    }
    Ok(())
}

pub fn all_checks() -> Vec<CheckDef> {
    let mut checks = vec![
        CheckDef {
            id: "decompositions.adjoint",
            claim: "the adjoint module decomposes as V(2)+4V(1)+3V(0), 2V(3)+V(2)+3V(0), V(4)+3V(2), V(10)+V(2) under h3, h5, h7, h8",
            run: check_decompositions_adjoint,
        },
        CheckDef {
            id: "decompositions.centralizers",
            claim: "nilpotent/semisimple centralizer dimensions are (8,6,4,2) and (4,4,4,2)",
            run: check_decompositions_centralizers,
        },
        CheckDef {
            id: "decompositions.seven_dim",
            claim: "the 7-dim module decomposes as 2V(1)+3V(0), V(2)+2V(1), 2V(2)+V(0), V(6) under h3, h5, h7, h8",
            run: check_decompositions_seven,
        },
        CheckDef {
            id: "dynkin.two_routes",
            claim: "Dynkin indices of h3, h5, h7, h8 are 1, 3, 4, 28 by the weight formula, the trace-ratio oracle, and the V(n) index formula",
            run: check_dynkin,
        },
        CheckDef {
            id: "g2.dimension",
            claim: "the derivation algebra of the octonions has dimension 14",
            run: check_g2_dimension,
        },
        CheckDef {
            id: "g2.invariance_identity",
            claim: "[d, D_{x,y}] = D_{d(x),y} + D_{x,d(y)} for all basis derivations and index pairs",
            run: check_invariance_identity,
        },
        CheckDef {
            id: "g2.jacobi",
            claim: "the Jacobi identity holds on all 364 basis triples",
            run: check_g2_jacobi,
        },
        CheckDef {
            id: "g2.killing_negative_definite",
            claim: "the Killing form is negative definite and equals 4x the trace form on the 7-dim representation",
            run: check_g2_killing,
        },
        CheckDef {
            id: "g2.pointwise_formula",
            claim: "D_{x,y}(z) = [[x,y],z] - 3(x,y,z) on all 343 basis triples",
            run: check_pointwise_formula,
        },
        CheckDef {
            id: "h8.brackets",
            claim: "the principal triple satisfies [h,x]=y, [h,y]=-x, [x,y]=(8/3)h exactly over Q(sqrt 15)",
            run: check_h8_brackets,
        },
        CheckDef {
            id: "h8.charpoly",
            claim: "h acts on the imaginary octonions with spectrum {0, +-i, +-2i, +-3i}",
            run: check_h8_charpoly,
        },
        CheckDef {
            id: "h8.commutant_complement",
            claim: "h8 acts absolutely irreducibly on its 11-dimensional complement",
            run: check_h8_commutant_complement,
        },
        CheckDef {
            id: "h8.commutant_o0",
            claim: "h8 acts absolutely irreducibly on the imaginary octonions",
            run: check_h8_commutant_o0,
        },
        CheckDef {
            id: "lie_yamaguti.pairs",
            claim: "all six binary-ternary axioms hold for the eight reductive pairs; the symmetric pair has zero binary product",
            run: check_ly_pairs,
        },
        CheckDef {
            id: "lie_yamaguti.projection_consistency",
            claim: "the V10 products equal the projected brackets of the split model",
            run: check_ly_projection_consistency,
        },
        CheckDef {
            id: "lie_yamaguti.v10",
            claim: "all six binary-ternary axioms hold for the V10 transvection products",
            run: check_ly_v10,
        },
        CheckDef {
            id: "models.alpha",
            claim: "the compatibility scalar is +1 for the left structure and -1 for the right structure at the standard test point",
            run: check_models_alpha,
        },
        CheckDef {
            id: "models.automorphisms",
            claim: "triple-built automorphisms are multiplicative, orthogonal, preserve the calibration, and compose",
            run: check_models_automorphisms,
        },
        CheckDef {
            id: "models.cayley",
            claim: "(i,j,l) is a Cayley triple; (i,j,k) and (i,i,l) are not",
            run: check_models_cayley,
        },
        CheckDef {
            id: "models.duality",
            claim: "coassociative duality sends Hl to H, rejects span{i,j,k,l}, and round-trips",
            run: check_models_duality,
        },
        CheckDef {
            id: "models.equivariance",
            claim: "all eleven projections commute with the G2-action over at least five rational automorphisms",
            run: check_models_equivariance,
        },
        CheckDef {
            id: "models.quadric",
            claim: "the oriented frame (j,k) satisfies the quadric certificate and maps to (i, H) with an orientation-preserving round trip",
            run: check_models_quadric,
        },
        CheckDef {
            id: "models.quat_twistor_witness",
            claim: "quaternionic twistor transitivity witnesses verify at the base point and a conjugated point",
            run: check_models_quat_twistor_witness,
        },
        CheckDef {
            id: "models.subtriple",
            claim: "span{D_{p,pl}} is 5-dimensional and closed under the double bracket",
            run: check_models_subtriple,
        },
        CheckDef {
            id: "models.tangent",
            claim: "odd derivations give maps H0 -> H with f(i)i + f(j)j + f(k)k = 0; the 12-4 dimension count and injectivity hold",
            run: check_tangent_model,
        },
        CheckDef {
            id: "models.twistor_witness",
            claim: "twistor transitivity witnesses verify at the base point and a conjugated point",
            run: check_models_twistor_witness,
        },
        CheckDef {
            id: "principal.coefficients",
            claim: "the principal coefficient system gives (6,10) for the rank-2 exceptional Cartan matrix and (1) in rank 1, all positive",
            run: check_principal_coeffs,
        },
        CheckDef {
            id: "principal.membership_invariance",
            claim: "the principal-subalgebra predicate holds for h8 and its conjugates and fails for h3, h5, h7",
            run: check_principal_membership,
        },
        CheckDef {
            id: "split.jacobi",
            claim: "the transvection bracket on V2+V10 satisfies the Jacobi identity on all 364 basis triples",
            run: check_split_jacobi,
        },
        CheckDef {
            id: "split.jacobian_value",
            claim: "the cyclic ternary sum at (X^10, Y^10, XY^9) equals (5/252)XY^9",
            run: check_split_jacobian_value,
        },
        CheckDef {
            id: "split.signature",
            claim: "the Killing form of the split model has signature (8,6)",
            run: check_split_signature,
        },
        CheckDef {
            id: "split.simplicity",
            claim: "the split model has no proper nonzero ideal",
            run: check_split_simplicity,
        },
        CheckDef {
            id: "split.spectrum",
            claim: "ad(4XY) is diagonal with integer spectrum {+-2, 0} and {10-2k}",
            run: check_split_spectrum,
        },
        CheckDef {
            id: "subalgebras.closure",
            claim: "each subalgebra is bracket-closed with negative definite Killing restriction",
            run: check_sub_closure,
        },
        CheckDef {
            id: "subalgebras.complements",
            claim: "Killing-orthogonal complements are invariant with dimensions (8,10,11,10,11,6,11,11)",
            run: check_complement_dimensions,
        },
        CheckDef {
            id: "subalgebras.dimensions",
            claim: "the eight subalgebras have dimensions (6,4,3,4,3,8,3,3)",
            run: check_sub_dimensions,
        },
        CheckDef {
            id: "subalgebras.grading",
            claim: "the doubling grading has even part h1 (dim 6) and odd part D_{H0,Hl} (dim 8) with the Z2 bracket rules",
            run: check_sub_grading,
        },
        CheckDef {
            id: "subalgebras.presentations",
            claim: "the generator presentations match the constraint solutions; D_{i,<1,i>^perp} is the invariant complement of h6",
            run: check_sub_presentations,
        },
    ];
    checks.sort_by_key(|c| c.id);
    checks
}

/// Runs all (or the filtered) checks against a fresh context.
pub fn run_suite(filter: Option<&str>, seed: u64) -> crate::Result<Report> {
    let ctx = Context::new(seed)?;
    Ok(run_suite_with(&ctx, filter))
}

/// Runs checks against an existing context.
pub fn run_suite_with(ctx: &Context, filter: Option<&str>) -> Report {
    let mut checks = Vec::new();
    for def in all_checks() {
        if let Some(pat) = filter {
            if !matches_filter(def.id, pat) {
                continue;
            }
        }
        let start = Instant::now();
        let result = (def.run)(ctx);
        let wall_time_ms = start.elapsed().as_millis();
        checks.push(Check {
            id: def.id.to_string(),
            claim: def.claim.to_string(),
            status: if result.is_ok() {
                Status::Pass
            } else {
                Status::Fail
            },
            witness: result.err(),
            wall_time_ms,
        });
    }
    Report {
        seed: ctx.seed,
        checks,
    }
}
