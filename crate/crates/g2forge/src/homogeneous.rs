//! Exact models of the reductive G₂-homogeneous spaces.
//!
//! Points carry certificates: every constructor re-checks the defining
//! invariants of its model (orthonormality, calibration conditions,
//! multiplicativity, compatibility of complex structures with the cross
//! product), so that G₂-equivariance statements become runtime assertions
//! over exact rational test points.
//!
//! The models, with the subgroup quotients they realize:
//!
//! * `CayleyTriple` — the group itself, cut out of the Stiefel manifold
//! * `QuatSubalgebra` / `CoassocPlane` — the symmetric space (two views)
//! * `FlagPoint` — the complex quadric view
//! * `Frame2` — the unit tangent bundle of the six-sphere
//! * `SpherePoint` — the six-sphere
//! * `CoassocFlag` — the five-dimensional-geometry quotient
//! * `TwistorPoint` / `QuatTwistorPoint` — the two twistor spaces
//! * principal subalgebras — the isotropy-irreducible quotient

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::g2::{self, apply_im, conjugate, d_left, extend_fixing_one, is_automorphism, G2};
use crate::matrix::{Mat, Span};
use crate::octonion::{cross, im_idx, omega, ImOctonion, Octonion};
use crate::repr::commutant_dim;
use crate::scalar::{rat_sqrt, Scalar};
use crate::{Error, Result};

// ---------------------------------------------------------------- predicates

/// Orthonormal triple with vanishing calibration: `Ω(x₀,x₁,x₂) = 0`.
pub fn is_cayley_triple(x0: &ImOctonion, x1: &ImOctonion, x2: &ImOctonion) -> bool {
    let one = Scalar::one();
    x0.norm() == one
        && x1.norm() == one
        && x2.norm() == one
        && ImOctonion::polar(x0, x1).is_zero()
        && ImOctonion::polar(x0, x2).is_zero()
        && ImOctonion::polar(x1, x2).is_zero()
        && omega(x0, x1, x2).is_zero()
}

/// A certified Cayley triple; freely generates 𝕆, hence determines a unique
/// automorphism sending `(i, j, l)` to it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CayleyTriple {
    pub x0: ImOctonion,
    pub x1: ImOctonion,
    pub x2: ImOctonion,
}

impl CayleyTriple {
    pub fn new(x0: ImOctonion, x1: ImOctonion, x2: ImOctonion) -> Result<Self> {
        if !is_cayley_triple(&x0, &x1, &x2) {
            return Err(Error::NotCayleyTriple);
        }
        Ok(CayleyTriple { x0, x1, x2 })
    }

    pub fn standard() -> Self {
        use im_idx::*;
        CayleyTriple::new(
            ImOctonion::unit(I),
            ImOctonion::unit(J),
            ImOctonion::unit(L),
        )
        .unwrap()
    }
}

/// The unique automorphism with `(i, j, l) ↦ (x₀, x₁, x₂)`, reconstructed
/// from the induced orthonormal frame
/// `(x₀, x₁, x₀×x₁, x₂, x₀×x₂, x₁×x₂, (x₀×x₁)×x₂)` and verified
/// multiplicative on all 49 imaginary basis pairs and orthogonal.
pub fn automorphism_from_triple(t: &CayleyTriple) -> Result<Mat> {
    let k = cross(&t.x0, &t.x1);
    let images = [
        t.x0.clone(),
        t.x1.clone(),
        k.clone(),
        t.x2.clone(),
        cross(&t.x0, &t.x2),
        cross(&t.x1, &t.x2),
        cross(&k, &t.x2),
    ];
    let f = g2::op_from_images(&images);
    if !is_automorphism(&f) {
        return Err(Error::NotAutomorphism);
    }
    if &f.transpose() * &f != Mat::identity(7) {
        return Err(Error::NotOrthonormal);
    }
    Ok(f)
}

// ------------------------------------------------------ subalgebras / planes

fn span8(octs: &[Octonion]) -> Span {
    Span::from_vectors(8, octs.iter().map(|o| o.coords().to_vec()))
}

fn span7(ims: &[ImOctonion]) -> Span {
    Span::from_vectors(7, ims.iter().map(|v| v.coords().to_vec()))
}

/// A four-dimensional subalgebra of 𝕆 (a point of the symmetric space).
#[derive(Clone, Debug)]
pub struct QuatSubalgebra {
    basis: [Octonion; 4],
}

impl QuatSubalgebra {
    /// Certifies: dimension 4, contains 1, closed under multiplication.
    pub fn new(basis: [Octonion; 4]) -> Result<Self> {
        let span = span8(&basis);
        if span.dim() != 4 || !span.contains(Octonion::one().coords()) {
            return Err(Error::NotQuaternionSubalgebra);
        }
        for a in &basis {
            for b in &basis {
                if !span.contains((a * b).coords()) {
                    return Err(Error::NotQuaternionSubalgebra);
                }
            }
        }
        Ok(QuatSubalgebra { basis })
    }

    /// `span{1, x₀, x₁, x₀x₁}` for an orthonormal pair.
    pub fn from_pair(x0: &ImOctonion, x1: &ImOctonion) -> Result<Self> {
        QuatSubalgebra::new([
            Octonion::one(),
            x0.embed(),
            x1.embed(),
            &x0.embed() * &x1.embed(),
        ])
    }

    /// ℍ = span{1, i, j, k}.
    pub fn standard() -> Self {
        QuatSubalgebra::new([Octonion::one(), Octonion::i(), Octonion::j(), Octonion::k()]).unwrap()
    }

    pub fn basis(&self) -> &[Octonion; 4] {
        &self.basis
    }

    pub fn contains(&self, o: &Octonion) -> bool {
        span8(&self.basis).contains(o.coords())
    }

    pub fn span_equals(&self, other: &QuatSubalgebra) -> bool {
        span8(&self.basis).equals(&span8(&other.basis))
    }
}

impl PartialEq for QuatSubalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.span_equals(other)
    }
}

/// A coassociative 4-plane: a four-dimensional subspace of 𝕆₀ on which the
/// calibration Ω vanishes.
#[derive(Clone, Debug)]
pub struct CoassocPlane {
    basis: [ImOctonion; 4],
}

impl CoassocPlane {
    pub fn new(basis: [ImOctonion; 4]) -> Result<Self> {
        if span7(&basis).dim() != 4 {
            return Err(Error::NotCoassociative);
        }
        // Ω is alternating, so the four basis triples decide vanishing.
        for a in 0..4 {
            for b in a + 1..4 {
                for c in b + 1..4 {
                    if !omega(&basis[a], &basis[b], &basis[c]).is_zero() {
                        return Err(Error::NotCoassociative);
                    }
                }
            }
        }
        Ok(CoassocPlane { basis })
    }

    /// ℍl = span{l, il, jl, kl}.
    pub fn standard() -> Self {
        use im_idx::*;
        CoassocPlane::new([
            ImOctonion::unit(L),
            ImOctonion::unit(IL),
            ImOctonion::unit(JL),
            ImOctonion::unit(KL),
        ])
        .unwrap()
    }

    pub fn basis(&self) -> &[ImOctonion; 4] {
        &self.basis
    }

    pub fn span(&self) -> Span {
        span7(&self.basis)
    }

    pub fn contains(&self, v: &ImOctonion) -> bool {
        self.span().contains(v.coords())
    }

    pub fn span_equals(&self, other: &CoassocPlane) -> bool {
        self.span().equals(&other.span())
    }

    /// Orthogonal projection of ℚ(√15)⁷ onto the plane.
    pub fn projection(&self) -> Mat {
        let b = Mat::from_cols(
            7,
            &self
                .basis
                .iter()
                .map(|v| v.coords().to_vec())
                .collect::<Vec<_>>(),
        );
        let bt = b.transpose();
        let gram_inv = (&bt * &b).inverse().expect("basis is independent");
        &(&b * &gram_inv) * &bt
    }
}

impl PartialEq for CoassocPlane {
    fn eq(&self, other: &Self) -> bool {
        self.span_equals(other)
    }
}

/// The duality between the two views of the symmetric space: a 4-plane
/// `W ⊆ 𝕆₀` with `Ω(W,W,W) = 0` determines the subalgebra `ℝ ⊕ W^⊥`.
pub fn coassoc_duality(basis: &[ImOctonion; 4]) -> Result<QuatSubalgebra> {
    let plane = CoassocPlane::new(basis.clone())?;
    let rows: Vec<Vec<Scalar>> = plane.basis.iter().map(|v| v.coords().to_vec()).collect();
    let perp = Mat::from_rows(rows).kernel();
    assert_eq!(perp.len(), 3);
    let mut q = [
        Octonion::one(),
        Octonion::zero(),
        Octonion::zero(),
        Octonion::zero(),
    ];
    for (t, v) in perp.into_iter().enumerate() {
        q[t + 1] = ImOctonion::from_slice(&v).embed();
    }
    QuatSubalgebra::new(q)
}

/// The inverse view: the orthogonal complement of a subalgebra inside 𝕆₀ is
/// a coassociative plane.
pub fn quat_to_coassoc(q: &QuatSubalgebra) -> Result<CoassocPlane> {
    let rows: Vec<Vec<Scalar>> = q.basis.iter().map(|o| o.coords().to_vec()).collect();
    let perp = Mat::from_rows(rows).kernel();
    assert_eq!(perp.len(), 4);
    let basis: [ImOctonion; 4] = std::array::from_fn(|t| {
        // 1 ∈ Q forces the complement to be imaginary
        assert!(perp[t][0].is_zero());
        ImOctonion::from_slice(&perp[t][1..])
    });
    CoassocPlane::new(basis)
}

/// Extends an internal isomorphism `Q → ℍ` to an automorphism of 𝕆 carrying
/// `Q` to ℍ and `Qv` to ℍl, given a unit `v ⊥ Q`.
pub fn extend_quaternion_iso(q: &QuatSubalgebra, v: &ImOctonion) -> Result<Mat> {
    if v.norm() != Scalar::one() {
        return Err(Error::NotOrthonormal);
    }
    if q.basis
        .iter()
        .any(|b| !Octonion::polar(b, &v.embed()).is_zero())
    {
        return Err(Error::Precondition(
            "v must be orthogonal to the subalgebra",
        ));
    }
    // an orthonormal imaginary pair generating Q
    let q0: Vec<ImOctonion> = {
        let rows: Vec<Vec<Scalar>> = q.basis.iter().map(|o| o.coords().to_vec()).collect();
        let mut sp = Span::new(8);
        sp.insert(Octonion::one().coords().to_vec());
        let mut out = Vec::new();
        for r in rows {
            // subtract the real part to land in Q ∩ 𝕆₀
            if sp.insert(r.clone()) {
                let mut v8 = r;
                v8[0] = Scalar::zero();
                out.push(ImOctonion::from_slice(&v8[1..]));
            }
        }
        out
    };
    let u1 = find_unit(&q0, &[])?;
    let u2 = find_unit(&q0, std::slice::from_ref(&u1))?;
    let triple = CayleyTriple::new(u1, u2, v.clone())?;
    let f = automorphism_from_triple(&triple)?;
    // f carries (ℍ, ℍl) to (Q, Qv); the requested map is its inverse.
    let inv = f.transpose();
    let f8 = extend_fixing_one(&inv);
    for b in &q.basis {
        let img = Octonion::from_coords({
            let w = f8.apply(b.coords());
            std::array::from_fn(|i| w[i].clone())
        });
        if !QuatSubalgebra::standard().contains(&img) {
            return Err(Error::NotAutomorphism);
        }
    }
    Ok(inv)
}

/// Deterministic search for a rational unit vector in the span of `basis`,
/// orthogonal to everything in `orth`: small integer combinations are tried
/// in order of increasing complexity until one has perfect-square norm.
fn find_unit(basis: &[ImOctonion], orth: &[ImOctonion]) -> Result<ImOctonion> {
    let k = basis.len();
    let range = 2i64;
    let width = 2 * range + 1;
    let mut combos: Vec<Vec<i64>> = Vec::new();
    for step in 0..width.pow(k as u32) {
        let mut s = step;
        let combo: Vec<i64> = (0..k)
            .map(|_| {
                let c = (s % width) - range;
                s /= width;
                c
            })
            .collect();
        if combo.iter().any(|&c| c != 0) {
            combos.push(combo);
        }
    }
    combos.sort_by_key(|c| {
        (
            c.iter().map(|x| x.abs()).sum::<i64>(),
            c.iter().map(|x| -x).collect::<Vec<_>>(),
        )
    });
    for counter in combos {
        let mut v = ImOctonion::zero();
        for (c, b) in counter.iter().zip(basis) {
            if *c != 0 {
                v = &v + &b.scale(&Scalar::from_int(*c));
            }
        }
        if orth.iter().any(|o| !ImOctonion::polar(&v, o).is_zero()) {
            continue;
        }
        let n = v.norm();
        let Some(r) = n.as_rat().and_then(rat_sqrt) else {
            continue;
        };
        if r == crate::scalar::Rat::from_integer(0.into()) {
            continue;
        }
        let inv = Scalar::from_rat(r).inv().unwrap();
        return Ok(v.scale(&inv));
    }
    Err(Error::NotOrthonormal)
}

// ---------------------------------------------------------------- flag models

/// A point `(w, W)` of the quadric model: a unit imaginary vector inside a
/// four-dimensional subalgebra.
#[derive(Clone, PartialEq, Debug)]
pub struct FlagPoint {
    pub w: ImOctonion,
    pub quat: QuatSubalgebra,
}

impl FlagPoint {
    pub fn new(w: ImOctonion, quat: QuatSubalgebra) -> Result<Self> {
        if w.norm() != Scalar::one() {
            return Err(Error::NotInModel("flag"));
        }
        if !quat.contains(&w.embed()) {
            return Err(Error::NotInModel("flag"));
        }
        Ok(FlagPoint { w, quat })
    }
}

/// A point `(w, W)` with `W` coassociative and `w ∈ W` a unit vector.
#[derive(Clone, PartialEq, Debug)]
pub struct CoassocFlag {
    pub w: ImOctonion,
    pub plane: CoassocPlane,
}

impl CoassocFlag {
    pub fn new(w: ImOctonion, plane: CoassocPlane) -> Result<Self> {
        if w.norm() != Scalar::one() || !plane.contains(&w) {
            return Err(Error::NotInModel("coassociative flag"));
        }
        Ok(CoassocFlag { w, plane })
    }

    /// The derived view `(w, ℝ ⊕ W^⊥)` with `w` orthogonal to the subalgebra.
    pub fn derived_view(&self) -> Result<(ImOctonion, QuatSubalgebra)> {
        let q = coassoc_duality(&self.plane.basis)?;
        debug_assert!(q
            .basis
            .iter()
            .all(|b| Octonion::polar(b, &self.w.embed()).is_zero()));
        Ok((self.w.clone(), q))
    }
}

/// The quadric certificate of an oriented orthonormal 2-frame: the complex
/// vector `z = x₁ + i·x₂` satisfies `Σ z_k² = (n(x₁) - n(x₂)) + 2i·n(x₁,x₂)
/// = 0`, and the frame corresponds to the flag `(x₁×x₂, ⟨1,x₁,x₂,x₁x₂⟩)`.
pub fn quadric_map(x1: &ImOctonion, x2: &ImOctonion) -> Result<FlagPoint> {
    let one = Scalar::one();
    if x1.norm() != one || x2.norm() != one || !ImOctonion::polar(x1, x2).is_zero() {
        return Err(Error::NotOrthonormal);
    }
    let real = &x1.norm() - &x2.norm();
    let imag = &ImOctonion::polar(x1, x2) + &ImOctonion::polar(x1, x2);
    assert!(real.is_zero() && imag.is_zero());
    FlagPoint::new(cross(x1, x2), QuatSubalgebra::from_pair(x1, x2)?)
}

/// Back from the flag to the oriented plane: a unit `X ∈ W ∩ ⟨1,w⟩^⊥` spans
/// it with `w × X`.
pub fn flag_to_oriented_plane(p: &FlagPoint) -> Result<(ImOctonion, ImOctonion)> {
    let mut ims = Vec::new();
    let mut sp = Span::new(8);
    sp.insert(Octonion::one().coords().to_vec());
    sp.insert(p.w.embed().coords().to_vec());
    for b in p.quat.basis() {
        if sp.insert(b.coords().to_vec()) {
            let mut v8 = b.coords().clone();
            v8[0] = Scalar::zero();
            let im = ImOctonion::from_slice(&v8[1..]);
            let orth = &im - &p.w.scale(&ImOctonion::polar(&im, &p.w));
            if !orth.is_zero() {
                ims.push(orth);
            }
        }
    }
    let x = find_unit(&ims, std::slice::from_ref(&p.w))?;
    let wx = cross(&p.w, &x);
    Ok((x, wx))
}

// ---------------------------------------------------------------- twistors

fn is_metric_complex_structure(plane: &CoassocPlane, j: &Mat) -> bool {
    let p = plane.projection();
    // canonical form: j vanishes on W^⊥ and maps into W
    if &(j * &p) != j || &(&p * j) != j {
        return false;
    }
    // j² = -id on W, and j is orthogonal there
    (j * j) == -&p && (&j.transpose() * j) == p
}

fn preserves_cross_on_plane(plane: &CoassocPlane, j: &Mat) -> bool {
    for a in 0..4 {
        for b in a + 1..4 {
            let (x, y) = (&plane.basis[a], &plane.basis[b]);
            if cross(&apply_im(j, x), &apply_im(j, y)) != cross(x, y) {
                return false;
            }
        }
    }
    true
}

/// A twistor point `(W, J)`: a metric complex structure on a coassociative
/// plane that preserves the cross product. `J` is stored as the 7×7 matrix
/// vanishing on `W^⊥`, which makes equality and the G₂-action literal.
#[derive(Clone, PartialEq, Debug)]
pub struct TwistorPoint {
    pub plane: CoassocPlane,
    pub j: Mat,
}

impl TwistorPoint {
    pub fn new(plane: CoassocPlane, j: Mat) -> Result<Self> {
        if !is_metric_complex_structure(&plane, &j) || !preserves_cross_on_plane(&plane, &j) {
            return Err(Error::NotInModel("twistor"));
        }
        Ok(TwistorPoint { plane, j })
    }

    /// The base point `(ℍl, d_i^l)`.
    pub fn standard() -> Self {
        let plane = CoassocPlane::standard();
        let j = d_left(&ImOctonion::unit(im_idx::I)).unwrap();
        TwistorPoint::new(plane, j).unwrap()
    }
}

/// A quaternionic twistor point `(W, (J, K))`: two anticommuting metric
/// complex structures, both compatible with the cross product.
#[derive(Clone, PartialEq, Debug)]
pub struct QuatTwistorPoint {
    pub plane: CoassocPlane,
    pub j: Mat,
    pub k: Mat,
}

impl QuatTwistorPoint {
    pub fn new(plane: CoassocPlane, j: Mat, k: Mat) -> Result<Self> {
        for m in [&j, &k] {
            if !is_metric_complex_structure(&plane, m) || !preserves_cross_on_plane(&plane, m) {
                return Err(Error::NotInModel("quaternionic twistor"));
            }
        }
        if &(&j * &k) + &(&k * &j) != Mat::zeros(7, 7) {
            return Err(Error::NotInModel("quaternionic twistor"));
        }
        Ok(QuatTwistorPoint { plane, j, k })
    }

    /// The base point `(ℍl, (d_i^l, d_j^l))`.
    pub fn standard() -> Self {
        let plane = CoassocPlane::standard();
        let j = d_left(&ImOctonion::unit(im_idx::I)).unwrap();
        let k = d_left(&ImOctonion::unit(im_idx::J)).unwrap();
        QuatTwistorPoint::new(plane, j, k).unwrap()
    }
}

/// The compatibility scalar of a metric complex structure: for unit `x ∈ W`
/// and unit `y ∈ W ∩ {x, Jx}^⊥`, the element `(x×y)×J(x)` equals `α·J(y)`
/// with `α = ±1`; `α = +1` exactly on the twistor model.
pub fn m4_alpha(plane: &CoassocPlane, j: &Mat, x: &ImOctonion, y: &ImOctonion) -> Result<i32> {
    if !is_metric_complex_structure(plane, j) {
        return Err(Error::NotInModel("twistor candidate"));
    }
    let one = Scalar::one();
    let jx = apply_im(j, x);
    if x.norm() != one
        || y.norm() != one
        || !plane.contains(x)
        || !plane.contains(y)
        || !ImOctonion::polar(x, y).is_zero()
        || !ImOctonion::polar(&jx, y).is_zero()
    {
        return Err(Error::NotOrthonormal);
    }
    let lhs = cross(&cross(x, y), &jx);
    let jy = apply_im(j, y);
    for t in 0..7 {
        if !jy.coord(t).is_zero() {
            let alpha = lhs.coord(t) / jy.coord(t);
            if lhs != jy.scale(&alpha) {
                return Err(Error::AlphaNotUnit);
            }
            return match (alpha == one, alpha == -&one) {
                (true, _) => Ok(1),
                (_, true) => Ok(-1),
                _ => Err(Error::AlphaNotUnit),
            };
        }
    }
    Err(Error::AlphaNotUnit)
}

/// A transitivity witness for the twistor space: an automorphism `f` with
/// `f·(ℍl, d_i^l) = (W, J)`, built from the Cayley triple
/// `(x × J(x), x × y, x)`.
pub fn m4_witness(point: &TwistorPoint) -> Result<Mat> {
    let x = find_unit(point.plane.basis(), &[])?;
    let jx = apply_im(&point.j, &x);
    let y = find_unit(point.plane.basis(), &[x.clone(), jx.clone()])?;
    let triple = CayleyTriple::new(cross(&x, &jx), cross(&x, &y), x)?;
    let f = automorphism_from_triple(&triple)?;
    verify_twistor_witness(
        &f,
        &point.plane,
        &[(&d_left(&ImOctonion::unit(im_idx::I)).unwrap(), &point.j)],
    )?;
    Ok(f)
}

/// A transitivity witness for the quaternionic twistor space: `f` with
/// `f·(ℍl, (d_i^l, d_j^l)) = (W, (J, K))`, from the Cayley triple
/// `(x × J(x), x × K(x), x)`.
pub fn m5_witness(point: &QuatTwistorPoint) -> Result<Mat> {
    let x = find_unit(point.plane.basis(), &[])?;
    let jx = apply_im(&point.j, &x);
    let kx = apply_im(&point.k, &x);
    let triple = CayleyTriple::new(cross(&x, &jx), cross(&x, &kx), x)?;
    let f = automorphism_from_triple(&triple)?;
    let (di, dj) = (
        d_left(&ImOctonion::unit(im_idx::I)).unwrap(),
        d_left(&ImOctonion::unit(im_idx::J)).unwrap(),
    );
    verify_twistor_witness(&f, &point.plane, &[(&di, &point.j), (&dj, &point.k)])?;
    Ok(f)
}

fn verify_twistor_witness(f: &Mat, plane: &CoassocPlane, pairs: &[(&Mat, &Mat)]) -> Result<()> {
    // f(ℍl) = W
    let standard = CoassocPlane::standard();
    let image: [ImOctonion; 4] = std::array::from_fn(|t| apply_im(f, &standard.basis()[t]));
    if !CoassocPlane::new(image)?.span_equals(plane) {
        return Err(Error::NotInModel("twistor witness"));
    }
    for (model, target) in pairs {
        if &conjugate(f, model) != *target {
            return Err(Error::NotInModel("twistor witness"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- sphere etc.

/// A unit vector in 𝕆₀ (a point of the six-sphere).
#[derive(Clone, PartialEq, Debug)]
pub struct SpherePoint(pub ImOctonion);

impl SpherePoint {
    pub fn new(v: ImOctonion) -> Result<Self> {
        if v.norm() != Scalar::one() {
            return Err(Error::NotOrthonormal);
        }
        Ok(SpherePoint(v))
    }
}

/// An orthonormal 2-frame (a point of the unit tangent bundle of the
/// six-sphere).
#[derive(Clone, PartialEq, Debug)]
pub struct Frame2 {
    pub x0: ImOctonion,
    pub x1: ImOctonion,
}

impl Frame2 {
    pub fn new(x0: ImOctonion, x1: ImOctonion) -> Result<Self> {
        let one = Scalar::one();
        if x0.norm() != one || x1.norm() != one || !ImOctonion::polar(&x0, &x1).is_zero() {
            return Err(Error::NotOrthonormal);
        }
        Ok(Frame2 { x0, x1 })
    }
}

// ---------------------------------------------------------------- projections

/// A point of one of the homogeneous models.
#[derive(Clone, PartialEq, Debug)]
pub enum Point {
    Group(CayleyTriple),
    Symmetric(QuatSubalgebra),
    SymmetricPlane(CoassocPlane),
    Quadric(FlagPoint),
    Tangent(Frame2),
    Twistor(TwistorPoint),
    QuatTwistor(QuatTwistorPoint),
    Sphere(SpherePoint),
    Flag5(CoassocFlag),
}

/// The fiber-bundle projections between the models.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Projection {
    /// group → tangent bundle: (x₀,x₁,x₂) ↦ (x₀,x₁)
    P03,
    /// tangent bundle → sphere: (x₀,x₁) ↦ x₀
    P36,
    /// tangent bundle → symmetric space: (x₀,x₁) ↦ ⟨1,x₀,x₁,x₀x₁⟩
    P31,
    /// quadric → sphere: (w,W) ↦ w
    P26,
    /// quadric → symmetric space: (w,W) ↦ W
    P21,
    /// five-flag → sphere: (w,W) ↦ w
    P76,
    /// five-flag → symmetric space (plane view): (w,W) ↦ W
    P71,
    /// quaternionic twistor → twistor: (W,(J,K)) ↦ (W,J)
    P54,
    /// twistor → symmetric space (plane view): (W,J) ↦ W
    P41,
    /// group → quaternionic twistor: the triple's automorphism applied to
    /// the base point (ℍl, (d_i^l, d_j^l))
    P05,
    /// group → five-flag: (x₀, ⟨x₀, x₀×x₁, x₀×x₂, x₀×(x₁×x₂)⟩)
    P07,
}

impl Projection {
    pub const ALL: [Projection; 11] = [
        Projection::P03,
        Projection::P36,
        Projection::P31,
        Projection::P26,
        Projection::P21,
        Projection::P76,
        Projection::P71,
        Projection::P54,
        Projection::P41,
        Projection::P05,
        Projection::P07,
    ];
}

fn group_plane(t: &CayleyTriple) -> Result<CoassocPlane> {
    CoassocPlane::new([
        t.x0.clone(),
        cross(&t.x0, &t.x1),
        cross(&t.x0, &t.x2),
        cross(&t.x0, &cross(&t.x1, &t.x2)),
    ])
}

/// Applies a projection; the image is re-certified in the target model.
pub fn project(p: &Point, which: Projection) -> Result<Point> {
    use Projection::*;
    match (which, p) {
        (P03, Point::Group(t)) => Ok(Point::Tangent(Frame2::new(t.x0.clone(), t.x1.clone())?)),
        (P36, Point::Tangent(f)) => Ok(Point::Sphere(SpherePoint::new(f.x0.clone())?)),
        (P31, Point::Tangent(f)) => Ok(Point::Symmetric(QuatSubalgebra::from_pair(&f.x0, &f.x1)?)),
        (P26, Point::Quadric(fp)) => Ok(Point::Sphere(SpherePoint::new(fp.w.clone())?)),
        (P21, Point::Quadric(fp)) => Ok(Point::Symmetric(fp.quat.clone())),
        (P76, Point::Flag5(cf)) => Ok(Point::Sphere(SpherePoint::new(cf.w.clone())?)),
        (P71, Point::Flag5(cf)) => Ok(Point::SymmetricPlane(cf.plane.clone())),
        (P54, Point::QuatTwistor(qt)) => Ok(Point::Twistor(TwistorPoint::new(
            qt.plane.clone(),
            qt.j.clone(),
        )?)),
        (P41, Point::Twistor(t)) => Ok(Point::SymmetricPlane(t.plane.clone())),
        (P05, Point::Group(t)) => {
            // The automorphism is determined by the triple, so this is the
            // G₂-equivariant submersion onto the orbit of the base point.
            let f = automorphism_from_triple(t)?;
            act(&f, &Point::QuatTwistor(QuatTwistorPoint::standard()))
        }
        (P07, Point::Group(t)) => Ok(Point::Flag5(CoassocFlag::new(
            t.x0.clone(),
            group_plane(t)?,
        )?)),
        _ => Err(Error::NotInModel("projection source")),
    }
}

/// The G₂-action on points; images are re-certified, so a success is a
/// closure certificate for the model.
pub fn act(f: &Mat, p: &Point) -> Result<Point> {
    let f8 = extend_fixing_one(f);
    let act8 = |o: &Octonion| -> Octonion {
        Octonion::from_coords({
            let w = f8.apply(o.coords());
            std::array::from_fn(|i| w[i].clone())
        })
    };
    match p {
        Point::Group(t) => Ok(Point::Group(CayleyTriple::new(
            apply_im(f, &t.x0),
            apply_im(f, &t.x1),
            apply_im(f, &t.x2),
        )?)),
        Point::Symmetric(q) => Ok(Point::Symmetric(QuatSubalgebra::new(std::array::from_fn(
            |t| act8(&q.basis[t]),
        ))?)),
        Point::SymmetricPlane(w) => Ok(Point::SymmetricPlane(CoassocPlane::new(
            std::array::from_fn(|t| apply_im(f, &w.basis[t])),
        )?)),
        Point::Quadric(fp) => Ok(Point::Quadric(FlagPoint::new(
            apply_im(f, &fp.w),
            QuatSubalgebra::new(std::array::from_fn(|t| act8(&fp.quat.basis[t])))?,
        )?)),
        Point::Tangent(fr) => Ok(Point::Tangent(Frame2::new(
            apply_im(f, &fr.x0),
            apply_im(f, &fr.x1),
        )?)),
        Point::Twistor(t) => Ok(Point::Twistor(TwistorPoint::new(
            CoassocPlane::new(std::array::from_fn(|s| apply_im(f, &t.plane.basis[s])))?,
            conjugate(f, &t.j),
        )?)),
        Point::QuatTwistor(t) => Ok(Point::QuatTwistor(QuatTwistorPoint::new(
            CoassocPlane::new(std::array::from_fn(|s| apply_im(f, &t.plane.basis[s])))?,
            conjugate(f, &t.j),
            conjugate(f, &t.k),
        )?)),
        Point::Sphere(s) => Ok(Point::Sphere(SpherePoint::new(apply_im(f, &s.0))?)),
        Point::Flag5(cf) => Ok(Point::Flag5(CoassocFlag::new(
            apply_im(f, &cf.w),
            CoassocPlane::new(std::array::from_fn(|s| apply_im(f, &cf.plane.basis[s])))?,
        )?)),
    }
}

// ------------------------------------------------------------- subtriple / M8

/// The five-dimensional subtriple `𝔫 = span{D_{p,pl} : p ∈ ℍ₀}` of the odd
/// part, closed under `[[·,·],·]`. Returns its basis in g₂ coordinates.
pub fn subtriple_n(g2: &G2) -> Result<Vec<Vec<Scalar>>> {
    use im_idx::*;
    let u = ImOctonion::unit;
    let pl = |p: usize| match p {
        I => IL,
        J => JL,
        _ => KL,
    };
    let mut gens: Vec<Mat> = Vec::new();
    for p in [I, J, K] {
        gens.push(g2::d_xy(&u(p), &u(pl(p))));
    }
    for (p, q) in [(I, J), (I, K), (J, K)] {
        // polarization of p ↦ D_{p, pl}
        gens.push(&g2::d_xy(&u(p), &u(pl(q))) + &g2::d_xy(&u(q), &u(pl(p))));
    }
    let mut span = Span::new(g2::DIM);
    for m in &gens {
        // every generator is an odd derivation
        if !is_odd(m) {
            return Err(Error::NotOddDerivation);
        }
        span.insert(g2.coords(m).ok_or(Error::NotInSpan)?);
    }
    if span.dim() != 5 {
        return Err(Error::RankDeficiency {
            expected: 5,
            found: span.dim(),
        });
    }
    let basis = span.basis().to_vec();
    for a in &basis {
        for b in &basis {
            let ab = g2.bracket_coords(a, b);
            for c in &basis {
                if !span.contains(&g2.bracket_coords(&ab, c)) {
                    return Err(Error::NotBracketClosed);
                }
            }
        }
    }
    Ok(basis)
}

fn is_odd(m: &Mat) -> bool {
    (0..7).all(|r| (0..7).all(|c| ((r < 3) != (c < 3)) || m[(r, c)].is_zero()))
}

/// The membership predicate of the isotropy-irreducible model: a
/// three-dimensional bracket-closed subspace with nondegenerate Killing
/// restriction acting absolutely irreducibly on 𝕆₀.
pub fn is_principal_subalgebra(g2: &G2, basis: &[Mat]) -> bool {
    let Some(coords) = basis
        .iter()
        .map(|m| g2.coords(m))
        .collect::<Option<Vec<_>>>()
    else {
        return false;
    };
    let span = Span::from_vectors(g2::DIM, coords.iter().cloned());
    if span.dim() != 3 {
        return false;
    }
    for a in &coords {
        for b in &coords {
            if !span.contains(&g2.bracket_coords(a, b)) {
                return false;
            }
        }
    }
    let gram = Mat::from_fn(coords.len(), coords.len(), |i, j| {
        g2.killing_pairing(&coords[i], &coords[j])
    });
    if gram.det().is_zero() {
        return false;
    }
    commutant_dim(basis) == 1
}

// --------------------------------------------------------------- tangent model

/// Extracts the tangent-space model of an odd derivation: the linear map
/// `f_d : ℍ₀ → ℍ` with `d(q) = f_d(q)·l`, which satisfies
/// `f_d(i)i + f_d(j)j + f_d(k)k = 0`. Returns the images of i, j, k.
pub fn tangent_model(d: &Mat) -> Result<[Octonion; 3]> {
    use im_idx::*;
    if !is_odd(d) {
        return Err(Error::NotOddDerivation);
    }
    let images: [Octonion; 3] = std::array::from_fn(|t| {
        let v = apply_im(d, &ImOctonion::unit([I, J, K][t]));
        // v = q·l for the quaternion q read off the ℍl coordinates
        let c = v.coords();
        Octonion::from_coords([
            c[3].clone(),
            c[4].clone(),
            c[5].clone(),
            c[6].clone(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
        ])
    });
    let units = [Octonion::i(), Octonion::j(), Octonion::k()];
    let mut total = Octonion::zero();
    for (img, e) in images.iter().zip(&units) {
        total = &total + &(img * e);
    }
    if !total.is_zero() {
        return Err(Error::NotOddDerivation);
    }
    Ok(images)
}

/// Dimension of the constrained map space `{f : Σ f(e)·e = 0}`: twelve
/// unknowns minus four independent rows.
pub fn tangent_constraint_dim() -> usize {
    let units = [Octonion::i(), Octonion::j(), Octonion::k()];
    let mut rows = vec![vec![Scalar::zero(); 12]; 8];
    for (e, unit_e) in units.iter().enumerate() {
        for t in 0..4 {
            let prod = &Octonion::unit(t) * unit_e;
            for (r, row) in rows.iter_mut().enumerate() {
                row[4 * e + t] = prod.coord(r).clone();
            }
        }
    }
    12 - Mat::from_rows(rows).rank()
}

// ----------------------------------------------------------- rational sampling

/// Deterministic rational Cayley triples: a curated list of exact points
/// followed by seeded rejection sampling (small integer vectors are
/// Gram-Schmidt-projected and accepted when the norm is a perfect square).
pub fn seeded_cayley_triples(seed: u64, count: usize) -> Vec<CayleyTriple> {
    use im_idx::*;
    let u = ImOctonion::unit;
    let frac = |n: i64, d: i64| Scalar::from_ratio(n, d);
    let mut out = vec![
        CayleyTriple::standard(),
        CayleyTriple::new(u(J), u(K), u(L)).unwrap(),
        CayleyTriple::new(u(I), u(K), u(JL)).unwrap(),
        CayleyTriple::new(u(L), u(IL), u(J)).unwrap(),
        CayleyTriple::new(
            &u(I).scale(&frac(3, 5)) + &u(J).scale(&frac(4, 5)),
            &u(I).scale(&frac(4, 5)) - &u(J).scale(&frac(3, 5)),
            u(L),
        )
        .unwrap(),
        CayleyTriple::new(
            u(I),
            &u(J).scale(&frac(3, 5)) + &u(K).scale(&frac(4, 5)),
            &u(JL).scale(&frac(4, 5)) - &u(KL).scale(&frac(3, 5)),
        )
        .unwrap(),
    ];
    out.truncate(count);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut budget = 200_000u32;
    while out.len() < count && budget > 0 {
        if let Some(t) = sample_triple(&mut rng, &mut budget) {
            out.push(t);
        }
    }
    out
}

fn sample_unit(rng: &mut ChaCha8Rng, orth: &[ImOctonion], budget: &mut u32) -> Option<ImOctonion> {
    while *budget > 0 {
        *budget -= 1;
        let mut v = ImOctonion::from_coords(std::array::from_fn(|_| {
            Scalar::from_int(rng.gen_range(-3i64..=3))
        }));
        for o in orth {
            v = &v - &o.scale(&ImOctonion::polar(&v, o));
        }
        if v.is_zero() {
            continue;
        }
        let Some(r) = v.norm().as_rat().and_then(rat_sqrt) else {
            continue;
        };
        return Some(v.scale(&Scalar::from_rat(r).inv().unwrap()));
    }
    None
}

fn sample_triple(rng: &mut ChaCha8Rng, budget: &mut u32) -> Option<CayleyTriple> {
    let x0 = sample_unit(rng, &[], budget)?;
    let x1 = sample_unit(rng, std::slice::from_ref(&x0), budget)?;
    let c = cross(&x0, &x1);
    let x2 = sample_unit(rng, &[x0.clone(), x1.clone(), c], budget)?;
    CayleyTriple::new(x0, x1, x2).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subalgebras::Label;
    use crate::testutil;
    use im_idx::*;

    fn u(i: usize) -> ImOctonion {
        ImOctonion::unit(i)
    }

    #[test]
    fn cayley_triple_predicate() {
        assert!(is_cayley_triple(&u(I), &u(J), &u(L)));
        assert!(!is_cayley_triple(&u(I), &u(J), &u(K))); // Ω = 1
        assert!(!is_cayley_triple(&u(I), &u(I), &u(L))); // not orthonormal
    }

    #[test]
    fn automorphism_from_standard_triple_is_identity() {
        let f = automorphism_from_triple(&CayleyTriple::standard()).unwrap();
        assert_eq!(f, Mat::identity(7));
    }

    #[test]
    fn automorphism_from_jkl_is_a_signed_permutation() {
        let t = CayleyTriple::new(u(J), u(K), u(L)).unwrap();
        let f = automorphism_from_triple(&t).unwrap();
        for c in 0..7 {
            let nonzero: Vec<usize> = (0..7).filter(|&r| !f[(r, c)].is_zero()).collect();
            assert_eq!(nonzero.len(), 1);
            let v = &f[(nonzero[0], c)];
            assert!(v == &Scalar::one() || v == &-&Scalar::one());
        }
        assert!(g2::preserves_omega(&f));
        // composing two verified automorphisms verifies again
        let t2 = CayleyTriple::new(u(I), u(K), u(JL)).unwrap();
        let g = automorphism_from_triple(&t2).unwrap();
        assert!(is_automorphism(&(&f * &g)));
    }

    #[test]
    fn duality_between_subalgebras_and_planes() {
        // ℍl ↦ ℍ
        let hl = CoassocPlane::standard();
        let q = coassoc_duality(hl.basis()).unwrap();
        assert!(q.span_equals(&QuatSubalgebra::standard()));
        // span{i,j,k,l} is not coassociative: Ω(i,j,k) = 1
        let bad = [u(I), u(J), u(K), u(L)];
        assert!(matches!(
            coassoc_duality(&bad),
            Err(Error::NotCoassociative)
        ));
        // round trip in both directions
        let back = quat_to_coassoc(&q).unwrap();
        assert!(back.span_equals(&hl));
    }

    #[test]
    fn quaternion_iso_extension() {
        // Q = ℍ, v = l: an automorphism fixing ℍ
        let f = extend_quaternion_iso(&QuatSubalgebra::standard(), &u(L)).unwrap();
        for t in [I, J, K] {
            assert!(apply_im(&f, &u(t)).is_quaternionic());
        }
        // Q = span{1, j, l, jl}, v ∈ Q^⊥
        let q = QuatSubalgebra::new([
            Octonion::one(),
            Octonion::j(),
            Octonion::l(),
            Octonion::jl(),
        ])
        .unwrap();
        let f = extend_quaternion_iso(&q, &u(I)).unwrap();
        assert!(is_automorphism(&f));
        // preconditions: the vector must be a unit orthogonal to Q
        assert!(extend_quaternion_iso(&q, &u(I).scale(&Scalar::from_int(2))).is_err());
        assert!(extend_quaternion_iso(&q, &u(J)).is_err());
        let f8 = extend_fixing_one(&f);
        for b in q.basis() {
            let img = Octonion::from_coords({
                let w = f8.apply(b.coords());
                std::array::from_fn(|i| w[i].clone())
            });
            assert!(QuatSubalgebra::standard().contains(&img), "maps Q into H");
        }
    }

    #[test]
    fn alpha_is_plus_one_for_the_left_structure() {
        let plane = CoassocPlane::standard();
        let j = d_left(&u(I)).unwrap();
        assert_eq!(m4_alpha(&plane, &j, &u(L), &u(JL)).unwrap(), 1);
    }

    #[test]
    fn alpha_is_minus_one_for_the_right_structure() {
        let plane = CoassocPlane::standard();
        let proj = plane.projection();
        let dr = crate::g2::d_right(&u(I)).unwrap();
        let j = &(&proj * &dr) * &proj;
        assert_eq!(m4_alpha(&plane, &j, &u(L), &u(JL)).unwrap(), -1);
        // consequently (ℍl, d_i^r) is not a twistor point
        assert!(TwistorPoint::new(plane, j).is_err());
    }

    #[test]
    fn twistor_frame_identities() {
        // W = ⟨x, y, Jx, Jy⟩ and W^⊥ = ⟨x×y, x×Jx, y×Jx⟩
        let p = TwistorPoint::standard();
        let (x, y) = (u(L), u(JL));
        let (jx, jy) = (apply_im(&p.j, &x), apply_im(&p.j, &y));
        let w = span7(&[x.clone(), y.clone(), jx.clone(), jy.clone()]);
        assert_eq!(w.dim(), 4);
        assert!(w.equals(&p.plane.span()));
        let perp = span7(&[cross(&x, &y), cross(&x, &jx), cross(&y, &jx)]);
        assert_eq!(perp.dim(), 3);
        for a in perp.basis() {
            for b in w.basis() {
                let mut dot = Scalar::zero();
                for t in 0..7 {
                    dot += &(&a[t] * &b[t]);
                }
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn twistor_witnesses() {
        // identity case
        let p = TwistorPoint::standard();
        let f = m4_witness(&p).unwrap();
        assert!(is_automorphism(&f));
        // conjugated case
        let g = automorphism_from_triple(&CayleyTriple::new(u(J), u(K), u(L)).unwrap()).unwrap();
        let moved = match act(&g, &Point::Twistor(p)).unwrap() {
            Point::Twistor(t) => t,
            _ => unreachable!(),
        };
        let w = m4_witness(&moved).unwrap();
        assert!(is_automorphism(&w));
        assert_eq!(conjugate(&w, &d_left(&u(I)).unwrap()), moved.j);
    }

    #[test]
    fn quaternionic_twistor_witnesses() {
        let p = QuatTwistorPoint::standard();
        let f = m5_witness(&p).unwrap();
        assert!(is_automorphism(&f));
        // frame identities of the quaternionic model
        let x = u(L);
        let (jx, kx) = (apply_im(&p.j, &x), apply_im(&p.k, &x));
        let jkx = apply_im(&p.j, &kx);
        let w = span7(&[x.clone(), jx.clone(), kx.clone(), jkx.clone()]);
        assert!(w.equals(&p.plane.span()));
        let perp = span7(&[cross(&x, &jx), cross(&x, &kx), cross(&x, &jkx)]);
        assert_eq!(perp.dim(), 3);
        // conjugated case
        let g = automorphism_from_triple(&CayleyTriple::new(u(I), u(K), u(JL)).unwrap()).unwrap();
        let moved = match act(&g, &Point::QuatTwistor(p)).unwrap() {
            Point::QuatTwistor(t) => t,
            _ => unreachable!(),
        };
        let w = m5_witness(&moved).unwrap();
        assert_eq!(conjugate(&w, &d_left(&u(I)).unwrap()), moved.j);
        assert_eq!(conjugate(&w, &d_left(&u(J)).unwrap()), moved.k);
    }

    #[test]
    fn projections_from_the_group() {
        let t = CayleyTriple::standard();
        let p0 = Point::Group(t);
        // (i,j,l) ↦ (i,j) ↦ ℍ
        let p3 = project(&p0, Projection::P03).unwrap();
        let Point::Tangent(frame) = &p3 else { panic!() };
        assert_eq!(frame.x0, u(I));
        assert_eq!(frame.x1, u(J));
        let p1 = project(&p3, Projection::P31).unwrap();
        let Point::Symmetric(q) = &p1 else { panic!() };
        assert!(q.span_equals(&QuatSubalgebra::standard()));
        // sphere
        let Point::Sphere(s) = project(&p3, Projection::P36).unwrap() else {
            panic!()
        };
        assert_eq!(s.0, u(I));
        // the five-flag and quaternionic twistor targets
        let Point::Flag5(cf) = project(&p0, Projection::P07).unwrap() else {
            panic!()
        };
        assert_eq!(cf.w, u(I));
        let expected_plane = span7(&[u(I), u(K), u(IL), u(KL)]);
        assert!(cf.plane.span().equals(&expected_plane));
        // the standard triple projects to the standard quaternionic twistor
        let Point::QuatTwistor(qt) = project(&p0, Projection::P05).unwrap() else {
            panic!()
        };
        assert_eq!(qt, QuatTwistorPoint::standard());
        // and the tower M5 → M4 → symmetric plane collapses consistently
        let p4 = project(&Point::QuatTwistor(qt.clone()), Projection::P54).unwrap();
        let Point::Twistor(tw) = &p4 else { panic!() };
        let Point::SymmetricPlane(w) = project(&p4, Projection::P41).unwrap() else {
            panic!()
        };
        assert!(w.span_equals(&tw.plane));
    }

    #[test]
    fn five_flag_projections_on_the_base_point() {
        let p = Point::Flag5(CoassocFlag::new(u(L), CoassocPlane::standard()).unwrap());
        let Point::Sphere(s) = project(&p, Projection::P76).unwrap() else {
            panic!()
        };
        assert_eq!(s.0, u(L));
        let Point::SymmetricPlane(w) = project(&p, Projection::P71).unwrap() else {
            panic!()
        };
        assert!(w.span_equals(&CoassocPlane::standard()));
        // derived view: (l, ℍl) ↦ (l, ℍ)
        let Point::Flag5(cf) = p else { unreachable!() };
        let (w, q) = cf.derived_view().unwrap();
        assert_eq!(w, u(L));
        assert!(q.span_equals(&QuatSubalgebra::standard()));
    }

    #[test]
    fn quadric_certificates() {
        // (j,k) ↦ (i, ℍ)
        let fp = quadric_map(&u(J), &u(K)).unwrap();
        assert_eq!(fp.w, u(I));
        assert!(fp.quat.span_equals(&QuatSubalgebra::standard()));
        // (i,j) ↦ (k, ℍ)
        let fp2 = quadric_map(&u(I), &u(J)).unwrap();
        assert_eq!(fp2.w, u(K));
        // non-unit input is rejected
        assert!(quadric_map(&u(I), &u(J).scale(&Scalar::from_int(2))).is_err());
        // round trip recovers the oriented plane
        let (a, b) = flag_to_oriented_plane(&fp).unwrap();
        let original = span7(&[u(J), u(K)]);
        assert!(span7(&[a.clone(), b.clone()]).equals(&original));
        // orientation: the 2×2 change of basis has positive determinant
        let (uj, uk) = (u(J), u(K));
        let m = Mat::from_fn(2, 2, |r, c| {
            let target = if c == 0 { &a } else { &b };
            ImOctonion::polar(target, if r == 0 { &uj } else { &uk })
        });
        assert_eq!(m.det().sign(), 1);
    }

    #[test]
    fn equivariance_of_all_projections() {
        let triples = seeded_cayley_triples(0, 6);
        assert!(triples.len() >= 5);
        let base = Point::Group(CayleyTriple::standard());
        let quadric_base = Point::Quadric(quadric_map(&u(J), &u(K)).unwrap());
        let m5_base = Point::QuatTwistor(QuatTwistorPoint::standard());
        let m4_base = Point::Twistor(TwistorPoint::standard());
        let m7_base = Point::Flag5(CoassocFlag::new(u(L), CoassocPlane::standard()).unwrap());
        let tangent_base = Point::Tangent(Frame2::new(u(I), u(J)).unwrap());
        for t in triples.iter().take(3) {
            let f = automorphism_from_triple(t).unwrap();
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
                let lhs = act(&f, &project(source, which).unwrap()).unwrap();
                let rhs = project(&act(&f, source).unwrap(), which).unwrap();
                assert_eq!(lhs, rhs, "projection {which:?}");
            }
        }
    }

    #[test]
    fn subtriple_is_five_dimensional_and_closed() {
        let g2 = testutil::g2();
        let basis = subtriple_n(g2).unwrap();
        assert_eq!(basis.len(), 5);
        // contained in the odd part, both blockwise and as a subspace
        for c in &basis {
            assert!(is_odd(&g2.from_coords(c)));
        }
        let odd = crate::matrix::Span::from_vectors(
            g2::DIM,
            crate::subalgebras::grading(g2, testutil::subs())
                .unwrap()
                .odd,
        );
        let n_span = crate::matrix::Span::from_vectors(g2::DIM, basis);
        assert!(n_span.is_subspace_of(&odd));
    }

    #[test]
    fn principal_membership_predicate() {
        let g2 = testutil::g2();
        let subs = testutil::subs();
        assert!(is_principal_subalgebra(g2, &subs[Label::H8.index()].basis));
        for l in [Label::H3, Label::H5, Label::H7] {
            assert!(!is_principal_subalgebra(g2, &subs[l.index()].basis), "{l}");
        }
        // conjugation invariance under a nontrivial verified automorphism
        let t = CayleyTriple::new(u(J), u(K), u(L)).unwrap();
        let f = automorphism_from_triple(&t).unwrap();
        let conjugated: Vec<Mat> = subs[Label::H8.index()]
            .basis
            .iter()
            .map(|b| conjugate(&f, b))
            .collect();
        assert!(is_principal_subalgebra(g2, &conjugated));
    }

    #[test]
    fn tangent_model_of_odd_derivations() {
        let g2 = testutil::g2();
        let d = g2::d_xy(&u(I), &u(L));
        let images = tangent_model(&d).unwrap();
        // check the defining relation d(q) = f_d(q)·l on i
        let expected = &images[0].clone() * &Octonion::l();
        assert_eq!(apply_im(&d, &u(I)).embed(), expected);
        assert!(tangent_model(&Mat::zeros(7, 7))
            .unwrap()
            .iter()
            .all(Octonion::is_zero));
        // an even derivation is rejected
        assert!(tangent_model(&d_left(&u(I)).unwrap()).is_err());
        // the constrained map space is eight-dimensional and d ↦ f_d is
        // injective on the odd part
        assert_eq!(tangent_constraint_dim(), 8);
        let odd = crate::subalgebras::grading(g2, testutil::subs())
            .unwrap()
            .odd;
        let mut rows = Vec::new();
        for c in &odd {
            let images = tangent_model(&g2.from_coords(c)).unwrap();
            let mut row = Vec::new();
            for img in &images {
                row.extend(img.coords()[..4].iter().cloned());
            }
            rows.push(row);
        }
        assert_eq!(Mat::from_rows(rows).rank(), 8);
    }

    #[test]
    fn sampler_produces_certified_triples() {
        let triples = seeded_cayley_triples(0, 8);
        assert_eq!(triples.len(), 8);
        for t in &triples {
            assert!(is_cayley_triple(&t.x0, &t.x1, &t.x2));
        }
        // at least one sampled (non-curated) triple
        assert!(triples.len() > 6);
        // determinism
        let again = seeded_cayley_triples(0, 8);
        assert_eq!(triples, again);
    }
}
