//! The eight reductive subalgebras h₁–h₈ of g₂.
//!
//! h₁–h₇ are cut out of g₂ by linear constraints (stabilize ℍ, kill ℂ or ℍ,
//! commute with τ, centralize h₃, kill l); h₈ is the principal
//! three-dimensional subalgebra, generated over ℚ(√15) by an explicit triple
//! of derivations. Every constructor certifies bracket closure, and the
//! classical generator presentations are re-derived as span equalities.

use crate::g2::{self, d_left, d_right, d_xy, tau, G2};
use crate::matrix::{Mat, Span};
use crate::octonion::{im_idx, ImOctonion};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Labels for the eight subalgebras.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Label {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
}

impl Label {
    pub const ALL: [Label; 8] = [
        Label::H1,
        Label::H2,
        Label::H3,
        Label::H4,
        Label::H5,
        Label::H6,
        Label::H7,
        Label::H8,
    ];

    pub fn dim(self) -> usize {
        match self {
            Label::H1 => 6,
            Label::H2 | Label::H4 => 4,
            Label::H3 | Label::H5 | Label::H7 | Label::H8 => 3,
            Label::H6 => 8,
        }
    }

    pub fn complement_dim(self) -> usize {
        g2::DIM - self.dim()
    }

    pub fn index(self) -> usize {
        Label::ALL.iter().position(|&l| l == self).unwrap()
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "h{}", self.index() + 1)
    }
}

impl std::str::FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Label> {
        match s.to_ascii_lowercase().as_str() {
            "h1" => Ok(Label::H1),
            "h2" => Ok(Label::H2),
            "h3" => Ok(Label::H3),
            "h4" => Ok(Label::H4),
            "h5" => Ok(Label::H5),
            "h6" => Ok(Label::H6),
            "h7" => Ok(Label::H7),
            "h8" => Ok(Label::H8),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

/// A bracket-closed subalgebra of g₂, kept both as operators on 𝕆₀ and in
/// g₂ coordinates.
#[derive(Clone)]
pub struct Subalgebra {
    pub label: Label,
    pub basis: Vec<Mat>,
    pub coords: Vec<Vec<Scalar>>,
}

impl Subalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Span of the subalgebra in g₂ coordinates.
    pub fn coord_span(&self) -> Span {
        Span::from_vectors(g2::DIM, self.coords.iter().cloned())
    }

    /// Matrix of `ad(v)|_s` in the subalgebra's own basis, for `v` given in
    /// g₂ coordinates. Fails if some bracket leaves the subalgebra.
    pub fn ad_inside(&self, g2: &G2, v: &[Scalar]) -> Result<Mat> {
        let span = self.coord_span();
        let mut cols = Vec::with_capacity(self.dim());
        for c in &self.coords {
            let br = g2.bracket_coords(v, c);
            cols.push(span.coords(&br).ok_or(Error::NotBracketClosed)?);
        }
        Ok(Mat::from_cols(self.dim(), &cols))
    }

    /// Gram matrix of the Killing form of g₂ restricted to the subalgebra.
    pub fn killing_restriction(&self, g2: &G2) -> Mat {
        Mat::from_fn(self.dim(), self.dim(), |i, j| {
            g2.killing_pairing(&self.coords[i], &self.coords[j])
        })
    }

    /// Dimension of the center `{x ∈ s : [x, s] = 0}`.
    pub fn center_dim(&self, g2: &G2) -> usize {
        let n = self.dim();
        let mut rows = Vec::new();
        for c in &self.coords {
            for r in 0..g2::DIM {
                rows.push(
                    (0..n)
                        .map(|i| g2.bracket_coords(&self.coords[i], c)[r].clone())
                        .collect(),
                );
            }
        }
        n - Mat::from_rows(rows).rank()
    }

    /// Dimension of the derived algebra `[s, s]`.
    pub fn derived_dim(&self, g2: &G2) -> usize {
        let mut span = Span::new(g2::DIM);
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                span.insert(g2.bracket_coords(&self.coords[i], &self.coords[j]));
            }
        }
        span.dim()
    }
}

fn check_closure(g2: &G2, coords: &[Vec<Scalar>]) -> Result<()> {
    let span = Span::from_vectors(g2::DIM, coords.iter().cloned());
    for i in 0..coords.len() {
        for j in i + 1..coords.len() {
            if !span.contains(&g2.bracket_coords(&coords[i], &coords[j])) {
                return Err(Error::NotBracketClosed);
            }
        }
    }
    Ok(())
}

fn subalgebra_from_kernel(g2: &G2, label: Label, kernel: Vec<Vec<Scalar>>) -> Result<Subalgebra> {
    if kernel.len() != label.dim() {
        return Err(Error::RankDeficiency {
            expected: label.dim(),
            found: kernel.len(),
        });
    }
    check_closure(g2, &kernel)?;
    let basis = kernel.iter().map(|c| g2.from_coords(c)).collect();
    Ok(Subalgebra {
        label,
        basis,
        coords: kernel,
    })
}

/// Rows expressing that the image of `arg` has zero entries at `banned`.
fn image_rows(g2: &G2, arg: &ImOctonion, banned: &[usize], rows: &mut Vec<Vec<Scalar>>) {
    let images: Vec<Vec<Scalar>> = g2.basis().iter().map(|b| b.apply(arg.coords())).collect();
    for &s in banned {
        rows.push(images.iter().map(|img| img[s].clone()).collect());
    }
}

/// Rows expressing `[d, m] = 0` for a fixed 7×7 matrix `m`.
fn commute_rows(g2: &G2, m: &Mat, rows: &mut Vec<Vec<Scalar>>) {
    let coms: Vec<Vec<Scalar>> = g2
        .basis()
        .iter()
        .map(|b| Mat::commutator(b, m).flatten())
        .collect();
    for r in 0..49 {
        rows.push(coms.iter().map(|c| c[r].clone()).collect());
    }
}

/// Solves the defining linear constraint of h₁–h₇ inside g₂ and certifies
/// the result. The constraints, in the imaginary basis with ℍ₀ = ⟨i,j,k⟩
/// and ℍl = ⟨l,il,jl,kl⟩:
///
/// * h₁: d(ℍ) ⊆ ℍ
/// * h₂: d(ℍ) ⊆ ℍ and d(i) = 0
/// * h₃: d(ℍ) = 0
/// * h₄: dτ = τd
/// * h₅: centralizer of h₃ inside h₁
/// * h₆: d(i) = 0
/// * h₇: d(ℍ) ⊆ ℍ and d(l) = 0
pub fn solve_constraint(g2: &G2, label: Label) -> Result<Subalgebra> {
    use im_idx::*;
    let unit = ImOctonion::unit;
    let h0_args = [unit(I), unit(J), unit(K)];
    let l_half = [L, IL, JL, KL];
    let all7 = [I, J, K, L, IL, JL, KL];
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    match label {
        Label::H1 => {
            for a in &h0_args {
                image_rows(g2, a, &l_half, &mut rows);
            }
        }
        Label::H2 => {
            for a in &h0_args {
                image_rows(g2, a, &l_half, &mut rows);
            }
            image_rows(g2, &unit(I), &all7, &mut rows);
        }
        Label::H3 => {
            for a in &h0_args {
                image_rows(g2, a, &all7, &mut rows);
            }
        }
        Label::H4 => {
            commute_rows(g2, tau(), &mut rows);
        }
        Label::H5 => {
            for a in &h0_args {
                image_rows(g2, a, &l_half, &mut rows);
            }
            let h3 = solve_constraint(g2, Label::H3)?;
            for m in &h3.basis {
                commute_rows(g2, m, &mut rows);
            }
        }
        Label::H6 => {
            image_rows(g2, &unit(I), &all7, &mut rows);
        }
        Label::H7 => {
            for a in &h0_args {
                image_rows(g2, a, &l_half, &mut rows);
            }
            image_rows(g2, &unit(L), &all7, &mut rows);
        }
        Label::H8 => return build_h8(g2),
    }
    subalgebra_from_kernel(g2, label, Mat::from_rows(rows).kernel())
}

/// The explicit principal triple `(h, x, y)`:
///
/// ```text
/// h = (1/6)(4 D_{j,k} + 5 D_{l,il})
/// x = D_{i,k} + (√15/9)(D_{j,l} + D_{k,il})
/// y = -D_{i,j} + (√15/9)(-D_{k,l} + D_{j,il})
/// ```
///
/// satisfying `[h,x] = y`, `[h,y] = -x`, `[x,y] = (8/3)h`.
pub fn principal_triple() -> (Mat, Mat, Mat) {
    use im_idx::*;
    let u = ImOctonion::unit;
    let s15_9 = Scalar::sqrt15_ratio(1, 9);
    let h = &d_xy(&u(J), &u(K)).scale(&Scalar::from_ratio(4, 6))
        + &d_xy(&u(L), &u(IL)).scale(&Scalar::from_ratio(5, 6));
    let x = &d_xy(&u(I), &u(K)) + &(&d_xy(&u(J), &u(L)) + &d_xy(&u(K), &u(IL))).scale(&s15_9);
    let y =
        &(-&d_xy(&u(I), &u(J))) + &(&(-&d_xy(&u(K), &u(L))) + &d_xy(&u(J), &u(IL))).scale(&s15_9);
    (h, x, y)
}

/// Builds the principal three-dimensional subalgebra h₈ = span{h, x, y} over
/// ℚ(√15) and verifies its bracket relations exactly.
pub fn build_h8(g2: &G2) -> Result<Subalgebra> {
    let (h, x, y) = principal_triple();
    if Mat::commutator(&h, &x) != y
        || Mat::commutator(&h, &y) != -&x
        || Mat::commutator(&x, &y) != h.scale(&Scalar::from_ratio(8, 3))
    {
        return Err(Error::NotBracketClosed);
    }
    let coords = vec![
        g2.coords(&h).ok_or(Error::NotInSpan)?,
        g2.coords(&x).ok_or(Error::NotInSpan)?,
        g2.coords(&y).ok_or(Error::NotInSpan)?,
    ];
    Ok(Subalgebra {
        label: Label::H8,
        basis: vec![h, x, y],
        coords,
    })
}

pub fn build(g2: &G2, label: Label) -> Result<Subalgebra> {
    solve_constraint(g2, label)
}

/// All eight subalgebras, h₁ through h₈.
pub fn build_all(g2: &G2) -> Result<Vec<Subalgebra>> {
    Label::ALL.iter().map(|&l| build(g2, l)).collect()
}

fn quaternion_units() -> [ImOctonion; 3] {
    use im_idx::*;
    [
        ImOctonion::unit(I),
        ImOctonion::unit(J),
        ImOctonion::unit(K),
    ]
}

/// The simple ideal `h^l = {d_a^l : a ∈ ℍ₀}` of the even part.
pub fn ideal_left() -> Vec<Mat> {
    quaternion_units()
        .iter()
        .map(|a| d_left(a).unwrap())
        .collect()
}

/// The simple ideal `h^r = {d_a^r : a ∈ ℍ₀}` of the even part.
pub fn ideal_right() -> Vec<Mat> {
    quaternion_units()
        .iter()
        .map(|a| d_right(a).unwrap())
        .collect()
}

/// The six operators `D_{i,w}` with `w` an imaginary unit orthogonal to i.
/// Their span is the invariant complement of h₆ (the tangent model of the
/// six-sphere at i), not h₆ itself: `D_{i,w}(i) = 4w ≠ 0`.
pub fn sphere_tangent_family() -> Vec<Mat> {
    use im_idx::*;
    let i = ImOctonion::unit(I);
    [J, K, L, IL, JL, KL]
        .iter()
        .map(|&w| d_xy(&i, &ImOctonion::unit(w)))
        .collect()
}

fn op_span(g2: &G2, mats: &[Mat]) -> Result<Span> {
    let mut sp = Span::new(g2::DIM);
    for m in mats {
        sp.insert(g2.coords(m).ok_or(Error::NotInSpan)?);
    }
    Ok(sp)
}

/// Generators of the classical presentations for h₁–h₅ and h₇:
///
/// * h₁ = h^l ⊕ h^r
/// * h₂ = h^l ⊕ ⟨d_i^r⟩
/// * h₃ = h^l
/// * h₄ = h^r ⊕ ⟨d_i^l⟩
/// * h₅ = h^r = D_{ℍ,ℍ}
/// * h₇ = {d_a^l - d_a^r : a ∈ ℍ₀}
pub fn presentation_generators(label: Label) -> Option<Vec<Mat>> {
    use im_idx::*;
    let i = ImOctonion::unit(I);
    match label {
        Label::H1 => {
            let mut v = ideal_left();
            v.extend(ideal_right());
            Some(v)
        }
        Label::H2 => {
            let mut v = ideal_left();
            v.push(d_right(&i).unwrap());
            Some(v)
        }
        Label::H3 => Some(ideal_left()),
        Label::H4 => {
            let mut v = ideal_right();
            v.push(d_left(&i).unwrap());
            Some(v)
        }
        Label::H5 => Some(ideal_right()),
        Label::H7 => Some(
            quaternion_units()
                .iter()
                .map(|a| &d_left(a).unwrap() - &d_right(a).unwrap())
                .collect(),
        ),
        Label::H6 | Label::H8 => None,
    }
}

/// Verifies that every classical presentation span equals the corresponding
/// constraint solution; h₅ is additionally compared with `D_{ℍ,ℍ}`, and h₆
/// (which has no generator presentation) is checked against its invariant
/// complement `D_{i, ⟨1,i⟩^⊥}` in `complement_of_h6_matches`.
pub fn presentations_match(g2: &G2, subs: &[Subalgebra]) -> Result<()> {
    for sub in subs {
        let Some(gens) = presentation_generators(sub.label) else {
            continue;
        };
        let span = op_span(g2, &gens)?;
        if !span.equals(&sub.coord_span()) {
            return Err(Error::PresentationMismatch(sub.label.to_string()));
        }
    }
    // h₅ = D_{ℍ,ℍ}: the span of D_{p,q} over quaternion pairs.
    let h5 = &subs[Label::H5.index()];
    let qu = quaternion_units();
    let mut dhh = Vec::new();
    for p in 0..3 {
        for q in p + 1..3 {
            dhh.push(d_xy(&qu[p], &qu[q]));
        }
    }
    if !op_span(g2, &dhh)?.equals(&h5.coord_span()) {
        return Err(Error::PresentationMismatch("h5 = D_{H,H}".into()));
    }
    Ok(())
}

/// The family `D_{i, ⟨1,i⟩^⊥}` is six-dimensional, meets h₆ trivially, is
/// h₆-invariant, and equals the Killing-orthogonal complement of h₆.
pub fn complement_of_h6_matches(g2: &G2, subs: &[Subalgebra]) -> Result<()> {
    let h6 = &subs[Label::H6.index()];
    let family = op_span(g2, &sphere_tangent_family())?;
    if family.dim() != 6 {
        return Err(Error::RankDeficiency {
            expected: 6,
            found: family.dim(),
        });
    }
    let pair = reductive_complement(g2, h6)?;
    let complement = Span::from_vectors(g2::DIM, pair.complement.iter().cloned());
    if !family.equals(&complement) {
        return Err(Error::PresentationMismatch("complement of h6".into()));
    }
    Ok(())
}

/// The ℤ₂-grading of g₂ induced by 𝕆 = ℍ ⊕ ℍl.
pub struct Grading {
    pub even: Vec<Vec<Scalar>>,
    pub odd: Vec<Vec<Scalar>>,
}

fn block_parts(m: &Mat) -> (Mat, Mat) {
    // ℍ₀ occupies coordinates 0..3, ℍl occupies 3..7.
    let even = Mat::from_fn(7, 7, |i, j| {
        if (i < 3) == (j < 3) {
            m[(i, j)].clone()
        } else {
            Scalar::zero()
        }
    });
    let odd = m - &even;
    (even, odd)
}

/// Splits g₂ into its even and odd parts and certifies the grading:
/// dimensions (6, 8), the even part is h₁ = D_{ℍ,ℍ} + D_{ℍl,ℍl}, the odd
/// part is D_{ℍ₀,ℍl}, and the ℤ₂ bracket rules hold.
pub fn grading(g2: &G2, subs: &[Subalgebra]) -> Result<Grading> {
    use im_idx::*;
    let mut even = Span::new(g2::DIM);
    let mut odd = Span::new(g2::DIM);
    for b in g2.basis() {
        let (e, o) = block_parts(b);
        // the grading is algebraic, so both parts are again derivations
        if !g2::is_derivation(&e) || !g2::is_derivation(&o) {
            return Err(Error::NotBracketClosed);
        }
        even.insert(g2.coords(&e).ok_or(Error::NotInSpan)?);
        odd.insert(g2.coords(&o).ok_or(Error::NotInSpan)?);
    }
    if even.dim() != 6 || odd.dim() != 8 {
        return Err(Error::RankDeficiency {
            expected: 14,
            found: even.dim() + odd.dim(),
        });
    }
    // even part = D_{ℍ₀,ℍ₀} + D_{ℍl,ℍl}
    let h0 = [I, J, K];
    let hl = [L, IL, JL, KL];
    let mut even_gens = Vec::new();
    for (t, &a) in h0.iter().enumerate() {
        for &b in &h0[t + 1..] {
            even_gens.push(d_xy(&ImOctonion::unit(a), &ImOctonion::unit(b)));
        }
    }
    for (t, &a) in hl.iter().enumerate() {
        for &b in &hl[t + 1..] {
            even_gens.push(d_xy(&ImOctonion::unit(a), &ImOctonion::unit(b)));
        }
    }
    if !op_span(g2, &even_gens)?.equals(&even) {
        return Err(Error::PresentationMismatch("even part".into()));
    }
    // odd part = D_{ℍ₀,ℍl}
    let mut odd_gens = Vec::new();
    for &a in &h0 {
        for &b in &hl {
            odd_gens.push(d_xy(&ImOctonion::unit(a), &ImOctonion::unit(b)));
        }
    }
    if !op_span(g2, &odd_gens)?.equals(&odd) {
        return Err(Error::PresentationMismatch("odd part".into()));
    }
    // even part = h₁
    if !even.equals(&subs[Label::H1.index()].coord_span()) {
        return Err(Error::PresentationMismatch("even part vs h1".into()));
    }
    // ℤ₂ bracket rules on basis pairs
    let in_span = |sp: &Span, v: &[Scalar]| sp.contains(v);
    for a in even.basis() {
        for b in even.basis() {
            if !in_span(&even, &g2.bracket_coords(a, b)) {
                return Err(Error::NotBracketClosed);
            }
        }
        for b in odd.basis() {
            if !in_span(&odd, &g2.bracket_coords(a, b)) {
                return Err(Error::NotBracketClosed);
            }
        }
    }
    for a in odd.basis() {
        for b in odd.basis() {
            if !in_span(&even, &g2.bracket_coords(a, b)) {
                return Err(Error::NotBracketClosed);
            }
        }
    }
    Ok(Grading {
        even: even.basis().to_vec(),
        odd: odd.basis().to_vec(),
    })
}

/// A certified reductive pair `g₂ = s ⊕ m`, `[s, m] ⊆ m`, with `m` the
/// Killing-orthogonal complement of `s`.
pub struct ReductivePair {
    pub sub: Subalgebra,
    pub complement: Vec<Vec<Scalar>>,
}

pub fn reductive_complement(g2: &G2, sub: &Subalgebra) -> Result<ReductivePair> {
    let rows: Vec<Vec<Scalar>> = sub
        .coords
        .iter()
        .map(|c| {
            (0..g2::DIM)
                .map(|j| {
                    let mut v = vec![Scalar::zero(); g2::DIM];
                    v[j] = Scalar::one();
                    g2.killing_pairing(c, &v)
                })
                .collect()
        })
        .collect();
    let complement = Mat::from_rows(rows).kernel();
    if complement.len() != g2::DIM - sub.dim() {
        return Err(Error::RankDeficiency {
            expected: g2::DIM - sub.dim(),
            found: complement.len(),
        });
    }
    // direct sum: the union spans g₂
    let mut all = Span::from_vectors(g2::DIM, sub.coords.iter().cloned());
    for v in &complement {
        all.insert(v.clone());
    }
    if all.dim() != g2::DIM {
        return Err(Error::NotInvariant);
    }
    // invariance [s, m] ⊆ m
    let mspan = Span::from_vectors(g2::DIM, complement.iter().cloned());
    for s in &sub.coords {
        for m in &complement {
            if !mspan.contains(&g2.bracket_coords(s, m)) {
                return Err(Error::NotInvariant);
            }
        }
    }
    Ok(ReductivePair {
        sub: sub.clone(),
        complement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::expand_weights;
    use crate::testutil;

    #[test]
    fn dimensions_and_closure() {
        let subs = testutil::subs();
        let dims: Vec<usize> = subs.iter().map(Subalgebra::dim).collect();
        assert_eq!(dims, vec![6, 4, 3, 4, 3, 8, 3, 3]);
        for sub in subs {
            for b in &sub.basis {
                assert!(g2::is_derivation(b));
            }
        }
    }

    #[test]
    fn killing_restrictions_are_negative_definite() {
        let g2 = testutil::g2();
        for sub in testutil::subs() {
            assert!(
                sub.killing_restriction(g2).is_negative_definite(),
                "{}",
                sub.label
            );
        }
    }

    #[test]
    fn structural_certificates() {
        let g2 = testutil::g2();
        let subs = testutil::subs();
        // h₁ splits into the two commuting simple ideals h^l and h^r
        let h1 = &subs[Label::H1.index()];
        let (hl, hr) = (ideal_left(), ideal_right());
        let h1span = h1.coord_span();
        for m in hl.iter().chain(&hr) {
            assert!(h1span.contains(&g2.coords(m).unwrap()));
        }
        for a in &hl {
            for b in &hr {
                assert!(Mat::commutator(a, b).is_zero());
            }
        }
        let mut union = op_span(g2, &hl).unwrap();
        for m in &hr {
            union.insert(g2.coords(m).unwrap());
        }
        assert_eq!(union.dim(), 6);
        // h₂ and h₄: one-dimensional center, three-dimensional derived algebra
        for l in [Label::H2, Label::H4] {
            let s = &subs[l.index()];
            assert_eq!(s.center_dim(g2), 1, "{l}");
            assert_eq!(s.derived_dim(g2), 3, "{l}");
        }
        // the three-dimensional ones are simple: zero center, derived = self
        for l in [Label::H3, Label::H5, Label::H7, Label::H8] {
            let s = &subs[l.index()];
            assert_eq!(s.center_dim(g2), 0, "{l}");
            assert_eq!(s.derived_dim(g2), 3, "{l}");
        }
        // h₆: zero center and perfect
        let h6 = &subs[Label::H6.index()];
        assert_eq!(h6.center_dim(g2), 0);
        assert_eq!(h6.derived_dim(g2), 8);
    }

    #[test]
    fn presentations() {
        let g2 = testutil::g2();
        let subs = testutil::subs();
        presentations_match(g2, subs).unwrap();
        complement_of_h6_matches(g2, subs).unwrap();
    }

    #[test]
    fn principal_triple_relations() {
        let g2 = testutil::g2();
        let (h, x, y) = principal_triple();
        assert_eq!(Mat::commutator(&h, &x), y);
        assert_eq!(Mat::commutator(&h, &y), -&x);
        assert_eq!(Mat::commutator(&x, &y), h.scale(&Scalar::from_ratio(8, 3)));
        // the generators genuinely live in the quadratic extension
        assert!((0..7).any(|r| (0..7).any(|c| !x[(r, c)].is_rational())));
        assert!(h.flatten().iter().all(Scalar::is_rational));
        // action table of h on the imaginary units
        use im_idx::*;
        let u = ImOctonion::unit;
        let two = Scalar::from_int(2);
        let three = Scalar::from_int(3);
        assert!(g2::apply_im(&h, &u(I)).is_zero());
        assert_eq!(g2::apply_im(&h, &u(J)), u(K));
        assert_eq!(g2::apply_im(&h, &u(K)), -&u(J));
        assert_eq!(g2::apply_im(&h, &u(L)), u(IL).scale(&two));
        assert_eq!(g2::apply_im(&h, &u(IL)), u(L).scale(&-&two));
        assert_eq!(g2::apply_im(&h, &u(JL)), u(KL).scale(&three));
        assert_eq!(g2::apply_im(&h, &u(KL)), u(JL).scale(&-&three));
        // spectrum of h on 𝕆₀: {0, ±i, ±2i, ±3i}
        assert_eq!(h.char_poly(), expand_weights(1, &[1, 1, 1]));
        let h8 = build_h8(g2).unwrap();
        assert_eq!(h8.dim(), 3);
    }

    #[test]
    fn grading_of_g2() {
        let g2 = testutil::g2();
        let gr = grading(g2, testutil::subs()).unwrap();
        assert_eq!(gr.even.len(), 6);
        assert_eq!(gr.odd.len(), 8);
    }

    #[test]
    fn reductive_complements() {
        let g2 = testutil::g2();
        let subs = testutil::subs();
        let expected = [8, 10, 11, 10, 11, 6, 11, 11];
        for (sub, &dim) in subs.iter().zip(&expected) {
            let pair = reductive_complement(g2, sub).unwrap();
            assert_eq!(pair.complement.len(), dim, "{}", sub.label);
        }
        // the complement of h₁ is the odd part of the grading
        let pair = reductive_complement(g2, &subs[Label::H1.index()]).unwrap();
        let odd = Span::from_vectors(g2::DIM, grading(g2, subs).unwrap().odd);
        let comp = Span::from_vectors(g2::DIM, pair.complement);
        assert!(comp.equals(&odd));
    }

    #[test]
    fn labels_parse_and_display() {
        for l in Label::ALL {
            assert_eq!(l.to_string().parse::<Label>().unwrap(), l);
        }
        assert!("h9".parse::<Label>().is_err());
    }
}
