//! The compact exceptional Lie algebra g₂ = 𝔡𝔢𝔯(𝕆).
//!
//! Operators on 𝕆₀ are plain 7×7 matrices in the imaginary basis
//! `(i, j, k, l, il, jl, kl)`. The inner derivations
//!
//! ```text
//! D_{x,y} = [L_x, L_y] + [L_x, R_y] + [R_x, R_y]
//! ```
//!
//! span the full 14-dimensional derivation algebra; a fixed lexicographic
//! sweep over the pairs `e_a, e_b` selects a deterministic basis, and all
//! structure data (brackets, adjoint matrices, Killing form) is computed
//! exactly from it.

use std::sync::OnceLock;

use crate::matrix::{Mat, Span, SpanSolver};
use crate::octonion::{omega, ImOctonion, Octonion};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// 8×8 matrix of `y ↦ xy` on 𝕆.
pub fn left_mult(x: &Octonion) -> Mat {
    Mat::from_fn(8, 8, |i, j| (x * &Octonion::unit(j)).coord(i).clone())
}

/// 8×8 matrix of `y ↦ yx` on 𝕆.
pub fn right_mult(x: &Octonion) -> Mat {
    Mat::from_fn(8, 8, |i, j| (&Octonion::unit(j) * x).coord(i).clone())
}

/// Applies a 7×7 operator to an element of 𝕆₀.
pub fn apply_im(m: &Mat, v: &ImOctonion) -> ImOctonion {
    ImOctonion::from_slice(&m.apply(v.coords()))
}

/// The 7×7 operator with the given basis images as columns.
pub fn op_from_images(images: &[ImOctonion; 7]) -> Mat {
    Mat::from_fn(7, 7, |i, j| images[j].coord(i).clone())
}

/// Restricts an 8×8 operator that kills 1 and preserves 𝕆₀ to a 7×7 one.
fn restrict(m8: &Mat) -> Mat {
    for t in 0..8 {
        assert!(m8[(t, 0)].is_zero(), "operator does not kill 1");
        assert!(
            t == 0 || m8[(0, t)].is_zero(),
            "operator does not preserve the imaginary part"
        );
    }
    Mat::from_fn(7, 7, |i, j| m8[(i + 1, j + 1)].clone())
}

/// Extends a 7×7 operator on 𝕆₀ to 𝕆 by `f(1) = 1`.
pub fn extend_fixing_one(f: &Mat) -> Mat {
    Mat::from_fn(8, 8, |i, j| {
        if i == 0 && j == 0 {
            Scalar::one()
        } else if i == 0 || j == 0 {
            Scalar::zero()
        } else {
            f[(i - 1, j - 1)].clone()
        }
    })
}

/// The inner derivation `D_{x,y}` restricted to 𝕆₀.
pub fn d_xy(x: &ImOctonion, y: &ImOctonion) -> Mat {
    let (lx, rx) = (left_mult(&x.embed()), right_mult(&x.embed()));
    let (ly, ry) = (left_mult(&y.embed()), right_mult(&y.embed()));
    let m8 =
        &(&Mat::commutator(&lx, &ly) + &Mat::commutator(&lx, &ry)) + &Mat::commutator(&rx, &ry);
    restrict(&m8)
}

/// Leibniz predicate `d(xy) = d(x)y + x d(y)` on all 49 imaginary basis
/// pairs, with `d` extended by `d(1) = 0`; the equivalent cocycle condition
/// `Ω(dx,y,z) + Ω(x,dy,z) + Ω(x,y,dz) = 0` is checked alongside.
pub fn is_derivation(d: &Mat) -> bool {
    let basis = ImOctonion::basis();
    let images: Vec<Octonion> = basis.iter().map(|v| apply_im(d, v).embed()).collect();
    for (p, x) in basis.iter().enumerate() {
        for (q, y) in basis.iter().enumerate() {
            let prod = &x.embed() * &y.embed();
            // d acts on the real part of the product by zero
            let d_prod = apply_im(d, &ImOctonion::from_slice(&prod.coords()[1..])).embed();
            let rhs = &(&images[p] * &y.embed()) + &(&x.embed() * &images[q]);
            if d_prod != rhs {
                return false;
            }
        }
    }
    for p in 0..7 {
        for q in p + 1..7 {
            for r in q + 1..7 {
                let (x, y, z) = (&basis[p], &basis[q], &basis[r]);
                let (dx, dy, dz) = (apply_im(d, x), apply_im(d, y), apply_im(d, z));
                let sum = omega(&dx, y, z) + omega(x, &dy, z) + omega(x, y, &dz);
                if !sum.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Algebra-automorphism predicate for a 7×7 operator, extended by `f(1)=1`:
/// `f(xy) = f(x) f(y)` on all 49 imaginary basis pairs.
pub fn is_automorphism(f: &Mat) -> bool {
    let f8 = extend_fixing_one(f);
    let basis = ImOctonion::basis();
    let images: Vec<Octonion> = basis
        .iter()
        .map(|v| {
            Octonion::from_coords(std::array::from_fn({
                let w = f8.apply(v.embed().coords());
                move |i| w[i].clone()
            }))
        })
        .collect();
    for (p, x) in basis.iter().enumerate() {
        for (q, y) in basis.iter().enumerate() {
            let prod = &x.embed() * &y.embed();
            let f_prod = Octonion::from_coords({
                let w = f8.apply(prod.coords());
                std::array::from_fn(|i| w[i].clone())
            });
            if f_prod != &images[p] * &images[q] {
                return false;
            }
        }
    }
    true
}

/// True iff the automorphism leaves the calibration invariant on all basis
/// triples: `Ω(f(x), f(y), f(z)) = Ω(x, y, z)`.
pub fn preserves_omega(f: &Mat) -> bool {
    let basis = ImOctonion::basis();
    for p in 0..7 {
        for q in p + 1..7 {
            for r in q + 1..7 {
                let (fx, fy, fz) = (
                    apply_im(f, &basis[p]),
                    apply_im(f, &basis[q]),
                    apply_im(f, &basis[r]),
                );
                if omega(&fx, &fy, &fz) != omega(&basis[p], &basis[q], &basis[r]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Conjugation `f d f⁻¹` of an operator by an automorphism.
pub fn conjugate(f: &Mat, d: &Mat) -> Mat {
    let inv = f.inverse().expect("automorphisms are invertible");
    &(f * d) * &inv
}

/// Splits `o = q₁ + q₂·l` into its two quaternion halves.
pub fn halves(o: &Octonion) -> (Octonion, Octonion) {
    let c = o.coords();
    let mut q1 = Octonion::zero();
    let mut q2 = Octonion::zero();
    for t in 0..4 {
        let mut a = q1.coords().clone();
        a[t] = c[t].clone();
        q1 = Octonion::from_coords(a);
        let mut b = q2.coords().clone();
        b[t] = c[t + 4].clone();
        q2 = Octonion::from_coords(b);
    }
    (q1, q2)
}

fn require_quaternionic(a: &ImOctonion) -> Result<Octonion> {
    if !a.is_quaternionic() {
        return Err(Error::NotImaginaryQuaternion);
    }
    Ok(a.embed())
}

/// The derivation `d_a^l : q₁ + q₂l ↦ (a q₂)l` for `a ∈ ℍ₀`.
pub fn d_left(a: &ImOctonion) -> Result<Mat> {
    let a8 = require_quaternionic(a)?;
    let ell = Octonion::l();
    let images: [ImOctonion; 7] = std::array::from_fn(|t| {
        let (_, q2) = halves(&ImOctonion::unit(t).embed());
        (&(&a8 * &q2) * &ell).im().unwrap()
    });
    let d = op_from_images(&images);
    debug_assert!(is_derivation(&d));
    Ok(d)
}

/// The derivation `d_a^r : q₁ + q₂l ↦ [q₁, a] + (q₂ a)l` for `a ∈ ℍ₀`.
///
/// The ℍ-component is `[q₁, a]`: that is the unique sign for which the
/// Leibniz rule holds with the doubling products used here, and it makes
/// `D_{p,q} = d^r_{[q,p]}` for quaternions p, q.
pub fn d_right(a: &ImOctonion) -> Result<Mat> {
    let a8 = require_quaternionic(a)?;
    let ell = Octonion::l();
    let images: [ImOctonion; 7] = std::array::from_fn(|t| {
        let (q1, q2) = halves(&ImOctonion::unit(t).embed());
        let h_part = Octonion::bracket(&q1, &a8);
        (&h_part + &(&(&q2 * &a8) * &ell)).im().unwrap()
    });
    let d = op_from_images(&images);
    debug_assert!(is_derivation(&d));
    Ok(d)
}

/// The order-4 automorphism `τ(q₁ + q₂l) = q₁ + (i q₂)l`, restricted to 𝕆₀.
pub fn tau() -> &'static Mat {
    static TAU: OnceLock<Mat> = OnceLock::new();
    TAU.get_or_init(|| {
        let i8 = Octonion::i();
        let ell = Octonion::l();
        let images: [ImOctonion; 7] = std::array::from_fn(|t| {
            let (q1, q2) = halves(&ImOctonion::unit(t).embed());
            (&q1 + &(&(&i8 * &q2) * &ell)).im().unwrap()
        });
        let f = op_from_images(&images);
        assert!(is_automorphism(&f), "tau must be an automorphism");
        let f2 = &f * &f;
        let f4 = &f2 * &f2;
        assert!(
            f4 == Mat::identity(7) && f2 != Mat::identity(7),
            "tau has order 4"
        );
        f
    })
}

/// The invariance identity `[d, D_{x,y}] = D_{d(x),y} + D_{x,d(y)}`.
pub fn invariance_identity(d: &Mat, x: &ImOctonion, y: &ImOctonion) -> bool {
    let lhs = Mat::commutator(d, &d_xy(x, y));
    let rhs = &d_xy(&apply_im(d, x), y) + &d_xy(x, &apply_im(d, y));
    lhs == rhs
}

/// The Lie algebra g₂ with a fixed exact basis and all structure data.
pub struct G2 {
    basis: Vec<Mat>,
    pairs: Vec<(usize, usize)>,
    span: Span,
    solver: SpanSolver,
    /// structure constants: `[b_i, b_j] = Σ_k sc[i][j][k] b_k`
    sc: Vec<Vec<Vec<Scalar>>>,
    ad_mats: Vec<Mat>,
    killing: Mat,
}

pub const DIM: usize = 14;

impl G2 {
    /// Builds the derivation algebra from the operators `D_{e_a, e_b}`,
    /// scanned in lexicographic order over `1 ≤ a < b ≤ 7`.
    pub fn build() -> Result<G2> {
        let units: Vec<ImOctonion> = (1..=7).map(|a| Octonion::e(a).im().unwrap()).collect();
        let mut span = Span::new(49);
        let mut basis = Vec::new();
        let mut pairs = Vec::new();
        for a in 0..7 {
            for b in a + 1..7 {
                let d = d_xy(&units[a], &units[b]);
                if span.insert(d.flatten()) {
                    basis.push(d);
                    pairs.push((a + 1, b + 1));
                }
            }
        }
        if span.dim() != DIM {
            return Err(Error::RankDeficiency {
                expected: DIM,
                found: span.dim(),
            });
        }
        let solver = SpanSolver::new(&span);

        let mut sc = vec![vec![Vec::new(); DIM]; DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                if i == j {
                    sc[i][j] = vec![Scalar::zero(); DIM];
                } else if j < i {
                    sc[i][j] = sc[j][i].iter().map(|c| -c).collect();
                } else {
                    let br = Mat::commutator(&basis[i], &basis[j]);
                    sc[i][j] = solver
                        .coords(&br.flatten())
                        .ok_or(Error::NotBracketClosed)?;
                }
            }
        }
        let ad_mats: Vec<Mat> = (0..DIM)
            .map(|i| Mat::from_fn(DIM, DIM, |k, j| sc[i][j][k].clone()))
            .collect();
        let killing = Mat::from_fn(DIM, DIM, |i, j| (&ad_mats[i] * &ad_mats[j]).trace());

        Ok(G2 {
            basis,
            pairs,
            span,
            solver,
            sc,
            ad_mats,
            killing,
        })
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    /// The `(a, b)` index pairs whose `D_{e_a,e_b}` made the basis.
    pub fn basis_pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn contains(&self, d: &Mat) -> bool {
        self.span.contains(&d.flatten())
    }

    /// Exact coordinates of an operator in the chosen basis.
    pub fn coords(&self, d: &Mat) -> Option<Vec<Scalar>> {
        self.solver.coords(&d.flatten())
    }

    pub fn from_coords(&self, c: &[Scalar]) -> Mat {
        assert_eq!(c.len(), DIM);
        let mut m = Mat::zeros(7, 7);
        for (ci, b) in c.iter().zip(&self.basis) {
            if !ci.is_zero() {
                m = &m + &b.scale(ci);
            }
        }
        m
    }

    /// Bracket in coordinates.
    pub fn bracket_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); DIM];
        for i in 0..DIM {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if b[j].is_zero() {
                    continue;
                }
                let f = &a[i] * &b[j];
                for k in 0..DIM {
                    if !self.sc[i][j][k].is_zero() {
                        out[k] += &(&f * &self.sc[i][j][k]);
                    }
                }
            }
        }
        out
    }

    /// Adjoint matrix of the element with the given coordinates.
    pub fn ad(&self, c: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(DIM, DIM);
        for (ci, adi) in c.iter().zip(&self.ad_mats) {
            if !ci.is_zero() {
                m = &m + &adi.scale(ci);
            }
        }
        m
    }

    pub fn killing(&self) -> &Mat {
        &self.killing
    }

    pub fn killing_pairing(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut out = Scalar::zero();
        for i in 0..DIM {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if !b[j].is_zero() && !self.killing[(i, j)].is_zero() {
                    out += &(&(&a[i] * &b[j]) * &self.killing[(i, j)]);
                }
            }
        }
        out
    }

    /// Jacobi identity over all 364 unordered basis triples.
    pub fn jacobi_holds(&self) -> bool {
        for i in 0..DIM {
            for j in i + 1..DIM {
                for k in j + 1..DIM {
                    // [[b_i,b_j],b_k] = -ad(b_k)·sc[i][j], cyclically
                    let t1 = self.ad_mats[k].apply(&self.sc[i][j]);
                    let t2 = self.ad_mats[i].apply(&self.sc[j][k]);
                    let t3 = self.ad_mats[j].apply(&self.sc[k][i]);
                    let ok = (0..DIM).all(|t| (&(&t1[t] + &t2[t]) + &t3[t]).is_zero());
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// κ(a, [b, c]) is totally antisymmetric; checked on basis triples.
    pub fn killing_ad_invariant(&self) -> bool {
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let lhs = self.killing_row_pairing(&self.sc[i][j], k);
                    let rhs = self.killing_row_pairing(&self.sc[i][k], j);
                    if !(&lhs + &rhs).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn killing_row_pairing(&self, a: &[Scalar], basis_idx: usize) -> Scalar {
        let mut out = Scalar::zero();
        for i in 0..DIM {
            if !a[i].is_zero() && !self.killing[(i, basis_idx)].is_zero() {
                out += &(&a[i] * &self.killing[(i, basis_idx)]);
            }
        }
        out
    }

    /// The constant ρ with κ(u, v) = ρ·tr(uv) on 𝕆₀, if it exists.
    pub fn trace_form_ratio(&self) -> Option<Scalar> {
        let mut ratio: Option<Scalar> = None;
        for i in 0..DIM {
            for j in 0..DIM {
                let t = (&self.basis[i] * &self.basis[j]).trace();
                let k = &self.killing[(i, j)];
                match (&ratio, t.is_zero(), k.is_zero()) {
                    (_, true, true) => {}
                    (_, true, false) => return None,
                    (None, false, _) => ratio = Some(k / &t),
                    (Some(r), false, _) => {
                        if &(r * &t) != k {
                            return None;
                        }
                    }
                }
            }
        }
        ratio
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::im_idx::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn unit(i: usize) -> ImOctonion {
        ImOctonion::unit(i)
    }

    #[test]
    fn left_right_multiplication() {
        let li = left_mult(&Octonion::i());
        let ri = right_mult(&Octonion::i());
        assert_eq!(
            li.apply(Octonion::j().coords()),
            Octonion::k().coords().to_vec()
        );
        assert_eq!(
            ri.apply(Octonion::j().coords()),
            (-&Octonion::k()).coords().to_vec()
        );
        // both are skew for the norm form on 𝕆
        for x in 1..8 {
            let lx = left_mult(&Octonion::unit(x));
            let rx = right_mult(&Octonion::unit(x));
            for u in 0..8 {
                for v in 0..8 {
                    for m in [&lx, &rx] {
                        let mu = Octonion::from_coords({
                            let w = m.apply(Octonion::unit(u).coords());
                            std::array::from_fn(|t| w[t].clone())
                        });
                        let mv = Octonion::from_coords({
                            let w = m.apply(Octonion::unit(v).coords());
                            std::array::from_fn(|t| w[t].clone())
                        });
                        let sum = Octonion::polar(&mu, &Octonion::unit(v))
                            + Octonion::polar(&Octonion::unit(u), &mv);
                        assert!(sum.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn d_operator_basics() {
        let (i, j, k) = (unit(I), unit(J), unit(K));
        assert!(d_xy(&i, &i).is_zero());
        let dij = d_xy(&i, &j);
        assert!(apply_im(&dij, &k).is_zero());
        assert!(is_derivation(&dij));
        assert!(is_derivation(&Mat::zeros(7, 7)));
        // L_i restricted to 𝕆₀ is not even well-defined as a derivation;
        // its closest 7×7 shadow fails the Leibniz rule.
        let li = left_mult(&Octonion::i());
        let shadow = Mat::from_fn(7, 7, |r, c| li[(r + 1, c + 1)].clone());
        assert!(!is_derivation(&shadow));
    }

    #[test]
    fn d_pointwise_formula() {
        // D_{x,y}(z) = [[x,y],z] - 3(x,y,z) on all 343 basis triples.
        let basis = ImOctonion::basis();
        for x in &basis {
            let (xo,) = (x.embed(),);
            for y in &basis {
                let d = d_xy(x, y);
                let br = Octonion::bracket(&xo, &y.embed());
                for z in &basis {
                    let zo = z.embed();
                    let expected = &Octonion::bracket(&br, &zo)
                        - &Octonion::associator(&xo, &y.embed(), &zo).scale(&s(3));
                    assert_eq!(apply_im(&d, z).embed(), expected);
                }
            }
        }
    }

    #[test]
    fn d_of_quaternions_is_right_derivation() {
        // D_{p,q} = d^r_{[q,p]} for quaternions p, q.
        let (i, j, k) = (unit(I), unit(J), unit(K));
        for (p, q) in [(&i, &j), (&j, &k), (&i, &k)] {
            let d = d_xy(p, q);
            let c = Octonion::bracket(&q.embed(), &p.embed()).im().unwrap();
            assert_eq!(d, d_right(&c).unwrap());
        }
        // concretely: D_{i,j} = d^r_{-2k}
        let dij = d_xy(&i, &j);
        let m2k = ImOctonion::unit(K).scale(&s(-2));
        assert_eq!(dij, d_right(&m2k).unwrap());
    }

    #[test]
    fn d_left_right_values() {
        let (i, j) = (unit(I), unit(J));
        let dl = d_left(&i).unwrap();
        let dr = d_right(&i).unwrap();
        // d_i^l(jl) = (ij)l = kl and d_i^l kills ℍ
        assert_eq!(apply_im(&dl, &unit(JL)), unit(KL));
        for q in [I, J, K] {
            assert!(apply_im(&dl, &unit(q)).is_zero());
        }
        // d_i^r(j) = [j, i] = -2k, d_i^r(jl) = (ji)l = -kl
        assert_eq!(apply_im(&dr, &j), unit(K).scale(&s(-2)));
        assert_eq!(apply_im(&dr, &unit(JL)), -&unit(KL));
        // both fix the defining relation d(l) = al
        assert_eq!(apply_im(&dl, &unit(L)), unit(IL));
        assert_eq!(apply_im(&dr, &unit(L)), unit(IL));
        assert!(d_left(&unit(L)).is_err());
    }

    #[test]
    fn d_left_is_isomorphism_d_right_reverses() {
        let units = [unit(I), unit(J), unit(K)];
        for a in &units {
            for b in &units {
                let ab = Octonion::bracket(&a.embed(), &b.embed()).im().unwrap();
                let lhs_l = Mat::commutator(&d_left(a).unwrap(), &d_left(b).unwrap());
                assert_eq!(lhs_l, d_left(&ab).unwrap());
                let lhs_r = Mat::commutator(&d_right(a).unwrap(), &d_right(b).unwrap());
                let ba = Octonion::bracket(&b.embed(), &a.embed()).im().unwrap();
                assert_eq!(lhs_r, d_right(&ba).unwrap());
                // the two families commute
                assert!(Mat::commutator(&d_left(a).unwrap(), &d_right(b).unwrap()).is_zero());
            }
        }
    }

    #[test]
    fn tau_is_an_order_four_automorphism() {
        let t = tau();
        assert!(is_automorphism(t));
        assert!(preserves_omega(t));
        assert_eq!(apply_im(t, &unit(L)), unit(IL));
        assert_eq!(apply_im(t, &unit(IL)), -&unit(L));
        assert_eq!(apply_im(t, &unit(I)), unit(I));
    }

    #[test]
    fn invariance_identity_sweep() {
        let g2 = G2::build().unwrap();
        let units: Vec<ImOctonion> = (1..=7).map(|a| Octonion::e(a).im().unwrap()).collect();
        // all (basis derivation, e_a, e_b) triples
        for d in g2.basis() {
            for a in 0..7 {
                for b in a + 1..7 {
                    assert!(invariance_identity(d, &units[a], &units[b]));
                }
            }
        }
        assert!(invariance_identity(&Mat::zeros(7, 7), &units[0], &units[3]));
    }

    #[test]
    fn g2_structure() {
        let g2 = G2::build().unwrap();
        assert_eq!(g2.basis().len(), 14);
        for d in g2.basis() {
            assert!(is_derivation(d));
        }
        assert!(g2.jacobi_holds());
        assert!(g2.killing().is_negative_definite());
        // independent route: congruence diagonalization gives (0, 14, 0)
        assert_eq!(g2.killing().symmetric_signature(), (0, 14, 0));
        assert!(g2.killing_ad_invariant());
        // κ = 4·tr₇ on the derivation algebra
        assert_eq!(g2.trace_form_ratio(), Some(s(4)));
        // derivations kill 1 and preserve 𝕆₀ by construction (restrict()
        // asserts), and every basis bracket stays inside the span
        let d0 = &g2.basis()[0];
        let d5 = &g2.basis()[5];
        assert!(g2.contains(&Mat::commutator(d0, d5)));
    }
}
