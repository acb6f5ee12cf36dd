//! Representation-theoretic analysis of the subalgebras: commutants
//! (absolute irreducibility), weight extraction for su(2)-actions, module
//! decompositions, Dynkin indices, the principal coefficient system, and
//! Lie-Yamaguti algebras of reductive pairs.

use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

use crate::g2::{self, d_left, d_right, G2};
use crate::matrix::{Mat, Span, SpanSolver};
use crate::octonion::{im_idx, ImOctonion};
use crate::poly::{factor_weights, DEFAULT_KMAX};
use crate::scalar::{Rat, Scalar};
use crate::subalgebras::{principal_triple, Label, ReductivePair, Subalgebra};
use crate::{Error, Result};

/// Dimension of the commutant `{T : Tg = gT for all generators g}`,
/// computed as the kernel of one exact linear system in n² unknowns.
pub fn commutant_dim(generators: &[Mat]) -> usize {
    assert!(!generators.is_empty());
    let n = generators[0].nrows();
    let mut rows = Vec::with_capacity(generators.len() * n * n);
    for gm in generators {
        assert_eq!(gm.nrows(), n);
        for p in 0..n {
            for q in 0..n {
                // (T g - g T)[p][q] = Σ_r T[p][r] g[r][q] - g[p][r] T[r][q]
                let mut row = vec![Scalar::zero(); n * n];
                for r in 0..n {
                    row[p * n + r] += &gm[(r, q)];
                    row[r * n + q] -= &gm[(p, r)];
                }
                rows.push(row);
            }
        }
    }
    n * n - Mat::from_rows(rows).rank()
}

/// The space an su(2)-subalgebra acts on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Space {
    /// 𝕆₀, dimension 7.
    ImaginaryOctonions,
    /// g₂ under the adjoint action, dimension 14.
    Adjoint,
}

impl Space {
    pub fn dim(self) -> usize {
        match self {
            Space::ImaginaryOctonions => 7,
            Space::Adjoint => 14,
        }
    }
}

impl std::str::FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Space> {
        match s.to_ascii_lowercase().as_str() {
            "o0" => Ok(Space::ImaginaryOctonions),
            "g2" => Ok(Space::Adjoint),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

/// A compact generator normalized so that its adjoint action on the
/// subalgebra has spectrum {0, ±2i}, i.e. characteristic polynomial λ(λ²+4).
pub struct NormalizedGenerator {
    pub mat: Mat,
    pub coords: Vec<Scalar>,
}

/// Picks the distinguished generator of a three-dimensional subalgebra
/// (d_i^l for h₃, d_i^r for h₅, d_i^l - d_i^r for h₇, 2h for h₈) and
/// verifies the normalization λ(λ²+4) on the subalgebra.
pub fn normalized_h(g2: &G2, sub: &Subalgebra) -> Result<NormalizedGenerator> {
    if sub.dim() != 3 {
        return Err(Error::NotThreeDimensional);
    }
    let i = ImOctonion::unit(im_idx::I);
    let candidate = match sub.label {
        Label::H3 => d_left(&i)?,
        Label::H5 => d_right(&i)?,
        Label::H7 => &d_left(&i)? - &d_right(&i)?,
        Label::H8 => principal_triple().0.scale(&Scalar::from_int(2)),
        _ => return Err(Error::NotThreeDimensional),
    };
    let coords = g2.coords(&candidate).ok_or(Error::NotInSpan)?;
    if !sub.coord_span().contains(&coords) {
        return Err(Error::NoNormalizedElement);
    }
    let ad = sub.ad_inside(g2, &coords)?;
    let expected = crate::poly::expand_weights(1, &[0, 1]); // λ(λ²+4)
    if ad.char_poly() != expected {
        return Err(Error::NoNormalizedElement);
    }
    Ok(NormalizedGenerator {
        mat: candidate,
        coords,
    })
}

/// A decomposition into irreducible su(2)-modules; `summands` holds the
/// highest weights n (so V(n) has dimension n+1), descending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    summands: Vec<usize>,
}

impl Decomposition {
    pub fn new(mut summands: Vec<usize>) -> Self {
        summands.sort_unstable_by(|a, b| b.cmp(a));
        Decomposition { summands }
    }

    pub fn summands(&self) -> &[usize] {
        &self.summands
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(|n| n + 1).sum()
    }

    /// `(dim z(e), dim z(h))`: the nilpotent centralizer dimension is the
    /// number of summands, the semisimple one counts the even summands.
    pub fn centralizer_dims(&self) -> (usize, usize) {
        let z_e = self.summands.len();
        let z_h = self.summands.iter().filter(|n| *n % 2 == 0).count();
        (z_e, z_h)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut idx = 0;
        while idx < self.summands.len() {
            let n = self.summands[idx];
            let mut count = 0;
            while idx < self.summands.len() && self.summands[idx] == n {
                count += 1;
                idx += 1;
            }
            if !first {
                write!(f, " \u{2295} ")?;
            }
            first = false;
            if count > 1 {
                write!(f, "{count}V({n})")?;
            } else {
                write!(f, "V({n})")?;
            }
        }
        Ok(())
    }
}

/// Decomposes a space into irreducible su(2)-modules under a
/// three-dimensional subalgebra, by factoring the characteristic polynomial
/// of the normalized generator and peeling weight ladders top-down.
pub fn sl2_decompose(g2: &G2, sub: &Subalgebra, space: Space) -> Result<Decomposition> {
    let h = normalized_h(g2, sub)?;
    let m = match space {
        Space::ImaginaryOctonions => h.mat.clone(),
        Space::Adjoint => g2.ad(&h.coords),
    };
    let (m0, ms) = factor_weights(&m.char_poly(), DEFAULT_KMAX)?;
    let summands = peel_ladders(m0, &ms)?;
    let dec = Decomposition::new(summands);
    debug_assert_eq!(dec.dim(), space.dim());
    Ok(dec)
}

/// Reconstructs highest weights from multiplicities: repeatedly remove the
/// ladder {n, n-2, ..., 1 or 0} for the largest remaining weight n.
fn peel_ladders(m0: usize, ms: &[usize]) -> Result<Vec<usize>> {
    let mut mult = vec![m0];
    mult.extend_from_slice(ms);
    let mut summands = Vec::new();
    loop {
        let Some(top) = (0..mult.len()).rev().find(|&k| mult[k] > 0) else {
            break;
        };
        summands.push(top);
        let mut k = top as isize;
        while k >= 0 {
            if mult[k as usize] == 0 {
                return Err(Error::InconsistentWeights);
            }
            mult[k as usize] -= 1;
            k -= 2;
        }
    }
    Ok(summands)
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Dynkin index of a three-dimensional subalgebra via the weight formula:
/// `j = (Σ_k m_k k²) / 2`, with m_k the weight multiplicities of the
/// normalized generator on 𝕆₀.
///
/// The normalization constant 2 is the index of the 7-dimensional
/// representation itself: under h₃ (index 1 by minimality) it decomposes as
/// 2V(1) ⊕ 3V(0), whose V(n)-index sum is 2·(1·2·3/6) = 2.
pub fn dynkin_index(g2: &G2, sub: &Subalgebra) -> Result<Rat> {
    let h = normalized_h(g2, sub)?;
    let (_, ms) = factor_weights(&h.mat.char_poly(), DEFAULT_KMAX)?;
    let mut sum = Rat::zero();
    for (idx, &m) in ms.iter().enumerate() {
        let k = (idx + 1) as i64;
        sum += rat(m as i64) * rat(k * k);
    }
    Ok(sum / rat(2))
}

/// Independent route to the same index: the ratio of trace forms
/// `tr((h')²) / tr((h'_ref)²)` on 𝕆₀ against the reference generator
/// `d_i^l` of h₃, whose embedding has index 1.
pub fn dynkin_index_trace_oracle(g2: &G2, sub: &Subalgebra) -> Result<Rat> {
    let h = normalized_h(g2, sub)?;
    let reference = d_left(&ImOctonion::unit(im_idx::I))?;
    let num = (&h.mat * &h.mat).trace();
    let den = (&reference * &reference).trace();
    let ratio = num / den;
    ratio.as_rat().cloned().ok_or(Error::InconsistentWeights)
}

/// Third route: Σ over summands of the V(n) index n(n+1)(n+2)/6, divided by
/// the reference index 2 of the 7-dimensional representation.
pub fn index_from_decomposition(dec: &Decomposition) -> Rat {
    let mut sum = Rat::zero();
    for &n in dec.summands() {
        let n = n as i64;
        sum += Rat::new(BigInt::from(n * (n + 1) * (n + 2)), BigInt::from(6));
    }
    sum / rat(2)
}

/// Solves the principal coefficient system `Σ_j ⟨α_i, α_j⟩ c_j = 2` for a
/// Cartan matrix, exactly.
pub fn principal_coeffs(cartan: &[Vec<i64>]) -> Result<Vec<Rat>> {
    let n = cartan.len();
    if cartan.iter().any(|row| row.len() != n) || n == 0 {
        return Err(Error::SingularCartan);
    }
    let m = Mat::from_fn(n, n, |i, j| Scalar::from_int(cartan[i][j]));
    if m.rank() != n {
        return Err(Error::SingularCartan);
    }
    let rhs = vec![Scalar::from_int(2); n];
    let sol = m.solve(&rhs).ok_or(Error::SingularCartan)?;
    Ok(sol.iter().map(|s| s.as_rat().unwrap().clone()).collect())
}

/// The binary-ternary algebra of a reductive pair `g₂ = h ⊕ m`:
///
/// ```text
/// x ∘ y     = π_m [x, y]
/// [x, y, z] = [π_h [x, y], z]
/// ```
///
/// with all products tabulated on the complement basis.
pub struct LieYamaguti {
    dim: usize,
    binary: Vec<Vec<Vec<Scalar>>>,
    ternary: Vec<Vec<Vec<Vec<Scalar>>>>,
}

/// Builds the Lie-Yamaguti structure of a certified reductive pair.
pub fn lie_yamaguti_from_pair(g2: &G2, pair: &ReductivePair) -> Result<LieYamaguti> {
    let ds = pair.sub.dim();
    let dm = pair.complement.len();
    let mut concat = Span::new(g2::DIM);
    for v in pair.sub.coords.iter().chain(&pair.complement) {
        concat.insert(v.clone());
    }
    if concat.dim() != g2::DIM {
        return Err(Error::NotInvariant);
    }
    let solver = SpanSolver::new(&concat);
    let split = |v: &[Scalar]| -> Result<(Vec<Scalar>, Vec<Scalar>)> {
        let c = solver.coords(v).ok_or(Error::NotInSpan)?;
        Ok((c[..ds].to_vec(), c[ds..].to_vec()))
    };

    let mut binary = vec![vec![Vec::new(); dm]; dm];
    let mut h_parts = vec![vec![Vec::new(); dm]; dm];
    for i in 0..dm {
        for j in 0..dm {
            let br = g2.bracket_coords(&pair.complement[i], &pair.complement[j]);
            let (h_c, m_c) = split(&br)?;
            // reassemble the h-projection in g₂ coordinates
            let mut h_vec = vec![Scalar::zero(); g2::DIM];
            for (t, c) in h_c.iter().enumerate() {
                for r in 0..g2::DIM {
                    h_vec[r] += &(c * &pair.sub.coords[t][r]);
                }
            }
            h_parts[i][j] = h_vec;
            binary[i][j] = m_c;
        }
    }
    let mut ternary = vec![vec![vec![Vec::new(); dm]; dm]; dm];
    for i in 0..dm {
        for j in 0..dm {
            for k in 0..dm {
                let br = g2.bracket_coords(&h_parts[i][j], &pair.complement[k]);
                let (h_c, m_c) = split(&br)?;
                if h_c.iter().any(|c| !c.is_zero()) {
                    return Err(Error::NotInvariant);
                }
                ternary[i][j][k] = m_c;
            }
        }
    }
    Ok(LieYamaguti {
        dim: dm,
        binary,
        ternary,
    })
}

impl LieYamaguti {
    pub fn from_tables(
        dim: usize,
        binary: Vec<Vec<Vec<Scalar>>>,
        ternary: Vec<Vec<Vec<Vec<Scalar>>>>,
    ) -> Self {
        LieYamaguti {
            dim,
            binary,
            ternary,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn binary(&self, i: usize, j: usize) -> &[Scalar] {
        &self.binary[i][j]
    }

    pub fn ternary(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        &self.ternary[i][j][k]
    }

    /// True iff the binary product vanishes identically (symmetric pairs).
    pub fn binary_is_zero(&self) -> bool {
        self.binary
            .iter()
            .flatten()
            .all(|v| v.iter().all(Scalar::is_zero))
    }

    fn binary_vb(&self, v: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (a, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&self.binary[a][j]) {
                *o += &(c * t);
            }
        }
        out
    }

    fn binary_bv(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (b, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&self.binary[i][b]) {
                *o += &(c * t);
            }
        }
        out
    }

    fn ternary_vbb(&self, v: &[Scalar], j: usize, k: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (a, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&self.ternary[a][j][k]) {
                *o += &(c * t);
            }
        }
        out
    }

    fn ternary_bvb(&self, i: usize, v: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (b, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&self.ternary[i][b][k]) {
                *o += &(c * t);
            }
        }
        out
    }

    fn ternary_bbv(&self, i: usize, j: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (c_idx, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&self.ternary[i][j][c_idx]) {
                *o += &(c * t);
            }
        }
        out
    }

    /// Verifies the six binary-ternary axioms:
    ///
    /// ```text
    /// 1. x∘y is alternating
    /// 2. [x,y,z] is alternating in (x,y)
    /// 3. Σ_cyc ([x,y,z] + (x∘y)∘z) = 0
    /// 4. Σ_cyc [x∘y, z, w] = 0
    /// 5. [x,y, u∘v] = [x,y,u]∘v + u∘[x,y,v]
    /// 6. [x,y,[u,v,w]] = [[x,y,u],v,w] + [u,[x,y,v],w] + [u,v,[x,y,w]]
    /// ```
    ///
    /// Axioms 1-3 are swept over all basis tuples. Axioms 4 and 5 are swept
    /// over sorted index tuples, which is exhaustive by multilinearity once
    /// 1 and 2 hold. Axiom 6 runs over all sorted pairs (x,y), (u,v) with the
    /// deterministic stride-3 schedule `w ≡ x+y+u+v (mod 3)` when dim > 8,
    /// and over every w otherwise.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.dim;
        let zero = |v: &[Scalar]| v.iter().all(Scalar::is_zero);
        let add3 = |a: &[Scalar], b: &[Scalar], c: &[Scalar]| -> Vec<Scalar> {
            (0..n).map(|t| &(&a[t] + &b[t]) + &c[t]).collect()
        };
        let witness = |idx: &[usize]| format!("{idx:?}");

        // (1) and (2)
        for i in 0..n {
            for j in 0..n {
                let anti: Vec<Scalar> = (0..n)
                    .map(|t| &self.binary[i][j][t] + &self.binary[j][i][t])
                    .collect();
                if !zero(&anti) {
                    return Err(Error::LyAxiom {
                        axiom: 1,
                        witness: witness(&[i, j]),
                    });
                }
                for k in 0..n {
                    let anti: Vec<Scalar> = (0..n)
                        .map(|t| &self.ternary[i][j][k][t] + &self.ternary[j][i][k][t])
                        .collect();
                    if !zero(&anti) {
                        return Err(Error::LyAxiom {
                            axiom: 2,
                            witness: witness(&[i, j, k]),
                        });
                    }
                }
            }
        }
        // (3) over all basis triples
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let t1 = add3(
                        &self.ternary[i][j][k],
                        &self.ternary[j][k][i],
                        &self.ternary[k][i][j],
                    );
                    let b1 = self.binary_vb(&self.binary[i][j], k);
                    let b2 = self.binary_vb(&self.binary[j][k], i);
                    let b3 = self.binary_vb(&self.binary[k][i], j);
                    let total = add3(&t1, &b1, &add3(&b2, &b3, &vec![Scalar::zero(); n]));
                    if !zero(&total) {
                        return Err(Error::LyAxiom {
                            axiom: 3,
                            witness: witness(&[i, j, k]),
                        });
                    }
                }
            }
        }
        // (4) over sorted triples, all w; the cyclic sum is alternating in
        // (x,y,z) once (1) and (2) hold, so this is exhaustive.
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for w in 0..n {
                        let t1 = self.ternary_vbb(&self.binary[i][j], k, w);
                        let t2 = self.ternary_vbb(&self.binary[j][k], i, w);
                        let t3 = self.ternary_vbb(&self.binary[k][i], j, w);
                        if !zero(&add3(&t1, &t2, &t3)) {
                            return Err(Error::LyAxiom {
                                axiom: 4,
                                witness: witness(&[i, j, k, w]),
                            });
                        }
                    }
                }
            }
        }
        // (5) over sorted pairs (x,y) and (u,v)
        for x in 0..n {
            for y in x + 1..n {
                for u in 0..n {
                    for v in u + 1..n {
                        let lhs = self.ternary_bbv(x, y, &self.binary[u][v]);
                        let r1 = self.binary_vb(&self.ternary[x][y][u], v);
                        let r2 = self.binary_bv(u, &self.ternary[x][y][v]);
                        let diff: Vec<Scalar> =
                            (0..n).map(|t| &lhs[t] - &(&r1[t] + &r2[t])).collect();
                        if !zero(&diff) {
                            return Err(Error::LyAxiom {
                                axiom: 5,
                                witness: witness(&[x, y, u, v]),
                            });
                        }
                    }
                }
            }
        }
        // (6) with the documented w-schedule
        for x in 0..n {
            for y in x + 1..n {
                for u in 0..n {
                    for v in u + 1..n {
                        let mut w = if n > 8 { (x + y + u + v) % 3 } else { 0 };
                        let step = if n > 8 { 3 } else { 1 };
                        while w < n {
                            let lhs = self.ternary_bbv(x, y, &self.ternary[u][v][w]);
                            let r1 = self.ternary_vbb(&self.ternary[x][y][u], v, w);
                            let r2 = self.ternary_bvb(u, &self.ternary[x][y][v], w);
                            let r3 = self.ternary_bbv(u, v, &self.ternary[x][y][w]);
                            let diff: Vec<Scalar> = (0..n)
                                .map(|t| &lhs[t] - &(&(&r1[t] + &r2[t]) + &r3[t]))
                                .collect();
                            if !zero(&diff) {
                                return Err(Error::LyAxiom {
                                    axiom: 6,
                                    witness: witness(&[x, y, u, v, w]),
                                });
                            }
                            w += step;
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
