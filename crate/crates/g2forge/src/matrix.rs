//! Dense exact matrices over ℚ(√15).
//!
//! Elimination is fraction-free (Bareiss) wherever only ranks, determinants
//! or principal minors are needed; kernels and linear solves go through a
//! reduced row echelon form over the field. Sizes in this crate stay tiny
//! (at most a few hundred rows), so everything is dense.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::poly::UniPoly;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(ambient: usize, cols: &[Vec<Scalar>]) -> Self {
        Mat::from_fn(ambient, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self[(i, j)].is_zero() {
                        acc += &(&self[(i, j)] * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &Mat, b: &Mat) -> Mat {
        &(a * b) - &(b * a)
    }

    /// Flattens row-major into a vector, for span arithmetic on operators.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(rows * cols, data.len());
        Mat { rows, cols, data }
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// `[self | rhs]` side by side.
    pub fn augment(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.rows, rhs.rows);
        Mat::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        })
    }

    /// Fraction-free (Bareiss) forward elimination.
    /// Returns the echelon matrix, the pivot columns and the swap parity.
    fn bareiss(mut self) -> (Mat, Vec<usize>, bool) {
        let (nr, nc) = (self.rows, self.cols);
        let mut prev = Scalar::one();
        let mut pivots = Vec::new();
        let mut even = true;
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(p) = (r..nr).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                self.swap_rows(p, r);
                even = !even;
            }
            for i in r + 1..nr {
                for j in c + 1..nc {
                    let t = &(&self[(r, c)] * &self[(i, j)]) - &(&self[(i, c)] * &self[(r, j)]);
                    self[(i, j)] = t / &prev;
                }
                self[(i, c)] = Scalar::zero();
            }
            prev = self[(r, c)].clone();
            pivots.push(c);
            r += 1;
        }
        (self, pivots, even)
    }

    /// Rank via field elimination with normalized pivots. On the large
    /// sparse systems of this crate (up to a few hundred rows) that keeps
    /// entries small, whereas fraction-free pivots grow like k×k minors.
    pub fn rank(&self) -> usize {
        let (_, pivots) = self.clone().rref();
        pivots.len()
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square());
        if self.rows == 0 {
            return Scalar::one();
        }
        let (m, pivots, even) = self.clone().bareiss();
        if pivots.len() < self.rows {
            return Scalar::zero();
        }
        // With full rank the final Bareiss pivot is the determinant.
        let d = m[(self.rows - 1, self.cols - 1)].clone();
        if even {
            d
        } else {
            -d
        }
    }

    /// The leading principal minors `det A[..k, ..k]`, k = 1..=n, computed
    /// by pivot-free Bareiss. `None` if some minor vanishes (then the form
    /// is not definite and the remaining minors are not needed).
    pub fn leading_principal_minors(&self) -> Option<Vec<Scalar>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut prev = Scalar::one();
        let mut minors = Vec::with_capacity(n);
        for k in 0..n {
            if m[(k, k)].is_zero() {
                return None;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&m[(k, k)] * &m[(i, j)]) - &(&m[(i, k)] * &m[(k, j)]);
                    m[(i, j)] = t / &prev;
                }
                m[(i, k)] = Scalar::zero();
            }
            prev = m[(k, k)].clone();
            minors.push(prev.clone());
        }
        Some(minors)
    }

    /// Exact definiteness test for a symmetric matrix: all leading principal
    /// minors satisfy `(-1)^k m_k > 0`.
    pub fn is_negative_definite(&self) -> bool {
        match self.leading_principal_minors() {
            None => false,
            Some(minors) => minors
                .iter()
                .enumerate()
                .all(|(k, m)| m.sign() == if k % 2 == 0 { -1 } else { 1 }),
        }
    }

    /// Reduced row echelon form over the field; returns pivot columns.
    pub fn rref(mut self) -> (Mat, Vec<usize>) {
        let (nr, nc) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(p) = (r..nr).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(p, r);
            let inv = self[(r, c)].inv().unwrap();
            for j in c..nc {
                let t = &self[(r, j)] * &inv;
                self[(r, j)] = t;
            }
            for i in 0..nr {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..nc {
                    let t = &f * &self[(r, j)];
                    self[(i, j)] = &self[(i, j)] - &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (self, pivots)
    }

    /// Basis of the right null space `{v : self·v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.clone().rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, f)];
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of `self · x = b`, free variables set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let rhs = Mat::from_cols(self.rows, &[b.to_vec()]);
        let (r, pivots) = self.augment(&rhs).rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse, or `None` if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        let (r, pivots) = self.augment(&Mat::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Monic characteristic polynomial `det(λI - self)` by Faddeev–LeVerrier.
    /// Only divisions by the integers 1..=n occur, so the computation is
    /// exact over any field of characteristic zero.
    pub fn char_poly(&self) -> UniPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Mat::identity(n);
        for k in 1..=n {
            m = self * &m;
            let c = -(m.trace()) / Scalar::from_int(k as i64);
            coeffs[n - k] = c.clone();
            if k < n {
                for i in 0..n {
                    let t = &m[(i, i)] + &c;
                    m[(i, i)] = t;
                }
            }
        }
        UniPoly::new(coeffs)
    }

    /// Evaluates a polynomial at a square matrix.
    pub fn eval_poly(p: &UniPoly, m: &Mat) -> Mat {
        assert!(m.is_square());
        let n = m.nrows();
        let mut acc = Mat::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &(m * &acc) + &Mat::identity(n).scale(c);
        }
        acc
    }

    /// Signature `(p, q, z)` of a symmetric matrix: the number of positive,
    /// negative and zero diagonal entries after congruence diagonalization.
    pub fn symmetric_signature(&self) -> (usize, usize, usize) {
        assert!(self.is_square());
        debug_assert_eq!(*self, self.transpose(), "matrix must be symmetric");
        let n = self.rows;
        let mut m = self.clone();
        let (mut pos, mut neg) = (0usize, 0usize);
        for k in 0..n {
            if m[(k, k)].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                    m.swap_rows(k, j);
                    m.swap_cols(k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                    // Both diagonals vanish, so adding row+column j to k
                    // leaves 2·m[k][j] ≠ 0 on the diagonal.
                    for c in 0..n {
                        let t = &m[(k, c)] + &m[(j, c)];
                        m[(k, c)] = t;
                    }
                    for r in 0..n {
                        let t = &m[(r, k)] + &m[(r, j)];
                        m[(r, k)] = t;
                    }
                } else {
                    continue; // row and column k already zero
                }
            }
            let pivot = m[(k, k)].clone();
            match pivot.sign() {
                1 => pos += 1,
                -1 => neg += 1,
                _ => unreachable!("pivot is nonzero"),
            }
            let factors: Vec<Scalar> = (k + 1..n).map(|i| &m[(i, k)] / &pivot).collect();
            for (off, i) in (k + 1..n).enumerate() {
                if factors[off].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &factors[off] * &m[(k, j)];
                    m[(i, j)] = &m[(i, j)] - &t;
                }
            }
            for (off, i) in (k + 1..n).enumerate() {
                if factors[off].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &factors[off] * &m[(j, k)];
                    m[(j, i)] = &m[(j, i)] - &t;
                }
            }
        }
        (pos, neg, n - pos - neg)
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] += &(a * b);
                }
            }
        }
        out
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}", self[(i, j)])?;
                if j + 1 < self.cols {
                    write!(f, ", ")?;
                }
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of ℚ(√15)ⁿ, kept as an independent spanning set plus a
/// row-reduced shadow for cheap membership tests.
#[derive(Clone)]
pub struct Span {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    reduced: Vec<(usize, Vec<Scalar>)>, // (leading index, normalized row)
}

impl Span {
    pub fn new(ambient: usize) -> Self {
        Span {
            ambient,
            basis: Vec::new(),
            reduced: Vec::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<Scalar>>>(ambient: usize, vs: I) -> Self {
        let mut s = Span::new(ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Mat {
        Mat::from_cols(self.ambient, &self.basis)
    }

    fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (lead, row) in &self.reduced {
            if !v[*lead].is_zero() {
                let f = v[*lead].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    let t = &f * r;
                    *x = &*x - &t;
                }
            }
        }
        v
    }

    /// Adds `v` if it enlarges the span; reports whether it did.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient);
        let red = self.reduce(v.clone());
        let Some(lead) = red.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = red[lead].inv().unwrap();
        let row: Vec<Scalar> = red.iter().map(|x| x * &inv).collect();
        self.basis.push(v);
        self.reduced.push((lead, row));
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    /// Exact coordinates of `v` in the stored basis, if `v` lies in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.basis_matrix().solve(v)
    }

    /// Subspace equality.
    pub fn equals(&self, other: &Span) -> bool {
        self.dim() == other.dim() && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn is_subspace_of(&self, other: &Span) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }
}

/// Precomputed solver for repeated coordinate extraction against a fixed
/// full-column-rank basis matrix.
pub struct SpanSolver {
    dim: usize,
    transform: Mat, // T with T·B = [I; 0]
}

impl SpanSolver {
    pub fn new(span: &Span) -> Self {
        let b = span.basis_matrix();
        let n = b.nrows();
        let (r, pivots) = b.augment(&Mat::identity(n)).rref();
        // Independence of the basis puts the first dim pivots at columns
        // 0..dim; pivots further right live in the identity block.
        let b_pivots = pivots.iter().take_while(|&&p| p < span.dim()).count();
        assert_eq!(b_pivots, span.dim(), "basis must be independent");
        let transform = Mat::from_fn(n, n, |i, j| r[(i, span.dim() + j)].clone());
        SpanSolver {
            dim: span.dim(),
            transform,
        }
    }

    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let w = self.transform.apply(v);
        if w[self.dim..].iter().all(Scalar::is_zero) {
            Some(w[..self.dim].to_vec())
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::expand_weights;
    use crate::scalar::Rat;
    use proptest::prelude::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| s(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn char_poly_of_identity_2x2() {
        // (λ-1)² = λ² - 2λ + 1
        let p = Mat::identity(2).char_poly();
        assert_eq!(p.coeffs().to_vec(), vec![s(1), s(-2), s(1)]);
    }

    #[test]
    fn char_poly_of_zero_7x7() {
        let p = Mat::zeros(7, 7).char_poly();
        assert_eq!(p.degree(), Some(7));
        assert!(p.is_monic());
        assert!(p.coeffs()[..7].iter().all(Scalar::is_zero));
    }

    #[test]
    fn char_poly_matches_weight_expansion() {
        // Block rotation matrix with blocks of speeds 1, 2, 3 and a fixed axis
        // has characteristic polynomial λ(λ²+1)(λ²+4)(λ²+9).
        let mut m = Mat::zeros(7, 7);
        for (b, speed) in [(0, 1i64), (2, 2), (4, 3)] {
            m[(b, b + 1)] = s(-speed);
            m[(b + 1, b)] = s(speed);
        }
        assert_eq!(m.char_poly(), expand_weights(1, &[1, 1, 1]));
    }

    #[test]
    fn rank_kernel_solve() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
        let b = vec![s(6), s(12), s(2)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        assert!(m.solve(&[s(1), s(0), s(0)]).is_none());
    }

    #[test]
    fn det_and_minors() {
        let m = mat(&[&[2, 1], &[1, 3]]);
        assert_eq!(m.det(), s(5));
        assert_eq!(m.leading_principal_minors(), Some(vec![s(2), s(5)]));
        let neg = mat(&[&[-2, 1], &[1, -3]]);
        assert!(neg.is_negative_definite());
        assert!(!m.is_negative_definite());
    }

    #[test]
    fn signature_of_indefinite_form() {
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.symmetric_signature(), (1, 1, 0));
        let d = mat(&[&[3, 0, 0], &[0, -2, 0], &[0, 0, 0]]);
        assert_eq!(d.symmetric_signature(), (1, 1, 1));
    }

    #[test]
    fn span_membership_and_coords() {
        let mut sp = Span::new(3);
        assert!(sp.insert(vec![s(1), s(0), s(1)]));
        assert!(sp.insert(vec![s(0), s(2), s(0)]));
        assert!(!sp.insert(vec![s(2), s(2), s(2)]));
        assert_eq!(sp.dim(), 2);
        let c = sp.coords(&[s(3), s(4), s(3)]).unwrap();
        assert_eq!(c, vec![s(3), s(2)]);
        assert!(!sp.contains(&[s(0), s(0), s(1)]));

        let solver = SpanSolver::new(&sp);
        assert_eq!(
            solver.coords(&[s(3), s(4), s(3)]).unwrap(),
            vec![s(3), s(2)]
        );
        assert!(solver.coords(&[s(0), s(0), s(1)]).is_none());
    }

    fn arb_entry() -> impl Strategy<Value = Scalar> {
        (-4i64..=4, 1i64..=3, -2i64..=2).prop_map(|(n, d, r)| {
            Scalar::new(Rat::new(n.into(), d.into()), Rat::from_integer(r.into()))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Cayley–Hamilton: every matrix is a root of its characteristic polynomial.
        #[test]
        fn cayley_hamilton(entries in proptest::collection::vec(arb_entry(), 16)) {
            let m = Mat::from_fn(4, 4, |i, j| entries[4 * i + j].clone());
            let p = m.char_poly();
            prop_assert!(Mat::eval_poly(&p, &m).is_zero());
        }

        /// det is multiplicative on 3×3 matrices.
        #[test]
        fn det_multiplicative(xs in proptest::collection::vec(arb_entry(), 18)) {
            let a = Mat::from_fn(3, 3, |i, j| xs[3 * i + j].clone());
            let b = Mat::from_fn(3, 3, |i, j| xs[9 + 3 * i + j].clone());
            prop_assert_eq!((&a * &b).det(), a.det() * b.det());
        }
    }
}
