//! Dense univariate polynomials over ℚ(√15), plus the one factorization
//! pattern the weight machinery needs: `λ^m0 · ∏ (λ² + k²)^mk`.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: the vector is empty for the zero polynomial and otherwise the
//! last coefficient is nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `c·λ^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    /// λ itself.
    pub fn lambda() -> Self {
        UniPoly::monomial(Scalar::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact Euclidean division; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lead_inv;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let t = &factor * c;
                rem[k + i] = &rem[k + i] - &t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot[k] = factor;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Multiplicity of the root 0, i.e. the number of trailing λ factors.
    pub fn lambda_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        UniPoly::new(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        UniPoly::new(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "\u{3bb}")?,
                1 => write!(f, "({c})\u{3bb}")?,
                _ if c.is_one() => write!(f, "\u{3bb}^{k}")?,
                _ => write!(f, "({c})\u{3bb}^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Largest weight that can occur in this crate's decompositions (the
/// adjoint module under a principal triple reaches V(10)).
pub const DEFAULT_KMAX: usize = 10;

/// `λ² + k²` for an integer weight `k`.
pub fn weight_factor(k: i64) -> UniPoly {
    UniPoly::new(vec![Scalar::from_int(k * k), Scalar::zero(), Scalar::one()])
}

/// Expands `λ^m0 · ∏_{k} (λ²+k²)^{m[k-1]}`.
pub fn expand_weights(m0: usize, multiplicities: &[usize]) -> UniPoly {
    let mut p = UniPoly::monomial(Scalar::one(), m0);
    for (i, &m) in multiplicities.iter().enumerate() {
        let f = weight_factor(i as i64 + 1);
        for _ in 0..m {
            p = &p * &f;
        }
    }
    p
}

/// Writes `p = λ^m0 · ∏_{k=1..=kmax} (λ²+k²)^{m_k}` by exact trial division.
///
/// Returns `(m0, [m_1, ..., m_kmax])`, or [`Error::NotCompactWeights`] if a
/// nontrivial factor remains.
pub fn factor_weights(p: &UniPoly, kmax: usize) -> Result<(usize, Vec<usize>)> {
    if p.is_zero() {
        return Err(Error::NotCompactWeights);
    }
    let m0 = p.lambda_multiplicity();
    let mut rest = {
        let coeffs = p.coeffs()[m0..].to_vec();
        UniPoly::new(coeffs)
    };
    let mut multiplicities = vec![0usize; kmax];
    for k in 1..=kmax {
        let f = weight_factor(k as i64);
        loop {
            let (q, r) = rest.divrem(&f);
            if r.is_zero() {
                multiplicities[k - 1] += 1;
                rest = q;
            } else {
                break;
            }
        }
    }
    if rest.degree() != Some(0) {
        return Err(Error::NotCompactWeights);
    }
    Ok((m0, multiplicities))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factor_weights_spectrum_0_1_2_3() {
        // λ(λ²+1)(λ²+4)(λ²+9) = λ⁷ + 14λ⁵ + 49λ³ + 36λ
        let p = expand_weights(1, &[1, 1, 1]);
        assert_eq!(
            p.coeffs()
                .iter()
                .map(|c| c.rational_part().to_string())
                .collect::<Vec<_>>(),
            ["0", "36", "0", "49", "0", "14", "0", "1"]
        );
        let (m0, ms) = factor_weights(&p, 10).unwrap();
        assert_eq!(m0, 1);
        assert_eq!(&ms[..3], &[1, 1, 1]);
        assert!(ms[3..].iter().all(|&m| m == 0));
    }

    #[test]
    fn factor_weights_pure_lambda() {
        let p = UniPoly::monomial(Scalar::one(), 7);
        let (m0, ms) = factor_weights(&p, 10).unwrap();
        assert_eq!(m0, 7);
        assert!(ms.iter().all(|&m| m == 0));
    }

    #[test]
    fn factor_weights_rejects_foreign_factor() {
        // λ² + 2 is irreducible and not of the admitted shape.
        let p = UniPoly::new(vec![Scalar::from_int(2), Scalar::zero(), Scalar::one()]);
        assert_eq!(factor_weights(&p, 10), Err(Error::NotCompactWeights));
    }

    #[test]
    fn evaluation() {
        // λ(λ²+4) at 1, -2 and √15
        let p = expand_weights(1, &[0, 1]);
        assert_eq!(p.eval(&Scalar::from_int(1)), Scalar::from_int(5));
        assert_eq!(p.eval(&Scalar::from_int(-2)), Scalar::from_int(-16));
        assert_eq!(p.eval(&Scalar::sqrt15()), Scalar::sqrt15_ratio(19, 1));
    }

    #[test]
    fn divrem_is_exact() {
        let f = weight_factor(2);
        let g = weight_factor(3);
        let p = &f * &g;
        let (q, r) = p.divrem(&f);
        assert!(r.is_zero());
        assert_eq!(q, g);
    }

    proptest! {
        /// Expanding and re-factoring is the identity on weight data.
        #[test]
        fn factor_inverts_expand(m0 in 0usize..3, ms in proptest::collection::vec(0usize..3, 4)) {
            let p = expand_weights(m0, &ms);
            let (n0, ns) = factor_weights(&p, 10).unwrap();
            prop_assert_eq!(n0, m0);
            prop_assert_eq!(&ns[..4], &ms[..]);
            prop_assert!(ns[4..].iter().all(|&m| m == 0));
        }
    }
}
