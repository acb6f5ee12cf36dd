//! The octonion division algebra 𝕆 over ℚ(√15).
//!
//! Coordinates are kept in the doubled-quaternion basis
//! `{1, i, j, k, l, il, jl, kl}` with 𝕆 = ℍ ⊕ ℍl. The multiplication table
//! is built twice — once from the seven-line index rules
//! `e_a e_{a+1} = e_{a+3}` (indices mod 7, `e_a² = -1`) through a fixed
//! signed dictionary, and once from the doubling relations
//!
//! ```text
//! p(ql) = (qp)l,   (ql)p = (q p̄)l,   (pl)(ql) = -q̄p
//! ```
//!
//! for quaternions p, q — and the two results are asserted identical before
//! the table is frozen. The dictionary is i = e₁, j = e₂, k = e₄, l = e₃,
//! il = e₇, jl = e₅, kl = -e₆.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::scalar::Scalar;

/// Basis names in storage order.
pub const BASIS_NAMES: [&str; 8] = ["1", "i", "j", "k", "l", "il", "jl", "kl"];

/// Indices of the imaginary basis inside 𝕆₀ = span{i,j,k,l,il,jl,kl}.
pub mod im_idx {
    pub const I: usize = 0;
    pub const J: usize = 1;
    pub const K: usize = 2;
    pub const L: usize = 3;
    pub const IL: usize = 4;
    pub const JL: usize = 5;
    pub const KL: usize = 6;
}

/// Signed single-element products: `basis[p] · basis[q] = sign · basis[idx]`.
struct Table {
    sign: [[i8; 8]; 8],
    idx: [[usize; 8]; 8],
}

/// Dictionary entry `basis[cd] = sign · e_{index}` (index 0 is the unit).
const DICT: [(i8, usize); 8] = [
    (1, 0),  // 1
    (1, 1),  // i
    (1, 2),  // j
    (1, 4),  // k
    (1, 3),  // l
    (1, 7),  // il
    (1, 5),  // jl
    (-1, 6), // kl
];

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(build_table)
}

fn build_table() -> Table {
    // --- description 1: the e-index rules ---
    let mut esign = [[0i8; 8]; 8];
    let mut eidx = [[0usize; 8]; 8];
    for a in 0..8 {
        esign[0][a] = 1;
        eidx[0][a] = a;
        esign[a][0] = 1;
        eidx[a][0] = a;
    }
    for a in 1..8 {
        esign[a][a] = -1;
        eidx[a][a] = 0;
    }
    // e_a e_{a+1} = e_{a+3} (mod 7) generates one oriented line per a; on a
    // line (a,b,c) the products are cyclic and anticommutative.
    for a in 1..=7usize {
        let b = a % 7 + 1;
        let c = (a + 2) % 7 + 1;
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            esign[x][y] = 1;
            eidx[x][y] = z;
            esign[y][x] = -1;
            eidx[y][x] = z;
        }
    }
    // inverse dictionary: e_index -> (sign, cd index)
    let mut inv = [(0i8, 0usize); 8];
    for (cd, &(s, e)) in DICT.iter().enumerate() {
        inv[e] = (s, cd);
    }
    let mut from_e = Table {
        sign: [[0; 8]; 8],
        idx: [[0; 8]; 8],
    };
    for p in 0..8 {
        for q in 0..8 {
            let (sp, ep) = DICT[p];
            let (sq, eq) = DICT[q];
            let (si, e) = (esign[ep][eq], eidx[ep][eq]);
            let (sb, cd) = inv[e];
            from_e.sign[p][q] = sp * sq * si * sb;
            from_e.idx[p][q] = cd;
        }
    }

    // --- description 2: doubling over the quaternions ---
    // quaternion table on {1, i, j, k}
    let mut qsign = [[1i8; 4]; 4];
    let mut qidx = [[0usize; 4]; 4];
    for a in 0..4 {
        qidx[0][a] = a;
        qidx[a][0] = a;
    }
    for a in 1..4 {
        qsign[a][a] = -1;
        qidx[a][a] = 0;
    }
    for (x, y, z) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        qsign[x][y] = 1;
        qidx[x][y] = z;
        qsign[y][x] = -1;
        qidx[y][x] = z;
    }
    let conj = |s: i8, a: usize| if a == 0 { (s, a) } else { (-s, a) };
    let mut from_cd = Table {
        sign: [[0; 8]; 8],
        idx: [[0; 8]; 8],
    };
    for p in 0..8 {
        for q in 0..8 {
            let (pa, pl) = (p % 4, p >= 4);
            let (qa, ql) = (q % 4, q >= 4);
            let (s, idx, il) = match (pl, ql) {
                (false, false) => (qsign[pa][qa], qidx[pa][qa], false),
                // p(ql) = (qp)l
                (false, true) => (qsign[qa][pa], qidx[qa][pa], true),
                // (pl)q = (p q̄)l
                (true, false) => {
                    let (sc, qc) = conj(1, qa);
                    (sc * qsign[pa][qc], qidx[pa][qc], true)
                }
                // (pl)(ql) = -q̄p
                (true, true) => {
                    let (sc, qc) = conj(-1, qa);
                    (sc * qsign[qc][pa], qidx[qc][pa], false)
                }
            };
            from_cd.sign[p][q] = s;
            from_cd.idx[p][q] = if il { idx + 4 } else { idx };
        }
    }

    // The two descriptions must agree entry by entry.
    for p in 0..8 {
        for q in 0..8 {
            assert_eq!(
                (from_e.sign[p][q], from_e.idx[p][q]),
                (from_cd.sign[p][q], from_cd.idx[p][q]),
                "multiplication table mismatch at ({p},{q})"
            );
        }
    }
    from_e
}

/// An octonion, with coordinates in the basis `{1,i,j,k,l,il,jl,kl}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Octonion {
    c: [Scalar; 8],
}

impl Octonion {
    pub fn zero() -> Self {
        Octonion {
            c: std::array::from_fn(|_| Scalar::zero()),
        }
    }

    pub fn one() -> Self {
        Octonion::unit(0)
    }

    /// The basis element with the given storage index (0 = 1, 1 = i, ...).
    pub fn unit(idx: usize) -> Self {
        let mut o = Octonion::zero();
        o.c[idx] = Scalar::one();
        o
    }

    pub fn i() -> Self {
        Octonion::unit(1)
    }
    pub fn j() -> Self {
        Octonion::unit(2)
    }
    pub fn k() -> Self {
        Octonion::unit(3)
    }
    pub fn l() -> Self {
        Octonion::unit(4)
    }
    pub fn il() -> Self {
        Octonion::unit(5)
    }
    pub fn jl() -> Self {
        Octonion::unit(6)
    }
    pub fn kl() -> Self {
        Octonion::unit(7)
    }

    /// The basis element `e_a` of the index description, 1 ≤ a ≤ 7.
    pub fn e(a: usize) -> Self {
        assert!((1..=7).contains(&a));
        let (cd, sign) = Self::e_to_cd(a);
        let mut o = Octonion::zero();
        o.c[cd] = Scalar::from_int(sign as i64);
        o
    }

    fn e_to_cd(a: usize) -> (usize, i8) {
        for (cd, &(s, e)) in DICT.iter().enumerate() {
            if e == a {
                return (cd, s);
            }
        }
        unreachable!()
    }

    pub fn from_coords(c: [Scalar; 8]) -> Self {
        Octonion { c }
    }

    pub fn coords(&self) -> &[Scalar; 8] {
        &self.c
    }

    pub fn coord(&self, idx: usize) -> &Scalar {
        &self.c[idx]
    }

    pub fn real_part(&self) -> &Scalar {
        &self.c[0]
    }

    pub fn scale(&self, f: &Scalar) -> Self {
        Octonion {
            c: std::array::from_fn(|i| &self.c[i] * f),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Conjugate `x̄ = 2·Re(x)·1 - x`.
    pub fn conj(&self) -> Self {
        let mut c: [Scalar; 8] = std::array::from_fn(|i| -&self.c[i]);
        c[0] = -&c[0];
        Octonion { c }
    }

    /// Trace `t(x) = x + x̄`.
    pub fn trace(&self) -> Scalar {
        &self.c[0] + &self.c[0]
    }

    /// Norm `n(x) = x x̄ = Σ coordᵢ²`.
    pub fn norm(&self) -> Scalar {
        let mut n = Scalar::zero();
        for x in &self.c {
            n += &(x * x);
        }
        n
    }

    /// Polar form `n(x,y) = ½(n(x+y) - n(x) - n(y)) = Σ xᵢyᵢ`.
    pub fn polar(x: &Octonion, y: &Octonion) -> Scalar {
        let mut n = Scalar::zero();
        for (a, b) in x.c.iter().zip(&y.c) {
            n += &(a * b);
        }
        n
    }

    /// Commutator `[x, y] = xy - yx`.
    pub fn bracket(x: &Octonion, y: &Octonion) -> Octonion {
        &(x * y) - &(y * x)
    }

    /// Associator `(x, y, z) = (xy)z - x(yz)`.
    pub fn associator(x: &Octonion, y: &Octonion, z: &Octonion) -> Octonion {
        &(&(x * y) * z) - &(x * &(y * z))
    }

    /// The imaginary part as an element of 𝕆₀, if the real part vanishes.
    pub fn im(&self) -> Option<ImOctonion> {
        if self.c[0].is_zero() {
            Some(ImOctonion {
                c: std::array::from_fn(|i| self.c[i + 1].clone()),
            })
        } else {
            None
        }
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion {
            c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]),
        }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion {
            c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]),
        }
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion {
            c: std::array::from_fn(|i| -&self.c[i]),
        }
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        let t = table();
        let mut out = Octonion::zero();
        for p in 0..8 {
            if self.c[p].is_zero() {
                continue;
            }
            for q in 0..8 {
                if rhs.c[q].is_zero() {
                    continue;
                }
                let prod = &self.c[p] * &rhs.c[q];
                let target = &mut out.c[t.idx[p][q]];
                if t.sign[p][q] == 1 {
                    *target += &prod;
                } else {
                    *target -= &prod;
                }
            }
        }
        out
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let negative = x.sign() < 0;
            let magnitude = if negative { -x } else { x.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if i == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", BASIS_NAMES[i])?;
            } else {
                let text = magnitude.to_string();
                if text.contains([' ', '/', '\u{221a}']) {
                    write!(f, "({text}){}", BASIS_NAMES[i])?;
                } else {
                    write!(f, "{text}{}", BASIS_NAMES[i])?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A trace-zero octonion, i.e. an element of 𝕆₀ ≅ ℚ(√15)⁷, with coordinates
/// in the basis `(i, j, k, l, il, jl, kl)`.
#[derive(Clone, PartialEq, Eq)]
pub struct ImOctonion {
    c: [Scalar; 7],
}

impl ImOctonion {
    pub fn zero() -> Self {
        ImOctonion {
            c: std::array::from_fn(|_| Scalar::zero()),
        }
    }

    pub fn unit(idx: usize) -> Self {
        let mut v = ImOctonion::zero();
        v.c[idx] = Scalar::one();
        v
    }

    pub fn basis() -> [ImOctonion; 7] {
        std::array::from_fn(ImOctonion::unit)
    }

    pub fn from_coords(c: [Scalar; 7]) -> Self {
        ImOctonion { c }
    }

    pub fn from_slice(c: &[Scalar]) -> Self {
        assert_eq!(c.len(), 7);
        ImOctonion {
            c: std::array::from_fn(|i| c[i].clone()),
        }
    }

    pub fn coords(&self) -> &[Scalar; 7] {
        &self.c
    }

    pub fn coord(&self, idx: usize) -> &Scalar {
        &self.c[idx]
    }

    pub fn embed(&self) -> Octonion {
        let mut o = Octonion::zero();
        for i in 0..7 {
            o.c[i + 1] = self.c[i].clone();
        }
        o
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, f: &Scalar) -> Self {
        ImOctonion {
            c: std::array::from_fn(|i| &self.c[i] * f),
        }
    }

    pub fn norm(&self) -> Scalar {
        let mut n = Scalar::zero();
        for x in &self.c {
            n += &(x * x);
        }
        n
    }

    pub fn polar(x: &ImOctonion, y: &ImOctonion) -> Scalar {
        let mut n = Scalar::zero();
        for (a, b) in x.c.iter().zip(&y.c) {
            n += &(a * b);
        }
        n
    }

    /// True iff the element lies in ℍ₀ = span{i,j,k}.
    pub fn is_quaternionic(&self) -> bool {
        self.c[3..].iter().all(Scalar::is_zero)
    }

    /// True iff the element lies in ℍl = span{l,il,jl,kl}.
    pub fn is_l_half(&self) -> bool {
        self.c[..3].iter().all(Scalar::is_zero)
    }
}

impl Add for &ImOctonion {
    type Output = ImOctonion;
    fn add(self, rhs: &ImOctonion) -> ImOctonion {
        ImOctonion {
            c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]),
        }
    }
}

impl Sub for &ImOctonion {
    type Output = ImOctonion;
    fn sub(self, rhs: &ImOctonion) -> ImOctonion {
        ImOctonion {
            c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]),
        }
    }
}

impl Neg for &ImOctonion {
    type Output = ImOctonion;
    fn neg(self) -> ImOctonion {
        ImOctonion {
            c: std::array::from_fn(|i| -&self.c[i]),
        }
    }
}

impl fmt::Display for ImOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.embed())
    }
}

impl fmt::Debug for ImOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cross product `x × y = pr₀(xy) = xy - ½t(xy)·1` on 𝕆₀.
pub fn cross(x: &ImOctonion, y: &ImOctonion) -> ImOctonion {
    let mut p = &x.embed() * &y.embed();
    p.c[0] = Scalar::zero();
    p.im().unwrap()
}

/// The associative calibration `Ω(x,y,z) = n(x, y×z)`.
pub fn omega(x: &ImOctonion, y: &ImOctonion, z: &ImOctonion) -> Scalar {
    ImOctonion::polar(x, &cross(y, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn index_rule_products() {
        // e₁e₂ = e₄ and the cyclic rules on that line.
        assert_eq!(&Octonion::e(1) * &Octonion::e(2), Octonion::e(4));
        assert_eq!(&Octonion::e(2) * &Octonion::e(4), Octonion::e(1));
        assert_eq!(&Octonion::e(4) * &Octonion::e(1), Octonion::e(2));
        for a in 1..=7 {
            assert_eq!(&Octonion::e(a) * &Octonion::e(a), (&Octonion::one()).neg());
        }
    }

    #[test]
    fn doubled_basis_products() {
        // (jl)(il) = (ī)j with a sign: -(ī)j = ij = k.
        assert_eq!(&Octonion::jl() * &Octonion::il(), Octonion::k());
        assert_eq!(&Octonion::i() * &Octonion::l(), Octonion::il());
        assert_eq!(&Octonion::i() * &Octonion::jl(), (&Octonion::kl()).neg());
        assert_eq!(&Octonion::one() * &Octonion::jl(), Octonion::jl());
    }

    #[test]
    fn conjugation_trace_norm() {
        let x = &Octonion::one() + &Octonion::i();
        let (c, t, n) = (x.conj(), x.trace(), x.norm());
        assert_eq!(c, &Octonion::one() - &Octonion::i());
        assert_eq!(t, s(2));
        assert_eq!(n, s(2));
        // quadratic relation x² - t(x)x + n(x) = 0
        let q = &(&(&x * &x) - &x.scale(&t)) + &Octonion::one().scale(&n);
        assert!(q.is_zero());
        let y = Octonion::i();
        assert_eq!(y.conj(), (&Octonion::i()).neg());
        assert_eq!(y.trace(), s(0));
        assert_eq!(y.norm(), s(1));
    }

    #[test]
    fn associator_values() {
        let (i, j, k, l) = (Octonion::i(), Octonion::j(), Octonion::k(), Octonion::l());
        // (i, j, l) = 2kl, while the quaternion triple associates.
        assert_eq!(
            Octonion::associator(&i, &j, &l),
            Octonion::kl().scale(&s(2))
        );
        assert!(Octonion::associator(&i, &j, &k).is_zero());
        assert!(Octonion::associator(&i, &i, &l).is_zero());
    }

    #[test]
    fn alternativity_on_basis() {
        for p in 0..8 {
            let x = Octonion::unit(p);
            for q in 0..8 {
                let y = Octonion::unit(q);
                assert!(Octonion::associator(&x, &x, &y).is_zero());
                assert!(Octonion::associator(&x, &y, &y).is_zero());
                assert!(Octonion::associator(&x, &y, &x).is_zero());
            }
        }
    }

    #[test]
    fn cross_product_values() {
        let b = ImOctonion::basis();
        let (i, j, k) = (&b[im_idx::I], &b[im_idx::J], &b[im_idx::K]);
        assert_eq!(cross(i, j), *k);
        assert!(cross(i, i).is_zero());
        // orthogonality of x×y to both arguments, and the Gram identity
        for x in &b {
            for y in &b {
                let c = cross(x, y);
                assert!(ImOctonion::polar(&c, x).is_zero());
                assert!(ImOctonion::polar(&c, y).is_zero());
                let gram = &(&x.norm() * &y.norm())
                    - &(&ImOctonion::polar(x, y) * &ImOctonion::polar(x, y));
                assert_eq!(c.norm(), gram);
            }
        }
    }

    #[test]
    fn double_cross_and_exchange_rules() {
        let b = ImOctonion::basis();
        // X×(X×Y) = -n(X)·Y for X ⊥ Y, and X×(Y×Z) = -Y×(X×Z) for
        // pairwise-orthogonal arguments; basis triples are orthogonal.
        for x in &b {
            for y in &b {
                if x == y {
                    continue;
                }
                let lhs = cross(x, &cross(x, y));
                assert_eq!(lhs, y.scale(&-x.norm()));
            }
        }
        for a in 0..7 {
            for b_ in 0..7 {
                for c in 0..7 {
                    if a == b_ || b_ == c || a == c {
                        continue;
                    }
                    let (x, y, z) = (
                        ImOctonion::unit(a),
                        ImOctonion::unit(b_),
                        ImOctonion::unit(c),
                    );
                    let lhs = cross(&x, &cross(&y, &z));
                    let rhs = (&cross(&y, &cross(&x, &z))).neg();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn omega_values() {
        let b = ImOctonion::basis();
        assert_eq!(omega(&b[im_idx::I], &b[im_idx::J], &b[im_idx::K]), s(1));
        assert_eq!(omega(&b[im_idx::I], &b[im_idx::J], &b[im_idx::L]), s(0));
        // alternating
        for x in &b {
            for y in &b {
                assert!(omega(x, x, y).is_zero());
                assert!(omega(x, y, x).is_zero());
                assert!(omega(x, y, y).is_zero());
            }
        }
    }

    fn arb_oct() -> impl Strategy<Value = Octonion> {
        proptest::collection::vec(-3i64..=3, 8)
            .prop_map(|v| Octonion::from_coords(std::array::from_fn(|i| s(v[i]))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// The norm is multiplicative: n(xy) = n(x)n(y).
        #[test]
        fn norm_multiplicative(x in arb_oct(), y in arb_oct()) {
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        }

        /// The polar form is the standard inner product and x² = t(x)x - n(x).
        #[test]
        fn quadratic_relation(x in arb_oct()) {
            let q = &(&(&x * &x) - &x.scale(&x.trace())) + &Octonion::one().scale(&x.norm());
            prop_assert!(q.is_zero());
        }

        /// Alternativity on random elements.
        #[test]
        fn alternative_law(x in arb_oct(), y in arb_oct()) {
            prop_assert!(Octonion::associator(&x, &x, &y).is_zero());
            prop_assert!(Octonion::associator(&y, &x, &x).is_zero());
        }
    }
}
