//! Exact construction of the compact exceptional Lie algebra g₂ as the
//! derivation algebra of the octonions, together with its reductive
//! subalgebras, their module decompositions, the transvection model of the
//! split form, and the geometric predicates behind the G₂-homogeneous spaces.
//!
//! Everything is computed over ℚ or the quadratic extension ℚ(√15); there is
//! no floating point anywhere, so every verified identity holds exactly.
//!
//! The `examples/` directory contains one runnable tour per capability; the
//! `g2forge` binary drives the machine-checkable verification suite.

pub mod g2;
pub mod homogeneous;
pub mod matrix;
pub mod octonion;
pub mod poly;
pub mod report;
pub mod repr;
pub mod scalar;
pub mod subalgebras;
pub mod transvection;

pub use scalar::{Rat, Scalar};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::g2::G2;
    use crate::subalgebras::{self, Subalgebra};
    use std::sync::OnceLock;

    pub fn g2() -> &'static G2 {
        static CELL: OnceLock<G2> = OnceLock::new();
        CELL.get_or_init(|| G2::build().expect("derivation algebra builds"))
    }

    pub fn subs() -> &'static [Subalgebra] {
        static CELL: OnceLock<Vec<Subalgebra>> = OnceLock::new();
        CELL.get_or_init(|| subalgebras::build_all(g2()).expect("subalgebras build"))
    }
}

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero in Q(\u{221a}15)")]
    DivisionByZero,
    #[error("polynomial is not a product of \u{3bb} and \u{3bb}\u{b2}+k\u{b2} factors")]
    NotCompactWeights,
    #[error("expected {expected} independent elements, found {found}")]
    RankDeficiency { expected: usize, found: usize },
    #[error("element is not an imaginary quaternion")]
    NotImaginaryQuaternion,
    #[error("span is not closed under the bracket")]
    NotBracketClosed,
    #[error("element does not lie in the algebra span")]
    NotInSpan,
    #[error("explicit presentation does not match the constraint solution for {0}")]
    PresentationMismatch(String),
    #[error("no generator with adjoint spectrum {{0, \u{b1}2i}} found")]
    NoNormalizedElement,
    #[error("weight multiplicities do not peel into irreducible summands")]
    InconsistentWeights,
    #[error("singular Cartan matrix")]
    SingularCartan,
    #[error("binary-ternary axiom ({axiom}) fails at basis tuple {witness}")]
    LyAxiom { axiom: u8, witness: String },
    #[error("transvection order {q} out of range for degrees {n} and {m}")]
    TransvectionRange { q: usize, n: usize, m: usize },
    #[error("binary form has the wrong degree")]
    DegreeMismatch,
    #[error("the 3-form does not vanish on the subspace")]
    NotCoassociative,
    #[error("compatibility scalar is not \u{b1}1")]
    AlphaNotUnit,
    #[error("point fails the {0} membership predicate")]
    NotInModel(&'static str),
    #[error("frame is not orthonormal")]
    NotOrthonormal,
    #[error("map is not an algebra automorphism")]
    NotAutomorphism,
    #[error("derivation does not swap the two quaternion halves")]
    NotOddDerivation,
    #[error("triple is not a Cayley triple")]
    NotCayleyTriple,
    #[error("basis does not span a four-dimensional subalgebra")]
    NotQuaternionSubalgebra,
    #[error("complement is not invariant under the subalgebra")]
    NotInvariant,
    #[error("unknown subalgebra label `{0}`")]
    UnknownLabel(String),
    #[error("subalgebra is not three-dimensional")]
    NotThreeDimensional,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
