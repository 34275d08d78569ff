//! Exact computations with multinets: multi-arrangements of lines in the
//! complex projective plane partitioned into blocks.
//!
//! The crate builds arrangements over cyclotomic fields Q(ζ_N) with
//! arbitrary-precision rational coefficients, verifies the two multinet
//! axioms, classifies weight and block structure, extracts Latin squares
//! from 3-nets, decides completeness through the Riemann–Hurwitz balance,
//! and constructs induced multinets by restricting the reflection
//! arrangement Q_n in P³ to a plane.
//!
//! There is no floating point anywhere in a verdict: every incidence is an
//! exact zero test in Q(ζ_N).

pub mod catalog;
pub mod completeness;
pub mod exactnum;
pub mod induce;
pub mod multinet;
pub mod projgeom;

pub use exactnum::{Cyclo, NumError, Rat};
pub use induce::{InducedResult, InducedType, TypeTag};
pub use multinet::{
    BaseAnalysis, BlockStructure, GroupSpec, LatinSquare, MultiLine, MultinetCandidate,
    MultinetError, VerificationReport, VerifiedMultinet, WeightClass,
};
pub use projgeom::{GeomError, Plane3, ProjLine, ProjPoint, Projectivity};

// The guide's code blocks run as doctests so the book stays in sync with
// the crate. `cargo test --doc` exercises every chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    pub struct ExactArithmetic;
    #[doc = include_str!("../../../book/src/projective-plane.md")]
    pub struct ProjectivePlane;
    #[doc = include_str!("../../../book/src/multinets.md")]
    pub struct Multinets;
    #[doc = include_str!("../../../book/src/latin-squares.md")]
    pub struct LatinSquares;
    #[doc = include_str!("../../../book/src/families.md")]
    pub struct Families;
    #[doc = include_str!("../../../book/src/completeness.md")]
    pub struct Completeness;
    #[doc = include_str!("../../../book/src/induced.md")]
    pub struct Induced;
    #[doc = include_str!("../../../book/src/command-line.md")]
    pub struct CommandLine;
}
