//! Exact computation of the standard basis of holomorphic differentials of
//! generalized Fermat curves over finite fields, the Cartier operator on it,
//! and the invariants it determines (a-number, p-rank, Hasse–Witt split).

pub mod basis;
pub mod cartier;
pub mod closedform;
pub mod curve;
pub mod error;
pub mod ff;
pub mod linalg;
pub mod polyrat;

pub use basis::{BasisIndex, DifferentialForm, StandardBasis};
pub use cartier::{cartier_apply, CartierMatrix, HwSplit};
pub use closedform::{Char2Image, HumbertInvariants};
pub use curve::{Curve, CurveSpec, FunctionFieldElement, ModuliMove};
pub use error::{Error, Result};
pub use ff::{ArithOp, Field, FieldElement, FieldSpec};
pub use linalg::Matrix;
pub use polyrat::{Polynomial, RationalFunction};
