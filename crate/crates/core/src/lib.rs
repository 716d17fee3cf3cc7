//! Multi-type analysis of monotone modal logic and conditional logic.
//!
//! The crate provides, over finite frames throughout:
//!
//! - sorted abstract syntax for the single-type languages (`nabla`, `>`)
//!   and the two-sorted languages they embed into ([`syntax`]);
//! - the embedding translations and the axiom table ([`translation`]);
//! - neighbourhood/conditional/two-sorted frame semantics, including the
//!   `star`/`unstar` constructions and supportedness ([`semantics`]);
//! - executable first-order frame conditions and exhaustive frame
//!   enumeration for brute-force correspondence checking
//!   ([`correspondence`], [`enumerate`]);
//! - signed generation trees and the analytic-inductive classifier
//!   ([`classify`]);
//! - the display calculi D.MTnabla and D.MT> with a schema matcher, proof
//!   checker, bounded backward proof search, and a semantic rule-soundness
//!   harness ([`calculus`]);
//! - an s-expression text format for everything ([`sexp`], [`text`]).

pub mod calculus;
pub mod classify;
pub mod correspondence;
pub mod corpus;
pub mod enumerate;
pub mod frames;
pub mod relops;
pub mod semantics;
pub mod sexp;
pub mod symbol;
pub mod syntax;
pub mod text;
pub mod translation;

pub use frames::{CFrame, FrameKind, NFrame, TwoSortedFrame};
pub use semantics::SingleFrame;
pub use symbol::Symbol;
pub use syntax::{Inequality, MTFormula, STFormula, Sort};
