//! Exact computations for finite-dimensional bound-quiver algebras: Ext
//! algebras with their A-infinity structure, Koszul-dual reconstruction,
//! quasi-hereditary structures and exact Borel subalgebra data.

// Index loops mirror the matrix and multiplicity formulas.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod field;
pub mod matrix;
pub mod par;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use par::Execution;
pub mod quiver;
pub mod algebra;

pub use algebra::{Algebra, Elem, Presentation};
pub use quiver::{Path, Quiver, Relation};
pub mod module;

pub use module::{hom_space, Module, ModuleMap, Subspace};
pub mod resolution;
pub mod dg;
pub mod ext;
pub mod ainf;
pub mod pipeline;
pub mod qh;
pub mod corpus;
pub mod parse;
