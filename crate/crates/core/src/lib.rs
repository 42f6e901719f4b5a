//! Labelled parallelogram polyominoes, their symmetric-function generating
//! functions, and the Macdonald-operator identities they satisfy.

pub mod algebra;
pub mod characters;
pub mod error;
pub mod identities;
pub mod macdonald;
pub mod polyomino;
pub mod sl2;
pub mod symfunc;

pub use algebra::{QTPoly, QTRat};
pub use error::{Error, Result};
pub use symfunc::{BiSymF, Composition, Partition, SymF};
