//! Symmetric functions over Q(q, t) in the classical bases, with the Hall
//! inner product, the involution omega and plethystic substitutions.

pub mod bisymf;
pub mod partition;
pub mod symf;
pub mod tables;

pub use bisymf::BiSymF;
pub use partition::{Composition, Partition};
pub use symf::{degree_cap, rect_principal, set_degree_cap, SymF};
pub use tables::{character, tables, Basis};
