//! Brute-force finite-group oracle.

pub mod field;
pub mod group;
pub mod spec;

pub use field::{Field, FieldElem};
pub use group::{ClassCount, ConcreteGroup, Elem, SylowClass, SylowReport, ENUMERATION_BUDGET};
pub use spec::{Decoration, Family, GroupSpec};
