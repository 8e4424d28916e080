//! Graded polynomial identities of small Lie algebras over finite fields.

pub mod algebra;
pub mod dsl;
pub mod engine;
pub mod freelie;
pub mod field;
pub mod linalg;
