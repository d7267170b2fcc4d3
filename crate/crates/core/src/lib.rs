//! Fuzzy relational calculus over residuated lattices.
//!
//! - [`lattice`]: truth-value algebras (built-in t-norms and finite tables).
//! - [`relation`]: finite fuzzy relations and their compositions, the
//!   associative circle product and the BK-products (sub, super, square).
//! - [`morphism`]: compatibility checkers and greatest-solution solvers for
//!   generalized morphisms.
//! - [`search`]: exhaustive small-instance verification and counterexample
//!   search.

pub mod lattice;
pub mod morphism;
pub mod relation;
pub mod search;
