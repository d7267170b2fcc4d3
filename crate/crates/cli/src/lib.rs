//! Command-line front end for `bkrel-core`: an expression language over
//! named relations, morphism checks and solvers, lattice validation and
//! counterexample searches.

pub mod app;
pub mod eval;
pub mod expr;
