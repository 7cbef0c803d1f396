//! Gröbner bases of Rees algebras and symmetric algebras, the x-condition,
//! linear quotients of powers, and the graph families whose defining ideals
//! have explicit quadratic Gröbner bases.

pub mod ring;
pub mod groebner;
pub mod betti;
pub mod rees;
pub mod graphs;
pub mod families;
pub mod symalg;
