//! Exact symbolic checks for real-algebraic submanifolds of complex space.

pub mod error;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod order;
pub mod parametric;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod manifold;
pub mod segre;
pub mod minimality;
pub mod discs;
pub mod fixtures;
pub mod theorem;
pub mod manifold_file;
pub mod report;
