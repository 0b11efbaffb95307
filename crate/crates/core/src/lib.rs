//! Exact symbolic computations with triangular right coideal subalgebras
//! of `U_q(sl_n)` and the Weyl group combinatorics behind them.

pub mod coeff;
pub mod borel;
pub mod coideal;
pub mod rootsys;
pub mod uqalg;
pub mod selftest;
pub mod weylsupp;
pub mod error;

pub use coeff::{LaurentPoly, RationalFunction, Scalar, SymbolicScalar};
pub use error::{Error, Result};
pub use rootsys::{CartanType, Root, RootSystem, WeylElement, WeylWord};
pub use uqalg::{Elem, Element, Mono, SymElem, UqAlgebra};
