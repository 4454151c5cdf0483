//! Exact arithmetic tower shared by every other module: rationals, Gaussian
//! rationals, polynomials in the symbol `p` (= 2π), quasi-trigonometric
//! polynomials in the deformation parameter, and multivariate coordinate
//! polynomials.

pub mod coord;
pub mod gauss;
pub mod pipoly;
pub mod rational;
pub mod trig;

pub use coord::CoordPoly;
pub use gauss::GaussRational;
pub use pipoly::PiPoly;
pub use rational::Rational;
pub use trig::{TrigKey, TrigKind, TrigPoly};
