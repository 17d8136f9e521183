//! Exact arithmetic for the two-parameter polynomial family
//! `P_n^(alpha,beta)` defined by
//!
//! ```text
//! sum_n P_n(x) t^n / n! = (1 - t)^alpha exp(x ((1 - t)^beta - 1))
//! ```
//!
//! and its coefficient triangle of generalized Stirling numbers
//! `S_{alpha,beta}(n, k)`.
//!
//! The math is generic over [`Scalar`]; the crate root re-exports the exact
//! rational instantiations used by every verification routine.

pub mod checks;
pub mod error;
pub mod family;
pub mod operator;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod stirling;
pub mod zeros;

pub use error::{Error, Result};
pub use family::FamilyParams;
pub use operator::ExpMonomialSum;
pub use poly::Polynomial;
pub use scalar::{format_rational, parse_rational, Rational, Scalar};
pub use series::XSeries;
pub use stirling::StirlingTable;
pub use zeros::{RegionReport, SturmChain};

pub type QPolynomial = Polynomial<Rational>;
pub type QXSeries = XSeries<Rational>;
pub type GStirlingTable = StirlingTable<Rational>;
pub type QFamilyParams = FamilyParams<Rational>;
pub type QExpMonomialSum = ExpMonomialSum<Rational>;
pub type QRegionReport = RegionReport<Rational>;

pub type FPolynomial = Polynomial<f64>;
pub type FXSeries = XSeries<f64>;
pub type FStirlingTable = StirlingTable<f64>;
