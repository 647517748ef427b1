//! Exact computation of generalized exponents `E(V_lambda)` for first-layer
//! representations of type `A_n`.
//!
//! Weights are integer vectors of length `n + 1` summing to zero. A weight is
//! first layer when its smallest coordinate is at least `-1`; the dominant
//! ones correspond to partitions of `n + 1` via `lambda + 1`.
//!
//! ```
//! use genexp::{exponents, Method, Weight};
//!
//! let theta = Weight::theta(3);
//! let e = exponents(&theta, Method::Tableaux, 5).unwrap();
//! assert_eq!(e.to_string(), "t + t^2 + t^3");
//! ```

pub mod error;
pub mod exponents;
pub mod fourier;
pub mod laurent;
pub mod quasisym;
pub mod tableaux;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use exponents::{exponents, full_report, ExponentReport, Method, DEFAULT_HP_CAP};
pub use fourier::{c_closed_form, solve_system, WeightFunction};
pub use laurent::LaurentPolynomial;
pub use quasisym::{HeightSet, QuasiDominantWeight};
pub use tableaux::{Composition, IndexSet, Partition, StandardTableau};
pub use weights::Weight;
