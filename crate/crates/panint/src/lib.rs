//! Exact computation and verification of integrals with respect to monotone
//! (non-additive) measures on finite spaces.
//!
//! The engine computes the (+,*)-pan-integral (nonnegative and signed), the
//! Choquet integrals, and the concave integral, each backed by an
//! independent brute-force oracle, in either exact rational or binary64
//! arithmetic. On top of that sit the L^p norm machinery for the
//! pan-integral and randomized verification suites for the algebraic laws
//! these integrals satisfy (or provably fail) depending on the structure of
//! the measure.

pub mod capacity;
pub mod choquet;
pub mod concave;
pub mod error;
pub mod fixtures;
pub mod function;
pub mod generate;
pub mod json;
pub mod lp;
pub mod lp_space;
pub mod pan;
pub mod report;
pub mod space;
pub mod value;
pub mod verify;

pub use capacity::{validate_capacity, Capacity, PropertyReport};
pub use error::{Error, Result};
pub use function::RealFunction;
pub use generate::{gen_capacity, Family};
pub use space::{FiniteSpace, SubsetIndex};
pub use value::{Mode, Value};
