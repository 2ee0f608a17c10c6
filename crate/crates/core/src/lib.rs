//! Exact computations for the Artinian Gorenstein algebra `A = T / Ann(f)`
//! of a CW-Nagata polynomial `f = sum_r x_r^d1 g_r`.
//!
//! * [`face`]: the divisor-closed family of the `g_r` and its counts.
//! * [`hilbert`]: the bigraded Hilbert table by skeleton counting.
//! * [`annihilator`]: explicit generators of `Ann(f)` and their minimalization.
//! * [`oracle`]: catalecticant ranks and kernels, the brute-force ground truth.
//! * [`lefschetz`]: weak/strong Lefschetz rank checks and Hessian ranks.

pub mod annihilator;
pub mod error;
pub mod face;
pub mod fixtures;
pub mod hilbert;
pub mod lefschetz;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod sample;

pub use annihilator::{Generator, GeneratorSet, Item};
pub use error::{Error, InputError, MonomialError};
pub use face::{FaceModel, NagataInput};
pub use hilbert::BigradedTable;
pub use monomial::{BiMonomial, Monomial, PairingAction, UMonomial};
