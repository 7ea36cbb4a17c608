//! Exact-arithmetic building blocks for two related computations:
//!
//! * the ring of noncommutative symmetric functions `NSymm = Z<Z_1, Z_2, ...>`
//!   with the coproduct defined by the residue
//!   `Delta Z(t) = res_{u=0} Z(u) (x) (u - Z(t))^{-1}`, its antipode, and the
//!   substitution `z -> c + sum Z_i c^{i+1}`;
//! * composition-indexed characteristic numbers of omnioriented quasitoric
//!   manifolds, read off from integral quotients of Stanley-Reisner face rings.
//!
//! The crate is `no_std` and only needs `alloc`. All coefficients are
//! arbitrary-precision integers.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod composition;
mod error;
pub mod hopf;
pub mod linalg;
pub mod quasitoric;
pub mod series;

pub use algebra::{FreeAlgebra, NSymm, QSymm, QSymmTensor, Tensor, Tensor3, Word};
pub use composition::{compositions_of, Composition};
pub use error::Error;
pub use num_bigint::BigInt;

pub type Result<T> = core::result::Result<T, Error>;
