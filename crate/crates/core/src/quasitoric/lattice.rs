use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::data::QuasitoricData;
use crate::error::{argument, Error};
use crate::linalg::{integer_kernel, smith, IntMatrix};

/// Integer kernel of `Lambda: Z^F -> Z^m`, one Hermite-reduced basis vector
/// per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelLattice {
    pub basis: IntMatrix,
    pub rank: usize,
}

impl KernelLattice {
    /// `Lambda * row = 0` for every basis row.
    pub fn annihilated_by(&self, lambda: &IntMatrix) -> bool {
        self.basis.row_vecs().iter().all(|row| lambda.apply(row).iter().all(Zero::is_zero))
    }
}

/// Requires `Lambda` to be surjective over `Z`: rank `m` with every invariant
/// factor equal to one.
pub fn kernel_lattice(d: &QuasitoricData) -> Result<KernelLattice, Error> {
    let n = d.vertices.len();
    if d.lambda.len() != n || d.lambda.iter().any(|r| r.len() != d.m) {
        return Err(argument("lambda must have one row of length m per vertex"));
    }
    let lambda = d.lambda_matrix();
    let s = smith(&lambda);
    if s.rank() < d.m || s.invariants.iter().any(|x| !x.is_one()) {
        let mut invariants: Vec<BigInt> = s.invariants.clone();
        invariants.resize(d.m, BigInt::zero());
        return Err(Error::NotSurjective { invariants });
    }
    let basis = integer_kernel(&lambda);
    let rank = basis.rows();
    Ok(KernelLattice { basis, rank })
}
