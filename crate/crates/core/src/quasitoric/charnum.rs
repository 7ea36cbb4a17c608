//! The numbers `[a]_P = sum_{i_1 < .. < i_r} <x_{i_1}^{a_1} .. x_{i_r}^{a_r}, [M]>`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::data::Quasitoric;
use super::face_ring::{Monomial, TopClass};
use crate::algebra::NSymm;
use crate::composition::{compositions_of, Composition};
use crate::error::{argument, Error};

/// `[a]_P` for a composition `a` of `m`, using a precomputed top class.
///
/// Only actual vertices are summed over, in the order given by the data.
pub fn char_number_with(top: &TopClass, a: &Composition) -> Result<BigInt, Error> {
    if a.weight() != top.m() {
        return Err(argument(format!("composition {a} has weight {}, expected m = {}", a.weight(), top.m())));
    }
    let n = top.vertex_count();
    let r = a.len();
    let mut total = BigInt::zero();
    if r > n {
        return Ok(total);
    }
    // strictly increasing index tuples, lexicographic
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let mut exps = alloc::vec![0u32; n];
        for (&i, &e) in idx.iter().zip(a.parts()) {
            exps[i] = e;
        }
        total += top.evaluate(&Monomial::from_exponents(exps))?;

        let mut k = r;
        loop {
            if k == 0 {
                return Ok(total);
            }
            k -= 1;
            if idx[k] < n - r + k {
                break;
            }
        }
        idx[k] += 1;
        for j in k + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn char_number(q: &Quasitoric, a: &Composition) -> Result<BigInt, Error> {
    if a.weight() as usize != q.m() {
        return Err(argument(format!("composition {a} has weight {}, expected m = {}", a.weight(), q.m())));
    }
    char_number_with(&TopClass::new(q)?, a)
}

/// `[a]_P` on every composition of `m`; as an element of `NSymm` it is
/// `sum_a [a]_P Z_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharFunction {
    pub degree: u32,
    pub values: BTreeMap<Composition, BigInt>,
}

impl CharFunction {
    pub fn get(&self, a: &Composition) -> Option<&BigInt> {
        self.values.get(a)
    }

    pub fn to_nsymm(&self) -> NSymm {
        NSymm::from_terms(self.values.iter().map(|(a, v)| (a.clone(), v.clone())))
    }
}

/// One `composition TAB value` line per composition, canonical order.
impl fmt::Display for CharFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, v) in &self.values {
            writeln!(f, "{a}\t{v}")?;
        }
        Ok(())
    }
}

pub fn char_function_with(top: &TopClass) -> Result<CharFunction, Error> {
    let values = compositions_of(top.m())
        .into_iter()
        .map(|a| Ok((a.clone(), char_number_with(top, &a)?)))
        .collect::<Result<_, Error>>()?;
    Ok(CharFunction { degree: top.m(), values })
}

pub fn char_function(q: &Quasitoric) -> Result<CharFunction, Error> {
    char_function_with(&TopClass::new(q)?)
}
