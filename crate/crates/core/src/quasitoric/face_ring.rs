//! Graded pieces of `SR(K_P) / (theta_1, .., theta_m)` over the integers,
//! where `theta_j = sum_i lambda[i][j] x_i`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::data::{all_faces, mask_vertices, Quasitoric};
use crate::composition::compositions_of;
use crate::error::{argument, Error};
use crate::linalg::{row_echelon, smith, IntMatrix, SmithForm};

/// Monomial `prod x_i^{e_i}` in the vertex generators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// The constant monomial `1` on `n` vertices.
    pub fn one(n: usize) -> Self {
        Self { exponents: alloc::vec![0; n] }
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    /// `prod x_v` over the given vertices (repeats raise the power).
    pub fn from_vertices(n: usize, vs: &[usize]) -> Self {
        let mut m = Self::one(n);
        for &v in vs {
            m.exponents[v] += 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn support(&self) -> u64 {
        self.exponents.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |m, (v, _)| m | (1u64 << v))
    }

    fn times(&self, v: usize) -> Self {
        let mut m = self.clone();
        m.exponents[v] += 1;
        m
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degree-`k` monomials whose support is a face, sorted.
pub fn admissible_monomials(q: &Quasitoric, k: u32) -> Vec<Monomial> {
    let n = q.vertex_count();
    if k == 0 {
        return alloc::vec![Monomial::one(n)];
    }
    let mut out = Vec::new();
    for face in all_faces(&q.data().facets) {
        let vs = mask_vertices(face);
        if vs.len() as u32 > k {
            continue;
        }
        for comp in compositions_of(k).into_iter().filter(|c| c.len() == vs.len()) {
            let mut m = Monomial::one(n);
            for (&v, &e) in vs.iter().zip(comp.parts()) {
                m.exponents[v] = e;
            }
            out.push(m);
        }
    }
    out.sort();
    out
}

/// One graded piece of the integral cohomology quotient, with its Smith
/// normal form certificate.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: u32,
    pub basis: Vec<Monomial>,
    /// Rows `theta_j * mu` for admissible `mu` of degree `k - 1`, expanded in
    /// `basis` with non-face terms dropped.
    pub relations: IntMatrix,
    /// Echelon basis of the row lattice of `relations`.
    pub reduced: IntMatrix,
    /// Smith form of `reduced`.
    pub smith: SmithForm,
    pub cokernel_rank: usize,
    pub torsion: Vec<BigInt>,
    /// In top degree: the value of every basis monomial on the fundamental class.
    pub evaluation: Option<Vec<BigInt>>,
}

impl GradedPiece {
    /// Smith certificate holds, every relation row lies in the row lattice of
    /// `reduced`, and the evaluation (if any) kills every relation.
    pub fn verify(&self) -> bool {
        if !self.smith.verify(&self.reduced) {
            return false;
        }
        let stacked_rank = {
            let mut rows: Vec<Vec<BigInt>> = self.reduced.row_vecs().to_vec();
            rows.extend(self.relations.row_vecs().iter().cloned());
            let all = IntMatrix::from_rows(self.basis.len(), rows);
            row_echelon(&all, true)
        };
        if stacked_rank != row_echelon(&self.reduced, true) {
            return false;
        }
        match &self.evaluation {
            Some(e) => self.relations.apply(e).iter().all(Zero::is_zero),
            None => true,
        }
    }

    pub fn top_class(&self, q: &Quasitoric) -> Option<TopClass> {
        let evaluation = self.evaluation.as_ref()?;
        Some(TopClass {
            m: q.m() as u32,
            vertex_count: q.vertex_count(),
            facet_masks: q.facet_masks().to_vec(),
            values: self.basis.iter().cloned().zip(evaluation.iter().cloned()).filter(|(_, v)| !v.is_zero()).collect(),
        })
    }
}

/// Builds the degree-`k` piece, `0 <= k <= m`.
///
/// In top degree the cokernel must be free of rank one; its generator is
/// fixed so that the square-free monomial of the base facet evaluates to `+1`.
pub fn graded_piece(q: &Quasitoric, k: u32) -> Result<GradedPiece, Error> {
    let m = q.m() as u32;
    if k > m {
        return Err(argument(format!("degree {k} exceeds m = {m}")));
    }
    let basis = admissible_monomials(q, k);
    let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let lambda = &q.data().lambda;

    let mut rows = Vec::new();
    if k >= 1 {
        for mu in admissible_monomials(q, k - 1) {
            for j in 0..m as usize {
                let mut row = alloc::vec![BigInt::zero(); basis.len()];
                let mut nonzero = false;
                for (v, lv) in lambda.iter().enumerate() {
                    if lv[j] == 0 {
                        continue;
                    }
                    let prod = mu.times(v);
                    if let Some(&col) = index.get(&prod) {
                        row[col] += lv[j];
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let relations = IntMatrix::from_rows(basis.len(), rows);
    let reduced = row_echelon(&relations, false);
    let smith = smith(&reduced);
    let rank = smith.rank();
    let cokernel_rank = basis.len() - rank;
    let torsion = smith.torsion();

    let evaluation = if k == m {
        if cokernel_rank != 1 || !torsion.is_empty() {
            return Err(Error::Integrity(format!(
                "top-degree cokernel has rank {cokernel_rank} and torsion {torsion:?}; expected Z"
            )));
        }
        let mut e = smith.right.column(rank);
        let base = &q.data().facets[q.base_facet()];
        let base_monomial = Monomial::from_vertices(q.vertex_count(), base);
        let b = index[&base_monomial];
        if !e[b].abs().is_one() {
            return Err(Error::Integrity(format!(
                "base facet monomial {base_monomial} is {} times the generator",
                e[b]
            )));
        }
        if e[b].is_negative() {
            for x in e.iter_mut() {
                *x = -&*x;
            }
        }
        Some(e)
    } else {
        None
    };

    Ok(GradedPiece { degree: k, basis, relations, reduced, smith, cokernel_rank, torsion, evaluation })
}

/// Evaluation of degree-`m` monomials on the fundamental class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopClass {
    m: u32,
    vertex_count: usize,
    facet_masks: Vec<u64>,
    values: BTreeMap<Monomial, BigInt>,
}

impl TopClass {
    pub fn new(q: &Quasitoric) -> Result<Self, Error> {
        let piece = graded_piece(q, q.m() as u32)?;
        Ok(piece.top_class(q).expect("top-degree piece carries an evaluation"))
    }

    /// Rebuilds a top class from stored nonzero values (e.g. a cache).
    pub fn from_values(q: &Quasitoric, values: BTreeMap<Monomial, BigInt>) -> Self {
        Self { m: q.m() as u32, vertex_count: q.vertex_count(), facet_masks: q.facet_masks().to_vec(), values }
    }

    /// Nonzero values, keyed by monomial.
    pub fn values(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.values
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn evaluate(&self, mu: &Monomial) -> Result<BigInt, Error> {
        if mu.exponents.len() != self.vertex_count {
            return Err(argument("monomial has the wrong number of variables"));
        }
        if mu.degree() != self.m {
            return Err(argument(format!("monomial degree {} differs from m = {}", mu.degree(), self.m)));
        }
        let s = mu.support();
        if !self.facet_masks.iter().any(|&f| s & !f == 0) {
            return Ok(BigInt::zero());
        }
        Ok(self.values.get(mu).cloned().unwrap_or_default())
    }
}

/// Value of a degree-`m` monomial on the fundamental class.
pub fn top_eval(q: &Quasitoric, mu: &Monomial) -> Result<BigInt, Error> {
    if mu.degree() != q.m() as u32 {
        return Err(argument(format!("monomial degree {} differs from m = {}", mu.degree(), q.m())));
    }
    TopClass::new(q)?.evaluate(mu)
}
