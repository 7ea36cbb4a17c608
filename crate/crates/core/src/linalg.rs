//! Exact integer linear algebra: determinants, row Hermite normal form,
//! Smith normal form with unimodular transforms, and integer kernels.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Self { rows: rows.len(), cols, data: rows }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols).map(|j| self.column(j)).collect();
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        self.data.iter().map(|r| dot(r, v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Zero::is_zero))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in &self.data {
            f.write_str("  ")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("\n")?;
        }
        f.write_str("]")
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .fold(BigInt::zero(), |acc, x| acc + x)
}

/// `dst -= q * src`, skipping zero entries of `src`.
fn axpy(dst: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    if q.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

fn sub_rows(data: &mut [Vec<BigInt>], target: usize, q: &BigInt, source: usize) {
    debug_assert_ne!(target, source);
    let (t, s) = if target < source {
        let (lo, hi) = data.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = data.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    axpy(t, q, s);
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.data.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Row echelon basis of the row lattice of `m`: nonzero rows only, each
/// pivot positive and strictly to the right of the one above. With
/// `reduce_above`, entries above each pivot lie in `[0, pivot)`, giving the
/// row Hermite normal form.
pub fn row_echelon(m: &IntMatrix, reduce_above: bool) -> IntMatrix {
    let mut a: Vec<Vec<BigInt>> = m.data.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut p = 0;
    for col in 0..m.cols {
        if p == a.len() {
            break;
        }
        loop {
            let best =
                (p..a.len()).filter(|&i| !a[i][col].is_zero()).min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
            let Some(best) = best else { break };
            a.swap(p, best);
            let mut done = true;
            for i in p + 1..a.len() {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[p][col]);
                sub_rows(&mut a, i, &q, p);
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            // drop rows that became zero
            let mut i = p + 1;
            while i < a.len() {
                if a[i].iter().all(Zero::is_zero) {
                    a.swap_remove(i);
                } else {
                    i += 1;
                }
            }
            if done {
                break;
            }
        }
        if p < a.len() && !a[p][col].is_zero() {
            if a[p][col].is_negative() {
                for x in a[p].iter_mut() {
                    *x = -&*x;
                }
            }
            if reduce_above {
                for i in 0..p {
                    let q = a[i][col].div_floor(&a[p][col]);
                    sub_rows(&mut a, i, &q, p);
                }
            }
            p += 1;
        }
    }
    a.truncate(p);
    IntMatrix { rows: a.len(), cols: m.cols, data: a }
}

/// `left * m * right = diag(invariants, 0, ..)` with `left`, `right`
/// unimodular and each invariant factor positive and dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub invariants: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows, self.right.cols);
        for (i, x) in self.invariants.iter().enumerate() {
            d.data[i][i] = x.clone();
        }
        d
    }

    /// Checks the certificate against `m`: the product identity, unimodularity
    /// of both transforms, positivity and the divisibility chain.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        let product_ok = self.left.mul(m).mul(&self.right) == self.diagonal_matrix();
        let chain_ok = self.invariants.iter().all(Signed::is_positive)
            && self.invariants.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        let unimodular = |x: &IntMatrix| determinant(x).abs().is_one();
        product_ok && chain_ok && unimodular(&self.left) && unimodular(&self.right)
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariants.iter().filter(|x| !x.is_one()).cloned().collect()
    }
}

struct SmithState {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    // right transform stored by columns
    v: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
}

impl SmithState {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut() {
            r.swap(i, j);
        }
        self.v.swap(i, j);
    }

    /// row_i -= q row_t
    fn row_op(&mut self, i: usize, q: &BigInt, t: usize) {
        sub_rows(&mut self.a, i, q, t);
        sub_rows(&mut self.u, i, q, t);
    }

    /// col_j -= q col_t
    fn col_op(&mut self, j: usize, q: &BigInt, t: usize) {
        if q.is_zero() {
            return;
        }
        for r in self.a.iter_mut() {
            if !r[t].is_zero() {
                let d = q * &r[t];
                r[j] -= d;
            }
        }
        sub_rows(&mut self.v, j, q, t);
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = -&*x;
        }
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|b| ax < b.2) {
                    let unit = ax.is_one();
                    best = Some((i, j, ax));
                    if unit {
                        let b = best.unwrap();
                        return Some((b.0, b.1));
                    }
                }
            }
        }
        best.map(|b| (b.0, b.1))
    }

    fn run(&mut self) -> Vec<BigInt> {
        let mut invariants = Vec::new();
        for t in 0..self.rows.min(self.cols) {
            let Some((i, j)) = self.min_entry(t) else { break };
            self.swap_rows(t, i);
            self.swap_cols(t, j);
            loop {
                let mut clean = true;
                for i in t + 1..self.rows {
                    if !self.a[i][t].is_zero() {
                        let q = self.a[i][t].div_floor(&self.a[t][t]);
                        self.row_op(i, &q, t);
                        clean &= self.a[i][t].is_zero();
                    }
                }
                for j in t + 1..self.cols {
                    if !self.a[t][j].is_zero() {
                        let q = self.a[t][j].div_floor(&self.a[t][t]);
                        self.col_op(j, &q, t);
                        clean &= self.a[t][j].is_zero();
                    }
                }
                if !clean {
                    // move the smallest remainder in row/column t to the pivot
                    let mut best: Option<(bool, usize, BigInt)> = None;
                    for i in t + 1..self.rows {
                        let x = self.a[i][t].abs();
                        if !x.is_zero() && best.as_ref().is_none_or(|b| x < b.2) {
                            best = Some((true, i, x));
                        }
                    }
                    for j in t + 1..self.cols {
                        let x = self.a[t][j].abs();
                        if !x.is_zero() && best.as_ref().is_none_or(|b| x < b.2) {
                            best = Some((false, j, x));
                        }
                    }
                    if let Some((is_row, k, _)) = best {
                        if is_row {
                            self.swap_rows(t, k);
                        } else {
                            self.swap_cols(t, k);
                        }
                    }
                    continue;
                }
                // divisibility: pivot must divide the remaining block
                let pivot = self.a[t][t].clone();
                let offender =
                    (t + 1..self.rows).find(|&i| (t + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&pivot)));
                match offender {
                    Some(i) => {
                        let minus_one = -BigInt::one();
                        self.row_op(t, &minus_one, i);
                    }
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            invariants.push(self.a[t][t].clone());
        }
        invariants
    }
}

/// Smith normal form of `m` together with both unimodular transforms.
pub fn smith(m: &IntMatrix) -> SmithForm {
    let mut st = SmithState {
        a: m.data.clone(),
        u: IntMatrix::identity(m.rows).data,
        v: IntMatrix::identity(m.cols).data,
        rows: m.rows,
        cols: m.cols,
    };
    let invariants = st.run();
    let right = IntMatrix { rows: m.cols, cols: m.cols, data: st.v }.transpose();
    SmithForm { left: IntMatrix { rows: m.rows, cols: m.rows, data: st.u }, right, invariants }
}

/// Basis (as rows, in Hermite normal form) of `{x in Z^n : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let s = smith(m);
    let r = s.rank();
    let basis: Vec<Vec<BigInt>> = (r..m.cols).map(|j| s.right.column(j)).collect();
    row_echelon(&IntMatrix::from_rows(m.cols, basis), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&mat(&[&[-1, 1], &[-1, 0]])), BigInt::from(1));
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&mat(&[&[2, 0, 0], &[0, 3, 0], &[1, 1, 4]])), BigInt::from(24));
        assert_eq!(determinant(&mat(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(determinant(&IntMatrix::zeros(0, 0)), BigInt::one());
    }

    #[test]
    fn smith_small() {
        let m = mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(&m);
        assert!(s.verify(&m));
        assert_eq!(s.invariants, ints(&[2, 6, 12]));
    }

    #[test]
    fn smith_rank_deficient() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let s = smith(&m);
        assert!(s.verify(&m));
        assert_eq!(s.invariants, ints(&[1]));
    }

    #[test]
    fn echelon_hnf() {
        let m = mat(&[&[2, 4], &[3, 5], &[0, 0]]);
        let h = row_echelon(&m, true);
        assert_eq!(h, mat(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn kernel_cp2() {
        let k = integer_kernel(&mat(&[&[-1, 1, 0], &[-1, 0, 1]]));
        assert_eq!(k, mat(&[&[1, 1, 1]]));
    }

    #[test]
    fn kernel_trivial() {
        let k = integer_kernel(&IntMatrix::identity(3));
        assert_eq!(k.rows(), 0);
    }

    fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
                .prop_map(|rows| IntMatrix::from_i64(&rows))
        })
    }

    proptest! {
        #[test]
        fn smith_certificate(m in arb_matrix()) {
            let s = smith(&m);
            prop_assert!(s.verify(&m));
        }

        #[test]
        fn kernel_is_annihilated(m in arb_matrix()) {
            let k = integer_kernel(&m);
            let s = smith(&m);
            prop_assert_eq!(k.rows(), m.cols() - s.rank());
            for row in k.row_vecs() {
                prop_assert!(m.apply(row).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn echelon_preserves_rank(m in arb_matrix()) {
            let e = row_echelon(&m, false);
            prop_assert_eq!(e.rows(), smith(&m).rank());
        }
    }
}
