//! Truncated power series and Laurent series in one central variable over a
//! possibly noncommutative coefficient ring.
//!
//! Every series carries its truncation order explicitly: `Some(n)` means the
//! coefficients of exponent `> n` are unknown, `None` means the series is an
//! exact polynomial. Arithmetic never extends the known range.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{FreeAlgebra, Word};
use crate::error::{argument, Error};

/// Ring of series coefficients. Multiplication need not commute.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl<W: Word> Coefficient for FreeAlgebra<W> {
    fn zero() -> Self {
        FreeAlgebra::zero()
    }
    fn one() -> Self {
        FreeAlgebra::one()
    }
    fn is_zero(&self) -> bool {
        FreeAlgebra::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

fn min_order(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// `sum_k c_k t^k`, known through exponent `order`.
#[derive(Clone, PartialEq)]
pub struct Series<R> {
    coeffs: Vec<R>,
    order: Option<usize>,
}

impl<R: Coefficient> Series<R> {
    /// Coefficients beyond `order` are discarded.
    pub fn new(mut coeffs: Vec<R>, order: Option<usize>) -> Self {
        if let Some(n) = order {
            coeffs.truncate(n + 1);
        }
        let mut s = Self { coeffs, order };
        s.trim();
        s
    }

    pub fn truncated(coeffs: Vec<R>, order: usize) -> Self {
        Self::new(coeffs, Some(order))
    }

    /// Exact polynomial.
    pub fn polynomial(coeffs: Vec<R>) -> Self {
        Self::new(coeffs, None)
    }

    pub fn constant(c: R) -> Self {
        Self::polynomial(alloc::vec![c])
    }

    /// The series variable `t`.
    pub fn variable() -> Self {
        Self::polynomial(alloc::vec![R::zero(), R::one()])
    }

    /// `t^k` with coefficient `c`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs: Vec<R> = (0..k).map(|_| R::zero()).collect();
        coeffs.push(c);
        Self::polynomial(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn order(&self) -> Option<usize> {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order.is_none()
    }

    /// Known-zero test: every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^k`, or a truncation error when `k` exceeds the order.
    pub fn coeff(&self, k: usize) -> Result<R, Error> {
        if let Some(n) = self.order {
            if k > n {
                return Err(Error::Truncation { requested: k as i64, order: n as i64 });
            }
        }
        Ok(self.coeffs.get(k).cloned().unwrap_or_else(R::zero))
    }

    /// Stored coefficients, lowest exponent first (trailing zeros trimmed).
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), min_order(self.order, Some(order)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = min_order(self.order, other.order);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => R::zero(),
            })
            .collect();
        Self::new(coeffs, order)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(R::neg).collect(), self.order)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cauchy product `self * other` in the written order, truncated to the
    /// smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = min_order(self.order, other.order);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new(), order);
        }
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(n) = order {
            len = len.min(n + 1);
        }
        let mut coeffs: Vec<R> = (0..len).map(|_| R::zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::new(coeffs, order)
    }

    /// `c * self`, coefficient on the left.
    pub fn scale_left(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| c.mul(a)).collect(), self.order)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::new(alloc::vec![R::one()], self.order);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series::new(self.coeffs.iter().map(f).collect(), self.order)
    }

    /// `self(g) = sum_k c_k g^k` (coefficients on the left), by Horner's rule.
    ///
    /// `g` must have zero constant term. The result is known to the smaller of
    /// the two truncation orders.
    pub fn substitute(&self, g: &Self) -> Result<Self, Error> {
        if !g.coeff(0)?.is_zero() {
            return Err(argument("substituted series must have zero constant term"));
        }
        let order = min_order(self.order, g.order);
        let g = match order {
            Some(n) => g.truncate(n),
            None => g.clone(),
        };
        let mut acc = Self::new(Vec::new(), order);
        for c in self.coeffs.iter().rev() {
            acc = Self::new(alloc::vec![c.clone()], order).add(&acc.mul(&g));
        }
        Ok(acc)
    }
}

impl<R: Coefficient> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write!(f, " ({c:?})t^{k}")?;
        }
        match self.order {
            Some(n) => write!(f, " + O(t^{}) ]", n + 1),
            None => f.write_str(" ]"),
        }
    }
}

/// Series are themselves a coefficient ring; constants are exact.
impl<R: Coefficient> Coefficient for Series<R> {
    fn zero() -> Self {
        Series::polynomial(Vec::new())
    }
    fn one() -> Self {
        Series::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        Series::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Series::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Series::mul(self, other)
    }
    fn neg(&self) -> Self {
        Series::neg(self)
    }
}

/// Series product in the written order.
pub fn series_multiply<R: Coefficient>(f: &Series<R>, g: &Series<R>) -> Series<R> {
    f.mul(g)
}

/// Composition `f(g)`.
pub fn series_substitute<R: Coefficient>(f: &Series<R>, g: &Series<R>) -> Result<Series<R>, Error> {
    f.substitute(g)
}

/// `sum_{k >= min_exp} c_k u^k` with finitely many negative exponents, known
/// through exponent `order`.
#[derive(Clone, PartialEq)]
pub struct LaurentSeries<R> {
    min_exp: i64,
    coeffs: Vec<R>,
    order: Option<i64>,
}

impl<R: Coefficient> LaurentSeries<R> {
    /// `coeffs[i]` is the coefficient of `u^{min_exp + i}`.
    pub fn new(min_exp: i64, mut coeffs: Vec<R>, order: Option<i64>) -> Self {
        if let Some(n) = order {
            let keep = (n - min_exp + 1).max(0) as usize;
            coeffs.truncate(keep);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { min_exp, coeffs, order }
    }

    /// Like [`LaurentSeries::new`], but rejects poles deeper than `max_pole`.
    pub fn with_pole_bound(min_exp: i64, coeffs: Vec<R>, order: Option<i64>, max_pole: i64) -> Result<Self, Error> {
        let s = Self::new(min_exp, coeffs, order);
        if let Some(lowest) = s.lowest_exponent() {
            if lowest < -max_pole {
                return Err(argument(alloc::format!("pole of order {} exceeds the bound {max_pole}", -lowest)));
            }
        }
        Ok(s)
    }

    pub fn from_series(s: &Series<R>) -> Self {
        Self::new(0, s.coeffs().to_vec(), s.order().map(|n| n as i64))
    }

    pub fn order(&self) -> Option<i64> {
        self.order
    }

    pub fn lowest_exponent(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| self.min_exp + i as i64)
    }

    pub fn coeff(&self, k: i64) -> Result<R, Error> {
        if let Some(n) = self.order {
            if k > n {
                return Err(Error::Truncation { requested: k, order: n });
            }
        }
        if k < self.min_exp {
            return Ok(R::zero());
        }
        Ok(self.coeffs.get((k - self.min_exp) as usize).cloned().unwrap_or_else(R::zero))
    }

    /// Coefficient of `u^{-1}`.
    pub fn residue(&self) -> Result<R, Error> {
        self.coeff(-1)
    }

    /// Product in the written order. The result is known through
    /// `min(order_f + low_g, order_g + low_f)`.
    pub fn mul(&self, other: &Self) -> Self {
        let min_exp = self.min_exp + other.min_exp;
        let order = match (self.order, other.order) {
            (Some(a), Some(b)) => Some((a + other.min_exp).min(b + self.min_exp)),
            (Some(a), None) => Some(a + other.min_exp),
            (None, Some(b)) => Some(b + self.min_exp),
            (None, None) => None,
        };
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(min_exp, Vec::new(), order);
        }
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(n) = order {
            len = len.min((n - min_exp + 1).max(0) as usize);
        }
        let mut coeffs: Vec<R> = (0..len).map(|_| R::zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(min_exp, coeffs, order)
    }
}

impl<R: Coefficient> fmt::Debug for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " ({c:?})u^{}", self.min_exp + i as i64)?;
            }
        }
        match self.order {
            Some(n) => write!(f, " + O(u^{}) ]", n + 1),
            None => f.write_str(" ]"),
        }
    }
}

/// Coefficient of `u^{-1}`, zero when absent.
pub fn laurent_residue<R: Coefficient>(f: &LaurentSeries<R>) -> Result<R, Error> {
    f.residue()
}
