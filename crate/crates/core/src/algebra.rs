//! Free associative algebras on composition words, the monomial basis of
//! quasisymmetric functions, and the pairing between them.
//!
//! A composition `a = (a_1, .., a_r)` names the word `Z_{a_1} .. Z_{a_r}` of
//! `NSymm`, and the monomial quasisymmetric function `M_a` of `QSymm`. The two
//! bases are dual: `<Z_a, M_b> = [a = b]`. Concatenation on the `NSymm` side is
//! dual to deconcatenation on the `QSymm` side.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::composition::Composition;

/// Basis element of a free (tensor power of a) free associative algebra:
/// a monoid under concatenation, graded by weight.
pub trait Word: Ord + Clone + fmt::Debug {
    fn unit() -> Self;
    fn concat(&self, other: &Self) -> Self;
    fn weight(&self) -> u32;
    fn fmt_word(&self, f: &mut dyn fmt::Write) -> fmt::Result;
    /// Print terms in descending basis order.
    const DISPLAY_DESCENDING: bool = false;
}

fn fmt_z_word(c: &Composition, f: &mut dyn fmt::Write) -> fmt::Result {
    if c.is_empty() {
        return f.write_str("1");
    }
    for (i, p) in c.parts().iter().enumerate() {
        if i > 0 {
            f.write_str(".")?;
        }
        write!(f, "Z{p}")?;
    }
    Ok(())
}

impl Word for Composition {
    fn unit() -> Self {
        Composition::empty()
    }
    fn concat(&self, other: &Self) -> Self {
        Composition::concat(self, other)
    }
    fn weight(&self) -> u32 {
        Composition::weight(self)
    }
    fn fmt_word(&self, f: &mut dyn fmt::Write) -> fmt::Result {
        fmt_z_word(self, f)
    }
}

impl Word for (Composition, Composition) {
    fn unit() -> Self {
        (Composition::empty(), Composition::empty())
    }
    fn concat(&self, other: &Self) -> Self {
        (self.0.concat(&other.0), self.1.concat(&other.1))
    }
    fn weight(&self) -> u32 {
        self.0.weight() + self.1.weight()
    }
    fn fmt_word(&self, f: &mut dyn fmt::Write) -> fmt::Result {
        fmt_z_word(&self.0, f)?;
        f.write_str("⊗")?;
        fmt_z_word(&self.1, f)
    }
    const DISPLAY_DESCENDING: bool = true;
}

impl Word for (Composition, Composition, Composition) {
    fn unit() -> Self {
        (Composition::empty(), Composition::empty(), Composition::empty())
    }
    fn concat(&self, other: &Self) -> Self {
        (self.0.concat(&other.0), self.1.concat(&other.1), self.2.concat(&other.2))
    }
    fn weight(&self) -> u32 {
        self.0.weight() + self.1.weight() + self.2.weight()
    }
    fn fmt_word(&self, f: &mut dyn fmt::Write) -> fmt::Result {
        fmt_z_word(&self.0, f)?;
        f.write_str("⊗")?;
        fmt_z_word(&self.1, f)?;
        f.write_str("⊗")?;
        fmt_z_word(&self.2, f)
    }
    const DISPLAY_DESCENDING: bool = true;
}

/// Finite integer combination of words; multiplication is the bilinear
/// extension of concatenation. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeAlgebra<W: Word> {
    terms: BTreeMap<W, BigInt>,
}

/// `Z<Z_1, Z_2, ..>` in the word basis.
pub type NSymm = FreeAlgebra<Composition>;
/// `NSymm (x) NSymm`; multiplication is componentwise, without signs.
pub type Tensor = FreeAlgebra<(Composition, Composition)>;
/// Triple tensor power of `NSymm`.
pub type Tensor3 = FreeAlgebra<(Composition, Composition, Composition)>;

impl<W: Word> Default for FreeAlgebra<W> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<W: Word> FreeAlgebra<W> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(W::unit())
    }

    pub fn from_word(w: W) -> Self {
        Self::from_term(w, BigInt::one())
    }

    pub fn from_term(w: W, c: BigInt) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    /// Integer multiple of the unit.
    pub fn scalar(c: impl Into<BigInt>) -> Self {
        Self::from_term(W::unit(), c.into())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (W, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, w: W, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &W) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, W, BigInt> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> btree_map::IntoIter<W, BigInt> {
        self.terms.into_iter()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect() }
    }

    /// Degree-`n` homogeneous component.
    pub fn homogeneous(&self, n: u32) -> Self {
        Self {
            terms: self.terms.iter().filter(|(w, _)| w.weight() == n).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Word::weight).max()
    }

    /// Linear map determined by its values on words.
    pub fn map_linear<V: Word>(&self, mut f: impl FnMut(&W) -> FreeAlgebra<V>) -> FreeAlgebra<V> {
        let mut out = FreeAlgebra::<V>::zero();
        for (w, c) in &self.terms {
            for (v, k) in f(w).terms {
                out.add_term(v, k * c);
            }
        }
        out
    }
}

impl NSymm {
    /// The generator `Z_i`, with `Z_0 = 1`.
    pub fn z(i: u32) -> Self {
        if i == 0 {
            Self::one()
        } else {
            Self::from_word(Composition::single(i))
        }
    }

    pub fn word(c: &Composition) -> Self {
        Self::from_word(c.clone())
    }

    /// Coefficient of the empty word: the counit.
    pub fn counit(&self) -> BigInt {
        self.coeff(&Composition::empty())
    }

    /// `self (x) 1`.
    pub fn tensor_left(&self) -> Tensor {
        self.map_linear(|w| Tensor::from_word((w.clone(), Composition::empty())))
    }

    /// `1 (x) self`.
    pub fn tensor_right(&self) -> Tensor {
        self.map_linear(|w| Tensor::from_word((Composition::empty(), w.clone())))
    }

    pub fn tensor(&self, other: &NSymm) -> Tensor {
        let mut out = Tensor::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term((a.clone(), b.clone()), x * y);
            }
        }
        out
    }
}

impl Tensor {
    /// Multiplication map `a (x) b -> ab`.
    pub fn multiply_out(&self) -> NSymm {
        self.map_linear(|(a, b)| NSymm::from_word(a.concat(b)))
    }

    /// `(counit (x) id)`.
    pub fn counit_left(&self) -> NSymm {
        self.map_linear(|(a, b)| if a.is_empty() { NSymm::from_word(b.clone()) } else { NSymm::zero() })
    }

    /// `(id (x) counit)`.
    pub fn counit_right(&self) -> NSymm {
        self.map_linear(|(a, b)| if b.is_empty() { NSymm::from_word(a.clone()) } else { NSymm::zero() })
    }
}

/// Coefficient of the empty composition.
pub fn counit_nsymm(a: &NSymm) -> BigInt {
    a.counit()
}

impl<'a, W: Word> Add<&'a FreeAlgebra<W>> for &'a FreeAlgebra<W> {
    type Output = FreeAlgebra<W>;
    fn add(self, rhs: &'a FreeAlgebra<W>) -> FreeAlgebra<W> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<W: Word> Add for FreeAlgebra<W> {
    type Output = FreeAlgebra<W>;
    fn add(mut self, rhs: FreeAlgebra<W>) -> FreeAlgebra<W> {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<W: Word> AddAssign<&FreeAlgebra<W>> for FreeAlgebra<W> {
    fn add_assign(&mut self, rhs: &FreeAlgebra<W>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl<'a, W: Word> Sub<&'a FreeAlgebra<W>> for &'a FreeAlgebra<W> {
    type Output = FreeAlgebra<W>;
    fn sub(self, rhs: &'a FreeAlgebra<W>) -> FreeAlgebra<W> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl<W: Word> Neg for &FreeAlgebra<W> {
    type Output = FreeAlgebra<W>;
    fn neg(self) -> FreeAlgebra<W> {
        FreeAlgebra { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl<'a, W: Word> Mul<&'a FreeAlgebra<W>> for &'a FreeAlgebra<W> {
    type Output = FreeAlgebra<W>;
    fn mul(self, rhs: &'a FreeAlgebra<W>) -> FreeAlgebra<W> {
        let mut out = FreeAlgebra::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }
}

/// Concatenation product in `NSymm`.
pub fn nsymm_multiply(a: &NSymm, b: &NSymm) -> NSymm {
    a * b
}

fn fmt_terms<'a, K: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a BigInt)>,
    fmt_key: impl Fn(&K, &mut dyn fmt::Write) -> fmt::Result,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let mut word = String::new();
        fmt_key(k, &mut word)?;
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else if c.is_negative() {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        if mag.is_one() {
            f.write_str(&word)?;
        } else if word == "1" {
            write!(f, "{mag}")?;
        } else {
            write!(f, "{mag} {word}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl<W: Word> fmt::Display for FreeAlgebra<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if W::DISPLAY_DESCENDING {
            fmt_terms(f, self.terms.iter().rev(), |w, out| w.fmt_word(out))
        } else {
            fmt_terms(f, self.terms.iter(), |w, out| w.fmt_word(out))
        }
    }
}

impl<W: Word> fmt::Debug for FreeAlgebra<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn fmt_m(c: &Composition, out: &mut dyn fmt::Write) -> fmt::Result {
    write!(out, "M({c})")
}

/// Element of `QSymm` in the monomial basis `M_a`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QSymm {
    terms: BTreeMap<Composition, BigInt>,
}

impl QSymm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Composition::empty())
    }

    pub fn monomial(a: Composition) -> Self {
        let mut out = Self::zero();
        out.add_term(a, BigInt::one());
        out
    }

    pub fn add_term(&mut self, a: Composition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(a).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, a: &Composition) -> BigInt {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Composition, BigInt> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Delta M_c = sum over c = a.b of M_a (x) M_b`.
    pub fn deconcatenation(&self) -> QSymmTensor {
        let mut out = QSymmTensor::default();
        for (c, k) in &self.terms {
            for (a, b) in c.splits() {
                out.add_term(a, b, k.clone());
            }
        }
        out
    }
}

impl fmt::Display for QSymm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter(), fmt_m)
    }
}

impl fmt::Debug for QSymm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `QSymm (x) QSymm` in the basis `M_a (x) M_b`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QSymmTensor {
    terms: BTreeMap<(Composition, Composition), BigInt>,
}

impl QSymmTensor {
    pub fn add_term(&mut self, a: Composition, b: Composition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let e = self.terms.entry(key.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, a: &Composition, b: &Composition) -> BigInt {
        self.terms.get(&(a.clone(), b.clone())).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, (Composition, Composition), BigInt> {
        self.terms.iter()
    }
}

impl fmt::Display for QSymmTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter(), |(a, b), out| {
            fmt_m(a, out)?;
            out.write_str("⊗")?;
            fmt_m(b, out)
        })
    }
}

impl fmt::Debug for QSymmTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The dual pairing `<Z_a, M_b> = [a = b]`, extended bilinearly.
pub fn pairing(a: &NSymm, q: &QSymm) -> BigInt {
    a.terms().map(|(w, c)| c * q.coeff(w)).fold(BigInt::zero(), |acc, x| acc + x)
}

/// Pairing of `NSymm (x) NSymm` with `QSymm (x) QSymm`, factor by factor.
pub fn pairing_tensor(t: &Tensor, q: &QSymmTensor) -> BigInt {
    t.terms().map(|((a, b), c)| c * q.coeff(a, b)).fold(BigInt::zero(), |acc, x| acc + x)
}
