//! The residue coproduct on `NSymm`, its antipode, and the substitutions
//! `z -> Z(c)` and `c -> 1 (x) Z(c)`.
//!
//! With `Z(t) = sum_{i >= 0} Z_i t^{i+1}` and `Z_0 = 1`, the coproduct of the
//! generators is packaged as
//!
//! ```text
//! Delta Z(t) = res_{u=0} Z(u) (x) (u - Z(t))^{-1},
//! (u - Z(t))^{-1} = sum_{k >= 0} u^{-k-1} Z(t)^k,
//! ```
//!
//! with `u` and `t` central, `Z(u)` contributing to the left tensor factor and
//! `Z(t)` to the right one. [`coproduct_series`] evaluates this residue
//! literally; [`CoproductTable`] extends it multiplicatively to words.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{NSymm, Tensor, Tensor3};
use crate::composition::{compositions_of, Composition};
use crate::error::{argument, Error};
use crate::series::{LaurentSeries, Series};

/// `Z(t) = t + Z_1 t^2 + Z_2 t^3 + ..`, known through `t^order`.
pub fn z_series(order: usize) -> Series<NSymm> {
    let coeffs = (0..=order).map(|k| if k == 0 { NSymm::zero() } else { NSymm::z(k as u32 - 1) }).collect();
    Series::truncated(coeffs, order)
}

/// `Delta Z(t)` through `t^order`, computed as the residue at `u = 0` of
/// `Z(u) (x) (u - Z(t))^{-1}`. The coefficient of `t^{n+1}` is `Delta(Z_n)`.
pub fn coproduct_series(order: usize) -> Result<Series<Tensor>, Error> {
    if order < 1 {
        return Err(argument("truncation order must be at least 1"));
    }
    let n = order;
    let zt: Series<Tensor> = z_series(n).map_coeffs(NSymm::tensor_right);

    // (u - Z(t))^{-1}: coefficient of u^{-k-1} is (1 (x) Z(t))^k. Powers with
    // k > n vanish modulo t^{n+1}, so poles stop at u^{-(n+1)}.
    let mut powers = Vec::with_capacity(n + 1);
    let mut p = Series::truncated(alloc::vec![Tensor::one()], n);
    for _ in 0..=n {
        powers.push(p.clone());
        p = p.mul(&zt);
    }
    powers.reverse();
    let pole_depth = n as i64 + 1;
    let inverse = LaurentSeries::with_pole_bound(-pole_depth, powers, None, pole_depth)?;

    // Z(u) (x) 1, known through u^{n+1}: enough to pair with every pole.
    let zu_coeffs = (0..=n + 1)
        .map(|k| {
            let c = if k == 0 { Tensor::zero() } else { NSymm::z(k as u32 - 1).tensor_left() };
            Series::constant(c)
        })
        .collect();
    let zu = LaurentSeries::new(0, zu_coeffs, Some(pole_depth));

    let integrand = zu.mul(&inverse);
    Ok(integrand.residue()?.truncate(n))
}

/// `Delta(Z_n)` for `n = 0..=max_weight`, extended multiplicatively to words.
///
/// The table is built once and never mutated afterwards, so a shared
/// reference may be used from several threads.
#[derive(Clone, Debug)]
pub struct CoproductTable {
    generators: Vec<Tensor>,
}

impl CoproductTable {
    pub fn new(max_weight: usize) -> Result<Self, Error> {
        let series = coproduct_series(max_weight + 1)?;
        let generators = (0..=max_weight).map(|k| series.coeff(k + 1)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self { generators })
    }

    pub fn max_weight(&self) -> usize {
        self.generators.len() - 1
    }

    pub fn generator(&self, n: usize) -> Result<&Tensor, Error> {
        self.generators
            .get(n)
            .ok_or_else(|| argument(format!("Delta(Z_{n}) requested beyond table weight {}", self.max_weight())))
    }

    /// Replaces `Delta(Z_n)`; used to inject faults into the checks.
    pub fn with_generator(mut self, n: usize, value: Tensor) -> Result<Self, Error> {
        let slot = self.generators.get_mut(n).ok_or_else(|| argument(format!("no generator Z_{n} in table")))?;
        *slot = value;
        Ok(self)
    }

    /// Removes the first term (in basis order) of `Delta(Z_n)`.
    pub fn with_dropped_term(self, n: usize) -> Result<Self, Error> {
        let g = self.generator(n)?.clone();
        let dropped = Tensor::from_terms(g.into_terms().skip(1));
        self.with_generator(n, dropped)
    }

    pub fn delta_word(&self, w: &Composition) -> Result<Tensor, Error> {
        let mut acc = Tensor::one();
        for &p in w.parts() {
            acc = &acc * self.generator(p as usize)?;
        }
        Ok(acc)
    }

    pub fn delta(&self, a: &NSymm) -> Result<Tensor, Error> {
        let mut out = Tensor::zero();
        for (w, c) in a.terms() {
            out += &self.delta_word(w)?.scale(c);
        }
        Ok(out)
    }

    /// `(Delta (x) id)`.
    pub fn delta_left(&self, t: &Tensor) -> Result<Tensor3, Error> {
        let mut memo = BTreeMap::new();
        let mut out = Tensor3::zero();
        for ((a, b), c) in t.terms() {
            let da = cached(&mut memo, a, |w| self.delta_word(w))?;
            for ((x, y), k) in da.terms() {
                out.add_term((x.clone(), y.clone(), b.clone()), k * c);
            }
        }
        Ok(out)
    }

    /// `(id (x) Delta)`.
    pub fn delta_right(&self, t: &Tensor) -> Result<Tensor3, Error> {
        let mut memo = BTreeMap::new();
        let mut out = Tensor3::zero();
        for ((a, b), c) in t.terms() {
            let db = cached(&mut memo, b, |w| self.delta_word(w))?;
            for ((x, y), k) in db.terms() {
                out.add_term((a.clone(), x.clone(), y.clone()), k * c);
            }
        }
        Ok(out)
    }
}

fn cached<'m, V>(
    memo: &'m mut BTreeMap<Composition, V>,
    key: &Composition,
    f: impl FnOnce(&Composition) -> Result<V, Error>,
) -> Result<&'m V, Error> {
    if !memo.contains_key(key) {
        let v = f(key)?;
        memo.insert(key.clone(), v);
    }
    Ok(&memo[key])
}

fn check_weight(a: &NSymm, max_weight: usize) -> Result<(), Error> {
    match a.max_weight() {
        Some(w) if w as usize > max_weight => {
            Err(argument(format!("element has weight {w}, above the truncation order {max_weight}")))
        }
        _ => Ok(()),
    }
}

/// `Delta(a)` for an element all of whose words have weight at most `order`.
pub fn coproduct(a: &NSymm, order: usize) -> Result<Tensor, Error> {
    check_weight(a, order)?;
    CoproductTable::new(order.max(1))?.delta(a)
}

/// Antipode computed by the recursion `sum S(a') a'' = counit(a) 1`, memoized
/// on words.
#[derive(Debug)]
pub struct Antipode<'t> {
    table: &'t CoproductTable,
    memo: BTreeMap<Composition, NSymm>,
}

impl<'t> Antipode<'t> {
    pub fn new(table: &'t CoproductTable) -> Self {
        Self { table, memo: BTreeMap::new() }
    }

    pub fn word(&mut self, w: &Composition) -> Result<NSymm, Error> {
        if let Some(s) = self.memo.get(w) {
            return Ok(s.clone());
        }
        let weight = w.weight();
        let mut acc = if w.is_empty() { NSymm::one() } else { NSymm::zero() };
        for ((a, b), c) in self.table.delta_word(w)?.terms() {
            if a.weight() == weight {
                // Only w (x) 1, with coefficient one, may have full left weight.
                if a != w || !b.is_empty() || !c.is_one() {
                    return Err(Error::Integrity(format!(
                        "coproduct of {w:?} is not of the form {w:?}(x)1 + lower terms"
                    )));
                }
                continue;
            }
            let s = self.word(a)?;
            acc = &acc - &(&s * &NSymm::word(b)).scale(c);
        }
        self.memo.insert(w.clone(), acc.clone());
        Ok(acc)
    }

    pub fn apply(&mut self, a: &NSymm) -> Result<NSymm, Error> {
        let mut out = NSymm::zero();
        for (w, c) in a.terms() {
            out += &self.word(w)?.scale(c);
        }
        Ok(out)
    }
}

/// The antipode `S(a)` for an element of weight at most `order`.
pub fn antipode(a: &NSymm, order: usize) -> Result<NSymm, Error> {
    check_weight(a, order)?;
    let table = CoproductTable::new(order.max(1))?;
    Antipode::new(&table).apply(a)
}

/// Substitutes `z -> Z(c) = c + sum_{i >= 1} Z_i c^{i+1}` into an integer series
/// `f(z)` with zero constant term, truncated at `c^order`.
pub fn compose_with_z(f: &Series<BigInt>, order: usize) -> Result<Series<NSymm>, Error> {
    if !f.coeff(0)?.is_zero() {
        return Err(argument("series must have zero constant term"));
    }
    let f = f.map_coeffs(|c| NSymm::scalar(c.clone())).truncate(order);
    f.substitute(&z_series(order))
}

/// Embeds coefficients as `a (x) 1` and substitutes `c -> 1 (x) Z(c)`:
/// `sum_k (a_k (x) 1) (1 (x) Z(c))^k`, truncated at `c^order`.
pub fn coaction_substitute(f: &Series<NSymm>, order: usize) -> Series<Tensor> {
    let g: Series<Tensor> = z_series(order).map_coeffs(NSymm::tensor_right);
    f.map_coeffs(NSymm::tensor_left).truncate(order).substitute(&g).expect("1 (x) Z(c) has zero constant term")
}

/// Outcome of one degree of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub degree: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub degrees: Vec<DegreeCheck>,
    pub first_discrepancy: Option<Discrepancy>,
}

impl CheckReport {
    fn new(name: &'static str) -> Self {
        Self { name, degrees: Vec::new(), first_discrepancy: None }
    }

    fn record(&mut self, degree: usize, failure: Option<String>) {
        self.degrees.push(DegreeCheck { degree, ok: failure.is_none() });
        if let (Some(detail), None) = (failure, &self.first_discrepancy) {
            self.first_discrepancy = Some(Discrepancy { degree, detail });
        }
    }

    pub fn passed(&self) -> bool {
        self.degrees.iter().all(|d| d.ok)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.degrees {
            writeln!(f, "{}\t{}", d.degree, if d.ok { "ok" } else { "FAIL" })?;
        }
        match &self.first_discrepancy {
            Some(d) => write!(f, "{}: first discrepancy at degree {}: {}", self.name, d.degree, d.detail),
            None => write!(f, "{}: all degrees pass", self.name),
        }
    }
}

/// Compares `Delta` applied coefficientwise to `Z(c)` against
/// `sum_i (Z_i (x) 1)(1 (x) Z(c))^{i+1}`, degree by degree through `c^order`.
pub fn check_coaction_square(order: usize) -> Result<CheckReport, Error> {
    let table = CoproductTable::new(order.max(1))?;
    check_coaction_square_with(&table, order)
}

pub fn check_coaction_square_with(table: &CoproductTable, order: usize) -> Result<CheckReport, Error> {
    if order < 1 {
        return Err(argument("truncation order must be at least 1"));
    }
    let image = compose_with_z(&Series::variable(), order)?;
    let lhs: Vec<Tensor> = (0..=order).map(|k| table.delta(&image.coeff(k)?)).collect::<Result<_, _>>()?;
    let rhs = coaction_substitute(&z_series(order), order);

    let mut report = CheckReport::new("coaction-square");
    for (k, l) in lhs.iter().enumerate() {
        let r = rhs.coeff(k)?;
        let failure = (*l != r).then(|| format!("lhs {l} != rhs {r}"));
        report.record(k, failure);
    }
    Ok(report)
}

/// Coassociativity, both counit laws, and multiplicativity over every
/// concatenation split, on all words of weight at most `order`.
pub fn check_coassociativity(order: usize) -> Result<CheckReport, Error> {
    let table = CoproductTable::new(order.max(1))?;
    check_coassociativity_with(&table, order)
}

pub fn check_coassociativity_with(table: &CoproductTable, order: usize) -> Result<CheckReport, Error> {
    if order < 1 {
        return Err(argument("truncation order must be at least 1"));
    }
    let mut report = CheckReport::new("coassoc");
    for n in 0..=order as u32 {
        let mut failure = None;
        for w in compositions_of(n) {
            let d = table.delta_word(&w)?;
            let word = NSymm::word(&w);
            if table.delta_left(&d)? != table.delta_right(&d)? {
                failure = Some(format!("coassociativity fails on {w:?}"));
            } else if d.counit_left() != word || d.counit_right() != word {
                failure = Some(format!("counit law fails on {w:?}"));
            } else {
                for (a, b) in w.splits() {
                    let prod = &table.delta_word(&a)? * &table.delta_word(&b)?;
                    if prod != d {
                        failure = Some(format!("multiplicativity fails on {a:?}.{b:?}"));
                        break;
                    }
                }
            }
            if failure.is_some() {
                break;
            }
        }
        report.record(n as usize, failure);
    }
    Ok(report)
}

/// `m(S (x) id) Delta = m(id (x) S) Delta = counit` on all words of weight at
/// most `order`.
pub fn check_antipode(order: usize) -> Result<CheckReport, Error> {
    let table = CoproductTable::new(order.max(1))?;
    let mut s = Antipode::new(&table);
    let mut report = CheckReport::new("antipode");
    for n in 0..=order as u32 {
        let mut failure = None;
        for w in compositions_of(n) {
            let d = table.delta_word(&w)?;
            let unit = NSymm::scalar(if w.is_empty() { 1 } else { 0 });
            let mut left = NSymm::zero();
            let mut right = NSymm::zero();
            for ((a, b), c) in d.terms() {
                left += &(&s.word(a)? * &NSymm::word(b)).scale(c);
                right += &(&NSymm::word(a) * &s.word(b)?).scale(c);
            }
            if left != unit {
                failure = Some(format!("m(S(x)id)Delta({w:?}) = {left}"));
            } else if right != unit {
                failure = Some(format!("m(id(x)S)Delta({w:?}) = {right}"));
            }
            if failure.is_some() {
                break;
            }
        }
        report.record(n as usize, failure);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn w(parts: &[u32]) -> NSymm {
        NSymm::word(&c(parts))
    }

    fn n(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn delta_series_low_coefficients() {
        let d = coproduct_series(4).unwrap();
        assert_eq!(d.coeff(0).unwrap(), Tensor::zero());
        assert_eq!(d.coeff(1).unwrap(), Tensor::one());
        assert_eq!(d.coeff(2).unwrap(), &w(&[1]).tensor_left() + &w(&[1]).tensor_right());
        let expect = &(&w(&[2]).tensor_left() + &w(&[1]).tensor(&w(&[1])).scale(&n(2))) + &w(&[2]).tensor_right();
        assert_eq!(d.coeff(3).unwrap(), expect);
        assert!(d.coeff(5).is_err());
        assert!(coproduct_series(0).is_err());
    }

    #[test]
    fn delta_examples() {
        let expect = &(&w(&[1, 1]).tensor_left() + &w(&[1]).tensor(&w(&[1])).scale(&n(2))) + &w(&[1, 1]).tensor_right();
        assert_eq!(coproduct(&w(&[1, 1]), 2).unwrap(), expect);
        assert_eq!(coproduct(&NSymm::one(), 2).unwrap(), Tensor::one());
        let expect = &(&w(&[2]).tensor_left() + &w(&[1]).tensor(&w(&[1])).scale(&n(2))) + &w(&[2]).tensor_right();
        assert_eq!(coproduct(&w(&[2]), 2).unwrap(), expect);
        assert!(coproduct(&w(&[3]), 2).is_err());
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&NSymm::one(), 2).unwrap(), NSymm::one());
        assert_eq!(antipode(&w(&[1]), 2).unwrap(), -&w(&[1]));
        assert_eq!(antipode(&w(&[2]), 2).unwrap(), &(-&w(&[2])) + &w(&[1, 1]).scale(&n(2)));
        assert!(antipode(&w(&[1, 2]), 2).is_err());
    }

    #[test]
    fn antipode_is_antimultiplicative() {
        let table = CoproductTable::new(5).unwrap();
        let mut s = Antipode::new(&table);
        for a in 1..=3u32 {
            for b in 1..=2u32 {
                let ab = s.word(&c(&[a, b])).unwrap();
                let expect = &s.word(&c(&[b])).unwrap() * &s.word(&c(&[a])).unwrap();
                assert_eq!(ab, expect);
            }
        }
    }

    #[test]
    fn compose_with_z_examples() {
        let z = Series::<BigInt>::variable();
        let img = compose_with_z(&z, 5).unwrap();
        assert_eq!(img, z_series(5));

        let z2 = Series::polynomial(alloc::vec![n(0), n(0), n(1)]);
        let img = compose_with_z(&z2, 4).unwrap();
        assert_eq!(img.coeff(2).unwrap(), NSymm::one());
        assert_eq!(img.coeff(3).unwrap(), w(&[1]).scale(&n(2)));
        assert_eq!(img.coeff(4).unwrap(), &w(&[2]).scale(&n(2)) + &w(&[1, 1]));

        let zero = Series::<BigInt>::polynomial(alloc::vec![]);
        assert!(compose_with_z(&zero, 3).unwrap().is_zero());

        let bad = Series::polynomial(alloc::vec![n(1), n(1)]);
        assert!(compose_with_z(&bad, 3).is_err());
    }

    #[test]
    fn coaction_substitute_examples() {
        let img = coaction_substitute(&Series::variable(), 4);
        assert_eq!(img, z_series(4).map_coeffs(NSymm::tensor_right));

        let f = Series::monomial(w(&[1]), 1);
        let img = coaction_substitute(&f, 3);
        assert_eq!(img.coeff(1).unwrap(), w(&[1]).tensor_left());
        assert_eq!(img.coeff(2).unwrap(), w(&[1]).tensor(&w(&[1])));
        assert_eq!(img.coeff(3).unwrap(), w(&[1]).tensor(&w(&[2])));

        let one = coaction_substitute(&Series::constant(NSymm::one()), 3);
        assert_eq!(one, Series::truncated(alloc::vec![Tensor::one()], 3));
    }

    #[test]
    fn coaction_square_small_orders() {
        assert!(check_coaction_square(1).unwrap().passed());
        let r = check_coaction_square(3).unwrap();
        assert!(r.passed());
        assert_eq!(r.degrees.len(), 4);
    }

    #[test]
    fn coaction_square_detects_fault() {
        let table = CoproductTable::new(3).unwrap().with_dropped_term(2).unwrap();
        let r = check_coaction_square_with(&table, 3).unwrap();
        assert!(!r.passed());
        assert_eq!(r.first_discrepancy.unwrap().degree, 3);
    }

    #[test]
    fn coassociativity_small_orders() {
        assert!(check_coassociativity(1).unwrap().passed());
        assert!(check_coassociativity(4).unwrap().passed());
    }

    #[test]
    fn coassociativity_detects_fault() {
        let table = CoproductTable::new(4).unwrap().with_dropped_term(3).unwrap();
        let r = check_coassociativity_with(&table, 4).unwrap();
        assert!(!r.passed());
        assert_eq!(r.first_discrepancy.unwrap().degree, 3);
        assert!(r.degrees[..3].iter().all(|d| d.ok));
    }

    #[test]
    fn antipode_axiom_small() {
        assert!(check_antipode(4).unwrap().passed());
    }
}
