//! Compositions (ordered partitions) of non-negative integers.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{argument, Error};

/// A finite sequence of positive integers.
///
/// Compositions are ordered first by weight and then by the canonical
/// split-set order: a composition of `n` corresponds to the subset of
/// `{1, .., n-1}` of its proper partial sums, read as an `(n-1)`-bit integer
/// with bit `p-1` standing for a split after position `p`. For `n = 3` this
/// gives `(3) < (1,2) < (2,1) < (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// The empty composition, the unique composition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(argument("composition parts must be positive"));
        }
        Ok(Self { parts })
    }

    /// Single-part composition `(n)`, `n >= 1`.
    pub fn single(n: u32) -> Self {
        assert!(n >= 1, "composition parts must be positive");
        Self { parts: vec![n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// All `len() + 1` ways of writing `self` as a concatenation `prefix . suffix`.
    pub fn splits(&self) -> impl Iterator<Item = (Composition, Composition)> + '_ {
        (0..=self.parts.len()).map(move |i| {
            (Composition { parts: self.parts[..i].to_vec() }, Composition { parts: self.parts[i..].to_vec() })
        })
    }

    /// Proper partial sums `p_1 < p_1 + p_2 < ...`, excluding the total.
    fn split_points(&self) -> impl Iterator<Item = u32> + '_ {
        let k = self.parts.len().saturating_sub(1);
        self.parts[..k].iter().scan(0u32, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| {
            // Same weight: compare split sets as binary numbers, most
            // significant bit (largest split position) first.
            let mut a: Vec<u32> = self.split_points().collect();
            let mut b: Vec<u32> = other.split_points().collect();
            a.reverse();
            b.reverse();
            for (x, y) in a.iter().zip(b.iter()) {
                if x != y {
                    return x.cmp(y);
                }
            }
            a.len().cmp(&b.len())
        })
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        fmt::Display::fmt(self, f)?;
        f.write_str(")")
    }
}

/// Comma-separated parts, e.g. `1,2`; the empty composition prints as nothing.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| argument(alloc::format!("bad composition part {p:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Composition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self, Error> {
        Composition::new(parts)
    }
}

/// All `2^{n-1}` compositions of `n` in canonical order (the single empty
/// composition for `n = 0`).
///
/// Split masks are enumerated as `u64`, so `n` is limited to 64.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    assert!(n <= 64, "compositions_of supports weights up to 64");
    let splits = n - 1;
    let count: u64 = 1u64 << splits;
    let mut out = Vec::with_capacity(count as usize);
    for mask in 0..count {
        let mut parts = Vec::new();
        let mut last = 0u32;
        for p in 1..n {
            if mask & (1u64 << (p - 1)) != 0 {
                parts.push(p - last);
                last = p;
            }
        }
        parts.push(n - last);
        out.push(Composition { parts });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn weight_zero() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
    }

    #[test]
    fn weight_three_order() {
        assert_eq!(compositions_of(3), vec![c(&[3]), c(&[1, 2]), c(&[2, 1]), c(&[1, 1, 1])]);
    }

    #[test]
    fn counts_and_uniqueness() {
        for n in 1..=12 {
            let all = compositions_of(n);
            assert_eq!(all.len(), 1 << (n - 1));
            let set: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.iter().all(|a| a.weight() == n));
            // enumeration order agrees with Ord
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(compositions_of(8).len(), 128);
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(Composition::new(vec![1, 0]).is_err());
        assert!("2,0".parse::<Composition>().is_err());
        assert!("a".parse::<Composition>().is_err());
    }

    #[test]
    fn parse_and_display() {
        let a: Composition = "1, 2,1".parse().unwrap();
        assert_eq!(a, c(&[1, 2, 1]));
        assert_eq!(alloc::format!("{a}"), "1,2,1");
        assert_eq!("".parse::<Composition>().unwrap(), Composition::empty());
    }

    #[test]
    fn splits_count() {
        let a = c(&[1, 1, 1]);
        let s: Vec<_> = a.splits().collect();
        assert_eq!(s.len(), 4);
        assert!(s.iter().all(|(p, q)| p.concat(q) == a));
    }
}
