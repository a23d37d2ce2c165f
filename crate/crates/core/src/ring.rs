//! The ambient polynomial ring and exact monomial arithmetic.
//!
//! A monomial is an exponent vector over the variables `x1 > x2 > ... > xn`.
//! The derived `Ord` on [`Monomial`] is the pure lexicographic order induced
//! by that variable order: the first differing coordinate decides, and the
//! larger exponent on the earlier variable wins.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ambient ring `K[x1, ..., xn]`. Only the variable count is materialized;
/// the coefficient field enters through homology ranks, never here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    n: usize,
}

impl Ring {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyRing);
        }
        Ok(Ring { n })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// The unit monomial `1`.
    pub fn one(&self) -> Monomial {
        Monomial::new(vec![0; self.n])
    }

    /// The variable `x_{i+1}` (0-based index).
    pub fn var(&self, i: usize) -> Result<Monomial> {
        if i >= self.n {
            return Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.n,
            });
        }
        let mut exps = vec![0; self.n];
        exps[i] = 1;
        Ok(Monomial::new(exps))
    }

    pub fn monomial(&self, exps: Vec<u32>) -> Result<Monomial> {
        if exps.len() != self.n {
            return Err(Error::RingMismatch {
                expected: self.n,
                got: exps.len(),
            });
        }
        Ok(Monomial::new(exps))
    }

    /// Iterator over all monomials of total degree `d`, in lex-descending
    /// order starting at `x1^d` and ending at `xn^d`.
    pub fn monomials_of_degree(&self, d: u32) -> LexDegreeIter {
        let mut exps = vec![0; self.n];
        exps[0] = d;
        LexDegreeIter { next: Some(exps) }
    }
}

/// A monomial as an exponent vector. Length equals the ring's variable count.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables dividing the monomial (0-based).
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Lexicographic comparison with a ring-compatibility check.
    pub fn cmp_lex(&self, other: &Monomial) -> Result<Ordering> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::RingMismatch {
                expected: self.exps.len(),
                got: other.exps.len(),
            });
        }
        Ok(self.cmp(other))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// Product, with overflow detected rather than wrapped.
    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::RingMismatch {
                expected: self.exps.len(),
                got: other.exps.len(),
            });
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u32>>>()?;
        Ok(Monomial::new(exps))
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide.
    pub fn div_exact(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a - b)
                .collect(),
        ))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lex-descending walk over the degree-`d` monomials of a ring.
///
/// The successor step moves one unit of degree from the rightmost positive
/// coordinate before the last into the next coordinate, pulling any trailing
/// mass along with it. This enumerates a lexsegment without materializing
/// all of `M_d`.
pub struct LexDegreeIter {
    next: Option<Vec<u32>>,
}

impl LexDegreeIter {
    /// Start the walk at a given monomial instead of `x1^d`.
    pub fn starting_at(m: &Monomial) -> Self {
        LexDegreeIter {
            next: Some(m.exps().to_vec()),
        }
    }
}

pub(crate) fn lex_desc_successor(exps: &[u32]) -> Option<Vec<u32>> {
    let n = exps.len();
    if n == 1 {
        return None;
    }
    let j = (0..n - 1).rev().find(|&i| exps[i] > 0)?;
    let mut out = exps.to_vec();
    let tail: u32 = out[j + 1..].iter().sum::<u32>() + 1;
    out[j] -= 1;
    for slot in out[j + 1..].iter_mut() {
        *slot = 0;
    }
    out[j + 1] = tail;
    Some(out)
}

impl Iterator for LexDegreeIter {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let current = self.next.take()?;
        self.next = lex_desc_successor(&current);
        Some(Monomial::new(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn lex_first_coordinate_decides() {
        // x1^2 vs x1*x2 in n=2
        assert_eq!(m(&[2, 0]).cmp_lex(&m(&[1, 1])).unwrap(), Ordering::Greater);
        // x1*x3 vs x2*x3 in n=3
        assert_eq!(
            m(&[1, 0, 1]).cmp_lex(&m(&[0, 1, 1])).unwrap(),
            Ordering::Greater
        );
        let u = m(&[1, 2, 0]);
        assert_eq!(u.cmp_lex(&u).unwrap(), Ordering::Equal);
    }

    #[test]
    fn lex_ring_mismatch() {
        assert!(matches!(
            m(&[1, 0]).cmp_lex(&m(&[1, 0, 0])),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn degree_enumeration_order() {
        let ring = Ring::new(3).unwrap();
        let all: Vec<Monomial> = ring.monomials_of_degree(2).collect();
        let expected = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[1, 0, 1]),
            m(&[0, 2, 0]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        assert_eq!(all, expected);
        // strictly descending
        for w in all.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn degree_enumeration_counts() {
        // |M_d| = C(n+d-1, d)
        let ring = Ring::new(4).unwrap();
        assert_eq!(ring.monomials_of_degree(3).count(), 20);
        let ring1 = Ring::new(1).unwrap();
        assert_eq!(ring1.monomials_of_degree(5).count(), 1);
    }

    #[test]
    fn mul_overflow_detected() {
        let a = m(&[u32::MAX, 0]);
        let b = m(&[1, 0]);
        assert_eq!(a.try_mul(&b), Err(Error::ExponentOverflow));
    }

    #[test]
    fn display_forms() {
        assert_eq!(m(&[0, 0]).to_string(), "1");
        assert_eq!(m(&[2, 1, 0]).to_string(), "x1^2*x2");
        assert_eq!(m(&[0, 1, 1]).to_string(), "x2*x3");
    }
}
