//! Monomial ideals in canonical form, and the basic ideal arithmetic.
//!
//! An ideal is stored by its minimal generating set, sorted lex-descending,
//! so that equality of ideals is structural equality of the representation.
//! The zero ideal has no generators; the unit ideal is generated by `1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{lex_desc_successor, Monomial, Ring};

/// A monomial ideal given by its canonical minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Remove divisibility-redundant elements: the result is the antichain of
/// minimal elements under divisibility (the canonical `G(I)`).
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted: Vec<&Monomial> = gens.iter().collect();
    // scanning by ascending degree guarantees divisors are seen first
    sorted.sort_by_key(|g| (g.degree(), (*g).clone()));
    for g in sorted {
        if out.iter().any(|kept| kept.divides(g)) {
            continue;
        }
        out.push(g.clone());
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

impl MonomialIdeal {
    /// Canonicalize a generating set into an ideal: minimalize and sort
    /// lex-descending. Generators must all live in a ring of `n` variables.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyRing);
        }
        for g in &gens {
            if g.nvars() != n {
                return Err(Error::RingMismatch {
                    expected: n,
                    got: g.nvars(),
                });
            }
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(&gens),
        })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, vec![])
    }

    pub fn unit(n: usize) -> Result<Self> {
        let ring = Ring::new(n)?;
        Self::new(n, vec![ring.one()])
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.n).expect("ideal ring is nonempty")
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    /// Proper and nonzero: the standing hypothesis of the decomposition,
    /// homology and sdepth pipelines.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Exponent vector of `lcm(G(I))`; all zero for the zero ideal.
    pub fn lcm_exponents(&self) -> Vec<u32> {
        let mut g = vec![0u32; self.n];
        for gen in &self.gens {
            for (slot, &e) in g.iter_mut().zip(gen.exps()) {
                *slot = (*slot).max(e);
            }
        }
        g
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RingMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    /// Membership test: `m` lies in the ideal iff some generator divides it.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.nvars() != self.n {
            return Err(Error::RingMismatch {
                expected: self.n,
                got: m.nvars(),
            });
        }
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Intersection via pairwise generator lcms followed by minimalization.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.n, gens)
    }

    /// Sum: union of the generating sets, minimalized.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.n, gens)
    }

    /// Colon ideal `I : m`, generated by `g / gcd(g, m)` over generators `g`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.nvars() != self.n {
            return Err(Error::RingMismatch {
                expected: self.n,
                got: m.nvars(),
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.div_exact(&g.gcd(m)).expect("gcd divides"))
            .collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// Support of the radical, defined only for primary-shaped ideals:
    /// every variable occurring in a generator must occur as a pure power.
    /// Returns the sorted variable indices generating the radical.
    pub fn radical_support(&self) -> Result<Vec<usize>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let mut occurs = vec![false; self.n];
        let mut pure = vec![false; self.n];
        for g in &self.gens {
            let supp = g.support();
            for &i in &supp {
                occurs[i] = true;
            }
            if supp.len() == 1 {
                pure[supp[0]] = true;
            }
        }
        let mut out = Vec::new();
        for i in 0..self.n {
            if occurs[i] {
                if !pure[i] {
                    return Err(Error::NotPrimary { var: i });
                }
                out.push(i);
            }
        }
        Ok(out)
    }
}

/// The lexsegment ideal generated by all degree-`d` monomials `w` with
/// `u >=_lex w >=_lex v`. Requires `d >= 2` and `deg u = deg v = d`.
pub fn lexsegment(ring: &Ring, d: u32, u: &Monomial, v: &Monomial) -> Result<MonomialIdeal> {
    if (d as u64) < 2 {
        return Err(Error::DegreeBelowTwo { d: d as u64 });
    }
    for m in [u, v] {
        if m.nvars() != ring.nvars() {
            return Err(Error::RingMismatch {
                expected: ring.nvars(),
                got: m.nvars(),
            });
        }
        if m.degree() != d as u64 {
            return Err(Error::DegreeMismatch {
                expected: d as u64,
                got: m.degree(),
            });
        }
    }
    if u < v {
        return Err(Error::LexOrderViolated);
    }
    let mut gens = Vec::new();
    let mut current = u.exps().to_vec();
    loop {
        gens.push(Monomial::new(current.clone()));
        if current == v.exps() {
            break;
        }
        current = lex_desc_successor(&current)
            .expect("v is lex-below u, so the walk reaches it before exhausting M_d");
    }
    MonomialIdeal::new(ring.nvars(), gens)
}
