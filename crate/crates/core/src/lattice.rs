//! The lcm lattice of a monomial ideal: all joins of generator subsets,
//! ordered by divisibility, with the unit monomial as bottom.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

pub const DEFAULT_GENERATOR_CAP: usize = 20;
const ELEMENT_CAP: usize = 100_000;

/// Deduplicated set of all lcms of generator subsets, sorted by
/// (total degree, exponents) so that divisors precede their multiples.
#[derive(Debug, Clone)]
pub struct LcmLattice {
    n: usize,
    elements: Vec<Monomial>,
    atoms: Vec<usize>,
}

impl LcmLattice {
    pub fn nvars(&self) -> usize {
        self.n
    }

    /// All lattice elements in linear-extension order; index 0 is the unit.
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    /// Indices of the atoms, i.e. the minimal generators.
    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    /// Elements strictly between the bottom and `elements[idx]`, i.e. proper
    /// divisors of the top other than the unit, as indices.
    pub fn open_interval_below(&self, idx: usize) -> Vec<usize> {
        let top = &self.elements[idx];
        (1..idx)
            .filter(|&j| self.elements[j].divides(top))
            .collect()
    }
}

/// Build the lcm lattice of a proper nonzero ideal. The generator count is
/// capped (default 20) to keep the subset closure at desk scale.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<LcmLattice> {
    lcm_lattice_with_cap(ideal, DEFAULT_GENERATOR_CAP)
}

pub fn lcm_lattice_with_cap(ideal: &MonomialIdeal, max_gens: usize) -> Result<LcmLattice> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.num_gens() > max_gens {
        return Err(Error::GeneratorCapExceeded {
            count: ideal.num_gens(),
            cap: max_gens,
        });
    }
    let n = ideal.nvars();
    let mut set: std::collections::BTreeSet<Monomial> = std::collections::BTreeSet::new();
    set.insert(Monomial::new(vec![0; n]));
    for g in ideal.gens() {
        let joined: Vec<Monomial> = set.iter().map(|e| e.lcm(g)).collect();
        set.extend(joined);
        if set.len() > ELEMENT_CAP {
            return Err(Error::LatticeCapExceeded {
                count: set.len(),
                cap: ELEMENT_CAP,
            });
        }
    }
    let mut elements: Vec<Monomial> = set.into_iter().collect();
    elements.sort_by_key(|m| (m.degree(), m.exps().to_vec()));
    let atoms = ideal
        .gens()
        .iter()
        .map(|g| {
            elements
                .iter()
                .position(|e| e == g)
                .expect("every generator is a lattice element")
        })
        .collect();
    Ok(LcmLattice { n, elements, atoms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    #[test]
    fn koszul_square() {
        // sorted by (degree, exponents): a linear extension of divisibility
        let l = lcm_lattice(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(
            l.elements(),
            &[m(&[0, 0]), m(&[0, 1]), m(&[1, 0]), m(&[1, 1])]
        );
    }

    #[test]
    fn path_ideal_lattice() {
        let l = lcm_lattice(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]])).unwrap();
        assert_eq!(
            l.elements(),
            &[m(&[0, 0, 0]), m(&[0, 1, 1]), m(&[1, 1, 0]), m(&[1, 1, 1])]
        );
    }

    #[test]
    fn triangle_joins_coincide() {
        // pairwise joins of the triangle ideal all equal x1x2x3
        let l = lcm_lattice(&ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])).unwrap();
        assert_eq!(l.elements().len(), 5);
        assert_eq!(l.elements()[l.top()], m(&[1, 1, 1]));
    }

    #[test]
    fn every_element_is_join_of_atoms_below() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 1, 2], &[1, 0, 1]]);
        let l = lcm_lattice(&i).unwrap();
        for (idx, e) in l.elements().iter().enumerate() {
            let mut join = m(&[0, 0, 0]);
            for &a in l.atoms() {
                if l.elements()[a].divides(e) {
                    join = join.lcm(&l.elements()[a]);
                }
            }
            if idx == 0 {
                assert!(e.is_unit());
            } else {
                assert_eq!(&join, e, "element {e} is not the join of atoms below");
            }
        }
    }

    #[test]
    fn generator_cap_enforced() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        assert!(matches!(
            lcm_lattice_with_cap(&i, 1),
            Err(Error::GeneratorCapExceeded { count: 2, cap: 1 })
        ));
    }
}
