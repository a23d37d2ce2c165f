//! Irredundant primary decomposition of monomial ideals, associated primes,
//! and the size/bigsize invariants derived from them.
//!
//! A monomial ideal is primary exactly when every variable occurring in a
//! generator also occurs as a pure power generator. Decomposition splits a
//! generator `x_i^b * w` (with `w` coprime to `x_i`) into
//! `I = (I + (x_i^b)) ∩ (I + (w))` until every leaf is primary, intersects
//! leaves sharing a radical, and drops redundant components greedily in
//! canonical order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{depth_ideal, FieldChar};
use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

/// A monomial prime ideal, identified by its sorted variable support.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialPrime {
    support: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(vars: impl IntoIterator<Item = usize>) -> Self {
        let mut support: Vec<usize> = vars.into_iter().collect();
        support.sort_unstable();
        support.dedup();
        MonomialPrime { support }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.support.binary_search(&i).is_ok()
    }

    /// The ideal `(x_i : i in support)` in a ring of `n` variables.
    pub fn to_ideal(&self, n: usize) -> Result<MonomialIdeal> {
        let mut gens = Vec::with_capacity(self.support.len());
        for &i in &self.support {
            if i >= n {
                return Err(Error::VariableOutOfRange { index: i, nvars: n });
            }
            let mut exps = vec![0u32; n];
            exps[i] = 1;
            gens.push(Monomial::new(exps));
        }
        MonomialIdeal::new(n, gens)
    }
}

impl std::fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, &i) in self.support.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        write!(f, ")")
    }
}

/// A primary component together with its radical prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimaryComponent {
    pub ideal: MonomialIdeal,
    pub radical: MonomialPrime,
}

/// An irredundant primary decomposition in canonical component order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub components: Vec<PrimaryComponent>,
}

impl Decomposition {
    /// Intersection of all components; equals the decomposed ideal.
    pub fn intersection(&self, n: usize) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(n)?;
        for c in &self.components {
            acc = acc.intersect(&c.ideal)?;
        }
        Ok(acc)
    }

    pub fn radicals(&self) -> Vec<MonomialPrime> {
        self.components.iter().map(|c| c.radical.clone()).collect()
    }
}

/// A variable occurring in some generator but never as a pure power blocks
/// primariness; pick the most frequent one as the splitting variable.
fn splitting_variable(ideal: &MonomialIdeal) -> Option<usize> {
    let n = ideal.nvars();
    let mut occurs = vec![0usize; n];
    let mut pure = vec![false; n];
    for g in ideal.gens() {
        let supp = g.support();
        for &i in &supp {
            occurs[i] += 1;
        }
        if supp.len() == 1 {
            pure[supp[0]] = true;
        }
    }
    (0..n)
        .filter(|&i| occurs[i] > 0 && !pure[i])
        .max_by_key(|&i| (occurs[i], std::cmp::Reverse(i)))
}

fn decompose_leaves(ideal: MonomialIdeal, out: &mut Vec<MonomialIdeal>) -> Result<()> {
    let Some(var) = splitting_variable(&ideal) else {
        out.push(ideal);
        return Ok(());
    };
    // split on the generator carrying the largest exponent of the variable
    let gen = ideal
        .gens()
        .iter()
        .max_by_key(|g| g.exp(var))
        .expect("splitting variable occurs in some generator")
        .clone();
    let b = gen.exp(var);
    debug_assert!(b > 0);
    let n = ideal.nvars();
    let mut pure_exps = vec![0u32; n];
    pure_exps[var] = b;
    let pure_power = Monomial::new(pure_exps);
    let coprime_part = gen.div_exact(&pure_power).expect("pure power divides");
    debug_assert!(!coprime_part.is_unit());

    let with_power = ideal.sum(&MonomialIdeal::new(n, vec![pure_power])?)?;
    let with_rest = ideal.sum(&MonomialIdeal::new(n, vec![coprime_part])?)?;
    decompose_leaves(with_power, out)?;
    decompose_leaves(with_rest, out)
}

/// Irredundant primary decomposition of a proper nonzero monomial ideal.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut leaves = Vec::new();
    decompose_leaves(ideal.clone(), &mut leaves)?;

    // group leaves by radical and intersect each group
    let mut by_radical: std::collections::BTreeMap<Vec<usize>, MonomialIdeal> =
        std::collections::BTreeMap::new();
    for leaf in leaves {
        let support = leaf
            .radical_support()
            .expect("decomposition leaves are primary");
        match by_radical.entry(support) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(leaf);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let merged = e.get().intersect(&leaf)?;
                e.insert(merged);
            }
        }
    }

    // greedy irredundancy pass in canonical (radical-sorted) order
    let grouped: Vec<(Vec<usize>, MonomialIdeal)> = by_radical.into_iter().collect();
    let mut kept: Vec<bool> = vec![true; grouped.len()];
    for i in 0..grouped.len() {
        let mut others = MonomialIdeal::unit(ideal.nvars())?;
        for (j, (_, comp)) in grouped.iter().enumerate() {
            if j != i && kept[j] {
                others = others.intersect(comp)?;
            }
        }
        // component i is redundant when the intersection of the others
        // already lies inside it
        let redundant = others
            .gens()
            .iter()
            .map(|g| grouped[i].1.contains(g))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|b| b);
        if redundant {
            kept[i] = false;
        }
    }

    let components = grouped
        .into_iter()
        .zip(kept)
        .filter(|(_, keep)| *keep)
        .map(|((support, comp), _)| PrimaryComponent {
            radical: MonomialPrime::new(support),
            ideal: comp,
        })
        .collect();
    Ok(Decomposition { components })
}

/// The associated primes `Ass(S/I)`: radicals of the irredundant components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(primary_decomposition(ideal)?.radicals())
}

/// The size and bigsize invariants computed from an associated prime set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeReport {
    /// Minimum number of primes whose supports union to the total support.
    pub a: usize,
    /// Cardinality of the union of all supports (height of the prime sum).
    pub b: usize,
    pub size: usize,
    pub bigsize: usize,
}

fn union_covers(primes: &[&MonomialPrime], subset: &[usize], target: usize) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for &idx in subset {
        seen.extend(primes[idx].support().iter().copied());
    }
    seen.len() == target
}

fn some_subset_covers(primes: &[&MonomialPrime], t: usize, target: usize) -> bool {
    combinations(primes.len(), t).any(|subset| union_covers(primes, &subset, target))
}

fn every_subset_covers(primes: &[&MonomialPrime], t: usize, target: usize) -> bool {
    combinations(primes.len(), t).all(|subset| union_covers(primes, &subset, target))
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    // lexicographic k-subsets of 0..n
    let mut state: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let current = state.clone()?;
        let next = {
            let mut c = current.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] < n - (k - i) {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        state = next;
        Some(current)
    })
}

/// Exact size and bigsize of an ideal with the given associated primes in a
/// ring of `n` variables. The minimum cover count is found by exhaustive
/// subset search in increasing size; no approximation is used.
pub fn size_bigsize(ass: &[MonomialPrime], n: usize) -> Result<SizeReport> {
    if ass.is_empty() {
        return Err(Error::EmptyAss);
    }
    for p in ass {
        if let Some(&max) = p.support().last() {
            if max >= n {
                return Err(Error::VariableOutOfRange {
                    index: max,
                    nvars: n,
                });
            }
        }
    }
    let primes: Vec<&MonomialPrime> = ass.iter().collect();
    let total: std::collections::BTreeSet<usize> = primes
        .iter()
        .flat_map(|p| p.support().iter().copied())
        .collect();
    let b = total.len();
    let s = primes.len();
    let a = (1..=s)
        .find(|&t| some_subset_covers(&primes, t, b))
        .expect("the full prime set covers its own union");
    let a_all = (1..=s)
        .find(|&t| every_subset_covers(&primes, t, b))
        .expect("the full prime set covers its own union");
    Ok(SizeReport {
        a,
        b,
        size: a + (n - b) - 1,
        bigsize: a_all + (n - b) - 1,
    })
}

/// True when every prime owns a variable appearing in no other prime, i.e.
/// `P_i` is not contained in the sum of the others, for every `i`.
pub fn is_star_condition(ass: &[MonomialPrime]) -> bool {
    ass.iter().enumerate().all(|(i, p)| {
        p.support().iter().any(|&v| {
            ass.iter()
                .enumerate()
                .all(|(j, q)| j == i || !q.contains_var(v))
        })
    })
}

/// Whether `depth(I) = size(I) + 1`, the extremal case of Lyubeznik's bound.
pub fn has_minimal_depth(ideal: &MonomialIdeal, characteristic: FieldChar) -> Result<bool> {
    let ass = associated_primes(ideal)?;
    let report = size_bigsize(&ass, ideal.nvars())?;
    let depth = depth_ideal(ideal, characteristic)?;
    Ok(depth as usize == report.size + 1)
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

    fn prime(vars: &[usize]) -> MonomialPrime {
        MonomialPrime::new(vars.iter().copied())
    }

    /// Membership-level equality oracle on all monomials of degree <= cap.
    fn same_members(a: &MonomialIdeal, b: &MonomialIdeal, cap: u32) {
        let ring = a.ring();
        for d in 0..=cap {
            for w in ring.monomials_of_degree(d) {
                assert_eq!(
                    a.contains(&w).unwrap(),
                    b.contains(&w).unwrap(),
                    "membership differs at {w}"
                );
            }
        }
    }

    #[test]
    fn principal_squarefree_splits_into_variables() {
        let dec = primary_decomposition(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!(dec.radicals(), vec![prime(&[0]), prime(&[1])]);
        assert_eq!(dec.intersection(2).unwrap(), ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn embedded_component_example() {
        // (x1^2, x1x2) = (x1) ∩ (x1^2, x2)
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let dec = primary_decomposition(&i).unwrap();
        assert_eq!(dec.radicals(), vec![prime(&[0]), prime(&[0, 1])]);
        assert_eq!(dec.intersection(2).unwrap(), i);
        same_members(&dec.intersection(2).unwrap(), &i, 4);
    }

    #[test]
    fn maximal_ideal_is_already_primary() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let dec = primary_decomposition(&i).unwrap();
        assert_eq!(dec.components.len(), 1);
        assert_eq!(dec.components[0].ideal, i);
        assert_eq!(dec.radicals(), vec![prime(&[0, 1, 2])]);
    }

    #[test]
    fn ass_of_mixed_ideal() {
        // (x2, x1x3) = (x1,x2) ∩ (x2,x3), verified by intersect()
        let i = ideal(3, &[&[0, 1, 0], &[1, 0, 1]]);
        let ass = associated_primes(&i).unwrap();
        assert_eq!(ass, vec![prime(&[0, 1]), prime(&[1, 2])]);
        let p1 = prime(&[0, 1]).to_ideal(3).unwrap();
        let p2 = prime(&[1, 2]).to_ideal(3).unwrap();
        assert_eq!(p1.intersect(&p2).unwrap(), i);
    }

    #[test]
    fn decomposition_is_irredundant() {
        for gens in [
            vec![vec![2u32, 0, 0], vec![1, 1, 0], vec![0, 0, 3]],
            vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]],
            vec![vec![3, 0, 0], vec![1, 2, 0], vec![0, 1, 2]],
        ] {
            let i = MonomialIdeal::new(3, gens.into_iter().map(Monomial::new).collect()).unwrap();
            let dec = primary_decomposition(&i).unwrap();
            assert_eq!(dec.intersection(3).unwrap(), i);
            // radicals pairwise distinct
            let mut rads = dec.radicals();
            rads.dedup();
            assert_eq!(rads.len(), dec.components.len());
            // no component contains the intersection of the others
            for k in 0..dec.components.len() {
                let mut others = MonomialIdeal::unit(3).unwrap();
                for (j, c) in dec.components.iter().enumerate() {
                    if j != k {
                        others = others.intersect(&c.ideal).unwrap();
                    }
                }
                let contained = others
                    .gens()
                    .iter()
                    .all(|g| dec.components[k].ideal.contains(g).unwrap());
                assert!(!contained, "component {k} is redundant");
            }
        }
    }

    #[test]
    fn rejects_zero_and_unit() {
        assert!(matches!(
            primary_decomposition(&MonomialIdeal::zero(2).unwrap()),
            Err(Error::ZeroIdeal)
        ));
        assert!(matches!(
            primary_decomposition(&MonomialIdeal::unit(2).unwrap()),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn size_of_maximal_ideal() {
        for n in 1..=4 {
            let ass = vec![prime(&(0..n).collect::<Vec<_>>())];
            let r = size_bigsize(&ass, n).unwrap();
            assert_eq!((r.a, r.b, r.size, r.bigsize), (1, n, 0, 0));
        }
    }

    #[test]
    fn size_of_two_disjoint_lines() {
        let ass = vec![prime(&[0]), prime(&[1])];
        let r = size_bigsize(&ass, 2).unwrap();
        assert_eq!((r.a, r.b, r.size, r.bigsize), (2, 2, 1, 1));
    }

    #[test]
    fn size_of_overlapping_pair() {
        // enumerate: no single prime covers {x1,x2,x3}, the pair does
        let ass = vec![prime(&[0, 1]), prime(&[1, 2])];
        let r = size_bigsize(&ass, 3).unwrap();
        assert_eq!((r.size, r.bigsize), (1, 1));
    }

    #[test]
    fn bigsize_dominates_size() {
        let ass = vec![prime(&[0, 1]), prime(&[1, 2]), prime(&[0, 2])];
        let r = size_bigsize(&ass, 3).unwrap();
        assert!(r.bigsize >= r.size);
        // some pair covers, so a = 2; but {P1,P2} etc... every pair covers too
        assert_eq!((r.a, r.size), (2, 1));
    }

    #[test]
    fn star_condition_cases() {
        assert!(is_star_condition(&[prime(&[0, 1]), prime(&[2, 3])]));
        assert!(!is_star_condition(&[
            prime(&[0, 1]),
            prime(&[1, 2]),
            prime(&[0, 2])
        ]));
        assert!(is_star_condition(&[prime(&[0, 4])]));
    }

    #[test]
    fn minimal_depth_trivial_cases() {
        use crate::homology::DEFAULT_CHARACTERISTIC;
        // the maximal ideal: depth 1, size 0
        let m3 = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(has_minimal_depth(&m3, DEFAULT_CHARACTERISTIC).unwrap());
        // principal squarefree: depth n, size n-1
        let edge = ideal(2, &[&[1, 1]]);
        assert!(has_minimal_depth(&edge, DEFAULT_CHARACTERISTIC).unwrap());
    }

    #[test]
    fn size_depends_only_on_ass() {
        // the same ideal entered through a redundant generating set
        let i = ideal(3, &[&[0, 1, 0], &[1, 0, 1]]);
        let j = ideal(3, &[&[0, 1, 0], &[1, 0, 1], &[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(i, j);
        let ai = associated_primes(&i).unwrap();
        assert_eq!(ai, associated_primes(&j).unwrap());
        // and size from the hand-known presentation (x1,x2) ∩ (x2,x3)
        let manual = vec![prime(&[0, 1]), prime(&[1, 2])];
        assert_eq!(
            size_bigsize(&ai, 3).unwrap(),
            size_bigsize(&manual, 3).unwrap()
        );
    }
}
