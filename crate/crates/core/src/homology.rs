//! Depth through multigraded Betti numbers.
//!
//! The primary route computes reduced homology of order complexes of open
//! intervals in the lcm lattice: `beta_{i,m}(S/I) = dim H~_{i-2}((1, m))`.
//! The independent oracle restricts the Taylor complex at each multidegree:
//! faces are generator subsets whose lcm strictly divides the multidegree.
//! Both express depth(S/I) as `n - pd` once the projective dimension is read
//! off the table.
//!
//! Homology is computed from boundary-matrix ranks over a prime field
//! (default characteristic 32003) or, in audit mode, over the rationals via
//! fraction-free integer elimination. Before chains are enumerated, interval
//! posets are shrunk by homotopy-preserving reductions: points comparable to
//! everything (cones), beat points, and closure/interior operators toward
//! extremal elements. Every closure candidate is verified monotone and
//! idempotent before it is applied, so a failed verification only costs
//! speed, never correctness.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{lcm_lattice_with_cap, DEFAULT_GENERATOR_CAP};
use crate::ring::Monomial;

/// Coefficient field for homology ranks: the rationals (`Zero`) or a prime
/// field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldChar {
    Zero,
    Prime(u32),
}

/// Default prime characteristic used for depth computations.
pub const DEFAULT_CHARACTERISTIC: FieldChar = FieldChar::Prime(32003);

impl FieldChar {
    /// Validate a user-supplied characteristic: 0 or a prime below 2^31.
    pub fn from_u64(p: u64) -> Result<FieldChar> {
        if p == 0 {
            return Ok(FieldChar::Zero);
        }
        if !(2..(1u64 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidCharacteristic { p });
        }
        Ok(FieldChar::Prime(p as u32))
    }

    pub fn as_u64(&self) -> u64 {
        match self {
            FieldChar::Zero => 0,
            FieldChar::Prime(p) => *p as u64,
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// bitsets and posets

#[derive(Clone, PartialEq, Eq)]
struct Bits {
    w: Vec<u64>,
}

impl Bits {
    fn new(n: usize) -> Self {
        Bits {
            w: vec![0; n.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.w[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.w[i / 64] >> (i % 64) & 1 == 1
    }

    fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.w.iter_mut().zip(&other.w) {
            *a &= b;
        }
    }

    fn intersects(&self, other: &Bits) -> bool {
        self.w.iter().zip(&other.w).any(|(a, b)| a & b != 0)
    }

    fn count(&self) -> usize {
        self.w.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.w.iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Finite poset on indices `0..size` with the strict order materialized both
/// ways. Element order is a linear extension throughout.
#[derive(Clone)]
struct Poset {
    size: usize,
    above: Vec<Bits>,
    below: Vec<Bits>,
}

impl Poset {
    fn from_monomials(elems: &[Monomial]) -> Poset {
        let size = elems.len();
        let mut above = vec![Bits::new(size); size];
        let mut below = vec![Bits::new(size); size];
        for i in 0..size {
            for j in 0..size {
                if i != j && elems[i].divides(&elems[j]) {
                    above[i].set(j);
                    below[j].set(i);
                }
            }
        }
        Poset { size, above, below }
    }

    fn restrict(&self, keep: &[usize]) -> Poset {
        let size = keep.len();
        let mut above = vec![Bits::new(size); size];
        let mut below = vec![Bits::new(size); size];
        for (ni, &oi) in keep.iter().enumerate() {
            for (nj, &oj) in keep.iter().enumerate() {
                if self.above[oi].get(oj) {
                    above[ni].set(nj);
                    below[nj].set(ni);
                }
            }
        }
        Poset { size, above, below }
    }
}

enum CoreOutcome {
    Contractible,
    Core(Poset),
}

/// Attempt a closure (`toward_max`) or interior (`!toward_max`) operator:
/// map each point to the extremal element of the set of points sandwiched
/// between it and the extremal elements over it. The candidate map is only
/// applied after verifying it is monotone and idempotent, which together
/// with its built-in inflationary/deflationary direction makes the image a
/// deformation retract of the order complex.
fn try_extremal_closure(p: &Poset, toward_max: bool) -> Option<Vec<usize>> {
    let (up, down) = if toward_max {
        (&p.above, &p.below)
    } else {
        (&p.below, &p.above)
    };
    let mut extremal = Bits::new(p.size);
    for (z, ups) in up.iter().enumerate() {
        if ups.count() == 0 {
            extremal.set(z);
        }
    }
    let mut g = vec![0usize; p.size];
    for z in 0..p.size {
        let mut closed_up = up[z].clone();
        closed_up.set(z);
        let mut m = closed_up.clone();
        m.and_assign(&extremal);
        let mut y = closed_up;
        for c in m.iter_ones() {
            let mut closed_down = down[c].clone();
            closed_down.set(c);
            y.and_assign(&closed_down);
        }
        // unique extremal element of the sandwich set
        let mut found = None;
        for cand in y.iter_ones() {
            if !up[cand].intersects(&y) {
                if found.is_some() {
                    return None;
                }
                found = Some(cand);
            }
        }
        g[z] = found?;
    }
    // idempotence and monotonicity make g a genuine closure operator
    for z in 0..p.size {
        if g[g[z]] != g[z] {
            return None;
        }
    }
    for z in 0..p.size {
        for w in up[z].iter_ones() {
            let (gz, gw) = (g[z], g[w]);
            if gz != gw && !up[gz].get(gw) {
                return None;
            }
        }
    }
    let image: BTreeSet<usize> = g.iter().copied().collect();
    if image.len() == p.size {
        return None;
    }
    Some(image.into_iter().collect())
}

/// A beat point either sees a unique minimal element above it or a unique
/// maximal element below it; removing one preserves the homotopy type.
fn find_beat_point(p: &Poset) -> Option<usize> {
    for z in 0..p.size {
        for (rel, opposite) in [(&p.above, &p.below), (&p.below, &p.above)] {
            let u = &rel[z];
            if u.count() == 0 {
                continue;
            }
            let mut extremal_count = 0;
            for y in u.iter_ones() {
                if !opposite[y].intersects(u) {
                    extremal_count += 1;
                    if extremal_count > 1 {
                        break;
                    }
                }
            }
            if extremal_count == 1 {
                return Some(z);
            }
        }
    }
    None
}

/// Shrink a poset to a homotopy-equivalent core (or detect contractibility).
fn poset_core(mut p: Poset) -> CoreOutcome {
    loop {
        if p.size <= 1 {
            return CoreOutcome::Contractible;
        }
        // a point comparable to everything cones the complex off
        if (0..p.size).any(|z| p.above[z].count() + p.below[z].count() == p.size - 1) {
            return CoreOutcome::Contractible;
        }
        if let Some(keep) = try_extremal_closure(&p, true) {
            p = p.restrict(&keep);
            continue;
        }
        if let Some(keep) = try_extremal_closure(&p, false) {
            p = p.restrict(&keep);
            continue;
        }
        if let Some(z) = find_beat_point(&p) {
            let keep: Vec<usize> = (0..p.size).filter(|&i| i != z).collect();
            p = p.restrict(&keep);
            continue;
        }
        return CoreOutcome::Core(p);
    }
}

// ---------------------------------------------------------------------------
// simplicial chain complexes and boundary ranks

/// Faces grouped by dimension; `faces[k]` holds the k-dimensional faces as
/// sorted vertex lists. The empty face is implicit: reduced homology is
/// always computed with the augmentation map.
struct FaceComplex {
    faces: Vec<Vec<Box<[u16]>>>,
}

const DEFAULT_FACE_CAP: usize = 2_000_000;

fn order_complex(p: &Poset, face_cap: usize) -> Result<FaceComplex> {
    let mut faces: Vec<Vec<Box<[u16]>>> = Vec::new();
    let succ: Vec<Vec<u16>> = (0..p.size)
        .map(|i| p.above[i].iter_ones().map(|j| j as u16).collect())
        .collect();
    let mut total = 0usize;
    let mut chain: Vec<u16> = Vec::new();

    fn extend(
        chain: &mut Vec<u16>,
        succ: &[Vec<u16>],
        faces: &mut Vec<Vec<Box<[u16]>>>,
        total: &mut usize,
        cap: usize,
    ) -> Result<()> {
        *total += 1;
        if *total > cap {
            return Err(Error::FaceCapExceeded { cap });
        }
        let dim = chain.len() - 1;
        if faces.len() <= dim {
            faces.push(Vec::new());
        }
        faces[dim].push(chain.clone().into_boxed_slice());
        let last = *chain.last().expect("chain is nonempty") as usize;
        for &next in &succ[last] {
            chain.push(next);
            extend(chain, succ, faces, total, cap)?;
            chain.pop();
        }
        Ok(())
    }

    for start in 0..p.size {
        chain.push(start as u16);
        extend(&mut chain, &succ, &mut faces, &mut total, face_cap)?;
        chain.pop();
    }
    Ok(FaceComplex { faces })
}

/// Sparse column over a prime field, sorted by row index.
type GfpCol = Vec<(u32, u64)>;

fn gfp_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn gfp_sub_scaled(target: &GfpCol, other: &GfpCol, factor: u64, p: u64) -> GfpCol {
    let mut out = Vec::with_capacity(target.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < other.len() {
        match (target.get(i), other.get(j)) {
            (Some(&(ri, vi)), Some(&(rj, vj))) if ri == rj => {
                let v = (vi + p - factor * vj % p) % p;
                if v != 0 {
                    out.push((ri, v));
                }
                i += 1;
                j += 1;
            }
            (Some(&(ri, vi)), Some(&(rj, _))) if ri < rj => {
                out.push((ri, vi));
                i += 1;
            }
            (Some(_), Some(&(rj, vj))) => {
                let v = (p - factor * vj % p) % p;
                if v != 0 {
                    out.push((rj, v));
                }
                j += 1;
            }
            (Some(&(ri, vi)), None) => {
                out.push((ri, vi));
                i += 1;
            }
            (None, Some(&(rj, vj))) => {
                let v = (p - factor * vj % p) % p;
                if v != 0 {
                    out.push((rj, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn rank_gfp(columns: Vec<GfpCol>, p: u64) -> usize {
    let mut pivots: HashMap<u32, GfpCol> = HashMap::new();
    let mut rank = 0usize;
    for mut col in columns {
        while let Some(&(low, val)) = col.last() {
            match pivots.get(&low) {
                Some(pivot) => {
                    let pivot_val = pivot.last().expect("pivot column is nonzero").1;
                    let factor = val * gfp_pow(pivot_val, p - 2, p) % p;
                    col = gfp_sub_scaled(&col, pivot, factor, p);
                }
                None => {
                    pivots.insert(low, col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Exact integer column, sorted by row; elimination is fraction-free with
/// content normalization so entries stay small.
type ExactCol = Vec<(u32, num_bigint::BigInt)>;

fn exact_normalize(col: &mut ExactCol) {
    use num_traits::Zero;
    let mut gcd = num_bigint::BigInt::zero();
    for (_, v) in col.iter() {
        gcd = num_integer_gcd(&gcd, v);
    }
    if !gcd.is_zero() && gcd != num_bigint::BigInt::from(1) {
        for (_, v) in col.iter_mut() {
            *v = &*v / &gcd;
        }
    }
}

fn num_integer_gcd(a: &num_bigint::BigInt, b: &num_bigint::BigInt) -> num_bigint::BigInt {
    use num_traits::{Signed, Zero};
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn exact_cancel(target: &ExactCol, pivot: &ExactCol) -> ExactCol {
    use num_traits::Zero;
    let t_low = &target.last().expect("nonzero").1;
    let p_low = &pivot.last().expect("nonzero").1;
    let mut out: ExactCol = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let next = match (target.get(i), pivot.get(j)) {
            (Some((ri, vi)), Some((rj, vj))) if ri == rj => {
                i += 1;
                j += 1;
                (*ri, vi * p_low - vj * t_low)
            }
            (Some((ri, vi)), Some((rj, _))) if ri < rj => {
                i += 1;
                (*ri, vi * p_low)
            }
            (Some(_), Some((rj, vj))) => {
                j += 1;
                (*rj, -(vj * t_low))
            }
            (Some((ri, vi)), None) => {
                i += 1;
                (*ri, vi * p_low)
            }
            (None, Some((rj, vj))) => {
                j += 1;
                (*rj, -(vj * t_low))
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    exact_normalize(&mut out);
    out
}

fn rank_exact(columns: Vec<ExactCol>) -> usize {
    let mut pivots: HashMap<u32, ExactCol> = HashMap::new();
    let mut rank = 0usize;
    for mut col in columns {
        while let Some((low, _)) = col.last() {
            match pivots.get(low) {
                Some(pivot) => {
                    col = exact_cancel(&col, pivot);
                }
                None => {
                    pivots.insert(*low, col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn boundary_rank(lower: &[Box<[u16]>], upper: &[Box<[u16]>], characteristic: FieldChar) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let index: HashMap<&[u16], u32> = lower
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_ref(), i as u32))
        .collect();
    let mut facet = Vec::with_capacity(upper[0].len() - 1);
    match characteristic {
        FieldChar::Prime(p) => {
            let p = p as u64;
            let columns: Vec<GfpCol> = upper
                .iter()
                .map(|face| {
                    let mut col: GfpCol = Vec::with_capacity(face.len());
                    for j in 0..face.len() {
                        facet.clear();
                        facet.extend(
                            face.iter()
                                .enumerate()
                                .filter(|(k, _)| *k != j)
                                .map(|(_, &v)| v),
                        );
                        let row = *index.get(facet.as_slice()).expect("facet is a face");
                        let val = if j % 2 == 0 { 1 } else { p - 1 };
                        col.push((row, val));
                    }
                    col.sort_unstable_by_key(|&(r, _)| r);
                    col
                })
                .collect();
            rank_gfp(columns, p)
        }
        FieldChar::Zero => {
            let columns: Vec<ExactCol> = upper
                .iter()
                .map(|face| {
                    let mut col: ExactCol = Vec::with_capacity(face.len());
                    for j in 0..face.len() {
                        facet.clear();
                        facet.extend(
                            face.iter()
                                .enumerate()
                                .filter(|(k, _)| *k != j)
                                .map(|(_, &v)| v),
                        );
                        let row = *index.get(facet.as_slice()).expect("facet is a face");
                        let val = num_bigint::BigInt::from(if j % 2 == 0 { 1 } else { -1 });
                        col.push((row, val));
                    }
                    col.sort_unstable_by_key(|&(r, _)| r);
                    col
                })
                .collect();
            rank_exact(columns)
        }
    }
}

/// Reduced homology dimensions of a face complex (empty face included), as a
/// map from degree to a nonzero dimension. The complex `{∅}` (no vertices)
/// has exactly one reduced homology class in degree -1.
fn reduced_dims(complex: &FaceComplex, characteristic: FieldChar) -> BTreeMap<i32, usize> {
    let mut dims = BTreeMap::new();
    let counts: Vec<usize> = complex.faces.iter().map(|f| f.len()).collect();
    if counts.is_empty() || counts[0] == 0 {
        dims.insert(-1, 1);
        return dims;
    }
    let max_dim = counts.len() - 1;
    // ranks[k] = rank of boundary map from k-faces, with the augmentation at
    // k = 0 and zero beyond the top dimension
    let mut ranks = vec![0usize; max_dim + 2];
    ranks[0] = 1;
    for (k, slot) in ranks.iter_mut().enumerate().take(max_dim + 1).skip(1) {
        *slot = boundary_rank(&complex.faces[k - 1], &complex.faces[k], characteristic);
    }
    for (k, &count) in counts.iter().enumerate() {
        let dim = count
            .checked_sub(ranks[k])
            .and_then(|x| x.checked_sub(ranks[k + 1]))
            .expect("boundary ranks exceed face counts; rank engine bug");
        if dim > 0 {
            dims.insert(k as i32, dim);
        }
    }
    // Euler characteristic consistency of the rank computations
    let chi_faces: i64 = counts.iter().enumerate().fold(-1i64, |acc, (k, &c)| {
        acc + if k % 2 == 0 { c as i64 } else { -(c as i64) }
    });
    let chi_dims: i64 = dims
        .iter()
        .map(|(&k, &d)| {
            if k.rem_euclid(2) == 0 {
                d as i64
            } else {
                -(d as i64)
            }
        })
        .sum();
    assert_eq!(
        chi_faces, chi_dims,
        "boundary ranks are inconsistent with the Euler characteristic"
    );
    dims
}

/// Reduced homology of the order complex of a set of monomials ordered by
/// divisibility. An empty input denotes the empty open interval, whose order
/// complex is the irrelevant complex: one class in degree -1.
pub fn order_complex_homology(
    elements: &[Monomial],
    characteristic: FieldChar,
) -> Result<BTreeMap<i32, usize>> {
    order_complex_homology_with(elements, characteristic, DEFAULT_FACE_CAP)
}

fn order_complex_homology_with(
    elements: &[Monomial],
    characteristic: FieldChar,
    face_cap: usize,
) -> Result<BTreeMap<i32, usize>> {
    if elements.is_empty() {
        let mut dims = BTreeMap::new();
        dims.insert(-1, 1);
        return Ok(dims);
    }
    if let Some(bad) = elements.iter().find(|m| m.nvars() != elements[0].nvars()) {
        return Err(Error::RingMismatch {
            expected: elements[0].nvars(),
            got: bad.nvars(),
        });
    }
    let poset = Poset::from_monomials(elements);
    poset_homology(poset, characteristic, face_cap)
}

fn poset_homology(
    poset: Poset,
    characteristic: FieldChar,
    face_cap: usize,
) -> Result<BTreeMap<i32, usize>> {
    match poset_core(poset) {
        CoreOutcome::Contractible => Ok(BTreeMap::new()),
        CoreOutcome::Core(core) => {
            let complex = order_complex(&core, face_cap)?;
            Ok(reduced_dims(&complex, characteristic))
        }
    }
}

// ---------------------------------------------------------------------------
// Betti tables and depth

/// Multigraded Betti numbers of `S/I` with the derived projective dimension
/// and depth. Entries are keyed by homological index and multidegree; only
/// nonzero values are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub characteristic: FieldChar,
    pub entries: BTreeMap<(u32, Monomial), usize>,
    pub pd: u32,
    pub depth_quotient: u32,
}

impl BettiTable {
    pub fn beta(&self, i: u32, multidegree: &Monomial) -> usize {
        self.entries
            .get(&(i, multidegree.clone()))
            .copied()
            .unwrap_or(0)
    }
}

/// Caps for the lattice route.
#[derive(Debug, Clone)]
pub struct BettiConfig {
    pub max_gens: usize,
    pub face_cap: usize,
}

impl Default for BettiConfig {
    fn default() -> Self {
        BettiConfig {
            max_gens: DEFAULT_GENERATOR_CAP,
            face_cap: DEFAULT_FACE_CAP,
        }
    }
}

fn table_from_entries(
    n: usize,
    characteristic: FieldChar,
    entries: BTreeMap<(u32, Monomial), usize>,
) -> BettiTable {
    let pd = entries
        .keys()
        .map(|(i, _)| *i)
        .max()
        .expect("beta_1 is nonzero for a proper nonzero ideal");
    assert!(
        (pd as usize) <= n,
        "projective dimension exceeded the variable count; rank engine bug"
    );
    BettiTable {
        characteristic,
        entries,
        pd,
        depth_quotient: n as u32 - pd,
    }
}

/// Betti numbers via open-interval homology in the lcm lattice.
pub fn betti_lcm(ideal: &MonomialIdeal, characteristic: FieldChar) -> Result<BettiTable> {
    betti_lcm_with(ideal, characteristic, &BettiConfig::default())
}

pub fn betti_lcm_with(
    ideal: &MonomialIdeal,
    characteristic: FieldChar,
    config: &BettiConfig,
) -> Result<BettiTable> {
    let lattice = lcm_lattice_with_cap(ideal, config.max_gens)?;
    let mut entries = BTreeMap::new();
    for idx in 1..lattice.elements().len() {
        let interval: Vec<Monomial> = lattice
            .open_interval_below(idx)
            .into_iter()
            .map(|j| lattice.elements()[j].clone())
            .collect();
        let dims = order_complex_homology_with(&interval, characteristic, config.face_cap)?;
        for (k, dim) in dims {
            let i = (k + 2) as u32;
            entries.insert((i, lattice.elements()[idx].clone()), dim);
        }
    }
    Ok(table_from_entries(ideal.nvars(), characteristic, entries))
}

/// Generator cap for the Taylor oracle; the complex is exponential in it.
pub const TAYLOR_GENERATOR_CAP: usize = 12;

/// Betti numbers via the Taylor-complex restriction: for each multidegree
/// `a` arising as an lcm of generators, the faces are the generator subsets
/// whose lcm divides `x^a` properly.
pub fn betti_taylor(ideal: &MonomialIdeal, characteristic: FieldChar) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let m = ideal.num_gens();
    if m > TAYLOR_GENERATOR_CAP {
        return Err(Error::GeneratorCapExceeded {
            count: m,
            cap: TAYLOR_GENERATOR_CAP,
        });
    }
    let gens = ideal.gens();
    let mut multidegrees: BTreeSet<Monomial> = BTreeSet::new();
    for mask in 1u32..(1 << m) {
        let mut lcm = Monomial::new(vec![0; ideal.nvars()]);
        for (j, g) in gens.iter().enumerate() {
            if mask >> j & 1 == 1 {
                lcm = lcm.lcm(g);
            }
        }
        multidegrees.insert(lcm);
    }

    let mut entries = BTreeMap::new();
    for a in multidegrees {
        let supported: Vec<u16> = (0..m)
            .filter(|&j| gens[j].divides(&a))
            .map(|j| j as u16)
            .collect();
        let k = supported.len();
        let mut faces: Vec<Vec<Box<[u16]>>> = Vec::new();
        for mask in 1u32..(1 << k) {
            let subset: Vec<u16> = (0..k)
                .filter(|&j| mask >> j & 1 == 1)
                .map(|j| supported[j])
                .collect();
            let mut lcm = Monomial::new(vec![0; ideal.nvars()]);
            for &j in &subset {
                lcm = lcm.lcm(&gens[j as usize]);
            }
            if lcm == a {
                continue;
            }
            let dim = subset.len() - 1;
            if faces.len() <= dim {
                faces.resize_with(dim + 1, Vec::new);
            }
            faces[dim].push(subset.into_boxed_slice());
        }
        let dims = reduced_dims(&FaceComplex { faces }, characteristic);
        for (k, dim) in dims {
            let i = (k + 2) as u32;
            entries.insert((i, a.clone()), dim);
        }
    }
    Ok(table_from_entries(ideal.nvars(), characteristic, entries))
}

/// `depth(S/I)` read off the lattice-route Betti table as `n - pd`.
pub fn depth_quotient(ideal: &MonomialIdeal, characteristic: FieldChar) -> Result<u32> {
    Ok(betti_lcm(ideal, characteristic)?.depth_quotient)
}

pub fn depth_quotient_with(
    ideal: &MonomialIdeal,
    characteristic: FieldChar,
    config: &BettiConfig,
) -> Result<u32> {
    Ok(betti_lcm_with(ideal, characteristic, config)?.depth_quotient)
}

/// `depth(I) = depth(S/I) + 1` for proper nonzero `I`.
pub fn depth_ideal(ideal: &MonomialIdeal, characteristic: FieldChar) -> Result<u32> {
    Ok(depth_quotient(ideal, characteristic)? + 1)
}

pub fn depth_ideal_with(
    ideal: &MonomialIdeal,
    characteristic: FieldChar,
    config: &BettiConfig,
) -> Result<u32> {
    Ok(depth_quotient_with(ideal, characteristic, config)? + 1)
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

    const P: FieldChar = DEFAULT_CHARACTERISTIC;

    #[test]
    fn empty_interval_is_irrelevant_complex() {
        let dims = order_complex_homology(&[], P).unwrap();
        assert_eq!(dims, BTreeMap::from([(-1, 1)]));
    }

    #[test]
    fn two_incomparable_points() {
        let dims = order_complex_homology(&[m(&[1, 0]), m(&[0, 1])], P).unwrap();
        assert_eq!(dims, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn chain_is_contractible() {
        let dims = order_complex_homology(&[m(&[1, 0]), m(&[1, 1]), m(&[2, 1])], P).unwrap();
        assert!(dims.is_empty());
    }

    #[test]
    fn boolean_lattice_proper_part_is_a_circle() {
        // proper part of B_3: six squarefree monomials, order complex a hexagon
        let elems = [
            m(&[1, 0, 0]),
            m(&[0, 1, 0]),
            m(&[0, 0, 1]),
            m(&[1, 1, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
        ];
        for characteristic in [P, FieldChar::Zero] {
            let dims = order_complex_homology(&elems, characteristic).unwrap();
            assert_eq!(dims, BTreeMap::from([(1, 1)]), "char {characteristic:?}");
        }
    }

    #[test]
    fn projective_plane_face_poset_sees_the_characteristic() {
        // minimal 6-vertex triangulation of the projective plane; every edge
        // lies in exactly two facets. The order complex of its face poset is
        // the barycentric subdivision, so reduced homology is 2-torsion:
        // nonzero in degrees 1 and 2 over F_2, zero over the rationals.
        let facets: [[usize; 3]; 10] = [
            [0, 1, 2],
            [0, 1, 3],
            [0, 2, 4],
            [0, 3, 5],
            [0, 4, 5],
            [1, 2, 5],
            [1, 3, 4],
            [1, 4, 5],
            [2, 3, 4],
            [2, 3, 5],
        ];
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &facets {
            for mask in 1u32..8 {
                let sub: Vec<usize> = (0..3).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                faces.insert(sub);
            }
        }
        let elements: Vec<Monomial> = faces
            .into_iter()
            .map(|f| {
                let mut exps = vec![0u32; 6];
                for v in f {
                    exps[v] = 1;
                }
                Monomial::new(exps)
            })
            .collect();
        assert_eq!(elements.len(), 6 + 15 + 10);

        let mod2 = order_complex_homology(&elements, FieldChar::Prime(2)).unwrap();
        assert_eq!(mod2, BTreeMap::from([(1, 1), (2, 1)]));
        for characteristic in [FieldChar::Zero, P] {
            let dims = order_complex_homology(&elements, characteristic).unwrap();
            assert!(dims.is_empty(), "char {characteristic:?}: {dims:?}");
        }
    }

    #[test]
    fn koszul_two_variables() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let t = betti_lcm(&i, P).unwrap();
        assert_eq!(t.beta(1, &m(&[1, 0])), 1);
        assert_eq!(t.beta(1, &m(&[0, 1])), 1);
        assert_eq!(t.beta(2, &m(&[1, 1])), 1);
        assert_eq!((t.pd, t.depth_quotient), (2, 0));
    }

    #[test]
    fn principal_ideal_depth() {
        let i = ideal(2, &[&[1, 1]]);
        let t = betti_lcm(&i, P).unwrap();
        assert_eq!((t.pd, t.depth_quotient), (1, 1));
    }

    #[test]
    fn triangle_ideal_table() {
        // (x1x2, x1x3, x2x3): three generators, two syzygies at x1x2x3
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let lcm_route = betti_lcm(&i, P).unwrap();
        let taylor_route = betti_taylor(&i, P).unwrap();
        assert_eq!(lcm_route, taylor_route);
        assert_eq!(lcm_route.beta(2, &m(&[1, 1, 1])), 2);
        assert_eq!((lcm_route.pd, lcm_route.depth_quotient), (2, 1));
    }

    #[test]
    fn mixed_ideal_depth_two() {
        // (x2, x1x3): depth_quotient 1, depth_ideal 2, cross-checked by Taylor
        let i = ideal(3, &[&[0, 1, 0], &[1, 0, 1]]);
        assert_eq!(depth_quotient(&i, P).unwrap(), 1);
        assert_eq!(depth_ideal(&i, P).unwrap(), 2);
        assert_eq!(betti_taylor(&i, P).unwrap().depth_quotient, 1);
    }

    #[test]
    fn maximal_ideal_depth() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(depth_quotient(&i, P).unwrap(), 0);
        assert_eq!(depth_ideal(&i, P).unwrap(), 1);
    }

    #[test]
    fn star_intersections_have_depth_s_minus_1() {
        // (x1,x2) ∩ (x3,x4): two primes with private variables, s = 2
        let pair = ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])
            .intersect(&ideal(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]))
            .unwrap();
        assert_eq!(depth_quotient(&pair, P).unwrap(), 1);
        // (x1) ∩ (x2) ∩ (x3) = (x1x2x3), s = 3
        let product = ideal(3, &[&[1, 1, 1]]);
        assert_eq!(depth_quotient(&product, P).unwrap(), 2);
    }

    #[test]
    fn taylor_oracle_agrees_on_both_characteristics() {
        let samples = [
            ideal(3, &[&[2, 1, 0], &[0, 1, 2], &[1, 0, 1]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]),
            ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1], &[1, 0, 1, 0]]),
            ideal(2, &[&[3, 0], &[2, 1], &[0, 2]]),
        ];
        for i in &samples {
            for characteristic in [P, FieldChar::Zero] {
                let a = betti_lcm(i, characteristic).unwrap();
                let b = betti_taylor(i, characteristic).unwrap();
                assert_eq!(a, b, "ideal {i:?} char {characteristic:?}");
            }
        }
    }

    #[test]
    fn oracle_agreement_on_powers_of_the_maximal_ideal() {
        // dense lattices whose big intervals exercise the closure reductions
        for (n, d, expected_pd) in [(3usize, 2u32, 3u32), (3, 3, 3), (4, 2, 4)] {
            let ring = crate::ring::Ring::new(n).unwrap();
            let gens: Vec<Monomial> = ring.monomials_of_degree(d).collect();
            let power = MonomialIdeal::new(n, gens).unwrap();
            for characteristic in [P, FieldChar::Zero] {
                let a = betti_lcm(&power, characteristic).unwrap();
                let b = betti_taylor(&power, characteristic).unwrap();
                assert_eq!(a, b, "m^{d} in n={n}, char {characteristic:?}");
                assert_eq!(a.pd, expected_pd);
                assert_eq!(a.depth_quotient, 0);
            }
        }
    }

    #[test]
    fn four_cycle_ideal_table() {
        // (x1x2, x2x3, x3x4, x1x4): pd 3, depth_quotient 1, and the top
        // multidegree carries the circle homology of the interval
        let i = ideal(
            4,
            &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]],
        );
        for characteristic in [P, FieldChar::Zero] {
            let a = betti_lcm(&i, characteristic).unwrap();
            let b = betti_taylor(&i, characteristic).unwrap();
            assert_eq!(a, b);
            assert_eq!((a.pd, a.depth_quotient), (3, 1));
            assert_eq!(a.beta(3, &m(&[1, 1, 1, 1])), 1);
        }
    }

    #[test]
    fn characteristic_validation() {
        assert_eq!(FieldChar::from_u64(0).unwrap(), FieldChar::Zero);
        assert_eq!(FieldChar::from_u64(32003).unwrap(), FieldChar::Prime(32003));
        assert!(FieldChar::from_u64(32004).is_err());
        assert!(FieldChar::from_u64(1).is_err());
    }

    #[test]
    fn beta_one_sits_exactly_on_generators() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 1, 2], &[1, 0, 1]]);
        let t = betti_lcm(&i, P).unwrap();
        for g in i.gens() {
            assert_eq!(t.beta(1, g), 1);
        }
        let ones: Vec<&Monomial> = t
            .entries
            .keys()
            .filter(|(idx, _)| *idx == 1)
            .map(|(_, mm)| mm)
            .collect();
        assert_eq!(ones.len(), i.num_gens());
    }
}
