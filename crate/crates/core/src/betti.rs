//! Graded Betti tables of monomial ideals over a characteristic-zero
//! field, computed by two independent algorithms:
//!
//! * `betti_koszul` - per-multidegree reduced simplicial homology of the
//!   upper Koszul complexes, ranging over the lcm lattice of the
//!   minimal generators;
//! * `betti_taylor` - the full Taylor complex, minimized by exact
//!   cancellation of scalar differential entries over the rationals.
//!
//! The two are mutual oracles: they must produce identical tables.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::linalg::rank_int;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poly::IntPoly;

/// Default generator guard for the Taylor complex (2^r summands).
pub const TAYLOR_MAX_GENERATORS: usize = 12;

/// Graded Betti numbers: `(homological index i, internal degree j) -> beta`.
/// The canonical stored object is the table of a cyclic quotient `R/I`
/// (a single entry `beta_{0,0} = 1` in column 0), but arbitrary module
/// tables (shifted column 0, negative degrees) are representable too.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    entries: BTreeMap<(u32, i64), u64>,
}

impl BettiTable {
    /// Validates: at least one entry, strictly positive multiplicities,
    /// and no gaps in homological degree.
    pub fn from_entries(entries: BTreeMap<(u32, i64), u64>) -> Result<Self> {
        let entries: BTreeMap<(u32, i64), u64> =
            entries.into_iter().filter(|&(_, beta)| beta > 0).collect();
        if entries.is_empty() {
            return Err(Error::Domain("empty Betti table".into()));
        }
        let pd = entries.keys().map(|&(i, _)| i).max().unwrap();
        let lo = entries.keys().map(|&(i, _)| i).min().unwrap();
        if lo != 0 {
            return Err(Error::Domain("Betti table must start at homological index 0".into()));
        }
        for i in 0..=pd {
            if !entries.keys().any(|&(k, _)| k == i) {
                return Err(Error::Domain(format!(
                    "gap in homological degree: no entries at index {i}"
                )));
            }
        }
        Ok(BettiTable { entries })
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, i64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn pd(&self) -> u32 {
        *self.entries.keys().map(|(i, _)| i).max().unwrap()
    }

    pub fn entry(&self, i: u32, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Shifts and multiplicities in homological column `i`, sorted by shift.
    pub fn column(&self, i: u32) -> Vec<(i64, u64)> {
        self.entries
            .iter()
            .filter(|&(&(k, _), _)| k == i)
            .map(|(&(_, j), &b)| (j, b))
            .collect()
    }

    /// Total Betti number of column `i`.
    pub fn total(&self, i: u32) -> u64 {
        self.column(i).iter().map(|&(_, b)| b).sum()
    }

    /// True when `beta_{0,0} = 1` is the only index-0 entry.
    pub fn is_cyclic(&self) -> bool {
        self.column(0) == vec![(0, 1)]
    }

    /// `sum_i (-1)^i sum_j beta_{ij}` (the rank of the resolved module).
    pub fn alternating_rank(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(&(i, _), &b)| {
                let t = BigInt::from(b);
                if i % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum()
    }

    /// `sum_i (-1)^i sum_j beta_{ij} t^j`; degrees must be non-negative.
    pub fn alternating_numerator(&self) -> Result<IntPoly> {
        let mut acc = IntPoly::zero();
        for (&(i, j), &b) in &self.entries {
            if j < 0 {
                return Err(Error::Domain(
                    "alternating numerator needs non-negative degrees".into(),
                ));
            }
            let c = if i % 2 == 0 {
                BigInt::from(b)
            } else {
                -BigInt::from(b)
            };
            acc = acc.add(&IntPoly::term(c, j as usize));
        }
        Ok(acc)
    }

    /// The table of the twisted module `N(-s)`: every degree shifted by `s`.
    pub fn twist(&self, s: i64) -> BettiTable {
        let entries = self
            .entries
            .iter()
            .map(|(&(i, j), &b)| ((i, j + s), b))
            .collect();
        BettiTable { entries }
    }

    /// The table of a direct sum of `r` copies.
    pub fn scale(&self, r: u64) -> Result<BettiTable> {
        if r == 0 {
            return Err(Error::Input("scale factor must be positive".into()));
        }
        let entries = self.entries.iter().map(|(&k, &b)| (k, b * r)).collect();
        Ok(BettiTable { entries })
    }

    /// Entrywise sum (the table of a direct sum of modules).
    pub fn direct_sum(&self, other: &BettiTable) -> BettiTable {
        let mut entries = self.entries.clone();
        for (&k, &b) in &other.entries {
            *entries.entry(k).or_insert(0) += b;
        }
        BettiTable { entries }
    }
}

/// Extremal shifts and purity data extracted from a Betti table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResolutionStats {
    /// `m_i`: minimum shift in each homological column, indices `0..=pd`.
    pub min_shifts: Vec<i64>,
    /// `M_i`: maximum shift in each homological column, indices `0..=pd`.
    pub max_shifts: Vec<i64>,
    /// `m_i = M_i` for all `i`.
    pub is_pure: bool,
    /// `m_i >= M_{i-1}` for `1 <= i <= pd`.
    pub is_quasi_pure: bool,
    /// `max (j - i)` over all entries.
    pub regularity: i64,
}

pub fn stats(table: &BettiTable) -> ResolutionStats {
    let pd = table.pd();
    let mut min_shifts = Vec::with_capacity(pd as usize + 1);
    let mut max_shifts = Vec::with_capacity(pd as usize + 1);
    for i in 0..=pd {
        let col = table.column(i);
        min_shifts.push(col.first().unwrap().0);
        max_shifts.push(col.last().unwrap().0);
    }
    let is_pure = min_shifts == max_shifts;
    let is_quasi_pure =
        (1..=pd as usize).all(|i| min_shifts[i] >= max_shifts[i - 1]);
    let regularity = table
        .entries()
        .map(|(i, j, _)| j - i as i64)
        .max()
        .unwrap();
    ResolutionStats {
        min_shifts,
        max_shifts,
        is_pure,
        is_quasi_pure,
        regularity,
    }
}

/// Betti table of `R/I` from upper Koszul simplicial homology over the
/// lcm lattice of the minimal generators.
pub fn betti_koszul(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::Domain(
            "Betti table requires a proper nonzero ideal".into(),
        ));
    }
    let gens = ideal.generators();
    let mut lattice: BTreeSet<Monomial> = gens.iter().cloned().collect();
    loop {
        let mut fresh: Vec<Monomial> = Vec::new();
        for m in &lattice {
            for g in gens {
                let l = m.lcm(g);
                if !lattice.contains(&l) {
                    fresh.push(l);
                }
            }
        }
        fresh.sort();
        fresh.dedup();
        if fresh.is_empty() {
            break;
        }
        lattice.extend(fresh);
    }

    let mut entries: BTreeMap<(u32, i64), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);
    for m in &lattice {
        for (i, dim) in upper_koszul_homology(ideal, m)?.into_iter().enumerate() {
            if dim > 0 {
                *entries
                    .entry((i as u32 + 1, m.total_degree() as i64))
                    .or_insert(0) += dim;
            }
        }
    }
    BettiTable::from_entries(entries)
}

/// Reduced homology dimensions of the upper Koszul complex of `ideal` in
/// multidegree `m`: entry `i` is `dim H~_{i-1}`, which equals
/// `beta_{i,m}` of the ideal.
fn upper_koszul_homology(ideal: &MonomialIdeal, m: &Monomial) -> Result<Vec<u64>> {
    let supp: Vec<usize> = (0..m.ambient_n()).filter(|&v| m.exponent(v) > 0).collect();
    let s = supp.len();

    // faces are subsets S of the support with m / prod(S) still in the ideal
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..(1 << s) {
        let mut exps = m.exponents().to_vec();
        for (bit, &v) in supp.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                exps[v] -= 1;
            }
        }
        if ideal.contains(&Monomial::new(exps))? {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    debug_assert_eq!(by_size[0], vec![0], "lattice degree must lie in the ideal");

    // boundary ranks between consecutive sizes
    let mut ranks = vec![0usize; s + 2];
    for k in 1..=s {
        if by_size[k].is_empty() || by_size[k - 1].is_empty() {
            continue;
        }
        let row_pos: BTreeMap<u32, usize> = by_size[k - 1]
            .iter()
            .enumerate()
            .map(|(idx, &f)| (f, idx))
            .collect();
        let mut mat = vec![vec![BigInt::zero(); by_size[k].len()]; by_size[k - 1].len()];
        for (cj, &face) in by_size[k].iter().enumerate() {
            let mut sign_idx = 0;
            for bit in 0..s {
                if face >> bit & 1 == 1 {
                    let sub = face & !(1 << bit);
                    let r = row_pos[&sub];
                    mat[r][cj] = if sign_idx % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    };
                    sign_idx += 1;
                }
            }
        }
        ranks[k] = rank_int(mat);
    }

    Ok((0..=s)
        .map(|i| {
            let dim = by_size[i].len() as i64 - ranks[i] as i64 - ranks[i + 1] as i64;
            debug_assert!(dim >= 0, "negative homology dimension");
            dim as u64
        })
        .collect())
}

/// Betti table of `R/I` from the Taylor complex with the default guard.
pub fn betti_taylor(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_taylor_guarded(ideal, TAYLOR_MAX_GENERATORS)
}

/// Taylor complex on the minimal generators (one term per subset, shift
/// the degree of the subset's lcm), minimized by cancelling scalar
/// differential entries with exact rational elimination.
pub fn betti_taylor_guarded(ideal: &MonomialIdeal, max_gens: usize) -> Result<BettiTable> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::Domain(
            "Betti table requires a proper nonzero ideal".into(),
        ));
    }
    let gens = ideal.generators();
    let r = gens.len();
    if r > max_gens {
        return Err(Error::Capacity(format!(
            "Taylor complex on {r} generators exceeds the guard of {max_gens}"
        )));
    }

    let full = 1usize << r;
    // lcm of each generator subset
    let mut lcms: Vec<Monomial> = Vec::with_capacity(full);
    lcms.push(Monomial::one(ideal.ambient_n()));
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        lcms.push(lcms[rest].lcm(&gens[low]));
    }

    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); r + 1];
    for (mask, _) in lcms.iter().enumerate() {
        levels[mask.count_ones() as usize].push(mask);
    }
    let mut pos = vec![0usize; full];
    for lvl in &levels {
        for (k, &mask) in lvl.iter().enumerate() {
            pos[mask] = k;
        }
    }

    // diff[i-1] is the matrix of level i -> level i-1
    let mut diff: Vec<Vec<Vec<BigRational>>> = Vec::with_capacity(r);
    for i in 1..=r {
        let mut mat = vec![vec![BigRational::zero(); levels[i].len()]; levels[i - 1].len()];
        for (cj, &smask) in levels[i].iter().enumerate() {
            let mut sign_idx = 0;
            for g in 0..r {
                if smask >> g & 1 == 1 {
                    let rmask = smask & !(1 << g);
                    let one = BigRational::one();
                    mat[pos[rmask]][cj] = if sign_idx % 2 == 0 { one } else { -one };
                    sign_idx += 1;
                }
            }
        }
        diff.push(mat);
    }

    // only summand pairs with equal multidegree can ever carry a scalar entry
    let mut candidates: Vec<(usize, usize, usize)> = Vec::new();
    for i in 1..=r {
        for (rk, &rmask) in levels[i - 1].iter().enumerate() {
            for (ck, &cmask) in levels[i].iter().enumerate() {
                if lcms[rmask] == lcms[cmask] {
                    candidates.push((i, rk, ck));
                }
            }
        }
    }

    let mut alive: Vec<Vec<bool>> = levels.iter().map(|l| vec![true; l.len()]).collect();
    while let Some(&(i, a, b)) = candidates.iter().find(|&&(i, rk, ck)| {
        alive[i - 1][rk] && alive[i][ck] && !diff[i - 1][rk][ck].is_zero()
    }) {
        let u = diff[i - 1][a][b].clone();
        let col_nz: Vec<(usize, BigRational)> = (0..levels[i - 1].len())
            .filter(|&rk| rk != a && alive[i - 1][rk] && !diff[i - 1][rk][b].is_zero())
            .map(|rk| (rk, diff[i - 1][rk][b].clone()))
            .collect();
        let row_nz: Vec<(usize, BigRational)> = (0..levels[i].len())
            .filter(|&ck| ck != b && alive[i][ck] && !diff[i - 1][a][ck].is_zero())
            .map(|ck| (ck, diff[i - 1][a][ck].clone()))
            .collect();
        for (rk, fr) in &col_nz {
            for (ck, fc) in &row_nz {
                let delta = fr * fc / &u;
                diff[i - 1][*rk][*ck] = &diff[i - 1][*rk][*ck] - delta;
            }
        }
        // the cancelled pair drops out; adjacent differentials only lose
        // a row/column, which the alive mask already encodes
        alive[i - 1][a] = false;
        alive[i][b] = false;
    }

    let mut entries: BTreeMap<(u32, i64), u64> = BTreeMap::new();
    for (i, lvl) in levels.iter().enumerate() {
        for (k, &mask) in lvl.iter().enumerate() {
            if alive[i][k] {
                *entries
                    .entry((i as u32, lcms[mask].total_degree() as i64))
                    .or_insert(0) += 1;
            }
        }
    }
    BettiTable::from_entries(entries)
}
