//! Symbolic arithmetic on resolution shapes: twists, the basic double
//! G-link mapping cone, the hypersurface-section cone, the restricted
//! splitting-cancellation rule, and the inequality hypotheses under
//! which basic double links preserve the multiplicity bounds.
//!
//! A shape records, per homological degree, the multiset of shifts of a
//! (not necessarily minimal) graded free resolution of a cyclic quotient.

use std::collections::BTreeMap;

use num::BigInt;

use crate::betti::{BettiTable, ResolutionStats};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Which block of the basic-double-link cone a summand came from.
/// Only `FTwisted`-vs-`GTwisted` pairs are ever allowed to cancel.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Provenance {
    /// Level-0 free module of the quotient.
    Base,
    /// `F_i`, kept untwisted at level `i`.
    FPlain,
    /// `F_{i-1}(-d)`, sitting at level `i`.
    FTwisted,
    /// `G_i(-d)`, sitting at level `i`.
    GTwisted,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Summand {
    pub shift: i64,
    pub provenance: Option<Provenance>,
}

/// Per-homological-degree multisets of shifts. Levels are kept sorted,
/// so equality is multiset equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResolutionShape {
    levels: Vec<Vec<Summand>>,
}

impl ResolutionShape {
    pub fn from_levels(levels: Vec<Vec<i64>>) -> Self {
        let levels = levels
            .into_iter()
            .map(|lvl| {
                let mut v: Vec<Summand> = lvl
                    .into_iter()
                    .map(|shift| Summand {
                        shift,
                        provenance: None,
                    })
                    .collect();
                v.sort();
                v
            })
            .collect();
        ResolutionShape { levels }.trimmed()
    }

    fn from_tagged(levels: Vec<Vec<(i64, Provenance)>>) -> Self {
        let levels = levels
            .into_iter()
            .map(|lvl| {
                let mut v: Vec<Summand> = lvl
                    .into_iter()
                    .map(|(shift, p)| Summand {
                        shift,
                        provenance: Some(p),
                    })
                    .collect();
                v.sort();
                v
            })
            .collect();
        ResolutionShape { levels }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.levels.last().is_some_and(Vec::is_empty) {
            self.levels.pop();
        }
        self
    }

    pub fn from_betti(table: &BettiTable) -> Self {
        let mut levels = vec![Vec::new(); table.pd() as usize + 1];
        for (i, j, beta) in table.entries() {
            for _ in 0..beta {
                levels[i as usize].push(j);
            }
        }
        ResolutionShape::from_levels(levels)
    }

    pub fn to_betti(&self) -> Result<BettiTable> {
        let mut entries: BTreeMap<(u32, i64), u64> = BTreeMap::new();
        for (i, lvl) in self.levels.iter().enumerate() {
            for s in lvl {
                *entries.entry((i as u32, s.shift)).or_insert(0) += 1;
            }
        }
        BettiTable::from_entries(entries)
    }

    pub fn pd(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn level(&self, i: usize) -> &[Summand] {
        self.levels.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn levels(&self) -> &[Vec<Summand>] {
        &self.levels
    }

    /// Shifts of level `i`, sorted.
    pub fn level_shifts(&self, i: usize) -> Vec<i64> {
        self.level(i).iter().map(|s| s.shift).collect()
    }

    /// True when level 0 is a single free summand generated in degree 0.
    pub fn is_cyclic(&self) -> bool {
        self.level_shifts(0) == vec![0]
    }

    /// `sum_i (-1)^i sum_shifts t^shift`; an Euler-characteristic
    /// invariant, so it is insensitive to non-minimality.
    pub fn numerator(&self) -> Result<IntPoly> {
        let mut acc = IntPoly::zero();
        for (i, lvl) in self.levels.iter().enumerate() {
            for s in lvl {
                if s.shift < 0 {
                    return Err(Error::Domain(
                        "shape numerator needs non-negative shifts".into(),
                    ));
                }
                let c = if i % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                acc = acc.add(&IntPoly::term(c, s.shift as usize));
            }
        }
        Ok(acc)
    }
}

fn require_cyclic(shape: &ResolutionShape, name: &str) -> Result<()> {
    if !shape.is_cyclic() {
        return Err(Error::Domain(format!(
            "{name} must resolve a cyclic quotient (level 0 = one shift-0 summand), got {:?}",
            shape.level_shifts(0)
        )));
    }
    Ok(())
}

/// Mapping cone over `0 -> I(-d) -> J(-d) + I -> J_1 -> 0` for the basic
/// double link `J_1 = I + L*J`, `deg L = d`:
///
///   level 1       = F_1 u G_1(-d)
///   level i (>=2) = F_{i-1}(-d) u G_i(-d) u F_i
///
/// Every summand carries its provenance so the splitting rule can be
/// applied later. The result may be non-minimal.
pub fn cone_basic_double_link(
    f: &ResolutionShape,
    g: &ResolutionShape,
    d: u32,
) -> Result<ResolutionShape> {
    if d == 0 {
        return Err(Error::Input("the link form must have positive degree".into()));
    }
    require_cyclic(f, "F")?;
    require_cyclic(g, "G")?;
    let d = d as i64;
    let top = (f.pd() + 1).max(g.pd());
    let mut levels: Vec<Vec<(i64, Provenance)>> = vec![vec![(0, Provenance::Base)]];
    for i in 1..=top {
        let mut lvl: Vec<(i64, Provenance)> = Vec::new();
        if i >= 2 {
            for s in f.level(i - 1) {
                lvl.push((s.shift + d, Provenance::FTwisted));
            }
        }
        for s in g.level(i) {
            lvl.push((s.shift + d, Provenance::GTwisted));
        }
        for s in f.level(i) {
            lvl.push((s.shift, Provenance::FPlain));
        }
        levels.push(lvl);
    }
    Ok(ResolutionShape::from_tagged(levels))
}

/// Mapping cone over `0 -> I(-d) -> I + R(-d) -> J_1 -> 0` for the
/// hypersurface section `J_1 = I + (F)`, `deg F = d`, `I : F = I`:
///
///   level 1       = F_1 u {d}
///   level i (>=2) = F_{i-1}(-d) u F_i
///
/// No splitting is possible, so the result is already minimal.
pub fn cone_hypersurface(f: &ResolutionShape, d: u32) -> Result<ResolutionShape> {
    if d == 0 {
        return Err(Error::Input("the hypersurface must have positive degree".into()));
    }
    require_cyclic(f, "F")?;
    let d = d as i64;
    let mut levels: Vec<Vec<i64>> = vec![vec![0]];
    for i in 1..=f.pd() + 1 {
        let mut lvl: Vec<i64> = Vec::new();
        if i == 1 {
            lvl.push(d);
        } else {
            lvl.extend(f.level(i - 1).iter().map(|s| s.shift + d));
        }
        lvl.extend(f.level(i).iter().map(|s| s.shift));
        levels.push(lvl);
    }
    Ok(ResolutionShape::from_levels(levels))
}

/// Result of applying the splitting rule to a basic-double-link cone.
#[derive(Clone, Debug)]
pub struct CancelledCone {
    pub shape: ResolutionShape,
    /// When false, some cancelled pair shared its shift with a summand
    /// that survived at the same junction, so the table is only an
    /// entrywise upper bound on the minimal Betti numbers.
    pub unambiguous: bool,
}

/// Greedily cancels equal shifts between `F_i(-d)` at level `i+1` and
/// `G_i(-d)` at level `i` - the only pairing along which the cone can
/// fail to be minimal. Cancellation is maximal per shift value.
pub fn cancel_splittings(cone: &ResolutionShape) -> Result<CancelledCone> {
    for (i, lvl) in cone.levels().iter().enumerate() {
        if lvl.iter().any(|s| s.provenance.is_none()) {
            return Err(Error::Domain(format!(
                "level {i} carries untagged summands; only cone output can be cancelled"
            )));
        }
    }
    let mut levels: Vec<Vec<Summand>> = cone.levels().to_vec();
    let mut unambiguous = true;
    for i in 1..levels.len().saturating_sub(1) {
        // multiset intersection of shifts between the two families
        let g_counts = shift_counts(&levels[i], Provenance::GTwisted);
        let f_counts = shift_counts(&levels[i + 1], Provenance::FTwisted);
        for (&shift, &fc) in &f_counts {
            let gc = g_counts.get(&shift).copied().unwrap_or(0);
            let cancel = fc.min(gc);
            if cancel == 0 {
                continue;
            }
            remove_summands(&mut levels[i], shift, Provenance::GTwisted, cancel);
            remove_summands(&mut levels[i + 1], shift, Provenance::FTwisted, cancel);
            let leftover = levels[i].iter().chain(&levels[i + 1]).any(|s| s.shift == shift);
            if leftover {
                unambiguous = false;
            }
        }
    }
    let shape = ResolutionShape { levels }.trimmed();
    Ok(CancelledCone { shape, unambiguous })
}

fn shift_counts(level: &[Summand], which: Provenance) -> BTreeMap<i64, usize> {
    let mut counts = BTreeMap::new();
    for s in level {
        if s.provenance == Some(which) {
            *counts.entry(s.shift).or_insert(0) += 1;
        }
    }
    counts
}

fn remove_summands(level: &mut Vec<Summand>, shift: i64, which: Provenance, count: usize) {
    let mut left = count;
    level.retain(|s| {
        if left > 0 && s.shift == shift && s.provenance == Some(which) {
            left -= 1;
            false
        } else {
            true
        }
    });
    debug_assert_eq!(left, 0);
}

/// Which of the inequality hypotheses hold for a basic double link
/// `J_1 = I + L*J` with `deg L = d` and `codim I = c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BdlHypotheses {
    /// `M_i(J_1) >= M_i(J) + d` for `i = 1..=c+1` (upper-bound transfer).
    pub upper_from_j: Vec<bool>,
    /// `M_i(J_1) >= M_{i-1}(I) + d` for `i = 2..=c+1` (upper-bound transfer).
    pub upper_from_i: Vec<bool>,
    /// `m_i(J_1) <= m_{i-1}(I) + d` for `i = 2..=c+1` (lower-bound transfer).
    pub lower_from_i: Vec<bool>,
}

pub fn bdl_hypotheses(
    stats_i: &ResolutionStats,
    stats_j: &ResolutionStats,
    stats_j1: &ResolutionStats,
    d: u32,
    c: usize,
) -> Result<BdlHypotheses> {
    if d == 0 {
        return Err(Error::Input("the link form must have positive degree".into()));
    }
    let need = |stats: &ResolutionStats, len: usize, name: &str| -> Result<()> {
        if stats.max_shifts.len() < len {
            return Err(Error::Input(format!(
                "{name} resolution is too short: need shifts through index {}, have {}",
                len - 1,
                stats.max_shifts.len() - 1
            )));
        }
        Ok(())
    };
    need(stats_j1, c + 2, "J_1")?;
    need(stats_j, c + 2, "J")?;
    need(stats_i, c + 1, "I")?;
    let d = d as i64;
    let upper_from_j = (1..=c + 1)
        .map(|i| stats_j1.max_shifts[i] >= stats_j.max_shifts[i] + d)
        .collect();
    let upper_from_i = (2..=c + 1)
        .map(|i| stats_j1.max_shifts[i] >= stats_i.max_shifts[i - 1] + d)
        .collect();
    let lower_from_i = (2..=c + 1)
        .map(|i| stats_j1.min_shifts[i] <= stats_i.min_shifts[i - 1] + d)
        .collect();
    Ok(BdlHypotheses {
        upper_from_j,
        upper_from_i,
        lower_from_i,
    })
}
