use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::separate::separable;
use super::{EngineError, NormTag, PointSet, Rational, Result, Vector, MAX_NEIGHBORHOOD};

/// Distance under `norm`. For [`NormTag::L2`] this is the *squared*
/// distance; every comparison against ε squares ε accordingly.
pub fn dist(a: &Vector, b: &Vector, norm: NormTag) -> Result<Rational> {
    if a.dim() != b.dim() {
        return Err(EngineError::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(raw_dist(a, b, norm))
}

pub(crate) fn raw_dist(a: &Vector, b: &Vector, norm: NormTag) -> Rational {
    let diffs = a.coords().iter().zip(b.coords()).map(|(x, y)| x - y);
    match norm {
        NormTag::L1 => diffs.fold(Rational::zero(), |acc, d| acc + d.abs()),
        NormTag::L2 => diffs.fold(Rational::zero(), |acc, d| acc + &d * &d),
        NormTag::Linf => diffs.map(|d| d.abs()).max().unwrap_or_else(Rational::zero),
    }
}

/// Largest pairwise distance among `indices` of `set` (squared under L2).
pub fn diam(set: &PointSet, indices: &[usize]) -> Result<Rational> {
    if indices.is_empty() {
        return Err(EngineError::EmptySet);
    }
    for &i in indices {
        set.check_index(i)?;
    }
    let mut best = Rational::zero();
    for (k, &i) in indices.iter().enumerate() {
        for &j in &indices[k + 1..] {
            let d = raw_dist(set.point(i), set.point(j), set.norm());
            if d > best {
                best = d;
            }
        }
    }
    Ok(best)
}

/// ε in the units `raw_dist` reports: ε itself, or ε² under L2.
pub(crate) fn threshold(eps: &Rational, norm: NormTag) -> Result<Rational> {
    if !eps.is_positive() {
        return Err(EngineError::NonPositiveEpsilon);
    }
    Ok(match norm {
        NormTag::L2 => eps * eps,
        _ => eps.clone(),
    })
}

/// Whether point `x` of `set` lies in some slice of diameter `< eps`.
///
/// A slice containing `x` with diameter below ε stays inside the open
/// ε-ball around `x`, so only cliques of that neighbourhood (pairwise
/// distance `< eps`) containing `x` are candidates. Each candidate is tested
/// for strict/weak separation from the rest of the set.
pub fn removable(set: &PointSet, x: usize, eps: &Rational) -> Result<bool> {
    set.check_index(x)?;
    let bound = threshold(eps, set.norm())?;
    removable_within(set, x, &bound)
}

fn removable_within(set: &PointSet, x: usize, bound: &Rational) -> Result<bool> {
    let norm = set.norm();
    let center = set.point(x);
    let near: Vec<usize> = (0..set.len())
        .filter(|&y| y != x && raw_dist(center, set.point(y), norm) < *bound)
        .collect();
    if near.len() + 1 > MAX_NEIGHBORHOOD {
        return Err(EngineError::Capacity {
            size: near.len() + 1,
            limit: MAX_NEIGHBORHOOD,
        });
    }
    let close: Vec<Vec<bool>> = near
        .iter()
        .map(|&a| {
            near.iter()
                .map(|&b| raw_dist(set.point(a), set.point(b), norm) < *bound)
                .collect()
        })
        .collect();
    let mut chosen = Vec::with_capacity(near.len());
    Ok(search_cliques(set, x, &near, &close, 0, &mut chosen))
}

/// Depth-first over cliques of `near` extending `chosen`, smallest first.
fn search_cliques(
    set: &PointSet,
    x: usize,
    near: &[usize],
    close: &[Vec<bool>],
    from: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if slice_candidate(set, x, near, chosen) {
        return true;
    }
    for k in from..near.len() {
        if chosen.iter().all(|&c| close[c][k]) {
            chosen.push(k);
            let found = search_cliques(set, x, near, close, k + 1, chosen);
            chosen.pop();
            if found {
                return true;
            }
        }
    }
    false
}

fn slice_candidate(set: &PointSet, x: usize, near: &[usize], chosen: &[usize]) -> bool {
    let mut inside = vec![false; set.len()];
    inside[x] = true;
    for &c in chosen {
        inside[near[c]] = true;
    }
    let (s, t): (Vec<_>, Vec<_>) = (0..set.len()).partition(|&i| inside[i]);
    let s: Vec<&Vector> = s.iter().map(|&i| set.point(i)).collect();
    let t: Vec<&Vector> = t.iter().map(|&i| set.point(i)).collect();
    separable(&s, &t)
}

/// Indices of the points of `set` that survive one slice derivation.
/// Every point is tested against the same input set.
pub(crate) fn survivors(set: &PointSet, eps: &Rational) -> Result<Vec<usize>> {
    let bound = threshold(eps, set.norm())?;
    let removed: Vec<bool> = (0..set.len())
        .into_par_iter()
        .map(|x| removable_within(set, x, &bound))
        .collect::<Result<_>>()?;
    Ok((0..set.len()).filter(|&i| !removed[i]).collect())
}

/// One application of `d_ε`.
pub fn d_step(set: &PointSet, eps: &Rational) -> Result<PointSet> {
    Ok(set.subset(&survivors(set, eps)?))
}

/// One application of `s_ε`: on a finite set every singleton is relatively
/// open with diameter 0, so nothing survives.
pub fn s_step(set: &PointSet, eps: &Rational) -> Result<PointSet> {
    if !eps.is_positive() {
        return Err(EngineError::NonPositiveEpsilon);
    }
    PointSet::empty(set.dim(), set.norm())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank {
    Finite(usize),
    /// Survives every stage of a nonempty fixed point.
    Stable,
}

/// Iterated `d_ε` on a finite set. `stages[k]` holds the indices (into the
/// input) of `d_ε^k K`, ascending; stage 0 is the whole input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTrace {
    pub epsilon: Rational,
    pub stages: Vec<Vec<usize>>,
    pub ranks: Vec<Rank>,
    pub stabilized: bool,
}

impl DerivationTrace {
    pub fn rank(&self, i: usize) -> Rank {
        self.ranks[i]
    }

    /// Stage `k`, extended past the end of the trace: empty after the last
    /// stage, or the fixed point when stabilized.
    pub fn stage(&self, k: usize) -> &[usize] {
        match self.stages.get(k) {
            Some(s) => s,
            None if self.stabilized => self.stages.last().unwrap(),
            None => &[],
        }
    }

    /// First stage index at which the set is empty, if it ever is.
    pub fn empty_at(&self) -> Option<usize> {
        if self.stabilized {
            return None;
        }
        self.stages.iter().position(Vec::is_empty)
    }
}

pub fn derive(set: &PointSet, eps: &Rational) -> Result<DerivationTrace> {
    threshold(eps, set.norm())?;
    let mut stages = vec![(0..set.len()).collect::<Vec<_>>()];
    let mut stabilized = false;
    loop {
        let current = stages.last().unwrap();
        if current.is_empty() {
            break;
        }
        let sub = set.subset(current);
        let next: Vec<usize> = survivors(&sub, eps)?
            .into_iter()
            .map(|i| current[i])
            .collect();
        if next.len() == current.len() {
            stabilized = true;
            break;
        }
        stages.push(next);
    }
    let mut ranks = vec![Rank::Finite(0); set.len()];
    for (k, stage) in stages.iter().enumerate() {
        for &i in stage {
            ranks[i] = Rank::Finite(k);
        }
    }
    if stabilized {
        for &i in stages.last().unwrap() {
            ranks[i] = Rank::Stable;
        }
    }
    Ok(DerivationTrace {
        epsilon: eps.clone(),
        stages,
        ranks,
        stabilized,
    })
}
