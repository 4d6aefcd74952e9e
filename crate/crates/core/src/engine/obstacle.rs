use super::derive::{derive, raw_dist, threshold};
use super::separate::separable;
use super::{PointSet, Rational, Result, Vector};

/// Finite-stage ε-k-obstacle test.
///
/// `obstacle` (indices into `set`) is an obstacle for the point `point` when
/// it is nonempty, lies at distance `>= eps` from the point, and every slice
/// of every stage `β < stages` of `derive(set, eps)` that contains the point
/// also meets the obstacle.
///
/// A slice of a stage containing `f` but missing `M` exists iff some
/// functional puts `f` strictly above every point of `M` in that stage, so
/// each stage costs one separation test of `{f}` against `M ∩ stage`.
pub fn check_obstacle(
    set: &PointSet,
    obstacle: &[usize],
    point: usize,
    eps: &Rational,
    stages: usize,
) -> Result<bool> {
    set.check_index(point)?;
    for &m in obstacle {
        set.check_index(m)?;
    }
    let bound = threshold(eps, set.norm())?;
    if obstacle.is_empty() {
        return Ok(false);
    }
    let f = set.point(point);
    if obstacle
        .iter()
        .any(|&m| raw_dist(f, set.point(m), set.norm()) < bound)
    {
        return Ok(false);
    }
    if stages == 0 {
        return Ok(true);
    }
    let trace = derive(set, eps)?;
    for beta in 0..stages {
        let stage = trace.stage(beta);
        if !stage.contains(&point) {
            // no slice of this or any later stage contains f
            break;
        }
        let blockers: Vec<&Vector> = obstacle
            .iter()
            .filter(|m| stage.contains(m))
            .map(|&m| set.point(m))
            .collect();
        if separable(&[f], &blockers) {
            return Ok(false);
        }
    }
    Ok(true)
}
