//! The shift `τ_m` on a finite truncation of `ℓ₁([0, ω])`.
//!
//! Coordinates `0..dim-1` model the integers and the last coordinate models
//! `ω`. `τ_m` moves integer coordinates up by `m` and fixes the ω slot.

use num_traits::Zero;

use super::{EngineError, PointSet, Rational, Result, Vector};

pub fn shift(set: &PointSet, by: usize) -> Result<PointSet> {
    let finite = set.dim() - 1;
    let points = set
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| shift_point(p, finite, by).ok_or(EngineError::ShiftOverflow { point: i, by }))
        .collect::<Result<Vec<_>>>()?;
    PointSet::new(set.dim(), set.norm(), points)
}

fn shift_point(p: &Vector, finite: usize, by: usize) -> Option<Vector> {
    let coords = p.coords();
    let keep = finite.saturating_sub(by);
    if coords[keep..finite].iter().any(|c| !c.is_zero()) {
        return None;
    }
    let mut out = vec![Rational::zero(); coords.len()];
    for (dst, src) in out.iter_mut().skip(by).zip(&coords[..keep]) {
        *dst = src.clone();
    }
    out[finite] = coords[finite].clone();
    Some(Vector(out))
}
