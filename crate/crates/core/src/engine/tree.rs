//! Dyadic `(n, 1)`-trees on the positive face of the ℓ₁ unit sphere.
//!
//! Nodes use heap numbering `1..2^(n+1)` (root 1, children `2i`, `2i+1`)
//! and are stored at position `i - 1` of the point set. A node at depth `d`
//! spreads mass 1 evenly over a block of `2^(n-d)` consecutive coordinates;
//! its children split that block in half. Leaves are unit basis vectors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{EngineError, NormTag, PointSet, Rational, Result, Vector};

pub const MAX_TREE_DEPTH: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicTree {
    depth: usize,
    set: PointSet,
}

impl DyadicTree {
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn set(&self) -> &PointSet {
        &self.set
    }

    /// Position of the root in [`Self::set`].
    pub fn root(&self) -> usize {
        0
    }

    /// Depth of the node stored at position `pos`.
    pub fn node_depth(&self, pos: usize) -> usize {
        (pos + 1).ilog2() as usize
    }

    /// Positions of the two children of the node at `pos`, if it is internal.
    pub fn children(&self, pos: usize) -> Option<(usize, usize)> {
        let heap = pos + 1;
        (2 * heap < self.set.len()).then(|| (2 * heap - 1, 2 * heap))
    }
}

/// Unit basis vector `e_j` of dimension `dim`.
pub fn basis_point(j: usize, dim: usize) -> Result<Vector> {
    if j >= dim {
        return Err(EngineError::BasisIndex { index: j, dim });
    }
    let mut v = Vector::zeros(dim);
    v.0[j] = Rational::one();
    Ok(v)
}

pub fn make_dyadic_tree(depth: usize) -> Result<DyadicTree> {
    if !(1..=MAX_TREE_DEPTH).contains(&depth) {
        return Err(EngineError::TreeDepth(depth));
    }
    let dim = 1usize << depth;
    let nodes = (1usize << (depth + 1)) - 1;
    let points = (1..=nodes)
        .map(|heap| {
            let d = heap.ilog2() as usize;
            let width = dim >> d;
            let start = (heap - (1 << d)) * width;
            let value = Rational::new(BigInt::one(), BigInt::from(width));
            let mut v = Vector::zeros(dim);
            for c in &mut v.0[start..start + width] {
                *c = value.clone();
            }
            v
        })
        .collect();
    Ok(DyadicTree {
        depth,
        set: PointSet::new(dim, NormTag::L1, points)?,
    })
}

/// Checks the tree identities exactly: midpoints, sibling distance 2, and
/// membership in the positive face.
pub fn verify_tree(tree: &DyadicTree) -> bool {
    let set = tree.set();
    let two = Rational::from_integer(2.into());
    let on_face = set.points().iter().all(|p| {
        p.coords().iter().all(|c| *c >= Rational::zero()) && p.l1_norm() == Rational::one()
    });
    let midpoints = (0..set.len()).all(|pos| match tree.children(pos) {
        None => true,
        Some((a, b)) => {
            let (x, y) = (set.point(a), set.point(b));
            let mid: Vec<Rational> = x
                .coords()
                .iter()
                .zip(y.coords())
                .map(|(u, v)| (u + v) / &two)
                .collect();
            mid == set.point(pos).0 && super::derive::raw_dist(x, y, NormTag::L1) == two
        }
    });
    on_face && midpoints
}
