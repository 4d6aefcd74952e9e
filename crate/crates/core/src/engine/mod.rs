//! Finite, exact-rational model of the slice derivation `d_ε` and the
//! weak*-open derivation `s_ε`.
//!
//! A [`PointSet`] stands in for a weak*-compact set. On a finite set the
//! relative topology is discrete, so `s_ε` removes everything at once, while
//! `d_ε` only removes points that sit in a slice `K ∩ {f > t}` of norm
//! diameter below `ε`. Iterating `d_ε` gives a [`DerivationTrace`] with a
//! finite survival rank per point.
//!
//! All arithmetic is exact ([`Rational`]); there are no tolerances.

mod derive;
mod io;
mod obstacle;
mod separate;
mod shift;
mod tree;

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use derive::{d_step, derive, diam, dist, removable, s_step, DerivationTrace, Rank};
pub use io::parse_rational;
pub(crate) use io::rational_str as io_rational;
pub use obstacle::check_obstacle;
pub use separate::{hulls_intersect, separable};
pub use shift::shift;
pub use tree::{basis_point, make_dyadic_tree, verify_tree, DyadicTree, MAX_TREE_DEPTH};

pub type Rational = num_rational::BigRational;

/// Largest eps-neighbourhood `removable` will enumerate subsets of.
pub const MAX_NEIGHBORHOOD: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("duplicate point at index {0}")]
    DuplicatePoint(usize),
    #[error("point index {index} out of range for a set of {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("point is not a member of the set")]
    NotInSet,
    #[error("diameter of an empty set is undefined")]
    EmptySet,
    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
    #[error("neighbourhood of {size} points exceeds the enumeration limit of {limit}")]
    Capacity { size: usize, limit: usize },
    #[error("shift by {by} pushes mass of point {point} past the truncation")]
    ShiftOverflow { point: usize, by: usize },
    #[error("tree depth {0} outside 1..={MAX_TREE_DEPTH}")]
    TreeDepth(usize),
    #[error("basis index {index} out of range for dimension {dim}")]
    BasisIndex { index: usize, dim: usize },
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormTag {
    #[default]
    L1,
    L2,
    Linf,
}

impl FromStr for NormTag {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "l1" => Ok(NormTag::L1),
            "l2" => Ok(NormTag::L2),
            "linf" => Ok(NormTag::Linf),
            other => Err(EngineError::Format(format!("unknown norm {other:?}"))),
        }
    }
}

impl fmt::Display for NormTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormTag::L1 => "l1",
            NormTag::L2 => "l2",
            NormTag::Linf => "linf",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(
            coords
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn l1_norm(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, c| acc + c.abs())
    }
}

/// A weak*-slice `{y : f·y > t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceSpec {
    functional: Vector,
    threshold: Rational,
}

impl SliceSpec {
    pub fn new(functional: Vector, threshold: Rational) -> Result<Self> {
        if functional.is_zero() {
            return Err(EngineError::Format(
                "slice functional must be nonzero".into(),
            ));
        }
        Ok(SliceSpec {
            functional,
            threshold,
        })
    }

    pub fn contains(&self, y: &Vector) -> bool {
        self.functional.dot(y) > self.threshold
    }

    /// Indices of the points of `set` lying in the slice.
    pub fn apply(&self, set: &PointSet) -> Vec<usize> {
        (0..set.len())
            .filter(|&i| self.contains(set.point(i)))
            .collect()
    }
}

/// A finite set of distinct points of one dimension, under one norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    norm: NormTag,
    points: Vec<Vector>,
}

impl PointSet {
    pub fn new(dim: usize, norm: NormTag, points: Vec<Vector>) -> Result<Self> {
        if dim == 0 {
            return Err(EngineError::ZeroDimension);
        }
        for p in &points {
            if p.dim() != dim {
                return Err(EngineError::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        let mut sorted: Vec<(&Vector, usize)> = points.iter().zip(0..).collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(EngineError::DuplicatePoint(w[1].1));
        }
        Ok(PointSet { dim, norm, points })
    }

    pub fn empty(dim: usize, norm: NormTag) -> Result<Self> {
        Self::new(dim, norm, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn norm(&self) -> NormTag {
        self.norm
    }

    pub fn with_norm(mut self, norm: NormTag) -> Self {
        self.norm = norm;
        self
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Vector {
        &self.points[i]
    }

    pub fn index_of(&self, v: &Vector) -> Option<usize> {
        self.points.iter().position(|p| p == v)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.index_of(v).is_some()
    }

    /// Index of `v`, or [`EngineError::NotInSet`].
    pub fn locate(&self, v: &Vector) -> Result<usize> {
        self.index_of(v).ok_or(EngineError::NotInSet)
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.len() {
            return Err(EngineError::IndexOutOfRange {
                index,
                len: self.len(),
            });
        }
        Ok(())
    }

    /// The sub-collection at `indices`, in the given order.
    pub fn subset(&self, indices: &[usize]) -> PointSet {
        PointSet {
            dim: self.dim,
            norm: self.norm,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    /// True when every point of `self` is also a point of `other`.
    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    /// Same points sorted lexicographically, for order-free comparison.
    pub fn sorted(&self) -> PointSet {
        let mut points = self.points.clone();
        points.sort();
        PointSet {
            dim: self.dim,
            norm: self.norm,
            points,
        }
    }
}
