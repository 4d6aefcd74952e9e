//! Cantor–Bendixson calculus on compact ordinal intervals `[0, α]`.
//!
//! Derived sets are reported up to homeomorphism: the points of `[0, α]`
//! with Cantor–Bendixson rank at least `b` are the multiples `ω^b·δ` with
//! `1 <= δ <= q`, where `α = ω^b·q + r`. That set is again an ordinal
//! interval (`[0, q-1]` for finite `q`, `[0, q]` otherwise) or empty.
//!
//! The height is the least `η` with `K^(η) = ∅`. Under that convention the
//! condition `ω^α < η(K) <= ω^(α+1)` and the pair `K^(ω^α) ≠ ∅`,
//! `K^(ω^(α+1)) = ∅` describe the same spaces.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ordinal::Ordinal;

/// The compact space `[0, α]`, with order type `α + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompactOrdinalSpace {
    pub alpha: Ordinal,
}

/// Result of a derivative: another interval, or the empty set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Derived {
    Interval { alpha: Ordinal },
    Empty,
}

impl Derived {
    pub fn is_empty(&self) -> bool {
        matches!(self, Derived::Empty)
    }

    pub fn space(&self) -> Option<CompactOrdinalSpace> {
        match self {
            Derived::Interval { alpha } => Some(CompactOrdinalSpace::new(alpha.clone())),
            Derived::Empty => None,
        }
    }

    /// Applies `f` unless already empty.
    pub fn and_then(self, f: impl FnOnce(&CompactOrdinalSpace) -> Derived) -> Derived {
        match self.space() {
            Some(s) => f(&s),
            None => Derived::Empty,
        }
    }
}

impl fmt::Display for Derived {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Derived::Interval { alpha } => write!(f, "[0, {alpha}]"),
            Derived::Empty => f.write_str("empty"),
        }
    }
}

impl From<CompactOrdinalSpace> for Derived {
    fn from(s: CompactOrdinalSpace) -> Self {
        Derived::Interval { alpha: s.alpha }
    }
}

impl CompactOrdinalSpace {
    pub fn new(alpha: Ordinal) -> Self {
        CompactOrdinalSpace { alpha }
    }

    /// Set of limit points of `[0, α]`.
    pub fn cb_derivative(&self) -> Derived {
        self.cb_power(&Ordinal::one())
    }

    /// The `b`-th Cantor–Bendixson derivative, in closed form.
    pub fn cb_power(&self, b: &Ordinal) -> Derived {
        if b.is_zero() {
            return self.clone().into();
        }
        let (q, _) = self.alpha.divide_by_omega_pow(b);
        interval_of_one_to(q)
    }

    /// Least `η` with an empty `η`-th derivative: `degree(α) + 1`, or 1 when
    /// `α` is finite.
    pub fn cb_height(&self) -> Ordinal {
        match self.alpha.degree() {
            Ok(d) => d.successor().expect("height overflow"),
            Err(_) => Ordinal::one(),
        }
    }
}

/// Homeomorphism type of the ordinal interval `[1, q]`.
fn interval_of_one_to(q: Ordinal) -> Derived {
    match q.as_finite() {
        Some(0) => Derived::Empty,
        Some(n) => Derived::Interval {
            alpha: Ordinal::from(n - 1),
        },
        None => Derived::Interval { alpha: q },
    }
}

impl fmt::Display for CompactOrdinalSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[0, {}]", self.alpha)
    }
}
