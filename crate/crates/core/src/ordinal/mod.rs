//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is a finite, strictly decreasing sum `ω^e₁·c₁ + … + ω^eₖ·cₖ`
//! whose exponents are themselves ordinals in the same representation. Every
//! value built through this module is canonical, so structural equality is
//! ordinal equality and the derived ordering walks terms lexicographically.
//!
//! Coefficients are `u64`. Arithmetic that would overflow a coefficient
//! reports [`OrdinalError::Overflow`] through the `try_*` methods; the
//! operator impls (`+`, `*`) panic in that case, like integer arithmetic.

mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use parse::parse;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("coefficient overflow")]
    Overflow,
    #[error("{0}")]
    Domain(String),
}

/// One summand `ω^exponent · coefficient` of a Cantor normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Ordinal,
    coefficient: u64,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from(1u64)
    }

    /// ω
    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    /// `ω^exponent`
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient: 1,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, which must
    /// already be in canonical order with non-zero coefficients.
    pub fn from_terms<I>(terms: I) -> Result<Self, OrdinalError>
    where
        I: IntoIterator<Item = (Ordinal, u64)>,
    {
        let terms: Vec<Term> = terms
            .into_iter()
            .map(|(exponent, coefficient)| Term {
                exponent,
                coefficient,
            })
            .collect();
        if terms.iter().any(|t| t.coefficient == 0) {
            return Err(OrdinalError::Domain(
                "zero coefficient in normal form".into(),
            ));
        }
        if terms.windows(2).any(|w| w[0].exponent <= w[1].exponent) {
            return Err(OrdinalError::Domain(
                "exponents must be strictly decreasing".into(),
            ));
        }
        Ok(Ordinal { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    /// The natural number value, if the ordinal is finite.
    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    /// Non-zero and not a successor.
    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exponent.is_zero())
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    /// Leading exponent `e₁`. Zero has no degree.
    pub fn degree(&self) -> Result<&Ordinal, OrdinalError> {
        self.terms
            .first()
            .map(|t| &t.exponent)
            .ok_or_else(|| OrdinalError::Domain("degree of 0 is undefined".into()))
    }

    /// True for `ω^e` with coefficient 1 (and for no other value).
    pub fn is_omega_power(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.coefficient == 1)
    }

    pub fn successor(&self) -> Result<Self, OrdinalError> {
        self.try_add(&Ordinal::one())
    }

    /// Predecessor of a successor ordinal.
    pub fn predecessor(&self) -> Option<Self> {
        let last = self.terms.last()?;
        if !last.exponent.is_zero() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().unwrap();
        if last.coefficient == 1 {
            terms.pop();
        } else {
            last.coefficient -= 1;
        }
        Some(Ordinal { terms })
    }

    /// Ordinal sum `self + rhs`. Terms of `self` below the leading exponent
    /// of `rhs` are absorbed.
    pub fn try_add(&self, rhs: &Ordinal) -> Result<Self, OrdinalError> {
        let Some(head) = rhs.terms.first() else {
            return Ok(self.clone());
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent >= head.exponent)
            .cloned()
            .collect();
        let mut rest = rhs.terms.iter();
        match terms.last_mut() {
            Some(last) if last.exponent == head.exponent => {
                last.coefficient = last
                    .coefficient
                    .checked_add(head.coefficient)
                    .ok_or(OrdinalError::Overflow)?;
                rest.next();
            }
            _ => {}
        }
        terms.extend(rest.cloned());
        Ok(Ordinal { terms })
    }

    /// Ordinal product `self · rhs`, distributing `self` over the terms of
    /// `rhs` from the left.
    pub fn try_mul(&self, rhs: &Ordinal) -> Result<Self, OrdinalError> {
        let Some(lead) = self.terms.first() else {
            return Ok(Ordinal::zero());
        };
        let mut acc = Ordinal::zero();
        for t in &rhs.terms {
            let piece = if t.exponent.is_zero() {
                // self · n: only the leading coefficient is scaled
                let mut terms = self.terms.clone();
                terms[0].coefficient = lead
                    .coefficient
                    .checked_mul(t.coefficient)
                    .ok_or(OrdinalError::Overflow)?;
                Ordinal { terms }
            } else {
                // self · ω^f = ω^(e₁ + f)
                Ordinal {
                    terms: vec![Term {
                        exponent: lead.exponent.try_add(&t.exponent)?,
                        coefficient: t.coefficient,
                    }],
                }
            };
            acc = acc.try_add(&piece)?;
        }
        Ok(acc)
    }

    /// `self^ω`, the supremum of the finite powers.
    pub fn pow_omega(&self) -> Result<Self, OrdinalError> {
        match self.as_finite() {
            Some(0) => Err(OrdinalError::Domain("0^ω is not supported".into())),
            Some(1) => Ok(Ordinal::one()),
            Some(_) => Ok(Ordinal::omega()),
            None => {
                let lead = self.degree()?;
                Ok(Ordinal::omega_pow(lead.try_mul(&Ordinal::omega())?))
            }
        }
    }

    /// Left division by a power of ω: returns `(q, r)` with
    /// `self = ω^e·q + r` and `r < ω^e`.
    pub fn divide_by_omega_pow(&self, e: &Ordinal) -> (Ordinal, Ordinal) {
        let split = self.terms.iter().position(|t| t.exponent < *e);
        let (high, low) = self.terms.split_at(split.unwrap_or(self.terms.len()));
        let quotient = Ordinal {
            terms: high
                .iter()
                .map(|t| Term {
                    exponent: t.exponent.left_sub(e),
                    coefficient: t.coefficient,
                })
                .collect(),
        };
        let remainder = Ordinal {
            terms: low.to_vec(),
        };
        (quotient, remainder)
    }

    /// The unique `y` with `e + y = self`, for `e <= self`.
    fn left_sub(&self, e: &Ordinal) -> Ordinal {
        debug_assert!(e <= self);
        for (i, t) in self.terms.iter().enumerate() {
            let Some(u) = e.terms.get(i) else {
                return Ordinal {
                    terms: self.terms[i..].to_vec(),
                };
            };
            if t == u {
                continue;
            }
            if t.exponent == u.exponent {
                let mut terms = vec![Term {
                    exponent: t.exponent.clone(),
                    coefficient: t.coefficient - u.coefficient,
                }];
                terms.extend_from_slice(&self.terms[i + 1..]);
                return Ordinal { terms };
            }
            return Ordinal {
                terms: self.terms[i..].to_vec(),
            };
        }
        Ordinal::zero()
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![Term {
                    exponent: Ordinal::zero(),
                    coefficient: n,
                }],
            }
        }
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponent
            .cmp(&other.exponent)
            .then(self.coefficient.cmp(&other.coefficient))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        // Vec's lexicographic order: a proper prefix is smaller.
        self.terms.cmp(&other.terms)
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        self.try_add(rhs).expect("ordinal coefficient overflow")
    }
}

impl std::ops::Mul for &Ordinal {
    type Output = Ordinal;

    fn mul(self, rhs: &Ordinal) -> Ordinal {
        self.try_mul(rhs).expect("ordinal coefficient overflow")
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            f.write_str("w")?;
            if t.exponent != Ordinal::one() {
                if t.exponent.as_finite().is_some() || t.exponent == Ordinal::omega() {
                    write!(f, "^{}", t.exponent)?;
                } else {
                    write!(f, "^({})", t.exponent)?;
                }
            }
            if t.coefficient > 1 {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Ordinal {
    type Err = OrdinalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}
