//! Closed-form Szlenk and weak*-dentability indices of `C([0,α])`, `C(K)`
//! for scattered `K` of known height, and `L₂(C([0,α]))`.
//!
//! Every `C([0,α])` with `α >= ω` is isomorphic to `C([0, ω^(ω^γ)])` for a
//! unique `γ`, and the indices depend on `γ` alone:
//!
//! * `Sz  = ω^(γ+1)`
//! * `Dz  = ω^(1+γ+1)`, which collapses to `Sz` once `γ >= ω`
//! * `Sz(L₂(C)) = ω^(1+γ+1)`
//!
//! Finite `α` gives a finite-dimensional space. We use `Sz = 1` and
//! `Dz = ω` there; these are conventions, not part of the classification.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ordinal::{Ordinal, OrdinalError};
use crate::scattered::CompactOrdinalSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
}

type Result<T> = std::result::Result<T, IndexError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpaceDescriptor {
    /// `C([0, α])`
    CInterval { alpha: Ordinal },
    /// `C(K)` for a scattered compact `K` of height `η >= 1`
    CCompactHeight { eta: Ordinal },
    /// `L₂([0,1], C([0, α]))`
    L2CInterval { alpha: Ordinal },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

/// `None` fields serialize as `null` and mean "not applicable".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub descriptor: SpaceDescriptor,
    pub iso_gamma: Option<Ordinal>,
    pub szlenk: Ordinal,
    pub dentability: Option<Ordinal>,
    pub cb_height: Option<Ordinal>,
    pub checks: Vec<Check>,
}

impl IndexReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn require_infinite(alpha: &Ordinal) -> Result<()> {
    if alpha.is_finite() {
        return Err(IndexError::Domain(format!(
            "alpha = {alpha} is finite; the isomorphism classification needs alpha >= w"
        )));
    }
    Ok(())
}

/// The `γ` with `ω^(ω^γ) <= α < ω^(ω^(γ+1))`.
pub fn iso_class_gamma(alpha: &Ordinal) -> Result<Ordinal> {
    require_infinite(alpha)?;
    let lead = alpha.degree()?;
    if lead.is_finite() {
        return Ok(Ordinal::zero());
    }
    Ok(lead.degree()?.clone())
}

/// Whether `C([0,α])` and `C([0,β])` are isomorphic: `max < min^ω`.
pub fn iso_equivalent(alpha: &Ordinal, beta: &Ordinal) -> Result<bool> {
    require_infinite(alpha)?;
    require_infinite(beta)?;
    let (lo, hi) = if alpha <= beta {
        (alpha, beta)
    } else {
        (beta, alpha)
    };
    Ok(*hi < lo.pow_omega()?)
}

/// `ω^(1+γ+1)`
fn omega_one_plus_plus_one(gamma: &Ordinal) -> Result<Ordinal> {
    let e = Ordinal::one().try_add(gamma)?.successor()?;
    Ok(Ordinal::omega_pow(e))
}

pub fn szlenk_c(alpha: &Ordinal) -> Result<Ordinal> {
    if alpha.is_finite() {
        return Ok(Ordinal::one());
    }
    let gamma = iso_class_gamma(alpha)?;
    Ok(Ordinal::omega_pow(gamma.successor()?))
}

pub fn dentability_c(alpha: &Ordinal) -> Result<Ordinal> {
    if alpha.is_finite() {
        return Ok(Ordinal::omega());
    }
    omega_one_plus_plus_one(&iso_class_gamma(alpha)?)
}

/// The `α` with `ω^α < η <= ω^(α+1)`, if any. Heights of the form `ω^λ`
/// with `λ` a limit (and `η <= 1`) have none.
pub fn height_class(eta: &Ordinal) -> Option<Ordinal> {
    if *eta <= Ordinal::one() {
        return None;
    }
    let e = eta.degree().ok()?;
    if !eta.is_omega_power() {
        return Some(e.clone());
    }
    e.predecessor()
}

/// `Dz(C(K))` for a scattered compact `K` of height `η`.
pub fn dentability_ck_from_height(eta: &Ordinal) -> Result<Ordinal> {
    if eta.is_zero() {
        return Err(IndexError::Domain("height must be at least 1".into()));
    }
    if *eta == Ordinal::one() {
        return Ok(Ordinal::omega());
    }
    let alpha = height_class(eta).ok_or_else(|| {
        IndexError::Domain(format!(
            "no alpha with w^alpha < {eta} <= w^(alpha+1); not the height of a compact space"
        ))
    })?;
    omega_one_plus_plus_one(&alpha)
}

fn szlenk_ck_from_height(eta: &Ordinal) -> Result<Ordinal> {
    if *eta == Ordinal::one() {
        return Ok(Ordinal::one());
    }
    let alpha = height_class(eta)
        .ok_or_else(|| IndexError::Domain(format!("{eta} is not the height of a compact space")))?;
    Ok(Ordinal::omega_pow(alpha.successor()?))
}

/// `Sz(L₂(C([0,α])))`
pub fn szlenk_l2_c(alpha: &Ordinal) -> Result<Ordinal> {
    omega_one_plus_plus_one(&iso_class_gamma(alpha)?)
}

fn check(name: &str, pass: bool) -> Check {
    Check {
        name: name.to_string(),
        pass,
    }
}

/// The consistency checks shared by every family: `Dz >= Sz`, the bound
/// `Dz <= ω^Sz`, and `Dz` being a power of ω.
fn index_checks(sz: &Ordinal, dz: &Ordinal, checks: &mut Vec<Check>) {
    checks.push(check("dz_ge_sz", dz >= sz));
    checks.push(check("raja_bound", *dz <= Ordinal::omega_pow(sz.clone())));
    checks.push(check("dz_omega_power", dz.is_omega_power()));
    if *sz == Ordinal::omega() {
        checks.push(check(
            "psi_omega",
            *dz == Ordinal::omega_pow(Ordinal::from(2)),
        ));
    }
}

pub fn full_report(descriptor: &SpaceDescriptor) -> Result<IndexReport> {
    let mut checks = Vec::new();
    let report = match descriptor {
        SpaceDescriptor::CInterval { alpha } => {
            let sz = szlenk_c(alpha)?;
            let dz = dentability_c(alpha)?;
            let height = CompactOrdinalSpace::new(alpha.clone()).cb_height();
            index_checks(&sz, &dz, &mut checks);
            checks.push(check(
                "height_consistency",
                dentability_ck_from_height(&height)? == dz,
            ));
            let iso_gamma = if alpha.is_finite() {
                None
            } else {
                let g = iso_class_gamma(alpha)?;
                let lower = Ordinal::omega_pow(Ordinal::omega_pow(g.clone()));
                let upper = Ordinal::omega_pow(Ordinal::omega_pow(g.successor()?));
                checks.push(check("iso_class_bounds", lower <= *alpha && *alpha < upper));
                if !g.is_finite() {
                    checks.push(check("absorption", dz == sz));
                }
                Some(g)
            };
            IndexReport {
                descriptor: descriptor.clone(),
                iso_gamma,
                szlenk: sz,
                dentability: Some(dz),
                cb_height: Some(height),
                checks,
            }
        }
        SpaceDescriptor::CCompactHeight { eta } => {
            let dz = dentability_ck_from_height(eta)?;
            let sz = szlenk_ck_from_height(eta)?;
            index_checks(&sz, &dz, &mut checks);
            if let Some(a) = height_class(eta) {
                let lower = Ordinal::omega_pow(a.clone());
                let upper = Ordinal::omega_pow(a.successor()?);
                checks.push(check("height_interval", lower < *eta && *eta <= upper));
                let model = Ordinal::omega_pow(Ordinal::omega_pow(a));
                checks.push(check(
                    "matches_interval_model",
                    dentability_c(&model)? == dz,
                ));
            }
            IndexReport {
                descriptor: descriptor.clone(),
                iso_gamma: None,
                szlenk: sz,
                dentability: Some(dz),
                cb_height: Some(eta.clone()),
                checks,
            }
        }
        SpaceDescriptor::L2CInterval { alpha } => {
            let sz = szlenk_l2_c(alpha)?;
            let base_sz = szlenk_c(alpha)?;
            let base_dz = dentability_c(alpha)?;
            checks.push(check("l2_ge_base_sz", sz >= base_sz));
            checks.push(check("l2_dominates_base_dz", sz >= base_dz));
            checks.push(check("sz_omega_power", sz.is_omega_power()));
            IndexReport {
                descriptor: descriptor.clone(),
                iso_gamma: Some(iso_class_gamma(alpha)?),
                szlenk: sz,
                dentability: None,
                cb_height: None,
                checks,
            }
        }
    };
    Ok(report)
}
