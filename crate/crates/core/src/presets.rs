//! Study scenarios and their representative parameter values.
//!
//! Two base parameter sets are used throughout: the inclination-flip setup
//! `(a,b,c,beta,gamma) = (0.22, 1, -2, 1, 2)` unfolded by `(alpha, mu)`, and
//! the orbit-flip setup `(-0.5, 2.5, -1, 0, 0)` with `alpha = 1` unfolded by
//! `(mu, mutilde)`.

use crate::error::Error;
use crate::model::ModelParams;
use crate::Result;

/// Which of the two flip scenarios a run refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// Inclination flip: unfolding parameters `(alpha, mu)`.
    If,
    /// Orbit flip: unfolding parameters `(mu, mutilde)`.
    Of,
}

impl Scenario {
    pub fn parse(s: &str) -> Result<Scenario> {
        match s.to_ascii_uppercase().as_str() {
            "IF" => Ok(Scenario::If),
            "OF" => Ok(Scenario::Of),
            _ => Err(Error::invalid(format!("unknown scenario '{s}' (expected IF or OF)"))),
        }
    }

    pub fn base_params(&self) -> ModelParams {
        match self {
            Scenario::If => scenario_if(),
            Scenario::Of => scenario_of(),
        }
    }
}

/// Inclination-flip base parameters; `alpha` defaults to the flip value side
/// used in most figures (0.65) and `mu = mutilde = 0`.
pub fn scenario_if() -> ModelParams {
    ModelParams::new(0.22, 1.0, -2.0, 0.65, 1.0, 2.0, 0.0, 0.0)
}

/// Orbit-flip base parameters with `alpha = 1`, `mu = mutilde = 0`.
pub fn scenario_of() -> ModelParams {
    ModelParams::new(-0.5, 2.5, -1.0, 1.0, 0.0, 0.0, 0.0, 0.0)
}

/// Inclination-flip point `alpha_B` on the `mu = 0` homoclinic line.
pub const ALPHA_B: f64 = 0.4664012;

/// Representative `(alpha, mu)` values for the open regions around the
/// inclination flip.
pub fn if_region(region: &str) -> Result<(f64, f64)> {
    Ok(match region {
        "1" => (0.300, -0.004),
        "2" => (0.300, 0.004),
        "3" => (0.650, 0.004),
        "4" => (0.650, -0.004),
        "5" => (0.650, -0.007),
        "6" => (0.650, -0.010),
        "1'" | "1p" => (0.650, -0.014),
        _ => return Err(Error::invalid(format!("unknown IF region '{region}'"))),
    })
}

/// `(alpha, mu)` at selected bifurcation curves of the inclination flip.
pub fn if_curve(curve: &str) -> Result<(f64, f64)> {
    Ok(match curve.to_ascii_uppercase().as_str() {
        "HO" | "H_O" => (0.3000000, 0.0),
        "BI" | "B_I" => (0.4664012, 0.0),
        "HT" | "H_T" => (0.6500000, 0.0),
        "2HO" | "2H_O" => (0.6500000, -0.0079047),
        "F" => (0.6500000, -0.0134990),
        _ => return Err(Error::invalid(format!("unknown IF curve '{curve}'"))),
    })
}

/// Representative `(mu, mutilde)` values for the open regions around the
/// orbit flip.
pub fn of_region(region: &str) -> Result<(f64, f64)> {
    Ok(match region {
        "1" => (-0.150, -0.060),
        "2" => (-0.150, -0.065),
        "3" => (0.150, 0.060),
        "4" => (0.150, 0.065),
        "5" => (0.150, 0.069),
        "6" => (0.150, 0.070),
        _ => return Err(Error::invalid(format!("unknown OF region '{region}'"))),
    })
}

/// `(mu, mutilde)` at selected bifurcation curves of the orbit flip.
pub fn of_curve(curve: &str) -> Result<(f64, f64)> {
    Ok(match curve.to_ascii_uppercase().as_str() {
        "HO" | "H_O" => (-0.150000000, -0.062331201),
        "BO" | "B_O" => (0.0, 0.0),
        "HT" | "H_T" => (0.150000000, 0.062381076),
        "2HO" | "2H_O" => (0.150000000, 0.069351963),
        "F" => (0.150000000, 0.070562587),
        _ => return Err(Error::invalid(format!("unknown OF curve '{curve}'"))),
    })
}

/// Model parameters at an IF region preset.
pub fn if_region_params(region: &str) -> Result<ModelParams> {
    let (alpha, mu) = if_region(region)?;
    let mut p = scenario_if();
    p.alpha = alpha;
    p.mu = mu;
    Ok(p)
}

/// Model parameters at an OF region preset.
pub fn of_region_params(region: &str) -> Result<ModelParams> {
    let (mu, mutilde) = of_region(region)?;
    let mut p = scenario_of();
    p.mu = mu;
    p.mutilde = mutilde;
    Ok(p)
}

/// Preset lookup by a flat id like `if-region-4`, `if-curve-2ho`, `of-curve-f`,
/// `if-base`, `of-base`.
pub fn preset_table(id: &str) -> Result<ModelParams> {
    let id = id.to_ascii_lowercase();
    if id == "if-base" || id == "if" {
        return Ok(scenario_if());
    }
    if id == "of-base" || id == "of" {
        return Ok(scenario_of());
    }
    if let Some(r) = id.strip_prefix("if-region-") {
        return if_region_params(r);
    }
    if let Some(r) = id.strip_prefix("of-region-") {
        return of_region_params(r);
    }
    if let Some(c) = id.strip_prefix("if-curve-") {
        let (alpha, mu) = if_curve(c)?;
        let mut p = scenario_if();
        p.alpha = alpha;
        p.mu = mu;
        return Ok(p);
    }
    if let Some(c) = id.strip_prefix("of-curve-") {
        let (mu, mutilde) = of_curve(c)?;
        let mut p = scenario_of();
        p.mu = mu;
        p.mutilde = mutilde;
        return Ok(p);
    }
    Err(Error::invalid(format!("unknown preset id '{id}'")))
}

/// All preset ids, for listings.
pub fn preset_ids() -> Vec<String> {
    let mut out = vec!["if-base".to_string(), "of-base".to_string()];
    for r in ["1", "2", "3", "4", "5", "6", "1p"] {
        out.push(format!("if-region-{r}"));
    }
    for r in ["1", "2", "3", "4", "5", "6"] {
        out.push(format!("of-region-{r}"));
    }
    for c in ["ho", "bi", "ht", "2ho", "f"] {
        out.push(format!("if-curve-{c}"));
    }
    for c in ["ho", "bo", "ht", "2ho", "f"] {
        out.push(format!("of-curve-{c}"));
    }
    out
}

/// Sphere used for the intersection sets: center and radius.
pub const SPHERE_CENTER: [f64; 3] = [0.5, 0.0, 0.0];
pub const SPHERE_RADIUS: f64 = 0.6;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        assert_eq!(if_region("4").unwrap(), (0.65, -0.004));
        assert_eq!(if_curve("f").unwrap(), (0.65, -0.0134990));
        assert_eq!(of_curve("ho").unwrap(), (-0.15, -0.062331201));
        assert_eq!(of_curve("2ho").unwrap(), (0.15, 0.069351963));
        let p = preset_table("if-region-1").unwrap();
        assert_eq!((p.alpha, p.mu), (0.3, -0.004));
        assert_eq!((p.a, p.b, p.c, p.beta, p.gamma), (0.22, 1.0, -2.0, 1.0, 2.0));
        let p = preset_table("of-base").unwrap();
        assert_eq!((p.a, p.b, p.c, p.alpha, p.beta, p.gamma), (-0.5, 2.5, -1.0, 1.0, 0.0, 0.0));
    }

    #[test]
    fn all_ids_resolve() {
        for id in preset_ids() {
            assert!(preset_table(&id).is_ok(), "{id}");
        }
        assert!(preset_table("if-region-9").is_err());
    }
}
