//! Sandstede's three-dimensional flip-bifurcation model: vector field,
//! Jacobian, equilibria and eigenvalue classification.

use crate::error::Error;
use crate::linalg::{self, Eig};
use crate::Result;
use nalgebra::{Matrix3, Vector3};

/// Phase-space point.
pub type State3 = Vector3<f64>;

/// The eight scalars parameterizing the model. The original model's extra
/// z-coupling parameter is fixed at zero, which makes the z-axis invariant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub mu: f64,
    pub mutilde: f64,
}

impl ModelParams {
    pub fn new(a: f64, b: f64, c: f64, alpha: f64, beta: f64, gamma: f64, mu: f64, mutilde: f64) -> Self {
        ModelParams { a, b, c, alpha, beta, gamma, mu, mutilde }
    }

    pub fn is_finite(&self) -> bool {
        [self.a, self.b, self.c, self.alpha, self.beta, self.gamma, self.mu, self.mutilde]
            .iter()
            .all(|v| v.is_finite())
    }

    /// Read one parameter by id.
    pub fn get(&self, id: ParamId) -> f64 {
        match id {
            ParamId::A => self.a,
            ParamId::B => self.b,
            ParamId::C => self.c,
            ParamId::Alpha => self.alpha,
            ParamId::Beta => self.beta,
            ParamId::Gamma => self.gamma,
            ParamId::Mu => self.mu,
            ParamId::Mutilde => self.mutilde,
        }
    }

    pub fn set(&mut self, id: ParamId, v: f64) {
        match id {
            ParamId::A => self.a = v,
            ParamId::B => self.b = v,
            ParamId::C => self.c = v,
            ParamId::Alpha => self.alpha = v,
            ParamId::Beta => self.beta = v,
            ParamId::Gamma => self.gamma = v,
            ParamId::Mu => self.mu = v,
            ParamId::Mutilde => self.mutilde = v,
        }
    }

    pub fn with(&self, id: ParamId, v: f64) -> Self {
        let mut p = *self;
        p.set(id, v);
        p
    }
}

/// Identifies a model parameter, e.g. as a continuation unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamId {
    A,
    B,
    C,
    Alpha,
    Beta,
    Gamma,
    Mu,
    Mutilde,
}

impl ParamId {
    pub fn name(&self) -> &'static str {
        match self {
            ParamId::A => "a",
            ParamId::B => "b",
            ParamId::C => "c",
            ParamId::Alpha => "alpha",
            ParamId::Beta => "beta",
            ParamId::Gamma => "gamma",
            ParamId::Mu => "mu",
            ParamId::Mutilde => "mutilde",
        }
    }
}

/// Right-hand side of the model.
pub fn eval_field(p: State3, params: &ModelParams) -> State3 {
    let (x, y, z) = (p.x, p.y, p.z);
    let ModelParams { a, b, c, alpha, beta, gamma, mu, mutilde } = *params;
    let s = mutilde - alpha * z;
    Vector3::new(
        a * x + b * y - a * x * x + s * x * (2.0 - 3.0 * x),
        b * x + a * y - 1.5 * b * x * x - 1.5 * a * x * y - 2.0 * y * s,
        c * z + mu * x + gamma * x * z + alpha * beta * (x * x * (1.0 - x) - y * y),
    )
}

/// Analytic Jacobian of [`eval_field`].
pub fn eval_jacobian(p: State3, params: &ModelParams) -> Matrix3<f64> {
    let (x, y, z) = (p.x, p.y, p.z);
    let ModelParams { a, b, c, alpha, beta, gamma, mu, mutilde } = *params;
    let s = mutilde - alpha * z;
    Matrix3::new(
        a - 2.0 * a * x + s * (2.0 - 6.0 * x),
        b,
        -alpha * x * (2.0 - 3.0 * x),
        b - 3.0 * b * x - 1.5 * a * y,
        a - 1.5 * a * x - 2.0 * s,
        2.0 * alpha * y,
        mu + gamma * z + alpha * beta * (2.0 * x - 3.0 * x * x),
        -2.0 * alpha * beta * y,
        c + gamma * x,
    )
}

/// Partial derivative of the field with respect to one model parameter.
pub fn eval_dfield_dparam(p: State3, params: &ModelParams, id: ParamId) -> State3 {
    let (x, y, z) = (p.x, p.y, p.z);
    let ModelParams { a: _, b: _, c: _, alpha, beta, gamma: _, mu: _, mutilde: _ } = *params;
    match id {
        ParamId::A => Vector3::new(x - x * x, y - 1.5 * x * y, 0.0),
        ParamId::B => Vector3::new(y, x - 1.5 * x * x, 0.0),
        ParamId::C => Vector3::new(0.0, 0.0, z),
        ParamId::Alpha => Vector3::new(
            -z * x * (2.0 - 3.0 * x),
            2.0 * y * z,
            beta * (x * x * (1.0 - x) - y * y),
        ),
        ParamId::Beta => Vector3::new(0.0, 0.0, alpha * (x * x * (1.0 - x) - y * y)),
        ParamId::Gamma => Vector3::new(0.0, 0.0, x * z),
        ParamId::Mu => Vector3::new(0.0, 0.0, x),
        ParamId::Mutilde => Vector3::new(x * (2.0 - 3.0 * x), -2.0 * y, 0.0),
    }
}

/// Eigenvalues and unit eigenvectors of an equilibrium, sorted into the real
/// saddle pattern `l_ss < l_s < 0 < l_u` when it applies.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Raw eigenvalues (real or one real plus complex pair).
    pub eigenvalues: [Eig; 3],
    /// Strong stable / weak stable / unstable data when the spectrum is a
    /// real saddle with that sign pattern.
    pub saddle: Option<SaddleFrame>,
    /// True when two eigenvalues coincide within tolerance, so no stable
    /// ss/s/u ordering exists.
    pub non_hyperbolic: bool,
    /// True when `|l_s| = l_u` within the resonance tolerance.
    pub resonant: bool,
}

/// Sorted real-saddle eigendata.
#[derive(Debug, Clone, Copy)]
pub struct SaddleFrame {
    pub l_ss: f64,
    pub l_s: f64,
    pub l_u: f64,
    pub e_ss: Vector3<f64>,
    pub e_s: Vector3<f64>,
    pub e_u: Vector3<f64>,
}

/// Tolerance below which `|l_s| - l_u` counts as resonant.
pub const RESONANCE_TOL: f64 = 1e-9;
const DEGENERACY_TOL: f64 = 1e-9;

impl Spectrum {
    /// Build from raw eigenvalues and a matrix to extract eigenvectors from.
    pub fn from_matrix(m: &Matrix3<f64>) -> Self {
        let eigenvalues = linalg::eig3(m);
        Self::classify(m, eigenvalues)
    }

    fn classify(m: &Matrix3<f64>, eigenvalues: [Eig; 3]) -> Self {
        let scale = eigenvalues.iter().map(|e| e.norm()).fold(1.0, f64::max);
        let all_real = eigenvalues.iter().all(|e| e.is_real());
        let mut non_hyperbolic = eigenvalues.iter().any(|e| e.re.abs() <= DEGENERACY_TOL * scale);
        if all_real {
            let mut v: Vec<f64> = eigenvalues.iter().map(|e| e.re).collect();
            v.sort_by(|a, b| a.partial_cmp(b).unwrap());
            if v[1] - v[0] <= DEGENERACY_TOL * scale || v[2] - v[1] <= DEGENERACY_TOL * scale {
                non_hyperbolic = true;
            }
        }
        let mut saddle = None;
        let mut resonant = false;
        if all_real && !non_hyperbolic {
            let mut v: Vec<f64> = eigenvalues.iter().map(|e| e.re).collect();
            v.sort_by(|a, b| a.partial_cmp(b).unwrap());
            if v[0] < v[1] && v[1] < 0.0 && v[2] > 0.0 {
                let e_ss = linalg::real_eigenvector(m, v[0]);
                let e_s = linalg::real_eigenvector(m, v[1]);
                let e_u = linalg::real_eigenvector(m, v[2]);
                if let (Some(e_ss), Some(e_s), Some(e_u)) = (e_ss, e_s, e_u) {
                    saddle = Some(SaddleFrame {
                        l_ss: v[0],
                        l_s: v[1],
                        l_u: v[2],
                        e_ss: linalg::orient(e_ss),
                        e_s: linalg::orient(e_s),
                        e_u: linalg::orient(e_u),
                    });
                    resonant = (v[1].abs() - v[2]).abs() <= RESONANCE_TOL * scale.max(1.0);
                }
            }
        }
        Spectrum { eigenvalues, saddle, non_hyperbolic, resonant }
    }

    pub fn has_complex_pair(&self) -> bool {
        self.eigenvalues.iter().any(|e| !e.is_real())
    }
}

/// Analytic spectrum of the origin: `a +- sqrt(b^2 + 4 mutilde^2)` and `c`,
/// with the third eigenvector along the invariant z-axis.
///
/// The block-triangular structure of the Jacobian at the origin makes the
/// formula valid for every `mu`, which the test suite asserts against a
/// dense eigensolve.
pub fn origin_spectrum(params: &ModelParams) -> Result<Spectrum> {
    let ModelParams { a, b, c, mu, mutilde, .. } = *params;
    let rad = b * b + 4.0 * mutilde * mutilde;
    if rad <= 0.0 {
        return Err(Error::invalid("origin spectrum requires b^2 + 4 mutilde^2 > 0"));
    }
    let s = rad.sqrt();
    let l1 = a + s;
    let l2 = a - s;
    let l3 = c;

    // Eigenvectors: the xy-block is [[a+2mt, b], [b, a-2mt]] and the z-row is
    // (mu, 0, c); for l != c the z-component follows from mu v_x / (l - c).
    let evec = |l: f64| -> Vector3<f64> {
        let vx = b;
        let vy = l - a - 2.0 * mutilde;
        let vz = if (l - c).abs() > 1e-300 { mu * vx / (l - c) } else { 0.0 };
        linalg::orient(Vector3::new(vx, vy, vz).normalize())
    };
    let m = eval_jacobian(Vector3::zeros(), params);
    let eigenvalues = [Eig::real(l1), Eig::real(l2), Eig::real(l3)];
    let mut spec = Spectrum::classify(&m, eigenvalues);
    // Prefer the analytic eigenvectors over the generic extraction.
    if let Some(fr) = spec.saddle.as_mut() {
        for (l, e) in [(fr.l_ss, &mut fr.e_ss), (fr.l_s, &mut fr.e_s), (fr.l_u, &mut fr.e_u)] {
            *e = if (l - l3).abs() <= 1e-14 * (1.0 + l.abs()) {
                Vector3::new(0.0, 0.0, 1.0)
            } else {
                evec(l)
            };
        }
    }
    Ok(spec)
}

/// Stability class of an equilibrium.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityClass {
    RealSaddle,
    SaddleFocus,
    Sink,
    Source,
    NonHyperbolic,
}

impl StabilityClass {
    pub fn name(&self) -> &'static str {
        match self {
            StabilityClass::RealSaddle => "real-saddle",
            StabilityClass::SaddleFocus => "saddle-focus",
            StabilityClass::Sink => "sink",
            StabilityClass::Source => "source",
            StabilityClass::NonHyperbolic => "non-hyperbolic",
        }
    }
}

/// An equilibrium with its local linear data.
#[derive(Debug, Clone)]
pub struct Equilibrium {
    pub location: State3,
    pub spectrum: Spectrum,
    pub class: StabilityClass,
    /// Dimension of the unstable eigenspace.
    pub unstable_dim: usize,
}

impl Equilibrium {
    pub fn at(location: State3, params: &ModelParams) -> Self {
        let j = eval_jacobian(location, params);
        let spectrum = Spectrum::from_matrix(&j);
        let (class, unstable_dim) = classify_stability(&spectrum);
        Equilibrium { location, spectrum, class, unstable_dim }
    }
}

fn classify_stability(spec: &Spectrum) -> (StabilityClass, usize) {
    if spec.non_hyperbolic {
        let n_unstable = spec.eigenvalues.iter().filter(|e| e.re > 0.0).count();
        return (StabilityClass::NonHyperbolic, n_unstable);
    }
    let n_unstable = spec.eigenvalues.iter().filter(|e| e.re > 0.0).count();
    let complex = spec.has_complex_pair();
    let class = match (n_unstable, complex) {
        (0, _) => StabilityClass::Sink,
        (3, _) => StabilityClass::Source,
        (_, false) => StabilityClass::RealSaddle,
        (_, true) => StabilityClass::SaddleFocus,
    };
    (class, n_unstable)
}

/// Newton settings for equilibrium root finding.
#[derive(Debug, Clone, Copy)]
pub struct NewtonOpts {
    pub max_iter: usize,
    pub tol: f64,
}

impl Default for NewtonOpts {
    fn default() -> Self {
        NewtonOpts { max_iter: 50, tol: 1e-12 }
    }
}

/// Damped Newton for a single equilibrium from a seed point. Returns `None`
/// when the iteration leaves the search region or stalls.
pub fn refine_equilibrium(seed: State3, params: &ModelParams, opts: NewtonOpts) -> Option<State3> {
    let mut x = seed;
    let mut r = eval_field(x, params);
    for _ in 0..opts.max_iter {
        if r.norm() <= opts.tol {
            return Some(x);
        }
        let j = eval_jacobian(x, params);
        let delta = j.lu().solve(&(-r))?;
        // Armijo backtracking on the residual norm.
        let r0 = r.norm();
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..20 {
            let xt = x + delta * lambda;
            let rt = eval_field(xt, params);
            if rt.norm() <= (1.0 - 0.25 * lambda) * r0 || rt.norm() < opts.tol {
                x = xt;
                r = rt;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            return None;
        }
        if !x.iter().all(|v| v.is_finite()) || x.norm() > 1e6 {
            return None;
        }
    }
    if r.norm() <= opts.tol {
        Some(x)
    } else {
        None
    }
}

/// Find equilibria inside a box by damped Newton from a regular seed grid,
/// merging duplicates by distance.
pub fn find_equilibria(
    params: &ModelParams,
    search_box: [(f64, f64); 3],
    seed_grid_density: usize,
) -> Result<Vec<Equilibrium>> {
    for (lo, hi) in &search_box {
        if !(lo.is_finite() && hi.is_finite() && hi > lo) {
            return Err(Error::EmptySearchBox);
        }
    }
    let n = seed_grid_density.max(2);
    let opts = NewtonOpts::default();
    let mut roots: Vec<State3> = vec![Vector3::zeros()]; // origin is always an equilibrium
    let lin = |lo: f64, hi: f64, i: usize| lo + (hi - lo) * i as f64 / (n - 1) as f64;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let seed = Vector3::new(
                    lin(search_box[0].0, search_box[0].1, i),
                    lin(search_box[1].0, search_box[1].1, j),
                    lin(search_box[2].0, search_box[2].1, k),
                );
                if let Some(x) = refine_equilibrium(seed, params, opts) {
                    let inside = (0..3).all(|d| {
                        x[d] >= search_box[d].0 - 1e-9 && x[d] <= search_box[d].1 + 1e-9
                    });
                    if inside && !roots.iter().any(|r| (r - x).norm() < 1e-6) {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort_by(|p, q| {
        p.x.partial_cmp(&q.x)
            .unwrap()
            .then(p.y.partial_cmp(&q.y).unwrap())
            .then(p.z.partial_cmp(&q.z).unwrap())
    });
    Ok(roots.into_iter().map(|x| Equilibrium::at(x, params)).collect())
}

/// The extra saddle-focus equilibrium (1D stable, 2D unstable), when present.
pub fn find_saddle_focus(params: &ModelParams) -> Result<Equilibrium> {
    let eqs = find_equilibria(params, [(-3.0, 3.0); 3], 21)?;
    eqs.into_iter()
        .find(|e| e.class == StabilityClass::SaddleFocus && e.unstable_dim == 2 && e.location.norm() > 1e-6)
        .ok_or(Error::EquilibriumNotFound)
}

/// Track a known equilibrium to nearby parameters (warm-start Newton).
pub fn track_equilibrium(hint: State3, params: &ModelParams) -> Result<State3> {
    refine_equilibrium(hint, params, NewtonOpts::default()).ok_or(Error::EquilibriumNotFound)
}

/// Flip variant being classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipFlavor {
    Inclination,
    Orbit,
}

/// Eigenvalue case of a homoclinic flip bifurcation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipCase {
    A,
    B,
    C,
    Resonant,
}

/// Classify the flip case from a real-saddle spectrum.
///
/// Case A: `|l_s| > l_u`. Case B (inclination): `l_u/2 < |l_s| < l_u` and
/// `|l_ss| > l_u`; case B (orbit): `|l_s| < l_u` and `|l_ss| > l_u`.
/// Everything else with `|l_s| < l_u` is case C.
pub fn classify_flip_case(spec: &Spectrum, flavor: FlipFlavor) -> Result<FlipCase> {
    let fr = spec
        .saddle
        .ok_or_else(|| Error::NotRealSaddle(format!("{:?}", spec.eigenvalues)))?;
    let (ls, lss, lu) = (fr.l_s.abs(), fr.l_ss.abs(), fr.l_u);
    let scale = lu.max(ls).max(1.0);
    if (ls - lu).abs() <= RESONANCE_TOL * scale {
        return Ok(FlipCase::Resonant);
    }
    if ls > lu {
        return Ok(FlipCase::A);
    }
    Ok(match flavor {
        FlipFlavor::Inclination => {
            if ls > lu / 2.0 && lss > lu {
                FlipCase::B
            } else {
                FlipCase::C
            }
        }
        FlipFlavor::Orbit => {
            if lss > lu {
                FlipCase::B
            } else {
                FlipCase::C
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};

    fn if_params(alpha: f64, mu: f64) -> ModelParams {
        presets::scenario_if().with(ParamId::Alpha, alpha).with(ParamId::Mu, mu)
    }

    #[test]
    fn origin_is_equilibrium_for_any_params() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let p = ModelParams::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            assert_eq!(eval_field(Vector3::zeros(), &p), Vector3::zeros());
        }
    }

    #[test]
    fn hand_substituted_field_values() {
        let p = ModelParams::new(0.22, 1.0, -2.0, 0.65, 1.0, 2.0, 0.0, 0.0);
        let v = eval_field(Vector3::new(1.0, 0.0, 0.0), &p);
        assert_relative_eq!(v.x, 0.0, epsilon = 1e-15);
        assert_relative_eq!(v.y, -0.5, epsilon = 1e-15);
        assert_relative_eq!(v.z, 0.0, epsilon = 1e-15);
        let v = eval_field(Vector3::new(0.0, 0.0, 1.0), &p);
        assert_eq!(v, Vector3::new(0.0, 0.0, -2.0));
    }

    #[test]
    fn z_axis_invariant() {
        let p = if_params(0.65, -0.004);
        for z in [-2.0, -0.5, 0.1, 1.7] {
            let v = eval_field(Vector3::new(0.0, 0.0, z), &p);
            assert_eq!(v.x, 0.0);
            assert_eq!(v.y, 0.0);
        }
    }

    #[test]
    fn z_alpha_symmetry_at_mu_zero() {
        // With mu = 0 the field is equivariant under (z, alpha) -> (-z, -alpha).
        let p = if_params(0.65, 0.0);
        let p_neg = p.with(ParamId::Alpha, -0.65);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x = State3::new(
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
            );
            let v = eval_field(x, &p);
            let w = eval_field(State3::new(x.x, x.y, -x.z), &p_neg);
            assert_relative_eq!(w.x, v.x, epsilon = 1e-14, max_relative = 1e-12);
            assert_relative_eq!(w.y, v.y, epsilon = 1e-14, max_relative = 1e-12);
            assert_relative_eq!(w.z, -v.z, epsilon = 1e-14, max_relative = 1e-12);
        }
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let p = if_params(0.65, -0.004);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let x = State3::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            );
            let j = eval_jacobian(x, &p);
            let h = 1e-6;
            for col in 0..3 {
                let mut e = Vector3::zeros();
                e[col] = h;
                let fd = (eval_field(x + e, &p) - eval_field(x - e, &p)) / (2.0 * h);
                for row in 0..3 {
                    let scale = j.amax().max(1.0);
                    assert!(
                        (fd[row] - j[(row, col)]).abs() <= 1e-6 * scale,
                        "fd mismatch at ({row},{col}): {} vs {}",
                        fd[row],
                        j[(row, col)]
                    );
                }
            }
        }
    }

    #[test]
    fn jacobian_origin_block_structure() {
        let p = ModelParams::new(0.3, 1.1, -2.0, 0.5, 1.0, 2.0, 0.25, 0.0);
        let j = eval_jacobian(Vector3::zeros(), &p);
        let expect = Matrix3::new(0.3, 1.1, 0.0, 1.1, 0.3, 0.0, 0.25, 0.0, -2.0);
        assert!((j - expect).amax() < 1e-15);
    }

    #[test]
    fn param_derivatives_match_fd() {
        let p = if_params(0.65, -0.004);
        let x = State3::new(0.3, -0.2, 0.1);
        let h = 1e-7;
        for id in [
            ParamId::A,
            ParamId::B,
            ParamId::C,
            ParamId::Alpha,
            ParamId::Beta,
            ParamId::Gamma,
            ParamId::Mu,
            ParamId::Mutilde,
        ] {
            let d = eval_dfield_dparam(x, &p, id);
            let fd = (eval_field(x, &p.with(id, p.get(id) + h))
                - eval_field(x, &p.with(id, p.get(id) - h)))
                / (2.0 * h);
            assert!((d - fd).norm() < 1e-6, "param {:?}", id);
        }
    }

    #[test]
    fn origin_spectrum_if_preset() {
        let spec = origin_spectrum(&presets::scenario_if()).unwrap();
        let fr = spec.saddle.unwrap();
        assert_relative_eq!(fr.l_u, 1.22, epsilon = 1e-12);
        assert_relative_eq!(fr.l_s, -0.78, epsilon = 1e-12);
        assert_relative_eq!(fr.l_ss, -2.0, epsilon = 1e-12);
        // Third eigenvector is the z-axis.
        assert_relative_eq!(fr.e_ss.z.abs(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn origin_spectrum_of_preset() {
        let spec = origin_spectrum(&presets::scenario_of()).unwrap();
        let fr = spec.saddle.unwrap();
        assert_relative_eq!(fr.l_u, 2.0, epsilon = 1e-12);
        assert_relative_eq!(fr.l_s, -1.0, epsilon = 1e-12);
        assert_relative_eq!(fr.l_ss, -3.0, epsilon = 1e-12);
    }

    #[test]
    fn origin_spectrum_resonant_case_flagged() {
        let p = ModelParams::new(0.0, 1.0, -2.0, 0.5, 1.0, 2.0, 0.0, 0.0);
        let spec = origin_spectrum(&p).unwrap();
        assert!(spec.resonant, "a=0 gives |l_s| = l_u = 1");
        assert_eq!(classify_flip_case(&spec, FlipFlavor::Inclination).unwrap(), FlipCase::Resonant);
    }

    #[test]
    fn origin_spectrum_agrees_with_dense_eigensolve_for_nonzero_mu() {
        // The analytic formula holds for all mu because the Jacobian at the
        // origin is block triangular.
        let p = if_params(0.65, -0.3);
        let spec = origin_spectrum(&p).unwrap();
        let dense = Spectrum::from_matrix(&eval_jacobian(Vector3::zeros(), &p));
        let mut a: Vec<f64> = spec.eigenvalues.iter().map(|e| e.re).collect();
        let mut b: Vec<f64> = dense.eigenvalues.iter().map(|e| e.re).collect();
        a.sort_by(|x, y| x.partial_cmp(y).unwrap());
        b.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for (x, y) in a.iter().zip(&b) {
            assert_relative_eq!(x, y, epsilon = 1e-10);
        }
        // Eigenpair residuals against the Jacobian.
        let j = eval_jacobian(Vector3::zeros(), &p);
        let fr = spec.saddle.unwrap();
        for (l, e) in [(fr.l_ss, fr.e_ss), (fr.l_s, fr.e_s), (fr.l_u, fr.e_u)] {
            assert!((j * e - e * l).norm() <= 1e-10 * j.amax());
            assert_relative_eq!(e.norm(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn classify_cases() {
        let mk = |l_ss: f64, l_s: f64, l_u: f64| {
            let m = Matrix3::new(l_u, 0.0, 0.0, 0.0, l_s, 0.0, 0.0, 0.0, l_ss);
            Spectrum::from_matrix(&m)
        };
        // IF preset eigenvalues (1.22, -0.78, -2): 0.61 < 0.78 < 1.22 and 2 > 1.22.
        assert_eq!(
            classify_flip_case(&mk(-2.0, -0.78, 1.22), FlipFlavor::Inclination).unwrap(),
            FlipCase::B
        );
        // OF preset eigenvalues (2, -3, -1): 1 < 2 and 3 > 2.
        assert_eq!(classify_flip_case(&mk(-3.0, -1.0, 2.0), FlipFlavor::Orbit).unwrap(), FlipCase::B);
        // |l_s| > l_u is case A for either flavor.
        assert_eq!(classify_flip_case(&mk(-3.0, -1.5, 1.0), FlipFlavor::Inclination).unwrap(), FlipCase::A);
        assert_eq!(classify_flip_case(&mk(-3.0, -1.5, 1.0), FlipFlavor::Orbit).unwrap(), FlipCase::A);
        // Weak strong-stable eigenvalue gives case C.
        assert_eq!(classify_flip_case(&mk(-1.1, -0.9, 1.0), FlipFlavor::Inclination).unwrap(), FlipCase::C);
        // Inclination-specific: |l_s| < l_u/2 with strong l_ss is also C.
        assert_eq!(classify_flip_case(&mk(-3.0, -0.4, 1.0), FlipFlavor::Inclination).unwrap(), FlipCase::C);
        assert_eq!(classify_flip_case(&mk(-3.0, -0.4, 1.0), FlipFlavor::Orbit).unwrap(), FlipCase::B);
        // Non-saddle input is an error.
        let sink = mk(-3.0, -1.0, -0.5);
        assert!(classify_flip_case(&sink, FlipFlavor::Orbit).is_err());
    }

    #[test]
    fn find_equilibria_contains_origin_and_saddle_focus() {
        let p = if_params(0.65, -0.004);
        let eqs = find_equilibria(&p, [(-3.0, 3.0); 3], 21).unwrap();
        assert!(eqs.iter().any(|e| e.location.norm() < 1e-9));
        for e in &eqs {
            assert!(eval_field(e.location, &p).norm() <= 1e-10, "residual too big");
        }
        // Exactly one extra saddle focus with 2D unstable manifold.
        let focus: Vec<_> = eqs
            .iter()
            .filter(|e| e.class == StabilityClass::SaddleFocus && e.location.norm() > 1e-6)
            .collect();
        assert_eq!(focus.len(), 1, "expected a single extra saddle focus, got {:?}",
            eqs.iter().map(|e| (e.location, e.class)).collect::<Vec<_>>());
        assert_eq!(focus[0].unstable_dim, 2);
    }

    #[test]
    fn find_equilibria_rejects_bad_box() {
        let p = presets::scenario_if();
        assert!(find_equilibria(&p, [(1.0, -1.0), (-1.0, 1.0), (-1.0, 1.0)], 5).is_err());
    }
}
