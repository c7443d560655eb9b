//! Poincare compactification of the model onto the ball of radius two,
//! the three coordinate charts covering infinity, the induced planar
//! dynamics at infinity and their first integrals.
//!
//! All boundary-capable evaluations use polynomial-cleared forms: the
//! singular denominators of the raw transformation are multiplied through
//! symbolically, so the sphere at infinity can be evaluated directly.

use crate::error::Error;
use crate::linalg::{self, Eig};
use crate::model::{ModelParams, State3};
use crate::Result;
use nalgebra::{Matrix3, Vector3};

/// A point of the compactified phase space, `|p| <= 2`; the boundary sphere
/// carries the dynamics at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallPoint(pub State3);

impl BallPoint {
    pub fn new(p: State3) -> Result<Self> {
        let n = p.norm();
        if n > 2.0 + 1e-12 {
            return Err(Error::AtInfinity { norm: n });
        }
        Ok(BallPoint(p))
    }

    pub fn is_at_infinity(&self) -> bool {
        (self.0.norm() - 2.0).abs() <= 1e-12
    }
}

/// Central projection onto the hemisphere followed by stereographic
/// projection from the south pole; maps R^3 into the open ball of radius 2.
pub fn compactify(p: State3) -> BallPoint {
    let r2 = p.norm_squared();
    BallPoint(p * (2.0 / (1.0 + (1.0 + r2).sqrt())))
}

/// Inverse of [`compactify`]; only defined strictly inside the ball.
pub fn decompactify(p: &BallPoint) -> Result<State3> {
    let r2 = p.0.norm_squared();
    if r2 >= 4.0 {
        return Err(Error::AtInfinity { norm: r2.sqrt() });
    }
    Ok(p.0 * (4.0 / (4.0 - r2)))
}

/// The matrix factor of the compactified field (the derivative of the
/// two projections, with the scalar prefactor split off).
fn projection_matrix(p: &State3) -> Matrix3<f64> {
    let (x, y, z) = (p.x, p.y, p.z);
    Matrix3::new(
        (-x * x + y * y + z * z + 4.0) / 4.0,
        -x * y / 2.0,
        -x * z / 2.0,
        -x * y / 2.0,
        (x * x - y * y + z * z + 4.0) / 4.0,
        -y * z / 2.0,
        -x * z / 2.0,
        -y * z / 2.0,
        (x * x + y * y - z * z + 4.0) / 4.0,
    )
}

/// `(4 - |p|^2)^3 X(4 p / (4 - |p|^2))` expanded by homogeneous degree, so
/// it is a polynomial in `p` and evaluable at the boundary.
fn cleared_pullback_field(p: &State3, params: &ModelParams) -> Vector3<f64> {
    let (x, y, z) = (p.x, p.y, p.z);
    let ModelParams { a, b, c, alpha, beta, gamma, mu, mutilde } = *params;
    let d = 4.0 - p.norm_squared();

    // Homogeneous parts of the model field by degree.
    let p1_1 = a * x + b * y + 2.0 * mutilde * x;
    let p1_2 = -(a + 3.0 * mutilde) * x * x - 2.0 * alpha * x * z;
    let p1_3 = 3.0 * alpha * x * x * z;

    let p2_1 = b * x + a * y - 2.0 * mutilde * y;
    let p2_2 = -1.5 * b * x * x - 1.5 * a * x * y + 2.0 * alpha * y * z;

    let p3_1 = c * z + mu * x;
    let p3_2 = gamma * x * z + alpha * beta * (x * x - y * y);
    let p3_3 = -alpha * beta * x * x * x;

    Vector3::new(
        4.0 * d * d * p1_1 + 16.0 * d * p1_2 + 64.0 * p1_3,
        4.0 * d * d * p2_1 + 16.0 * d * p2_2,
        4.0 * d * d * p3_1 + 16.0 * d * p3_2 + 64.0 * p3_3,
    )
}

/// Compactified vector field on the closed ball of radius two.
///
/// Inside the ball this equals the stated scalar prefactor times the pushed
/// forward field; on the boundary sphere it is evaluated through the
/// polynomial-cleared form, and the sphere is invariant (the radial
/// component vanishes identically).
pub fn eval_compact_field(p: &BallPoint, params: &ModelParams) -> Vector3<f64> {
    let denom = p.0.norm_squared() + 4.0;
    projection_matrix(&p.0) * cleared_pullback_field(&p.0, params) / (denom * denom * denom)
}

/// The time-conjugate field: trajectories of this field, in the original
/// time variable, map to model trajectories under [`decompactify`]. Equals
/// the compact field divided by its time-rescaling factor, so it is only
/// defined strictly inside the ball.
pub fn eval_conjugate_field(p: &BallPoint, params: &ModelParams) -> Result<Vector3<f64>> {
    let r2 = p.0.norm_squared();
    if r2 >= 4.0 {
        return Err(Error::AtInfinity { norm: r2.sqrt() });
    }
    let y4 = (4.0 - r2) / (4.0 + r2);
    Ok(eval_compact_field(p, params) / (y4 * y4))
}

/// One of the three charts used to study the dynamics at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartId {
    U1,
    U2,
    U3,
}

impl ChartId {
    pub fn name(&self) -> &'static str {
        match self {
            ChartId::U1 => "U1",
            ChartId::U2 => "U2",
            ChartId::U3 => "U3",
        }
    }

    /// Names of the two in-chart coordinates.
    pub fn coord_names(&self) -> (&'static str, &'static str) {
        match self {
            ChartId::U1 => ("y", "z"),
            ChartId::U2 => ("x", "z"),
            ChartId::U3 => ("x", "y"),
        }
    }
}

/// A point in chart coordinates; `w = 0` represents infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint {
    pub chart: ChartId,
    /// First in-chart coordinate (`y` in U1, `x` in U2 and U3).
    pub u: f64,
    /// Second in-chart coordinate (`z` in U1 and U2, `y` in U3).
    pub v: f64,
    /// Proximity to infinity, `w >= 0`.
    pub w: f64,
}

/// Chart vector field with the strictly positive denominator dropped as a
/// time rescaling, polynomial-cleared so `w = 0` is evaluable.
pub fn chart_field(c: &ChartPoint, params: &ModelParams) -> Vector3<f64> {
    let ModelParams { a, b, c: cc, alpha, beta, gamma, mu, mutilde } = *params;
    let w = c.w;
    let w2 = w * w;
    match c.chart {
        ChartId::U1 => {
            let (y, z) = (c.u, c.v);
            let q1 = w2 * (a + b * y + 2.0 * mutilde) - w * (a + 3.0 * mutilde + 2.0 * alpha * z)
                + 3.0 * alpha * z;
            let q2 = w2 * (b + a * y - 2.0 * mutilde * y)
                + w * (-1.5 * b - 1.5 * a * y + 2.0 * alpha * y * z);
            let q3 = w2 * (cc * z + mu)
                + w * (gamma * z + alpha * beta * (1.0 - y * y))
                - alpha * beta;
            Vector3::new(-y * q1 + q2, -z * q1 + q3, -w * q1)
        }
        ChartId::U2 => {
            let (x, z) = (c.u, c.v);
            let q1 = w2 * (a * x + b + 2.0 * mutilde * x)
                + w * (-(a + 3.0 * mutilde) * x * x - 2.0 * alpha * x * z)
                + 3.0 * alpha * x * x * z;
            let q2 = w2 * (b * x + a - 2.0 * mutilde)
                + w * (-1.5 * b * x * x - 1.5 * a * x + 2.0 * alpha * z);
            let q3 = w2 * (cc * z + mu * x)
                + w * (gamma * x * z + alpha * beta * (x * x - 1.0))
                - alpha * beta * x * x * x;
            Vector3::new(-x * q2 + q1, -z * q2 + q3, -w * q2)
        }
        ChartId::U3 => {
            let (x, y) = (c.u, c.v);
            let q1 = w2 * (a * x + b * y + 2.0 * mutilde * x)
                + w * (-(a + 3.0 * mutilde) * x * x - 2.0 * alpha * x)
                + 3.0 * alpha * x * x;
            let q2 = w2 * (b * x + a * y - 2.0 * mutilde * y)
                + w * (-1.5 * b * x * x - 1.5 * a * x * y + 2.0 * alpha * y);
            let q3 = w2 * (cc + mu * x)
                + w * (gamma * x + alpha * beta * (x * x - y * y))
                - alpha * beta * x * x * x;
            Vector3::new(-x * q3 + q1, -y * q3 + q2, -w * q3)
        }
    }
}

/// Planar dynamics at infinity in one chart; depends only on alpha and beta.
pub fn infinity_field(chart: ChartId, q: [f64; 2], alpha: f64, beta: f64) -> [f64; 2] {
    match chart {
        ChartId::U1 => {
            let (y, z) = (q[0], q[1]);
            [-3.0 * alpha * y * z, -alpha * (3.0 * z * z + beta)]
        }
        ChartId::U2 => {
            let (x, z) = (q[0], q[1]);
            [3.0 * alpha * x * x * z, -alpha * beta * x * x * x]
        }
        ChartId::U3 => {
            let (x, y) = (q[0], q[1]);
            [alpha * x * x * (beta * x * x + 3.0), alpha * beta * x * x * x * y]
        }
    }
}

/// Jacobian of [`infinity_field`], row major.
pub fn infinity_field_jacobian(chart: ChartId, q: [f64; 2], alpha: f64, beta: f64) -> [[f64; 2]; 2] {
    match chart {
        ChartId::U1 => {
            let (y, z) = (q[0], q[1]);
            [[-3.0 * alpha * z, -3.0 * alpha * y], [0.0, -6.0 * alpha * z]]
        }
        ChartId::U2 => {
            let (x, z) = (q[0], q[1]);
            [
                [6.0 * alpha * x * z, 3.0 * alpha * x * x],
                [-3.0 * alpha * beta * x * x, 0.0],
            ]
        }
        ChartId::U3 => {
            let (x, y) = (q[0], q[1]);
            [
                [4.0 * alpha * beta * x * x * x + 6.0 * alpha * x, 0.0],
                [3.0 * alpha * beta * x * x * y, alpha * beta * x * x * x],
            ]
        }
    }
}

/// First integral of the infinity dynamics in one chart.
pub fn first_integral(chart: ChartId, q: [f64; 2], beta: f64) -> Result<f64> {
    match chart {
        ChartId::U1 => {
            let (y, z) = (q[0], q[1]);
            let den = (3.0 * z * z + beta).abs();
            if y == 0.0 || den == 0.0 {
                return Err(Error::FirstIntegralUndefined("U1: y = 0 or 3 z^2 + beta = 0".into()));
            }
            Ok((y * y / den).ln())
        }
        ChartId::U2 => {
            let (x, z) = (q[0], q[1]);
            Ok(beta * x * x + 3.0 * z * z)
        }
        ChartId::U3 => {
            let (x, y) = (q[0], q[1]);
            let num = (beta * x * x + 3.0).abs();
            if y == 0.0 || num == 0.0 {
                return Err(Error::FirstIntegralUndefined("U3: y = 0 or beta x^2 + 3 = 0".into()));
            }
            Ok((num / (y * y)).ln())
        }
    }
}

/// An isolated equilibrium of the infinity dynamics in one chart.
#[derive(Debug, Clone, Copy)]
pub struct InfinityEquilibrium {
    pub chart: ChartId,
    pub point: [f64; 2],
    pub eigenvalues: [Eig; 2],
    pub hyperbolic: bool,
}

/// A one-dimensional set of non-hyperbolic equilibria at infinity.
#[derive(Debug, Clone)]
pub struct DegenerateSet {
    pub chart: ChartId,
    /// Direction of the equilibrium line through the origin of the chart.
    pub axis: [f64; 2],
    pub note: String,
}

/// Per-chart report of equilibria at infinity.
#[derive(Debug, Clone)]
pub struct InfinityReport {
    pub isolated: Vec<InfinityEquilibrium>,
    pub degenerate: Vec<DegenerateSet>,
}

impl InfinityReport {
    pub fn isolated_in(&self, chart: ChartId) -> Vec<&InfinityEquilibrium> {
        self.isolated.iter().filter(|e| e.chart == chart).collect()
    }
}

fn isolated_eq(chart: ChartId, point: [f64; 2], alpha: f64, beta: f64) -> InfinityEquilibrium {
    let j = infinity_field_jacobian(chart, point, alpha, beta);
    let eigenvalues = linalg::eig2(j[0][0], j[0][1], j[1][0], j[1][1]);
    let scale = eigenvalues.iter().map(|e| e.norm()).fold(1.0, f64::max);
    let hyperbolic = eigenvalues.iter().all(|e| e.re.abs() > 1e-12 * scale);
    InfinityEquilibrium { chart, point, eigenvalues, hyperbolic }
}

/// Equilibrium structure at infinity for given `alpha != 0`, `beta`.
///
/// For `beta < 0` chart U1 carries a hyperbolic pair at
/// `(0, +-sqrt(-beta/3))` and U3 the pair `(+-sqrt(-3/beta), 0)`; for
/// `beta = 0` the equilibria degenerate into lines; for `beta > 0` there are
/// no isolated equilibria, only the non-hyperbolic axes of U2 and U3.
pub fn infinity_equilibria(alpha: f64, beta: f64) -> Result<InfinityReport> {
    if alpha == 0.0 {
        return Err(Error::DegenerateInfinityField);
    }
    let mut isolated = Vec::new();
    let mut degenerate = Vec::new();
    if beta < 0.0 {
        let z0 = (-beta / 3.0).sqrt();
        isolated.push(isolated_eq(ChartId::U1, [0.0, z0], alpha, beta));
        isolated.push(isolated_eq(ChartId::U1, [0.0, -z0], alpha, beta));
        let x0 = (-3.0 / beta).sqrt();
        isolated.push(isolated_eq(ChartId::U3, [x0, 0.0], alpha, beta));
        isolated.push(isolated_eq(ChartId::U3, [-x0, 0.0], alpha, beta));
    } else if beta == 0.0 {
        degenerate.push(DegenerateSet {
            chart: ChartId::U1,
            axis: [1.0, 0.0],
            note: "axis of equilibria; origin is a saddle-node with every line \
                   through the origin invariant"
                .into(),
        });
        degenerate.push(DegenerateSet {
            chart: ChartId::U2,
            axis: [1.0, 0.0],
            note: "axis of degenerate equilibria".into(),
        });
    }
    // The z-axis of U2 and the y-axis of U3 consist of non-hyperbolic
    // equilibria for every beta.
    degenerate.push(DegenerateSet {
        chart: ChartId::U2,
        axis: [0.0, 1.0],
        note: "family of non-hyperbolic equilibria".into(),
    });
    degenerate.push(DegenerateSet {
        chart: ChartId::U3,
        axis: [0.0, 1.0],
        note: "family of non-hyperbolic equilibria".into(),
    });
    Ok(InfinityReport { isolated, degenerate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn params_fig1a() -> ModelParams {
        ModelParams::new(0.22, 1.0, -2.0, 0.3, 1.0, 2.0, 0.0, 0.0)
    }

    #[test]
    fn compactify_anchor_points() {
        assert_eq!(compactify(Vector3::zeros()).0, Vector3::zeros());
        let p = compactify(Vector3::new(3.0, 0.0, 0.0));
        assert_relative_eq!(p.0.x, 6.0 / (10.0_f64.sqrt() + 1.0), epsilon = 1e-14);
        assert_eq!(p.0.y, 0.0);
        let big = compactify(Vector3::new(1e6, 0.0, 0.0));
        assert!(big.0.norm() > 2.0 - 1e-5 && big.0.norm() < 2.0);
    }

    #[test]
    fn decompactify_anchor_points() {
        let p = BallPoint::new(Vector3::new(1.44152, 0.0, 0.0)).unwrap();
        let x = decompactify(&p).unwrap();
        assert!((x.x - 3.0).abs() < 1e-5);
        assert!(decompactify(&BallPoint(Vector3::new(0.0, 0.0, 2.0))).is_err());
        assert!(BallPoint::new(Vector3::new(2.5, 0.0, 0.0)).is_err());
    }

    proptest! {
        #[test]
        fn round_trip_identity(
            x in -1e3_f64..1e3, y in -1e3_f64..1e3, z in -1e3_f64..1e3,
        ) {
            let p = Vector3::new(x, y, z);
            let back = decompactify(&compactify(p)).unwrap();
            let tol = 1e-12 * (1.0 + p.norm());
            prop_assert!((back - p).norm() <= tol);
        }

        #[test]
        fn compactify_monotone_in_radius(r1 in 1e-3_f64..1e3, f in 1.001_f64..10.0) {
            let p1 = Vector3::new(r1, 0.0, 0.0);
            let p2 = Vector3::new(r1 * f, 0.0, 0.0);
            prop_assert!(compactify(p2).0.norm() > compactify(p1).0.norm());
        }
    }

    #[test]
    fn round_trip_thousand_random_points() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let p = Vector3::new(
                rng.gen_range(-1e3..1e3),
                rng.gen_range(-1e3..1e3),
                rng.gen_range(-1e3..1e3),
            );
            let back = decompactify(&compactify(p)).unwrap();
            assert!((back - p).norm() <= 1e-12 * (1.0 + p.norm()));
        }
    }

    #[test]
    fn compact_field_fixes_origin_and_matches_interior_formula() {
        let params = params_fig1a();
        assert_eq!(
            eval_compact_field(&BallPoint(Vector3::zeros()), &params),
            Vector3::zeros()
        );
        // Interior: cleared form equals prefactor * projection * field at the
        // decompactified point.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let p = Vector3::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            );
            let bp = BallPoint::new(p).unwrap();
            let r2 = p.norm_squared();
            let y4 = (4.0 - r2) / (4.0 + r2);
            let direct = projection_matrix(&p)
                * crate::model::eval_field(decompactify(&bp).unwrap(), &params)
                * y4
                * y4
                * y4;
            let cleared = eval_compact_field(&bp, &params);
            assert!((direct - cleared).norm() <= 1e-12 * (1.0 + direct.norm()));
        }
    }

    #[test]
    fn boundary_sphere_invariant() {
        let params = params_fig1a();
        // Anchor from the invariant z-axis.
        let v = eval_compact_field(&BallPoint(Vector3::new(0.0, 0.0, 2.0)), &params);
        let radial = v.z; // radial direction at (0,0,2) is z
        assert!(radial.abs() <= 1e-10);
        // 500 random boundary points.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let dir = Vector3::new(
                rng.gen_range(-1.0..1.0_f64),
                rng.gen_range(-1.0..1.0_f64),
                rng.gen_range(-1.0..1.0_f64),
            );
            if dir.norm() < 1e-3 {
                continue;
            }
            let p = dir.normalize() * 2.0;
            let v = eval_compact_field(&BallPoint(p), &params);
            let radial = v.dot(&p) / 2.0;
            assert!(radial.abs() <= 1e-10, "radial component {radial}");
        }
    }

    #[test]
    fn boundary_field_antipodally_equivariant() {
        let params = params_fig1a();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let dir = Vector3::new(
                rng.gen_range(-1.0..1.0_f64),
                rng.gen_range(-1.0..1.0_f64),
                rng.gen_range(-1.0..1.0_f64),
            );
            if dir.norm() < 1e-3 {
                continue;
            }
            let p = dir.normalize() * 2.0;
            let v_plus = eval_compact_field(&BallPoint(p), &params);
            let v_minus = eval_compact_field(&BallPoint(-p), &params);
            assert!((v_minus + v_plus).norm() <= 1e-12 * (1.0 + v_plus.norm()));
        }
    }

    #[test]
    fn chart_field_infinity_plane_invariant_and_equilibria() {
        let params = ModelParams::new(0.22, 1.0, -2.0, 0.65, -1.0, 2.0, 0.0, 0.0);
        // w = 0 is invariant in every chart.
        for chart in [ChartId::U1, ChartId::U2, ChartId::U3] {
            let c = ChartPoint { chart, u: 0.37, v: -0.81, w: 0.0 };
            assert_eq!(chart_field(&c, &params).z, 0.0);
        }
        // Equilibrium of U1 at (0, sqrt(1/3)) for beta = -1.
        let c = ChartPoint { chart: ChartId::U1, u: 0.0, v: (1.0_f64 / 3.0).sqrt(), w: 0.0 };
        assert!(chart_field(&c, &params).norm() < 1e-12);
    }

    #[test]
    fn chart_fields_reduce_to_infinity_fields() {
        // On w = 0 the chart fields must reproduce the planar systems at
        // infinity exactly.
        let params = ModelParams::new(0.22, 1.0, -2.0, 0.65, -0.7, 2.0, 0.13, 0.41);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for chart in [ChartId::U1, ChartId::U2, ChartId::U3] {
            for _ in 0..50 {
                let u = rng.gen_range(-2.0..2.0);
                let v = rng.gen_range(-2.0..2.0);
                let full = chart_field(&ChartPoint { chart, u, v, w: 0.0 }, &params);
                let inf = infinity_field(chart, [u, v], params.alpha, params.beta);
                assert_relative_eq!(full.x, inf[0], epsilon = 1e-13, max_relative = 1e-12);
                assert_relative_eq!(full.y, inf[1], epsilon = 1e-13, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn infinity_field_anchors() {
        // U1 equilibrium for beta = -1.
        let v = infinity_field(ChartId::U1, [0.0, 0.57735026918962576], 0.65, -1.0);
        assert!(v[0].abs() < 1e-10 && v[1].abs() < 1e-10);
        // U3 hand substitution.
        let v = infinity_field(ChartId::U3, [1.0, 1.0], 1.0, 1.0);
        assert_eq!(v, [4.0, 1.0]);
        // U2 z-axis is a line of equilibria.
        let v = infinity_field(ChartId::U2, [0.0, 0.93], 0.65, 1.0);
        assert_eq!(v, [0.0, 0.0]);
    }

    #[test]
    fn first_integral_anchors() {
        assert_eq!(first_integral(ChartId::U2, [1.0, 1.0], 1.0).unwrap(), 4.0);
        assert_eq!(first_integral(ChartId::U1, [1.0, 0.0], 1.0).unwrap(), 0.0);
        assert!(first_integral(ChartId::U1, [0.0, 1.0], 1.0).is_err());
        assert!(first_integral(ChartId::U3, [1.0, 0.0], 1.0).is_err());
    }

    #[test]
    fn infinity_equilibria_by_beta_sign() {
        // beta < 0: hyperbolic pair in U1 with the stated eigenvalues.
        let rep = infinity_equilibria(0.65, -1.0).unwrap();
        let u1 = rep.isolated_in(ChartId::U1);
        assert_eq!(u1.len(), 2);
        let z0 = (1.0_f64 / 3.0).sqrt();
        let top = u1.iter().find(|e| e.point[1] > 0.0).unwrap();
        assert_relative_eq!(top.point[1], z0, epsilon = 1e-12);
        let mut ev: Vec<f64> = top.eigenvalues.iter().map(|e| e.re).collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_relative_eq!(ev[0], -6.0 * 0.65 * z0, epsilon = 1e-10); // -2.2517
        assert_relative_eq!(ev[1], -3.0 * 0.65 * z0, epsilon = 1e-10); // -1.1258
        assert!(top.hyperbolic);
        assert_eq!(rep.isolated_in(ChartId::U3).len(), 2);

        // beta > 0: no isolated equilibria at all.
        let rep = infinity_equilibria(0.65, 1.0).unwrap();
        assert!(rep.isolated.is_empty());
        assert!(rep.isolated_in(ChartId::U1).is_empty());

        // beta = 0: U1 degenerates to an axis of equilibria.
        let rep = infinity_equilibria(0.65, 0.0).unwrap();
        assert!(rep.isolated.is_empty());
        assert!(rep.degenerate.iter().any(|d| d.chart == ChartId::U1));

        assert!(infinity_equilibria(0.0, 1.0).is_err());
    }
}
