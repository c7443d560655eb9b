//! Adaptive initial-value integration with dense output and event detection.
//!
//! Dormand-Prince 5(4) with the classic continuous extension. This is the
//! oracle layer for the boundary-value machinery and does the direct work
//! for one-dimensional manifolds, phase portraits and section scans.

use crate::compactify::{self, BallPoint, ChartId};
use crate::model::{self, ModelParams, State3};
use nalgebra::Vector3;

/// Right-hand side of an autonomous or non-autonomous ODE.
pub trait Field {
    fn dim(&self) -> usize;
    fn eval(&self, t: f64, y: &[f64], out: &mut [f64]);
}

/// Field defined by a closure.
pub struct FnField<F: Fn(f64, &[f64], &mut [f64])> {
    pub dim: usize,
    pub f: F,
}

impl<F: Fn(f64, &[f64], &mut [f64])> Field for FnField<F> {
    fn dim(&self) -> usize {
        self.dim
    }
    fn eval(&self, t: f64, y: &[f64], out: &mut [f64]) {
        (self.f)(t, y, out)
    }
}

/// The model field.
pub struct ModelField(pub ModelParams);

impl Field for ModelField {
    fn dim(&self) -> usize {
        3
    }
    fn eval(&self, _t: f64, y: &[f64], out: &mut [f64]) {
        let v = model::eval_field(Vector3::new(y[0], y[1], y[2]), &self.0);
        out.copy_from_slice(v.as_slice());
    }
}

/// The compactified field on the closed ball (its own rescaled time).
pub struct CompactField(pub ModelParams);

impl Field for CompactField {
    fn dim(&self) -> usize {
        3
    }
    fn eval(&self, _t: f64, y: &[f64], out: &mut [f64]) {
        let v = compactify::eval_compact_field(&BallPoint(Vector3::new(y[0], y[1], y[2])), &self.0);
        out.copy_from_slice(v.as_slice());
    }
}

/// Time-conjugate compactified field (original time, interior only).
pub struct ConjugateCompactField(pub ModelParams);

impl Field for ConjugateCompactField {
    fn dim(&self) -> usize {
        3
    }
    fn eval(&self, _t: f64, y: &[f64], out: &mut [f64]) {
        let p = BallPoint(Vector3::new(y[0], y[1], y[2]));
        let v = compactify::eval_conjugate_field(&p, &self.0).expect("inside the ball");
        out.copy_from_slice(v.as_slice());
    }
}

/// Planar dynamics at infinity in one chart.
pub struct InfinityChartField {
    pub chart: ChartId,
    pub alpha: f64,
    pub beta: f64,
}

impl Field for InfinityChartField {
    fn dim(&self) -> usize {
        2
    }
    fn eval(&self, _t: f64, y: &[f64], out: &mut [f64]) {
        let v = compactify::infinity_field(self.chart, [y[0], y[1]], self.alpha, self.beta);
        out[0] = v[0];
        out[1] = v[1];
    }
}

/// Time-reversed wrapper.
pub struct Reversed<'a, F: Field + ?Sized>(pub &'a F);

impl<F: Field + ?Sized> Field for Reversed<'_, F> {
    fn dim(&self) -> usize {
        self.0.dim()
    }
    fn eval(&self, t: f64, y: &[f64], out: &mut [f64]) {
        self.0.eval(-t, y, out);
        for v in out.iter_mut() {
            *v = -*v;
        }
    }
}

/// Crossing direction filter for events.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventDirection {
    Any,
    Up,
    Down,
}

/// A scalar event function with crossing semantics.
pub struct EventSpec<'a> {
    pub g: Box<dyn Fn(f64, &[f64]) -> f64 + 'a>,
    pub direction: EventDirection,
    pub terminal: bool,
}

impl<'a> EventSpec<'a> {
    pub fn new(
        g: impl Fn(f64, &[f64]) -> f64 + 'a,
        direction: EventDirection,
        terminal: bool,
    ) -> Self {
        EventSpec { g: Box::new(g), direction, terminal }
    }

    /// Crossing of the sphere `|x - c| = r`.
    pub fn sphere(c: State3, r: f64, direction: EventDirection, terminal: bool) -> Self {
        Self::new(
            move |_t, y| {
                ((y[0] - c.x).powi(2) + (y[1] - c.y).powi(2) + (y[2] - c.z).powi(2)).sqrt() - r
            },
            direction,
            terminal,
        )
    }

    /// Crossing of the plane `n . x = offset`.
    pub fn plane(n: State3, offset: f64, direction: EventDirection, terminal: bool) -> Self {
        Self::new(
            move |_t, y| n.x * y[0] + n.y * y[1] + n.z * y[2] - offset,
            direction,
            terminal,
        )
    }

    /// Entering/leaving the ball of radius `rho` around `c`.
    pub fn ball(c: State3, rho: f64, direction: EventDirection, terminal: bool) -> Self {
        Self::sphere(c, rho, direction, terminal)
    }
}

/// A located event crossing.
#[derive(Debug, Clone)]
pub struct EventHit {
    pub event: usize,
    pub t: f64,
    pub state: Vec<f64>,
    pub rising: bool,
}

/// Integration options. Defaults are continuation-grade.
#[derive(Debug, Clone, Copy)]
pub struct IvpOpts {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
    pub first_step: Option<f64>,
    /// Keep dense-output records so the trajectory can be evaluated anywhere.
    pub dense: bool,
    pub blowup_norm: f64,
    pub min_step: f64,
}

impl Default for IvpOpts {
    fn default() -> Self {
        IvpOpts {
            rtol: 1e-9,
            atol: 1e-11,
            max_steps: 5_000_000,
            first_step: None,
            dense: false,
            blowup_norm: 1e6,
            min_step: 1e-14,
        }
    }
}

struct DenseSeg {
    t0: f64,
    h: f64,
    rcont: [Vec<f64>; 5],
}

impl DenseSeg {
    fn eval(&self, t: f64, out: &mut [f64]) {
        let th = (t - self.t0) / self.h;
        let th1 = 1.0 - th;
        for i in 0..out.len() {
            out[i] = self.rcont[0][i]
                + th * (self.rcont[1][i]
                    + th1 * (self.rcont[2][i] + th * (self.rcont[3][i] + th1 * self.rcont[4][i])));
        }
    }
}

/// An integrated trajectory: accepted step points, optional dense segments,
/// event hits and a blow-up flag.
pub struct Trajectory {
    pub dim: usize,
    pub times: Vec<f64>,
    states: Vec<f64>,
    dense: Vec<DenseSeg>,
    pub events: Vec<EventHit>,
    /// Step-size underflow or norm blow-up truncated the requested span.
    pub blew_up: bool,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn state(&self, i: usize) -> &[f64] {
        &self.states[i * self.dim..(i + 1) * self.dim]
    }

    pub fn last_state(&self) -> &[f64] {
        self.state(self.len() - 1)
    }

    pub fn last_time(&self) -> f64 {
        *self.times.last().unwrap()
    }

    /// Dense evaluation (requires `IvpOpts::dense`); clamps to the span.
    pub fn eval(&self, t: f64, out: &mut [f64]) {
        assert!(!self.dense.is_empty(), "trajectory recorded without dense output");
        let forward = self.dense[0].h > 0.0;
        let mut lo = 0usize;
        let mut hi = self.dense.len();
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            let tm = self.dense[mid].t0;
            if (forward && t >= tm) || (!forward && t <= tm) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        self.dense[lo].eval(t, out);
    }

    pub fn state3(&self, i: usize) -> State3 {
        let s = self.state(i);
        Vector3::new(s[0], s[1], s[2])
    }
}

// Dormand-Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 6] = [
    [0.2, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];
const D: [f64; 7] = [
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
];

fn rms_err(err: &[f64], y0: &[f64], y1: &[f64], rtol: f64, atol: f64) -> f64 {
    let n = err.len() as f64;
    (err.iter()
        .enumerate()
        .map(|(i, e)| {
            let sc = atol + rtol * y0[i].abs().max(y1[i].abs());
            (e / sc) * (e / sc)
        })
        .sum::<f64>()
        / n)
        .sqrt()
}

/// Integrate `field` from `y0` over `t_span`, locating events along the way.
/// Terminal events stop the integration; blow-up returns the partial
/// trajectory with `blew_up` set.
pub fn integrate(
    field: &dyn Field,
    y0: &[f64],
    t_span: (f64, f64),
    opts: &IvpOpts,
    events: &mut [EventSpec],
) -> Trajectory {
    let n = field.dim();
    assert_eq!(y0.len(), n);
    let (t0, t1) = t_span;
    let dir = if t1 >= t0 { 1.0 } else { -1.0 };
    let span = (t1 - t0).abs();

    let mut traj = Trajectory {
        dim: n,
        times: vec![t0],
        states: y0.to_vec(),
        dense: Vec::new(),
        events: Vec::new(),
        blew_up: false,
    };
    if span == 0.0 {
        return traj;
    }

    let mut t = t0;
    let mut y = y0.to_vec();
    let mut k: Vec<Vec<f64>> = (0..7).map(|_| vec![0.0; n]).collect();
    field.eval(t, &y, &mut k[0]);

    let mut g_prev: Vec<f64> = events.iter().map(|e| (e.g)(t, &y)).collect();

    let mut h = opts.first_step.unwrap_or_else(|| {
        let fnorm = k[0].iter().map(|v| v * v).sum::<f64>().sqrt();
        let ynorm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        (0.01 * (ynorm + 1.0) / (fnorm + 1e-10)).min(span / 10.0).max(1e-8)
    }) * dir;

    let mut ytmp = vec![0.0; n];
    let mut ynew = vec![0.0; n];
    let mut err = vec![0.0; n];

    for _step in 0..opts.max_steps {
        if (t - t1).abs() <= 1e-14 * span.max(1.0) {
            break;
        }
        if (h > 0.0 && t + h > t1) || (h < 0.0 && t + h < t1) {
            h = t1 - t;
        }
        if h.abs() < opts.min_step * t.abs().max(1.0) {
            traj.blew_up = true;
            break;
        }

        // Stage evaluations.
        for s in 1..7 {
            for i in 0..n {
                let mut acc = 0.0;
                for (j, kj) in k.iter().enumerate().take(s) {
                    acc += A[s - 1][j] * kj[i];
                }
                ytmp[i] = y[i] + h * acc;
            }
            if s == 6 {
                ynew.copy_from_slice(&ytmp);
            }
            field.eval(t + C[s] * h, &ytmp, &mut k[s]);
        }
        for i in 0..n {
            err[i] = h * (0..7).map(|j| E[j] * k[j][i]).sum::<f64>();
        }
        let e = rms_err(&err, &y, &ynew, opts.rtol, opts.atol);

        if e <= 1.0 {
            // Accept; build the dense segment for events/interpolation.
            let mut rcont: [Vec<f64>; 5] = [
                y.clone(),
                vec![0.0; n],
                vec![0.0; n],
                vec![0.0; n],
                vec![0.0; n],
            ];
            for i in 0..n {
                let ydiff = ynew[i] - y[i];
                let bspl = h * k[0][i] - ydiff;
                rcont[1][i] = ydiff;
                rcont[2][i] = bspl;
                rcont[3][i] = ydiff - h * k[6][i] - bspl;
                rcont[4][i] = h * (0..7).map(|j| D[j] * k[j][i]).sum::<f64>();
            }
            let seg = DenseSeg { t0: t, h, rcont };

            // Event detection over the step via the dense output.
            let mut terminal_hit: Option<f64> = None;
            const SAMPLES: usize = 8;
            let mut gbuf = vec![0.0; n];
            for (ev_idx, ev) in events.iter().enumerate() {
                let mut ta = t;
                let mut ga = g_prev[ev_idx];
                for s in 1..=SAMPLES {
                    let tb = t + h * (s as f64) / (SAMPLES as f64);
                    seg.eval(tb, &mut gbuf);
                    let gb = (ev.g)(tb, &gbuf);
                    let crossed = (ga < 0.0 && gb >= 0.0) || (ga > 0.0 && gb <= 0.0);
                    if crossed {
                        let rising = gb > ga;
                        let dir_ok = match ev.direction {
                            EventDirection::Any => true,
                            EventDirection::Up => rising,
                            EventDirection::Down => !rising,
                        };
                        if dir_ok {
                            // Bisection on the dense output.
                            let (mut lo, mut hi_t, mut glo) = (ta, tb, ga);
                            for _ in 0..80 {
                                let tm = 0.5 * (lo + hi_t);
                                seg.eval(tm, &mut gbuf);
                                let gm = (ev.g)(tm, &gbuf);
                                if (glo <= 0.0) == (gm <= 0.0) {
                                    lo = tm;
                                    glo = gm;
                                } else {
                                    hi_t = tm;
                                }
                                if (hi_t - lo).abs() <= 1e-13 * t.abs().max(1.0) {
                                    break;
                                }
                            }
                            let te = 0.5 * (lo + hi_t);
                            seg.eval(te, &mut gbuf);
                            traj.events.push(EventHit {
                                event: ev_idx,
                                t: te,
                                state: gbuf.clone(),
                                rising,
                            });
                            if ev.terminal {
                                terminal_hit = match terminal_hit {
                                    Some(prev) if (prev - t).abs() <= (te - t).abs() => Some(prev),
                                    _ => Some(te),
                                };
                            }
                        }
                    }
                    ta = tb;
                    ga = gb;
                }
            }

            if let Some(te) = terminal_hit {
                // Truncate the step at the first terminal event.
                seg.eval(te, &mut ytmp);
                traj.times.push(te);
                traj.states.extend_from_slice(&ytmp);
                traj.events.retain(|hit| (hit.t - t).abs() <= (te - t).abs() + 1e-12);
                if opts.dense {
                    traj.dense.push(seg);
                }
                return traj;
            }

            t += h;
            y.copy_from_slice(&ynew);
            k.swap(0, 6); // FSAL
            for (ev_idx, ev) in events.iter().enumerate() {
                g_prev[ev_idx] = (ev.g)(t, &y);
            }
            traj.times.push(t);
            traj.states.extend_from_slice(&y);
            if opts.dense {
                traj.dense.push(seg);
            }

            let ynorm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
            if ynorm > opts.blowup_norm {
                traj.blew_up = true;
                break;
            }

            let fac = if e > 0.0 { 0.9 * e.powf(-0.2) } else { 5.0 };
            h *= fac.clamp(0.2, 5.0);
        } else {
            h *= (0.9 * e.powf(-0.2)).clamp(0.1, 0.9);
        }
    }
    traj
}

/// Fixed-step Dormand-Prince (5th-order advance), for order checks.
pub fn integrate_fixed(field: &dyn Field, y0: &[f64], t_span: (f64, f64), n_steps: usize) -> Vec<f64> {
    let n = field.dim();
    let h = (t_span.1 - t_span.0) / n_steps as f64;
    let mut t = t_span.0;
    let mut y = y0.to_vec();
    let mut k: Vec<Vec<f64>> = (0..7).map(|_| vec![0.0; n]).collect();
    let mut ytmp = vec![0.0; n];
    for _ in 0..n_steps {
        field.eval(t, &y, &mut k[0]);
        for s in 1..7 {
            for i in 0..n {
                let mut acc = 0.0;
                for (j, kj) in k.iter().enumerate().take(s) {
                    acc += A[s - 1][j] * kj[i];
                }
                ytmp[i] = y[i] + h * acc;
            }
            field.eval(t + C[s] * h, &ytmp, &mut k[s]);
        }
        y.copy_from_slice(&ytmp);
        t += h;
    }
    y
}

/// One branch of a one-dimensional invariant manifold: seed at
/// `point + sign * eps * direction` and integrate.
pub fn manifold_1d_branch(
    field: &dyn Field,
    point: State3,
    direction: State3,
    sign: f64,
    eps: f64,
    t_max: f64,
    opts: &IvpOpts,
    events: &mut [EventSpec],
) -> Trajectory {
    let seed = point + direction.normalize() * (sign * eps);
    integrate(field, seed.as_slice(), (0.0, t_max), opts, events)
}

/// Both branches of a 1D unstable manifold of a real-saddle equilibrium.
/// For a 1D stable manifold pass the reversed field and the stable direction.
pub fn unstable_manifold_1d(
    field: &dyn Field,
    eq_location: State3,
    e_u: State3,
    eps: f64,
    t_max: f64,
    opts: &IvpOpts,
) -> (Trajectory, Trajectory) {
    let mut ev_a: Vec<EventSpec> = Vec::new();
    let mut ev_b: Vec<EventSpec> = Vec::new();
    let plus = manifold_1d_branch(field, eq_location, e_u, 1.0, eps, t_max, opts, &mut ev_a);
    let minus = manifold_1d_branch(field, eq_location, e_u, -1.0, eps, t_max, opts, &mut ev_b);
    (plus, minus)
}

/// A crossing of a trajectory with a plane.
#[derive(Debug, Clone)]
pub struct PlaneCrossing {
    pub t: f64,
    pub state: State3,
    pub rising: bool,
}

/// All crossings of the plane `n . x = offset` along an integration from
/// `seed`, up to `max_crossings`.
pub fn plane_crossings(
    field: &dyn Field,
    seed: State3,
    normal: State3,
    offset: f64,
    t_max: f64,
    opts: &IvpOpts,
    max_crossings: usize,
) -> Vec<PlaneCrossing> {
    let mut events = [EventSpec::plane(normal, offset, EventDirection::Any, false)];
    let traj = integrate(field, seed.as_slice(), (0.0, t_max), opts, &mut events);
    traj.events
        .iter()
        .take(max_crossings)
        .map(|h| PlaneCrossing {
            t: h.t,
            state: Vector3::new(h.state[0], h.state[1], h.state[2]),
            rising: h.rising,
        })
        .collect()
}

/// A sampled closed loop found by return-map clustering.
#[derive(Debug, Clone)]
pub struct LoopSample {
    pub period: f64,
    /// Uniformly spaced samples over one period (last != first).
    pub states: Vec<State3>,
}

/// Detect an attracting periodic orbit by Poincare-return clustering:
/// integrate past a transient, then collect returns to a section through the
/// settled point and look for consecutive returns that agree.
pub fn detect_periodic_attractor(
    field: &dyn Field,
    x0: State3,
    settle_time: f64,
    scan_time: f64,
    return_tol: f64,
    n_samples: usize,
) -> Option<LoopSample> {
    let opts = IvpOpts { rtol: 1e-10, atol: 1e-12, ..Default::default() };
    let settled = integrate(field, x0.as_slice(), (0.0, settle_time), &opts, &mut []);
    if settled.blew_up {
        return None;
    }
    let xs = settled.state3(settled.len() - 1);
    let mut f = [0.0; 3];
    field.eval(0.0, xs.as_slice(), &mut f);
    let fv = Vector3::new(f[0], f[1], f[2]);
    if fv.norm() < 1e-8 {
        return None; // converged to an equilibrium
    }
    let n = fv.normalize();
    let mut events = [EventSpec::plane(n, n.dot(&xs), EventDirection::Up, false)];
    let dense_opts = IvpOpts { dense: true, ..opts };
    let traj = integrate(field, xs.as_slice(), (0.0, scan_time), &dense_opts, &mut events);
    let hits = &traj.events;
    for w in hits.windows(2) {
        let a = Vector3::new(w[0].state[0], w[0].state[1], w[0].state[2]);
        let b = Vector3::new(w[1].state[0], w[1].state[1], w[1].state[2]);
        if (a - b).norm() < return_tol {
            let period = w[1].t - w[0].t;
            let mut states = Vec::with_capacity(n_samples);
            let mut buf = [0.0; 3];
            for i in 0..n_samples {
                let t = w[0].t + period * i as f64 / n_samples as f64;
                traj.eval(t, &mut buf);
                states.push(Vector3::new(buf[0], buf[1], buf[2]));
            }
            return Some(LoopSample { period, states });
        }
    }
    None
}
