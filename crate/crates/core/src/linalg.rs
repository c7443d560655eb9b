//! Small dense eigen-helpers for 2x2 and 3x3 real matrices.
//!
//! The toolkit only ever needs spectra of 3x3 Jacobians and monodromy
//! matrices, so closed-form characteristic polynomials plus a Newton polish
//! are both faster and easier to control than a general QR iteration.

use nalgebra::{Matrix3, Vector3};

/// A real or complex-conjugate eigenvalue of a real matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eig {
    pub re: f64,
    pub im: f64,
}

impl Eig {
    pub fn real(re: f64) -> Self {
        Eig { re, im: 0.0 }
    }
    pub fn is_real(&self) -> bool {
        self.im == 0.0
    }
    pub fn norm(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// Eigenvalues of a real 2x2 matrix `[[a, b], [c, d]]`.
pub fn eig2(a: f64, b: f64, c: f64, d: f64) -> [Eig; 2] {
    let tr = a + d;
    let det = a * d - b * c;
    let disc = tr * tr - 4.0 * det;
    if disc >= 0.0 {
        let s = disc.sqrt();
        // Stable quadratic roots: avoid cancellation in tr -+ s.
        let r1 = if tr >= 0.0 { (tr + s) / 2.0 } else { (tr - s) / 2.0 };
        let r2 = if r1 != 0.0 { det / r1 } else { (tr - s) / 2.0 };
        [Eig::real(r1), Eig::real(r2)]
    } else {
        let im = (-disc).sqrt() / 2.0;
        [
            Eig { re: tr / 2.0, im },
            Eig { re: tr / 2.0, im: -im },
        ]
    }
}

/// Eigenvalues of a real 3x3 matrix, as either three reals or one real plus
/// a complex-conjugate pair.
pub fn eig3(m: &Matrix3<f64>) -> [Eig; 3] {
    let tr = m.trace();
    // Sum of principal 2x2 minors.
    let minors = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
        + m[(0, 0)] * m[(2, 2)]
        - m[(0, 2)] * m[(2, 0)]
        + m[(1, 1)] * m[(2, 2)]
        - m[(1, 2)] * m[(2, 1)];
    let det = m.determinant();

    // lambda^3 + a2 lambda^2 + a1 lambda + a0
    let a2 = -tr;
    let a1 = minors;
    let a0 = -det;

    // Depressed cubic x^3 + p x + q with lambda = x - a2/3.
    let p = a1 - a2 * a2 / 3.0;
    let q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    let shift = -a2 / 3.0;

    let scale = m.amax().max(1e-300);
    let real_root = |x0: f64| -> f64 {
        // Newton polish on the original cubic for accuracy.
        let mut l = x0 + shift;
        for _ in 0..3 {
            let f = ((l + a2) * l + a1) * l + a0;
            let df = (3.0 * l + 2.0 * a2) * l + a1;
            if df.abs() > 1e-300 {
                l -= f / df;
            }
        }
        l
    };

    let half_q = q / 2.0;
    let disc = half_q * half_q + p * p * p / 27.0;
    let l1 = if disc > 0.0 {
        // One real root, complex pair follows from deflation.
        let s = disc.sqrt();
        let u = (-half_q + s).cbrt();
        let v = (-half_q - s).cbrt();
        real_root(u + v)
    } else {
        // Three real roots; pick the largest-magnitude trig root and deflate
        // for the others (more accurate than three direct trig roots).
        let r = (-p / 3.0).max(0.0).sqrt();
        if r < 1e-300 * scale {
            real_root(0.0)
        } else {
            let cos_arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
            let theta = cos_arg.acos();
            let mut best = 0.0;
            let mut best_abs = -1.0;
            for k in 0..3 {
                let x = 2.0 * r * ((theta - 2.0 * std::f64::consts::PI * k as f64) / 3.0).cos();
                if x.abs() > best_abs {
                    best_abs = x.abs();
                    best = x;
                }
            }
            real_root(best)
        }
    };

    // Deflate: lambda^2 + b1 lambda + b0 carries the remaining pair.
    let b1 = a2 + l1;
    let b0 = a1 + l1 * b1;
    let qdisc = b1 * b1 - 4.0 * b0;
    if qdisc >= 0.0 {
        let s = qdisc.sqrt();
        let r1 = if -b1 >= 0.0 { (-b1 + s) / 2.0 } else { (-b1 - s) / 2.0 };
        let r2 = if r1.abs() > 1e-300 { b0 / r1 } else { (-b1 - s) / 2.0 };
        [Eig::real(l1), Eig::real(r1), Eig::real(r2)]
    } else {
        let im = (-qdisc).sqrt() / 2.0;
        [
            Eig::real(l1),
            Eig { re: -b1 / 2.0, im },
            Eig { re: -b1 / 2.0, im: -im },
        ]
    }
}

/// Unit eigenvector of `m` for a real eigenvalue, via the largest cross
/// product of rows of `m - lambda I`.
pub fn real_eigenvector(m: &Matrix3<f64>, lambda: f64) -> Option<Vector3<f64>> {
    let a = m - Matrix3::identity() * lambda;
    let rows = [
        Vector3::new(a[(0, 0)], a[(0, 1)], a[(0, 2)]),
        Vector3::new(a[(1, 0)], a[(1, 1)], a[(1, 2)]),
        Vector3::new(a[(2, 0)], a[(2, 1)], a[(2, 2)]),
    ];
    let mut best: Option<Vector3<f64>> = None;
    let mut best_norm = 0.0;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let c = rows[i].cross(&rows[j]);
        let n = c.norm();
        if n > best_norm {
            best_norm = n;
            best = Some(c / n);
        }
    }
    // Rank-deficient beyond the eigenvector (double eigenvalue): no unique
    // direction.
    let scale = m.amax().max(1.0);
    if best_norm <= 1e-24 * scale * scale {
        return None;
    }
    best
}

/// Real and imaginary parts of a complex eigenvector for eigenvalue
/// `re + i im` (`im != 0`) of a real 3x3 matrix.
///
/// Returned as `(vr, vi)` with `m (vr + i vi) = (re + i im)(vr + i vi)`,
/// normalized so `|vr|^2 + |vi|^2 = 1`.
pub fn complex_eigenvector(m: &Matrix3<f64>, re: f64, im: f64) -> Option<(Vector3<f64>, Vector3<f64>)> {
    // Complex cross product of two rows of (m - lambda I) lies in the
    // nullspace with respect to the unconjugated bilinear form, which is what
    // (m - lambda I) v = 0 requires.
    let row = |i: usize, k: usize| -> (f64, f64) {
        let d = if i == k { 1.0 } else { 0.0 };
        (m[(i, k)] - re * d, -im * d)
    };
    let cross = |ra: [(f64, f64); 3], rb: [(f64, f64); 3]| -> [(f64, f64); 3] {
        let mul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
        let sub = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0, a.1 - b.1);
        [
            sub(mul(ra[1], rb[2]), mul(ra[2], rb[1])),
            sub(mul(ra[2], rb[0]), mul(ra[0], rb[2])),
            sub(mul(ra[0], rb[1]), mul(ra[1], rb[0])),
        ]
    };
    let r: Vec<[(f64, f64); 3]> = (0..3)
        .map(|i| [row(i, 0), row(i, 1), row(i, 2)])
        .collect();
    let mut best: Option<[(f64, f64); 3]> = None;
    let mut best_norm = 0.0;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let c = cross(r[i], r[j]);
        let n: f64 = c.iter().map(|z| z.0 * z.0 + z.1 * z.1).sum::<f64>().sqrt();
        if n > best_norm {
            best_norm = n;
            best = Some(c);
        }
    }
    let c = best?;
    if best_norm <= 1e-20 {
        return None;
    }
    let vr = Vector3::new(c[0].0, c[1].0, c[2].0);
    let vi = Vector3::new(c[0].1, c[1].1, c[2].1);
    let n = (vr.norm_squared() + vi.norm_squared()).sqrt();
    Some((vr / n, vi / n))
}

/// Orient a vector deterministically: flip sign so the largest-magnitude
/// component is positive.
pub fn orient(v: Vector3<f64>) -> Vector3<f64> {
    let mut k = 0;
    for i in 1..3 {
        if v[i].abs() > v[k].abs() {
            k = i;
        }
    }
    if v[k] < 0.0 {
        -v
    } else {
        v
    }
}
