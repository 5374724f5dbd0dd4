//! Exponential of a hypercomplex variable.
//!
//! Splitting `w = m1*e1 + v` with pure-vector part `v = m2*e2 + m3*e3 +
//! m4*e4`, the cross terms of `v*v` cancel by anticommutativity and `v*v`
//! is a real multiple of `e1`. Calling that multiple the radicand `delta`,
//! the eigenvalues of the left regular representation are `m1 ± sqrt(delta)`
//! (each twice), and the exponential has one closed form per sign of
//! `delta`:
//!
//! ```text
//! delta > 0:   exp(w) = e^m1 (cosh(s) e1 + sinh(s)/s * v),  s = sqrt(delta)
//! delta < 0:   exp(w) = e^m1 (cos(s) e1  + sin(s)/s * v),   s = sqrt(-delta)
//! delta ~ 0:   exp(w) = e^m1 (e1 + v)
//! ```
//!
//! [`exp_series`] computes the same value by a different route entirely:
//! the flow of the linear system `x' = L x` with `L` the left regular
//! representation, evaluated at t = 1 by a scaling-and-squaring matrix
//! exponential. It serves as an independent check on the closed forms.

use crate::matrix::Matrix4;
use crate::num::HNum;

/// Relative tolerance deciding when the radicand counts as zero.
pub const RADICAND_EPS: f64 = 1e-12;

/// Which closed form applies, keyed on the sign of the radicand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `delta > 0`: real square root, cosh/sinh form.
    Hyperbolic,
    /// `delta < 0`: imaginary square root, cos/sin form.
    Trigonometric,
    /// `delta ~ 0`: quadruple eigenvalue, linear form `e1 + v`.
    Degenerate,
}

/// The radicand `delta = mu1*m2^2 + mu2*m3^2 - mu1*mu2*m4^2` together with
/// its branch classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Radicand {
    pub delta: f64,
    pub branch: Branch,
}

/// Classifies the pure-vector part of `w`. `delta` is the scalar value of
/// `v*v`; the branch is `Degenerate` when
/// `|delta| <= RADICAND_EPS * (1 + m2^2 + m3^2 + m4^2)`.
pub fn radicand(w: &HNum) -> Radicand {
    let [_, m2, m3, m4] = w.coeffs();
    let mu1 = w.system().mu1().as_f64();
    let mu2 = w.system().mu2().as_f64();
    let delta = mu1 * (m2 * m2) + mu2 * (m3 * m3) - mu1 * mu2 * (m4 * m4);
    let scale = 1.0 + m2 * m2 + m3 * m3 + m4 * m4;
    let branch = if delta.abs() <= RADICAND_EPS * scale {
        Branch::Degenerate
    } else if delta > 0.0 {
        Branch::Hyperbolic
    } else {
        Branch::Trigonometric
    };
    Radicand { delta, branch }
}

/// sinh(s)/s, switching to its Taylor polynomial near zero.
fn sinh_ratio(s: f64) -> f64 {
    if s < 1e-4 {
        let s2 = s * s;
        1.0 + s2 / 6.0 + s2 * s2 / 120.0
    } else {
        s.sinh() / s
    }
}

/// sin(s)/s, switching to its Taylor polynomial near zero.
fn sin_ratio(s: f64) -> f64 {
    if s < 1e-4 {
        let s2 = s * s;
        1.0 - s2 / 6.0 + s2 * s2 / 120.0
    } else {
        s.sin() / s
    }
}

/// Closed-form exponential: `e^m1 (f*e1 + g*v)` with `(f, g)` chosen by
/// the branch of the radicand.
pub fn exp_closed(w: &HNum) -> HNum {
    let [m1, m2, m3, m4] = w.coeffs();
    let r = radicand(w);
    let (f, g) = match r.branch {
        Branch::Degenerate => (1.0, 1.0),
        Branch::Hyperbolic => {
            let s = r.delta.sqrt();
            (s.cosh(), sinh_ratio(s))
        }
        Branch::Trigonometric => {
            let s = (-r.delta).sqrt();
            (s.cos(), sin_ratio(s))
        }
    };
    let e = m1.exp();
    HNum::raw(*w.system(), [e * f, e * g * m2, e * g * m3, e * g * m4])
}

/// Matrix exponential by scaling and squaring with a truncated Taylor
/// series: the matrix is halved until its largest entry is at most 0.5,
/// the series is summed until a term's largest entry drops below 1e-16,
/// and the result is squared back up.
fn expm(m: &Matrix4) -> Matrix4 {
    let mut scaled = *m;
    let mut squarings = 0u32;
    while scaled.max_abs() > 0.5 {
        scaled = scaled.scale(0.5);
        squarings += 1;
    }

    let mut sum = Matrix4::identity();
    let mut term = Matrix4::identity();
    let mut n = 1.0;
    while term.max_abs() >= 1e-16 {
        term = term.mul(&scaled).scale(1.0 / n);
        sum = sum.add(&term);
        n += 1.0;
    }

    for _ in 0..squarings {
        sum = sum.mul(&sum);
    }
    sum
}

/// Series oracle for the exponential: the first column of
/// `expm(left_rep(w))`, i.e. the t = 1 state of `x' = L x` started at `e1`.
pub fn exp_series(w: &HNum) -> HNum {
    let flow = expm(&w.left_rep());
    HNum::raw(*w.system(), flow.column(0))
}
