//! Reference implementations that share no code with the library, plus
//! proptest strategies.

#![allow(dead_code)]

use std::f64::consts::PI;

pub mod strategies;

/// `J_n(x) = (1/π) ∫₀^π cos(nτ − x sin τ) dτ` by the trapezoid rule, which
/// converges geometrically for this periodic integrand.
pub fn bessel_j(n: i32, x: f64) -> f64 {
    let m = 400 + 4 * x.abs().ceil() as usize;
    let h = PI / m as f64;
    let f = |t: f64| (n as f64 * t - x * t.sin()).cos();
    let mut s = 0.5 * (f(0.0) + f(PI));
    for k in 1..m {
        s += f(k as f64 * h);
    }
    s * h / PI
}

/// Plain bisection down to `tol`; the bracket must straddle one sign change.
pub fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut fa = f(a);
    assert!(fa * f(b) < 0.0, "no sign change on [{a}, {b}]");
    while b - a > tol {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Secant polish after bisection, for roots needed below bisection's
/// resolution on a flat function.
pub fn bisect_secant(f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let mut x0 = bisect(&f, a, b, 1e-6);
    let mut x1 = x0 + 1e-7;
    for _ in 0..60 {
        let (f0, f1) = (f(x0), f(x1));
        if f1 == f0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        x0 = x1;
        x1 = x2;
        if (x1 - x0).abs() < 1e-15 * x1.abs() {
            break;
        }
    }
    x1
}

/// First positive root of `f` found by scanning with step `h` and bisecting.
pub fn first_root(f: impl Fn(f64) -> f64, start: f64, h: f64, limit: f64) -> f64 {
    let mut a = start;
    let mut fa = f(a);
    while a < limit {
        let b = a + h;
        let fb = f(b);
        if fa * fb < 0.0 {
            return bisect_secant(&f, a, b);
        }
        a = b;
        fa = fb;
    }
    panic!("no root below {limit}");
}
