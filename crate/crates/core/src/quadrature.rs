//! Product quadrature on `SU(2)` in Euler angles, exact for products of
//! Wigner functions of integer `j <= j_max`.
//!
//! The trapezoid rule in `α` and `γ` over `[0, 2π)` integrates `e^{ikα}`
//! exactly for `|k| < N`, and Gauss-Legendre in `cos β` with `n` nodes is
//! exact to polynomial degree `2n - 1`.

use crate::error::{Error, Result};
use crate::su2::CMat2;
use crate::wigner::EulerAngles;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Total mass of `dα sinβ dβ dγ` over `[0,2π) x [0,π] x [0,2π)`.
pub const EULER_VOLUME: f64 = 8.0 * PI * PI;

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// nodes ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Chebyshev-type initial guess, then Newton on P_n
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// A quadrature node on `SU(2)` with its normalized weight.
#[derive(Clone, Copy, Debug)]
pub struct Node {
    pub angles: EulerAngles,
    pub u: CMat2,
    pub weight: f64,
}

/// Product rule with weights summing to 1, i.e. for the measure
/// `(1/8π²) dα sinβ dβ dγ`.
#[derive(Clone, Debug)]
pub struct EulerQuadrature {
    j_max: u32,
    n_angle: usize,
    n_beta: usize,
    nodes: Vec<Node>,
}

impl EulerQuadrature {
    /// Smallest rule that is exact for integer `j, j' <= j_max`.
    pub fn exact_for(j_max: u32) -> Self {
        let n = 2 * j_max as usize;
        EulerQuadrature::with_resolution(j_max, n + 1, n + 2).expect("minimal resolution is valid")
    }

    pub fn with_resolution(j_max: u32, n_angle: usize, n_beta: usize) -> Result<Self> {
        let need = 2 * j_max as usize;
        if n_angle < need + 1 {
            return Err(Error::Resolution(format!(
                "{n_angle} nodes in α and γ, need at least {} for j_max = {j_max}",
                need + 1
            )));
        }
        if n_beta < need + 2 {
            return Err(Error::Resolution(format!(
                "{n_beta} nodes in cos β, need at least {} for j_max = {j_max}",
                need + 2
            )));
        }
        let (xs, ws) = gauss_legendre(n_beta);
        let step = 2.0 * PI / n_angle as f64;
        let mut nodes = Vec::with_capacity(n_angle * n_angle * n_beta);
        for a in 0..n_angle {
            for (x, w) in xs.iter().zip(&ws) {
                for g in 0..n_angle {
                    let angles = EulerAngles::new(a as f64 * step, x.acos(), g as f64 * step);
                    nodes.push(Node {
                        angles,
                        u: angles.to_su2(),
                        // (1/8π²) · step² · w, with ∫ sinβ dβ = ∫ d(cosβ)
                        weight: w / (2.0 * (n_angle * n_angle) as f64),
                    });
                }
            }
        }
        Ok(EulerQuadrature {
            j_max,
            n_angle,
            n_beta,
            nodes,
        })
    }

    pub fn j_max(&self) -> u32 {
        self.j_max
    }

    pub fn resolution(&self) -> (usize, usize) {
        (self.n_angle, self.n_beta)
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// `(1/8π²) ∫ f dα sinβ dβ dγ`.
    pub fn integrate(&self, f: impl Fn(&Node) -> Complex64) -> Complex64 {
        self.nodes.iter().map(|n| f(n) * n.weight).sum()
    }
}

/// `(1/8π²) ∫ conj(f) g dα sinβ dβ dγ`.
pub fn quadrature_inner(
    f: impl Fn(&Node) -> Complex64,
    g: impl Fn(&Node) -> Complex64,
    q: &EulerQuadrature,
) -> Complex64 {
    q.integrate(|n| f(n).conj() * g(n))
}
