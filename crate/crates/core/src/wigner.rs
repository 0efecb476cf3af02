//! Wigner `D^j` matrices of `SU(2)`, characters, Clebsch-Gordan
//! coefficients and the conjugation-adapted harmonics built from them.
//!
//! `D^j` is the representation on homogeneous polynomials of degree `2j` in
//! `(ξ1, ξ2)` with basis `ξ1^{j+m} ξ2^{j-m} / sqrt((j+m)!(j-m)!)`, where `u`
//! acts by `ξ1 -> ξ1 u11 + ξ2 u21`, `ξ2 -> ξ1 u12 + ξ2 u22`.
//!
//! Matrices are indexed with `m1` for rows and `m2` for columns, both in
//! descending order `j, j-1, ..., -j`. With this order `D^{1/2}(u) = u`.

use crate::error::{Error, Result};
use crate::su2::CMat2;
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::sync::OnceLock;

/// Unitarity tolerance for arguments of [`wigner_d`].
pub const UNITARY_TOL: f64 = 1e-9;

/// Largest supported `2j`.
pub const MAX_TWICE_J: u32 = 80;

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    pub fn int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    pub fn twice(self) -> i32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value; `None` for proper halves.
    pub fn as_int(self) -> Option<i32> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_int() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

impl std::str::FromStr for HalfInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<HalfInt> {
        let bad = || Error::InvalidLabel(format!("half-integer {s:?}"));
        match s.trim().split_once('/') {
            Some((n, "2")) => n.trim().parse().map(HalfInt).map_err(|_| bad()),
            Some(_) => Err(bad()),
            None => s.trim().parse::<i32>().map(HalfInt::int).map_err(|_| bad()),
        }
    }
}

/// `m = j, j-1, ..., -j`.
pub fn m_values(j: HalfInt) -> impl Iterator<Item = HalfInt> {
    let t = j.0;
    (0..=t).map(move |k| HalfInt(t - 2 * k))
}

fn factorials() -> &'static [f64] {
    static F: OnceLock<Vec<f64>> = OnceLock::new();
    F.get_or_init(|| {
        // exact integers while they fit, then floating continuation
        let mut v = Vec::with_capacity(2 * MAX_TWICE_J as usize + 2);
        let mut exact: u128 = 1;
        let mut approx = 1.0f64;
        for n in 0..(2 * MAX_TWICE_J as usize + 2) {
            if n > 0 {
                approx *= n as f64;
                exact = exact.saturating_mul(n as u128);
            }
            v.push(if exact < u128::MAX {
                exact as f64
            } else {
                approx
            });
        }
        v
    })
}

fn fact(n: i32) -> f64 {
    factorials()[n as usize]
}

fn binom(n: i32, k: i32) -> f64 {
    if k < 0 || k > n {
        0.0
    } else {
        fact(n) / (fact(k) * fact(n - k))
    }
}

fn check_spin(j: HalfInt) -> Result<()> {
    if j.0 < 0 || j.0 as u32 > MAX_TWICE_J {
        return Err(Error::InvalidLabel(format!("j = {j}")));
    }
    Ok(())
}

/// Deviation of `u` from `SU(2)`: `|u u^† - 1| + |det u - 1|`.
pub fn su2_deviation(u: &CMat2) -> f64 {
    (u * u.adjoint() - CMat2::identity()).norm()
        + (u.determinant() - Complex64::new(1.0, 0.0)).norm()
}

/// The matrix `D^j(u)` with rows `m1` and columns `m2` in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerBlock {
    j: HalfInt,
    matrix: DMatrix<Complex64>,
}

impl WignerBlock {
    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    /// Row or column position of `m`.
    pub fn index(&self, m: HalfInt) -> usize {
        index_of(self.j, m)
    }

    pub fn get(&self, m1: HalfInt, m2: HalfInt) -> Complex64 {
        self.matrix[(self.index(m1), self.index(m2))]
    }

    /// Entry for integer `j`.
    pub fn at(&self, m1: i32, m2: i32) -> Complex64 {
        self.get(HalfInt::int(m1), HalfInt::int(m2))
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }
}

/// Position of `m` in the descending order `j, ..., -j`.
pub fn index_of(j: HalfInt, m: HalfInt) -> usize {
    debug_assert!(m.0.abs() <= j.0 && (j.0 - m.0) % 2 == 0);
    ((j.0 - m.0) / 2) as usize
}

/// `D^j(u)` from the polynomial expansion.
pub fn wigner_d(j: HalfInt, u: &CMat2) -> Result<WignerBlock> {
    check_spin(j)?;
    let dev = su2_deviation(u);
    if !(dev < UNITARY_TOL) {
        return Err(Error::NonUnitary(dev));
    }
    Ok(wigner_d_unchecked(j, u))
}

/// [`wigner_d`] without validating `u`.
pub fn wigner_d_unchecked(j: HalfInt, u: &CMat2) -> WignerBlock {
    let n = j.0 as usize + 1;
    let tj = j.0;
    let (u11, u12, u21, u22) = (u[(0, 0)], u[(0, 1)], u[(1, 0)], u[(1, 1)]);
    let powers = |z: Complex64| {
        let mut v = Vec::with_capacity(n);
        let mut p = Complex64::new(1.0, 0.0);
        for _ in 0..n {
            v.push(p);
            p *= z;
        }
        v
    };
    let (p11, p12, p21, p22) = (powers(u11), powers(u12), powers(u21), powers(u22));
    let mut matrix = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for col in 0..n {
        // column m: p = j+m, q = j-m
        let p = tj - col as i32;
        let q = tj - p;
        for row in 0..n {
            let r = tj - row as i32;
            let mut s = Complex64::new(0.0, 0.0);
            let lo = 0.max(r - q);
            let hi = p.min(r);
            for a in lo..=hi {
                let c = binom(p, a) * binom(q, r - a);
                s += p11[a as usize]
                    * p21[(p - a) as usize]
                    * p12[(r - a) as usize]
                    * p22[(q - r + a) as usize]
                    * c;
            }
            let norm = (fact(r) * fact(tj - r) / (fact(p) * fact(q))).sqrt();
            matrix[(row, col)] = s * norm;
        }
    }
    WignerBlock { j, matrix }
}

/// Euler angles with `z1 = e^{i(α+γ)/2} cos(β/2)`, `z2 = e^{i(α-γ)/2} sin(β/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EulerAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl EulerAngles {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        EulerAngles { alpha, beta, gamma }
    }

    pub fn to_su2(&self) -> CMat2 {
        let (c, s) = ((self.beta / 2.0).cos(), (self.beta / 2.0).sin());
        let z1 = Complex64::from_polar(c, (self.alpha + self.gamma) / 2.0);
        let z2 = Complex64::from_polar(s, (self.alpha - self.gamma) / 2.0);
        CMat2::new(z1, z2, -z2.conj(), z1.conj())
    }
}

/// The real matrix `d^j(β)` in this module's convention, i.e. the
/// Condon-Shortley `d^j(-β)` written as a factorial sum.
pub fn small_d(j: HalfInt, beta: f64) -> DMatrix<f64> {
    let n = j.0 as usize + 1;
    let (c, s) = ((-beta / 2.0).cos(), (-beta / 2.0).sin());
    let tj = j.0;
    let mut d = DMatrix::zeros(n, n);
    for (row, m1) in m_values(j).enumerate() {
        for (col, m2) in m_values(j).enumerate() {
            // Condon-Shortley d_{m',m} with m' = m1, m = m2
            let (jp, jm) = ((tj + m2.0) / 2, (tj - m2.0) / 2);
            let (mp_p, mp_m) = ((tj + m1.0) / 2, (tj - m1.0) / 2);
            let dm = (m1.0 - m2.0) / 2;
            let mut sum = 0.0;
            for k in 0..=tj {
                let (e1, e2, e3) = (jp - k, mp_m - k, k + dm);
                if e1 < 0 || e2 < 0 || e3 < 0 {
                    continue;
                }
                let sign = if e3 % 2 == 0 { 1.0 } else { -1.0 };
                sum += sign * c.powi(tj - 2 * k - dm) * s.powi(2 * k + dm)
                    / (fact(e1) * fact(k) * fact(e2) * fact(e3));
            }
            d[(row, col)] = sum * (fact(mp_p) * fact(mp_m) * fact(jp) * fact(jm)).sqrt();
        }
    }
    d
}

/// `D^j_{m1 m2} = e^{i m1 α} d_{m1 m2}(β) e^{i m2 γ}`.
pub fn wigner_d_euler(j: HalfInt, e: &EulerAngles) -> Result<WignerBlock> {
    check_spin(j)?;
    let d = small_d(j, e.beta);
    let ms: Vec<f64> = m_values(j).map(|m| m.value()).collect();
    let matrix = DMatrix::from_fn(d.nrows(), d.ncols(), |r, c| {
        Complex64::from_polar(d[(r, c)], ms[r] * e.alpha + ms[c] * e.gamma)
    });
    Ok(WignerBlock { j, matrix })
}

/// `χ^j(φ) = sin((2j+1)φ/2) / sin(φ/2)`, evaluated as the Chebyshev
/// polynomial `U_{2j}(cos(φ/2))` so that `φ = 0` and `φ = 2π` give the exact
/// limits `2j+1` and `(-1)^{2j}(2j+1)`.
pub fn su2_character(j: HalfInt, phi: f64) -> f64 {
    character_from_half_trace(j, (phi / 2.0).cos())
}

/// `χ^j` as a function of `t = tr(w)/2 = cos(φ/2)`.
pub fn character_from_half_trace(j: HalfInt, t: f64) -> f64 {
    // snap the exact special values so that endpoint limits come out exact
    let t = [-1.0, 0.0, 1.0]
        .into_iter()
        .find(|v| (t - v).abs() < 1e-14)
        .unwrap_or(t);
    let (mut prev, mut cur) = (0.0, 1.0);
    for _ in 0..j.0 {
        let next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `χ^{(j,j)}` of a pair: the product of the left and right characters.
pub fn character_jj(pair: &crate::su2::IsoPair, j: HalfInt) -> f64 {
    let tl = pair.left.trace().to_complex().re / 2.0;
    let tr = pair.right.trace().to_complex().re / 2.0;
    character_from_half_trace(j, tl) * character_from_half_trace(j, tr)
}

/// A labelled Clebsch-Gordan coefficient `<j1 m1 j2 m2 | l m>`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CgCoefficient {
    pub j1: HalfInt,
    pub m1: HalfInt,
    pub j2: HalfInt,
    pub m2: HalfInt,
    pub l: HalfInt,
    pub m: HalfInt,
    pub value: f64,
}

impl CgCoefficient {
    pub fn new(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, l: HalfInt, m: HalfInt) -> Self {
        CgCoefficient {
            j1,
            m1,
            j2,
            m2,
            l,
            m,
            value: clebsch_gordan(j1, m1, j2, m2, l, m),
        }
    }
}

fn valid_projection(j: HalfInt, m: HalfInt) -> bool {
    j.0 >= 0 && m.0.abs() <= j.0 && (j.0 - m.0) % 2 == 0
}

/// Condon-Shortley `<j1 m1 j2 m2 | l m>` by the Racah formula; zero outside
/// the admissible range.
pub fn clebsch_gordan(
    j1: HalfInt,
    m1: HalfInt,
    j2: HalfInt,
    m2: HalfInt,
    l: HalfInt,
    m: HalfInt,
) -> f64 {
    if !(valid_projection(j1, m1) && valid_projection(j2, m2) && valid_projection(l, m)) {
        return 0.0;
    }
    if m1.0 + m2.0 != m.0 || l.0 < (j1.0 - j2.0).abs() || l.0 > j1.0 + j2.0 {
        return 0.0;
    }
    if (j1.0 + j2.0 + l.0) % 2 != 0 {
        return 0.0;
    }
    // all quantities below are integers
    let h = |x: i32| x / 2;
    let (a, b, c) = (j1.0, j2.0, l.0);
    let tri = fact(h(c + a - b)) * fact(h(c - a + b)) * fact(h(a + b - c)) / fact(h(a + b + c) + 1);
    let pre = ((c as f64 + 1.0) * tri).sqrt()
        * (fact(h(c + m.0))
            * fact(h(c - m.0))
            * fact(h(a - m1.0))
            * fact(h(a + m1.0))
            * fact(h(b - m2.0))
            * fact(h(b + m2.0)))
        .sqrt();
    let mut sum = 0.0;
    for k in 0..=(a + b) {
        let d = [
            k,
            h(a + b - c) - k,
            h(a - m1.0) - k,
            h(b + m2.0) - k,
            h(c - b + m1.0) + k,
            h(c - a - m2.0) + k,
        ];
        if d.iter().any(|&x| x < 0) {
            continue;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign / d.iter().map(|&x| fact(x)).product::<f64>();
    }
    pre * sum
}

fn check_harmonic_labels(beta: u32, l: i32, m: i32) -> Result<i32> {
    if beta.is_multiple_of(2) {
        return Err(Error::InvalidLabel(format!("β = {beta} must be odd")));
    }
    let j = ((beta - 1) / 2) as i32;
    if l < 0 || l > 2 * j || m.abs() > l {
        return Err(Error::InvalidLabel(format!(
            "(β, l, m) = ({beta}, {l}, {m})"
        )));
    }
    Ok(j)
}

fn harmonic_weight(j: i32, m1: i32, m2: i32, l: i32, m: i32) -> f64 {
    let phase = if (j - m1).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    };
    let jj = HalfInt::int(j);
    phase
        * clebsch_gordan(
            jj,
            HalfInt::int(-m1),
            jj,
            HalfInt::int(m2),
            HalfInt::int(l),
            HalfInt::int(m),
        )
}

/// `ψ_{βlm}(u) = Σ_{m2-m1=m} D^j_{m1 m2}(u) <j -m1 j m2 | l m> (-1)^{j-m1}`,
/// `β = 2j+1`. These transform under conjugation `u -> g^{-1} u g` like
/// `D^l`.
pub fn conjugation_harmonic(beta: u32, l: i32, m: i32, u: &CMat2) -> Result<Complex64> {
    let j = check_harmonic_labels(beta, l, m)?;
    let d = wigner_d(HalfInt::int(j), u)?;
    Ok(conjugation_harmonic_from_block(&d, l, m))
}

/// [`conjugation_harmonic`] reusing a precomputed `D^j(u)` (integer `j`).
pub fn conjugation_harmonic_from_block(d: &WignerBlock, l: i32, m: i32) -> Complex64 {
    let j = d.j().as_int().expect("integer j");
    let mut s = Complex64::new(0.0, 0.0);
    for m1 in -j..=j {
        let m2 = m1 + m;
        if m2.abs() > j {
            continue;
        }
        s += d.at(m1, m2) * harmonic_weight(j, m1, m2, l, m);
    }
    s
}

/// Recovers `D^j_{m1 m2}` from the harmonics `ψ_{β l (m2-m1)}`,
/// `l = 0..2j`, by inverting the Clebsch-Gordan sum.
pub fn wigner_from_harmonics(
    j: i32,
    m1: i32,
    m2: i32,
    psi: impl Fn(i32, i32) -> Complex64,
) -> Complex64 {
    let m = m2 - m1;
    (m.abs()..=2 * j)
        .map(|l| psi(l, m) * harmonic_weight(j, m1, m2, l, m))
        .sum()
}

/// Convenience for the `2j+1`-periodic phase `e^{-iπ m}`.
pub fn phase_minus_i_pi(m: HalfInt) -> Complex64 {
    Complex64::from_polar(1.0, -PI * m.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Point4;
    use crate::su2::u_from_point;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_su2() -> impl Strategy<Value = CMat2> {
        prop::array::uniform4(-1.0f64..1.0)
            .prop_filter("nonzero", |x| x.iter().map(|v| v * v).sum::<f64>() > 1e-2)
            .prop_map(|x| {
                let n = x.iter().map(|v| v * v).sum::<f64>().sqrt();
                u_from_point(&Point4(x.map(|v| v / n)))
            })
    }

    fn max_abs(m: &DMatrix<Complex64>) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn spin_half_is_identity_map() {
        let u = u_from_point(&Point4([0.5, 0.5, -0.5, 0.5]));
        let d = wigner_d(HalfInt::from_twice(1), &u).unwrap();
        for r in 0..2 {
            for k in 0..2 {
                assert!((d.matrix()[(r, k)] - u[(r, k)]).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn identity_argument() {
        for t in 0..8 {
            let d = wigner_d(HalfInt::from_twice(t), &CMat2::identity()).unwrap();
            let n = t as usize + 1;
            assert!(max_abs(&(d.matrix() - DMatrix::identity(n, n))) < 1e-15);
        }
    }

    #[test]
    fn rejects_non_unitary() {
        let u = CMat2::identity() * c(2.0, 0.0);
        assert!(matches!(
            wigner_d(HalfInt::int(1), &u),
            Err(Error::NonUnitary(_))
        ));
    }

    #[test]
    fn q3_is_diagonal_phase() {
        let q3 = CMat2::new(c(0.0, -1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0));
        let d = wigner_d(HalfInt::int(1), &q3).unwrap();
        let diag: Vec<f64> = (0..3).map(|k| d.matrix()[(k, k)].re).collect();
        // rows m = 1, 0, -1
        assert_eq!(diag, vec![-1.0, 1.0, -1.0]);
    }

    #[test]
    fn euler_route_matches_polynomial_route() {
        let e = EulerAngles::new(0.3, 1.1, 4.2);
        for t in 0..9 {
            let j = HalfInt::from_twice(t);
            let a = wigner_d(j, &e.to_su2()).unwrap();
            let b = wigner_d_euler(j, &e).unwrap();
            assert!(max_abs(&(a.matrix() - b.matrix())) < 1e-12, "2j={t}");
        }
    }

    #[test]
    fn characters() {
        assert_eq!(su2_character(HalfInt::int(3), 0.0), 7.0);
        let half_pi: Vec<f64> = (0..9).map(|j| su2_character(HalfInt::int(j), PI)).collect();
        assert_eq!(
            half_pi,
            vec![1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0]
        );
        let three_quarter: Vec<f64> = (0..9)
            .map(|j| su2_character(HalfInt::int(j), 1.5 * PI).round())
            .collect();
        assert_eq!(
            three_quarter,
            vec![1.0, 1.0, -1.0, -1.0, 1.0, 1.0, -1.0, -1.0, 1.0]
        );
        assert_eq!(su2_character(HalfInt::from_twice(1), PI), 0.0);
        assert_eq!(su2_character(HalfInt::from_twice(3), 2.0 * PI), -4.0);
        for j in 0..=10 {
            assert_eq!(
                su2_character(HalfInt::int(j + 2), PI),
                su2_character(HalfInt::int(j), PI)
            );
        }
    }

    #[test]
    fn character_is_sine_ratio() {
        for t in 0..12 {
            for phi in [0.3, 1.7, 2.9, 5.5] {
                let j = HalfInt::from_twice(t);
                let r = ((t as f64 + 1.0) * phi / 2.0).sin() / (phi / 2.0).sin();
                assert!((su2_character(j, phi) - r).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn character_is_trace() {
        for j in 0..=12 {
            let phi = 0.37 * (j as f64 + 1.0);
            let e = EulerAngles::new(phi, 0.0, 0.0);
            let d = wigner_d(HalfInt::from_twice(j), &e.to_su2()).unwrap();
            assert!((d.trace().re - su2_character(HalfInt::from_twice(j), phi)).abs() < 1e-10);
        }
    }

    #[test]
    fn cg_values() {
        let h = HalfInt::from_twice;
        assert_eq!(clebsch_gordan(h(0), h(0), h(0), h(0), h(0), h(0)), 1.0);
        let v = clebsch_gordan(h(1), h(1), h(1), h(-1), h(2), h(0));
        assert!((v - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(clebsch_gordan(h(1), h(1), h(1), h(1), h(2), h(0)), 0.0);
        assert_eq!(clebsch_gordan(h(2), h(0), h(2), h(0), h(6), h(0)), 0.0);
    }

    /// Independent oracle: lower from the stretched state `|j1+j2, j1+j2>`
    /// with `J_-` and compare with the Racah formula.
    #[test]
    fn cg_matches_lowering_recursion() {
        for (t1, t2) in [(1, 1), (2, 1), (2, 2), (3, 2), (4, 4)] {
            let tl = t1 + t2;
            // coefficients of |m1 m2> for each m, starting from the top state
            let mut state: Vec<((i32, i32), f64)> = vec![((t1, t2), 1.0)];
            let mut tm = tl;
            loop {
                for &((a, b), v) in &state {
                    let cg = clebsch_gordan(h2(t1), h2(a), h2(t2), h2(b), h2(tl), h2(tm));
                    assert!((cg - v).abs() < 1e-12, "{t1} {t2} {a} {b} {tm}");
                }
                if tm == -tl {
                    break;
                }
                // J_- |J M> = sqrt((J+M)(J-M+1)) |J M-1>
                let jm =
                    |j: i32, m: i32| (((j + m) as f64 / 2.0) * ((j - m) as f64 / 2.0 + 1.0)).sqrt();
                let mut next: Vec<((i32, i32), f64)> = Vec::new();
                let mut add = |k: (i32, i32), v: f64| {
                    if let Some(e) = next.iter_mut().find(|e| e.0 == k) {
                        e.1 += v;
                    } else {
                        next.push((k, v));
                    }
                };
                for &((a, b), v) in &state {
                    if a > -t1 {
                        add((a - 2, b), v * jm(t1, a));
                    }
                    if b > -t2 {
                        add((a, b - 2), v * jm(t2, b));
                    }
                }
                let norm = jm(tl, tm);
                state = next.into_iter().map(|(k, v)| (k, v / norm)).collect();
                tm -= 2;
            }
        }
        fn h2(t: i32) -> HalfInt {
            HalfInt::from_twice(t)
        }
    }

    #[test]
    fn cg_matrix_orthogonal() {
        for j in 0..=3 {
            let jj = HalfInt::int(j);
            let n = (2 * j + 1) as usize;
            let mut cmat = DMatrix::<f64>::zeros(n * n, n * n);
            let mut col = 0;
            for l in 0..=2 * j {
                for m in -l..=l {
                    for (r1, m1) in (-j..=j).enumerate() {
                        for (r2, m2) in (-j..=j).enumerate() {
                            cmat[(r1 * n + r2, col)] = clebsch_gordan(
                                jj,
                                HalfInt::int(m1),
                                jj,
                                HalfInt::int(m2),
                                HalfInt::int(l),
                                HalfInt::int(m),
                            );
                        }
                    }
                    col += 1;
                }
            }
            let err = (cmat.transpose() * &cmat - DMatrix::identity(n * n, n * n))
                .abs()
                .max();
            assert!(err < 1e-12, "j={j} err={err}");
        }
    }

    #[test]
    fn constant_harmonic() {
        let u = u_from_point(&Point4([0.1, 0.7, -0.1, 0.7]).normalized());
        let v = conjugation_harmonic(1, 0, 0, &u).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-14);
        assert!(conjugation_harmonic(2, 0, 0, &u).is_err());
        assert!(conjugation_harmonic(3, 3, 0, &u).is_err());
        assert!(conjugation_harmonic(3, 1, 2, &u).is_err());
    }

    #[test]
    fn half_int_parsing() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(3));
        assert_eq!("-2".parse::<HalfInt>().unwrap(), HalfInt::int(-2));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-1/2");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn unitary_and_homomorphic(u in random_su2(), v in random_su2(), t in 0i32..=12) {
            let j = HalfInt::from_twice(t);
            let du = wigner_d(j, &u).unwrap();
            let dv = wigner_d(j, &v).unwrap();
            let duv = wigner_d(j, &(u * v)).unwrap();
            let n = du.dim();
            prop_assert!(max_abs(&(du.matrix() * du.matrix().adjoint() - DMatrix::identity(n, n))) < 1e-12);
            prop_assert!(max_abs(&(du.matrix() * dv.matrix() - duv.matrix())) < 1e-10);
        }

        #[test]
        fn harmonics_transform_like_d_l(u in random_su2(), g in random_su2(), j in 0i32..=3) {
            let beta = (2 * j + 1) as u32;
            let conj = g.adjoint() * u * g;
            for l in 0..=2 * j {
                let dl = wigner_d(HalfInt::int(l), &g).unwrap();
                for m in -l..=l {
                    let lhs = conjugation_harmonic(beta, l, m, &conj).unwrap();
                    let rhs: Complex64 = (-l..=l)
                        .map(|mp| conjugation_harmonic(beta, l, mp, &u).unwrap() * dl.at(mp, m))
                        .sum();
                    prop_assert!((lhs - rhs).norm() < 1e-10);
                }
            }
        }

        #[test]
        fn harmonics_round_trip(u in random_su2(), j in 0i32..=3) {
            let d = wigner_d(HalfInt::int(j), &u).unwrap();
            for m1 in -j..=j {
                for m2 in -j..=j {
                    let back = wigner_from_harmonics(j, m1, m2, |l, m| conjugation_harmonic_from_block(&d, l, m));
                    prop_assert!((back - d.at(m1, m2)).norm() < 1e-10);
                }
            }
        }
    }
}
