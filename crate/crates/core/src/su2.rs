//! Exact `SU(2)` matrices over [`Cyclo8`] and the lift of even Weyl words to
//! pairs `(w_l, w_r)` acting on `u ∈ SU(2)` by `u -> w_l^{-1} u w_r`.
//!
//! A point `x ∈ S^3` corresponds to
//!
//! ```text
//! u = [[ z1, z2], [-conj(z2), conj(z1)]],   z1 = x0 - i x3,   z2 = -x2 - i x1.
//! ```

use crate::cyclo::Cyclo8;
use crate::error::{Error, Result};
use crate::group::{HyperoctElement, Letter, Point4, Word};
use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

/// Numeric `2x2` complex matrix used by the Wigner kernel.
pub type CMat2 = Matrix2<Complex64>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Su2Exact {
    m: [[Cyclo8; 2]; 2],
}

#[derive(Serialize, Deserialize)]
struct Su2Record {
    /// Row-major numerators over the shared denominator `√2^half_powers`.
    entries: [[i64; 4]; 4],
    half_powers: u32,
}

impl Serialize for Su2Exact {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let flat = [self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]];
        let k = flat.iter().map(|c| c.half_powers()).max().unwrap_or(0);
        Su2Record {
            entries: flat.map(|c| c.numerator_at(k)),
            half_powers: k,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Su2Exact {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = Su2Record::deserialize(d)?;
        let e = r.entries.map(|c| Cyclo8::new(c, r.half_powers));
        Su2Exact::new([[e[0], e[1]], [e[2], e[3]]]).map_err(serde::de::Error::custom)
    }
}

impl Su2Exact {
    /// Validates exact unitarity and unit determinant.
    pub fn new(m: [[Cyclo8; 2]; 2]) -> Result<Self> {
        let s = Su2Exact { m };
        if !s.is_special_unitary() {
            let dev = (s.to_complex() * s.to_complex().adjoint() - CMat2::identity()).norm()
                + (s.det().to_complex() - Complex64::new(1.0, 0.0)).norm();
            return Err(Error::NonUnitary(dev));
        }
        Ok(s)
    }

    pub fn identity() -> Self {
        Su2Exact::diag(Cyclo8::ONE, Cyclo8::ONE)
    }

    fn diag(x: Cyclo8, y: Cyclo8) -> Self {
        Su2Exact {
            m: [[x, Cyclo8::ZERO], [Cyclo8::ZERO, y]],
        }
    }

    pub fn entries(&self) -> [[Cyclo8; 2]; 2] {
        self.m
    }

    pub fn entry(&self, r: usize, c: usize) -> Cyclo8 {
        self.m[r][c]
    }

    pub fn det(&self) -> Cyclo8 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> Cyclo8 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn adjoint(&self) -> Self {
        let m = self.m;
        Su2Exact {
            m: [
                [m[0][0].conj(), m[1][0].conj()],
                [m[0][1].conj(), m[1][1].conj()],
            ],
        }
    }

    /// Adjugate; equals the inverse because the determinant is 1.
    pub fn inverse(&self) -> Self {
        let m = self.m;
        Su2Exact {
            m: [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]],
        }
    }

    pub fn is_special_unitary(&self) -> bool {
        self.det() == Cyclo8::ONE && self.mul(&self.adjoint()) == Su2Exact::identity()
    }

    pub fn mul(&self, o: &Su2Exact) -> Su2Exact {
        let (a, b) = (self.m, o.m);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Su2Exact {
            m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn neg(&self) -> Su2Exact {
        Su2Exact {
            m: self.m.map(|r| r.map(|c| -c)),
        }
    }

    pub fn scale(&self, c: Cyclo8) -> Su2Exact {
        Su2Exact {
            m: self.m.map(|r| r.map(|x| x * c)),
        }
    }

    pub fn pow(&self, n: u32) -> Su2Exact {
        (0..n).fold(Su2Exact::identity(), |acc, _| acc.mul(self))
    }

    pub fn to_complex(&self) -> CMat2 {
        let c = |r: usize, k: usize| self.m[r][k].to_complex();
        CMat2::new(c(0, 0), c(0, 1), c(1, 0), c(1, 1))
    }

    /// `u(x)` for a point with exact coordinates.
    pub fn from_point(x: [Cyclo8; 4]) -> Result<Self> {
        let i = Cyclo8::I;
        let z1 = x[0] - i * x[3];
        let z2 = -x[2] - i * x[1];
        Su2Exact::new([[z1, z2], [-z2.conj(), z1.conj()]])
    }

    /// Inverse of [`Su2Exact::from_point`].
    pub fn to_point(&self) -> [Cyclo8; 4] {
        let half = Cyclo8::new([1, 0, 0, 0], 2);
        let (z1, z2) = (self.m[0][0], self.m[0][1]);
        let re = |z: Cyclo8| (z + z.conj()) * half;
        let im = |z: Cyclo8| (z.conj() - z) * Cyclo8::I * half;
        [re(z1), -im(z2), -re(z2), -im(z1)]
    }
}

impl fmt::Display for Su2Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

/// `u(x)` as a numeric matrix.
pub fn u_from_point(x: &Point4) -> CMat2 {
    let [x0, x1, x2, x3] = x.0;
    let z1 = Complex64::new(x0, -x3);
    let z2 = Complex64::new(-x2, -x1);
    CMat2::new(z1, z2, -z2.conj(), z1.conj())
}

pub fn point_from_u(u: &CMat2) -> Point4 {
    let z1 = u[(0, 0)];
    let z2 = u[(0, 1)];
    Point4([z1.re, -z2.im, -z2.re, -z1.im])
}

/// Exact Weyl vector components; `√½` entries become `1/√2`.
pub fn weyl_vector_exact(s: u8) -> Result<[Cyclo8; 4]> {
    let h = Cyclo8::inv_sqrt2();
    let (o, z) = (Cyclo8::ONE, Cyclo8::ZERO);
    Ok(match s {
        0 => [o, z, z, z],
        1 => [z, z, z, o],
        2 => [z, z, -h, h],
        3 => [z, h, -h, z],
        4 => [-h, h, z, z],
        _ => return Err(Error::UnknownGenerator(s)),
    })
}

/// `v_s = [[a0 - i a3, -a2 - i a1], [a2 - i a1, a0 + i a3]]`.
pub fn weyl_matrix(s: u8) -> Result<Su2Exact> {
    let [a0, a1, a2, a3] = weyl_vector_exact(s)?;
    let i = Cyclo8::I;
    Su2Exact::new([[a0 - i * a3, -a2 - i * a1], [a2 - i * a1, a0 + i * a3]])
}

/// An element of `SU(2) x SU(2)` acting by `u -> left^{-1} u right`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct IsoPair {
    pub left: Su2Exact,
    pub right: Su2Exact,
}

impl IsoPair {
    pub fn new(left: Su2Exact, right: Su2Exact) -> Self {
        IsoPair { left, right }
    }

    pub fn identity() -> Self {
        IsoPair::new(Su2Exact::identity(), Su2Exact::identity())
    }

    /// The central inversion `x -> -x`, with its sign carried on the right.
    pub fn inversion() -> Self {
        IsoPair::new(Su2Exact::identity(), Su2Exact::identity().neg())
    }

    /// `(l, r)` and `(-l, -r)` give the same map of `S^3`.
    pub fn same_isometry(&self, o: &IsoPair) -> bool {
        (self.left == o.left && self.right == o.right)
            || (self.left == o.left.neg() && self.right == o.right.neg())
    }

    /// The pair of the map "apply `self`, then `next`".
    pub fn then(&self, next: &IsoPair) -> IsoPair {
        IsoPair::new(self.left.mul(&next.left), self.right.mul(&next.right))
    }

    pub fn pow(&self, n: u32) -> IsoPair {
        IsoPair::new(self.left.pow(n), self.right.pow(n))
    }

    pub fn inverse(&self) -> IsoPair {
        IsoPair::new(self.left.inverse(), self.right.inverse())
    }

    pub fn act_exact(&self, u: &Su2Exact) -> Su2Exact {
        self.left.inverse().mul(u).mul(&self.right)
    }

    pub fn act(&self, u: &CMat2) -> CMat2 {
        self.left.inverse().to_complex() * u * self.right.to_complex()
    }

    pub fn act_point(&self, x: &Point4) -> Point4 {
        point_from_u(&self.act(&u_from_point(x)))
    }
}

/// Lifts an even word. Letters are paired in order `(s, s')`; each pair
/// contributes `v_s v_{s'}^{-1}` on the left and `v_s^{-1} v_{s'}` on the
/// right. `J4` letters commute with everything and each flips the sign of
/// the right component.
pub fn lift_even_word(word: &Word) -> Result<IsoPair> {
    let weyl: Vec<u8> = word
        .letters()
        .iter()
        .filter_map(|l| l.weyl_index())
        .collect();
    if !weyl.len().is_multiple_of(2) {
        return Err(Error::OddWord(weyl.len()));
    }
    let inversions = word.letters().len() - weyl.len();
    let mut left = Su2Exact::identity();
    let mut right = Su2Exact::identity();
    for pair in weyl.chunks(2) {
        let (vs, vt) = (weyl_matrix(pair[0])?, weyl_matrix(pair[1])?);
        left = left.mul(&vs.mul(&vt.inverse()));
        right = right.mul(&vs.inverse().mul(&vt));
    }
    if inversions % 2 == 1 {
        right = right.neg();
    }
    Ok(IsoPair::new(left, right))
}

fn lift_table() -> &'static HashMap<HyperoctElement, IsoPair> {
    static TABLE: OnceLock<HashMap<HyperoctElement, IsoPair>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut steps = vec![Word::new(vec![Letter::J4])];
        for s in Letter::WEYL {
            for t in Letter::WEYL {
                if s != t {
                    steps.push(Word::new(vec![s, t]));
                }
            }
        }
        let steps: Vec<(HyperoctElement, IsoPair)> = steps
            .iter()
            .map(|w| (w.evaluate(), lift_even_word(w).expect("even step")))
            .collect();
        let mut table = HashMap::new();
        table.insert(HyperoctElement::IDENTITY, IsoPair::identity());
        let mut queue = VecDeque::from([HyperoctElement::IDENTITY]);
        while let Some(g) = queue.pop_front() {
            let p = table[&g];
            for (x, px) in &steps {
                let h = g.then(x);
                if let std::collections::hash_map::Entry::Vacant(e) = table.entry(h) {
                    e.insert(p.then(px));
                    queue.push_back(h);
                }
            }
        }
        table
    })
}

/// A lift of any orientation-preserving element of `G`, determined up to
/// the global sign.
pub fn lift_element(g: &HyperoctElement) -> Result<IsoPair> {
    lift_table().get(g).copied().ok_or(Error::NotLiftable)
}

/// Rotation angle `φ ∈ [0, 2π]` with `tr w = 2 cos(φ/2)`.
pub fn rotation_angle(w: &Su2Exact) -> f64 {
    let half = w.trace().to_complex().re / 2.0;
    2.0 * half.clamp(-1.0, 1.0).acos()
}

/// `(φ_l, φ_r)` of a pair.
pub fn rotation_angles(p: &IsoPair) -> (f64, f64) {
    (rotation_angle(&p.left), rotation_angle(&p.right))
}
