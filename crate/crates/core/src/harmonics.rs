//! Multiplicities, projectors and orthonormal bases of the deck-periodic
//! harmonics of degree `2j` on `S^3`.
//!
//! A harmonic `f = Σ c_{m1 m2} D^j_{m1 m2}` is stored as its coefficient
//! vector with flat index `a n + b`, where `a`, `b` are the descending
//! positions of `m1`, `m2` and `n = 2j+1`. The deck transformation
//! `u -> w_l^{-1} u w_r` maps `f` to `f(w_l^{-1} u w_r)`, whose coefficients
//! are `R c` with `R = D(w_l^{-1})^T ⊗ D(w_r)`.
//!
//! Bases are normalized for the unnormalized Euler measure
//! `dα sinβ dβ dγ` of total mass `8π²`.

use crate::deck::{deck_group, DeckGroup, Manifold};
use crate::error::{Error, Result};
use crate::group::sample_sphere;
use crate::quadrature::{EulerQuadrature, EULER_VOLUME};
use crate::report::Report;
use crate::su2::{u_from_point, IsoPair};
use crate::wigner::{character_jj, index_of, wigner_d_unchecked, HalfInt, WignerBlock};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::f64::consts::PI;

type CMat = DMatrix<Complex64>;

fn cx(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn i_pow(k: i32) -> Complex64 {
    match k.rem_euclid(4) {
        0 => cx(1.0),
        1 => Complex64::new(0.0, 1.0),
        2 => cx(-1.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn sign(k: i32) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

fn delta(a: i32, b: i32) -> f64 {
    f64::from(u8::from(a == b))
}

/// `(1/|H|) Σ_g χ^{(j,j)}(g)`, checked to be a non-negative integer.
pub fn multiplicity_from_pairs(pairs: &[IsoPair], j: HalfInt) -> Result<u64> {
    let sum: f64 = pairs.iter().map(|p| character_jj(p, j)).sum();
    let m = sum / pairs.len() as f64;
    let r = m.round();
    if (m - r).abs() > 1e-8 || r < 0.0 {
        return Err(Error::NonIntegral(sum));
    }
    Ok(r as u64)
}

/// Number of C8-periodic harmonics of degree `2j`.
pub fn multiplicity_c8(j: HalfInt) -> u64 {
    let pairs = deck_group(Manifold::C2)
        .pairs()
        .expect("deck elements lift");
    multiplicity_from_pairs(&pairs, j).expect("character averages are integral")
}

/// Closed form `(1 + (-1)^{2j})(2j+1)[(2j+1) + 3(-1)^j]/8`.
pub fn multiplicity_q(j: HalfInt) -> u64 {
    let Some(jj) = j.as_int() else { return 0 };
    let n = 2 * i64::from(jj) + 1;
    ((n * (n + 3 * sign(jj) as i64)) / 4) as u64
}

/// Character average over the eight elements of Q.
pub fn multiplicity_q_character_sum(j: HalfInt) -> u64 {
    let pairs = deck_group(Manifold::C3)
        .pairs()
        .expect("deck elements lift");
    multiplicity_from_pairs(&pairs, j).expect("character averages are integral")
}

/// `(2j+1)(j-1)/2` for odd `j`, `(2j+1)(j+2)/2` for even `j`.
pub fn multiplicity_q_piecewise(j: u32) -> u64 {
    let (j, n) = (u64::from(j), 2 * u64::from(j) + 1);
    if j % 2 == 1 {
        n * (j - 1) / 2
    } else {
        n * (j + 2) / 2
    }
}

pub fn multiplicity(manifold: Manifold, j: HalfInt) -> u64 {
    match manifold {
        Manifold::C2 => multiplicity_c8(j),
        Manifold::C3 => multiplicity_q(j),
    }
}

/// The C8 step `m(j+4) - m(j) = 8j + 20 + 2(-1)^j`.
pub fn c8_recursion_step(j: u32) -> i64 {
    8 * i64::from(j) + 20 + 2 * sign(j as i32) as i64
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MultiplicityRow {
    pub j: u32,
    pub m: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MultiplicityTable {
    pub manifold: Manifold,
    pub rows: Vec<MultiplicityRow>,
}

pub fn multiplicity_table(manifold: Manifold, j_max: u32) -> MultiplicityTable {
    MultiplicityTable {
        manifold,
        rows: (0..=j_max)
            .map(|j| MultiplicityRow {
                j,
                m: multiplicity(manifold, HalfInt::int(j as i32)),
            })
            .collect(),
    }
}

/// `R = D(w_l^{-1})^T ⊗ D(w_r)` on the `(2j+1)^2` coefficient space.
pub fn representation_operator(j: u32, pair: &IsoPair) -> CMat {
    let jj = HalfInt::int(j as i32);
    let a = wigner_d_unchecked(jj, &pair.left.inverse().to_complex()).into_matrix();
    let b = wigner_d_unchecked(jj, &pair.right.to_complex()).into_matrix();
    a.transpose().kronecker(&b)
}

/// `(1/|H|) Σ_g R(g)`.
pub fn averaged_projector(j: u32, pairs: &[IsoPair]) -> CMat {
    let n = (2 * j + 1) as usize;
    let mut p = CMat::zeros(n * n, n * n);
    for pair in pairs {
        p += representation_operator(j, pair);
    }
    p / cx(pairs.len() as f64)
}

/// `D^j_{m1 m1'}(w_l^{8-i})` and `D^j_{m2' m2}(w_r^i)` of the C8 element
/// `g1^i` from the closed-form coefficient table, indexed `[m1, m1']` and
/// `[m2', m2]` in descending order.
pub fn c8_coefficient_blocks(j: u32, i: u32) -> (CMat, CMat) {
    assert!((1..=8).contains(&i));
    let n = (2 * j + 1) as usize;
    let ji = j as i32;
    let two_j = sign(2 * ji);
    let (base, left_sign) = if i > 4 { (i - 4, two_j) } else { (i, 1.0) };
    let ms: Vec<i32> = (-ji..=ji).rev().collect();
    let a = CMat::from_fn(n, n, |r, c| {
        let (m1, m1p) = (ms[r], ms[c]);
        let d = delta(m1, m1p);
        let v = match base {
            1 => i_pow(m1) * d,
            2 => cx(two_j * sign(m1) * d),
            3 => i_pow(m1) * sign(m1) * d,
            _ => cx(two_j * d),
        };
        v * left_sign
    });
    let b = CMat::from_fn(n, n, |r, c| {
        let (m2p, m2) = (ms[r], ms[c]);
        match base {
            1 => i_pow(m2) * (two_j * sign(ji + m2) * delta(m2p, -m2)),
            2 => cx(two_j * delta(m2p, m2)),
            3 => i_pow(m2) * (sign(ji + m2) * delta(m2p, -m2)),
            _ => cx(delta(m2p, m2)),
        }
    });
    (a, b)
}

/// The C8 projector for integer `j`, built two ways.
#[derive(Clone, Debug)]
pub struct C8Projector {
    /// Average of `A_i^T ⊗ B_i` over the coefficient table.
    pub from_table: CMat,
    /// `½[1+(-1)^{2j}] ½[1+(-1)^{m1}] ½[δ δ + i^{m1} (-1)^{j+m2} i^{m2} δ δ]`.
    pub closed_form: CMat,
}

pub fn projector_c8(j: u32) -> C8Projector {
    let n = (2 * j + 1) as usize;
    let mut from_table = CMat::zeros(n * n, n * n);
    for i in 1..=8 {
        let (a, b) = c8_coefficient_blocks(j, i);
        from_table += a.transpose().kronecker(&b);
    }
    from_table /= cx(8.0);
    let ji = j as i32;
    let ms: Vec<i32> = (-ji..=ji).rev().collect();
    let pre = 0.5 * (1.0 + sign(2 * ji));
    let mut closed_form = CMat::zeros(n * n, n * n);
    for (a, &m1) in ms.iter().enumerate() {
        for (b, &m2) in ms.iter().enumerate() {
            for (a2, &m1p) in ms.iter().enumerate() {
                for (b2, &m2p) in ms.iter().enumerate() {
                    let d1 = delta(m1, m1p);
                    if d1 == 0.0 {
                        continue;
                    }
                    let v = (cx(delta(m2p, m2))
                        + i_pow(m1) * sign(ji + m2) * i_pow(m2) * delta(m2p, -m2))
                        * (pre * 0.5 * (1.0 + sign(m1)) * 0.5);
                    // maps the (m1, m2) input coefficient to the (m1', m2') output
                    closed_form[(a2 * n + b2, a * n + b)] = v;
                }
            }
        }
    }
    C8Projector {
        from_table,
        closed_form,
    }
}

/// `D^j(g)` for the elements of Q from the closed-form representation
/// table, in the element order of the Q deck group.
pub fn q_representation_table(j: HalfInt) -> Vec<CMat> {
    let n = j.twice() as usize + 1;
    let ms: Vec<HalfInt> = crate::wigner::m_values(j).collect();
    let build =
        |f: &dyn Fn(HalfInt, HalfInt) -> Complex64| CMat::from_fn(n, n, |r, c| f(ms[r], ms[c]));
    let phase = |m: HalfInt| crate::wigner::phase_minus_i_pi(m);
    let par = |t: i32| sign(t / 2);
    let e = build(&|a, b| cx(delta(a.twice(), b.twice())));
    let q1 = build(&|a, b| {
        if a == -b {
            phase(a) * par(j.twice() - a.twice())
        } else {
            cx(0.0)
        }
    });
    let q2 = build(&|a, b| {
        cx(if a == -b {
            par(j.twice() + a.twice())
        } else {
            0.0
        })
    });
    let q3 = build(&|a, b| if a == b { phase(a) } else { cx(0.0) });
    let j4 = cx(par(2 * j.twice()));
    let mut out = vec![e.clone(), q1.clone(), q2.clone(), q3.clone(), e * j4];
    out.extend([q1 * j4, q2 * j4, q3 * j4]);
    out
}

/// The Q projector on the `m1` index (the `m2` index is untouched).
#[derive(Clone, Debug)]
pub struct QProjector {
    /// `(1/8) Σ_g D(g^{-1})^T` from the representation table.
    pub from_table: CMat,
    /// `½[1+(-1)^{m1}] ½[δ_{m1,m1'} + δ_{m1,-m1'} (-1)^j]`.
    pub closed_form: CMat,
}

pub fn projector_q(j: u32) -> QProjector {
    let n = (2 * j + 1) as usize;
    let jj = HalfInt::int(j as i32);
    let mut from_table = CMat::zeros(n, n);
    for d in q_representation_table(jj) {
        from_table += d.adjoint().transpose();
    }
    from_table /= cx(8.0);
    let ji = j as i32;
    let ms: Vec<i32> = (-ji..=ji).rev().collect();
    let closed_form = CMat::from_fn(n, n, |r, c| {
        let (m1, m1p) = (ms[r], ms[c]);
        cx(0.5 * (1.0 + sign(m1)) * 0.5 * (delta(m1, m1p) + delta(m1, -m1p) * sign(ji)))
    });
    QProjector {
        from_table,
        closed_form,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisKind {
    SingleTerm,
    TwoTermSum,
    TwoTermDifference,
}

/// One term `coefficient · D^j_{m1p m2p}`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Term {
    pub m1p: i32,
    pub m2p: i32,
    pub coefficient: Complex64,
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Term", 4)?;
        st.serialize_field("m1p", &self.m1p)?;
        st.serialize_field("m2p", &self.m2p)?;
        st.serialize_field("re", &(self.coefficient.re + 0.0))?;
        st.serialize_field("im", &(self.coefficient.im + 0.0))?;
        st.end()
    }
}

/// `φ^j_{m1 m2} = norm_factor · Σ terms`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct BasisFunction {
    pub manifold: Manifold,
    pub j: u32,
    pub m1: i32,
    pub m2: i32,
    pub kind: BasisKind,
    pub terms: Vec<Term>,
    pub norm_factor: f64,
}

fn single_norm(j: u32) -> f64 {
    f64::from(2 * j + 1).sqrt() / (8f64.sqrt() * PI)
}

fn pair_norm(j: u32) -> f64 {
    f64::from(2 * j + 1).sqrt() / (4.0 * PI)
}

impl BasisFunction {
    fn single(manifold: Manifold, j: u32, m1: i32, m2: i32) -> Self {
        BasisFunction {
            manifold,
            j,
            m1,
            m2,
            kind: BasisKind::SingleTerm,
            terms: vec![Term {
                m1p: m1,
                m2p: m2,
                coefficient: cx(1.0),
            }],
            norm_factor: single_norm(j),
        }
    }

    fn two_term(
        manifold: Manifold,
        j: u32,
        (m1, m2): (i32, i32),
        second: (i32, i32),
        c: Complex64,
    ) -> Self {
        BasisFunction {
            manifold,
            j,
            m1,
            m2,
            kind: if c == cx(-1.0) {
                BasisKind::TwoTermDifference
            } else {
                BasisKind::TwoTermSum
            },
            terms: vec![
                Term {
                    m1p: m1,
                    m2p: m2,
                    coefficient: cx(1.0),
                },
                Term {
                    m1p: second.0,
                    m2p: second.1,
                    coefficient: c,
                },
            ],
            norm_factor: pair_norm(j),
        }
    }

    /// Normalized coefficients on the flat `(m1, m2)` grid.
    pub fn coefficient_vector(&self) -> DVector<Complex64> {
        let n = (2 * self.j + 1) as usize;
        let jj = HalfInt::int(self.j as i32);
        let mut v = DVector::zeros(n * n);
        for t in &self.terms {
            let a = index_of(jj, HalfInt::int(t.m1p));
            let b = index_of(jj, HalfInt::int(t.m2p));
            v[a * n + b] += t.coefficient * self.norm_factor;
        }
        v
    }

    /// Value from a precomputed `D^j(u)`.
    pub fn evaluate_block(&self, d: &WignerBlock) -> Complex64 {
        self.terms
            .iter()
            .map(|t| t.coefficient * d.at(t.m1p, t.m2p))
            .sum::<Complex64>()
            * self.norm_factor
    }

    pub fn evaluate(&self, u: &crate::su2::CMat2) -> Result<Complex64> {
        let d = crate::wigner::wigner_d(HalfInt::int(self.j as i32), u)?;
        Ok(self.evaluate_block(&d))
    }
}

/// C8-periodic basis of degree `2j`, sorted by `(m1, m2)`.
pub fn basis_c2(j: u32) -> Vec<BasisFunction> {
    let ji = j as i32;
    let mut out = Vec::new();
    for m1 in (-ji..=ji).filter(|m| m % 2 == 0) {
        if i_pow(m1) * sign(ji) == cx(1.0) {
            out.push(BasisFunction::single(Manifold::C2, j, m1, 0));
        }
        for m2 in 1..=ji {
            let c = i_pow(m1) * sign(ji + m2) * i_pow(m2);
            out.push(BasisFunction::two_term(
                Manifold::C2,
                j,
                (m1, m2),
                (m1, -m2),
                c,
            ));
        }
    }
    out
}

/// Q-periodic basis of degree `2j`, sorted by `(m1, m2)`.
pub fn basis_c3(j: u32) -> Vec<BasisFunction> {
    let ji = j as i32;
    let mut out = Vec::new();
    if j.is_multiple_of(2) {
        for m2 in -ji..=ji {
            out.push(BasisFunction::single(Manifold::C3, j, 0, m2));
        }
    }
    let c = if j.is_multiple_of(2) { cx(1.0) } else { cx(-1.0) };
    for m1 in (2..=ji).step_by(2) {
        for m2 in -ji..=ji {
            out.push(BasisFunction::two_term(
                Manifold::C3,
                j,
                (m1, m2),
                (-m1, m2),
                c,
            ));
        }
    }
    out
}

pub fn basis(manifold: Manifold, j: u32) -> Vec<BasisFunction> {
    match manifold {
        Manifold::C2 => basis_c2(j),
        Manifold::C3 => basis_c3(j),
    }
}

/// Numerical rank: singular values above `1e-8` times the largest.
pub fn numerical_rank(m: &CMat) -> usize {
    if m.is_empty() {
        return 0;
    }
    let s = m.clone().svd(false, false).singular_values;
    let top = s.iter().cloned().fold(0.0, f64::max);
    if top == 0.0 {
        return 0;
    }
    s.iter().filter(|v| **v > 1e-8 * top.max(1.0)).count()
}

fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BasisCheck {
    pub j_max: u32,
    pub seed: u64,
    pub tol: f64,
    pub points: usize,
}

impl Default for BasisCheck {
    fn default() -> Self {
        BasisCheck {
            j_max: 8,
            seed: 42,
            tol: 1e-10,
            points: 100,
        }
    }
}

/// Gram matrix of `functions` under the unnormalized Euler measure.
pub fn gram_matrix(functions: &[BasisFunction], q: &EulerQuadrature) -> CMat {
    let js: Vec<u32> = {
        let mut v: Vec<u32> = functions.iter().map(|f| f.j).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    // accumulate F^H F over node chunks to bound memory at large j
    let mut gram = CMat::zeros(functions.len(), functions.len());
    for chunk in q.nodes().chunks(1024) {
        let mut f = CMat::zeros(chunk.len(), functions.len());
        for (r, node) in chunk.iter().enumerate() {
            let blocks: BTreeMap<u32, WignerBlock> = js
                .iter()
                .map(|&j| (j, wigner_d_unchecked(HalfInt::int(j as i32), &node.u)))
                .collect();
            let s = (node.weight * EULER_VOLUME).sqrt();
            for (c, func) in functions.iter().enumerate() {
                f[(r, c)] = func.evaluate_block(&blocks[&func.j]) * s;
            }
        }
        gram += f.adjoint() * f;
    }
    gram
}

/// Orthonormality, periodicity, span and cross-degree orthogonality of a
/// basis against a deck group.
pub fn verify_basis(basis: &[BasisFunction], dg: &DeckGroup, opts: &BasisCheck) -> Report {
    let mut r = Report::new(
        "basis",
        format!("{} basis against {}", manifold_of(basis), dg.name),
    );
    let mut by_j: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (k, f) in basis.iter().enumerate() {
        by_j.entry(f.j).or_default().push(k);
    }
    let top = by_j.keys().last().copied().unwrap_or(0).max(opts.j_max);
    let q = EulerQuadrature::exact_for(top);
    let gram = gram_matrix(basis, &q);

    for (&j, idx) in &by_j {
        let g = gram.select_rows(idx).select_columns(idx);
        let err = max_abs(&(g - CMat::identity(idx.len(), idx.len())));
        r.within(format!("gram j={j}"), err, opts.tol);
    }
    let mut cross: f64 = 0.0;
    for (a, ia) in &by_j {
        for (b, ib) in &by_j {
            if a != b {
                cross = cross.max(max_abs(&gram.select_rows(ia).select_columns(ib)));
            }
        }
    }
    if by_j.len() > 1 {
        r.within("cross-degree orthogonality", cross, opts.tol);
    }

    let points = sample_sphere(opts.seed, opts.points);
    for (&j, idx) in &by_j {
        let jj = HalfInt::int(j as i32);
        let mut worst: f64 = 0.0;
        for x in &points {
            let d0 = wigner_d_unchecked(jj, &u_from_point(x));
            let base: Vec<Complex64> = idx.iter().map(|&k| basis[k].evaluate_block(&d0)).collect();
            for e in &dg.elements {
                let d1 = wigner_d_unchecked(jj, &u_from_point(&e.element.apply(x)));
                for (v0, &k) in base.iter().zip(idx) {
                    worst = worst.max((basis[k].evaluate_block(&d1) - v0).norm());
                }
            }
        }
        r.within(format!("periodicity j={j}"), worst, opts.tol);
    }

    match dg.pairs() {
        Ok(pairs) => {
            for (&j, idx) in &by_j {
                let p = averaged_projector(j, &pairs);
                let n = p.nrows();
                let coeffs = CMat::from_fn(n, idx.len(), |row, col| {
                    basis[idx[col]].coefficient_vector()[row]
                });
                let fixed = max_abs(&(&p * &coeffs - &coeffs));
                let idem = max_abs(&(&p * &p - &p));
                // rank of a projector is its trace; the coefficient rank comes
                // from the small matrix C^H C
                let rank_p = p.trace().re.round() as usize;
                let rank_c = numerical_rank(&(coeffs.adjoint() * &coeffs));
                let ok = idem < opts.tol
                    && rank_p == idx.len()
                    && rank_c == idx.len()
                    && fixed < opts.tol;
                r.check(
                    format!("span j={j}"),
                    ok,
                    format!(
                        "projector rank {rank_p}, basis rank {rank_c}, {} functions, |P c - c| = {fixed:.2e}, |P^2 - P| = {idem:.2e}",
                        idx.len()
                    ),
                );
            }
        }
        Err(e) => r.check("span", false, e.to_string()),
    }
    r
}

fn manifold_of(basis: &[BasisFunction]) -> String {
    basis
        .first()
        .map(|f| f.manifold.to_string())
        .unwrap_or_else(|| "empty".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{MULTIPLICITY_C8, MULTIPLICITY_Q};

    fn h(j: i32) -> HalfInt {
        HalfInt::int(j)
    }

    #[test]
    fn c8_multiplicities() {
        let m: Vec<u64> = (0..=8).map(|j| multiplicity_c8(h(j))).collect();
        assert_eq!(m, MULTIPLICITY_C8);
        for t in [1, 3, 5, 7] {
            assert_eq!(multiplicity_c8(HalfInt::from_twice(t)), 0);
        }
    }

    #[test]
    fn c8_recursion() {
        for j in 0..=12u32 {
            let d = multiplicity_c8(h(j as i32 + 4)) as i64 - multiplicity_c8(h(j as i32)) as i64;
            assert_eq!(d, c8_recursion_step(j), "j={j}");
        }
    }

    #[test]
    fn q_multiplicities() {
        let m: Vec<u64> = (0..=8).map(|j| multiplicity_q(h(j))).collect();
        assert_eq!(m, MULTIPLICITY_Q);
        assert_eq!(multiplicity_q(HalfInt::from_twice(5)), 0);
        assert_eq!(multiplicity_q(h(3)), 7);
        for j in 0..=20 {
            assert_eq!(multiplicity_q(h(j)), multiplicity_q_character_sum(h(j)));
            assert_eq!(multiplicity_q(h(j)), multiplicity_q_piecewise(j as u32));
        }
        for t in (1..40).step_by(2) {
            assert_eq!(multiplicity_q_character_sum(HalfInt::from_twice(t)), 0);
        }
    }

    #[test]
    fn c8_characters_match_reference() {
        use crate::reference::{C8_LEFT_CHARACTERS, C8_RIGHT_CHARACTERS};
        use crate::wigner::character_from_half_trace;
        let dg = deck_group(Manifold::C2);
        for (t, e) in dg.elements.iter().enumerate() {
            let p = e.pair.unwrap();
            for j in 0..=8 {
                let l = character_from_half_trace(h(j), p.left.trace().to_complex().re / 2.0);
                let r = character_from_half_trace(h(j), p.right.trace().to_complex().re / 2.0);
                assert!(
                    (l - C8_LEFT_CHARACTERS[t][j as usize] as f64).abs() < 1e-9,
                    "t={} j={j}",
                    t + 1
                );
                assert!((r - C8_RIGHT_CHARACTERS[t][j as usize] as f64).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn c8_projector_routes_agree() {
        let pairs = deck_group(Manifold::C2).pairs().unwrap();
        for j in 0..=5u32 {
            let p = projector_c8(j);
            let numeric = averaged_projector(j, &pairs);
            assert!(max_abs(&(&p.from_table - &p.closed_form)) < 1e-12, "j={j}");
            assert!(max_abs(&(&numeric - &p.closed_form)) < 1e-12, "j={j}");
            assert!(max_abs(&(&p.closed_form * &p.closed_form - &p.closed_form)) < 1e-12);
            assert_eq!(
                p.closed_form.trace().re.round() as u64,
                multiplicity_c8(h(j as i32))
            );
        }
    }

    #[test]
    fn coefficient_table_matches_wigner() {
        let dg = deck_group(Manifold::C2);
        for j in 0..=4u32 {
            for i in 1..=8u32 {
                let pair = dg.elements[(i - 1) as usize].pair.unwrap();
                let (a, b) = c8_coefficient_blocks(j, i);
                let jj = h(j as i32);
                let da = wigner_d_unchecked(jj, &pair.left.inverse().to_complex());
                let db = wigner_d_unchecked(jj, &pair.right.to_complex());
                assert!(max_abs(&(a - da.matrix())) < 1e-12, "j={j} i={i}");
                assert!(max_abs(&(b - db.matrix())) < 1e-12, "j={j} i={i}");
            }
        }
    }

    #[test]
    fn odd_m1_rows_vanish() {
        let p = projector_c8(3).closed_form;
        let n = 7;
        for a in 0..n {
            let m1 = 3 - a as i32;
            if m1 % 2 != 0 {
                for b in 0..n {
                    assert!(p.row(a * n + b).iter().all(|z| z.norm() == 0.0));
                }
            }
        }
        assert_eq!(projector_c8(0).closed_form, CMat::identity(1, 1));
    }

    #[test]
    fn q_representation_table_matches_wigner() {
        let dg = deck_group(Manifold::C3);
        for t in 0..=6 {
            let j = HalfInt::from_twice(t);
            for (d, e) in q_representation_table(j).iter().zip(&dg.elements) {
                // pure left action up to the sign carried by w_r = ±e
                let pair = e.pair.unwrap();
                let r = pair.right.to_complex()[(0, 0)].re.powi(t);
                let w = wigner_d_unchecked(j, &pair.left.to_complex()).into_matrix() * cx(r);
                assert!(max_abs(&(d - w)) < 1e-12, "2j={t} {}", e.label);
            }
        }
    }

    #[test]
    fn q_projector() {
        assert_eq!(max_abs(&projector_q(1).closed_form), 0.0);
        for j in 0..=8u32 {
            let p = projector_q(j);
            assert!(max_abs(&(&p.from_table - &p.closed_form)) < 1e-12, "j={j}");
            assert!(max_abs(&(&p.closed_form * &p.closed_form - &p.closed_form)) < 1e-15);
            let t = p.closed_form.trace().re.round() as u64;
            assert_eq!(t * u64::from(2 * j + 1), multiplicity_q(h(j as i32)));
        }
        assert_eq!(projector_q(2).closed_form.trace().re, 2.0);
    }

    #[test]
    fn basis_counts() {
        for j in 0..=10u32 {
            assert_eq!(
                basis_c2(j).len() as u64,
                multiplicity_c8(h(j as i32)),
                "j={j}"
            );
            assert_eq!(
                basis_c3(j).len() as u64,
                multiplicity_q(h(j as i32)),
                "j={j}"
            );
        }
        let b = basis_c2(0);
        assert_eq!(b[0].norm_factor, 1.0 / (8f64.sqrt() * PI));
        let b3 = basis_c3(3);
        assert!(b3
            .iter()
            .all(|f| f.m1 == 2 && f.kind == BasisKind::TwoTermDifference));
        assert_eq!(
            b3.iter().map(|f| f.m2).collect::<Vec<_>>(),
            (-3..=3).collect::<Vec<_>>()
        );
        let b2 = basis_c3(2);
        assert_eq!(b2.iter().filter(|f| f.m1 == 0).count(), 5);
        assert_eq!(b2.iter().filter(|f| f.m1 == 2).count(), 5);
    }

    #[test]
    fn basis_json_shape() {
        let v = serde_json::to_value(&basis_c2(1)[0]).unwrap();
        assert_eq!(v["manifold"], "C2");
        assert_eq!(v["kind"], "two-term-sum");
        assert_eq!(v["terms"][1]["m2p"], -1);
        assert!(v["terms"][0].get("re").is_some());
    }

    #[test]
    fn bases_verify() {
        let opts = BasisCheck {
            j_max: 3,
            points: 20,
            ..BasisCheck::default()
        };
        for m in [Manifold::C2, Manifold::C3] {
            let b: Vec<BasisFunction> = (0..=3).flat_map(|j| basis(m, j)).collect();
            let r = verify_basis(&b, deck_group(m), &opts);
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn wrong_manifold_fails_periodicity() {
        let opts = BasisCheck {
            j_max: 2,
            points: 10,
            ..BasisCheck::default()
        };
        let r = verify_basis(&basis_c2(2), deck_group(Manifold::C3), &opts);
        assert!(!r.get("periodicity j=2").unwrap().passed);
    }
}
