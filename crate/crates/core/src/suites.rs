//! Verification suites behind `s3harm verify`, each producing [`Report`]s.

use crate::deck::{
    build_c8, build_q, deck_group, standard_glue, verify_deck_group_seeded, FacePair, Manifold,
};
use crate::group::{coxeter_group, sample_sphere, HyperoctElement, Letter};
use crate::harmonics::{
    averaged_projector, basis, c8_recursion_step, multiplicity, multiplicity_c8, multiplicity_q,
    multiplicity_q_character_sum, multiplicity_q_piecewise, projector_c8, projector_q,
    q_representation_table, verify_basis, BasisCheck, BasisFunction,
};
use crate::induced::verify_induced;
use crate::quadrature::{quadrature_inner, EulerQuadrature};
use crate::reference::{GLUE_ROWS, MULTIPLICITY_C8, MULTIPLICITY_Q};
use crate::report::Report;
use crate::su2::u_from_point;
use crate::wigner::{
    conjugation_harmonic_from_block, wigner_d_euler, wigner_d_unchecked, EulerAngles, HalfInt,
};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Largest `j_max` accepted by the suites.
pub const J_MAX_LIMIT: u32 = 20;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Group,
    Basis,
    Induced,
    All,
}

impl FromStr for Suite {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "group" => Ok(Suite::Group),
            "basis" => Ok(Suite::Basis),
            "induced" => Ok(Suite::Induced),
            "all" => Ok(Suite::All),
            _ => Err(crate::Error::InvalidLabel(format!("suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Group => "group",
            Suite::Basis => "basis",
            Suite::Induced => "induced",
            Suite::All => "all",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteOptions {
    /// Restricts the deck and basis suites to one manifold.
    pub manifold: Option<Manifold>,
    pub j_max: u32,
    pub seed: u64,
    pub tol: f64,
    pub points: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            manifold: None,
            j_max: 8,
            seed: 42,
            tol: 1e-10,
            points: 100,
        }
    }
}

impl SuiteOptions {
    fn manifolds(&self) -> Vec<Manifold> {
        match self.manifold {
            Some(m) => vec![m],
            None => vec![Manifold::C2, Manifold::C3],
        }
    }
}

pub fn run(suite: Suite, opts: &SuiteOptions) -> Vec<Report> {
    match suite {
        Suite::Group => group_suite(opts),
        Suite::Basis => basis_suite(opts),
        Suite::Induced => vec![verify_induced()],
        Suite::All => {
            let mut v = group_suite(opts);
            v.extend(basis_suite(opts));
            v.push(verify_induced());
            v
        }
    }
}

pub fn group_suite(opts: &SuiteOptions) -> Vec<Report> {
    let mut out = vec![coxeter_report()];
    for m in opts.manifolds() {
        out.push(verify_deck_group_seeded(deck_group(m), opts.seed));
    }
    out
}

/// `G` itself, the glue operators and the element tables.
pub fn coxeter_report() -> Report {
    let mut r = Report::new("group", "Coxeter group G and glue operators");
    let g = coxeter_group();
    r.check("order 384", g.len() == 384, format!("{} elements", g.len()));
    let reflections = Letter::WEYL.iter().all(|l| {
        let e = l.element();
        e.multiply(&e).is_identity() && e.determinant() == -1
    });
    r.check("Weyl generators are reflections", reflections, "");
    let j4 = HyperoctElement::J4;
    r.check(
        "J4 central",
        g.binary_search(&j4).is_ok() && g.iter().all(|x| x.multiply(&j4) == j4.multiply(x)),
        "",
    );
    let glue_ok: Vec<String> = FacePair::ALL
        .iter()
        .zip(GLUE_ROWS)
        .filter(|(fp, row)| {
            let e = standard_glue(**fp).element;
            fp.label() != row.0
                || e.action_string() != row.1
                || e.sign_string() != row.2
                || e.cycles() != row.3
        })
        .map(|(fp, _)| fp.label().to_string())
        .collect();
    r.check("glue operators", glue_ok.is_empty(), glue_ok.join(" "));
    match build_c8() {
        Ok(_) => r.check("C8 element table", true, "8 rows, pairs up to global sign"),
        Err(e) => r.check("C8 element table", false, e.to_string()),
    }
    match build_q() {
        Ok(_) => r.check("Q generator table", true, "q1, q2, q3"),
        Err(e) => r.check("Q generator table", false, e.to_string()),
    }
    r
}

pub fn basis_suite(opts: &SuiteOptions) -> Vec<Report> {
    let mut out = vec![kernel_report(opts.seed, opts.tol)];
    for m in opts.manifolds() {
        out.push(multiplicity_report(m, opts.j_max));
        out.push(projector_report(m, opts.j_max, opts.tol));
        let functions: Vec<BasisFunction> = (0..=opts.j_max).flat_map(|j| basis(m, j)).collect();
        let check = BasisCheck {
            j_max: opts.j_max,
            seed: opts.seed,
            tol: opts.tol,
            points: opts.points,
        };
        out.push(verify_basis(&functions, deck_group(m), &check));
    }
    out
}

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Unitarity, homomorphism, orthogonality under quadrature, the Q
/// representation table and the conjugation harmonics.
pub fn kernel_report(seed: u64, tol: f64) -> Report {
    let mut r = Report::new("basis", "Wigner kernel");
    let pts = sample_sphere(seed, 20);
    let us: Vec<_> = pts.iter().map(u_from_point).collect();

    let (mut unit, mut hom, mut euler): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for t in 0..=12 {
        let j = HalfInt::from_twice(t);
        for w in us.windows(2) {
            let a = wigner_d_unchecked(j, &w[0]).into_matrix();
            let b = wigner_d_unchecked(j, &w[1]).into_matrix();
            let ab = wigner_d_unchecked(j, &(w[0] * w[1])).into_matrix();
            let n = a.nrows();
            unit = unit.max(max_abs(&(a.adjoint() * &a - DMatrix::identity(n, n))));
            hom = hom.max(max_abs(&(&a * &b - ab)));
        }
        let ang = EulerAngles::new(0.3 + t as f64, 1.1, -0.7 * t as f64);
        let e = wigner_d_euler(j, &ang).expect("valid angles").into_matrix();
        let p = wigner_d_unchecked(j, &ang.to_su2()).into_matrix();
        euler = euler.max(max_abs(&(e - p)));
    }
    r.within("unitarity j<=6", unit, tol);
    r.within("homomorphism j<=6", hom, tol);
    r.within("Euler and polynomial routes agree", euler, tol);

    let q = EulerQuadrature::exact_for(4);
    let mut orth: f64 = 0.0;
    let sample: [(i32, i32); 5] = [(0, 0), (1, -1), (2, 1), (3, 0), (4, -3)];
    for j in 0..=4i32 {
        for jp in 0..=4 {
            for &(a, b) in &sample {
                for &(c, d) in &sample {
                    if a.abs() > j || b.abs() > j || c.abs() > jp || d.abs() > jp {
                        continue;
                    }
                    let v = quadrature_inner(
                        |n| wigner_d_unchecked(HalfInt::int(j), &n.u).at(a, b),
                        |n| wigner_d_unchecked(HalfInt::int(jp), &n.u).at(c, d),
                        &q,
                    );
                    let want = if (j, a, b) == (jp, c, d) {
                        1.0 / f64::from(2 * j + 1)
                    } else {
                        0.0
                    };
                    orth = orth.max((v - want).norm());
                }
            }
        }
    }
    r.within("quadrature orthogonality j<=4", orth, 1e-12);

    let q_group = deck_group(Manifold::C3);
    let mut table: f64 = 0.0;
    for t in 0..=6 {
        let j = HalfInt::from_twice(t);
        for (d, e) in q_representation_table(j).iter().zip(&q_group.elements) {
            let pair = e.pair.expect("Q preserves orientation");
            let sign = pair.right.to_complex()[(0, 0)].re.powi(t);
            let w = wigner_d_unchecked(j, &pair.left.to_complex()).into_matrix()
                * Complex64::new(sign, 0.0);
            table = table.max(max_abs(&(d - w)));
        }
    }
    r.within("Q representation table j<=3", table, 1e-12);

    let mut law: f64 = 0.0;
    for w in us.chunks(2).take(10).chain(us.rchunks(2).take(10)) {
        let (g, u) = (w[0], w[1]);
        let conj = g.adjoint() * u * g;
        for j in 1..=3 {
            let dj_u = wigner_d_unchecked(HalfInt::int(j), &u);
            let dj_c = wigner_d_unchecked(HalfInt::int(j), &conj);
            for l in 0..=2 * j {
                let dl = wigner_d_unchecked(HalfInt::int(l), &g);
                for m in -l..=l {
                    let lhs = conjugation_harmonic_from_block(&dj_c, l, m);
                    let rhs: Complex64 = (-l..=l)
                        .map(|mp| conjugation_harmonic_from_block(&dj_u, l, mp) * dl.at(mp, m))
                        .sum();
                    law = law.max((lhs - rhs).norm());
                }
            }
        }
    }
    r.within("conjugation harmonics transformation law", law, tol);
    r
}

/// Character-sum multiplicities against the tabulated values, the closed
/// forms and the C8 recursion.
pub fn multiplicity_report(m: Manifold, j_max: u32) -> Report {
    let mut r = Report::new("basis", format!("multiplicities on {m}"));
    let (reference, name) = match m {
        Manifold::C2 => (MULTIPLICITY_C8, "C8"),
        Manifold::C3 => (MULTIPLICITY_Q, "Q"),
    };
    let got: Vec<u64> = (0..=8).map(|j| multiplicity(m, HalfInt::int(j))).collect();
    r.check(
        format!("m({name}) j=0..8 tabulated"),
        got == reference,
        got.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    let half_zero =
        (0..j_max.max(1)).all(|k| multiplicity(m, HalfInt::from_twice(2 * k as i32 + 1)) == 0);
    r.check("half-integer j vanish", half_zero, "");
    match m {
        Manifold::C2 => {
            let bad: Vec<u32> = (0..=12)
                .filter(|&j| {
                    let d = multiplicity_c8(HalfInt::int(j as i32 + 4)) as i64
                        - multiplicity_c8(HalfInt::int(j as i32)) as i64;
                    d != c8_recursion_step(j)
                })
                .collect();
            r.check("recursion j<=12", bad.is_empty(), format!("{bad:?}"));
        }
        Manifold::C3 => {
            let bad: Vec<u32> = (0..=j_max.max(10))
                .filter(|&j| {
                    let h = HalfInt::int(j as i32);
                    let v = multiplicity_q(h);
                    v != multiplicity_q_character_sum(h) || v != multiplicity_q_piecewise(j)
                })
                .collect();
            r.check(
                "closed, piecewise and character-sum forms agree",
                bad.is_empty(),
                format!("{bad:?}"),
            );
        }
    }
    r
}

/// Projector trace, idempotence and the closed forms.
pub fn projector_report(m: Manifold, j_max: u32, tol: f64) -> Report {
    let mut r = Report::new("basis", format!("projectors on {m}"));
    let pairs = deck_group(m).pairs().expect("deck elements lift");
    let (mut trace_res, mut idem, mut closed): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut mismatched = Vec::new();
    for j in 0..=j_max {
        let p = averaged_projector(j, &pairs);
        let tr = p.trace().re;
        trace_res = trace_res.max((tr - tr.round()).abs());
        if tr.round() as u64 != multiplicity(m, HalfInt::int(j as i32)) {
            mismatched.push(j);
        }
        idem = idem.max(max_abs(&(&p * &p - &p)));
        let closed_err = match m {
            Manifold::C2 => {
                let c = projector_c8(j);
                max_abs(&(&p - &c.closed_form)).max(max_abs(&(&c.from_table - &c.closed_form)))
            }
            Manifold::C3 => {
                let c = projector_q(j);
                let n = (2 * j + 1) as usize;
                // the Q projector acts on m1 only
                let full = c.closed_form.kronecker(&DMatrix::identity(n, n));
                max_abs(&(&p - full)).max(max_abs(&(&c.from_table - &c.closed_form)))
            }
        };
        closed = closed.max(closed_err);
    }
    r.check(
        format!("trace equals multiplicity j<={j_max}"),
        mismatched.is_empty() && trace_res < 1e-9,
        format!("max residual {trace_res:.2e}, mismatched {mismatched:?}"),
    );
    r.within(format!("idempotence j<={j_max}"), idem, 1e-12);
    r.within(format!("closed form j<={j_max}"), closed, tol);
    r
}
