//! Independent oracles that share no code path with the library's SU(2)
//! machinery.

use s3harm::deck::{deck_group, Manifold};
use s3harm::group::{coxeter_group, HyperoctElement};
use s3harm::harmonics::{multiplicity, projector_c8, projector_q};
use s3harm::wigner::HalfInt;

/// Coefficients of `det(I - t M)`.
fn det_poly(m: [[i8; 4]; 4]) -> Vec<i64> {
    let entry = |i: usize, j: usize| vec![i64::from(i == j), -i64::from(m[i][j])];
    let mut total = vec![0i64; 5];
    for p in permutations() {
        let mut prod = vec![1i64];
        for (i, &j) in p.iter().enumerate() {
            let e = entry(i, j);
            let mut next = vec![0; prod.len() + 1];
            for (a, x) in prod.iter().enumerate() {
                for (b, y) in e.iter().enumerate() {
                    next[a + b] += x * y;
                }
            }
            prod = next;
        }
        let sign = parity(&p);
        for (k, c) in prod.iter().enumerate() {
            total[k] += sign * c;
        }
    }
    total
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn parity(p: &[usize; 4]) -> i64 {
    let inv = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Power series of `1 / det(I - t M)`: traces of `M` on degree-n polynomials.
fn molien_series(m: [[i8; 4]; 4], n: usize) -> Vec<i64> {
    let d = det_poly(m);
    assert_eq!(d[0], 1);
    let mut a = vec![0i64; n + 1];
    a[0] = 1;
    for k in 1..=n {
        a[k] = -(1..=k.min(4)).map(|i| d[i] * a[k - i]).sum::<i64>();
    }
    a
}

/// Invariant harmonic polynomials of degree `2j` on R^4.
fn harmonic_invariants(group: &[HyperoctElement], j: usize) -> i64 {
    let n = 2 * j;
    let sum: i64 = group
        .iter()
        .map(|g| {
            let a = molien_series(g.matrix(), n);
            a[n] - if n >= 2 { a[n - 2] } else { 0 }
        })
        .sum();
    assert_eq!(sum % group.len() as i64, 0);
    sum / group.len() as i64
}

#[test]
fn harmonic_dimension_is_square() {
    let id = [HyperoctElement::IDENTITY];
    for j in 0..10 {
        assert_eq!(
            harmonic_invariants(&id, j),
            ((2 * j + 1) * (2 * j + 1)) as i64
        );
    }
}

#[test]
fn multiplicities_match_molien_count() {
    for m in [Manifold::C2, Manifold::C3] {
        let g = deck_group(m).group_elements();
        for j in 0..=16 {
            assert_eq!(
                multiplicity(m, HalfInt::int(j as i32)) as i64,
                harmonic_invariants(&g, j),
                "{m} j={j}"
            );
        }
    }
}

#[test]
fn projector_traces_match_molien_count() {
    let c8 = deck_group(Manifold::C2).group_elements();
    let q = deck_group(Manifold::C3).group_elements();
    for j in 0..=6u32 {
        let t = projector_c8(j).closed_form.trace().re.round() as i64;
        assert_eq!(t, harmonic_invariants(&c8, j as usize));
        let n = i64::from(2 * j + 1);
        let tq = projector_q(j).closed_form.trace().re.round() as i64;
        assert_eq!(tq * n, harmonic_invariants(&q, j as usize));
    }
}

#[test]
fn full_group_has_few_invariant_harmonics() {
    // harmonic invariants of the hyperoctahedral group in degrees 0, 4, 6, 8
    let g = coxeter_group();
    let got: Vec<i64> = (0..=4).map(|j| harmonic_invariants(&g, j)).collect();
    assert_eq!(got, vec![1, 0, 1, 1, 2]);
}
