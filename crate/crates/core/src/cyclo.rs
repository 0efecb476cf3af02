//! Exact arithmetic in `Z[a, 1/√2]` with `a = exp(iπ/4)`.
//!
//! A value is `(c0 + c1 a + c2 a^2 + c3 a^3) / √2^k`. Since `a^4 = -1` the
//! numerator is kept reduced to degree 3, and `√2 = a - a^3` lets every
//! value be normalized to the smallest possible `k`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(from = "CycloRecord", into = "CycloRecord")]
pub struct Cyclo8 {
    coeffs: [i64; 4],
    half_powers: u32,
}

#[derive(Serialize, Deserialize)]
struct CycloRecord {
    coeffs: [i64; 4],
    half_powers: u32,
}

impl From<Cyclo8> for CycloRecord {
    fn from(c: Cyclo8) -> Self {
        CycloRecord {
            coeffs: c.coeffs,
            half_powers: c.half_powers,
        }
    }
}

impl From<CycloRecord> for Cyclo8 {
    fn from(r: CycloRecord) -> Self {
        Cyclo8::new(r.coeffs, r.half_powers)
    }
}

// product of two reduced numerators modulo a^4 + 1
fn poly_mul(x: &[i64; 4], y: &[i64; 4]) -> [i64; 4] {
    let mut out = [0i64; 4];
    for i in 0..4 {
        for j in 0..4 {
            let p = x[i] * y[j];
            if i + j < 4 {
                out[i + j] += p;
            } else {
                out[i + j - 4] -= p;
            }
        }
    }
    out
}

const SQRT2: [i64; 4] = [0, 1, 0, -1];

impl Cyclo8 {
    pub const ZERO: Cyclo8 = Cyclo8 {
        coeffs: [0; 4],
        half_powers: 0,
    };
    pub const ONE: Cyclo8 = Cyclo8 {
        coeffs: [1, 0, 0, 0],
        half_powers: 0,
    };
    /// `a = exp(iπ/4)`.
    pub const A: Cyclo8 = Cyclo8 {
        coeffs: [0, 1, 0, 0],
        half_powers: 0,
    };
    /// `i = a^2`.
    pub const I: Cyclo8 = Cyclo8 {
        coeffs: [0, 0, 1, 0],
        half_powers: 0,
    };

    pub fn new(coeffs: [i64; 4], half_powers: u32) -> Self {
        let mut c = Cyclo8 {
            coeffs,
            half_powers,
        };
        c.normalize();
        c
    }

    pub fn integer(n: i64) -> Self {
        Cyclo8::new([n, 0, 0, 0], 0)
    }

    /// `1/√2`.
    pub fn inv_sqrt2() -> Self {
        Cyclo8::new([1, 0, 0, 0], 1)
    }

    /// `a^n` for any integer `n`.
    pub fn zeta_pow(n: i64) -> Self {
        let r = n.rem_euclid(8) as usize;
        let mut coeffs = [0i64; 4];
        if r < 4 {
            coeffs[r] = 1;
        } else {
            coeffs[r - 4] = -1;
        }
        Cyclo8 {
            coeffs,
            half_powers: 0,
        }
    }

    pub fn coeffs(&self) -> [i64; 4] {
        self.coeffs
    }

    pub fn half_powers(&self) -> u32 {
        self.half_powers
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0; 4]
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.half_powers = 0;
            return;
        }
        while self.half_powers > 0 {
            let t = poly_mul(&self.coeffs, &SQRT2);
            if t.iter().any(|c| c % 2 != 0) {
                break;
            }
            self.coeffs = t.map(|c| c / 2);
            self.half_powers -= 1;
        }
    }

    /// Numerator rescaled to denominator `√2^k`, `k >= self.half_powers`.
    pub fn numerator_at(&self, k: u32) -> [i64; 4] {
        assert!(k >= self.half_powers);
        let mut n = self.coeffs;
        for _ in self.half_powers..k {
            n = poly_mul(&n, &SQRT2);
        }
        n
    }

    pub fn conj(&self) -> Self {
        let [c0, c1, c2, c3] = self.coeffs;
        Cyclo8 {
            coeffs: [c0, -c3, -c2, -c1],
            half_powers: self.half_powers,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Cyclo8::ONE, |acc, _| acc * *self)
    }

    pub fn to_complex(&self) -> Complex64 {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let [c0, c1, c2, c3] = self.coeffs.map(|c| c as f64);
        // a = (1+i)/√2, a^2 = i, a^3 = (-1+i)/√2
        let z = Complex64::new(c0 + (c1 - c3) * h, c2 + (c1 + c3) * h);
        let k = self.half_powers;
        let mut scale = 0.5f64.powi((k / 2) as i32);
        if k % 2 == 1 {
            scale *= h;
        }
        z * scale
    }

    /// The value when it is real, i.e. of the form `(n0 + n1 √2)/√2^k`.
    pub fn to_real(&self) -> Option<f64> {
        let [_, c1, c2, c3] = self.coeffs;
        (c2 == 0 && c1 == -c3).then(|| self.to_complex().re)
    }
}

impl Add for Cyclo8 {
    type Output = Cyclo8;
    fn add(self, rhs: Cyclo8) -> Cyclo8 {
        let k = self.half_powers.max(rhs.half_powers);
        let x = self.numerator_at(k);
        let y = rhs.numerator_at(k);
        Cyclo8::new([x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]], k)
    }
}

impl Sub for Cyclo8 {
    type Output = Cyclo8;
    fn sub(self, rhs: Cyclo8) -> Cyclo8 {
        self + (-rhs)
    }
}

impl Neg for Cyclo8 {
    type Output = Cyclo8;
    fn neg(self) -> Cyclo8 {
        Cyclo8 {
            coeffs: self.coeffs.map(|c| -c),
            half_powers: self.half_powers,
        }
    }
}

impl Mul for Cyclo8 {
    type Output = Cyclo8;
    fn mul(self, rhs: Cyclo8) -> Cyclo8 {
        Cyclo8::new(
            poly_mul(&self.coeffs, &rhs.coeffs),
            self.half_powers + rhs.half_powers,
        )
    }
}

impl fmt::Display for Cyclo8 {
    /// Renders e.g. `-a^3/√2`, `1`, `(1+a)/√2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match d {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{d}"),
            };
            let mag = c.unsigned_abs();
            let body = match (mag, mono.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => mono,
                (_, false) => format!("{mag}{mono}"),
            };
            terms.push((c < 0, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut num = String::new();
        for (k, (neg, body)) in terms.iter().enumerate() {
            if *neg {
                num.push('-');
            } else if k > 0 {
                num.push('+');
            }
            num.push_str(body);
        }
        if self.half_powers == 0 {
            return write!(f, "{num}");
        }
        if terms.len() > 1 {
            num = format!("({num})");
        }
        let two = 1u64 << (self.half_powers / 2);
        let den = match (self.half_powers % 2, two) {
            (0, _) => two.to_string(),
            (_, 1) => "√2".to_string(),
            (_, _) => format!("({two}√2)"),
        };
        write!(f, "{num}/{den}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = Cyclo8> {
        (prop::array::uniform4(-6i64..=6), 0u32..4).prop_map(|(c, k)| Cyclo8::new(c, k))
    }

    fn close(x: Complex64, y: Complex64) -> bool {
        (x - y).norm() < 1e-9 * (1.0 + x.norm())
    }

    #[test]
    fn a_to_the_eighth_is_one() {
        assert_eq!(Cyclo8::A.pow(4), Cyclo8::integer(-1));
        assert_eq!(Cyclo8::A.pow(8), Cyclo8::ONE);
        assert_eq!(Cyclo8::zeta_pow(-1), Cyclo8::A.conj());
        assert_eq!(Cyclo8::I * Cyclo8::I, Cyclo8::integer(-1));
    }

    #[test]
    fn sqrt2_normalizes() {
        let s = Cyclo8::new(SQRT2, 0);
        assert_eq!(s * Cyclo8::inv_sqrt2(), Cyclo8::ONE);
        assert_eq!(
            Cyclo8::inv_sqrt2() * Cyclo8::inv_sqrt2(),
            Cyclo8::new([1, 0, 0, 0], 2)
        );
        assert_eq!(Cyclo8::new([2, 0, 0, 0], 2), Cyclo8::ONE);
        assert_eq!(Cyclo8::new([0, 1, 0, -1], 1), Cyclo8::ONE);
        assert_eq!(Cyclo8::new([0; 4], 3).half_powers(), 0);
    }

    #[test]
    fn display() {
        assert_eq!(
            (-Cyclo8::A.pow(3) * Cyclo8::inv_sqrt2()).to_string(),
            "-a^3/√2"
        );
        assert_eq!(Cyclo8::ONE.to_string(), "1");
        assert_eq!(Cyclo8::ZERO.to_string(), "0");
        assert_eq!(Cyclo8::new([1, 0, 1, 0], 2).to_string(), "a/√2");
        assert_eq!(Cyclo8::new([1, 1, 0, 0], 1).to_string(), "(1+a)/√2");
        assert_eq!(Cyclo8::new([1, 0, 0, 0], 2).to_string(), "1/2");
        assert_eq!(Cyclo8::new([1, 0, 0, 0], 3).to_string(), "1/(2√2)");
    }

    #[test]
    fn real_values() {
        assert_eq!(
            Cyclo8::new(SQRT2, 0).to_real(),
            Some(std::f64::consts::SQRT_2)
        );
        assert_eq!(Cyclo8::I.to_real(), None);
    }

    #[test]
    fn serde_round_trip() {
        let c = Cyclo8::new([1, -2, 0, 3], 1);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"coeffs":[1,-2,0,3],"half_powers":1}"#);
        assert_eq!(serde_json::from_str::<Cyclo8>(&s).unwrap(), c);
    }

    proptest! {
        #[test]
        fn ring_ops_match_complex(x in arb(), y in arb()) {
            prop_assert!(close((x + y).to_complex(), x.to_complex() + y.to_complex()));
            prop_assert!(close((x * y).to_complex(), x.to_complex() * y.to_complex()));
            prop_assert!(close(x.conj().to_complex(), x.to_complex().conj()));
            prop_assert!(close((-x).to_complex(), -x.to_complex()));
        }

        #[test]
        fn equal_values_have_equal_representation(x in arb(), y in arb()) {
            // a value times √2/√2 must normalize back to itself
            let s = Cyclo8::new(SQRT2, 0);
            prop_assert_eq!(x * s * Cyclo8::inv_sqrt2(), x);
            prop_assert_eq!((x + y) - y, x);
            prop_assert_eq!(x * y, y * x);
        }
    }
}
