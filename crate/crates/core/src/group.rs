//! The hyperoctahedral Coxeter group `G = (C2)^4 ⋊ S(4)` of order 384 acting
//! on `E^4` by signed permutations of the coordinates.
//!
//! An element `g = εp` stores its sign vector `ε` and its permutation `p` in
//! one-line form (`perm[i] = p(i)`). It acts on a point by
//!
//! ```text
//! (g x)_i = ε_i · x_{p(i)}
//! ```
//!
//! which is the reading under which the cycle strings of the deck tables
//! (e.g. `(0132)` for `(x1,-x3,x0,x2)` with `ε = (+-++)`) reproduce their
//! action columns.
//!
//! [`HyperoctElement::multiply`] is composition of maps: `g.multiply(&h)`
//! applies `h` first. Products written as words of generators (`W2 W1 W4 W0
//! J4 ...`) are read left to right in application order, see
//! [`HyperoctElement::then`] and [`Word::evaluate`].

use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// Default cap on the size of a generated subgroup.
pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// Tolerance used when deduplicating orbit points.
pub const ORBIT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "ElementRecord", try_from = "ElementRecord")]
pub struct HyperoctElement {
    signs: [i8; 4],
    perm: [u8; 4],
}

/// JSON shape of a group element: `{signs, perm, cycles}`.
#[derive(Serialize, Deserialize)]
struct ElementRecord {
    signs: [i8; 4],
    perm: [u8; 4],
    cycles: String,
}

impl From<HyperoctElement> for ElementRecord {
    fn from(g: HyperoctElement) -> Self {
        ElementRecord {
            signs: g.signs,
            perm: g.perm,
            cycles: cycles_string(&g.perm),
        }
    }
}

impl TryFrom<ElementRecord> for HyperoctElement {
    type Error = Error;
    fn try_from(r: ElementRecord) -> Result<Self> {
        let g = HyperoctElement::new(r.signs, r.perm)?;
        if parse_cycles(&r.cycles)? != r.perm {
            return Err(Error::CycleSyntax(format!(
                "{} does not match perm {:?}",
                r.cycles, r.perm
            )));
        }
        Ok(g)
    }
}

impl HyperoctElement {
    pub const IDENTITY: HyperoctElement = HyperoctElement {
        signs: [1; 4],
        perm: [0, 1, 2, 3],
    };

    /// The central inversion `J4: x -> -x`.
    pub const J4: HyperoctElement = HyperoctElement {
        signs: [-1; 4],
        perm: [0, 1, 2, 3],
    };

    pub fn new(signs: [i8; 4], perm: [u8; 4]) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidSigns(signs));
        }
        let mut seen = [false; 4];
        for &p in &perm {
            if p > 3 || seen[p as usize] {
                return Err(Error::InvalidPerm(perm));
            }
            seen[p as usize] = true;
        }
        Ok(HyperoctElement { signs, perm })
    }

    /// Builds an element from a sign string such as `"+-++"` and cycle
    /// notation such as `"(0132)"` or `"e"`.
    pub fn from_notation(signs: &str, cycles: &str) -> Result<Self> {
        let s = parse_signs(signs)?;
        HyperoctElement::new(s, parse_cycles(cycles)?)
    }

    pub fn from_perm(perm: [u8; 4]) -> Result<Self> {
        HyperoctElement::new([1; 4], perm)
    }

    pub fn signs(&self) -> [i8; 4] {
        self.signs
    }

    pub fn perm(&self) -> [u8; 4] {
        self.perm
    }

    pub fn cycles(&self) -> String {
        cycles_string(&self.perm)
    }

    pub fn sign_string(&self) -> String {
        self.signs
            .iter()
            .map(|&s| if s > 0 { '+' } else { '-' })
            .collect()
    }

    /// Composition `self ∘ other`: `other` acts first.
    pub fn multiply(&self, other: &HyperoctElement) -> HyperoctElement {
        let mut signs = [0i8; 4];
        let mut perm = [0u8; 4];
        for i in 0..4 {
            let pi = self.perm[i] as usize;
            signs[i] = self.signs[i] * other.signs[pi];
            perm[i] = other.perm[pi];
        }
        HyperoctElement { signs, perm }
    }

    /// Written-order product: `self` acts first, then `next`.
    pub fn then(&self, next: &HyperoctElement) -> HyperoctElement {
        next.multiply(self)
    }

    pub fn inverse(&self) -> HyperoctElement {
        let mut signs = [0i8; 4];
        let mut perm = [0u8; 4];
        for i in 0..4 {
            let pi = self.perm[i] as usize;
            perm[pi] = i as u8;
            signs[pi] = self.signs[i];
        }
        HyperoctElement { signs, perm }
    }

    pub fn pow(&self, n: u32) -> HyperoctElement {
        (0..n).fold(HyperoctElement::IDENTITY, |acc, _| acc.multiply(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == HyperoctElement::IDENTITY
    }

    pub fn order(&self) -> u32 {
        let mut g = *self;
        let mut n = 1;
        while !g.is_identity() {
            g = g.multiply(self);
            n += 1;
        }
        n
    }

    pub fn apply(&self, x: &Point4) -> Point4 {
        let mut y = [0.0; 4];
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = f64::from(self.signs[i]) * x.0[self.perm[i] as usize];
        }
        Point4(y)
    }

    /// Exact action on integer coordinates.
    pub fn apply_int(&self, x: [i64; 4]) -> [i64; 4] {
        let mut y = [0; 4];
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = i64::from(self.signs[i]) * x[self.perm[i] as usize];
        }
        y
    }

    /// The 4x4 signed permutation matrix, `M[i][p(i)] = ε_i`.
    pub fn matrix(&self) -> [[i8; 4]; 4] {
        let mut m = [[0i8; 4]; 4];
        for i in 0..4 {
            m[i][self.perm[i] as usize] = self.signs[i];
        }
        m
    }

    pub fn determinant(&self) -> i8 {
        let sign_product: i8 = self.signs.iter().product();
        sign_product * perm_parity(&self.perm)
    }

    pub fn preserves_orientation(&self) -> bool {
        self.determinant() == 1
    }

    /// Whether the matrix has eigenvalue 1, i.e. fixes some point of `S^3`.
    ///
    /// Along a cycle `i -> p(i) -> ...` a fixed vector satisfies
    /// `x_i = (∏ ε over the cycle) x_i`, so a fixed point exists iff some
    /// cycle has sign product `+1`.
    pub fn has_fixed_point_on_sphere(&self) -> bool {
        cycle_decomposition(&self.perm).iter().any(|cycle| {
            cycle
                .iter()
                .map(|&i| self.signs[i as usize])
                .product::<i8>()
                == 1
        })
    }

    /// Renders the action column of the deck tables, e.g. `(x1,-x3,x0,x2)`.
    pub fn action_string(&self) -> String {
        let parts: Vec<String> = (0..4)
            .map(|i| {
                format!(
                    "{}x{}",
                    if self.signs[i] < 0 { "-" } else { "" },
                    self.perm[i]
                )
            })
            .collect();
        format!("({})", parts.join(","))
    }

    /// Sort key placing the identity first: permutation, then signs with `+`
    /// before `-`.
    fn canonical_key(&self) -> ([u8; 4], [u8; 4]) {
        let s = self.signs.map(|x| u8::from(x < 0));
        (self.perm, s)
    }
}

impl Ord for HyperoctElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl PartialOrd for HyperoctElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HyperoctElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}){}", self.sign_string(), self.cycles())
    }
}

pub fn multiply(g: &HyperoctElement, h: &HyperoctElement) -> HyperoctElement {
    g.multiply(h)
}

pub fn inverse(g: &HyperoctElement) -> HyperoctElement {
    g.inverse()
}

pub fn apply(g: &HyperoctElement, x: &Point4) -> Point4 {
    g.apply(x)
}

pub fn has_fixed_point_on_sphere(g: &HyperoctElement) -> bool {
    g.has_fixed_point_on_sphere()
}

fn perm_parity(p: &[u8; 4]) -> i8 {
    let even_cycles = cycle_decomposition(p)
        .iter()
        .filter(|c| c.len() % 2 == 0)
        .count();
    if even_cycles % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All cycles of `p`, including fixed points, each starting at its smallest
/// entry.
pub fn cycle_decomposition(p: &[u8; 4]) -> Vec<Vec<u8>> {
    let mut seen = [false; 4];
    let mut cycles = Vec::new();
    for start in 0..4u8 {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start as usize] = true;
        let mut next = p[start as usize];
        while next != start {
            seen[next as usize] = true;
            cycle.push(next);
            next = p[next as usize];
        }
        cycles.push(cycle);
    }
    cycles
}

/// Cycle notation with fixed points omitted; the identity prints as `e`.
pub fn cycles_string(p: &[u8; 4]) -> String {
    let s: String = cycle_decomposition(p)
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let body: String = c.iter().map(|d| char::from(b'0' + d)).collect();
            format!("({body})")
        })
        .collect();
    if s.is_empty() {
        "e".to_string()
    } else {
        s
    }
}

/// Parses `e`, `(0132)`, `(03)(12)`, `(321)`; `(abc)` means `a -> b -> c -> a`.
pub fn parse_cycles(s: &str) -> Result<[u8; 4]> {
    let err = || Error::CycleSyntax(s.to_string());
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut perm = [0u8, 1, 2, 3];
    if t == "e" || t.is_empty() {
        return Ok(perm);
    }
    let mut used = [false; 4];
    let mut rest = t.as_str();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(err)?;
        let close = body.find(')').ok_or_else(err)?;
        let digits: Vec<u8> = body[..close]
            .chars()
            .map(|c| c.to_digit(10).filter(|&d| d < 4).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(err)?;
        if digits.is_empty() {
            return Err(err());
        }
        for (k, &d) in digits.iter().enumerate() {
            if used[d as usize] {
                return Err(err());
            }
            used[d as usize] = true;
            perm[d as usize] = digits[(k + 1) % digits.len()];
        }
        rest = &body[close + 1..];
    }
    Ok(perm)
}

pub fn parse_signs(s: &str) -> Result<[i8; 4]> {
    let v: Vec<i8> = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '+' => Ok(1),
            '-' | '−' => Ok(-1),
            _ => Err(Error::InvalidLabel(format!("sign string {s:?}"))),
        })
        .collect::<Result<_>>()?;
    v.try_into()
        .map_err(|_| Error::InvalidLabel(format!("sign string {s:?} needs 4 entries")))
}

/// A point of `E^4`; points of `S^3` have unit norm.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point4(pub [f64; 4]);

impl Point4 {
    pub const CENTER: Point4 = Point4([1.0, 0.0, 0.0, 0.0]);

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum()
    }

    pub fn normalized(&self) -> Point4 {
        let n = self.norm_sq().sqrt();
        Point4(self.0.map(|v| v / n))
    }

    pub fn is_on_sphere(&self) -> bool {
        (self.norm_sq() - 1.0).abs() < 1e-12
    }

    pub fn distance(&self, other: &Point4) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn approx_eq(&self, other: &Point4, tol: f64) -> bool {
        self.distance(other) < tol
    }
}

/// `n` points uniform on `S^3` (normalized standard normals), reproducible
/// from `seed`.
pub fn sample_sphere(seed: u64, n: usize) -> Vec<Point4> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = Point4(std::array::from_fn(|_| {
            rng.sample::<f64, _>(StandardNormal)
        }));
        if x.norm_sq() > 1e-12 {
            out.push(x.normalized());
        }
    }
    out
}

/// The eight cell centers of the 8-cell tiling: `±e_k`.
pub fn cell_centers() -> Vec<Point4> {
    let mut out = Vec::with_capacity(8);
    for k in 0..4 {
        for s in [1.0, -1.0] {
            let mut x = [0.0; 4];
            x[k] = s;
            out.push(Point4(x));
        }
    }
    out
}

/// Subgroup generated by `generators`, breadth first, sorted canonically
/// (identity first).
pub fn closure(generators: &[HyperoctElement]) -> Result<Vec<HyperoctElement>> {
    closure_bounded(generators, DEFAULT_CLOSURE_BOUND)
}

pub fn closure_bounded(
    generators: &[HyperoctElement],
    bound: usize,
) -> Result<Vec<HyperoctElement>> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(HyperoctElement::IDENTITY);
    queue.push_back(HyperoctElement::IDENTITY);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = g.multiply(s);
            if seen.insert(h) {
                if seen.len() > bound {
                    return Err(Error::ClosureBound(bound));
                }
                queue.push_back(h);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Distinct images of `x` under `group`, deduplicated at [`ORBIT_TOLERANCE`]
/// and sorted lexicographically by coordinates.
pub fn orbit(group: &[HyperoctElement], x: &Point4) -> Vec<Point4> {
    let mut out: Vec<Point4> = Vec::new();
    for g in group {
        let y = g.apply(x);
        if !out.iter().any(|z| z.approx_eq(&y, ORBIT_TOLERANCE)) {
            out.push(y);
        }
    }
    out.sort_by(|a, b| {
        a.0.iter()
            .zip(b.0.iter())
            .map(|(p, q)| p.total_cmp(q))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    out
}

/// Whether two point sets coincide up to [`ORBIT_TOLERANCE`].
pub fn same_point_set(a: &[Point4], b: &[Point4]) -> bool {
    a.len() == b.len()
        && a.iter()
            .all(|p| b.iter().any(|q| p.approx_eq(q, ORBIT_TOLERANCE)))
}

/// A letter of a Weyl word: one of the reflections `W0..W4` or `J4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    W0,
    W1,
    W2,
    W3,
    W4,
    J4,
}

impl Letter {
    pub const WEYL: [Letter; 5] = [Letter::W0, Letter::W1, Letter::W2, Letter::W3, Letter::W4];

    pub fn weyl(index: u8) -> Result<Letter> {
        Letter::WEYL
            .get(index as usize)
            .copied()
            .ok_or(Error::UnknownGenerator(index))
    }

    pub fn weyl_index(self) -> Option<u8> {
        match self {
            Letter::W0 => Some(0),
            Letter::W1 => Some(1),
            Letter::W2 => Some(2),
            Letter::W3 => Some(3),
            Letter::W4 => Some(4),
            Letter::J4 => None,
        }
    }

    pub fn element(self) -> HyperoctElement {
        let (signs, perm) = match self {
            Letter::W1 => ([1, 1, 1, -1], [0, 1, 2, 3]),
            Letter::W2 => ([1, 1, 1, 1], [0, 1, 3, 2]),
            Letter::W3 => ([1, 1, 1, 1], [0, 2, 1, 3]),
            Letter::W4 => ([1, 1, 1, 1], [1, 0, 2, 3]),
            Letter::W0 => ([-1, 1, 1, 1], [0, 1, 2, 3]),
            Letter::J4 => ([-1, -1, -1, -1], [0, 1, 2, 3]),
        };
        HyperoctElement { signs, perm }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.weyl_index() {
            Some(i) => write!(f, "W{i}"),
            None => write!(f, "J4"),
        }
    }
}

/// A generator row: the Weyl reflection `W_s` (or `J4`, which has no Weyl
/// vector) with its signed-permutation form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeylGenerator {
    pub letter: Letter,
    pub element: HyperoctElement,
    pub weyl_vector: Option<[f64; 4]>,
}

/// Weyl vectors `a_s` of the generators `W0..W4`.
pub fn weyl_vector(s: u8) -> Result<[f64; 4]> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    Ok(match s {
        0 => [1.0, 0.0, 0.0, 0.0],
        1 => [0.0, 0.0, 0.0, 1.0],
        2 => [0.0, 0.0, -h, h],
        3 => [0.0, h, -h, 0.0],
        4 => [-h, h, 0.0, 0.0],
        _ => return Err(Error::UnknownGenerator(s)),
    })
}

/// Generator data in the order `W1, W2, W3, W4, W0, J4`.
pub fn weyl_generators() -> Vec<WeylGenerator> {
    [
        Letter::W1,
        Letter::W2,
        Letter::W3,
        Letter::W4,
        Letter::W0,
        Letter::J4,
    ]
    .into_iter()
    .map(|letter| WeylGenerator {
        letter,
        element: letter.element(),
        weyl_vector: letter.weyl_index().map(|s| weyl_vector(s).unwrap()),
    })
    .collect()
}

/// The full group `G`, generated by `W1..W4`.
pub fn coxeter_group() -> Vec<HyperoctElement> {
    let gens: Vec<_> = [Letter::W1, Letter::W2, Letter::W3, Letter::W4]
        .iter()
        .map(|l| l.element())
        .collect();
    closure(&gens).expect("the rank-4 Coxeter group is finite")
}

/// A word in the letters `W0..W4, J4`, read left to right in application
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn weyl_count(&self) -> usize {
        self.0.iter().filter(|l| l.weyl_index().is_some()).count()
    }

    pub fn evaluate(&self) -> HyperoctElement {
        self.0
            .iter()
            .fold(HyperoctElement::IDENTITY, |acc, l| acc.then(&l.element()))
    }

    /// Concatenation `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `prefix · self · suffix` in written order.
    pub fn conjugated(&self, prefix: &Word, suffix: &Word) -> Word {
        prefix.concat(self).concat(suffix)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts e.g. `"(W2W1)(W4W0)J4(W2W3)"`; brackets and spaces are
    /// ignored.
    fn from_str(s: &str) -> Result<Word> {
        let err = || Error::WordSyntax(s.to_string());
        let chars: Vec<char> = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')' && *c != '·' && *c != '*')
            .collect();
        let mut letters = Vec::new();
        let mut k = 0;
        while k < chars.len() {
            let head = chars[k];
            let idx = chars
                .get(k + 1)
                .and_then(|c| c.to_digit(10))
                .ok_or_else(err)?;
            letters.push(match (head, idx) {
                ('W', i) if i <= 4 => Letter::weyl(i as u8)?,
                ('J', 4) => Letter::J4,
                _ => return Err(err()),
            });
            k += 2;
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}
