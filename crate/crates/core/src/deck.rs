//! Deck groups of the cubic manifolds: `deck(C2) ≅ C8` generated by `g1` and
//! `deck(C3) ≅ Q` generated by `q1, q2, q3`, built from their Weyl words.

use crate::error::{Error, Result};
use crate::group::{
    cell_centers, closure, orbit, same_point_set, sample_sphere, HyperoctElement, Letter, Point4,
    Word,
};
use crate::reference::{self, DeckRow};
use crate::report::Report;
use crate::su2::{lift_even_word, IsoPair, Su2Exact};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

pub const G1_WORD: &str = "(W2W1)(W4W0)J4(W2W3)(W2W1)(W3W2)";
pub const Q1_WORD: &str = "(W1W2)(W4W0)J4";
/// Letter order used for `q1` when computing its character.
pub const Q1_ALT_WORD: &str = "W2W1W0W4";
const ROT_23: &str = "W3W2";
const ROT_32: &str = "W2W3";

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Manifold {
    C2,
    C3,
}

impl fmt::Display for Manifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Manifold::C2 => "C2",
            Manifold::C3 => "C3",
        })
    }
}

impl FromStr for Manifold {
    type Err = Error;
    fn from_str(s: &str) -> Result<Manifold> {
        match s.trim().to_ascii_uppercase().as_str() {
            "C2" => Ok(Manifold::C2),
            "C3" => Ok(Manifold::C3),
            _ => Err(Error::InvalidLabel(format!("manifold {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeckElement {
    pub label: String,
    pub element: HyperoctElement,
    /// `None` for orientation-reversing elements.
    pub pair: Option<IsoPair>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeckGroup {
    pub name: String,
    pub manifold: Manifold,
    pub elements: Vec<DeckElement>,
    pub generators: Vec<String>,
}

impl DeckGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn get(&self, label: &str) -> Option<&DeckElement> {
        self.elements.iter().find(|e| e.label == label)
    }

    pub fn group_elements(&self) -> Vec<HyperoctElement> {
        self.elements.iter().map(|e| e.element).collect()
    }

    /// The lifted pairs; fails if some element is orientation reversing.
    pub fn pairs(&self) -> Result<Vec<IsoPair>> {
        self.elements
            .iter()
            .map(|e| e.pair.ok_or(Error::NotLiftable))
            .collect()
    }
}

fn word(s: &str) -> Word {
    s.parse().expect("built-in words parse")
}

fn check_row(label: &str, g: &HyperoctElement, pair: &IsoPair, row: &DeckRow) -> Result<()> {
    let mism = |what: &str, got: String, want: &str| {
        Err(Error::TableMismatch(format!(
            "{label} {what}: got {got}, expected {want}"
        )))
    };
    if g.action_string() != row.action {
        return mism("action", g.action_string(), row.action);
    }
    if g.sign_string() != row.signs {
        return mism("signs", g.sign_string(), row.signs);
    }
    if g.cycles() != row.cycles {
        return mism("cycles", g.cycles(), row.cycles);
    }
    if !pair.same_isometry(&IsoPair::new(row.left, row.right)) {
        return mism(
            "pair",
            format!("({}, {})", pair.left, pair.right),
            &format!("±({}, {})", row.left, row.right),
        );
    }
    Ok(())
}

/// `deck(C2)`: the powers `g1^t`, `t = 1..8`, with the identity last.
pub fn build_c8() -> Result<DeckGroup> {
    let w = word(G1_WORD);
    let g1 = w.evaluate();
    let p1 = lift_even_word(&w)?;
    let rows = reference::c8_rows();
    let mut elements = Vec::with_capacity(8);
    for (t, row) in (1..=8u32).zip(&rows) {
        let g = g1.pow(t);
        let p = p1.pow(t);
        check_row(row.label, &g, &p, row)?;
        elements.push(DeckElement {
            label: row.label.to_string(),
            element: g,
            pair: Some(p),
        });
    }
    Ok(DeckGroup {
        name: "deck(C2)".into(),
        manifold: Manifold::C2,
        elements,
        generators: vec!["g1".into()],
    })
}

/// Words of the three quaternion generators.
pub fn q_words() -> [Word; 3] {
    let q1 = word(Q1_WORD);
    let (r23, r32) = (word(ROT_23), word(ROT_32));
    let q2 = q1.conjugated(&r23, &r32);
    let q3 = q1.conjugated(&r32, &r23);
    [q1, q2, q3]
}

/// `deck(C3)`: `e, q1, q2, q3, J4, J4q1, J4q2, J4q3`.
pub fn build_q() -> Result<DeckGroup> {
    let rows = reference::q_rows();
    let mut gens = Vec::new();
    for (w, row) in q_words().iter().zip(&rows) {
        let g = w.evaluate();
        let p = lift_even_word(w)?;
        check_row(row.label, &g, &p, row)?;
        gens.push((row.label, g, p));
    }
    let j4 = HyperoctElement::J4;
    let mut elements = vec![DeckElement {
        label: "e".into(),
        element: HyperoctElement::IDENTITY,
        pair: Some(IsoPair::identity()),
    }];
    for (label, g, p) in &gens {
        elements.push(DeckElement {
            label: label.to_string(),
            element: *g,
            pair: Some(*p),
        });
    }
    elements.push(DeckElement {
        label: "J4".into(),
        element: j4,
        pair: Some(IsoPair::inversion()),
    });
    for (label, g, p) in &gens {
        elements.push(DeckElement {
            label: format!("J4{label}"),
            element: j4.multiply(g),
            pair: Some(p.then(&IsoPair::inversion())),
        });
    }
    let dg = DeckGroup {
        name: "deck(C3)".into(),
        manifold: Manifold::C3,
        elements,
        generators: vec!["q1".into(), "q2".into(), "q3".into()],
    };
    let (q1, q2, q3) = (gens[0].1, gens[1].1, gens[2].1);
    let relations_hold = [
        q1.then(&q1),
        q2.then(&q2),
        q3.then(&q3),
        q1.then(&q2).then(&q3),
    ]
    .iter()
    .all(|x| *x == j4);
    if !relations_hold {
        return Err(Error::TableMismatch("quaternion relations fail".into()));
    }
    Ok(dg)
}

/// Cached deck groups; construction is validated against reference data.
pub fn deck_group(m: Manifold) -> &'static DeckGroup {
    static C8: OnceLock<DeckGroup> = OnceLock::new();
    static Q: OnceLock<DeckGroup> = OnceLock::new();
    match m {
        Manifold::C2 => C8.get_or_init(|| build_c8().expect("C8 construction")),
        Manifold::C3 => Q.get_or_init(|| build_q().expect("Q construction")),
    }
}

/// A deck group with the given generators, for testing the verifier on
/// groups that are not deck groups.
pub fn from_generators(
    name: &str,
    manifold: Manifold,
    gens: &[(&str, HyperoctElement)],
) -> Result<DeckGroup> {
    let gs: Vec<HyperoctElement> = gens.iter().map(|g| g.1).collect();
    let elements = closure(&gs)?
        .into_iter()
        .map(|g| DeckElement {
            label: gens
                .iter()
                .find(|x| x.1 == g)
                .map(|x| x.0.to_string())
                .unwrap_or_else(|| g.to_string()),
            element: g,
            pair: crate::su2::lift_element(&g).ok(),
        })
        .collect();
    Ok(DeckGroup {
        name: name.to_string(),
        manifold,
        elements,
        generators: gens.iter().map(|g| g.0.to_string()).collect(),
    })
}

/// The C2 construction with `g1` replaced by the reflection `W1`.
pub fn corrupted_c8() -> DeckGroup {
    from_generators(
        "deck(C2) with g1 -> W1",
        Manifold::C2,
        &[("W1", Letter::W1.element())],
    )
    .expect("nonempty generators")
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FacePair {
    OneSix,
    TwoFour,
    ThreeFive,
}

impl FacePair {
    pub const ALL: [FacePair; 3] = [FacePair::OneSix, FacePair::TwoFour, FacePair::ThreeFive];

    pub fn label(self) -> &'static str {
        match self {
            FacePair::OneSix => "1<=6",
            FacePair::TwoFour => "2<=4",
            FacePair::ThreeFive => "3<=5",
        }
    }
}

impl FromStr for FacePair {
    type Err = Error;
    /// Accepts `1<=6`, `(1⇐6)`, `16` and similar.
    fn from_str(s: &str) -> Result<FacePair> {
        let digits: String = s.chars().filter(|c| c.is_ascii_digit()).collect();
        match digits.as_str() {
            "16" => Ok(FacePair::OneSix),
            "24" => Ok(FacePair::TwoFour),
            "35" => Ok(FacePair::ThreeFive),
            _ => Err(Error::UnknownFacePair(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GlueOperator {
    pub label: FacePair,
    pub word: Word,
    pub element: HyperoctElement,
}

/// `st(1<=6) = W4 W0 J4`; the other two are its conjugates by the
/// rotations `W3W2` and `W2W3`.
pub fn standard_glue(face_pair: FacePair) -> GlueOperator {
    let base = word("W4W0J4");
    let w = match face_pair {
        FacePair::OneSix => base,
        FacePair::TwoFour => base.conjugated(&word(ROT_23), &word(ROT_32)),
        FacePair::ThreeFive => base.conjugated(&word(ROT_32), &word(ROT_23)),
    };
    GlueOperator {
        label: face_pair,
        element: w.evaluate(),
        word: w,
    }
}

/// How the two letter orders proposed for `q1` compare.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Q1Ordering {
    pub defining_word: String,
    pub alternative_word: String,
    pub defining_matches_reference: bool,
    pub alternative_matches_reference: bool,
    pub same_element: bool,
    pub identical_pairs: bool,
    pub pairs_differ_by_global_sign: bool,
}

pub fn q1_ordering() -> Q1Ordering {
    let (d, a) = (word(Q1_WORD), word(Q1_ALT_WORD));
    let (gd, ga) = (d.evaluate(), a.evaluate());
    let (pd, pa) = (lift_even_word(&d).unwrap(), lift_even_word(&a).unwrap());
    let want = reference::q_rows()[0].action;
    Q1Ordering {
        defining_word: d.to_string(),
        alternative_word: a.to_string(),
        defining_matches_reference: gd.action_string() == want,
        alternative_matches_reference: ga.action_string() == want,
        same_element: gd == ga,
        identical_pairs: pd == pa,
        pairs_differ_by_global_sign: pd != pa && pd.same_isometry(&pa),
    }
}

/// Structural classification of a group of order 8 (or a cyclic group).
pub fn isomorphism_type(elements: &[HyperoctElement]) -> String {
    let n = elements.len();
    if elements.iter().any(|g| g.order() as usize == n) {
        return format!("cyclic of order {n}");
    }
    let abelian = elements
        .iter()
        .all(|g| elements.iter().all(|h| g.multiply(h) == h.multiply(g)));
    let involutions = elements.iter().filter(|g| g.order() == 2).count();
    match (n, abelian, involutions) {
        (8, false, 1) => "quaternion".into(),
        (8, false, _) => "dihedral of order 8".into(),
        (_, true, _) => format!("abelian non-cyclic of order {n}"),
        _ => format!("non-abelian of order {n}"),
    }
}

fn expected_type(m: Manifold) -> &'static str {
    match m {
        Manifold::C2 => "cyclic of order 8",
        Manifold::C3 => "quaternion",
    }
}

pub fn verify_deck_group(dg: &DeckGroup) -> Report {
    verify_deck_group_seeded(dg, 42)
}

pub fn verify_deck_group_seeded(dg: &DeckGroup, seed: u64) -> Report {
    let mut r = Report::new("deck", dg.name.clone());
    let els = dg.group_elements();
    r.check("order", dg.order() == 8, format!("{} elements", dg.order()));
    let closed = els
        .iter()
        .all(|g| els.iter().all(|h| els.contains(&g.multiply(h))));
    r.check("closure", closed, "");
    let reversing: Vec<String> = dg
        .elements
        .iter()
        .filter(|e| !e.element.preserves_orientation())
        .map(|e| e.label.clone())
        .collect();
    r.check("orientation", reversing.is_empty(), reversing.join(" "));
    r.check("contains-J4", els.contains(&HyperoctElement::J4), "");
    let fixed: Vec<String> = dg
        .elements
        .iter()
        .filter(|e| !e.element.is_identity() && e.element.has_fixed_point_on_sphere())
        .map(|e| e.label.clone())
        .collect();
    r.check("fixed-point-free", fixed.is_empty(), fixed.join(" "));
    let orb = orbit(&els, &Point4::CENTER);
    r.check(
        "center-orbit",
        same_point_set(&orb, &cell_centers()),
        format!("{} images of (1,0,0,0)", orb.len()),
    );
    let coxeter = closure(
        &Letter::WEYL
            .iter()
            .map(|l| l.element())
            .chain([HyperoctElement::J4])
            .collect::<Vec<_>>(),
    )
    .expect("finite");
    r.check(
        "subgroup-of-G",
        els.iter().all(|g| coxeter.binary_search(g).is_ok()),
        "",
    );

    let points = sample_sphere(seed, 50);
    let mut worst: f64 = 0.0;
    let mut unliftable = Vec::new();
    for e in &dg.elements {
        match e.pair {
            Some(p) => {
                for x in &points {
                    worst = worst.max(p.act_point(x).distance(&e.element.apply(x)));
                }
            }
            None => unliftable.push(e.label.clone()),
        }
    }
    if unliftable.is_empty() {
        r.within("pair-point-consistency", worst, 1e-12);
    } else {
        r.check(
            "pair-point-consistency",
            false,
            format!("no pair lift for {}", unliftable.join(" ")),
        );
    }

    let ty = isomorphism_type(&els);
    r.check("isomorphism-type", ty == expected_type(dg.manifold), ty);
    match dg.manifold {
        Manifold::C2 => verify_cyclic_relations(dg, &mut r),
        Manifold::C3 => verify_quaternion_relations(dg, &mut r),
    }
    r
}

fn verify_cyclic_relations(dg: &DeckGroup, r: &mut Report) {
    let Some(g1) = dg.get("g1") else {
        r.check("relations", false, "no element labelled g1");
        return;
    };
    let g = g1.element;
    r.check(
        "relations",
        g.pow(4) == HyperoctElement::J4 && g.pow(8).is_identity(),
        "g1^4 = J4, g1^8 = e",
    );
    // odd powers act on both sides, even powers by a left action up to sign
    let right_ok = dg.elements.iter().enumerate().all(|(k, e)| {
        let Some(p) = e.pair else { return false };
        let diagonal = p.right == Su2Exact::identity() || p.right == Su2Exact::identity().neg();
        diagonal == (k % 2 == 1)
    });
    r.check(
        "right-action-pattern",
        right_ok,
        "w_r = ±e exactly for even t",
    );
    let generator_pair = g1
        .pair
        .map(|p| p.left.pow(8) == Su2Exact::identity() && p.right.pow(8) == Su2Exact::identity());
    r.check(
        "pair-order",
        generator_pair == Some(true),
        "w_l^8 = w_r^8 = e",
    );
}

fn verify_quaternion_relations(dg: &DeckGroup, r: &mut Report) {
    let found: Option<Vec<&DeckElement>> = ["q1", "q2", "q3"].iter().map(|l| dg.get(l)).collect();
    let Some(q) = found else {
        r.check("relations", false, "missing q1, q2 or q3");
        return;
    };
    let (q1, q2, q3) = (q[0].element, q[1].element, q[2].element);
    let j4 = HyperoctElement::J4;
    r.check(
        "relations",
        q1.then(&q1) == j4
            && q2.then(&q2) == j4
            && q3.then(&q3) == j4
            && q1.then(&q2).then(&q3) == j4,
        "q1^2 = q2^2 = q3^2 = q1 q2 q3 = J4",
    );
    r.check(
        "non-abelian",
        q1.then(&q2) == q3 && q2.then(&q1) == j4.multiply(&q3),
        "q1 q2 = q3, q2 q1 = J4 q3",
    );
    let left_only = dg.elements.iter().all(|e| {
        e.pair.is_some_and(|p| {
            p.right == Su2Exact::identity() || p.right == Su2Exact::identity().neg()
        })
    });
    r.check("left-action", left_only, "w_r = ±e for every element");
    let ls: Option<Vec<Su2Exact>> = q.iter().map(|e| e.pair.map(|p| p.left)).collect();
    let minus = Su2Exact::identity().neg();
    let quat = ls.is_some_and(|l| {
        l.iter().all(|x| x.mul(x) == minus)
            && l[0].mul(&l[1]).mul(&l[2]) == minus
            && l[0].mul(&l[1]) == l[2]
    });
    r.check(
        "quaternion-matrices",
        quat,
        "(w_l1, w_l2, w_l3) = (-k, -j, -i)",
    );
    let o = q1_ordering();
    r.check(
        "q1-ordering",
        o.defining_matches_reference && o.alternative_matches_reference && o.same_element,
        format!(
            "{} and {} give the same action; pairs {}",
            o.defining_word,
            o.alternative_word,
            if o.identical_pairs {
                "identical"
            } else if o.pairs_differ_by_global_sign {
                "differ by a global sign"
            } else {
                "differ"
            }
        ),
    );
}
