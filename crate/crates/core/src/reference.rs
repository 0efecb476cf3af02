//! Published reference values used as regression data. Everything here is
//! transcribed, nothing is derived; the library recomputes each value and
//! compares.

use crate::cyclo::Cyclo8;
use crate::su2::Su2Exact;

/// One row of a deck element table.
#[derive(Clone, Debug)]
pub struct DeckRow {
    pub label: &'static str,
    pub action: &'static str,
    pub left: Su2Exact,
    pub right: Su2Exact,
    pub signs: &'static str,
    pub cycles: &'static str,
}

fn m(e: [[Cyclo8; 2]; 2]) -> Su2Exact {
    Su2Exact::new(e).expect("reference matrices are special unitary")
}

fn diag(x: Cyclo8, y: Cyclo8) -> Su2Exact {
    m([[x, Cyclo8::ZERO], [Cyclo8::ZERO, y]])
}

fn anti(x: Cyclo8, y: Cyclo8) -> Su2Exact {
    m([[Cyclo8::ZERO, x], [y, Cyclo8::ZERO]])
}

/// The eight powers `g1^t`, `t = 1..8`, of the C2 generator.
pub fn c8_rows() -> Vec<DeckRow> {
    let a = Cyclo8::A;
    let ab = a.conj();
    let one = Cyclo8::ONE;
    let e = Su2Exact::identity();
    let row = |label, action, left, right, signs, cycles| DeckRow {
        label,
        action,
        left,
        right,
        signs,
        cycles,
    };
    vec![
        row(
            "g1",
            "(x1,-x3,x0,x2)",
            diag(-ab, -a),
            anti(-a.pow(3), -a),
            "+-++",
            "(0132)",
        ),
        row(
            "g1^2",
            "(-x3,-x2,x1,x0)",
            diag(ab.pow(2), a.pow(2)),
            e.neg(),
            "--++",
            "(03)(12)",
        ),
        row(
            "g1^3",
            "(-x2,-x0,-x3,x1)",
            diag(-ab.pow(3), -a.pow(3)),
            anti(a.pow(3), a),
            "---+",
            "(0231)",
        ),
        row(
            "g1^4",
            "(-x0,-x1,-x2,-x3)",
            diag(-one, -one),
            e,
            "----",
            "e",
        ),
        row(
            "g1^5",
            "(-x1,x3,-x0,-x2)",
            diag(ab, a),
            anti(-a.pow(3), -a),
            "-+--",
            "(0132)",
        ),
        row(
            "g1^6",
            "(x3,x2,-x1,-x0)",
            diag(-ab.pow(2), -a.pow(2)),
            e.neg(),
            "++--",
            "(03)(12)",
        ),
        row(
            "g1^7",
            "(x2,x0,x3,-x1)",
            diag(ab.pow(3), a.pow(3)),
            anti(a.pow(3), a),
            "+++-",
            "(0231)",
        ),
        row("g1^8", "(x0,x1,x2,x3)", e, e, "++++", "e"),
    ]
}

/// The three quaternion generators of the C3 deck group.
pub fn q_rows() -> Vec<DeckRow> {
    let i = Cyclo8::I;
    let one = Cyclo8::ONE;
    let e = Su2Exact::identity();
    vec![
        DeckRow {
            label: "q1",
            action: "(x1,-x0,x3,-x2)",
            left: anti(-i, -i),
            right: e,
            signs: "+-+-",
            cycles: "(01)(23)",
        },
        DeckRow {
            label: "q2",
            action: "(x2,-x3,-x0,x1)",
            left: anti(-one, one),
            right: e,
            signs: "+--+",
            cycles: "(02)(13)",
        },
        DeckRow {
            label: "q3",
            action: "(x3,x2,-x1,-x0)",
            left: diag(-i, i),
            right: e,
            signs: "++--",
            cycles: "(03)(12)",
        },
    ]
}

/// Standard glue operators: `(label, action, signs, cycles)`.
pub const GLUE_ROWS: [(&str, &str, &str, &str); 3] = [
    ("1<=6", "(x1,-x0,-x2,-x3)", "+---", "(01)"),
    ("2<=4", "(x2,-x1,-x0,-x3)", "+---", "(02)"),
    ("3<=5", "(x3,-x1,-x2,-x0)", "+---", "(03)"),
];

/// Number of C8-periodic harmonics of degree `2j`, `j = 0..8`.
pub const MULTIPLICITY_C8: [u64; 9] = [1, 1, 7, 11, 23, 27, 45, 53, 77];

/// Number of Q-periodic harmonics of degree `2j`, `j = 0..8`.
pub const MULTIPLICITY_Q: [u64; 9] = [1, 0, 10, 7, 27, 22, 52, 45, 85];

/// Left characters `χ^j(w_l^t)` for the C2 generator, `t = 1..8`, `j = 0..8`.
pub const C8_LEFT_CHARACTERS: [[i64; 9]; 8] = [
    [1, 1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, 1, -1, 1, -1, 1, -1, 1],
    [1, 1, -1, -1, 1, 1, -1, -1, 1],
    [1, 3, 5, 7, 9, 11, 13, 15, 17],
    [1, 1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, 1, -1, 1, -1, 1, -1, 1],
    [1, 1, -1, -1, 1, 1, -1, -1, 1],
    [1, 3, 5, 7, 9, 11, 13, 15, 17],
];

/// Right characters `χ^j(w_r^t)` for the C2 generator.
pub const C8_RIGHT_CHARACTERS: [[i64; 9]; 8] = [
    [1, -1, 1, -1, 1, -1, 1, -1, 1],
    [1, 3, 5, 7, 9, 11, 13, 15, 17],
    [1, -1, 1, -1, 1, -1, 1, -1, 1],
    [1, 3, 5, 7, 9, 11, 13, 15, 17],
    [1, -1, 1, -1, 1, -1, 1, -1, 1],
    [1, 3, 5, 7, 9, 11, 13, 15, 17],
    [1, -1, 1, -1, 1, -1, 1, -1, 1],
    [1, 3, 5, 7, 9, 11, 13, 15, 17],
];

/// Census row: `(orbit representative, partition label, dim, m(C8), m(Q))`.
pub type CensusRow = (&'static str, &'static str, u64, u64, u64);

/// Tabulated dimensions and multiplicities of the identity representation
/// of C8 and Q for each induced irrep of `G`. The `----` rows repeat the
/// `++++` values, as tabulated.
pub const INDUCED_CENSUS: [CensusRow; 20] = [
    ("++++", "[4]", 1, 1, 1),
    ("++++", "[1111]", 1, 0, 1),
    ("++++", "[31]", 3, 0, 0),
    ("++++", "[211]", 3, 1, 0),
    ("++++", "[22]", 2, 1, 2),
    ("+++-", "[3]x[1]", 4, 0, 0),
    ("+++-", "[111]x[1]", 4, 0, 0),
    ("+++-", "[21]x[1]", 8, 0, 0),
    ("++--", "[2]x[2]", 6, 1, 0),
    ("++--", "[2]x[11]", 6, 2, 3),
    ("++--", "[11]x[2]", 6, 2, 3),
    ("++--", "[11]x[11]", 6, 1, 0),
    ("---+", "[3]x[1]", 4, 0, 0),
    ("---+", "[111]x[1]", 4, 0, 0),
    ("---+", "[21]x[1]", 8, 0, 0),
    ("----", "[4]", 1, 1, 1),
    ("----", "[1111]", 1, 0, 1),
    ("----", "[31]", 3, 0, 0),
    ("----", "[211]", 3, 1, 0),
    ("----", "[22]", 2, 1, 2),
];

/// Characters of the `++++` induced irreps on `g1^t`, `t = 1..8`, columns
/// `[4] [1111] [31] [211] [22]`.
pub const C8_TRIVIAL_MU_CHARACTERS: [[i64; 5]; 8] = [
    [1, -1, -1, 1, 0],
    [1, 1, -1, -1, 2],
    [1, -1, -1, 1, 0],
    [1, 1, 3, 3, 2],
    [1, -1, -1, 1, 0],
    [1, 1, -1, -1, 2],
    [1, -1, -1, 1, 0],
    [1, 1, 3, 3, 2],
];

/// Coset generators of `S(3) x S(1)` and `S(2) x S(2)` in cycle notation
/// with the index pairs whose sign product is the conjugated `D^μ`.
pub const COSETS_S3S1: [(&str, &[usize]); 4] =
    [("e", &[3]), ("(03)", &[0]), ("(13)", &[1]), ("(23)", &[2])];

pub const COSETS_S2S2: [(&str, &[usize]); 6] = [
    ("e", &[2, 3]),
    ("(12)", &[1, 3]),
    ("(321)", &[1, 2]),
    ("(120)", &[0, 3]),
    ("(1320)", &[0, 2]),
    ("(02)(13)", &[0, 1]),
];
