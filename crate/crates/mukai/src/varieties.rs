//! Constructors for the defining ideals of the ambient varieties and
//! rational-point parameterizations used for membership fuzzing.
//!
//! Variable orders follow the coordinate lists fixed once and for all:
//! Pluecker coordinates row-major, the 16 spinor coordinates
//! `(x_0, x_12, ..., x_45, x_2345, x_1345, x_1245, x_1235, x_1234)`,
//! `(u, x-block, y-block, z)` for LG(3,6) and the letters `a..n` for the
//! adjoint G2 variety. Reduced Groebner bases, certificates and dumps are
//! reproducible because these orders never change.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::geometry::CoordinatePoint;
use crate::groebner::Ideal;
use crate::poly::{Ctx, Polynomial, Rational, VariableContext};
use crate::polymat::PolyMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("Grassmannian G(2,n) needs n >= 4, got {0}")]
    TooSmall(usize),
    #[error("expected a {0}x{1} matrix")]
    BadShape(usize, usize),
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("matrix is not symmetric")]
    NotSymmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarietyName {
    /// G(2,n) in its Pluecker embedding.
    Grassmannian(usize),
    /// The ten-dimensional spinor variety, orthogonal Grassmannian of
    /// 4-planes on an eight-dimensional quadric.
    Spinor10,
    /// The Lagrangian Grassmannian LG(3,6).
    Lagrangian36,
    /// The five-dimensional adjoint G2 variety.
    G2Adjoint,
}

impl VarietyName {
    pub fn label(&self) -> String {
        match self {
            VarietyName::Grassmannian(n) => format!("g2{n}"),
            VarietyName::Spinor10 => "spinor".into(),
            VarietyName::Lagrangian36 => "lg36".into(),
            VarietyName::G2Adjoint => "g2".into(),
        }
    }
}

/// A variety with its coordinate context, defining ideal and the
/// distinguished coordinate points used as projection centers.
#[derive(Debug, Clone)]
pub struct VarietySpec {
    pub name: VarietyName,
    pub context: Ctx,
    pub ideal: Ideal,
    pub distinguished_points: Vec<CoordinatePoint>,
}

impl VarietySpec {
    pub fn distinguished_point(&self) -> &CoordinatePoint {
        &self.distinguished_points[0]
    }
}

/// Lookup by the identifiers the command line uses.
pub fn by_cli_name(name: &str) -> Option<VarietySpec> {
    match name {
        "g25" => Some(grassmann_ideal(5).expect("5 >= 4")),
        "g26" => Some(grassmann_ideal(6).expect("6 >= 4")),
        "g27" => Some(grassmann_ideal(7).expect("7 >= 4")),
        "spinor" => Some(spinor_ideal()),
        "lg36" => Some(lg36_ideal()),
        "g2" => Some(g2_ideal()),
        _ => None,
    }
}

pub const CLI_VARIETY_NAMES: [&str; 6] = ["g25", "g26", "g27", "spinor", "lg36", "g2"];

fn axis_point(ctx: &Ctx, var: usize) -> CoordinatePoint {
    CoordinatePoint::coordinate_axis(ctx, var)
}

/// Names `y_12 ... y_(n-1)n` in row-major order.
fn plucker_names(n: usize) -> Vec<String> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| format!("y_{i}{j}")))
        .collect()
}

/// The generic antisymmetric n x n coordinate matrix over the Pluecker
/// context.
pub fn plucker_matrix(ctx: &Ctx, n: usize) -> PolyMatrix {
    PolyMatrix::antisymmetric_from_upper(ctx, n, |i, j| {
        Polynomial::variable_named(ctx, &format!("y_{}{}", i + 1, j + 1))
            .expect("context carries row-major Pluecker names")
    })
}

/// G(2,n) cut out by the 4x4 Pfaffians of the generic antisymmetric
/// matrix; the distinguished point is `y_12 = 1`.
pub fn grassmann_ideal(n: usize) -> Result<VarietySpec, VarietyError> {
    if n < 4 {
        return Err(VarietyError::TooSmall(n));
    }
    let ctx = VariableContext::new(plucker_names(n)).expect("valid names");
    let matrix = plucker_matrix(&ctx, n);
    let gens = matrix.sub_pfaffians(4).expect("antisymmetric by construction");
    let ideal = Ideal::new(&ctx, gens);
    Ok(VarietySpec {
        name: VarietyName::Grassmannian(n),
        context: ctx.clone(),
        ideal,
        distinguished_points: vec![axis_point(&ctx, 0)],
    })
}

/// Coordinate names of the 16-dimensional spinor representation.
fn spinor_names() -> Vec<&'static str> {
    vec![
        "x_0", "x_12", "x_13", "x_14", "x_15", "x_23", "x_24", "x_25", "x_34", "x_35", "x_45",
        "x_2345", "x_1345", "x_1245", "x_1235", "x_1234",
    ]
}

/// The four-subsets indexing the even coordinates, in context order.
pub const SPINOR_SUBSETS: [[usize; 4]; 5] = [
    [2, 3, 4, 5],
    [1, 3, 4, 5],
    [1, 2, 4, 5],
    [1, 2, 3, 5],
    [1, 2, 3, 4],
];

/// The antisymmetric 5x5 matrix of the odd spinor coordinates `x_ij`.
pub fn spinor_coordinate_matrix(ctx: &Ctx) -> PolyMatrix {
    PolyMatrix::antisymmetric_from_upper(ctx, 5, |i, j| {
        Polynomial::variable_named(ctx, &format!("x_{}{}", i + 1, j + 1))
            .expect("context carries x_ij names")
    })
}

/// The ten quadrics cutting out the spinor variety in its 16 coordinates.
///
/// The first five express each even coordinate `x_ijkl` against the
/// corresponding 4x4 Pfaffian of the `x_ij` matrix, homogenized by `x_0`,
/// with alternating Pfaffian signs; the last five are the matrix-times-
/// vector syzygies between those Pfaffians. The sign convention is pinned
/// by three independent checks: the syzygy rows annihilate the Pfaffian
/// vector, the chart parameterization `spinor_point` satisfies all ten
/// equations, and the restriction to `x_0 - x_2345 = x_23 = x_45 = 0`
/// reproduces the G(2,6) projection equations under the coordinate
/// identification used by the genus-8 verification.
pub fn spinor_ideal() -> VarietySpec {
    let ctx = VariableContext::new(spinor_names()).expect("valid names");
    let b = spinor_coordinate_matrix(&ctx);
    let even: Vec<Polynomial> = (11..16).map(|i| Polynomial::variable(&ctx, i)).collect();
    let x0 = Polynomial::variable(&ctx, 0);

    let mut gens = Vec::with_capacity(10);
    for (k, subset) in SPINOR_SUBSETS.iter().enumerate() {
        let rows: Vec<usize> = subset.iter().map(|&i| i - 1).collect();
        let sub = PolyMatrix::from_fn(&ctx, 4, 4, |r, c| b.entry(rows[r], rows[c]).clone());
        let pf = sub.pfaffian().expect("principal submatrix stays antisymmetric");
        let signed = if k % 2 == 0 { pf } else { -&pf };
        gens.push(&(&x0 * &even[k]) + &signed);
    }
    for i in 0..5 {
        let mut row = Polynomial::zero(&ctx);
        for (j, ev) in even.iter().enumerate() {
            row = &row + &(b.entry(i, j) * ev);
        }
        gens.push(row);
    }
    let ideal = Ideal::new(&ctx, gens);
    VarietySpec {
        name: VarietyName::Spinor10,
        context: ctx.clone(),
        ideal,
        distinguished_points: vec![axis_point(&ctx, 0)],
    }
}

/// Coordinate names for LG(3,6): `(u, x-block, y-block, z)`,
/// both blocks row-major over `1 <= i <= j <= 3`.
fn lg36_names() -> Vec<&'static str> {
    vec![
        "u", "x_1_1", "x_1_2", "x_1_3", "x_2_2", "x_2_3", "x_3_3", "y_1_1", "y_1_2", "y_1_3",
        "y_2_2", "y_2_3", "y_3_3", "z",
    ]
}

fn symmetric_from_names(ctx: &Ctx, prefix: &str) -> PolyMatrix {
    PolyMatrix::from_fn(ctx, 3, 3, |i, j| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        Polynomial::variable_named(ctx, &format!("{prefix}_{}_{}", a + 1, b + 1))
            .expect("context carries symmetric block names")
    })
}

/// LG(3,6) as the relations between a symmetric 3x3 matrix, its adjugate
/// and its determinant, homogenized by `u`: entries of `u*Y - adj(X)`,
/// `z*X - adj(Y)` and `X*Y - u*z*I`, 21 generators.
pub fn lg36_ideal() -> VarietySpec {
    let ctx = VariableContext::new(lg36_names()).expect("valid names");
    let x = symmetric_from_names(&ctx, "x");
    let y = symmetric_from_names(&ctx, "y");
    let u = Polynomial::variable(&ctx, 0);
    let z = Polynomial::variable(&ctx, 13);

    let mut gens = Vec::with_capacity(21);
    let adj_x = x.adjugate().expect("square");
    let adj_y = y.adjugate().expect("square");
    for (i, j) in upper_triangle() {
        gens.push(&(y.entry(i, j) * &u) - adj_x.entry(i, j));
    }
    for (i, j) in upper_triangle() {
        gens.push(&(x.entry(i, j) * &z) - adj_y.entry(i, j));
    }
    let xy = x.mul(&y);
    let uz = &u * &z;
    for i in 0..3 {
        for j in 0..3 {
            let mut e = xy.entry(i, j).clone();
            if i == j {
                e = &e - &uz;
            }
            gens.push(e);
        }
    }
    let ideal = Ideal::new(&ctx, gens);
    VarietySpec {
        name: VarietyName::Lagrangian36,
        context: ctx.clone(),
        ideal,
        distinguished_points: vec![axis_point(&ctx, 0)],
    }
}

fn upper_triangle() -> impl Iterator<Item = (usize, usize)> {
    (0..3).flat_map(|i| (i..3).map(move |j| (i, j)))
}

/// The 7x7 antisymmetric matrix of the adjoint G2 variety in the
/// coordinates `a..n`.
pub fn g2_matrix(ctx: &Ctx) -> PolyMatrix {
    let v = |name: &str| Polynomial::variable_named(ctx, name).expect("letter coordinates");
    let gk = &v("g") + &v("k");
    let minus = |p: &Polynomial| -p;
    let rows: Vec<Vec<Polynomial>> = {
        let zero = Polynomial::zero(ctx);
        let entries: [[Polynomial; 7]; 7] = [
            [
                zero.clone(),
                minus(&v("f")),
                v("e"),
                v("g"),
                v("h"),
                v("i"),
                v("a"),
            ],
            [
                v("f"),
                zero.clone(),
                minus(&v("d")),
                v("j"),
                v("k"),
                v("l"),
                v("b"),
            ],
            [
                minus(&v("e")),
                v("d"),
                zero.clone(),
                v("m"),
                v("n"),
                minus(&gk),
                v("c"),
            ],
            [
                minus(&v("g")),
                minus(&v("j")),
                minus(&v("m")),
                zero.clone(),
                v("c"),
                minus(&v("b")),
                v("d"),
            ],
            [
                minus(&v("h")),
                minus(&v("k")),
                minus(&v("n")),
                minus(&v("c")),
                zero.clone(),
                v("a"),
                v("e"),
            ],
            [
                minus(&v("i")),
                minus(&v("l")),
                gk.clone(),
                v("b"),
                minus(&v("a")),
                zero.clone(),
                v("f"),
            ],
            [
                minus(&v("a")),
                minus(&v("b")),
                minus(&v("c")),
                minus(&v("d")),
                minus(&v("e")),
                minus(&v("f")),
                zero,
            ],
        ];
        entries.into_iter().map(|r| r.into_iter().collect()).collect()
    };
    PolyMatrix::from_rows(ctx, rows).expect("7x7 grid")
}

/// The adjoint G2 variety: 4x4 Pfaffians of its antisymmetric matrix,
/// 35 generators in the 14 coordinates `a..n`. Distinguished points
/// `h = 1` (general-orbit pipeline) and `i = 1` (special-orbit pipeline).
pub fn g2_ideal() -> VarietySpec {
    let names: Vec<String> = ('a'..='n').map(|c| c.to_string()).collect();
    let ctx = VariableContext::new(names).expect("valid names");
    let matrix = g2_matrix(&ctx);
    debug_assert!(matrix.is_antisymmetric());
    let gens = matrix.sub_pfaffians(4).expect("antisymmetric");
    let ideal = Ideal::new(&ctx, gens);
    let h = ctx.position("h").expect("h present");
    let i = ctx.position("i").expect("i present");
    VarietySpec {
        name: VarietyName::G2Adjoint,
        context: ctx.clone(),
        ideal,
        distinguished_points: vec![axis_point(&ctx, h), axis_point(&ctx, i)],
    }
}

/// Pfaffian of the principal submatrix of an antisymmetric rational
/// matrix, expanded along its first remaining row.
fn rational_pfaffian(m: &[Vec<Rational>], idx: &[usize]) -> Rational {
    if idx.is_empty() {
        return Rational::one();
    }
    let first = idx[0];
    let mut acc = Rational::zero();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        if m[first][j].is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx
            .iter()
            .copied()
            .filter(|&r| r != first && r != j)
            .collect();
        let term = &m[first][j] * &rational_pfaffian(m, &rest);
        if pos % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn check_shape(m: &[Vec<Rational>], rows: usize, cols: usize) -> Result<(), VarietyError> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(VarietyError::BadShape(rows, cols));
    }
    Ok(())
}

/// Point of G(2,n) from a 2 x n matrix: `y_ij` is the 2x2 minor on
/// columns `(i, j)`. Rank-deficient input yields the zero vector.
pub fn plucker_point(a: &[Vec<Rational>], n: usize) -> Result<Vec<Rational>, VarietyError> {
    check_shape(a, 2, n)?;
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(&(&a[0][i] * &a[1][j]) - &(&a[0][j] * &a[1][i]));
        }
    }
    Ok(out)
}

/// Point of the spinor variety from an antisymmetric 5x5 matrix `B`:
/// `x_0 = 1`, `x_ij = B_ij`, and each even coordinate is the signed 4x4
/// Pfaffian of `B` complementary to one row, with the alternating signs
/// matching the ideal's convention.
pub fn spinor_point(b: &[Vec<Rational>]) -> Result<Vec<Rational>, VarietyError> {
    check_shape(b, 5, 5)?;
    for i in 0..5 {
        for j in 0..5 {
            if b[i][j] != -&b[j][i] {
                return Err(VarietyError::NotAntisymmetric);
            }
        }
    }
    let mut out = vec![Rational::one()];
    for i in 0..5 {
        for j in i + 1..5 {
            out.push(b[i][j].clone());
        }
    }
    for (k, subset) in SPINOR_SUBSETS.iter().enumerate() {
        let rows: Vec<usize> = subset.iter().map(|&i| i - 1).collect();
        let pf = rational_pfaffian(b, &rows);
        out.push(if k % 2 == 0 { -pf } else { pf });
    }
    Ok(out)
}

/// Point of LG(3,6) from a symmetric 3x3 matrix `X`: the chart `u = 1`
/// with `Y = adj(X)` and `z = det(X)`.
pub fn lg36_point(x: &[Vec<Rational>]) -> Result<Vec<Rational>, VarietyError> {
    check_shape(x, 3, 3)?;
    for i in 0..3 {
        for j in 0..3 {
            if x[i][j] != x[j][i] {
                return Err(VarietyError::NotSymmetric);
            }
        }
    }
    let minor = |r: [usize; 2], c: [usize; 2]| -> Rational {
        &(&x[r[0]][c[0]] * &x[r[1]][c[1]]) - &(&x[r[0]][c[1]] * &x[r[1]][c[0]])
    };
    let cof = |i: usize, j: usize| -> Rational {
        let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let c: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        let m = minor([r[0], r[1]], [c[0], c[1]]);
        if (i + j) % 2 == 0 {
            m
        } else {
            -m
        }
    };
    // adj(X) = cofactor transpose; X symmetric makes adj symmetric
    let det = &(&x[0][0] * &cof(0, 0)) + &(&(&x[0][1] * &cof(0, 1)) + &(&x[0][2] * &cof(0, 2)));
    let mut out = vec![Rational::one()];
    for (i, j) in upper_triangle() {
        out.push(x[i][j].clone());
    }
    for (i, j) in upper_triangle() {
        out.push(cof(j, i));
    }
    out.push(det);
    Ok(out)
}
