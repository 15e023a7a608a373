//! Matrices over the polynomial ring: determinants, adjugates, Pfaffians,
//! minors, and exact rank of constant symmetric matrices.

use itertools::Itertools;
use thiserror::Error;

use crate::linalg::QMatrix;
use crate::poly::{Ctx, MonomialOrder, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("Pfaffian requires even dimension, got {0}")]
    OddDimension(usize),
    #[error("minor size {0} out of range")]
    SizeOutOfRange(usize),
    #[error("matrix entries are not constant")]
    NotConstant,
    #[error("entries do not share one variable context")]
    ContextMismatch,
    #[error("quadric mentions variable index {0} outside the chosen subspace")]
    UnexpectedVariable(usize),
}

/// A rectangular matrix of polynomials sharing one variable context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    ctx: Ctx,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_fn<F>(ctx: &Ctx, rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Polynomial,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert!(
                    e.context() == ctx,
                    "matrix entry context mismatch at ({i},{j})"
                );
                entries.push(e);
            }
        }
        PolyMatrix {
            rows,
            cols,
            ctx: ctx.clone(),
            entries,
        }
    }

    pub fn from_rows(ctx: &Ctx, rows: Vec<Vec<Polynomial>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::NotSquare);
        }
        let entries: Vec<Polynomial> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| e.context() != ctx) {
            return Err(MatrixError::ContextMismatch);
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            ctx: ctx.clone(),
            entries,
        })
    }

    /// The generic antisymmetric matrix built from an upper-triangle
    /// assignment; `upper(i, j)` is consulted only for `i < j`.
    pub fn antisymmetric_from_upper<F>(ctx: &Ctx, n: usize, mut upper: F) -> Self
    where
        F: FnMut(usize, usize) -> Polynomial,
    {
        let mut grid = vec![vec![Polynomial::zero(ctx); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let e = upper(i, j);
                grid[i][j] = e.clone();
                grid[j][i] = -&e;
            }
        }
        Self::from_rows(ctx, grid).expect("square grid")
    }

    pub fn identity(ctx: &Ctx, n: usize) -> Self {
        Self::from_fn(ctx, n, n, |i, j| {
            if i == j {
                Polynomial::one(ctx)
            } else {
                Polynomial::zero(ctx)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i + 1..self.cols).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| self.entry(i, i).is_zero())
            && (0..self.rows)
                .all(|i| (i + 1..self.cols).all(|j| *self.entry(i, j) == -self.entry(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ctx, self.cols, self.rows, |i, j| {
            self.entry(j, i).clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        Self::from_fn(&self.ctx, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ctx);
            for k in 0..self.cols {
                acc = &acc + &(self.entry(i, k) * other.entry(k, j));
            }
            acc
        })
    }

    pub fn scale(&self, f: &Polynomial) -> Self {
        Self::from_fn(&self.ctx, self.rows, self.cols, |i, j| self.entry(i, j) * f)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(&self.ctx, self.rows, self.cols, |i, j| {
            self.entry(i, j) - other.entry(i, j)
        })
    }

    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.ctx, rows.len(), cols.len(), |i, j| {
            self.entry(rows[i], cols[j]).clone()
        })
    }

    /// Exact determinant by Bareiss fraction-free elimination over the
    /// polynomial ring; every division along the way is exact.
    pub fn determinant(&self) -> Result<Polynomial, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(&self.ctx));
        }
        let mut m: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = Polynomial::one(&self.ctx);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return Ok(Polynomial::zero(&self.ctx));
                };
                m.swap(k, p);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = div_exact(&num, &prev).expect("Bareiss division is exact");
                }
                m[i][k] = Polynomial::zero(&self.ctx);
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign { -&det } else { det })
    }

    /// Adjugate matrix: `M * adj(M) = det(M) * I`.
    pub fn adjugate(&self) -> Result<PolyMatrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let all: Vec<usize> = (0..n).collect();
        let mut out = vec![vec![Polynomial::zero(&self.ctx); n]; n];
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = all.iter().copied().filter(|&r| r != j).collect();
                let cols: Vec<usize> = all.iter().copied().filter(|&c| c != i).collect();
                let minor = self.submatrix(&rows, &cols).determinant()?;
                out[i][j] = if (i + j) % 2 == 0 { minor } else { -&minor };
            }
        }
        Self::from_rows(&self.ctx, out)
    }

    /// The second compound matrix arranged so that, for 3x3 input, it
    /// coincides with the adjugate: entry `(i,j)` is the signed 2x2 minor
    /// complementary to row `j`, column `i`.
    pub fn wedge2(&self) -> Result<PolyMatrix, MatrixError> {
        if !self.is_square() || self.rows != 3 {
            return Err(MatrixError::NotSquare);
        }
        let all = [0usize, 1, 2];
        let mut out = vec![vec![Polynomial::zero(&self.ctx); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let rows: Vec<usize> = all.iter().copied().filter(|&r| r != j).collect();
                let cols: Vec<usize> = all.iter().copied().filter(|&c| c != i).collect();
                let m = self.submatrix(&rows, &cols);
                let det = &(m.entry(0, 0) * m.entry(1, 1)) - &(m.entry(0, 1) * m.entry(1, 0));
                out[i][j] = if (i + j) % 2 == 0 { det } else { -&det };
            }
        }
        Self::from_rows(&self.ctx, out)
    }

    /// True iff the wedge-square construction agrees entrywise with the
    /// adjugate of a symmetric 3x3 matrix.
    pub fn wedge2_equals_adjugate_check(&self) -> Result<bool, MatrixError> {
        if !self.is_symmetric() || self.rows != 3 {
            return Err(MatrixError::NotSymmetric);
        }
        Ok(self.wedge2()? == self.adjugate()?)
    }

    /// Pfaffian of an antisymmetric matrix of even dimension, by recursive
    /// expansion along the first row:
    /// `pf(M) = sum_{j>0} (-1)^j m_{0j} pf(M without rows/cols 0, j)`.
    pub fn pfaffian(&self) -> Result<Polynomial, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        if !self.is_antisymmetric() {
            return Err(MatrixError::NotAntisymmetric);
        }
        if self.rows % 2 != 0 {
            return Err(MatrixError::OddDimension(self.rows));
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.pfaffian_on(&idx))
    }

    fn pfaffian_on(&self, idx: &[usize]) -> Polynomial {
        if idx.is_empty() {
            return Polynomial::one(&self.ctx);
        }
        let mut acc = Polynomial::zero(&self.ctx);
        let first = idx[0];
        for (pos, &j) in idx.iter().enumerate().skip(1) {
            let e = self.entry(first, j);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx
                .iter()
                .copied()
                .filter(|&r| r != first && r != j)
                .collect();
            let sub = self.pfaffian_on(&rest);
            let term = e * &sub;
            acc = if pos % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Pfaffians of all principal `k x k` submatrices, indexed by
    /// `k`-subsets of rows in lexicographic order.
    pub fn sub_pfaffians(&self, k: usize) -> Result<Vec<Polynomial>, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        if !self.is_antisymmetric() {
            return Err(MatrixError::NotAntisymmetric);
        }
        if k % 2 != 0 {
            return Err(MatrixError::OddDimension(k));
        }
        if k > self.rows {
            return Err(MatrixError::SizeOutOfRange(k));
        }
        Ok((0..self.rows)
            .combinations(k)
            .map(|subset| self.pfaffian_on(&subset))
            .collect())
    }

    /// All `k x k` minors in row-subset-major lexicographic order.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial>, MatrixError> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(MatrixError::SizeOutOfRange(k));
        }
        let mut out = Vec::new();
        for rows in (0..self.rows).combinations(k) {
            for cols in (0..self.cols).combinations(k) {
                out.push(self.submatrix(&rows, &cols).determinant()?);
            }
        }
        Ok(out)
    }

    /// Exact rank of a constant symmetric matrix, computed by fraction-free
    /// elimination.
    pub fn symmetric_rank(&self) -> Result<usize, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        if !self.is_symmetric() {
            return Err(MatrixError::NotSymmetric);
        }
        let mut q = QMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.entry(i, j);
                if !e.is_constant() {
                    return Err(MatrixError::NotConstant);
                }
                *q.at_mut(i, j) = e.constant_term();
            }
        }
        Ok(q.rank_bareiss())
    }
}

/// Exact polynomial division: `Some(q)` with `f = q * d` when the division
/// leaves no remainder, `None` otherwise.
pub fn div_exact(f: &Polynomial, d: &Polynomial) -> Option<Polynomial> {
    assert!(!d.is_zero(), "division by the zero polynomial");
    let ctx = f.context().clone();
    let order = MonomialOrder::GrevLex;
    let (dm, dc) = {
        let (m, c) = d.leading_term(&order)?;
        (m.clone(), c.clone())
    };
    let mut rem = f.clone();
    let mut quot = Polynomial::zero(&ctx);
    while !rem.is_zero() {
        let (m, c) = {
            let (m, c) = rem.leading_term(&order).expect("nonzero");
            (m.clone(), c.clone())
        };
        let qm = m.try_div(&dm)?;
        let qc = &c / &dc;
        let t = Polynomial::from_terms(&ctx, [(qm, qc)]);
        quot = &quot + &t;
        rem = &rem - &(&t * d);
    }
    Some(quot)
}

/// Gram matrix of a quadratic form over the given subset of variables:
/// `q(x) = x^T G x` with `G` symmetric.
pub fn gram_matrix(q: &Polynomial, vars: &[usize]) -> Result<PolyMatrix, MatrixError> {
    let ctx = q.context().clone();
    let n = vars.len();
    let half = Rational::new(1.into(), 2.into());
    let mut grid = vec![vec![Polynomial::zero(&ctx); n]; n];
    for (m, c) in q.terms() {
        if m.degree() != 2 {
            continue;
        }
        let support: Vec<usize> = (0..m.len()).filter(|&i| m.exponent(i) > 0).collect();
        match support.as_slice() {
            [i] => {
                let Some(a) = vars.iter().position(|v| v == i) else {
                    return Err(MatrixError::UnexpectedVariable(*i));
                };
                grid[a][a] = Polynomial::constant(&ctx, c.clone());
            }
            [i, j] => {
                let (Some(a), Some(b)) = (
                    vars.iter().position(|v| v == i),
                    vars.iter().position(|v| v == j),
                ) else {
                    return Err(MatrixError::UnexpectedVariable(*i));
                };
                let v = Polynomial::constant(&ctx, c * &half);
                grid[a][b] = v.clone();
                grid[b][a] = v;
            }
            _ => unreachable!("degree-2 monomial has one or two support variables"),
        }
    }
    PolyMatrix::from_rows(&ctx, grid)
}

/// Matrix with every entry a distinct variable of a fresh context; useful
/// for generic computations in tests and constructions.
pub fn generic_matrix(prefix: &str, n: usize) -> (Ctx, PolyMatrix) {
    let names: Vec<String> = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("{prefix}_{}_{}", i + 1, j + 1)))
        .collect();
    let ctx = crate::poly::VariableContext::new(names).expect("valid generated names");
    let m = PolyMatrix::from_fn(&ctx, n, n, |i, j| {
        Polynomial::variable(&ctx, i * n + j)
    });
    (ctx, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat, VariableContext};

    fn sym3() -> (Ctx, PolyMatrix) {
        let ctx = VariableContext::new(["s_11", "s_12", "s_13", "s_22", "s_23", "s_33"]).unwrap();
        let names = [["s_11", "s_12", "s_13"], ["s_12", "s_22", "s_23"], ["s_13", "s_23", "s_33"]];
        let m = PolyMatrix::from_fn(&ctx, 3, 3, |i, j| {
            Polynomial::variable_named(&ctx, names[i][j]).unwrap()
        });
        (ctx, m)
    }

    #[test]
    fn determinant_of_identity_and_generic_symmetric() {
        let ctx = VariableContext::new(["x"]).unwrap();
        let id = PolyMatrix::identity(&ctx, 3);
        assert_eq!(id.determinant().unwrap(), Polynomial::one(&ctx));

        let (ctx, m) = sym3();
        let det = m.determinant().unwrap();
        // six Leibniz summands; the two mixed products coincide for a
        // symmetric matrix, leaving five stored terms
        assert_eq!(
            det,
            parse_poly(
                "s_11*s_22*s_33 - s_11*s_23^2 - s_12^2*s_33 + 2*s_12*s_13*s_23 - s_13^2*s_22",
                &ctx
            )
            .unwrap()
        );
        assert_eq!(det.total_degree(), Some(3));
        let lead = parse_poly("s_11*s_22*s_33", &ctx).unwrap();
        let (mono, _) = lead.terms().next().unwrap();
        assert_eq!(det.coefficient(mono), rat(1));
    }

    #[test]
    fn adjugate_identity_and_symmetry() {
        let ctx = VariableContext::new(["x"]).unwrap();
        let id = PolyMatrix::identity(&ctx, 3);
        assert_eq!(id.adjugate().unwrap(), id);

        let (_, m) = sym3();
        let adj = m.adjugate().unwrap();
        assert!(adj.is_symmetric());
        // M * adj(M) = det(M) * I
        let det = m.determinant().unwrap();
        let lhs = m.mul(&adj);
        let rhs = PolyMatrix::identity(m.context(), 3).scale(&det);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjugate_of_diagonal() {
        let ctx = VariableContext::new(["a", "b", "c"]).unwrap();
        let m = PolyMatrix::from_fn(&ctx, 3, 3, |i, j| {
            if i == j {
                Polynomial::variable(&ctx, i)
            } else {
                Polynomial::zero(&ctx)
            }
        });
        let adj = m.adjugate().unwrap();
        assert_eq!(*adj.entry(0, 0), parse_poly("b*c", &ctx).unwrap());
        assert_eq!(*adj.entry(1, 1), parse_poly("a*c", &ctx).unwrap());
        assert_eq!(*adj.entry(2, 2), parse_poly("a*b", &ctx).unwrap());
        assert!(m.wedge2_equals_adjugate_check().unwrap());
    }

    #[test]
    fn pfaffian_small_cases() {
        let ctx = VariableContext::new(["m"]).unwrap();
        let m2 = PolyMatrix::antisymmetric_from_upper(&ctx, 2, |_, _| {
            Polynomial::variable(&ctx, 0)
        });
        assert_eq!(m2.pfaffian().unwrap(), Polynomial::variable(&ctx, 0));

        // generic 4x4: m12*m34 - m13*m24 + m14*m23
        let names: Vec<String> = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| format!("m{}{}", i + 1, j + 1)))
            .collect();
        let ctx = VariableContext::new(names).unwrap();
        let m4 = PolyMatrix::antisymmetric_from_upper(&ctx, 4, |i, j| {
            Polynomial::variable_named(&ctx, &format!("m{}{}", i + 1, j + 1)).unwrap()
        });
        let pf = m4.pfaffian().unwrap();
        assert_eq!(
            pf,
            parse_poly("m12*m34 - m13*m24 + m14*m23", &ctx).unwrap()
        );
    }

    #[test]
    fn pfaffian_rejects_odd_and_non_antisymmetric() {
        let ctx = VariableContext::new(["x"]).unwrap();
        let odd = PolyMatrix::antisymmetric_from_upper(&ctx, 3, |_, _| {
            Polynomial::variable(&ctx, 0)
        });
        assert_eq!(odd.pfaffian(), Err(MatrixError::OddDimension(3)));
        let id = PolyMatrix::identity(&ctx, 2);
        assert_eq!(id.pfaffian(), Err(MatrixError::NotAntisymmetric));
    }

    #[test]
    fn sub_pfaffian_counts() {
        let names: Vec<String> = (0..6)
            .flat_map(|i| (i + 1..6).map(move |j| format!("y_{}{}", i + 1, j + 1)))
            .collect();
        let ctx = VariableContext::new(names).unwrap();
        let m = PolyMatrix::antisymmetric_from_upper(&ctx, 6, |i, j| {
            Polynomial::variable_named(&ctx, &format!("y_{}{}", i + 1, j + 1)).unwrap()
        });
        assert_eq!(m.sub_pfaffians(4).unwrap().len(), 15);
    }

    #[test]
    fn minors_examples() {
        let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
        let hankel = PolyMatrix::from_rows(
            &ctx,
            vec![
                vec![
                    Polynomial::variable(&ctx, 0),
                    Polynomial::variable(&ctx, 1),
                ],
                vec![
                    Polynomial::variable(&ctx, 1),
                    Polynomial::variable(&ctx, 2),
                ],
            ],
        )
        .unwrap();
        assert_eq!(
            hankel.minors(2).unwrap(),
            vec![parse_poly("x*z - y^2", &ctx).unwrap()]
        );
        assert_eq!(hankel.minors(1).unwrap().len(), 4);

        let generic23 = PolyMatrix::from_fn(&ctx, 2, 3, |i, j| {
            if i == 0 {
                Polynomial::variable(&ctx, j)
            } else {
                Polynomial::variable(&ctx, (j + 1) % 3)
            }
        });
        assert_eq!(generic23.minors(2).unwrap().len(), 3);
        assert_eq!(generic23.minors(4), Err(MatrixError::SizeOutOfRange(4)));
    }

    #[test]
    fn symmetric_rank_of_identity() {
        let ctx = VariableContext::new(["x"]).unwrap();
        let id = PolyMatrix::identity(&ctx, 10);
        assert_eq!(id.symmetric_rank().unwrap(), 10);
        let var = PolyMatrix::from_fn(&ctx, 1, 1, |_, _| Polynomial::variable(&ctx, 0));
        assert_eq!(var.symmetric_rank(), Err(MatrixError::NotConstant));
    }

    #[test]
    fn pfaffian_squared_is_determinant() {
        // fixed antisymmetric 6x6 with linear-form entries
        let ctx = VariableContext::new(["u", "v", "w"]).unwrap();
        let m = PolyMatrix::antisymmetric_from_upper(&ctx, 6, |i, j| {
            let a = Polynomial::variable(&ctx, (i + j) % 3);
            let b = Polynomial::variable(&ctx, (i * j) % 3);
            &a + &b
        });
        let pf = m.pfaffian().unwrap();
        let det = m.determinant().unwrap();
        assert_eq!(&pf * &pf, det);
    }

    #[test]
    fn exact_division() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let f = parse_poly("x^2 - y^2", &ctx).unwrap();
        let d = parse_poly("x - y", &ctx).unwrap();
        assert_eq!(div_exact(&f, &d), Some(parse_poly("x + y", &ctx).unwrap()));
        let g = parse_poly("x^2 + y", &ctx).unwrap();
        assert_eq!(div_exact(&g, &d), None);
    }

    #[test]
    fn gram_matrix_of_hyperbolic_form() {
        let ctx = VariableContext::new(["a", "b", "c"]).unwrap();
        let q = parse_poly("a*b + c^2", &ctx).unwrap();
        let g = gram_matrix(&q, &[0, 1, 2]).unwrap();
        assert_eq!(g.symmetric_rank().unwrap(), 3);
    }
}
