//! Pointwise differential geometry of an ideal: Jacobians, tangent
//! spaces, nodal-section tests, and projection from a coordinate point.

use num_traits::Zero;
use thiserror::Error;

use crate::groebner::{eliminate, Ideal};
use crate::linalg::QMatrix;
use crate::poly::{Ctx, PolyError, Polynomial, Rational};
use crate::polymat::{gram_matrix, MatrixError, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("point is the zero vector")]
    ZeroPoint,
    #[error("point has {0} coordinates, context has {1}")]
    WrongLength(usize, usize),
    #[error("point does not satisfy generator {0}")]
    PointNotOnVariety(usize),
    #[error("projection center must be a coordinate point")]
    NotCoordinatePoint,
    #[error("form of degree other than one")]
    NonLinearForm,
    #[error("inconsistent linear forms")]
    InconsistentForms,
    #[error("hyperplane does not contain the tangent space")]
    HyperplaneMissesTangentSpace,
    #[error("context mismatch")]
    ContextMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// An affine representative of a projective point; never the zero vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinatePoint {
    ctx: Ctx,
    values: Vec<Rational>,
}

impl CoordinatePoint {
    pub fn new(ctx: &Ctx, values: Vec<Rational>) -> Result<Self, GeometryError> {
        if values.len() != ctx.len() {
            return Err(GeometryError::WrongLength(values.len(), ctx.len()));
        }
        if values.iter().all(Zero::is_zero) {
            return Err(GeometryError::ZeroPoint);
        }
        Ok(CoordinatePoint {
            ctx: ctx.clone(),
            values,
        })
    }

    /// The point with coordinate `var` equal to one and all others zero.
    pub fn coordinate_axis(ctx: &Ctx, var: usize) -> Self {
        let mut values = vec![Rational::zero(); ctx.len()];
        values[var] = Rational::from_integer(1.into());
        CoordinatePoint {
            ctx: ctx.clone(),
            values,
        }
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `Some(i)` when exactly one coordinate is nonzero.
    pub fn axis(&self) -> Option<usize> {
        let mut found = None;
        for (i, v) in self.values.iter().enumerate() {
            if !v.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// A linear subspace presented by the echelonized linear forms cutting it
/// out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSubspace {
    ctx: Ctx,
    forms: Vec<Polynomial>,
}

impl LinearSubspace {
    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn cutting_forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn codimension(&self) -> usize {
        self.forms.len()
    }

    /// Dimension as a linear subspace of the ambient affine space.
    pub fn dimension(&self) -> usize {
        self.ctx.len() - self.forms.len()
    }
}

fn ensure_on_variety(ideal: &Ideal, p: &CoordinatePoint) -> Result<(), GeometryError> {
    if ideal.context() != p.context() {
        return Err(GeometryError::ContextMismatch);
    }
    for (k, g) in ideal.generators().iter().enumerate() {
        if !g.evaluate(p.values()).is_zero() {
            return Err(GeometryError::PointNotOnVariety(k));
        }
    }
    Ok(())
}

/// Matrix of all partial derivatives of all generators, evaluated at `p`;
/// one row per generator, one column per variable.
pub fn jacobian_at(ideal: &Ideal, p: &CoordinatePoint) -> Result<PolyMatrix, GeometryError> {
    ensure_on_variety(ideal, p)?;
    let ctx = ideal.context().clone();
    let rows = ideal.generators().len().max(1);
    Ok(PolyMatrix::from_fn(&ctx, rows, ctx.len(), |i, j| {
        match ideal.generators().get(i) {
            Some(g) => Polynomial::constant(&ctx, g.derivative(j).evaluate(p.values())),
            None => Polynomial::zero(&ctx),
        }
    }))
}

fn jacobian_qmatrix(ideal: &Ideal, p: &CoordinatePoint) -> Result<QMatrix, GeometryError> {
    ensure_on_variety(ideal, p)?;
    let n = p.context().len();
    let rows: Vec<Vec<Rational>> = ideal
        .generators()
        .iter()
        .map(|g| (0..n).map(|j| g.derivative(j).evaluate(p.values())).collect())
        .collect();
    if rows.is_empty() {
        return Ok(QMatrix::zero(0, n));
    }
    Ok(QMatrix::from_rows(rows))
}

/// The tangent space of the ideal at `p`: the kernel of the Jacobian,
/// presented by cutting forms in reduced echelon form (pivot on the lowest
/// variable index).
pub fn tangent_space(ideal: &Ideal, p: &CoordinatePoint) -> Result<LinearSubspace, GeometryError> {
    let mut jac = jacobian_qmatrix(ideal, p)?;
    let pivots = jac.rref();
    let ctx = ideal.context().clone();
    let forms = pivots
        .iter()
        .enumerate()
        .map(|(row, _)| {
            Polynomial::from_terms(
                &ctx,
                (0..ctx.len()).map(|j| {
                    (
                        crate::poly::Monomial::variable(ctx.len(), j),
                        jac.at(row, j).clone(),
                    )
                }),
            )
        })
        .collect();
    Ok(LinearSubspace { ctx, forms })
}

/// The echelon solution of a system of linear forms: pivot variables are
/// expressed in the remaining ones, and substitution lands in the context
/// without the pivots.
#[derive(Debug, Clone)]
pub struct LinearRestriction {
    source: Ctx,
    target: Ctx,
    pivots: Vec<usize>,
    images: Vec<Polynomial>,
}

impl LinearRestriction {
    pub fn source(&self) -> &Ctx {
        &self.source
    }

    pub fn target(&self) -> &Ctx {
        &self.target
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, GeometryError> {
        if f.context() != &self.source {
            return Err(GeometryError::ContextMismatch);
        }
        Ok(f.substitute(&self.images, &self.target)?)
    }

    pub fn apply_ideal(&self, ideal: &Ideal) -> Result<Ideal, GeometryError> {
        let gens: Result<Vec<_>, _> = ideal.generators().iter().map(|g| self.apply(g)).collect();
        Ok(Ideal::new(&self.target, gens?))
    }
}

/// Build the deterministic echelon substitution solving `forms = 0`.
/// Forms must be homogeneous of degree exactly one.
pub fn linear_restriction(
    ctx: &Ctx,
    forms: &[Polynomial],
) -> Result<LinearRestriction, GeometryError> {
    let n = ctx.len();
    for f in forms {
        if f.context() != ctx {
            return Err(GeometryError::ContextMismatch);
        }
        if f.is_zero() || f.total_degree() != Some(1) || !f.is_homogeneous() {
            return Err(GeometryError::NonLinearForm);
        }
    }
    let rows: Vec<Vec<Rational>> = forms
        .iter()
        .map(|f| {
            (0..n)
                .map(|j| f.coefficient(&crate::poly::Monomial::variable(n, j)))
                .collect()
        })
        .collect();
    if rows.is_empty() {
        let (target, map) = ctx.without(&[])?;
        let images = (0..n)
            .map(|j| Polynomial::variable(&target, map[j].expect("kept")))
            .collect();
        return Ok(LinearRestriction {
            source: ctx.clone(),
            target,
            pivots: Vec::new(),
            images,
        });
    }
    let mut m = QMatrix::from_rows(rows);
    let pivots = m.rref();
    let (target, map) = ctx.without(&pivots)?;
    let mut images = Vec::with_capacity(n);
    for j in 0..n {
        match map[j] {
            Some(nj) => images.push(Polynomial::variable(&target, nj)),
            None => {
                // pivot variable: x_j = -sum of free-variable coefficients
                let row = pivots.iter().position(|&p| p == j).expect("pivot");
                let mut img = Polynomial::zero(&target);
                for (k, mk) in map.iter().enumerate() {
                    if let Some(nk) = mk {
                        let c = m.at(row, k);
                        if !c.is_zero() {
                            img = &img - &Polynomial::variable(&target, *nk).scale(c);
                        }
                    }
                }
                images.push(img);
            }
        }
    }
    Ok(LinearRestriction {
        source: ctx.clone(),
        target,
        pivots,
        images,
    })
}

/// Substitute the echelon solution of the forms into the ideal, in the
/// reduced variable context.
pub fn restrict_to_hyperplanes(
    ideal: &Ideal,
    forms: &[Polynomial],
) -> Result<Ideal, GeometryError> {
    let lr = linear_restriction(ideal.context(), forms)?;
    lr.apply_ideal(ideal)
}

/// Projection of the variety from a coordinate point: the elimination
/// ideal of that coordinate, in the context without it.
pub fn project_from_point(ideal: &Ideal, p: &CoordinatePoint) -> Result<Ideal, GeometryError> {
    if ideal.context() != p.context() {
        return Err(GeometryError::ContextMismatch);
    }
    let var = p.axis().ok_or(GeometryError::NotCoordinatePoint)?;
    Ok(eliminate(ideal, &[var]))
}

/// The tangent-cone quadric of a nodal hyperplane section.
#[derive(Debug, Clone)]
pub struct NodalQuadric {
    /// The quadric restricted to the tangent space, expressed in the
    /// ambient context.
    pub quadric: Polynomial,
    /// Rank of its Gram matrix over the tangent variables.
    pub rank: usize,
    /// Dimension of the tangent space inside the chart at `p`.
    pub tangent_dim: usize,
}

impl NodalQuadric {
    /// The section is nodal at the point iff the quadric has full rank on
    /// the tangent space.
    pub fn is_nodal(&self) -> bool {
        self.rank == self.tangent_dim
    }
}

/// Express `h` as a combination of the generators' linear parts in the
/// chart at `p`; the same combination of quadratic parts, restricted to the
/// tangent space, is the tangent-cone quadric of the section `h = 0`.
pub fn nodal_quadric(
    ideal: &Ideal,
    p: &CoordinatePoint,
    h: &Polynomial,
) -> Result<NodalQuadric, GeometryError> {
    ensure_on_variety(ideal, p)?;
    if h.context() != ideal.context() {
        return Err(GeometryError::ContextMismatch);
    }
    if h.is_zero() || h.total_degree() != Some(1) || !h.is_homogeneous() {
        return Err(GeometryError::NonLinearForm);
    }
    let chart = p.axis().ok_or(GeometryError::NotCoordinatePoint)?;
    let ctx = ideal.context().clone();
    let n = ctx.len();

    let mut linears = Vec::new();
    let mut quadratics = Vec::new();
    for g in ideal.generators() {
        let (c0, c1, c2) = g.local_expansion(chart)?;
        debug_assert!(c0.is_zero(), "point on variety has vanishing chart constant");
        linears.push(c1);
        quadratics.push(c2);
    }

    // solve h = sum lambda_i * linear_i
    let var = |j: usize| crate::poly::Monomial::variable(n, j);
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|j| linears.iter().map(|l| l.coefficient(&var(j))).collect())
        .collect();
    let a_t = QMatrix::from_rows(cols);
    let rhs: Vec<Rational> = (0..n).map(|j| h.coefficient(&var(j))).collect();
    let lambda = a_t
        .solve(&rhs)
        .ok_or(GeometryError::HyperplaneMissesTangentSpace)?;

    let mut q_raw = Polynomial::zero(&ctx);
    for (l, q) in lambda.iter().zip(&quadratics) {
        if !l.is_zero() {
            q_raw = &q_raw + &q.scale(l);
        }
    }

    // restrict to the tangent space and read the Gram rank there
    let tangent = tangent_space(ideal, p)?;
    let lr = linear_restriction(&ctx, tangent.cutting_forms())?;
    let restricted = lr.apply(&q_raw)?;
    // express the restriction back in the ambient context
    let embed: Vec<Polynomial> = lr
        .target()
        .names()
        .iter()
        .map(|name| Polynomial::variable_named(&ctx, name).expect("subset of ambient names"))
        .collect();
    let quadric = restricted.substitute(&embed, &ctx)?;

    let tangent_vars: Vec<usize> = (0..n)
        .filter(|&j| j != chart && !lr.pivots().contains(&j))
        .collect();
    let tangent_dim = tangent_vars.len();
    let rank = if quadric.is_zero() {
        0
    } else {
        gram_matrix(&quadric, &tangent_vars)?.symmetric_rank()?
    };
    Ok(NodalQuadric {
        quadric,
        rank,
        tangent_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::krull_dimension;
    use crate::poly::{parse_poly, rat, MonomialOrder, VariableContext};
    use crate::varieties::{grassmann_ideal, spinor_ideal};

    #[test]
    fn coordinate_point_validation() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        assert_eq!(
            CoordinatePoint::new(&ctx, vec![rat(0), rat(0)]),
            Err(GeometryError::ZeroPoint)
        );
        assert_eq!(
            CoordinatePoint::new(&ctx, vec![rat(1)]),
            Err(GeometryError::WrongLength(1, 2))
        );
        let p = CoordinatePoint::coordinate_axis(&ctx, 1);
        assert_eq!(p.axis(), Some(1));
        let q = CoordinatePoint::new(&ctx, vec![rat(1), rat(2)]).unwrap();
        assert_eq!(q.axis(), None);
    }

    #[test]
    fn tangent_space_of_grassmannian_at_distinguished_point() {
        let spec = grassmann_ideal(5).unwrap();
        let t = tangent_space(&spec.ideal, spec.distinguished_point()).unwrap();
        let ctx = &spec.context;
        let expected: Vec<Polynomial> = ["y_34", "y_35", "y_45"]
            .iter()
            .map(|n| parse_poly(n, ctx).unwrap())
            .collect();
        assert_eq!(t.cutting_forms(), expected.as_slice());
        // smooth at the distinguished point: tangent dimension equals the
        // affine cone dimension
        assert_eq!(
            t.dimension(),
            krull_dimension(&spec.ideal, &MonomialOrder::GrevLex).unwrap()
        );
    }

    #[test]
    fn tangent_space_of_spinor_variety() {
        let spec = spinor_ideal();
        let t = tangent_space(&spec.ideal, spec.distinguished_point()).unwrap();
        let ctx = &spec.context;
        let expected: Vec<Polynomial> = ["x_2345", "x_1345", "x_1245", "x_1235", "x_1234"]
            .iter()
            .map(|n| parse_poly(n, ctx).unwrap())
            .collect();
        assert_eq!(t.cutting_forms(), expected.as_slice());
    }

    #[test]
    fn jacobian_of_zero_ideal_is_zero() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let p = CoordinatePoint::coordinate_axis(&ctx, 0);
        let jac = jacobian_at(&Ideal::zero(&ctx), &p).unwrap();
        for i in 0..jac.rows() {
            for j in 0..jac.cols() {
                assert!(jac.entry(i, j).is_zero());
            }
        }
    }

    #[test]
    fn jacobian_rejects_points_off_the_variety() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let ideal = Ideal::new(&ctx, [parse_poly("x^2 - y^2", &ctx).unwrap()]);
        let p = CoordinatePoint::coordinate_axis(&ctx, 0);
        assert!(matches!(
            jacobian_at(&ideal, &p),
            Err(GeometryError::PointNotOnVariety(0))
        ));
    }

    #[test]
    fn restriction_examples() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let ideal = Ideal::new(&ctx, [parse_poly("x^2 + y^2", &ctx).unwrap()]);
        // restrict to y = 0
        let restricted =
            restrict_to_hyperplanes(&ideal, &[parse_poly("y", &ctx).unwrap()]).unwrap();
        let rctx = restricted.context().clone();
        assert_eq!(rctx.names(), &["x"]);
        assert_eq!(
            restricted.generators(),
            &[parse_poly("x^2", &rctx).unwrap()]
        );
        // empty restriction keeps the ideal
        let same = restrict_to_hyperplanes(&ideal, &[]).unwrap();
        assert_eq!(same.generators().len(), 1);
        assert_eq!(same.context().names(), ctx.names());
        // inhomogeneous or higher-degree forms are rejected
        assert!(matches!(
            restrict_to_hyperplanes(&ideal, &[parse_poly("x^2", &ctx).unwrap()]),
            Err(GeometryError::NonLinearForm)
        ));
    }

    #[test]
    fn projection_drops_the_center_coordinate() {
        let ctx = VariableContext::new(["x_0", "x_1"]).unwrap();
        let ideal = Ideal::new(&ctx, [parse_poly("x_0*x_1", &ctx).unwrap()]);
        let p = CoordinatePoint::coordinate_axis(&ctx, 0);
        let projected = project_from_point(&ideal, &p).unwrap();
        assert!(projected.is_zero());
        assert_eq!(projected.context().names(), &["x_1"]);

        let q = CoordinatePoint::new(&ctx, vec![rat(1), rat(1)]).unwrap();
        assert!(matches!(
            project_from_point(&ideal, &q),
            Err(GeometryError::NotCoordinatePoint)
        ));
    }

    #[test]
    fn nodal_quadric_on_spinor_variety() {
        let spec = spinor_ideal();
        let ctx = &spec.context;
        let o = spec.distinguished_point();
        // H = x_2345 alone: three hyperbolic planes, rank 6 < 10, not nodal
        let h = parse_poly("x_2345", ctx).unwrap();
        let nq = nodal_quadric(&spec.ideal, o, &h).unwrap();
        assert_eq!(
            nq.quadric,
            parse_poly("x_23*x_45 - x_24*x_35 + x_34*x_25", ctx).unwrap()
        );
        assert_eq!(nq.rank, 6);
        assert_eq!(nq.tangent_dim, 10);
        assert!(!nq.is_nodal());
        // rank is invariant under rescaling of H
        let h5 = h.scale(&rat(5));
        assert_eq!(nodal_quadric(&spec.ideal, o, &h5).unwrap().rank, 6);
        // a hyperplane missing the tangent space is rejected
        let bad = parse_poly("x_12", ctx).unwrap();
        assert!(matches!(
            nodal_quadric(&spec.ideal, o, &bad),
            Err(GeometryError::HyperplaneMissesTangentSpace)
        ));
    }

    #[test]
    fn nodal_quadric_on_g26_matches_the_normalized_section() {
        let spec = grassmann_ideal(6).unwrap();
        let ctx = &spec.context;
        let o = spec.distinguished_point();
        let h = parse_poly("y_56 - y_34", ctx).unwrap();
        let nq = nodal_quadric(&spec.ideal, o, &h).unwrap();
        assert_eq!(
            nq.quadric,
            parse_poly("y_13*y_24 - y_23*y_14 - y_15*y_26 + y_25*y_16", ctx).unwrap()
        );
        assert_eq!(nq.rank, 8);
        assert_eq!(nq.tangent_dim, 8);
        assert!(nq.is_nodal());
    }
}
