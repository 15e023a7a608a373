//! Groebner basis engine: multivariate division, Buchberger with
//! pair-pruning, reduced bases, ideal membership and equality, elimination,
//! saturation and Krull dimension.

mod engine;

pub use engine::{BuchbergerOptions, EngineStats};

use thiserror::Error;

use crate::poly::{Ctx, MonomialOrder, Polynomial};
use crate::polymat::div_exact;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("variable context mismatch")]
    ContextMismatch,
    #[error("saturation by the zero polynomial")]
    ZeroSaturation,
    #[error("the unit ideal has no Krull dimension")]
    UnitIdeal,
}

/// A finitely generated ideal: nonzero generators, structurally
/// deduplicated, in a fixed variable context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ctx: Ctx,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new<I>(ctx: &Ctx, gens: I) -> Self
    where
        I: IntoIterator<Item = Polynomial>,
    {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in gens {
            assert!(
                g.context() == ctx,
                "ideal generator in a different context"
            );
            if g.is_zero() || out.contains(&g) {
                continue;
            }
            out.push(g);
        }
        Ideal {
            ctx: ctx.clone(),
            gens: out,
        }
    }

    pub fn zero(ctx: &Ctx) -> Self {
        Ideal {
            ctx: ctx.clone(),
            gens: Vec::new(),
        }
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// New ideal with extra generators adjoined.
    pub fn adjoin<I>(&self, extra: I) -> Self
    where
        I: IntoIterator<Item = Polynomial>,
    {
        Ideal::new(&self.ctx, self.gens.iter().cloned().chain(extra))
    }
}

/// A reduced Groebner basis: monic elements, no monomial of any element
/// divisible by the leading monomial of another, sorted ascending by
/// leading monomial. Unique for a given ideal and order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ctx: Ctx,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis generates the unit ideal.
    pub fn contains_one(&self) -> bool {
        self.elements.iter().any(Polynomial::is_constant) && !self.elements.is_empty()
    }
}

/// Reduced Groebner basis with default options.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> GroebnerBasis {
    buchberger_with(ideal, order, &BuchbergerOptions::default()).0
}

/// Reduced Groebner basis with explicit options and engine statistics.
pub fn buchberger_with(
    ideal: &Ideal,
    order: &MonomialOrder,
    opts: &BuchbergerOptions,
) -> (GroebnerBasis, EngineStats) {
    let (elements, stats) = engine::buchberger_engine(&ideal.gens, &ideal.ctx, order, opts);
    (
        GroebnerBasis {
            ctx: ideal.ctx.clone(),
            order: order.clone(),
            elements,
        },
        stats,
    )
}

/// Remainder of multivariate division of `f` by the basis: no remainder
/// monomial is divisible by any leading monomial of the basis, and
/// `f - normal_form(f, G)` lies in the ideal.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    assert!(
        f.context() == &basis.ctx,
        "normal form requires a shared context"
    );
    let order = &basis.order;
    let reducers: Vec<engine::OrdPoly> = basis
        .elements
        .iter()
        .map(|g| engine::OrdPoly::from_polynomial(g, order))
        .collect();
    let work = engine::OrdPoly::from_polynomial(f, order);
    let (r, _) = engine::reduce_full(work, &reducers, None, order);
    r.to_polynomial(&basis.ctx)
}

/// Ideal membership via normal form.
pub fn member(f: &Polynomial, ideal: &Ideal, order: &MonomialOrder) -> Result<bool, GroebnerError> {
    if f.context() != &ideal.ctx {
        return Err(GroebnerError::ContextMismatch);
    }
    let basis = buchberger(ideal, order);
    Ok(normal_form(f, &basis).is_zero())
}

/// Ideal equality through uniqueness of the reduced basis.
pub fn ideal_equal(a: &Ideal, b: &Ideal, order: &MonomialOrder) -> Result<bool, GroebnerError> {
    if a.ctx != b.ctx {
        return Err(GroebnerError::ContextMismatch);
    }
    Ok(buchberger(a, order).elements == buchberger(b, order).elements)
}

/// Generators of the elimination ideal `I ∩ Q[remaining variables]`,
/// re-expressed in the context without the dropped variables.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Ideal {
    let (reduced_ctx, map) = ideal
        .ctx
        .without(drop)
        .expect("dropped variable indices in range");
    let order = MonomialOrder::elimination(drop);
    let basis = buchberger(ideal, &order);
    let mut mask = 0u64;
    for &d in drop {
        mask |= 1 << d;
    }
    let kept = basis
        .elements
        .iter()
        .filter(|g| g.support_mask() & mask == 0)
        .map(|g| {
            g.reindex(&reduced_ctx, &map)
                .expect("support avoids dropped variables")
        });
    Ideal::new(&reduced_ctx, kept)
}

/// Saturation `I : f^∞`, computed by eliminating a fresh variable `t`
/// from `I + <t*f - 1>`.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if f.context() != &ideal.ctx {
        return Err(GroebnerError::ContextMismatch);
    }
    if f.is_zero() {
        return Err(GroebnerError::ZeroSaturation);
    }
    let n = ideal.ctx.len();
    let ext = ideal.ctx.with_fresh("t");
    let t = Polynomial::variable(&ext, n);
    let tf1 = &(&t * &f.extend_context(&ext)) - &Polynomial::one(&ext);
    let lifted = ideal
        .gens
        .iter()
        .map(|g| g.extend_context(&ext))
        .chain([tf1]);
    let extended = Ideal::new(&ext, lifted);
    let eliminated = eliminate(&extended, &[n]);
    // the reduced context of `eliminate` carries the original names
    debug_assert_eq!(eliminated.ctx.names(), ideal.ctx.names());
    Ok(Ideal::new(&ideal.ctx, eliminated.gens))
}

/// Intersection of two ideals, by eliminating `t` from `t*I + (1-t)*J`.
pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal, GroebnerError> {
    if a.ctx != b.ctx {
        return Err(GroebnerError::ContextMismatch);
    }
    let n = a.ctx.len();
    let ext = a.ctx.with_fresh("t");
    let t = Polynomial::variable(&ext, n);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let gens = a
        .gens
        .iter()
        .map(|g| &t * &g.extend_context(&ext))
        .chain(b.gens.iter().map(|g| &one_minus_t * &g.extend_context(&ext)));
    let extended = Ideal::new(&ext, gens);
    let eliminated = eliminate(&extended, &[n]);
    Ok(Ideal::new(&a.ctx, eliminated.gens))
}

/// Ideal quotient `I : f`, computed as `(I ∩ <f>) / f`.
pub fn ideal_quotient(ideal: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if f.context() != &ideal.ctx {
        return Err(GroebnerError::ContextMismatch);
    }
    if f.is_zero() {
        return Err(GroebnerError::ZeroSaturation);
    }
    let principal = Ideal::new(&ideal.ctx, [f.clone()]);
    let inter = ideal_intersection(ideal, &principal)?;
    let gens = inter.gens.iter().map(|g| {
        div_exact(g, f).expect("members of the intersection are multiples of f")
    });
    Ok(Ideal::new(&ideal.ctx, gens))
}

/// Saturation of a homogeneous ideal at the irrelevant maximal ideal,
/// computed by iterating `I : m` with `m = <all variables>` until stable.
pub fn saturate_irrelevant(ideal: &Ideal, order: &MonomialOrder) -> Result<Ideal, GroebnerError> {
    let mut current = ideal.clone();
    loop {
        let mut quotient: Option<Ideal> = None;
        for i in 0..current.ctx.len() {
            let xi = Polynomial::variable(&current.ctx, i);
            let qi = ideal_quotient(&current, &xi)?;
            quotient = Some(match quotient {
                None => qi,
                Some(acc) => ideal_intersection(&acc, &qi)?,
            });
        }
        let next = quotient.unwrap_or_else(|| current.clone());
        if ideal_equal(&next, &current, order)? {
            return Ok(current);
        }
        current = next;
    }
}

/// Krull dimension of the affine variety of the ideal: the largest size of
/// a variable subset meeting the support of no leading monomial of the
/// reduced basis.
pub fn krull_dimension(ideal: &Ideal, order: &MonomialOrder) -> Result<usize, GroebnerError> {
    krull_dimension_of_basis(&buchberger(ideal, order))
}

/// Krull dimension read off an already-computed reduced basis.
pub fn krull_dimension_of_basis(basis: &GroebnerBasis) -> Result<usize, GroebnerError> {
    if basis.contains_one() {
        return Err(GroebnerError::UnitIdeal);
    }
    let n = basis.ctx.len();
    assert!(n <= 24, "dimension search uses subset enumeration");
    let supports: Vec<u64> = basis
        .elements
        .iter()
        .map(|g| {
            g.leading_term(&basis.order)
                .expect("basis elements are nonzero")
                .0
                .support_mask()
        })
        .collect();
    let mut best = 0usize;
    for subset in 0u64..(1 << n) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !subset != 0) {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VariableContext};

    fn ideal_of(ctx: &Ctx, gens: &[&str]) -> Ideal {
        Ideal::new(
            ctx,
            gens.iter().map(|s| parse_poly(s, ctx).unwrap()),
        )
    }

    #[test]
    fn principal_ideal_basis() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let ideal = ideal_of(&ctx, &["2*x"]);
        let basis = buchberger(&ideal, &MonomialOrder::GrevLex);
        assert_eq!(basis.elements(), &[parse_poly("x", &ctx).unwrap()]);
    }

    #[test]
    fn linear_triangularization_under_lex() {
        let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
        let ideal = ideal_of(&ctx, &["x - y", "y - z"]);
        let basis = buchberger(&ideal, &MonomialOrder::Lex);
        assert_eq!(
            basis.elements(),
            &[
                parse_poly("y - z", &ctx).unwrap(),
                parse_poly("x - z", &ctx).unwrap(),
            ]
        );
    }

    #[test]
    fn normal_form_contract() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let ideal = ideal_of(&ctx, &["x^2 - y", "x*y - 1"]);
        let basis = buchberger(&ideal, &MonomialOrder::GrevLex);
        for g in ideal.generators() {
            assert!(normal_form(g, &basis).is_zero());
        }
        assert!(normal_form(&Polynomial::zero(&ctx), &basis).is_zero());
        // normal_form(f*g + h) = normal_form(h) for g in the ideal
        let f = parse_poly("x^3 + 2*y", &ctx).unwrap();
        let h = parse_poly("x + 5", &ctx).unwrap();
        let g = &ideal.generators()[0];
        let combined = &(&f * g) + &h;
        assert_eq!(normal_form(&combined, &basis), normal_form(&h, &basis));
    }

    #[test]
    fn membership_examples() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let ideal = ideal_of(&ctx, &["x^2 - y^2", "x*y"]);
        let order = MonomialOrder::GrevLex;
        for g in ideal.generators() {
            assert!(member(g, &ideal, &order).unwrap());
        }
        let one = Polynomial::one(&ctx);
        assert!(!member(&one, &ideal, &order).unwrap());
        let cube = parse_poly("x^3", &ctx).unwrap();
        assert!(member(&cube, &ideal, &order).unwrap());
    }

    #[test]
    fn ideal_equality_is_representation_independent() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let a = ideal_of(&ctx, &["x - y", "y^2"]);
        let permuted = ideal_of(&ctx, &["y^2", "x - y"]);
        let redundant = ideal_of(&ctx, &["x - y", "y^2", "x^2 - y^2 + x*y - y^2"]);
        let order = MonomialOrder::GrevLex;
        assert!(ideal_equal(&a, &permuted, &order).unwrap());
        assert!(ideal_equal(&a, &redundant, &order).unwrap());
        let x = ideal_of(&ctx, &["x"]);
        let xx = ideal_of(&ctx, &["x^2"]);
        assert!(!ideal_equal(&x, &xx, &order).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
        // eliminate x from <x - y>: zero ideal in (y, z)
        let i1 = ideal_of(&ctx, &["x - y"]);
        let e1 = eliminate(&i1, &[0]);
        assert!(e1.is_zero());
        assert_eq!(e1.context().names(), &["y", "z"]);

        // eliminate x from <x - y, x - z>: <y - z>
        let i2 = ideal_of(&ctx, &["x - y", "x - z"]);
        let e2 = eliminate(&i2, &[0]);
        let rctx = e2.context().clone();
        assert_eq!(e2.generators(), &[parse_poly("y - z", &rctx).unwrap()]);
    }

    #[test]
    fn saturation_examples() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let order = MonomialOrder::GrevLex;
        let xy = ideal_of(&ctx, &["x*y"]);
        let x = parse_poly("x", &ctx).unwrap();
        let sat = saturate(&xy, &x).unwrap();
        assert!(ideal_equal(&sat, &ideal_of(&ctx, &["y"]), &order).unwrap());

        let one = Polynomial::one(&ctx);
        let same = saturate(&xy, &one).unwrap();
        assert!(ideal_equal(&same, &xy, &order).unwrap());

        // x vanishes on all of V(<x^2, x*y>), so saturating at x leaves
        // the unit ideal
        let i = ideal_of(&ctx, &["x^2", "x*y"]);
        let sat2 = saturate(&i, &x).unwrap();
        assert!(ideal_equal(&sat2, &ideal_of(&ctx, &["1"]), &order).unwrap());

        // saturation strips the embedded multiple of x from <x^2*y>
        let i2 = ideal_of(&ctx, &["x^2*y"]);
        let sat3 = saturate(&i2, &x).unwrap();
        assert!(ideal_equal(&sat3, &ideal_of(&ctx, &["y"]), &order).unwrap());

        let zero = Polynomial::zero(&ctx);
        assert_eq!(saturate(&xy, &zero), Err(GroebnerError::ZeroSaturation));
    }

    #[test]
    fn quotient_and_intersection() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let order = MonomialOrder::GrevLex;
        let a = ideal_of(&ctx, &["x^2*y"]);
        let x = parse_poly("x", &ctx).unwrap();
        let q = ideal_quotient(&a, &x).unwrap();
        assert!(ideal_equal(&q, &ideal_of(&ctx, &["x*y"]), &order).unwrap());

        let b = ideal_of(&ctx, &["x"]);
        let c = ideal_of(&ctx, &["y"]);
        let inter = ideal_intersection(&b, &c).unwrap();
        assert!(ideal_equal(&inter, &ideal_of(&ctx, &["x*y"]), &order).unwrap());
    }

    #[test]
    fn krull_dimension_examples() {
        let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
        let order = MonomialOrder::GrevLex;
        assert_eq!(krull_dimension(&Ideal::zero(&ctx), &order).unwrap(), 3);
        let x = ideal_of(&ctx, &["x"]);
        assert_eq!(krull_dimension(&x, &order).unwrap(), 2);
        let unit = ideal_of(&ctx, &["1"]);
        assert_eq!(krull_dimension(&unit, &order), Err(GroebnerError::UnitIdeal));
    }

    #[test]
    fn pruning_does_not_change_the_reduced_basis() {
        let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
        let ideal = ideal_of(
            &ctx,
            &["x^2 + y*z - 1", "x*z - y^2", "y^3 - x*y + z"],
        );
        let order = MonomialOrder::GrevLex;
        let with = buchberger_with(&ideal, &order, &BuchbergerOptions { gebauer_moller: true });
        let without =
            buchberger_with(&ideal, &order, &BuchbergerOptions { gebauer_moller: false });
        assert_eq!(with.0.elements(), without.0.elements());
        assert!(with.1.pairs_pruned > 0);
        assert_eq!(without.1.pairs_pruned, 0);
    }
}
