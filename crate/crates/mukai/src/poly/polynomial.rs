use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::context::same_ctx;
use super::{Ctx, Monomial, MonomialOrder, PolyError, Rational};

/// A sparse multivariate polynomial over the rationals in a fixed variable
/// context. Terms are stored canonically (no zero coefficients); the zero
/// polynomial has an empty term map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    ctx: Ctx,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Ctx, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(ctx.len()), c);
        }
        p
    }

    pub fn variable(ctx: &Ctx, i: usize) -> Self {
        assert!(i < ctx.len(), "variable index out of range");
        let mut p = Self::zero(ctx);
        p.terms
            .insert(Monomial::variable(ctx.len(), i), Rational::one());
        p
    }

    pub fn variable_named(ctx: &Ctx, name: &str) -> Option<Self> {
        ctx.position(name).map(|i| Self::variable(ctx, i))
    }

    pub fn from_terms<I>(ctx: &Ctx, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ctx.len());
            p.add_term(m, c);
        }
        p
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::unit(self.ctx.len()))
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_unit)
    }

    /// Union of the supports of all terms, as a variable bitmask.
    pub fn support_mask(&self) -> u64 {
        self.terms
            .keys()
            .fold(0u64, |acc, m| acc | m.support_mask())
    }

    pub fn mentions(&self, var: usize) -> bool {
        self.support_mask() & (1 << var) != 0
    }

    /// Largest term under the given monomial order.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(PolyError::ContextMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(PolyError::ContextMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(PolyError::ContextMismatch);
        }
        let mut out = Self::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, x)| (m.clone(), x * c))
            .collect();
        Polynomial {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, x)| (k.mul(m), x * c))
            .collect();
        Polynomial {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.ctx);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let dm = m
                .try_div(&Monomial::variable(self.ctx.len(), i))
                .expect("positive exponent");
            out.add_term(dm, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.ctx.len());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t *= &values[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// The image under the ring homomorphism sending variable `i` of this
    /// context to `images[i]`, a polynomial in the target context. Every
    /// variable must have an image.
    pub fn substitute(&self, images: &[Polynomial], target: &Ctx) -> Result<Self, PolyError> {
        if images.len() != self.ctx.len() {
            let missing = if images.len() < self.ctx.len() {
                self.ctx.name(images.len()).to_string()
            } else {
                String::new()
            };
            return Err(PolyError::MissingImage(missing));
        }
        for img in images {
            if !same_ctx(img.context(), target) {
                return Err(PolyError::ContextMismatch);
            }
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e as u32);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Re-index into another context via `map` (old index -> new index).
    /// Fails if the support mentions a dropped variable.
    pub fn reindex(&self, new_ctx: &Ctx, map: &[Option<usize>]) -> Result<Self, PolyError> {
        let mut out = Self::zero(new_ctx);
        for (m, c) in &self.terms {
            match m.reindex(map, new_ctx.len()) {
                Some(nm) => out.add_term(nm, c.clone()),
                None => {
                    let bad = m
                        .exponents()
                        .iter()
                        .enumerate()
                        .find(|&(i, &e)| e > 0 && map[i].is_none())
                        .map(|(i, _)| self.ctx.name(i).to_string())
                        .unwrap_or_default();
                    return Err(PolyError::DroppedVariableInSupport(bad));
                }
            }
        }
        Ok(out)
    }

    /// Same polynomial viewed in an extended context whose first
    /// `self.ctx.len()` variables coincide with this context.
    pub fn extend_context(&self, ext: &Ctx) -> Self {
        debug_assert!(ext.len() >= self.ctx.len());
        debug_assert!(self
            .ctx
            .names()
            .iter()
            .enumerate()
            .all(|(i, n)| ext.name(i) == n));
        let extra = ext.len() - self.ctx.len();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.extend(extra), c.clone()))
            .collect();
        Polynomial {
            ctx: ext.clone(),
            terms,
        }
    }

    /// Graded pieces of a homogeneous polynomial in the affine chart
    /// `chart = 1`: the parts of degree 0, 1 and 2 in the remaining
    /// variables. Pieces of higher degree are discarded.
    pub fn local_expansion(
        &self,
        chart: usize,
    ) -> Result<(Polynomial, Polynomial, Polynomial), PolyError> {
        if chart >= self.ctx.len() {
            return Err(PolyError::VariableOutOfRange(chart));
        }
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        let n = self.ctx.len();
        let mut parts = [
            Self::zero(&self.ctx),
            Self::zero(&self.ctx),
            Self::zero(&self.ctx),
        ];
        for (m, c) in &self.terms {
            let rest = m.degree() - m.exponent(chart) as u32;
            if rest <= 2 {
                let mut exps = m.exponents().to_vec();
                exps[chart] = 0;
                parts[rest as usize].add_term(Monomial::from_exponents(&exps[..n]), c.clone());
            }
        }
        let [c0, c1, c2] = parts;
        Ok((c0, c1, c2))
    }

    /// Monic rescaling under the given order; zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Structural content normalization used for sign-insensitive
    /// comparisons: scales so the structurally largest term has
    /// coefficient 1.
    pub fn normalized_by_leading(&self) -> Self {
        match self.terms.iter().next_back() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        self.checked_add(rhs).expect("context mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Self) -> Polynomial {
        self.checked_sub(rhs).expect("context mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        self.checked_mul(rhs).expect("context mismatch in *")
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms in descending lexicographic order,
    /// `*` between factors, `^` for powers, ` + `/` - ` between terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if m.is_unit() {
                write_rational(f, &abs)?;
                continue;
            }
            let mut lead = true;
            if !abs.is_one() {
                write_rational(f, &abs)?;
                lead = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !lead {
                    write!(f, "*")?;
                }
                lead = false;
                write!(f, "{}", self.ctx.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_poly, rat, VariableContext};
    use super::*;

    fn ctx2() -> Ctx {
        VariableContext::new(["x", "y"]).unwrap()
    }

    #[test]
    fn additive_identity_and_difference_of_squares() {
        let ctx = ctx2();
        let f = parse_poly("x^2 + 2*x*y", &ctx).unwrap();
        let zero = Polynomial::zero(&ctx);
        assert_eq!(&f + &zero, f);
        let lhs = parse_poly("x + y", &ctx).unwrap();
        let rhs = parse_poly("x - y", &ctx).unwrap();
        assert_eq!(&lhs * &rhs, parse_poly("x^2 - y^2", &ctx).unwrap());
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = Polynomial::one(&ctx2());
        let b = Polynomial::one(&VariableContext::new(["z"]).unwrap());
        assert_eq!(a.checked_add(&b), Err(PolyError::ContextMismatch));
        assert_eq!(a.checked_mul(&b), Err(PolyError::ContextMismatch));
    }

    #[test]
    fn derivative_and_evaluation() {
        let ctx = ctx2();
        let f = parse_poly("x^3*y + 2*y^2", &ctx).unwrap();
        assert_eq!(f.derivative(0), parse_poly("3*x^2*y", &ctx).unwrap());
        assert_eq!(f.derivative(1), parse_poly("x^3 + 4*y", &ctx).unwrap());
        assert_eq!(f.evaluate(&[rat(2), rat(3)]), rat(42));
    }

    #[test]
    fn substitution_preserves_degree_for_linear_maps() {
        let src = VariableContext::new(["a", "b"]).unwrap();
        let dst = VariableContext::new(["u", "v"]).unwrap();
        let f = parse_poly("a^2 - b^2", &src).unwrap();
        let images = vec![
            parse_poly("u + v", &dst).unwrap(),
            parse_poly("u - v", &dst).unwrap(),
        ];
        let g = f.substitute(&images, &dst).unwrap();
        assert_eq!(g, parse_poly("4*u*v", &dst).unwrap());
        assert_eq!(g.total_degree(), f.total_degree());
    }

    #[test]
    fn substitution_with_identity_map_is_identity() {
        let ctx = ctx2();
        let f = parse_poly("x^2*y - 3*y", &ctx).unwrap();
        let images: Vec<_> = (0..2).map(|i| Polynomial::variable(&ctx, i)).collect();
        assert_eq!(f.substitute(&images, &ctx).unwrap(), f);
    }

    #[test]
    fn sign_map_fixes_even_degree_forms() {
        let ctx = ctx2();
        let f = parse_poly("x^2 + x*y - y^2", &ctx).unwrap();
        let images: Vec<_> = (0..2)
            .map(|i| -&Polynomial::variable(&ctx, i))
            .collect();
        assert_eq!(f.substitute(&images, &ctx).unwrap(), f);
    }

    #[test]
    fn substitute_requires_all_images() {
        let ctx = ctx2();
        let f = parse_poly("x + y", &ctx).unwrap();
        let images = vec![Polynomial::variable(&ctx, 0)];
        assert!(matches!(
            f.substitute(&images, &ctx),
            Err(PolyError::MissingImage(_))
        ));
    }

    #[test]
    fn local_expansion_of_degree_two_form() {
        let ctx = VariableContext::new(["x0", "a", "b"]).unwrap();
        let f = parse_poly("x0^2 + 3*x0*a + a*b", &ctx).unwrap();
        let (c0, c1, c2) = f.local_expansion(0).unwrap();
        assert_eq!(c0, Polynomial::one(&ctx));
        assert_eq!(c1, parse_poly("3*a", &ctx).unwrap());
        assert_eq!(c2, parse_poly("a*b", &ctx).unwrap());
        // re-homogenization identity for quadrics
        let chart = Polynomial::variable(&ctx, 0);
        let back = &(&(&c0 * &chart.pow(2)) + &(&c1 * &chart)) + &c2;
        assert_eq!(back, f);
    }

    #[test]
    fn local_expansion_rejects_inhomogeneous_input() {
        let ctx = ctx2();
        let f = parse_poly("x^2 + y", &ctx).unwrap();
        assert_eq!(f.local_expansion(0), Err(PolyError::NotHomogeneous));
    }

    #[test]
    fn display_matches_expected_grammar() {
        let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
        for text in [
            "x^2 - y*z",
            "-x + y",
            "2*x*y + 1/2*z",
            "0",
            "x^2*y^3 - 5",
        ] {
            let p = parse_poly(text, &ctx).unwrap();
            assert_eq!(p.to_string(), text);
        }
    }
}
