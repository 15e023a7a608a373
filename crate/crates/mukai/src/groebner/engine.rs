use num_traits::{One, Zero};

use crate::poly::{Ctx, Monomial, MonomialOrder, Polynomial, Rational};

/// Polynomial with terms sorted descending under the active order; the
/// working representation of the Buchberger loop.
#[derive(Clone, Debug)]
pub(crate) struct OrdPoly {
    pub terms: Vec<(Monomial, Rational)>,
}

impl OrdPoly {
    pub fn from_polynomial(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_unstable_by(|(a, _), (b, _)| order.cmp(b, a));
        OrdPoly { terms }
    }

    pub fn to_polynomial(&self, ctx: &Ctx) -> Polynomial {
        Polynomial::from_terms(ctx, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    pub fn sugar(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn make_monic(&mut self) {
        if self.is_zero() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().recip();
        for (_, c) in &mut self.terms {
            *c = &*c * &inv;
        }
    }

    /// `self - c * m * g`, merging two descending term lists.
    pub fn sub_mul(&self, c: &Rational, m: &Monomial, g: &OrdPoly, order: &MonomialOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let gm = g.terms[j].0.mul(m);
            match order.cmp(&self.terms[i].0, &gm) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((gm, -(c * &g.terms[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let coeff = &self.terms[i].1 - &(c * &g.terms[j].1);
                    if !coeff.is_zero() {
                        out.push((gm, coeff));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < g.terms.len() {
            out.push((g.terms[j].0.mul(m), -(c * &g.terms[j].1)));
            j += 1;
        }
        OrdPoly { terms: out }
    }
}

/// S-polynomial of two monic polynomials.
pub(crate) fn s_polynomial(f: &OrdPoly, g: &OrdPoly, order: &MonomialOrder) -> OrdPoly {
    let lcm = f.lm().lcm(g.lm());
    let mf = lcm.try_div(f.lm()).expect("lcm divisible by lm");
    let mg = lcm.try_div(g.lm()).expect("lcm divisible by lm");
    let one = Rational::one();
    let shifted_f = OrdPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&mf), c.clone()))
            .collect(),
    };
    shifted_f.sub_mul(&one, &mg, g, order)
}

/// Full normal form of `f` against monic reducers: no output monomial is
/// divisible by any reducer leading monomial. Reducer choice is the first
/// match in slice order, which keeps runs deterministic. `skip` excludes
/// one reducer index (used by inter-reduction).
pub(crate) fn reduce_full(
    f: OrdPoly,
    reducers: &[OrdPoly],
    skip: Option<usize>,
    order: &MonomialOrder,
) -> (OrdPoly, u64) {
    let mut work = f;
    let mut out: Vec<(Monomial, Rational)> = Vec::new();
    let mut steps = 0u64;
    'outer: while !work.is_zero() {
        let lm = work.lm().clone();
        let lc = work.lc().clone();
        for (k, g) in reducers.iter().enumerate() {
            if Some(k) == skip || g.is_zero() {
                continue;
            }
            if g.lm().divides(&lm) {
                let m = lm.try_div(g.lm()).expect("divides");
                work = work.sub_mul(&lc, &m, g, order);
                steps += 1;
                continue 'outer;
            }
        }
        out.push((lm, lc));
        work.terms.remove(0);
    }
    (OrdPoly { terms: out }, steps)
}

#[derive(Clone, Debug)]
pub struct BuchbergerOptions {
    /// Apply the Gebauer-Moller pair criteria (chain and coprimality).
    /// Disabling them changes the work done, never the reduced basis.
    pub gebauer_moller: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            gebauer_moller: true,
        }
    }
}

/// Counters reported by the engine; `gb --stats` prints them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub pairs_generated: u64,
    pub pairs_pruned: u64,
    pub pairs_reduced: u64,
    pub reductions_to_zero: u64,
    pub reduction_steps: u64,
    pub basis_size_before_reduction: usize,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Reduced Groebner basis elements for the input generators, sorted
/// ascending by leading monomial, all monic. The companion stats describe
/// the run.
pub(crate) fn buchberger_engine(
    gens: &[Polynomial],
    ctx: &Ctx,
    order: &MonomialOrder,
    opts: &BuchbergerOptions,
) -> (Vec<Polynomial>, EngineStats) {
    let mut stats = EngineStats::default();
    let mut basis: Vec<OrdPoly> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let add_element = |h: OrdPoly,
                           sugar: u32,
                           basis: &mut Vec<OrdPoly>,
                           sugars: &mut Vec<u32>,
                           pairs: &mut Vec<Pair>,
                           stats: &mut EngineStats| {
        let t = basis.len();
        let mut fresh: Vec<Pair> = (0..t)
            .map(|i| {
                let lcm = basis[i].lm().lcm(h.lm());
                let s = (sugars[i] + lcm.try_div(basis[i].lm()).unwrap().degree())
                    .max(sugar + lcm.try_div(h.lm()).unwrap().degree());
                Pair {
                    i,
                    j: t,
                    lcm,
                    sugar: s,
                }
            })
            .collect();
        stats.pairs_generated += fresh.len() as u64;
        if opts.gebauer_moller {
            // criterion M: drop a fresh pair when another fresh pair's lcm
            // properly divides its lcm; criterion F: keep one pair per lcm.
            let mut kept: Vec<Pair> = Vec::new();
            'cand: for (k, p) in fresh.iter().enumerate() {
                for (k2, q) in fresh.iter().enumerate() {
                    if k2 == k {
                        continue;
                    }
                    if q.lcm.divides(&p.lcm) && q.lcm != p.lcm {
                        stats.pairs_pruned += 1;
                        continue 'cand;
                    }
                    if q.lcm == p.lcm && k2 < k {
                        // criterion F: one pair per lcm, keep the earliest
                        stats.pairs_pruned += 1;
                        continue 'cand;
                    }
                }
                kept.push(p.clone());
            }
            // criterion B (Buchberger's coprimality): S-pairs with coprime
            // leading monomials reduce to zero.
            fresh = kept
                .into_iter()
                .filter(|p| {
                    let coprime = basis[p.i].lm().is_coprime_with(h.lm());
                    if coprime {
                        stats.pairs_pruned += 1;
                    }
                    !coprime
                })
                .collect();
            // chain criterion on the old pair set
            pairs.retain(|p| {
                let killable = h.lm().divides(&p.lcm)
                    && basis[p.i].lm().lcm(h.lm()) != p.lcm
                    && basis[p.j].lm().lcm(h.lm()) != p.lcm;
                if killable {
                    stats.pairs_pruned += 1;
                }
                !killable
            });
        }
        pairs.extend(fresh);
        basis.push(h);
        sugars.push(sugar);
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let mut h = OrdPoly::from_polynomial(g, order);
        h.make_monic();
        let s = h.sugar();
        add_element(h, s, &mut basis, &mut sugars, &mut pairs, &mut stats);
    }

    while !pairs.is_empty() {
        // normal selection: smallest sugar, then smallest lcm, then indices
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let ord = a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if ord == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.remove(best);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], order);
        stats.pairs_reduced += 1;
        let (mut r, steps) = reduce_full(s, &basis, None, order);
        stats.reduction_steps += steps;
        if r.is_zero() {
            stats.reductions_to_zero += 1;
            continue;
        }
        r.make_monic();
        add_element(
            r,
            pair.sugar,
            &mut basis,
            &mut sugars,
            &mut pairs,
            &mut stats,
        );
    }

    stats.basis_size_before_reduction = basis.len();
    (inter_reduce(basis, ctx, order), stats)
}

/// Minimalize and tail-reduce a Groebner basis, returning the unique
/// reduced basis sorted ascending by leading monomial.
fn inter_reduce(mut basis: Vec<OrdPoly>, ctx: &Ctx, order: &MonomialOrder) -> Vec<Polynomial> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    // minimal generating set of the leading-term ideal: a divisor always
    // sorts before its multiples, so one forward sweep suffices
    let mut minimal: Vec<OrdPoly> = Vec::new();
    for g in basis {
        if minimal.iter().all(|h| !h.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    let mut reduced: Vec<OrdPoly> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let (mut r, _) = reduce_full(minimal[k].clone(), &minimal, Some(k), order);
        r.make_monic();
        debug_assert!(!r.is_zero(), "minimal element cannot reduce to zero");
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    reduced.iter().map(|g| g.to_polynomial(ctx)).collect()
}
