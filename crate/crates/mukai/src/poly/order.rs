use std::cmp::Ordering;

use super::Monomial;

/// A monomial order: total, multiplicative, with 1 minimal. Variables
/// earlier in the context rank higher.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Pure lexicographic order.
    Lex,
    /// Graded reverse lexicographic order, the default of this crate.
    GrevLex,
    /// Block elimination order: any monomial containing an eliminated
    /// variable exceeds every monomial in the remaining variables. Both
    /// blocks are ranked by grevlex internally.
    Elimination { eliminated: u64 },
}

impl MonomialOrder {
    /// Elimination order for the given variable indices.
    pub fn elimination(vars: &[usize]) -> Self {
        let mut mask = 0u64;
        for &v in vars {
            debug_assert!(v < 64);
            mask |= 1 << v;
        }
        MonomialOrder::Elimination { eliminated: mask }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::GrevLex => grevlex_cmp_masked(a, b, u64::MAX),
            MonomialOrder::Elimination { eliminated } => {
                grevlex_cmp_masked(a, b, *eliminated)
                    .then_with(|| grevlex_cmp_masked(a, b, !*eliminated))
            }
        }
    }

    /// Stable name used by the CLI and certificates.
    pub fn label(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Elimination { eliminated } => {
                format!("elimination({eliminated:#x})")
            }
        }
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Grevlex restricted to the variables in `mask`: compare masked total
/// degree, then reversed scan where the smaller exponent at the rightmost
/// difference wins.
fn grevlex_cmp_masked(a: &Monomial, b: &Monomial, mask: u64) -> Ordering {
    let da = a.degree_masked(mask);
    let db = b.degree_masked(mask);
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        if mask & (1 << i) == 0 {
            continue;
        }
        let (x, y) = (a.exponent(i), b.exponent(i));
        match x.cmp(&y) {
            Ordering::Equal => continue,
            // larger exponent far to the right means a *smaller* monomial
            Ordering::Greater => return Ordering::Less,
            Ordering::Less => return Ordering::Greater,
        }
    }
    Ordering::Equal
}
