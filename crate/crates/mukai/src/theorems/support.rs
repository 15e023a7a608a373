use crate::groebner::{
    buchberger, ideal_equal, krull_dimension_of_basis, normal_form, saturate_irrelevant,
    GroebnerBasis, Ideal,
};
use crate::poly::{Ctx, MonomialOrder, Polynomial, Rational};

/// Transport a polynomial into another context by variable name; every
/// support variable must exist in the target.
pub(crate) fn transport(p: &Polynomial, target: &Ctx) -> Polynomial {
    let images: Vec<Polynomial> = p
        .context()
        .names()
        .iter()
        .map(|name| {
            Polynomial::variable_named(target, name)
                .unwrap_or_else(|| Polynomial::zero(target))
        })
        .collect();
    for (i, name) in p.context().names().iter().enumerate() {
        if p.mentions(i) {
            assert!(
                target.position(name).is_some(),
                "transport drops live variable {name}"
            );
        }
    }
    p.substitute(&images, target).expect("images share target context")
}

pub(crate) fn transport_all(ps: &[Polynomial], target: &Ctx) -> Vec<Polynomial> {
    ps.iter().map(|p| transport(p, target)).collect()
}

/// Outcome of an exact ideal comparison, including the strongest relation
/// that held when exact equality failed.
pub(crate) struct IdealComparison {
    pub equal: bool,
    pub relation: String,
    pub lhs_size: i64,
    pub rhs_size: i64,
    pub dim_lhs: i64,
    pub dim_rhs: i64,
}

fn basis_dim(basis: &GroebnerBasis) -> i64 {
    krull_dimension_of_basis(basis).map_or(-1, |d| d as i64)
}

fn contained_in(gens: &[Polynomial], basis: &GroebnerBasis) -> bool {
    gens.iter().all(|g| normal_form(g, basis).is_zero())
}

/// Compare two ideals in one context: reduced bases, Krull dimensions and,
/// when they differ, the strongest weaker relation (mutual inclusion or
/// equality after saturation at the irrelevant ideal).
pub(crate) fn compare_ideals(lhs: &Ideal, rhs: &Ideal, order: &MonomialOrder) -> IdealComparison {
    let lb = buchberger(lhs, order);
    let rb = buchberger(rhs, order);
    let equal = lb.elements() == rb.elements();
    let (dim_lhs, dim_rhs) = (basis_dim(&lb), basis_dim(&rb));
    let sizes = (lb.len() as i64, rb.len() as i64);
    if equal {
        return IdealComparison {
            equal: true,
            relation: "equal".into(),
            lhs_size: sizes.0,
            rhs_size: sizes.1,
            dim_lhs,
            dim_rhs,
        };
    }
    let lhs_in_rhs = contained_in(lhs.generators(), &rb);
    let rhs_in_lhs = contained_in(rhs.generators(), &lb);
    let relation = match (lhs_in_rhs, rhs_in_lhs) {
        (true, true) => unreachable!("mutual inclusion of reduced bases means equality"),
        (true, false) => "lhs-strictly-contained-in-rhs".to_string(),
        (false, true) => "rhs-strictly-contained-in-lhs".to_string(),
        (false, false) => "mutual-inclusion-failure".to_string(),
    };
    // strongest-relation ladder: try equality after saturating both sides
    // at the irrelevant maximal ideal
    let relation = match (
        saturate_irrelevant(lhs, order),
        saturate_irrelevant(rhs, order),
    ) {
        (Ok(ls), Ok(rs)) if ideal_equal(&ls, &rs, order).unwrap_or(false) => {
            format!("{relation}; equal-after-saturation")
        }
        _ => relation,
    };
    IdealComparison {
        equal: false,
        relation,
        lhs_size: sizes.0,
        rhs_size: sizes.1,
        dim_lhs,
        dim_rhs,
    }
}

/// Match two generator lists up to sign: a bijection with
/// `rhs[j] = sign * lhs[i]`. Returns the matching when one exists.
pub(crate) fn signed_generator_match(
    lhs: &[Polynomial],
    rhs: &[Polynomial],
) -> Option<Vec<(usize, usize, i64)>> {
    if lhs.len() != rhs.len() {
        return None;
    }
    let mut used = vec![false; rhs.len()];
    let mut matching = Vec::with_capacity(lhs.len());
    for (i, l) in lhs.iter().enumerate() {
        let neg = -l;
        let mut found = None;
        for (j, r) in rhs.iter().enumerate() {
            if used[j] {
                continue;
            }
            if r == l {
                found = Some((j, 1));
                break;
            }
            if *r == neg {
                found = Some((j, -1));
                break;
            }
        }
        let (j, sign) = found?;
        used[j] = true;
        matching.push((i, j, sign));
    }
    Some(matching)
}

/// Scale helper for integer multiples.
pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
