//! The (u, X, Y, z) presentation of the Grassmannian G(3,6): twenty
//! coordinate slots (a scalar, two 3x3 matrices, a scalar) carrying the
//! Pluecker coordinates of three-dimensional subspaces, with the quadratic
//! relations `u*Y = adj(X)`, `z*X = adj(Y)`, `X*Y = Y*X = u*z*I`.
//!
//! On the big cell the slots evaluate to `(1, A, adj(A), det(A))`, so the
//! relations hold identically there; the unit tests check that the slot
//! dictionary reproduces genuine Pluecker coordinates and that the
//! relation system spans exactly the classical shuffle relations.
//!
//! Imposing a symplectic form cuts this down to a Lagrangian Grassmannian:
//! the isotropy conditions of a 2-form are six linear conditions on the
//! slots, computed by `omega_isotropy_conditions`.

use crate::poly::{Ctx, Polynomial, Rational};
use crate::polymat::PolyMatrix;

/// The twenty coordinate slots.
#[derive(Clone, Debug)]
pub struct LagrangianData {
    pub u: Polynomial,
    pub x: PolyMatrix,
    pub y: PolyMatrix,
    pub z: Polynomial,
}

impl LagrangianData {
    pub fn context(&self) -> &Ctx {
        self.u.context()
    }

    /// Slot values in the fixed enumeration: `u`, `X` row-major, `Y`
    /// row-major, `z`.
    pub fn slots(&self) -> Vec<Polynomial> {
        let mut out = Vec::with_capacity(20);
        out.push(self.u.clone());
        for i in 0..3 {
            for j in 0..3 {
                out.push(self.x.entry(i, j).clone());
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                out.push(self.y.entry(i, j).clone());
            }
        }
        out.push(self.z.clone());
        out
    }
}

/// The 36 quadratic relation entries cutting out the Grassmannian in the
/// slot coordinates.
pub fn lagrangian_relations(data: &LagrangianData) -> Vec<Polynomial> {
    let ctx = data.context().clone();
    let adj_x = data.x.adjugate().expect("3x3");
    let adj_y = data.y.adjugate().expect("3x3");
    let uz = &data.u * &data.z;
    let uy = data.y.scale(&data.u);
    let zx = data.x.scale(&data.z);
    let xy = data.x.mul(&data.y);
    let yx = data.y.mul(&data.x);
    let mut out = Vec::with_capacity(36);
    for i in 0..3 {
        for j in 0..3 {
            out.push(uy.entry(i, j) - adj_x.entry(i, j));
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            out.push(zx.entry(i, j) - adj_y.entry(i, j));
        }
    }
    for grid in [&xy, &yx] {
        for i in 0..3 {
            for j in 0..3 {
                let mut e = grid.entry(i, j).clone();
                if i == j {
                    e = &e - &uz;
                }
                out.push(e);
            }
        }
    }
    let _ = ctx;
    out
}

/// Per slot: the sign and the sorted index triple of the Pluecker
/// coordinate it carries. Slot order matches [`LagrangianData::slots`].
pub fn slot_dictionary() -> Vec<(i64, [usize; 3])> {
    let mut out = Vec::with_capacity(20);
    out.push((1, [1, 2, 3]));
    // X_{r,c} = (-1)^c * x_{({1,2,3} minus (c+1)) + {r+4}}, 0-based r, c
    for r in 0..3usize {
        for c in 0..3usize {
            let mut t: Vec<usize> = (1..=3).filter(|&k| k != c + 1).collect();
            t.push(r + 4);
            t.sort_unstable();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            out.push((sign, [t[0], t[1], t[2]]));
        }
    }
    // Y_{r,c} = (-1)^c * x_{{r+1} + ({4,5,6} minus (c+4))}
    for r in 0..3usize {
        for c in 0..3usize {
            let mut t: Vec<usize> = (4..=6).filter(|&k| k != c + 4).collect();
            t.push(r + 1);
            t.sort_unstable();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            out.push((sign, [t[0], t[1], t[2]]));
        }
    }
    out.push((1, [4, 5, 6]));
    out
}

/// `x_T` for a sorted triple `T`, expressed through the slot values:
/// `(slot index, sign)` with `x_T = sign * slot`.
pub fn plucker_slot(t: [usize; 3]) -> (usize, i64) {
    let dict = slot_dictionary();
    for (i, (sign, u)) in dict.iter().enumerate() {
        if *u == t {
            return (i, *sign);
        }
    }
    unreachable!("every 3-subset of 1..=6 appears in the dictionary")
}

/// A 2-form as its upper coefficient list `(i, j, w_ij)` with `i < j`.
pub type TwoForm = Vec<(usize, usize, i64)>;

fn omega_coeff(omega: &TwoForm, i: usize, j: usize) -> i64 {
    for &(a, b, w) in omega {
        if (a, b) == (i, j) {
            return w;
        }
        if (a, b) == (j, i) {
            return -w;
        }
    }
    0
}

/// The six linear isotropy conditions of a 2-form, expressed through the
/// given slot values: a 3-space with Pluecker vector `eta` is isotropic
/// for `omega` iff the contraction of `omega` into `eta` vanishes.
pub fn omega_isotropy_conditions(omega: &TwoForm, slots: &[Polynomial]) -> Vec<Polynomial> {
    assert_eq!(slots.len(), 20);
    let ctx = slots[0].context().clone();
    let mut conditions = vec![Polynomial::zero(&ctx); 6];
    let triples: Vec<[usize; 3]> = {
        let mut out = Vec::new();
        for a in 1..=6 {
            for b in a + 1..=6 {
                for c in b + 1..=6 {
                    out.push([a, b, c]);
                }
            }
        }
        out
    };
    for t in triples {
        let (slot, sign) = plucker_slot(t);
        let x_t = slots[slot].scale(&Rational::from_integer(sign.into()));
        let [a, b, c] = t;
        // contraction of omega into e_a ^ e_b ^ e_c
        let contributions = [
            (c, omega_coeff(omega, a, b)),
            (b, -omega_coeff(omega, a, c)),
            (a, omega_coeff(omega, b, c)),
        ];
        for (k, w) in contributions {
            if w != 0 {
                conditions[k - 1] =
                    &conditions[k - 1] + &x_t.scale(&Rational::from_integer(w.into()));
            }
        }
    }
    conditions
}

/// The symplectic form whose Lagrangian Grassmannian has symmetric X and Y
/// blocks.
#[cfg(test)]
pub fn standard_symplectic_form() -> TwoForm {
    vec![(1, 4, 1), (2, 5, 1), (3, 6, 1)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::QMatrix;
    use crate::poly::{rat, Monomial, VariableContext};

    fn generic3(prefix: &str) -> (Ctx, PolyMatrix) {
        let names: Vec<String> = (1..=3)
            .flat_map(|i| (1..=3).map(move |j| format!("{prefix}_{i}_{j}")))
            .collect();
        let ctx = VariableContext::new(names).unwrap();
        let m = PolyMatrix::from_fn(&ctx, 3, 3, |i, j| Polynomial::variable(&ctx, 3 * i + j));
        (ctx, m)
    }

    /// Pluecker coordinate of the row span of [I | A]: the 3x3 minor on
    /// the columns of the sorted triple.
    fn plucker_of_chart(ctx: &Ctx, a: &PolyMatrix, t: [usize; 3]) -> Polynomial {
        let col = |k: usize, row: usize| -> Polynomial {
            if k <= 3 {
                Polynomial::constant(
                    ctx,
                    if row + 1 == k { rat(1) } else { rat(0) },
                )
            } else {
                a.entry(row, k - 4).clone()
            }
        };
        let m = PolyMatrix::from_fn(ctx, 3, 3, |i, j| col(t[j], i));
        m.determinant().unwrap()
    }

    #[test]
    fn dictionary_reproduces_pluecker_coordinates_of_the_big_cell() {
        let (ctx, a) = generic3("a");
        let dict = slot_dictionary();
        let slot_value = |idx: usize| -> Polynomial {
            let (sign, t) = &dict[idx];
            plucker_of_chart(&ctx, &a, *t).scale(&rat(*sign))
        };
        // u = 1 and z = det(A)
        assert_eq!(slot_value(0), Polynomial::one(&ctx));
        assert_eq!(slot_value(19), a.determinant().unwrap());
        // X block = A transpose
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(slot_value(1 + 3 * r + c), *a.entry(c, r));
            }
        }
        // Y block = adj(A transpose)
        let adj_at = a.transpose().adjugate().unwrap();
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(slot_value(10 + 3 * r + c), *adj_at.entry(r, c));
            }
        }
    }

    #[test]
    fn relations_vanish_on_the_big_cell() {
        let (_, m) = generic3("m");
        let ctx = m.context().clone();
        let data = LagrangianData {
            u: Polynomial::one(&ctx),
            x: m.clone(),
            y: m.adjugate().unwrap(),
            z: m.determinant().unwrap(),
        };
        for rel in lagrangian_relations(&data) {
            assert!(rel.is_zero());
        }
    }

    /// Coefficient vector of a quadric over the 210 monomials of degree 2
    /// in 20 slot variables.
    fn quadric_row(q: &Polynomial, n: usize) -> Vec<crate::poly::Rational> {
        let mut monos = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut e = vec![0u16; n];
                e[i] += 1;
                e[j] += 1;
                monos.push(Monomial::from_exponents(&e));
            }
        }
        monos.iter().map(|m| q.coefficient(m)).collect()
    }

    #[test]
    fn relation_system_spans_the_classical_shuffle_relations() {
        // free slot variables
        let names: Vec<String> = (0..20).map(|i| format!("s{i}")).collect();
        let ctx = VariableContext::new(names).unwrap();
        let slot_vars: Vec<Polynomial> = (0..20).map(|i| Polynomial::variable(&ctx, i)).collect();
        let grid = |base: usize| {
            PolyMatrix::from_fn(&ctx, 3, 3, |i, j| slot_vars[base + 3 * i + j].clone())
        };
        let data = LagrangianData {
            u: slot_vars[0].clone(),
            x: grid(1),
            y: grid(10),
            z: slot_vars[19].clone(),
        };
        let relations = lagrangian_relations(&data);
        assert_eq!(relations.len(), 36);

        // x_T through the slots, for arbitrary (possibly unsorted) triples
        let coord = |idx: &[usize]| -> Polynomial {
            let mut t = idx.to_vec();
            // antisymmetric sort
            let mut sign = 1i64;
            for i in 0..t.len() {
                for j in (i + 1..t.len()).rev() {
                    if t[j - 1] > t[j] {
                        t.swap(j - 1, j);
                        sign = -sign;
                    }
                }
            }
            if t.windows(2).any(|w| w[0] == w[1]) {
                return Polynomial::zero(&ctx);
            }
            let (slot, s) = plucker_slot([t[0], t[1], t[2]]);
            slot_vars[slot].scale(&rat(sign * s))
        };

        // classical shuffle relations: alpha a 2-subset, beta a 4-subset
        let mut shuffles = Vec::new();
        for a1 in 1..=6usize {
            for a2 in a1 + 1..=6 {
                for b1 in 1..=6usize {
                    for b2 in b1 + 1..=6 {
                        for b3 in b2 + 1..=6 {
                            for b4 in b3 + 1..=6 {
                                let beta = [b1, b2, b3, b4];
                                let mut rel = Polynomial::zero(&ctx);
                                for (t, bt) in beta.iter().enumerate() {
                                    let rest: Vec<usize> = beta
                                        .iter()
                                        .copied()
                                        .filter(|b| b != bt)
                                        .collect();
                                    let term = &coord(&[a1, a2, *bt]) * &coord(&rest);
                                    rel = if t % 2 == 0 { &rel - &term } else { &rel + &term };
                                }
                                if !rel.is_zero() {
                                    shuffles.push(rel);
                                }
                            }
                        }
                    }
                }
            }
        }
        assert!(!shuffles.is_empty());

        // every shuffle relation vanishes on the big cell
        let (actx, a) = generic3("a");
        let dict = slot_dictionary();
        let images: Vec<Polynomial> = dict
            .iter()
            .map(|(sign, t)| plucker_of_chart(&actx, &a, *t).scale(&rat(*sign)))
            .collect();
        for rel in shuffles.iter().take(40) {
            assert!(rel.substitute(&images, &actx).unwrap().is_zero());
        }

        // span equality in the 210-dimensional space of quadrics
        let rel_rows: Vec<Vec<crate::poly::Rational>> =
            relations.iter().map(|q| quadric_row(q, 20)).collect();
        let shuffle_rows: Vec<Vec<crate::poly::Rational>> =
            shuffles.iter().map(|q| quadric_row(q, 20)).collect();
        let rank_rel = QMatrix::from_rows(rel_rows.clone()).rank_rref();
        let rank_shuffle = QMatrix::from_rows(shuffle_rows.clone()).rank_rref();
        let mut all = rel_rows;
        all.extend(shuffle_rows);
        let rank_union = QMatrix::from_rows(all).rank_rref();
        assert_eq!(rank_rel, 35, "G(3,6) is cut out by 35 independent quadrics");
        assert_eq!(rank_shuffle, 35);
        assert_eq!(rank_union, 35);
    }

    #[test]
    fn standard_form_conditions_are_the_symmetry_pattern() {
        let names: Vec<String> = (0..20).map(|i| format!("s{i}")).collect();
        let ctx = VariableContext::new(names).unwrap();
        let slot_vars: Vec<Polynomial> = (0..20).map(|i| Polynomial::variable(&ctx, i)).collect();
        let conditions = omega_isotropy_conditions(&standard_symplectic_form(), &slot_vars);
        // expected: X and Y symmetric, i.e. the six entry differences
        let diff = |base: usize, r: usize, c: usize| {
            &slot_vars[base + 3 * r + c] - &slot_vars[base + 3 * c + r]
        };
        let expected = vec![
            diff(1, 0, 1),
            diff(1, 0, 2),
            diff(1, 1, 2),
            diff(10, 0, 1),
            diff(10, 0, 2),
            diff(10, 1, 2),
        ];
        let rows: Vec<Vec<crate::poly::Rational>> = conditions
            .iter()
            .chain(&expected)
            .map(|f| {
                (0..20)
                    .map(|j| f.coefficient(&Monomial::variable(20, j)))
                    .collect()
            })
            .collect();
        let rank_both = QMatrix::from_rows(rows.clone()).rank_rref();
        let rank_conditions = QMatrix::from_rows(rows[..6].to_vec()).rank_rref();
        assert_eq!(rank_conditions, 6);
        assert_eq!(rank_both, 6, "conditions span the symmetry differences");
    }
}
