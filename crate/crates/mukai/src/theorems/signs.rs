//! Reconstruction of lost entry signs in a displayed antisymmetric matrix.
//!
//! Printed matrices in the source occasionally drop minus signs. For a
//! candidate antisymmetric matrix whose 4x4 Pfaffians must lie in a known
//! ideal, the correct signs satisfy a linear system over GF(2): each
//! 4-subset's Pfaffian is a three-term signed combination of fixed entry
//! products, and reducing those products against a Groebner basis of the
//! target ideal reveals which sign patterns can vanish. Solutions come in
//! orbits of diagonal sign conjugations, all of which generate the same
//! ideal, so any solution is as good as any other.

use crate::groebner::{normal_form, GroebnerBasis};
use crate::poly::{Ctx, Polynomial};
use crate::polymat::PolyMatrix;

/// Upper-triangle entry list of an n x n antisymmetric matrix, in
/// row-major (i < j) order.
pub(crate) struct SignedMatrixProblem {
    pub ctx: Ctx,
    pub n: usize,
    pub upper: Vec<Polynomial>,
}

impl SignedMatrixProblem {
    fn upper_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        let before: usize = (0..i).map(|r| self.n - 1 - r).sum();
        before + (j - i - 1)
    }

    /// The matrix with the given per-entry flips applied.
    pub fn matrix_with_flips(&self, flips: &[bool]) -> PolyMatrix {
        PolyMatrix::antisymmetric_from_upper(&self.ctx, self.n, |i, j| {
            let k = self.upper_index(i, j);
            if flips[k] {
                -&self.upper[k]
            } else {
                self.upper[k].clone()
            }
        })
    }

    /// Find entry flips that put every 4x4 Pfaffian of the matrix inside
    /// the ideal of the given basis. Returns the flips when a consistent
    /// assignment exists; a final explicit check guards the GF(2)
    /// reasoning.
    pub fn resolve(&self, basis: &GroebnerBasis) -> Option<Vec<bool>> {
        let m = self.upper.len();
        // XOR equations over the flip variables
        let mut equations: Vec<(u64, bool)> = Vec::new();
        let subsets = four_subsets(self.n);
        for s in &subsets {
            let [a, b, c, d] = *s;
            let pairs = [
                (self.upper_index(a, b), self.upper_index(c, d)),
                (self.upper_index(a, c), self.upper_index(b, d)),
                (self.upper_index(a, d), self.upper_index(b, c)),
            ];
            let products: Vec<Polynomial> = pairs
                .iter()
                .map(|(p, q)| &self.upper[*p] * &self.upper[*q])
                .collect();
            let residues: Vec<Polynomial> =
                products.iter().map(|t| normal_form(t, basis)).collect();
            // valid sign triples (s1, s2, s3): s1 t1 - s2 t2 + s3 t3 in ideal
            let mut valid: Vec<[bool; 3]> = Vec::new();
            for bits in 0u8..8 {
                let sg = |k: u8| if bits >> k & 1 == 1 { -1i64 } else { 1 };
                let combo = &(&residues[0].scale(&super::support::int(sg(0)))
                    - &residues[1].scale(&super::support::int(sg(1))))
                    + &residues[2].scale(&super::support::int(sg(2)));
                if combo.is_zero() {
                    valid.push([bits & 1 == 1, bits >> 1 & 1 == 1, bits >> 2 & 1 == 1]);
                }
            }
            if valid.is_empty() {
                return None;
            }
            if valid.len() == 8 {
                continue;
            }
            // each sign s_k is the XOR of its two entry flips; constraints
            // live on the differences (s1 xor s2, s2 xor s3)
            let allowed: std::collections::BTreeSet<(bool, bool)> = valid
                .iter()
                .map(|v| (v[0] ^ v[1], v[1] ^ v[2]))
                .collect();
            let d12_mask: u64 = (1 << pairs[0].0)
                | (1 << pairs[0].1)
                | (1 << pairs[1].0)
                | (1 << pairs[1].1);
            let d23_mask: u64 = (1 << pairs[1].0)
                | (1 << pairs[1].1)
                | (1 << pairs[2].0)
                | (1 << pairs[2].1);
            match allowed.len() {
                1 => {
                    let (d12, d23) = *allowed.iter().next().expect("nonempty");
                    equations.push((d12_mask, d12));
                    equations.push((d23_mask, d23));
                }
                2 => {
                    let items: Vec<(bool, bool)> = allowed.iter().copied().collect();
                    if items[0].0 == items[1].0 {
                        equations.push((d12_mask, items[0].0));
                    } else if items[0].1 == items[1].1 {
                        equations.push((d23_mask, items[0].1));
                    } else {
                        // the two allowed pairs fix d12 xor d23
                        equations
                            .push((d12_mask ^ d23_mask, items[0].0 ^ items[0].1));
                    }
                }
                _ => {}
            }
        }

        let flips = solve_gf2(m, &equations)?;
        // explicit final check: all Pfaffians of the flipped matrix reduce
        // to zero
        let matrix = self.matrix_with_flips(&flips);
        let pfaffians = matrix.sub_pfaffians(4).expect("antisymmetric");
        if pfaffians
            .iter()
            .all(|p| normal_form(p, basis).is_zero())
        {
            Some(flips)
        } else {
            None
        }
    }
}

pub(crate) fn four_subsets(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// Solve a sparse XOR system; unknowns default to false where free.
fn solve_gf2(vars: usize, equations: &[(u64, bool)]) -> Option<Vec<bool>> {
    let mut rows: Vec<(u64, bool)> = equations.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, var)
    let mut used_rows = vec![false; rows.len()];
    for var in 0..vars {
        let Some(r) = (0..rows.len())
            .find(|&r| !used_rows[r] && rows[r].0 >> var & 1 == 1)
        else {
            continue;
        };
        used_rows[r] = true;
        pivots.push((r, var));
        let (pmask, pval) = rows[r];
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row.0 >> var & 1 == 1 {
                row.0 ^= pmask;
                row.1 ^= pval;
            }
        }
    }
    // inconsistency: empty mask with true value
    if rows.iter().any(|&(mask, val)| mask == 0 && val) {
        return None;
    }
    let mut solution = vec![false; vars];
    for &(r, var) in &pivots {
        // pivot rows were fully reduced against each other; free variables
        // are false, so the pivot value is the row constant
        let (mask, val) = rows[r];
        debug_assert!(mask >> var & 1 == 1);
        let mut acc = val;
        for v in 0..vars {
            if v != var && mask >> v & 1 == 1 {
                acc ^= solution[v];
            }
        }
        solution[var] = acc;
    }
    Some(solution)
}

/// Human-readable flip pattern, `+` for kept and `-` for flipped entries.
pub(crate) fn flips_label(flips: &[bool]) -> String {
    flips.iter().map(|&f| if f { '-' } else { '+' }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, Ideal};
    use crate::poly::{MonomialOrder, VariableContext};

    #[test]
    fn recovers_flipped_signs_of_a_pfaffian_system() {
        // take the generic antisymmetric 5x5, flip two entries, and ask
        // the resolver to recover a sign pattern whose Pfaffians lie in
        // the original Pfaffian ideal
        let spec = crate::varieties::grassmann_ideal(5).unwrap();
        let ctx = &spec.context;
        let basis = buchberger(&spec.ideal, &MonomialOrder::GrevLex);
        let mut upper = Vec::new();
        for i in 1..=5usize {
            for j in i + 1..=5 {
                upper.push(
                    crate::poly::Polynomial::variable_named(ctx, &format!("y_{i}{j}")).unwrap(),
                );
            }
        }
        // corrupt entries (1,3) and (2,5)
        upper[1] = -&upper[1];
        upper[6] = -&upper[6];
        let problem = SignedMatrixProblem {
            ctx: ctx.clone(),
            n: 5,
            upper,
        };
        let flips = problem.resolve(&basis).expect("signs are recoverable");
        let matrix = problem.matrix_with_flips(&flips);
        for pf in matrix.sub_pfaffians(4).unwrap() {
            assert!(crate::groebner::normal_form(&pf, &basis).is_zero());
        }
    }

    #[test]
    fn gf2_solver_handles_inconsistency() {
        let eqs = vec![(0b11u64, true), (0b11u64, false)];
        assert_eq!(solve_gf2(2, &eqs), None);
        let eqs = vec![(0b11u64, true)];
        let sol = solve_gf2(2, &eqs).unwrap();
        assert_eq!(sol[0] ^ sol[1], true);
    }

    #[test]
    fn unsolvable_matrix_is_rejected() {
        let ctx = VariableContext::new(["p", "q", "r", "s", "t", "w"]).unwrap();
        let vars: Vec<_> = (0..6)
            .map(|i| crate::poly::Polynomial::variable(&ctx, i))
            .collect();
        // target ideal unrelated to the matrix entries
        let target = Ideal::new(&ctx, [&vars[0] * &vars[0]]);
        let basis = buchberger(&target, &MonomialOrder::GrevLex);
        let problem = SignedMatrixProblem {
            ctx: ctx.clone(),
            n: 4,
            upper: vars[..6].to_vec(),
        };
        assert_eq!(problem.resolve(&basis), None);
    }
}
