use smallvec::SmallVec;

/// Exponent vector of a power product, one entry per context variable.
///
/// The derived `Ord` is the structural (exponent-lexicographic) order used
/// only for canonical term storage; ranking monomials for division and
/// Groebner computations always goes through [`super::MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 16]>,
}

impl Monomial {
    /// The monomial 1 in `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, n),
        }
    }

    /// The single variable `i`.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut m = Self::unit(n);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Total degree over the variables selected by `mask`.
    pub fn degree_masked(&self, mask: u64) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e as u32)
            .sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact division; `None` when some exponent would go negative.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.len(), other.len());
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of variables appearing with positive exponent. Contexts in
    /// this crate never exceed 64 variables.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.exps.len() <= 64);
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Re-index exponents into a smaller context; `None` when the monomial
    /// mentions a dropped variable.
    pub fn reindex(&self, map: &[Option<usize>], new_len: usize) -> Option<Self> {
        let mut exps = SmallVec::from_elem(0u16, new_len);
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[map[i]?] = e;
            }
        }
        Some(Monomial { exps })
    }

    /// Same exponents with `extra` zero entries appended.
    pub fn extend(&self, extra: usize) -> Self {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial { exps }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1, 0]);
        let b = Monomial::from_exponents(&[1, 1, 0]);
        assert_eq!(a.try_div(&b), Some(Monomial::from_exponents(&[1, 0, 0])));
        assert_eq!(b.try_div(&a), None);
        assert_eq!(
            a.lcm(&Monomial::from_exponents(&[0, 3, 1])),
            Monomial::from_exponents(&[2, 3, 1])
        );
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
    }

    #[test]
    fn support_and_coprimality() {
        let a = Monomial::from_exponents(&[1, 0, 2]);
        let b = Monomial::from_exponents(&[0, 5, 0]);
        assert_eq!(a.support_mask(), 0b101);
        assert!(a.is_coprime_with(&b));
        assert!(!a.is_coprime_with(&a));
    }
}
