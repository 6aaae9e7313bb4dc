//! Sparse multivariate Laurent polynomials with arbitrary-precision
//! integer coefficients, keyed by exponent vectors of a fixed rank.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

/// Sparse Laurent polynomial. Zero coefficients are never stored and all
/// exponent vectors share the same length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    rank: usize,
    terms: HashMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> LaurentPoly {
        LaurentPoly { rank, terms: HashMap::new() }
    }

    pub fn one(rank: usize) -> LaurentPoly {
        let mut terms = HashMap::new();
        terms.insert(vec![0; rank], BigInt::from(1));
        LaurentPoly { rank, terms }
    }

    pub fn monomial(exp: Vec<i32>, coeff: BigInt) -> LaurentPoly {
        let rank = exp.len();
        let mut terms = HashMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of the zero exponent vector.
    pub fn constant_coefficient(&self) -> BigInt {
        self.terms.get(&vec![0; self.rank]).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exp: &[i32], coeff: &BigInt) {
        debug_assert_eq!(exp.len(), self.rank);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(exp);
                }
            }
            None => {
                self.terms.insert(exp.to_vec(), coeff.clone());
            }
        }
    }

    /// `self += scale · z^shift · other`.
    pub fn add_shifted(&mut self, other: &LaurentPoly, shift: &[i32], scale: &BigInt) {
        debug_assert_eq!(other.rank, self.rank);
        if scale.is_zero() {
            return;
        }
        let mut exp = vec![0i32; self.rank];
        for (e, c) in other.terms.iter() {
            for (a, (b, s)) in exp.iter_mut().zip(e.iter().zip(shift)) {
                *a = b + s;
            }
            let scaled = c * scale;
            self.add_term(&exp, &scaled);
        }
    }

    /// Full product.
    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(other.rank, self.rank);
        let mut out = LaurentPoly::zero(self.rank);
        let (small, big) =
            if self.num_terms() <= other.num_terms() { (self, other) } else { (other, self) };
        for (e, c) in small.terms.iter() {
            out.add_shifted(big, e, c);
        }
        out
    }

    /// Drop every monomial whose positive or negative exponent mass
    /// exceeds `allowance`. Each later factor step of t-cost m can move at
    /// most m units of exponent mass, so a monomial that cannot return to
    /// the origin within the remaining t-budget never contributes to the
    /// constant term.
    pub fn prune(&mut self, allowance: i64) {
        self.terms.retain(|e, _| {
            let pos: i64 = e.iter().filter(|&&x| x > 0).map(|&x| x as i64).sum();
            let neg: i64 = e.iter().filter(|&&x| x < 0).map(|&x| -x as i64).sum();
            pos.max(neg) <= allowance
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn arithmetic_and_cancellation() {
        // (1 - z)(1 + z) = 1 - z^2
        let mut a = LaurentPoly::one(1);
        a.add_term(&[1], &bi(-1));
        let mut b = LaurentPoly::one(1);
        b.add_term(&[1], &bi(1));
        let p = a.mul(&b);
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.constant_coefficient(), bi(1));
        let mut expect = LaurentPoly::one(1);
        expect.add_term(&[2], &bi(-1));
        assert_eq!(p, expect);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = LaurentPoly::one(2);
        p.add_term(&[0, 0], &bi(-1));
        assert!(p.is_zero());
    }

    #[test]
    fn constant_term_of_ratio_product() {
        // (1 - z/w)(1 - w/z) = 1 - z/w - w/z + 1: constant coefficient 2
        let mut a = LaurentPoly::one(2);
        a.add_term(&[1, -1], &bi(-1));
        let mut b = LaurentPoly::one(2);
        b.add_term(&[-1, 1], &bi(-1));
        assert_eq!(a.mul(&b).constant_coefficient(), bi(2));
    }

    #[test]
    fn prune_keeps_returnable_monomials() {
        let mut p = LaurentPoly::zero(2);
        p.add_term(&[0, 0], &bi(1));
        p.add_term(&[2, -2], &bi(1));
        p.add_term(&[3, 0], &bi(1));
        p.prune(2);
        assert_eq!(p.num_terms(), 2);
        p.prune(1);
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.constant_coefficient(), bi(1));
    }
}
