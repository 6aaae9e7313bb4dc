//! t-graded Euler characteristic of the Koszul differential graded algebra
//! of the moment map, via constant-term extraction.
//!
//! Every coordinate of the doubled representation space carries t-weight 1
//! and the moment map t-weight 2. With one fugacity per gauge Cartan
//! direction, the coefficient of `t^k` is
//!
//! ```text
//! (Π_i v_i!)^{-1} · CT_z [ Π_i Π_{a≠b} (1 − z_{i,a}/z_{i,b})
//!     · (1 − t²)^{-1} Π_i Π_{a,b} (1 − t² z_{i,a}/z_{i,b})
//!     · Π_{arrows i→j} Π_{a,b} (1 − t z_{j,b}/z_{i,a})^{-1} (1 − t z_{i,a}/z_{j,b})^{-1} ]
//! ```
//!
//! where `CT_z` is the constant term in all fugacities. The integrand only
//! involves fugacity ratios, so the constant term over the full torus of
//! `Π GL(v_i)` computes the reduction by `Π GL(v_i)/C^×` once the single
//! `(1 − t²)^{-1}` central correction is applied; no explicit gauge fixing
//! is needed. Every geometric factor is expanded as a truncated series and
//! the pre-division constant term must be divisible by `Π v_i!`, which is
//! asserted on every run. When the moment map is flat this series is the
//! Hilbert series of the affine quiver scheme.

mod laurent;
mod oracle;

pub use laurent::LaurentPoly;
pub use oracle::abelian_invariant_oracle;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};

/// Cap on the total number of stored monomials during constant-term
/// extraction. In practice this admits total torus rank up to about 5 at
/// truncation order 10.
pub const MAX_TERMS: usize = 8_000_000;

/// Truncated series in t with Laurent-polynomial coefficients, one slot
/// per t-order.
struct CtSeries {
    slots: Vec<LaurentPoly>,
}

impl CtSeries {
    fn start(rank: usize, order: usize, initial: LaurentPoly) -> CtSeries {
        let mut slots = Vec::with_capacity(order + 1);
        slots.push(initial);
        for _ in 0..order {
            slots.push(LaurentPoly::zero(rank));
        }
        CtSeries { slots }
    }

    fn order(&self) -> usize {
        self.slots.len() - 1
    }

    /// Multiply by `(1 − t^step · z^exp)`.
    fn mul_poly_factor(&mut self, step: usize, exp: &[i32]) {
        let minus_one = BigInt::from(-1);
        for k in (step..=self.order()).rev() {
            let (lo, hi) = self.slots.split_at_mut(k);
            hi[0].add_shifted(&lo[k - step], exp, &minus_one);
        }
    }

    /// Multiply by `(1 − t · z^exp)^{-1}`: ascending in-place folding gives
    /// `new[k] = old[k] + z^exp · new[k−1]`.
    fn mul_geom_inverse(&mut self, exp: &[i32]) {
        let one = BigInt::one();
        for k in 1..=self.order() {
            let (lo, hi) = self.slots.split_at_mut(k);
            hi[0].add_shifted(&lo[k - 1], exp, &one);
        }
    }

    /// Drop monomials that cannot return to the origin within the
    /// remaining t-budget. Valid once every remaining factor moves at most
    /// one unit of exponent mass per t-power, which holds for the Koszul
    /// and matter factors (the measure is folded in first).
    fn prune(&mut self) {
        let order = self.order();
        for (k, slot) in self.slots.iter_mut().enumerate() {
            slot.prune((order - k) as i64);
        }
    }

    fn total_terms(&self) -> usize {
        self.slots.iter().map(|s| s.num_terms()).sum()
    }

    fn check_budget(&self) -> Result<()> {
        let total = self.total_terms();
        if total > MAX_TERMS {
            return Err(Error::Capacity { needed: total as u128, budget: MAX_TERMS as u128 });
        }
        Ok(())
    }

    fn constant_terms(&self) -> Vec<BigInt> {
        self.slots.iter().map(|s| s.constant_coefficient()).collect()
    }
}

struct TorusLayout {
    rank: usize,
    offsets: Vec<usize>,
}

impl TorusLayout {
    fn new(v: &DimVector) -> TorusLayout {
        let mut offsets = Vec::with_capacity(v.len());
        let mut acc = 0usize;
        for i in 0..v.len() {
            offsets.push(acc);
            acc += v.get(i) as usize;
        }
        TorusLayout { rank: acc, offsets }
    }

    /// Exponent vector of `z_{i,a} / z_{j,b}`.
    fn ratio(&self, i: usize, a: usize, j: usize, b: usize) -> Vec<i32> {
        let mut e = vec![0i32; self.rank];
        e[self.offsets[i] + a] += 1;
        e[self.offsets[j] + b] -= 1;
        e
    }
}

fn weyl_measure(q: &Quiver, v: &DimVector, layout: &TorusLayout) -> LaurentPoly {
    let mut measure = LaurentPoly::one(layout.rank);
    let minus_one = BigInt::from(-1);
    for i in 0..q.len() {
        let vi = v.get(i) as usize;
        for a in 0..vi {
            for b in 0..vi {
                if a == b {
                    continue;
                }
                let mut factor = LaurentPoly::one(layout.rank);
                factor.add_term(&layout.ratio(i, a, i, b), &minus_one);
                measure = measure.mul(&factor);
            }
        }
    }
    measure
}

fn series_setup(
    q: &Quiver,
    v: &DimVector,
    order: usize,
    prune: bool,
) -> Result<(TorusLayout, CtSeries)> {
    q.check_len(v.len())?;
    if v.is_zero() {
        return Err(Error::ZeroDimVector);
    }
    let layout = TorusLayout::new(v);
    let mut series = CtSeries::start(layout.rank, order, weyl_measure(q, v, &layout));
    if prune {
        series.prune();
    }
    series.check_budget()?;
    Ok((layout, series))
}

fn fold_matter(
    q: &Quiver,
    v: &DimVector,
    layout: &TorusLayout,
    series: &mut CtSeries,
    prune: bool,
) -> Result<()> {
    for (i, j) in q.arrow_pairs() {
        for a in 0..v.get(i) as usize {
            for b in 0..v.get(j) as usize {
                series.mul_geom_inverse(&layout.ratio(j, b, i, a));
                series.mul_geom_inverse(&layout.ratio(i, a, j, b));
                if prune {
                    series.prune();
                }
                series.check_budget()?;
            }
        }
    }
    Ok(())
}

fn extract(q: &Quiver, v: &DimVector, series: &CtSeries) -> Result<Vec<BigInt>> {
    let mut weyl_order = BigInt::one();
    for i in 0..q.len() {
        for f in 1..=v.get(i) {
            weyl_order *= BigInt::from(f);
        }
    }
    let mut out = Vec::new();
    for (k, ct) in series.constant_terms().into_iter().enumerate() {
        let (quotient, rem) = num_integer::Integer::div_rem(&ct, &weyl_order);
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "constant term {ct} at order {k} is not divisible by the Weyl group order {weyl_order}"
            )));
        }
        out.push(quotient);
    }
    Ok(out)
}

/// Coefficients `c_0 … c_K` of the Koszul Euler characteristic.
pub fn koszul_euler_series(q: &Quiver, v: &DimVector, order: usize) -> Result<Vec<BigInt>> {
    koszul_euler_series_impl(q, v, order, true)
}

/// `prune = false` recomputes without the admissible-pruning optimization;
/// kept as a regression handle.
pub(crate) fn koszul_euler_series_impl(
    q: &Quiver,
    v: &DimVector,
    order: usize,
    prune: bool,
) -> Result<Vec<BigInt>> {
    let (layout, mut series) = series_setup(q, v, order, prune)?;
    // central correction: the full diagonal contributes (1-t^2)^(Σ v_i),
    // one power of which is removed for the quotient by the scaling C^×
    let zero_exp = vec![0i32; layout.rank];
    for _ in 1..v.total() {
        series.mul_poly_factor(2, &zero_exp);
    }
    for i in 0..q.len() {
        let vi = v.get(i) as usize;
        for a in 0..vi {
            for b in 0..vi {
                if a == b {
                    continue;
                }
                series.mul_poly_factor(2, &layout.ratio(i, a, i, b));
                if prune {
                    series.prune();
                }
                series.check_budget()?;
            }
        }
    }
    fold_matter(q, v, &layout, &mut series, prune)?;
    extract(q, v, &series)
}

/// Hilbert series of the invariants of the doubled representation space
/// (same integrand without the Koszul numerator); baseline and debugging
/// aid.
pub fn matter_series(q: &Quiver, v: &DimVector, order: usize) -> Result<Vec<BigInt>> {
    let (layout, mut series) = series_setup(q, v, order, true)?;
    fold_matter(q, v, &layout, &mut series, true)?;
    extract(q, v, &series)
}

/// Molien series of `Sym^n(C²)` by the cycle index of the symmetric group:
/// `Σ_{λ ⊢ n} z_λ^{-1} Π_{parts c} (1 − t^c)^{-2}`. Independent oracle for
/// the framed Jordan quiver.
pub fn symmetric_power_series(n: usize, order: usize) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Err(Error::Invalid("symmetric power needs n ≥ 1".into()));
    }
    let mut total = vec![BigRational::zero(); order + 1];
    let mut partition: Vec<usize> = Vec::new();
    partitions_rec(n, n, &mut partition, &mut |parts: &[usize]| {
        // z_lambda = Π c^{m_c} m_c!
        let mut z = BigInt::one();
        let mut run = 0usize;
        for (idx, &c) in parts.iter().enumerate() {
            run += 1;
            if idx + 1 == parts.len() || parts[idx + 1] != c {
                for f in 1..=run {
                    z *= BigInt::from(f);
                }
                z *= BigInt::from(c).pow(run as u32);
                run = 0;
            }
        }
        // Π_c 1/(1-t^c)^2 truncated: coefficient of t^(c·m) is m+1
        let mut series = vec![BigRational::zero(); order + 1];
        series[0] = BigRational::one();
        for &c in parts {
            let mut next = vec![BigRational::zero(); order + 1];
            for (k, cur) in series.iter().enumerate() {
                if cur.is_zero() {
                    continue;
                }
                for m in 0..=(order - k) / c {
                    next[k + c * m] += cur * BigRational::from_integer((m as i64 + 1).into());
                }
            }
            series = next;
        }
        let weight = BigRational::new(BigInt::one(), z);
        for (t, s) in total.iter_mut().zip(&series) {
            *t += &weight * s;
        }
    });
    total
        .into_iter()
        .map(|c| {
            if c.denom().is_one() {
                Ok(c.to_integer())
            } else {
                Err(Error::Internal(format!("cycle-index sum {c} is not an integer")))
            }
        })
        .collect()
}

fn partitions_rec(left: usize, max: usize, acc: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if left == 0 {
        emit(acc);
        return;
    }
    for part in (1..=left.min(max)).rev() {
        acc.push(part);
        partitions_rec(left - part, part, acc, emit);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{frame, FramingVector, ParamPair};

    fn dim(v: &[i64]) -> DimVector {
        DimVector::new(v.to_vec()).unwrap()
    }

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn framed(q: &Quiver, v: &[i64], d: &[i64]) -> (Quiver, DimVector) {
        let (fq, fv, _) = frame(
            q,
            &dim(v),
            &FramingVector::new(d.to_vec()).unwrap(),
            &ParamPair::zero(v.len()),
        )
        .unwrap();
        (fq, fv)
    }

    fn jordan() -> Quiver {
        Quiver::build(&["1"], &[("1", "1")]).unwrap()
    }

    #[test]
    fn unframed_jordan_rank_one_is_a_plane() {
        // trivial gauge group: free ring on two weight-1 coordinates
        let c = koszul_euler_series(&jordan(), &dim(&[1]), 5).unwrap();
        assert_eq!(c, bi(&[1, 2, 3, 4, 5, 6]));
    }

    #[test]
    fn framed_jordan_rank_one() {
        let (q, v) = framed(&jordan(), &[1], &[1]);
        assert_eq!(koszul_euler_series(&q, &v, 6).unwrap(), bi(&[1, 2, 3, 4, 5, 6, 7]));
        assert_eq!(
            abelian_invariant_oracle(&q, &v, 6).unwrap(),
            bi(&[1, 2, 3, 4, 5, 6, 7])
        );
    }

    #[test]
    fn doubled_framing_on_a_point() {
        let point = Quiver::build(&["1"], &[]).unwrap();
        let (q, v) = framed(&point, &[1], &[2]);
        assert_eq!(koszul_euler_series(&q, &v, 6).unwrap(), bi(&[1, 0, 3, 0, 5, 0, 7]));
    }

    #[test]
    fn framed_jordan_rank_two_matches_cycle_index() {
        let (q, v) = framed(&jordan(), &[2], &[1]);
        let molien = koszul_euler_series(&q, &v, 4).unwrap();
        assert_eq!(molien, bi(&[1, 2, 6, 10, 19]));
        assert_eq!(molien, symmetric_power_series(2, 4).unwrap());
    }

    #[test]
    fn matter_series_examples() {
        assert_eq!(matter_series(&jordan(), &dim(&[1]), 4).unwrap(), bi(&[1, 2, 3, 4, 5]));
        let (q, v) = framed(&jordan(), &[1], &[1]);
        assert_eq!(matter_series(&q, &v, 5).unwrap(), bi(&[1, 2, 4, 6, 9, 12]));
        // c_0 = 1 always
        let (q, v) = framed(&jordan(), &[2], &[2]);
        assert_eq!(matter_series(&q, &v, 0).unwrap(), bi(&[1]));
    }

    #[test]
    fn symmetric_power_examples() {
        assert_eq!(symmetric_power_series(1, 4).unwrap(), bi(&[1, 2, 3, 4, 5]));
        assert_eq!(symmetric_power_series(2, 4).unwrap(), bi(&[1, 2, 6, 10, 19]));
        assert_eq!(symmetric_power_series(2, 0).unwrap(), bi(&[1]));
        assert!(symmetric_power_series(0, 3).is_err());
    }

    #[test]
    fn orientation_reversal_is_invisible() {
        let q = Quiver::build(
            &["1", "2", "∞"],
            &[("1", "2"), ("2", "1"), ("∞", "1")],
        )
        .unwrap();
        let v = dim(&[1, 1, 1]);
        assert_eq!(
            koszul_euler_series(&q, &v, 5).unwrap(),
            koszul_euler_series(&q.reversed(), &v, 5).unwrap()
        );
    }

    #[test]
    fn pruning_does_not_change_results() {
        let (q, v) = framed(&jordan(), &[2], &[1]);
        assert_eq!(
            koszul_euler_series_impl(&q, &v, 3, true).unwrap(),
            koszul_euler_series_impl(&q, &v, 3, false).unwrap()
        );
        let cycle =
            Quiver::build(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("3", "1")]).unwrap();
        let (q, v) = framed(&cycle, &[1, 1, 1], &[1, 0, 0]);
        assert_eq!(
            koszul_euler_series_impl(&q, &v, 4, true).unwrap(),
            koszul_euler_series_impl(&q, &v, 4, false).unwrap()
        );
    }

    #[test]
    fn rejects_zero_dimension_vector() {
        assert!(koszul_euler_series(&jordan(), &dim(&[0]), 3).is_err());
    }
}
