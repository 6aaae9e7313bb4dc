//! Brute-force degree-by-degree oracle for abelian gauge data.
//!
//! For dimension vectors with every entry 0 or 1, the Hilbert series of
//! the invariant ring of the moment-map fiber can be counted head-on: the
//! torus-weight-zero monomials of each degree, minus the rank of the slice
//! of the moment-map ideal inside that weight-zero subspace, computed by
//! exact rational elimination. Deliberately shares nothing with the
//! constant-term engine.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};

/// Coefficients `c_0 … c_K` of the invariant Hilbert series of the
/// moment-map fiber, valid when every `v_i ≤ 1`.
pub fn abelian_invariant_oracle(q: &Quiver, v: &DimVector, order: usize) -> Result<Vec<BigInt>> {
    q.check_len(v.len())?;
    if v.is_zero() {
        return Err(Error::ZeroDimVector);
    }
    if let Some(i) = v.entries().iter().position(|&x| x > 1) {
        return Err(Error::Invalid(format!(
            "abelian oracle needs all dimensions ≤ 1, found {} at vertex `{}`",
            v.get(i),
            q.label(i)
        )));
    }
    let n = q.len();
    // doubled-quiver coordinates over the support: x_a with weight
    // e_head − e_tail, then its cotangent partner with the opposite weight
    let mut weights: Vec<Vec<i64>> = Vec::new();
    let mut coord_arrows: Vec<(usize, usize, bool)> = Vec::new(); // (tail, head, is_cotangent)
    for (t, h) in q.arrow_pairs() {
        if v.get(t) == 0 || v.get(h) == 0 {
            continue;
        }
        let mut w = vec![0i64; n];
        w[h] += 1;
        w[t] -= 1;
        weights.push(w.clone());
        coord_arrows.push((t, h, false));
        weights.push(w.iter().map(|x| -x).collect());
        coord_arrows.push((t, h, true));
    }
    let n_coords = weights.len();

    let weight_zero_monomials = |degree: usize| -> Vec<Vec<u32>> {
        fn rec(
            exp: &mut [u32],
            i: usize,
            left: u32,
            weights: &[Vec<i64>],
            n: usize,
            out: &mut Vec<Vec<u32>>,
        ) {
            if i + 1 == exp.len() {
                exp[i] = left;
                let mut w = vec![0i64; n];
                for (e, wt) in exp.iter().zip(weights) {
                    for (a, b) in w.iter_mut().zip(wt) {
                        *a += *e as i64 * b;
                    }
                }
                if w.iter().all(|&x| x == 0) {
                    out.push(exp.to_vec());
                }
                exp[i] = 0;
                return;
            }
            for e in 0..=left {
                exp[i] = e;
                rec(exp, i + 1, left - e, weights, n, out);
            }
            exp[i] = 0;
        }
        let mut out = Vec::new();
        if n_coords == 0 {
            if degree == 0 {
                out.push(Vec::new());
            }
            return out;
        }
        let mut exp = vec![0u32; n_coords];
        rec(&mut exp, 0, degree as u32, &weights, n, &mut out);
        out.sort();
        out
    };

    // moment component at vertex i: sum over arrows with head i of x·y
    // minus sum over arrows with tail i of x·y; loops cancel outright
    let mut mu: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n]; // (pair base coord, sign)
    for (c, &(t, h, cot)) in coord_arrows.iter().enumerate() {
        if cot {
            continue;
        }
        if h != t {
            mu[h].push((c, 1));
            mu[t].push((c, -1));
        }
    }

    let mut coeffs = Vec::with_capacity(order + 1);
    for degree in 0..=order {
        let basis = weight_zero_monomials(degree);
        if degree < 2 {
            coeffs.push(BigInt::from(basis.len()));
            continue;
        }
        let index: HashMap<&Vec<u32>, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let lower = weight_zero_monomials(degree - 2);
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for terms in mu.iter().filter(|t| !t.is_empty()) {
            for m in &lower {
                let mut row = vec![BigRational::zero(); basis.len()];
                let mut nonzero = false;
                for &(c, sign) in terms {
                    let mut key = m.clone();
                    key[c] += 1;
                    key[c + 1] += 1;
                    let col = *index.get(&key).expect("product of weight-zero terms stays weight-zero");
                    row[col] += BigRational::from_integer(sign.into());
                    nonzero = true;
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
        let rank = rank_rational(&mut rows);
        coeffs.push(BigInt::from(basis.len() - rank));
    }
    Ok(coeffs)
}

/// Rank of a dense rational matrix by Gaussian elimination with largest-
/// magnitude pivoting. Destroys the input.
pub fn rank_rational(rows: &mut [Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let n_cols = rows[0].len();
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == rows.len() {
            break;
        }
        let pivot = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .max_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / rows[rank][col].clone();
        for r in (rank + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() * &inv;
            for c in col..n_cols {
                let delta = factor.clone() * &rows[rank][c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}
