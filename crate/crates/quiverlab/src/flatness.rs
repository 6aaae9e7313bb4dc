//! Flatness of the moment map by the decomposition criterion.
//!
//! The moment map of `(Q, v)` is flat exactly when
//! `p(v) ≥ Σ_t p(v^(t))` for every decomposition of `v` into nonzero
//! parts. The certificate below evaluates the right-hand maximum with a
//! memoized recursion over the box `0 ≤ w ≤ v`, so `flat ⇔ best_sum = p(v)`,
//! and reconstructs a maximizing decomposition when flatness fails.
//!
//! Decompositions range over all nonzero vectors in the box; no
//! root-system pruning is assumed. The box size `Π(v_i + 1)` is guarded by
//! an explicit state budget instead of running unbounded.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::quiver::{p_of_slice, DimVector, IntMatrix, ParamPair, Quiver};

/// Default cap on the number of DP states `Π(v_i + 1)`.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Outcome of the flatness test.
///
/// `flat ⇔ best_sum = p_value`; when `flat` is false, `witness` holds
/// nonzero parts summing to `v` with `Σ p(parts) = best_sum > p(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatnessReport {
    pub flat: bool,
    pub p_value: i64,
    pub best_sum: i64,
    pub witness: Option<Vec<DimVector>>,
}

/// Mixed-radix enumeration of the box `0 ≤ w ≤ v`, with vertex 0 as the
/// fastest-varying digit. Componentwise order refines index order, so a
/// state's proper subvectors always precede it.
struct BoxIndex {
    dims: Vec<i64>,
    stride: Vec<usize>,
    size: usize,
}

impl BoxIndex {
    fn new(v: &DimVector, budget: u128) -> Result<BoxIndex> {
        let dims = v.entries().to_vec();
        let mut size: u128 = 1;
        for &d in &dims {
            size = size.saturating_mul(d as u128 + 1);
            if size > budget {
                return Err(Error::Capacity { needed: size, budget });
            }
        }
        let mut stride = Vec::with_capacity(dims.len());
        let mut acc = 1usize;
        for &d in &dims {
            stride.push(acc);
            acc *= d as usize + 1;
        }
        Ok(BoxIndex { dims, stride, size: acc })
    }

    fn decode(&self, mut idx: usize) -> Vec<i64> {
        let mut w = vec![0i64; self.dims.len()];
        for i in (0..self.dims.len()).rev() {
            w[i] = (idx / self.stride[i]) as i64;
            idx %= self.stride[i];
        }
        w
    }

    /// Advance `w` to the next subvector of the state with index `top`,
    /// returning its index, or `None` when exhausted.
    fn next_sub(&self, w: &mut [i64], idx: usize, top: &[i64]) -> Option<usize> {
        let mut idx = idx;
        for i in 0..w.len() {
            if w[i] < top[i] {
                w[i] += 1;
                return Some(idx + self.stride[i]);
            }
            idx -= w[i] as usize * self.stride[i];
            w[i] = 0;
        }
        None
    }
}

/// Decomposition table over the box of `v`: per state `w` it records
/// `p(w)`, the best decomposition sum `g(w)`, the best proper-split sum,
/// and one argmax split for witness reconstruction.
struct DecompTable {
    box_: BoxIndex,
    p: Vec<i64>,
    g: Vec<i64>,
    split_best: Vec<i64>,
    split_arg: Vec<usize>,
}

const NO_SPLIT: i64 = i64::MIN;

impl DecompTable {
    /// Build the table. `admissible` restricts states (splits stay inside
    /// the admissible sublattice); index 0 and inadmissible states keep
    /// `g = NO_SPLIT` sentinels and are never consulted.
    fn build(
        cartan: &IntMatrix,
        v: &DimVector,
        budget: u128,
        admissible: impl Fn(&[i64]) -> bool,
    ) -> Result<DecompTable> {
        let box_ = BoxIndex::new(v, budget)?;
        let n = box_.size;
        let mut p = vec![0i64; n];
        let mut g = vec![NO_SPLIT; n];
        let mut split_best = vec![NO_SPLIT; n];
        let mut split_arg = vec![0usize; n];
        let mut ok = vec![false; n];

        for idx in 1..n {
            let w = box_.decode(idx);
            if !admissible(&w) {
                continue;
            }
            ok[idx] = true;
            p[idx] = p_of_slice(cartan, &w);

            // enumerate proper splits w' + w'' = w with idx(w') <= idx(w'')
            let mut sub = vec![0i64; w.len()];
            let mut sub_idx = 0usize;
            while let Some(next) = box_.next_sub(&mut sub, sub_idx, &w) {
                sub_idx = next;
                if 2 * sub_idx > idx {
                    break;
                }
                let rest = idx - sub_idx;
                if rest == 0 || !ok[sub_idx] || !ok[rest] {
                    continue;
                }
                let cand = g[sub_idx] + g[rest];
                if cand > split_best[idx] {
                    split_best[idx] = cand;
                    split_arg[idx] = sub_idx;
                }
            }
            g[idx] = p[idx].max(split_best[idx]);
        }
        Ok(DecompTable { box_, p, g, split_best, split_arg })
    }

    fn top(&self) -> usize {
        self.box_.size - 1
    }

    /// Parts of one maximizing decomposition, splitting while a proper
    /// split strictly beats `p`.
    fn witness_parts(&self, idx: usize, out: &mut Vec<DimVector>) {
        if self.split_best[idx] > self.p[idx] {
            let a = self.split_arg[idx];
            self.witness_parts(a, out);
            self.witness_parts(idx - a, out);
        } else {
            out.push(DimVector::new(self.box_.decode(idx)).expect("box states are nonnegative"));
        }
    }

    /// States whose `p` strictly dominates every proper decomposition;
    /// these are the atoms every maximizing decomposition refines into.
    fn is_atom(&self, idx: usize) -> bool {
        self.split_best[idx] == NO_SPLIT || self.p[idx] > self.split_best[idx]
    }
}

/// Decide flatness of the moment map of `(Q, v)` by the decomposition
/// criterion, with the DP state count capped by `budget`.
pub fn flatness_certificate(q: &Quiver, v: &DimVector, budget: u128) -> Result<FlatnessReport> {
    q.check_len(v.len())?;
    if v.is_zero() {
        return Err(Error::ZeroDimVector);
    }
    let table = DecompTable::build(&q.cartan_matrix(), v, budget, |_| true)?;
    let top = table.top();
    let p_value = table.p[top];
    let best_sum = table.g[top];
    let flat = best_sum == p_value;
    let witness = if flat {
        None
    } else {
        let mut parts = Vec::new();
        table.witness_parts(top, &mut parts);
        parts.sort();
        parts.reverse();
        debug_assert_eq!(parts.iter().fold(DimVector::zero(v.len()), |a, b| a.add(b)), *v);
        Some(parts)
    };
    Ok(FlatnessReport { flat, p_value, best_sum, witness })
}

/// All decompositions of `v` into at least two atomic parts achieving
/// `best_sum`, as sorted multisets. Atomic parts are the vectors whose `p`
/// strictly dominates every proper decomposition, i.e. the dimension
/// vectors that cannot be split without losing p-mass; decompositions into
/// atoms are exactly the representation types of the zero-parameter quiver
/// scheme, and every maximizing decomposition refines to one of them.
pub fn equality_witnesses(q: &Quiver, v: &DimVector, budget: u128) -> Result<Vec<Vec<DimVector>>> {
    q.check_len(v.len())?;
    if v.is_zero() {
        return Err(Error::ZeroDimVector);
    }
    let table = DecompTable::build(&q.cartan_matrix(), v, budget, |_| true)?;
    let top = table.top();
    let search = WitnessSearch {
        table: &table,
        atoms: (1..=top).filter(|&i| table.is_atom(i)).collect(),
        target: table.g[top],
    };
    let mut out = Vec::new();
    search.dfs(top, 0, top, &mut Vec::new(), &mut out);
    for parts in &mut out {
        parts.sort();
        parts.reverse();
    }
    out.sort();
    Ok(out)
}

struct WitnessSearch<'a> {
    table: &'a DecompTable,
    atoms: Vec<usize>,
    target: i64,
}

impl WitnessSearch<'_> {
    /// Enumerate multisets of atoms summing to `remaining`, parts chosen in
    /// nonincreasing index order, recording those that hit the target sum.
    fn dfs(
        &self,
        remaining: usize,
        acc: i64,
        max_part: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<DimVector>>,
    ) {
        let table = self.table;
        if remaining == 0 {
            if acc == self.target && stack.len() >= 2 {
                let parts: Vec<DimVector> = stack
                    .iter()
                    .map(|&i| DimVector::new(table.box_.decode(i)).unwrap())
                    .collect();
                out.push(parts);
            }
            return;
        }
        // upper bound: finishing with any decomposition of the remainder
        if acc + table.g[remaining] < self.target {
            return;
        }
        let rem = table.box_.decode(remaining);
        for &a in self.atoms.iter().rev() {
            if a > max_part || a > remaining {
                continue;
            }
            let part = table.box_.decode(a);
            if part.iter().zip(&rem).any(|(x, y)| x > y) {
                continue;
            }
            stack.push(a);
            self.dfs(remaining - a, acc + table.p[a], a, stack, out);
            stack.pop();
        }
    }
}

/// Strict superadditivity of `p` over decompositions orthogonal to both
/// parameters: for every decomposition of `v` into `r ≥ 2` nonzero parts
/// with every part annihilated by λ and θ, `p(v) > Σ p(parts)`.
/// Vacuously true when no such decomposition exists.
pub fn sigma_condition(
    q: &Quiver,
    v: &DimVector,
    params: &ParamPair,
    budget: u128,
) -> Result<bool> {
    q.check_len(v.len())?;
    q.check_len(params.len())?;
    if v.is_zero() {
        return Err(Error::ZeroDimVector);
    }
    let orthogonal = |w: &[i64]| {
        params.lambda_dot(w).is_zero() && params.theta_dot(w).is_zero()
    };
    let table = DecompTable::build(&q.cartan_matrix(), v, budget, orthogonal)?;
    let top = table.top();
    if !orthogonal(v.entries()) {
        // v itself is not in the orthogonal sublattice, so no admissible
        // decomposition exists
        return Ok(true);
    }
    Ok(table.split_best[top] == NO_SPLIT || table.p[top] > table.split_best[top])
}

/// Genericity of `(θ, λ)` for `v`: no `v'` with `0 < v' < v`, `v` not
/// proportional to `v'`, is annihilated by both θ and λ. Returns the first
/// offender in box-enumeration order (vertex 0 fastest) otherwise.
pub fn is_generic(
    v: &DimVector,
    params: &ParamPair,
    budget: u128,
) -> Result<(bool, Option<DimVector>)> {
    if v.len() != params.len() {
        return Err(Error::DimensionMismatch { expected: v.len(), got: params.len() });
    }
    if v.is_zero() {
        return Err(Error::ZeroDimVector);
    }
    let box_ = BoxIndex::new(v, budget)?;
    for idx in 1..box_.size - 1 {
        let w = box_.decode(idx);
        if proportional(v.entries(), &w) {
            continue;
        }
        if params.theta_dot(&w).is_zero() && params.lambda_dot(&w).is_zero() {
            return Ok((false, Some(DimVector::new(w)?)));
        }
    }
    Ok((true, None))
}

/// Proportionality over the rationals, by cross products.
pub(crate) fn proportional(v: &[i64], w: &[i64]) -> bool {
    assert_eq!(v.len(), w.len());
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            if v[i] as i128 * w[j] as i128 != v[j] as i128 * w[i] as i128 {
                return false;
            }
        }
    }
    true
}

/// `true` iff the gcd of the entries is 1.
pub fn is_indivisible(v: &DimVector) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::ZeroDimVector);
    }
    let g = v.entries().iter().fold(0i64, |acc, &e| num_integer::gcd(acc, e));
    Ok(g == 1)
}

/// `2·p(v)`: the quiver-scheme dimension when the moment map is flat.
pub fn expected_dimension(q: &Quiver, v: &DimVector) -> Result<i64> {
    Ok(2 * q.p(v)?)
}

/// λ/θ orthogonality helper shared with the slices module.
pub(crate) fn is_orthogonal_pair(params: &ParamPair, w: &[i64]) -> (bool, BigRational, BigRational) {
    let l = params.lambda_dot(w);
    let t = params.theta_dot(w);
    let ok = l.is_zero() && t.is_zero();
    (ok, l, t)
}
