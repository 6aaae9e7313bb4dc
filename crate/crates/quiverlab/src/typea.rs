//! Finite and affine type-A quivers: the interval/arc flatness criterion
//! for framed quivers, the constructive decomposition of test vectors,
//! and the W-algebra parameter correspondence.

use crate::error::{Error, Result};
use crate::quiver::{DimVector, FramingVector, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Path,
    Cycle,
}

impl std::str::FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Shape> {
        match s {
            "path" => Ok(Shape::Path),
            "cycle" => Ok(Shape::Cycle),
            other => Err(Error::Invalid(format!("unknown shape `{other}` (expected path|cycle)"))),
        }
    }
}

/// Type-A quiver with the fixed orientation `1 → 2 → … → n` (a cycle adds
/// `n → 1`). The one-vertex cycle is the Jordan quiver: a single loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeAQuiver {
    pub n: usize,
    pub shape: Shape,
}

impl TypeAQuiver {
    pub fn new(n: usize, shape: Shape) -> Result<TypeAQuiver> {
        if n == 0 {
            return Err(Error::Invalid("type-A quiver needs at least one vertex".into()));
        }
        Ok(TypeAQuiver { n, shape })
    }

    /// Materialize the quiver with labels `"1" … "n"`.
    pub fn quiver(&self) -> Quiver {
        let labels: Vec<String> = (1..=self.n).map(|i| i.to_string()).collect();
        let mut adjacency = vec![vec![0i64; self.n]; self.n];
        for i in 0..self.n.saturating_sub(1) {
            adjacency[i][i + 1] += 1;
        }
        if self.shape == Shape::Cycle {
            adjacency[self.n - 1][0] += 1;
        }
        Quiver::from_adjacency(labels, adjacency).expect("type-A adjacency is well formed")
    }

    /// All-ones vector (the imaginary root of the cycle).
    pub fn delta(&self) -> DimVector {
        DimVector::new(vec![1; self.n]).unwrap()
    }
}

/// Nonempty vertex subsets whose induced undirected subgraph is connected:
/// intervals for paths, arcs and the full set for cycles. Ordered by size,
/// then by starting vertex.
pub fn connected_subsets(q: &TypeAQuiver) -> Vec<Vec<usize>> {
    let n = q.n;
    let mut out = Vec::new();
    match q.shape {
        Shape::Path => {
            for size in 1..=n {
                for start in 0..=(n - size) {
                    out.push((start..start + size).collect());
                }
            }
        }
        Shape::Cycle => {
            for size in 1..n {
                for start in 0..n {
                    let mut arc: Vec<usize> = (0..size).map(|k| (start + k) % n).collect();
                    arc.sort_unstable();
                    out.push(arc);
                }
            }
            out.push((0..n).collect());
        }
    }
    out
}

/// The explicit flatness criterion for framed type-A quivers:
/// `e_I·(d − C_Q v) ≥ −1` for every connected subset `I`. Returns the
/// first violating subset otherwise.
pub fn flat_type_a(
    q: &TypeAQuiver,
    v: &DimVector,
    d: &FramingVector,
) -> Result<(bool, Option<Vec<usize>>)> {
    let quiver = q.quiver();
    quiver.check_len(v.len())?;
    quiver.check_len(d.len())?;
    if d.is_zero() {
        return Err(Error::ZeroFraming);
    }
    let cv = quiver.cartan_matrix().mul_vec(v.entries());
    let w: Vec<i64> = d.entries().iter().zip(&cv).map(|(a, b)| a - b).collect();
    for subset in connected_subsets(q) {
        let total: i64 = subset.iter().map(|&i| w[i]).sum();
        if total < -1 {
            return Ok((false, Some(subset)));
        }
    }
    Ok((true, None))
}

/// Write `u = m·δ + Σ_α e_{I_α}` with every `I_α` connected and not the
/// full cycle, and `(e_{I_α}, e_{I_β})_Q ≥ 0` for all pairs. Built by
/// greedy peeling: in the affine full-support case all `m = min u_i`
/// copies of δ are extracted first, then indicators of support components
/// are subtracted until nothing remains. `m = 0` for paths.
pub fn decompose_test_vector(q: &TypeAQuiver, u: &DimVector) -> Result<(i64, Vec<Vec<usize>>)> {
    let quiver = q.quiver();
    quiver.check_len(u.len())?;
    let n = q.n;
    let mut rest = u.entries().to_vec();
    let mut m = 0i64;
    if q.shape == Shape::Cycle && rest.iter().all(|&x| x > 0) {
        m = *rest.iter().min().unwrap();
        for x in rest.iter_mut() {
            *x -= m;
        }
    }
    let mut intervals = Vec::new();
    while rest.iter().any(|&x| x > 0) {
        let support = DimVector::new(rest.clone())?;
        for comp in quiver.support_components(&support)? {
            for &i in &comp {
                rest[i] -= 1;
            }
            intervals.push(comp);
        }
    }

    // reconstruction and pairwise-pairing invariants hold by construction
    let mut total = vec![m; n];
    if q.shape == Shape::Path {
        total = vec![0; n];
        assert_eq!(m, 0);
    }
    for interval in &intervals {
        assert!(q.shape == Shape::Path || interval.len() < n, "peeled arc is the full cycle");
        for &i in interval {
            total[i] += 1;
        }
    }
    assert_eq!(&total, u.entries(), "decomposition does not reconstruct u");
    let indicator = |set: &[usize]| -> Vec<i64> {
        let mut e = vec![0i64; n];
        for &i in set {
            e[i] = 1;
        }
        e
    };
    for a in 0..intervals.len() {
        for b in 0..intervals.len() {
            let pairing = quiver
                .cartan_pairing(&indicator(&intervals[a]), &indicator(&intervals[b]))
                .expect("indicator vectors match the quiver");
            assert!(pairing >= 0, "peeled intervals have negative pairing");
        }
    }
    Ok((m, intervals))
}

/// W-algebra side of the type-A correspondence: flag multiplicities
/// `r_1 … r_n` with `Σ r_i = N` and Jordan-type data `d_1 … d_{n−1}` with
/// `Σ i·d_i = N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalgParams {
    pub r: Vec<i64>,
    pub d: Vec<i64>,
}

impl WalgParams {
    pub fn new(r: Vec<i64>, d: Vec<i64>) -> Result<WalgParams> {
        if r.is_empty() {
            return Err(Error::Invalid("r must be nonempty".into()));
        }
        if d.len() + 1 != r.len() {
            return Err(Error::Invalid(format!(
                "d must have {} entries for n = {}",
                r.len() - 1,
                r.len()
            )));
        }
        if r.iter().any(|&x| x < 0) || d.iter().any(|&x| x < 0) {
            return Err(Error::Invalid("r and d entries must be nonnegative".into()));
        }
        let n_total: i64 = r.iter().sum();
        let weighted: i64 = d.iter().enumerate().map(|(i, &x)| (i as i64 + 1) * x).sum();
        if weighted != n_total {
            return Err(Error::Invalid(format!(
                "Σ i·d_i = {weighted} must equal Σ r_i = {n_total}"
            )));
        }
        Ok(WalgParams { r, d })
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// The `A_{n−1}` path quiver the parameters live on.
    pub fn quiver(&self) -> Result<TypeAQuiver> {
        TypeAQuiver::new(self.n() - 1, Shape::Path)
    }

    pub fn framing(&self) -> Result<FramingVector> {
        FramingVector::new(self.d.clone())
    }
}

/// Dimension vector on the `A_{n−1}` path:
/// `v_i = Σ_{j>i} r_j − Σ_{j>i} (j−i)·d_j` (with `d_n` read as 0), so in
/// particular `v_{n−1} = r_n`. Errors when an entry is negative.
pub fn walg_dims(p: &WalgParams) -> Result<DimVector> {
    let n = p.n();
    let mut v = Vec::with_capacity(n - 1);
    for i in 1..n {
        let mut vi: i64 = p.r[i..].iter().sum();
        for (j, &dj) in p.d.iter().enumerate().skip(i) {
            vi -= (j as i64 + 1 - i as i64) * dj;
        }
        if vi < 0 {
            return Err(Error::Invalid(format!("derived dimension v_{i} = {vi} is negative")));
        }
        v.push(vi);
    }
    DimVector::new(v)
}

/// One evaluated instance of the identity
/// `e_{i,j}·(d − C_Q v) = r_i − r_j`,  `e_{i,j} = Σ_{k=i}^{j−1} e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    /// 1-based pair (i, j), i < j.
    pub pair: (usize, usize),
    pub lhs: i64,
    pub rhs: i64,
}

/// Evaluate both sides of the parameter identity for every pair `i < j`.
pub fn walg_identity_checks(p: &WalgParams) -> Result<Vec<IdentityCheck>> {
    let v = walg_dims(p)?;
    let n = p.n();
    let quiver = p.quiver()?.quiver();
    let cv = quiver.cartan_matrix().mul_vec(v.entries());
    let w: Vec<i64> = p.d.iter().zip(&cv).map(|(a, b)| a - b).collect();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let lhs: i64 = (i..j).map(|k| w[k - 1]).sum();
            out.push(IdentityCheck { pair: (i, j), lhs, rhs: p.r[i - 1] - p.r[j - 1] });
        }
    }
    Ok(out)
}

/// Flatness of the framed `(A_{n−1}, v, d)` moment map in terms of the
/// flag multiplicities: `r_i − r_j ≥ −1` for all `i < j`.
pub fn walg_flat(p: &WalgParams) -> Result<bool> {
    walg_dims(p)?;
    let n = p.n();
    for i in 0..n {
        for j in (i + 1)..n {
            if p.r[i] - p.r[j] < -1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
