//! Quiver data model: adjacency, Cartan calculus, the p-function, framing,
//! and parameter vectors.
//!
//! A quiver is a finite directed multigraph stored as a nonnegative integer
//! adjacency matrix (loops allowed). Vertex order is declaration order and
//! every vector or matrix reported by this crate uses that order.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::format_rational;

/// Finite directed multigraph. `adjacency[i][j]` counts arrows `i -> j`;
/// the diagonal counts loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    labels: Vec<String>,
    adjacency: Vec<Vec<i64>>,
}

impl Quiver {
    /// Build a quiver from vertex labels and a list of `(tail, head)` arrows.
    /// Arrow multiplicities accumulate; vertex order is declaration order.
    pub fn build<S: AsRef<str>>(labels: &[S], arrows: &[(S, S)]) -> Result<Quiver> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_owned()).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut adjacency = vec![vec![0i64; n]; n];
        for (tail, head) in arrows {
            let t = Self::index_of(&labels, tail.as_ref())?;
            let h = Self::index_of(&labels, head.as_ref())?;
            adjacency[t][h] += 1;
        }
        Ok(Quiver { labels, adjacency })
    }

    /// Build directly from an adjacency matrix (used by the slice and
    /// type-A constructions).
    pub fn from_adjacency(labels: Vec<String>, adjacency: Vec<Vec<i64>>) -> Result<Quiver> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        if adjacency.len() != n || adjacency.iter().any(|row| row.len() != n) {
            return Err(Error::Invalid("adjacency matrix is not square of vertex size".into()));
        }
        for row in &adjacency {
            for (j, &a) in row.iter().enumerate() {
                if a < 0 {
                    return Err(Error::NegativeEntry(j));
                }
            }
        }
        Ok(Quiver { labels, adjacency })
    }

    fn index_of(labels: &[String], label: &str) -> Result<usize> {
        labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownEndpoint(label.to_owned()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        Self::index_of(&self.labels, label)
    }

    /// Number of arrows `i -> j` (loops on the diagonal).
    pub fn arrows(&self, i: usize, j: usize) -> i64 {
        self.adjacency[i][j]
    }

    pub fn loops(&self, i: usize) -> i64 {
        self.adjacency[i][i]
    }

    pub fn adjacency(&self) -> &[Vec<i64>] {
        &self.adjacency
    }

    /// All arrows as `(tail, head)` index pairs, with multiplicity,
    /// in row-major order.
    pub fn arrow_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                for _ in 0..self.adjacency[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The quiver with every arrow reversed.
    pub fn reversed(&self) -> Quiver {
        let n = self.len();
        let mut adjacency = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                adjacency[j][i] = self.adjacency[i][j];
            }
        }
        Quiver { labels: self.labels.clone(), adjacency }
    }

    /// Cartan matrix `2·Id − A − Aᵀ`. Always symmetric; the diagonal entry
    /// is `2 − 2·loops(i)`.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let n = self.len();
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut e = -self.adjacency[i][j] - self.adjacency[j][i];
                if i == j {
                    e += 2;
                }
                m.set(i, j, e);
            }
        }
        m
    }

    /// Symmetrized adjacency matrix `A + Aᵀ`.
    pub fn symmetrized_adjacency(&self) -> IntMatrix {
        let n = self.len();
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.adjacency[i][j] + self.adjacency[j][i]);
            }
        }
        m
    }

    /// `p(v) = 1 − ½ v·C_Q v`. The quadratic form is always even, so the
    /// result is an exact integer.
    pub fn p(&self, v: &DimVector) -> Result<i64> {
        self.check_len(v.len())?;
        Ok(p_of_slice(&self.cartan_matrix(), v.entries()))
    }

    /// Cartan pairing `(x, y)_Q = x·C_Q·y`.
    pub fn cartan_pairing(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        Ok(self.cartan_matrix().pairing(x, y))
    }

    /// Symmetrized adjacency pairing `x·(A + Aᵀ)·y`.
    pub fn adjacency_pairing(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        Ok(self.symmetrized_adjacency().pairing(x, y))
    }

    /// Connected components of the full subgraph on `{i : v_i > 0}`,
    /// treating arrows as undirected edges. Components are sorted and
    /// listed by smallest member.
    pub fn support_components(&self, v: &DimVector) -> Result<Vec<Vec<usize>>> {
        self.check_len(v.len())?;
        let n = self.len();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] || v.get(start) == 0 {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(i) = stack.pop() {
                comp.push(i);
                for j in 0..n {
                    if !seen[j]
                        && v.get(j) > 0
                        && (self.adjacency[i][j] > 0 || self.adjacency[j][i] > 0)
                    {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        Ok(components)
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), got: len });
        }
        Ok(())
    }
}

pub(crate) fn p_of_slice(cartan: &IntMatrix, v: &[i64]) -> i64 {
    let q = cartan.pairing_i128(v, v);
    debug_assert!(q % 2 == 0, "v·Cv must be even");
    i64::try_from(1 - q / 2).expect("p-value overflows i64")
}

/// Square integer matrix; symmetric whenever produced as a Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> IntMatrix {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.n + j] = value;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Bilinear pairing `x·M·y`.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        i64::try_from(self.pairing_i128(x, y)).expect("pairing overflows i64")
    }

    fn pairing_i128(&self, x: &[i64], y: &[i64]) -> i128 {
        assert_eq!(x.len(), self.n);
        assert_eq!(y.len(), self.n);
        let mut acc: i128 = 0;
        for i in 0..self.n {
            for j in 0..self.n {
                acc += x[i] as i128 * self.get(i, j) as i128 * y[j] as i128;
            }
        }
        acc
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }
}

/// Nonnegative integer vector indexed by the vertices of a quiver.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimVector {
    entries: Vec<i64>,
}

impl DimVector {
    pub fn new(entries: Vec<i64>) -> Result<DimVector> {
        if let Some(pos) = entries.iter().position(|&e| e < 0) {
            return Err(Error::NegativeEntry(pos));
        }
        Ok(DimVector { entries })
    }

    pub fn zero(n: usize) -> DimVector {
        DimVector { entries: vec![0; n] }
    }

    /// Coordinate vector `e_i`.
    pub fn unit(n: usize, i: usize) -> DimVector {
        let mut entries = vec![0; n];
        entries[i] = 1;
        DimVector { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// `|v| = Σ v_i`.
    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn dot(&self, other: &[i64]) -> i64 {
        assert_eq!(self.entries.len(), other.len());
        self.entries.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        assert_eq!(self.len(), other.len());
        DimVector {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    /// Componentwise subtraction; `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        assert_eq!(self.len(), other.len());
        let entries: Vec<i64> =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        if entries.iter().any(|&e| e < 0) {
            None
        } else {
            Some(DimVector { entries })
        }
    }

    pub fn le_componentwise(&self, other: &DimVector) -> bool {
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }
}

impl std::fmt::Display for DimVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Nonnegative framing multiplicities, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramingVector {
    entries: Vec<i64>,
}

impl FramingVector {
    pub fn new(entries: Vec<i64>) -> Result<FramingVector> {
        if let Some(pos) = entries.iter().position(|&e| e < 0) {
            return Err(Error::NegativeEntry(pos));
        }
        Ok(FramingVector { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }
}

/// Exact rational deformation vector λ and stability vector θ.
///
/// The annihilation constraints `λ·v = 0`, `θ·v = 0` are context dependent
/// (they hold for unframed data and are restored by [`frame`]), so they are
/// checked by [`ParamPair::require_annihilated`] rather than enforced at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ParamPair {
    pub lambda: Vec<BigRational>,
    pub theta: Vec<BigRational>,
}

impl ParamPair {
    pub fn new(lambda: Vec<BigRational>, theta: Vec<BigRational>) -> Result<ParamPair> {
        if lambda.len() != theta.len() {
            return Err(Error::Invalid("lambda and theta have different lengths".into()));
        }
        Ok(ParamPair { lambda, theta })
    }

    pub fn zero(n: usize) -> ParamPair {
        ParamPair { lambda: vec![BigRational::zero(); n], theta: vec![BigRational::zero(); n] }
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    pub fn lambda_dot(&self, v: &[i64]) -> BigRational {
        dot_rational(&self.lambda, v)
    }

    pub fn theta_dot(&self, v: &[i64]) -> BigRational {
        dot_rational(&self.theta, v)
    }

    /// Check `λ·v = 0` and `θ·v = 0`.
    pub fn require_annihilated(&self, v: &DimVector) -> Result<()> {
        let l = self.lambda_dot(v.entries());
        if !l.is_zero() {
            return Err(Error::NotAnnihilated { which: "lambda", pairing: format_rational(&l) });
        }
        let t = self.theta_dot(v.entries());
        if !t.is_zero() {
            return Err(Error::NotAnnihilated { which: "theta", pairing: format_rational(&t) });
        }
        Ok(())
    }
}

pub(crate) fn dot_rational(coeffs: &[BigRational], v: &[i64]) -> BigRational {
    assert_eq!(coeffs.len(), v.len());
    let mut acc = BigRational::zero();
    for (c, &x) in coeffs.iter().zip(v) {
        if x != 0 {
            acc += c * BigRational::from_integer(x.into());
        }
    }
    acc
}

/// Label used for the extra framing vertex.
pub const FRAMING_LABEL: &str = "∞";

/// Framed quiver `Q^d`: adjoin a vertex `∞` with dimension 1 and `d_i`
/// arrows `∞ -> i`, and extend the parameters by
/// `λ_∞ = −Σ λ_i v_i`, `θ_∞ = −Σ θ_i v_i`, so the returned pair is
/// annihilated by the framed dimension vector by construction.
pub fn frame(
    q: &Quiver,
    v: &DimVector,
    d: &FramingVector,
    params: &ParamPair,
) -> Result<(Quiver, DimVector, ParamPair)> {
    q.check_len(v.len())?;
    q.check_len(d.len())?;
    q.check_len(params.len())?;
    if d.is_zero() {
        return Err(Error::ZeroFraming);
    }
    if q.labels().iter().any(|l| l == FRAMING_LABEL) {
        return Err(Error::DuplicateLabel(FRAMING_LABEL.to_owned()));
    }
    let n = q.len();
    let mut adjacency = vec![vec![0i64; n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            adjacency[i][j] = q.arrows(i, j);
        }
        adjacency[n][i] = d.get(i);
    }
    let mut labels = q.labels().to_vec();
    labels.push(FRAMING_LABEL.to_owned());
    let framed = Quiver::from_adjacency(labels, adjacency)?;

    let mut dims = v.entries().to_vec();
    dims.push(1);
    let framed_dims = DimVector::new(dims)?;

    let mut lambda = params.lambda.clone();
    lambda.push(-params.lambda_dot(v.entries()));
    let mut theta = params.theta.clone();
    theta.push(-params.theta_dot(v.entries()));
    let framed_params = ParamPair::new(lambda, theta)?;
    debug_assert!(framed_params.require_annihilated(&framed_dims).is_ok());

    Ok((framed, framed_dims, framed_params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn jordan() -> Quiver {
        Quiver::build(&["1"], &[("1", "1")]).unwrap()
    }

    fn a2_path() -> Quiver {
        Quiver::build(&["1", "2"], &[("1", "2")]).unwrap()
    }

    fn affine_a2() -> Quiver {
        Quiver::build(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("3", "1")]).unwrap()
    }

    fn dim(v: &[i64]) -> DimVector {
        DimVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn build_counts_multiplicities() {
        let q = jordan();
        assert_eq!(q.adjacency(), &[vec![1]]);

        let q = Quiver::build(&["1", "2"], &[("1", "2"), ("1", "2"), ("1", "2")]).unwrap();
        assert_eq!(q.adjacency(), &[vec![0, 3], vec![0, 0]]);
    }

    #[test]
    fn build_validates_endpoints_and_labels() {
        let err = Quiver::build(&["1", "2"], &[("1", "3")]).unwrap_err();
        assert_eq!(err, Error::UnknownEndpoint("3".into()));
        let err = Quiver::build(&["1", "1"], &[]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("1".into()));
    }

    #[test]
    fn cartan_matrix_examples() {
        assert_eq!(jordan().cartan_matrix().rows(), vec![vec![0]]);
        assert_eq!(a2_path().cartan_matrix().rows(), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(
            affine_a2().cartan_matrix().rows(),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
    }

    #[test]
    fn cartan_matrix_ignores_orientation() {
        for (labels, arrows) in [
            (vec!["1", "2", "3"], vec![("1", "2"), ("2", "3"), ("3", "1"), ("1", "1")]),
            (vec!["a", "b"], vec![("a", "b"), ("a", "b"), ("b", "a")]),
        ] {
            let q = Quiver::build(&labels, &arrows).unwrap();
            assert_eq!(q.cartan_matrix(), q.reversed().cartan_matrix());
            assert!(q.cartan_matrix().is_symmetric());
        }
    }

    #[test]
    fn p_function_examples() {
        assert_eq!(jordan().p(&dim(&[3])).unwrap(), 1);
        assert_eq!(a2_path().p(&dim(&[1, 1])).unwrap(), 0);
        let q = Quiver::build(&["1", "2"], &[("1", "2"), ("1", "2"), ("1", "2")]).unwrap();
        assert_eq!(q.p(&dim(&[1, 2])).unwrap(), 2);
        assert!(q.p(&dim(&[1])).is_err());
    }

    #[test]
    fn p_at_unit_vector_counts_loops() {
        let q = Quiver::build(
            &["1", "2", "3"],
            &[("1", "1"), ("1", "1"), ("2", "3"), ("3", "3")],
        )
        .unwrap();
        for i in 0..3 {
            let e = DimVector::unit(3, i);
            assert_eq!(q.p(&e).unwrap(), q.loops(i));
        }
    }

    #[test]
    fn p_expanded_form_agrees() {
        // p(v) = 1 - sum v_i^2 + sum_{arrows i->j} v_i v_j
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move |m: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % m
        };
        for _ in 0..200 {
            let n = 1 + next(4) as usize;
            let mut arrows = Vec::new();
            let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            for i in 0..n {
                for j in 0..n {
                    for _ in 0..next(3) {
                        arrows.push((labels[i].clone(), labels[j].clone()));
                    }
                }
            }
            let q = Quiver::build(&labels, &arrows).unwrap();
            let v = dim(&(0..n).map(|_| next(4) as i64).collect::<Vec<_>>());
            let mut expanded: i64 = 1 - v.entries().iter().map(|x| x * x).sum::<i64>();
            for (i, j) in q.arrow_pairs() {
                expanded += v.get(i) * v.get(j);
            }
            assert_eq!(q.p(&v).unwrap(), expanded);
        }
    }

    #[test]
    fn support_components_examples() {
        let q = affine_a2();
        assert_eq!(q.support_components(&dim(&[1, 1, 1])).unwrap(), vec![vec![0, 1, 2]]);
        let a3 = Quiver::build(&["1", "2", "3"], &[("1", "2"), ("2", "3")]).unwrap();
        assert_eq!(a3.support_components(&dim(&[1, 0, 1])).unwrap(), vec![vec![0], vec![2]]);
        assert!(a3.support_components(&dim(&[0, 0, 0])).unwrap().is_empty());
    }

    #[test]
    fn frame_examples() {
        // single vertex, no loop, v=(2), d=(3), lambda=(5), theta=(1)
        let q = Quiver::build(&["1"], &[]).unwrap();
        let params = ParamPair::new(
            vec![BigRational::from_integer(5.into())],
            vec![BigRational::one()],
        )
        .unwrap();
        let (fq, fv, fp) =
            frame(&q, &dim(&[2]), &FramingVector::new(vec![3]).unwrap(), &params).unwrap();
        assert_eq!(fq.labels(), &["1".to_string(), FRAMING_LABEL.to_string()]);
        assert_eq!(fq.arrows(1, 0), 3);
        assert_eq!(fv.entries(), &[2, 1]);
        assert_eq!(fp.lambda[1], BigRational::from_integer((-10).into()));
        assert_eq!(fp.theta[1], BigRational::from_integer((-2).into()));
        fp.require_annihilated(&fv).unwrap();

        // framed Jordan with trivial parameters
        let (fq, fv, _) = frame(
            &jordan(),
            &dim(&[1]),
            &FramingVector::new(vec![1]).unwrap(),
            &ParamPair::zero(1),
        )
        .unwrap();
        assert_eq!(fq.loops(0), 1);
        assert_eq!(fq.arrows(1, 0), 1);
        assert_eq!(fv.entries(), &[1, 1]);

        // zero framing is rejected
        let err = frame(
            &jordan(),
            &dim(&[1]),
            &FramingVector::new(vec![0]).unwrap(),
            &ParamPair::zero(1),
        )
        .unwrap_err();
        assert_eq!(err, Error::ZeroFraming);
    }

    #[test]
    fn frame_then_delete_recovers_quiver() {
        let q = affine_a2();
        let v = dim(&[2, 1, 1]);
        let d = FramingVector::new(vec![1, 0, 2]).unwrap();
        let params = ParamPair::new(
            vec![
                BigRational::one(),
                BigRational::from_integer(3.into()),
                BigRational::from_integer((-5).into()),
            ],
            vec![BigRational::zero(), BigRational::one(), BigRational::from_integer((-1).into())],
        )
        .unwrap();
        let (fq, fv, fp) = frame(&q, &v, &d, &params).unwrap();
        // deleting the framing vertex recovers (Q, v) exactly
        let m = q.len();
        for i in 0..m {
            for j in 0..m {
                assert_eq!(fq.arrows(i, j), q.arrows(i, j));
            }
        }
        assert_eq!(&fv.entries()[..m], v.entries());
        // annihilation holds by construction
        assert!(fp.lambda_dot(fv.entries()).is_zero());
        assert!(fp.theta_dot(fv.entries()).is_zero());
    }

    #[test]
    fn pairings_are_exposed_separately() {
        let q = a2_path();
        // Cartan pairing vs symmetrized adjacency pairing differ
        assert_eq!(q.cartan_pairing(&[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(q.adjacency_pairing(&[1, 0], &[0, 1]).unwrap(), 1);
        assert_eq!(q.cartan_pairing(&[1, 1], &[1, 1]).unwrap(), 2);
        assert_eq!(q.adjacency_pairing(&[1, 1], &[1, 1]).unwrap(), 2);
    }
}
