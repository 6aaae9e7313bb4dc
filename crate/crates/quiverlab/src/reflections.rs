//! Simple reflections on quiver data.
//!
//! At a loop-free vertex `i` the reflection acts by
//! `s_i v = v − (v, e_i)_Q e_i` and
//! `(s_i λ)_j = λ_j − (e_i, e_j)_Q λ_i` (same for θ), where `(x, y)_Q`
//! is the Cartan pairing `x·C_Q·y`. This makes `s_i` the standard simple
//! reflection: it is an involution, preserves `p`, and preserves the
//! annihilation constraints.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::quiver::{DimVector, ParamPair, Quiver};

/// Which reflection isomorphisms apply at a vertex.
///
/// `lmn` and `pm1` are only meaningful when `loop_free` holds: `lmn`
/// (λ_i ≠ 0 or θ_i ≠ 0) enables the reflection isomorphism for arbitrary
/// parameters at that vertex, while `pm1` (`(v, e_i)_Q = ±1`) enables it
/// for all (θ, λ) whenever the moment map is flat.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReflectionAdmissibility {
    pub loop_free: bool,
    pub lmn: bool,
    pub pm1: bool,
}

/// Apply `s_i` to `(v, λ, θ)`. Errors if vertex `i` carries a loop or the
/// reflected dimension would be negative.
pub fn reflect_at(
    q: &Quiver,
    v: &DimVector,
    params: &ParamPair,
    i: usize,
) -> Result<(DimVector, ParamPair)> {
    q.check_len(v.len())?;
    q.check_len(params.len())?;
    if q.loops(i) != 0 {
        return Err(Error::LoopAtVertex(q.label(i).to_owned()));
    }
    let cartan = q.cartan_matrix();
    let pairing = cartan.pairing(v.entries(), DimVector::unit(q.len(), i).entries());
    let mut entries = v.entries().to_vec();
    entries[i] -= pairing;
    if entries[i] < 0 {
        return Err(Error::NegativeReflection { vertex: q.label(i).to_owned(), value: entries[i] });
    }
    let reflected = DimVector::new(entries)?;

    let reflect_coeffs = |coeffs: &[BigRational]| -> Vec<BigRational> {
        let ci = &coeffs[i];
        coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c - BigRational::from_integer(cartan.get(i, j).into()) * ci)
            .collect()
    };
    let out = ParamPair::new(reflect_coeffs(&params.lambda), reflect_coeffs(&params.theta))?;

    // annihilation is preserved: check whenever the input satisfied it
    debug_assert!(
        !params.lambda_dot(v.entries()).is_zero()
            || out.lambda_dot(reflected.entries()).is_zero()
    );
    debug_assert!(
        !params.theta_dot(v.entries()).is_zero()
            || out.theta_dot(reflected.entries()).is_zero()
    );
    Ok((reflected, out))
}

/// Evaluate the admissibility conditions at vertex `i`.
pub fn reflection_admissibility(
    q: &Quiver,
    v: &DimVector,
    params: &ParamPair,
    i: usize,
) -> Result<ReflectionAdmissibility> {
    q.check_len(v.len())?;
    q.check_len(params.len())?;
    let pairing = q.cartan_pairing(v.entries(), DimVector::unit(q.len(), i).entries())?;
    Ok(ReflectionAdmissibility {
        loop_free: q.loops(i) == 0,
        lmn: !params.lambda[i].is_zero() || !params.theta[i].is_zero(),
        pm1: pairing == 1 || pairing == -1,
    })
}

/// Orbit of `(v, λ, θ)` under all applicable reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Sorted, deduplicated states.
    pub states: Vec<(DimVector, ParamPair)>,
    /// Set when enumeration stopped at `max_size`.
    pub truncated: bool,
}

/// Breadth-first closure under `reflect_at` over loop-free vertices with
/// nonnegative results, truncated at `max_size`.
pub fn reflection_orbit(
    q: &Quiver,
    v: &DimVector,
    params: &ParamPair,
    max_size: usize,
) -> Result<Orbit> {
    q.check_len(v.len())?;
    q.check_len(params.len())?;
    if max_size == 0 {
        return Err(Error::Invalid("orbit size cap must be at least 1".into()));
    }
    let mut seen: BTreeSet<(DimVector, ParamPair)> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let start = (v.clone(), params.clone());
    seen.insert(start.clone());
    queue.push_back(start);
    let mut truncated = false;
    'bfs: while let Some((cur_v, cur_p)) = queue.pop_front() {
        for i in 0..q.len() {
            if q.loops(i) != 0 {
                continue;
            }
            let Ok(next) = reflect_at(q, &cur_v, &cur_p, i) else {
                continue; // negative reflection: not part of the orbit
            };
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= max_size {
                truncated = true;
                break 'bfs;
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(Orbit { states: seen.into_iter().collect(), truncated })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(v: &[i64]) -> DimVector {
        DimVector::new(v.to_vec()).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn a2_path() -> Quiver {
        Quiver::build(&["1", "2"], &[("1", "2")]).unwrap()
    }

    fn jordan() -> Quiver {
        Quiver::build(&["1"], &[("1", "1")]).unwrap()
    }

    fn affine_a2() -> Quiver {
        Quiver::build(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("3", "1")]).unwrap()
    }

    #[test]
    fn reflect_examples() {
        // A_2 path, v=(1,1), lambda=(a,-a) with a=7, i=1
        let params = ParamPair::new(vec![rat(7), rat(-7)], vec![rat(0), rat(0)]).unwrap();
        let (v, p) = reflect_at(&a2_path(), &dim(&[1, 1]), &params, 0).unwrap();
        assert_eq!(v, dim(&[0, 1]));
        assert_eq!(p.lambda, vec![rat(-7), rat(0)]);
        assert_eq!(p.theta, vec![rat(0), rat(0)]);

        // loop at the vertex
        let err = reflect_at(&jordan(), &dim(&[1]), &ParamPair::zero(1), 0).unwrap_err();
        assert_eq!(err, Error::LoopAtVertex("1".into()));

        // the imaginary root of the affine cycle is fixed by every reflection
        let delta = dim(&[1, 1, 1]);
        for i in 0..3 {
            let (v, _) = reflect_at(&affine_a2(), &delta, &ParamPair::zero(3), i).unwrap();
            assert_eq!(v, delta);
        }
    }

    #[test]
    fn reflect_rejects_negative_dimension() {
        // A_2 path, v=(1,0): s_1 v = (-1,0)
        let err = reflect_at(&a2_path(), &dim(&[1, 0]), &ParamPair::zero(2), 0).unwrap_err();
        assert!(matches!(err, Error::NegativeReflection { .. }));
    }

    #[test]
    fn admissibility_examples() {
        let q = a2_path();
        let adm = reflection_admissibility(&q, &dim(&[1, 1]), &ParamPair::zero(2), 0).unwrap();
        assert_eq!(adm, ReflectionAdmissibility { loop_free: true, lmn: false, pm1: true });

        let params = ParamPair::new(vec![rat(1), rat(-1)], vec![rat(0), rat(0)]).unwrap();
        let adm = reflection_admissibility(&q, &dim(&[1, 1]), &params, 0).unwrap();
        assert!(adm.lmn);

        let adm =
            reflection_admissibility(&jordan(), &dim(&[1]), &ParamPair::zero(1), 0).unwrap();
        assert!(!adm.loop_free);
    }

    #[test]
    fn orbit_examples() {
        let orbit =
            reflection_orbit(&a2_path(), &dim(&[1, 0]), &ParamPair::zero(2), 100).unwrap();
        assert!(!orbit.truncated);
        let dims: Vec<&DimVector> = orbit.states.iter().map(|(v, _)| v).collect();
        assert_eq!(dims, vec![&dim(&[0, 1]), &dim(&[1, 0]), &dim(&[1, 1])]);

        // Jordan has no loop-free vertices
        let orbit = reflection_orbit(&jordan(), &dim(&[2]), &ParamPair::zero(1), 100).unwrap();
        assert_eq!(orbit.states.len(), 1);
        assert!(!orbit.truncated);

        // truncation flag
        let orbit = reflection_orbit(&a2_path(), &dim(&[1, 0]), &ParamPair::zero(2), 1).unwrap();
        assert_eq!(orbit.states.len(), 1);
        assert!(orbit.truncated);

        assert!(reflection_orbit(&a2_path(), &dim(&[1, 0]), &ParamPair::zero(2), 0).is_err());
    }

    #[test]
    fn reflection_is_involutive_and_preserves_p() {
        let q = affine_a2();
        let params =
            ParamPair::new(vec![rat(2), rat(-1), rat(-1)], vec![rat(1), rat(1), rat(-2)]).unwrap();
        for v in [dim(&[1, 1, 1]), dim(&[2, 1, 1]), dim(&[1, 2, 3])] {
            for i in 0..3 {
                let Ok((rv, rp)) = reflect_at(&q, &v, &params, i) else { continue };
                assert_eq!(q.p(&rv).unwrap(), q.p(&v).unwrap());
                let (back_v, back_p) = reflect_at(&q, &rv, &rp, i).unwrap();
                assert_eq!(back_v, v);
                assert_eq!(back_p, params);
            }
        }
    }
}
