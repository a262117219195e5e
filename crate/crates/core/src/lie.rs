//! Infinitesimal generators of the planar rotation and boost groups, their
//! bracket closure, and exact rational points on the one-parameter groups.
//!
//! Trigonometric and hyperbolic functions are replaced by the rational
//! half-angle parametrizations
//!
//! ```text
//! cos = (1 − t²)/(1 + t²),  sin  = 2t/(1 + t²)
//! cosh = (1 + t²)/(1 − t²), sinh = 2t/(1 − t²)
//! ```
//!
//! so every check below is exact.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::echelon::IntEchelon;
use crate::error::{Error, Result};
use crate::matalg::SpanBasis;
use crate::matrix::{Rational, RationalMatrix};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorType {
    /// `E_ij − E_ji`
    Rotation,
    /// `E_ij + E_ji`
    Boost,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieGenerator {
    pub kind: GeneratorType,
    /// 1-based `(i, j)` with `i < j`.
    pub position: (usize, usize),
    pub matrix: RationalMatrix,
}

impl LieGenerator {
    pub fn new(kind: GeneratorType, n: usize, i: usize, j: usize) -> Result<Self> {
        check_position(n, i, j)?;
        let eij = RationalMatrix::unit(n, i - 1, j - 1);
        let eji = RationalMatrix::unit(n, j - 1, i - 1);
        let matrix = match kind {
            GeneratorType::Rotation => eij.sub(&eji),
            GeneratorType::Boost => eij.add(&eji),
        };
        Ok(LieGenerator { kind, position: (i, j), matrix })
    }

    pub fn n(&self) -> usize {
        self.matrix.dim()
    }
}

fn check_position(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i as i64, n });
    }
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j as i64, n });
    }
    if i >= j {
        return Err(Error::IndexOutOfRange { index: j as i64, n });
    }
    Ok(())
}

/// Rotations at adjacent positions inside each block, and a boost at each
/// block boundary `(c, c+1)`.
pub fn so_generators(partition: &Partition) -> Result<Vec<LieGenerator>> {
    let n = partition.degree();
    let mut out = Vec::new();
    for block in partition.blocks() {
        let (start, end) = block.into_inner();
        for i in start..end {
            out.push(LieGenerator::new(GeneratorType::Rotation, n, i, i + 1)?);
        }
    }
    for c in partition.boundaries() {
        out.push(LieGenerator::new(GeneratorType::Boost, n, c, c + 1)?);
    }
    Ok(out)
}

/// Dimension of the smallest bracket-closed subspace containing `mats`.
pub fn lie_closure_dim_of(mats: &[RationalMatrix]) -> Result<usize> {
    let first = mats.first().ok_or(Error::Empty("generator list"))?;
    let n = first.dim();
    if let Some(m) = mats.iter().find(|m| m.dim() != n) {
        return Err(Error::DimensionMismatch { left: n, right: m.dim() });
    }
    let mut echelon = IntEchelon::new(n * n);
    let mut basis: Vec<RationalMatrix> = Vec::new();
    let mut pending: Vec<RationalMatrix> = Vec::new();
    for m in mats {
        if echelon.insert(m.vectorize()) {
            pending.push(m.clone());
        }
    }
    // Each new element is bracketed with everything accepted before it, so
    // every pair of accepted elements is bracketed exactly once.
    while let Some(x) = pending.pop() {
        for y in &basis {
            let z = x.commutator(y);
            if echelon.insert(z.vectorize()) {
                pending.push(z);
            }
        }
        basis.push(x);
    }
    Ok(echelon.rank())
}

pub fn lie_closure_dim(gens: &[LieGenerator]) -> Result<usize> {
    let mats: Vec<RationalMatrix> = gens.iter().map(|g| g.matrix.clone()).collect();
    lie_closure_dim_of(&mats)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGroupPoint {
    pub kind: GeneratorType,
    pub position: (usize, usize),
    pub parameter: Rational,
    pub matrix: RationalMatrix,
}

/// Exact point of the rotation or boost one-parameter group on plane
/// `position`, embedded in the `n×n` identity.
pub fn group_point(kind: GeneratorType, t: &Rational, position: (usize, usize), n: usize) -> Result<RationalGroupPoint> {
    let (i, j) = position;
    check_position(n, i, j)?;
    let one = Rational::one();
    let two = RationalMatrix::int(2);
    let t2 = t * t;
    let block = match kind {
        GeneratorType::Rotation => {
            let d = &one + &t2;
            let c = (&one - &t2) / &d;
            let s = &two * t / &d;
            [[c.clone(), s.clone()], [-s, c]]
        }
        GeneratorType::Boost => {
            if t.abs().is_one() {
                return Err(Error::PoleParameter(t.to_string()));
            }
            let d = &one - &t2;
            let ch = (&one + &t2) / &d;
            let sh = &two * t / &d;
            [[ch.clone(), sh.clone()], [sh, ch]]
        }
    };
    let matrix = RationalMatrix::embed_block(n, i - 1, j - 1, block);
    Ok(RationalGroupPoint { kind, position, parameter: t.clone(), matrix })
}

/// Whether conjugation by `g` maps every basis element of `s` back into `s`.
pub fn preserves_span(g: &RationalMatrix, s: &SpanBasis) -> Result<bool> {
    if g.dim() != s.n() {
        return Err(Error::DimensionMismatch { left: s.n(), right: g.dim() });
    }
    let inv = g.inverse()?;
    Ok(s.basis().iter().all(|b| s.contains(&g.mul(b).mul(&inv))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matalg::span;
    use proptest::prelude::*;

    fn part(s: &[usize]) -> Partition {
        Partition::new(s.to_vec()).unwrap()
    }

    fn positions(gens: &[LieGenerator]) -> Vec<(GeneratorType, (usize, usize))> {
        gens.iter().map(|g| (g.kind, g.position)).collect()
    }

    #[test]
    fn so_generator_examples() {
        use GeneratorType::*;
        assert_eq!(positions(&so_generators(&part(&[3])).unwrap()), vec![(Rotation, (1, 2)), (Rotation, (2, 3))]);
        assert_eq!(positions(&so_generators(&part(&[1, 1])).unwrap()), vec![(Boost, (1, 2))]);
        assert_eq!(positions(&so_generators(&part(&[2, 1])).unwrap()), vec![(Rotation, (1, 2)), (Boost, (2, 3))]);
        for g in so_generators(&part(&[2, 2, 1])).unwrap() {
            match g.kind {
                Rotation => assert!(g.matrix.is_antisymmetric()),
                Boost => assert!(g.matrix.is_symmetric() && g.matrix.trace() == RationalMatrix::int(0)),
            }
        }
    }

    #[test]
    fn closure_dim_examples() {
        let r12 = LieGenerator::new(GeneratorType::Rotation, 2, 1, 2).unwrap();
        assert_eq!(lie_closure_dim(&[r12]).unwrap(), 1);
        assert_eq!(lie_closure_dim(&so_generators(&part(&[3])).unwrap()).unwrap(), 3);
        assert_eq!(lie_closure_dim(&so_generators(&part(&[2, 1])).unwrap()).unwrap(), 3);
        assert!(matches!(lie_closure_dim(&[]), Err(Error::Empty(_))));
    }

    // Oracle: repeatedly bracket every pair of spanning vectors until the
    // rank stops growing. Quadratic per round but obviously correct.
    fn brute_closure_dim(mats: &[RationalMatrix]) -> usize {
        let mut all = mats.to_vec();
        loop {
            let before = span(&all).unwrap().dimension();
            let mut next = all.clone();
            for a in &all {
                for b in &all {
                    next.push(a.commutator(b));
                }
            }
            let s = span(&next).unwrap();
            all = s.basis();
            if s.dimension() == before {
                return before;
            }
        }
    }

    #[test]
    fn closure_dim_matches_brute_force() {
        for n in 2..=4 {
            for p in Partition::compositions(n) {
                let gens = so_generators(&p).unwrap();
                if gens.is_empty() {
                    continue;
                }
                let mats: Vec<_> = gens.iter().map(|g| g.matrix.clone()).collect();
                assert_eq!(lie_closure_dim(&gens).unwrap(), brute_closure_dim(&mats), "{p}");
            }
        }
    }

    #[test]
    fn so_n_dimensions() {
        for n in 2..=5 {
            assert_eq!(lie_closure_dim(&so_generators(&Partition::single(n).unwrap()).unwrap()).unwrap(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn closure_dim_is_order_independent() {
        let mut gens = so_generators(&part(&[2, 2])).unwrap();
        let d = lie_closure_dim(&gens).unwrap();
        gens.reverse();
        assert_eq!(lie_closure_dim(&gens).unwrap(), d);
        gens.rotate_left(1);
        assert_eq!(lie_closure_dim(&gens).unwrap(), d);
    }

    #[test]
    fn group_point_examples() {
        let zero = RationalMatrix::int(0);
        assert_eq!(group_point(GeneratorType::Rotation, &zero, (1, 3), 3).unwrap().matrix, RationalMatrix::identity(3));
        let g = group_point(GeneratorType::Rotation, &RationalMatrix::int(1), (1, 2), 2).unwrap();
        assert_eq!(g.matrix, RationalMatrix::from_ints(&[vec![0, 1], vec![-1, 0]]));
        let g = group_point(GeneratorType::Boost, &RationalMatrix::ratio(1, 2), (1, 2), 2).unwrap();
        let ch = RationalMatrix::ratio(5, 3);
        let sh = RationalMatrix::ratio(4, 3);
        assert_eq!(*g.matrix.get(0, 0), ch);
        assert_eq!(*g.matrix.get(0, 1), sh);
        assert_eq!(*g.matrix.get(1, 0), sh);
        assert_eq!(&ch * &ch - &sh * &sh, Rational::one());
        assert!(matches!(
            group_point(GeneratorType::Boost, &RationalMatrix::int(-1), (1, 2), 2),
            Err(Error::PoleParameter(_))
        ));
    }

    #[test]
    fn preserves_span_examples() {
        let rot = RationalMatrix::from_ints(&[vec![0, 1], vec![-1, 0]]);
        let s = span(&[RationalMatrix::identity(2), rot]).unwrap();
        let g = group_point(GeneratorType::Rotation, &RationalMatrix::ratio(1, 3), (1, 2), 2).unwrap();
        assert!(preserves_span(&g.matrix, &s).unwrap());
        assert!(preserves_span(&g.matrix, &SpanBasis::full(2)).unwrap());
        let d = RationalMatrix::diagonal(&[RationalMatrix::int(1), RationalMatrix::int(2)]);
        assert!(!preserves_span(&d, &s).unwrap());
        let singular = RationalMatrix::from_ints(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(preserves_span(&singular, &s), Err(Error::SingularMatrix));
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=20).prop_map(|(p, q)| RationalMatrix::ratio(p, q))
    }

    proptest! {
        #[test]
        fn rotation_points_are_orthogonal(t in rational(), n in 2usize..=4) {
            let g = group_point(GeneratorType::Rotation, &t, (1, n), n).unwrap().matrix;
            prop_assert_eq!(g.transpose().mul(&g), RationalMatrix::identity(n));
            prop_assert_eq!(g.determinant(), Rational::one());
            let back = group_point(GeneratorType::Rotation, &-&t, (1, n), n).unwrap().matrix;
            prop_assert_eq!(g.mul(&back), RationalMatrix::identity(n));
        }

        #[test]
        fn boost_points_preserve_signature(t in rational()) {
            prop_assume!(!t.abs().is_one());
            let g = group_point(GeneratorType::Boost, &t, (1, 2), 2).unwrap().matrix;
            let eta = RationalMatrix::diagonal(&[RationalMatrix::int(1), RationalMatrix::int(-1)]);
            prop_assert_eq!(g.transpose().mul(&eta).mul(&g), eta);
            let back = group_point(GeneratorType::Boost, &-&t, (1, 2), 2).unwrap().matrix;
            prop_assert_eq!(g.mul(&back), RationalMatrix::identity(2));
        }
    }
}
