//! Linear spans of matrix sets, group algebras of signed-permutation
//! subgroups, and the Lie normalizer of a span.
//!
//! Matrices are vectorized row-major and every rank is computed by the
//! fraction-free elimination in [`crate::echelon`].

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::echelon::IntEchelon;
use crate::error::{Error, Result};
use crate::matrix::{Rational, RationalMatrix};
use crate::perm::{all_signed_permutations, SignedPermutation};
use crate::subgroups::{GroupClosure, MAX_DEGREE};
use crate::verdict::Verdict;

/// Basis of the rational span of a set of `n×n` matrices.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    n: usize,
    echelon: IntEchelon,
}

impl SpanBasis {
    pub fn empty(n: usize) -> Self {
        SpanBasis { n, echelon: IntEchelon::new(n * n) }
    }

    /// The whole matrix space.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                s.insert(&RationalMatrix::unit(n, i, j));
            }
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.echelon.rank()
    }

    /// Basis in fraction-free reduced form, ordered by pivot position.
    pub fn basis(&self) -> Vec<RationalMatrix> {
        self.echelon
            .reduced()
            .into_iter()
            .map(|(_, row)| {
                let entries = row.into_iter().map(Rational::from_integer).collect();
                RationalMatrix::from_vector(self.n, entries).expect("row width is n²")
            })
            .collect()
    }

    /// Adds `m` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, m: &RationalMatrix) -> bool {
        assert_eq!(m.dim(), self.n, "dimension mismatch");
        self.echelon.insert(m.vectorize())
    }

    pub fn contains(&self, m: &RationalMatrix) -> bool {
        m.dim() == self.n && self.echelon.contains(m.vectorize())
    }

    /// Integer functionals vanishing on the span.
    fn annihilator(&self) -> Vec<Vec<BigInt>> {
        self.echelon.nullspace()
    }
}

pub fn span(mats: &[RationalMatrix]) -> Result<SpanBasis> {
    let first = mats.first().ok_or(Error::Empty("matrix list"))?;
    let mut s = SpanBasis::empty(first.dim());
    for m in mats {
        if m.dim() != s.n {
            return Err(Error::DimensionMismatch { left: s.n, right: m.dim() });
        }
        s.insert(m);
    }
    Ok(s)
}

pub fn in_span(m: &RationalMatrix, basis: &SpanBasis) -> Result<bool> {
    if m.dim() != basis.n {
        return Err(Error::DimensionMismatch { left: basis.n, right: m.dim() });
    }
    Ok(basis.contains(m))
}

/// Span of all `2ⁿ·n!` signed permutation matrices must be the full
/// `n²`-dimensional matrix space. The witnesses are the lexicographically
/// first independent `n²` group elements, found greedily.
pub fn full_span_check(n: usize) -> Result<Verdict> {
    if n > MAX_DEGREE {
        return Err(Error::SizeExceeded { what: "span of Pn", needed: n as u128, limit: MAX_DEGREE as u128 });
    }
    let mut s = SpanBasis::empty(n);
    let mut chosen: Vec<SignedPermutation> = Vec::new();
    let mut considered = 0usize;
    for p in all_signed_permutations(n) {
        considered += 1;
        if s.insert(&p.matrix_rep()) {
            chosen.push(p);
            if s.dimension() == n * n {
                break;
            }
        }
    }
    let dim = s.dimension();
    Ok(Verdict::pass_if(format!("span.full.n{n}"), dim == n * n)
        .detail("dimension", dim)
        .detail("expected", n * n)
        .detail("elements_scanned", considered)
        .witnesses(chosen))
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraReport {
    pub group_order: usize,
    pub dimension: usize,
    /// Every product of two basis elements lies in the span.
    pub closed: bool,
    #[serde(skip)]
    pub span: SpanBasis,
}

pub fn group_algebra_report(h: &GroupClosure) -> AlgebraReport {
    let mats: Vec<RationalMatrix> = h.elements.iter().map(SignedPermutation::matrix_rep).collect();
    let s = span(&mats).expect("closure contains the identity");
    let basis = s.basis();
    let closed = basis.iter().all(|a| basis.iter().all(|b| s.contains(&a.mul(b))));
    AlgebraReport { group_order: h.order(), dimension: s.dimension(), closed, span: s }
}

/// Dimension of `{X : [X, B] ∈ S for every basis element B of S}`.
pub fn normalizer_lie_dim(s: &SpanBasis) -> usize {
    let n = s.n;
    let annihilator = s.annihilator();
    let basis = s.basis();
    let units: Vec<RationalMatrix> = (0..n * n).map(|k| RationalMatrix::unit(n, k / n, k % n)).collect();
    let mut constraints = IntEchelon::new(n * n);
    for b in &basis {
        let brackets: Vec<RationalMatrix> = units.iter().map(|e| e.commutator(b)).collect();
        for q in &annihilator {
            let row: Vec<Rational> = brackets
                .iter()
                .map(|br| {
                    br.vectorize()
                        .iter()
                        .zip(q)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(x, c)| x * Rational::from_integer(c.clone()))
                        .sum()
                })
                .collect();
            constraints.insert(&row);
        }
    }
    n * n - constraints.rank()
}
