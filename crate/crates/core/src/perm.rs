//! Signed permutations: the elements of the hyperoctahedral group `S₂ ≀ Sₙ`.
//!
//! A signed permutation of degree `n` is stored as its image sequence
//! `p(1), …, p(n)` with every image in `{±1, …, ±n}` and the absolute values
//! forming a bijection of `{1, …, n}`. Indices in the public API are 1-based
//! to match the usual notation, so `[-2, 1]` sends `1 ↦ -2` and `2 ↦ 1`.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    /// `+1` for even, `-1` for odd.
    pub fn sign(self) -> i32 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// An element of the monomial group `Pₙ`.
///
/// Ordering and hashing follow the image sequence, which is also the
/// canonical encoding used for deduplication and report ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    /// Validates an image sequence. The degree is its length.
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidImages { images, reason: "degree must be at least 1".into() });
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 {
                return Err(Error::InvalidImages { images, reason: "zero entry".into() });
            }
            let a = v.unsigned_abs() as usize;
            if a > n {
                return Err(Error::InvalidImages { images, reason: format!("|{v}| exceeds degree {n}") });
            }
            if std::mem::replace(&mut seen[a - 1], true) {
                return Err(Error::InvalidImages { images, reason: format!("duplicate absolute value {a}") });
            }
        }
        Ok(SignedPermutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::new(images.clone()).is_ok());
        SignedPermutation { images }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        SignedPermutation { images: (1..=n as i32).collect() }
    }

    /// Plain transposition `(i, j)` of two positions.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        check_pair(n, i, j)?;
        let mut images: Vec<i32> = (1..=n as i32).collect();
        images.swap(i - 1, j - 1);
        Ok(SignedPermutation { images })
    }

    /// Inversion of the single arrow at position `i`.
    pub fn inversion(n: usize, i: usize) -> Result<Self> {
        check_index(n, i)?;
        let mut images: Vec<i32> = (1..=n as i32).collect();
        images[i - 1] = -images[i - 1];
        Ok(SignedPermutation { images })
    }

    /// Rearrangement with inversion `(j, -k)`: `j ↦ -k`, `k ↦ j`.
    pub fn rearrangement_with_inversion(n: usize, j: usize, k: usize) -> Result<Self> {
        check_pair(n, j, k)?;
        let mut images: Vec<i32> = (1..=n as i32).collect();
        images[j - 1] = -(k as i32);
        images[k - 1] = j as i32;
        Ok(SignedPermutation { images })
    }

    /// Inverse rearrangement `-(l, m)`: `l ↦ -m`, `m ↦ -l`.
    pub fn inverse_rearrangement(n: usize, l: usize, m: usize) -> Result<Self> {
        check_pair(n, l, m)?;
        let mut images: Vec<i32> = (1..=n as i32).collect();
        images[l - 1] = -(m as i32);
        images[m - 1] = -(l as i32);
        Ok(SignedPermutation { images })
    }

    /// The 3-cycle `i ↦ j ↦ k ↦ i`.
    pub fn three_cycle(n: usize, i: usize, j: usize, k: usize) -> Result<Self> {
        check_pair(n, i, j)?;
        check_pair(n, j, k)?;
        check_pair(n, i, k)?;
        let mut images: Vec<i32> = (1..=n as i32).collect();
        images[i - 1] = j as i32;
        images[j - 1] = k as i32;
        images[k - 1] = i as i32;
        Ok(SignedPermutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `p(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> i32 {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k as i32 + 1)
    }

    /// True when no image is negative, i.e. the element lies in `Sₙ`.
    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&v| v > 0)
    }

    /// `(outer ∘ inner)(i) = sgn inner(i) · outer(|inner(i)|)`.
    pub fn compose(outer: &SignedPermutation, inner: &SignedPermutation) -> Result<Self> {
        if outer.degree() != inner.degree() {
            return Err(Error::DegreeMismatch { left: outer.degree(), right: inner.degree() });
        }
        Ok(outer.compose_unchecked(inner))
    }

    pub(crate) fn compose_unchecked(&self, inner: &SignedPermutation) -> Self {
        let images = inner
            .images
            .iter()
            .map(|&v| v.signum() * self.images[v.unsigned_abs() as usize - 1])
            .collect();
        SignedPermutation { images }
    }

    /// `self ∘ rhs`, panicking on degree mismatch.
    pub fn then_apply_after(&self, rhs: &SignedPermutation) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v.unsigned_abs() as usize - 1] = v.signum() * (i as i32 + 1);
        }
        SignedPermutation { images }
    }

    /// Inversions of the underlying permutation plus the number of negative
    /// images, mod 2.
    pub fn parity(&self) -> Parity {
        let negatives = self.images.iter().filter(|&&v| v < 0).count();
        Parity::from_count(inversion_count(self.images.iter().map(|v| v.unsigned_abs())) + negatives)
    }

    /// Column-action matrix: `sgn p(i)` at row `|p(i)|`, column `i`.
    ///
    /// With this placement `matrix_rep(p ∘ q) = matrix_rep(p) · matrix_rep(q)`.
    pub fn matrix_rep(&self) -> RationalMatrix {
        let n = self.degree();
        let mut m = RationalMatrix::zeros(n);
        for (i, &v) in self.images.iter().enumerate() {
            m.set_int(v.unsigned_abs() as usize - 1, i, v.signum() as i64);
        }
        m
    }

    /// Row placement: `sgn p(i)` at row `i`, column `|p(i)|`. This is the
    /// transpose of [`matrix_rep`](Self::matrix_rep) and composes
    /// anti-homomorphically.
    pub fn row_matrix(&self) -> RationalMatrix {
        self.matrix_rep().transpose()
    }

    /// Action on a signed basis index: `±e_k ↦ ±sgn p(k) · e_{|p(k)|}`.
    pub fn act_on_basis(&self, k: i32) -> Result<i32> {
        let a = k.unsigned_abs() as usize;
        if a == 0 || a > self.degree() {
            return Err(Error::IndexOutOfRange { index: k as i64, n: self.degree() });
        }
        Ok(k.signum() * self.images[a - 1])
    }
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;

    fn try_from(images: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(images)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(p: SignedPermutation) -> Vec<i32> {
        p.images
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

pub fn make_signed_perm(images: &[i32]) -> Result<SignedPermutation> {
    SignedPermutation::new(images.to_vec())
}

pub fn compose(outer: &SignedPermutation, inner: &SignedPermutation) -> Result<SignedPermutation> {
    SignedPermutation::compose(outer, inner)
}

pub(crate) fn inversion_count<I: IntoIterator<Item = u32>>(seq: I) -> usize {
    let v: Vec<u32> = seq.into_iter().collect();
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i as i64, n });
    }
    Ok(())
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    check_index(n, i)?;
    check_index(n, j)?;
    if i == j {
        return Err(Error::InvalidImages { images: vec![], reason: format!("positions {i} and {j} coincide") });
    }
    Ok(())
}

/// All arrowy transpositions of degree `n`: every plain transposition
/// `(i, j)`, `i < j`, followed by every single inversion `(i)`.
pub fn arrowy_transpositions(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(SignedPermutation::transposition(n, i, j).expect("valid pair"));
        }
    }
    for i in 1..=n {
        out.push(SignedPermutation::inversion(n, i).expect("valid index"));
    }
    out
}

/// All `n!` permutations of `1..=n` in lexicographic order.
pub fn unsigned_permutations(n: usize) -> Vec<Vec<i32>> {
    let mut current: Vec<i32> = (1..=n as i32).collect();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

fn next_permutation(v: &mut [i32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every element of `Pₙ` (`2ⁿ·n!` of them), sorted by image sequence.
pub fn all_signed_permutations(n: usize) -> Vec<SignedPermutation> {
    assert!(n >= 1, "degree must be at least 1");
    let mut out = Vec::new();
    for perm in unsigned_permutations(n) {
        for mask in 0u64..(1u64 << n) {
            let images = perm
                .iter()
                .enumerate()
                .map(|(k, &v)| if mask >> k & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedPermutation { images });
        }
    }
    out.sort();
    out
}

/// `2ⁿ·n!` as an exact count.
pub fn group_order(n: usize) -> u128 {
    (1..=n as u128).product::<u128>() << n
}
