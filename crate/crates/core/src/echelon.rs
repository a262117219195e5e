//! Fraction-free row echelon forms over the integers.
//!
//! Rational vectors are scaled to primitive integer vectors before they
//! enter an [`IntEchelon`]. Elimination uses cross-multiplication followed by
//! division by the content, so no fractions ever appear and entries stay
//! small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Rational;

/// Incrementally built echelon basis. Row `k` is zero at the pivots of rows
/// `0..k`, so reducing a vector against the rows in order leaves it zero at
/// every pivot.
#[derive(Debug, Clone)]
pub struct IntEchelon {
    width: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntEchelon {
    pub fn new(width: usize) -> Self {
        IntEchelon { width, rows: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let a = row[*pivot].clone();
            let b = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &a * &*x - &b * r;
            }
            make_primitive(&mut v);
        }
        v
    }

    /// Inserts `v` if it is independent of the current rows. Returns whether
    /// the rank grew.
    pub fn insert_int(&mut self, v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let v = self.reduce(v);
        match v.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }

    pub fn insert(&mut self, v: &[Rational]) -> bool {
        self.insert_int(to_primitive_ints(v))
    }

    pub fn contains_int(&self, v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.contains_int(to_primitive_ints(v))
    }

    /// Fraction-free Gauss–Jordan form: every row is zero at every pivot but
    /// its own. Rows are sorted by pivot column.
    pub fn reduced(&self) -> Vec<(usize, Vec<BigInt>)> {
        let mut rows = self.rows.clone();
        for k in 0..rows.len() {
            let (pivot, pivot_row) = rows[k].clone();
            for (j, (_, row)) in rows.iter_mut().enumerate() {
                if j == k || row[pivot].is_zero() {
                    continue;
                }
                let a = pivot_row[pivot].clone();
                let b = row[pivot].clone();
                for (x, r) in row.iter_mut().zip(&pivot_row) {
                    *x = &a * &*x - &b * r;
                }
                make_primitive(row);
            }
        }
        rows.sort_by_key(|(p, _)| *p);
        rows
    }

    /// Integer basis of `{x : row·x = 0 for every row}`.
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let reduced = self.reduced();
        let pivot_cols: Vec<usize> = reduced.iter().map(|(p, _)| *p).collect();
        let scale = reduced.iter().fold(BigInt::one(), |acc, (p, row)| acc.lcm(&row[*p]));
        let mut basis = Vec::new();
        for free in (0..self.width).filter(|c| !pivot_cols.contains(c)) {
            let mut x = vec![BigInt::zero(); self.width];
            x[free] = scale.clone();
            for (p, row) in &reduced {
                x[*p] = -(&row[free] * (&scale / &row[*p]));
            }
            make_primitive(&mut x);
            basis.push(x);
        }
        basis
    }
}

/// Divides out the content and normalizes the leading nonzero entry to be
/// positive.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return;
    }
    let negate = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if negate {
            *x = -&*x;
        }
    }
}

/// Scales a rational vector by the lcm of its denominators and removes the
/// content.
pub fn to_primitive_ints(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut out);
    out
}

pub fn rank_of<'a, I: IntoIterator<Item = &'a [Rational]>>(width: usize, vectors: I) -> usize {
    let mut e = IntEchelon::new(width);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::RationalMatrix;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = IntEchelon::new(3);
        assert!(e.insert_int(ints(&[2, 4, 6])));
        assert!(e.insert_int(ints(&[0, 1, 1])));
        assert!(!e.insert_int(ints(&[1, 3, 4])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains_int(ints(&[3, 7, 10])));
        assert!(!e.contains_int(ints(&[0, 0, 1])));
    }

    #[test]
    fn rational_scaling() {
        let v = vec![RationalMatrix::ratio(1, 2), RationalMatrix::ratio(-1, 3), RationalMatrix::int(0)];
        assert_eq!(to_primitive_ints(&v), ints(&[3, -2, 0]));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let mut e = IntEchelon::new(4);
        e.insert_int(ints(&[1, 2, 0, -1]));
        e.insert_int(ints(&[0, 3, 1, 1]));
        let ns = e.nullspace();
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for row in [ints(&[1, 2, 0, -1]), ints(&[0, 3, 1, 1])] {
                let dot: BigInt = row.iter().zip(x).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
