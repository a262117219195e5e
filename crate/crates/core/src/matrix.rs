//! Exact square matrices over the rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn int(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    pub fn ratio(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        RationalMatrix { n, entries: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Matrix unit `E_ij` (0-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m.entries[i * n + j] = Rational::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty("matrix rows"));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix { n, entries })
    }

    /// Panics unless `rows` is square.
    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&v| Self::int(v)).collect()).collect();
        Self::from_rows(rows).expect("square integer matrix")
    }

    /// Row-major vectorization, inverse of [`vectorize`](Self::vectorize).
    pub fn from_vector(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { left: n * n, right: entries.len() });
        }
        Ok(RationalMatrix { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn set_int(&mut self, i: usize, j: usize, v: i64) {
        self.set(i, j, Self::int(v));
    }

    /// Row-major entries.
    pub fn vectorize(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        out
    }

    /// Panics on dimension mismatch; use [`checked_mul`](Self::checked_mul) otherwise.
    pub fn mul(&self, rhs: &RationalMatrix) -> Self {
        self.checked_mul(rhs).expect("dimension mismatch")
    }

    pub fn checked_mul(&self, rhs: &RationalMatrix) -> Result<Self> {
        self.check_dim(rhs)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &RationalMatrix) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        RationalMatrix { n: self.n, entries }
    }

    pub fn sub(&self, rhs: &RationalMatrix) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        RationalMatrix { n: self.n, entries }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix { n: self.n, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        RationalMatrix { n: self.n, entries: self.entries.iter().map(|a| -a).collect() }
    }

    /// `[self, rhs] = self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &RationalMatrix) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        *self == self.transpose().neg()
    }

    /// Embeds a 2×2 block at rows/columns `(i, j)` (0-based) of the identity.
    pub fn embed_block(n: usize, i: usize, j: usize, block: [[Rational; 2]; 2]) -> Self {
        let mut m = Self::identity(n);
        let [[a, b], [c, d]] = block;
        m.set(i, i, a);
        m.set(i, j, b);
        m.set(j, i, c);
        m.set(j, j, d);
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, v) in diag.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    /// Determinant by exact Gaussian elimination.
    pub fn determinant(&self) -> Rational {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                let f = &a[r * n + col] / &p;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let sub = &f * &a[col * n + j];
                    a[r * n + j] -= sub;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero()).ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[col * n + col].clone();
            for j in 0..n {
                a[col * n + j] /= &p;
                inv[col * n + j] /= &p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let s1 = &f * &a[col * n + j];
                    a[r * n + j] -= s1;
                    let s2 = &f * &inv[col * n + j];
                    inv[r * n + j] -= s2;
                }
            }
        }
        Ok(RationalMatrix { n, entries: inv })
    }

    fn check_dim(&self, rhs: &RationalMatrix) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { left: self.n, right: rhs.n });
        }
        Ok(())
    }
}

/// Parses the plain-text matrix format: one row per line, entries written as
/// integers or `p/q`, separated by whitespace. Blank lines are skipped.
impl FromStr for RationalMatrix {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut rows = Vec::new();
        for (lineno, line) in s.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    let r = Rational::from_str(tok)
                        .map_err(|e| format!("line {}: bad entry {tok:?}: {e}", lineno + 1))?;
                    Ok(r)
                })
                .collect::<std::result::Result<Vec<_>, String>>()?;
            rows.push(row);
        }
        RationalMatrix::from_rows(rows).map_err(|e| e.to_string())
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            if i + 1 < self.n {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// Cofactor-expansion determinant. Exponential; kept as an independent
/// check on [`RationalMatrix::determinant`].
pub fn cofactor_determinant(m: &RationalMatrix) -> Rational {
    fn go(m: &RationalMatrix, rows: &[usize], cols: &[usize]) -> Rational {
        if rows.is_empty() {
            return Rational::one();
        }
        let r = rows[0];
        let mut acc = Rational::zero();
        for (k, &c) in cols.iter().enumerate() {
            let a = m.get(r, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * go(m, &rows[1..], &rest);
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
    let idx: Vec<usize> = (0..m.dim()).collect();
    go(m, &idx, &idx)
}

#[cfg(test)]
pub(crate) fn is_abs_one(r: &Rational) -> bool {
    use num_traits::Signed;
    r.abs().is_one()
}
