use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ordered block sizes `(n₁, …, nₘ)` with contiguous blocks
/// `I₁ = {1, …, n₁}`, `I₂ = {n₁+1, …}`, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    sizes: Vec<usize>,
}

impl Partition {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::BadPartition("no blocks".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::BadPartition(format!("empty block in {sizes:?}")));
        }
        Ok(Partition { sizes })
    }

    /// Like [`new`](Self::new) but also checks that the sizes sum to `n`.
    pub fn of_degree(n: usize, sizes: Vec<usize>) -> Result<Self> {
        let p = Self::new(sizes)?;
        if p.degree() != n {
            return Err(Error::BadPartition(format!("sizes {:?} sum to {}, expected {n}", p.sizes, p.degree())));
        }
        Ok(p)
    }

    pub fn single(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn degree(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn block_count(&self) -> usize {
        self.sizes.len()
    }

    /// 1-based index range of block `j` (0-based block index).
    pub fn block(&self, j: usize) -> RangeInclusive<usize> {
        let start: usize = self.sizes[..j].iter().sum::<usize>() + 1;
        start..=start + self.sizes[j] - 1
    }

    pub fn blocks(&self) -> impl Iterator<Item = RangeInclusive<usize>> + '_ {
        (0..self.sizes.len()).map(|j| self.block(j))
    }

    /// Block containing the 1-based index `i`.
    pub fn block_of(&self, i: usize) -> Option<usize> {
        (0..self.sizes.len()).find(|&j| self.block(j).contains(&i))
    }

    /// Last index of each block except the final one.
    pub fn boundaries(&self) -> Vec<usize> {
        self.sizes[..self.sizes.len() - 1]
            .iter()
            .scan(0, |acc, s| {
                *acc += s;
                Some(*acc)
            })
            .collect()
    }

    /// Stable key used in claim ids, e.g. `2-1`.
    pub fn key(&self) -> String {
        self.sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("-")
    }

    /// All ordered compositions of `n`, in lexicographic order of sizes.
    pub fn compositions(n: usize) -> Vec<Partition> {
        fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { sizes: prefix.clone() });
                return;
            }
            for first in 1..=rest {
                prefix.push(first);
                go(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(sizes: Vec<usize>) -> Result<Self> {
        Partition::new(sizes)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.sizes
    }
}

/// Parses `a,b,c`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::BadPartition(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(sizes)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_and_boundaries() {
        let p = Partition::new(vec![2, 1, 3]).unwrap();
        assert_eq!(p.degree(), 6);
        assert_eq!(p.blocks().collect::<Vec<_>>(), vec![1..=2, 3..=3, 4..=6]);
        assert_eq!(p.boundaries(), vec![2, 3]);
        assert_eq!(p.block_of(5), Some(2));
        assert_eq!(p.block_of(7), None);
        assert_eq!(p.key(), "2-1-3");
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![1, 0]).is_err());
        assert!(Partition::of_degree(4, vec![1, 2]).is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!("2, 1".parse::<Partition>().unwrap().sizes(), &[2, 1]);
    }

    #[test]
    fn composition_counts() {
        for n in 1..=6 {
            assert_eq!(Partition::compositions(n).len(), 1 << (n - 1));
        }
        let keys: Vec<String> = Partition::compositions(3).iter().map(Partition::key).collect();
        assert_eq!(keys, ["1-1-1", "1-2", "2-1", "3"]);
    }
}
