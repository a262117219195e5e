//! Arrangement parity and the rectangular determinant over a row subset.
//!
//! An arrangement assigns distinct signed values from `{±1, …, ±n}` to an
//! ordered set of slots `I* ⊆ {1, …, n}`. The elementary moves between
//! arrangements are
//!
//! * swapping the values held by two slots,
//! * replacing one value by an unused value (keeping its sign),
//! * inverting the sign of one value.
//!
//! Two parity conventions are offered. [`ParityConvention::Canonical`] is a
//! closed form that is always defined. [`ParityConvention::BfsOracle`] takes
//! the breadth-first distance from the identity arrangement in the move
//! graph, and is only meaningful when that graph is bipartite; the move graph
//! has odd cycles as soon as two values are unused, so the oracle reports
//! [`ArrangementParity::IllDefined`] there.

use std::collections::{HashMap, VecDeque};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Rational, RationalMatrix};
use crate::partition::Partition;
use crate::perm::{inversion_count, Parity, SignedPermutation};

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedArrangement {
    n: usize,
    slots: Vec<usize>,
    values: Vec<i32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParityConvention {
    #[default]
    Canonical,
    BfsOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArrangementParity {
    Defined(Parity),
    IllDefined,
}

impl SignedArrangement {
    pub fn new(n: usize, slots: Vec<usize>, values: Vec<i32>) -> Result<Self> {
        let slots = normalize_subset(n, &slots)?;
        if slots.len() != values.len() {
            return Err(Error::LengthMismatch { left: slots.len(), right: values.len() });
        }
        let mut seen = vec![false; n];
        for &v in &values {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::IndexOutOfRange { index: v as i64, n });
            }
            if std::mem::replace(&mut seen[a - 1], true) {
                return Err(Error::InvalidImages { images: values, reason: format!("duplicate absolute value {a}") });
            }
        }
        Ok(SignedArrangement { n, slots, values })
    }

    pub fn identity(n: usize, slots: &[usize]) -> Result<Self> {
        let slots = normalize_subset(n, slots)?;
        let values = slots.iter().map(|&s| s as i32).collect();
        Ok(SignedArrangement { n, slots, values })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.slots.iter().zip(&self.values).all(|(&s, &v)| v == s as i32)
    }

    /// Inversions among the values that still lie in the slot set, plus the
    /// number of values taken from outside it, plus the number of negative
    /// values, mod 2.
    pub fn canonical_parity(&self) -> Parity {
        let in_slots = |a: u32| self.slots.binary_search(&(a as usize)).is_ok();
        let retained = self.values.iter().map(|v| v.unsigned_abs()).filter(|&a| in_slots(a));
        let displaced = self.values.iter().filter(|v| !in_slots(v.unsigned_abs())).count();
        let negatives = self.values.iter().filter(|&&v| v < 0).count();
        Parity::from_count(inversion_count(retained) + displaced + negatives)
    }

    /// Every arrangement one elementary move away, in a fixed order: slot
    /// swaps, then replacements, then sign inversions.
    pub fn elementary_moves(&self) -> Vec<SignedArrangement> {
        let k = self.values.len();
        let mut used = vec![false; self.n + 1];
        for v in &self.values {
            used[v.unsigned_abs() as usize] = true;
        }
        let mut out = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                let mut values = self.values.clone();
                values.swap(a, b);
                out.push(self.with_values(values));
            }
        }
        for a in 0..k {
            for u in (1..=self.n).filter(|&u| !used[u]) {
                let mut values = self.values.clone();
                values[a] = self.values[a].signum() * u as i32;
                out.push(self.with_values(values));
            }
        }
        for a in 0..k {
            let mut values = self.values.clone();
            values[a] = -values[a];
            out.push(self.with_values(values));
        }
        out
    }

    fn with_values(&self, values: Vec<i32>) -> SignedArrangement {
        SignedArrangement { n: self.n, slots: self.slots.clone(), values }
    }
}

fn normalize_subset(n: usize, subset: &[usize]) -> Result<Vec<usize>> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&bad) = s.iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::IndexOutOfRange { index: bad as i64, n });
    }
    Ok(s)
}

/// Restriction `p* = p(I*)` of a signed permutation to a row subset.
pub fn restrict(p: &SignedPermutation, subset: &[usize]) -> Result<SignedArrangement> {
    let slots = normalize_subset(p.degree(), subset)?;
    let values = slots.iter().map(|&s| p.image(s)).collect();
    Ok(SignedArrangement { n: p.degree(), slots, values })
}

/// Number of arrangements of `k` slots with values from `{±1, …, ±n}`.
pub fn arrangement_count(n: usize, k: usize) -> u128 {
    ((n - k + 1)..=n).map(|x| x as u128).product::<u128>() << k
}

/// The full move graph on arrangements of one slot set, with breadth-first
/// distances from the identity arrangement.
#[derive(Debug, Clone)]
pub struct MoveGraph {
    nodes: Vec<SignedArrangement>,
    index: HashMap<Vec<i32>, usize>,
    dist: Vec<usize>,
    parent: Vec<Option<usize>>,
    edge_count: usize,
    odd_edge: Option<(usize, usize)>,
}

impl MoveGraph {
    pub fn build(n: usize, subset: &[usize], node_cap: usize) -> Result<Self> {
        let root = SignedArrangement::identity(n, subset)?;
        let needed = arrangement_count(n, root.slots.len());
        if needed > node_cap as u128 {
            return Err(Error::SizeExceeded { what: "arrangement move graph", needed, limit: node_cap as u128 });
        }
        let mut g = MoveGraph {
            nodes: vec![root.clone()],
            index: HashMap::from([(root.values.clone(), 0)]),
            dist: vec![0],
            parent: vec![None],
            edge_count: 0,
            odd_edge: None,
        };
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for next in g.nodes[u].elementary_moves() {
                g.edge_count += 1;
                match g.index.get(&next.values) {
                    Some(&v) => {
                        if g.odd_edge.is_none() && g.dist[v] == g.dist[u] {
                            g.odd_edge = Some((u, v));
                        }
                    }
                    None => {
                        let v = g.nodes.len();
                        g.index.insert(next.values.clone(), v);
                        g.nodes.push(next);
                        g.dist.push(g.dist[u] + 1);
                        g.parent.push(Some(u));
                        queue.push_back(v);
                    }
                }
            }
        }
        // every undirected edge was seen from both ends
        g.edge_count /= 2;
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_edge.is_none()
    }

    pub fn nodes(&self) -> &[SignedArrangement] {
        &self.nodes
    }

    pub fn parity_of(&self, a: &SignedArrangement) -> ArrangementParity {
        if !self.is_bipartite() {
            return ArrangementParity::IllDefined;
        }
        match self.index.get(&a.values) {
            Some(&i) if a.slots == self.nodes[0].slots => ArrangementParity::Defined(Parity::from_count(self.dist[i])),
            _ => ArrangementParity::IllDefined,
        }
    }

    /// An odd closed walk through the breadth-first tree, if one exists. The
    /// first node is repeated at the end.
    pub fn odd_cycle(&self) -> Option<Vec<SignedArrangement>> {
        let (u, v) = self.odd_edge?;
        let path_to_root = |mut x: usize| {
            let mut path = vec![x];
            while let Some(p) = self.parent[x] {
                path.push(p);
                x = p;
            }
            path
        };
        let pu = path_to_root(u);
        let pv = path_to_root(v);
        // strip the shared tail down to the lowest common ancestor
        let mut i = pu.len();
        let mut j = pv.len();
        while i > 1 && j > 1 && pu[i - 2] == pv[j - 2] {
            i -= 1;
            j -= 1;
        }
        let mut cycle: Vec<usize> = pu[..i].to_vec();
        cycle.extend(pv[..j - 1].iter().rev());
        cycle.push(u);
        Some(cycle.into_iter().map(|k| self.nodes[k].clone()).collect())
    }
}

pub fn arrangement_parity(a: &SignedArrangement, convention: ParityConvention) -> ArrangementParity {
    match convention {
        ParityConvention::Canonical => ArrangementParity::Defined(a.canonical_parity()),
        ParityConvention::BfsOracle => match MoveGraph::build(a.n, &a.slots, DEFAULT_NODE_CAP) {
            Ok(g) => g.parity_of(a),
            Err(_) => ArrangementParity::IllDefined,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub values: Vec<i32>,
    pub bfs: Parity,
    pub canonical: Parity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellDefinednessReport {
    pub n: usize,
    pub subset: Vec<usize>,
    pub nodes: usize,
    pub edges: usize,
    pub bipartite: bool,
    /// Value sequences along an odd closed walk, first node repeated last.
    pub odd_cycle: Option<Vec<Vec<i32>>>,
    /// Arrangements where both conventions were compared (zero when the
    /// oracle is ill-defined).
    pub compared: usize,
    pub agreements: usize,
    pub first_disagreement: Option<Disagreement>,
}

impl WellDefinednessReport {
    pub fn disagreements(&self) -> usize {
        self.compared - self.agreements
    }
}

pub fn parity_well_definedness_report(n: usize, subset: &[usize]) -> Result<WellDefinednessReport> {
    parity_well_definedness_report_capped(n, subset, DEFAULT_NODE_CAP)
}

pub fn parity_well_definedness_report_capped(
    n: usize,
    subset: &[usize],
    node_cap: usize,
) -> Result<WellDefinednessReport> {
    if subset.is_empty() {
        return Err(Error::Empty("subset"));
    }
    let g = MoveGraph::build(n, subset, node_cap)?;
    let mut compared = 0;
    let mut agreements = 0;
    let mut first_disagreement = None;
    if g.is_bipartite() {
        for (node, &d) in g.nodes.iter().zip(&g.dist) {
            compared += 1;
            let bfs = Parity::from_count(d);
            let canonical = node.canonical_parity();
            if bfs == canonical {
                agreements += 1;
            } else if first_disagreement.is_none() {
                first_disagreement = Some(Disagreement { values: node.values.clone(), bfs, canonical });
            }
        }
    }
    Ok(WellDefinednessReport {
        n,
        subset: g.nodes[0].slots.clone(),
        nodes: g.node_count(),
        edges: g.edge_count(),
        bipartite: g.is_bipartite(),
        odd_cycle: g.odd_cycle().map(|c| c.into_iter().map(|a| a.values).collect()),
        compared,
        agreements,
        first_disagreement,
    })
}

/// Whether the canonical convention gives odd parity to every arrangement
/// one elementary move away from the identity on `subset`.
pub fn canonical_moves_are_odd(n: usize, subset: &[usize]) -> Result<bool> {
    let id = SignedArrangement::identity(n, subset)?;
    Ok(id.elementary_moves().iter().all(|a| a.canonical_parity() == Parity::Odd))
}

/// `det A(I*)`: the sum over injective assignments `s*` of columns to the
/// rows in `rows` of `(−1)^{σ(s*)} · Π a_{i, s*(i)}`. Rows are 1-based.
///
/// Only assignments with a nonzero product are visited. With the bfs oracle
/// any such assignment whose parity is ill-defined is an error.
pub fn rect_det(m: &RationalMatrix, rows: &[usize], convention: ParityConvention) -> Result<Rational> {
    let n = m.dim();
    let rows = normalize_subset(n, rows)?;
    if rows.is_empty() {
        return Err(Error::Empty("rows"));
    }
    let graph = match convention {
        ParityConvention::Canonical => None,
        ParityConvention::BfsOracle => Some(MoveGraph::build(n, &rows, DEFAULT_NODE_CAP)?),
    };

    let mut total = Rational::zero();
    let mut cols: Vec<usize> = Vec::with_capacity(rows.len());
    let mut used = vec![false; n];
    let mut failure = None;
    let mut visit = |cols: &[usize], product: &Rational| {
        let values: Vec<i32> = cols.iter().map(|&c| c as i32 + 1).collect();
        let a = SignedArrangement { n, slots: rows.clone(), values };
        let parity = match &graph {
            None => ArrangementParity::Defined(a.canonical_parity()),
            Some(g) => g.parity_of(&a),
        };
        match parity {
            ArrangementParity::Defined(Parity::Even) => total += product,
            ArrangementParity::Defined(Parity::Odd) => total -= product,
            ArrangementParity::IllDefined => {
                failure.get_or_insert_with(|| format!("parity of arrangement {:?} on rows {:?}", a.values, rows));
            }
        }
    };
    assign(m, &rows, &mut cols, &mut used, Rational::one(), &mut visit);
    match failure {
        Some(msg) => Err(Error::ConventionNotTotal(msg)),
        None => Ok(total),
    }
}

fn assign(
    m: &RationalMatrix,
    rows: &[usize],
    cols: &mut Vec<usize>,
    used: &mut [bool],
    product: Rational,
    visit: &mut impl FnMut(&[usize], &Rational),
) {
    let depth = cols.len();
    if depth == rows.len() {
        visit(cols, &product);
        return;
    }
    let row = rows[depth] - 1;
    for c in 0..m.dim() {
        if used[c] || m.get(row, c).is_zero() {
            continue;
        }
        used[c] = true;
        cols.push(c);
        assign(m, rows, cols, used, &product * m.get(row, c), visit);
        cols.pop();
        used[c] = false;
    }
}

/// Product over blocks of `rect_det(matrix_rep(p), block)`; always `±1`.
pub fn component_character(p: &SignedPermutation, partition: &Partition, convention: ParityConvention) -> Result<i32> {
    if partition.degree() != p.degree() {
        return Err(Error::BadPartition(format!(
            "partition {partition} has degree {}, permutation has degree {}",
            partition.degree(),
            p.degree()
        )));
    }
    let m = p.matrix_rep();
    let mut acc = Rational::one();
    for block in partition.blocks() {
        let rows: Vec<usize> = block.collect();
        acc *= rect_det(&m, &rows, convention)?;
    }
    if acc.is_one() {
        Ok(1)
    } else if (-&acc).is_one() {
        Ok(-1)
    } else {
        unreachable!("component character of a signed permutation must be ±1, got {acc}")
    }
}
