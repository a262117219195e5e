//! GF(2) subgroups and quotients of `Z₂ⁿ`, equivalence classes of the signed
//! base set `{−e_I, o, e_I}`, and the automorphism subgroups those classes
//! permit.
//!
//! Inside a class that is not glued to the reference point `o`, plain pair
//! swaps and single inversions are forbidden; only rearrangements with
//! inversion `(i, −j)` remain. Classes glued to `o` keep the full elementary
//! move set. Neighbouring classes are joined by `±(l, m)` at their boundary.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{group_order, SignedPermutation};
use crate::subgroups::{closure, generators, resolve_cross_pairs, GeneratorKind, GeneratorSet, GroupClosure, MAX_DEGREE};
use crate::verdict::{Status, Verdict};

pub const MAX_QUOTIENT_LENGTH: usize = 20;

/// Element of `Z₂ⁿ`, packed little-endian into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    n: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zero(n: usize) -> Self {
        Gf2Vector { n, words: vec![0; n.div_ceil(64)] }
    }

    /// Basis vector `e_i`, 1-based.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.set(i - 1, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zero(bits.len());
        for (k, &b) in bits.iter().enumerate() {
            v.set(k, b);
        }
        v
    }

    /// Low `n` bits of `x`, bit `k` holding coordinate `k+1`.
    pub fn from_u64(n: usize, x: u64) -> Self {
        assert!(n <= 64);
        let mut v = Self::zero(n);
        if n > 0 {
            v.words[0] = if n == 64 { x } else { x & ((1u64 << n) - 1) };
        }
        v
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// 0-based coordinate.
    pub fn get(&self, k: usize) -> bool {
        self.words[k / 64] >> (k % 64) & 1 == 1
    }

    fn set(&mut self, k: usize, b: bool) {
        if b {
            self.words[k / 64] |= 1 << (k % 64);
        } else {
            self.words[k / 64] &= !(1 << (k % 64));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Componentwise addition `x ⊕ y`.
    pub fn xor(&self, other: &Gf2Vector) -> Result<Gf2Vector> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Ok(Gf2Vector { n: self.n, words })
    }

    fn xor_assign(&mut self, other: &Gf2Vector) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    fn leading(&self) -> Option<usize> {
        (0..self.n).find(|&k| self.get(k))
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.n {
            f.write_str(if self.get(k) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Subgroup of `Z₂ⁿ` held as a reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Subgroup {
    n: usize,
    basis: Vec<Gf2Vector>,
    pivots: Vec<usize>,
}

impl Gf2Subgroup {
    pub fn trivial(n: usize) -> Self {
        Gf2Subgroup { n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        gf2_span(n, &(1..=n).map(|i| Gf2Vector::unit(n, i)).collect::<Vec<_>>()).expect("equal lengths")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `2^rank`; `None` if it does not fit in a `u128`.
    pub fn order(&self) -> Option<u128> {
        1u128.checked_shl(self.rank() as u32)
    }

    pub fn basis(&self) -> &[Gf2Vector] {
        &self.basis
    }

    /// Canonical representative of the coset `v + H`: the unique element
    /// of the coset that vanishes on every pivot.
    pub fn reduce(&self, v: &Gf2Vector) -> Gf2Vector {
        let mut r = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(b);
            }
        }
        r
    }

    pub fn contains(&self, v: &Gf2Vector) -> bool {
        v.n == self.n && self.reduce(v).is_zero()
    }

    fn insert(&mut self, v: &Gf2Vector) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.leading() else {
            return false;
        };
        // keep the basis fully reduced: clear the new pivot from older rows
        for b in &mut self.basis {
            if b.get(p) {
                b.xor_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }
}

pub fn gf2_span(n: usize, vectors: &[Gf2Vector]) -> Result<Gf2Subgroup> {
    let mut h = Gf2Subgroup::trivial(n);
    for v in vectors {
        if v.n != n {
            return Err(Error::LengthMismatch { left: n, right: v.n });
        }
        h.insert(v);
    }
    Ok(h)
}

/// `H(I_J)`: span of `e_j ⊕ e_k` for `j, k` in the same block.
pub fn standard_h(partition: &Partition) -> Gf2Subgroup {
    let n = partition.degree();
    let mut vectors = Vec::new();
    for block in partition.blocks() {
        let (start, end) = block.into_inner();
        for j in start..=end {
            for k in j + 1..=end {
                vectors.push(Gf2Vector::unit(n, j).xor(&Gf2Vector::unit(n, k)).expect("same length"));
            }
        }
    }
    gf2_span(n, &vectors).expect("same length")
}

/// Describes how a GF(2) class lifts to a residue class of the integers.
pub const Z_LIFT: &str = "0 -> 2Z, 1 -> 2Z+1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetReport {
    pub n: usize,
    pub subgroup_rank: usize,
    pub coset_count: u64,
    /// Canonical representatives in increasing order of their bit pattern.
    pub representatives: Vec<Gf2Vector>,
    /// Every representative doubled lands in the subgroup.
    pub exponent_at_most_two: bool,
    /// Every coset has exactly `|H|` members (checked by enumerating `Z₂ⁿ`).
    pub cosets_equal_size: bool,
    pub lift: &'static str,
}

pub fn quotient_cosets(h: &Gf2Subgroup) -> Result<CosetReport> {
    let n = h.n;
    if n > MAX_QUOTIENT_LENGTH {
        return Err(Error::SizeExceeded { what: "coset enumeration", needed: n as u128, limit: MAX_QUOTIENT_LENGTH as u128 });
    }
    let free: Vec<usize> = (0..n).filter(|k| !h.pivots.contains(k)).collect();
    let coset_count = 1u64 << free.len();
    let mut representatives: Vec<Gf2Vector> = (0..coset_count)
        .map(|code| {
            let mut v = Gf2Vector::zero(n);
            for (bit, &k) in free.iter().enumerate() {
                v.set(k, code >> bit & 1 == 1);
            }
            v
        })
        .collect();
    representatives.sort_by_key(|v| (0..n).rev().fold(0u64, |acc, k| acc << 1 | v.get(k) as u64));

    let exponent_at_most_two = representatives.iter().all(|r| h.contains(&r.xor(r).expect("same length")));

    let mut counts = std::collections::HashMap::new();
    for x in 0..(1u64 << n) {
        *counts.entry(h.reduce(&Gf2Vector::from_u64(n, x))).or_insert(0u64) += 1;
    }
    let size = 1u64 << h.rank();
    let cosets_equal_size = counts.len() as u64 == coset_count && counts.values().all(|&c| c == size);

    Ok(CosetReport {
        n,
        subgroup_rank: h.rank(),
        coset_count,
        representatives,
        exponent_at_most_two,
        cosets_equal_size,
        lift: Z_LIFT,
    })
}

/// Partition of the `2n` signed base symbols into classes, some of which are
/// glued to the reference point `o`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassStructure {
    pub partition: Partition,
    /// One class per block, each listing `−e_i` and `e_i` as `-i` and `i`.
    pub classes: Vec<Vec<i32>>,
    /// 0-based indices of the classes equivalent to `o`.
    pub o_classes: BTreeSet<usize>,
}

impl ClassStructure {
    pub fn n(&self) -> usize {
        self.partition.degree()
    }

    pub fn all_glued(&self) -> bool {
        self.o_classes.len() == self.classes.len()
    }

    pub fn none_glued(&self) -> bool {
        self.o_classes.is_empty()
    }
}

/// `o_blocks` holds 0-based block indices.
pub fn base_class_structure(partition: &Partition, o_blocks: &BTreeSet<usize>) -> Result<ClassStructure> {
    if let Some(&bad) = o_blocks.iter().find(|&&b| b >= partition.block_count()) {
        return Err(Error::BadPartition(format!("block index {bad} out of range for {partition}")));
    }
    let classes = partition
        .blocks()
        .map(|block| block.flat_map(|i| [-(i as i32), i as i32]).collect())
        .collect();
    Ok(ClassStructure { partition: partition.clone(), classes, o_classes: o_blocks.clone() })
}

/// Allowed elementary moves for a class structure.
pub fn topological_moves(classes: &ClassStructure) -> Result<GeneratorSet> {
    let n = classes.n();
    let partition = &classes.partition;
    let mut elements = Vec::new();
    for (j, block) in partition.blocks().enumerate() {
        let idx: Vec<usize> = block.collect();
        if classes.o_classes.contains(&j) {
            for (a, &i) in idx.iter().enumerate() {
                for &k in &idx[a + 1..] {
                    elements.push(SignedPermutation::transposition(n, i, k)?);
                }
            }
            for &i in &idx {
                elements.push(SignedPermutation::inversion(n, i)?);
            }
        } else {
            for &i in &idx {
                for &k in &idx {
                    if i != k {
                        elements.push(SignedPermutation::rearrangement_with_inversion(n, i, k)?);
                    }
                }
            }
        }
    }
    let pairs = resolve_cross_pairs(partition, None)?;
    for &(l, m) in &pairs {
        elements.push(SignedPermutation::transposition(n, l, m)?);
        elements.push(SignedPermutation::inverse_rearrangement(n, l, m)?);
    }
    Ok(GeneratorSet {
        kind: GeneratorKind::Topological,
        n,
        partition: Some(partition.clone()),
        cross_pairs: Some(pairs),
        elements,
    })
}

/// Closes the allowed moves and compares the result with `P⁺_{n₁,…,nₘ}`
/// (no class glued to `o`) or with `Pₙ` (every class glued).
pub fn topological_automorphism_group(classes: &ClassStructure, cap: usize) -> Result<(GroupClosure, Verdict)> {
    let n = classes.n();
    if n > MAX_DEGREE {
        return Err(Error::SizeExceeded { what: "topological automorphism closure", needed: group_order(n), limit: group_order(MAX_DEGREE) });
    }
    let key = classes.partition.key();
    let group = closure(&topological_moves(classes)?, cap)?;

    let verdict = if classes.none_glued() {
        let reference = closure(&generators(GeneratorKind::PplusComp, n, Some(&classes.partition), None)?, cap)?;
        compare_closures(format!("topo.partition.{key}"), &group, &reference, "pplus_comp")
    } else if classes.all_glued() {
        let expected = group_order(n);
        let ok = group.order() as u128 == expected;
        Verdict::new(format!("topo.allo.partition.{key}"), if ok { Status::Pass } else { Status::Report })
            .detail("order", group.order())
            .detail("expected", expected as u64)
            .witness(format!("order {} of 2^n n! = {expected}", group.order()))
    } else {
        let glued: Vec<String> = classes.o_classes.iter().map(|j| (j + 1).to_string()).collect();
        Verdict::new(format!("topo.mixed.partition.{key}.o{}", glued.join("-")), Status::Report)
            .detail("order", group.order())
            .witness(format!("order {}", group.order()))
    };
    Ok((group, verdict))
}

fn compare_closures(claim_id: String, group: &GroupClosure, reference: &GroupClosure, name: &str) -> Verdict {
    let a: HashSet<&SignedPermutation> = group.elements.iter().collect();
    let only_group: Vec<&SignedPermutation> = group.elements.iter().filter(|p| !reference.contains(p)).collect();
    let only_ref: Vec<&SignedPermutation> = reference.elements.iter().filter(|p| !a.contains(p)).collect();
    let equal = only_group.is_empty() && only_ref.is_empty();
    let mut v = Verdict::new(claim_id, if equal { Status::Pass } else { Status::Report })
        .detail("order", group.order())
        .detail(&format!("{name}_order"), reference.order())
        .detail("equal", equal)
        .witnesses(only_group.iter().take(5).map(|p| format!("topological only: {p}")))
        .witnesses(only_ref.iter().take(5).map(|p| format!("{name} only: {p}")));
    if equal {
        v = v.witness(format!("order {}", group.order()));
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusDescriptor {
    pub partition: Partition,
    pub space_label: String,
    pub automorphism_label: String,
}

pub fn torus_descriptor(partition: &Partition) -> TorusDescriptor {
    let space_label = partition.sizes().iter().map(|s| format!("S^{s}")).collect::<Vec<_>>().join("×");
    let sizes = partition.sizes().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
    TorusDescriptor { partition: partition.clone(), space_label, automorphism_label: format!("SO({sizes})") }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::make_signed_perm;
    use crate::subgroups::DEFAULT_CAP;
    use proptest::prelude::*;

    fn part(s: &[usize]) -> Partition {
        Partition::new(s.to_vec()).unwrap()
    }

    fn e(n: usize, i: usize) -> Gf2Vector {
        Gf2Vector::unit(n, i)
    }

    #[test]
    fn span_examples() {
        assert_eq!(gf2_span(3, &[]).unwrap().order(), Some(1));
        let h = gf2_span(3, &[e(3, 1).xor(&e(3, 2)).unwrap(), e(3, 2).xor(&e(3, 3)).unwrap()]).unwrap();
        assert_eq!(h.order(), Some(4));
        let members: Vec<u64> = (0..8).filter(|&x| h.contains(&Gf2Vector::from_u64(3, x))).collect();
        assert_eq!(members, vec![0b000, 0b011, 0b101, 0b110]);
        assert_eq!(gf2_span(3, &[e(3, 1), e(3, 1)]).unwrap().order(), Some(2));
        assert!(matches!(gf2_span(3, &[e(2, 1)]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn standard_h_examples() {
        let h = standard_h(&part(&[3]));
        assert_eq!((h.rank(), h.order()), (2, Some(4)));
        assert_eq!(standard_h(&part(&[1, 1, 1, 1])).rank(), 0);
        let h = standard_h(&part(&[2, 1]));
        assert_eq!(h.rank(), 1);
        assert!(h.contains(&e(3, 1).xor(&e(3, 2)).unwrap()));
    }

    #[test]
    fn standard_h_is_even_weight() {
        for n in 1..=6 {
            let h = standard_h(&Partition::single(n).unwrap());
            for x in 0..(1u64 << n) {
                let v = Gf2Vector::from_u64(n, x);
                assert_eq!(h.contains(&v), v.weight().is_multiple_of(2));
            }
        }
    }

    #[test]
    fn coset_examples() {
        for n in 1..=6 {
            let r = quotient_cosets(&standard_h(&Partition::single(n).unwrap())).unwrap();
            assert_eq!(r.coset_count, 2);
            assert!(r.exponent_at_most_two && r.cosets_equal_size);
        }
        assert_eq!(quotient_cosets(&standard_h(&part(&[2, 1]))).unwrap().coset_count, 4);
        let r = quotient_cosets(&Gf2Subgroup::full(5)).unwrap();
        assert_eq!(r.coset_count, 1);
        assert_eq!(r.representatives, vec![Gf2Vector::zero(5)]);
        assert!(matches!(quotient_cosets(&Gf2Subgroup::trivial(21)), Err(Error::SizeExceeded { .. })));
    }

    #[test]
    fn representatives_are_canonical() {
        let h = standard_h(&part(&[2, 2]));
        let r = quotient_cosets(&h).unwrap();
        for rep in &r.representatives {
            assert_eq!(&h.reduce(rep), rep);
        }
        let distinct: HashSet<_> = r.representatives.iter().collect();
        assert_eq!(distinct.len() as u64, r.coset_count);
    }

    #[test]
    fn class_structure_examples() {
        let c = base_class_structure(&part(&[3]), &BTreeSet::new()).unwrap();
        assert_eq!(c.classes, vec![vec![-1, 1, -2, 2, -3, 3]]);
        assert!(c.none_glued());
        let all: BTreeSet<usize> = (0..3).collect();
        let c = base_class_structure(&part(&[1, 1, 1]), &all).unwrap();
        assert!(c.all_glued());
        assert_eq!(c.classes.len(), 3);
        let c = base_class_structure(&part(&[2, 1]), &BTreeSet::new()).unwrap();
        assert_eq!(c.classes, vec![vec![-1, 1, -2, 2], vec![-3, 3]]);
        assert!(base_class_structure(&part(&[2, 1]), &BTreeSet::from([2])).is_err());
    }

    #[test]
    fn topological_group_examples() {
        let c = base_class_structure(&part(&[1, 1]), &BTreeSet::new()).unwrap();
        let (g, v) = topological_automorphism_group(&c, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(v.status, Status::Pass);

        for n in 1..=4 {
            for p in Partition::compositions(n) {
                let all: BTreeSet<usize> = (0..p.block_count()).collect();
                let c = base_class_structure(&p, &all).unwrap();
                let (g, v) = topological_automorphism_group(&c, DEFAULT_CAP).unwrap();
                assert_eq!(g.order() as u128, group_order(n), "{p}");
                assert_eq!(v.status, Status::Pass);
            }
        }

        let c = base_class_structure(&part(&[2]), &BTreeSet::new()).unwrap();
        let (g, _) = topological_automorphism_group(&c, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.contains(&make_signed_perm(&[-2, 1]).unwrap()));
    }

    #[test]
    fn topological_group_contains_in_class_generators() {
        for n in 2..=4 {
            for p in Partition::compositions(n) {
                let c = base_class_structure(&p, &BTreeSet::new()).unwrap();
                let (g, _) = topological_automorphism_group(&c, DEFAULT_CAP).unwrap();
                for block in p.blocks() {
                    let idx: Vec<usize> = block.collect();
                    for &i in &idx {
                        for &k in &idx {
                            if i != k {
                                assert!(g.contains(&SignedPermutation::rearrangement_with_inversion(n, i, k).unwrap()));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn torus_examples() {
        let t = torus_descriptor(&part(&[3]));
        assert_eq!((t.space_label.as_str(), t.automorphism_label.as_str()), ("S^3", "SO(3)"));
        let t = torus_descriptor(&part(&[2, 1]));
        assert_eq!((t.space_label.as_str(), t.automorphism_label.as_str()), ("S^2×S^1", "SO(2,1)"));
        let t = torus_descriptor(&part(&[1, 1]));
        assert_eq!((t.space_label.as_str(), t.automorphism_label.as_str()), ("S^1×S^1", "SO(1,1)"));
        assert_eq!(torus_descriptor(&part(&[1, 1])), t);
    }

    proptest! {
        #[test]
        fn lagrange_for_random_subgroups(n in 1usize..=12, seeds in proptest::collection::vec(any::<u64>(), 0..6)) {
            let vs: Vec<Gf2Vector> = seeds.iter().map(|&s| Gf2Vector::from_u64(n, s)).collect();
            let h = gf2_span(n, &vs).unwrap();
            let r = quotient_cosets(&h).unwrap();
            prop_assert_eq!(h.order().unwrap() * r.coset_count as u128, 1u128 << n);
            prop_assert!(r.exponent_at_most_two);
            prop_assert!(r.cosets_equal_size);
            for v in &vs {
                prop_assert!(h.contains(v));
            }
        }
    }
}
