//! Generating sets for the subgroups of the monomial group, exhaustive
//! closure, and harnesses comparing generated groups with their
//! determinant characterizations.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arrangements::{component_character, ParityConvention};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{all_signed_permutations, group_order, unsigned_permutations, SignedPermutation};
use crate::verdict::{Status, Verdict};

/// Largest degree for which exhaustive enumeration of `Pₙ` is attempted.
pub const MAX_DEGREE: usize = 8;

pub const DEFAULT_CAP: usize = 10_000_000;

/// How many witnesses a verdict lists per discrepancy kind.
const WITNESS_LIMIT: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorKind {
    /// All plain transpositions and single inversions: the full group `Pₙ`.
    P,
    /// All rearrangements with inversion `(j, -k)`.
    Pplus,
    /// All 3-cycles.
    Splus,
    /// 3-cycles inside blocks plus one plain cross transposition per boundary.
    SplusComp,
    /// `(i, -j)` inside blocks plus `±(l, m)` for each cross pair.
    PplusComp,
    /// Copies of `P₂` on adjacent positions `(i, i+1)`.
    P2blocks,
    /// Allowed elementary moves of a base-set class structure; built by
    /// [`crate::zquot::topological_moves`], not by [`generators`].
    Topological,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 6] = [
        GeneratorKind::P,
        GeneratorKind::Pplus,
        GeneratorKind::Splus,
        GeneratorKind::SplusComp,
        GeneratorKind::PplusComp,
        GeneratorKind::P2blocks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::P => "P",
            GeneratorKind::Pplus => "Pplus",
            GeneratorKind::Splus => "Splus",
            GeneratorKind::SplusComp => "SplusComp",
            GeneratorKind::PplusComp => "PplusComp",
            GeneratorKind::P2blocks => "P2blocks",
            GeneratorKind::Topological => "Topological",
        }
    }

    pub fn needs_partition(self) -> bool {
        matches!(self, GeneratorKind::SplusComp | GeneratorKind::PplusComp)
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown generator kind {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub kind: GeneratorKind,
    pub n: usize,
    pub partition: Option<Partition>,
    pub cross_pairs: Option<Vec<(usize, usize)>>,
    pub elements: Vec<SignedPermutation>,
}

/// Builds the explicit generator list. `cross_pairs` defaults to one pair
/// `(c, c+1)` at each block boundary `c`.
pub fn generators(
    kind: GeneratorKind,
    n: usize,
    partition: Option<&Partition>,
    cross_pairs: Option<&[(usize, usize)]>,
) -> Result<GeneratorSet> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { kind: kind.name(), n, min: 1 });
    }
    let partition = if kind.needs_partition() {
        let p = partition.ok_or_else(|| Error::BadPartition(format!("{kind} requires a partition")))?;
        if p.degree() != n {
            return Err(Error::BadPartition(format!("partition {p} does not have degree {n}")));
        }
        Some(p.clone())
    } else {
        None
    };
    let pairs = match &partition {
        Some(p) => Some(resolve_cross_pairs(p, cross_pairs)?),
        None => None,
    };

    let mut elements = Vec::new();
    match kind {
        GeneratorKind::Topological => {
            return Err(Error::BadPartition("topological moves need a class structure".into()));
        }
        GeneratorKind::P => elements = crate::perm::arrowy_transpositions(n),
        GeneratorKind::Pplus => elements = rearrangements_with_inversion(n, 1..=n),
        GeneratorKind::Splus => {
            if n < 3 {
                return Err(Error::DegreeTooSmall { kind: kind.name(), n, min: 3 });
            }
            elements = three_cycles(n, 1..=n);
        }
        GeneratorKind::SplusComp => {
            let p = partition.as_ref().expect("partition");
            for block in p.blocks() {
                elements.extend(three_cycles(n, block));
            }
            for &(l, m) in pairs.as_ref().expect("pairs") {
                elements.push(SignedPermutation::transposition(n, l, m)?);
            }
        }
        GeneratorKind::PplusComp => {
            let p = partition.as_ref().expect("partition");
            for block in p.blocks() {
                elements.extend(rearrangements_with_inversion(n, block));
            }
            for &(l, m) in pairs.as_ref().expect("pairs") {
                elements.push(SignedPermutation::transposition(n, l, m)?);
                elements.push(SignedPermutation::inverse_rearrangement(n, l, m)?);
            }
        }
        GeneratorKind::P2blocks => {
            if n < 2 {
                return Err(Error::DegreeTooSmall { kind: kind.name(), n, min: 2 });
            }
            let p2 = all_signed_permutations(2);
            for i in 1..n {
                for q in &p2 {
                    let mut images: Vec<i32> = (1..=n as i32).collect();
                    images[i - 1] = q.image(1).signum() * (q.image(1).abs() + i as i32 - 1);
                    images[i] = q.image(2).signum() * (q.image(2).abs() + i as i32 - 1);
                    elements.push(SignedPermutation::from_images_unchecked(images));
                }
            }
        }
    }

    let mut seen = HashSet::new();
    elements.retain(|g| !g.is_identity() && seen.insert(g.clone()));
    Ok(GeneratorSet { kind, n, partition, cross_pairs: pairs, elements })
}

fn rearrangements_with_inversion(n: usize, range: std::ops::RangeInclusive<usize>) -> Vec<SignedPermutation> {
    let idx: Vec<usize> = range.collect();
    let mut out = Vec::new();
    for &j in &idx {
        for &k in &idx {
            if j != k {
                out.push(SignedPermutation::rearrangement_with_inversion(n, j, k).expect("valid pair"));
            }
        }
    }
    out
}

fn three_cycles(n: usize, range: std::ops::RangeInclusive<usize>) -> Vec<SignedPermutation> {
    let idx: Vec<usize> = range.collect();
    let mut out = Vec::new();
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate().skip(a + 1) {
            for &k in idx.iter().skip(b + 1) {
                out.push(SignedPermutation::three_cycle(n, i, j, k).expect("distinct"));
                out.push(SignedPermutation::three_cycle(n, i, k, j).expect("distinct"));
            }
        }
    }
    out
}

/// Validates explicit cross pairs, or produces the default boundary pairs.
/// Each pair is normalized so that `l` lies in the earlier block.
pub fn resolve_cross_pairs(partition: &Partition, cross_pairs: Option<&[(usize, usize)]>) -> Result<Vec<(usize, usize)>> {
    let Some(pairs) = cross_pairs else {
        return Ok(partition.boundaries().into_iter().map(|c| (c, c + 1)).collect());
    };
    pairs
        .iter()
        .map(|&(a, b)| {
            let (l, m) = if a <= b { (a, b) } else { (b, a) };
            let bad = |reason: &str| Error::BadCrossPair { l: a, m: b, reason: reason.into() };
            let bl = partition.block_of(l).ok_or_else(|| bad("index out of range"))?;
            let bm = partition.block_of(m).ok_or_else(|| bad("index out of range"))?;
            if bm != bl + 1 {
                return Err(bad("pair does not span adjacent blocks"));
            }
            Ok((l, m))
        })
        .collect()
}

/// Exhaustively generated subgroup. Elements are ordered by breadth-first
/// layer from the identity, lexicographically within a layer.
#[derive(Debug, Clone)]
pub struct GroupClosure {
    pub elements: Vec<SignedPermutation>,
    pub generators: GeneratorSet,
    members: HashSet<SignedPermutation>,
}

impl GroupClosure {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &SignedPermutation) -> bool {
        self.members.contains(p)
    }

    pub fn to_set(&self) -> BTreeSet<SignedPermutation> {
        self.elements.iter().cloned().collect()
    }
}

/// Closure of an explicit generator set.
pub fn closure(gens: &GeneratorSet, cap: usize) -> Result<GroupClosure> {
    closure_of(gens.n, &gens.elements, cap).map(|(elements, members)| GroupClosure {
        elements,
        generators: gens.clone(),
        members,
    })
}

type ClosureParts = (Vec<SignedPermutation>, HashSet<SignedPermutation>);

/// Breadth-first closure of `gens` under right multiplication, starting
/// from the identity.
pub fn closure_of(n: usize, gens: &[SignedPermutation], cap: usize) -> Result<ClosureParts> {
    if cap == 0 {
        return Err(Error::CapExceeded { cap });
    }
    if let Some(g) = gens.iter().find(|g| g.degree() != n) {
        return Err(Error::DegreeMismatch { left: n, right: g.degree() });
    }
    let id = SignedPermutation::identity(n);
    let mut members = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut layer = vec![id];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for p in &layer {
            for g in gens {
                let q = p.compose_unchecked(g);
                if !members.contains(&q) {
                    if members.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    members.insert(q.clone());
                    next.push(q);
                }
            }
        }
        next.sort_unstable();
        elements.extend(next.iter().cloned());
        layer = next;
    }
    Ok((elements, members))
}

/// Whether `elements` is a subgroup: contains the identity and is closed
/// under inverse and composition (checked pairwise).
pub fn is_subgroup(elements: &[SignedPermutation]) -> bool {
    let Some(first) = elements.first() else {
        return false;
    };
    let set: HashSet<&SignedPermutation> = elements.iter().collect();
    set.contains(&SignedPermutation::identity(first.degree()))
        && elements.iter().all(|p| set.contains(&p.inverse()))
        && find_non_closed_pair(elements, &set).is_none()
}

fn find_non_closed_pair<'a>(
    elements: &'a [SignedPermutation],
    set: &HashSet<&SignedPermutation>,
) -> Option<(&'a SignedPermutation, &'a SignedPermutation, SignedPermutation)> {
    for p in elements {
        for q in elements {
            let pq = p.compose_unchecked(q);
            if !set.contains(&pq) {
                return Some((p, q, pq));
            }
        }
    }
    None
}

fn guard_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        return Err(Error::SizeExceeded { what: "exhaustive enumeration of Pn", needed: group_order(n), limit: group_order(MAX_DEGREE) });
    }
    Ok(())
}

/// All elements of `Pₙ` whose component character over `partition` is `+1`,
/// sorted by image sequence.
pub fn det_characterized_set(partition: &Partition, convention: ParityConvention) -> Result<Vec<SignedPermutation>> {
    let n = partition.degree();
    guard_degree(n)?;
    let mut out = Vec::new();
    for p in all_signed_permutations(n) {
        if component_character(&p, partition, convention)? == 1 {
            out.push(p);
        }
    }
    Ok(out)
}

/// Compares a generated group with a target set and fills the standard
/// detail fields. Status is `pass` on equality and `report` otherwise.
fn compare_sets(
    claim_id: String,
    generated: &GroupClosure,
    target: &[SignedPermutation],
    target_name: &str,
) -> Verdict {
    let target_set: HashSet<&SignedPermutation> = target.iter().collect();
    let missing: Vec<&SignedPermutation> = generated.elements.iter().filter(|p| !target_set.contains(p)).collect();
    let extra: Vec<&SignedPermutation> = target.iter().filter(|p| !generated.contains(p)).collect();
    let non_closed = find_non_closed_pair(target, &target_set);
    let equal = missing.is_empty() && extra.is_empty();

    let mut v = Verdict::new(claim_id, if equal { Status::Pass } else { Status::Report })
        .detail("closure_order", generated.order())
        .detail(&format!("{target_name}_order"), target.len())
        .detail("equal", equal)
        .detail("closure_subset_of_target", missing.is_empty())
        .detail("target_subset_of_closure", extra.is_empty())
        .detail(&format!("{target_name}_compose_closed"), non_closed.is_none());
    v = v.witnesses(missing.iter().take(WITNESS_LIMIT).map(|p| format!("in closure only: {p}")));
    v = v.witnesses(extra.iter().take(WITNESS_LIMIT).map(|p| format!("in {target_name} only: {p}")));
    if let Some((p, q, pq)) = non_closed {
        v = v.witness(format!("{target_name} not closed: {p} * {q} = {pq}"));
    }
    if v.witnesses.is_empty() {
        v = v.witness(format!("order {}", generated.order()));
    }
    v
}

/// Generated `P⁺_{n₁,…,nₘ}` against the determinant-characterized set.
pub fn compare_characterization(partition: &Partition, convention: ParityConvention, cap: usize) -> Result<Verdict> {
    let n = partition.degree();
    guard_degree(n)?;
    let gens = generators(GeneratorKind::PplusComp, n, Some(partition), None)?;
    let generated = closure(&gens, cap)?;
    let det_set = det_characterized_set(partition, convention)?;
    Ok(compare_sets(format!("char.partition.{}", partition.key()), &generated, &det_set, "det_set"))
}

/// Generated `S⁺_{n₁,…,nₘ}` against the unsigned permutations whose
/// component character is `+1`.
pub fn compare_unsigned_characterization(partition: &Partition, convention: ParityConvention, cap: usize) -> Result<Verdict> {
    let n = partition.degree();
    guard_degree(n)?;
    let gens = generators(GeneratorKind::SplusComp, n, Some(partition), None)?;
    let generated = closure(&gens, cap)?;
    let mut target = Vec::new();
    for images in unsigned_permutations(n) {
        let p = SignedPermutation::from_images_unchecked(images);
        if component_character(&p, partition, convention)? == 1 {
            target.push(p);
        }
    }
    Ok(compare_sets(format!("char.splus.partition.{}", partition.key()), &generated, &target, "det_set"))
}

/// Closures of `PplusComp` for every choice of one cross pair per boundary.
/// Passes when all closures coincide.
pub fn cross_pair_independence(partition: &Partition, cap: usize) -> Result<Verdict> {
    let n = partition.degree();
    guard_degree(n)?;
    if partition.block_count() < 2 {
        return Err(Error::BadPartition(format!("{partition} has a single block; no cross pairs exist")));
    }
    let choices: Vec<Vec<(usize, usize)>> = (0..partition.block_count() - 1)
        .map(|j| {
            let right: Vec<usize> = partition.block(j + 1).collect();
            partition.block(j).flat_map(|l| right.iter().map(move |&m| (l, m))).collect()
        })
        .collect();

    let mut combos: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for options in &choices {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |&pair| {
                    let mut c = prefix.clone();
                    c.push(pair);
                    c
                })
            })
            .collect();
    }

    type Choice = (Vec<(usize, usize)>, BTreeSet<SignedPermutation>);
    let mut reference: Option<Choice> = None;
    let mut orders = Vec::new();
    let mut witnesses = Vec::new();
    for combo in &combos {
        let gens = generators(GeneratorKind::PplusComp, n, Some(partition), Some(combo))?;
        let set = closure(&gens, cap)?.to_set();
        orders.push(set.len());
        match &reference {
            None => reference = Some((combo.clone(), set)),
            Some((ref_combo, ref_set)) if *ref_set != set && witnesses.len() < WITNESS_LIMIT => {
                witnesses.push(format!(
                    "cross pairs {combo:?} give order {} vs {ref_combo:?} order {}",
                    set.len(),
                    ref_set.len()
                ));
            }
            Some(_) => {}
        }
    }
    let all_equal = witnesses.is_empty();
    let mut v = Verdict::pass_if(format!("cross.partition.{}", partition.key()), all_equal)
        .detail("choices", combos.len())
        .detail("orders", orders.clone())
        .detail("all_equal", all_equal)
        .witnesses(witnesses);
    if all_equal {
        v = v.witness(format!("{} choices, common order {}", combos.len(), orders[0]));
    }
    Ok(v)
}

/// Closure of the adjacent `P₂` copies must be all of `Pₙ`.
pub fn gl2_block_generation_check(n: usize, cap: usize) -> Result<Verdict> {
    guard_degree(n)?;
    let gens = generators(GeneratorKind::P2blocks, n, None, None)?;
    let c = closure(&gens, cap)?;
    let expected = group_order(n);
    Ok(Verdict::pass_if(format!("gen.gl2blocks.n{n}"), c.order() as u128 == expected)
        .detail("order", c.order())
        .detail("expected", expected as u64)
        .detail("generators", gens.elements.len())
        .witness(format!("closure order {} of 2^n n! = {expected}", c.order())))
}

/// `⟨all arrowy transpositions⟩` has order `2ⁿ·n!`.
pub fn full_group_order_check(n: usize, cap: usize) -> Result<Verdict> {
    guard_degree(n)?;
    let c = closure(&generators(GeneratorKind::P, n, None, None)?, cap)?;
    let expected = group_order(n);
    Ok(Verdict::pass_if(format!("order.p.n{n}"), c.order() as u128 == expected)
        .detail("order", c.order())
        .detail("expected", expected as u64)
        .witness(format!("order {}", c.order())))
}

/// `⟨(j, -k)⟩` has order `2ⁿ⁻¹·n!` and equals the even elements.
pub fn even_subgroup_check(n: usize, cap: usize) -> Result<Verdict> {
    guard_degree(n)?;
    let c = closure(&generators(GeneratorKind::Pplus, n, None, None)?, cap)?;
    let even: Vec<SignedPermutation> = all_signed_permutations(n).into_iter().filter(|p| p.parity().is_even()).collect();
    let det_one: Vec<SignedPermutation> = all_signed_permutations(n)
        .into_iter()
        .filter(|p| p.matrix_rep().determinant() == crate::matrix::RationalMatrix::int(1))
        .collect();
    let expected = group_order(n) / 2;
    let equal_even = c.to_set() == even.iter().cloned().collect();
    let equal_det = c.to_set() == det_one.iter().cloned().collect();
    let ok = c.order() as u128 == expected && equal_even && equal_det;
    Ok(Verdict::pass_if(format!("order.pplus.n{n}"), ok)
        .detail("order", c.order())
        .detail("expected", expected as u64)
        .detail("equals_even_set", equal_even)
        .detail("equals_det_one_set", equal_det)
        .witness(format!("order {}", c.order())))
}

/// `⟨3-cycles⟩` is the alternating group of order `n!/2`.
pub fn alternating_check(n: usize, cap: usize) -> Result<Verdict> {
    guard_degree(n)?;
    let c = closure(&generators(GeneratorKind::Splus, n, None, None)?, cap)?;
    let expected = group_order(n) >> (n + 1);
    let all_even = c.elements.iter().all(|p| p.is_unsigned() && p.parity().is_even());
    Ok(Verdict::pass_if(format!("order.splus.n{n}"), c.order() as u128 == expected && all_even)
        .detail("order", c.order())
        .detail("expected", expected as u64)
        .detail("all_even_unsigned", all_even)
        .witness(format!("order {}", c.order())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::make_signed_perm;

    fn sp(v: &[i32]) -> SignedPermutation {
        make_signed_perm(v).unwrap()
    }

    fn part(s: &[usize]) -> Partition {
        Partition::new(s.to_vec()).unwrap()
    }

    #[test]
    fn generator_examples() {
        let g = generators(GeneratorKind::Pplus, 2, None, None).unwrap();
        assert_eq!(g.elements, vec![sp(&[-2, 1]), sp(&[2, -1])]);
        let g = generators(GeneratorKind::PplusComp, 2, Some(&part(&[1, 1])), None).unwrap();
        assert_eq!(g.elements, vec![sp(&[2, 1]), sp(&[-2, -1])]);
        assert!(matches!(
            generators(GeneratorKind::Splus, 2, None, None),
            Err(Error::DegreeTooSmall { min: 3, .. })
        ));
    }

    #[test]
    fn generator_errors() {
        assert!(matches!(generators(GeneratorKind::PplusComp, 3, None, None), Err(Error::BadPartition(_))));
        assert!(matches!(
            generators(GeneratorKind::PplusComp, 3, Some(&part(&[1, 1])), None),
            Err(Error::BadPartition(_))
        ));
        assert!(matches!(
            generators(GeneratorKind::PplusComp, 3, Some(&part(&[2, 1])), Some(&[(1, 2)])),
            Err(Error::BadCrossPair { .. })
        ));
        assert!(matches!(
            generators(GeneratorKind::PplusComp, 4, Some(&part(&[1, 1, 2])), Some(&[(1, 3)])),
            Err(Error::BadCrossPair { .. })
        ));
        let g = generators(GeneratorKind::PplusComp, 3, Some(&part(&[2, 1])), Some(&[(3, 1)])).unwrap();
        assert_eq!(g.cross_pairs, Some(vec![(1, 3)]));
    }

    #[test]
    fn generator_counts() {
        assert_eq!(generators(GeneratorKind::P, 4, None, None).unwrap().elements.len(), 6 + 4);
        assert_eq!(generators(GeneratorKind::Pplus, 4, None, None).unwrap().elements.len(), 12);
        assert_eq!(generators(GeneratorKind::Splus, 4, None, None).unwrap().elements.len(), 8);
        // two copies of P₂ minus the identity; both contain the inversion of position 2
        assert_eq!(generators(GeneratorKind::P2blocks, 3, None, None).unwrap().elements.len(), 13);
        let g = generators(GeneratorKind::SplusComp, 6, Some(&part(&[3, 3])), None).unwrap();
        assert_eq!(g.elements.len(), 2 + 2 + 1);
    }

    #[test]
    fn closure_examples() {
        let c = closure(&generators(GeneratorKind::P, 2, None, None).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(c.order(), 8);
        let c = closure(&generators(GeneratorKind::PplusComp, 2, Some(&part(&[1, 1])), None).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(c.to_set(), [sp(&[1, 2]), sp(&[2, 1]), sp(&[-2, -1]), sp(&[-1, -2])].into_iter().collect());
        let c = closure(&generators(GeneratorKind::Pplus, 3, None, None).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(c.order(), 24);
        let brute = all_signed_permutations(3)
            .into_iter()
            .filter(|p| p.matrix_rep().determinant() == crate::matrix::RationalMatrix::int(1))
            .count();
        assert_eq!(brute, 24);
    }

    #[test]
    fn closure_respects_cap() {
        let g = generators(GeneratorKind::P, 3, None, None).unwrap();
        assert_eq!(closure(&g, 47).unwrap_err(), Error::CapExceeded { cap: 47 });
        assert_eq!(closure(&g, 48).unwrap().order(), 48);
        assert!(closure(&g, 0).is_err());
    }

    #[test]
    fn closure_ordering_is_by_layer_then_lexicographic() {
        let c = closure(&generators(GeneratorKind::P, 3, None, None).unwrap(), DEFAULT_CAP).unwrap();
        assert!(c.elements[0].is_identity());
        // first layer is the generator set itself, sorted
        let mut layer1 = generators(GeneratorKind::P, 3, None, None).unwrap().elements;
        layer1.sort();
        assert_eq!(&c.elements[1..=layer1.len()], &layer1[..]);
        let again = closure(&generators(GeneratorKind::P, 3, None, None).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(c.elements, again.elements);
    }

    #[test]
    fn closures_are_subgroups_of_dividing_order() {
        for n in 1..=4 {
            for part in Partition::compositions(n) {
                for kind in GeneratorKind::ALL {
                    let Ok(g) = generators(kind, n, Some(&part), None) else { continue };
                    let c = closure(&g, DEFAULT_CAP).unwrap();
                    assert!(is_subgroup(&c.elements), "{kind} {part}");
                    assert_eq!(group_order(n) % c.order() as u128, 0);
                }
            }
        }
    }

    #[test]
    fn even_and_alternating_groups() {
        for n in 1..=5 {
            assert_eq!(full_group_order_check(n, DEFAULT_CAP).unwrap().status, Status::Pass);
            assert_eq!(even_subgroup_check(n, DEFAULT_CAP).unwrap().status, Status::Pass);
        }
        for n in 3..=5 {
            assert_eq!(alternating_check(n, DEFAULT_CAP).unwrap().status, Status::Pass);
        }
    }

    #[test]
    fn det_characterized_examples() {
        for n in 1..=4 {
            let s = det_characterized_set(&Partition::single(n).unwrap(), ParityConvention::Canonical).unwrap();
            assert_eq!(s.len() as u128, group_order(n) / 2);
            assert!(s.iter().all(|p| p.parity().is_even()));
        }
        let s = det_characterized_set(&part(&[1, 1]), ParityConvention::Canonical).unwrap();
        assert_eq!(s, vec![sp(&[-2, -1]), sp(&[-1, -2]), sp(&[1, 2]), sp(&[2, 1])]);
        assert!(det_characterized_set(&part(&[9]), ParityConvention::Canonical).is_err());
    }

    #[test]
    fn characterization_small_cases() {
        let v = compare_characterization(&part(&[1, 1]), ParityConvention::Canonical, DEFAULT_CAP).unwrap();
        assert_eq!(v.status, Status::Pass);
        assert_eq!(v.get("closure_order"), Some(&4.into()));
        let v = compare_characterization(&part(&[2]), ParityConvention::Canonical, DEFAULT_CAP).unwrap();
        assert_eq!(v.status, Status::Pass);
        let v = compare_characterization(&part(&[2, 1]), ParityConvention::Canonical, DEFAULT_CAP).unwrap();
        assert!(!v.witnesses.is_empty());
        assert!(v.get("det_set_compose_closed").is_some());
    }

    #[test]
    fn cross_pair_examples() {
        let v = cross_pair_independence(&part(&[1, 1]), DEFAULT_CAP).unwrap();
        assert_eq!(v.status, Status::Pass);
        assert_eq!(v.get("choices"), Some(&1.into()));
        let v = cross_pair_independence(&part(&[2, 1]), DEFAULT_CAP).unwrap();
        assert_eq!(v.get("choices"), Some(&2.into()));
        let v = cross_pair_independence(&part(&[2, 2]), DEFAULT_CAP).unwrap();
        assert_eq!(v.get("choices"), Some(&4.into()));
        assert!(cross_pair_independence(&part(&[3]), DEFAULT_CAP).is_err());
    }

    #[test]
    fn gl2_blocks_generate_everything() {
        for (n, order) in [(2, 8), (3, 48), (4, 384)] {
            let v = gl2_block_generation_check(n, DEFAULT_CAP).unwrap();
            assert_eq!(v.status, Status::Pass);
            assert_eq!(v.get("order"), Some(&order.into()));
        }
        assert!(gl2_block_generation_check(1, DEFAULT_CAP).is_err());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("pplus".parse::<GeneratorKind>().unwrap(), GeneratorKind::Pplus);
        assert_eq!("P2Blocks".parse::<GeneratorKind>().unwrap(), GeneratorKind::P2blocks);
        assert!("Q".parse::<GeneratorKind>().is_err());
    }
}
