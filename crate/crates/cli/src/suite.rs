use std::collections::{BTreeSet, HashMap, VecDeque};
use std::path::PathBuf;

use monomial_core::arrangements::{canonical_moves_are_odd, parity_well_definedness_report};
use monomial_core::lie::{group_point, lie_closure_dim, so_generators, GeneratorType};
use monomial_core::matalg::{full_span_check, group_algebra_report, normalizer_lie_dim};
use monomial_core::perm::{all_signed_permutations, arrowy_transpositions};
use monomial_core::subgroups::{
    alternating_check, closure, compare_characterization, compare_unsigned_characterization, cross_pair_independence,
    even_subgroup_check, full_group_order_check, generators, gl2_block_generation_check, DEFAULT_CAP, MAX_DEGREE,
};
use monomial_core::zquot::{base_class_structure, quotient_cosets, standard_h, topological_automorphism_group, torus_descriptor};
use monomial_core::{
    GeneratorKind, ParityConvention, Partition, Rational, RationalMatrix, SignedPermutation, Status, Verdict,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::report::Format;

pub const DEFAULT_MAX_N: usize = 5;

/// Largest degree at which the matrix homomorphism is checked on every pair.
const EXHAUSTIVE_HOMOMORPHISM_DEGREE: usize = 3;

const GROUP_POINT_SAMPLES: i64 = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub convention: ParityConvention,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: DEFAULT_MAX_N,
            convention: ParityConvention::Canonical,
            format: Format::Json,
            out: None,
            cap: DEFAULT_CAP,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_n > MAX_DEGREE {
            return Err(CliError::ConfigInvalid(format!("max_n must lie in 1..={MAX_DEGREE}, got {}", self.max_n)));
        }
        if self.cap == 0 {
            return Err(CliError::ConfigInvalid("cap must be at least 1".into()));
        }
        Ok(())
    }
}

/// The part of [`SuiteConfig`] that influences claim outcomes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub max_n: usize,
    pub convention: ParityConvention,
    pub cap: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub report: usize,
}

impl Summary {
    pub fn of(claims: &[Verdict]) -> Self {
        let mut s = Summary::default();
        for c in claims {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Report => s.report += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub version: String,
    pub config: ConfigEcho,
    pub summary: Summary,
    pub claims: Vec<Verdict>,
}

impl SuiteReport {
    pub fn new(config: ConfigEcho, mut claims: Vec<Verdict>) -> Self {
        claims.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
        SuiteReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            summary: Summary::of(&claims),
            claims,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn claim(&self, id: &str) -> Option<&Verdict> {
        self.claims.binary_search_by(|c| c.claim_id.as_str().cmp(id)).ok().map(|k| &self.claims[k])
    }
}

#[derive(Debug, Clone)]
enum Claim {
    OrderP(usize),
    OrderPplus(usize),
    OrderSplus(usize),
    SpanFull(usize),
    Gl2Blocks(usize),
    RepMatrix(usize),
    ParityCayley(usize),
    ParityCanonical(usize),
    ParityAudit(usize, Vec<usize>),
    LieSo(usize),
    QuotientCosets(usize),
    Char(Partition),
    CharSplus(Partition),
    Cross(Partition),
    LiePartition(Partition),
    QuotientPartition(Partition),
    TopoNone(Partition),
    TopoAll(Partition),
    Torus(Partition),
    AlgebraPplus2,
    AlgebraPplus11,
}

impl Claim {
    fn id(&self) -> String {
        match self {
            Claim::OrderP(n) => format!("order.p.n{n}"),
            Claim::OrderPplus(n) => format!("order.pplus.n{n}"),
            Claim::OrderSplus(n) => format!("order.splus.n{n}"),
            Claim::SpanFull(n) => format!("span.full.n{n}"),
            Claim::Gl2Blocks(n) => format!("gen.gl2blocks.n{n}"),
            Claim::RepMatrix(n) => format!("rep.matrix.n{n}"),
            Claim::ParityCayley(n) => format!("parity.cayley.n{n}"),
            Claim::ParityCanonical(n) => format!("parity.canonical.n{n}"),
            Claim::ParityAudit(n, s) => format!("parity.audit.n{n}.s{}", subset_key(s)),
            Claim::LieSo(n) => format!("lie.so.n{n}"),
            Claim::QuotientCosets(n) => format!("quotient.cosets.n{n}"),
            Claim::Char(p) => format!("char.partition.{}", p.key()),
            Claim::CharSplus(p) => format!("char.splus.partition.{}", p.key()),
            Claim::Cross(p) => format!("cross.partition.{}", p.key()),
            Claim::LiePartition(p) => format!("lie.partition.{}", p.key()),
            Claim::QuotientPartition(p) => format!("quotient.partition.{}", p.key()),
            Claim::TopoNone(p) => format!("topo.partition.{}", p.key()),
            Claim::TopoAll(p) => format!("topo.allo.partition.{}", p.key()),
            Claim::Torus(p) => format!("torus.partition.{}", p.key()),
            Claim::AlgebraPplus2 => "algebra.pplus2".into(),
            Claim::AlgebraPplus11 => "algebra.pplus11".into(),
        }
    }

    fn run(&self, convention: ParityConvention, cap: usize) -> Result<Verdict> {
        let v = match self {
            Claim::OrderP(n) => full_group_order_check(*n, cap)?,
            Claim::OrderPplus(n) => even_subgroup_check(*n, cap)?,
            Claim::OrderSplus(n) => alternating_check(*n, cap)?,
            Claim::SpanFull(n) => full_span_check(*n)?,
            Claim::Gl2Blocks(n) => gl2_block_generation_check(*n, cap)?,
            Claim::RepMatrix(n) => rep_matrix_check(*n)?,
            Claim::ParityCayley(n) => cayley_parity_check(*n),
            Claim::ParityCanonical(n) => canonical_parity_check(*n)?,
            Claim::ParityAudit(n, s) => parity_audit(*n, s)?,
            Claim::LieSo(n) => lie_check(self.id(), &Partition::single(*n)?)?,
            Claim::QuotientCosets(n) => quotient_check(self.id(), &Partition::single(*n)?)?,
            Claim::Char(p) => compare_characterization(p, convention, cap)?,
            Claim::CharSplus(p) => compare_unsigned_characterization(p, convention, cap)?,
            Claim::Cross(p) => cross_pair_independence(p, cap)?,
            Claim::LiePartition(p) => lie_check(self.id(), p)?,
            Claim::QuotientPartition(p) => quotient_check(self.id(), p)?,
            Claim::TopoNone(p) => topological_automorphism_group(&base_class_structure(p, &BTreeSet::new())?, cap)?.1,
            Claim::TopoAll(p) => {
                let all = (0..p.block_count()).collect();
                topological_automorphism_group(&base_class_structure(p, &all)?, cap)?.1
            }
            Claim::Torus(p) => {
                let t = torus_descriptor(p);
                Verdict::new(self.id(), Status::Report)
                    .detail("space", t.space_label.as_str())
                    .detail("automorphism", t.automorphism_label.as_str())
                    .witness(format!("{} with automorphisms {}", t.space_label, t.automorphism_label))
            }
            Claim::AlgebraPplus2 => algebra_check(self.id(), &[2], GeneratorType::Rotation, cap)?,
            Claim::AlgebraPplus11 => algebra_check(self.id(), &[1, 1], GeneratorType::Boost, cap)?,
        };
        debug_assert_eq!(v.claim_id, self.id());
        Ok(v)
    }
}

fn subset_key(s: &[usize]) -> String {
    s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("-")
}

fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    (1u32..1 << n).map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect()).collect()
}

fn plan(max_n: usize) -> Vec<Claim> {
    let mut claims = Vec::new();
    for n in 1..=max_n {
        claims.extend([
            Claim::OrderP(n),
            Claim::OrderPplus(n),
            Claim::SpanFull(n),
            Claim::RepMatrix(n),
            Claim::ParityCayley(n),
            Claim::ParityCanonical(n),
            Claim::QuotientCosets(n),
        ]);
        if n >= 2 {
            claims.extend([Claim::Gl2Blocks(n), Claim::LieSo(n)]);
        }
        if n >= 3 {
            claims.push(Claim::OrderSplus(n));
        }
        claims.extend(nonempty_subsets(n).into_iter().map(|s| Claim::ParityAudit(n, s)));
        for p in Partition::compositions(n) {
            claims.extend([
                Claim::Char(p.clone()),
                Claim::CharSplus(p.clone()),
                Claim::TopoNone(p.clone()),
                Claim::TopoAll(p.clone()),
                Claim::Torus(p.clone()),
            ]);
            if p.block_count() >= 2 {
                claims.extend([Claim::Cross(p.clone()), Claim::LiePartition(p.clone()), Claim::QuotientPartition(p)]);
            }
        }
    }
    if max_n >= 2 {
        claims.extend([Claim::AlgebraPplus2, Claim::AlgebraPplus11]);
    }
    claims
}

/// Runs every claim for degrees `1..=max_n`. Individual errors become
/// `fail` verdicts carrying an `error` detail; only an invalid config is
/// returned as an error.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let (convention, cap) = (config.convention, config.cap);
    let claims: Vec<Verdict> = plan(config.max_n)
        .par_iter()
        .map(|c| {
            c.run(convention, cap)
                .unwrap_or_else(|e| Verdict::new(c.id(), Status::Fail).detail("error", e.to_string()))
        })
        .collect();
    let report = SuiteReport::new(ConfigEcho { max_n: config.max_n, convention, cap }, claims);
    assert!(
        report.claims.windows(2).all(|w| w[0].claim_id != w[1].claim_id),
        "claim ids must be unique"
    );
    Ok(report)
}

/// `matrix_rep` is multiplicative and `det` equals the sign of the parity.
/// Every pair is checked up to degree 3; beyond that, pairs of elementary
/// generators.
fn rep_matrix_check(n: usize) -> Result<Verdict> {
    let all = all_signed_permutations(n);
    let mats: HashMap<&SignedPermutation, RationalMatrix> = all.iter().map(|p| (p, p.matrix_rep())).collect();
    let pairs: Vec<(SignedPermutation, SignedPermutation)> = if n <= EXHAUSTIVE_HOMOMORPHISM_DEGREE {
        all.iter().flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone()))).collect()
    } else {
        let gens = arrowy_transpositions(n);
        gens.iter().flat_map(|a| gens.iter().map(move |b| (a.clone(), b.clone()))).collect()
    };
    let mut bad = Vec::new();
    for (a, b) in &pairs {
        let ab = SignedPermutation::compose(a, b)?;
        if mats[&ab] != mats[a].mul(&mats[b]) {
            bad.push(format!("homomorphism fails for {a} ∘ {b}"));
        }
    }
    for p in &all {
        if mats[p].determinant() != Rational::from_integer(p.parity().sign().into()) {
            bad.push(format!("det ≠ sign of parity for {p}"));
        }
    }
    Ok(Verdict::pass_if(format!("rep.matrix.n{n}"), bad.is_empty())
        .detail("pairs_checked", pairs.len())
        .detail("elements_checked", all.len())
        .detail("exhaustive_pairs", n <= EXHAUSTIVE_HOMOMORPHISM_DEGREE)
        .witnesses(bad.into_iter().take(5)))
}

/// Breadth-first search of the Cayley graph on elementary generators: the
/// distance parity from the identity must equal the parity of every element,
/// and every edge must flip parity.
fn cayley_parity_check(n: usize) -> Verdict {
    let gens = arrowy_transpositions(n);
    let id = SignedPermutation::identity(n);
    let mut dist: HashMap<SignedPermutation, usize> = HashMap::from([(id.clone(), 0)]);
    let mut queue = VecDeque::from([id]);
    let mut bad = Vec::new();
    let mut edges = 0usize;
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        for g in &gens {
            let q = p.then_apply_after(g);
            edges += 1;
            if q.parity() == p.parity() {
                bad.push(format!("edge {p} -> {q} keeps parity"));
            }
            if !dist.contains_key(&q) {
                dist.insert(q.clone(), d + 1);
                queue.push_back(q);
            }
        }
    }
    for (p, d) in &dist {
        if (d % 2 == 1) != !p.parity().is_even() {
            bad.push(format!("distance {d} disagrees with parity of {p}"));
        }
    }
    bad.sort();
    Verdict::pass_if(format!("parity.cayley.n{n}"), bad.is_empty() && dist.len() as u128 == monomial_core::perm::group_order(n))
        .detail("nodes", dist.len())
        .detail("edges_visited", edges)
        .witnesses(bad.into_iter().take(5))
}

fn canonical_parity_check(n: usize) -> Result<Verdict> {
    let subsets = nonempty_subsets(n);
    let mut bad = Vec::new();
    for s in &subsets {
        if !canonical_moves_are_odd(n, s)? {
            bad.push(format!("even move from identity on subset {{{}}}", subset_key(s)));
        }
    }
    Ok(Verdict::pass_if(format!("parity.canonical.n{n}"), bad.is_empty())
        .detail("subsets_checked", subsets.len())
        .witnesses(bad))
}

/// Passes when the move graph is bipartite and both conventions agree
/// everywhere; anything else is a finding and reported.
fn parity_audit(n: usize, subset: &[usize]) -> Result<Verdict> {
    let r = parity_well_definedness_report(n, subset)?;
    let ok = r.bipartite && r.agreements == r.compared;
    let mut v = Verdict::new(format!("parity.audit.n{n}.s{}", subset_key(subset)), if ok { Status::Pass } else { Status::Report })
        .detail("nodes", r.nodes)
        .detail("edges", r.edges)
        .detail("bipartite", r.bipartite)
        .detail("compared", r.compared)
        .detail("agreements", r.agreements);
    if let Some(cycle) = &r.odd_cycle {
        v = v.detail("odd_cycle_length", cycle.len() - 1).witness(format!("odd closed walk {}", format_walk(cycle)));
    }
    if let Some(d) = &r.first_disagreement {
        v = v.witness(format!("{:?}: bfs {} vs canonical {}", d.values, d.bfs, d.canonical));
    }
    Ok(v)
}

fn format_walk(walk: &[Vec<i32>]) -> String {
    walk.iter().map(|w| format!("{w:?}")).collect::<Vec<_>>().join(" -> ")
}

/// Single-block and two-block partitions are expected to reach
/// `n(n−1)/2`; more blocks are measured and reported.
fn lie_check(id: String, p: &Partition) -> Result<Verdict> {
    let n = p.degree();
    let gens = so_generators(p)?;
    let dim = lie_closure_dim(&gens)?;
    let expected = n * (n - 1) / 2;
    let status = match p.block_count() {
        1 | 2 if dim == expected => Status::Pass,
        1 | 2 => Status::Fail,
        _ => Status::Report,
    };
    Ok(Verdict::new(id, status)
        .detail("dimension", dim)
        .detail("expected", expected)
        .detail("generators", gens.len())
        .witness(format!("bracket closure of {} generators has dimension {dim}", gens.len())))
}

fn quotient_check(id: String, p: &Partition) -> Result<Verdict> {
    let r = quotient_cosets(&standard_h(p))?;
    let expected = 1u64 << p.block_count();
    let ok = r.coset_count == expected && r.cosets_equal_size && r.exponent_at_most_two;
    Ok(Verdict::pass_if(id, ok)
        .detail("cosets", r.coset_count)
        .detail("expected", expected)
        .detail("subgroup_rank", r.subgroup_rank)
        .detail("equal_size", r.cosets_equal_size)
        .detail("exponent_at_most_two", r.exponent_at_most_two)
        .detail("lift", r.lift)
        .witnesses(r.representatives.iter().map(|v| format!("representative {v}"))))
}

/// The group algebra of the `PplusComp` group for `sizes` is a closed
/// two-dimensional span with a two-dimensional normalizer, and sampled
/// rational points of the matching one-parameter group preserve it.
fn algebra_check(id: String, sizes: &[usize], kind: GeneratorType, cap: usize) -> Result<Verdict> {
    let p = Partition::new(sizes.to_vec())?;
    let n = p.degree();
    let group = closure(&generators(GeneratorKind::PplusComp, n, Some(&p), None)?, cap)?;
    let report = group_algebra_report(&group);
    let normalizer = normalizer_lie_dim(&report.span);
    let mut preserved = 0;
    let mut bad = Vec::new();
    for k in 1..=GROUP_POINT_SAMPLES {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let t = match kind {
            GeneratorType::Rotation => RationalMatrix::ratio(sign * k, 3),
            GeneratorType::Boost => RationalMatrix::ratio(sign * k, k + 1),
        };
        let g = group_point(kind, &t, (1, 2), n)?;
        if monomial_core::lie::preserves_span(&g.matrix, &report.span)? {
            preserved += 1;
        } else {
            bad.push(format!("t = {t} does not preserve the span"));
        }
    }
    let ok = report.dimension == 2 && report.closed && normalizer == 2 && bad.is_empty();
    Ok(Verdict::pass_if(id, ok)
        .detail("group_order", report.group_order)
        .detail("dimension", report.dimension)
        .detail("closed", report.closed)
        .detail("normalizer_dim", normalizer)
        .detail("points_preserving", preserved)
        .detail("points_sampled", GROUP_POINT_SAMPLES)
        .witnesses(report.span.basis().iter().map(|b| format!("basis {}", b.to_string().replace('\n', "; "))))
        .witnesses(bad))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(max_n: usize) -> SuiteReport {
        run_suite(&SuiteConfig { max_n, ..SuiteConfig::default() }).unwrap()
    }

    #[test]
    fn rejects_bad_config() {
        for cfg in [
            SuiteConfig { max_n: 0, ..SuiteConfig::default() },
            SuiteConfig { max_n: 9, ..SuiteConfig::default() },
            SuiteConfig { cap: 0, ..SuiteConfig::default() },
        ] {
            assert!(matches!(run_suite(&cfg), Err(CliError::ConfigInvalid(_))));
        }
    }

    #[test]
    fn degree_two_examples() {
        let r = small(2);
        let c = r.claim("char.partition.1-1").unwrap();
        assert_eq!(c.status, Status::Pass);
        assert_eq!(c.get("closure_order").and_then(|v| v.as_u64()), Some(4));
        assert_eq!(r.claim("algebra.pplus2").unwrap().status, Status::Pass);
        assert_eq!(r.claim("algebra.pplus11").unwrap().status, Status::Pass);
    }

    #[test]
    fn degree_one_quotient_has_two_cosets() {
        let r = small(1);
        let c = r.claim("quotient.cosets.n1").unwrap();
        assert_eq!(c.get("cosets").and_then(|v| v.as_u64()), Some(2));
        assert!(r.claim("algebra.pplus2").is_none());
    }

    #[test]
    fn span_dimension_at_three() {
        let r = small(3);
        let c = r.claim("span.full.n3").unwrap();
        assert_eq!(c.status, Status::Pass);
        assert_eq!(c.get("dimension").and_then(|v| v.as_u64()), Some(9));
    }

    #[test]
    fn ids_sorted_unique_and_counted() {
        let r = small(3);
        assert!(r.claims.windows(2).all(|w| w[0].claim_id < w[1].claim_id));
        assert_eq!(r.summary, Summary::of(&r.claims));
        assert_eq!(r.summary.pass + r.summary.fail + r.summary.report, r.claims.len());
        // 7 per degree, gl2/lie.so from 2, splus from 3, 2^n − 1 audits,
        // 5 per composition, 3 more per multi-block composition, 2 algebra.
        let expected = 7 * 3 + 2 * 2 + 1 + (1 + 3 + 7) + 5 * (1 + 2 + 4) + 3 * (1 + 3) + 2;
        assert_eq!(r.claims.len(), expected);
    }

    #[test]
    fn tiny_cap_is_recorded_not_thrown() {
        let r = run_suite(&SuiteConfig { max_n: 2, cap: 1, ..SuiteConfig::default() }).unwrap();
        let c = r.claim("order.p.n2").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert!(c.get("error").is_some());
    }
}
