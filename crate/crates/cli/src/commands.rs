//! Single computations behind the non-`verify` subcommands. Each returns the
//! text to print.

use std::path::Path;

use monomial_core::arrangements::{parity_well_definedness_report, rect_det};
use monomial_core::lie::{lie_closure_dim, so_generators};
use monomial_core::matalg::{group_algebra_report, normalizer_lie_dim};
use monomial_core::subgroups::{closure, generators};
use monomial_core::zquot::{quotient_cosets, standard_h};
use monomial_core::{GeneratorKind, ParityConvention, Partition, RationalMatrix};
use serde_json::json;

use crate::error::{CliError, Result};

pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::Parse { what: "index list", input: s.to_string() }))
        .collect()
}

pub fn parse_pair(s: &str) -> Result<(usize, usize)> {
    match parse_list(s)?.as_slice() {
        &[l, m] => Ok((l, m)),
        _ => Err(CliError::Parse { what: "index pair l,m", input: s.to_string() }),
    }
}

pub fn parse_convention(s: &str) -> Result<ParityConvention> {
    match s.to_ascii_lowercase().as_str() {
        "canonical" => Ok(ParityConvention::Canonical),
        "bfs" | "bfs-oracle" => Ok(ParityConvention::BfsOracle),
        _ => Err(CliError::Parse { what: "parity convention", input: s.to_string() }),
    }
}

fn pretty(v: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn matrix_rows(m: &RationalMatrix) -> Vec<String> {
    m.to_string().lines().map(str::to_string).collect()
}

pub fn closure_command(
    kind: GeneratorKind,
    n: usize,
    partition: Option<&Partition>,
    cross: &[(usize, usize)],
    cap: usize,
) -> Result<String> {
    let cross = (!cross.is_empty()).then_some(cross);
    let gens = generators(kind, n, partition, cross)?;
    let group = closure(&gens, cap)?;
    pretty(&json!({
        "kind": kind.name(),
        "n": n,
        "partition": partition.map(Partition::key),
        "cross_pairs": gens.cross_pairs,
        "generators": gens.elements.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "order": group.order(),
        "elements": group.elements.iter().map(ToString::to_string).collect::<Vec<_>>(),
    }))
}

pub fn span_command(kind: GeneratorKind, n: usize, partition: Option<&Partition>, cap: usize) -> Result<String> {
    let group = closure(&generators(kind, n, partition, None)?, cap)?;
    let report = group_algebra_report(&group);
    pretty(&json!({
        "group": kind.name(),
        "n": n,
        "group_order": report.group_order,
        "dimension": report.dimension,
        "closed": report.closed,
        "normalizer_dim": normalizer_lie_dim(&report.span),
        "basis": report.span.basis().iter().map(matrix_rows).collect::<Vec<_>>(),
    }))
}

pub fn read_matrix(path: &Path) -> Result<RationalMatrix> {
    std::fs::read_to_string(path)?.parse().map_err(CliError::BadMatrix)
}

pub fn rectdet_command(matrix: &RationalMatrix, rows: &[usize], convention: ParityConvention) -> Result<String> {
    Ok(format!("{}\n", rect_det(matrix, rows, convention)?))
}

pub fn lie_command(partition: &Partition) -> Result<String> {
    let gens = so_generators(partition)?;
    let n = partition.degree();
    pretty(&json!({
        "partition": partition.key(),
        "generators": gens.iter().map(|g| json!({"kind": g.kind, "i": g.position.0, "j": g.position.1})).collect::<Vec<_>>(),
        "dimension": lie_closure_dim(&gens)?,
        "so_dimension": n * (n - 1) / 2,
    }))
}

pub fn quotient_command(n: usize, partition: &Partition) -> Result<String> {
    if partition.degree() != n {
        return Err(monomial_core::Error::BadPartition(format!("{partition} does not partition {n}")).into());
    }
    let r = quotient_cosets(&standard_h(partition))?;
    pretty(&json!({
        "n": n,
        "partition": partition.key(),
        "subgroup_rank": r.subgroup_rank,
        "cosets": r.coset_count,
        "representatives": r.representatives.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "cosets_equal_size": r.cosets_equal_size,
        "exponent_at_most_two": r.exponent_at_most_two,
        "lift": r.lift,
    }))
}

pub fn parity_audit_command(n: usize, subset: &[usize]) -> Result<String> {
    let r = parity_well_definedness_report(n, subset)?;
    Ok(serde_json::to_string_pretty(&r)? + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> serde_json::Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("1, 2,3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_pair("2,3").unwrap(), (2, 3));
        assert!(parse_pair("1,2,3").is_err());
        assert!(parse_list("1,x").is_err());
        assert_eq!(parse_convention("bfs-oracle").unwrap(), ParityConvention::BfsOracle);
    }

    #[test]
    fn closure_of_p2() {
        let v = parse(&closure_command(GeneratorKind::P, 2, None, &[], 100).unwrap());
        assert_eq!(v["order"], 8);
        assert_eq!(v["elements"].as_array().unwrap().len(), 8);
    }

    #[test]
    fn closure_with_explicit_cross_pair() {
        let p: Partition = "1,1".parse().unwrap();
        let v = parse(&closure_command(GeneratorKind::PplusComp, 2, Some(&p), &[(1, 2)], 100).unwrap());
        assert_eq!(v["order"], 4);
        assert_eq!(v["cross_pairs"], json!([[1, 2]]));
    }

    #[test]
    fn span_of_pplus2() {
        let v = parse(&span_command(GeneratorKind::Pplus, 2, None, 100).unwrap());
        assert_eq!(v["dimension"], 2);
        assert_eq!(v["normalizer_dim"], 2);
        assert_eq!(v["closed"], true);
    }

    #[test]
    fn rectdet_full_rows_is_determinant() {
        let m: RationalMatrix = "1 2\n3 4".parse().unwrap();
        assert_eq!(rectdet_command(&m, &[1, 2], ParityConvention::Canonical).unwrap(), "-2\n");
    }

    #[test]
    fn quotient_rejects_mismatched_degree() {
        let p: Partition = "2,1".parse().unwrap();
        assert!(quotient_command(4, &p).is_err());
        assert_eq!(parse(&quotient_command(3, &p).unwrap())["cosets"], 4);
    }

    #[test]
    fn lie_two_blocks() {
        let p: Partition = "2,2".parse().unwrap();
        let v = parse(&lie_command(&p).unwrap());
        assert_eq!(v["dimension"], 6);
        assert_eq!(v["generators"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn audit_output() {
        let v = parse(&parity_audit_command(3, &[1, 2]).unwrap());
        assert_eq!(v["bipartite"], true);
        assert_eq!(v["nodes"], 24);
    }
}
