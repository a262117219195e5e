use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use monomial_core::{Status, Verdict};

use crate::error::{CliError, Result};
use crate::suite::{Summary, SuiteReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            _ => Err(CliError::UnknownFormat(s.to_string())),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Markdown => "markdown",
        })
    }
}

pub fn render_report(report: &SuiteReport, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => render_csv(report),
        Format::Markdown => Ok(render_markdown(report)),
    }
}

fn details_json(v: &Verdict) -> String {
    serde_json::Value::Object(v.details.clone()).to_string()
}

fn render_csv(report: &SuiteReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["claim_id", "status", "details"])?;
    for c in &report.claims {
        w.write_record([c.claim_id.as_str(), &c.status.to_string(), &details_json(c)])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Module name of a claim: the id up to its first dot.
pub fn module_of(claim_id: &str) -> &str {
    claim_id.split('.').next().unwrap_or(claim_id)
}

fn render_markdown(report: &SuiteReport) -> String {
    let mut groups: BTreeMap<&str, Vec<&Verdict>> = BTreeMap::new();
    for c in &report.claims {
        groups.entry(module_of(&c.claim_id)).or_default().push(c);
    }
    let mut out = String::new();
    let cfg = &report.config;
    let convention = serde_json::to_value(cfg.convention).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    writeln!(out, "# Verification report\n").unwrap();
    writeln!(out, "version {}, max_n {}, convention {convention}, cap {}\n", report.version, cfg.max_n, cfg.cap).unwrap();
    write_counts(&mut out, &report.summary);
    for (module, claims) in groups {
        let summary = Summary::of(&claims.iter().map(|c| (*c).clone()).collect::<Vec<_>>());
        writeln!(out, "\n## {module}\n").unwrap();
        write_counts(&mut out, &summary);
        writeln!(out, "\n| claim | status | details |\n|---|---|---|").unwrap();
        for c in claims {
            let status = match c.status {
                Status::Fail => "**fail**".to_string(),
                s => s.to_string(),
            };
            writeln!(out, "| {} | {status} | `{}` |", c.claim_id, details_json(c).replace('|', "\\|")).unwrap();
        }
    }
    out
}

fn write_counts(out: &mut String, s: &Summary) {
    writeln!(out, "pass {}, fail {}, report {}", s.pass, s.fail, s.report).unwrap();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::ConfigEcho;
    use monomial_core::ParityConvention;

    fn report(claims: Vec<Verdict>) -> SuiteReport {
        SuiteReport::new(ConfigEcho { max_n: 2, convention: ParityConvention::Canonical, cap: 10 }, claims)
    }

    fn mixed() -> SuiteReport {
        report(vec![
            Verdict::new("order.p.n1", Status::Pass).detail("order", 2),
            Verdict::new("order.p.n2", Status::Fail).detail("order", 7),
            Verdict::new("char.partition.1-1", Status::Report).detail("note", "a|b"),
            Verdict::new("char.partition.2", Status::Pass),
        ])
    }

    #[test]
    fn parses_formats() {
        assert_eq!("JSON".parse::<Format>().unwrap(), Format::Json);
        assert_eq!("md".parse::<Format>().unwrap(), Format::Markdown);
        assert!(matches!("xml".parse::<Format>(), Err(CliError::UnknownFormat(_))));
    }

    #[test]
    fn empty_json() {
        let s = render_report(&report(vec![]), Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["claims"], serde_json::json!([]));
        assert_eq!(v["summary"], serde_json::json!({"pass": 0, "fail": 0, "report": 0}));
        let keys: Vec<&str> = ["\"version\"", "\"config\"", "\"summary\"", "\"claims\""]
            .into_iter()
            .filter(|k| s.contains(k))
            .collect();
        assert_eq!(keys.len(), 4);
        assert!(s.find("\"version\"") < s.find("\"config\"") && s.find("\"summary\"") < s.find("\"claims\""));
    }

    #[test]
    fn json_round_trips() {
        let r = mixed();
        let s = render_report(&r, Format::Json).unwrap();
        assert_eq!(serde_json::from_str::<SuiteReport>(&s).unwrap(), r);
    }

    #[test]
    fn csv_single_row() {
        let r = report(vec![Verdict::new("span.full.n1", Status::Pass).detail("dimension", 1)]);
        let s = render_report(&r, Format::Csv).unwrap();
        let mut rd = csv::Reader::from_reader(s.as_bytes());
        assert_eq!(rd.headers().unwrap(), vec!["claim_id", "status", "details"]);
        let rows: Vec<csv::StringRecord> = rd.records().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), 1);
        assert_eq!(&rows[0][1], "pass");
        assert_eq!(&rows[0][2], r#"{"dimension":1}"#);
    }

    #[test]
    fn markdown_sections_match_summary() {
        let r = mixed();
        let md = render_report(&r, Format::Markdown).unwrap();
        let mut totals = Summary::default();
        let mut sections = Vec::new();
        let mut lines = md.lines().peekable();
        while let Some(line) = lines.next() {
            if let Some(name) = line.strip_prefix("## ") {
                sections.push(name.to_string());
                let counts = lines.by_ref().find(|l| l.starts_with("pass ")).unwrap();
                let nums: Vec<usize> = counts.split(", ").map(|p| p.rsplit(' ').next().unwrap().parse().unwrap()).collect();
                totals.pass += nums[0];
                totals.fail += nums[1];
                totals.report += nums[2];
            }
        }
        assert_eq!(sections, ["char", "order"]);
        assert_eq!(totals, r.summary);
        let rows = md.lines().filter(|l| l.starts_with("| ") && !l.starts_with("| claim")).count();
        assert_eq!(rows, r.claims.len());
        assert!(md.contains("a\\|b"));
    }
}
