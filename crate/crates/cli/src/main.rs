use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use monomial_cli::commands::{self, parse_convention, parse_list, parse_pair};
use monomial_cli::suite::DEFAULT_MAX_N;
use monomial_cli::{render_report, run_suite, Format, Result, SuiteConfig};
use monomial_core::subgroups::DEFAULT_CAP;
use monomial_core::{GeneratorKind, ParityConvention, Partition};

#[derive(Debug, Parser)]
#[command(name = "monomial", version, about = "Exact computations and claim checks for signed permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the full verification suite. Exits 1 if any claim fails.
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long, default_value = "json")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Upper bound on the size of any generated group.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Arrangement parity convention: canonical or bfs-oracle.
        #[arg(long, default_value = "canonical", value_parser = parse_convention)]
        convention: ParityConvention,
    },
    /// Close a generator set and list the group.
    Closure {
        #[arg(long)]
        kind: GeneratorKind,
        #[arg(long)]
        n: usize,
        /// Block sizes, e.g. 2,1.
        #[arg(long)]
        partition: Option<Partition>,
        /// Cross pair l,m at a block boundary; repeat once per boundary.
        #[arg(long, value_parser = parse_pair)]
        cross: Vec<(usize, usize)>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Span of a group's matrices and its Lie normalizer.
    Span {
        #[arg(long)]
        group: GeneratorKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        partition: Option<Partition>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Rectangular determinant of a matrix file over a row subset.
    Rectdet {
        #[arg(long)]
        matrix: PathBuf,
        /// 1-based rows, e.g. 1,2.
        #[arg(long)]
        rows: String,
        #[arg(long, default_value = "canonical", value_parser = parse_convention)]
        convention: ParityConvention,
    },
    /// Bracket closure dimension of the rotation and boost generators.
    Lie {
        #[arg(long)]
        partition: Partition,
    },
    /// Cosets of the standard even-weight subgroup.
    Quotient {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        partition: Partition,
    },
    /// Compare the canonical arrangement parity with move-graph distances.
    ParityAudit {
        #[arg(long)]
        n: usize,
        /// 1-based rows, e.g. 1,2.
        #[arg(long)]
        subset: String,
    },
}

fn run(command: Command) -> Result<bool> {
    let text = match command {
        Command::Verify { max_n, format, out, cap, convention } => {
            let config = SuiteConfig { max_n, convention, format, out, cap };
            let report = run_suite(&config)?;
            let text = render_report(&report, config.format)?;
            match &config.out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            return Ok(!report.has_failures());
        }
        Command::Closure { kind, n, partition, cross, cap } => {
            commands::closure_command(kind, n, partition.as_ref(), &cross, cap)?
        }
        Command::Span { group, n, partition, cap } => commands::span_command(group, n, partition.as_ref(), cap)?,
        Command::Rectdet { matrix, rows, convention } => {
            commands::rectdet_command(&commands::read_matrix(&matrix)?, &parse_list(&rows)?, convention)?
        }
        Command::Lie { partition } => commands::lie_command(&partition)?,
        Command::Quotient { n, partition } => commands::quotient_command(n, &partition)?,
        Command::ParityAudit { n, subset } => commands::parity_audit_command(n, &parse_list(&subset)?)?,
    };
    print!("{text}");
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
