//! Command-line front end: semigroup invariants, ideal arithmetic, graded
//! resolutions, and the statement verifier.
//!
//! Exit codes: 0 success (no FAIL verdicts), 1 at least one FAIL, 2 usage or
//! parse errors, 3 bound errors (degree bound too small, enumeration bound
//! too large).

mod instance;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use sgring::error::Error as CoreError;
use sgring::graded::{minimal_resolution, Presentation};
use sgring::harness::{self, CheckReport, SweepConfig, Verdict};
use sgring::ideal::MonomialFractionalIdeal as Ideal;
use sgring::semigroup::NumericalSemigroup;

#[derive(Parser)]
#[command(
    name = "sgring",
    about = "Numerical semigroup rings: invariants, monomial ideal arithmetic, graded resolutions, and statement verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Semigroup invariant record: Frobenius number, genus, multiplicity,
    /// embedding dimension, monomial Loewy length, symmetry, Apery set.
    Sgp {
        /// Generators of the semigroup.
        #[arg(required = true)]
        generators: Vec<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Monomial fractional ideal arithmetic over an ambient semigroup.
    Ideal {
        /// Ambient semigroup generators, comma separated.
        #[arg(
            short = 's',
            long = "semigroup",
            value_delimiter = ',',
            required = true
        )]
        semigroup: Vec<u64>,
        /// Operation: trace, ord, colon, product, sum, conductor, canonical, tau.
        op: String,
        /// Ideal expressions: `[e1,e2,...]` or conductor/canonical/maxideal/unit.
        args: Vec<String>,
        /// Also print the m-adic order of the result.
        #[arg(long)]
        ord: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimal free resolution of a module declared in an instance file;
    /// writes a JSON dump and a CSV Betti table.
    Resolve {
        /// Instance file declaring the semigroup, ideals and modules.
        file: PathBuf,
        /// Name of the module to resolve.
        module: String,
        #[arg(long)]
        jmax: Option<usize>,
        #[arg(long = "degree-bound")]
        degree_bound: Option<i64>,
        /// Truncation override: work over k[S]/t^{>=N}.
        #[arg(long = "truncate")]
        truncate: Option<u64>,
        /// Write the resolution dump here (JSON).
        #[arg(long = "dump")]
        dump: Option<PathBuf>,
        /// Write the Betti table here (CSV).
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run statement checks selected by a glob over their default instance
    /// families, or over the `check` lines of an instance file.
    Verify {
        /// Statement id glob, e.g. 'prop-*', 'check-*', or '*'.
        glob: String,
        /// Run the check lines of this instance file instead of the default
        /// families.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long = "genus-max", default_value_t = 6)]
        genus_max: u64,
        #[arg(long = "ideals-per-sgp", default_value_t = 20)]
        ideals_per_sgp: usize,
        #[arg(long = "a-max", default_value_t = 9)]
        a_max: u64,
        #[arg(long = "mult-max", default_value_t = 8)]
        mult_max: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long = "degree-bound")]
        degree_bound: Option<i64>,
        /// Write reports as JSON lines here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the aggregated CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Print reports as JSON lines instead of the summary table.
        #[arg(long)]
        json: bool,
    },
    /// Run an open-question explorer: `hyp` or `qu2`. Emits a table; no
    /// assertion is made on the open value.
    Explore {
        /// Which question to explore: hyp | qu2.
        question: String,
        #[arg(long = "a-max", default_value_t = 9)]
        a_max: u64,
        #[arg(long = "mult-max", default_value_t = 8)]
        mult_max: u64,
        #[arg(long = "genus-max", default_value_t = 10)]
        genus_max: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

/// Failure modes mapped onto the documented exit codes.
enum CliError {
    Usage(String),
    Bound(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Bound(_) => 3,
            CliError::Io(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Bound(m) | CliError::Io(m) => m,
        }
    }
}

fn core_err(e: CoreError) -> CliError {
    match e {
        CoreError::DegreeBoundTooSmall { .. } | CoreError::BoundTooLarge { .. } => {
            CliError::Bound(e.to_string())
        }
        other => CliError::Usage(other.to_string()),
    }
}

fn main() -> ExitCode {
    // Die quietly when a pipe downstream closes early (e.g. `... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(fail_present) => {
            if fail_present {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Sgp { generators, json } => {
            let s = NumericalSemigroup::from_generators(&generators).map_err(core_err)?;
            output::print_invariants(&s.invariants(), json);
            Ok(false)
        }
        Command::Ideal {
            semigroup,
            op,
            args,
            ord,
            json,
        } => {
            let s = Arc::new(NumericalSemigroup::from_generators(&semigroup).map_err(core_err)?);
            let result = eval_ideal_op(&s, &op, &args)?;
            output::print_ideal(&result, ord, json).map_err(core_err)?;
            Ok(false)
        }
        Command::Resolve {
            file,
            module,
            jmax,
            degree_bound,
            truncate,
            dump,
            csv,
            json,
        } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
            let mut inst = instance::parse(&text).map_err(|e| CliError::Usage(e.to_string()))?;
            if let Some(n) = truncate {
                inst.truncate = Some(n);
            }
            if let Some(d) = degree_bound {
                inst.degree_bound = Some(d);
            }
            let jmax = jmax.or(inst.jmax).unwrap_or(3);
            if inst.truncate.is_some() && jmax == 0 {
                return Err(core_err(CoreError::StepBoundRequired));
            }
            let pres = inst.presentation(&module).map_err(|m| {
                // Engine bound errors travel through the string; keep code 3.
                if m.contains("degree bound") {
                    CliError::Bound(m)
                } else {
                    CliError::Usage(m)
                }
            })?;
            let res =
                minimal_resolution(&pres, jmax.max(1), inst.degree_bound).map_err(core_err)?;
            output::print_resolution(&res, &module, json);
            if let Some(path) = dump {
                std::fs::write(&path, output::resolution_json(&res).to_string())
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            if let Some(path) = csv {
                std::fs::write(&path, output::betti_csv(&res))
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            Ok(false)
        }
        Command::Verify {
            glob,
            file,
            genus_max,
            ideals_per_sgp,
            a_max,
            mult_max,
            seed,
            degree_bound,
            out,
            csv,
            json,
        } => {
            let (reports, errors) = match file {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                    let inst =
                        instance::parse(&text).map_err(|e| CliError::Usage(e.to_string()))?;
                    (run_file_checks(&inst, &glob)?, Vec::new())
                }
                None => {
                    if !harness::registered_statements()
                        .iter()
                        .any(|id| harness::statement_matches(&glob, id))
                    {
                        return Err(CliError::Usage(format!(
                            "`{glob}` matches no statement; known: {}",
                            harness::registered_statements().join(", ")
                        )));
                    }
                    let cfg = SweepConfig {
                        genus_max,
                        ideals_per_semigroup: ideals_per_sgp,
                        seed,
                        a_max,
                        mult_max,
                        degree_bound,
                    };
                    harness::run_statements_lossy(&glob, &cfg).map_err(core_err)?
                }
            };
            // Flush whatever completed before surfacing any bound error.
            output::print_reports(&reports, json);
            if let Some(path) = out {
                output::write_jsonl(&reports, &path)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            if let Some(path) = csv {
                output::write_report_csv(&reports, &path)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            if let Some(e) = errors.into_iter().next() {
                return Err(core_err(e));
            }
            Ok(reports.iter().any(|r| r.verdict == Verdict::Fail))
        }
        Command::Explore {
            question,
            a_max,
            mult_max,
            genus_max,
            csv,
            json,
        } => match question.as_str() {
            "hyp" => {
                let (rows, report) = harness::explore_question_hyp(a_max).map_err(core_err)?;
                output::print_hyp_table(&rows, json);
                if let Some(path) = csv {
                    output::write_hyp_csv(&rows, &path)
                        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                }
                Ok(report.verdict == Verdict::Fail)
            }
            "qu2" => {
                let (rows, report) =
                    harness::explore_question_qu2(mult_max, genus_max).map_err(core_err)?;
                output::print_qu2_table(&rows, json);
                if let Some(path) = csv {
                    output::write_qu2_csv(&rows, &path)
                        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                }
                Ok(report.verdict == Verdict::Fail)
            }
            other => Err(CliError::Usage(format!(
                "unknown question `{other}`; expected `hyp` or `qu2`"
            ))),
        },
    }
}

fn eval_ideal_op(
    s: &Arc<NumericalSemigroup>,
    op: &str,
    args: &[String],
) -> Result<Ideal, CliError> {
    let parse = |expr: &str| instance::parse_ideal_expr(s, expr).map_err(CliError::Usage);
    let unary = |args: &[String]| -> Result<Ideal, CliError> {
        match args {
            [a] => parse(a),
            _ => Err(CliError::Usage(format!("`{op}` takes one ideal argument"))),
        }
    };
    let binary = |args: &[String]| -> Result<(Ideal, Ideal), CliError> {
        match args {
            [a, b] => Ok((parse(a)?, parse(b)?)),
            _ => Err(CliError::Usage(format!("`{op}` takes two ideal arguments"))),
        }
    };
    match op {
        "conductor" => Ok(Ideal::conductor(s.clone())),
        "canonical" => Ok(Ideal::canonical(s.clone())),
        "trace" => unary(args)?.trace().map_err(core_err),
        "ord" => unary(args), // the order itself is printed by --ord; keep the ideal
        "colon" => {
            let (x, m) = binary(args)?;
            x.colon(&m).map_err(core_err)
        }
        "product" => {
            let (a, b) = binary(args)?;
            a.product(&b).map_err(core_err)
        }
        "sum" => {
            let (a, b) = binary(args)?;
            a.sum(&b).map_err(core_err)
        }
        "tau" => {
            let (x, m) = binary(args)?;
            x.tau(&m).map_err(core_err)
        }
        other => Err(CliError::Usage(format!(
            "unknown ideal operation `{other}`; expected trace, ord, colon, product, sum, tau, conductor, canonical"
        ))),
    }
}

/// Dispatches the `check` lines of an instance file whose statement id
/// matches the glob.
fn run_file_checks(
    inst: &instance::InstanceFile,
    glob: &str,
) -> Result<Vec<CheckReport>, CliError> {
    let mut reports = Vec::new();
    for line in &inst.checks {
        if !harness::statement_matches(glob, &line.statement) {
            continue;
        }
        let report = dispatch_check(inst, line)?;
        reports.push(report);
    }
    if reports.is_empty() {
        return Err(CliError::Usage(format!(
            "`{glob}` selects no check line in the instance file"
        )));
    }
    Ok(reports)
}

fn dispatch_check(
    inst: &instance::InstanceFile,
    line: &instance::CheckLine,
) -> Result<CheckReport, CliError> {
    let usage = |m: String| CliError::Usage(format!("line {}: {m}", line.line));
    let arg = |i: usize| -> Result<&str, CliError> {
        line.args
            .get(i)
            .map(String::as_str)
            .ok_or_else(|| usage(format!("`{}` needs more arguments", line.statement)))
    };
    let int = |i: usize| -> Result<i64, CliError> {
        arg(i)?
            .parse()
            .map_err(|e| usage(format!("bad integer: {e}")))
    };
    let ideal = |i: usize| -> Result<&Ideal, CliError> { inst.ideal(arg(i)?).map_err(usage) };
    let module =
        |i: usize| -> Result<Presentation, CliError> { inst.presentation(arg(i)?).map_err(usage) };
    let bound = inst.degree_bound;
    let report = match line.statement.as_str() {
        "prop-trentry" => harness::check_prop_trentry(ideal(0)?, bound),
        "lemma-43" => harness::check_lemma_43(&module(0)?, arg(0)?, int(1)? as usize, bound),
        "cor-44" => harness::check_cor_44(&module(0)?, arg(0)?, int(1)?, int(2)? as usize, bound),
        "thm-big-shadow" | "thm-big" => harness::check_thm_big_dim1(ideal(0)?, int(1)?),
        "cor-6" => harness::check_cor_6_mcm(ideal(0)?, int(1)?),
        "cor-injmain" => harness::check_cor_injmain(ideal(0)?, int(1)?),
        "prop-her" => harness::check_prop_her(ideal(0)?),
        "thm-42" => harness::check_thm_42(ideal(0)?),
        "prop-nuco" => harness::check_prop_nuco(int(0)? as u64, int(1)? as u64),
        "prop-56" => harness::check_prop_56(&inst.semigroup),
        "cor-62" => harness::check_cor_62(&module(0)?, arg(0)?, bound),
        "prop-artinian" => {
            if inst.truncate.is_none() {
                return Err(usage(
                    "prop-artinian needs `truncate = N` in the file".into(),
                ));
            }
            harness::check_prop_artinian(&module(0)?, arg(0)?, bound)
        }
        "nchu" => harness::check_nchu(ideal(0)?, bound),
        "gorenstein-trace" => harness::check_gorenstein_trace(&inst.semigroup),
        "thm-31" => harness::check_thm_31(&module(0)?, arg(0)?, ideal(1)?, ideal(2)?, bound),
        other => return Err(usage(format!("unknown statement `{other}`"))),
    };
    report.map_err(core_err)
}
