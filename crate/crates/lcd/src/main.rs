use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use lcd_core::bounds::{lcd_upper_bound_with, BoundOptions};
use lcd_core::search::{
    apply_main_reduction, highrate_column_search, method1_search, Goal, MultisetSearch,
    ReductionPlan, SearchMode, SearchSpec, DEFAULT_NODE_BUDGET,
};
use lcd_core::simplex::{build_multiset_code, extend_lcd, simplex_matrix};
use lcd_core::{FieldOrder, LinearCode, MultiplicityVector, DEFAULT_ENUMERATION_BUDGET};
use lcd_tools::certificate::Certificate;
use lcd_tools::format::{load_code, render_matrix, save_code};
use lcd_tools::paper::{all_codes, build_paper_code, claim, PaperCodeId};
use lcd_tools::parallel::{parallel_multiset, resume_parallel};
use lcd_tools::verify::{verify_table, VerifyOptions, DEFAULT_VERIFY_BUDGET, TABLES};
use lcd_tools::{Error, Result, BUDGET_ENV};

#[derive(Parser)]
#[command(
    name = "lcd",
    version,
    about = "LCD codes over GF(2) and GF(3): bounds, constructions and exhaustive searches"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Paper,
    Free,
}

impl From<ModeArg> for SearchMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Paper => SearchMode::PaperReplication,
            ModeArg::Free => SearchMode::Unconstrained,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GoalArg {
    One,
    All,
    Empty,
}

impl From<GoalArg> for Goal {
    fn from(g: GoalArg) -> Self {
        match g {
            GoalArg::One => Goal::FindOne,
            GoalArg::All => Goal::EnumerateAll,
            GoalArg::Empty => Goal::ProveEmpty,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Griesmer value and LCD upper bound for d_q(n, k).
    Bound {
        q: u32,
        n: u64,
        k: u32,
        /// Also apply the binary d = 0 mod 4 rule.
        #[arg(long)]
        div4: bool,
    },
    /// Prints `q n k d dperp lcd` for a generator matrix file.
    Check { file: PathBuf },
    /// Prints the simplex generator S_{q,k}.
    Simplex { q: u32, k: usize },
    /// Builds and checks the multiplicity code C_{q,k}(m).
    Cm {
        q: u32,
        k: usize,
        #[arg(long)]
        m: String,
        /// Write the generator here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Prepends s copies of the simplex generator.
    Extend {
        file: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Shortens on the first t coordinates.
    Shorten {
        file: PathBuf,
        #[arg(long)]
        at: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Multiplicity-vector search for LCD [n, k, >= d] codes without zero coordinates.
    SearchCm {
        #[arg(required_unless_present = "resume")]
        q: Option<u32>,
        #[arg(required_unless_present = "resume")]
        n: Option<u32>,
        #[arg(required_unless_present = "resume")]
        k: Option<usize>,
        #[arg(required_unless_present = "resume")]
        d: Option<u32>,
        #[arg(long, value_enum, default_value = "paper")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "one")]
        goal: GoalArg,
        /// Node budget (per subtree when splitting).
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Split the tree at this depth and run subtrees in parallel.
        #[arg(long)]
        split_depth: Option<usize>,
        /// Continue an inconclusive certificate.
        #[arg(long, conflicts_with_all = ["q", "n", "k", "d"])]
        resume: Option<PathBuf>,
    },
    /// Systematic search over generators (I_k | A).
    Method1 {
        q: u32,
        n: usize,
        k: usize,
        d: usize,
        #[arg(long)]
        lcd_only: bool,
        #[arg(long, value_enum, default_value = "one")]
        goal: GoalArg,
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Column search for LCD [n, n-i, 3] codes.
    Highrate {
        q: u32,
        n: usize,
        i: usize,
        #[arg(long, value_enum, default_value = "one")]
        goal: GoalArg,
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Reduction of the residue class t (distance q^(k-1) s + alpha) to a single search.
    Reduce {
        q: u32,
        k: u32,
        t: u64,
        #[arg(allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long, value_enum, default_value = "paper")]
        mode: ModeArg,
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Recomputes a published table and reports each cell.
    VerifyTable {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(TABLES))]
        name: String,
        /// Print the report as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Node budget for each search.
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_VERIFY_BUDGET)]
        budget: u64,
        /// Multiplicity search mode for nonexistence checks.
        #[arg(long, value_enum, default_value = "paper")]
        mode: ModeArg,
    },
    /// Prints an embedded code.
    PaperCode {
        #[arg(required_unless_present = "list")]
        id: Option<PaperCodeId>,
        /// List every embedded code id.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn field(q: u32) -> Result<FieldOrder> {
    Ok(FieldOrder::new(q)?)
}

fn lcd_tag(c: &LinearCode) -> &'static str {
    if c.is_lcd() {
        "lcd"
    } else {
        "not-lcd"
    }
}

fn describe(c: &LinearCode) -> Result<String> {
    let d = c.min_distance(DEFAULT_ENUMERATION_BUDGET)?;
    let dperp = if c.k() == c.n() {
        "-".to_owned()
    } else {
        c.dual_distance(DEFAULT_ENUMERATION_BUDGET)?.to_string()
    };
    Ok(format!(
        "{} {} {} {d} {dperp} {}",
        c.field().q(),
        c.n(),
        c.k(),
        lcd_tag(c)
    ))
}

fn emit_code(c: &LinearCode, out: Option<PathBuf>) -> Result<()> {
    println!("{}", describe(c)?);
    match out {
        Some(path) => save_code(c, &path),
        None => {
            print!("{}", render_matrix(c.generator()));
            Ok(())
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Bound { q, n, k, div4 } => {
            let v = lcd_upper_bound_with(field(q)?, n, k, BoundOptions { binary_div4: div4 });
            println!(
                "g={} lcd_upper={} rule={}",
                v.griesmer,
                v.lcd_upper,
                v.rule.tag()
            );
        }
        Cmd::Check { file } => println!("{}", describe(&load_code(&file)?)?),
        Cmd::Simplex { q, k } => print!("{}", render_matrix(&simplex_matrix(field(q)?, k))),
        Cmd::Cm { q, k, m, out } => {
            let mv = MultiplicityVector::parse(field(q)?, k, &m)?;
            emit_code(&build_multiset_code(&mv)?, out)?;
        }
        Cmd::Extend { file, s, out } => {
            let ext = extend_lcd(&load_code(&file)?, s, DEFAULT_ENUMERATION_BUDGET)?;
            emit_code(&ext.code, out)?;
        }
        Cmd::Shorten { file, at, out } => emit_code(&load_code(&file)?.shorten(at)?, out)?,
        Cmd::SearchCm {
            q,
            n,
            k,
            d,
            mode,
            goal,
            budget,
            split_depth,
            resume,
        } => {
            let start = Instant::now();
            let cert = match resume {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|source| Error::Io { path, source })?;
                    let old = Certificate::from_json(&text)?;
                    let spec: SearchSpec = serde_json::from_value(old.spec.clone())?;
                    if let Some(plan) = &old.split_plan {
                        let (out, plan) = resume_parallel(&spec, plan, budget);
                        Certificate::multiset(&spec, &out, start.elapsed(), Some(plan))
                    } else {
                        let cursor = old.resume_cursor.ok_or_else(|| {
                            Error::Invalid("certificate has nothing to resume".to_owned())
                        })?;
                        let out = MultisetSearch::new(&spec).resume(&cursor, budget);
                        Certificate::multiset(&spec, &out, start.elapsed(), None)
                    }
                }
                None => {
                    let (q, n, k, d) = (
                        q.expect("required"),
                        n.expect("required"),
                        k.expect("required"),
                        d.expect("required"),
                    );
                    let spec = SearchSpec::new(field(q)?, k, n, d, mode.into(), goal.into())?;
                    match split_depth {
                        Some(depth) => {
                            let (out, plan) = parallel_multiset(&spec, depth, budget);
                            Certificate::multiset(&spec, &out, start.elapsed(), Some(plan))
                        }
                        None => {
                            let out = MultisetSearch::new(&spec).run(budget);
                            Certificate::multiset(&spec, &out, start.elapsed(), None)
                        }
                    }
                }
            };
            println!("{}", cert.to_json());
        }
        Cmd::Method1 {
            q,
            n,
            k,
            d,
            lcd_only,
            goal,
            budget,
        } => {
            let start = Instant::now();
            let f = field(q)?;
            let out = method1_search(f, n, k, d, lcd_only, goal.into(), budget)?;
            println!(
                "{}",
                Certificate::method1(f, n, k, d, lcd_only, goal.into(), &out, start.elapsed())
                    .to_json()
            );
        }
        Cmd::Highrate {
            q,
            n,
            i,
            goal,
            budget,
        } => {
            let start = Instant::now();
            let f = field(q)?;
            let out = highrate_column_search(f, n, i, 3, goal.into(), budget)?;
            println!(
                "{}",
                Certificate::highrate(f, n, i, goal.into(), &out, start.elapsed()).to_json()
            );
        }
        Cmd::Reduce {
            q,
            k,
            t,
            alpha,
            mode,
            budget,
        } => {
            let start = Instant::now();
            let plan = ReductionPlan::new(field(q)?, k, t, alpha)?;
            let out = apply_main_reduction(&plan, mode.into(), budget)?;
            println!(
                "{}",
                Certificate::reduction(&out, start.elapsed()).to_json()
            );
        }
        Cmd::VerifyTable {
            name,
            json,
            budget,
            mode,
        } => {
            let report = verify_table(
                &name,
                &VerifyOptions {
                    budget,
                    multiset_mode: mode.into(),
                },
            )?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.render());
            }
            if report.has_failures() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Cmd::PaperCode { id, list, out } => {
            if list {
                for id in all_codes() {
                    let c = claim(id)?;
                    println!("{id} q={} [{},{},{}]", c.field.q(), c.n, c.k, c.d);
                }
            } else {
                emit_code(&build_paper_code(id.expect("required"))?, out)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse().cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
