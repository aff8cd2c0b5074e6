//! Subcommand front end. Output goes to the given writers so tests can run
//! it in process.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::blowup::{recursion_value, BlowupTree};
use crate::counting::{count_family, funky_analysis, PatternFamily, Pentagon};
use crate::error::{Error, Result};
use crate::graph::SmallGraph;
use crate::grid::{certify_x0_claim, gradient_bound, grid_max, GridMode, GridResult, GridSpec};
use crate::ledger::{render_table, verify_claims, GridInputs};
use crate::limit::limit_density;
use crate::qp::{qp_bounds, FlagConstants, RhsMode};
use crate::rational::{ratio, to_decimal, RationalJson};
use crate::search::{exhaustive_c, hill_climb};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(
    name = "c5cert",
    version,
    about = "Exact checks for induced pentagon density in iterated C5 blow-ups"
)]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Omit the timestamp from JSON reports.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
struct GraphInput {
    /// graph6 string; read from --file or stdin when absent.
    graph6: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Realize a blow-up tree and print it in graph6.
    Construct {
        #[arg(long)]
        tree: String,
    },
    /// Value of the balanced pentagon recursion at n.
    RecursionValue { n: u64 },
    /// Count induced copies of a pattern family.
    Count {
        #[arg(long, default_value = "c5")]
        pattern: String,
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Partition a graph around a pentagon and report funky degrees.
    Analyze {
        /// Five vertices, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        pentagon: Vec<usize>,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Exact density of a pattern family in the iterated blow-up limit.
    LimitDensity {
        #[arg(long, default_value = "c5")]
        base: String,
        #[arg(long, default_value = "c5")]
        pattern: String,
        #[arg(long)]
        table: bool,
    },
    /// Certified bounds of the four reduced quadratic programs.
    QpBounds {
        #[arg(long, value_enum, default_value_t = RhsMode::Derived)]
        rhs: RhsMode,
        #[arg(long)]
        table: bool,
    },
    /// Grid maximum of the outside-vertex bound with its covering correction.
    GridCertify {
        #[arg(long, default_value_t = 100)]
        steps: u32,
        #[arg(long, value_enum, default_value_t = GridMode::Strict)]
        mode: GridMode,
        #[arg(long, value_enum, default_value_t = Lipschitz::Paper)]
        lipschitz: Lipschitz,
        #[arg(long, value_enum, default_value_t = Toggle::On)]
        symmetry: Toggle,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        table: bool,
    },
    /// Exact C(n) by exhaustive generation, or a seeded local search.
    Search {
        #[arg(long, conflicts_with = "climb", required_unless_present = "climb")]
        exact: Option<usize>,
        #[arg(long, requires = "seed")]
        climb: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 200)]
        iters: u64,
    },
    /// Re-evaluate every numeric step of the stability argument.
    VerifyClaims {
        #[arg(long, value_enum, default_value_t = RhsMode::Derived)]
        rhs: RhsMode,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
        /// Also run the grids at these step counts for extra sub-checks.
        #[arg(long, value_delimiter = ',')]
        grid_steps: Vec<u32>,
    },
    /// Limit densities, program bounds and the claims ledger in one report.
    Report {
        #[arg(long, value_enum, default_value_t = RhsMode::Derived)]
        rhs: RhsMode,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Lipschitz {
    /// The constant 1/1000.
    Paper,
    /// The gradient bound evaluated at the grid cap.
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Toggle {
    On,
    Off,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Report<T: Serialize> {
    tool_version: &'static str,
    command: &'static str,
    inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pass: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timestamp: Option<u64>,
    result: T,
}

struct Ctx<'a> {
    out: &'a mut Vec<u8>,
    timestamp: bool,
}

impl Ctx<'_> {
    fn report<T: Serialize>(
        &mut self,
        command: &'static str,
        inputs: Value,
        pass: Option<bool>,
        result: T,
    ) -> Result<()> {
        let timestamp = self.timestamp.then(|| {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        });
        let r = Report {
            tool_version: TOOL_VERSION,
            command,
            inputs,
            pass,
            timestamp,
            result,
        };
        let text = serde_json::to_string_pretty(&r).expect("report serializes");
        self.line(&text)
    }

    fn line(&mut self, text: &str) -> Result<()> {
        writeln!(self.out, "{text}").map_err(|e| Error::Precondition(format!("write failed: {e}")))
    }
}

fn read_graph(input: &GraphInput) -> Result<SmallGraph> {
    let text = match (&input.graph6, &input.file) {
        (Some(g), _) => g.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Precondition(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    SmallGraph::from_graph6(line)
}

fn family(name: &str) -> Result<&'static PatternFamily> {
    PatternFamily::by_name(name).ok_or_else(|| {
        Error::Precondition(format!(
            "unknown pattern {name:?}; use c5, c22111 or c31111"
        ))
    })
}

/// Runs one command line. Returns the process exit code: 0 on success, 1
/// when a verification fails, 2 on usage or input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut buf: Vec<u8> = Vec::new();
    let status = pool.install(|| {
        let mut ctx = Ctx {
            out: &mut buf,
            timestamp: !cli.no_timestamp,
        };
        dispatch(cli.command, cli.threads, &mut ctx)
    });
    let _ = out.write_all(&buf);
    match status {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command, threads: Option<usize>, ctx: &mut Ctx) -> Result<bool> {
    let fc = FlagConstants::published();
    match cmd {
        Command::Construct { tree } => {
            let g = BlowupTree::parse(&tree)?.realize()?;
            ctx.line(&g.to_graph6())?;
        }
        Command::RecursionValue { n } => {
            ctx.line(&recursion_value(n).to_string())?;
        }
        Command::Count {
            pattern,
            input,
            json,
        } => {
            let fam = family(&pattern)?;
            let g = read_graph(&input)?;
            let c = count_family(&g, fam);
            if json {
                ctx.report(
                    "count",
                    json!({ "pattern": pattern, "graph6": g.to_graph6() }),
                    None,
                    json!({ "count": c }),
                )?;
            } else {
                ctx.line(&c.to_string())?;
            }
        }
        Command::Analyze { pentagon, input } => {
            let g = read_graph(&input)?;
            if pentagon.len() != 5 {
                return Err(Error::Precondition(format!(
                    "--pentagon needs 5 vertices, got {}",
                    pentagon.len()
                )));
            }
            let z = Pentagon::from_set(&g, &pentagon)?;
            let a = funky_analysis(&g, &z)?;
            ctx.report(
                "analyze",
                json!({ "pentagon": pentagon, "graph6": g.to_graph6() }),
                None,
                a,
            )?;
        }
        Command::LimitDensity {
            base,
            pattern,
            table,
        } => {
            let b = BlowupTree::parse(&base)?.realize()?;
            let r = limit_density(&b, family(&pattern)?)?;
            if table {
                ctx.line(&format!(
                    "{} {}",
                    crate::rational::to_fraction(&r.density),
                    to_decimal(&r.density, 12)
                ))?;
                for m in &r.per_member {
                    ctx.line(&format!(
                        "  {:<12} {}",
                        m.graph6,
                        crate::rational::to_fraction(&m.density)
                    ))?;
                }
            } else {
                ctx.report(
                    "limit-density",
                    json!({ "base": base, "pattern": pattern }),
                    None,
                    r,
                )?;
            }
        }
        Command::QpBounds { rhs, table } => {
            let b = qp_bounds(&fc, rhs)?;
            if table {
                for s in [&b.min_x1, &b.max_x1, &b.max_x0, &b.max_f] {
                    ctx.line(&format!(
                        "{:<8} [{}, {}]  {}",
                        format!("{:?}", s.objective),
                        to_decimal(&s.bound.lo, 12),
                        to_decimal(&s.bound.hi, 12),
                        s.case
                    ))?;
                }
            } else {
                ctx.report(
                    "qp-bounds",
                    json!({ "rhs": rhs, "rhsValue": RationalJson::from(&b.rhs) }),
                    None,
                    b,
                )?;
            }
        }
        Command::GridCertify {
            steps,
            mode,
            lipschitz,
            symmetry,
            json: _,
            table,
        } => {
            let spec = GridSpec::new(steps)?;
            let g = grid_max(&spec, mode, symmetry == Toggle::On, threads)?;
            let l = match lipschitz {
                Lipschitz::Paper => ratio(1, 1000),
                Lipschitz::Derived => gradient_bound(&spec),
            };
            let threshold = crate::counting::per_vertex_floor(&ratio(1, 26));
            let certified = (mode != GridMode::Unconstrained)
                .then(|| certify_x0_claim(&spec, &g, &l, &threshold));
            let pass = certified.as_ref().map(|c| c.bound.pass);
            if table {
                ctx.line(&format!(
                    "s={} {:?}: max {} at {:?}, {} points",
                    g.s,
                    g.mode,
                    to_decimal(&g.max_value, 12),
                    g.argmax.u,
                    g.evaluated
                ))?;
                if let Some(c) = &certified {
                    ctx.line(&format!(
                        "bound {} vs {} -> {}",
                        to_decimal(&c.bound.total, 12),
                        to_decimal(&threshold, 12),
                        if c.bound.pass { "pass" } else { "fail" }
                    ))?;
                }
            } else {
                #[derive(Serialize)]
                struct Out {
                    grid: GridResult,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    certificate: Option<crate::grid::X0Report>,
                }
                ctx.report(
                    "grid-certify",
                    json!({ "steps": steps, "mode": mode, "lipschitz": lipschitz, "symmetry": symmetry }),
                    pass,
                    Out {
                        grid: g,
                        certificate: certified,
                    },
                )?;
            }
            return Ok(pass.unwrap_or(true));
        }
        Command::Search {
            exact,
            climb,
            seed,
            iters,
        } => {
            let (r, inputs) = match (exact, climb) {
                (Some(n), _) => (exhaustive_c(n)?, json!({ "exact": n })),
                (None, Some(n)) => {
                    let seed =
                        seed.ok_or_else(|| Error::Precondition("--climb needs --seed".into()))?;
                    (
                        hill_climb(n, seed, iters)?,
                        json!({ "climb": n, "seed": seed, "iters": iters }),
                    )
                }
                (None, None) => return Err(Error::Precondition("give --exact or --climb".into())),
            };
            ctx.report("search", inputs, None, r)?;
        }
        Command::VerifyClaims {
            rhs,
            json: _,
            table,
            grid_steps,
        } => {
            let mut grids = GridInputs::default();
            let mut steps = grid_steps.clone();
            if !steps.contains(&100) {
                steps.insert(0, 100);
            }
            for s in steps {
                let spec = GridSpec::new(s)?;
                for mode in [GridMode::Strict, GridMode::Relaxed] {
                    grids.results.push(grid_max(&spec, mode, true, threads)?);
                }
            }
            let records = verify_claims(&fc, rhs, &grids)?;
            let pass = records.iter().all(|r| r.pass);
            if table {
                ctx.line(render_table(&records).trim_end())?;
            } else {
                ctx.report(
                    "verify-claims",
                    json!({ "rhs": rhs, "gridSteps": grid_steps }),
                    Some(pass),
                    records,
                )?;
            }
            return Ok(pass);
        }
        Command::Report { rhs } => {
            let c5 = SmallGraph::c5();
            let densities: Vec<_> = [
                PatternFamily::c5(),
                PatternFamily::c22111(),
                PatternFamily::c31111(),
            ]
            .into_iter()
            .map(|f| limit_density(&c5, f))
            .collect::<Result<_>>()?;
            let spec = GridSpec::new(100)?;
            let grids = GridInputs {
                results: vec![grid_max(&spec, GridMode::Strict, true, threads)?],
            };
            let records = verify_claims(&fc, rhs, &grids)?;
            let pass = records.iter().all(|r| r.pass);
            ctx.report(
                "report",
                json!({ "rhs": rhs }),
                Some(pass),
                json!({
                    "limitDensities": densities,
                    "qpBounds": qp_bounds(&fc, rhs)?,
                    "grid": grids.results[0],
                    "claims": records,
                }),
            )?;
            return Ok(pass);
        }
    }
    Ok(true)
}
