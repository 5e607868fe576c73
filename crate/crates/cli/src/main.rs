//! Command-line interface: crossing numbers, extension dimensions, arc
//! quivers, diagrams, the linear-algebra oracle, and the verification
//! sweep.
//!
//! Exit codes: 0 on success, 1 when a verification sweep finds a
//! counterexample, 2 on invalid input.

use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use tubecat_core::intersect::{
    cover_crossings, crossing_numbers, strip_neg_crossing, strip_pos_crossing,
};
use tubecat_core::oracle::{
    build_rep, ext_dim_ar, ext_dim_euler, ext_dim_line, hom_dim_linalg, hom_dim_line,
};
use tubecat_core::quiver::{infinity_window, window, QuiverVertex, TranslationQuiver};
use tubecat_core::tube::{arc_of_module, ext_dim_cluster, ext_dim_infinity, ext_dim_tube, hom_dim};
use tubecat_core::{AnnulusArc, IndecModule, Rank, StripArc};

mod output;
mod svg;

use output::{
    to_json, CheckEntry, CheckOut, ExplainOut, ExtOut, IntersectOut, OracleOut, QuiverOut,
};

#[derive(Parser)]
#[command(
    name = "tubecat",
    version,
    about = "Oriented arcs in an annulus: signed crossing numbers, tube-category \
             extension dimensions, arc quivers and diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuiverFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ViewArg {
    Cover,
    Annulus,
}

#[derive(Subcommand)]
enum Command {
    /// Positive, negative and total crossing numbers of two arcs
    Intersect {
        /// Number of marked points on the outer boundary
        #[arg(long)]
        n: i64,
        /// Arc given by a lift "a,b"; pass exactly twice
        #[arg(long = "arc", value_name = "A,B")]
        arcs: Vec<String>,
        /// Emit JSON instead of aligned text
        #[arg(long)]
        json: bool,
        /// Count geometrically and include exact crossing coordinates
        #[arg(long)]
        points: bool,
    },
    /// Extension dimension between two indecomposables
    Ext {
        #[arg(
            long,
            required_unless_present = "infinity",
            conflicts_with = "infinity"
        )]
        n: Option<i64>,
        /// Module label "a,b"; pass exactly twice
        #[arg(long = "mod", value_name = "A,B")]
        modules: Vec<String>,
        /// Symmetrized dimension in the cluster category
        #[arg(long)]
        cluster: bool,
        /// Work over the infinite line instead of a finite-rank tube
        #[arg(long)]
        infinity: bool,
        /// Also print the crossing counts the dimension equals
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// Window of the arc quiver with arrows and the translate
    Quiver {
        #[arg(
            long,
            required_unless_present = "infinity",
            conflicts_with = "infinity"
        )]
        n: Option<i64>,
        /// Largest combinatorial length in the window (at least 2)
        #[arg(long)]
        max_len: i64,
        /// Strip-arc quiver of the infinite line
        #[arg(long)]
        infinity: bool,
        /// Smallest arc start (only with --infinity)
        #[arg(long, default_value_t = -4, allow_hyphen_values = true)]
        a_min: i64,
        /// Largest arc start (only with --infinity)
        #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
        a_max: i64,
        #[arg(long, value_enum, default_value_t = QuiverFormat::Dot)]
        format: QuiverFormat,
    },
    /// SVG picture of one or two arcs in the cover or the annulus
    Draw {
        #[arg(long)]
        n: i64,
        /// Arc given by a lift "a,b"; pass once or twice
        #[arg(long = "arc", value_name = "A,B")]
        arcs: Vec<String>,
        #[arg(long, value_enum, default_value_t = ViewArg::Cover)]
        view: ViewArg,
        /// Write to a file instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Ground-truth dimensions from the linear-algebra oracle
    Oracle {
        #[arg(
            long,
            required_unless_present = "infinity",
            conflicts_with = "infinity"
        )]
        n: Option<i64>,
        /// Module label "a,b"; pass exactly twice
        #[arg(long = "mod", value_name = "A,B")]
        modules: Vec<String>,
        #[arg(long)]
        infinity: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run every verification sweep and report pass/fail per check
    Check {
        /// Largest rank swept (1..=8)
        #[arg(long, default_value_t = 6)]
        n_max: i64,
        /// Length bound; each rank n is swept to min(len_max, 4n)
        #[arg(long, default_value_t = 18)]
        len_max: i64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

const COORD_BOUND: i64 = 1_000_000_000;
const RANK_BOUND: i64 = 1_000_000;
/// Bound on the drawing and point-enumeration paths, which walk deck
/// translates one by one.
const DESK_LEN_BOUND: i64 = 10_000;
/// Bound on the size of the intertwiner systems the oracle will solve.
const ORACLE_UNKNOWN_BOUND: i64 = 500;

fn parse_pair(raw: &str) -> Result<(i64, i64)> {
    let (a, b) = raw
        .split_once(',')
        .ok_or_else(|| anyhow!("expected \"a,b\", got \"{raw}\""))?;
    let a: i64 = a
        .trim()
        .parse()
        .with_context(|| format!("bad integer in \"{raw}\""))?;
    let b: i64 = b
        .trim()
        .parse()
        .with_context(|| format!("bad integer in \"{raw}\""))?;
    if a.abs() > COORD_BOUND || b.abs() > COORD_BOUND {
        bail!("coordinates in \"{raw}\" exceed the supported bound {COORD_BOUND}");
    }
    Ok((a, b))
}

fn parse_two(values: &[String], flag: &str) -> Result<[(i64, i64); 2]> {
    if values.len() != 2 {
        bail!("{flag} must be given exactly twice, got {}", values.len());
    }
    Ok([parse_pair(&values[0])?, parse_pair(&values[1])?])
}

fn check_rank(n: i64) -> Result<i64> {
    if !(1..=RANK_BOUND).contains(&n) {
        bail!("--n {n}: the rank must lie in 1..={RANK_BOUND}");
    }
    Ok(n)
}

fn annulus_arc(n: i64, (a, b): (i64, i64)) -> Result<AnnulusArc> {
    let lift = StripArc::new(a, b).with_context(|| format!("--arc {a},{b}"))?;
    let arc = lift.project(n).with_context(|| format!("--arc {a},{b}"))?;
    Ok(arc)
}

fn finite_module(n: i64, (a, b): (i64, i64)) -> Result<IndecModule> {
    IndecModule::new(Rank::Finite(n), a, b).with_context(|| format!("--mod {a},{b}"))
}

fn infinite_module((a, b): (i64, i64)) -> Result<IndecModule> {
    IndecModule::new(Rank::Infinite, a, b).with_context(|| format!("--mod {a},{b}"))
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Intersect {
            n,
            arcs,
            json,
            points,
        } => cmd_intersect(n, &arcs, json, points),
        Command::Ext {
            n,
            modules,
            cluster,
            infinity,
            explain,
            json,
        } => cmd_ext(n, &modules, cluster, infinity, explain, json),
        Command::Quiver {
            n,
            max_len,
            infinity,
            a_min,
            a_max,
            format,
        } => cmd_quiver(n, max_len, infinity, a_min, a_max, format),
        Command::Draw {
            n,
            arcs,
            view,
            output,
        } => cmd_draw(n, &arcs, view, output),
        Command::Oracle {
            n,
            modules,
            infinity,
            json,
        } => cmd_oracle(n, &modules, infinity, json),
        Command::Check {
            n_max,
            len_max,
            json,
        } => cmd_check(n_max, len_max, json),
    }
}

fn cmd_intersect(n: i64, arcs: &[String], json: bool, points: bool) -> Result<ExitCode> {
    let n = check_rank(n)?;
    let [p1, p2] = parse_two(arcs, "--arc")?;
    let alpha = annulus_arc(n, p1)?;
    let beta = annulus_arc(n, p2)?;
    let report = if points {
        if alpha.len().max(beta.len()) > DESK_LEN_BOUND {
            bail!("--points supports lengths up to {DESK_LEN_BOUND}");
        }
        cover_crossings(alpha, beta, true)?
    } else {
        crossing_numbers(alpha, beta)?
    };
    if json {
        println!("{}", to_json(&IntersectOut::from_report(&report)));
    } else {
        println!("pos    {}", report.pos);
        println!("neg    {}", report.neg);
        println!("total  {}", report.total);
        if let Some(points) = &report.points {
            for p in points {
                println!(
                    "point  m={} sign={} x={} y={}",
                    p.shift_m,
                    if p.sign > 0 { "+" } else { "-" },
                    p.x,
                    p.y
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ext(
    n: Option<i64>,
    modules: &[String],
    cluster: bool,
    infinity: bool,
    explain: bool,
    json: bool,
) -> Result<ExitCode> {
    let [p1, p2] = parse_two(modules, "--mod")?;
    let (ext, explain_out) = if infinity {
        let m1 = infinite_module(p1)?;
        let m2 = infinite_module(p2)?;
        let ext = ext_dim_infinity(m1, m2, cluster)?;
        let a1 = StripArc::new(m1.a(), m1.b()).expect("admissible");
        let a2 = StripArc::new(m2.a(), m2.b()).expect("admissible");
        let pos = strip_pos_crossing(a1, a2);
        let neg = strip_neg_crossing(a1, a2);
        let explain_out = ExplainOut {
            first: a1.to_string(),
            second: a2.to_string(),
            route: if cluster { "total" } else { "neg" }.to_string(),
            pos,
            neg,
            total: pos + neg,
        };
        (ext, explain_out)
    } else {
        let n = check_rank(n.expect("clap requires --n"))?;
        let m1 = finite_module(n, p1)?;
        let m2 = finite_module(n, p2)?;
        let ext = if cluster {
            ext_dim_cluster(m1, m2)?
        } else {
            ext_dim_tube(m1, m2)?
        };
        let alpha = arc_of_module(m1)?;
        let beta = arc_of_module(m2)?;
        let report = crossing_numbers(alpha, beta)?;
        let explain_out = ExplainOut {
            first: alpha.to_string(),
            second: beta.to_string(),
            route: if cluster { "total" } else { "neg" }.to_string(),
            pos: report.pos,
            neg: report.neg,
            total: report.total,
        };
        (ext, explain_out)
    };
    if json {
        let out = ExtOut {
            ext,
            explain: explain.then_some(explain_out),
        };
        println!("{}", to_json(&out));
    } else {
        println!("{ext}");
        if explain {
            println!(
                "{} crossings of {} and {}: pos {}, neg {}, total {}",
                explain_out.route,
                explain_out.first,
                explain_out.second,
                explain_out.pos,
                explain_out.neg,
                explain_out.total
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn quiver_out<V: QuiverVertex>(q: &TranslationQuiver<V>, kind: &str, n: Option<i64>) -> QuiverOut {
    let label = |i: usize| q.vertices[i].dot_label();
    QuiverOut {
        kind: kind.to_string(),
        n,
        max_len: q.max_len,
        vertices: (0..q.vertices.len()).map(label).collect(),
        arrows: q
            .arrows
            .iter()
            .map(|&(s, t)| (label(s), label(t)))
            .collect(),
        tau: q
            .tau
            .iter()
            .enumerate()
            .filter_map(|(i, t)| t.map(|t| (label(i), label(t))))
            .collect(),
    }
}

fn cmd_quiver(
    n: Option<i64>,
    max_len: i64,
    infinity: bool,
    a_min: i64,
    a_max: i64,
    format: QuiverFormat,
) -> Result<ExitCode> {
    if max_len > 512 {
        bail!("--max-len {max_len}: windows larger than 512 are not supported");
    }
    let text = if infinity {
        if a_max.saturating_sub(a_min) > 512 || a_min.abs().max(a_max.abs()) > COORD_BOUND {
            bail!("start range {a_min}..={a_max} is not supported");
        }
        let q = infinity_window(a_min, a_max, max_len)?;
        match format {
            QuiverFormat::Dot => q.to_dot(),
            QuiverFormat::Json => format!("{}\n", to_json(&quiver_out(&q, "strip", None))),
        }
    } else {
        let n = check_rank(n.expect("clap requires --n"))?;
        if n > 512 {
            bail!("--n {n}: quiver windows support ranks up to 512");
        }
        let q = window(n, max_len)?;
        match format {
            QuiverFormat::Dot => q.to_dot(),
            QuiverFormat::Json => format!("{}\n", to_json(&quiver_out(&q, "annulus", Some(n)))),
        }
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_draw(n: i64, arcs: &[String], view: ViewArg, output: Option<PathBuf>) -> Result<ExitCode> {
    let n = check_rank(n)?;
    if n > 1000 {
        bail!("--n {n}: drawings support ranks up to 1000");
    }
    if arcs.is_empty() || arcs.len() > 2 {
        bail!("--arc must be given once or twice, got {}", arcs.len());
    }
    let mut parsed = Vec::new();
    for raw in arcs {
        let arc = annulus_arc(n, parse_pair(raw)?)?;
        if arc.len() > DESK_LEN_BOUND {
            bail!("--arc {raw}: drawings support lengths up to {DESK_LEN_BOUND}");
        }
        parsed.push(arc);
    }
    let kind = match view {
        ViewArg::Cover => svg::ViewKind::Cover,
        ViewArg::Annulus => svg::ViewKind::Annulus,
    };
    let text = svg::render(kind, &parsed)?;
    match output {
        Some(path) => {
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(n: Option<i64>, modules: &[String], infinity: bool, json: bool) -> Result<ExitCode> {
    let [p1, p2] = parse_two(modules, "--mod")?;
    let out = if infinity {
        let m1 = infinite_module(p1)?;
        let m2 = infinite_module(p2)?;
        ensure_oracle_scale(m1.b() - m1.a(), m2.b() - m2.a())?;
        let hom = hom_dim(m1, m2)?;
        let hom_linalg = hom_dim_line(m1, m2)?;
        let ext = ext_dim_infinity(m1, m2, false)?;
        let ext_dual = ext_dim_line(m1, m2)?;
        OracleOut {
            hom,
            hom_linalg,
            ext,
            ext_dual,
            ext_euler: None,
            agree: hom == hom_linalg && ext == ext_dual,
        }
    } else {
        let n = check_rank(n.expect("clap requires --n"))?;
        let m1 = finite_module(n, p1)?;
        let m2 = finite_module(n, p2)?;
        ensure_oracle_scale(m1.b() - m1.a(), m2.b() - m2.a())?;
        let hom = hom_dim(m1, m2)?;
        let hom_linalg = hom_dim_linalg(&build_rep(m1)?, &build_rep(m2)?)?;
        let ext = ext_dim_tube(m1, m2)?;
        let ext_dual = ext_dim_ar(m1, m2)?;
        let euler = ext_dim_euler(m1, m2)?;
        OracleOut {
            hom,
            hom_linalg,
            ext,
            ext_dual,
            ext_euler: Some(euler),
            agree: hom == hom_linalg && ext == ext_dual && ext == euler,
        }
    };
    if json {
        println!("{}", to_json(&out));
    } else {
        println!("hom         {}", out.hom);
        println!("hom_linalg  {}", out.hom_linalg);
        println!("ext         {}", out.ext);
        println!("ext_dual    {}", out.ext_dual);
        if let Some(euler) = out.ext_euler {
            println!("ext_euler   {euler}");
        }
        println!("agree       {}", out.agree);
    }
    Ok(ExitCode::SUCCESS)
}

fn ensure_oracle_scale(len1: i64, len2: i64) -> Result<()> {
    // The intertwiner system has roughly one unknown per matching basis
    // pair; keep the elimination at desk scale.
    if (len1 - 1) * (len2 - 1) > ORACLE_UNKNOWN_BOUND * ORACLE_UNKNOWN_BOUND {
        bail!("modules too large for the exact oracle; keep lengths below ~{ORACLE_UNKNOWN_BOUND}");
    }
    Ok(())
}

fn cmd_check(n_max: i64, len_max: i64, json: bool) -> Result<ExitCode> {
    if !(1..=8).contains(&n_max) {
        bail!("--n-max {n_max}: supported range is 1..=8");
    }
    if !(2..=32).contains(&len_max) {
        bail!("--len-max {len_max}: supported range is 2..=32");
    }
    let outcomes = tubecat_core::checks::run_all(n_max, len_max);
    let all_passed = outcomes.iter().all(|o| o.passed());
    if json {
        let out = CheckOut {
            checks: outcomes.iter().map(CheckEntry::from_outcome).collect(),
            all_passed,
        };
        println!("{}", to_json(&out));
    } else {
        let color = std::io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none();
        let paint = |ok: bool| -> &'static str {
            match (ok, color) {
                (true, true) => "\x1b[32mpass\x1b[0m",
                (true, false) => "pass",
                (false, true) => "\x1b[31mFAIL\x1b[0m",
                (false, false) => "FAIL",
            }
        };
        let mut total_cases = 0u64;
        for o in &outcomes {
            total_cases += o.cases;
            if o.passed() {
                println!("{:<22} {:>8} cases   {}", o.name, o.cases, paint(true));
            } else {
                println!(
                    "{:<22} {:>8} cases   {} ({} failures)",
                    o.name,
                    o.cases,
                    paint(false),
                    o.failures.len()
                );
                println!("  first counterexample: {}", o.failures[0]);
            }
        }
        let failed = outcomes.iter().filter(|o| !o.passed()).count();
        if all_passed {
            println!(
                "all {} checks passed ({} cases)",
                outcomes.len(),
                total_cases
            );
        } else {
            println!("{failed} of {} checks failed", outcomes.len());
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
