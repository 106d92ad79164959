//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit code:
//! 0 success, 1 invalid verdict or infeasible instance, 2 input error,
//! 3 size cap exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::code::{
    exact_min_id_code, exact_min_set_cover, greedy_id_code, greedy_ratio_bound,
    verify_identifying_code, Code, DEFAULT_EXACT_CAP,
};
use crate::constructions::{c4_free_bipartite_family, path_graph, vc_d_bipartite_family};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::approx_id_code_interval;
use crate::io::{
    format_ids, parse_code, parse_graph, parse_intervals, parse_setcover, write_graph,
    write_intervals,
};
use crate::reductions::{
    build_dc_instance, build_ic_instance, dc_solution_to_setcover, ic_solution_to_setcover,
    setcover_to_dc_solution, setcover_to_ic_solution, ReducedInstance, SetCover1Instance,
};
use crate::vcdim::{sauer_lower_bound, vc_dimension};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Set-cover instances handed to the exact cover solver are capped at this
/// many sets.
const SET_COVER_CAP: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "idcode", version, about = "Identifying-code toolkit")]
struct Cli {
    /// Output style: readable lines or `key=value` lines.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Kv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    C4free,
    Vcd,
    Path,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Dc,
    Ic,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check whether a vertex set is an identifying code.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated 0-based vertex ids.
        #[arg(long, allow_hyphen_values = true)]
        code: String,
    },
    /// Minimum identifying code by branch and bound.
    SolveExact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        cap: usize,
    },
    /// LP-rounding 6-approximation on an interval representation.
    ApproxInterval {
        #[arg(long)]
        intervals: PathBuf,
    },
    /// Greedy logarithmic approximation.
    ApproxGreedy {
        #[arg(long)]
        graph: PathBuf,
    },
    /// VC-dimension of the closed-neighborhood hypergraph.
    Vcdim {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_d: usize,
    },
    /// Smallest c with c^d >= n - 1.
    Lowerbound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u32,
    },
    /// Generate an extremal family member.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        param: usize,
        /// Write `<out>.graph`, `<out>.code` (and `<out>.intervals` for
        /// paths) instead of printing the graph.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce a set-cover instance to a code instance.
    Reduce {
        #[arg(long)]
        setcover: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
        /// Write `<out>.graph` and `<out>.labels` instead of printing them.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a code of the reduced instance back to a set cover.
    MapBack {
        #[arg(long)]
        setcover: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        code: String,
    },
}

/// Ordered output. `headline` is the human-mode first line; every entry is
/// printed as `key: value` (human) or `key=value` (kv).
#[derive(Debug, Default)]
struct Report {
    headline: Option<String>,
    entries: Vec<(String, String)>,
    /// Free-form blocks printed after the entries in human mode only.
    blocks: Vec<String>,
    exit: i32,
}

impl Report {
    fn headline(&mut self, key: &str, value: impl ToString) {
        let value = value.to_string();
        self.headline = Some(value.clone());
        self.entries.push((key.to_string(), value));
    }

    fn put(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    fn emit(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Human => {
                if let Some(h) = &self.headline {
                    writeln!(out, "{h}")?;
                }
                let skip = usize::from(self.headline.is_some());
                for (k, v) in self.entries.iter().skip(skip) {
                    writeln!(out, "{k}: {v}")?;
                }
                for b in &self.blocks {
                    write!(out, "{b}")?;
                }
            }
            Format::Kv => {
                for (k, v) in &self.entries {
                    writeln!(out, "{k}={v}")?;
                }
            }
        }
        Ok(())
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Twins(..)
        | Error::Infeasible(_)
        | Error::NotShattered
        | Error::InvalidCode(_)
        | Error::Internal(_) => EXIT_FAILED,
        Error::VertexOutOfRange { .. }
        | Error::SameVertex(_)
        | Error::NotAdjacent(..)
        | Error::InvalidBipartition(_)
        | Error::NotACover { .. }
        | Error::Degenerate(_)
        | Error::InvalidInput(_)
        | Error::Parse { .. } => EXIT_INPUT,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let format = cli.format;
    match execute(cli.command) {
        Ok(report) => {
            let _ = report.emit(format, out);
            report.exit
        }
        Err(e) => {
            let code = exit_code(&e);
            match format {
                Format::Human => {
                    let _ = writeln!(err, "{e}");
                }
                Format::Kv => {
                    let _ = writeln!(out, "error={e}");
                    let _ = writeln!(out, "exit={code}");
                }
            }
            code
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?)
}

fn load_setcover(path: &Path) -> Result<SetCover1Instance> {
    parse_setcover(&read(path)?)
}

fn one_based(ids: &[usize]) -> String {
    format_ids(ids.iter().map(|t| t + 1))
}

fn execute(command: Command) -> Result<Report> {
    let mut r = Report::default();
    match command {
        Command::Verify { graph, code } => {
            let g = load_graph(&graph)?;
            let code = Code::identifying(parse_code(&code, g.n())?);
            let verdict = verify_identifying_code(&g, &code)?;
            r.headline("verdict", verdict);
            r.put("size", code.len());
            if !verdict.is_valid() {
                r.exit = EXIT_FAILED;
            }
        }
        Command::SolveExact { graph, cap } => {
            let g = load_graph(&graph)?;
            let code = exact_min_id_code(&g, cap)?;
            r.headline("gamma_id", code.len());
            r.put("code", format_ids(code.vertices.iter()));
        }
        Command::ApproxInterval { intervals } => {
            let rep = parse_intervals(&read(&intervals)?)?;
            let g = rep.graph();
            let approx = approx_id_code_interval(&g, &rep)?;
            r.headline("code", format_ids(approx.code.vertices.iter()));
            r.put("size", approx.code.len());
            r.put("inter_size", approx.inter.vertices.len());
            r.put("disj_size", approx.disj.len());
            r.put("opt_full", &approx.opt_full);
            r.put("opt_inter", &approx.opt_inter);
            r.put("opt_disj", &approx.opt_disj);
            if let Some(ratio) = approx.ratio_to_fractional() {
                r.put("ratio", ratio);
            }
            for (i, link) in approx.bound_chain().iter().enumerate() {
                let verdict = if link.holds() { "ok" } else { "FAILED" };
                r.put(
                    &format!("chain{}", i + 1),
                    format!("{} : {} <= {} {verdict}", link.name, link.lhs, link.rhs),
                );
                if !link.holds() {
                    r.exit = EXIT_FAILED;
                }
            }
        }
        Command::ApproxGreedy { graph } => {
            let g = load_graph(&graph)?;
            let code = greedy_id_code(&g)?;
            let n = g.n();
            r.headline("code", format_ids(code.vertices.iter()));
            r.put("size", code.len());
            r.put("requirements", n + n * n.saturating_sub(1) / 2);
            r.put("ratio_bound", format!("{:.6}", greedy_ratio_bound(n)));
        }
        Command::Vcdim { graph, max_d } => {
            let g = load_graph(&graph)?;
            let vc = vc_dimension(&g, max_d);
            r.headline("dimension", vc.dimension);
            r.put("lower_bound_only", vc.lower_bound_only);
            r.put("shattered", format_ids(vc.certificate.shattered_set.iter()));
            r.put("witnesses", format_ids(vc.certificate.witnesses.iter().copied()));
            if g.is_twin_free() && vc.dimension >= 1 && g.n() >= 2 && !vc.lower_bound_only {
                r.put(
                    "gamma_id_lower_bound",
                    sauer_lower_bound(g.n() as u64, vc.dimension as u32)?,
                );
            }
        }
        Command::Lowerbound { n, d } => {
            r.headline("lower_bound", sauer_lower_bound(n, d)?);
        }
        Command::Gen { family, param, out } => gen(&mut r, family, param, out)?,
        Command::Reduce {
            setcover,
            target,
            out,
        } => reduce(&mut r, &load_setcover(&setcover)?, target, out)?,
        Command::MapBack {
            setcover,
            target,
            code,
        } => {
            let sc = load_setcover(&setcover)?;
            let red = build(&sc, target)?;
            let vertices = parse_code(&code, red.graph.n())?;
            let code_size = vertices.len();
            let (cover, bound) = match target {
                Target::Dc => {
                    let cover = dc_solution_to_setcover(&red, &vertices)?;
                    let bound = code_size.saturating_sub(sc.ground_size()) as f64 / red.ell as f64;
                    (cover, bound)
                }
                Target::Ic => {
                    let back = ic_solution_to_setcover(&red, &Code::identifying(vertices))?;
                    r.put("swaps", back.swaps);
                    (back.cover, code_size as f64 / red.ell as f64)
                }
            };
            r.headline("cover", one_based(&cover));
            r.put("size", cover.len());
            r.put("code_size", code_size);
            r.put("size_bound", format!("{bound:.6}"));
        }
    }
    Ok(r)
}

fn gen(r: &mut Report, family: Family, param: usize, out: Option<PathBuf>) -> Result<()> {
    let (g, code, intervals) = match family {
        Family::C4free => {
            let (g, c) = c4_free_bipartite_family(param)?;
            (g, c, None)
        }
        Family::Vcd => {
            let (g, c) = vc_d_bipartite_family(param)?;
            (g, c, None)
        }
        Family::Path => {
            let (g, rep) = path_graph(param)?;
            let code = exact_min_id_code(&g, DEFAULT_EXACT_CAP)
                .or_else(|_| greedy_id_code(&g))?;
            (g, code, Some(rep))
        }
    };
    r.headline("vertices", g.n());
    r.put("edges", g.edge_count());
    r.put("code_size", code.len());
    r.put("code", format_ids(code.vertices.iter()));
    match out {
        Some(prefix) => {
            let graph_path = with_extension(&prefix, "graph");
            write_file(&graph_path, &write_graph(&g))?;
            write_file(
                &with_extension(&prefix, "code"),
                &format!("{}\n", format_ids(code.vertices.iter())),
            )?;
            r.put("graph_file", graph_path.display());
            if let Some(rep) = &intervals {
                let path = with_extension(&prefix, "intervals");
                write_file(&path, &write_intervals(rep))?;
                r.put("intervals_file", path.display());
            }
        }
        None => {
            r.blocks.push(write_graph(&g));
            if let Some(rep) = &intervals {
                r.blocks.push(write_intervals(rep));
            }
        }
    }
    Ok(())
}

fn build(sc: &SetCover1Instance, target: Target) -> Result<ReducedInstance> {
    match target {
        Target::Dc => build_dc_instance(sc),
        Target::Ic => build_ic_instance(sc),
    }
}

fn labels_text(red: &ReducedInstance) -> String {
    red.roles
        .iter()
        .enumerate()
        .map(|(v, role)| format!("{v} {role}\n"))
        .collect()
}

fn reduce(
    r: &mut Report,
    sc: &SetCover1Instance,
    target: Target,
    out: Option<PathBuf>,
) -> Result<()> {
    let red = match build(sc, target) {
        Ok(red) => red,
        Err(Error::Degenerate(why)) => {
            // Degenerate instances are solved directly instead.
            let cover = exact_min_set_cover(sc, SET_COVER_CAP)?;
            r.headline("degenerate", why);
            r.put("direct_cover", one_based(&cover));
            r.put("opt_setcover", cover.len());
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    r.headline("vertices", red.graph.n());
    r.put("edges", red.graph.edge_count());
    r.put("ell", red.ell);
    r.put("expected_vertices", red.expected_vertex_count());
    if let Ok(cover) = exact_min_set_cover(sc, SET_COVER_CAP) {
        let code = match target {
            Target::Dc => setcover_to_dc_solution(&red, &cover)?,
            Target::Ic => setcover_to_ic_solution(&red, &cover)?.vertices,
        };
        r.put("opt_setcover", cover.len());
        r.put("forward_code_size", code.len());
        r.put("forward_code", format_ids(code.iter()));
    }
    match out {
        Some(prefix) => {
            let graph_path = with_extension(&prefix, "graph");
            let labels_path = with_extension(&prefix, "labels");
            write_file(&graph_path, &write_graph(&red.graph))?;
            write_file(&labels_path, &labels_text(&red))?;
            r.put("graph_file", graph_path.display());
            r.put("labels_file", labels_path.display());
        }
        None => {
            r.blocks.push(write_graph(&red.graph));
            r.blocks.push(labels_text(&red));
        }
    }
    Ok(())
}
