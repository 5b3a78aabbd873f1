//! The `lcomp` command line.
//!
//! Decision commands print `yes` or `no` and exit 0 or 1. Usage and data
//! errors print one `error:` line to the error stream and exit 2.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::circuit::{normalize, parse_netlist, InputAssignment};
use crate::gadgets::{is_circle_graph, GadgetKind};
use crate::graph::{
    orbit_with_threads, parse_graph, to_dot, write_graph, StarCompleteState, StarShape,
};
use crate::gss::{compile, parse_gss, write_gss};
use crate::lep::solve_lep_with_threads;
use crate::{Graph, VertexSequence};

#[derive(Debug, Parser)]
#[command(name = "lcomp", version, about = "Local complementation toolkit")]
struct Cli {
    /// Worker threads for `lep` and `orbit`.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Complete,
    Star,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply a complementation sequence to a graph.
    Apply {
        graph: PathBuf,
        /// Comma-separated vertices, or `@file` with a whitespace-separated list.
        #[arg(long)]
        seq: String,
        /// Print whether `u,v` is an edge of the result.
        #[arg(long, value_name = "U,V")]
        edge: Option<String>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Decide whether two graphs are locally equivalent.
    Lep {
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long)]
        witness: bool,
    },
    /// Lower a netlist and an input assignment to a graph-sequence structure.
    Compile {
        netlist: PathBuf,
        /// One bit per input, in declaration order.
        #[arg(long)]
        inputs: String,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Simulate a graph-sequence structure.
    Sim { gss: PathBuf },
    /// Enumerate the local-complementation orbit of a graph.
    Orbit {
        graph: PathBuf,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
    },
    /// Show a gadget, optionally running it on input bits.
    Gadget {
        name: GadgetKind,
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Find a chord diagram for a graph.
    Circle { graph: PathBuf },
    /// Track a sequence on a complete or star graph in constant space.
    StarTrack {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        center: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seq: String,
    },
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let text = e.to_string();
            let _ = writeln!(
                err,
                "{}",
                text.lines().next().unwrap_or("error: invalid usage")
            );
            return 2;
        }
    };
    let mut buf = String::new();
    let code = match dispatch(cli, &mut buf) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    };
    let _ = out.write_all(buf.as_bytes());
    code
}

type Outcome = Result<i32, String>;

fn decision(out: &mut String, yes: bool) -> i32 {
    out.push_str(if yes { "yes\n" } else { "no\n" });
    if yes {
        0
    } else {
        1
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    parse_graph(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_sequence(arg: &str) -> Result<VertexSequence, String> {
    match arg.strip_prefix('@') {
        Some(path) => read(Path::new(path))?.parse(),
        None => arg.parse(),
    }
}

fn parse_edge(arg: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = arg.split(',').map(str::trim).collect();
    match parts[..] {
        [u, v] => match (u.parse(), v.parse()) {
            (Ok(u), Ok(v)) => Ok((u, v)),
            _ => Err(format!("invalid edge {arg:?}")),
        },
        _ => Err(format!("edge must be `u,v`, got {arg:?}")),
    }
}

fn parse_bits(arg: &str) -> Result<InputAssignment, String> {
    InputAssignment::from_bits(arg).ok_or_else(|| format!("invalid bit string {arg:?}"))
}

fn dispatch(cli: Cli, out: &mut String) -> Outcome {
    let threads = cli.threads.max(1);
    match cli.command {
        Command::Apply {
            graph,
            seq,
            edge,
            dot,
            output,
        } => {
            let g = load_graph(&graph)?;
            let s = load_sequence(&seq)?;
            let h = g.apply_sequence(&s).map_err(|e| e.to_string())?;
            if let Some(path) = dot {
                write_file(&path, &to_dot(&h))?;
            }
            if let Some(path) = &output {
                write_file(path, &write_graph(&h))?;
            }
            match edge {
                Some(e) => {
                    let (u, v) = parse_edge(&e)?;
                    if u >= h.n() || v >= h.n() || u == v {
                        return Err(format!(
                            "invalid vertex pair ({u}, {v}) for {} vertices",
                            h.n()
                        ));
                    }
                    Ok(decision(out, h.has_edge(u, v)))
                }
                None => {
                    if output.is_none() {
                        out.push_str(&write_graph(&h));
                    }
                    Ok(0)
                }
            }
        }
        Command::Lep { g1, g2, witness } => {
            let (a, b) = (load_graph(&g1)?, load_graph(&g2)?);
            let verdict = solve_lep_with_threads(&a, &b, threads).map_err(|e| e.to_string())?;
            let code = decision(out, verdict.equivalent());
            if let (true, Some(w)) = (witness, &verdict.witness) {
                let _ = writeln!(out, "{}", w.to_bit_string());
            }
            Ok(code)
        }
        Command::Compile {
            netlist,
            inputs,
            output,
        } => {
            let c = parse_netlist(&read(&netlist)?)
                .map_err(|e| format!("{}: {e}", netlist.display()))?;
            let x = parse_bits(&inputs)?;
            let gss = compile(&normalize(&c), &x).map_err(|e| e.to_string())?;
            write_file(&output, &write_gss(&gss))?;
            Ok(0)
        }
        Command::Sim { gss } => {
            let g = parse_gss(&read(&gss)?).map_err(|e| format!("{}: {e}", gss.display()))?;
            let yes = g.simulate().map_err(|e| e.to_string())?;
            Ok(decision(out, yes))
        }
        Command::Orbit {
            graph,
            count: _,
            list,
            limit,
        } => {
            let g = load_graph(&graph)?;
            let orbit = orbit_with_threads(&g, limit, threads).map_err(|e| e.to_string())?;
            if list {
                for (i, h) in orbit.iter().enumerate() {
                    if i > 0 {
                        out.push('\n');
                    }
                    out.push_str(&write_graph(h));
                }
            } else {
                let _ = writeln!(out, "{}", orbit.len());
            }
            Ok(0)
        }
        Command::Gadget { name, input, dot } => {
            let gadget = name.gadget();
            let pairs = |ps: &[(usize, usize)]| {
                ps.iter()
                    .map(|(u, v)| format!("{u} {v}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let _ = writeln!(out, "gadget {name}");
            out.push_str(&write_graph(gadget.graph()));
            let _ = writeln!(
                out,
                "s {}",
                gadget
                    .sequence()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            let _ = writeln!(out, "in {}", pairs(gadget.inputs()));
            let _ = writeln!(out, "out {}", pairs(gadget.outputs()));
            let shown = match input {
                Some(bits) => {
                    let x = parse_bits(&bits)?;
                    let run = gadget.simulate(x.bits()).map_err(|e| e.to_string())?;
                    let result: String = run
                        .outputs
                        .iter()
                        .map(|&b| if b { '1' } else { '0' })
                        .collect();
                    let _ = writeln!(out, "result {result}");
                    run.result
                }
                None => gadget.graph().clone(),
            };
            if let Some(path) = dot {
                write_file(&path, &to_dot(&shown))?;
            }
            Ok(0)
        }
        Command::Circle { graph } => {
            let g = load_graph(&graph)?;
            match is_circle_graph(&g).map_err(|e| e.to_string())? {
                Some(word) => {
                    let _ = writeln!(out, "{word}");
                    Ok(0)
                }
                None => Ok(decision(out, false)),
            }
        }
        Command::StarTrack {
            kind,
            center,
            n,
            seq,
        } => {
            let start = match kind {
                Kind::Complete => StarCompleteState::complete(n),
                Kind::Star => StarCompleteState::star(n, center),
            }
            .map_err(|e| e.to_string())?;
            let s = load_sequence(&seq)?;
            let end = start.track(&s).map_err(|e| e.to_string())?;
            match end.shape() {
                StarShape::Complete => out.push_str("complete\n"),
                StarShape::Star { center } => {
                    let _ = writeln!(out, "star {center}");
                }
            }
            Ok(0)
        }
    }
}
