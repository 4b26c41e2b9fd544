//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so tests can drive it with in-memory streams.
//!
//! Exit codes: 0 on success, 1 on usage or parse errors, 2 when an oracle
//! refuses a size beyond its resource guard.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bipartite_seq::{gale_ryser, is_bipartite_s_graphical};
use crate::error::Error;
use crate::graph::{DegreeSet, SignedDegrees};
use crate::io::{emit_dot, emit_graph, parse_graph, parse_int_list};
use crate::oracle::{
    enumerate_signed_bipartite, oracle_bipartite, oracle_s_graphical, realizable_degree_sets,
};
use crate::realize::realize_set;
use crate::sgraphical::{is_s_graphical_branching, is_s_graphical_deterministic};

#[derive(Debug, Parser)]
#[command(
    name = "sdset",
    version,
    about = "Signed degree sets and sequences of signed bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a connected signed bipartite graph with the given signed degree set
    Realize {
        #[arg(long, allow_hyphen_values = true, value_parser = int_list)]
        set: IntList,
        /// Write the edge list here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a DOT rendering here
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Decide whether a sequence is the signed degree sequence of a signed graph
    CheckSeq {
        #[arg(long, allow_hyphen_values = true, value_parser = int_list)]
        seq: IntList,
        #[arg(long, value_enum, default_value_t = SeqMethod::Branching)]
        method: SeqMethod,
    },
    /// Decide whether two sequences are the signed degree sequences of a signed bipartite graph
    CheckPair {
        #[arg(long, allow_hyphen_values = true, value_parser = int_list)]
        alpha: IntList,
        #[arg(long, allow_hyphen_values = true, value_parser = int_list)]
        beta: IntList,
        #[arg(long, value_enum, default_value_t = PairMethod::Reduction)]
        method: PairMethod,
    },
    /// Gale-Ryser test for unsigned bipartite degree sequences
    GaleRyser {
        #[arg(long, allow_hyphen_values = true, value_parser = int_list)]
        d: IntList,
        #[arg(long, allow_hyphen_values = true, value_parser = int_list)]
        e: IntList,
    },
    /// Print the signed degree set of a graph document (`-` reads stdin)
    DegreeSet {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exhaustively enumerate signed bipartite graphs with parts of size p and q
    Enumerate {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Print every signed degree set realized by a connected graph
        #[arg(long)]
        sets: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeqMethod {
    Branching,
    Deterministic,
    Oracle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PairMethod {
    Reduction,
    Oracle,
}

// clap treats a `Vec<T>` field as repeatable; wrapping keeps one value per flag
#[derive(Debug, Clone)]
struct IntList(Vec<i64>);

fn int_list(s: &str) -> Result<IntList, String> {
    parse_int_list(s).map(IntList)
}

enum Failure {
    Usage(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceGuard(_) => Failure::Guard(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Guard(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Realize {
            set,
            out: path,
            dot,
        } => {
            let set = DegreeSet::new(set.0)?;
            let report = realize_set(&set)?;
            let g = &report.graph;
            writeln!(out, "case: {}", report.case_used)?;
            writeln!(out, "|U|={} |V|={}", g.p(), g.q())?;
            writeln!(out, "degree set: {}", g.signed_degree_set()?)?;
            if let Some(path) = path {
                fs::write(&path, emit_graph(g))?;
            }
            if let Some(path) = dot {
                fs::write(&path, emit_dot(g))?;
            }
        }
        Command::CheckSeq { seq, method } => {
            let verdict = match method {
                SeqMethod::Branching => is_s_graphical_branching(&seq.0),
                SeqMethod::Deterministic => is_s_graphical_deterministic(&seq.0),
                SeqMethod::Oracle => oracle_s_graphical(&seq.0)?,
            };
            writeln!(out, "s-graphical: {verdict}")?;
        }
        Command::CheckPair {
            alpha,
            beta,
            method,
        } => {
            let verdict = match method {
                PairMethod::Reduction => is_bipartite_s_graphical(&alpha.0, &beta.0),
                PairMethod::Oracle => oracle_bipartite(&alpha.0, &beta.0)?,
            };
            writeln!(out, "bipartite s-graphical: {verdict}")?;
        }
        Command::GaleRyser { d, e } => {
            writeln!(out, "graphical: {}", gale_ryser(&d.0, &e.0)?)?;
        }
        Command::DegreeSet { input } => {
            let text = if input.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                s
            } else {
                fs::read_to_string(&input)?
            };
            let g = parse_graph(&text)?;
            writeln!(out, "degree set: {}", g.signed_degree_set()?)?;
            writeln!(out, "connected: {}", g.is_connected()?)?;
        }
        Command::Enumerate { p, q, sets } => {
            if sets {
                for set in realizable_degree_sets(p, q, true)? {
                    writeln!(out, "{}", DegreeSet::new(set)?)?;
                }
            } else {
                let (mut total, mut connected) = (0usize, 0usize);
                for g in enumerate_signed_bipartite(p, q)? {
                    total += 1;
                    if p + q > 0 && g.is_connected()? {
                        connected += 1;
                    }
                }
                writeln!(out, "graphs: {total}")?;
                writeln!(out, "connected: {connected}")?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sdset").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn realize_zero() {
        let (code, out, _) = call(&["realize", "--set", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("case: zero_only\n"));
        assert!(out.contains("|U|=2 |V|=2\n"));
    }

    #[test]
    fn negative_leading_lists() {
        let (code, out, _) = call(&["realize", "--set", "-3, 0,5"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("case: mixed_with_zero"));
        assert!(out.contains("degree set: {-3, 0, 5}"));
        let (code, out, _) = call(&["check-seq", "--seq", "1,-1"]);
        assert_eq!((code, out.as_str()), (0, "s-graphical: false\n"));
    }

    #[test]
    fn deciders() {
        assert_eq!(
            call(&["check-seq", "--seq", "1,1", "--method", "deterministic"]).1,
            "s-graphical: true\n"
        );
        assert_eq!(
            call(&["check-seq", "--seq", "2,2,2", "--method", "oracle"]).1,
            "s-graphical: true\n"
        );
        assert_eq!(
            call(&["gale-ryser", "--d", "2,1", "--e", "2,1"]).1,
            "graphical: true\n"
        );
        assert_eq!(
            call(&["check-pair", "--alpha", "1,-1", "--beta", "0"]).1,
            "bipartite s-graphical: true\n"
        );
        assert_eq!(
            call(&[
                "check-pair",
                "--alpha",
                "2",
                "--beta",
                "1",
                "--method",
                "oracle"
            ])
            .1,
            "bipartite s-graphical: false\n"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            call(&["check-seq", "--seq", "0,0,0,0,0,0,0", "--method", "oracle"]).0,
            2
        );
        assert_eq!(call(&["enumerate", "--p", "4", "--q", "4"]).0, 2);
        assert_eq!(
            call(&[
                "check-pair",
                "--alpha",
                "0,0,0,0,0",
                "--beta",
                "0,0,0",
                "--method",
                "oracle"
            ])
            .0,
            2
        );
        assert_eq!(call(&["realize", "--set", ""]).0, 1);
        assert_eq!(call(&["realize", "--set", "1,x"]).0, 1);
        assert_eq!(call(&["gale-ryser", "--d", "-1", "--e", "1"]).0, 1);
        assert_eq!(call(&["bogus"]).0, 1);
        assert_eq!(call(&["degree-set", "--in", "/nonexistent/file"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn enumerate_small() {
        let (code, out, _) = call(&["enumerate", "--p", "1", "--q", "1", "--sets"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{-1}\n{1}\n");
        let (_, out, _) = call(&["enumerate", "--p", "1", "--q", "2"]);
        assert_eq!(out, "graphs: 9\nconnected: 4\n");
    }
}
