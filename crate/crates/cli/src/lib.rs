//! `chordalkit` command-line front end.
//!
//! Exit codes: 0 success (or chordal), 1 not chordal, 2 input or usage error.
//! Reports go to standard output, diagnostics to standard error.

use std::io::{Read, Write};
use std::path::PathBuf;

use chordalkit::io::{self, Format};
use chordalkit::*;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_CHORDAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "chordalkit",
    version,
    about = "Chordal graph recognition with certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Edges,
    Dimacs,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edges => Format::EdgeList,
            FormatArg::Dimacs => Format::Dimacs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Input {
    /// Graph file; `-` reads standard input.
    path: String,
    /// Input format; by default `.col` / `.dimacs` files are DIMACS, others edge lists.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputMode,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide chordality and print the certificate.
    Check {
        #[command(flatten)]
        input: Input,
        /// Removal strategy: all, single, random or random:<seed>.
        #[arg(long, default_value = "all")]
        strategy: String,
        /// Seed for `--strategy random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a perfect elimination ordering.
    Peo {
        #[command(flatten)]
        input: Input,
    },
    /// Color with the fewest colors.
    Color {
        #[command(flatten)]
        input: Input,
    },
    /// Clique number and maximal cliques.
    Clique {
        #[command(flatten)]
        input: Input,
    },
    /// Acyclic orientations and dependent arcs.
    Orient {
        #[command(subcommand)]
        action: OrientAction,
    },
    /// Write a generated graph.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Family parameters, e.g. `4` for `cycle`, `3 2` for `kpartite`.
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "edges")]
        format: FormatArg,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum OrientAction {
    /// Dependent-arc counts over all acyclic orientations (|E| <= 20).
    Spectrum {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Orient by a vertex ordering and list the dependent arcs.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Every vertex label, once each, in order.
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        order: Vec<u64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    /// path <n>
    Path,
    /// cycle <n>
    Cycle,
    /// complete <n>
    Complete,
    /// star <n>
    Star,
    /// kpartite <r> <n>
    Kpartite,
    /// chordal <n> <clique-bound> (uses --seed)
    Chordal,
    /// random <n> <p> (uses --seed)
    Random,
}

const GEN_USAGE: &str = "usage: chordalkit gen <family> <params> [--seed S]\n  \
path <n> | cycle <n> | complete <n> | star <n> | kpartite <r> <n> | chordal <n> <clique-bound> | random <n> <p>";

/// A failure that maps onto an exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn print(&mut self, s: &str) {
        let _ = self.out.write_all(s.as_bytes());
    }

    fn json<T: Serialize>(&mut self, v: &T) {
        let _ = writeln!(self.out, "{}", serde_json::to_string(v).unwrap());
    }

    fn diag(&mut self, s: &str) {
        let _ = writeln!(self.err, "{s}");
    }
}

/// Runs one command line (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_INPUT
                }
            };
        }
    };
    let mut io = Io { out, err };
    let result = match cli.command {
        Command::Check {
            input,
            strategy,
            seed,
        } => cmd_check(&mut io, stdin, &input, &strategy, seed),
        Command::Peo { input } => cmd_peo(&mut io, stdin, &input),
        Command::Color { input } => cmd_color(&mut io, stdin, &input),
        Command::Clique { input } => cmd_clique(&mut io, stdin, &input),
        Command::Orient { action } => cmd_orient(&mut io, stdin, action),
        Command::Gen {
            family,
            params,
            seed,
            format,
            out,
        } => cmd_gen(&mut io, family, &params, seed, format.into(), out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            io.diag(&format!("error: {}", f.message));
            f.code
        }
    }
}

fn load(stdin: &mut dyn Read, input: &Input) -> std::result::Result<Graph, Failure> {
    let text = if input.path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&input.path)
            .map_err(|e| Failure::input(format!("{}: {e}", input.path)))?
    };
    let format = input
        .format
        .map(Format::from)
        .unwrap_or_else(|| Format::from_path(&input.path));
    io::parse(&text, format).map_err(|e| Failure::input(format!("{}: {e}", input.path)))
}

fn parse_strategy(s: &str, seed: u64) -> std::result::Result<RemovalStrategy, Failure> {
    if s == "random" {
        return Ok(RemovalStrategy::RandomSubset(seed));
    }
    s.parse().map_err(Failure::input)
}

fn cycle_of(g: &Graph, cert: &ChordalityCertificate) -> Option<ChordlessCycle> {
    match cert {
        ChordalityCertificate::NotChordal(c) => Some(c.clone()),
        ChordalityCertificate::Chordal(_) => {
            debug_assert!(is_chordal(g).is_chordal());
            None
        }
    }
}

fn cmd_check(
    io: &mut Io,
    stdin: &mut dyn Read,
    input: &Input,
    strategy: &str,
    seed: u64,
) -> CmdResult {
    let strategy = parse_strategy(strategy, seed)?;
    let g = load(stdin, input)?;
    let cert = is_chordal_with(&g, strategy);
    match input.output {
        OutputMode::Text => io.print(&recognition::render_certificate(&cert)),
        OutputMode::Json => io.json(&json!({
            "chordal": cert.is_chordal(),
            "certificate": cert,
        })),
    }
    Ok(if cert.is_chordal() {
        EXIT_OK
    } else {
        EXIT_NOT_CHORDAL
    })
}

/// The PEO read off the all-perfect sequence, or the chordless cycle.
fn peo_or_cycle(g: &Graph) -> std::result::Result<Vec<VertexId>, ChordlessCycle> {
    match is_chordal(g) {
        ChordalityCertificate::Chordal(seq) => {
            Ok(peo_from_sequence(g, &seq).expect("builder sequences verify"))
        }
        cert => Err(cycle_of(g, &cert).unwrap()),
    }
}

fn report_not_chordal(io: &mut Io, mode: OutputMode, cycle: &ChordlessCycle, why: &str) -> i32 {
    match mode {
        OutputMode::Text => io.print(&format!("chordal: false\n{}", cycle.to_text())),
        OutputMode::Json => io.json(&json!({
            "chordal": false,
            "certificate": ChordalityCertificate::NotChordal(cycle.clone()),
        })),
    }
    io.diag(why);
    EXIT_NOT_CHORDAL
}

fn labels(vs: &[VertexId]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_peo(io: &mut Io, stdin: &mut dyn Read, input: &Input) -> CmdResult {
    let g = load(stdin, input)?;
    match peo_or_cycle(&g) {
        Ok(peo) => {
            match input.output {
                OutputMode::Text => io.print(&format!("{}\n", labels(&peo))),
                OutputMode::Json => io.json(&json!({ "chordal": true, "peo": peo })),
            }
            Ok(EXIT_OK)
        }
        Err(cycle) => Ok(report_not_chordal(
            io,
            input.output,
            &cycle,
            "not chordal: no perfect elimination ordering exists",
        )),
    }
}

fn too_large_for_fallback(g: &Graph) -> String {
    format!(
        "not chordal and {} vertices exceed the exact-search limit of {}",
        g.vertex_count(),
        recognition::BRUTE_FORCE_LIMIT
    )
}

fn cmd_color(io: &mut Io, stdin: &mut dyn Read, input: &Input) -> CmdResult {
    let g = load(stdin, input)?;
    let (chordal, coloring, omega) = match peo_or_cycle(&g) {
        Ok(peo) => (
            true,
            chordal_coloring(&g, &peo).unwrap(),
            clique_number_chordal(&g, &peo).unwrap(),
        ),
        Err(cycle) => {
            if g.vertex_count() > recognition::BRUTE_FORCE_LIMIT {
                return Ok(report_not_chordal(
                    io,
                    input.output,
                    &cycle,
                    &too_large_for_fallback(&g),
                ));
            }
            (
                false,
                optimal_coloring_exact(&g).unwrap(),
                clique_number_exact(&g).unwrap(),
            )
        }
    };
    match input.output {
        OutputMode::Text => io.print(&format!(
            "chordal: {chordal}\ncolors: {}\nclique_number: {omega}\n{}",
            coloring.color_count(),
            coloring.to_text()
        )),
        OutputMode::Json => io.json(&json!({
            "chordal": chordal,
            "colors": coloring.color_count(),
            "clique_number": omega,
            "assignment": coloring.assignment().iter().map(|(v, c)| (v.0.to_string(), json!(*c))).collect::<serde_json::Map<_, _>>(),
        })),
    }
    Ok(EXIT_OK)
}

fn cmd_clique(io: &mut Io, stdin: &mut dyn Read, input: &Input) -> CmdResult {
    let g = load(stdin, input)?;
    let (chordal, cliques) = match peo_or_cycle(&g) {
        Ok(peo) => (true, maximal_cliques_chordal(&g, &peo).unwrap()),
        Err(cycle) => {
            if g.vertex_count() > recognition::BRUTE_FORCE_LIMIT {
                return Ok(report_not_chordal(
                    io,
                    input.output,
                    &cycle,
                    &too_large_for_fallback(&g),
                ));
            }
            (false, maximal_cliques_exact(&g).unwrap())
        }
    };
    let omega = cliques.iter().map(|c| c.len()).max().unwrap_or(0);
    match input.output {
        OutputMode::Text => {
            let mut text = format!(
                "chordal: {chordal}\nclique_number: {omega}\nmaximal_cliques: {}\n",
                cliques.len()
            );
            for c in &cliques {
                text.push_str(&labels(&c.iter().copied().collect::<Vec<_>>()));
                text.push('\n');
            }
            io.print(&text);
        }
        OutputMode::Json => io.json(&json!({
            "chordal": chordal,
            "clique_number": omega,
            "maximal_cliques": cliques,
        })),
    }
    Ok(EXIT_OK)
}

fn cmd_orient(io: &mut Io, stdin: &mut dyn Read, action: OrientAction) -> CmdResult {
    match action {
        OrientAction::Spectrum { input, threads } => {
            let g = load(stdin, &input)?;
            let report = orientation_spectrum_threads(&g, threads)
                .map_err(|e| Failure::input(e.to_string()))?;
            match input.output {
                OutputMode::Text => io.print(&format!("{}\n", report.to_text())),
                OutputMode::Json => io.json(&report),
            }
        }
        OrientAction::Analyze { input, order } => {
            let g = load(stdin, &input)?;
            let order: Vec<VertexId> = order.into_iter().map(VertexId).collect();
            let d = orient_by_ordering(&g, &order).map_err(|e| Failure::input(e.to_string()))?;
            let dependent = d
                .dependent_arcs()
                .expect("orderings give acyclic orientations");
            match input.output {
                OutputMode::Text => {
                    let mut text = format!(
                        "d: {}\norientation:\n{}dependent:\n",
                        dependent.len(),
                        d.to_text()
                    );
                    for a in &dependent {
                        text.push_str(&format!("{a}\n"));
                    }
                    io.print(&text);
                }
                OutputMode::Json => io.json(&json!({
                    "d": dependent.len(),
                    "arcs": d.arcs(),
                    "dependent": dependent,
                })),
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_gen(
    io: &mut Io,
    family: Family,
    params: &[String],
    seed: u64,
    format: Format,
    out: Option<PathBuf>,
) -> CmdResult {
    let usage = |msg: String| Failure::input(format!("{msg}\n{GEN_USAGE}"));
    let want = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(usage(
                format!("{family:?} takes {k} parameter(s), got {}", params.len()).to_lowercase(),
            ))
        }
    };
    let int = |i: usize| {
        params[i].parse::<usize>().map_err(|_| {
            usage(format!(
                "expected a non-negative integer, got {:?}",
                params[i]
            ))
        })
    };
    let g = match family {
        Family::Path | Family::Cycle | Family::Complete | Family::Star => {
            want(1)?;
            let n = int(0)?;
            match family {
                Family::Path => gen_path(n),
                Family::Cycle => gen_cycle(n),
                Family::Complete => gen_complete(n),
                _ => gen_star(n),
            }
        }
        Family::Kpartite => {
            want(2)?;
            gen_complete_multipartite(int(0)?, int(1)?)
        }
        Family::Chordal => {
            want(2)?;
            gen_random_chordal(int(0)?, int(1)?, seed)
        }
        Family::Random => {
            want(2)?;
            let p = params[1]
                .parse::<f64>()
                .map_err(|_| usage(format!("expected a probability, got {:?}", params[1])))?;
            gen_random_graph(int(0)?, p, seed)
        }
    }
    .map_err(|e| usage(e.to_string()))?;
    let text = io::write(&g, format);
    match out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
        None => io.print(&text),
    }
    Ok(EXIT_OK)
}
