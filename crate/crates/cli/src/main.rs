use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use shiftlab::combstruct::{SimplicialComplex, UniformHypergraph};
use shiftlab::field::{make_field_context, parse_epsilon, Backend, Characteristic, FieldContext};
use shiftlab::reproduce::{reproduce, ReproOptions, TARGETS};
use shiftlab::shiftcore::{delta_shift, partial_shift, GenericMatrix};
use shiftlab::shiftgraph::{build_psg_capped, build_psg_from, ShiftGraph, DEFAULT_NODE_CAP};
use shiftlab::symgroup::parse_permutation;
use shiftlab::topology::{
    betti_numbers, conjecture_scan, random_instances, shift_complex, shift_complex_by, ScanInstance, ScanReport,
};
use shiftlab::Error;

#[derive(Parser)]
#[command(name = "shiftlab", version, about = "Partial exterior shifting of hypergraphs and simplicial complexes")]
struct Cli {
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u64,

    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Randomized)]
    backend: BackendArg,

    /// Seed for the randomized backend; SHIFTLAB_SEED takes precedence when set.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Failure probability bound, as `a/b` or `2^-e`.
    #[arg(long, global = true, default_value = "2^-30")]
    epsilon: String,

    /// In characteristic 0, eliminate modulo two large primes before exact arithmetic.
    #[arg(long, global = true)]
    dual_prime: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    parallelism: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Symbolic,
    Randomized,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Shift a hypergraph or complex by a permutation's cell representative or a given matrix.
    Shift {
        #[arg(long, short = 'i')]
        input: Option<PathBuf>,
        /// `e`, `w0`, `cN`, a word such as `w0 s1`, or one-line notation such as `2,3,1`.
        #[arg(long, conflicts_with = "matrix")]
        perm: Option<String>,
        /// `vandermondeN`, `X` (generic), or a JSON file holding an integer matrix.
        #[arg(long)]
        matrix: Option<String>,
        /// Read text input as a list of facets rather than hypergraph edges.
        #[arg(long)]
        complex: bool,
        #[arg(value_name = "FILE")]
        file: Option<PathBuf>,
    },
    /// Build the partial shift graph PSG(n,k,m), or the part reachable from a hypergraph.
    Psg {
        #[arg(short = 'n', required_unless_present = "from")]
        n: Option<usize>,
        #[arg(short = 'k', required_unless_present = "from")]
        k: Option<usize>,
        #[arg(short = 'm', required_unless_present = "from")]
        m: Option<usize>,
        /// Hypergraph file to start from; a complex contributes its facets of top size.
        #[arg(long, conflicts_with_all = ["n", "k", "m"])]
        from: Option<PathBuf>,
        /// Contract along full shifts.
        #[arg(long)]
        contract: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        cap: u64,
    },
    /// Betti numbers of a complex.
    Betti {
        #[arg(long, short = 'i')]
        input: Option<PathBuf>,
        #[arg(value_name = "FILE")]
        file: Option<PathBuf>,
    },
    /// Scan for Betti decreases under partial shifts and for cycles in contracted graphs.
    Scan {
        /// Complex files to scan.
        #[arg(value_name = "FILE")]
        files: Vec<PathBuf>,
        /// Number of random complexes to add.
        #[arg(long, default_value_t = 0)]
        random: usize,
        /// Vertex count of the random complexes.
        #[arg(long, default_value_t = 5)]
        vertices: usize,
        /// Contracted PSG(n,k,m) to test for acyclicity, as `n,k,m`; repeatable.
        #[arg(long)]
        psg: Vec<String>,
    },
    /// Recompute a bundled example and compare it with its golden data.
    Reproduce {
        /// Target name, `all`, or `list`.
        name: String,
    },
}

enum Failure {
    Mismatch(String),
    Parse(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::IndexOutOfRange { .. } => Failure::Parse(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

enum Input {
    Hypergraph(UniformHypergraph),
    Complex(SimplicialComplex),
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn input_path(input: Option<PathBuf>, file: Option<PathBuf>) -> CliResult<PathBuf> {
    input.or(file).ok_or_else(|| Failure::Parse("no input file given".into()))
}

fn load(path: &Path, complex: bool) -> CliResult<Input> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure::Parse(e.to_string()))?;
        if value.get("facets").is_some() {
            return Ok(Input::Complex(SimplicialComplex::from_json(&text)?));
        }
        return Ok(Input::Hypergraph(UniformHypergraph::from_json(&text)?));
    }
    if complex {
        Ok(Input::Complex(SimplicialComplex::from_text(&text, None)?))
    } else {
        Ok(Input::Hypergraph(UniformHypergraph::from_text(&text, None)?))
    }
}

fn load_complex(path: &Path) -> CliResult<SimplicialComplex> {
    match load(path, true)? {
        Input::Complex(k) => Ok(k),
        Input::Hypergraph(_) => Err(Failure::Parse(format!("{}: expected a complex", path.display()))),
    }
}

fn context(cli: &Cli) -> CliResult<FieldContext> {
    let seed = match std::env::var("SHIFTLAB_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Parse(format!("bad SHIFTLAB_SEED {s:?}")))?,
        Err(_) => cli.seed,
    };
    let backend = match cli.backend {
        BackendArg::Symbolic => Backend::Symbolic,
        BackendArg::Randomized => Backend::Randomized,
    };
    let ctx = make_field_context(Characteristic::new(cli.characteristic)?, backend, seed, parse_epsilon(&cli.epsilon)?)?;
    Ok(ctx.with_dual_prime(cli.dual_prime))
}

fn matrix(spec: &str, n: usize, ch: u64) -> CliResult<GenericMatrix> {
    if spec == "X" {
        return Ok(GenericMatrix::build_x(n, ch));
    }
    if let Some(size) = spec.strip_prefix("vandermonde") {
        if !size.is_empty() && size.parse::<usize>().ok() != Some(n) {
            return Err(Failure::Parse(format!("{spec} does not match the {n} vertices of the input")));
        }
        return Ok(GenericMatrix::build_vandermonde(n, ch));
    }
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(&read(Path::new(spec))?).map_err(|e| Failure::Parse(format!("{spec}: {e}")))?;
    if rows.len() != n {
        return Err(Failure::Parse(format!("{spec}: expected a {n}x{n} matrix")));
    }
    Ok(GenericMatrix::from_integers(ch, &rows)?)
}

fn no_dot(format: Format) -> CliResult<()> {
    if format == Format::Dot {
        return Err(Failure::Parse("dot output is only available for psg".into()));
    }
    Ok(())
}

fn cmd_shift(
    cli: &Cli,
    input: Input,
    perm: Option<&str>,
    matrix_spec: Option<&str>,
) -> CliResult<String> {
    no_dot(cli.format)?;
    let ctx = context(cli)?;
    let ch = cli.characteristic;
    let n = match &input {
        Input::Hypergraph(s) => s.n(),
        Input::Complex(k) => k.n(),
    };
    let json = cli.format == Format::Json;
    let out = match (input, matrix_spec) {
        (Input::Hypergraph(s), Some(spec)) => {
            let t = delta_shift(&matrix(spec, n, ch)?, &s, &ctx)?;
            if json { t.to_json() } else { t.to_text() }
        }
        (Input::Complex(k), Some(spec)) => {
            let t = shift_complex_by(&k, &matrix(spec, n, ch)?, &ctx)?;
            if json { t.to_json() } else { t.to_text() }
        }
        (input, None) => {
            let w = parse_permutation(n, perm.unwrap_or("w0"))?;
            match input {
                Input::Hypergraph(s) => {
                    let t = partial_shift(&s, &w, &ctx)?;
                    if json { t.to_json() } else { t.to_text() }
                }
                Input::Complex(k) => {
                    let t = shift_complex(&k, &w, &ctx)?;
                    if json { t.to_json() } else { t.to_text() }
                }
            }
        }
    };
    Ok(out)
}

fn graph_text(g: &ShiftGraph) -> String {
    let mut out = format!(
        "nodes {}\nedges {}\nwitnesses {}\nacyclic {}\n",
        g.nodes().len(),
        g.edges().len(),
        g.num_witnesses(),
        g.is_acyclic().is_acyclic()
    );
    for s in g.sinks() {
        out += &format!("sink {s}\n");
    }
    out
}

fn cmd_psg(
    cli: &Cli,
    size: Option<(usize, usize, usize)>,
    from: Option<&Path>,
    contract: bool,
    cap: u64,
) -> CliResult<String> {
    let ctx = context(cli)?;
    let g = match (size, from) {
        (Some((n, k, m)), _) => build_psg_capped(n, k, m, &ctx, cap)?,
        (None, Some(path)) => {
            let start = match load(path, false)? {
                Input::Hypergraph(s) => s,
                Input::Complex(k) => {
                    let top = k.dim().map_or(0, |d| d as usize + 1);
                    k.layer(top.saturating_sub(1))
                }
            };
            build_psg_from(&start, &ctx)?
        }
        (None, None) => return Err(Failure::Parse("give -n, -k, -m or --from".into())),
    };
    if !contract {
        return Ok(match cli.format {
            Format::Json => g.to_json(),
            Format::Dot => g.to_dot(),
            Format::Text => graph_text(&g),
        });
    }
    let c = g.contract(&ctx)?;
    Ok(match cli.format {
        Format::Json => c.to_json(),
        Format::Dot => c.to_dot(),
        Format::Text => {
            let mut out = format!("nodes {}\nedges {}\n", c.nodes.len(), c.edges.len());
            for &(a, b) in &c.edges {
                out += &format!("{} -> {}\n", c.nodes[a], c.nodes[b]);
            }
            out
        }
    })
}

fn cmd_betti(cli: &Cli, path: &Path) -> CliResult<String> {
    no_dot(cli.format)?;
    let ch = Characteristic::new(cli.characteristic)?;
    let b = betti_numbers(&load_complex(path)?, ch);
    Ok(match cli.format {
        Format::Text => {
            format!("({})\n", b.betti.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        }
        _ => serde_json::to_string(&b).expect("betti vector serializes"),
    })
}

fn parse_triple(text: &str) -> CliResult<(usize, usize, usize)> {
    let parts: Vec<usize> = text
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Failure::Parse(format!("bad n,k,m triple {text:?}")))?;
    match parts[..] {
        [n, k, m] => Ok((n, k, m)),
        _ => Err(Failure::Parse(format!("bad n,k,m triple {text:?}"))),
    }
}

fn scan_text(report: &ScanReport) -> String {
    let mut out = String::new();
    for c in &report.complexes {
        out += &format!(
            "{}: betti {:?}, {} of {} permutations preserve it, {} certified\n",
            c.instance,
            c.betti.betti,
            c.preserving.len(),
            c.permutations,
            c.certified
        );
    }
    for v in &report.violations {
        out += &format!("VIOLATION {} by {}: {:?} -> {:?}\n", v.instance, v.permutation, v.before.betti, v.after.betti);
    }
    for a in &report.acyclicity {
        out += &format!("{}: {} nodes, {} edges, acyclic {}\n", a.instance, a.nodes, a.edges, a.acyclic);
    }
    out
}

fn cmd_scan(cli: &Cli, files: &[PathBuf], random: usize, vertices: usize, psg: &[String]) -> CliResult<String> {
    no_dot(cli.format)?;
    let ctx = context(cli)?;
    let mut instances = Vec::new();
    for f in files {
        instances.push(ScanInstance::Complex { name: f.display().to_string(), complex: load_complex(f)? });
    }
    instances.extend(random_instances(vertices, random, ctx.seed()));
    for p in psg {
        let (n, k, m) = parse_triple(p)?;
        instances.push(ScanInstance::Psg { n, k, m });
    }
    let report = conjecture_scan(&instances, &ctx)?;
    Ok(match cli.format {
        Format::Text => scan_text(&report),
        _ => serde_json::to_string_pretty(&report).expect("report serializes"),
    })
}

fn cmd_reproduce(cli: &Cli, name: &str) -> CliResult<String> {
    if name == "list" {
        return Ok(TARGETS.join("\n") + "\n");
    }
    let ctx = context(cli)?;
    let opts = ReproOptions { backend: ctx.backend(), seed: ctx.seed(), dual_prime: ctx.dual_prime() };
    let names: Vec<&str> = if name == "all" { TARGETS.to_vec() } else { vec![name] };
    let mut reports = Vec::new();
    for n in names {
        reports.push(reproduce(n, &opts)?);
    }
    let out = match cli.format {
        Format::Json => serde_json::to_string_pretty(&reports).expect("reports serialize"),
        _ => reports.iter().map(|r| r.to_text()).collect(),
    };
    if reports.iter().all(|r| r.passed()) {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}

fn run(cli: &Cli) -> CliResult<String> {
    if cli.parallelism > 0 {
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.parallelism).build_global();
    }
    match &cli.command {
        Command::Shift { input, perm, matrix, complex, file } => {
            let path = input_path(input.clone(), file.clone())?;
            cmd_shift(cli, load(&path, *complex)?, perm.as_deref(), matrix.as_deref())
        }
        Command::Psg { n, k, m, from, contract, cap } => {
            let size = match (n, k, m) {
                (Some(n), Some(k), Some(m)) => Some((*n, *k, *m)),
                _ => None,
            };
            cmd_psg(cli, size, from.as_deref(), *contract, *cap)
        }
        Command::Betti { input, file } => cmd_betti(cli, &input_path(input.clone(), file.clone())?),
        Command::Scan { files, random, vertices, psg } => cmd_scan(cli, files, *random, *vertices, psg),
        Command::Reproduce { name } => cmd_reproduce(cli, name),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
