use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use overlap::oracle::{OracleError, DEFAULT_ORACLE_CAP};
use overlap::{gen, verify, Analysis, FamilyError, MaxAssignment, OverlapSubgraph, SetFamily};

mod bench;
mod render;

// the pipeline allocates many large short-lived arrays
#[global_allocator]
static ALLOC: mimalloc::MiMalloc = mimalloc::MiMalloc;

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Overlap classes of a set family.
#[derive(Parser)]
#[command(name = "overlap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class id of every set.
    Classes(Output),
    /// Max(X) of every set.
    Max(Output),
    /// Edges of a linear-size subgraph of the overlap graph.
    Subgraph(Output),
    /// A spanning tree of every overlap class.
    Forest(Output),
    /// Check the fast pipeline against the quadratic oracle.
    Verify(VerifyArgs),
    /// Generate a family.
    Gen(GenArgs),
    /// Time the pipeline on random families of doubling size, as CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct Output {
    #[arg(long, conflicts_with = "dot")]
    json: bool,
    #[arg(long)]
    dot: bool,
    /// Print sizes and stage times to stderr.
    #[arg(long)]
    stats: bool,
    /// Input family, `-` for stdin.
    file: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// Corrupt the run before checking it.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Star,
    Nested,
    Random,
    Blocks,
}

#[derive(Args)]
struct GenArgs {
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0.2)]
    density: f64,
    #[arg(long)]
    blocks: Option<usize>,
    #[arg(long, default_value_t = 8)]
    block_size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Target |F| values, comma separated. Defaults to 2^17 ..= 2^22.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Runs per size; the median is reported.
    #[arg(long, default_value_t = 3)]
    reps: usize,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        Failure { code: EXIT_INPUT, message: e.to_string() }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure { code: EXIT_CAP, message: e.to_string() }
    }
}

impl From<gen::GenError> for Failure {
    fn from(e: gen::GenError) -> Self {
        Failure { code: EXIT_INPUT, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_INPUT, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

fn read_family(path: &PathBuf) -> Result<SetFamily, Failure> {
    let family = if path.as_os_str() == "-" {
        SetFamily::read(io::stdin().lock())
    } else {
        let file = std::fs::File::open(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
        SetFamily::read(BufReader::new(file))
    };
    family.map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn oracle_cap() -> Result<usize, Failure> {
    match std::env::var("OVERLAP_ORACLE_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| input_error(format!("OVERLAP_ORACLE_CAP: bad value {v:?}"))),
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Classes(o) => analyze(&o, render::View::Classes, &mut out),
        Command::Max(o) => analyze(&o, render::View::Max, &mut out),
        Command::Subgraph(o) => analyze(&o, render::View::Subgraph, &mut out),
        Command::Forest(o) => analyze(&o, render::View::Forest, &mut out),
        Command::Verify(v) => {
            let f = read_family(&v.file)?;
            let cap = oracle_cap()?;
            let mut a = Analysis::run(&f);
            if v.inject_fault {
                inject_fault(&f, &mut a);
            }
            let report = verify::verify(&f, &a, cap)?;
            write!(out, "{report}")?;
            if report.passed() {
                return Ok(0);
            }
            writeln!(out, "counterexample:")?;
            for x in report.witnesses() {
                let line: Vec<&str> = f.set(x).iter().map(|&v| f.token(v)).collect();
                writeln!(out, "  X{}: {}", x + 1, line.join(" "))?;
            }
            Ok(EXIT_MISMATCH)
        }
        Command::Gen(g) => {
            let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| input_error(format!("gen: --{flag} is required")));
            let f = match g.kind {
                Kind::Star => gen::star(need(g.m, "m")?)?,
                Kind::Nested => gen::nested(need(g.k, "k")?)?,
                Kind::Random => gen::random(need(g.n, "n")?, need(g.m, "m")?, g.density, g.seed)?,
                Kind::Blocks => gen::blocks(need(g.blocks, "blocks")?, g.block_size, g.seed)?,
            };
            out.write_all(f.to_text().as_bytes())?;
            Ok(0)
        }
        Command::Bench(b) => {
            let sizes = if b.sizes.is_empty() { (17..=22).map(|e| 1usize << e).collect() } else { b.sizes };
            if sizes.iter().any(|&s| s < 16) || b.reps == 0 {
                return Err(input_error("bench: sizes must be at least 16 and reps at least 1"));
            }
            bench::run(&sizes, b.seed, b.reps, &mut out)?;
            Ok(0)
        }
    }
}

fn analyze(o: &Output, view: render::View, out: &mut impl Write) -> Result<u8, Failure> {
    let f = read_family(&o.file)?;
    let a = Analysis::run(&f);
    let text = if o.json {
        render::json(&a, view)
    } else if o.dot {
        render::dot(&a, view)
    } else {
        render::text(&a, view)
    };
    out.write_all(text.as_bytes())?;
    if o.stats {
        eprint!("{}", render::RunReport::new(&f, &a));
    }
    Ok(0)
}

/// Adds a non-overlapping pair to the subgraph, or makes a set its own Max
/// when every pair overlaps.
fn inject_fault(f: &SetFamily, a: &mut Analysis) {
    for x in 0..f.m() {
        for y in x + 1..f.m() {
            if !overlap::oracle::overlaps(f.set(x), f.set(y)) {
                let mut edges = a.subgraph.edges().to_vec();
                edges.push((x, y));
                a.subgraph = OverlapSubgraph::from_edges(f.m(), &edges);
                return;
            }
        }
    }
    let mut max = a.max.as_slice().to_vec();
    max[0] = Some(0);
    a.max = MaxAssignment::new(max);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
