//! The `bporder` command-line tool as a library: [`run`] turns parsed
//! arguments into a [`CommandResult`] without touching the process, so the
//! commands can be tested directly.

pub mod checks;
pub mod render;

use std::fmt::Write;
use std::path::{Path, PathBuf};

use bipartite_order::category::{compose_b, prop7_witness, subobject_poset};
use bipartite_order::incidence::{poset_moebius, IncidenceAlgebra};
use bipartite_order::order::{build_poset, check_guard, DEFAULT_GUARD};
use bipartite_order::{
    bn_cardinality, enumerate_bn, enumerate_hom_b, leq, BipartiteGraph, CategoryB, CategoryDelta, Error,
    IntegerPosetMoebius, Rational, TriangularCategory,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use checks::{CheckOptions, Suite, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bporder", version, about = "Indexed bipartite graphs, their partial order, and the categories B and Delta")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CategoryName {
    B,
    Delta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HasseFormat {
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List B_n, or Hom_B(k, n) with --k
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: ListFormat,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
    },
    /// Exact size of B_n or of a hom-set
    Count {
        #[arg(long, conflicts_with = "hom", required_unless_present = "hom")]
        n: Option<usize>,
        #[arg(long, num_args = 2, value_names = ["K", "N"])]
        hom: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "b")]
        category: CategoryName,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
    },
    /// Hasse diagram of (B_n, <=)
    Hasse {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: HasseFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
    },
    /// Compare two graphs given as JSON files
    Compare { u: PathBuf, v: PathBuf },
    /// Print V . U for U: m -> k and V: k -> n
    Compose { v: PathBuf, u: PathBuf },
    /// Print W with V . W = U when U <= V
    Witness { u: PathBuf, v: PathBuf },
    /// Run the verification suites
    Check {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_cod: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Möbius function of a category fragment and of the subobject poset
    Moebius {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "b")]
        category: CategoryName,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult { exit_code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        CommandResult { exit_code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

pub fn run(cli: Cli) -> CommandResult {
    match cli.command {
        Command::Enumerate { n, k, format, guard } => cmd_enumerate(n, k, format, guard),
        Command::Count { n, hom, category, guard } => cmd_count(n, hom.as_deref(), category, guard),
        Command::Hasse { n, format, out, guard } => cmd_hasse(n, format, out.as_deref(), guard),
        Command::Compare { u, v } => cmd_compare(&u, &v),
        Command::Compose { v, u } => cmd_compose(&v, &u),
        Command::Witness { u, v } => cmd_witness(&u, &v),
        Command::Check { suite, max_n, max_cod, seed } => cmd_check(suite, &CheckOptions { max_n, max_cod, seed }),
        Command::Moebius { n, category, guard } => cmd_moebius(n, category, guard),
    }
}

/// Parses `args` (including the program name) and runs the command. Usage
/// errors map to exit code 2; `--help` and `--version` to 0.
pub fn run_args<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                CommandResult { exit_code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                CommandResult::ok(text)
            }
        }
    }
}

pub fn cmd_enumerate(n: usize, k: Option<usize>, format: ListFormat, guard: u64) -> CommandResult {
    if let Err(e) = check_guard(n, guard) {
        return CommandResult::usage(e);
    }
    let graphs = match k {
        Some(k) => enumerate_hom_b(k, n),
        None => enumerate_bn(n),
    };
    let mut out = String::new();
    for g in &graphs {
        let line = match format {
            ListFormat::Text => render::graph_line(g),
            ListFormat::Json => render::graph_json(g),
        };
        out.push_str(&line);
        out.push('\n');
    }
    CommandResult::ok(out)
}

pub fn cmd_count(n: Option<usize>, hom: Option<&[usize]>, category: CategoryName, guard: u64) -> CommandResult {
    let (exact, listed) = match (hom, category) {
        (Some(&[k, n]), CategoryName::B) => count_hom(&CategoryB, k, n, guard),
        (Some(&[k, n]), CategoryName::Delta) => count_hom(&CategoryDelta, k, n, guard),
        (Some(_), _) => return CommandResult::usage("--hom takes exactly two values"),
        (None, _) => {
            let Some(n) = n else {
                return CommandResult::usage("one of --n or --hom is required");
            };
            match category {
                CategoryName::B => {
                    let exact = bn_cardinality(n);
                    let listed = (exact <= BigUint::from(guard)).then(|| enumerate_bn(n).len());
                    (exact, listed)
                }
                CategoryName::Delta => count_into(&CategoryDelta, n, guard),
            }
        }
    };
    let mut out = format!("{exact}\n");
    match listed {
        Some(listed) if BigUint::from(listed) == exact => out.push_str("enumeration-verified\n"),
        Some(listed) => {
            return CommandResult {
                exit_code: EXIT_CHECK_FAILED,
                stdout: out,
                stderr: format!("enumeration found {listed} elements\n"),
            }
        }
        None => {}
    }
    CommandResult::ok(out)
}

fn count_hom<C: TriangularCategory>(c: &C, k: usize, n: usize, guard: u64) -> (BigUint, Option<usize>) {
    let exact = c.hom_count(k, n);
    let listed = (exact <= BigUint::from(guard)).then(|| c.hom(k, n).len());
    (exact, listed)
}

fn count_into<C: TriangularCategory>(c: &C, n: usize, guard: u64) -> (BigUint, Option<usize>) {
    let exact: BigUint = (0..=n).map(|k| c.hom_count(k, n)).sum();
    let listed = (exact <= BigUint::from(guard)).then(|| c.morphisms_into(n).len());
    (exact, listed)
}

pub fn cmd_hasse(n: usize, format: HasseFormat, out: Option<&Path>, guard: u64) -> CommandResult {
    let poset = match build_poset(n, guard) {
        Ok(p) => p,
        Err(e) => return CommandResult::usage(e),
    };
    let hasse = poset.hasse();
    let text = match format {
        HasseFormat::Dot => render::hasse_dot(&hasse),
        HasseFormat::Json => render::hasse_json(n, &hasse),
    };
    match out {
        None => CommandResult::ok(text),
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => CommandResult {
                exit_code: EXIT_OK,
                stdout: String::new(),
                stderr: format!("wrote {}\n", path.display()),
            },
            Err(e) => CommandResult::usage(format!("cannot write {}: {e}", path.display())),
        },
    }
}

fn read_graph(path: &Path) -> Result<BipartiteGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_pair(first: &Path, second: &Path) -> Result<(BipartiteGraph, BipartiteGraph), CommandResult> {
    let a = read_graph(first).map_err(CommandResult::usage)?;
    let b = read_graph(second).map_err(CommandResult::usage)?;
    Ok((a, b))
}

pub fn cmd_compare(u: &Path, v: &Path) -> CommandResult {
    let (u, v) = match read_pair(u, v) {
        Ok(pair) => pair,
        Err(e) => return e,
    };
    let ordering = leq(&u, &v).and_then(|below| Ok((below, leq(&v, &u)?)));
    let text = match ordering {
        Ok((true, true)) => "U=V",
        Ok((true, false)) => "U<V",
        Ok((false, true)) => "U>V",
        Ok((false, false)) => "incomparable",
        Err(e) => return CommandResult::usage(e),
    };
    CommandResult::ok(format!("{text}\n"))
}

pub fn cmd_compose(v: &Path, u: &Path) -> CommandResult {
    let (v, u) = match read_pair(v, u) {
        Ok(pair) => pair,
        Err(e) => return e,
    };
    match compose_b(&v, &u) {
        Ok(vu) => CommandResult::ok(format!("{}\n", render::graph_json(&vu))),
        Err(e) => CommandResult::usage(e),
    }
}

pub fn cmd_witness(u: &Path, v: &Path) -> CommandResult {
    let (u, v) = match read_pair(u, v) {
        Ok(pair) => pair,
        Err(e) => return e,
    };
    match prop7_witness(&u, &v) {
        Ok(w) => CommandResult::ok(format!("{}\n", render::graph_json(&w))),
        Err(Error::NotComparable) => CommandResult::ok("incomparable\n".to_string()),
        Err(e) => CommandResult::usage(e),
    }
}

pub fn cmd_check(suite: Suite, options: &CheckOptions) -> CommandResult {
    let lines = checks::run_suite(suite, options);
    let mut out = String::new();
    for line in &lines {
        out.push_str(&line.render());
        out.push('\n');
    }
    let failures = lines.iter().filter(|l| l.failed()).count();
    if failures == 0 {
        out.push_str("all checks passed\n");
        CommandResult::ok(out)
    } else {
        writeln!(out, "{failures} check(s) failed").unwrap();
        CommandResult { exit_code: EXIT_CHECK_FAILED, stdout: out, stderr: String::new() }
    }
}

pub fn cmd_moebius(n: usize, category: CategoryName, guard: u64) -> CommandResult {
    let result = match category {
        CategoryName::B => check_guard(n, guard).and_then(|_| moebius_tables(CategoryB, n, |g| g.edge_list())),
        CategoryName::Delta => {
            let size = BigUint::from(1u32) << n;
            if size > BigUint::from(guard) {
                Err(Error::TooLarge { what: format!("S({n}) in Delta"), size: size.to_string(), limit: guard })
            } else {
                moebius_tables(CategoryDelta, n, |f| format!("{:?}", f.image()))
            }
        }
    };
    match result {
        Ok(text) => CommandResult::ok(text),
        Err(e) => CommandResult::usage(e),
    }
}

fn moebius_tables<C, F>(c: C, n: usize, describe: F) -> Result<String, Error>
where
    C: TriangularCategory,
    F: Fn(&C::Morphism) -> String,
{
    let name = c.name();
    let subobjects = subobject_poset(&c, n)?;
    let algebra = IncidenceAlgebra::new(c, n)?;
    let mu = algebra.moebius::<Rational>();
    let mut out = String::new();
    writeln!(out, "# category Möbius function mu = zeta^-1 on {name}, morphisms with codomain <= {n}").unwrap();
    out.push_str("dom\tcod\tmorphism\tvalue\n");
    for alpha in algebra.morphisms() {
        let value = mu.get(alpha)?;
        let (dom, cod) = (algebra.category().dom(alpha), algebra.category().cod(alpha));
        writeln!(out, "{dom}\t{cod}\t{}\t{}", describe(alpha), render::rational(value)).unwrap();
    }
    out.push('\n');
    writeln!(out, "# poset Möbius function of the subobject poset S({n}) in {name}").unwrap();
    out.push_str("lower\tupper\tvalue\n");
    let table: IntegerPosetMoebius = poset_moebius(&subobjects);
    for a in 0..subobjects.len() {
        for b in (0..subobjects.len()).filter(|&b| subobjects.leq(a, b)) {
            let (x, y) = (subobjects.element(a), subobjects.element(b));
            let label = |m: &C::Morphism| format!("{}:{}", algebra.category().dom(m), describe(m));
            writeln!(out, "{}\t{}\t{}", label(x), label(y), table.get(a, b)).unwrap();
        }
    }
    Ok(out)
}
