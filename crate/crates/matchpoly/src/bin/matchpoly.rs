//! Batch front end: parse a graph or matrix file, run one computation,
//! print the result. Every invocation is pure: the same input and flags
//! produce byte-identical output. Exit codes: 0 success, 1 input error,
//! 2 resource limit, 3 internal invariant violation.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use matchpoly::charpoly::{build_matrix, charpoly, HermitianWeightedMatrix};
use matchpoly::check::{run_identity_suite, CheckStatus};
use matchpoly::decomp::{
    decompose, deficiency, parter_wiener_find, GEDecomposition, ParterOutcome,
};
use matchpoly::demo::demo_graph;
use matchpoly::error::{Error, Result};
use matchpoly::graph::{EnumerationCaps, WeightedGraph};
use matchpoly::io;
use matchpoly::matching::{eta_by_recurrence, mu_by_recurrence};
use matchpoly::pathtree::{path_tree, DEFAULT_PATH_TREE_CAP};
use matchpoly::poly::RationalPolynomial;
use matchpoly::rational::{parse_rational, Rational};
use matchpoly::roots::{rational_roots, ThetaSpec};

#[derive(Parser)]
#[command(
    name = "matchpoly",
    version,
    about = "Exact matching and characteristic polynomials, path-trees, and root-multiplicity decompositions of weighted graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Weighted matching polynomial (eta, or mu with --which mu)
    Poly(PolyArgs),
    /// Characteristic polynomial of the Hermitian adjacency matrix
    Charpoly(CommonArgs),
    /// Vertex classification and decomposition at a root theta
    Decompose(DecomposeArgs),
    /// Path-tree of the graph from a root vertex
    Pathtree(PathtreeArgs),
    /// Vertices missed by every maximum matching
    Deficiency(CommonArgs),
    /// Find a multiplicity-raising vertex of a Hermitian tree matrix
    Parter(ParterArgs),
    /// Run the built-in identity suite against the input
    Check(CommonArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct CommonArgs {
    /// Input file (graph JSON; the parter command reads a matrix)
    file: Option<PathBuf>,

    /// Use a built-in example graph: k2, triangle, c4-ring, c4-crossed, bowtie
    #[arg(long, value_name = "NAME", conflicts_with = "file")]
    demo: Option<String>,

    /// Write the result to a file instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    /// Enumeration budget: matchings, paths, cycle unions, path-tree nodes
    #[arg(long, value_name = "N")]
    cap: Option<usize>,

    /// Worker threads for parallel determinant evaluation
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
}

#[derive(Args)]
struct PolyArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Which polynomial: eta (vertex weights on) or mu (vertex weights off)
    #[arg(long, value_enum, default_value = "eta")]
    which: Which,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Eta,
    Mu,
}

#[derive(Args)]
#[command(group(ArgGroup::new("theta_mode").required(true).args(["theta", "theta_minpoly", "all_rational_roots"])))]
struct DecomposeArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Rational theta as p/q
    #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
    theta: Option<String>,

    /// Minimal polynomial of an irrational theta, coefficients c0,c1,...,ck
    #[arg(long, value_name = "C0,C1,...", requires = "interval", allow_hyphen_values = true)]
    theta_minpoly: Option<String>,

    /// Isolating interval a,b for --theta-minpoly
    #[arg(long, value_name = "A,B", allow_hyphen_values = true)]
    interval: Option<String>,

    /// Decompose at every rational root of eta
    #[arg(long)]
    all_rational_roots: bool,
}

#[derive(Args)]
struct PathtreeArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Root vertex id (defaults to the first vertex)
    #[arg(long, value_name = "VERTEX-ID")]
    root: Option<String>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("theta_mode").required(true).args(["theta", "theta_minpoly"])))]
struct ParterArgs {
    /// Hermitian matrix file
    #[arg(long, value_name = "PATH", conflicts_with = "file")]
    matrix: Option<PathBuf>,

    /// Matrix file as a positional argument
    file: Option<PathBuf>,

    /// Use the adjacency matrix of a built-in example graph
    #[arg(long, value_name = "NAME", conflicts_with_all = ["file", "matrix"])]
    demo: Option<String>,

    /// Rational theta as p/q
    #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
    theta: Option<String>,

    /// Minimal polynomial of an irrational theta, coefficients c0,c1,...,ck
    #[arg(long, value_name = "C0,C1,...", requires = "interval", allow_hyphen_values = true)]
    theta_minpoly: Option<String>,

    /// Isolating interval a,b for --theta-minpoly
    #[arg(long, value_name = "A,B", allow_hyphen_values = true)]
    interval: Option<String>,

    /// Write the result to a file instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    /// Worker threads for parallel determinant evaluation
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("matchpoly: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Cmd::Poly(args) => cmd_poly(args),
        Cmd::Charpoly(args) => cmd_charpoly(args),
        Cmd::Decompose(args) => cmd_decompose(args),
        Cmd::Pathtree(args) => cmd_pathtree(args),
        Cmd::Deficiency(args) => cmd_deficiency(args),
        Cmd::Parter(args) => cmd_parter(args),
        Cmd::Check(args) => cmd_check(args),
    }
}

fn configure_threads(threads: Option<usize>) -> Result<()> {
    if let Some(n) = threads {
        if n == 0 {
            return Err(Error::input("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::input(format!("--threads: {e}")))?;
    }
    Ok(())
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("reading {}: {e}", path.display())))
}

fn load_graph(common: &CommonArgs) -> Result<WeightedGraph> {
    match (&common.file, &common.demo) {
        (Some(path), None) => io::parse_graph(&read_file(path)?),
        (None, Some(name)) => demo_graph(name),
        (None, None) => Err(Error::input("provide an input file or --demo <name>")),
        (Some(_), Some(_)) => unreachable!("clap rejects file together with --demo"),
    }
}

fn caps_from(common: &CommonArgs) -> EnumerationCaps {
    let mut caps = EnumerationCaps::default();
    if let Some(n) = common.cap {
        caps.max_items = n;
    }
    caps
}

fn path_cap_from(common: &CommonArgs) -> usize {
    common.cap.unwrap_or(DEFAULT_PATH_TREE_CAP)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<ExitCode> {
    emit_with_code(out, content, ExitCode::SUCCESS)
}

fn emit_with_code(out: &Option<PathBuf>, content: &str, code: ExitCode) -> Result<ExitCode> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::input(format!("writing {}: {e}", path.display())))?,
        None => print!("{content}"),
    }
    Ok(code)
}

fn render_poly(format: Format, name: &str, p: &RationalPolynomial) -> String {
    match format {
        Format::Json => io::polynomial_json(p),
        Format::Text => format!("{name}(G) = {p}\n"),
    }
}

fn cmd_poly(args: PolyArgs) -> Result<ExitCode> {
    configure_threads(args.common.threads)?;
    let g = load_graph(&args.common)?;
    let (name, p) = match args.which {
        Which::Eta => ("eta", eta_by_recurrence(&g)?),
        Which::Mu => ("mu", mu_by_recurrence(&g)?),
    };
    emit(&args.common.out, &render_poly(args.common.format, name, &p))
}

fn cmd_charpoly(args: CommonArgs) -> Result<ExitCode> {
    configure_threads(args.threads)?;
    let g = load_graph(&args)?;
    let p = charpoly(&build_matrix(&g))?;
    emit(&args.out, &render_poly(args.format, "phi", &p))
}

fn theta_from_flags(
    theta: &Option<String>,
    minpoly: &Option<String>,
    interval: &Option<String>,
) -> Result<ThetaSpec> {
    if let Some(t) = theta {
        return Ok(ThetaSpec::Rational(parse_rational(t)?));
    }
    let mp = minpoly
        .as_ref()
        .ok_or_else(|| Error::input("supply --theta or --theta-minpoly with --interval"))?;
    let iv = interval
        .as_ref()
        .ok_or_else(|| Error::input("--theta-minpoly requires --interval a,b"))?;
    let coeffs: Vec<Rational> = mp
        .split(',')
        .map(|part| parse_rational(part.trim()))
        .collect::<Result<_>>()?;
    let poly = RationalPolynomial::from_coeffs(coeffs);
    let bounds: Vec<&str> = iv.split(',').collect();
    if bounds.len() != 2 {
        return Err(Error::input("--interval takes exactly two endpoints a,b"));
    }
    ThetaSpec::algebraic(
        poly,
        parse_rational(bounds[0].trim())?,
        parse_rational(bounds[1].trim())?,
    )
}

fn decomposition_text(d: &GEDecomposition) -> String {
    let join = |vs: &[usize]| {
        vs.iter()
            .map(|&v| d.labels()[v].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut s = String::new();
    let _ = writeln!(s, "theta: {}", d.theta());
    let _ = writeln!(s, "multiplicity: {}", d.mult());
    let _ = writeln!(s, "D: {}", join(d.d_set()));
    let _ = writeln!(s, "A: {}", join(d.a_set()));
    let _ = writeln!(s, "P: {}", join(d.p_set()));
    let _ = writeln!(s, "N: {}", join(d.n_set()));
    let comps = d
        .critical_components()
        .iter()
        .map(|c| format!("{{{}}}", join(c)))
        .collect::<Vec<_>>()
        .join(" ");
    let _ = writeln!(s, "critical components: {comps}");
    s
}

fn cmd_decompose(args: DecomposeArgs) -> Result<ExitCode> {
    configure_threads(args.common.threads)?;
    let g = load_graph(&args.common)?;
    if args.all_rational_roots {
        let eta = eta_by_recurrence(&g)?;
        let roots = rational_roots(&eta)?;
        let mut results = Vec::new();
        for (root, _) in roots {
            results.push(decompose(&g, &ThetaSpec::Rational(root))?);
        }
        let content = match args.common.format {
            Format::Json => io::decomposition_list_json(&results),
            Format::Text if results.is_empty() => "no rational roots\n".to_string(),
            Format::Text => results
                .iter()
                .map(decomposition_text)
                .collect::<Vec<_>>()
                .join("\n"),
        };
        return emit(&args.common.out, &content);
    }
    let theta = theta_from_flags(&args.theta, &args.theta_minpoly, &args.interval)?;
    let d = decompose(&g, &theta)?;
    let content = match args.common.format {
        Format::Json => io::decomposition_json(&d),
        Format::Text => decomposition_text(&d),
    };
    emit(&args.common.out, &content)
}

fn cmd_pathtree(args: PathtreeArgs) -> Result<ExitCode> {
    configure_threads(args.common.threads)?;
    let g = load_graph(&args.common)?;
    let root = match &args.root {
        Some(id) => g
            .index_of_label(id)
            .ok_or_else(|| Error::input(format!("no vertex with id {id:?}")))?,
        None => {
            if g.n() == 0 {
                return Err(Error::input("the empty graph has no path-tree root"));
            }
            0
        }
    };
    let pt = path_tree(&g, root, path_cap_from(&args.common))?;
    let content = match args.common.format {
        Format::Json => io::path_tree_json(&g, &pt),
        Format::Text => {
            let tree = pt.tree();
            let mut s = format!(
                "path-tree rooted at {:?}: {} nodes\n",
                g.label(root),
                pt.node_count()
            );
            for (node, path) in pt.node_paths().iter().enumerate() {
                let walk = path.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ");
                let _ = writeln!(s, "{}: {walk}", tree.label(node));
            }
            s
        }
    };
    emit(&args.common.out, &content)
}

fn cmd_deficiency(args: CommonArgs) -> Result<ExitCode> {
    configure_threads(args.threads)?;
    let g = load_graph(&args)?;
    let d = deficiency(&g)?;
    let content = match args.format {
        Format::Json => format!("{}\n", serde_json::json!({ "deficiency": d })),
        Format::Text => format!("deficiency = {d}\n"),
    };
    emit(&args.out, &content)
}

fn load_matrix(args: &ParterArgs) -> Result<HermitianWeightedMatrix> {
    match (&args.matrix, &args.file, &args.demo) {
        (Some(path), None, None) | (None, Some(path), None) => {
            io::parse_matrix(&read_file(path)?)
        }
        (None, None, Some(name)) => Ok(build_matrix(&demo_graph(name)?)),
        (None, None, None) => Err(Error::input(
            "provide a matrix file (positional or --matrix) or --demo <name>",
        )),
        _ => unreachable!("clap rejects conflicting inputs"),
    }
}

fn cmd_parter(args: ParterArgs) -> Result<ExitCode> {
    configure_threads(args.threads)?;
    let m = load_matrix(&args)?;
    let theta = theta_from_flags(&args.theta, &args.theta_minpoly, &args.interval)?;
    let outcome = parter_wiener_find(&m, &theta)?;
    let content = match args.format {
        Format::Json => io::parter_json(&outcome),
        Format::Text => match &outcome {
            ParterOutcome::Found(r) => {
                let mut s = format!(
                    "vertex {} (degree {}): multiplicity {} -> {}\n",
                    r.vertex, r.degree, r.mult_before, r.mult_after
                );
                for b in &r.branches {
                    let _ = writeln!(
                        s,
                        "branch {{{}}}: multiplicity {}",
                        b.vertices.join(" "),
                        b.mult
                    );
                }
                s
            }
            ParterOutcome::HypothesisNotMet { mult, reason } => {
                format!("hypothesis not met (multiplicity {mult}): {reason}\n")
            }
        },
    };
    emit(&args.out, &content)
}

#[derive(Serialize)]
struct CheckDto {
    name: &'static str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

fn cmd_check(args: CommonArgs) -> Result<ExitCode> {
    configure_threads(args.threads)?;
    let g = load_graph(&args)?;
    let results = run_identity_suite(&g, &caps_from(&args), path_cap_from(&args));
    let any_failed = results.iter().any(|r| r.failed());
    let content = match args.format {
        Format::Json => {
            let dtos: Vec<CheckDto> = results
                .iter()
                .map(|r| match &r.status {
                    CheckStatus::Pass => CheckDto { name: r.name, status: "pass", detail: None },
                    CheckStatus::Fail { detail } => CheckDto {
                        name: r.name,
                        status: "fail",
                        detail: Some(detail.clone()),
                    },
                    CheckStatus::Skipped { reason } => CheckDto {
                        name: r.name,
                        status: "skipped",
                        detail: Some(reason.clone()),
                    },
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&dtos).expect("serializing plain data");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            let mut passed = 0;
            let mut failed = 0;
            let mut skipped = 0;
            for r in &results {
                match &r.status {
                    CheckStatus::Pass => {
                        passed += 1;
                        let _ = writeln!(s, "PASS {}", r.name);
                    }
                    CheckStatus::Fail { detail } => {
                        failed += 1;
                        let _ = writeln!(s, "FAIL {}: {detail}", r.name);
                    }
                    CheckStatus::Skipped { reason } => {
                        skipped += 1;
                        let _ = writeln!(s, "SKIP {}: {reason}", r.name);
                    }
                }
            }
            let _ = writeln!(s, "{passed} passed, {failed} failed, {skipped} skipped");
            s
        }
    };
    let code = if any_failed { ExitCode::from(3) } else { ExitCode::SUCCESS };
    emit_with_code(&args.out, &content, code)
}
