//! Command-line front end for the `whitney` library.
//!
//! Prints graph families and the invariants of their clique complexes —
//! f-vectors, Betti numbers, exact curvature, renormalized curvature samples,
//! Lefschetz numbers, Wu characteristics, rooted spanning tree and forest
//! counts, Kirchhoff spectra and zeta values, homotopy classifications — and
//! reproduces the reference tables as plot-ready CSV.
//!
//! Output is deterministic: identical invocations produce byte-identical
//! output regardless of the worker-pool size, so every emitted file can be
//! used as a golden file in regression suites. CSV uses a header row, comma
//! separators without quoting, and LF line endings. JSON keeps exact
//! rationals as `"p/q"` strings rather than floats.
//!
//! Exit codes: 0 on success, 2 for usage or argument errors, 3 when a
//! configured enumeration cap is exceeded, 4 for internal numerical failures.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

use whitney::complex::{clique_complex, dual_cycle_complex, hyper_fibonacci, DEFAULT_SIMPLEX_CAP};
use whitney::curvature::{curvature_profile, renormalization_sample};
use whitney::error::Error as CoreError;
use whitney::fixedpoint::{lefschetz_table, path_lefschetz_pair};
use whitney::graph::{
    barycentric_refinement, circulant_graph, cycle_complement, dihedral_cayley_complement,
    paley_graph, path_complement, prime_graph, Graph,
};
use whitney::hodge::betti_vector;
use whitney::homotopy::{classify_homotopy_type, HomotopyClass};
use whitney::kirchhoff::{
    kirchhoff_eigenvalues, rooted_forest_count, rooted_tree_count, spectral_zeta,
    tree_forest_ratio,
};
use whitney::poly::{generating_function, rat_int, rational_string, rational_to_f64};
use whitney::wu::{wu_betti, wu_characteristic, DEFAULT_PAIR_CAP};

/// Invariants of graph families built from clique complexes.
#[derive(Parser)]
#[command(name = "whitney", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Output format (tables are always CSV)
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Cap on the number of enumerated simplices
    #[arg(long, global = true, default_value_t = DEFAULT_SIMPLEX_CAP)]
    simplex_cap: usize,

    /// Order Lefschetz rotation rows as in the published tables
    #[arg(long, global = true)]
    paper_order: bool,

    /// Size of the worker thread pool (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a family graph as an edge list
    Family(FamilyArgs),
    /// f-vector of the clique complex
    Fvector(FamilyArgs),
    /// Betti numbers of the clique complex
    Betti(FamilyArgs),
    /// Exact vertex curvatures (Gauss-Bonnet summands)
    Curvature(FamilyArgs),
    /// Scaled curvature samples (k/n, n*K(k)) of the path complement by residue mod 6
    Renorm {
        /// Number of vertices (at least 24)
        #[arg(long)]
        n: usize,
    },
    /// Lefschetz numbers of the family symmetries (cycle or path complements)
    Lefschetz(FamilyArgs),
    /// Wu characteristics of orders 2, 3 and 4
    Wu(FamilyArgs),
    /// Rooted spanning tree and forest counts with their ratio
    Trees(FamilyArgs),
    /// Spectral zeta values of the Kirchhoff matrix at s = 1..4
    Zeta(FamilyArgs),
    /// Kirchhoff eigenvalues
    Spectrum(FamilyArgs),
    /// Homotopy classification (always JSON)
    Classify(FamilyArgs),
    /// Reproduce a reference table as CSV
    Table {
        /// Table name
        #[arg(value_enum)]
        name: TableName,
        /// Last row to include (default: the table's published range)
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Graph family
    #[arg(long, value_enum)]
    family: FamilyKind,
    /// Family size parameter
    #[arg(long)]
    n: Option<usize>,
    /// Circulant generators, comma separated
    #[arg(long, value_delimiter = ',')]
    gens: Vec<usize>,
    /// Prime modulus for the quadratic-residue family
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    CycleComplement,
    PathComplement,
    Circulant,
    DihedralComplement,
    Paley,
    Prime,
    BarycentricComplement,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableName {
    FvectorTable,
    DimsCycle,
    DimsPath,
    BettiCycle,
    BettiPath,
    WuTable,
    WuBetti,
    TreeForest,
    LefschetzCycle,
    LefschetzPath,
    DihedralBetti,
}

/// Command failure carrying the process exit code.
enum Failure {
    Usage(String),
    Core(CoreError),
    Io(std::io::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(e) => e.exit_code() as u8,
            Failure::Io(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
            Failure::Io(e) => e.to_string(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        // Ignore the error if a pool already exists; output is identical
        // for every pool size anyway.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{output}");
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Cmd::Family(args) => family_output(args, cli),
        Cmd::Fvector(args) => fvector_output(args, cli),
        Cmd::Betti(args) => betti_output(args, cli),
        Cmd::Curvature(args) => curvature_output(args, cli),
        Cmd::Renorm { n } => renorm_output(*n, cli),
        Cmd::Lefschetz(args) => lefschetz_output(args, cli),
        Cmd::Wu(args) => wu_output(args, cli),
        Cmd::Trees(args) => trees_output(args, cli),
        Cmd::Zeta(args) => zeta_output(args, cli),
        Cmd::Spectrum(args) => spectrum_output(args, cli),
        Cmd::Classify(args) => classify_output(args, cli),
        Cmd::Table { name, max_n } => table_output(*name, *max_n, cli),
    }
}

// ---------------------------------------------------------------------------
// Family construction

fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    g.with_label(format!("complete({n})"))
}

fn build_graph(args: &FamilyArgs, simplex_cap: usize) -> Result<Graph, Failure> {
    let need_n = || {
        args.n.ok_or_else(|| Failure::Usage("this family requires --n".into()))
    };
    let g = match args.family {
        FamilyKind::CycleComplement => cycle_complement(need_n()?)?,
        FamilyKind::PathComplement => path_complement(need_n()?)?,
        FamilyKind::Circulant => {
            let n = need_n()?;
            if args.gens.is_empty() {
                return Err(Failure::Usage("the circulant family requires --gens".into()));
            }
            circulant_graph(n, &args.gens)?
        }
        FamilyKind::DihedralComplement => dihedral_cayley_complement(need_n()?)?,
        FamilyKind::Paley => {
            let q = args
                .q
                .ok_or_else(|| Failure::Usage("the paley family requires --q".into()))?;
            paley_graph(q)?
        }
        FamilyKind::Prime => prime_graph(need_n()?)?,
        FamilyKind::BarycentricComplement => {
            let n = need_n()?;
            let refined = barycentric_refinement(&complete_graph(n), simplex_cap)?;
            refined.complement().with_label(format!("barycentric-complement({n})"))
        }
    };
    Ok(g)
}

// ---------------------------------------------------------------------------
// Single-graph commands

fn family_output(args: &FamilyArgs, cli: &Cli) -> Result<String, Failure> {
    let g = build_graph(args, cli.simplex_cap)?;
    match cli.format {
        Format::Csv => {
            let rows = g.edges().into_iter().map(|(u, v)| format!("{u},{v}"));
            Ok(csv("u,v", rows))
        }
        Format::Json => Ok(format!("{}\n", g.to_json())),
    }
}

fn fvector_output(args: &FamilyArgs, cli: &Cli) -> Result<String, Failure> {
    let g = build_graph(args, cli.simplex_cap)?;
    let c = clique_complex(&g, cli.simplex_cap)?;
    let f = c.f_vector();
    match cli.format {
        Format::Csv => {
            let rows = f.iter().enumerate().map(|(k, count)| format!("{k},{count}"));
            Ok(csv("dim,count", rows))
        }
        Format::Json => {
            let list = join(f.iter());
            Ok(format!(
                "{{\"fvector\":[{list}],\"total\":{},\"euler\":{}}}\n",
                c.len(),
                c.euler_characteristic()
            ))
        }
    }
}

fn betti_output(args: &FamilyArgs, cli: &Cli) -> Result<String, Failure> {
    let g = build_graph(args, cli.simplex_cap)?;
    let c = clique_complex(&g, cli.simplex_cap)?;
    let betti = betti_vector(&c);
    match cli.format {
        Format::Csv => {
            let rows = betti.iter().enumerate().map(|(k, b)| format!("{k},{b}"));
            Ok(csv("dim,betti", rows))
        }
        Format::Json => Ok(format!(
            "{{\"betti\":[{}],\"euler\":{}}}\n",
            join(betti.iter()),
            c.euler_characteristic()
        )),
    }
}

fn curvature_output(args: &FamilyArgs, cli: &Cli) -> Result<String, Failure> {
    let g = build_graph(args, cli.simplex_cap)?;
    let profile = curvature_profile(&g)?;
    match cli.format {
        Format::Csv => {
            let rows = profile
                .values
                .iter()
                .enumerate()
                .map(|(v, k)| format!("{v},{}", rational_string(k)));
            Ok(csv("vertex,curvature", rows))
        }
        Format::Json => {
            let values = join(profile.values.iter().map(|k| format!("\"{}\"", rational_string(k))));
            Ok(format!(
                "{{\"curvatures\":[{values}],\"sum\":\"{}\"}}\n",
                rational_string(&profile.sum())
            ))
        }
    }
}

fn renorm_output(n: usize, cli: &Cli) -> Result<String, Failure> {
    let mut samples = Vec::new();
    for l in 0..=5usize {
        samples.push((l, renormalization_sample(n, l)?));
    }
    match cli.format {
        Format::Csv => {
            let rows = samples.iter().flat_map(|(l, points)| {
                points.iter().map(move |(x, y)| format!("{l},{x},{y}"))
            });
            Ok(csv("l,x,y", rows))
        }
        Format::Json => {
            let blocks = join(samples.iter().map(|(l, points)| {
                let pts = join(points.iter().map(|(x, y)| format!("[{x},{y}]")));
                format!("{{\"l\":{l},\"points\":[{pts}]}}")
            }));
            Ok(format!("{{\"n\":{n},\"residues\":[{blocks}]}}\n"))
        }
    }
}

fn lefschetz_output(args: &FamilyArgs, cli: &Cli) -> Result<String, Failure> {
    let need_n = || {
        args.n.ok_or_else(|| Failure::Usage("this family requires --n".into()))
    };
    match args.family {
        FamilyKind::CycleComplement => {
            let n = need_n()?;
            let table = lefschetz_table(n)?;
            let rotations: Vec<(String, i64)> = if cli.paper_order {
                table
                    .paper_rotations()
                    .into_iter()
                    .enumerate()
                    .map(|(i, v)| (format!("rotation-{}", i + 1), v))
                    .collect()
            } else {
                table
                    .rotations
                    .iter()
                    .enumerate()
                    .map(|(j, &v)| (format!("rotation-{j}"), v))
                    .collect()
            };
            let reflections: Vec<(String, i64)> = table
                .reflections
                .iter()
                .enumerate()
                .map(|(j, &v)| (format!("reflection-{j}"), v))
                .collect();
            let average = rational_string(&table.average());
            match cli.format {
                Format::Csv => {
                    let rows = rotations
                        .iter()
                        .chain(reflections.iter())
                        .map(|(label, v)| format!("{label},{v}"))
                        .chain(std::iter::once(format!("average,{average}")));
                    Ok(csv("automorphism,lefschetz", rows))
                }
                Format::Json => Ok(format!(
                    "{{\"n\":{n},\"rotations\":[{}],\"reflections\":[{}],\"average\":\"{average}\"}}\n",
                    join(rotations.iter().map(|(_, v)| v.to_string())),
                    join(reflections.iter().map(|(_, v)| v.to_string())),
                )),
            }
        }
        FamilyKind::PathComplement => {
            let n = need_n()?;
            let (identity, reversal) = path_lefschetz_pair(n)?;
            match cli.format {
                Format::Csv => Ok(csv(
                    "automorphism,lefschetz",
                    [format!("identity,{identity}"), format!("reversal,{reversal}")],
                )),
                Format::Json => Ok(format!(
                    "{{\"n\":{n},\"identity\":{identity},\"reversal\":{reversal}}}\n"
                )),
            }
        }
        _ => Err(Failure::Usage(
            "lefschetz supports --family cycle-complement or path-complement".into(),
        )),
    }
}

fn wu_output(args: &FamilyArgs, cli: &Cli) -> Result<String, Failure> {
    let g = build_graph(args, cli.simplex_cap)?;
    let c = clique_complex(&g, cli.simplex_cap)?;
    let w2 = wu_characteristic(&c, 2)?;
    let w3 = wu_characteristic(&c, 3)?;
    let w4 = wu_characteristic(&c, 4)?;
    match cli.format {
        Format::Csv => Ok(csv(
            "order,value",
            [format!("2,{w2}"), format!("3,{w3}"), format!("4,{w4}")],
        )),
        Format::Json => {
            let wb = wu_betti(&c, DEFAULT_PAIR_CAP)?;
            Ok(format!(
                "{{\"wu2\":{w2},\"wu3\":{w3},\"wu4\":{w4},\"wu_betti\":[{}]}}\n",
                join(wb.iter())
            ))
        }
    }
}

fn trees_output(args: &FamilyArgs, cli: &Cli) -> Result<String, Failure> {
    let g = build_graph(args, cli.simplex_cap)?;
    let trees = rooted_tree_count(&g);
    let forests = rooted_forest_count(&g);
    let ratio = tree_forest_ratio(&g)?;
    match cli.format {
        Format::Csv => Ok(csv(
            "trees,forests,ratio",
            [format!("{trees},{forests},{}", rational_string(&ratio))],
        )),
        Format::Json => Ok(format!(
            "{{\"trees\":\"{trees}\",\"forests\":\"{forests}\",\"ratio\":\"{}\"}}\n",
            rational_string(&ratio)
        )),
    }
}

fn zeta_output(args: &FamilyArgs, cli: &Cli) -> Result<String, Failure> {
    let g = build_graph(args, cli.simplex_cap)?;
    let values: Vec<(usize, f64)> = (1..=4usize)
        .map(|s| spectral_zeta(&g, s as f64).map(|z| (s, z)))
        .collect::<Result<_, _>>()?;
    match cli.format {
        Format::Csv => {
            let rows = values.iter().map(|(s, z)| format!("{s},{z}"));
            Ok(csv("s,zeta", rows))
        }
        Format::Json => Ok(format!(
            "{{\"zeta\":[{}]}}\n",
            join(values.iter().map(|(_, z)| z.to_string()))
        )),
    }
}

fn spectrum_output(args: &FamilyArgs, cli: &Cli) -> Result<String, Failure> {
    let g = build_graph(args, cli.simplex_cap)?;
    let (eigenvalues, zero_count) = kirchhoff_eigenvalues(&g);
    match cli.format {
        Format::Csv => {
            let rows = eigenvalues.iter().enumerate().map(|(i, ev)| format!("{i},{ev}"));
            Ok(csv("index,eigenvalue", rows))
        }
        Format::Json => Ok(format!(
            "{{\"eigenvalues\":[{}],\"zero_count\":{zero_count}}}\n",
            join(eigenvalues.iter().map(|ev| ev.to_string()))
        )),
    }
}

fn classify_output(args: &FamilyArgs, cli: &Cli) -> Result<String, Failure> {
    // Classification is structural; it always emits JSON.
    let g = build_graph(args, cli.simplex_cap)?;
    let report = classify_homotopy_type(&g)?;
    let class = match report.class {
        HomotopyClass::Point => "point".to_string(),
        HomotopyClass::Sphere(d) => format!("sphere({d})"),
        HomotopyClass::Wedge(d, m) => format!("wedge({d},{m})"),
        HomotopyClass::Other => "other".to_string(),
    };
    let mut out = format!(
        "{{\"input\":\"{}\",\"class\":\"{class}\",\"betti\":[{}]",
        g.label(),
        join(report.betti.iter())
    );
    if let Some(cert) = &report.certificate {
        out.push_str(&format!(",\"certificate\":[{}]", join(cert.iter())));
    }
    out.push_str("}\n");
    Ok(out)
}

// ---------------------------------------------------------------------------
// Reference tables

fn table_output(name: TableName, max_n: Option<usize>, cli: &Cli) -> Result<String, Failure> {
    if cli.format == Format::Json {
        return Err(Failure::Usage("tables are emitted as CSV; use the default format".into()));
    }
    let cap = cli.simplex_cap;
    match name {
        TableName::FvectorTable => fvector_table(max_n.unwrap_or(11), cap),
        TableName::DimsCycle => dims_table(false, max_n.unwrap_or(14), cap),
        TableName::DimsPath => dims_table(true, max_n.unwrap_or(14), cap),
        TableName::BettiCycle => betti_table(false, max_n.unwrap_or(20), cap),
        TableName::BettiPath => betti_table(true, max_n.unwrap_or(21), cap),
        TableName::WuTable => wu_table(max_n.unwrap_or(18), cap),
        TableName::WuBetti => wu_betti_table(max_n.unwrap_or(11), cap),
        TableName::TreeForest => tree_forest_table(max_n.unwrap_or(10)),
        TableName::LefschetzCycle => lefschetz_cycle_table(max_n.unwrap_or(24), cli.paper_order),
        TableName::LefschetzPath => lefschetz_path_table(max_n.unwrap_or(18)),
        TableName::DihedralBetti => dihedral_betti_table(max_n.unwrap_or(12), cap),
    }
}

/// Cycle complement on `n` vertices, degenerating to the edgeless graph for
/// `n < 3` so tables can start at small `n`.
fn cycle_family(n: usize) -> Result<Graph, Failure> {
    if n < 3 {
        Ok(Graph::new(n).with_label(format!("cycle-complement({n})")))
    } else {
        Ok(cycle_complement(n)?)
    }
}

fn fvector_table(max_n: usize, cap: usize) -> Result<String, Failure> {
    let mut data = Vec::new();
    for n in 0..=max_n {
        let g = cycle_family(n)?;
        let c = clique_complex(&g, cap)?;
        data.push((n, c.f_vector(), c.euler_characteristic()));
    }
    let width = data.iter().map(|(_, f, _)| f.len()).max().unwrap_or(0).max(1);
    let header = format!(
        "n,{},fibonacci,euler",
        join((0..width).map(|k| format!("f{k}")))
    );
    let rows = data.into_iter().map(|(n, f, chi)| {
        let counts = join((0..width).map(|k| f.get(k).copied().unwrap_or(0).to_string()));
        format!("{n},{counts},{},{chi}", hyper_fibonacci(n))
    });
    Ok(csv(&header, rows))
}

fn dims_table(path_family: bool, max_n: usize, cap: usize) -> Result<String, Failure> {
    let one = rat_int(1);
    let mut rows = Vec::new();
    for n in 4..=max_n {
        let g = if path_family { path_complement(n)? } else { cycle_complement(n)? };
        let c = clique_complex(&g, cap)?;
        let inductive = rational_to_f64(&g.inductive_dimension()?);
        let f = generating_function(&c);
        let expectation = &f.derivative().evaluate(&one) / &f.evaluate(&one);
        let expectation = rational_to_f64(&(rat_int(2) * expectation - one.clone()));
        let betti = betti_vector(&c);
        let cohomology = betti.iter().rposition(|&b| b != 0).unwrap_or(0);
        let maximal = c.max_dim().expect("nonempty complex");
        rows.push(format!("{n},{inductive:.6},{expectation:.6},{cohomology},{maximal}"));
    }
    Ok(csv("n,inductive,expectation,cohomology,maximal", rows))
}

fn betti_table(path_family: bool, max_n: usize, cap: usize) -> Result<String, Failure> {
    let start = if path_family { 4 } else { 3 };
    let mut data = Vec::new();
    for n in start..=max_n {
        let g = if path_family { path_complement(n)? } else { cycle_family(n)? };
        let c = clique_complex(&g, cap)?;
        data.push((n, betti_vector(&c)));
    }
    let width = data.iter().map(|(_, b)| b.len()).max().unwrap_or(1);
    let header = format!("n,{}", join((0..width).map(|k| format!("b{k}"))));
    let rows = data.into_iter().map(|(n, b)| {
        format!("{n},{}", join((0..width).map(|k| b.get(k).copied().unwrap_or(0).to_string())))
    });
    Ok(csv(&header, rows))
}

fn wu_table(max_n: usize, cap: usize) -> Result<String, Failure> {
    let mut rows = Vec::new();
    for n in 4..=max_n {
        let c = dual_cycle_complex(n, cap)?;
        let w2 = wu_characteristic(&c, 2)?;
        let w3 = wu_characteristic(&c, 3)?;
        let w4 = wu_characteristic(&c, 4)?;
        rows.push(format!("{n},{w2},{w3},{w4}"));
    }
    Ok(csv("n,wu2,wu3,wu4", rows))
}

fn wu_betti_table(max_n: usize, cap: usize) -> Result<String, Failure> {
    let mut data = Vec::new();
    for n in 3..=max_n {
        let g = cycle_family(n)?;
        let c = clique_complex(&g, cap)?;
        data.push((n, wu_betti(&c, DEFAULT_PAIR_CAP)?));
    }
    let width = data.iter().map(|(_, b)| b.len()).max().unwrap_or(1);
    let header = format!("n,{}", join((0..width).map(|t| format!("b{}", t + 2))));
    let rows = data.into_iter().map(|(n, b)| {
        format!("{n},{}", join((0..width).map(|t| b.get(t).copied().unwrap_or(0).to_string())))
    });
    Ok(csv(&header, rows))
}

fn tree_forest_table(max_n: usize) -> Result<String, Failure> {
    let mut rows = Vec::new();
    for n in 4..=max_n {
        let cycle = cycle_complement(n)?;
        let path = path_complement(n)?;
        rows.push(format!(
            "{n},{},{},{},{}",
            rooted_tree_count(&cycle),
            rooted_forest_count(&cycle),
            rooted_tree_count(&path),
            rooted_forest_count(&path),
        ));
    }
    Ok(csv("n,cycle-trees,cycle-forests,path-trees,path-forests", rows))
}

fn lefschetz_cycle_table(max_n: usize, paper_order: bool) -> Result<String, Failure> {
    let mut rows = Vec::new();
    for n in 4..=max_n {
        let table = lefschetz_table(n)?;
        if paper_order {
            for (i, v) in table.paper_rotations().into_iter().enumerate() {
                rows.push(format!("{n},rotation-{},{v}", i + 1));
            }
        } else {
            for (j, v) in table.rotations.iter().enumerate() {
                rows.push(format!("{n},rotation-{j},{v}"));
            }
        }
        for (j, v) in table.reflections.iter().enumerate() {
            rows.push(format!("{n},reflection-{j},{v}"));
        }
        rows.push(format!("{n},average,{}", rational_string(&table.average())));
    }
    Ok(csv("n,automorphism,lefschetz", rows))
}

fn lefschetz_path_table(max_n: usize) -> Result<String, Failure> {
    let mut rows = Vec::new();
    for n in 4..=max_n {
        let (identity, reversal) = path_lefschetz_pair(n)?;
        rows.push(format!("{n},{identity},{reversal}"));
    }
    Ok(csv("n,identity,reversal", rows))
}

fn dihedral_betti_table(max_n: usize, cap: usize) -> Result<String, Failure> {
    let mut data = Vec::new();
    for n in 4..=max_n {
        let g = dihedral_cayley_complement(n)?;
        let c = clique_complex(&g, cap)?;
        data.push((n, c.euler_characteristic(), betti_vector(&c)));
    }
    let width = data.iter().map(|(_, _, b)| b.len()).max().unwrap_or(1);
    let header = format!("n,euler,{}", join((0..width).map(|k| format!("b{k}"))));
    let rows = data.into_iter().map(|(n, chi, b)| {
        format!(
            "{n},{chi},{}",
            join((0..width).map(|k| b.get(k).copied().unwrap_or(0).to_string()))
        )
    });
    Ok(csv(&header, rows))
}

// ---------------------------------------------------------------------------
// Formatting helpers

fn csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut s = String::with_capacity(256);
    s.push_str(header);
    s.push('\n');
    for row in rows {
        s.push_str(&row);
        s.push('\n');
    }
    s
}

fn join(items: impl IntoIterator<Item = impl ToString>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
