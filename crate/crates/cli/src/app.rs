use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use proxrem_core::bounds::{catalog, check_report, select, BoundError, CheckResult};
use proxrem_core::constructions::{build_family, ConstructionError, Family, ValidationNote};
use proxrem_core::graph6::to_graph6;
use proxrem_core::metrics::{invariant_report, invariant_report_parallel, MetricsError};
use proxrem_core::search::{enumerate_connected, Filter, ScanSummary, SearchError};
use proxrem_core::{Graph, InvariantReport};
use thiserror::Error;

use crate::formats::{read_graphs, write_graph, FormatError, GraphFormat};
use crate::report::{decimal6, GraphDescriptor, ReportDocument, ScanDocument};

/// Process exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 2;
    pub const IO: u8 = 3;
    pub const VALIDATION: u8 = 4;
    pub const VIOLATION: u8 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("{0} bound violation(s)")]
    Violation(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Format(_) | CliError::Write { .. } => exit::IO,
            CliError::Validation(_) => exit::VALIDATION,
            CliError::Violation(_) => exit::VIOLATION,
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Parameter(_) | ConstructionError::Field(_) => CliError::Usage(e.to_string()),
            ConstructionError::Graph(_) | ConstructionError::Integrity(_) => CliError::Validation(e.to_string()),
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::UnknownBound(id) => {
                let known: Vec<&str> = catalog().iter().map(|b| b.id).collect();
                CliError::Usage(format!("unknown bound id `{id}`; known ids: {}", known.join(", ")))
            }
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<MetricsError> for CliError {
    fn from(e: MetricsError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "proxrem", version, about = "Proximity, remoteness and distance bounds for connected graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named graph family and print it with its validation notes.
    Gen(GenArgs),
    /// Compute the invariant report of a graph.
    Measure(MeasureArgs),
    /// Check the bound catalog on a graph; exits 5 if an applicable bound fails.
    Check(CheckArgs),
    /// Check bounds over an enumerated or supplied corpus.
    Scan(ScanArgs),
    /// Write all connected graphs of one order as graph6 lines.
    Enum(EnumArgs),
    /// Print the bound catalog.
    Bounds,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyParams {
    /// Minimum degree δ (layered families).
    #[arg(long)]
    pub delta: Option<usize>,
    /// Number of blocks / copies.
    #[arg(long)]
    pub k: Option<usize>,
    /// Order (layered-padded, path, cycle, complete).
    #[arg(long)]
    pub n: Option<usize>,
    /// Field order (polarity, puncture, chain).
    #[arg(long)]
    pub q: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// layered, layered-padded, polarity, puncture, chain, path, cycle or complete.
    pub family: String,
    #[command(flatten)]
    pub params: FamilyParams,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: GraphFormat,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file (graph6 lines or an edge list).
    #[arg(long = "in", value_name = "FILE", conflicts_with = "family")]
    pub input: Option<PathBuf>,
    /// Input format; detected from the first line when omitted.
    #[arg(long, value_enum, requires = "input")]
    pub format: Option<GraphFormat>,
    /// Only the graph at this 0-based position of the file.
    #[arg(long, requires = "input")]
    pub index: Option<usize>,
    /// Build the graph from a family instead of reading a file.
    #[arg(long)]
    pub family: Option<String>,
    #[command(flatten)]
    pub params: FamilyParams,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Print the JSON report document.
    #[arg(long)]
    pub json: bool,
    /// Run the per-vertex BFS on this many threads.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Skip the triangle / C4 / ball classification.
    #[arg(long)]
    pub no_classes: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Comma-separated bound ids (default: whole catalog).
    #[arg(long, value_delimiter = ',')]
    pub bounds: Option<Vec<String>>,
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Enumerate connected graphs of this order (2..=9).
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    pub n: Option<usize>,
    #[arg(long, value_parser = parse_filter, default_value = "all")]
    pub filter: Filter,
    /// Read the corpus from a graph6 file instead.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    pub bounds: Option<Vec<String>>,
    #[arg(long)]
    pub json: bool,
    /// Tight cases listed per bound in the text output.
    #[arg(long, default_value_t = 10)]
    pub show: usize,
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_filter, default_value = "all")]
    pub filter: Filter,
    #[arg(long)]
    pub out: PathBuf,
}

fn parse_filter(s: &str) -> Result<Filter, String> {
    Filter::parse(s).ok_or_else(|| format!("unknown filter `{s}`; expected one of {}", Filter::NAMES.join(", ")))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::from(exit::OK),
        Err(e) => {
            let _ = out.flush();
            eprintln!("proxrem: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn run(command: Command, out: &mut impl Write) -> Result<(), CliError> {
    match command {
        Command::Gen(args) => gen(args, out),
        Command::Measure(args) => measure(args, out),
        Command::Check(args) => check(args, out),
        Command::Scan(args) => scan(args, out),
        Command::Enum(args) => enumerate(args, out),
        Command::Bounds => print_catalog(out).map_err(stdout_err),
    }
}

fn family_of(name: &str, p: &FamilyParams) -> Result<Family, CliError> {
    Ok(Family::from_parts(name, p.delta, p.k, p.n, p.q)?)
}

fn descriptor(family: &Family) -> GraphDescriptor {
    GraphDescriptor::Family {
        name: family.name().into(),
        parameters: family.parameters().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
    }
}

struct Input {
    graph: Graph,
    descriptor: GraphDescriptor,
    notes: Vec<ValidationNote>,
}

fn load_inputs(args: &InputArgs) -> Result<Vec<Input>, CliError> {
    match (&args.input, &args.family) {
        (Some(path), None) => {
            let graphs = read_graphs(path, args.format)?;
            let shown = path.display().to_string();
            let indexed: Vec<(usize, Graph)> = match args.index {
                Some(i) if i >= graphs.len() => {
                    return Err(CliError::Usage(format!("--index {i} but {shown} holds {} graph(s)", graphs.len())))
                }
                Some(i) => vec![(i, graphs.into_iter().nth(i).expect("index checked"))],
                None => graphs.into_iter().enumerate().collect(),
            };
            Ok(indexed
                .into_iter()
                .map(|(index, graph)| Input {
                    graph,
                    descriptor: GraphDescriptor::File { path: shown.clone(), index },
                    notes: Vec::new(),
                })
                .collect())
        }
        (None, Some(name)) => {
            let family = family_of(name, &args.params)?;
            let built = build_family(&family)?;
            Ok(vec![Input { graph: built.graph, descriptor: descriptor(&family), notes: built.notes }])
        }
        (None, None) => Err(CliError::Usage("give a graph with --in FILE or --family NAME".into())),
        (Some(_), Some(_)) => Err(CliError::Usage("--in and --family are mutually exclusive".into())),
    }
}

fn report_for(g: &Graph, threads: Option<usize>, classes: bool) -> Result<InvariantReport, CliError> {
    let report = match threads {
        None => invariant_report(g)?,
        Some(0) => return Err(CliError::Usage("--threads must be at least 1".into())),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {t} threads: {e}")))?;
            pool.install(|| invariant_report_parallel(g))?
        }
    };
    Ok(if classes { report.with_classes(g) } else { report })
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Write { path: path.into(), source }
}

fn stdout_err(source: io::Error) -> CliError {
    CliError::Write { path: "<stdout>".into(), source }
}

fn gen(args: GenArgs, out: &mut impl Write) -> Result<(), CliError> {
    let family = family_of(&args.family, &args.params)?;
    let built = build_family(&family)?;
    let write = |w: &mut dyn Write| -> io::Result<()> {
        writeln!(w, "# {family}")?;
        for note in &built.notes {
            writeln!(w, "# {note}")?;
        }
        let mut buf = BufWriter::new(w);
        write_graph(&mut buf, &built.graph, args.format)?;
        buf.flush()
    };
    match &args.out {
        Some(path) => {
            let mut file = File::create(path).map_err(io_err(path))?;
            write(&mut file).map_err(io_err(path))?;
            writeln!(out, "wrote {family} (order {}, {} edges) to {}", built.graph.order(), built.graph.edge_count(), path.display())
                .map_err(stdout_err)
        }
        None => write(out).map_err(stdout_err),
    }
}

fn measure(args: MeasureArgs, out: &mut impl Write) -> Result<(), CliError> {
    for input in load_inputs(&args.input)? {
        let report = report_for(&input.graph, args.threads, !args.no_classes)?;
        let doc = ReportDocument::new(input.descriptor, &report).with_notes(&input.notes);
        if args.json {
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| stdout_err(e.into()))?;
            writeln!(out).map_err(stdout_err)?;
        } else {
            write_report_table(out, &doc).map_err(stdout_err)?;
        }
    }
    Ok(())
}

fn vertex_list(vs: &[usize]) -> String {
    const SHOWN: usize = 12;
    let head: Vec<String> = vs.iter().take(SHOWN).map(|v| v.to_string()).collect();
    if vs.len() > SHOWN {
        format!("{} … ({} total)", head.join(" "), vs.len())
    } else {
        head.join(" ")
    }
}

fn write_report_table(out: &mut impl Write, doc: &ReportDocument) -> io::Result<()> {
    let rat = |r: &crate::report::JsonRational| format!("{} ({})", r.value(), r.decimal);
    let mut rows: Vec<(&str, String)> = vec![
        ("graph", doc.graph.to_string()),
        ("order", doc.order.to_string()),
        ("edges", doc.edge_count.to_string()),
        ("min degree", doc.min_degree.to_string()),
        ("proximity", rat(&doc.proximity)),
        ("remoteness", rat(&doc.remoteness)),
        ("average distance", rat(&doc.average_distance)),
        ("diameter", doc.diameter.to_string()),
        ("radius", doc.radius.to_string()),
        ("median vertices", vertex_list(&doc.median_vertices)),
        ("margin vertices", vertex_list(&doc.margin_vertices)),
        ("centre vertices", vertex_list(&doc.center_vertices)),
    ];
    if let Some(c) = &doc.classes {
        rows.push(("triangle-free", c.triangle_free.to_string()));
        rows.push(("C4-free", c.c4_free.to_string()));
        rows.push(("min |N≤2(v)|", c.min_ball2.to_string()));
    }
    for (k, v) in rows {
        writeln!(out, "{k:<18} {v}")?;
    }
    for note in &doc.notes {
        writeln!(out, "note [{}] {}: {}", note.status, note.claim, note.value)?;
    }
    writeln!(out)
}

fn write_checks_table(out: &mut impl Write, label: &str, results: &[CheckResult]) -> io::Result<()> {
    writeln!(out, "{label}")?;
    writeln!(out, "  {:<12} {:<10} {:>14} {:>14} {:>12}  status", "bound", "applies", "lhs", "rhs", "slack")?;
    for r in results {
        let show = |x: Option<proxrem_core::Rational>| x.map_or_else(|| "-".to_string(), decimal6);
        let status = match (r.applicable, r.holds, r.tight) {
            (false, _, _) => "n/a",
            (true, false, _) => "VIOLATED",
            (true, true, true) => "tight",
            (true, true, false) => "holds",
        };
        writeln!(
            out,
            "  {:<12} {:<10} {:>14} {:>14} {:>12}  {status}",
            r.id,
            if r.applicable { "yes" } else { "no" },
            show(r.lhs),
            show(r.rhs),
            show(r.slack)
        )?;
    }
    Ok(())
}

fn bound_ids(list: &Option<Vec<String>>) -> Option<Vec<&str>> {
    list.as_ref().map(|v| v.iter().map(|s| s.trim()).filter(|s| !s.is_empty()).collect())
}

fn check(args: CheckArgs, out: &mut impl Write) -> Result<(), CliError> {
    let ids = bound_ids(&args.bounds);
    let bounds = select(ids.as_deref())?;
    let mut violations = 0;
    for input in load_inputs(&args.input)? {
        let report = report_for(&input.graph, args.threads, true)?;
        let results = check_report(&report, &bounds)?;
        violations += results.iter().filter(|r| !r.holds).count();
        if args.json {
            let doc = ReportDocument::new(input.descriptor, &report).with_checks(&results).with_notes(&input.notes);
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| stdout_err(e.into()))?;
            writeln!(out).map_err(stdout_err)?;
        } else {
            write_checks_table(out, &input.descriptor.to_string(), &results).map_err(stdout_err)?;
        }
    }
    if violations > 0 {
        return Err(CliError::Violation(violations));
    }
    Ok(())
}

fn scan(args: ScanArgs, out: &mut impl Write) -> Result<(), CliError> {
    let ids = bound_ids(&args.bounds);
    let bounds = select(ids.as_deref())?;
    let summary = match (&args.input, args.n) {
        (Some(path), _) => {
            let mut s = ScanSummary::new(&path.display().to_string(), &bounds);
            for g in read_graphs(path, Some(GraphFormat::Graph6))? {
                s.add(&g, &bounds)?;
            }
            s
        }
        (None, Some(n)) => {
            let label = format!("connected graphs, n = {n}, filter {}", args.filter);
            let mut s = ScanSummary::new(&label, &bounds);
            for g in enumerate_connected(n, args.filter)? {
                s.add(&g, &bounds)?;
            }
            s
        }
        (None, None) => return Err(CliError::Usage("give --n N or --in FILE".into())),
    };
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &ScanDocument::from(&summary)).map_err(|e| stdout_err(e.into()))?;
        writeln!(out).map_err(stdout_err)?;
    } else {
        write_scan_table(out, &summary, args.show).map_err(stdout_err)?;
    }
    match summary.total_violations() {
        0 => Ok(()),
        v => Err(CliError::Violation(v)),
    }
}

fn write_scan_table(out: &mut impl Write, s: &ScanSummary, show: usize) -> io::Result<()> {
    writeln!(out, "corpus   {}", s.corpus)?;
    writeln!(out, "scanned  {}  (skipped {})", s.scanned, s.skipped)?;
    writeln!(out, "{:<12} {:>10} {:>10} {:>7} {:>12}  witness", "bound", "applicable", "violations", "tight", "min slack")?;
    for t in &s.bounds {
        let (slack, witness) = t.min_slack.as_ref().map_or(("-".to_string(), "-"), |w| (decimal6(w.slack), w.graph6.as_str()));
        writeln!(out, "{:<12} {:>10} {:>10} {:>7} {:>12}  {witness}", t.id, t.applicable, t.violations, t.tight.len(), slack)?;
    }
    for t in s.bounds.iter().filter(|t| !t.tight.is_empty() || !t.violating.is_empty()) {
        for g in t.violating.iter() {
            writeln!(out, "violation {} {g}", t.id)?;
        }
        for g in t.tight.iter().take(show) {
            writeln!(out, "tight {} {g}", t.id)?;
        }
        if t.tight.len() > show {
            writeln!(out, "tight {} … {} more", t.id, t.tight.len() - show)?;
        }
    }
    Ok(())
}

fn enumerate(args: EnumArgs, out: &mut impl Write) -> Result<(), CliError> {
    let graphs = enumerate_connected(args.n, args.filter)?;
    let file = File::create(&args.out).map_err(io_err(&args.out))?;
    let mut w = BufWriter::new(file);
    let mut count = 0usize;
    for g in graphs {
        writeln!(w, "{}", to_graph6(&g)).map_err(io_err(&args.out))?;
        count += 1;
    }
    w.flush().map_err(io_err(&args.out))?;
    writeln!(out, "wrote {count} graphs (n = {}, filter {}) to {}", args.n, args.filter, args.out.display()).map_err(stdout_err)
}

fn print_catalog(out: &mut impl Write) -> io::Result<()> {
    for b in catalog() {
        writeln!(out, "{:<12} {}", b.id, b.statement())?;
        writeln!(out, "{:<12} class: {}; hypotheses: {}; {}", "", b.class, b.hypotheses, b.description)?;
    }
    Ok(())
}
