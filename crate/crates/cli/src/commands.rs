//! Command definitions and their implementations.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use snake_core::certify::{
    build_odd_blocks, capacity_upper_bound, export_density_instance, max_weight_pseudosnake_with,
    odd_upper_bound_certificate, path_weight_bound, tau_n, SolverOptions,
};
use snake_core::graph::trace_cycle;
use snake_core::king::{build_even_king_spiral, build_king_0mod4_cycle, build_odd_king_comb};
use snake_core::knight::{
    build_knight_u, build_pancake, build_tesseract_set, knight_cycle_path, pancake_cover,
    WeightedCellSet,
};
use snake_core::leaper::{
    build_fers_snake, build_leaper_pseudosnake, build_wazir_pseudosnake, stitch_wazir_snake,
    SnakeMode,
};
use snake_core::search::{
    longest_snake, longest_snake_checkpointed, Mode, Objective, SearchOptions,
};
use snake_core::{Board, CellSet, MoveRule, PieceGraph};

use crate::doc::{fit, Document, Kind};
use crate::render;
use crate::report::{Report, ReportStyle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "snake",
    version,
    about = "Snake paths and cycles in chess-piece graphs"
)]
pub struct Cli {
    /// Report style.
    #[arg(long, value_enum, global = true, default_value = "human")]
    pub report: ReportStyle,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a construction, verify it and print it as a document.
    Construct(ConstructArgs),
    /// Check a document.
    Verify(VerifyArgs),
    /// Exhaustive longest snake search.
    Search(SearchArgs),
    /// Upper-bound certificates.
    Certify(CertifyArgs),
    /// Maximum-weight pseudosnakes and density instances.
    Density(DensityArgs),
    /// Draw a document or a block decomposition.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    KingEvenSpiral,
    KingOddComb,
    KingCycle,
    #[value(name = "knight-U", alias = "knight-u")]
    KnightU,
    KnightCycle,
    Tesseract,
    Pancake,
    WazirPattern,
    Wazir,
    Fers,
    LeaperPattern,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Path,
    Cycle,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long = "gen", value_enum)]
    pub generator: Generator,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    /// Column interval `lo:hi` for knight-U.
    #[arg(long)]
    pub interval: Option<String>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long, value_enum, default_value = "path")]
    pub mode: ModeArg,
    /// Write the document here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Document file; standard input when absent or `-`.
    pub file: Option<PathBuf>,
    /// Weighted instance used to report the weight of the document's cells.
    #[arg(long)]
    pub weights: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub rule: MoveRule,
    #[arg(long)]
    pub n: u32,
    /// Board height; defaults to `n`.
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, value_enum, default_value = "path")]
    pub mode: ModeArg,
    /// Every solution of maximum length.
    #[arg(long, conflicts_with = "length")]
    pub enumerate: bool,
    /// Every solution with exactly this many edges.
    #[arg(long)]
    pub length: Option<usize>,
    #[arg(long, env = "SNAKE_BUDGET")]
    pub budget: Option<u64>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    #[arg(long)]
    pub no_symmetry: bool,
    /// Record finished work units here and resume from them.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Write the first solution as a document.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// Block certificate for the odd king board.
    #[arg(long, requires = "n", conflicts_with = "capacity")]
    pub odd_king: bool,
    /// Length bound from a weighted instance of known density.
    #[arg(long, requires_all = ["instance", "tau", "m", "n"])]
    pub capacity: bool,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    /// Snake path document to run through the block weight chain.
    #[arg(long)]
    pub path: Option<PathBuf>,
    /// `tesseract`, `pancake` or a weighted document.
    #[arg(long)]
    pub instance: Option<String>,
    #[arg(long)]
    pub tau: Option<Ratio<u64>>,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    /// `tesseract`, `pancake` or a document.
    #[arg(long, conflicts_with = "tau_n")]
    pub instance: Option<String>,
    /// Density of the full n x n board instead of an instance.
    #[arg(long)]
    pub tau_n: Option<u32>,
    /// Move rule; documents carry their own.
    #[arg(long)]
    pub rule: Option<MoveRule>,
    #[arg(long, env = "SNAKE_BUDGET")]
    pub budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Write a DIMACS instance for `--target` here.
    #[arg(long, requires = "target")]
    pub cnf: Option<PathBuf>,
    #[arg(long)]
    pub target: Option<u64>,
    /// Write the witness as a set document.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Picture {
    Ascii,
    Svg,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Document file; standard input when absent or `-`.
    pub file: Option<PathBuf>,
    /// Draw the block decomposition of the odd n x n king board instead.
    #[arg(long, conflicts_with = "file")]
    pub blocks: Option<u32>,
    #[arg(long, value_enum, default_value = "ascii")]
    pub format: Picture,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// What a command produced.
#[derive(Debug, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    /// Verification failed, with the report so far.
    Fail(String),
}

type Run = std::result::Result<Output, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> std::result::Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required here")))
}

pub fn execute(cli: &Cli, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Output {
    let style = cli.report;
    let res = match &cli.command {
        Command::Construct(a) => construct(a, style),
        Command::Verify(a) => verify(a, style, stdin),
        Command::Search(a) => search(a, style),
        Command::Certify(a) => certify(a, style),
        Command::Density(a) => density(a, style),
        Command::Render(a) => render_cmd(a, stdin),
    };
    match res {
        Ok(o) => o,
        Err(Failure::Usage(m)) => Output {
            code: EXIT_USAGE,
            stderr: format!("error: {m}\n"),
            ..Output::default()
        },
        Err(Failure::Fail(m)) => Output {
            code: EXIT_FAIL,
            stderr: format!("error: {m}\n"),
            ..Output::default()
        },
    }
}

fn read_input(
    file: &Option<PathBuf>,
    stdin: &mut dyn FnMut() -> std::io::Result<String>,
) -> std::result::Result<String, Failure> {
    match file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))
        }
        _ => stdin().map_err(usage),
    }
}

fn read_doc(
    file: &Option<PathBuf>,
    stdin: &mut dyn FnMut() -> std::io::Result<String>,
) -> std::result::Result<Document, Failure> {
    let text = read_input(file, stdin)?;
    Document::parse(&text).map_err(|e| usage(format!("parse error: {e}")))
}

fn write_or_print(
    out: &Option<PathBuf>,
    text: String,
    o: &mut Output,
) -> std::result::Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            o.stdout.push_str(&text);
            Ok(())
        }
    }
}

/// Checks a document according to its kind.
pub fn check(doc: &Document) -> std::result::Result<(), String> {
    let g = PieceGraph::new(doc.rule, doc.board());
    let r = match doc.kind {
        Kind::Path => g.check_snake_path(&doc.cell_path()),
        Kind::Cycle => g.check_snake_cycle(&doc.cell_path()),
        Kind::Set => {
            if doc.cells.is_empty() {
                Ok(())
            } else {
                g.check_pseudosnake(&doc.cell_set())
            }
        }
        Kind::WeightedSet => Ok(()),
    };
    r.map_err(|v| v.to_string())
}

fn instance_by_name(name: &str) -> std::result::Result<(Document, Option<Vec<CellSet>>), Failure> {
    match name {
        "tesseract" => Ok((
            shifted_weighted(&WeightedCellSet::uniform(&build_tesseract_set())),
            None,
        )),
        "pancake" => {
            let g = build_pancake();
            let doc = shifted_weighted(&g);
            let (shift, _, _) = fit(g.iter().map(|t| t.0));
            let cover = pancake_cover()
                .iter()
                .map(|s| s.translated(shift))
                .collect();
            Ok((doc, Some(cover)))
        }
        file => {
            let text = std::fs::read_to_string(file).map_err(|e| usage(format!("{file}: {e}")))?;
            let doc = Document::parse(&text).map_err(|e| usage(format!("parse error: {e}")))?;
            Ok((doc, None))
        }
    }
}

fn shifted_weighted(g: &WeightedCellSet) -> Document {
    let (shift, m, n) = fit(g.iter().map(|t| t.0));
    let moved = WeightedCellSet::from_weights(g.iter().map(|(c, w)| (c + shift, w)))
        .expect("translation keeps weights");
    Document::weighted(MoveRule::Knight, m, n, &moved)
}

fn parse_interval(s: &str) -> std::result::Result<(i32, i32), Failure> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| usage(format!("interval `{s}` is not `lo:hi`")))?;
    let p = |t: &str| {
        t.trim()
            .parse::<i32>()
            .map_err(|_| usage(format!("bad interval bound `{t}`")))
    };
    Ok((p(a)?, p(b)?))
}

fn mode_of(m: ModeArg) -> SnakeMode {
    match m {
        ModeArg::Path => SnakeMode::Path,
        ModeArg::Cycle => SnakeMode::Cycle,
    }
}

/// Builds the generator's document without checking it.
pub fn build(a: &ConstructArgs) -> std::result::Result<Document, Failure> {
    use Generator::*;
    let core = |e: snake_core::Error| usage(e);
    Ok(match a.generator {
        KingEvenSpiral => {
            let n = need(a.n, "n")?;
            Document::path(
                MoveRule::King,
                n,
                n,
                &build_even_king_spiral(n).map_err(core)?,
            )
        }
        KingOddComb => {
            let n = need(a.n, "n")?;
            Document::path(MoveRule::King, n, n, &build_odd_king_comb(n).map_err(core)?)
        }
        KingCycle => {
            let n = need(a.n, "n")?;
            Document::path(
                MoveRule::King,
                n,
                n,
                &build_king_0mod4_cycle(n).map_err(core)?,
            )
        }
        KnightU => {
            let k = need(a.k, "k")?;
            let (lo, hi) = parse_interval(
                a.interval
                    .as_deref()
                    .ok_or_else(|| usage("--interval is required here"))?,
            )?;
            let set = build_knight_u(k, lo, hi).map_err(core)?;
            let (shift, m, n) = fit(set.iter());
            let set = set.translated(shift);
            match trace_cycle(MoveRule::Knight, &set) {
                Some(c) => Document::path(MoveRule::Knight, m, n, &c),
                None => Document::set(MoveRule::Knight, m, n, &set),
            }
        }
        KnightCycle => {
            let (m, n) = (need(a.m, "m")?, need(a.n, "n")?);
            Document::path(
                MoveRule::Knight,
                m,
                n,
                &knight_cycle_path(m, n).map_err(core)?,
            )
        }
        Tesseract => shifted_weighted(&WeightedCellSet::uniform(&build_tesseract_set())),
        Pancake => shifted_weighted(&build_pancake()),
        WazirPattern => {
            let (n, m) = (need(a.n, "n")?, a.m.unwrap_or(need(a.n, "n")?));
            Document::set(
                MoveRule::Wazir,
                m,
                n,
                &build_wazir_pseudosnake(m, n).map_err(core)?,
            )
        }
        Wazir => {
            let (n, m) = (need(a.n, "n")?, a.m.unwrap_or(need(a.n, "n")?));
            Document::path(
                MoveRule::Wazir,
                m,
                n,
                &stitch_wazir_snake(m, n, mode_of(a.mode)).map_err(core)?,
            )
        }
        Fers => {
            let (n, m) = (need(a.n, "n")?, a.m.unwrap_or(need(a.n, "n")?));
            Document::path(
                MoveRule::Fers,
                m,
                n,
                &build_fers_snake(m, n, mode_of(a.mode)).map_err(core)?,
            )
        }
        LeaperPattern => {
            let (p, q) = (need(a.p, "p")?, need(a.q, "q")?);
            let (n, m) = (need(a.n, "n")?, a.m.unwrap_or(need(a.n, "n")?));
            let pat = build_leaper_pseudosnake(p, q).map_err(core)?;
            let board = Board::new(m, n).map_err(core)?;
            Document::set(
                MoveRule::leaper(p, q).map_err(core)?,
                m,
                n,
                &pat.window(&board),
            )
        }
    })
}

fn construct(a: &ConstructArgs, style: ReportStyle) -> Run {
    let doc = build(a)?;
    let mut o = Output::default();
    let mut r = Report::new("construct");
    r.add(
        "generator",
        a.generator
            .to_possible_value()
            .expect("named")
            .get_name()
            .to_string(),
    )
    .add("kind", doc.kind)
    .add("cells", doc.cells.len());
    if let Err(v) = check(&doc) {
        r.add("status", "fail").add("violation", &v);
        o.code = EXIT_FAIL;
        o.stderr = r.render(style);
        return Ok(o);
    }
    r.add("status", "ok");
    write_or_print(&a.output, doc.emit(), &mut o)?;
    o.stderr = r.render(style);
    Ok(o)
}

fn verify(
    a: &VerifyArgs,
    style: ReportStyle,
    stdin: &mut dyn FnMut() -> std::io::Result<String>,
) -> Run {
    let doc = read_doc(&a.file, stdin)?;
    let mut r = Report::new("verify");
    r.add("rule", doc.rule)
        .add("board", format!("{}x{}", doc.m, doc.n))
        .add("kind", doc.kind)
        .add("cells", doc.cells.len());
    if matches!(doc.kind, Kind::Path | Kind::Cycle) {
        r.add("length", doc.cell_path().len());
    }
    if doc.kind == Kind::WeightedSet {
        let g = PieceGraph::new(doc.rule, doc.board());
        r.add("total_weight", doc.weighted_set().total_weight())
            .add(
                "pseudosnake",
                !doc.cells.is_empty() && g.is_pseudosnake(&doc.cell_set()),
            );
    }
    if let Some(wfile) = &a.weights {
        let text = std::fs::read_to_string(wfile)
            .map_err(|e| usage(format!("{}: {e}", wfile.display())))?;
        let inst = Document::parse(&text).map_err(|e| usage(format!("parse error: {e}")))?;
        r.add("weight", inst.weighted_set().weight_of(&doc.cell_set()));
    }
    let mut o = Output::default();
    match check(&doc) {
        Ok(()) => {
            r.add("status", "ok");
        }
        Err(v) => {
            r.add("status", "fail").add("violation", v);
            o.code = EXIT_FAIL;
        }
    }
    o.stdout = r.render(style);
    Ok(o)
}

fn search(a: &SearchArgs, style: ReportStyle) -> Run {
    let m = a.m.unwrap_or(a.n);
    let board = Board::new(m, a.n).map_err(usage)?;
    if board.area() > 128 {
        return Err(usage("search boards have at most 128 cells"));
    }
    let graph = PieceGraph::new(a.rule, board);
    let mode = match a.mode {
        ModeArg::Path => Mode::Path,
        ModeArg::Cycle => Mode::Cycle,
    };
    let objective = match (a.enumerate, a.length) {
        (_, Some(l)) => Objective::EnumerateLength(l),
        (true, None) => Objective::EnumerateMax,
        (false, None) => Objective::FindMax,
    };
    let mut opts = SearchOptions::new(mode, objective)
        .with_symmetry(!a.no_symmetry)
        .with_workers(a.workers);
    if let Some(b) = a.budget {
        opts = opts.with_budget(b);
    }
    let start = Instant::now();
    let res = match &a.checkpoint {
        Some(p) => longest_snake_checkpointed(&graph, &opts, p),
        None => longest_snake(&graph, &opts),
    }
    .map_err(usage)?;
    let mut r = Report::new("search");
    r.add("rule", a.rule)
        .add("board", format!("{m}x{}", a.n))
        .add("mode", format!("{:?}", a.mode).to_lowercase())
        .add(
            "max_length",
            res.max_length.map_or("none".into(), |l| l.to_string()),
        )
        .add("total_count", res.total_count)
        .add("distinct_count", res.distinct_count)
        .add("nodes", res.nodes)
        .add("wall_ms", start.elapsed().as_millis())
        .add("partial", !res.exhausted);
    let mut o = Output::default();
    if let (Some(out), Some(p)) = (
        &a.output,
        res.representatives.first().or(res.solutions.first()),
    ) {
        write_or_print(
            &Some(out.clone()),
            Document::path(a.rule, m, a.n, p).emit(),
            &mut o,
        )?;
    }
    if !res.exhausted {
        o.code = EXIT_BUDGET;
    }
    o.stdout = r.render(style);
    Ok(o)
}

fn certify(a: &CertifyArgs, style: ReportStyle) -> Run {
    let mut o = Output::default();
    if a.capacity {
        let (inst, _) = instance_by_name(a.instance.as_deref().expect("required by clap"))?;
        let (tau, m, n) = (
            a.tau.expect("required"),
            a.m.expect("required"),
            a.n.expect("required"),
        );
        let bound = capacity_upper_bound(&inst.weighted_set(), tau, m, n);
        let mut r = Report::new("certify");
        r.add("certificate", "capacity")
            .add("board", format!("{m}x{n}"))
            .add("tau", tau)
            .add("bound", bound);
        o.stdout = r.render(style);
        return Ok(o);
    }
    if !a.odd_king {
        return Err(usage("choose --odd-king or --capacity"));
    }
    let n = need(a.n, "n")?;
    let d = build_odd_blocks(n).map_err(usage)?;
    let mut r = Report::new("certify");
    let little = d
        .blocks
        .iter()
        .filter(|b| b.kind == snake_core::certify::BlockKind::Little)
        .count();
    r.add("certificate", "odd-king")
        .add("n", n)
        .add("little_blocks", little)
        .add("large_blocks", d.blocks.len() - little)
        .add("capacity", d.total_capacity());
    match (d.check_coverage(), odd_upper_bound_certificate(n)) {
        (Ok(()), Ok(bound)) => {
            r.add("coverage", "ok").add("bound", bound);
        }
        (Err(e), _) | (_, Err(e)) => {
            r.add("coverage", "fail").add("violation", e);
            o.code = EXIT_FAIL;
        }
    }
    if let Some(p) = &a.path {
        let doc = read_doc(&Some(p.clone()), &mut || Ok(String::new()))?;
        let ok = path_weight_bound(n, &doc.cell_path()).map_err(usage)?;
        r.add("path_length", doc.cell_path().len())
            .add("path_chain", if ok { "ok" } else { "fail" });
        if !ok {
            o.code = EXIT_FAIL;
        }
    }
    o.stdout = r.render(style);
    Ok(o)
}

fn density(a: &DensityArgs, style: ReportStyle) -> Run {
    let mut o = Output::default();
    let budget = a.budget.unwrap_or(u64::MAX);
    let mut r = Report::new("density");
    if let Some(n) = a.tau_n {
        let rule = need(a.rule, "rule")?;
        match tau_n(rule, n, budget) {
            Ok(t) => {
                r.add("rule", rule)
                    .add("n", n)
                    .add("tau", t)
                    .add("partial", false);
            }
            Err(snake_core::Error::Limit(m)) => {
                r.add("rule", rule)
                    .add("n", n)
                    .add("partial", true)
                    .add("note", m);
                o.code = EXIT_BUDGET;
            }
            Err(e) => return Err(usage(e)),
        }
        o.stdout = r.render(style);
        return Ok(o);
    }
    let name = a
        .instance
        .as_deref()
        .ok_or_else(|| usage("--instance or --tau-n is required"))?;
    let (doc, cover) = instance_by_name(name)?;
    let rule = a.rule.unwrap_or(doc.rule);
    let g = doc.weighted_set();
    if let Some(path) = &a.cnf {
        let target = a.target.expect("required by clap");
        std::fs::write(path, export_density_instance(&g, rule, target))
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
        r.add("cnf", path.display()).add("target", target);
    }
    let opts = SolverOptions {
        node_budget: budget,
        workers: a.workers,
    };
    let start = Instant::now();
    let res = max_weight_pseudosnake_with(&g, rule, &opts, cover.as_deref()).map_err(usage)?;
    let total = g.total_weight();
    r.add("rule", rule)
        .add("cells", g.len())
        .add("total_weight", total)
        .add("optimum", res.optimum)
        .add(
            "density",
            if total == 0 {
                Ratio::from_integer(0)
            } else {
                Ratio::new(res.optimum, total)
            },
        )
        .add("nodes", res.nodes)
        .add("wall_ms", start.elapsed().as_millis())
        .add("partial", !res.proven_optimal);
    if !res.proven_optimal {
        o.code = EXIT_BUDGET;
    }
    if let Some(out) = &a.output {
        let w = Document::set(rule, doc.m, doc.n, &res.witness);
        std::fs::write(out, w.emit()).map_err(|e| usage(format!("{}: {e}", out.display())))?;
        r.add("witness", out.display());
    }
    o.stdout = r.render(style);
    Ok(o)
}

fn render_cmd(a: &RenderArgs, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Run {
    let text = match a.blocks {
        Some(n) => {
            let d = build_odd_blocks(n).map_err(usage)?;
            match a.format {
                Picture::Ascii => render::ascii_blocks(&d),
                Picture::Svg => render::svg_blocks(&d),
            }
        }
        None => {
            let doc = read_doc(&a.file, stdin)?;
            match a.format {
                Picture::Ascii => render::ascii(&doc),
                Picture::Svg => render::svg(&doc),
            }
        }
    };
    let mut o = Output::default();
    write_or_print(&a.output, text, &mut o)?;
    Ok(o)
}

/// Parses arguments and runs the command. Clap's own usage errors map to
/// exit code 2; `--help` and `--version` to 0.
pub fn run<I, T>(args: I, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, stdin),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Output {
                    code,
                    stdout: text,
                    ..Output::default()
                }
            } else {
                Output {
                    code,
                    stderr: text,
                    ..Output::default()
                }
            }
        }
    }
}
