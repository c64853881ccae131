//! `ihn`: spectra, criteria, LC orbits, censuses and code views from the
//! command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 cap refusal, 3 mismatch
//! against a published value.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ihn_core::codes::{gf4_generator, weight_distribution, z4_generator};
use ihn_core::criteria::{census, classify, CensusOptions, Criterion, FamilySpec};
use ihn_core::expected::{check_census, check_orbit_count, check_table1, Comparison};
use ihn_core::graph::{classify_lc_orbits, full_rank, lc_orbit, orbit_key};
use ihn_core::lcspectral::verify_theorem2;
use ihn_core::transform::{apply_transform, bipolar, verify_reduction_rules};
use ihn_core::{BooleanFunction, Error, Exec, GraphState, SpectralVector, TransformSpec};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "ihn",
    version,
    about = "Exact {I,H,N}^n spectral analysis and graph-state LC orbits"
)]
struct Cli {
    /// Worker threads for the parallel sweeps.
    #[arg(long, global = true, env = "IHN_THREADS")]
    threads: Option<usize>,
    /// Write output to a file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Args, Debug)]
struct FunctionArgs {
    /// ANF text: compact pairs ("04,15") or general ("0.1.2+3+1c").
    #[arg(long, allow_hyphen_values = true)]
    anf: String,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Edge list in compact pair format, e.g. "01,12,23".
    #[arg(long, allow_hyphen_values = true)]
    graph: String,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump exact spectra for one spec or all 3^n specs.
    Spectra {
        #[command(flatten)]
        f: FunctionArgs,
        /// Spec string over {I,H,N}, position j = variable j.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        spec: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Every bent criterion with witnesses.
    Classify {
        #[command(flatten)]
        f: FunctionArgs,
        #[arg(long)]
        json: bool,
    },
    /// LC orbit of one graph.
    Orbit {
        #[command(flatten)]
        g: GraphArgs,
        /// Deduplicate members up to isomorphism.
        #[arg(long)]
        up_to_iso: bool,
        /// List members after the summary line.
        #[arg(long)]
        members: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Number of LC orbits of connected graphs on n vertices.
    OrbitCount {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        long_run: bool,
    },
    /// LC orbits with no full-rank member, against the published table.
    Table1 {
        /// A single n; all of 2..=9 when omitted (10 with --long-run).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        long_run: bool,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Exhaustive family census for one criterion.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        /// bent, bent4, z4-bent, ibent, completely-ibent, ibent4, completely-ibent4
        #[arg(long)]
        criterion: String,
        #[arg(long)]
        long_run: bool,
        #[arg(long)]
        shards: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// GF(4) / ℤ₄ code views of a graph state.
    Code {
        #[command(flatten)]
        g: GraphArgs,
        /// Print the weight distribution.
        #[arg(long)]
        weights: bool,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Reduction rules plus the exhaustive single-kernel identity for n <= 3.
    Selfcheck,
    /// Exhaustive single-kernel identity over all functions on n variables.
    LcVerify {
        #[arg(long)]
        n: usize,
    },
}

/// Largest `n` for `lc-verify` (all `2^{2^n}` functions).
const MAX_LC_VERIFY_VARS: usize = 4;

enum Failure {
    Usage(String),
    Cap(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Cap(_) => 2,
            Failure::Mismatch(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Cap(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::SizeCapExceeded { .. } => {
                Failure::Cap(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("serialisation error: {e}"))
    }
}

type Out<'a> = &'a mut dyn Write;
type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = configure_threads(cli.threads) {
        eprintln!("error: {}", e.message());
        return ExitCode::from(e.code());
    }
    let result = (|| -> Outcome {
        let mut sink: Box<dyn Write> = match &cli.output {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        let r = run(&cli.command, &mut *sink);
        sink.flush()?;
        r
    })();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn configure_threads(threads: Option<usize>) -> Outcome {
    let Some(t) = threads else { return Ok(()) };
    if t == 0 {
        return Err(Failure::Usage("--threads must be at least 1".into()));
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(t)
        .build_global()
        .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
    Ok(())
}

fn run(cmd: &Command, out: Out) -> Outcome {
    match cmd {
        Command::Spectra {
            f,
            spec,
            all,
            format,
        } => cmd_spectra(f, spec.as_deref(), *all, *format, out),
        Command::Classify { f, json } => cmd_classify(f, *json, out),
        Command::Orbit {
            g,
            up_to_iso,
            members,
            format,
        } => cmd_orbit(g, *up_to_iso, *members, *format, out),
        Command::OrbitCount { n, long_run } => cmd_orbit_count(*n, *long_run, out),
        Command::Table1 {
            n,
            long_run,
            format,
        } => cmd_table1(*n, *long_run, *format, out),
        Command::Census {
            n,
            degree,
            criterion,
            long_run,
            shards,
            format,
        } => cmd_census(*n, *degree, criterion, *long_run, *shards, *format, out),
        Command::Code { g, weights, format } => cmd_code(g, *weights, *format, out),
        Command::Selfcheck => cmd_selfcheck(out),
        Command::LcVerify { n } => cmd_lc_verify(*n, out),
    }
}

fn parse_function(a: &FunctionArgs) -> Result<BooleanFunction, Failure> {
    Ok(BooleanFunction::parse_anf(&a.anf, a.n)?)
}

fn parse_graph(a: &GraphArgs) -> Result<GraphState, Failure> {
    Ok(GraphState::parse(&a.graph, a.n)?)
}

fn verdict(out: Out, cmp: &Comparison) -> Outcome {
    if cmp.pass {
        writeln!(out, "PASS")?;
        Ok(())
    } else {
        writeln!(out, "FAIL")?;
        for d in &cmp.diff {
            writeln!(out, "  {d}")?;
        }
        Err(Failure::Mismatch(cmp.diff.join("; ")))
    }
}

#[derive(Serialize)]
struct SpectrumRow<'a> {
    spec: &'a str,
    k: usize,
    a0: i64,
    a1: i64,
    a2: i64,
    a3: i64,
    scale_e: u32,
    norm_p: i64,
    norm_q: i64,
}

fn write_spectrum(out: Out, spec: &TransformSpec, v: &SpectralVector, format: Format) -> Outcome {
    let name = spec.to_string();
    for (k, e) in v.entries().iter().enumerate() {
        let [a0, a1, a2, a3] = e.coeffs();
        let norm = e.norm_sq();
        let row = SpectrumRow {
            spec: &name,
            k,
            a0,
            a1,
            a2,
            a3,
            scale_e: v.scale_e(),
            norm_p: norm.p,
            norm_q: norm.q,
        };
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&row)?)?,
            Format::Tsv => writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                row.spec, row.k, a0, a1, a2, a3, row.scale_e, row.norm_p, row.norm_q
            )?,
        }
    }
    Ok(())
}

fn cmd_spectra(
    a: &FunctionArgs,
    spec: Option<&str>,
    all: bool,
    format: Format,
    out: Out,
) -> Outcome {
    let f = parse_function(a)?;
    if format == Format::Tsv {
        writeln!(out, "spec\tk\ta0\ta1\ta2\ta3\tscale_e\tnorm_p\tnorm_q")?;
    }
    if all {
        for (s, v) in ihn_core::transform::all_ihn_spectra(&f)? {
            write_spectrum(out, &s, &v, format)?;
        }
        return Ok(());
    }
    let s: TransformSpec = spec.expect("clap requires --spec without --all").parse()?;
    if s.n() != f.n() {
        return Err(Failure::Usage(format!(
            "spec has length {}, expected {}",
            s.n(),
            f.n()
        )));
    }
    let v = apply_transform(&bipolar(&f), &s)?;
    write_spectrum(out, &s, &v, format)
}

fn cmd_classify(a: &FunctionArgs, json: bool, out: Out) -> Outcome {
    let f = parse_function(a)?;
    let r = classify(&f);
    if json {
        writeln!(out, "{}", serde_json::to_string(&r)?)?;
        return Ok(());
    }
    writeln!(out, "function\t{}", r.anf)?;
    writeln!(out, "n\t{}", r.n)?;
    writeln!(out, "degree\t{}", r.degree)?;
    for c in Criterion::ALL {
        writeln!(out, "{c}\t{}", r.verdict(c))?;
    }
    let lc = r.lc_bent.map_or("n/a".to_string(), |b| b.to_string());
    writeln!(out, "lc-bent\t{lc}")?;
    let w = &r.witnesses;
    let show = |o: &Option<String>| o.clone().unwrap_or_else(|| "-".into());
    writeln!(out, "bent4 offset\t{}", show(&w.bent4_offset))?;
    writeln!(out, "ibent spec\t{}", show(&w.ibent_spec))?;
    writeln!(out, "ibent4 spec\t{}", show(&w.ibent4_spec))?;
    writeln!(out, "lc-bent member\t{}", show(&w.lc_bent_member))?;
    if let Some(aff) = &r.ignored_affine {
        writeln!(out, "ignored affine part\t{aff}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct OrbitDump {
    rep_edges: String,
    orbit_size: usize,
    max_rank: usize,
    lc_bent: bool,
    key: u64,
}

#[derive(Serialize)]
struct MemberRow {
    edges: String,
    rank: usize,
}

fn cmd_orbit(a: &GraphArgs, up_to_iso: bool, members: bool, format: Format, out: Out) -> Outcome {
    let g = parse_graph(a)?;
    let orbit = lc_orbit(&g, up_to_iso)?;
    let max_rank = orbit.iter().map(|h| h.rank()).max().unwrap_or(0);
    let dump = OrbitDump {
        rep_edges: orbit[0].to_string(),
        orbit_size: orbit.len(),
        max_rank,
        lc_bent: max_rank == full_rank(g.n()),
        key: orbit_key(&g)?,
    };
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&dump)?)?,
        Format::Tsv => {
            writeln!(out, "rep_edges\torbit_size\tmax_rank\tlc_bent\tkey")?;
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                dump.rep_edges, dump.orbit_size, dump.max_rank, dump.lc_bent, dump.key
            )?;
        }
    }
    if members {
        for h in &orbit {
            let row = MemberRow {
                edges: h.to_string(),
                rank: h.rank(),
            };
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&row)?)?,
                Format::Tsv => writeln!(out, "{}\t{}", row.edges, row.rank)?,
            }
        }
    }
    Ok(())
}

fn cmd_orbit_count(n: usize, long_run: bool, out: Out) -> Outcome {
    let count = classify_lc_orbits(n, long_run, Exec::Parallel)?
        .orbits
        .len();
    writeln!(out, "{count}")?;
    match check_orbit_count(n, count) {
        Some(cmp) => verdict(out, &cmp),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct Table1Line {
    n: usize,
    representative: String,
    listed: Option<String>,
    max_rank: usize,
    classes: usize,
}

fn cmd_table1(n: Option<usize>, long_run: bool, format: Format, out: Out) -> Outcome {
    let ns: Vec<usize> = match n {
        Some(n) => vec![n],
        None => (2..=if long_run { 10 } else { 9 }).collect(),
    };
    if format == Format::Tsv {
        writeln!(out, "n | representative | max rank")?;
    }
    let mut diff = Vec::new();
    for n in ns {
        let c = classify_lc_orbits(n, long_run, Exec::Parallel)?;
        let found: Vec<_> = c.non_lc_bent().cloned().collect();
        let (matches, cmp) = check_table1(n, &found)?;
        if matches.is_empty() && format == Format::Tsv {
            writeln!(out, "{n} | - | -")?;
        }
        for m in &matches {
            let line = Table1Line {
                n,
                representative: m.record.representative.to_string(),
                listed: m.listed_rep.clone(),
                max_rank: m.record.max_rank,
                classes: m.record.classes,
            };
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&line)?)?,
                Format::Tsv => {
                    let rep = match &line.listed {
                        Some(l) => format!("{l}-equivalent"),
                        None => line.representative.clone(),
                    };
                    writeln!(out, "{n} | {rep} | {}", line.max_rank)?;
                }
            }
        }
        diff.extend(cmp.diff);
    }
    let cmp = Comparison {
        pass: diff.is_empty(),
        diff,
    };
    verdict(out, &cmp)
}

fn cmd_census(
    n: usize,
    degree: usize,
    criterion: &str,
    long_run: bool,
    shards: Option<usize>,
    format: Format,
    out: Out,
) -> Outcome {
    let criterion: Criterion = criterion.parse()?;
    let family = FamilySpec::new(n, degree)?;
    let r = census(
        &family,
        criterion,
        CensusOptions {
            exec: Exec::Parallel,
            long_run,
            shards,
        },
    )?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&r)?)?,
        Format::Tsv => {
            writeln!(out, "n\tdegree\tcriterion\tfamily_size\tcount")?;
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                r.n, r.degree, r.criterion, r.family_size, r.count
            )?;
        }
    }
    match check_census(&r) {
        Some(cmp) => verdict(out, &cmp),
        None => Ok(()),
    }
}

fn cmd_code(a: &GraphArgs, weights: bool, format: Format, out: Out) -> Outcome {
    let g = parse_graph(a)?;
    let gf4 = gf4_generator(&g);
    let wd = weight_distribution(&gf4, Exec::Parallel)?;
    let z4 = weight_distribution(&z4_generator(&g), Exec::Parallel)?;
    if wd != z4 {
        return Err(Failure::Mismatch(format!(
            "GF(4) and ℤ₄ weight distributions differ for {g}"
        )));
    }
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct CodeDump<'a> {
                graph: String,
                generator: Vec<String>,
                weights: Option<&'a [u64]>,
                min_distance: Option<usize>,
            }
            let dump = CodeDump {
                graph: g.to_string(),
                generator: gf4
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(|e| e.to_string()).collect())
                    .collect(),
                weights: weights.then_some(wd.counts.as_slice()),
                min_distance: wd.min_distance(),
            };
            writeln!(out, "{}", serde_json::to_string(&dump)?)?;
        }
        Format::Tsv => {
            write!(out, "{gf4}")?;
            if weights {
                write!(out, "{}", wd.to_tsv())?;
            }
        }
    }
    Ok(())
}

/// `(checks, first failure)` over every function on `n` variables.
fn theorem2_sweep(n: usize) -> Result<(u64, Option<String>), Failure> {
    let mut checks = 0;
    for bits in 0..1u64 << (1 << n) {
        let t: Vec<u8> = (0..1usize << n).map(|x| (bits >> x & 1) as u8).collect();
        let f = BooleanFunction::from_truth_table(n, &t)?;
        for v in 0..n {
            if let Err(m) = verify_theorem2(&f, v)? {
                return Ok((
                    checks,
                    Some(format!(
                        "{f}, v = {v}: index {} got {:?}, expected {:?}",
                        m.index, m.got, m.expected
                    )),
                ));
            }
            checks += 1;
        }
    }
    Ok((checks, None))
}

fn cmd_selfcheck(out: Out) -> Outcome {
    let rules = verify_reduction_rules();
    let mut diff: Vec<String> = rules
        .failures()
        .map(|c| format!("relation {} fails", c.name))
        .collect();
    writeln!(
        out,
        "reduction rules\t{}\t{}",
        rules.checks.len(),
        if rules.all_hold() { "PASS" } else { "FAIL" }
    )?;
    let mut total = 0;
    for n in 1..=3 {
        let (checks, bad) = theorem2_sweep(n)?;
        total += checks;
        if let Some(b) = bad {
            diff.push(b);
        }
    }
    writeln!(
        out,
        "single-kernel identity n <= 3\t{total}\t{}",
        if diff.is_empty() { "PASS" } else { "FAIL" }
    )?;
    verdict(
        out,
        &Comparison {
            pass: diff.is_empty(),
            diff,
        },
    )
}

fn cmd_lc_verify(n: usize, out: Out) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    if n > MAX_LC_VERIFY_VARS {
        return Err(Error::CapExceeded {
            what: "exhaustive single-kernel check",
            n,
            cap: MAX_LC_VERIFY_VARS,
            hint: "",
        }
        .into());
    }
    let (checks, bad) = theorem2_sweep(n)?;
    writeln!(out, "checks\t{checks}")?;
    let diff: Vec<String> = bad
        .into_iter()
        .map(|b| format!("counterexample: {b}"))
        .collect();
    verdict(
        out,
        &Comparison {
            pass: diff.is_empty(),
            diff,
        },
    )
}
