//! Argument parsing and the commands.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use arcnerve::circle::{format_rational, parse_rational};
use arcnerve::complex::nerve_nk;
use arcnerve::graphs::lovasz_report;
use arcnerve::homology::{
    generator_of_top_homology, is_boundary, is_cocycle, pair, reduced_homology, IntMatrix,
};
use arcnerve::homotopy::{collection_homotopy, nerve_homotopy};
use arcnerve::polytope::{
    admissible_sets, alpha_cycle, beta_cochain_even, beta_cochain_odd, delta, delta_boundary,
    evaluation_matrix, even_case, facets_lie_in_nerve, gale_facets, odd_case, odd_common_simplex,
};
use arcnerve::reduce::{reduce_to_minimal, verify_reduction};
use arcnerve::{ArcCollection, Caps, Error, Rational};
use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bench;
use crate::input::{ComplexKind, InputDocument, InputError};
use crate::random::{large_collection, small_collection};
use crate::report::{HomotopyReport, RemovalDoc};
use crate::suites::{self, MapsCases, Options, PolytopeCases, SuiteReport, EVEN_CASES};
use crate::table;

#[derive(Parser, Debug)]
#[command(
    name = "arcnerve",
    version,
    about = "Homotopy types of nerve and clique complexes of circular arcs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify the nerve or clique complex of an arc collection.
    Homotopy(HomotopyArgs),
    /// Reduce an arc collection and print the removal log.
    Reduce(SourceArgs),
    /// Print the table of homotopy types of N(n, k).
    Table(TableArgs),
    /// Run the verification suites against the homology oracle.
    Verify(VerifyArgs),
    /// Time the reduction on random arcs.
    Bench(BenchArgs),
    /// Check the explicit homology and cohomology generators of N(n, k).
    Generators(GeneratorArgs),
    /// List facets of the cyclic polytope C_{2m}(n).
    Polytope(PolytopeArgs),
    /// Chromatic number of K_{n/d} against the topological bound.
    Chromatic(ChromaticArgs),
}

#[derive(Args, Debug)]
pub struct SourceArgs {
    /// JSON input document; `-` reads stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Use this many seeded random arcs instead of an input document.
    #[arg(long, conflicts_with = "input")]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Overrides the radius of a points document, e.g. `1/5`.
    #[arg(long)]
    pub radius: Option<String>,
    #[arg(long, value_enum)]
    pub complex: Option<ComplexKind>,
}

#[derive(Args, Debug)]
pub struct HomotopyArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Include the removal log and replay it against the input.
    #[arg(long)]
    pub log_removals: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 18)]
    pub n_max: usize,
    /// Last column; defaults to `n_max - 2`.
    #[arg(long)]
    pub k_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = ComplexKind::Nerve)]
    pub complex: ComplexKind,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    /// Number of random collections.
    #[arg(long, default_value_t = 200)]
    pub random: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Oracle limits as `VERTICES:DIM`.
    #[arg(long, value_parser = parse_caps, default_value = "12:10")]
    pub caps: Caps,
    /// Only the formula sweeps and random collections.
    #[arg(long)]
    pub sweeps_only: bool,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 1_000_000)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Size ladder `LO:HI` of powers of two, e.g. `15:20`.
    #[arg(long, value_parser = parse_ladder)]
    pub ladder: Option<(u32, u32)>,
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
}

#[derive(Args, Debug)]
pub struct GeneratorArgs {
    pub n: usize,
    pub k: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct PolytopeArgs {
    pub n: usize,
    pub two_m: usize,
    /// Check that every facet is a simplex of N(n, K).
    #[arg(long, value_name = "K")]
    pub check_inclusion: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ChromaticArgs {
    pub n: usize,
    pub d: usize,
    #[arg(long)]
    pub json: bool,
}

fn parse_caps(s: &str) -> Result<Caps, String> {
    let (v, d) = s.split_once(':').ok_or("expected VERTICES:DIM")?;
    Ok(Caps::new(
        v.trim().parse().map_err(|e| format!("vertices: {e}"))?,
        d.trim().parse().map_err(|e| format!("dim: {e}"))?,
    ))
}

fn parse_ladder(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo: u32 = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: u32 = hi.trim().parse().map_err(|e| format!("{e}"))?;
    if lo > hi || hi > 30 {
        return Err("need LO <= HI <= 30".into());
    }
    Ok((lo, hi))
}

/// Process exit statuses.
#[derive(Debug)]
pub enum Failure {
    Mismatch(String),
    Parse(String),
    Empty,
    Precondition(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Empty => 3,
            Failure::Precondition(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyCollection => Failure::Empty,
            e => Failure::Precondition(e.to_string()),
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Empty => Failure::Empty,
            e => Failure::Parse(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Parse(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn json<T: Serialize>(out: &mut dyn Write, value: &T) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::Parse(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn load(src: &SourceArgs) -> Result<(ArcCollection, ComplexKind), Failure> {
    if let Some(m) = src.random {
        if m == 0 {
            return Err(Failure::Empty);
        }
        let c = if m <= 8 {
            small_collection(&mut ChaCha8Rng::seed_from_u64(src.seed), m)
        } else {
            large_collection(m, src.seed)
        };
        return Ok((c, src.complex.unwrap_or(ComplexKind::Nerve)));
    }
    let text = match src.input.as_deref() {
        None => return Err(Failure::Parse("give --input FILE or --random M".into())),
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Parse(format!("{}: {e}", p.display())))?,
    };
    let doc: InputDocument = text.parse()?;
    let radius: Option<Rational> = src
        .radius
        .as_deref()
        .map(|r| parse_rational(r).map_err(|e| Failure::Parse(format!("--radius: {e}"))))
        .transpose()?;
    let parsed = doc.parse(src.complex, radius.as_ref())?;
    Ok((
        parsed.collection,
        parsed.complex.unwrap_or(ComplexKind::Nerve),
    ))
}

fn cmd_homotopy(args: &HomotopyArgs, out: &mut dyn Write) -> Outcome {
    let (c, kind) = load(&args.source)?;
    let (h, r) = collection_homotopy(&c, kind.variant())?;
    let mut report = HomotopyReport::new(c.len(), kind.to_string(), h, &r);
    if args.log_removals {
        report.removals = Some(r.removal_log.iter().map(RemovalDoc::from).collect());
        let ok = verify_reduction(&c, &r)?;
        report.log_verified = Some(ok);
        json(out, &report)?;
        if !ok {
            return Err(Failure::Mismatch("removal log failed to replay".into()));
        }
        return Ok(());
    }
    json(out, &report)
}

#[derive(Serialize)]
struct ReduceReport {
    n: usize,
    n_prime: usize,
    k_prime: usize,
    kept: Vec<usize>,
    removals: Vec<RemovalDoc>,
    log_verified: bool,
    mutations: usize,
}

fn cmd_reduce(args: &SourceArgs, out: &mut dyn Write) -> Outcome {
    let (c, _) = load(args)?;
    let r = reduce_to_minimal(&c)?;
    let ok = verify_reduction(&c, &r)?;
    json(
        out,
        &ReduceReport {
            n: c.len(),
            n_prime: r.n_prime,
            k_prime: r.k_prime,
            kept: r.kept_indices.clone(),
            removals: r.removal_log.iter().map(RemovalDoc::from).collect(),
            log_verified: ok,
            mutations: r.stats.mutations,
        },
    )?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch("removal log failed to replay".into()))
    }
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Outcome {
    if args.n_max < 2 {
        return Err(Failure::Precondition("--n-max must be at least 2".into()));
    }
    let k_max = args.k_max.unwrap_or(args.n_max - 2);
    out.write_all(table::render(args.n_max, k_max, args.complex.variant()).as_bytes())?;
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let opts = Options {
        caps: args.caps,
        fault: args.inject_fault,
    };
    let (n, count, seed) = (args.n_max, args.random, args.seed);
    let mut runs: Vec<Box<dyn Fn() -> SuiteReport>> = vec![
        Box::new(move || suites::nerve_sweep(n, opts)),
        Box::new(move || suites::clique_sweep(n, opts)),
        Box::new(move || suites::recursion(50, opts)),
        Box::new(move || suites::random_collections(count, seed, opts)),
    ];
    if !args.sweeps_only {
        runs.push(Box::new(move || suites::generators(&EVEN_CASES, opts.caps)));
        runs.push(Box::new(move || {
            suites::polytope(
                &PolytopeCases {
                    gale_n_max: n.max(3),
                    ..PolytopeCases::default()
                },
                opts.caps,
            )
        }));
        runs.push(Box::new(move || {
            suites::maps(
                &MapsCases {
                    automorphism_n_max: n.min(8),
                    epsilon: EVEN_CASES.to_vec(),
                    action_n_max: n.min(9),
                },
                opts.caps,
            )
        }));
        runs.push(Box::new(move || suites::surjection(n + 1, opts.caps)));
        runs.push(Box::new(move || suites::chromatic(2 * n.max(1), n)));
    }
    let mut first_failure = None;
    for run in runs {
        let t = Instant::now();
        let r = run();
        writeln!(out, "{r}  ({:.2}s)", t.elapsed().as_secs_f64())?;
        if let (None, Some(f)) = (&first_failure, r.failures.first()) {
            first_failure = Some(format!("{}: {f}", r.name));
        }
    }
    match first_failure {
        None => Ok(()),
        Some(f) => {
            writeln!(out, "counterexample: {f}")?;
            Err(Failure::Mismatch(f))
        }
    }
}

#[derive(Serialize)]
struct BenchReport {
    seed: u64,
    runs: Vec<bench::Timing>,
    #[serde(skip_serializing_if = "Option::is_none")]
    worst_post_sort_growth: Option<f64>,
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Outcome {
    if args.count == 0 {
        return Err(Failure::Precondition("--count must be at least 1".into()));
    }
    let (runs, growth) = match args.ladder {
        Some((lo, hi)) => {
            let rungs = bench::ladder(lo, hi, args.seed, args.repeats);
            let g = bench::worst_growth(&rungs);
            (rungs, Some(g))
        }
        None => (
            vec![bench::time_reduction(args.count, args.seed, args.repeats)],
            None,
        ),
    };
    json(
        out,
        &BenchReport {
            seed: args.seed,
            runs,
            worst_post_sort_growth: growth,
        },
    )
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| m.get(i, j).to_i64().unwrap_or(i64::MAX))
                .collect()
        })
        .collect()
}

#[derive(Serialize)]
#[serde(tag = "case", rename_all = "lowercase")]
enum GeneratorReport {
    Even {
        n: usize,
        k: usize,
        l: usize,
        delta: Vec<usize>,
        rank: usize,
        beta_terms: usize,
        beta_is_cocycle: bool,
        beta_on_delta_boundary: i64,
        evaluation_matrix: Vec<Vec<i64>>,
        alpha_sum_is_boundary: bool,
    },
    Odd {
        n: usize,
        k: usize,
        l: usize,
        admissible_sets: usize,
        beta_is_cocycle: bool,
        common_simplex: Vec<usize>,
        beta_on_sphere: i64,
    },
}

fn cmd_generators(args: &GeneratorArgs, out: &mut dyn Write) -> Outcome {
    let (n, k) = (args.n, args.k);
    if n < 2 || k + 2 > n {
        return Err(Failure::Precondition(format!(
            "N({n},{k}) is contractible; generators need 0 <= k <= n - 2"
        )));
    }
    let caps = Caps::new(14, 12);
    let nk = nerve_nk(n, k);
    let report = if let Ok(l) = even_case(n, k) {
        let r = n - k - 1;
        let beta = beta_cochain_even(n, k)?;
        let mut sum = alpha_cycle(n, k, 0)?;
        for i in 1..=r as i64 {
            sum = sum.add(&alpha_cycle(n, k, i)?)?;
        }
        GeneratorReport::Even {
            n,
            k,
            l,
            delta: delta(n, k)?,
            rank: reduced_homology(&nk, caps)?.betti(2 * l),
            beta_terms: beta.len(),
            beta_is_cocycle: is_cocycle(&nk, &beta)?,
            beta_on_delta_boundary: pair(&beta, &delta_boundary(n, k)?)?
                .to_i64()
                .unwrap_or(i64::MAX),
            evaluation_matrix: matrix_rows(&evaluation_matrix(n, k)?),
            alpha_sum_is_boundary: is_boundary(&nk, &sum)?,
        }
    } else {
        let l = odd_case(n, k)?;
        let beta = beta_cochain_odd(n, k)?;
        let sphere = gale_facets(2 * l + 2, n)?.complex();
        let z = generator_of_top_homology(&sphere, 2 * l + 1, caps)?;
        GeneratorReport::Odd {
            n,
            k,
            l,
            admissible_sets: admissible_sets(n, k)?.len(),
            beta_is_cocycle: is_cocycle(&nk, &beta)?,
            common_simplex: odd_common_simplex(n, k)?.vertices().to_vec(),
            beta_on_sphere: pair(&beta, &z)?.to_i64().unwrap_or(i64::MAX),
        }
    };
    if args.json {
        return json(out, &report);
    }
    match &report {
        GeneratorReport::Even {
            l,
            delta,
            rank,
            beta_is_cocycle,
            beta_on_delta_boundary,
            evaluation_matrix,
            alpha_sum_is_boundary,
            ..
        } => {
            writeln!(out, "N({n},{k}) ~ {}", nerve_homotopy(n, k))?;
            writeln!(out, "H{} rank {rank}, Delta = {delta:?}", 2 * l)?;
            writeln!(out, "beta cocycle: {beta_is_cocycle}")?;
            writeln!(out, "<beta, dDelta> = {beta_on_delta_boundary}")?;
            writeln!(out, "<gamma_i, alpha_j>:")?;
            for row in evaluation_matrix {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                writeln!(out, "  {}", cells.join(""))?;
            }
            writeln!(out, "sum of alphas is a boundary: {alpha_sum_is_boundary}")?;
        }
        GeneratorReport::Odd {
            admissible_sets,
            beta_is_cocycle,
            common_simplex,
            beta_on_sphere,
            ..
        } => {
            writeln!(out, "N({n},{k}) ~ {}", nerve_homotopy(n, k))?;
            writeln!(out, "admissible sets: {admissible_sets}")?;
            writeln!(out, "beta cocycle: {beta_is_cocycle}")?;
            writeln!(
                out,
                "common simplex with the polytope boundary: {common_simplex:?}"
            )?;
            writeln!(out, "<beta, [boundary of C]> = {beta_on_sphere}")?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PolytopeReport {
    n: usize,
    two_m: usize,
    facets: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inclusion: Option<bool>,
}

fn cmd_polytope(args: &PolytopeArgs, out: &mut dyn Write) -> Outcome {
    let f = gale_facets(args.two_m, args.n)?;
    let inclusion = match args.check_inclusion {
        None => None,
        Some(k) => {
            let l = odd_case(args.n, k)?;
            if 2 * l + 2 != args.two_m {
                return Err(Failure::Precondition(format!(
                    "N({},{k}) carries C_{}({}), not dimension {}",
                    args.n,
                    2 * l + 2,
                    args.n,
                    args.two_m
                )));
            }
            Some(facets_lie_in_nerve(args.n, k)?)
        }
    };
    let report = PolytopeReport {
        n: args.n,
        two_m: args.two_m,
        facets: f.facets.iter().map(|s| s.vertices().to_vec()).collect(),
        inclusion,
    };
    if args.json {
        json(out, &report)?;
    } else {
        writeln!(
            out,
            "C_{}({}) has {} facets",
            args.two_m,
            args.n,
            report.facets.len()
        )?;
        for facet in &report.facets {
            writeln!(out, "  {facet:?}")?;
        }
        if let (Some(ok), Some(k)) = (inclusion, args.check_inclusion) {
            writeln!(out, "every facet lies in N({},{k}): {ok}", args.n)?;
        }
    }
    match inclusion {
        Some(false) => Err(Failure::Mismatch("a facet is missing from N(n, k)".into())),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct ChromaticReport {
    n: usize,
    d: usize,
    chi: usize,
    bound: isize,
    gap: isize,
    residue: String,
}

fn cmd_chromatic(args: &ChromaticArgs, out: &mut dyn Write) -> Outcome {
    let r = lovasz_report(args.n, args.d)?;
    let report = ChromaticReport {
        n: r.n,
        d: r.d,
        chi: r.chi,
        bound: r.bound,
        gap: r.gap,
        residue: format_rational(&r.fractional_case),
    };
    if args.json {
        json(out, &report)
    } else {
        writeln!(
            out,
            "chi={} bound={} gap={}",
            report.chi, report.bound, report.gap
        )?;
        Ok(())
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Homotopy(a) => cmd_homotopy(a, out),
        Command::Reduce(a) => cmd_reduce(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Bench(a) => cmd_bench(a, out),
        Command::Generators(a) => cmd_generators(a, out),
        Command::Polytope(a) => cmd_polytope(a, out),
        Command::Chromatic(a) => cmd_chromatic(a, out),
    }
}

/// Parses `args`, runs the command and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = out.flush();
            match &f {
                Failure::Empty => eprintln!("error: input has no arcs"),
                Failure::Mismatch(m) | Failure::Parse(m) | Failure::Precondition(m) => {
                    eprintln!("error: {m}")
                }
            }
            f.code()
        }
    }
}
