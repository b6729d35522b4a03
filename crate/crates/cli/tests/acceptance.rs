//! Acceptance run: one PASS/FAIL line per criterion, each with its time
//! limit. Exits nonzero on a failure only when `ARCNERVE_ACCEPTANCE_STRICT=1`,
//! so a timing-sensitive criterion does not break `cargo test` on a noisy
//! machine.

use std::time::{Duration, Instant};

use arcnerve::Variant;
use arcnerve_cli::bench::{ladder, time_reduction, worst_growth};
use arcnerve_cli::suites::{
    self, MapsCases, Options, PolytopeCases, SuiteReport, EVEN_CASES, SWEEP_CAPS,
};
use arcnerve_cli::table;

const GOLDEN: &str = include_str!("golden/nerve_homotopy_table.tsv");

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_suite(r: SuiteReport) -> Outcome {
    let detail = match r.failures.first() {
        None => format!("{} checks", r.checked),
        Some(f) => format!(
            "{} of {} checks failed, first: {f}",
            r.failures.len(),
            r.checked
        ),
    };
    Outcome {
        ok: r.passed(),
        detail,
    }
}

fn table_reproduction() -> Outcome {
    let got = table::render(18, 12, Variant::Nerve);
    let nontrivial = GOLDEN
        .lines()
        .skip(1)
        .flat_map(|l| l.split('\t').skip(1))
        .filter(|c| *c != "*")
        .count();
    let first_diff = got
        .lines()
        .zip(GOLDEN.lines())
        .position(|(a, b)| a != b)
        .map(|i| format!("first differing row {i}"));
    Outcome {
        ok: got == GOLDEN && nontrivial >= 72,
        detail: first_diff.unwrap_or_else(|| format!("{nontrivial} nontrivial cells identical")),
    }
}

fn scaling() -> Outcome {
    let mut problems = vec![];
    let big = time_reduction(1_000_000, 11, 1);
    if big.mutations > 8 * big.n {
        problems.push(format!("{} mutations for n = {}", big.mutations, big.n));
    }
    if big.sort_ms <= big.post_sort_ms {
        problems.push(format!(
            "n = 10^6: sort {:.0} ms does not dominate post-sort {:.0} ms",
            big.sort_ms, big.post_sort_ms
        ));
    }
    let rungs = ladder(15, 20, 7, 5);
    for r in &rungs {
        if r.mutations > 8 * r.n {
            problems.push(format!("{} mutations for n = {}", r.mutations, r.n));
        }
        if r.sort_ms <= r.post_sort_ms {
            problems.push(format!("n = {}: sort does not dominate", r.n));
        }
    }
    let growth: Vec<String> = rungs
        .windows(2)
        .map(|w| format!("{:.2}", w[1].post_sort_ms / w[0].post_sort_ms))
        .collect();
    let worst = worst_growth(&rungs);
    if worst > 2.5 {
        problems.push(format!(
            "post-sort growth {worst:.2}x per doubling exceeds 2.5x"
        ));
    }
    let summary = format!(
        "10^6 arcs: sort {:.0} ms, post-sort {:.0} ms, {} mutations; post-sort ratios per doubling [{}]",
        big.sort_ms,
        big.post_sort_ms,
        big.mutations,
        growth.join(", ")
    );
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            summary
        } else {
            format!("{}; {summary}", problems.join("; "))
        },
    }
}

fn main() {
    // `cargo test -- --list` and friends expect no output besides test names.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let opts = Options {
        caps: SWEEP_CAPS,
        fault: false,
    };
    type Check = Box<dyn Fn() -> Outcome>;
    let criteria: Vec<(&str, Option<Duration>, Check)> = vec![
        (
            "homotopy table n<=18 k<=12 matches golden",
            Some(Duration::from_secs(1)),
            Box::new(table_reproduction),
        ),
        (
            "oracle homology of N(n,k), n<=10",
            Some(Duration::from_secs(300)),
            Box::new(move || from_suite(suites::nerve_sweep(10, opts))),
        ),
        (
            "oracle homology of clique complexes, n<=10",
            Some(Duration::from_secs(300)),
            Box::new(move || from_suite(suites::clique_sweep(10, opts))),
        ),
        (
            "suspension recursion, n<=50",
            Some(Duration::from_secs(1)),
            Box::new(move || from_suite(suites::recursion(50, opts))),
        ),
        (
            "200 random collections, nerve and clique",
            Some(Duration::from_secs(600)),
            Box::new(move || from_suite(suites::random_collections(200, 2024, opts))),
        ),
        ("reduction scaling up to 10^6 arcs", None, Box::new(scaling)),
        (
            "even-case generators",
            Some(Duration::from_secs(120)),
            Box::new(move || from_suite(suites::generators(&EVEN_CASES, opts.caps))),
        ),
        (
            "cyclic polytope facets and odd-case generators",
            Some(Duration::from_secs(180)),
            Box::new(move || from_suite(suites::polytope(&PolytopeCases::default(), opts.caps))),
        ),
        (
            "dihedral symmetry",
            Some(Duration::from_secs(180)),
            Box::new(move || from_suite(suites::maps(&MapsCases::default(), opts.caps))),
        ),
        (
            "mod-n surjection, n+k<=11",
            Some(Duration::from_secs(300)),
            Box::new(move || from_suite(suites::surjection(11, opts.caps))),
        ),
        (
            "chromatic bound for K_{n/d}, n<=20",
            Some(Duration::from_secs(60)),
            Box::new(|| from_suite(suites::chromatic(20, 10))),
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut out = check();
        let took = t.elapsed();
        if let Some(limit) = limit {
            if took > *limit {
                out.ok = false;
                out.detail = format!("over time limit; {}", out.detail);
            }
        }
        let limit = limit.map_or("no limit".to_string(), |l| {
            format!("limit {}s", l.as_secs())
        });
        let status = if out.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status}: {name}: {} ({:.2}s, {limit})",
            i + 1,
            out.detail,
            took.as_secs_f64()
        );
        failed += usize::from(!out.ok);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    let strict = std::env::var("ARCNERVE_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    if failed > 0 && strict {
        std::process::exit(1);
    }
}
