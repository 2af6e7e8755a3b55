//! Acceptance criteria, one line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gallai_core::report::Check;
use gallai_core::verify::{self, DEFAULT_SEED};

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    blocking: bool,
    run: fn() -> Vec<Check>,
}

const SEED: u64 = DEFAULT_SEED;

fn c1() -> Vec<Check> {
    verify::rank_theorems(SEED, 200, 50)
}

fn c2() -> Vec<Check> {
    verify::polynomiality(SEED, 200, 50)
}

fn c3() -> Vec<Check> {
    verify::tournament_factorials(2..=7)
}

fn c4() -> Vec<Check> {
    verify::gallai_two_colorings(SEED, 100)
}

fn c5() -> Vec<Check> {
    verify::transitive_two_colorings(SEED, 100)
}

fn c6() -> Vec<Check> {
    verify::chambers(SEED, 30, 4)
}

fn c7() -> Vec<Check> {
    let mut out = verify::double_factorial_counts(2..=6, 2..=10);
    out.extend(verify::catalan_counts(2..=7, 2..=5));
    out.extend(verify::rainbow_paths(2..=5));
    out
}

fn c8() -> Vec<Check> {
    verify::qcatalan(2..=6)
}

fn c9() -> Vec<Check> {
    let mut out = verify::m1g(2..=6);
    out.extend(verify::m3d(2..=7));
    out.extend(verify::m3u(2..=6, 1..=5));
    out.extend(verify::pattern_321(2..=7));
    out.extend(verify::cycles(3..=8));
    out
}

fn c10() -> Vec<Check> {
    verify::bijections(2..=5)
}

fn c11() -> Vec<Check> {
    let mut out = verify::hilbert(1..=6, 1..=8, SEED);
    out.extend(verify::kj(2..=5, 2..=4, SEED));
    out.extend(verify::eulerian(2..=4, SEED));
    out
}

fn c12() -> Vec<Check> {
    verify::type_b(2..=4)
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "rank theorems", limit: Duration::from_secs(120), blocking: true, run: c1 },
        Criterion { id: 2, title: "polynomiality", limit: Duration::from_secs(120), blocking: true, run: c2 },
        Criterion { id: 3, title: "tournament 2-colorings = n!", limit: Duration::from_secs(60), blocking: true, run: c3 },
        Criterion { id: 4, title: "Gallai 2-colorings", limit: Duration::from_secs(60), blocking: true, run: c4 },
        Criterion { id: 5, title: "transitive 2-colorings", limit: Duration::from_secs(120), blocking: true, run: c5 },
        Criterion { id: 6, title: "chambers", limit: Duration::from_secs(120), blocking: true, run: c6 },
        Criterion { id: 7, title: "maximal counts", limit: Duration::from_secs(300), blocking: true, run: c7 },
        Criterion { id: 8, title: "q-Catalan", limit: Duration::from_secs(120), blocking: true, run: c8 },
        Criterion { id: 9, title: "Schur suite", limit: Duration::from_secs(300), blocking: true, run: c9 },
        Criterion { id: 10, title: "bijections", limit: Duration::from_secs(60), blocking: true, run: c10 },
        Criterion { id: 11, title: "Hilbert suite", limit: Duration::from_secs(600), blocking: true, run: c11 },
        Criterion { id: 12, title: "type B conjecture report", limit: Duration::from_secs(600), blocking: false, run: c12 },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let checks = (c.run)();
        let elapsed = start.elapsed();
        let bad: Vec<&Check> = checks.iter().filter(|x| !x.pass).collect();
        let in_time = elapsed <= c.limit;
        let pass = bad.is_empty() && in_time;
        println!(
            "criterion {:>2} {:<28} {} ({} checks, {:.1}s of {}s){}",
            c.id,
            c.title,
            if pass { "PASS" } else { "FAIL" },
            checks.len(),
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            if c.blocking { "" } else { " [report]" },
        );
        if !c.blocking {
            for x in &checks {
                println!("    {}: expected {} got {} match={}", x.name, x.expected, x.actual, x.pass);
            }
        }
        for x in &bad {
            println!("    failed {}: expected {} got {}", x.name, x.expected, x.actual);
        }
        if !pass {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
