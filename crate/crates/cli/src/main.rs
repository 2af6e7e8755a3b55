use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gallai_core::algebra::{hilbert_series_with_limit, HILBERT_POINT_LIMIT};
use gallai_core::bijections::{
    btpt_to_gallai, dyck_to_syt, gallai_to_btpt, gallai_to_matching, matching_to_gallai, permutation_to_transitive2,
    rainbow_gallai_to_tournament, syt_to_dyck, tournament_to_rainbow_gallai, transitive2_to_permutation,
};
use gallai_core::enumeration::{
    enumerate_partitions, maximal_gallai_partitions_kn, maximal_transitive_partitions_tournament, tournament, Mode,
    Problem,
};
use gallai_core::input::{parse_family, parse_input_with_budget, Structure};
use gallai_core::matroid::{Family, OrientedMatroid, RootSystemId, VECTOR_SUBSET_BUDGET};
use gallai_core::partition::{Coloring, SetPartition};
use gallai_core::report::{all_pass, big_json, Check, CountReport};
use gallai_core::symfunc::{family_qsym, schur_expand, subset_key, syt_enumerate, IntPartition};
use gallai_core::verify::{run_suite, Suite, SuiteOptions, DEFAULT_SEED};
use gallai_core::Error;
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gallai", version, about = "Gallai and transitive colorings of matroids and oriented matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Gallai,
    Transitive,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Gallai => Mode::Gallai,
            ModeArg::Transitive => Mode::Transitive,
        }
    }
}

#[derive(Args)]
struct Source {
    /// JSON input document.
    #[arg(long, conflicts_with = "root")]
    input: Option<PathBuf>,
    /// Named root system: `A N` (tournament on N vertices), `B N`, `I2 N`.
    #[arg(long, num_args = 2, value_names = ["FAMILY", "N"])]
    root: Option<Vec<String>>,
    /// Largest number of column subsets scanned for vector circuits.
    #[arg(long)]
    budget_subsets: Option<u64>,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Circuits, rank, components and acyclicity.
    Circuits {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
    },
    /// Partition counts and the coloring polynomial.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "gallai")]
        mode: ModeArg,
        /// Number of colors.
        #[arg(short = 'k', long = "k")]
        k: Option<u64>,
        /// Number of valid partitions with exactly j blocks.
        #[arg(short = 'j', long = "j")]
        j: Option<usize>,
        /// Print the polynomial in both bases.
        #[arg(long)]
        poly: bool,
        /// Number of maximal (rank many blocks) partitions.
        #[arg(long)]
        maxpart: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        /// Reduced ranges.
        #[arg(long)]
        small: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Quasisymmetric generating function of descent sets of `K_n` (G) or
    /// tournament (T) partitions with k blocks.
    Qsym {
        #[arg(long, value_parser = ["G", "T"])]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(short = 'k', long = "k")]
        k: usize,
        /// Also expand in Schur functions.
        #[arg(long)]
        schur: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Filtered Hilbert series of the k-coloring function algebra.
    Hilbert {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "transitive")]
        mode: ModeArg,
        #[arg(short = 'k', long = "k")]
        k: usize,
        /// Largest number of coloring points.
        #[arg(long)]
        budget_points: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Apply or check a bijection on all objects of size n.
    Bijection {
        #[arg(value_parser = ["gallai-matching", "gallai-tree", "tournament-rainbow", "transitive-permutation", "syt-dyck"])]
        name: String,
        #[arg(long)]
        n: usize,
        /// Check round trips instead of listing images.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Verification(String),
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Budget { .. } => Failure::Budget(e.to_string()),
            Error::PrimeDisagreement(_) | Error::NotSymmetric | Error::InexactDivision(_) => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Out = Result<(String, bool), Failure>;

fn load(source: &Source) -> Result<Structure, Failure> {
    let budget = source.budget_subsets.unwrap_or(VECTOR_SUBSET_BUDGET);
    if source.budget_subsets.is_some() {
        eprintln!("warning: subset budget overridden to {budget}");
    }
    match (&source.input, &source.root) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            Ok(parse_input_with_budget(&text, budget)?)
        }
        (None, Some(r)) => {
            let family = parse_family(&r[0])?;
            let n: usize = r[1].parse().map_err(|_| Failure::Input(format!("bad root parameter {:?}", r[1])))?;
            let n = match family {
                Family::A if n == 0 => return Err(Failure::Input("A needs at least 1 vertex".into())),
                Family::A if n == 1 => return Ok(Structure::Oriented(tournament(1))),
                Family::A => n - 1,
                _ => n,
            };
            Ok(Structure::Oriented(OrientedMatroid::root_system(RootSystemId::new(family, n)?)?))
        }
        _ => Err(Failure::Input("give exactly one of --input or --root".into())),
    }
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn set_list(s: gallai_core::set::ElementSet) -> Value {
    json!(s.to_vec())
}

fn cmd_circuits(source: &Source, common: &Common) -> Out {
    let s = load(source)?;
    let m = s.matroid();
    let components: Vec<Value> = m.connected_components().blocks().into_iter().map(set_list).collect();
    let labels: Vec<String> = (0..m.size()).map(|e| m.ground().label(e)).collect();
    let (circuits, acyclic): (Vec<Value>, Option<bool>) = match s.oriented() {
        Some(om) => (
            om.signed_circuits().iter().map(|c| json!({"pos": c.pos.to_vec(), "neg": c.neg.to_vec()})).collect(),
            Some(om.is_acyclic()),
        ),
        None => (m.circuits().iter().map(|c| set_list(*c)).collect(), None),
    };
    let text = match common.format {
        Format::Json => json_text(&json!({
            "ground": m.size(),
            "labels": labels,
            "oriented": s.oriented().is_some(),
            "circuits": circuits,
            "rank": m.rank(),
            "components": components,
            "acyclic": acyclic,
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = match s.oriented() {
                Some(om) => om
                    .signed_circuits()
                    .iter()
                    .map(|c| vec![join(&c.pos.to_vec(), " "), join(&c.neg.to_vec(), " ")])
                    .collect(),
                None => m.circuits().iter().map(|c| vec![join(&c.to_vec(), " "), String::new()]).collect(),
            };
            table(&["pos", "neg"], rows)
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "ground: {} elements ({})", m.size(), labels.join(", "));
            let _ = writeln!(out, "rank: {}", m.rank());
            if circuits.is_empty() {
                out.push_str("no circuits\n");
            } else {
                let _ = writeln!(out, "{} circuits:", circuits.len());
                match s.oriented() {
                    Some(om) => {
                        for c in om.signed_circuits() {
                            let _ = writeln!(out, "  +{{{}}} -{{{}}}", names(c.pos, &labels), names(c.neg, &labels));
                        }
                    }
                    None => {
                        for c in m.circuits() {
                            let _ = writeln!(out, "  {{{}}}", names(*c, &labels));
                        }
                    }
                }
            }
            let _ = writeln!(out, "components: {}", components.len());
            if let Some(a) = acyclic {
                let _ = writeln!(out, "acyclic: {a}");
            }
            out
        }
    };
    Ok((text, true))
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn names(s: gallai_core::set::ElementSet, labels: &[String]) -> String {
    s.iter().map(|e| labels[e].clone()).collect::<Vec<_>>().join(", ")
}

fn cmd_count(source: &Source, mode: Mode, k: Option<u64>, j: Option<usize>, poly: bool, maxpart: bool, common: &Common) -> Out {
    let s = load(source)?;
    let p = s.problem(mode)?;
    let report = CountReport::compute(p, k)?;
    let pass = all_pass(&report.checks);
    let mut v = report.to_json();
    if !poly {
        if let Some(obj) = v.as_object_mut() {
            obj.remove("polynomial");
        }
    }
    if let Some(j) = j {
        v["partitions"] = json!({"j": j, "count": big_json(&report.polynomial.coeff(j))});
    }
    if maxpart {
        v["maxpart"] = big_json(&report.polynomial.coeff(report.rank));
    }
    let text = match common.format {
        Format::Json => json_text(&v),
        Format::Csv => table(
            &["j", "a_j"],
            report.polynomial.coeffs().iter().enumerate().skip(1).map(|(i, a)| vec![i.to_string(), a.to_string()]),
        ),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "mode: {mode}, size {}, rank {}", report.size, report.rank);
            let a: Vec<String> = (1..=report.rank).map(|i| report.polynomial.coeff(i).to_string()).collect();
            let _ = writeln!(out, "a = ({})", a.join(", "));
            if poly {
                let _ = writeln!(out, "falling: {}", join(report.polynomial.coeffs(), " "));
                let _ = writeln!(out, "standard: {}", report.polynomial.standard().display_in("x"));
            }
            if let Some(k) = k {
                let _ = writeln!(out, "count(k={k}): {}", report.polynomial.eval(k));
            }
            if let Some(j) = j {
                let _ = writeln!(out, "partitions(j={j}): {}", report.polynomial.coeff(j));
            }
            if maxpart {
                let _ = writeln!(out, "maximal partitions: {}", report.polynomial.coeff(report.rank));
            }
            out.push_str(&checks_text(&report.checks));
            out
        }
    };
    Ok((text, pass))
}

fn checks_text(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        if c.pass {
            let _ = writeln!(out, "PASS {}", c.name);
        } else {
            let _ = writeln!(out, "FAIL {}: expected {}, got {}", c.name, c.expected, c.actual);
        }
    }
    out
}

fn table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn cmd_verify(suite: &str, n: Option<usize>, small: bool, common: &Common) -> Out {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let opts = SuiteOptions {
        n,
        small,
        seed: common.seed,
    };
    let mut results: Vec<(Suite, Vec<Check>)> = suites.par_iter().map(|&s| (s, run_suite(s, &opts))).collect();
    results.sort_by_key(|(s, _)| s.name());
    let pass = results.iter().all(|(_, c)| all_pass(c));
    let text = match common.format {
        Format::Json => {
            let suites: serde_json::Map<String, Value> = results
                .iter()
                .map(|(s, c)| (s.name().to_string(), json!({"pass": all_pass(c), "checks": c})))
                .collect();
            json_text(&json!({"suites": suites, "pass": pass}))
        }
        Format::Csv => table(
            &["suite", "name", "expected", "actual", "pass"],
            results.iter().flat_map(|(s, c)| {
                c.iter().map(|x| vec![s.name().into(), x.name.clone(), x.expected.clone(), x.actual.clone(), x.pass.to_string()])
            }),
        ),
        Format::Text => {
            let mut out = String::new();
            for (s, c) in &results {
                let failed = c.iter().filter(|x| !x.pass).count();
                let _ = writeln!(out, "== {s}: {} ({} checks, {failed} failed)", if failed == 0 { "pass" } else { "FAIL" }, c.len());
                out.push_str(&checks_text(c));
            }
            let _ = writeln!(out, "{}", if pass { "all checks pass" } else { "some checks FAILED" });
            out
        }
    };
    Ok((text, pass))
}

fn cmd_qsym(family: &str, n: usize, k: usize, schur: bool, common: &Common) -> Out {
    let mode = if family == "G" { Mode::Gallai } else { Mode::Transitive };
    let q = family_qsym(mode, n, k)?;
    let expansion = if schur { Some(schur_expand(&q)?) } else { None };
    let pass = expansion.as_ref().map_or(true, |s| s.is_positive());
    let text = match common.format {
        Format::Json => {
            let mut v = serde_json::to_value(&q).expect("qsym serializes");
            if let Some(s) = &expansion {
                let sv = serde_json::to_value(s).expect("schur serializes");
                v["schur"] = sv["schur"].clone();
                v["positive"] = sv["positive"].clone();
            }
            json_text(&v)
        }
        Format::Csv => {
            let mut rows: Vec<Vec<String>> =
                q.sorted_terms().into_iter().map(|(j, c)| vec!["F".into(), subset_key(j), c.to_string()]).collect();
            if let Some(s) = &expansion {
                rows.extend(s.sorted_terms().into_iter().map(|(l, c)| vec!["s".into(), l.to_string(), c.to_string()]));
            }
            table(&["basis", "index", "coefficient"], rows)
        }
        Format::Text => {
            let mut out = format!("{q}\n");
            if let Some(s) = &expansion {
                let _ = writeln!(out, "{s}\npositive: {}", s.is_positive());
            }
            out
        }
    };
    Ok((text, pass))
}

fn cmd_hilbert(source: &Source, mode: Mode, k: usize, budget: Option<usize>, common: &Common) -> Out {
    let s = load(source)?;
    let p = s.problem(mode)?;
    let limit = budget.unwrap_or(HILBERT_POINT_LIMIT);
    if budget.is_some() {
        eprintln!("warning: point budget overridden to {limit}");
    }
    let h = hilbert_series_with_limit(p, k, common.seed, limit)?;
    let text = match common.format {
        Format::Json => json_text(&h.to_json()),
        Format::Csv => table(
            &["degree", "increment"],
            h.increments.iter().enumerate().map(|(d, x)| vec![d.to_string(), x.to_string()]),
        ),
        Format::Text => format!("{}\ndim: {}\n", h.polynomial(), h.dim),
    };
    Ok((text, h.agreed))
}

fn rgs(p: &SetPartition) -> Value {
    json!(p.to_rgs_string())
}

fn cmd_bijection(name: &str, n: usize, check: bool, common: &Common) -> Out {
    if n < 2 {
        return Err(Failure::Input("n must be at least 2".into()));
    }
    let mut items: Vec<(Value, Value)> = Vec::new();
    let mut failures: Vec<String> = Vec::new();
    match name {
        "gallai-matching" | "gallai-tree" => {
            for p in maximal_gallai_partitions_kn(n)? {
                let (image, back) = if name == "gallai-matching" {
                    let m = gallai_to_matching(&p)?;
                    let back = matching_to_gallai(&m, n)?;
                    (serde_json::to_value(&m).expect("matching serializes"), back)
                } else {
                    let t = gallai_to_btpt(&p)?;
                    let back = btpt_to_gallai(&t)?;
                    (serde_json::to_value(&t).expect("tree serializes"), back)
                };
                if back != p {
                    failures.push(p.to_rgs_string());
                }
                items.push((rgs(&p), image));
            }
        }
        "tournament-rainbow" => {
            for p in maximal_transitive_partitions_tournament(n)? {
                let g = tournament_to_rainbow_gallai(&p)?;
                if rainbow_gallai_to_tournament(&g)? != p {
                    failures.push(p.to_rgs_string());
                }
                items.push((rgs(&p), rgs(&g)));
            }
        }
        "transitive-permutation" => {
            let t = tournament(n);
            let mut parts: Vec<SetPartition> = enumerate_partitions(Problem::Transitive(&t), 2)?.collect();
            parts.push(enumerate_partitions(Problem::Transitive(&t), 1)?.next().expect("one block"));
            // each partition into at most two blocks gives two colorings
            for p in parts {
                for shift in 0..2 {
                    let values = p.rgs().iter().map(|&b| (b as usize + shift) % 2).collect();
                    let c = Coloring::new(values, 2)?;
                    let perm = transitive2_to_permutation(&c)?;
                    if permutation_to_transitive2(&perm)?.values() != c.values() {
                        failures.push(format!("{:?}", c.values()));
                    }
                    items.push((json!(c.values()), json!(perm)));
                }
            }
        }
        "syt-dyck" => {
            for t in syt_enumerate(&IntPartition::new(vec![n, n])?)? {
                let d = syt_to_dyck(&t)?;
                if dyck_to_syt(&d)? != t {
                    failures.push(format!("{:?}", t.rows()));
                }
                items.push((json!(t.rows()), json!(d.to_string())));
            }
        }
        _ => unreachable!("clap restricts names"),
    }
    let pass = failures.is_empty();
    let text = if check {
        match common.format {
            Format::Json => json_text(&json!({"bijection": name, "n": n, "round_trips": items.len(), "failures": failures, "pass": pass})),
            Format::Csv => table(
                &["bijection", "n", "round_trips", "failures"],
                [vec![name.to_string(), n.to_string(), items.len().to_string(), failures.len().to_string()]],
            ),
            Format::Text if pass => format!("{} round trips OK\n", items.len()),
            Format::Text => format!("{} round trips, {} failed: {}\n", items.len(), failures.len(), failures.join(" ")),
        }
    } else {
        match common.format {
            Format::Json => json_text(&Value::Array(items.iter().map(|(a, b)| json!({"from": a, "to": b})).collect())),
            Format::Csv => table(&["from", "to"], items.iter().map(|(a, b)| vec![plain(a), plain(b)])),
            Format::Text => items.iter().map(|(a, b)| format!("{} -> {}\n", plain(a), plain(b))).collect(),
        }
    };
    Ok((text, pass))
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run(cli: Cli) -> Out {
    match cli.command {
        Command::Circuits { source, common } => cmd_circuits(&source, &common),
        Command::Count {
            source,
            mode,
            k,
            j,
            poly,
            maxpart,
            common,
        } => cmd_count(&source, mode.into(), k, j, poly, maxpart, &common),
        Command::Verify { suite, n, small, common } => cmd_verify(&suite, n, small, &common),
        Command::Qsym {
            family,
            n,
            k,
            schur,
            common,
        } => cmd_qsym(&family, n, k, schur, &common),
        Command::Hilbert {
            source,
            mode,
            k,
            budget_points,
            common,
        } => cmd_hilbert(&source, mode.into(), k, budget_points, &common),
        Command::Bijection { name, n, check, common } => cmd_bijection(&name, n, check, &common),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((text, pass)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::from(if pass { 0 } else { 1 })
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
