//! Command-line front end: loads JSON descriptions of complexes, maps, and
//! graphs, runs the verification pipelines, and prints human tables or JSON
//! reports. Exit codes: 0 pass or expected failure, 1 check failure,
//! 2 input error, 3 capacity.

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;
use toric_split::decomposition::Verdict;
use toric_split::enumerate::{random_complex, random_lambda};
use toric_split::graph::{compare_graphs, path_graph, star_graph, verify_graph_corollary};
use toric_split::lambda::rp2_lambda;
use toric_split::{
    bbcg_check, verify_main, Error, FieldSpec, LambdaMap, Result, SimpleGraph,
    SimplicialComplex, VertexSet, DEFAULT_MAX_CELLS,
};

#[derive(Parser)]
#[command(
    name = "toric-split",
    version,
    about = "Exact Betti-number verification of stable splittings of real toric spaces"
)]
struct Cli {
    /// Emit a JSON report instead of human-readable tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on simplicial complexes given as {"m", "facets"} JSON.
    Complex {
        #[command(subcommand)]
        cmd: ComplexCmd,
    },
    /// Check that the quotient, invariant, and subcomplex-sum Betti numbers
    /// agree for one complex, map, and coefficient choice.
    Verify(VerifyArgs),
    /// The graph-associahedron pipeline for {"nodes", "edges"} JSON.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Canned demonstrations with built-in inputs.
    Demo {
        #[command(subcommand)]
        cmd: DemoCmd,
    },
    /// Seeded randomized verification sweep.
    Suite(SuiteArgs),
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// Reduced Betti numbers of the complex itself.
    Betti {
        /// Path to the complex JSON.
        #[arg(long = "in")]
        input: String,
        /// Coefficient field: q for the rationals, or f2, f3, f5, f<P>.
        #[arg(long, default_value = "q")]
        field: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Path to the complex JSON ({"m", "facets"}).
    #[arg(long = "k")]
    complex: String,
    /// Path to the map JSON ({"n", "m", "rows"}).
    #[arg(long = "lambda")]
    lambda: String,
    /// Characteristic: 0 for rational coefficients, else a prime.
    #[arg(long, default_value_t = 0)]
    p: u64,
}

#[derive(Subcommand)]
enum GraphCmd {
    /// List the tubes (proper connected induced subgraphs).
    Tubes {
        #[arg(long = "in")]
        input: String,
    },
    /// The a-numbers a_0, a_1, … of the graph.
    ANumbers {
        #[arg(long = "in")]
        input: String,
    },
    /// Full verification: summand-by-summand homology, Betti numbers
    /// against a-numbers, and the subcomplex sum.
    Verify {
        #[arg(long = "in")]
        input: String,
        /// Characteristic: 0 or an odd prime.
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
    /// Verify two graphs and compare their decompositions.
    Compare {
        #[arg(long = "in")]
        input: String,
        #[arg(long = "in2")]
        input2: String,
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum DemoCmd {
    /// The projective-plane example: passes away from 2, breaks at 2.
    Rp2,
    /// Two different graphs with identical decompositions.
    P4VsClaw,
    /// The unquotiented splitting, valid in every characteristic.
    Bbcg,
}

#[derive(Args)]
struct SuiteArgs {
    /// RNG seed; equal seeds give identical runs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random (complex, map) pairs.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Largest vertex universe to draw from.
    #[arg(long = "max-m", default_value_t = 6)]
    max_m: u32,
    /// Comma-separated fields for the main identity (characteristic ≠ 2).
    #[arg(long, default_value = "q,f3,f5")]
    fields: String,
    /// Also check the unquotiented splitting over f2 and q per sample.
    #[arg(long, default_value_t = false)]
    bbcg: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {path}: {e}")))
}

fn max_cells() -> Result<usize> {
    match std::env::var("TORIC_SPLIT_MAX_CELLS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("TORIC_SPLIT_MAX_CELLS={v} is not a cell count"))),
        Err(_) => Ok(DEFAULT_MAX_CELLS),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let cells = max_cells()?;
    match cli.command {
        Command::Complex { cmd } => match cmd {
            ComplexCmd::Betti { input, field } => {
                let k = SimplicialComplex::from_json(&read_file(&input)?)?;
                let spec = FieldSpec::parse_name(&field)?;
                let betti = k.reduced_betti(spec)?;
                if cli.json {
                    let doc = serde_json::json!({
                        "m": k.m(),
                        "faces": k.face_count(),
                        "dim": k.dim(),
                        "field": spec.to_string(),
                        "reduced_betti": betti,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                } else {
                    println!(
                        "complex on [{}]: {} faces, dimension {}",
                        k.m(),
                        k.face_count(),
                        k.dim()
                    );
                    println!("reduced Betti over {spec}: {betti}");
                }
                Ok(0)
            }
        },
        Command::Verify(args) => {
            let k = SimplicialComplex::from_json(&read_file(&args.complex)?)?;
            let l = LambdaMap::from_json(&read_file(&args.lambda)?)?;
            let spec = FieldSpec::from_p(args.p)?;
            let report = verify_main(&k, &l, spec, cells)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("{report}");
            }
            Ok(report.exit_code() as u8)
        }
        Command::Graph { cmd } => run_graph(cmd, cli.json, cells),
        Command::Demo { cmd } => run_demo(cmd, cli.json, cells),
        Command::Suite(args) => run_suite(args, cli.json, cells),
    }
}

fn odd_field(p: u64) -> Result<FieldSpec> {
    if p == 2 {
        return Err(Error::input(
            "the graph statement needs characteristic ≠ 2; pass --p 0 or an odd prime",
        ));
    }
    FieldSpec::from_p(p)
}

fn run_graph(cmd: GraphCmd, json: bool, cells: usize) -> Result<u8> {
    match cmd {
        GraphCmd::Tubes { input } => {
            let g = SimpleGraph::from_json(&read_file(&input)?)?;
            let tubes = g.tubes();
            if json {
                let doc = serde_json::json!({
                    "nodes": g.node_count(),
                    "distinguished": g.distinguished(),
                    "tubes": tubes,
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!(
                    "{} tubes of the {}-node graph (distinguished node {}):",
                    tubes.len(),
                    g.node_count(),
                    g.distinguished()
                );
                for (i, t) in tubes.iter().enumerate() {
                    println!("  {:>3}: {t}", i + 1);
                }
            }
            Ok(0)
        }
        GraphCmd::ANumbers { input } => {
            let g = SimpleGraph::from_json(&read_file(&input)?)?;
            let a = toric_split::a_numbers(&g);
            if json {
                let doc = serde_json::json!({"a_numbers": a});
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("a-numbers: {a:?}");
            }
            Ok(0)
        }
        GraphCmd::Verify { input, p } => {
            let g = SimpleGraph::from_json(&read_file(&input)?)?;
            let report = verify_graph_corollary(&g, odd_field(p)?, cells)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("{report}");
            }
            Ok(report.exit_code() as u8)
        }
        GraphCmd::Compare { input, input2, p } => {
            let g1 = SimpleGraph::from_json(&read_file(&input)?)?;
            let g2 = SimpleGraph::from_json(&read_file(&input2)?)?;
            let report = compare_graphs(&g1, &g2, odd_field(p)?, cells)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("first graph:\n{}", report.first);
                println!("second graph:\n{}", report.second);
                println!(
                    "a-numbers equal: {}; summand multisets equal: {}",
                    yes_no(report.a_numbers_equal),
                    yes_no(report.summand_multisets_equal)
                );
                println!(
                    "comparison: {}",
                    if report.equivalent {
                        "EQUIVALENT"
                    } else {
                        "NOT EQUIVALENT"
                    }
                );
            }
            Ok(report.exit_code() as u8)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn triangle_boundary() -> SimplicialComplex {
    let vs = |v: &[u32]| VertexSet::from_vertices(v, 3).unwrap();
    SimplicialComplex::from_facets(3, &[vs(&[1, 2]), vs(&[2, 3]), vs(&[1, 3])]).unwrap()
}

fn run_demo(cmd: DemoCmd, json: bool, cells: usize) -> Result<u8> {
    match cmd {
        DemoCmd::Rp2 => {
            let k = triangle_boundary();
            let l = rp2_lambda();
            let at3 = verify_main(&k, &l, FieldSpec::Prime(3), cells)?;
            let at2 = verify_main(&k, &l, FieldSpec::Prime(2), cells)?;
            if json {
                let doc = serde_json::json!({"p3": at3, "p2": at2});
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("boundary of the triangle with the projective-plane map");
                println!("(quotient of the 1-sphere-like cube model by a free involution)\n");
                println!("--- odd characteristic ---\n{at3}\n");
                println!("--- characteristic 2 ---\n{at2}");
            }
            let ok = at3.verdict == Verdict::Pass && at2.verdict == Verdict::ExpectedFail;
            Ok(if ok { 0 } else { 1 })
        }
        DemoCmd::P4VsClaw => {
            let p4 = path_graph(4)?;
            let claw = star_graph(4, 4)?;
            let report = compare_graphs(&p4, &claw, FieldSpec::Prime(3), cells)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("path on four nodes:\n{}", report.first);
                println!("\nstar with three leaves:\n{}", report.second);
                println!(
                    "\nsame a-numbers: {}; same summand multiset: {} => {}",
                    yes_no(report.a_numbers_equal),
                    yes_no(report.summand_multisets_equal),
                    if report.equivalent {
                        "EQUIVALENT"
                    } else {
                        "NOT EQUIVALENT"
                    }
                );
            }
            Ok(report.exit_code() as u8)
        }
        DemoCmd::Bbcg => {
            let k = triangle_boundary();
            let over_2 = bbcg_check(&k, FieldSpec::Prime(2), cells)?;
            let over_q = bbcg_check(&k, FieldSpec::Rational, cells)?;
            let id = LambdaMap::identity(3);
            let quotient_view = verify_main(&k, &id, FieldSpec::Prime(2), cells)?;
            if json {
                let doc = serde_json::json!({
                    "f2": over_2,
                    "q": over_q,
                    "identity_map_verify_f2": quotient_view,
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("unquotiented splitting on the triangle boundary");
                println!("(sum over every index set; holds in characteristic 2 as well)\n");
                println!("{over_2}\n\n{over_q}\n");
                println!("identity map, so the quotient is the space itself:\n{quotient_view}");
            }
            let ok = over_2.verdict == Verdict::Pass
                && over_q.verdict == Verdict::Pass
                && quotient_view.verdict == Verdict::Pass;
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn run_suite(args: SuiteArgs, json: bool, cells: usize) -> Result<u8> {
    let specs: Vec<FieldSpec> = args
        .fields
        .split(',')
        .map(FieldSpec::parse_name)
        .collect::<Result<_>>()?;
    if let Some(bad) = specs.iter().find(|s| s.characteristic() == 2) {
        return Err(Error::input(format!(
            "suite fields must avoid characteristic 2 (got {bad}); use --bbcg for the f2 check"
        )));
    }
    if args.max_m < 2 || args.max_m > 8 {
        return Err(Error::input("--max-m must be between 2 and 8"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut failures = Vec::new();
    let mut lines = Vec::new();
    for sample in 0..args.samples {
        let m = rng.gen_range(2..=args.max_m);
        let k = random_complex(&mut rng, m, m as usize);
        let n = rng.gen_range(1..=m);
        let l = random_lambda(&mut rng, n, m);
        let mut verdicts = Vec::new();
        for spec in &specs {
            let report = verify_main(&k, &l, *spec, cells)?;
            if report.verdict != Verdict::Pass {
                failures.push(format!(
                    "sample {sample}: field {spec}, facets {:?}, rows {:?}",
                    k.facets(),
                    l.rows()
                ));
            }
            verdicts.push((spec.to_string(), report.verdict));
        }
        if args.bbcg {
            for spec in [FieldSpec::Prime(2), FieldSpec::Rational] {
                let report = bbcg_check(&k, spec, cells)?;
                if report.verdict != Verdict::Pass {
                    failures.push(format!(
                        "sample {sample}: unquotiented splitting over {spec}, facets {:?}",
                        k.facets()
                    ));
                }
                verdicts.push((format!("bbcg/{spec}"), report.verdict));
            }
        }
        lines.push(serde_json::json!({
            "sample": sample,
            "m": m,
            "n": n,
            "verdicts": verdicts.iter().map(|(f, v)| {
                serde_json::json!({"field": f, "verdict": v})
            }).collect::<Vec<_>>(),
        }));
    }
    let ok = failures.is_empty();
    if json {
        let doc = serde_json::json!({
            "seed": args.seed,
            "samples": args.samples,
            "all_pass": ok,
            "failures": failures,
            "runs": lines,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!(
            "suite: seed {}, {} samples, m ≤ {}, fields {}{}",
            args.seed,
            args.samples,
            args.max_m,
            args.fields,
            if args.bbcg { " + unquotiented f2/q" } else { "" }
        );
        for f in &failures {
            println!("FAIL {f}");
        }
        println!(
            "{}",
            if ok {
                "all samples PASS"
            } else {
                "some samples FAILED"
            }
        );
    }
    Ok(if ok { 0 } else { 1 })
}
