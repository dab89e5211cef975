use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use edgereg::even::{colon_generators, even_connected};
use edgereg::homology::HomologyError;
use edgereg::invariants::{induced_matching_number, matching_number, maximum_induced_matching};
use edgereg::verify::{run_suite, RecordLevel};
use edgereg::{BettiCache, BettiEngine, EdgeProduct, EngineConfig, Error, Field, Graph, MonomialIdeal, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "edgereg", version, about = "Regularity of powers of edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(clap::Args)]
struct EngineArgs {
    #[arg(long, default_value = "gf2")]
    field: Field,
    /// Face budget per upper-Koszul complex.
    #[arg(long, default_value_t = EngineConfig::default().max_faces)]
    budget_faces: usize,
    /// Multidegree budget per ideal.
    #[arg(long, default_value_t = EngineConfig::default().max_multidegrees)]
    budget_multidegrees: usize,
    /// Compute over both fields and report disagreements.
    #[arg(long)]
    cross_check: bool,
}

impl EngineArgs {
    fn config(&self) -> EngineConfig {
        EngineConfig {
            field: self.field,
            cross_check: self.cross_check,
            max_faces: self.budget_faces,
            max_multidegrees: self.budget_multidegrees,
            ..EngineConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Regularity of I^s for a graph's edge ideal or a monomial ideal.
    Reg {
        /// Graph descriptor (`cycle:5`), inline ideal (`x1*x2,x2*x3`), or file.
        input: String,
        #[arg(long, default_value_t = 1)]
        power: usize,
        /// Also print the Betti table.
        #[arg(long)]
        betti: bool,
        /// Print multigraded Betti numbers instead of the coarse table.
        #[arg(long)]
        multigraded: bool,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Generators of (I^{s+1} : M) for an edge product M.
    Colon {
        graph: String,
        /// Edges of M, e.g. "2-3,1-2".
        #[arg(long)]
        product: String,
    },
    /// Polarization of a monomial ideal.
    Polarize { input: String },
    /// Induced matching number (and matching number).
    Nu { graph: String },
    /// Whether two vertices are even-connected with respect to M.
    EvenConnect {
        graph: String,
        #[arg(long)]
        product: String,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        pair: Vec<usize>,
    },
    /// Run a verification suite.
    Verify {
        /// forest, cycle, lower-bound, hamiltonian, colon, square, ci, decomposition or induction
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_s: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random graphs per vertex count above the exhaustive range.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Keep every record or only failures.
        #[arg(long, default_value = "all")]
        records: String,
        /// Record per-instance wall time (makes reports non-reproducible).
        #[arg(long)]
        timings: bool,
        /// Write the JSON report here.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else if matches!(e, Error::Homology(HomologyError::SelfCheck(_))) {
            Failure::Violation(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

macro_rules! fail {
    ($e:expr) => {
        Failure::from(Error::from($e))
    };
}

enum Input {
    Graph(Graph),
    Ideal(MonomialIdeal),
}

fn read_input(arg: &str) -> Result<Input, Failure> {
    let (text, from_file) = if Path::new(arg).is_file() {
        (fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?, true)
    } else {
        (arg.to_string(), false)
    };
    let trimmed = text.trim_start();
    if trimmed.starts_with("vars") {
        return MonomialIdeal::parse_machine(&text).map(Input::Ideal).map_err(|e| fail!(e));
    }
    if trimmed.contains('x') {
        let lines = if from_file { text } else { text.replace(',', "\n") };
        return MonomialIdeal::parse_text(&lines, None).map(Input::Ideal).map_err(|e| fail!(e));
    }
    Graph::from_descriptor(&text).map(Input::Graph).map_err(|e| fail!(e))
}

fn read_graph(arg: &str) -> Result<Graph, Failure> {
    match read_input(arg)? {
        Input::Graph(g) => Ok(g),
        Input::Ideal(_) => Err(Failure::Usage(format!("`{arg}` is an ideal; a graph is required"))),
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global().map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let format = cli.format;
    match cli.command {
        Command::Reg { input, power, betti, multigraded, cache_dir, engine } => {
            let base = match read_input(&input)? {
                Input::Graph(g) if g.edge_count() == 0 => return Err(Failure::Usage("graph has no edges".into())),
                Input::Graph(g) => MonomialIdeal::edge_ideal(&g),
                Input::Ideal(i) => i,
            };
            if power == 0 {
                return Err(Failure::Usage("--power must be at least 1".into()));
            }
            let ideal = base.power(power).map_err(|e| fail!(e))?;
            if ideal.is_unit() || ideal.is_zero() {
                return Err(fail!(if ideal.is_unit() { HomologyError::UnitIdeal } else { HomologyError::ZeroIdeal }));
            }
            let config = engine.config();
            let engine = BettiEngine::new(config);
            let table = match cache_dir {
                Some(dir) => BettiCache::open(dir).and_then(|c| c.get_or_compute(&engine, &ideal, config.field)).map_err(|e| fail!(e))?.0,
                None => engine.betti_table(&ideal).map_err(|e| fail!(e))?,
            };
            let reg = table.regularity().expect("nonzero ideal");
            match format {
                Format::Table => {
                    println!("{reg}");
                    if betti {
                        print!("{}", if multigraded { table.to_csv(true) } else { table.render_grid() });
                    }
                }
                Format::Csv => {
                    if betti {
                        print!("{}", table.to_csv(multigraded));
                    } else {
                        println!("power,regularity\n{power},{reg}");
                    }
                }
                Format::Json => {
                    let mut doc = json!({
                        "schema": "edgereg.reg/1",
                        "ideal": base.to_string(),
                        "power": power,
                        "field": config.field,
                        "regularity": reg,
                        "quotient_regularity": table.quotient_regularity(),
                    });
                    if betti {
                        doc["betti"] = serde_json::from_str(&table.to_json(multigraded)).expect("valid json");
                    }
                    print_json(&doc);
                }
            }
        }
        Command::Colon { graph, product } => {
            let g = read_graph(&graph)?;
            let m = EdgeProduct::parse(&g, &product).map_err(|e| fail!(e))?;
            let colon = colon_generators(&g, &m).map_err(|e| fail!(e))?;
            let extra: Vec<_> = colon
                .generators()
                .iter()
                .filter_map(|gen| {
                    let sup = gen.support();
                    let (u, v) = (sup[0], *sup.last().unwrap());
                    (sup.len() == 1 || !g.has_edge(u, v)).then(|| (gen.to_string(), even_connected(&g, &m, u, v).expect("generator is certified")))
                })
                .collect();
            match format {
                Format::Json => print_json(&json!({
                    "schema": "edgereg.colon/1",
                    "product": m.to_string(),
                    "generators": colon.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "even_connected": extra.iter().map(|(gen, c)| json!({"generator": gen, "certificate": c})).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    println!("generator,certificate");
                    for gen in colon.generators() {
                        let cert = extra.iter().find(|(g2, _)| *g2 == gen.to_string()).map_or(String::new(), |(_, c)| c.render());
                        println!("{gen},{cert}");
                    }
                }
                Format::Table => {
                    for gen in colon.generators() {
                        match extra.iter().find(|(g2, _)| *g2 == gen.to_string()) {
                            Some((_, c)) => println!("{gen}  via {}", c.render()),
                            None => println!("{gen}"),
                        }
                    }
                }
            }
        }
        Command::Polarize { input } => {
            let ideal = match read_input(&input)? {
                Input::Graph(g) => MonomialIdeal::edge_ideal(&g),
                Input::Ideal(i) => i,
            };
            let map = ideal.polarize();
            match format {
                Format::Json => print_json(&json!({
                    "schema": "edgereg.polarize/1",
                    "source": ideal.to_string(),
                    "target": map.render_target(),
                    "nvars": map.target.nvars(),
                    "new_variables": map.slots.iter().enumerate().map(|(k, _)| map.variable_name(ideal.nvars() + k + 1)).collect::<Vec<_>>(),
                })),
                Format::Csv => print!("{}", map.target.to_machine()),
                Format::Table => println!("{}", map.render_target()),
            }
        }
        Command::Nu { graph } => {
            let g = read_graph(&graph)?;
            let nu = induced_matching_number(&g);
            match format {
                Format::Json => print_json(&json!({
                    "schema": "edgereg.nu/1",
                    "induced_matching_number": nu,
                    "matching_number": matching_number(&g),
                    "induced_matching": maximum_induced_matching(&g),
                })),
                Format::Csv => println!("nu,beta\n{nu},{}", matching_number(&g)),
                Format::Table => println!("{nu}"),
            }
        }
        Command::EvenConnect { graph, product, pair } => {
            let g = read_graph(&graph)?;
            let m = EdgeProduct::parse(&g, &product).map_err(|e| fail!(e))?;
            let (u, v) = (pair[0], pair[1]);
            for x in [u, v] {
                if x == 0 || x > g.vertex_count() {
                    return Err(Failure::Usage(format!("vertex {x} out of range 1..={}", g.vertex_count())));
                }
            }
            let cert = even_connected(&g, &m, u, v);
            match format {
                Format::Json => print_json(&json!({
                    "schema": "edgereg.even/1",
                    "pair": [u, v],
                    "product": m.to_string(),
                    "even_connected": cert.is_some(),
                    "certificate": cert,
                })),
                _ => match cert {
                    Some(c) => println!("{}", c.render()),
                    None => println!("not even-connected"),
                },
            }
        }
        Command::Verify { suite, max_n, max_s, seed, samples, records, timings, output, engine } => {
            let records = match records.as_str() {
                "all" => RecordLevel::All,
                "failures" => RecordLevel::Failures,
                other => return Err(Failure::Usage(format!("--records must be all or failures (got {other})"))),
            };
            let config = SuiteConfig { max_n, max_s, seed, samples, records, timings, engine: engine.config() };
            let report = run_suite(suite, &config).map_err(|e| fail!(e))?;
            let json = report.to_json();
            match &output {
                Some(path) => fs::write(path, &json).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                None if format == Format::Json => println!("{json}"),
                None => {}
            }
            if format != Format::Json || output.is_some() {
                println!("{}", report.summary());
            }
            return Ok(ExitCode::from(report.exit_code() as u8));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("violation: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget exceeded: {msg}");
            ExitCode::from(3)
        }
    }
}
