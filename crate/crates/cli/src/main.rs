//! Batch front end over the species cohomology engine.

mod report;
mod suites;

use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use species_cohomology::deform::{check_deformation, integrate};
use species_cohomology::koszul::{self, KoszulCochain};
use species_cohomology::oracle::{cobar_complex, truncated_cohomology, Cochain, CochainEval, FunctionalCochain};
use species_cohomology::products::{cup_koszul, schubert_cocycle, size_product_cocycle};
use species_cohomology::{Bicomodule, Engine, Error, Rational, Structure};

use report::*;

#[derive(Parser)]
#[command(name = "species-cohomology", version, about = "Exact cohomology of species bicomodules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Method {
    Koszul,
    Oracle,
}

#[derive(Copy, Clone, ValueEnum)]
enum Suite {
    #[value(name = "koszul-vs-oracle")]
    KoszulVsOracle,
    Coxeter,
    Cobar,
    #[value(name = "cup-relations")]
    CupRelations,
    Deformation,
    Kunneth,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology table of a species up to a degree
    Cohomology {
        #[arg(long)]
        species: String,
        #[arg(long = "max-degree")]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "koszul")]
        method: Method,
        /// Arity bound for the oracle method (default: degree + 1 per degree)
        #[arg(long)]
        truncation: Option<usize>,
        /// Lift the default per-species degree caps
        #[arg(long = "allow-heavy")]
        allow_heavy: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the table as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long = "max-arity")]
        max_arity: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structure constants of the cup product in two degrees
    Cup {
        #[arg(long)]
        species: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graded homology of the cobar construction at one arity
    Cobar {
        #[arg(long)]
        species: String,
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integrate a 2-cocycle into a weak deformation and check the equations
    Deform {
        #[arg(long)]
        species: String,
        /// `schubert`, `cardinality-sq`, or a path to a cocycle file
        #[arg(long)]
        cocycle: String,
        #[arg(long)]
        order: usize,
        #[arg(long = "max-arity", default_value = "4")]
        max_arity: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Species registry operations
    Species {
        #[command(subcommand)]
        action: SpeciesAction,
    },
}

#[derive(Subcommand)]
enum SpeciesAction {
    /// Validate and register a species document
    Add {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    init_thread_pool();
    let cli = Cli::parse();
    let engine = Engine::new();
    let outcome = match cli.command {
        Command::Cohomology { species, max_degree, method, truncation, allow_heavy, out, csv } => {
            run_cohomology(&engine, &species, max_degree, method, truncation, allow_heavy, out, csv)
        }
        Command::Verify { suite, max_arity, out } => run_verify(&engine, suite, max_arity, out),
        Command::Cup { species, p, q, out } => run_cup(&engine, &species, p, q, out),
        Command::Cobar { species, arity, out } => run_cobar(&engine, &species, arity, out),
        Command::Deform { species, cocycle, order, max_arity, out } => {
            run_deform(&engine, &species, &cocycle, order, max_arity, out)
        }
        Command::Species { action } => match action {
            SpeciesAction::Add { file, out } => run_species_add(&engine, &file, out),
        },
    };
    match outcome {
        Ok(ok) => std::process::exit(if ok { 0 } else { 1 }),
        Err(e) => {
            let report = ErrorReport { error: e.to_string(), ok: false };
            eprintln!("{}", serde_json::to_string_pretty(&report).unwrap());
            std::process::exit(1);
        }
    }
}

fn init_thread_pool() {
    if let Ok(val) = std::env::var("SPECIES_COHOMOLOGY_THREADS") {
        if let Ok(threads) = val.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
            }
        }
    }
}

/// Resolves `--species`: a registered id, a product expression, or a path to
/// a species document.
fn resolve_species(engine: &Engine, spec: &str) -> Result<Arc<dyn Bicomodule>, Error> {
    if spec.ends_with(".json") || Path::new(spec).is_file() {
        let id = engine.add_custom_file(Path::new(spec))?;
        return engine.resolve(&id);
    }
    engine.resolve(spec)
}

fn emit<T: serde::Serialize>(report: &T, out: Option<PathBuf>) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(report).expect("reports serialize");
    match out {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{}", text),
    }
    Ok(())
}

/// Degree caps keeping default runs under control; `--allow-heavy` lifts them.
fn degree_cap(species: &Arc<dyn Bicomodule>, method: Method) -> usize {
    let id = species.id();
    match method {
        Method::Koszul => match id {
            "Gr" => 6,
            _ => 8,
        },
        Method::Oracle => match id {
            "Gr" => 4,
            "E" => 6,
            _ => 5,
        },
    }
}

#[allow(clippy::too_many_arguments)]
fn run_cohomology(
    engine: &Engine,
    species: &str,
    max_degree: usize,
    method: Method,
    truncation: Option<usize>,
    allow_heavy: bool,
    out: Option<PathBuf>,
    csv: Option<PathBuf>,
) -> Result<bool, Error> {
    let start = Instant::now();
    let sp = resolve_species(engine, species)?;
    let cap = degree_cap(&sp, method);
    if max_degree > cap && !allow_heavy {
        return Err(Error::IndexOutOfRange(format!(
            "degree {} for `{}` exceeds the default cap {}; pass --allow-heavy to proceed",
            max_degree,
            sp.id(),
            cap
        )));
    }
    let mut table = Vec::new();
    for degree in 0..=max_degree {
        let (dimension, reps) = match method {
            Method::Koszul => {
                let (dim, reps) = koszul::cohomology(engine, &sp, degree)?;
                (dim, reps.iter().map(|f| describe_koszul(&sp, f)).collect::<Vec<_>>())
            }
            Method::Oracle => {
                let bound = truncation.unwrap_or(degree + 1).max(degree + 1);
                let (dim, reps) = truncated_cohomology(engine, &sp, degree, bound)?;
                (dim, reps.iter().map(describe_cochain).collect::<Vec<_>>())
            }
        };
        table.push(DegreeRow { degree, dimension, representatives: reps });
    }
    if let Some(path) = csv {
        let mut text = String::from("degree,dimension\n");
        for row in &table {
            text.push_str(&format!("{},{}\n", row.degree, row.dimension));
        }
        std::fs::write(path, text)?;
    }
    let report = CohomologyReport {
        species: sp.id().to_string(),
        method: match method {
            Method::Koszul => "koszul".into(),
            Method::Oracle => "oracle".into(),
        },
        table,
        witnesses: Vec::new(),
        timing_ms: start.elapsed().as_millis(),
        ok: true,
    };
    emit(&report, out)?;
    Ok(true)
}

fn describe_koszul(species: &Arc<dyn Bicomodule>, f: &KoszulCochain) -> String {
    let terms: Vec<String> = f
        .coeffs()
        .iter()
        .take(12)
        .map(|(payload, c)| {
            format!(
                "{}·[{}]",
                species_cohomology::linalg::rational_to_string(c),
                species.describe(&Structure::new(f.degree, payload.clone()))
            )
        })
        .collect();
    let suffix = if f.coeffs().len() > 12 { " + …" } else { "" };
    format!("{}{}", terms.join(" + "), suffix)
}

fn describe_cochain(alpha: &Cochain) -> String {
    let terms: Vec<String> = alpha
        .components()
        .take(12)
        .map(|(key, c)| {
            let blocks = species_cohomology::combinatorics::Decomposition::from_word(alpha.degree, &key.word);
            format!(
                "{}·[{} on {}]",
                species_cohomology::linalg::rational_to_string(c),
                blocks,
                key.payload
            )
        })
        .collect();
    let n = alpha.components().count();
    let suffix = if n > 12 { " + …" } else { "" };
    format!("{}{}", terms.join(" + "), suffix)
}

fn run_verify(
    engine: &Engine,
    suite: Suite,
    max_arity: Option<usize>,
    out: Option<PathBuf>,
) -> Result<bool, Error> {
    let start = Instant::now();
    let (name, checks) = match suite {
        Suite::KoszulVsOracle => ("koszul-vs-oracle", suites::koszul_vs_oracle(engine)?),
        Suite::Coxeter => ("coxeter", suites::coxeter(max_arity.unwrap_or(6))?),
        Suite::Cobar => ("cobar", suites::cobar(engine, max_arity.unwrap_or(4))?),
        Suite::CupRelations => ("cup-relations", suites::cup_relations(engine)?),
        Suite::Deformation => ("deformation", suites::deformation(engine, max_arity.unwrap_or(4))?),
        Suite::Kunneth => ("kunneth", suites::kunneth(engine, max_arity.unwrap_or(5))?),
    };
    let ok = checks.iter().all(|c| c.pass);
    let witnesses = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
        .collect();
    let report = VerifyReport {
        suite: name.to_string(),
        checks,
        witnesses,
        timing_ms: start.elapsed().as_millis(),
        ok,
    };
    emit(&report, out)?;
    Ok(ok)
}

fn run_cup(
    engine: &Engine,
    species: &str,
    p: usize,
    q: usize,
    out: Option<PathBuf>,
) -> Result<bool, Error> {
    let start = Instant::now();
    let sp = resolve_species(engine, species)?;
    let fs = koszul::basis(engine, &sp, p)?;
    let gs = koszul::basis(engine, &sp, q)?;
    let target = koszul::basis(engine, &sp, p + q)?;
    let mut table = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        for (j, g) in gs.iter().enumerate() {
            let product = cup_koszul(engine, &sp, f, g)?;
            let mut terms = Vec::new();
            for (k, h) in target.iter().enumerate() {
                let rep = h.coeffs().keys().next().expect("basis cochains have one term");
                if let Some(c) = product.coeffs().get(rep) {
                    terms.push(format!(
                        "{}·b{}^{}",
                        species_cohomology::linalg::rational_to_string(c),
                        p + q,
                        k
                    ));
                }
            }
            table.push(CupRow {
                f: format!("b{}^{}", p, i),
                g: format!("b{}^{}", q, j),
                expansion: if terms.is_empty() { "0".into() } else { terms.join(" + ") },
            });
        }
    }
    let report = CupReport {
        species: sp.id().to_string(),
        p,
        q,
        table,
        timing_ms: start.elapsed().as_millis(),
        ok: true,
    };
    emit(&report, out)?;
    Ok(true)
}

fn run_cobar(
    engine: &Engine,
    species: &str,
    arity: usize,
    out: Option<PathBuf>,
) -> Result<bool, Error> {
    let start = Instant::now();
    let sp = resolve_species(engine, species)?;
    if arity > 5 {
        return Err(Error::IndexOutOfRange(format!(
            "cobar complexes are built fully; arity {} is past the supported bound 5",
            arity
        )));
    }
    let cx = cobar_complex(&sp, arity)?;
    let squares = cx.differential_squares_to_zero();
    let dims = cx.homology_dims();
    let table = dims
        .iter()
        .enumerate()
        .map(|(q, &d)| CobarRow {
            word_length: q,
            homological_degree: arity as i64 - q as i64,
            module_dimension: cx.levels[q].len(),
            homology_dimension: d,
        })
        .collect();
    let report = CobarReport {
        species: sp.id().to_string(),
        arity,
        differential_squares_to_zero: squares,
        table,
        timing_ms: start.elapsed().as_millis(),
        ok: squares,
    };
    emit(&report, out)?;
    Ok(squares)
}

fn run_deform(
    engine: &Engine,
    species: &str,
    cocycle: &str,
    order: usize,
    max_arity: usize,
    out: Option<PathBuf>,
) -> Result<bool, Error> {
    let start = Instant::now();
    let sp = resolve_species(engine, species)?;
    let delta1 = resolve_cocycle(engine, &sp, cocycle, max_arity)?;
    let series = integrate(&sp, delta1, order, max_arity)?;
    let mut checks = Vec::new();
    let mut ok = true;
    for n in 0..=order {
        let witness = check_deformation(&sp, &series, n)?;
        let pass = witness.is_none();
        ok &= pass;
        checks.push(Check {
            name: format!("equation of order {}", n),
            pass,
            witness: witness.map(|w| {
                format!("fails at {} on {} with value {}", w.decomposition, w.structure, w.value)
            }),
        });
    }
    let series_desc = (1..=order)
        .map(|i| format!("Δ_{} = Δ_1^{} / {}!", i, i, i))
        .collect();
    let report = DeformReport {
        species: sp.id().to_string(),
        cocycle: cocycle.to_string(),
        order,
        max_arity,
        series: series_desc,
        checks,
        timing_ms: start.elapsed().as_millis(),
        ok,
    };
    emit(&report, out)?;
    Ok(ok)
}

fn resolve_cocycle(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    name: &str,
    max_arity: usize,
) -> Result<FunctionalCochain, Error> {
    match name {
        "schubert" => {
            if species.id() != "L" {
                return Err(Error::UnknownSpecies(format!(
                    "the `schubert` cocycle lives on L, not `{}`",
                    species.id()
                )));
            }
            Ok(schubert_cocycle())
        }
        "cardinality-sq" => Ok(size_product_cocycle()),
        path if path.ends_with(".json") || Path::new(path).is_file() => {
            load_cocycle_file(engine, species, Path::new(path), max_arity)
        }
        other => Err(Error::UnknownSpecies(format!(
            "unknown cocycle `{}`; expected `schubert`, `cardinality-sq`, or a file path",
            other
        ))),
    }
}

#[derive(serde::Deserialize)]
struct CocycleDoc {
    degree: usize,
    components: Vec<CocycleComponent>,
}

#[derive(serde::Deserialize)]
struct CocycleComponent {
    arity: usize,
    /// block-index word: entry `i` is the 1-based block of element `i + 1`
    word: Vec<u8>,
    /// index into the deterministic enumeration of structures at this arity
    structure: usize,
    value: String,
}

fn load_cocycle_file(
    engine: &Engine,
    species: &Arc<dyn Bicomodule>,
    path: &Path,
    max_arity: usize,
) -> Result<FunctionalCochain, Error> {
    let doc: CocycleDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    if doc.degree != 2 {
        return Err(Error::SpeciesDocument {
            path: "degree".into(),
            message: "deformation cocycles have degree 2".into(),
        });
    }
    let mut stored = Cochain::zero(engine, species, 2, max_arity)?;
    for (i, comp) in doc.components.iter().enumerate() {
        if comp.arity > max_arity || comp.word.len() != comp.arity {
            return Err(Error::SpeciesDocument {
                path: format!("components[{}]", i),
                message: "arity out of bounds or word length mismatch".into(),
            });
        }
        let f = species_cohomology::combinatorics::Decomposition::from_word(2, &comp.word);
        let structures = species.structures(comp.arity);
        let Some(z) = structures.get(comp.structure) else {
            return Err(Error::SpeciesDocument {
                path: format!("components[{}].structure", i),
                message: format!("index {} out of range", comp.structure),
            });
        };
        let value = Rational::from_str(&comp.value).map_err(|e| Error::SpeciesDocument {
            path: format!("components[{}].value", i),
            message: e.to_string(),
        })?;
        stored.set_component(&f, z, value);
    }
    let stored = Arc::new(stored);
    Ok(FunctionalCochain::new(2, move |f, z| stored.eval(f, z)))
}

fn run_species_add(engine: &Engine, file: &Path, out: Option<PathBuf>) -> Result<bool, Error> {
    let start = Instant::now();
    let id = engine.add_custom_file(file)?;
    let sp = engine.resolve(&id)?;
    let max_arity = sp.arity_bound().unwrap_or(0);
    let structure_counts = (0..=max_arity).map(|n| sp.structures(n).len()).collect();
    let report = SpeciesAddReport {
        species: id,
        registered: true,
        cosymmetric: sp.cosymmetric(),
        max_arity,
        structure_counts,
        timing_ms: start.elapsed().as_millis(),
        ok: true,
    };
    emit(&report, out)?;
    Ok(true)
}
