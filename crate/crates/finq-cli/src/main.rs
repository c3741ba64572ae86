//! Command-line front end for the finq library: permutation groups,
//! character tables, representation decomposition, Born probabilities,
//! interference search, and mixing-table analysis. Every command prints a
//! JSON report with alphabetically ordered keys so identical inputs give
//! byte-identical output.

use std::panic::AssertUnwindSafe;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use finq::born;
use finq::classalg::{character_table, ConjugacyClasses};
use finq::cyclo::Cyclotomic;
use finq::mix::{Deviation, MagnitudeTable, MixTable};
use finq::perm::{FiniteGroup, Permutation, DEFAULT_CAP};
use finq::rep::{decompose, PermRepresentation};
use finq::Error;

#[derive(Parser)]
#[command(name = "finq", version, about = "exact arithmetic for finite-group quantum models")]
struct Cli {
    /// write the JSON report to this file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// add approximate decimal renderings alongside exact values
    #[arg(long, global = true)]
    float: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a permutation group and report its class structure
    Group(GroupArgs),
    /// Compute the character table of a permutation group
    Chartab(GroupArgs),
    /// Split a permutation representation into irreducible blocks
    Decompose(DecomposeArgs),
    /// Born probability for a pair of natural-number states
    Born(BornArgs),
    /// Enumerate destructive interference pairs
    Interfere(InterfereArgs),
    /// Analyze mixing probability tables
    Mixing(MixingArgs),
}

#[derive(Args)]
struct GroupArgs {
    /// number of points acted on; inferred from the generators when omitted
    #[arg(long)]
    degree: Option<usize>,

    /// generators in cycle notation, e.g. "(1,2,3)"
    #[arg(required = true, value_name = "GENERATOR")]
    generators: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ActionKind {
    /// action on the points themselves
    Natural,
    /// action of the group on its own elements
    Regular,
    /// action on the cosets of a subgroup
    Coset,
}

#[derive(Args)]
struct DecomposeArgs {
    /// number of points acted on; inferred from the generators when omitted
    #[arg(long)]
    degree: Option<usize>,

    /// which permutation action to decompose
    #[arg(long, value_enum, default_value_t = ActionKind::Natural)]
    action: ActionKind,

    /// subgroup generators for the coset action (repeatable)
    #[arg(long, value_name = "GENERATOR")]
    subgroup: Vec<String>,

    /// generators in cycle notation
    #[arg(required = true, value_name = "GENERATOR")]
    generators: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Subspace {
    /// the whole state space
    Full,
    /// the complement of the uniform direction
    Complement,
}

#[derive(Args)]
struct BornArgs {
    /// first state as comma-separated naturals, e.g. 1,3,2
    #[arg(long, value_name = "STATE")]
    m: String,

    /// second state as comma-separated naturals
    #[arg(long, value_name = "STATE")]
    n: String,

    /// subspace the detector is confined to
    #[arg(long, value_enum, default_value_t = Subspace::Full)]
    subspace: Subspace,

    /// number of points; must match the state length when given
    #[arg(long)]
    degree: Option<usize>,

    /// optional generators of a symmetry group acting on the same points
    #[arg(value_name = "GENERATOR")]
    generators: Vec<String>,
}

#[derive(Args)]
struct InterfereArgs {
    /// number of state components
    #[arg(long)]
    degree: usize,

    /// largest component value searched
    #[arg(long)]
    bound: u64,

    /// worker threads for the search (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["table", "tribimaximal"]))]
struct MixingArgs {
    /// JSON file of measured magnitudes: {"source": ..., "entries": [[..]]}
    #[arg(value_name = "TABLE_FILE")]
    table: Option<PathBuf>,

    /// use the exact tribimaximal table
    #[arg(long)]
    tribimaximal: bool,

    /// run the structural pattern checks
    #[arg(long)]
    pattern: bool,

    /// tolerance for pattern checks on measured tables
    #[arg(long, default_value_t = 0.0)]
    tolerance: f64,

    /// compare against "identity", "tribimaximal", or a magnitudes file
    #[arg(long, value_name = "TABLE")]
    compare: Option<String>,
}

/// Failure with the exit code it maps to: 2 input, 3 cap, 4 internal.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidInput(_) | Error::DimensionMismatch(_) | Error::NotRational(_) => 2,
            Error::CapExceeded { .. } => 3,
            Error::Internal(_) => 4,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let code = match std::panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(())) => 0,
        Ok(Err(f)) => {
            eprintln!("error: {}", f.message);
            f.code
        }
        Err(_) => {
            eprintln!("error: internal invariant violated");
            4
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<(), Failure> {
    let report = match &cli.command {
        Command::Group(args) => group_report(args)?,
        Command::Chartab(args) => chartab_report(args, cli.float)?,
        Command::Decompose(args) => decompose_report(args, cli.float)?,
        Command::Born(args) => born_report(args, cli.float)?,
        Command::Interfere(args) => interfere_report(args)?,
        Command::Mixing(args) => mixing_report(args, cli.float)?,
    };
    emit(&report, cli.output.as_deref())
}

fn emit(report: &Value, output: Option<&Path>) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(report)
        .map_err(|e| Failure { code: 4, message: format!("serialization failed: {e}") })?;
    text.push('\n');
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Group-order cap: FINQ_CAP when set, the library default otherwise.
fn cap() -> Result<usize, Failure> {
    match std::env::var("FINQ_CAP") {
        Ok(s) => s
            .parse::<usize>()
            .map_err(|_| Failure::input(format!("FINQ_CAP must be a nonnegative integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

/// Degree given explicitly, or the largest point named in the generators.
fn resolve_degree(texts: &[String], degree: Option<usize>) -> Result<usize, Failure> {
    if let Some(d) = degree {
        if d == 0 {
            return Err(Failure::input("degree must be at least 1"));
        }
        return Ok(d);
    }
    let mut max = 1usize;
    for text in texts {
        for token in text.split(|c: char| !c.is_ascii_digit()) {
            if token.is_empty() {
                continue;
            }
            let p: usize = token
                .parse()
                .map_err(|_| Failure::input(format!("point {token:?} out of range")))?;
            max = max.max(p);
        }
    }
    Ok(max)
}

fn parse_generators(
    texts: &[String],
    degree: Option<usize>,
) -> Result<(usize, Vec<Permutation>), Failure> {
    let degree = resolve_degree(texts, degree)?;
    let gens = texts
        .iter()
        .map(|t| Permutation::parse(t, degree))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((degree, gens))
}

fn build_group(texts: &[String], degree: Option<usize>) -> Result<FiniteGroup, Failure> {
    let (_, gens) = parse_generators(texts, degree)?;
    Ok(FiniteGroup::generate(&gens, cap()?)?)
}

fn class_summaries(g: &FiniteGroup, classes: &ConjugacyClasses) -> Vec<Value> {
    (0..classes.count())
        .map(|i| {
            let rep = classes.representative(i);
            json!({
                "element_order": g.element_order(rep),
                "representative": g.element(rep).cycle_string(),
                "size": classes.size(i),
            })
        })
        .collect()
}

fn group_report(args: &GroupArgs) -> Result<Value, Failure> {
    let g = build_group(&args.generators, args.degree)?;
    let classes = ConjugacyClasses::new(&g);
    let r = classes.count();
    let coefficients: Vec<Vec<Vec<u64>>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| (0..r).map(|k| classes.coefficient(&g, i, j, k)).collect())
                .collect()
        })
        .collect();
    let generators: Vec<String> = g
        .generator_indices()
        .iter()
        .map(|&i| g.element(i).cycle_string())
        .collect();
    Ok(json!({
        "class_coefficients": coefficients,
        "classes": class_summaries(&g, &classes),
        "degree": g.degree(),
        "exponent": g.exponent(),
        "generators": generators,
        "order": g.order(),
    }))
}

fn cyc_value(c: &Cyclotomic) -> Value {
    serde_json::to_value(c).expect("cyclotomic serialization is infallible")
}

fn cyc_float(c: &Cyclotomic) -> Value {
    let z = c.to_float();
    json!([z.re, z.im])
}

fn chartab_report(args: &GroupArgs, float: bool) -> Result<Value, Failure> {
    let g = build_group(&args.generators, args.degree)?;
    let table = character_table(&g)?;
    let rows: Vec<Vec<Value>> = table
        .rows()
        .iter()
        .map(|row| row.iter().map(cyc_value).collect())
        .collect();
    let mut report = json_map(json!({
        "classes": class_summaries(&g, table.classes()),
        "degree": g.degree(),
        "dimensions": table.dimensions(),
        "exponent": table.exponent(),
        "order": g.order(),
        "prime": table.prime(),
        "rows": rows,
    }));
    if float {
        let rows_float: Vec<Vec<Value>> = table
            .rows()
            .iter()
            .map(|row| row.iter().map(cyc_float).collect())
            .collect();
        report.insert("rows_float".into(), json!(rows_float));
    }
    Ok(Value::Object(report))
}

fn json_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object expected"),
    }
}

fn decompose_report(args: &DecomposeArgs, float: bool) -> Result<Value, Failure> {
    let g = build_group(&args.generators, args.degree)?;
    if matches!(args.action, ActionKind::Coset) == args.subgroup.is_empty() {
        return Err(Failure::input(
            "--subgroup is required for the coset action and meaningless otherwise",
        ));
    }
    let (rep, action_name) = match args.action {
        ActionKind::Natural => (PermRepresentation::natural(&g), "natural"),
        ActionKind::Regular => (PermRepresentation::regular(&g), "regular"),
        ActionKind::Coset => {
            let gens = args
                .subgroup
                .iter()
                .map(|t| Permutation::parse(t, g.degree()))
                .collect::<Result<Vec<_>, _>>()?;
            let sub = FiniteGroup::generate(&gens, g.order())?;
            let indices = sub
                .elements()
                .iter()
                .map(|p| {
                    g.index_of(p).ok_or_else(|| {
                        Failure::input(format!("subgroup element {p} lies outside the group"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let action = g.coset_action(&indices)?;
            (PermRepresentation::from_action(&g, &action)?, "coset")
        }
    };
    let dec = decompose(&rep)?;
    let blocks: Vec<Value> = dec
        .blocks
        .iter()
        .map(|b| {
            json!({
                "character": b.character,
                "dimension": b.dimension,
                "multiplicity": b.multiplicity,
                "span": b.span(),
            })
        })
        .collect();
    let mut report = json_map(json!({
        "action": action_name,
        "blocks": blocks,
        "degree": rep.dimension(),
        "multiplicities": dec.multiplicities,
        "order": g.order(),
        "permutation_character": dec.permutation_character,
        "transform": serde_json::to_value(&dec.transform).expect("matrix serialization"),
    }));
    if float {
        let rows: Vec<Vec<Value>> = (0..dec.transform.rows())
            .map(|i| (0..dec.transform.cols()).map(|j| cyc_float(dec.transform.entry(i, j))).collect())
            .collect();
        report.insert("transform_float".into(), json!(rows));
    }
    Ok(Value::Object(report))
}

fn parse_state(text: &str) -> Result<Vec<u64>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Failure::input(format!("state component {t:?} is not a natural number")))
        })
        .collect()
}

fn born_report(args: &BornArgs, float: bool) -> Result<Value, Failure> {
    let m = parse_state(&args.m)?;
    let n = parse_state(&args.n)?;
    if let Some(d) = args.degree {
        if d != m.len() {
            return Err(Failure::input(format!(
                "degree {d} does not match state length {}",
                m.len()
            )));
        }
    }
    let mut report = json_map(json!({
        "m": m,
        "n": n,
        "subspace": match args.subspace {
            Subspace::Full => "full",
            Subspace::Complement => "complement",
        },
    }));
    if !args.generators.is_empty() {
        let (_, gens) = parse_generators(&args.generators, Some(m.len()))?;
        let g = FiniteGroup::generate(&gens, cap()?)?;
        report.insert("group_order".into(), json!(g.order()));
    }
    let probability = match args.subspace {
        Subspace::Full => born::born_full(&m, &n)?,
        Subspace::Complement => born::born_complement(&m, &n)?,
    };
    if float {
        report.insert("probability_float".into(), json!(probability.to_f64()));
    }
    report.insert("probability".into(), Value::String(probability.to_string()));
    Ok(Value::Object(report))
}

fn interfere_report(args: &InterfereArgs) -> Result<Value, Failure> {
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err(Failure::input("--jobs must be at least 1"));
        }
        // ignore failure: the global pool can only be installed once
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let solutions = born::interference_solutions(args.degree, args.bound);
    Ok(json!({
        "bound": args.bound,
        "count": solutions.len(),
        "degree": args.degree,
        "solutions": solutions,
    }))
}

fn load_magnitudes(path: &Path) -> Result<MixTable, Failure> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let table: MagnitudeTable = serde_json::from_str(&raw)
        .map_err(|e| Failure::input(format!("bad magnitude table {}: {e}", path.display())))?;
    Ok(MixTable::from(table))
}

fn mixing_report(args: &MixingArgs, float: bool) -> Result<Value, Failure> {
    let table = if args.tribimaximal {
        MixTable::tribimaximal()
    } else {
        let path = args.table.as_ref().expect("clap enforces the source group");
        load_magnitudes(path)?
    };
    let mut report = Map::new();
    report.insert(
        "table".into(),
        serde_json::to_value(&table).expect("table serialization"),
    );
    if args.pattern {
        let flags = table.pattern_check(args.tolerance)?;
        report.insert(
            "pattern".into(),
            serde_json::to_value(flags).expect("flags serialization"),
        );
        report.insert("tolerance".into(), json!(args.tolerance));
    }
    if let Some(target) = &args.compare {
        let other = match target.as_str() {
            "identity" => MixTable::identity(),
            "tribimaximal" => MixTable::tribimaximal(),
            path => load_magnitudes(Path::new(path))?,
        };
        let deviation = match table.deviation(&other) {
            Deviation::Exact(r) => Value::String(r.to_string()),
            Deviation::Approximate(x) => json!(x),
        };
        report.insert("compare".into(), json!(target));
        report.insert("deviation".into(), deviation);
    }
    if float {
        report.insert("moduli_squared_float".into(), json!(table.moduli_squared_f64()));
    }
    Ok(Value::Object(report))
}
