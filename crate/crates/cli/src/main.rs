//! `orbiclass`: command-line front end.
//!
//! Exit codes: 0 success, 1 validation or usage error, 2 BFS cap exceeded,
//! 3 verification found violations.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        write!(std::io::stdout().lock(), $($arg)*)
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        writeln!(std::io::stdout().lock(), $($arg)*)
    }};
}

use orbiclass::classify::{
    self, orientable_pair_invariant, CensusConstraints, CensusParams, ClassifyError, VerifyParams,
};
use orbiclass::datum::{self, cover_genus, parse_documents, RawDatum};
use orbiclass::invariants::InvariantTuple;
use orbiclass::moves::{self, BfsLimits, OrbitError, WitnessError};
use orbiclass::{MonodromyDatum, OrientableQuotientDatum};

mod table;

use table::Table;

#[derive(Parser)]
#[command(
    name = "orbiclass",
    version,
    about = "Classify periodic orientation-reversing surface homeomorphisms from monodromy data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text tables.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for census and verify.
    #[arg(long, global = true, value_name = "INT")]
    threads: Option<usize>,

    /// Maximum number of states one orbit search may visit.
    #[arg(long = "bfs-cap", global = true, value_name = "INT", default_value_t = moves::DEFAULT_BFS_CAP)]
    bfs_cap: usize,
}

#[derive(Args)]
struct InArg {
    /// Path to a JSON document, or the JSON text itself.
    #[arg(long = "in", value_name = "PATH")]
    input: String,
}

#[derive(Args)]
struct PairArgs {
    /// First datum (path or inline JSON).
    #[arg(long, value_name = "PATH")]
    a: String,
    /// Second datum (path or inline JSON).
    #[arg(long, value_name = "PATH")]
    b: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check data against the admissibility rules.
    Validate(InArg),
    /// Print the invariant tuple of each datum.
    Invariants(InArg),
    /// Decide whether two data are topologically equivalent.
    Equivalent(PairArgs),
    /// List the H1–H4 orbit of a datum.
    Orbit(InArg),
    /// Find a shortest move sequence from one datum to another.
    Witness(PairArgs),
    /// Enumerate equivalence classes.
    Census {
        #[arg(long = "two-q", value_name = "INT")]
        two_q: u32,
        #[arg(long, value_name = "INT")]
        genus: usize,
        /// Number of cone points.
        #[arg(long, value_name = "INT")]
        r: Option<usize>,
        /// Required cone orders, e.g. `2,4`.
        #[arg(long = "cone-orders", value_name = "CSV", value_delimiter = ',')]
        cone_orders: Option<Vec<u32>>,
        #[arg(long = "max-cover-genus", value_name = "INT")]
        max_cover_genus: Option<i64>,
    },
    /// Compare invariant classes with move orbits for genera 1..=GENUS and
    /// cone counts 0..=R.
    Verify {
        #[arg(long = "two-q", value_name = "INT")]
        two_q: u32,
        #[arg(long, value_name = "INT")]
        genus: usize,
        #[arg(long, value_name = "INT")]
        r: usize,
    },
    /// Evaluate the embeddability criterion.
    Embeddable(InArg),
    /// Isotropy pair of an orientable quotient with boundary.
    OrientablePair(InArg),
    /// Euler characteristic and genus of the covering surface.
    CoverGenus(InArg),
}

fn read_source(source: &str) -> Result<String> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(source.to_string());
    }
    fs::read_to_string(Path::new(source)).with_context(|| format!("cannot read {source}"))
}

fn is_array(text: &str) -> bool {
    text.trim_start().starts_with('[')
}

fn load_data(source: &str) -> Result<(Vec<MonodromyDatum>, bool)> {
    let text = read_source(source)?;
    let data = parse_documents(&text).with_context(|| format!("invalid datum in {source}"))?;
    Ok((data, is_array(&text)))
}

fn load_one(source: &str) -> Result<MonodromyDatum> {
    let (mut data, _) = load_data(source)?;
    if data.len() != 1 {
        bail!("{source}: expected one datum, found {}", data.len());
    }
    Ok(data.remove(0))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    outln!("{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn h1_text(t: &InvariantTuple) -> String {
    t.h1.map_or("undefined".into(), |v| v.to_string())
}

fn h2_text(t: &InvariantTuple) -> String {
    match &t.h2 {
        None => "-".into(),
        Some(h) => format!("{{{}}} mod {}", join(&h.values), h.modulus),
    }
}

fn datum_text(d: &MonodromyDatum) -> String {
    format!("d=[{}] x=[{}]", join(&d.d_values()), join(&d.x_values()))
}

fn tuple_table(t: &InvariantTuple) -> Table {
    let mut table = Table::new(["field", "value"]);
    table.row(["two_q".into(), t.two_q.to_string()]);
    table.row(["genus".into(), t.genus.to_string()]);
    table.row(["isotropy".into(), format!("[{}]", join(&t.isotropy))]);
    table.row(["h1".into(), h1_text(t)]);
    table.row(["l".into(), t.l.to_string()]);
    table.row(["h2".into(), h2_text(t)]);
    table.row(["h2_applicable".into(), t.h2_applicable.to_string()]);
    table.row(["cover_genus".into(), t.cover_genus.to_string()]);
    table
}

fn validate(source: &str, json_out: bool) -> Result<ExitCode> {
    let text = read_source(source)?;
    let raws: Vec<RawDatum> =
        parse_documents(&text).with_context(|| format!("malformed document in {source}"))?;
    let mut results = Vec::new();
    let mut all_valid = true;
    for raw in &raws {
        match datum::validate(raw) {
            Ok(d) => results.push(json!({"valid": true, "datum": d, "errors": []})),
            Err(e) => {
                all_valid = false;
                results.push(json!({"valid": false, "datum": null, "errors": e.0}));
            }
        }
    }
    if json_out {
        if is_array(&text) {
            print_json(&results)?;
        } else {
            print_json(&results[0])?;
        }
    } else {
        let mut table = Table::new(["#", "status", "detail"]);
        for (k, (raw, res)) in raws.iter().zip(&results).enumerate() {
            if res["valid"] == true {
                let d = datum::validate(raw).expect("validated above");
                table.row([(k + 1).to_string(), "valid".into(), datum_text(&d)]);
            } else {
                let errors = datum::validate(raw).unwrap_err();
                for (n, e) in errors.0.iter().enumerate() {
                    let label = if n == 0 { "invalid" } else { "" };
                    let idx = if n == 0 {
                        (k + 1).to_string()
                    } else {
                        String::new()
                    };
                    table.row([idx, label.into(), e.to_string()]);
                }
            }
        }
        out!("{table}")?;
    }
    Ok(if all_valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn invariants(source: &str, json_out: bool) -> Result<ExitCode> {
    let (data, batch) = load_data(source)?;
    let tuples: Vec<InvariantTuple> = data.iter().map(orbiclass::invariant_tuple).collect();
    if json_out {
        if batch {
            print_json(&tuples)?;
        } else {
            print_json(&tuples[0])?;
        }
    } else {
        for (k, (d, t)) in data.iter().zip(&tuples).enumerate() {
            if k > 0 {
                outln!()?;
            }
            outln!("{d}")?;
            out!("{}", tuple_table(t))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn equivalent(args: &PairArgs, json_out: bool) -> Result<ExitCode> {
    let a = load_one(&args.a)?;
    let b = load_one(&args.b)?;
    let verdict = classify::equivalent(&a, &b)?;
    if json_out {
        print_json(&json!({
            "equivalent": verdict,
            "a": orbiclass::invariant_tuple(&a),
            "b": orbiclass::invariant_tuple(&b),
        }))?;
    } else {
        outln!(
            "{}",
            if verdict {
                "equivalent"
            } else {
                "inequivalent"
            }
        )?;
    }
    Ok(ExitCode::SUCCESS)
}

fn orbit(source: &str, json_out: bool, limits: BfsLimits) -> Result<ExitCode> {
    let d = load_one(source)?;
    let members = moves::orbit(&d, limits)?;
    if json_out {
        print_json(&json!({"size": members.len(), "members": members}))?;
    } else {
        outln!("orbit of {d}: {} members", members.len())?;
        let mut table = Table::new(["#", "d", "x"]);
        for (k, m) in members.iter().enumerate() {
            table.row([
                (k + 1).to_string(),
                format!("[{}]", join(&m.d_values())),
                format!("[{}]", join(&m.x_values())),
            ]);
        }
        out!("{table}")?;
    }
    Ok(ExitCode::SUCCESS)
}

fn witness(args: &PairArgs, json_out: bool, limits: BfsLimits) -> Result<ExitCode> {
    let a = load_one(&args.a)?;
    let b = load_one(&args.b)?;
    let path = moves::witness(&a, &b, limits)?;
    if json_out {
        print_json(&json!({"moves": path}))?;
    } else {
        match path {
            None => outln!("none")?,
            Some(p) if p.is_empty() => outln!("identity (no moves)")?,
            Some(p) => outln!(
                "{}",
                p.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            )?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn census(params: CensusParams, json_out: bool) -> Result<ExitCode> {
    let report = classify::census(&params)?;
    if json_out {
        print_json(&report)?;
        return Ok(ExitCode::SUCCESS);
    }
    outln!(
        "census 2q={} g={}: {} vectors, {} classes",
        params.two_q,
        params.genus,
        report.total_vectors,
        report.classes.len()
    )?;
    let mut table = Table::new([
        "#",
        "isotropy",
        "h1",
        "l",
        "h2",
        "cover g",
        "vectors",
        "representative",
    ]);
    for (k, c) in report.classes.iter().enumerate() {
        let t = &c.invariants;
        table.row([
            (k + 1).to_string(),
            format!("[{}]", join(&t.isotropy)),
            h1_text(t),
            t.l.to_string(),
            if t.h2_applicable {
                h2_text(t)
            } else {
                "-".into()
            },
            t.cover_genus.to_string(),
            c.vector_count.to_string(),
            datum_text(&c.representative),
        ]);
    }
    out!("{table}")?;
    for note in &report.notes {
        eprintln!("note: {note}");
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(params: VerifyParams, json_out: bool, limits: BfsLimits) -> Result<ExitCode> {
    let report = classify::verify_theorem(&params, limits)?;
    if json_out {
        print_json(&report)?;
    } else {
        outln!(
            "verify 2q={} g∈{:?} r∈{:?}: {} vectors, {} classes, {} orbits",
            params.two_q,
            params.genera,
            params.rs,
            report.total_vectors,
            report.classes.len(),
            report.total_orbits
        )?;
        let mut table = Table::new(["g", "isotropy", "h1", "h2", "vectors", "orbits"]);
        for c in &report.classes {
            let t = &c.invariants;
            table.row([
                t.genus.to_string(),
                format!("[{}]", join(&t.isotropy)),
                h1_text(t),
                if t.h2_applicable {
                    h2_text(t)
                } else {
                    "-".into()
                },
                c.vector_count.to_string(),
                c.orbit_count.to_string(),
            ]);
        }
        out!("{table}")?;
        outln!(
            "soundness violations: {}, completeness violations: {}",
            report.soundness_violations.len(),
            report.completeness_violations.len()
        )?;
    }
    for note in &report.notes {
        eprintln!("note: {note}");
    }
    if !report.soundness_violations.is_empty() {
        eprintln!("!!! SOUNDNESS VIOLATION: an orbit carries several invariant tuples !!!");
    }
    Ok(if report.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn embeddable(source: &str, json_out: bool) -> Result<ExitCode> {
    let d = load_one(source)?;
    let v = classify::embeddable(&d);
    if json_out {
        print_json(&v)?;
    } else {
        match v.condition {
            Some(c) => outln!("embeddable (condition {c})")?,
            None => outln!("not embeddable")?,
        }
        for note in &v.notes {
            outln!("  note: {note}")?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn orientable_pair(source: &str, json_out: bool) -> Result<ExitCode> {
    let text = read_source(source)?;
    let od: OrientableQuotientDatum = serde_json::from_str(&text)
        .with_context(|| format!("invalid orientable datum in {source}"))?;
    let pair = orientable_pair_invariant(&od);
    if json_out {
        print_json(&pair)?;
    } else {
        outln!("{{[{}], [{}]}}", join(&pair.first), join(&pair.second))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cover(source: &str, json_out: bool) -> Result<ExitCode> {
    let (data, batch) = load_data(source)?;
    let results: Vec<_> = data.iter().map(cover_genus).collect();
    if json_out {
        if batch {
            print_json(&results)?;
        } else {
            print_json(&results[0])?;
        }
    } else {
        let mut table = Table::new(["datum", "chi", "genus"]);
        for (d, c) in data.iter().zip(&results) {
            table.row([d.to_string(), c.chi.to_string(), c.genus_cover.to_string()]);
        }
        out!("{table}")?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let limits = BfsLimits {
        max_states: cli.bfs_cap,
    };
    let json_out = cli.json;
    match cli.command {
        Command::Validate(a) => validate(&a.input, json_out),
        Command::Invariants(a) => invariants(&a.input, json_out),
        Command::Equivalent(p) => equivalent(&p, json_out),
        Command::Orbit(a) => orbit(&a.input, json_out, limits),
        Command::Witness(p) => witness(&p, json_out, limits),
        Command::Census {
            two_q,
            genus,
            r,
            cone_orders,
            max_cover_genus,
        } => census(
            CensusParams {
                two_q,
                genus,
                constraints: CensusConstraints {
                    r,
                    cone_orders,
                    max_cover_genus,
                },
            },
            json_out,
        ),
        Command::Verify { two_q, genus, r } => {
            verify(VerifyParams::up_to(two_q, genus, r), json_out, limits)
        }
        Command::Embeddable(a) => embeddable(&a.input, json_out),
        Command::OrientablePair(a) => orientable_pair(&a.input, json_out),
        Command::CoverGenus(a) => cover(&a.input, json_out),
    }
}

fn is_limit(err: &anyhow::Error) -> bool {
    err.chain().any(|cause| {
        cause.downcast_ref::<OrbitError>().is_some()
            || matches!(
                cause.downcast_ref::<WitnessError>(),
                Some(WitnessError::Orbit(_))
            )
            || matches!(
                cause.downcast_ref::<ClassifyError>(),
                Some(ClassifyError::Orbit(_))
            )
    })
}

fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.downcast_ref::<std::io::Error>()
        .is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let pool = match cli.threads {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(code) => code,
        Err(err) if is_broken_pipe(&err) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(if is_limit(&err) { 2 } else { 1 })
        }
    }
}
