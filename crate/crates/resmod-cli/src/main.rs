//! Command-line front end: singular fiber analysis, GIT stability, weighted
//! tree reduction, and wall-crossing replays, all speaking the library's JSON
//! schemas. Exit code 0 is success, 1 means a surface failed validation, 2
//! means the input could not be used at all.

use std::fmt::Display;
use std::fs;
use std::io::{self, IsTerminal, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use resmod::binform::QPoly;
use resmod::broken::Scenario;
use resmod::git::{self, MirandaClass, PointsClass};
use resmod::hassett::{self, TreeError, WeightedTree};
use resmod::parse::parse_coefficients;
use resmod::rational::Q;
use resmod::reduce::{self, ReduceError};
use resmod::walls::enumerate_walls;
use resmod::weierstrass::{data_from_affine, WeierstrassData};

#[derive(Parser)]
#[command(
    name = "resmod",
    version,
    about = "Rational elliptic surfaces: fibers, stability, walls, and reduction"
)]
struct Cli {
    /// Emit machine-readable JSON instead of tables
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the singular fibers of Weierstrass data
    Analyze {
        /// File with `A = ...; B = ...` text or JSON {"a": ..., "b": ...}; - reads stdin
        input: String,
    },
    /// List every wall on (1/12, 1] with its labels
    Walls,
    /// Coefficient-space stability of Weierstrass data
    GitWeierstrass {
        /// Weierstrass input as for analyze
        input: String,
    },
    /// Stability of the discriminant divisor as twelve points on the line
    GitPoints {
        /// Weierstrass input as for analyze
        input: String,
    },
    /// Weighted stability of a marked tree, reducing it when unstable
    Hassett {
        /// Tree JSON {components: [{id, marks: [{label, mult}]}], edges: [[i, j]]}
        input: String,
        /// Mark weight, an exact rational in (0, 1]
        #[arg(long)]
        weight: String,
    },
    /// Check a scenario file against the structural rules
    Validate {
        /// Scenario JSON; - reads stdin
        input: String,
    },
    /// Replay wall crossings on a scenario between two weights
    Reduce {
        /// Scenario JSON; - reads stdin
        input: String,
        /// Start weight; defaults to the weight stored in the scenario
        #[arg(long)]
        from: Option<String>,
        /// End weight; the default sits in the lowest chamber
        #[arg(long, default_value = "11/120")]
        to: String,
    },
    /// Name the boundary type of a scenario's surface
    Classify {
        /// Scenario JSON; - reads stdin
        input: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Display) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

fn main() -> ExitCode {
    // die quietly when the reader of a pipe goes away, like other line tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Analyze { input } => cmd_analyze(input, cli.json),
        Command::Walls => cmd_walls(cli.json),
        Command::GitWeierstrass { input } => cmd_git_weierstrass(input, cli.json),
        Command::GitPoints { input } => cmd_git_points(input, cli.json),
        Command::Hassett { input, weight } => cmd_hassett(input, weight, cli.json),
        Command::Validate { input } => cmd_validate(input, cli.json),
        Command::Reduce { input, from, to } => cmd_reduce(input, from.as_deref(), to, cli.json),
        Command::Classify { input } => cmd_classify(input, cli.json),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| input_error(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| input_error(format!("{path}: {e}")))
    }
}

/// Coefficient input: an expression, or the coefficients themselves from the
/// constant up.
#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffSpec {
    Expr(String),
    Coeffs(Vec<String>),
}

#[derive(Deserialize)]
struct CoeffFile {
    a: CoeffSpec,
    b: CoeffSpec,
}

fn poly_from_strings(coeffs: &[String]) -> Result<QPoly, Failure> {
    let mut parsed = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        parsed.push(c.parse::<Q>().map_err(input_error)?);
    }
    Ok(QPoly::new(parsed))
}

fn load_weierstrass(path: &str) -> Result<WeierstrassData, Failure> {
    let text = read_input(path)?;
    let (a, b) = if text.trim_start().starts_with('{') {
        let file: CoeffFile = serde_json::from_str(&text).map_err(input_error)?;
        let expr_of = |spec: &CoeffSpec| match spec {
            CoeffSpec::Expr(e) => Ok::<_, Failure>(e.clone()),
            CoeffSpec::Coeffs(c) => Ok(poly_from_strings(c)?.to_string()),
        };
        let joined = format!("A = {}; B = {}", expr_of(&file.a)?, expr_of(&file.b)?);
        parse_coefficients(&joined).map_err(input_error)?
    } else {
        parse_coefficients(&text).map_err(input_error)?
    };
    data_from_affine(&a, &b).map_err(input_error)
}

fn styled() -> bool {
    std::env::var("RESMOD_COLOR").map_or(true, |v| v != "0") && io::stdout().is_terminal()
}

fn heading(s: &str) -> String {
    if styled() {
        format!("\x1b[1m{s}\x1b[0m")
    } else {
        s.to_string()
    }
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn miranda_text(class: &MirandaClass) -> String {
    match class {
        MirandaClass::Stable => "stable".to_string(),
        MirandaClass::StrictlySemistable { coordinate } => {
            format!("strictly semistable, j = {coordinate}")
        }
        MirandaClass::Unstable => "unstable".to_string(),
    }
}

fn points_text(class: PointsClass) -> &'static str {
    match class {
        PointsClass::Stable => "stable",
        PointsClass::StrictlySemistable => "strictly semistable",
        PointsClass::Unstable => "unstable",
    }
}

fn place_text(p: &resmod::binform::Place) -> String {
    if p.is_rational_point() {
        format!("t = {p}")
    } else {
        p.to_string()
    }
}

fn cmd_analyze(input: &str, as_json: bool) -> Result<ExitCode, Failure> {
    let data = load_weierstrass(input)?;
    let config = data.fiber_configuration().map_err(input_error)?;
    let j = data.j_function();
    let miranda = git::miranda_class(&data).map_err(input_error)?;
    if as_json {
        print_json(&json!({
            "fibers": config,
            "j": j.constant_value(),
            "miranda": miranda,
        }));
        return Ok(ExitCode::SUCCESS);
    }
    let mut rows = vec![[
        "place".to_string(),
        "vA".to_string(),
        "vB".to_string(),
        "vD".to_string(),
        "type".to_string(),
        "minimal".to_string(),
    ]];
    for f in &config {
        rows.push([
            place_text(&f.place),
            f.v_a.to_string(),
            f.v_b.to_string(),
            f.v_d.to_string(),
            f.kodaira.to_string(),
            if f.minimal { "yes".into() } else { "no".into() },
        ]);
    }
    print_table(&rows);
    match j.constant_value() {
        Some(v) => println!("j: constant {v}"),
        None => println!("j: non-constant"),
    }
    println!("Miranda: {}", miranda_text(&miranda));
    Ok(ExitCode::SUCCESS)
}

fn print_table<const N: usize>(rows: &[[String; N]]) {
    let mut widths = [0usize; N];
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for (i, row) in rows.iter().enumerate() {
        let mut line = String::new();
        for (w, cell) in widths.iter().zip(row) {
            line.push_str(&format!("{cell:<w$}  "));
        }
        let line = line.trim_end().to_string();
        if i == 0 {
            println!("{}", heading(&line));
        } else {
            println!("{line}");
        }
    }
}

fn cmd_walls(as_json: bool) -> Result<ExitCode, Failure> {
    let walls = enumerate_walls();
    if as_json {
        print_json(&walls);
        return Ok(ExitCode::SUCCESS);
    }
    let mut rows = vec![[
        "a".to_string(),
        "approx".to_string(),
        "families".to_string(),
        "labels".to_string(),
    ]];
    for w in &walls {
        let mut families: Vec<&str> = w.labels.iter().map(|l| l.family()).collect();
        families.dedup();
        let labels: Vec<String> = w.labels.iter().map(|l| l.to_string()).collect();
        rows.push([
            w.value.to_string(),
            format!("{:.4}", w.value.approx_f64()),
            families.join(","),
            labels.join(", "),
        ]);
    }
    print_table(&rows);
    Ok(ExitCode::SUCCESS)
}

fn cmd_git_weierstrass(input: &str, as_json: bool) -> Result<ExitCode, Failure> {
    let data = load_weierstrass(input)?;
    let class = git::miranda_class(&data).map_err(input_error)?;
    if as_json {
        print_json(&class);
    } else {
        println!("Miranda: {}", miranda_text(&class));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_git_points(input: &str, as_json: bool) -> Result<ExitCode, Failure> {
    let data = load_weierstrass(input)?;
    let (divisor, class) = git::discriminant_image(&data);
    if as_json {
        let places: Vec<_> = divisor
            .iter()
            .map(|(p, m)| json!({ "place": p, "mult": m }))
            .collect();
        print_json(&json!({ "divisor": places, "class": class }));
        return Ok(ExitCode::SUCCESS);
    }
    let mut rows = vec![["place".to_string(), "mult".to_string(), "degree".to_string()]];
    for (p, m) in &divisor {
        rows.push([place_text(p), m.to_string(), p.degree().to_string()]);
    }
    print_table(&rows);
    println!("points GIT: {}", points_text(class));
    Ok(ExitCode::SUCCESS)
}

fn parse_weight(text: &str) -> Result<Q, Failure> {
    text.parse::<Q>()
        .map_err(|e| input_error(format!("weight {text:?}: {e}")))
}

fn cmd_hassett(input: &str, weight: &str, as_json: bool) -> Result<ExitCode, Failure> {
    let a = parse_weight(weight)?;
    if a <= Q::zero() || a > Q::one() {
        return Err(input_error(format!("weight {a} is outside (0, 1]")));
    }
    let text = read_input(input)?;
    let tree: WeightedTree = serde_json::from_str(&text).map_err(input_error)?;
    for c in tree.components() {
        for m in &c.marks {
            if &a * &Q::int(m.mult as i64) > Q::one() {
                return Err(input_error(format!(
                    "mark {:?} on component {} has weight {} > 1",
                    m.label,
                    c.id,
                    &a * &Q::int(m.mult as i64)
                )));
            }
        }
    }
    let stable = hassett::is_stable(&tree, &a);
    let reduction = if stable { Ok((tree.clone(), Vec::new())) } else { hassett::reduce_tree(&tree, &a) };
    match reduction {
        Ok((reduced, events)) => {
            if as_json {
                print_json(&json!({
                    "a": a,
                    "stableInput": stable,
                    "events": events,
                    "reduced": reduced,
                }));
                return Ok(ExitCode::SUCCESS);
            }
            println!("a = {a}");
            println!("input stable: {}", if stable { "yes" } else { "no" });
            for e in &events {
                match e {
                    hassett::ContractionEvent::LeafContracted { id, onto, stacked } => {
                        match stacked {
                            Some(m) => println!(
                                "contract leaf {id} onto {onto}, stacking {} as {:?}",
                                m.mult, m.label
                            ),
                            None => println!("contract unmarked leaf {id} onto {onto}"),
                        }
                    }
                    hassett::ContractionEvent::BridgeContracted { id, joined } => {
                        println!("contract bridge {id}, joining {} and {}", joined.0, joined.1)
                    }
                }
            }
            for c in reduced.components() {
                let mut mults: Vec<u32> = c.marks.iter().map(|m| m.mult).collect();
                mults.sort_unstable_by(|x, y| y.cmp(x));
                println!("component {}: multiplicities {mults:?}", c.id);
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(TreeError::Collapse) => {
            if as_json {
                print_json(&json!({ "a": a, "stableInput": false, "collapse": true }));
            } else {
                println!("a = {a}");
                println!("input stable: no");
                println!("the whole curve contracts to a point at this weight");
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => Err(input_error(e)),
    }
}

fn load_scenario(path: &str) -> Result<Scenario, Failure> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(input_error)
}

fn cmd_validate(input: &str, as_json: bool) -> Result<ExitCode, Failure> {
    let sc = load_scenario(input)?;
    let report = sc.surface.validate();
    if as_json {
        print_json(&json!({ "valid": report.is_valid(), "violations": report.violations }));
    } else if report.is_valid() {
        println!("valid");
    } else {
        for v in &report.violations {
            println!("{v}");
        }
    }
    Ok(if report.is_valid() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_reduce(input: &str, from: Option<&str>, to: &str, as_json: bool) -> Result<ExitCode, Failure> {
    let sc = load_scenario(input)?;
    let from = match from {
        Some(text) => parse_weight(text)?,
        None => sc.surface.weight.clone(),
    };
    let to = parse_weight(to)?;
    match reduce::run(&sc.surface, &from, &to) {
        Ok((surface, events)) => {
            if as_json {
                print_json(&json!({ "events": events, "surface": surface }));
                return Ok(ExitCode::SUCCESS);
            }
            println!("run: a = {from} -> {to}");
            for e in &events {
                println!("{e}");
            }
            let n = surface.components.len();
            println!(
                "final: {n} component{} at a = {}",
                if n == 1 { "" } else { "s" },
                surface.weight
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ ReduceError::BadRange { .. }) => Err(input_error(e)),
        Err(e) => Err(Failure { code: 1, message: e.to_string() }),
    }
}

fn cmd_classify(input: &str, as_json: bool) -> Result<ExitCode, Failure> {
    let sc = load_scenario(input)?;
    let report = sc.surface.validate();
    if !report.is_valid() {
        return Err(Failure { code: 1, message: report.to_string() });
    }
    match reduce::classify_boundary(&sc.surface) {
        Ok(class) => {
            if as_json {
                print_json(&json!({ "class": class }));
            } else {
                println!("class: {class}");
            }
        }
        Err(unclassifiable) => {
            if as_json {
                print_json(&json!({ "class": null, "reason": unclassifiable.reason }));
            } else {
                println!("unclassifiable: {}", unclassifiable.reason);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
