//! Command-line front end: table verification, solution generation, the
//! property check suites, multiplier search, solution-file verification and
//! registry export, plus the JSON/CSV wire formats.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or unknown
//! configuration. Data goes to stdout and is byte-identical across runs;
//! report lines and timing go to stderr.

use crate::arith::{parse_int, parse_rat, Int, Rat};
use crate::corpus::{self, CorpusRow};
use crate::curve::CurvePoint;
use crate::families::{self, build_model, FamilyConfig, Sextuple, Variant};
use crate::identities::{self, GridIdentity};
use crate::pipeline::{Generator, Provenance, QuarticSolution};
use crate::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    #[value(alias = "five_plus", alias = "five")]
    FivePlus,
    #[value(alias = "three_plus", alias = "three")]
    ThreePlus,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::FivePlus => Variant::FivePlus,
            VariantArg::ThreePlus => Variant::ThreePlus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckWhat {
    Identities,
    Families,
    Curves,
}

#[derive(Debug, Parser)]
#[command(
    name = "quartics",
    version,
    about = "Generate and verify integer solutions of a^4+b^4+c^4+d^4+e^4+k*f^4 = g^4 and a^4+b^4+c^4+k*d^4 = e^4"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the embedded three-term and five-term reference tables.
    Tables,
    /// Generate solutions for one configuration from multiples of its seed.
    Solve(SolveArgs),
    /// Run a property suite over the registry.
    Check {
        #[arg(value_enum)]
        what: CheckWhat,
    },
    /// Enumerate multiplier tuples whose sum admits the square condition.
    Search {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 20)]
        bound: u32,
    },
    /// Verify a JSON solution file produced by `solve` or `families`.
    Verify { file: PathBuf },
    /// Evaluate a parametric family over a range of n.
    Families(FamiliesArgs),
    /// Print the built-in registry as JSON.
    Registry,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub variant: VariantArg,
    #[arg(long)]
    pub k: i64,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 120)]
    pub max_digits: usize,
    /// Branch sign of the cubic relation; the built-in registry carries
    /// seeds on the positive branch only.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    pub branch: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Load configurations from a registry JSON file instead of the
    /// built-in set.
    #[arg(long)]
    pub registry: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamiliesArgs {
    /// Family to evaluate (2 or 5).
    #[arg(long)]
    pub eval: i64,
    /// Inclusive range of the parameter, e.g. `--n-range=-10..10`.
    #[arg(long, allow_hyphen_values = true, default_value = "-10..10")]
    pub n_range: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Pass/fail ledger for one command run.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub command: String,
    pub items: Vec<(String, bool)>,
    pub elapsed_ms: u128,
}

impl RunReport {
    fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            items: Vec::new(),
            elapsed_ms: 0,
        }
    }

    fn item(&mut self, name: impl Into<String>, pass: bool) {
        self.items.push((name.into(), pass));
    }

    pub fn passed(&self) -> usize {
        self.items.iter().filter(|(_, p)| *p).count()
    }

    pub fn all_ok(&self) -> bool {
        self.passed() == self.items.len()
    }

    pub fn summary(&self) -> String {
        format!("{}/{} verified", self.passed(), self.items.len())
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_ok() {
            0
        } else {
            1
        }
    }

    /// Renders item lines and the summary; the caller decides the stream.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, pass) in &self.items {
            let tag = if *pass { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "{tag} {name}");
        }
        let _ = writeln!(out, "{}: {}", self.command, self.summary());
        out
    }
}

fn rat_str(r: &Rat) -> String {
    r.to_string()
}

/// Solution (plus optional provenance) in the interchange schema. Integers
/// are decimal strings because catalog values exceed 64 bits.
pub fn solution_to_json(sol: &QuarticSolution, prov: Option<&Provenance>) -> Value {
    let mut obj = json!({
        "variant": sol.variant.as_str(),
        "k": sol.k,
        "terms": sol.terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "f": sol.f.to_string(),
        "g": sol.g.to_string(),
    });
    if let Some(p) = prov {
        let mut pv = json!({
            "config": p.config,
            "multiple": p.multiple,
            "branch": p.branch,
            "repaired_from_paper": p.repaired_from_paper,
        });
        if let Some((x, y)) = p.point.xy() {
            pv["point"] = json!({ "X": rat_str(x), "Y": rat_str(y) });
        }
        obj["provenance"] = pv;
    }
    obj
}

pub fn solution_from_json(v: &Value) -> Result<QuarticSolution, String> {
    let variant = v["variant"]
        .as_str()
        .and_then(Variant::from_name)
        .ok_or("bad or missing variant")?;
    let k = v["k"].as_i64().ok_or("bad or missing k")?;
    let terms = v["terms"]
        .as_array()
        .ok_or("missing terms")?
        .iter()
        .map(|t| {
            t.as_str()
                .map(parse_int)
                .ok_or("terms must be decimal strings")
        })
        .collect::<Result<Vec<Int>, _>>()?;
    if terms.len() != variant.term_count() {
        return Err(format!(
            "expected {} terms for {}, got {}",
            variant.term_count(),
            variant,
            terms.len()
        ));
    }
    let f = v["f"].as_str().map(parse_int).ok_or("missing f")?;
    let g = v["g"].as_str().map(parse_int).ok_or("missing g")?;
    Ok(QuarticSolution {
        variant,
        k,
        terms,
        f,
        g,
    })
}

fn solutions_to_json(rows: &[(QuarticSolution, Option<Provenance>)]) -> String {
    let arr: Vec<Value> = rows
        .iter()
        .map(|(s, p)| solution_to_json(s, p.as_ref()))
        .collect();
    let mut out = serde_json::to_string_pretty(&Value::Array(arr)).expect("serializable");
    out.push('\n');
    out
}

fn solutions_to_csv(rows: &[(QuarticSolution, Option<Provenance>)]) -> String {
    let mut out = String::from("variant,k,terms,f,g,config,multiple,branch\n");
    for (s, p) in rows {
        let terms = s
            .terms
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("|");
        let (config, multiple, branch) = match p {
            Some(p) => (
                p.config.clone(),
                p.multiple.to_string(),
                p.branch.to_string(),
            ),
            None => (String::new(), String::new(), String::new()),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            s.variant.as_str(),
            s.k,
            terms,
            s.f,
            s.g,
            config,
            multiple,
            branch
        );
    }
    out
}

fn render_solutions(rows: &[(QuarticSolution, Option<Provenance>)], format: Format) -> String {
    match format {
        Format::Json => solutions_to_json(rows),
        Format::Csv => solutions_to_csv(rows),
    }
}

/// Serializes configurations in the registry interchange schema.
pub fn registry_to_json(configs: &[FamilyConfig]) -> String {
    let arr: Vec<Value> = configs
        .iter()
        .map(|c| {
            let (x, y) = c.seed.xy().expect("registry seeds are affine");
            json!({
                "id": c.id(),
                "variant": c.variant.as_str(),
                "k": c.k,
                "sextuple": c.sextuple.coeffs().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "multipliers": c.multipliers.iter().map(rat_str).collect::<Vec<_>>(),
                "branch": c.branch,
                "seed": { "X": rat_str(x), "Y": rat_str(y) },
            })
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&json!({ "configs": arr })).expect("serializable");
    out.push('\n');
    out
}

/// Parses the registry interchange schema.
pub fn registry_from_json(text: &str) -> Result<Vec<FamilyConfig>, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let arr = v["configs"].as_array().ok_or("missing configs array")?;
    arr.iter()
        .map(|c| {
            let variant = c["variant"]
                .as_str()
                .and_then(Variant::from_name)
                .ok_or("bad variant")?;
            let k = c["k"].as_i64().ok_or("bad k")?;
            let sx = c["sextuple"].as_array().ok_or("missing sextuple")?;
            if sx.len() != 6 {
                return Err("sextuple must have six entries".to_string());
            }
            let nums: Vec<Int> = sx
                .iter()
                .map(|e| match e {
                    Value::String(s) => Ok(parse_int(s)),
                    Value::Number(n) => n
                        .as_i64()
                        .map(Int::from)
                        .ok_or_else(|| "sextuple entry out of range".to_string()),
                    _ => Err("sextuple entries must be integers".to_string()),
                })
                .collect::<Result<_, _>>()?;
            let sextuple = Sextuple {
                a: nums[0].clone(),
                b: nums[1].clone(),
                c: nums[2].clone(),
                d: nums[3].clone(),
                e: nums[4].clone(),
                f: nums[5].clone(),
            };
            let multipliers: Vec<Rat> = c["multipliers"]
                .as_array()
                .ok_or("missing multipliers")?
                .iter()
                .map(|m| {
                    m.as_str()
                        .map(parse_rat)
                        .ok_or("multipliers must be strings")
                })
                .collect::<Result<_, _>>()?;
            if multipliers.len() != variant.multiplier_count() {
                return Err(format!(
                    "expected {} multipliers for {variant}",
                    variant.multiplier_count()
                ));
            }
            let branch = match c["branch"].as_i64() {
                Some(1) => 1,
                Some(-1) => -1,
                _ => return Err("branch must be 1 or -1".to_string()),
            };
            let seed = CurvePoint::parse(
                c["seed"]["X"].as_str().ok_or("missing seed.X")?,
                c["seed"]["Y"].as_str().ok_or("missing seed.Y")?,
            );
            Ok(FamilyConfig {
                variant,
                k,
                sextuple,
                multipliers,
                branch,
                seed,
            })
        })
        .collect()
}

/// Verifies a slice of catalog rows and reports each.
pub fn verify_rows(command: &str, rows: &[CorpusRow]) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new(command);
    for row in rows {
        let name = format!(
            "{:?} {} k={} g={}",
            row.source,
            row.solution.variant.as_str(),
            row.solution.k,
            row.solution.g
        );
        report.item(name, row.solution.verify());
    }
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

pub fn cmd_tables() -> RunReport {
    let mut rows = corpus::table1();
    rows.extend(corpus::table2());
    verify_rows("tables", &rows)
}

fn unknown_config_message(variant: Variant, k: i64) -> String {
    match (variant, k) {
        (Variant::ThreePlus, 4) | (Variant::ThreePlus, 6) => format!(
            "three_plus k={k}: the associated curve has rank zero, so no seed point exists \
             and this construction yields no solutions"
        ),
        (Variant::ThreePlus, 5) => {
            "three_plus k=5: no configuration is known for this construction".to_string()
        }
        (Variant::ThreePlus, 1) => {
            "three_plus k=1: outside this catalog; see the four-fourth-powers literature"
                .to_string()
        }
        _ => format!("{} k={k} is not in the registry", variant.as_str()),
    }
}

/// Generates solutions for `(variant, k, branch)`. The three-term `k = 2`
/// case routes through its dedicated identity engine.
pub fn solve(
    variant: Variant,
    k: i64,
    branch: i8,
    count: usize,
    max_digits: usize,
    registry: &[FamilyConfig],
) -> Result<Vec<(QuarticSolution, Provenance)>, Error> {
    if variant == Variant::ThreePlus && k == 2 && branch == 1 {
        return identities::k2_generate(count, max_digits);
    }
    let cfg = registry
        .iter()
        .find(|c| c.variant == variant && c.k == k && c.branch == branch)
        .cloned()
        .ok_or_else(|| {
            if branch != 1 {
                Error::UnknownConfig(format!(
                    "{} k={k}: no seed point is registered on the negative branch",
                    variant.as_str()
                ))
            } else {
                Error::UnknownConfig(unknown_config_message(variant, k))
            }
        })?;
    Generator::new(cfg)?.generate(count, max_digits)
}

pub fn cmd_check(what: CheckWhat) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new(format!("check {what:?}").to_lowercase());
    match what {
        CheckWhat::Curves => {
            let expected = corpus::expected_curves();
            for cfg in families::registry() {
                let id = cfg.id();
                match build_model(&cfg).and_then(|m| m.to_weierstrass()) {
                    Ok(map) => {
                        let pin = expected.iter().find(|(eid, _, _)| *eid == id);
                        let curve_ok = pin
                            .is_some_and(|(_, a, b)| map.curve().a() == a && map.curve().b() == b);
                        report.item(format!("{id} curve matches catalog"), curve_ok);
                        report.item(
                            format!("{id} seed on curve"),
                            map.curve().contains(&cfg.seed),
                        );
                        report.item(
                            format!("{id} seed has infinite order"),
                            map.curve().is_infinite_order(&cfg.seed).unwrap_or(false),
                        );
                    }
                    Err(e) => report.item(format!("{id} builds ({e})"), false),
                }
            }
            let k2 = identities::k2_model_map();
            let extra = CurvePoint::parse("25/4", "35/8");
            report.item(
                "three_plus_k2 point (25/4, 35/8) on Y^2 = X(X^2 - 36)",
                k2.curve().contains(&extra),
            );
            report.item(
                "three_plus_k2 point has infinite order",
                k2.curve().is_infinite_order(&extra).unwrap_or(false),
            );
        }
        CheckWhat::Identities => {
            let pins: [(&str, Sextuple, &str, &[i64]); 3] = [
                (
                    "standard",
                    Sextuple::new(4, 3, 4, -1, 4, -2),
                    "1",
                    &[8, 8, 0, 32],
                ),
                (
                    "even",
                    Sextuple::new(4, 1, 4, -1, 4, 0),
                    "8",
                    &[0, -2, 0, 8],
                ),
                (
                    "flipped",
                    Sextuple::new(4, 3, 4, -1, 4, 2),
                    "1",
                    &[-8, 8, 0, 32],
                ),
            ];
            for (name, sextuple, content, q) in pins {
                let ok = families::derive_identity(&sextuple).is_ok_and(|(c, poly)| {
                    c == parse_rat(content) && poly == crate::poly::UniPoly::from_int_coeffs(q)
                });
                report.item(format!("sextuple identity ({name})"), ok);
            }
            report.item(
                "bivariate grid (a^4-2b^4, 2a^3b, 2ab^3)",
                identities::grid_identity_check(GridIdentity::Carmichael, 9),
            );
            report.item(
                "bivariate grid (k=4, a+b=c)",
                identities::grid_identity_check(GridIdentity::K4SumCondition, 9),
            );
            let mut three_quartic_ok = true;
            for a in -50..=50i64 {
                for b in -50..=50i64 {
                    let a = Int::from(a);
                    let b = Int::from(b);
                    let fourth = |v: &Int| v * v * v * v;
                    let s = &a * &a + &a * &b + &b * &b;
                    if fourth(&a) + fourth(&b) + fourth(&(&a + &b)) != Int::from(2) * &s * &s {
                        three_quartic_ok = false;
                    }
                }
            }
            report.item("three-quartic collapse on [-50, 50]^2", three_quartic_ok);
            report.item("k=14 witness", identities::k14_witness().verify());
        }
        CheckWhat::Families => {
            for fam in identities::param_families() {
                report.item(
                    format!("family k={} polynomial identity", fam.k),
                    identities::verify_family(&fam),
                );
                let all_verify = (-10..=10).all(|n| identities::family_eval(&fam, n).verify());
                report.item(
                    format!("family k={} evaluations on -10..10", fam.k),
                    all_verify,
                );
            }
            let uncorrected = identities::k2_family_uncorrected();
            report.item(
                "uncorrected k=2 coefficients fail at n=1 (known misprint)",
                !identities::verify_family(&uncorrected)
                    && !identities::family_eval(&uncorrected, 1).verify(),
            );
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

pub fn cmd_search(variant: Variant, k: i64, bound: u32) -> (RunReport, String) {
    let start = Instant::now();
    let mut report = RunReport::new("search");
    let hits = families::search_multipliers(variant, k, bound);
    let mut out = String::new();
    for hit in &hits {
        let tuple = hit
            .multipliers
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(out, "({tuple}) content={} m={}", hit.content, hit.m);
    }
    report.item(
        format!(
            "search {} k={k} bound={bound}: {} tuple(s)",
            variant.as_str(),
            hits.len()
        ),
        true,
    );
    report.elapsed_ms = start.elapsed().as_millis();
    (report, out)
}

pub fn cmd_verify_file(text: &str) -> Result<RunReport, String> {
    let start = Instant::now();
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let entries: Vec<&Value> = match &v {
        Value::Array(a) => a.iter().collect(),
        obj @ Value::Object(_) => vec![obj],
        _ => return Err("expected a solution object or array".to_string()),
    };
    let mut report = RunReport::new("verify");
    for (i, entry) in entries.iter().enumerate() {
        match solution_from_json(entry) {
            Ok(sol) => report.item(format!("entry {i}: {sol}"), sol.verify()),
            Err(e) => report.item(format!("entry {i}: parse failed ({e})"), false),
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = text.split_once("..").ok_or("range must look like a..b")?;
    let lo: i64 = lo.trim().parse().map_err(|_| "bad range start")?;
    let hi: i64 = hi.trim().parse().map_err(|_| "bad range end")?;
    if lo > hi {
        return Err("range start exceeds end".to_string());
    }
    Ok((lo, hi))
}

pub fn cmd_families(
    k: i64,
    n_lo: i64,
    n_hi: i64,
) -> Result<Vec<(QuarticSolution, Option<Provenance>)>, Error> {
    let fam = identities::param_families()
        .into_iter()
        .find(|f| f.k == k)
        .ok_or_else(|| Error::UnknownConfig(format!("no parametric family for k={k}")))?;
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        let sol = identities::family_eval(&fam, n);
        let prov = Provenance {
            config: format!("family_k{k}"),
            multiple: n.unsigned_abs(),
            point: CurvePoint::Infinity,
            branch: if n >= 0 { 1 } else { -1 },
            repaired_from_paper: fam.repaired_from_paper,
        };
        out.push((sol, Some(prov)));
    }
    Ok(out)
}

/// Runs a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Tables => {
            let report = cmd_tables();
            print!("{}", report.render());
            eprintln!("elapsed: {} ms", report.elapsed_ms);
            report.exit_code()
        }
        Command::Solve(args) => {
            let branch: i8 = match args.branch.as_str() {
                "+" | "+1" | "1" => 1,
                "-" | "-1" => -1,
                other => {
                    eprintln!("error: branch must be + or -, got {other}");
                    return 2;
                }
            };
            let registry = match &args.registry {
                None => families::registry(),
                Some(path) => {
                    let text = match std::fs::read_to_string(path) {
                        Ok(t) => t,
                        Err(e) => {
                            eprintln!("error: cannot read {}: {e}", path.display());
                            return 2;
                        }
                    };
                    match registry_from_json(&text) {
                        Ok(r) => r,
                        Err(e) => {
                            eprintln!("error: bad registry file: {e}");
                            return 2;
                        }
                    }
                }
            };
            let start = Instant::now();
            eprintln!(
                "$ quartics solve --variant {} --k {} --count {} --max-digits {} --branch {}",
                Variant::from(args.variant).as_str(),
                args.k,
                args.count,
                args.max_digits,
                branch
            );
            match solve(
                args.variant.into(),
                args.k,
                branch,
                args.count,
                args.max_digits,
                &registry,
            ) {
                Ok(rows) => {
                    let rows: Vec<_> = rows.into_iter().map(|(s, p)| (s, Some(p))).collect();
                    print!("{}", render_solutions(&rows, args.format));
                    eprintln!(
                        "{} solution(s) in {} ms",
                        rows.len(),
                        start.elapsed().as_millis()
                    );
                    0
                }
                Err(e @ Error::UnknownConfig(_)) => {
                    eprintln!("error: {e}");
                    2
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
        Command::Check { what } => {
            let report = cmd_check(what);
            print!("{}", report.render());
            eprintln!("elapsed: {} ms", report.elapsed_ms);
            report.exit_code()
        }
        Command::Search { variant, k, bound } => {
            let (report, data) = cmd_search(variant.into(), k, bound);
            print!("{data}");
            eprint!("{}", report.render());
            eprintln!("elapsed: {} ms", report.elapsed_ms);
            report.exit_code()
        }
        Command::Verify { file } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", file.display());
                    return 2;
                }
            };
            match cmd_verify_file(&text) {
                Ok(report) => {
                    print!("{}", report.render());
                    eprintln!("elapsed: {} ms", report.elapsed_ms);
                    report.exit_code()
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        Command::Families(args) => {
            let (lo, hi) = match parse_range(&args.n_range) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            match cmd_families(args.eval, lo, hi) {
                Ok(rows) => {
                    print!("{}", render_solutions(&rows, args.format));
                    let bad = rows.iter().filter(|(s, _)| !s.verify()).count();
                    if bad > 0 {
                        eprintln!("error: {bad} evaluation(s) failed verification");
                        1
                    } else {
                        0
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        Command::Registry => {
            print!("{}", registry_to_json(&families::registry()));
            0
        }
    }
}
