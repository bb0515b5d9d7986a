//! The `pln` command-line tool.
//!
//! Exit codes: 0 when the checked property holds, 1 for a definitive negative
//! result, 2 for usage or environment errors. Every flag can also be set
//! through an environment variable prefixed `PLN_`.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::families::{
    cyclic_params, cyclic_triples, quadrinomial_triples, solve_system, system_params,
    trinomial_triples, verify_product_factorization, verify_product_factorization_unmirrored, FactorTriple,
    Family, FACTORIZATION_CONSTANT,
};
use crate::field::{FieldTower, Fq, MidField, Moduli};
use crate::planarity::{
    check_planarity, classify_batch, verify_matrix_identity_a, verify_matrix_identity_b,
    IdentityCheck, Method, Pentanomial,
};
use crate::report::{ClassifyRecord, Counts, RunReport, TowerInfo, VerdictRecord, TOOL_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Default bound on `q^3` for exhaustive commands.
pub const DEFAULT_MAX_SCALE: u64 = 1 << 20;

#[derive(Debug, Parser)]
#[command(name = "pln", version, about = "Planarity of pentanomials over F_{q^3}")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Characteristic p (odd prime)
    #[arg(long, env = "PLN_P")]
    pub p: u32,
    /// Degree n of F_q over F_p
    #[arg(long, env = "PLN_N", default_value_t = 1)]
    pub n: u32,
    /// Ascending coefficients of the modulus of F_q over F_p, e.g. 1,0,1
    #[arg(long, env = "PLN_MODULUS_Q", allow_hyphen_values = true)]
    pub modulus_q: Option<String>,
    /// Ascending coefficients of the cubic modulus over F_q, e.g. 1,2,0,1
    #[arg(long, env = "PLN_MODULUS_Q3", allow_hyphen_values = true)]
    pub modulus_q3: Option<String>,
    /// Worker threads (default: available parallelism)
    #[arg(long, env = "PLN_THREADS")]
    pub threads: Option<usize>,
    /// Largest q^3 accepted by exhaustive sweeps
    #[arg(long, env = "PLN_MAX_SCALE", default_value_t = DEFAULT_MAX_SCALE)]
    pub max_scale: u64,
    /// Report elapsed_ms as null so reports are byte-comparable
    #[arg(long, env = "PLN_NO_TIMING")]
    pub no_timing: bool,
    /// Also write the report (or, for classify, the records) to this file
    #[arg(long, env = "PLN_OUT")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide planarity of f_{E,A,B,C,D}
    Check {
        #[command(flatten)]
        common: Common,
        /// Five coefficients E,A,B,C,D; integers, fractions like 1/2, or [c0,c1,..] for n > 1
        #[arg(long, env = "PLN_COEFFS", allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, env = "PLN_METHOD", default_value = "dickson")]
        method: Method,
    },
    /// Compare a family's predicate with brute-force planarity
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, env = "PLN_FAMILY")]
        family: Family,
        /// Family parameters, e.g. D=1,E=2
        #[arg(long, env = "PLN_PARAMS", allow_hyphen_values = true, default_value = "")]
        params: String,
    },
    /// Classify every tuple in F_q^5 and write JSON lines to --out
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long, env = "PLN_METHOD", default_value = "dickson")]
        method: Method,
        /// Fraction of tuples re-checked with the definitional method
        #[arg(long, env = "PLN_RECHECK", default_value_t = 0.01)]
        recheck: f64,
    },
    /// Solve the coefficient system for given factor triples
    Solve {
        #[command(flatten)]
        common: Common,
        /// One triple a,b,c; its cyclic rotations are used
        #[arg(long, env = "PLN_CYCLIC", allow_hyphen_values = true)]
        cyclic: Option<String>,
        /// Three triples, e.g. "[(1,-1,1),(1,1,-1),(-1,1,1)]"
        #[arg(long, env = "PLN_TRIPLES", allow_hyphen_values = true)]
        triples: Option<String>,
        /// JSON file with {"triples": [[a,b,c],...]} or {"cyclic": [a,b,c]}
        #[arg(long, env = "PLN_INPUT")]
        input: Option<PathBuf>,
    },
    /// Check the determinant identities over all of F_{q^3}^*
    Identities {
        #[command(flatten)]
        common: Common,
        #[arg(long, env = "PLN_WHICH", ignore_case = true)]
        which: Identity,
    },
    /// Describe the field tower
    FieldInfo {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    A,
    B,
    /// the product factorization over the solver outputs of the two standard triple sets
    Eq6,
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Check { common, .. }
            | Command::Verify { common, .. }
            | Command::Classify { common, .. }
            | Command::Solve { common, .. }
            | Command::Identities { common, .. }
            | Command::FieldInfo { common } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Verify { .. } => "verify",
            Command::Classify { .. } => "classify",
            Command::Solve { .. } => "solve",
            Command::Identities { .. } => "identities",
            Command::FieldInfo { .. } => "field-info",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Field(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

/// What a command produced: the report and its exit code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: RunReport,
    pub exit_code: i32,
}

/// Parses `args` (including the program name), runs the command, prints the
/// report to `stdout` and diagnostics to `stderr`, and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let _ = write!(stderr, "{e}");
            return EXIT_ERROR;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
            let _ = writeln!(stdout, "{text}");
            outcome.exit_code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// Runs a parsed command inside a thread pool sized by `--threads`.
pub fn execute(command: &Command) -> CliResult<Outcome> {
    let common = command.common();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = common.threads {
        if t == 0 {
            return usage("--threads must be at least 1");
        }
        pool = pool.num_threads(t);
    }
    let pool = pool.build().map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    pool.install(|| execute_in_pool(command))
}

fn execute_in_pool(command: &Command) -> CliResult<Outcome> {
    let common = command.common();
    let start = Instant::now();
    let tower = build_tower(common)?;
    let (inputs, results, counts, exit_code) = match command {
        Command::Check { coeffs, method, .. } => cmd_check(&tower, coeffs, *method, common.no_timing)?,
        Command::Verify { family, params, .. } => cmd_verify(&tower, *family, params)?,
        Command::Classify { method, recheck, .. } => cmd_classify(&tower, common, *method, *recheck)?,
        Command::Solve { cyclic, triples, input, .. } => {
            cmd_solve(&tower, cyclic.as_deref(), triples.as_deref(), input.as_deref())?
        }
        Command::Identities { which, .. } => cmd_identities(&tower, *which)?,
        Command::FieldInfo { .. } => cmd_field_info(&tower),
    };
    let elapsed_ms = (!common.no_timing).then(|| start.elapsed().as_millis() as u64);
    let report = RunReport {
        command: command.name().to_string(),
        version: TOOL_VERSION.to_string(),
        tower: TowerInfo::new(&tower),
        inputs,
        results,
        counts,
        elapsed_ms,
    };
    if let (Some(path), false) = (&common.out, matches!(command, Command::Classify { .. })) {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        std::fs::write(path, text + "\n").map_err(|e| io_error(path, e))?;
    }
    Ok(Outcome { report, exit_code })
}

type CommandOutput = (Value, Value, Counts, i32);

fn io_error(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io { path: path.display().to_string(), source }
}

fn build_tower(common: &Common) -> CliResult<FieldTower> {
    let q = common
        .modulus_q
        .as_deref()
        .map(|s| {
            split_top_level(strip_brackets(s))
                .iter()
                .map(|t| parse_int(t))
                .collect::<CliResult<Vec<_>>>()
        })
        .transpose()?;
    let q3 = common
        .modulus_q3
        .as_deref()
        .map(|s| {
            split_top_level(strip_brackets(s))
                .iter()
                .map(|t| parse_int_list(t))
                .collect::<CliResult<Vec<_>>>()
        })
        .transpose()?;
    let tower = FieldTower::build(common.p, common.n, &Moduli { q, q3 })?;
    let size = tower.top().order();
    if size > common.max_scale {
        return Err(Error::ScaleExceeded { size, limit: common.max_scale }.into());
    }
    Ok(tower.with_sweep_limit(common.max_scale.max(size)))
}

// ---- literal parsing ----

/// Splits on commas that are not nested inside brackets or parentheses.
pub fn split_top_level(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' | '(' => {
                depth += 1;
                cur.push(ch);
            }
            ']' | ')' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => parts.push(std::mem::take(&mut cur)),
            _ => cur.push(ch),
        }
    }
    parts.push(cur);
    parts.into_iter().map(|p| p.trim().to_string()).filter(|p| !p.is_empty()).collect()
}

fn strip_brackets(s: &str) -> &str {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')));
    match inner {
        // only strip when the brackets enclose the whole string
        Some(inner) if split_top_level(t).len() == 1 && balanced(inner) => inner,
        _ => t,
    }
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

fn parse_int(s: &str) -> CliResult<i64> {
    s.trim().parse::<i64>().or_else(|_| usage(format!("not an integer: {s:?}")))
}

fn parse_int_list(s: &str) -> CliResult<Vec<i64>> {
    let t = s.trim();
    if t.starts_with('[') {
        split_top_level(strip_brackets(t)).iter().map(|x| parse_int(x)).collect()
    } else {
        Ok(vec![parse_int(t)?])
    }
}

/// An `F_q` literal: an integer, a fraction `a/b`, or a coefficient list `[c0,c1,...]`.
pub fn parse_mid(mid: &MidField, s: &str) -> CliResult<Fq> {
    let t = s.trim();
    if t.starts_with('[') {
        return Ok(mid.from_coeffs(&parse_int_list(t)?)?);
    }
    if let Some((num, den)) = t.split_once('/') {
        let (num, den) = (mid.from_int(parse_int(num)?), mid.from_int(parse_int(den)?));
        return Ok(mid.div(num, den)?);
    }
    Ok(mid.from_int(parse_int(t)?))
}

pub fn parse_coeffs(mid: &MidField, s: &str) -> CliResult<Pentanomial> {
    let parts = split_top_level(strip_brackets(s));
    if parts.len() != 5 {
        return usage(format!("expected five coefficients E,A,B,C,D, got {}", parts.len()));
    }
    let mut out = [Fq::ZERO; 5];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = parse_mid(mid, p)?;
    }
    Ok(Pentanomial::from_coeffs(out))
}

fn parse_triple(mid: &MidField, s: &str) -> CliResult<FactorTriple> {
    let parts = split_top_level(strip_brackets(s));
    if parts.len() != 3 {
        return usage(format!("a factor triple needs three entries, got {s:?}"));
    }
    Ok(FactorTriple::new(
        parse_mid(mid, &parts[0])?,
        parse_mid(mid, &parts[1])?,
        parse_mid(mid, &parts[2])?,
    ))
}

fn parse_triples(mid: &MidField, s: &str) -> CliResult<[FactorTriple; 3]> {
    let parts = split_top_level(strip_brackets(s));
    if parts.len() != 3 {
        return usage(format!("expected three triples, got {}", parts.len()));
    }
    Ok([parse_triple(mid, &parts[0])?, parse_triple(mid, &parts[1])?, parse_triple(mid, &parts[2])?])
}

fn parse_family_params(mid: &MidField, family: Family, s: &str) -> CliResult<Vec<Fq>> {
    let names = family.parameters();
    let mut values: Vec<Option<Fq>> = vec![None; names.len()];
    for part in split_top_level(s) {
        let Some((key, value)) = part.split_once('=') else {
            return usage(format!("parameter {part:?} is not of the form NAME=VALUE"));
        };
        let key = key.trim();
        let Some(pos) = names.iter().position(|n| n.eq_ignore_ascii_case(key)) else {
            return usage(format!("family {family} has no parameter {key:?} (expects {names:?})"));
        };
        values[pos] = Some(parse_mid(mid, value)?);
    }
    values
        .into_iter()
        .zip(names)
        .map(|(v, n)| v.ok_or_else(|| CliError::Usage(format!("family {family} needs parameter {n}"))))
        .collect()
}

// ---- commands ----

fn cmd_check(tower: &FieldTower, coeffs: &str, method: Method, no_timing: bool) -> CliResult<CommandOutput> {
    let f = parse_coeffs(tower.mid(), coeffs)?;
    let start = Instant::now();
    let verdict = check_planarity(tower, &f, method)?;
    let elapsed = (!no_timing).then(|| start.elapsed().as_millis() as u64);
    let record = VerdictRecord::new(tower, &f, &verdict, elapsed);
    let counts = Counts { elements_swept: tower.top().order() - 1, tuples_tested: 1 };
    let inputs = json!({ "coeffs": f.to_json(tower.mid()), "method": method.name() });
    let code = if verdict.planar { EXIT_OK } else { EXIT_NEGATIVE };
    Ok((inputs, serde_json::to_value(record).expect("record serializes"), counts, code))
}

fn cmd_verify(tower: &FieldTower, family: Family, params: &str) -> CliResult<CommandOutput> {
    let mid = tower.mid();
    let values = parse_family_params(mid, family, params)?;
    let (f, predicate) = family.construct(mid, &values)?;
    let mut verdicts = Map::new();
    let mut planar = Vec::new();
    let mut witness = None;
    for method in Method::ALL {
        let v = check_planarity(tower, &f, method)?;
        verdicts.insert(method.name().into(), Value::Bool(v.planar));
        planar.push(v.planar);
        witness = witness.or(v.witness);
    }
    let agree = planar.iter().all(|&x| x == planar[0]);
    let is_planar = planar[0];
    let consistent = agree
        && (!predicate || is_planar)
        && (!family.is_characterization() || predicate == is_planar);
    let named: Map<String, Value> = family
        .parameters()
        .iter()
        .zip(&values)
        .map(|(n, &v)| (n.to_string(), mid.to_json(v)))
        .collect();
    let inputs = json!({ "family": family.name(), "params": named });
    let results = json!({
        "coeffs": f.to_json(mid),
        "predicate": predicate,
        "predicate_is_characterization": family.is_characterization(),
        "planar": is_planar,
        "methods": verdicts,
        "methods_agree": agree,
        "witness_epsilon": witness.map(|w| tower.top().to_json(w)),
        "consistent": consistent,
    });
    let counts = Counts { elements_swept: 3 * (tower.top().order() - 1), tuples_tested: 1 };
    Ok((inputs, results, counts, if consistent { EXIT_OK } else { EXIT_NEGATIVE }))
}

/// Evenly spaced tuple indices re-checked with the definitional method.
fn recheck_stride(fraction: f64) -> Option<u64> {
    (fraction > 0.0).then(|| (1.0 / fraction.min(1.0)).round().max(1.0) as u64)
}

fn cmd_classify(tower: &FieldTower, common: &Common, method: Method, recheck: f64) -> CliResult<CommandOutput> {
    let Some(path) = &common.out else {
        return usage("classify needs --out for the JSON-lines records");
    };
    if !(0.0..=1.0).contains(&recheck) {
        return usage("--recheck must lie in [0, 1]");
    }
    let mid = tower.mid();
    let total = (mid.order() as u64).pow(5);
    tower.check_sweep(total)?;
    let fs: Vec<Pentanomial> =
        (0..total).map(|i| Pentanomial::from_index(mid, i).expect("index below q^5")).collect();
    let verdicts = classify_batch(tower, &fs, method)?;

    let file = File::create(path).map_err(|e| io_error(path, e))?;
    let mut w = BufWriter::new(file);
    for (f, v) in fs.iter().zip(&verdicts) {
        let line = serde_json::to_string(&ClassifyRecord::new(tower, f, method, v)).expect("record serializes");
        writeln!(w, "{line}").map_err(|e| io_error(path, e))?;
    }
    w.flush().map_err(|e| io_error(path, e))?;

    let planar_count = verdicts.iter().filter(|v| v.planar).count();
    let (mut rechecked, mut mismatches) = (0u64, Vec::new());
    if let Some(stride) = recheck_stride(recheck).filter(|_| method != Method::Definition) {
        let picks: Vec<Pentanomial> = fs.iter().step_by(stride as usize).copied().collect();
        let again = classify_batch(tower, &picks, Method::Definition)?;
        rechecked = picks.len() as u64;
        for (f, v) in picks.iter().zip(&again) {
            if v.planar != verdicts[f.index(mid.order()) as usize].planar {
                mismatches.push(f.to_json(mid));
            }
        }
    }
    let inputs = json!({ "method": method.name(), "recheck": recheck, "out": path.display().to_string() });
    let results = json!({
        "records": total,
        "planar_count": planar_count,
        "rechecked_definitionally": rechecked,
        "recheck_mismatches": mismatches,
    });
    let counts = Counts { elements_swept: total * (tower.top().order() - 1), tuples_tested: total };
    let code = if mismatches.is_empty() { EXIT_OK } else { EXIT_NEGATIVE };
    Ok((inputs, results, counts, code))
}

enum SolveInput {
    Cyclic(FactorTriple),
    Triples([FactorTriple; 3]),
}

fn read_solve_input(mid: &MidField, path: &Path) -> CliResult<SolveInput> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let v: Value = serde_json::from_str(&text)
        .or_else(|e| usage(format!("{}: invalid JSON: {e}", path.display())))?;
    let triple = |t: &Value| -> CliResult<FactorTriple> {
        let items = t
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| CliError::Usage(format!("a triple must be a 3-element array, got {t}")))?;
        Ok(FactorTriple::new(mid.from_json(&items[0])?, mid.from_json(&items[1])?, mid.from_json(&items[2])?))
    };
    match (v.get("cyclic"), v.get("triples")) {
        (Some(c), None) => Ok(SolveInput::Cyclic(triple(c)?)),
        (None, Some(Value::Array(ts))) if ts.len() == 3 => {
            Ok(SolveInput::Triples([triple(&ts[0])?, triple(&ts[1])?, triple(&ts[2])?]))
        }
        _ => usage("solver input needs exactly one of \"cyclic\": [a,b,c] or \"triples\": [[..],[..],[..]]"),
    }
}

fn triple_json(mid: &MidField, t: &FactorTriple) -> Value {
    json!([mid.to_json(t.a), mid.to_json(t.b), mid.to_json(t.c)])
}

fn cmd_solve(
    tower: &FieldTower,
    cyclic: Option<&str>,
    triples: Option<&str>,
    input: Option<&Path>,
) -> CliResult<CommandOutput> {
    let mid = tower.mid();
    let source = match (cyclic, triples, input) {
        (Some(c), None, None) => SolveInput::Cyclic(parse_triple(mid, c)?),
        (None, Some(t), None) => SolveInput::Triples(parse_triples(mid, t)?),
        (None, None, Some(path)) => read_solve_input(mid, path)?,
        _ => return usage("give exactly one of --cyclic, --triples or --input"),
    };
    let (triples, params) = match source {
        SolveInput::Cyclic(t) => (cyclic_triples(t.a, t.b, t.c), cyclic_params(mid, t.a, t.b, t.c)?),
        SolveInput::Triples(ts) => (ts, system_params(mid, &ts)?),
    };
    let solutions = solve_system(tower, &params)?;
    let mut all_planar = true;
    for f in &solutions {
        all_planar &= check_planarity(tower, f, Method::Dickson)?.planar;
    }
    let inputs = json!({ "triples": triples.iter().map(|t| triple_json(mid, t)).collect::<Vec<_>>() });
    let results = json!({
        "params": {
            "alpha": mid.to_json(params.alpha),
            "beta": mid.to_json(params.beta),
            "gamma": mid.to_json(params.gamma),
            "delta": mid.to_json(params.delta),
        },
        "solution_count": solutions.len(),
        "solutions": solutions.iter().map(|f| f.to_json(mid)).collect::<Vec<_>>(),
        "all_planar": all_planar,
    });
    let q = mid.order() as u64;
    let counts = Counts {
        elements_swept: solutions.len() as u64 * (tower.top().order() - 1),
        tuples_tested: q.pow(5),
    };
    Ok((inputs, results, counts, if all_planar { EXIT_OK } else { EXIT_NEGATIVE }))
}

fn identity_json(tower: &FieldTower, check: &IdentityCheck) -> Value {
    json!({
        "holds": check.holds,
        "checked": check.checked,
        "first_failure": check.first_failure.map(|e| tower.top().to_json(e)),
    })
}

fn cmd_identities(tower: &FieldTower, which: Identity) -> CliResult<CommandOutput> {
    let swept = tower.top().order() - 1;
    let inputs = json!({ "which": format!("{which:?}").to_lowercase() });
    match which {
        Identity::A | Identity::B => {
            let check = if which == Identity::A {
                verify_matrix_identity_a(tower)?
            } else {
                verify_matrix_identity_b(tower)?
            };
            let code = if check.holds { EXIT_OK } else { EXIT_NEGATIVE };
            let counts = Counts { elements_swept: swept, tuples_tested: 0 };
            Ok((inputs, identity_json(tower, &check), counts, code))
        }
        Identity::Eq6 => {
            let mid = tower.mid();
            let mut cases = Vec::new();
            let mut holds = true;
            let mut tested = 0u64;
            for (name, triples) in [("trinomial", trinomial_triples(mid)), ("quadrinomial", quadrinomial_triples(mid))] {
                let params = system_params(mid, &triples)?;
                let solutions = solve_system(tower, &params)?;
                let (mut mirrored_ok, mut unmirrored_ok) = (true, true);
                for f in &solutions {
                    mirrored_ok &= verify_product_factorization(tower, &triples, f)?.holds;
                    unmirrored_ok &= verify_product_factorization_unmirrored(tower, &triples, f)?.holds;
                }
                tested += solutions.len() as u64;
                holds &= mirrored_ok;
                cases.push(json!({
                    "triples": triples.iter().map(|t| triple_json(mid, t)).collect::<Vec<_>>(),
                    "case": name,
                    "solutions": solutions.len(),
                    "holds": mirrored_ok,
                    "holds_unmirrored": unmirrored_ok,
                }));
            }
            let results = json!({ "constant": FACTORIZATION_CONSTANT, "holds": holds, "cases": cases });
            let counts = Counts { elements_swept: tested * swept, tuples_tested: tested };
            Ok((inputs, results, counts, if holds { EXIT_OK } else { EXIT_NEGATIVE }))
        }
    }
}

fn cmd_field_info(tower: &FieldTower) -> CommandOutput {
    let top = tower.top();
    let y = top.from_index(tower.q() as u64).expect("y is an element");
    let results = json!({
        "order_q": tower.q(),
        "order_q3": top.order(),
        "frobenius_y": top.to_json(top.frobenius(y, 1)),
        "frobenius2_y": top.to_json(top.frobenius(y, 2)),
        "display": tower.to_string(),
    });
    (json!({}), results, Counts::default(), EXIT_OK)
}
