//! Command-line front end.
//!
//! Every command writes a report to stdout and diagnostics to stderr. JSON
//! reports are objects with the keys `"params"`, `"records"` and `"checks"`,
//! plus `"matrices"` under `--emit-matrices`. CSV output carries the records
//! only, one row per record, columns in [`OutputRecord`] field order; the
//! checks then go to stderr.
//!
//! # Matrix dump
//!
//! With `--emit-matrices` each record whose representation was built gets an
//! entry of [`MatrixDump`]: the field as `p` together with its modulus
//! (coefficients low degree first, `[0, 1]` for the prime field itself) and
//! the images of the generators `(1, 0)` and `(0, 1)` as row-major arrays of
//! coefficient vectors. Over `F_p` a coefficient vector has one entry.
//!
//! # Exit codes
//!
//! `0` success, `1` verification failure, `2` parameter error, `3` resource
//! bound exceeded.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::char_orbits::{enumerate_pairs, phi_orbits, PairClass, PhiOrbit};
use crate::error::Error;
use crate::ffield::{tilde_degree, MAX_DEGREE};
use crate::field::{Field, PrimeField};
use crate::modcheck::{
    are_isomorphic, berman_irreducible_count, endomorphism_field, is_irreducible, submodule_census,
    EXHAUSTIVE_LIMIT,
};
use crate::numtheory::{lcm, pow_mod};
use crate::rep::MatrixRep;
use crate::rep_builder::{build_pi, decompose_pi_over_tilde, image_order};
use crate::tame_galois::{
    classify_galois_reps, galois_group_at_level, ramification_partition, GaloisRepRecord, PFieldParams,
};
use crate::twisted_group::{identify_small_group, p_regular_class_count, twist_by_rep, GroupName, TwistedGroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_PARAMS: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;

/// Largest degree for which `π` is built by `verify` and `--emit-matrices`.
pub const MAX_BUILD_DEGREE: u64 = 16;
/// Largest degree checked by the descent identity.
pub const MAX_DESCENT_DEGREE: u64 = 8;

#[derive(Parser, Debug)]
#[command(name = "tamerep", version, about = "Irreducible mod-p representations of twisted products and tame Galois groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify the irreducible F_p-representations of G = T x_q Sigma.
    ClassifyGroup(GroupArgs),
    /// Classify irreducible mod-p representations of the tame Galois group.
    ClassifyGalois(GaloisArgs),
    /// Run the oracle checks on one group or on a sweep of groups.
    Verify(VerifyArgs),
    /// Run the built-in worked examples against their expected summaries.
    Examples(ExamplesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub a: u32,
    #[arg(long)]
    pub e: u64,
    #[arg(long)]
    pub f: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub emit_matrices: bool,
}

#[derive(Args, Debug)]
pub struct GaloisArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub a: u32,
    #[arg(long)]
    pub max_degree: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub emit_matrices: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Restricts the sweep to one prime; required for a single group.
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long)]
    pub e: Option<u64>,
    #[arg(long)]
    pub f: Option<u64>,
    /// Check every group with `e·f` at most this bound.
    #[arg(long, conflicts_with_all = ["e", "f"])]
    pub sweep: Option<u64>,
    /// Also compare the submodule census of `π^m` with its closed form.
    #[arg(long)]
    pub census_m: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ExamplesArgs {
    /// Run a single preset: z3, a3, s3 or galois-n2.
    #[arg(long)]
    pub preset: Option<String>,
}

/// One classified representation, flattened.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub p: u64,
    pub a: u32,
    pub e: u64,
    pub f: u64,
    pub char_rep: u64,
    pub s: u64,
    pub d: u64,
    pub r: u64,
    pub lambda_order: u64,
    pub lambda_log: u64,
    pub w: u64,
    pub degree: u64,
    pub defdeg: u64,
    pub unramified: bool,
    pub label_r: Option<u64>,
    pub level: Option<u32>,
}

impl OutputRecord {
    pub fn from_orbit(g: &TwistedGroup, orbit: &PhiOrbit, level: Option<u32>) -> Self {
        let c = &orbit.canonical;
        let unramified = c.orbit.d == 1;
        OutputRecord {
            p: g.p(),
            a: g.a(),
            e: g.e(),
            f: g.f(),
            char_rep: c.orbit.rep_c,
            s: c.orbit.s,
            d: c.orbit.d,
            r: c.orbit.r,
            lambda_order: c.lambda.order,
            lambda_log: c.lambda.log,
            w: c.lambda.w,
            degree: orbit.degree,
            defdeg: orbit.defdeg,
            unramified,
            label_r: (!unramified).then_some(c.orbit.r),
            level,
        }
    }

    fn sort_key(&self) -> (u64, u64, u64, u64, u64) {
        (self.degree, self.d, self.char_rep, self.lambda_order, self.lambda_log)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDump {
    pub char_rep: u64,
    pub lambda_order: u64,
    pub lambda_log: u64,
    pub level: Option<u32>,
    pub p: u64,
    pub modulus: Vec<u64>,
    pub gen_t: Vec<Vec<Vec<u64>>>,
    pub gen_s: Vec<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub e: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub f: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sweep: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub census_m: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub params: Params,
    pub records: Vec<OutputRecord>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matrices: Option<Vec<MatrixDump>>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Exit code of a command with the text it writes to each stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NonPrime(_) | Error::IncompatibleParameters(_) | Error::LevelsIncompatible(..) => EXIT_PARAMS,
        Error::TooLarge(_)
        | Error::GroupTooLarge(_)
        | Error::DegreeTooLarge { .. }
        | Error::FieldTooLarge(_)
        | Error::Inconclusive(_) => EXIT_TOO_LARGE,
        _ => EXIT_VERIFY,
    }
}

fn failed(err: Error) -> Outcome {
    Outcome {
        code: exit_code(&err),
        stdout: String::new(),
        stderr: format!("error: {err}\n"),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARAMS } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::ClassifyGroup(args) => classify_group(args).and_then(|r| render(&r, args.format)),
        Command::ClassifyGalois(args) => classify_galois(args).and_then(|r| render(&r, args.format)),
        Command::Verify(args) => verify(args).and_then(|r| render(&r, Format::Json)),
        Command::Examples(args) => return examples(args.preset.as_deref()),
    };
    result.unwrap_or_else(failed)
}

fn render(report: &Report, format: Format) -> Result<Outcome, Error> {
    let code = if report.passed() { EXIT_OK } else { EXIT_VERIFY };
    let mut stderr = String::new();
    let stdout = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            for c in &report.checks {
                let mark = if c.passed { "pass" } else { "FAIL" };
                let _ = writeln!(stderr, "{mark} {}: {}", c.name, c.detail);
            }
            records_to_csv(&report.records)
        }
    };
    if code != EXIT_OK {
        for c in report.checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(stderr, "check failed: {}: {}", c.name, c.detail);
        }
    }
    Ok(Outcome { code, stdout, stderr })
}

pub fn records_to_csv(records: &[OutputRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r).expect("record serializes");
    }
    if records.is_empty() {
        w.write_record(CSV_HEADER).expect("header");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

const CSV_HEADER: [&str; 16] = [
    "p", "a", "e", "f", "char_rep", "s", "d", "r", "lambda_order", "lambda_log", "w", "degree", "defdeg",
    "unramified", "label_r", "level",
];

pub fn records_from_csv(text: &str) -> Result<Vec<OutputRecord>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

fn buildable(p: u64, degree: u64) -> bool {
    degree <= MAX_BUILD_DEGREE
        && p.checked_pow(degree as u32)
            .is_some_and(|x| x <= EXHAUSTIVE_LIMIT)
}

fn dump(pi: &MatrixRep<PrimeField>, pair: &PairClass, level: Option<u32>) -> MatrixDump {
    let f = pi.field();
    let rows = |m: &crate::linalg::Matrix<PrimeField>| -> Vec<Vec<Vec<u64>>> {
        m.to_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|x| f.coords(x)).collect())
            .collect()
    };
    MatrixDump {
        char_rep: pair.orbit.rep_c,
        lambda_order: pair.lambda.order,
        lambda_log: pair.lambda.log,
        level,
        p: f.characteristic(),
        modulus: vec![0, 1],
        gen_t: rows(pi.gen_t()),
        gen_s: rows(pi.gen_s()),
    }
}

fn matrices_for(
    g: &TwistedGroup,
    orbits: &[PhiOrbit],
    level: Option<u32>,
) -> Result<Vec<MatrixDump>, Error> {
    let mut out = Vec::new();
    for o in orbits.iter().filter(|o| buildable(g.p(), o.degree)) {
        out.push(dump(&build_pi(g, o)?, &o.canonical, level));
    }
    Ok(out)
}

pub fn classify_group(args: &GroupArgs) -> Result<Report, Error> {
    let g = TwistedGroup::new(args.p, args.a, args.e, args.f)?;
    let orbits = phi_orbits(&g)?;
    let mut records: Vec<OutputRecord> = orbits.iter().map(|o| OutputRecord::from_orbit(&g, o, None)).collect();
    records.sort_by_key(|r| r.sort_key());
    let berman = berman_irreducible_count(&g)?;
    let checks = vec![Check::new(
        "berman_count",
        berman == orbits.len() as u64,
        format!("{} Frobenius orbits, {berman} orbits of p-regular classes", orbits.len()),
    )];
    let matrices = if args.emit_matrices {
        Some(matrices_for(&g, &orbits, None)?)
    } else {
        None
    };
    Ok(Report {
        params: Params {
            command: "classify-group".into(),
            p: Some(args.p),
            a: Some(args.a),
            e: Some(args.e),
            f: Some(args.f),
            ..Params::default()
        },
        records,
        checks,
        matrices,
    })
}

fn galois_record(k: &PFieldParams, rec: &GaloisRepRecord) -> Result<OutputRecord, Error> {
    let g = galois_group_at_level(k, rec.level)?;
    let mut out = OutputRecord::from_orbit(&g, &rec.orbit, Some(rec.level));
    out.unramified = rec.unramified;
    out.label_r = rec.label_r;
    Ok(out)
}

pub fn classify_galois(args: &GaloisArgs) -> Result<Report, Error> {
    let k = PFieldParams::new(args.p, args.a)?;
    let recs = classify_galois_reps(&k, args.max_degree)?;
    let records = recs.iter().map(|r| galois_record(&k, r)).collect::<Result<Vec<_>, _>>()?;
    let partition = ramification_partition(&recs);
    let summary: Vec<String> = partition
        .iter()
        .map(|(label, rs)| format!("r={label}: {}", rs.len()))
        .collect();
    let unramified = recs.iter().filter(|r| r.unramified).count();
    let checks = vec![Check::new(
        "ramification_partition",
        true,
        format!(
            "unramified: {unramified}; ramified by label: {}",
            if summary.is_empty() { "none".to_string() } else { summary.join(", ") }
        ),
    )];
    let matrices = if args.emit_matrices {
        let mut out = Vec::new();
        for rec in recs.iter().filter(|r| buildable(args.p, r.degree)) {
            let g = galois_group_at_level(&k, rec.level)?;
            out.push(dump(&build_pi(&g, &rec.orbit)?, &rec.orbit.canonical, Some(rec.level)));
        }
        Some(out)
    } else {
        None
    };
    Ok(Report {
        params: Params {
            command: "classify-galois".into(),
            p: Some(args.p),
            a: Some(args.a),
            max_degree: Some(args.max_degree),
            ..Params::default()
        },
        records,
        checks,
        matrices,
    })
}

/// Outcome of every oracle check on one group.
#[derive(Clone, Debug)]
pub struct GroupVerification {
    pub params: (u64, u32, u64, u64),
    pub checks: Vec<Check>,
}

fn census_formula(p: u64, end_degree: u32, m: usize) -> Option<u64> {
    let qe = p.checked_pow(end_degree)?;
    Some((qe.checked_pow(m as u32)? - 1) / (qe - 1))
}

/// Runs the oracle checks on `G(p, a, e, f)`.
pub fn verify_group(p: u64, a: u32, e: u64, f: u64, census_m: Option<usize>) -> Result<GroupVerification, Error> {
    let g = TwistedGroup::new(p, a, e, f)?;
    let orbits = phi_orbits(&g)?;
    let mut checks = Vec::new();

    let berman = berman_irreducible_count(&g)?;
    checks.push(Check::new(
        "berman_count",
        berman == orbits.len() as u64,
        format!("{} orbits, Berman count {berman}", orbits.len()),
    ));

    let pairs = enumerate_pairs(&g)?;
    let regular = p_regular_class_count(&g)?;
    checks.push(Check::new(
        "pairs_vs_p_regular_classes",
        pairs.len() as u64 == regular,
        format!("{} pairs, {regular} p-regular classes", pairs.len()),
    ));

    if !f.is_multiple_of(p) {
        let sum: u64 = pairs.iter().map(|x| x.orbit.s * x.orbit.s).sum();
        checks.push(Check::new(
            "sum_of_squares",
            sum == e * f,
            format!("sum of s^2 = {sum}, e*f = {}", e * f),
        ));
    }

    let mut built = Vec::new();
    let mut bad = Vec::new();
    for o in &orbits {
        let want = lcm(o.r(), o.s() * o.w());
        if o.degree != want {
            bad.push(format!("{:?}: degree {} != {want}", o.canonical.key(), o.degree));
            continue;
        }
        if !buildable(p, o.degree) {
            continue;
        }
        let pi = build_pi(&g, o)?;
        if pi.degree() as u64 != want || !is_irreducible(&pi)? {
            bad.push(format!("{:?}: built representation fails", o.canonical.key()));
        }
        built.push((o, pi));
    }
    checks.push(Check::new(
        "degree_formula_irreducible",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} orbits, {} built and irreducible", orbits.len(), built.len())
        } else {
            bad.join("; ")
        },
    ));

    let mut iso = Vec::new();
    for i in 0..built.len() {
        for j in 0..i {
            if built[i].1.degree() == built[j].1.degree() && are_isomorphic(&built[i].1, &built[j].1)? {
                iso.push(format!("{:?} ~ {:?}", built[i].0.canonical.key(), built[j].0.canonical.key()));
            }
        }
    }
    checks.push(Check::new(
        "pairwise_non_isomorphic",
        iso.is_empty(),
        if iso.is_empty() { format!("{} representations", built.len()) } else { iso.join("; ") },
    ));

    if tilde_degree(p, a, f) <= MAX_DEGREE as u64 {
        let mut count = 0;
        let mut bad = Vec::new();
        for (o, pi) in built.iter().filter(|(o, _)| o.degree <= MAX_DESCENT_DEGREE) {
            let mut want = o.members.clone();
            want.sort_by_key(|x| x.key());
            if decompose_pi_over_tilde(pi)? != want {
                bad.push(format!("{:?}", o.canonical.key()));
            }
            count += 1;
        }
        checks.push(Check::new(
            "descent_identity",
            bad.is_empty(),
            if bad.is_empty() { format!("{count} orbits decomposed") } else { bad.join("; ") },
        ));
    }

    if let Some(m) = census_m {
        let mut parts = Vec::new();
        let mut ok = true;
        for (o, pi) in &built {
            let within = p
                .checked_pow((pi.degree() * m) as u32)
                .is_some_and(|x| x <= EXHAUSTIVE_LIMIT);
            if !within {
                continue;
            }
            let end = endomorphism_field(pi)?;
            let census = submodule_census(pi, m)?;
            let formula = census_formula(p, end, m);
            ok &= formula == Some(census);
            parts.push(format!("{:?}: census = {census}", o.canonical.key()));
        }
        checks.push(Check::new("submodule_census", ok, parts.join("; ")));
    }

    Ok(GroupVerification {
        params: (p, a, e, f),
        checks,
    })
}

/// All `(p, a, e, f)` with `e·f ≤ bound` and `e | q^f − 1`.
pub fn sweep_groups(bound: u64, primes: &[u64], exponents: &[u32]) -> Vec<(u64, u32, u64, u64)> {
    let mut out = Vec::new();
    for &p in primes {
        for &a in exponents {
            let Some(q) = p.checked_pow(a) else { continue };
            for f in 1..=bound {
                for e in 1..=bound / f {
                    if pow_mod(q % e, f, e) == 1 % e {
                        out.push((p, a, e, f));
                    }
                }
            }
        }
    }
    out
}

pub fn verify(args: &VerifyArgs) -> Result<Report, Error> {
    let params = Params {
        command: "verify".into(),
        p: args.p,
        a: args.a,
        e: args.e,
        f: args.f,
        sweep: args.sweep,
        census_m: args.census_m,
        ..Params::default()
    };
    if args.census_m == Some(0) {
        return Err(Error::IncompatibleParameters("census-m must be positive".into()));
    }
    if let Some(bound) = args.sweep {
        let primes = args.p.map_or(vec![2, 3], |p| vec![p]);
        let exponents = args.a.map_or(vec![1, 2], |a| vec![a]);
        for &p in &primes {
            PFieldParams::new(p, 1)?;
        }
        let groups = sweep_groups(bound, &primes, &exponents);
        let results: Vec<Result<GroupVerification, Error>> = groups
            .par_iter()
            .map(|&(p, a, e, f)| verify_group(p, a, e, f, args.census_m))
            .collect();
        let mut names: Vec<String> = Vec::new();
        let mut totals: Vec<(usize, Vec<String>)> = Vec::new();
        for res in results {
            let v = res?;
            for c in v.checks {
                let idx = match names.iter().position(|n| *n == c.name) {
                    Some(i) => i,
                    None => {
                        names.push(c.name.clone());
                        totals.push((0, Vec::new()));
                        names.len() - 1
                    }
                };
                totals[idx].0 += 1;
                if !c.passed {
                    let (p, a, e, f) = v.params;
                    totals[idx].1.push(format!("G({p},{a},{e},{f}): {}", c.detail));
                }
            }
        }
        let mut checks = vec![Check::new("sweep", true, format!("{} groups", groups.len()))];
        for (name, (count, failures)) in names.iter().zip(totals) {
            let detail = if failures.is_empty() {
                format!("{count} groups pass")
            } else {
                failures.join("; ")
            };
            checks.push(Check::new(name, failures.is_empty(), detail));
        }
        return Ok(Report {
            params,
            records: Vec::new(),
            checks,
            matrices: None,
        });
    }
    let (Some(p), Some(a), Some(e), Some(f)) = (args.p, args.a, args.e, args.f) else {
        return Err(Error::IncompatibleParameters(
            "verify needs --p --a --e --f or --sweep".into(),
        ));
    };
    let g = TwistedGroup::new(p, a, e, f)?;
    let mut records: Vec<OutputRecord> = phi_orbits(&g)?
        .iter()
        .map(|o| OutputRecord::from_orbit(&g, o, None))
        .collect();
    records.sort_by_key(|r| r.sort_key());
    let v = verify_group(p, a, e, f, args.census_m)?;
    Ok(Report {
        params,
        records,
        checks: v.checks,
        matrices: None,
    })
}

pub const PRESETS: [&str; 4] = ["z3", "a3", "s3", "galois-n2"];

/// Expected summary line of each preset.
pub fn golden(preset: &str) -> Option<&'static str> {
    match preset {
        "s3" => Some("π: G ≅ GL_2(𝐅_2); twist ≅ 𝔖_4"),
        "z3" => Some("degrees {1,2}; twist ≅ 𝔄_4"),
        "a3" => Some("degrees {1,2}; twist ≅ 𝔄_4, as before"),
        "galois-n2" => Some("q=2: 1 trivial, 1 unramified of degree 2, 1 ramified of degree 2 (e=3, r=2)"),
        _ => None,
    }
}

fn fraktur(name: &GroupName) -> String {
    match name {
        GroupName::Alternating4 => "𝔄_4".into(),
        GroupName::Symmetric4 => "𝔖_4".into(),
        GroupName::Symmetric3 => "𝔖_3".into(),
        other => other.to_string(),
    }
}

fn degree_set(g: &TwistedGroup) -> Result<(Vec<PhiOrbit>, String), Error> {
    let orbits = phi_orbits(g)?;
    let degs: Vec<String> = orbits.iter().map(|o| o.degree.to_string()).collect();
    Ok((orbits, format!("{{{}}}", degs.join(","))))
}

fn top_twist(g: &TwistedGroup, orbits: &[PhiOrbit]) -> Result<(MatrixRep<PrimeField>, GroupName), Error> {
    let top = orbits.last().ok_or(Error::IncompatibleParameters("no representations".into()))?;
    let pi = build_pi(g, top)?;
    let name = identify_small_group(&twist_by_rep(&pi)?)?;
    Ok((pi, name))
}

/// `|GL_n(F_p)|`.
fn gl_order(p: u64, n: u32) -> Option<u64> {
    let pn = p.checked_pow(n)?;
    (0..n).try_fold(1u64, |acc, i| acc.checked_mul(pn - p.pow(i)))
}

fn z3_summary() -> Result<(String, GroupName), Error> {
    let g = TwistedGroup::new(2, 1, 1, 3)?;
    let (orbits, degs) = degree_set(&g)?;
    let (_, name) = top_twist(&g, &orbits)?;
    Ok((format!("degrees {degs}; twist ≅ {}", fraktur(&name)), name))
}

fn preset_summary(preset: &str) -> Result<String, Error> {
    match preset {
        "z3" => Ok(z3_summary()?.0),
        "a3" => {
            let g = TwistedGroup::new(2, 2, 3, 1)?;
            let (orbits, degs) = degree_set(&g)?;
            let (_, name) = top_twist(&g, &orbits)?;
            let (_, before) = z3_summary()?;
            let suffix = if name == before { ", as before" } else { "" };
            Ok(format!("degrees {degs}; twist ≅ {}{suffix}", fraktur(&name)))
        }
        "s3" => {
            let g = TwistedGroup::new(2, 1, 3, 2)?;
            let (orbits, _) = degree_set(&g)?;
            let (pi, name) = top_twist(&g, &orbits)?;
            let n = pi.degree() as u32;
            let image = image_order(&pi)? as u64;
            let iso = image == g.order() && gl_order(2, n) == Some(image);
            let head = if iso {
                format!("π: G ≅ GL_{n}(𝐅_2)")
            } else {
                format!("π: image of order {image} in GL_{n}(𝐅_2)")
            };
            Ok(format!("{head}; twist ≅ {}", fraktur(&name)))
        }
        "galois-n2" => {
            let recs = classify_galois_reps(&PFieldParams::new(2, 1)?, 2)?;
            let trivial = recs.iter().filter(|r| r.degree == 1).count();
            let unram = recs.iter().filter(|r| r.degree == 2 && r.unramified).count();
            let ram: Vec<String> = recs
                .iter()
                .filter(|r| r.degree == 2 && !r.unramified)
                .map(|r| format!("e={}, r={}", r.e, r.label_r.unwrap_or(0)))
                .collect();
            Ok(format!(
                "q=2: {trivial} trivial, {unram} unramified of degree 2, {} ramified of degree 2 ({})",
                ram.len(),
                ram.join("; ")
            ))
        }
        other => Err(Error::IncompatibleParameters(format!(
            "unknown preset {other}; choose one of {}",
            PRESETS.join(", ")
        ))),
    }
}

pub fn examples(preset: Option<&str>) -> Outcome {
    let selected: Vec<&str> = match preset {
        Some(p) => vec![p],
        None => PRESETS.to_vec(),
    };
    let mut out = Outcome {
        code: EXIT_OK,
        stdout: String::new(),
        stderr: String::new(),
    };
    for name in selected {
        let summary = match preset_summary(name) {
            Ok(s) => s,
            Err(e) => return failed(e),
        };
        let _ = writeln!(out.stdout, "{name}: {summary}");
        if golden(name) != Some(summary.as_str()) {
            out.code = EXIT_VERIFY;
            let _ = writeln!(
                out.stderr,
                "{name}: expected {:?}",
                golden(name).unwrap_or("")
            );
        }
    }
    out
}
