//! Command-line front end. Every command prints one JSON document (keys
//! sorted, counts as decimal strings) or CSV rows on stdout; diagnostics
//! go to stderr.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid parameters.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::codebuild::{cyclic_c1_basis, CodeSpec, Family, Workers};
use crate::designs::{blocks_of_weight, full_design_report, write_blocks_csv, DesignRow};
use crate::error::{Error, Result};
use crate::gf2m::FieldSpec;
use crate::invariance::invariance_report;
use crate::polyops::BinaryPolynomial;
use crate::spectrum::{
    closed_form_c1, closed_form_c2_extended, code_weight_distribution, pless_verify, weight_distribution,
    WeightDistribution,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_PARAMS: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "design-forge", version, about = "Weight distributions and support designs of trace-form codes")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads (defaults to available parallelism).
    #[arg(long, env = "DESIGN_FORGE_THREADS", global = true)]
    pub threads: Option<usize>,
    /// Primitive polynomial for GF(2^m) as hex, e.g. 0x43.
    #[arg(long, global = true)]
    pub poly: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    C1,
    C2,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub s: u32,
    /// Required for c2.
    #[arg(long)]
    pub l: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Field parameters and primitivity check.
    Field {
        #[arg(long)]
        m: u32,
    },
    /// Weight distribution by enumeration.
    Weights {
        #[command(flatten)]
        code: CodeArgs,
        /// Compare against the closed-form table.
        #[arg(long)]
        closed_form: bool,
    },
    /// Verify the support designs of every weight class.
    Designs {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 2)]
        t: u32,
        /// Also count classes above the increment budget.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Affine invariance by defining-set closure and, for m <= 6, by brute force.
    Invariance {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Re-run the published examples.
    Reproduce {
        #[arg(long, conflicts_with = "example")]
        all: bool,
        /// One of 3.3, 3.4, 3.5 (the m=4 code), 3.6, 3.7, 3.8.
        #[arg(long)]
        example: Option<String>,
    },
    /// Export the supports of one weight class, one block per line.
    Blocks {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        weight: u32,
    },
}

/// Which errors count as bad input rather than failed verification.
pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NonIntegerCount { .. }
        | Error::NonIntegerLambda(_)
        | Error::NotConstant { .. }
        | Error::WeightCollision { .. } => EXIT_MISMATCH,
        _ => EXIT_PARAMS,
    }
}

struct Output {
    value: Value,
    csv: Vec<String>,
    ok: bool,
}

/// Parses `args` and runs the command, writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARAMS } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, err) {
        Ok(o) => {
            let written = match cli.format {
                Format::Json => serde_json::to_string_pretty(&o.value)
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}")),
                Format::Csv => o.csv.iter().try_for_each(|line| writeln!(out, "{line}")),
            };
            match written {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_PARAMS;
                }
                Ok(()) => {}
            }
            if o.ok {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn workers(cli: &Cli) -> Workers {
    cli.threads.map_or_else(Workers::available, Workers::new)
}

fn field_for(cli: &Cli, m: u32) -> Result<FieldSpec> {
    let poly = match &cli.poly {
        None => None,
        Some(h) => Some(
            BinaryPolynomial::from_hex(h)
                .ok_or_else(|| Error::InvalidParameters(format!("cannot parse polynomial {h:?}")))?,
        ),
    };
    FieldSpec::new(m, poly)
}

fn code_spec(args: &CodeArgs) -> Result<CodeSpec> {
    match (args.family, args.l) {
        (FamilyArg::C1, None) => CodeSpec::c1(args.s),
        (FamilyArg::C1, Some(_)) => Err(Error::InvalidParameters("--l only applies to c2".into())),
        (FamilyArg::C2, Some(l)) => CodeSpec::c2(args.s, l),
        (FamilyArg::C2, None) => Err(Error::InvalidParameters("c2 needs --l".into())),
    }
}

fn code_json(spec: &CodeSpec) -> Value {
    let l = match spec.family() {
        Family::C1 => Value::Null,
        Family::C2 => json!(spec.l()),
    };
    json!({"family": spec.family().to_string(), "s": spec.s(), "l": l, "m": spec.m()})
}

fn dist_json(d: &WeightDistribution) -> Value {
    serde_json::to_value(d).expect("distribution serializes")
}

fn dist_csv(d: &WeightDistribution) -> Vec<String> {
    let mut rows = vec!["w,count".to_string()];
    rows.extend(d.entries().iter().map(|(w, c)| format!("{w},{c}")));
    rows
}

fn closed_form(spec: &CodeSpec) -> Result<WeightDistribution> {
    match spec.family() {
        Family::C1 => closed_form_c1(spec.s()),
        Family::C2 => closed_form_c2_extended(spec.s(), spec.l()),
    }
}

fn design_csv(rows: &[DesignRow]) -> Vec<String> {
    let opt = |v: Option<String>| v.unwrap_or_default();
    let mut out = vec!["t,v,k,b,lambda,verified,skipped,theorem_lambda,match".to_string()];
    out.extend(rows.iter().map(|r| {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            r.t,
            r.v,
            r.k,
            r.b,
            opt(r.lambda.map(|l| l.to_string())),
            r.verified,
            r.skipped,
            opt(r.theorem_lambda.as_ref().map(|l| l.to_string())),
            opt(r.matches.map(|m| m.to_string())),
        )
    }));
    out
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<Output> {
    let workers = workers(cli);
    match &cli.command {
        Command::Field { m } => {
            let field = field_for(cli, *m)?;
            let poly = format!("0x{:x}", field.poly_bits());
            let order = (1..=field.n() as u64)
                .find(|&i| field.alpha_pow(i) == crate::gf2m::FieldElement::ONE)
                .expect("alpha has finite order");
            let value = json!({
                "m": field.m(),
                "q": field.q(),
                "n": field.n(),
                "poly": poly,
                "alpha_order": order,
                "primitive": order == field.n() as u64,
            });
            let csv = vec![
                "key,value".into(),
                format!("m,{}", field.m()),
                format!("q,{}", field.q()),
                format!("n,{}", field.n()),
                format!("poly,{poly}"),
                format!("alpha_order,{order}"),
            ];
            Ok(Output { value, csv, ok: true })
        }
        Command::Weights { code, closed_form: cf } => {
            let spec = code_spec(code)?;
            let field = field_for(cli, spec.m())?;
            let expected = if *cf { Some(closed_form(&spec)?) } else { None };
            let dist = weight_distribution(&spec, &field, workers)?;
            let mut value = code_json(&spec);
            value["distribution"] = dist_json(&dist);
            let mut csv = dist_csv(&dist);
            let mut ok = true;
            if let Some(exp) = expected {
                let diff = dist.diff(&exp);
                ok = diff.is_empty();
                value["closed_form"] = dist_json(&exp);
                value["match"] = json!(ok);
                value["diff"] = Value::Array(
                    diff.iter()
                        .map(|(w, a, b)| json!({"w": w, "enumerated": a.to_string(), "closed_form": b.to_string()}))
                        .collect(),
                );
                csv.push(format!("match,{ok}"));
                for (w, a, b) in &diff {
                    let _ = writeln!(err, "mismatch at weight {w}: enumerated {a}, closed form {b}");
                }
            }
            Ok(Output { value, csv, ok })
        }
        Command::Designs { code, t, exhaustive } => {
            let spec = code_spec(code)?;
            if !(2..=3).contains(t) {
                return Err(Error::InvalidParameters(format!("t must be 2 or 3, got {t}")));
            }
            let field = field_for(cli, spec.m())?;
            let rows = full_design_report(&spec, &field, *t, workers, *exhaustive)?;
            for r in rows.iter().filter(|r| r.skipped) {
                let _ = writeln!(err, "notice: weight {} skipped (over budget; pass --exhaustive)", r.k);
            }
            for r in rows.iter().filter(|r| !r.skipped && !r.ok()) {
                let _ = writeln!(
                    err,
                    "weight {}: verified={} lambda={:?} theorem={:?}{}",
                    r.k,
                    r.verified,
                    r.lambda,
                    r.theorem_lambda.as_ref().map(|l| l.to_string()),
                    r.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default()
                );
            }
            let ok = rows.iter().filter(|r| !r.skipped).all(DesignRow::ok);
            let mut value = code_json(&spec);
            value["t"] = json!(t);
            value["rows"] = serde_json::to_value(&rows).expect("rows serialize");
            value["verified"] = json!(rows.iter().filter(|r| r.verified).count());
            value["skipped"] = json!(rows.iter().filter(|r| r.skipped).count());
            value["ok"] = json!(ok);
            Ok(Output {
                value,
                csv: design_csv(&rows),
                ok,
            })
        }
        Command::Invariance { code } => {
            let spec = code_spec(code)?;
            let field = field_for(cli, spec.m())?;
            let rep = invariance_report(&spec, &field)?;
            let ok = rep.closure && rep.orbit != Some(false);
            let mut value = serde_json::to_value(&rep).expect("report serializes");
            for (k, v) in code_json(&spec).as_object().expect("object") {
                value[k] = v.clone();
            }
            let csv = vec![
                "key,value".into(),
                format!("closure,{}", rep.closure),
                format!(
                    "witness,{}",
                    rep.witness.map(|(e, r)| format!("{e} {r}")).unwrap_or_default()
                ),
                format!("orbit_checked,{}", rep.orbit_checked),
                format!("orbit,{}", rep.orbit.map(|b| b.to_string()).unwrap_or_default()),
            ];
            Ok(Output { value, csv, ok })
        }
        Command::Reproduce { all, example } => {
            let ids: Vec<&str> = match (all, example) {
                (true, _) => EXAMPLES.iter().map(|e| e.id).collect(),
                (false, Some(id)) => vec![id.as_str()],
                (false, None) => {
                    return Err(Error::InvalidParameters("pass --all or --example ID".into()));
                }
            };
            let mut results = Vec::new();
            let mut csv = vec!["check,ok".to_string()];
            for id in &ids {
                let ex = EXAMPLES
                    .iter()
                    .find(|e| e.id == *id)
                    .ok_or_else(|| Error::InvalidParameters(format!("unknown example {id}")))?;
                let r = reproduce_example(ex, cli, workers)?;
                if !r.ok {
                    let _ = writeln!(err, "example {} did not match", ex.id);
                }
                csv.push(format!("example {},{}", ex.id, r.ok));
                results.push(r);
            }
            let mut pless = Vec::new();
            if *all {
                for s in [3u32, 4] {
                    let field = field_for(cli, 2 * s)?;
                    let code = cyclic_c1_basis(&field)?;
                    let dist = code_weight_distribution(&code, workers)?;
                    let rep = pless_verify(&dist, field.n() as u64, code.dimension() as u32);
                    csv.push(format!("pless cyclic c1 s={s},{}", rep.holds));
                    pless.push(json!({"s": s, "holds": rep.holds, "first_failure": rep.first_failure}));
                }
            }
            let matched = results.iter().filter(|r| r.ok).count();
            let ok = matched == results.len() && pless.iter().all(|p| p["holds"] == json!(true));
            let value = json!({
                "examples": results.iter().map(|r| r.value.clone()).collect::<Vec<_>>(),
                "pless": pless,
                "matched": format!("{matched}/{}", results.len()),
                "ok": ok,
            });
            Ok(Output { value, csv, ok })
        }
        Command::Blocks { code, weight } => {
            let spec = code_spec(code)?;
            let field = field_for(cli, spec.m())?;
            let blocks = blocks_of_weight(&spec, &field, *weight)?;
            let mut buf = Vec::new();
            write_blocks_csv(&mut buf, &blocks).expect("writing to memory");
            let csv = String::from_utf8(buf)
                .expect("ascii")
                .lines()
                .map(str::to_string)
                .collect();
            let value = json!({
                "v": spec.length(),
                "k": weight,
                "b": blocks.len().to_string(),
                "blocks": blocks,
            });
            Ok(Output { value, csv, ok: true })
        }
    }
}

struct Example {
    id: &'static str,
    family: Family,
    s: u32,
    l: u32,
    enumerator: &'static [(u32, u64)],
    t: u32,
    lambdas: &'static [(u32, u64)],
}

const EXAMPLES: &[Example] = &[
    Example {
        id: "3.3",
        family: Family::C1,
        s: 3,
        l: 0,
        enumerator: &[
            (0, 1),
            (16, 252),
            (24, 37632),
            (28, 107520),
            (32, 233478),
            (36, 107520),
            (40, 37632),
            (48, 252),
            (64, 1),
        ],
        t: 2,
        lambdas: &[(16, 15), (24, 5152), (28, 20160), (32, 57443), (36, 33600), (40, 14560), (48, 141)],
    },
    Example {
        id: "3.4",
        family: Family::C1,
        s: 4,
        l: 0,
        enumerator: &[
            (0, 1),
            (96, 17136),
            (112, 2437120),
            (120, 6754304),
            (128, 15137310),
            (136, 6754304),
            (144, 2437120),
            (160, 17136),
            (256, 1),
        ],
        t: 2,
        lambdas: &[],
    },
    Example {
        id: "3.5",
        family: Family::C1,
        s: 2,
        l: 0,
        enumerator: &[(0, 1), (4, 140), (6, 448), (8, 870), (10, 448), (12, 140), (16, 1)],
        t: 3,
        lambdas: &[(4, 1), (6, 16), (8, 87), (10, 96), (12, 55)],
    },
    Example {
        id: "3.6",
        family: Family::C2,
        s: 2,
        l: 1,
        enumerator: &[(0, 1), (4, 140), (6, 448), (8, 870), (10, 448), (12, 140), (16, 1)],
        t: 2,
        lambdas: &[(4, 7), (6, 56), (8, 203), (10, 168), (12, 77)],
    },
    Example {
        id: "3.7",
        family: Family::C2,
        s: 3,
        l: 2,
        enumerator: &[(0, 1), (24, 5040), (28, 12544), (32, 30366), (36, 12544), (40, 5040), (64, 1)],
        t: 2,
        lambdas: &[(24, 690), (28, 2352), (32, 7471), (36, 3920), (40, 1950)],
    },
    Example {
        id: "3.8",
        family: Family::C2,
        s: 3,
        l: 1,
        enumerator: &[
            (0, 1),
            (16, 84),
            (24, 3360),
            (28, 17920),
            (32, 22806),
            (36, 17920),
            (40, 3360),
            (48, 84),
            (64, 1),
        ],
        t: 2,
        lambdas: &[(16, 5), (24, 460), (28, 3360), (32, 5611), (36, 5600), (40, 1300), (48, 47)],
    },
];

struct ExampleResult {
    ok: bool,
    value: Value,
}

fn reproduce_example(ex: &Example, cli: &Cli, workers: Workers) -> Result<ExampleResult> {
    let spec = match ex.family {
        Family::C1 => CodeSpec::c1(ex.s)?,
        Family::C2 => CodeSpec::c2(ex.s, ex.l)?,
    };
    let field = field_for(cli, spec.m())?;
    let dist = weight_distribution(&spec, &field, workers)?;
    let golden = WeightDistribution::from_pairs(dist.length(), dist.dimension(), ex.enumerator);
    let enumerator_ok = dist == golden;
    let mut designs_ok = true;
    let mut designs = Vec::new();
    if !ex.lambdas.is_empty() {
        let rows = full_design_report(&spec, &field, ex.t, workers, false)?;
        let got: Vec<(u32, Option<u64>)> = rows.iter().map(|r| (r.k, r.lambda)).collect();
        let want: Vec<(u32, Option<u64>)> = ex.lambdas.iter().map(|&(k, l)| (k, Some(l))).collect();
        designs_ok = got == want && rows.iter().all(|r| r.verified);
        designs = rows
            .iter()
            .map(|r| json!({"k": r.k, "lambda": r.lambda.map(|l| l.to_string())}))
            .collect();
    }
    let ok = enumerator_ok && designs_ok;
    let mut value = code_json(&spec);
    value["id"] = json!(ex.id);
    value["length"] = json!(dist.length());
    value["dimension"] = json!(dist.dimension());
    value["min_distance"] = json!(dist.min_nonzero_weight());
    value["enumerator_match"] = json!(enumerator_ok);
    value["t"] = json!(ex.t);
    value["designs"] = Value::Array(designs);
    value["designs_match"] = json!(designs_ok);
    value["ok"] = json!(ok);
    Ok(ExampleResult { ok, value })
}
