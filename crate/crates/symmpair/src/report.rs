//! Execution of parsed commands into versioned reports.

use crate::command::{Cli, Command, HitchinAction, PairAction, SpectralAction};
use crate::json;
use crate::verify;
use crate::{EXIT_ERROR, EXIT_OK, EXIT_UNRESOLVED, RANK_GUARD_ENV};
use serde_json::{json, Value};
use symmpair_core::centralizers::{group_centralizer_info, is_regular, jordan_decompose, lie_centralizer, Ambient};
use symmpair_core::hitchin::{base_dimension, exponents_on, nonseparated_intersection_count, sheet_decomposition, CurveConfig};
use symmpair_core::regquot::{Count, FactorKind, RegularQuotient};
use symmpair_core::rootsys::{limit_for_rank_guard, DEFAULT_RANK_GUARD};
use symmpair_core::spectral::{cover_discriminant, invariants_from_higgs, sheets_over_point, SpectralCoverData};
use symmpair_core::sympair::{
    catalog_pair, is_quasisplit, Involution, known_alias, restricted_root_system_with_limit, table_row, PairSpec,
};
use symmpair_core::{Error, Result, VERSION};

pub const SCHEMA_VERSION: u32 = 1;

/// What a command printed and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

struct Report {
    kind: &'static str,
    result: Value,
    unresolved: bool,
    /// Set by `verify` when a criterion fails.
    failed: bool,
    notes: Vec<String>,
}

impl Report {
    fn ok(kind: &'static str, result: Value) -> Self {
        Report { kind, result, unresolved: false, failed: false, notes: Vec::new() }
    }
}

fn envelope(cli: &Cli, kind: &str, body: (&str, Value)) -> Value {
    let mut v = json!({
        "schema": format!("symmpair.{kind}/{SCHEMA_VERSION}"),
        "version": VERSION,
        "seed": cli.seed,
        "command": cli.to_args(),
    });
    v[body.0] = body.1;
    v
}

/// Rank guard from the environment, falling back to the default.
pub fn rank_guard() -> Result<usize> {
    match std::env::var(RANK_GUARD_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{RANK_GUARD_ENV} must be a nonnegative integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_RANK_GUARD),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(r) => {
            let code = if r.failed {
                EXIT_ERROR
            } else if r.unresolved {
                EXIT_UNRESOLVED
            } else {
                EXIT_OK
            };
            let stdout = if cli.json {
                let v = envelope(cli, r.kind, ("result", r.result));
                serde_json::to_string_pretty(&v).expect("serializable") + "\n"
            } else {
                render_text(&r.result)
            };
            let stderr = r.notes.iter().map(|n| format!("{n}\n")).collect();
            Outcome { stdout, stderr, code }
        }
        Err(e) => {
            let stdout = if cli.json {
                let v = envelope(cli, "error", ("error", json!({ "kind": error_kind(&e), "message": e.to_string() })));
                serde_json::to_string_pretty(&v).expect("serializable") + "\n"
            } else {
                String::new()
            };
            Outcome { stdout, stderr: format!("error: {e}\n"), code: EXIT_ERROR }
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "ParseError",
        Error::UnknownType(_) => "UnknownType",
        Error::RankOutOfRange { .. } => "RankOutOfRange",
        Error::NotARootSystem(_) => "NotARootSystem",
        Error::EnumerationLimitExceeded { .. } => "EnumerationLimitExceeded",
        Error::UnsupportedFamily(_) => "UnsupportedFamily",
        Error::BadParameters(_) => "BadParameters",
        Error::ModelMissing(_) => "ModelMissing",
        Error::TableModelMismatch(_) => "TableModelMismatch",
        Error::NotInP => "NotInP",
        Error::NotRegular => "NotRegular",
        Error::SamplingFailed(_) => "SamplingFailed",
        Error::UnrecognizedComponent(_) => "UnrecognizedComponent",
        Error::OddCoefficientNonzero(_) => "OddCoefficientNonzero",
        Error::DegreeTooSmall { .. } => "DegreeTooSmall",
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    let limit = limit_for_rank_guard(rank_guard()?);
    match &cli.command {
        Command::Pair { action: PairAction::Info { spec } } => pair_info(&PairSpec::parse(spec)?, limit),
        Command::Regquot { spec } => regquot(&PairSpec::parse(spec)?, limit),
        Command::Spectral { action: SpectralAction::Invariants { n, c, d } } => {
            let (c, d) = (json::parse_real_matrix(c)?, json::parse_real_matrix(d)?);
            if c.rows() != *n || d.rows() != *n {
                return Err(Error::BadParameters(format!("--n is {n} but the blocks are {}x{} and {}x{}", c.rows(), c.rows(), d.rows(), d.rows())));
            }
            Ok(Report::ok("spectral", spectral_json(&invariants_from_higgs(&c, &d)?)))
        }
        Command::Spectral { action: SpectralAction::Sheets { a } } => {
            let a = json::parse_q_list(a)?;
            Ok(Report::ok("spectral", spectral_json(&SpectralCoverData::from_coefficients(a))))
        }
        Command::Hitchin { action: HitchinAction::Base { pair, genus, deg_d, canonical } } => {
            hitchin_base(&PairSpec::parse(pair)?, *genus, *deg_d, *canonical, limit)
        }
        Command::Hitchin { action: HitchinAction::Sheets { deg_d } } => {
            let s = sheet_decomposition(*deg_d)?;
            let cross = nonseparated_intersection_count(&CurveConfig::new(0, *deg_d as i64))?;
            Ok(Report::ok(
                "hitchin-sheets",
                json!({
                    "deg_D": deg_d,
                    "nonseparated_intersections": cross,
                    "degrees": s.degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                    "total": s.total.to_string(),
                }),
            ))
        }
        Command::Centralizer { spec, x } => centralizer(&PairSpec::parse(spec)?, x),
        Command::Verify { which } => run_verify(cli.seed, which),
    }
}

fn pair_info(spec: &PairSpec, limit: u128) -> Result<Report> {
    let pair = catalog_pair(spec)?;
    let rr = restricted_root_system_with_limit(&pair, limit)?;
    let row = table_row(spec)?;
    let qs = is_quasisplit(&pair)?;
    let label = &rr.base.type_label;
    let roots: Vec<Value> = rr
        .base
        .roots
        .iter()
        .zip(&rr.multiplicities)
        .map(|(r, m)| json!({ "root": json::qvec(r), "multiplicity": m }))
        .collect();
    let model = pair.model.as_ref().map(|m| {
        json!({
            "size": m.size,
            "field": m.field.name(),
            "dim_g": m.g_basis.len(),
            "dim_k": m.k_basis.len(),
            "dim_p": m.p_basis.len(),
            "involution": { "kind": involution_kind(&m.involution), "matrix": json::matrix(m.involution.matrix(), m.field) },
            "cartan": m.cartan.iter().map(|c| json::matrix(c, m.field)).collect::<Vec<_>>(),
        })
    });
    let result = json!({
        "spec": spec.to_string(),
        "family": spec.family_name(),
        "rank_theta": pair.rank_theta,
        "restricted_type": json::type_label(label),
        "tabulated_type": json::type_label(&row.restricted_type),
        "known_alias": known_alias(spec, label),
        "split": row.split,
        "quasi_split": { "computed": qs.computed, "tabulated": qs.tabulated, "zero_fiber_size": qs.zero_fiber_size, "method": qs.method },
        "roots": roots,
        "simple_roots": rr.base.simple_roots.iter().map(|r| json::qvec(r)).collect::<Vec<_>>(),
        "little_weyl_order": rr.little_weyl.order.to_string(),
        "model": model,
    });
    Ok(Report::ok("pair-info", result))
}

fn involution_kind(i: &Involution) -> &'static str {
    match i {
        Involution::Conj { .. } => "x -> S x S^-1",
        Involution::NegTranspose { .. } => "x -> -S x^T S^-1",
    }
}

fn count_json(c: Count) -> Value {
    match c {
        Count::Known(k) => json!(k),
        Count::Unresolved => json!("unresolved"),
    }
}

fn factor_name(k: &FactorKind) -> String {
    match k {
        FactorKind::Pair(p) => p.to_string(),
        FactorKind::Diag(t) => format!("DIAG({t})"),
        FactorKind::Torus(r) => format!("torus({r})"),
    }
}

fn regquot(spec: &PairSpec, limit: u128) -> Result<Report> {
    let rq = RegularQuotient::with_limit(spec, limit)?;
    let gp = rq.gluing_pattern()?;
    let strata: Vec<Value> = gp
        .strata
        .iter()
        .map(|s| {
            json!({
                "flat": json::flat(&s.flat),
                "codim": s.codim,
                "equations": rq.equations(&s.descendant.pattern),
                "S_type": json::type_label(&s.s_type),
                "descendant": {
                    "factors": s.descendant.factors.iter().map(|f| json!({ "kind": factor_name(&f.kind), "coordinates": f.provenance })).collect::<Vec<_>>(),
                    "coupling": format!("{:?}", s.descendant.coupling),
                },
                "sheets": count_json(s.sheet_count),
            })
        })
        .collect();
    let z: Vec<Value> = gp.glued_locus.iter().map(|g| json!({ "stratum": g.stratum, "equations": g.equations })).collect();
    let result = json!({
        "spec": spec.to_string(),
        "dim": rq.dim(),
        "restricted_type": json::type_label(&rq.roots.base.type_label),
        "strata": strata,
        "Z": z,
        "max_sheets": gp.max_sheets(),
        "summary": gp.summary,
        "unresolved": gp.unresolved,
    });
    let mut r = Report::ok("regquot", result);
    r.unresolved = gp.has_unresolved();
    Ok(r)
}

fn spectral_json(d: &SpectralCoverData) -> Value {
    let disc = cover_discriminant(d);
    json!({
        "n": d.n,
        "a": d.a.iter().map(json::q).collect::<Vec<_>>(),
        "cover_poly": d.cover_poly.coeffs().iter().map(json::q).collect::<Vec<_>>(),
        "even_poly": d.even_poly().coeffs().iter().map(json::q).collect::<Vec<_>>(),
        "discriminant": json::q(&disc.discriminant),
        "zero_is_root": disc.zero_is_root,
        "squarefree": disc.squarefree,
        "in_U": d.in_u,
        "sheets": sheets_over_point(d),
    })
}

fn hitchin_base(spec: &PairSpec, genus: i64, deg_d: Option<i64>, canonical: bool, limit: u128) -> Result<Report> {
    let cfg = match (canonical, deg_d) {
        (true, Some(d)) => CurveConfig { genus, deg_d: d, canonical: true },
        (true, None) => CurveConfig::canonical(genus),
        (false, Some(d)) => CurveConfig::new(genus, d),
        (false, None) => return Err(Error::BadParameters("--degD is required unless --canonical is given".into())),
    };
    let pair = catalog_pair(spec)?;
    let rr = restricted_root_system_with_limit(&pair, limit)?;
    let exps = exponents_on(&rr.base.type_label, pair.rank_theta);
    let dim = base_dimension(&exps, &cfg)?;
    let result = json!({
        "pair": spec.to_string(),
        "weyl_type": json::type_label(&rr.base.type_label),
        "exponents": exps.degrees,
        "genus": cfg.genus,
        "deg_D": cfg.deg_d,
        "canonical": cfg.canonical,
        "sections": exps.degrees.iter().map(|&e| cfg.sections(e)).collect::<Vec<_>>(),
        "base_dimension": dim,
    });
    Ok(Report::ok("hitchin-base", result))
}

fn centralizer(spec: &PairSpec, x_text: &str) -> Result<Report> {
    let pair = catalog_pair(spec)?;
    let model = pair.model()?;
    let (x, _) = json::parse_matrix(x_text)?;
    if x.rows() != model.size {
        return Err(Error::BadParameters(format!("{spec} needs a {0}x{0} matrix", model.size)));
    }
    let zg = lie_centralizer(model, &x, Ambient::G)?;
    let zh = lie_centralizer(model, &x, Ambient::H)?;
    let regular = is_regular(model, &x)?;
    let jd = jordan_decompose(&x);
    let report = group_centralizer_info(&pair, &x)?;
    let oracle = report.oracle.as_ref().map(|o| {
        json!({
            "basis": o.basis.iter().map(json::matrix_auto).collect::<Vec<_>>(),
            "det": json::mpoly_string(&o.det, "t"),
            "condition": if o.special { "det = 1" } else { "det != 0" },
        })
    });
    let result = json!({
        "spec": spec.to_string(),
        "x": json::matrix(&x, model.field),
        "regular": regular,
        "dim_z_g": zg.len(),
        "dim_z_h": zh.len(),
        "z_h_abelian": report.is_abelian_in_h,
        "jordan": { "semisimple": json::matrix(&jd.s, model.field), "nilpotent": json::matrix(&jd.n, model.field) },
        "group": report.group_info.as_ref().map(|g| json!({ "dim": g.dim, "component_count": g.component_count })),
        "unresolved": report.unresolved,
        "commutation_system": oracle,
    });
    let mut r = Report::ok("centralizer", result);
    r.unresolved = report.group_info.is_none();
    Ok(r)
}

fn run_verify(seed: u64, which: &str) -> Result<Report> {
    let ids: Vec<u8> = if which == "all" {
        verify::CRITERIA.iter().map(|c| c.0).collect()
    } else {
        let id: u8 = which.parse().map_err(|_| Error::Parse(format!("verify takes `all` or a criterion number, got {which:?}")))?;
        if !verify::CRITERIA.iter().any(|c| c.0 == id) {
            return Err(Error::Parse(format!("no criterion {id}")));
        }
        vec![id]
    };
    let mut results = Vec::new();
    let mut notes = Vec::new();
    for id in ids {
        let start = std::time::Instant::now();
        let c = verify::run_criterion(id, seed);
        notes.push(format!("{} ({:.2?})", c.line(), start.elapsed()));
        results.push(c);
    }
    let failed: Vec<u8> = results.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    let result = json!({
        "criteria": results.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        "passed": results.len() - failed.len(),
        "failed": failed,
    });
    let mut r = Report::ok("verify", result);
    r.failed = !failed.is_empty();
    r.notes = notes;
    Ok(r)
}

/// Indented `key: value` rendering of a report for terminals.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a) if a.iter().all(|x| x.as_array().is_some_and(|r| r.iter().all(|y| !y.is_array() && !y.is_object()))) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_into(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        render_into(x, depth + 1, out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default())),
    }
}
