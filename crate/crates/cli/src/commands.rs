use motivic_dt::config::{parse_config, parse_realization, ParsedConfig};
use motivic_dt::curve_formulas::{bun_class, gl_class, goettsche_series, kapranov_zeta, SurfaceZeta};
use motivic_dt::dt_engine::{DtEngine, GammaClass};
use motivic_dt::graded_series::MonomialIndex;
use motivic_dt::quantum_torus::{dt_extract_ray, parse_torus_json};
use motivic_dt::rational::format_rational;
use motivic_dt::symfunc::{macdonald_oracle, modified_macdonald, Partition};
use motivic_dt::{CurveData, FractionCoeff, Realization};
use motivic_dt_oracles as oracles;
use serde_json::{json, Value};

use crate::output::{fraction_json, mot_json, provenance, realized, CliError};
use crate::params::Params;
use crate::{Command, Globals, OracleCommand};

const DEFAULT_GUARD: u32 = 6;

fn read_config_text(g: &Globals) -> Result<String, CliError> {
    let path = g.config.as_ref().ok_or_else(|| CliError::usage("this command needs --config <path>"))?;
    std::fs::read_to_string(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
}

fn load_model(g: &Globals) -> Result<ParsedConfig, CliError> {
    let mut cfg = parse_config(&read_config_text(g)?)?;
    if let Some(r) = g.r_max {
        cfg.model.r_max = r;
    }
    if let Some(z) = g.z_max {
        cfg.model.z_max = z;
    }
    Ok(cfg)
}

fn realization(g: &Globals) -> Result<Option<(String, Realization)>, CliError> {
    g.realize.as_ref().map(|s| Ok((s.clone(), parse_realization(s)?))).transpose()
}

/// Curve from `l=...`, else from `--config`, else the projective line.
fn curve(p: &Params, g: &Globals) -> Result<CurveData, CliError> {
    if let Some(l) = p.rationals("l")? {
        if l.len() % 2 == 0 {
            return Err(CliError::usage("l needs 2g+1 coefficients"));
        }
        return Ok(CurveData::new((l.len() as u32 - 1) / 2, l)?);
    }
    if g.config.is_some() {
        return Ok(load_model(g)?.model.curve);
    }
    Ok(CurveData::rational())
}

fn partition(p: &Params, key: &str) -> Result<Partition, CliError> {
    let parts: Vec<u32> = p.list(key)?.ok_or_else(|| CliError::usage(format!("missing parameter {key}")))?;
    Ok(Partition::from_unsorted(parts.into_iter().filter(|&x| x > 0).collect()))
}

fn envelope(command: &str, params: &[String], result: Value, prov: Value) -> Value {
    json!({"command": command, "params": params, "result": result, "provenance": prov})
}

pub fn run(cmd: &Command, g: &Globals) -> Result<Value, CliError> {
    match cmd {
        Command::Zeta { params } => zeta(params, g),
        Command::BunClass { params } => bun(params, g),
        Command::Goettsche { params } => goettsche(params, g),
        Command::GlClass { params } => gl(params, g),
        Command::Macdonald { params } => macdonald(params),
        Command::DtSeries { params } => dt_series(params, g),
        Command::ConnClass { params } => conn(params, g, false),
        Command::ConnSsClass { params } => conn(params, g, true),
        Command::DtExtract { params } => dt_extract(params, g),
        Command::Oracle { which } => oracle(which),
    }
}

fn zeta(args: &[String], g: &Globals) -> Result<Value, CliError> {
    let p = Params::parse(args, &["n", "l"])?;
    let n: u32 = p.get_or("n", 4)?;
    let c = curve(&p, g)?;
    let r = realization(g)?;
    let z = kapranov_zeta(&c, n);
    let mut out = Vec::new();
    for k in 0..=n {
        let coeff = z.coefficient_at(&MonomialIndex::plain(0, k, 0))?;
        out.push(json!({
            "n": k,
            "coeff": mot_json(&coeff),
            "realization": realized(&FractionCoeff::from(coeff), r.as_ref(), Some(&c))?,
        }));
    }
    Ok(envelope("zeta", args, json!({"genus": c.genus(), "coefficients": out}), provenance(None, None)))
}

fn bun(args: &[String], g: &Globals) -> Result<Value, CliError> {
    let p = Params::parse(args, &["r", "l"])?;
    let rank: u32 = p.require("r")?;
    let c = curve(&p, g)?;
    let class = bun_class(&c, rank)?;
    let result = json!({
        "genus": c.genus(),
        "rank": rank,
        "class": fraction_json(&class),
        "realization": realized(&class, realization(g)?.as_ref(), Some(&c))?,
    });
    Ok(envelope("bun-class", args, result, provenance(None, None)))
}

fn goettsche(args: &[String], g: &Globals) -> Result<Value, CliError> {
    let p = Params::parse(args, &["n"])?;
    let n: u32 = p.get_or("n", 3)?;
    if n > 64 {
        return Err(CliError::usage("n must be at most 64"));
    }
    let r = realization(g)?;
    let s = goettsche_series(&SurfaceZeta::affine_plane(n), n)?;
    let mut out = Vec::new();
    for k in 0..=n {
        let coeff = s.coefficient_at(&MonomialIndex::plain(0, k, 0))?;
        out.push(json!({
            "n": k,
            "coeff": mot_json(&coeff),
            "realization": realized(&FractionCoeff::from(coeff), r.as_ref(), None)?,
        }));
    }
    Ok(envelope("goettsche", args, json!({"surface": "A2", "coefficients": out}), provenance(None, None)))
}

fn gl(args: &[String], g: &Globals) -> Result<Value, CliError> {
    let p = Params::parse(args, &["n"])?;
    let n: u32 = p.require("n")?;
    if n > 64 {
        return Err(CliError::usage("n must be at most 64"));
    }
    let class = gl_class(n);
    let result = json!({
        "n": n,
        "class": mot_json(&class),
        "realization": realized(&FractionCoeff::from(class), realization(g)?.as_ref(), None)?,
    });
    Ok(envelope("gl-class", args, result, provenance(None, None)))
}

fn macdonald(args: &[String]) -> Result<Value, CliError> {
    let p = Params::parse(args, &["mu", "vars", "check"])?;
    let mu = partition(&p, "mu")?;
    if mu.size() > 8 {
        return Err(CliError::usage("|mu| must be at most 8"));
    }
    let vars: usize = p.get_or("vars", mu.size() as usize)?;
    if vars > 8 {
        return Err(CliError::usage("vars must be at most 8"));
    }
    let check: bool = p.get_or("check", false)?;
    let h = modified_macdonald(&mu, vars);
    let mut result = json!({
        "mu": mu.parts(),
        "stats": mu.stats(),
        "polynomial": h.to_json(),
    });
    if check {
        if mu.size() > 5 {
            return Err(CliError::usage("check=true supports |mu| <= 5"));
        }
        result["oracle_agrees"] = json!(macdonald_oracle(&mu, vars) == *h);
    }
    Ok(envelope("macdonald", args, result, provenance(None, None)))
}

fn engine(g: &Globals) -> Result<(DtEngine, Option<GammaClass>), CliError> {
    let cfg = load_model(g)?;
    Ok((DtEngine::new(cfg.model, g.guard.unwrap_or(DEFAULT_GUARD)), cfg.gamma))
}

fn dt_series(args: &[String], g: &Globals) -> Result<Value, CliError> {
    let p = Params::parse(args, &["part"])?;
    let part: String = p.get_or("part", "all".to_string())?;
    if !["all", "omega", "h"].contains(&part.as_str()) {
        return Err(CliError::usage("part must be all, omega or h"));
    }
    let (e, _) = engine(g)?;
    let mut result = json!({});
    if part != "h" {
        result["omega"] = e.omega().to_json();
    }
    if part != "omega" {
        result["h"] = e.h_series()?.to_json();
        result["polynomiality"] = serde_json::to_value(e.polynomiality()?).expect("serializable");
        result["h_at_z_one"] = match e.h_at_z_one() {
            Ok(s) => s.to_json(),
            Err(err) => json!({"error": {"code": err.code(), "message": err.to_string()}}),
        };
    }
    let t = e.config().truncation();
    Ok(envelope("dt-series", args, result, provenance(Some(&t), Some(e.guard()))))
}

fn conn(args: &[String], g: &Globals, semistable: bool) -> Result<Value, CliError> {
    let p = Params::parse(args, &["r", "rxj", "d"])?;
    let (e, cfg_gamma) = engine(g)?;
    let gamma = match (p.get::<u32>("r")?, cfg_gamma) {
        (Some(r), _) => GammaClass { r, r_xj: p.rows("rxj")?.unwrap_or_default(), d: p.get_or("d", 0)? },
        (None, Some(gm)) => gm,
        (None, None) => return Err(CliError::usage("give r=.. [rxj=..] [d=..] or a gamma block in the config")),
    };
    let res = if semistable { e.conn_ss_class(&gamma)? } else { e.conn_class(&gamma)? };
    let curve = &e.config().curve;
    let mut result = serde_json::to_value(&res).expect("serializable");
    result["class"] = fraction_json(&res.class);
    result["pipeline_value"] = json!(res.pipeline_value.to_string());
    result["epsilon"] = json!(format_rational(&e.config().epsilon));
    result["realization"] = realized(&res.class, realization(g)?.as_ref(), Some(curve))?;
    let name = if semistable { "conn-ss-class" } else { "conn-class" };
    let t = e.config().truncation();
    Ok(envelope(name, args, result, provenance(Some(&t), Some(e.guard()))))
}

fn dt_extract(args: &[String], g: &Globals) -> Result<Value, CliError> {
    let _ = Params::parse(args, &[])?;
    let (_, a) = parse_torus_json(&read_config_text(g)?)?;
    let om = dt_extract_ray(&a)?;
    let r = realization(g)?;
    let mut out = Vec::new();
    for (gamma, c) in &om {
        out.push(json!({"gamma": gamma, "omega": fraction_json(c), "realization": realized(c, r.as_ref(), None)?}));
    }
    Ok(envelope("dt-extract", args, json!({"invariants": out}), provenance(None, None)))
}

fn oracle(which: &OracleCommand) -> Result<Value, CliError> {
    match which {
        OracleCommand::Nilpotent { params } => {
            let p = Params::parse(params, &["d", "q"])?;
            let c = oracles::count_nilpotent_types(p.require("d")?, p.require("q")?)?;
            let types: Vec<Value> = c.by_type.iter().map(|(t, n)| json!({"jordan_type": t, "count": n})).collect();
            let result = json!({"by_type": types, "total": c.total, "gl_order": c.gl_order});
            Ok(envelope("oracle nilpotent", params, result, provenance(None, None)))
        }
        OracleCommand::BunP1 { params } => {
            let p = Params::parse(params, &["d", "q", "k_max"])?;
            let w = oracles::bun_p1_weighted_count(p.get_or("d", 0)?, p.require("q")?, p.get_or("k_max", 24)?)?;
            let result = json!({"partial_sum": w.partial_sum.to_string(), "tail_bound": w.tail_bound.to_string()});
            Ok(envelope("oracle bun-p1", params, result, provenance(None, None)))
        }
        OracleCommand::HilbA2 { params } => {
            let p = Params::parse(params, &["n", "q"])?;
            let n = oracles::hilb_a2_bruteforce(p.require("n")?, p.get_or("q", 2)?)?;
            Ok(envelope("oracle hilb-a2", params, json!({"count": n}), provenance(None, None)))
        }
        OracleCommand::Hall { params } => {
            let p = Params::parse(params, &["lambda", "mu", "nu", "q"])?;
            let get = |k: &str| -> Result<Vec<u32>, CliError> { Ok(p.list(k)?.unwrap_or_default()) };
            let n = oracles::hall_numbers_bruteforce(&get("lambda")?, &get("mu")?, &get("nu")?, p.require("q")?)?;
            Ok(envelope("oracle hall", params, json!({"count": n}), provenance(None, None)))
        }
    }
}
