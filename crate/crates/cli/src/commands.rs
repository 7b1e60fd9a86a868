use std::fs;
use std::io::Read;

use serde_json::{json, Map, Value};

use flatpants::flat_metric::{
    declared_boundary_distance, relative_error, structure_distance_with, StructureOptions,
};
use flatpants::json::{
    degeneracy_json, development_json, feasibility_json, glue_audit_json, membership_json,
    singularity_json, stratum_json, violations_json, GluingDocument, PantsDocument, Params,
    SCHEMA_VERSION,
};
use flatpants::surface_assembly::{decomposition_feasible, glue, RESIDUAL_TOL};
use flatpants::teich_space::{contract, membership_with, segment_in_b_with, stratum, TeichPoint};
use flatpants::{emit_svg, Development, Error, LengthRadiusParams, MetricGraph, Tolerance};

use crate::{Cli, Command, Input, TeichCommand};

pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: Option<String>,
}

impl Outcome {
    fn report(code: u8, body: Value) -> Self {
        Outcome {
            code,
            stdout: pretty(&body),
            stderr: None,
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: Some(msg.into()),
        }
    }
}

type Step<T> = Result<T, Outcome>;

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap_or_else(|e| format!("{{\"error\":\"{e}\"}}"))
}

/// A JSON object opening with the schema version and the echoed input.
fn envelope(command: &str, input: Value) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    m.insert("input".into(), input);
    m
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Document(_)
        | Error::InvalidSpacing(_)
        | Error::SpacingTooCoarse { .. }
        | Error::OutOfRange { .. }
        | Error::BoundaryIndex(..) => 2,
        _ => 1,
    }
}

fn error_json(e: &Error) -> Value {
    let mut m = Map::new();
    m.insert("message".into(), json!(e.to_string()));
    if let Error::Invalid(v) | Error::NotMember(v) = e {
        m.insert("violations".into(), violations_json(v));
    }
    Value::Object(m)
}

fn failure(mut env: Map<String, Value>, e: &Error) -> Outcome {
    env.insert("error".into(), error_json(e));
    Outcome {
        code: exit_code(e),
        stdout: pretty(&Value::Object(env)),
        stderr: Some(e.to_string()),
    }
}

fn read_text(path: &str) -> Step<String> {
    let mut text = String::new();
    let result = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Outcome::usage(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn load(input: &Input) -> Step<PantsDocument> {
    use flatpants::json::Mode;
    if let Some(v) = input.lr {
        return Ok(PantsDocument::new(Mode::Lr, v));
    }
    if let Some(v) = input.la {
        return Ok(PantsDocument::new(Mode::La, v));
    }
    let path = input.path.as_deref().unwrap_or("-");
    let text = read_text(path)?;
    serde_json::from_str(&text)
        .map_err(|e| Outcome::usage(format!("malformed document {path}: {e}")))
}

/// The document, its echo, and its parameters.
fn parse(command: &str, input: &Input) -> Step<(Map<String, Value>, Params)> {
    let doc = load(input)?;
    let env = envelope(command, doc.to_value());
    match doc.params() {
        Ok(p) => Ok((env, p)),
        Err(e) => Err(failure(env, &e)),
    }
}

fn finish(step: Step<Outcome>) -> Outcome {
    step.unwrap_or_else(|o| o)
}

pub fn run(cli: &Cli) -> Outcome {
    let tol = match Tolerance::new(cli.eps) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    finish(match &cli.command {
        Command::Validate(input) => validate(input, tol),
        Command::Convert(input) => convert(input, tol),
        Command::Build { input, svg, json } => build(input, svg.as_deref(), json.as_deref(), tol),
        Command::Measure {
            input,
            h,
            seed,
            tol: accept,
            compare,
            pairs,
        } => measure(input, *h, *seed, *accept, *compare, *pairs as usize, tol),
        Command::Teich(t) => teich(t, tol),
        Command::Glue { path } => glue_cmd(path, tol),
        Command::Feasible {
            genus,
            singularities,
        } => Ok(feasible(*genus, *singularities)),
    })
}

fn validate(input: &Input, tol: Tolerance) -> Step<Outcome> {
    let (mut env, params) = parse("validate", input)?;
    let validity = params.validate(tol);
    env.insert("valid".into(), json!(validity.is_valid()));
    env.insert("violations".into(), violations_json(&validity.violations));
    // Degeneracy is read off the radius form, which exists only when valid.
    let report = match params {
        Params::Lr(p) => Some(p.classify_with(tol)),
        Params::La(p) if validity.is_valid() => p
            .to_length_radius_with(tol)
            .ok()
            .map(|p| p.classify_with(tol)),
        Params::La(_) => None,
    };
    env.insert(
        "degeneracy".into(),
        report.as_ref().map_or(Value::Null, degeneracy_json),
    );
    env.insert(
        "singularity".into(),
        report.map_or(Value::Null, |r| singularity_json(r.singularity)),
    );
    Ok(Outcome::report(
        if validity.is_valid() { 0 } else { 1 },
        Value::Object(env),
    ))
}

fn convert(input: &Input, tol: Tolerance) -> Step<Outcome> {
    let (env, params) = parse("convert", input)?;
    match params.convert(tol) {
        Ok(out) => {
            // The converted document itself, so that output can be fed back in.
            let mut m = match PantsDocument::from_params(&out).to_value() {
                Value::Object(m) => m,
                _ => Map::new(),
            };
            m.insert("input".into(), env["input"].clone());
            Ok(Outcome::report(0, Value::Object(m)))
        }
        Err(e) => Err(failure(env, &e)),
    }
}

fn development(env: &Map<String, Value>, params: &Params, tol: Tolerance) -> Step<Development> {
    params
        .length_radius(tol)
        .and_then(|p| Development::build_with(&p, tol))
        .map_err(|e| failure(env.clone(), &e))
}

fn write(path: &std::path::Path, contents: &str) -> Step<()> {
    fs::write(path, contents).map_err(|e| Outcome {
        code: 1,
        stdout: String::new(),
        stderr: Some(format!("cannot write {}: {e}", path.display())),
    })
}

fn build(
    input: &Input,
    svg: Option<&std::path::Path>,
    json_path: Option<&std::path::Path>,
    tol: Tolerance,
) -> Step<Outcome> {
    let (mut env, params) = parse("build", input)?;
    let d = development(&env, &params, tol)?;
    let mut dump = env.clone();
    dump.insert("development".into(), development_json(&d));
    let dump = Value::Object(dump);
    if let Some(path) = svg {
        write(path, &emit_svg(&d))?;
    }
    match json_path {
        None => Ok(Outcome::report(0, dump)),
        Some(path) => {
            write(path, &(pretty(&dump) + "\n"))?;
            env.insert("json".into(), json!(path.display().to_string()));
            env.insert("svg".into(), json!(svg.map(|p| p.display().to_string())));
            env.insert("cone".into(), dump["development"]["cone"].clone());
            Ok(Outcome::report(0, Value::Object(env)))
        }
    }
}

fn measurement(measured: f64, declared: f64) -> Value {
    json!({
        "declared": declared,
        "measured": measured,
        "relative_error": relative_error(measured, declared),
    })
}

fn measure(
    input: &Input,
    h: Option<f64>,
    seed: u64,
    accept: f64,
    compare: Option<[f64; 6]>,
    pairs: usize,
    tol: Tolerance,
) -> Step<Outcome> {
    let (mut env, params) = parse("measure", input)?;
    let d = development(&env, &params, tol)?;
    let p = *d.params();
    let spacing = h.unwrap_or_else(|| flatpants::flat_metric::default_spacing(&p));
    let g = MetricGraph::build(&d, spacing).map_err(|e| failure(env.clone(), &e))?;
    let to_s = g
        .distances_to_boundaries()
        .map_err(|e| failure(env.clone(), &e))?;

    let mut worst = 0.0_f64;
    let mut to_boundary = Vec::new();
    for (i, &m) in to_s.iter().enumerate() {
        let v = measurement(m, p.radii()[i]);
        worst = worst.max(relative_error(m, p.radii()[i]));
        let mut o = json!({ "boundary": i + 1 });
        o.as_object_mut()
            .into_iter()
            .for_each(|o| o.extend(v.as_object().cloned().unwrap_or_default()));
        to_boundary.push(o);
    }
    let mut between = Vec::new();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let m = g
            .distance_between_boundaries(j, k)
            .map_err(|e| failure(env.clone(), &e))?;
        let declared = declared_boundary_distance(&p, i);
        worst = worst.max(relative_error(m, declared));
        let mut o = json!({ "boundaries": [j + 1, k + 1], "a_index": i + 1 });
        o.as_object_mut().into_iter().for_each(|o| {
            o.extend(
                measurement(m, declared)
                    .as_object()
                    .cloned()
                    .unwrap_or_default(),
            )
        });
        between.push(o);
    }
    let ok = worst <= accept;
    env.insert("spacing".into(), json!(spacing));
    env.insert("seed".into(), json!(seed));
    env.insert("nodes".into(), json!(g.node_count()));
    env.insert("edges".into(), json!(g.edge_count()));
    env.insert("singularity_to_boundary".into(), Value::Array(to_boundary));
    env.insert("boundary_to_boundary".into(), Value::Array(between));
    env.insert("max_relative_error".into(), json!(worst));
    env.insert("tolerance".into(), json!(accept));
    env.insert("within_tolerance".into(), json!(ok));

    if let Some(values) = compare {
        let q = LengthRadiusParams::from_values(values).map_err(|e| failure(env.clone(), &e))?;
        let opts = StructureOptions {
            n_pairs: pairs,
            seed,
            spacing: h,
            tol,
        };
        let dist = structure_distance_with(&p, &q, &opts).map_err(|e| failure(env.clone(), &e))?;
        env.insert(
            "structure_distance".into(),
            json!({ "compare": values, "pairs": pairs, "value": dist }),
        );
    }
    Ok(Outcome::report(if ok { 0 } else { 1 }, Value::Object(env)))
}

fn teich(cmd: &TeichCommand, tol: Tolerance) -> Step<Outcome> {
    let member = |env: &Map<String, Value>, x: [f64; 6]| {
        TeichPoint::new_with(x, tol).map_err(|e| failure(env.clone(), &e))
    };
    match cmd {
        TeichCommand::Membership { point } => {
            let mut env = envelope("teich membership", json!({ "point": point }));
            let m = membership_with(point, tol).map_err(|e| failure(env.clone(), &e))?;
            if let Value::Object(o) = membership_json(&m) {
                env.extend(o);
            }
            Ok(Outcome::report(
                if m.is_member() { 0 } else { 1 },
                Value::Object(env),
            ))
        }
        TeichCommand::Stratum { point } => {
            let mut env = envelope("teich stratum", json!({ "point": point }));
            let s = stratum(point, tol).map_err(|e| failure(env.clone(), &e))?;
            let m = membership_with(point, tol).map_err(|e| failure(env.clone(), &e))?;
            if let Value::Object(o) = stratum_json(&s) {
                env.extend(o);
            }
            env.insert("member".into(), json!(m.is_member()));
            Ok(Outcome::report(
                if m.is_member() { 0 } else { 1 },
                Value::Object(env),
            ))
        }
        TeichCommand::Segment { x, y, n } => {
            let mut env = envelope("teich segment", json!({ "x": x, "y": y, "n": n }));
            let (px, py) = (member(&env, *x)?, member(&env, *y)?);
            let inside = segment_in_b_with(&px, &py, *n as usize, tol)
                .map_err(|e| failure(env.clone(), &e))?;
            env.insert("all_members".into(), json!(inside));
            Ok(Outcome::report(
                if inside { 0 } else { 1 },
                Value::Object(env),
            ))
        }
        TeichCommand::Contract { x, t, base } => {
            let mut env = envelope("teich contract", json!({ "x": x, "t": t, "base": base }));
            let (px, pb) = (member(&env, *x)?, member(&env, *base)?);
            let c = contract(&px, *t, &pb).map_err(|e| failure(env.clone(), &e))?;
            env.insert("point".into(), json!(c.coords()));
            let m = membership_with(&c.coords(), tol).map_err(|e| failure(env.clone(), &e))?;
            if let Value::Object(o) = membership_json(&m) {
                env.extend(o);
            }
            Ok(Outcome::report(0, Value::Object(env)))
        }
    }
}

fn glue_cmd(path: &str, tol: Tolerance) -> Step<Outcome> {
    let text = read_text(path)?;
    let doc: GluingDocument = serde_json::from_str(&text)
        .map_err(|e| Outcome::usage(format!("malformed gluing document {path}: {e}")))?;
    let echo = serde_json::to_value(&doc).unwrap_or(Value::Null);
    let mut env = envelope("glue", echo);
    doc.check_schema()
        .map_err(|m| failure(env.clone(), &Error::Document(m)))?;
    let spec = doc.to_spec(tol).map_err(|e| failure(env.clone(), &e))?;
    let audit = glue(&spec).map_err(|e| failure(env.clone(), &e))?;
    if let Value::Object(o) = glue_audit_json(&audit) {
        env.extend(o);
    }
    let genus = audit.surface.genus();
    let verdict = decomposition_feasible(genus, audit.cones.len() as u32)
        .map(|v| feasibility_json(&v))
        .unwrap_or_else(|e| json!({ "note": e.to_string() }));
    env.insert("feasibility".into(), verdict);
    let ok = audit.residual.abs() < RESIDUAL_TOL;
    Ok(Outcome::report(if ok { 0 } else { 1 }, Value::Object(env)))
}

fn feasible(genus: u32, singularities: u32) -> Outcome {
    let mut env = envelope(
        "feasible",
        json!({ "genus": genus, "singularities": singularities }),
    );
    match decomposition_feasible(genus, singularities) {
        Ok(v) => {
            if let Value::Object(o) = feasibility_json(&v) {
                env.extend(o);
            }
            Outcome::report(0, Value::Object(env))
        }
        Err(e) => failure(env, &e),
    }
}
