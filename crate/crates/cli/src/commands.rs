use orbitkit::catalog;
use orbitkit::mackey::{abelian_step, classify_little_algebra, little_group_step, mackey_report, semidirect_witness};
use orbitkit::polarization::{pukanszky_polarization, verify_monomial, PolarizeOptions, Strategy};
use orbitkit::records::{frobenius_check, induced_dim, stages_flatten, Fiber, InducedRecord, Verdict};
use orbitkit::reductive::{parabolic_report, MatrixLieAlgebra};
use orbitkit::{Covector, Error, LieAlgebra, Matrix, Subspace};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::input::Source;
use crate::{Command, Common};

pub const SCHEMA: u32 = 1;

pub struct Report {
    pub body: Value,
    pub code: u8,
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// Errors that report a failed mathematical precondition rather than bad input.
fn is_check_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::NotSolvable | Error::NotExponential { .. } | Error::StrategyExhausted { .. } | Error::NotPointOrbit
    )
}

fn header(command: &str, alg: &LieAlgebra) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert(
        "algebra".into(),
        json!({"name": alg.name(), "dim": alg.dim(), "basis": alg.labels()}),
    );
    m
}

fn finish(mut m: Map<String, Value>, passed: bool) -> Report {
    m.insert("passed".into(), json!(passed));
    Report {
        body: Value::Object(m),
        code: if passed { 0 } else { 1 },
    }
}

/// One result per item, computed on `jobs` threads and kept in input order.
fn per_item<T, F>(jobs: usize, items: &[T], f: F) -> Result<Vec<(bool, Value)>, Error>
where
    T: Sync,
    F: Fn(&T) -> Result<(bool, Value), Error> + Sync,
{
    let run = || items.par_iter().map(&f).collect::<Vec<_>>();
    let results = if jobs > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(run)
    } else {
        items.iter().map(&f).collect()
    };
    results
        .into_iter()
        .map(|r| match r {
            Ok(x) => Ok(x),
            Err(e) if is_check_failure(&e) => Ok((false, json!({"error": e.to_string()}))),
            Err(e) => Err(e),
        })
        .collect()
}

fn with_point(c: &Covector, (passed, mut v): (bool, Value)) -> (bool, Value) {
    if let Value::Object(m) = &mut v {
        m.insert("point".into(), to_value(c));
        m.insert("passed".into(), json!(passed));
    }
    (passed, v)
}

fn point_results<F>(common: &Common, source: &Source, command: &str, f: F) -> Result<Report, Error>
where
    F: Fn(&Covector) -> Result<(bool, Value), Error> + Sync,
{
    let points = source.points(&common.points)?;
    let results = per_item(common.jobs, &points, |c| f(c))?;
    let results: Vec<_> = points.iter().zip(results).map(|(c, r)| with_point(c, r)).collect();
    let passed = results.iter().all(|(p, _)| *p);
    let mut m = header(command, &source.algebra);
    m.insert(
        "results".into(),
        Value::Array(results.into_iter().map(|(_, v)| v).collect()),
    );
    Ok(finish(m, passed))
}

fn load_valid(spec: &str) -> Result<Source, Error> {
    let source = Source::load(spec)?;
    source.algebra.ensure_valid()?;
    Ok(source)
}

pub fn run(cmd: &Command) -> Result<(Option<String>, Report), Error> {
    match cmd {
        Command::Validate { algebra, output } => Ok((output.clone(), validate(algebra)?)),
        Command::Catalog { name, output } => Ok((output.clone(), catalog_cmd(name.as_deref())?)),
        Command::Orbit { common } => {
            let s = load_valid(&common.algebra)?;
            let g = &s.algebra;
            let r = point_results(common, &s, "orbit", |c| {
                let rec = g.orbit_record(c)?;
                let even = rec.orbit_dim % 2 == 0;
                let complementary = rec.orbit_dim + rec.stabilizer.dim() == g.dim();
                let stab_sub = g.is_subalgebra(&rec.stabilizer);
                Ok((
                    even && complementary && stab_sub,
                    json!({
                        "record": rec,
                        "hull_is_exact": rec.hull_is_exact(),
                        "even_rank": even,
                        "dimension_identity": complementary,
                        "stabilizer_is_subalgebra": stab_sub,
                    }),
                ))
            })?;
            Ok((common.output.clone(), r))
        }
        Command::Conditions { common, sub } => {
            let s = load_valid(&common.algebra)?;
            let h = s.subspace(sub)?;
            s.algebra.require_subalgebra(&h)?;
            let r = point_results(common, &s, "conditions", |c| {
                let rep = orbitkit::homogeneous::check_conditions(&s.algebra, &h, c)?;
                Ok((rep.flags.all(), json!({ "report": rep })))
            })?;
            Ok((common.output.clone(), r))
        }
        Command::Mackey {
            common,
            ideal,
            extension,
            complements,
        } => Ok((
            common.output.clone(),
            mackey(common, ideal, extension.as_deref(), complements)?,
        )),
        Command::Polarize {
            common,
            strategy,
            override_precheck,
            seed,
            samples,
        } => {
            let s = load_valid(&common.algebra)?;
            let strategy = match strategy.as_str() {
                "auto" => Strategy::Auto,
                other => match other.strip_prefix("chain:") {
                    Some(path) => Strategy::Chain(s.chain(path)?),
                    None => return Err(Error::Parse(format!("unknown strategy {other:?}"))),
                },
            };
            let opts = PolarizeOptions {
                strategy,
                override_precheck: *override_precheck,
                random_samples: *samples,
                seed: *seed,
            };
            let g = &s.algebra;
            let r = point_results(common, &s, "polarize", |c| {
                let trace = pukanszky_polarization(g, c, &opts)?;
                let monomial = verify_monomial(g, c, &trace.result, Some(&trace))?;
                let passed = trace.passed()
                    && monomial.point_orbit
                    && monomial.dimension_identity
                    && monomial.pukanszky != Verdict::No;
                Ok((passed, json!({"trace": trace, "monomial": monomial})))
            })?;
            Ok((common.output.clone(), r))
        }
        Command::Parabolic { common, matrices } => Ok((common.output.clone(), parabolic(common, matrices)?)),
        Command::Classify { common, ideal } => {
            let s = load_valid(&common.algebra)?;
            let a = s.subspace(ideal)?;
            s.algebra.require_ideal(&a)?;
            let r = point_results(common, &s, "classify", |c| {
                let class = classify_little_algebra(&s.algebra, &a, c)?;
                let step = abelian_step(&s.algebra, &a, c)?;
                let rank = s.algebra.kks_pairing(c).rank();
                let passed = step.all() && step.x_dim == rank;
                Ok((
                    passed,
                    json!({"little_algebra": class, "abelian_step": step, "orbit_dim_oracle": rank}),
                ))
            })?;
            Ok((common.output.clone(), r))
        }
        Command::Record { common, subs, orbit } => Ok((common.output.clone(), record(common, subs, orbit.as_deref())?)),
    }
}

fn validate(spec: &str) -> Result<Report, Error> {
    let s = Source::load(spec)?;
    let g = &s.algebra;
    let mut m = header("validate", g);
    let report = g.validate();
    m.insert("validation".into(), to_value(report));
    let valid = report.is_valid();
    if valid {
        m.insert("structure".into(), to_value(&g.structure_probe()?));
    }
    m.insert("passed".into(), json!(valid));
    Ok(Report {
        body: Value::Object(m),
        code: if valid { 0 } else { 2 },
    })
}

fn catalog_cmd(name: Option<&str>) -> Result<Report, Error> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!("catalog"));
    match name {
        None => {
            let mut entries = Vec::new();
            for n in catalog::names()? {
                let e = catalog::load(&n)?;
                entries.push(json!({
                    "name": e.name,
                    "dim": e.algebra.dim(),
                    "description": e.file.description,
                    "matrix_rep": e.algebra.matrix_rep().is_some(),
                    "samples": e.samples,
                    "ideals": e.file.ideals.iter().map(|s| s.name.clone()).collect::<Vec<_>>(),
                    "complements": e.file.complements.iter().map(|s| s.name.clone()).collect::<Vec<_>>(),
                }));
            }
            m.insert("entries".into(), Value::Array(entries));
        }
        Some(n) => {
            let e = catalog::load(n)?;
            let g = &e.algebra;
            let named = |list: &[orbitkit::file::NamedSubspace]| -> Result<Value, Error> {
                let mut out = Map::new();
                for s in list {
                    out.insert(s.name.clone(), to_value(&s.resolve(g.dim())?));
                }
                Ok(Value::Object(out))
            };
            m.insert(
                "entry".into(),
                json!({
                    "name": e.name,
                    "description": e.file.description,
                    "dim": g.dim(),
                    "basis": g.labels(),
                    "brackets": (0..g.dim())
                        .flat_map(|i| (i + 1..g.dim()).map(move |j| (i, j)))
                        .filter_map(|(i, j)| {
                            let b = g.bracket_basis(i, j);
                            (!orbitkit::exactla::is_zero_vector(&b)).then(|| {
                                json!({"i": i, "j": j, "value": g.format_element(&b)})
                            })
                        })
                        .collect::<Vec<_>>(),
                    "samples": e.samples,
                    "ideals": named(&e.file.ideals)?,
                    "complements": named(&e.file.complements)?,
                    "validation": g.validate(),
                    "structure": g.structure_probe()?,
                }),
            );
        }
    }
    m.insert("passed".into(), json!(true));
    Ok(Report {
        body: Value::Object(m),
        code: 0,
    })
}

fn mackey(common: &Common, ideal: &str, extension: Option<&str>, complements: &[String]) -> Result<Report, Error> {
    let s = load_valid(&common.algebra)?;
    let g = &s.algebra;
    let n = s.subspace(ideal)?;
    g.require_ideal(&n)?;
    let extension = extension.map(|e| s.point(e)).transpose()?;
    let candidates: Vec<(String, Subspace)> = if complements.is_empty() {
        s.complements()?
    } else {
        complements
            .iter()
            .map(|c| Ok((c.clone(), s.subspace(c)?)))
            .collect::<Result<_, Error>>()?
    };
    let abelian = g.bracket_space(&n, &n).is_zero();
    point_results(common, &s, "mackey", |c| {
        let rep = mackey_report(g, &n, c, extension.as_ref())?;
        let mut passed = rep.passed();
        let mut v = Map::new();
        let point_orbit = little_group_step(g, &n, c)?.ideal_stabilizer == n;
        if point_orbit && !candidates.is_empty() {
            v.insert(
                "semidirect".into(),
                to_value(&semidirect_witness(g, &n, c, &candidates)?),
            );
        }
        if abelian {
            let step = abelian_step(g, &n, c)?;
            passed &= step.all();
            v.insert("abelian_step".into(), to_value(&step));
            v.insert("little_algebra".into(), to_value(&classify_little_algebra(g, &n, c)?));
        }
        v.insert("report".into(), to_value(&rep));
        Ok((passed, Value::Object(v)))
    })
}

fn parabolic(common: &Common, matrices: &[String]) -> Result<Report, Error> {
    let s = load_valid(&common.algebra)?;
    let malg = MatrixLieAlgebra::new(s.algebra.clone())?;
    let xs: Vec<Matrix> = if !matrices.is_empty() {
        let xs = matrices
            .iter()
            .map(|m| Matrix::parse(m))
            .collect::<Result<Vec<_>, _>>()?;
        for x in &xs {
            malg.coords(x)?;
        }
        xs
    } else {
        s.points(&common.points)?
            .iter()
            .map(|c| malg.from_covector(c))
            .collect::<Result<_, _>>()?
    };
    let results = per_item(common.jobs, &xs, |x| {
        let rep = parabolic_report(&malg, x)?;
        Ok((
            rep.passed(),
            json!({"matrix": x, "report": rep, "passed": rep.passed()}),
        ))
    })?;
    let passed = results.iter().all(|(p, _)| *p);
    let mut m = header("parabolic", &s.algebra);
    m.insert(
        "results".into(),
        Value::Array(results.into_iter().map(|(_, v)| v).collect()),
    );
    Ok(finish(m, passed))
}

fn record(common: &Common, subs: &[String], orbit: Option<&str>) -> Result<Report, Error> {
    let s = load_valid(&common.algebra)?;
    let g = &s.algebra;
    let mut chain = vec![Subspace::full(g.dim())];
    for spec in subs {
        let h = s.subspace(spec)?;
        g.require_subalgebra(&h)?;
        if !chain.last().unwrap().contains(&h) {
            return Err(Error::ChainInclusion(format!(
                "{spec} is not inside the previous subalgebra"
            )));
        }
        chain.push(h);
    }
    let orbit = orbit.map(|o| s.point(o)).transpose()?;
    point_results(common, &s, "record", |c| {
        let base = chain.last().unwrap();
        let y = g
            .subalgebra(base)?
            .orbit_record(&orbitkit::liealg::restrict_to(c, base))?;
        let mut rec = InducedRecord::new(chain[chain.len() - 2].clone(), base.clone(), Fiber::Orbit(y))?;
        for w in chain.windows(2).rev().skip(1) {
            rec = InducedRecord::new(w[0].clone(), w[1].clone(), Fiber::Induced(Box::new(rec)))?;
        }
        let dim = induced_dim(&rec)?;
        let flat = stages_flatten(&rec)?;
        let flat_dim = induced_dim(&flat)?;
        let m = g.orbit_record(orbit.as_ref().unwrap_or(c))?;
        let frobenius = frobenius_check(g, &rec, &m)?;
        let passed = dim == flat_dim && dim == rec.computed_dim;
        Ok((
            passed,
            json!({
                "record": rec,
                "induced_dim": dim,
                "flattened": flat,
                "flattened_dim": flat_dim,
                "stages_identity": dim == flat_dim,
                "orbit": m,
                "frobenius": frobenius,
            }),
        ))
    })
}
