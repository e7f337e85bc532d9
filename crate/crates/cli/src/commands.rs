use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use lpp_cones::io::{parse_weights_json, PosetSpec};
use lpp_cones::probability::{
    mc_path_distribution, mc_statistics, path_distribution_exponential_exact, pstar_components, CustomSampler,
    LawKind, WeightLaw,
};
use lpp_cones::scalar::{format_rational, parse_rational};
use lpp_cones::simplicial::all_cells;
use lpp_cones::verify::{run_suite, Suite, VerifyOptions};
use lpp_cones::{describe_cone, eu_determinant, Limits, Path, Poset, Rational};

use crate::args::{Command, LawArgs, Mode};

pub struct Outcome {
    pub result: Value,
    pub table: String,
    /// Set when a verification suite reported a mismatch.
    pub mismatch: bool,
}

impl Outcome {
    fn new(result: Value, table: String) -> Self {
        Self {
            result,
            table,
            mismatch: false,
        }
    }
}

pub fn load_poset(spec: &str, limits: &Limits) -> Result<Poset> {
    let spec: PosetSpec = spec.parse()?;
    let poset = spec.load().with_context(|| format!("loading poset {spec}"))?;
    limits.check_vertices(poset.len())?;
    Ok(poset)
}

pub fn run(command: &Command, poset: &Poset, limits: &Limits) -> Result<Outcome> {
    match command {
        Command::Paths { .. } => paths(poset, limits),
        Command::Antichains { .. } => antichains(poset, limits),
        Command::Extensions { .. } => extensions(poset, limits),
        Command::Cone { path, .. } => cone(poset, path, limits),
        Command::Simplices { group_by_path, .. } => simplices(poset, *group_by_path, limits),
        Command::Pathprob { law, mode, .. } => pathprob(poset, law, *mode, limits),
        Command::Simulate {
            law,
            histogram_csv,
            records_csv,
            ..
        } => {
            let law = build_law(poset, law)?;
            let report = mc_statistics(poset, &law, law_reps(command))?;
            if let Some(p) = histogram_csv {
                std::fs::write(p, report.histogram_csv()).with_context(|| format!("writing {}", p.display()))?;
            }
            if let Some(p) = records_csv {
                std::fs::write(p, report.records_csv()).with_context(|| format!("writing {}", p.display()))?;
            }
            let mut table = format!(
                "replicates {}  kept {}  tie discards {}\nmean length {:.6}  mean deviation {:.6}  correlation {}\nmodal path {} ({} times)\n",
                report.replicates,
                report.kept,
                report.tie_discards,
                report.mean_length,
                report.mean_deviation,
                report.correlation.map_or("n/a".into(), |c| format!("{c:.6}")),
                show_path(poset, &report.modal_path),
                report.modal_count,
            );
            for (d, c) in &report.deviation_histogram {
                let _ = writeln!(table, "deviation {d:>3}  {c}");
            }
            Ok(Outcome::new(serde_json::to_value(&report)?, table))
        }
        Command::Verify {
            suite, samples, seed, ..
        } => verify(poset, suite, *samples, *seed, limits),
    }
}

fn law_reps(command: &Command) -> u64 {
    match command {
        Command::Pathprob { law, .. } | Command::Simulate { law, .. } => law.reps,
        _ => 0,
    }
}

fn show_path(poset: &Poset, path: &Path) -> String {
    labels(poset, path.vertices()).join(" < ")
}

fn labels(poset: &Poset, vertices: &[usize]) -> Vec<String> {
    vertices.iter().map(|&v| poset.label(v).to_string()).collect()
}

fn paths(poset: &Poset, limits: &Limits) -> Result<Outcome> {
    let all = poset.try_enumerate_paths(limits.max_items)?;
    let mut table = String::new();
    let entries: Vec<Value> = all
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let _ = writeln!(table, "{k:>4}  {}", show_path(poset, p));
            json!({"index": k, "vertices": p.vertices(), "labels": labels(poset, p.vertices())})
        })
        .collect();
    Ok(Outcome::new(json!({"count": all.len(), "paths": entries}), table))
}

fn antichains(poset: &Poset, limits: &Limits) -> Result<Outcome> {
    let all = poset.try_enumerate_antichains(limits.max_items)?;
    let mut table = String::new();
    let entries: Vec<Value> = all
        .iter()
        .map(|a| {
            let _ = writeln!(table, "{{{}}}", labels(poset, a.members()).join(", "));
            json!({"members": a.members(), "labels": labels(poset, a.members())})
        })
        .collect();
    Ok(Outcome::new(json!({"count": all.len(), "antichains": entries}), table))
}

fn extensions(poset: &Poset, limits: &Limits) -> Result<Outcome> {
    let count = poset.count_linear_extensions(limits)?;
    let listed = poset.enumerate_linear_extensions(limits)?;
    let mut table = format!("e(P) = {count}\n");
    for e in &listed {
        let _ = writeln!(table, "{}", labels(poset, e.sequence()).join(" "));
    }
    Ok(Outcome::new(
        json!({"count": count.to_string(), "extensions": listed}),
        table,
    ))
}

fn select_paths(poset: &Poset, selector: &str, limits: &Limits) -> Result<Vec<(usize, Path)>> {
    let all = poset.try_enumerate_paths(limits.max_items)?;
    let selector = selector.trim();
    if selector == "all" {
        return Ok(all.into_iter().enumerate().collect());
    }
    if let Ok(k) = selector.parse::<usize>() {
        let p = all
            .get(k)
            .cloned()
            .ok_or_else(|| anyhow!("path index {k} out of range (poset has {} paths)", all.len()))?;
        return Ok(vec![(k, p)]);
    }
    let raw: Vec<Value> = serde_json::from_str(selector)
        .with_context(|| format!("path selector {selector:?} is not all, an index, or a JSON array"))?;
    let vertices = raw
        .iter()
        .map(|x| match x {
            Value::Number(n) => n
                .as_u64()
                .map(|v| v as usize)
                .ok_or_else(|| anyhow!("bad vertex index {n}")),
            Value::String(s) => poset.index_of(s).ok_or_else(|| anyhow!("unknown label {s:?}")),
            other => Err(anyhow!("bad vertex {other}")),
        })
        .collect::<Result<Vec<_>>>()?;
    let path = poset.path(vertices)?;
    let k = all.iter().position(|p| p == &path).expect("valid path is enumerated");
    Ok(vec![(k, path)])
}

fn cone(poset: &Poset, selector: &str, limits: &Limits) -> Result<Outcome> {
    let selected = select_paths(poset, selector, limits)?;
    let described = selected
        .par_iter()
        .map(|(k, p)| Ok((*k, describe_cone(poset, p)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut table = String::new();
    let cones: Vec<Value> = described
        .iter()
        .map(|(k, d)| {
            let _ = writeln!(
                table,
                "path {k}: {}\n  extreme rays {}  facets {} of {} normals  2-faces {}",
                show_path(poset, &d.path),
                d.extreme_rays.len(),
                d.facets.facet_count(),
                d.facets.normals.len(),
                d.two_dim_faces.len()
            );
            json!({
                "index": k,
                "path": d.path,
                "extreme_rays": d.extreme_rays,
                "facet_count": d.facets.facet_count(),
                "facet_classification": d.facets.normals,
                "two_dim_face_adjacency": d.two_dim_faces,
            })
        })
        .collect();
    Ok(Outcome::new(json!({"cones": cones}), table))
}

fn simplices(poset: &Poset, group_by_path: bool, limits: &Limits) -> Result<Outcome> {
    let cells = all_cells(poset, limits)?;
    let paths = poset.try_enumerate_paths(limits.max_items)?;
    let mut table = String::new();
    let entries: Vec<Value> = cells
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let pstar = pstar_components(c);
            let path_index = paths
                .iter()
                .position(|p| p == c.schutzenberger_path())
                .expect("Schützenberger path is enumerated");
            let _ = writeln!(
                table,
                "{k:>4}  {}  -> path {path_index}",
                labels(poset, c.extension().sequence()).join(" ")
            );
            json!({
                "index": k,
                "extension": c.extension(),
                "generators": c.antichains(),
                "determinant": eu_determinant(c).to_string(),
                "schutzenberger_path": c.schutzenberger_path(),
                "path_index": path_index,
                "time_graph_components": pstar.components,
                "singleton_expression": pstar.singleton_expression,
            })
        })
        .collect();
    let mut result = json!({"count": cells.len(), "cells": entries});
    if group_by_path {
        let mut groups: BTreeMap<usize, Vec<usize>> = (0..paths.len()).map(|k| (k, Vec::new())).collect();
        for (k, c) in cells.iter().enumerate() {
            let p = paths.iter().position(|p| p == c.schutzenberger_path()).expect("enumerated");
            groups.get_mut(&p).expect("present").push(k);
        }
        let _ = writeln!(table, "cells per path:");
        let grouped: Vec<Value> = groups
            .into_iter()
            .map(|(p, ks)| {
                let _ = writeln!(table, "{p:>4}  {} cells", ks.len());
                json!({"path_index": p, "path": paths[p], "cells": ks})
            })
            .collect();
        result["groups"] = Value::Array(grouped);
    }
    Ok(Outcome::new(result, table))
}

fn parse_rates(spec: &str, n: usize) -> Result<Vec<Rational>> {
    if spec == "unit" {
        return Ok(vec![Rational::from_integer(1.into()); n]);
    }
    if let Some(file) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(file).with_context(|| format!("reading rates from {file}"))?;
        return Ok(parse_weights_json(&text, n)?);
    }
    let rates = spec
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<lpp_cones::Result<Vec<_>>>()?;
    if rates.len() != n {
        bail!("expected {n} rates, got {}", rates.len());
    }
    Ok(rates)
}

fn build_law(poset: &Poset, args: &LawArgs) -> Result<WeightLaw> {
    let seed = args
        .seed
        .ok_or_else(|| anyhow!("--seed is required for simulation"))?;
    if args.reps == 0 {
        bail!("--reps must be at least 1");
    }
    let kind = match args.law.as_str() {
        "exp" => {
            let rates = parse_rates(&args.rates, poset.len())?;
            return Ok(WeightLaw::exponential(
                rates.iter().map(lpp_cones::Scalar::to_f64_lossy).collect(),
                seed,
            )?);
        }
        "uniform" => LawKind::Uniform01,
        other => match other.strip_prefix("custom:") {
            Some(id) => LawKind::Custom(CustomSampler::parse(id)?),
            None => bail!("unknown law {other:?}; expected exp, uniform or custom:<sampler>"),
        },
    };
    Ok(WeightLaw { kind, seed })
}

#[derive(Serialize)]
struct EstimateOut {
    est: f64,
    se: f64,
}

fn pathprob(poset: &Poset, args: &LawArgs, mode: Mode, limits: &Limits) -> Result<Outcome> {
    let mut table = String::new();
    match mode {
        Mode::Exact => {
            if args.law != "exp" {
                bail!("exact mode supports only --law exp");
            }
            let rates = parse_rates(&args.rates, poset.len())?;
            let dist = path_distribution_exponential_exact(poset, &rates, limits)?;
            let paths: Vec<Value> = dist
                .paths
                .iter()
                .map(|p| {
                    let prob = format_rational(&p.probability);
                    let _ = writeln!(table, "{:>12}  {}", prob, show_path(poset, &p.path));
                    json!({"vertices": p.path, "prob": prob, "cells": p.cells})
                })
                .collect();
            Ok(Outcome::new(
                json!({"mode": "exact", "paths": paths, "cells": dist.cells, "total": format_rational(&dist.total()), "tie_discards": 0, "seed": args.seed}),
                table,
            ))
        }
        Mode::Mc => {
            let law = build_law(poset, args)?;
            let dist = mc_path_distribution(poset, &law, args.reps)?;
            let paths: Vec<Value> = dist
                .paths
                .iter()
                .map(|p| {
                    let e = &p.estimate;
                    let _ = writeln!(
                        table,
                        "{:>10.6} ± {:<10.6}  {}",
                        e.estimate,
                        e.standard_error,
                        show_path(poset, &p.path)
                    );
                    json!({
                        "vertices": p.path,
                        "prob": EstimateOut { est: e.estimate, se: e.standard_error },
                        "count": e.hits,
                    })
                })
                .collect();
            let _ = writeln!(table, "tie discards {}", dist.tie_discards);
            Ok(Outcome::new(
                json!({
                    "mode": "mc",
                    "paths": paths,
                    "replicates": dist.replicates,
                    "kept": dist.kept,
                    "tie_discards": dist.tie_discards,
                    "seed": dist.seed,
                }),
                table,
            ))
        }
    }
}

fn verify(poset: &Poset, suite: &str, samples: usize, seed: u64, limits: &Limits) -> Result<Outcome> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        suite
            .split(',')
            .map(|s| s.trim().parse::<Suite>())
            .collect::<lpp_cones::Result<_>>()?
    };
    let options = VerifyOptions {
        samples,
        seed,
        limits: *limits,
    };
    let reports = suites
        .par_iter()
        .map(|&s| run_suite(poset, s, &options))
        .collect::<lpp_cones::Result<Vec<_>>>()?;
    let mut table = String::new();
    for r in &reports {
        let _ = writeln!(
            table,
            "{:<13} {:>6} checks  {:>4} mismatches  {}",
            r.suite.name(),
            r.total,
            r.mismatches,
            if r.passed() { "PASS" } else { "FAIL" }
        );
        for c in r.checks.iter().filter(|c| !c.agree) {
            let _ = writeln!(table, "    {}: expected {} got {}", c.subject, c.expected, c.observed);
        }
    }
    let passed = reports.iter().all(|r| r.passed());
    let mut outcome = Outcome::new(json!({"passed": passed, "suites": reports}), table);
    outcome.mismatch = !passed;
    Ok(outcome)
}
