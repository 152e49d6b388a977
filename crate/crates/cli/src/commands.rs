use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use paramvc::bipartization::{is_edge_bipartization, min_edge_bipartization};
use paramvc::certificate::{Decision, SolverCertificate, Threshold};
use paramvc::dimacs::write_dimacs;
use paramvc::generators;
use paramvc::matching::{first_addable_edge, Matching};
use paramvc::oracles::{
    bf_max_independent_set, bf_max_matching, bf_min_capacitated_vc, bf_min_dominating_set,
    bf_min_edge_bipartization, bf_min_vertex_cover, capacitated_cover_feasible, OracleLimits,
};
use paramvc::reductions::{
    map_ds_forward, ReductionKind, ReductionOutput, ReductionParams, Sidecar,
};
use paramvc::vcl1::{solve_vcl1_opts, SolveOptions, Vcl1Instance, Vcl1Stats};
use paramvc::vcu1::{solve_vcu1, Vcu1Instance, Vcu1Stats};
use paramvc::Error;
use serde::Serialize;

use crate::io::*;
use crate::*;

#[derive(Serialize)]
struct FractionOut {
    num: i64,
    den: i64,
}

impl From<Threshold> for FractionOut {
    fn from(t: Threshold) -> Self {
        FractionOut {
            num: t.num,
            den: t.den,
        }
    }
}

#[derive(Serialize)]
struct InstanceSummary {
    n: usize,
    m: usize,
    #[serde(rename = "B")]
    b: usize,
    k: usize,
    threshold: FractionOut,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Stats {
    Vcl1(Vcl1Stats),
    Vcu1(Vcu1Stats),
}

#[derive(Serialize)]
struct SolveReport {
    command: String,
    instance: InstanceSummary,
    answer: bool,
    cover_size: Option<usize>,
    certificate: Option<String>,
    stats: Stats,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u128>,
}

fn command_echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

pub fn solve(a: SolveArgs) -> Result<bool> {
    let start = Instant::now();
    let (g, _) = read_graph(&a.graph)?;
    let (name, decision, threshold, stats) = match a.problem {
        Problem::Vcl1 => {
            let inst = Vcl1Instance::new(g.clone(), a.b, a.k).map_err(user_error)?;
            let out =
                solve_vcl1_opts(&inst, SolveOptions { threads: a.threads }).map_err(user_error)?;
            (
                "vcl1",
                out.decision,
                inst.threshold(),
                Stats::Vcl1(out.stats),
            )
        }
        Problem::Vcu1 => {
            let inst = Vcu1Instance::new(g.clone(), a.b, a.k).map_err(user_error)?;
            let out = solve_vcu1(&inst).map_err(user_error)?;
            (
                "vcu1",
                out.decision,
                inst.threshold(),
                Stats::Vcu1(out.stats),
            )
        }
    };
    if let Some(c) = decision.certificate() {
        c.verify(&g).map_err(user_error)?;
        ensure!(
            threshold.admits(c.len()),
            "cover of size {} misses {threshold}",
            c.len()
        );
    }
    if let Some(path) = &a.certificate {
        let cert = SolverCertificate::new(name, &decision, threshold);
        write_file(path, &json_line(&cert)?)?;
        let back: SolverCertificate = serde_json::from_value(read_json(path)?)?;
        ensure!(
            back == cert,
            "certificate at {} did not read back",
            path.display()
        );
    }
    let report = SolveReport {
        command: command_echo(),
        instance: InstanceSummary {
            n: g.n(),
            m: g.m(),
            b: a.b,
            k: a.k,
            threshold: threshold.into(),
        },
        answer: decision.is_yes(),
        cover_size: decision.certificate().map(|c| c.len()),
        certificate: a.certificate.as_ref().map(|p| p.display().to_string()),
        stats,
        wall_time_ms: a.timing.then(|| start.elapsed().as_millis()),
    };
    print!("{}", json_line(&report)?);
    Ok(matches!(decision, Decision::Yes(_)))
}

#[derive(Serialize)]
struct ReduceReport<'a> {
    command: String,
    kind: ReductionKind,
    params: &'a ReductionParams,
    instance: String,
    sidecar: String,
}

pub fn reduce(a: ReduceArgs) -> Result<bool> {
    let (g, _) = read_graph(&a.graph)?;
    let kind = match a.kind {
        ReduceKind::DsToCvcl1 => ReductionKind::Cvcl1,
        ReduceKind::IsToVcu2 => ReductionKind::Vcu2,
        ReduceKind::VcToVcu1u => ReductionKind::Vcu1Unbounded,
    };
    let out = paramvc::reductions::reduce(kind, &g, a.k).map_err(user_error)?;
    let comments = vec![
        format!(
            "constructed by paramvc reduce, kind {}",
            serde_json::to_string(&kind)?.trim_matches('"')
        ),
        format!("target cover size {}", out.params.target),
    ];
    write_file(
        &a.out,
        &write_dimacs(&out.graph, out.capacity.as_deref(), &comments),
    )?;
    let sidecar = a.sidecar.clone().unwrap_or_else(|| {
        let mut p = a.out.clone().into_os_string();
        p.push(".json");
        PathBuf::from(p)
    });
    write_file(
        &sidecar,
        &(serde_json::to_string_pretty(&out.to_sidecar())? + "\n"),
    )?;
    let report = ReduceReport {
        command: command_echo(),
        kind,
        params: &out.params,
        instance: a.out.display().to_string(),
        sidecar: sidecar.display().to_string(),
    };
    print!("{}", json_line(&report)?);
    Ok(true)
}

#[derive(Serialize)]
struct MapOutput {
    kind: ReductionKind,
    direction: &'static str,
    size: usize,
    vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    assignment: Option<Vec<usize>>,
}

pub fn map(a: MapArgs) -> Result<bool> {
    let sidecar: Sidecar = serde_json::from_value(read_json(&a.reduction)?)
        .with_context(|| format!("reading sidecar {}", a.reduction.display()))?;
    let out = ReductionOutput::from_sidecar(&sidecar).map_err(user_error)?;
    let solution = vertex_list(&read_json(&a.solution)?)?;
    let (direction, vertices, assignment) = match a.direction {
        Direction::Forward if out.kind == ReductionKind::Cvcl1 => {
            let c = map_ds_forward(&out, &solution).map_err(user_error)?;
            ("forward", c.cover.cover, Some(one_based(&c.assignment)))
        }
        Direction::Forward => (
            "forward",
            out.map_forward(&solution).map_err(user_error)?,
            None,
        ),
        Direction::Back => ("back", out.map_back(&solution).map_err(user_error)?, None),
    };
    let result = MapOutput {
        kind: out.kind,
        direction,
        size: vertices.len(),
        vertices: one_based(&vertices),
        assignment,
    };
    emit(a.out.as_deref(), &json_line(&result)?)?;
    Ok(true)
}

fn report_check(passed: bool, message: String) -> Result<bool> {
    println!("{message}");
    Ok(passed)
}

pub fn verify(a: VerifyArgs) -> Result<bool> {
    let (g, capacity) = read_graph(&a.graph)?;
    let object = read_json(&a.object)?;
    match a.kind {
        VerifyKind::Cover | VerifyKind::CapacitatedCover => {
            let set = vertex_list(&object)?;
            if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
                bail!("vertex {} out of range (n = {})", v + 1, g.n());
            }
            if let Some((u, v)) = g.uncovered_edge(&set) {
                return report_check(false, format!("uncovered edge {{{}, {}}}", u + 1, v + 1));
            }
            if a.kind == VerifyKind::CapacitatedCover
                && capacitated_cover_feasible(&g, &capacity, &set).is_none()
            {
                return report_check(false, "no edge assignment respects the capacities".into());
            }
            let mut distinct = set.clone();
            distinct.sort_unstable();
            distinct.dedup();
            report_check(true, format!("ok: cover of size {}", distinct.len()))
        }
        VerifyKind::MatchingMaximal => {
            let pairs = edge_list(&object)?;
            let m = match Matching::new(&g, pairs) {
                Ok(m) => m,
                Err(e @ (Error::NotAnEdge(..) | Error::NotAMatching(_))) => {
                    return report_check(false, user_error(e).to_string())
                }
                Err(e) => return Err(user_error(e)),
            };
            match first_addable_edge(&g, &m).map_err(user_error)? {
                Some((u, v)) => {
                    report_check(false, format!("edge {{{}, {}}} can be added", u + 1, v + 1))
                }
                None => report_check(true, format!("ok: maximal matching of size {}", m.len())),
            }
        }
        VerifyKind::Bipartization => {
            let edges = edge_list(&object)?;
            match is_edge_bipartization(&g, &edges) {
                Ok(true) => report_check(
                    true,
                    format!("ok: edge bipartization of size {}", edges.len()),
                ),
                Ok(false) => {
                    report_check(false, "the graph minus these edges has an odd cycle".into())
                }
                Err(e @ Error::NotAnEdge(..)) => report_check(false, user_error(e).to_string()),
                Err(e) => Err(user_error(e)),
            }
        }
    }
}

pub fn gen(a: GenArgs) -> Result<bool> {
    let (g, label) = match a.family {
        Family::Stars { t, b } => (generators::stars(t, b), format!("stars {t} {b}")),
        Family::Cliques { t, b } => (generators::cliques(t, b), format!("cliques {t} {b}")),
        Family::Cycle { l } => (generators::cycle(l), format!("cycle {l}")),
        Family::Path { l } => (generators::path(l), format!("path {l}")),
        Family::Random { n, b, seed } => (
            Ok(generators::random(n, b, seed)),
            format!("random {n} {b} {seed}"),
        ),
        Family::P3s { t } => (Ok(generators::p3s(t)), format!("p3s {t}")),
    };
    let g = g.map_err(user_error)?;
    emit(
        a.out.as_deref(),
        &write_dimacs(&g, None, &[format!("paramvc gen {label}")]),
    )?;
    Ok(true)
}

#[derive(Serialize)]
struct OracleOut<W> {
    optimum: Option<usize>,
    witness: Option<W>,
}

pub fn oracle(a: OracleArgs) -> Result<bool> {
    let (g, capacity) = read_graph(&a.graph)?;
    let limits = OracleLimits::from_env();
    let vertices =
        |r: paramvc::Result<paramvc::oracles::OracleResult<Vec<usize>>>| -> Result<String> {
            let r = r.map_err(user_error)?;
            json_line(&OracleOut {
                optimum: Some(r.optimum),
                witness: Some(one_based(&r.witness)),
            })
        };
    let edges = |r: paramvc::Result<paramvc::oracles::OracleResult<Vec<(usize, usize)>>>| -> Result<String> {
        let r = r.map_err(user_error)?;
        json_line(&OracleOut {
            optimum: Some(r.optimum),
            witness: Some(one_based_edges(&r.witness)),
        })
    };
    let (text, found) = match a.problem {
        OracleProblem::MinVc => (vertices(bf_min_vertex_cover(&g, &limits))?, true),
        OracleProblem::MinDs => (vertices(bf_min_dominating_set(&g, &limits))?, true),
        OracleProblem::MaxIs => (vertices(bf_max_independent_set(&g, &limits))?, true),
        OracleProblem::MinEbip => (edges(bf_min_edge_bipartization(&g, &limits))?, true),
        OracleProblem::MaxMatching => (edges(bf_max_matching(&g, &limits))?, true),
        OracleProblem::MinCvc => {
            match bf_min_capacitated_vc(&g, &capacity, &limits).map_err(user_error)? {
                Some(r) => (vertices(Ok(r))?, true),
                None => (
                    json_line(&OracleOut::<Vec<usize>> {
                        optimum: None,
                        witness: None,
                    })?,
                    false,
                ),
            }
        }
    };
    print!("{text}");
    Ok(found)
}

#[derive(Serialize)]
struct BipartizeOut {
    size: Option<usize>,
    edges: Option<Vec<[usize; 2]>>,
}

pub fn bipartize(a: BipartizeArgs) -> Result<bool> {
    let (g, _) = read_graph(&a.graph)?;
    let found = min_edge_bipartization(&g, a.budget);
    let out = BipartizeOut {
        size: found.as_ref().map(|b| b.size()),
        edges: found.as_ref().map(|b| one_based_edges(&b.edges)),
    };
    print!("{}", json_line(&out)?);
    Ok(found.is_some())
}
