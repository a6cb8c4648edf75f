//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

#[path = "../../core/tests/oracles/mod.rs"]
mod oracles;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use hcolor::generate::{cubic_graphs, GenFilter, GraphResult, Strategy, VerificationReport};
use hcolor::graph::{
    canonical_form, k33, k4, petersen, sylvester, triple_edge, EdgeId, EdgeSubset, Multigraph,
};
use hcolor::hcoloring::{
    derive_52_cover, derive_bf_cover, solve, HColoring, SolveOptions, SolveStatus,
};
use hcolor::matchings::{
    chromatic_index_cubic, enumerate_matchings, enumerate_perfect_matchings, even_subgraph_basis,
    find_even_cover,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Runs the `hcolor` binary and parses its JSON report.
fn cli_report(dir: &Path, args: &[&str]) -> Result<(i32, VerificationReport, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hcolor"))
        .args(args)
        .arg("--run-dir")
        .arg(dir)
        .output()
        .map_err(|e| format!("cannot run hcolor: {e}"))?;
    let elapsed = start.elapsed();
    let report: VerificationReport = serde_json::from_slice(&out.stdout)
        .map_err(|e| format!("bad report from {args:?}: {e}"))?;
    Ok((out.status.code().unwrap_or(-1), report, elapsed))
}

/// Degree of every vertex in an edge subset, counted from the edge list.
fn degrees(g: &Multigraph, s: EdgeSubset) -> Vec<usize> {
    let ends: Vec<(usize, usize)> = g.edge_list().collect();
    let mut deg = vec![0; g.n()];
    for e in s.iter() {
        let (u, v) = ends[e.index()];
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

fn covers_each_edge_twice(g: &Multigraph, cover: &[EdgeSubset]) -> bool {
    g.edge_ids()
        .all(|e| cover.iter().filter(|s| s.contains(e)).count() == 2)
}

/// The result list has exactly one hit, of the given class, within the limit.
fn single_hit(
    report: &VerificationReport,
    code: i32,
    named: &Multigraph,
    elapsed: Duration,
    limit: Duration,
) -> Result<GraphResult, String> {
    ensure(code == 0, format!("exit code {code}"))?;
    ensure(report.passed(), format!("verdict {:?}", report.verdict))?;
    ensure(report.counterexamples.is_empty(), "counterexamples present")?;
    ensure(
        report.universe.max_n == 10,
        "universe does not reach order 10",
    )?;
    ensure(
        report.results.len() == report.universe.count,
        "result count mismatch",
    )?;
    let hits: Vec<&GraphResult> = report.hits().collect();
    ensure(hits.len() == 1, format!("{} hits", hits.len()))?;
    let form = canonical_form(named).unwrap().to_hex();
    ensure(hits[0].canonical == form, "hit is not the named graph")?;
    let rebuilt = canonical_form(&hits[0].graph().map_err(|e| e.to_string())?).unwrap();
    ensure(
        rebuilt.to_hex() == form,
        "hit edge list disagrees with its canonical form",
    )?;
    ensure(elapsed < limit, format!("took {elapsed:?}"))?;
    Ok(hits[0].clone())
}

fn criterion_1(dir: &Path) -> Outcome {
    let (code, report, t) = cli_report(dir, &["verify", "prop1"])?;
    let hit = single_hit(&report, code, &petersen(), t, Duration::from_secs(300))?;
    ensure(hit.chromatic_index == Some(4), "hit is 3-edge-colorable")?;
    let g = hit.graph().unwrap();
    ensure(chromatic_index_cubic(&g) == 4, "recount disagrees")?;
    Ok(format!(
        "1 of {} classes flagged, the Petersen graph, in {t:.1?}",
        report.universe.count
    ))
}

fn criterion_2(dir: &Path) -> Outcome {
    let (code, report, t) = cli_report(dir, &["verify", "prop2"])?;
    let hit = single_hit(&report, code, &sylvester(), t, Duration::from_secs(300))?;
    let g = hit.graph().unwrap();
    ensure(
        enumerate_perfect_matchings(&g).unwrap().is_empty(),
        "recount disagrees",
    )?;
    Ok(format!(
        "1 of {} classes flagged, the Sylvester graph, in {t:.1?}",
        report.universe.count
    ))
}

fn theorem(dir: &Path, task: &str, named: &Multigraph) -> Outcome {
    let (code, report, t) = cli_report(dir, &["verify", task])?;
    let hit = single_hit(&report, code, named, t, Duration::from_secs(1800))?;
    ensure(
        hit.identity_witness == Some(true),
        "identity witness not confirmed",
    )?;
    for r in &report.results {
        let expected = if r.hit {
            SolveStatus::Found
        } else {
            SolveStatus::ExhaustedNone
        };
        ensure(
            r.solve_status == Some(expected),
            format!("{} has status {:?}", r.canonical, r.solve_status),
        )?;
    }
    ensure(
        hit.adjacency_closed == Some(true),
        "used edges not closed under adjacency",
    )?;
    Ok(format!(
        "Found only for the named class, ExhaustedNone for the other {}, in {t:.1?}",
        report.results.len() - 1
    ))
}

fn criterion_3(dir: &Path) -> Outcome {
    theorem(dir, "thm1", &petersen())
}

fn criterion_4(dir: &Path) -> Outcome {
    theorem(dir, "thm2", &sylvester())
}

/// Rebuilds every coloring listed in the reports and checks the pullback
/// facts over all matchings of the color graph.
fn criterion_5(dir: &Path) -> Outcome {
    let mut colorings = 0;
    let mut checked = 0usize;
    let mut violations = Vec::new();
    for (args, named, named_is_source) in [
        (&["verify", "thm1"][..], petersen(), true),
        (&["verify", "thm2"][..], sylvester(), true),
        (&["scan", "jaeger", "--max-n", "10"][..], petersen(), false),
        (
            &["scan", "sylvester", "--max-n", "10"][..],
            sylvester(),
            false,
        ),
    ] {
        let (_, report, _) = cli_report(dir, args)?;
        for r in report
            .results
            .iter()
            .filter(|r| r.solve_status == Some(SolveStatus::Found))
        {
            let g = r.graph().unwrap();
            let (source, target) = if named_is_source {
                (&named, &g)
            } else {
                (&g, &named)
            };
            let map: Vec<EdgeId> = r
                .witness
                .as_ref()
                .unwrap()
                .iter()
                .map(|&c| EdgeId(c))
                .collect();
            let f = HColoring::new(source, target, map).map_err(|e| e.to_string())?;
            colorings += 1;
            if !f.is_valid() {
                violations.push(format!("{}: witness invalid", r.canonical));
                continue;
            }
            if r.pullbacks.as_ref().map(|p| p.violations) != Some(0) {
                violations.push(format!("{}: report lists pullback violations", r.canonical));
            }
            for m in enumerate_matchings(target) {
                checked += 1;
                if degrees(source, f.preimage(m)).iter().any(|&d| d > 1) {
                    violations.push(format!("{}: matching pulls back badly", r.canonical));
                }
            }
            for m in enumerate_perfect_matchings(target).unwrap() {
                if degrees(source, f.preimage(m)).iter().any(|&d| d != 1) {
                    violations.push(format!(
                        "{}: perfect matching pulls back badly",
                        r.canonical
                    ));
                }
            }
            if chromatic_index_cubic(source) > chromatic_index_cubic(target) {
                violations.push(format!("{}: chromatic index increases", r.canonical));
            }
        }
    }
    ensure(
        violations.is_empty(),
        format!("{} violations: {:?}", violations.len(), violations),
    )?;
    Ok(format!(
        "{colorings} colorings, {checked} matchings pulled back, 0 violations"
    ))
}

fn criterion_6(dir: &Path) -> Outcome {
    let start = Instant::now();
    let (code, jaeger, _) = cli_report(dir, &["scan", "jaeger", "--max-n", "10"])?;
    let (code_s, sylv, _) = cli_report(dir, &["scan", "sylvester", "--max-n", "10"])?;
    for (c, r) in [(code, &jaeger), (code_s, &sylv)] {
        ensure(c == 0, format!("{}: exit code {c}", r.task))?;
        ensure(
            r.counterexamples.is_empty(),
            format!("{}: counterexamples", r.task),
        )?;
        ensure(
            r.stats.inconclusive == 0,
            format!("{}: inconclusive entries", r.task),
        )?;
        ensure(
            r.results.iter().all(|g| g.hit),
            format!("{}: uncolored graph", r.task),
        )?;
    }
    let p = petersen();
    for r in &jaeger.results {
        ensure(
            r.bf_cover_valid == Some(true) && r.even_cover_valid == Some(true),
            "report cover flag",
        )?;
        let g = r.graph().unwrap();
        let map: Vec<EdgeId> = r
            .witness
            .as_ref()
            .unwrap()
            .iter()
            .map(|&c| EdgeId(c))
            .collect();
        let f = HColoring::new(&g, &p, map).map_err(|e| e.to_string())?;
        let bf = derive_bf_cover(&f).map_err(|e| e.to_string())?;
        let pm_ok = bf.len() == 6 && bf.iter().all(|s| degrees(&g, *s).iter().all(|&d| d == 1));
        ensure(
            pm_ok && covers_each_edge_twice(&g, &bf),
            format!("{}: bad 6-cover", r.canonical),
        )?;
        let even = derive_52_cover(&f).map_err(|e| e.to_string())?;
        let even_ok = even.len() == 5
            && even
                .iter()
                .all(|s| degrees(&g, *s).iter().all(|d| d % 2 == 0));
        ensure(
            even_ok && covers_each_edge_twice(&g, &even),
            format!("{}: bad (5,2) cover", r.canonical),
        )?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(7200), format!("took {t:?}"))?;
    Ok(format!(
        "{} + {} graphs colored, {} cover pairs recounted, 0 inconclusive, in {t:.1?}",
        jaeger.results.len(),
        sylv.results.len(),
        jaeger.results.len()
    ))
}

fn criterion_7() -> Outcome {
    let p = petersen();
    let pms = enumerate_perfect_matchings(&p).unwrap();
    ensure(pms.len() == 6, format!("{} perfect matchings", pms.len()))?;
    ensure(
        pms.iter().all(|s| degrees(&p, *s).iter().all(|&d| d == 1)),
        "not perfect matchings",
    )?;
    ensure(
        covers_each_edge_twice(&p, &pms),
        "edge not in exactly two perfect matchings",
    )?;
    let basis = even_subgraph_basis(&p);
    let span: BTreeSet<u64> = basis.span().iter().map(|s| s.bits()).collect();
    ensure(
        basis.dimension() == 6 && span.len() == 64,
        "cycle space dimension is not 6",
    )?;
    let cover = find_even_cover(&p, 5, 2)
        .unwrap()
        .ok_or("no (5,2) cover found")?;
    let even = cover
        .iter()
        .all(|s| degrees(&p, *s).iter().all(|d| d % 2 == 0));
    ensure(
        cover.len() == 5 && even && covers_each_edge_twice(&p, &cover),
        "bad (5,2) cover",
    )?;
    Ok("6 perfect matchings, each edge in 2; cycle space dimension 6; (5,2) cover found".into())
}

fn criterion_8() -> Outcome {
    let targets = [
        ("k4", k4()),
        ("k33", k33()),
        ("triple", triple_edge()),
        ("sylvester", sylvester()),
    ];
    let all = SolveOptions {
        enumerate_all: true,
        ..SolveOptions::default()
    };
    let broken = SolveOptions {
        symmetry_break: true,
        ..SolveOptions::default()
    };
    let mut pairs = 0;
    let mut witnesses = 0;
    for n in [2, 4, 6] {
        for g in cubic_graphs(n, &GenFilter::new(n), Strategy::EdgeInsertion).unwrap() {
            for (name, h) in &targets {
                let expected = oracles::naive_colorings(&g, h);
                let out = solve(&g, h, &all).unwrap();
                let got: BTreeSet<Vec<u32>> = out
                    .witnesses
                    .iter()
                    .map(|f| f.map().iter().map(|e| e.0).collect())
                    .collect();
                ensure(
                    got == expected && got.len() == out.witnesses.len(),
                    format!("witness sets differ, H = {name}"),
                )?;
                let verdict = solve(&g, h, &broken).unwrap().status;
                ensure(
                    verdict == out.status,
                    format!("symmetry breaking changed the verdict, H = {name}"),
                )?;
                pairs += 1;
                witnesses += expected.len();
            }
        }
    }
    Ok(format!(
        "{pairs} pairs, {witnesses} witnesses identical, verdicts kept"
    ))
}

fn criterion_9() -> Outcome {
    let mut compared = 0;
    for n in [2, 4, 6] {
        for f in oracles::filters(n) {
            let expected = oracles::pairing_codes(n, &f);
            for s in [Strategy::EdgeInsertion, Strategy::VertexInsertion] {
                let got = oracles::generated_codes(n, &f, s).ok_or("isomorphic duplicates")?;
                ensure(
                    got == expected,
                    format!("pairing oracle differs: {f:?} {s:?}"),
                )?;
            }
            compared += 1;
        }
    }
    for n in [2, 4, 6, 8, 10] {
        for f in oracles::filters(n) {
            let a = cubic_graphs(n, &f, Strategy::EdgeInsertion).unwrap();
            let b = cubic_graphs(n, &f, Strategy::VertexInsertion).unwrap();
            if n <= 8 {
                let fa: BTreeSet<_> = a.iter().map(|g| canonical_form(g).unwrap()).collect();
                let fb: BTreeSet<_> = b.iter().map(|g| canonical_form(g).unwrap()).collect();
                ensure(
                    fa.len() == a.len() && fa == fb,
                    format!("form sets differ: {f:?}"),
                )?;
            } else {
                ensure(a.len() == b.len(), format!("counts differ: {f:?}"))?;
            }
            compared += 1;
        }
    }
    Ok(format!("{compared} (order, filter) cases, 0 discrepancies"))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path();
    let criteria: Vec<Criterion> = vec![
        ("prop1 reproduction", Box::new(|| criterion_1(path))),
        ("prop2 reproduction", Box::new(|| criterion_2(path))),
        ("thm1 reproduction", Box::new(|| criterion_3(path))),
        ("thm2 reproduction", Box::new(|| criterion_4(path))),
        ("pullback property suite", Box::new(|| criterion_5(path))),
        ("conjecture scans", Box::new(|| criterion_6(path))),
        ("derived base facts", Box::new(criterion_7)),
        ("solver oracle equivalence", Box::new(criterion_8)),
        ("generator soundness", Box::new(criterion_9)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("criterion {} PASS [exact] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL [exact] {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
