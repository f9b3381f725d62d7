//! Seeded and exhaustive cross-checks of the library against its exact
//! contraction search, shared by the command line and the test suite.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blocker::{
    characterize_ct_with, classify_ct_domination, classify_ct_total, ct_exact_with, match_config,
    p4_configuration_check, path_contraction_certificate, StConfigId,
};
use crate::classes::{abc_partition, classify_h, ec1_gt2_p3kp2free_with, ec1_gt2_p5free, is_h_free, Verdict};
use crate::domination::{
    enumerate_min_sets_with, is_feasible, solve_with, Budget, DominationKind, SolveOptions,
};
use crate::error::{Error, Result};
use crate::graph::enumerate::{connected_graphs_range, connected_graphs_where};
use crate::graph::{contains_induced, contains_subgraph, encode_graph6, random_connected, Graph, PatternGraph, VertexSet};
use crate::reductions::{
    brute_1in3, reduce_2p3free, reduce_chordal, reduce_clawfree, reduce_tree, validate_reduction_with,
    CheckStatus, SatInstance,
};

use DominationKind::*;

/// A named verification suite. The command-line names are kept short.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Suite {
    /// Shortest-path certificates use at most three edges and lower `γt2`.
    #[serde(rename = "thm32")]
    PathBound,
    /// The structural characterization matches the contraction search.
    #[serde(rename = "thm34")]
    Characterization,
    /// The classifications for domination and total domination match it.
    #[serde(rename = "huangxu")]
    ClassicClassifications,
    /// Tree attachment turns `γ` into `γt2` with the same one-edge answer.
    #[serde(rename = "lem43")]
    TreeReduction,
    /// The `2P3`-free construction and the independence criterion.
    #[serde(rename = "appB")]
    TwoP3Reduction,
    /// The chordal construction.
    #[serde(rename = "appC")]
    ChordalReduction,
    /// The claw-free construction.
    #[serde(rename = "clawfree")]
    ClawfreeReduction,
    /// One contraction suffices on `P5`-free graphs.
    #[serde(rename = "p5free")]
    P5Free,
    /// The `P3 + P2`-free algorithm.
    #[serde(rename = "p3kp2")]
    P3kP2Free,
    /// Graphs on which one contraction lowers `γ` but not `γt2` or back.
    #[serde(rename = "separation")]
    Separation,
    /// The dichotomy classifier on fixed patterns.
    #[serde(rename = "dichotomy")]
    Dichotomy,
    /// Sets containing a `P4` contain `O4` or `O6`.
    #[serde(rename = "p4config")]
    P4Configurations,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::PathBound,
        Suite::Characterization,
        Suite::ClassicClassifications,
        Suite::TreeReduction,
        Suite::TwoP3Reduction,
        Suite::ChordalReduction,
        Suite::ClawfreeReduction,
        Suite::P5Free,
        Suite::P3kP2Free,
        Suite::Separation,
        Suite::Dichotomy,
        Suite::P4Configurations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PathBound => "thm32",
            Suite::Characterization => "thm34",
            Suite::ClassicClassifications => "huangxu",
            Suite::TreeReduction => "lem43",
            Suite::TwoP3Reduction => "appB",
            Suite::ChordalReduction => "appC",
            Suite::ClawfreeReduction => "clawfree",
            Suite::P5Free => "p5free",
            Suite::P3kP2Free => "p3kp2",
            Suite::Separation => "separation",
            Suite::Dichotomy => "dichotomy",
            Suite::P4Configurations => "p4config",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::parse(0, format!("unknown suite `{s}`, expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Largest graph order for exhaustive sweeps.
    pub max_n: usize,
    pub seed: u64,
    /// Number of seeded samples for sampled checks.
    pub count: usize,
    pub budget: Budget,
    /// Replace sampling with exhaustive enumeration where that is feasible
    /// but slow (the order-9 sweep of the `2P3` suite).
    pub deep: bool,
    /// Wall-clock allowance for checks that may not finish, such as the
    /// full identity on the smallest claw-free instance.
    pub slow_check_time: Duration,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 7,
            seed: 1,
            count: 500,
            budget: Budget::default(),
            deep: false,
            slow_check_time: Duration::from_secs(600),
        }
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    /// Instances examined.
    pub cases: usize,
    pub failures: Vec<String>,
    /// Checks that ran out of budget.
    pub skipped: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            cases: 0,
            failures: Vec::new(),
            skipped: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one outcome per graph; errors other than budget overruns
    /// count as failures.
    fn absorb(&mut self, outcomes: Vec<(String, Result<Option<String>>)>) {
        self.cases += outcomes.len();
        for (id, r) in outcomes {
            match r {
                Ok(None) => {}
                Ok(Some(why)) => self.failures.push(format!("{id}: {why}")),
                Err(Error::ScaleLimit(why)) => self.skipped.push(format!("{id}: {why}")),
                Err(e) => self.failures.push(format!("{id}: {e}")),
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} cases, {} failures, {} skipped)",
            self.suite,
            self.cases,
            self.failures.len(),
            self.skipped.len()
        )
    }
}

fn check(ok: bool, why: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(why)
}

fn per_graph<F>(graphs: &[Graph], f: F) -> Vec<(String, Result<Option<String>>)>
where
    F: Fn(&Graph) -> Result<Option<String>> + Sync,
{
    graphs.par_iter().map(|g| (encode_graph6(g), f(g))).collect()
}

fn pattern(name: &str) -> PatternGraph {
    PatternGraph::parse(name).expect("built-in pattern name")
}

fn free_of(name: &str) -> impl Fn(&Graph) -> bool + Sync {
    let h = pattern(name);
    move |g: &Graph| contains_induced(g, &h).expect("pattern is small").is_none()
}

fn one_edge(g: &Graph, kind: DominationKind, budget: &Budget) -> Result<bool> {
    Ok(ct_exact_with(g, kind, 1, budget)?.is_some())
}

fn semitotal(g: &Graph, budget: &Budget) -> Result<usize> {
    Ok(solve_with(g, Semitotal, &SolveOptions::with_budget(*budget))?.value)
}

fn domination(g: &Graph, budget: &Budget) -> Result<usize> {
    Ok(solve_with(g, Domination, &SolveOptions::with_budget(*budget))?.value)
}

/// Runs one suite.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new(suite);
    let b = cfg.budget;
    match suite {
        Suite::PathBound => {
            let graphs = connected_graphs_range(2, cfg.max_n);
            report.absorb(per_graph(&graphs, |g| {
                if semitotal(g, &b)? < 3 {
                    return Ok(None);
                }
                let exact = ct_exact_with(g, Semitotal, 3, &b)?;
                let cert = path_contraction_certificate(g)?;
                cert.validate(g)?;
                Ok(check(exact.is_some(), || "no contraction of at most three edges".into()).or(check(
                    cert.k() <= 3 && cert.value_after < cert.value_before,
                    || format!("certificate {:?} does not lower the value", cert.edges),
                )))
            }));
        }
        Suite::Characterization => {
            let graphs = connected_graphs_range(2, cfg.max_n);
            report.absorb(per_graph(&graphs, |g| {
                let verdict = characterize_ct_with(g, &b)?;
                verdict.validate(g)?;
                let exact = ct_exact_with(g, Semitotal, 3, &b)?.map(|c| c.k());
                Ok(check(verdict.k == exact, || {
                    format!("characterization {:?} ({}), search {exact:?}", verdict.k, verdict.mechanism.name())
                }))
            }));
        }
        Suite::ClassicClassifications => {
            let graphs = connected_graphs_range(2, cfg.max_n);
            report.absorb(per_graph(&graphs, |g| {
                let mut out = None;
                if domination(g, &b)? >= 2 {
                    let got = classify_ct_domination(g, &b)?;
                    let exact = ct_exact_with(g, Domination, 3, &b)?.map(|c| c.k());
                    out = out.or(check(Some(got) == exact, || format!("domination {got} vs {exact:?}")));
                }
                if solve_with(g, Total, &SolveOptions::with_budget(b))?.value >= 3 {
                    let got = classify_ct_total(g, &b)?;
                    let exact = ct_exact_with(g, Total, 3, &b)?.map(|c| c.k());
                    out = out.or(check(Some(got) == exact, || format!("total {got} vs {exact:?}")));
                }
                Ok(out)
            }));
        }
        Suite::TreeReduction => {
            let graphs = connected_graphs_range(2, cfg.max_n.min(5));
            report.absorb(per_graph(&graphs, |g| {
                let out = reduce_tree(g)?;
                let want = domination(g, &b)? + 2 * g.order();
                let got = semitotal(&out.graph, &b)?;
                if got != want {
                    return Ok(Some(format!("γt2 = {got}, expected {want}")));
                }
                let left = one_edge(g, Domination, &b)?;
                let right = one_edge(&out.graph, Semitotal, &b)?;
                Ok(check(left == right, || format!("one edge lowers γ: {left}, lowers γt2 of T(g): {right}")))
            }));
        }
        Suite::ChordalReduction => {
            let graphs = connected_graphs_range(1, cfg.max_n.min(5));
            for ell in [2, 3] {
                report.absorb(per_graph(&graphs, |g| {
                    let out = reduce_chordal(g, ell)?;
                    let report = validate_reduction_with(&out, &b);
                    if let Some(c) = report.checks.iter().find(|c| c.status != CheckStatus::Pass) {
                        if c.status == CheckStatus::Skipped {
                            return Err(Error::ScaleLimit(c.detail.clone()));
                        }
                        return Ok(Some(format!("ell {ell}: {} {}", c.name, c.detail)));
                    }
                    let gamma = domination(g, &b)?;
                    let yes = (2..=ell).contains(&gamma);
                    let got = one_edge(&out.graph, Semitotal, &b)?;
                    Ok(check(got == yes, || {
                        format!("ell {ell}: one edge lowers γt2(G'): {got}, γ(g) = {gamma}")
                    }))
                }));
            }
        }
        Suite::TwoP3Reduction => two_p3_suite(&mut report, cfg),
        Suite::ClawfreeReduction => clawfree_suite(&mut report, cfg),
        Suite::P5Free => {
            let levels = connected_graphs_where(cfg.max_n, free_of("P5"));
            let graphs: Vec<Graph> = levels.into_iter().skip(1).flatten().collect();
            report.absorb(per_graph(&graphs, |g| {
                let value = semitotal(g, &b)?;
                let exact = ct_exact_with(g, Semitotal, 1, &b)?.is_some();
                let fast = ec1_gt2_p5free(g)?;
                let mut out = check(fast == exact, || format!("pair scan says {fast}, search says {exact}"));
                if value >= 3 {
                    out = out.or(check(exact, || format!("γt2 = {value} but one edge is not enough")));
                }
                if domination(g, &b)? >= 3 {
                    let dom = one_edge(g, Domination, &b)?;
                    out = out.or(check(dom, || "γ >= 3 but one edge does not lower γ".into()));
                }
                Ok(out)
            }));
        }
        Suite::P3kP2Free => {
            let levels = connected_graphs_where(cfg.max_n, free_of("P3+P2"));
            let graphs: Vec<Graph> = levels.into_iter().skip(1).flatten().collect();
            let with_regular = std::sync::atomic::AtomicUsize::new(0);
            report.absorb(per_graph(&graphs, |g| {
                let exact = one_edge(g, Semitotal, &b)?;
                let fast = ec1_gt2_p3kp2free_with(g, 1, &b)?;
                let mut out = check(fast == exact, || format!("algorithm says {fast}, search says {exact}"));
                if let Some(part) = abc_partition(g, 1, &b)? {
                    if !part.r.is_empty() {
                        with_regular.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        let (gamma, value) = (domination(g, &b)?, semitotal(g, &b)?);
                        out = out.or(check(gamma == value, || format!("γ = {gamma} but γt2 = {value}")));
                        let dom = one_edge(g, Domination, &b)?;
                        out = out.or(check(dom == exact, || format!("one edge lowers γ: {dom}, γt2: {exact}")));
                    }
                }
                Ok(out)
            }));
            report.notes.push(format!(
                "{} graphs have regular vertices",
                with_regular.into_inner()
            ));
        }
        Suite::Separation => {
            let graphs = connected_graphs_range(2, cfg.max_n);
            let rows: Vec<(String, Result<(bool, bool)>)> = graphs
                .par_iter()
                .map(|g| {
                    let r = (|| Ok((one_edge(g, Domination, &b)?, one_edge(g, Semitotal, &b)?)))();
                    (encode_graph6(g), r)
                })
                .collect();
            let mut split = Vec::new();
            for (id, r) in rows {
                report.cases += 1;
                match r {
                    Ok((d, s)) if d != s => split.push(format!("{id} (γ: {d}, γt2: {s})")),
                    Ok(_) => {}
                    Err(Error::ScaleLimit(w)) => report.skipped.push(format!("{id}: {w}")),
                    Err(e) => report.failures.push(format!("{id}: {e}")),
                }
            }
            report.notes.push(format!("{} graphs answer differently for γ and γt2", split.len()));
            report.notes.extend(split.into_iter().take(20));
        }
        Suite::Dichotomy => {
            let fixtures = dichotomy_fixtures();
            report.cases = fixtures.len();
            for (name, verdict, reason) in fixtures {
                let got = classify_h(&pattern(name));
                if got.verdict != verdict || got.reason != reason {
                    report
                        .failures
                        .push(format!("{name}: {} {} instead of {verdict} {reason}", got.verdict, got.reason));
                }
            }
        }
        Suite::P4Configurations => p4_suite(&mut report, cfg),
    }
    report
}

/// Patterns with their expected class and reason.
pub fn dichotomy_fixtures() -> Vec<(&'static str, Verdict, &'static str)> {
    use Verdict::*;
    vec![
        ("claw", CoNpHard, "Thm-claw"),
        ("C3", NpHard, "Thm-girth"),
        ("C4", NpHard, "Thm-girth"),
        ("C7", NpHard, "Thm-girth"),
        ("P6", NpHard, "Thm-P6/P4+P2"),
        ("2P3", CoNpHard, "Thm-2P3"),
        ("P4+2P2", NpHard, "Thm-P6/P4+P2"),
        ("P5", PolyTime, "Thm-P5+tK1"),
        ("P5+3K1", PolyTime, "Thm-P5+tK1"),
        ("P3+2P2+K1", PolyTime, "Thm-P3+pP2+tK1"),
    ]
}

fn two_p3_suite(report: &mut SuiteReport, cfg: &SuiteConfig) {
    let b = cfg.budget;
    let formulas = SatInstance::all_small(4, 4);
    let rows: Vec<(String, Result<Option<String>>)> = formulas
        .par_iter()
        .map(|phi| {
            let id = format!("formula {:?}", phi.clauses);
            let r = (|| {
                let out = reduce_2p3free(phi);
                let rep = validate_reduction_with(&out, &b);
                Ok(rep
                    .checks
                    .iter()
                    .find(|c| c.status != CheckStatus::Pass)
                    .map(|c| format!("{} {} {}", c.name, c.status, c.detail)))
            })();
            (id, r)
        })
        .collect();
    report.absorb(rows);
    let sat = formulas.iter().filter(|p| brute_1in3(p).ok().flatten().is_some()).count();
    report.notes.push(format!("{} formulas, {sat} satisfiable", formulas.len()));

    // equivalence between one-edge reducibility and a non-independent minimum set
    let levels = connected_graphs_where(8, free_of("2P3"));
    let graphs: Vec<Graph> = levels.into_iter().skip(1).flatten().collect();
    let independence = |g: &Graph| -> Result<Option<String>> {
        if semitotal(g, &b)? < 3 {
            return Ok(None);
        }
        let yes = one_edge(g, Semitotal, &b)?;
        let sets = enumerate_min_sets_with(g, Semitotal, &b)?;
        let all_independent = sets.iter().all(|d| g.is_independent(d));
        Ok(check(yes != all_independent, || {
            format!("one edge lowers γt2: {yes}, every minimum set independent: {all_independent}")
        }))
    };
    report.absorb(per_graph(&graphs, independence));
    report.notes.push(format!("{} connected 2P3-free graphs up to order 8", graphs.len()));
    if cfg.deep {
        let nine = connected_graphs_where(9, free_of("2P3")).pop().unwrap_or_default();
        report.notes.push(format!("{} connected 2P3-free graphs of order 9", nine.len()));
        report.absorb(per_graph(&nine, independence));
    } else {
        let h = pattern("2P3");
        let samples: Vec<Graph> = (0..cfg.count as u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (i << 20) ^ 0x2b3);
                loop {
                    let p = rng.gen_range(0.35..0.9);
                    let g = random_connected(9, p, rng.gen()).expect("valid parameters");
                    if contains_induced(&g, &h).expect("pattern is small").is_none() {
                        break g;
                    }
                }
            })
            .collect();
        report.notes.push(format!("{} seeded 2P3-free samples of order 9", samples.len()));
        report.absorb(per_graph(&samples, independence));
    }
}

fn clawfree_suite(report: &mut SuiteReport, cfg: &SuiteConfig) {
    let phi = SatInstance::new(3, vec![[0, 1, 2]; 3]).expect("valid formula");
    let out = reduce_clawfree(&phi).expect("exactly 3-bounded");
    let budget = Budget::nodes(u64::MAX).with_deadline(Instant::now() + cfg.slow_check_time);
    let rep = validate_reduction_with(&out, &budget);
    report.cases = rep.checks.len();
    for c in &rep.checks {
        let line = format!("{} ({} vertices): {} {}", c.name, out.graph.order(), c.status, c.detail);
        match c.status {
            CheckStatus::Pass => report.notes.push(line),
            CheckStatus::Fail => report.failures.push(line),
            CheckStatus::Skipped => report.skipped.push(line),
        }
    }
}

fn p4_suite(report: &mut SuiteReport, cfg: &SuiteConfig) {
    let p4 = pattern("P4");
    let rows: Vec<(String, Result<Option<String>>)> = (0..cfg.count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9e37_79b9) ^ i);
            loop {
                let n = rng.gen_range(6..=12);
                let g = random_connected(n, rng.gen_range(0.15..0.6), rng.gen()).expect("valid parameters");
                let mut order: Vec<usize> = (0..n).collect();
                for j in (1..n).rev() {
                    order.swap(j, rng.gen_range(0..=j));
                }
                let mut d = VertexSet::new(n);
                for v in order {
                    d.insert(v);
                    if is_feasible(&g, &d, Semitotal).expect("no isolated vertices") {
                        break;
                    }
                }
                let inner = g.induced_subgraph(&d.to_vec());
                if contains_subgraph(&inner, &p4).expect("pattern is small").is_none() {
                    continue;
                }
                let found = match_config(&g, &d, StConfigId::O4).or_else(|| match_config(&g, &d, StConfigId::O6));
                let ok = found.is_some() && p4_configuration_check(&g, &d);
                let id = format!("sample {i} {} {:?}", encode_graph6(&g), d.to_vec());
                break (id, Ok(check(ok, || "no O4 or O6 inside the set".into())));
            }
        })
        .collect();
    report.absorb(rows);
}

/// Decides whether a pattern-free check is needed before dispatch; used by
/// the command line to report a precondition failure early.
pub fn require_free(g: &Graph, h: &PatternGraph) -> Result<()> {
    if is_h_free(g, h)? {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(format!("the graph contains an induced {}", h.name())))
    }
}
