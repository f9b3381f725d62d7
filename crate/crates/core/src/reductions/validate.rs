use std::fmt;

use serde::{Deserialize, Serialize};

use super::{brute_1in3, clause_name, var_name, Identity, ReductionOutput, SatInstance, Target};
use crate::domination::{
    enumerate_min_sets_with, feasible_unchecked, find_set_at_most, solve_with, Budget, DominationKind,
    SolveOptions,
};
use crate::error::{Error, Result};
use crate::graph::{ball, class_predicates, contains_induced, Graph, PatternGraph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    /// No check failed; skipped checks are allowed.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }

    fn push(&mut self, name: &str, outcome: Result<std::result::Result<String, String>>) {
        let (status, detail) = match outcome {
            Ok(Ok(d)) => (CheckStatus::Pass, d),
            Ok(Err(d)) => (CheckStatus::Fail, d),
            Err(Error::ScaleLimit(d)) => (CheckStatus::Skipped, format!("ScaleLimit: {d}")),
            Err(e) => (CheckStatus::Fail, e.to_string()),
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            status,
            detail,
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{:<8} {:<22} {}", c.status.to_string(), c.name, c.detail)?;
        }
        Ok(())
    }
}

type Outcome = Result<std::result::Result<String, String>>;

fn verdict(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> Outcome {
    Ok(if ok { Ok(pass.into()) } else { Err(fail.into()) })
}

/// Re-checks a construction with the default search budget.
pub fn validate_reduction(out: &ReductionOutput) -> ValidationReport {
    validate_reduction_with(out, &Budget::default())
}

/// Re-checks labels, vertex count, class membership and the promised
/// `γt2` identity. Checks that exceed `budget` are reported as skipped.
pub fn validate_reduction_with(out: &ReductionOutput, budget: &Budget) -> ValidationReport {
    let g = &out.graph;
    let mut r = ValidationReport { checks: Vec::new() };
    r.push("labels", Ok(labels_bijective(out)));
    r.push(
        "order",
        verdict(
            g.order() == out.meta.expected_order,
            format!("{} vertices", g.order()),
            format!("{} vertices, expected {}", g.order(), out.meta.expected_order),
        ),
    );
    match out.meta.target {
        Target::Tree => {
            if let Identity::DominationPlusTwiceOrder { source } = &out.meta.identity {
                let (a, b) = (class_predicates(source), class_predicates(g));
                let same = a.bipartite == b.bipartite && a.chordal == b.chordal && a.girth == b.girth;
                r.push(
                    "class-preserved",
                    verdict(same, format!("{b:?}"), format!("source {a:?}, output {b:?}")),
                );
            }
        }
        Target::Chordal => {
            r.push("chordal", verdict(class_predicates(g).chordal, "chordal", "not chordal"));
            r.push("P6-free", free_of(g, "P6"));
            r.push("P4+P2-free", free_of(g, "P4+P2"));
            r.push("x0-or-y", x0_or_y(out, budget));
        }
        Target::Clawfree => {
            r.push("claw-free", free_of(g, "claw"));
            r.push("long-paw-bound", long_paw_bound(out));
            r.push("gadget-bound", isolated_gadget_bound(out, budget));
        }
        Target::TwoP3Free => {
            r.push("2P3-free", free_of(g, "2P3"));
        }
    }
    r.push("identity", identity(out, budget));
    r
}

fn labels_bijective(out: &ReductionOutput) -> std::result::Result<String, String> {
    let n = out.graph.order();
    let mut seen = vec![false; n];
    for (name, &v) in &out.labels {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(format!("label {name} -> {v} is out of range or shared"));
        }
    }
    if out.labels.len() == n {
        Ok(format!("{n} labels"))
    } else {
        Err(format!("{} labels for {n} vertices", out.labels.len()))
    }
}

fn free_of(g: &Graph, pattern: &str) -> Outcome {
    let h = PatternGraph::parse(pattern)?;
    Ok(match contains_induced(g, &h)? {
        None => Ok(format!("no induced {pattern}")),
        Some(at) => Err(format!("induced {pattern} on {at:?}")),
    })
}

fn semitotal(g: &Graph, budget: &Budget) -> Result<usize> {
    Ok(solve_with(g, DominationKind::Semitotal, &SolveOptions::with_budget(*budget))?.value)
}

fn identity(out: &ReductionOutput, budget: &Budget) -> Outcome {
    let g = &out.graph;
    match &out.meta.identity {
        Identity::DominationPlusTwiceOrder { source } => {
            let gamma = solve_with(source, DominationKind::Domination, &SolveOptions::with_budget(*budget))?.value;
            let want = gamma + 2 * source.order();
            let got = semitotal(g, budget)?;
            verdict(got == want, format!("γt2 = {got}"), format!("γt2 = {got}, expected {want}"))
        }
        Identity::CappedDomination { source, ell } => {
            let gamma = solve_with(source, DominationKind::Domination, &SolveOptions::with_budget(*budget))?.value;
            let want = (gamma + 1).min(ell + 1);
            let got = semitotal(g, budget)?;
            verdict(got == want, format!("γt2 = {got}"), format!("γt2 = {got}, expected {want}"))
        }
        Identity::SatisfiableIffEqual { formula, value } => {
            let assignment = brute_1in3(formula)?;
            let opts = SolveOptions::with_budget(*budget);
            if let Some(d) = find_set_at_most(g, DominationKind::Semitotal, value - 1, &opts)? {
                return Ok(Err(format!("a semitotal dominating set of size {} exists", d.len())));
            }
            let at_value = match (&assignment, out.meta.target) {
                (Some(a), Target::Clawfree) => {
                    let d = clawfree_set(out, formula, a);
                    Some(d).filter(|d| feasible_unchecked(g, d, DominationKind::Semitotal))
                }
                _ => find_set_at_most(g, DominationKind::Semitotal, *value, &opts)?,
            };
            let sat = assignment.is_some();
            verdict(
                sat == at_value.is_some(),
                format!("γt2 {} {value}, formula {}", if sat { "=" } else { ">" }, sat_word(sat)),
                format!(
                    "formula {} but γt2 {} {value}",
                    sat_word(sat),
                    if at_value.is_some() { "=" } else { ">" }
                ),
            )
        }
    }
}

fn sat_word(sat: bool) -> &'static str {
    if sat {
        "satisfiable"
    } else {
        "unsatisfiable"
    }
}

/// The semitotal dominating set of size `14|X| + |C|` read off a 1-in-3
/// assignment.
fn clawfree_set(out: &ReductionOutput, phi: &SatInstance, assignment: &[bool]) -> VertexSet {
    let mut names = Vec::new();
    for x in 0..phi.num_vars {
        let xn = var_name(x);
        let (pick, paw_vertex) = if assignment[x] { ("T", 1) } else { ("F", 2) };
        names.push(format!("{pick}_{xn}"));
        names.push(format!("v_{xn}"));
        for q in phi.occurrences(x) {
            for j in 1..=2 {
                let paw = format!("P_{{{xn},{j}}}^{}", clause_name(q));
                names.push(format!("{paw}({paw_vertex})"));
                names.push(format!("{paw}(4)"));
            }
        }
    }
    for (c, vars) in phi.clauses.iter().enumerate() {
        let other = vars.iter().find(|&&v| !assignment[v]).expect("exactly one variable is true");
        names.push(format!("t_{}^{}", clause_name(c), var_name(*other)));
    }
    VertexSet::from_iter_with(out.graph.order(), names.iter().map(|n| out.labels[n]))
}

/// Every long paw `P` has `N[P(5)] = {P(4), P(5)}` and keeps the second
/// ball of both vertices inside `P`, so a semitotal dominating set takes at
/// least two vertices from each of the seven long paws of a variable gadget.
fn long_paw_bound(out: &ReductionOutput) -> Outcome {
    let Identity::SatisfiableIffEqual { formula, .. } = &out.meta.identity else {
        return Ok(Err("not a formula construction".into()));
    };
    let g = &out.graph;
    let mut paws = 0;
    for x in 0..formula.num_vars {
        let xn = var_name(x);
        let mut names = vec![["T", "F", "u", "v", "w"].map(|r| format!("{r}_{xn}"))];
        for q in formula.occurrences(x) {
            for j in 1..=2 {
                let paw = format!("P_{{{xn},{j}}}^{}", clause_name(q));
                names.push([1, 2, 3, 4, 5].map(|i| format!("{paw}({i})")));
            }
        }
        for paw in names {
            let ids = paw.clone().map(|n| out.labels[&n]);
            let inside = VertexSet::from_iter_with(g.order(), ids);
            let closed = g.closed_neighbors(ids[4]);
            if closed != VertexSet::from_iter_with(g.order(), [ids[3], ids[4]])
                || !ball(g, ids[3], 2).is_subset(&inside)
                || !ball(g, ids[4], 2).is_subset(&inside)
            {
                return Ok(Err(format!("long paw around {} leaks", paw[0])));
            }
            paws += 1;
        }
    }
    verdict(
        paws == 7 * formula.num_vars,
        format!("{paws} long paws, at least {} vertices forced", 2 * paws),
        format!("{paws} long paws for {} variables", formula.num_vars),
    )
}

/// Solves each variable gadget on its own, without asking the vertices
/// that carry cross edges to be dominated, and checks the optimum is at
/// least 14.
fn isolated_gadget_bound(out: &ReductionOutput, budget: &Budget) -> Outcome {
    let Identity::SatisfiableIffEqual { formula, .. } = &out.meta.identity else {
        return Ok(Err("not a formula construction".into()));
    };
    let mut values = Vec::new();
    for x in 0..formula.num_vars {
        let xn = var_name(x);
        // variable gadgets are laid out contiguously, starting at T_x
        let start = out.labels[&format!("T_{xn}")];
        let ids: Vec<usize> = (start..start + super::CLAWFREE_VARIABLE_SIZE).collect();
        let gadget = out.graph.induced_subgraph(&ids);
        let mut must = VertexSet::full(ids.len());
        for q in formula.occurrences(x) {
            let qn = clause_name(q);
            for boundary in [format!("P_{{{xn},1}}^{qn}(2)"), format!("P_{{{xn},2}}^{qn}(1)")] {
                let v = out.labels[&boundary];
                must.remove(ids.binary_search(&v).expect("boundary vertex is in the gadget"));
            }
        }
        let opts = SolveOptions {
            budget: *budget,
            must_dominate: Some(must),
            all: false,
        };
        values.push(solve_with(&gadget, DominationKind::Semitotal, &opts)?.value);
    }
    verdict(
        values.iter().all(|&v| v >= 14),
        format!("relaxed gadget optima {values:?}"),
        format!("relaxed gadget optima {values:?}, expected at least 14"),
    )
}

/// Every minimum semitotal dominating set meets `{x_0, y}`.
fn x0_or_y(out: &ReductionOutput, budget: &Budget) -> Outcome {
    let hub = VertexSet::from_iter_with(out.graph.order(), [out.labels["x_0"], out.labels["y"]]);
    let sets = enumerate_min_sets_with(&out.graph, DominationKind::Semitotal, budget)?;
    let bad = sets.iter().find(|d| !d.intersects(&hub));
    verdict(
        bad.is_none(),
        format!("all {} minimum sets meet it", sets.len()),
        format!("{bad:?} misses x_0 and y"),
    )
}
