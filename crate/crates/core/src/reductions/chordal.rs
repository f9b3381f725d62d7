use super::{Builder, Identity, ReductionMeta, ReductionOutput, Target};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Builds `G'` from a dominating set instance `(g, ell)`.
///
/// Layout: copies `V_0..V_ell` of `V(g)` (vertex `j` of copy `i` is `v^i_j`
/// with id `i·n + j`), then `x_0..x_ell`, then `y`. `V_0 ∪ {x_0}` is a
/// clique, `y x_0` is an edge, `x_i` sees all of `V_0 ∪ V_i`, each `V_i` with
/// `i >= 1` is independent and `v^i_j` sees the `V_0` copy of `N_g[j]`.
/// The output satisfies `γt2 = min(γ(g) + 1, ell + 1)`.
pub fn reduce_chordal(g: &Graph, ell: usize) -> Result<ReductionOutput> {
    if ell == 0 {
        return Err(Error::PreconditionViolated("ell must be at least 1".into()));
    }
    if g.order() == 0 {
        return Err(Error::PreconditionViolated("the source graph has no vertices".into()));
    }
    let n = g.order();
    let mut b = Builder::new();
    let copies: Vec<Vec<usize>> = (0..=ell)
        .map(|i| (0..n).map(|j| b.vertex(format!("v^{i}_{j}"))).collect())
        .collect();
    let xs: Vec<usize> = (0..=ell).map(|i| b.vertex(format!("x_{i}"))).collect();
    let y = b.vertex("y");

    let mut core = copies[0].clone();
    core.push(xs[0]);
    b.clique(&core);
    b.edge(y, xs[0]);
    for i in 1..=ell {
        for j in 0..n {
            b.edge(xs[i], copies[0][j]);
            b.edge(xs[i], copies[i][j]);
            for a in g.closed_neighbors(j).iter() {
                b.edge(copies[i][j], copies[0][a]);
            }
        }
    }
    Ok(b.finish(ReductionMeta {
        target: Target::Chordal,
        expected_order: n * (ell + 1) + ell + 2,
        identity: Identity::CappedDomination {
            source: g.clone(),
            ell,
        },
    }))
}
