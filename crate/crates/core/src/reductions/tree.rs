use super::{Builder, Identity, ReductionMeta, ReductionOutput, Target};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hangs a copy of the tree `T_v` off every vertex `v` of `g`.
///
/// `T_v` is the path `a_v b_v c_v d_v` with three leaves `y^v_1..3` on `b_v`
/// and three leaves `x^v_1..3` on `d_v`; `v` is joined to `a_v`. Vertex `j`
/// of `g` keeps id `j` and is named `v_j`. The output satisfies
/// `γt2 = γ(g) + 2|V(g)|`.
pub fn reduce_tree(g: &Graph) -> Result<ReductionOutput> {
    if g.order() < 2 || !g.is_connected() {
        return Err(Error::PreconditionViolated(
            "the source graph must be connected with at least two vertices".into(),
        ));
    }
    let n = g.order();
    let mut b = Builder::new();
    for v in 0..n {
        b.vertex(format!("v_{v}"));
    }
    for e in g.edges() {
        b.edge(e.u, e.v);
    }
    for v in 0..n {
        let [a, bb, c, d] = ["a", "b", "c", "d"].map(|r| b.vertex(format!("{r}_{v}")));
        b.edge(v, a);
        b.edge(a, bb);
        b.edge(bb, c);
        b.edge(c, d);
        for i in 1..=3 {
            let y = b.vertex(format!("y^{v}_{i}"));
            b.edge(bb, y);
        }
        for i in 1..=3 {
            let x = b.vertex(format!("x^{v}_{i}"));
            b.edge(d, x);
        }
    }
    Ok(b.finish(ReductionMeta {
        target: Target::Tree,
        expected_order: 11 * n,
        identity: Identity::DominationPlusTwiceOrder { source: g.clone() },
    }))
}
