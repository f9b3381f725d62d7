use std::collections::HashMap;

use super::{clause_name, var_name, Builder, Identity, ReductionMeta, ReductionOutput, SatInstance, Target};
use crate::error::{Error, Result};

/// Vertices per variable gadget: seven long paws and six connectors.
pub const CLAWFREE_VARIABLE_SIZE: usize = 41;
/// Vertices per clause gadget.
pub const CLAWFREE_CLAUSE_SIZE: usize = 10;

/// Builds the claw-free graph for an exactly 3-bounded positive formula.
///
/// Variable `x` in clauses `q` gets the long paw `T_x F_x u_x v_x w_x`, and
/// per occurrence the connectors `a_x^q`, `b_x^q` with long paws
/// `P_{x,1}^q`, `P_{x,2}^q` hung off `P_{x,1}^q(1)` and `P_{x,2}^q(2)`. The
/// `a` connectors form a clique joined to `F_x`, the `b` connectors a clique
/// joined to `T_x`. Clause `c` gets the triangle of `w_c^{pq}`, the triangle
/// of `t_c^p` where `t_c^p` sees the two `w` containing `p`, `u_c` on all
/// three `t`, and a separate triangle of `f_c^{pq}`. Across gadgets,
/// `P_{p,1}^c(2)` sees `f_c^{pq}`, and `P_{p,2}^c(1)` sees `t_c^p` and
/// `w_c^{pq}`, for the pairs `pq` containing `p`.
///
/// `γt2 >= 14|X| + |C|`, with equality exactly when the formula has a
/// 1-in-3 assignment.
pub fn reduce_clawfree(phi: &SatInstance) -> Result<ReductionOutput> {
    if !phi.is_exactly_3_bounded() {
        return Err(Error::InvalidInstance(
            "every variable must occur in exactly three clauses".into(),
        ));
    }
    let mut b = Builder::new();
    let mut paw1: HashMap<(usize, usize), [usize; 5]> = HashMap::new();
    let mut paw2: HashMap<(usize, usize), [usize; 5]> = HashMap::new();
    for x in 0..phi.num_vars {
        let xn = var_name(x);
        let [t, f, u, v, w] = ["T", "F", "u", "v", "w"].map(|r| b.vertex(format!("{r}_{xn}")));
        b.clique(&[t, f, u]);
        b.edge(u, v);
        b.edge(v, w);
        let mut a_side = Vec::new();
        let mut b_side = Vec::new();
        for q in phi.occurrences(x) {
            let qn = clause_name(q);
            let a = b.vertex(format!("a_{xn}^{qn}"));
            let p1 = b.long_paw(&format!("P_{{{xn},1}}^{qn}"));
            b.edge(a, p1[0]);
            let bq = b.vertex(format!("b_{xn}^{qn}"));
            let p2 = b.long_paw(&format!("P_{{{xn},2}}^{qn}"));
            b.edge(bq, p2[1]);
            a_side.push(a);
            b_side.push(bq);
            paw1.insert((x, q), p1);
            paw2.insert((x, q), p2);
        }
        b.clique(&a_side);
        b.clique(&b_side);
        for &a in &a_side {
            b.edge(f, a);
        }
        for &bq in &b_side {
            b.edge(t, bq);
        }
    }
    for (c, vars) in phi.clauses.iter().enumerate() {
        let cn = clause_name(c);
        let pairs = [(0, 1), (0, 2), (1, 2)];
        let pair_name = |i: usize, j: usize| format!("{}{}", var_name(vars[i]), var_name(vars[j]));
        let ws = pairs.map(|(i, j)| b.vertex(format!("w_{cn}^{{{}}}", pair_name(i, j))));
        let ts = [0, 1, 2].map(|i| b.vertex(format!("t_{cn}^{}", var_name(vars[i]))));
        let uc = b.vertex(format!("u_{cn}"));
        let fs = pairs.map(|(i, j)| b.vertex(format!("f_{cn}^{{{}}}", pair_name(i, j))));
        b.clique(&ws);
        b.clique(&ts);
        b.clique(&fs);
        for i in 0..3 {
            b.edge(uc, ts[i]);
            for (k, &(p, q)) in pairs.iter().enumerate() {
                if p == i || q == i {
                    b.edge(ts[i], ws[k]);
                }
            }
        }
        for (i, &x) in vars.iter().enumerate() {
            let p1 = paw1[&(x, c)];
            let p2 = paw2[&(x, c)];
            b.edge(p2[0], ts[i]);
            for (k, &(p, q)) in pairs.iter().enumerate() {
                if p == i || q == i {
                    b.edge(p1[1], fs[k]);
                    b.edge(p2[0], ws[k]);
                }
            }
        }
    }
    let (nx, nc) = (phi.num_vars, phi.clauses.len());
    Ok(b.finish(ReductionMeta {
        target: Target::Clawfree,
        expected_order: CLAWFREE_VARIABLE_SIZE * nx + CLAWFREE_CLAUSE_SIZE * nc,
        identity: Identity::SatisfiableIffEqual {
            formula: phi.clone(),
            value: 14 * nx + nc,
        },
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple() -> SatInstance {
        SatInstance::new(3, vec![[0, 1, 2]; 3]).unwrap()
    }

    #[test]
    fn smallest_instance_size() {
        let out = reduce_clawfree(&triple()).unwrap();
        assert_eq!(out.graph.order(), 153);
        assert_eq!(out.labels.len(), 153);
        assert_eq!(out.meta.expected_order, 153);
    }

    #[test]
    fn unbounded_formulas_are_rejected() {
        let phi = SatInstance::new(3, vec![[0, 1, 2]]).unwrap();
        assert!(matches!(reduce_clawfree(&phi), Err(Error::InvalidInstance(_))));
    }

    #[test]
    fn named_adjacencies() {
        let out = reduce_clawfree(&triple()).unwrap();
        let e = |a: &str, b: &str| out.graph.has_edge(out.id(a).unwrap(), out.id(b).unwrap());
        assert!(e("F_x1", "a_x1^c2"));
        assert!(e("T_x1", "b_x1^c3"));
        assert!(!e("T_x1", "a_x1^c3"));
        assert!(e("a_x1^c1", "P_{x1,1}^c1(1)"));
        assert!(e("b_x1^c1", "P_{x1,2}^c1(2)"));
        assert!(e("t_c1^x2", "w_c1^{x1x2}"));
        assert!(!e("t_c1^x3", "w_c1^{x1x2}"));
        assert!(e("P_{x3,1}^c2(2)", "f_c2^{x2x3}"));
        assert!(!e("P_{x3,1}^c2(2)", "f_c2^{x1x2}"));
        assert!(e("P_{x3,2}^c2(1)", "t_c2^x3"));
        assert!(e("P_{x3,2}^c2(1)", "w_c2^{x1x3}"));
    }
}
