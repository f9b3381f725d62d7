use super::{clause_name, var_name, Builder, Identity, ReductionMeta, ReductionOutput, SatInstance, Target};

/// Builds `G_Φ` for a positive 1-in-3 formula.
///
/// Each variable `x` is a triangle `T_x F_x u_x`. Each clause `c` on
/// `x, y, z` is a `K5` on `v_c^x, v_c^y, v_c^z, u_c^T, u_c^F`, and all
/// clause vertices together form one clique. `u_c^T` sees `T_x, T_y, T_z`,
/// `u_c^F` sees `F_x, F_y, F_z`, and `v_c^s` sees `T_s` and `F_r` for the
/// other two variables `r` of the clause.
///
/// When every variable occurs in some clause, `γt2 >= |X|` with equality
/// exactly when the formula has a 1-in-3 assignment.
pub fn reduce_2p3free(phi: &SatInstance) -> ReductionOutput {
    let mut b = Builder::new();
    let mut truth = Vec::new();
    for x in 0..phi.num_vars {
        let xn = var_name(x);
        let [t, f, u] = ["T", "F", "u"].map(|r| b.vertex(format!("{r}_{xn}")));
        b.clique(&[t, f, u]);
        truth.push((t, f));
    }
    let mut all_clause = Vec::new();
    for (c, vars) in phi.clauses.iter().enumerate() {
        let cn = clause_name(c);
        let vs = vars.map(|x| b.vertex(format!("v_{cn}^{}", var_name(x))));
        let ut = b.vertex(format!("u_{cn}^T"));
        let uf = b.vertex(format!("u_{cn}^F"));
        for (i, &s) in vars.iter().enumerate() {
            b.edge(ut, truth[s].0);
            b.edge(uf, truth[s].1);
            b.edge(vs[i], truth[s].0);
            for &r in vars.iter().filter(|&&r| r != s) {
                b.edge(vs[i], truth[r].1);
            }
        }
        all_clause.extend(vs);
        all_clause.extend([ut, uf]);
    }
    b.clique(&all_clause);
    let (nx, nc) = (phi.num_vars, phi.clauses.len());
    b.finish(ReductionMeta {
        target: Target::TwoP3Free,
        expected_order: 3 * nx + 5 * nc,
        identity: Identity::SatisfiableIffEqual {
            formula: phi.clone(),
            value: nx,
        },
    })
}
