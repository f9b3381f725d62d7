use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

const MAX_CONNECT_ATTEMPTS: usize = 10_000;

fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        g.add_edge(u, v).expect("generator produced a bad edge");
    }
    g
}

/// `P_n`: vertices `0..n` joined in order.
pub fn path_graph(n: usize) -> Graph {
    from_pairs(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` for `n >= 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    from_pairs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete_graph(n: usize) -> Graph {
    from_pairs(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Graph {
    from_pairs(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Vertices of `b` are shifted up by `a.order()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.order();
    from_pairs(
        a.order() + b.order(),
        a.edge_pairs()
            .into_iter()
            .chain(b.edge_pairs().into_iter().map(|(u, v)| (u + shift, v + shift))),
    )
}

/// Triangle `0,1,2` with pendant leaves `3,4,5` on `0,1,2` respectively.
pub fn net_graph() -> Graph {
    from_pairs(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
}

/// Triangle `0,1,2` with the path `2-3-4` hanging off vertex 2.
pub fn long_paw() -> Graph {
    from_pairs(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
}

/// Erdős–Rényi `G(n, p)` drawn from `rng`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// A connected `G(n, p)` sample, deterministic in `seed`.
///
/// Samples are redrawn until connected; gives up with
/// [`Error::GenerationFailed`] after a fixed number of attempts.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::GenerationFailed("n must be at least 1".into()));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::GenerationFailed(format!("edge probability {p} not in (0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_CONNECT_ATTEMPTS {
        let g = random_graph(n, p, &mut rng);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed(format!(
        "no connected sample of G({n}, {p}) after {MAX_CONNECT_ATTEMPTS} attempts"
    )))
}
