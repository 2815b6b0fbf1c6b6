//! Strong cover algorithms and exact search oracles.

mod c4free;
mod exact;
mod greedy;
mod small_t;

pub use c4free::{find_k5star, grow_blowup, strong_cover_c4free_22};
pub use exact::{exact_max_strong_cover, theta, two_clique_cover_exact};
pub use greedy::{
    all_color_orders, check_residual_multiplicity, counting_chain, greedy_bound_holds,
    greedy_strong_cover, CountingChain, GreedyStep, GreedyTrace, ResidualCheck,
};
pub use small_t::{strong_cover_33, strong_cover_tt};

use crate::chordal::{is_chordal, maximal_cliques_chordal, ChordalCertificate};
use crate::coloring::MultiColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use fixedbitset::FixedBitSet;

/// Size caps for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactLimits {
    /// Largest `n` accepted by the exact cover oracles (never above 64).
    pub max_n: usize,
    /// Largest number of maximal cliques enumerated for one non-chordal
    /// color graph.
    pub max_cliques: usize,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits {
            max_n: 40,
            max_cliques: 200_000,
        }
    }
}

impl ExactLimits {
    pub fn with_max_n(max_n: usize) -> Self {
        ExactLimits {
            max_n,
            ..Default::default()
        }
    }
}

pub(crate) fn theorem_violation(col: &MultiColoring, what: impl Into<String>) -> Error {
    Error::TheoremViolation {
        what: what.into(),
        instance: serde_json::to_string(col).unwrap_or_default(),
    }
}

/// Per-color PEOs, or the first non-chordal color with its hole.
pub(crate) fn chordal_peos(col: &MultiColoring) -> Result<Vec<(Graph, Vec<usize>)>> {
    (1..=col.t())
        .map(|c| {
            let g = col.color_graph(c)?;
            match is_chordal(&g) {
                ChordalCertificate::Peo(p) => Ok((g, p)),
                ChordalCertificate::Hole(hole) => Err(Error::NotChordal { color: c, hole }),
            }
        })
        .collect()
}

/// All maximal cliques of `g`, sorted lexicographically. Uses the PEO when
/// `g` is chordal and pivoted Bron-Kerbosch otherwise.
pub fn maximal_cliques(g: &Graph, limits: &ExactLimits) -> Result<Vec<Vec<usize>>> {
    if let ChordalCertificate::Peo(peo) = is_chordal(g) {
        return maximal_cliques_chordal(g, &peo);
    }
    let n = g.n();
    let mut out = Vec::new();
    let mut r = Vec::new();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    bron_kerbosch(
        g,
        &mut r,
        p,
        FixedBitSet::with_capacity(n),
        &mut out,
        limits.max_cliques,
    )?;
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) -> Result<()> {
    if p.is_clear() {
        if x.is_clear() {
            if out.len() >= limit {
                return Err(Error::SizeLimit {
                    size: out.len() + 1,
                    limit,
                });
            }
            out.push(r.clone());
        }
        return Ok(());
    }
    // Tomita pivot: the vertex of P ∪ X with the most neighbors in P.
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| g.neighbors(u).intersection(&p).count())
        .expect("P nonempty");
    let mut branch = p.clone();
    branch.difference_with(g.neighbors(pivot));
    for v in branch.ones().collect::<Vec<_>>() {
        let mut np = p.clone();
        np.intersect_with(g.neighbors(v));
        let mut nx = x.clone();
        nx.intersect_with(g.neighbors(v));
        r.push(v);
        bron_kerbosch(g, r, np, nx, out, limit)?;
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
    Ok(())
}

pub(crate) fn to_mask(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

pub(crate) fn from_mask(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bron_kerbosch_on_non_chordal() {
        let lim = ExactLimits::default();
        assert_eq!(
            maximal_cliques(&Graph::cycle(5), &lim).unwrap(),
            vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)]);
        assert_eq!(
            maximal_cliques(&g, &lim).unwrap(),
            vec![vec![0, 1, 4], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        let tight = ExactLimits {
            max_cliques: 3,
            ..lim
        };
        assert!(matches!(
            maximal_cliques(&Graph::cycle(5), &tight),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn masks_round_trip() {
        assert_eq!(from_mask(to_mask(&[0, 3, 63])), vec![0, 3, 63]);
    }
}
