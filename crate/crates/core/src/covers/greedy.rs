use super::chordal_peos;
use crate::chordal::max_clique_chordal;
use crate::coloring::{MultiColoring, StrongCover};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyStep {
    pub color: usize,
    pub clique: Vec<usize>,
    /// Vertices left before this step.
    #[serde(skip)]
    pub remaining: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
    pub uncovered: Vec<usize>,
}

impl GreedyTrace {
    pub fn covered(&self) -> usize {
        self.steps.iter().map(|s| s.clique.len()).sum()
    }
}

/// For each color in `order`, takes a maximum clique of that color among
/// the vertices still uncovered and removes it.
///
/// Every color graph must be chordal. Ties between maximum cliques go to
/// the lexicographically smallest.
pub fn greedy_strong_cover(
    col: &MultiColoring,
    order: &[usize],
) -> Result<(StrongCover, GreedyTrace)> {
    let t = col.t();
    let mut seen = vec![false; t + 1];
    if order.len() != t
        || order
            .iter()
            .any(|&c| c == 0 || c > t || std::mem::replace(&mut seen[c], true))
    {
        return Err(Error::invalid(format!(
            "color order {order:?} is not a permutation of 1..={t}"
        )));
    }
    let peos = chordal_peos(col)?;
    let mut remaining: Vec<usize> = (0..col.n()).collect();
    let mut cover = StrongCover::new();
    let mut steps = Vec::with_capacity(t);
    for &c in order {
        let (g, peo) = &peos[c - 1];
        let before = remaining.len();
        let clique = if remaining.is_empty() {
            Vec::new()
        } else {
            let mut local = vec![usize::MAX; col.n()];
            for (i, &v) in remaining.iter().enumerate() {
                local[v] = i;
            }
            let sub = g.induced(&remaining);
            let sub_peo: Vec<usize> = peo
                .iter()
                .filter(|&&v| local[v] != usize::MAX)
                .map(|&v| local[v])
                .collect();
            max_clique_chordal(&sub, &sub_peo)?
                .into_iter()
                .map(|i| remaining[i])
                .collect::<Vec<_>>()
        };
        remaining.retain(|v| clique.binary_search(v).is_err());
        if !clique.is_empty() {
            cover.push(c, clique.clone());
        }
        steps.push(GreedyStep {
            color: c,
            clique,
            remaining: before,
        });
    }
    Ok((
        cover,
        GreedyTrace {
            steps,
            uncovered: remaining,
        },
    ))
}

/// `covered >= (k - 1) n / (k + 1)`, compared exactly.
pub fn greedy_bound_holds(covered: usize, n: usize, k: usize) -> bool {
    covered * (k + 1) >= (k - 1) * n
}

/// All permutations of `1..=t` in lexicographic order.
pub fn all_color_orders(t: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for c in 0..used.len() {
            if !used[c] {
                used[c] = true;
                prefix.push(c + 1);
                rec(prefix, used, out);
                prefix.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(t), &mut vec![false; t], &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualCheck {
    pub holds: bool,
    /// First edge inside the set with fewer than `k - 1` colors.
    pub witness: Option<(usize, usize)>,
}

/// Whether every edge inside `vertices` carries at least `k - 1` colors.
pub fn check_residual_multiplicity(
    col: &MultiColoring,
    vertices: &[usize],
    k: usize,
) -> Result<ResidualCheck> {
    for &v in vertices {
        col.check_vertex(v)?;
    }
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let need = k.saturating_sub(1);
    for (i, &u) in sorted.iter().enumerate() {
        for &v in &sorted[i + 1..] {
            if col.multiplicity(u, v) < need {
                return Ok(ResidualCheck {
                    holds: false,
                    witness: Some((u, v)),
                });
            }
        }
    }
    Ok(ResidualCheck {
        holds: true,
        witness: None,
    })
}

/// The two estimates of the multiplicity sum `M` over the uncovered set `T`
/// of a greedy run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingChain {
    pub covered: usize,
    pub uncovered: usize,
    /// Total number of colors on edges inside `T`.
    pub multiplicity_sum: i64,
    /// `(k - 1) |T| (|T| - 1) / 2`
    pub lower: i64,
    /// `covered (|T| - 1)`, taken as 0 when `T` is empty.
    pub upper: i64,
    pub holds: bool,
}

pub fn counting_chain(col: &MultiColoring, trace: &GreedyTrace, k: usize) -> Result<CountingChain> {
    if k < 2 {
        return Err(Error::invalid("k must be at least 2"));
    }
    let t_set = &trace.uncovered;
    let size = t_set.len() as i64;
    let covered = trace.covered();
    let m: i64 = t_set
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| t_set[i + 1..].iter().map(move |&v| (u, v)))
        .map(|(u, v)| col.multiplicity(u, v) as i64)
        .sum();
    let lower = (k as i64 - 1) * size * (size - 1) / 2;
    let upper = covered as i64 * (size - 1).max(0);
    Ok(CountingChain {
        covered,
        uncovered: t_set.len(),
        multiplicity_sum: m,
        lower,
        upper,
        holds: lower <= m && m <= upper,
    })
}
