//! Brute-force oracles that share no code with the library's algorithms.
//! They read a coloring only through its edge color masks.

#![allow(dead_code)]

use std::collections::HashMap;
use strongcover::{IntervalFamily, MultiColoring, StrongCover};

/// `masks[u][v]`: colors on edge uv as a bit set (bit c-1 for color c).
pub fn mask_table(col: &MultiColoring) -> Vec<Vec<u64>> {
    let n = col.n();
    let mut m = vec![vec![0u64; n]; n];
    for (u, v) in col.pairs() {
        m[u][v] = col.mask(u, v);
        m[v][u] = m[u][v];
    }
    m
}

/// Colors shared by every edge inside the vertex set `s` (all colors when
/// `|s| < 2`).
pub fn common_colors(m: &[Vec<u64>], t: usize, s: u64) -> u64 {
    let vs: Vec<usize> = (0..m.len()).filter(|&v| s >> v & 1 == 1).collect();
    let mut acc = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            acc &= m[u][v];
        }
    }
    acc
}

/// All cliques of color `c` (including the empty set) as vertex masks, by
/// subset enumeration. Needs `n <= 20`.
pub fn all_cliques(col: &MultiColoring, c: usize) -> Vec<u64> {
    let n = col.n();
    assert!(n <= 20);
    let m = mask_table(col);
    (0u64..1 << n)
        .filter(|&s| common_colors(&m, col.t(), s) >> (c - 1) & 1 == 1)
        .collect()
}

/// Minimum number of nonempty cliques needed to cover each reachable
/// vertex set, over cliques of pairwise distinct colors.
fn reachable(col: &MultiColoring) -> HashMap<u64, usize> {
    let mut reach: HashMap<u64, usize> = HashMap::from([(0, 0)]);
    for c in 1..=col.t() {
        let cliques = all_cliques(col, c);
        let mut next = reach.clone();
        for (&m, &used) in &reach {
            for &q in &cliques {
                if q == 0 {
                    continue;
                }
                let e = next.entry(m | q).or_insert(usize::MAX);
                *e = (*e).min(used + 1);
            }
        }
        reach = next;
    }
    reach
}

pub fn naive_max_cover(col: &MultiColoring) -> usize {
    reachable(col)
        .keys()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn naive_theta(col: &MultiColoring) -> Option<usize> {
    let full = (1u64 << col.n()) - 1;
    reachable(col).get(&full).copied()
}

/// Independent validity check of a strong cover.
pub fn cover_is_valid(col: &MultiColoring, cov: &StrongCover) -> bool {
    let m = mask_table(col);
    let mut used = 0u64;
    for (c, vs) in &cov.assignments {
        if *c == 0 || *c > col.t() || used >> (c - 1) & 1 == 1 {
            return false;
        }
        used |= 1 << (c - 1);
        let s = vs.iter().fold(0u64, |a, &v| a | 1 << v);
        if s.count_ones() as usize != vs.len() || vs.iter().any(|&v| v >= col.n()) {
            return false;
        }
        if common_colors(&m, col.t(), s) >> (c - 1) & 1 == 0 {
            return false;
        }
    }
    true
}

pub fn covered(cov: &StrongCover) -> usize {
    cov.assignments
        .iter()
        .flat_map(|(_, vs)| vs.iter())
        .fold(0u64, |a, &v| a | 1 << v)
        .count_ones() as usize
}

/// Adjacency of color `c` as vertex masks.
pub fn color_adj(col: &MultiColoring, c: usize) -> Vec<u64> {
    let n = col.n();
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && col.has_color(u.min(v), u.max(v), c))
                .fold(0u64, |a, v| a | 1 << v)
        })
        .collect()
}

/// Some vertex set inducing a cycle of length at least 4, by scanning all
/// subsets. Needs `n <= 20`.
pub fn naive_hole(adj: &[u64]) -> Option<u64> {
    let n = adj.len();
    (0u64..1 << n)
        .filter(|s| s.count_ones() >= 4)
        .find(|&s| induces_cycle(adj, s))
}

fn induces_cycle(adj: &[u64], s: u64) -> bool {
    let vs: Vec<usize> = (0..adj.len()).filter(|&v| s >> v & 1 == 1).collect();
    if vs.iter().any(|&v| (adj[v] & s).count_ones() != 2) {
        return false;
    }
    // 2-regular: a cycle iff connected.
    let mut seen = 1u64 << vs[0];
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & s & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == s
}

/// Some induced 4-cycle, by scanning all 4-sets.
pub fn naive_c4(adj: &[u64]) -> Option<u64> {
    let n = adj.len();
    subsets(n, 4).into_iter().find(|&s| induces_cycle(adj, s))
}

pub fn naive_omega(adj: &[u64]) -> usize {
    let n = adj.len();
    (0u64..1 << n)
        .filter(|&s| {
            (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .all(|v| s & !(1 << v) & !adj[v] == 0)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// All k-subsets of `0..n` as masks.
pub fn subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for v in start..n {
            if n - v < k {
                break;
            }
            rec(v + 1, n, k - 1, acc | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

/// Every k vertices span a monochromatic clique.
pub fn naive_tk(col: &MultiColoring, k: usize) -> bool {
    let m = mask_table(col);
    subsets(col.n(), k)
        .into_iter()
        .all(|s| common_colors(&m, col.t(), s) != 0)
}

/// Every k members share a point on some track, testing each candidate
/// point (a left endpoint) directly.
pub fn naive_kwise(fam: &IntervalFamily, k: usize) -> bool {
    subsets(fam.n(), k).into_iter().all(|s| {
        let ms: Vec<usize> = (0..fam.n()).filter(|&v| s >> v & 1 == 1).collect();
        (0..fam.t).any(|track| {
            ms.iter().any(|&a| {
                let p = fam.members[a][track].lo;
                ms.iter()
                    .all(|&b| fam.members[b][track].lo <= p && p <= fam.members[b][track].hi)
            })
        })
    })
}

/// Coloring with `masks` listed per edge in lexicographic pair order.
pub fn coloring_from_masks(n: usize, t: usize, masks: &[u64]) -> MultiColoring {
    let mut col = MultiColoring::new(n, t).unwrap();
    let mut it = masks.iter();
    for u in 0..n {
        for v in u + 1..n {
            let m = *it.next().expect("one mask per edge");
            for c in 1..=t {
                if m >> (c - 1) & 1 == 1 {
                    col.add_color(u, v, c).unwrap();
                }
            }
        }
    }
    col
}

/// The six-vertex chordal (3,3)-colorings in which edges 01, 23 and 45 carry
/// only color 1, 2 and 3 respectively, so no two colors cover every edge.
/// Cross edges between the pairs carry the two pair colors and optionally
/// the third; every choice passing the triangle and chordality scans is
/// kept.
pub fn triple_forcing_33() -> Vec<MultiColoring> {
    let pair_of = |v: usize| v / 2;
    let mut cross: Vec<(usize, usize)> = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if pair_of(u) != pair_of(v) {
                cross.push((u, v));
            }
        }
    }
    let mut out = Vec::new();
    for bits in 0u32..1 << cross.len() {
        let mut col = MultiColoring::new(6, 3).unwrap();
        for p in 0..3 {
            col.add_color(2 * p, 2 * p + 1, p + 1).unwrap();
        }
        for (i, &(u, v)) in cross.iter().enumerate() {
            col.add_color(u, v, pair_of(u) + 1).unwrap();
            col.add_color(u, v, pair_of(v) + 1).unwrap();
            if bits >> i & 1 == 1 {
                let third = 3 - pair_of(u) - pair_of(v);
                col.add_color(u, v, third + 1).unwrap();
            }
        }
        if naive_tk(&col, 3) && (1..=3).all(|c| naive_hole(&color_adj(&col, c)).is_none()) {
            out.push(col);
        }
    }
    out
}
