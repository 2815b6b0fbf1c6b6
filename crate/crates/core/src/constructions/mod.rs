//! Explicit extremal colorings, clique substitution and seeded instance
//! generators.

mod random;

pub use random::{
    random_c4free_22, random_grown_tk, random_interval_family, random_onefourth_variant,
    random_subtree_family, Generated, IntervalParams, SubtreeParams,
};

use crate::coloring::{Interval, IntervalFamily, MultiColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Vertex of the complete bipartite graph `K_{m,m}` with sides `A` and `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    A(usize),
    B(usize),
}

/// Base coloring plus a replacement clique size for each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    pub base: MultiColoring,
    pub sizes: Vec<usize>,
}

/// `m / 2` edge-disjoint Hamilton cycles of `K_{m,m}`, `m` even. Cycle `r`
/// is the union of the shifted matchings `a_i b_{i+2r}` and `a_i b_{i+2r+1}`
/// (indices mod `m`), listed as `a_0, b_{2r+1}, a_1, b_{2r+2}, ...`.
pub fn hamilton_decomposition_bipartite(m: usize) -> Result<Vec<Vec<Side>>> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::invalid(format!(
            "m must be even and at least 2, got {m}"
        )));
    }
    Ok((0..m / 2)
        .map(|r| {
            (0..m)
                .flat_map(|i| [Side::A(i), Side::B((i + 2 * r + 1) % m)])
                .collect()
        })
        .collect())
}

/// `t - 1` edge-disjoint Hamilton paths of `[A, B]` with `|A| = 2t - 2` and
/// `|B| = 2t - 3`: each cycle of `K_{2t-2,2t-2}` with its last `B` vertex
/// deleted, read from the vertex after the deleted one.
pub fn hamilton_paths_for_construction(t: usize) -> Result<Vec<Vec<Side>>> {
    if t < 2 {
        return Err(Error::invalid(format!("t must be at least 2, got {t}")));
    }
    let m = 2 * t - 2;
    let removed = Side::B(m - 1);
    Ok(hamilton_decomposition_bipartite(m)?
        .into_iter()
        .map(|mut cycle| {
            let at = cycle
                .iter()
                .position(|&v| v == removed)
                .expect("cycle is spanning");
            cycle.rotate_left(at + 1);
            cycle.pop();
            cycle
        })
        .collect())
}

/// Pairwise intersecting t-intervals on `4t - 5` members for which at most
/// `3(t - 1)` can be pierced with one point per track.
///
/// Members `0..2t-2` form `A`, the rest form `B`. Track 1 puts `A` at `[0, 1]`
/// and `B` at `[2, 3]`; track `j >= 2` lays out the `(j - 1)`-th Hamilton
/// path of `[A, B]` as `[2p, 2p + 2]` for path position `p`.
pub fn construct_onefourth(t: usize) -> Result<IntervalFamily> {
    let paths = hamilton_paths_for_construction(t)?;
    let a_len = 2 * t - 2;
    let n = 4 * t - 5;
    let index = |v: Side| match v {
        Side::A(i) => i,
        Side::B(j) => a_len + j,
    };
    let mut members: Vec<Vec<Interval>> = (0..n)
        .map(|m| {
            vec![if m < a_len {
                Interval::new(0, 1)
            } else {
                Interval::new(2, 3)
            }]
        })
        .collect();
    for path in &paths {
        for (p, &v) in path.iter().enumerate() {
            let p = p as i64;
            members[index(v)].push(Interval::new(2 * p, 2 * p + 2));
        }
    }
    IntervalFamily::new(t, members)
}

/// The two-colored `K_5` whose color classes are the cycles `0,1,2,3,4` and
/// `0,2,4,1,3`.
pub fn construct_k5star() -> MultiColoring {
    let red = Graph::cycle(5);
    let blue = red.complement();
    MultiColoring::from_color_graphs(&[red, blue]).expect("valid")
}

/// Two-colored `K_4` where color 1 is the path `0-1-2-3` and color 2 is the
/// complementary path `2-0-3-1`.
pub fn construct_k4_two_paths() -> MultiColoring {
    let red = Graph::path(4);
    let blue = red.complement();
    MultiColoring::from_color_graphs(&[red, blue]).expect("valid")
}

/// Sizes of `t` near-equal consecutive parts of `0..n`, larger parts first.
fn part_sizes(n: usize, t: usize) -> Vec<usize> {
    (0..t).map(|i| n / t + usize::from(i < n % t)).collect()
}

/// Interval family whose coloring gives color `i` to every edge inside part
/// `S_i` and to every edge from `S_i` to a later part.
///
/// With scale `s = 2n`, track `i` places `S_i` at `[0, 2s]`, each member of a
/// later part at its own odd point in `(0, 2s)`, and each member of an
/// earlier part at its own point beyond `4s`.
pub fn construct_partition_coloring(n: usize, t: usize) -> Result<IntervalFamily> {
    if t == 0 || n < t {
        return Err(Error::invalid(format!(
            "need n >= t >= 1, got n = {n}, t = {t}"
        )));
    }
    let sizes = part_sizes(n, t);
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let scale = 2 * n as i64;
    let members = (0..n)
        .map(|m| {
            (0..t)
                .map(|track| {
                    let r = m as i64;
                    match part[m].cmp(&track) {
                        std::cmp::Ordering::Equal => Interval::new(0, 2 * scale),
                        std::cmp::Ordering::Greater => Interval::point(2 * r + 1),
                        std::cmp::Ordering::Less => Interval::point(4 * scale + 1 + r),
                    }
                })
                .collect()
        })
        .collect();
    IntervalFamily::new(t, members)
}

/// Three-coloring of `K_8` with every color class induced-C4-free and
/// triangle-free. Vertex `i` here is vertex `i + 1` of the original
/// labelling.
pub fn construct_k8_c4free_3col() -> MultiColoring {
    fn cycle_edges(order: &[usize]) -> Vec<(usize, usize)> {
        (0..order.len())
            .map(|i| (order[i] - 1, order[(i + 1) % order.len()] - 1))
            .collect()
    }
    let mut c1 = cycle_edges(&[1, 2, 3, 4, 5, 6, 7]);
    c1.extend([(3, 7), (6, 7)]);
    let mut c2 = cycle_edges(&[1, 8, 3, 5, 7, 4, 6]);
    c2.extend([(1, 4), (1, 5)]);
    let mut c3 = cycle_edges(&[1, 4, 2, 7, 3, 6, 8, 5]);
    c3.extend([(0, 2), (1, 7)]);
    let graphs: Vec<Graph> = [c1, c2, c3]
        .iter()
        .map(|e| Graph::from_edges(8, e))
        .collect();
    MultiColoring::from_color_graphs(&graphs).expect("valid")
}

/// Replaces vertex `v` by an all-colors clique on `size` vertices whose
/// outside edges copy `v`'s colors. The clique occupies `v..v + size`;
/// later vertices shift up by `size - 1`.
pub fn clique_substitute(col: &MultiColoring, v: usize, size: usize) -> Result<MultiColoring> {
    col.check_vertex(v)?;
    let mut sizes = vec![1; col.n()];
    sizes[v] = size;
    blow_up(&BlowupSpec {
        base: col.clone(),
        sizes,
    })
}

/// Simultaneous clique substitution: vertex `i` becomes a block of
/// `sizes[i]` consecutive vertices.
pub fn blow_up(spec: &BlowupSpec) -> Result<MultiColoring> {
    let base = &spec.base;
    if spec.sizes.len() != base.n() {
        return Err(Error::invalid(format!(
            "{} sizes given for {} vertices",
            spec.sizes.len(),
            base.n()
        )));
    }
    if spec.sizes.contains(&0) {
        return Err(Error::invalid("blow-up sizes must be positive"));
    }
    let origin = blowup_origin(&spec.sizes);
    let mut out = MultiColoring::new(origin.len(), base.t())?;
    let full = base.full_mask();
    for (x, y) in out.pairs().collect::<Vec<_>>() {
        let (u, v) = (origin[x], origin[y]);
        out.set_mask(x, y, if u == v { full } else { base.mask(u, v) });
    }
    Ok(out)
}

/// For each vertex of a blow-up with the given sizes, the base vertex it
/// replaces.
pub fn blowup_origin(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(v, &s)| std::iter::repeat_n(v, s))
        .collect()
}

/// Blow-up of an interval family: member `i` is repeated `sizes[i]` times.
/// Its coloring is the blow-up of the family's coloring.
pub fn blow_up_intervals(fam: &IntervalFamily, sizes: &[usize]) -> Result<IntervalFamily> {
    if sizes.len() != fam.n() || sizes.contains(&0) {
        return Err(Error::invalid("sizes must be positive, one per member"));
    }
    let members = blowup_origin(sizes)
        .into_iter()
        .map(|i| fam.members[i].clone())
        .collect();
    IntervalFamily::new(fam.t, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::max_clique_chordal;
    use crate::coloring::{coloring_from_intervals, is_tk_coloring};
    use std::collections::BTreeSet;

    fn edge_set(cycle: &[Side], closed: bool) -> BTreeSet<(usize, usize)> {
        let len = cycle.len();
        let steps = if closed { len } else { len - 1 };
        (0..steps)
            .map(|i| {
                let (x, y) = (cycle[i], cycle[(i + 1) % len]);
                match (x, y) {
                    (Side::A(a), Side::B(b)) | (Side::B(b), Side::A(a)) => (a, b),
                    _ => panic!("non-bipartite step {x:?} {y:?}"),
                }
            })
            .collect()
    }

    #[test]
    fn hamilton_cycles() {
        assert!(hamilton_decomposition_bipartite(3).is_err());
        for m in [2, 4, 6] {
            let cycles = hamilton_decomposition_bipartite(m).unwrap();
            assert_eq!(cycles.len(), m / 2);
            let mut all = BTreeSet::new();
            for c in &cycles {
                assert_eq!(c.len(), 2 * m);
                let distinct: BTreeSet<Side> = c.iter().copied().collect();
                assert_eq!(distinct.len(), 2 * m);
                let e = edge_set(c, true);
                assert_eq!(e.len(), 2 * m);
                assert!(all.is_disjoint(&e));
                all.extend(e);
            }
            assert_eq!(all.len(), m * m);
        }
    }

    #[test]
    fn hamilton_paths() {
        for (t, total) in [(2, 2), (3, 12), (5, 56)] {
            let paths = hamilton_paths_for_construction(t).unwrap();
            assert_eq!(paths.len(), t - 1);
            let mut all = BTreeSet::new();
            for p in &paths {
                assert_eq!(p.len(), 4 * t - 5);
                let e = edge_set(p, false);
                assert!(all.is_disjoint(&e));
                all.extend(e);
            }
            assert_eq!(all.len(), total);
        }
    }

    #[test]
    fn onefourth_small() {
        let f2 = construct_onefourth(2).unwrap();
        assert_eq!(f2.n(), 3);
        // Path A-B-A on track 2: the B member sits in the middle.
        assert_eq!(f2.members[2][1], Interval::new(2, 4));
        let col = coloring_from_intervals(&construct_onefourth(3).unwrap()).unwrap();
        assert_eq!(col.n(), 7);
        assert!(is_tk_coloring(&col, 2).unwrap());
        let g1 = col.color_graph(1).unwrap();
        let peo = crate::chordal::is_chordal(&g1).peo().unwrap().to_vec();
        assert_eq!(max_clique_chordal(&g1, &peo).unwrap(), vec![0, 1, 2, 3]);
        for c in 2..=3 {
            let g = col.color_graph(c).unwrap();
            assert_eq!(g.edge_count(), 6);
            assert!((0..7).all(|v| g.degree(v) <= 2));
        }
    }

    #[test]
    fn k5star_and_k4() {
        let k5 = construct_k5star();
        assert_eq!(k5.color_graph(1).unwrap(), Graph::cycle(5));
        assert!(k5.pairs().all(|(u, v)| k5.multiplicity(u, v) == 1));
        let k4 = construct_k4_two_paths();
        assert_eq!(
            k4.color_graph(2).unwrap().edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 3), (1, 3)]
        );
    }

    #[test]
    fn partition_coloring_rule() {
        for (n, t) in [(3, 3), (6, 3), (7, 3), (9, 3), (5, 1), (10, 4)] {
            let col =
                coloring_from_intervals(&construct_partition_coloring(n, t).unwrap()).unwrap();
            let sizes = part_sizes(n, t);
            let part = blowup_origin(&sizes);
            for (u, v) in col.pairs() {
                assert_eq!(
                    col.colors(u, v),
                    vec![part[u].min(part[v]) + 1],
                    "n={n} t={t} {u}-{v}"
                );
            }
        }
        assert!(construct_partition_coloring(2, 3).is_err());
    }

    #[test]
    fn k8_edges() {
        let col = construct_k8_c4free_3col();
        assert!(col.pairs().all(|(u, v)| col.multiplicity(u, v) == 1));
        let counts: Vec<usize> = col.color_graphs().iter().map(Graph::edge_count).collect();
        assert_eq!(counts, vec![9, 9, 10]);
    }

    #[test]
    fn substitution() {
        let k5 = construct_k5star();
        assert_eq!(clique_substitute(&k5, 2, 1).unwrap(), k5);
        let s = clique_substitute(&k5, 0, 2).unwrap();
        assert_eq!(s.n(), 6);
        assert_eq!(s.colors(0, 1), vec![1, 2]);
        assert_eq!(s.colors(0, 2), vec![1]);
        assert_eq!(s.colors(1, 3), vec![2]);
        assert!(clique_substitute(&k5, 5, 2).is_err());
        let spec = BlowupSpec {
            base: k5.clone(),
            sizes: vec![1, 0, 1, 1, 1],
        };
        assert!(blow_up(&spec).is_err());
    }

    #[test]
    fn blow_up_matches_iterated_substitution() {
        let base = construct_k4_two_paths();
        let sizes = vec![2, 1, 3, 2];
        let direct = blow_up(&BlowupSpec {
            base: base.clone(),
            sizes: sizes.clone(),
        })
        .unwrap();
        let mut iter = base;
        for v in (0..sizes.len()).rev() {
            iter = clique_substitute(&iter, v, sizes[v]).unwrap();
        }
        assert_eq!(direct, iter);
    }

    #[test]
    fn interval_blow_up_matches_coloring_blow_up() {
        let fam = construct_onefourth(3).unwrap();
        let sizes = vec![1, 2, 1, 1, 3, 1, 2];
        let a = coloring_from_intervals(&blow_up_intervals(&fam, &sizes).unwrap()).unwrap();
        let b = blow_up(&BlowupSpec {
            base: coloring_from_intervals(&fam).unwrap(),
            sizes,
        })
        .unwrap();
        assert_eq!(a, b);
    }
}
