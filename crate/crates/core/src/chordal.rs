//! Chordal graph machinery: maximum cardinality search, perfect elimination
//! orderings with hole certificates, cliques, clique trees and cut-sets,
//! induced C4 detection and the edge-count bound for chordal graphs.

use crate::error::{Error, Result};
use crate::graph::{vertex_set, Graph};
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

/// Either a perfect elimination ordering or a chordless cycle of length at
/// least four.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChordalCertificate {
    Peo(Vec<usize>),
    Hole(Vec<usize>),
}

impl ChordalCertificate {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalCertificate::Peo(_))
    }

    pub fn peo(&self) -> Option<&[usize]> {
        match self {
            ChordalCertificate::Peo(p) => Some(p),
            ChordalCertificate::Hole(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCutsetDecomposition {
    pub a: Vec<usize>,
    pub q: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cutset {
    IsClique,
    Decomposition(CliqueCutsetDecomposition),
}

/// Maximal cliques linked into a forest with the running intersection
/// property. `parent[i]` indexes into `cliques`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub cliques: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
}

impl CliqueTree {
    /// Tree edges `(child, parent, separator)`.
    pub fn edges(&self) -> Vec<(usize, usize, Vec<usize>)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                p.map(|p| {
                    let sep = self.cliques[i]
                        .iter()
                        .copied()
                        .filter(|v| self.cliques[p].binary_search(v).is_ok())
                        .collect();
                    (i, p, sep)
                })
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBoundReport {
    pub n: usize,
    pub edges: usize,
    pub omega: usize,
    /// `(omega - 1) n - omega (omega - 1) / 2`
    pub tight_bound: i64,
    /// `omega (n - 1)`
    pub loose_bound: i64,
    pub holds: bool,
}

/// Maximum cardinality search visiting order. Ties go to the smallest
/// vertex. For chordal graphs the reverse is a perfect elimination ordering.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v).ones() {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

fn positions(peo: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; peo.len()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Neighbors of `v` after it in the ordering, sorted by vertex index.
fn later_neighbors(g: &Graph, pos: &[usize], v: usize) -> Vec<usize> {
    g.neighbors(v).ones().filter(|&w| pos[w] > pos[v]).collect()
}

/// First vertex whose later neighbors do not form a clique, as `(v, a, b)`
/// with `a`, `b` non-adjacent later neighbors of `v`.
fn peo_violation(g: &Graph, peo: &[usize]) -> Option<(usize, usize, usize)> {
    let pos = positions(peo);
    for &v in peo {
        let later = later_neighbors(g, &pos, v);
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if let Some(&u) = later
            .iter()
            .find(|&&u| u != parent && !g.has_edge(parent, u))
        {
            return Some((v, parent, u));
        }
    }
    None
}

fn check_peo(g: &Graph, peo: &[usize]) -> Result<()> {
    let n = g.n();
    let mut seen = vec![false; n];
    if peo.len() != n
        || peo
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(Error::invalid(
            "ordering is not a permutation of the vertices",
        ));
    }
    if peo_violation(g, peo).is_some() {
        return Err(Error::invalid(
            "ordering is not a perfect elimination ordering",
        ));
    }
    Ok(())
}

pub fn is_valid_peo(g: &Graph, peo: &[usize]) -> bool {
    check_peo(g, peo).is_ok()
}

/// Closes `v - a ... b - v` into a chordless cycle through a shortest `a`-`b`
/// path that avoids the rest of `v`'s closed neighborhood.
fn hole_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let mut blocked = g.neighbors(v).clone();
    blocked.insert(v);
    blocked.set(a, false);
    blocked.set(b, false);
    let path = g.shortest_path_avoiding(a, b, &blocked)?;
    let mut cycle = Vec::with_capacity(path.len() + 1);
    cycle.push(v);
    cycle.extend(path);
    Some(normalize_cycle(cycle))
}

/// Rotates a cycle to start at its smallest vertex, walking toward the
/// smaller of that vertex's two cycle neighbors.
fn normalize_cycle(mut c: Vec<usize>) -> Vec<usize> {
    let (i, _) = c
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .expect("nonempty");
    c.rotate_left(i);
    if c.len() > 2 && c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

/// Perfect elimination ordering (reverse MCS) or an induced hole.
pub fn is_chordal(g: &Graph) -> ChordalCertificate {
    let mut peo = mcs_order(g);
    peo.reverse();
    let Some((v, a, b)) = peo_violation(g, &peo) else {
        return ChordalCertificate::Peo(peo);
    };
    if let Some(hole) = hole_through(g, v, a, b) {
        return ChordalCertificate::Hole(hole);
    }
    // Every hole passes through some vertex and its two cycle neighbors.
    for v in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbors(v).ones().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(hole) = hole_through(g, v, a, b) {
                        return ChordalCertificate::Hole(hole);
                    }
                }
            }
        }
    }
    unreachable!("MCS ordering failed on a graph without holes")
}

/// Candidate cliques `{v} ∪ later(v)` in ordering order, each sorted.
fn peo_cliques(g: &Graph, peo: &[usize]) -> Vec<Vec<usize>> {
    let pos = positions(peo);
    peo.iter()
        .map(|&v| {
            let mut c = later_neighbors(g, &pos, v);
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect()
}

/// A maximum clique; ties go to the lexicographically smallest sorted set.
pub fn max_clique_chordal(g: &Graph, peo: &[usize]) -> Result<Vec<usize>> {
    check_peo(g, peo)?;
    Ok(peo_cliques(g, peo)
        .into_iter()
        .min_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)))
        .unwrap_or_default())
}

/// Indices into `cands` of the inclusion-maximal sets, keeping the first of
/// any duplicates.
fn maximal_indices(n: usize, cands: &[Vec<usize>]) -> Vec<usize> {
    let sets: Vec<FixedBitSet> = cands.iter().map(|c| vertex_set(n, c)).collect();
    (0..cands.len())
        .filter(|&i| {
            !(0..cands.len()).any(|j| {
                j != i && sets[i].is_subset(&sets[j]) && (cands[j].len() > cands[i].len() || j < i)
            })
        })
        .collect()
}

/// All inclusion-maximal cliques, sorted lexicographically.
pub fn maximal_cliques_chordal(g: &Graph, peo: &[usize]) -> Result<Vec<Vec<usize>>> {
    check_peo(g, peo)?;
    let cands = peo_cliques(g, peo);
    let mut out: Vec<Vec<usize>> = maximal_indices(g.n(), &cands)
        .into_iter()
        .map(|i| cands[i].clone())
        .collect();
    out.sort();
    Ok(out)
}

/// Greedy proper coloring along the reverse ordering. Uses exactly
/// `omega(g)` classes; classes are sorted and ordered by class index.
pub fn greedy_color_chordal(g: &Graph, peo: &[usize]) -> Result<Vec<Vec<usize>>> {
    check_peo(g, peo)?;
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in peo.iter().rev() {
        let used: Vec<usize> = g
            .neighbors(v)
            .ones()
            .filter(|&w| color[w] != usize::MAX)
            .map(|w| color[w])
            .collect();
        let c = (0..).find(|c| !used.contains(c)).expect("unbounded");
        color[v] = c;
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(v);
    }
    for class in &mut classes {
        class.sort_unstable();
    }
    Ok(classes)
}

/// Maximal cliques in ordering order of their generating vertex, joined
/// by a maximum-weight spanning forest of the clique intersection graph
/// (weight = size of the intersection, zero-weight pairs never joined).
/// Each component is rooted at its last clique; ties go to the smallest
/// clique index.
pub fn clique_tree(g: &Graph, peo: &[usize]) -> Result<CliqueTree> {
    check_peo(g, peo)?;
    let n = g.n();
    let cands = peo_cliques(g, peo);
    let cliques: Vec<Vec<usize>> = maximal_indices(n, &cands)
        .into_iter()
        .map(|i| cands[i].clone())
        .collect();
    let sets: Vec<FixedBitSet> = cliques.iter().map(|c| vertex_set(n, c)).collect();
    let m = cliques.len();
    let mut parent = vec![None; m];
    let mut in_tree = vec![false; m];
    // best[j] = (weight, tree clique) of the heaviest link from the tree to j.
    let mut best: Vec<(usize, usize)> = vec![(0, usize::MAX); m];
    for root in (0..m).rev() {
        if in_tree[root] {
            continue;
        }
        let mut next = Some(root);
        while let Some(i) = next {
            in_tree[i] = true;
            if i != root {
                parent[i] = Some(best[i].1);
            }
            for j in 0..m {
                if !in_tree[j] {
                    let w = sets[i].intersection(&sets[j]).count();
                    if w > best[j].0 {
                        best[j] = (w, i);
                    }
                }
            }
            next = (0..m)
                .filter(|&j| !in_tree[j] && best[j].0 > 0)
                .min_by_key(|&j| (std::cmp::Reverse(best[j].0), j));
        }
    }
    Ok(CliqueTree { cliques, parent })
}

/// Splits a connected non-complete chordal graph by a clique separator
/// taken from the first clique tree edge. `a` is the component of `g - q`
/// containing the smallest vertex outside `q`; `b` is everything else.
pub fn clique_cutset(g: &Graph, peo: &[usize]) -> Result<Cutset> {
    check_peo(g, peo)?;
    if !g.is_connected() {
        return Err(Error::invalid("clique_cutset needs a connected graph"));
    }
    if g.is_complete() {
        return Ok(Cutset::IsClique);
    }
    let n = g.n();
    let tree = clique_tree(g, peo)?;
    for (_, _, q) in tree.edges() {
        let comps = g.components_without(&vertex_set(n, &q));
        if comps.len() < 2 {
            continue;
        }
        let a = comps[0].clone();
        let mut b: Vec<usize> = comps[1..].concat();
        b.sort_unstable();
        let dec = CliqueCutsetDecomposition { a, q, b };
        debug_assert!(dec
            .a
            .iter()
            .all(|&x| dec.b.iter().all(|&y| !g.has_edge(x, y))));
        return Ok(Cutset::Decomposition(dec));
    }
    unreachable!("clique tree of a connected non-complete chordal graph has a separating edge")
}

/// Some 4-cycle `[a, b, c, d]` that is an induced subgraph, if any.
pub fn find_induced_c4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for a in 0..n {
        for c in a + 1..n {
            if g.has_edge(a, c) {
                continue;
            }
            let mut common = g.neighbors(a).clone();
            common.intersect_with(g.neighbors(c));
            let common: Vec<usize> = common.ones().collect();
            for (i, &b) in common.iter().enumerate() {
                if let Some(&d) = common[i + 1..].iter().find(|&&d| !g.has_edge(b, d)) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

pub fn induced_c4_free(g: &Graph) -> bool {
    find_induced_c4(g).is_none()
}

/// Checks `|E| <= (w - 1) n - w (w - 1) / 2 <= w (n - 1)` for a chordal
/// graph with clique number `w`.
pub fn chordal_edge_bound_check(g: &Graph) -> Result<EdgeBoundReport> {
    let peo = match is_chordal(g) {
        ChordalCertificate::Peo(p) => p,
        ChordalCertificate::Hole(hole) => return Err(Error::NotChordalGraph { hole }),
    };
    let omega = max_clique_chordal(g, &peo)?.len();
    let n = g.n() as i64;
    let w = omega as i64;
    let edges = g.edge_count();
    let tight_bound = (w - 1) * n - w * (w - 1) / 2;
    let loose_bound = w * (n - 1);
    Ok(EdgeBoundReport {
        n: g.n(),
        edges,
        omega,
        tight_bound,
        loose_bound,
        holds: edges as i64 <= tight_bound && edges as i64 <= loose_bound,
    })
}

/// True iff for every two classes the edges of `g` between them form a
/// forest.
pub fn class_pairs_acyclic(g: &Graph, classes: &[Vec<usize>]) -> bool {
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let mut parent: Vec<usize> = (0..g.n()).collect();
    for (i, xs) in classes.iter().enumerate() {
        for zs in &classes[i + 1..] {
            for &v in xs.iter().chain(zs) {
                parent[v] = v;
            }
            for &x in xs {
                for &z in zs {
                    if g.has_edge(x, z) {
                        let (rx, rz) = (find(&mut parent, x), find(&mut parent, z));
                        if rx == rz {
                            return false;
                        }
                        parent[rx] = rz;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn peo_of(g: &Graph) -> Vec<usize> {
        is_chordal(g).peo().expect("chordal").to_vec()
    }

    fn two_triangles() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn mcs_tie_breaking() {
        assert_eq!(mcs_order(&Graph::new(3)), vec![0, 1, 2]);
        assert_eq!(mcs_order(&Graph::complete(3)), vec![0, 1, 2]);
        assert_eq!(mcs_order(&Graph::path(3)), vec![0, 1, 2]);
    }

    #[test]
    fn holes() {
        assert_eq!(
            is_chordal(&Graph::cycle(4)),
            ChordalCertificate::Hole(vec![0, 1, 2, 3])
        );
        match is_chordal(&Graph::cycle(5)) {
            ChordalCertificate::Hole(h) => assert_eq!(h.len(), 5),
            other => panic!("{other:?}"),
        }
        assert!(is_chordal(&two_triangles()).is_chordal());
    }

    #[test]
    fn cliques() {
        let k4 = Graph::complete(4);
        assert_eq!(
            max_clique_chordal(&k4, &peo_of(&k4)).unwrap(),
            vec![0, 1, 2, 3]
        );
        let p4 = Graph::path(4);
        assert_eq!(max_clique_chordal(&p4, &peo_of(&p4)).unwrap(), vec![0, 1]);
        let k3 = Graph::complete(3);
        assert_eq!(
            maximal_cliques_chordal(&k3, &peo_of(&k3)).unwrap(),
            vec![vec![0, 1, 2]]
        );
        let p3 = Graph::path(3);
        assert_eq!(
            maximal_cliques_chordal(&p3, &peo_of(&p3)).unwrap(),
            vec![vec![0, 1], vec![1, 2]]
        );
        assert!(max_clique_chordal(&p3, &[1, 0, 2]).is_err());
        assert!(max_clique_chordal(&p3, &[0, 1]).is_err());
    }

    #[test]
    fn greedy_coloring() {
        let e = Graph::new(4);
        assert_eq!(greedy_color_chordal(&e, &peo_of(&e)).unwrap().len(), 1);
        let k3 = Graph::complete(3);
        assert_eq!(greedy_color_chordal(&k3, &peo_of(&k3)).unwrap().len(), 3);
        let p4 = Graph::path(4);
        assert_eq!(
            greedy_color_chordal(&p4, &peo_of(&p4)).unwrap(),
            vec![vec![0, 2], vec![1, 3]]
        );
    }

    #[test]
    fn cutsets() {
        let k5 = Graph::complete(5);
        assert_eq!(clique_cutset(&k5, &peo_of(&k5)).unwrap(), Cutset::IsClique);
        let p3 = Graph::path(3);
        assert_eq!(
            clique_cutset(&p3, &peo_of(&p3)).unwrap(),
            Cutset::Decomposition(CliqueCutsetDecomposition {
                a: vec![0],
                q: vec![1],
                b: vec![2]
            })
        );
        let g = two_triangles();
        match clique_cutset(&g, &peo_of(&g)).unwrap() {
            Cutset::Decomposition(d) => assert_eq!(d.q, vec![1, 2]),
            other => panic!("{other:?}"),
        }
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(clique_cutset(&split, &peo_of(&split)).is_err());
    }

    #[test]
    fn c4_detection() {
        assert_eq!(find_induced_c4(&Graph::cycle(4)), Some([0, 1, 2, 3]));
        assert!(induced_c4_free(&Graph::cycle(5)));
        assert!(induced_c4_free(&Graph::complete(6)));
    }

    #[test]
    fn edge_bound() {
        let r = chordal_edge_bound_check(&Graph::complete(4)).unwrap();
        assert_eq!((r.edges, r.tight_bound), (6, 6));
        assert!(r.holds);
        let r = chordal_edge_bound_check(&Graph::new(7)).unwrap();
        assert_eq!((r.edges, r.tight_bound, r.omega), (0, 0, 1));
        assert!(r.holds);
        assert!(matches!(
            chordal_edge_bound_check(&Graph::cycle(4)),
            Err(Error::NotChordalGraph { .. })
        ));
    }

    #[test]
    fn bipartite_between_classes_is_forest() {
        let g = two_triangles();
        let classes = greedy_color_chordal(&g, &peo_of(&g)).unwrap();
        assert!(class_pairs_acyclic(&g, &classes));
        let c4 = Graph::cycle(4);
        assert!(!class_pairs_acyclic(&c4, &[vec![0, 2], vec![1, 3]]));
    }
}
