//! Multicolored complete graphs, their interval and subtree representations,
//! strong covers, and the defining property checks.
//!
//! Colors are numbered `1..=t` and vertices `0..n`. Each edge carries a
//! (possibly empty) subset of the colors, stored as a bit mask, so `t` is
//! limited to [`MAX_COLORS`].

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

pub const MAX_COLORS: usize = 64;

/// Edge multicoloring of `K_n` with colors `1..=t`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ColoringWire", into = "ColoringWire")]
pub struct MultiColoring {
    n: usize,
    t: usize,
    masks: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct ColoringWire {
    n: usize,
    t: usize,
    edges: Vec<(usize, usize, Vec<usize>)>,
}

impl TryFrom<ColoringWire> for MultiColoring {
    type Error = Error;

    fn try_from(w: ColoringWire) -> Result<Self> {
        let mut col = MultiColoring::new(w.n, w.t)?;
        let mut seen = BTreeSet::new();
        for (u, v, colors) in w.edges {
            if u >= v {
                return Err(Error::invalid(format!("edge [{u}, {v}] must have u < v")));
            }
            col.check_vertex(v)?;
            if !seen.insert((u, v)) {
                return Err(Error::invalid(format!("edge [{u}, {v}] listed twice")));
            }
            for c in colors {
                col.add_color(u, v, c)?;
            }
        }
        Ok(col)
    }
}

impl From<MultiColoring> for ColoringWire {
    fn from(col: MultiColoring) -> Self {
        let edges = col
            .pairs()
            .filter(|&(u, v)| col.mask(u, v) != 0)
            .map(|(u, v)| (u, v, col.colors(u, v)))
            .collect();
        ColoringWire {
            n: col.n,
            t: col.t,
            edges,
        }
    }
}

impl std::fmt::Debug for MultiColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}",
            serde_json::to_string(self).map_err(|_| std::fmt::Error)?
        )
    }
}

impl MultiColoring {
    /// Coloring with every edge uncolored.
    pub fn new(n: usize, t: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        if t == 0 || t > MAX_COLORS {
            return Err(Error::invalid(format!(
                "t must lie in 1..={MAX_COLORS}, got {t}"
            )));
        }
        Ok(MultiColoring {
            n,
            t,
            masks: vec![0; n * n],
        })
    }

    /// Every edge carries every color.
    pub fn all_colors(n: usize, t: usize) -> Result<Self> {
        let mut col = MultiColoring::new(n, t)?;
        let full = col.full_mask();
        for (u, v) in col.pairs().collect::<Vec<_>>() {
            col.set_mask(u, v, full);
        }
        Ok(col)
    }

    /// Builds a coloring whose color `i` graph is `graphs[i - 1]`.
    pub fn from_color_graphs(graphs: &[Graph]) -> Result<Self> {
        let n = graphs.first().map(Graph::n).unwrap_or(0);
        let mut col = MultiColoring::new(n, graphs.len())?;
        for (i, g) in graphs.iter().enumerate() {
            if g.n() != n {
                return Err(Error::invalid("color graphs differ in vertex count"));
            }
            for (u, v) in g.edges() {
                col.add_color(u, v, i + 1)?;
            }
        }
        Ok(col)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.t == 64 {
            u64::MAX
        } else {
            (1u64 << self.t) - 1
        }
    }

    /// All unordered pairs `(u, v)`, `u < v`, lexicographically.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_color(&self, c: usize) -> Result<()> {
        if c == 0 || c > self.t {
            Err(Error::ColorOutOfRange {
                color: c,
                t: self.t,
            })
        } else {
            Ok(())
        }
    }

    /// Bit `c - 1` is set iff the edge carries color `c`. Zero for `u == v`.
    #[inline]
    pub fn mask(&self, u: usize, v: usize) -> u64 {
        self.masks[u * self.n + v]
    }

    pub(crate) fn set_mask(&mut self, u: usize, v: usize, mask: u64) {
        if u == v {
            return;
        }
        self.masks[u * self.n + v] = mask;
        self.masks[v * self.n + u] = mask;
    }

    pub fn add_color(&mut self, u: usize, v: usize, c: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.check_color(c)?;
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        let m = self.mask(u, v) | (1 << (c - 1));
        self.set_mask(u, v, m);
        Ok(())
    }

    pub fn has_color(&self, u: usize, v: usize, c: usize) -> bool {
        self.mask(u, v) >> (c - 1) & 1 == 1
    }

    /// Colors on edge `{u, v}` in increasing order.
    pub fn colors(&self, u: usize, v: usize) -> Vec<usize> {
        mask_colors(self.mask(u, v))
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.mask(u, v).count_ones() as usize
    }

    /// The graph of color `c`.
    pub fn color_graph(&self, c: usize) -> Result<Graph> {
        self.check_color(c)?;
        let mut g = Graph::new(self.n);
        for (u, v) in self.pairs() {
            if self.has_color(u, v, c) {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn color_graphs(&self) -> Vec<Graph> {
        (1..=self.t)
            .map(|c| self.color_graph(c).expect("color in range"))
            .collect()
    }

    /// Restriction to `vertices` (which must be strictly increasing),
    /// relabelled to `0..m` in the same order.
    pub fn restrict(&self, vertices: &[usize]) -> Result<MultiColoring> {
        if vertices.is_empty() {
            return Err(Error::invalid("cannot restrict to an empty vertex set"));
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(
                "restriction vertices must be strictly increasing",
            ));
        }
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut out = MultiColoring::new(vertices.len(), self.t)?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                out.set_mask(i, j, self.mask(u, v));
            }
        }
        Ok(out)
    }

    /// Keeps only `colors` (distinct), renumbered `1..=colors.len()` in the
    /// given order.
    pub fn select_colors(&self, colors: &[usize]) -> Result<MultiColoring> {
        let mut seen = 0u64;
        for &c in colors {
            self.check_color(c)?;
            if seen >> (c - 1) & 1 == 1 {
                return Err(Error::invalid(format!("color {c} selected twice")));
            }
            seen |= 1 << (c - 1);
        }
        let mut out = MultiColoring::new(self.n, colors.len())?;
        for (u, v) in self.pairs() {
            let m = self.mask(u, v);
            let mut nm = 0u64;
            for (i, &c) in colors.iter().enumerate() {
                if m >> (c - 1) & 1 == 1 {
                    nm |= 1 << i;
                }
            }
            out.set_mask(u, v, nm);
        }
        Ok(out)
    }

    /// Mask of colors in which `vertices` span a clique.
    pub fn clique_colors(&self, vertices: &[usize]) -> u64 {
        let mut alive = self.full_mask();
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                alive &= self.mask(u, v);
            }
        }
        alive
    }
}

pub(crate) fn mask_colors(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// Closed integer interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Self {
        Interval { lo, hi }
    }

    pub fn point(p: i64) -> Self {
        Interval { lo: p, hi: p }
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo.max(other.lo) <= self.hi.min(other.hi)
    }

    pub fn contains(&self, p: i64) -> bool {
        self.lo <= p && p <= self.hi
    }
}

impl From<(i64, i64)> for Interval {
    fn from((lo, hi): (i64, i64)) -> Self {
        Interval { lo, hi }
    }
}

impl From<Interval> for (i64, i64) {
    fn from(i: Interval) -> Self {
        (i.lo, i.hi)
    }
}

/// `n` t-intervals: member `m` has interval `members[m][j - 1]` on track `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IntervalFamilyWire")]
pub struct IntervalFamily {
    pub t: usize,
    pub members: Vec<Vec<Interval>>,
}

#[derive(Deserialize)]
struct IntervalFamilyWire {
    t: usize,
    members: Vec<Vec<Interval>>,
}

impl TryFrom<IntervalFamilyWire> for IntervalFamily {
    type Error = Error;

    fn try_from(w: IntervalFamilyWire) -> Result<Self> {
        IntervalFamily::new(w.t, w.members)
    }
}

impl IntervalFamily {
    pub fn new(t: usize, members: Vec<Vec<Interval>>) -> Result<Self> {
        let fam = IntervalFamily { t, members };
        fam.validate()?;
        Ok(fam)
    }

    pub fn n(&self) -> usize {
        self.members.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.t == 0 || self.t > MAX_COLORS {
            return Err(Error::invalid(format!("t must lie in 1..={MAX_COLORS}")));
        }
        if self.members.is_empty() {
            return Err(Error::invalid("interval family has no members"));
        }
        for (m, ivs) in self.members.iter().enumerate() {
            if ivs.len() != self.t {
                return Err(Error::invalid(format!(
                    "member {m} has {} intervals, expected {}",
                    ivs.len(),
                    self.t
                )));
            }
            if let Some(iv) = ivs.iter().find(|iv| iv.lo > iv.hi) {
                return Err(Error::invalid(format!(
                    "member {m} has reversed interval [{}, {}]",
                    iv.lo, iv.hi
                )));
            }
        }
        Ok(())
    }
}

/// `n` t-subtrees of a host tree on `host_edges.len() + 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SubtreeFamilyWire")]
pub struct SubtreeFamily {
    pub host_edges: Vec<(usize, usize)>,
    pub t: usize,
    pub members: Vec<Vec<Vec<usize>>>,
}

#[derive(Deserialize)]
struct SubtreeFamilyWire {
    host_edges: Vec<(usize, usize)>,
    t: usize,
    members: Vec<Vec<Vec<usize>>>,
}

impl TryFrom<SubtreeFamilyWire> for SubtreeFamily {
    type Error = Error;

    fn try_from(w: SubtreeFamilyWire) -> Result<Self> {
        SubtreeFamily::new(w.host_edges, w.t, w.members)
    }
}

impl SubtreeFamily {
    pub fn new(
        host_edges: Vec<(usize, usize)>,
        t: usize,
        members: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let fam = SubtreeFamily {
            host_edges,
            t,
            members,
        };
        fam.validate()?;
        Ok(fam)
    }

    pub fn n(&self) -> usize {
        self.members.len()
    }

    pub fn host_size(&self) -> usize {
        self.host_edges.len() + 1
    }

    pub fn host(&self) -> Graph {
        Graph::from_edges(self.host_size(), &self.host_edges)
    }

    pub fn validate(&self) -> Result<()> {
        let h = self.host_size();
        if self.t == 0 || self.t > MAX_COLORS {
            return Err(Error::invalid(format!("t must lie in 1..={MAX_COLORS}")));
        }
        if self.members.is_empty() {
            return Err(Error::invalid("subtree family has no members"));
        }
        if let Some(&(a, b)) = self
            .host_edges
            .iter()
            .find(|&&(a, b)| a >= h || b >= h || a == b)
        {
            return Err(Error::invalid(format!(
                "host edge [{a}, {b}] is invalid for {h} vertices"
            )));
        }
        let host = self.host();
        // h - 1 edges and connected means a tree; parallel edges collapse and
        // break connectivity.
        if !host.is_connected() || host.edge_count() != h - 1 {
            return Err(Error::invalid("host graph is not a tree"));
        }
        for (m, tracks) in self.members.iter().enumerate() {
            if tracks.len() != self.t {
                return Err(Error::invalid(format!(
                    "member {m} has {} subtrees, expected {}",
                    tracks.len(),
                    self.t
                )));
            }
            for (j, sub) in tracks.iter().enumerate() {
                if sub.is_empty() {
                    return Err(Error::invalid(format!(
                        "member {m} track {} is empty",
                        j + 1
                    )));
                }
                if let Some(&v) = sub.iter().find(|&&v| v >= h) {
                    return Err(Error::VertexOutOfRange { vertex: v, n: h });
                }
                let mut sorted = sub.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if !host.induced(&sorted).is_connected() {
                    return Err(Error::invalid(format!(
                        "member {m} track {} does not induce a subtree",
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Cliques with pairwise distinct colors: `(color, vertices)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongCover {
    pub assignments: Vec<(usize, Vec<usize>)>,
}

impl StrongCover {
    pub fn new() -> Self {
        StrongCover::default()
    }

    pub fn push(&mut self, color: usize, mut vertices: Vec<usize>) {
        vertices.sort_unstable();
        self.assignments.push((color, vertices));
    }

    /// Number of nonempty cliques.
    pub fn clique_count(&self) -> usize {
        self.assignments
            .iter()
            .filter(|(_, vs)| !vs.is_empty())
            .count()
    }

    /// Sorted union of the assigned vertex sets.
    pub fn covered(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .assignments
            .iter()
            .flat_map(|(_, vs)| vs.iter().copied())
            .collect();
        set.into_iter().collect()
    }

    pub fn covered_count(&self) -> usize {
        self.covered().len()
    }

    pub(crate) fn sort(&mut self) {
        self.assignments.sort();
    }

    /// Rewrites vertex `v` to `map[v]` and color `c` to `colors[c - 1]`.
    pub(crate) fn relabel(&self, map: &[usize], colors: &[usize]) -> StrongCover {
        let mut out = StrongCover::new();
        for (c, vs) in &self.assignments {
            out.push(colors[c - 1], vs.iter().map(|&v| map[v]).collect());
        }
        out.sort();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub valid: bool,
    pub covered: usize,
}

/// Edge `{u, v}` gets color `i` iff the members' track-`i` intervals meet.
pub fn coloring_from_intervals(fam: &IntervalFamily) -> Result<MultiColoring> {
    fam.validate()?;
    let mut col = MultiColoring::new(fam.n(), fam.t)?;
    for (u, v) in col.pairs().collect::<Vec<_>>() {
        let mut m = 0u64;
        for (j, (a, b)) in fam.members[u].iter().zip(&fam.members[v]).enumerate() {
            if a.intersects(b) {
                m |= 1 << j;
            }
        }
        col.set_mask(u, v, m);
    }
    Ok(col)
}

/// Edge `{u, v}` gets color `i` iff the members' track-`i` subtrees share a
/// host vertex.
pub fn coloring_from_subtrees(fam: &SubtreeFamily) -> Result<MultiColoring> {
    fam.validate()?;
    let h = fam.host_size();
    let sets: Vec<Vec<fixedbitset::FixedBitSet>> = fam
        .members
        .iter()
        .map(|tracks| {
            tracks
                .iter()
                .map(|s| crate::graph::vertex_set(h, s))
                .collect()
        })
        .collect();
    let mut col = MultiColoring::new(fam.n(), fam.t)?;
    for (u, v) in col.pairs().collect::<Vec<_>>() {
        let mut m = 0u64;
        for (j, (a, b)) in sets[u].iter().zip(&sets[v]).enumerate() {
            if !a.is_disjoint(b) {
                m |= 1 << j;
            }
        }
        col.set_mask(u, v, m);
    }
    Ok(col)
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::invalid(format!("k must be at least 2, got {k}")));
    }
    if k > n {
        return Err(Error::invalid(format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}

/// Depth-first scan of k-subsets in lexicographic order. `extend` returns
/// the new state for the subset grown by one vertex, or `None` when no
/// completion of it can satisfy the property. Returns the lexicographically
/// first violating k-subset.
type Extend<'a, S> = &'a dyn Fn(&S, &[usize], usize) -> Option<S>;

fn first_violating_subset<S: Clone>(
    n: usize,
    k: usize,
    root: S,
    extend: Extend<S>,
) -> Option<Vec<usize>> {
    fn rec<S: Clone>(
        n: usize,
        k: usize,
        state: &S,
        chosen: &mut Vec<usize>,
        extend: Extend<S>,
    ) -> Option<Vec<usize>> {
        if chosen.len() == k {
            return None;
        }
        let start = chosen.last().map_or(0, |&l| l + 1);
        let need = k - chosen.len();
        for v in start..=n.saturating_sub(need) {
            match extend(state, chosen, v) {
                None => {
                    let mut w = chosen.clone();
                    w.extend(v..v + need);
                    return Some(w);
                }
                Some(next) => {
                    chosen.push(v);
                    let found = rec(n, k, &next, chosen, extend);
                    chosen.pop();
                    if found.is_some() {
                        return found;
                    }
                }
            }
        }
        None
    }
    rec(n, k, &root, &mut Vec::with_capacity(k), extend)
}

/// Lexicographically first k-subset spanning no monochromatic clique, or
/// `None` if `col` is a (t,k)-coloring.
pub fn tk_violation(col: &MultiColoring, k: usize) -> Result<Option<Vec<usize>>> {
    check_k(k, col.n())?;
    let extend = |alive: &u64, chosen: &[usize], v: usize| {
        let mut a = *alive;
        for &u in chosen {
            a &= col.mask(u, v);
        }
        (a != 0).then_some(a)
    };
    Ok(first_violating_subset(col.n(), k, col.full_mask(), &extend))
}

pub fn is_tk_coloring(col: &MultiColoring, k: usize) -> Result<bool> {
    Ok(tk_violation(col, k)?.is_none())
}

/// Lexicographically first k members with no common point on any track.
pub fn kwise_violation(fam: &IntervalFamily, k: usize) -> Result<Option<Vec<usize>>> {
    fam.validate()?;
    check_k(k, fam.n())?;
    // Per track: running (max lo, min hi) of the chosen members.
    let root: Vec<(i64, i64)> = vec![(i64::MIN, i64::MAX); fam.t];
    let extend = |acc: &Vec<(i64, i64)>, _: &[usize], v: usize| {
        let next: Vec<(i64, i64)> = acc
            .iter()
            .zip(&fam.members[v])
            .map(|(&(lo, hi), iv)| (lo.max(iv.lo), hi.min(iv.hi)))
            .collect();
        next.iter().any(|&(lo, hi)| lo <= hi).then_some(next)
    };
    Ok(first_violating_subset(fam.n(), k, root, &extend))
}

pub fn is_kwise_intersecting(fam: &IntervalFamily, k: usize) -> Result<bool> {
    Ok(kwise_violation(fam, k)?.is_none())
}

/// Minimum number of colors over all edges.
pub fn kfold_min_colors(col: &MultiColoring) -> Result<usize> {
    if col.n() < 2 {
        return Err(Error::invalid("kfold_min_colors needs n >= 2"));
    }
    Ok(col
        .pairs()
        .map(|(u, v)| col.multiplicity(u, v))
        .min()
        .expect("n >= 2"))
}

/// Checks that each assigned set is a clique in its color and that colors
/// are distinct.
pub fn verify_cover(col: &MultiColoring, cov: &StrongCover) -> Result<CoverReport> {
    let mut valid = true;
    let mut used = BTreeSet::new();
    for (c, vs) in &cov.assignments {
        col.check_color(*c)?;
        for &v in vs {
            col.check_vertex(v)?;
        }
        if !used.insert(*c) {
            valid = false;
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            valid = false;
            continue;
        }
        if col.clique_colors(&sorted) >> (c - 1) & 1 == 0 {
            valid = false;
        }
    }
    Ok(CoverReport {
        valid,
        covered: cov.covered_count(),
    })
}

/// One piercing point `(track, point)` per assigned color: the largest left
/// endpoint among the clique's intervals on that track.
pub fn piercing_points(fam: &IntervalFamily, cov: &StrongCover) -> Result<Vec<(usize, i64)>> {
    let col = coloring_from_intervals(fam)?;
    if !verify_cover(&col, cov)?.valid {
        return Err(Error::invalid(
            "cover is not a valid strong cover of the family",
        ));
    }
    let mut out: Vec<(usize, i64)> = cov
        .assignments
        .iter()
        .filter(|(_, vs)| !vs.is_empty())
        .map(|(c, vs)| {
            let p = vs
                .iter()
                .map(|&v| fam.members[v][c - 1].lo)
                .max()
                .expect("nonempty");
            (*c, p)
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}
