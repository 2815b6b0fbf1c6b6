//! Simple undirected graphs on `0..n` with bitset adjacency rows.

use fixedbitset::FixedBitSet;
use std::collections::VecDeque;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Adds the edge `{u, v}`. Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.adj[u].contains(v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|row| row.count_ones(..) + 1 == n)
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Connected components of the graph with `removed` deleted. Components
    /// are sorted internally and ordered by their smallest vertex.
    pub fn components_without(&self, removed: &FixedBitSet) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = removed.clone();
        seen.grow(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(&FixedBitSet::with_capacity(self.n()))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Shortest `from`-`to` path avoiding `blocked`, inclusive of both ends.
    pub fn shortest_path_avoiding(
        &self,
        from: usize,
        to: usize,
        blocked: &FixedBitSet,
    ) -> Option<Vec<usize>> {
        let n = self.n();
        let mut prev = vec![usize::MAX; n];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.adj[u].ones() {
                if prev[w] == usize::MAX && (w == to || !blocked.contains(w)) {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// Bitset over `0..n` holding `vertices`.
pub fn vertex_set(n: usize, vertices: &[usize]) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for &v in vertices {
        s.insert(v);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_shapes() {
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
        assert_eq!(
            Graph::path(4).edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3)]
        );
        assert!(Graph::complete(4).is_complete());
        assert!(Graph::new(1).is_complete());
        assert!(!Graph::path(3).is_complete());
    }

    #[test]
    fn induced_and_complement() {
        let c5 = Graph::cycle(5);
        let sub = c5.induced(&[0, 1, 2]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(c5.complement().edge_count(), 5);
        assert!(c5.complement().has_edge(0, 2));
    }

    #[test]
    fn components_and_paths() {
        let g = Graph::path(5);
        let cut = vertex_set(5, &[2]);
        assert_eq!(g.components_without(&cut), vec![vec![0, 1], vec![3, 4]]);
        assert_eq!(
            Graph::cycle(6).shortest_path_avoiding(0, 3, &vertex_set(6, &[1])),
            Some(vec![0, 5, 4, 3])
        );
        assert_eq!(g.shortest_path_avoiding(0, 4, &cut), None);
    }
}
