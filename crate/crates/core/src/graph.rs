//! Simple undirected graphs, hop distances and graph powers.
//!
//! Vertices are `0..n` internally. Every textual surface (files, reports,
//! error messages) renders them as `1..=n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Hop distance from a BFS source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_exactly(self, d: usize) -> bool {
        self == Distance::Finite(d)
    }

    pub fn is_within(self, d: usize) -> bool {
        matches!(self, Distance::Finite(x) if x <= d)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("UNREACHABLE"),
        }
    }
}

/// A simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from 0-indexed edges, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    /// Path on `n` vertices, 0-1-2-...
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete edges are valid")
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x + 1, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u + 1));
        }
        if self.adjacency[u].contains(&v) {
            let (a, b) = (u.min(v), u.max(v));
            return Err(Error::DuplicateEdge(a + 1, b + 1));
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        self.edge_count += 1;
        Ok(())
    }

    fn finish(&mut self) {
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::VertexSetMismatch {
                left: n,
                right: perm.len(),
            });
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::from_edges(vertices.len(), edges).expect("induced edges are valid")
    }

    /// Whether `other` contains every edge of `self`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// First pair (in lexicographic order) on which the two graphs disagree,
    /// with whether `self` has the edge.
    pub fn first_difference(&self, other: &Graph) -> Option<(usize, usize, bool)> {
        let n = self.vertex_count().min(other.vertex_count());
        for u in 0..n {
            for v in u + 1..n {
                let mine = self.has_edge(u, v);
                if mine != other.has_edge(u, v) {
                    return Some((u, v, mine));
                }
            }
        }
        None
    }
}

/// Hop distances from `source`.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Distance>> {
    let n = g.vertex_count();
    if source >= n {
        return Err(Error::InvalidVertex {
            vertex: source + 1,
            n,
        });
    }
    let mut dist = vec![Distance::Unreachable; n];
    dist[source] = Distance::Finite(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let Distance::Finite(du) = dist[u] else {
            unreachable!("queued vertices have finite distance")
        };
        for &w in g.neighbors(u) {
            if dist[w] == Distance::Unreachable {
                dist[w] = Distance::Finite(du + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// All-pairs hop distances, one BFS per vertex.
pub fn all_distances(g: &Graph) -> Vec<Vec<Distance>> {
    (0..g.vertex_count())
        .map(|s| bfs_distances(g, s).expect("source in range"))
        .collect()
}

/// `G^k`: `u` and `v` adjacent iff `1 <= d(u, v) <= k`.
pub fn graph_power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidK { k, min: 1 });
    }
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        let dist = bfs_distances(g, u)?;
        edges.extend((u + 1..n).filter(|&v| dist[v].is_within(k)).map(|v| (u, v)));
    }
    Graph::from_edges(n, edges)
}

/// `G^k` via `k`-fold boolean products of `A + I`, as a dense check on
/// [`graph_power`]. Quadratic memory; meant for small graphs.
pub fn graph_power_oracle(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidK { k, min: 1 });
    }
    let n = g.vertex_count();
    let mut base = vec![vec![false; n]; n];
    for (u, row) in base.iter_mut().enumerate() {
        row[u] = true;
    }
    for (u, v) in g.edges() {
        base[u][v] = true;
        base[v][u] = true;
    }
    let mut reach = base.clone();
    for _ in 1..k {
        let mut next = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).any(|m| reach[i][m] && base[m][j]);
            }
        }
        reach = next;
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges.filter(|&(u, v)| reach[u][v]).collect::<Vec<_>>())
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    component.push(w);
                    queue.push_back(w);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().map(|(u, v)| (u + 1, v + 1)).collect()
    }

    #[test]
    fn bfs_on_path() {
        let d = bfs_distances(&Graph::path(5), 0).unwrap();
        let hops: Vec<_> = d.iter().map(|d| d.finite().unwrap()).collect();
        assert_eq!(hops, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn bfs_single_vertex() {
        assert_eq!(
            bfs_distances(&Graph::empty(1), 0).unwrap(),
            vec![Distance::Finite(0)]
        );
    }

    #[test]
    fn bfs_disconnected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            bfs_distances(&g, 0).unwrap(),
            vec![
                Distance::Finite(0),
                Distance::Finite(1),
                Distance::Unreachable,
                Distance::Unreachable
            ]
        );
    }

    #[test]
    fn bfs_rejects_bad_source() {
        assert_eq!(
            bfs_distances(&Graph::path(3), 3),
            Err(Error::InvalidVertex { vertex: 4, n: 3 })
        );
    }

    #[test]
    fn square_of_p5() {
        let sq = graph_power(&Graph::path(5), 2).unwrap();
        assert_eq!(
            edge_set(&sq),
            vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]
        );
        assert_eq!(graph_power_oracle(&Graph::path(5), 2).unwrap(), sq);
    }

    #[test]
    fn first_power_is_identity() {
        let g = Graph::from_edges(5, [(0, 3), (1, 2), (2, 4)]).unwrap();
        assert_eq!(graph_power(&g, 1).unwrap(), g);
        assert_eq!(graph_power_oracle(&g, 1).unwrap(), g);
    }

    #[test]
    fn fourth_power_of_p5_is_complete() {
        assert_eq!(graph_power(&Graph::path(5), 4).unwrap(), Graph::complete(5));
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(
            graph_power_oracle(&Graph::complete(2), 5).unwrap(),
            Graph::complete(2)
        );
        assert_eq!(
            graph_power_oracle(&Graph::empty(3), 3).unwrap(),
            Graph::empty(3)
        );
    }

    #[test]
    fn zero_power_rejected() {
        assert!(matches!(
            graph_power(&Graph::path(3), 0),
            Err(Error::InvalidK { .. })
        ));
        assert!(matches!(
            graph_power_oracle(&Graph::path(3), 0),
            Err(Error::InvalidK { .. })
        ));
    }

    #[test]
    fn components() {
        assert_eq!(
            connected_components(&Graph::path(5)),
            vec![vec![0, 1, 2, 3, 4]]
        );
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(connected_components(&g), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(
            connected_components(&Graph::empty(2)),
            vec![vec![0], vec![1]]
        );
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(2)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(1, 2))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::InvalidVertex { vertex: 4, n: 3 })
        );
    }
}
