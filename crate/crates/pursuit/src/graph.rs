//! Graph representation, named-family generators and edge-list ingestion.
//!
//! Graphs are simple, undirected and connected; vertices are `0..n`. The
//! canonical labelings produced by [`GraphFamily::generate`] are what the
//! rest of the crate (position resolution, classifiers) relies on:
//!
//! * `Complete(v)`: vertices `0..v`.
//! * `CompleteBipartite(v, w)`: first part `0..v`, second part `v..v+w`.
//! * `Cycle(v)`: vertex `i` adjacent to `i±1 (mod v)`.
//! * `Friendship(k)`: vertex `0` is the shared center, triangle `j` is
//!   `{0, 2j+1, 2j+2}`.

use std::collections::VecDeque;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid {family} parameters: {reason}")]
    InvalidFamily { family: &'static str, reason: String },
    #[error("line {line_no} ({line:?}): {reason}")]
    Parse {
        line_no: usize,
        line: String,
        reason: String,
    },
    #[error("graph is disconnected: vertex {witness} is unreachable from vertex 0")]
    Disconnected { witness: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("adjacency is not symmetric at ({u}, {v})")]
    Asymmetric { u: usize, v: usize },
    #[error("vertex {vertex} out of range (vertex count {count})")]
    OutOfRange { vertex: usize, count: usize },
    #[error("graph must have at least 2 vertices, every vertex of degree >= 1")]
    TooSmall,
}

/// Simple undirected connected graph as adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from adjacency lists, normalizing each list to sorted
    /// order and checking every structural invariant (symmetry, simplicity,
    /// connectivity, minimum degree).
    pub fn new(mut adjacency: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = adjacency.len();
        if n < 2 {
            return Err(GraphError::TooSmall);
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            for pair in list.windows(2) {
                if pair[0] == pair[1] {
                    return Err(GraphError::DuplicateEdge { u: v, v: pair[0] });
                }
            }
            for &u in list.iter() {
                if u >= n {
                    return Err(GraphError::OutOfRange { vertex: u, count: n });
                }
                if u == v {
                    return Err(GraphError::SelfLoop { vertex: v });
                }
            }
            if list.is_empty() {
                return Err(GraphError::TooSmall);
            }
        }
        for v in 0..n {
            for &u in &adjacency[v] {
                if adjacency[u].binary_search(&v).is_err() {
                    return Err(GraphError::Asymmetric { u: v, v: u });
                }
            }
        }
        let g = Graph { adjacency };
        if let Some(witness) = g.disconnection_witness() {
            return Err(GraphError::Disconnected { witness });
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// One `"u v"` line per edge with `u < v`, sorted lexicographically.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    fn disconnection_witness(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut q = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(x) = q.pop_front() {
            for &y in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    q.push_back(y);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    /// All-pairs shortest-path hop distances (BFS from every vertex).
    pub fn distances(&self) -> DistanceTable {
        let n = self.vertex_count();
        let mut dist = Vec::with_capacity(n);
        for s in 0..n {
            let mut d = vec![u32::MAX; n];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in &self.adjacency[x] {
                    if d[y] == u32::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            dist.push(d);
        }
        DistanceTable { dist }
    }
}

/// Parses an edge list: one `"u v"` pair per line, 0-based ids, blank lines
/// and lines starting with `#` ignored, duplicate edges collapsed. The vertex
/// count is `1 + max id`.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_id = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: String| GraphError::Parse {
            line_no,
            line: raw.to_string(),
            reason,
        };
        let mut tokens = line.split_whitespace();
        let mut next_id = |tokens: &mut dyn Iterator<Item = &str>| -> Result<usize, GraphError> {
            let tok = tokens.next().ok_or_else(|| err("expected two vertex ids".into()))?;
            let val: i64 = tok
                .parse()
                .map_err(|_| err(format!("non-integer token {tok:?}")))?;
            if val < 0 {
                return Err(err(format!("negative vertex id {val}")));
            }
            Ok(val as usize)
        };
        let u = next_id(&mut tokens)?;
        let v = next_id(&mut tokens)?;
        if tokens.next().is_some() {
            return Err(err("expected exactly two vertex ids".into()));
        }
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        max_id = max_id.max(u).max(v);
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    edges.dedup();
    let n = max_id + 1;
    let mut adjacency = vec![Vec::new(); n];
    for (u, v) in edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    Graph::new(adjacency)
}

/// The named graph families treated by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Complete { v: usize },
    CompleteBipartite { v: usize, w: usize },
    Cycle { v: usize },
    Friendship { k: usize },
}

impl GraphFamily {
    /// Generates the family member with its canonical vertex labeling.
    pub fn generate(self) -> Result<Graph, GraphError> {
        match self {
            GraphFamily::Complete { v } => {
                if v < 2 {
                    return Err(GraphError::InvalidFamily {
                        family: "complete",
                        reason: format!("need v >= 2, got {v}"),
                    });
                }
                let adjacency = (0..v)
                    .map(|x| (0..v).filter(|&y| y != x).collect())
                    .collect();
                Graph::new(adjacency)
            }
            GraphFamily::CompleteBipartite { v, w } => {
                if v < 1 || w < 1 {
                    return Err(GraphError::InvalidFamily {
                        family: "bipartite",
                        reason: format!("need v >= 1 and w >= 1, got v={v}, w={w}"),
                    });
                }
                let n = v + w;
                let adjacency = (0..n)
                    .map(|x| {
                        if x < v {
                            (v..n).collect()
                        } else {
                            (0..v).collect()
                        }
                    })
                    .collect();
                Graph::new(adjacency)
            }
            GraphFamily::Cycle { v } => {
                if v < 3 {
                    return Err(GraphError::InvalidFamily {
                        family: "cycle",
                        reason: format!("need v >= 3, got {v}"),
                    });
                }
                let adjacency = (0..v)
                    .map(|x| {
                        let mut nb = vec![(x + v - 1) % v, (x + 1) % v];
                        nb.sort_unstable();
                        nb.dedup();
                        nb
                    })
                    .collect();
                Graph::new(adjacency)
            }
            GraphFamily::Friendship { k } => {
                if k < 1 {
                    return Err(GraphError::InvalidFamily {
                        family: "friendship",
                        reason: format!("need k >= 1, got {k}"),
                    });
                }
                let n = 2 * k + 1;
                let mut adjacency = vec![Vec::new(); n];
                for j in 0..k {
                    let (a, b) = (2 * j + 1, 2 * j + 2);
                    adjacency[0].push(a);
                    adjacency[0].push(b);
                    adjacency[a].push(0);
                    adjacency[a].push(b);
                    adjacency[b].push(0);
                    adjacency[b].push(a);
                }
                Graph::new(adjacency)
            }
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Complete { v } => write!(f, "complete(v={v})"),
            GraphFamily::CompleteBipartite { v, w } => write!(f, "bipartite(v={v},w={w})"),
            GraphFamily::Cycle { v } => write!(f, "cycle(v={v})"),
            GraphFamily::Friendship { k } => write!(f, "friendship(k={k})"),
        }
    }
}

/// All-pairs shortest-path hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    dist: Vec<Vec<u32>>,
}

impl DistanceTable {
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u][v]
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    pub fn diameter(&self) -> u32 {
        self.dist
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_3_is_triangle() {
        let g = GraphFamily::Complete { v: 3 }.generate().unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn family_edge_counts() {
        for v in 2..10 {
            let g = GraphFamily::Complete { v }.generate().unwrap();
            assert_eq!(g.edge_count(), v * (v - 1) / 2);
        }
        for v in 1..6 {
            for w in 1..6 {
                let g = GraphFamily::CompleteBipartite { v, w }.generate().unwrap();
                assert_eq!(g.edge_count(), v * w);
                assert_eq!(g.vertex_count(), v + w);
            }
        }
        for v in 3..12 {
            let g = GraphFamily::Cycle { v }.generate().unwrap();
            assert_eq!(g.edge_count(), v);
            assert!((0..v).all(|x| g.degree(x) == 2));
        }
        for k in 1..6 {
            let g = GraphFamily::Friendship { k }.generate().unwrap();
            assert_eq!(g.vertex_count(), 2 * k + 1);
            assert_eq!(g.edge_count(), 3 * k);
        }
    }

    #[test]
    fn friendship_2_shape() {
        let g = GraphFamily::Friendship { k: 2 }.generate().unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(0), 4);
        for v in 1..5 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn family_bounds_rejected() {
        assert!(GraphFamily::Complete { v: 1 }.generate().is_err());
        assert!(GraphFamily::CompleteBipartite { v: 0, w: 3 }.generate().is_err());
        assert!(GraphFamily::Cycle { v: 2 }.generate().is_err());
        assert!(GraphFamily::Friendship { k: 0 }.generate().is_err());
    }

    #[test]
    fn parse_triangle() {
        let g = parse_edge_list("0 1\n1 2\n0 2").unwrap();
        assert_eq!(g, GraphFamily::Complete { v: 3 }.generate().unwrap());
    }

    #[test]
    fn parse_collapses_duplicates_and_skips_comments() {
        let g = parse_edge_list("0 1\n\n# comment\n1 0").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn parse_rejects_disconnected_with_witness() {
        match parse_edge_list("0 1\n2 3") {
            Err(GraphError::Disconnected { witness }) => assert_eq!(witness, 2),
            other => panic!("expected disconnected error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        assert!(matches!(
            parse_edge_list("0 x"),
            Err(GraphError::Parse { line_no: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n-1 2"),
            Err(GraphError::Parse { line_no: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 3"),
            Err(GraphError::Parse { line_no: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2"),
            Err(GraphError::Parse { line_no: 1, .. })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = GraphFamily::Friendship { k: 3 }.generate().unwrap();
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn distances_on_small_families() {
        let g = GraphFamily::Complete { v: 4 }.generate().unwrap();
        let d = g.distances();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
        let c5 = GraphFamily::Cycle { v: 5 }.generate().unwrap();
        let d5 = c5.distances();
        assert_eq!(d5.get(0, 2), 2);
        assert_eq!(d5.diameter(), 2);
        // outer vertices of different triangles are distance 2 apart
        let f2 = GraphFamily::Friendship { k: 2 }.generate().unwrap();
        let df = f2.distances();
        assert_eq!(df.get(1, 3), 2);
        assert_eq!(df.get(1, 2), 1);
        assert_eq!(df.get(0, 4), 1);
    }

    #[test]
    fn new_rejects_asymmetric() {
        assert!(matches!(
            Graph::new(vec![vec![1], vec![0], vec![0]]),
            Err(GraphError::Asymmetric { .. })
        ));
    }
}
