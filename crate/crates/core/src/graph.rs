//! Simple undirected graphs and the constructors for the families studied here.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as sorted pairs `(i, j)` with `i < j`, without
/// duplicates. The value is immutable once built; degrees are computed once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation; self-loops, out-of-range endpoints and repeated edges are
    /// rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a},{b}) out of range for {n} vertices"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge ({},{})",
                    e.0, e.1
                )));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut degrees = vec![0; n];
        for &(i, j) in &edges {
            degrees[i] += 1;
            degrees[j] += 1;
        }
        Graph { n, edges, degrees }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Self::from_sorted(n, edges)
    }

    /// Builds a graph from a symmetric 0/1 matrix with zero diagonal.
    pub fn from_adjacency_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut edges = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                let mirror = rows[j].as_ref()[i];
                match (x, mirror) {
                    (0, 0) => {}
                    (1, 1) if i == j => {
                        return Err(Error::InvalidParameter(format!("self-loop at vertex {i}")))
                    }
                    (1, 1) if i < j => edges.push((i, j)),
                    (1, 1) => {}
                    _ => {
                        return Err(Error::InvalidParameter(format!(
                            "matrix is not a symmetric 0/1 matrix at ({i},{j})"
                        )))
                    }
                }
            }
        }
        Ok(Self::from_sorted(n, edges))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// `Some(k)` when every vertex has degree `k`. The graph on zero vertices
    /// is reported as 0-regular.
    pub fn regularity(&self) -> Option<usize> {
        match self.degrees.first() {
            None => Some(0),
            Some(&k) => self.degrees.iter().all(|&d| d == k).then_some(k),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn adjacency_matrix(&self) -> AdjacencyMatrix {
        let mut rows = vec![vec![0u8; self.n]; self.n];
        for &(i, j) in &self.edges {
            rows[i][j] = 1;
            rows[j][i] = 1;
        }
        AdjacencyMatrix { rows }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        Graph::new(self.n, self.edges.iter().map(|&(i, j)| (perm[i], perm[j])))
    }
}

/// Dense 0/1 adjacency matrix of a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    rows: Vec<Vec<u8>>,
}

impl AdjacencyMatrix {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i][j]
    }
}

impl fmt::Display for AdjacencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// The cycle `C_m` with edges `{i, i+1 mod m}`.
pub fn make_cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs m >= 3, got {m}")));
    }
    Graph::new(m, (0..m).map(|i| (i, (i + 1) % m)))
}

/// The path on `n` vertices.
pub fn make_path(n: usize) -> Graph {
    Graph::from_sorted(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Dutch windmill `D_m^n`: `n` copies of `C_m` sharing vertex 0.
///
/// Copy `c` occupies vertices `1 + c(m-1) ..= (c+1)(m-1)` in path order and
/// the hub closes the cycle at both ends. `D_3^n` is the friendship graph.
pub fn make_dutch_windmill(m: usize, n: usize) -> Result<Graph> {
    if m < 3 || n < 1 {
        return Err(Error::InvalidParameter(format!(
            "windmill needs m >= 3 and n >= 1, got m={m}, n={n}"
        )));
    }
    let blade = m - 1;
    let mut edges = Vec::with_capacity(m * n);
    for c in 0..n {
        let first = 1 + c * blade;
        let last = first + blade - 1;
        edges.push((0, first));
        for v in first..last {
            edges.push((v, v + 1));
        }
        edges.push((0, last));
    }
    Graph::new(blade * n + 1, edges)
}

/// The friendship graph `F_n = D_3^n`.
pub fn make_friendship(n: usize) -> Result<Graph> {
    make_dutch_windmill(3, n)
}

/// Complete bipartite graph `K_{m,n}` on sides `0..m` and `m..m+n`.
pub fn make_complete_bipartite(m: usize, n: usize) -> Graph {
    let edges = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))).collect();
    Graph::from_sorted(m + n, edges)
}

/// `K_{m,n}` with the edge `(0, m)` removed (the first cross edge).
pub fn make_complete_bipartite_minus_edge(m: usize, n: usize) -> Result<Graph> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "K_(m,n)-e needs m, n >= 2, got m={m}, n={n}"
        )));
    }
    let full = make_complete_bipartite(m, n);
    let edges = full.edges.into_iter().filter(|&e| e != (0, m)).collect();
    Ok(Graph::from_sorted(m + n, edges))
}

/// Adjacency rows of the Petersen graph in the labeling used throughout.
pub const PETERSEN_ROWS: [[u8; 10]; 10] = [
    [0, 1, 0, 0, 1, 1, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 1, 0, 0, 0, 1, 0],
    [1, 0, 0, 1, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 1, 0, 0],
];

pub fn make_petersen() -> Graph {
    Graph::from_adjacency_rows(&PETERSEN_ROWS).expect("Petersen rows are a valid adjacency matrix")
}

/// Triangular prism `C_3 x K_2`.
pub fn make_prism() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
        .expect("prism edges are valid")
}

/// Vertex-disjoint union; the `k`-th graph's vertices are shifted past all
/// earlier ones.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    if gs.is_empty() {
        return Err(Error::InvalidParameter("disjoint union of an empty list".into()));
    }
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in gs {
        edges.extend(g.edges.iter().map(|&(i, j)| (i + offset, j + offset)));
        offset += g.n;
    }
    Ok(Graph::from_sorted(offset, edges))
}
