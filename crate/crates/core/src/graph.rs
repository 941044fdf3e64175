//! Simple undirected graphs with bit-set adjacency rows, plus the standard
//! family constructors (path, cycle, star, fan, wheel, complete, grid).
//!
//! Vertices are dense `0..n` internally; every exported format and report
//! uses 1-based labels.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Hard upper bound on the number of vertices a [`Graph`] may have.
///
/// Token graphs are stored as ordinary graphs, so this bound also caps the
/// number of k-subsets a token graph construction may produce.
pub const MAX_VERTICES: usize = 16_384;

/// A simple undirected graph on vertices `0..n`.
///
/// Invariants: no self-loops, symmetric adjacency. Instances are immutable
/// once built (all constructors finish the edge set before returning), so
/// they can be shared freely across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics if `n` exceeds [`MAX_VERTICES`];
    /// validated entry points check the bound before calling.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds MAX_VERTICES");
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds the edge `{u, v}`. Panics on self-loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_row(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Degree histogram `degree -> count`, sorted by degree.
    pub fn degree_histogram(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut hist = std::collections::BTreeMap::new();
        for v in 0..self.n {
            *hist.entry(self.degree(v)).or_insert(0) += 1;
        }
        hist
    }

    fn check_vertices(&self, vs: &[usize]) -> Result<()> {
        for &v in vs {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        Ok(())
    }

    /// Subgraph induced by `vs`, together with the map from new indices back
    /// to the original vertices (sorted ascending, duplicates collapsed).
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<(Graph, Vec<usize>)> {
        self.check_vertices(vs)?;
        let mut keep: Vec<usize> = vs.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for w in self.adj[v].iter() {
                if pos[w] != usize::MAX && pos[w] > i {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        Ok((g, keep))
    }

    /// Graph with the vertices `xs` removed, i.e. the subgraph induced by the
    /// complement of `xs`. Also returns the index map of the survivors.
    pub fn delete_vertices(&self, xs: &[usize]) -> Result<(Graph, Vec<usize>)> {
        self.check_vertices(xs)?;
        let mut drop = BitSet::new(self.n);
        for &x in xs {
            drop.insert(x);
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !drop.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Set neighborhood: the union of the neighborhoods of `xs`, minus `xs`.
    pub fn set_neighborhood(&self, xs: &[usize]) -> Result<Vec<usize>> {
        self.check_vertices(xs)?;
        let mut acc = BitSet::new(self.n);
        let mut excl = BitSet::new(self.n);
        for &x in xs {
            acc.union_with(&self.adj[x]);
            excl.insert(x);
        }
        acc.difference_with(&excl);
        Ok(acc.iter().collect())
    }

    /// Checks the structural invariants (no self-loops, symmetry). Intended
    /// for tests and import paths.
    pub fn validate(&self) -> Result<()> {
        for v in 0..self.n {
            if self.adj[v].contains(v) {
                return Err(Error::Input(format!("self-loop at vertex {}", v + 1)));
            }
            for w in self.adj[v].iter() {
                if !self.adj[w].contains(v) {
                    return Err(Error::Input(format!(
                        "asymmetric adjacency at ({}, {})",
                        v + 1,
                        w + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// One of the named graph families, with its size parameters.
///
/// The labeling conventions follow the source material: paths and cycles use
/// `1..=n` with consecutive edges (cycles close with `{1, n}`), the star
/// center is vertex 1, fans and wheels label the rim `1..=n` and give the hub
/// the highest label, grids are row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    /// `total` counts all vertices, center included.
    Star { total: usize },
    /// `rim` counts the path vertices; the graph has `rim + 1` vertices.
    Fan { rim: usize },
    /// `rim` counts the cycle vertices; the graph has `rim + 1` vertices.
    Wheel { rim: usize },
    Complete { n: usize },
    Grid { rows: usize, cols: usize },
}

impl FamilySpec {
    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => n,
            FamilySpec::Star { total } => total,
            FamilySpec::Fan { rim } | FamilySpec::Wheel { rim } => rim + 1,
            FamilySpec::Grid { rows, cols } => rows * cols,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Fan { .. } => "fan",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Grid { .. } => "grid",
        }
    }
}

/// Builds the labeled graph for a family spec.
pub fn make_family(spec: FamilySpec) -> Result<Graph> {
    let param_err = |msg: String| Err(Error::FamilyParameter(msg));
    if spec.vertex_count() > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "{} on {} vertices exceeds MAX_VERTICES={}",
            spec.name(),
            spec.vertex_count(),
            MAX_VERTICES
        )));
    }
    match spec {
        FamilySpec::Path { n } => {
            if n < 1 {
                return param_err("path requires n >= 1".into());
            }
            let mut g = Graph::new(n);
            for i in 0..n - 1 {
                g.add_edge(i, i + 1);
            }
            Ok(g)
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return param_err(format!("cycle requires n >= 3, got {n}"));
            }
            let mut g = Graph::new(n);
            for i in 0..n - 1 {
                g.add_edge(i, i + 1);
            }
            g.add_edge(0, n - 1);
            Ok(g)
        }
        FamilySpec::Star { total } => {
            if total < 2 {
                return param_err(format!("star requires >= 2 vertices, got {total}"));
            }
            let mut g = Graph::new(total);
            for leaf in 1..total {
                g.add_edge(0, leaf);
            }
            Ok(g)
        }
        FamilySpec::Fan { rim } => {
            if rim < 3 {
                return param_err(format!("fan requires rim >= 3, got {rim}"));
            }
            Ok(join_with_apex(&make_family(FamilySpec::Path { n: rim })?))
        }
        FamilySpec::Wheel { rim } => {
            if rim < 3 {
                return param_err(format!("wheel requires rim >= 3, got {rim}"));
            }
            Ok(join_with_apex(&make_family(FamilySpec::Cycle { n: rim })?))
        }
        FamilySpec::Complete { n } => {
            if n < 1 {
                return param_err("complete requires n >= 1".into());
            }
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        FamilySpec::Grid { rows, cols } => {
            if rows < 1 || cols < 1 {
                return param_err(format!("grid requires rows, cols >= 1, got {rows}x{cols}"));
            }
            let mut g = Graph::new(rows * cols);
            let at = |r: usize, c: usize| r * cols + c;
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        g.add_edge(at(r, c), at(r, c + 1));
                    }
                    if r + 1 < rows {
                        g.add_edge(at(r, c), at(r + 1, c));
                    }
                }
            }
            Ok(g)
        }
    }
}

/// The join `K_1 + g`: one new vertex (highest label) adjacent to all of `g`.
pub fn join_with_apex(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut out = Graph::new(n + 1);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for v in 0..n {
        out.add_edge(v, n);
    }
    out
}
