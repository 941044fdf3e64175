//! Token graphs: the graph on all k-subsets of a base graph's vertices,
//! where two subsets are adjacent exactly when their symmetric difference is
//! an edge of the base graph.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::subsets::{all_masks, binomial, mask_members, rank_mask, MAX_SUBSET_BASE};

/// A k-subset of the base vertices, as a mask plus its colex rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TokenVertex {
    pub mask: u128,
    pub rank: usize,
}

impl TokenVertex {
    pub fn from_mask(mask: u128) -> Self {
        TokenVertex {
            mask,
            rank: rank_mask(mask),
        }
    }

    /// Sorted 1-based member labels, e.g. `{1,2,5}` has members `[1, 2, 5]`.
    pub fn members_one_based(&self) -> Vec<usize> {
        mask_members(self.mask).into_iter().map(|v| v + 1).collect()
    }

    /// Render as a sorted subset, the label form used in DOT exports.
    pub fn label(&self) -> String {
        let inner: Vec<String> = self
            .members_one_based()
            .iter()
            .map(|v| v.to_string())
            .collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// The k-token graph of a base graph, with the rank <-> mask tables.
///
/// Vertex `r` of [`TokenGraph::graph`] is the k-subset `masks[r]`; ranks are
/// colexicographic, so the vertex order is deterministic.
#[derive(Clone, Debug)]
pub struct TokenGraph {
    base: Graph,
    k: usize,
    graph: Graph,
    masks: Vec<u128>,
}

impl TokenGraph {
    /// Builds the k-token graph, refusing instances whose subset count
    /// exceeds `capacity`.
    pub fn with_capacity(base: &Graph, k: usize, capacity: usize) -> Result<Self> {
        let n = base.vertex_count();
        if k < 1 || k >= n {
            return Err(Error::TokenParameter { n, k });
        }
        if n > MAX_SUBSET_BASE {
            return Err(Error::Capacity(format!(
                "token base order {n} exceeds MAX_SUBSET_BASE={MAX_SUBSET_BASE}"
            )));
        }
        let count = binomial(n, k)?;
        if count > capacity as u128 {
            return Err(Error::Capacity(format!(
                "C({n},{k}) = {count} token vertices exceeds the budget {capacity}"
            )));
        }
        let count = count as usize;
        let masks = all_masks(n, k)?;
        debug_assert_eq!(masks.len(), count);

        // adjacency law: ranks a, b adjacent iff |mask_a ^ mask_b| = 2 and
        // the differing pair is an edge of the base graph. Enumerate from
        // each subset: swap one member u for a neighbor w outside the set.
        let mut graph = Graph::new(count);
        for (r, &mask) in masks.iter().enumerate() {
            for u in mask_members(mask) {
                for w in base.neighbors(u) {
                    if mask & (1u128 << w) != 0 {
                        continue;
                    }
                    let other = (mask & !(1u128 << u)) | (1u128 << w);
                    let s = rank_mask(other);
                    if s > r {
                        graph.add_edge(r, s);
                    }
                }
            }
        }
        Ok(TokenGraph {
            base: base.clone(),
            k,
            graph,
            masks,
        })
    }

    /// Builds with the library-wide budget ([`MAX_VERTICES`]).
    pub fn new(base: &Graph, k: usize) -> Result<Self> {
        TokenGraph::with_capacity(base, k, MAX_VERTICES)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The token graph itself, on `C(n, k)` vertices in rank order.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn mask_of(&self, rank: usize) -> u128 {
        self.masks[rank]
    }

    pub fn vertex(&self, rank: usize) -> TokenVertex {
        TokenVertex {
            mask: self.masks[rank],
            rank,
        }
    }

    /// Rank of a mask; errors if it is not a k-subset of the base vertices.
    pub fn rank_of(&self, mask: u128) -> Result<usize> {
        let n = self.base.vertex_count();
        if mask.count_ones() as usize != self.k {
            return Err(Error::Input(format!(
                "mask has {} members, expected k={}",
                mask.count_ones(),
                self.k
            )));
        }
        if n < 128 && mask >> n != 0 {
            return Err(Error::Input("mask has members outside the base graph".into()));
        }
        Ok(rank_mask(mask))
    }

    /// Rank of the subset given by 1-based labels.
    pub fn rank_of_labels(&self, labels: &[usize]) -> Result<usize> {
        let n = self.base.vertex_count();
        let mut mask = 0u128;
        for &l in labels {
            if l == 0 || l > n {
                return Err(Error::Input(format!("label {l} outside 1..={n}")));
            }
            let bit = 1u128 << (l - 1);
            if mask & bit != 0 {
                return Err(Error::Input(format!("label {l} repeated")));
            }
            mask |= bit;
        }
        self.rank_of(mask)
    }

    /// DOT labels for all token vertices, in rank order.
    pub fn labels(&self) -> Vec<String> {
        (0..self.vertex_count()).map(|r| self.vertex(r).label()).collect()
    }

    /// Degree of a token vertex by the cut rule: the number of base edges
    /// with exactly one endpoint inside the subset. Always equals the
    /// structural degree in the token graph.
    pub fn degree_by_cut(&self, v: &TokenVertex) -> usize {
        let mut cut = 0;
        for u in mask_members(v.mask) {
            for w in self.base.neighbors(u) {
                if v.mask & (1u128 << w) == 0 {
                    cut += 1;
                }
            }
        }
        cut
    }
}

/// The complement bijection from F_k onto F_{n-k}: each subset maps to its
/// complement in the base vertex set.
#[derive(Debug)]
pub struct ComplementIso {
    /// The complement token graph, on `n - k` tokens.
    pub target: TokenGraph,
    /// `forward[r]` is the rank in the target of the complement of rank `r`.
    pub forward: Vec<usize>,
    /// Inverse map, target rank to source rank.
    pub inverse: Vec<usize>,
}

/// Builds F_{n-k} and the complement map, verifying edge-by-edge that the
/// map is a graph isomorphism.
pub fn complement_relabel(tg: &TokenGraph) -> Result<ComplementIso> {
    let n = tg.base().vertex_count();
    let k = tg.k();
    let target = TokenGraph::with_capacity(tg.base(), n - k, tg.vertex_count())?;
    let full: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    let count = tg.vertex_count();
    let mut forward = vec![0usize; count];
    let mut inverse = vec![0usize; count];
    for r in 0..count {
        let comp = full & !tg.mask_of(r);
        let s = rank_mask(comp);
        forward[r] = s;
        inverse[s] = r;
    }
    for (u, v) in tg.graph().edges() {
        if !target.graph().has_edge(forward[u], forward[v]) {
            return Err(Error::NotAutomorphism(format!(
                "complement map does not preserve the edge ({u}, {v})"
            )));
        }
    }
    if tg.graph().edge_count() != target.graph().edge_count() {
        return Err(Error::NotAutomorphism(
            "complement map misses edges of the target".into(),
        ));
    }
    Ok(ComplementIso {
        target,
        forward,
        inverse,
    })
}

/// Comparison of the two sides of vertex deletion: building F_k of the
/// reduced base directly versus dropping every token vertex that meets the
/// deleted set.
#[derive(Debug)]
pub struct DeletionComparison {
    /// F_k(base - xs), built directly.
    pub direct: TokenGraph,
    /// The surviving-token subgraph of the original token graph.
    pub projected: Graph,
    /// `witness[i]` is the rank in `direct` of projected vertex `i`; after
    /// relabeling through the deletion this is the identity on subsets.
    pub witness: Vec<usize>,
    /// Whether the witness is an isomorphism (always true; recorded so the
    /// comparison is observable).
    pub isomorphic: bool,
}

/// Checks the vertex-deletion rule: deleting `xs` from the base and building
/// the token graph matches deleting all tokens meeting `xs`.
pub fn delete_and_project(tg: &TokenGraph, xs: &[usize]) -> Result<DeletionComparison> {
    let (reduced, keep) = tg.base().delete_vertices(xs)?;
    if reduced.vertex_count() < tg.k() + 1 {
        return Err(Error::TokenParameter {
            n: reduced.vertex_count(),
            k: tg.k(),
        });
    }
    let direct = TokenGraph::with_capacity(&reduced, tg.k(), tg.vertex_count())?;

    // old-vertex -> new-vertex relabeling
    let mut relabel = vec![usize::MAX; tg.base().vertex_count()];
    for (new, &old) in keep.iter().enumerate() {
        relabel[old] = new;
    }
    let mut drop_mask = 0u128;
    for &x in xs {
        drop_mask |= 1u128 << x;
    }
    let survivors: Vec<usize> = (0..tg.vertex_count())
        .filter(|&r| tg.mask_of(r) & drop_mask == 0)
        .collect();
    let (projected, survivor_ranks) = tg.graph().induced_subgraph(&survivors)?;

    let mut witness = Vec::with_capacity(survivor_ranks.len());
    for &r in &survivor_ranks {
        let mut new_mask = 0u128;
        for v in mask_members(tg.mask_of(r)) {
            new_mask |= 1u128 << relabel[v];
        }
        witness.push(direct.rank_of(new_mask)?);
    }

    let mut isomorphic = projected.vertex_count() == direct.vertex_count()
        && projected.edge_count() == direct.graph().edge_count();
    if isomorphic {
        for (u, v) in projected.edges() {
            if !direct.graph().has_edge(witness[u], witness[v]) {
                isomorphic = false;
                break;
            }
        }
    }
    Ok(DeletionComparison {
        direct,
        projected,
        witness,
        isomorphic,
    })
}
