//! Distances in token graphs of paths: the closed-form coordinate formula
//! and its BFS oracle.

use crate::error::{Error, Result};
use crate::subsets::mask_members;
use crate::token::TokenGraph;
use std::collections::VecDeque;

/// A token vertex of F_k(P_n) written as strictly increasing 1-based labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortedTuple {
    values: Vec<usize>,
}

impl SortedTuple {
    /// Builds from labels, sorting them; duplicates or out-of-range labels
    /// for the given `n` are rejected.
    pub fn new(labels: &[usize], n: usize) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Input("empty tuple".into()));
        }
        let mut values = labels.to_vec();
        values.sort_unstable();
        for w in values.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Input(format!("label {} repeated", w[0])));
            }
        }
        if values[0] == 0 || *values.last().unwrap() > n {
            return Err(Error::Input(format!(
                "labels must lie in 1..={n}, got {values:?}"
            )));
        }
        Ok(SortedTuple { values })
    }

    pub fn from_mask(mask: u128) -> Self {
        SortedTuple {
            values: mask_members(mask).into_iter().map(|v| v + 1).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Distance in F_k(P_n) by the coordinate formula: the sum of the absolute
/// differences of the sorted coordinates.
pub fn token_path_distance(u: &SortedTuple, v: &SortedTuple) -> Result<usize> {
    if u.k() != v.k() {
        return Err(Error::Input(format!(
            "tuples have different sizes {} and {}",
            u.k(),
            v.k()
        )));
    }
    Ok(u.values()
        .iter()
        .zip(v.values())
        .map(|(&a, &b)| a.abs_diff(b))
        .sum())
}

/// Shortest-path length between two ranks by BFS; an unreachable pair in a
/// token graph of a path would refute connectivity and errors loudly.
pub fn bfs_distance(tg: &TokenGraph, a: usize, b: usize) -> Result<usize> {
    let g = tg.graph();
    let n = g.vertex_count();
    if a >= n || b >= n {
        return Err(Error::VertexOutOfRange {
            vertex: a.max(b),
            n,
        });
    }
    if a == b {
        return Ok(0);
    }
    let mut dist = vec![usize::MAX; n];
    dist[a] = 0;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                if w == b {
                    return Ok(dist[w]);
                }
                queue.push_back(w);
            }
        }
    }
    Err(Error::Disconnected { a, b })
}

/// All-pairs check that the formula equals BFS on F_k(P_n); returns the
/// number of pairs compared. Any mismatch is an error carrying the pair.
pub fn verify_distance_formula(tg: &TokenGraph) -> Result<usize> {
    let count = tg.vertex_count();
    let n = tg.base().vertex_count();
    let mut pairs = 0;
    for a in 0..count {
        // single-source BFS, compared against the formula for every target
        let g = tg.graph();
        let mut dist = vec![usize::MAX; count];
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        let ta = SortedTuple::from_mask(tg.mask_of(a));
        for b in a + 1..count {
            if dist[b] == usize::MAX {
                return Err(Error::Disconnected { a, b });
            }
            let tb = SortedTuple::from_mask(tg.mask_of(b));
            let formula = token_path_distance(&ta, &tb)?;
            if formula != dist[b] {
                return Err(Error::Input(format!(
                    "distance mismatch in F_{}(P_{n}): formula {formula} vs BFS {} for {:?} - {:?}",
                    tg.k(),
                    dist[b],
                    ta.values(),
                    tb.values()
                )));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}
