//! Exact automorphism groups by refinement-pruned backtracking, plus the two
//! distinguished automorphism families on token graphs: maps induced by base
//! automorphisms and the complement involution.
//!
//! The search derives a base sequence from the canonical refinement path and
//! finds, per level, one representative automorphism per orbit point of the
//! base vertex. That yields a small generating set without enumerating the
//! group, so orders like (n-1)! stay cheap through the stabilizer chain.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::subsets::mask_members;
use crate::token::TokenGraph;
use rayon::prelude::*;
use serde::Serialize;

/// Tuning knobs for the search.
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Maximum stabilization passes of neighbor-profile refinement after the
    /// initial degree partition; 0 keeps the plain degree partition. Capping
    /// only weakens pruning, never correctness.
    pub refinement_rounds: usize,
    /// Explore the per-level candidate searches concurrently. The result is
    /// schedule-independent.
    pub parallel: bool,
    /// Abort threshold for [`enumerate_automorphisms`].
    pub element_cap: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            refinement_rounds: 64,
            parallel: false,
            element_cap: 1 << 20,
        }
    }
}

/// Checks edge-by-edge that `p` preserves adjacency on `g`.
pub fn is_graph_automorphism(g: &Graph, p: &Permutation) -> bool {
    if p.degree() != g.vertex_count() {
        return false;
    }
    g.edges().all(|(u, v)| g.has_edge(p.apply(u), p.apply(v)))
}

/// An ordered partition pair kept cell-aligned between a source and a target
/// graph (the same graph during automorphism search). Refinement splits both
/// sides by neighbor counts against a splitter cell; diverging split
/// signatures prune the branch.
#[derive(Clone)]
struct PairPartition {
    src: Vec<Vec<usize>>,
    tgt: Vec<Vec<usize>>,
}

impl PairPartition {
    /// Initial degree partition, cells ordered by degree. `None` when the
    /// two graphs disagree on the degree multiset.
    fn by_degree(g: &Graph, h: &Graph) -> Option<Self> {
        if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
            return None;
        }
        let group = |gr: &Graph| {
            let mut cells: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
            for v in 0..gr.vertex_count() {
                cells.entry(gr.degree(v)).or_default().push(v);
            }
            cells
        };
        let a = group(g);
        let b = group(h);
        if a.keys().collect::<Vec<_>>() != b.keys().collect::<Vec<_>>() {
            return None;
        }
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        for (deg, cell) in &a {
            if b[deg].len() != cell.len() {
                return None;
            }
            src.push(cell.clone());
            tgt.push(b[deg].clone());
        }
        Some(PairPartition { src, tgt })
    }


    fn first_non_singleton(&self) -> Option<usize> {
        self.src.iter().position(|c| c.len() > 1)
    }

    /// Splits off `b` (source) and `w` (target) from cell `ci` into a new
    /// singleton cell placed before the remainder. `false` when `w` is not
    /// in the aligned target cell.
    fn individualize(&mut self, ci: usize, b: usize, w: usize) -> bool {
        let spos = match self.src[ci].iter().position(|&v| v == b) {
            Some(p) => p,
            None => return false,
        };
        let tpos = match self.tgt[ci].iter().position(|&v| v == w) {
            Some(p) => p,
            None => return false,
        };
        self.src[ci].remove(spos);
        self.tgt[ci].remove(tpos);
        self.src.insert(ci, vec![b]);
        self.tgt.insert(ci, vec![w]);
        true
    }

    /// Lockstep refinement by neighbor counts, up to `max_rounds`
    /// stabilization passes. Returns `false` when the sides diverge.
    fn refine(&mut self, g: &Graph, h: &Graph, max_rounds: usize) -> bool {
        let n = g.vertex_count();
        let mut count_s = vec![0usize; n];
        let mut count_t = vec![0usize; n];
        for _ in 0..max_rounds {
            let mut changed = false;
            let mut si = 0;
            while si < self.src.len() {
                // neighbor counts against splitter cell si
                for c in count_s.iter_mut() {
                    *c = 0;
                }
                for c in count_t.iter_mut() {
                    *c = 0;
                }
                for &u in &self.src[si] {
                    for w in g.neighbors(u) {
                        count_s[w] += 1;
                    }
                }
                for &u in &self.tgt[si] {
                    for w in h.neighbors(u) {
                        count_t[w] += 1;
                    }
                }
                let mut ci = 0;
                while ci < self.src.len() {
                    if self.src[ci].len() <= 1 {
                        ci += 1;
                        continue;
                    }
                    let mut by_key_s: std::collections::BTreeMap<usize, Vec<usize>> =
                        Default::default();
                    for &v in &self.src[ci] {
                        by_key_s.entry(count_s[v]).or_default().push(v);
                    }
                    let mut by_key_t: std::collections::BTreeMap<usize, Vec<usize>> =
                        Default::default();
                    for &v in &self.tgt[ci] {
                        by_key_t.entry(count_t[v]).or_default().push(v);
                    }
                    // the split signatures must match exactly on both sides
                    if by_key_s.len() != by_key_t.len()
                        || by_key_s
                            .iter()
                            .zip(&by_key_t)
                            .any(|((ks, vs), (kt, vt))| ks != kt || vs.len() != vt.len())
                    {
                        return false;
                    }
                    if by_key_s.len() > 1 {
                        let subcells_s: Vec<Vec<usize>> = by_key_s.into_values().collect();
                        let subcells_t: Vec<Vec<usize>> = by_key_t.into_values().collect();
                        let added = subcells_s.len() - 1;
                        self.src.splice(ci..=ci, subcells_s);
                        self.tgt.splice(ci..=ci, subcells_t);
                        changed = true;
                        if si > ci {
                            si += added;
                        }
                        ci += added + 1;
                    } else {
                        ci += 1;
                    }
                }
                si += 1;
            }
            if !changed {
                break;
            }
        }
        true
    }

    /// The bijection read off a discrete partition pair.
    fn extract_map(&self) -> Vec<usize> {
        let n: usize = self.src.iter().map(|c| c.len()).sum();
        let mut map = vec![0usize; n];
        for (cs, ct) in self.src.iter().zip(&self.tgt) {
            map[cs[0]] = ct[0];
        }
        map
    }
}

/// Backtracking over the partition pair; returns the first adjacency-checked
/// mapping found, exploring candidates in ascending vertex order.
fn backtrack(g: &Graph, h: &Graph, pp: &PairPartition, cfg: &SearchConfig) -> Option<Vec<usize>> {
    match pp.first_non_singleton() {
        None => {
            let map = pp.extract_map();
            let ok = g
                .edges()
                .all(|(u, v)| h.has_edge(map[u], map[v]));
            // partitions are aligned in size, so edge counts match and the
            // forward check suffices
            if ok {
                Some(map)
            } else {
                None
            }
        }
        Some(ci) => {
            let b = *pp.src[ci].iter().min().expect("non-empty cell");
            let mut candidates = pp.tgt[ci].clone();
            candidates.sort_unstable();
            for w in candidates {
                let mut child = pp.clone();
                if !child.individualize(ci, b, w) {
                    continue;
                }
                if !child.refine(g, h, cfg.refinement_rounds) {
                    continue;
                }
                if let Some(found) = backtrack(g, h, &child, cfg) {
                    return Some(found);
                }
            }
            None
        }
    }
}

/// Searches for one automorphism of `g` with the given forced images
/// (`point -> image`), typically a fixed base prefix plus one branch choice.
fn search_with_forced(
    g: &Graph,
    forced: &[(usize, usize)],
    cfg: &SearchConfig,
) -> Option<Permutation> {
    let mut pp = PairPartition::by_degree(g, g)?;
    if !pp.refine(g, g, cfg.refinement_rounds) {
        return None;
    }
    for &(b, w) in forced {
        let ci = pp.src.iter().position(|c| c.contains(&b))?;
        if !pp.individualize(ci, b, w) {
            return None;
        }
        if !pp.refine(g, g, cfg.refinement_rounds) {
            return None;
        }
    }
    backtrack(g, g, &pp, cfg)
        .map(|map| Permutation::from_images(map).expect("search yields a bijection"))
}

/// Computes the full automorphism group of `g`.
///
/// The canonical refinement path (always individualizing the smallest vertex
/// of the first non-singleton cell onto itself) yields base vertices
/// `b_0, b_1, ...` with candidate cells; for each level, one search per
/// candidate either produces an automorphism fixing the earlier base
/// vertices and moving `b_i` to the candidate, or proves there is none.
/// Every returned generator is verified edge-by-edge.
pub fn find_automorphism_group(g: &Graph, cfg: &SearchConfig) -> Result<PermGroup> {
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(PermGroup::trivial(n));
    }

    // canonical path: base vertices and their candidate cells
    let mut pp = PairPartition::by_degree(g, g).expect("a graph matches itself");
    pp.refine(g, g, cfg.refinement_rounds);
    let mut base_seq: Vec<(usize, Vec<usize>)> = Vec::new();
    while let Some(ci) = pp.first_non_singleton() {
        let b = *pp.src[ci].iter().min().expect("non-empty cell");
        let mut candidates = pp.src[ci].clone();
        candidates.sort_unstable();
        base_seq.push((b, candidates));
        assert!(pp.individualize(ci, b, b));
        assert!(pp.refine(g, g, cfg.refinement_rounds));
    }

    // accumulate generators deepest level first: the group grows from the
    // last point stabilizer outward
    let mut generators: Vec<Permutation> = Vec::new();
    for level in (0..base_seq.len()).rev() {
        let (b, candidates) = &base_seq[level];
        let prefix: Vec<(usize, usize)> =
            base_seq[..level].iter().map(|&(p, _)| (p, p)).collect();
        let group_so_far = PermGroup::new(n, generators.clone())?;

        let run_search = |w: usize| -> Option<Permutation> {
            let mut forced = prefix.clone();
            forced.push((*b, w));
            search_with_forced(g, &forced, cfg)
        };

        if cfg.parallel {
            let targets: Vec<usize> = candidates.iter().copied().filter(|&w| w != *b).collect();
            let results: Vec<(usize, Option<Permutation>)> = targets
                .par_iter()
                .map(|&w| (w, run_search(w)))
                .collect();
            // fold in canonical candidate order so the kept set matches the
            // sequential run
            let mut group = group_so_far;
            for (w, found) in results {
                if group.orbit(*b)?.contains(&w) {
                    continue;
                }
                if let Some(a) = found {
                    debug_assert!(is_graph_automorphism(g, &a));
                    generators.push(a.clone());
                    group = group.extend_by(a)?;
                }
            }
        } else {
            let mut group = group_so_far;
            for &w in candidates.iter() {
                if w == *b || group.orbit(*b)?.contains(&w) {
                    continue;
                }
                if let Some(a) = run_search(w) {
                    debug_assert!(is_graph_automorphism(g, &a));
                    generators.push(a.clone());
                    group = group.extend_by(a)?;
                }
            }
        }
    }

    for a in &generators {
        if !is_graph_automorphism(g, a) {
            return Err(Error::NotAutomorphism(
                "search produced a non-automorphism".into(),
            ));
        }
    }
    generators.sort();
    generators.dedup();
    PermGroup::new(n, generators)
}

/// Verification mode: enumerates every automorphism by plain backtracking
/// over images in vertex order, pruning only on degree and adjacency
/// consistency with already-assigned vertices. Independent of the partition
/// refinement machinery; the element list is in lexicographic image order.
pub fn enumerate_automorphisms(g: &Graph, element_cap: u64) -> Result<Vec<Permutation>> {
    if element_cap < 1 {
        return Err(Error::Input("element_cap must be at least 1".into()));
    }
    let n = g.vertex_count();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found: Vec<Permutation> = Vec::new();

    fn rec(
        g: &Graph,
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Permutation>,
        cap: u64,
    ) -> Result<()> {
        let n = g.vertex_count();
        if v == n {
            if found.len() as u64 >= cap {
                return Err(Error::ElementCap { cap });
            }
            found.push(Permutation::from_images(image.clone())?);
            return Ok(());
        }
        for w in 0..n {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w));
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            rec(g, v + 1, image, used, found, cap)?;
            used[w] = false;
            image[v] = usize::MAX;
        }
        Ok(())
    }

    rec(g, 0, &mut image, &mut used, &mut found, element_cap)?;
    Ok(found)
}

/// Finds an isomorphism from `g` onto `h` as an image table, if one exists.
/// Desk-scale only; the result is checked edge-by-edge.
pub fn find_isomorphism(g: &Graph, h: &Graph, cfg: &SearchConfig) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    if g.vertex_count() == 0 {
        return Some(Vec::new());
    }
    let mut pp = PairPartition::by_degree(g, h)?;
    if !pp.refine(g, h, cfg.refinement_rounds) {
        return None;
    }
    backtrack(g, h, &pp, cfg)
}

/// The rank-level permutation applying a base automorphism to every token:
/// the subset `{v_1, ..., v_k}` maps to `{theta(v_1), ..., theta(v_k)}`.
/// `theta` must be an automorphism of the base graph (checked), and the
/// result is verified to be an automorphism of the token graph.
pub fn induced_automorphism(theta: &Permutation, tg: &TokenGraph) -> Result<Permutation> {
    let n = tg.base().vertex_count();
    if theta.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            got: theta.degree(),
        });
    }
    if !is_graph_automorphism(tg.base(), theta) {
        return Err(Error::NotAutomorphism(
            "the given base permutation does not preserve base adjacency".into(),
        ));
    }
    let count = tg.vertex_count();
    let mut images = Vec::with_capacity(count);
    for r in 0..count {
        let mut mapped = 0u128;
        for v in mask_members(tg.mask_of(r)) {
            mapped |= 1u128 << theta.apply(v);
        }
        images.push(tg.rank_of(mapped)?);
    }
    let f = Permutation::from_images(images)?;
    if !is_graph_automorphism(tg.graph(), &f) {
        return Err(Error::NotAutomorphism(
            "induced map failed the token-graph adjacency check".into(),
        ));
    }
    Ok(f)
}

/// The subgroup of the token graph's automorphisms induced by a base group:
/// generated by the induced maps of the base generators. The induced
/// homomorphism is injective, so the order must equal the base order; this
/// is verified.
pub fn induced_subgroup(base_aut: &PermGroup, tg: &TokenGraph) -> Result<PermGroup> {
    if base_aut.degree() != tg.base().vertex_count() {
        return Err(Error::DegreeMismatch {
            expected: tg.base().vertex_count(),
            got: base_aut.degree(),
        });
    }
    let gens: Vec<Permutation> = base_aut
        .generators()
        .iter()
        .map(|theta| induced_automorphism(theta, tg))
        .collect::<Result<_>>()?;
    let induced = PermGroup::new(tg.vertex_count(), gens)?;
    if induced.order() != base_aut.order() {
        return Err(Error::NotAutomorphism(format!(
            "induced group order {} differs from base order {}",
            induced.order(),
            base_aut.order()
        )));
    }
    Ok(induced)
}

/// The complement involution on F_{n/2}: every subset maps to its complement.
/// Requires `n = 2k`; the result is verified to be an automorphism, an
/// involution, and fixed-point free. For `k >= 2` it is additionally checked
/// to lie outside the induced subgroup of the base automorphisms.
pub fn complement_involution(tg: &TokenGraph) -> Result<Permutation> {
    let n = tg.base().vertex_count();
    let k = tg.k();
    if n != 2 * k {
        return Err(Error::Input(format!(
            "complement involution needs n = 2k, got n={n}, k={k}"
        )));
    }
    let full: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    let count = tg.vertex_count();
    let mut images = Vec::with_capacity(count);
    for r in 0..count {
        images.push(tg.rank_of(full & !tg.mask_of(r))?);
    }
    let f = Permutation::from_images(images)?;
    if !is_graph_automorphism(tg.graph(), &f) {
        return Err(Error::NotAutomorphism(
            "complement map failed the adjacency check".into(),
        ));
    }
    if !f.then(&f).is_identity() {
        return Err(Error::NotAutomorphism("complement map is not an involution".into()));
    }
    if (0..count).any(|r| f.apply(r) == r) {
        return Err(Error::NotAutomorphism("complement map has a fixed point".into()));
    }
    if k >= 2 {
        let base_aut = find_automorphism_group(tg.base(), &SearchConfig::default())?;
        let induced = induced_subgroup(&base_aut, tg)?;
        if induced.contains(&f)? {
            return Err(Error::NotAutomorphism(
                "complement map is induced by a base automorphism".into(),
            ));
        }
    }
    Ok(f)
}

/// Per-run report for an automorphism computation; all labels 1-based.
#[derive(Serialize, Debug, Clone)]
pub struct AutReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub group_order: String,
    pub generators_cycles: Vec<String>,
    pub generators_images: Vec<Vec<usize>>,
    pub orbits: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl AutReport {
    pub fn new(g: &Graph, group: &PermGroup, wall_time_ms: Option<u64>) -> Self {
        AutReport {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            group_order: group.order().to_string(),
            generators_cycles: group.generators().iter().map(|p| p.cycle_notation()).collect(),
            generators_images: group.generators_one_based(),
            orbits: group
                .orbit_partition()
                .into_iter()
                .map(|class| class.into_iter().map(|v| v + 1).collect())
                .collect(),
            wall_time_ms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    fn aut_order(g: &Graph) -> u64 {
        find_automorphism_group(g, &SearchConfig::default())
            .unwrap()
            .order_u64()
            .unwrap()
    }

    #[test]
    fn path_and_cycle_orders() {
        let p5 = make_family(FamilySpec::Path { n: 5 }).unwrap();
        assert_eq!(aut_order(&p5), 2);
        let c7 = make_family(FamilySpec::Cycle { n: 7 }).unwrap();
        assert_eq!(aut_order(&c7), 14);
    }

    #[test]
    fn grid_counterexample_orders() {
        let grid = make_family(FamilySpec::Grid { rows: 2, cols: 3 }).unwrap();
        assert_eq!(aut_order(&grid), 4);
        let tg = TokenGraph::new(&grid, 2).unwrap();
        assert_eq!(aut_order(tg.graph()), 8);
    }

    #[test]
    fn search_matches_enumeration_on_small_graphs() {
        for (spec, k) in [
            (FamilySpec::Cycle { n: 4 }, 2),
            (FamilySpec::Star { total: 4 }, 2),
            (FamilySpec::Path { n: 6 }, 2),
            (FamilySpec::Wheel { rim: 5 }, 2),
        ] {
            let g = make_family(spec).unwrap();
            let tg = TokenGraph::new(&g, k).unwrap();
            let group = find_automorphism_group(tg.graph(), &SearchConfig::default()).unwrap();
            let all = enumerate_automorphisms(tg.graph(), 1 << 20).unwrap();
            assert_eq!(
                group.order_u64().unwrap(),
                all.len() as u64,
                "order mismatch for {spec:?} k={k}"
            );
            for a in &all {
                assert!(group.contains(a).unwrap());
            }
        }
    }

    #[test]
    fn parallel_equals_sequential() {
        let star = make_family(FamilySpec::Star { total: 7 }).unwrap();
        let tg = TokenGraph::new(&star, 2).unwrap();
        let seq = find_automorphism_group(tg.graph(), &SearchConfig::default()).unwrap();
        let par = find_automorphism_group(
            tg.graph(),
            &SearchConfig {
                parallel: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq.generators(), par.generators());
        assert_eq!(seq.order(), par.order());
        assert_eq!(seq.order_u64(), Some(720));
    }

    #[test]
    fn plain_degree_partition_is_still_correct() {
        let g = make_family(FamilySpec::Wheel { rim: 6 }).unwrap();
        let exact = find_automorphism_group(&g, &SearchConfig::default()).unwrap();
        let coarse = find_automorphism_group(
            &g,
            &SearchConfig {
                refinement_rounds: 0,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(exact.order(), coarse.order());
    }

    #[test]
    fn enumeration_cap_observed() {
        let k5 = make_family(FamilySpec::Complete { n: 5 }).unwrap();
        assert!(matches!(
            enumerate_automorphisms(&k5, 10),
            Err(Error::ElementCap { cap: 10 })
        ));
        assert_eq!(enumerate_automorphisms(&k5, 200).unwrap().len(), 120);
    }

    #[test]
    fn induced_maps() {
        let p6 = make_family(FamilySpec::Path { n: 6 }).unwrap();
        let tg = TokenGraph::new(&p6, 2).unwrap();

        let id = Permutation::identity(6);
        assert!(induced_automorphism(&id, &tg).unwrap().is_identity());

        let reversal = Permutation::from_images(vec![5, 4, 3, 2, 1, 0]).unwrap();
        let f = induced_automorphism(&reversal, &tg).unwrap();
        let r12 = tg.rank_of_labels(&[1, 2]).unwrap();
        let r56 = tg.rank_of_labels(&[5, 6]).unwrap();
        assert_eq!(f.apply(r12), r56);

        // a non-automorphism of the base is rejected
        let bad = Permutation::from_cycles(6, &[&[0, 2]]).unwrap();
        assert!(induced_automorphism(&bad, &tg).is_err());
    }

    #[test]
    fn induced_map_preserves_cycle_rings() {
        // rotation of C_7 maps each set {i, i+q} to another at the same
        // cyclic distance, so the distance classes are preserved setwise
        let c7 = make_family(FamilySpec::Cycle { n: 7 }).unwrap();
        let tg = TokenGraph::new(&c7, 2).unwrap();
        let rotation = Permutation::from_images((0..7).map(|i| (i + 1) % 7).collect()).unwrap();
        let f = induced_automorphism(&rotation, &tg).unwrap();
        let cyc_dist = |mask: u128| {
            let m = mask_members(mask);
            let d = m[1] - m[0];
            d.min(7 - d)
        };
        for r in 0..tg.vertex_count() {
            assert_eq!(cyc_dist(tg.mask_of(r)), cyc_dist(tg.mask_of(f.apply(r))));
        }
    }

    #[test]
    fn induced_homomorphism_law() {
        let star = make_family(FamilySpec::Star { total: 6 }).unwrap();
        let tg = TokenGraph::new(&star, 2).unwrap();
        let base = find_automorphism_group(&star, &SearchConfig::default()).unwrap();
        for a in base.generators() {
            for b in base.generators() {
                let fa = induced_automorphism(a, &tg).unwrap();
                let fb = induced_automorphism(b, &tg).unwrap();
                let fab = induced_automorphism(&a.then(b), &tg).unwrap();
                assert_eq!(fa.then(&fb), fab, "induced map is not a homomorphism");
            }
        }
    }

    #[test]
    fn induced_subgroup_orders() {
        // star base: S_{n-1} on the leaves
        let star7 = make_family(FamilySpec::Star { total: 7 }).unwrap();
        let t = TokenGraph::new(&star7, 2).unwrap();
        let base = find_automorphism_group(&star7, &SearchConfig::default()).unwrap();
        assert_eq!(base.order_u64(), Some(720));
        let ind = induced_subgroup(&base, &t).unwrap();
        assert_eq!(ind.order_u64(), Some(720));

        // paths induce order 2 at any k
        for (n, k) in [(5, 2), (6, 3), (7, 3)] {
            let p = make_family(FamilySpec::Path { n }).unwrap();
            let t = TokenGraph::new(&p, k).unwrap();
            let base = find_automorphism_group(&p, &SearchConfig::default()).unwrap();
            assert_eq!(induced_subgroup(&base, &t).unwrap().order_u64(), Some(2));
        }

        // C_5 induces the full dihedral group of order 10
        let c5 = make_family(FamilySpec::Cycle { n: 5 }).unwrap();
        let t = TokenGraph::new(&c5, 2).unwrap();
        let base = find_automorphism_group(&c5, &SearchConfig::default()).unwrap();
        assert_eq!(induced_subgroup(&base, &t).unwrap().order_u64(), Some(10));
    }

    #[test]
    fn complement_involution_cases() {
        // {1,2} -> {3,4} on F_2(K_4)
        let k4 = make_family(FamilySpec::Complete { n: 4 }).unwrap();
        let t = TokenGraph::new(&k4, 2).unwrap();
        let f = complement_involution(&t).unwrap();
        let r12 = t.rank_of_labels(&[1, 2]).unwrap();
        let r34 = t.rank_of_labels(&[3, 4]).unwrap();
        assert_eq!(f.apply(r12), r34);

        // not induced on F_2(C_4)
        let c4 = make_family(FamilySpec::Cycle { n: 4 }).unwrap();
        let t = TokenGraph::new(&c4, 2).unwrap();
        let f = complement_involution(&t).unwrap();
        let base = find_automorphism_group(&c4, &SearchConfig::default()).unwrap();
        assert_eq!(base.order_u64(), Some(8));
        let ind = induced_subgroup(&base, &t).unwrap();
        assert!(!ind.contains(&f).unwrap());

        // extending the induced group at least doubles the order
        let p6 = make_family(FamilySpec::Path { n: 6 }).unwrap();
        let t = TokenGraph::new(&p6, 3).unwrap();
        let f = complement_involution(&t).unwrap();
        let base = find_automorphism_group(&p6, &SearchConfig::default()).unwrap();
        let ind = induced_subgroup(&base, &t).unwrap();
        let extended = ind.extend_by(f).unwrap();
        assert!(extended.order_u64().unwrap() >= 4);

        // n != 2k is rejected
        let p5 = make_family(FamilySpec::Path { n: 5 }).unwrap();
        let t = TokenGraph::new(&p5, 2).unwrap();
        assert!(complement_involution(&t).is_err());
    }

    #[test]
    fn johnson_extension_order() {
        // induced S_4 inside F_2(K_4) extended by the complement involution
        let k4 = make_family(FamilySpec::Complete { n: 4 }).unwrap();
        let t = TokenGraph::new(&k4, 2).unwrap();
        let base = find_automorphism_group(&k4, &SearchConfig::default()).unwrap();
        let ind = induced_subgroup(&base, &t).unwrap();
        let f = complement_involution(&t).unwrap();
        assert_eq!(ind.extend_by(f).unwrap().order_u64(), Some(48));
    }

    #[test]
    fn isomorphism_finder() {
        let c6 = make_family(FamilySpec::Cycle { n: 6 }).unwrap();
        let star4 = make_family(FamilySpec::Star { total: 4 }).unwrap();
        let t = TokenGraph::new(&star4, 2).unwrap();
        let iso = find_isomorphism(t.graph(), &c6, &SearchConfig::default());
        assert!(iso.is_some(), "F_2(K_{{1,3}}) is a 6-cycle");
        let map = iso.unwrap();
        for (u, v) in t.graph().edges() {
            assert!(c6.has_edge(map[u], map[v]));
        }

        let p6 = make_family(FamilySpec::Path { n: 6 }).unwrap();
        assert!(find_isomorphism(&p6, &c6, &SearchConfig::default()).is_none());
    }

    #[test]
    fn cycle_automorphism_fixing_adjacent_vertices_is_identity() {
        for n in 4..=9 {
            let cn = make_family(FamilySpec::Cycle { n }).unwrap();
            for f in enumerate_automorphisms(&cn, 1 << 10).unwrap() {
                let fixes_adjacent_pair =
                    (0..n).any(|i| f.apply(i) == i && f.apply((i + 1) % n) == (i + 1) % n);
                if fixes_adjacent_pair {
                    assert!(f.is_identity(), "non-identity fixes an edge of C_{n}");
                }
            }
        }
    }

    #[test]
    fn aut_orbit_of_path_endpoints() {
        // Aut(F_2(P_6)) moves {1,2} only to {5,6}: apply both elements found
        // by the exhaustive oracle
        let p6 = make_family(FamilySpec::Path { n: 6 }).unwrap();
        let tg = TokenGraph::new(&p6, 2).unwrap();
        let all = enumerate_automorphisms(tg.graph(), 1 << 10).unwrap();
        assert_eq!(all.len(), 2);
        let r12 = tg.rank_of_labels(&[1, 2]).unwrap();
        let r56 = tg.rank_of_labels(&[5, 6]).unwrap();
        let mut orbit: Vec<usize> = all.iter().map(|a| a.apply(r12)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        assert_eq!(orbit, vec![r12.min(r56), r12.max(r56)]);

        let group = find_automorphism_group(tg.graph(), &SearchConfig::default()).unwrap();
        assert_eq!(group.orbit(r12).unwrap(), orbit);
    }
}
