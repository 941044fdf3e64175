//! Permutation groups given by generators, with exact order and membership
//! through a stabilizer chain (Schreier-Sims).

use crate::error::{Error, Result};
use crate::perm::Permutation;
use num_bigint::BigUint;
use std::collections::BTreeSet;
use std::sync::OnceLock;

/// One level of the stabilizer chain.
///
/// `gens` holds the generators first stored at this depth: each fixes every
/// earlier base point. The group acting at level `i` is generated by the
/// union of `gens` over levels `i..` (a deeper generator fixes a longer base
/// prefix, so it belongs to every shallower stabilizer as well); `orbit` and
/// `transversal` are computed under that union, with `transversal[p]` mapping
/// `base_point` to `p`.
#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            transversal,
        }
    }
}

/// A stabilizer chain. The group order is the product of the orbit sizes and
/// membership is decided by sifting.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            chain.insert(g.clone());
        }
        chain
    }

    fn insert(&mut self, p: Permutation) {
        if p.is_identity() {
            return;
        }
        let (residue, level) = self.strip_from(0, p);
        if residue.is_identity() {
            return;
        }
        self.store(level, residue);
        // the new generator is visible to every level down to `level`
        for j in (0..=level).rev() {
            self.complete_level(j);
        }
    }

    /// Sifts `p` through levels `start..`, returning the residue and the
    /// level at which sifting stopped (`levels.len()` when it ran through).
    fn strip_from(&self, start: usize, mut p: Permutation) -> (Permutation, usize) {
        for level in start..self.levels.len() {
            let lv = &self.levels[level];
            let image = p.apply(lv.base_point);
            match &lv.transversal[image] {
                None => return (p, level),
                Some(t) => {
                    if image != lv.base_point {
                        p = p.then(&t.inverse());
                    }
                }
            }
        }
        (p, self.levels.len())
    }

    /// Appends `g` to the generator list at `level`, creating the level (with
    /// base point = first point `g` moves) when it lies past the end.
    fn store(&mut self, level: usize, g: Permutation) {
        if level == self.levels.len() {
            let b = g.first_moved().expect("non-identity permutation moves a point");
            self.levels.push(Level::new(b, self.degree));
        }
        self.levels[level].gens.push(g);
    }

    /// Re-establishes the chain property at `level`, assuming all deeper
    /// levels are complete: recompute the orbit, then sift every Schreier
    /// generator; residues are stored deeper and those levels re-completed
    /// (deepest first) before scanning continues.
    fn complete_level(&mut self, level: usize) {
        self.rebuild_orbit(level);
        // Schreier's lemma needs one generating set of this level's group;
        // the set at entry stays one even while deeper levels grow.
        let gens = self.effective_gens(level);
        let orbit = self.levels[level].orbit.clone();
        for &p in &orbit {
            let t_p = self.levels[level].transversal[p]
                .clone()
                .expect("orbit point has a transversal entry");
            for s in &gens {
                let q = s.apply(p);
                let t_q = self.levels[level].transversal[q]
                    .clone()
                    .expect("orbit is closed under the generators");
                let schreier = t_p.then(s).then(&t_q.inverse());
                if schreier.is_identity() {
                    continue;
                }
                let (residue, lvl) = self.strip_from(level + 1, schreier);
                if !residue.is_identity() {
                    self.store(lvl, residue);
                    for j in (level + 1..=lvl).rev() {
                        self.complete_level(j);
                    }
                }
            }
        }
    }

    fn effective_gens(&self, level: usize) -> Vec<Permutation> {
        self.levels[level..]
            .iter()
            .flat_map(|lv| lv.gens.iter().cloned())
            .collect()
    }

    /// Recomputes orbit and transversal of a level from the effective
    /// generators. Deterministic: points are expanded in discovery order,
    /// generators applied in list order.
    fn rebuild_orbit(&mut self, level: usize) {
        let gens = self.effective_gens(level);
        let lv = &mut self.levels[level];
        lv.transversal = vec![None; self.degree];
        lv.transversal[lv.base_point] = Some(Permutation::identity(self.degree));
        lv.orbit = vec![lv.base_point];
        let mut idx = 0;
        while idx < lv.orbit.len() {
            let p = lv.orbit[idx];
            idx += 1;
            for s in &gens {
                let q = s.apply(p);
                if lv.transversal[q].is_none() {
                    let t = lv.transversal[p].as_ref().unwrap().then(s);
                    lv.transversal[q] = Some(t);
                    lv.orbit.push(q);
                }
            }
        }
    }

    pub fn order(&self) -> BigUint {
        let mut order = BigUint::from(1u32);
        for lv in &self.levels {
            order *= BigUint::from(lv.orbit.len());
        }
        order
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        let (residue, _) = self.strip_from(0, p.clone());
        residue.is_identity()
    }

    pub fn base_points(&self) -> Vec<usize> {
        self.levels.iter().map(|lv| lv.base_point).collect()
    }
}

/// A permutation group defined by its generators. The stabilizer chain is
/// built on first use and cached; afterwards all queries are read-only.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: OnceLock::new(),
        }
    }
}

impl PermGroup {
    /// Group generated by `generators`, all of the same degree.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators))
    }

    /// Exact order of the generated group.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as `u64` for small groups; `None` if it does not fit.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(self.order()).ok()
    }

    /// Membership test for `p` in the generated group.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    /// Orbit of a point under the group, sorted ascending.
    pub fn orbit(&self, v: usize) -> Result<Vec<usize>> {
        if v >= self.degree {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.degree,
            });
        }
        let (orbit, _) = self.orbit_with_transversal(v);
        let mut sorted = orbit;
        sorted.sort_unstable();
        Ok(sorted)
    }

    /// The orbit partition of all points, each class sorted, classes ordered
    /// by their minimum.
    pub fn orbit_partition(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut classes = Vec::new();
        for v in 0..self.degree {
            if seen[v] {
                continue;
            }
            let orbit = self.orbit(v).expect("point in range");
            for &p in &orbit {
                seen[p] = true;
            }
            classes.push(orbit);
        }
        classes
    }

    fn orbit_with_transversal(&self, v: usize) -> (Vec<usize>, Vec<Option<Permutation>>) {
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[v] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![v];
        let mut idx = 0;
        while idx < orbit.len() {
            let p = orbit[idx];
            idx += 1;
            for s in &self.generators {
                let q = s.apply(p);
                if transversal[q].is_none() {
                    transversal[q] = Some(transversal[p].as_ref().unwrap().then(s));
                    orbit.push(q);
                }
            }
        }
        (orbit, transversal)
    }

    /// Point stabilizer, generated by the Schreier generators of the orbit
    /// of `v`. Satisfies `order = |orbit(v)| * |stabilizer(v)|`.
    pub fn stabilizer(&self, v: usize) -> Result<PermGroup> {
        if v >= self.degree {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.degree,
            });
        }
        let (orbit, transversal) = self.orbit_with_transversal(v);
        let mut gens = BTreeSet::new();
        for &p in &orbit {
            let t_p = transversal[p].as_ref().unwrap();
            for s in &self.generators {
                let q = s.apply(p);
                let t_q = transversal[q].as_ref().unwrap();
                let schreier = t_p.then(s).then(&t_q.inverse());
                if !schreier.is_identity() {
                    gens.insert(schreier);
                }
            }
        }
        PermGroup::new(self.degree, gens.into_iter().collect())
    }

    /// Equality as concrete permutation groups on the same point set: equal
    /// orders and mutual containment of generators.
    pub fn equals(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        if self.order() != other.order() {
            return Ok(false);
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Subgroup test: every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The group generated by this group's generators plus `p`.
    pub fn extend_by(&self, p: Permutation) -> Result<PermGroup> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: p.degree(),
            });
        }
        let mut gens = self.generators.clone();
        gens.push(p);
        PermGroup::new(self.degree, gens)
    }

    /// Base points of the cached chain (diagnostics).
    pub fn base_points(&self) -> Vec<usize> {
        self.chain().base_points()
    }

    /// Generators as 1-based image tables, the JSON report form.
    pub fn generators_one_based(&self) -> Vec<Vec<usize>> {
        self.generators.iter().map(|g| g.to_one_based()).collect()
    }
}
