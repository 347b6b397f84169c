//! Permutation groups with lazily built stabilizer chains.
//!
//! The chain is a deterministic Schreier-Sims structure: base points are the
//! smallest moved points encountered, orbits are BFS in generator order, so
//! two builds from the same generator list produce identical chains. Orders
//! and membership tests all derive from the chain.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

/// Per-level transversals bigger than this (in stored point images) are not
/// cached as whole permutations; coset representatives are rebuilt by walking
/// the Schreier tree instead.
const REP_CACHE_BUDGET: usize = 4_000_000;

#[derive(Debug)]
struct ChainLevel {
    base: u32,
    /// Strong generators installed at this level. They fix the base points of
    /// all shallower levels. The group of level i is generated by the stored
    /// generators of levels i and deeper.
    stored: Vec<Permutation>,
    /// Effective generating set (this level's stored generators plus all
    /// deeper ones), snapshotted when the orbit was last computed.
    gens: Vec<Permutation>,
    /// Orbit of `base` under `gens`, BFS order, `orbit[0] == base`.
    orbit: Vec<u32>,
    /// point -> (generator index into `gens`, parent point) along the BFS tree.
    tree: HashMap<u32, (usize, u32)>,
    /// Cached coset representatives aligned with `orbit`, when small enough.
    reps: Option<Vec<Permutation>>,
}

impl ChainLevel {
    fn new(base: u32) -> Self {
        ChainLevel {
            base,
            stored: Vec::new(),
            gens: Vec::new(),
            orbit: vec![base],
            tree: HashMap::new(),
            reps: None,
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.tree.clear();
        self.orbit.push(self.base);
        let mut in_orbit = vec![false; degree];
        in_orbit[self.base as usize] = true;
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for (gi, g) in self.gens.iter().enumerate() {
                let y = g.apply(x);
                if !in_orbit[y as usize] {
                    in_orbit[y as usize] = true;
                    self.orbit.push(y);
                    self.tree.insert(y, (gi, x));
                }
            }
        }
        self.reps = None;
        if self.orbit.len() * degree <= REP_CACHE_BUDGET {
            let reps = self.orbit.iter().map(|&p| self.walk_rep(p, degree)).collect();
            self.reps = Some(reps);
        }
    }

    fn in_orbit(&self, point: u32) -> bool {
        point == self.base || self.tree.contains_key(&point)
    }

    /// Position of `point` within `orbit`, if present.
    fn orbit_position(&self, point: u32) -> Option<usize> {
        self.orbit.iter().position(|&p| p == point)
    }

    fn walk_rep(&self, point: u32, degree: usize) -> Permutation {
        let mut path = Vec::new();
        let mut x = point;
        while x != self.base {
            let &(gi, parent) = self.tree.get(&x).expect("point not in orbit");
            path.push(gi);
            x = parent;
        }
        let mut rep = Permutation::identity(degree);
        for &gi in path.iter().rev() {
            rep = rep.compose(&self.gens[gi]);
        }
        rep
    }

    /// Coset representative mapping `base` to `point`.
    fn rep(&self, point: u32, degree: usize) -> Permutation {
        if let Some(reps) = &self.reps {
            let idx = self
                .orbit_position(point)
                .expect("point not in orbit");
            return reps[idx].clone();
        }
        self.walk_rep(point, degree)
    }
}

/// Base and strong generating set for a permutation group.
#[derive(Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<ChainLevel>,
    /// None when the product of orbit sizes overflows u128.
    order: Option<u128>,
}

impl StabilizerChain {
    /// Deterministic Schreier-Sims from a generator list.
    pub fn build(degree: usize, generators: &[Permutation]) -> StabilizerChain {
        let mut builder = StabilizerChain {
            degree,
            levels: Vec::new(),
            order: Some(1),
        };
        for g in generators {
            if !g.is_identity() {
                let (lvl, residue) = builder.sift_from(0, g.clone());
                if !residue.is_identity() {
                    builder.add_generator(lvl, residue);
                }
            }
        }
        builder.order = builder.compute_order();
        builder
    }

    fn compute_order(&self) -> Option<u128> {
        let mut order: u128 = 1;
        for level in &self.levels {
            order = order.checked_mul(level.orbit.len() as u128)?;
        }
        Some(order)
    }

    /// Sift `g` through levels `from..`; returns the level where sifting
    /// stalled (== levels.len() when it fell off the end) and the residue.
    fn sift_from(&self, from: usize, g: Permutation) -> (usize, Permutation) {
        let mut residue = g;
        for i in from..self.levels.len() {
            let level = &self.levels[i];
            let delta = residue.apply(level.base);
            if delta == level.base {
                continue;
            }
            if !level.in_orbit(delta) {
                return (i, residue);
            }
            let rep = level.rep(delta, self.degree);
            residue = residue.compose(&rep.inverse());
        }
        (self.levels.len(), residue)
    }

    /// Install `g` as a strong generator at `level` (it must fix all earlier
    /// base points), then restore the chain condition below.
    fn add_generator(&mut self, level: usize, g: Permutation) {
        if level == self.levels.len() {
            let base = g
                .smallest_moved_point()
                .expect("identity residue filtered by caller");
            self.levels.push(ChainLevel::new(base));
        }
        self.levels[level].gens.push(g);
        let degree = self.degree;
        self.levels[level].recompute_orbit(degree);
        self.close_level(level);
    }

    /// Verify Schreier generators of `level` sift to identity, extending
    /// deeper levels until they do.
    fn close_level(&mut self, level: usize) {
        loop {
            let mut dirty = false;
            let orbit = self.levels[level].orbit.clone();
            let n_gens = self.levels[level].gens.len();
            'pairs: for &delta in &orbit {
                let u = self.levels[level].rep(delta, self.degree);
                for gi in 0..n_gens {
                    let s = self.levels[level].gens[gi].clone();
                    let gamma = s.apply(delta);
                    let u_gamma = self.levels[level].rep(gamma, self.degree);
                    let schreier = u.compose(&s).compose(&u_gamma.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (j, residue) = self.sift_from(level + 1, schreier);
                    if !residue.is_identity() {
                        self.add_generator(j.max(level + 1), residue);
                        dirty = true;
                        break 'pairs;
                    }
                }
            }
            if !dirty {
                return;
            }
        }
    }

    pub fn order(&self) -> Result<u128> {
        self.order.ok_or(Error::OrderOverflow)
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Membership by sifting. Assumes matching degree.
    pub fn member(&self, g: &Permutation) -> bool {
        let (lvl, residue) = self.sift_from(0, g.clone());
        lvl == self.levels.len() && residue.is_identity()
    }

    /// Transversal sizes, shallowest level first.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Orbit point sets per level (used by invariant tests).
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        self.levels.iter().map(|l| l.orbit.clone()).collect()
    }

    fn element_at(&self, indices: &[usize]) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for (i, level) in self.levels.iter().enumerate().rev() {
            let point = level.orbit[indices[i]];
            g = g.compose(&level.rep(point, self.degree));
        }
        g
    }

    /// Deterministic stream of all group elements.
    pub fn element_iter(&self) -> ChainElements<'_> {
        ChainElements::new(self)
    }

    /// Uniform random element: independent uniform transversal choice per level.
    pub fn random_element<R: rand::Rng>(&self, rng: &mut R) -> Permutation {
        let indices: Vec<usize> = self
            .levels
            .iter()
            .map(|l| rng.gen_range(0..l.orbit.len()))
            .collect();
        self.element_at(&indices)
    }
}

/// Streaming enumeration of chain elements in a fixed mixed-radix order.
///
/// Emits exactly `order` distinct elements; the shallowest level's index
/// varies fastest so suffix products can be reused.
pub struct ChainElements<'a> {
    chain: &'a StabilizerChain,
    indices: Vec<usize>,
    /// suffix[i] = product of representatives for levels deeper than or equal to i+1.
    suffix: Vec<Permutation>,
    done: bool,
}

impl<'a> ChainElements<'a> {
    fn new(chain: &'a StabilizerChain) -> Self {
        let k = chain.levels.len();
        let mut it = ChainElements {
            chain,
            indices: vec![0; k],
            suffix: vec![Permutation::identity(chain.degree); k + 1],
            done: false,
        };
        it.rebuild_suffixes_from(k);
        it
    }

    /// Recompute suffix products for levels `0..upto` after an odometer step.
    fn rebuild_suffixes_from(&mut self, upto: usize) {
        for i in (0..upto).rev() {
            let level = &self.chain.levels[i];
            let rep = level.rep(level.orbit[self.indices[i]], self.chain.degree);
            self.suffix[i] = self.suffix[i + 1].compose(&rep);
        }
    }
}

impl<'a> Iterator for ChainElements<'a> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = self.suffix.first().cloned().unwrap_or_else(|| {
            Permutation::identity(self.chain.degree)
        });
        // odometer step: level 0 fastest
        let k = self.chain.levels.len();
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                return Some(out);
            }
            self.indices[i] += 1;
            if self.indices[i] < self.chain.levels[i].orbit.len() {
                break;
            }
            self.indices[i] = 0;
            i += 1;
        }
        self.rebuild_suffixes_from(i + 1);
        Some(out)
    }
}

/// A permutation group given by generators, with a lazily built chain.
pub struct PermGroup {
    degree: usize,
    generators: Arc<Vec<Permutation>>,
    chain: OnceLock<Arc<StabilizerChain>>,
}

impl PermGroup {
    /// Generators must share `degree`; an empty list yields the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        Ok(PermGroup {
            degree,
            generators: Arc::new(generators),
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The stabilizer chain, built on first use. Race-safe: concurrent callers
    /// observe the same chain.
    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| Arc::new(StabilizerChain::build(self.degree, &self.generators)))
    }

    pub fn order(&self) -> Result<u128> {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        Ok(self.chain().member(g))
    }

    /// All elements in deterministic chain order. Refuses above `cap`.
    pub fn elements(&self, cap: u128) -> Result<Vec<Permutation>> {
        let order = self.order()?;
        if order > cap {
            return Err(Error::OrderExceedsCap { order, cap });
        }
        Ok(self.chain().element_iter().collect())
    }

    pub fn random_element<R: rand::Rng>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(rng)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        for (i, a) in gens.iter().enumerate() {
            for b in gens.iter().skip(i + 1) {
                if a.compose(b) != b.compose(a) {
                    return false;
                }
            }
        }
        true
    }

    /// Serialize in `.grp` text form (1-based cycles).
    pub fn to_grp_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "degree {}", self.degree);
        for g in self.generators.iter() {
            let _ = writeln!(out, "{g}");
        }
        out
    }

    /// Parse `.grp` text: `degree <n>` then one generator per line in 1-based
    /// cycle notation. Blank lines and `#` comments are ignored.
    pub fn parse_grp(text: &str) -> Result<PermGroup> {
        Self::parse_grp_with_degree_cap(text, crate::caps::Caps::default().degree_cap)
    }

    pub fn parse_grp_with_degree_cap(text: &str, degree_cap: usize) -> Result<PermGroup> {
        let mut degree: Option<usize> = None;
        let mut gens = Vec::new();
        for raw in text.lines() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("degree") {
                if degree.is_some() {
                    return Err(Error::Parse("duplicate degree line".into()));
                }
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad degree line: {line}")))?;
                if n == 0 {
                    return Err(Error::Parse("degree must be positive".into()));
                }
                if n > degree_cap {
                    return Err(Error::DegreeExceedsCap {
                        degree: n,
                        cap: degree_cap,
                    });
                }
                degree = Some(n);
                continue;
            }
            let n = degree.ok_or_else(|| {
                Error::Parse("generator line before degree line".into())
            })?;
            gens.push(Permutation::parse_cycles(n, line)?);
        }
        let degree = degree.ok_or_else(|| Error::Parse("missing degree line".into()))?;
        PermGroup::new(degree, gens)
    }
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let cloned = PermGroup {
            degree: self.degree,
            generators: Arc::clone(&self.generators),
            chain: OnceLock::new(),
        };
        if let Some(chain) = self.chain.get() {
            let _ = cloned.chain.set(Arc::clone(chain));
        }
        cloned
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, {} gens{})",
            self.degree,
            self.generators.len(),
            match self.chain.get().map(|c| c.order) {
                Some(Some(o)) => format!(", order {o}"),
                _ => String::new(),
            }
        )
    }
}

/// Faithful permutation representation of `G/N` on the right cosets of `N`.
///
/// Cosets are identified by canonical representatives chosen greedily along
/// `N`'s stabilizer chain, so point numbering is deterministic.
pub struct CosetAction {
    /// Canonical representative per coset point, BFS order from `N·1`.
    pub coset_reps: Vec<Permutation>,
    /// The quotient as a permutation group on the coset points.
    pub image: PermGroup,
    n_chain: Arc<StabilizerChain>,
    rep_index: HashMap<Permutation, u32>,
    source_degree: usize,
}

impl CosetAction {
    /// Image of an ambient element under the quotient map.
    pub fn apply(&self, g: &Permutation) -> Result<Permutation> {
        if g.degree() != self.source_degree {
            return Err(Error::DegreeMismatch {
                expected: self.source_degree,
                found: g.degree(),
            });
        }
        let mut images = Vec::with_capacity(self.coset_reps.len());
        for rep in &self.coset_reps {
            let target = canonical_coset_rep(&self.n_chain, &rep.compose(g));
            let idx = *self
                .rep_index
                .get(&target)
                .expect("coset action closed under multiplication");
            images.push(idx);
        }
        Permutation::from_images(images)
    }

    /// Map a list of ambient generators to a subgroup of the image.
    pub fn image_subgroup(&self, gens: &[Permutation]) -> Result<PermGroup> {
        let mapped: Result<Vec<Permutation>> = gens.iter().map(|g| self.apply(g)).collect();
        PermGroup::new(self.image.degree(), mapped?)
    }
}

/// Canonical representative of the coset `N·g`: at each chain level the orbit
/// point sending the level's base to the smallest possible image is chosen.
fn canonical_coset_rep(n_chain: &StabilizerChain, g: &Permutation) -> Permutation {
    let mut current = g.clone();
    for level in &n_chain.levels {
        let mut best_point = level.orbit[0];
        let mut best_image = current.apply(best_point);
        for &p in &level.orbit[1..] {
            let img = current.apply(p);
            if img < best_image {
                best_image = img;
                best_point = p;
            }
        }
        if best_point != level.base {
            let rep = level.rep(best_point, n_chain.degree);
            current = rep.compose(&current);
        }
    }
    current
}

/// Permutation action of `g` on the right cosets of the normal subgroup `n`.
///
/// `n` must be normal in `g` (checked) and the index must not exceed
/// `index_cap`.
pub fn coset_action(g: &PermGroup, n: &PermGroup, index_cap: u128) -> Result<CosetAction> {
    if n.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: n.degree(),
        });
    }
    // normality of <n> in <g> via generator conjugation
    for gg in g.generators() {
        for ng in n.generators() {
            if !n.chain().member(&ng.conjugate_by(gg)) {
                return Err(Error::NotNormal);
            }
        }
    }
    let g_order = g.order()?;
    let n_order = n.order()?;
    let index = g_order / n_order;
    if index > index_cap {
        return Err(Error::IndexExceedsCap {
            index,
            cap: index_cap,
        });
    }
    let n_chain = Arc::new(StabilizerChain::build(n.degree(), n.generators()));
    let identity_rep = canonical_coset_rep(&n_chain, &Permutation::identity(g.degree()));
    let mut coset_reps = vec![identity_rep.clone()];
    let mut rep_index: HashMap<Permutation, u32> = HashMap::new();
    rep_index.insert(identity_rep, 0);
    let mut head = 0;
    while head < coset_reps.len() {
        let rep = coset_reps[head].clone();
        head += 1;
        for s in g.generators() {
            let target = canonical_coset_rep(&n_chain, &rep.compose(s));
            if !rep_index.contains_key(&target) {
                rep_index.insert(target.clone(), coset_reps.len() as u32);
                coset_reps.push(target);
            }
        }
    }
    if coset_reps.len() as u128 != index {
        // n's generators did not actually generate a subgroup of g
        return Err(Error::NotSubgroup);
    }
    let mut image_gens = Vec::with_capacity(g.generators().len());
    for s in g.generators() {
        let mut images = Vec::with_capacity(coset_reps.len());
        for rep in &coset_reps {
            let target = canonical_coset_rep(&n_chain, &rep.compose(s));
            images.push(rep_index[&target]);
        }
        image_gens.push(Permutation::from_images(images)?);
    }
    let image = PermGroup::new(coset_reps.len(), image_gens)?;
    Ok(CosetAction {
        coset_reps,
        image,
        n_chain,
        rep_index,
        source_degree: g.degree(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, text: &str) -> Permutation {
        Permutation::parse_cycles(degree, text).unwrap()
    }

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(degree, gens.iter().map(|t| p(degree, t)).collect()).unwrap()
    }

    /// Independent ground truth: product closure by BFS, no chain involved.
    pub(crate) fn closure_oracle(gens: &[Permutation], degree: usize) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(degree)];
        let mut seen: std::collections::HashSet<Permutation> = elems.iter().cloned().collect();
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            head += 1;
            for s in gens {
                let y = x.compose(s);
                if seen.insert(y.clone()) {
                    elems.push(y);
                }
            }
        }
        elems
    }

    #[test]
    fn s3_order() {
        let g = group(3, &["(1,2)", "(1,2,3)"]);
        assert_eq!(g.order().unwrap(), 6);
    }

    #[test]
    fn a5_order_matches_enumeration() {
        let g = group(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        assert_eq!(g.order().unwrap(), 60);
        let oracle = closure_oracle(g.generators(), 5);
        assert_eq!(oracle.len(), 60);
    }

    #[test]
    fn a7_order() {
        let g = group(7, &["(1,2,3)", "(1,2,3,4,5,6,7)"]);
        assert_eq!(g.order().unwrap(), 2520);
    }

    #[test]
    fn trivial_chain_from_identity_generators() {
        let g = PermGroup::new(4, vec![Permutation::identity(4)]).unwrap();
        assert_eq!(g.order().unwrap(), 1);
        assert!(g.is_trivial());
    }

    #[test]
    fn membership_a4() {
        let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
        assert_eq!(a4.order().unwrap(), 12);
        assert!(!a4.contains(&p(4, "(1,2)")).unwrap());
        assert!(a4.contains(&p(4, "(1,2,3)")).unwrap());
        assert!(a4.contains(&p(4, "(1,2)(3,4)")).unwrap());
    }

    #[test]
    fn membership_matches_enumeration_s3() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let all = closure_oracle(s3.generators(), 3);
        assert_eq!(all.len(), 6);
        for g in &all {
            assert!(s3.contains(g).unwrap());
        }
    }

    #[test]
    fn elements_deterministic_and_capped() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let e1 = s3.elements(10).unwrap();
        let e2 = s3.elements(10).unwrap();
        assert_eq!(e1, e2);
        assert_eq!(e1.len(), 6);
        let distinct: std::collections::HashSet<_> = e1.iter().collect();
        assert_eq!(distinct.len(), 6);

        let a5 = group(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        assert_eq!(a5.elements(100).unwrap().len(), 60);
        match a5.elements(50) {
            Err(Error::OrderExceedsCap { order, cap }) => {
                assert_eq!(order, 60);
                assert_eq!(cap, 50);
            }
            other => panic!("expected OrderExceedsCap, got {other:?}"),
        }
    }

    #[test]
    fn sifting_random_words() {
        let a5 = group(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        let mut rng = crate::test_rng(7);
        use rand::Rng;
        for _ in 0..100 {
            let mut w = Permutation::identity(5);
            for _ in 0..rng.gen_range(1..12) {
                let gi = rng.gen_range(0..a5.generators().len());
                w = w.compose(&a5.generators()[gi]);
            }
            assert!(a5.contains(&w).unwrap());
        }
    }

    #[test]
    fn random_elements_are_members_and_seeded() {
        let a5 = group(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        let mut r1 = crate::test_rng(3);
        let mut r2 = crate::test_rng(3);
        for _ in 0..20 {
            let x = a5.random_element(&mut r1);
            let y = a5.random_element(&mut r2);
            assert_eq!(x, y);
            assert!(a5.contains(&x).unwrap());
        }
    }

    #[test]
    fn coset_action_s4_mod_v4() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let v4 = group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let act = coset_action(&s4, &v4, 1000).unwrap();
        assert_eq!(act.image.degree(), 6);
        assert_eq!(act.image.order().unwrap(), 6);
        // kernel contains V4: its generators map to the identity
        for n in v4.generators() {
            assert!(act.apply(n).unwrap().is_identity());
        }
        // nonabelian order 6 on 6 points: S3 quotient
        assert!(!act.image.is_abelian());
    }

    #[test]
    fn coset_action_trivial_kernel_is_regular() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let triv = PermGroup::trivial(3);
        let act = coset_action(&s3, &triv, 100).unwrap();
        assert_eq!(act.image.degree(), 6);
        assert_eq!(act.image.order().unwrap(), 6);
    }

    #[test]
    fn coset_action_index_two() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let a3 = group(3, &["(1,2,3)"]);
        let act = coset_action(&s3, &a3, 100).unwrap();
        assert_eq!(act.image.order().unwrap(), 2);
    }

    #[test]
    fn coset_action_rejects_non_normal() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let c2 = group(3, &["(1,2)"]);
        assert!(matches!(
            coset_action(&s3, &c2, 100),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn coset_action_quotient_homomorphism() {
        // spot-check: map respects products
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let v4 = group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let act = coset_action(&s4, &v4, 1000).unwrap();
        let mut rng = crate::test_rng(11);
        for _ in 0..25 {
            let a = s4.random_element(&mut rng);
            let b = s4.random_element(&mut rng);
            let lhs = act.apply(&a.compose(&b)).unwrap();
            let rhs = act.apply(&a).unwrap().compose(&act.apply(&b).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn grp_roundtrip() {
        let g = group(4, &["(1,2)", "(1,2,3,4)"]);
        let text = g.to_grp_text();
        let back = PermGroup::parse_grp(&text).unwrap();
        assert_eq!(back.degree(), 4);
        assert_eq!(back.order().unwrap(), 24);
    }

    #[test]
    fn grp_parse_comments_and_blanks() {
        let text = "# symmetric group on 3 points\ndegree 3\n\n(1,2)  # a transposition\n(1,2,3)\n";
        let g = PermGroup::parse_grp(text).unwrap();
        assert_eq!(g.order().unwrap(), 6);
    }

    #[test]
    fn grp_parse_errors() {
        assert!(PermGroup::parse_grp("(1,2)\ndegree 3\n").is_err());
        assert!(PermGroup::parse_grp("degree 0\n").is_err());
        assert!(PermGroup::parse_grp("").is_err());
        assert!(matches!(
            PermGroup::parse_grp_with_degree_cap("degree 500\n", 100),
            Err(Error::DegreeExceedsCap { .. })
        ));
    }

    #[test]
    fn clone_shares_chain() {
        let g = group(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        let _ = g.order().unwrap();
        let h = g.clone();
        assert_eq!(h.order().unwrap(), 60);
    }
}
