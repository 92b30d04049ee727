//! Permutation groups with stabilizer-chain data.
//!
//! A [`PermGroup`] carries a deterministic Schreier–Sims chain, giving exact
//! order, membership and element enumeration. On top of that sit the
//! backtrack searches used throughout the crate: centralizers, normalizers,
//! subgroup conjugacy with witness, and bottom-up subgroup enumeration.
//!
//! All searches are deterministic: base points, transversals and branch
//! orders are fixed by point order, so two runs over the same inputs produce
//! identical groups, witnesses and orderings.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::perm::{PermError, Permutation};

/// Hard cap for explicit element enumeration; guards against accidentally
/// expanding a group that is far beyond desk scale.
const MAX_ELEMENT_ENUM: u128 = 1 << 21;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("generators must share a degree")]
    MixedDegrees,
    #[error("cannot infer degree from an empty generator list")]
    EmptyGenerators,
    #[error("group of order {order} is not contained in the ambient group")]
    NotASubgroup { order: u128 },
    #[error("enumeration budget exceeded: {count} intermediate subgroups (cap {cap})")]
    BudgetExceeded { count: usize, cap: usize },
    #[error("subgroup lattice enumeration supports order <= {cap}, got {order}")]
    LatticeTooLarge { order: u128, cap: u128 },
}

#[derive(Clone)]
struct ChainLevel {
    base: usize,
    /// Generators of the stabilizer of all earlier base points.
    gens: Vec<Permutation>,
    /// `transversal[y]` maps the base point to `y`; keys sorted.
    transversal: BTreeMap<usize, Permutation>,
}

impl ChainLevel {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = BTreeMap::new();
        transversal.insert(base, Permutation::identity(degree));
        ChainLevel {
            base,
            gens: Vec::new(),
            transversal,
        }
    }

    fn rebuild_transversal(&mut self, degree: usize) {
        let mut transversal = BTreeMap::new();
        transversal.insert(self.base, Permutation::identity(degree));
        let mut frontier = vec![self.base];
        while let Some(x) = frontier.pop() {
            let u = transversal[&x].clone();
            for s in &self.gens {
                let y = s.apply(x);
                if !transversal.contains_key(&y) {
                    let v = s.compose(&u).expect("equal degrees");
                    transversal.insert(y, v);
                    frontier.push(y);
                }
            }
        }
        self.transversal = transversal;
    }
}

/// Deterministic Schreier–Sims: levels are verified bottom-up; whenever a
/// Schreier generator fails to sift, its residue is recorded at the levels
/// it belongs to and verification restarts at the deepest modified level.
fn build_chain(
    degree: usize,
    gens: &[Permutation],
    preferred_base: &[usize],
) -> Vec<ChainLevel> {
    let mut chain: Vec<ChainLevel> = Vec::new();
    for &b in preferred_base {
        if !chain.iter().any(|lvl| lvl.base == b) {
            chain.push(ChainLevel::new(degree, b));
        }
    }
    let live_gens: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();
    if live_gens.is_empty() {
        return chain;
    }
    if chain.is_empty() {
        let b = (0..degree)
            .find(|&x| live_gens.iter().any(|g| g.apply(x) != x))
            .expect("non-identity generator moves a point");
        chain.push(ChainLevel::new(degree, b));
    }
    for g in live_gens {
        chain[0].gens.push(g.clone());
    }

    // Sift from `level`; returns the residue and the level where it stopped.
    fn sift_from(chain: &[ChainLevel], level: usize, g: Permutation) -> (Permutation, usize) {
        let mut g = g;
        for (j, lvl) in chain.iter().enumerate().skip(level) {
            let y = g.apply(lvl.base);
            match lvl.transversal.get(&y) {
                Some(u) => g = u.inverse().compose(&g).expect("equal degrees"),
                None => return (g, j),
            }
        }
        let end = chain.len();
        (g, end)
    }

    let mut i = chain.len() - 1;
    'outer: loop {
        chain[i].rebuild_transversal(degree);
        let points: Vec<usize> = chain[i].transversal.keys().copied().collect();
        for y in points {
            let gens_here = chain[i].gens.clone();
            for s in &gens_here {
                let u = chain[i].transversal[&y].clone();
                let target = chain[i].transversal[&s.apply(y)].clone();
                let schreier = target
                    .inverse()
                    .compose(s)
                    .unwrap()
                    .compose(&u)
                    .expect("equal degrees");
                let (residue, fail_level) = sift_from(&chain, i + 1, schreier);
                if residue.is_identity() {
                    continue;
                }
                if fail_level == chain.len() {
                    let b = (0..degree)
                        .find(|&x| residue.apply(x) != x)
                        .expect("non-identity residue moves a point");
                    chain.push(ChainLevel::new(degree, b));
                }
                for lvl in chain.iter_mut().take(fail_level + 1).skip(i + 1) {
                    lvl.gens.push(residue.clone());
                }
                chain[fail_level].rebuild_transversal(degree);
                i = fail_level;
                continue 'outer;
            }
        }
        if i == 0 {
            break;
        }
        i -= 1;
    }
    chain
}

/// A finite permutation group given by generators, with stabilizer-chain
/// data for exact order, membership and search.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Vec<ChainLevel>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: Vec::new(),
        }
    }

    /// Generates the group spanned by `gens` on `degree` points.
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<Self, GroupError> {
        Self::generate_with_base(degree, gens, &[])
    }

    /// Generates a group from a non-empty generator list, inferring the
    /// degree from the first generator.
    pub fn from_generators(gens: &[Permutation]) -> Result<Self, GroupError> {
        let first = gens.first().ok_or(GroupError::EmptyGenerators)?;
        Self::generate(first.degree(), gens)
    }

    /// Generates the group with the stabilizer-chain base forced to start
    /// with the given points, in order.
    pub fn generate_with_base(
        degree: usize,
        gens: &[Permutation],
        preferred_base: &[usize],
    ) -> Result<Self, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::MixedDegrees);
            }
        }
        let chain = build_chain(degree, gens, preferred_base);
        let generators = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        Ok(PermGroup {
            degree,
            generators,
            chain,
        })
    }

    /// The symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![1, 2]]).unwrap());
        }
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap());
        }
        Self::generate(n, &gens).unwrap()
    }

    /// The alternating group on `n` points.
    pub fn alternating(n: usize) -> Self {
        let mut gens = Vec::new();
        for i in 1..n.saturating_sub(1) {
            gens.push(Permutation::from_cycles(n, &[vec![i, i + 1, i + 2]]).unwrap());
        }
        Self::generate(n, &gens).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.chain
            .iter()
            .map(|lvl| lvl.transversal.len() as u128)
            .product()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    fn sift(&self, g: &Permutation) -> Permutation {
        let mut g = g.clone();
        for lvl in &self.chain {
            let y = g.apply(lvl.base);
            match lvl.transversal.get(&y) {
                Some(u) => g = u.inverse().compose(&g).expect("equal degrees"),
                None => return g,
            }
        }
        g
    }

    pub fn is_member(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).is_identity()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.is_member(g))
    }

    /// Set equality as subgroups of the symmetric group on `degree` points.
    pub fn same_group_as(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// All elements, sorted in the canonical element order.
    ///
    /// Panics when the order exceeds the enumeration cap; every in-crate use
    /// stays far below it.
    pub fn elements(&self) -> Vec<Permutation> {
        let order = self.order();
        assert!(
            order <= MAX_ELEMENT_ENUM,
            "refusing to enumerate {order} elements"
        );
        let mut elements = vec![Permutation::identity(self.degree)];
        for lvl in self.chain.iter().rev() {
            let mut next = Vec::with_capacity(elements.len() * lvl.transversal.len());
            for u in lvl.transversal.values() {
                for e in &elements {
                    next.push(u.compose(e).expect("equal degrees"));
                }
            }
            elements = next;
        }
        elements.sort_unstable();
        elements
    }

    /// The canonical key of the subgroup: its sorted element list.
    pub fn canonical_key(&self) -> Vec<Permutation> {
        self.elements()
    }

    /// Rebuilds a group from an explicit element list, choosing a small,
    /// deterministic generating set greedily.
    pub fn from_elements(degree: usize, elements: &[Permutation]) -> Self {
        let mut sorted: Vec<&Permutation> = elements.iter().collect();
        sorted.sort_unstable();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut group = PermGroup::trivial(degree);
        for e in sorted {
            if !group.is_member(e) {
                gens.push(e.clone());
                group = PermGroup::generate(degree, &gens).unwrap();
            }
        }
        debug_assert_eq!(group.order(), elements.len() as u128);
        group
    }

    /// Orbit partition of `{0, …, degree-1}`: each orbit sorted ascending,
    /// orbits ordered by (size descending, smallest point).
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of_gens(self.degree, &self.generators)
    }

    /// Points moved by the group, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut moved = vec![false; self.degree];
        for g in &self.generators {
            for x in g.support() {
                moved[x] = true;
            }
        }
        (0..self.degree).filter(|&x| moved[x]).collect()
    }

    /// The stabilizer of a point, as a generated group.
    pub fn point_stabilizer(&self, point: usize) -> PermGroup {
        let rebased =
            PermGroup::generate_with_base(self.degree, &self.generators, &[point]).unwrap();
        let gens: Vec<Permutation> = rebased
            .chain
            .iter()
            .skip(1)
            .flat_map(|lvl| lvl.gens.iter().cloned())
            .collect();
        PermGroup::generate(self.degree, &gens).unwrap()
    }

    /// The subgroup of even permutations (the kernel of the sign map),
    /// of index 1 or 2.
    pub fn even_subgroup(&self) -> PermGroup {
        if self.generators.iter().all(|g| g.is_even()) {
            return self.clone();
        }
        // Append two mirror points swapped by odd elements; the even part is
        // then the stabilizer of the first mirror point.
        let ext_degree = self.degree + 2;
        let ext_gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| {
                let mut ext = g.extend_to(ext_degree);
                if !g.is_even() {
                    let swap = Permutation::from_cycles(
                        ext_degree,
                        &[vec![ext_degree - 1, ext_degree]],
                    )
                    .unwrap();
                    ext = swap.compose(&ext).unwrap();
                }
                ext
            })
            .collect();
        let ext_group =
            PermGroup::generate_with_base(ext_degree, &ext_gens, &[self.degree]).unwrap();
        let gens: Vec<Permutation> = ext_group
            .chain
            .iter()
            .skip(1)
            .flat_map(|lvl| lvl.gens.iter())
            .map(|g| g.restrict_to(self.degree))
            .collect();
        PermGroup::generate(self.degree, &gens).unwrap()
    }

    /// True if some element of the group is odd.
    pub fn has_odd_element(&self) -> bool {
        self.generators.iter().any(|g| !g.is_even())
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩ of order {}", self.order())
    }
}

/// Orbit partition of the point set under a generator list.
pub fn orbits_of_gens(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut orbits = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    frontier.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    orbits
}

// ---------------------------------------------------------------------------
// Backtrack searches over the ambient chain.
// ---------------------------------------------------------------------------

/// Partial point map with forward and backward images, used to propagate
/// commutation constraints during centralizer search.
#[derive(Clone)]
struct PartialMap {
    fwd: Vec<Option<u8>>,
    bwd: Vec<Option<u8>>,
}

impl PartialMap {
    fn new(degree: usize) -> Self {
        PartialMap {
            fwd: vec![None; degree],
            bwd: vec![None; degree],
        }
    }

    /// Records `x -> y` and closes under `g∘s = s∘g` for all `s` in `qgens`.
    /// Returns false on conflict.
    fn assign_and_propagate(&mut self, x: usize, y: usize, qgens: &[Permutation]) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match (self.fwd[x], self.bwd[y]) {
                (Some(cur), _) if cur as usize != y => return false,
                (_, Some(cur)) if cur as usize != x => return false,
                (Some(_), Some(_)) => continue,
                _ => {}
            }
            self.fwd[x] = Some(y as u8);
            self.bwd[y] = Some(x as u8);
            for s in qgens {
                queue.push((s.apply(x), s.apply(y)));
            }
        }
        true
    }
}

/// `{g ∈ ambient : g q = q g for every generator q of `q`}`, as a group.
///
/// Backtracks over the ambient chain; every tentative base-point image is
/// propagated along the orbits of `q`, which cuts the search hard whenever
/// `q` has few orbits or many constraints.
pub fn centralizer(ambient: &PermGroup, q: &PermGroup) -> Result<PermGroup, GroupError> {
    if !q.is_subgroup_of(ambient) {
        return Err(GroupError::NotASubgroup { order: q.order() });
    }
    if q.generators().is_empty() {
        return Ok(ambient.clone());
    }
    let qgens: Vec<Permutation> = q.generators().to_vec();
    let mut found: Vec<Permutation> = Vec::new();
    let prefix = Permutation::identity(ambient.degree());
    centralizer_dfs(
        ambient,
        &qgens,
        0,
        &prefix,
        &PartialMap::new(ambient.degree()),
        &mut found,
    );
    Ok(PermGroup::from_elements(ambient.degree(), &found))
}

fn centralizer_dfs(
    ambient: &PermGroup,
    qgens: &[Permutation],
    level: usize,
    prefix: &Permutation,
    pmap: &PartialMap,
    found: &mut Vec<Permutation>,
) {
    if level == ambient.chain.len() {
        if qgens.iter().all(|s| {
            prefix.compose(s).expect("equal degrees") == s.compose(prefix).expect("equal degrees")
        }) {
            found.push(prefix.clone());
        }
        return;
    }
    let lvl = &ambient.chain[level];
    for u in lvl.transversal.values() {
        let image = prefix.apply(u.apply(lvl.base));
        if let Some(forced) = pmap.fwd[lvl.base] {
            if forced as usize != image {
                continue;
            }
        }
        let mut next_map = pmap.clone();
        if !next_map.assign_and_propagate(lvl.base, image, qgens) {
            continue;
        }
        let next_prefix = prefix.compose(u).expect("equal degrees");
        centralizer_dfs(ambient, qgens, level + 1, &next_prefix, &next_map, found);
    }
}

/// `Z(g)`, the center of a group.
pub fn center(g: &PermGroup) -> PermGroup {
    centralizer(g, g).expect("a group is a subgroup of itself")
}

/// Tracks a partial assignment for conjugation searches: images must map the
/// orbit partition of `a` onto that of `b`, orbit by orbit.
#[derive(Clone)]
struct OrbitMapState {
    point_image: Vec<Option<u8>>,
    point_taken: Vec<bool>,
    /// orbit of `a` -> orbit of `b`
    orbit_image: Vec<Option<usize>>,
    orbit_taken: Vec<bool>,
}

struct ConjSearch<'a> {
    ambient: &'a PermGroup,
    a_orbit_of: Vec<usize>,
    b_orbit_of: Vec<usize>,
    a_orbit_sizes: Vec<usize>,
    b_orbit_sizes: Vec<usize>,
    a_gens: Vec<Permutation>,
    b: &'a PermGroup,
    find_all: bool,
    found: Vec<Permutation>,
}

impl ConjSearch<'_> {
    fn leaf_ok(&self, g: &Permutation) -> bool {
        self.a_gens
            .iter()
            .all(|s| self.b.is_member(&s.conjugate_by(g).expect("equal degrees")))
    }

    fn dfs(&mut self, level: usize, prefix: &Permutation, state: &OrbitMapState) -> bool {
        if !self.find_all && !self.found.is_empty() {
            return true;
        }
        if level == self.ambient.chain.len() {
            if self.leaf_ok(prefix) {
                self.found.push(prefix.clone());
                return !self.find_all;
            }
            return false;
        }
        let lvl = &self.ambient.chain[level];
        for u in lvl.transversal.values() {
            let x = lvl.base;
            let y = prefix.apply(u.apply(x));
            if let Some(img) = state.point_image[x] {
                if img as usize != y {
                    continue;
                }
            } else if state.point_taken[y]
                || self.a_orbit_sizes[self.a_orbit_of[x]] != self.b_orbit_sizes[self.b_orbit_of[y]]
            {
                continue;
            }
            let (oa, ob) = (self.a_orbit_of[x], self.b_orbit_of[y]);
            match state.orbit_image[oa] {
                Some(mapped) if mapped != ob => continue,
                None if state.orbit_taken[ob] => continue,
                _ => {}
            }
            let mut next = state.clone();
            next.point_image[x] = Some(y as u8);
            next.point_taken[y] = true;
            next.orbit_image[oa] = Some(ob);
            next.orbit_taken[ob] = true;
            let next_prefix = prefix.compose(u).expect("equal degrees");
            if self.dfs(level + 1, &next_prefix, &next) {
                return true;
            }
        }
        false
    }
}

fn orbit_index_of_points(degree: usize, orbits: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
    let mut of = vec![0usize; degree];
    let mut sizes = vec![0usize; orbits.len()];
    for (i, orbit) in orbits.iter().enumerate() {
        sizes[i] = orbit.len();
        for &x in orbit {
            of[x] = i;
        }
    }
    (of, sizes)
}

fn conjugation_search(
    ambient: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    find_all: bool,
) -> Result<Vec<Permutation>, GroupError> {
    for (name, sub) in [("a", a), ("b", b)] {
        if !sub.is_subgroup_of(ambient) {
            let _ = name;
            return Err(GroupError::NotASubgroup { order: sub.order() });
        }
    }
    let a_orbits = a.orbits();
    let b_orbits = b.orbits();
    let (a_orbit_of, a_orbit_sizes) = orbit_index_of_points(ambient.degree(), &a_orbits);
    let (b_orbit_of, b_orbit_sizes) = orbit_index_of_points(ambient.degree(), &b_orbits);
    let mut search = ConjSearch {
        ambient,
        a_orbit_of,
        b_orbit_of,
        a_orbit_sizes,
        b_orbit_sizes,
        a_gens: a.generators().to_vec(),
        b,
        find_all,
        found: Vec::new(),
    };
    let state = OrbitMapState {
        point_image: vec![None; ambient.degree()],
        point_taken: vec![false; ambient.degree()],
        orbit_image: vec![None; a_orbits.len()],
        orbit_taken: vec![false; b_orbits.len()],
    };
    search.dfs(0, &Permutation::identity(ambient.degree()), &state);
    Ok(search.found)
}

/// `N_ambient(q) = {g ∈ ambient : g q g⁻¹ = q}`.
pub fn normalizer(ambient: &PermGroup, q: &PermGroup) -> Result<PermGroup, GroupError> {
    let elements = conjugation_search(ambient, q, q, true)?;
    Ok(PermGroup::from_elements(ambient.degree(), &elements))
}

/// Invariants screened before a conjugacy backtrack: group order, multiset
/// of element cycle types, multiset of orbit sizes.
fn conjugacy_invariants(g: &PermGroup) -> (u128, Vec<Vec<usize>>, Vec<usize>) {
    let mut types: Vec<Vec<usize>> = g.elements().iter().map(|e| e.cycle_type()).collect();
    types.sort_unstable();
    let mut orbit_sizes: Vec<usize> = g.orbits().iter().map(|o| o.len()).collect();
    orbit_sizes.sort_unstable();
    (g.order(), types, orbit_sizes)
}

/// Decides whether `a` and `b` are conjugate under `ambient`, returning a
/// conjugating witness `g` with `g a g⁻¹ = b` when they are.
pub fn is_conjugate_subgroup(
    ambient: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
) -> Result<Option<Permutation>, GroupError> {
    if conjugacy_invariants(a) != conjugacy_invariants(b) {
        for (_, sub) in [("a", a), ("b", b)] {
            if !sub.is_subgroup_of(ambient) {
                return Err(GroupError::NotASubgroup { order: sub.order() });
            }
        }
        return Ok(None);
    }
    let found = conjugation_search(ambient, a, b, false)?;
    Ok(found.into_iter().next())
}

// ---------------------------------------------------------------------------
// Subgroup enumeration.
// ---------------------------------------------------------------------------

/// Budget for intermediate subgroup counts during lattice enumeration.
#[derive(Debug, Clone, Copy)]
pub struct EnumBudget {
    pub max_subgroups: usize,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_subgroups: 200_000,
        }
    }
}

/// A conjugacy class of subgroups of some ambient group.
#[derive(Clone)]
pub struct SubgroupClass {
    pub representative: PermGroup,
    /// Number of enumerated subgroups of the lattice fused into this class.
    pub fused_count: usize,
    pub canonical_key: Vec<Permutation>,
}

/// Every subgroup of `p`, each listed once, ordered by (order, canonical
/// key). Walks the lattice bottom-up by single-element extensions.
pub fn all_subgroups(p: &PermGroup, budget: EnumBudget) -> Result<Vec<PermGroup>, GroupError> {
    let degree = p.degree();
    let p_elements = p.elements();
    let trivial_key: Vec<Vec<u8>> = vec![Permutation::identity(degree).images().to_vec()];
    let mut seen: BTreeMap<Vec<Vec<u8>>, PermGroup> = BTreeMap::new();
    seen.insert(trivial_key.clone(), PermGroup::trivial(degree));
    let mut frontier = vec![trivial_key];
    while let Some(key) = frontier.pop() {
        let group = seen[&key].clone();
        let group_order = group.order();
        for g in &p_elements {
            if g.is_identity() || group.is_member(g) {
                continue;
            }
            let mut gens = group.generators().to_vec();
            gens.push(g.clone());
            let bigger = PermGroup::generate(degree, &gens)?;
            debug_assert!(bigger.order() > group_order);
            let new_key: Vec<Vec<u8>> = bigger
                .elements()
                .iter()
                .map(|e| e.images().to_vec())
                .collect();
            if !seen.contains_key(&new_key) {
                if seen.len() >= budget.max_subgroups {
                    return Err(GroupError::BudgetExceeded {
                        count: seen.len() + 1,
                        cap: budget.max_subgroups,
                    });
                }
                seen.insert(new_key.clone(), bigger);
                frontier.push(new_key);
            }
        }
    }
    let mut subgroups: Vec<PermGroup> = seen.into_values().collect();
    subgroups.sort_by_key(|h| (h.order(), h.canonical_key()));
    Ok(subgroups)
}

/// Largest lattice the conjugacy-class enumeration accepts.
const LATTICE_ORDER_CAP: u128 = 256;

/// All subgroups of `p`, deduplicated under `ambient`-conjugacy and ordered
/// by (order, canonical key of the class representative). Requires
/// `|p| <= 256`.
pub fn subgroups_up_to_conjugacy(
    p: &PermGroup,
    ambient: &PermGroup,
    budget: EnumBudget,
) -> Result<Vec<SubgroupClass>, GroupError> {
    if p.order() > LATTICE_ORDER_CAP {
        return Err(GroupError::LatticeTooLarge {
            order: p.order(),
            cap: LATTICE_ORDER_CAP,
        });
    }
    if !p.is_subgroup_of(ambient) {
        return Err(GroupError::NotASubgroup { order: p.order() });
    }
    let subgroups = all_subgroups(p, budget)?;
    fuse_into_classes(subgroups, ambient)
}

/// Fuses an (order, key)-sorted subgroup list into ambient-conjugacy
/// classes, keeping the smallest-key member of each class as representative.
pub fn fuse_into_classes(
    subgroups: Vec<PermGroup>,
    ambient: &PermGroup,
) -> Result<Vec<SubgroupClass>, GroupError> {
    let mut classes: Vec<(SubgroupClass, (u128, Vec<Vec<usize>>, Vec<usize>))> = Vec::new();
    for h in subgroups {
        let inv = conjugacy_invariants(&h);
        let mut matched = false;
        for (class, class_inv) in classes.iter_mut() {
            if *class_inv == inv
                && is_conjugate_subgroup(ambient, &h, &class.representative)?.is_some()
            {
                class.fused_count += 1;
                matched = true;
                break;
            }
        }
        if !matched {
            let key = h.canonical_key();
            classes.push((
                SubgroupClass {
                    representative: h,
                    fused_count: 1,
                    canonical_key: key,
                },
                inv,
            ));
        }
    }
    let mut out: Vec<SubgroupClass> = classes.into_iter().map(|(c, _)| c).collect();
    out.sort_by(|a, b| {
        a.representative
            .order()
            .cmp(&b.representative.order())
            .then_with(|| a.canonical_key.cmp(&b.canonical_key))
    });
    Ok(out)
}
