//! Enumeration and classification of self-centralizing 2-subgroup
//! candidates in alternating groups.
//!
//! A candidate for a block of weight `w` of the alternating group on `n`
//! points is a subgroup `Q` of the fixed Sylow 2-subgroup `Q_{2w}` on the
//! first `2w` points that contains `Z(Q_{2w})` and its own `Q_{2w}`-
//! centralizer, is self-centralizing in the alternating group on those
//! `2w` points, and whose classification data `(x, d)` is consistent with
//! the weight-`w` case table. Candidates are listed up to conjugacy in the
//! alternating group on `n` points, with each class repeated according to
//! the number of Brauer pairs it carries.
//!
//! The classification data: `2x` is the size of the fixed-point-free
//! support of `Q`, and `d ∈ {1,2}` is the index of the alternating-group
//! centralizer of `Q` inside its symmetric-group centralizer on that
//! support.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::blocks::factorial;
use crate::group::{
    all_subgroups, center, centralizer, is_conjugate_subgroup, normalizer, EnumBudget, GroupError,
    PermGroup,
};
use crate::perm::Permutation;
use crate::sylow::{legendre_valuation, sylow_alt_group};

/// Splits the point set into the union of non-singleton orbits and the
/// fixed points, both ascending and 0-based.
pub fn support_split(q: &PermGroup) -> (Vec<usize>, Vec<usize>) {
    let mut moved = Vec::new();
    let mut fixed = Vec::new();
    for orbit in q.orbits() {
        if orbit.len() >= 2 {
            moved.extend(orbit);
        } else {
            fixed.extend(orbit);
        }
    }
    moved.sort_unstable();
    fixed.sort_unstable();
    (moved, fixed)
}

/// The symmetric group on an explicit point subset, inside the ambient
/// degree.
fn symmetric_on(points: &[usize], degree: usize) -> PermGroup {
    let mut gens = Vec::new();
    if points.len() >= 2 {
        gens.push(
            Permutation::from_cycles(degree, &[vec![points[0] + 1, points[1] + 1]]).unwrap(),
        );
    }
    if points.len() >= 3 {
        gens.push(
            Permutation::from_cycles(degree, &[points.iter().map(|&x| x + 1).collect()]).unwrap(),
        );
    }
    PermGroup::generate(degree, &gens).unwrap()
}

/// The alternating group on an explicit point subset.
fn alternating_on(points: &[usize], degree: usize) -> PermGroup {
    let mut gens = Vec::new();
    for window in points.windows(3) {
        gens.push(
            Permutation::from_cycles(degree, &[window.iter().map(|&x| x + 1).collect()]).unwrap(),
        );
    }
    PermGroup::generate(degree, &gens).unwrap()
}

/// True iff the centralizer of `q` in the alternating group on `omega_hat`
/// is exactly `Z(q)`. Errors when `q` moves points outside `omega_hat`.
pub fn sc_condition(q: &PermGroup, omega_hat: &[usize]) -> Result<bool, GroupError> {
    let support = q.support();
    if support.iter().any(|x| !omega_hat.contains(x)) {
        return Err(GroupError::NotASubgroup { order: q.order() });
    }
    let alt = alternating_on(omega_hat, q.degree());
    let c = centralizer(&alt, q)?;
    Ok(c.same_group_as(&center(q)))
}

/// `(x, d, |Z(q)|)`: half the fixed-point-free support size, the index of
/// the alternating centralizer in the symmetric centralizer on that
/// support, and the center order.
pub fn classification_data(q: &PermGroup) -> (u32, u8, u128) {
    let (moved, _) = support_split(q);
    debug_assert!(moved.len() % 2 == 0);
    let x = (moved.len() / 2) as u32;
    let sym = symmetric_on(&moved, q.degree());
    let c_sym = centralizer(&sym, q).expect("q acts on its own support");
    let d = if c_sym.has_odd_element() { 2 } else { 1 };
    let z_order = center(q).order();
    (x, d, z_order)
}

/// Case table for a subgroup with data `(x, d)` against a block of weight
/// `w` of the alternating group on `n` points. Returns `(w_tilde,
/// multiplicity)` when the configuration occurs, `None` otherwise.
///
/// For `n ∈ {2x, 2x+1}` the pair lives in the principal block, forcing
/// `w = x` with multiplicity 1. For `n ≥ 2x+2` the weight satisfies
/// `w = x + w̃`: the extra-hook case `w̃ = 1` occurs exactly for odd `w`
/// with `d = 1`, and among the `w̃ = 0` cases the pair below the block
/// fails to be invariant exactly for even `w` with `d = 1`, doubling the
/// pair count of that class.
pub fn case_table(x: u32, d: u8, n: u32, w: u32) -> Option<(u8, u8)> {
    if 2 * w > n {
        return None;
    }
    // Support constraint: x = w for even w, x ∈ {w-1, w} for odd w.
    let x_ok = if w % 2 == 0 {
        x == w
    } else {
        x + 1 == w || x == w
    };
    if !x_ok {
        return None;
    }
    if n == 2 * x || n == 2 * x + 1 {
        if w == x {
            Some((0, 1))
        } else {
            None
        }
    } else {
        match (w.checked_sub(x), w % 2, d) {
            (Some(0), 0, 1) => Some((0, 2)),
            (Some(0), 0, 2) => Some((0, 1)),
            (Some(0), 1, 2) => Some((0, 1)),
            (Some(1), 1, 1) => Some((1, 1)),
            _ => None,
        }
    }
}

/// All `(w, w_tilde, multiplicity)` triples consistent with the given
/// classification data on `n` points, smallest weight first.
pub fn compatible_weights(x: u32, d: u8, n: u32) -> Vec<(u32, u8, u8)> {
    let mut out = Vec::new();
    for w in x..=x + 1 {
        if let Some((w_tilde, mult)) = case_table(x, d, n, w) {
            out.push((w, w_tilde, mult));
        }
    }
    out
}

/// The weights, extra-hook markers and pair multiplicities a subgroup can
/// carry on `n` points, derived from its own classification data. A
/// subgroup with even `x` and `d = 1` sitting below `n - 2x >= 2` fixed
/// points is consistent with two adjacent weights, so the result is a
/// list rather than a single triple.
pub fn weight_and_multiplicity(q: &PermGroup, n: u32) -> Vec<(u32, u8, u8)> {
    let (x, d, _) = classification_data(q);
    compatible_weights(x, d, n)
}

/// Isomorphism-type hint for small 2-groups: named types up to order 8,
/// abelian invariants beyond, order tag otherwise.
pub fn iso_hint(q: &PermGroup) -> String {
    let order = q.order();
    if order == 1 {
        return "1".to_string();
    }
    let elements = q.elements();
    let max_order = elements.iter().map(|e| e.order()).max().unwrap();
    let abelian = center(q).order() == order;
    if max_order as u128 == order {
        return format!("C{order}");
    }
    if abelian {
        // For an abelian 2-group the counts of elements of order dividing
        // 2^k pin the invariant factors.
        let mut remaining: Vec<u128> = Vec::new();
        let mut factors: Vec<u128> = Vec::new();
        let mut k = 1u32;
        let mut prev_log = 0u32;
        while (1u128 << prev_log) < order || !remaining.is_empty() {
            let count = elements
                .iter()
                .filter(|e| {
                    let o = e.order() as u128;
                    (1u128 << k) % o == 0
                })
                .count() as u128;
            let log = count.ilog2();
            let new_factors = log - prev_log;
            remaining.push(new_factors as u128);
            prev_log = log;
            if (1u128 << log) == order {
                break;
            }
            k += 1;
        }
        // remaining[k-1] = number of invariant factors of order >= 2^k.
        for (i, _) in remaining.iter().enumerate() {
            let this = remaining[i];
            let next = if i + 1 < remaining.len() {
                remaining[i + 1]
            } else {
                0
            };
            for _ in 0..this.saturating_sub(next) {
                factors.push(1u128 << (i + 1));
            }
        }
        factors.sort_unstable_by(|a, b| b.cmp(a));
        if factors.iter().all(|&f| f == 2) {
            if factors.len() == 2 {
                return "V4".to_string();
            }
            return format!("C2^{}", factors.len());
        }
        return factors
            .iter()
            .map(|f| format!("C{f}"))
            .collect::<Vec<_>>()
            .join("x");
    }
    if order == 8 {
        let involutions = elements.iter().filter(|e| e.order() == 2).count();
        return if involutions == 5 { "D8" } else { "Q8" }.to_string();
    }
    format!("order {order} nonabelian")
}

/// Orbit structure data behind the defect bound: orbit sizes, point
/// stabilizer orders, pairwise non-isomorphism of the orbits as q-sets,
/// and detection of the two exceptional configurations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitAnalysis {
    /// Sizes of the non-singleton orbits, descending.
    pub orbit_sizes: Vec<usize>,
    /// Stabilizer orders, aligned with `orbit_sizes`.
    pub stabilizer_orders: Vec<u128>,
    pub pairwise_noniso: bool,
    pub exceptional_kind: ExceptionalKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionalKind {
    None,
    /// A cyclic group with one regular orbit and one orbit of size 2.
    CyclicPlusTwo,
    /// The Klein four-group with three orbits of size 2.
    V4ThreeTwos,
}

impl fmt::Display for ExceptionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionalKind::None => write!(f, "none"),
            ExceptionalKind::CyclicPlusTwo => write!(f, "cyclic_plus_two"),
            ExceptionalKind::V4ThreeTwos => write!(f, "v4_three_twos"),
        }
    }
}

/// Two orbits of `q` are isomorphic as q-sets exactly when their point
/// stabilizers are conjugate in `q`.
pub fn orbit_analysis(q: &PermGroup) -> OrbitAnalysis {
    let orbits: Vec<Vec<usize>> = q.orbits().into_iter().filter(|o| o.len() >= 2).collect();
    let stabs: Vec<PermGroup> = orbits
        .iter()
        .map(|o| q.point_stabilizer(o[0]))
        .collect();
    let orbit_sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    let stabilizer_orders: Vec<u128> = stabs.iter().map(|s| s.order()).collect();
    let mut pairwise_noniso = true;
    'outer: for i in 0..stabs.len() {
        for j in i + 1..stabs.len() {
            if orbit_sizes[i] == orbit_sizes[j]
                && is_conjugate_subgroup(q, &stabs[i], &stabs[j])
                    .expect("stabilizers are subgroups")
                    .is_some()
            {
                pairwise_noniso = false;
                break 'outer;
            }
        }
    }
    let order = q.order();
    let cyclic = !q.is_trivial() && q.elements().iter().any(|e| e.order() as u128 == order);
    let mut sorted_sizes = orbit_sizes.clone();
    sorted_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let exceptional_kind = if cyclic && sorted_sizes == vec![order as usize, 2] {
        ExceptionalKind::CyclicPlusTwo
    } else if order == 4
        && q.elements().iter().all(|e| e.order() <= 2)
        && sorted_sizes == vec![2, 2, 2]
    {
        ExceptionalKind::V4ThreeTwos
    } else {
        ExceptionalKind::None
    };
    OrbitAnalysis {
        orbit_sizes,
        stabilizer_orders,
        pairwise_noniso,
        exceptional_kind,
    }
}

/// One table row: a conjugacy class of self-centralizing candidates with
/// its classification data.
#[derive(Debug, Clone)]
pub struct ScCandidate {
    pub n: u32,
    pub w: u32,
    pub representative: PermGroup,
    pub canonical_key: Vec<Permutation>,
    pub q_order: u128,
    pub z_order: u128,
    pub x: u32,
    pub d: u8,
    pub w_tilde: u8,
    pub multiplicity: u8,
    pub exceptional: bool,
    pub iso_hint: String,
}

impl ScCandidate {
    /// The tuple the published tables pin down.
    pub fn data(&self) -> (u128, u128, u32, u8) {
        (self.q_order, self.z_order, self.x, self.d)
    }
}

/// `|Q_{2w}|`, the defect-group order of a weight-`w` block of an
/// alternating group.
pub fn alt_defect_order(w: u32) -> BigUint {
    if w == 0 {
        BigUint::one()
    } else {
        BigUint::from(2u32).pow(legendre_valuation(2 * w as usize, 2) - 1)
    }
}

/// Verifies the bound mechanism on one candidate: `2w ≤ |Q| + 2` and
/// `|Q_{2w}| ≤ (|Q|+2)!/2`.
pub fn bound_check(c: &ScCandidate) -> bool {
    let q = c.q_order;
    2 * c.w as u128 <= q + 2 && alt_defect_order(c.w) <= factorial(q as u64 + 2) / BigUint::from(2u32)
}

/// Enumerates the self-centralizing candidates for the weight-`w` blocks
/// of the alternating group on `n` points, up to conjugacy, each class
/// repeated per its pair multiplicity and the whole list ordered by
/// (order, canonical key).
pub fn enumerate_sc_candidates(
    n: u32,
    w: u32,
    budget: EnumBudget,
) -> Result<Vec<ScCandidate>, GroupError> {
    assert!(2 * w <= n, "a weight-w block needs n >= 2w");
    let two_w = (2 * w) as usize;
    let degree = two_w.max(1);
    let q2w = sylow_alt_group(two_w);
    if q2w.order() > 256 {
        return Err(GroupError::LatticeTooLarge {
            order: q2w.order(),
            cap: 256,
        });
    }
    let z_q2w = center(&q2w);
    let omega_hat: Vec<usize> = (0..two_w).collect();

    let mut survivors = Vec::new();
    for q in all_subgroups(&q2w, budget)? {
        if !z_q2w.is_subgroup_of(&q) {
            continue;
        }
        if !centralizer(&q2w, &q)?.is_subgroup_of(&q) {
            continue;
        }
        let (x, d, _) = classification_data(&q);
        if case_table(x, d, n, w).is_none() {
            continue;
        }
        if !sc_condition(&q, &omega_hat)? {
            continue;
        }
        survivors.push(q);
    }
    survivors.sort_by_key(|h| (h.order(), h.canonical_key()));

    // Fusion in the alternating group on n points. Candidates live on the
    // first 2w points; with at least two fixed points an odd correction is
    // always available, so conjugacy degrades to symmetric-group conjugacy
    // on the support. Otherwise an odd conjugator only works when the
    // class has an odd normalizer.
    let sym = symmetric_on(&(0..two_w).collect::<Vec<_>>(), degree);
    let shortcut = n as usize >= two_w + 2;
    let mut reps: Vec<(PermGroup, bool)> = Vec::new();
    'next: for h in survivors {
        for (rep, rep_has_odd_normalizer) in reps.iter() {
            if let Some(witness) = is_conjugate_subgroup(&sym, &h, rep)? {
                if shortcut || witness.is_even() || *rep_has_odd_normalizer {
                    continue 'next;
                }
            }
        }
        let has_odd_normalizer = if shortcut {
            true
        } else {
            normalizer(&sym, &h)?.has_odd_element()
        };
        reps.push((h, has_odd_normalizer));
    }

    let mut rows = Vec::new();
    for (rep, _) in reps {
        let (x, d, z_order) = classification_data(&rep);
        let (w_tilde, multiplicity) =
            case_table(x, d, n, w).expect("survivors passed the case filter");
        let analysis = orbit_analysis(&rep);
        let candidate = ScCandidate {
            n,
            w,
            canonical_key: rep.canonical_key(),
            q_order: rep.order(),
            z_order,
            x,
            d,
            w_tilde,
            multiplicity,
            exceptional: analysis.exceptional_kind != ExceptionalKind::None,
            iso_hint: iso_hint(&rep),
            representative: rep,
        };
        for _ in 0..multiplicity {
            rows.push(candidate.clone());
        }
    }
    rows.sort_by(|a, b| {
        a.q_order
            .cmp(&b.q_order)
            .then_with(|| a.canonical_key.cmp(&b.canonical_key))
    });
    Ok(rows)
}
