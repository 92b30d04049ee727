//! Cross-module integration checks and property tests.

use proptest::prelude::*;

use brauerlab::group::{all_subgroups, centralizer, EnumBudget, PermGroup};
use brauerlab::partitions::Partition;
use brauerlab::perm::{parse_permutation, Permutation};
use brauerlab::sylow::{sylow_alt_group, sylow_sym_group};

/// A random permutation of the given degree, built by argsorting random
/// keys.
fn permutation_strategy(degree: usize) -> impl Strategy<Value = Permutation> {
    prop::collection::vec(any::<u32>(), degree).prop_map(move |keys| {
        let mut order: Vec<usize> = (0..degree).collect();
        order.sort_by_key(|&i| (keys[i], i));
        let mut images = vec![0u8; degree];
        for (target, source) in order.into_iter().enumerate() {
            images[source] = target as u8;
        }
        Permutation::from_images(images).expect("argsort yields a bijection")
    })
}

/// A random partition with at most 8 parts of size at most 9.
fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=9, 0..=8).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    })
}

proptest! {
    #[test]
    fn composition_is_associative(
        a in permutation_strategy(9),
        b in permutation_strategy(9),
        c in permutation_strategy(9),
    ) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels(a in permutation_strategy(11)) {
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
    }

    #[test]
    fn parity_is_multiplicative(
        a in permutation_strategy(10),
        b in permutation_strategy(10),
    ) {
        let product = a.compose(&b).unwrap();
        prop_assert_eq!(product.is_even(), a.is_even() == b.is_even());
    }

    #[test]
    fn cycle_notation_round_trips(a in permutation_strategy(12)) {
        let text = a.to_string();
        let back = parse_permutation(&text, 12).unwrap();
        prop_assert_eq!(a, back);
    }

    #[test]
    fn core_weight_arithmetic(lam in partition_strategy(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let core = lam.p_core(p);
        prop_assert_eq!(core.p_core(p), core.clone());
        prop_assert_eq!(lam.size(), core.size() + p * lam.p_weight(p));
        if p == 2 {
            prop_assert!(core.is_two_core());
        }
    }

    #[test]
    fn conjugation_is_an_involution(lam in partition_strategy()) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }

    #[test]
    fn generated_orbits_partition_the_points(
        a in permutation_strategy(9),
        b in permutation_strategy(9),
    ) {
        let g = PermGroup::generate(9, &[a, b]).unwrap();
        let orbits = g.orbits();
        let total: usize = orbits.iter().map(|o| o.len()).sum();
        prop_assert_eq!(total, 9);
        let mut all: Vec<usize> = orbits.into_iter().flatten().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..9).collect::<Vec<_>>());
    }
}

#[test]
fn q8_subgroup_count_is_frozen() {
    // The full lattice of the order-64 alternating Sylow subgroup on 8
    // points, cross-checked against an independent reverse-order walk when
    // this value was first pinned.
    let q8 = sylow_alt_group(8);
    assert_eq!(q8.order(), 64);
    let subgroups = all_subgroups(&q8, EnumBudget::default()).unwrap();
    assert_eq!(subgroups.len(), 225);
    // Spot invariants of the lattice walk.
    assert!(subgroups.iter().all(|h| 64 % h.order() == 0));
    assert_eq!(subgroups.first().unwrap().order(), 1);
    assert_eq!(subgroups.last().unwrap().order(), 64);
}

#[test]
fn centralizer_elements_commute_with_generators() {
    let s8 = PermGroup::symmetric(8);
    let q8 = sylow_alt_group(8);
    let c = centralizer(&s8, &q8).unwrap();
    for e in c.elements() {
        for g in q8.generators() {
            assert_eq!(e.compose(g).unwrap(), g.compose(&e).unwrap());
        }
    }
}

/// Independent re-derivation of the weight-3 classification over six
/// points: brute-force centralizers over all 360 even permutations,
/// brute-force conjugacy fusion, and support-restricted parity for `d`.
/// No backtrack search, no case table.
#[test]
fn weight_three_classes_re_derived_by_brute_force() {
    use brauerlab::brauer::enumerate_sc_candidates;
    use brauerlab::group::center;

    let a6 = PermGroup::alternating(6);
    let s6 = PermGroup::symmetric(6);
    let a6_elements = a6.elements();
    let s6_elements = s6.elements();
    let q6 = sylow_alt_group(6);
    let z6 = center(&q6);

    let commutes = |c: &Permutation, q: &PermGroup| {
        q.generators()
            .iter()
            .all(|s| c.compose(s).unwrap() == s.compose(c).unwrap())
    };

    let mut survivors: Vec<PermGroup> = Vec::new();
    for q in all_subgroups(&q6, EnumBudget::default()).unwrap() {
        if !z6.is_subgroup_of(&q) {
            continue;
        }
        // C_{Q_6}(Q) <= Q by scanning the eight Sylow elements.
        if q6
            .elements()
            .iter()
            .any(|c| commutes(c, &q) && !q.is_member(c))
        {
            continue;
        }
        // Self-centralizing over the full point set: the centralizer in
        // the alternating group is no bigger than the center.
        let cent_count = a6_elements.iter().filter(|c| commutes(c, &q)).count();
        if cent_count as u128 != center(&q).order() {
            continue;
        }
        survivors.push(q);
    }

    // Brute-force fusion: conjugate generator sets through all 360 even
    // permutations.
    let mut classes: Vec<PermGroup> = Vec::new();
    'next: for q in survivors {
        for rep in &classes {
            if q.order() == rep.order()
                && a6_elements.iter().any(|g| {
                    q.generators()
                        .iter()
                        .all(|s| rep.is_member(&s.conjugate_by(g).unwrap()))
                })
            {
                continue 'next;
            }
        }
        classes.push(q);
    }

    let mut brute_data: Vec<(u128, u128, usize, u8)> = classes
        .iter()
        .map(|q| {
            let support = q.support();
            let x = support.len() / 2;
            // d = 2 exactly when some odd permutation supported inside the
            // support of q centralizes it.
            let has_odd = s6_elements.iter().any(|c| {
                !c.is_even()
                    && c.support().iter().all(|pt| support.contains(pt))
                    && commutes(c, q)
            });
            (
                q.order(),
                center(q).order(),
                x,
                if has_odd { 2 } else { 1 },
            )
        })
        .collect();
    brute_data.sort_unstable();

    let rows = enumerate_sc_candidates(6, 3, EnumBudget::default()).unwrap();
    let mut computed: Vec<(u128, u128, usize, u8)> = rows
        .iter()
        .map(|r| (r.q_order, r.z_order, r.x as usize, r.d))
        .collect();
    computed.sort_unstable();
    // Every class appears with multiplicity 1 in this block, so the row
    // list and the class list carry the same data multiset.
    assert_eq!(brute_data, computed);
    assert_eq!(
        brute_data,
        vec![(4, 4, 2, 1), (4, 4, 3, 2), (4, 4, 3, 2), (8, 2, 3, 2)]
    );
}

#[test]
fn sylow_subgroup_is_contained_in_its_symmetric_group() {
    for n in 2..=12 {
        let p_n = sylow_sym_group(n, 2);
        let s_n = PermGroup::symmetric(n);
        assert!(p_n.is_subgroup_of(&s_n));
        let q_n = sylow_alt_group(n);
        assert!(q_n.is_subgroup_of(&PermGroup::alternating(n)));
    }
}
