//! The hyperoctahedral groups as permutation groups.
//!
//! The group `B_n = C_2 ≀ S_n` acts on `2n` points: coordinate `i` owns the
//! pair `{2i-1, 2i}`, the sign flip of coordinate `i` is the transposition
//! of that pair, and the symmetric group permutes the pairs blockwise. The
//! type-D subgroup is `D_n = B_n ∩ A_{2n}`, which keeps exactly the
//! even-weight sign vectors.

use crate::group::{centralizer, GroupError, PermGroup};
use crate::perm::Permutation;

/// The sign flip of coordinate `i` (1-based) as a transposition.
fn flip(n: usize, i: usize) -> Permutation {
    Permutation::from_cycles(2 * n, &[vec![2 * i - 1, 2 * i]]).unwrap()
}

/// The blockwise swap of coordinates `i` and `i+1`.
fn block_swap(n: usize, i: usize) -> Permutation {
    Permutation::from_cycles(2 * n, &[vec![2 * i - 1, 2 * i + 1], vec![2 * i, 2 * i + 2]]).unwrap()
}

/// `B_n = C_2 ≀ S_n` on `2n` points, of order `2^n · n!`.
pub fn weyl_b(n: usize) -> PermGroup {
    assert!(n >= 1);
    let mut gens = vec![flip(n, 1)];
    for i in 1..n {
        gens.push(block_swap(n, i));
    }
    PermGroup::generate(2 * n, &gens).unwrap()
}

/// `D_n = B_n ∩ A_{2n}` on `2n` points, of order `2^{n-1} · n!`.
///
/// The Weyl-group range is `n >= 4`; smaller `n` still produce the
/// intersection group.
pub fn weyl_d(n: usize) -> PermGroup {
    assert!(n >= 2);
    let mut gens = vec![flip(n, 1).compose(&flip(n, 2)).unwrap()];
    for i in 1..n {
        gens.push(block_swap(n, i));
    }
    PermGroup::generate(2 * n, &gens).unwrap()
}

/// The base group `H = C_2^n` of all sign flips, normal in `B_n`.
pub fn base_group(n: usize) -> PermGroup {
    let gens: Vec<Permutation> = (1..=n).map(|i| flip(n, i)).collect();
    PermGroup::generate(2 * n, &gens).unwrap()
}

/// `H ∩ A_{2n}`: the even-weight sign vectors, of order `2^{n-1}`.
pub fn base_group_even(n: usize) -> PermGroup {
    let gens: Vec<Permutation> = (1..n)
        .map(|i| flip(n, i).compose(&flip(n, i + 1)).unwrap())
        .collect();
    PermGroup::generate(2 * n, &gens).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylVariant {
    B,
    D,
}

/// The outcome of the base-group self-centralization check, with the raw
/// groups for re-verification.
pub struct BaseCentralizerReport {
    pub n: usize,
    pub variant: WeylVariant,
    pub ambient: PermGroup,
    pub base: PermGroup,
    pub base_centralizer: PermGroup,
    pub holds: bool,
}

/// Checks that the base group is self-centralizing: `C_{B_n}(H) = H`, and
/// in the D variant `C_{D_n}(H ∩ A_{2n}) = H ∩ A_{2n}`.
///
/// The D-variant identity needs `n >= 3`: for `n = 2` the intersection
/// group is abelian of order 4 and centralizes everything.
pub fn base_selfcentralizing_check(n: usize, variant: WeylVariant) -> BaseCentralizerReport {
    let (ambient, base) = match variant {
        WeylVariant::B => (weyl_b(n), base_group(n)),
        WeylVariant::D => (weyl_d(n), base_group_even(n)),
    };
    let base_centralizer = centralizer(&ambient, &base).expect("base group is normal");
    let holds = base_centralizer.same_group_as(&base);
    BaseCentralizerReport {
        n,
        variant,
        ambient,
        base,
        base_centralizer,
        holds,
    }
}

/// Whether `q` contains the base group; the premise of the p = 2 bound for
/// vertices of simple modules of `B_n`.
pub fn vertex_contains_base(n: usize, q: &PermGroup) -> Result<bool, GroupError> {
    let ambient = weyl_b(n);
    if !q.is_subgroup_of(&ambient) {
        return Err(GroupError::NotASubgroup { order: q.order() });
    }
    Ok(base_group(n).is_subgroup_of(q))
}

/// The inertia subgroup `C_2 ≀ (S_{n0} × S_{n-n0})` inside `B_n`: all sign
/// flips, but coordinate permutations only within the first `n0` and the
/// last `n - n0` blocks. Its order is `2^n · n0! · (n-n0)!`.
pub fn inertia_group_weyl_b(n: usize, n0: usize) -> PermGroup {
    assert!(n0 <= n);
    let mut gens: Vec<Permutation> = (1..=n).map(|i| flip(n, i)).collect();
    for i in 1..n {
        if i != n0 {
            gens.push(block_swap(n, i));
        }
    }
    PermGroup::generate(2 * n, &gens).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sylow::legendre_valuation;

    fn factorial(n: usize) -> u128 {
        (1..=n as u128).product()
    }

    #[test]
    fn orders_of_b_and_d() {
        for n in 2..=6 {
            assert_eq!(weyl_b(n).order(), (1u128 << n) * factorial(n), "B_{n}");
            assert_eq!(
                weyl_d(n).order(),
                (1u128 << (n - 1)) * factorial(n),
                "D_{n}"
            );
        }
        assert_eq!(weyl_b(3).order(), 48);
        assert_eq!(weyl_d(4).order(), 192);
    }

    #[test]
    fn d_is_the_even_part_of_b() {
        for n in 2..=5 {
            let b = weyl_b(n);
            let d = weyl_d(n);
            assert!(d.is_subgroup_of(&b));
            assert!(d.generators().iter().all(|g| g.is_even()));
            assert!(d.same_group_as(&b.even_subgroup()));
        }
    }

    #[test]
    fn base_group_is_normal_elementary_abelian() {
        for n in 2..=6 {
            let b = weyl_b(n);
            let h = base_group(n);
            assert_eq!(h.order(), 1u128 << n);
            assert!(h.elements().iter().all(|e| e.order() <= 2));
            for g in b.generators() {
                for s in h.generators() {
                    assert!(h.is_member(&s.conjugate_by(g).unwrap()));
                }
            }
        }
    }

    #[test]
    fn sylow_two_of_b_has_the_predicted_order() {
        for n in 2..=5 {
            let b = weyl_b(n);
            let expected = 1u128 << (n + legendre_valuation(n, 2) as usize);
            // The full 2-part of |B_n|.
            let mut order = b.order();
            let mut two_part = 1u128;
            while order % 2 == 0 {
                order /= 2;
                two_part *= 2;
            }
            assert_eq!(two_part, expected, "n = {n}");
        }
    }

    #[test]
    fn base_centralizer_checks_hold() {
        for n in 2..=5 {
            assert!(base_selfcentralizing_check(n, WeylVariant::B).holds, "B_{n}");
        }
        for n in 3..=5 {
            assert!(base_selfcentralizing_check(n, WeylVariant::D).holds, "D_{n}");
        }
    }

    #[test]
    fn d2_base_is_not_selfcentralizing() {
        // D_2 is the Klein four-group, so the order-2 intersection base is
        // centralized by all of it.
        let report = base_selfcentralizing_check(2, WeylVariant::D);
        assert!(!report.holds);
        assert_eq!(report.base_centralizer.order(), 4);
    }

    #[test]
    fn vertex_premise_checks() {
        let h = base_group(3);
        assert!(vertex_contains_base(3, &h).unwrap());
        let swap_only = PermGroup::generate(6, &[block_swap(3, 1)]).unwrap();
        assert!(!vertex_contains_base(3, &swap_only).unwrap());
        let not_inside = PermGroup::generate(6, &[Permutation::from_cycles(6, &[vec![1, 3]]).unwrap()])
            .unwrap();
        assert!(vertex_contains_base(3, &not_inside).is_err());
    }

    #[test]
    fn sylow_of_b2_contains_base() {
        // B_2 is itself a 2-group.
        let b2 = weyl_b(2);
        assert_eq!(b2.order(), 8);
        assert!(vertex_contains_base(2, &b2).unwrap());
    }

    #[test]
    fn inertia_group_orders() {
        assert!(inertia_group_weyl_b(3, 0).same_group_as(&weyl_b(3)));
        assert_eq!(inertia_group_weyl_b(3, 1).order(), 16);
        assert_eq!(inertia_group_weyl_b(4, 2).order(), 64);
        for n in 2..=5 {
            for n0 in 0..=n {
                assert_eq!(
                    inertia_group_weyl_b(n, n0).order(),
                    (1u128 << n) * factorial(n0) * factorial(n - n0)
                );
            }
        }
    }
}
