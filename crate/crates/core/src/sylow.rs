//! Explicit Sylow p-subgroups of symmetric and alternating groups.
//!
//! For `n = p^m` the Sylow p-subgroup of the symmetric group on `n` points
//! is an iterated wreath product; its standard generators are
//! `g_j = ∏_{k=1}^{p^{j-1}} (k, k+p^{j-1}, …, k+(p-1)p^{j-1})` for
//! `j = 1, …, m`. For general `n` the Sylow subgroup is the direct product
//! of such groups acting on consecutive blocks given by the p-adic digits
//! of the largest multiple of `p` not exceeding `n`.
//!
//! At `p = 2` the alternating-group Sylow subgroup `Q_n = P_n ∩ A_n` has an
//! equally explicit generating set, reproduced here verbatim, and the
//! centralizer structure of `Q_n` in the symmetric and alternating groups
//! splits into two cases by `n mod 4`; [`centralizer_profile`] recomputes
//! and checks all of it.

use crate::group::{center, centralizer, PermGroup};
use crate::perm::Permutation;

/// Which family a Sylow construction is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SylowKind {
    Symmetric,
    Alternating,
}

/// The block decomposition behind `P_n`: the p-adic expansion of the
/// largest `r ≤ n` divisible by `p`, as (exponent, multiplicity) pairs with
/// exponents strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowLabel {
    pub n: usize,
    pub p: usize,
    pub kind: SylowKind,
    pub padic_parts: Vec<(u32, u32)>,
}

pub fn sylow_label(n: usize, p: usize, kind: SylowKind) -> SylowLabel {
    SylowLabel {
        n,
        p,
        kind,
        padic_parts: padic_parts(n, p),
    }
}

fn padic_parts(n: usize, p: usize) -> Vec<(u32, u32)> {
    let r = n - n % p;
    let mut parts = Vec::new();
    let mut rest = r;
    let mut power = 1usize;
    let mut exp = 0u32;
    while power * p <= r {
        power *= p;
        exp += 1;
    }
    while exp >= 1 {
        let digit = rest / power;
        if digit > 0 {
            parts.push((exp, digit as u32));
            rest -= digit * power;
        }
        power /= p;
        exp -= 1;
    }
    debug_assert_eq!(rest, 0);
    parts
}

/// Sizes of the consecutive support blocks of `P_n`, largest first.
pub fn block_sizes(n: usize, p: usize) -> Vec<usize> {
    let mut sizes = Vec::new();
    for (exp, mult) in padic_parts(n, p) {
        for _ in 0..mult {
            sizes.push(p.pow(exp));
        }
    }
    sizes
}

/// The generator `g_j` of the wreath-product Sylow subgroup on a block
/// whose points start at 1-based `offset + 1`.
fn wreath_generator(degree: usize, offset: usize, p: usize, j: u32) -> Permutation {
    let step = p.pow(j - 1);
    let cycles: Vec<Vec<usize>> = (1..=step)
        .map(|k| (0..p).map(|t| offset + k + t * step).collect())
        .collect();
    Permutation::from_cycles(degree, &cycles).unwrap()
}

/// Generators of `P_n`, the fixed Sylow p-subgroup of the symmetric group
/// on `n` points, in block-major order. Empty when `n < p`.
pub fn sylow_sym_generators(n: usize, p: usize) -> Vec<Permutation> {
    assert!(is_prime(p), "p must be prime");
    let mut gens = Vec::new();
    let mut offset = 0;
    for size in block_sizes(n, p) {
        let m = size.ilog(p);
        for j in 1..=m {
            gens.push(wreath_generator(n, offset, p, j));
        }
        offset += size;
    }
    gens
}

/// Generators of `Q_n = P_n ∩ A_n` at `p = 2`. For odd `n` this is the
/// configuration for `n - 1` on the low points; `Q_2` is trivial.
pub fn sylow_alt_generators(n: usize) -> Vec<Permutation> {
    if n <= 2 {
        return Vec::new();
    }
    if n % 2 == 1 {
        return sylow_alt_generators(n - 1)
            .into_iter()
            .map(|g| g.extend_to(n))
            .collect();
    }
    let sizes = block_sizes(n, 2);
    if sizes.len() == 1 {
        // n = 2^m, m >= 2: replace g_1 by (1,2)(2^{m-1}+1, 2^{m-1}+2).
        let m = n.ilog2();
        let half = n / 2;
        let mut gens =
            vec![Permutation::from_cycles(n, &[vec![1, 2], vec![half + 1, half + 2]]).unwrap()];
        for j in 2..=m {
            gens.push(wreath_generator(n, 0, 2, j));
        }
        return gens;
    }
    // Even n with s >= 2 blocks: pair each block's first generator with the
    // last block's, keeping all higher generators as they are.
    let s = sizes.len();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &size| {
            let off = *acc;
            *acc += size;
            Some(off)
        })
        .collect();
    let g1 = |j: usize| wreath_generator(n, offsets[j], 2, 1);
    let mut gens = Vec::new();
    for j in 0..s - 1 {
        gens.push(g1(s - 1).compose(&g1(j)).unwrap());
    }
    for j in 0..s {
        let m = sizes[j].ilog2();
        for k in 2..=m {
            gens.push(wreath_generator(n, offsets[j], 2, k));
        }
    }
    gens
}

pub fn sylow_sym_group(n: usize, p: usize) -> PermGroup {
    PermGroup::generate(n.max(1), &sylow_sym_generators(n, p)).unwrap()
}

pub fn sylow_alt_group(n: usize) -> PermGroup {
    PermGroup::generate(n.max(1), &sylow_alt_generators(n)).unwrap()
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Legendre's formula: the exponent of `p` in `n!`.
pub fn legendre_valuation(n: usize, p: usize) -> u32 {
    let mut total = 0;
    let mut q = p;
    while q <= n {
        total += (n / q) as u32;
        q = match q.checked_mul(p) {
            Some(next) => next,
            None => break,
        };
    }
    total
}

/// One named equality of the centralizer structure, with its outcome.
#[derive(Debug, Clone)]
pub struct ProfileCheck {
    pub name: String,
    pub holds: bool,
}

/// The computed centralizer structure of `Q_n` inside the symmetric and
/// alternating groups at `p = 2`, for even `n >= 4`.
///
/// Carries the raw group handles so callers can re-verify every claim
/// instead of trusting the flags.
pub struct CentralizerProfile {
    pub n: usize,
    pub case_mod_four: usize,
    pub sylow_sym: PermGroup,
    pub sylow_alt: PermGroup,
    pub sym_centralizer: PermGroup,
    pub alt_centralizer: PermGroup,
    pub center_sylow_sym: PermGroup,
    pub center_sylow_alt: PermGroup,
    pub checks: Vec<ProfileCheck>,
}

impl CentralizerProfile {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Computes `C_{S_n}(Q_n)`, `C_{A_n}(Q_n)`, `Z(Q_n)` and `Z(P_n)` and checks
/// the case-by-case equalities between them.
///
/// For `n ≡ 0 (mod 4)` all three of `C_{S_n}(Q_n)`, `C_{A_n}(Q_n)`, `Z(Q_n)`
/// agree, and equal `Q_4` for `n = 4` and `Z(P_n)` for `n > 4`. For
/// `n ≡ 2 (mod 4)` the symmetric-group centralizer is `Z(P_n)` and splits as
/// `Z(Q_n) × P_2` with `C_{A_n}(Q_n) = Z(Q_n)`.
pub fn centralizer_profile(n: usize) -> CentralizerProfile {
    assert!(n >= 4 && n % 2 == 0, "profile needs even n >= 4");
    let sym = PermGroup::symmetric(n);
    let alt = PermGroup::alternating(n);
    let p_n = sylow_sym_group(n, 2);
    let q_n = sylow_alt_group(n);
    let c_sym = centralizer(&sym, &q_n).unwrap();
    let c_alt = centralizer(&alt, &q_n).unwrap();
    let z_p = center(&p_n);
    let z_q = center(&q_n);

    let mut checks = Vec::new();
    let mut check = |name: &str, holds: bool| {
        checks.push(ProfileCheck {
            name: name.to_string(),
            holds,
        });
    };
    let case_mod_four = n % 4;
    match case_mod_four {
        0 => {
            check("C_Sym(Q_n) = C_Alt(Q_n)", c_sym.same_group_as(&c_alt));
            check("C_Alt(Q_n) = Z(Q_n)", c_alt.same_group_as(&z_q));
            if n == 4 {
                check("Z(Q_4) = Q_4", z_q.same_group_as(&q_n));
            } else {
                check("Z(Q_n) = Z(P_n)", z_q.same_group_as(&z_p));
            }
        }
        2 => {
            check("C_Sym(Q_n) = Z(P_n)", c_sym.same_group_as(&z_p));
            check("C_Alt(Q_n) = Z(Q_n)", c_alt.same_group_as(&z_q));
            check("|C_Sym(Q_n)| = 2·|Z(Q_n)|", c_sym.order() == 2 * z_q.order());
            let last_swap = Permutation::from_cycles(n, &[vec![n - 1, n]]).unwrap();
            check(
                "P_2 = <(n-1,n)> centralizes Q_n",
                c_sym.is_member(&last_swap),
            );
            check("Z(Q_n) <= C_Sym(Q_n)", z_q.is_subgroup_of(&c_sym));
        }
        _ => unreachable!(),
    }
    CentralizerProfile {
        n,
        case_mod_four,
        sylow_sym: p_n,
        sylow_alt: q_n,
        sym_centralizer: c_sym,
        alt_centralizer: c_alt,
        center_sylow_sym: z_p,
        center_sylow_alt: z_q,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(gens: &[Permutation]) -> Vec<String> {
        gens.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn p8_generators_match_the_printed_list() {
        assert_eq!(
            strings(&sylow_sym_generators(8, 2)),
            vec!["(1,2)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"]
        );
    }

    #[test]
    fn p14_generators_match_the_printed_list() {
        assert_eq!(
            strings(&sylow_sym_generators(14, 2)),
            vec![
                "(1,2)",
                "(1,3)(2,4)",
                "(1,5)(2,6)(3,7)(4,8)",
                "(9,10)",
                "(9,11)(10,12)",
                "(13,14)"
            ]
        );
    }

    #[test]
    fn q14_generators_match_the_printed_list() {
        assert_eq!(
            strings(&sylow_alt_generators(14)),
            vec![
                "(1,2)(13,14)",
                "(9,10)(13,14)",
                "(1,3)(2,4)",
                "(1,5)(2,6)(3,7)(4,8)",
                "(9,11)(10,12)"
            ]
        );
    }

    #[test]
    fn q8_generators_follow_the_two_power_rule() {
        assert_eq!(
            strings(&sylow_alt_generators(8)),
            vec!["(1,2)(5,6)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"]
        );
    }

    #[test]
    fn small_and_trivial_cases() {
        assert!(sylow_sym_generators(3, 5).is_empty());
        assert!(sylow_alt_generators(2).is_empty());
        assert_eq!(
            strings(&sylow_alt_generators(4)),
            vec!["(1,2)(3,4)", "(1,3)(2,4)"]
        );
        // Odd n embeds the n-1 configuration.
        assert_eq!(
            strings(&sylow_alt_generators(7)),
            strings(
                &sylow_alt_generators(6)
                    .into_iter()
                    .map(|g| g.extend_to(7))
                    .collect::<Vec<_>>()
            )
        );
    }

    #[test]
    fn sylow_orders_match_legendre() {
        for n in 2..=16 {
            for p in [2usize, 3, 5] {
                let expected = (p as u128).pow(legendre_valuation(n, p));
                assert_eq!(
                    sylow_sym_group(n, p).order(),
                    expected,
                    "order of P_{n} at p={p}"
                );
            }
        }
    }

    #[test]
    fn alternating_sylow_has_index_two_and_even_generators() {
        for n in (4..=16).step_by(2) {
            let p_n = sylow_sym_group(n, 2);
            let q_n = sylow_alt_group(n);
            assert_eq!(p_n.order(), 2 * q_n.order(), "index at n={n}");
            assert!(q_n.generators().iter().all(|g| g.is_even()));
            assert!(q_n.is_subgroup_of(&p_n));
        }
    }

    #[test]
    fn orbits_are_the_consecutive_blocks() {
        let p14 = sylow_sym_group(14, 2);
        let orbits = p14.orbits();
        assert_eq!(
            orbits.iter().map(|o| o.len()).collect::<Vec<_>>(),
            vec![8, 4, 2]
        );
        assert_eq!(orbits[0], (0..8).collect::<Vec<_>>());
        assert_eq!(orbits[1], (8..12).collect::<Vec<_>>());
        assert_eq!(orbits[2], vec![12, 13]);
    }

    #[test]
    fn eight_at_two_has_order_128() {
        assert_eq!(sylow_sym_group(8, 2).order(), 128);
        assert_eq!(sylow_alt_group(8).order(), 64);
    }

    #[test]
    fn profile_at_four() {
        let profile = centralizer_profile(4);
        assert_eq!(profile.case_mod_four, 0);
        assert!(profile.all_hold());
        assert_eq!(profile.sym_centralizer.order(), 4);
        assert!(profile.sym_centralizer.same_group_as(&profile.sylow_alt));
    }

    #[test]
    fn profile_at_six() {
        let profile = centralizer_profile(6);
        assert_eq!(profile.case_mod_four, 2);
        assert!(profile.all_hold());
        assert_eq!(profile.sym_centralizer.order(), 4);
        assert_eq!(profile.alt_centralizer.order(), 2);
    }

    #[test]
    fn profile_at_eight() {
        let profile = centralizer_profile(8);
        assert_eq!(profile.case_mod_four, 0);
        assert!(profile.all_hold());
        assert!(profile
            .sym_centralizer
            .same_group_as(&profile.center_sylow_sym));
    }

    #[test]
    fn padic_parts_of_fourteen() {
        assert_eq!(padic_parts(14, 2), vec![(3, 1), (2, 1), (1, 1)]);
        assert_eq!(padic_parts(9, 3), vec![(2, 1)]);
        assert_eq!(padic_parts(15, 2), vec![(3, 1), (2, 1), (1, 1)]);
        assert_eq!(block_sizes(14, 2), vec![8, 4, 2]);
    }
}
