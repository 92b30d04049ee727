//! Block parametrization and defect-group-order bookkeeping.
//!
//! Blocks of the symmetric group on `n` points in characteristic `p` are
//! labelled by a p-core `κ` and a weight `w` with `|κ| + p·w = n`; the
//! defect groups are conjugates of the fixed Sylow subgroup on `p·w`
//! points. At `p = 2` each symmetric-group block covers alternating-group
//! blocks by an explicit rule, and for the hyperoctahedral groups at odd
//! `p` the labels are pairs of (core, weight) data split over the two
//! linear characters of the sign coordinate.
//!
//! [`feit_bound`] evaluates the six closed-form defect-order bounds, one
//! per group family, in exact big-integer arithmetic.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::partitions::{enumerate_p_cores, Partition};
use crate::sylow::legendre_valuation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockError {
    #[error("family {family:?} has no bound formula at p = {p}")]
    InconsistentFamily { family: Family, p: u32 },
    #[error("q_order {q_order} is not a power of p = {p}")]
    NotAPowerOfP { q_order: u128, p: u32 },
    #[error("pair labels require odd p, got p = {p}")]
    PairLabelsNeedOddP { p: u32 },
}

/// The group families of the defect-bound theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Sym,
    Alt,
    TildeSym,
    WeylB,
    WeylD,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_lowercase().as_str() {
            "sym" => Some(Family::Sym),
            "alt" => Some(Family::Alt),
            "tildesym" | "tilde-sym" | "spin" => Some(Family::TildeSym),
            "weylb" | "b" => Some(Family::WeylB),
            "weyld" | "d" => Some(Family::WeylD),
            _ => None,
        }
    }
}

/// A block label for the symmetric group: p-core and weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymBlockLabel {
    pub n: u32,
    pub p: u32,
    pub core: Partition,
    pub weight: u32,
}

/// All blocks of the symmetric group on `n` points at `p`, ordered by
/// (weight descending, core ascending lexicographically).
pub fn blocks_of_sym(n: u32, p: u32) -> Vec<SymBlockLabel> {
    let mut labels = Vec::new();
    for w in (0..=n / p).rev() {
        for core in enumerate_p_cores(n - p * w, p) {
            labels.push(SymBlockLabel {
                n,
                p,
                core,
                weight: w,
            });
        }
    }
    labels
}

/// `p^{ν_p((p·w)!)}`, the order of the defect groups of a weight-`w` block
/// of a symmetric group.
pub fn defect_group_order_sym(w: u32, p: u32) -> BigUint {
    BigUint::from(p).pow(legendre_valuation((p * w) as usize, p as usize))
}

/// How a 2-block of the symmetric group covers blocks of the alternating
/// group: weight 0 splits into two conjugate blocks of defect 0, weight 1
/// stays a single block of defect 0, and weight `w >= 1` keeps the block
/// with defect groups of order `2^{ν₂((2w)!) - 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltCovering {
    pub parent: SymBlockLabel,
    pub split: bool,
    pub defect_zero: bool,
    pub defect_group_order: BigUint,
}

pub fn alt_covering(parent: &SymBlockLabel) -> AltCovering {
    assert_eq!(parent.p, 2, "covering rule is a p = 2 statement");
    let w = parent.weight;
    let defect_group_order = if w == 0 {
        BigUint::one()
    } else {
        BigUint::from(2u32).pow(legendre_valuation((2 * w) as usize, 2) - 1)
    };
    AltCovering {
        parent: parent.clone(),
        split: w == 0,
        defect_zero: w <= 1,
        defect_group_order,
    }
}

/// A block label for the hyperoctahedral group at odd p: a pair of
/// (core, weight) labels with `n₀ + n₁ = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylBBlockLabel {
    pub n: u32,
    pub p: u32,
    pub core0: Partition,
    pub weight0: u32,
    pub core1: Partition,
    pub weight1: u32,
}

impl WeylBBlockLabel {
    pub fn n0(&self) -> u32 {
        self.core0.size() + self.p * self.weight0
    }

    pub fn n1(&self) -> u32 {
        self.core1.size() + self.p * self.weight1
    }

    /// `p^{ν_p((p·w₀)!) + ν_p((p·w₁)!)}`.
    pub fn defect_group_order(&self) -> BigUint {
        defect_group_order_sym(self.weight0, self.p) * defect_group_order_sym(self.weight1, self.p)
    }
}

/// All blocks of the hyperoctahedral group on `n` coordinates at odd `p`,
/// ordered by (n₀ descending, then each side by weight descending and core
/// ascending).
pub fn blocks_of_weyl_b(n: u32, p: u32) -> Result<Vec<WeylBBlockLabel>, BlockError> {
    if p < 3 {
        return Err(BlockError::PairLabelsNeedOddP { p });
    }
    let mut labels = Vec::new();
    for n0 in (0..=n).rev() {
        let n1 = n - n0;
        for side0 in blocks_of_sym(n0, p) {
            for side1 in blocks_of_sym(n1, p) {
                labels.push(WeylBBlockLabel {
                    n,
                    p,
                    core0: side0.core.clone(),
                    weight0: side0.weight,
                    core1: side1.core.clone(),
                    weight1: side1.weight,
                });
            }
        }
    }
    Ok(labels)
}

/// The defect-order bound for one family, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub family: Family,
    pub p: u32,
    pub q_order: u128,
    pub bound: BigUint,
    pub formula_tag: char,
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

fn is_power_of(q: u128, p: u32) -> bool {
    if q == 0 {
        return false;
    }
    let mut q = q;
    while q % p as u128 == 0 {
        q /= p as u128;
    }
    q == 1
}

/// Evaluates the defect-order bound for a family at a given vertex order.
///
/// The six formulas, by (family, parity of p):
/// (a) symmetric, any p: `q!`
/// (b) alternating, p = 2: `(q+2)!/2`
/// (c) spin double covers, p ≥ 3: `q!`
/// (d) hyperoctahedral, p ≥ 3: `q!`
/// (e) hyperoctahedral, p = 2: `q · log₂(q)!`
/// (f) type-D, p = 2: `q · (log₂(q)+1)!`
pub fn feit_bound(family: Family, p: u32, q_order: u128) -> Result<BoundReport, BlockError> {
    if !is_power_of(q_order, p) {
        return Err(BlockError::NotAPowerOfP { q_order, p });
    }
    let q = q_order;
    let (tag, bound) = match (family, p) {
        (Family::Sym, _) => ('a', factorial(q as u64)),
        (Family::Alt, 2) => ('b', factorial(q as u64 + 2) / BigUint::from(2u32)),
        (Family::TildeSym, p) if p >= 3 => ('c', factorial(q as u64)),
        (Family::WeylB, p) if p >= 3 => ('d', factorial(q as u64)),
        (Family::WeylB, 2) => {
            let log = q.ilog2() as u64;
            ('e', BigUint::from(q) * factorial(log))
        }
        (Family::WeylD, 2) => {
            let log = q.ilog2() as u64;
            ('f', BigUint::from(q) * factorial(log + 1))
        }
        (family, p) => return Err(BlockError::InconsistentFamily { family, p }),
    };
    Ok(BoundReport {
        family,
        p,
        q_order,
        bound,
        formula_tag: tag,
    })
}
