//! Exact computations around the 2-local and block-theoretic structure of
//! symmetric-group-like families: symmetric, alternating and hyperoctahedral
//! groups, their Sylow subgroups, block label combinatorics, and the
//! classification of self-centralizing 2-subgroup candidates in alternating
//! groups.
//!
//! Everything here is deterministic and exact: permutations are explicit
//! images on a finite point set, group orders come from stabilizer chains,
//! partition combinatorics is integer arithmetic, and linear algebra is done
//! over prime fields. Two runs over the same inputs produce identical output.

pub mod blocks;
pub mod brauer;
pub mod clifford;
pub mod group;
pub mod modrep;
pub mod partitions;
pub mod perm;
pub mod sylow;
pub mod weyl;

pub use group::PermGroup;
pub use perm::Permutation;
