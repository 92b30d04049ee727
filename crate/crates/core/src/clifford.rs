//! Semidirect products with abelian kernel: characters of the kernel in
//! characteristic p, the action of the complement on them, inertia
//! subgroups, and the orbit inventory.
//!
//! A simple module of an abelian group over a field of characteristic `p`
//! is one-dimensional and factors through the p′-quotient, so characters
//! are represented abstractly as homomorphisms into a cyclic group of
//! order the p′-exponent, with no field elements materialized.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::group::{GroupError, PermGroup};
use crate::perm::Permutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliffordError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("matrix column {col} does not define an endomorphism of the kernel")]
    NotAnEndomorphism { col: usize },
    #[error("generator image {index} is not a bijection of the kernel")]
    NotBijective { index: usize },
    #[error("one automorphism matrix is required per generator of the acting group: {given} given, {needed} needed")]
    WrongActionArity { given: usize, needed: usize },
    #[error(
        "the generator images do not extend to an action: the graph group has order {graph} but the acting group has order {acting}"
    )]
    NotAnAction { graph: u128, acting: u128 },
}

/// A finite abelian group presented by invariant factors; elements are
/// exponent tuples reduced mod the factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Self {
        assert!(factors.iter().all(|&m| m >= 2), "factors must be >= 2");
        AbelianGroup { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &m in &self.factors {
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for prefix in &out {
                for x in 0..m {
                    let mut e = prefix.clone();
                    e.push(x);
                    next.push(e);
                }
            }
            out = next;
        }
        out
    }

    /// The p′-part of each invariant factor.
    fn coprime_parts(&self, p: u64) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&m| {
                let mut m = m;
                while m % p == 0 {
                    m /= p;
                }
                m
            })
            .collect()
    }

    /// The p′-exponent: the order of the cyclic group receiving characters.
    pub fn coprime_exponent(&self, p: u64) -> u64 {
        self.coprime_parts(p).into_iter().fold(1, lcm)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A character of the kernel in characteristic p: the tuple of values on
/// the generators, as exponents in a cyclic group of order
/// [`AbelianGroup::coprime_exponent`]. Characters kill the p-part, so the
/// value on generator `i` is a multiple of `e / m_i'`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CharacterLabel {
    pub values: Vec<u64>,
}

/// All characters of `h` over a field of characteristic `p`, sorted. The
/// count is the p′-part of `|h|`.
pub fn characters(h: &AbelianGroup, p: u64) -> Vec<CharacterLabel> {
    let e = h.coprime_exponent(p);
    let parts = h.coprime_parts(p);
    let mut out = vec![Vec::new()];
    for &m in &parts {
        let step = e / m;
        let mut next = Vec::with_capacity(out.len() * m as usize);
        for prefix in &out {
            for k in 0..m {
                let mut v = prefix.clone();
                v.push(k * step);
                next.push(v);
            }
        }
        out = next;
    }
    let mut labels: Vec<CharacterLabel> = out
        .into_iter()
        .map(|values| CharacterLabel { values })
        .collect();
    labels.sort_unstable();
    labels
}

/// An action of a permutation group on an abelian kernel: one integer
/// matrix per generator, columns giving the images of the kernel
/// generators as exponent tuples.
#[derive(Debug, Clone)]
pub struct KernelAction {
    pub kernel: AbelianGroup,
    pub acting: PermGroup,
    /// `matrices[i][r][c]`: coefficient of kernel generator `r` in the
    /// image of kernel generator `c` under acting generator `i`.
    pub matrices: Vec<Vec<Vec<u64>>>,
}

impl KernelAction {
    /// Validates the data: each matrix must define an automorphism of the
    /// kernel, and the assignment must extend to a group homomorphism,
    /// which is tested by generating the graph of the map.
    pub fn new(
        kernel: AbelianGroup,
        acting: PermGroup,
        matrices: Vec<Vec<Vec<u64>>>,
    ) -> Result<Self, CliffordError> {
        let needed = acting.generators().len();
        if matrices.len() != needed {
            return Err(CliffordError::WrongActionArity {
                given: matrices.len(),
                needed,
            });
        }
        let action = KernelAction {
            kernel,
            acting,
            matrices,
        };
        let element_perms = action.element_permutations()?;
        // Graph-of-homomorphism criterion: pair each acting generator with
        // its kernel permutation; the diagonal group must project
        // bijectively onto the acting group.
        let degree = action.acting.degree();
        let order = action.kernel.order() as usize;
        let mut graph_gens = Vec::new();
        for (gen, perm) in action.acting.generators().iter().zip(&element_perms) {
            let mut images: Vec<u8> = gen.images().to_vec();
            images.extend(perm.iter().map(|&y| (degree + y) as u8));
            graph_gens.push(Permutation::from_images(images).expect("blockwise bijection"));
        }
        let graph = PermGroup::generate(degree + order, &graph_gens)?;
        if graph.order() != action.acting.order() {
            return Err(CliffordError::NotAnAction {
                graph: graph.order(),
                acting: action.acting.order(),
            });
        }
        Ok(action)
    }

    /// A coordinate-permutation action: the acting group permutes the
    /// kernel's invariant factors (which must then be equal along every
    /// orbit of the action).
    pub fn permuting_coordinates(
        kernel: AbelianGroup,
        acting: PermGroup,
    ) -> Result<Self, CliffordError> {
        assert_eq!(kernel.rank(), acting.degree());
        let matrices = acting
            .generators()
            .iter()
            .map(|g| {
                let k = kernel.rank();
                let mut m = vec![vec![0u64; k]; k];
                for c in 0..k {
                    m[g.apply(c)][c] = 1;
                }
                m
            })
            .collect();
        Self::new(kernel, acting, matrices)
    }

    /// The inversion action of a group of order 2.
    pub fn inverting(kernel: AbelianGroup) -> Result<Self, CliffordError> {
        let acting = PermGroup::generate(
            2,
            &[Permutation::from_cycles(2, &[vec![1, 2]]).unwrap()],
        )?;
        let k = kernel.rank();
        let mut m = vec![vec![0u64; k]; k];
        for c in 0..k {
            m[c][c] = kernel.factors()[c] - 1;
        }
        Self::new(kernel, acting, vec![m])
    }

    fn apply_matrix(&self, matrix: &[Vec<u64>], element: &[u64]) -> Vec<u64> {
        let k = self.kernel.rank();
        let mut out = vec![0u64; k];
        for r in 0..k {
            let mut acc = 0u64;
            for c in 0..k {
                acc = (acc + matrix[r][c] * element[c]) % self.kernel.factors()[r];
            }
            out[r] = acc;
        }
        out
    }

    /// For each acting generator, the permutation it induces on the kernel
    /// element list (sorted order), with endomorphism and bijectivity
    /// checks.
    fn element_permutations(&self) -> Result<Vec<Vec<usize>>, CliffordError> {
        let elements = self.kernel.elements();
        let index: BTreeMap<Vec<u64>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        // Endomorphism test: the image of generator c must have order
        // dividing the factor of c.
        for matrix in &self.matrices {
            for c in 0..self.kernel.rank() {
                let m_c = self.kernel.factors()[c];
                for (r, row) in matrix.iter().enumerate() {
                    let m_r = self.kernel.factors()[r];
                    if (row[c] * m_c) % m_r != 0 {
                        return Err(CliffordError::NotAnEndomorphism { col: c });
                    }
                }
            }
        }
        let mut perms = Vec::new();
        for (i, matrix) in self.matrices.iter().enumerate() {
            let mut seen = vec![false; elements.len()];
            let mut perm = vec![0usize; elements.len()];
            for (from, e) in elements.iter().enumerate() {
                let image = self.apply_matrix(matrix, e);
                let to = index[&image];
                if seen[to] {
                    return Err(CliffordError::NotBijective { index: i });
                }
                seen[to] = true;
                perm[from] = to;
            }
            perms.push(perm);
        }
        Ok(perms)
    }

    /// The value tuple of `chi ∘ matrix`: precomposition with an
    /// endomorphism of the kernel.
    fn precompose(&self, chi: &CharacterLabel, matrix: &[Vec<u64>], e: u64) -> CharacterLabel {
        let k = self.kernel.rank();
        let values = (0..k)
            .map(|c| {
                // chi(matrix · gen_c) = sum_r values[r] · matrix[r][c],
                // where values[r] already carries the e/m_r scaling.
                let mut acc = 0u64;
                for r in 0..k {
                    acc = (acc + chi.values[r] * matrix[r][c]) % e;
                }
                acc
            })
            .collect();
        CharacterLabel { values }
    }

    /// For each acting generator, the permutation induced on the sorted
    /// character list by `chi ↦ chi ∘ α(u)⁻¹`.
    fn character_permutations(&self, p: u64) -> Vec<Vec<usize>> {
        let chars = characters(&self.kernel, p);
        let e = self.kernel.coprime_exponent(p);
        let index: BTreeMap<CharacterLabel, usize> = chars
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        self.matrices
            .iter()
            .zip(self.acting.generators())
            .map(|(matrix, gen)| {
                // The inverse generator acts by the inverse matrix; compute
                // it as the matrix of α(u)^{order-1} on the kernel.
                let mut inv_images: Vec<Vec<u64>> = Vec::new();
                let k = self.kernel.rank();
                for c in 0..k {
                    let mut v = vec![0u64; k];
                    v[c] = 1;
                    for _ in 0..gen.order() - 1 {
                        v = self.apply_matrix(matrix, &v);
                    }
                    inv_images.push(v);
                }
                // Column c of the inverse matrix is inv_images[c].
                let mut inv = vec![vec![0u64; k]; k];
                for (c, col) in inv_images.iter().enumerate() {
                    for r in 0..k {
                        inv[r][c] = col[r];
                    }
                }
                chars
                    .iter()
                    .map(|chi| index[&self.precompose(chi, &inv, e)])
                    .collect()
            })
            .collect()
    }

    /// The inertia subgroup `{u : chi ∘ α(u)⁻¹ = chi}` of one character,
    /// as a subgroup of the acting group.
    pub fn inertia_subgroup(&self, chi: &CharacterLabel, p: u64) -> PermGroup {
        let chars = characters(&self.kernel, p);
        let target = chars
            .iter()
            .position(|c| c == chi)
            .expect("character of this kernel");
        let degree = self.acting.degree();
        let char_perms = self.character_permutations(p);
        let mut combined_gens = Vec::new();
        for (gen, cp) in self.acting.generators().iter().zip(&char_perms) {
            let mut images: Vec<u8> = gen.images().to_vec();
            images.extend(cp.iter().map(|&y| (degree + y) as u8));
            combined_gens.push(Permutation::from_images(images).expect("blockwise bijection"));
        }
        let combined = PermGroup::generate_with_base(
            degree + chars.len(),
            &combined_gens,
            &[degree + target],
        )
        .expect("valid generators");
        let stab = combined.point_stabilizer(degree + target);
        let gens: Vec<Permutation> = stab
            .generators()
            .iter()
            .map(|g| g.restrict_to(degree))
            .collect();
        PermGroup::generate(degree, &gens).expect("restriction stays a group")
    }

    /// One row per orbit of the acting group on characters: the smallest
    /// representative, its inertia subgroup, and the orbit size. Rows are
    /// ordered by (orbit size ascending, representative ascending).
    pub fn inertia_inventory(&self, p: u64) -> Vec<InventoryRow> {
        let chars = characters(&self.kernel, p);
        let char_perms = self.character_permutations(p);
        let mut orbit_of: Vec<Option<usize>> = vec![None; chars.len()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..chars.len() {
            if orbit_of[start].is_some() {
                continue;
            }
            let id = orbits.len();
            let mut orbit = vec![start];
            orbit_of[start] = Some(id);
            let mut frontier = vec![start];
            while let Some(x) = frontier.pop() {
                for cp in &char_perms {
                    let y = cp[x];
                    if orbit_of[y].is_none() {
                        orbit_of[y] = Some(id);
                        orbit.push(y);
                        frontier.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let mut rows: Vec<InventoryRow> = orbits
            .into_iter()
            .map(|orbit| {
                let rep = chars[orbit[0]].clone();
                let inertia = self.inertia_subgroup(&rep, p);
                InventoryRow {
                    representative: rep,
                    inertia,
                    orbit_size: orbit.len(),
                }
            })
            .collect();
        rows.sort_by(|a, b| {
            a.orbit_size
                .cmp(&b.orbit_size)
                .then_with(|| a.representative.cmp(&b.representative))
        });
        rows
    }
}

/// One orbit of characters: representative, inertia subgroup, orbit size.
pub struct InventoryRow {
    pub representative: CharacterLabel,
    pub inertia: PermGroup,
    pub orbit_size: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap_group() -> PermGroup {
        PermGroup::generate(2, &[Permutation::from_cycles(2, &[vec![1, 2]]).unwrap()]).unwrap()
    }

    #[test]
    fn character_counts() {
        let klein = AbelianGroup::new(vec![2, 2]);
        assert_eq!(characters(&klein, 2).len(), 1);
        assert_eq!(characters(&klein, 3).len(), 4);
        let c6 = AbelianGroup::new(vec![6]);
        assert_eq!(characters(&c6, 3).len(), 2);
        assert_eq!(characters(&c6, 5).len(), 6);
        // p'-part of |H| in general.
        for factors in [vec![4, 2], vec![6, 3], vec![12]] {
            let h = AbelianGroup::new(factors);
            for p in [2u64, 3, 5] {
                let mut order = h.order();
                while order % p == 0 {
                    order /= p;
                }
                assert_eq!(characters(&h, p).len() as u64, order);
            }
        }
    }

    #[test]
    fn swap_action_on_klein_characters() {
        let klein = AbelianGroup::new(vec![2, 2]);
        let action = KernelAction::permuting_coordinates(klein, swap_group()).unwrap();
        let chars = characters(&action.kernel, 3);
        assert_eq!(chars.len(), 4);

        // The trivial character is fixed by everything.
        let trivial = &chars[0];
        assert_eq!(trivial.values, vec![0, 0]);
        assert_eq!(action.inertia_subgroup(trivial, 3).order(), 2);

        // (chi, 1) moves under the swap.
        let off_diagonal = chars.iter().find(|c| c.values == vec![0, 1]).unwrap();
        assert_eq!(action.inertia_subgroup(off_diagonal, 3).order(), 1);

        // The diagonal character is fixed.
        let diagonal = chars.iter().find(|c| c.values == vec![1, 1]).unwrap();
        assert_eq!(action.inertia_subgroup(diagonal, 3).order(), 2);
    }

    #[test]
    fn klein_swap_inventory() {
        let klein = AbelianGroup::new(vec![2, 2]);
        let action = KernelAction::permuting_coordinates(klein, swap_group()).unwrap();
        let rows = action.inertia_inventory(3);
        assert_eq!(rows.len(), 3);
        assert_eq!(
            rows.iter().map(|r| r.inertia.order()).collect::<Vec<_>>(),
            vec![2, 2, 1]
        );
        assert_eq!(
            rows.iter().map(|r| r.orbit_size).collect::<Vec<_>>(),
            vec![1, 1, 2]
        );
    }

    #[test]
    fn trivial_acting_group_gives_one_row_per_character() {
        let h = AbelianGroup::new(vec![3]);
        let trivial_u = PermGroup::trivial(1);
        let action = KernelAction::new(h, trivial_u, vec![]).unwrap();
        let rows = action.inertia_inventory(2);
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.orbit_size == 1));
        assert!(rows.iter().all(|r| r.inertia.order() == 1));
    }

    #[test]
    fn inversion_on_c3_pairs_the_nontrivial_characters() {
        let c3 = AbelianGroup::new(vec![3]);
        let action = KernelAction::inverting(c3).unwrap();
        let rows = action.inertia_inventory(2);
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].orbit_size, 1);
        assert_eq!(rows[0].inertia.order(), 2);
        assert_eq!(rows[1].orbit_size, 2);
        assert_eq!(rows[1].inertia.order(), 1);
    }

    #[test]
    fn orbit_stabilizer_identity_on_every_row() {
        let fixtures: Vec<KernelAction> = vec![
            KernelAction::permuting_coordinates(
                AbelianGroup::new(vec![2, 2]),
                swap_group(),
            )
            .unwrap(),
            KernelAction::permuting_coordinates(
                AbelianGroup::new(vec![3, 3, 3]),
                PermGroup::symmetric(3),
            )
            .unwrap(),
            KernelAction::inverting(AbelianGroup::new(vec![4, 2])).unwrap(),
        ];
        for action in fixtures {
            for p in [2u64, 3, 5] {
                let char_count = characters(&action.kernel, p).len();
                let rows = action.inertia_inventory(p);
                let total: usize = rows.iter().map(|r| r.orbit_size).sum();
                assert_eq!(total, char_count);
                for row in rows {
                    assert_eq!(
                        action.acting.order(),
                        row.inertia.order() * row.orbit_size as u128
                    );
                }
            }
        }
    }

    #[test]
    fn invalid_actions_are_rejected() {
        // Swapping a C2 coordinate with a C4 coordinate is not an
        // automorphism.
        let h = AbelianGroup::new(vec![2, 4]);
        let err = KernelAction::permuting_coordinates(h, swap_group());
        assert!(err.is_err());

        // An assignment violating the acting group's relations: the
        // inversion matrix on C5 has order 2, but pair it with a 3-cycle.
        let c3 = PermGroup::generate(3, &[Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap()])
            .unwrap();
        let err = KernelAction::new(AbelianGroup::new(vec![5]), c3, vec![vec![vec![4]]]);
        assert!(matches!(err, Err(CliffordError::NotAnAction { .. })));
    }

    #[test]
    fn inertia_is_constant_along_an_orbit_up_to_conjugacy() {
        let action = KernelAction::permuting_coordinates(
            AbelianGroup::new(vec![3, 3, 3]),
            PermGroup::symmetric(3),
        )
        .unwrap();
        let chars = characters(&action.kernel, 2);
        let perms = action.character_permutations(2);
        for (chi_idx, chi) in chars.iter().enumerate() {
            let t_chi = action.inertia_subgroup(chi, 2);
            for (gen, cp) in action.acting.generators().iter().zip(&perms) {
                let moved = &chars[cp[chi_idx]];
                let t_moved = action.inertia_subgroup(moved, 2);
                assert_eq!(t_chi.order(), t_moved.order());
                // Conjugating by the moving generator maps one inertia
                // group onto the other.
                for s in t_chi.generators() {
                    assert!(t_moved.is_member(&s.conjugate_by(gen).unwrap()));
                }
            }
        }
    }
}
