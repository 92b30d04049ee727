//! Exact matrix representations of small groups over prime fields.
//!
//! Covers two computations: deciding module isomorphism and
//! automorphism-twisted equivalence for representations of a Sylow
//! 2-subgroup of the symmetric group on six points, and the unital algebra
//! automorphisms of the group algebra of a cyclic group of order three in
//! characteristic three.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::group::{GroupError, PermGroup};
use crate::perm::Permutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModRepError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Perm(#[from] crate::perm::PermError),
    #[error("no image supplied for generator {0}")]
    MissingGeneratorImage(String),
    #[error("image of generator {0} is not invertible")]
    NotInvertible(String),
    #[error("matrix dimensions are inconsistent")]
    DimensionMismatch,
    #[error("generator images do not extend to a homomorphism; witness product {left} · {right}")]
    NonHomomorphism { left: String, right: String },
    #[error("the generator map is not an automorphism")]
    NotAnAutomorphism,
    #[error("group order {order} exceeds the budget {cap} for this search")]
    BudgetExceeded { order: u128, cap: u128 },
}

/// A dense matrix over the prime field F_p, entries reduced mod p.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PrimeFieldMatrix {
    pub p: u8,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<u8>,
}

impl PrimeFieldMatrix {
    pub fn new(p: u8, rows: usize, cols: usize, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let entries = entries
            .into_iter()
            .map(|x| (x.rem_euclid(p as i64)) as u8)
            .collect();
        PrimeFieldMatrix {
            p,
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(p: u8, rows: usize, cols: usize) -> Self {
        PrimeFieldMatrix {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u8, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// The matrix of a permutation on the natural basis: column `j` has its
    /// 1 in row `g(j)`.
    pub fn permutation(p: u8, g: &Permutation) -> Self {
        let n = g.degree();
        let mut m = Self::zero(p, n, n);
        for j in 0..n {
            m[(g.apply(j), j)] = 1;
        }
        m
    }

    pub fn mul(&self, other: &PrimeFieldMatrix) -> PrimeFieldMatrix {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols, other.rows);
        let mut out = PrimeFieldMatrix::zero(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = ((out[(i, j)] as u16 + a as u16 * other[(k, j)] as u16)
                        % self.p as u16) as u8;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PrimeFieldMatrix) -> PrimeFieldMatrix {
        assert!(self.p == other.p && self.rows == other.rows && self.cols == other.cols);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| ((a as u16 + b as u16) % self.p as u16) as u8)
            .collect();
        PrimeFieldMatrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, c: u8) -> PrimeFieldMatrix {
        let entries = self
            .entries
            .iter()
            .map(|&a| ((a as u16 * c as u16) % self.p as u16) as u8)
            .collect();
        PrimeFieldMatrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let p = m.p as i64;
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| m[(r, col)] != 0);
            let Some(pivot) = pivot else { continue };
            m.swap_rows(rank, pivot);
            let inv = mod_inverse(m[(rank, col)] as i64, p) as u8;
            for j in 0..m.cols {
                m[(rank, j)] = ((m[(rank, j)] as u16 * inv as u16) % p as u16) as u8;
            }
            for r in 0..m.rows {
                if r != rank && m[(r, col)] != 0 {
                    let factor = m[(r, col)] as i64;
                    for j in 0..m.cols {
                        let val = m[(r, j)] as i64 - factor * m[(rank, j)] as i64;
                        m[(r, j)] = val.rem_euclid(p) as u8;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<PrimeFieldMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let p = self.p as i64;
        let mut m = self.clone();
        let mut inv = PrimeFieldMatrix::identity(self.p, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[(r, col)] != 0)?;
            m.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let scale = mod_inverse(m[(col, col)] as i64, p) as u8;
            for j in 0..n {
                m[(col, j)] = ((m[(col, j)] as u16 * scale as u16) % p as u16) as u8;
                inv[(col, j)] = ((inv[(col, j)] as u16 * scale as u16) % p as u16) as u8;
            }
            for r in 0..n {
                if r != col && m[(r, col)] != 0 {
                    let factor = m[(r, col)] as i64;
                    for j in 0..n {
                        let a = m[(r, j)] as i64 - factor * m[(col, j)] as i64;
                        m[(r, j)] = a.rem_euclid(p) as u8;
                        let b = inv[(r, j)] as i64 - factor * inv[(col, j)] as i64;
                        inv[(r, j)] = b.rem_euclid(p) as u8;
                    }
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn row_major(&self) -> Vec<u8> {
        self.entries.clone()
    }
}

impl std::ops::Index<(usize, usize)> for PrimeFieldMatrix {
    type Output = u8;
    fn index(&self, (i, j): (usize, usize)) -> &u8 {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PrimeFieldMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u8 {
        &mut self.entries[i * self.cols + j]
    }
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    // p is a small prime; Fermat.
    let mut result = 1i64;
    let mut base = a.rem_euclid(p);
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// A representation of a permutation group by invertible matrices over a
/// prime field, with the full element-to-matrix map materialized.
#[derive(Clone, Debug)]
pub struct MatRep {
    pub group: PermGroup,
    pub p: u8,
    pub dim: usize,
    gen_images: Vec<(Permutation, PrimeFieldMatrix)>,
    element_map: BTreeMap<Permutation, PrimeFieldMatrix>,
}

/// Cap on the group order for representation materialization.
const REP_GROUP_CAP: u128 = 512;

impl MatRep {
    pub fn matrix_of(&self, g: &Permutation) -> Option<&PrimeFieldMatrix> {
        self.element_map.get(g)
    }

    pub fn generator_images(&self) -> &[(Permutation, PrimeFieldMatrix)] {
        &self.gen_images
    }
}

/// Builds and validates a representation from generator images.
///
/// The element map is materialized by closing the generator products and
/// cross-checked against the full multiplication table, so a non-extending
/// assignment is rejected with a witness product.
pub fn build_rep(
    group: &PermGroup,
    p: u8,
    images: &[(Permutation, PrimeFieldMatrix)],
) -> Result<MatRep, ModRepError> {
    let order = group.order();
    if order > REP_GROUP_CAP {
        return Err(ModRepError::BudgetExceeded {
            order,
            cap: REP_GROUP_CAP,
        });
    }
    let dim = if images.is_empty() {
        1
    } else {
        images[0].1.rows
    };
    let mut gen_images = Vec::new();
    for gen in group.generators() {
        let image = images
            .iter()
            .find(|(g, _)| g == gen)
            .map(|(_, m)| m.clone())
            .ok_or_else(|| ModRepError::MissingGeneratorImage(gen.to_string()))?;
        if image.rows != dim || image.cols != dim || image.p != p {
            return Err(ModRepError::DimensionMismatch);
        }
        if !image.is_invertible() {
            return Err(ModRepError::NotInvertible(gen.to_string()));
        }
        gen_images.push((gen.clone(), image));
    }
    // Close the map under left multiplication by generators.
    let mut element_map = BTreeMap::new();
    element_map.insert(
        Permutation::identity(group.degree()),
        PrimeFieldMatrix::identity(p, dim),
    );
    let mut frontier = vec![Permutation::identity(group.degree())];
    while let Some(e) = frontier.pop() {
        let mat = element_map[&e].clone();
        for (gen, image) in &gen_images {
            let next = gen.compose(&e)?;
            let next_mat = image.mul(&mat);
            match element_map.get(&next) {
                Some(existing) => {
                    if *existing != next_mat {
                        return Err(ModRepError::NonHomomorphism {
                            left: gen.to_string(),
                            right: e.to_string(),
                        });
                    }
                }
                None => {
                    element_map.insert(next.clone(), next_mat);
                    frontier.push(next);
                }
            }
        }
    }
    // Full multiplication-table check.
    for (a, ma) in &element_map {
        for (b, mb) in &element_map {
            let ab = a.compose(b)?;
            if element_map[&ab] != ma.mul(mb) {
                return Err(ModRepError::NonHomomorphism {
                    left: a.to_string(),
                    right: b.to_string(),
                });
            }
        }
    }
    Ok(MatRep {
        group: group.clone(),
        p,
        dim,
        gen_images,
        element_map,
    })
}

/// Validates a generator-image assignment as an automorphism of the group:
/// the graph of the map must generate a group of the same order, and the
/// images must generate the whole group.
pub fn validate_automorphism(
    group: &PermGroup,
    map: &[(Permutation, Permutation)],
) -> Result<(), ModRepError> {
    let degree = group.degree();
    let mut graph_gens = Vec::new();
    let mut image_gens = Vec::new();
    for gen in group.generators() {
        let image = map
            .iter()
            .find(|(g, _)| g == gen)
            .map(|(_, im)| im.clone())
            .ok_or_else(|| ModRepError::MissingGeneratorImage(gen.to_string()))?;
        if !group.is_member(&image) {
            return Err(ModRepError::NotAnAutomorphism);
        }
        let mut combined = gen.extend_to(2 * degree).images().to_vec();
        for (x, &y) in image.images().iter().enumerate() {
            combined[degree + x] = degree as u8 + y;
        }
        graph_gens.push(Permutation::from_images(combined).expect("valid shifted images"));
        image_gens.push(image);
    }
    let graph = PermGroup::generate(2 * degree, &graph_gens)?;
    let image_group = PermGroup::generate(degree, &image_gens)?;
    if graph.order() != group.order() || image_group.order() != group.order() {
        return Err(ModRepError::NotAnAutomorphism);
    }
    Ok(())
}

/// The twist of a representation by a group automorphism given on
/// generators: the twisted module lets `g` act through the image of `g`.
pub fn twist(rep: &MatRep, phi: &[(Permutation, Permutation)]) -> Result<MatRep, ModRepError> {
    validate_automorphism(&rep.group, phi)?;
    let mut images = Vec::new();
    for (gen, _) in &rep.gen_images {
        let target = phi
            .iter()
            .find(|(g, _)| g == gen)
            .map(|(_, im)| im)
            .expect("validated above");
        let matrix = rep
            .element_map
            .get(target)
            .expect("automorphism image lies in the group")
            .clone();
        images.push((gen.clone(), matrix));
    }
    build_rep(&rep.group, rep.p, &images)
}

/// Cap on the number of intertwiner candidates swept.
const SWEEP_CAP: u64 = 1 << 20;

/// Decides module isomorphism by exact linear algebra: solve the
/// intertwiner system `X·a(g) = b(g)·X` over F_p, then sweep the solution
/// space in lexicographic coefficient order for an invertible element.
pub fn module_isomorphic(a: &MatRep, b: &MatRep) -> Option<PrimeFieldMatrix> {
    assert!(a.group.same_group_as(&b.group), "same group required");
    assert!(a.p == b.p && a.dim == b.dim, "same field and dimension");
    if a.gen_images
        .iter()
        .zip(&b.gen_images)
        .all(|((g1, m1), (g2, m2))| g1 == g2 && m1 == m2)
    {
        return Some(PrimeFieldMatrix::identity(a.p, a.dim));
    }
    let p = a.p;
    let dim = a.dim;
    let vars = dim * dim;
    // Rows: for each generator, each (i, j): sum_k X[i,k]·A[k,j] - B[i,k]·X[k,j] = 0.
    let mut system: Vec<Vec<u8>> = Vec::new();
    for ((_, ma), (_, mb)) in a.gen_images.iter().zip(&b.gen_images) {
        for i in 0..dim {
            for j in 0..dim {
                let mut row = vec![0i64; vars];
                for k in 0..dim {
                    row[i * dim + k] += ma[(k, j)] as i64;
                    row[k * dim + j] -= mb[(i, k)] as i64;
                }
                system.push(
                    row.into_iter()
                        .map(|x| x.rem_euclid(p as i64) as u8)
                        .collect(),
                );
            }
        }
    }
    let basis = nullspace(p, &system, vars);
    let nu = basis.len();
    if nu == 0 {
        return None;
    }
    let total = (p as u64).checked_pow(nu as u32).unwrap_or(u64::MAX);
    assert!(
        total <= SWEEP_CAP,
        "intertwiner solution space too large to sweep ({nu} dims over F_{p})"
    );
    let basis_mats: Vec<PrimeFieldMatrix> = basis
        .iter()
        .map(|v| {
            PrimeFieldMatrix::new(p, dim, dim, v.iter().map(|&x| x as i64).collect())
        })
        .collect();
    let mut coeffs = vec![0u8; nu];
    for _ in 1..total {
        // Lexicographic increment, last coordinate fastest.
        for idx in (0..nu).rev() {
            coeffs[idx] += 1;
            if coeffs[idx] == p {
                coeffs[idx] = 0;
            } else {
                break;
            }
        }
        let mut candidate = PrimeFieldMatrix::zero(p, dim, dim);
        for (c, mat) in coeffs.iter().zip(&basis_mats) {
            if *c != 0 {
                candidate = candidate.add(&mat.scale(*c));
            }
        }
        if candidate.is_invertible() {
            return Some(candidate);
        }
    }
    None
}

/// Reduced-echelon nullspace basis of a homogeneous system over F_p.
fn nullspace(p: u8, rows: &[Vec<u8>], vars: usize) -> Vec<Vec<u8>> {
    let pi = p as i64;
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; vars];
    let mut rank = 0;
    for col in 0..vars {
        let pivot = (rank..m.len()).find(|&r| m[r][col] != 0);
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col] as i64, pi) as u16;
        for x in m[rank].iter_mut() {
            *x = ((*x as u16 * inv) % p as u16) as u8;
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col] as i64;
                for j in 0..vars {
                    let val = m[r][j] as i64 - factor * m[rank][j] as i64;
                    m[r][j] = val.rem_euclid(pi) as u8;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..vars {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u8; vars];
        v[free] = 1;
        for col in 0..vars {
            if let Some(r) = pivot_of_col[col] {
                let val = (-(m[r][free] as i64)).rem_euclid(pi) as u8;
                v[col] = val;
            }
        }
        basis.push(v);
    }
    basis
}

/// Cap on the group order for automorphism-orbit searches.
const AUT_GROUP_CAP: u128 = 64;

/// Lists the automorphisms of a small group as generator-image maps, by
/// backtracking over order-compatible images.
pub fn automorphisms(group: &PermGroup) -> Result<Vec<Vec<(Permutation, Permutation)>>, ModRepError> {
    let order = group.order();
    if order > AUT_GROUP_CAP {
        return Err(ModRepError::BudgetExceeded {
            order,
            cap: AUT_GROUP_CAP,
        });
    }
    let gens = group.generators().to_vec();
    let elements = group.elements();
    let mut out = Vec::new();
    let mut assignment: Vec<Permutation> = Vec::new();
    backtrack_autos(group, &gens, &elements, &mut assignment, &mut out);
    Ok(out)
}

fn backtrack_autos(
    group: &PermGroup,
    gens: &[Permutation],
    elements: &[Permutation],
    assignment: &mut Vec<Permutation>,
    out: &mut Vec<Vec<(Permutation, Permutation)>>,
) {
    if assignment.len() == gens.len() {
        let map: Vec<(Permutation, Permutation)> = gens
            .iter()
            .cloned()
            .zip(assignment.iter().cloned())
            .collect();
        if validate_automorphism(group, &map).is_ok() {
            out.push(map);
        }
        return;
    }
    let want_order = gens[assignment.len()].order();
    for e in elements {
        if e.order() == want_order {
            assignment.push(e.clone());
            backtrack_autos(group, gens, elements, assignment, out);
            assignment.pop();
        }
    }
}

/// Whether some automorphism twist of `a` is isomorphic to `b`.
pub fn pair_equivalent(a: &MatRep, b: &MatRep) -> Result<bool, ModRepError> {
    assert!(a.group.same_group_as(&b.group), "same group required");
    for phi in automorphisms(&a.group)? {
        let twisted = twist(a, &phi)?;
        if module_isomorphic(&twisted, b).is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

// ---------------------------------------------------------------------------
// Fixture: the twisted restriction on the Sylow 2-subgroup of S_6.
// ---------------------------------------------------------------------------

/// The fixed Sylow 2-subgroup of the symmetric group on six points,
/// `P_6 = P_4 × P_2` with the generators (1,2), (1,3)(2,4), (5,6).
pub mod s6_twist {
    use super::*;
    use crate::perm::parse_permutation;

    pub fn sylow_group() -> PermGroup {
        let gens: Vec<Permutation> = ["(1,2)", "(1,3)(2,4)", "(5,6)"]
            .iter()
            .map(|s| parse_permutation(s, 6).unwrap())
            .collect();
        PermGroup::generate(6, &gens).unwrap()
    }

    /// The 4-dimensional F₂-module: the first two generators act by their
    /// permutation matrices on four basis vectors, and (5,6) acts by the
    /// all-ones matrix minus the identity.
    pub fn base_module() -> MatRep {
        let group = sylow_group();
        let p4a = parse_permutation("(1,2)", 6).unwrap();
        let p4b = parse_permutation("(1,3)(2,4)", 6).unwrap();
        let swap = parse_permutation("(5,6)", 6).unwrap();
        let images = vec![
            (
                p4a.clone(),
                PrimeFieldMatrix::permutation(2, &p4a.restrict_to(4)),
            ),
            (
                p4b.clone(),
                PrimeFieldMatrix::permutation(2, &p4b.restrict_to(4)),
            ),
            (
                swap,
                PrimeFieldMatrix::new(
                    2,
                    4,
                    4,
                    vec![0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0],
                ),
            ),
        ];
        build_rep(&group, 2, &images).unwrap()
    }

    /// The involutory automorphism fixing the first four points' factor and
    /// sending (5,6) to (1,2)(3,4)(5,6).
    pub fn twisting_automorphism() -> Vec<(Permutation, Permutation)> {
        let id_on = |s: &str| {
            let g = parse_permutation(s, 6).unwrap();
            (g.clone(), g)
        };
        vec![
            id_on("(1,2)"),
            id_on("(1,3)(2,4)"),
            (
                parse_permutation("(5,6)", 6).unwrap(),
                parse_permutation("(1,2)(3,4)(5,6)", 6).unwrap(),
            ),
        ]
    }

    pub fn twisted_module() -> MatRep {
        twist(&base_module(), &twisting_automorphism()).unwrap()
    }
}

// ---------------------------------------------------------------------------
// The group algebra of a cyclic group of order three over F_3.
// ---------------------------------------------------------------------------

/// An element of `F_3[z]/(z³ - 1)` as coefficients of `1, z, z²`.
pub type AlgebraElement = [u8; 3];

fn algebra_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement {
    let mut out = [0u16; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[(i + j) % 3] += a[i] as u16 * b[j] as u16;
        }
    }
    [
        (out[0] % 3) as u8,
        (out[1] % 3) as u8,
        (out[2] % 3) as u8,
    ]
}

fn algebra_pow(a: AlgebraElement, k: u32) -> AlgebraElement {
    let mut out = [1, 0, 0];
    for _ in 0..k {
        out = algebra_mul(out, a);
    }
    out
}

/// One unital algebra automorphism of `F_3 C_3`, expressed in the basis
/// `{1, y, y²}` with `y = 1 - z`, which is adjusted to the radical series.
/// In that basis every automorphism has the shape
/// `[[1,0,0],[0,a,0],[0,b,a²]]` with `a ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraAuto {
    pub a: u8,
    pub b: u8,
    pub matrix: PrimeFieldMatrix,
    /// The image of z, as coefficients of `1, z, z²`.
    pub z_image: AlgebraElement,
}

/// Change of basis from `{1, z, z²}` coordinates to `{1, y, y²}`
/// coordinates.
fn z_to_y_basis() -> PrimeFieldMatrix {
    // Columns: 1, y = 1 - z, y² = 1 + z + z² in z-coordinates.
    let basis = PrimeFieldMatrix::new(3, 3, 3, vec![1, 1, 1, 0, -1, 1, 0, 0, 1]);
    basis.inverse().expect("triangular with unit diagonal")
}

/// The endomorphism of `F_3 C_3` determined by `z ↦ u`, as a matrix in the
/// `{1, y, y²}` basis. Requires `u³ = 1`.
pub fn endomorphism_matrix(u: AlgebraElement) -> PrimeFieldMatrix {
    assert_eq!(algebra_pow(u, 3), [1, 0, 0], "u must cube to 1");
    let to_y = z_to_y_basis();
    // Images of 1, y, y² in z-coordinates.
    let one = [1, 0, 0];
    let y_img = [
        (1 + 3 - u[0] as i64).rem_euclid(3) as u8,
        (3 - u[1] as i64).rem_euclid(3) as u8,
        (3 - u[2] as i64).rem_euclid(3) as u8,
    ];
    let y2_img = algebra_mul(y_img, y_img);
    let mut cols = PrimeFieldMatrix::zero(3, 3, 3);
    for (j, img) in [one, y_img, y2_img].iter().enumerate() {
        for i in 0..3 {
            cols[(i, j)] = img[i];
        }
    }
    to_y.mul(&cols)
}

/// All unital algebra automorphisms of `F_3 C_3`, found by enumerating the
/// images `u` of `z` with `u³ = 1` and keeping the bijective ones. Sorted
/// by `(a, b)`.
pub fn group_algebra_autos_cyclic(p: u8) -> Vec<AlgebraAuto> {
    assert_eq!(p, 3, "only the characteristic-3 cyclic case is built");
    let mut autos = Vec::new();
    for c0 in 0..3u8 {
        for c1 in 0..3u8 {
            for c2 in 0..3u8 {
                let u = [c0, c1, c2];
                if algebra_pow(u, 3) != [1, 0, 0] {
                    continue;
                }
                let matrix = endomorphism_matrix(u);
                if !matrix.is_invertible() {
                    continue;
                }
                // Shape check against the radical-adjusted basis.
                let a = matrix[(1, 1)];
                let b = matrix[(2, 1)];
                let expected = PrimeFieldMatrix::new(
                    3,
                    3,
                    3,
                    vec![
                        1,
                        0,
                        0,
                        0,
                        a as i64,
                        0,
                        0,
                        b as i64,
                        (a as i64 * a as i64) % 3,
                    ],
                );
                assert_eq!(matrix, expected, "automorphism outside expected shape");
                autos.push(AlgebraAuto {
                    a,
                    b,
                    matrix,
                    z_image: u,
                });
            }
        }
    }
    autos.sort_by_key(|auto| (auto.a, auto.b));
    autos
}

/// The verification record for the order-3 unit `-z - z²`: it generates an
/// embedding of the cyclic group into the unit group whose linear
/// extension is a unital algebra endomorphism but not an automorphism.
#[derive(Debug, Clone)]
pub struct EndoCheckRecord {
    pub unit: AlgebraElement,
    pub unit_has_order_three: bool,
    pub is_unital: bool,
    pub is_multiplicative: bool,
    pub matrix: PrimeFieldMatrix,
    pub matrix_rank: usize,
    pub is_singular: bool,
}

impl EndoCheckRecord {
    pub fn all_hold(&self) -> bool {
        self.unit_has_order_three && self.is_unital && self.is_multiplicative && self.is_singular
    }
}

pub fn endo_but_not_auto_check() -> EndoCheckRecord {
    let u: AlgebraElement = [0, 2, 2]; // -z - z²
    let unit_has_order_three = algebra_pow(u, 3) == [1, 0, 0] && u != [1, 0, 0];
    let matrix = endomorphism_matrix(u);
    // The endomorphism in z-coordinates sends z^i to u^i.
    let phi = |v: AlgebraElement| -> AlgebraElement {
        let mut out = [0u16; 3];
        for (i, &c) in v.iter().enumerate() {
            let ui = algebra_pow(u, i as u32);
            for k in 0..3 {
                out[k] += c as u16 * ui[k] as u16;
            }
        }
        [
            (out[0] % 3) as u8,
            (out[1] % 3) as u8,
            (out[2] % 3) as u8,
        ]
    };
    let is_unital = phi([1, 0, 0]) == [1, 0, 0];
    let mut is_multiplicative = true;
    let mut all: Vec<AlgebraElement> = Vec::new();
    for c0 in 0..3u8 {
        for c1 in 0..3u8 {
            for c2 in 0..3u8 {
                all.push([c0, c1, c2]);
            }
        }
    }
    for &x in &all {
        for &y in &all {
            if phi(algebra_mul(x, y)) != algebra_mul(phi(x), phi(y)) {
                is_multiplicative = false;
            }
        }
    }
    let matrix_rank = matrix.rank();
    EndoCheckRecord {
        unit: u,
        unit_has_order_three,
        is_unital,
        is_multiplicative,
        matrix_rank,
        is_singular: matrix_rank < 3,
        matrix,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn perm(s: &str, degree: usize) -> Permutation {
        parse_permutation(s, degree).unwrap()
    }

    #[test]
    fn matrix_arithmetic_basics() {
        let id = PrimeFieldMatrix::identity(2, 4);
        assert!(id.is_invertible());
        let j_minus_i = PrimeFieldMatrix::new(
            2,
            4,
            4,
            vec![0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0],
        );
        assert_eq!(j_minus_i.mul(&j_minus_i), id);
        assert_eq!(j_minus_i.rank(), 4);
    }

    #[test]
    fn permutation_matrices_multiply_covariantly() {
        let a = perm("(1,2)", 4);
        let b = perm("(1,3)(2,4)", 4);
        let ma = PrimeFieldMatrix::permutation(2, &a);
        let mb = PrimeFieldMatrix::permutation(2, &b);
        let ab = a.compose(&b).unwrap();
        assert_eq!(PrimeFieldMatrix::permutation(2, &ab), ma.mul(&mb));
    }

    #[test]
    fn trivial_rep_is_valid() {
        let v4 = PermGroup::generate(
            4,
            &[perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)],
        )
        .unwrap();
        let images: Vec<(Permutation, PrimeFieldMatrix)> = v4
            .generators()
            .iter()
            .map(|g| (g.clone(), PrimeFieldMatrix::identity(3, 1)))
            .collect();
        assert!(build_rep(&v4, 3, &images).is_ok());
    }

    #[test]
    fn base_module_is_valid_and_nontrivial() {
        let rep = s6_twist::base_module();
        assert_eq!(rep.dim, 4);
        assert_eq!(rep.group.order(), 16);
        assert_eq!(rep.element_map.len(), 16);
    }

    #[test]
    fn order_violation_is_caught_with_witness() {
        let c2 = PermGroup::generate(2, &[perm("(1,2)", 2)]).unwrap();
        // A non-involutory image of an involution.
        let bad = PrimeFieldMatrix::new(3, 2, 2, vec![1, 1, 0, 1]);
        let err = build_rep(&c2, 3, &[(perm("(1,2)", 2), bad)]).unwrap_err();
        assert!(matches!(err, ModRepError::NonHomomorphism { .. }));
    }

    #[test]
    fn twist_by_identity_fixes_images() {
        let rep = s6_twist::base_module();
        let identity_map: Vec<(Permutation, Permutation)> = rep
            .group
            .generators()
            .iter()
            .map(|g| (g.clone(), g.clone()))
            .collect();
        let twisted = twist(&rep, &identity_map).unwrap();
        assert!(module_isomorphic(&rep, &twisted).is_some());
    }

    #[test]
    fn twisting_twice_by_the_involution_returns_home() {
        let rep = s6_twist::base_module();
        let phi = s6_twist::twisting_automorphism();
        let once = twist(&rep, &phi).unwrap();
        let twice = twist(&once, &phi).unwrap();
        for ((g1, m1), (g2, m2)) in rep.gen_images.iter().zip(&twice.gen_images) {
            assert_eq!(g1, g2);
            assert_eq!(m1, m2);
        }
    }

    #[test]
    fn twisted_swap_image_is_the_product_matrix() {
        let rep = s6_twist::base_module();
        let twisted = s6_twist::twisted_module();
        let swap = perm("(5,6)", 6);
        let target = perm("(1,2)(3,4)(5,6)", 6);
        assert_eq!(
            twisted.matrix_of(&swap).unwrap(),
            rep.matrix_of(&target).unwrap()
        );
        // The matrix is the double-transposition permutation matrix times
        // the all-ones-minus-identity matrix.
        let m = PrimeFieldMatrix::permutation(2, &perm("(1,2)(3,4)", 4)).mul(
            &PrimeFieldMatrix::new(
                2,
                4,
                4,
                vec![0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0],
            ),
        );
        assert_eq!(twisted.matrix_of(&swap).unwrap(), &m);
    }

    #[test]
    fn the_twisted_module_is_not_isomorphic() {
        let rep = s6_twist::base_module();
        let twisted = s6_twist::twisted_module();
        assert!(module_isomorphic(&rep, &twisted).is_none());
    }

    #[test]
    fn the_twisted_pair_is_equivalent() {
        let rep = s6_twist::base_module();
        let twisted = s6_twist::twisted_module();
        assert!(pair_equivalent(&rep, &twisted).unwrap());
    }

    #[test]
    fn isomorphism_detects_basis_permutation() {
        let v4 = PermGroup::generate(
            4,
            &[perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)],
        )
        .unwrap();
        let natural: Vec<(Permutation, PrimeFieldMatrix)> = v4
            .generators()
            .iter()
            .map(|g| (g.clone(), PrimeFieldMatrix::permutation(2, &g.restrict_to(4))))
            .collect();
        let a = build_rep(&v4, 2, &natural).unwrap();
        let change = PrimeFieldMatrix::permutation(2, &perm("(2,3)", 4));
        let conjugated: Vec<(Permutation, PrimeFieldMatrix)> = natural
            .iter()
            .map(|(g, m)| {
                (
                    g.clone(),
                    change.mul(m).mul(&change.inverse().unwrap()),
                )
            })
            .collect();
        let b = build_rep(&v4, 2, &conjugated).unwrap();
        let witness = module_isomorphic(&a, &b).unwrap();
        assert!(witness.is_invertible());
        for ((_, ma), (_, mb)) in a.gen_images.iter().zip(&b.gen_images) {
            assert_eq!(witness.mul(ma), mb.mul(&witness));
        }
        // Symmetry: the relation holds the other way around too.
        let back = module_isomorphic(&b, &a).unwrap();
        assert!(back.is_invertible());
    }

    #[test]
    fn one_dimensional_characters_of_c2_differ() {
        let c2 = PermGroup::generate(2, &[perm("(1,2)", 2)]).unwrap();
        let trivial = build_rep(
            &c2,
            3,
            &[(perm("(1,2)", 2), PrimeFieldMatrix::identity(3, 1))],
        )
        .unwrap();
        let sign = build_rep(
            &c2,
            3,
            &[(perm("(1,2)", 2), PrimeFieldMatrix::new(3, 1, 1, vec![-1]))],
        )
        .unwrap();
        assert!(module_isomorphic(&trivial, &sign).is_none());
        assert!(!pair_equivalent(&trivial, &sign).unwrap());
    }

    #[test]
    fn cyclic_algebra_has_six_automorphisms() {
        let autos = group_algebra_autos_cyclic(3);
        assert_eq!(autos.len(), 6);
        let params: Vec<(u8, u8)> = autos.iter().map(|a| (a.a, a.b)).collect();
        assert_eq!(
            params,
            vec![(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]
        );
    }

    #[test]
    fn identity_and_inversion_automorphisms() {
        let autos = group_algebra_autos_cyclic(3);
        let id = autos.iter().find(|a| (a.a, a.b) == (1, 0)).unwrap();
        assert_eq!(id.matrix, PrimeFieldMatrix::identity(3, 3));
        assert_eq!(id.z_image, [0, 1, 0]);
        // a = b = -1 extends the group inversion z -> z².
        let inv = autos.iter().find(|a| (a.a, a.b) == (2, 2)).unwrap();
        assert_eq!(inv.z_image, [0, 0, 1]);
    }

    #[test]
    fn automorphisms_form_a_group_of_order_six() {
        let autos = group_algebra_autos_cyclic(3);
        for x in &autos {
            assert!(autos.iter().any(|y| y.matrix == x.matrix.inverse().unwrap()));
            for y in &autos {
                let product = x.matrix.mul(&y.matrix);
                assert!(autos.iter().any(|z| z.matrix == product));
            }
        }
    }

    #[test]
    fn the_endomorphism_record_holds() {
        let record = endo_but_not_auto_check();
        assert!(record.unit_has_order_three);
        assert!(record.is_unital);
        assert!(record.is_multiplicative);
        assert_eq!(record.matrix_rank, 2);
        assert!(record.is_singular);
        assert!(record.all_hold());
        // In the radical-adjusted basis this is the a = 0, b = 1 matrix.
        assert_eq!(
            record.matrix,
            PrimeFieldMatrix::new(3, 3, 3, vec![1, 0, 0, 0, 0, 0, 0, 1, 0])
        );
    }

    #[test]
    fn twist_respects_composition() {
        let rep = s6_twist::base_module();
        let phi = s6_twist::twisting_automorphism();
        // psi: conjugation by (1,2) inside the group.
        let c = perm("(1,2)", 6);
        let psi: Vec<(Permutation, Permutation)> = rep
            .group
            .generators()
            .iter()
            .map(|g| (g.clone(), g.conjugate_by(&c).unwrap()))
            .collect();
        let lhs = twist(&twist(&rep, &phi).unwrap(), &psi).unwrap();
        // phi ∘ psi on generators: psi may send a generator to a
        // non-generator, so phi is extended through generator products.
        let composed: Vec<(Permutation, Permutation)> = psi
            .iter()
            .map(|(g, pg)| (g.clone(), apply_generator_map(&rep.group, &phi, pg)))
            .collect();
        let rhs = twist(&rep, &composed).unwrap();
        for ((g1, m1), (g2, m2)) in lhs.gen_images.iter().zip(&rhs.gen_images) {
            assert_eq!(g1, g2);
            assert_eq!(m1, m2);
        }
    }

    /// Extends a generator-image map to an arbitrary element by factoring
    /// it through products of generators.
    fn apply_generator_map(
        group: &PermGroup,
        map: &[(Permutation, Permutation)],
        element: &Permutation,
    ) -> Permutation {
        // Breadth-first closure pairing each element with its image.
        let mut known: BTreeMap<Permutation, Permutation> = BTreeMap::new();
        let id = Permutation::identity(group.degree());
        known.insert(id.clone(), id.clone());
        let mut frontier = vec![id];
        while let Some(e) = frontier.pop() {
            let image = known[&e].clone();
            for (g, im) in map {
                let next = g.compose(&e).unwrap();
                if !known.contains_key(&next) {
                    let next_image = im.compose(&image).unwrap();
                    known.insert(next.clone(), next_image);
                    frontier.push(next);
                }
            }
        }
        known[element].clone()
    }
}
