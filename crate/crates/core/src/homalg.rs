//! Finite-dimensional algebras by structure constants, endomorphisms, the
//! G-Hom-associativity axioms for all six subgroups of Σ₃, and the twist
//! `μ_α = α ∘ μ` that deforms a G-associative algebra along a multiplicative
//! self-map into a G-Hom-associative one.
//!
//! All axiom checks run over basis tuples; multilinearity of the axioms makes
//! that sufficient and keeps every check exact and complete at O(dim³).

use std::fmt;

use crate::error::Error;
use crate::linalg::{vec_add_scaled, vec_is_zero, Matrix};
use crate::rational::Rational;

/// Sparse vector over the algebra basis: sorted `(index, nonzero coeff)`.
pub type SparseVec = Vec<(usize, Rational)>;

/// A finite-dimensional algebra over ℚ presented by structure constants
/// `e_i · e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq)]
pub struct FinAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// `products[i*dim + j]` is the sparse expansion of `e_i · e_j`.
    products: Vec<SparseVec>,
}

impl FinAlgebra {
    /// Builds an algebra from a list of nonzero structure-constant entries.
    pub fn from_entries(
        dim: usize,
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self, Error> {
        check_labels(dim, &labels)?;
        let mut products = vec![SparseVec::new(); dim * dim];
        for (i, j, k, value) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if value.is_zero() {
                continue;
            }
            let slot = &mut products[i * dim + j];
            if slot.iter().any(|(k2, _)| *k2 == k) {
                return Err(Error::ShapeMismatch(format!(
                    "duplicate structure entry ({i},{j},{k})"
                )));
            }
            slot.push((k, value));
        }
        for p in &mut products {
            p.sort_by_key(|(k, _)| *k);
        }
        Ok(FinAlgebra {
            dim,
            labels,
            products,
        })
    }

    /// Builds an algebra from a dense rank-3 tensor of length `dim³`,
    /// laid out as `c[i][j][k] = tensor[(i*dim + j)*dim + k]`.
    pub fn from_tensor(dim: usize, labels: Vec<String>, tensor: &[Rational]) -> Result<Self, Error> {
        if tensor.len() != dim * dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "structure tensor has {} entries, expected {}",
                tensor.len(),
                dim * dim * dim
            )));
        }
        check_labels(dim, &labels)?;
        let mut products = vec![SparseVec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let slot = &mut products[i * dim + j];
                for k in 0..dim {
                    let v = &tensor[(i * dim + j) * dim + k];
                    if !v.is_zero() {
                        slot.push((k, v.clone()));
                    }
                }
            }
        }
        Ok(FinAlgebra {
            dim,
            labels,
            products,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sparse expansion of the basis product `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_product(i, j)
            .iter()
            .find(|(k2, _)| *k2 == k)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Iterates the nonzero structure constants as `(i, j, k, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.products.iter().enumerate().flat_map(move |(ij, p)| {
            let (i, j) = (ij / self.dim, ij % self.dim);
            p.iter().map(move |(k, v)| (i, j, *k, v))
        })
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    /// Bilinear extension of the structure constants: the product `x · y`.
    pub fn mul_vec(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, Error> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {} in algebra of dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, v) in self.basis_product(i, j) {
                    out[*k] += &(v * &c);
                }
            }
        }
        Ok(out)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        skew_symmetry_witness(self).is_none()
    }

    /// The commutator algebra: `c'[i][j][k] = c[i][j][k] − c[j][i][k]`.
    pub fn commutator(&self) -> FinAlgebra {
        let mut products = vec![SparseVec::new(); self.dim * self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut dense = vec![Rational::zero(); self.dim];
                for (k, v) in self.basis_product(i, j) {
                    dense[*k] += v;
                }
                for (k, v) in self.basis_product(j, i) {
                    dense[*k] -= v;
                }
                products[i * self.dim + j] = to_sparse(&dense);
            }
        }
        FinAlgebra {
            dim: self.dim,
            labels: self.labels.clone(),
            products,
        }
    }

    /// Renders a vector as a linear combination of basis labels.
    pub fn format_vector(&self, v: &[Rational]) -> String {
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = &self.labels[i];
            if c.is_one() {
                parts.push(label.clone());
            } else {
                parts.push(format!("{c}·{label}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for FinAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAlgebra(dim={}, labels={:?})", self.dim, self.labels)
    }
}

fn check_labels(dim: usize, labels: &[String]) -> Result<(), Error> {
    if labels.len() != dim {
        return Err(Error::ShapeMismatch(format!(
            "{} labels for dimension {dim}",
            labels.len()
        )));
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn to_sparse(dense: &[Rational]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (k, v.clone()))
        .collect()
}

/// A square rational matrix acting on an algebra or module basis; column `j`
/// is the image of the j-th basis vector.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearSelfMap {
    mat: Matrix,
}

impl LinearSelfMap {
    pub fn identity(dim: usize) -> Self {
        LinearSelfMap {
            mat: Matrix::identity(dim),
        }
    }

    pub fn from_matrix(mat: Matrix) -> Result<Self, Error> {
        if !mat.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "self-map matrix must be square, got {}×{}",
                mat.rows(),
                mat.cols()
            )));
        }
        Ok(LinearSelfMap { mat })
    }

    /// Diagonal map sending `e_i ↦ diag[i]·e_i`.
    pub fn diagonal(diag: Vec<Rational>) -> Self {
        let n = diag.len();
        let mut mat = Matrix::zeros(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            mat.set(i, i, d);
        }
        LinearSelfMap { mat }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>, Error> {
        self.mat.mul_vec(x)
    }

    pub fn basis_image(&self, j: usize) -> Vec<Rational> {
        self.mat.col(j)
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &LinearSelfMap) -> Result<LinearSelfMap, Error> {
        Ok(LinearSelfMap {
            mat: self.mat.mul(&other.mat)?,
        })
    }

    pub fn pow(&self, k: usize) -> Result<LinearSelfMap, Error> {
        Ok(LinearSelfMap {
            mat: self.mat.pow(k)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.mat == Matrix::identity(self.dim())
    }

    pub fn is_invertible(&self) -> bool {
        self.mat.rank() == self.dim()
    }
}

/// The six subgroups of Σ₃, each carried with its signed permutation list.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubgroupS3 {
    /// Trivial subgroup: the Hom-associativity axiom.
    E,
    /// {e, (1 2)}: the Hom-left-symmetry axiom.
    T12,
    /// {e, (1 3)}.
    T13,
    /// {e, (2 3)}.
    T23,
    /// Alternating subgroup: with a skew bracket, the Hom-Jacobi identity.
    A3,
    /// Full Σ₃: the Hom-Lie-admissibility axiom.
    S3,
}

type SignedPerm = ([usize; 3], i8);

const P_ID: SignedPerm = ([0, 1, 2], 1);
const P_12: SignedPerm = ([1, 0, 2], -1);
const P_13: SignedPerm = ([2, 1, 0], -1);
const P_23: SignedPerm = ([0, 2, 1], -1);
const P_123: SignedPerm = ([1, 2, 0], 1);
const P_132: SignedPerm = ([2, 0, 1], 1);

impl SubgroupS3 {
    /// Group elements as `(σ, (−1)^{ε(σ)})`, where the tuple entry `t` says
    /// which of the three arguments lands in slot `t`.
    pub fn elements(self) -> &'static [SignedPerm] {
        match self {
            SubgroupS3::E => &[P_ID],
            SubgroupS3::T12 => &[P_ID, P_12],
            SubgroupS3::T13 => &[P_ID, P_13],
            SubgroupS3::T23 => &[P_ID, P_23],
            SubgroupS3::A3 => &[P_ID, P_123, P_132],
            SubgroupS3::S3 => &[P_ID, P_12, P_13, P_23, P_123, P_132],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SubgroupS3::E => "e",
            SubgroupS3::T12 => "12",
            SubgroupS3::T13 => "13",
            SubgroupS3::T23 => "23",
            SubgroupS3::A3 => "a3",
            SubgroupS3::S3 => "s3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "e" => Some(SubgroupS3::E),
            "12" => Some(SubgroupS3::T12),
            "13" => Some(SubgroupS3::T13),
            "23" => Some(SubgroupS3::T23),
            "a3" => Some(SubgroupS3::A3),
            "s3" => Some(SubgroupS3::S3),
            _ => None,
        }
    }

    pub fn all() -> [SubgroupS3; 6] {
        [
            SubgroupS3::E,
            SubgroupS3::T12,
            SubgroupS3::T13,
            SubgroupS3::T23,
            SubgroupS3::A3,
            SubgroupS3::S3,
        ]
    }
}

/// First `(i, j, k)` with `c[i][j][k] ≠ −c[j][i][k]`, if any.
pub fn skew_symmetry_witness(a: &FinAlgebra) -> Option<[usize; 3]> {
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for k in 0..a.dim() {
                let lhs = a.structure_constant(i, j, k);
                let rhs = a.structure_constant(j, i, k);
                if lhs != -rhs {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

fn check_map_dim(a: &FinAlgebra, alpha: &LinearSelfMap) -> Result<(), Error> {
    if alpha.dim() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "self-map of dimension {} on algebra of dimension {}",
            alpha.dim(),
            a.dim()
        )));
    }
    Ok(())
}

/// First basis pair where `α(e_i·e_j) ≠ α(e_i)·α(e_j)`, if any.
pub fn multiplicativity_witness(
    a: &FinAlgebra,
    alpha: &LinearSelfMap,
) -> Result<Option<(usize, usize)>, Error> {
    check_map_dim(a, alpha)?;
    for i in 0..a.dim() {
        let ai = alpha.basis_image(i);
        for j in 0..a.dim() {
            let mut lhs = vec![Rational::zero(); a.dim()];
            for (k, v) in a.basis_product(i, j) {
                vec_add_scaled(&mut lhs, &alpha.basis_image(*k), v);
            }
            let rhs = a.mul_vec(&ai, &alpha.basis_image(j))?;
            if lhs != rhs {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// True iff `α ∘ μ = μ ∘ α^{⊗2}` on all basis pairs.
pub fn is_multiplicative(a: &FinAlgebra, alpha: &LinearSelfMap) -> Result<bool, Error> {
    Ok(multiplicativity_witness(a, alpha)?.is_none())
}

/// The signed G-sum `Σ_{σ∈G} (−1)^{ε(σ)} {(x_{σ(1)}x_{σ(2)})α(x_{σ(3)}) −
/// α(x_{σ(1)})(x_{σ(2)}x_{σ(3)})}` evaluated at `(x, y, z)`.
pub fn hom_assoc_defect(
    a: &FinAlgebra,
    alpha: &LinearSelfMap,
    group: SubgroupS3,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Result<Vec<Rational>, Error> {
    check_map_dim(a, alpha)?;
    let args = [x, y, z];
    let mut acc = vec![Rational::zero(); a.dim()];
    for (perm, sign) in group.elements() {
        let (p, q, r) = (args[perm[0]], args[perm[1]], args[perm[2]]);
        let left = a.mul_vec(&a.mul_vec(p, q)?, &alpha.apply(r)?)?;
        let right = a.mul_vec(&alpha.apply(p)?, &a.mul_vec(q, r)?)?;
        let sign = Rational::integer(*sign as i64);
        vec_add_scaled(&mut acc, &left, &sign);
        vec_add_scaled(&mut acc, &right, &-sign);
    }
    Ok(acc)
}

/// A failing basis triple together with its nonzero defect vector.
#[derive(Clone, Debug, PartialEq)]
pub struct DefectWitness {
    pub triple: [usize; 3],
    pub defect: Vec<Rational>,
}

/// Lexicographically first basis triple violating the G-axiom, if any.
pub fn g_hom_witness(
    a: &FinAlgebra,
    alpha: &LinearSelfMap,
    group: SubgroupS3,
) -> Result<Option<DefectWitness>, Error> {
    check_map_dim(a, alpha)?;
    let basis: Vec<Vec<Rational>> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for k in 0..a.dim() {
                let defect =
                    hom_assoc_defect(a, alpha, group, &basis[i], &basis[j], &basis[k])?;
                if !vec_is_zero(&defect) {
                    return Ok(Some(DefectWitness {
                        triple: [i, j, k],
                        defect,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// True iff the G-Hom-associativity axiom holds on all basis triples.
pub fn is_g_hom_associative(
    a: &FinAlgebra,
    alpha: &LinearSelfMap,
    group: SubgroupS3,
) -> Result<bool, Error> {
    Ok(g_hom_witness(a, alpha, group)?.is_none())
}

/// Hom-Lie = skew-symmetric bracket + the A₃ axiom (Hom-Jacobi).
pub fn is_hom_lie(l: &FinAlgebra, alpha: &LinearSelfMap) -> Result<bool, Error> {
    Ok(l.is_skew_symmetric() && is_g_hom_associative(l, alpha, SubgroupS3::A3)?)
}

/// True iff `D(e_i·e_j) = D(e_i)·e_j + e_i·D(e_j)` on all basis pairs.
pub fn is_derivation(a: &FinAlgebra, d: &LinearSelfMap) -> Result<bool, Error> {
    check_map_dim(a, d)?;
    for i in 0..a.dim() {
        let di = d.basis_image(i);
        let ei = a.basis_vector(i);
        for j in 0..a.dim() {
            let mut lhs = vec![Rational::zero(); a.dim()];
            for (k, v) in a.basis_product(i, j) {
                vec_add_scaled(&mut lhs, &d.basis_image(*k), v);
            }
            let mut rhs = a.mul_vec(&di, &a.basis_vector(j))?;
            let second = a.mul_vec(&ei, &d.basis_image(j))?;
            for (r, s) in rhs.iter_mut().zip(&second) {
                *r += s;
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact exponential `Σ_{k<n} D^k/k!` of a nilpotent derivation.
pub fn exp_derivation(a: &FinAlgebra, d: &LinearSelfMap) -> Result<LinearSelfMap, Error> {
    check_map_dim(a, d)?;
    if !is_derivation(a, d)? {
        return Err(Error::NotDerivation);
    }
    // Nilpotency index of an operator on a dim-dimensional space is at most
    // dim; probing one power beyond makes the bound visible in the error.
    let bound = a.dim() + 1;
    let mut powers = vec![Matrix::identity(a.dim())];
    let mut index = None;
    for k in 1..=bound {
        let next = powers[k - 1].mul(d.matrix())?;
        if next.is_zero() {
            index = Some(k);
            break;
        }
        powers.push(next);
    }
    let Some(index) = index else {
        return Err(Error::NotNilpotent { bound });
    };
    let mut acc = Matrix::zeros(a.dim(), a.dim());
    let mut factorial = Rational::one();
    for (k, p) in powers.iter().enumerate().take(index) {
        if k > 0 {
            factorial = factorial * Rational::integer(k as i64);
        }
        acc = acc.add(&p.scale(&factorial.inv()?))?;
    }
    LinearSelfMap::from_matrix(acc)
}

/// Two-sided unit of the algebra, found by solving the linear system
/// `u·e_i = e_i = e_i·u` for all `i`.
pub fn find_unit(a: &FinAlgebra) -> Result<Vec<Rational>, Error> {
    let dim = a.dim();
    if dim == 0 {
        return Err(Error::NoUnit);
    }
    // 2·dim² equations in dim unknowns: rows indexed by (side, i, k).
    let mut system = Matrix::zeros(2 * dim * dim, dim);
    let mut rhs = vec![Rational::zero(); 2 * dim * dim];
    for i in 0..dim {
        for b in 0..dim {
            for (k, v) in a.basis_product(b, i) {
                system.set(i * dim + k, b, v.clone());
            }
            for (k, v) in a.basis_product(i, b) {
                system.set(dim * dim + i * dim + k, b, v.clone());
            }
        }
        rhs[i * dim + i] = Rational::one();
        rhs[dim * dim + i * dim + i] = Rational::one();
    }
    system.solve(&rhs)?.ok_or(Error::NoUnit)
}

/// Multiplicative inverse of `u` in a unital algebra: solves `u·v = 1`
/// and verifies `v·u = 1`.
pub fn algebra_inverse(a: &FinAlgebra, u: &[Rational]) -> Result<Vec<Rational>, Error> {
    let unit = find_unit(a)?;
    let dim = a.dim();
    // Left-multiplication-by-u matrix.
    let mut left = Matrix::zeros(dim, dim);
    for b in 0..dim {
        let col = a.mul_vec(u, &a.basis_vector(b))?;
        for (k, v) in col.iter().enumerate() {
            left.set(k, b, v.clone());
        }
    }
    let v = left.solve(&unit)?.ok_or(Error::NotInvertible)?;
    if a.mul_vec(&v, u)? != unit {
        return Err(Error::NotInvertible);
    }
    Ok(v)
}

/// Conjugation `x ↦ u·x·u⁻¹` by an invertible element of a unital algebra.
pub fn inner_automorphism(a: &FinAlgebra, u: &[Rational]) -> Result<LinearSelfMap, Error> {
    if u.len() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "element of length {} in algebra of dimension {}",
            u.len(),
            a.dim()
        )));
    }
    let u_inv = algebra_inverse(a, u)?;
    let mut mat = Matrix::zeros(a.dim(), a.dim());
    for j in 0..a.dim() {
        let image = a.mul_vec(&a.mul_vec(u, &a.basis_vector(j))?, &u_inv)?;
        for (k, v) in image.iter().enumerate() {
            mat.set(k, j, v.clone());
        }
    }
    LinearSelfMap::from_matrix(mat)
}

/// True iff `f ∘ μ_A = μ_B ∘ f^{⊗2}` on all basis pairs, for a linear map
/// `f : A → B` given by its matrix (columns = images of the A-basis).
pub fn is_algebra_morphism(a: &FinAlgebra, b: &FinAlgebra, f: &Matrix) -> Result<bool, Error> {
    if f.cols() != a.dim() || f.rows() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "morphism matrix {}×{} between algebras of dimensions {} and {}",
            f.rows(),
            f.cols(),
            a.dim(),
            b.dim()
        )));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let mut lhs = vec![Rational::zero(); b.dim()];
            for (k, v) in a.basis_product(i, j) {
                vec_add_scaled(&mut lhs, &f.col(*k), v);
            }
            let rhs = b.mul_vec(&f.col(i), &f.col(j))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A Hom-algebra: a carrier product together with its twisting self-map.
///
/// Built by [`HomAlgebra::twist`], the product is `μ_α = α ∘ μ` and the map
/// is guaranteed multiplicative with respect to it. The raw constructor
/// [`HomAlgebra::unchecked`] skips that guarantee for experiments with
/// non-multiplicative maps.
#[derive(Clone, Debug)]
pub struct HomAlgebra {
    algebra: FinAlgebra,
    alpha: LinearSelfMap,
    untwisted: Option<FinAlgebra>,
}

impl HomAlgebra {
    /// Deforms `a` along a multiplicative self-map: the product of the
    /// result is `μ_α(x,y) = α(x·y)`. Refuses non-multiplicative maps.
    pub fn twist(a: &FinAlgebra, alpha: &LinearSelfMap) -> Result<Self, Error> {
        if let Some((i, j)) = multiplicativity_witness(a, alpha)? {
            return Err(Error::NotMultiplicative { i, j });
        }
        let dim = a.dim();
        let mut products = vec![SparseVec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let mut dense = vec![Rational::zero(); dim];
                for (l, v) in a.basis_product(i, j) {
                    vec_add_scaled(&mut dense, &alpha.basis_image(*l), v);
                }
                products[i * dim + j] = to_sparse(&dense);
            }
        }
        let twisted = FinAlgebra {
            dim,
            labels: a.labels().to_vec(),
            products,
        };
        // α stays multiplicative with respect to μ_α; a violation here would
        // be an implementation bug, not bad input.
        assert!(
            is_multiplicative(&twisted, alpha)?,
            "twist postcondition violated: α not multiplicative w.r.t. μ_α"
        );
        Ok(HomAlgebra {
            algebra: twisted,
            alpha: alpha.clone(),
            untwisted: Some(a.clone()),
        })
    }

    /// Packages an arbitrary product/map pair without any axiom checks.
    pub fn unchecked(algebra: FinAlgebra, alpha: LinearSelfMap) -> Result<Self, Error> {
        check_map_dim(&algebra, &alpha)?;
        Ok(HomAlgebra {
            algebra,
            alpha,
            untwisted: None,
        })
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn alpha(&self) -> &LinearSelfMap {
        &self.alpha
    }

    /// The algebra this one was twisted from, when known.
    pub fn untwisted(&self) -> Option<&FinAlgebra> {
        self.untwisted.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn is_hom_lie(&self) -> Result<bool, Error> {
        is_hom_lie(&self.algebra, &self.alpha)
    }
}
