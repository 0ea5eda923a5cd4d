//! Hom-modules over a Hom-Lie algebra and the α-twisted
//! Chevalley-Eilenberg chain complex `CE^α_*(L, M) = M ⊗ Λ^*L`.
//!
//! The boundary of `m ⊗ x₁∧…∧x_p` is `η₁ + η₂` with
//!
//! ```text
//! η₁ = Σ_i (−1)^{i+1} (m·x_i) ⊗ α_L(x₁ ⋯ x̂_i ⋯ x_p)
//! η₂ = Σ_{i<j} (−1)^{i+j} α_M(m) ⊗ [x_i,x_j] ∧ α_L(x₁ ⋯ x̂_i ⋯ x̂_j ⋯ x_p)
//! ```
//!
//! where the hat omits a factor and α_L is applied to every remaining wedge
//! factor. Note the bracket factor in η₂ is *not* α-twisted; only the
//! carried-along factors are. With α_L = α_M = Id this is the classical
//! Chevalley-Eilenberg differential.
//!
//! Chain bases are ordered module-index-major: the flat index of
//! `m_a ⊗ e_{i₁}∧…∧e_{i_p}` (with `i₁<…<i_p`) is `a · C(dim L, p) + r`,
//! where `r` is the lexicographic rank of the index tuple.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;

use crate::error::Error;
use crate::homalg::{is_hom_lie, is_multiplicative, HomAlgebra, LinearSelfMap, SparseVec};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// A right Hom-L-module: carrier dimension, module self-map α_M, and the
/// right action `ρ(m_a, e_i)` stored as sparse module vectors.
#[derive(Clone, Debug)]
pub struct HomModule {
    alg_dim: usize,
    dim: usize,
    labels: Vec<String>,
    alpha: LinearSelfMap,
    /// `action[a * alg_dim + i]` is the sparse expansion of `m_a · e_i`.
    action: Vec<SparseVec>,
}

impl HomModule {
    /// The adjoint module: `M = L`, `α_M = α_L`, action = the bracket.
    pub fn adjoint(l: &HomAlgebra) -> HomModule {
        let a = l.algebra();
        let dim = a.dim();
        let mut action = Vec::with_capacity(dim * dim);
        for m in 0..dim {
            for i in 0..dim {
                action.push(a.basis_product(m, i).clone());
            }
        }
        HomModule {
            alg_dim: dim,
            dim,
            labels: a.labels().to_vec(),
            alpha: l.alpha().clone(),
            action,
        }
    }

    /// The trivial module: `M = ℚ`, `α_M = Id`, zero action.
    pub fn trivial(l: &HomAlgebra) -> HomModule {
        HomModule {
            alg_dim: l.dim(),
            dim: 1,
            labels: vec!["1".to_string()],
            alpha: LinearSelfMap::identity(1),
            action: vec![SparseVec::new(); l.dim()],
        }
    }

    /// Explicit module data, shape-checked but not validated against the
    /// Hom-module axioms. `action[(a*alg_dim + i)*dim + b]` is the
    /// coefficient of `m_b` in `m_a · e_i`.
    pub fn unchecked(
        alg_dim: usize,
        dim: usize,
        labels: Vec<String>,
        alpha: LinearSelfMap,
        action: &[Rational],
    ) -> Result<HomModule, Error> {
        if labels.len() != dim {
            return Err(Error::ShapeMismatch(format!(
                "{} module labels for dimension {dim}",
                labels.len()
            )));
        }
        if alpha.dim() != dim {
            return Err(Error::DimensionMismatch(format!(
                "module map of dimension {} on module of dimension {dim}",
                alpha.dim()
            )));
        }
        if action.len() != dim * alg_dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "action tensor has {} entries, expected {}",
                action.len(),
                dim * alg_dim * dim
            )));
        }
        let mut sparse = Vec::with_capacity(dim * alg_dim);
        for a in 0..dim {
            for i in 0..alg_dim {
                let base = (a * alg_dim + i) * dim;
                sparse.push(
                    action[base..base + dim]
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(b, v)| (b, v.clone()))
                        .collect(),
                );
            }
        }
        Ok(HomModule {
            alg_dim,
            dim,
            labels,
            alpha,
            action: sparse,
        })
    }

    /// Explicit module data, validated against both Hom-module axioms.
    pub fn validated(
        l: &HomAlgebra,
        dim: usize,
        labels: Vec<String>,
        alpha: LinearSelfMap,
        action: &[Rational],
    ) -> Result<HomModule, Error> {
        let module = HomModule::unchecked(l.dim(), dim, labels, alpha, action)?;
        if let Some(w) = hom_module_witness(l, &module)? {
            return Err(Error::ModuleAxiom {
                axiom: w.axiom,
                witness: w.describe(&module, l),
            });
        }
        Ok(module)
    }

    /// Same module with a different self-map, unvalidated. Exists so broken
    /// coefficient data can be constructed and shown to fail the axioms.
    pub fn with_alpha(mut self, alpha: LinearSelfMap) -> Result<HomModule, Error> {
        if alpha.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "module map of dimension {} on module of dimension {}",
                alpha.dim(),
                self.dim
            )));
        }
        self.alpha = alpha;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn alpha(&self) -> &LinearSelfMap {
        &self.alpha
    }

    /// Sparse expansion of `m_a · e_i`.
    pub fn act_basis(&self, a: usize, i: usize) -> &SparseVec {
        &self.action[a * self.alg_dim + i]
    }

    /// Bilinear extension of the action.
    pub fn act(&self, m: &[Rational], x: &[Rational]) -> Result<Vec<Rational>, Error> {
        if m.len() != self.dim || x.len() != self.alg_dim {
            return Err(Error::DimensionMismatch(format!(
                "action of algebra vector of length {} on module vector of length {}",
                x.len(),
                m.len()
            )));
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (a, ma) in m.iter().enumerate() {
            if ma.is_zero() {
                continue;
            }
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                let c = ma * xi;
                for (b, v) in self.act_basis(a, i) {
                    out[*b] += &(v * &c);
                }
            }
        }
        Ok(out)
    }
}

/// A failing instance of one of the two Hom-module axioms.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleWitness {
    pub axiom: u8,
    pub module_index: usize,
    pub x: usize,
    /// Second algebra index; present only for axiom 1.
    pub y: Option<usize>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

impl ModuleWitness {
    pub fn describe(&self, m: &HomModule, l: &HomAlgebra) -> String {
        let alg = l.algebra();
        let mlabel = &m.labels()[self.module_index];
        match self.y {
            Some(y) => format!(
                "axiom 1 at (m,x,y)=({mlabel},{},{}): lhs {} ≠ rhs {}",
                alg.labels()[self.x],
                alg.labels()[y],
                format_module_vec(m, &self.lhs),
                format_module_vec(m, &self.rhs),
            ),
            None => format!(
                "axiom 2 at (m,x)=({mlabel},{}): lhs {} ≠ rhs {}",
                alg.labels()[self.x],
                format_module_vec(m, &self.lhs),
                format_module_vec(m, &self.rhs),
            ),
        }
    }
}

fn format_module_vec(m: &HomModule, v: &[Rational]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            if c.is_one() {
                m.labels()[i].clone()
            } else {
                format!("{c}·{}", m.labels()[i])
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Both sides of axiom 1 at basis indices `(a, i, j)`:
/// `α_M(m)[x,y]` vs `(mx)α_L(y) − (my)α_L(x)`.
pub fn module_axiom1_sides(
    l: &HomAlgebra,
    m: &HomModule,
    a: usize,
    i: usize,
    j: usize,
) -> Result<(Vec<Rational>, Vec<Rational>), Error> {
    let alg = l.algebra();
    let alpha_m_a = m.alpha().basis_image(a);
    let mut bracket = vec![Rational::zero(); alg.dim()];
    for (k, v) in alg.basis_product(i, j) {
        bracket[*k] = v.clone();
    }
    let lhs = m.act(&alpha_m_a, &bracket)?;

    let ma = m.act_basis(a, i);
    let mut left = vec![Rational::zero(); m.dim()];
    for (b, v) in ma {
        let term = m.act(
            &unit_scaled(m.dim(), *b, v),
            &l.alpha().basis_image(j),
        )?;
        for (o, t) in left.iter_mut().zip(term) {
            *o += &t;
        }
    }
    let mb = m.act_basis(a, j);
    for (b, v) in mb {
        let term = m.act(
            &unit_scaled(m.dim(), *b, v),
            &l.alpha().basis_image(i),
        )?;
        for (o, t) in left.iter_mut().zip(term) {
            *o -= &t;
        }
    }
    Ok((lhs, left))
}

/// Both sides of axiom 2 at basis indices `(a, i)`:
/// `α_M(mx)` vs `α_M(m)α_L(x)`.
pub fn module_axiom2_sides(
    l: &HomAlgebra,
    m: &HomModule,
    a: usize,
    i: usize,
) -> Result<(Vec<Rational>, Vec<Rational>), Error> {
    let mut mx = vec![Rational::zero(); m.dim()];
    for (b, v) in m.act_basis(a, i) {
        mx[*b] = v.clone();
    }
    let lhs = m.alpha().apply(&mx)?;
    let rhs = m.act(&m.alpha().basis_image(a), &l.alpha().basis_image(i))?;
    Ok((lhs, rhs))
}

fn unit_scaled(dim: usize, idx: usize, c: &Rational) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[idx] = c.clone();
    v
}

fn check_module_dims(l: &HomAlgebra, m: &HomModule) -> Result<(), Error> {
    if m.alg_dim() != l.dim() {
        return Err(Error::DimensionMismatch(format!(
            "module over algebra of dimension {} used with algebra of dimension {}",
            m.alg_dim(),
            l.dim()
        )));
    }
    Ok(())
}

/// First axiom-1 failure in lex order over `(a, i, j)`, if any.
pub fn module_axiom1_witness(
    l: &HomAlgebra,
    m: &HomModule,
) -> Result<Option<ModuleWitness>, Error> {
    check_module_dims(l, m)?;
    for a in 0..m.dim() {
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                let (lhs, rhs) = module_axiom1_sides(l, m, a, i, j)?;
                if lhs != rhs {
                    return Ok(Some(ModuleWitness {
                        axiom: 1,
                        module_index: a,
                        x: i,
                        y: Some(j),
                        lhs,
                        rhs,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// First axiom-2 failure in lex order over `(a, i)`, if any.
pub fn module_axiom2_witness(
    l: &HomAlgebra,
    m: &HomModule,
) -> Result<Option<ModuleWitness>, Error> {
    check_module_dims(l, m)?;
    for a in 0..m.dim() {
        for i in 0..l.dim() {
            let (lhs, rhs) = module_axiom2_sides(l, m, a, i)?;
            if lhs != rhs {
                return Ok(Some(ModuleWitness {
                    axiom: 2,
                    module_index: a,
                    x: i,
                    y: None,
                    lhs,
                    rhs,
                }));
            }
        }
    }
    Ok(None)
}

/// First failure of either axiom (axiom 1 scanned first).
pub fn hom_module_witness(
    l: &HomAlgebra,
    m: &HomModule,
) -> Result<Option<ModuleWitness>, Error> {
    if let Some(w) = module_axiom1_witness(l, m)? {
        return Ok(Some(w));
    }
    module_axiom2_witness(l, m)
}

/// True iff both Hom-module axioms hold on all basis tuples. Errors when
/// the underlying algebra is not Hom-Lie.
pub fn check_hom_module(l: &HomAlgebra, m: &HomModule) -> Result<bool, Error> {
    if !is_hom_lie(l.algebra(), l.alpha())? {
        return Err(Error::NotHomLie(
            "Hom-module axioms are stated over a Hom-Lie algebra".into(),
        ));
    }
    Ok(hom_module_witness(l, m)?.is_none())
}

/// Strictly increasing p-tuples from `{0..dim}` in lexicographic order: the
/// basis of Λ^p, and the tie-breaking convention for all boundary matrices.
pub fn increasing_tuples(dim: usize, p: usize) -> Vec<Vec<usize>> {
    (0..dim).combinations(p).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Expands a formal wedge of sparse vectors into the sorted-tuple basis.
/// Monomials with a repeated index vanish; the others pick up the sign of
/// the permutation that sorts their indices.
fn wedge_expand(factors: &[&SparseVec]) -> Vec<(Vec<usize>, Rational)> {
    if factors.iter().any(|f| f.is_empty()) {
        return Vec::new();
    }
    let mut acc: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    let mut choice = vec![0usize; factors.len()];
    loop {
        let mut indices = Vec::with_capacity(factors.len());
        let mut coeff = Rational::one();
        for (slot, &c) in choice.iter().enumerate() {
            let (idx, v) = &factors[slot][c];
            indices.push(*idx);
            coeff *= v;
        }
        if let Some((sorted, sign)) = sort_with_sign(&indices) {
            let entry = acc.entry(sorted).or_insert_with(Rational::zero);
            if sign < 0 {
                *entry -= &coeff;
            } else {
                *entry += &coeff;
            }
        }
        // odometer over the supports
        let mut slot = 0;
        loop {
            if slot == factors.len() {
                acc.retain(|_, v| !v.is_zero());
                return acc.into_iter().collect();
            }
            choice[slot] += 1;
            if choice[slot] < factors[slot].len() {
                break;
            }
            choice[slot] = 0;
            slot += 1;
        }
    }
}

/// Sorts indices counting inversions; `None` when an index repeats.
fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut v = indices.to_vec();
    let mut sign = 1i8;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((v, sign))
}

/// Sequence of exact boundary matrices `d_p : C_p → C_{p−1}`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    dims: Vec<usize>,
    /// `boundaries[p-1]` is `d_p`, for `1 ≤ p ≤ top_degree`.
    boundaries: Vec<Matrix>,
    truncated: bool,
}

impl ChainComplex {
    /// Assembles a complex from raw boundary data, checking shapes only;
    /// use [`ChainComplex::verify_d_squared`] to validate it.
    pub fn from_boundaries(
        dims: Vec<usize>,
        boundaries: Vec<Matrix>,
        truncated: bool,
    ) -> Result<Self, Error> {
        if dims.is_empty() {
            return Err(Error::ShapeMismatch("a complex needs at least C_0".into()));
        }
        if boundaries.len() + 1 != dims.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} boundaries for {} chain modules",
                boundaries.len(),
                dims.len()
            )));
        }
        for (p, d) in boundaries.iter().enumerate() {
            if d.rows() != dims[p] || d.cols() != dims[p + 1] {
                return Err(Error::ShapeMismatch(format!(
                    "d_{} is {}×{}, expected {}×{}",
                    p + 1,
                    d.rows(),
                    d.cols(),
                    dims[p],
                    dims[p + 1]
                )));
            }
        }
        Ok(ChainComplex {
            dims,
            boundaries,
            truncated,
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// The boundary `d_p`, for `1 ≤ p ≤ top_degree`.
    pub fn boundary(&self, p: usize) -> Option<&Matrix> {
        if p == 0 {
            return None;
        }
        self.boundaries.get(p - 1)
    }

    /// True iff `d_p · d_{p+1} = 0` exactly for every stored pair.
    pub fn verify_d_squared(&self) -> bool {
        for p in 1..self.boundaries.len() {
            let product = self.boundaries[p - 1]
                .mul(&self.boundaries[p])
                .expect("consecutive boundary shapes were validated");
            if !product.is_zero() {
                return false;
            }
        }
        true
    }

    /// Homology dimensions per degree. `dim H_p = dim C_p − rank d_p −
    /// rank d_{p+1}`, with `d_0 = 0` and `d_{N+1} = 0`; the top degree of a
    /// truncated complex is flagged since its `d_{N+1}` is unknown.
    pub fn homology(&self) -> Result<Vec<HomologyRow>, Error> {
        for p in 1..self.boundaries.len() {
            let product = self.boundaries[p - 1]
                .mul(&self.boundaries[p])
                .expect("consecutive boundary shapes were validated");
            if !product.is_zero() {
                return Err(Error::NotAComplex { p });
            }
        }
        let top = self.top_degree();
        let ranks: Vec<usize> = self.boundaries.iter().map(Matrix::rank).collect();
        let rank_d = |p: usize| if p == 0 || p > top { 0 } else { ranks[p - 1] };
        Ok((0..=top)
            .map(|p| {
                let rd = rank_d(p);
                let rn = rank_d(p + 1);
                HomologyRow {
                    degree: p,
                    chain_dim: self.dims[p],
                    rank_d: rd,
                    rank_d_next: rn,
                    homology_dim: self.dims[p] - rd - rn,
                    truncated: self.truncated && p == top,
                }
            })
            .collect())
    }
}

/// One row of a homology report.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct HomologyRow {
    pub degree: usize,
    pub chain_dim: usize,
    pub rank_d: usize,
    pub rank_d_next: usize,
    pub homology_dim: usize,
    /// True when `d_{degree+1}` is unknown because the complex was cut off
    /// below the algebra dimension.
    pub truncated: bool,
}

/// Assembles `CE^α_*(L, M)` up to `max_degree` (clamped to dim L).
///
/// Preconditions checked: `L` is Hom-Lie, `α_L` is multiplicative with
/// respect to the bracket, and `M` satisfies both Hom-module axioms.
pub fn build_ce_complex(
    l: &HomAlgebra,
    m: &HomModule,
    max_degree: usize,
) -> Result<ChainComplex, Error> {
    check_module_dims(l, m)?;
    if !is_hom_lie(l.algebra(), l.alpha())? {
        return Err(Error::NotHomLie(
            "the CE^α complex is defined over a Hom-Lie algebra".into(),
        ));
    }
    if !is_multiplicative(l.algebra(), l.alpha())? {
        let (i, j) = crate::homalg::multiplicativity_witness(l.algebra(), l.alpha())?
            .expect("a non-multiplicative map has a witness pair");
        return Err(Error::NotMultiplicative { i, j });
    }
    if let Some(w) = hom_module_witness(l, m)? {
        return Err(Error::ModuleAxiom {
            axiom: w.axiom,
            witness: w.describe(m, l),
        });
    }

    let dim = l.dim();
    let mdim = m.dim();
    let top = max_degree.min(dim);
    let alg = l.algebra();

    let alpha_l: Vec<SparseVec> = (0..dim)
        .map(|j| dense_to_sparse(&l.alpha().basis_image(j)))
        .collect();
    let alpha_m: Vec<SparseVec> = (0..mdim)
        .map(|a| dense_to_sparse(&m.alpha().basis_image(a)))
        .collect();

    let tuples: Vec<Vec<Vec<usize>>> = (0..=top).map(|p| increasing_tuples(dim, p)).collect();
    let ranks: Vec<HashMap<&[usize], usize>> = tuples
        .iter()
        .map(|ts| {
            ts.iter()
                .enumerate()
                .map(|(r, t)| (t.as_slice(), r))
                .collect()
        })
        .collect();
    let dims: Vec<usize> = (0..=top).map(|p| mdim * tuples[p].len()).collect();

    let mut boundaries = Vec::with_capacity(top);
    for p in 1..=top {
        let lower = tuples[p - 1].len();
        let mut d = Matrix::zeros(dims[p - 1], dims[p]);
        for (t_idx, tuple) in tuples[p].iter().enumerate() {
            for a in 0..mdim {
                let col = a * tuples[p].len() + t_idx;
                // η₁: act on the module, α the remaining factors
                for pos in 0..p {
                    let acted = m.act_basis(a, tuple[pos]);
                    if acted.is_empty() {
                        continue;
                    }
                    let rest: Vec<&SparseVec> = tuple
                        .iter()
                        .enumerate()
                        .filter(|(u, _)| *u != pos)
                        .map(|(_, &i)| &alpha_l[i])
                        .collect();
                    let positive = pos % 2 == 0; // (−1)^{i+1} with i = pos+1
                    accumulate(
                        &mut d,
                        col,
                        lower,
                        &ranks[p - 1],
                        acted,
                        &wedge_expand(&rest),
                        positive,
                    );
                }
                // η₂: bracket two factors (untwisted), α the rest
                for s in 0..p {
                    for t in (s + 1)..p {
                        let bracket = alg.basis_product(tuple[s], tuple[t]);
                        if bracket.is_empty() {
                            continue;
                        }
                        let mut factors: Vec<&SparseVec> = vec![bracket];
                        factors.extend(
                            tuple
                                .iter()
                                .enumerate()
                                .filter(|(u, _)| *u != s && *u != t)
                                .map(|(_, &i)| &alpha_l[i]),
                        );
                        let positive = (s + t) % 2 == 0; // (−1)^{i+j}, i=s+1, j=t+1
                        accumulate(
                            &mut d,
                            col,
                            lower,
                            &ranks[p - 1],
                            &alpha_m[a],
                            &wedge_expand(&factors),
                            positive,
                        );
                    }
                }
            }
        }
        boundaries.push(d);
    }

    ChainComplex::from_boundaries(dims, boundaries, top < dim)
}

fn accumulate(
    d: &mut Matrix,
    col: usize,
    lower_count: usize,
    rank_of: &HashMap<&[usize], usize>,
    module_part: &SparseVec,
    wedge_part: &[(Vec<usize>, Rational)],
    positive: bool,
) {
    for (b, mc) in module_part {
        for (tuple, wc) in wedge_part {
            let row = b * lower_count + rank_of[tuple.as_slice()];
            let term = mc * wc;
            let current = d.get(row, col).clone();
            d.set(row, col, if positive { current + term } else { current - term });
        }
    }
}

fn dense_to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// The matrix of `d₁ : M ⊗ L → M`, i.e. the right action map; columns are
/// indexed module-major by `(a, i) ↦ a·dim L + i`.
pub fn action_matrix(l: &HomAlgebra, m: &HomModule) -> Result<Matrix, Error> {
    check_module_dims(l, m)?;
    let mut mat = Matrix::zeros(m.dim(), m.dim() * l.dim());
    for a in 0..m.dim() {
        for i in 0..l.dim() {
            for (b, v) in m.act_basis(a, i) {
                mat.set(*b, a * l.dim() + i, v.clone());
            }
        }
    }
    Ok(mat)
}

/// `dim H₀ = dim M − rank(action map)`; for the adjoint module this is
/// `dim L − dim [L,L]`, the dimension of the abelianization.
pub fn h0_dim(l: &HomAlgebra, m: &HomModule) -> Result<usize, Error> {
    Ok(m.dim() - action_matrix(l, m)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{abelian, heisenberg, sl2};
    use crate::rational::Rational;

    fn r(n: i64) -> Rational {
        Rational::integer(n)
    }

    fn hom(pair: (crate::FinAlgebra, LinearSelfMap)) -> HomAlgebra {
        HomAlgebra::twist(&pair.0, &pair.1).unwrap()
    }

    #[test]
    fn adjoint_and_trivial_modules_pass() {
        let l = hom(sl2(&r(2)).unwrap());
        assert!(check_hom_module(&l, &HomModule::adjoint(&l)).unwrap());
        assert!(check_hom_module(&l, &HomModule::trivial(&l)).unwrap());

        let h = hom(heisenberg(&r(1), &r(1)).unwrap());
        assert!(check_hom_module(&h, &HomModule::trivial(&h)).unwrap());
        assert!(check_hom_module(&h, &HomModule::adjoint(&h)).unwrap());
    }

    #[test]
    fn broken_module_fails_with_documented_pair() {
        let l = hom(sl2(&r(2)).unwrap());
        let broken = HomModule::adjoint(&l)
            .with_alpha(LinearSelfMap::identity(3))
            .unwrap();
        assert!(!check_hom_module(&l, &broken).unwrap());

        // axiom 2 at (m,x) = (e,f): lhs = [e,f]_α = h, rhs = [e, α(f)]_α = h/2
        let alg = l.algebra();
        let e = alg.label_index("e").unwrap();
        let f = alg.label_index("f").unwrap();
        let h = alg.label_index("h").unwrap();
        let (lhs, rhs) = module_axiom2_sides(&l, &broken, e, f).unwrap();
        let mut expected_lhs = vec![r(0); 3];
        expected_lhs[h] = r(1);
        let mut expected_rhs = vec![r(0); 3];
        expected_rhs[h] = Rational::frac(1, 2);
        assert_eq!(lhs, expected_lhs);
        assert_eq!(rhs, expected_rhs);
        assert!(module_axiom2_witness(&l, &broken).unwrap().is_some());
    }

    #[test]
    fn validated_rejects_random_tensor() {
        let l = hom(sl2(&r(1)).unwrap());
        // an arbitrary non-axiomatic action tensor over a 2-dim module
        let mut action = vec![r(0); 2 * 3 * 2];
        action[0] = r(1);
        action[5] = r(2);
        action[8] = r(-1);
        let result = HomModule::validated(
            &l,
            2,
            vec!["m1".into(), "m2".into()],
            LinearSelfMap::identity(2),
            &action,
        );
        assert!(matches!(result, Err(Error::ModuleAxiom { .. })));
    }

    #[test]
    fn abelian_trivial_complex_is_zero() {
        let a = abelian(3);
        let l = HomAlgebra::twist(&a, &LinearSelfMap::identity(3)).unwrap();
        let c = build_ce_complex(&l, &HomModule::trivial(&l), 3).unwrap();
        assert_eq!(c.dims(), &[1, 3, 3, 1]);
        for p in 1..=3 {
            assert!(c.boundary(p).unwrap().is_zero());
        }
        let rows = c.homology().unwrap();
        let dims: Vec<usize> = rows.iter().map(|r| r.homology_dim).collect();
        assert_eq!(dims, vec![1, 3, 3, 1]);
        assert!(!rows[3].truncated);
    }

    #[test]
    fn classical_sl2_trivial_homology() {
        let l = hom(sl2(&r(1)).unwrap());
        let c = build_ce_complex(&l, &HomModule::trivial(&l), 3).unwrap();
        assert!(c.verify_d_squared());
        // d₂(x∧y) = −1 ⊗ [x,y]: full rank on sl(2)
        assert_eq!(c.boundary(2).unwrap().rank(), 3);
        assert_eq!(c.boundary(1).unwrap().rank(), 0);
        let dims: Vec<usize> = c
            .homology()
            .unwrap()
            .iter()
            .map(|r| r.homology_dim)
            .collect();
        assert_eq!(dims, vec![1, 0, 0, 1]);
    }

    #[test]
    fn heisenberg_trivial_homology() {
        let l = hom(heisenberg(&r(1), &r(1)).unwrap());
        let c = build_ce_complex(&l, &HomModule::trivial(&l), 3).unwrap();
        let dims: Vec<usize> = c
            .homology()
            .unwrap()
            .iter()
            .map(|r| r.homology_dim)
            .collect();
        assert_eq!(dims, vec![1, 2, 2, 1]);
        assert_eq!(c.boundary(2).unwrap().rank(), 1);
        assert_eq!(c.boundary(3).unwrap().rank(), 0);
    }

    #[test]
    fn d1_is_the_action_matrix() {
        let l = hom(sl2(&r(2)).unwrap());
        let adj = HomModule::adjoint(&l);
        let c = build_ce_complex(&l, &adj, 3).unwrap();
        assert_eq!(c.boundary(1).unwrap(), &action_matrix(&l, &adj).unwrap());
    }

    #[test]
    fn corrupted_boundary_fails_d_squared() {
        let l = hom(sl2(&r(1)).unwrap());
        let c = build_ce_complex(&l, &HomModule::adjoint(&l), 3).unwrap();
        assert!(c.verify_d_squared());
        let mut boundaries: Vec<Matrix> = (1..=3).map(|p| c.boundary(p).unwrap().clone()).collect();
        // column 1 of d₁ is [h,e] = 2e ≠ 0, so perturbing row 1 of d₂
        // makes d₁·d₂ nonzero
        let bumped = boundaries[1].get(1, 0) + &r(1);
        boundaries[1].set(1, 0, bumped);
        let corrupted =
            ChainComplex::from_boundaries(c.dims().to_vec(), boundaries, false).unwrap();
        assert!(!corrupted.verify_d_squared());
        assert!(matches!(
            corrupted.homology(),
            Err(Error::NotAComplex { .. })
        ));
    }

    #[test]
    fn truncation_is_flagged_and_clamped() {
        let l = hom(sl2(&r(1)).unwrap());
        let c = build_ce_complex(&l, &HomModule::trivial(&l), 2).unwrap();
        assert!(c.is_truncated());
        assert_eq!(c.top_degree(), 2);
        let rows = c.homology().unwrap();
        assert!(rows[2].truncated);
        assert!(!rows[1].truncated);

        // max_degree beyond dim L clamps to dim L
        let full = build_ce_complex(&l, &HomModule::trivial(&l), 99).unwrap();
        assert_eq!(full.top_degree(), 3);
        assert!(!full.is_truncated());
    }

    #[test]
    fn h0_values() {
        let l = hom(sl2(&r(2)).unwrap());
        assert_eq!(h0_dim(&l, &HomModule::adjoint(&l)).unwrap(), 0);

        let a = abelian(4);
        let l = HomAlgebra::twist(&a, &LinearSelfMap::identity(4)).unwrap();
        assert_eq!(h0_dim(&l, &HomModule::adjoint(&l)).unwrap(), 4);

        let h = hom(heisenberg(&r(1), &r(1)).unwrap());
        assert_eq!(h0_dim(&h, &HomModule::adjoint(&h)).unwrap(), 2);
    }

    #[test]
    fn wedge_normalization() {
        // e1∧e0 = −(e0∧e1)
        let v1: SparseVec = vec![(1, r(1))];
        let v0: SparseVec = vec![(0, r(1))];
        let out = wedge_expand(&[&v1, &v0]);
        assert_eq!(out, vec![(vec![0, 1], r(-1))]);

        // repeated index vanishes
        let out = wedge_expand(&[&v0, &v0]);
        assert!(out.is_empty());

        // (e0 + e1)∧(e0 − e1) = −2 e0∧e1
        let sum: SparseVec = vec![(0, r(1)), (1, r(1))];
        let diff: SparseVec = vec![(0, r(1)), (1, r(-1))];
        let out = wedge_expand(&[&sum, &diff]);
        assert_eq!(out, vec![(vec![0, 1], r(-2))]);

        // empty wedge is the unit of Λ⁰
        let out = wedge_expand(&[]);
        assert_eq!(out, vec![(vec![], r(1))]);
    }

    #[test]
    fn binomial_and_tuples() {
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 5), 0);
        let t = increasing_tuples(3, 2);
        assert_eq!(t, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(increasing_tuples(3, 0), vec![Vec::<usize>::new()]);
    }
}
