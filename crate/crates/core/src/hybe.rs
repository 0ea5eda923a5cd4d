//! The Yang-Baxter operator attached to a Hom-Lie algebra and the braid
//! operators it induces.
//!
//! On the carrier `V = ℚ ⊕ L` (basis: the field unit first, then the
//! algebra basis) with extended map `α_V = Id ⊕ α`, the operator is
//!
//! ```text
//! B_α((a,x) ⊗ (b,y)) = (b,α(y)) ⊗ (a,α(x)) + (1,0) ⊗ (0,[x,y])
//! ```
//!
//! and satisfies the Hom-Yang-Baxter equation
//! `(α⊗B)(B⊗α)(α⊗B) = (B⊗α)(α⊗B)(B⊗α)` on `V^{⊗3}`. Tensor factors use
//! the Kronecker index convention `(i₁,i₂) ↦ i₁·dim₂ + i₂` throughout.

use crate::error::Error;
use crate::homalg::{is_hom_lie, is_multiplicative, HomAlgebra, LinearSelfMap};
use crate::linalg::Matrix;

/// Hard cap on operator size: `carrier_dim^strands` rows.
pub const MAX_OPERATOR_ROWS: usize = 10_000;

/// An operator on `(ℚ ⊕ L)^{⊗strands}` carrying its extended self-map.
#[derive(Clone, Debug)]
pub struct HybeOperator {
    carrier_dim: usize,
    strands: usize,
    matrix: Matrix,
    alpha_ext: LinearSelfMap,
}

impl HybeOperator {
    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// The map `Id ⊕ α` on the carrier.
    pub fn alpha_ext(&self) -> &LinearSelfMap {
        &self.alpha_ext
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.rank() == self.matrix.rows()
    }

    /// Assembles an operator from raw parts; used for experiments and
    /// negative controls. Shapes are checked, nothing else is.
    pub fn from_parts(
        carrier_dim: usize,
        strands: usize,
        matrix: Matrix,
        alpha_ext: LinearSelfMap,
    ) -> Result<Self, Error> {
        let rows = carrier_dim.pow(strands as u32);
        if matrix.rows() != rows || matrix.cols() != rows {
            return Err(Error::ShapeMismatch(format!(
                "operator on {strands} strands over dimension {carrier_dim} must be {rows}×{rows}, got {}×{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if alpha_ext.dim() != carrier_dim {
            return Err(Error::DimensionMismatch(format!(
                "carrier map of dimension {} on carrier of dimension {carrier_dim}",
                alpha_ext.dim()
            )));
        }
        Ok(HybeOperator {
            carrier_dim,
            strands,
            matrix,
            alpha_ext,
        })
    }
}

/// Builds `B_α` for a Hom-Lie algebra with multiplicative map.
pub fn build_b_alpha(l: &HomAlgebra) -> Result<HybeOperator, Error> {
    if !is_hom_lie(l.algebra(), l.alpha())? {
        return Err(Error::NotHomLie(
            "the Yang-Baxter operator is attached to a Hom-Lie algebra".into(),
        ));
    }
    if !is_multiplicative(l.algebra(), l.alpha())? {
        let (i, j) = crate::homalg::multiplicativity_witness(l.algebra(), l.alpha())?
            .expect("a non-multiplicative map has a witness pair");
        return Err(Error::NotMultiplicative { i, j });
    }

    let dim = l.dim();
    let carrier = dim + 1;
    let alg = l.algebra();
    // carrier vector of the pair (a, x) for a basis input
    let carrier_image = |p: usize| {
        let mut v = vec![crate::rational::Rational::zero(); carrier];
        if p == 0 {
            v[0] = crate::rational::Rational::one();
        } else {
            for (k, c) in l.alpha().basis_image(p - 1).into_iter().enumerate() {
                v[k + 1] = c;
            }
        }
        v
    };

    let mut matrix = Matrix::zeros(carrier * carrier, carrier * carrier);
    for p in 0..carrier {
        let swapped_second = carrier_image(p);
        for q in 0..carrier {
            let col = p * carrier + q;
            let swapped_first = carrier_image(q);
            // (b,α(y)) ⊗ (a,α(x))
            for (r, w1) in swapped_first.iter().enumerate() {
                if w1.is_zero() {
                    continue;
                }
                for (s, w2) in swapped_second.iter().enumerate() {
                    if w2.is_zero() {
                        continue;
                    }
                    let row = r * carrier + s;
                    let current = matrix.get(row, col).clone();
                    matrix.set(row, col, current + (w1 * w2));
                }
            }
            // (1,0) ⊗ (0,[x,y])
            if p > 0 && q > 0 {
                for (k, c) in alg.basis_product(p - 1, q - 1) {
                    let row = k + 1;
                    let current = matrix.get(row, col).clone();
                    matrix.set(row, col, current + c.clone());
                }
            }
        }
    }

    let mut ext = Matrix::zeros(carrier, carrier);
    ext.set(0, 0, crate::rational::Rational::one());
    for j in 0..dim {
        for (k, c) in l.alpha().basis_image(j).into_iter().enumerate() {
            if !c.is_zero() {
                ext.set(k + 1, j + 1, c);
            }
        }
    }
    let alpha_ext = LinearSelfMap::from_matrix(ext)?;

    // B_α commutes with α_V^{⊗2}; for multiplicative α this is an identity,
    // so a failure here is an assembly bug.
    let a2 = alpha_ext.matrix().kronecker(alpha_ext.matrix());
    assert!(
        matrix.mul(&a2)? == a2.mul(&matrix)?,
        "B_α failed to commute with (Id ⊕ α)^{{⊗2}}"
    );

    HybeOperator::from_parts(carrier, 2, matrix, alpha_ext)
}

/// Exact check of `(α⊗B)(B⊗α)(α⊗B) = (B⊗α)(α⊗B)(B⊗α)` on `V^{⊗3}`.
pub fn check_hybe(b: &HybeOperator) -> Result<bool, Error> {
    if b.strands != 2 {
        return Err(Error::WrongStrandCount(b.strands, 2));
    }
    let a = b.alpha_ext.matrix();
    let ab = a.kronecker(&b.matrix);
    let ba = b.matrix.kronecker(a);
    let lhs = ab.mul(&ba)?.mul(&ab)?;
    let rhs = ba.mul(&ab)?.mul(&ba)?;
    Ok(lhs == rhs)
}

/// The strand operators `B_i = α^{⊗(i−1)} ⊗ B ⊗ α^{⊗(n−i−1)}` on
/// `V^{⊗n}`, for `1 ≤ i ≤ n−1`. Requires a verified HYBE solution.
pub fn braid_operators(b: &HybeOperator, n: usize) -> Result<Vec<HybeOperator>, Error> {
    if n < 2 {
        return Err(Error::ShapeMismatch(format!(
            "braid operators need n ≥ 2 strands, got {n}"
        )));
    }
    let rows = b.carrier_dim.checked_pow(n as u32).unwrap_or(usize::MAX);
    if rows > MAX_OPERATOR_ROWS {
        return Err(Error::OperatorTooLarge {
            rows,
            cap: MAX_OPERATOR_ROWS,
        });
    }
    if !check_hybe(b)? {
        return Err(Error::HybeFailed);
    }
    let a = b.alpha_ext.matrix();
    let mut ops = Vec::with_capacity(n - 1);
    for i in 1..n {
        let mut m = Matrix::identity(1);
        for _ in 0..i - 1 {
            m = m.kronecker(a);
        }
        m = m.kronecker(&b.matrix);
        for _ in 0..n - i - 1 {
            m = m.kronecker(a);
        }
        ops.push(HybeOperator {
            carrier_dim: b.carrier_dim,
            strands: n,
            matrix: m,
            alpha_ext: b.alpha_ext.clone(),
        });
    }
    Ok(ops)
}

/// Exact braid relations: `B_i B_{i+1} B_i = B_{i+1} B_i B_{i+1}` for
/// adjacent pairs and `B_i B_j = B_j B_i` for `|i−j| ≥ 2`.
pub fn check_braid_relations(ops: &[HybeOperator]) -> Result<bool, Error> {
    if ops.is_empty() {
        return Ok(true);
    }
    let rows = ops[0].matrix.rows();
    for op in ops {
        if op.matrix.rows() != rows || op.matrix.cols() != rows {
            return Err(Error::DimensionMismatch(format!(
                "operator of size {}×{} in a family on {rows} rows",
                op.matrix.rows(),
                op.matrix.cols()
            )));
        }
    }
    for i in 0..ops.len() {
        for j in (i + 1)..ops.len() {
            let (bi, bj) = (&ops[i].matrix, &ops[j].matrix);
            if j == i + 1 {
                let lhs = bi.mul(bj)?.mul(bi)?;
                let rhs = bj.mul(bi)?.mul(bj)?;
                if lhs != rhs {
                    return Ok(false);
                }
            } else if bi.mul(bj)? != bj.mul(bi)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{abelian, heisenberg, sl2};
    use crate::rational::Rational;

    fn r(n: i64) -> Rational {
        Rational::integer(n)
    }

    fn swap_matrix(d: usize) -> Matrix {
        let mut s = Matrix::zeros(d * d, d * d);
        for p in 0..d {
            for q in 0..d {
                s.set(q * d + p, p * d + q, Rational::one());
            }
        }
        s
    }

    #[test]
    fn abelian_operator_is_the_swap() {
        let a = abelian(3);
        let l = HomAlgebra::twist(&a, &LinearSelfMap::identity(3)).unwrap();
        let b = build_b_alpha(&l).unwrap();
        assert_eq!(b.matrix(), &swap_matrix(4));
        assert!(check_hybe(&b).unwrap());
        assert!(b.is_invertible());
    }

    #[test]
    fn sl2_operator_matches_the_formula() {
        let (alg, alpha) = sl2(&r(2)).unwrap();
        let l = HomAlgebra::twist(&alg, &alpha).unwrap();
        let b = build_b_alpha(&l).unwrap();
        assert!(check_hybe(&b).unwrap());
        assert!(b.is_invertible());

        // B((0,e)⊗(0,f)) = (0,α(f))⊗(0,α(e)) + (1,0)⊗(0,h), with basis
        // (h,e,f): carrier indices are h→1, e→2, f→3.
        let col = 2 * 4 + 3;
        let column = b.matrix().col(col);
        let mut expected = vec![r(0); 16];
        expected[3 * 4 + 2] = Rational::one(); // (f ⊗ e) slot: (1/2)·2
        expected[1] = Rational::one(); // (1 ⊗ h) slot
        assert_eq!(column, expected);
    }

    #[test]
    fn corrupted_operator_fails() {
        let (alg, alpha) = heisenberg(&r(2), &r(3)).unwrap();
        let l = HomAlgebra::twist(&alg, &alpha).unwrap();
        let b = build_b_alpha(&l).unwrap();
        assert!(check_hybe(&b).unwrap());

        let mut m = b.matrix().clone();
        m.set(0, 0, m.get(0, 0) + &r(1));
        let bad = HybeOperator::from_parts(4, 2, m, b.alpha_ext().clone()).unwrap();
        assert!(!check_hybe(&bad).unwrap());
    }

    #[test]
    fn braid_relations_for_sl2() {
        let (alg, alpha) = sl2(&r(2)).unwrap();
        let l = HomAlgebra::twist(&alg, &alpha).unwrap();
        let b = build_b_alpha(&l).unwrap();

        let two = braid_operators(&b, 2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].matrix(), b.matrix());

        let ops = braid_operators(&b, 3).unwrap();
        assert_eq!(ops.len(), 2);
        assert_eq!(ops[0].matrix().rows(), 64);
        assert!(check_braid_relations(&ops).unwrap());
    }

    #[test]
    fn swap_braid_operators_are_transpositions() {
        let a = abelian(3);
        let l = HomAlgebra::twist(&a, &LinearSelfMap::identity(3)).unwrap();
        let b = build_b_alpha(&l).unwrap();
        let ops = braid_operators(&b, 3).unwrap();
        // with α = Id these are Id⊗swap and swap⊗Id
        assert_eq!(ops[0].matrix(), &swap_matrix(4).kronecker(&Matrix::identity(4)));
        assert_eq!(ops[1].matrix(), &Matrix::identity(4).kronecker(&swap_matrix(4)));
        assert!(check_braid_relations(&ops).unwrap());
    }

    #[test]
    fn mismatched_operator_families_fail_relations() {
        let (alg, alpha) = sl2(&r(2)).unwrap();
        let b_sl2 = build_b_alpha(&HomAlgebra::twist(&alg, &alpha).unwrap()).unwrap();
        let (alg, alpha) = heisenberg(&r(2), &r(3)).unwrap();
        let b_h = build_b_alpha(&HomAlgebra::twist(&alg, &alpha).unwrap()).unwrap();

        let mut mixed = Vec::new();
        mixed.push(braid_operators(&b_sl2, 3).unwrap().remove(0));
        mixed.push(braid_operators(&b_h, 3).unwrap().remove(1));
        assert!(!check_braid_relations(&mixed).unwrap());
    }

    #[test]
    fn guards() {
        let (alg, alpha) = sl2(&r(2)).unwrap();
        let l = HomAlgebra::twist(&alg, &alpha).unwrap();
        let b = build_b_alpha(&l).unwrap();

        // n = 7 would need 4^7 = 16384 rows
        assert!(matches!(
            braid_operators(&b, 7),
            Err(Error::OperatorTooLarge { .. })
        ));

        let three = braid_operators(&b, 3).unwrap();
        assert!(matches!(
            check_hybe(&three[0]),
            Err(Error::WrongStrandCount(3, 2))
        ));

        // a non-Hom-Lie input is refused
        let m2 = crate::families::matrix_algebra(2);
        let assoc = HomAlgebra::twist(&m2, &LinearSelfMap::identity(4)).unwrap();
        assert!(matches!(build_b_alpha(&assoc), Err(Error::NotHomLie(_))));
    }
}
