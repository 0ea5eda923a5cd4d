//! Builders for the deformation families: sl(n), the Heisenberg algebra,
//! abelian algebras, full matrix algebras, group algebras over a Cayley
//! table, and truncated polynomial algebras. Each builder that carries a
//! twisting map validates it with [`is_multiplicative`] before returning.

use crate::error::Error;
use crate::homalg::{is_multiplicative, FinAlgebra, LinearSelfMap};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// sl(n) with the diagonal morphism `α(e_i) = λ_i e_i`, `α(f_i) = λ_i⁻¹ f_i`,
/// `α(h_i) = h_i`, extended to the E_ij basis by products of the λ's.
///
/// Basis order: `h_1 .. h_{n-1}`, then `E_ij` (i ≠ j) in row-major order.
/// For n = 2 the labels are the classical `h, e, f`.
pub fn sl_n(n: usize, lambdas: &[Rational]) -> Result<(FinAlgebra, LinearSelfMap), Error> {
    if n < 2 {
        return Err(Error::ShapeMismatch(format!("sl({n}) needs n ≥ 2")));
    }
    if lambdas.len() != n - 1 {
        return Err(Error::ShapeMismatch(format!(
            "sl({n}) takes {} parameters, got {}",
            n - 1,
            lambdas.len()
        )));
    }
    for (i, l) in lambdas.iter().enumerate() {
        if l.is_zero() {
            return Err(Error::ZeroParameter(i + 1));
        }
    }

    // Basis elements as n×n matrices.
    let dim = n * n - 1;
    let mut basis_mats: Vec<Matrix> = Vec::with_capacity(dim);
    let mut labels: Vec<String> = Vec::with_capacity(dim);
    for i in 0..n - 1 {
        let mut h = Matrix::zeros(n, n);
        h.set(i, i, Rational::one());
        h.set(i + 1, i + 1, Rational::integer(-1));
        basis_mats.push(h);
        labels.push(if n == 2 {
            "h".to_string()
        } else {
            format!("h{}", i + 1)
        });
    }
    let mut off_diag = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut e = Matrix::zeros(n, n);
            e.set(i, j, Rational::one());
            basis_mats.push(e);
            off_diag.push((i, j));
            labels.push(match (n, i, j) {
                (2, 0, 1) => "e".to_string(),
                (2, 1, 0) => "f".to_string(),
                _ => format!("E{}{}", i + 1, j + 1),
            });
        }
    }

    // Express a traceless n×n matrix in this basis.
    let coords = |m: &Matrix| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        // diagonal part: partial sums against h_i = E_ii − E_{i+1,i+1}
        let mut partial = Rational::zero();
        for i in 0..n - 1 {
            partial += m.get(i, i);
            v[i] = partial.clone();
        }
        for (t, &(i, j)) in off_diag.iter().enumerate() {
            v[n - 1 + t] = m.get(i, j).clone();
        }
        v
    };

    let mut entries = Vec::new();
    for a in 0..dim {
        for b in 0..dim {
            let ab = basis_mats[a].mul(&basis_mats[b])?;
            let ba = basis_mats[b].mul(&basis_mats[a])?;
            let bracket = coords(&ab.sub(&ba)?);
            for (k, v) in bracket.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push((a, b, k, v));
                }
            }
        }
    }
    let algebra = FinAlgebra::from_entries(dim, labels, entries)?;

    // α is diagonal: E_ij ↦ (λ_i···λ_{j-1}) E_ij for i<j and the inverse
    // product for i>j (1-based indices as usual for these generators).
    let mut diag = vec![Rational::one(); dim];
    for (t, &(i, j)) in off_diag.iter().enumerate() {
        let factor = if i < j {
            lambdas[i..j].iter().fold(Rational::one(), |acc, l| acc * l)
        } else {
            lambdas[j..i]
                .iter()
                .fold(Rational::one(), |acc, l| acc * l)
                .inv()?
        };
        diag[n - 1 + t] = factor;
    }
    let alpha = LinearSelfMap::diagonal(diag);

    assert!(
        is_multiplicative(&algebra, &alpha)?,
        "sl(n) twisting map failed its multiplicativity validation"
    );
    Ok((algebra, alpha))
}

/// sl(2) with basis (h, e, f) and `α(h)=h, α(e)=λe, α(f)=λ⁻¹f`.
pub fn sl2(lambda: &Rational) -> Result<(FinAlgebra, LinearSelfMap), Error> {
    sl_n(2, std::slice::from_ref(lambda))
}

/// The 3-dimensional Heisenberg algebra on basis (e, f, h) with `[e,f] = h`,
/// twisted by `α = diag(λ₁, λ₂, λ₁λ₂)`.
pub fn heisenberg(l1: &Rational, l2: &Rational) -> Result<(FinAlgebra, LinearSelfMap), Error> {
    if l1.is_zero() {
        return Err(Error::ZeroParameter(1));
    }
    if l2.is_zero() {
        return Err(Error::ZeroParameter(2));
    }
    let algebra = FinAlgebra::from_entries(
        3,
        vec!["e".into(), "f".into(), "h".into()],
        vec![
            (0, 1, 2, Rational::one()),
            (1, 0, 2, Rational::integer(-1)),
        ],
    )?;
    let alpha = LinearSelfMap::diagonal(vec![l1.clone(), l2.clone(), l1 * l2]);
    assert!(
        is_multiplicative(&algebra, &alpha)?,
        "Heisenberg twisting map failed its multiplicativity validation"
    );
    Ok((algebra, alpha))
}

/// The n-dimensional algebra with all products zero.
pub fn abelian(n: usize) -> FinAlgebra {
    let labels = (1..=n).map(|i| format!("x{i}")).collect();
    FinAlgebra::from_entries(n, labels, vec![]).expect("abelian algebra data is well-formed")
}

/// The full matrix algebra M_n(ℚ) on the basis `E_ij`, with
/// `E_ij · E_kl = δ_jk E_il`.
pub fn matrix_algebra(n: usize) -> FinAlgebra {
    assert!(n >= 1, "matrix algebra needs n ≥ 1");
    let idx = |i: usize, j: usize| i * n + j;
    let mut labels = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                entries.push((idx(i, j), idx(j, l), idx(i, l), Rational::one()));
            }
        }
    }
    FinAlgebra::from_entries(n * n, labels, entries).expect("matrix algebra data is well-formed")
}

/// gl(n) = commutator bracket of M_n(ℚ), twisted by conjugation with an
/// invertible rational matrix `x` (the map Ad_x on the matrix Lie algebra).
pub fn gl_n_with_ad(n: usize, x: &Matrix) -> Result<(FinAlgebra, LinearSelfMap), Error> {
    if x.rows() != n || x.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "conjugating element must be {n}×{n}, got {}×{}",
            x.rows(),
            x.cols()
        )));
    }
    let assoc = matrix_algebra(n);
    let element: Vec<Rational> = (0..n * n).map(|t| x.get(t / n, t % n).clone()).collect();
    let ad = crate::homalg::inner_automorphism(&assoc, &element)?;
    let bracket = assoc.commutator();
    assert!(
        is_multiplicative(&bracket, &ad)?,
        "Ad_x failed its multiplicativity validation on gl(n)"
    );
    Ok((bracket, ad))
}

/// Group algebra ℚ[G] from a Cayley table, twisted along a group morphism
/// given as an index map. The table is fully verified (closure, identity,
/// inverses, associativity) and the map is verified to be a morphism.
pub fn group_algebra(
    cayley: &[Vec<usize>],
    endo: &[usize],
) -> Result<(FinAlgebra, LinearSelfMap), Error> {
    let dim = cayley.len();
    if dim == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for (g, row) in cayley.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::NotAGroup(format!(
                "row {g} has length {}",
                row.len()
            )));
        }
        for &v in row {
            if v >= dim {
                return Err(Error::NotAGroup(format!("entry {v} out of range")));
            }
        }
    }
    let identity = (0..dim)
        .find(|&e| (0..dim).all(|g| cayley[e][g] == g && cayley[g][e] == g))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for g in 0..dim {
        if !(0..dim).any(|h| cayley[g][h] == identity && cayley[h][g] == identity) {
            return Err(Error::NotAGroup(format!("element {g} has no inverse")));
        }
    }
    for g in 0..dim {
        for h in 0..dim {
            for k in 0..dim {
                if cayley[cayley[g][h]][k] != cayley[g][cayley[h][k]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({g},{h},{k})"
                    )));
                }
            }
        }
    }

    if endo.len() != dim {
        return Err(Error::ShapeMismatch(format!(
            "endomorphism map has length {}, table has {dim} elements",
            endo.len()
        )));
    }
    for &v in endo {
        if v >= dim {
            return Err(Error::IndexOutOfRange { index: v, dim });
        }
    }
    for g in 0..dim {
        for h in 0..dim {
            if endo[cayley[g][h]] != cayley[endo[g]][endo[h]] {
                return Err(Error::NotAGroupMorphism { g, h });
            }
        }
    }

    let labels = (0..dim).map(|g| format!("g{g}")).collect();
    let entries = (0..dim).flat_map(|g| {
        let row = &cayley[g];
        (0..dim).map(move |h| (g, h, row[h], Rational::one()))
    });
    let algebra = FinAlgebra::from_entries(dim, labels, entries.collect::<Vec<_>>())?;

    let mut mat = Matrix::zeros(dim, dim);
    for (g, &img) in endo.iter().enumerate() {
        mat.set(img, g, Rational::one());
    }
    let alpha = LinearSelfMap::from_matrix(mat)?;
    assert!(
        is_multiplicative(&algebra, &alpha)?,
        "group morphism failed its multiplicativity validation"
    );
    Ok((algebra, alpha))
}

/// Cayley table of the cyclic group of the given order.
pub fn cyclic_group_table(order: usize) -> Vec<Vec<usize>> {
    (0..order)
        .map(|g| (0..order).map(|h| (g + h) % order).collect())
        .collect()
}

/// The power map `g ↦ g^k` on the cyclic group of the given order.
pub fn cyclic_power_endo(order: usize, k: usize) -> Vec<usize> {
    (0..order).map(|g| (g * k) % order).collect()
}

/// Truncated polynomial algebra ℚ[x]/(x^d) with the substitution
/// endomorphism `x ↦ p(x)`. The substitution polynomial must have zero
/// constant term so that it descends to the quotient.
pub fn truncated_poly(
    d: usize,
    p_coeffs: &[Rational],
) -> Result<(FinAlgebra, LinearSelfMap), Error> {
    if d < 1 {
        return Err(Error::ShapeMismatch("quotient degree must be ≥ 1".into()));
    }
    if p_coeffs.first().is_some_and(|c| !c.is_zero()) {
        return Err(Error::NonzeroConstantTerm);
    }
    let labels = (0..d)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        })
        .collect();
    let mut entries = Vec::new();
    for a in 0..d {
        for b in 0..d {
            if a + b < d {
                entries.push((a, b, a + b, Rational::one()));
            }
        }
    }
    let algebra = FinAlgebra::from_entries(d, labels, entries)?;

    // α(x^k) = p(x)^k mod x^d, computed by repeated truncated multiplication.
    let p: Vec<Rational> = (0..d)
        .map(|k| p_coeffs.get(k).cloned().unwrap_or_else(Rational::zero))
        .collect();
    let mut mat = Matrix::zeros(d, d);
    let mut power = {
        let mut one = vec![Rational::zero(); d];
        one[0] = Rational::one();
        one
    };
    for k in 0..d {
        if k > 0 {
            power = poly_mul_trunc(&power, &p, d);
        }
        for (row, c) in power.iter().enumerate() {
            mat.set(row, k, c.clone());
        }
    }
    let alpha = LinearSelfMap::from_matrix(mat)?;
    assert!(
        is_multiplicative(&algebra, &alpha)?,
        "substitution map failed its multiplicativity validation"
    );
    Ok((algebra, alpha))
}

fn poly_mul_trunc(a: &[Rational], b: &[Rational], d: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); d];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= d {
                break;
            }
            if !bj.is_zero() {
                out[i + j] += &(ai * bj);
            }
        }
    }
    out
}
