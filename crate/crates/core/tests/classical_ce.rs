//! Cross-checks the boundary assembly against an independently coded
//! classical Chevalley-Eilenberg differential. With both self-maps equal to
//! the identity the two constructions must agree entrywise.

use homtwist::families::{abelian, heisenberg, sl2};
use homtwist::homology::{build_ce_complex, increasing_tuples, HomModule};
use homtwist::{FinAlgebra, HomAlgebra, LinearSelfMap, Matrix, Rational};

/// Classical CE boundary, written directly against sorted index tuples:
/// no wedge expansion machinery, just deletion and sorted insertion.
fn classical_boundary(l: &FinAlgebra, m: &HomModule, p: usize) -> Matrix {
    let dim = l.dim();
    let lower = increasing_tuples(dim, p - 1);
    let upper = increasing_tuples(dim, p);
    let pos_of = |tuple: &[usize]| lower.iter().position(|t| t == tuple).unwrap();

    let mut d = Matrix::zeros(m.dim() * lower.len(), m.dim() * upper.len());
    for (t_idx, tuple) in upper.iter().enumerate() {
        for a in 0..m.dim() {
            let col = a * upper.len() + t_idx;
            // Σ (−1)^{t+1} (m·x_t) ⊗ x₁…x̂_t…x_p
            for t in 0..p {
                let mut rest = tuple.clone();
                rest.remove(t);
                for (b, c) in m.act_basis(a, tuple[t]) {
                    let row = b * lower.len() + pos_of(&rest);
                    let signed = if t % 2 == 0 { c.clone() } else { -c.clone() };
                    let cur = d.get(row, col).clone();
                    d.set(row, col, cur + signed);
                }
            }
            // Σ_{s<t} (−1)^{s+t} m ⊗ [x_s,x_t] ∧ x₁…x̂_s…x̂_t…x_p
            for s in 0..p {
                for t in (s + 1)..p {
                    let mut rest = tuple.clone();
                    rest.remove(t);
                    rest.remove(s);
                    for (k, c) in l.basis_product(tuple[s], tuple[t]) {
                        if rest.contains(k) {
                            continue;
                        }
                        let insert_at = rest.iter().filter(|&&r| r < *k).count();
                        let mut target = rest.clone();
                        target.insert(insert_at, *k);
                        let pair_sign = (s + t) % 2 == 0;
                        let insert_sign = insert_at % 2 == 0;
                        let positive = pair_sign == insert_sign;
                        let row = a * lower.len() + pos_of(&target);
                        let signed = if positive { c.clone() } else { -c.clone() };
                        let cur = d.get(row, col).clone();
                        d.set(row, col, cur + signed);
                    }
                }
            }
        }
    }
    d
}

fn classical(l: FinAlgebra) -> HomAlgebra {
    let id = LinearSelfMap::identity(l.dim());
    HomAlgebra::twist(&l, &id).unwrap()
}

fn compare_all_degrees(l: &HomAlgebra, m: &HomModule) {
    let c = build_ce_complex(l, m, l.dim()).unwrap();
    for p in 1..=l.dim() {
        let expected = classical_boundary(l.algebra(), m, p);
        assert_eq!(
            c.boundary(p).unwrap(),
            &expected,
            "boundary d_{p} disagrees with the classical assembly"
        );
    }
}

#[test]
fn sl2_matches_classical_ce() {
    let (a, _) = sl2(&Rational::integer(1)).unwrap();
    let l = classical(a);
    compare_all_degrees(&l, &HomModule::trivial(&l));
    compare_all_degrees(&l, &HomModule::adjoint(&l));
}

#[test]
fn heisenberg_matches_classical_ce() {
    let (a, _) = heisenberg(&Rational::integer(1), &Rational::integer(1)).unwrap();
    let l = classical(a);
    compare_all_degrees(&l, &HomModule::trivial(&l));
    compare_all_degrees(&l, &HomModule::adjoint(&l));
}

#[test]
fn euler_characteristic_is_preserved() {
    let cases: Vec<HomAlgebra> = vec![
        classical(abelian(3)),
        {
            let (a, alpha) = sl2(&Rational::integer(2)).unwrap();
            HomAlgebra::twist(&a, &alpha).unwrap()
        },
        {
            let (a, alpha) = heisenberg(&Rational::integer(2), &Rational::integer(3)).unwrap();
            HomAlgebra::twist(&a, &alpha).unwrap()
        },
    ];
    for l in &cases {
        for m in [HomModule::trivial(l), HomModule::adjoint(l)] {
            let c = build_ce_complex(l, &m, l.dim()).unwrap();
            let rows = c.homology().unwrap();
            let chain: i64 = rows
                .iter()
                .map(|r| {
                    let sign = if r.degree % 2 == 0 { 1 } else { -1 };
                    sign * r.chain_dim as i64
                })
                .sum();
            let homology: i64 = rows
                .iter()
                .map(|r| {
                    let sign = if r.degree % 2 == 0 { 1 } else { -1 };
                    sign * r.homology_dim as i64
                })
                .sum();
            assert_eq!(chain, homology);
        }
    }
}

fn permute_algebra(a: &FinAlgebra, perm: &[usize]) -> FinAlgebra {
    let mut labels = vec![String::new(); a.dim()];
    for (i, l) in a.labels().iter().enumerate() {
        labels[perm[i]] = l.clone();
    }
    let entries: Vec<_> = a
        .entries()
        .map(|(i, j, k, v)| (perm[i], perm[j], perm[k], v.clone()))
        .collect();
    FinAlgebra::from_entries(a.dim(), labels, entries).unwrap()
}

fn permute_map(m: &LinearSelfMap, perm: &[usize]) -> LinearSelfMap {
    let mut out = Matrix::zeros(m.dim(), m.dim());
    for r in 0..m.dim() {
        for c in 0..m.dim() {
            out.set(perm[r], perm[c], m.matrix().get(r, c).clone());
        }
    }
    LinearSelfMap::from_matrix(out).unwrap()
}

#[test]
fn homology_is_basis_order_invariant() {
    let (a, alpha) = heisenberg(&Rational::integer(2), &Rational::integer(3)).unwrap();
    let l = HomAlgebra::twist(&a, &alpha).unwrap();
    let reference: Vec<usize> = build_ce_complex(&l, &HomModule::adjoint(&l), 3)
        .unwrap()
        .homology()
        .unwrap()
        .iter()
        .map(|r| r.homology_dim)
        .collect();

    let perms: [[usize; 3]; 5] = [
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for perm in perms {
        let pa = permute_algebra(&a, &perm);
        let palpha = permute_map(&alpha, &perm);
        let pl = HomAlgebra::twist(&pa, &palpha).unwrap();
        let dims: Vec<usize> = build_ce_complex(&pl, &HomModule::adjoint(&pl), 3)
            .unwrap()
            .homology()
            .unwrap()
            .iter()
            .map(|r| r.homology_dim)
            .collect();
        assert_eq!(dims, reference, "permutation {perm:?} changed homology");
    }
}
