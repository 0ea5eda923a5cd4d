//! A countable-basis carrier for the vector fields on the affine line: the
//! bracket-closed subalgebra of the Witt algebra spanned by `L_n = t^{n+1}
//! d/dt` for `n ≥ -1`, with the shift endomorphism `α_λ(f·d/dt) =
//! f(λ+t)·d/dt`. The shift sends every `L_n` to a finitely-supported
//! combination of `L_{-1}, …, L_n`, so exact computation stays finite;
//! axioms are verified on sampled index windows rather than universally.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::Error;
use crate::rational::Rational;

/// Finitely-supported vector over the basis `{L_n : n ≥ -1}`:
/// sorted `(index, nonzero coefficient)` pairs.
pub type SparseLine = Vec<(i64, Rational)>;

type BracketRule = Arc<dyn Fn(i64, i64) -> Result<SparseLine, Error> + Send + Sync>;
type AlphaRule = Arc<dyn Fn(i64) -> Result<SparseLine, Error> + Send + Sync>;
type DomainRule = Arc<dyn Fn(i64) -> bool + Send + Sync>;

/// An algebra with countable basis given by rules instead of tensors.
#[derive(Clone)]
pub struct SparseAlgebra {
    bracket_rule: BracketRule,
    alpha_rule: AlphaRule,
    index_domain: DomainRule,
}

impl SparseAlgebra {
    pub fn in_domain(&self, n: i64) -> bool {
        (self.index_domain)(n)
    }

    /// Bracket of two basis elements.
    pub fn bracket_basis(&self, m: i64, n: i64) -> Result<SparseLine, Error> {
        (self.bracket_rule)(m, n)
    }

    /// Image of a basis element under the twisting map.
    pub fn alpha_basis(&self, n: i64) -> Result<SparseLine, Error> {
        (self.alpha_rule)(n)
    }

    /// Bilinear extension of the bracket rule.
    pub fn bracket(&self, x: &SparseLine, y: &SparseLine) -> Result<SparseLine, Error> {
        let mut acc = Vec::new();
        for (m, cm) in x {
            for (n, cn) in y {
                let term = self.bracket_basis(*m, *n)?;
                let scale = cm * cn;
                for (k, v) in term {
                    acc.push((k, v * &scale));
                }
            }
        }
        Ok(normalize(acc))
    }

    /// Linear extension of the twisting map.
    pub fn alpha(&self, x: &SparseLine) -> Result<SparseLine, Error> {
        let mut acc = Vec::new();
        for (n, c) in x {
            for (k, v) in self.alpha_basis(*n)? {
                acc.push((k, v * c));
            }
        }
        Ok(normalize(acc))
    }

    /// The deformed algebra with bracket `[x,y]_α = α([x,y])` and the same
    /// twisting map.
    pub fn twisted(&self) -> SparseAlgebra {
        let bracket = self.bracket_rule.clone();
        let alpha = self.alpha_rule.clone();
        let this = self.clone();
        let memo: Arc<Mutex<HashMap<(i64, i64), SparseLine>>> =
            Arc::new(Mutex::new(HashMap::new()));
        SparseAlgebra {
            bracket_rule: Arc::new(move |m, n| {
                if let Some(hit) = memo.lock().unwrap().get(&(m, n)) {
                    return Ok(hit.clone());
                }
                let classical = bracket(m, n)?;
                let twisted = this.alpha(&classical)?;
                memo.lock().unwrap().insert((m, n), twisted.clone());
                Ok(twisted)
            }),
            alpha_rule: alpha,
            index_domain: self.index_domain.clone(),
        }
    }

    /// The Hom-Jacobi sum `[α(x),[y,z]] + [α(z),[x,y]] + [α(y),[z,x]]`
    /// evaluated with this algebra's bracket and map.
    pub fn hom_jacobi_defect(
        &self,
        x: &SparseLine,
        y: &SparseLine,
        z: &SparseLine,
    ) -> Result<SparseLine, Error> {
        let mut acc = Vec::new();
        for (a, b, c) in [(x, y, z), (z, x, y), (y, z, x)] {
            let inner = self.bracket(b, c)?;
            let outer = self.bracket(&self.alpha(a)?, &inner)?;
            acc.extend(outer);
        }
        Ok(normalize(acc))
    }

    /// `α([L_m, L_n]) − [α(L_m), α(L_n)]`; zero iff α is multiplicative
    /// on that basis pair.
    pub fn multiplicativity_defect(&self, m: i64, n: i64) -> Result<SparseLine, Error> {
        let lhs = self.alpha(&self.bracket_basis(m, n)?)?;
        let rhs = self.bracket(&self.alpha_basis(m)?, &self.alpha_basis(n)?)?;
        let mut acc = lhs;
        acc.extend(rhs.into_iter().map(|(k, v)| (k, -v)));
        Ok(normalize(acc))
    }
}

/// Singleton basis vector `L_n`.
pub fn basis(n: i64) -> SparseLine {
    vec![(n, Rational::one())]
}

fn normalize(mut terms: SparseLine) -> SparseLine {
    terms.sort_by_key(|(k, _)| *k);
    let mut out: SparseLine = Vec::new();
    for (k, v) in terms {
        match out.last_mut() {
            Some((k2, v2)) if *k2 == k => *v2 += &v,
            _ => out.push((k, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

fn check_domain(n: i64) -> Result<(), Error> {
    if n < -1 {
        return Err(Error::IndexBelowDomain(n));
    }
    Ok(())
}

/// The line subalgebra `span{L_n : n ≥ -1}` with `[L_m, L_n] = (n−m)
/// L_{m+n}` and the shift map
/// `α_λ(L_n) = Σ_{k=0}^{n+1} C(n+1,k) λ^{n+1−k} L_{k−1}`.
pub fn witt_line(lambda: Rational) -> SparseAlgebra {
    let bracket_rule: BracketRule = Arc::new(|m, n| {
        check_domain(m)?;
        check_domain(n)?;
        let coeff = Rational::integer(n - m);
        if coeff.is_zero() {
            return Ok(vec![]);
        }
        // m + n ≥ -1 whenever the coefficient n−m is nonzero on this domain
        debug_assert!(m + n >= -1);
        Ok(vec![(m + n, coeff)])
    });
    let memo: Arc<Mutex<HashMap<i64, SparseLine>>> = Arc::new(Mutex::new(HashMap::new()));
    let alpha_rule: AlphaRule = Arc::new(move |n| {
        check_domain(n)?;
        if let Some(hit) = memo.lock().unwrap().get(&n) {
            return Ok(hit.clone());
        }
        let deg = (n + 1) as usize;
        let mut powers = Vec::with_capacity(deg + 1);
        powers.push(Rational::one());
        for _ in 0..deg {
            powers.push(powers.last().unwrap() * &lambda);
        }
        let mut out = Vec::new();
        for k in 0..=deg {
            let coeff = &Rational::integer(binomial(deg, k)) * &powers[deg - k];
            if !coeff.is_zero() {
                out.push((k as i64 - 1, coeff));
            }
        }
        memo.lock().unwrap().insert(n, out.clone());
        Ok(out)
    });
    SparseAlgebra {
        bracket_rule,
        alpha_rule,
        index_domain: Arc::new(|n| n >= -1),
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}
