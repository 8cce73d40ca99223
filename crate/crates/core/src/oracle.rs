//! Brute-force evaluators for the residue identities behind the degree
//! formulas. Nothing here is fast; everything here is independent of the
//! routes in [`crate::degree`] and serves as ground truth in tests.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::degree::{block_space, SamplePoints};
use crate::linalg::{signed_permutations, subsets};
use crate::polynomial::{ExponentCap, Monomial, SparsePolynomial, VariableSpace};
use crate::{Error, Rational, Result};

/// Monic `Q(x) = ∏ (x − root)` with distinct roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedPolynomial {
    roots: Vec<Rational>,
}

impl RootedPolynomial {
    pub fn new(roots: Vec<Rational>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidVariableSpace("a rooted polynomial needs at least one root".into()));
        }
        for j in 0..roots.len() {
            if let Some(i) = roots[..j].iter().position(|v| *v == roots[j]) {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
        Ok(Self { roots })
    }

    pub fn from_integers(roots: &[i64]) -> Result<Self> {
        Self::new(roots.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn roots(&self) -> &[Rational] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// `Q'(root_j) = ∏_{k≠j} (root_j − root_k)`.
    pub fn derivative_at(&self, j: usize) -> Rational {
        let mut acc = Rational::one();
        for (k, other) in self.roots.iter().enumerate() {
            if k != j {
                acc *= &self.roots[j] - other;
            }
        }
        acc
    }
}

/// `Σ F(α_1,…,α_n) / (Q_1'(α_1)⋯Q_n'(α_n))` over every tuple of roots.
///
/// Requires `deg F ≤ Σ (deg Q_i − 1)`.
pub fn residue_sum(qs: &[RootedPolynomial], f: &SparsePolynomial) -> Result<Rational> {
    let arity = f.space().arity();
    if qs.len() != arity {
        return Err(Error::ArityMismatch { expected: arity, found: qs.len() });
    }
    let bound: usize = qs.iter().map(|q| q.degree() - 1).sum();
    if let Some(deg) = f.total_degree() {
        if deg as usize > bound {
            return Err(Error::DegreeBound { degree: deg, bound: bound as u32 });
        }
    }
    let derivatives: Vec<Vec<Rational>> =
        qs.iter().map(|q| (0..q.degree()).map(|j| q.derivative_at(j)).collect()).collect();

    let mut choice = vec![0usize; arity];
    let mut total = Rational::zero();
    loop {
        let point: Vec<Rational> = choice.iter().zip(qs).map(|(&j, q)| q.roots[j].clone()).collect();
        let mut weight = Rational::one();
        for (i, &j) in choice.iter().enumerate() {
            weight *= &derivatives[i][j];
        }
        total += f.evaluate(&point)? / weight;

        // odometer over the root tuples
        let mut i = 0;
        loop {
            if i == arity {
                return Ok(total);
            }
            choice[i] += 1;
            if choice[i] < qs[i].degree() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Invariance under permutations of the first `r` variables and, separately,
/// of the remaining ones.
pub fn is_doubly_symmetric(p: &SparsePolynomial, r: usize) -> bool {
    let n = p.space().arity();
    r <= n && p.is_symmetric_in(0..r) && p.is_symmetric_in(r..n)
}

fn check_doubly_symmetric(p: &SparsePolynomial, r: usize, n: usize) -> Result<()> {
    if r == 0 || r >= n {
        return Err(Error::UnsupportedRank { n: n as u32, r: r as u32 });
    }
    if p.space().arity() != n {
        return Err(Error::ArityMismatch { expected: n, found: p.space().arity() });
    }
    if !is_doubly_symmetric(p, r) {
        return Err(Error::NotDoublySymmetric { r, rest: n - r });
    }
    let bound = (r * (n - r)) as u32;
    match p.total_degree() {
        Some(deg) if deg > bound => Err(Error::DegreeBound { degree: deg, bound }),
        _ => Ok(()),
    }
}

/// `Σ_{#I=r} P(λ_I, λ_{I^c}) / ∏_{i∈I, j∈I^c} (λ_i − λ_j)`.
pub fn doubly_symmetric_sum(p: &SparsePolynomial, lambdas: &SamplePoints, r: usize) -> Result<Rational> {
    let n = lambdas.len();
    check_doubly_symmetric(p, r, n)?;
    let values = lambdas.values();
    let mut total = Rational::zero();
    for set in subsets(n, r) {
        let complement: Vec<usize> = (0..n).filter(|i| !set.contains(i)).collect();
        let point: Vec<Rational> = set.iter().chain(&complement).map(|&i| values[i].clone()).collect();
        let mut denom = Rational::one();
        for &i in &set {
            for &j in &complement {
                denom *= &values[i] - &values[j];
            }
        }
        total += p.evaluate(&point)? / denom;
    }
    Ok(total)
}

/// Coefficient of `x_1^{n−1}⋯y_{n−r}^{n−1}` in
/// `P ∏_{i≠j}(x_i−x_j) ∏_{i≠j}(y_i−y_j) ∏_{i,j}(y_i−x_j)`.
pub fn d_coefficient(p: &SparsePolynomial, r: usize, n: usize) -> Result<Rational> {
    check_doubly_symmetric(p, r, n)?;
    let space = p.space();
    let target = Monomial::uniform(n, n as u32 - 1);
    let cap = ExponentCap::at(&target);
    let linear = |plus: usize, minus: usize| {
        SparsePolynomial::from_terms(
            space,
            [(Monomial::variable(n, plus), Rational::one()), (Monomial::variable(n, minus), -Rational::one())],
        )
    };
    let mut acc = p.truncate(&cap);
    for i in 0..n {
        for j in 0..n {
            let same_block = (i < r) == (j < r);
            if i == j {
                continue;
            }
            // ordered pairs within a block, and y_i − x_j across blocks
            if same_block || (i >= r && j < r) {
                acc = acc.mul(&linear(i, j)?, &cap)?;
            }
        }
    }
    Ok(acc.coefficient_of(&target))
}

/// A random integer polynomial in `x1..xr, y1..y{n−r}` of degree at most
/// `max_deg`, made doubly symmetric by summing over its orbit under
/// `S_r × S_{n−r}`. Deterministic per seed.
pub fn random_doubly_symmetric(r: usize, n: usize, max_deg: u32, seed: u64) -> Result<SparsePolynomial> {
    if r == 0 || r >= n {
        return Err(Error::UnsupportedRank { n: n as u32, r: r as u32 });
    }
    let bound = (r * (n - r)) as u32;
    if max_deg > bound {
        return Err(Error::DegreeBound { degree: max_deg, bound });
    }
    let space = block_space(n as u32, r as u32);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seed_poly = random_polynomial(&space, max_deg, 1 + rng.random_range(0..4usize), &mut rng)?;

    let x_perms = signed_permutations(r);
    let y_perms = signed_permutations(n - r);
    let mut acc = SparsePolynomial::zero(&space);
    for (xp, _) in &x_perms {
        for (yp, _) in &y_perms {
            let perm: Vec<usize> = xp.iter().copied().chain(yp.iter().map(|&j| j + r)).collect();
            acc = acc.add(&seed_poly.permute_variables(&perm)?)?;
        }
    }
    Ok(acc)
}

fn random_polynomial(space: &VariableSpace, max_deg: u32, terms: usize, rng: &mut ChaCha8Rng) -> Result<SparsePolynomial> {
    let n = space.arity();
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let degree = rng.random_range(0..=max_deg);
        let mut exps = vec![0u32; n];
        for _ in 0..degree {
            exps[rng.random_range(0..n)] += 1;
        }
        let mut coeff = rng.random_range(-5i64..=4);
        if coeff >= 0 {
            coeff += 1;
        }
        out.push((Monomial::new(exps), Rational::from_integer(coeff.into())));
    }
    SparsePolynomial::from_terms(space, out)
}

/// One random instance for the Lemma-style residue identity: 1–3 variables,
/// each `Q_i` with 1–4 distinct roots in `[−9, 9]`, and `F` of degree at most
/// `Σ d_i` that contains the target monomial `x^d` about half the time.
/// Returns the polynomials, `F`, and the target monomial.
pub fn random_residue_case(seed: u64) -> Result<(Vec<RootedPolynomial>, SparsePolynomial, Monomial)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arity = rng.random_range(1..=3usize);
    let space = VariableSpace::indexed("z", arity)?;
    let mut qs = Vec::with_capacity(arity);
    for _ in 0..arity {
        let count = rng.random_range(1..=4usize);
        let mut roots: Vec<i64> = Vec::with_capacity(count);
        while roots.len() < count {
            let v = rng.random_range(-9i64..=9);
            if !roots.contains(&v) {
                roots.push(v);
            }
        }
        qs.push(RootedPolynomial::from_integers(&roots)?);
    }
    let target = Monomial::new(qs.iter().map(|q| q.degree() as u32 - 1).collect());
    let bound = target.degree();
    let mut f = random_polynomial(&space, bound, rng.random_range(1..=6usize), &mut rng)?;
    if rng.random_bool(0.5) {
        let coeff = Rational::from_integer(rng.random_range(1i64..=7).into());
        f = f.add(&SparsePolynomial::from_terms(&space, [(target.clone(), coeff)])?)?;
    }
    Ok((qs, f, target))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn residue_sum_one_variable() {
        let s = VariableSpace::indexed("x", 1).unwrap();
        let qs = [RootedPolynomial::from_integers(&[0, 1]).unwrap()];
        let x = SparsePolynomial::variable(&s, 0).unwrap();
        assert_eq!(residue_sum(&qs, &x).unwrap(), q(1));
        assert_eq!(residue_sum(&qs, &SparsePolynomial::one(&s)).unwrap(), q(0));
        let x2 = x.mul(&x, &ExponentCap::Unbounded).unwrap();
        assert_eq!(residue_sum(&qs, &x2), Err(Error::DegreeBound { degree: 2, bound: 1 }));
    }

    #[test]
    fn residue_sum_factorizes() {
        let s = VariableSpace::new(["x", "y"]).unwrap();
        let qs = [RootedPolynomial::from_integers(&[0, 1]).unwrap(), RootedPolynomial::from_integers(&[0, 1]).unwrap()];
        let xy = SparsePolynomial::from_int_terms(&s, &[(&[1, 1], 1)]).unwrap();
        assert_eq!(residue_sum(&qs, &xy).unwrap(), q(1));
        assert!(matches!(residue_sum(&qs[..1], &xy), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn rooted_polynomial_validation() {
        assert_eq!(RootedPolynomial::from_integers(&[1, 1]), Err(Error::CoincidentPoints(0, 1)));
        assert!(RootedPolynomial::from_integers(&[]).is_err());
        let qp = RootedPolynomial::from_integers(&[0, 1, 3]).unwrap();
        assert_eq!(qp.derivative_at(0), q(3));
        assert_eq!(qp.derivative_at(2), q(6));
    }

    #[test]
    fn doubly_symmetric_small() {
        let s = block_space(2, 1);
        let pts = SamplePoints::from_integers(&[3, 7]).unwrap();
        let one = SparsePolynomial::one(&s);
        let x1 = SparsePolynomial::variable(&s, 0).unwrap();
        let y1 = SparsePolynomial::variable(&s, 1).unwrap();
        assert_eq!(doubly_symmetric_sum(&one, &pts, 1).unwrap(), q(0));
        assert_eq!(doubly_symmetric_sum(&x1, &pts, 1).unwrap(), q(1));
        assert_eq!(doubly_symmetric_sum(&y1, &pts, 1).unwrap(), q(-1));
        assert_eq!(d_coefficient(&one, 1, 2).unwrap(), q(0));
        assert_eq!(d_coefficient(&x1, 1, 2).unwrap(), q(1));
        assert_eq!(d_coefficient(&y1, 1, 2).unwrap(), q(-1));
    }

    #[test]
    fn asymmetric_input_rejected() {
        let s = block_space(3, 2);
        let x1 = SparsePolynomial::variable(&s, 0).unwrap();
        let pts = SamplePoints::standard(3);
        assert_eq!(doubly_symmetric_sum(&x1, &pts, 2), Err(Error::NotDoublySymmetric { r: 2, rest: 1 }));
    }

    #[test]
    fn random_generator_properties() {
        let a = random_doubly_symmetric(2, 4, 3, 11).unwrap();
        assert_eq!(a, random_doubly_symmetric(2, 4, 3, 11).unwrap());
        assert!(is_doubly_symmetric(&a, 2));
        assert_eq!(a.swap_variables(0, 1).unwrap(), a);
        let c = random_doubly_symmetric(2, 4, 0, 5).unwrap();
        assert!(c.total_degree().is_none_or(|d| d == 0));
        assert!(random_doubly_symmetric(1, 3, 3, 0).is_err());
    }

    #[test]
    fn residue_case_generator_respects_bounds() {
        for seed in 0..20 {
            let (qs, f, target) = random_residue_case(seed).unwrap();
            assert_eq!(qs.len(), f.space().arity());
            assert!(f.total_degree().unwrap_or(0) <= target.degree());
        }
    }
}
