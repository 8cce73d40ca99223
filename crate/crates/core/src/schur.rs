//! Schur polynomials, the Pieri rule for `e_k`, Schur-basis decomposition and
//! the Pascal-minor coefficients `ψ_I` of `h_d` over pairwise sums.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::{bareiss_determinant, binomial, signed_permutations, subsets, ExactRing};
use crate::partitions::{enumerate_partitions, index_set_of, IndexSet, Partition};
use crate::polynomial::{elementary_symmetric, ExponentCap, Monomial, SparsePolynomial, VariableSpace};
use crate::{Error, Rational, Result};

/// `Σ c_λ s_λ` over a fixed number of variables; zero coefficients are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition, Rational>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(terms: I) -> Self {
        let mut out = Self::new();
        for (lam, c) in terms {
            out.add_term(lam, c);
        }
        out
    }

    pub fn add_term(&mut self, lam: Partition, c: Rational) {
        let entry = self.coeffs.entry(lam).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coefficient(&self, lam: &Partition) -> Rational {
        self.coeffs.get(lam).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in descending partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> + '_ {
        self.coeffs.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Expands back to a polynomial in `space`.
    pub fn to_polynomial(&self, space: &VariableSpace) -> Result<SparsePolynomial> {
        let mut acc = SparsePolynomial::zero(space);
        for (lam, c) in &self.coeffs {
            acc = acc.add(&bialternant_in(space, lam)?.scale(c))?;
        }
        Ok(acc)
    }
}

/// The standard space `x1, …, xr` used for Schur polynomials.
pub fn schur_space(r: usize) -> Result<VariableSpace> {
    VariableSpace::indexed("x", r)
}

/// Alternant `det(x_i^{α_j})` expanded over all permutations.
fn alternant(space: &VariableSpace, exponents: &[u32]) -> Result<SparsePolynomial> {
    let r = space.arity();
    let terms = signed_permutations(r).into_iter().map(|(perm, sign)| {
        let m = Monomial::new(perm.iter().map(|&j| exponents[j]).collect());
        (m, Rational::from_integer(BigInt::from(sign)))
    });
    SparsePolynomial::from_terms(space, terms)
}

/// `s_λ(x_1..x_r) = a_{λ+δ_r} / a_{δ_r}` with `δ_r = (r−1, …, 1, 0)`.
pub fn schur_bialternant(lam: &Partition, r: usize) -> Result<SparsePolynomial> {
    bialternant_in(&schur_space(r)?, lam)
}

/// Bialternant quotient over every variable of `space`.
pub fn bialternant_in(space: &VariableSpace, lam: &Partition) -> Result<SparsePolynomial> {
    let r = space.arity();
    let padded = lam.padded(r)?;
    let shifted: Vec<u32> = padded.iter().enumerate().map(|(j, &p)| p + (r - 1 - j) as u32).collect();
    let staircase: Vec<u32> = (0..r).map(|j| (r - 1 - j) as u32).collect();
    // a nonzero remainder would mean a bug, never a property of the input
    alternant(space, &shifted)?.div_exact(&alternant(space, &staircase)?)
}

/// The `k×k` matrix with `(i, j)` entry `e_{j−i+1}`: ones on the
/// subdiagonal, zeros below it.
///
/// `e` must hold `e_0 = 1, e_1, …, e_k`.
pub fn dual_jacobi_trudi_matrix<T: ExactRing>(e: &[T], k: usize) -> Vec<Vec<T>> {
    let zero = e[0].zero_like();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if j + 1 >= i { e[j + 1 - i].clone() } else { zero.clone() })
                .collect()
        })
        .collect()
}

/// `h_k(forms)` through the dual Jacobi–Trudi determinant in `e_1..e_k`.
pub fn schur_jacobi_trudi_dual(
    space: &VariableSpace,
    forms: &[SparsePolynomial],
    k: usize,
) -> Result<SparsePolynomial> {
    let e = (0..=k)
        .map(|i| elementary_symmetric(space, forms, i, &ExponentCap::Unbounded))
        .collect::<Result<Vec<_>>>()?;
    bareiss_determinant(&dual_jacobi_trudi_matrix(&e, k), &SparsePolynomial::one(space))
}

/// Shapes `γ ⊃ λ` such that `γ/λ` is a vertical strip of `k` boxes with at
/// most `r` rows, i.e. the support of `s_λ · e_k` in `r` variables. Returned
/// in descending order.
pub fn pieri_multiply(lam: &Partition, k: usize, r: usize) -> Result<Vec<Partition>> {
    let base = lam.padded(r)?;
    let mut out: Vec<Partition> = subsets(r, k)
        .filter_map(|rows| {
            let mut parts = base.clone();
            for row in rows {
                parts[row] += 1;
            }
            Partition::new(parts).ok()
        })
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Writes a symmetric polynomial in the Schur basis by peeling graded-lex
/// leading terms.
pub fn schur_decompose(p: &SparsePolynomial) -> Result<SchurExpansion> {
    let space = p.space();
    if !p.is_symmetric_in(0..space.arity()) {
        return Err(Error::NotSymmetric);
    }
    let mut cache: BTreeMap<Partition, SparsePolynomial> = BTreeMap::new();
    let mut remainder = p.clone();
    let mut out = SchurExpansion::new();
    while let Some((lead, c)) = remainder.leading_term() {
        // the leading exponent of a symmetric polynomial is weakly decreasing
        let lam = Partition::new(lead.exponents().to_vec())?;
        let c = c.clone();
        let schur = match cache.get(&lam) {
            Some(s) => s,
            None => cache.entry(lam.clone()).or_insert(bialternant_in(space, &lam)?),
        };
        remainder = remainder.sub(&schur.scale(&c))?;
        out.add_term(lam, c);
    }
    Ok(out)
}

/// Rows `I` and columns `J` of the Pascal matrix `P_{ij} = C(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PascalMinorQuery {
    rows: IndexSet,
    cols: IndexSet,
}

impl PascalMinorQuery {
    pub fn new(rows: IndexSet, cols: IndexSet) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::ArityMismatch { expected: rows.len(), found: cols.len() });
        }
        Ok(Self { rows, cols })
    }

    pub fn rows(&self) -> &IndexSet {
        &self.rows
    }

    pub fn cols(&self) -> &IndexSet {
        &self.cols
    }
}

pub fn pascal_minor_det(q: &PascalMinorQuery) -> BigInt {
    let matrix: Vec<Vec<BigInt>> = q
        .rows
        .indices()
        .iter()
        .map(|&i| q.cols.indices().iter().map(|&j| binomial(i as u64, j as u64)).collect())
        .collect();
    bareiss_determinant(&matrix, &BigInt::one()).expect("square by construction")
}

/// `ψ_I = Σ_J det(M_{I,J})` over all `|I|`-subsets `J ⊂ ℕ`.
///
/// Only `J ⊆ {0, …, max I}` can contribute: a column `j > max I` of `M_{I,J}`
/// is identically zero because `C(i, j) = 0` for `j > i`. This makes the sum
/// over all of `ℕ` finite.
pub fn psi(set: &IndexSet) -> BigInt {
    let Some(top) = set.max() else {
        return BigInt::one();
    };
    let r = set.len();
    subsets(top as usize + 1, r)
        .map(|cols| {
            let cols = IndexSet::new(cols.into_iter().map(|c| c as u32).collect()).expect("subsets are increasing");
            pascal_minor_det(&PascalMinorQuery { rows: set.clone(), cols })
        })
        .fold(BigInt::zero(), |acc, v| acc + v)
}

/// `h_d` over the pairwise sums `x_i + x_j` (`i ≤ j ≤ r`) as `Σ ψ_I s_{λ(I)}`,
/// summed over partitions of `d` with at most `r` parts.
pub fn h_schur_expansion(d: u32, r: usize) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::new();
    for lam in enumerate_partitions(d, r, None) {
        let coeff = psi(&index_set_of(&lam, r)?);
        out.add_term(lam, Rational::from_integer(coeff));
    }
    Ok(out)
}
