//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose order is graded
//! lexicographic over the fixed variable order of the [`VariableSpace`]. The
//! zero polynomial is the empty map.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::linalg::ExactRing;
use crate::{Error, Rational, Result};

/// Ordered list of distinct variable names shared by a family of polynomials.
#[derive(Clone, Debug)]
pub struct VariableSpace {
    names: Arc<[String]>,
}

impl VariableSpace {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidVariableSpace("at least one variable is required".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::InvalidVariableSpace(format!("duplicate variable {name}")));
            }
        }
        Ok(Self { names: names.into() })
    }

    /// `prefix1, prefix2, ..., prefix{count}`.
    pub fn indexed(prefix: &str, count: usize) -> Result<Self> {
        Self::new((1..=count).map(|i| format!("{prefix}{i}")))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl PartialEq for VariableSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for VariableSpace {}

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then the exponent of the first variable, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Self(vec![0; arity])
    }

    /// `x_i` in a space of the given arity.
    pub fn variable(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Self(e)
    }

    /// The same exponent on every variable.
    pub fn uniform(arity: usize, exponent: u32) -> Self {
        Self(vec![exponent; arity])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.divides(self).then(|| Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn permuted(&self, perm: &[usize]) -> Self {
        // variable i is renamed to perm[i]
        let mut out = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[perm[i]] = e;
        }
        Self(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Per-variable exponent ceiling for pruned multiplication.
///
/// Products of polynomials with nonnegative exponents never lower an
/// exponent, so a term above the cap can never reach a target monomial at or
/// below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExponentCap {
    Unbounded,
    PerVariable(Vec<u32>),
}

impl ExponentCap {
    pub fn uniform(arity: usize, max: u32) -> Self {
        Self::PerVariable(vec![max; arity])
    }

    /// Cap at the exponents of a target monomial.
    pub fn at(target: &Monomial) -> Self {
        Self::PerVariable(target.0.clone())
    }

    pub fn allows(&self, m: &Monomial) -> bool {
        match self {
            Self::Unbounded => true,
            Self::PerVariable(max) => m.0.iter().zip(max).all(|(e, c)| e <= c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial {
    space: VariableSpace,
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePolynomial {
    pub fn zero(space: &VariableSpace) -> Self {
        Self { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn one(space: &VariableSpace) -> Self {
        Self::constant(space, Rational::one())
    }

    pub fn constant(space: &VariableSpace, value: Rational) -> Self {
        let mut p = Self::zero(space);
        if !value.is_zero() {
            p.terms.insert(Monomial::one(space.arity()), value);
        }
        p
    }

    pub fn variable(space: &VariableSpace, index: usize) -> Result<Self> {
        if index >= space.arity() {
            return Err(Error::ArityMismatch { expected: space.arity(), found: index + 1 });
        }
        let mut p = Self::zero(space);
        p.terms.insert(Monomial::variable(space.arity(), index), Rational::one());
        Ok(p)
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, merging repeats
    /// and dropping zeros.
    pub fn from_terms<I>(space: &VariableSpace, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(space);
        for (m, c) in terms {
            if m.arity() != space.arity() {
                return Err(Error::ArityMismatch { expected: space.arity(), found: m.arity() });
            }
            p.accumulate(m, c);
        }
        Ok(p)
    }

    /// Shorthand for small integer coefficients: `[(exponents, coeff)]`.
    pub fn from_int_terms(space: &VariableSpace, terms: &[(&[u32], i64)]) -> Result<Self> {
        Self::from_terms(
            space,
            terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), Rational::from_integer((*c).into()))),
        )
    }

    pub fn space(&self) -> &VariableSpace {
        &self.space
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` stands for the −∞ degree of the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    fn accumulate(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.space);
        }
        Self {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect(),
        }
    }

    /// Product with every term above `cap` discarded.
    pub fn mul(&self, other: &Self, cap: &ExponentCap) -> Result<Self> {
        self.check_space(other)?;
        let mut out = Self::zero(&self.space);
        let mut scratch = Monomial::one(self.space.arity());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                for ((s, a), b) in scratch.0.iter_mut().zip(&ma.0).zip(&mb.0) {
                    *s = a + b;
                }
                if !cap.allows(&scratch) {
                    continue;
                }
                let c = ca * cb;
                match out.terms.get_mut(&scratch) {
                    Some(existing) => *existing += c,
                    None => {
                        out.terms.insert(scratch.clone(), c);
                    }
                }
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Drops every term that `cap` does not allow.
    pub fn truncate(&self, cap: &ExponentCap) -> Self {
        Self {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| cap.allows(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.space.arity() {
            return Err(Error::ArityMismatch { expected: self.space.arity(), found: point.len() });
        }
        let mut powers: Vec<Vec<Rational>> = point.iter().map(|v| vec![Rational::one(), v.clone()]).collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &point[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    value *= &powers[i][e];
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<Self> {
        let arity = self.space.arity();
        let mut seen = vec![false; arity];
        if perm.len() != arity || perm.iter().any(|&p| p >= arity || core::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidVariableSpace("not a permutation of the variables".into()));
        }
        Ok(Self {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())).collect(),
        })
    }

    pub fn swap_variables(&self, i: usize, j: usize) -> Result<Self> {
        let mut perm: Vec<usize> = (0..self.space.arity()).collect();
        if i >= perm.len() || j >= perm.len() {
            return Err(Error::ArityMismatch { expected: perm.len(), found: i.max(j) + 1 });
        }
        perm.swap(i, j);
        self.permute_variables(&perm)
    }

    /// Invariance under every permutation of the variables in `block`
    /// (checked on adjacent transpositions, which generate the group).
    pub fn is_symmetric_in(&self, block: core::ops::Range<usize>) -> bool {
        block
            .clone()
            .zip(block.skip(1))
            .all(|(i, j)| self.swap_variables(i, j).map(|s| s == *self).unwrap_or(false))
    }

    /// Exact quotient by graded-lex long division; fails if the remainder
    /// is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_space(divisor)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::InexactDivision)?;
        let mut remainder = self.clone();
        let mut quotient = Self::zero(&self.space);
        while let Some((m, c)) = remainder.leading_term() {
            let q_m = m.checked_div(lead_m).ok_or(Error::InexactDivision)?;
            let q_c = c / lead_c;
            let step = Self::from_terms(&self.space, [(q_m.clone(), q_c.clone())])?;
            remainder = remainder.sub(&step.mul(divisor, &ExponentCap::Unbounded)?)?;
            quotient.accumulate(q_m, q_c);
        }
        Ok(quotient)
    }
}

/// Coefficient of `target` in `a * b` without forming the product.
pub fn coefficient_of_product(a: &SparsePolynomial, b: &SparsePolynomial, target: &Monomial) -> Result<Rational> {
    a.check_space(b)?;
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut total = Rational::zero();
    for (m, c) in &small.terms {
        if let Some(rest) = target.checked_div(m) {
            if let Some(d) = large.terms.get(&rest) {
                total += c * d;
            }
        }
    }
    Ok(total)
}

/// The forms `v_i + v_j` for `i <= j` over the listed variables, in
/// lexicographic `(i, j)` order. Diagonal forms are `2 v_i`.
pub fn pairwise_sum_forms(space: &VariableSpace, vars: &[usize]) -> Result<Vec<SparsePolynomial>> {
    if vars.is_empty() {
        return Err(Error::InvalidVariableSpace("pairwise sums need at least one variable".into()));
    }
    let arity = space.arity();
    if let Some(&bad) = vars.iter().find(|&&v| v >= arity) {
        return Err(Error::ArityMismatch { expected: arity, found: bad + 1 });
    }
    let mut forms = Vec::with_capacity(vars.len() * (vars.len() + 1) / 2);
    for (a, &i) in vars.iter().enumerate() {
        for &j in &vars[a..] {
            forms.push(SparsePolynomial::from_terms(
                space,
                [
                    (Monomial::variable(arity, i), Rational::one()),
                    (Monomial::variable(arity, j), Rational::one()),
                ],
            )?);
        }
    }
    Ok(forms)
}

fn check_forms(space: &VariableSpace, forms: &[SparsePolynomial]) -> Result<()> {
    if forms.iter().all(|f| f.space == *space) {
        Ok(())
    } else {
        Err(Error::SpaceMismatch)
    }
}

/// `h_d` over the multiset `forms`: each form is folded in once with the
/// degree slots updated in ascending order, so a form may repeat.
pub fn complete_homogeneous(
    space: &VariableSpace,
    forms: &[SparsePolynomial],
    d: usize,
    cap: &ExponentCap,
) -> Result<SparsePolynomial> {
    check_forms(space, forms)?;
    let mut slots = vec![SparsePolynomial::zero(space); d + 1];
    slots[0] = SparsePolynomial::one(space).truncate(cap);
    for form in forms {
        for j in 1..=d {
            let step = form.mul(&slots[j - 1], cap)?;
            slots[j] = slots[j].add(&step)?;
        }
    }
    Ok(slots.swap_remove(d))
}

/// `e_k` over the multiset `forms`: descending slot updates use each form at
/// most once. Zero when `k` exceeds the number of forms.
pub fn elementary_symmetric(
    space: &VariableSpace,
    forms: &[SparsePolynomial],
    k: usize,
    cap: &ExponentCap,
) -> Result<SparsePolynomial> {
    check_forms(space, forms)?;
    if k > forms.len() {
        return Ok(SparsePolynomial::zero(space));
    }
    let mut slots = vec![SparsePolynomial::zero(space); k + 1];
    slots[0] = SparsePolynomial::one(space).truncate(cap);
    for (seen, form) in forms.iter().enumerate() {
        for j in (1..=k.min(seen + 1)).rev() {
            let step = form.mul(&slots[j - 1], cap)?;
            slots[j] = slots[j].add(&step)?;
        }
    }
    Ok(slots.swap_remove(k))
}

impl ExactRing for SparsePolynomial {
    fn is_zero_element(&self) -> bool {
        self.terms.is_empty()
    }
    fn zero_like(&self) -> Self {
        Self::zero(&self.space)
    }
    // The ring operations below assume a shared space; the polynomial
    // determinants built in this crate always satisfy that.
    fn add(&self, other: &Self) -> Self {
        SparsePolynomial::add(self, other).expect("same variable space")
    }
    fn sub(&self, other: &Self) -> Self {
        SparsePolynomial::sub(self, other).expect("same variable space")
    }
    fn mul(&self, other: &Self) -> Self {
        SparsePolynomial::mul(self, other, &ExponentCap::Unbounded).expect("same variable space")
    }
    fn neg(&self) -> Self {
        SparsePolynomial::neg(self)
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        SparsePolynomial::div_exact(self, divisor).ok()
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.space.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.space.names[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
