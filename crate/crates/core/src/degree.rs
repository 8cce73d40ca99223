//! The algebraic degree δ(m, n, r) by three independent routes:
//!
//! - [`delta_theorem1`] extracts the coefficient of `x^{n−1}⋯y^{n−1}` from
//!   `h_𝓁(𝒳) h_𝓀(𝒴) ∏(x_i−x_j) ∏(y_i−y_j) ∏(y_i−x_j)` and divides by
//!   `r!(n−r)!`.
//! - [`delta_residue`] sums `h_𝓁(Λ_I) h_𝓀(Λ_{I^c}) / ∏(λ_i−λ_j)` over
//!   `r`-subsets of exact sample points, with each `h` taken as a dual
//!   Jacobi–Trudi determinant.
//! - [`delta_closed`] covers the ranks with known closed forms, directly or
//!   through the duality `δ(m,n,r) = δ(C(n+1,2)−m, n, n−r)`.
//!
//! [`delta`] dispatches between them and can cross-check two routes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use core::time::Duration;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{as_integer, bareiss_determinant, binomial, factorial, subsets};
use crate::polynomial::{
    complete_homogeneous, pairwise_sum_forms, ExponentCap, Monomial, SparsePolynomial, VariableSpace,
};
use crate::schur::dual_jacobi_trudi_matrix;
use crate::{Error, Rational, Result};

/// Largest `n` for which [`delta`] falls back to the coefficient-extraction
/// route during a cross-check.
pub const THEOREM1_CROSS_CHECK_MAX_N: u32 = 6;

fn choose2(v: u32) -> u32 {
    v * v.saturating_sub(1) / 2
}

/// A triple `(m, n, r)` inside Pataki's window, with
/// `𝓀 = m − C(n−r+1, 2)` and `𝓁 = C(n+1, 2) − C(r+1, 2) − m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatakiTriple {
    m: u32,
    n: u32,
    r: u32,
    k_script: u32,
    l_script: u32,
}

impl PatakiTriple {
    pub fn new(m: u32, n: u32, r: u32) -> Result<Self> {
        validate_triple(m, n, r)
    }

    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    /// Slack above the lower Pataki bound.
    pub fn k_script(&self) -> u32 {
        self.k_script
    }
    /// Slack below the upper Pataki bound.
    pub fn l_script(&self) -> u32 {
        self.l_script
    }

    /// `C(n−r+1, 2)`.
    pub fn lower_bound(n: u32, r: u32) -> u32 {
        choose2(n - r + 1)
    }

    /// `C(n+1, 2) − C(r+1, 2)`.
    pub fn upper_bound(n: u32, r: u32) -> u32 {
        choose2(n + 1) - choose2(r + 1)
    }

    /// Every valid triple for this `n`, ordered by `(r, m)`.
    pub fn all_for(n: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for r in 1..n {
            for m in Self::lower_bound(n, r)..=Self::upper_bound(n, r) {
                out.push(validate_triple(m, n, r).expect("inside the window"));
            }
        }
        out
    }
}

impl fmt::Display for PatakiTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m, self.n, self.r)
    }
}

pub fn validate_triple(m: u32, n: u32, r: u32) -> Result<PatakiTriple> {
    if r == 0 || r >= n {
        return Err(Error::UnsupportedRank { n, r });
    }
    let lower = PatakiTriple::lower_bound(n, r);
    let upper = PatakiTriple::upper_bound(n, r);
    if m < lower {
        return Err(Error::BelowPatakiLower { m, lower });
    }
    if m > upper {
        return Err(Error::AbovePatakiUpper { m, upper });
    }
    let triple = PatakiTriple { m, n, r, k_script: m - lower, l_script: upper - m };
    debug_assert_eq!(triple.k_script + triple.l_script, r * (n - r));
    Ok(triple)
}

/// `(C(n+1,2) − m, n, n − r)`; an involution on valid triples.
pub fn duality_partner(t: &PatakiTriple) -> PatakiTriple {
    validate_triple(choose2(t.n + 1) - t.m, t.n, t.n - t.r).expect("duality preserves the window")
}

/// Which route produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MethodTag {
    Theorem1,
    Residue,
    ClosedForm,
    /// A closed form applied to the duality partner.
    DualityReduced,
}

impl MethodTag {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Theorem1 => "theorem1",
            Self::Residue => "residue",
            Self::ClosedForm => "closed_form",
            Self::DualityReduced => "duality_reduced",
        }
    }
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MethodTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem1" => Ok(Self::Theorem1),
            "residue" => Ok(Self::Residue),
            "closed_form" => Ok(Self::ClosedForm),
            "duality_reduced" => Ok(Self::DualityReduced),
            _ => Err(Error::UnknownMethod(s.into())),
        }
    }
}

/// Requested route for [`delta`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    #[default]
    Auto,
    Theorem1,
    Residue,
    Closed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeResult {
    pub triple: PatakiTriple,
    pub delta: BigInt,
    pub method: MethodTag,
    pub elapsed: Duration,
    /// Second route that reproduced `delta`, when a cross-check ran.
    pub cross_checked: Option<MethodTag>,
}

/// Pairwise-distinct exact values `λ_1, …, λ_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePoints {
    lambdas: Vec<Rational>,
}

impl SamplePoints {
    pub fn new(lambdas: Vec<Rational>) -> Result<Self> {
        for j in 0..lambdas.len() {
            if let Some(i) = lambdas[..j].iter().position(|v| *v == lambdas[j]) {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
        Ok(Self { lambdas })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    /// `λ_i = i` for `i = 1..n`.
    pub fn standard(n: usize) -> Self {
        Self { lambdas: (1..=n as i64).map(|v| Rational::from_integer(v.into())).collect() }
    }

    /// `n` distinct integers in `[−(3n+10), 3n+10]`, deterministic per seed.
    pub fn seeded(n: usize, seed: u64) -> Self {
        let bound = 3 * n as i64 + 10;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut values: Vec<i64> = Vec::with_capacity(n);
        while values.len() < n {
            let v = rng.random_range(-bound..=bound);
            if !values.contains(&v) {
                values.push(v);
            }
        }
        Self::from_integers(&values).expect("distinct by construction")
    }

    pub fn values(&self) -> &[Rational] {
        &self.lambdas
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }
}

#[cfg(feature = "std")]
struct Stopwatch(std::time::Instant);

#[cfg(feature = "std")]
impl Stopwatch {
    fn start() -> Self {
        Self(std::time::Instant::now())
    }
    fn elapsed(&self) -> Duration {
        self.0.elapsed()
    }
}

#[cfg(not(feature = "std"))]
struct Stopwatch;

#[cfg(not(feature = "std"))]
impl Stopwatch {
    fn start() -> Self {
        Self
    }
    fn elapsed(&self) -> Duration {
        Duration::ZERO
    }
}

fn sign(exponent: u32) -> Rational {
    if exponent.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn positive_integer(method: MethodTag, value: Rational) -> Result<BigInt> {
    match as_integer(&value) {
        Some(v) if v.is_positive() => Ok(v),
        _ => Err(Error::NotPositiveInteger { method: method.as_str(), value }),
    }
}

/// `x1..xr, y1..y{n−r}`.
pub fn block_space(n: u32, r: u32) -> VariableSpace {
    let xs = (1..=r).map(|i| alloc::format!("x{i}"));
    let ys = (1..=n - r).map(|i| alloc::format!("y{i}"));
    VariableSpace::new(xs.chain(ys)).expect("n >= 1 distinct names")
}

fn difference(space: &VariableSpace, plus: usize, minus: usize) -> SparsePolynomial {
    let arity = space.arity();
    SparsePolynomial::from_terms(
        space,
        [
            (Monomial::variable(arity, plus), Rational::one()),
            (Monomial::variable(arity, minus), -Rational::one()),
        ],
    )
    .expect("arity matches")
}

/// `∏_{i≠j} (v_i − v_j)` over the listed variables, under `cap`.
fn ordered_difference_product(space: &VariableSpace, vars: &[usize], cap: &ExponentCap) -> Result<SparsePolynomial> {
    let mut acc = SparsePolynomial::one(space);
    for &i in vars {
        for &j in vars {
            if i != j {
                acc = acc.mul(&difference(space, i, j), cap)?;
            }
        }
    }
    Ok(acc)
}

/// The coefficient `c(m, n, r)` of `x_1^{n−1}⋯y_{n−r}^{n−1}`.
///
/// The x-block `∏(x_i−x_j)·h_𝓁(𝒳)` and the y-block `∏(y_i−y_j)·h_𝓀(𝒴)` live
/// in disjoint variables, so only the mixed factor `∏(y_i−x_j)` is expanded
/// jointly and the target coefficient is read off term by term.
pub fn theorem1_coefficient(t: &PatakiTriple) -> Result<Rational> {
    let (n, r) = (t.n as usize, t.r as usize);
    let space = block_space(t.n, t.r);
    let target = Monomial::uniform(n, t.n - 1);
    let cap = ExponentCap::at(&target);
    let xs: Vec<usize> = (0..r).collect();
    let ys: Vec<usize> = (r..n).collect();

    let x_forms = pairwise_sum_forms(&space, &xs)?;
    let y_forms = pairwise_sum_forms(&space, &ys)?;
    let x_block = ordered_difference_product(&space, &xs, &cap)?
        .mul(&complete_homogeneous(&space, &x_forms, t.l_script as usize, &cap)?, &cap)?;
    let y_block = ordered_difference_product(&space, &ys, &cap)?
        .mul(&complete_homogeneous(&space, &y_forms, t.k_script as usize, &cap)?, &cap)?;

    let mut mixed = SparsePolynomial::one(&space);
    for &y in &ys {
        for &x in &xs {
            mixed = mixed.mul(&difference(&space, y, x), &cap)?;
        }
    }

    let mut total = Rational::zero();
    for (m, c) in mixed.terms() {
        let Some(rest) = target.checked_div(m) else { continue };
        let mut x_part = rest.exponents().to_vec();
        let mut y_part = x_part.clone();
        x_part[r..].iter_mut().for_each(|e| *e = 0);
        y_part[..r].iter_mut().for_each(|e| *e = 0);
        let x_coeff = x_block.coefficient_of(&Monomial::new(x_part));
        if x_coeff.is_zero() {
            continue;
        }
        total += c * x_coeff * y_block.coefficient_of(&Monomial::new(y_part));
    }
    Ok(total)
}

/// `δ = (−1)^𝓀 c(m,n,r) / (r!(n−r)!)`.
pub fn delta_theorem1(t: &PatakiTriple) -> Result<DegreeResult> {
    let clock = Stopwatch::start();
    let c = theorem1_coefficient(t)?;
    let denom = Rational::from_integer(factorial(t.r as u64) * factorial((t.n - t.r) as u64));
    let delta = positive_integer(MethodTag::Theorem1, sign(t.k_script) * c / denom)?;
    Ok(DegreeResult { triple: *t, delta, method: MethodTag::Theorem1, elapsed: clock.elapsed(), cross_checked: None })
}

/// `e_0, …, e_k` of a list of numbers.
pub fn elementary_values(values: &[Rational], k: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for (seen, v) in values.iter().enumerate() {
        for j in (1..=k.min(seen + 1)).rev() {
            let step = &e[j - 1] * v;
            e[j] += step;
        }
    }
    e
}

/// `h_k(values)` as the `k×k` dual Jacobi–Trudi determinant in `e_1..e_k`.
pub fn h_via_determinant(values: &[Rational], k: usize) -> Rational {
    let e = elementary_values(values, k);
    bareiss_determinant(&dual_jacobi_trudi_matrix(&e, k), &Rational::one()).expect("square by construction")
}

/// `Λ_I = {λ_i + λ_j : i, j ∈ I, i ≤ j}`.
pub fn pairwise_sums(points: &[Rational], set: &[usize]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(set.len() * (set.len() + 1) / 2);
    for (a, &i) in set.iter().enumerate() {
        for &j in &set[a..] {
            out.push(&points[i] + &points[j]);
        }
    }
    out
}

/// `Σ_I h_𝓁(Λ_I) h_𝓀(Λ_{I^c}) / ∏_{i∈I, j∈I^c}(λ_i − λ_j)` before the
/// `(−1)^𝓀` sign.
pub fn residue_sum(t: &PatakiTriple, pts: &SamplePoints) -> Result<Rational> {
    let n = t.n as usize;
    if pts.len() != n {
        return Err(Error::ArityMismatch { expected: n, found: pts.len() });
    }
    let lambdas = pts.values();
    let mut total = Rational::zero();
    for set in subsets(n, t.r as usize) {
        let complement: Vec<usize> = (0..n).filter(|i| !set.contains(i)).collect();
        let mut denom = Rational::one();
        for &i in &set {
            for &j in &complement {
                denom *= &lambdas[i] - &lambdas[j];
            }
        }
        let a_l = h_via_determinant(&pairwise_sums(lambdas, &set), t.l_script as usize);
        if a_l.is_zero() {
            continue;
        }
        let a_k = h_via_determinant(&pairwise_sums(lambdas, &complement), t.k_script as usize);
        total += a_l * a_k / denom;
    }
    Ok(total)
}

pub fn delta_residue(t: &PatakiTriple, pts: &SamplePoints) -> Result<DegreeResult> {
    let clock = Stopwatch::start();
    let sum = residue_sum(t, pts)?;
    let delta = positive_integer(MethodTag::Residue, sign(t.k_script) * sum)?;
    Ok(DegreeResult { triple: *t, delta, method: MethodTag::Residue, elapsed: clock.elapsed(), cross_checked: None })
}

fn closed_value(t: &PatakiTriple) -> Option<BigInt> {
    let (m, n, r) = (t.m as u64, t.n as u64, t.r as u64);
    if r + 1 == n {
        return Some((BigInt::one() << (m - 1)) * binomial(n, m));
    }
    if r + 2 == n {
        match m {
            3 => return Some(binomial(n + 1, 3)),
            4 => return Some(BigInt::from(6) * binomial(n + 1, 4)),
            _ => {}
        }
    }
    None
}

/// Closed forms for `r = n−1` and for `m ∈ {3, 4}` at `r = n−2`, applied to
/// the triple or to its duality partner. `None` when neither matches.
pub fn delta_closed(t: &PatakiTriple) -> Option<DegreeResult> {
    let clock = Stopwatch::start();
    let (delta, method) = match closed_value(t) {
        Some(v) => (v, MethodTag::ClosedForm),
        None => (closed_value(&duality_partner(t))?, MethodTag::DualityReduced),
    };
    Some(DegreeResult { triple: *t, delta, method, elapsed: clock.elapsed(), cross_checked: None })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeltaOptions {
    pub method: Method,
    pub cross_check: bool,
    /// Sample points for the residue route; `λ_i = i` when absent.
    pub points: Option<SamplePoints>,
}

fn residue_points(t: &PatakiTriple, opts: &DeltaOptions) -> SamplePoints {
    opts.points.clone().unwrap_or_else(|| SamplePoints::standard(t.n as usize))
}

fn run(t: &PatakiTriple, method: Method, opts: &DeltaOptions) -> Result<DegreeResult> {
    match method {
        Method::Theorem1 => delta_theorem1(t),
        Method::Residue => delta_residue(t, &residue_points(t, opts)),
        Method::Closed => delta_closed(t).ok_or(Error::ClosedFormNotApplicable),
        Method::Auto => {
            if let Some(result) = delta_closed(t) {
                return Ok(result);
            }
            // the residue sum runs over C(n, r) subsets with 𝓁×𝓁 and 𝓀×𝓀
            // determinants; the partner with the smaller rank is cheaper
            if t.r <= t.n - t.r {
                delta_residue(t, &residue_points(t, opts))
            } else {
                let partner = duality_partner(t);
                let mut result = delta_residue(&partner, &residue_points(t, opts))?;
                result.triple = *t;
                Ok(result)
            }
        }
    }
}

/// Computes δ by the requested route; with `cross_check`, a second
/// independent route must reproduce the value exactly.
pub fn delta(t: &PatakiTriple, opts: &DeltaOptions) -> Result<DegreeResult> {
    let clock = Stopwatch::start();
    let mut primary = run(t, opts.method, opts)?;
    if opts.cross_check {
        let secondary = match primary.method {
            MethodTag::Theorem1 | MethodTag::ClosedForm | MethodTag::DualityReduced => {
                delta_residue(t, &residue_points(t, opts))?
            }
            MethodTag::Residue => match delta_closed(t) {
                Some(closed) => closed,
                None if t.n <= THEOREM1_CROSS_CHECK_MAX_N => delta_theorem1(t)?,
                None => {
                    let partner = duality_partner(t);
                    delta_residue(&partner, &SamplePoints::seeded(t.n as usize, u64::from(t.m)))?
                }
            },
        };
        if secondary.delta != primary.delta {
            return Err(Error::CrossCheckMismatch {
                first_method: primary.method.as_str(),
                first: primary.delta,
                second_method: secondary.method.as_str(),
                second: secondary.delta,
            });
        }
        primary.cross_checked = Some(secondary.method);
    }
    primary.elapsed = clock.elapsed();
    Ok(primary)
}
