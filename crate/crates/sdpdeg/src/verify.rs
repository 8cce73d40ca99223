//! Property suites driven from the command line.

use std::fmt;
use std::str::FromStr;

use sdpdeg_core::degree::{delta_closed, delta_residue, delta_theorem1, PatakiTriple, SamplePoints};
use sdpdeg_core::linalg::{binomial, factorial};
use sdpdeg_core::oracle::{d_coefficient, doubly_symmetric_sum, random_doubly_symmetric, random_residue_case, residue_sum};
use sdpdeg_core::partitions::{enumerate_partitions, index_set_of, IndexSet, Partition};
use sdpdeg_core::polynomial::{complete_homogeneous, pairwise_sum_forms, ExponentCap, Monomial, SparsePolynomial};
use sdpdeg_core::schur::{h_schur_expansion, psi, schur_bialternant, schur_decompose, schur_space, SchurExpansion};
use sdpdeg_core::{BigInt, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lemma21,
    Prop22,
    Identities,
    CrossMethods,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Lemma21, Suite::Prop22, Suite::Identities, Suite::CrossMethods];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma21 => "lemma21",
            Suite::Prop22 => "prop22",
            Suite::Identities => "identities",
            Suite::CrossMethods => "cross-methods",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub max_n: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { seed: 0, max_n: 5 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: usize,
    pub total: usize,
    /// The first failing case, described in full.
    pub counterexample: Option<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        Self { suite, passed: 0, total: 0, counterexample: None }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total && self.counterexample.is_none()
    }

    fn check<T: PartialEq + fmt::Display>(&mut self, got: T, want: T, case: impl FnOnce() -> String) {
        self.total += 1;
        if got == want {
            self.passed += 1;
        } else if self.counterexample.is_none() {
            self.counterexample = Some(format!("{}: got {got}, expected {want}", case()));
        }
    }

    fn fail(&mut self, case: String) {
        self.total += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(case);
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}/{} pass", self.suite.name(), self.passed, self.total)?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n  first counterexample: {c}")?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    match suite {
        Suite::Lemma21 => lemma21(cfg.seed),
        Suite::Prop22 => prop22(cfg.seed),
        Suite::Identities => identities(),
        Suite::CrossMethods => cross_methods(cfg.max_n),
    }
}

fn case_seed(seed: u64, i: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i)
}

/// Residue sums over random root sets reproduce a single coefficient.
fn lemma21(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Lemma21);
    for i in 0..100 {
        let s = case_seed(seed, i);
        match random_residue_case(s).and_then(|(qs, f, target)| {
            residue_sum(&qs, &f).map(|lhs| (qs, f.coefficient_of(&target), lhs, f, target))
        }) {
            Ok((qs, want, got, f, target)) => rep.check(got, want, || {
                let roots: Vec<String> = qs
                    .iter()
                    .map(|q| format!("{:?}", q.roots().iter().map(ToString::to_string).collect::<Vec<_>>()))
                    .collect();
                format!("case seed {s}, roots {}, F = {f}, target {:?}", roots.join(" "), target.exponents())
            }),
            Err(e) => rep.fail(format!("case seed {s}: {e}")),
        }
    }
    rep
}

/// The doubly symmetric sum is the normalized top coefficient at every λ.
fn prop22(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Prop22);
    for case in 0..50u64 {
        let r = 1 + (case % 2) as usize;
        let n = r + 1 + ((case / 2) % (4 - r as u64)) as usize;
        let s = case_seed(seed, case);
        let rhs = random_doubly_symmetric(r, n, (r * (n - r)) as u32, s).and_then(|p| {
            let c = d_coefficient(&p, r, n)?;
            Ok((c / Rational::from_integer(factorial(r as u64) * factorial((n - r) as u64)), p))
        });
        let (rhs, p) = match rhs {
            Ok(v) => v,
            Err(e) => {
                rep.fail(format!("case seed {s} (r={r}, n={n}): {e}"));
                continue;
            }
        };
        for k in 0..3 {
            let pts = SamplePoints::seeded(n, case_seed(s, k));
            match doubly_symmetric_sum(&p, &pts, r) {
                Ok(lhs) => rep.check(lhs, rhs.clone(), || {
                    let lam: Vec<String> = pts.values().iter().map(ToString::to_string).collect();
                    format!("r={r}, n={n}, P = {p}, λ = ({})", lam.join(", "))
                }),
                Err(e) => rep.fail(format!("r={r}, n={n}, P = {p}: {e}")),
            }
        }
    }
    rep
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Schur-side identities: the worked h₂ example, ψ closed forms, the
/// Vandermonde-square coefficient and the ψ-weighted expansion of h_d.
fn identities() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Identities);
    let u = ExponentCap::Unbounded;

    let s2 = schur_space(2).expect("two variables");
    let h2 = complete_homogeneous(&s2, &pairwise_sum_forms(&s2, &[0, 1]).expect("forms"), 2, &u).expect("h_2");
    let want = SchurExpansion::from_terms([
        (Partition::new(vec![2]).expect("partition"), q(7)),
        (Partition::new(vec![1, 1]).expect("partition"), q(3)),
    ]);
    match schur_decompose(&h2) {
        Ok(got) => rep.check(Expansion(got), Expansion(want), || format!("h_2 over {{2x1, x1+x2, 2x2}} = {h2}")),
        Err(e) => rep.fail(format!("h_2 decomposition: {e}")),
    }

    for r in 1..=8u32 {
        for k in 0..r {
            let set = IndexSet::new((0..=r).filter(|&i| i != k).collect()).expect("increasing");
            rep.check(psi(&set), binomial(u64::from(r) + 1, u64::from(k) + 1), || format!("ψ{set}"));
        }
    }

    for r in 1..=6usize {
        for k in 0..=r {
            let mut parts = vec![2u32; r - k];
            parts.extend(std::iter::repeat_n(1, k));
            let lam = Partition::new(parts).expect("partition");
            match index_set_of(&lam, r) {
                Ok(set) => rep.check(psi(&set), BigInt::from(k + 1) * binomial(r as u64 + 3, k as u64 + 3), || {
                    format!("ψ{set} for λ = {lam}")
                }),
                Err(e) => rep.fail(format!("λ = {lam}: {e}")),
            }
        }
    }

    for r in 1..=3usize {
        let space = schur_space(r).expect("variables");
        let mut vandermonde_sq = SparsePolynomial::one(&space);
        for i in 0..r {
            for j in (0..r).filter(|&j| j != i) {
                let diff = SparsePolynomial::from_terms(
                    &space,
                    [(Monomial::variable(r, i), q(1)), (Monomial::variable(r, j), q(-1))],
                )
                .expect("same arity");
                vandermonde_sq = vandermonde_sq.mul(&diff, &u).expect("same space");
            }
        }
        for n in r + 1..=5 {
            let target = Monomial::uniform(r, n as u32 - 1);
            let rect = Partition::rectangle((n - r) as u32, r);
            for d in 0..=(r * (n - r) + 1) as u32 {
                for lam in enumerate_partitions(d, r, None) {
                    let coeff = schur_bialternant(&lam, r)
                        .and_then(|s| s.mul(&vandermonde_sq, &ExponentCap::at(&target)))
                        .map(|p| p.coefficient_of(&target));
                    let want = if lam == rect { Rational::from_integer(factorial(r as u64)) } else { q(0) };
                    match coeff {
                        Ok(c) => rep.check(c, want, || format!("[x^(n-1)] s_{lam}·Δ² with r={r}, n={n}")),
                        Err(e) => rep.fail(format!("s_{lam} with r={r}: {e}")),
                    }
                }
            }
        }
    }

    for r in 1..=3usize {
        let space = schur_space(r).expect("variables");
        let forms = pairwise_sum_forms(&space, &(0..r).collect::<Vec<_>>()).expect("forms");
        for d in 0..=4u32 {
            let symbolic = complete_homogeneous(&space, &forms, d as usize, &u).and_then(|h| schur_decompose(&h));
            match symbolic.and_then(|s| Ok((s, h_schur_expansion(d, r)?))) {
                Ok((got, want)) => rep.check(Expansion(got), Expansion(want), || format!("h_{d} in {r} variables")),
                Err(e) => rep.fail(format!("h_{d} in {r} variables: {e}")),
            }
        }
    }
    rep
}

#[derive(PartialEq)]
struct Expansion(SchurExpansion);

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.0.iter().map(|(lam, c)| format!("{c}·s{lam}")).collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Coefficient extraction, the residue route and any closed form agree on
/// every valid triple up to `max_n`.
fn cross_methods(max_n: u32) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::CrossMethods);
    for n in 2..=max_n {
        for t in PatakiTriple::all_for(n) {
            let th = delta_theorem1(&t).map(|x| x.delta);
            let re = delta_residue(&t, &SamplePoints::standard(n as usize)).map(|x| x.delta);
            match (th, re) {
                (Ok(th), Ok(re)) => {
                    let closed = delta_closed(&t).map(|x| x.delta);
                    match closed {
                        Some(c) if c != re => rep.fail(format!("δ{t}: theorem1 {th}, residue {re}, closed form {c}")),
                        _ => rep.check(th, re, || format!("δ{t}: theorem1 vs residue")),
                    }
                }
                (Err(e), _) | (_, Err(e)) => rep.fail(format!("δ{t}: {e}")),
            }
        }
    }
    rep
}
