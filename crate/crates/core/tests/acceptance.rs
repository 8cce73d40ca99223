//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p sdpdeg-core --test acceptance`.

use std::cell::RefCell;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use sdpdeg_core::degree::{
    delta_residue, delta_theorem1, duality_partner, validate_triple, DegreeResult, PatakiTriple, SamplePoints,
};
use sdpdeg_core::linalg::{binomial, factorial};
use sdpdeg_core::oracle::{d_coefficient, doubly_symmetric_sum, random_doubly_symmetric, random_residue_case, residue_sum};
use sdpdeg_core::partitions::{enumerate_partitions, index_set_of, IndexSet, Partition};
use sdpdeg_core::polynomial::{complete_homogeneous, pairwise_sum_forms, ExponentCap, Monomial, SparsePolynomial};
use sdpdeg_core::schur::{h_schur_expansion, psi, schur_bialternant, schur_decompose, schur_space, SchurExpansion};
use sdpdeg_core::Rational;

type Outcome = Result<String, String>;
/// Name, check and runtime budget.
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

/// Every δ produced by criteria 1–5, for the integrality guard.
struct Ledger {
    checked: usize,
    bad: Vec<String>,
}

thread_local! {
    static LEDGER: RefCell<Ledger> = const { RefCell::new(Ledger { checked: 0, bad: Vec::new() }) };
}

fn record(result: sdpdeg_core::Result<DegreeResult>, what: &str) -> Result<BigInt, String> {
    LEDGER.with(|l| {
        let mut l = l.borrow_mut();
        l.checked += 1;
        match &result {
            Ok(r) if r.delta.is_positive() => {}
            Ok(r) => l.bad.push(format!("{what}: {}", r.delta)),
            Err(e) => l.bad.push(format!("{what}: {e}")),
        }
    });
    result.map(|r| r.delta).map_err(|e| format!("{what}: {e}"))
}

fn residue(t: &PatakiTriple) -> Result<BigInt, String> {
    record(delta_residue(t, &SamplePoints::standard(t.n() as usize)), &format!("residue{t}"))
}

fn theorem1(t: &PatakiTriple) -> Result<BigInt, String> {
    record(delta_theorem1(t), &format!("theorem1{t}"))
}

fn triple(m: u32, n: u32, r: u32) -> Result<PatakiTriple, String> {
    validate_triple(m, n, r).map_err(|e| format!("({m},{n},{r}): {e}"))
}

fn expect_eq<T: PartialEq + std::fmt::Display>(got: T, want: T, what: &str) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn int(v: u64) -> BigInt {
    BigInt::from(v)
}

fn criterion_1() -> Outcome {
    let mut count = 0;
    for n in 2..=8u32 {
        for m in 1..=n {
            let t = triple(m, n, n - 1)?;
            let want = (BigInt::one() << (m - 1)) * binomial(n as u64, m as u64);
            expect_eq(residue(&t)?, want, &format!("δ{t}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} triples match 2^(m-1)·C(n,m)"))
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for n in 4..=8u32 {
        let t3 = triple(3, n, n - 2)?;
        let t4 = triple(4, n, n - 2)?;
        let want3 = binomial(n as u64 + 1, 3);
        let want4 = int(6) * binomial(n as u64 + 1, 4);
        expect_eq(residue(&t3)?, want3.clone(), &format!("residue δ{t3}"))?;
        expect_eq(residue(&t4)?, want4.clone(), &format!("residue δ{t4}"))?;
        count += 2;
        if n <= 6 {
            expect_eq(theorem1(&t3)?, want3, &format!("theorem1 δ{t3}"))?;
            expect_eq(theorem1(&t4)?, want4, &format!("theorem1 δ{t4}"))?;
            count += 2;
        }
    }
    for (m, n, r, want) in [(3, 4, 2, 10u64), (4, 4, 2, 30), (3, 5, 3, 20), (4, 5, 3, 90)] {
        let t = triple(m, n, r)?;
        expect_eq(residue(&t)?, int(want), &format!("spot δ{t}"))?;
    }
    Ok(format!("{count} closed-form checks + 4 spot values"))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for n in 2..=6 {
        for t in PatakiTriple::all_for(n) {
            let partner = duality_partner(&t);
            expect_eq(residue(&t)?, residue(&partner)?, &format!("δ{t} vs δ{partner}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} triples equal their duality partner"))
}

fn criterion_4() -> Outcome {
    let (mut count, mut k_zero, mut l_zero) = (0, 0, 0);
    for n in 2..=5 {
        for t in PatakiTriple::all_for(n) {
            expect_eq(theorem1(&t)?, residue(&t)?, &format!("theorem1 vs residue δ{t}"))?;
            count += 1;
            k_zero += usize::from(t.k_script() == 0);
            l_zero += usize::from(t.l_script() == 0);
        }
    }
    if k_zero == 0 || l_zero == 0 {
        return Err("boundary triples missing".into());
    }
    Ok(format!("{count} triples agree ({k_zero} with 𝓀=0, {l_zero} with 𝓁=0)"))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        for t in PatakiTriple::all_for(n) {
            let values: Vec<BigInt> = [101u64, 202, 303]
                .iter()
                .map(|&seed| {
                    let pts = SamplePoints::seeded(n as usize, seed ^ u64::from(t.m()) << 8 ^ u64::from(t.r()) << 16);
                    record(delta_residue(&t, &pts), &format!("residue{t} seed {seed}"))
                })
                .collect::<Result<_, _>>()?;
            if values.iter().any(|v| *v != values[0]) {
                return Err(format!("δ{t} varies with the sample points: {values:?}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} triples identical across 3 seeded point sets"))
}

fn criterion_6() -> Outcome {
    let (mut passed, mut nonzero) = (0, 0);
    for seed in 0..100u64 {
        let (qs, f, target) = random_residue_case(seed).map_err(|e| e.to_string())?;
        let lhs = residue_sum(&qs, &f).map_err(|e| format!("seed {seed}: {e}"))?;
        let want = f.coefficient_of(&target);
        nonzero += usize::from(!want.is_zero());
        expect_eq(lhs, want, &format!("seed {seed}, F = {f}"))?;
        passed += 1;
    }
    Ok(format!("{passed}/100 ({nonzero} with a nonzero target coefficient)"))
}

fn criterion_7() -> Outcome {
    let (mut passed, mut nonzero) = (0, 0);
    for case in 0..50u64 {
        let r = 1 + (case % 2) as usize;
        let n = r + 1 + ((case / 2) % (4 - r as u64)) as usize;
        // only the degree-r(n−r) part of P reaches the target coefficient
        let max_deg = (r * (n - r)) as u32;
        let p = random_doubly_symmetric(r, n, max_deg, 7000 + case).map_err(|e| e.to_string())?;
        let rhs = d_coefficient(&p, r, n).map_err(|e| e.to_string())?
            / Rational::from_integer(factorial(r as u64) * factorial((n - r) as u64));
        nonzero += usize::from(!rhs.is_zero());
        for k in 0..3u64 {
            let pts = SamplePoints::seeded(n, case * 3 + k);
            let lhs = doubly_symmetric_sum(&p, &pts, r).map_err(|e| e.to_string())?;
            expect_eq(lhs, rhs.clone(), &format!("case {case} (r={r}, n={n}, P = {p})"))?;
            passed += 1;
        }
    }
    Ok(format!("{passed}/150 ({nonzero}/50 polynomials with a nonzero right-hand side)"))
}

fn criterion_8() -> Outcome {
    let q = |v: u64| Rational::from_integer(int(v));
    // (a)
    let s2 = schur_space(2).map_err(|e| e.to_string())?;
    let forms = pairwise_sum_forms(&s2, &[0, 1]).map_err(|e| e.to_string())?;
    let h2 = complete_homogeneous(&s2, &forms, 2, &ExponentCap::Unbounded).map_err(|e| e.to_string())?;
    let want = SchurExpansion::from_terms([
        (Partition::new(vec![2]).unwrap(), q(7)),
        (Partition::new(vec![1, 1]).unwrap(), q(3)),
    ]);
    if schur_decompose(&h2).map_err(|e| e.to_string())? != want {
        return Err("(a) h_2 over {2x1, x1+x2, 2x2} is not 7s(2)+3s(1,1)".into());
    }
    // (b)
    for r in 1..=8u32 {
        for k in 0..r {
            let set = IndexSet::new((0..=r).filter(|&i| i != k).collect()).unwrap();
            expect_eq(psi(&set), binomial(r as u64 + 1, k as u64 + 1), &format!("(b) ψ{set}"))?;
        }
    }
    // (c)
    for r in 1..=6usize {
        for k in 0..=r {
            let mut parts = vec![2u32; r - k];
            parts.extend(std::iter::repeat_n(1, k));
            let set = index_set_of(&Partition::new(parts).unwrap(), r).map_err(|e| e.to_string())?;
            let want = int(k as u64 + 1) * binomial(r as u64 + 3, k as u64 + 3);
            expect_eq(psi(&set), want, &format!("(c) ψ{set}"))?;
        }
    }
    // (d)
    let mut lemma_checks = 0;
    for r in 1..=3usize {
        for n in r + 1..=5usize {
            let space = schur_space(r).map_err(|e| e.to_string())?;
            let mut vandermonde_sq = SparsePolynomial::one(&space);
            for i in 0..r {
                for j in 0..r {
                    if i != j {
                        let diff = SparsePolynomial::from_terms(
                            &space,
                            [(Monomial::variable(r, i), q(1)), (Monomial::variable(r, j), -q(1))],
                        )
                        .unwrap();
                        vandermonde_sq = vandermonde_sq.mul(&diff, &ExponentCap::Unbounded).unwrap();
                    }
                }
            }
            let target = Monomial::uniform(r, n as u32 - 1);
            let rect = Partition::rectangle((n - r) as u32, r);
            for d in 0..=(r * (n - r) + 1) as u32 {
                for lam in enumerate_partitions(d, r, None) {
                    let s = schur_bialternant(&lam, r).map_err(|e| e.to_string())?;
                    let coeff = s.mul(&vandermonde_sq, &ExponentCap::Unbounded).unwrap().coefficient_of(&target);
                    let want = if lam == rect { Rational::from_integer(factorial(r as u64)) } else { q(0) };
                    expect_eq(coeff, want, &format!("(d) λ={lam}, r={r}, n={n}"))?;
                    lemma_checks += 1;
                }
            }
        }
    }
    // (e)
    let mut expansions = 0;
    for r in 1..=3usize {
        let space = schur_space(r).map_err(|e| e.to_string())?;
        let forms = pairwise_sum_forms(&space, &(0..r).collect::<Vec<_>>()).map_err(|e| e.to_string())?;
        for d in 0..=4u32 {
            let h = complete_homogeneous(&space, &forms, d as usize, &ExponentCap::Unbounded).unwrap();
            let symbolic = schur_decompose(&h).map_err(|e| e.to_string())?;
            if symbolic != h_schur_expansion(d, r).map_err(|e| e.to_string())? {
                return Err(format!("(e) h_{d} over pairwise sums in {r} variables"));
            }
            expansions += 1;
        }
    }
    Ok(format!("(a) ok, (b) 36 ψ, (c) 27 ψ, (d) {lemma_checks} coefficients, (e) {expansions} expansions"))
}

fn criterion_9() -> Outcome {
    LEDGER.with(|l| {
        let l = l.borrow();
        if l.bad.is_empty() && l.checked > 0 {
            Ok(format!("{} values, all positive integers", l.checked))
        } else {
            Err(format!("{} of {} failed: {:?}", l.bad.len(), l.checked, l.bad))
        }
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 closed form r=n-1", criterion_1, Some(Duration::from_secs(30))),
        ("2 closed forms m=3,4 at r=n-2", criterion_2, Some(Duration::from_secs(120))),
        ("3 duality", criterion_3, Some(Duration::from_secs(120))),
        ("4 cross-method agreement", criterion_4, Some(Duration::from_secs(300))),
        ("5 sample-point invariance", criterion_5, None),
        ("6 residue lemma suite", criterion_6, None),
        ("7 doubly symmetric suite", criterion_7, None),
        ("8 symmetric-function identities", criterion_8, None),
        ("9 integrality guard", criterion_9, None),
    ];
    let mut failures = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, budget) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:.2?}, budget {limit:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{elapsed:.2?}]"),
            Err(detail) => {
                failures += 1;
                println!("FAIL  criterion {name}: {detail} [{elapsed:.2?}]");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
