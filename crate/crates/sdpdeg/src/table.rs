//! Full Pataki-range tables for a fixed `n`.

use std::fmt;

use anyhow::{Context, Result};
use num_bigint::BigInt;
use rayon::prelude::*;
use sdpdeg_core::degree::{delta, delta_residue, duality_partner, DeltaOptions, PatakiTriple, SamplePoints};

use crate::record::OutputRecord;

pub const THREADS_ENV: &str = "SDPDEG_THREADS";

/// A dual pair whose independently computed values differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityViolation {
    pub triple: PatakiTriple,
    pub value: BigInt,
    pub partner: PatakiTriple,
    pub partner_value: BigInt,
}

impl fmt::Display for DualityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ{} = {} but δ{} = {}", self.triple, self.value, self.partner, self.partner_value)
    }
}

#[derive(Debug)]
pub struct DualityError(pub Vec<DualityViolation>);

impl fmt::Display for DualityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} duality violation(s)", self.0.len())?;
        for v in &self.0 {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for DualityError {}

fn pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let threads: usize = raw.trim().parse().with_context(|| format!("{THREADS_ENV}={raw:?} is not a count"))?;
        builder = builder.num_threads(threads);
    }
    Ok(builder.build()?)
}

/// Every valid triple at `n`, ordered by `(r, m)`. Fails as a whole if any
/// row fails, so callers never emit a partial table.
pub fn compute_table(n: u32, opts: &DeltaOptions) -> Result<Vec<OutputRecord>> {
    anyhow::ensure!(n >= 2, "table needs n >= 2 (got {n})");
    let triples = PatakiTriple::all_for(n);
    let results: Vec<_> = pool()?.install(|| triples.par_iter().map(|t| delta(t, opts)).collect());
    results
        .into_iter()
        .map(|res| res.map(|r| OutputRecord::from(&r)).map_err(anyhow::Error::from))
        .collect()
}

/// Recomputes every row and its partner with the residue route, with no
/// shortcut through either, and compares them with each other and the table.
pub fn check_duality(records: &[OutputRecord]) -> Result<Vec<DualityViolation>> {
    let pool = pool()?;
    let checks: Vec<Result<Option<DualityViolation>>> = pool.install(|| {
        records
            .par_iter()
            .map(|rec| {
                let t = PatakiTriple::new(rec.m, rec.n, rec.r)?;
                let pts = SamplePoints::standard(t.n() as usize);
                let partner = duality_partner(&t);
                let value = delta_residue(&t, &pts)?.delta;
                let partner_value = delta_residue(&partner, &pts)?.delta;
                let tabled = rec.delta_value()?;
                Ok((value != partner_value || value != tabled).then_some(DualityViolation {
                    triple: t,
                    value: tabled,
                    partner,
                    partner_value,
                }))
            })
            .collect()
    });
    checks.into_iter().filter_map(Result::transpose).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_rows() {
        let rows = compute_table(3, &DeltaOptions::default()).unwrap();
        let find = |m, r| rows.iter().find(|x| x.m == m && x.r == r).unwrap().delta.clone();
        assert_eq!(find(2, 2), "6");
        assert_eq!(find(3, 1), "4");
        let order: Vec<_> = rows.iter().map(|x| (x.r, x.m)).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
    }

    #[test]
    fn duality_holds_at_n5() {
        let rows = compute_table(5, &DeltaOptions::default()).unwrap();
        assert!(check_duality(&rows).unwrap().is_empty());
    }

    #[test]
    fn tampered_row_is_reported() {
        let mut rows = compute_table(4, &DeltaOptions::default()).unwrap();
        rows[0].delta = "999".into();
        let v = check_duality(&rows).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].value, BigInt::from(999));
    }

    #[test]
    fn rejects_n_below_two() {
        assert!(compute_table(1, &DeltaOptions::default()).is_err());
    }
}
