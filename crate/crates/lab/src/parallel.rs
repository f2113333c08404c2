//! Worker-partitioned scans. The range is split into contiguous blocks, one
//! per worker thread, over immutable inputs; block results are merged by
//! ascending start, so the output is bit-identical for any worker count.

use dioph_core::bounds::Lambda;
use dioph_core::manifold::{ManifoldSpec, VariableGroup};
use dioph_core::rational::Rational;
use dioph_core::real::RefinableReal;
use dioph_core::scan::{merge_blocks, scan_block, ScanConfig, ScanError, ScanOutcome};
use dioph_core::verify::{
    lcm_plan, lemma_plan, verify_lcm_range, verify_lemma_range, LcmOutcome, LemmaOutcome,
    VerifyError,
};

/// Contiguous blocks covering `1..=max`, at most `workers` of them.
fn partition(max: u64, workers: usize) -> Vec<(u64, u64)> {
    let workers = workers.max(1) as u64;
    let chunk = max.div_ceil(workers).max(1);
    let mut out = Vec::new();
    let mut start = 1;
    while start <= max {
        let end = (start + chunk - 1).min(max);
        out.push((start, end));
        start = end + 1;
    }
    out
}

pub fn scan_records_parallel(
    zeta: &[RefinableReal],
    config: &ScanConfig,
    workers: usize,
) -> Result<ScanOutcome, ScanError> {
    if workers <= 1 {
        return dioph_core::scan::scan_records(zeta, config);
    }
    if zeta.is_empty() {
        return Err(ScanError::NoCoordinates);
    }
    if config.q_max < 2 {
        return Err(ScanError::QMaxTooSmall(config.q_max));
    }
    let ranges = partition(config.q_max, workers);
    let blocks = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(start, end)| {
                scope.spawn(move || scan_block(zeta, start, end, config.precision_cap))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    Ok(merge_blocks(zeta, blocks, config.precision_cap))
}

pub fn verify_lemma_parallel(
    curve: &VariableGroup,
    zeta: &RefinableReal,
    x_max: u64,
    c_override: Option<Rational>,
    precision_cap: u32,
    workers: usize,
) -> Result<LemmaOutcome, VerifyError> {
    if x_max == 0 {
        return Err(VerifyError::EmptyRange);
    }
    let plan = lemma_plan(curve, zeta, c_override)?;
    let ranges = partition(x_max, workers);
    let parts: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(start, end)| {
                let plan = &plan;
                scope.spawn(move || {
                    verify_lemma_range(curve, zeta, plan, start, end, precision_cap)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut reports = Vec::new();
    let mut unresolved = Vec::new();
    for (r, u) in parts {
        reports.extend(r);
        unresolved.extend(u);
    }
    let all_passed = reports.iter().all(|r| r.passed);
    Ok(LemmaOutcome {
        plan,
        reports,
        unresolved,
        all_passed,
    })
}

pub fn verify_lcm_parallel(
    manifold: &ManifoldSpec,
    zeta: &[RefinableReal],
    lambda: &Lambda,
    eps: &Rational,
    q_max: u64,
    precision_cap: u32,
    workers: usize,
) -> Result<LcmOutcome, VerifyError> {
    if q_max == 0 {
        return Err(VerifyError::EmptyRange);
    }
    let plan = lcm_plan(manifold, zeta, lambda, eps)?;
    let ranges = partition(q_max, workers);
    let parts: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(start, end)| {
                let plan = &plan;
                scope.spawn(move || {
                    verify_lcm_range(manifold, zeta, plan, start, end, precision_cap)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut reports = Vec::new();
    let mut below_cutoff = Vec::new();
    let mut unresolved = Vec::new();
    for (r, b, u) in parts {
        reports.extend(r);
        below_cutoff.extend(b);
        unresolved.extend(u);
    }
    let all_passed = reports.iter().all(|r| r.passed);
    Ok(LcmOutcome {
        plan,
        reports,
        below_cutoff,
        unresolved,
        all_passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_cover_exactly() {
        for (max, workers) in [(10u64, 1usize), (10, 3), (10, 16), (1, 4), (100, 7)] {
            let ranges = partition(max, workers);
            assert_eq!(ranges[0].0, 1);
            assert_eq!(ranges.last().unwrap().1, max);
            for w in ranges.windows(2) {
                assert_eq!(w[0].1 + 1, w[1].0);
            }
        }
    }
}
