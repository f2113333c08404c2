//! Exhaustive denominator scanning and best-approximation records.
//!
//! A scan walks `q = 1, 2, …, q_max` and keeps every `q` achieving a new
//! strict minimum of `max_j ‖qζ_j‖`. Qualification is decided rigorously:
//! with enclosure-valued errors a record is accepted only when the new
//! maximum is proven strictly below the previous one, and denominators that
//! stay undecidable at the precision cap are reported in a separate
//! unresolved list, never silently dropped.
//!
//! The q-range is partitionable into disjoint blocks processed
//! independently; block results are merged by ascending q and the record
//! extraction is a sequential post-pass, so the output is identical for any
//! partitioning.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exponent::{exponent_from_bounds, Exponent, ExponentBounds};
use crate::interval::NormBounds;
use crate::rational::{rat_int, Rational};
use crate::real::{norm_bounds_at, RefinableReal, DEFAULT_PRECISION_CAP};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScanError {
    #[error("q_max must be at least 2, got {0}")]
    QMaxTooSmall(u64),
    #[error("scan_records requires record-only threshold mode")]
    ModeMismatch,
    #[error("empty coordinate vector")]
    NoCoordinates,
}

/// Threshold regime of a scan run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThresholdMode {
    /// Keep denominators achieving a new error minimum.
    RecordOnly,
    /// Qualify against the derived valid constant of the divisibility
    /// criterion (handled by the verification layer).
    LemmaConstant,
    /// Qualify against an explicit constant (heuristic when it exceeds the
    /// derived one).
    ExplicitC(Rational),
}

/// Scan parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub q_max: u64,
    pub threshold: ThresholdMode,
    pub precision_cap: u32,
    /// Emit every qualifying denominator instead of records only; meaningful
    /// for the threshold modes.
    pub emit_all_qualifying: bool,
}

impl ScanConfig {
    /// Record-only scan up to `q_max` with the default precision cap.
    pub fn records(q_max: u64) -> Result<Self, ScanError> {
        if q_max < 2 {
            return Err(ScanError::QMaxTooSmall(q_max));
        }
        Ok(Self {
            q_max,
            threshold: ThresholdMode::RecordOnly,
            precision_cap: DEFAULT_PRECISION_CAP,
            emit_all_qualifying: false,
        })
    }
}

/// One best-approximation record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxRecord {
    pub q: BigInt,
    /// Per-coordinate enclosures of `‖qζ_j‖`.
    pub errs: Vec<NormBounds>,
    pub max_err: NormBounds,
    /// Achieved exponent with error bar; `None` for q = 1.
    pub exponent: Option<Exponent>,
}

/// Result of a record scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanOutcome {
    pub records: Vec<ApproxRecord>,
    /// Denominators undecidable at the precision cap.
    pub unresolved: Vec<u64>,
    /// Bounds on the largest exponent achieved over all records;
    /// `Infinite` after an exact hit.
    pub lambda_hat: Option<Exponent>,
}

/// Raw block output: every q that could be a record given only the block's
/// own prefix, with rigorously tightened error bounds.
#[derive(Clone, Debug)]
pub struct ScanBlock {
    pub start: u64,
    pub candidates: Vec<(u64, Vec<NormBounds>, NormBounds)>,
    pub unresolved: Vec<u64>,
}

fn all_exact(zeta: &[RefinableReal]) -> bool {
    zeta.iter().all(|z| z.as_exact().is_some())
}

/// Per-coordinate error bounds at one precision (exact coordinates yield
/// point bounds regardless of the level).
fn errs_at(zeta: &[RefinableReal], q: &BigInt, precision: u32) -> (Vec<NormBounds>, NormBounds) {
    let errs: Vec<NormBounds> = zeta.iter().map(|z| norm_bounds_at(z, q, precision)).collect();
    let max = errs
        .iter()
        .skip(1)
        .fold(errs[0].clone(), |acc, e| acc.join_max(e));
    (errs, max)
}

/// Canonical tightness: exact-zero, or positive lower bound with relative
/// width at most `2^-20`. Deterministic for a given (point, q).
fn tighten(
    zeta: &[RefinableReal],
    q: &BigInt,
    precision_cap: u32,
) -> Option<(Vec<NormBounds>, NormBounds)> {
    if all_exact(zeta) {
        return Some(errs_at(zeta, q, 0));
    }
    let mut m = 64u32.min(precision_cap);
    loop {
        let (errs, max) = errs_at(zeta, q, m);
        let tight = max.is_exact_zero()
            || (!max.lo.is_zero() && max.width() * rat_int(1 << 20) <= max.lo);
        if tight {
            return Some((errs, max));
        }
        if m >= precision_cap {
            return None;
        }
        m = (m * 2).min(precision_cap);
    }
}

/// Scans one contiguous block `start..=end`, keeping every q that could
/// still be a record relative to the block's own running minimum.
pub fn scan_block(zeta: &[RefinableReal], start: u64, end: u64, precision_cap: u32) -> ScanBlock {
    let mut candidates: Vec<(u64, Vec<NormBounds>, NormBounds)> = Vec::new();
    let mut unresolved = Vec::new();
    let mut best: Option<NormBounds> = None;
    let exact = all_exact(zeta);
    for q in start..=end {
        let q_big = BigInt::from(q);
        if let Some(b) = &best {
            // Early rejection on the first coordinate: its error already
            // reaching the running minimum rules the whole maximum out.
            let first = if exact {
                norm_bounds_at(&zeta[0], &q_big, 0)
            } else {
                norm_bounds_at(&zeta[0], &q_big, 64.min(precision_cap))
            };
            if first.lo >= b.hi {
                continue;
            }
        }
        let Some((errs, max)) = tighten(zeta, &q_big, precision_cap) else {
            unresolved.push(q);
            continue;
        };
        match &best {
            None => {
                best = Some(max.clone());
                candidates.push((q, errs, max));
            }
            Some(b) if max.hi < b.lo => {
                best = Some(max.clone());
                candidates.push((q, errs, max));
            }
            Some(b) if max.lo >= b.hi => {}
            Some(_) => {
                // Undecided against the local minimum; the merge pass settles it.
                candidates.push((q, errs, max));
            }
        }
    }
    ScanBlock {
        start,
        candidates,
        unresolved,
    }
}

/// Sequential record extraction over merged block candidates. Blocks must
/// cover disjoint ranges; they are ordered by start.
pub fn merge_blocks(
    zeta: &[RefinableReal],
    mut blocks: Vec<ScanBlock>,
    precision_cap: u32,
) -> ScanOutcome {
    blocks.sort_by_key(|b| b.start);
    let mut records: Vec<ApproxRecord> = Vec::new();
    let mut unresolved: Vec<u64> = Vec::new();
    let mut best: Option<NormBounds> = None;
    for block in blocks {
        unresolved.extend(block.unresolved);
        for (q, mut errs, mut max) in block.candidates {
            let q_big = BigInt::from(q);
            let verdict = loop {
                match &best {
                    None => break true,
                    Some(b) if max.hi < b.lo => break true,
                    Some(b) if max.lo >= b.hi => break false,
                    Some(_) => {
                        // Refine both sides at escalating precision; distinct
                        // true values separate at some finite level.
                        let prev = records.last_mut().expect("best implies a record");
                        let mut m = 128u32.min(precision_cap);
                        let mut separated = false;
                        while m <= precision_cap {
                            let (e_new, m_new) = errs_at(zeta, &q_big, m);
                            let (e_prev, m_prev) = errs_at(zeta, &prev.q, m);
                            if m_new.hi < m_prev.lo || m_new.lo >= m_prev.hi {
                                errs = e_new;
                                max = m_new;
                                prev.errs = e_prev;
                                prev.max_err = m_prev.clone();
                                best = Some(m_prev);
                                separated = true;
                                break;
                            }
                            if m == precision_cap {
                                break;
                            }
                            m = (m * 2).min(precision_cap);
                        }
                        if !separated {
                            unresolved.push(q);
                            break false;
                        }
                    }
                }
            };
            if verdict {
                let exponent = if q >= 2 {
                    Some(exponent_from_bounds(&q_big, &max).expect("tight bounds"))
                } else {
                    None
                };
                best = Some(max.clone());
                records.push(ApproxRecord {
                    q: q_big,
                    errs,
                    max_err: max,
                    exponent,
                });
            }
        }
    }
    unresolved.sort_unstable();
    unresolved.dedup();
    let lambda_hat = fold_lambda_hat(&records);
    ScanOutcome {
        records,
        unresolved,
        lambda_hat,
    }
}

fn fold_lambda_hat(records: &[ApproxRecord]) -> Option<Exponent> {
    let mut out: Option<ExponentBounds> = None;
    for r in records {
        match &r.exponent {
            Some(Exponent::Infinite) => return Some(Exponent::Infinite),
            Some(Exponent::Finite(b)) => {
                out = Some(match out {
                    None => b.clone(),
                    Some(acc) => ExponentBounds {
                        lo: if b.lo > acc.lo { b.lo.clone() } else { acc.lo },
                        hi: if b.hi > acc.hi { b.hi.clone() } else { acc.hi },
                    },
                });
            }
            None => {}
        }
    }
    out.map(Exponent::Finite)
}

/// Full record scan of `1..=q_max`.
pub fn scan_records(zeta: &[RefinableReal], config: &ScanConfig) -> Result<ScanOutcome, ScanError> {
    if zeta.is_empty() {
        return Err(ScanError::NoCoordinates);
    }
    if config.threshold != ThresholdMode::RecordOnly {
        return Err(ScanError::ModeMismatch);
    }
    if config.q_max < 2 {
        return Err(ScanError::QMaxTooSmall(config.q_max));
    }
    let block = scan_block(zeta, 1, config.q_max, config.precision_cap);
    Ok(merge_blocks(zeta, alloc::vec![block], config.precision_cap))
}

/// Continued-fraction convergents `(p, q)` of a rational, ending at the
/// value itself. The classical cross-check: every record of a scan over a
/// single rational coordinate with nonzero error is a convergent.
pub fn convergents(x: &Rational) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    // h/k recurrence over the Euclidean quotient sequence.
    let (mut h_prev, mut h) = (BigInt::from(1), x.floor().to_integer());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::from(1));
    let a0 = x.floor().to_integer();
    let mut rem = &num - &a0 * &den;
    out.push((h.clone(), k.clone()));
    num = den;
    den = rem;
    while !den.is_zero() {
        let a = &num / &den;
        rem = &num - &a * &den;
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
        out.push((h.clone(), k.clone()));
        num = den;
        den = rem;
    }
    out
}
