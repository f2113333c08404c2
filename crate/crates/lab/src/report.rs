//! Report rendering: exact decimal strings, structured JSON documents, and
//! CSV tables for scan outputs.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use dioph_core::bounds::BoundReport;
use dioph_core::exponent::Exponent;
use dioph_core::interval::NormBounds;
use dioph_core::lift::LiftWitness;
use dioph_core::liouville::LiouvilleSeries;
use dioph_core::rational::{big_pow, rat_int, Rational};
use dioph_core::scan::ScanOutcome;
use dioph_core::verify::{LcmOutcome, LemmaOutcome};

use crate::config::JsonInt;

/// Significant digits used in CSV cells.
pub const CSV_DIGITS: usize = 15;
/// Significant digits used in structured reports.
pub const JSON_DIGITS: usize = 12;

/// Renders an exact rational to `sig` significant decimal digits, rounding
/// half to even; scientific form once the decimal exponent leaves
/// `[-4, 14]`. Conversion is exact integer arithmetic throughout.
pub fn decimal_string(r: &Rational, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".into();
    }
    let neg = r.is_negative();
    let n = r.numer().abs();
    let d = r.denom().clone();
    // Decimal exponent e with 10^e ≤ n/d < 10^{e+1}.
    let mut e = digit_count(&n) - digit_count(&d);
    if !at_least_pow10(&n, &d, e) {
        e -= 1;
    }
    // Mantissa: round(n·10^{sig-1-e}/d) has exactly `sig` digits, except
    // when rounding carries into one more.
    let k = sig as i64 - 1 - e;
    let (num, den) = if k >= 0 {
        (n * pow10(k as u32), d)
    } else {
        (n, d * pow10((-k) as u32))
    };
    let mut mantissa = div_round_half_even(&num, &den);
    let mut digits = mantissa.to_string();
    if digits.len() > sig {
        mantissa /= BigInt::from(10);
        digits = mantissa.to_string();
        e += 1;
    }
    debug_assert_eq!(digits.len(), sig);
    let sign = if neg { "-" } else { "" };
    if (-4..=14).contains(&e) {
        let body = if e >= 0 {
            let point = (e + 1) as usize;
            if point >= digits.len() {
                let mut s = digits;
                s.push_str(&"0".repeat(point - s.len()));
                s
            } else {
                let frac = trim_zeros(&digits[point..]);
                if frac.is_empty() {
                    digits[..point].to_string()
                } else {
                    format!("{}.{}", &digits[..point], frac)
                }
            }
        } else {
            let frac = trim_zeros(&digits);
            format!("0.{}{}", "0".repeat((-e - 1) as usize), frac)
        };
        format!("{sign}{body}")
    } else {
        let frac = trim_zeros(&digits[1..]);
        if frac.is_empty() {
            format!("{sign}{}e{}", &digits[..1], e)
        } else {
            format!("{sign}{}.{}e{}", &digits[..1], frac, e)
        }
    }
}

fn trim_zeros(s: &str) -> &str {
    s.trim_end_matches('0')
}

fn digit_count(n: &BigInt) -> i64 {
    n.to_string().trim_start_matches('-').len() as i64
}

fn pow10(k: u32) -> BigInt {
    big_pow(&BigInt::from(10), k)
}

/// `n/d ≥ 10^e`, exactly.
fn at_least_pow10(n: &BigInt, d: &BigInt, e: i64) -> bool {
    if e >= 0 {
        *n >= d * pow10(e as u32)
    } else {
        n * pow10((-e) as u32) >= *d
    }
}

fn div_round_half_even(num: &BigInt, den: &BigInt) -> BigInt {
    let q = num / den;
    let rem = num - &q * den;
    let twice = &rem * BigInt::from(2);
    if twice < *den {
        q
    } else if twice > *den {
        q + 1
    } else if (&q % BigInt::from(2)).is_zero() {
        q
    } else {
        q + 1
    }
}

/// `{"num": …, "den": …, "decimal": "…"}` with 12-digit decimals.
pub fn rational_json(r: &Rational) -> Value {
    json!({
        "num": serde_json::to_value(JsonInt(r.numer().clone())).unwrap(),
        "den": serde_json::to_value(JsonInt(r.denom().clone())).unwrap(),
        "decimal": decimal_string(r, JSON_DIGITS),
    })
}

fn opt_rational_json(r: &Option<Rational>) -> Value {
    r.as_ref().map(rational_json).unwrap_or(Value::Null)
}

fn norm_json(b: &NormBounds) -> Value {
    json!({
        "lo": decimal_string(&b.lo, JSON_DIGITS),
        "hi": decimal_string(&b.hi, JSON_DIGITS),
        "mid": decimal_string(&b.midpoint(), JSON_DIGITS),
    })
}

fn exponent_json(e: &Exponent) -> Value {
    match e {
        Exponent::Infinite => json!("inf"),
        Exponent::Finite(b) => json!({
            "lo": decimal_string(&b.lo, JSON_DIGITS),
            "hi": decimal_string(&b.hi, JSON_DIGITS),
            "mid": decimal_string(&b.midpoint(), JSON_DIGITS),
        }),
    }
}

fn exponent_csv_cells(e: Option<&Exponent>) -> (String, String) {
    match e {
        None => (String::new(), String::new()),
        Some(Exponent::Infinite) => ("inf".into(), "0".into()),
        Some(Exponent::Finite(b)) => (
            decimal_string(&b.midpoint(), CSV_DIGITS),
            decimal_string(&(b.width() / rat_int(2)), CSV_DIGITS),
        ),
    }
}

/// Structured document mirroring the bound-report fields.
pub fn bound_report_json(report: &BoundReport) -> Value {
    json!({
        "lambda": rational_json(&report.lambda),
        "jarnik_ambient": opt_rational_json(&report.jarnik_ambient),
        "trivial_upper": opt_rational_json(&report.trivial_upper),
        "lower": opt_rational_json(&report.lower),
        "upper_unconditional": opt_rational_json(&report.upper_unconditional),
        "upper_conditional": report.upper_conditional.as_ref().map(|v| json!({
            "value": rational_json(v),
            "conditional": true,
        })).unwrap_or(Value::Null),
        "equality": report.equality,
        "per_variable_exponents": report.per_variable_exponents.iter()
            .map(rational_json).collect::<Vec<_>>(),
        "notes": report.notes,
    })
}

/// CSV table of scan records: one row per record, enclosure midpoints to 15
/// digits. Unresolved denominators are reported via the structured format
/// and the exit status.
pub fn scan_csv(outcome: &ScanOutcome, coords: usize) -> String {
    let mut out = String::from("q");
    for j in 1..=coords {
        out.push_str(&format!(",err_{j}"));
    }
    out.push_str(",max_err,e_q,e_q_err\n");
    for r in &outcome.records {
        out.push_str(&r.q.to_string());
        for e in &r.errs {
            out.push(',');
            out.push_str(&decimal_string(&e.midpoint(), CSV_DIGITS));
        }
        out.push(',');
        out.push_str(&decimal_string(&r.max_err.midpoint(), CSV_DIGITS));
        let (e_q, e_err) = exponent_csv_cells(r.exponent.as_ref());
        out.push_str(&format!(",{e_q},{e_err}\n"));
    }
    out
}

pub fn scan_json(outcome: &ScanOutcome) -> Value {
    json!({
        "records": outcome.records.iter().map(|r| json!({
            "q": r.q.to_string(),
            "errs": r.errs.iter().map(norm_json).collect::<Vec<_>>(),
            "max_err": {
                "bounds": norm_json(&r.max_err),
                "num": serde_json::to_value(JsonInt(r.max_err.midpoint().numer().clone())).unwrap(),
                "den": serde_json::to_value(JsonInt(r.max_err.midpoint().denom().clone())).unwrap(),
            },
            "e_q": r.exponent.as_ref().map(exponent_json).unwrap_or(Value::Null),
        })).collect::<Vec<_>>(),
        "unresolved": outcome.unresolved,
        "lambda_hat": outcome.lambda_hat.as_ref().map(exponent_json).unwrap_or(Value::Null),
    })
}

/// CSV table of divisibility reports: `x,x0,x1,dk,passed,M`.
pub fn lemma_csv(outcome: &LemmaOutcome) -> String {
    let mut out = String::from("x,x0,x1,dk,passed,M\n");
    for r in &outcome.reports {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.x,
            r.x0,
            r.x1,
            r.d_k,
            r.passed,
            r.cofactor
                .as_ref()
                .map(|m| m.to_string())
                .unwrap_or_default()
        ));
    }
    out
}

pub fn lemma_json(outcome: &LemmaOutcome) -> Value {
    json!({
        "c_used": rational_json(&outcome.plan.c_used),
        "c_valid": rational_json(&outcome.plan.constants.c_valid),
        "delta": outcome.plan.constants.delta.to_string(),
        "big_d": outcome.plan.constants.big_d.to_string(),
        "sigma_upper": rational_json(&outcome.plan.constants.sigma_upper),
        "heuristic": outcome.plan.heuristic,
        "diameter": outcome.plan.diameter,
        "d_k": outcome.plan.d_k,
        "reports": outcome.reports.iter().map(|r| json!({
            "x": r.x.to_string(),
            "y": r.y.to_string(),
            "x0": r.x0.to_string(),
            "x1": r.x1.to_string(),
            "dk": r.d_k,
            "passed": r.passed,
            "M": r.cofactor.as_ref().map(|m| m.to_string()).map(Value::from).unwrap_or(Value::Null),
        })).collect::<Vec<_>>(),
        "unresolved": outcome.unresolved,
        "all_passed": outcome.all_passed,
    })
}

/// CSV table of lcm-structure reports: `q,f,d,passed` then `q_i,M_i,y_i`
/// per group.
pub fn lcm_csv(outcome: &LcmOutcome, groups: usize) -> String {
    let mut out = String::from("q,f,d,passed");
    for i in 1..=groups {
        out.push_str(&format!(",q_{i},M_{i},y_{i}"));
    }
    out.push('\n');
    for r in &outcome.reports {
        out.push_str(&format!("{},{},{},{}", r.q, r.f, r.d, r.passed));
        for g in &r.groups {
            out.push_str(&format!(
                ",{},{},{}",
                g.q_i,
                g.m_i
                    .as_ref()
                    .map(|m| m.to_string())
                    .unwrap_or_default(),
                g.y_i
            ));
        }
        out.push('\n');
    }
    out
}

pub fn lcm_json(outcome: &LcmOutcome) -> Value {
    json!({
        "exponent": rational_json(&outcome.plan.exponent),
        "cutoff": outcome.plan.cutoff,
        "d": outcome.plan.d,
        "empirical": outcome.plan.empirical,
        "reports": outcome.reports.iter().map(|r| json!({
            "q": r.q.to_string(),
            "f": r.f.to_string(),
            "d": r.d,
            "passed": r.passed,
            "groups": r.groups.iter().map(|g| json!({
                "q_i": g.q_i.to_string(),
                "y_i": g.y_i.to_string(),
                "d_i": g.d_i,
                "power_divides": g.power_divides,
                "M_i": g.m_i.as_ref().map(|m| m.to_string()).map(Value::from).unwrap_or(Value::Null),
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "below_cutoff": outcome.below_cutoff,
        "unresolved": outcome.unresolved,
        "all_passed": outcome.all_passed,
    })
}

/// Rows of the construction command: one per term index.
pub fn liouville_csv(series: &LiouvilleSeries, terms: usize) -> String {
    let mut out = String::from("n,a_n,q_n,p_n,e_qn,e_qn_err\n");
    for n in 1..=terms {
        let (q, p) = series.convergent(n);
        let e = series.measured_exponent(n);
        let (e_cell, err_cell) = exponent_csv_cells(Some(&e));
        out.push_str(&format!(
            "{n},{},{q},{p},{e_cell},{err_cell}\n",
            series.schedule_exponent(n)
        ));
    }
    out
}

pub fn liouville_json(series: &LiouvilleSeries, terms: usize) -> Value {
    json!({
        "base": series.base(),
        "tau": rational_json(series.tau()),
        "terms": (1..=terms).map(|n| {
            let (q, p) = series.convergent(n);
            json!({
                "n": n,
                "a_n": series.schedule_exponent(n),
                "q_n": q.to_string(),
                "p_n": p.to_string(),
                "e_qn": exponent_json(&series.measured_exponent(n)),
            })
        }).collect::<Vec<_>>(),
    })
}

pub fn lift_json(witness: &LiftWitness) -> Value {
    json!({
        "term_index": witness.term_index,
        "q": witness.q.to_string(),
        "lifted_q": witness.lifted_q.to_string(),
        "lift_degree": witness.lift_degree,
        "tolerance": decimal_string(&witness.tolerance, JSON_DIGITS),
        "coordinates": witness.coordinates.iter().map(|c| json!({
            "group": c.group,
            "poly": c.poly,
            "err": norm_json(&c.err),
            "exponent": exponent_json(&c.exponent),
            "passed": c.passed,
        })).collect::<Vec<_>>(),
        "first_block": witness.first_block.iter().map(|f| json!({
            "group": f.group,
            "lifted_norm": norm_json(&f.lifted_norm),
            "scaled_base_norm": norm_json(&f.scaled_base_norm),
            "exact_equality": f.exact_equality,
            "holds": f.holds,
        })).collect::<Vec<_>>(),
        "passed": witness.passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use dioph_core::rational::rat;

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat_int(0), 12), "0");
        assert_eq!(decimal_string(&rat_int(6), 12), "6");
        assert_eq!(decimal_string(&rat(13, 2), 12), "6.5");
        assert_eq!(decimal_string(&rat(1, 3), 6), "0.333333");
        assert_eq!(decimal_string(&rat(2, 3), 6), "0.666667");
        assert_eq!(decimal_string(&rat(-1, 4), 12), "-0.25");
        assert_eq!(decimal_string(&rat(1, 14), 12), "0.0714285714286");
        assert_eq!(decimal_string(&rat_int(1_000_000), 6), "1000000");
    }

    #[test]
    fn decimal_scientific_forms() {
        let tiny = Rational::new(BigInt::from(1), BigInt::from(2).pow(64));
        assert_eq!(decimal_string(&tiny, 6), "5.42101e-20");
        let huge = Rational::from(big_pow(&BigInt::from(10), 20));
        assert_eq!(decimal_string(&huge, 4), "1e20");
        assert_eq!(decimal_string(&rat(1, 10_000), 6), "0.0001");
        assert_eq!(decimal_string(&rat(1, 100_000), 6), "1e-5");
    }

    #[test]
    fn half_even_rounding_in_renders() {
        assert_eq!(decimal_string(&rat(25, 10), 1), "2");
        assert_eq!(decimal_string(&rat(35, 10), 1), "4");
        // Rounding carries into an extra digit: 999999 at 3 digits is 10^6.
        assert_eq!(decimal_string(&rat(999_999, 1), 3), "1000000");
    }
}
