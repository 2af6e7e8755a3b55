//! Structured verdicts and JSON reports.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumeration::{partition_counts, Mode, Problem};
use crate::error::Result;
use crate::poly::{FallingPolynomial, QPolynomial};

/// One named comparison of an expected value with a computed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn eq<T: PartialEq + Display>(name: impl Into<String>, expected: T, actual: T) -> Check {
        Check {
            name: name.into(),
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn holds(name: impl Into<String>, cond: bool, detail: impl Display) -> Check {
        Check {
            name: name.into(),
            expected: "true".into(),
            actual: if cond { "true".into() } else { format!("false ({detail})") },
            pass: cond,
        }
    }

    /// A check that could not run; it fails with the error as its actual value.
    pub fn error(name: impl Into<String>, err: impl Display) -> Check {
        Check {
            name: name.into(),
            expected: "ok".into(),
            actual: format!("error: {err}"),
            pass: false,
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

/// Integers that fit in 64 bits are JSON numbers; larger ones are strings.
pub fn big_json(x: &BigInt) -> Value {
    if let Some(v) = x.to_i64() {
        json!(v)
    } else if let Some(v) = x.to_u64() {
        json!(v)
    } else {
        json!(x.to_string())
    }
}

pub fn bigs_json(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(big_json).collect())
}

pub fn poly_json(p: &QPolynomial) -> Value {
    bigs_json(p.coeffs())
}

#[derive(Clone, Debug)]
pub struct CountReport {
    pub mode: Mode,
    pub size: usize,
    pub rank: usize,
    pub polynomial: FallingPolynomial,
    pub k: Option<u64>,
    pub checks: Vec<Check>,
}

impl CountReport {
    /// Partition counts for every block number, with the consistency checks
    /// that need no extra enumeration.
    pub fn compute(p: Problem, k: Option<u64>) -> Result<CountReport> {
        let polynomial = partition_counts(p)?;
        let mut checks = Vec::new();
        if p.size() > 0 {
            checks.push(Check::eq("a_1 = 1", BigInt::from(1), polynomial.coeff(1)));
        }
        checks.push(Check::holds(
            "a_j = 0 for j > rank",
            polynomial.coeffs().len() <= p.rank() + 1,
            format!("{} coefficients", polynomial.coeffs().len()),
        ));
        if p.size() > 0 {
            checks.push(Check::holds(
                "a_rank > 0",
                polynomial.coeff(p.rank()) > BigInt::from(0),
                "no valid partition with rank many blocks",
            ));
        }
        let standard = polynomial.standard();
        for x in 0..=p.rank() as u64 + 1 {
            checks.push(Check::eq(
                format!("standard basis agrees at {x}"),
                polynomial.eval(x),
                standard.eval_i64(x as i64),
            ));
        }
        Ok(CountReport {
            mode: p.mode(),
            size: p.size(),
            rank: p.rank(),
            polynomial,
            k,
            checks,
        })
    }

    pub fn to_json(&self) -> Value {
        let a: Vec<BigInt> = (1..=self.rank).map(|j| self.polynomial.coeff(j)).collect();
        let mut v = json!({
            "mode": self.mode,
            "parameters": {"size": self.size, "rank": self.rank},
            "a": bigs_json(&a),
            "polynomial": {
                "falling": bigs_json(self.polynomial.coeffs()),
                "standard": poly_json(&self.polynomial.standard()),
            },
            "checks": self.checks,
        });
        if let Some(k) = self.k {
            v["parameters"]["k"] = json!(k);
            v["count"] = big_json(&self.polynomial.eval(k));
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::tournament;

    #[test]
    fn big_values_become_strings() {
        assert_eq!(big_json(&BigInt::from(5)), json!(5));
        let huge = BigInt::from(u64::MAX) * 4;
        assert_eq!(big_json(&huge), json!(huge.to_string()));
    }

    #[test]
    fn tournament_report() {
        let t = tournament(4);
        let r = CountReport::compute(Problem::Transitive(&t), Some(2)).unwrap();
        assert!(all_pass(&r.checks));
        let v = r.to_json();
        assert_eq!(v["a"], json!([1, 11, 5]));
        assert_eq!(v["count"], json!(24));
        assert_eq!(v["polynomial"]["standard"], json!([0, 0, -4, 5]));
    }
}
