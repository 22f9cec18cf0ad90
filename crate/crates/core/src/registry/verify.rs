use std::time::Instant;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{find, IdentityRecord};
use crate::dsl::{evaluate_to_order, parse, DslError};
use crate::series::{Agreement, Rat, Series};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegistryError {
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("order must be positive, got {0}")]
    BadOrder(Rat),
    #[error("could not build a thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyStatus {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: Rat,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// Outcome of checking one identity. `first_mismatch` is present exactly
/// when the status is `Fail`; `message` carries the error text for `Error`
/// and is not serialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub order: Rat,
    pub status: VerifyStatus,
    pub first_mismatch: Option<Mismatch>,
    pub millis: u64,
    pub message: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == VerifyStatus::Pass
    }
}

#[derive(Serialize, Deserialize)]
struct MismatchWire {
    exponent: String,
    lhs: String,
    rhs: String,
}

#[derive(Serialize, Deserialize)]
struct ReportWire {
    identity: String,
    order: String,
    status: VerifyStatus,
    first_mismatch: Option<MismatchWire>,
    millis: u64,
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ReportWire {
            identity: self.identity.clone(),
            order: self.order.to_string(),
            status: self.status,
            first_mismatch: self.first_mismatch.as_ref().map(|m| MismatchWire {
                exponent: m.exponent.to_string(),
                lhs: m.lhs.to_string(),
                rhs: m.rhs.to_string(),
            }),
            millis: self.millis,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VerificationReport {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let w = ReportWire::deserialize(d)?;
        let order = w.order.parse::<Rat>().map_err(D::Error::custom)?;
        let first_mismatch = match w.first_mismatch {
            None => None,
            Some(m) => Some(Mismatch {
                exponent: m.exponent.parse().map_err(D::Error::custom)?,
                lhs: m.lhs.parse().map_err(D::Error::custom)?,
                rhs: m.rhs.parse().map_err(D::Error::custom)?,
            }),
        };
        if (w.status == VerifyStatus::Fail) != first_mismatch.is_some() {
            return Err(D::Error::custom(
                "first_mismatch must be present exactly when status is fail",
            ));
        }
        Ok(VerificationReport {
            identity: w.identity,
            order,
            status: w.status,
            first_mismatch,
            millis: w.millis,
            message: None,
        })
    }
}

fn side(text: &str, order: Rat) -> Result<Series, DslError> {
    let expr = parse(text)?;
    Ok(evaluate_to_order(&expr, order)?)
}

/// Evaluates both sides of `record` and compares them below `order`.
pub fn verify_record(record: &IdentityRecord, order: Rat) -> VerificationReport {
    let start = Instant::now();
    let outcome = side(&record.lhs, order)
        .map_err(|e| format!("left side: {e}"))
        .and_then(|l| {
            side(&record.rhs, order)
                .map_err(|e| format!("right side: {e}"))
                .map(|r| (l, r))
        })
        .and_then(|(l, r)| l.equals_to_order(&r, order).map_err(|e| e.to_string()));
    let (status, first_mismatch, message) = match outcome {
        Ok(Agreement::Equal) => (VerifyStatus::Pass, None, None),
        Ok(Agreement::Mismatch { exponent, lhs, rhs }) => (
            VerifyStatus::Fail,
            Some(Mismatch { exponent, lhs, rhs }),
            None,
        ),
        Err(msg) => (VerifyStatus::Error, None, Some(msg)),
    };
    VerificationReport {
        identity: record.name.clone(),
        order,
        status,
        first_mismatch,
        millis: start.elapsed().as_millis() as u64,
        message,
    }
}

/// Verifies one built-in identity at `order`, or at its default order.
pub fn verify_identity(
    name: &str,
    order: Option<Rat>,
) -> Result<VerificationReport, RegistryError> {
    let record = find(name).ok_or_else(|| RegistryError::UnknownIdentity(name.to_string()))?;
    let order = order.unwrap_or(record.default_order);
    if order <= Rat::from_integer(0) {
        return Err(RegistryError::BadOrder(order));
    }
    Ok(verify_record(&record, order))
}

/// Verifies `records` on `jobs` worker threads. Each record runs at
/// `order_override` when given, else at its default order. Reports come
/// back in the order of `records` whatever the thread count.
pub fn verify_all(
    records: &[IdentityRecord],
    order_override: Option<Rat>,
    jobs: usize,
) -> Result<Vec<VerificationReport>, RegistryError> {
    if let Some(o) = order_override {
        if o <= Rat::from_integer(0) {
            return Err(RegistryError::BadOrder(o));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| RegistryError::ThreadPool(e.to_string()))?;
    Ok(pool.install(|| {
        records
            .par_iter()
            .map(|r| verify_record(r, order_override.unwrap_or(r.default_order)))
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::Status;
    use crate::series::int;

    fn record(lhs: &str, rhs: &str) -> IdentityRecord {
        IdentityRecord {
            name: "t".into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            description: String::new(),
            default_order: int(60),
            status: Status::External,
        }
    }

    #[test]
    fn planted_defect_is_located() {
        let r = record("G(q) * H(q) * E(q)", "E(q^5) * (1 + q^7)");
        let rep = verify_record(&r, int(60));
        assert_eq!(rep.status, VerifyStatus::Fail);
        let m = rep.first_mismatch.unwrap();
        assert_eq!(m.exponent, int(7));
    }

    #[test]
    fn evaluation_problems_become_error_reports() {
        let rep = verify_record(&record("U(1, 2)", "1"), int(20));
        assert_eq!(rep.status, VerifyStatus::Error);
        assert!(rep.message.unwrap().contains("left side"));
        let rep = verify_record(&record("1", "phi(q"), int(20));
        assert_eq!(rep.status, VerifyStatus::Error);
    }

    #[test]
    fn json_round_trip() {
        let rep = verify_record(&record("phi(q)", "phi(q) + 3/2 * q^(5/2)"), int(10));
        let text = serde_json::to_string(&rep).unwrap();
        assert!(text.contains("\"exponent\":\"5/2\""));
        assert!(text.contains("\"order\":\"10\""));
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.first_mismatch, rep.first_mismatch);
        assert_eq!(back.status, rep.status);
    }

    #[test]
    fn unknown_name() {
        assert_eq!(
            verify_identity("nope", None),
            Err(RegistryError::UnknownIdentity("nope".into()))
        );
    }
}
