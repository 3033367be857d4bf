//! Deterministic pass/fail certificates.
//!
//! Every checker walks its equation instances in a fixed order (equation label
//! first, then lexicographic basis indices) and records the first failure together
//! with the total failure count, so certificate content is reproducible bit for
//! bit across runs and platforms.

use serde::Serialize;
use std::fmt::Display;

/// Version tag of the tensor-slot placement convention used by the rank-3
/// products (see the `yangbaxter` module docs).  Embedded in certificates so
/// results stay comparable across releases.
pub const CONVENTION: &str = "tensor-slot-v1";

/// Pass/fail status of a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first failing instance of a check: which equation, at which basis tuple,
/// and a sample nonzero residual coefficient (as an exact rational string).
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    /// Stable label of the failed equation within the check.
    pub equation: String,
    /// Basis indices of the failing instance, in the order the equation
    /// quantifies them.
    pub indices: Vec<usize>,
    /// First nonzero coefficient of the residual at that instance.
    pub residual: String,
}

/// Deterministic machine-readable result of one check.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    /// Name of the check (e.g. `"associativity"`, `"matched-pair"`).
    pub name: String,
    /// Pass iff `failure_count == 0`.
    pub status: Status,
    /// Total number of failing equation instances.
    pub failure_count: usize,
    /// First failure in (equation label, lexicographic indices) order, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_witness: Option<Witness>,
    /// Tensor-slot convention version; present on checks whose outcome depends
    /// on the rank-3 placement convention.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<&'static str>,
    /// Marks checks whose source formulation is ambiguous on general inputs and
    /// which therefore commit to the locked convention.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub convention_sensitive: bool,
}

impl Certificate {
    /// Fresh passing certificate; failures are accumulated with [`record`].
    ///
    /// [`record`]: Certificate::record
    pub fn new(name: impl Into<String>) -> Self {
        Certificate {
            name: name.into(),
            status: Status::Pass,
            failure_count: 0,
            first_witness: None,
            convention: None,
            convention_sensitive: false,
        }
    }

    /// Record one failing instance.  The first recorded failure becomes the
    /// witness; callers must iterate instances in deterministic order.
    pub fn record(&mut self, equation: &str, indices: &[usize], residual: &dyn Display) {
        if self.first_witness.is_none() {
            self.first_witness = Some(Witness {
                equation: equation.to_string(),
                indices: indices.to_vec(),
                residual: residual.to_string(),
            });
        }
        self.failure_count += 1;
        self.status = Status::Fail;
    }

    /// True iff no failures were recorded.
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Fold another certificate into this one, prefixing its equation labels with
    /// its name.  Keeps the earliest witness (in merge order).
    pub fn absorb(&mut self, other: Certificate) {
        if other.failure_count > 0 {
            if self.first_witness.is_none() {
                let mut w = other.first_witness.clone().expect("failing cert has witness");
                w.equation = format!("{}/{}", other.name, w.equation);
                self.first_witness = Some(w);
            }
            self.failure_count += other.failure_count;
            self.status = Status::Fail;
        }
        if other.convention.is_some() {
            self.convention = other.convention;
        }
        self.convention_sensitive |= other.convention_sensitive;
    }

    /// Mark the certificate as depending on the tensor-slot convention.
    pub fn with_convention(mut self, sensitive: bool) -> Self {
        self.convention = Some(CONVENTION);
        self.convention_sensitive = sensitive;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_first_witness_and_count() {
        let mut c = Certificate::new("demo");
        assert!(c.passed());
        c.record("eq-1", &[0, 1], &"3/2");
        c.record("eq-2", &[1, 1], &"-1");
        assert!(!c.passed());
        assert_eq!(c.failure_count, 2);
        let w = c.first_witness.unwrap();
        assert_eq!(w.equation, "eq-1");
        assert_eq!(w.indices, vec![0, 1]);
        assert_eq!(w.residual, "3/2");
    }

    #[test]
    fn absorb_prefixes_labels() {
        let mut inner = Certificate::new("sub");
        inner.record("eq", &[2], &"1");
        let mut outer = Certificate::new("outer");
        outer.absorb(inner);
        assert_eq!(outer.failure_count, 1);
        assert_eq!(outer.first_witness.unwrap().equation, "sub/eq");
    }
}
