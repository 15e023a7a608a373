use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

/// Machine-readable record of one theorem verification.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub theorem: String,
    pub stages: Vec<StageRecord>,
    pub verdict: String,
    pub variable_orders: BTreeMap<String, Vec<String>>,
    pub engine: String,
}

/// One verification stage. `dimension_lhs`/`dimension_rhs` are -1 when the
/// stage compares no ideals.
#[derive(Debug, Clone, Serialize)]
pub struct StageRecord {
    pub name: String,
    pub relation: String,
    pub lhs_basis_size: i64,
    pub rhs_basis_size: i64,
    pub dimension_lhs: i64,
    pub dimension_rhs: i64,
    pub verdict: String,
    pub ms: u64,
}

pub const PASS: &str = "PASS";
pub const FAIL: &str = "FAIL";

impl Certificate {
    pub fn passed(&self) -> bool {
        self.verdict == PASS
    }

    pub(crate) fn conclude(
        theorem: &str,
        stages: Vec<StageRecord>,
        variable_orders: BTreeMap<String, Vec<String>>,
    ) -> Certificate {
        let all_pass = stages.iter().all(|s| s.verdict == PASS);
        Certificate {
            theorem: theorem.to_string(),
            stages,
            verdict: if all_pass { PASS } else { FAIL }.into(),
            variable_orders,
            engine: format!("mukai {}", env!("CARGO_PKG_VERSION")),
        }
    }
}

/// Builder that times a stage and fills the record.
pub(crate) struct StageTimer {
    name: String,
    start: Instant,
}

impl StageTimer {
    pub fn begin(name: &str) -> Self {
        StageTimer {
            name: name.to_string(),
            start: Instant::now(),
        }
    }

    pub fn record(
        self,
        relation: impl Into<String>,
        pass: bool,
        sizes: (i64, i64),
        dims: (i64, i64),
    ) -> StageRecord {
        StageRecord {
            name: self.name,
            relation: relation.into(),
            lhs_basis_size: sizes.0,
            rhs_basis_size: sizes.1,
            dimension_lhs: dims.0,
            dimension_rhs: dims.1,
            verdict: if pass { PASS } else { FAIL }.into(),
            ms: self.start.elapsed().as_millis() as u64,
        }
    }
}
