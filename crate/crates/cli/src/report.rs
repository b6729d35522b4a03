//! Machine-readable output documents.

use arcnerve::reduce::Removal;
use arcnerve::{HomotopyType, ReductionResult};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum HomotopyDoc {
    Contractible,
    Wedge { dim: usize, count: usize },
}

impl From<HomotopyType> for HomotopyDoc {
    fn from(h: HomotopyType) -> Self {
        match h {
            HomotopyType::Contractible => HomotopyDoc::Contractible,
            HomotopyType::Wedge { dim, count } => HomotopyDoc::Wedge { dim, count },
        }
    }
}

impl From<HomotopyDoc> for HomotopyType {
    fn from(h: HomotopyDoc) -> Self {
        match h {
            HomotopyDoc::Contractible => HomotopyType::Contractible,
            HomotopyDoc::Wedge { dim, count } => HomotopyType::wedge(dim, count),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedDoc {
    pub n: usize,
    pub k: usize,
    pub kept: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalDoc {
    pub removed: usize,
    pub by: usize,
    pub case: String,
}

impl From<&Removal> for RemovalDoc {
    fn from(r: &Removal) -> Self {
        RemovalDoc {
            removed: r.removed,
            by: r.dominating,
            case: r.case.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyReport {
    pub n: usize,
    pub complex: String,
    pub reduced: ReducedDoc,
    pub homotopy: HomotopyDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removals: Option<Vec<RemovalDoc>>,
    /// Set when the removal log was replayed against the input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub log_verified: Option<bool>,
}

impl HomotopyReport {
    pub fn new(n: usize, complex: String, h: HomotopyType, r: &ReductionResult) -> Self {
        HomotopyReport {
            n,
            complex,
            reduced: ReducedDoc {
                n: r.n_prime,
                k: r.k_prime,
                kept: r.kept_indices.clone(),
            },
            homotopy: h.into(),
            removals: None,
            log_verified: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homotopy_shapes() {
        let w = serde_json::to_string(&HomotopyDoc::from(HomotopyType::wedge(2, 2))).unwrap();
        assert_eq!(w, r#"{"type":"wedge","dim":2,"count":2}"#);
        let c = serde_json::to_string(&HomotopyDoc::Contractible).unwrap();
        assert_eq!(c, r#"{"type":"contractible"}"#);
        let back: HomotopyDoc = serde_json::from_str(&w).unwrap();
        assert_eq!(HomotopyType::from(back), HomotopyType::wedge(2, 2));
    }
}
