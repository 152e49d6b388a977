//! Cover certificates, exact thresholds and the JSON shape solvers emit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex set claimed to be a vertex cover, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverCertificate {
    pub cover: Vec<usize>,
    pub claimed_size: usize,
}

impl CoverCertificate {
    pub fn new(mut cover: Vec<usize>) -> Self {
        cover.sort_unstable();
        cover.dedup();
        let claimed_size = cover.len();
        CoverCertificate {
            cover,
            claimed_size,
        }
    }

    pub fn len(&self) -> usize {
        self.cover.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cover.is_empty()
    }

    /// Fails with the first uncovered edge, or if the claimed size is off.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        if self.claimed_size != self.cover.len() {
            return Err(Error::Precondition(format!(
                "claimed size {} but cover has {} vertices",
                self.claimed_size,
                self.cover.len()
            )));
        }
        if let Some(&v) = self.cover.iter().find(|&&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        match g.uncovered_edge(&self.cover) {
            Some((u, v)) => Err(Error::NotACover(u, v)),
            None => Ok(()),
        }
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.cover.iter().map(|v| v + 1).collect()
    }
}

/// Exact rational `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Threshold {
    pub num: i64,
    pub den: i64,
}

impl Threshold {
    /// `size <= num / den`, by cross-multiplication.
    pub fn admits(&self, size: usize) -> bool {
        (size as i128) * (self.den as i128) <= self.num as i128
    }
}

impl std::fmt::Display for Threshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Answer of a decision procedure, with a certificate on yes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(CoverCertificate),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn certificate(&self) -> Option<&CoverCertificate> {
        match self {
            Decision::Yes(c) => Some(c),
            Decision::No => None,
        }
    }
}

/// Certificate file written by `solve`: 1-based ids, keys in this order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverCertificate {
    pub problem: String,
    pub answer: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cover: Option<Vec<usize>>,
    pub threshold_num: i64,
    pub threshold_den: i64,
}

impl SolverCertificate {
    pub fn new(problem: &str, decision: &Decision, threshold: Threshold) -> Self {
        SolverCertificate {
            problem: problem.to_string(),
            answer: decision.is_yes(),
            cover: decision.certificate().map(CoverCertificate::to_one_based),
            threshold_num: threshold.num,
            threshold_den: threshold.den,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_is_exact() {
        // 5/2: 2 fits, 3 does not
        let t = Threshold { num: 5, den: 2 };
        assert!(t.admits(2));
        assert!(!t.admits(3));
        assert!(!Threshold { num: -1, den: 3 }.admits(0));
    }

    #[test]
    fn certificate_json_key_order() {
        let d = Decision::Yes(CoverCertificate::new(vec![4, 0]));
        let c = SolverCertificate::new("vcl1", &d, Threshold { num: 9, den: 3 });
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"problem":"vcl1","answer":true,"cover":[1,5],"threshold_num":9,"threshold_den":3}"#
        );
        let c = SolverCertificate::new("vcu1", &Decision::No, Threshold { num: 8, den: 4 });
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"problem":"vcu1","answer":false,"threshold_num":8,"threshold_den":4}"#
        );
    }

    #[test]
    fn verify_names_uncovered_edge() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            CoverCertificate::new(vec![0]).verify(&g),
            Err(Error::NotACover(1, 2))
        );
        assert!(CoverCertificate::new(vec![1]).verify(&g).is_ok());
    }
}
