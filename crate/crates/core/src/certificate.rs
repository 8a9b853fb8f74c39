//! Certificates: machine-checked hypotheses, computed invariants and the
//! conclusions they license, each tagged with the result it rests on.
//!
//! No certificate claims to have verified incompressibility; conclusions are
//! asserted by citation once the hypotheses hold.

use std::fmt::Display;

use serde::{Serialize, Serializer};

use crate::diagram::{HypothesisReport, PlatDiagram, Strictness, Verdict};
use crate::error::{Error, Result};
use crate::paths::AllowablePath;
use crate::surfaces::{decompose, surface_invariants, SurfaceReport};
use crate::surgery::SurgeryAnnex;

pub(crate) fn display<T: Display, S: Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateMode {
    /// Strict box conditions, `m >= 3`: `E(L)` irreducible, `F` and `F′`
    /// essential.
    Theorem1,
    /// Odd-row end boxes need only denominator 2: `P` essential.
    RelaxedRemark1,
    /// `m = 1`: the surfaces are swallow-follow tori.
    CompositeRemark3,
    /// Haken surgeries.
    Corollary2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Citation {
    #[serde(rename = "Theorem 1")]
    Theorem1,
    #[serde(rename = "Corollary 2")]
    Corollary2,
    #[serde(rename = "Remark 1")]
    Remark1,
    #[serde(rename = "Remark 2")]
    Remark2,
    #[serde(rename = "Remark 3")]
    Remark3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub statement: String,
    pub cite: Citation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refusal {
    pub reason: String,
    pub cite: Citation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Certified,
    Refused,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub digest: String,
    pub mode: CertificateMode,
    pub outcome: Outcome,
    pub hypotheses: HypothesisReport,
    pub path: Option<String>,
    pub surfaces: Vec<SurfaceReport>,
    pub conclusions: Vec<Conclusion>,
    pub refusals: Vec<Refusal>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub surgery: Option<SurgeryAnnex>,
    pub footnotes: Vec<String>,
}

impl Certificate {
    pub fn certified(&self) -> bool {
        self.outcome == Outcome::Certified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization is infallible")
    }

    pub(crate) fn seal(mut self) -> Self {
        self.outcome = if self.refusals.is_empty() && !self.conclusions.is_empty() {
            Outcome::Certified
        } else {
            self.conclusions.clear();
            Outcome::Refused
        };
        self
    }
}

pub(crate) const FOOTNOTES: [&str; 3] = [
    "End boxes of a row are its first and last boxes in left-to-right order; all other boxes are interior. \
     This reading follows the prose description of the box conditions rather than the index set printed \
     in the theorem statement, which does not match either row length.",
    "Hypotheses, allowability and surface invariants are machine-checked. Incompressibility and \
     irreducibility are not computed: each conclusion is asserted on the strength of the cited result.",
    "Genus and Euler characteristic are given in closed form and recounted on an explicit \
     triangulation (field `assembled`).",
];

pub(crate) fn two_bridge_refusal(n: usize) -> Refusal {
    Refusal {
        reason: format!(
            "n = {n} <= 2: L is a two-bridge link, whose exterior contains no closed essential surface \
             (Hatcher-Thurston)"
        ),
        cite: Citation::Remark2,
    }
}

pub(crate) fn hypothesis_refusals(report: &HypothesisReport, cite: Citation) -> Vec<Refusal> {
    report
        .failures
        .iter()
        .map(|w| Refusal {
            reason: format!(
                "box ({}, {}) = {} violates {:?} ({} mode)",
                w.row,
                w.column,
                w.value,
                w.condition,
                match report.mode {
                    Strictness::Strict => "strict",
                    Strictness::Relaxed => "relaxed",
                }
            ),
            cite,
        })
        .collect()
}

/// Certifies the surfaces of the allowable sphere `S(entries)`.
///
/// Hypothesis failures give refusal certificates; only a malformed or
/// non-allowable path is an error (except for `n <= 2`, which is always a
/// refusal because no allowable path exists).
pub fn certify(d: &PlatDiagram, entries: &[usize], mode: CertificateMode) -> Result<Certificate> {
    let strictness = match mode {
        CertificateMode::RelaxedRemark1 => Strictness::Relaxed,
        _ => Strictness::Strict,
    };
    let hypotheses = d.check_hypotheses(strictness);
    let mut cert = Certificate {
        digest: d.digest(),
        mode,
        outcome: Outcome::Refused,
        hypotheses,
        path: None,
        surfaces: Vec::new(),
        conclusions: Vec::new(),
        refusals: Vec::new(),
        surgery: None,
        footnotes: FOOTNOTES.iter().map(|s| s.to_string()).collect(),
    };
    if cert.hypotheses.verdict == Verdict::TwoBridge {
        cert.refusals.push(two_bridge_refusal(d.n()));
        return Ok(cert.seal());
    }

    let path = AllowablePath::new(d, entries.to_vec())?;
    let surfaces = surface_invariants(&decompose(d, &path)?);
    if let Some(bad) = surfaces.iter().find(|s| !s.consistent()) {
        return Err(Error::Inconsistent(format!(
            "closed form and assembly disagree for {:?}",
            bad.kind
        )));
    }
    let genus = surfaces[1].genus;
    cert.path = Some(path.to_string());
    cert.surfaces = surfaces.to_vec();
    let m = d.m();
    let alpha = format!("({path})");

    match mode {
        CertificateMode::Theorem1 | CertificateMode::Corollary2 => {
            cert.refusals = hypothesis_refusals(&cert.hypotheses, Citation::Theorem1);
            if m == 1 {
                cert.refusals.push(Refusal {
                    reason: "m = 1: the link is composite; certify it in composite mode".into(),
                    cite: Citation::Remark3,
                });
            }
            cert.conclusions = vec![
                Conclusion {
                    statement: "E(L) is irreducible".into(),
                    cite: Citation::Theorem1,
                },
                Conclusion {
                    statement: format!(
                        "F{alpha} is essential in E(L); it is closed of genus {genus}"
                    ),
                    cite: Citation::Theorem1,
                },
                Conclusion {
                    statement: format!(
                        "F'{alpha} is essential in E(L); it is closed of genus {genus}"
                    ),
                    cite: Citation::Theorem1,
                },
            ];
        }
        CertificateMode::RelaxedRemark1 => {
            cert.refusals = hypothesis_refusals(&cert.hypotheses, Citation::Remark1);
            cert.conclusions = vec![Conclusion {
                statement: format!(
                    "P{alpha} is an essential planar surface in E(L) with {} boundary components",
                    m + 1
                ),
                cite: Citation::Remark1,
            }];
        }
        CertificateMode::CompositeRemark3 => {
            cert.refusals = hypothesis_refusals(&cert.hypotheses, Citation::Remark3);
            if m != 1 {
                cert.refusals.push(Refusal {
                    reason: format!("composite mode needs m = 1, diagram has m = {m}"),
                    cite: Citation::Remark3,
                });
            }
            cert.conclusions = vec![
                Conclusion {
                    statement: "E(L) is irreducible".into(),
                    cite: Citation::Remark3,
                },
                Conclusion {
                    statement: format!(
                        "F{alpha} and F'{alpha} are swallow-follow tori, which are essential in E(L)"
                    ),
                    cite: Citation::Remark3,
                },
            ];
        }
    }
    Ok(cert.seal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::TangleBox;

    fn d333() -> PlatDiagram {
        PlatDiagram::from_twists(3, 3, vec![vec![3, 3], vec![3, 3, 3], vec![3, 3]]).unwrap()
    }

    #[test]
    fn theorem_certificate() {
        let c = certify(&d333(), &[1, 1, 1], CertificateMode::Theorem1).unwrap();
        assert!(c.certified());
        assert_eq!(c.surfaces[1].genus, 2);
        assert_eq!(c.surfaces[2].genus, 2);
        assert_eq!(c.conclusions.len(), 3);
        assert!(c.conclusions.iter().all(|k| k.cite == Citation::Theorem1));
    }

    #[test]
    fn relaxed_only() {
        let d = d333().with_box(1, 1, TangleBox::Twist(2));
        let strict = certify(&d, &[1, 1, 1], CertificateMode::Theorem1).unwrap();
        assert!(!strict.certified());
        assert!(strict.conclusions.is_empty());
        assert!(strict.refusals[0].reason.contains("OddRowEnds"));
        let relaxed = certify(&d, &[1, 1, 1], CertificateMode::RelaxedRemark1).unwrap();
        assert!(relaxed.certified());
        assert_eq!(relaxed.conclusions[0].cite, Citation::Remark1);
        assert!(relaxed.conclusions[0].statement.starts_with("P(1,1,1) is an essential planar"));
    }

    #[test]
    fn two_bridge_refusal_ignores_path() {
        let d = PlatDiagram::from_twists(2, 3, vec![vec![3], vec![3, 3], vec![3]]).unwrap();
        for mode in [
            CertificateMode::Theorem1,
            CertificateMode::RelaxedRemark1,
            CertificateMode::CompositeRemark3,
        ] {
            let c = certify(&d, &[9, 9], mode).unwrap();
            assert!(!c.certified());
            assert_eq!(c.refusals[0].cite, Citation::Remark2);
            assert!(c.refusals[0].reason.contains("no closed essential surface"));
        }
    }

    #[test]
    fn composite_mode() {
        let d = PlatDiagram::from_twists(3, 1, vec![vec![3, 5]]).unwrap();
        let c = certify(&d, &[1], CertificateMode::CompositeRemark3).unwrap();
        assert!(c.certified());
        assert_eq!(c.surfaces[1].genus, 1);
        assert!(!certify(&d, &[1], CertificateMode::Theorem1).unwrap().certified());
        assert!(!certify(&d333(), &[1, 1, 1], CertificateMode::CompositeRemark3)
            .unwrap()
            .certified());
    }

    #[test]
    fn bad_path_is_an_error() {
        assert!(matches!(
            certify(&d333(), &[1, 3, 1], CertificateMode::Theorem1),
            Err(Error::NotAllowable { .. })
        ));
    }

    #[test]
    fn json_key_order() {
        let json = certify(&d333(), &[1, 1, 1], CertificateMode::Theorem1)
            .unwrap()
            .to_json();
        let keys = ["\"mode\"", "\"hypotheses\"", "\"path\"", "\"surfaces\"", "\"conclusions\"", "\"footnotes\""];
        let offsets: Vec<_> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(offsets.windows(2).all(|w| w[0] < w[1]));
    }
}
