//! Dehn surgery slopes and Haken certificates.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::certificate::{
    certify, display, two_bridge_refusal, Certificate, CertificateMode, Citation, Conclusion,
    Refusal, FOOTNOTES,
};
use crate::diagram::{PlatDiagram, Strictness, Verdict};
use crate::error::{Error, Result};
use crate::paths::extremal_paths;
use crate::tangle::Fraction;
use crate::topology::{LinkTopology, Side};

/// A slope `p/q` on a boundary torus; the meridian is `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope(Fraction);

impl Slope {
    pub const MERIDIAN: Slope = Slope(Fraction::INFINITY);

    pub fn new(p: i64, q: i64) -> Result<Self> {
        Fraction::new(p, q)
            .map(Slope)
            .map_err(|_| Error::BadSlope(format!("{p}/{q}")))
    }

    pub fn is_meridian(&self) -> bool {
        self.0.is_infinite()
    }

    pub fn p(&self) -> i64 {
        self.0.p()
    }

    pub fn q(&self) -> i64 {
        self.0.q()
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadSlope(s.to_string());
        let (p, q) = s.trim().split_once('/').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        Slope::new(p, q).map_err(|_| bad())
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        display(self, serializer)
    }
}

/// One slope per link component, in canonical component order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SurgerySpec {
    pub slopes: Vec<Slope>,
}

impl SurgerySpec {
    pub fn new(slopes: Vec<Slope>) -> Self {
        SurgerySpec { slopes }
    }

    /// Parses `"3/1,5/2"`.
    pub fn parse(s: &str) -> Result<Self> {
        s.split(',')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(SurgerySpec::new)
    }

    fn check_arity(&self, components: usize) -> Result<()> {
        if self.slopes.len() != components {
            return Err(Error::SlopeCount {
                expected: components,
                found: self.slopes.len(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Nontriviality {
    pub holds: bool,
    /// Components whose slope is the meridian.
    pub offenders: Vec<usize>,
}

pub fn is_totally_nontrivial(spec: &SurgerySpec, components: usize) -> Result<Nontriviality> {
    spec.check_arity(components)?;
    let offenders: Vec<usize> = spec
        .slopes
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_meridian())
        .map(|(c, _)| c)
        .collect();
    Ok(Nontriviality {
        holds: offenders.is_empty(),
        offenders,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityCriterion {
    pub holds: bool,
    /// First odd row whose first box has an odd twist count.
    pub first_box_row: Option<usize>,
    /// First odd row whose last box has an odd twist count.
    pub last_box_row: Option<usize>,
}

/// Some odd row starts with an odd twist and some odd row ends with one.
pub fn parity_criterion(d: &PlatDiagram) -> Result<ParityCriterion> {
    if d.n() < 2 {
        return Err(Error::Parameter("odd rows of a 2-plat have no boxes".into()));
    }
    let last = d.n() - 1;
    let mut first_box_row = None;
    let mut last_box_row = None;
    for i in (1..=d.m()).step_by(2) {
        for (j, slot) in [(1, &mut first_box_row), (last, &mut last_box_row)] {
            let a = d.get(i, j).twist().ok_or(Error::UnsupportedBox {
                row: i,
                column: j,
                operation: "the parity criterion",
            })?;
            if a % 2 != 0 && slot.is_none() {
                *slot = Some(i);
            }
        }
    }
    Ok(ParityCriterion {
        holds: first_box_row.is_some() && last_box_row.is_some(),
        first_box_row,
        last_box_row,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub holds: bool,
    /// Components left of the leftmost allowable sphere.
    pub uncovered_left: Vec<usize>,
    /// Components right of the rightmost allowable sphere.
    pub uncovered_right: Vec<usize>,
}

impl Coverage {
    pub fn uncovered(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self
            .uncovered_left
            .iter()
            .chain(&self.uncovered_right)
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// Every component meets some allowable sphere.
///
/// Spheres sweep from `S(1, …, 1)` to `S(n-2, n-1, …, n-2)`, so a component
/// misses all of them exactly when it lies strictly left of the first or
/// strictly right of the last.
pub fn direct_coverage_check(d: &PlatDiagram) -> Result<Coverage> {
    let (leftmost, rightmost) = extremal_paths(d)?;
    let t = LinkTopology::build(d);
    let uncovered_left: Vec<usize> = t
        .components_strictly_beside(&leftmost, Side::Left)?
        .into_iter()
        .collect();
    let uncovered_right: Vec<usize> = t
        .components_strictly_beside(&rightmost, Side::Right)?
        .into_iter()
        .collect();
    Ok(Coverage {
        holds: uncovered_left.is_empty() && uncovered_right.is_empty(),
        uncovered_left,
        uncovered_right,
    })
}

/// Surgery fields appended to a Haken certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgeryAnnex {
    pub slopes: SurgerySpec,
    pub totally_nontrivial: Nontriviality,
    pub coverage: Coverage,
    /// Cross-check only; `null` when an odd-row end box is rational.
    pub parity_criterion: Option<ParityCriterion>,
}

/// Certifies that `L(r)` is Haken and that `F`, `F′` of the leftmost sphere
/// stay incompressible.
///
/// Requires the strict box conditions, coverage of every component by some
/// allowable sphere, and a totally nontrivial slope tuple. Coverage is
/// decided by the direct check; the parity criterion is recorded alongside.
/// For `m = 1` the underlying surfaces are those of the composite case.
pub fn certify_haken(d: &PlatDiagram, spec: &SurgerySpec) -> Result<Certificate> {
    if d.n() <= 2 {
        let mut cert = Certificate {
            digest: d.digest(),
            mode: CertificateMode::Corollary2,
            outcome: crate::certificate::Outcome::Refused,
            hypotheses: d.check_hypotheses(Strictness::Strict),
            path: None,
            surfaces: Vec::new(),
            conclusions: Vec::new(),
            refusals: vec![two_bridge_refusal(d.n())],
            surgery: None,
            footnotes: FOOTNOTES.iter().map(|s| s.to_string()).collect(),
        };
        debug_assert_eq!(cert.hypotheses.verdict, Verdict::TwoBridge);
        cert = cert.seal();
        return Ok(cert);
    }
    let t = LinkTopology::build(d);
    let totally_nontrivial = is_totally_nontrivial(spec, t.component_count())?;
    let coverage = direct_coverage_check(d)?;
    let parity = parity_criterion(d).ok();

    let (leftmost, _) = extremal_paths(d)?;
    let base_mode = if d.m() == 1 {
        CertificateMode::CompositeRemark3
    } else {
        CertificateMode::Theorem1
    };
    let base = certify(d, leftmost.entries(), base_mode)?;
    let alpha = format!("({leftmost})");

    let mut refusals = Vec::new();
    for r in &base.refusals {
        refusals.push(Refusal {
            reason: r.reason.clone(),
            cite: r.cite,
        });
    }
    for &c in &coverage.uncovered_left {
        refusals.push(Refusal {
            reason: format!(
                "component {c} lies left of S{alpha} and meets no allowable sphere"
            ),
            cite: Citation::Corollary2,
        });
    }
    for &c in &coverage.uncovered_right {
        refusals.push(Refusal {
            reason: format!("component {c} lies right of the rightmost allowable sphere and meets no allowable sphere"),
            cite: Citation::Corollary2,
        });
    }
    for &c in &totally_nontrivial.offenders {
        refusals.push(Refusal {
            reason: format!("slope of component {c} is the meridian 1/0"),
            cite: Citation::Corollary2,
        });
    }

    let r = spec
        .slopes
        .iter()
        .map(Slope::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    let cert = Certificate {
        mode: CertificateMode::Corollary2,
        refusals,
        conclusions: vec![
            Conclusion {
                statement: format!("L(r) is a Haken manifold for r = ({r})"),
                cite: Citation::Corollary2,
            },
            Conclusion {
                statement: format!("F{alpha} and F'{alpha} remain incompressible in L(r)"),
                cite: Citation::Corollary2,
            },
        ],
        surgery: Some(SurgeryAnnex {
            slopes: spec.clone(),
            totally_nontrivial,
            coverage,
            parity_criterion: parity,
        }),
        ..base
    };
    Ok(cert.seal())
}
