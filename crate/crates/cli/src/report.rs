//! Serializable reports for `analyze`, `bounds`, `kappa` and `check`.

use serde::Serialize;
use strata_core::bounds::{bounds_report, BoundsReport, GenericMgas};
use strata_core::{is_irreducible, Irreducibility, Nonemptiness, Stratum, Violation};

use crate::notation::render;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperDocument {
    pub value: i64,
    pub rules: Vec<&'static str>,
    pub attained_by: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericDocument {
    pub kind: &'static str,
    pub value: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsDocument {
    pub g: u32,
    pub n: usize,
    pub p: usize,
    pub mgas_lower: i64,
    pub mgas_upper: Option<UpperDocument>,
    pub mgas_generic: GenericDocument,
    pub sc_lower: i64,
    pub degenerate_core: &'static str,
    pub sc_stratum_bound: Option<i64>,
    pub sc_chamber_bound: Option<i64>,
    pub finite_volume_max: Option<usize>,
    pub infinite_cylinder_max: Option<usize>,
    pub free_component_max: usize,
}

impl From<&BoundsReport> for BoundsDocument {
    fn from(r: &BoundsReport) -> Self {
        let (kind, value) = match r.mgas_generic {
            GenericMgas::Exact(v) => ("exact", Some(v)),
            GenericMgas::AtLeast(v) => ("at_least", Some(v)),
            GenericMgas::NotApplicable => ("not_applicable", None),
        };
        BoundsDocument {
            g: r.g,
            n: r.n,
            p: r.p,
            mgas_lower: r.mgas_lower,
            mgas_upper: r.mgas_upper.as_ref().map(|u| UpperDocument {
                value: u.value,
                rules: u.rules.iter().map(|r| r.as_str()).collect(),
                attained_by: u.attained_by.iter().map(|r| r.as_str()).collect(),
            }),
            mgas_generic: GenericDocument { kind, value },
            sc_lower: r.sc_lower,
            degenerate_core: r.degenerate_core.as_str(),
            sc_stratum_bound: r.sc_stratum_bound,
            sc_chamber_bound: r.sc_chamber_bound,
            finite_volume_max: r.components.map(|c| c.finite_volume_max),
            infinite_cylinder_max: r.components.and_then(|c| c.infinite_cylinder_max),
            free_component_max: r.p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeDocument {
    pub stratum: String,
    pub k: u32,
    pub genus: u32,
    pub n: usize,
    pub p: usize,
    pub nonempty: &'static str,
    pub kappa: Option<usize>,
    pub irreducible: Option<bool>,
    pub literal_split: Option<bool>,
    pub augmented_split: Option<bool>,
    pub readings_disagree: Option<bool>,
    pub bounds: Option<BoundsDocument>,
}

/// Empty strata get `null` for every derived field, as do fields whose
/// operation does not support the stratum.
pub fn analyze(stratum: &Stratum) -> AnalyzeDocument {
    let nonempty = stratum.is_nonempty();
    let live = nonempty != Nonemptiness::Empty;
    let irr: Option<Irreducibility> = live.then(|| is_irreducible(stratum).ok()).flatten();
    AnalyzeDocument {
        stratum: render(stratum),
        k: stratum.k(),
        genus: stratum.genus(),
        n: stratum.n(),
        p: stratum.p(),
        nonempty: nonempty.as_str(),
        kappa: irr.as_ref().map(|i| i.kappa),
        irreducible: irr.as_ref().map(|i| i.irreducible),
        literal_split: irr.as_ref().map(|i| i.literal_split),
        augmented_split: irr.as_ref().map(|i| i.augmented_split),
        readings_disagree: irr.as_ref().map(|i| i.readings_disagree),
        bounds: live.then(|| BoundsDocument::from(&bounds_report(stratum, None))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationDocument {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckDocument {
    pub stratum: String,
    pub valid: bool,
    pub violations: Vec<ViolationDocument>,
}

pub fn check(stratum: &Stratum, violations: &[Violation]) -> CheckDocument {
    CheckDocument {
        stratum: render(stratum),
        valid: violations.is_empty(),
        violations: violations
            .iter()
            .map(|v| ViolationDocument {
                kind: v.kind(),
                message: v.to_string(),
            })
            .collect(),
    }
}
