//! Counting identities and bounds for maximal geodesic arc systems (MGAS),
//! saddle connections and invariant components.
//!
//! `|A|` is the number of arcs in an MGAS, `|SC|` the number of saddle
//! connections, `t` the number of triangles of the core and `beta` the
//! boundary number of the pole domains.

use crate::error::{Error, Result};
use crate::graph::{is_irreducible, kappa, KappaMethod};
use crate::stratum::Stratum;

/// `|A| = 2g - 2 + n + p + t`.
pub fn mgas_from_triangles(g: u32, n: usize, p: usize, t: u64) -> i64 {
    2 * i64::from(g) - 2 + n as i64 + p as i64 + t as i64
}

/// `|A| = 6g - 6 + 3n + 3p - beta`, for `beta >= p`.
pub fn mgas_from_boundary(g: u32, n: usize, p: usize, beta: u64) -> Result<i64> {
    if beta < p as u64 {
        return Err(Error::InvalidBeta { beta, poles: p });
    }
    Ok(6 * i64::from(g) - 6 + 3 * n as i64 + 3 * p as i64 - beta as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UpperRule {
    /// `6g - 6 + 3n + 2p`.
    Base,
    /// `k = 1`, `p = 1`, `g >= 1`: `6g + 3n - 5`.
    OnePole,
    /// `k = 1`, `p = 1`, `g = 0`, `n >= 3`: `3n - 6`.
    OnePoleGenusZero,
    /// `k = 1`, `p = 2`, `n >= 2`, irreducible: `3n - 3`.
    TwoPolesIrreducible,
}

impl UpperRule {
    pub fn as_str(self) -> &'static str {
        match self {
            UpperRule::Base => "base",
            UpperRule::OnePole => "one_pole",
            UpperRule::OnePoleGenusZero => "one_pole_genus_zero",
            UpperRule::TwoPolesIrreducible => "two_poles_irreducible",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBound {
    pub value: i64,
    /// Every rule that applies, in rule order.
    pub rules: Vec<UpperRule>,
    /// The rules attaining `value`.
    pub attained_by: Vec<UpperRule>,
}

/// The smallest applicable upper bound on `|A|`.
pub fn mgas_upper(stratum: &Stratum) -> Result<UpperBound> {
    stratum.require_k12()?;
    let (g, n, p) = (
        i64::from(stratum.genus()),
        stratum.n() as i64,
        stratum.p() as i64,
    );
    let mut candidates = vec![(UpperRule::Base, 6 * g - 6 + 3 * n + 2 * p)];
    if stratum.k() == 1 {
        if p == 1 && g >= 1 {
            candidates.push((UpperRule::OnePole, 6 * g + 3 * n - 5));
        }
        if p == 1 && g == 0 && n >= 3 {
            candidates.push((UpperRule::OnePoleGenusZero, 3 * n - 6));
        }
        if p == 2 && n >= 2 && is_irreducible(stratum)?.irreducible {
            candidates.push((UpperRule::TwoPolesIrreducible, 3 * n - 3));
        }
    }
    let value = candidates.iter().map(|&(_, v)| v).min().unwrap();
    Ok(UpperBound {
        value,
        rules: candidates.iter().map(|&(r, _)| r).collect(),
        attained_by: candidates
            .iter()
            .filter(|&&(_, v)| v == value)
            .map(|&(r, _)| r)
            .collect(),
    })
}

/// `|A|` for a generic surface when every pole has order exactly `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenericMgas {
    Exact(i64),
    AtLeast(i64),
    NotApplicable,
}

pub fn mgas_generic(stratum: &Stratum) -> GenericMgas {
    let k = stratum.k();
    if stratum.poles().iter().any(|&b| b != i64::from(k)) {
        return GenericMgas::NotApplicable;
    }
    let (g, n, p) = (
        i64::from(stratum.genus()),
        stratum.n() as i64,
        stratum.p() as i64,
    );
    if k % 2 == 1 || p >= 2 {
        GenericMgas::Exact(6 * g - 6 + 3 * n + 2 * p)
    } else if p == 1 {
        GenericMgas::AtLeast(6 * g + 3 * n - 5)
    } else {
        GenericMgas::NotApplicable
    }
}

/// Whether some surface of the stratum has a degenerate core, which is
/// when `|SC| = 2g - 2 + n + p` can hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegenerateCore {
    Attainable,
    /// A conical singularity of angle below `pi` (`2a < -k`) forbids it.
    Impossible,
    /// `k >= 3` with no such singularity.
    Undetermined,
}

impl DegenerateCore {
    pub fn as_str(self) -> &'static str {
        match self {
            DegenerateCore::Attainable => "attainable",
            DegenerateCore::Impossible => "impossible",
            DegenerateCore::Undetermined => "undetermined",
        }
    }
}

/// `|SC| >= |A| >= 2g - 2 + n + p`, with the status of the equality case.
pub fn sc_lower(stratum: &Stratum) -> (i64, DegenerateCore) {
    let k = i64::from(stratum.k());
    let value = mgas_from_triangles(stratum.genus(), stratum.n(), stratum.p(), 0);
    let core = if k <= 2 {
        DegenerateCore::Attainable
    } else if stratum.zeros().iter().any(|&a| 2 * a < -k) {
        DegenerateCore::Impossible
    } else {
        DegenerateCore::Undetermined
    };
    (value, core)
}

/// `2g - 2 + n + p + t + sum t_i (t_i - 1) / 2` with `t = sum t_i`.
pub fn sc_chamber_bound(g: u32, n: usize, p: usize, triangle_counts: &[u64]) -> i64 {
    let t: u64 = triangle_counts.iter().sum();
    let pairs: u64 = triangle_counts
        .iter()
        .map(|&ti| ti * ti.saturating_sub(1) / 2)
        .sum();
    mgas_from_triangles(g, n, p, t) + pairs as i64
}

/// `2g - 2 + n + p + (4g - 4 + 2n + p)(4g + 2n + p - 3) / 2` for an
/// irreducible stratum of 1-forms.
pub fn sc_stratum_bound(stratum: &Stratum) -> Result<i64> {
    if stratum.k() != 1 {
        return Err(Error::NotApplicable(
            "the saddle connection bound is proved for k = 1 only".into(),
        ));
    }
    if !is_irreducible(stratum)?.irreducible {
        return Err(Error::NotIrreducible);
    }
    let (g, n, p) = (
        i64::from(stratum.genus()),
        stratum.n() as i64,
        stratum.p() as i64,
    );
    let t = 4 * g - 4 + 2 * n + p;
    Ok(2 * g - 2 + n + p + t * (t + 1) / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComponentBounds {
    /// `g + kappa`.
    pub finite_volume_max: usize,
    /// The number of simple poles; `None` unless `k = 1`.
    pub infinite_cylinder_max: Option<usize>,
    /// `p`.
    pub free_component_max: usize,
}

pub fn invariant_component_bounds(stratum: &Stratum) -> Result<ComponentBounds> {
    let kappa = kappa(stratum, KappaMethod::Direct)?;
    Ok(ComponentBounds {
        finite_volume_max: stratum.genus() as usize + kappa,
        infinite_cylinder_max: (stratum.k() == 1)
            .then(|| stratum.poles().iter().filter(|&&b| b == 1).count()),
        free_component_max: stratum.p(),
    })
}

/// Every formula evaluated on one stratum; `None` where a formula does
/// not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub g: u32,
    pub n: usize,
    pub p: usize,
    pub mgas_lower: i64,
    pub mgas_upper: Option<UpperBound>,
    pub mgas_generic: GenericMgas,
    pub sc_lower: i64,
    pub degenerate_core: DegenerateCore,
    pub sc_stratum_bound: Option<i64>,
    pub components: Option<ComponentBounds>,
    /// `sc_chamber_bound` for caller-supplied triangle counts.
    pub sc_chamber_bound: Option<i64>,
}

pub fn bounds_report(stratum: &Stratum, triangle_counts: Option<&[u64]>) -> BoundsReport {
    let (g, n, p) = (stratum.genus(), stratum.n(), stratum.p());
    let (sc_low, core) = sc_lower(stratum);
    BoundsReport {
        g,
        n,
        p,
        mgas_lower: mgas_from_triangles(g, n, p, 0),
        mgas_upper: mgas_upper(stratum).ok(),
        mgas_generic: mgas_generic(stratum),
        sc_lower: sc_low,
        degenerate_core: core,
        sc_stratum_bound: sc_stratum_bound(stratum).ok(),
        components: invariant_component_bounds(stratum).ok(),
        sc_chamber_bound: triangle_counts
            .filter(|_| stratum.k() == 1)
            .map(|t| sc_chamber_bound(g, n, p, t)),
    }
}
