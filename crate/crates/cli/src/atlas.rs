//! Batch tables over every valid stratum within given limits.

use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use strata_core::Stratum;

use crate::error::CliError;
use crate::report::analyze;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AtlasLimits {
    pub k: u32,
    /// Bound on the total pole order `sum(b_j)`.
    pub max_pole_sum: i64,
    /// `Some(g)` restricts to genus `g`; otherwise genera `0..=max_genus`.
    pub genus: Option<u32>,
    pub max_genus: u32,
    /// Bound on `n + p`.
    pub max_singularities: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasRow {
    pub pattern: String,
    pub k: u32,
    pub g: u32,
    pub n: usize,
    pub p: usize,
    pub nonempty: &'static str,
    pub kappa: Option<usize>,
    pub irreducible: Option<bool>,
    pub mgas_lower: Option<i64>,
    pub mgas_upper: Option<i64>,
    pub sc_lower: Option<i64>,
    pub sc_stratum_bound: Option<i64>,
    pub fv_components_max: Option<usize>,
}

pub fn row(stratum: &Stratum) -> AtlasRow {
    let a = analyze(stratum);
    let b = a.bounds.as_ref();
    AtlasRow {
        pattern: a.stratum.clone(),
        k: a.k,
        g: a.genus,
        n: a.n,
        p: a.p,
        nonempty: a.nonempty,
        kappa: a.kappa,
        irreducible: a.irreducible,
        mgas_lower: b.map(|b| b.mgas_lower),
        mgas_upper: b.and_then(|b| b.mgas_upper.as_ref().map(|u| u.value)),
        sc_lower: b.map(|b| b.sc_lower),
        sc_stratum_bound: b.and_then(|b| b.sc_stratum_bound),
        fv_components_max: b.and_then(|b| b.finite_volume_max),
    }
}

/// Every valid stratum within the limits, each with zeros and poles in
/// decreasing order, sorted by `(g, p, n, zeros, poles)`.
pub fn strata(limits: &AtlasLimits) -> Vec<Stratum> {
    let k = i64::from(limits.k);
    let genera: Vec<u32> = match limits.genus {
        Some(g) => vec![g],
        None => (0..=limits.max_genus).collect(),
    };
    let mut out = Vec::new();
    let mut pole_lists = Vec::new();
    descending(k, limits.max_pole_sum, None, limits.max_singularities.saturating_sub(1), &mut Vec::new(), &mut pole_lists);
    for poles in &pole_lists {
        let room = limits.max_singularities - poles.len();
        for &g in &genera {
            let target = poles.iter().sum::<i64>() + k * (2 * i64::from(g) - 2);
            let mut zeros = Vec::new();
            conical(k, target, i64::MAX, room, &mut Vec::new(), &mut zeros);
            for z in zeros {
                if let Ok(s) = Stratum::new(limits.k, z, poles.clone()) {
                    out.push(s);
                }
            }
        }
    }
    out.sort_by(|a, b| {
        (a.genus(), a.p(), a.n(), a.zeros(), a.poles())
            .cmp(&(b.genus(), b.p(), b.n(), b.zeros(), b.poles()))
    });
    out
}

/// Non-increasing lists of integers `>= k` with sum at most `budget`.
fn descending(
    k: i64,
    budget: i64,
    cap: Option<i64>,
    slots: usize,
    cur: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    out.push(cur.clone());
    if slots == 0 {
        return;
    }
    let hi = cap.map_or(budget, |c| c.min(budget));
    for b in (k..=hi).rev() {
        cur.push(b);
        descending(k, budget - b, Some(b), slots - 1, cur, out);
        cur.pop();
    }
}

/// Non-empty, non-increasing lists of conical orders (nonzero, `> -k`)
/// with the given sum and at most `slots` entries.
fn conical(k: i64, sum: i64, cap: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if sum == 0 && !cur.is_empty() {
        out.push(cur.clone());
    }
    if slots == 0 {
        return;
    }
    let lowest = -(k - 1);
    // the remaining entries can pull the sum down by at most (k-1)(slots-1)
    let hi = cap.min(sum + (k - 1) * (slots as i64 - 1));
    let mut v = hi;
    while v >= lowest {
        if v != 0 {
            let rest = sum - v;
            // rest must be reachable with entries <= v
            let reachable = rest >= lowest * (slots as i64 - 1) && (rest <= 0 || v > 0);
            if reachable {
                cur.push(v);
                conical(k, rest, v, slots - 1, cur, out);
                cur.pop();
            }
        }
        v -= 1;
    }
}

pub fn rows(limits: &AtlasLimits) -> Vec<AtlasRow> {
    strata(limits).par_iter().map(row).collect()
}

pub fn write(rows: &[AtlasRow], path: &Path) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Input(format!("{}: {e}", path.display()));
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => {
            let mut w = csv::Writer::from_path(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            for r in rows {
                w.serialize(r)
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            }
            w.flush().map_err(io)
        }
        Some("json") => {
            let mut text = serde_json::to_string_pretty(rows).expect("rows serialize");
            text.push('\n');
            std::fs::write(path, text).map_err(io)
        }
        _ => Err(CliError::Input(format!(
            "{}: output must end in .csv or .json",
            path.display()
        ))),
    }
}
