//! Enumeration of graph representations up to isomorphism.
//!
//! For a level `s` the search runs in three stages:
//!
//! 1. partitions of the singularity pattern into `s + 1` families, each
//!    holding a conical singularity and with an order sum `sigma` that is a
//!    multiple of `k` and at least `-k` (at least `-2k` at level 0);
//! 2. weight vectors with `sum(w) <= g`, which fix the valencies
//!    `v_i = sigma_i / k - 2 w_i + 2`;
//! 3. connected multigraphs with that degree sequence, filtered by the
//!    bridge condition when `k = 1`.
//!
//! Two representations are isomorphic when a graph isomorphism maps every
//! vertex to one with the same family multiset and weight.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::canon::canonical_form;
use crate::graph::partition::{for_each_partition, Multiset};
use crate::graph::{GraphRepresentation, Multigraph};
use crate::stratum::Stratum;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Highest level to enumerate; `None` means `n - 1`.
    pub max_level: Option<usize>,
    /// Only representations with all weights zero.
    pub pure_only: bool,
}

/// Sort key of an isomorphism class: level, sorted weights, adjacency code
/// and the (family, weight) labels, all in canonical vertex order.
type ClassKey = (usize, Vec<u32>, Vec<u32>, Vec<(Vec<i64>, u32)>);

/// All graph representations of levels `0..=min(max_level, n - 1)`, one per
/// isomorphism class, sorted by [`ClassKey`].
pub fn enumerate_reps(
    stratum: &Stratum,
    options: &EnumerateOptions,
) -> Result<Vec<GraphRepresentation>> {
    check_supported(stratum)?;
    let top = stratum.n() - 1;
    let top = options.max_level.map_or(top, |m| m.min(top));
    let mut all = BTreeMap::new();
    for level in 0..=top {
        all.extend(classes_at_level(stratum, level, options.pure_only));
    }
    Ok(all.into_values().collect())
}

pub(crate) fn check_supported(stratum: &Stratum) -> Result<()> {
    stratum.require_k12()?;
    if stratum.n() == 0 {
        return Err(Error::UnsupportedPattern(
            "graph representations need a conical singularity".into(),
        ));
    }
    Ok(())
}

fn classes_at_level(
    stratum: &Stratum,
    level: usize,
    pure_only: bool,
) -> BTreeMap<ClassKey, GraphRepresentation> {
    let set = Multiset::from_values(&stratum.pattern());
    let partitions = collect_partitions(stratum, &set, level);
    partitions
        .par_iter()
        .map(|blocks| {
            let mut local = BTreeMap::new();
            let _ = for_each_candidate(stratum, &set, blocks, level, pure_only, |cand| {
                let (key, rep) = canonical_rep(stratum, &set, cand);
                local.entry(key).or_insert(rep);
                ControlFlow::Continue(())
            });
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        })
}

/// First representation found at `level`, in the deterministic search order.
pub(crate) fn find_rep_at_level(stratum: &Stratum, level: usize) -> Option<GraphRepresentation> {
    let set = Multiset::from_values(&stratum.pattern());
    let mut found = None;
    let _ = for_each_partition(
        &set,
        level + 1,
        |v| v > -i64::from(stratum.k()),
        |b| family_ok(stratum, &set, b, level),
        |blocks| {
            for_each_candidate(stratum, &set, blocks, level, false, |cand| {
                found = Some(canonical_rep(stratum, &set, cand).1);
                ControlFlow::Break(())
            })
        },
    );
    found
}

fn family_ok(stratum: &Stratum, set: &Multiset, block: &[usize], level: usize) -> bool {
    let k = i64::from(stratum.k());
    let sigma = set.sum(block);
    let floor = if level == 0 { -2 * k } else { -k };
    sigma % k == 0 && sigma >= floor
}

fn collect_partitions(stratum: &Stratum, set: &Multiset, level: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let _ = for_each_partition(
        set,
        level + 1,
        |v| v > -i64::from(stratum.k()),
        |b| family_ok(stratum, set, b, level),
        |blocks| {
            out.push(blocks.to_vec());
            ControlFlow::Continue(())
        },
    );
    out
}

struct Candidate<'a> {
    blocks: &'a [Vec<usize>],
    weights: &'a [u32],
    adj: &'a [Vec<u32>],
}

/// Runs stages 2 and 3 for one partition.
fn for_each_candidate<F>(
    stratum: &Stratum,
    set: &Multiset,
    blocks: &[Vec<usize>],
    level: usize,
    pure_only: bool,
    mut sink: F,
) -> ControlFlow<()>
where
    F: FnMut(&Candidate<'_>) -> ControlFlow<()>,
{
    let k = i64::from(stratum.k());
    let sigmas: Vec<i64> = blocks.iter().map(|b| set.sum(b)).collect();
    let has_pole: Vec<bool> = blocks
        .iter()
        .map(|b| b.iter().zip(&set.values).any(|(&c, &v)| c > 0 && v <= -k))
        .collect();
    let min_valency = if level == 0 { 0 } else { 1 };
    let genus = if pure_only { 0 } else { stratum.genus() };
    let mut weights = vec![0u32; blocks.len()];

    let mut on_weights = |w: &[u32]| -> ControlFlow<()> {
        let degrees: Vec<u32> = sigmas
            .iter()
            .zip(w)
            .map(|(&s, &wi)| (s / k + 2 - 2 * i64::from(wi)) as u32)
            .collect();
        let check_bridges = stratum.k() == 1;
        let mut gen = GraphGen::new(degrees);
        gen.run(&mut |adj| {
            if check_bridges && !bridges_ok(adj, &has_pole) {
                return ControlFlow::Continue(());
            }
            sink(&Candidate {
                blocks,
                weights: w,
                adj,
            })
        })
    };
    weight_vectors(
        &sigmas,
        blocks,
        k,
        min_valency,
        genus,
        0,
        &mut weights,
        &mut on_weights,
    )
}

/// Weight vectors with `sum(w) <= genus` and valencies at least
/// `min_valency`; among equal families the weights are non-increasing.
#[allow(clippy::too_many_arguments)]
fn weight_vectors(
    sigmas: &[i64],
    blocks: &[Vec<usize>],
    k: i64,
    min_valency: i64,
    genus_left: u32,
    i: usize,
    weights: &mut Vec<u32>,
    f: &mut dyn FnMut(&[u32]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if i == sigmas.len() {
        return f(weights);
    }
    let base = sigmas[i] / k + 2;
    let mut w_max = ((base - min_valency).max(0) / 2) as u32;
    w_max = w_max.min(genus_left);
    if i > 0 && blocks[i] == blocks[i - 1] {
        w_max = w_max.min(weights[i - 1]);
    }
    if base < min_valency {
        return ControlFlow::Continue(());
    }
    for w in 0..=w_max {
        weights[i] = w;
        weight_vectors(
            sigmas,
            blocks,
            k,
            min_valency,
            genus_left - w,
            i + 1,
            weights,
            f,
        )?;
    }
    weights[i] = 0;
    ControlFlow::Continue(())
}

/// Every bridge has a pole-carrying vertex on both sides.
fn bridges_ok(adj: &[Vec<u32>], has_pole: &[bool]) -> bool {
    let g = Multigraph::from_adjacency(adj);
    for e in g.bridges() {
        let comp = g.components_without(Some(e));
        let (u, v) = g.edges()[e];
        for end in [u, v] {
            let ok = (0..g.vertex_count()).any(|x| comp[x] == comp[end] && has_pole[x]);
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Labelled connected multigraphs with loops and a prescribed degree
/// sequence. Vertices are completed in index order; once a vertex is
/// complete, a component made only of completed vertices must already span
/// the whole graph.
struct GraphGen {
    n: usize,
    residual: Vec<u32>,
    adj: Vec<Vec<u32>>,
}

impl GraphGen {
    fn new(degrees: Vec<u32>) -> Self {
        let n = degrees.len();
        GraphGen {
            n,
            residual: degrees,
            adj: vec![vec![0; n]; n],
        }
    }

    fn run(&mut self, f: &mut dyn FnMut(&[Vec<u32>]) -> ControlFlow<()>) -> ControlFlow<()> {
        if self.residual.iter().sum::<u32>() % 2 != 0 {
            return ControlFlow::Continue(());
        }
        self.vertex(0, f)
    }

    fn vertex(&mut self, i: usize, f: &mut dyn FnMut(&[Vec<u32>]) -> ControlFlow<()>) -> ControlFlow<()> {
        if i == self.n {
            return f(&self.adj);
        }
        let r = self.residual[i];
        let later: u32 = self.residual[i + 1..].iter().sum();
        // loops first; the rest must go to later vertices
        for loops in (0..=r / 2).rev() {
            let rest = r - 2 * loops;
            if rest > later {
                break;
            }
            self.adj[i][i] = loops;
            self.residual[i] = rest;
            self.spread(i, i + 1, rest, f)?;
            self.residual[i] = r;
            self.adj[i][i] = 0;
        }
        ControlFlow::Continue(())
    }

    fn spread(
        &mut self,
        i: usize,
        j: usize,
        rest: u32,
        f: &mut dyn FnMut(&[Vec<u32>]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if rest == 0 {
            if !self.closed_component_ok(i) {
                return ControlFlow::Continue(());
            }
            let saved = self.residual[i];
            self.residual[i] = 0;
            let flow = self.vertex(i + 1, f);
            self.residual[i] = saved;
            return flow;
        }
        if j == self.n {
            return ControlFlow::Continue(());
        }
        let beyond: u32 = self.residual[j + 1..].iter().sum();
        let hi = rest.min(self.residual[j]);
        let lo = rest.saturating_sub(beyond);
        for c in (lo..=hi).rev() {
            self.adj[i][j] = c;
            self.adj[j][i] = c;
            self.residual[j] -= c;
            let flow = self.spread(i, j + 1, rest - c, f);
            self.residual[j] += c;
            self.adj[i][j] = 0;
            self.adj[j][i] = 0;
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// After vertices `0..=i` are complete: no complete component may be a
    /// proper subset of the vertices.
    fn closed_component_ok(&self, i: usize) -> bool {
        let n = self.n;
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(c: &mut [usize], mut x: usize) -> usize {
            while c[x] != x {
                c[x] = c[c[x]];
                x = c[x];
            }
            x
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.adj[a][b] > 0 {
                    let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                    if ra != rb {
                        comp[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
        let mut size = vec![0usize; n];
        let mut open = vec![false; n];
        for x in 0..n {
            let r = find(&mut comp, x);
            size[r] += 1;
            // vertex i is complete once its residual is zero
            if x > i {
                open[r] = true;
            }
        }
        (0..n).all(|r| size[r] == 0 || open[r] || size[r] == n)
    }
}

fn canonical_rep(
    stratum: &Stratum,
    set: &Multiset,
    cand: &Candidate<'_>,
) -> (ClassKey, GraphRepresentation) {
    let n = cand.blocks.len();
    let labels: Vec<(Vec<i64>, u32)> = (0..n)
        .map(|v| {
            let mut fam = Vec::new();
            for (idx, &c) in cand.blocks[v].iter().enumerate() {
                fam.extend(std::iter::repeat(set.values[idx]).take(c));
            }
            (fam, cand.weights[v])
        })
        .collect();
    let mut distinct = labels.clone();
    distinct.sort();
    distinct.dedup();
    let colors: Vec<u32> = labels
        .iter()
        .map(|l| distinct.binary_search(l).unwrap() as u32)
        .collect();
    let form = canonical_form(&colors, cand.adj);
    let order = &form.order;

    let permuted: Vec<Vec<u32>> = (0..n)
        .map(|i| (0..n).map(|j| cand.adj[order[i]][order[j]]).collect())
        .collect();
    let adjacency_code: Vec<u32> = form.code[n..].to_vec();
    let canon_labels: Vec<(Vec<i64>, u32)> = order.iter().map(|&v| labels[v].clone()).collect();
    let mut sorted_weights: Vec<u32> = cand.weights.to_vec();
    sorted_weights.sort_unstable();

    // hand out singularity indices value by value, lowest index first
    let mut pools: BTreeMap<i64, std::collections::VecDeque<usize>> = BTreeMap::new();
    for i in 0..stratum.singularity_count() {
        pools.entry(stratum.order(i)).or_default().push_back(i);
    }
    let families: Vec<Vec<usize>> = canon_labels
        .iter()
        .map(|(fam, _)| {
            let mut idx: Vec<usize> = fam
                .iter()
                .map(|v| pools.get_mut(v).and_then(|q| q.pop_front()).unwrap())
                .collect();
            idx.sort_unstable();
            idx
        })
        .collect();
    let weights: Vec<u32> = canon_labels.iter().map(|(_, w)| *w).collect();
    let rep = GraphRepresentation::new(
        stratum.clone(),
        Multigraph::from_adjacency(&permuted),
        families,
        weights,
    )
    .expect("enumerated families partition the singularities");
    let level = n - 1;
    (
        (level, sorted_weights, adjacency_code, canon_labels),
        rep,
    )
}
