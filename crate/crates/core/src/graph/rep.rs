use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::stratum::Stratum;

/// A graph representation `(G, f_0..f_s, w_0..w_s)` of a stratum.
///
/// Vertex `i` carries the family `families[i]` (singularity indices into the
/// stratum, see [`Stratum::order`]) and the weight `weights[i]`, the genus of
/// the component it stands for. Edges stand for finite-volume cylinders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphRepresentation {
    stratum: Stratum,
    graph: Multigraph,
    families: Vec<Vec<usize>>,
    weights: Vec<u32>,
}

/// A violated condition, with the offending vertex or edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    Disconnected,
    /// Condition (i): the family holds no conical singularity.
    NoConicalSingularity { vertex: usize },
    /// Condition (ii): `sigma != k v + 2k w - 2k`.
    OrderSumMismatch {
        vertex: usize,
        sigma: i64,
        expected: i64,
    },
    /// Condition (iii), `k = 1` only: one side of the bridge holds no pole.
    BridgeWithoutPole { edge: usize, side: Vec<usize> },
    /// `t != s + g - sum(w)`.
    EdgeCountMismatch { edges: usize, expected: i64 },
    WeightsExceedGenus { total: u32, genus: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Disconnected => write!(f, "graph is not connected"),
            Violation::NoConicalSingularity { vertex } => {
                write!(f, "vertex {vertex}: family has no conical singularity")
            }
            Violation::OrderSumMismatch {
                vertex,
                sigma,
                expected,
            } => write!(
                f,
                "vertex {vertex}: order sum {sigma} differs from k*v + 2k*w - 2k = {expected}"
            ),
            Violation::BridgeWithoutPole { edge, side } => {
                write!(f, "edge {edge}: bridge side {side:?} holds no pole")
            }
            Violation::EdgeCountMismatch { edges, expected } => {
                write!(f, "{edges} edges, expected s + g - sum(w) = {expected}")
            }
            Violation::WeightsExceedGenus { total, genus } => {
                write!(f, "weights sum to {total}, above the genus {genus}")
            }
        }
    }
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::Disconnected => "disconnected",
            Violation::NoConicalSingularity { .. } => "no_conical_singularity",
            Violation::OrderSumMismatch { .. } => "order_sum_mismatch",
            Violation::BridgeWithoutPole { .. } => "bridge_without_pole",
            Violation::EdgeCountMismatch { .. } => "edge_count_mismatch",
            Violation::WeightsExceedGenus { .. } => "weights_exceed_genus",
        }
    }
}

impl GraphRepresentation {
    /// Checks structure only: `k` in {1, 2}, one family and one weight per
    /// vertex, and families partitioning the singularity indices.
    pub fn new(
        stratum: Stratum,
        graph: Multigraph,
        families: Vec<Vec<usize>>,
        weights: Vec<u32>,
    ) -> Result<Self> {
        stratum.require_k12()?;
        let vertices = graph.vertex_count();
        if families.len() != vertices || weights.len() != vertices {
            return Err(Error::MalformedInput(format!(
                "{vertices} vertices but {} families and {} weights",
                families.len(),
                weights.len()
            )));
        }
        let total = stratum.singularity_count();
        let mut seen = vec![false; total];
        for (v, fam) in families.iter().enumerate() {
            for &i in fam {
                if i >= total {
                    return Err(Error::MalformedInput(format!(
                        "vertex {v}: singularity index {i} out of range 0..{total}"
                    )));
                }
                if seen[i] {
                    return Err(Error::MalformedInput(format!(
                        "singularity index {i} appears twice"
                    )));
                }
                seen[i] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::MalformedInput(format!(
                "singularity index {missing} is not assigned to a vertex"
            )));
        }
        Ok(GraphRepresentation {
            stratum,
            graph,
            families,
            weights,
        })
    }

    /// The level-0 representation: one vertex holding every singularity,
    /// weight `g`, no edges.
    pub fn trivial(stratum: &Stratum) -> Result<Self> {
        let graph = Multigraph::new(1, Vec::new())?;
        let all = (0..stratum.singularity_count()).collect();
        Self::new(stratum.clone(), graph, vec![all], vec![stratum.genus()])
    }

    pub fn stratum(&self) -> &Stratum {
        &self.stratum
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn families(&self) -> &[Vec<usize>] {
        &self.families
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// `s`, one less than the vertex count.
    pub fn level(&self) -> usize {
        self.graph.vertex_count() - 1
    }

    pub fn is_pure(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }

    /// Sum of the orders in family `vertex`.
    pub fn sigma(&self, vertex: usize) -> i64 {
        self.families[vertex]
            .iter()
            .map(|&i| self.stratum.order(i))
            .sum()
    }

    /// Vertex owning singularity `index`.
    pub fn vertex_of(&self, index: usize) -> usize {
        self.families
            .iter()
            .position(|f| f.contains(&index))
            .expect("families partition the singularities")
    }
}

/// Every violated condition, in a fixed order: connectivity, then per vertex
/// conditions (i) and (ii), then bridges, then the edge and weight counts.
pub fn validate(rep: &GraphRepresentation) -> Vec<Violation> {
    let mut out = Vec::new();
    let st = &rep.stratum;
    let g = &rep.graph;
    let k = i64::from(st.k());
    if !g.is_connected() {
        out.push(Violation::Disconnected);
    }
    let val = g.valencies();
    for v in 0..g.vertex_count() {
        if !rep.families[v].iter().any(|&i| st.is_conical(i)) {
            out.push(Violation::NoConicalSingularity { vertex: v });
        }
        let sigma = rep.sigma(v);
        let expected = k * val[v] as i64 + 2 * k * i64::from(rep.weights[v]) - 2 * k;
        if sigma != expected {
            out.push(Violation::OrderSumMismatch {
                vertex: v,
                sigma,
                expected,
            });
        }
    }
    if st.k() == 1 {
        out.extend(bridge_violations(rep));
    }
    let total_w: u32 = rep.weights.iter().sum();
    let expected = rep.level() as i64 + i64::from(st.genus()) - i64::from(total_w);
    if g.edge_count() as i64 != expected {
        out.push(Violation::EdgeCountMismatch {
            edges: g.edge_count(),
            expected,
        });
    }
    if total_w > st.genus() {
        out.push(Violation::WeightsExceedGenus {
            total: total_w,
            genus: st.genus(),
        });
    }
    out
}

fn bridge_violations(rep: &GraphRepresentation) -> Vec<Violation> {
    let st = &rep.stratum;
    let g = &rep.graph;
    let has_pole: Vec<bool> = rep
        .families
        .iter()
        .map(|f| f.iter().any(|&i| !st.is_conical(i)))
        .collect();
    let mut out = Vec::new();
    for e in g.bridges() {
        let comp = g.components_without(Some(e));
        let (u, v) = g.edges()[e];
        for end in [u, v] {
            let side: Vec<usize> = (0..g.vertex_count())
                .filter(|&x| comp[x] == comp[end])
                .collect();
            if !side.iter().any(|&x| has_pole[x]) {
                out.push(Violation::BridgeWithoutPole { edge: e, side });
            }
        }
    }
    out
}

/// Replaces each weight `w_i` by `w_i` loops at vertex `i`.
pub fn purify(rep: &GraphRepresentation) -> GraphRepresentation {
    let mut edges = rep.graph.edges().to_vec();
    for (v, &w) in rep.weights.iter().enumerate() {
        edges.extend(std::iter::repeat((v, v)).take(w as usize));
    }
    GraphRepresentation {
        stratum: rep.stratum.clone(),
        graph: Multigraph::new(rep.graph.vertex_count(), edges)
            .expect("loops stay within the vertex range"),
        families: rep.families.clone(),
        weights: vec![0; rep.weights.len()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(k: u32, zeros: &[i64], poles: &[i64]) -> Stratum {
        Stratum::new(k, zeros.to_vec(), poles.to_vec()).unwrap()
    }

    fn rep(
        s: &Stratum,
        n: usize,
        edges: &[(usize, usize)],
        fam: &[&[usize]],
        w: &[u32],
    ) -> GraphRepresentation {
        GraphRepresentation::new(
            s.clone(),
            Multigraph::new(n, edges.to_vec()).unwrap(),
            fam.iter().map(|f| f.to_vec()).collect(),
            w.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn star_tree_of_quadratic_stratum_is_valid() {
        // H^2(2,1^3,-1^3,-2^3): zeros 0..7 = [2,1,1,1,-1,-1,-1], poles 7..10
        let s = st(2, &[2, 1, 1, 1, -1, -1, -1], &[2, 2, 2]);
        let r = rep(
            &s,
            4,
            &[(0, 1), (0, 2), (0, 3)],
            &[&[0], &[1, 4, 7], &[2, 5, 8], &[3, 6, 9]],
            &[0, 0, 0, 0],
        );
        assert_eq!(validate(&r), vec![]);
    }

    #[test]
    fn trivial_rep_is_valid() {
        for s in [
            st(1, &[3], &[1, 1, 1]),
            st(1, &[4, 2], &[3, 3]),
            st(2, &[2, 2], &[]),
            st(1, &[1, 1], &[]),
        ] {
            let r = GraphRepresentation::trivial(&s).unwrap();
            assert_eq!(validate(&r), vec![], "{s}");
            assert_eq!(validate(&purify(&r)), vec![], "{s}");
        }
    }

    #[test]
    fn level_one_rep_with_bridge_and_loop() {
        // H^1(4,2,-3^2): vertex {2,-3} of valency 1, vertex {4,-3} with the
        // bridge and a loop
        let s = st(1, &[4, 2], &[3, 3]);
        let r = rep(&s, 2, &[(0, 1), (1, 1)], &[&[1, 2], &[0, 3]], &[0, 0]);
        assert_eq!(validate(&r), vec![]);
    }

    #[test]
    fn bridge_needs_poles_on_both_sides() {
        // every pole sits on vertex 1
        let s = st(1, &[2, 2], &[2, 2, 2]);
        let r = rep(&s, 2, &[(0, 1)], &[&[0], &[1, 2, 3, 4]], &[0, 0]);
        let v = validate(&r);
        assert!(v.contains(&Violation::BridgeWithoutPole {
            edge: 0,
            side: vec![0]
        }));
        assert!(v.iter().any(|x| matches!(x, Violation::OrderSumMismatch { vertex: 0, .. })));
    }

    #[test]
    fn reports_each_failure() {
        let s = st(1, &[3], &[1, 1, 1]);
        let r = rep(&s, 2, &[], &[&[0, 1], &[2, 3]], &[0, 0]);
        let v = validate(&r);
        assert_eq!(v[0], Violation::Disconnected);
        assert!(v.contains(&Violation::NoConicalSingularity { vertex: 1 }));
        assert!(v.contains(&Violation::EdgeCountMismatch {
            edges: 0,
            expected: 2
        }));
        let r = rep(&s, 1, &[], &[&[0, 1, 2, 3]], &[2]);
        assert!(validate(&r).contains(&Violation::WeightsExceedGenus { total: 2, genus: 1 }));
    }

    #[test]
    fn malformed_partitions_are_errors() {
        let s = st(1, &[3], &[1, 1, 1]);
        let g = Multigraph::new(1, vec![]).unwrap();
        assert!(GraphRepresentation::new(s.clone(), g.clone(), vec![vec![0, 1, 2]], vec![1]).is_err());
        assert!(
            GraphRepresentation::new(s.clone(), g.clone(), vec![vec![0, 1, 2, 3, 3]], vec![1])
                .is_err()
        );
        assert!(GraphRepresentation::new(s.clone(), g.clone(), vec![vec![0, 1, 2, 9]], vec![1]).is_err());
        assert!(GraphRepresentation::new(s, g, vec![vec![0, 1, 2, 3]], vec![]).is_err());
        let s3 = st(3, &[6], &[]);
        assert_eq!(
            GraphRepresentation::trivial(&s3),
            Err(Error::UnsupportedK(3))
        );
    }

    #[test]
    fn purify_adds_loops() {
        let s = st(1, &[2], &[2]);
        let p = purify(&GraphRepresentation::trivial(&s).unwrap());
        assert_eq!(p.graph().edges(), &[(0, 0)]);
        assert_eq!(p.weights(), &[0]);
        assert_eq!(p.graph().valencies(), vec![2]);
        assert_eq!(validate(&p), vec![]);
        assert_eq!(purify(&p), p);
    }
}
