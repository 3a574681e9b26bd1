use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::graph::GraphRepresentation;
use crate::residue::linalg;

/// One unknown of the residue system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VariableKind {
    /// The residue at end `end` of edge `edge`; end 0 sits at the first
    /// endpoint of the edge, end 1 at the second.
    EdgeEnd { edge: usize, end: u8 },
    /// The residue at pole `pole`, indexed into the stratum's pole list.
    Pole { pole: usize },
}

impl fmt::Display for VariableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VariableKind::EdgeEnd { edge, end } => write!(f, "t{edge}.{end}"),
            VariableKind::Pole { pole } => write!(f, "p{pole}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VariableClass {
    GenericallyNonzero,
    IdenticallyZero,
}

/// The linear system on the residues of a graph representation.
///
/// Columns: the `2t` edge ends (edge by edge, end 0 then end 1), then the
/// `p` poles. Rows: one per edge (the two ends sum to zero), then one per
/// vertex (the residues at that vertex sum to zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSystem {
    rep: GraphRepresentation,
    variables: Vec<VariableKind>,
    rows: Vec<Vec<i64>>,
    /// Variables attached to each vertex.
    incidence: Vec<Vec<usize>>,
}

impl ResidueSystem {
    pub fn rep(&self) -> &GraphRepresentation {
        &self.rep
    }

    pub fn variables(&self) -> &[VariableKind] {
        &self.variables
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.variables.len()
    }

    /// Indices of the variables attached to `vertex`. A loop contributes
    /// both of its ends.
    pub fn vertex_variables(&self, vertex: usize) -> &[usize] {
        &self.incidence[vertex]
    }

    pub(crate) fn rational_rows(&self) -> Vec<Vec<BigRational>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&c| BigRational::from_integer(c.into())).collect())
            .collect()
    }
}

/// Builds the residue system. The representation is taken as is; callers
/// validate it first.
pub fn build_system(rep: &GraphRepresentation) -> ResidueSystem {
    let stratum = rep.stratum();
    let edges = rep.graph().edges();
    let t = edges.len();
    let p = stratum.p();
    let columns = 2 * t + p;

    let mut variables = Vec::with_capacity(columns);
    for e in 0..t {
        variables.push(VariableKind::EdgeEnd { edge: e, end: 0 });
        variables.push(VariableKind::EdgeEnd { edge: e, end: 1 });
    }
    for j in 0..p {
        variables.push(VariableKind::Pole { pole: j });
    }

    let vertices = rep.level() + 1;
    let mut incidence = vec![Vec::new(); vertices];
    for (e, &(u, v)) in edges.iter().enumerate() {
        incidence[u].push(2 * e);
        incidence[v].push(2 * e + 1);
    }
    for j in 0..p {
        incidence[rep.vertex_of(stratum.n() + j)].push(2 * t + j);
    }

    let mut rows = Vec::with_capacity(t + vertices);
    for e in 0..t {
        let mut row = vec![0; columns];
        row[2 * e] = 1;
        row[2 * e + 1] = 1;
        rows.push(row);
    }
    for vars in &incidence {
        let mut row = vec![0; columns];
        for &x in vars {
            row[x] += 1;
        }
        rows.push(row);
    }
    ResidueSystem {
        rep: rep.clone(),
        variables,
        rows,
        incidence,
    }
}

/// An exact basis of the rational null space of the system.
pub fn solution_space(system: &ResidueSystem) -> Vec<Vec<BigRational>> {
    linalg::null_space(&system.rational_rows(), system.column_count())
}

/// A variable is identically zero iff every basis vector vanishes at it.
pub fn classify_variables(rep: &GraphRepresentation) -> Vec<VariableClass> {
    let system = build_system(rep);
    classify_with_basis(&system, &solution_space(&system))
}

pub(crate) fn classify_with_basis(
    system: &ResidueSystem,
    basis: &[Vec<BigRational>],
) -> Vec<VariableClass> {
    (0..system.column_count())
        .map(|x| {
            if basis.iter().all(|b| b[x].is_zero()) {
                VariableClass::IdenticallyZero
            } else {
                VariableClass::GenericallyNonzero
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;
    use crate::stratum::Stratum;

    fn cyclic_rep() -> GraphRepresentation {
        let s = Stratum::new(1, vec![1, 1, 1, 1], vec![1, 1, 1, 1]).unwrap();
        // vertex i holds zero i and pole i
        let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        GraphRepresentation::new(
            s,
            g,
            vec![vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]],
            vec![0; 4],
        )
        .unwrap()
    }

    #[test]
    fn cyclic_shape() {
        let sys = build_system(&cyclic_rep());
        assert_eq!((sys.row_count(), sys.column_count()), (8, 12));
        assert_eq!(solution_space(&sys).len(), 4);
        assert!(classify_variables(&cyclic_rep())
            .iter()
            .all(|&c| c == VariableClass::GenericallyNonzero));
    }

    #[test]
    fn trivial_rep_two_poles() {
        let s = Stratum::new(1, vec![2], vec![2, 2]).unwrap();
        let sys = build_system(&GraphRepresentation::trivial(&s).unwrap());
        assert_eq!((sys.row_count(), sys.column_count()), (1, 2));
        let ns = solution_space(&sys);
        assert_eq!(ns.len(), 1);
        assert_eq!(&ns[0][0] + &ns[0][1], BigRational::zero());
    }

    #[test]
    fn single_pole_is_forced_to_zero() {
        let s = Stratum::new(1, vec![1], vec![3]).unwrap();
        let rep = GraphRepresentation::trivial(&s).unwrap();
        assert_eq!(classify_variables(&rep), vec![VariableClass::IdenticallyZero]);
    }

    #[test]
    fn every_variable_in_one_edge_row_and_one_vertex_row() {
        let sys = build_system(&cyclic_rep());
        let t = sys.rep().graph().edge_count();
        for x in 0..2 * t {
            let edge_rows = sys.rows()[..t].iter().filter(|r| r[x] != 0).count();
            let vertex_rows = sys.rows()[t..].iter().filter(|r| r[x] != 0).count();
            assert_eq!((edge_rows, vertex_rows), (1, 1));
        }
    }
}
