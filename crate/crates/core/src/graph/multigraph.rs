use crate::error::{Error, Result};

/// A finite multigraph with loops, stored as an edge list.
///
/// A loop at `i` contributes 2 to the valency of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Edges are stored with `u <= v`; the input order is kept.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::MalformedInput("a multigraph needs a vertex".into()));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::MalformedInput(format!(
                    "edge {e} = ({u}, {v}) references a vertex outside 0..{vertex_count}"
                )));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(Multigraph {
            vertex_count,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn valencies(&self) -> Vec<usize> {
        let mut val = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            val[u] += 1;
            val[v] += 1;
        }
        val
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (u, v) = self.edges[edge];
        u == v
    }

    /// Component label per vertex, with `skip` removed from the edge set.
    pub fn components_without(&self, skip: Option<usize>) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if Some(e) == skip {
                continue;
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        (0..self.vertex_count)
            .map(|x| find(&mut parent, x))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let comp = self.components_without(None);
        comp.iter().all(|&c| c == comp[0])
    }

    /// Indices of bridge edges, in edge order. Loops and parallel edges are
    /// never bridges.
    pub fn bridges(&self) -> Vec<usize> {
        let n = self.vertex_count;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if u != v {
                adj[u].push((v, e));
                adj[v].push((u, e));
            }
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut clock = 0;
        let mut out = Vec::new();

        // iterative low-link; the parent edge id (not the parent vertex) is
        // skipped so parallel edges count as back edges
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (node, parent_edge, ref mut next)) = stack.last_mut() {
                if *next < adj[node].len() {
                    let (to, e) = adj[node][*next];
                    *next += 1;
                    if e == parent_edge {
                        continue;
                    }
                    if disc[to] == usize::MAX {
                        disc[to] = clock;
                        low[to] = clock;
                        clock += 1;
                        stack.push((to, e, 0));
                    } else {
                        low[node] = low[node].min(disc[to]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(up, _, _)) = stack.last() {
                        low[up] = low[up].min(low[node]);
                        if low[node] > disc[up] {
                            out.push(parent_edge);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Symmetric multiplicity matrix; the diagonal counts loops.
    #[cfg(test)]
    pub(crate) fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut m = vec![vec![0u32; self.vertex_count]; self.vertex_count];
        for &(u, v) in &self.edges {
            m[u][v] += 1;
            if u != v {
                m[v][u] += 1;
            }
        }
        m
    }

    pub(crate) fn from_adjacency(m: &[Vec<u32>]) -> Self {
        let mut edges = Vec::new();
        for i in 0..m.len() {
            for j in i..m.len() {
                for _ in 0..m[i][j] {
                    edges.push((i, j));
                }
            }
        }
        Multigraph {
            vertex_count: m.len(),
            edges,
        }
    }
}
