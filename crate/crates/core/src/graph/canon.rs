//! Canonical labeling of small vertex-colored multigraphs.
//!
//! Colour refinement followed by individualization of the first
//! non-singleton cell; the lexicographically smallest code over all leaves
//! of the search tree is the certificate. Twins (vertices of one cell with
//! identical rows) are interchangeable, so only one per twin class is
//! individualized.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct CanonicalForm {
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Colours in canonical order followed by the upper triangle (diagonal
    /// included) of the permuted multiplicity matrix.
    pub code: Vec<u32>,
}

pub(crate) fn canonical_form(colors: &[u32], adj: &[Vec<u32>]) -> CanonicalForm {
    let n = colors.len();
    debug_assert_eq!(adj.len(), n);
    let cells = refine(adj, initial_cells(colors));
    let mut best: Option<CanonicalForm> = None;
    search(colors, adj, cells, &mut best);
    best.unwrap_or(CanonicalForm {
        order: Vec::new(),
        code: Vec::new(),
    })
}

/// Dense cell ids from colour ranks.
fn initial_cells(colors: &[u32]) -> Vec<usize> {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    colors
        .iter()
        .map(|c| distinct.binary_search(c).unwrap())
        .collect()
}

fn refine(adj: &[Vec<u32>], mut cell: Vec<usize>) -> Vec<usize> {
    let n = cell.len();
    loop {
        let before = distinct_count(&cell);
        let sigs: Vec<(usize, u32, Vec<(usize, u32)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u32)> = (0..n)
                    .filter(|&w| w != v && adj[v][w] > 0)
                    .map(|w| (cell[w], adj[v][w]))
                    .collect();
                nb.sort_unstable();
                (cell[v], adj[v][v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        cell = sigs
            .iter()
            .map(|s| sorted.binary_search(s).unwrap())
            .collect();
        if distinct_count(&cell) == before {
            return cell;
        }
    }
}

fn distinct_count(cell: &[usize]) -> usize {
    let mut c = cell.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(colors: &[u32], adj: &[Vec<u32>], cell: Vec<usize>, best: &mut Option<CanonicalForm>) {
    let n = cell.len();
    // first cell (by id) with more than one vertex
    let mut sizes = vec![0usize; n];
    for &c in &cell {
        sizes[c] += 1;
    }
    let target = (0..n).find(|&c| sizes[c] > 1);
    let Some(target) = target else {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| cell[v]);
        let code = encode(colors, adj, &order);
        if best.as_ref().is_none_or(|b| code < b.code) {
            *best = Some(CanonicalForm { order, code });
        }
        return;
    };

    let members: Vec<usize> = (0..n).filter(|&v| cell[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &u in &members {
        if tried.iter().any(|&t| twins(adj, t, u)) {
            continue;
        }
        tried.push(u);
        // u goes first inside its cell
        let split: Vec<(usize, bool)> = (0..n).map(|v| (cell[v], v != u)).collect();
        let mut keys = split.clone();
        keys.sort_unstable();
        keys.dedup();
        let next: Vec<usize> = split
            .iter()
            .map(|k| keys.binary_search(k).unwrap())
            .collect();
        search(colors, adj, refine(adj, next), best);
    }
}

fn twins(adj: &[Vec<u32>], a: usize, b: usize) -> bool {
    adj[a][a] == adj[b][b]
        && (0..adj.len())
            .filter(|&w| w != a && w != b)
            .all(|w| adj[a][w] == adj[b][w])
}

fn encode(colors: &[u32], adj: &[Vec<u32>], order: &[usize]) -> Vec<u32> {
    let n = order.len();
    let mut code: Vec<u32> = order.iter().map(|&v| colors[v]).collect();
    for i in 0..n {
        for j in i..n {
            code.push(adj[order[i]][order[j]]);
        }
    }
    code
}
