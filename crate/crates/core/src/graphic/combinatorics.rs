//! Graph-side routines: chordality, minimal separators, isomorphism
//! classes and the octahedron obstruction.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::{mask_to_vertices, Graph};
use crate::error::{Error, Result};

/// Chordality via maximum cardinality search and a perfect elimination
/// check of the reversed visit order.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    if n <= 3 {
        return true;
    }
    // visit order of MCS
    let mut weight = vec![0usize; n];
    let mut visited = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| visited >> v & 1 == 0)
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
            .unwrap();
        visited |= 1 << v;
        order.push(v);
        let mut nb = g.adj_mask(v) & !visited;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            weight[u] += 1;
        }
    }
    // elimination order is the reverse; position of each vertex in it
    let mut pos = vec![0usize; n];
    for (k, &v) in order.iter().rev().enumerate() {
        pos[v] = k;
    }
    for v in 0..n {
        let later: Vec<usize> = mask_to_vertices(g.adj_mask(v))
            .into_iter()
            .map(|u| u - 1)
            .filter(|&u| pos[u] > pos[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        for &u in &later {
            if u != parent && g.adj_mask(parent) >> u & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// A vertex set whose removal disconnects the graph, with the components
/// of what remains.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Separator {
    pub vertices: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

/// Default vertex bound for [`minimal_separators`].
pub const SEPARATOR_BOUND: usize = 12;

/// Minimal separators: sets `T` such that `G \ T` has at least two full
/// components, i.e. components whose neighbourhood is all of `T`. These are
/// exactly the sets that are inclusion-minimal among the separators of some
/// pair of vertices. Brute force over vertex subsets.
pub fn minimal_separators(g: &Graph) -> Result<Vec<Separator>> {
    minimal_separators_bounded(g, SEPARATOR_BOUND)
}

pub fn minimal_separators_bounded(g: &Graph, bound: usize) -> Result<Vec<Separator>> {
    separators_where(g, bound, |t, comps| {
        comps.iter().filter(|&&c| neighbourhood(g, c) == t).count() >= 2
    })
}

/// Every vertex set whose removal disconnects the graph.
pub fn separators(g: &Graph) -> Result<Vec<Separator>> {
    separators_where(g, SEPARATOR_BOUND, |_, _| true)
}

fn separators_where(
    g: &Graph,
    bound: usize,
    keep: impl Fn(u64, &[u64]) -> bool,
) -> Result<Vec<Separator>> {
    let n = g.n();
    if n > bound {
        return Err(Error::BudgetExceeded(format!(
            "separator search limited to {bound} vertices, graph has {n}"
        )));
    }
    let all = g.all_mask();
    let mut out = Vec::new();
    for t in 0..1u64 << n {
        let comps = g.components_mask(all & !t);
        if comps.len() >= 2 && keep(t, &comps) {
            out.push(Separator {
                vertices: mask_to_vertices(t),
                components: comps.into_iter().map(mask_to_vertices).collect(),
            });
        }
    }
    out.sort();
    Ok(out)
}

impl Separator {
    /// Components whose neighbourhood is the whole separator.
    pub fn full_components(&self, g: &Graph) -> Vec<Vec<usize>> {
        let t = self.vertices.iter().fold(0u64, |m, &v| m | 1 << (v - 1));
        self.components
            .iter()
            .filter(|c| neighbourhood(g, c.iter().fold(0u64, |m, &v| m | 1 << (v - 1))) == t)
            .cloned()
            .collect()
    }
}

/// Separators not containing another separator.
pub fn inclusion_minimal_separators(g: &Graph) -> Result<Vec<Separator>> {
    let all = minimal_separators(g)?;
    let masks: Vec<u64> = all
        .iter()
        .map(|s| s.vertices.iter().fold(0u64, |m, &v| m | 1 << (v - 1)))
        .collect();
    Ok(all
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| {
            !masks
                .iter()
                .enumerate()
                .any(|(j, &m)| j != i && m & masks[i] == m && m != masks[i])
        })
        .map(|(_, s)| s)
        .collect())
}

fn neighbourhood(g: &Graph, set: u64) -> u64 {
    let mut nb = 0u64;
    let mut m = set;
    while m != 0 {
        nb |= g.adj_mask(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    nb & !set
}

/// Canonical adjacency code: the lexicographically smallest upper-triangle
/// bitstring over vertex orders that list vertices by decreasing degree.
pub fn canonical_form(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let masks = g.masks();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_deg: Vec<usize> = (0..n).collect();
    by_deg.sort_by_key(|&v| core::cmp::Reverse(masks[v].count_ones()));
    for v in by_deg {
        match classes.last_mut() {
            Some(c) if masks[c[0]].count_ones() == masks[v].count_ones() => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<bool>> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    search(
        masks,
        &classes,
        0,
        &mut vec![false; n],
        &mut perm,
        &mut best,
    );
    best.unwrap_or_default()
}

fn code(masks: &[u64], perm: &[usize]) -> Vec<bool> {
    let mut out = Vec::new();
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            out.push(masks[perm[i]] >> perm[j] & 1 == 1);
        }
    }
    out
}

fn search(
    masks: &[u64],
    classes: &[Vec<usize>],
    class: usize,
    used: &mut Vec<bool>,
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<bool>>,
) {
    if class == classes.len() {
        let c = code(masks, perm);
        if best.as_ref().is_none_or(|b| c < *b) {
            *best = Some(c);
        }
        return;
    }
    let members = &classes[class];
    let placed = members.iter().filter(|&&v| used[v]).count();
    if placed == members.len() {
        search(masks, classes, class + 1, used, perm, best);
        return;
    }
    for &v in members {
        if used[v] {
            continue;
        }
        used[v] = true;
        perm.push(v);
        search(masks, classes, class, used, perm, best);
        perm.pop();
        used[v] = false;
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.num_edges() != b.num_edges() {
        return false;
    }
    let mut da: Vec<usize> = (1..=a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (1..=b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a) == canonical_form(b)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, with `n <= 7`.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 7 {
        return Err(Error::BudgetExceeded(format!(
            "graph enumeration limited to 7 vertices, asked for {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0u64..1 << pairs.len() {
        if (bits.count_ones() as usize) + 1 < n {
            continue;
        }
        let mut adj = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        let g = Graph::from_masks(adj);
        if !g.is_connected() {
            continue;
        }
        if seen.insert(canonical_form(&g)) {
            out.push(g);
        }
    }
    out.sort_by_key(|g| (g.num_edges(), g.edges()));
    Ok(out)
}

/// Default vertex bound for [`octahedron_obstruction`].
pub const OBSTRUCTION_BOUND: usize = 9;

/// Whether the octahedron graph arises from an induced subgraph of `g`
/// by contracting edges.
pub fn octahedron_obstruction(g: &Graph) -> Result<bool> {
    octahedron_obstruction_bounded(g, OBSTRUCTION_BOUND)
}

/// Contracting an induced subgraph down to six vertices is the same as
/// choosing six disjoint connected vertex sets; the quotient graph is then
/// compared with the octahedron.
pub fn octahedron_obstruction_bounded(g: &Graph, bound: usize) -> Result<bool> {
    let n = g.n();
    if n > bound {
        return Err(Error::BudgetExceeded(format!(
            "obstruction search limited to {bound} vertices, graph has {n}"
        )));
    }
    if n < 6 || g.num_edges() < 12 {
        return Ok(false);
    }
    let target = Graph::octahedron();
    let mut labels = vec![0usize; n];
    Ok(assign(g, &target, &mut labels, 0, 0))
}

/// Label 0 deletes a vertex; labels `1..=6` name blocks in order of first use.
fn assign(g: &Graph, target: &Graph, labels: &mut [usize], v: usize, used: usize) -> bool {
    let n = labels.len();
    if used + (n - v) < 6 {
        return false;
    }
    if v == n {
        return used == 6 && quotient_matches(g, target, labels);
    }
    for l in 0..=(used + 1).min(6) {
        labels[v] = l;
        let next = if l == used + 1 { used + 1 } else { used };
        if assign(g, target, labels, v + 1, next) {
            return true;
        }
    }
    labels[v] = 0;
    false
}

fn quotient_matches(g: &Graph, target: &Graph, labels: &[usize]) -> bool {
    let mut blocks = [0u64; 6];
    for (v, &l) in labels.iter().enumerate() {
        if l > 0 {
            blocks[l - 1] |= 1 << v;
        }
    }
    if blocks.iter().any(|&b| g.components_mask(b).len() != 1) {
        return false;
    }
    let mut adj = vec![0u64; 6];
    for a in 0..6 {
        for b in a + 1..6 {
            let touch = mask_to_vertices(blocks[a])
                .iter()
                .any(|&v| g.adj_mask(v - 1) & blocks[b] != 0);
            if touch {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
    }
    is_isomorphic(&Graph::from_masks(adj), target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chordality() {
        assert!(is_chordal(&Graph::complete(4)));
        assert!(!is_chordal(&Graph::octahedron()));
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(!is_chordal(&Graph::cycle(5)));
        assert!(is_chordal(&Graph::path(6)));
        // a 4-cycle with a chord
        assert!(is_chordal(
            &Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).unwrap()
        ));
    }

    #[test]
    fn separator_sets() {
        let s = minimal_separators(&Graph::octahedron()).unwrap();
        let ts: Vec<Vec<usize>> = s.iter().map(|s| s.vertices.clone()).collect();
        assert_eq!(
            ts,
            vec![vec![1, 2, 4, 5], vec![1, 3, 4, 6], vec![2, 3, 5, 6]]
        );
        assert_eq!(s[2].components, vec![vec![1], vec![4]]);
        assert!(minimal_separators(&Graph::complete(4)).unwrap().is_empty());
        let p = minimal_separators(&Graph::path(3)).unwrap();
        assert_eq!(
            p,
            vec![Separator {
                vertices: vec![2],
                components: vec![vec![1], vec![3]]
            }]
        );
        assert!(minimal_separators(&Graph::path(13)).is_err());
        // a 4-cycle 1-3-2-4 with a pendant vertex 5 at 1: {1,2} separates 3
        // from 4 minimally although it contains the separator {1}
        let g = Graph::new(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4)]).unwrap();
        let ts: Vec<Vec<usize>> = minimal_separators(&g)
            .unwrap()
            .into_iter()
            .map(|s| s.vertices)
            .collect();
        assert_eq!(ts, vec![vec![1], vec![1, 2], vec![3, 4]]);
        let ts: Vec<Vec<usize>> = inclusion_minimal_separators(&g)
            .unwrap()
            .into_iter()
            .map(|s| s.vertices)
            .collect();
        assert_eq!(ts, vec![vec![1], vec![3, 4]]);
        let all = separators(&g).unwrap();
        assert_eq!(all.len(), 10);
        let s12 = all.iter().find(|s| s.vertices == vec![1, 2]).unwrap();
        assert_eq!(s12.full_components(&g), vec![vec![3], vec![4]]);
    }

    #[test]
    fn isomorphism_classes() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        let a = Graph::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let b = Graph::new(4, &[(2, 4), (4, 1), (1, 3)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        assert!(!is_isomorphic(
            &a,
            &Graph::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap()
        ));
    }

    #[test]
    fn obstruction() {
        assert!(octahedron_obstruction(&Graph::octahedron()).unwrap());
        assert!(!octahedron_obstruction(&Graph::complete(4)).unwrap());
        assert!(!octahedron_obstruction(&Graph::complete(7)).unwrap());
        // octahedron plus a pendant vertex, and with an edge subdivided
        let mut e = Graph::octahedron().edges();
        e.push((6, 7));
        assert!(octahedron_obstruction(&Graph::new(7, &e).unwrap()).unwrap());
        let mut e: Vec<_> = Graph::octahedron()
            .edges()
            .into_iter()
            .filter(|&x| x != (1, 2))
            .collect();
        e.extend([(1, 7), (7, 2)]);
        assert!(octahedron_obstruction(&Graph::new(7, &e).unwrap()).unwrap());
        assert!(octahedron_obstruction(&Graph::complete(10)).is_err());
    }
}
