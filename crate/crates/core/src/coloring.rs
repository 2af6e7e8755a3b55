//! Gallai and transitive colorings: validity, maximal constructions, and the
//! structure of maximal Gallai colorings of complete graphs.

use crate::error::{Error, Result};
use crate::matroid::{complete_edge_index, DirectedGraph, Matroid, OrientedMatroid, VectorConfig};
use crate::partition::{Coloring, SetPartition};
use crate::rational::{self, Q};
use crate::set::ElementSet;

/// Largest configuration accepted by [`is_transitive_vector_oracle`].
pub const VECTOR_ORACLE_LIMIT: usize = 14;

/// No circuit is rainbow. Always false in the presence of a loop.
pub fn is_gallai(m: &Matroid, c: &Coloring) -> bool {
    m.circuits()
        .iter()
        .all(|x| (c.color_mask(*x).count_ones() as usize) < x.len())
}

/// Every signed circuit has a color on both sides.
pub fn is_transitive(om: &OrientedMatroid, c: &Coloring) -> Result<bool> {
    om.require_acyclic()?;
    Ok(om
        .signed_circuits()
        .iter()
        .all(|x| c.color_mask(x.pos) & c.color_mask(x.neg) != 0))
}

/// Checks the positive-span definition directly: whenever disjoint `S`, `T`
/// have intersecting open positive spans, they must share a color.
///
/// A point in both spans is a kernel vector of `[S | -T]` with all entries
/// positive. Such a vector exists iff every column lies in the support of a
/// nonnegative extreme ray, and the extreme rays are the one-dimensional
/// kernels with full support, found here by scanning every column subset.
pub fn is_transitive_vector_oracle(v: &VectorConfig, c: &Coloring) -> Result<bool> {
    let m = v.len();
    if m > VECTOR_ORACLE_LIMIT {
        return Err(Error::budget("vector oracle ground size", VECTOR_ORACLE_LIMIT as u64, m as u64));
    }
    if c.len() != m {
        return Err(Error::invalid("coloring length differs from ground size"));
    }
    let rays = minimal_dependencies(v);
    if let Some((p, n)) = rays.iter().find(|(p, n)| p.is_empty() || n.is_empty()) {
        return Err(Error::NotAcyclic(p.union(*n).to_vec()));
    }
    // enumerate ordered pairs (S, T) via a ternary code; each unordered pair is
    // visited twice, which is harmless
    let mut code = vec![0u8; m];
    loop {
        let mut s = ElementSet::EMPTY;
        let mut t = ElementSet::EMPTY;
        for (e, &d) in code.iter().enumerate() {
            match d {
                1 => s.insert(e),
                2 => t.insert(e),
                _ => {}
            }
        }
        if !s.is_empty() && !t.is_empty() && c.color_mask(s) & c.color_mask(t) == 0 {
            let st = s.union(t);
            let covered = rays
                .iter()
                .filter(|(p, n)| {
                    p.union(*n).is_subset(st)
                        && ((p.is_subset(s) && n.is_subset(t)) || (p.is_subset(t) && n.is_subset(s)))
                })
                .fold(ElementSet::EMPTY, |a, (p, n)| a.union(p.union(*n)));
            if covered == st {
                return Ok(false);
            }
        }
        // next ternary code
        let mut i = 0;
        loop {
            if i == m {
                return Ok(true);
            }
            code[i] += 1;
            if code[i] < 3 {
                break;
            }
            code[i] = 0;
            i += 1;
        }
    }
}

/// Column subsets with a one-dimensional, fully supported kernel, as sign pairs.
fn minimal_dependencies(v: &VectorConfig) -> Vec<(ElementSet, ElementSet)> {
    let m = v.len();
    let mut out = Vec::new();
    for bits in 1u64..(1u64 << m) {
        let s = ElementSet::from_bits(bits);
        let elems = s.to_vec();
        let cols: Vec<&[Q]> = elems.iter().map(|&e| v.columns[e].as_slice()).collect();
        if let Some(dep) = rational::unique_dependency(&cols) {
            if dep.iter().all(|x| rational::sign(x) != 0) {
                let mut p = ElementSet::EMPTY;
                let mut n = ElementSet::EMPTY;
                for (&e, x) in elems.iter().zip(&dep) {
                    if rational::sign(x) > 0 {
                        p.insert(e);
                    } else {
                        n.insert(e);
                    }
                }
                out.push((p, n));
            }
        }
    }
    out
}

/// Basis elements get distinct colors in increasing element order; every
/// other element takes the smallest color on its fundamental circuit.
pub fn max_gallai_coloring(m: &Matroid, basis: Option<ElementSet>) -> Result<Coloring> {
    m.require_loopless()?;
    let b = match basis {
        Some(b) if !m.is_basis(b) => return Err(Error::invalid(format!("{b:?} is not a basis"))),
        Some(b) => b,
        None => m.greedy_basis(m.ground().full()),
    };
    let mut values = vec![0usize; m.size()];
    for (i, e) in b.iter().enumerate() {
        values[e] = i;
    }
    for e in m.ground().full().difference(b).iter() {
        let x = m.fundamental_circuit(b, e)?;
        values[e] = x.without(e).iter().map(|f| values[f]).min().expect("loopless");
    }
    Coloring::new(values, m.rank().max(1))
}

/// Peels positive cocircuits `Y_r, ..., Y_1` (lexicographically smallest
/// support each time) and gives `Y_i` color `i`.
pub fn max_transitive_coloring(om: &OrientedMatroid) -> Result<Coloring> {
    om.require_acyclic()?;
    let m = om.underlying();
    let mut values = vec![0usize; om.size()];
    let mut rest = om.ground().full();
    while !rest.is_empty() {
        let r = m.rank_of(rest);
        let ys = om.positive_cocircuits_within(rest)?;
        let y = *ys
            .first()
            .ok_or_else(|| Error::invalid("no positive cocircuit in a nonempty acyclic restriction"))?;
        for e in y.iter() {
            values[e] = r - 1;
        }
        rest = rest.difference(y);
    }
    Coloring::new(values, om.rank().max(1))
}

/// Colors used by exactly one element.
pub fn singleton_colors(c: &Coloring) -> Vec<usize> {
    let mut count = vec![0usize; c.palette()];
    for &v in c.values() {
        count[v] += 1;
    }
    (0..c.palette()).filter(|&v| count[v] == 1).collect()
}

/// Number of vertices `n` with `n(n-1)/2 = edges`.
pub(crate) fn complete_order(edges: usize) -> Result<usize> {
    let mut n = 1;
    while n * (n - 1) / 2 < edges {
        n += 1;
    }
    if n * (n - 1) / 2 == edges {
        Ok(n)
    } else {
        Err(Error::invalid(format!("{edges} is not the edge count of a complete graph")))
    }
}

pub fn complete_graph(n: usize) -> Matroid {
    OrientedMatroid::from_digraph(&DirectedGraph::tournament(n))
        .underlying()
        .clone()
}

/// A coloring of `K_n` (edges in tournament order) that is Gallai with `n-1` colors.
pub fn is_maximal_gallai_kn(c: &Coloring) -> Result<usize> {
    let n = complete_order(c.len())?;
    if n < 2 || c.colors_used() != n - 1 || !is_gallai(&complete_graph(n), c) {
        return Err(Error::NotMaximal("Gallai"));
    }
    Ok(n)
}

/// Directed Hamiltonian paths of `K_n` whose edges get pairwise distinct colors.
pub fn rainbow_hamiltonian_paths(c: &Coloring) -> Result<Vec<Vec<usize>>> {
    let n = is_maximal_gallai_kn(c)?;
    let color = |u: usize, v: usize| c.get(complete_edge_index(n, u, v));
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(n);
    fn go(
        n: usize,
        path: &mut Vec<usize>,
        used: u64,
        colors: u64,
        color: &dyn Fn(usize, usize) -> usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if path.len() == n {
            out.push(path.clone());
            return;
        }
        let last = *path.last().unwrap();
        for v in 1..=n {
            if used >> v & 1 == 1 {
                continue;
            }
            let col = color(last, v);
            if colors >> col & 1 == 1 {
                continue;
            }
            path.push(v);
            go(n, path, used | 1 << v, colors | 1 << col, color, out);
            path.pop();
        }
    }
    for s in 1..=n {
        path.push(s);
        go(n, &mut path, 1 << s, 0, &color, &mut out);
        path.pop();
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteBlock {
    pub block: usize,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

/// The block of a maximal Gallai partition of `K_n` that forms a complete
/// bipartite graph on all `n` vertices. `side_a` contains vertex 1.
pub fn bipartite_block(p: &SetPartition) -> Result<BipartiteBlock> {
    let n = is_maximal_gallai_kn(&Coloring::from_partition(p))?;
    let verts: Vec<usize> = (1..=n).collect();
    let found = spanning_bipartite_blocks(&verts, &|u, v| p.block_of(complete_edge_index(n, u, v)));
    match found.as_slice() {
        [one] => Ok(one.clone()),
        _ => Err(Error::NotMaximal("Gallai")),
    }
}

/// Blocks whose edges among `verts` form a complete bipartite graph covering `verts`.
pub(crate) fn spanning_bipartite_blocks(
    verts: &[usize],
    block: &dyn Fn(usize, usize) -> usize,
) -> Vec<BipartiteBlock> {
    let mut ids: Vec<usize> = Vec::new();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            ids.push(block(u, v));
        }
    }
    ids.sort_unstable();
    ids.dedup();
    let mut out = Vec::new();
    for b in ids {
        // the side of vertex verts[0] is its non-neighbourhood in the block
        let first = verts[0];
        let side_b: Vec<usize> = verts[1..].iter().copied().filter(|&v| block(first, v) == b).collect();
        let side_a: Vec<usize> = verts.iter().copied().filter(|v| !side_b.contains(v)).collect();
        if side_b.is_empty() {
            continue;
        }
        let complete = verts.iter().enumerate().all(|(i, &u)| {
            verts[i + 1..].iter().all(|&v| {
                let across = side_a.contains(&u) != side_a.contains(&v);
                (block(u, v) == b) == across
            })
        });
        if complete {
            out.push(BipartiteBlock {
                block: b,
                side_a,
                side_b,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{Family, RootSystemId};
    use crate::rational::q_int;

    fn t3() -> OrientedMatroid {
        OrientedMatroid::from_digraph(&DirectedGraph::tournament(3))
    }

    // K_3 edge order: 0=12 1=23 2=13
    fn col(v: &[usize], k: usize) -> Coloring {
        Coloring::new(v.to_vec(), k).unwrap()
    }

    #[test]
    fn gallai_on_triangle() {
        let k3 = complete_graph(3);
        assert!(is_gallai(&k3, &col(&[0, 1, 0], 2)));
        assert!(!is_gallai(&k3, &col(&[0, 1, 2], 3)));
    }

    #[test]
    fn transitive_on_triangle() {
        let om = t3();
        // eps(12)=eps(13)=2, eps(23)=1
        assert!(is_transitive(&om, &col(&[1, 0, 1], 2)).unwrap());
        assert!(!is_transitive(&om, &col(&[0, 1, 2], 3)).unwrap());
    }

    #[test]
    fn four_cycle() {
        // 4-cycle 1-2-3-4-1 with edges 12, 32, 34, 14: circuit {12,34}+ vs {32,14}-
        let g = DirectedGraph::new(4, vec![(1, 2), (3, 2), (3, 4), (1, 4)]).unwrap();
        let om = OrientedMatroid::from_digraph(&g);
        assert_eq!(om.signed_circuits().len(), 1);
        // two oppositely oriented edges share a color
        assert!(is_transitive(&om, &col(&[0, 0, 1, 2], 3)).unwrap());
        // only same-side edges share a color
        assert!(!is_transitive(&om, &col(&[0, 1, 0, 2], 3)).unwrap());
    }

    #[test]
    fn vector_oracle_small_cases() {
        let v = DirectedGraph::tournament(3).incidence_config();
        let om = OrientedMatroid::from_vectors(&v).unwrap();
        for code in 0..27 {
            let c = col(&[code % 3, code / 3 % 3, code / 9], 3);
            assert_eq!(is_transitive_vector_oracle(&v, &c).unwrap(), is_transitive(&om, &c).unwrap());
        }
        let single = VectorConfig::new(1, vec![vec![q_int(1)]]).unwrap();
        assert!(is_transitive_vector_oracle(&single, &col(&[0], 1)).unwrap());
        let opposite = VectorConfig::new(1, vec![vec![q_int(1)], vec![q_int(-1)]]).unwrap();
        assert!(matches!(
            is_transitive_vector_oracle(&opposite, &col(&[0, 1], 2)),
            Err(Error::NotAcyclic(_))
        ));
    }

    #[test]
    fn maximal_gallai_examples() {
        let k3 = complete_graph(3);
        let c = max_gallai_coloring(&k3, None).unwrap();
        assert_eq!(c.values(), &[0, 1, 0]);
        let k4 = complete_graph(4);
        // path basis 12,23,34 = elements 0,1,2; 13=3, 24=4, 14=5
        let c = max_gallai_coloring(&k4, Some([0, 1, 2].into_iter().collect())).unwrap();
        assert_eq!(c.values(), &[0, 1, 2, 0, 1, 0]);
        assert!(is_gallai(&k4, &c));
        let par = OrientedMatroid::from_digraph(&DirectedGraph::new(2, vec![(1, 2), (1, 2), (2, 1)]).unwrap());
        assert_eq!(max_gallai_coloring(par.underlying(), None).unwrap().colors_used(), 1);
    }

    #[test]
    fn maximal_transitive_examples() {
        let c = max_transitive_coloring(&t3()).unwrap();
        // Y_2 = {12,13} gets color 2, Y_1 = {23} color 1
        assert_eq!(c.values(), &[1, 0, 1]);
        let forest = OrientedMatroid::from_digraph(&DirectedGraph::new(4, vec![(1, 2), (3, 2), (2, 4)]).unwrap());
        assert_eq!(max_transitive_coloring(&forest).unwrap().colors_used(), 3);
        let b2 = OrientedMatroid::root_system(RootSystemId { family: Family::B, n: 2 }).unwrap();
        let c = max_transitive_coloring(&b2).unwrap();
        assert_eq!(c.colors_used(), 2);
        assert!(is_transitive(&b2, &c).unwrap());
    }

    #[test]
    fn rainbow_paths_and_singletons() {
        let c = col(&[0, 1, 0], 2);
        let paths = rainbow_hamiltonian_paths(&c).unwrap();
        assert_eq!(paths.len(), 4);
        assert!(paths.contains(&vec![1, 2, 3]));
        assert!(paths.contains(&vec![1, 3, 2]));
        assert_eq!(rainbow_hamiltonian_paths(&col(&[0], 1)).unwrap().len(), 2);
        assert_eq!(singleton_colors(&c), vec![1]);
        assert!(singleton_colors(&col(&[0, 0, 0], 1)).is_empty());
        assert!(rainbow_hamiltonian_paths(&col(&[0, 0, 0], 1)).is_err());
    }

    #[test]
    fn bipartite_block_examples() {
        // {12,13}|{23}
        let p = SetPartition::from_labels(&[0, 1, 0]);
        let bb = bipartite_block(&p).unwrap();
        assert_eq!((bb.side_a, bb.side_b), (vec![1], vec![2, 3]));
        let k2 = SetPartition::from_labels(&[0]);
        let bb = bipartite_block(&k2).unwrap();
        assert_eq!((bb.side_a, bb.side_b), (vec![1], vec![2]));
    }
}
