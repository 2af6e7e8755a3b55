//! Bijections between maximal partitions, binary total partition trees,
//! perfect matchings, permutations and Dyck paths.

use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::coloring::{complete_order, is_maximal_gallai_kn, is_transitive, spanning_bipartite_blocks};
use crate::enumeration::{maximal_gallai_partitions_kn, maximal_transitive_partitions_tournament, tournament};
use crate::error::{Error, Result};
use crate::matroid::{complete_edge_index, complete_edges};
use crate::partition::{Coloring, SetPartition};
use crate::poly::{double_factorial_odd, factorial};
use crate::report::Check;
use crate::set::ElementSet;
use crate::symfunc::{descent_set, matchings, syt_enumerate, IntPartition, Matching, SYTableau};

/// Binary total partition tree. Children are kept with the smaller minimum
/// leaf first, so equal trees compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BTPTree {
    Leaf(usize),
    Node(Box<BTPTree>, Box<BTPTree>),
}

impl BTPTree {
    pub fn node(a: BTPTree, b: BTPTree) -> BTPTree {
        if a.min_leaf() <= b.min_leaf() {
            BTPTree::Node(Box::new(a), Box::new(b))
        } else {
            BTPTree::Node(Box::new(b), Box::new(a))
        }
    }

    pub fn label(&self) -> ElementSet {
        match self {
            BTPTree::Leaf(v) => ElementSet::singleton(*v),
            BTPTree::Node(a, b) => a.label().union(b.label()),
        }
    }

    pub fn min_leaf(&self) -> usize {
        match self {
            BTPTree::Leaf(v) => *v,
            BTPTree::Node(a, _) => a.min_leaf(),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            BTPTree::Leaf(_) => 1,
            BTPTree::Node(a, b) => a.leaves() + b.leaves(),
        }
    }

    /// Labels of internal nodes, root first, in preorder.
    pub fn internal_labels(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        fn go(t: &BTPTree, out: &mut Vec<ElementSet>) {
            if let BTPTree::Node(a, b) = t {
                out.push(t.label());
                go(a, out);
                go(b, out);
            }
        }
        go(self, &mut out);
        out
    }

    /// Leaves must be exactly `1..=n`, each once.
    pub fn validate(&self) -> Result<usize> {
        let n = self.leaves();
        if n > 63 || self.label() != ElementSet::full(n + 1).without(0) {
            return Err(Error::invalid("tree leaves must be 1..n, each once"));
        }
        Ok(n)
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            BTPTree::Leaf(v) => serde_json::json!(v),
            BTPTree::Node(a, b) => serde_json::json!([a.to_json(), b.to_json()]),
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<BTPTree> {
        let bad = || Error::Parse(format!("bad tree {v}"));
        match v {
            serde_json::Value::Number(n) => Ok(BTPTree::Leaf(n.as_u64().ok_or_else(bad)? as usize)),
            serde_json::Value::Array(xs) if xs.len() == 2 => {
                Ok(BTPTree::node(BTPTree::from_json(&xs[0])?, BTPTree::from_json(&xs[1])?))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for BTPTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BTPTree::Leaf(v) => write!(f, "{v}"),
            BTPTree::Node(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl Serialize for BTPTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Splits by the unique spanning bipartite block, recursively.
pub fn gallai_to_btpt(p: &SetPartition) -> Result<BTPTree> {
    let n = is_maximal_gallai_kn(&Coloring::from_partition(p))?;
    let block = |u: usize, v: usize| p.block_of(complete_edge_index(n, u.min(v), u.max(v)));
    fn split(verts: &[usize], block: &dyn Fn(usize, usize) -> usize) -> Result<BTPTree> {
        if let [v] = verts {
            return Ok(BTPTree::Leaf(*v));
        }
        match spanning_bipartite_blocks(verts, block).as_slice() {
            [bb] => Ok(BTPTree::node(split(&bb.side_a, block)?, split(&bb.side_b, block)?)),
            _ => Err(Error::NotMaximal("Gallai")),
        }
    }
    let verts: Vec<usize> = (1..=n).collect();
    split(&verts, &block)
}

/// Edges are in the same block iff they have the same separating pair, i.e.
/// the same lowest common ancestor.
pub fn btpt_to_gallai(t: &BTPTree) -> Result<SetPartition> {
    let n = t.validate()?;
    let internal = t.internal_labels();
    let lca = |i: usize, j: usize| {
        // the smallest internal label containing both is the common ancestor
        internal
            .iter()
            .enumerate()
            .filter(|(_, l)| l.contains(i) && l.contains(j))
            .min_by_key(|(_, l)| l.len())
            .map(|(k, _)| k)
            .expect("root contains every pair")
    };
    let labels: Vec<usize> = complete_edges(n).iter().map(|&(i, j)| lca(i, j)).collect();
    Ok(SetPartition::from_labels(&labels))
}

/// Relabels inner non-root nodes `n+1, ..., 2n-2`, each time choosing among
/// unlabeled nodes with both sons labeled the one with the smallest son
/// label; brothers are then matched.
pub fn btpt_to_matching(t: &BTPTree) -> Result<Matching> {
    let n = t.validate()?;
    if n < 2 {
        return Matching::new(Vec::new());
    }
    // flatten: node ids with children; leaves keep their value as label
    struct Flat {
        kids: Vec<Option<(usize, usize)>>,
        label: Vec<usize>,
    }
    fn flatten(t: &BTPTree, f: &mut Flat) -> usize {
        let id = f.kids.len();
        f.kids.push(None);
        f.label.push(0);
        match t {
            BTPTree::Leaf(v) => f.label[id] = *v,
            BTPTree::Node(a, b) => {
                let x = flatten(a, f);
                let y = flatten(b, f);
                f.kids[id] = Some((x, y));
            }
        }
        id
    }
    let mut f = Flat {
        kids: Vec::new(),
        label: Vec::new(),
    };
    let root = flatten(t, &mut f);
    for next in n + 1..=2 * n - 2 {
        let v = (0..f.kids.len())
            .filter(|&v| v != root && f.label[v] == 0)
            .filter_map(|v| {
                let (a, b) = f.kids[v]?;
                (f.label[a] != 0 && f.label[b] != 0).then(|| (f.label[a].min(f.label[b]), v))
            })
            .min()
            .map(|(_, v)| v)
            .ok_or_else(|| Error::invalid("malformed tree"))?;
        f.label[v] = next;
    }
    let pairs = f
        .kids
        .iter()
        .flatten()
        .map(|&(a, b)| (f.label[a], f.label[b]))
        .collect();
    Matching::new(pairs)
}

/// Rebuilds the tree: the node labelled `m` (for `m = n+1, ...`) is the
/// father of the available brother pair with the smallest member.
pub fn matching_to_btpt(m: &Matching, n: usize) -> Result<BTPTree> {
    if n == 0 || m.points() != 2 * n - 2 {
        return Err(Error::invalid(format!("a tree on {n} leaves needs a matching of {} points", 2 * n.max(1) - 2)));
    }
    let mut node: Vec<Option<BTPTree>> = vec![None; 2 * n - 1];
    for v in 1..=n {
        node[v] = Some(BTPTree::Leaf(v));
    }
    let mut pending: Vec<(usize, usize)> = m.pairs().to_vec();
    for next in n + 1..=2 * n - 2 {
        let pos = pending
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| node[*a].is_some() && node[*b].is_some())
            .min_by_key(|(_, (a, b))| (*a).min(*b))
            .map(|(i, _)| i)
            .ok_or_else(|| Error::invalid(format!("matching {m} is not the image of a tree")))?;
        let (a, b) = pending.swap_remove(pos);
        let (x, y) = (node[a].take().unwrap(), node[b].take().unwrap());
        node[next] = Some(BTPTree::node(x, y));
    }
    match pending.as_slice() {
        [(a, b)] if node[*a].is_some() && node[*b].is_some() => {
            let (x, y) = (node[*a].take().unwrap(), node[*b].take().unwrap());
            Ok(BTPTree::node(x, y))
        }
        _ if n == 1 => Ok(BTPTree::Leaf(1)),
        _ => Err(Error::invalid(format!("matching {m} is not the image of a tree"))),
    }
}

/// The composite map from maximal Gallai partitions of `K_n` to matchings of `2n-2` points.
pub fn gallai_to_matching(p: &SetPartition) -> Result<Matching> {
    btpt_to_matching(&gallai_to_btpt(p)?)
}

pub fn matching_to_gallai(m: &Matching, n: usize) -> Result<SetPartition> {
    btpt_to_gallai(&matching_to_btpt(m, n)?)
}

fn path_is_rainbow(p: &SetPartition, n: usize) -> bool {
    let blocks: HashSet<usize> = (1..n).map(|i| p.block_of(complete_edge_index(n, i, i + 1))).collect();
    blocks.len() == n - 1
}

/// Forgets orientations: a maximal transitive partition of the tournament is
/// a maximal Gallai partition of `K_n` with the path `1,2,...,n` rainbow.
pub fn tournament_to_rainbow_gallai(p: &SetPartition) -> Result<SetPartition> {
    let n = complete_order(p.len())?;
    let t = tournament(n);
    let c = Coloring::from_partition(p);
    if n < 2 || p.num_blocks() != n - 1 || !is_transitive(&t, &c)? {
        return Err(Error::NotMaximal("transitive"));
    }
    is_maximal_gallai_kn(&c)?;
    if !path_is_rainbow(p, n) {
        return Err(Error::invalid("image path is not rainbow"));
    }
    Ok(p.clone())
}

/// Orients every edge from the smaller vertex; requires a rainbow path.
pub fn rainbow_gallai_to_tournament(p: &SetPartition) -> Result<SetPartition> {
    let c = Coloring::from_partition(p);
    let n = is_maximal_gallai_kn(&c)?;
    if !path_is_rainbow(p, n) {
        return Err(Error::invalid("the path 1,2,...,n is not rainbow"));
    }
    if !is_transitive(&tournament(n), &c)? {
        return Err(Error::NotMaximal("transitive"));
    }
    Ok(p.clone())
}

/// The permutation whose inversion set is the set of edges with the first color.
pub fn transitive2_to_permutation(c: &Coloring) -> Result<Vec<usize>> {
    let n = complete_order(c.len())?;
    if c.palette() > 2 {
        return Err(Error::invalid("expected a 2-coloring"));
    }
    if !is_transitive(&tournament(n), c)? {
        return Err(Error::invalid("coloring is not transitive"));
    }
    let inv = |i: usize, j: usize| c.get(complete_edge_index(n, i, j)) == 0;
    let perm: Vec<usize> = (1..=n)
        .map(|i| 1 + (i + 1..=n).filter(|&j| inv(i, j)).count() + (1..i).filter(|&j| !inv(j, i)).count())
        .collect();
    let back = permutation_to_transitive2(&perm)?;
    if back.values() != c.values() {
        return Err(Error::invalid("color class is not an inversion set"));
    }
    Ok(perm)
}

pub fn permutation_to_transitive2(perm: &[usize]) -> Result<Coloring> {
    let n = perm.len();
    let mut seen = vec![false; n + 1];
    for &v in perm {
        if v == 0 || v > n || seen[v] {
            return Err(Error::invalid(format!("{perm:?} is not a permutation")));
        }
        seen[v] = true;
    }
    let values = complete_edges(n)
        .iter()
        .map(|&(i, j)| usize::from(perm[i - 1] < perm[j - 1]))
        .collect();
    Coloring::new(values, 2)
}

/// Up step `true`, down step `false`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DyckPath {
    steps: Vec<bool>,
}

impl DyckPath {
    pub fn new(steps: Vec<bool>) -> Result<Self> {
        let mut h = 0i64;
        for &s in &steps {
            h += if s { 1 } else { -1 };
            if h < 0 {
                return Err(Error::invalid("path goes below the axis"));
            }
        }
        if h != 0 {
            return Err(Error::invalid("path does not return to the axis"));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    /// `{i : step i up, step i+1 down}`, one-based.
    pub fn peaks(&self) -> ElementSet {
        (1..self.steps.len()).filter(|&i| self.steps[i - 1] && !self.steps[i]).collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            f.write_str(if s { "U" } else { "D" })?;
        }
        Ok(())
    }
}

/// Step `i` is up iff `i` is in the first row.
pub fn syt_to_dyck(t: &SYTableau) -> Result<DyckPath> {
    let shape = t.shape();
    if shape.len() > 2 || shape.part(0) != shape.part(1) {
        return Err(Error::invalid(format!("expected a two-row rectangle, got {shape}")));
    }
    let row = t.row_of();
    DyckPath::new((1..=t.size()).map(|i| row[i] == 0).collect())
}

pub fn dyck_to_syt(d: &DyckPath) -> Result<SYTableau> {
    let (mut top, mut bottom) = (Vec::new(), Vec::new());
    for (i, &s) in d.steps().iter().enumerate() {
        if s {
            top.push(i + 1);
        } else {
            bottom.push(i + 1);
        }
    }
    SYTableau::new(vec![top, bottom])
}

/// The tree of the worked example: `[4] → {1,2,4} | {3} → {1,2} | {4}`.
pub fn worked_example_partition() -> SetPartition {
    let labels: Vec<usize> = complete_edges(4)
        .iter()
        .map(|&(i, j)| match (i, j) {
            (1, 2) => 0,
            (1, 4) | (2, 4) => 1,
            _ => 2,
        })
        .collect();
    SetPartition::from_labels(&labels)
}

/// Round trips, injectivity and image counts of all bijections at size `n`,
/// plus the descent/short-match correspondence.
pub fn verify_bijections(n: usize) -> Result<Vec<Check>> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    let mut out = Vec::new();
    let gallai = maximal_gallai_partitions_kn(n)?;
    let mut trees = HashSet::new();
    let mut images = HashSet::new();
    let (mut psi_ok, mut phi_ok, mut stat_ok) = (true, true, true);
    let window = ElementSet::full(n).without(0);
    for p in &gallai {
        let t = gallai_to_btpt(p)?;
        psi_ok &= btpt_to_gallai(&t)? == *p;
        let m = btpt_to_matching(&t)?;
        phi_ok &= matching_to_btpt(&m, n)? == t;
        stat_ok &= descent_set(p)? == m.short_set().intersection(window);
        trees.insert(t);
        images.insert(m);
    }
    let expected = double_factorial_odd(n as i64 - 1);
    out.push(Check::holds(format!("gallai-tree round trip n={n}"), psi_ok, "mismatch"));
    out.push(Check::holds(format!("tree-matching round trip n={n}"), phi_ok, "mismatch"));
    out.push(Check::eq(format!("distinct trees n={n}"), expected.clone(), trees.len().into()));
    out.push(Check::eq(format!("distinct matchings n={n}"), expected, images.len().into()));
    let all: HashSet<Matching> = matchings(n - 1)?.into_iter().collect();
    out.push(Check::holds(format!("matchings cover M_{} n={n}", 2 * n - 2), all == images, "image differs"));
    out.push(Check::holds(format!("Des = Short on [n-1] n={n}"), stat_ok, "statistic mismatch"));

    let transitive = maximal_transitive_partitions_tournament(n)?;
    let mut ok = true;
    let mut image = HashSet::new();
    for p in &transitive {
        let g = tournament_to_rainbow_gallai(p)?;
        ok &= rainbow_gallai_to_tournament(&g)? == *p;
        image.insert(g);
    }
    let rainbow: HashSet<SetPartition> = gallai.iter().filter(|p| path_is_rainbow(p, n)).cloned().collect();
    out.push(Check::holds(format!("tournament-rainbow round trip n={n}"), ok, "mismatch"));
    out.push(Check::holds(format!("tournament image = rainbow-path Gallai n={n}"), image == rainbow, "image differs"));

    let t = tournament(n);
    let m = t.size();
    let mut perms = HashSet::new();
    let mut ok = true;
    let mut complement_ok = true;
    for bits in 0u64..1 << m {
        let c = Coloring::new((0..m).map(|e| (bits >> e & 1) as usize).collect(), 2)?;
        if !is_transitive(&t, &c)? {
            continue;
        }
        let perm = transitive2_to_permutation(&c)?;
        ok &= permutation_to_transitive2(&perm)? == c;
        let flipped = Coloring::new(c.values().iter().map(|v| 1 - v).collect(), 2)?;
        complement_ok &= is_transitive(&t, &flipped)?;
        perms.insert(perm);
    }
    out.push(Check::holds(format!("2-coloring-permutation round trip n={n}"), ok, "mismatch"));
    out.push(Check::eq(format!("distinct permutations n={n}"), factorial(n as u64), perms.len().into()));
    out.push(Check::holds(format!("complement of an inversion set is transitive n={n}"), complement_ok, "failed"));

    let shape = IntPartition::new(vec![n, n])?;
    let mut ok = true;
    let mut paths = HashSet::new();
    for tab in syt_enumerate(&shape)? {
        let d = syt_to_dyck(&tab)?;
        ok &= dyck_to_syt(&d)? == tab && d.peaks() == tab.descent_set();
        paths.insert(d);
    }
    out.push(Check::holds(format!("SYT({n},{n})-Dyck round trip with Des = Peak"), ok, "mismatch"));
    out.push(Check::eq(
        format!("distinct Dyck paths n={n}"),
        crate::poly::catalan(n as u64),
        paths.len().into(),
    ));
    Ok(out)
}

/// The worked example reproduces the matching `(1,2),(4,5),(3,6)`.
pub fn verify_worked_example() -> Result<Vec<Check>> {
    let p = worked_example_partition();
    let t = gallai_to_btpt(&p)?;
    let labels: Vec<String> = t.internal_labels().iter().map(|l| crate::symfunc::subset_key(*l)).collect();
    let m = btpt_to_matching(&t)?;
    Ok(vec![
        Check::eq("example tree internal labels", "{1,2,3,4} {1,2,4} {1,2}".to_string(), labels.join(" ")),
        Check::eq("example matching", "(1,2),(3,6),(4,5)".to_string(), m.to_string()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        for c in verify_worked_example().unwrap() {
            assert!(c.pass, "{c:?}");
        }
        let t = gallai_to_btpt(&worked_example_partition()).unwrap();
        assert_eq!(t.to_string(), "(((1,2),4),3)");
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[[1,2],4],3]");
        assert_eq!(BTPTree::from_json(&serde_json::json!([3, [[2, 1], 4]])).unwrap(), t);
    }

    #[test]
    fn smallest_cases() {
        let k2 = SetPartition::from_labels(&[0]);
        let t = gallai_to_btpt(&k2).unwrap();
        assert_eq!(t.to_string(), "(1,2)");
        assert_eq!(btpt_to_matching(&t).unwrap().to_string(), "(1,2)");
        assert_eq!(matching_to_gallai(&Matching::new(vec![(1, 2)]).unwrap(), 2).unwrap(), k2);
        assert!(gallai_to_btpt(&SetPartition::parse("000").unwrap()).is_err());
    }

    #[test]
    fn tournament_rainbow() {
        // {12,13}|{23}
        let p = SetPartition::parse("010").unwrap();
        assert_eq!(tournament_to_rainbow_gallai(&p).unwrap(), p);
        // {13}|{12,23}: path 12,23 not rainbow
        assert!(rainbow_gallai_to_tournament(&SetPartition::parse("001").unwrap()).is_err());
    }

    #[test]
    fn permutations() {
        let all2 = Coloring::new(vec![1; 6], 2).unwrap();
        assert_eq!(transitive2_to_permutation(&all2).unwrap(), vec![1, 2, 3, 4]);
        let all1 = Coloring::new(vec![0; 6], 2).unwrap();
        assert_eq!(transitive2_to_permutation(&all1).unwrap(), vec![4, 3, 2, 1]);
        // 12, 23 inverted but 13 not: not transitive
        assert!(transitive2_to_permutation(&Coloring::new(vec![0, 0, 1], 2).unwrap()).is_err());
    }

    #[test]
    fn dyck() {
        let t = SYTableau::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        let d = syt_to_dyck(&t).unwrap();
        assert_eq!(d.to_string(), "UUDD");
        assert_eq!(d.peaks(), [2].into_iter().collect());
        let t = SYTableau::new(vec![vec![1, 3], vec![2, 4]]).unwrap();
        let d = syt_to_dyck(&t).unwrap();
        assert_eq!(d.to_string(), "UDUD");
        assert_eq!(d.peaks(), t.descent_set());
        assert!(syt_to_dyck(&SYTableau::new(vec![vec![1, 2], vec![3]]).unwrap()).is_err());
    }

    #[test]
    fn exhaustive_small() {
        for n in 2..=4 {
            for c in verify_bijections(n).unwrap() {
                assert!(c.pass, "{c:?}");
            }
        }
    }
}
