//! Matroids and oriented matroids given by (signed) circuits, with graphic,
//! vector and abstract backends.

use std::collections::{BTreeSet, HashSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::rational::{self, q_int, Q};
use crate::set::{k_subsets, ElementSet, MAX_ELEMENTS};

/// Default cap on the number of column subsets examined when extracting
/// circuits from a vector configuration.
pub const VECTOR_SUBSET_BUDGET: u64 = 2_000_000;
/// Largest ground set for which abstract input is checked for orthogonality.
pub const ORTHOGONALITY_CHECK_LIMIT: usize = 16;
/// Largest ground set for subset-indexed rank tables.
pub const RANK_TABLE_LIMIT: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    pub size: usize,
    pub labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(size: usize) -> Self {
        GroundSet { size, labels: None }
    }

    pub fn labeled(labels: Vec<String>) -> Result<Self> {
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::invalid("element labels must be unique"));
        }
        Ok(GroundSet {
            size: labels.len(),
            labels: Some(labels),
        })
    }

    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => e.to_string(),
        }
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.size)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCircuit {
    pub pos: ElementSet,
    pub neg: ElementSet,
}

impl SignedCircuit {
    /// Builds the canonical representative of `{C, -C}`: the smallest element lies in `pos`.
    pub fn new(pos: ElementSet, neg: ElementSet) -> Self {
        let c = SignedCircuit { pos, neg };
        c.canonical()
    }

    pub fn canonical(self) -> Self {
        match self.support().min() {
            Some(e) if self.neg.contains(e) => self.negate(),
            _ => self,
        }
    }

    pub fn negate(self) -> Self {
        SignedCircuit {
            pos: self.neg,
            neg: self.pos,
        }
    }

    pub fn support(self) -> ElementSet {
        self.pos.union(self.neg)
    }

    /// True when one side is empty. Canonical positive circuits have `neg` empty.
    pub fn is_positive(self) -> bool {
        self.neg.is_empty() || self.pos.is_empty()
    }

    pub fn sign(self, e: usize) -> i8 {
        if self.pos.contains(e) {
            1
        } else if self.neg.contains(e) {
            -1
        } else {
            0
        }
    }

    pub fn reorient(self, a: ElementSet) -> Self {
        SignedCircuit::new(
            self.pos.difference(a).union(self.neg.intersection(a)),
            self.neg.difference(a).union(self.pos.intersection(a)),
        )
    }
}

/// Sign vector of a cocircuit, stored like a circuit.
pub type SignedCocircuit = SignedCircuit;

/// Orthogonality of a signed circuit and a signed cocircuit.
pub fn orthogonal(x: SignedCircuit, y: SignedCocircuit) -> bool {
    let common = x.support().intersection(y.support());
    if common.is_empty() {
        return true;
    }
    let same = x.pos.intersection(y.pos).union(x.neg.intersection(y.neg));
    let opposite = x.pos.intersection(y.neg).union(x.neg.intersection(y.pos));
    !same.is_empty() && !opposite.is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl DirectedGraph {
    /// Vertices are `1..=n`; self-loops are rejected.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() > MAX_ELEMENTS {
            return Err(Error::budget("edge count", MAX_ELEMENTS as u64, edges.len() as u64));
        }
        for &(u, v) in &edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::invalid(format!("edge ({u},{v}) has a vertex outside 1..={n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
        }
        Ok(DirectedGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The transitive tournament on `n` vertices, edges `(i,j)` with `i<j`
    /// ordered by `j-i` and then by `i`.
    pub fn tournament(n: usize) -> Self {
        DirectedGraph {
            n,
            edges: complete_edges(n),
        }
    }

    /// The `n`-cycle `{i,i+1}` (indices mod `n`) with the first `m_cw` edges
    /// oriented `i -> i+1` and the rest `i+1 -> i`.
    pub fn cycle(n: usize, m_cw: usize) -> Result<Self> {
        if n < 2 || m_cw > n {
            return Err(Error::invalid(format!("cycle({n}, {m_cw}) out of range")));
        }
        let edges = (1..=n)
            .map(|i| {
                let j = i % n + 1;
                if i <= m_cw {
                    (i, j)
                } else {
                    (j, i)
                }
            })
            .collect();
        DirectedGraph::new(n, edges)
    }

    /// Acyclically oriented `n`-cycle with edges `(1,2), ..., (n-1,n), (1,n)`.
    pub fn path_closed_cycle(n: usize) -> Self {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        DirectedGraph { n, edges }
    }

    pub fn reversed(&self, a: ElementSet) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if a.contains(i) { (v, u) } else { (u, v) })
            .collect();
        DirectedGraph { n: self.n, edges }
    }

    /// Labels `(u,v)`; repeated edges get a `#k` suffix to stay unique.
    pub fn edge_labels(&self) -> Vec<String> {
        let mut count = std::collections::HashMap::new();
        self.edges
            .iter()
            .map(|&(u, v)| {
                let k = count.entry((u, v)).or_insert(0usize);
                *k += 1;
                if *k == 1 {
                    format!("({u},{v})")
                } else {
                    format!("({u},{v})#{k}")
                }
            })
            .collect()
    }

    /// Incidence vectors `e_u - e_v` in `Q^n`.
    pub fn incidence_config(&self) -> VectorConfig {
        let cols = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let mut c = vec![Q::zero(); self.n];
                c[u - 1] = q_int(1);
                c[v - 1] = q_int(-1);
                c
            })
            .collect();
        VectorConfig {
            dimension: self.n,
            columns: cols,
        }
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.n + 1];
        for &(_, v) in &self.edges {
            indeg[v] += 1;
        }
        let mut stack: Vec<usize> = (1..=self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for &(a, b) in &self.edges {
                if a == u {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        stack.push(b);
                    }
                }
            }
        }
        seen == self.n
    }
}

/// Edges `(i,j)`, `1 <= i < j <= n`, ordered by `j-i` and then by `i`.
pub fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for d in 1..n {
        for i in 1..=n - d {
            out.push((i, i + d));
        }
    }
    out
}

/// Index of edge `(i,j)` in [`complete_edges`].
pub fn complete_edge_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    let d = j - i;
    // heights 1..d-1 contribute (n-1) + (n-2) + ... + (n-d+1) edges
    (1..d).map(|h| n - h).sum::<usize>() + (i - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorConfig {
    pub dimension: usize,
    pub columns: Vec<Vec<Q>>,
}

impl VectorConfig {
    pub fn new(dimension: usize, columns: Vec<Vec<Q>>) -> Result<Self> {
        if columns.len() > MAX_ELEMENTS {
            return Err(Error::budget("column count", MAX_ELEMENTS as u64, columns.len() as u64));
        }
        if let Some(c) = columns.iter().find(|c| c.len() != dimension) {
            return Err(Error::invalid(format!(
                "column of length {} in a configuration of dimension {dimension}",
                c.len()
            )));
        }
        Ok(VectorConfig { dimension, columns })
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    fn cols(&self, s: ElementSet) -> Vec<&[Q]> {
        s.iter().map(|e| self.columns[e].as_slice()).collect()
    }

    pub fn rank_of(&self, s: ElementSet) -> usize {
        rational::column_rank(&self.cols(s))
    }

    pub fn negated(&self, a: ElementSet) -> Self {
        let columns = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if a.contains(i) {
                    c.iter().map(|x| -x).collect()
                } else {
                    c.clone()
                }
            })
            .collect();
        VectorConfig {
            dimension: self.dimension,
            columns,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    I2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootSystemId {
    pub family: Family,
    pub n: usize,
}

impl RootSystemId {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = match family {
            Family::A => 1,
            Family::B | Family::I2 => 2,
        };
        if n < min {
            return Err(Error::invalid(format!("{family:?}_{n} needs n >= {min}")));
        }
        Ok(RootSystemId { family, n })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    Abstract,
    Graphic(DirectedGraph),
    Vector(VectorConfig),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    ground: GroundSet,
    circuits: Vec<ElementSet>,
    by_element: Vec<Vec<usize>>,
    rank: usize,
}

impl Matroid {
    /// Validates the circuit axioms: nonempty, antichain, elimination.
    pub fn from_circuits(ground: GroundSet, circuits: Vec<ElementSet>) -> Result<Self> {
        let full = ground.full();
        let mut seen = HashSet::new();
        for c in &circuits {
            if c.is_empty() {
                return Err(Error::invalid("empty circuit"));
            }
            if !c.is_subset(full) {
                return Err(Error::invalid(format!("circuit {c:?} leaves the ground set")));
            }
            if !seen.insert(*c) {
                return Err(Error::invalid(format!("circuit {c:?} listed twice")));
            }
        }
        for (i, a) in circuits.iter().enumerate() {
            for b in &circuits[i + 1..] {
                if a.is_subset(*b) || b.is_subset(*a) {
                    return Err(Error::invalid(format!("circuits {a:?} and {b:?} are nested")));
                }
            }
        }
        let m = Matroid::trusted(ground, circuits);
        m.check_elimination()?;
        Ok(m)
    }

    pub(crate) fn trusted(ground: GroundSet, mut circuits: Vec<ElementSet>) -> Self {
        circuits.sort_by_key(|c| (c.len(), c.bits()));
        let mut by_element = vec![Vec::new(); ground.size];
        for (i, c) in circuits.iter().enumerate() {
            for e in c.iter() {
                by_element[e].push(i);
            }
        }
        let mut m = Matroid {
            ground,
            circuits,
            by_element,
            rank: 0,
        };
        m.rank = m.rank_of(m.ground.full());
        m
    }

    fn check_elimination(&self) -> Result<()> {
        for (i, &a) in self.circuits.iter().enumerate() {
            for &b in &self.circuits[i + 1..] {
                let u = a.union(b);
                for e in a.intersection(b).iter() {
                    if !self.contains_circuit(u.without(e)) {
                        return Err(Error::invalid(format!(
                            "circuit elimination fails for {a:?}, {b:?} at {e}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.size
    }

    pub fn circuits(&self) -> &[ElementSet] {
        &self.circuits
    }

    pub fn circuits_containing(&self, e: usize) -> impl Iterator<Item = ElementSet> + '_ {
        self.by_element[e].iter().map(|&i| self.circuits[i])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains_circuit(&self, s: ElementSet) -> bool {
        self.circuits.iter().any(|c| c.is_subset(s))
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        !self.contains_circuit(s)
    }

    /// Whether `e` lies in a circuit inside `base ∪ {e}`.
    pub fn closes_circuit(&self, base: ElementSet, e: usize) -> bool {
        self.circuits_containing(e).any(|c| c.without(e).is_subset(base))
    }

    /// Lexicographically first basis of `s`, built greedily.
    pub fn greedy_basis(&self, s: ElementSet) -> ElementSet {
        let mut b = ElementSet::EMPTY;
        for e in s.iter() {
            if !self.closes_circuit(b, e) {
                b.insert(e);
            }
        }
        b
    }

    pub fn rank_of(&self, s: ElementSet) -> usize {
        self.greedy_basis(s).len()
    }

    pub fn closure(&self, s: ElementSet) -> ElementSet {
        let b = self.greedy_basis(s);
        (0..self.size())
            .filter(|&e| b.contains(e) || self.closes_circuit(b, e))
            .collect::<ElementSet>()
            .union(s)
    }

    pub fn is_basis(&self, b: ElementSet) -> bool {
        b.is_subset(self.ground.full()) && b.len() == self.rank && self.is_independent(b)
    }

    /// The unique circuit inside `basis ∪ {e}`.
    pub fn fundamental_circuit(&self, basis: ElementSet, e: usize) -> Result<ElementSet> {
        if !self.is_basis(basis) {
            return Err(Error::invalid(format!("{basis:?} is not a basis")));
        }
        if e >= self.size() || basis.contains(e) {
            return Err(Error::invalid(format!("element {e} is not outside the basis")));
        }
        let s = basis.with(e);
        self.circuits_containing(e)
            .find(|c| c.is_subset(s))
            .ok_or_else(|| Error::invalid(format!("no circuit in basis + {e}")))
    }

    pub fn loops(&self) -> ElementSet {
        self.circuits
            .iter()
            .filter(|c| c.len() == 1)
            .fold(ElementSet::EMPTY, |a, c| a.union(*c))
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    pub fn require_loopless(&self) -> Result<()> {
        match self.loops().min() {
            Some(e) => Err(Error::Loop(e)),
            None => Ok(()),
        }
    }

    /// Classes of the relation "equal or forming a 2-circuit". Loops are singletons.
    pub fn parallel_classes(&self) -> SetPartition {
        let mut uf = UnionFind::new(self.size());
        for c in self.circuits.iter().filter(|c| c.len() == 2) {
            let v = c.to_vec();
            uf.union(v[0], v[1]);
        }
        uf.partition()
    }

    /// Components of the relation "share a circuit"; isthmuses are singletons.
    pub fn connected_components(&self) -> SetPartition {
        let mut uf = UnionFind::new(self.size());
        for c in &self.circuits {
            let v = c.to_vec();
            for w in v.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.partition()
    }

    /// Rank of every subset, indexed by bitmask.
    pub fn rank_table(&self) -> Result<Vec<u8>> {
        let m = self.size();
        if m > RANK_TABLE_LIMIT {
            return Err(Error::budget("rank table ground size", RANK_TABLE_LIMIT as u64, m as u64));
        }
        let mut r = vec![0u8; 1usize << m];
        for s in 1usize..(1 << m) {
            let e = 63 - (s as u64).leading_zeros() as usize;
            let set = ElementSet::from_bits(s as u64);
            let closes = self.circuits_containing(e).any(|c| c.is_subset(set));
            r[s] = r[s & !(1 << e)] + u8::from(!closes);
        }
        Ok(r)
    }

    /// Restriction to the elements of `s`, relabelled `0..|s|` in order.
    pub fn restrict(&self, s: ElementSet) -> Matroid {
        let idx = s.to_vec();
        let circuits = self
            .circuits
            .iter()
            .filter(|c| c.is_subset(s))
            .map(|c| c.iter().map(|e| idx.binary_search(&e).unwrap()).collect())
            .collect();
        Matroid::trusted(GroundSet::new(idx.len()), circuits)
    }

    /// Direct sum: the elements of `other` are shifted past those of `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let off = self.size();
        check_size(off + other.size())?;
        let mut circuits = self.circuits.clone();
        circuits.extend(other.circuits.iter().map(|c| shift(*c, off)));
        Ok(Matroid::trusted(GroundSet::new(off + other.size()), circuits))
    }
}

fn shift(s: ElementSet, off: usize) -> ElementSet {
    ElementSet::from_bits(s.bits() << off)
}

fn check_size(m: usize) -> Result<()> {
    if m > MAX_ELEMENTS {
        Err(Error::budget("ground size", MAX_ELEMENTS as u64, m as u64))
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedMatroid {
    underlying: Matroid,
    /// Aligned with `underlying.circuits()`.
    signed: Vec<SignedCircuit>,
    repr: Representation,
}

impl OrientedMatroid {
    fn assemble(ground: GroundSet, mut signed: Vec<SignedCircuit>, repr: Representation) -> Self {
        signed.sort_by_key(|c| (c.support().len(), c.support().bits()));
        let underlying = Matroid::trusted(ground, signed.iter().map(|c| c.support()).collect());
        OrientedMatroid {
            underlying,
            signed,
            repr,
        }
    }

    /// Abstract input. Checks disjoint signs, one sign pattern per support, the
    /// circuit axioms of the supports, and (for small ground sets) that every
    /// cocircuit admits signs orthogonal to all circuits.
    pub fn from_signed_circuits(ground: GroundSet, circuits: Vec<SignedCircuit>) -> Result<Self> {
        let mut by_support: Vec<SignedCircuit> = Vec::new();
        for c in circuits {
            if !c.pos.is_disjoint(c.neg) {
                return Err(Error::invalid(format!("signed circuit {c:?} has overlapping sides")));
            }
            let c = c.canonical();
            match by_support.iter().find(|d| d.support() == c.support()) {
                Some(d) if *d == c => {}
                Some(d) => {
                    return Err(Error::invalid(format!(
                        "support {:?} carries two sign patterns {d:?} and {c:?}",
                        c.support()
                    )))
                }
                None => by_support.push(c),
            }
        }
        let supports = by_support.iter().map(|c| c.support()).collect();
        Matroid::from_circuits(ground.clone(), supports)?;
        let om = OrientedMatroid::assemble(ground, by_support, Representation::Abstract);
        if om.size() <= ORTHOGONALITY_CHECK_LIMIT {
            om.abstract_cocircuits(om.underlying.ground.full())?;
        }
        Ok(om)
    }

    pub fn from_digraph(g: &DirectedGraph) -> Self {
        let ground = GroundSet {
            size: g.edges.len(),
            labels: Some(g.edge_labels()),
        };
        OrientedMatroid::assemble(ground, digraph_circuits(g), Representation::Graphic(g.clone()))
    }

    pub fn from_vectors(v: &VectorConfig) -> Result<Self> {
        OrientedMatroid::from_vectors_with_budget(v, VECTOR_SUBSET_BUDGET)
    }

    pub fn from_vectors_with_budget(v: &VectorConfig, budget: u64) -> Result<Self> {
        let signed = vector_circuits(v, budget)?;
        Ok(OrientedMatroid::assemble(
            GroundSet::new(v.len()),
            signed,
            Representation::Vector(v.clone()),
        ))
    }

    pub fn root_system(id: RootSystemId) -> Result<Self> {
        let RootSystemId { family, n } = RootSystemId::new(id.family, id.n)?;
        match family {
            Family::A => {
                let g = DirectedGraph::tournament(n + 1);
                let v = g.incidence_config();
                let labels = g
                    .edges
                    .iter()
                    .map(|(i, j)| format!("e{i}-e{j}"))
                    .collect();
                let mut om = OrientedMatroid::from_vectors(&v)?;
                om.underlying.ground = GroundSet::labeled(labels)?;
                Ok(om)
            }
            Family::B => {
                let (v, labels) = type_b_roots(n);
                let mut om = OrientedMatroid::from_vectors(&v)?;
                om.underlying.ground = GroundSet::labeled(labels)?;
                Ok(om)
            }
            Family::I2 => Ok(dihedral(n)),
        }
    }

    pub fn underlying(&self) -> &Matroid {
        &self.underlying
    }

    pub fn signed_circuits(&self) -> &[SignedCircuit] {
        &self.signed
    }

    pub fn representation(&self) -> &Representation {
        &self.repr
    }

    pub fn ground(&self) -> &GroundSet {
        self.underlying.ground()
    }

    pub fn size(&self) -> usize {
        self.underlying.size()
    }

    pub fn rank(&self) -> usize {
        self.underlying.rank()
    }

    pub fn is_acyclic(&self) -> bool {
        !self.signed.iter().any(|c| c.is_positive())
    }

    pub fn require_acyclic(&self) -> Result<()> {
        match self.signed.iter().find(|c| c.is_positive()) {
            Some(c) => Err(Error::NotAcyclic(c.support().to_vec())),
            None => Ok(()),
        }
    }

    pub fn connected_components(&self) -> SetPartition {
        self.underlying.connected_components()
    }

    pub fn reorient(&self, a: ElementSet) -> OrientedMatroid {
        let a = a.intersection(self.ground().full());
        let signed = self.signed.iter().map(|c| c.reorient(a)).collect();
        let repr = match &self.repr {
            Representation::Abstract => Representation::Abstract,
            Representation::Graphic(g) => Representation::Graphic(g.reversed(a)),
            Representation::Vector(v) => Representation::Vector(v.negated(a)),
        };
        OrientedMatroid::assemble(self.ground().clone(), signed, repr)
    }

    /// Direct sum; the result is abstract.
    pub fn direct_sum(&self, other: &OrientedMatroid) -> Result<OrientedMatroid> {
        let off = self.size();
        check_size(off + other.size())?;
        let mut signed = self.signed.clone();
        signed.extend(
            other
                .signed
                .iter()
                .map(|c| SignedCircuit::new(shift(c.pos, off), shift(c.neg, off))),
        );
        Ok(OrientedMatroid::assemble(
            GroundSet::new(off + other.size()),
            signed,
            Representation::Abstract,
        ))
    }

    /// Forgets the representation, keeping only the signed circuits.
    pub fn to_abstract(&self) -> OrientedMatroid {
        let mut om = self.clone();
        om.repr = Representation::Abstract;
        om
    }

    /// Supports of the positive cocircuits.
    pub fn cocircuits_positive(&self) -> Result<Vec<ElementSet>> {
        self.require_acyclic()?;
        self.positive_cocircuits_within(self.ground().full())
    }

    /// Positive cocircuits of the restriction to `mask`, sorted lexicographically.
    pub fn positive_cocircuits_within(&self, mask: ElementSet) -> Result<Vec<ElementSet>> {
        let mut out = match &self.repr {
            Representation::Graphic(g) if g.n <= 24 => graphic_positive_cocircuits(g, mask),
            Representation::Vector(v) => vector_positive_cocircuits(v, &self.underlying, mask),
            _ => self
                .abstract_cocircuits(mask)?
                .into_iter()
                .filter(|y| y.neg.is_empty())
                .map(|y| y.pos)
                .collect(),
        };
        out.sort_by(|a, b| a.lex_cmp(*b));
        out.dedup();
        Ok(out)
    }

    /// Signed cocircuits of the restriction to `mask` (positive side holding the
    /// smallest element), derived from fundamental circuits and then checked
    /// against every circuit by orthogonality.
    pub fn abstract_cocircuits(&self, mask: ElementSet) -> Result<Vec<SignedCocircuit>> {
        let m = &self.underlying;
        let r = m.rank_of(mask);
        if r == 0 {
            return Ok(Vec::new());
        }
        let inside: Vec<SignedCircuit> = self
            .signed
            .iter()
            .copied()
            .filter(|c| c.support().is_subset(mask))
            .collect();
        let elems = mask.to_vec();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for pick in k_subsets(elems.len(), r - 1) {
            let indep: ElementSet = pick.iter().map(|i| elems[i]).collect();
            if !m.is_independent(indep) {
                continue;
            }
            let flat: ElementSet = mask
                .iter()
                .filter(|&e| indep.contains(e) || m.closes_circuit(indep, e))
                .collect();
            if !seen.insert(flat) {
                continue;
            }
            let d = mask.difference(flat);
            let f = d.min().expect("hyperplane complement is nonempty");
            let mut y = SignedCircuit {
                pos: ElementSet::singleton(f),
                neg: ElementSet::EMPTY,
            };
            let basis = indep.with(f);
            for g in d.without(f).iter() {
                let x = inside
                    .iter()
                    .find(|c| c.support().contains(g) && c.support().is_subset(basis.with(g)))
                    .ok_or_else(|| Error::invalid("missing fundamental circuit"))?;
                if x.sign(f) == 0 {
                    return Err(Error::invalid(format!(
                        "fundamental circuit of {g} avoids {f}: not a matroid"
                    )));
                }
                if -x.sign(f) * x.sign(g) > 0 {
                    y.pos.insert(g);
                } else {
                    y.neg.insert(g);
                }
            }
            if let Some(x) = inside.iter().find(|x| !orthogonal(**x, y)) {
                return Err(Error::invalid(format!(
                    "signed circuits are not orthogonal to cocircuit {y:?} (circuit {x:?})"
                )));
            }
            out.push(y);
        }
        Ok(out)
    }
}

/// Simple cycles of the underlying multigraph, each signed by traversal direction.
fn digraph_circuits(g: &DirectedGraph) -> Vec<SignedCircuit> {
    let mut adj: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); g.n + 1];
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        adj[u].push((i, v, true));
        adj[v].push((i, u, false));
    }
    struct Walk<'a> {
        adj: &'a [Vec<(usize, usize, bool)>],
        start: usize,
        seen: HashSet<ElementSet>,
        out: Vec<SignedCircuit>,
    }
    fn dfs(w: &mut Walk, cur: usize, visited: u64, pos: ElementSet, neg: ElementSet) {
        for &(e, to, fwd) in &w.adj[cur] {
            if pos.contains(e) || neg.contains(e) {
                continue;
            }
            let (p, n) = if fwd { (pos.with(e), neg) } else { (pos, neg.with(e)) };
            if to == w.start {
                if w.seen.insert(p.union(n)) {
                    w.out.push(SignedCircuit::new(p, n));
                }
            } else if to > w.start && visited >> to & 1 == 0 {
                dfs(w, to, visited | 1 << to, p, n);
            }
        }
    }
    let mut w = Walk {
        adj: &adj,
        start: 0,
        seen: HashSet::new(),
        out: Vec::new(),
    };
    for s in 1..=g.n {
        w.start = s;
        dfs(&mut w, s, 1 << s, ElementSet::EMPTY, ElementSet::EMPTY);
    }
    w.out
}

fn binomial_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

/// Minimal dependent column subsets, scanned by size up to `rank + 1`.
fn vector_circuits(v: &VectorConfig, budget: u64) -> Result<Vec<SignedCircuit>> {
    let m = v.len();
    let r = v.rank_of(ElementSet::full(m));
    let top = (r + 1).min(m);
    let work: u64 = (1..=top).map(|s| binomial_u64(m, s)).fold(0, u64::saturating_add);
    if work > budget {
        return Err(Error::budget("vector circuit subset scan", budget, work));
    }
    let mut found: Vec<SignedCircuit> = Vec::new();
    for size in 1..=top {
        for s in k_subsets(m, size) {
            if found.iter().any(|c| c.support().is_subset(s)) {
                continue;
            }
            let elems = s.to_vec();
            let cols: Vec<&[Q]> = elems.iter().map(|&e| v.columns[e].as_slice()).collect();
            if let Some(dep) = rational::unique_dependency(&cols) {
                let mut pos = ElementSet::EMPTY;
                let mut neg = ElementSet::EMPTY;
                for (&e, x) in elems.iter().zip(&dep) {
                    match rational::sign(x) {
                        1 => pos.insert(e),
                        -1 => neg.insert(e),
                        _ => unreachable!("proper subsets of a minimal dependent set are independent"),
                    }
                }
                found.push(SignedCircuit::new(pos, neg));
            }
        }
    }
    Ok(found)
}

fn type_b_roots(n: usize) -> (VectorConfig, Vec<String>) {
    let unit = |i: usize, s: i64, j: Option<usize>| {
        let mut c = vec![Q::zero(); n];
        c[i - 1] = q_int(1);
        if let Some(j) = j {
            c[j - 1] = q_int(s);
        }
        c
    };
    let mut cols = Vec::new();
    let mut labels = Vec::new();
    for i in 1..=n {
        cols.push(unit(i, 0, None));
        labels.push(format!("e{i}"));
    }
    for &(i, j) in &complete_edges(n) {
        cols.push(unit(i, -1, Some(j)));
        labels.push(format!("e{i}-e{j}"));
    }
    for &(i, j) in &complete_edges(n) {
        cols.push(unit(i, 1, Some(j)));
        labels.push(format!("e{i}+e{j}"));
    }
    (
        VectorConfig {
            dimension: n,
            columns: cols,
        },
        labels,
    )
}

/// `n` lines through the origin in angular order: rank 2, every triple a
/// circuit with the middle element on the negative side.
fn dihedral(n: usize) -> OrientedMatroid {
    let mut signed = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                signed.push(SignedCircuit::new(
                    ElementSet::singleton(i).with(k),
                    ElementSet::singleton(j),
                ));
            }
        }
    }
    let labels = (1..=n).map(|i| format!("r{i}")).collect();
    OrientedMatroid::assemble(
        GroundSet::labeled(labels).expect("distinct labels"),
        signed,
        Representation::Abstract,
    )
}

/// Bonds of the subgraph on `mask` whose edges all cross in one direction.
fn graphic_positive_cocircuits(g: &DirectedGraph, mask: ElementSet) -> Vec<ElementSet> {
    let edges: Vec<(usize, usize, usize)> = mask
        .iter()
        .map(|e| (e, g.edges[e].0 - 1, g.edges[e].1 - 1))
        .collect();
    let n = g.n;
    let mut uf = UnionFind::new(n);
    for &(_, u, v) in &edges {
        uf.union(u, v);
    }
    let connected = |verts: u32| -> bool {
        let Some(start) = (0..n).find(|&v| verts >> v & 1 == 1) else {
            return false;
        };
        let mut reach = 1u32 << start;
        loop {
            let mut next = reach;
            for &(_, u, v) in &edges {
                if verts >> u & 1 == 1 && verts >> v & 1 == 1 {
                    if reach >> u & 1 == 1 {
                        next |= 1 << v;
                    }
                    if reach >> v & 1 == 1 {
                        next |= 1 << u;
                    }
                }
            }
            if next == reach {
                return reach == verts;
            }
            reach = next;
        }
    };
    let mut out = Vec::new();
    let mut roots: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
    roots.sort_unstable();
    roots.dedup();
    for root in roots {
        let comp: Vec<usize> = (0..n).filter(|&v| uf.find(v) == root).collect();
        if comp.len() < 2 {
            continue;
        }
        let all: u32 = comp.iter().map(|&v| 1u32 << v).sum();
        let rest = &comp[1..];
        for bits in 0u32..(1u32 << rest.len()) {
            let mut side = 1u32 << comp[0];
            for (i, &v) in rest.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    side |= 1 << v;
                }
            }
            if side == all || !connected(side) || !connected(all & !side) {
                continue;
            }
            let mut out_edges = ElementSet::EMPTY;
            let mut in_edges = ElementSet::EMPTY;
            for &(e, u, v) in &edges {
                match (side >> u & 1 == 1, side >> v & 1 == 1) {
                    (true, false) => out_edges.insert(e),
                    (false, true) => in_edges.insert(e),
                    _ => {}
                }
            }
            if out_edges.is_empty() != in_edges.is_empty() {
                out.push(out_edges.union(in_edges));
            }
        }
    }
    out
}

/// For each hyperplane of the restriction, the linear functional vanishing on
/// it (in coordinates of a basis of the restriction); kept when one-signed.
fn vector_positive_cocircuits(v: &VectorConfig, m: &Matroid, mask: ElementSet) -> Vec<ElementSet> {
    let basis = m.greedy_basis(mask);
    let r = basis.len();
    if r == 0 {
        return Vec::new();
    }
    let bcols: Vec<&[Q]> = basis.iter().map(|e| v.columns[e].as_slice()).collect();
    // coordinates of each element of the mask in the chosen basis
    let coords: Vec<(usize, Vec<Q>)> = mask
        .iter()
        .map(|e| {
            let mut cols = bcols.clone();
            cols.push(&v.columns[e]);
            let dep = rational::unique_dependency(&cols).filter(|d| !d[r].is_zero());
            let c = match dep {
                Some(d) => {
                    let s = -d[r].clone();
                    d[..r].iter().map(|x| x / &s).collect()
                }
                None => {
                    // e is itself a basis element
                    let pos = basis.iter().position(|b| b == e).expect("spanned by basis");
                    let mut c = vec![Q::zero(); r];
                    c[pos] = q_int(1);
                    c
                }
            };
            (e, c)
        })
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let n = coords.len();
    for pick in k_subsets(n, r - 1) {
        let rows: Vec<Vec<Q>> = pick.iter().map(|i| coords[i].1.clone()).collect();
        let ker = rational::kernel(&rows, r);
        if ker.len() != 1 {
            continue;
        }
        let y = &ker[0];
        let vals: Vec<i8> = coords.iter().map(|(_, c)| rational::sign(&rational::dot(y, c))).collect();
        let flat: ElementSet = coords
            .iter()
            .zip(&vals)
            .filter(|(_, s)| **s == 0)
            .map(|((e, _), _)| *e)
            .collect();
        if !seen.insert(flat) {
            continue;
        }
        let has_pos = vals.contains(&1);
        let has_neg = vals.contains(&-1);
        if has_pos != has_neg {
            out.push(mask.difference(flat));
        }
    }
    out
}

/// Disjoint-set forest over `0..n`.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub(crate) fn partition(&mut self) -> SetPartition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|i| self.find(i)).collect();
        SetPartition::from_labels(&labels)
    }
}

/// Ordered set of supports, handy for comparing circuit systems.
pub fn support_set(om: &OrientedMatroid) -> BTreeSet<ElementSet> {
    om.signed_circuits().iter().map(|c| c.support()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn t3() -> OrientedMatroid {
        OrientedMatroid::from_digraph(&DirectedGraph::tournament(3))
    }

    #[test]
    fn tournament_edge_order() {
        assert_eq!(complete_edges(3), vec![(1, 2), (2, 3), (1, 3)]);
        for n in 2..8 {
            for (i, &(a, b)) in complete_edges(n).iter().enumerate() {
                assert_eq!(complete_edge_index(n, a, b), i);
            }
        }
    }

    #[test]
    fn three_tournament_circuit() {
        let om = t3();
        assert_eq!(om.signed_circuits(), &[SignedCircuit::new(set(&[0, 1]), set(&[2]))]);
        assert_eq!(om.rank(), 2);
        assert!(om.is_acyclic());
        assert_eq!(om.underlying().parallel_classes().num_blocks(), 3);
        assert!(om.underlying().is_loopless());
        assert_eq!(om.connected_components().num_blocks(), 1);
    }

    #[test]
    fn forest_and_parallel_edges() {
        let path = OrientedMatroid::from_digraph(&DirectedGraph::new(3, vec![(1, 2), (2, 3)]).unwrap());
        assert!(path.signed_circuits().is_empty());
        assert_eq!(path.connected_components().num_blocks(), 2);
        let par = OrientedMatroid::from_digraph(&DirectedGraph::new(2, vec![(1, 2), (1, 2)]).unwrap());
        assert_eq!(par.signed_circuits(), &[SignedCircuit::new(set(&[0]), set(&[1]))]);
        assert_eq!(par.underlying().parallel_classes().num_blocks(), 1);
        assert!(DirectedGraph::new(2, vec![(1, 1)]).is_err());
    }

    #[test]
    fn vector_backend_matches_digraph() {
        let g = DirectedGraph::tournament(3);
        let om = OrientedMatroid::from_vectors(&g.incidence_config()).unwrap();
        assert_eq!(om.signed_circuits(), t3().signed_circuits());
        let indep = VectorConfig::new(2, vec![vec![q_int(1), q_int(0)], vec![q_int(0), q_int(1)]]).unwrap();
        assert!(OrientedMatroid::from_vectors(&indep).unwrap().signed_circuits().is_empty());
    }

    #[test]
    fn root_systems() {
        let b2 = OrientedMatroid::root_system(RootSystemId { family: Family::B, n: 2 }).unwrap();
        assert_eq!((b2.size(), b2.rank(), b2.signed_circuits().len()), (4, 2, 4));
        let b3 = OrientedMatroid::root_system(RootSystemId { family: Family::B, n: 3 }).unwrap();
        assert_eq!((b3.size(), b3.rank()), (9, 3));
        let a2 = OrientedMatroid::root_system(RootSystemId { family: Family::A, n: 2 }).unwrap();
        assert_eq!((a2.signed_circuits().len(), a2.rank()), (1, 2));
        assert_eq!(a2.signed_circuits(), t3().signed_circuits());
        let i3 = OrientedMatroid::root_system(RootSystemId { family: Family::I2, n: 3 }).unwrap();
        assert_eq!((i3.size(), i3.rank(), i3.signed_circuits().len()), (3, 2, 1));
        for n in 1..=4 {
            let a = OrientedMatroid::root_system(RootSystemId { family: Family::A, n }).unwrap();
            assert_eq!(a.rank(), n);
        }
        assert!(RootSystemId::new(Family::B, 1).is_err());
    }

    #[test]
    fn rank_and_fundamental_circuits() {
        let k4 = OrientedMatroid::from_digraph(&DirectedGraph::tournament(4));
        let m = k4.underlying();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.rank_of(ElementSet::EMPTY), 0);
        // edges: 0=12 1=23 2=34 3=13 4=24 5=14
        let basis = set(&[0, 1, 2]);
        assert_eq!(m.fundamental_circuit(basis, 5).unwrap(), set(&[0, 1, 2, 5]));
        assert_eq!(m.fundamental_circuit(basis, 3).unwrap(), set(&[0, 1, 3]));
        assert!(m.fundamental_circuit(set(&[0, 1]), 3).is_err());
    }

    #[test]
    fn positive_cocircuits_of_t3() {
        let om = t3();
        let expected = vec![set(&[0, 2]), set(&[1, 2])];
        assert_eq!(om.cocircuits_positive().unwrap(), expected);
        assert_eq!(
            om.to_abstract().cocircuits_positive().unwrap(),
            expected
        );
        let v = OrientedMatroid::from_vectors(&DirectedGraph::tournament(3).incidence_config()).unwrap();
        assert_eq!(v.cocircuits_positive().unwrap(), expected);
        let cyc = om.reorient(set(&[2]));
        assert!(!cyc.is_acyclic());
        assert!(matches!(cyc.cocircuits_positive(), Err(Error::NotAcyclic(_))));
    }

    #[test]
    fn path_cocircuits_are_single_edges() {
        let om = OrientedMatroid::from_digraph(&DirectedGraph::new(3, vec![(1, 2), (2, 3)]).unwrap());
        assert_eq!(om.cocircuits_positive().unwrap(), vec![set(&[0]), set(&[1])]);
    }

    #[test]
    fn reorientation() {
        let om = t3();
        assert_eq!(om.reorient(ElementSet::EMPTY), om);
        assert_eq!(om.reorient(om.ground().full()).signed_circuits(), om.signed_circuits());
        assert_eq!(
            om.reorient(set(&[2])).signed_circuits(),
            &[SignedCircuit::new(set(&[0, 1, 2]), ElementSet::EMPTY)]
        );
    }

    #[test]
    fn direct_sum_components() {
        let two = t3().direct_sum(&t3()).unwrap();
        assert_eq!(two.connected_components().num_blocks(), 2);
        assert_eq!(two.rank(), 4);
    }

    #[test]
    fn abstract_validation() {
        let g = GroundSet::new(3);
        let good = vec![SignedCircuit::new(set(&[0, 1]), set(&[2]))];
        assert!(OrientedMatroid::from_signed_circuits(g.clone(), good).is_ok());
        let nested = vec![set(&[0, 1]), set(&[0, 1, 2])];
        assert!(Matroid::from_circuits(g.clone(), nested).is_err());
        // {0,1},{1,2} but no {0,2}: elimination fails
        assert!(Matroid::from_circuits(g.clone(), vec![set(&[0, 1]), set(&[1, 2])]).is_err());
        // U_{2,4} with inconsistent signs fails orthogonality
        let g4 = GroundSet::new(4);
        let bad = vec![
            SignedCircuit::new(set(&[0, 2]), set(&[1])),
            SignedCircuit::new(set(&[0, 3]), set(&[1])),
            SignedCircuit::new(set(&[0, 3]), set(&[2])),
            SignedCircuit::new(set(&[1, 2]), set(&[3])),
        ];
        assert!(OrientedMatroid::from_signed_circuits(g4, bad).is_err());
    }

    #[test]
    fn rank_table_matches_greedy() {
        let m = OrientedMatroid::from_digraph(&DirectedGraph::tournament(4)).underlying().clone();
        let t = m.rank_table().unwrap();
        for s in 0..64u64 {
            assert_eq!(t[s as usize] as usize, m.rank_of(ElementSet::from_bits(s)));
        }
    }
}
