//! JSON input documents describing a matroid or oriented matroid.

use serde::Deserialize;
use serde_json::Value;

use crate::enumeration::{Mode, Problem};
use crate::error::{Error, Result};
use crate::matroid::{
    DirectedGraph, Family, VECTOR_SUBSET_BUDGET, GroundSet, Matroid, OrientedMatroid, RootSystemId, SignedCircuit, VectorConfig,
};
use crate::rational::{parse_rational, Q};
use crate::set::ElementSet;

/// A parsed input: plain matroids support only Gallai questions.
#[derive(Clone, Debug)]
pub enum Structure {
    Unoriented(Matroid),
    Oriented(OrientedMatroid),
}

impl Structure {
    pub fn matroid(&self) -> &Matroid {
        match self {
            Structure::Unoriented(m) => m,
            Structure::Oriented(om) => om.underlying(),
        }
    }

    pub fn oriented(&self) -> Option<&OrientedMatroid> {
        match self {
            Structure::Unoriented(_) => None,
            Structure::Oriented(om) => Some(om),
        }
    }

    pub fn problem(&self, mode: Mode) -> Result<Problem<'_>> {
        match (mode, self) {
            (Mode::Gallai, s) => Ok(Problem::Gallai(s.matroid())),
            (Mode::Transitive, Structure::Oriented(om)) => Ok(Problem::Transitive(om)),
            (Mode::Transitive, Structure::Unoriented(_)) => Err(Error::ModeMismatch),
        }
    }
}

#[derive(Deserialize)]
struct SignedDoc {
    pos: Vec<usize>,
    neg: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum Document {
    Digraph { n: usize, edges: Vec<(usize, usize)> },
    Graph { n: usize, edges: Vec<(usize, usize)> },
    Vectors { dimension: usize, columns: Vec<Vec<Value>> },
    Circuits { ground: usize, circuits: Vec<Vec<usize>> },
    SignedCircuits { ground: usize, circuits: Vec<SignedDoc> },
    RootSystem { family: String, n: usize },
}

fn element_set(ground: usize, items: &[usize]) -> Result<ElementSet> {
    let mut s = ElementSet::EMPTY;
    for &e in items {
        if e >= ground {
            return Err(Error::Parse(format!("element {e} outside ground set of size {ground}")));
        }
        if s.contains(e) {
            return Err(Error::Parse(format!("element {e} repeated in a circuit")));
        }
        s.insert(e);
    }
    Ok(s)
}

fn entry(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Q::from_integer(n.as_i64().unwrap().into())),
        Value::Number(n) => parse_rational(&n.to_string()),
        other => Err(Error::Parse(format!("expected a rational, found {other}"))),
    }
}

pub fn parse_family(s: &str) -> Result<Family> {
    match s {
        "A" | "a" => Ok(Family::A),
        "B" | "b" => Ok(Family::B),
        "I2" | "i2" => Ok(Family::I2),
        _ => Err(Error::Parse(format!("unknown root system family {s:?}"))),
    }
}

/// Parses an input document (see the README for the format).
pub fn parse_input(text: &str) -> Result<Structure> {
    parse_input_with_budget(text, VECTOR_SUBSET_BUDGET)
}

/// As [`parse_input`], bounding the subsets scanned for vector circuits.
pub fn parse_input_with_budget(text: &str, subset_budget: u64) -> Result<Structure> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(match doc {
        Document::Digraph { n, edges } => Structure::Oriented(OrientedMatroid::from_digraph(&DirectedGraph::new(n, edges)?)),
        Document::Graph { n, edges } => {
            let g = DirectedGraph::new(n, edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect())?;
            Structure::Unoriented(OrientedMatroid::from_digraph(&g).underlying().clone())
        }
        Document::Vectors { dimension, columns } => {
            let cols = columns
                .iter()
                .map(|c| c.iter().map(entry).collect::<Result<Vec<Q>>>())
                .collect::<Result<Vec<_>>>()?;
            Structure::Oriented(OrientedMatroid::from_vectors_with_budget(&VectorConfig::new(dimension, cols)?, subset_budget)?)
        }
        Document::Circuits { ground, circuits } => {
            let cs = circuits.iter().map(|c| element_set(ground, c)).collect::<Result<Vec<_>>>()?;
            Structure::Unoriented(Matroid::from_circuits(GroundSet::new(ground), cs)?)
        }
        Document::SignedCircuits { ground, circuits } => {
            let cs = circuits
                .iter()
                .map(|c| Ok(SignedCircuit::new(element_set(ground, &c.pos)?, element_set(ground, &c.neg)?)))
                .collect::<Result<Vec<_>>>()?;
            Structure::Oriented(OrientedMatroid::from_signed_circuits(GroundSet::new(ground), cs)?)
        }
        Document::RootSystem { family, n } => {
            Structure::Oriented(OrientedMatroid::root_system(RootSystemId::new(parse_family(&family)?, n)?)?)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documents() {
        let t = parse_input(r#"{"type":"digraph","n":3,"edges":[[1,2],[2,3],[1,3]]}"#).unwrap();
        assert_eq!(t.oriented().unwrap().signed_circuits().len(), 1);
        let g = parse_input(r#"{"type":"graph","n":3,"edges":[[2,1],[2,3],[1,3]]}"#).unwrap();
        assert!(g.oriented().is_none());
        assert_eq!(g.matroid().rank(), 2);
        assert_eq!(g.problem(Mode::Transitive).unwrap_err(), Error::ModeMismatch);
        let v = parse_input(r#"{"type":"vectors","dimension":2,"columns":[["1","0"],["0","1"],["1/2",0.5]]}"#).unwrap();
        assert_eq!(v.matroid().circuits().len(), 1);
        let c = parse_input(r#"{"type":"circuits","ground":3,"circuits":[[0,1,2]]}"#).unwrap();
        assert_eq!(c.matroid().rank(), 2);
        let s = parse_input(r#"{"type":"signed_circuits","ground":3,"circuits":[{"pos":[0,1],"neg":[2]}]}"#).unwrap();
        assert!(s.oriented().unwrap().is_acyclic());
        let r = parse_input(r#"{"type":"root_system","family":"B","n":2}"#).unwrap();
        assert_eq!(r.matroid().size(), 4);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_input("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_input(r#"{"type":"circuits","ground":2,"circuits":[[0,5]]}"#), Err(Error::Parse(_))));
        assert!(matches!(parse_input(r#"{"type":"root_system","family":"E","n":6}"#), Err(Error::Parse(_))));
        assert!(parse_input(r#"{"type":"digraph","n":2,"edges":[[1,1]]}"#).is_err());
    }
}
