//! Set partitions in restricted-growth form, and colorings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;

const RGS_DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// A set partition of `0..m`, stored as its restricted growth string: element
/// `e` lies in block `rgs[e]`, and blocks are numbered by first occurrence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    rgs: Vec<u8>,
    blocks: usize,
}

impl SetPartition {
    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self> {
        let mut next = 0u8;
        for &b in &rgs {
            if b > next {
                return Err(Error::invalid(format!("{rgs:?} is not a restricted growth string")));
            }
            if b == next {
                next += 1;
            }
        }
        Ok(SetPartition {
            rgs,
            blocks: next as usize,
        })
    }

    pub(crate) fn from_rgs_unchecked(rgs: &[u8], blocks: usize) -> Self {
        SetPartition {
            rgs: rgs.to_vec(),
            blocks,
        }
    }

    /// Canonicalizes arbitrary block labels.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut seen: Vec<&T> = Vec::new();
        let rgs = labels
            .iter()
            .map(|l| match seen.iter().position(|s| *s == l) {
                Some(i) => i as u8,
                None => {
                    seen.push(l);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        SetPartition {
            rgs,
            blocks: seen.len(),
        }
    }

    pub fn from_blocks(m: usize, blocks: &[ElementSet]) -> Result<Self> {
        let mut labels = vec![usize::MAX; m];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::invalid("empty block"));
            }
            for e in b.iter() {
                if e >= m || labels[e] != usize::MAX {
                    return Err(Error::invalid(format!("element {e} repeated or out of range")));
                }
                labels[e] = i;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::invalid("blocks do not cover the ground set"));
        }
        Ok(SetPartition::from_labels(&labels))
    }

    /// Parses `"00102"`; digits beyond 9 use `a..z`, or a comma-separated list.
    pub fn parse(s: &str) -> Result<Self> {
        let rgs: Option<Vec<u8>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.bytes()
                .map(|c| RGS_DIGITS.iter().position(|&d| d == c).map(|p| p as u8))
                .collect()
        };
        let rgs = rgs.ok_or_else(|| Error::Parse(format!("bad partition string {s:?}")))?;
        SetPartition::from_rgs(rgs).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn len(&self) -> usize {
        self.rgs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rgs.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks
    }

    pub fn block_of(&self, e: usize) -> usize {
        self.rgs[e] as usize
    }

    /// Blocks ordered by minimum element.
    pub fn blocks(&self) -> Vec<ElementSet> {
        let mut out = vec![ElementSet::EMPTY; self.blocks];
        for (e, &b) in self.rgs.iter().enumerate() {
            out[b as usize].insert(e);
        }
        out
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks().iter().map(|b| b.len()).collect()
    }

    pub fn to_rgs_string(&self) -> String {
        if self.blocks <= RGS_DIGITS.len() {
            self.rgs.iter().map(|&b| RGS_DIGITS[b as usize] as char).collect()
        } else {
            let parts: Vec<String> = self.rgs.iter().map(|b| b.to_string()).collect();
            parts.join(",")
        }
    }

    /// Restriction to the elements of `s`, relabelled `0..|s|`.
    pub fn restrict(&self, s: ElementSet) -> SetPartition {
        let labels: Vec<u8> = s.iter().map(|e| self.rgs[e]).collect();
        SetPartition::from_labels(&labels)
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({})", self.to_rgs_string())
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_rgs_string())
    }
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_rgs_string())
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        SetPartition::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Element-to-color map with colors `0..k`. Serialized 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    values: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(values: Vec<usize>, k: usize) -> Result<Self> {
        if let Some(&v) = values.iter().find(|&&v| v >= k) {
            return Err(Error::invalid(format!("color {v} outside palette of size {k}")));
        }
        Ok(Coloring { values, k })
    }

    /// Colors blocks `0..` in order.
    pub fn from_partition(p: &SetPartition) -> Self {
        Coloring {
            values: p.rgs().iter().map(|&b| b as usize).collect(),
            k: p.num_blocks(),
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn get(&self, e: usize) -> usize {
        self.values[e]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn palette(&self) -> usize {
        self.k
    }

    pub fn colors_used(&self) -> usize {
        let mut v = self.values.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    }

    pub fn partition(&self) -> SetPartition {
        SetPartition::from_labels(&self.values)
    }

    /// Colors of the elements of `s`, as a bitmask over colors (palette ≤ 64).
    pub fn color_mask(&self, s: ElementSet) -> u64 {
        s.iter().fold(0, |m, e| m | 1u64 << self.values[e])
    }
}

impl Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let one_based: Vec<usize> = self.values.iter().map(|v| v + 1).collect();
        one_based.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rgs_round_trip() {
        let p = SetPartition::parse("00102").unwrap();
        assert_eq!(p.num_blocks(), 3);
        assert_eq!(p.to_rgs_string(), "00102");
        let b = p.blocks();
        assert_eq!(b[0].to_vec(), vec![0, 1, 3]);
        assert_eq!(SetPartition::from_blocks(5, &b).unwrap(), p);
        assert!(SetPartition::parse("010").is_ok());
        assert!(SetPartition::parse("0201").is_err());
        assert!(SetPartition::parse("1").is_err());
    }

    #[test]
    fn labels_canonicalize() {
        let p = SetPartition::from_labels(&[5, 5, 2, 5, 9]);
        assert_eq!(p.to_rgs_string(), "00102");
        let c = Coloring::new(vec![2, 2, 0, 2, 1], 3).unwrap();
        assert_eq!(c.partition(), p);
        assert_eq!(c.colors_used(), 3);
        assert_eq!(serde_json::to_string(&c).unwrap(), "[3,3,1,3,2]");
        assert!(Coloring::new(vec![3], 3).is_err());
    }

    #[test]
    fn restriction() {
        let p = SetPartition::parse("01210").unwrap();
        let s: ElementSet = [1, 2, 3].into_iter().collect();
        assert_eq!(p.restrict(s).to_rgs_string(), "010");
    }
}
