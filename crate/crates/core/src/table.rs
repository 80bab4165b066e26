//! Partial tables indexed by composable pairs and triples of edges in a finite graph.
//!
//! Composition of morphisms, of displayed morphisms, of horizontal morphisms
//! and of squares all share this shape: the edges are the cells, the nodes are
//! their boundaries, and a value is stored for each pair `(f, g)` with
//! `tgt f = src g`. Entries for pairs that are not composable are kept aside
//! so that validators can report them.

use crate::error::{check_index, Error, Result};

/// An edge of the indexing graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub tgt: usize,
}

impl Edge {
    pub fn new(src: usize, tgt: usize) -> Self {
        Edge { src, tgt }
    }
}

#[derive(Clone, Debug)]
pub struct PairTable {
    nodes: usize,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
    pos: Vec<usize>,
    offset: Vec<usize>,
    entries: Vec<Option<usize>>,
    stray: Vec<(usize, usize, usize)>,
}

impl PartialEq for PairTable {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes
            && self.edges == other.edges
            && self.entries == other.entries
            && self.stray == other.stray
    }
}

impl Eq for PairTable {}

impl PairTable {
    /// An empty table. Edge endpoints must be below `nodes`.
    pub fn new(nodes: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut out = vec![Vec::new(); nodes];
        let mut pos = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            check_index("edge source", e.src, nodes)?;
            check_index("edge target", e.tgt, nodes)?;
            pos.push(out[e.src].len());
            out[e.src].push(i);
        }
        let mut offset = Vec::with_capacity(edges.len() + 1);
        let mut acc = 0;
        for e in &edges {
            offset.push(acc);
            acc += out[e.tgt].len();
        }
        offset.push(acc);
        Ok(PairTable { nodes, edges, out, pos, offset, entries: vec![None; acc], stray: Vec::new() })
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges leaving `node`, in index order.
    pub fn out(&self, node: usize) -> &[usize] {
        &self.out[node]
    }

    /// Position of edge `e` among the edges leaving its source.
    pub fn position(&self, e: usize) -> usize {
        self.pos[e]
    }

    /// Number of composable pairs.
    pub fn pair_count(&self) -> usize {
        self.entries.len()
    }

    pub fn composable(&self, f: usize, g: usize) -> bool {
        f < self.edges.len() && g < self.edges.len() && self.edges[f].tgt == self.edges[g].src
    }

    /// Dense index of the composable pair `(f, g)`.
    pub fn slot(&self, f: usize, g: usize) -> Option<usize> {
        if self.composable(f, g) {
            Some(self.offset[f] + self.pos[g])
        } else {
            None
        }
    }

    /// The pair stored at a dense index.
    pub fn pair_at(&self, slot: usize) -> (usize, usize) {
        let f = self.offset.partition_point(|&o| o <= slot) - 1;
        let g = self.out[self.edges[f].tgt][slot - self.offset[f]];
        (f, g)
    }

    pub fn get(&self, f: usize, g: usize) -> Option<usize> {
        self.slot(f, g).and_then(|s| self.entries[s])
    }

    pub fn get_slot(&self, slot: usize) -> Option<usize> {
        self.entries[slot]
    }

    /// Stores an entry. Entries for non-composable pairs are kept as strays.
    pub fn insert(&mut self, table: &'static str, f: usize, g: usize, value: usize) -> Result<()> {
        check_index(table, f, self.edges.len())?;
        check_index(table, g, self.edges.len())?;
        match self.slot(f, g) {
            Some(s) => {
                if self.entries[s].is_some() {
                    return Err(Error::DuplicateEntry { table, key: vec![f, g] });
                }
                self.entries[s] = Some(value);
            }
            None => {
                if self.stray.iter().any(|&(a, b, _)| a == f && b == g) {
                    return Err(Error::DuplicateEntry { table, key: vec![f, g] });
                }
                self.stray.push((f, g, value));
            }
        }
        Ok(())
    }

    /// Overwrites the entry of a composable pair.
    pub fn set(&mut self, f: usize, g: usize, value: Option<usize>) {
        let s = self.slot(f, g).expect("set on a non-composable pair");
        self.entries[s] = value;
    }

    /// Entries stored for pairs that are not composable.
    pub fn stray(&self) -> &[(usize, usize, usize)] {
        &self.stray
    }

    /// All composable pairs in slot order, with their entries.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, Option<usize>)> + '_ {
        self.edges.iter().enumerate().flat_map(move |(f, e)| {
            self.out[e.tgt].iter().map(move |&g| (f, g, self.entries[self.offset[f] + self.pos[g]]))
        })
    }

    /// Stored entries, composable ones first in slot order, then strays.
    pub fn defined(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.iter()
            .filter_map(|(f, g, v)| v.map(|v| (f, g, v)))
            .chain(self.stray.iter().copied())
    }
}

/// A partial table indexed by composable triples `(f, g, h)` of a [`PairTable`]'s graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleTable<T> {
    offset: Vec<usize>,
    entries: Vec<Option<T>>,
}

impl<T: Clone> TripleTable<T> {
    pub fn new(pairs: &PairTable) -> Self {
        let mut offset = Vec::with_capacity(pairs.pair_count() + 1);
        let mut acc = 0;
        for (_, g, _) in pairs.iter() {
            offset.push(acc);
            acc += pairs.out(pairs.edge(g).tgt).len();
        }
        offset.push(acc);
        TripleTable { offset, entries: vec![None; acc] }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn slot(&self, pairs: &PairTable, f: usize, g: usize, h: usize) -> Option<usize> {
        let s = pairs.slot(f, g)?;
        if !pairs.composable(g, h) {
            return None;
        }
        Some(self.offset[s] + pairs.position(h))
    }

    pub fn get(&self, pairs: &PairTable, f: usize, g: usize, h: usize) -> Option<&T> {
        self.slot(pairs, f, g, h).and_then(|s| self.entries[s].as_ref())
    }

    pub fn get_slot(&self, slot: usize) -> Option<&T> {
        self.entries[slot].as_ref()
    }

    pub fn set_slot(&mut self, slot: usize, value: Option<T>) {
        self.entries[slot] = value;
    }

    /// All composable triples in slot order, with their entries.
    pub fn iter<'a>(&'a self, pairs: &'a PairTable) -> impl Iterator<Item = ((usize, usize, usize), Option<&'a T>)> + 'a {
        pairs.iter().enumerate().flat_map(move |(s, (f, g, _))| {
            let e = pairs.edge(g);
            pairs
                .out(e.tgt)
                .iter()
                .enumerate()
                .map(move |(p, &h)| ((f, g, h), self.entries[self.offset[s] + p].as_ref()))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> PairTable {
        // 0 -a-> 1 -b-> 2, plus a loop c on 1
        PairTable::new(3, vec![Edge::new(0, 1), Edge::new(1, 2), Edge::new(1, 1)]).unwrap()
    }

    #[test]
    fn slots_cover_exactly_composable_pairs() {
        let t = path3();
        let pairs: Vec<_> = t.iter().map(|(f, g, _)| (f, g)).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (2, 1), (2, 2)]);
        for (i, &(f, g)) in pairs.iter().enumerate() {
            assert_eq!(t.slot(f, g), Some(i));
            assert_eq!(t.pair_at(i), (f, g));
        }
        assert_eq!(t.slot(1, 0), None);
    }

    #[test]
    fn strays_and_duplicates() {
        let mut t = path3();
        t.insert("t", 0, 1, 7).unwrap();
        assert!(t.insert("t", 0, 1, 7).is_err());
        t.insert("t", 1, 0, 9).unwrap();
        assert_eq!(t.stray(), &[(1, 0, 9)]);
        assert_eq!(t.get(0, 1), Some(7));
        assert!(matches!(t.insert("t", 5, 0, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn triples() {
        let t = path3();
        let tt: TripleTable<usize> = TripleTable::new(&t);
        let triples: Vec<_> = tt.iter(&t).map(|(k, _)| k).collect();
        assert_eq!(triples, vec![(0, 2, 1), (0, 2, 2), (2, 2, 1), (2, 2, 2)]);
        assert_eq!(tt.slot(&t, 2, 2, 1), Some(2));
        assert_eq!(tt.slot(&t, 0, 1, 1), None);
    }
}
