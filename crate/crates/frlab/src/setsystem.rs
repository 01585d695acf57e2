//! Uniform set systems and (multi)graphs: incidence, duality, line graphs,
//! 2-shadows, girth, and the built-in generators.
//!
//! Blocks are canonicalized at construction (sorted internally, then the
//! block sequence sorted lexicographically) so that labelings are plain
//! index-aligned vectors and cross-module identities can be checked by exact
//! equality. The one deliberate exception is [`SetSystem::dual`], whose
//! blocks stay in point order: that is what makes `I(S*) = I(S)^T` hold
//! bit-exactly and `L(S*) = shadow2(S)` an equality rather than an
//! isomorphism.

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

use crate::error::{invalid, Result};

/// Constructors reject systems with more than this many incidence entries
/// (`num_points * num_blocks`); this is a desk-scale research tool.
pub const DEFAULT_INCIDENCE_CAP: usize = 1_000_000;

// ---------------------------------------------------------------------------
// SetSystem
// ---------------------------------------------------------------------------

/// An r-uniform set system: `num_points` points and a canonical sequence of
/// blocks, each a sorted set of point indices in `[0, num_points)`.
///
/// All blocks must have the same size `rho >= 2`. Regularity and linearity
/// are *checked* predicates (see [`SetSystem::validate`]), not construction
/// invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SetSystemRaw")]
pub struct SetSystem {
    num_points: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct SetSystemRaw {
    num_points: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<SetSystemRaw> for SetSystem {
    type Error = crate::Error;

    fn try_from(raw: SetSystemRaw) -> Result<Self> {
        SetSystem::new(raw.num_points, raw.blocks)
    }
}

impl SetSystem {
    /// Builds a set system, canonicalizing block order.
    pub fn new(num_points: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_cap(num_points, blocks, DEFAULT_INCIDENCE_CAP)
    }

    /// `new` with an explicit incidence-entry cap.
    pub fn with_cap(num_points: usize, blocks: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let mut blocks = Self::check_blocks(num_points, blocks, cap)?;
        blocks.sort();
        Ok(SetSystem { num_points, blocks })
    }

    /// Builds a set system keeping the given block order (used by `dual`,
    /// where the order is part of the contract).
    fn new_ordered(num_points: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let blocks = Self::check_blocks(num_points, blocks, DEFAULT_INCIDENCE_CAP)?;
        Ok(SetSystem { num_points, blocks })
    }

    fn check_blocks(
        num_points: usize,
        mut blocks: Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<Vec<Vec<usize>>> {
        if num_points
            .checked_mul(blocks.len())
            .is_none_or(|entries| entries > cap)
        {
            return Err(invalid(format!(
                "system too large: {} points x {} blocks exceeds the {} incidence-entry cap",
                num_points,
                blocks.len(),
                cap
            )));
        }
        let rho = blocks.first().map(Vec::len).unwrap_or(2);
        if rho < 2 {
            return Err(invalid("blocks must have size at least 2"));
        }
        for block in &mut blocks {
            if block.len() != rho {
                return Err(invalid(format!(
                    "non-uniform system: block sizes {} and {}",
                    rho,
                    block.len()
                )));
            }
            block.sort_unstable();
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(invalid(format!("block {:?} repeats a point", block)));
            }
            if let Some(&p) = block.last() {
                if p >= num_points {
                    return Err(invalid(format!(
                        "point {} out of range [0, {})",
                        p, num_points
                    )));
                }
            }
        }
        Ok(blocks)
    }

    /// A 2-uniform system whose blocks are the edges of a simple graph.
    pub fn from_graph(graph: &Graph) -> Result<Self> {
        if !graph.is_simple() {
            return Err(invalid("set system from graph requires a simple graph"));
        }
        // Canonical graph edges are already lex-sorted pairs.
        let blocks = graph.edges().iter().map(|&(u, v)| vec![u, v]).collect();
        Self::new_ordered(graph.num_vertices(), blocks)
    }

    /// The 2-uniform system viewed as a simple graph.
    pub fn to_graph(&self) -> Result<Graph> {
        if self.block_size() != Some(2) {
            return Err(invalid("only 2-uniform systems convert to graphs"));
        }
        Graph::new(
            self.num_points,
            self.blocks.iter().map(|b| (b[0], b[1])).collect(),
        )
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Common block size, or `None` for a blockless system.
    pub fn block_size(&self) -> Option<usize> {
        self.blocks.first().map(Vec::len)
    }

    /// Number of blocks through each point.
    pub fn point_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.num_points];
        for block in &self.blocks {
            for &p in block {
                deg[p] += 1;
            }
        }
        deg
    }

    /// `Some(alpha)` when every point lies in exactly `alpha` blocks.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.point_degrees();
        let first = *deg.first()?;
        deg.iter().all(|&d| d == first).then_some(first)
    }

    /// Uniformity, regularity, and linearity report; never fails.
    pub fn validate(&self) -> ValidationReport {
        let rho = self.block_size().unwrap_or(0);
        let alpha = self.regular_degree();
        let mut witness = None;
        'outer: for i in 0..self.blocks.len() {
            for j in (i + 1)..self.blocks.len() {
                if intersection_size(&self.blocks[i], &self.blocks[j]) > 1 {
                    witness = Some((i, j));
                    break 'outer;
                }
            }
        }
        ValidationReport {
            uniform: true,
            rho,
            regular: alpha.is_some(),
            alpha,
            linear: witness.is_none(),
            linear_witness: witness,
        }
    }

    pub fn is_linear(&self) -> bool {
        self.validate().linear
    }

    /// Binary point-by-block incidence matrix.
    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let mut m = IncidenceMatrix::zero(self.num_points, self.blocks.len());
        for (e, block) in self.blocks.iter().enumerate() {
            for &p in block {
                m.set(p, e);
            }
        }
        m
    }

    /// Dual system: one point per block, one block per point, with
    /// `I(dual) = I(self)^T`. Dual blocks are kept in point order.
    pub fn dual(&self) -> SetSystem {
        let mut blocks = vec![Vec::new(); self.num_points];
        for (e, block) in self.blocks.iter().enumerate() {
            for &p in block {
                blocks[p].push(e);
            }
        }
        SetSystem {
            num_points: self.blocks.len(),
            blocks,
        }
    }

    /// Line graph: one vertex per block, edge multiplicity `|e ∩ e'|`.
    /// Simple exactly when the system is linear.
    pub fn line_graph(&self) -> Graph {
        let theta = self.blocks.len();
        let mut edges = Vec::new();
        let mut multiplicity = Vec::new();
        for i in 0..theta {
            for j in (i + 1)..theta {
                let m = intersection_size(&self.blocks[i], &self.blocks[j]);
                if m > 0 {
                    edges.push((i, j));
                    multiplicity.push(m as u64);
                }
            }
        }
        Graph {
            num_vertices: theta,
            edges,
            multiplicity,
        }
    }

    /// 2-shadow: the simple graph of all point pairs covered by some block.
    pub fn shadow2(&self) -> Graph {
        let mut pairs = Vec::new();
        for block in &self.blocks {
            for i in 0..block.len() {
                for j in (i + 1)..block.len() {
                    pairs.push((block[i], block[j]));
                }
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        let multiplicity = vec![1; pairs.len()];
        Graph {
            num_vertices: self.num_points,
            edges: pairs,
            multiplicity,
        }
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    // Both sorted.
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Result of [`SetSystem::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub uniform: bool,
    pub rho: usize,
    pub regular: bool,
    pub alpha: Option<usize>,
    pub linear: bool,
    /// First pair of block indices sharing more than one point.
    pub linear_witness: Option<(usize, usize)>,
}

// ---------------------------------------------------------------------------
// IncidenceMatrix
// ---------------------------------------------------------------------------

/// Binary incidence matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl IncidenceMatrix {
    fn zero(rows: usize, cols: usize) -> Self {
        IncidenceMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.cols + j] = 1;
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as usize).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j) as usize).sum())
            .collect()
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        let mut t = IncidenceMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) == 1 {
                    t.set(j, i);
                }
            }
        }
        t
    }
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// Undirected multigraph. Edges are stored as canonical pairs `(u, v)` with
/// `u < v`, sorted lexicographically and deduplicated; parallel edges are
/// multiplicity counts, never repeated entries. No self-loops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRaw", into = "GraphRaw")]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    multiplicity: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphRaw {
    num_vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplicity: Option<Vec<u64>>,
}

impl TryFrom<GraphRaw> for Graph {
    type Error = crate::Error;

    fn try_from(raw: GraphRaw) -> Result<Self> {
        let edges: Vec<(usize, usize)> = raw.edges.iter().map(|&[u, v]| (u, v)).collect();
        match raw.multiplicity {
            Some(mult) => Graph::new_with_multiplicity(raw.num_vertices, edges, mult),
            None => Graph::new(raw.num_vertices, edges),
        }
    }
}

impl From<Graph> for GraphRaw {
    fn from(g: Graph) -> GraphRaw {
        let simple = g.is_simple();
        GraphRaw {
            num_vertices: g.num_vertices,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
            multiplicity: if simple { None } else { Some(g.multiplicity) },
        }
    }
}

impl Graph {
    /// Simple-graph constructor; duplicate pairs merge into multiplicities.
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mult = vec![1; edges.len()];
        Self::new_with_multiplicity(num_vertices, edges, mult)
    }

    pub fn new_with_multiplicity(
        num_vertices: usize,
        edges: Vec<(usize, usize)>,
        multiplicity: Vec<u64>,
    ) -> Result<Self> {
        if edges.len() != multiplicity.len() {
            return Err(invalid("edge and multiplicity lists differ in length"));
        }
        let mut pairs: Vec<((usize, usize), u64)> = Vec::with_capacity(edges.len());
        for (&(u, v), &m) in edges.iter().zip(&multiplicity) {
            if u == v {
                return Err(invalid(format!("self-loop at vertex {}", u)));
            }
            if u >= num_vertices || v >= num_vertices {
                return Err(invalid(format!(
                    "edge ({}, {}) out of range [0, {})",
                    u, v, num_vertices
                )));
            }
            if m == 0 {
                return Err(invalid("edge multiplicity must be positive"));
            }
            pairs.push(((u.min(v), u.max(v)), m));
        }
        pairs.sort_unstable();
        let mut merged: Vec<((usize, usize), u64)> = Vec::with_capacity(pairs.len());
        for (pair, m) in pairs {
            match merged.last_mut() {
                Some((last, lm)) if *last == pair => *lm += m,
                _ => merged.push((pair, m)),
            }
        }
        Ok(Graph {
            num_vertices,
            edges: merged.iter().map(|&(p, _)| p).collect(),
            multiplicity: merged.iter().map(|&(_, m)| m).collect(),
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Canonical edge list (distinct pairs, lex order).
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicity
    }

    /// Number of distinct edge slots (parallel edges count once).
    pub fn num_edge_slots(&self) -> usize {
        self.edges.len()
    }

    /// Total edge count, parallel edges included.
    pub fn num_edges(&self) -> u64 {
        self.multiplicity.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.multiplicity.iter().all(|&m| m == 1)
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.num_vertices];
        for (&(u, v), &m) in self.edges.iter().zip(&self.multiplicity) {
            deg[u] += m;
            deg[v] += m;
        }
        deg
    }

    /// `Some(d)` when every vertex has degree `d` (multiplicity-weighted).
    pub fn regular_degree(&self) -> Option<u64> {
        let deg = self.degrees();
        let first = *deg.first()?;
        deg.iter().all(|&d| d == first).then_some(first)
    }

    /// Neighbor lists `(vertex, multiplicity)`, ascending by vertex.
    pub fn adjacency(&self) -> Vec<Vec<(usize, u64)>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for (&(u, v), &m) in self.edges.iter().zip(&self.multiplicity) {
            adj[u].push((v, m));
            adj[v].push((u, m));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let pair = (u.min(v), u.max(v));
        self.edges.binary_search(&pair).is_ok()
    }

    /// Length of the shortest cycle; `None` for forests. A parallel edge is
    /// a cycle of length 2.
    pub fn girth(&self) -> Option<usize> {
        if self.multiplicity.iter().any(|&m| m >= 2) {
            return Some(2);
        }
        let adj = self.adjacency();
        let mut best: Option<usize> = None;
        for start in 0..self.num_vertices {
            let mut dist = vec![usize::MAX; self.num_vertices];
            let mut parent = vec![usize::MAX; self.num_vertices];
            let mut queue = VecDeque::new();
            dist[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // Cycles through `start` found from here on are no shorter.
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for &(w, _) in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    // -- generators ---------------------------------------------------------

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        let multiplicity = vec![1; edges.len()];
        Graph {
            num_vertices: n,
            edges,
            multiplicity,
        }
    }

    /// Turán graph `T(n, r)` with `r | n`: complete r-partite, parts are the
    /// consecutive index ranges of size `n/r`.
    pub fn turan(n: usize, r: usize) -> Result<Graph> {
        if r < 2 || r > n || n % r != 0 {
            return Err(invalid(format!(
                "turan({}, {}) requires r >= 2 and r | n",
                n, r
            )));
        }
        let part = n / r;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if u / part != v / part {
                    edges.push((u, v));
                }
            }
        }
        let multiplicity = vec![1; edges.len()];
        Ok(Graph {
            num_vertices: n,
            edges,
            multiplicity,
        })
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(invalid(format!("cycle({}) requires n >= 3", n)));
        }
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::new(n, edges)
    }

    /// `m` disjoint copies of `base`, each copy on a consecutive index range.
    pub fn m_copies(base: &Graph, m: usize) -> Result<Graph> {
        if m == 0 {
            return Err(invalid("m_copies requires m >= 1"));
        }
        Graph::disjoint_union(&vec![base.clone(); m])
    }

    /// Disjoint union; the i-th part occupies the next consecutive range.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut multiplicity = Vec::new();
        let mut offset = 0;
        for g in parts {
            for (&(u, v), &m) in g.edges.iter().zip(&g.multiplicity) {
                edges.push((u + offset, v + offset));
                multiplicity.push(m);
            }
            offset += g.num_vertices;
        }
        Graph::new_with_multiplicity(offset, edges, multiplicity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_system() -> SetSystem {
        SetSystem::from_graph(&Graph::complete(4)).unwrap()
    }

    fn cycle_system(n: usize) -> SetSystem {
        SetSystem::from_graph(&Graph::cycle(n).unwrap()).unwrap()
    }

    /// Complete 3-uniform system on 4 points: 3-regular, non-linear.
    pub(crate) fn nonlinear_regular() -> SetSystem {
        SetSystem::new(
            4,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn canonicalizes_blocks() {
        let s = SetSystem::new(4, vec![vec![2, 1], vec![1, 0], vec![3, 0]]).unwrap();
        assert_eq!(s.blocks(), &[vec![0, 1], vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn rejects_bad_blocks() {
        assert!(SetSystem::new(3, vec![vec![0, 0]]).is_err());
        assert!(SetSystem::new(3, vec![vec![0, 3]]).is_err());
        assert!(SetSystem::new(3, vec![vec![0, 1], vec![0, 1, 2]]).is_err());
        assert!(SetSystem::new(3, vec![vec![0]]).is_err());
    }

    #[test]
    fn size_guard() {
        let blocks = vec![vec![0, 1]; 2];
        assert!(SetSystem::new(DEFAULT_INCIDENCE_CAP, blocks.clone()).is_err());
        assert!(SetSystem::with_cap(3, blocks.clone(), 5).is_err());
        assert!(SetSystem::with_cap(3, blocks, 6).is_ok());
    }

    #[test]
    fn validate_k4() {
        let report = k4_system().validate();
        assert!(report.uniform && report.rho == 2);
        assert!(report.regular && report.alpha == Some(3));
        assert!(report.linear);
    }

    #[test]
    fn validate_nonlinear_witness() {
        let s = SetSystem::new(5, vec![vec![1, 2, 3], vec![1, 2, 4]]).unwrap();
        let report = s.validate();
        assert!(!report.linear);
        assert_eq!(report.linear_witness, Some((0, 1)));
    }

    #[test]
    fn validate_c5() {
        let report = cycle_system(5).validate();
        assert_eq!((report.rho, report.alpha, report.linear), (2, Some(2), true));
    }

    #[test]
    fn incidence_triangle_and_k4() {
        let tri = cycle_system(3).incidence_matrix();
        assert_eq!((tri.rows(), tri.cols()), (3, 3));
        assert_eq!(tri.row_sums(), vec![2, 2, 2]);
        assert_eq!(tri.col_sums(), vec![2, 2, 2]);

        let k4 = k4_system().incidence_matrix();
        assert_eq!((k4.rows(), k4.cols()), (4, 6));
        assert_eq!(k4.row_sums(), vec![3, 3, 3, 3]);
        assert_eq!(k4.col_sums(), vec![2; 6]);
    }

    #[test]
    fn incidence_single_triple() {
        let s = SetSystem::new(3, vec![vec![0, 1, 2]]).unwrap();
        let m = s.incidence_matrix();
        assert_eq!((m.rows(), m.cols()), (3, 1));
        assert_eq!(m.row_sums(), vec![1, 1, 1]);
    }

    #[test]
    fn dual_transposes_incidence() {
        for s in [k4_system(), cycle_system(5), nonlinear_regular()] {
            let d = s.dual();
            assert_eq!(d.incidence_matrix(), s.incidence_matrix().transpose());
            // Involution.
            assert_eq!(d.dual().incidence_matrix(), s.incidence_matrix());
        }
    }

    #[test]
    fn dual_of_k4_parameters() {
        let d = k4_system().dual();
        assert_eq!(d.num_points(), 6);
        assert_eq!(d.num_blocks(), 4);
        assert_eq!(d.block_size(), Some(3));
        assert_eq!(d.regular_degree(), Some(2));
    }

    #[test]
    fn dual_of_fano_is_symmetric() {
        let fano = SetSystem::new(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap();
        assert!(fano.is_linear());
        let d = fano.dual();
        assert_eq!((d.num_points(), d.num_blocks()), (7, 7));
        assert_eq!(d.block_size(), Some(3));
        assert_eq!(d.regular_degree(), Some(3));
        assert_eq!(d.incidence_matrix().row_sums(), vec![3; 7]);
        assert_eq!(d.incidence_matrix().col_sums(), vec![3; 7]);
    }

    #[test]
    fn line_graph_of_cycle_is_cycle() {
        let lg = cycle_system(5).line_graph();
        assert_eq!(lg.num_vertices(), 5);
        assert_eq!(lg.regular_degree(), Some(2));
        assert_eq!(lg.girth(), Some(5));
    }

    #[test]
    fn line_graph_of_k4() {
        let lg = k4_system().line_graph();
        assert_eq!(lg.num_vertices(), 6);
        assert_eq!(lg.regular_degree(), Some(4));
        assert_eq!(lg.num_edges(), 12);
        assert!(lg.is_simple());
    }

    #[test]
    fn line_graph_multiplicity_for_nonlinear() {
        let s = SetSystem::new(5, vec![vec![1, 2, 3], vec![1, 2, 4]]).unwrap();
        let lg = s.line_graph();
        assert_eq!(lg.edges(), &[(0, 1)]);
        assert_eq!(lg.multiplicities(), &[2]);
    }

    #[test]
    fn line_graph_regularity_identity() {
        // rho(alpha - 1)-regular for alpha-regular rho-uniform linear systems.
        for (s, rho, alpha) in [
            (k4_system(), 2u64, 3u64),
            (cycle_system(6), 2, 2),
            (
                SetSystem::from_graph(&Graph::turan(6, 3).unwrap()).unwrap(),
                2,
                4,
            ),
        ] {
            assert_eq!(s.line_graph().regular_degree(), Some(rho * (alpha - 1)));
        }
    }

    #[test]
    fn shadow2_of_2_uniform_is_identity() {
        let s = cycle_system(6);
        assert_eq!(s.shadow2(), s.to_graph().unwrap());
    }

    #[test]
    fn shadow2_of_triple_is_triangle() {
        let s = SetSystem::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(s.shadow2(), Graph::cycle(3).unwrap());
    }

    #[test]
    fn figure1_identity_line_of_dual_is_shadow() {
        for s in [k4_system(), cycle_system(5)] {
            assert_eq!(s.dual().line_graph(), s.shadow2());
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(Graph::cycle(5).unwrap().girth(), Some(5));
        assert_eq!(Graph::complete(4).girth(), Some(3));
        assert_eq!(Graph::turan(6, 2).unwrap().girth(), Some(4)); // K_{3,3}
        let path = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), None);
    }

    #[test]
    fn girth_of_generators() {
        for n in 3..10 {
            assert_eq!(Graph::cycle(n).unwrap().girth(), Some(n));
        }
        assert_eq!(Graph::turan(9, 3).unwrap().girth(), Some(3));
        assert_eq!(Graph::turan(8, 2).unwrap().girth(), Some(4));
    }

    #[test]
    fn turan_6_3_shape() {
        let g = Graph::turan(6, 3).unwrap();
        assert_eq!(g.num_edges(), 12);
        assert_eq!(g.regular_degree(), Some(4));
    }

    #[test]
    fn turan_n_n_is_complete() {
        assert_eq!(Graph::turan(4, 4).unwrap(), Graph::complete(4));
    }

    #[test]
    fn turan_rejects_bad_params() {
        assert!(Graph::turan(7, 3).is_err());
        assert!(Graph::turan(4, 1).is_err());
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn m_copies_shape() {
        let g = Graph::m_copies(&Graph::complete(4), 3).unwrap();
        assert_eq!(g.num_vertices(), 12);
        assert_eq!(g.num_edges(), 18);
        // Three components: no edges across the ranges of size 4.
        assert!(g.edges().iter().all(|&(u, v)| u / 4 == v / 4));
    }

    #[test]
    fn graph_merges_parallel_edges() {
        let g = Graph::new(3, vec![(1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.multiplicities(), &[2, 1]);
        assert!(!g.is_simple());
    }

    #[test]
    fn json_round_trip_is_canonical_and_stable() {
        let json = r#"{"num_points":4,"blocks":[[2,1],[0,1],[3,2]]}"#;
        let s: SetSystem = serde_json::from_str(json).unwrap();
        let out = serde_json::to_string(&s).unwrap();
        let s2: SetSystem = serde_json::from_str(&out).unwrap();
        assert_eq!(out, serde_json::to_string(&s2).unwrap());
        assert_eq!(out, r#"{"num_points":4,"blocks":[[0,1],[1,2],[2,3]]}"#);

        let gjson = r#"{"num_vertices":3,"edges":[[1,0],[1,2],[0,1]]}"#;
        let g: Graph = serde_json::from_str(gjson).unwrap();
        let gout = serde_json::to_string(&g).unwrap();
        let g2: Graph = serde_json::from_str(&gout).unwrap();
        assert_eq!(gout, serde_json::to_string(&g2).unwrap());
        assert_eq!(
            gout,
            r#"{"num_vertices":3,"edges":[[0,1],[1,2]],"multiplicity":[2,1]}"#
        );
    }
}
