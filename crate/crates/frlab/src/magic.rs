//! Supermagic (degree-magic) labelings: verification, backtracking search,
//! the Ivančo characterization for regular Turán graphs, composition of
//! labelings across edge-disjoint regular spanning subgraphs, and the
//! resulting bounds and labelings for K_{4r}.

use serde::{Deserialize, Serialize};

use crate::error::{infeasible, invalid, Result};
use crate::labeling::{variance, BlockLabeling};
use crate::minps::mkr_value;
use crate::rational::Rational;
use crate::setsystem::{Graph, SetSystem};

/// Supermagic search refuses graphs with more edges than this by default;
/// K_{4,4} (16 edges) is the largest instance the K_{4r} construction needs.
pub const DEFAULT_MAGIC_CAP: usize = 16;

/// A bijective edge labeling by consecutive integers `[lo, lo + m - 1]`,
/// index-aligned with the graph's canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EdgeLabelingRaw")]
pub struct EdgeLabeling {
    labels: Vec<u64>,
    lo: u64,
}

#[derive(Deserialize)]
struct EdgeLabelingRaw {
    labels: Vec<u64>,
}

impl TryFrom<EdgeLabelingRaw> for EdgeLabeling {
    type Error = crate::Error;

    fn try_from(raw: EdgeLabelingRaw) -> Result<Self> {
        EdgeLabeling::new(raw.labels)
    }
}

impl EdgeLabeling {
    /// Validates that the values form a set of consecutive integers.
    pub fn new(labels: Vec<u64>) -> Result<Self> {
        if labels.is_empty() {
            return Ok(EdgeLabeling { labels, lo: 1 });
        }
        let lo = *labels.iter().min().unwrap();
        let hi = *labels.iter().max().unwrap();
        if hi - lo + 1 != labels.len() as u64 {
            return Err(invalid(
                "edge labels must be distinct consecutive integers",
            ));
        }
        let mut seen = vec![false; labels.len()];
        for &l in &labels {
            let idx = (l - lo) as usize;
            if seen[idx] {
                return Err(invalid(format!("label {} repeated", l)));
            }
            seen[idx] = true;
        }
        Ok(EdgeLabeling { labels, lo })
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.lo + self.labels.len() as u64 - 1
    }

    /// Reinterprets labels `[1, theta]` as a block labeling of the
    /// corresponding 2-uniform set system (same canonical order).
    pub fn to_block_labeling(&self) -> Result<BlockLabeling> {
        if self.lo != 1 {
            return Err(invalid("block labelings start at 1"));
        }
        BlockLabeling::new(self.labels.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MagicVerdict {
    pub is_magic: bool,
    /// Common vertex sum when magic.
    pub index: Option<u64>,
    /// First vertex pair with different sums otherwise.
    pub witness: Option<(usize, usize)>,
}

fn vertex_sums(graph: &Graph, sigma: &EdgeLabeling) -> Result<Vec<u64>> {
    if !graph.is_simple() {
        return Err(invalid("edge labelings are defined on simple graphs"));
    }
    if sigma.labels.len() != graph.num_edge_slots() {
        return Err(invalid(format!(
            "labeling has {} labels for {} edges",
            sigma.labels.len(),
            graph.num_edge_slots()
        )));
    }
    let mut sums = vec![0u64; graph.num_vertices()];
    for (&(u, v), &l) in graph.edges().iter().zip(&sigma.labels) {
        sums[u] += l;
        sums[v] += l;
    }
    Ok(sums)
}

/// Checks whether all vertex label-sums agree.
pub fn check_supermagic(graph: &Graph, sigma: &EdgeLabeling) -> Result<MagicVerdict> {
    let sums = vertex_sums(graph, sigma)?;
    if sums.is_empty() {
        return Err(invalid("empty graph"));
    }
    match sums.iter().position(|&s| s != sums[0]) {
        None => Ok(MagicVerdict {
            is_magic: true,
            index: Some(sums[0]),
            witness: None,
        }),
        Some(j) => Ok(MagicVerdict {
            is_magic: false,
            index: None,
            witness: Some((0, j)),
        }),
    }
}

/// Backtracking search for a supermagic labeling with labels
/// `[1 + offset, |E| + offset]`, assigning edges in canonical order and
/// trying labels ascending (so the first solution is deterministic).
///
/// For a d-regular graph every vertex sum must equal `d*(lo+hi)/2`; a
/// fractional target short-circuits to `None`. Vertices are pruned by
/// bracketing their residual need between the smallest and largest sums of
/// distinct unused labels.
pub fn supermagic_search(graph: &Graph, offset: u64) -> Result<Option<EdgeLabeling>> {
    supermagic_search_with_cap(graph, offset, DEFAULT_MAGIC_CAP)
}

pub fn supermagic_search_with_cap(
    graph: &Graph,
    offset: u64,
    cap: usize,
) -> Result<Option<EdgeLabeling>> {
    if !graph.is_simple() {
        return Err(invalid("supermagic search requires a simple graph"));
    }
    let Some(d) = graph.regular_degree() else {
        return Err(invalid("supermagic search requires a regular graph"));
    };
    let m = graph.num_edge_slots();
    if m > cap || m > 60 {
        return Err(infeasible(format!(
            "search infeasible: {} edges exceed the cap {}",
            m,
            cap.min(60)
        )));
    }
    if m == 0 {
        return Ok(Some(EdgeLabeling::new(Vec::new())?));
    }
    let lo = offset + 1;
    let hi = offset + m as u64;
    if d * (lo + hi) % 2 != 0 {
        return Ok(None); // fractional target sum
    }
    let target = d * (lo + hi) / 2;

    let n = graph.num_vertices();
    let edges = graph.edges();
    // Edges at each vertex that come at or after position t, for pruning.
    let mut remaining = vec![0u64; n];
    for &(u, v) in edges {
        remaining[u] += 1;
        remaining[v] += 1;
    }

    struct Search<'a> {
        edges: &'a [(usize, usize)],
        lo: u64,
        m: usize,
        n: usize,
        target: u64,
        sums: Vec<u64>,
        remaining: Vec<u64>,
        degree: Vec<u64>,
        adjacent: Vec<Vec<bool>>,
        unused: u64, // bit i = label lo + i is free
        assignment: Vec<u64>,
    }

    impl Search<'_> {
        /// Smallest and largest achievable sums of `r` distinct unused labels.
        fn bracket(&self, r: u64) -> (u64, u64) {
            let (mut min, mut max) = (0u64, 0u64);
            let mut taken = 0;
            for i in 0..self.m {
                if self.unused & (1 << i) != 0 {
                    min += self.lo + i as u64;
                    taken += 1;
                    if taken == r {
                        break;
                    }
                }
            }
            taken = 0;
            for i in (0..self.m).rev() {
                if self.unused & (1 << i) != 0 {
                    max += self.lo + i as u64;
                    taken += 1;
                    if taken == r {
                        break;
                    }
                }
            }
            (min, max)
        }

        fn label_unused(&self, label: u64) -> bool {
            label >= self.lo
                && label < self.lo + self.m as u64
                && self.unused & (1 << (label - self.lo)) != 0
        }

        fn feasible(&self, v: usize) -> bool {
            let need = match self.target.checked_sub(self.sums[v]) {
                Some(need) => need,
                None => return false,
            };
            match self.remaining[v] {
                0 => need == 0,
                // Last incident edge: its label is forced and must be free.
                1 => self.label_unused(need),
                // Two left: need must split into two distinct unused labels.
                2 => {
                    let mut rest = self.unused;
                    while rest != 0 {
                        let i = rest.trailing_zeros() as u64;
                        rest &= rest - 1;
                        let a = self.lo + i;
                        if 2 * a >= need {
                            return false;
                        }
                        if self.label_unused(need - a) {
                            return true;
                        }
                    }
                    false
                }
                r => {
                    let (min, max) = self.bracket(r);
                    min <= need && need <= max
                }
            }
        }

        /// Every touched vertex must stay completable, and two vertices that
        /// cannot share their single remaining edge must not force the same
        /// label.
        fn all_feasible(&self) -> bool {
            let mut forced: Vec<(usize, u64)> = Vec::new();
            for v in 0..self.n {
                if self.sums[v] == 0 && self.remaining[v] == self.degree[v] {
                    continue;
                }
                if !self.feasible(v) {
                    return false;
                }
                if self.remaining[v] == 1 {
                    let need = self.target - self.sums[v];
                    for &(w, other) in &forced {
                        if need == other && !self.adjacent[v][w] {
                            return false;
                        }
                    }
                    forced.push((v, need));
                }
            }
            true
        }

        fn dfs(&mut self, t: usize) -> bool {
            if t == self.m {
                return true;
            }
            let (u, v) = self.edges[t];
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            for i in 0..self.m {
                if self.unused & (1 << i) == 0 {
                    continue;
                }
                let label = self.lo + i as u64;
                self.unused &= !(1 << i);
                self.sums[u] += label;
                self.sums[v] += label;
                if self.all_feasible() && self.dfs(t + 1) {
                    self.assignment[t] = label;
                    return true;
                }
                self.sums[u] -= label;
                self.sums[v] -= label;
                self.unused |= 1 << i;
            }
            self.remaining[u] += 1;
            self.remaining[v] += 1;
            false
        }
    }

    let mut adjacent = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adjacent[u][v] = true;
        adjacent[v][u] = true;
    }
    let mut search = Search {
        edges,
        lo,
        m,
        n,
        target,
        sums: vec![0; n],
        degree: remaining.clone(),
        remaining,
        adjacent,
        unused: if m == 64 { u64::MAX } else { (1u64 << m) - 1 },
        assignment: vec![0; m],
    };
    if search.dfs(0) {
        Ok(Some(EdgeLabeling::new(search.assignment)?))
    } else {
        Ok(None)
    }
}

/// Ivančo's characterization: the regular Turán graph `T(n, r)` with
/// `r | n`, `r >= 2` is supermagic iff one of
/// (1) `n = r` with `n = 2` or (`n >= 6` and `n % 4 != 0`),
/// (2) `n = 2r >= 6`,
/// (3) `n >= 3r`, except `r % 4 == 0` with odd `n/r`.
pub fn ivanco_predicate(n: usize, r: usize) -> Result<bool> {
    if r < 2 || r > n || n % r != 0 {
        return Err(invalid(format!(
            "ivanco({}, {}) requires r >= 2 and r | n",
            n, r
        )));
    }
    let q = n / r;
    let case1 = n == r && (n == 2 || (n >= 6 && n % 4 != 0));
    let case2 = n == 2 * r && n >= 6;
    let case3 = n >= 3 * r && !(r % 4 == 0 && q % 2 == 1);
    Ok(case1 || case2 || case3)
}

/// Combines a supermagic labeling of `H1` (labels `[1, |E1|]`, shifted up by
/// `|E2|`) with an arbitrary labeling of `H2` (labels `[1, |E2|]`, kept) on
/// the union graph. Both parts must be regular on the same vertex set with
/// disjoint edges; the shift preserves `H1`'s constant vertex sums, so the
/// union's access-variance equals that of `(H2, sigma2)`.
pub fn compose(
    h1: &Graph,
    sigma1: &EdgeLabeling,
    h2: &Graph,
    sigma2: &EdgeLabeling,
) -> Result<(Graph, EdgeLabeling)> {
    if h1.num_vertices() != h2.num_vertices() {
        return Err(invalid("composition requires a common vertex set"));
    }
    if h1.regular_degree().is_none() || h2.regular_degree().is_none() {
        return Err(invalid("composition requires regular parts"));
    }
    for &(u, v) in h2.edges() {
        if h1.has_edge(u, v) {
            return Err(invalid(format!("edge ({}, {}) lies in both parts", u, v)));
        }
    }
    if sigma1.lo() != 1 || sigma1.labels().len() != h1.num_edge_slots() {
        return Err(invalid("sigma1 must label H1's edges by [1, |E1|]"));
    }
    if sigma2.labels().len() != h2.num_edge_slots() || (!sigma2.labels().is_empty() && sigma2.lo() != 1)
    {
        return Err(invalid("sigma2 must label H2's edges by [1, |E2|]"));
    }
    if !check_supermagic(h1, sigma1)?.is_magic {
        return Err(invalid("sigma1 is not supermagic on H1"));
    }

    let shift = h2.num_edge_slots() as u64;
    let mut edges = Vec::new();
    let mut labels_by_edge = Vec::new();
    for (&e, &l) in h1.edges().iter().zip(sigma1.labels()) {
        edges.push(e);
        labels_by_edge.push(l + shift);
    }
    for (&e, &l) in h2.edges().iter().zip(sigma2.labels()) {
        edges.push(e);
        labels_by_edge.push(l);
    }
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_unstable_by_key(|&i| edges[i]);
    let union = Graph::new(h1.num_vertices(), order.iter().map(|&i| edges[i]).collect())?;
    if union.num_edge_slots() != edges.len() {
        return Err(invalid("parts overlap after canonicalization"));
    }
    let labeling = EdgeLabeling::new(order.iter().map(|&i| labels_by_edge[i]).collect())?;
    Ok((union, labeling))
}

/// Bounds on the minimum access-variance of `K_{4r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct K4rBounds {
    /// `3r` for odd `r`, `7r` for even `r`.
    pub upper: i64,
    /// Integrality of node popularities forces at least `4r * (1/2)^2`.
    pub lower: i64,
    /// The same upper bound assembled from the composition route:
    /// `32 M(rK_3) - 72 r^2 - 18 r - r(6r+1)(30r+7)`.
    pub via_composition: i64,
}

pub fn k4r_bounds(r: u64) -> Result<K4rBounds> {
    if r == 0 {
        return Err(invalid("r must be positive"));
    }
    let upper = if r % 2 == 1 { 3 * r as i64 } else { 7 * r as i64 };
    let m = mkr_value(r, 3)? as i128;
    let ri = r as i128;
    let via = 32 * m - 72 * ri * ri - 18 * ri - ri * (6 * ri + 1) * (30 * ri + 7);
    let via = i64::try_from(via).map_err(|_| invalid("bound does not fit in i64"))?;
    Ok(K4rBounds {
        upper,
        lower: r as i64,
        via_composition: via,
    })
}

/// A concrete low-variance block labeling of the `K_{4r}` set system.
#[derive(Clone, Debug)]
pub struct K4rLabeling {
    pub labeling: BlockLabeling,
    pub variance: Rational,
}

/// Builds the labeling behind the `K_{4r}` upper bound for `r <= 2`.
///
/// `r = 1` is the variance-3 labeling of `K_4`; `r = 2` composes a searched
/// supermagic labeling of `T(8, 2)` (parts `{0..3}`, `{4..7}`) with the
/// optimal `2K_4` labeling induced by the `2T(6, 3)` construction. Larger
/// `r` needs a supermagic labeling of `T(4r, r)` beyond the search cap.
pub fn k4r_labeling(r: u64) -> Result<K4rLabeling> {
    match r {
        0 => Err(invalid("r must be positive")),
        1 => {
            let sigma = BlockLabeling::new(vec![3, 1, 6, 5, 2, 4])?;
            let system = SetSystem::from_graph(&Graph::complete(4))?;
            let var = variance(&system, &sigma)?;
            Ok(K4rLabeling {
                labeling: sigma,
                variance: var,
            })
        }
        2 => {
            let t82 = Graph::turan(8, 2)?;
            let sigma1 = supermagic_search(&t82, 0)?
                .ok_or_else(|| invalid("T(8,2) is supermagic; search must succeed"))?;
            let two_k4 = Graph::m_copies(&Graph::complete(4), 2)?;
            let sigma2 = optimal_2k4_edge_labeling()?;
            let (union, combined) = compose(&t82, &sigma1, &two_k4, &sigma2)?;
            let system = SetSystem::from_graph(&union)?;
            let sigma = combined.to_block_labeling()?;
            let var = variance(&system, &sigma)?;
            Ok(K4rLabeling {
                labeling: sigma,
                variance: var,
            })
        }
        _ => Err(infeasible(format!(
            "K_{{4r}} labeling for r = {} needs a supermagic T({}, {}) labeling beyond the search cap",
            r,
            4 * r,
            r
        ))),
    }
}

/// Optimal edge labeling of `2K_4` from the optimal vertex labeling of its
/// line graph `2T(6, 3)`.
///
/// Within one `K_4` the canonical edges are (0,1),(0,2),(0,3),(1,2),(1,3),
/// (2,3); the disjoint-edge pairs {0,5}, {1,4}, {2,3} are the parts of the
/// line graph, so mapping the canonical `T(6, 3)` vertices 0..5 onto edge
/// indices 0,5,1,4,2,3 (part by part) is a graph isomorphism.
fn optimal_2k4_edge_labeling() -> Result<EdgeLabeling> {
    let vertex_labels = crate::minps::mtnr_labeling(2, 6, 3)?;
    let labels = vertex_labels.labeling.labels();
    const PART_TO_EDGE: [usize; 6] = [0, 5, 1, 4, 2, 3];
    let mut edge_labels = vec![0u64; 12];
    for copy in 0..2 {
        for j in 0..6 {
            edge_labels[copy * 6 + PART_TO_EDGE[j]] = labels[copy * 6 + j];
        }
    }
    EdgeLabeling::new(edge_labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn k2_is_magic() {
        let k2 = Graph::complete(2);
        let sigma = EdgeLabeling::new(vec![1]).unwrap();
        let verdict = check_supermagic(&k2, &sigma).unwrap();
        assert!(verdict.is_magic);
        assert_eq!(verdict.index, Some(1));
    }

    #[test]
    fn rejects_bad_labelings() {
        assert!(EdgeLabeling::new(vec![1, 3]).is_err());
        assert!(EdgeLabeling::new(vec![2, 2]).is_err());
        // Offsets are fine as long as the set is consecutive.
        assert!(EdgeLabeling::new(vec![5, 3, 4]).is_ok());
    }

    #[test]
    fn witness_points_at_first_unequal_pair() {
        let c4 = Graph::cycle(4).unwrap();
        let sigma = EdgeLabeling::new(vec![1, 2, 3, 4]).unwrap();
        let verdict = check_supermagic(&c4, &sigma).unwrap();
        assert!(!verdict.is_magic);
        assert_eq!(verdict.witness, Some((0, 1)));
    }

    #[test]
    fn c4_has_no_supermagic_labeling() {
        // lambda = 2*(1+4)/2 = 5 is an integer, so the search must exhaust.
        assert_eq!(supermagic_search(&Graph::cycle(4).unwrap(), 0).unwrap(), None);
    }

    #[test]
    fn k4_short_circuits_on_fractional_target() {
        assert_eq!(supermagic_search(&Graph::complete(4), 0).unwrap(), None);
    }

    #[test]
    fn k6_search_finds_lambda_40() {
        let k6 = Graph::complete(6);
        let sigma = supermagic_search(&k6, 0).unwrap().expect("K6 is supermagic");
        let verdict = check_supermagic(&k6, &sigma).unwrap();
        assert!(verdict.is_magic);
        assert_eq!(verdict.index, Some(40));
    }

    #[test]
    fn t63_search_finds_lambda_26() {
        let t63 = Graph::turan(6, 3).unwrap();
        let sigma = supermagic_search(&t63, 0).unwrap().expect("T(6,3) is supermagic");
        assert_eq!(check_supermagic(&t63, &sigma).unwrap().index, Some(26));
    }

    #[test]
    fn k5_search_exhausts_to_none() {
        assert_eq!(supermagic_search(&Graph::complete(5), 0).unwrap(), None);
    }

    #[test]
    fn offset_shifts_the_index() {
        let k6 = Graph::complete(6);
        let sigma = supermagic_search(&k6, 10).unwrap().expect("offset search");
        assert_eq!(sigma.lo(), 11);
        let verdict = check_supermagic(&k6, &sigma).unwrap();
        // 5 * (11 + 25) / 2 = 90.
        assert_eq!(verdict.index, Some(90));
    }

    #[test]
    fn search_cap_is_an_error_not_none() {
        let k7 = Graph::complete(7); // 21 edges
        assert!(matches!(
            supermagic_search(&k7, 0),
            Err(crate::Error::Infeasible(_))
        ));
    }

    #[test]
    fn magic_bridge_to_variance() {
        // For a regular graph, supermagic <=> access-variance zero.
        let k6 = Graph::complete(6);
        let sigma = supermagic_search(&k6, 0).unwrap().unwrap();
        let system = SetSystem::from_graph(&k6).unwrap();
        let var = variance(&system, &sigma.to_block_labeling().unwrap()).unwrap();
        assert_eq!(var, int(0));

        let non_magic = EdgeLabeling::new((1..=15).collect()).unwrap();
        assert!(!check_supermagic(&k6, &non_magic).unwrap().is_magic);
        let var = variance(&system, &non_magic.to_block_labeling().unwrap()).unwrap();
        assert!(var > int(0));
    }

    #[test]
    fn non_supermagic_c4_has_no_zero_variance_labeling() {
        // All 4! labelings of C4: the verdict and the variance-zero test
        // agree everywhere (and are always negative, matching the search).
        let c4 = Graph::cycle(4).unwrap();
        let system = SetSystem::from_graph(&c4).unwrap();
        let mut perm = [1u64, 2, 3, 4];
        let mut count = 0;
        // Lexicographic next-permutation over a fixed array.
        loop {
            let sigma = EdgeLabeling::new(perm.to_vec()).unwrap();
            let magic = check_supermagic(&c4, &sigma).unwrap().is_magic;
            let var = variance(&system, &sigma.to_block_labeling().unwrap()).unwrap();
            assert_eq!(magic, var == int(0));
            assert!(!magic);
            count += 1;
            // next permutation
            let Some(i) = (0..3).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (0..4).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        assert_eq!(count, 24);
    }

    #[test]
    fn ivanco_examples() {
        assert!(ivanco_predicate(8, 2).unwrap());
        assert!(!ivanco_predicate(12, 4).unwrap());
        assert!(!ivanco_predicate(8, 8).unwrap());
        assert!(ivanco_predicate(2, 2).unwrap());
        assert!(ivanco_predicate(6, 3).unwrap());
        assert!(!ivanco_predicate(4, 2).unwrap());
        assert!(ivanco_predicate(6, 2).unwrap());
        assert!(ivanco_predicate(12, 3).unwrap());
        assert!(ivanco_predicate(16, 4).unwrap()); // n/r = 4 even
        assert!(ivanco_predicate(9, 9).unwrap());
        assert!(!ivanco_predicate(5, 5).is_ok_and(|b| b));
        assert!(ivanco_predicate(7, 3).is_err());
        assert!(ivanco_predicate(4, 1).is_err());
    }

    #[test]
    fn compose_degenerate_keeps_sigma1() {
        let k6 = Graph::complete(6);
        let sigma1 = supermagic_search(&k6, 0).unwrap().unwrap();
        let empty = Graph::new(6, vec![]).unwrap();
        let sigma2 = EdgeLabeling::new(vec![]).unwrap();
        let (union, combined) = compose(&k6, &sigma1, &empty, &sigma2).unwrap();
        assert_eq!(union, k6);
        assert_eq!(combined, sigma1);
        let system = SetSystem::from_graph(&union).unwrap();
        let var = variance(&system, &combined.to_block_labeling().unwrap()).unwrap();
        assert_eq!(var, int(0));
    }

    #[test]
    fn compose_rejects_bad_parts() {
        let k4 = Graph::complete(4);
        let sigma = EdgeLabeling::new((1..=6).collect()).unwrap();
        // Overlapping edges.
        assert!(compose(&k4, &sigma, &k4, &sigma).is_err());
        // Irregular part.
        let path = Graph::new(4, vec![(0, 1), (1, 2)]).unwrap();
        let sp = EdgeLabeling::new(vec![1, 2]).unwrap();
        assert!(compose(&path, &sp, &k4, &sigma).is_err());
        // Non-supermagic sigma1.
        let c4 = Graph::cycle(4).unwrap();
        let diag = Graph::new(4, vec![(0, 2), (1, 3)]).unwrap();
        let sc4 = EdgeLabeling::new(vec![1, 2, 3, 4]).unwrap();
        let sd = EdgeLabeling::new(vec![1, 2]).unwrap();
        assert!(compose(&c4, &sc4, &diag, &sd).is_err());
    }

    #[test]
    fn k4r_bound_values() {
        let b1 = k4r_bounds(1).unwrap();
        assert_eq!((b1.upper, b1.lower, b1.via_composition), (3, 1, 3));
        let b2 = k4r_bounds(2).unwrap();
        assert_eq!((b2.upper, b2.lower, b2.via_composition), (14, 2, 14));
    }

    #[test]
    fn k4r_composition_identity_up_to_50() {
        for r in 1..=50 {
            let b = k4r_bounds(r).unwrap();
            assert_eq!(b.via_composition, b.upper, "r = {}", r);
            assert!(b.lower <= b.upper);
        }
    }

    #[test]
    fn k4r_labeling_r1_has_variance_3() {
        let result = k4r_labeling(1).unwrap();
        assert_eq!(result.variance, int(3));
    }

    #[test]
    fn k4r_labeling_r3_is_infeasible() {
        assert!(matches!(k4r_labeling(3), Err(crate::Error::Infeasible(_))));
    }

    #[test]
    fn optimal_2k4_labeling_is_a_line_graph_isomorphism_image() {
        // The induced edge labeling must evaluate to MinPS(2T(6,3)) = 878 on
        // the line graph of 2K4, and to variance 14 on the system.
        let sigma2 = optimal_2k4_edge_labeling().unwrap();
        let two_k4 = Graph::m_copies(&Graph::complete(4), 2).unwrap();
        let system = SetSystem::from_graph(&two_k4).unwrap();
        let var = variance(&system, &sigma2.to_block_labeling().unwrap()).unwrap();
        assert_eq!(var, int(14));
    }

    #[test]
    fn k4r_labeling_r2_slow_search() {
        let result = k4r_labeling(2).unwrap();
        assert_eq!(result.variance, int(14));
        assert_eq!(result.labeling.labels().len(), 28);
    }

    #[test]
    fn compose_variance_identity_for_random_sigma2() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;

        // K8 = T(8,2) + 2K4 on parts {0..3}, {4..7}: for any sigma2 the
        // composed variance equals that of (2K4, sigma2).
        let t82 = Graph::turan(8, 2).unwrap();
        let sigma1 = supermagic_search(&t82, 0).unwrap().expect("T(8,2) supermagic");
        let two_k4 = Graph::m_copies(&Graph::complete(4), 2).unwrap();
        let part_system = SetSystem::from_graph(&two_k4).unwrap();

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        let mut labels: Vec<u64> = (1..=12).collect();
        for _ in 0..100 {
            labels.shuffle(&mut rng);
            let sigma2 = EdgeLabeling::new(labels.clone()).unwrap();
            let (union, combined) = compose(&t82, &sigma1, &two_k4, &sigma2).unwrap();
            let union_system = SetSystem::from_graph(&union).unwrap();
            let composed_var =
                variance(&union_system, &combined.to_block_labeling().unwrap()).unwrap();
            let part_var =
                variance(&part_system, &sigma2.to_block_labeling().unwrap()).unwrap();
            assert_eq!(composed_var, part_var);
        }
    }
}
