//! Fractional repetition codes: construction from set systems, achievable
//! file sizes `M(k)`, the singleton-style and recursive upper bounds, and
//! k-optimality certification.

use num::integer::binomial;
use num::{BigInt, BigRational, ToPrimitive};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{infeasible, invalid, Result};
use crate::setsystem::SetSystem;

/// Exact `file_size` refuses to enumerate more than this many k-subsets.
pub const DEFAULT_SUBSET_CAP: u64 = 10_000_000;

/// An `(n, alpha, rho)` FR code: `n` nodes, each storing `alpha` of the
/// `theta` symbols, every symbol replicated on exactly `rho` nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FrCodeRaw")]
pub struct FrCode {
    n: usize,
    alpha: usize,
    rho: usize,
    theta: usize,
    nodes: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct FrCodeRaw {
    n: usize,
    alpha: usize,
    rho: usize,
    theta: usize,
    nodes: Vec<Vec<usize>>,
}

impl TryFrom<FrCodeRaw> for FrCode {
    type Error = crate::Error;

    fn try_from(raw: FrCodeRaw) -> Result<Self> {
        FrCode::new(raw.n, raw.alpha, raw.rho, raw.theta, raw.nodes)
    }
}

impl FrCode {
    pub fn new(
        n: usize,
        alpha: usize,
        rho: usize,
        theta: usize,
        nodes: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if n * alpha != theta * rho {
            return Err(invalid(format!(
                "parameter identity violated: {}*{} != {}*{}",
                n, alpha, theta, rho
            )));
        }
        if nodes.len() != n {
            return Err(invalid("node list length differs from n"));
        }
        let mut nodes = nodes;
        let mut replication = vec![0usize; theta];
        for node in &mut nodes {
            node.sort_unstable();
            if node.len() != alpha {
                return Err(invalid(format!(
                    "node stores {} symbols, expected alpha = {}",
                    node.len(),
                    alpha
                )));
            }
            if node.windows(2).any(|w| w[0] == w[1]) {
                return Err(invalid("node stores a repeated symbol"));
            }
            for &s in node.iter() {
                if s >= theta {
                    return Err(invalid(format!("symbol {} out of range [0, {})", s, theta)));
                }
                replication[s] += 1;
            }
        }
        if let Some(s) = replication.iter().position(|&r| r != rho) {
            return Err(invalid(format!(
                "symbol {} appears in {} nodes, expected rho = {}",
                s, replication[s], rho
            )));
        }
        Ok(FrCode {
            n,
            alpha,
            rho,
            theta,
            nodes,
        })
    }

    /// FR code of a `rho`-uniform `alpha`-regular set system: node `i`
    /// stores the indices of the blocks containing point `i`, so the code's
    /// incidence matrix equals the system's.
    pub fn from_set_system(system: &SetSystem) -> Result<Self> {
        let report = system.validate();
        let Some(alpha) = report.alpha else {
            return Err(invalid("FR code requires a regular set system"));
        };
        let dual = system.dual();
        FrCode::new(
            system.num_points(),
            alpha,
            report.rho,
            system.num_blocks(),
            dual.blocks().to_vec(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    /// Symbol sets per node, each sorted ascending.
    pub fn nodes(&self) -> &[Vec<usize>] {
        &self.nodes
    }

    fn node_bitsets(&self) -> Vec<Vec<u64>> {
        let words = self.theta.div_ceil(64);
        self.nodes
            .iter()
            .map(|node| {
                let mut bits = vec![0u64; words];
                for &s in node {
                    bits[s / 64] |= 1 << (s % 64);
                }
                bits
            })
            .collect()
    }

    /// `M(k)`: size of the smallest union of `k` node sets.
    ///
    /// Exact mode enumerates every k-subset (colex order) and errors beyond
    /// `cap` subsets; sampled mode draws random k-subsets and returns an
    /// upper bound flagged `exact: false`.
    pub fn file_size(&self, k: usize, mode: FileSizeMode) -> Result<FileSize> {
        if k == 0 || k > self.n {
            return Err(invalid(format!("k = {} out of range [1, {}]", k, self.n)));
        }
        let bitsets = self.node_bitsets();
        let union_size = |subset: &[usize]| -> usize {
            let words = self.theta.div_ceil(64);
            let mut acc = vec![0u64; words];
            for &i in subset {
                for (a, w) in acc.iter_mut().zip(&bitsets[i]) {
                    *a |= w;
                }
            }
            acc.iter().map(|w| w.count_ones() as usize).sum()
        };
        match mode {
            FileSizeMode::Exact { cap } => {
                let cap = cap.unwrap_or(DEFAULT_SUBSET_CAP);
                let subsets = binomial(BigInt::from(self.n), BigInt::from(k));
                if subsets > BigInt::from(cap) {
                    return Err(infeasible(format!(
                        "C({}, {}) = {} exceeds the enumeration cap {}",
                        self.n, k, subsets, cap
                    )));
                }
                // Colex enumeration: indices ascending, advanced from the low end.
                let mut subset: Vec<usize> = (0..k).collect();
                let mut best = usize::MAX;
                loop {
                    best = best.min(union_size(&subset));
                    let mut i = 0;
                    while i < k {
                        let limit = if i + 1 < k { subset[i + 1] } else { self.n };
                        if subset[i] + 1 < limit {
                            break;
                        }
                        i += 1;
                    }
                    if i == k {
                        break;
                    }
                    subset[i] += 1;
                    for (j, slot) in subset.iter_mut().enumerate().take(i) {
                        *slot = j;
                    }
                }
                Ok(FileSize {
                    value: best,
                    exact: true,
                })
            }
            FileSizeMode::Sampled { trials, seed } => {
                if trials == 0 {
                    return Err(invalid("sampled mode requires at least one trial"));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut indices: Vec<usize> = (0..self.n).collect();
                let mut best = usize::MAX;
                for _ in 0..trials {
                    indices.shuffle(&mut rng);
                    best = best.min(union_size(&indices[..k]));
                }
                Ok(FileSize {
                    value: best,
                    exact: false,
                })
            }
        }
    }

    /// Per-k table of `M(k)` against both upper bounds; `certified` rows meet
    /// the smaller bound. A gap leaves optimality undetermined (the bounds
    /// are upper bounds on the best achievable file size, not exact values),
    /// so rows are never marked "not optimal".
    pub fn optimality_report(&self, k_max: Option<usize>, cap: Option<u64>) -> Result<OptimalityReport> {
        let k_max = k_max.unwrap_or_else(|| self.alpha.min(self.n.saturating_sub(1)));
        if k_max == 0 || k_max >= self.n {
            return Err(invalid(format!(
                "k_max = {} out of range [1, {}]",
                k_max,
                self.n - 1
            )));
        }
        let mut rows = Vec::with_capacity(k_max);
        for k in 1..=k_max {
            let m = self.file_size(k, FileSizeMode::Exact { cap })?.value;
            let b1 = bound_singleton(self.n, k, self.alpha, self.rho)?;
            let b2 = bound_recursive(self.n, k, self.alpha, self.rho)?;
            rows.push(ReportRow {
                k,
                file_size: m as u64,
                bound_singleton: b1,
                bound_recursive: b2,
                certified: m as u64 == b1.min(b2),
            });
        }
        let overall_optimal = k_max >= self.alpha && rows.iter().all(|r| r.certified);
        Ok(OptimalityReport {
            rows,
            overall_optimal,
        })
    }
}

/// How to compute `M(k)`.
#[derive(Clone, Copy, Debug)]
pub enum FileSizeMode {
    Exact { cap: Option<u64> },
    Sampled { trials: u64, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FileSize {
    pub value: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub k: usize,
    pub file_size: u64,
    pub bound_singleton: u64,
    pub bound_recursive: u64,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptimalityReport {
    pub rows: Vec<ReportRow>,
    pub overall_optimal: bool,
}

impl OptimalityReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,M,bound1,bound2,certified\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.k, r.file_size, r.bound_singleton, r.bound_recursive, r.certified
            ));
        }
        out
    }
}

/// First upper bound on the achievable file size:
/// `floor((n*alpha/rho) * (1 - C(n-rho, k) / C(n, k)))`, evaluated in exact
/// rational arithmetic; `C(n-rho, k) = 0` once `k > n - rho`.
pub fn bound_singleton(n: usize, k: usize, alpha: usize, rho: usize) -> Result<u64> {
    if k == 0 || k > n {
        return Err(invalid(format!("k = {} out of range [1, {}]", k, n)));
    }
    if rho == 0 || rho > n {
        return Err(invalid(format!("rho = {} out of range [1, {}]", rho, n)));
    }
    if (n * alpha) % rho != 0 {
        return Err(invalid(format!("{} * {} is not divisible by rho = {}", n, alpha, rho)));
    }
    let theta = BigRational::from_integer(BigInt::from(n * alpha / rho));
    let missing = if k > n - rho {
        BigRational::from_integer(BigInt::from(0))
    } else {
        BigRational::new(
            binomial(BigInt::from(n - rho), BigInt::from(k)),
            binomial(BigInt::from(n), BigInt::from(k)),
        )
    };
    let one = BigRational::from_integer(BigInt::from(1));
    let value = (theta * (one - missing)).floor();
    value
        .to_integer()
        .to_u64()
        .ok_or_else(|| invalid("bound does not fit in u64"))
}

/// Second upper bound, the exact integer recursion
/// `phi(1) = alpha`, `phi(k+1) = phi(k) + alpha - ceil((rho*phi(k) - k*alpha) / (n-k))`
/// with ceilings of possibly negative numerators taken toward +infinity.
pub fn bound_recursive(n: usize, k: usize, alpha: usize, rho: usize) -> Result<u64> {
    if k == 0 || k >= n {
        return Err(invalid(format!("k = {} out of range [1, {}]", k, n.saturating_sub(1))));
    }
    let (n, alpha, rho) = (n as i64, alpha as i64, rho as i64);
    let mut phi = alpha;
    for j in 1..k as i64 {
        phi += alpha - ceil_div(rho * phi - j * alpha, n - j);
    }
    u64::try_from(phi).map_err(|_| invalid("recursion produced a negative bound"))
}

/// Ceiling division toward +infinity for `b > 0`.
fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    let q = a / b;
    if a % b > 0 {
        q + 1
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setsystem::Graph;

    fn k4_code() -> FrCode {
        let s = SetSystem::from_graph(&Graph::complete(4)).unwrap();
        FrCode::from_set_system(&s).unwrap()
    }

    #[test]
    fn k4_code_parameters() {
        let c = k4_code();
        assert_eq!((c.n(), c.alpha(), c.rho(), c.theta()), (4, 3, 2, 6));
        // Node 0 stores the indices of the edges at vertex 0; K4's canonical
        // edge order starts (0,1), (0,2), (0,3).
        assert_eq!(c.nodes()[0], vec![0, 1, 2]);
    }

    #[test]
    fn c5_code_parameters() {
        let s = SetSystem::from_graph(&Graph::cycle(5).unwrap()).unwrap();
        let c = FrCode::from_set_system(&s).unwrap();
        assert_eq!((c.n(), c.alpha(), c.rho(), c.theta()), (5, 2, 2, 5));
    }

    #[test]
    fn dual_k4_code_parameters() {
        let s = SetSystem::from_graph(&Graph::complete(4)).unwrap().dual();
        let c = FrCode::from_set_system(&s).unwrap();
        assert_eq!((c.n(), c.alpha(), c.rho(), c.theta()), (6, 2, 3, 4));
    }

    #[test]
    fn rejects_irregular_system() {
        let s = SetSystem::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert!(FrCode::from_set_system(&s).is_err());
    }

    #[test]
    fn file_size_k4() {
        let c = k4_code();
        let exact = |k| c.file_size(k, FileSizeMode::Exact { cap: None }).unwrap();
        assert_eq!(exact(1), FileSize { value: 3, exact: true });
        assert_eq!(exact(2).value, 5);
        assert_eq!(exact(3).value, 6);
        assert_eq!(exact(4).value, 6);
    }

    #[test]
    fn file_size_monotone_and_full() {
        for g in [Graph::complete(5), Graph::turan(6, 3).unwrap(), Graph::cycle(6).unwrap()] {
            let c = FrCode::from_set_system(&SetSystem::from_graph(&g).unwrap()).unwrap();
            let mut prev = 0;
            for k in 1..=c.n() {
                let m = c.file_size(k, FileSizeMode::Exact { cap: None }).unwrap().value;
                assert!(m >= prev);
                prev = m;
            }
            assert_eq!(prev, c.theta());
        }
    }

    #[test]
    fn sampled_file_size_upper_bounds_exact() {
        let c = FrCode::from_set_system(
            &SetSystem::from_graph(&Graph::turan(6, 3).unwrap()).unwrap(),
        )
        .unwrap();
        for k in 1..=5 {
            let exact = c.file_size(k, FileSizeMode::Exact { cap: None }).unwrap();
            for seed in 0..5 {
                let sampled = c
                    .file_size(k, FileSizeMode::Sampled { trials: 8, seed })
                    .unwrap();
                assert!(!sampled.exact);
                assert!(sampled.value >= exact.value);
            }
        }
    }

    #[test]
    fn exact_mode_respects_cap() {
        let c = k4_code();
        let err = c.file_size(2, FileSizeMode::Exact { cap: Some(5) });
        assert!(matches!(err, Err(crate::Error::Infeasible(_))));
    }

    #[test]
    fn bound_values_hand_unrolled() {
        assert_eq!(bound_singleton(4, 2, 3, 2).unwrap(), 5);
        assert_eq!(bound_singleton(4, 3, 3, 2).unwrap(), 6);
        assert_eq!(bound_singleton(4, 4, 3, 2).unwrap(), 6); // k = n gives theta
        assert_eq!(bound_recursive(4, 2, 3, 2).unwrap(), 5);
        assert_eq!(bound_recursive(4, 3, 3, 2).unwrap(), 6);
        assert_eq!(bound_recursive(7, 1, 4, 2).unwrap(), 4); // base case
    }

    #[test]
    fn bound_rejections() {
        assert!(bound_singleton(4, 2, 3, 5).is_err());
        assert!(bound_singleton(4, 2, 2, 3).is_err()); // 8 not divisible by 3
        assert!(bound_recursive(4, 4, 3, 2).is_err()); // k >= n
    }

    #[test]
    fn ceil_div_toward_positive_infinity() {
        assert_eq!(ceil_div(3, 3), 1);
        assert_eq!(ceil_div(4, 3), 2);
        assert_eq!(ceil_div(-4, 3), -1);
        assert_eq!(ceil_div(-3, 3), -1);
        assert_eq!(ceil_div(0, 3), 0);
    }

    #[test]
    fn report_for_turan_6_3_certifies_all_k() {
        let c = FrCode::from_set_system(
            &SetSystem::from_graph(&Graph::turan(6, 3).unwrap()).unwrap(),
        )
        .unwrap();
        let report = c.optimality_report(None, None).unwrap();
        assert_eq!(report.rows.len(), 4);
        assert!(report.rows.iter().all(|r| r.certified));
        assert!(report.overall_optimal);
        let ms: Vec<u64> = report.rows.iter().map(|r| r.file_size).collect();
        assert_eq!(ms, vec![4, 7, 9, 11]);
    }

    #[test]
    fn report_for_c6_certifies_up_to_girth_minus_one() {
        let c = FrCode::from_set_system(
            &SetSystem::from_graph(&Graph::cycle(6).unwrap()).unwrap(),
        )
        .unwrap();
        let report = c.optimality_report(Some(5), None).unwrap();
        assert!(report.rows.iter().all(|r| r.certified));
        let ms: Vec<u64> = report.rows.iter().map(|r| r.file_size).collect();
        assert_eq!(ms, vec![2, 3, 4, 5, 6]);
    }

    #[test]
    fn report_k4() {
        let report = k4_code().optimality_report(Some(2), None).unwrap();
        assert_eq!(report.rows[1].file_size, 5);
        assert_eq!(report.rows[1].bound_singleton, 5);
        assert_eq!(report.rows[1].bound_recursive, 5);
        assert!(report.rows[1].certified);
        assert!(!report.overall_optimal); // k_max < alpha leaves it open
    }

    #[test]
    fn csv_shape() {
        let csv = k4_code().optimality_report(None, None).unwrap().to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("k,M,bound1,bound2,certified"));
        assert_eq!(lines.next(), Some("1,3,3,3,true"));
    }

    #[test]
    fn json_round_trip() {
        let c = k4_code();
        let json = serde_json::to_string(&c).unwrap();
        let c2: FrCode = serde_json::from_str(&json).unwrap();
        assert_eq!(c, c2);
        assert!(serde_json::from_str::<FrCode>(
            r#"{"n":2,"alpha":1,"rho":1,"theta":2,"nodes":[[0],[0]]}"#
        )
        .is_err());
    }
}
