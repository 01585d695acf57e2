//! End-to-end DRESS pipeline: a systematic Cauchy MDS outer code over
//! GF(256), FR placement, single-node repair by transfer, reconstruction
//! from node subsets, and seeded access-workload simulation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{infeasible, invalid, Error, Result};
use crate::frcode::{FileSizeMode, FrCode};
use crate::gf256::Gf256;
use crate::labeling::BlockLabeling;

/// What one node stores: `(symbol index, symbol value)` pairs.
pub type NodeContents = Vec<(usize, Gf256)>;

/// Identifier of the workload RNG recorded in simulation output.
pub const RNG_ALGORITHM: &str = "chacha8";

/// Outer MDS code plus inner FR code.
///
/// The generator is a theta x m matrix in systematic form: the identity on
/// top of Cauchy rows `1 / (x_i + y_j)` with `x_i = i (i >= m)`,
/// `y_j = j (j < m)` as field elements. Distinct bytes xor to nonzero, so
/// every square submatrix of the Cauchy block, and hence every m x m
/// submatrix of the whole generator, is invertible.
#[derive(Clone, Debug)]
pub struct DressCode {
    fr: FrCode,
    m: usize,
    generator: Vec<Vec<Gf256>>,
}

impl DressCode {
    /// Builds the code; when `declared_k` is given, checks `m <= M(k)` so
    /// that any `k` nodes can reconstruct.
    pub fn new(fr: FrCode, m: usize, declared_k: Option<usize>) -> Result<Self> {
        let theta = fr.theta();
        if theta > 255 {
            return Err(invalid("the outer field supports at most 255 symbols"));
        }
        if m == 0 || m > theta {
            return Err(invalid(format!("m = {} out of range [1, {}]", m, theta)));
        }
        if let Some(k) = declared_k {
            let mk = fr.file_size(k, FileSizeMode::Exact { cap: None })?.value;
            if m > mk {
                return Err(invalid(format!(
                    "m = {} exceeds M({}) = {}; reconstruction from {} nodes would fail",
                    m, k, mk, k
                )));
            }
        }
        let mut generator = Vec::with_capacity(theta);
        for i in 0..theta {
            let mut row = vec![Gf256::ZERO; m];
            if i < m {
                row[i] = Gf256::ONE;
            } else {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = (Gf256(i as u8) + Gf256(j as u8)).inv().unwrap();
                }
            }
            generator.push(row);
        }
        Ok(DressCode { fr, m, generator })
    }

    pub fn fr(&self) -> &FrCode {
        &self.fr
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn generator(&self) -> &[Vec<Gf256>] {
        &self.generator
    }

    /// Systematic encode: the first `m` output symbols are the file.
    pub fn mds_encode(&self, file: &[Gf256]) -> Result<Vec<Gf256>> {
        if file.len() != self.m {
            return Err(invalid(format!(
                "file has {} symbols, expected m = {}",
                file.len(),
                self.m
            )));
        }
        Ok(self
            .generator
            .iter()
            .map(|row| {
                row.iter()
                    .zip(file)
                    .fold(Gf256::ZERO, |acc, (&g, &f)| acc + g * f)
            })
            .collect())
    }

    /// Places codeword symbol `i` on every node whose FR set contains `i`.
    pub fn place(&self, codeword: &[Gf256]) -> Result<Vec<NodeContents>> {
        if codeword.len() != self.fr.theta() {
            return Err(invalid(format!(
                "codeword has {} symbols, expected theta = {}",
                codeword.len(),
                self.fr.theta()
            )));
        }
        Ok(self
            .fr
            .nodes()
            .iter()
            .map(|node| node.iter().map(|&i| (i, codeword[i])).collect())
            .collect())
    }

    /// Repairs one failed node by transfer: `alpha` helper nodes each
    /// forward exactly one of the failed node's symbols, chosen by a
    /// bipartite matching with lowest-index tie-break. No computation
    /// touches the symbols.
    pub fn repair_node(
        &self,
        contents: &[NodeContents],
        failed: usize,
    ) -> Result<RepairOutcome> {
        if failed >= self.fr.n() {
            return Err(invalid(format!("node {} out of range", failed)));
        }
        if self.fr.rho() < 2 {
            return Err(infeasible("repair needs replication rho >= 2"));
        }
        let symbols = &self.fr.nodes()[failed];
        // Candidate helpers per symbol, ascending node index.
        let candidates: Vec<Vec<usize>> = symbols
            .iter()
            .map(|&s| {
                (0..self.fr.n())
                    .filter(|&v| v != failed && self.fr.nodes()[v].binary_search(&s).is_ok())
                    .collect()
            })
            .collect();
        // Kuhn's augmenting-path matching, symbols in ascending order.
        let mut helper_of_symbol = vec![usize::MAX; symbols.len()];
        let mut symbol_of_helper = vec![usize::MAX; self.fr.n()];
        fn augment(
            s: usize,
            candidates: &[Vec<usize>],
            visited: &mut [bool],
            helper_of_symbol: &mut [usize],
            symbol_of_helper: &mut [usize],
        ) -> bool {
            for &h in &candidates[s] {
                if visited[h] {
                    continue;
                }
                visited[h] = true;
                if symbol_of_helper[h] == usize::MAX
                    || augment(
                        symbol_of_helper[h],
                        candidates,
                        visited,
                        helper_of_symbol,
                        symbol_of_helper,
                    )
                {
                    symbol_of_helper[h] = s;
                    helper_of_symbol[s] = h;
                    return true;
                }
            }
            false
        }
        for (s, &symbol) in symbols.iter().enumerate() {
            let mut visited = vec![false; self.fr.n()];
            if !augment(
                s,
                &candidates,
                &mut visited,
                &mut helper_of_symbol,
                &mut symbol_of_helper,
            ) {
                return Err(infeasible(format!(
                    "repair infeasible: no helper assignment covers symbol {}",
                    symbol
                )));
            }
        }
        let mut transfers = Vec::with_capacity(symbols.len());
        let mut recovered = Vec::with_capacity(symbols.len());
        for (idx, &symbol) in symbols.iter().enumerate() {
            let helper = helper_of_symbol[idx];
            let &(_, value) = contents[helper]
                .iter()
                .find(|&&(i, _)| i == symbol)
                .ok_or_else(|| invalid(format!("helper {} lost symbol {}", helper, symbol)))?;
            transfers.push(Transfer { helper, symbol });
            recovered.push((symbol, value));
        }
        Ok(RepairOutcome {
            recovered,
            transfers,
        })
    }

    /// Recovers the file from the symbols held by `node_subset`, or reports
    /// the deficit when their union is too small.
    pub fn reconstruct(
        &self,
        contents: &[NodeContents],
        node_subset: &[usize],
    ) -> Result<Vec<Gf256>> {
        let mut union: Vec<(usize, Gf256)> = Vec::new();
        for &v in node_subset {
            if v >= self.fr.n() {
                return Err(invalid(format!("node {} out of range", v)));
            }
            union.extend_from_slice(&contents[v]);
        }
        union.sort_unstable_by_key(|&(i, _)| i);
        union.dedup_by_key(|&mut (i, _)| i);
        if union.len() < self.m {
            return Err(Error::InsufficientSymbols {
                have: union.len(),
                need: self.m,
            });
        }
        // Any m rows of the generator are independent; take the first m.
        let rows: Vec<Vec<Gf256>> = union[..self.m]
            .iter()
            .map(|&(i, _)| self.generator[i].clone())
            .collect();
        let rhs: Vec<Gf256> = union[..self.m].iter().map(|&(_, y)| y).collect();
        solve(rows, rhs).ok_or_else(|| invalid("generator rows were singular"))
    }

    /// Replays `requests` random symbol accesses. Each request picks symbol
    /// `i` with probability proportional to `sigma(i)` (linear model) or
    /// `1 / sigma(i)^beta` (Zipf), and increments every node holding it.
    pub fn workload_sim(
        &self,
        sigma: &BlockLabeling,
        requests: u64,
        model: PopularityModel,
        seed: u64,
    ) -> Result<WorkloadReport> {
        if sigma.len() != self.fr.theta() {
            return Err(invalid(format!(
                "labeling has {} labels for {} symbols",
                sigma.len(),
                self.fr.theta()
            )));
        }
        let weights: Vec<f64> = match model {
            PopularityModel::Linear => sigma.labels().iter().map(|&l| l as f64).collect(),
            PopularityModel::Zipf(beta) => {
                if !beta.is_finite() || beta <= 0.0 {
                    return Err(invalid("zipf exponent beta must be positive"));
                }
                sigma.labels().iter().map(|&l| (l as f64).powf(-beta)).collect()
            }
        };
        let mut cumulative = Vec::with_capacity(weights.len());
        let mut total = 0.0;
        for &w in &weights {
            total += w;
            cumulative.push(total);
        }
        // Symbol -> holding nodes.
        let mut holders = vec![Vec::new(); self.fr.theta()];
        for (v, node) in self.fr.nodes().iter().enumerate() {
            for &s in node {
                holders[s].push(v);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut loads = vec![0u64; self.fr.n()];
        for _ in 0..requests {
            let x = rng.gen::<f64>() * total;
            let symbol = cumulative.partition_point(|&c| c <= x).min(weights.len() - 1);
            for &v in &holders[symbol] {
                loads[v] += 1;
            }
        }
        let mean = loads.iter().sum::<u64>() as f64 / loads.len() as f64;
        let imbalance = loads
            .iter()
            .map(|&l| (l as f64 - mean) * (l as f64 - mean))
            .sum();
        Ok(WorkloadReport {
            loads,
            imbalance,
            requests,
            transfers: requests * self.fr.rho() as u64,
            model: model.to_string(),
            rng: RNG_ALGORITHM,
            seed,
        })
    }
}

/// Gaussian elimination over GF(256); `None` if the square system is
/// singular.
#[allow(clippy::needless_range_loop)]
fn solve(mut rows: Vec<Vec<Gf256>>, mut rhs: Vec<Gf256>) -> Option<Vec<Gf256>> {
    let m = rhs.len();
    for col in 0..m {
        let pivot = (col..m).find(|&r| rows[r][col] != Gf256::ZERO)?;
        rows.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = rows[col][col].inv()?;
        for j in col..m {
            rows[col][j] = rows[col][j] * inv;
        }
        rhs[col] = rhs[col] * inv;
        for r in 0..m {
            if r != col && rows[r][col] != Gf256::ZERO {
                let factor = rows[r][col];
                for j in col..m {
                    rows[r][j] = rows[r][j] - factor * rows[col][j];
                }
                rhs[r] = rhs[r] - factor * rhs[col];
            }
        }
    }
    Some(rhs)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PopularityModel {
    Linear,
    Zipf(f64),
}

impl std::fmt::Display for PopularityModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PopularityModel::Linear => write!(f, "linear"),
            PopularityModel::Zipf(beta) => write!(f, "zipf:{}", beta),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub helper: usize,
    pub symbol: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairOutcome {
    /// `(symbol, value)` pairs, equal to the failed node's original contents.
    pub recovered: NodeContents,
    /// One entry per transferred symbol; exactly `alpha` of them.
    pub transfers: Vec<Transfer>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WorkloadReport {
    pub loads: Vec<u64>,
    pub imbalance: f64,
    pub requests: u64,
    /// Total symbol transfers: every request is served by all rho holders.
    pub transfers: u64,
    pub model: String,
    pub rng: &'static str,
    pub seed: u64,
}
