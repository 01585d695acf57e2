//! Block-labeling evaluation: popularity vectors, access-variance,
//! access-minsum/maxsum, the quadratic-form route through the line graph,
//! and the Zipf-weighted variants.
//!
//! Variance is the un-normalized sum of squared deviations from the mean
//! popularity `alpha * (theta + 1) / 2`, held exactly in rationals
//! (quarter-integers in practice). Zipf quantities use floats; compare them
//! with a 1e-9 tolerance.

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::rational::{int, ratio, Rational};
use crate::setsystem::SetSystem;

/// A bijection from blocks to `[1, theta]`, index-aligned with the system's
/// canonical block order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LabelingRaw")]
pub struct BlockLabeling {
    labels: Vec<u64>,
}

#[derive(Deserialize)]
struct LabelingRaw {
    labels: Vec<u64>,
}

impl TryFrom<LabelingRaw> for BlockLabeling {
    type Error = crate::Error;

    fn try_from(raw: LabelingRaw) -> Result<Self> {
        BlockLabeling::new(raw.labels)
    }
}

impl BlockLabeling {
    pub fn new(labels: Vec<u64>) -> Result<Self> {
        check_permutation(&labels)?;
        Ok(BlockLabeling { labels })
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Checks that `labels` is a permutation of `1..=len`.
pub(crate) fn check_permutation(labels: &[u64]) -> Result<()> {
    let theta = labels.len() as u64;
    let mut seen = vec![false; labels.len()];
    for &l in labels {
        if l == 0 || l > theta {
            return Err(invalid(format!("label {} out of range [1, {}]", l, theta)));
        }
        if seen[(l - 1) as usize] {
            return Err(invalid(format!("label {} repeated", l)));
        }
        seen[(l - 1) as usize] = true;
    }
    Ok(())
}

fn check_len(system: &SetSystem, sigma: &BlockLabeling) -> Result<()> {
    if sigma.len() != system.num_blocks() {
        return Err(invalid(format!(
            "labeling has {} labels for {} blocks",
            sigma.len(),
            system.num_blocks()
        )));
    }
    Ok(())
}

fn require_regular(system: &SetSystem) -> Result<usize> {
    system
        .regular_degree()
        .ok_or_else(|| invalid("operation requires a regular set system"))
}

/// Per-point popularity: `p_i = sum of sigma(e) over blocks e containing i`.
pub fn popularity(system: &SetSystem, sigma: &BlockLabeling) -> Result<Vec<u64>> {
    check_len(system, sigma)?;
    let mut p = vec![0u64; system.num_points()];
    for (block, &label) in system.blocks().iter().zip(sigma.labels()) {
        for &point in block {
            p[point] += label;
        }
    }
    Ok(p)
}

/// Mean popularity `alpha * (theta + 1) / 2` of a regular system.
pub fn mean_popularity(system: &SetSystem) -> Result<Rational> {
    let alpha = require_regular(system)?;
    Ok(ratio(
        alpha as i64 * (system.num_blocks() as i64 + 1),
        2,
    ))
}

/// Access-variance `sum_i (p_i - mean)^2`, exact.
pub fn variance(system: &SetSystem, sigma: &BlockLabeling) -> Result<Rational> {
    let mean = mean_popularity(system)?;
    let p = popularity(system, sigma)?;
    let mut acc = int(0);
    for pi in p {
        let d = Rational::from_integer(BigInt::from(pi)) - mean.clone();
        acc += d.clone() * d;
    }
    Ok(acc)
}

/// Smallest node popularity.
pub fn minsum(system: &SetSystem, sigma: &BlockLabeling) -> Result<u64> {
    let p = popularity(system, sigma)?;
    p.into_iter().min().ok_or_else(|| invalid("empty system"))
}

/// Largest node popularity.
pub fn maxsum(system: &SetSystem, sigma: &BlockLabeling) -> Result<u64> {
    let p = popularity(system, sigma)?;
    p.into_iter().max().ok_or_else(|| invalid("empty system"))
}

/// Variance via the line-graph quadratic form:
/// `x^T A(L(S)) x + c` with `c = rho*theta*(theta+1)*(2theta+1)/6
/// - rho*alpha*theta*(theta+1)^2/4`, where the symmetric form counts each
/// adjacent unordered block pair twice and weights it by `|e ∩ e'|`.
///
/// The identity with [`variance`] is usually stated for linear systems, but
/// its derivation only uses `M(S)·1 = rho*alpha*1`, so multigraph line
/// graphs are accepted and the equality is property-tested for them too.
pub fn quadratic_variance(system: &SetSystem, sigma: &BlockLabeling) -> Result<Rational> {
    let alpha = require_regular(system)? as i64;
    check_len(system, sigma)?;
    let rho = system.block_size().unwrap_or(0) as i64;
    let theta = system.num_blocks() as i64;

    let line = system.line_graph();
    let labels = sigma.labels();
    let mut form: i128 = 0;
    for (&(u, v), &m) in line.edges().iter().zip(line.multiplicities()) {
        form += 2 * (m as i128) * (labels[u] as i128) * (labels[v] as i128);
    }
    let c = ratio(rho * theta * (theta + 1) * (2 * theta + 1), 6)
        - ratio(rho * alpha * theta, 4) * int(theta + 1) * int(theta + 1);
    Ok(Rational::from_integer(BigInt::from(form)) + c)
}

/// Per-point totals when block `e` carries weight `1/sigma(e)^beta`.
pub fn zipf_popularity(system: &SetSystem, sigma: &BlockLabeling, beta: f64) -> Result<Vec<f64>> {
    if !beta.is_finite() || beta <= 0.0 {
        return Err(invalid("zipf exponent beta must be positive"));
    }
    check_len(system, sigma)?;
    let mut p = vec![0.0; system.num_points()];
    for (block, &label) in system.blocks().iter().zip(sigma.labels()) {
        let w = (label as f64).powf(-beta);
        for &point in block {
            p[point] += w;
        }
    }
    Ok(p)
}

/// Zipf-weighted imbalance `sum_i (p_i - mean)^2` in floating point.
pub fn zipf_imbalance(system: &SetSystem, sigma: &BlockLabeling, beta: f64) -> Result<f64> {
    let p = zipf_popularity(system, sigma, beta)?;
    let mean = p.iter().sum::<f64>() / p.len() as f64;
    Ok(p.iter().map(|x| (x - mean) * (x - mean)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setsystem::Graph;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn k4() -> SetSystem {
        SetSystem::from_graph(&Graph::complete(4)).unwrap()
    }

    /// K4's canonical blocks are (0,1),(0,2),(0,3),(1,2),(1,3),(2,3); these
    /// two labelings tie on variance 3 while differing on minsum/maxsum.
    pub(crate) fn k4_sigma1() -> BlockLabeling {
        BlockLabeling::new(vec![3, 1, 6, 5, 2, 4]).unwrap()
    }

    pub(crate) fn k4_sigma2() -> BlockLabeling {
        BlockLabeling::new(vec![3, 1, 5, 6, 2, 4]).unwrap()
    }

    #[test]
    fn rejects_non_bijective() {
        assert!(BlockLabeling::new(vec![1, 1, 2]).is_err());
        assert!(BlockLabeling::new(vec![0, 1, 2]).is_err());
        assert!(BlockLabeling::new(vec![1, 2, 4]).is_err());
    }

    #[test]
    fn k4_popularity_vectors() {
        assert_eq!(popularity(&k4(), &k4_sigma1()).unwrap(), vec![10, 10, 10, 12]);
        assert_eq!(popularity(&k4(), &k4_sigma2()).unwrap(), vec![9, 11, 11, 11]);
    }

    #[test]
    fn triangle_popularity() {
        let c3 = SetSystem::from_graph(&Graph::cycle(3).unwrap()).unwrap();
        let sigma = BlockLabeling::new(vec![1, 2, 3]).unwrap();
        assert_eq!(popularity(&c3, &sigma).unwrap(), vec![3, 4, 5]);
    }

    #[test]
    fn k4_min_and_max_sums() {
        let s = k4();
        assert_eq!(minsum(&s, &k4_sigma1()).unwrap(), 10);
        assert_eq!(maxsum(&s, &k4_sigma1()).unwrap(), 12);
        assert_eq!(minsum(&s, &k4_sigma2()).unwrap(), 9);
        assert_eq!(maxsum(&s, &k4_sigma2()).unwrap(), 11);
    }

    #[test]
    fn k4_variances_are_three() {
        assert_eq!(variance(&k4(), &k4_sigma1()).unwrap(), int(3));
        assert_eq!(variance(&k4(), &k4_sigma2()).unwrap(), int(3));
    }

    #[test]
    fn variance_rejects_irregular() {
        let s = SetSystem::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let sigma = BlockLabeling::new(vec![1, 2, 3]).unwrap();
        assert!(variance(&s, &sigma).is_err());
    }

    #[test]
    fn quadratic_form_matches_k4_example() {
        // 12 adjacent edge pairs of K4 with sigma1 give a product sum of 131,
        // and c(6, 2, 3) = -259; twice the form plus c equals the variance.
        let q = quadratic_variance(&k4(), &k4_sigma1()).unwrap();
        assert_eq!(q, int(2 * 131 - 259));
        assert_eq!(q, int(3));
    }

    #[test]
    fn quadratic_equals_variance_on_random_labelings() {
        let systems = vec![
            k4(),
            SetSystem::from_graph(&Graph::cycle(5).unwrap()).unwrap(),
            SetSystem::from_graph(&Graph::turan(6, 3).unwrap()).unwrap(),
            k4().dual(),
            SetSystem::new(
                4,
                vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
            )
            .unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for system in systems {
            let theta = system.num_blocks() as u64;
            let mut labels: Vec<u64> = (1..=theta).collect();
            for _ in 0..50 {
                labels.shuffle(&mut rng);
                let sigma = BlockLabeling::new(labels.clone()).unwrap();
                assert_eq!(
                    variance(&system, &sigma).unwrap(),
                    quadratic_variance(&system, &sigma).unwrap()
                );
            }
        }
    }

    #[test]
    fn popularity_sum_identity() {
        // sum p_i = rho * theta * (theta + 1) / 2 for uniform systems.
        let systems = vec![k4(), k4().dual()];
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for system in systems {
            let rho = system.block_size().unwrap() as u64;
            let theta = system.num_blocks() as u64;
            let mut labels: Vec<u64> = (1..=theta).collect();
            for _ in 0..20 {
                labels.shuffle(&mut rng);
                let sigma = BlockLabeling::new(labels.clone()).unwrap();
                let total: u64 = popularity(&system, &sigma).unwrap().iter().sum();
                assert_eq!(total, rho * theta * (theta + 1) / 2);
            }
        }
    }

    #[test]
    fn minsum_brackets_mean() {
        let s = k4();
        for sigma in [k4_sigma1(), k4_sigma2()] {
            let p = popularity(&s, &sigma).unwrap();
            let mean = p.iter().sum::<u64>() as f64 / p.len() as f64;
            assert!(minsum(&s, &sigma).unwrap() as f64 <= mean.floor());
            assert!(maxsum(&s, &sigma).unwrap() as f64 >= mean.ceil());
        }
    }

    #[test]
    fn zipf_limit_and_example() {
        let s = k4();
        let sigma = k4_sigma1();
        // beta -> 0: every weight -> 1, totals -> alpha.
        let p = zipf_popularity(&s, &sigma, 1e-9).unwrap();
        assert!(p.iter().all(|&x| (x - 3.0).abs() < 1e-6));
        // beta = 1, node 0 carries labels 3, 1, 6.
        let p1 = zipf_popularity(&s, &sigma, 1.0).unwrap();
        assert!((p1[0] - (1.0 / 3.0 + 1.0 + 1.0 / 6.0)).abs() < 1e-9);
        assert!(zipf_imbalance(&s, &sigma, 1.0).unwrap() > 0.0);
        assert!(zipf_popularity(&s, &sigma, 0.0).is_err());
        assert!(zipf_popularity(&s, &sigma, -1.0).is_err());
    }

    #[test]
    fn labeling_json_round_trip() {
        let sigma = k4_sigma1();
        let json = serde_json::to_string(&sigma).unwrap();
        assert_eq!(json, r#"{"labels":[3,1,6,5,2,4]}"#);
        let back: BlockLabeling = serde_json::from_str(&json).unwrap();
        assert_eq!(back, sigma);
        assert!(serde_json::from_str::<BlockLabeling>(r#"{"labels":[1,1]}"#).is_err());
    }
}
