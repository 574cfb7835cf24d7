//! Monte Carlo oracle: simulates a [`StateDiagram`] as a continuous-time
//! Markov chain and estimates the mean time to absorption.
//!
//! Trials are grouped into fixed blocks of [`BLOCK_TRIALS`]. Block `k` draws
//! from a ChaCha8 generator seeded with the user seed on stream `k`, so the
//! result depends only on `(diagram, trials, seed, cutoff)` and not on how
//! blocks are scheduled across threads. Block statistics are merged in block
//! order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::markov::{StateDiagram, StateKind};

/// Trials simulated by one generator stream.
pub const BLOCK_TRIALS: u64 = 16_384;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McConfig {
    pub trials: u64,
    pub seed: u64,
    /// Trials still running after this many hours are censored.
    pub max_sim_hours: f64,
}

impl McConfig {
    pub fn new(trials: u64, seed: u64) -> Self {
        McConfig {
            trials,
            seed,
            max_sim_hours: f64::MAX,
        }
    }

    pub fn with_cutoff(mut self, max_sim_hours: f64) -> Self {
        self.max_sim_hours = max_sim_hours;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::param("trials", 0.0, "must be at least 1"));
        }
        if !(self.max_sim_hours.is_finite() && self.max_sim_hours > 0.0) {
            return Err(Error::param(
                "max_sim_hours",
                self.max_sim_hours,
                "must be finite and > 0",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McResult {
    /// Mean time to absorption over uncensored trials, hours.
    pub mean_ttf: f64,
    /// Standard error of `mean_ttf`, hours.
    pub std_error: f64,
    pub censored_count: u64,
    pub trials: u64,
}

impl McResult {
    /// `(mean_ttf − reference) / std_error`.
    pub fn z_score(&self, reference: f64) -> f64 {
        (self.mean_ttf - reference) / self.std_error
    }
}

// Running mean and sum of squared deviations (Welford), mergeable.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: u64,
    mean: f64,
    m2: f64,
    censored: u64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        let censored = self.censored + other.censored;
        if other.n == 0 {
            return Moments { censored, ..self };
        }
        if self.n == 0 {
            return Moments { censored, ..other };
        }
        let n = self.n + other.n;
        let delta = other.mean - self.mean;
        let w = other.n as f64 / n as f64;
        Moments {
            n,
            mean: self.mean + delta * w,
            m2: self.m2 + other.m2 + delta * delta * self.n as f64 * w,
            censored,
        }
    }
}

// Per-state successor table with cumulative rates.
struct Chain {
    absorbing: Vec<bool>,
    exit: Vec<f64>,
    successors: Vec<Vec<(usize, f64)>>,
    initial: usize,
}

impl Chain {
    fn new(d: &StateDiagram) -> Self {
        let merged = d.merged_rates();
        let mut exit = Vec::with_capacity(d.len());
        let successors = merged
            .into_iter()
            .map(|row| {
                let mut acc = 0.0;
                let cumulative: Vec<(usize, f64)> = row
                    .into_iter()
                    .filter(|&(_, r)| r > 0.0)
                    .map(|(j, r)| {
                        acc += r;
                        (j, acc)
                    })
                    .collect();
                exit.push(acc);
                cumulative
            })
            .collect();
        Chain {
            absorbing: (0..d.len())
                .map(|i| d.kind(i) == StateKind::Absorbing)
                .collect(),
            exit,
            successors,
            initial: d.initial(),
        }
    }

    // Time to absorption, or None when the trial is censored.
    fn trial(&self, rng: &mut ChaCha8Rng, cutoff: f64) -> Option<f64> {
        let mut state = self.initial;
        let mut t = 0.0;
        while !self.absorbing[state] {
            let exit = self.exit[state];
            if exit == 0.0 {
                return None;
            }
            let hold: f64 = rng.sample(Exp1);
            t += hold / exit;
            if t > cutoff {
                return None;
            }
            let u = rng.random::<f64>() * exit;
            let row = &self.successors[state];
            state = row
                .iter()
                .find(|&&(_, c)| u < c)
                .unwrap_or(&row[row.len() - 1])
                .0;
        }
        Some(t)
    }
}

/// Estimates the MTTF of `d` by direct simulation.
pub fn simulate_mttf(d: &StateDiagram, cfg: &McConfig) -> Result<McResult> {
    cfg.validate()?;
    let chain = Chain::new(d);
    let blocks = cfg.trials.div_ceil(BLOCK_TRIALS);
    let moments = (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(block);
            let n = BLOCK_TRIALS.min(cfg.trials - block * BLOCK_TRIALS);
            let mut m = Moments::default();
            for _ in 0..n {
                match chain.trial(&mut rng, cfg.max_sim_hours) {
                    Some(t) => m.push(t),
                    None => m.censored += 1,
                }
            }
            m
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Moments::default(), Moments::merge);

    if moments.n == 0 {
        return Err(Error::AllCensored(cfg.trials));
    }
    let std_error = if moments.n > 1 {
        (moments.m2 / (moments.n - 1) as f64 / moments.n as f64).sqrt()
    } else {
        0.0
    };
    Ok(McResult {
        mean_ttf: moments.mean,
        std_error,
        censored_count: moments.censored,
        trials: cfg.trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(rate: f64) -> StateDiagram {
        StateDiagram::builder()
            .transition("S1", "S2", rate)
            .absorbing("S2")
            .initial("S1")
            .build()
            .unwrap()
    }

    #[test]
    fn exponential_mean() {
        let r = simulate_mttf(&single(1e-6), &McConfig::new(200_000, 7)).unwrap();
        assert!(r.z_score(1e6).abs() < 3.0, "{r:?}");
        assert_eq!(r.censored_count, 0);
        // std error of an exponential mean is mean/sqrt(n)
        assert!((r.std_error / (1e6 / 200_000f64.sqrt()) - 1.0).abs() < 0.02);
    }

    #[test]
    fn same_seed_is_bit_identical() {
        let d = single(3e-4);
        let cfg = McConfig::new(50_000, 42);
        assert_eq!(
            simulate_mttf(&d, &cfg).unwrap(),
            simulate_mttf(&d, &cfg).unwrap()
        );
        let other = simulate_mttf(&d, &McConfig::new(50_000, 43)).unwrap();
        assert_ne!(other.mean_ttf, simulate_mttf(&d, &cfg).unwrap().mean_ttf);
    }

    #[test]
    fn result_does_not_depend_on_thread_count() {
        let d = single(1e-3);
        let cfg = McConfig::new(3 * BLOCK_TRIALS + 17, 9);
        let a = simulate_mttf(&d, &cfg).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let b = pool.install(|| simulate_mttf(&d, &cfg).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn censoring() {
        let d = single(1.0);
        let r = simulate_mttf(&d, &McConfig::new(10_000, 1).with_cutoff(1.0)).unwrap();
        assert!(r.censored_count > 3000 && r.censored_count < 4300, "{r:?}");
        assert!(r.mean_ttf < 1.0);
        let err = simulate_mttf(&d, &McConfig::new(1000, 1).with_cutoff(1e-12)).unwrap_err();
        assert_eq!(err, Error::AllCensored(1000));
    }

    #[test]
    fn stuck_transient_state_is_censored() {
        let d = StateDiagram::builder()
            .transition("S1", "S2", 1.0)
            .transition("S1", "S3", 1.0)
            .transient("S3")
            .absorbing("S2")
            .initial("S1")
            .build()
            .unwrap();
        let r = simulate_mttf(&d, &McConfig::new(10_000, 5)).unwrap();
        assert!(r.censored_count > 4500 && r.censored_count < 5500);
    }

    #[test]
    fn invalid_config() {
        assert!(simulate_mttf(&single(1.0), &McConfig::new(0, 1)).is_err());
        assert!(simulate_mttf(
            &single(1.0),
            &McConfig::new(1, 1).with_cutoff(f64::INFINITY)
        )
        .is_err());
    }
}
