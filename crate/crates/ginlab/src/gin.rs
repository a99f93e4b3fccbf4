//! Generic initial ideals by randomized coordinate change.
//!
//! The generic initial ideal `gin_τ(I)` is the common value of
//! `in_τ(g(I))` for `g` in a dense open subset of GL(n). That set is not
//! constructive, so this module uses a loud probabilistic surrogate: sample
//! independent dense integer matrices, recompute the initial ideal, and
//! accept only when `agreement` consecutive trials produce the identical
//! monomial ideal *and* that ideal is Borel-fixed (a property every gin has
//! in characteristic zero). Anything else is a hard
//! [`StabilizationFailure`](crate::error::Error::StabilizationFailure),
//! never a silent wrong answer.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, Ideal};
use crate::monideal::MonomialIdeal;
use crate::order::OrderSpec;
use crate::poly::Rational;
use crate::transform::TransformMatrix;

/// Parameters of the randomized gin search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GinConfig {
    /// Matrix entries are sampled uniformly from `[-entry_bound, entry_bound]`.
    pub entry_bound: u64,
    /// Number of consecutive agreeing independent trials required.
    pub agreement: u32,
    /// Total trial budget.
    pub max_trials: u32,
    /// Seed for the deterministic RNG; same seed, same result.
    pub seed: u64,
}

impl Default for GinConfig {
    fn default() -> Self {
        GinConfig {
            entry_bound: 1000,
            agreement: 2,
            max_trials: 8,
            seed: 0,
        }
    }
}

impl GinConfig {
    pub fn with_seed(seed: u64) -> Self {
        GinConfig { seed, ..GinConfig::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.entry_bound == 0 {
            return Err(Error::InvalidConfig("entry_bound must be positive".into()));
        }
        if self.agreement < 2 {
            return Err(Error::InvalidConfig("agreement must be at least 2".into()));
        }
        if self.max_trials < self.agreement {
            return Err(Error::InvalidConfig(
                "max_trials must be at least the agreement count".into(),
            ));
        }
        Ok(())
    }
}

/// A stabilized generic initial ideal plus the provenance of the random
/// trials that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GinResult {
    pub ideal: MonomialIdeal,
    pub trials_used: u32,
    pub borel_verified: bool,
    pub seed: u64,
}

/// A random dense integer matrix with entries uniform in
/// `[-entry_bound, entry_bound]`, resampled until invertible.
pub fn random_transform<R: Rng + ?Sized>(
    nvars: usize,
    entry_bound: u64,
    rng: &mut R,
) -> TransformMatrix {
    assert!(nvars >= 1, "need at least one variable");
    assert!(entry_bound >= 1, "entry bound must be positive");
    let bound = entry_bound as i64;
    loop {
        let entries: Vec<Vec<Rational>> = (0..nvars)
            .map(|_| {
                (0..nvars)
                    .map(|_| {
                        let e: i64 = rng.random_range(-bound..=bound);
                        Rational::from(num_bigint::BigInt::from(e))
                    })
                    .collect()
            })
            .collect();
        if let Ok(t) = TransformMatrix::new(entries) {
            return t;
        }
    }
}

/// SplitMix64 step, used to derive independent per-trial seeds from the
/// configured seed so results do not depend on trial execution order.
fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn trial_rng(seed: u64, trial: u32) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(u64::from(trial) + 1)))
}

/// The generic initial ideal of a homogeneous ideal under the given order.
///
/// Samples independent random coordinate changes and recomputes the initial
/// ideal until [`GinConfig::agreement`] consecutive trials agree; the agreed
/// ideal must additionally be Borel-fixed. Deterministic for a fixed
/// `(ideal, order, config)`.
pub fn gin(ideal: &Ideal, order: &OrderSpec, config: &GinConfig) -> Result<GinResult> {
    config.validate()?;
    order
        .validate(ideal.nvars())
        .expect("order invalid for this ring");
    let n = ideal.nvars();
    let mut current: Option<MonomialIdeal> = None;
    let mut run_length = 0u32;
    for trial in 0..config.max_trials {
        let mut rng = trial_rng(config.seed, trial);
        let g = random_transform(n, config.entry_bound, &mut rng);
        let moved: Vec<_> = g
            .apply_all(ideal.generators())
            .into_iter()
            .map(|f| f.clear_content())
            .collect();
        let moved_ideal = Ideal::new(ideal.ring().clone(), moved)
            .expect("invertible substitution preserves the ideal's validity");
        let sample = initial_ideal(&moved_ideal, order);
        match &current {
            Some(prev) if *prev == sample => run_length += 1,
            _ => {
                current = Some(sample);
                run_length = 1;
            }
        }
        if run_length == config.agreement {
            let ideal = current.expect("agreement implies a current sample");
            if ideal.is_borel_fixed() {
                return Ok(GinResult {
                    ideal,
                    trials_used: trial + 1,
                    borel_verified: true,
                    seed: config.seed,
                });
            }
            return Err(Error::StabilizationFailure {
                trials: trial + 1,
                agreed_non_borel: true,
            });
        }
    }
    Err(Error::StabilizationFailure {
        trials: config.max_trials,
        agreed_non_borel: false,
    })
}

/// Castelnuovo-Mumford regularity of a homogeneous ideal: the regularity of
/// its reverse-lexicographic generic initial ideal, which for Borel-fixed
/// ideals is the maximum degree of a minimal generator.
pub fn regularity(ideal: &Ideal, config: &GinConfig) -> Result<u32> {
    let result = gin(ideal, &OrderSpec::RevLex, config)?;
    result
        .ideal
        .regularity_borel()
        .map_err(|_| Error::StabilizationFailure {
            trials: result.trials_used,
            agreed_non_borel: true,
        })
}

/// Deterministic shortcut: when `in_τ(I)` is a τ-segment ideal it already
/// equals `gin_τ(I)`, no random trials needed. Returns `None` when the
/// shortcut does not apply.
pub fn segment_shortcut(ideal: &Ideal, order: &OrderSpec) -> Option<MonomialIdeal> {
    let init = initial_ideal(ideal, order);
    if init.is_segment_ideal(order) {
        Some(init)
    } else {
        None
    }
}
