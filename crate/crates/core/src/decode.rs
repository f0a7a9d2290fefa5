//! Syndromes, coset-leader table decoding and seeded Monte Carlo checks of
//! the correction radius.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::QuantumCode;
use crate::error::{Error, Result};
use crate::gf2::{BitVector, RowReducer};
use crate::pauli::{Letter, PauliVector};
use crate::scan::{scan_up_to, SyndromeColumns};
use crate::Execution;

/// Largest stabilizer a decoder table is built for.
pub const MAX_TABLE_CHECKS: usize = 24;

/// Bit `i` is the symplectic product of stabilizer row `i` with the error.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Syndrome(pub BitVector);

impl Syndrome {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn from_words(len: usize, words: &[u64]) -> Self {
        Syndrome(BitVector::from_words(len, words.to_vec()))
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn syndrome(code: &QuantumCode, e: &PauliVector) -> Result<Syndrome> {
    if e.n() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            found: e.n(),
        });
    }
    let swapped = e.z().concat(e.x());
    Ok(Syndrome(BitVector::from_bits(
        code.stabilizer().rows().iter().map(|h| h.dot_words(&swapped)),
    )))
}

/// Syndrome -> minimum-weight error, filled breadth-first by weight.
#[derive(Clone, Debug)]
pub struct DecoderTable {
    n: usize,
    weight_cap: usize,
    columns: SyndromeColumns,
    leaders: HashMap<Syndrome, PauliVector>,
    /// Errors up to the cap whose syndrome was already taken.
    collisions: u64,
}

impl DecoderTable {
    pub fn coverage(&self) -> usize {
        self.leaders.len()
    }

    pub fn weight_cap(&self) -> usize {
        self.weight_cap
    }

    pub fn collisions(&self) -> u64 {
        self.collisions
    }

    /// True when every error up to the cap produced a fresh syndrome.
    pub fn all_distinct(&self) -> bool {
        self.collisions == 0
    }

    pub fn leader(&self, s: &Syndrome) -> Option<&PauliVector> {
        self.leaders.get(s)
    }

    pub fn leaders(&self) -> impl Iterator<Item = (&Syndrome, &PauliVector)> {
        self.leaders.iter()
    }

    pub fn syndrome_of(&self, e: &PauliVector) -> Syndrome {
        Syndrome::from_words(self.columns.n_checks(), &self.columns.syndrome_of(e))
    }

    /// Correction for `e`'s syndrome, if the table has one.
    pub fn decode(&self, e: &PauliVector) -> Option<&PauliVector> {
        self.leader(&self.syndrome_of(e))
    }
}

pub fn build_decoder_table(code: &QuantumCode, weight_cap: usize) -> Result<DecoderTable> {
    let checks = code.stabilizer().n_rows();
    if checks > MAX_TABLE_CHECKS {
        return Err(Error::TableTooLarge {
            rows: checks,
            cap: MAX_TABLE_CHECKS,
        });
    }
    let n = code.n();
    let columns = SyndromeColumns::new(code.stabilizer())?;
    let mut leaders = HashMap::new();
    leaders.insert(Syndrome(BitVector::zeros(checks)), PauliVector::identity(n));
    let mut collisions = 0;
    scan_up_to(&columns, weight_cap, |support, letters, syn| {
        let s = Syndrome::from_words(checks, syn);
        match leaders.entry(s) {
            Entry::Occupied(_) => collisions += 1,
            Entry::Vacant(slot) => {
                slot.insert(PauliVector::from_letters(n, support, letters).expect("valid support"));
            }
        }
        ControlFlow::Continue(())
    });
    Ok(DecoderTable {
        n,
        weight_cap,
        columns,
        leaders,
        collisions,
    })
}

/// First error of weight `1..=2 e_max` that has zero syndrome but is not a
/// stabilizer element, in the shared enumeration order.
pub fn find_uncorrectable(code: &QuantumCode, e_max: usize) -> Result<Option<PauliVector>> {
    let n = code.n();
    let columns = SyndromeColumns::new(code.stabilizer())?;
    let reducer = RowReducer::new(code.stabilizer());
    let mut found = None;
    scan_up_to(&columns, 2 * e_max, |support, letters, syn| {
        if syn.iter().any(|&s| s != 0) {
            return ControlFlow::Continue(());
        }
        let e = PauliVector::from_letters(n, support, letters).expect("valid support");
        if reducer.contains(&e.to_row()) {
            ControlFlow::Continue(())
        } else {
            found = Some(e);
            ControlFlow::Break(())
        }
    });
    Ok(found)
}

/// Every pair of errors of weight at most `e_max` is either distinguished by
/// its syndrome or equivalent up to a stabilizer.
pub fn correctability_check(code: &QuantumCode, e_max: usize) -> bool {
    matches!(find_uncorrectable(code, e_max), Ok(None))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationStats {
    pub n: usize,
    pub k: i64,
    pub d: Option<u64>,
    pub forced_weight: usize,
    pub trials: u64,
    pub failures: u64,
    pub seed: u64,
    pub rng: String,
}

impl SimulationStats {
    pub fn failure_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.failures as f64 / self.trials as f64
        }
    }
}

impl fmt::Display for SimulationStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.d.map_or_else(|| "?".to_string(), |d| d.to_string());
        write!(
            f,
            "[[{},{},{}]] weight={} trials={} failures={} rate={:.6} seed={}",
            self.n,
            self.k,
            d,
            self.forced_weight,
            self.trials,
            self.failures,
            self.failure_rate(),
            self.seed
        )
    }
}

/// Generator for trial `trial`: ChaCha8 seeded from `seed`, stream `trial`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Uniform support of size `weight`, uniform letter per position.
pub fn random_error<R: Rng>(rng: &mut R, n: usize, weight: usize) -> PauliVector {
    let support = sample(rng, n, weight).into_vec();
    let letters: Vec<Letter> = support
        .iter()
        .map(|_| Letter::ALL[rng.random_range(0..3)])
        .collect();
    PauliVector::from_letters(n, &support, &letters).expect("sampled support in range")
}

pub fn simulate(
    code: &QuantumCode,
    table: &DecoderTable,
    forced_weight: usize,
    trials: u64,
    seed: u64,
) -> Result<SimulationStats> {
    simulate_with(code, table, forced_weight, trials, seed, Execution::Parallel)
}

/// Draws `trials` errors of exactly `forced_weight`, decodes each with the
/// table and counts residuals outside the stabilizer group.
pub fn simulate_with(
    code: &QuantumCode,
    table: &DecoderTable,
    forced_weight: usize,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<SimulationStats> {
    let n = code.n();
    if forced_weight > n {
        return Err(Error::OutOfRange(format!("forced weight {forced_weight} > n = {n}")));
    }
    if table.weight_cap < forced_weight || table.n != n {
        return Err(Error::OutOfRange(format!(
            "decoder table (cap {}) does not cover weight {forced_weight}",
            table.weight_cap
        )));
    }
    let reducer = RowReducer::new(code.stabilizer());
    let fails = |trial: u64| -> u64 {
        let mut rng = trial_rng(seed, trial);
        let e = random_error(&mut rng, n, forced_weight);
        let ok = table.decode(&e).is_some_and(|leader| {
            let residual = e.add(leader).expect("same length");
            reducer.contains(&residual.to_row())
        });
        u64::from(!ok)
    };
    let failures = match exec {
        Execution::Serial => (0..trials).map(fails).sum(),
        Execution::Parallel => (0..trials).into_par_iter().map(fails).sum(),
    };
    Ok(SimulationStats {
        n,
        k: code.k(),
        d: code.nominal_distance(),
        forced_weight,
        trials,
        failures,
        seed,
        rng: "chacha8 seed_from_u64(seed) stream=trial".into(),
    })
}
