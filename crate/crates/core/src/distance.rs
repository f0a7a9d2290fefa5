//! Exact minimum distance of additive codes in `(x | z)` form.
//!
//! Two independent engines:
//!
//! * [`distance_rowspace`] walks every nonzero combination of generator rows
//!   in reflected Gray-code order, one row toggle per step.
//! * [`distance_lowweight`] enumerates Pauli errors by increasing weight and
//!   stops at the first one that commutes with every stabilizer row.
//!
//! Both split their search space into contiguous pieces of the serial order
//! and reduce by (weight, serial position), so parallel runs return exactly
//! what a serial run would, witness and work counter included.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::symplectic_dual;
use crate::error::{Error, Result};
use crate::gf2::{BitVector, Gf2Matrix, RowReducer};
use crate::pauli::{Letter, PauliVector};
use crate::scan::{group_size, scan_group, weight_class_size, SyndromeColumns};
use crate::Execution;

/// Default limit on generator rows for the row-space walk (2^28 words).
pub const DEFAULT_ROW_CAP: usize = 28;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Rowspace,
    Lowweight,
}

/// What counts as a hit in the low-weight scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// Any nonzero vector commuting with the stabilizer, stabilizer elements
    /// included.
    Normalizer,
    /// Commuting vectors outside the stabilizer row space.
    Logical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub value: Option<usize>,
    pub lower_bound: usize,
    /// `None` when no nonzero word of the requested kind exists.
    pub upper_bound: Option<usize>,
    pub method: Method,
    /// Candidates examined, counted in serial enumeration order.
    pub work: u64,
    pub witness: Option<PauliVector>,
}

impl DistanceResult {
    fn bounds(lower: usize, upper: Option<usize>, method: Method, work: u64) -> Self {
        DistanceResult {
            value: (upper == Some(lower)).then_some(lower),
            lower_bound: lower,
            upper_bound: upper,
            method,
            work,
            witness: None,
        }
    }
}

/// Generator rows packed as `x` words followed by `z` words.
struct PackedRows {
    n: usize,
    stride: usize,
    half: usize,
    data: Vec<u64>,
}

impl PackedRows {
    fn new(g: &Gf2Matrix) -> Self {
        let n = g.n_cols() / 2;
        let half = n.div_ceil(64).max(1);
        let stride = 2 * half;
        let mut data = vec![0u64; g.n_rows() * stride];
        for (i, row) in g.rows().iter().enumerate() {
            let base = i * stride;
            for p in row.ones_positions() {
                let slot = if p < n { p } else { half * 64 + (p - n) };
                data[base + slot / 64] |= 1 << (slot % 64);
            }
        }
        PackedRows { n, stride, half, data }
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn weight(&self, state: &[u64]) -> usize {
        let (x, z) = state.split_at(self.half);
        x.iter().zip(z).map(|(a, b)| (a | b).count_ones() as usize).sum()
    }

    fn combine(&self, mask: u64) -> Vec<u64> {
        let mut state = vec![0u64; self.stride];
        for i in 0..64 {
            if mask >> i & 1 == 1 {
                for (s, r) in state.iter_mut().zip(self.row(i)) {
                    *s ^= r;
                }
            }
        }
        state
    }

    fn to_pauli(&self, state: &[u64]) -> PauliVector {
        let x = BitVector::from_words(self.n, state[..self.half].to_vec());
        let z = BitVector::from_words(self.n, state[self.half..].to_vec());
        PauliVector::new(x, z).expect("equal halves")
    }
}

#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Walks Gray-code indices `start..end`, calling `visit(index, gray(index),
/// state)` where `state` is the XOR of the rows selected by `gray(index)`.
fn gray_range<F: FnMut(u64, u64, &[u64])>(packed: &PackedRows, start: u64, end: u64, mut visit: F) {
    if start >= end {
        return;
    }
    let mut state = packed.combine(gray(start));
    visit(start, gray(start), &state);
    for i in start + 1..end {
        let row = packed.row(i.trailing_zeros() as usize);
        for (s, r) in state.iter_mut().zip(row) {
            *s ^= r;
        }
        visit(i, gray(i), &state);
    }
}

/// Serial Gray-code walk over every combination of the rows of `g`, the
/// zero combination included (index 0). Rows are limited to 63.
pub fn gray_walk<F: FnMut(u64, &PauliVector)>(g: &Gf2Matrix, mut visit: F) -> Result<()> {
    check_rows(g, 63)?;
    let packed = PackedRows::new(g);
    gray_range(&packed, 0, 1u64 << g.n_rows(), |_, mask, state| {
        visit(mask, &packed.to_pauli(state))
    });
    Ok(())
}

fn check_rows(g: &Gf2Matrix, row_cap: usize) -> Result<()> {
    if !g.n_cols().is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!(
            "generator width {} is not even",
            g.n_cols()
        )));
    }
    let cap = row_cap.min(63);
    if g.n_rows() > cap {
        return Err(Error::RowCapExceeded {
            rows: g.n_rows(),
            cap,
        });
    }
    Ok(())
}

pub fn distance_rowspace(g: &Gf2Matrix, row_cap: usize) -> Result<DistanceResult> {
    distance_rowspace_with(g, row_cap, Execution::Parallel)
}

/// Minimum OR-weight over all nonzero words generated by the rows of `g`.
pub fn distance_rowspace_with(g: &Gf2Matrix, row_cap: usize, exec: Execution) -> Result<DistanceResult> {
    check_rows(g, row_cap)?;
    let rows = g.n_rows();
    let total = 1u64 << rows;
    let packed = PackedRows::new(g);

    // Best (weight, index) in the half-open Gray index range.
    let best_in = |start: u64, end: u64| -> Option<(usize, u64)> {
        let mut best: Option<(usize, u64)> = None;
        gray_range(&packed, start.max(1), end, |i, _, state| {
            let w = packed.weight(state);
            if w > 0 && best.is_none_or(|(bw, _)| w < bw) {
                best = Some((w, i));
            }
        });
        best
    };

    let best = match exec {
        Execution::Serial => best_in(0, total),
        Execution::Parallel => {
            let chunk_bits = rows.min(10);
            let chunk_len = total >> chunk_bits;
            (0..1u64 << chunk_bits)
                .into_par_iter()
                .filter_map(|c| best_in(c * chunk_len, (c + 1) * chunk_len))
                .min()
        }
    };

    let work = total - 1;
    Ok(match best {
        Some((w, i)) => {
            let mut res = DistanceResult::bounds(w, Some(w), Method::Rowspace, work);
            res.witness = Some(packed.to_pauli(&packed.combine(gray(i))));
            res
        }
        None => DistanceResult::bounds(packed.n + 1, None, Method::Rowspace, work),
    })
}

pub fn distance_lowweight(stabilizer: &Gf2Matrix, w_max: usize) -> Result<DistanceResult> {
    distance_lowweight_with(stabilizer, w_max, Target::Normalizer, Execution::Parallel)
}

struct Hit {
    local_examined: u64,
    support: Vec<usize>,
    letters: Vec<Letter>,
}

/// Smallest-weight error commuting with every stabilizer row (and, for
/// [`Target::Logical`], outside the stabilizer row space), scanning weights
/// `1..=w_max`.
pub fn distance_lowweight_with(
    stabilizer: &Gf2Matrix,
    w_max: usize,
    target: Target,
    exec: Execution,
) -> Result<DistanceResult> {
    let cols = SyndromeColumns::new(stabilizer)?;
    let n = cols.n();
    let reducer = RowReducer::new(stabilizer);
    let accept = |support: &[usize], letters: &[Letter]| -> bool {
        match target {
            Target::Normalizer => true,
            Target::Logical => {
                let e = PauliVector::from_letters(n, support, letters).expect("valid support");
                !reducer.contains(&e.to_row())
            }
        }
    };
    let scan_one = |w: usize, max_pos: usize| -> Option<Hit> {
        let mut hit = None;
        let g = scan_group(&cols, w, max_pos, |support, letters, syn| {
            if syn.iter().all(|&s| s == 0) && accept(support, letters) {
                hit = Some((support.to_vec(), letters.to_vec()));
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        hit.map(|(support, letters)| Hit {
            local_examined: g.examined,
            support,
            letters,
        })
    };

    let window = match exec {
        Execution::Serial => 1,
        Execution::Parallel => 2 * rayon::current_num_threads(),
    };

    let mut work: u64 = 0;
    for w in 1..=w_max.min(n) {
        let groups: Vec<usize> = (w - 1..n).collect();
        for batch in groups.chunks(window) {
            let hits: Vec<Option<Hit>> = match exec {
                Execution::Serial => batch.iter().map(|&m| scan_one(w, m)).collect(),
                Execution::Parallel => batch.par_iter().map(|&m| scan_one(w, m)).collect(),
            };
            for (&max_pos, hit) in batch.iter().zip(hits) {
                match hit {
                    Some(hit) => {
                        work += hit.local_examined;
                        let witness = PauliVector::from_letters(n, &hit.support, &hit.letters)?;
                        let mut res = DistanceResult::bounds(w, Some(w), Method::Lowweight, work);
                        res.witness = Some(witness);
                        return Ok(res);
                    }
                    None => work += group_size(w, max_pos) as u64,
                }
            }
        }
        debug_assert_eq!(
            work,
            (1..=w).map(|v| weight_class_size(n, v) as u64).sum::<u64>()
        );
    }

    // Nothing up to w_max: only bounds are known.
    let exists = match target {
        Target::Normalizer => reducer.rank() < 2 * n,
        Target::Logical => {
            let normalizer = symplectic_dual(stabilizer)?;
            !stabilizer.rowspace_includes(&normalizer)?
        }
    };
    Ok(DistanceResult::bounds(
        w_max.min(n) + 1,
        exists.then_some(n),
        Method::Lowweight,
        work,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_generator, six04};

    /// Re-sums the selected rows for every mask; no incremental state.
    fn naive_min(g: &Gf2Matrix) -> Option<usize> {
        let n = g.n_cols() / 2;
        (1u64..1 << g.n_rows())
            .filter_map(|mask| {
                let mut acc = BitVector::zeros(2 * n);
                for i in 0..g.n_rows() {
                    if mask >> i & 1 == 1 {
                        acc.xor_assign(g.row(i)).unwrap();
                    }
                }
                let w = (0..n).filter(|&p| acc.get(p) || acc.get(n + p)).count();
                (w > 0).then_some(w)
            })
            .min()
    }

    #[test]
    fn rowspace_small_codes() {
        let code = build_generator(3, 1).unwrap();
        let r = distance_rowspace(code.generator(), DEFAULT_ROW_CAP).unwrap();
        assert_eq!(r.value, Some(3));
        assert_eq!(r.work, (1 << 11) - 1);
        assert_eq!(r.witness.as_ref().unwrap().weight(), 3);
        assert_eq!(naive_min(code.generator()), Some(3));
        let r = distance_rowspace(six04().generator(), DEFAULT_ROW_CAP).unwrap();
        assert_eq!(r.value, Some(4));
    }

    #[test]
    fn rowspace_cap_enforced() {
        let g = build_generator(3, 1).unwrap();
        assert!(matches!(
            distance_rowspace(g.generator(), 10),
            Err(Error::RowCapExceeded { rows: 11, cap: 10 })
        ));
    }

    #[test]
    fn serial_and_parallel_agree() {
        for (r, t) in [(3, 1), (3, 2), (2, 1)] {
            let g = build_generator(r, t).unwrap();
            let a = distance_rowspace_with(g.generator(), 28, Execution::Serial).unwrap();
            let b = distance_rowspace_with(g.generator(), 28, Execution::Parallel).unwrap();
            assert_eq!(a, b);
            let a = distance_lowweight_with(g.stabilizer(), 8, Target::Normalizer, Execution::Serial).unwrap();
            let b = distance_lowweight_with(g.stabilizer(), 8, Target::Normalizer, Execution::Parallel).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn lowweight_eight_three_three() {
        let code = build_generator(3, 1).unwrap();
        let r = distance_lowweight(code.stabilizer(), 3).unwrap();
        assert_eq!(r.value, Some(3));
        let w = r.witness.unwrap();
        assert!(code.generator().rowspace_contains(&w.to_row()).unwrap());
        let r = distance_lowweight(code.stabilizer(), 2).unwrap();
        assert_eq!((r.value, r.lower_bound, r.upper_bound), (None, 3, Some(8)));
        assert_eq!(r.work as u128, weight_class_size(8, 1) + weight_class_size(8, 2));
    }

    #[test]
    fn lowweight_logical_target_skips_stabilizer() {
        let code = six04();
        let all = distance_lowweight(code.stabilizer(), 6).unwrap();
        assert_eq!(all.value, Some(4));
        let logical =
            distance_lowweight_with(code.stabilizer(), 6, Target::Logical, Execution::Serial).unwrap();
        assert_eq!((logical.value, logical.upper_bound), (None, None));
    }

    #[test]
    fn gray_walk_visits_every_combination() {
        let g = build_generator(3, 2).unwrap();
        let mut masks = Vec::new();
        gray_walk(g.generator(), |mask, _| masks.push(mask)).unwrap();
        masks.sort_unstable();
        assert_eq!(masks, (0..32).collect::<Vec<u64>>());
    }
}
