//! Low-weight error enumeration shared by the distance engine and the
//! decoder.
//!
//! Errors of a fixed weight are visited with supports in colexicographic
//! order (so all supports with largest position `m` come before any with
//! largest position `m + 1`). Within one support, letters run through
//! `X, Z, Y` with the first support position varying slowest. Syndromes are
//! accumulated incrementally from per-position columns.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::pauli::{Letter, PauliVector};
use crate::reed_muller::binomial;

/// Syndrome contribution of every single-qubit Pauli against a fixed set of
/// check rows, packed into `u64` words.
#[derive(Clone, Debug)]
pub struct SyndromeColumns {
    n: usize,
    n_checks: usize,
    words: usize,
    data: Vec<u64>,
}

impl SyndromeColumns {
    pub fn new(checks: &Gf2Matrix) -> Result<Self> {
        if !checks.n_cols().is_multiple_of(2) {
            return Err(Error::DimensionMismatch(format!(
                "check matrix width {} is not even",
                checks.n_cols()
            )));
        }
        let n = checks.n_cols() / 2;
        let n_checks = checks.n_rows();
        let words = n_checks.div_ceil(64).max(1);
        let mut data = vec![0u64; n * 3 * words];
        for (i, row) in checks.rows().iter().enumerate() {
            let (w, bit) = (i / 64, 1u64 << (i % 64));
            for p in 0..n {
                let hx = row.get(p);
                let hz = row.get(n + p);
                for (l, letter) in Letter::ALL.iter().enumerate() {
                    let (ex, ez) = letter.bits();
                    if (hx & ez) ^ (hz & ex) {
                        data[(p * 3 + l) * words + w] |= bit;
                    }
                }
            }
        }
        Ok(SyndromeColumns {
            n,
            n_checks,
            words,
            data,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_checks(&self) -> usize {
        self.n_checks
    }

    /// Words per syndrome.
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn column(&self, pos: usize, letter: Letter) -> &[u64] {
        let l = letter as usize;
        let start = (pos * 3 + l) * self.words;
        &self.data[start..start + self.words]
    }

    pub fn syndrome_of(&self, e: &PauliVector) -> Vec<u64> {
        let mut acc = vec![0u64; self.words];
        for pos in 0..self.n.min(e.n()) {
            if let Some(letter) = e.letter(pos) {
                for (a, c) in acc.iter_mut().zip(self.column(pos, letter)) {
                    *a ^= c;
                }
            }
        }
        acc
    }
}

/// Number of weight-`w` errors whose largest support position is `max_pos`.
pub fn group_size(w: usize, max_pos: usize) -> u128 {
    if w == 0 {
        return 0;
    }
    binomial(max_pos as u64, (w - 1) as u64) * 3u128.pow(w as u32)
}

/// Number of weight-`w` errors on `n` qubits.
pub fn weight_class_size(n: usize, w: usize) -> u128 {
    binomial(n as u64, w as u64) * 3u128.pow(w as u32)
}

/// Outcome of scanning one support group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupScan {
    /// Candidates visited, including the one that stopped the scan.
    pub examined: u64,
    pub stopped: bool,
}

/// Visits every weight-`w` error whose largest support position is
/// `max_pos`, in the pinned order. `visit` receives the support, the letters
/// and the syndrome words; returning `Break` stops the scan.
pub fn scan_group<F>(cols: &SyndromeColumns, w: usize, max_pos: usize, mut visit: F) -> GroupScan
where
    F: FnMut(&[usize], &[Letter], &[u64]) -> ControlFlow<()>,
{
    assert!(w >= 1 && max_pos < cols.n);
    let mut examined = 0u64;
    if max_pos + 1 < w {
        return GroupScan {
            examined,
            stopped: false,
        };
    }
    let words = cols.words;
    let mut support: Vec<usize> = (0..w - 1).collect();
    support.push(max_pos);
    let mut letters = vec![Letter::X; w];
    // acc[level] holds the syndrome of the first `level` assigned positions.
    let mut acc = vec![0u64; (w + 1) * words];
    loop {
        let stopped = assign(cols, &support, &mut letters, &mut acc, 0, &mut examined, &mut visit);
        if stopped {
            return GroupScan {
                examined,
                stopped: true,
            };
        }
        // Next colex combination of the lower w - 1 positions below max_pos.
        let k = w - 1;
        let Some(j) = (0..k).find(|&j| {
            let limit = if j + 1 < k { support[j + 1] } else { max_pos };
            support[j] + 1 < limit
        }) else {
            break;
        };
        support[j] += 1;
        for (i, s) in support.iter_mut().enumerate().take(j) {
            *s = i;
        }
    }
    GroupScan {
        examined,
        stopped: false,
    }
}

fn assign<F>(
    cols: &SyndromeColumns,
    support: &[usize],
    letters: &mut [Letter],
    acc: &mut [u64],
    level: usize,
    examined: &mut u64,
    visit: &mut F,
) -> bool
where
    F: FnMut(&[usize], &[Letter], &[u64]) -> ControlFlow<()>,
{
    let words = cols.words;
    let w = support.len();
    for letter in Letter::ALL {
        letters[level] = letter;
        let col = cols.column(support[level], letter);
        let (head, tail) = acc.split_at_mut((level + 1) * words);
        let prev = &head[level * words..];
        let next = &mut tail[..words];
        for i in 0..words {
            next[i] = prev[i] ^ col[i];
        }
        if level + 1 == w {
            *examined += 1;
            if visit(support, letters, next).is_break() {
                return true;
            }
        } else if assign(cols, support, letters, acc, level + 1, examined, visit) {
            return true;
        }
    }
    false
}

/// Serial scan of all errors of weight `1..=w_max` in the pinned order.
/// Returns the number of candidates visited and whether `visit` stopped it.
pub fn scan_up_to<F>(cols: &SyndromeColumns, w_max: usize, mut visit: F) -> GroupScan
where
    F: FnMut(&[usize], &[Letter], &[u64]) -> ControlFlow<()>,
{
    let mut examined = 0;
    for w in 1..=w_max.min(cols.n) {
        for max_pos in w - 1..cols.n {
            let g = scan_group(cols, w, max_pos, &mut visit);
            examined += g.examined;
            if g.stopped {
                return GroupScan {
                    examined,
                    stopped: true,
                };
            }
        }
    }
    GroupScan {
        examined,
        stopped: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitVector;

    fn checks() -> Gf2Matrix {
        let rows = ["1111 | 0000", "0000 | 1111", "0011 | 0101"];
        Gf2Matrix::new(
            8,
            rows.iter().map(|r| r.parse::<PauliVector>().unwrap().to_row()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn counts_match_closed_form() {
        let cols = SyndromeColumns::new(&checks()).unwrap();
        for w in 1..=4 {
            let mut seen = 0u64;
            for m in 0..4 {
                let g = scan_group(&cols, w, m, |_, _, _| ControlFlow::Continue(()));
                assert_eq!(g.examined as u128, group_size(w, m));
                seen += g.examined;
            }
            assert_eq!(seen as u128, weight_class_size(4, w));
        }
    }

    #[test]
    fn order_is_colex_then_letters() {
        let cols = SyndromeColumns::new(&checks()).unwrap();
        let mut out = Vec::new();
        scan_up_to(&cols, 2, |s, l, _| {
            out.push(PauliVector::from_letters(4, s, l).unwrap().to_letters());
            ControlFlow::Continue(())
        });
        assert_eq!(&out[..3], ["XIII", "ZIII", "YIII"]);
        assert_eq!(&out[12..15], ["XXII", "XZII", "XYII"]);
        assert_eq!(out[15], "ZXII");
        // supports {0,1}, {0,2}, {1,2}, ... colex
        assert_eq!(out[21], "XIXI");
        assert_eq!(out[30], "IXXI");
        assert_eq!(out.len(), 12 + 54);
    }

    #[test]
    fn incremental_syndrome_matches_direct() {
        let m = checks();
        let cols = SyndromeColumns::new(&m).unwrap();
        scan_up_to(&cols, 4, |s, l, syn| {
            let e = PauliVector::from_letters(4, s, l).unwrap();
            let direct: Vec<bool> = m
                .rows()
                .iter()
                .map(|r| {
                    let h = PauliVector::from_row(r).unwrap();
                    crate::pauli::symplectic_product(&h, &e).unwrap()
                })
                .collect();
            assert_eq!(BitVector::from_words(3, syn.to_vec()), BitVector::from_bits(direct));
            assert_eq!(cols.syndrome_of(&e), syn);
            ControlFlow::Continue(())
        });
    }
}
