//! Pauli operators in binary symplectic `(x | z)` form, phases dropped.
//!
//! A position carries `X` for `(1,0)`, `Z` for `(0,1)` and `Y` for `(1,1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitVector, Gf2Matrix};

/// Single-qubit non-identity Pauli. The declaration order `X, Z, Y` is the
/// enumeration order used by every error scan in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    X,
    Z,
    Y,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::X, Letter::Z, Letter::Y];

    #[inline]
    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::X => (true, false),
            Letter::Z => (false, true),
            Letter::Y => (true, true),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PauliVector {
    x: BitVector,
    z: BitVector,
}

impl PauliVector {
    pub fn new(x: BitVector, z: BitVector) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(PauliVector { x, z })
    }

    pub fn identity(n: usize) -> Self {
        PauliVector {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
        }
    }

    /// Splits a `2n`-bit row into its `x` and `z` halves.
    pub fn from_row(row: &BitVector) -> Result<Self> {
        if !row.len().is_multiple_of(2) {
            return Err(Error::DimensionMismatch(format!(
                "symplectic row has odd length {}",
                row.len()
            )));
        }
        let n = row.len() / 2;
        Ok(PauliVector {
            x: row.slice(0, n),
            z: row.slice(n, 2 * n),
        })
    }

    /// Error with the given letters on the given positions.
    pub fn from_letters(n: usize, support: &[usize], letters: &[Letter]) -> Result<Self> {
        if support.len() != letters.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} positions but {} letters",
                support.len(),
                letters.len()
            )));
        }
        let mut p = PauliVector::identity(n);
        for (&pos, &letter) in support.iter().zip(letters) {
            if pos >= n {
                return Err(Error::OutOfRange(format!("position {pos} >= n = {n}")));
            }
            let (x, z) = letter.bits();
            p.x.set(pos, x);
            p.z.set(pos, z);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &BitVector {
        &self.x
    }

    pub fn z(&self) -> &BitVector {
        &self.z
    }

    /// The `2n`-bit row `x ++ z`.
    pub fn to_row(&self) -> BitVector {
        self.x.concat(&self.z)
    }

    pub fn letter(&self, pos: usize) -> Option<Letter> {
        match (self.x.get(pos), self.z.get(pos)) {
            (false, false) => None,
            (true, false) => Some(Letter::X),
            (false, true) => Some(Letter::Z),
            (true, true) => Some(Letter::Y),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of positions acted on nontrivially.
    pub fn weight(&self) -> usize {
        or_weight(self)
    }

    /// Product up to phase.
    pub fn add(&self, other: &PauliVector) -> Result<PauliVector> {
        Ok(PauliVector {
            x: self.x.xor(&other.x)?,
            z: self.z.xor(&other.z)?,
        })
    }

    /// Compact letter string such as `IXZY`.
    pub fn to_letters(&self) -> String {
        (0..self.n())
            .map(|p| match self.letter(p) {
                None => 'I',
                Some(Letter::X) => 'X',
                Some(Letter::Z) => 'Z',
                Some(Letter::Y) => 'Y',
            })
            .collect()
    }
}

/// Popcount of `x OR z`.
pub fn or_weight(p: &PauliVector) -> usize {
    p.x
        .words()
        .iter()
        .zip(p.z.words())
        .map(|(a, b)| (a | b).count_ones() as usize)
        .sum()
}

/// `a_x . b_z + a_z . b_x` over GF(2); `true` means the operators anticommute.
pub fn symplectic_product(a: &PauliVector, b: &PauliVector) -> Result<bool> {
    Ok(a.x.dot(&b.z)? ^ a.z.dot(&b.x)?)
}

/// Symplectic Gram matrix `A_x B_z^T + A_z B_x^T` of two `2n`-column matrices.
pub fn symplectic_gram(a: &Gf2Matrix, b: &Gf2Matrix) -> Result<Gf2Matrix> {
    if a.n_cols() != b.n_cols() || !a.n_cols().is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!(
            "symplectic product needs equal even widths, got {} and {}",
            a.n_cols(),
            b.n_cols()
        )));
    }
    // Swapping the halves of `b` turns the symplectic form into a plain dot product.
    let swapped = swap_halves(b);
    a.mat_mul_transpose(&swapped)
}

/// `(x | z) -> (z | x)` row by row.
pub fn swap_halves(m: &Gf2Matrix) -> Gf2Matrix {
    let n = m.n_cols() / 2;
    let rows = m
        .rows()
        .iter()
        .map(|r| r.slice(n, 2 * n).concat(&r.slice(0, n)))
        .collect();
    Gf2Matrix::new(m.n_cols(), rows).expect("halves preserve width")
}

impl fmt::Display for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.x, self.z)
    }
}

impl fmt::Debug for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliVector({self})")
    }
}

impl FromStr for PauliVector {
    type Err = Error;

    /// Parses the `x | z` layout.
    fn from_str(s: &str) -> Result<Self> {
        let (x, z) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing '|' in {s:?}")))?;
        PauliVector::new(x.trim().parse()?, z.trim().parse()?)
    }
}
