//! Classical Reed-Muller generator matrices built from monomial evaluation
//! vectors.
//!
//! Variable `x_i` (1-based) reads bit `r - i` of the coordinate index, so
//! `x_1` is the most significant bit. With `r = 3` this gives
//! `x_1 = 00001111`, `x_2 = 00110011`, `x_3 = 01010101`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::gf2::{BitVector, Gf2Matrix};

/// Largest supported number of variables.
pub const MAX_VARIABLES: usize = 20;

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_r(r: usize) -> Result<()> {
    if r > MAX_VARIABLES {
        return Err(Error::OutOfRange(format!(
            "r = {r} exceeds the supported maximum {MAX_VARIABLES}"
        )));
    }
    Ok(())
}

/// A monomial `x_{i1} x_{i2} ...` in `r` variables, stored as its sorted
/// variable list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIndex {
    r: usize,
    variables: Vec<usize>,
}

impl MonomialIndex {
    pub fn new(r: usize, variables: Vec<usize>) -> Result<Self> {
        check_r(r)?;
        if variables.iter().any(|&v| v == 0 || v > r) {
            return Err(Error::OutOfRange(format!(
                "monomial variables {variables:?} must lie in 1..={r}"
            )));
        }
        if variables.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OutOfRange(format!(
                "monomial variables {variables:?} must be strictly increasing"
            )));
        }
        Ok(MonomialIndex { r, variables })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn variables(&self) -> &[usize] {
        &self.variables
    }

    pub fn degree(&self) -> usize {
        self.variables.len()
    }

    /// All monomials of exactly `degree`, in lexicographic order of their
    /// variable lists.
    pub fn of_degree(degree: usize, r: usize) -> Result<Vec<MonomialIndex>> {
        check_r(r)?;
        if degree > r {
            return Err(Error::OutOfRange(format!("degree {degree} exceeds r = {r}")));
        }
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=degree).collect();
        loop {
            out.push(MonomialIndex {
                r,
                variables: current.clone(),
            });
            // Advance to the next combination in lexicographic order.
            let Some(i) = (0..degree).rev().find(|&i| current[i] < r - (degree - 1 - i)) else {
                break;
            };
            current[i] += 1;
            for j in i + 1..degree {
                current[j] = current[j - 1] + 1;
            }
        }
        Ok(out)
    }
}

impl PartialOrd for MonomialIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.variables
            .cmp(&other.variables)
            .then(self.r.cmp(&other.r))
    }
}

/// Evaluation vector of a monomial over all `2^r` points.
pub fn monomial_eval(mono: &MonomialIndex) -> BitVector {
    let r = mono.r;
    let mask: usize = mono.variables.iter().map(|&i| 1usize << (r - i)).sum();
    BitVector::from_bits((0..1usize << r).map(|j| j & mask == mask))
}

/// Classical Reed-Muller code RM(order, r).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RmCode {
    pub order: usize,
    pub r: usize,
    pub generator: Gf2Matrix,
}

impl RmCode {
    pub fn length(&self) -> usize {
        1 << self.r
    }

    pub fn dimension(&self) -> usize {
        self.generator.n_rows()
    }

    pub fn min_distance(&self) -> usize {
        1 << (self.r - self.order)
    }
}

/// Rows of `degree_layer(d, r)` for every `d` in `0..=order`.
pub fn rm_generator(order: usize, r: usize) -> Result<RmCode> {
    check_r(r)?;
    if order > r {
        return Err(Error::OutOfRange(format!("order {order} exceeds r = {r}")));
    }
    let mut rows = Vec::new();
    for d in 0..=order {
        rows.extend(degree_layer(d, r)?.into_rows());
    }
    Ok(RmCode {
        order,
        r,
        generator: Gf2Matrix::new(1 << r, rows)?,
    })
}

/// Evaluation vectors of the degree-`d` monomials, lexicographic order.
pub fn degree_layer(d: usize, r: usize) -> Result<Gf2Matrix> {
    let rows = MonomialIndex::of_degree(d, r)?
        .iter()
        .map(monomial_eval)
        .collect();
    Gf2Matrix::new(1 << r, rows)
}

/// `2^r - sum_{i=0}^{t} C(r, i)`: the dimension of RM(r - t - 1, r).
pub fn k_rm(t: usize, r: usize) -> Result<i64> {
    check_r(r)?;
    if t > r {
        return Err(Error::OutOfRange(format!("t = {t} exceeds r = {r}")));
    }
    let sum: u128 = (0..=t as u64).map(|i| binomial(r as u64, i)).sum();
    Ok((1i64 << r) - sum as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(m: &Gf2Matrix) -> Vec<String> {
        m.rows().iter().map(|r| r.to_string()).collect()
    }

    fn mono(r: usize, v: &[usize]) -> String {
        monomial_eval(&MonomialIndex::new(r, v.to_vec()).unwrap()).to_string()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn monomial_rows() {
        assert_eq!(mono(3, &[]), "11111111");
        assert_eq!(mono(3, &[1]), "00001111");
        assert_eq!(mono(3, &[2]), "00110011");
        assert_eq!(mono(3, &[3]), "01010101");
        assert_eq!(mono(3, &[1, 2]), "00000011");
        assert_eq!(mono(3, &[1, 3]), "00000101");
        assert_eq!(mono(3, &[2, 3]), "00010001");
    }

    #[test]
    fn invalid_monomials() {
        assert!(MonomialIndex::new(3, vec![2, 1]).is_err());
        assert!(MonomialIndex::new(3, vec![1, 1]).is_err());
        assert!(MonomialIndex::new(3, vec![4]).is_err());
        assert!(MonomialIndex::new(3, vec![0]).is_err());
        assert!(MonomialIndex::new(21, vec![]).is_err());
    }

    #[test]
    fn monomial_ordering_is_lexicographic() {
        let mut all = MonomialIndex::of_degree(2, 4).unwrap();
        let lists: Vec<Vec<usize>> = all.iter().map(|m| m.variables().to_vec()).collect();
        assert_eq!(
            lists,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        all.reverse();
        all.sort();
        assert_eq!(all[0].variables(), &[1, 2]);
    }

    #[test]
    fn generators() {
        let rm13 = rm_generator(1, 3).unwrap();
        assert_eq!(
            rows(&rm13.generator),
            ["11111111", "00001111", "00110011", "01010101"]
        );
        assert_eq!(rows(&rm_generator(0, 2).unwrap().generator), ["1111"]);
        let rm25 = rm_generator(2, 5).unwrap();
        assert_eq!(rm25.dimension(), 16);
        assert_eq!(rm25.generator.rank(), 16);
        assert!(rm_generator(4, 3).is_err());
    }

    #[test]
    fn layers() {
        assert_eq!(
            rows(&degree_layer(2, 3).unwrap()),
            ["00000011", "00000101", "00010001"]
        );
        assert_eq!(rows(&degree_layer(1, 2).unwrap()), ["0011", "0101"]);
        let first = degree_layer(2, 5).unwrap().row(0).to_string();
        assert_eq!(first, format!("{}{}", "0".repeat(24), "1".repeat(8)));
        assert!(degree_layer(4, 3).is_err());
    }

    #[test]
    fn k_rm_values() {
        assert_eq!(k_rm(1, 3).unwrap(), 4);
        assert_eq!(k_rm(2, 5).unwrap(), 16);
        assert_eq!(k_rm(1, 2).unwrap(), 1);
        assert_eq!(k_rm(0, 2).unwrap(), 3);
        assert!(k_rm(4, 3).is_err());
        for r in 0..=8 {
            for t in 0..=r {
                let sum: u128 = (0..=t as u64).map(|i| binomial(r as u64, i)).sum();
                assert_eq!(k_rm(t, r).unwrap() + sum as i64, 1 << r);
            }
        }
    }

    #[test]
    fn generator_layers_nest() {
        for r in 1..=6 {
            for m in 1..=r {
                let prev = rm_generator(m - 1, r).unwrap().generator;
                let layer = degree_layer(m, r).unwrap();
                assert_eq!(rm_generator(m, r).unwrap().generator, prev.stack(&layer).unwrap());
            }
        }
    }
}
