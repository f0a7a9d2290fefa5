#![allow(dead_code)]

use qrm_core::gf2::Gf2Matrix;
use qrm_core::reed_muller::rm_generator;
use qrm_core::{BitVector, PauliVector};

/// Parses `x | z` lines into a matrix.
pub fn listing(rows: &[&str]) -> Gf2Matrix {
    let parsed: Vec<BitVector> = rows
        .iter()
        .map(|r| r.parse::<PauliVector>().unwrap().to_row())
        .collect();
    Gf2Matrix::new(parsed[0].len(), parsed).unwrap()
}

pub fn text_rows(m: &Gf2Matrix) -> Vec<String> {
    m.rows()
        .iter()
        .map(|r| PauliVector::from_row(r).unwrap().to_string())
        .collect()
}

pub const SEED_2_1: [&str; 4] = ["1111 | 0000", "0000 | 1111", "0011 | 0101", "0101 | 0110"];

pub const GEN_8_3_3: [&str; 11] = [
    "11111111 | 00000000",
    "00001111 | 00000000",
    "00110011 | 00000000",
    "01010101 | 00000000",
    "00000000 | 11111111",
    "00000000 | 00001111",
    "00000000 | 00110011",
    "00000000 | 01010101",
    "00000011 | 00000101",
    "00000101 | 00010001",
    "00010001 | 00000110",
];

pub const STAB_8_3_3: [&str; 5] = [
    "11111111 | 00000000",
    "00000000 | 11111111",
    "00001111 | 00110011",
    "00110011 | 01010101",
    "01010101 | 00111100",
];

pub const STAB_4_2: [&str; 16] = [
    "1111111111111111 | 0000000000000000",
    "0000000011111111 | 0000000000000000",
    "0000111100001111 | 0000000000000000",
    "0011001100110011 | 0000000000000000",
    "0101010101010101 | 0000000000000000",
    "0000000000000000 | 1111111111111111",
    "0000000000000000 | 0000000011111111",
    "0000000000000000 | 0000111100001111",
    "0000000000000000 | 0011001100110011",
    "0000000000000000 | 0101010101010101",
    "0000000000001111 | 0000000000110011",
    "0000000000110011 | 0000000001010101",
    "0000000001010101 | 0000001100000011",
    "0000001100000011 | 0000010100000101",
    "0000010100000101 | 0001000100010001",
    "0001000100010001 | 0000000000111100",
];

/// D rows of the listed `[[32,10,6]]` stabilizer.
pub const STAB_32_D: [&str; 10] = [
    "00000000000000000000000011111111 | 00000000000000000000111100001111",
    "00000000000000000000111100001111 | 00000000000000000011001100110011",
    "00000000000000000011001100110011 | 00000000000000000101010101010101",
    "00000000000000000101010101010101 | 00000000000011110000000000001111",
    "00000000000011110000000000001111 | 00000000001100110000000000110011",
    "00000000001100110000000000110011 | 00000000010101010000000001010101",
    "00000000010101010000000001010101 | 00000011000000110000001100000011",
    "00000011000000110000001100000011 | 00000101000001010000010100000101",
    "00000101000001010000010100000101 | 00010001000100010001000100010001",
    "00010001000100010001000100010001 | 00000000000000000000111111110000",
];

pub const GEN_6_0_4: [&str; 6] = [
    "001111 | 000000",
    "110011 | 000000",
    "000000 | 001111",
    "000000 | 110011",
    "111111 | 010101",
    "010101 | 100101",
];

/// The `[[32,10,6]]` stabilizer listing with RM(1,5) in both G blocks.
pub fn stab_32() -> Gf2Matrix {
    let g = rm_generator(1, 5).unwrap().generator;
    let zero = Gf2Matrix::zeros(g.n_rows(), 32);
    g.hconcat(&zero)
        .unwrap()
        .stack(&zero.hconcat(&g).unwrap())
        .unwrap()
        .stack(&listing(&STAB_32_D))
        .unwrap()
}
