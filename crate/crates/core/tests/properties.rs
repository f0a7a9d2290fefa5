mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qrm_core::decode::syndrome;
use qrm_core::distance::{distance_lowweight, distance_rowspace, gray_walk};
use qrm_core::reed_muller::rm_generator;
use qrm_core::{build_generator, qrm_params, symplectic_product, BitVector, Gf2Matrix, PauliVector};

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Gf2Matrix> {
    (1..=max_cols).prop_flat_map(move |cols| sized(max_rows, cols))
}

fn sized(max_rows: usize, cols: usize) -> impl Strategy<Value = Gf2Matrix> {
    prop::collection::vec(prop::collection::vec(any::<bool>(), cols), 0..=max_rows).prop_map(move |rows| {
        Gf2Matrix::new(cols, rows.into_iter().map(BitVector::from_bits).collect()).unwrap()
    })
}

fn pauli(n: usize) -> impl Strategy<Value = PauliVector> {
    (prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), n)).prop_map(|(x, z)| {
        PauliVector::new(BitVector::from_bits(x), BitVector::from_bits(z)).unwrap()
    })
}

/// Sum of the rows selected by `mask`, recomputed from scratch.
fn combination(m: &Gf2Matrix, mask: u64) -> BitVector {
    let mut acc = BitVector::zeros(m.n_cols());
    for (i, row) in m.rows().iter().enumerate() {
        if mask >> i & 1 == 1 {
            acc = acc.xor(row).unwrap();
        }
    }
    acc
}

fn span(m: &Gf2Matrix) -> Vec<BitVector> {
    (0..1u64 << m.n_rows()).map(|mask| combination(m, mask)).collect()
}

fn naive_or_min(m: &Gf2Matrix) -> Option<usize> {
    span(m)
        .iter()
        .map(|v| PauliVector::from_row(v).unwrap().weight())
        .filter(|&w| w > 0)
        .min()
}

proptest! {
    #[test]
    fn rank_is_rank_of_rref(m in matrix(12, 20)) {
        prop_assert_eq!(m.rank(), m.rref().rank());
        prop_assert!(m.rank() <= m.n_rows().min(m.n_cols()));
    }

    #[test]
    fn rank_nullity(m in matrix(12, 20)) {
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.n_rows(), m.n_cols());
        prop_assert_eq!(null.rank(), null.n_rows());
        for v in null.rows() {
            for row in m.rows() {
                prop_assert!(!row.dot(v).unwrap());
            }
        }
    }

    #[test]
    fn rotation_inverse(bits in prop::collection::vec(any::<bool>(), 1..200), t in 0usize..400) {
        let v = BitVector::from_bits(bits);
        let len = v.len();
        let back = v.rotate_left(t).rotate_left(len - t % len);
        prop_assert_eq!(&back, &v);
        let rotated = v.rotate_left(t);
        for i in 0..len {
            prop_assert_eq!(rotated.get(i), v.get((i + t) % len));
        }
    }

    #[test]
    fn rowspace_contains_matches_span(m in matrix(8, 10), probe in prop::collection::vec(any::<bool>(), 10)) {
        let probe = BitVector::from_bits(probe.into_iter().take(m.n_cols()));
        let in_span = span(&m).contains(&probe);
        prop_assert_eq!(m.rowspace_contains(&probe).unwrap(), in_span);
        for v in span(&m) {
            prop_assert!(m.rowspace_contains(&v).unwrap());
        }
    }

    #[test]
    fn symplectic_self_product_zero(p in (1usize..80).prop_flat_map(pauli)) {
        prop_assert!(!symplectic_product(&p, &p).unwrap());
    }

    #[test]
    fn symplectic_product_symmetric(
        (a, b) in (1usize..80).prop_flat_map(|n| (pauli(n), pauli(n)))
    ) {
        prop_assert_eq!(symplectic_product(&a, &b).unwrap(), symplectic_product(&b, &a).unwrap());
    }

    #[test]
    fn gray_walk_matches_naive(half in (1usize..8).prop_flat_map(|n| sized(12, 2 * n))) {
        let mut seen = vec![false; 1 << half.n_rows()];
        gray_walk(&half, |mask, p| {
            assert!(!seen[mask as usize]);
            seen[mask as usize] = true;
            assert_eq!(p.to_row(), combination(&half, mask));
        }).unwrap();
        prop_assert!(seen.iter().all(|&s| s));
        let res = distance_rowspace(&half, 12).unwrap();
        prop_assert_eq!(res.value, naive_or_min(&half));
    }

    #[test]
    fn text_round_trip(p in (1usize..70).prop_flat_map(pauli)) {
        let back: PauliVector = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn rm_duality() {
    for r in 1..=6 {
        for m in 0..r {
            let c = rm_generator(m, r).unwrap().generator;
            let dual = rm_generator(r - m - 1, r).unwrap().generator;
            assert!(c.mat_mul_transpose(&dual).unwrap().is_zero(), "RM({m},{r})");
            assert_eq!(c.rank() + dual.rank(), 1 << r);
            assert!(c.nullspace().same_rowspace(&dual).unwrap());
        }
    }
}

#[test]
fn rm_containment() {
    for r in 1..=6 {
        for m in 1..=r {
            let small = rm_generator(m - 1, r).unwrap().generator;
            let big = rm_generator(m, r).unwrap().generator;
            assert!(big.rowspace_includes(&small).unwrap());
        }
    }
}

/// `(G | 0)`: OR-weight of its words is the classical Hamming weight.
fn x_only(g: &Gf2Matrix) -> Gf2Matrix {
    g.hconcat(&Gf2Matrix::zeros(g.n_rows(), g.n_cols())).unwrap()
}

/// Checks `(0 | H)` plus `(I | 0)`: zero syndrome means `z = 0` and
/// `H x = 0`, so the scan finds the lightest word of the classical code
/// whose parity checks are `H`.
fn classical_checks(h: &Gf2Matrix) -> Gf2Matrix {
    let n = h.n_cols();
    Gf2Matrix::zeros(h.n_rows(), n)
        .hconcat(h)
        .unwrap()
        .stack(&Gf2Matrix::identity(n).hconcat(&Gf2Matrix::zeros(n, n)).unwrap())
        .unwrap()
}

#[test]
fn rm_min_weight_by_enumeration() {
    for r in 1..=5 {
        for m in 0..=r {
            let g = rm_generator(m, r).unwrap().generator;
            let expected = 1usize << (r - m);
            let found = if g.n_rows() <= 26 {
                distance_rowspace(&x_only(&g), 26).unwrap().value
            } else {
                let checks = if m == r {
                    Gf2Matrix::empty(1 << r)
                } else {
                    rm_generator(r - m - 1, r).unwrap().generator
                };
                distance_lowweight(&classical_checks(&checks), expected).unwrap().value
            };
            assert_eq!(found, Some(expected), "RM({m},{r})");
            if g.n_rows() <= 16 {
                assert_eq!(naive_or_min(&x_only(&g)), Some(expected));
            }
        }
    }
}

#[test]
fn syndrome_linearity_sampled() {
    let code = build_generator(5, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let random = |rng: &mut ChaCha8Rng| {
        let x = BitVector::from_bits((0..32).map(|_| rng.random::<bool>()));
        let z = BitVector::from_bits((0..32).map(|_| rng.random::<bool>()));
        PauliVector::new(x, z).unwrap()
    };
    for _ in 0..10_000 {
        let a = random(&mut rng);
        let b = random(&mut rng);
        let sum = syndrome(&code, &a.add(&b).unwrap()).unwrap();
        let parts = syndrome(&code, &a).unwrap().0.xor(&syndrome(&code, &b).unwrap().0).unwrap();
        assert_eq!(sum.0, parts);
    }
}

const TABLE: [(u64, [Option<i64>; 5]); 9] = [
    (4, [Some(0), None, None, None, None]),
    (8, [Some(3), Some(-3), None, None, None]),
    (16, [Some(10), Some(0), Some(-10), None, None]),
    (32, [Some(25), Some(10), Some(-10), Some(-25), None]),
    (64, [Some(56), Some(35), Some(0), Some(-35), Some(-56)]),
    (128, [Some(119), Some(91), Some(35), Some(-35), Some(-91)]),
    (256, [Some(246), Some(210), Some(126), Some(0), Some(-126)]),
    (512, [Some(501), Some(456), Some(336), Some(126), Some(-126)]),
    (1024, [Some(1012), Some(957), Some(792), Some(462), Some(0)]),
];

#[test]
fn parameter_grid() {
    let ds = [3u64, 6, 12, 24, 48];
    for (r, (n, row)) in (2usize..).zip(TABLE) {
        for (t, cell) in (1usize..).zip(row) {
            let params = qrm_params(r, t);
            match cell {
                Some(k) => {
                    let p = params.unwrap();
                    assert_eq!((p.n, p.k, p.d), (n, k, ds[t - 1]), "r={r} t={t}");
                }
                None => assert!(params.is_err(), "r={r} t={t}"),
            }
        }
    }
}

#[test]
fn k_sign_symmetry() {
    for r in 2..=12 {
        for t in 1..r {
            assert_eq!(qrm_params(r, t).unwrap().k, -qrm_params(r, r - t).unwrap().k);
        }
    }
}

#[test]
fn positive_k_codes_validate() {
    for r in 2..=6 {
        for t in 1..r {
            let p = qrm_params(r, t).unwrap();
            let code = build_generator(r, t).unwrap();
            assert_eq!(code.generator().n_rows() as i64, p.n as i64 + p.k);
            assert_eq!(code.generator().rank() as i64, p.n as i64 + p.k);
            assert_eq!(code.k(), p.k);
            if p.k > 0 {
                assert!(code.report().passed(), "({r},{t})");
                assert_eq!(code.stabilizer().n_rows() as i64, p.n as i64 - p.k);
            } else {
                assert!(!code.report().selfdual_ok, "({r},{t})");
            }
        }
    }
}
