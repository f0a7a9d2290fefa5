//! Quantum Reed-Muller generator construction, stabilizer derivation,
//! validation and puncturing.
//!
//! A generator is laid out as
//!
//! ```text
//! ( G1 | 0  )
//! ( 0  | G2 )
//! ( Dx | Dz )
//! ```
//!
//! with `G1 = G2 = RM(r - t - 1, r)`, `Dx` the degree-`(r - t)` monomial layer
//! and `Dz` the rows of `Dx` shifted up by one, the last row being a cyclic
//! left rotation of the first row of `Dx`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitVector, Gf2Matrix};
use crate::pauli::{swap_halves, symplectic_gram};
use crate::reed_muller::{binomial, degree_layer, rm_generator, MAX_VARIABLES};

/// `[[n, k, d]]` of the `(r, t)` family member. `k` may be zero or negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QrmParams {
    pub r: usize,
    pub t: usize,
    pub n: u64,
    pub k: i64,
    pub d: u64,
}

impl fmt::Display for QrmParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)
    }
}

fn check_range(r: usize, t: usize) -> Result<()> {
    if !(2..=MAX_VARIABLES).contains(&r) {
        return Err(Error::OutOfRange(format!("r = {r} must lie in 2..={MAX_VARIABLES}")));
    }
    if t < 1 || t >= r {
        return Err(Error::OutOfRange(format!("t = {t} must lie in 1..={}", r - 1)));
    }
    Ok(())
}

pub fn qrm_params(r: usize, t: usize) -> Result<QrmParams> {
    check_range(r, t)?;
    let n = 1u64 << r;
    let lower: u128 = (0..t as u64).map(|i| binomial(r as u64, i)).sum();
    let k = n as i64 - binomial(r as u64, t as u64) as i64 - 2 * lower as i64;
    let d = (1u64 << t) + (1u64 << (t - 1));
    Ok(QrmParams { r, t, n, k, d })
}

/// `t'` of the same-recipe code whose generator plays the stabilizer role
/// for `(r, t)`: the code with parameters `[[n, -k, .]]`.
pub fn dual_parameter(r: usize, t: usize) -> Result<usize> {
    check_range(r, t)?;
    Ok(r - t)
}

/// How far the first `Dx` row is rotated to form the last `Dz` row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RotationRule {
    /// `2^(t-1)` places: half the support block of a degree-`(r-t)` monomial.
    HalfBlock,
    /// Exactly `t` places.
    ShiftByT,
    Fixed(usize),
}

impl RotationRule {
    pub fn amount(self, t: usize) -> usize {
        match self {
            RotationRule::HalfBlock => 1 << (t - 1),
            RotationRule::ShiftByT => t,
            RotationRule::Fixed(s) => s,
        }
    }
}

/// Where a code came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    ReedMuller { r: usize, t: usize, rotation: usize },
    Literal { name: String },
    Css,
    Punctured { source: Box<Provenance>, position: usize },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::ReedMuller { r, t, rotation } => {
                write!(f, "reed-muller r={r} t={t} rotation={rotation}")
            }
            Provenance::Literal { name } => write!(f, "literal {name}"),
            Provenance::Css => write!(f, "css"),
            Provenance::Punctured { source, position } => {
                write!(f, "punctured at {position} from ({source})")
            }
        }
    }
}

/// The four blocks of a generator before assembly.
#[derive(Clone, Debug)]
pub struct GeneratorBlocks {
    pub g1: Gf2Matrix,
    pub g2: Gf2Matrix,
    pub dx: Gf2Matrix,
    pub dz: Gf2Matrix,
}

impl GeneratorBlocks {
    pub fn assemble(&self) -> Result<Gf2Matrix> {
        let n = self.g1.n_cols();
        if self.g2.n_cols() != n || self.dx.n_cols() != n || self.dz.n_cols() != n {
            return Err(Error::DimensionMismatch("generator blocks differ in width".into()));
        }
        if self.dx.n_rows() != self.dz.n_rows() {
            return Err(Error::DimensionMismatch(format!(
                "Dx has {} rows, Dz has {}",
                self.dx.n_rows(),
                self.dz.n_rows()
            )));
        }
        let zero = BitVector::zeros(n);
        let mut rows = Vec::with_capacity(self.g1.n_rows() + self.g2.n_rows() + self.dx.n_rows());
        rows.extend(self.g1.rows().iter().map(|g| g.concat(&zero)));
        rows.extend(self.g2.rows().iter().map(|g| zero.concat(g)));
        rows.extend(self.dx.rows().iter().zip(self.dz.rows()).map(|(x, z)| x.concat(z)));
        Gf2Matrix::new(2 * n, rows)
    }
}

pub fn generator_blocks(r: usize, t: usize, rule: RotationRule) -> Result<GeneratorBlocks> {
    check_range(r, t)?;
    let g1 = rm_generator(r - t - 1, r)?.generator;
    let dx = degree_layer(r - t, r)?;
    let m = dx.n_rows();
    let mut dz_rows: Vec<BitVector> = dx.rows()[1..].to_vec();
    dz_rows.push(dx.row(0).rotate_left(rule.amount(t)));
    debug_assert_eq!(dz_rows.len(), m);
    let dz = Gf2Matrix::new(dx.n_cols(), dz_rows)?;
    Ok(GeneratorBlocks {
        g2: g1.clone(),
        g1,
        dx,
        dz,
    })
}

/// Vectors symplectically orthogonal to every row of `m`, as a canonical
/// RREF basis.
pub fn symplectic_dual(m: &Gf2Matrix) -> Result<Gf2Matrix> {
    if !m.n_cols().is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!(
            "symplectic matrix width {} is not even",
            m.n_cols()
        )));
    }
    Ok(swap_halves(m).nullspace().row_basis())
}

/// Stabilizer of a generator: swap the X and Z halves and take the dual.
pub fn derive_stabilizer(generator: &Gf2Matrix) -> Result<Gf2Matrix> {
    symplectic_dual(generator)
}

/// Which product a witness refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `Hx Gz^T + Hz Gx^T = 0`
    StabilizerGenerator,
    /// `Hx Hz^T + Hz Hx^T = 0`
    SelfDual,
    /// `Hx Hz^T = 0`
    HxHzTranspose,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    /// Rows index the generator in construction order.
    Generator,
    /// Rows index the canonical stabilizer basis.
    Stabilizer,
}

/// First nonzero entry `(row, col)` of a product that should vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: Check,
    pub source: WitnessSource,
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub hg_ok: bool,
    pub selfdual_ok: bool,
    pub hxhzt_zero: bool,
    /// `Hx Hz^T = 0` only counts as a failure when `k > 0`.
    pub hxhzt_required: bool,
    pub witness: Option<Witness>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.hg_ok && self.selfdual_ok && (self.hxhzt_zero || !self.hxhzt_required)
    }
}

fn first_one(m: &Gf2Matrix) -> Option<(usize, usize)> {
    m.rows()
        .iter()
        .enumerate()
        .find_map(|(i, row)| row.ones_positions().first().map(|&j| (i, j)))
}

/// An additive quantum code held as generator and stabilizer matrices, both
/// `2n` columns wide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumCode {
    n: usize,
    k: i64,
    nominal_distance: Option<u64>,
    generator: Gf2Matrix,
    stabilizer: Gf2Matrix,
    report: ValidationReport,
    provenance: Provenance,
}

impl QuantumCode {
    /// Code generated by `generator`; the stabilizer is derived.
    pub fn from_generator(
        generator: Gf2Matrix,
        nominal_distance: Option<u64>,
        provenance: Provenance,
    ) -> Result<Self> {
        let stabilizer = derive_stabilizer(&generator)?;
        let n = generator.n_cols() / 2;
        let k = generator.rank() as i64 - n as i64;
        Self::assemble(n, k, generator, stabilizer, nominal_distance, provenance)
    }

    /// Code whose stabilizer is `stabilizer`; the generator is its symplectic
    /// dual.
    pub fn from_stabilizer(
        stabilizer: Gf2Matrix,
        nominal_distance: Option<u64>,
        provenance: Provenance,
    ) -> Result<Self> {
        let stabilizer = stabilizer.row_basis();
        let generator = symplectic_dual(&stabilizer)?;
        let n = stabilizer.n_cols() / 2;
        let k = n as i64 - stabilizer.n_rows() as i64;
        Self::assemble(n, k, generator, stabilizer, nominal_distance, provenance)
    }

    fn assemble(
        n: usize,
        k: i64,
        generator: Gf2Matrix,
        stabilizer: Gf2Matrix,
        nominal_distance: Option<u64>,
        provenance: Provenance,
    ) -> Result<Self> {
        let report = validate_matrices(&generator, &stabilizer, k)?;
        Ok(QuantumCode {
            n,
            k,
            nominal_distance,
            generator,
            stabilizer,
            report,
            provenance,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// Distance claimed by the construction, if any.
    pub fn nominal_distance(&self) -> Option<u64> {
        self.nominal_distance
    }

    pub fn generator(&self) -> &Gf2Matrix {
        &self.generator
    }

    pub fn stabilizer(&self) -> &Gf2Matrix {
        &self.stabilizer
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }

    /// Satisfies both the stabilizer-generator duality and the self-dual
    /// condition.
    pub fn is_valid(&self) -> bool {
        self.report.hg_ok && self.report.selfdual_ok
    }
}

pub fn validate(code: &QuantumCode) -> Result<ValidationReport> {
    validate_matrices(code.generator(), code.stabilizer(), code.k())
}

fn validate_matrices(generator: &Gf2Matrix, stabilizer: &Gf2Matrix, k: i64) -> Result<ValidationReport> {
    let n = generator.n_cols() / 2;
    let hg = symplectic_gram(stabilizer, generator)?;
    let hh = symplectic_gram(stabilizer, stabilizer)?;
    let hx = stabilizer.columns(0, n);
    let hz = stabilizer.columns(n, 2 * n);
    let hxhz = hx.mat_mul_transpose(&hz)?;

    let hg_ok = hg.is_zero();
    let selfdual_ok = hh.is_zero();
    let hxhzt_zero = hxhz.is_zero();
    let hxhzt_required = k > 0;

    let witness = if let Some((row, col)) = first_one(&hg) {
        Some(Witness {
            check: Check::StabilizerGenerator,
            source: WitnessSource::Stabilizer,
            row,
            col,
        })
    } else if !selfdual_ok {
        // With at most n rows the generator is itself stabilizer-shaped, and
        // its own rows locate the clash.
        let from_generator = if generator.n_rows() <= n {
            first_one(&symplectic_gram(generator, generator)?)
        } else {
            None
        };
        Some(match from_generator {
            Some((row, col)) => Witness {
                check: Check::SelfDual,
                source: WitnessSource::Generator,
                row,
                col,
            },
            None => {
                let (row, col) = first_one(&hh).expect("nonzero gram");
                Witness {
                    check: Check::SelfDual,
                    source: WitnessSource::Stabilizer,
                    row,
                    col,
                }
            }
        })
    } else if hxhzt_required && !hxhzt_zero {
        let (row, col) = first_one(&hxhz).expect("nonzero product");
        Some(Witness {
            check: Check::HxHzTranspose,
            source: WitnessSource::Stabilizer,
            row,
            col,
        })
    } else {
        None
    };

    Ok(ValidationReport {
        hg_ok,
        selfdual_ok,
        hxhzt_zero,
        hxhzt_required,
        witness,
    })
}

pub fn build_generator(r: usize, t: usize) -> Result<QuantumCode> {
    build_generator_with(r, t, RotationRule::HalfBlock)
}

/// Same as [`build_generator`] with an explicit last-row rotation.
pub fn build_generator_with(r: usize, t: usize, rule: RotationRule) -> Result<QuantumCode> {
    let params = qrm_params(r, t)?;
    let generator = generator_blocks(r, t, rule)?.assemble()?;
    QuantumCode::from_generator(
        generator,
        Some(params.d),
        Provenance::ReedMuller {
            r,
            t,
            rotation: rule.amount(t),
        },
    )
}

/// The stabilizer of `(r, t)` built directly by the generator recipe at
/// `t' = r - t`. Only defined for `k > 0`.
pub fn stabilizer_direct(r: usize, t: usize) -> Result<QuantumCode> {
    let params = qrm_params(r, t)?;
    if params.k <= 0 {
        return Err(Error::OutOfRange(format!(
            "({r},{t}) has k = {}; the direct stabilizer needs k > 0",
            params.k
        )));
    }
    build_generator(r, dual_parameter(r, t)?)
}

/// CSS code from two classical generators, `D` block empty.
pub fn css_code(g1: &Gf2Matrix, g2: &Gf2Matrix) -> Result<QuantumCode> {
    let n = g1.n_cols();
    let blocks = GeneratorBlocks {
        g1: g1.clone(),
        g2: g2.clone(),
        dx: Gf2Matrix::empty(n),
        dz: Gf2Matrix::empty(n),
    };
    QuantumCode::from_generator(blocks.assemble()?, None, Provenance::Css)
}

/// How a directly built stabilizer relates to the derived one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossDerivation {
    pub r: usize,
    pub t: usize,
    pub t_prime: usize,
    pub expected_rank: usize,
    pub derived_rank: usize,
    pub direct_rank: usize,
    /// Direct rows pairwise commute.
    pub direct_selfdual: bool,
    /// Every direct row lies in the generator row space.
    pub direct_within_code: bool,
    /// Nonzero entries of `H_direct` against the generator under the
    /// symplectic form.
    pub hg_violations: usize,
    pub rowspace_equal: bool,
}

impl CrossDerivation {
    /// The direct stabilizer describes a code of the same size inside the
    /// same generator span.
    pub fn consistent(&self) -> bool {
        self.direct_rank == self.expected_rank
            && self.derived_rank == self.expected_rank
            && self.direct_selfdual
            && self.direct_within_code
    }
}

pub fn cross_derivation(r: usize, t: usize) -> Result<CrossDerivation> {
    let params = qrm_params(r, t)?;
    let code = build_generator(r, t)?;
    let direct = stabilizer_direct(r, t)?;
    let direct_rows = direct.generator();
    let hg = symplectic_gram(direct_rows, code.generator())?;
    Ok(CrossDerivation {
        r,
        t,
        t_prime: dual_parameter(r, t)?,
        expected_rank: (params.n as i64 - params.k) as usize,
        derived_rank: code.stabilizer().rank(),
        direct_rank: direct_rows.rank(),
        direct_selfdual: symplectic_gram(direct_rows, direct_rows)?.is_zero(),
        direct_within_code: code.generator().rowspace_includes(direct_rows)?,
        hg_violations: hg.rows().iter().map(BitVector::count_ones).sum(),
        rowspace_equal: code.stabilizer().same_rowspace(direct_rows)?,
    })
}

/// Behaviour of a same-recipe stabilizer candidate for `(r, t)` whose last
/// row uses a given rotation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationCheck {
    pub rotation: usize,
    pub rank: usize,
    pub selfdual_ok: bool,
    pub within_code: bool,
    pub hg_violations: usize,
    pub rowspace_equal: bool,
}

pub fn rotation_check(r: usize, t: usize, rotation: usize) -> Result<RotationCheck> {
    let code = build_generator(r, t)?;
    let candidate = generator_blocks(r, dual_parameter(r, t)?, RotationRule::Fixed(rotation))?.assemble()?;
    let hg = symplectic_gram(&candidate, code.generator())?;
    Ok(RotationCheck {
        rotation,
        rank: candidate.rank(),
        selfdual_ok: symplectic_gram(&candidate, &candidate)?.is_zero(),
        within_code: code.generator().rowspace_includes(&candidate)?,
        hg_violations: hg.rows().iter().map(BitVector::count_ones).sum(),
        rowspace_equal: code.stabilizer().same_rowspace(&candidate)?,
    })
}

const SIX04_ROWS: [&str; 6] = [
    "001111000000",
    "110011000000",
    "000000001111",
    "000000110011",
    "111111010101",
    "010101100101",
];

/// The literal six-qubit `[[6,0,4]]` generator.
pub fn six04() -> QuantumCode {
    let generator = Gf2Matrix::from_strs(12, &SIX04_ROWS).expect("literal rows");
    QuantumCode::from_generator(
        generator,
        Some(4),
        Provenance::Literal {
            name: "six04".into(),
        },
    )
    .expect("literal code")
}

/// Removes qubit `pos`: keep the stabilizer elements acting trivially there,
/// then drop that coordinate.
pub fn puncture(code: &QuantumCode, pos: usize) -> Result<QuantumCode> {
    let n = code.n();
    if pos >= n {
        return Err(Error::OutOfRange(format!("position {pos} >= n = {n}")));
    }
    if !code.is_valid() {
        return Err(Error::InvalidCode("puncturing needs a valid code".into()));
    }
    let stab = code.stabilizer();
    // Coefficient vectors c with c.S having zero x and z bits at pos.
    let constraints = Gf2Matrix::new(
        stab.n_rows(),
        vec![
            BitVector::from_bits(stab.rows().iter().map(|r| r.get(pos))),
            BitVector::from_bits(stab.rows().iter().map(|r| r.get(n + pos))),
        ],
    )?;
    let coefficients = constraints.nullspace();
    let keep: Vec<usize> = (0..2 * n).filter(|&c| c != pos && c != n + pos).collect();
    let rows = coefficients
        .rows()
        .iter()
        .map(|c| {
            let mut acc = BitVector::zeros(2 * n);
            for i in c.ones_positions() {
                acc.xor_words(stab.row(i));
            }
            BitVector::from_bits(keep.iter().map(|&j| acc.get(j)))
        })
        .collect();
    let restricted = Gf2Matrix::new(2 * (n - 1), rows)?;
    QuantumCode::from_stabilizer(
        restricted,
        None,
        Provenance::Punctured {
            source: Box::new(code.provenance().clone()),
            position: pos,
        },
    )
}
