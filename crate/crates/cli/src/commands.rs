use std::fs;
use std::io::Write;
use std::path::Path;

use qrm_core::construct::{Check, RotationRule};
use qrm_core::decode::{build_decoder_table, simulate};
use qrm_core::distance::{distance_lowweight_with, distance_rowspace, DistanceResult, Method, Target};
use qrm_core::format::{code_from_text, code_to_text, CodeDocument};
use qrm_core::{
    build_generator, build_generator_with, cross_derivation, dual_parameter, qrm_params,
    rotation_check, six04, Execution, QuantumCode,
};

use crate::{table, Failure, Fixture, Format, MethodArg, Rotation, SourceArgs, TargetArg};

type Out<'a> = std::io::StdoutLock<'a>;

pub fn params(out: &mut Out, r: usize, t: usize) -> Result<(), Failure> {
    writeln!(out, "{}", qrm_params(r, t)?)?;
    Ok(())
}

pub fn table(out: &mut Out, r_max: usize, t_max: usize) -> Result<(), Failure> {
    if r_max < 2 || t_max < 1 {
        return Err(Failure::Usage("need --r-max >= 2 and --t-max >= 1".into()));
    }
    write!(out, "{}", table::render(r_max, t_max)?)?;
    Ok(())
}

fn emit(out: &mut Out, text: &str, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn build(
    out: &mut Out,
    r: usize,
    t: usize,
    format: Format,
    rotation: Rotation,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let rule = match rotation {
        Rotation::HalfBlock => RotationRule::HalfBlock,
        Rotation::ShiftByT => RotationRule::ShiftByT,
    };
    let code = build_generator_with(r, t, rule)?;
    let text = match format {
        Format::Text => code_to_text(&code),
        Format::Json => serde_json::to_string_pretty(&CodeDocument::from_code(&code))? + "\n",
    };
    emit(out, &text, output)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verify(out: &mut Out, r: usize, t: usize) -> Result<(), Failure> {
    let params = qrm_params(r, t)?;
    let code = build_generator(r, t)?;
    let report = code.report();
    writeln!(out, "code ({r},{t}) {params}")?;
    writeln!(out, "stabilizer-generator duality: {}", mark(report.hg_ok))?;
    writeln!(out, "self-dual condition: {}", mark(report.selfdual_ok))?;
    let hx = if report.hxhzt_zero {
        "zero"
    } else if report.hxhzt_required {
        "FAIL"
    } else {
        "nonzero (not required for k <= 0)"
    };
    writeln!(out, "Hx.Hz^T: {hx}")?;
    if let Some(w) = report.witness {
        let check = match w.check {
            Check::StabilizerGenerator => "stabilizer-generator product",
            Check::SelfDual => "self-dual product",
            Check::HxHzTranspose => "Hx.Hz^T",
        };
        writeln!(out, "witness: {check} entry ({}, {}) over {:?} rows", w.row, w.col, w.source)?;
    }

    let mut cross_ok = true;
    if params.k > 0 {
        let cross = cross_derivation(r, t)?;
        cross_ok = cross.consistent();
        writeln!(
            out,
            "direct stabilizer t'={}: rank {}/{} self-orthogonal={} within-generator-span={} duality-violations={}",
            cross.t_prime,
            cross.direct_rank,
            cross.expected_rank,
            yes(cross.direct_selfdual),
            yes(cross.direct_within_code),
            cross.hg_violations
        )?;
        writeln!(out, "derived stabilizer rank {}", cross.derived_rank)?;
        writeln!(
            out,
            "derived and direct row spaces equal: {} (informational)",
            yes(cross.rowspace_equal)
        )?;
        let t_prime = dual_parameter(r, t)?;
        let mut rotations = vec![t_prime, RotationRule::HalfBlock.amount(t_prime)];
        rotations.sort_unstable();
        rotations.dedup();
        for rot in rotations {
            let c = rotation_check(r, t, rot)?;
            writeln!(
                out,
                "last-row rotation {}: rank {} self-orthogonal={} within-generator-span={} duality-violations={}",
                c.rotation,
                c.rank,
                yes(c.selfdual_ok),
                yes(c.within_code),
                c.hg_violations
            )?;
        }
        writeln!(out, "cross-derivation: {}", mark(cross_ok))?;
    }

    let passed = report.passed() && cross_ok;
    writeln!(out, "verdict: {}", if passed { "PASS" } else { "FAIL" })?;
    out.flush()?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Claim(format!("({r},{t}) does not satisfy its validity conditions")))
    }
}

fn fixture(which: Fixture) -> Result<QuantumCode, Failure> {
    Ok(match which {
        Fixture::Six04 => six04(),
        Fixture::Five13 => qrm_core::puncture(&six04(), 0)?,
    })
}

/// The code named by the source flags. A file with a `--` separator keeps
/// its listed stabilizer for the scan engine.
struct Loaded {
    label: String,
    code: QuantumCode,
    stabilizer: qrm_core::Gf2Matrix,
}

fn load(source: &SourceArgs) -> Result<Loaded, Failure> {
    let rt = source.rt.or(source.r.zip(source.t));
    if let Some((r, t)) = rt {
        let code = build_generator(r, t)?;
        return Ok(Loaded {
            label: format!("({r},{t}) {}", qrm_params(r, t)?),
            stabilizer: code.stabilizer().clone(),
            code,
        });
    }
    if let Some(path) = &source.input {
        let text = fs::read_to_string(path)?;
        let (generator, stabilizer) = if text.lines().any(|l| l.trim() == "--") {
            code_from_text(&text)?
        } else {
            let g = qrm_core::format::matrix_from_text(&text)?;
            let s = qrm_core::derive_stabilizer(&g)?;
            (g, s)
        };
        let code = QuantumCode::from_generator(
            generator,
            None,
            qrm_core::construct::Provenance::Literal {
                name: path.display().to_string(),
            },
        )?;
        return Ok(Loaded {
            label: path.display().to_string(),
            code,
            stabilizer,
        });
    }
    if let Some(which) = source.code {
        let code = fixture(which)?;
        return Ok(Loaded {
            label: format!("{which:?}").to_lowercase(),
            stabilizer: code.stabilizer().clone(),
            code,
        });
    }
    Err(Failure::Usage("no code given".into()))
}

fn describe(res: &DistanceResult) -> String {
    let method = match res.method {
        Method::Rowspace => "rowspace",
        Method::Lowweight => "lowweight",
    };
    let mut s = match res.value {
        Some(d) => format!("{method}: d = {d}"),
        None => match res.upper_bound {
            Some(u) => format!("{method}: {} <= d <= {u}", res.lower_bound),
            None => format!("{method}: no nonzero word (searched below {})", res.lower_bound),
        },
    };
    s.push_str(&format!(" work={}", res.work));
    if let Some(w) = &res.witness {
        s.push_str(&format!("\n  witness {w}  ({})", w.to_letters()));
    }
    s
}

#[allow(clippy::too_many_arguments)]
pub fn distance(
    out: &mut Out,
    source: &SourceArgs,
    method: MethodArg,
    max_weight: usize,
    row_cap: usize,
    target: TargetArg,
    format: Format,
) -> Result<(), Failure> {
    let loaded = load(source)?;
    let target = match target {
        TargetArg::Normalizer => Target::Normalizer,
        TargetArg::Logical => Target::Logical,
    };
    let mut results = Vec::new();
    if matches!(method, MethodArg::Rowspace | MethodArg::Both) {
        results.push(distance_rowspace(loaded.code.generator(), row_cap)?);
    }
    if matches!(method, MethodArg::Lowweight | MethodArg::Both) {
        results.push(distance_lowweight_with(
            &loaded.stabilizer,
            max_weight,
            target,
            Execution::Parallel,
        )?);
    }
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&results)?)?,
        Format::Text => {
            writeln!(out, "code {}", loaded.label)?;
            for res in &results {
                writeln!(out, "{}", describe(res))?;
            }
        }
    }
    if let [a, b] = results.as_slice() {
        if a.value.is_some() && b.value.is_some() && a.value != b.value {
            return Err(Failure::Claim(format!(
                "engines disagree: {:?} vs {:?}",
                a.value, b.value
            )));
        }
    }
    Ok(())
}

pub fn decode_sim(
    out: &mut Out,
    source: &SourceArgs,
    errors: usize,
    trials: u64,
    seed: u64,
    format: Format,
) -> Result<(), Failure> {
    let loaded = load(source)?;
    let code = &loaded.code;
    let table = build_decoder_table(code, errors)?;
    let stats = simulate(code, &table, errors, trials, seed)?;
    match format {
        Format::Text => writeln!(out, "{stats}")?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&stats)?)?,
    }
    // Below half the distance every error must be corrected.
    let radius = code.nominal_distance().map(|d| (d.saturating_sub(1) / 2) as usize);
    if stats.failures > 0 && radius.is_some_and(|e| errors <= e) {
        return Err(Failure::Claim(format!(
            "{} decoding failures at weight {errors}, within the correction radius",
            stats.failures
        )));
    }
    Ok(())
}

pub fn puncture(out: &mut Out, which: Fixture, position: usize, format: Format) -> Result<(), Failure> {
    let source = fixture(which)?;
    let code = qrm_core::puncture(&source, position)?;
    let table = build_decoder_table(&code, 1)?;
    let checks = code.stabilizer().n_rows();
    let dist = distance_lowweight_with(code.stabilizer(), code.n(), Target::Normalizer, Execution::Parallel)?;
    let d = dist.value.ok_or_else(|| Failure::Claim("punctured code has no finite distance".into()))?;
    let perfect = table.coverage() == 1usize << checks;
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "position": position,
                "n": code.n(),
                "k": code.k(),
                "d": d,
                "syndromes_at_weight_1": table.coverage(),
                "syndrome_space": 1u64 << checks,
                "perfect": perfect,
                "witness": dist.witness.map(|w| w.to_string()),
                "code": CodeDocument::from_code(&code),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        Format::Text => {
            writeln!(out, "punctured at {position}: [[{},{},{d}]]", code.n(), code.k())?;
            writeln!(
                out,
                "syndromes at weight <= 1: {} of {} (perfect: {})",
                table.coverage(),
                1u64 << checks,
                yes(perfect)
            )?;
            out.write_all(code_to_text(&code).as_bytes())?;
        }
    }
    Ok(())
}
