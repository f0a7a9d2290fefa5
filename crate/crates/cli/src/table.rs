use std::fmt::Write as _;

use qrm_core::qrm_params;

const CELL: usize = 6;

/// One row per `n`: `k` for each `t`.
pub type Grid = Vec<(u64, Vec<Option<i64>>)>;

/// `k` for every `(r, t)` cell; `None` where the family is undefined (t >= r).
pub fn grid(r_max: usize, t_max: usize) -> Result<Grid, qrm_core::Error> {
    (2..=r_max)
        .map(|r| {
            let cells = (1..=t_max)
                .map(|t| if t < r { qrm_params(r, t).map(|p| Some(p.k)) } else { Ok(None) })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((1u64 << r, cells))
        })
        .collect()
}

/// Rows are `n`, columns are `d = 3 * 2^(t-1)`, entries are `k`.
pub fn render(r_max: usize, t_max: usize) -> Result<String, qrm_core::Error> {
    let rows = grid(r_max, t_max)?;
    let mut out = String::new();
    write!(out, "{:>5} |", "n\\d").unwrap();
    for t in 1..=t_max {
        write!(out, "{:>CELL$}", 3u64 << (t - 1)).unwrap();
    }
    out.push('\n');
    out.push_str(&"-".repeat(6));
    out.push('+');
    out.push_str(&"-".repeat(CELL * t_max));
    out.push('\n');
    for (n, cells) in rows {
        let mut line = format!("{n:>5} |");
        for cell in cells {
            match cell {
                Some(k) => write!(line, "{k:>CELL$}").unwrap(),
                None => line.push_str(&" ".repeat(CELL)),
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}
