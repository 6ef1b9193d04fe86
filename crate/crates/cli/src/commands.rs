//! Rendering for the data subcommands. Every function returns the exact text
//! written to stdout, so output is reproducible byte for byte.

use std::fmt::Write as _;

use kekule_core::exact::{Poly, RatFn};
use kekule_core::kekule::{col_gf, cycle_gf, m_entry, m_row_gf, row_gf, t_column};
use kekule_core::oracles::{count_lattice_points, count_magic_labellings, count_weighted_cycle, count_weighted_path};
use kekule_core::polyfam::p_poly;
use num_bigint::BigInt;
use serde::Serialize;

use crate::CliError;

/// Upper bounds on indices accepted from the command line. They keep every
/// command interactive; larger requests are usage errors.
pub const MAX_TABLE_INDEX: usize = 2000;
pub const MAX_GF_INDEX: usize = 60;
pub const MAX_M_ROW_INDEX: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfKind {
    Row,
    Col,
    MRow,
    Cycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Path,
    Lattice,
    Magic,
    Cycle,
}

fn check_index(name: &str, value: usize, max: usize) -> Result<(), CliError> {
    if value > max {
        return Err(CliError::Usage(format!("{name} = {value} exceeds the limit {max}")));
    }
    Ok(())
}

fn tsv_grid(corner: &str, rows: &[Vec<BigInt>]) -> String {
    let width = rows.first().map_or(0, Vec::len);
    let mut out = String::from(corner);
    for c in 0..width {
        write!(out, "\t{c}").unwrap();
    }
    out.push('\n');
    for (r, row) in rows.iter().enumerate() {
        write!(out, "{r}").unwrap();
        for v in row {
            write!(out, "\t{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn json_grid(rows: &[Vec<BigInt>]) -> String {
    let strings: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect();
    let mut s = serde_json::to_string(&strings).expect("strings serialize");
    s.push('\n');
    s
}

/// `T(n, m)` for `0 <= n <= max_n`, `0 <= m <= max_m`.
pub fn table(max_n: usize, max_m: usize, format: Format) -> Result<String, CliError> {
    check_index("max-n", max_n, MAX_TABLE_INDEX)?;
    check_index("max-m", max_m, MAX_TABLE_INDEX)?;
    let columns: Vec<Vec<BigInt>> = (0..=max_m).map(|m| t_column(m, max_n + 1)).collect();
    let rows: Vec<Vec<BigInt>> = (0..=max_n).map(|n| columns.iter().map(|c| c[n].clone()).collect()).collect();
    Ok(match format {
        Format::Tsv => tsv_grid("n\\m", &rows),
        Format::Json => json_grid(&rows),
    })
}

/// `M_{i,j}` for `0 <= i <= max_i`, `0 <= j <= max_j`.
pub fn m_array(max_i: usize, max_j: usize, format: Format) -> Result<String, CliError> {
    check_index("max-i", max_i, MAX_TABLE_INDEX / 4)?;
    check_index("max-j", max_j, MAX_TABLE_INDEX / 4)?;
    let rows: Vec<Vec<BigInt>> = (0..=max_i).map(|i| (0..=max_j).map(|j| m_entry(i, j)).collect()).collect();
    Ok(match format {
        Format::Tsv => tsv_grid("i\\j", &rows),
        Format::Json => json_grid(&rows),
    })
}

#[derive(Serialize)]
struct GfOutput<'a> {
    kind: &'a str,
    index: usize,
    num: &'a Poly,
    den: &'a Poly,
    factored_den: String,
    display: String,
}

/// Writes `den` as a product of powers of `P_1 .. P_max` times whatever is
/// left over, e.g. `P_1(x)^3 * P_2(x)^2 * P_3(x)`.
pub fn factor_over_p(den: &Poly, max: usize) -> String {
    let mut rest = den.clone();
    let mut parts = Vec::new();
    for k in 1..=max {
        let p = p_poly(k);
        let mut e = 0;
        while rest.degree_usize().unwrap_or(0) > 0 {
            match rest.div_rem(&p) {
                Some((q, r)) if r.is_zero() => {
                    rest = q;
                    e += 1;
                }
                _ => break,
            }
        }
        match e {
            0 => {}
            1 => parts.push(format!("P_{k}(x)")),
            _ => parts.push(format!("P_{k}(x)^{e}")),
        }
    }
    if rest != Poly::one() {
        parts.push(format!("({rest})"));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

/// A generating function as JSON with a factored denominator.
pub fn gf(kind: GfKind, index: usize) -> Result<String, CliError> {
    let (name, f, max_factor): (&str, RatFn, usize) = match kind {
        GfKind::Row => {
            check_index("index", index, MAX_GF_INDEX)?;
            ("row", row_gf(index)?, 1)
        }
        GfKind::Col => {
            check_index("index", index, MAX_GF_INDEX)?;
            ("col", col_gf(index), index + 1)
        }
        GfKind::MRow => {
            check_index("index", index, MAX_M_ROW_INDEX)?;
            ("m-row", m_row_gf(index)?.gf, index + 1)
        }
        GfKind::Cycle => {
            check_index("index", index, MAX_GF_INDEX)?;
            ("cycle", cycle_gf(index), index + 1)
        }
    };
    let out = GfOutput {
        kind: name,
        index,
        num: f.num(),
        den: f.den(),
        factored_den: factor_over_p(f.den(), max_factor),
        display: f.to_string(),
    };
    let mut s = serde_json::to_string_pretty(&out).expect("serializable");
    s.push('\n');
    Ok(s)
}

/// Brute-force count; for `Model::Cycle`, `n` is the cycle length.
pub fn oracle(model: Model, n: usize, m: usize) -> Result<String, CliError> {
    let v = match model {
        Model::Path => count_weighted_path(n, m),
        Model::Lattice => count_lattice_points(n, m),
        Model::Magic => count_magic_labellings(n, m),
        Model::Cycle => count_weighted_cycle(n, m),
    }?;
    Ok(format!("{v}\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        assert_eq!(table(0, 3, Format::Tsv).unwrap(), "n\\m\t0\t1\t2\t3\n0\t1\t1\t1\t1\n");
        assert_eq!(table(1, 1, Format::Json).unwrap(), "[[\"1\",\"1\"],[\"1\",\"2\"]]\n");
        assert!(matches!(table(MAX_TABLE_INDEX + 1, 1, Format::Tsv), Err(CliError::Usage(_))));
    }

    #[test]
    fn factored_denominators() {
        let den = m_row_gf(2).unwrap().gf.den().clone();
        assert_eq!(factor_over_p(&den, 3), "P_1(x)^3 * P_2(x)^2 * P_3(x)");
        assert_eq!(factor_over_p(&Poly::one(), 3), "1");
        assert_eq!(factor_over_p(&Poly::from_ints(&[1, 1]), 2), "(1 + x)");
    }

    #[test]
    fn oracle_text() {
        assert_eq!(oracle(Model::Magic, 3, 3).unwrap(), "30\n");
        assert!(matches!(oracle(Model::Path, 20, 20), Err(CliError::Budget(_))));
        assert!(matches!(oracle(Model::Cycle, 2, 1), Err(CliError::Usage(_))));
    }
}
