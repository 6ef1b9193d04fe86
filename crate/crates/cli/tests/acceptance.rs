//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kekule_cli::commands::{self, Format};
use kekule_cli::verify::{self, Mutation, Profile, Status, TABLE_M, TABLE_T};
use kekule_core::exact::{Degree, Rat, RatFn};
use kekule_core::kekule::{col_gf, col_gf_cf, h_poly, m_entry, m_row_gf, t_column, t_value};
use kekule_core::matrixcore::{char_poly_generic, tbar, unit_primitive};
use kekule_core::oracles::{count_lattice_points, count_magic_labellings, count_weighted_path};
use kekule_core::polyfam::{char_poly_a, p_poly};
use kekule_core::spectral::{asymp_diagonal, asymp_weighted_path, eigenvalues, m_column_growth, partial_fractions};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn to_f64(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

fn table_reproduction() -> Outcome {
    let text = commands::table(5, 9, Format::Tsv).map_err(|e| e.to_string())?;
    let mut seen = 0;
    for (n, line) in text.lines().skip(1).enumerate() {
        let cells: Vec<&str> = line.split('\t').skip(1).collect();
        ensure(cells.len() == 10, || format!("row {n} has {} cells", cells.len()))?;
        for (m, cell) in cells.iter().enumerate() {
            ensure(*cell == TABLE_T[n][m].to_string(), || format!("T({n},{m}) shows {cell}"))?;
            seen += 1;
        }
    }
    ensure(seen == 60, || format!("{seen} values"))?;
    Ok("60 values exact, T(4,6) = 658, T(5,9) = 17017".into())
}

fn four_model_agreement() -> Outcome {
    for n in 1..=6 {
        for m in 0..=5 {
            let values = [
                t_value(n, m),
                tbar(n as u64, m + 1).map_err(|e| e.to_string())?,
                count_weighted_path(n, m).map_err(|e| e.to_string())?,
                count_lattice_points(n, m).map_err(|e| e.to_string())?,
                count_magic_labellings(n, m).map_err(|e| e.to_string())?,
            ];
            ensure(values.iter().all(|v| *v == values[0]), || format!("({n},{m}): {values:?}"))?;
        }
    }
    Ok("recursion, transfer matrix, path, lattice and magic agree on 36 cells".into())
}

fn generating_function_identity() -> Outcome {
    for m in 0..=12 {
        let f = col_gf(m);
        ensure(f == col_gf_cf(m), || format!("closed form and continued fraction differ at m = {m}"))?;
        let expected: Vec<Rat> = t_column(m, 30).into_iter().map(Rat::from_integer).collect();
        ensure(f.series(30).ok() == Some(expected), || format!("series differ at m = {m}"))?;
    }
    Ok("0 <= m <= 12, 30 coefficients each".into())
}

fn characteristic_polynomial() -> Outcome {
    for n in 1..=12 {
        let explicit = char_poly_a(n);
        let p = p_poly(n);
        ensure(explicit.coeffs().iter().enumerate().all(|(k, c)| *c == p.coeff(n - k)), || format!("reversal at n = {n}"))?;
        let generic = char_poly_generic(&unit_primitive(n).map_err(|e| e.to_string())?);
        ensure(generic == explicit, || format!("n = {n}"))?;
    }
    let mut worst = 0f64;
    for n in 1..=20 {
        let f = char_poly_a(n);
        for l in eigenvalues(n).map_err(|e| e.to_string())?.eigenvalues {
            let scaled = f.eval_f64(l).abs() / (f.max_abs_coeff() * l.abs().max(1.0).powi(n as i32));
            worst = worst.max(scaled);
            ensure(scaled < 1e-8, || format!("n = {n}, lambda = {l}: scaled residual {scaled:e}"))?;
        }
    }
    Ok(format!("exact for n <= 12; worst scaled eigen residual {worst:.1e} for n <= 20"))
}

fn m_array_and_symmetry() -> Outcome {
    for (i, row) in TABLE_M.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            ensure(m_entry(i, j) == BigInt::from(v), || format!("M({i},{j})"))?;
        }
    }
    for s in 0..=20 {
        for i in 0..=s {
            ensure(m_entry(i, s - i) == m_entry(s - i, i), || format!("M({i},{}) asymmetric", s - i))?;
        }
    }
    for n in 2..=16 {
        let h = h_poly(n).map_err(|e| e.to_string())?;
        ensure(h.degree() == Degree::Finite(n as i64 - 2), || format!("deg H_{n} = {}", h.degree()))?;
        ensure(h.is_palindromic() && h.is_unimodal(), || format!("H_{n} shape"))?;
    }
    Ok("M reference values exact (M(5,5) = 1019051), symmetric for i+j <= 20, H_n palindromic unimodal for n <= 16".into())
}

fn m_closed_forms() -> Outcome {
    let nums = verify::expected_m_numerators();
    let dens = verify::expected_m_denominators();
    for m in 0..=4 {
        let r = m_row_gf(m).map_err(|e| e.to_string())?;
        let expected = RatFn::make(nums[m].clone(), dens[m].clone()).map_err(|e| e.to_string())?;
        ensure(r.gf == expected, || format!("M_{m}(x) differs from the reference form"))?;
    }
    ensure(nums[4].degree() == Degree::Finite(28), || "N_4 degree".into())?;
    let mut degrees = Vec::new();
    for m in 0..=5 {
        let d = m_row_gf(m).map_err(|e| e.to_string())?.gf.degree();
        // M_0(x) = 1/(1-x) has degree -1; the law -3-m is the one of the
        // product formulas, which start at m = 1
        let expected = if m == 0 { -1 } else { -3 - m as i64 };
        ensure(d == Degree::Finite(expected), || format!("deg M_{m} = {d}, expected {expected}"))?;
        degrees.push(d.to_string());
    }
    Ok(format!(
        "M_0..M_4 equal the reference forms; degrees m = 0..5: [{}] (M_0 = 1/(1-x) has degree -1, -3-m holds for 1 <= m <= 5)",
        degrees.join(", ")
    ))
}

fn partial_fractions_and_asymptotics() -> Outcome {
    let mut worst = 0f64;
    for n in 1..=6 {
        let pf = partial_fractions(n).map_err(|e| e.to_string())?;
        for big_n in 0..=40 {
            let exact = to_f64(&t_value(big_n, n - 1));
            let rel = (pf.coefficient(big_n as u32) - exact).abs() / exact;
            worst = worst.max(rel);
            ensure(rel < 1e-8, || format!("T({big_n},{}) relative error {rel:e}", n - 1))?;
        }
    }
    let exact = to_f64(&t_value(80, 4));
    let path_rel = (asymp_weighted_path(5, 80).map_err(|e| e.to_string())? - exact).abs() / exact;
    ensure(path_rel < 1e-4, || format!("path asymptotic relative error {path_rel:e}"))?;
    let mut ratios = Vec::new();
    for n in [10, 20, 30] {
        ratios.push(asymp_diagonal(n).map_err(|e| e.to_string())? / to_f64(&t_value(n - 1, n - 1)));
    }
    ensure(ratios.windows(2).all(|w| (w[1] - 1.0).abs() < (w[0] - 1.0).abs()), || format!("diagonal ratios {ratios:?}"))?;
    Ok(format!(
        "worst partial-fraction rel err {worst:.1e}; path rel err {path_rel:.1e} at (5, 80); diagonal ratios {:.4}, {:.4}, {:.4}",
        ratios[0], ratios[1], ratios[2]
    ))
}

fn growth_resolution() -> Outcome {
    let mut winners = Vec::new();
    for m in 0..=3 {
        let g = m_column_growth(m, 120).map_err(|e| e.to_string())?;
        ensure(g.decisive(), || format!("m = {m}: ratio {} not decisive", g.ratio))?;
        winners.push(if g.matches_2m3() { "2m+3" } else { "2m+1" });
    }
    let report = verify::run_matching("spectral.m-column-growth", Profile::Quick, Mutation::None);
    let entry = report.get("spectral.m-column-growth").ok_or("missing report entry")?;
    ensure(entry.status == Status::DiscrepancyNoted, || format!("status {:?}", entry.status))?;
    ensure(
        entry.detail.contains("U_m(cos(pi/(2m+3)))") && entry.detail.contains("1/(2 sin(pi/(2(2m+1))))"),
        || "entry does not quote both candidates".into(),
    )?;
    Ok(format!("each m <= 3 matches exactly one candidate ({}); report entry is discrepancy-noted", winners.join(", ")))
}

fn matrix_battery() -> Outcome {
    let clean = verify::run_matching("matrix.", Profile::Full, Mutation::None);
    for c in &clean.checks {
        ensure(c.status == Status::Pass, || format!("{} failed: {}", c.id, c.detail))?;
    }
    let mutated = verify::run_matching("matrix.", Profile::Full, Mutation::ExchangeIsIdentity);
    ensure(!mutated.passed(), || "the identity in place of the exchange matrix went unnoticed".into())?;
    let caught: Vec<&str> = mutated.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
    Ok(format!("{} matrix checks pass; with X = I the battery fails ({})", clean.checks.len(), caught.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("table reproduction", table_reproduction, Duration::from_secs(1)),
        ("four-model agreement", four_model_agreement, Duration::from_secs(120)),
        ("generating-function identity", generating_function_identity, Duration::from_secs(5)),
        ("characteristic polynomial", characteristic_polynomial, Duration::from_secs(10)),
        ("M array and symmetry", m_array_and_symmetry, Duration::from_secs(30)),
        ("M_m(x) closed forms", m_closed_forms, Duration::from_secs(60)),
        ("partial fractions and asymptotics", partial_fractions_and_asymptotics, Duration::from_secs(30)),
        ("column growth resolution", growth_resolution, Duration::from_secs(30)),
        ("matrix-identity battery", matrix_battery, Duration::from_secs(10)),
    ];
    let mut failures = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|d| {
            if elapsed <= *limit {
                Ok(d)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS ({elapsed:.2?}) {name}: {detail}", k + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL ({elapsed:.2?}) {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
