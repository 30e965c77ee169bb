//! One function per subcommand, each producing a renderable report.

use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};

use ktors::bounds::{
    compare_bounds_with_accuracy, ktheory_threshold, minkowski_gamma,
    prasad_log_volume, GelanderConstants,
};
use ktors::dd;
use ktors::exact_linalg::{smith_normal_form, IntMatrix};
use ktors::numberfield::{dedekind_zeta, riemann_zeta, BoundedReal, ImagQuadField};
use ktors::simplicial::{
    gabber_log_bound, homology, random_complex, simplex_count_within_cap,
    SimplicialComplex,
};

use crate::error::CliError;
use crate::report::{csv_cell, Report};

/// Tolerance added to the log-torsion comparison in the fuzzing harness;
/// both sides are f64 renderings of exact quantities.
const FUZZ_SLACK: f64 = 1e-9;

fn headers(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! literal is always an object here"),
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn check_precision(precision: f64) -> Result<(), CliError> {
    if precision > 0.0 && precision.is_finite() {
        Ok(())
    } else {
        Err(CliError::Input(format!(
            "--precision must be a positive finite real, got {precision}"
        )))
    }
}

fn check_rank(name: &str, value: u32) -> Result<(), CliError> {
    if value >= 2 {
        Ok(())
    } else {
        Err(CliError::Input(format!("--{name} must be at least 2, got {value}")))
    }
}

/// Splits a serialized enclosure `{"value", "error"}` into two CSV cells.
fn bounded_cells(v: &Value) -> (String, String) {
    (csv_cell(&v["value"]), csv_cell(&v["error"]))
}

pub fn snf(input: &Path) -> Result<Report, CliError> {
    let matrix: IntMatrix = serde_json::from_str(&read_input(input)?)?;
    let form = smith_normal_form(&matrix)?;
    let factors: Vec<String> =
        form.invariant_factors.iter().map(|d| d.to_string()).collect();
    let config = object(json!({
        "command": "snf",
        "input": input.display().to_string(),
    }));
    let payload = object(json!({
        "rows": matrix.rows(),
        "cols": matrix.cols(),
        "rank": form.rank,
        "factors": factors,
        "matrix": serde_json::to_value(&matrix).expect("matrix is serializable"),
    }));
    let csv_rows = vec![vec![
        matrix.rows().to_string(),
        matrix.cols().to_string(),
        form.rank.to_string(),
        factors.join(";"),
    ]];
    Ok(Report {
        config,
        payload,
        csv_notes: Vec::new(),
        csv_header: headers(&["rows", "cols", "rank", "factors"]),
        csv_rows,
    })
}

pub fn homology_cmd(input: &Path, n: Option<usize>) -> Result<Report, CliError> {
    let complex: SimplicialComplex = serde_json::from_str(&read_input(input)?)?;
    let degrees: Vec<usize> = match n {
        Some(d) => vec![d],
        None => (0..=complex.dim().unwrap_or(0)).collect(),
    };
    let mut groups = Vec::new();
    let mut csv_rows = Vec::new();
    for &d in &degrees {
        let g = homology(&complex, d)?;
        let torsion: Vec<String> = g.torsion.iter().map(|t| t.to_string()).collect();
        groups.push(json!({
            "degree": d,
            "betti": g.betti,
            "torsion": torsion,
        }));
        let joined = torsion.join(";");
        csv_rows.push(vec![d.to_string(), g.betti.to_string(), joined]);
    }
    let config = object(json!({
        "command": "homology",
        "input": input.display().to_string(),
        "n": n,
    }));
    let payload = object(json!({
        "vertices": complex.vertex_count(),
        "dimension": complex.dim(),
        "groups": groups,
        "complex": serde_json::to_value(&complex).expect("complex is serializable"),
    }));
    Ok(Report {
        config,
        payload,
        csv_notes: Vec::new(),
        csv_header: headers(&["degree", "betti", "torsion"]),
        csv_rows,
    })
}

pub fn gabber_verify(
    delta_max: usize,
    v: usize,
    dim: usize,
    trials: u64,
    seed: u64,
) -> Result<Report, CliError> {
    let mut checked_pairs = 0u64;
    let mut torsion_violations = 0u64;
    let mut count_violations = 0u64;
    for t in 0..trials {
        let k = random_complex(delta_max, v, dim, seed.wrapping_add(t));
        let top = k.dim().unwrap_or(0);
        for n in 0..=top {
            checked_pairs += 1;
            let g = homology(&k, n)?;
            if g.log_torsion_order() > gabber_log_bound(&k, n) + FUZZ_SLACK {
                torsion_violations += 1;
            }
            if !simplex_count_within_cap(&k, n) {
                count_violations += 1;
            }
        }
    }
    let violations = torsion_violations + count_violations;
    let config = object(json!({
        "command": "gabber-verify",
        "delta_max": delta_max,
        "v": v,
        "dim": dim,
        "trials": trials,
        "seed": seed,
    }));
    let payload = object(json!({
        "checked_pairs": checked_pairs,
        "torsion_violations": torsion_violations,
        "count_violations": count_violations,
        "violations": violations,
    }));
    let csv_rows = vec![vec![
        checked_pairs.to_string(),
        torsion_violations.to_string(),
        count_violations.to_string(),
        violations.to_string(),
    ]];
    Ok(Report {
        config,
        payload,
        csv_notes: Vec::new(),
        csv_header: headers(&[
            "checked_pairs",
            "torsion_violations",
            "count_violations",
            "violations",
        ]),
        csv_rows,
    })
}

pub fn zeta(m: Option<i64>, s: u32, precision: f64) -> Result<Report, CliError> {
    check_precision(precision)?;
    check_rank("s", s)?;
    let mut config = object(json!({
        "command": "zeta",
        "s": s,
        "precision": precision,
        "m": m,
    }));
    let mut payload = Map::new();
    let enclosure = match m {
        Some(m) => {
            let field = ImagQuadField::new(m)?;
            payload.insert("function".into(), json!("dedekind"));
            payload.insert("discriminant".into(), json!(field.discriminant()));
            dedekind_zeta(field, s, precision)?
        }
        None => {
            config.remove("m");
            payload.insert("function".into(), json!("riemann"));
            riemann_zeta(s, precision)
        }
    };
    let val = serde_json::to_value(enclosure).expect("enclosure is serializable");
    let (value_cell, error_cell) = bounded_cells(&val);
    payload.insert("value".into(), val["value"].clone());
    payload.insert("error".into(), val["error"].clone());
    Ok(Report {
        config,
        payload,
        csv_notes: Vec::new(),
        csv_header: headers(&["s", "value", "error"]),
        csv_rows: vec![vec![s.to_string(), value_cell, error_cell]],
    })
}

pub fn volume(m: i64, big_n: u32, precision: f64) -> Result<Report, CliError> {
    check_precision(precision)?;
    check_rank("N", big_n)?;
    let field = ImagQuadField::new(m)?;
    let log_volume = prasad_log_volume(field, big_n, precision)?;
    let val = serde_json::to_value(log_volume).expect("enclosure is serializable");
    let (value_cell, error_cell) = bounded_cells(&val);
    let config = object(json!({
        "command": "volume",
        "m": m,
        "N": big_n,
        "precision": precision,
    }));
    let payload = object(json!({
        "discriminant": field.discriminant(),
        "log_volume": val,
    }));
    let csv_rows = vec![vec![
        m.to_string(),
        field.discriminant().to_string(),
        big_n.to_string(),
        value_cell,
        error_cell,
    ]];
    Ok(Report {
        config,
        payload,
        csv_notes: Vec::new(),
        csv_header: headers(&[
            "m",
            "discriminant",
            "N",
            "log_volume_value",
            "log_volume_error",
        ]),
        csv_rows,
    })
}

pub fn gamma(big_n: u32) -> Result<Report, CliError> {
    check_rank("N", big_n)?;
    // Degree 2 is the only one in play: every field here is imaginary
    // quadratic.
    let order = minkowski_gamma(2, big_n);
    let (log_gamma, log_err) = dd::ln_big_abs(&order);
    let enclosure = BoundedReal::new(log_gamma, log_err);
    let val = serde_json::to_value(enclosure).expect("enclosure is serializable");
    let (value_cell, error_cell) = bounded_cells(&val);
    let config = object(json!({
        "command": "gamma",
        "N": big_n,
    }));
    let payload = object(json!({
        "d": 2,
        "gamma": order.to_string(),
        "log_gamma": val,
    }));
    let csv_rows = vec![vec![
        big_n.to_string(),
        order.to_string(),
        value_cell,
        error_cell,
    ]];
    Ok(Report {
        config,
        payload,
        csv_notes: Vec::new(),
        csv_header: headers(&["N", "gamma", "log_gamma_value", "log_gamma_error"]),
        csv_rows,
    })
}

pub fn bound(
    m: i64,
    n: u32,
    alpha: f64,
    delta: f64,
    precision: f64,
) -> Result<Report, CliError> {
    check_precision(precision)?;
    let consts = GelanderConstants::new(alpha, delta)?;
    let field = ImagQuadField::new(m)?;
    let report = ktheory_threshold(field, n, consts, precision)?;
    let rep = serde_json::to_value(&report).expect("report is serializable");
    let exponent = 2 * u64::from(n) * (u64::from(n) + 1);
    let config = object(json!({
        "command": "bound",
        "m": m,
        "n": n,
        "alpha": alpha,
        "delta": delta,
        "precision": precision,
    }));
    let (vol_value, vol_error) = bounded_cells(&rep["log_volume"]);
    let (hom_value, hom_error) = bounded_cells(&rep["log_homology_bound"]);
    let (thr_value, thr_error) = bounded_cells(&rep["log_p_threshold"]);
    let csv_rows = vec![vec![
        csv_cell(&rep["m"]),
        csv_cell(&rep["discriminant"]),
        csv_cell(&rep["n"]),
        csv_cell(&rep["N"]),
        exponent.to_string(),
        csv_cell(&rep["gamma"]),
        vol_value,
        vol_error,
        hom_value,
        hom_error,
        thr_value,
        thr_error,
        csv_cell(&rep["soule_log_exponent"]),
        csv_cell(&rep["alpha"]),
        csv_cell(&rep["delta"]),
    ]];
    let csv_notes = vec![
        ("excluded_primes".to_string(), csv_cell(&rep["excluded_primes"])),
        ("disclaimer".to_string(), csv_cell(&rep["disclaimer"])),
    ];
    let payload = object(json!({
        "discriminant_exponent": exponent,
        "report": rep,
    }));
    Ok(Report {
        config,
        payload,
        csv_notes,
        csv_header: headers(&[
            "m",
            "discriminant",
            "n",
            "N",
            "discriminant_exponent",
            "gamma",
            "log_volume_value",
            "log_volume_error",
            "log_homology_bound_value",
            "log_homology_bound_error",
            "log_p_threshold_value",
            "log_p_threshold_error",
            "soule_log_exponent",
            "alpha",
            "delta",
        ]),
        csv_rows,
    })
}

#[allow(clippy::too_many_arguments)]
pub fn compare(
    n_values: &[u32],
    m_values: &[i64],
    alpha: f64,
    delta: f64,
    precision: f64,
    seed: Option<u64>,
) -> Result<Report, CliError> {
    check_precision(precision)?;
    let consts = GelanderConstants::new(alpha, delta)?;
    let rows = compare_bounds_with_accuracy(n_values, m_values, consts, precision)?;
    let config = object(json!({
        "command": "compare",
        "n": n_values,
        "m": m_values,
        "alpha": alpha,
        "delta": delta,
        "precision": precision,
        "seed": seed,
    }));
    let mut row_values = Vec::new();
    let mut csv_rows = Vec::new();
    for row in &rows {
        let val = serde_json::to_value(row).expect("row is serializable");
        let (thr_value, thr_error) = bounded_cells(&val["log_p_threshold"]);
        csv_rows.push(vec![
            csv_cell(&val["n"]),
            csv_cell(&val["m"]),
            csv_cell(&val["discriminant"]),
            thr_value,
            thr_error,
            csv_cell(&val["soule_base"]),
            csv_cell(&val["soule_exponent"]),
            csv_cell(&val["winner"]),
        ]);
        row_values.push(val);
    }
    let payload = object(json!({ "rows": row_values }));
    Ok(Report {
        config,
        payload,
        csv_notes: Vec::new(),
        csv_header: headers(&[
            "n",
            "m",
            "discriminant",
            "log_p_threshold_value",
            "log_p_threshold_error",
            "soule_base",
            "soule_exponent",
            "winner",
        ]),
        csv_rows,
    })
}
