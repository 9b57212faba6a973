//! One handler per subcommand, each producing a [`Report`].

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use lefschetz_core::{
    build_matrix_m, classify, criterion_applies, det_m, failing_characteristics,
    hilbert_from_resolution, lozenge_count, lozenge_count_oracle, predict, scan, unimodality,
    wlp_by_determinant, wlp_direct, Characteristic, ConjectureCheck, FailingCharacteristics,
    HexagonSides, MaciParams, Result, ScanBox, ScanRow, WlpWitness,
    DEFAULT_ENUMERATION_BOUND,
};

use crate::output::{pad, Report};

fn params_json(p: MaciParams) -> Value {
    json!({
        "alpha": p.alpha(),
        "beta": p.beta(),
        "gamma": p.gamma(),
        "t": p.t(),
        "sigma": p.sigma(),
    })
}

fn opt_string<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

pub fn hilbert(p: MaciParams) -> Result<Report> {
    let h = hilbert_from_resolution(p);
    let report = unimodality(&h);
    let payload = json!({
        "params": params_json(p),
        "values": h.values(),
        "socle_degree": h.socle_degree(),
        "peaked_strictly_unimodal": report.is_peaked_strictly_unimodal(),
        "peak_start": report.peak_start(),
        "peak_length": report.peak_length(),
        "first_violation_degree": report.first_violation_degree(),
    });
    let csv_rows = h
        .values()
        .iter()
        .enumerate()
        .map(|(d, v)| vec![d.to_string(), v.to_string()])
        .collect();
    let mut text = format!("Hilbert function of {p}\n");
    writeln!(text, "{} {}", pad("degree", 6), pad("h(d)", 8)).unwrap();
    for (d, v) in h.values().iter().enumerate() {
        writeln!(text, "{} {}", pad(&d.to_string(), 6), pad(&v.to_string(), 8)).unwrap();
    }
    match (report.peak_start(), report.peak_length()) {
        (Some(s), Some(len)) => writeln!(
            text,
            "peaked strictly unimodal: peaks at degrees {s}..{}, socle degree {}",
            s + len - 1,
            h.socle_degree()
        )
        .unwrap(),
        _ => writeln!(
            text,
            "NOT peaked strictly unimodal: first violation at degree {}",
            report.first_violation_degree().unwrap_or_default()
        )
        .unwrap(),
    }
    Ok(Report {
        payload,
        csv_header: vec!["degree", "value"],
        csv_rows,
        text,
    })
}

pub fn matrix(p: MaciParams) -> Result<Report> {
    let m = build_matrix_m(p)?;
    let entries: Vec<Vec<String>> = m
        .entries()
        .iter()
        .map(|row| row.iter().map(|e| e.to_string()).collect())
        .collect();
    let payload = json!({
        "params": params_json(p),
        "size": m.size(),
        "top_rows": m.top_rows(),
        "bottom_rows": m.bottom_rows(),
        "entries": entries,
    });
    let mut csv_rows = Vec::new();
    for (i, row) in entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            csv_rows.push(vec![i.to_string(), j.to_string(), e.clone()]);
        }
    }
    let width = entries
        .iter()
        .flatten()
        .map(|e| e.len())
        .max()
        .unwrap_or(1);
    let mut text = format!(
        "criterion matrix for {p}: size {}, top rows {}, bottom rows {}\n",
        m.size(),
        m.top_rows(),
        m.bottom_rows()
    );
    for row in &entries {
        let cells: Vec<String> = row.iter().map(|e| pad(e, width)).collect();
        writeln!(text, "[ {} ]", cells.join(" ")).unwrap();
    }
    Ok(Report {
        payload,
        csv_header: vec!["row", "col", "entry"],
        csv_rows,
        text,
    })
}

pub fn det(p: MaciParams) -> Result<Report> {
    let m = build_matrix_m(p)?;
    let d = det_m(p)?;
    let payload = json!({
        "params": params_json(p),
        "size": m.size(),
        "determinant": d.to_string(),
    });
    let csv_rows = vec![vec![
        p.alpha().to_string(),
        p.beta().to_string(),
        p.gamma().to_string(),
        p.t().to_string(),
        m.size().to_string(),
        d.to_string(),
    ]];
    let text = format!("det M{p} = {d}  (matrix size {})\n", m.size());
    Ok(Report {
        payload,
        csv_header: vec!["alpha", "beta", "gamma", "t", "size", "determinant"],
        csv_rows,
        text,
    })
}

pub fn wlp(p: MaciParams, characteristics: &[Characteristic]) -> Result<Report> {
    let applicable = criterion_applies(p);
    let determinant: Option<BigInt> = if applicable { Some(det_m(p)?) } else { None };
    let mut rows_json = Vec::new();
    let mut csv_rows = Vec::new();
    let mut text = format!(
        "weak Lefschetz property of {p}  [case {}]\n",
        classify(p)
    );
    writeln!(
        text,
        "{} {} {} {} {}",
        pad("char", 6),
        pad("determinant", 12),
        pad("direct", 7),
        pad("agree", 6),
        pad("deficit at", 10),
    )
    .unwrap();
    for &c in characteristics {
        let det_holds = if applicable {
            Some(wlp_by_determinant(p, c)?.holds)
        } else {
            None
        };
        let direct = wlp_direct(p, c);
        let first_deficit = match &direct.witness {
            WlpWitness::Profile(profile) => profile.first_deficit(),
            _ => None,
        };
        let agreement = det_holds.map(|d| d == direct.holds);
        rows_json.push(json!({
            "characteristic": c.value(),
            "determinant_holds": det_holds,
            "direct_holds": direct.holds,
            "first_deficit_degree": first_deficit,
            "agreement": agreement,
        }));
        csv_rows.push(vec![
            p.alpha().to_string(),
            p.beta().to_string(),
            p.gamma().to_string(),
            p.t().to_string(),
            c.value().to_string(),
            applicable.to_string(),
            opt_string(&det_holds),
            direct.holds.to_string(),
            opt_string(&first_deficit),
            opt_string(&agreement),
        ]);
        let verdict = |holds: bool| if holds { "holds" } else { "fails" };
        writeln!(
            text,
            "{} {} {} {} {}",
            pad(&c.value().to_string(), 6),
            pad(det_holds.map_or("n/a", verdict), 12),
            pad(verdict(direct.holds), 7),
            pad(&opt_string(&agreement), 6),
            pad(&opt_string(&first_deficit), 10),
        )
        .unwrap();
    }
    if let Some(d) = &determinant {
        writeln!(text, "det M = {d}").unwrap();
    } else {
        writeln!(text, "determinant criterion not applicable").unwrap();
    }
    let payload = json!({
        "params": params_json(p),
        "case": classify(p).to_string(),
        "criterion_applicable": applicable,
        "determinant": determinant.map(|d| d.to_string()),
        "characteristics": rows_json,
    });
    Ok(Report {
        payload,
        csv_header: vec![
            "alpha",
            "beta",
            "gamma",
            "t",
            "characteristic",
            "criterion_applicable",
            "determinant_holds",
            "direct_holds",
            "first_deficit_degree",
            "agreement",
        ],
        csv_rows,
        text,
    })
}

pub fn primes(p: MaciParams, bound: u64) -> Result<Report> {
    let d = det_m(p)?;
    let outcome = failing_characteristics(p, bound)?;
    let (payload, factors_text, csv_row);
    match &outcome {
        FailingCharacteristics::EveryCharacteristic => {
            payload = json!({
                "params": params_json(p),
                "bound": bound,
                "determinant": d.to_string(),
                "fails_every_characteristic": true,
                "factors": Value::Null,
                "sign": Value::Null,
                "cofactor": Value::Null,
                "cofactor_is_prime": Value::Null,
            });
            factors_text = "det M = 0: the property fails in every characteristic".to_string();
            csv_row = vec![
                p.alpha().to_string(),
                p.beta().to_string(),
                p.gamma().to_string(),
                p.t().to_string(),
                bound.to_string(),
                d.to_string(),
                "true".into(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
            ];
        }
        FailingCharacteristics::Bounded(f) => {
            let factors: Vec<Value> = f
                .prime_powers
                .iter()
                .map(|&(prime, exponent)| json!({ "prime": prime, "exponent": exponent }))
                .collect();
            payload = json!({
                "params": params_json(p),
                "bound": bound,
                "determinant": d.to_string(),
                "fails_every_characteristic": false,
                "sign": f.sign,
                "factors": factors,
                "cofactor": f.cofactor.to_string(),
                "cofactor_is_prime": f.cofactor_is_prime,
            });
            let product = if f.prime_powers.is_empty() {
                "1".to_string()
            } else {
                f.prime_powers
                    .iter()
                    .map(|&(prime, exponent)| {
                        if exponent == 1 {
                            prime.to_string()
                        } else {
                            format!("{prime}^{exponent}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" · ")
            };
            factors_text = format!(
                "det M = {d}\n     = {}{}{}\nfailing characteristics ≤ {bound}: {{{}}}",
                if f.sign < 0 { "-" } else { "" },
                product,
                if f.cofactor == BigInt::from(1) {
                    String::new()
                } else {
                    format!(" · {} (unfactored cofactor)", f.cofactor)
                },
                f.primes()
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            csv_row = vec![
                p.alpha().to_string(),
                p.beta().to_string(),
                p.gamma().to_string(),
                p.t().to_string(),
                bound.to_string(),
                d.to_string(),
                "false".into(),
                f.sign.to_string(),
                f.prime_powers
                    .iter()
                    .map(|&(prime, exponent)| format!("{prime}^{exponent}"))
                    .collect::<Vec<_>>()
                    .join(" "),
                f.cofactor.to_string(),
                opt_string(&f.cofactor_is_prime),
            ];
        }
    }
    Ok(Report {
        payload,
        csv_header: vec![
            "alpha",
            "beta",
            "gamma",
            "t",
            "bound",
            "determinant",
            "fails_every_characteristic",
            "sign",
            "factors",
            "cofactor",
            "cofactor_is_prime",
        ],
        csv_rows: vec![csv_row],
        text: format!("{factors_text}\n"),
    })
}

pub fn tilings(a: u32, b: u32, c: u32) -> Result<Report> {
    let hexagon = HexagonSides::new(a, b, c)?;
    let count = lozenge_count(&hexagon);
    let oracle = lozenge_count_oracle(&hexagon).ok();
    let agreement = oracle.as_ref().map(|o| *o == count);
    let payload = json!({
        "a": a,
        "b": b,
        "c": c,
        "count": count.to_string(),
        "oracle_count": oracle.as_ref().map(|o| o.to_string()),
        "agreement": agreement,
    });
    let csv_rows = vec![vec![
        a.to_string(),
        b.to_string(),
        c.to_string(),
        count.to_string(),
        oracle.as_ref().map(|o| o.to_string()).unwrap_or_default(),
        opt_string(&agreement),
    ]];
    let mut text = format!("lozenge tilings of the ({a}, {b}, {c})-hexagon: {count}\n");
    match &oracle {
        Some(o) => writeln!(text, "enumeration oracle: {o} (agreement: {})", *o == count).unwrap(),
        None => writeln!(
            text,
            "enumeration oracle skipped (sides exceed {DEFAULT_ENUMERATION_BOUND})"
        )
        .unwrap(),
    }
    Ok(Report {
        payload,
        csv_header: vec!["a", "b", "c", "count", "oracle_count", "agreement"],
        csv_rows,
        text,
    })
}

pub fn predict_cmd(p: MaciParams) -> Result<Report> {
    let prediction = predict(p);
    let payload = json!({
        "params": params_json(p),
        "case": prediction.label.to_string(),
        "wlp_holds": prediction.wlp_holds,
        "status": prediction.status.to_string(),
        "condition": prediction.condition,
    });
    let csv_rows = vec![vec![
        p.alpha().to_string(),
        p.beta().to_string(),
        p.gamma().to_string(),
        p.t().to_string(),
        prediction.label.to_string(),
        prediction.wlp_holds.to_string(),
        prediction.status.to_string(),
        prediction.condition.clone(),
    ]];
    let text = format!(
        "{p}: case {}, predicted to {} the weak Lefschetz property ({}; {})\n",
        prediction.label,
        if prediction.wlp_holds { "have" } else { "fail" },
        prediction.status,
        prediction.condition
    );
    Ok(Report {
        payload,
        csv_header: vec![
            "alpha",
            "beta",
            "gamma",
            "t",
            "case",
            "predicted_holds",
            "status",
            "condition",
        ],
        csv_rows,
        text,
    })
}

const SCAN_CSV_HEADER: [&str; 19] = [
    "alpha",
    "beta",
    "gamma",
    "t",
    "sigma",
    "case",
    "predicted_holds",
    "prediction_status",
    "prediction_condition",
    "conjecture_check",
    "socle_degree",
    "peak_start",
    "peak_length",
    "resolution_minimal",
    "determinant",
    "characteristic",
    "determinant_holds",
    "direct_holds",
    "agreement",
];

pub fn scan_cmd(box_: ScanBox, characteristics: &[Characteristic]) -> Result<Report> {
    let rows = scan(box_, characteristics)?;
    let rows_json: Vec<Value> = rows.iter().map(scan_row_json).collect();
    let payload = json!({
        "box": {
            "alpha": [box_.alpha.0, box_.alpha.1],
            "beta": [box_.beta.0, box_.beta.1],
            "gamma": [box_.gamma.0, box_.gamma.1],
            "t": [box_.t.0, box_.t.1],
        },
        "characteristics": characteristics.iter().map(|c| c.value()).collect::<Vec<_>>(),
        "rows": rows_json,
    });
    let mut csv_rows = Vec::new();
    for row in &rows {
        for v in &row.verdicts {
            csv_rows.push(vec![
                row.params.alpha().to_string(),
                row.params.beta().to_string(),
                row.params.gamma().to_string(),
                row.params.t().to_string(),
                row.params.sigma().to_string(),
                row.prediction.label.to_string(),
                row.prediction.wlp_holds.to_string(),
                row.prediction.status.to_string(),
                row.prediction.condition.clone(),
                row.conjecture_check.to_string(),
                row.socle_degree.to_string(),
                row.peak_start.to_string(),
                row.peak_length.to_string(),
                row.resolution_minimal.to_string(),
                opt_string(&row.determinant),
                v.characteristic.value().to_string(),
                opt_string(&v.determinant_holds),
                v.direct_holds.to_string(),
                opt_string(&v.agreement),
            ]);
        }
    }
    let mut text = format!("scan: {} tuples\n", rows.len());
    writeln!(
        text,
        "{} {} {} {} {} {}",
        pad("params", 16),
        pad("case", 12),
        pad("prediction", 18),
        pad("check", 14),
        pad("det", 26),
        pad("verdicts (char: det/direct)", 30),
    )
    .unwrap();
    for row in &rows {
        let verdicts: Vec<String> = row
            .verdicts
            .iter()
            .map(|v| {
                let hf = |h: bool| if h { "holds" } else { "fails" };
                format!(
                    "{}: {}/{}",
                    v.characteristic,
                    v.determinant_holds.map_or("n/a", hf),
                    hf(v.direct_holds)
                )
            })
            .collect();
        writeln!(
            text,
            "{} {} {} {} {} {}",
            pad(&row.params.to_string(), 16),
            pad(&row.prediction.label.to_string(), 12),
            pad(
                &format!(
                    "{} ({})",
                    if row.prediction.wlp_holds { "holds" } else { "fails" },
                    row.prediction.status
                ),
                18
            ),
            pad(&row.conjecture_check.to_string(), 14),
            pad(&opt_string(&row.determinant), 26),
            pad(&verdicts.join("  "), 30),
        )
        .unwrap();
    }
    Ok(Report {
        payload,
        csv_header: SCAN_CSV_HEADER.to_vec(),
        csv_rows,
        text,
    })
}

fn scan_row_json(row: &ScanRow) -> Value {
    let verdicts: Vec<Value> = row
        .verdicts
        .iter()
        .map(|v| {
            json!({
                "characteristic": v.characteristic.value(),
                "determinant_holds": v.determinant_holds,
                "direct_holds": v.direct_holds,
                "agreement": v.agreement,
            })
        })
        .collect();
    json!({
        "params": params_json(row.params),
        "case": row.prediction.label.to_string(),
        "prediction": {
            "holds": row.prediction.wlp_holds,
            "status": row.prediction.status.to_string(),
            "condition": row.prediction.condition,
        },
        "determinant": row.determinant.as_ref().map(|d| d.to_string()),
        "socle_degree": row.socle_degree,
        "peak_start": row.peak_start,
        "peak_length": row.peak_length,
        "resolution_minimal": row.resolution_minimal,
        "conjecture_check": match row.conjecture_check {
            ConjectureCheck::Consistent => "consistent",
            ConjectureCheck::Counterexample => "COUNTEREXAMPLE",
            ConjectureCheck::Unchecked => "unchecked",
        },
        "verdicts": verdicts,
    })
}
