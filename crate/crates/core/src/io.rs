//! File formats: sample vectors as CSV keyed by grid coordinates,
//! coefficients and grids as JSON.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Read;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::grids::{CountReport, GridPoint, WeightLabel};
use crate::transforms::{Discretization, SampleVector, SpectrumCoefficients};

fn fmt_tuple(t: &[i64]) -> String {
    format!(
        "({})",
        t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    )
}

/// CSV with header `u1,...,un,re,im`, one row per grid point in canonical
/// order.
pub fn write_samples_csv(disc: &Discretization<'_>, f: &SampleVector) -> Result<String> {
    let n = disc.group().root_system().rank();
    if f.values.len() != disc.len() {
        return Err(Error::GridMismatch(format!(
            "{} values for {} grid points",
            f.values.len(),
            disc.len()
        )));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    header.push("re".into());
    header.push("im".into());
    w.write_record(&header)?;
    for (p, v) in disc.grid().iter().zip(&f.values) {
        let mut row: Vec<String> = p.u[1..].iter().map(|u| u.to_string()).collect();
        row.push(v.re.to_string());
        row.push(v.im.to_string());
        w.write_record(&row)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Input(format!("csv buffer: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Reads samples keyed by `(u1, ..., un)`. Every grid point must appear
/// exactly once.
pub fn read_samples_csv<R: Read>(disc: &Discretization<'_>, reader: R) -> Result<SampleVector> {
    let n = disc.group().root_system().rank();
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut rows: BTreeMap<Vec<i64>, Complex64> = BTreeMap::new();
    let mut duplicates = BTreeSet::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec?;
        if rec.len() != n + 2 {
            return Err(Error::Input(format!(
                "row {}: expected {} columns, found {}",
                line + 2,
                n + 2,
                rec.len()
            )));
        }
        let parse_err = |what: &str, s: &str| {
            Error::Input(format!("row {}: bad {what} value {s:?}", line + 2))
        };
        let key = (0..n)
            .map(|i| rec[i].parse::<i64>().map_err(|_| parse_err("u", &rec[i])))
            .collect::<Result<Vec<_>>>()?;
        let re: f64 = rec[n].parse().map_err(|_| parse_err("re", &rec[n]))?;
        let im: f64 = rec[n + 1].parse().map_err(|_| parse_err("im", &rec[n + 1]))?;
        if rows.insert(key.clone(), Complex64::new(re, im)).is_some() {
            duplicates.insert(key);
        }
    }
    let expected: BTreeSet<Vec<i64>> = disc.grid().iter().map(GridPoint::weight).collect();
    let missing: Vec<_> = expected.iter().filter(|k| !rows.contains_key(*k)).collect();
    let unknown: Vec<_> = rows.keys().filter(|k| !expected.contains(*k)).collect();
    if !missing.is_empty() || !unknown.is_empty() || !duplicates.is_empty() {
        let mut parts = Vec::new();
        let list = |v: Vec<&Vec<i64>>| v.iter().map(|t| fmt_tuple(t)).collect::<Vec<_>>().join(" ");
        if !missing.is_empty() {
            parts.push(format!("missing {}", list(missing)));
        }
        if !duplicates.is_empty() {
            parts.push(format!("duplicate {}", list(duplicates.iter().collect())));
        }
        if !unknown.is_empty() {
            parts.push(format!("not on grid {}", list(unknown)));
        }
        return Err(Error::Input(parts.join("; ")));
    }
    let values = disc.grid().iter().map(|p| rows[&p.weight()]).collect();
    disc.samples(values)
}

#[derive(Serialize, Deserialize)]
struct CoefficientEntry {
    lambda: Vec<i64>,
    re: f64,
    im: f64,
}

/// `[{"lambda": [...], "re": x, "im": y}, ...]` in canonical label order.
pub fn coefficients_json(disc: &Discretization<'_>, c: &SpectrumCoefficients) -> Value {
    let entries: Vec<CoefficientEntry> = disc
        .labels()
        .iter()
        .zip(&c.coeffs)
        .map(|(l, v)| CoefficientEntry {
            lambda: l.lambda.clone(),
            re: v.re,
            im: v.im,
        })
        .collect();
    serde_json::to_value(entries).expect("plain data")
}

pub fn read_coefficients_json(disc: &Discretization<'_>, text: &str) -> Result<SpectrumCoefficients> {
    let entries: Vec<CoefficientEntry> = serde_json::from_str(text)?;
    let mut by_label: BTreeMap<Vec<i64>, Complex64> = BTreeMap::new();
    let mut duplicates = Vec::new();
    for e in entries {
        if by_label.insert(e.lambda.clone(), Complex64::new(e.re, e.im)).is_some() {
            duplicates.push(fmt_tuple(&e.lambda));
        }
    }
    if !duplicates.is_empty() {
        return Err(Error::Input(format!("duplicate labels {}", duplicates.join(" "))));
    }
    let missing: Vec<String> = disc
        .labels()
        .iter()
        .filter(|l| !by_label.contains_key(&l.lambda))
        .map(|l| fmt_tuple(&l.lambda))
        .collect();
    if !missing.is_empty() || by_label.len() != disc.labels().len() {
        return Err(Error::Input(format!(
            "coefficients do not match the label set; missing {}",
            missing.join(" ")
        )));
    }
    Ok(SpectrumCoefficients {
        sigma: disc.sigma(),
        m: disc.m(),
        coeffs: disc.labels().iter().map(|l| by_label[&l.lambda]).collect(),
    })
}

pub fn grid_json(points: &[GridPoint], counts: &CountReport) -> Value {
    json!({ "points": points, "counts": counts })
}

pub fn labels_json(labels: &[WeightLabel], counts: &CountReport) -> Value {
    json!({ "labels": labels, "counts": counts })
}

/// CSV with header `u0,...,un,eps`.
pub fn grid_csv(points: &[GridPoint], rank: usize) -> String {
    let mut out: Vec<String> = (0..=rank).map(|i| format!("u{i}")).collect();
    out.push("eps".into());
    let mut s = out.join(",") + "\n";
    for p in points {
        let mut row: Vec<String> = p.u.iter().map(|v| v.to_string()).collect();
        row.push(p.eps.to_string());
        s += &(row.join(",") + "\n");
    }
    s
}

/// CSV with header `lambda1,...,lambdan,h`.
pub fn labels_csv(labels: &[WeightLabel], rank: usize) -> String {
    let mut out: Vec<String> = (1..=rank).map(|i| format!("lambda{i}")).collect();
    out.push("h".into());
    let mut s = out.join(",") + "\n";
    for l in labels {
        let mut row: Vec<String> = l.lambda.iter().map(|v| v.to_string()).collect();
        row.push(l.h.to_string());
        s += &(row.join(",") + "\n");
    }
    s
}
