//! Generalized Kac-Peterson matrices
//!
//! `S^sigma_{lambda,mu} = i^{|Pi|/2} phi^sigma_lambda(-mu/M) / sqrt(d M^n h_M(lambda) h_M(mu))`
//!
//! with `M = k + q^sigma`, indexed by `Lambda^sigma_{P,M}`.

use num_complex::Complex64;
use serde_json::json;

use crate::error::{Error, Result};
use crate::grids::{enumerate_labels, WeightLabel};
use crate::sign::{q_sigma, SignHom};
use crate::transforms::{OrbitFunction, PhasePoint};
use crate::weylgroup::WeylGroup;

#[derive(Debug, Clone)]
pub struct SMatrix {
    pub algebra: String,
    pub sigma: SignHom,
    pub level: u64,
    pub m: u64,
    pub labels: Vec<WeightLabel>,
    pub entries: Vec<Vec<Complex64>>,
    pub phase: Complex64,
    pub unitarity_defect: f64,
    pub symmetry_defect: f64,
}

impl SMatrix {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pair = |z: &Complex64| json!([z.re, z.im]);
        json!({
            "algebra": self.algebra,
            "sigma": self.sigma,
            "level": self.level,
            "M": self.m,
            "labels": self.labels.iter().map(|l| &l.lambda).collect::<Vec<_>>(),
            "entries": self
                .entries
                .iter()
                .map(|row| row.iter().map(pair).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "phase": pair(&self.phase),
            "defects": {
                "unitarity": self.unitarity_defect,
                "symmetry": self.symmetry_defect,
            },
        })
    }

    /// One matrix row per line, `re,im` interleaved per entry.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row
                .iter()
                .flat_map(|z| [z.re.to_string(), z.im.to_string()])
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// `i^e`.
fn i_power(e: u64) -> Complex64 {
    match e % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

pub fn build_s_matrix(group: &WeylGroup, sigma: SignHom, level: u64) -> Result<SMatrix> {
    if level == 0 {
        return Err(Error::Input("level must be positive".into()));
    }
    let m = level + q_sigma(group.root_system(), sigma)?;
    build_at(group, sigma, level, m)
}

fn build_at(group: &WeylGroup, sigma: SignHom, level: u64, m: u64) -> Result<SMatrix> {
    let rs = group.root_system();
    let labels = enumerate_labels(group, sigma, m)?;
    let phase = i_power(rs.half_num_roots());
    let scale = rs.d as f64 * (m as f64).powi(rs.rank() as i32);

    let args = labels
        .iter()
        .map(|mu| {
            let neg: Vec<i64> = mu.lambda.iter().map(|v| -v).collect();
            PhasePoint::new(rs, &rs.scaled_weight(&neg, m))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::with_capacity(labels.len());
    for lam in &labels {
        let f = OrbitFunction::new(group, sigma, &lam.lambda)?;
        entries.push(
            labels
                .iter()
                .zip(&args)
                .map(|(mu, p)| phase * f.at(p) / (scale * lam.h as f64 * mu.h as f64).sqrt())
                .collect(),
        );
    }

    let mut s = SMatrix {
        algebra: rs.lie_type.to_string(),
        sigma,
        level,
        m,
        labels,
        entries,
        phase,
        unitarity_defect: 0.0,
        symmetry_defect: 0.0,
    };
    s.unitarity_defect = check_unitary(&s);
    s.symmetry_defect = check_symmetric(&s);
    Ok(s)
}

/// `max |(S S^dagger - I)_{ij}|`.
pub fn check_unitary(s: &SMatrix) -> f64 {
    let n = s.dim();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let v: Complex64 = (0..n).map(|k| s.entries[i][k] * s.entries[j][k].conj()).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((v - target).norm());
        }
    }
    worst
}

/// `max |S_{ij} - S_{ji}|`.
pub fn check_symmetric(s: &SMatrix) -> f64 {
    let n = s.dim();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            worst = worst.max((s.entries[i][j] - s.entries[j][i]).norm());
        }
    }
    worst
}

/// The `A_1` level-`k` modular S-matrix,
/// `sqrt(2/(k+2)) sin(pi a b / (k+2))`, `a, b = 1..=k+1`.
pub fn a1_kac_peterson_reference(level: u64) -> Vec<Vec<f64>> {
    let h = (level + 2) as f64;
    (1..=level + 1)
        .map(|a| {
            (1..=level + 1)
                .map(|b| (2.0 / h).sqrt() * (std::f64::consts::PI * (a * b) as f64 / h).sin())
                .collect()
        })
        .collect()
}
