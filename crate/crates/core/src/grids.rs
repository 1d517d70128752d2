//! The argument grids `F^sigma_{P,M}` and label sets `Lambda^sigma_{P,M}`,
//! and their counting formulas.
//!
//! Both sets are the nonnegative integer solutions of
//! `u_0 + q_1 u_1 + ... + q_n u_n = M` with `u_i >= 1` whenever
//! `sigma(psi(r_i)) = -1`. A solution `u` gives the grid point
//! `sum u_i omega_i / M` and the label `sum u_i omega_i`.

use serde::Serialize;

use crate::error::Result;
use crate::rational::Rational;
use crate::rootdata::{RootSystemData, Series};
use crate::sign::{q_sigma, SignHom};
use crate::weylgroup::WeylGroup;

/// A point of `F^sigma_{P,M}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridPoint {
    /// `(u_0, u_1, ..., u_n)`.
    pub u: Vec<u64>,
    pub eps: u64,
}

impl GridPoint {
    /// `(u_1, ..., u_n)`, the omega coordinates of `M a`.
    pub fn weight(&self) -> Vec<i64> {
        self.u[1..].iter().map(|&v| v as i64).collect()
    }

    /// Coordinates of `a = sum u_i omega_i / M` in the omega-check basis.
    pub fn coords(&self, rs: &RootSystemData, m: u64) -> Vec<Rational> {
        rs.scaled_weight(&self.weight(), m)
    }

    pub fn wall_mask(&self) -> u32 {
        wall_mask(&self.u)
    }
}

/// An element of `Lambda^sigma_{P,M}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightLabel {
    pub lambda: Vec<i64>,
    #[serde(skip)]
    pub u0: u64,
    pub h: u64,
}

fn wall_mask(u: &[u64]) -> u32 {
    u.iter()
        .enumerate()
        .filter(|(_, &v)| v == 0)
        .fold(0, |m, (i, _)| m | (1 << i))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub enumerated: u64,
    pub closed_form: Option<u64>,
    pub dp_count: u64,
}

impl CountReport {
    pub fn consistent(&self) -> bool {
        self.enumerated == self.dp_count && self.closed_form.is_none_or(|c| c == self.dp_count)
    }
}

/// Lower bounds of `(u_0, ..., u_n)` for the given homomorphism.
fn lower_bounds(rs: &RootSystemData, sigma: SignHom) -> Result<Vec<u64>> {
    let neg = sigma.negative_generators(rs)?;
    Ok((0..=rs.rank())
        .map(|i| u64::from(neg.contains(&i)))
        .collect())
}

/// All solutions `(u_0, ..., u_n)` in lexicographic order of `(u_1, ..., u_n)`.
pub fn solutions(rs: &RootSystemData, sigma: SignHom, m: u64) -> Result<Vec<Vec<u64>>> {
    let lower = lower_bounds(rs, sigma)?;
    let n = rs.rank();
    let mut out = Vec::new();
    let mut cur = vec![0u64; n + 1];
    fn rec(
        i: usize,
        remaining: u64,
        rs: &RootSystemData,
        lower: &[u64],
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if i > rs.rank() {
            if remaining >= lower[0] {
                cur[0] = remaining;
                out.push(cur.clone());
            }
            return;
        }
        let q = rs.comarks[i - 1];
        let mut u = lower[i];
        while u * q <= remaining {
            cur[i] = u;
            rec(i + 1, remaining - u * q, rs, lower, cur, out);
            u += 1;
        }
    }
    rec(1, m, rs, &lower, &mut cur, &mut out);
    Ok(out)
}

/// `F^sigma_{P,M}` with `epsilon` weights.
pub fn enumerate_grid(group: &WeylGroup, sigma: SignHom, m: u64) -> Result<Vec<GridPoint>> {
    let rs = group.root_system();
    Ok(solutions(rs, sigma, m)?
        .into_iter()
        .map(|u| {
            // y_i = 0 exactly when u_i = 0
            let eps = group.order() / group.subgroup_order(wall_mask(&u));
            GridPoint { u, eps }
        })
        .collect())
}

/// `Lambda^sigma_{P,M}` with stabilizer orders `h_M`, in the same order as
/// [`enumerate_grid`].
pub fn enumerate_labels(group: &WeylGroup, sigma: SignHom, m: u64) -> Result<Vec<WeightLabel>> {
    let rs = group.root_system();
    Ok(solutions(rs, sigma, m)?
        .into_iter()
        .map(|u| WeightLabel {
            lambda: u[1..].iter().map(|&v| v as i64).collect(),
            u0: u[0],
            h: group.subgroup_order(wall_mask(&u)),
        })
        .collect())
}

fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc as u64
}

/// `|F^1_{P,M}|` from the closed-form counting polynomials, for the
/// nonsimply-laced series.
fn closed_form_identity(rs: &RootSystemData, m: u64) -> Option<u64> {
    let n = rs.rank() as i64;
    let m = m as i64;
    match rs.lie_type.series {
        Series::B => {
            let k = m / 2;
            if m % 2 == 0 {
                Some(binomial(n + k, n) + 3 * binomial(n + k - 1, n))
            } else {
                Some(3 * binomial(n + k, n) + binomial(n + k - 1, n))
            }
        }
        Series::C => Some(binomial(n + m, n)),
        Series::G => {
            let k = m / 2;
            let v = if m % 2 == 0 {
                k * k + 2 * k + 1
            } else {
                k * k + 3 * k + 2
            };
            Some(v as u64)
        }
        Series::F => {
            let k = (m / 6) as i128;
            // coefficients of 2 * polynomial, highest degree first
            let twice: [i128; 5] = match m % 6 {
                0 => [9, 27, 28, 12, 2],
                1 => [9, 33, 43, 23, 4],
                2 => [9, 39, 61, 41, 10],
                3 => [9, 45, 82, 64, 18],
                4 => [9, 51, 106, 96, 32],
                _ => [9, 57, 133, 135, 50],
            };
            let v = twice.iter().fold(0i128, |acc, &c| acc * k + c);
            assert!(v % 2 == 0, "F4 counting polynomial must be integral");
            Some((v / 2) as u64)
        }
        Series::A | Series::D | Series::E => None,
    }
}

/// Closed-form `|F^sigma_{P,M}|`, shifted by `q^sigma`; `None` for the
/// simply-laced series.
pub fn count_closed_form(rs: &RootSystemData, sigma: SignHom, m: u64) -> Result<Option<u64>> {
    if rs.is_simply_laced() {
        return Ok(None);
    }
    let q = q_sigma(rs, sigma)?;
    Ok(match m.cmp(&q) {
        std::cmp::Ordering::Less => Some(0),
        std::cmp::Ordering::Equal => Some(1),
        std::cmp::Ordering::Greater => closed_form_identity(rs, m - q),
    })
}

/// Number of solutions by dynamic programming over the comarks, with the
/// lower bounds handled per coordinate.
pub fn count_dp(rs: &RootSystemData, sigma: SignHom, m: u64) -> Result<u64> {
    let lower = lower_bounds(rs, sigma)?;
    let m = m as usize;
    // ways[t] = number of ways to reach total t with the coordinates so far
    let mut ways = vec![0u64; m + 1];
    ways[0] = 1;
    for i in 0..=rs.rank() {
        let q = rs.extended_comark(i) as usize;
        let lo = lower[i] as usize * q;
        let mut next = vec![0u64; m + 1];
        for t in 0..=m {
            if ways[t] == 0 {
                continue;
            }
            let mut s = t + lo;
            while s <= m {
                next[s] += ways[t];
                s += q;
            }
        }
        ways = next;
    }
    Ok(ways[m])
}

pub fn count_report(group: &WeylGroup, sigma: SignHom, m: u64) -> Result<CountReport> {
    let rs = group.root_system();
    Ok(CountReport {
        enumerated: solutions(rs, sigma, m)?.len() as u64,
        closed_form: count_closed_form(rs, sigma, m)?,
        dp_count: count_dp(rs, sigma, m)?,
    })
}
