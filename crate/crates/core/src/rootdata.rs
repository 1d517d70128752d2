//! Static data of a simple root system in the fundamental-weight (`omega`)
//! and fundamental-coweight (`omega-check`) bases.
//!
//! Conventions:
//!
//! * `cartan[i][j] = <alpha_i, alpha_j^vee> = 2 <alpha_i, alpha_j> / <alpha_j, alpha_j>`,
//!   so `alpha_j = sum_k cartan[j][k] omega_k` and
//!   `alpha_j^vee = sum_k omega_k^vee cartan[k][j]`.
//! * Long roots have squared length 2.
//! * Simple roots are numbered so that `B_n` has `alpha_n` short, `C_n` has
//!   `alpha_n` long, `F_4` has `alpha_3, alpha_4` short and `G_2` has
//!   `alpha_2` short. `D_n` and `E_n` follow the usual Bourbaki labelling.
//!
//! A weight `lambda = sum lambda_i omega_i` and a coweight point
//! `a = sum a_j omega_j^vee` pair as `<lambda, a> = lambda^T C^{-1} a`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, int, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    pub series: Series,
    pub rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 3,
            Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(Self { series, rank })
        } else {
            Err(Error::Classification(format!("{series:?}{rank}")))
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::Classification(s.to_string())),
        };
        let rank_str = chars.as_str();
        if rank_str.is_empty() || !rank_str.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Classification(s.to_string()));
        }
        let rank: usize = rank_str
            .parse()
            .map_err(|_| Error::Classification(s.to_string()))?;
        LieType::new(series, rank).map_err(|_| Error::Classification(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct RootSystemData {
    pub lie_type: LieType,
    pub cartan: Vec<Vec<i64>>,
    pub cartan_inv: Vec<Vec<Rational>>,
    pub marks: Vec<u64>,
    pub comarks: Vec<u64>,
    pub root_lengths_sq: Vec<Rational>,
    pub short_set: Vec<usize>,
    pub long_set: Vec<usize>,
    pub d: u64,
    pub coxeter_m: u64,
    pub dual_coxeter_g: u64,
    pub num_roots: u64,
    pub weyl_order: u64,
    // C^{-1} = cinv_num / cinv_den with integer entries
    cinv_num: Vec<Vec<i64>>,
    cinv_den: i64,
}

/// Undirected Dynkin edges (0-based) and squared lengths (as num/den) of the
/// simple roots.
fn diagram(t: LieType) -> (Vec<(usize, usize)>, Vec<(i64, i64)>) {
    let n = t.rank;
    let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    let long = (2, 1);
    let short = (1, 1);
    match t.series {
        Series::A => (chain(n), vec![long; n]),
        Series::B => {
            let mut l = vec![long; n];
            l[n - 1] = short;
            (chain(n), l)
        }
        Series::C => {
            let mut l = vec![short; n];
            l[n - 1] = long;
            (chain(n), l)
        }
        Series::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (e, vec![long; n])
        }
        Series::E => {
            // 1-3-4-5-..-n with 2 attached to 4 (1-based)
            let mut e = vec![(0, 2), (1, 3)];
            for i in 2..n - 1 {
                e.push((i, i + 1));
            }
            (e, vec![long; n])
        }
        Series::F => (chain(4), vec![long, long, short, short]),
        Series::G => (chain(2), vec![long, (2, 3)]),
    }
}

fn highest_root_marks(t: LieType) -> Vec<u64> {
    let n = t.rank;
    match t.series {
        Series::A => vec![1; n],
        Series::B => {
            let mut m = vec![2; n];
            m[0] = 1;
            m
        }
        Series::C => {
            let mut m = vec![2; n];
            m[n - 1] = 1;
            m
        }
        Series::D => {
            let mut m = vec![2; n];
            m[0] = 1;
            m[n - 2] = 1;
            m[n - 1] = 1;
            m
        }
        Series::E => match n {
            6 => vec![1, 2, 2, 3, 2, 1],
            7 => vec![2, 2, 3, 4, 3, 2, 1],
            _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
        },
        Series::F => vec![2, 3, 4, 2],
        Series::G => vec![2, 3],
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn weyl_group_order(t: LieType) -> u64 {
    let n = t.rank as u64;
    match t.series {
        Series::A => factorial(n + 1),
        Series::B | Series::C => (1u64 << n) * factorial(n),
        Series::D => (1u64 << (n - 1)) * factorial(n),
        Series::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Series::F => 1152,
        Series::G => 12,
    }
}

impl RootSystemData {
    pub fn build(t: LieType) -> Self {
        let n = t.rank;
        let (edges, lens) = diagram(t);
        let len_sq: Vec<Rational> = lens.iter().map(|&(p, q)| rat(p, q)).collect();

        let mut gram = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            gram[i][i] = len_sq[i].clone();
        }
        for &(i, j) in &edges {
            // adjacent simple roots: <a_i, a_j> = -max(|a_i|^2, |a_j|^2) / 2
            let m = std::cmp::max(len_sq[i].clone(), len_sq[j].clone());
            let v = -m / int(2);
            gram[i][j] = v.clone();
            gram[j][i] = v;
        }

        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = int(2) * &gram[i][j] / &len_sq[j];
                        rational::to_i64(&c).expect("Cartan entries are integral")
                    })
                    .collect()
            })
            .collect();
        let cartan_q: Vec<Vec<Rational>> = cartan
            .iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect();
        let cartan_inv = rational::inverse(&cartan_q).expect("Cartan matrix is invertible");
        let det_c = rational::determinant(&cartan_q);

        let mut d_q = det_c;
        for l in &len_sq {
            d_q = d_q * int(2) / l;
        }
        let d = rational::to_i64(&d_q).expect("|P/Q^vee| is an integer") as u64;

        let marks = highest_root_marks(t);
        let comarks: Vec<u64> = marks
            .iter()
            .zip(&len_sq)
            .map(|(&m, l)| {
                let q = int(m as i64) * l / int(2);
                rational::to_i64(&q).expect("comarks are integral") as u64
            })
            .collect();

        let simply_laced = len_sq.iter().all(|l| *l == len_sq[0]);
        let (short_set, long_set): (Vec<usize>, Vec<usize>) = if simply_laced {
            (Vec::new(), Vec::new())
        } else {
            (0..n).partition(|&i| len_sq[i] < int(2))
        };

        let coxeter_m = 1 + marks.iter().sum::<u64>();
        let dual_coxeter_g = 1 + comarks.iter().sum::<u64>();

        let cinv_den = cartan_inv
            .iter()
            .flatten()
            .fold(num_bigint::BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let cinv_num = cartan_inv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|r| {
                        (r.numer() * (&cinv_den / r.denom()))
                            .to_i64()
                            .expect("small Cartan inverse")
                    })
                    .collect()
            })
            .collect();

        Self {
            lie_type: t,
            cartan,
            cartan_inv,
            marks,
            comarks,
            root_lengths_sq: len_sq,
            short_set,
            long_set,
            d,
            coxeter_m,
            dual_coxeter_g,
            num_roots: n as u64 * coxeter_m,
            weyl_order: weyl_group_order(t),
            cinv_num,
            cinv_den: cinv_den.to_i64().expect("small Cartan determinant"),
        }
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        self.short_set.is_empty()
    }

    /// Whether simple root `i` (0-based) is short.
    pub fn is_short(&self, i: usize) -> bool {
        self.short_set.contains(&i)
    }

    /// Mark `m_i` for `i` in `0..=n`, with `m_0 = 1`.
    pub fn extended_mark(&self, i: usize) -> u64 {
        if i == 0 {
            1
        } else {
            self.marks[i - 1]
        }
    }

    /// Comark `q_i` for `i` in `0..=n`, with `q_0 = 1`.
    pub fn extended_comark(&self, i: usize) -> u64 {
        if i == 0 {
            1
        } else {
            self.comarks[i - 1]
        }
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                actual: len,
            });
        }
        Ok(())
    }

    /// `<lambda, a>` for a weight in the omega basis and a coweight point in
    /// the omega-check basis.
    pub fn pairing(&self, lambda: &[Rational], a: &[Rational]) -> Result<Rational> {
        self.check_dim(lambda.len())?;
        self.check_dim(a.len())?;
        let ca = rational::mat_vec(&self.cartan_inv, a);
        Ok(lambda.iter().zip(&ca).map(|(l, x)| l * x).sum())
    }

    pub fn pairing_int(&self, lambda: &[i64], a: &[Rational]) -> Result<Rational> {
        let l: Vec<Rational> = lambda.iter().map(|&v| int(v)).collect();
        self.pairing(&l, a)
    }

    /// Rewrites `sum c_i omega_i` in the omega-check basis
    /// (`omega_i = <alpha_i, alpha_i>/2 * omega_i^vee`).
    pub fn weight_to_coweight(&self, lambda: &[Rational]) -> Vec<Rational> {
        lambda
            .iter()
            .zip(&self.root_lengths_sq)
            .map(|(c, l)| c * l / int(2))
            .collect()
    }

    /// Inverse of [`Self::weight_to_coweight`].
    pub fn coweight_to_weight(&self, a: &[Rational]) -> Vec<Rational> {
        a.iter()
            .zip(&self.root_lengths_sq)
            .map(|(c, l)| c * int(2) / l)
            .collect()
    }

    /// The point `lambda / m` of a weight `lambda`, in omega-check coordinates.
    pub fn scaled_weight(&self, lambda: &[i64], m: u64) -> Vec<Rational> {
        let l: Vec<Rational> = lambda
            .iter()
            .map(|&v| rat(v, m as i64))
            .collect();
        self.weight_to_coweight(&l)
    }

    /// omega-check coordinates of `sum_j s_j alpha_j^vee`.
    pub fn coroot_to_coweight(&self, s: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|k| (0..n).map(|j| self.cartan[k][j] * s[j]).sum())
            .collect()
    }

    /// alpha-check coordinates of an omega-check vector, as rationals.
    pub fn coweight_to_coroot(&self, a: &[Rational]) -> Vec<Rational> {
        rational::mat_vec(&self.cartan_inv, a)
    }

    /// Integer version of [`Self::coweight_to_coroot`]; `None` if the vector
    /// is not in `Q^vee`.
    pub fn coweight_to_coroot_int(&self, t: &[i64]) -> Option<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let s: i64 = (0..n).map(|j| self.cinv_num[i][j] * t[j]).sum();
                if s % self.cinv_den == 0 {
                    Some(s / self.cinv_den)
                } else {
                    None
                }
            })
            .collect()
    }

    /// `C^{-1}` as an integer matrix over a common denominator.
    pub fn cartan_inv_scaled(&self) -> (&[Vec<i64>], i64) {
        (&self.cinv_num, self.cinv_den)
    }

    /// `alpha_j^vee` in omega coordinates, as an integer row per `j`.
    pub fn coroots_in_weight_basis(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| {
                        let v = int(2) / &self.root_lengths_sq[j] * int(self.cartan[j][k]);
                        rational::to_i64(&v).expect("Q^vee lies in P")
                    })
                    .collect()
            })
            .collect()
    }

    /// Highest root `xi = sum m_j alpha_j` in omega coordinates.
    pub fn highest_root_weight(&self) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|k| (0..n).map(|j| self.marks[j] as i64 * self.cartan[j][k]).sum())
            .collect()
    }

    /// `xi^vee = sum q_j alpha_j^vee` in omega-check coordinates.
    pub fn highest_coroot_coweight(&self) -> Vec<i64> {
        let q: Vec<i64> = self.comarks.iter().map(|&v| v as i64).collect();
        self.coroot_to_coweight(&q)
    }

    /// `|Pi| / 2`, the exponent of the S-matrix phase.
    pub fn half_num_roots(&self) -> u64 {
        debug_assert!(self.num_roots % 2 == 0);
        self.num_roots / 2
    }
}

#[derive(Serialize)]
struct RationalJson {
    num: String,
    den: String,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        Self {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

// Rationals are written as {"num": n, "den": d} with integer JSON numbers.
fn rational_value(r: &Rational) -> serde_json::Value {
    let j = RationalJson::from(r);
    let num: serde_json::Value = j.num.parse::<i64>().map_or(j.num.into(), Into::into);
    let den: serde_json::Value = j.den.parse::<i64>().map_or(j.den.into(), Into::into);
    serde_json::json!({ "num": num, "den": den })
}

impl Serialize for RootSystemData {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RootSystemData", 13)?;
        st.serialize_field("lie_type", &self.lie_type.to_string())?;
        st.serialize_field("rank", &self.rank())?;
        st.serialize_field("cartan", &self.cartan)?;
        let inv: Vec<Vec<serde_json::Value>> = self
            .cartan_inv
            .iter()
            .map(|r| r.iter().map(rational_value).collect())
            .collect();
        st.serialize_field("cartan_inv", &inv)?;
        st.serialize_field("marks", &self.marks)?;
        st.serialize_field("comarks", &self.comarks)?;
        let lens: Vec<serde_json::Value> = self.root_lengths_sq.iter().map(rational_value).collect();
        st.serialize_field("root_lengths_sq", &lens)?;
        st.serialize_field("short_set", &self.short_set)?;
        st.serialize_field("long_set", &self.long_set)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("coxeter_m", &self.coxeter_m)?;
        st.serialize_field("dual_coxeter_g", &self.dual_coxeter_g)?;
        st.serialize_field("num_roots", &self.num_roots)?;
        st.serialize_field("weyl_order", &self.weyl_order)?;
        st.end()
    }
}
