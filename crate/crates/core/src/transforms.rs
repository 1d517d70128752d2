//! Orbit functions, the weighted discrete scalar product on
//! `F^sigma_{P,M}`, and the discrete orbit-function transform.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grids::{enumerate_grid, enumerate_labels, GridPoint, WeightLabel};
use crate::rational::{self, rat, Rational};
use crate::rootdata::RootSystemData;
use crate::sign::SignHom;
use crate::weylgroup::{apply_affine, AffineElement, WeylGroup};

/// A coweight point prepared for exact phase evaluation:
/// `<mu, a> = (mu . num) / den` for any integer weight `mu`.
#[derive(Debug, Clone)]
pub struct PhasePoint {
    num: Vec<i128>,
    den: i128,
}

impl PhasePoint {
    pub fn new(rs: &RootSystemData, a: &[Rational]) -> Result<Self> {
        if a.len() != rs.rank() {
            return Err(Error::Dimension {
                expected: rs.rank(),
                actual: a.len(),
            });
        }
        let v = rational::mat_vec(&rs.cartan_inv, a);
        let den = v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let num = v
            .iter()
            .map(|r| {
                (r.numer() * (&den / r.denom()))
                    .to_i128()
                    .ok_or_else(|| Error::Input("coordinate too large".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let den = den
            .to_i128()
            .ok_or_else(|| Error::Input("denominator too large".into()))?;
        Ok(Self { num, den })
    }

    /// `exp(2 pi i <mu, a>)`, with the phase reduced mod 1 before rounding.
    pub fn character(&self, mu: &[i64]) -> Complex64 {
        let dot: i128 = mu.iter().zip(&self.num).map(|(&m, &x)| m as i128 * x).sum();
        let r = dot.rem_euclid(self.den);
        Complex64::from_polar(1.0, 2.0 * PI * (r as f64) / (self.den as f64))
    }
}

/// `phi^sigma_lambda` with the signed Weyl orbit of `lambda` precomputed.
#[derive(Debug, Clone)]
pub struct OrbitFunction {
    pub sigma: SignHom,
    pub lambda: Vec<i64>,
    orbit: Vec<(Vec<i64>, f64)>,
}

impl OrbitFunction {
    pub fn new(group: &WeylGroup, sigma: SignHom, lambda: &[i64]) -> Result<Self> {
        group.check_sigma(sigma)?;
        let n = group.root_system().rank();
        if lambda.len() != n {
            return Err(Error::Dimension {
                expected: n,
                actual: lambda.len(),
            });
        }
        let orbit = group
            .elements()
            .iter()
            .map(|w| (w.act_on_weight(lambda), w.sign(sigma) as f64))
            .collect();
        Ok(Self {
            sigma,
            lambda: lambda.to_vec(),
            orbit,
        })
    }

    pub fn at(&self, p: &PhasePoint) -> Complex64 {
        self.orbit
            .iter()
            .map(|(mu, s)| p.character(mu) * *s)
            .sum()
    }
}

/// `phi^sigma_lambda(a) = sum_w sigma(w) exp(2 pi i <w lambda, a>)`.
pub fn evaluate(
    group: &WeylGroup,
    sigma: SignHom,
    lambda: &[i64],
    a: &[Rational],
) -> Result<Complex64> {
    let f = OrbitFunction::new(group, sigma, lambda)?;
    let p = PhasePoint::new(group.root_system(), a)?;
    Ok(f.at(&p))
}

/// Values on the grid `F^sigma_{P,M}`, in canonical grid order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleVector {
    pub sigma: SignHom,
    pub m: u64,
    pub values: Vec<Complex64>,
}

/// Transform coefficients indexed by `Lambda^sigma_{P,M}` in canonical order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumCoefficients {
    pub sigma: SignHom,
    pub m: u64,
    pub coeffs: Vec<Complex64>,
}

/// Grid, labels and the table of `phi_lambda(a)` for one `(sigma, M)`.
pub struct Discretization<'g> {
    group: &'g WeylGroup,
    sigma: SignHom,
    m: u64,
    grid: Vec<GridPoint>,
    labels: Vec<WeightLabel>,
    functions: Vec<OrbitFunction>,
    // row per label, column per grid point
    table: Vec<Complex64>,
}

impl<'g> Discretization<'g> {
    pub fn new(group: &'g WeylGroup, sigma: SignHom, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Input("M must be positive".into()));
        }
        let rs = group.root_system();
        let grid = enumerate_grid(group, sigma, m)?;
        let labels = enumerate_labels(group, sigma, m)?;
        let functions = labels
            .iter()
            .map(|l| OrbitFunction::new(group, sigma, &l.lambda))
            .collect::<Result<Vec<_>>>()?;
        let points = grid
            .iter()
            .map(|p| PhasePoint::new(rs, &p.coords(rs, m)))
            .collect::<Result<Vec<_>>>()?;
        let mut table = Vec::with_capacity(labels.len() * grid.len());
        for f in &functions {
            table.extend(points.iter().map(|p| f.at(p)));
        }
        Ok(Self {
            group,
            sigma,
            m,
            grid,
            labels,
            functions,
            table,
        })
    }

    pub fn group(&self) -> &WeylGroup {
        self.group
    }

    pub fn sigma(&self) -> SignHom {
        self.sigma
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn grid(&self) -> &[GridPoint] {
        &self.grid
    }

    pub fn labels(&self) -> &[WeightLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// `phi_{lambda_l}(a_p)`.
    pub fn phi(&self, l: usize, p: usize) -> Complex64 {
        self.table[l * self.grid.len() + p]
    }

    /// `d |W| M^n`.
    pub fn scale(&self) -> f64 {
        let rs = self.group.root_system();
        rs.d as f64 * self.group.order() as f64 * (self.m as f64).powi(rs.rank() as i32)
    }

    /// `d |W| M^n h_M(lambda_l)`.
    pub fn norm(&self, l: usize) -> f64 {
        self.scale() * self.labels[l].h as f64
    }

    fn check_samples(&self, f: &SampleVector) -> Result<()> {
        if f.sigma != self.sigma || f.m != self.m || f.values.len() != self.grid.len() {
            return Err(Error::GridMismatch(format!(
                "samples for ({}, M={}, {} values) on grid ({}, M={}, {} points)",
                f.sigma,
                f.m,
                f.values.len(),
                self.sigma,
                self.m,
                self.grid.len()
            )));
        }
        Ok(())
    }

    pub fn samples(&self, values: Vec<Complex64>) -> Result<SampleVector> {
        let f = SampleVector {
            sigma: self.sigma,
            m: self.m,
            values,
        };
        self.check_samples(&f)?;
        Ok(f)
    }

    /// `phi^sigma_lambda` sampled on the grid; `lambda` need not be a label.
    pub fn sample_orbit_function(&self, lambda: &[i64]) -> Result<SampleVector> {
        let rs = self.group.root_system();
        let f = OrbitFunction::new(self.group, self.sigma, lambda)?;
        let values = self
            .grid
            .iter()
            .map(|p| Ok(f.at(&PhasePoint::new(rs, &p.coords(rs, self.m))?)))
            .collect::<Result<Vec<_>>>()?;
        self.samples(values)
    }

    /// `<f, g> = sum_a epsilon(a) f(a) conj(g(a))`.
    pub fn scalar_product(&self, f: &SampleVector, g: &SampleVector) -> Result<Complex64> {
        self.check_samples(f)?;
        self.check_samples(g)?;
        Ok(self
            .grid
            .iter()
            .zip(f.values.iter().zip(&g.values))
            .map(|(p, (x, y))| x * y.conj() * p.eps as f64)
            .sum())
    }

    /// `G[l][l'] = <phi_l, phi_l'>`, row-major.
    pub fn gram_matrix(&self) -> Vec<Vec<Complex64>> {
        let k = self.labels.len();
        (0..k)
            .map(|l| {
                (0..k)
                    .map(|l2| {
                        self.grid
                            .iter()
                            .enumerate()
                            .map(|(p, gp)| self.phi(l, p) * self.phi(l2, p).conj() * gp.eps as f64)
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    pub fn forward(&self, f: &SampleVector) -> Result<SpectrumCoefficients> {
        self.check_samples(f)?;
        let coeffs = (0..self.labels.len())
            .map(|l| {
                let s: Complex64 = self
                    .grid
                    .iter()
                    .enumerate()
                    .map(|(p, gp)| f.values[p] * self.phi(l, p).conj() * gp.eps as f64)
                    .sum();
                s / self.norm(l)
            })
            .collect();
        Ok(SpectrumCoefficients {
            sigma: self.sigma,
            m: self.m,
            coeffs,
        })
    }

    fn check_coeffs(&self, c: &SpectrumCoefficients) -> Result<()> {
        if c.sigma != self.sigma || c.m != self.m || c.coeffs.len() != self.labels.len() {
            return Err(Error::GridMismatch(format!(
                "coefficients for ({}, M={}, {} values) on labels ({}, M={}, {} labels)",
                c.sigma,
                c.m,
                c.coeffs.len(),
                self.sigma,
                self.m,
                self.labels.len()
            )));
        }
        Ok(())
    }

    /// `I[f](a) = sum_lambda c_lambda phi_lambda(a)` at an arbitrary point.
    pub fn interpolate(&self, c: &SpectrumCoefficients, a: &[Rational]) -> Result<Complex64> {
        self.check_coeffs(c)?;
        let p = PhasePoint::new(self.group.root_system(), a)?;
        Ok(self
            .functions
            .iter()
            .zip(&c.coeffs)
            .map(|(f, &c)| c * f.at(&p))
            .sum())
    }

    /// The interpolant evaluated on every grid point.
    pub fn synthesize(&self, c: &SpectrumCoefficients) -> Result<SampleVector> {
        self.check_coeffs(c)?;
        let values = (0..self.grid.len())
            .map(|p| {
                c.coeffs
                    .iter()
                    .enumerate()
                    .map(|(l, &cl)| cl * self.phi(l, p))
                    .sum()
            })
            .collect();
        self.samples(values)
    }

    /// `(sum_a epsilon |f|^2, d |W| M^n sum_lambda h |c|^2)`.
    pub fn plancherel(&self, f: &SampleVector) -> Result<(f64, f64)> {
        let c = self.forward(f)?;
        let lhs = self
            .grid
            .iter()
            .zip(&f.values)
            .map(|(p, v)| p.eps as f64 * v.norm_sqr())
            .sum();
        let rhs = self.scale()
            * self
                .labels
                .iter()
                .zip(&c.coeffs)
                .map(|(l, v)| l.h as f64 * v.norm_sqr())
                .sum::<f64>();
        Ok((lhs, rhs))
    }
}

/// Standalone scalar product; both vectors must be sampled on the same grid.
pub fn scalar_product(
    disc: &Discretization<'_>,
    f: &SampleVector,
    g: &SampleVector,
) -> Result<Complex64> {
    disc.scalar_product(f, g)
}

/// Row-style Hermite normal form diagonal of a full-rank integer matrix.
fn hermite_diagonal(mut b: Vec<Vec<i64>>) -> Vec<i64> {
    let n = b.len();
    for c in 0..n {
        loop {
            let pivot = (c..n)
                .filter(|&r| b[r][c] != 0)
                .min_by_key(|&r| b[r][c].abs())
                .expect("full-rank lattice");
            b.swap(c, pivot);
            let mut done = true;
            for r in c + 1..n {
                if b[r][c] != 0 {
                    let q = b[r][c].div_euclid(b[c][c]);
                    let (top, bottom) = b.split_at_mut(r);
                    for (x, y) in bottom[0].iter_mut().zip(&top[c]) {
                        *x -= q * y;
                    }
                    if b[r][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if b[c][c] < 0 {
            for x in b[c].iter_mut() {
                *x = -*x;
            }
        }
    }
    (0..n).map(|i| b[i][i]).collect()
}

/// Representatives `k` of `P / M Q^vee` in omega coordinates; the cosets of
/// `(1/M)P / Q^vee` are `k / M`. There are `d M^n` of them.
pub fn coset_representatives(rs: &RootSystemData, m: u64) -> Vec<Vec<i64>> {
    let lattice: Vec<Vec<i64>> = rs
        .coroots_in_weight_basis()
        .into_iter()
        .map(|row| row.into_iter().map(|v| v * m as i64).collect())
        .collect();
    let diag = hermite_diagonal(lattice);
    let mut out = vec![Vec::new()];
    for &h in &diag {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..h).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// Whether the weight `mu` lies in `M Q^vee`.
pub fn in_m_coroot_lattice(rs: &RootSystemData, mu: &[i64], m: u64) -> bool {
    let w: Vec<Rational> = mu.iter().map(|&v| rat(v, m as i64)).collect();
    rs.coweight_to_coroot(&rs.weight_to_coweight(&w))
        .iter()
        .all(|c| c.is_integer())
}

/// `sum over y in (1/M)P/Q^vee of exp(2 pi i <mu, y>)`.
pub fn exp_sum_check(rs: &RootSystemData, mu: &[i64], m: u64) -> Result<Complex64> {
    if mu.len() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            actual: mu.len(),
        });
    }
    // <mu, k/M> = <k, mu/M>, so one phase point serves every representative
    let p = PhasePoint::new(rs, &rs.scaled_weight(mu, m))?;
    Ok(coset_representatives(rs, m)
        .iter()
        .map(|k| p.character(k))
        .sum())
}

fn within(lhs: Complex64, rhs: Complex64, tol: f64) -> bool {
    (lhs - rhs).norm() <= tol * rhs.norm().max(1.0)
}

/// Checks `phi_{M w(lambda/M)}(a) = sigma(psi(w)) phi_lambda(a)`.
pub fn label_symmetry_check(
    group: &WeylGroup,
    sigma: SignHom,
    lambda: &[i64],
    w: &AffineElement,
    a: &[Rational],
    m: u64,
    tol: f64,
) -> Result<bool> {
    let rs = group.root_system();
    let moved = apply_affine(rs, w, &rs.scaled_weight(lambda, m))?;
    let scale = rational::int(m as i64);
    let image = rs
        .coweight_to_weight(&moved)
        .iter()
        .map(|c| rational::to_i64(&(c * &scale)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Input("M w(lambda/M) is not a weight".into()))?;
    let lhs = evaluate(group, sigma, &image, a)?;
    let rhs = evaluate(group, sigma, lambda, a)? * w.retraction().sign(sigma) as f64;
    Ok(within(lhs, rhs, tol))
}

/// Checks `phi_lambda(w a) = sigma(psi(w)) phi_lambda(a)`.
pub fn argument_symmetry_check(
    group: &WeylGroup,
    sigma: SignHom,
    lambda: &[i64],
    w: &AffineElement,
    a: &[Rational],
    tol: f64,
) -> Result<bool> {
    let moved = apply_affine(group.root_system(), w, a)?;
    let lhs = evaluate(group, sigma, lambda, &moved)?;
    let rhs = evaluate(group, sigma, lambda, a)? * w.retraction().sign(sigma) as f64;
    Ok(within(lhs, rhs, tol))
}

/// Negated coweight point, for conjugation checks.
pub fn negate(a: &[Rational]) -> Vec<Rational> {
    a.iter().map(|x| -x).collect()
}
