//! Weyl group enumeration, the affine Weyl group action on coweight points,
//! reduction to the fundamental domain `F`, stabilizer orders and the
//! counting weights `epsilon`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::rootdata::RootSystemData;
use crate::sign::SignHom;

pub const DEFAULT_GROUP_CEILING: u64 = 1_000_000;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Self { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        Self {
            n,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        IntMatrix { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| self.data[i * n + j] * v[j]).sum())
            .collect()
    }

    pub fn apply_rational(&self, v: &[Rational]) -> Vec<Rational> {
        let n = self.n;
        (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| self.data[i * n + j] != 0)
                    .map(|j| int(self.data[i * n + j]) * &v[j])
                    .sum()
            })
            .collect()
    }

    /// Integer determinant by fraction-free elimination.
    pub fn determinant(&self) -> i64 {
        let n = self.n;
        let mut a: Vec<i128> = self.data.iter().map(|&v| v as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k * n + k] == 0 {
                let Some(p) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                    return 0;
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
                }
            }
            prev = a[k * n + k];
        }
        (sign * a[n * n - 1]) as i64
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// Values of the four sign homomorphisms on one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignValues([i8; 4]);

impl SignValues {
    pub fn trivial() -> Self {
        Self([1; 4])
    }

    fn of_reflection(short: bool) -> Self {
        Self(SignHom::ALL.map(|s| s.on_reflection(short)))
    }

    pub fn get(&self, sigma: SignHom) -> i8 {
        self.0[sigma.slot()]
    }

    fn times(self, other: SignValues) -> Self {
        Self([0, 1, 2, 3].map(|k| self.0[k] * other.0[k]))
    }
}

/// A Weyl group element, keyed by its action on omega coordinates.
#[derive(Debug, Clone, Serialize)]
pub struct WeylElement {
    pub weight_action: IntMatrix,
    /// Action on omega-check coordinates.
    pub coweight_action: IntMatrix,
    pub sign_values: SignValues,
    /// Witness word: the element is `r_{word[0]} r_{word[1]} ...` (1-based
    /// simple reflection indices).
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        Self {
            weight_action: IntMatrix::identity(n),
            coweight_action: IntMatrix::identity(n),
            sign_values: SignValues::trivial(),
            word: Vec::new(),
        }
    }

    /// Simple reflection `r_i`, `i` 1-based.
    pub fn simple_reflection(rs: &RootSystemData, i: usize) -> Self {
        let n = rs.rank();
        let k = i - 1;
        let mut w = IntMatrix::identity(n);
        let mut cw = IntMatrix::identity(n);
        // lambda_j -> lambda_j - lambda_k C_{kj};  a_j -> a_j - a_k C_{jk}
        for j in 0..n {
            w.data[j * n + k] -= rs.cartan[k][j];
            cw.data[j * n + k] -= rs.cartan[j][k];
        }
        Self {
            weight_action: w,
            coweight_action: cw,
            sign_values: SignValues::of_reflection(rs.is_short(k)),
            word: vec![i],
        }
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            weight_action: self.weight_action.mul(&other.weight_action),
            coweight_action: self.coweight_action.mul(&other.coweight_action),
            sign_values: self.sign_values.times(other.sign_values),
            word,
        }
    }

    pub fn sign(&self, sigma: SignHom) -> i8 {
        self.sign_values.get(sigma)
    }

    pub fn act_on_weight(&self, lambda: &[i64]) -> Vec<i64> {
        self.weight_action.apply(lambda)
    }

    pub fn act_on_coweight(&self, a: &[Rational]) -> Vec<Rational> {
        self.coweight_action.apply_rational(a)
    }
}

/// Element `T(q^vee) w` of the affine Weyl group.
#[derive(Debug, Clone, Serialize)]
pub struct AffineElement {
    pub linear: WeylElement,
    /// Translation in alpha-check coordinates.
    pub shift: Vec<i64>,
}

impl AffineElement {
    pub fn identity(n: usize) -> Self {
        Self {
            linear: WeylElement::identity(n),
            shift: vec![0; n],
        }
    }

    /// Retraction onto the Weyl group.
    pub fn retraction(&self) -> &WeylElement {
        &self.linear
    }

    /// `self o other`.
    pub fn compose(&self, rs: &RootSystemData, other: &AffineElement) -> AffineElement {
        // x -> W1 (W2 x + t2) + t1, translations taken in omega-check coordinates
        let t2 = rs.coroot_to_coweight(&other.shift);
        let moved = self.linear.coweight_action.apply(&t2);
        let s = rs
            .coweight_to_coroot_int(&moved)
            .expect("W preserves Q^vee");
        AffineElement {
            linear: self.linear.compose(&other.linear),
            shift: s.iter().zip(&self.shift).map(|(a, b)| a + b).collect(),
        }
    }
}

/// `w.a + q^vee` for a coweight point in omega-check coordinates.
pub fn apply_affine(
    rs: &RootSystemData,
    e: &AffineElement,
    a: &[Rational],
) -> Result<Vec<Rational>> {
    if a.len() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            actual: a.len(),
        });
    }
    let t = rs.coroot_to_coweight(&e.shift);
    Ok(e.linear
        .act_on_coweight(a)
        .into_iter()
        .zip(t)
        .map(|(x, s)| x + int(s))
        .collect())
}

/// Barycentric description of a point of `F`: `y_0 + sum m_i y_i = 1`, all
/// `y_i >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct FundamentalPoint {
    pub y: Vec<Rational>,
    pub coweight_coords: Vec<Rational>,
}

impl FundamentalPoint {
    pub fn new(rs: &RootSystemData, a: &[Rational]) -> Result<Self> {
        if a.len() != rs.rank() {
            return Err(Error::Dimension {
                expected: rs.rank(),
                actual: a.len(),
            });
        }
        let y0 = Rational::one()
            - a.iter()
                .zip(&rs.marks)
                .map(|(x, &m)| x * int(m as i64))
                .sum::<Rational>();
        let mut y = Vec::with_capacity(a.len() + 1);
        y.push(y0);
        y.extend(a.iter().cloned());
        if y.iter().any(|v| v.is_negative()) {
            return Err(Error::Domain(format!(
                "barycentric coordinates {}",
                y.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
            )));
        }
        Ok(Self {
            y,
            coweight_coords: a.to_vec(),
        })
    }

    /// Bitmask of the walls containing the point (bit `i` set iff `y_i = 0`).
    pub fn wall_mask(&self) -> u32 {
        self.y
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_zero())
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn is_interior(&self) -> bool {
        self.wall_mask() == 0
    }
}

/// An enumerated Weyl group together with the root data it acts on.
pub struct WeylGroup {
    rs: Arc<RootSystemData>,
    elements: Vec<WeylElement>,
    index: HashMap<IntMatrix, usize>,
    generators: Vec<WeylElement>,
    reflection_xi: WeylElement,
    subgroup_orders: Mutex<HashMap<u32, u64>>,
}

impl std::fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeylGroup")
            .field("type", &self.rs.lie_type.to_string())
            .field("order", &self.elements.len())
            .finish()
    }
}

impl WeylGroup {
    pub fn new(rs: RootSystemData) -> Result<Self> {
        Self::with_ceiling(rs, DEFAULT_GROUP_CEILING)
    }

    /// Enumerates `W` by breadth-first closure over the simple reflections.
    pub fn with_ceiling(rs: RootSystemData, ceiling: u64) -> Result<Self> {
        if rs.weyl_order > ceiling {
            return Err(Error::GroupTooLarge {
                algebra: rs.lie_type.to_string(),
                order: rs.weyl_order,
                ceiling,
            });
        }
        let n = rs.rank();
        let generators: Vec<WeylElement> =
            (1..=n).map(|i| WeylElement::simple_reflection(&rs, i)).collect();

        let mut elements = vec![WeylElement::identity(n)];
        let mut index = HashMap::new();
        index.insert(elements[0].weight_action.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(cur) = queue.pop_front() {
            for g in &generators {
                let next = g.compose(&elements[cur]);
                if index.contains_key(&next.weight_action) {
                    continue;
                }
                index.insert(next.weight_action.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
        debug_assert_eq!(elements.len() as u64, rs.weyl_order);

        // r_xi: lambda -> lambda - <lambda, xi^vee> xi with xi^vee = xi
        let xi = rs.highest_root_weight();
        let xi_check = rs.highest_coroot_coweight();
        let mut w = IntMatrix::identity(n);
        let mut cw = IntMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                w.data[i * n + j] -= xi[i] * rs.comarks[j] as i64;
                cw.data[i * n + j] -= xi_check[i] * rs.marks[j] as i64;
            }
        }
        let reflection_xi = elements[*index.get(&w).expect("r_xi lies in W")].clone();
        debug_assert_eq!(reflection_xi.coweight_action, cw);

        Ok(Self {
            rs: Arc::new(rs),
            elements,
            index,
            generators,
            reflection_xi,
            subgroup_orders: Mutex::new(HashMap::new()),
        })
    }

    pub fn root_system(&self) -> &RootSystemData {
        &self.rs
    }

    pub fn shared_root_system(&self) -> Arc<RootSystemData> {
        Arc::clone(&self.rs)
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn lookup(&self, weight_action: &IntMatrix) -> Option<&WeylElement> {
        self.index.get(weight_action).map(|&i| &self.elements[i])
    }

    /// Simple reflection `r_i`, `i` 1-based.
    pub fn simple_reflection(&self, i: usize) -> &WeylElement {
        &self.generators[i - 1]
    }

    pub fn reflection_xi(&self) -> &WeylElement {
        &self.reflection_xi
    }

    /// Affine generator `r_i`, `i = 0..=n`; `r_0 = T(xi^vee) r_xi`.
    pub fn affine_generator(&self, i: usize) -> AffineElement {
        let n = self.rs.rank();
        if i == 0 {
            AffineElement {
                linear: self.reflection_xi.clone(),
                shift: self.rs.comarks.iter().map(|&q| q as i64).collect(),
            }
        } else {
            AffineElement {
                linear: self.generators[i - 1].clone(),
                shift: vec![0; n],
            }
        }
    }

    /// Affine element from a word in the generators `r_0..r_n`
    /// (`word[0]` applied last).
    pub fn affine_from_word(&self, word: &[usize]) -> AffineElement {
        let mut acc = AffineElement::identity(self.rs.rank());
        for &g in word {
            acc = acc.compose(&self.rs, &self.affine_generator(g));
        }
        acc
    }

    /// Returns `(p, g)` with `p` in `F` and `g p = a`.
    ///
    /// Applies the smallest-index simple reflection whose wall is violated,
    /// then `r_0` if `<a, xi> > 1`, until the point lies in `F`.
    pub fn reduce_to_fundamental(
        &self,
        a: &[Rational],
    ) -> Result<(FundamentalPoint, AffineElement)> {
        let rs = &*self.rs;
        let n = rs.rank();
        if a.len() != n {
            return Err(Error::Dimension {
                expected: n,
                actual: a.len(),
            });
        }
        let mut p = a.to_vec();
        let mut g = AffineElement::identity(n);
        loop {
            let step = match p.iter().position(|v| v.is_negative()) {
                Some(i) => i + 1,
                None => {
                    let level: Rational = p
                        .iter()
                        .zip(&rs.marks)
                        .map(|(x, &m)| x * int(m as i64))
                        .sum();
                    if level > Rational::one() {
                        0
                    } else {
                        break;
                    }
                }
            };
            let r = self.affine_generator(step);
            p = apply_affine(rs, &r, &p)?;
            g = g.compose(rs, &r);
        }
        let fp = FundamentalPoint::new(rs, &p)?;
        Ok((fp, g))
    }

    /// Order of the subgroup of `W` generated by `psi(r_i)` for the bits `i`
    /// of `mask` (bit 0 is `r_xi`).
    pub fn subgroup_order(&self, mask: u32) -> u64 {
        if let Some(&h) = self.subgroup_orders.lock().unwrap().get(&mask) {
            return h;
        }
        let n = self.rs.rank();
        let gens: Vec<&IntMatrix> = (0..=n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| {
                if i == 0 {
                    &self.reflection_xi.weight_action
                } else {
                    &self.generators[i - 1].weight_action
                }
            })
            .collect();
        let start = IntMatrix::identity(n);
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(cur) = queue.pop_front() {
            for g in &gens {
                let next = g.mul(&cur);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let h = seen.len() as u64;
        self.subgroup_orders.lock().unwrap().insert(mask, h);
        h
    }

    /// `h(a) = |Stab_{W^aff}(a)|` for `a` in `F`.
    pub fn stabilizer_order(&self, p: &FundamentalPoint) -> u64 {
        self.subgroup_order(p.wall_mask())
    }

    /// `epsilon(a) = |W| / h(a)`.
    pub fn epsilon(&self, p: &FundamentalPoint) -> u64 {
        self.order() / self.stabilizer_order(p)
    }

    /// `h_M(lambda)`: stabilizer order of `lambda / M`.
    pub fn h_m(&self, lambda: &[i64], m: u64) -> Result<u64> {
        if lambda.len() != self.rs.rank() {
            return Err(Error::Dimension {
                expected: self.rs.rank(),
                actual: lambda.len(),
            });
        }
        if m == 0 {
            return Err(Error::Domain("M must be positive".into()));
        }
        let p = FundamentalPoint::new(&self.rs, &self.rs.scaled_weight(lambda, m))?;
        Ok(self.stabilizer_order(&p))
    }

    /// Checks that `sigma` is defined for this root system.
    pub fn check_sigma(&self, sigma: SignHom) -> Result<()> {
        sigma.check_admissible(&self.rs)
    }
}

#[derive(Serialize)]
struct GroupDumpEntry<'a> {
    weight_action: &'a IntMatrix,
    coweight_action: &'a IntMatrix,
    identity: i8,
    e: i8,
    s: i8,
    l: i8,
    word: &'a [usize],
}

/// JSON dump of the group table (matrices, sign values, witness words).
pub fn dump_group_json(group: &WeylGroup) -> serde_json::Value {
    let entries: Vec<_> = group
        .elements()
        .iter()
        .map(|e| GroupDumpEntry {
            weight_action: &e.weight_action,
            coweight_action: &e.coweight_action,
            identity: e.sign(SignHom::Identity),
            e: e.sign(SignHom::Determinant),
            s: e.sign(SignHom::Short),
            l: e.sign(SignHom::Long),
            word: &e.word,
        })
        .collect();
    serde_json::json!({
        "algebra": group.root_system().lie_type.to_string(),
        "order": group.order(),
        "elements": entries,
    })
}
