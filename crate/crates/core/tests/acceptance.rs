//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the report is always shown;
//! the process exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weyl_discrete::grids::{count_closed_form, count_dp, enumerate_grid, enumerate_labels, solutions};
use weyl_discrete::smatrix::{a1_kac_peterson_reference, check_symmetric, check_unitary};
use weyl_discrete::transforms::{
    argument_symmetry_check, coset_representatives, evaluate, exp_sum_check, in_m_coroot_lattice,
    label_symmetry_check, OrbitFunction, PhasePoint,
};
use weyl_discrete::verify::{boundary_labels, random_affine, random_samples, random_weight};
use weyl_discrete::{
    build_s_matrix, q_sigma, Discretization, Rational, RootSystemData, SignHom, WeylGroup,
};

const TRANSFORM_ALGEBRAS: [&str; 5] = ["A1", "A2", "C2", "G2", "B3"];
const COUNT_ALGEBRAS: [&str; 7] = ["B3", "B4", "C2", "C3", "C4", "G2", "F4"];
const SHIFT_ALGEBRAS: [&str; 11] = ["A1", "A2", "A3", "D4", "B3", "B4", "C2", "C3", "C4", "G2", "F4"];

const GRAM_OFFDIAG_TOL: f64 = 1e-8;
const GRAM_DIAG_TOL: f64 = 1e-10;
const EXP_SUM_TOL: f64 = 1e-10;
const EXP_SUM_SAMPLES: usize = 50;
const ROUND_TRIP_TOL: f64 = 1e-9;
const ROUND_TRIP_SAMPLES: usize = 20;
const SYMMETRY_TOL: f64 = 1e-10;
const SYMMETRY_WORD_LEN: usize = 5;
const A1_REFERENCE_TOL: f64 = 1e-12;
const S_MATRIX_TOL: f64 = 1e-9;

type Outcome = Result<String, String>;

fn group(s: &str) -> WeylGroup {
    WeylGroup::new(RootSystemData::build(s.parse().unwrap())).unwrap()
}

/// `(group, sigma, M)` for every admissible sigma and `M` in
/// `max(q^sigma, 1) ..= q^sigma + 4`.
fn transform_matrix(groups: &[WeylGroup]) -> Vec<(&WeylGroup, SignHom, u64)> {
    let mut out = Vec::new();
    for g in groups {
        for sigma in SignHom::admissible(g.root_system()) {
            let q = q_sigma(g.root_system(), sigma).unwrap();
            for m in q.max(1)..=q + 4 {
                out.push((g, sigma, m));
            }
        }
    }
    out
}

fn tag(g: &WeylGroup, sigma: SignHom, m: u64) -> String {
    format!("{} {} M={}", g.root_system().lie_type, sigma.as_str(), m)
}

fn criterion_1() -> Outcome {
    let g = group("C2");
    let rs = g.root_system();
    let mut got = Vec::new();
    for sigma in SignHom::ALL {
        let e = solutions(rs, sigma, 3).unwrap().len() as u64;
        let dp = count_dp(rs, sigma, 3).unwrap();
        let cf = count_closed_form(rs, sigma, 3).unwrap().unwrap();
        let grid = enumerate_grid(&g, sigma, 3).unwrap().len() as u64;
        if e != dp || e != cf || e != grid {
            return Err(format!("{}: enum {e}, dp {dp}, closed {cf}", sigma.as_str()));
        }
        got.push(e);
    }
    let cosets = coset_representatives(rs, 3).len();
    if got != [10, 1, 6, 3] || cosets != 36 {
        return Err(format!("counts {got:?}, cosets {cosets}"));
    }
    Ok(format!("counts {got:?}, |(1/3)P/Q^vee| = {cosets}"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for name in COUNT_ALGEBRAS {
        let rs = RootSystemData::build(name.parse().unwrap());
        for m in 1..=12 {
            let e = solutions(&rs, SignHom::Identity, m).unwrap().len() as u64;
            let dp = count_dp(&rs, SignHom::Identity, m).unwrap();
            let cf = count_closed_form(&rs, SignHom::Identity, m).unwrap();
            if cf != Some(e) || dp != e {
                return Err(format!("{name} M={m}: enum {e}, dp {dp}, closed {cf:?}"));
            }
            checked += 1;
        }
    }
    let spot = |s: &str, m| {
        solutions(&RootSystemData::build(s.parse().unwrap()), SignHom::Identity, m)
            .unwrap()
            .len()
    };
    let spots = [spot("B3", 2), spot("G2", 4), spot("F4", 1)];
    if spots != [7, 9, 2] {
        return Err(format!("spot values {spots:?}"));
    }
    Ok(format!("{checked} configurations agree; spots B3/2=7 G2/4=9 F4/1=2"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for name in SHIFT_ALGEBRAS {
        let rs = RootSystemData::build(name.parse().unwrap());
        for sigma in SignHom::admissible(&rs) {
            let q = q_sigma(&rs, sigma).unwrap();
            for m in 0..=8 {
                let base = count_dp(&rs, SignHom::Identity, m).unwrap();
                let shifted = solutions(&rs, sigma, m + q).unwrap().len() as u64;
                let shifted_dp = count_dp(&rs, sigma, m + q).unwrap();
                if shifted != base || shifted_dp != base {
                    return Err(format!(
                        "{name} {} M={m}: {shifted}/{shifted_dp} vs {base}",
                        sigma.as_str()
                    ));
                }
                checked += 1;
            }
            if solutions(&rs, sigma, q).unwrap().len() != 1 {
                return Err(format!("{name} {}: |F at q| != 1", sigma.as_str()));
            }
            for m in 0..q {
                if !solutions(&rs, sigma, m).unwrap().is_empty() {
                    return Err(format!("{name} {} M={m} < q nonempty", sigma.as_str()));
                }
            }
        }
    }
    Ok(format!("{checked} shifted counts agree"))
}

fn criterion_4(groups: &[WeylGroup]) -> Outcome {
    let configs = transform_matrix(groups);
    for &(g, sigma, m) in &configs {
        let pts = enumerate_grid(g, sigma, m).unwrap();
        let labs = enumerate_labels(g, sigma, m).unwrap();
        if pts.len() != labs.len() {
            return Err(format!("{}: {} points, {} labels", tag(g, sigma, m), pts.len(), labs.len()));
        }
        let rs = g.root_system();
        let scale = weyl_discrete::rational::int(m as i64);
        for (p, l) in pts.iter().zip(&labs) {
            // M a, converted back to omega coordinates, is the label
            let ma: Vec<Rational> = rs
                .coweight_to_weight(&p.coords(rs, m))
                .iter()
                .map(|c| c * &scale)
                .collect();
            let lam: Vec<Rational> = l.lambda.iter().map(|&v| weyl_discrete::rational::int(v)).collect();
            if ma != lam {
                return Err(format!("{}: {:?} vs {:?}", tag(g, sigma, m), p.u, l.lambda));
            }
        }
    }
    Ok(format!("{} configurations", configs.len()))
}

fn criterion_5(groups: &[WeylGroup]) -> Outcome {
    let (mut worst_off, mut worst_diag) = (0.0f64, 0.0f64);
    let configs = transform_matrix(groups);
    for &(g, sigma, m) in &configs {
        let d = Discretization::new(g, sigma, m).unwrap();
        let gram = d.gram_matrix();
        let scale = d.scale();
        for (i, row) in gram.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i == j {
                    let target = scale * d.labels()[i].h as f64;
                    worst_diag = worst_diag.max((v - target).norm() / target);
                } else {
                    worst_off = worst_off.max(v.norm() / scale);
                }
            }
        }
        if worst_off >= GRAM_OFFDIAG_TOL || worst_diag >= GRAM_DIAG_TOL {
            return Err(format!("{}: off {worst_off:e}, diag {worst_diag:e}", tag(g, sigma, m)));
        }
    }
    let c2 = &groups[2];
    let d = Discretization::new(c2, SignHom::Determinant, 3).unwrap();
    let rho = d.labels().iter().position(|l| l.lambda == [1, 1]).ok_or("rho missing")?;
    let norm = d.gram_matrix()[rho][rho];
    if (norm - Complex64::new(288.0, 0.0)).norm() > 1e-9 {
        return Err(format!("C2 e M=3 rho norm {norm}"));
    }
    Ok(format!(
        "{} configurations; off-diagonal {worst_off:.1e}*scale, diagonal {worst_diag:.1e}; rho norm 288",
        configs.len()
    ))
}

fn criterion_6(groups: &[WeylGroup]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    let mut hits = 0;
    let configs = transform_matrix(groups);
    for &(g, _, m) in &configs {
        let rs = g.root_system();
        let n = rs.rank();
        let dmn = (rs.d * m.pow(n as u32)) as f64;
        let coroots = rs.coroots_in_weight_basis();
        for t in 0..EXP_SUM_SAMPLES {
            let mu: Vec<i64> = if t % 4 == 0 {
                let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
                (0..n)
                    .map(|k| (0..n).map(|j| c[j] * coroots[j][k] * m as i64).sum())
                    .collect()
            } else {
                random_weight(rs, &mut rng, 3 * m as i64)
            };
            let s = exp_sum_check(rs, &mu, m).unwrap();
            let dev = if in_m_coroot_lattice(rs, &mu, m) {
                hits += 1;
                (s - dmn).norm() / dmn
            } else {
                s.norm()
            };
            worst = worst.max(dev);
            if dev >= EXP_SUM_TOL {
                return Err(format!("{} mu={mu:?}: sum {s}", tag(g, SignHom::Identity, m)));
            }
        }
    }
    Ok(format!(
        "{} configurations x {EXP_SUM_SAMPLES} mu ({hits} in M Q^vee); worst {worst:.1e}",
        configs.len()
    ))
}

fn criterion_7(groups: &[WeylGroup]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut worst_rt, mut worst_pl) = (0.0f64, 0.0f64);
    let configs = transform_matrix(groups);
    for &(g, sigma, m) in &configs {
        let d = Discretization::new(g, sigma, m).unwrap();
        for _ in 0..ROUND_TRIP_SAMPLES {
            let f = d.samples(random_samples(&mut rng, d.len())).unwrap();
            let back = d.synthesize(&d.forward(&f).unwrap()).unwrap();
            let norm: f64 = f.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
            let err: f64 = f
                .values
                .iter()
                .zip(&back.values)
                .map(|(x, y)| (x - y).norm_sqr())
                .sum::<f64>()
                .sqrt();
            let (lhs, rhs) = d.plancherel(&f).unwrap();
            worst_rt = worst_rt.max(err / norm);
            worst_pl = worst_pl.max((lhs - rhs).abs() / lhs);
        }
        if worst_rt >= ROUND_TRIP_TOL || worst_pl >= ROUND_TRIP_TOL {
            return Err(format!("{}: round trip {worst_rt:e}, plancherel {worst_pl:e}", tag(g, sigma, m)));
        }
    }
    Ok(format!(
        "{} configurations x {ROUND_TRIP_SAMPLES} vectors; round trip {worst_rt:.1e}, Plancherel {worst_pl:.1e}",
        configs.len()
    ))
}

fn criterion_8(groups: &[WeylGroup]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst_zero = 0.0f64;
    let mut zeros = 0;
    let configs = transform_matrix(groups);
    for &(g, sigma, m) in &configs {
        let rs = g.root_system();
        let d = Discretization::new(g, sigma, m).unwrap();
        let full = enumerate_grid(g, SignHom::Identity, m).unwrap();
        for _ in 0..10 {
            let w = random_affine(g, &mut rng, SYMMETRY_WORD_LEN);
            let a = full[rng.gen_range(0..full.len())].coords(rs, m);
            let lambda = random_weight(rs, &mut rng, 4);
            if !argument_symmetry_check(g, sigma, &lambda, &w, &a, SYMMETRY_TOL).unwrap() {
                return Err(format!("{}: argument symmetry, lambda {lambda:?}", tag(g, sigma, m)));
            }
            let lab = &d.labels()[rng.gen_range(0..d.len())].lambda;
            if !label_symmetry_check(g, sigma, lab, &w, &a, m, SYMMETRY_TOL).unwrap() {
                return Err(format!("{}: label symmetry, lambda {lab:?}", tag(g, sigma, m)));
            }
        }
        let neg = sigma.negative_generators(rs).unwrap();
        let on_walls: Vec<_> = full
            .iter()
            .filter(|p| neg.iter().any(|&i| p.u[i] == 0))
            .collect();
        // labels on M H^sigma vanish everywhere; every label vanishes on H^sigma
        let phases: Vec<PhasePoint> = full
            .iter()
            .map(|p| PhasePoint::new(rs, &p.coords(rs, m)).unwrap())
            .collect();
        for lambda in boundary_labels(rs, sigma, m).unwrap() {
            let f = OrbitFunction::new(g, sigma, &lambda).unwrap();
            for p in &phases {
                worst_zero = worst_zero.max(f.at(p).norm());
                zeros += 1;
            }
        }
        for p in &on_walls {
            let a = p.coords(rs, m);
            for _ in 0..5 {
                let lambda = random_weight(rs, &mut rng, 5);
                let v = evaluate(g, sigma, &lambda, &a).unwrap();
                worst_zero = worst_zero.max(v.norm());
                zeros += 1;
            }
        }
        if worst_zero >= SYMMETRY_TOL {
            return Err(format!("{}: boundary value {worst_zero:e}", tag(g, sigma, m)));
        }
    }
    Ok(format!(
        "{} configurations; {zeros} boundary evaluations, worst {worst_zero:.1e}",
        configs.len()
    ))
}

fn criterion_9(groups: &[WeylGroup]) -> Outcome {
    let a1 = &groups[0];
    let mut worst_ref = 0.0f64;
    for k in 1..=8 {
        let s = build_s_matrix(a1, SignHom::Determinant, k).map_err(|e| e.to_string())?;
        let r = a1_kac_peterson_reference(k);
        for (row, rrow) in s.entries.iter().zip(&r) {
            for (z, x) in row.iter().zip(rrow) {
                worst_ref = worst_ref.max((z - Complex64::new(*x, 0.0)).norm());
            }
        }
    }
    if worst_ref >= A1_REFERENCE_TOL {
        return Err(format!("A1 reference deviation {worst_ref:e}"));
    }
    let (mut worst_u, mut worst_s, mut built) = (0.0f64, 0.0f64, 0);
    for g in groups {
        let rs = g.root_system();
        for sigma in SignHom::admissible(rs) {
            for k in 1..=3 {
                let s = build_s_matrix(g, sigma, k).map_err(|e| e.to_string())?;
                let expected = count_dp(rs, SignHom::Identity, k).unwrap() as usize;
                if s.dim() != expected {
                    return Err(format!("{} k={k}: dim {} vs {expected}", tag(g, sigma, s.m), s.dim()));
                }
                worst_u = worst_u.max(check_unitary(&s));
                worst_s = worst_s.max(check_symmetric(&s));
                built += 1;
            }
        }
    }
    if worst_u >= S_MATRIX_TOL || worst_s >= S_MATRIX_TOL {
        return Err(format!("unitarity {worst_u:e}, symmetry {worst_s:e}"));
    }
    Ok(format!(
        "A1 k=1..8 within {worst_ref:.1e}; {built} matrices, unitarity {worst_u:.1e}, symmetry {worst_s:.1e}"
    ))
}

fn main() {
    let start = Instant::now();
    let groups: Vec<WeylGroup> = TRANSFORM_ALGEBRAS.iter().map(|s| group(s)).collect();
    let setup = start.elapsed();

    type Run<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let g = &groups;
    let criteria: Vec<(&str, Option<Duration>, Run)> = vec![
        ("1 C2 M=3 counts and cosets", Some(Duration::from_secs(1)), Box::new(criterion_1)),
        ("2 counting polynomials", Some(Duration::from_secs(10)), Box::new(criterion_2)),
        ("3 shift law", None, Box::new(criterion_3)),
        ("4 grid/label bijection", None, Box::new(move || criterion_4(g))),
        ("5 orthogonality", Some(Duration::from_secs(60)), Box::new(move || criterion_5(g))),
        ("6 exponential sums", None, Box::new(move || criterion_6(g))),
        ("7 round trip and Plancherel", None, Box::new(move || criterion_7(g))),
        ("8 symmetries and boundary zeros", None, Box::new(move || criterion_8(g))),
        ("9 S-matrices", None, Box::new(move || criterion_9(g))),
    ];

    let mut failed = 0;
    for (name, limit, run) in criteria {
        let t = Instant::now();
        let outcome = run();
        let elapsed = t.elapsed();
        let over_time = limit.is_some_and(|l| elapsed > l);
        let (status, detail) = match (&outcome, over_time) {
            (Ok(msg), false) => ("PASS", msg.clone()),
            (Ok(msg), true) => ("FAIL", format!("{msg}; exceeded {:?}", limit.unwrap())),
            (Err(msg), _) => ("FAIL", msg.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} criterion {name} [{:.3}s]: {detail}", elapsed.as_secs_f64());
    }
    println!(
        "acceptance: {} of 9 passed (group setup {:.3}s, total {:.3}s)",
        9 - failed,
        setup.as_secs_f64(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
