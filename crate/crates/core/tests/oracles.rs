//! Independent recomputations of the library's derived quantities.

use std::collections::{BTreeSet, HashSet};

use num_complex::Complex64;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weyl_discrete::grids::{count_report, enumerate_grid, enumerate_labels, solutions};
use weyl_discrete::rational::{frac, int, rat};
use weyl_discrete::transforms::{coset_representatives, evaluate, in_m_coroot_lattice, negate};
use weyl_discrete::weylgroup::apply_affine;
use weyl_discrete::{q_sigma, Discretization, Rational, RootSystemData, SignHom, WeylGroup};

fn group(s: &str) -> WeylGroup {
    WeylGroup::new(RootSystemData::build(s.parse().unwrap())).unwrap()
}

/// Class of a coweight modulo `Q^vee`, as fractional coroot coordinates.
fn torus_key(rs: &RootSystemData, a: &[Rational]) -> Vec<Rational> {
    rs.coweight_to_coroot(a).iter().map(frac).collect()
}

fn random_point(rs: &RootSystemData, rng: &mut impl Rng) -> Vec<Rational> {
    (0..rs.rank())
        .map(|_| rat(rng.gen_range(-40..=40), rng.gen_range(1..=12)))
        .collect()
}

const NONSIMPLY: [&str; 8] = ["B3", "B4", "B5", "C2", "C3", "C4", "C5", "G2"];

#[test]
fn epsilon_is_torus_orbit_size() {
    for name in ["A1", "A2", "C2", "G2", "B3", "F4"] {
        let g = group(name);
        let rs = g.root_system();
        for sigma in SignHom::admissible(rs) {
            for m in 1..=4 {
                for p in enumerate_grid(&g, sigma, m).unwrap() {
                    let a = p.coords(rs, m);
                    let orbit: HashSet<Vec<Rational>> = g
                        .elements()
                        .iter()
                        .map(|w| torus_key(rs, &w.act_on_coweight(&a)))
                        .collect();
                    assert_eq!(p.eps, orbit.len() as u64, "{name} {sigma:?} M={m} {:?}", p.u);
                }
            }
        }
    }
}

#[test]
fn coset_representatives_match_box_dedupe() {
    for (name, ms) in [("A1", 1..=5), ("A2", 1..=4), ("C2", 1..=4), ("G2", 1..=4), ("B3", 1..=3)] {
        let rs = RootSystemData::build(name.parse().unwrap());
        for m in ms {
            let n = rs.rank();
            let side = (rs.d * m) as i64;
            let mut classes = BTreeSet::new();
            let mut k = vec![0i64; n];
            'outer: loop {
                classes.insert(torus_key(&rs, &rs.scaled_weight(&k, m)));
                for i in 0..n {
                    k[i] += 1;
                    if k[i] < side {
                        continue 'outer;
                    }
                    k[i] = 0;
                }
                break;
            }
            let reps = coset_representatives(&rs, m);
            let rep_classes: BTreeSet<_> = reps
                .iter()
                .map(|k| torus_key(&rs, &rs.scaled_weight(k, m)))
                .collect();
            assert_eq!(rep_classes.len(), reps.len(), "{name} M={m}: repeated class");
            assert_eq!(rep_classes, classes, "{name} M={m}");
            assert_eq!(reps.len() as u64, rs.d * m.pow(n as u32));
        }
    }
}

#[test]
fn root_system_from_orbit_of_simple_roots() {
    for name in ["A1", "A3", "B3", "B4", "C3", "D4", "D5", "G2", "F4", "E6"] {
        let g = group(name);
        let rs = g.root_system();
        let n = rs.rank();
        let roots: BTreeSet<Vec<i64>> = g
            .elements()
            .iter()
            .flat_map(|w| rs.cartan.iter().map(|alpha| w.act_on_weight(alpha)))
            .collect();
        assert_eq!(roots.len() as u64, rs.num_roots, "{name}");
        // alpha-coordinates c solve c^T C = omega-coordinates
        let to_alpha = |v: &Vec<i64>| -> Vec<Rational> {
            (0..n)
                .map(|j| (0..n).map(|k| int(v[k]) * &rs.cartan_inv[k][j]).sum())
                .collect()
        };
        let highest = roots
            .iter()
            .max_by_key(|v| to_alpha(v).iter().sum::<Rational>())
            .unwrap();
        assert_eq!(highest, &rs.highest_root_weight(), "{name}");
        let c = to_alpha(highest);
        let marks: Vec<Rational> = rs.marks.iter().map(|&m| int(m as i64)).collect();
        assert_eq!(c, marks, "{name}");
        assert_eq!(rs.coxeter_m, 1 + rs.marks.iter().sum::<u64>());
        assert_eq!(rs.num_roots, n as u64 * rs.coxeter_m, "{name}");
        assert_eq!(rs.weyl_order, g.order());
    }
}

#[test]
fn nonsimply_laced_table_regression() {
    let expected: &[(&str, u64, &[u64], u64, u64)] = &[
        ("B3", 4, &[1, 2, 1], 1, 4),
        ("B4", 4, &[1, 2, 2, 1], 1, 6),
        ("B5", 4, &[1, 2, 2, 2, 1], 1, 8),
        ("C2", 4, &[1, 1], 1, 2),
        ("C3", 8, &[1, 1, 1], 2, 2),
        ("C4", 16, &[1, 1, 1, 1], 3, 2),
        ("C5", 32, &[1, 1, 1, 1, 1], 4, 2),
        ("G2", 3, &[2, 1], 1, 3),
        ("F4", 4, &[2, 3, 2, 1], 3, 6),
    ];
    for &(name, d, comarks, qs, ql) in expected {
        let rs = RootSystemData::build(name.parse().unwrap());
        assert_eq!(rs.d, d, "{name}");
        assert_eq!(rs.comarks, comarks, "{name}");
        assert_eq!(rs.dual_coxeter_g, 1 + comarks.iter().sum::<u64>(), "{name}");
        assert_eq!(q_sigma(&rs, SignHom::Short).unwrap(), qs, "{name}");
        assert_eq!(q_sigma(&rs, SignHom::Long).unwrap(), ql, "{name}");
        assert_eq!(q_sigma(&rs, SignHom::Determinant).unwrap(), rs.dual_coxeter_g);
    }
    assert_eq!(NONSIMPLY.len() + 1, expected.len());
}

#[test]
fn reduction_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in ["A1", "A2", "C2", "G2", "B3", "C3", "F4"] {
        let g = group(name);
        let rs = g.root_system();
        for _ in 0..100 {
            let a = random_point(rs, &mut rng);
            let (p, w) = g.reduce_to_fundamental(&a).unwrap();
            assert!(p.y.iter().all(|v| !v.is_negative()));
            assert_eq!(apply_affine(rs, &w, &p.coweight_coords).unwrap(), a, "{name}");
        }
    }
}

#[test]
fn sign_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in NONSIMPLY.iter().chain(&["F4", "A3", "D4"]) {
        let g = group(name);
        let els = g.elements();
        for _ in 0..200 {
            let x = &els[rng.gen_range(0..els.len())];
            let y = &els[rng.gen_range(0..els.len())];
            let xy = x.compose(y);
            for sigma in SignHom::admissible(g.root_system()) {
                assert_eq!(xy.sign(sigma), x.sign(sigma) * y.sign(sigma));
            }
            assert_eq!(
                xy.sign(SignHom::Determinant) as i64,
                xy.weight_action.determinant()
            );
        }
    }
}

#[test]
fn conjugation_of_orbit_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in ["A2", "C2", "G2", "B3"] {
        let g = group(name);
        let rs = g.root_system();
        for sigma in SignHom::admissible(rs) {
            for _ in 0..10 {
                let lambda: Vec<i64> = (0..rs.rank()).map(|_| rng.gen_range(-4..=4)).collect();
                let a = random_point(rs, &mut rng);
                let v = evaluate(&g, sigma, &lambda, &a).unwrap();
                let w = evaluate(&g, sigma, &lambda, &negate(&a)).unwrap();
                assert!((v.conj() - w).norm() < 1e-10);
            }
        }
    }
}

#[test]
fn delta_sample_gives_single_term() {
    for (name, sigma, m) in [
        ("C2", SignHom::Identity, 3),
        ("C2", SignHom::Short, 4),
        ("G2", SignHom::Determinant, 6),
        ("B3", SignHom::Long, 5),
    ] {
        let g = group(name);
        let rs = g.root_system();
        let d = Discretization::new(&g, sigma, m).unwrap();
        let mut vals = vec![Complex64::new(0.0, 0.0); d.len()];
        vals[0] = Complex64::new(1.0, 0.0);
        let c = d.forward(&d.samples(vals).unwrap()).unwrap();
        let p0 = &d.grid()[0];
        let a0 = p0.coords(rs, m);
        let norm0 = (rs.d * g.order() * m.pow(rs.rank() as u32)) as f64;
        for (lab, coeff) in d.labels().iter().zip(&c.coeffs) {
            let phi = evaluate(&g, sigma, &lab.lambda, &a0).unwrap();
            let expect = phi.conj() * p0.eps as f64 / (norm0 * lab.h as f64);
            assert!((coeff - expect).norm() < 1e-12, "{name} {:?}", lab.lambda);
        }
    }
}

#[test]
fn labels_are_m_times_grid_points() {
    for name in ["A1", "A2", "C2", "G2", "B3"] {
        let g = group(name);
        let rs = g.root_system();
        for sigma in SignHom::admissible(rs) {
            let q = q_sigma(rs, sigma).unwrap();
            for m in q.max(1)..=q + 4 {
                let pts = enumerate_grid(&g, sigma, m).unwrap();
                let labs = enumerate_labels(&g, sigma, m).unwrap();
                assert_eq!(pts.len(), labs.len());
                for (p, l) in pts.iter().zip(&labs) {
                    assert_eq!(p.weight(), l.lambda);
                    assert_eq!(l.h, g.h_m(&l.lambda, m).unwrap());
                }
            }
        }
    }
}

#[test]
fn counts_by_brute_force_box() {
    // count points of (1/M)P in F^sigma by scanning the box of omega coordinates
    for name in ["C2", "G2", "B3", "A2"] {
        let g = group(name);
        let rs = g.root_system();
        for sigma in SignHom::admissible(rs) {
            for m in 1..=6u64 {
                let n = rs.rank();
                let mut count = 0u64;
                let mut k = vec![0i64; n];
                'outer: loop {
                    let a = rs.scaled_weight(&k, m);
                    if let Ok((p, _)) = g.reduce_to_fundamental(&a) {
                        // a already in F iff reduction is trivial
                        if p.coweight_coords == a {
                            let mask = p.wall_mask();
                            let neg = sigma.negative_generators(rs).unwrap();
                            if neg.iter().all(|&i| mask & (1 << i) == 0) {
                                count += 1;
                            }
                        }
                    }
                    for i in 0..n {
                        k[i] += 1;
                        if k[i] <= m as i64 {
                            continue 'outer;
                        }
                        k[i] = 0;
                    }
                    break;
                }
                let rep = count_report(&g, sigma, m).unwrap();
                assert_eq!(rep.enumerated, count, "{name} {sigma:?} M={m}");
                assert_eq!(solutions(rs, sigma, m).unwrap().len() as u64, count);
            }
        }
    }
}

#[test]
fn exp_sum_against_lattice_test() {
    let rs = RootSystemData::build("C2".parse().unwrap());
    // alpha_2 is long, so alpha_2^vee = alpha_2 = (-2, 2) in omega coordinates
    let mu = [-6, 6];
    assert!(in_m_coroot_lattice(&rs, &mu, 3));
    assert!(!in_m_coroot_lattice(&rs, &[1, 0], 3));
}
