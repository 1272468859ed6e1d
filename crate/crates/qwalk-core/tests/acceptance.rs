//! Acceptance suite: each test pins one quantitative claim the simulator has
//! to reproduce, at its stated tolerance. Failure messages carry the measured
//! numbers so a red test doubles as a report.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qwalk_core::envelope::DEFAULT_PANELS;
use qwalk_core::{
    analytic_variance, check_decoupled_recurrence, distribution, evolve, fit_c_theta, mixing_time,
    recurrence_evolve, time_averaged, tv_distance, uniform, CoinParams, EnvelopeModel,
    InitialCondition, PositionDistribution,
};

const DEG: f64 = PI / 180.0;

fn walk_distribution(xi: f64, theta: f64, zeta: f64, steps: usize) -> PositionDistribution {
    let coin = CoinParams::new(xi, theta, zeta).unwrap();
    distribution(&evolve(InitialCondition::Symmetric, &coin, steps).unwrap())
}

#[test]
fn criterion_01_hadamard_variance_law() {
    let start = Instant::now();
    let dist = walk_distribution(0.0, 45.0 * DEG, 0.0, 200);
    let measured = dist.variance();
    let elapsed = start.elapsed();

    let target = (1.0 - FRAC_1_SQRT_2) * 200.0 * 200.0;
    let rel = (measured / target - 1.0).abs();
    println!("sigma2 = {measured:.3}, target = {target:.3}, rel = {rel:.2e}");
    assert!(rel <= 0.05, "variance {measured} not within 5% of {target}");
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, budget 1 s");
}

#[test]
fn criterion_02a_c_theta_curve_unbiased() {
    let start = Instant::now();
    let grid: Vec<f64> = [15.0, 30.0, 45.0, 60.0, 75.0].iter().map(|d| d * DEG).collect();
    let fitted = fit_c_theta(&grid, 200, 0.0).unwrap();
    for &(theta, c) in &fitted {
        let law = 1.0 - theta.sin();
        let rel = (c / law - 1.0).abs();
        println!("theta = {:.0} deg: C = {c:.4}, 1 - sin = {law:.4}, rel = {rel:.2e}", theta / DEG);
        assert!(rel <= 0.08, "C_theta {c} not within 8% of {law} at theta {theta}");
    }
    assert!(start.elapsed().as_secs_f64() < 10.0);
}

#[test]
fn criterion_02b_max_bias_curve_gap() {
    let grid: Vec<f64> = [15.0, 30.0, 45.0, 60.0, 75.0].iter().map(|d| d * DEG).collect();
    let unbiased = fit_c_theta(&grid, 200, 0.0).unwrap();
    let biased = fit_c_theta(&grid, 200, FRAC_PI_2).unwrap();
    let mut report = String::new();
    let mut ok = true;
    for (&(theta, c0), &(_, c90)) in unbiased.iter().zip(&biased) {
        let gap = c0 - c90;
        report.push_str(&format!(
            "theta = {:.0} deg: C(eta=0) = {c0:.4}, C(eta=90) = {c90:.4}, gap = {gap:.4}\n",
            theta / DEG
        ));
        ok &= gap > 0.0 && gap < 0.05;
    }
    println!("{report}");
    assert!(ok, "eta = 90 deg curve must sit below eta = 0 with gap < 0.05:\n{report}");
}

#[test]
fn criterion_03_symmetry_iff_equal_phases() {
    let mut rng = StdRng::seed_from_u64(0x51_b2_a6_40);
    let steps = 60;

    // Equal-phase batch: exactly symmetric distributions.
    for _ in 0..20 {
        let theta = rng.gen_range(6.0..84.0) * DEG;
        let xi = rng.gen_range(0.0..2.0 * PI);
        let dist = walk_distribution(xi, theta, xi, steps);
        let a = dist.asymmetry();
        assert!(a <= 1e-10, "xi = zeta = {xi}, theta = {theta}: asymmetry {a}");
    }

    // Unequal-phase batch. The sampler keeps eta = |xi - zeta| away from 0
    // (no bias) and from pi, where a diagonal-phase gauge plus complex
    // conjugation makes the walk exactly symmetric again.
    for _ in 0..35 {
        let theta = rng.gen_range(6.0..84.0) * DEG;
        let xi = rng.gen_range(0.0..2.0 * PI);
        let eta = rng.gen_range(0.1..PI - 0.1);
        let zeta = xi - eta;
        let dist = walk_distribution(xi, theta, zeta, steps);
        let a = dist.asymmetry();
        assert!(a > 1e-3, "xi = {xi}, theta = {theta}, zeta = {zeta}: asymmetry {a}");
    }
}

#[test]
fn criterion_04_bias_direction_and_mirror_pair() {
    let right = walk_distribution(0.0, PI / 3.0, 5.0 * PI / 12.0, 100);
    let left = walk_distribution(5.0 * PI / 12.0, PI / 3.0, 0.0, 100);
    println!("mean(zeta-biased) = {:.4}, mean(xi-biased) = {:.4}", right.mean(), left.mean());
    assert!(right.mean() > 0.0, "zeta bias must drift right, mean {}", right.mean());
    assert!(left.mean() < 0.0, "xi bias must drift left, mean {}", left.mean());

    let mut worst = 0.0f64;
    for m in -100..=100i64 {
        worst = worst.max((right.probability(m) - left.probability(-m)).abs());
    }
    println!("largest mirror deviation = {worst:.2e}");
    assert!(worst <= 1e-10, "distributions are not mirror images: {worst}");
}

#[test]
fn criterion_05_support_bound() {
    for theta_deg in [15.0, 45.0, 75.0] {
        let dist = walk_distribution(0.0, theta_deg * DEG, 0.0, 100);
        let edge = 100.0 * (theta_deg * DEG).cos() + 2.0;
        let outside: f64 = dist
            .iter()
            .filter(|&(m, _)| (m as f64).abs() > edge)
            .map(|(_, p)| p)
            .sum();
        println!("theta = {theta_deg} deg: mass outside +-{edge:.1} = {outside:.4}");
        assert!(outside <= 0.05, "theta {theta_deg} deg leaks {outside} outside the envelope support");
    }
}

#[test]
fn criterion_06a_envelope_quadrature_vs_closed_form() {
    let mut report = String::new();
    let mut ok = true;
    for steps in [100usize, 400] {
        for theta_deg in [10.0, 20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0] {
            let theta = theta_deg * DEG;
            let quad = qwalk_core::variance_quadrature(theta, steps, DEFAULT_PANELS).unwrap();
            let closed = analytic_variance(theta, steps).unwrap();
            let rel = (quad / closed - 1.0).abs();
            report.push_str(&format!(
                "N = {steps}, theta = {theta_deg} deg: quadrature = {quad:.1}, closed = {closed:.1}, rel = {rel:.3}\n"
            ));
            ok &= rel <= 0.02;
        }
    }
    println!("{report}");
    assert!(ok, "quadrature of the envelope integral vs N^2 (1 - sin theta):\n{report}");
}

#[test]
fn criterion_06b_envelope_mass_near_unity() {
    let model = EnvelopeModel::new(45.0 * DEG, 100).unwrap();
    let mass = model.total_mass(DEFAULT_PANELS);
    println!("envelope mass at N = 100, theta = 45 deg: {mass:.4}");
    assert!(
        (mass - 1.0).abs() <= 0.10,
        "envelope mass {mass} not within 10% of 1 at N = 100, theta = 45 deg"
    );
}

#[test]
fn criterion_07_entropy_shape() {
    for steps in [50usize, 100] {
        let mut best = (0i32, f64::MIN);
        let mut h15 = 0.0;
        let mut h45 = 0.0;
        for theta_deg in (5..=85).step_by(10) {
            let h = walk_distribution(0.0, theta_deg as f64 * DEG, 0.0, steps).entropy_bits();
            if h > best.1 {
                best = (theta_deg, h);
            }
            if theta_deg == 15 {
                h15 = h;
            }
            if theta_deg == 45 {
                h45 = h;
            }
        }
        println!("N = {steps}: peak at {} deg, H(15)/H(45) = {:.3}", best.0, h15 / h45);
        assert_eq!(best.0, 45, "entropy peak at {} deg for N = {steps}", best.0);
        assert!(h15 >= 0.8 * h45, "H(15 deg) = {h15} < 0.8 * H(45 deg) = {h45}");
    }
}

#[test]
fn criterion_08_mixing_ordering() {
    let start = Instant::now();
    let n = 101;
    let flat = uniform(n);
    let tv_at = |eta: f64, theta_deg: f64, horizon: usize| -> f64 {
        let coin = CoinParams::new(eta, theta_deg * DEG, 0.0).unwrap();
        let avg = time_averaged(InitialCondition::Symmetric, &coin, n, horizon).unwrap();
        tv_distance(avg.probabilities(), &flat).unwrap()
    };

    // ceil(ln 101) = 5.
    for horizon in [n * 5, 200 * n] {
        let tv15 = tv_at(0.0, 15.0, horizon);
        let tv45 = tv_at(0.0, 45.0, horizon);
        let tv75 = tv_at(0.0, 75.0, horizon);
        let tv45_biased = tv_at(FRAC_PI_2, 45.0, horizon);
        println!(
            "T = {horizon}: tv(15) = {tv15:.5}, tv(45) = {tv45:.5}, tv(75) = {tv75:.5}, tv(45, eta=90) = {tv45_biased:.5}"
        );
        assert!(tv15 < tv45 && tv45 < tv75, "ordering broken at T = {horizon}");
        assert!(tv45_biased >= tv45, "bias may not improve mixing at T = {horizon}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}, budget 60 s");
}

#[test]
fn criterion_09_recurrence_equivalence() {
    let mut rng = StdRng::seed_from_u64(0x9e_37_79_b9);
    for case in 0..20 {
        let xi = rng.gen_range(0.0..2.0 * PI);
        let theta = rng.gen_range(0.0..2.0 * PI);
        let zeta = rng.gen_range(0.0..2.0 * PI);
        let coin = CoinParams::new(xi, theta, zeta).unwrap();

        let direct = evolve(InitialCondition::Symmetric, &coin, 50).unwrap();
        let gathered = recurrence_evolve(InitialCondition::Symmetric, &coin, 50).unwrap();
        for m in direct.min_position()..=direct.max_position() {
            let (da, db) = direct.amplitudes(m);
            let (ga, gb) = gathered.amplitudes(m);
            assert!(
                (da - ga).norm() <= 1e-10 && (db - gb).norm() <= 1e-10,
                "case {case}: amplitude mismatch at m = {m}"
            );
        }

        let matrix = coin.matrix();
        let mut history = vec![qwalk_core::initial_state(InitialCondition::Symmetric).unwrap()];
        for _ in 0..50 {
            history.push(history.last().unwrap().step(&matrix));
        }
        let residual = check_decoupled_recurrence(&history[1..], &coin).unwrap();
        assert!(residual <= 1e-9, "case {case}: decoupled residual {residual}");
    }
}

#[test]
fn criterion_10_norm_conservation_long_runs() {
    let mut rng = StdRng::seed_from_u64(0x0d_d6_74_12);
    for _ in 0..3 {
        let xi = rng.gen_range(0.0..2.0 * PI);
        let theta = rng.gen_range(0.0..2.0 * PI);
        let zeta = rng.gen_range(0.0..2.0 * PI);
        let coin = CoinParams::new(xi, theta, zeta).unwrap();

        let line = evolve(InitialCondition::Symmetric, &coin, 10_000).unwrap();
        let line_drift = (line.norm_sqr() - 1.0).abs();
        assert!(line_drift <= 1e-9, "line norm drift {line_drift}");

        let matrix = coin.matrix();
        let mut cycle = qwalk_core::CycleState::new(101, InitialCondition::Symmetric).unwrap();
        for _ in 0..10_000 {
            cycle = cycle.step(&matrix);
        }
        let cycle_drift = (cycle.norm_sqr() - 1.0).abs();
        assert!(cycle_drift <= 1e-9, "cycle norm drift {cycle_drift}");
    }
}
