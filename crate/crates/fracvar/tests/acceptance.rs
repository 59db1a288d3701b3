//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Published table values are asserted at their stated tolerances; the
//! randomized identity suites run with fixed seeds.

use std::collections::HashMap;
use std::time::Instant;

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fracvar::error::Result;
use fracvar::fracops::{
    diamond_sum, frac_sum, leibniz_series, nabla_frac_sum, shift_identity_residual,
    summation_by_parts_residual, Side,
};
use fracvar::laplace::{
    derivative_rule_residual, frac_monomial_op, laplace_numeric, FracResult, MonomialBasis,
    OpKind,
};
use fracvar::special::{binomial_real, h_falling_factorial, log_gamma_signed};
use fracvar::timescale::{generalized_polynomial, h_integral, Grid, GridFunction};
use fracvar::variational::{
    reference_solution, solve_extremals, Boundary, ExprLagrangian, FdLagrangian,
    ReferenceSolution, SolverConfig, VariationalProblem,
};

const TAB1: [(f64, [f64; 4]); 4] = [
    (0.25, [0.10647146897355, 0.16857982587479, 0.2792657904952, 0.90855653524095]),
    (0.50, [0.20997375328084, 0.35695538057743, 0.54068241469816, 0.67191601049869]),
    (0.75, [0.25543605027861, 0.4702345471038, 0.69508876506414, 0.4246209666969]),
    (1.00, [0.25, 0.5, 0.75, 0.25]),
];

const TAB2: [(f64, f64, f64); 4] = [
    (0.25, 0.22426470588235, 0.96441291360294),
    (0.50, 0.375, 0.9140625),
    (0.75, 0.4575, 0.91720703125),
    (1.00, 0.5, 1.0),
];

const TAB2_ARGMIN: f64 = 0.61747447161482;

const TAB3: [(f64, f64, f64); 4] = [
    (0.25, 0.94117647058824, -0.47058823529412),
    (0.50, 0.8, -0.4),
    (0.75, 0.64, -0.32),
    (1.00, 0.5, -0.25),
];

// (y(1/4), y(1/2), y(3/4), J, Legendre verified)
const CAND8: [([f64; 3], f64, bool); 8] = [
    ([-0.5511786, 0.0515282, 0.5133134], 9.3035911, false),
    ([0.2669091, 0.4878808, 0.7151924], 2.0084203, true),
    ([-2.6745703, 0.5599360, -2.6730125], 698.4443232, false),
    ([0.5789976, 1.0701515, 0.1840377], 12.5174960, false),
    ([1.0306820, 1.8920322, 2.7429222], -32.7189756, true),
    ([0.5087946, -0.1861431, 0.4489196], 10.6730959, false),
    ([4.0583690, -1.0299054, -5.0030989], 2451.7637948, false),
    ([-1.7436106, -3.1898449, -0.8850511], 238.6120299, false),
];

// (y(0.1..0.4), J, Legendre verified)
const CAND16: [([f64; 4], f64, bool); 16] = [
    ([-0.305570704, -0.428093486, 0.223708338, 0.480549114], 12.25396166, false),
    ([-0.427934654, -0.599520948, 0.313290997, -0.661831134], 156.2317667, false),
    ([0.284152257, -0.227595659, 0.318847274, 0.531827387], 8.669645848, false),
    ([-0.277642565, 0.222381632, 0.386666793, 0.555841555], 6.993518478, false),
    ([0.387074742, -0.310032839, 0.434336603, -0.482903047], 110.7912605, false),
    ([0.259846344, 0.364035314, 0.463222456, 0.597907505], 5.104389191, true),
    ([-0.375094681, 0.300437245, 0.522386246, -0.419053781], 93.95316858, false),
    ([0.343327771, 0.480989769, 0.61204299, -0.280908953], 69.23497954, false),
    ([0.297792192, 0.417196073, -0.218013689, 0.460556635], 14.12227593, false),
    ([0.41283304, 0.578364133, -0.302235104, -0.649232892], 157.8272685, false),
    ([-0.321401682, 0.257431098, -0.360644857, 0.400971272], 19.87468886, false),
    ([0.330157414, -0.264444122, -0.459803086, 0.368850105], 24.84475504, false),
    ([-0.459640837, 0.368155651, -0.515763025, -0.860276767], 224.9964788, false),
    ([-0.359429958, -0.50354835, -0.640748011, 0.294083676], 34.43515839, false),
    ([0.477760586, -0.382668914, -0.66536683, -0.956478654], 263.3075289, false),
    ([-0.541587541, -0.758744525, -0.965476394, -1.246195157], 392.9592508, false),
];

fn report(criterion: u32, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} - {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

fn v2_problem(
    grid: Grid,
    alpha: f64,
    a_val: f64,
    b_val: f64,
) -> VariationalProblem<ExprLagrangian> {
    let lag = ExprLagrangian::parse("v^2", HashMap::new()).unwrap();
    VariationalProblem::new(
        grid,
        lag,
        alpha,
        alpha,
        Boundary::Fixed(a_val),
        Boundary::Fixed(b_val),
    )
    .unwrap()
}

fn quick_cfg() -> SolverConfig {
    SolverConfig { n_starts: 16, radius: 2.0, newton_tol: 1e-13, ..SolverConfig::default() }
}

#[test]
fn criterion_01_table_z1_b4() {
    let start = Instant::now();
    let grid = Grid::new(0.0, 1.0, 5).unwrap();
    let mut worst: f64 = 0.0;
    for (alpha, row) in TAB1 {
        let p = v2_problem(grid, alpha, 0.0, 1.0);
        let sols = solve_extremals(&p, &quick_cfg()).unwrap();
        let best = &sols[0];
        for (i, want) in row[..3].iter().enumerate() {
            worst = worst.max((best.y.value(i + 1) - want).abs());
        }
        worst = worst.max((best.functional_value - row[3]).abs());
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst < 1e-8 && elapsed < 5.0;
    report(
        1,
        pass,
        &format!("Table Z tab:1 (16 values): worst error {worst:.2e}, runtime {elapsed:.2}s"),
    );
    assert!(pass);
}

#[test]
fn criterion_02_closed_forms() {
    let grid = Grid::new(0.0, 1.0, 3).unwrap();
    let (a_val, b_val) = (0.3, 1.2);
    let mut worst: f64 = 0.0;
    for k in 0..20 {
        let alpha = 0.05 + 0.95 * k as f64 / 19.0;
        let p = v2_problem(grid, alpha, a_val, b_val);
        let sols = solve_extremals(&p, &quick_cfg()).unwrap();
        let expect =
            reference_solution(ReferenceSolution::Z1B2 { alpha, a_val, b_val }).unwrap();
        worst = worst.max((sols[0].y.value(1) - expect).abs());
    }
    let mut worst3: f64 = 0.0;
    let lag3 = || ExprLagrangian::parse("(1/2)*v^2-u", HashMap::new()).unwrap();
    for k in 0..20 {
        let alpha = 0.05 + 0.95 * k as f64 / 19.0;
        let p = VariationalProblem::new(
            grid,
            lag3(),
            alpha,
            alpha,
            Boundary::Fixed(0.0),
            Boundary::Fixed(0.0),
        )
        .unwrap();
        let sols = solve_extremals(&p, &quick_cfg()).unwrap();
        let expect = reference_solution(ReferenceSolution::Z3 { alpha }).unwrap();
        worst3 = worst3.max((sols[0].y.value(1) - expect).abs());
    }
    for (alpha, y1, j) in TAB3 {
        let p = VariationalProblem::new(
            grid,
            lag3(),
            alpha,
            alpha,
            Boundary::Fixed(0.0),
            Boundary::Fixed(0.0),
        )
        .unwrap();
        let sols = solve_extremals(&p, &quick_cfg()).unwrap();
        worst3 = worst3.max((sols[0].y.value(1) - y1).abs());
        worst3 = worst3.max((sols[0].functional_value - j).abs());
    }
    let pass = worst < 1e-10 && worst3 < 1e-10;
    report(
        2,
        pass,
        &format!("closed forms: ex1 sweep worst {worst:.2e}, ex3 worst {worst3:.2e}"),
    );
    assert!(pass);
}

fn solve_z2(alpha: f64) -> (f64, f64) {
    let grid = Grid::new(0.0, 1.0, 3).unwrap();
    let params: HashMap<String, f64> =
        [("gamma1".to_string(), 1.0), ("gamma2".to_string(), 1.0)].into();
    let lag = ExprLagrangian::parse("gamma1*v^2+gamma2*w^2", params).unwrap();
    let p = VariationalProblem::new(
        grid,
        lag,
        alpha,
        alpha,
        Boundary::Fixed(0.0),
        Boundary::Fixed(1.0),
    )
    .unwrap();
    let sols = solve_extremals(&p, &quick_cfg()).unwrap();
    (sols[0].y.value(1), sols[0].functional_value)
}

#[test]
fn criterion_03_table_z2_and_optimal_alpha() {
    let mut worst: f64 = 0.0;
    for (alpha, y1, j) in TAB2 {
        let (gy, gj) = solve_z2(alpha);
        worst = worst.max((gy - y1).abs()).max((gj - j).abs());
    }
    // golden-section search for the minimizer of alpha -> J on [0.4, 0.8]
    let phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (0.4_f64, 0.8_f64);
    let mut c = hi - phi * (hi - lo);
    let mut d = lo + phi * (hi - lo);
    let mut fc = solve_z2(c).1;
    let mut fd = solve_z2(d).1;
    while hi - lo > 1e-9 {
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - phi * (hi - lo);
            fc = solve_z2(c).1;
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + phi * (hi - lo);
            fd = solve_z2(d).1;
        }
    }
    let argmin = 0.5 * (lo + hi);
    let pass = worst < 1e-8 && (argmin - TAB2_ARGMIN).abs() < 1e-4;
    report(
        3,
        pass,
        &format!("Table Z tab:2 worst {worst:.2e}; argmin J {argmin:.10} vs {TAB2_ARGMIN}"),
    );
    assert!(pass);
}

fn hz3a_problem() -> VariationalProblem<ExprLagrangian> {
    let grid = Grid::new(0.0, 0.25, 5).unwrap();
    let params: HashMap<String, f64> = [("theta".to_string(), 1.0)].into();
    let lag = ExprLagrangian::parse("v^3+theta*w^2", params).unwrap();
    VariationalProblem::new(grid, lag, 0.8, 0.5, Boundary::Fixed(0.0), Boundary::Fixed(1.0))
        .unwrap()
}

#[test]
fn criterion_04_table_hz_candidates_ex3() {
    let p = hz3a_problem();
    let grid = *p.grid();
    let mut max_res: f64 = 0.0;
    let mut max_dj: f64 = 0.0;
    let mut verdicts_ok = true;
    for (vals, j_printed, verified) in CAND8 {
        let y = GridFunction::new(grid, vec![0.0, vals[0], vals[1], vals[2], 1.0]).unwrap();
        let res = p.el_residuals(&y).unwrap();
        max_res = max_res.max(res.iter().fold(0.0_f64, |m, r| m.max(r.abs())));
        let j = p.evaluate_functional(&y).unwrap();
        max_dj = max_dj.max((j - j_printed).abs());
        let lv = p.legendre_values(&y).unwrap();
        let scale = 1.0 + lv.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let got_verified = lv.iter().all(|&v| v >= -1e-9 * scale);
        if got_verified != verified {
            verdicts_ok = false;
        }
    }
    // multi-start with defaults rediscovers both verified candidates
    let found = solve_extremals(&p, &SolverConfig::default()).unwrap();
    let mut rediscovered = 0;
    let mut best_verified_j = f64::INFINITY;
    for c in &found {
        if c.legendre_verified {
            best_verified_j = best_verified_j.min(c.functional_value);
        }
    }
    for (vals, _, verified) in CAND8 {
        if !verified {
            continue;
        }
        if found.iter().any(|c| {
            (0..3).all(|i| (c.y.value(i + 1) - vals[i]).abs() < 1e-6)
        }) {
            rediscovered += 1;
        }
    }
    let res_ok = max_res < 1e-6;
    let dj_ok = max_dj < 1e-4;
    let best_ok = (best_verified_j - (-32.7189756)).abs() < 1e-4;
    let redisc_ok = rediscovered == 2;
    let pass = res_ok && dj_ok && verdicts_ok && best_ok && redisc_ok;
    report(
        4,
        pass,
        &format!(
            "hZ candidates ex3: max residual {max_res:.2e} (<1e-6: {res_ok}), \
             max |J - printed| {max_dj:.3e} (<1e-4: {dj_ok}), verdicts rows 2&5: {verdicts_ok}, \
             best verified J {best_verified_j:.7} vs -32.7189756: {best_ok}, \
             rediscovered {rediscovered}/2: {redisc_ok}"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_05_table_hz_16_candidates() {
    let grid = Grid::new(0.0, 0.1, 6).unwrap();
    let params: HashMap<String, f64> = [("theta".to_string(), 0.0)].into();
    let lag = ExprLagrangian::parse("v^3+theta*w^2", params).unwrap();
    let p = VariationalProblem::new(
        grid,
        lag,
        0.3,
        0.5,
        Boundary::Fixed(0.0),
        Boundary::Fixed(1.0),
    )
    .unwrap();
    let mut max_res: f64 = 0.0;
    let mut max_dj: f64 = 0.0;
    let mut verdicts_ok = true;
    let mut j6 = f64::NAN;
    for (idx, (vals, j_printed, verified)) in CAND16.iter().enumerate() {
        let y = GridFunction::new(
            grid,
            vec![0.0, vals[0], vals[1], vals[2], vals[3], 1.0],
        )
        .unwrap();
        let res = p.el_residuals(&y).unwrap();
        max_res = max_res.max(res.iter().fold(0.0_f64, |m, r| m.max(r.abs())));
        let j = p.evaluate_functional(&y).unwrap();
        max_dj = max_dj.max((j - j_printed).abs());
        let lv = p.legendre_values(&y).unwrap();
        let scale = 1.0 + lv.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let got_verified = lv.iter().all(|&v| v >= -1e-9 * scale);
        if got_verified != *verified {
            verdicts_ok = false;
        }
        if idx == 5 {
            j6 = j;
        }
    }
    let res_ok = max_res < 1e-4;
    let dj_ok = max_dj < 1e-4;
    let j6_ok = (j6 - 5.104389191).abs() < 1e-6;
    let pass = res_ok && dj_ok && verdicts_ok && j6_ok;
    report(
        5,
        pass,
        &format!(
            "hZ 16 candidates: max residual {max_res:.2e} (<1e-4: {res_ok}), \
             max |J - printed| {max_dj:.3e} (<1e-4: {dj_ok}), only #6 verified: {verdicts_ok}, \
             J(#6) {j6:.9} vs 5.104389191: {j6_ok}"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_06_hz2_convergence_to_continuous() {
    let hs = [0.5, 0.125, 0.0625, 1.0 / 30.0];
    let grids: Vec<Grid> = hs.iter().map(|&h| Grid::from_interval(0.0, 1.0, h).unwrap()).collect();
    // points shared by every grid in the sweep
    let shared: Vec<f64> = grids[0]
        .points()
        .filter(|&t| {
            grids.iter().all(|g| g.index_of(t).is_some())
        })
        .collect();
    assert!(shared.len() >= 3, "expected at least {{0, 1/2, 1}} shared, got {shared:?}");
    let mut dists = Vec::new();
    for g in &grids {
        let lag = ExprLagrangian::parse("(1/2)*v^2", HashMap::new()).unwrap();
        let p = VariationalProblem::new(
            *g,
            lag,
            0.75,
            0.75,
            Boundary::Fixed(0.0),
            Boundary::Fixed(1.0),
        )
        .unwrap();
        let sols = solve_extremals(&p, &quick_cfg()).unwrap();
        let y = &sols[0].y;
        let mut d: f64 = 0.0;
        for &t in &shared {
            if t == 0.0 {
                continue;
            }
            let r = reference_solution(ReferenceSolution::Hz2Continuous { t }).unwrap();
            d = d.max((y.value(g.index_of(t).unwrap()) - r).abs());
        }
        dists.push(d);
    }
    let decreasing = dists.windows(2).all(|w| w[1] < w[0]);
    report(
        6,
        decreasing,
        &format!("hZ ex2 distances to continuous reference at shared points: {dists:?}"),
    );
    assert!(decreasing);
}

#[test]
fn criterion_07_hz1_convergence_alpha_one() {
    let hs = [0.5, 0.25, 0.125, 0.0625];
    let mut dists = Vec::new();
    for &h in &hs {
        let g = Grid::from_interval(0.0, 1.0, h).unwrap();
        let lag = ExprLagrangian::parse("(1/2)*v^2-u", HashMap::new()).unwrap();
        let p = VariationalProblem::new(
            g,
            lag,
            1.0,
            1.0,
            Boundary::Fixed(0.0),
            Boundary::Fixed(0.0),
        )
        .unwrap();
        let sols = solve_extremals(&p, &quick_cfg()).unwrap();
        let y = &sols[0].y;
        let mut d: f64 = 0.0;
        for (i, t) in g.points().enumerate() {
            d = d.max((y.value(i) - 0.5 * t * (1.0 - t)).abs());
        }
        dists.push(d);
    }
    let decreasing = dists.windows(2).all(|w| w[1] < w[0]);
    report(
        7,
        decreasing,
        &format!("hZ ex1 (alpha=1) distances to t(1-t)/2: {dists:?}"),
    );
    assert!(decreasing);
}

fn random_values(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let dist = Uniform::new_inclusive(-1.0, 1.0);
    (0..n).map(|_| dist.sample(rng)).collect()
}

#[test]
fn criterion_08_structural_identity_suites() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20110609);
    let mut worst_sbp: f64 = 0.0;
    for _ in 0..50 {
        for h in [1.0, 0.25] {
            let n = 5 + (Uniform::new(0usize, 5).sample(&mut rng));
            let g = Grid::new(0.0, h, n).unwrap();
            let f = GridFunction::new(g.kappa(), random_values(&mut rng, n - 1)).unwrap();
            let gg = GridFunction::new(g, random_values(&mut rng, n)).unwrap();
            for alpha in [0.25, 0.5, 0.75] {
                let r = summation_by_parts_residual(&f, &gg, alpha).unwrap();
                worst_sbp = worst_sbp.max(r.abs());
            }
        }
    }
    let mut worst_shift: f64 = 0.0;
    for _ in 0..50 {
        for h in [1.0, 0.25] {
            let n = 5 + (Uniform::new(0usize, 5).sample(&mut rng));
            let g = Grid::new(0.0, h, n).unwrap();
            let f = GridFunction::new(g, random_values(&mut rng, n)).unwrap();
            for side in [Side::Left, Side::Right] {
                for nu in [0.5, 1.3] {
                    for i in 0..n - 1 {
                        let r = shift_identity_residual(&f, side, nu, i).unwrap();
                        worst_shift = worst_shift.max(r.abs());
                    }
                }
            }
        }
    }
    let mut worst_lemma: f64 = 0.0;
    for _ in 0..50 {
        let n = 6 + (Uniform::new(0usize, 4).sample(&mut rng));
        let g = Grid::new(0.0, 1.0, n).unwrap();
        let f = GridFunction::new(g, random_values(&mut rng, n)).unwrap();
        for i in 0..n {
            let delta = frac_sum(&f, Side::Left, 0.5, i).unwrap();
            let nabla = nabla_frac_sum(&f, 0.5, i).unwrap();
            worst_lemma = worst_lemma.max((delta - nabla).abs());
        }
    }
    let mut worst_diamond: f64 = 0.0;
    for a1 in [0.3, 0.7] {
        for a2 in [0.3, 0.7] {
            for b1 in [0.3, 0.7] {
                for b2 in [0.3, 0.7] {
                    for gm in [0.0, 0.5, 1.0] {
                        for _ in 0..2 {
                            let n = 7;
                            let g = Grid::new(0.0, 1.0, n).unwrap();
                            let f =
                                GridFunction::new(g, random_values(&mut rng, n)).unwrap();
                            let inner: Result<Vec<f64>> =
                                (0..n).map(|i| diamond_sum(&f, a2, b2, gm, i)).collect();
                            let inner = GridFunction::new(g, inner.unwrap()).unwrap();
                            for i in 0..n {
                                let lhs = diamond_sum(&inner, a1, b1, gm, i).unwrap();
                                let rhs = gm
                                    * diamond_sum(&f, a1 + a2, b1 + a2, gm, i).unwrap()
                                    + (1.0 - gm)
                                        * diamond_sum(&f, a1 + b2, b1 + b2, gm, i).unwrap();
                                worst_diamond = worst_diamond.max((lhs - rhs).abs());
                            }
                        }
                    }
                }
            }
        }
    }
    let mut worst_leibniz: f64 = 0.0;
    for _ in 0..50 {
        let n = 9;
        let g = Grid::new(0.0, 1.0, n).unwrap();
        let f = GridFunction::new(g, random_values(&mut rng, n)).unwrap();
        let deg = Uniform::new(0usize, 4).sample(&mut rng);
        let coefs = random_values(&mut rng, deg + 1);
        let poly = |t: f64| coefs.iter().rev().fold(0.0, |acc, c| acc * t + c);
        let gg = GridFunction::from_fn(g, poly);
        let prod = GridFunction::new(
            g,
            f.values().iter().zip(gg.values()).map(|(a, b)| a * b).collect(),
        )
        .unwrap();
        let (alpha, beta, gm) = (0.45, 0.8, 0.5);
        for i in deg..n {
            let lhs = diamond_sum(&prod, alpha, beta, gm, i).unwrap();
            let rhs = leibniz_series(&f, &gg, alpha, beta, gm, i, deg).unwrap();
            worst_leibniz = worst_leibniz.max((lhs - rhs).abs());
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst_sbp < 1e-9
        && worst_shift < 1e-9
        && worst_lemma < 1e-9
        && worst_diamond < 1e-9
        && worst_leibniz < 1e-9
        && elapsed < 30.0;
    report(
        8,
        pass,
        &format!(
            "identities: summation-by-parts {worst_sbp:.2e}, shift {worst_shift:.2e}, \
             delta-nabla {worst_lemma:.2e}, diamond composition {worst_diamond:.2e}, \
             Leibniz {worst_leibniz:.2e}; runtime {elapsed:.1}s"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_09_laplace_suite() {
    // derivative rule for the three listed functions
    let r1 = derivative_rule_residual(|_| 1.0, 1.3, 0.5, 1e-12).unwrap();
    let r2 = derivative_rule_residual(|t| t, 1.0, 0.5, 1e-13).unwrap();
    let h = 0.25_f64;
    let c = 0.3_f64;
    let r3 =
        derivative_rule_residual(move |t| (1.0 + h * c).powf(t / h), 2.0, h, 1e-13).unwrap();
    let deriv_ok = r1.abs() < 1e-8 && r2.abs() < 1e-8 && r3.abs() < 1e-8;

    // composition of fractional integrals is exponent-additive
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let dist = Uniform::new(0.01, 2.0);
    let mut comp_ok = true;
    for _ in 0..50 {
        let (alpha, beta) = (dist.sample(&mut rng), dist.sample(&mut rng));
        let first = frac_monomial_op(OpKind::Integral, MonomialBasis::Poly(1), alpha).unwrap();
        let second = first.transform().unwrap().integrate(beta).unwrap();
        let direct =
            frac_monomial_op(OpKind::Integral, MonomialBasis::Poly(1), alpha + beta).unwrap();
        let d = direct.transform().unwrap();
        if (second.terms()[0].1 - d.terms()[0].1).abs() > 1e-12 {
            comp_ok = false;
        }
    }

    // integer-order cross-check: inverse of integral(h_k, 1) equals
    // h_(k+1)(t, 0) from the grid closed form, which equals the recursive
    // h-integral of h_k, on a 40-point grid
    let g = Grid::new(0.0, 0.25, 40).unwrap();
    let mut cross_ok = true;
    let mut worst_cross: f64 = 0.0;
    for k in 0..=4u32 {
        let r = frac_monomial_op(OpKind::Integral, MonomialBasis::Poly(k), 1.0).unwrap();
        let inverted = r.transform().unwrap().invert_monomials().unwrap();
        if inverted.len() != 1 || inverted[0].1 != k + 1 || (inverted[0].0 - 1.0).abs() > 1e-14 {
            cross_ok = false;
            continue;
        }
        let hk = GridFunction::new(
            g,
            (0..g.len()).map(|t| generalized_polynomial(k, t, 0, &g).unwrap()).collect(),
        )
        .unwrap();
        for t in 0..g.len() {
            let closed = generalized_polynomial(k + 1, t, 0, &g).unwrap();
            let recursive = h_integral(&hk, 0, t).unwrap();
            worst_cross = worst_cross.max((closed - recursive).abs());
        }
    }
    let cross_ok = cross_ok && worst_cross < 1e-10;

    // linearity over the span, including boundary terms
    let combo = [(1.25, MonomialBasis::Poly(1)), (-2.0, MonomialBasis::Poly(2))];
    let mut lin_ok = true;
    for kind in [OpKind::Integral, OpKind::Derivative] {
        let joint = fracvar::laplace::frac_span_op(kind, &combo, 0.7).unwrap();
        let a = frac_monomial_op(kind, MonomialBasis::Poly(1), 0.7).unwrap();
        let b = frac_monomial_op(kind, MonomialBasis::Poly(2), 0.7).unwrap();
        let sum = a
            .transform()
            .unwrap()
            .scale(1.25)
            .add(&b.transform().unwrap().scale(-2.0))
            .unwrap();
        if joint.transform() != Some(&sum) {
            lin_ok = false;
        }
    }

    // the singular monomial checks
    let zero_ok = frac_monomial_op(OpKind::Derivative, MonomialBasis::Poly(0), 0.5).unwrap()
        == FracResult::Zero
        && frac_monomial_op(OpKind::Derivative, MonomialBasis::Constant(3.0), 0.9).unwrap()
            == FracResult::Zero;

    // numeric transform of h_1 = t really is z^(-2)
    let numeric_ok = {
        let got = laplace_numeric(|t| t, 2.0, 0.25, 1e-13).unwrap();
        (got - 0.25).abs() < 1e-10
    };

    let pass = deriv_ok && comp_ok && cross_ok && lin_ok && zero_ok && numeric_ok;
    report(
        9,
        pass,
        &format!(
            "laplace: derivative rule residuals ({r1:.1e}, {r2:.1e}, {r3:.1e}), \
             composition {comp_ok}, integer cross-check worst {worst_cross:.2e}, \
             linearity {lin_ok}, zero cases {zero_ok}, numeric {numeric_ok}"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_10_special_function_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(1729);
    // gamma recurrence through the h-factorial: x^(y+1) = (x - y) x^(y)
    let xd = Uniform::new(0.1, 50.0);
    let yd = Uniform::new(0.0_f64, 5.0);
    let mut worst_rec: f64 = 0.0;
    for _ in 0..1000 {
        let x = xd.sample(&mut rng);
        let y = yd.sample(&mut rng).min(x - 0.05);
        let lhs = h_falling_factorial(x, y + 1.0, 1.0).unwrap();
        let rhs = (x - y) * h_falling_factorial(x, y, 1.0).unwrap();
        worst_rec = worst_rec.max((lhs - rhs).abs() / rhs.abs().max(1e-30));
    }
    // pole-zero convention: exact zeros whenever the denominator sits at a
    // pole and the numerator does not
    let mut pole_ok = true;
    for m in 0..1000i64 {
        let x = 0.5 + (m % 13) as f64; // x + 1 never integer <= 0
        let y = x + 1.0 + (m % 7) as f64; // x + 1 - y non-positive integer
        if h_falling_factorial(x, y, 1.0).unwrap() != 0.0 {
            pole_ok = false;
        }
    }
    // h = 1 reduction: identical code path, exact equality
    let mut reduction_ok = true;
    for _ in 0..1000 {
        let x = xd.sample(&mut rng);
        let y = yd.sample(&mut rng);
        let via_h = h_falling_factorial(x, y, 1.0).unwrap();
        let direct = {
            let n = log_gamma_signed(x + 1.0).unwrap();
            let d = log_gamma_signed(x + 1.0 - y).unwrap();
            f64::from(n.sign * d.sign) * (n.log_abs - d.log_abs).exp()
        };
        if via_h != direct {
            reduction_ok = false;
        }
    }
    // integer binomial agreement
    let mut worst_binom: f64 = 0.0;
    let nd = Uniform::new(0usize, 40);
    for _ in 0..1000 {
        let n = nd.sample(&mut rng);
        let k = if n == 0 { 0 } else { Uniform::new_inclusive(0usize, n).sample(&mut rng) };
        let exact = {
            let mut c = 1.0_f64;
            for j in 0..k {
                c = c * (n - j) as f64 / (j + 1) as f64;
            }
            c
        };
        let got = binomial_real(n as f64, k as f64).unwrap();
        worst_binom = worst_binom.max((got - exact).abs() / exact);
    }
    let pass = worst_rec < 1e-10 && pole_ok && reduction_ok && worst_binom < 1e-12;
    report(
        10,
        pass,
        &format!(
            "special functions: recurrence worst {worst_rec:.2e}, pole-zero {pole_ok}, \
             h=1 reduction exact {reduction_ok}, integer binomial worst {worst_binom:.2e}"
        ),
    );
    assert!(pass);
}

// Backend-agreement spot check kept alongside the criteria: symbolic and
// finite-difference Lagrangians produce the same residuals.
#[test]
fn backends_agree_on_el_residuals() {
    let grid = Grid::new(0.0, 0.25, 5).unwrap();
    let params: HashMap<String, f64> = [("theta".to_string(), 1.0)].into();
    let sym = ExprLagrangian::parse("v^3+theta*w^2", params).unwrap();
    let p1 = VariationalProblem::new(
        grid,
        sym,
        0.8,
        0.5,
        Boundary::Fixed(0.0),
        Boundary::Fixed(1.0),
    )
    .unwrap();
    let fd = FdLagrangian::new(|_t, _u, v: f64, w: f64| v * v * v + w * w);
    let p2 = VariationalProblem::new(
        grid,
        fd,
        0.8,
        0.5,
        Boundary::Fixed(0.0),
        Boundary::Fixed(1.0),
    )
    .unwrap();
    let y = GridFunction::new(grid, vec![0.0, 1.0306820, 1.8920322, 2.7429222, 1.0]).unwrap();
    for i in 0..3 {
        let a = p1.el_residual(&y, i).unwrap();
        let b = p2.el_residual(&y, i).unwrap();
        assert!((a - b).abs() <= 1e-6 * (1.0 + a.abs().max(b.abs())));
    }
}
