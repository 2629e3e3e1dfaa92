mod common;

use bvpareto::density::{bvpa_pdf, bvpac_marginal_pdf, bvpac_pdf, loglik_ac3, loglik_ac7};
use bvpareto::{pareto_pdf, sample_bvpac, BivariateSample, Margin, Params3, Params7};
use common::{bvpac_oracle, integrate_quadrant, integrate_to_inf, TestRng, XI};

fn p7(v: &[f64; 7]) -> Params7 {
    Params7::from_slice(v).unwrap()
}

#[test]
fn pareto_pdf_integrates_to_one() {
    for &(mu, sigma, alpha) in &[(0.0, 1.0, 2.0), (-3.0, 0.2, 0.7), (10.855, 2.124, 1.743), (1.0, 5.0, 9.0)] {
        let mass = integrate_to_inf(&|x| pareto_pdf(x, mu, sigma, alpha).unwrap(), mu, 1e-10);
        assert!((mass - 1.0).abs() < 1e-6, "({mu}, {sigma}, {alpha}) -> {mass}");
    }
}

#[test]
fn bvpac_matches_product_form() {
    let mut rng = TestRng::new(1);
    for xi in &XI {
        let p = p7(xi);
        for _ in 0..200 {
            let z1 = xi[0] + 5.0 * rng.uniform();
            let z2 = xi[1] + 5.0 * rng.uniform();
            let v = bvpac_pdf(z1, z2, &p).unwrap();
            let o = bvpac_oracle(z1, z2, xi);
            assert!((v - o).abs() <= 1e-12 * o.max(1e-300), "{v} vs {o}");
        }
    }
}

#[test]
fn bvpac_normalizes_for_all_reference_parameter_sets() {
    for xi in &XI {
        let p = p7(xi);
        let f = |a: f64, b: f64| {
            let (t1, t2) = p.standardize(a, b);
            if t1 == t2 { 0.0 } else { bvpac_pdf(a, b, &p).unwrap() }
        };
        let (below, above) = integrate_quadrant(&f, xi[0], xi[1], xi[3] / xi[2], 1e-8);
        let total = below + above;
        assert!((total - 1.0).abs() < 1e-4, "{xi:?}: {total}");
        // wedge masses of the continuous part are a1/(a1+a2) and a2/(a1+a2)
        let w1 = xi[5] / (xi[5] + xi[6]);
        assert!((above - w1).abs() < 1e-4, "{xi:?}: P(I1) = {above}, expected {w1}");
    }
}

#[test]
fn singular_law_total_probability() {
    for xi in &XI {
        let p = p7(xi);
        let f = |a: f64, b: f64| {
            let (t1, t2) = p.standardize(a, b);
            if t1 == t2 { 0.0 } else { bvpa_pdf(a, b, &p).unwrap().0 }
        };
        let (below, above) = integrate_quadrant(&f, xi[0], xi[1], xi[3] / xi[2], 1e-8);
        // the singular part lives on x2 = mu2 + sigma2 (x1 - mu1)/sigma1; integrate in x1
        let line = integrate_to_inf(
            &|x1| {
                let x2 = xi[1] + xi[3] * (x1 - xi[0]) / xi[2];
                bvpa_pdf(x1, x2, &p).unwrap().0
            },
            xi[0],
            1e-10,
        );
        let singular_mass = xi[4] / (xi[4] + xi[5] + xi[6]);
        assert!((line - singular_mass).abs() < 1e-6, "{xi:?}: {line} vs {singular_mass}");
        assert!((below + above + line - 1.0).abs() < 1e-4, "{xi:?}");
    }
}

#[test]
fn marginal_integrates_to_one() {
    for xi in &XI {
        let p = p7(xi);
        for (margin, mu) in [(Margin::First, xi[0]), (Margin::Second, xi[1])] {
            let mass = integrate_to_inf(&|z| bvpac_marginal_pdf(z, margin, &p).unwrap(), mu, 1e-11);
            assert!((mass - 1.0).abs() < 1e-6, "{xi:?} {margin:?}: {mass}");
        }
    }
}

fn numerical_marginal(z: f64, margin: Margin, xi: &[f64; 7]) -> f64 {
    // split the inner integral at the kink on the singular line
    match margin {
        Margin::First => {
            let kink = xi[1] + xi[3] * (z - xi[0]) / xi[2];
            common::integrate(&|y| bvpac_oracle(z, y, xi), xi[1], kink, 1e-12)
                + integrate_to_inf(&|y| bvpac_oracle(z, y, xi), kink, 1e-12)
        }
        Margin::Second => {
            let kink = xi[0] + xi[2] * (z - xi[1]) / xi[3];
            common::integrate(&|x| bvpac_oracle(x, z, xi), xi[0], kink, 1e-12)
                + integrate_to_inf(&|x| bvpac_oracle(x, z, xi), kink, 1e-12)
        }
    }
}

#[test]
fn marginal_formula_matches_numerical_marginalization() {
    let xi1 = XI[0];
    let p = p7(&xi1);
    for z in [xi1[0] + 0.5 * xi1[2], xi1[0] + 2.0 * xi1[2]] {
        let formula = bvpac_marginal_pdf(z, Margin::First, &p).unwrap();
        assert!((formula - numerical_marginal(z, Margin::First, &xi1)).abs() < 1e-5);
    }
    let mut rng = TestRng::new(7);
    for xi in &XI {
        let p = p7(xi);
        for _ in 0..10 {
            for (margin, mu, sigma) in [(Margin::First, xi[0], xi[2]), (Margin::Second, xi[1], xi[3])] {
                let z = mu + 4.0 * sigma * rng.uniform();
                let formula = bvpac_marginal_pdf(z, margin, &p).unwrap();
                let numeric = numerical_marginal(z, margin, xi);
                assert!((formula - numeric).abs() < 1e-5, "{xi:?} {margin:?} z={z}: {formula} vs {numeric}");
            }
        }
    }
}

/// Log-likelihood expanded into group counts and sums for general margins.
fn expanded_loglik7(data: &BivariateSample, p: &[f64; 7]) -> f64 {
    let [mu1, mu2, s1, s2, a0, a1, a2] = *p;
    let (mut n1, mut n2) = (0.0, 0.0);
    let (mut l1_i1, mut l2_i1, mut l1_i2, mut l2_i2) = (0.0, 0.0, 0.0, 0.0);
    for &(x1, x2) in data.rows() {
        let (t1, t2) = ((x1 - mu1) / s1, (x2 - mu2) / s2);
        if t1 < t2 {
            n1 += 1.0;
            l1_i1 += (1.0 + t1).ln();
            l2_i1 += (1.0 + t2).ln();
        } else {
            n2 += 1.0;
            l1_i2 += (1.0 + t1).ln();
            l2_i2 += (1.0 + t2).ln();
        }
    }
    let n = n1 + n2;
    n * (a0 + a1 + a2).ln() - n * (a1 + a2).ln() + n1 * a1.ln() + n1 * (a0 + a2).ln()
        - n1 * s1.ln()
        - n1 * s2.ln()
        - (a0 + a2 + 1.0) * l2_i1
        - (a1 + 1.0) * l1_i1
        - n2 * s1.ln()
        - n2 * s2.ln()
        + n2 * a2.ln()
        + n2 * (a0 + a1).ln()
        - (a0 + a1 + 1.0) * l1_i2
        - (a2 + 1.0) * l2_i2
}

#[test]
fn loglik_dual_paths_agree() {
    let mut rng = TestRng::new(3);
    for xi in &XI {
        let rows: Vec<(f64, f64)> = (0..100)
            .map(|_| (xi[0] + 6.0 * rng.uniform(), xi[1] + 6.0 * rng.uniform()))
            .collect();
        let data = BivariateSample::new(rows).unwrap();
        let direct = loglik_ac7(&data, &p7(xi)).unwrap().value();
        let expanded = expanded_loglik7(&data, xi);
        let by_pdf: f64 = data
            .rows()
            .iter()
            .map(|&(a, b)| bvpac_pdf(a, b, &p7(xi)).unwrap().ln())
            .sum();
        assert!((direct - expanded).abs() < 1e-10 * direct.abs().max(1.0));
        assert!((direct - by_pdf).abs() < 1e-10 * direct.abs().max(1.0));
    }
}

#[test]
fn three_and_seven_parameter_logliks_agree_on_standard_margins() {
    let mut rng = TestRng::new(4);
    for alpha in [[2.0, 0.4, 0.5], [1.0, 1.0, 1.0], [0.2, 3.0, 0.7]] {
        let a = Params3::new(alpha[0], alpha[1], alpha[2]).unwrap();
        let rows: Vec<(f64, f64)> = (0..250).map(|_| (rng.pareto(1.3), rng.pareto(0.8))).collect();
        let data = BivariateSample::new(rows).unwrap();
        let l3 = loglik_ac3(&data, &a).unwrap().value();
        let l7 = loglik_ac7(&data, &Params7::standard(a)).unwrap().value();
        let by_pdf: f64 = data
            .rows()
            .iter()
            .map(|&(x, y)| bvpac_oracle(x, y, &[0.0, 0.0, 1.0, 1.0, alpha[0], alpha[1], alpha[2]]).ln())
            .sum();
        assert!((l3 - l7).abs() < 1e-10 * l3.abs().max(1.0));
        assert!((l3 - by_pdf).abs() < 1e-9 * l3.abs().max(1.0));
    }
}

#[test]
fn true_parameters_beat_grossly_wrong_ones() {
    let a = Params3::new(2.0, 0.4, 0.5).unwrap();
    let data = sample_bvpac(500, &Params7::standard(a), 31).unwrap();
    let wrong = Params3::new(20.0, 4.0, 5.0).unwrap();
    let at_truth = loglik_ac3(&data, &a).unwrap().value();
    let at_wrong = loglik_ac3(&data, &wrong).unwrap().value();
    assert!(at_truth > at_wrong, "{at_truth} <= {at_wrong}");
}
