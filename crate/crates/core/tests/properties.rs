use proptest::prelude::*;

use fracsde::grid::TimeGrid;
use fracsde::noise::{sample_noise, sample_wiener, JumpSpec, QWienerSpec};
use fracsde::specfun::{gamma_fn, mittag_leffler, MLParams};
use fracsde::spectral::FamilyBounds;
use fracsde::stability::{
    decay_root, existence_criterion, fit_decay, stability_criterion, CriterionConstants, InequalityParams,
};

fn constants(p: f64, a_hat: [f64; 5], m: f64, d2: f64, a2: f64, t: f64) -> CriterionConstants {
    CriterionConstants {
        p,
        alpha: 1.5,
        t_eval: t,
        a_hat,
        bounds: FamilyBounds {
            m_c: 1.0,
            m,
            c_mu: 0.8,
            mu_smoothing: 0.5,
            gamma: 0.5,
            inv_power_norm: 0.3,
            d1: 1.0,
            a1: 0.5,
            d2,
            a2,
        },
        c_p: 1.0,
        k_p: 1.0,
        p2_limit_convention: true,
    }
}

fn both(c: &CriterionConstants) -> (f64, f64) {
    (existence_criterion(c).theta, stability_criterion(c).unwrap().theta)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn criteria_nondecreasing_in_constants(
        p in prop_oneof![Just(2.0), 2.5f64..4.0],
        a_hat in prop::array::uniform5(0.0f64..2.0),
        m in 0.01f64..3.0,
        d2 in 0.01f64..3.0,
        a2 in 0.1f64..3.0,
        t in 0.1f64..2.0,
        which in 0usize..7,
        bump in 1.001f64..2.0,
    ) {
        let base = constants(p, a_hat, m, d2, a2, t);
        let mut up = base.clone();
        match which {
            0..=4 => up.a_hat[which] = a_hat[which] * bump + 1e-3,
            5 => up.bounds.m *= bump,
            _ => up.bounds.d2 *= bump,
        }
        let (e0, s0) = both(&base);
        let (e1, s1) = both(&up);
        prop_assert!(e1 >= e0, "existence {e0} -> {e1}");
        prop_assert!(s1 >= s0, "stability {s0} -> {s1}");
    }

    #[test]
    fn items_sum_exactly(a_hat in prop::array::uniform5(0.0f64..2.0), m in 0.01f64..3.0, t in 0.1f64..2.0) {
        let c = constants(2.0, a_hat, m, 0.5, 1.0, t);
        for r in [existence_criterion(&c), stability_criterion(&c).unwrap()] {
            let sum = r.items.iter().fold(0.0, |acc, i| acc + i.value);
            prop_assert_eq!(sum, r.theta);
        }
    }

    #[test]
    fn exponential_fit_is_exact(n in 0.1f64..10.0, mu in 0.0f64..5.0, lo in 0usize..20, len in 3usize..30) {
        let ts: Vec<f64> = (0..60).map(|i| 0.05 * i as f64).collect();
        let vs: Vec<f64> = ts.iter().map(|t| n * (-mu * t).exp()).collect();
        let window = (ts[lo], ts[(lo + len).min(59)]);
        let f = fit_decay(&ts, &vs, Some(window)).unwrap();
        prop_assert!((f.rate - mu).abs() <= 1e-10, "rate {} vs {mu}", f.rate);
        prop_assert!((f.n_hat - n).abs() <= 1e-10 * n.max(1.0), "n {} vs {n}", f.n_hat);
    }

    #[test]
    fn mittag_leffler_recurrence(a in 1.0f64..=2.0, b in 0.2f64..4.0, z in -30.0f64..3.0) {
        let e = |beta: f64| mittag_leffler(MLParams::new(a, beta).unwrap(), z).unwrap();
        let lhs = e(b);
        let shifted = z * e(a + b);
        let rhs = 1.0 / gamma_fn(b).unwrap() + shifted;
        prop_assert!((lhs - rhs).abs() <= 1e-8 * lhs.abs().max(shifted.abs()).max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn decay_root_is_bracketed(
        eta1 in 0.05f64..5.0,
        eta2 in 0.05f64..5.0,
        w3 in 0.0f64..1.0,
        w4 in 0.0f64..1.0,
        w5 in 0.0f64..1.0,
        total in 0.01f64..0.99,
        theta in 0.0f64..1.0,
    ) {
        // Feasible by construction: the shares of xi_3, xi_4/eta_1, xi_5/eta_2 sum to `total`.
        prop_assume!(w4 + w5 > 1e-6);
        let s = total / (w3 + w4 + w5);
        let q = InequalityParams { xi: [0.1, 0.1, w3 * s, w4 * s * eta1, w5 * s * eta2, 0.0, 0.0], eta1, eta2, theta };
        let mu = decay_root(&q).unwrap();
        let top = match (q.xi[3] > 0.0, q.xi[4] > 0.0) {
            (true, true) => eta1.min(eta2),
            (true, false) => eta1,
            _ => eta2,
        };
        prop_assert!(mu > 0.0 && mu < top);
        prop_assert!((q.root_lhs(mu) - 1.0).abs() <= 1e-9);
        // The left side increases through the root.
        let lo = 0.5 * mu;
        let hi = mu + 0.5 * (top - mu);
        prop_assert!(q.root_lhs(lo) < q.root_lhs(mu) && q.root_lhs(mu) < q.root_lhs(hi));
    }
}

#[test]
fn wiener_increment_variance_band() {
    let spec = QWienerSpec::new(vec![1.0]).unwrap();
    let grid = TimeGrid::covering(1.0, 0.01).unwrap();
    let n = 10_000;
    let v: f64 = (0..n).map(|i| sample_wiener(&spec, grid, 7, i).increment(0, 0).powi(2)).sum::<f64>() / n as f64;
    assert!((0.0097..=0.0103).contains(&v), "{v}");
}

#[test]
fn paths_do_not_depend_on_generation_order() {
    let w = QWienerSpec::new(vec![1.0, 0.5]).unwrap();
    let j = JumpSpec::uniform(0.0, 1.0, 3.0).unwrap();
    let grid = TimeGrid::covering(1.0, 0.1).unwrap();
    let forward: Vec<_> = (0..8).map(|i| sample_noise(&w, &j, grid, 1, i).unwrap()).collect();
    let backward: Vec<_> = (0..8).rev().map(|i| sample_noise(&w, &j, grid, 1, i).unwrap()).collect();
    for (a, b) in forward.iter().zip(backward.iter().rev()) {
        assert_eq!(a, b);
    }
    assert_ne!(forward[0].wiener_increments, forward[1].wiener_increments);
    let other_seed = sample_noise(&w, &j, grid, 2, 0).unwrap();
    assert_ne!(forward[0].wiener_increments, other_seed.wiener_increments);
}
