//! Closed-form existence and stability criteria.

use serde::{Deserialize, Serialize};

use super::constants::CriterionConstants;
use crate::error::{Error, Result};

/// `(p (p - 1) / 2)^{p/2}`.
pub fn burkholder_constant(p: f64) -> Result<f64> {
    if !(p >= 2.0) || !p.is_finite() {
        return Err(Error::Domain(format!("Burkholder constant needs p >= 2, got {p}")));
    }
    Ok((p * (p - 1.0) / 2.0).powf(p / 2.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionItem {
    pub label: String,
    /// Already multiplied by `5^{p-1}`.
    pub value: f64,
}

/// One evaluated criterion; `theta` is the sum of the item values in order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub name: String,
    pub theta: f64,
    pub pass: bool,
    pub items: Vec<CriterionItem>,
    pub published: Option<f64>,
    /// `theta - published`.
    pub deviation: Option<f64>,
}

impl CriterionReport {
    fn from_items(name: &str, items: Vec<CriterionItem>) -> Self {
        let theta = items.iter().fold(0.0, |acc, it| acc + it.value);
        Self { name: name.into(), theta, pass: theta < 1.0, items, published: None, deviation: None }
    }

    pub fn with_published(mut self, value: Option<f64>) -> Self {
        self.published = value;
        self.deviation = value.map(|v| self.theta - v);
        self
    }
}

fn item(label: &str, value: f64) -> CriterionItem {
    CriterionItem { label: label.into(), value }
}

/// The two addends shared by both criteria: the neutral term and its
/// smoothing estimate.
fn neutral_items(c: &CriterionConstants, five: f64) -> [CriterionItem; 2] {
    let p = c.p;
    let b = &c.bounds;
    let a1 = c.a_hat[0];
    let e = p * c.alpha * b.mu_smoothing;
    let bracket = (c.t_eval.powf(e) / e).powf(p);
    [
        item("|A^-gamma|^p a1^p", five * b.inv_power_norm.powf(p) * a1.powf(p)),
        item(
            "alpha^p c_mu^p a1^p [t^(p alpha mu)/(p alpha mu)]^p",
            five * c.alpha.powf(p) * b.c_mu.powf(p) * a1.powf(p) * bracket,
        ),
    ]
}

/// Existence criterion: the sum of five addends, each scaled by `5^{p-1}`;
/// passes when below one.
pub fn existence_criterion(c: &CriterionConstants) -> CriterionReport {
    let p = c.p;
    let t = c.t_eval;
    let m = c.bounds.m;
    let a = c.a_hat;
    let five = 5f64.powf(p - 1.0);
    let [n1, n2] = neutral_items(c, five);
    let jump = c.k_p
        * m.powf(p)
        * ((t.powi(3) / 3.0).powf(p / 2.0) * a[3].powf(p)
            + (t.powf(2.0 * p + 1.0) / (2.0 * p + 1.0)).sqrt() * a[4].powf(p));
    let items = vec![
        n1,
        n2,
        item("k(p) M^p [(t^3/3)^(p/2) a4^p + (t^(2p+1)/(2p+1))^(1/2) a5^p]", five * jump),
        item("M^p t^(p-1) a2^p", five * m.powf(p) * t.powf(p - 1.0) * a[1].powf(p)),
        item("C_p M^p t^(p/2-1) a3^p", five * c.c_p * m.powf(p) * t.powf(p / 2.0 - 1.0) * a[2].powf(p)),
    ];
    CriterionReport::from_items("existence", items)
}

/// `(2 a2 (p-1)/(p-2))^{1-p/2}`, with the `p = 2` convention.
fn stability_factor(c: &CriterionConstants) -> Result<f64> {
    let p = c.p;
    if p == 2.0 {
        if c.p2_limit_convention {
            return Ok(1.0);
        }
        return Err(Error::SingularExponent(
            "(2 a2 (p-1)/(p-2))^(1-p/2) is undefined at p = 2; enable the p = 2 limit convention".into(),
        ));
    }
    Ok((2.0 * c.bounds.a2 * (p - 1.0) / (p - 2.0)).powf(1.0 - p / 2.0))
}

/// Stability criterion: five addends scaled by `5^{p-1}`; passes when
/// below one.
pub fn stability_criterion(c: &CriterionConstants) -> Result<CriterionReport> {
    let p = c.p;
    let a = c.a_hat;
    let b = &c.bounds;
    let five = 5f64.powf(p - 1.0);
    let x = stability_factor(c)?;
    let d2p = b.d2.powf(p);
    let [n1, n2] = neutral_items(c, five);
    let items = vec![
        n1,
        n2,
        item("D2^p a2^(p-1) a2_hat^p", five * d2p * b.a2.powf(p - 1.0) * a[1].powf(p)),
        item("C_p D2^p X a3^p", five * c.c_p * d2p * x * a[2].powf(p)),
        item("k(p) D2^p (a4^(p/2) + a5^p) X", five * c.k_p * d2p * (a[3].powf(p / 2.0) + a[4].powf(p)) * x),
    ];
    Ok(CriterionReport::from_items("stability", items))
}

/// Gronwall constants of the uniqueness argument:
/// `oplus_1 = 5^{p-1}{|A^-gamma|^p a1^p + alpha^p c_mu^p a1^p [t^(p alpha mu)/(p alpha mu)]^p
///   + k M^p[(t^3/3)^{p/2} a4^p + (t^{2p+1}/(2p+1))^{1/2} a5^p]}` and
/// `oplus_2 = 5^{p-1}{M^p t^{p-1} a2^p + C_p M^p t^{p/2-1} a3^p}`.
pub fn gronwall_constants(c: &CriterionConstants) -> (f64, f64) {
    let r = existence_criterion(c);
    let v: Vec<f64> = r.items.iter().map(|i| i.value).collect();
    (v[0] + v[1] + v[2], v[3] + v[4])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::FamilyBounds;

    pub(crate) fn constants(a_hat: [f64; 5]) -> CriterionConstants {
        CriterionConstants {
            p: 2.0,
            alpha: 5.0 / 3.0,
            t_eval: 0.5,
            a_hat,
            bounds: FamilyBounds {
                m_c: 1.0,
                m: 0.002,
                c_mu: 1.0,
                mu_smoothing: 0.5,
                gamma: 0.5,
                inv_power_norm: std::f64::consts::PI.powf(-1.5),
                d1: 1.0,
                a1: 1.0,
                d2: 0.002,
                a2: 1.0,
            },
            c_p: 1.0,
            k_p: 1.0,
            p2_limit_convention: true,
        }
    }

    #[test]
    fn burkholder_values() {
        assert_eq!(burkholder_constant(2.0).unwrap(), 1.0);
        assert!((burkholder_constant(4.0).unwrap() - 36.0).abs() < 1e-12);
        assert!((burkholder_constant(3.0).unwrap() - 27f64.sqrt()).abs() < 1e-12);
        assert!(burkholder_constant(1.5).is_err());
    }

    #[test]
    fn zero_constants_give_zero() {
        let c = constants([0.0; 5]);
        let e = existence_criterion(&c);
        assert_eq!(e.theta, 0.0);
        assert!(e.pass);
        assert_eq!(stability_criterion(&c).unwrap().theta, 0.0);
    }

    #[test]
    fn items_sum_to_theta() {
        let c = constants([0.3, 0.2, 0.1, 0.4, 0.05]);
        for r in [existence_criterion(&c), stability_criterion(&c).unwrap()] {
            let s = r.items.iter().fold(0.0, |a, i| a + i.value);
            assert_eq!(s, r.theta);
            assert_eq!(r.items.len(), 5);
        }
    }

    #[test]
    fn p2_without_convention_is_singular() {
        let mut c = constants([0.1; 5]);
        c.p2_limit_convention = false;
        assert!(matches!(stability_criterion(&c), Err(Error::SingularExponent(_))));
        c.p = 3.0;
        assert!(stability_criterion(&c).is_ok());
    }

    #[test]
    fn published_deviation() {
        let r = existence_criterion(&constants([0.1; 5])).with_published(Some(0.5));
        assert_eq!(r.deviation, Some(r.theta - 0.5));
    }
}
