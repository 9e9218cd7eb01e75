#[path = "support/ml_reference.rs"]
mod ml_reference;

use fracsde::specfun::{mittag_leffler, MLParams};
use ml_reference::ML_REFERENCE;

#[test]
fn matches_high_precision_series() {
    let mut worst = (0.0f64, (0.0, 0.0, 0.0));
    for &(a, b, z, expected) in ML_REFERENCE {
        let got = mittag_leffler(MLParams::new(a, b).unwrap(), z).unwrap();
        let err = (got - expected).abs();
        if err > worst.0 {
            worst = (err, (a, b, z));
        }
        assert!(err <= 1e-8, "E_({a},{b})({z}) = {got}, expected {expected}");
    }
    eprintln!("worst abs error {:.3e} at {:?}", worst.0, worst.1);
}
