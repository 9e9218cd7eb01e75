//! Criterion evaluation, the decay-root machinery and Monte Carlo moment
//! estimation.

mod constants;
mod criteria;
mod lemma;
mod moments;
mod verify;

pub use constants::{resolve_constants, ConstantSource, CriterionConstants, ResolvedConstants};
pub use criteria::{
    burkholder_constant, existence_criterion, gronwall_constants, stability_criterion, CriterionItem,
    CriterionReport,
};
pub use lemma::{decay_root, n_epsilon, InequalityParams};
pub use moments::{estimate_moment, fit_decay, neumaier, DecayFit, MomentCurve};
pub use verify::{verify_stability, Envelope, MonteCarloConfig, StabilityReport};
