//! Cosine and sine sums over arithmetic progressions of angles.
//!
//! For `a_k = a_0 + k·d`, `k = 0..=n`:
//!
//! ```text
//! Σ cos(a_k) = [sin(a_n + d/2) − sin(a_0 − d/2)] / (2 sin(d/2))
//! Σ sin(a_k) = [cos(a_0 − d/2) − cos(a_n + d/2)] / (2 sin(d/2))
//! ```
//!
//! When `|sin(d/2)|` falls below [`DEGENERATE_STEP`] the closed form is 0/0 and
//! the sum is accumulated term by term instead.

/// Threshold on `|sin(d/2)|` below which the closed form is abandoned.
pub const DEGENERATE_STEP: f64 = 1e-12;

/// The angles `start + k·step` for `k = 0..=last`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArithProgression {
    pub start: f64,
    pub step: f64,
    /// Index of the last term; the progression has `last + 1` terms.
    pub last: u64,
}

impl ArithProgression {
    pub fn new(start: f64, step: f64, last: u64) -> Self {
        debug_assert!(start.is_finite() && step.is_finite());
        Self { start, step, last }
    }

    /// The `k`-th angle.
    pub fn term(&self, k: u64) -> f64 {
        self.start + k as f64 * self.step
    }

    fn end(&self) -> f64 {
        self.term(self.last)
    }

    fn half_step_sine(&self) -> f64 {
        (0.5 * self.step).sin()
    }

    fn is_degenerate(&self) -> bool {
        self.half_step_sine().abs() < DEGENERATE_STEP
    }
}

/// `Σ_{k=0}^{n} cos(a_0 + k·d)`.
pub fn cos_arith_sum(p: ArithProgression) -> f64 {
    if p.is_degenerate() {
        return (0..=p.last).map(|k| p.term(k).cos()).sum();
    }
    let half = 0.5 * p.step;
    ((p.end() + half).sin() - (p.start - half).sin()) / (2.0 * p.half_step_sine())
}

/// `Σ_{k=0}^{n} sin(a_0 + k·d)`.
pub fn sin_arith_sum(p: ArithProgression) -> f64 {
    if p.is_degenerate() {
        return (0..=p.last).map(|k| p.term(k).sin()).sum();
    }
    let half = 0.5 * p.step;
    ((p.start - half).cos() - (p.end() + half).cos()) / (2.0 * p.half_step_sine())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn direct_cos(p: ArithProgression) -> f64 {
        (0..=p.last)
            .map(|k| (p.start + k as f64 * p.step).cos())
            .sum()
    }

    fn direct_sin(p: ArithProgression) -> f64 {
        (0..=p.last)
            .map(|k| (p.start + k as f64 * p.step).sin())
            .sum()
    }

    #[test]
    fn cosines_over_full_periods_cancel() {
        assert!(cos_arith_sum(ArithProgression::new(0.0, FRAC_PI_2, 3)).abs() < 1e-15);
        assert!(cos_arith_sum(ArithProgression::new(0.0, 2.0 * PI / 5.0, 4)).abs() < 1e-15);
    }

    #[test]
    fn sines_at_multiples_of_pi_vanish() {
        assert!(sin_arith_sum(ArithProgression::new(0.0, PI, 5)).abs() < 1e-14);
    }

    #[test]
    fn full_turn_step_takes_degenerate_branch() {
        let p = ArithProgression::new(FRAC_PI_2, 2.0 * PI, 7);
        assert!(p.is_degenerate());
        assert!((sin_arith_sum(p) - 8.0).abs() < 1e-12);
        let zero_step = ArithProgression::new(0.4, 0.0, 9);
        assert!((cos_arith_sum(zero_step) - 10.0 * 0.4f64.cos()).abs() < 1e-13);
    }

    #[test]
    fn generic_progression_matches_direct_sum() {
        let p = ArithProgression::new(0.3, 0.7, 10);
        assert!((cos_arith_sum(p) - direct_cos(p)).abs() < 1e-12);
        assert!((sin_arith_sum(p) - direct_sin(p)).abs() < 1e-12);
    }

    #[test]
    fn single_term() {
        let p = ArithProgression::new(1.1, 0.5, 0);
        assert!((cos_arith_sum(p) - 1.1f64.cos()).abs() < 1e-15);
        assert!((sin_arith_sum(p) - 1.1f64.sin()).abs() < 1e-15);
    }

    fn nondegenerate_step() -> impl Strategy<Value = f64> {
        (-20.0f64..20.0).prop_filter("|sin(d/2)| >= 1e-3", |d| (0.5 * d).sin().abs() >= 1e-3)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn closed_form_matches_direct(a0 in -10.0f64..10.0, d in nondegenerate_step(), n in 0u64..=200) {
            let p = ArithProgression::new(a0, d, n);
            prop_assert!((cos_arith_sum(p) - direct_cos(p)).abs() < 1e-9);
            prop_assert!((sin_arith_sum(p) - direct_sin(p)).abs() < 1e-9);
        }
    }

    proptest! {
        #[test]
        fn half_turn_shift_negates(a0 in -5.0f64..5.0, d in 0.1f64..3.0, n in 0u64..50) {
            let p = ArithProgression::new(a0, d, n);
            let shifted = ArithProgression::new(a0 + PI, d, n);
            prop_assert!((cos_arith_sum(shifted) + cos_arith_sum(p)).abs() < 1e-12);
        }

        #[test]
        fn extending_by_one_adds_next_term(a0 in -5.0f64..5.0, d in 0.1f64..3.0, n in 0u64..50) {
            let p = ArithProgression::new(a0, d, n);
            let longer = ArithProgression::new(a0, d, n + 1);
            let diff = cos_arith_sum(longer) - cos_arith_sum(p);
            prop_assert!((diff - p.term(n + 1).cos()).abs() < 1e-12);
        }
    }
}
