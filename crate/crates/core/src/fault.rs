//! Deliberate fault injection for exercising the verification harness.
//!
//! When enabled, every β-coefficient above the lowest degree has its sign
//! flipped. Nothing outside tests and the hidden CLI flag turns this on.

use std::sync::atomic::{AtomicBool, Ordering};

use crate::numbers::Integer;

static FLIP_BETA_SIGN: AtomicBool = AtomicBool::new(false);

pub fn set_beta_sign_flip(enabled: bool) {
    FLIP_BETA_SIGN.store(enabled, Ordering::SeqCst);
}

pub fn beta_sign_flip_enabled() -> bool {
    FLIP_BETA_SIGN.load(Ordering::SeqCst)
}

/// Applies the injected fault, if any, to `β_k` where `offset = k - k0`.
pub(crate) fn adjust_beta(offset: i64, value: Integer) -> Integer {
    if offset > 0 && beta_sign_flip_enabled() {
        -value
    } else {
        value
    }
}
