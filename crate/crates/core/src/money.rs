//! Cent-precision money handling.
//!
//! Per-record damage costs are exact f64 products; the moment a cost crosses a
//! reporting boundary (CSV cell, aggregate total) it is quantized to integer
//! cents with round-half-away-from-zero. All totals are then integer sums, so
//! per-group totals recombine to the global total exactly, independent of
//! grouping, worker count, or summation order.

/// Rounds a USD amount to integer cents, half away from zero.
pub fn to_cents(usd: f64) -> i128 {
    (usd * 100.0).round() as i128
}

/// Formats integer cents as a fixed two-decimal USD string, e.g. `16666.50`.
pub fn fmt_cents(cents: i128) -> String {
    let sign = if cents < 0 { "-" } else { "" };
    let abs = cents.unsigned_abs();
    format!("{}{}.{:02}", sign, abs / 100, abs % 100)
}

/// Formats a USD amount with exactly two decimals via cent quantization.
pub fn fmt_usd(usd: f64) -> String {
    fmt_cents(to_cents(usd))
}

/// Mean of a nonnegative integer sum over `n` items, rounded half up.
pub fn mean_round_half_up(sum: u128, n: u128) -> u128 {
    assert!(n > 0, "mean over empty set");
    (2 * sum + n) / (2 * n)
}
