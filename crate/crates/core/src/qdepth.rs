//! β-coefficients, their inversion, and the Hilbert depth of a Hilbert function.
//!
//! For a candidate depth `d` and `k0 <= k <= d`,
//!
//! ```text
//! β_k^d(h) = Σ_{j=k0}^{k} (-1)^(k-j) C(d-j, k-j) h(j)
//! h(k)     = Σ_{j=k0}^{k} C(d-j, k-j) β_j^d(h)
//! ```
//!
//! and `qdepth(h)` is the largest `d` for which every `β_k^d` is nonnegative.
//! The search runs over `[k0, k0 + floor(h(k0+1) / h(k0))]`, outside of which
//! no depth is feasible. Every candidate is judged on its own; the scan goes
//! from the top of the window down and stops at the first feasible `d`.

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fault;
use crate::numbers::{binomial, Integer};
use crate::series::{HilbertFunction, SeriesError};

/// Largest search window accepted by [`qdepth`].
pub const MAX_WINDOW: i64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QDepthError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("degree {k} outside [{low}, {high}]")]
    OutOfRange { k: i64, low: i64, high: i64 },
    #[error("search window of {0} candidate depths exceeds the supported size")]
    WindowTooLarge(Integer),
    #[error("no feasible depth in [{low}, {high}]")]
    NoFeasibleDepth { low: i64, high: i64 },
}

/// All `β_k^d` for `start_k <= k <= d`; entry `i` holds `β_{start_k + i}^d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BetaTable {
    pub d: i64,
    pub start_k: i64,
    #[serde(with = "crate::decimal::vec")]
    pub values: Vec<Integer>,
}

impl BetaTable {
    pub fn get(&self, k: i64) -> Option<&Integer> {
        usize::try_from(k - self.start_k)
            .ok()
            .and_then(|i| self.values.get(i))
    }

    /// Lowest `k` with a negative entry, if any.
    pub fn first_negative(&self) -> Option<(i64, &Integer)> {
        self.values
            .iter()
            .enumerate()
            .find(|(_, v)| v.is_negative())
            .map(|(i, v)| (self.start_k + i as i64, v))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }
}

/// A negative `β_k^d`, proving that depth `d` is not attained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    pub d: i64,
    pub k: i64,
    #[serde(with = "crate::decimal")]
    pub beta: Integer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct QDepthResult {
    pub qdepth: i64,
    /// β table at `d = qdepth`; all entries nonnegative.
    pub certificate: BetaTable,
    pub lower_bound: i64,
    pub upper_bound: i64,
    /// Present exactly when `qdepth < upper_bound`; refutes `qdepth + 1`.
    pub refutation: Option<Refutation>,
}

/// β row for depth `d` from the values `h(start_k), ..., h(d)`.
///
/// Row `m = d - j` of Pascal's triangle is generated on the fly for each `j`.
pub(crate) fn beta_row(values: &[Integer], start_k: i64, d: i64) -> Vec<Integer> {
    let len = (d - start_k + 1).max(0) as usize;
    debug_assert!(values.len() >= len);
    let mut row = vec![Integer::zero(); len];
    for (jj, h) in values.iter().take(len).enumerate() {
        if h.is_zero() {
            continue;
        }
        let m = (len - 1 - jj) as i64;
        let mut c = Integer::one();
        for i in 0..=m {
            let term = &c * h;
            if i % 2 == 0 {
                row[jj + i as usize] += term;
            } else {
                row[jj + i as usize] -= term;
            }
            c = c * (m - i) / (i + 1);
        }
    }
    row.into_iter()
        .enumerate()
        .map(|(i, v)| fault::adjust_beta(i as i64, v))
        .collect()
}

/// `β_k^d(h)` by direct summation.
pub fn beta(h: &HilbertFunction, d: i64, k: i64) -> Result<Integer, QDepthError> {
    let k0 = h.k0();
    if k < k0 || k > d {
        return Err(QDepthError::OutOfRange {
            k,
            low: k0,
            high: d,
        });
    }
    let mut acc = Integer::zero();
    for j in k0..=k {
        let term = binomial(d - j, k - j) * h.evaluate(j)?;
        if (k - j) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(fault::adjust_beta(k - k0, acc))
}

pub fn beta_table(h: &HilbertFunction, d: i64) -> Result<BetaTable, QDepthError> {
    let k0 = h.k0();
    if d < k0 {
        return Err(QDepthError::OutOfRange {
            k: d,
            low: k0,
            high: i64::MAX,
        });
    }
    let values = h.values(k0, d)?;
    Ok(BetaTable {
        d,
        start_k: k0,
        values: beta_row(&values, k0, d),
    })
}

/// Recovers `h(k)` from a β table.
pub fn reconstruct(table: &BetaTable, k: i64) -> Result<Integer, QDepthError> {
    if k < table.start_k || k > table.d {
        return Err(QDepthError::OutOfRange {
            k,
            low: table.start_k,
            high: table.d,
        });
    }
    Ok((table.start_k..=k)
        .map(|j| binomial(table.d - j, k - j) * table.get(j).expect("index inside the table"))
        .sum())
}

/// `(k0, k0 + floor(h(k0+1) / h(k0)))`.
pub fn bounds(h: &HilbertFunction) -> Result<(i64, i64), QDepthError> {
    let k0 = h.k0();
    let h0 = h.evaluate(k0)?;
    let h1 = h.evaluate(k0 + 1)?;
    let width = h1.div_floor(&h0);
    match width.to_i64().filter(|w| *w <= MAX_WINDOW) {
        Some(w) => Ok((k0, k0 + w)),
        None => Err(QDepthError::WindowTooLarge(width)),
    }
}

pub fn qdepth(h: &HilbertFunction) -> Result<QDepthResult, QDepthError> {
    let (low, high) = bounds(h)?;
    let values = h.values(low, high)?;
    let mut above: Option<BetaTable> = None;
    for d in (low..=high).rev() {
        let table = BetaTable {
            d,
            start_k: low,
            values: beta_row(&values, low, d),
        };
        if table.is_nonnegative() {
            let refutation = above.map(|t| {
                let (k, beta) = t
                    .first_negative()
                    .expect("scanned tables above were infeasible");
                Refutation {
                    d: t.d,
                    k,
                    beta: beta.clone(),
                }
            });
            return Ok(QDepthResult {
                qdepth: d,
                certificate: table,
                lower_bound: low,
                upper_bound: high,
                refutation,
            });
        }
        above = Some(table);
    }
    Err(QDepthError::NoFeasibleDepth { low, high })
}

/// Every feasible depth inside the search window, in increasing order.
pub fn feasible_depths(h: &HilbertFunction) -> Result<Vec<i64>, QDepthError> {
    let (low, high) = bounds(h)?;
    let values = h.values(low, high)?;
    Ok((low..=high)
        .filter(|&d| beta_row(&values, low, d).iter().all(|v| !v.is_negative()))
        .collect())
}
