//! Exact terminating hypergeometric sums `2F1(-k, n, -n; -1)`, the companion
//! integers `E(n, k)`, and the table of derivative coefficients
//! `c_k^(j) = g_k^(j)(0)` for `g_k(x) = (1 - x)^(k-1) / (1 - x^2)^n`.
//!
//! The sign checks here are strict, so everything is exact rational or
//! integer arithmetic.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numbers::{binomial, factorial, integer_rational, Integer, Rational};
use crate::qdepth;
use crate::report::{expect_eq, VerificationReport, Violation};
use crate::series::HilbertFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypError {
    #[error("({n}, {k}) outside the admissible range {range}")]
    OutOfRange { n: i64, k: i64, range: &'static str },
    #[error("invalid arity: {0}")]
    InvalidArity(String),
}

/// `2F1(-k, n, -n; -1)` summed over its `k + 1` nonzero terms.
///
/// The `j`-th term is `(-k)_j (n)_j / ((-n)_j j!) (-1)^j`. All terms are put
/// over the common denominator `(-n)_k k!`, so the sum is one integer and a
/// single reduction at the end.
pub fn gauss2f1(k: i64, n: i64) -> Result<Rational, HypError> {
    if n < 1 || k < 0 || k > n {
        return Err(HypError::OutOfRange {
            n,
            k,
            range: "0 <= k <= n, n >= 1",
        });
    }
    // tails[j] = (-n + j)(-n + j + 1)...(-n + k - 1) * (j + 1)(j + 2)...k
    let mut tails = vec![Integer::one(); k as usize + 1];
    for j in (0..k).rev() {
        assert!(-n + j != 0, "(-n)_j vanishes at j = {} <= k <= n", j + 1);
        tails[j as usize] = &tails[j as usize + 1] * Integer::from(-n + j) * Integer::from(j + 1);
    }
    let mut head = Integer::one(); // (-k)_j (n)_j
    let mut total = Integer::zero();
    for j in 0..=k {
        let term = &head * &tails[j as usize];
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        head *= Integer::from(-k + j) * Integer::from(n + j);
    }
    let denominator = tails[0].clone();
    Ok(Rational::new(total, denominator))
}

/// `E(n, k) = Σ_j (-1)^(k-j) C(k, j) (n)_j (n-k+1)_(k-j)` for `2 <= k <= n`.
pub fn big_e(n: i64, k: i64) -> Result<Integer, HypError> {
    if k < 2 || k > n {
        return Err(HypError::OutOfRange {
            n,
            k,
            range: "2 <= k <= n",
        });
    }
    // rising[i] = (n - k + 1)_i
    let mut rising = vec![Integer::one(); k as usize + 1];
    for i in 1..=k as usize {
        rising[i] = &rising[i - 1] * Integer::from(n - k + i as i64);
    }
    let mut choose = Integer::one(); // C(k, j)
    let mut upper = Integer::one(); // (n)_j
    let mut total = Integer::zero();
    for j in 0..=k {
        let term = &choose * &upper * &rising[(k - j) as usize];
        if (k - j) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        choose = choose * Integer::from(k - j) / Integer::from(j + 1);
        upper *= Integer::from(n + j);
    }
    Ok(total)
}

/// `c_k^(j)` for `1 <= k <= kmax`, `0 <= j <= jmax`, at a fixed `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    pub n: u32,
    rows: Vec<Vec<Integer>>,
}

impl CoeffTable {
    pub fn kmax(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn jmax(&self) -> u32 {
        self.rows[0].len() as u32 - 1
    }

    pub fn get(&self, k: u32, j: u32) -> Option<&Integer> {
        self.rows.get(k.checked_sub(1)? as usize)?.get(j as usize)
    }

    pub fn row(&self, k: u32) -> Option<&[Integer]> {
        self.rows.get(k.checked_sub(1)? as usize).map(Vec::as_slice)
    }
}

/// Closed form of `c_1^(j)`, from `(1 - x^2)^-n = Σ_l C(n+l-1, l) x^(2l)`.
pub fn row_one_entry(n: u32, j: u32) -> Integer {
    if j % 2 == 1 {
        return Integer::zero();
    }
    let l = (j / 2) as i64;
    binomial(n as i64 + l - 1, l) * factorial(j as u64)
}

pub fn coeff_table(n: u32, kmax: u32, jmax: u32) -> Result<CoeffTable, HypError> {
    if n < 1 {
        return Err(HypError::InvalidArity("n must be at least 1".into()));
    }
    if kmax < 1 {
        return Err(HypError::InvalidArity("kmax must be at least 1".into()));
    }
    let mut rows = Vec::with_capacity(kmax as usize);
    rows.push((0..=jmax).map(|j| row_one_entry(n, j)).collect::<Vec<_>>());
    for _ in 2..=kmax {
        let prev = rows.last().expect("row 1 present");
        let mut row = Vec::with_capacity(jmax as usize + 1);
        row.push(Integer::one());
        for j in 1..=jmax as usize {
            row.push(&prev[j] - Integer::from(j) * &prev[j - 1]);
        }
        rows.push(row);
    }
    Ok(CoeffTable { n, rows })
}

/// Series oracle for row 1: `j!` times the `x^j` coefficient of
/// `(1 - x^2)^-n`, built by multiplying `n` truncated geometric series.
pub fn row_one_series(n: u32, jmax: u32) -> Vec<Integer> {
    let len = jmax as usize + 1;
    let geometric: Vec<Integer> = (0..len)
        .map(|i| {
            if i % 2 == 0 {
                Integer::one()
            } else {
                Integer::zero()
            }
        })
        .collect();
    let mut acc = vec![Integer::zero(); len];
    acc[0] = Integer::one();
    for _ in 0..n {
        let mut next = vec![Integer::zero(); len];
        for (i, a) in acc.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (g, b) in geometric.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    next[i + g] += a * b;
                }
            }
        }
        acc = next;
    }
    acc.into_iter()
        .enumerate()
        .map(|(j, c)| c * factorial(j as u64))
        .collect()
}

fn sign_name(v: &Rational) -> &'static str {
    if v.is_positive() {
        "positive"
    } else if v.is_negative() {
        "negative"
    } else {
        "zero"
    }
}

/// Strict sign checks over `2 <= k <= n <= nmax`: `(-1)^k 2F1 > 0`,
/// `E(n, k) > 0`, and `(-1)^j c_k^(j) > 0` for `2 <= k <= nmax`,
/// `0 <= j <= k`. Also pins `2F1(0, n, -n; -1) = 1` and
/// `2F1(-1, n, -n; -1) = 0` for every `1 <= n <= nmax`.
pub fn check_sign_lemma(nmax: i64) -> VerificationReport {
    let ns: Vec<i64> = (1..=nmax.max(0)).collect();
    let mut report = VerificationReport::run("lemma", &ns, |&n| {
        let mut out = Vec::new();
        out.extend(expect_eq(
            || format!("2F1(0,{n},-{n};-1)"),
            Rational::one(),
            gauss2f1(0, n).expect("k = 0 <= n"),
        ));
        out.extend(expect_eq(
            || format!("2F1(-1,{n},-{n};-1)"),
            Rational::zero(),
            gauss2f1(1, n).expect("k = 1 <= n"),
        ));
        for k in 2..=n {
            let signed = gauss2f1(k, n).expect("k <= n")
                * if k % 2 == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
            if !signed.is_positive() {
                out.push(Violation {
                    case: format!("(-1)^{k} 2F1(-{k},{n},-{n};-1)"),
                    expected: "positive".into(),
                    actual: format!("{signed} ({})", sign_name(&signed)),
                });
            }
            let e = big_e(n, k).expect("2 <= k <= n");
            if !e.is_positive() {
                out.push(Violation {
                    case: format!("E({n},{k})"),
                    expected: "positive".into(),
                    actual: e.to_string(),
                });
            }
        }
        if nmax >= 2 {
            let kmax = nmax as u32;
            let table = coeff_table(n as u32, kmax, kmax).expect("n, kmax >= 1");
            for k in 2..=kmax {
                for j in 0..=k {
                    let c = table.get(k, j).expect("inside table");
                    let signed = if j % 2 == 0 { c.clone() } else { -c };
                    if !signed.is_positive() {
                        out.push(Violation {
                            case: format!("c-table n={n} k={k} j={j}"),
                            expected: "(-1)^j c_k^(j) > 0".into(),
                            actual: c.to_string(),
                        });
                    }
                }
            }
        }
        out
    });
    let pairs = (nmax.max(1) - 1) * nmax.max(1) / 2;
    report
        .notes
        .push(format!("{pairs} (n, k) pairs with 2 <= k <= n <= {nmax}"));
    report
}

/// `β_k^n(h_S) = (-1)^k C(n, k) 2F1(-k, n, -n; -1)` for `0 <= k <= n <= nmax`.
pub fn check_beta_identity(nmax: i64) -> VerificationReport {
    let cases: Vec<(i64, i64)> = (1..=nmax)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .collect();
    VerificationReport::run("beta-identity", &cases, |&(n, k)| {
        let s = HilbertFunction::polynomial_ring(n as u32).expect("n >= 1");
        let lhs = integer_rational(qdepth::beta(&s, n, k).expect("0 <= k <= n"));
        let sign = if k % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        let rhs = sign * integer_rational(binomial(n, k)) * gauss2f1(k, n).expect("k <= n");
        expect_eq(|| format!("beta(poly({n}), {n}, {k})"), rhs, lhs)
    })
}

/// Row 1 of the coefficient table against the series oracle, for
/// `1 <= n <= nmax` and `j <= jmax`.
pub fn check_row_one(nmax: i64, jmax: u32) -> VerificationReport {
    let ns: Vec<u32> = (1..=nmax.max(0) as u32).collect();
    let mut report = VerificationReport::run("row-one", &ns, |&n| {
        let table = coeff_table(n, 1, jmax).expect("n >= 1");
        let oracle = row_one_series(n, jmax);
        (0..=jmax)
            .flat_map(|j| {
                expect_eq(
                    || format!("c_1^({j}) at n={n}"),
                    oracle[j as usize].clone(),
                    table.get(1, j).expect("inside table").clone(),
                )
            })
            .collect()
    });
    // The variant binomial(n+l-1, l-1) (2l)! is off by one in l; record
    // where it departs from the series so the discrepancy stays visible.
    let mut mismatched = 0;
    for &n in &ns {
        let oracle = row_one_series(n, jmax);
        for l in 0..=(jmax / 2) as i64 {
            let variant = binomial(n as i64 + l - 1, l - 1) * factorial(2 * l as u64);
            if variant != oracle[2 * l as usize] {
                mismatched += 1;
            }
        }
    }
    report.notes.push(format!(
        "closed form C(n+l-1, l)(2l)! matches the series; the variant C(n+l-1, l-1)(2l)! disagrees on {mismatched} even entries, including l = 0 where it gives 0 instead of 1"
    ));
    report
}

/// `E(n, k) = (-1)^k c_k^(k)` for `2 <= k <= n <= nmax`, plus the row-1 oracle.
pub fn check_e_link(nmax: i64) -> VerificationReport {
    let ns: Vec<i64> = (2..=nmax).collect();
    let mut report = VerificationReport::run("e-link", &ns, |&n| {
        let table = coeff_table(n as u32, n as u32, n as u32).expect("n >= 2");
        (2..=n)
            .flat_map(|k| {
                let c = table.get(k as u32, k as u32).expect("inside table");
                let linked = if k % 2 == 0 { c.clone() } else { -c };
                expect_eq(
                    || format!("E({n},{k})"),
                    big_e(n, k).expect("2 <= k <= n"),
                    linked,
                )
            })
            .collect()
    });
    report.absorb(check_row_one(nmax, 2 * nmax.max(1) as u32));
    report
}
