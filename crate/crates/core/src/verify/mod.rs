//! Verification batteries. Each one runs a family of exact checks and
//! returns a [`VerificationReport`] whose violations name a replayable case:
//! DSL text for Hilbert functions, `n=.. J=.. I=..` for squarefree quotients.
//!
//! Randomized batteries draw all their cases up front from one seeded
//! generator and then check them in parallel, so reports depend only on
//! the seed and the parameters.

pub mod random;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::hyp;
use crate::numbers::Integer;
use crate::qdepth::{self, QDepthResult};
use crate::report::{VerificationReport, Violation};
use crate::series::{FunctionSpec, HilbertFunction};
use crate::squarefree::{self, SqfError, DEFAULT_MAX_VARS, HARD_MAX_VARS};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown battery {0:?}; known batteries: {}", Battery::ALL.map(|b| b.name()).join(", "))]
    UnknownBattery(String),
    #[error("{flag} must be at least {min}, got {value}")]
    TooSmall {
        flag: &'static str,
        min: i64,
        value: i64,
    },
    #[error("squarefree needs n <= {cap} variables (raise --max-vars, at most {HARD_MAX_VARS}), got {n}")]
    TooManyVariables { n: i64, cap: u32 },
    #[error("--max-vars {0} is above the hard ceiling of {HARD_MAX_VARS}")]
    CapTooHigh(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Battery {
    PolyRing,
    Ci,
    CiRecursion,
    CiTruncation,
    Free,
    Extension,
    Laws,
    Lemma,
    BetaIdentity,
    ELink,
    Squarefree,
    CiExample,
}

impl Battery {
    pub const ALL: [Battery; 12] = [
        Battery::PolyRing,
        Battery::Ci,
        Battery::CiRecursion,
        Battery::CiTruncation,
        Battery::Free,
        Battery::Extension,
        Battery::Laws,
        Battery::Lemma,
        Battery::BetaIdentity,
        Battery::ELink,
        Battery::Squarefree,
        Battery::CiExample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Battery::PolyRing => "poly",
            Battery::Ci => "ci",
            Battery::CiRecursion => "ci-recursion",
            Battery::CiTruncation => "ci-truncation",
            Battery::Free => "free",
            Battery::Extension => "extension",
            Battery::Laws => "laws",
            Battery::Lemma => "lemma",
            Battery::BetaIdentity => "beta-identity",
            Battery::ELink => "e-link",
            Battery::Squarefree => "squarefree",
            Battery::CiExample => "ci-example",
        }
    }

    /// Default `(max_n, max_degree, trials)`; `None` where the battery has no
    /// such parameter.
    pub fn defaults(self) -> (Option<i64>, Option<i64>, Option<usize>) {
        match self {
            Battery::PolyRing => (Some(64), None, None),
            Battery::Ci => (Some(6), Some(5), None),
            Battery::CiTruncation => (Some(5), Some(5), None),
            Battery::CiRecursion => (Some(6), None, Some(200)),
            Battery::Free => (Some(8), None, Some(200)),
            Battery::Extension => (None, None, Some(1000)),
            Battery::Laws => (None, None, Some(1000)),
            Battery::Lemma => (Some(40), None, None),
            Battery::BetaIdentity => (Some(40), None, None),
            Battery::ELink => (Some(30), None, None),
            Battery::Squarefree => (Some(10), None, Some(500)),
            Battery::CiExample => (None, None, None),
        }
    }

    pub fn run(self, config: &VerifyConfig) -> Result<VerificationReport, ConfigError> {
        config.validate()?;
        let (max_n, max_degree, trials) = self.defaults();
        let max_n = config.max_n.or(max_n).unwrap_or(0);
        let max_degree = config.max_degree.or(max_degree).unwrap_or(0);
        let trials = config.trials.or(trials).unwrap_or(0);
        let seed = config.seed;
        Ok(match self {
            Battery::PolyRing => verify_poly_ring(max_n),
            Battery::Ci => verify_ci(max_n, max_degree),
            Battery::CiRecursion => verify_ci_recursion(trials, seed, max_n),
            Battery::CiTruncation => verify_ci_truncation(max_n, max_degree),
            Battery::Free => verify_free(trials, seed, max_n),
            Battery::Extension => verify_extension(trials, seed),
            Battery::Laws => verify_laws(trials, seed),
            Battery::Lemma => hyp::check_sign_lemma(max_n),
            Battery::BetaIdentity => hyp::check_beta_identity(max_n),
            Battery::ELink => hyp::check_e_link(max_n),
            Battery::Squarefree => {
                if max_n > config.max_vars as i64 {
                    return Err(ConfigError::TooManyVariables {
                        n: max_n,
                        cap: config.max_vars,
                    });
                }
                verify_squarefree(trials, seed, max_n as u32, config.max_vars)
            }
            Battery::CiExample => verify_ci_example(),
        })
    }
}

impl fmt::Display for Battery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Battery {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Battery::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| ConfigError::UnknownBattery(s.to_string()))
    }
}

/// Overrides for the per-battery defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: Option<usize>,
    pub max_n: Option<i64>,
    pub max_degree: Option<i64>,
    pub max_vars: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            trials: None,
            max_n: None,
            max_degree: None,
            max_vars: DEFAULT_MAX_VARS,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let at_least = |flag, min, value: Option<i64>| match value {
            Some(v) if v < min => Err(ConfigError::TooSmall {
                flag,
                min,
                value: v,
            }),
            _ => Ok(()),
        };
        at_least("--max-n", 1, self.max_n)?;
        at_least("--max-degree", 2, self.max_degree)?;
        at_least("--trials", 1, self.trials.map(|t| t as i64))?;
        if self.max_vars > HARD_MAX_VARS {
            return Err(ConfigError::CapTooHigh(self.max_vars));
        }
        Ok(())
    }
}

/// Collects violations for one case.
struct Checks<'a> {
    case: &'a str,
    out: Vec<Violation>,
}

impl<'a> Checks<'a> {
    fn new(case: &'a str) -> Self {
        Self {
            case,
            out: Vec::new(),
        }
    }

    fn fail(&mut self, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.out.push(Violation {
            case: self.case.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, what: &str, expected: T, actual: T) {
        if expected != actual {
            self.fail(format!("{what} = {expected}"), format!("{what} = {actual}"));
        }
    }

    fn holds(&mut self, law: &str, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(law, detail());
        }
    }

    /// Unwraps a fallible step, recording the error as a violation.
    fn ok<T, E: fmt::Display>(&mut self, what: &str, r: Result<T, E>) -> Option<T> {
        r.map_err(|e| self.fail(format!("{what} succeeds"), e)).ok()
    }

    fn depth(&mut self, h: &HilbertFunction) -> Option<QDepthResult> {
        self.ok("qdepth", qdepth::qdepth(h))
    }
}

fn spec_case(spec: &FunctionSpec) -> (String, Option<HilbertFunction>) {
    (spec.to_string(), spec.elaborate().ok())
}

fn ci_spec(n: i64, degrees: &[i64]) -> FunctionSpec {
    FunctionSpec::Ci {
        n,
        degrees: degrees.to_vec(),
    }
}

/// Nondecreasing sequences of length `r` over `[low, high]`.
fn multisets(r: usize, low: i64, high: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                let start = prefix.last().copied().unwrap_or(low);
                (start..=high).map(move |d| {
                    let mut next = prefix.clone();
                    next.push(d);
                    next
                })
            })
            .collect();
    }
    out
}

fn with_rng<T>(seed: u64, count: usize, mut draw: impl FnMut(&mut ChaCha8Rng) -> T) -> Vec<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| draw(&mut rng)).collect()
}

/// `qdepth(poly(n)) = n` for `1 <= n <= nmax`.
pub fn verify_poly_ring(nmax: i64) -> VerificationReport {
    let ns: Vec<i64> = (1..=nmax).collect();
    VerificationReport::run("poly", &ns, |&n| {
        let case = FunctionSpec::Poly(n).to_string();
        let mut c = Checks::new(&case);
        if let Some(h) = c.ok("elaborate", HilbertFunction::polynomial_ring(n as u32)) {
            if let Some(r) = c.depth(&h) {
                c.eq("qdepth", n, r.qdepth);
                c.eq("upper bound", n, r.upper_bound);
            }
        }
        c.out
    })
}

/// `qdepth(ci(n; degrees)) = n` for every `n <= nmax`, `r <= n` and every
/// multiset of degrees in `[2, dmax]`. All-quadric cases also pin the
/// certificate `[1, 0, ..., 0]`.
pub fn verify_ci(nmax: i64, dmax: i64) -> VerificationReport {
    let cases: Vec<(i64, Vec<i64>)> = (1..=nmax)
        .flat_map(|n| {
            (0..=n as usize)
                .flat_map(move |r| multisets(r, 2, dmax).into_iter().map(move |ds| (n, ds)))
        })
        .collect();
    VerificationReport::run("ci", &cases, |(n, ds)| {
        let (case, h) = spec_case(&ci_spec(*n, ds));
        let mut c = Checks::new(&case);
        let Some(h) = h else {
            c.fail("elaborates", "elaboration failed");
            return c.out;
        };
        if let Some(r) = c.depth(&h) {
            c.eq("qdepth", *n, r.qdepth);
            if ds.len() as i64 == *n && ds.iter().all(|&d| d == 2) {
                let mut unit = vec![Integer::zero(); *n as usize + 1];
                unit[0] = Integer::from(1);
                c.holds(
                    "certificate [1, 0, ..., 0]",
                    r.certificate.values == unit,
                    || {
                        format!(
                            "{:?}",
                            r.certificate
                                .values
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                        )
                    },
                );
            }
        }
        c.out
    })
}

/// The recursion behind the complete-intersection theorem. With `J` given
/// by degrees `d_1..d_r` (`d_r >= 3`), `I` lowers the last degree by one and
/// `J'` drops it in `n - 1` variables. Checks
/// `H_{S/J} = H_{S/I} + t^(d_r - 1) H_{S'/J'}` as canonical forms and the
/// matching split of `β_k^n`.
pub fn verify_ci_recursion(samples: usize, seed: u64, max_n: i64) -> VerificationReport {
    let cases = with_rng(seed, samples, |rng| random::ci_recursion_case(rng, max_n));
    VerificationReport::run("ci-recursion", &cases, |(n, ds)| check_ci_recursion(*n, ds))
}

fn check_ci_recursion(n: i64, ds: &[i64]) -> Vec<Violation> {
    let case = ci_spec(n, ds).to_string();
    let mut c = Checks::new(&case);
    let (last, rest) = ds.split_last().expect("at least one degree");
    let s = last - 1;
    let mut lowered = rest.to_vec();
    lowered.push(s);
    let hj = c.ok(
        "J side",
        HilbertFunction::complete_intersection(n as u32, ds),
    );
    let hi = c.ok(
        "I side",
        HilbertFunction::complete_intersection(n as u32, &lowered),
    );
    let hjp = c.ok(
        "J' side",
        HilbertFunction::complete_intersection_in(n as u32 - 1, rest),
    );
    let (Some(hj), Some(hi), Some(hjp)) = (hj, hi, hjp) else {
        return c.out;
    };
    let rhs = hi.add(&hjp.shift(-s));
    c.holds("H_{S/J} = H_{S/I} + t^(d-1) H_{S'/J'}", rhs == hj, || {
        format!("{hj} vs {rhs}")
    });
    for k in 0..=n {
        let Some(bj) = c.ok("beta J", qdepth::beta(&hj, n, k)) else {
            continue;
        };
        let Some(bi) = c.ok("beta I", qdepth::beta(&hi, n, k)) else {
            continue;
        };
        if k >= s {
            let Some(bjp) = c.ok("beta J'", qdepth::beta(&hjp, n - s, k - s)) else {
                continue;
            };
            let sum = &bi + &bjp;
            c.eq(&format!("beta_{k}^{n} split"), sum, bj);
        } else {
            c.eq(&format!("beta_{k}^{n} below d-1"), bi, bj);
        }
    }
    c.out
}

/// Padding `r < n` degrees with `n - r` copies of `n + 1` leaves `h` on
/// `[0, n]`, hence the `β^n` table, unchanged; the padded ring is Artinian
/// with depth `n`.
pub fn verify_ci_truncation(nmax: i64, dmax: i64) -> VerificationReport {
    let cases: Vec<(i64, Vec<i64>)> = (1..=nmax)
        .flat_map(|n| {
            (0..n as usize)
                .flat_map(move |r| multisets(r, 2, dmax).into_iter().map(move |ds| (n, ds)))
        })
        .collect();
    VerificationReport::run("ci-truncation", &cases, |(n, ds)| {
        let n = *n;
        let mut padded = ds.clone();
        padded.resize(n as usize, n + 1);
        let case = format!("{} vs {}", ci_spec(n, ds), ci_spec(n, &padded));
        let mut c = Checks::new(&case);
        let h = c.ok(
            "original",
            HilbertFunction::complete_intersection(n as u32, ds),
        );
        let hp = c.ok(
            "padded",
            HilbertFunction::complete_intersection(n as u32, &padded),
        );
        let (Some(h), Some(hp)) = (h, hp) else {
            return c.out;
        };
        for j in 0..=n {
            c.eq(&format!("h({j})"), h.coefficient(j), hp.coefficient(j));
        }
        let t = c.ok("beta table", qdepth::beta_table(&h, n));
        let tp = c.ok("beta table", qdepth::beta_table(&hp, n));
        if let (Some(t), Some(tp)) = (t, tp) {
            c.holds("identical beta^n tables", t == tp, || {
                format!("{:?} vs {:?}", t.values, tp.values)
            });
        }
        if let Some(r) = c.depth(&hp) {
            c.eq("qdepth of padded", n, r.qdepth);
        }
        c.out
    })
}

/// `qdepth = n - a` for `S(a)^n1 + S(a-1)^n2 + sum S(a_j)` with
/// `n1 > n2 >= 0` and `a >= a_j + 2`.
pub fn verify_free(samples: usize, seed: u64, max_n: i64) -> VerificationReport {
    let cases = with_rng(seed, samples, |rng| random::free_case(rng, max_n));
    VerificationReport::run("free", &cases, |(spec, expected)| {
        let (case, h) = spec_case(spec);
        let mut c = Checks::new(&case);
        match h {
            Some(h) => {
                if let Some(r) = c.depth(&h) {
                    c.eq("qdepth", *expected, r.qdepth);
                }
            }
            None => c.fail("elaborates", "elaboration failed"),
        }
        c.out
    })
}

/// `β_d^d(extend(h))` against the sum of `h(l)` over `k0 <= l <= d` with
/// `l ≡ d (mod 2)`.
fn check_parity(c: &mut Checks, h: &HilbertFunction, d: i64) {
    let ext = h.extend();
    let Some(lhs) = c.ok("beta of extension", qdepth::beta(&ext, d, d)) else {
        return;
    };
    let rhs: Integer = (h.k0()..=d)
        .filter(|l| (d - l) % 2 == 0)
        .map(|l| h.coefficient(l))
        .sum();
    c.eq(&format!("beta_{d}^{d}(extend) parity sum"), rhs, lhs);
}

fn check_extension(c: &mut Checks, h: &HilbertFunction, q: &QDepthResult) {
    if let Some(e) = c.depth(&h.extend()) {
        c.holds(
            "qdepth(extend(h)) >= qdepth(h)",
            e.qdepth >= q.qdepth,
            || format!("{} < {}", e.qdepth, q.qdepth),
        );
    }
    for d in q.lower_bound..=q.upper_bound {
        check_parity(c, h, d);
    }
}

/// Extension monotonicity and the parity identity on seeded random functions.
pub fn verify_extension(samples: usize, seed: u64) -> VerificationReport {
    let mut cases = vec![FunctionSpec::Table(vec![(0, Integer::from(1))])];
    cases.extend((1..=6).map(FunctionSpec::Poly));
    cases.extend(with_rng(seed, samples, random::function_spec));
    VerificationReport::run("extension", &cases, |spec| {
        let (case, h) = spec_case(spec);
        let mut c = Checks::new(&case);
        let Some(h) = h else {
            c.fail("elaborates", "elaboration failed");
            return c.out;
        };
        if let Some(q) = c.depth(&h) {
            check_extension(&mut c, &h, &q);
        }
        c.out
    })
}

struct LawCase {
    h: FunctionSpec,
    other: FunctionSpec,
    shift: i64,
    factor: i64,
}

const SCALE_FACTORS: [i64; 3] = [2, 3, 7];
const INVERSION_REACH: i64 = 12;

/// The structural laws on one random function: shift equivariance, scale
/// invariance, superadditivity, extension monotonicity, the window bounds,
/// the finite-support cap, β inversion, the parity identity and
/// soundness of the attached certificate and refutation.
fn check_laws(case: &LawCase) -> Vec<Violation> {
    let text = case.h.to_string();
    let mut c = Checks::new(&text);
    let Some(h) = c.ok("elaborate", case.h.elaborate()) else {
        return c.out;
    };
    let Some(q) = c.depth(&h) else { return c.out };

    // bounds, computed here from the values
    let k0 = h.k0();
    let (h0, h1) = (h.coefficient(k0), h.coefficient(k0 + 1));
    let upper = k0 + h1.div_floor(&h0).to_i64().unwrap_or(i64::MAX);
    c.eq("lower bound", k0, q.lower_bound);
    c.eq("upper bound", upper, q.upper_bound);
    c.holds(
        "lower <= qdepth <= upper",
        k0 <= q.qdepth && q.qdepth <= upper,
        || format!("qdepth {} outside [{k0}, {upper}]", q.qdepth),
    );
    if let Some(kf) = h.kf() {
        c.holds("qdepth <= kf", q.qdepth <= kf, || {
            format!("qdepth {} > kf {kf}", q.qdepth)
        });
    }

    // certificate and refutation
    c.holds(
        "certificate nonnegative",
        q.certificate.is_nonnegative(),
        || format!("{:?}", q.certificate),
    );
    if let Some(t) = c.ok("beta table", qdepth::beta_table(&h, q.qdepth)) {
        c.holds(
            "certificate = beta table at qdepth",
            t == q.certificate,
            || format!("{t:?}"),
        );
    }
    c.eq(
        "refutation present",
        q.qdepth < q.upper_bound,
        q.refutation.is_some(),
    );
    if let Some(w) = &q.refutation {
        c.eq("refuted depth", q.qdepth + 1, w.d);
        if let Some(b) = c.ok("beta", qdepth::beta(&h, w.d, w.k)) {
            c.holds(
                "refutation beta < 0",
                b.is_negative() && b == w.beta,
                || format!("beta_{}^{} = {b}", w.k, w.d),
            );
        }
    }

    // shift
    let shifted = h.shift(case.shift);
    if let Some(qs) = c.depth(&shifted) {
        c.eq(
            &format!("qdepth after shift {}", case.shift),
            q.qdepth - case.shift,
            qs.qdepth,
        );
    }
    if let Some(hs) = c.ok(
        "elaborate shift",
        FunctionSpec::Shift(Box::new(case.h.clone()), case.shift).elaborate(),
    ) {
        c.holds("shift spec = shift(h)", hs == shifted, || {
            format!("{hs} vs {shifted}")
        });
    }
    c.holds("shift round trip", shifted.shift(-case.shift) == h, || {
        format!("{}", shifted.shift(-case.shift))
    });
    for k in k0 - 1..=k0 + 4 {
        c.eq(
            &format!("shift value at {k}"),
            h.coefficient(k + case.shift),
            shifted.coefficient(k),
        );
    }

    // scale
    if let Some(qs) = c
        .ok("scale", h.scale(case.factor as u64))
        .and_then(|hs| c.depth(&hs))
    {
        c.eq(
            &format!("qdepth after scale {}", case.factor),
            q.qdepth,
            qs.qdepth,
        );
    }

    // superadditivity
    if let Some(g) = c.ok("elaborate other", case.other.elaborate()) {
        let sum = h.add(&g);
        if let (Some(qg), Some(qsum)) = (c.depth(&g), c.depth(&sum)) {
            let low = q.qdepth.min(qg.qdepth);
            c.holds("qdepth(h + g) >= min", qsum.qdepth >= low, || {
                format!(
                    "sum({text}, {}) has qdepth {} < {low}",
                    case.other, qsum.qdepth
                )
            });
        }
    }

    check_extension(&mut c, &h, &q);

    // inversion
    for d in k0..=k0 + INVERSION_REACH {
        let Some(t) = c.ok("beta table", qdepth::beta_table(&h, d)) else {
            continue;
        };
        for k in k0..=d {
            if let Some(v) = c.ok("reconstruct", qdepth::reconstruct(&t, k)) {
                c.eq(&format!("reconstruct(beta^{d}, {k})"), h.coefficient(k), v);
            }
        }
    }
    c.out
}

pub fn verify_laws(samples: usize, seed: u64) -> VerificationReport {
    let cases = with_rng(seed, samples, |rng| LawCase {
        h: random::function_spec(rng),
        other: random::function_spec(rng),
        shift: rng.gen_range(-3..=3),
        factor: SCALE_FACTORS[rng.gen_range(0..SCALE_FACTORS.len())],
    });
    VerificationReport::run("laws", &cases, check_laws)
}

const QQ_REDRAWS: usize = 1000;

/// Both routes to the depth of random squarefree quotients with `n <= max_n`.
/// A draw where every sampled J ends up inside I is replaced by a fresh
/// draw of `(n, generator counts)`, so every trial checks a valid quotient.
pub fn verify_squarefree(
    samples: usize,
    seed: u64,
    max_n: u32,
    max_vars: u32,
) -> VerificationReport {
    let draws = with_rng(seed, samples, |rng| {
        let mut last = None;
        for _ in 0..QQ_REDRAWS {
            let n = rng.gen_range(1..=max_n.max(1));
            let gj = rng.gen_range(1..=4);
            let gi = rng.gen_range(0..=4);
            match squarefree::random_quotient(n, rng.gen(), gj, gi) {
                Err(e @ SqfError::GenerationFailed(_)) => last = Some(e),
                other => return other,
            }
        }
        Err(last.expect("at least one draw"))
    });
    VerificationReport::run("squarefree", &draws, |draw| {
        let q = match draw {
            Ok(q) => q,
            Err(e) => {
                return vec![Violation {
                    case: "random quotient".into(),
                    expected: "a valid quotient".into(),
                    actual: e.to_string(),
                }]
            }
        };
        let case = q.describe();
        let mut c = Checks::new(&case);
        let direct = c.ok("qdepth of J/I", squarefree::qdepth_quotient(q, max_vars));
        let module = c
            .ok("M(J/I)", q.m_module(max_vars))
            .and_then(|m| c.ok("qdepth of M(J/I)", qdepth::qdepth(&m)));
        if let (Some(direct), Some(module)) = (direct, module) {
            c.eq("qdepth(J/I) = qdepth(h_M)", direct.qdepth, module.qdepth);
        }
        c.out
    })
}

/// `ci(3; 3)`: depth 3 with infinite support, so the bound `qdepth <= kf`
/// has nothing to say, and the depth exceeds the regularity 2.
pub fn verify_ci_example() -> VerificationReport {
    let spec = ci_spec(3, &[3]);
    let case = spec.to_string();
    let mut report = VerificationReport::new("ci-example");
    report.cases_run = 1;
    let mut c = Checks::new(&case);
    if let Some(h) = c.ok("elaborate", spec.elaborate()) {
        if let Some(r) = c.depth(&h) {
            c.eq("qdepth", 3, r.qdepth);
            let regularity = h.numerator().max_exp().unwrap_or(0);
            c.eq("regularity", 2, regularity);
            c.holds("qdepth > regularity", r.qdepth > regularity, || {
                format!("{} <= {regularity}", r.qdepth)
            });
        }
        c.holds("kf absent (infinite support)", h.kf().is_none(), || {
            format!("kf = {:?}", h.kf())
        });
    }
    report.violations = c.out;
    report
}

#[cfg(test)]
mod tests;
