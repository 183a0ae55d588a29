//! Quotients `J/I` of squarefree monomial ideals in `n` variables.
//!
//! Squarefree monomials are bitmasks (bit `i - 1` stands for `x_i`) and
//! the α-vector counts, degree by degree, the squarefree monomials lying in
//! `J` but not in `I`. It is computed by scanning all `2^n` masks, which is
//! why `n` is capped.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::numbers::{binomial, Integer};
use crate::qdepth::{self, BetaTable, QDepthError, QDepthResult, Refutation};
use crate::series::HilbertFunction;

pub const DEFAULT_MAX_VARS: u32 = 20;
pub const HARD_MAX_VARS: u32 = 28;

/// Above this many variables the mask scan is split across threads.
const PARALLEL_SCAN_FROM: u32 = 16;
const GENERATION_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SqfError {
    #[error("{n} variables exceed the cap of {cap}")]
    TooManyVariables { n: u32, cap: u32 },
    #[error("variable cap {0} is above the hard ceiling of {HARD_MAX_VARS}")]
    CapTooHigh(u32),
    #[error("variable x{index} is outside x1..x{n}")]
    VariableOutOfRange { index: u32, n: u32 },
    #[error("cannot parse ideal {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("ideals live in different rings ({0} and {1} variables)")]
    RingMismatch(u32, u32),
    #[error("I is not contained in J: generator {0} of I is not in J")]
    NotContained(String),
    #[error("J \\ I has no monomials (J is contained in I)")]
    EmptyDifference,
    #[error("no nondegenerate quotient found after {0} attempts")]
    GenerationFailed(usize),
    #[error(transparent)]
    QDepth(#[from] QDepthError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub u32);

impl Monomial {
    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let vars: Vec<String> = (0..32)
            .filter(|b| self.0 >> b & 1 == 1)
            .map(|b| format!("x{}", b + 1))
            .collect();
        write!(f, "{}", vars.join("*"))
    }
}

/// Squarefree monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    n: u32,
    generators: Vec<Monomial>,
}

fn check_vars(n: u32) -> Result<(), SqfError> {
    if n > HARD_MAX_VARS {
        Err(SqfError::TooManyVariables {
            n,
            cap: HARD_MAX_VARS,
        })
    } else {
        Ok(())
    }
}

/// Drops generators that are multiples of others; sorted by mask.
pub fn minimalize(generators: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = generators.to_vec();
    sorted.sort_by_key(|m| (m.degree(), m.0));
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !kept.iter().any(|g| g.divides(m)) {
            kept.push(m);
        }
    }
    kept.sort();
    kept
}

impl SquarefreeIdeal {
    pub fn new(n: u32, generators: &[Monomial]) -> Result<Self, SqfError> {
        check_vars(n)?;
        let allowed = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        if let Some(m) = generators.iter().find(|m| m.0 & !allowed != 0) {
            let index = 32 - m.0.leading_zeros();
            return Err(SqfError::VariableOutOfRange { index, n });
        }
        Ok(Self {
            n,
            generators: minimalize(generators),
        })
    }

    pub fn zero(n: u32) -> Result<Self, SqfError> {
        Self::new(n, &[])
    }

    pub fn unit(n: u32) -> Result<Self, SqfError> {
        Self::new(n, &[Monomial(0)])
    }

    /// Parses `"x1*x3, x2*x4"`, `"0"` (zero ideal) or `"1"` (unit ideal).
    pub fn parse(n: u32, text: &str) -> Result<Self, SqfError> {
        let err = |reason: String| SqfError::Parse {
            text: text.to_string(),
            reason,
        };
        let trimmed = text.trim();
        match trimmed {
            "0" => return Self::zero(n),
            "1" => return Self::unit(n),
            "" => return Err(err("empty input".into())),
            _ => {}
        }
        let mut generators = Vec::new();
        for part in trimmed.split(',') {
            let mut mask = 0u32;
            for factor in part.split('*') {
                let factor = factor.trim();
                let index: u32 = factor
                    .strip_prefix('x')
                    .and_then(|digits| digits.parse().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| {
                        err(format!("expected a variable x1, x2, ..., found {factor:?}"))
                    })?;
                if index > n {
                    return Err(SqfError::VariableOutOfRange { index, n });
                }
                let bit = 1u32 << (index - 1);
                if mask & bit != 0 {
                    return Err(err(format!(
                        "x{index} repeated in {:?}; monomials must be squarefree",
                        part.trim()
                    )));
                }
                mask |= bit;
            }
            generators.push(Monomial(mask));
        }
        Self::new(n, &generators)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, u: Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(u))
    }

    pub fn contains_ideal(&self, other: &SquarefreeIdeal) -> bool {
        other.generators.iter().all(|&g| self.contains(g))
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "0");
        }
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", gens.join(", "))
    }
}

/// Highest variable index mentioned in an ideal string, or 0 for none.
pub fn max_variable(text: &str) -> u32 {
    text.split([',', '*'])
        .filter_map(|f| f.trim().strip_prefix('x')?.parse().ok())
        .max()
        .unwrap_or(0)
}

/// `J/I` with `I ⊆ J` and at least one squarefree monomial in `J \ I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeQuotient {
    j: SquarefreeIdeal,
    i: SquarefreeIdeal,
}

impl SquarefreeQuotient {
    pub fn new(j: SquarefreeIdeal, i: SquarefreeIdeal) -> Result<Self, SqfError> {
        if j.n != i.n {
            return Err(SqfError::RingMismatch(j.n, i.n));
        }
        if let Some(g) = i.generators.iter().find(|&&g| !j.contains(g)) {
            return Err(SqfError::NotContained(g.to_string()));
        }
        // A generator of J outside I is itself a squarefree monomial of J \ I.
        if j.generators.iter().all(|&g| i.contains(g)) {
            return Err(SqfError::EmptyDifference);
        }
        Ok(Self { j, i })
    }

    pub fn n(&self) -> u32 {
        self.j.n
    }

    pub fn j(&self) -> &SquarefreeIdeal {
        &self.j
    }

    pub fn i(&self) -> &SquarefreeIdeal {
        &self.i
    }

    /// Replayable descriptor, e.g. `n=3 J=x1*x2 I=x1*x2*x3`.
    pub fn describe(&self) -> String {
        format!("n={} J={} I={}", self.n(), self.j, self.i)
    }

    fn in_difference(&self, mask: u32) -> bool {
        let u = Monomial(mask);
        self.j.contains(u) && !self.i.contains(u)
    }

    /// α_k for `0 <= k <= n` by scanning every squarefree monomial.
    pub fn alpha_vector(&self, max_vars: u32) -> Result<Vec<Integer>, SqfError> {
        if max_vars > HARD_MAX_VARS {
            return Err(SqfError::CapTooHigh(max_vars));
        }
        let n = self.n();
        if n > max_vars {
            return Err(SqfError::TooManyVariables { n, cap: max_vars });
        }
        let len = n as usize + 1;
        let count = |mut hist: Vec<u64>, mask: u32| {
            if self.in_difference(mask) {
                hist[mask.count_ones() as usize] += 1;
            }
            hist
        };
        let hist: Vec<u64> = if n >= PARALLEL_SCAN_FROM {
            (0..1u32 << n)
                .into_par_iter()
                .fold(|| vec![0u64; len], count)
                .reduce(
                    || vec![0u64; len],
                    |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
                )
        } else {
            (0..1u32 << n).fold(vec![0u64; len], count)
        };
        Ok(hist.into_iter().map(Integer::from).collect())
    }

    /// Hilbert function of `M(J/I) = (J + (x_i^2)) / (I + (x_i^2))`, which
    /// has the α-vector as its table of values.
    pub fn m_module(&self, max_vars: u32) -> Result<HilbertFunction, SqfError> {
        let alpha = self.alpha_vector(max_vars)?;
        let values = alpha
            .into_iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, a)| (k as i64, a))
            .collect();
        Ok(HilbertFunction::from_table(&values).expect("J \\ I is nonempty"))
    }
}

/// `β_k^d(J/I) = Σ_{j=0}^{k} (-1)^(k-j) C(d-j, k-j) α_j` for `0 <= k <= d`.
pub fn quotient_betas(alpha: &[Integer], d: i64) -> Vec<Integer> {
    (0..=d)
        .map(|k| {
            (0..=k)
                .filter_map(|j| alpha.get(j as usize).map(|a| (j, a)))
                .map(|(j, a)| {
                    let term = binomial(d - j, k - j) * a;
                    if (k - j) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

/// Depth of `J/I` as the largest `d` in `[0, n]` whose β-vector is
/// nonnegative. Works on the α-vector directly, independently of the
/// Hilbert-function route.
pub fn qdepth_quotient(q: &SquarefreeQuotient, max_vars: u32) -> Result<QDepthResult, SqfError> {
    let alpha = q.alpha_vector(max_vars)?;
    let n = q.n() as i64;
    let k0 = alpha
        .iter()
        .position(|a| !a.is_zero())
        .expect("J \\ I is nonempty") as i64;
    let h0 = &alpha[k0 as usize];
    let h1 = alpha
        .get(k0 as usize + 1)
        .cloned()
        .unwrap_or_else(Integer::zero);
    let upper = k0 + (h1 / h0).to_i64().expect("ratio bounded by n");

    let feasible = |betas: &[Integer]| betas.iter().all(|b| !b.is_negative());
    let mut above: Option<(i64, Vec<Integer>)> = None;
    for d in (0..=n).rev() {
        let betas = quotient_betas(&alpha, d);
        if feasible(&betas) {
            let refutation = above.and_then(|(d_up, up)| {
                let k = up.iter().position(|b| b.is_negative())?;
                Some(Refutation {
                    d: d_up,
                    k: k as i64,
                    beta: up[k].clone(),
                })
            });
            let start = k0.min(d);
            return Ok(QDepthResult {
                qdepth: d,
                certificate: BetaTable {
                    d,
                    start_k: start,
                    values: betas[start as usize..].to_vec(),
                },
                lower_bound: k0,
                upper_bound: upper,
                refutation: refutation.filter(|_| d < upper),
            });
        }
        above = Some((d, betas));
    }
    unreachable!("d = 0 has the single entry α_0 >= 0")
}

/// Whether both routes to the depth agree on `q`.
pub fn check_routes_agree(q: &SquarefreeQuotient, max_vars: u32) -> Result<bool, SqfError> {
    let direct = qdepth_quotient(q, max_vars)?.qdepth;
    let via_module = qdepth::qdepth(&q.m_module(max_vars)?)?.qdepth;
    Ok(direct == via_module)
}

fn random_subset(rng: &mut ChaCha8Rng, n: u32, size: u32) -> u32 {
    sample(rng, n as usize, size as usize)
        .into_iter()
        .fold(0u32, |mask, i| mask | 1 << i)
}

/// Seeded random quotient. J gets `gen_count_j` generators (at least one)
/// of random positive degree. Each of the `gen_count_i` generators of I is a
/// random generator of J times a random set of extra variables, so I ⊆ J.
/// Draws with J ⊆ I are discarded and redrawn.
pub fn random_quotient(
    n: u32,
    seed: u64,
    gen_count_j: usize,
    gen_count_i: usize,
) -> Result<SquarefreeQuotient, SqfError> {
    if n < 1 {
        return Err(SqfError::Parse {
            text: String::new(),
            reason: "random quotients need at least one variable".into(),
        });
    }
    check_vars(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GENERATION_ATTEMPTS {
        let j_gens: Vec<Monomial> = (0..gen_count_j.max(1))
            .map(|_| {
                let degree = rng.gen_range(1..=n);
                Monomial(random_subset(&mut rng, n, degree))
            })
            .collect();
        let j = SquarefreeIdeal::new(n, &j_gens)?;
        let i_gens: Vec<Monomial> = (0..gen_count_i)
            .map(|_| {
                let base = j.generators[rng.gen_range(0..j.generators.len())];
                let extra = rng.gen_range(0u32..1 << n);
                Monomial(base.0 | extra)
            })
            .collect();
        let i = SquarefreeIdeal::new(n, &i_gens)?;
        match SquarefreeQuotient::new(j, i) {
            Ok(q) => return Ok(q),
            Err(SqfError::EmptyDifference) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(SqfError::GenerationFailed(GENERATION_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;

    fn ideal(n: u32, text: &str) -> SquarefreeIdeal {
        SquarefreeIdeal::parse(n, text).unwrap()
    }

    fn quotient(n: u32, j: &str, i: &str) -> SquarefreeQuotient {
        SquarefreeQuotient::new(ideal(n, j), ideal(n, i)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    /// Brute-force oracle over explicit subsets of {1..n}, written with
    /// vectors of variable indices instead of bit tricks.
    fn alpha_oracle(n: u32, j: &[Vec<u32>], i: &[Vec<u32>]) -> Vec<Integer> {
        let mut alpha = vec![Integer::zero(); n as usize + 1];
        for mask in 0u32..1 << n {
            let vars: Vec<u32> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let divisible = |g: &Vec<u32>| g.iter().all(|v| vars.contains(v));
            if j.iter().any(divisible) && !i.iter().any(divisible) {
                alpha[vars.len()] += 1;
            }
        }
        alpha
    }

    #[test]
    fn contains_examples() {
        let u = Monomial(0b11);
        assert!(!SquarefreeIdeal::zero(2).unwrap().contains(u));
        assert!(SquarefreeIdeal::unit(2).unwrap().contains(Monomial(0)));
        assert!(ideal(2, "x1").contains(u));
        assert!(!ideal(2, "x1").contains(Monomial(0b10)));
    }

    #[test]
    fn parse_and_display() {
        let j = ideal(4, " x2*x4 , x1*x3, x1*x3*x4");
        assert_eq!(j.generators(), &[Monomial(0b0101), Monomial(0b1010)]);
        assert_eq!(j.to_string(), "x1*x3, x2*x4");
        assert_eq!(ideal(3, "0").to_string(), "0");
        assert_eq!(ideal(3, "1").to_string(), "1");
        assert_eq!(ideal(3, "1").generators(), &[Monomial(0)]);
        assert_eq!(SquarefreeIdeal::parse(4, &j.to_string()).unwrap(), j);
        assert!(matches!(
            SquarefreeIdeal::parse(2, "x3"),
            Err(SqfError::VariableOutOfRange { index: 3, n: 2 })
        ));
        assert!(matches!(
            SquarefreeIdeal::parse(2, "x1*x1"),
            Err(SqfError::Parse { .. })
        ));
        assert!(matches!(
            SquarefreeIdeal::parse(2, "y1"),
            Err(SqfError::Parse { .. })
        ));
        assert!(matches!(
            SquarefreeIdeal::parse(2, "x0"),
            Err(SqfError::Parse { .. })
        ));
        assert!(matches!(
            SquarefreeIdeal::parse(2, ""),
            Err(SqfError::Parse { .. })
        ));
        assert_eq!(max_variable("x1*x7, x3"), 7);
        assert_eq!(max_variable("0"), 0);
    }

    #[test]
    fn quotient_validation() {
        assert!(matches!(
            SquarefreeQuotient::new(ideal(3, "x1*x2"), ideal(3, "x3")),
            Err(SqfError::NotContained(_))
        ));
        assert!(matches!(
            SquarefreeQuotient::new(ideal(3, "x1*x2"), ideal(3, "x1")),
            Err(SqfError::NotContained(_))
        ));
        assert_eq!(
            SquarefreeQuotient::new(ideal(3, "x1"), ideal(3, "x1")),
            Err(SqfError::EmptyDifference)
        );
        assert_eq!(
            SquarefreeQuotient::new(ideal(3, "x1"), ideal(2, "0")),
            Err(SqfError::RingMismatch(3, 2))
        );
        assert!(SquarefreeQuotient::new(ideal(3, "1"), ideal(3, "x1, x2")).is_ok());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(
            quotient(2, "x1", "0").alpha_vector(20).unwrap(),
            ints(&[0, 1, 1])
        );
        assert_eq!(
            quotient(3, "x1*x2", "x1*x2*x3").alpha_vector(20).unwrap(),
            ints(&[0, 0, 1, 0])
        );
        assert_eq!(
            quotient(3, "1", "0").alpha_vector(20).unwrap(),
            ints(&[1, 3, 3, 1])
        );
        assert_eq!(
            quotient(4, "x1*x2, x3", "x1*x2*x3, x3*x4")
                .alpha_vector(20)
                .unwrap(),
            alpha_oracle(4, &[vec![1, 2], vec![3]], &[vec![1, 2, 3], vec![3, 4]])
        );
    }

    #[test]
    fn variable_caps() {
        let q = quotient(22, "x1", "0");
        assert_eq!(
            q.alpha_vector(20),
            Err(SqfError::TooManyVariables { n: 22, cap: 20 })
        );
        assert_eq!(q.alpha_vector(29), Err(SqfError::CapTooHigh(29)));
        assert!(SquarefreeIdeal::zero(29).is_err());
        let alpha = q.alpha_vector(22).unwrap();
        for (k, a) in alpha.iter().enumerate() {
            assert_eq!(a, &binomial(21, k as i64 - 1), "k={k}");
        }
    }

    #[test]
    fn qdepth_quotient_examples() {
        let r = qdepth_quotient(&quotient(2, "x1", "0"), 20).unwrap();
        assert_eq!(r.qdepth, 2);
        assert_eq!(quotient_betas(&ints(&[0, 1, 1]), 2), ints(&[0, 1, 0]));
        let r = qdepth_quotient(&quotient(3, "1", "0"), 20).unwrap();
        assert_eq!(r.qdepth, 3);
        assert_eq!(r.certificate.values, ints(&[1, 0, 0, 0]));
        let r = qdepth_quotient(&quotient(3, "x1*x2", "x1*x2*x3"), 20).unwrap();
        assert_eq!(r.qdepth, 2);
        assert_eq!(r.lower_bound, 2);
    }

    #[test]
    fn m_module_examples() {
        assert_eq!(
            quotient(2, "x1", "0").m_module(20).unwrap(),
            HilbertFunction::from_pairs(&[(1, 1), (2, 1)]).unwrap()
        );
        assert_eq!(
            quotient(1, "x1", "0").m_module(20).unwrap(),
            HilbertFunction::from_pairs(&[(1, 1)]).unwrap()
        );
        assert_eq!(
            quotient(3, "1", "0").m_module(20).unwrap(),
            HilbertFunction::from_pairs(&[(0, 1), (1, 3), (2, 3), (3, 1)]).unwrap()
        );
    }

    #[test]
    fn routes_agree_examples() {
        for (n, j, i) in [(2, "x1", "0"), (3, "1", "0"), (3, "x1*x2", "x1*x2*x3")] {
            assert!(check_routes_agree(&quotient(n, j, i), 20).unwrap());
        }
    }

    #[test]
    fn refutation_on_quotient() {
        // α = [0, 2, 1] over n=2 with J = (x1, x2): bounds (1, 1), depth 1
        let q = quotient(2, "x1, x2", "0");
        let r = qdepth_quotient(&q, 20).unwrap();
        assert_eq!((r.qdepth, r.upper_bound), (1, 1));
        assert!(r.refutation.is_none());
        // J = S, I = (x1*x2, x3): α = [1, 3, 2, 0], bounds (0, 3)
        let q = quotient(3, "1", "x1*x2, x3");
        let r = qdepth_quotient(&q, 20).unwrap();
        let via = qdepth::qdepth(&q.m_module(20).unwrap()).unwrap();
        assert_eq!(r.qdepth, via.qdepth);
        assert_eq!(r.refutation.is_some(), r.qdepth < r.upper_bound);
        if let Some(w) = &r.refutation {
            assert!(quotient_betas(&q.alpha_vector(20).unwrap(), w.d)[w.k as usize].is_negative());
        }
    }

    #[test]
    fn random_quotient_examples() {
        assert_eq!(random_quotient(3, 7, 2, 2), random_quotient(3, 7, 2, 2));
        let q = random_quotient(1, 5, 1, 0).unwrap();
        assert_eq!(q.j().to_string(), "x1");
        assert!(q.i().is_zero());
        assert_eq!(
            random_quotient(1, 5, 1, 1),
            Err(SqfError::GenerationFailed(GENERATION_ATTEMPTS))
        );
    }

    proptest! {
        #[test]
        fn minimalize_is_idempotent_and_order_free(masks in prop::collection::vec(0u32..64, 0..8), seed in any::<u64>()) {
            let gens: Vec<Monomial> = masks.iter().map(|&m| Monomial(m)).collect();
            let once = minimalize(&gens);
            prop_assert_eq!(minimalize(&once), once.clone());
            let mut shuffled = gens.clone();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in (1..shuffled.len()).rev() {
                shuffled.swap(i, rng.gen_range(0..=i));
            }
            prop_assert_eq!(minimalize(&shuffled), once.clone());
            for (a, b) in once.iter().zip(once.iter().skip(1)) {
                prop_assert!(!a.divides(*b) && !b.divides(*a));
            }
        }

        #[test]
        fn membership_is_upward_closed(masks in prop::collection::vec(0u32..64, 0..5), u in 0u32..64, extra in 0u32..64) {
            let ideal = SquarefreeIdeal::new(6, &masks.iter().map(|&m| Monomial(m)).collect::<Vec<_>>()).unwrap();
            if ideal.contains(Monomial(u)) {
                prop_assert!(ideal.contains(Monomial(u | extra)));
            }
        }

        #[test]
        fn random_quotients_are_valid(n in 1u32..9, seed in any::<u64>(), gj in 1usize..4, gi in 0usize..4) {
            if let Ok(q) = random_quotient(n, seed, gj, gi) {
                prop_assert!(q.j().contains_ideal(q.i()));
                let alpha = q.alpha_vector(20).unwrap();
                let oracle = alpha_oracle(
                    n,
                    &q.j().generators().iter().map(|g| (1..=n).filter(|v| g.0 >> (v - 1) & 1 == 1).collect()).collect::<Vec<_>>(),
                    &q.i().generators().iter().map(|g| (1..=n).filter(|v| g.0 >> (v - 1) & 1 == 1).collect()).collect::<Vec<_>>(),
                );
                prop_assert_eq!(&alpha, &oracle);
                let mut total = Integer::zero();
                for (k, a) in alpha.iter().enumerate() {
                    prop_assert!(!a.is_negative() && a <= &binomial(n as i64, k as i64));
                    total += a;
                }
                prop_assert!(total.is_positive());
                let m = q.m_module(20).unwrap();
                prop_assert!(m.kf().unwrap() <= n as i64);
                let via = qdepth::qdepth(&m).unwrap();
                prop_assert!(via.qdepth <= m.kf().unwrap());
                prop_assert_eq!(qdepth_quotient(&q, 20).unwrap().qdepth, via.qdepth);
                for d in 0..=n as i64 {
                    let direct = quotient_betas(&alpha, d);
                    if d >= m.k0() {
                        let table = qdepth::beta_table(&m, d).unwrap();
                        for k in m.k0()..=d {
                            prop_assert_eq!(&direct[k as usize], table.get(k).unwrap());
                        }
                        for k in 0..m.k0() {
                            prop_assert!(direct[k as usize].is_zero());
                        }
                    }
                }
            }
        }
    }
}
