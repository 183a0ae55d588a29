//! Seeded generators for verification cases. Every generator returns a
//! [`FunctionSpec`], so a failing case prints as DSL text that can be fed
//! straight back to the command line.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::numbers::Integer;
use crate::series::FunctionSpec;

/// Finite table starting somewhere in `[-3, 3]` with up to six values below 10.
pub fn table_spec(rng: &mut ChaCha8Rng) -> FunctionSpec {
    let k0 = rng.gen_range(-3i64..=3);
    let len = rng.gen_range(1i64..=6);
    let mut pairs = vec![(k0, Integer::from(rng.gen_range(1u32..=9)))];
    for k in k0 + 1..k0 + len {
        let v = rng.gen_range(0u32..=9);
        if v > 0 {
            pairs.push((k, Integer::from(v)));
        }
    }
    FunctionSpec::Table(pairs)
}

/// Degrees in `[low, high]`, sorted so the spec reads as a multiset.
fn degrees(rng: &mut ChaCha8Rng, count: usize, low: i64, high: i64) -> Vec<i64> {
    let mut ds: Vec<i64> = (0..count).map(|_| rng.gen_range(low..=high)).collect();
    ds.sort_unstable();
    ds
}

/// A mix of finite tables, rational forms `extend^p(table)`, complete
/// intersections and free modules.
pub fn function_spec(rng: &mut ChaCha8Rng) -> FunctionSpec {
    match rng.gen_range(0u32..10) {
        0..=3 => table_spec(rng),
        4 | 5 => {
            let mut spec = table_spec(rng);
            for _ in 0..rng.gen_range(1..=3) {
                spec = FunctionSpec::Extend(Box::new(spec));
            }
            spec
        }
        6 | 7 => {
            let n = rng.gen_range(1i64..=5);
            let r = rng.gen_range(0..=n) as usize;
            FunctionSpec::Ci {
                n,
                degrees: degrees(rng, r, 1, 4),
            }
        }
        _ => {
            let n = rng.gen_range(1i64..=4);
            let count = rng.gen_range(1..=3);
            FunctionSpec::Free {
                n,
                shifts: degrees(rng, count, -3, 3),
            }
        }
    }
}

/// Complete intersection with `1 <= r <= n <= max_n` forms of degree in
/// `[2, 5]`, the last of degree at least 3.
pub fn ci_recursion_case(rng: &mut ChaCha8Rng, max_n: i64) -> (i64, Vec<i64>) {
    let n = rng.gen_range(1..=max_n);
    let r = rng.gen_range(1..=n) as usize;
    let mut ds = degrees(rng, r - 1, 2, 5);
    ds.push(rng.gen_range(3..=5));
    (n, ds)
}

/// Free module `S(a)^n1 + S(a-1)^n2 + S(a_1) + ...` with `n1 > n2 >= 0`
/// and every `a_j <= a - 2`. Returns the spec and `n - a`.
pub fn free_case(rng: &mut ChaCha8Rng, max_n: i64) -> (FunctionSpec, i64) {
    let n = rng.gen_range(1..=max_n);
    let a = rng.gen_range(-3..=n + 2);
    let n1 = rng.gen_range(1usize..=4);
    let n2 = rng.gen_range(0..n1);
    let extra = rng.gen_range(0usize..=3);
    let mut shifts = vec![a; n1];
    shifts.extend(std::iter::repeat_n(a - 1, n2));
    shifts.extend((0..extra).map(|_| rng.gen_range(a - 5..=a - 2)));
    shifts.sort_unstable_by(|x, y| y.cmp(x));
    (FunctionSpec::Free { n, shifts }, n - a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generated_specs_elaborate_and_reparse() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let spec = function_spec(&mut rng);
            let text = spec.to_string();
            let parsed = crate::series::parse_spec(&text).unwrap();
            assert_eq!(
                parsed.elaborate().unwrap(),
                spec.elaborate().unwrap(),
                "{text}"
            );
        }
    }

    #[test]
    fn free_cases_meet_the_hypotheses() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let (spec, _) = free_case(&mut rng, 8);
            let FunctionSpec::Free { shifts, .. } = spec else {
                unreachable!()
            };
            let a = shifts[0];
            let n1 = shifts.iter().filter(|&&s| s == a).count();
            let n2 = shifts.iter().filter(|&&s| s == a - 1).count();
            assert!(n1 > n2);
            assert!(shifts.iter().all(|&s| s == a || s == a - 1 || s <= a - 2));
        }
    }

    #[test]
    fn same_seed_same_cases() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20)
                .map(|_| function_spec(&mut rng).to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(5), draw(5));
        assert_ne!(draw(5), draw(6));
    }
}
