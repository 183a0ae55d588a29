use std::time::Instant;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use hdepth_core::hyp::{big_e, coeff_table, gauss2f1};
use hdepth_core::qdepth::{self, BetaTable, QDepthResult};
use hdepth_core::squarefree::{self, max_variable, SquarefreeIdeal, SquarefreeQuotient};
use hdepth_core::verify::{Battery, VerifyConfig};
use hdepth_core::{HilbertFunction, Integer, VerificationReport};

use crate::input::{read_arg, read_function};
use crate::{Failure, VerifyArgs};

type Outcome = Result<u8, Failure>;

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values always print")
    );
}

fn strings(values: &[Integer]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

fn print_table(table: &BetaTable) {
    println!("beta^{} for k = {}..{}:", table.d, table.start_k, table.d);
    let width = table
        .values
        .iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for (k, v) in (table.start_k..).zip(&table.values) {
        let mark = if v.is_negative() { "  < 0" } else { "" };
        println!("  k={k:<4} {v:>width$}{mark}");
    }
}

fn print_result(r: &QDepthResult) {
    println!("qdepth      {}", r.qdepth);
    println!("bounds      [{}, {}]", r.lower_bound, r.upper_bound);
    print_table(&r.certificate);
    match &r.refutation {
        Some(w) => println!(
            "refutation  beta_{}^{} = {} < 0, so depth {} fails",
            w.k, w.d, w.beta, w.d
        ),
        None => println!("refutation  none (qdepth meets the upper bound)"),
    }
}

fn depth_error(e: impl std::fmt::Display) -> Failure {
    Failure::input(e.to_string())
}

pub fn qdepth(spec: &str, d: Option<i64>, json: bool) -> Outcome {
    let (label, h) = read_function(spec)?;
    if let Some(d) = d {
        return beta_at(&label, &h, d, json);
    }
    let r = qdepth::qdepth(&h).map_err(depth_error)?;
    if json {
        print_json(&json!({ "input": label, "function": h.to_json(), "result": r }));
    } else {
        println!("function    {label}");
        println!("series      {h}");
        print_result(&r);
    }
    Ok(0)
}

fn beta_at(label: &str, h: &HilbertFunction, d: i64, json: bool) -> Outcome {
    let table = qdepth::beta_table(h, d).map_err(depth_error)?;
    let feasible = table.is_nonnegative();
    if json {
        print_json(&json!({
            "input": label,
            "function": h.to_json(),
            "betaTable": table,
            "feasible": feasible,
        }));
    } else {
        println!("function    {label}");
        print_table(&table);
        println!(
            "depth {d} is {}",
            if feasible { "feasible" } else { "not feasible" }
        );
    }
    Ok(0)
}

pub fn beta(spec: &str, d: i64, k: Option<i64>, json: bool) -> Outcome {
    let (label, h) = read_function(spec)?;
    let Some(k) = k else {
        return beta_at(&label, &h, d, json);
    };
    let value = qdepth::beta(&h, d, k).map_err(depth_error)?;
    if json {
        print_json(&json!({ "input": label, "d": d, "k": k, "beta": value.to_string() }));
    } else {
        println!("beta_{k}^{d}({label}) = {value}");
    }
    Ok(0)
}

pub fn sqf(j: &str, i: &str, n: Option<u32>, max_vars: u32, json: bool) -> Outcome {
    let (j_text, i_text) = (read_arg(j)?, read_arg(i)?);
    let n = n.unwrap_or_else(|| max_variable(&j_text).max(max_variable(&i_text)).max(1));
    let parse =
        |text: &str| SquarefreeIdeal::parse(n, text).map_err(|e| Failure::input(e.to_string()));
    let q = SquarefreeQuotient::new(parse(&j_text)?, parse(&i_text)?)
        .map_err(|e| Failure::input(e.to_string()))?;
    let alpha = q.alpha_vector(max_vars).map_err(depth_error)?;
    let direct = squarefree::qdepth_quotient(&q, max_vars).map_err(depth_error)?;
    let module = q.m_module(max_vars).map_err(depth_error)?;
    let via = qdepth::qdepth(&module).map_err(depth_error)?;
    let matched = direct.qdepth == via.qdepth;
    let verdict = if matched { "MATCH" } else { "MISMATCH" };
    if json {
        print_json(&json!({
            "n": n,
            "J": q.j().to_string(),
            "I": q.i().to_string(),
            "alpha": strings(&alpha),
            "quotient": direct,
            "module": via,
            "verdict": verdict,
        }));
    } else {
        println!("quotient    {}", q.describe());
        println!("alpha       [{}]", strings(&alpha).join(", "));
        println!("qdepth(J/I)       {}", direct.qdepth);
        println!("qdepth(h_M(J/I))  {}", via.qdepth);
        print_table(&direct.certificate);
        println!("{verdict}");
    }
    Ok(if matched { 0 } else { 1 })
}

fn sign_of(positive: bool, zero: bool) -> &'static str {
    if zero {
        "0"
    } else if positive {
        "+"
    } else {
        "-"
    }
}

pub fn hyp(n: i64, json: bool) -> Outcome {
    if n < 1 {
        return Err(Failure::input(format!("n must be at least 1, got {n}")));
    }
    let mut ok = true;
    let f: Vec<(i64, hdepth_core::Rational)> = (0..=n)
        .map(|k| (k, gauss2f1(k, n).expect("0 <= k <= n")))
        .collect();
    let e: Vec<(i64, Integer)> = (2..=n)
        .map(|k| (k, big_e(n, k).expect("2 <= k <= n")))
        .collect();
    let size = u32::try_from(n).map_err(|_| Failure::input(format!("n = {n} is too large")))?;
    let table = coeff_table(size, size, size).map_err(|e| Failure::input(e.to_string()))?;
    for (k, v) in &f {
        let signed = if k % 2 == 0 { v.clone() } else { -v.clone() };
        if *k >= 2 && !signed.is_positive() {
            ok = false;
        }
    }
    ok &= e.iter().all(|(_, v)| v.is_positive());
    let row = |k: u32| table.row(k).expect("inside table")[..=k.min(size) as usize].to_vec();
    let row_ok = |k: u32| {
        row(k).iter().enumerate().all(|(j, c)| {
            if j % 2 == 0 {
                c.is_positive()
            } else {
                c.is_negative()
            }
        })
    };
    ok &= (2..=size).all(row_ok);

    if json {
        let rows: Vec<Value> = (1..=size)
            .map(|k| json!({ "k": k, "values": strings(&row(k)) }))
            .collect();
        print_json(&json!({
            "n": n,
            "gauss2f1": f.iter().map(|(k, v)| json!({ "k": k, "value": v.to_string() })).collect::<Vec<_>>(),
            "bigE": e.iter().map(|(k, v)| json!({ "k": k, "value": v.to_string() })).collect::<Vec<_>>(),
            "coeffTable": rows,
            "signsHold": ok,
        }));
    } else {
        println!("2F1(-k, {n}, -{n}; -1)");
        for (k, v) in &f {
            let signed = if k % 2 == 0 { v.clone() } else { -v.clone() };
            let note = if *k >= 2 {
                format!(
                    "  (-1)^k 2F1 {}",
                    sign_of(signed.is_positive(), signed.is_zero())
                )
            } else {
                String::new()
            };
            println!("  k={k:<4} {v}{note}");
        }
        if !e.is_empty() {
            println!("E({n}, k)");
            for (k, v) in &e {
                println!("  k={k:<4} {v}  {}", sign_of(v.is_positive(), v.is_zero()));
            }
        }
        println!("c_k^(j), j = 0..k");
        for k in 1..=size {
            let values = row(k);
            let note = if k >= 2 {
                format!("  (-1)^j c > 0: {}", if row_ok(k) { "yes" } else { "NO" })
            } else {
                String::new()
            };
            println!("  k={k:<4} {}{note}", strings(&values).join(" "));
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn config_error(e: impl std::fmt::Display) -> Failure {
    Failure::input(e.to_string())
}

pub fn verify(args: VerifyArgs, json: bool) -> Outcome {
    let batteries: Vec<Battery> = if args.all || args.batteries.is_empty() {
        Battery::ALL.to_vec()
    } else {
        args.batteries
            .iter()
            .map(|b| b.parse())
            .collect::<Result<_, _>>()
            .map_err(config_error)?
    };
    let trials = match args.trials {
        Some(t) if t < 1 => {
            return Err(Failure::input(format!(
                "--trials must be at least 1, got {t}"
            )))
        }
        t => t.map(|t| t as usize),
    };
    let config = VerifyConfig {
        seed: args.seed,
        trials,
        max_n: args.max_n,
        max_degree: args.max_degree,
        max_vars: args.max_vars,
    };
    config.validate().map_err(config_error)?;
    let started = Instant::now();
    let mut reports: Vec<VerificationReport> = Vec::new();
    for b in batteries {
        reports.push(b.run(&config).map_err(config_error)?);
    }
    let passed = reports.iter().all(|r| r.passed());
    if json {
        print_json(&json!({ "seed": args.seed, "passed": passed, "reports": reports }));
    } else {
        println!(
            "{:<14} {:>8} {:>11} {:>10}",
            "battery", "cases", "violations", "time"
        );
        for r in &reports {
            println!(
                "{:<14} {:>8} {:>11} {:>9.2}s",
                r.battery,
                r.cases_run,
                r.violations.len(),
                r.elapsed.as_secs_f64()
            );
        }
        for r in &reports {
            for note in &r.notes {
                println!("note [{}]: {note}", r.battery);
            }
        }
        for r in &reports {
            for v in &r.violations {
                println!("VIOLATION [{}] case: {}", r.battery, v.case);
                println!("    expected: {}", v.expected);
                println!("    actual:   {}", v.actual);
            }
        }
        let total: usize = reports.iter().map(|r| r.violations.len()).sum();
        println!(
            "{} in {:.2}s (seed {})",
            if passed {
                "all batteries passed".to_string()
            } else {
                format!("{total} violations")
            },
            started.elapsed().as_secs_f64(),
            args.seed
        );
    }
    Ok(if passed { 0 } else { 1 })
}
