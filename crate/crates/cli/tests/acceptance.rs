//! Acceptance suite. Every criterion runs at its stated tolerance (exact
//! equality) and time limit, and prints one PASS/FAIL line. Run with
//! `cargo test -p hurwitz-cli --test acceptance -- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use hurwitz_core::mirror::{lagrange_invert, spectral_curve_y_of_x};
use hurwitz_core::oracle::{count_monodromy_tuples, EnumerationLimits, FactorizationInstance};
use hurwitz_core::profiles::partitions;
use hurwitz_core::rational::{factorial, frac, int};
use hurwitz_core::verify::{
    verify_against_oracle, verify_f01, verify_f02, verify_f02_pde, verify_jpt, verify_spectral_ode,
};
use hurwitz_core::{tree_number, HurwitzIndex, MemoTable, Rational, Series1, VerificationReport};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{has_float_token, hurwitz, schema, validate};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

fn idx(r: u64, g: u64, mu: &[u64]) -> HurwitzIndex {
    HurwitzIndex::new(r, g, mu.to_vec()).unwrap()
}

fn all_pass(reports: &[VerificationReport]) -> (bool, usize) {
    let total = reports.iter().map(|r| r.summary.total).sum();
    let failures: Vec<String> = reports.iter().flat_map(|r| r.failures().map(|c| c.input.clone())).collect();
    (failures.is_empty() && total > 0, total)
}

fn ac1_paper_anchor() -> Outcome {
    let t = Instant::now();
    let mut memo = MemoTable::new();
    let i = idx(2, 0, &[3, 1]);
    let arrowed = memo.arrowed(&i);
    let orbifold = memo.orbifold(&i);
    let el = t.elapsed();
    outcome(
        arrowed == frac(9, 2) && orbifold == frac(3, 2) && within(el, Duration::from_secs(1)),
        format!("arrowed {arrowed}, orbifold {orbifold}, {el:?}"),
    )
}

fn ac2_base_cases() -> Outcome {
    let mut memo = MemoTable::new();
    let ok = (1..=5).all(|r| memo.orbifold(&idx(r, 0, &[r])) == frac(1, r as i64));
    outcome(ok, "H^r_{0,1}(r) = 1/r for r = 1..5")
}

fn ac3_tree_sequence() -> Outcome {
    let t = Instant::now();
    let head: Vec<BigInt> = (1..=6).map(tree_number).collect();
    let want: Vec<BigInt> = [1, 1, 3, 16, 125, 1296].into_iter().map(BigInt::from).collect();
    let cayley = (2..=12u64).all(|d| tree_number(d) == num_traits::pow(BigInt::from(d), (d - 2) as usize));
    let el = t.elapsed();
    outcome(head == want && cayley && within(el, Duration::from_secs(1)), format!("d <= 12 in {el:?}"))
}

fn ac4_jpt() -> Outcome {
    let t = Instant::now();
    let reports: Vec<_> = (1..=3).map(|r| verify_jpt(r, 12)).collect();
    let el = t.elapsed();
    let (ok, total) = all_pass(&reports);
    outcome(ok && within(el, Duration::from_secs(5)), format!("{total} profiles in {el:?}"))
}

fn ac5_oracle() -> Outcome {
    let t = Instant::now();
    let limits = EnumerationLimits::default();
    let main = verify_against_oracle(&[1, 2], 4, 5, limits).expect("within budget");
    let deg5 = verify_against_oracle(&[1], 5, 4, limits).expect("within budget");
    let has = |rep: &VerificationReport, input: &str| rep.cases.iter().any(|c| c.input == input && c.pass);
    let anchors_in_suite = has(&main, "r=1 g=0 mu=(2,1) s=3") && has(&main, "r=2 g=0 mu=(3,1) s=2") && has(&deg5, "r=1 g=0 mu=(5) s=4");
    let base = FactorizationInstance::new(3, 0, vec![3], limits).unwrap();
    let anchors = count_monodromy_tuples(&base) == frac(1, 3)
        && count_monodromy_tuples(&FactorizationInstance::new(1, 0, vec![2, 1], limits).unwrap()) == frac(2, 3)
        && count_monodromy_tuples(&FactorizationInstance::new(2, 0, vec![3, 1], limits).unwrap()) * int(3) == frac(9, 2);
    let el = t.elapsed();
    let (ok, total) = all_pass(&[main, deg5]);
    outcome(
        ok && anchors && anchors_in_suite && within(el, Duration::from_secs(60)),
        format!("{total} instances in {el:?}"),
    )
}

fn ac6_mirror_identities() -> Outcome {
    let t = Instant::now();
    let mut reports = Vec::new();
    for r in 1..=3 {
        reports.push(verify_f01(r, 12));
        reports.push(verify_f02(r, 10));
    }
    let el = t.elapsed();
    let (ok, total) = all_pass(&reports);
    outcome(ok && within(el, Duration::from_secs(30)), format!("{total} coefficients in {el:?}"))
}

fn ac7_residuals() -> Outcome {
    let mut reports = Vec::new();
    for r in 1..=3 {
        reports.push(verify_spectral_ode(r, 20));
        reports.push(verify_f02_pde(r, 10));
    }
    let (ok, total) = all_pass(&reports);
    outcome(ok, format!("{total} residual coefficients, all zero"))
}

fn ac8_lagrange() -> Outcome {
    let f = Series1::variable(20).exp().unwrap();
    let y = lagrange_invert(&f, 20).unwrap();
    let closed = (1..=20u64).all(|k| {
        *y.coeff(k as usize) == Rational::new(num_traits::pow(BigInt::from(k), (k - 1) as usize), factorial(k))
    });
    let mut rng = StdRng::seed_from_u64(0x4875_7277);
    let n = 10;
    let mut round_trips = 0;
    for _ in 0..50 {
        let degree = rng.gen_range(0..=5);
        let mut coeffs = vec![frac(rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=3))];
        coeffs.extend((0..degree).map(|_| frac(rng.gen_range(-9..=9), rng.gen_range(1..=5))));
        let f = Series1::new(coeffs, n);
        let y = lagrange_invert(&f, n).unwrap();
        let x = Series1::variable(n).div(&f).unwrap();
        if y.compose(&x).unwrap() == Series1::variable(n) {
            round_trips += 1;
        }
    }
    // the curve itself is the r = 1 instance
    let curve = spectral_curve_y_of_x(1, 20) == y;
    outcome(closed && round_trips == 50 && curve, format!("k <= 20 exact, {round_trips}/50 round trips"))
}

fn ac9_performance() -> Outcome {
    let t = Instant::now();
    let mut memo = MemoTable::new();
    let mut values = 0;
    for g in 0..=3u64 {
        for n in 1..=6usize {
            if 2 * g as i64 - 2 + n as i64 > 4 {
                continue;
            }
            for d in 1..=16 {
                for mu in partitions(d, n).into_iter().filter(|p| p.len() == n) {
                    memo.arrowed(&idx(1, g, &mu));
                    values += 1;
                }
            }
        }
    }
    let bulk = t.elapsed();
    let cached = memo.len();
    let t = Instant::now();
    let single = memo.arrowed(&idx(1, 2, &[10]));
    let lookup = t.elapsed();
    // independent evaluation from an empty table must agree
    let fresh = MemoTable::new().arrowed(&idx(1, 2, &[10]));
    outcome(
        within(bulk, Duration::from_secs(10)) && memo.len() == cached && single == fresh && lookup < Duration::from_millis(5),
        format!("{values} values in {bulk:?}; H^1_(2,1)(10) = {single} in {lookup:?}"),
    )
}

fn expect(problems: &mut Vec<String>, args: &[&str], code: i32, stdout: Option<&str>) -> String {
    let run = hurwitz(args);
    if run.code != code {
        problems.push(format!("{args:?}: exit {} (want {code})", run.code));
    }
    if let Some(want) = stdout {
        if run.stdout != want {
            problems.push(format!("{args:?}: stdout {:?}", run.stdout));
        }
    }
    if has_float_token(&run.stdout) {
        problems.push(format!("{args:?}: floating-point token in output"));
    }
    run.stdout
}

fn ac10_cli_contract() -> Outcome {
    let schema = schema();
    let mut problems = Vec::new();
    expect(&mut problems, &["compute", "--r", "2", "--genus", "0", "--mu", "3,1", "--arrowed"], 0, Some("9/2\n"));
    expect(&mut problems, &["compute", "--r", "3", "--genus", "0", "--mu", "3"], 0, Some("1/3\n"));
    expect(&mut problems, &["compute", "--r", "2", "--genus", "0", "--mu", "1"], 0, Some("0\n"));
    expect(&mut problems, &["compute", "--r", "2", "--genus", "0", "--mu", "0,1"], 2, Some(""));
    expect(&mut problems, &["compute", "--r", "0", "--genus", "0", "--mu", "1"], 2, Some(""));
    let csv = expect(&mut problems, &["table", "--r", "1", "--genus", "0", "--degree-max", "3", "--format", "csv"], 0, None);
    if !csv.starts_with("r,g,mu,n,d,s,arrowed,hurwitz\n") || !csv.contains("\n1,0,3,1,3,2,3/2,1/2\n") {
        problems.push("table csv content".into());
    }
    let json = expect(&mut problems, &["table", "--r", "2", "--genus", "0", "--degree-max", "2", "--format", "json"], 0, None);
    match serde_json::from_str(&json) {
        Ok(v) => {
            if let Err(e) = validate(&schema, "table", &v) {
                problems.push(e);
            }
        }
        Err(e) => problems.push(e.to_string()),
    }
    expect(&mut problems, &["table", "--r", "3", "--genus", "0", "--degree-max", "2"], 0, Some("r,g,mu,n,d,s,arrowed,hurwitz\n"));
    expect(&mut problems, &["series", "--which", "curve", "--r", "1", "--order", "4"], 0, Some("1 1\n2 1\n3 3/2\n4 8/3\n"));
    expect(&mut problems, &["series", "--which", "f01", "--r", "2", "--order", "4"], 0, Some("2 1/2\n4 -1/2\n"));
    expect(&mut problems, &["series", "--which", "f02", "--r", "1", "--order", "2"], 0, Some("1,1 1/2\n"));
    expect(&mut problems, &["series", "--which", "sideways", "--r", "1", "--order", "2"], 2, Some(""));
    expect(&mut problems, &["verify", "--suite", "cayley", "--max", "12"], 0, None);
    expect(&mut problems, &["verify", "--suite", "jpt", "--r", "2", "--max-degree", "12"], 0, None);
    let report = expect(&mut problems, &["verify", "--suite", "oracle", "--d-max", "4", "--s-max", "4", "--r", "1,2", "--json"], 0, None);
    match serde_json::from_str(&report) {
        Ok(v) => {
            if let Err(e) = validate(&schema, "report", &v) {
                problems.push(e);
            }
        }
        Err(e) => problems.push(e.to_string()),
    }
    expect(&mut problems, &["verify", "--suite", "all"], 0, None);
    expect(&mut problems, &["verify", "--suite", "nothing"], 2, Some(""));
    outcome(problems.is_empty(), if problems.is_empty() { "all end-to-end checks".to_string() } else { problems.join("; ") })
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("AC1 paper anchor H^2_(0,2)(3,1) = 9/2", ac1_paper_anchor),
        ("AC2 base cases 1/r", ac2_base_cases),
        ("AC3 tree sequence and Cayley", ac3_tree_sequence),
        ("AC4 closed one- and two-point formulas", ac4_jpt),
        ("AC5 monodromy oracle", ac5_oracle),
        ("AC6 mirror identities F01, F02", ac6_mirror_identities),
        ("AC7 ODE and PDE residuals", ac7_residuals),
        ("AC8 Lagrange inversion", ac8_lagrange),
        ("AC9 memoized performance", ac9_performance),
        ("AC10 CLI contract", ac10_cli_contract),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let o = run();
        println!("[{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
