//! Cross-check suites. Each returns a [`VerificationReport`]; a mismatch is
//! recorded as a failed case rather than raised.

use num_traits::{One, Zero};

use crate::closed::{jpt_h01, jpt_h02, tree_number};
use crate::hurwitz::MemoTable;
use crate::index::HurwitzIndex;
use crate::mirror::{
    f01_from_counts, f01_in_x, f01_in_z, f02_closed_in_z, f02_from_counts, f02_in_x, lagrange_invert,
    spectral_curve_y_of_x, x_of_z,
};
use crate::oracle::{count_monodromy_tuples, EnumerationLimits, FactorizationInstance, OracleError};
use crate::profiles::compositions_into;
use crate::rational::{factorial, int, Rational};
use crate::report::VerificationReport;
use crate::series::{Series1, Series2};

fn profile_text(mu: &[u64]) -> String {
    mu.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn compare1(report: &mut VerificationReport, label: &str, expected: &Series1, actual: &Series1) {
    let order = expected.order().min(actual.order());
    for k in 0..=order {
        report.check(format!("{label} [{k}]"), expected.coeff(k), actual.coeff(k));
    }
}

fn compare2(report: &mut VerificationReport, label: &str, expected: &Series2, actual: &Series2) {
    let order = expected.order().min(actual.order());
    for total in 0..=order {
        for j in 0..=total {
            let i = total - j;
            report.check(format!("{label} [{i},{j}]"), expected.coeff(i, j), actual.coeff(i, j));
        }
    }
}

/// Recursion against the closed genus zero one- and two-point formulas, for
/// every profile with `n <= 2`, `sum mu <= d_max` and `r | sum mu`.
pub fn verify_jpt(r: u64, d_max: u64) -> VerificationReport {
    let mut report = VerificationReport::new("jpt");
    let mut memo = MemoTable::new();
    for d in (r..=d_max).filter(|d| d % r == 0) {
        for n in 1..=2 {
            for mu in compositions_into(d, n) {
                let idx = HurwitzIndex::new(r, 0, mu.clone()).expect("valid profile");
                let expected = match mu[..] {
                    [d] => jpt_h01(r, d),
                    [a, b] => jpt_h02(r, a, b),
                    _ => unreachable!(),
                };
                report.check(format!("r={r} g=0 mu=({})", profile_text(&mu)), &expected, &memo.orbifold(&idx));
            }
        }
    }
    report
}

/// Tree numbers against `d^{d-2}`, against `(d-1)! H^1_{0,1}(d)`, and
/// against `(d-1)!` times the Lagrange inverse coefficient for `f = e^y`.
pub fn verify_cayley(d_max: u64) -> VerificationReport {
    let mut report = VerificationReport::new("cayley");
    let mut memo = MemoTable::new();
    let f = Series1::variable(d_max as usize).exp().expect("zero constant term");
    let y = lagrange_invert(&f, d_max as usize).expect("unit constant term");
    for d in 1..=d_max {
        let tree = Rational::from_integer(tree_number(d));
        let cayley = crate::rational::pow_signed(d, d as i64 - 2);
        report.check(format!("T_{d} = d^(d-2)"), &cayley, &tree);
        let fact = Rational::from_integer(factorial(d - 1));
        let idx = HurwitzIndex::new(1, 0, vec![d]).expect("valid index");
        report.check(format!("T_{d} = (d-1)! H(d)"), &tree, &(memo.arrowed(&idx) * &fact));
        report.check(format!("T_{d} = (d-1)! [x^d] y"), &tree, &(y.coeff(d as usize) * &fact));
    }
    report
}

/// `a_m = r H^r_{0,1}(r m)` obeys the `r = 1` genus zero recursion with
/// `a_1 = r`.
pub fn verify_r_scaling(r: u64, m_max: u64) -> VerificationReport {
    let mut report = VerificationReport::new("scaling");
    let mut memo = MemoTable::new();
    let a: Vec<Rational> = (0..=m_max)
        .map(|m| {
            if m == 0 {
                return Rational::zero();
            }
            let idx = HurwitzIndex::new(r, 0, vec![r * m]).expect("valid index");
            memo.arrowed(&idx) * int(r as i64)
        })
        .collect();
    report.check(format!("r={r} a_1 = r"), &int(r as i64), &a[1]);
    for m in 2..=m_max as usize {
        let mut conv = Rational::zero();
        for i in 1..m {
            conv += &a[i] * &a[m - i];
        }
        let rhs = conv * int(m as i64) / int(2);
        let lhs = &a[m] * int(m as i64 - 1);
        report.check(format!("r={r} m={m}"), &rhs, &lhs);
    }
    report
}

/// Residuals of the curve's differential equation `x y' (1 - r y) = r y`, of
/// its unreduced form `x^{r+1} (x^{-r} y)' = (r/2) x (y^2)'`, and of the
/// curve equation `x^r = y e^{-r y}` itself.
pub fn verify_spectral_ode(r: u64, order: usize) -> VerificationReport {
    let mut report = VerificationReport::new("ode");
    let ru = r as usize;
    let rq = int(r as i64);
    let y = spectral_curve_y_of_x(r, order);

    let one_minus = &Series1::one(order) - &y.scale(&rq);
    let lhs = &y.euler() * &one_minus;
    compare1(&mut report, &format!("r={r} x y'(1-ry) = ry"), &y.scale(&rq), &lhs);

    if order > ru {
        let lhs = y.shift_down(ru).derivative().shift_up(ru + 1);
        let rhs = (&y * &y).euler().scale(&(rq.clone() / int(2)));
        compare1(&mut report, &format!("r={r} x^(r+1)(x^-r y)' = (r/2)x(y^2)'"), &rhs, &lhs);
    }

    let e = y.scale(&-rq).exp().expect("zero constant term");
    let curve = &y * &e;
    compare1(&mut report, &format!("r={r} x^r = y e^(-ry)"), &Series1::monomial(ru, Rational::one(), order), &curve);
    report
}

/// `F_{0,1}(x(z))` from counts against its closed form, and `y = x F_{0,1}'`
/// in the `x` variable.
pub fn verify_f01(r: u64, order: usize) -> VerificationReport {
    let mut report = VerificationReport::new("f01");
    let mut memo = MemoTable::new();
    let closed = f01_in_z(r, order);
    let counts = f01_from_counts(r, order, &mut memo);
    compare1(&mut report, &format!("r={r} F01(x(z))"), &closed, &counts);
    let y = spectral_curve_y_of_x(r, order);
    compare1(&mut report, &format!("r={r} y = x F01'(x)"), &y, &f01_in_x(r, order, &mut memo).euler());
    report
}

/// The closed `F_{0,2}` in `z` against the generating function of counts,
/// plus its boundary values.
pub fn verify_f02(r: u64, order: usize) -> VerificationReport {
    let mut report = VerificationReport::new("f02");
    let mut memo = MemoTable::new();
    let closed = f02_closed_in_z(r, order);
    let counts = f02_from_counts(r, order, &mut memo);
    compare2(&mut report, &format!("r={r} F02"), &closed, &counts);
    compare1(&mut report, &format!("r={r} F02(z1,0)"), &Series1::zero(order), &closed.restrict_second());
    compare1(&mut report, &format!("r={r} F02(0,z2)"), &Series1::zero(order), &closed.restrict_first());
    report
}

/// The first-order PDE for `F_{0,2}`, on the curve in `z` coordinates and
/// in the original `x` coordinates.
pub fn verify_f02_pde(r: u64, order: usize) -> VerificationReport {
    let mut report = VerificationReport::new("pde");
    let ru = r as usize;
    let inv_r = Rational::one() / int(r as i64);

    // z coordinates: (1/r) E F = DD(x z^r) / DD(x) - z1^r - z2^r
    let f = f02_closed_in_z(r, order);
    let lhs = f.euler().scale(&inv_r);
    let x = x_of_z(r, order + 1);
    let g = x.shift_up(ru).truncate(order + 1);
    let ratio = g.divided_difference().div(&x.divided_difference()).expect("unit constant term");
    let zr = Series1::monomial(ru, Rational::one(), order);
    let rhs = &ratio - &Series2::sum_separate(&zr, &zr);
    compare2(&mut report, &format!("r={r} z-form"), &rhs, &lhs);

    // x coordinates, with y = x F01'(x):
    // (1/r) E F = DD(x y) - y1 - y2 + y1 x1 dF/dx1 + y2 x2 dF/dx2
    let mut memo = MemoTable::new();
    let fx = f02_in_x(r, order, &mut memo);
    let y = f01_in_x(r, order + 1, &mut memo).euler();
    let lhs = fx.euler().scale(&inv_r);
    let dd = y.shift_up(1).truncate(order + 1).divided_difference();
    let y1 = Series2::embed_first(&y, order);
    let y2 = Series2::embed_second(&y, order);
    let rhs = &(&(&dd - &y1) - &y2) + &(&(&y1 * &fx.euler_first()) + &(&y2 * &fx.euler_second()));
    compare2(&mut report, &format!("r={r} x-form"), &rhs, &lhs);
    report
}

/// Every admissible `(r, g, mu)` with `r` in `r_set`, `d <= d_max` and
/// `s <= s_max`: monodromy count against the recursion.
pub fn verify_against_oracle(
    r_set: &[u64],
    d_max: u64,
    s_max: u64,
    limits: EnumerationLimits,
) -> Result<VerificationReport, OracleError> {
    let mut report = VerificationReport::new("oracle");
    let mut memo = MemoTable::new();
    for &r in r_set {
        for d in (r..=d_max).filter(|d| d % r == 0) {
            for n in 1..=d as usize {
                for mu in compositions_into(d, n) {
                    for g in 0.. {
                        let s = 2 * g as i64 - 2 + (d / r) as i64 + n as i64;
                        if s > s_max as i64 {
                            break;
                        }
                        let inst = FactorizationInstance::new(r, g, mu.clone(), limits)?;
                        let idx = HurwitzIndex::new(r, g, mu.clone()).expect("valid index");
                        let label = format!("r={r} g={g} mu=({}) s={s}", profile_text(&mu));
                        report.check(label, &count_monodromy_tuples(&inst), &memo.orbifold(&idx));
                    }
                }
            }
        }
    }
    Ok(report)
}
