//! The identity predicates. Each takes the shared [`Store`] and an upper
//! index and returns the first counterexample, if any.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::store::Store;
use super::Failure;
use crate::algebra::{int, rat, sign, PowerSeries, Rat, Scalar, Sqrt2Rat};
use crate::sequences::{
    alpha, alpha_star, beta, beta_integral_closed, beta_integral_f, beta_star, psi,
    ratfun_integral, rho_hat, tau, gamma, v_series, vstar_series, AlphaMethod, AlphaStarMethod,
    BetaMethod, BetaStarMethod, GammaMethod, RhoHatMethod, TauMethod, Value,
};
use crate::triangles::{
    binom_rat, binomial_half, binomial_rat, dfact, eulerian2, eulerian2_poly,
    eulerian2_star, eulerian2_via_ratfun, omega, stirling_cycle, stirling_cycle_star, ATArray,
    ATMode,
};

pub(super) type Outcome = Result<(), Failure>;

fn expect<V: Into<Value> + PartialEq>(index: &[i64], lhs: V, rhs: V) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Failure { index: index.to_vec(), lhs: lhs.into(), rhs: rhs.into() })
    }
}

fn at<T: Clone + Zero>(v: &[T], i: i64) -> T {
    if i < 0 {
        T::zero()
    } else {
        v[i as usize].clone()
    }
}

fn q(x: Rat) -> Sqrt2Rat {
    Sqrt2Rat::rational(x)
}

fn half() -> Rat {
    rat(1, 2)
}

/// `d_m = m!! c_m`, zero for negative `m`.
fn d(s: &Store, m: i64) -> Sqrt2Rat {
    if m < 0 {
        Sqrt2Rat::zero()
    } else {
        s.c()[m as usize].scale(&dfact(m))
    }
}

fn cos_half_pi(x: i64) -> i64 {
    match x.rem_euclid(4) {
        0 => 1,
        2 => -1,
        _ => 0,
    }
}

pub(super) fn thm_1_1(s: &Store, n: usize) -> Outcome {
    for r in 0..=n {
        let rho = &s.rho_hat()[r] + int((r == 0) as i64);
        expect(&[r as i64], s.psi()[r].clone(), int(sign(r as i64 + 1)) * rho)?;
    }
    Ok(())
}

pub(super) fn eq_1_7(s: &Store, n: usize) -> Outcome {
    for m in 0..=n as i64 {
        let mut lhs = Rat::zero();
        for k in 0..=m {
            lhs += int(sign(k)) * eulerian2(m as usize, k) / binom_rat(2 * m + 1, k + 1);
        }
        expect(&[m], lhs, int(2) * &s.bernoulli()[m as usize + 1])?;
    }
    Ok(())
}

pub(super) fn prop_2_2(s: &Store, n: usize) -> Outcome {
    let (g, t, h) = (s.gamma(), s.tau(), s.rho_hat());
    for r in 0..=n {
        let mut lhs = &g[r] + &t[r];
        for j in 0..=r {
            lhs += int(sign(j as i64)) * &h[j] * &g[r - j];
        }
        expect(&[r as i64], lhs, Rat::zero())?;
    }
    Ok(())
}

pub(super) fn log_g(s: &Store, n: usize) -> Outcome {
    expect(&[0], s.gamma()[0].clone(), int(1))?;
    let g = PowerSeries::new(s.gamma()[..=n + 1].to_vec());
    let lg = g.log().expect("unit constant term");
    let b = s.bernoulli();
    for j in 1..=n {
        let want = &b[j + 1] / int(((j + 1) * j) as i64);
        expect(&[j as i64], lg.coeffs()[j].clone(), want)?;
    }
    Ok(())
}

pub(super) fn eq_2_8(s: &Store, n: usize) -> Outcome {
    let g = s.gamma();
    for r in 0..=n {
        let lhs: Rat = (0..=r).map(|j| psi(j) * &g[r - j]).sum();
        expect(&[r as i64], lhs, s.tau()[r].clone())?;
    }
    Ok(())
}

pub(super) fn eq_2_9(s: &Store, n: usize) -> Outcome {
    let g = s.gamma();
    for r in 0..=n {
        let lhs: Rat = (0..=r).map(|j| int(sign(j as i64)) * &g[j] * &g[r - j]).sum();
        expect(&[r as i64], lhs, int((r == 0) as i64))?;
    }
    Ok(())
}

pub(super) fn eq_2_10(s: &Store, n: usize) -> Outcome {
    let (g, b) = (s.gamma(), s.bernoulli());
    for r in 0..=n {
        let lhs: Rat = (0..=r)
            .map(|j| int(sign(j as i64) * (j as i64 + 1)) * &g[j + 1] * &g[r - j])
            .sum();
        expect(&[r as i64], lhs, &b[r + 2] / int(r as i64 + 2))?;
    }
    Ok(())
}

pub(super) fn lagrange_roundtrip(_: &Store, n: usize) -> Outcome {
    let p = n + 2;
    let f = v_series(p).as_ref().clone().truncate(p).mul_x_pow(1);
    let g = vstar_series(p).as_ref().clone().truncate(p).mul_x_pow(1);
    for (which, comp) in [f.compose(&g), g.compose(&f)].into_iter().enumerate() {
        let comp = comp.expect("inner series has no constant term");
        for (i, c) in comp.coeffs().iter().enumerate() {
            expect(&[which as i64, i as i64], c.clone(), int((i == 1) as i64))?;
        }
    }
    Ok(())
}

pub(super) fn eq_3_5_to_3_10(s: &Store, n: usize) -> Outcome {
    for r in 0..=n {
        let ri = r as i64;
        let forms = [
            (rho_hat(r, RhoHatMethod::VPower), &s.rho_hat()[r]),
            (gamma(r, GammaMethod::VPower), &s.gamma()[r]),
            (tau(r, TauMethod::VPower), &s.tau()[r]),
            (rho_hat(r, RhoHatMethod::VStarCoeff), &s.rho_hat()[r]),
            (gamma(r, GammaMethod::VStarCoeff), &s.gamma()[r]),
            (tau(r, TauMethod::VStarLogDerivative), &s.tau()[r]),
        ];
        for (which, (lhs, rhs)) in forms.into_iter().enumerate() {
            expect(&[ri, which as i64], lhs, rhs.clone())?;
        }
    }
    Ok(())
}

pub(super) fn eq_4_1(s: &Store, n: usize) -> Outcome {
    let c = s.c();
    for m in 0..=(2 * n + 2) as i64 {
        let mut lhs = Sqrt2Rat::zero();
        for x in 0..=m {
            lhs += &c[x as usize].mul_ref(&c[(m - x) as usize]).scale(&int(x));
        }
        let rhs = c[m as usize].scale(&int(m)) + at(c, m - 2).scale(&int(2));
        expect(&[m], lhs, rhs)?;
    }
    Ok(())
}

fn weighted_conv(c: &[Sqrt2Rat], m: i64, odd_x_only: bool) -> Sqrt2Rat {
    let mut acc = Sqrt2Rat::zero();
    for x in 1..m {
        if odd_x_only && x % 2 == 0 {
            continue;
        }
        acc += &c[x as usize].mul_ref(&c[(m - x) as usize]).scale(&int(x * (m - x)));
    }
    acc
}

pub(super) fn prop_4_2(s: &Store, n: usize) -> Outcome {
    let c = s.c();
    for r in 0..=n {
        let ri = r as i64;
        let rh = -(c[2 * r + 2].scale(&dfact(2 * ri + 2)) * Sqrt2Rat::sqrt2_pow(-(2 * ri + 2)));
        expect(&[ri, 0], q(s.rho_hat()[r].clone()), rh)?;
        let g = c[2 * r + 1].scale(&dfact(2 * ri + 1)) * Sqrt2Rat::sqrt2_pow(-(2 * ri + 1));
        expect(&[ri, 1], q(s.gamma()[r].clone()), g)?;
        let corr = weighted_conv(c, 2 * ri + 3, false).scale(&(dfact(2 * ri - 1) / int(4)))
            * Sqrt2Rat::sqrt2_pow(-(2 * ri - 1));
        expect(&[ri, 2], q(s.tau()[r].clone()), q(s.gamma()[r].clone()) - corr)?;
    }
    Ok(())
}

/// `-m!! c_m + 4(m-2)!! c_{m-2}`.
fn ccj_tail(c: &[Sqrt2Rat], m: i64) -> Sqrt2Rat {
    -c[m as usize].scale(&dfact(m)) + c[m as usize - 2].scale(&(int(4) * dfact(m - 2)))
}

pub(super) fn prop_4_3(s: &Store, n: usize) -> Outcome {
    let c = s.c();
    for r in 0..=n as i64 {
        let m = 2 * r + 3;
        let lhs = weighted_conv(c, m, true).scale(&(int(2) * dfact(m - 4)));
        let mut rhs = ccj_tail(c, m);
        for x in (1..=m).step_by(2) {
            let y = m - x;
            let t = c[x as usize].mul_ref(&c[y as usize]).scale(&(dfact(x) * dfact(y)));
            rhs += &t.scale(&int(sign(y / 2)));
        }
        expect(&[m], lhs, rhs)?;
    }
    Ok(())
}

pub(super) fn prop_4_3_symmetric(s: &Store, n: usize) -> Outcome {
    let c = s.c();
    for r in 0..=n as i64 {
        let m = 2 * r + 3;
        let mut lhs = Sqrt2Rat::zero();
        for x in 0..=m {
            let y = m - x;
            let w = dfact(m - 4) * int(x * y)
                - rat(cos_half_pi(x) + cos_half_pi(y), 2) * dfact(x) * dfact(y);
            lhs += &c[x as usize].mul_ref(&c[y as usize]).scale(&w);
        }
        expect(&[m], lhs, ccj_tail(c, m))?;
    }
    Ok(())
}

/// `U^k` to `O(t^((top+1)/2))` for `k = 0..=kmax`.
fn u_powers(s: &Store, top: usize, kmax: usize) -> Vec<PowerSeries<Sqrt2Rat>> {
    let u = PowerSeries::new(s.c()[..=top].to_vec());
    let mut out = vec![PowerSeries::one(top + 1)];
    for k in 1..=kmax {
        let next = out[k - 1].mul(&u);
        out.push(next);
    }
    out
}

pub(super) fn lemma_5_2(s: &Store, n: usize) -> Outcome {
    let pw = u_powers(s, n, n + 1);
    let sn = |m: i64, k: usize| at(pw[k].coeffs(), m);
    for m in 1..=n as i64 {
        for k in 1..=n {
            let lhs = sn(m, k + 1).scale(&rat(1, k as i64 + 1));
            let rhs = sn(m, k).scale(&rat(1, k as i64)) + sn(m - 2, k).scale(&rat(2, m));
            expect(&[m, k as i64], lhs, rhs)?;
        }
    }
    Ok(())
}

pub(super) fn thm_5_3(s: &Store, n: usize) -> Outcome {
    let pw = u_powers(s, n, n.max(1));
    for m in 0..=n as i64 {
        for k in 1..=n.max(1) as i64 {
            let lhs = pw[k as usize].coeffs()[m as usize].scale(&(dfact(m) / int(k)));
            let mut rhs = Sqrt2Rat::zero();
            for j in 0..k {
                let p2 = int(2).pow(j as i32);
                rhs += &d(s, m - 2 * j).scale(&(&p2 * stirling_cycle(k as usize, k - j)));
                if m == 2 * j {
                    rhs -= &q(p2 * stirling_cycle_star(k as usize, k - j));
                }
            }
            expect(&[m, k], lhs, rhs)?;
        }
    }
    Ok(())
}

pub(super) fn prop_5_4(s: &Store, n: usize) -> Outcome {
    let (a, ast) = (s.alpha(), s.alpha_star());
    for m in 0..=n as i64 {
        let lhs = d(s, m).scale(&rat(m, 2)) * Sqrt2Rat::sqrt2_pow(-m);
        let mut rhs = Sqrt2Rat::zero();
        for j in 0..=m / 2 {
            rhs += &(d(s, m - 2 * j).scale(&a[j as usize]) * Sqrt2Rat::sqrt2_pow(-(m - 2 * j)));
        }
        if m % 2 == 0 {
            rhs -= &q(ast[m as usize / 2].clone());
        }
        expect(&[m], lhs, rhs)?;
    }
    Ok(())
}

pub(super) fn eq_5_11(s: &Store, n: usize) -> Outcome {
    let (g, a) = (s.gamma(), s.alpha());
    for m in 0..=n {
        let rhs: Rat = (0..m).map(|j| &a[j + 1] * &g[m - 1 - j]).sum();
        expect(&[m as i64], int(m as i64) * &g[m], rhs)?;
    }
    Ok(())
}

pub(super) fn eq_5_12(s: &Store, n: usize) -> Outcome {
    let (h, a, ast) = (s.rho_hat(), s.alpha(), s.alpha_star());
    for m in 0..=n {
        let mut rhs = &ast[m + 1] - &a[m + 1];
        for j in 0..m {
            rhs += &a[j + 1] * &h[m - 1 - j];
        }
        expect(&[m as i64], (int(m as i64) + half()) * &h[m], rhs)?;
    }
    Ok(())
}

pub(super) fn eq_6_1(_: &Store, n: usize) -> Outcome {
    for nn in 0..=n as i64 {
        for m in 0..=2 * n as i64 {
            let rhs: Rat =
                (0..=nn).map(|k| eulerian2(nn as usize, k) * binom_rat(m + k, 2 * nn)).sum();
            expect(&[nn, m], stirling_cycle(m as usize, m - nn), rhs)?;
        }
    }
    Ok(())
}

pub(super) fn eq_6_2(_: &Store, n: usize) -> Outcome {
    for m in 1..=2 * n.max(1) as i64 {
        expect(&[1, m, 0], stirling_cycle_star(m as usize, m - 1), binom_rat(m - 1, 2))?;
    }
    for nn in 1..=n as i64 {
        for m in 1..=2 * n as i64 {
            let rhs: Rat = (-1..=nn - 2)
                .map(|k| eulerian2_star(nn as usize, k).expect("n >= 1") * binom_rat(m + k, 2 * nn))
                .sum();
            expect(&[nn, m], stirling_cycle_star(m as usize, m - nn), rhs)?;
        }
    }
    Ok(())
}

pub(super) fn ratfun_recursion(_: &Store, n: usize) -> Outcome {
    for m in 0..=n {
        let (lhs, rhs) = (eulerian2_via_ratfun(m), eulerian2_poly(m));
        for k in 0..=m {
            expect(&[m as i64, k as i64], lhs.coeff(k), rhs.coeff(k))?;
        }
        if lhs != rhs {
            return Err(Failure {
                index: vec![m as i64],
                lhs: Value::Rat(int(lhs.degree().map_or(-1, |x| x as i64))),
                rhs: Value::Rat(int(rhs.degree().map_or(-1, |x| x as i64))),
            });
        }
    }
    Ok(())
}

pub(super) fn prop_6_1(_: &Store, n: usize) -> Outcome {
    for j in 0..=n {
        let ji = j as i64;
        expect(&[ji, 0], alpha(j, AlphaMethod::Definition), alpha(j, AlphaMethod::Eulerian))?;
        expect(
            &[ji, 1],
            alpha_star(j, AlphaStarMethod::Definition),
            alpha_star(j, AlphaStarMethod::Eulerian),
        )?;
    }
    Ok(())
}

pub(super) fn prop_6_2(_: &Store, n: usize) -> Outcome {
    let box_ab = n.min(4) as i64;
    for nn in 1..=n.max(1) {
        for a in 0..=box_ab {
            for b in -(nn as i64 + 1)..=box_ab {
                for starred in [false, true] {
                    if starred && nn < 2 {
                        continue;
                    }
                    let idx = [a, b, nn as i64, starred as i64];
                    let lhs = beta_integral_f(a, b, nn, starred).expect("preconditions hold");
                    let rhs = beta_integral_closed(a, b, nn, starred).expect("preconditions hold");
                    expect(&idx, lhs, rhs)?;
                }
            }
        }
    }
    Ok(())
}

pub(super) fn eq_6_9(s: &Store, n: usize) -> Outcome {
    for nn in 1..=n {
        for j in 0..=nn + 1 {
            let num = &eulerian2_poly(j) * &eulerian2_poly(nn + 1 - j);
            let v = ratfun_integral(&num, 1, 0, 2 * nn as i64 + 3).expect("convergent");
            expect(&[nn as i64, j as i64], s.alpha()[nn].clone(), int(sign(j as i64)) * v)?;
        }
    }
    Ok(())
}

pub(super) fn eq_6_10_6_11(s: &Store, n: usize) -> Outcome {
    for j in 1..=n {
        let want = alpha_star(j, AlphaStarMethod::Definition);
        let forms = [
            alpha_star(j, AlphaStarMethod::BetaIntegral),
            alpha_star(j, AlphaStarMethod::BetaIntegralUnstarred),
            s.alpha_star()[j].clone(),
        ];
        for (which, v) in forms.into_iter().enumerate() {
            expect(&[j as i64, which as i64], v, want.clone())?;
        }
    }
    Ok(())
}

pub(super) fn prop_7_1(s: &Store, n: usize) -> Outcome {
    let (a, b, g) = (s.alpha(), s.bernoulli(), s.gamma());
    for j in 0..=n {
        expect(&[j as i64, 0], a[j].clone(), &b[j + 1] / int(j as i64 + 1))?;
    }
    for r in 0..=n {
        let lhs: Rat = (0..=r)
            .map(|j| int(sign(j as i64) * (j as i64 + 1)) * &g[j + 1] * &g[r - j])
            .sum();
        expect(&[r as i64, 1], lhs, a[r + 1].clone())?;
    }
    Ok(())
}

/// `Σ_{j<m} B_{j+2}/(j+2) ρ̂_{m-1-j}`.
fn bernoulli_conv(s: &Store, m: usize) -> Rat {
    let (b, h) = (s.bernoulli(), s.rho_hat());
    (0..m).map(|j| &b[j + 2] / int(j as i64 + 2) * &h[m - 1 - j]).sum()
}

pub(super) fn eq_7_3(s: &Store, n: usize) -> Outcome {
    let (b, h, ast) = (s.bernoulli(), s.rho_hat(), s.alpha_star());
    for m in 0..=n {
        let rhs = &ast[m + 1] - &b[m + 2] / int(m as i64 + 2) + bernoulli_conv(s, m);
        expect(&[m as i64], (int(m as i64) + half()) * &h[m], rhs)?;
    }
    Ok(())
}

pub(super) fn prop_8_1(s: &Store, n: usize) -> Outcome {
    let bt = s.beta();
    for r in 0..=n as i64 {
        let m = 2 * r + 3;
        let mut lhs = Sqrt2Rat::zero();
        for j in 0..=(m - 3) / 2 {
            lhs += &d(s, m - 2 - 2 * j).scale(&(&bt[j as usize] * int(2).pow(j as i32)));
        }
        let mut inner = d(s, m - 2).scale(&int(2)) - d(s, m).scale(&half());
        for x in (1..=m).step_by(2) {
            let y = m - x;
            inner += &d(s, x).mul_ref(&d(s, y)).scale(&rat(sign(y / 2), 2));
        }
        expect(&[m], lhs, inner.scale(&rat(m - 2, 2)))?;
    }
    Ok(())
}

pub(super) fn prop_8_2(s: &Store, n: usize) -> Outcome {
    let (b, h, bt) = (s.bernoulli(), s.rho_hat(), s.beta());
    for m in 1..=n {
        let rhs = int(sign(m as i64)) * &bt[m]
            + int(2) * &b[m + 1] / int(m as i64 + 1)
            + bernoulli_conv(s, m);
        expect(&[m as i64], (int(m as i64) + half()) * &h[m], rhs)?;
    }
    Ok(())
}

pub(super) fn prop_8_3(_: &Store, n: usize) -> Outcome {
    for j in 0..=n {
        let ji = j as i64;
        let want = beta(j, BetaMethod::Definition);
        expect(&[ji, 0], beta(j, BetaMethod::Eulerian), want.clone())?;
        expect(&[ji, 1], beta(j, BetaMethod::BetaIntegral), want)?;
        expect(
            &[ji, 2],
            beta_star(j, BetaStarMethod::Eulerian),
            beta_star(j, BetaStarMethod::Definition),
        )?;
    }
    Ok(())
}

pub(super) fn eq_8_4(s: &Store, n: usize) -> Outcome {
    let (bt, bst) = (s.beta(), s.beta_star());
    for m in 0..=n as i64 {
        let lhs = weighted_conv(s.c(), m + 2, false).scale(&(dfact(m) / int(4)));
        let mut rhs = Sqrt2Rat::zero();
        for j in 0..=m / 2 {
            rhs += &d(s, m - 2 * j).scale(&(&bt[j as usize] * int(2).pow(j as i32)));
        }
        if m % 2 == 0 {
            rhs -= &(Sqrt2Rat::sqrt2_pow(m).scale(&bst[m as usize / 2]));
        }
        expect(&[m], lhs, rhs)?;
    }
    Ok(())
}

pub(super) fn eq_8_7(s: &Store, n: usize) -> Outcome {
    let (b, ast, bt) = (s.bernoulli(), s.alpha_star(), s.beta());
    for m in 1..=n {
        let mi = m as i64;
        let rhs = int(sign(mi)) * &bt[m] + &b[m + 2] / int(mi + 2) + int(2) * &b[m + 1] / int(mi + 1);
        expect(&[mi], ast[m + 1].clone(), rhs)?;
    }
    Ok(())
}

pub(super) fn eq_9_9(s: &Store, n: usize) -> Outcome {
    let (g, b) = (s.gamma(), s.bernoulli());
    expect(&[0], g[0].clone(), int(1))?;
    for r in 1..=n {
        let rhs: Rat = (0..r).map(|j| &b[j + 2] / int(j as i64 + 2) * &g[r - 1 - j]).sum();
        expect(&[r as i64], int(r as i64) * &g[r], rhs)?;
    }
    Ok(())
}

pub(super) fn eq_9_14(s: &Store, n: usize) -> Outcome {
    let (g, h) = (s.gamma(), s.rho_hat());
    for r in 0..=n {
        let top = int(r as i64) + rat(3, 2);
        let lhs: Rat = (0..=r)
            .map(|j| binomial_rat(&top, j as i64 + 1).expect("k >= 0") * &h[j] * &g[r - j])
            .sum();
        expect(&[r as i64], lhs, -g[r].clone())?;
    }
    Ok(())
}

/// `ρ̂_r` extended by `ρ̂_{-1} = -c_0 = -1`, which is what the substitution
/// `ρ̂_r = -(r+1)! c_{2r+2}` gives at `r = -1`.
fn rho_hat_ext(s: &Store, r: i64) -> Rat {
    if r == -1 {
        int(-1)
    } else {
        s.rho_hat()[r as usize].clone()
    }
}

pub(super) fn eq_9_15(s: &Store, n: usize) -> Outcome {
    let (g, h) = (s.gamma(), s.rho_hat());
    for r in 0..=n as i64 {
        let mut lhs = Rat::zero();
        for j in 0..r {
            lhs += binom_rat(r + 1, j + 1) * &h[j as usize] * &h[(r - 1 - j) as usize];
        }
        let mut second = Rat::zero();
        for j in 0..=r {
            second += binomial_half(r + 2, j + 1).expect("in range") * &g[j as usize] * &g[(r - j) as usize];
        }
        lhs += second / int(2 * (r + 2));
        expect(&[r], lhs, int(-2) * rho_hat_ext(s, r - 1))?;
    }
    Ok(())
}

pub(super) fn eq_9_16(s: &Store, n: usize) -> Outcome {
    let (g, h) = (s.gamma(), s.rho_hat());
    for r in 0..=n {
        let top = int(r as i64) - half();
        let lhs: Rat = (0..=r)
            .map(|j| {
                let w = binomial_rat(&top, j as i64).expect("k >= 0") + rat(sign(j as i64), 2);
                w * &h[j] * &g[r - j]
            })
            .sum();
        expect(&[r as i64], lhs, -g[r].clone())?;
    }
    Ok(())
}

pub(super) fn eq_9_17(s: &Store, n: usize) -> Outcome {
    let (g, h, bt, bst) = (s.gamma(), s.rho_hat(), s.beta(), s.beta_star());
    for r in 0..=n as i64 {
        let ru = r as usize;
        let mut lhs = Rat::zero();
        for j in 0..r {
            lhs += binom_rat(r - 1, j) * &h[j as usize] * &h[(r - 1 - j) as usize];
        }
        lhs *= int(r);
        for j in 0..=r {
            lhs += binomial_half(r, j).expect("in range") * &g[j as usize] * &g[(r - j) as usize]
                / int(2);
        }
        let mut rhs = &bt[ru] - &bst[ru];
        for j in 0..ru {
            rhs -= &bt[j] * &h[ru - 1 - j];
        }
        expect(&[r], lhs, rhs)?;
    }
    Ok(())
}

pub(super) fn eq_10_2(_: &Store, n: usize) -> Outcome {
    for nn in 0..=n {
        for k in 0..=n as i64 {
            let rhs: Rat = (1..=k)
                .map(|j| int(sign(j - 1)) * omega(j as usize) * stirling_cycle(nn, k - j))
                .sum();
            expect(&[nn as i64, k], stirling_cycle_star(nn, k), rhs)?;
        }
    }
    Ok(())
}

pub(super) fn stirstar_diag(_: &Store, n: usize) -> Outcome {
    for m in 1..=n as i64 {
        expect(&[m, m], stirling_cycle_star(m as usize, m), rat(m - 1, m))?;
        for k in -1..=1 {
            expect(&[m, k], stirling_cycle_star(m as usize, k), Rat::zero())?;
        }
    }
    Ok(())
}

pub(super) fn omega_denominator_smooth(_: &Store, n: usize) -> Outcome {
    for m in 0..=n {
        let mut den = omega(m).denom().clone();
        for p in 2..=m as u64 + 1 {
            let p = p.into();
            while den.is_multiple_of(&p) {
                den /= &p;
            }
        }
        if !den.is_one() {
            return Err(Failure {
                index: vec![m as i64],
                lhs: Value::Rat(Rat::from_integer(den)),
                rhs: Value::Rat(int(1)),
            });
        }
    }
    Ok(())
}

pub(super) fn at_positivity(_: &Store, n: usize) -> Outcome {
    let a = ATArray::new(ATMode::Divide, n + 1, n + 1);
    for (i, row) in a.rows.iter().enumerate() {
        for (m, v) in row.iter().enumerate() {
            if !v.is_positive() {
                return Err(Failure {
                    index: vec![i as i64, m as i64],
                    lhs: Value::Rat(v.clone()),
                    rhs: Value::Rat(Rat::zero()),
                });
            }
        }
    }
    Ok(())
}
