use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CheckReport, Witness};
use crate::ratfield::RatFun;

/// Cross-ratio identity in `Q(e1, e2, u, c)`: with `v = u - c` and
/// `X = (v - e1)(v - e2) / ((v + e1)(v + e2))`,
/// `(X - 1) v^2 + sign * hbar (X + 1) v + e1 e2 (X - 1) = 0` holds for `sign = +1`.
pub fn cross_ratio_residual(sign: i64) -> RatFun {
    let e1 = RatFun::var4(0);
    let e2 = RatFun::var4(1);
    let v = RatFun::var4(2) - RatFun::var4(3);
    let num = (&v - &e1) * (&v - &e2);
    let den = (&v + &e1) * (&v + &e2);
    let x = num.checked_div(&den).expect("nonzero denominator");
    let one = RatFun::one();
    let hbar = &e1 + &e2;
    let a = (&x - &one) * (&v * &v);
    let b = (&hbar * &(&x + &one)) * &v;
    let c = (&e1 * &e2) * (&x - &one);
    a + b.scale_int(sign) + c
}

pub fn check_cross_ratio(mutated: bool) -> CheckReport {
    let sign = if mutated { -1 } else { 1 };
    let res = cross_ratio_residual(sign);
    let label = if mutated { "cross-ratio hbar-sign-flipped".to_string() } else { "cross-ratio".to_string() };
    let witness = res.witness_monomial().map(|m| Witness { input: String::new(), output: m, coeff: res.to_string() });
    CheckReport::new("appendix", "appendix-a", label, 0, 0, witness)
}

/// Coefficients of `AB` and `BA` after expanding the second-order `N = 2`
/// shift relation with `A`, `B` diagonal-weight operators; returned as
/// `(lhs_ab, rhs_ab, lhs_ba, rhs_ba)` evaluated at `(e1, e2, ci, cj)`.
fn rank2_coefficients(r: u32, s: u32, p: &[BigRational; 4]) -> [BigRational; 4] {
    let [e1, e2, ci, cj] = p;
    let hbar = e1 + e2;
    let pw = |x: &BigRational, k: u32| -> BigRational { num_traits::pow(x.clone(), k as usize) };
    let comm = pw(ci, r + 2) * pw(cj, s) - BigRational::from_integer(2.into()) * pw(ci, r + 1) * pw(cj, s + 1) + pw(ci, r) * pw(cj, s + 2);
    let anti = &hbar * pw(ci, r + 1) * pw(cj, s) - &hbar * pw(ci, r) * pw(cj, s + 1);
    let e12 = e1 * e2 * pw(ci, r) * pw(cj, s);
    let delta = ci - cj;
    let lhs_ab = &comm + &anti + &e12;
    let rhs_ab = pw(ci, r) * pw(cj, s) * (&delta + e1) * (&delta + e2);
    let lhs_ba = -&comm + &anti - &e12;
    let rhs_ba = -(pw(ci, r) * pw(cj, s)) * (&delta - e1) * (&delta - e2);
    [lhs_ab, rhs_ab, lhs_ba, rhs_ba]
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let n: i64 = rng.gen_range(-50..=50);
    let d: i64 = rng.gen_range(1..=13);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Grid check of the factorisation behind the second-order `N = 2` relation:
/// `points` seeded rationals per variable, full product grid, all `r, s <= rmax`.
pub fn check_rank2_factorisation(rmax: u32, points: usize, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let axes: Vec<Vec<BigRational>> = (0..4).map(|_| (0..points).map(|_| random_rational(&mut rng)).collect()).collect();
    let mut witness = None;
    'outer: for r in 0..=rmax {
        for s in 0..=rmax {
            for a in &axes[0] {
                for b in &axes[1] {
                    for c in &axes[2] {
                        for d in &axes[3] {
                            let p = [a.clone(), b.clone(), c.clone(), d.clone()];
                            let [lab, rab, lba, rba] = rank2_coefficients(r, s, &p);
                            let diff = if lab != rab { &lab - &rab } else { &lba - &rba };
                            if !diff.is_zero() {
                                witness = Some(Witness {
                                    input: format!("r={r} s={s}"),
                                    output: format!("e1={a} e2={b} ci={c} cj={d}"),
                                    coeff: diff.to_string(),
                                });
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    let label = format!("rank2-factorisation rmax={rmax} points={points}^4 seed={seed}");
    CheckReport::new("appendix", "appendix-b", label, 2, 0, witness)
}

/// The rank-two factorisation with `delta -> -delta` in the `AB` factor; must fail.
pub fn rank2_mutant_detected(rmax: u32) -> bool {
    let one = BigRational::one();
    let p = [one.clone(), BigRational::from_integer(3.into()), BigRational::from_integer(5.into()), one];
    (0..=rmax).any(|r| {
        let [lab, _, _, _] = rank2_coefficients(r, 0, &p);
        let [e1, e2, ci, cj] = &p;
        let delta = cj - ci;
        let wrong = num_traits::pow(ci.clone(), r as usize) * (&delta + e1) * (&delta + e2);
        lab != wrong
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_ratio_vanishes() {
        assert!(cross_ratio_residual(1).is_zero());
        assert!(!cross_ratio_residual(-1).is_zero());
    }

    #[test]
    fn factorisation_small_grid() {
        assert!(check_rank2_factorisation(1, 2, 7).pass);
        assert!(rank2_mutant_detected(1));
    }
}
