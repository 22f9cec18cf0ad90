//! q-Pochhammer products, Ramanujan's general theta function `f(a, b)` and
//! its classical specialisations.

use std::fmt;
use std::ops::{Div, Mul};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{coeff, int, rat, Rat, Series};

/// A signed monomial `±q^exp`, the only argument shape `f(a, b)` accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaArg {
    pub negative: bool,
    pub exp: Rat,
}

impl ThetaArg {
    /// `+q^exp`.
    pub fn q(exp: Rat) -> Self {
        ThetaArg {
            negative: false,
            exp,
        }
    }

    /// `−q^exp`.
    pub fn neg_q(exp: Rat) -> Self {
        ThetaArg {
            negative: true,
            exp,
        }
    }

    pub fn flipped(self) -> Self {
        ThetaArg {
            negative: !self.negative,
            ..self
        }
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(self, k: i64) -> Self {
        ThetaArg {
            negative: self.negative && k.is_odd(),
            exp: self.exp * k,
        }
    }

    fn sign(self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

impl Mul for ThetaArg {
    type Output = ThetaArg;
    fn mul(self, rhs: ThetaArg) -> ThetaArg {
        ThetaArg {
            negative: self.negative != rhs.negative,
            exp: self.exp + rhs.exp,
        }
    }
}

impl Div for ThetaArg {
    type Output = ThetaArg;
    fn div(self, rhs: ThetaArg) -> ThetaArg {
        ThetaArg {
            negative: self.negative != rhs.negative,
            exp: self.exp - rhs.exp,
        }
    }
}

impl fmt::Display for ThetaArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        if self.exp.is_zero() {
            write!(f, "1")
        } else if self.exp.is_one() {
            write!(f, "q")
        } else if self.exp.is_integer() && self.exp > int(0) {
            write!(f, "q^{}", self.exp)
        } else {
            write!(f, "q^({})", self.exp)
        }
    }
}

/// Multiplies `acc` in place by `1 − sign·q^e`, keeping every term.
fn times_binomial(acc: &mut Vec<(Rat, BigRational)>, a: ThetaArg) {
    let shifted: Vec<(Rat, BigRational)> = acc
        .iter()
        .map(|(e, c)| (*e + a.exp, if a.negative { c.clone() } else { -c }))
        .collect();
    acc.extend(shifted);
    acc.sort_by_key(|x| x.0);
    let mut merged: Vec<(Rat, BigRational)> = Vec::with_capacity(acc.len());
    for (e, c) in acc.drain(..) {
        match merged.last_mut() {
            Some((le, lc)) if *le == e => *lc += c,
            _ => merged.push((e, c)),
        }
    }
    merged.retain(|(_, c)| !c.is_zero());
    *acc = merged;
}

/// The finite product `∏_{k<n} (1 − a·q^{k·step})`.
pub fn pochhammer_finite(a: ThetaArg, step: Rat, n: u32, prec: Rat) -> Result<Series> {
    if step <= int(0) {
        return Err(Error::Domain(format!(
            "pochhammer step must be positive, got {step}"
        )));
    }
    // Exact expansion first: with a nonpositive exponent, terms above the
    // precision can still cancel back below it.
    let mut acc = vec![(int(0), BigRational::one())];
    for k in 0..n {
        let factor = ThetaArg {
            exp: a.exp + step * k as i64,
            ..a
        };
        times_binomial(&mut acc, factor);
    }
    Ok(Series::from_terms(acc, prec))
}

/// `(a; q^step)_∞` truncated at `prec`; requires `a` to have positive exponent.
pub fn pochhammer_infinite(a: ThetaArg, step: Rat, prec: Rat) -> Result<Series> {
    if a.exp <= int(0) {
        return Err(Error::Domain(format!(
            "infinite pochhammer needs a positive leading exponent, got {}",
            a.exp
        )));
    }
    if step <= int(0) {
        return Err(Error::Domain(format!(
            "pochhammer step must be positive, got {step}"
        )));
    }
    let mut acc = Series::one(prec);
    let mut e = a.exp;
    while e < prec {
        let factor =
            Series::from_terms([(int(0), BigRational::one()), (e, coeff(-a.sign()))], prec);
        acc = acc.mul(&factor);
        e += step;
    }
    Ok(acc)
}

/// Lower bound on the scan radius of the bilateral sum; the exponent
/// sequence is monotone beyond it.
fn scan_guard(a: ThetaArg, b: ThetaArg) -> i64 {
    let s = a.exp + b.exp;
    let spread = (a.exp.abs_ratio() + b.exp.abs_ratio()).ceil();
    (int(1) + spread / s).ceil().to_integer() * 2
}

trait AbsRatio {
    fn abs_ratio(self) -> Rat;
}

impl AbsRatio for Rat {
    fn abs_ratio(self) -> Rat {
        if self < int(0) {
            -self
        } else {
            self
        }
    }
}

/// Ramanujan's general theta function `f(a, b) = Σ a^{n(n+1)/2} b^{n(n−1)/2}`.
pub fn theta_f(a: ThetaArg, b: ThetaArg, prec: Rat) -> Result<Series> {
    theta_f_with_guard(a, b, prec, 0)
}

/// [`theta_f`] with the scan radius widened by `extra`; the result never
/// depends on `extra`.
pub fn theta_f_with_guard(a: ThetaArg, b: ThetaArg, prec: Rat, extra: i64) -> Result<Series> {
    let s = a.exp + b.exp;
    if s <= int(0) {
        return Err(Error::DivergentTheta(s));
    }
    let guard = scan_guard(a, b) + extra;
    let term = |n: i64| -> (Rat, BigRational) {
        let up = n * (n + 1) / 2;
        let down = n * (n - 1) / 2;
        let e = a.exp * up + b.exp * down;
        let neg = (a.negative && up.is_odd()) != (b.negative && down.is_odd());
        (e, coeff(if neg { -1 } else { 1 }))
    };
    let mut terms = vec![term(0)];
    for dir in [1i64, -1] {
        let mut n = dir;
        loop {
            let t = term(n);
            if n.abs() > guard && t.0 >= prec {
                break;
            }
            terms.push(t);
            n += dir;
        }
    }
    Ok(Series::from_terms(terms, prec))
}

/// `f_k(a, b)`: `f(a, b)` for even `k`, `f(−a, −b)` for odd `k`.
pub fn theta_f_parity(k: i64, a: ThetaArg, b: ThetaArg, prec: Rat) -> Result<Series> {
    if k.is_even() {
        theta_f(a, b, prec)
    } else {
        theta_f(a.flipped(), b.flipped(), prec)
    }
}

/// Evaluates the right side of the theta addition formula: with
/// `U_k = a^{k(k+1)/2} b^{k(k−1)/2}` and `V_k = a^{k(k−1)/2} b^{k(k+1)/2}`,
/// `f(a, b) = Σ_{r<n} U_r f(U_{n+r}/U_r, V_{n−r}/U_r)`.
pub fn theta_addition_dissect(a: ThetaArg, b: ThetaArg, n: u32, prec: Rat) -> Result<Series> {
    if n == 0 {
        return Err(Error::Domain("dissection order must be positive".into()));
    }
    if a.exp + b.exp <= int(0) {
        return Err(Error::DivergentTheta(a.exp + b.exp));
    }
    let n = n as i64;
    let big_u = |k: i64| a.pow(k * (k + 1) / 2) * b.pow(k * (k - 1) / 2);
    let big_v = |k: i64| a.pow(k * (k - 1) / 2) * b.pow(k * (k + 1) / 2);
    let mut total = Series::zero(prec);
    for r in 0..n {
        let ur = big_u(r);
        let x = big_u(n + r) / ur;
        let y = big_v(n - r) / ur;
        // The prefactor can carry a negative exponent; widen the inner
        // precision so the shifted product still reaches `prec`.
        let inner = theta_f(x, y, prec - ur.exp)?;
        let mut part = inner.shift(ur.exp);
        if ur.negative {
            part = part.negate();
        }
        total = total.add(&part);
    }
    Ok(total.truncate(prec))
}

/// `φ(q) = f(q, q) = Σ q^{n²}`.
pub fn phi(prec: Rat) -> Series {
    theta_f(ThetaArg::q(int(1)), ThetaArg::q(int(1)), prec).expect("convergent")
}

/// `ψ(q) = f(q, q³) = Σ_{n≥0} q^{n(n+1)/2}`.
pub fn psi(prec: Rat) -> Series {
    theta_f(ThetaArg::q(int(1)), ThetaArg::q(int(3)), prec).expect("convergent")
}

/// `E(q) = f(−q, −q²) = (q; q)_∞`.
pub fn euler_e(prec: Rat) -> Series {
    theta_f(ThetaArg::neg_q(int(1)), ThetaArg::neg_q(int(2)), prec).expect("convergent")
}

/// `κ(q) = (−q; q²)_∞`.
pub fn kappa(prec: Rat) -> Series {
    pochhammer_infinite(ThetaArg::neg_q(int(1)), int(2), prec).expect("positive exponent")
}

/// `η = q^{1/24} E(q)`, stored exactly on the lattice of 24ths.
pub fn eta(prec: Rat) -> Series {
    euler_e(prec - rat(1, 24)).shift(rat(1, 24))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series, n: i64) -> Vec<i64> {
        (0..n)
            .map(|e| {
                let c = s.coefficient_at(int(e)).unwrap();
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn finite_pochhammer_examples() {
        let p = pochhammer_finite(ThetaArg::q(int(1)), int(1), 0, int(10)).unwrap();
        assert_eq!(p, Series::one(int(10)));
        let p = pochhammer_finite(ThetaArg::q(int(1)), int(1), 2, int(10)).unwrap();
        assert_eq!(p, Series::from_integers(&[1, -1, -1, 1], int(10)));
        let p = pochhammer_finite(ThetaArg::neg_q(int(1)), int(2), 3, int(20)).unwrap();
        // (1+q)(1+q^3)(1+q^5)
        assert_eq!(
            p,
            Series::from_integers(&[1, 1, 0, 1, 1, 1, 1, 0, 1, 1], int(20))
        );
    }

    #[test]
    fn finite_pochhammer_with_nonpositive_exponent_is_exact() {
        // (q^-1; q)_3 = (1 - q^-1)(1 - 1)(1 - q) = 0
        let p = pochhammer_finite(ThetaArg::q(int(-1)), int(1), 3, int(5)).unwrap();
        assert!(p.is_zero());
        // (-q^-2; q^2)_2 = (1 + q^-2)(1 + 1) = 2 + 2 q^-2
        let p = pochhammer_finite(ThetaArg::neg_q(int(-2)), int(2), 2, int(1)).unwrap();
        assert_eq!(p.coefficient_at(int(-2)).unwrap(), coeff(2));
        assert_eq!(p.coefficient_at(int(0)).unwrap(), coeff(2));
    }

    #[test]
    fn infinite_pochhammer_rejects_nonpositive_exponent() {
        assert!(matches!(
            pochhammer_infinite(ThetaArg::q(int(0)), int(1), int(10)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn euler_product_matches_pentagonal_series() {
        let prod = pochhammer_infinite(ThetaArg::q(int(1)), int(1), int(30)).unwrap();
        let e = euler_e(int(30));
        assert!(prod.equals_to_order(&e, int(30)).unwrap().is_equal());
        assert_eq!(
            ints(&e, 16),
            vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]
        );
    }

    #[test]
    fn special_cases_have_expected_heads() {
        assert_eq!(ints(&phi(int(10)), 10), vec![1, 2, 0, 0, 2, 0, 0, 0, 0, 2]);
        assert_eq!(
            ints(&psi(int(11)), 11),
            vec![1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]
        );
        // κ(q) = (1+q)(1+q^3)(1+q^5)...
        assert_eq!(ints(&kappa(int(8)), 8), vec![1, 1, 0, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn eta_lives_on_twenty_fourths() {
        let h = eta(int(10));
        assert_eq!(h.valuation(), rat(1, 24));
        assert_eq!(h.denom(), 24);
        let exps: Vec<Rat> = h.terms().map(|(e, _)| e).collect();
        for e in exps {
            assert!((e - rat(1, 24)).is_integer());
        }
    }

    #[test]
    fn divergent_theta_is_rejected() {
        let r = theta_f(ThetaArg::q(int(1)), ThetaArg::q(int(-1)), int(10));
        assert!(matches!(r, Err(Error::DivergentTheta(_))));
    }

    #[test]
    fn theta_with_unit_argument_is_twice_psi() {
        // f(1, q^4) = 2 ψ(q^4)
        let f = theta_f(ThetaArg::q(int(0)), ThetaArg::q(int(4)), int(80)).unwrap();
        let two_psi = psi(int(20))
            .rescale_variable(int(4))
            .unwrap()
            .scale(&coeff(2));
        assert!(f.equals_to_order(&two_psi, int(80)).unwrap().is_equal());
    }

    #[test]
    fn parity_variant_flips_both_arguments() {
        let a = ThetaArg::q(int(1));
        let f1 = theta_f_parity(1, a, a, int(30)).unwrap();
        let phi_neg = phi(int(30)).negate_variable().unwrap();
        assert_eq!(f1, phi_neg);
        assert_eq!(theta_f_parity(2, a, a, int(30)).unwrap(), phi(int(30)));
    }

    #[test]
    fn widening_the_scan_window_changes_nothing() {
        let a = ThetaArg::neg_q(rat(-7, 3));
        let b = ThetaArg::q(rat(9, 2));
        let base = theta_f(a, b, int(60)).unwrap();
        for extra in [1, 5, 40] {
            assert_eq!(theta_f_with_guard(a, b, int(60), extra).unwrap(), base);
        }
    }

    #[test]
    fn dissection_examples() {
        let q = ThetaArg::q(int(1));
        // φ(q) = φ(q^4) + 2q ψ(q^8)
        let lhs = theta_addition_dissect(q, q, 2, int(100)).unwrap();
        let rhs = phi(int(25)).rescale_variable(int(4)).unwrap().add(
            &psi(int(13))
                .rescale_variable(int(8))
                .unwrap()
                .shift(int(1))
                .scale(&coeff(2))
                .truncate(int(100)),
        );
        assert!(lhs.equals_to_order(&rhs, int(100)).unwrap().is_equal());
        assert!(lhs
            .equals_to_order(&phi(int(100)), int(100))
            .unwrap()
            .is_equal());
        // ψ(q) = f(q^6, q^10) + q f(q^2, q^14)
        let q3 = ThetaArg::q(int(3));
        let lhs = theta_addition_dissect(q, q3, 2, int(100)).unwrap();
        let rhs = theta_f(ThetaArg::q(int(6)), ThetaArg::q(int(10)), int(100))
            .unwrap()
            .add(
                &theta_f(ThetaArg::q(int(2)), ThetaArg::q(int(14)), int(99))
                    .unwrap()
                    .shift(int(1)),
            );
        assert!(lhs.equals_to_order(&rhs, int(100)).unwrap().is_equal());
        let single = theta_addition_dissect(q, q3, 1, int(50)).unwrap();
        assert_eq!(single, theta_f(q, q3, int(50)).unwrap());
    }
}
