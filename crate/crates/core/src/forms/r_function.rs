use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::QuadForm;
use crate::error::{Error, Result};
use crate::series::{int, Rat, Series};
use crate::theta::{theta_f_parity, ThetaArg};

/// Parameters `(ε, δ, l, t, α, β, m, p, λ)` of the family `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RParams {
    pub eps: i64,
    pub delta: i64,
    pub l: Rat,
    pub t: Rat,
    pub alpha: i64,
    pub beta: i64,
    pub m: i64,
    pub p: i64,
    pub lambda: i64,
}

impl RParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        eps: i64,
        delta: i64,
        l: Rat,
        t: Rat,
        alpha: i64,
        beta: i64,
        m: i64,
        p: i64,
        lambda: i64,
    ) -> Result<Self> {
        let params = RParams {
            eps,
            delta,
            l,
            t,
            alpha,
            beta,
            m,
            p,
            lambda,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha <= 0 || self.beta <= 0 || self.p <= 0 || self.lambda <= 0 {
            return Err(Error::Parameter(format!(
                "alpha, beta, p, lambda must be positive in {self:?}"
            )));
        }
        if self.alpha * self.m * self.m + self.beta != self.p * self.lambda {
            return Err(Error::Parameter(format!(
                "alpha*m^2 + beta = {} differs from p*lambda = {}",
                self.alpha * self.m * self.m + self.beta,
                self.p * self.lambda
            )));
        }
        Ok(())
    }

    /// Parameters with the roles of the two summation indices exchanged:
    /// `R(δ, ε, t, l, 1, αβ, αm, λ, pα)`.
    pub fn swapped(&self) -> RParams {
        RParams {
            eps: self.delta,
            delta: self.eps,
            l: self.t,
            t: self.l,
            alpha: 1,
            beta: self.alpha * self.beta,
            m: self.alpha * self.m,
            p: self.lambda,
            lambda: self.p * self.alpha,
        }
    }

    /// Trades `(α, β, m, p)` for `(α₁, β₁, m₁, p₁)` with the same `αβ` and
    /// `λ`: with `a = (αm − α₁m₁)/λ` the result is
    /// `R(ε, δ + aε, l, t + al, α₁, β₁, m₁, p₁, λ)`.
    pub fn reparametrized(&self, alpha1: i64, beta1: i64, m1: i64) -> Result<RParams> {
        if alpha1 * beta1 != self.alpha * self.beta {
            return Err(Error::Parameter(format!(
                "alpha1*beta1 = {} differs from alpha*beta = {}",
                alpha1 * beta1,
                self.alpha * self.beta
            )));
        }
        let shift = self.alpha * self.m - alpha1 * m1;
        if shift % self.lambda != 0 {
            return Err(Error::Parameter(format!(
                "lambda = {} does not divide alpha*m - alpha1*m1 = {shift}",
                self.lambda
            )));
        }
        let top = alpha1 * m1 * m1 + beta1;
        if top % self.lambda != 0 {
            return Err(Error::Parameter(format!(
                "lambda = {} does not divide alpha1*m1^2 + beta1 = {top}",
                self.lambda
            )));
        }
        let a = shift / self.lambda;
        RParams::new(
            self.eps,
            self.delta + a * self.eps,
            self.l,
            self.t + self.l * a,
            alpha1,
            beta1,
            m1,
            top / self.lambda,
            self.lambda,
        )
    }
}

/// `(a, b, c) = R(0, 0, 0, 0, 1, −D, b, 2c, 2a)`.
pub fn qrr_params(form: QuadForm) -> RParams {
    RParams {
        eps: 0,
        delta: 0,
        l: int(0),
        t: int(0),
        alpha: 1,
        beta: -form.discriminant(),
        m: form.b,
        p: 2 * form.c,
        lambda: 2 * form.a,
    }
}

/// Lower bound for the exponents occurring in `f(±q^x, ±q^y)`.
fn theta_floor(x: Rat, y: Rat) -> Rat {
    let s = x + y;
    let e = |n: i64| x * (n * (n + 1) / 2) + y * (n * (n - 1) / 2);
    let vertex = (y - x) / (s * 2);
    let n0 = vertex.floor().to_integer();
    e(n0).min(e(n0 + 1)).min(int(0))
}

/// The `p`-term sum of products of two theta functions defining `R`.
pub fn r_function(params: &RParams, prec: Rat) -> Result<Series> {
    params.validate()?;
    let RParams {
        eps,
        delta,
        l,
        t,
        alpha,
        beta,
        m,
        p,
        lambda,
    } = *params;
    let second_parity = eps * p + m * delta;
    let mut total = Series::zero(prec);
    for k in 0..p {
        let n = t + 2 * k;
        let lead = (n * n * lambda + l * l * (p * alpha) + n * l * (2 * alpha * m)) / 8;
        let (x1, y1) = (
            (int(1) + l) * (p * alpha) / 2 + n * (alpha * m) / 2,
            (int(1) - l) * (p * alpha) / 2 - n * (alpha * m) / 2,
        );
        let (x2, y2) = (
            int(p * beta) / 2 + n * beta / 2,
            int(p * beta) / 2 - n * beta / 2,
        );
        // Either theta factor can start below q^0, so a large `lead` alone
        // does not put the term out of range.
        let (low1, low2) = (theta_floor(x1, y1), theta_floor(x2, y2));
        if lead + low1 + low2 >= prec {
            continue;
        }
        let target = prec - lead;
        let first = theta_f_parity(delta, ThetaArg::q(x1), ThetaArg::q(y1), target - low2)?;
        let second = theta_f_parity(
            second_parity,
            ThetaArg::q(x2),
            ThetaArg::q(y2),
            target - low1,
        )?;
        let mut term = first.mul(&second).shift(lead);
        if (eps * k).is_odd() {
            term = term.negate();
        }
        total = total.add(&term);
    }
    Ok(total.truncate(prec))
}

/// Direct double sum `Σ (−1)^{δv+εu} q^{(λU² + 2αmUV + pαV²)/8}` with
/// `U = 2u + t`, `V = 2v + l`.
pub fn r_double_sum(params: &RParams, prec: Rat) -> Result<Series> {
    params.validate()?;
    let RParams {
        eps,
        delta,
        l,
        t,
        alpha,
        beta,
        m,
        p,
        lambda,
    } = *params;
    let limit = prec * 8;
    let limit_f = limit.to_f64().unwrap_or(f64::MAX).max(0.0);
    // Ellipse bounds for λU² + 2αmUV + pαV² < limit, discriminant −4αβ.
    let u_max = (limit_f * p as f64 / beta as f64).sqrt() + 1.0;
    let v_max = (limit_f * lambda as f64 / (alpha * beta) as f64).sqrt() + 1.0;
    let range = |max: f64, shift: Rat| {
        let s = shift.to_f64().unwrap();
        let lo = ((-max - s) / 2.0).floor() as i64 - 1;
        let hi = ((max - s) / 2.0).ceil() as i64 + 1;
        lo..=hi
    };
    let mut terms = Vec::new();
    for u in range(u_max, t) {
        let big_u = t + 2 * u;
        for v in range(v_max, l) {
            let big_v = l + 2 * v;
            let e = (big_u * big_u * lambda
                + big_u * big_v * (2 * alpha * m)
                + big_v * big_v * (p * alpha))
                / 8;
            if e >= prec {
                continue;
            }
            let c = if (delta * v + eps * u).is_odd() {
                -BigRational::one()
            } else {
                BigRational::one()
            };
            terms.push((e, c));
        }
    }
    Ok(Series::from_terms(terms, prec))
}
