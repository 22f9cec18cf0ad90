//! The Rogers–Ramanujan functions `G`, `H` and Ramanujan's `U(r, s)`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::series::{int, Rat, Series};
use crate::theta::{pochhammer_infinite, ThetaArg};

/// `G(q) = 1 / ((q; q⁵)_∞ (q⁴; q⁵)_∞)`.
pub fn rr_g(prec: Rat) -> Series {
    mod5_product(1, 4, prec)
}

/// `H(q) = 1 / ((q²; q⁵)_∞ (q³; q⁵)_∞)`.
pub fn rr_h(prec: Rat) -> Series {
    mod5_product(2, 3, prec)
}

fn mod5_product(a: i64, b: i64, prec: Rat) -> Series {
    let pa = pochhammer_infinite(ThetaArg::q(int(a)), int(5), prec).expect("positive exponent");
    let pb = pochhammer_infinite(ThetaArg::q(int(b)), int(5), prec).expect("positive exponent");
    pa.mul(&pb).invert().expect("unit constant term")
}

/// Which half of the definition of `U(r, s)` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `r + s ≡ 0 (mod 5)`: `G(q^r)G(q^s) + q^{(r+s)/5} H(q^r)H(q^s)`.
    Sum,
    /// `s − r ≡ 0 (mod 5)`: `H(q^r)G(q^s) − q^{(s−r)/5} G(q^r)H(q^s)`.
    Difference,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UBranch {
    pub r: i64,
    pub s: i64,
    pub branch: Branch,
}

impl UBranch {
    /// Selects the branch; the sum branch wins when both congruences hold.
    pub fn new(r: i64, s: i64) -> Result<Self> {
        if r <= 0 || s <= 0 {
            return Err(Error::Domain(format!(
                "U(r, s) needs positive r and s, got ({r}, {s})"
            )));
        }
        let branch = if (r + s).mod_floor(&5) == 0 {
            Branch::Sum
        } else if (s - r).mod_floor(&5) == 0 {
            Branch::Difference
        } else {
            return Err(Error::Domain(format!(
                "U({r}, {s}) is undefined: neither r + s nor s - r is divisible by 5"
            )));
        };
        Ok(UBranch { r, s, branch })
    }

    /// Exponent of the `q` prefactor on the second product. Negative for
    /// difference-branch pairs with `s < r`, which makes `U` a Laurent series.
    pub fn shift(&self) -> i64 {
        match self.branch {
            Branch::Sum => (self.r + self.s) / 5,
            Branch::Difference => (self.s - self.r) / 5,
        }
    }
}

/// Ramanujan's function `U(r, s)`.
pub fn rr_u(r: i64, s: i64, prec: Rat) -> Result<Series> {
    let u = UBranch::new(r, s)?;
    let k = u.shift();
    // A negative shift costs that much precision in the second product.
    let work = prec + int((-k).max(0));
    let at = |f: fn(Rat) -> Series, m: i64| -> Series {
        f(work / m)
            .rescale_variable(int(m))
            .expect("positive rescale")
    };
    let (first, second) = match u.branch {
        Branch::Sum => (
            at(rr_g, r).mul(&at(rr_g, s)),
            at(rr_h, r).mul(&at(rr_h, s)).shift(int(k)),
        ),
        Branch::Difference => (
            at(rr_h, r).mul(&at(rr_g, s)),
            at(rr_g, r).mul(&at(rr_h, s)).shift(int(k)).negate(),
        ),
    };
    Ok(first.add(&second).truncate(prec))
}
