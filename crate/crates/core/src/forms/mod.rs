//! Positive definite binary quadratic forms, their theta series, reduced
//! representatives per discriminant and the two-parameter family `R`.

mod decompose;
mod r_function;

pub use decompose::decompose_in_class_basis;
pub use r_function::{qrr_params, r_double_sum, r_function, RParams};

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::series::{Rat, Series};

/// The form `a n² + b n m + c m²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let f = QuadForm { a, b, c };
        if a <= 0 || c <= 0 || f.discriminant() >= 0 {
            return Err(Error::Parameter(format!(
                "({a},{b},{c}) is not positive definite"
            )));
        }
        Ok(f)
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    pub fn value(&self, n: i64, m: i64) -> i64 {
        self.a * n * n + self.b * n * m + self.c * m * m
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// `Σ_{n,m} q^{a n² + b n m + c m²}` to precision `prec`.
pub fn theta_of_form(form: QuadForm, prec: Rat) -> Series {
    let top = prec.ceil().to_integer() - 1;
    if top < 0 {
        return Series::zero(prec);
    }
    let disc = -form.discriminant();
    // On the ellipse value <= top: n² <= 4c·top/|D| and m² <= 4a·top/|D|.
    let n_max = isqrt(4 * form.c * top / disc) + 1;
    let m_max = isqrt(4 * form.a * top / disc) + 1;
    let mut counts = vec![0i64; (top + 1) as usize];
    for n in -n_max..=n_max {
        for m in -m_max..=m_max {
            let v = form.value(n, m);
            if v <= top {
                counts[v as usize] += 1;
            }
        }
    }
    Series::from_integers(&counts, prec)
}

pub(crate) fn isqrt(x: i64) -> i64 {
    if x <= 0 {
        return 0;
    }
    let mut r = (x as f64).sqrt() as i64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedForm {
    pub form: QuadForm,
    pub primitive: bool,
}

/// Reduced forms of one discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedForms {
    pub discriminant: i64,
    /// Every reduced form, primitive and imprimitive.
    pub forms: Vec<ReducedForm>,
    /// One form per `(a, ±b, c)` pair, the `b >= 0` member; these have
    /// pairwise distinct theta series in general.
    pub representatives: Vec<ReducedForm>,
}

impl ReducedForms {
    pub fn primitive_representatives(&self) -> impl Iterator<Item = &ReducedForm> {
        self.representatives.iter().filter(|f| f.primitive)
    }
}

/// Enumerates forms with `|b| <= a <= c`, `b >= 0` when `|b| = a` or `a = c`.
pub fn reduced_forms(d: i64) -> Result<ReducedForms> {
    if d >= 0 || !matches!(d.mod_floor(&4), 0 | 1) {
        return Err(Error::Domain(format!(
            "{d} is not a negative discriminant (need D < 0, D ≡ 0 or 1 mod 4)"
        )));
    }
    let mut forms = Vec::new();
    let mut a = 1;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (b < 0 && a == c) {
                continue;
            }
            let form = QuadForm { a, b, c };
            forms.push(ReducedForm {
                form,
                primitive: form.is_primitive(),
            });
        }
        a += 1;
    }
    let representatives = forms.iter().filter(|f| f.form.b >= 0).copied().collect();
    Ok(ReducedForms {
        discriminant: d,
        forms,
        representatives,
    })
}
