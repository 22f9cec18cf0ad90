//! Exact truncated Laurent series in `q` over a rational exponent lattice.
//!
//! A [`Series`] stores coefficients densely on the lattice `(1/denom)·Z`
//! starting at lattice index `offset`, together with an absolute precision:
//! every coefficient at an exponent below `prec` is exact, nothing is known
//! at or above it. All operations return new values; nothing mutates in place.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational used for exponents and precisions.
pub type Rat = Ratio<i64>;

/// Builds a [`Rat`] from a numerator and denominator.
pub fn rat(n: i64, d: i64) -> Rat {
    Ratio::new(n, d)
}

/// Builds an integral [`Rat`].
pub fn int(n: i64) -> Rat {
    Ratio::from_integer(n)
}

/// Converts an `i64` into an exact coefficient.
pub fn coeff(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

// Convolution entries are accumulated in i128 while every input coefficient
// is an integer of magnitude below this bound.
const FAST_LIMIT: i64 = 1 << 62;

/// Smallest lattice index `i` (on lattice `d`) with `i/d >= prec`.
fn index_bound(prec: Rat, d: i64) -> i64 {
    (prec * d).ceil().to_integer()
}

/// Outcome of comparing two series to a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Agreement {
    Equal,
    Mismatch {
        exponent: Rat,
        lhs: BigRational,
        rhs: BigRational,
    },
}

impl Agreement {
    pub fn is_equal(&self) -> bool {
        matches!(self, Agreement::Equal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    denom: i64,
    offset: i64,
    coeffs: Vec<BigRational>,
    prec: Rat,
}

impl Series {
    /// The series known to be zero below `prec`.
    pub fn zero(prec: Rat) -> Self {
        Series {
            denom: 1,
            offset: 0,
            coeffs: Vec::new(),
            prec,
        }
    }

    pub fn one(prec: Rat) -> Self {
        Self::constant(BigRational::one(), prec)
    }

    pub fn constant(c: BigRational, prec: Rat) -> Self {
        Self::from_terms([(int(0), c)], prec)
    }

    /// `c·q^e` known to precision `prec`.
    pub fn monomial(c: BigRational, e: Rat, prec: Rat) -> Result<Self> {
        if prec <= e {
            return Err(Error::Precision(format!(
                "monomial q^{e} requires precision above {e}, got {prec}"
            )));
        }
        Ok(Self::from_terms([(e, c)], prec))
    }

    /// Sums the given `(exponent, coefficient)` terms, dropping those at or
    /// above `prec`. Repeated exponents accumulate.
    pub fn from_terms<I>(terms: I, prec: Rat) -> Self
    where
        I: IntoIterator<Item = (Rat, BigRational)>,
    {
        let terms: Vec<(Rat, BigRational)> = terms
            .into_iter()
            .filter(|(e, c)| *e < prec && !c.is_zero())
            .collect();
        if terms.is_empty() {
            return Self::zero(prec);
        }
        let denom = terms.iter().fold(1i64, |d, (e, _)| d.lcm(e.denom()));
        let index = |e: &Rat| (e * denom).to_integer();
        let lo = terms.iter().map(|(e, _)| index(e)).min().unwrap();
        let hi = terms.iter().map(|(e, _)| index(e)).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(index(&e) - lo) as usize] += c;
        }
        Series {
            denom,
            offset: lo,
            coeffs,
            prec,
        }
        .normalized()
    }

    /// Integer coefficients at exponents `0, 1, 2, …`.
    pub fn from_integers(coeffs: &[i64], prec: Rat) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (int(i as i64), coeff(c))),
            prec,
        )
    }

    fn from_lattice(denom: i64, offset: i64, coeffs: Vec<BigRational>, prec: Rat) -> Self {
        Series {
            denom,
            offset,
            coeffs,
            prec,
        }
        .normalized()
    }

    /// Trims zero ends, drops entries at or above the precision and
    /// coarsens the lattice to the smallest one carrying the support.
    fn normalized(mut self) -> Self {
        let bound = index_bound(self.prec, self.denom);
        let keep = (bound - self.offset).clamp(0, self.coeffs.len() as i64) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            return Self::zero(self.prec);
        }
        self.coeffs.drain(..lead);
        self.offset += lead as i64;

        let mut g = self.denom;
        for (i, c) in self.coeffs.iter().enumerate() {
            if g == 1 {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(&(self.offset + i as i64));
            }
        }
        if g > 1 {
            let coeffs = std::mem::take(&mut self.coeffs);
            self.coeffs = coeffs.into_iter().step_by(g as usize).collect();
            self.offset /= g;
            self.denom /= g;
        }
        self
    }

    pub fn precision(&self) -> Rat {
        self.prec
    }

    /// Least exponent carrying a nonzero coefficient; the precision for a
    /// series that is zero so far.
    pub fn valuation(&self) -> Rat {
        if self.coeffs.is_empty() {
            self.prec
        } else {
            rat(self.offset, self.denom)
        }
    }

    /// Lattice denominator of the (coarsest) lattice carrying the support.
    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Rat, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (rat(self.offset + i as i64, self.denom), c))
    }

    pub fn coefficient_at(&self, e: Rat) -> Result<BigRational> {
        if e >= self.prec {
            return Err(Error::Precision(format!(
                "coefficient of q^{e} requested but precision is {}",
                self.prec
            )));
        }
        let scaled = e * self.denom;
        if !scaled.is_integer() {
            return Ok(BigRational::zero());
        }
        let i = scaled.to_integer() - self.offset;
        Ok(usize::try_from(i)
            .ok()
            .and_then(|i| self.coeffs.get(i))
            .cloned()
            .unwrap_or_else(BigRational::zero))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// True when every exponent in the support is an integer.
    pub fn has_integer_support(&self) -> bool {
        self.denom == 1
    }

    fn require_integer_support(&self, op: &str) -> Result<()> {
        if self.has_integer_support() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{op} needs integer exponents, series lives on lattice 1/{}",
                self.denom
            )))
        }
    }

    /// Lowers the precision to `prec` (no-op if already lower).
    pub fn truncate(&self, prec: Rat) -> Self {
        if prec >= self.prec {
            return self.clone();
        }
        Series {
            prec,
            ..self.clone()
        }
        .normalized()
    }

    /// Nonzero coefficients re-indexed on the finer lattice `d`.
    fn indexed(&self, d: i64) -> Vec<(i64, &BigRational)> {
        let k = d / self.denom;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| ((self.offset + i as i64) * k, c))
            .collect()
    }

    /// Small-integer view of the nonzero coefficients, if one exists.
    fn fast_indexed(&self, d: i64) -> Option<Vec<(i64, i128)>> {
        let k = d / self.denom;
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return None;
            }
            let v = c.numer().to_i64().filter(|v| v.abs() < FAST_LIMIT)?;
            out.push(((self.offset + i as i64) * k, v as i128));
        }
        Some(out)
    }

    pub fn add(&self, other: &Series) -> Series {
        let prec = self.prec.min(other.prec);
        let d = self.denom.lcm(&other.denom);
        let bound = index_bound(prec, d);
        let a = self.indexed(d);
        let b = other.indexed(d);
        let lo = a.iter().chain(b.iter()).map(|(i, _)| *i).min();
        let Some(lo) = lo else {
            return Series::zero(prec);
        };
        if lo >= bound {
            return Series::zero(prec);
        }
        let mut coeffs = vec![BigRational::zero(); (bound - lo) as usize];
        for (i, c) in a.into_iter().chain(b) {
            if i < bound {
                coeffs[(i - lo) as usize] += c;
            }
        }
        Series::from_lattice(d, lo, coeffs, prec)
    }

    pub fn negate(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.negate())
    }

    pub fn scale(&self, c: &BigRational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            ..self.clone()
        }
        .normalized()
    }

    /// Exact multiplication by `q^e`; the precision shifts by `e` as well.
    pub fn shift(&self, e: Rat) -> Series {
        let d = self.denom.lcm(e.denom());
        let k = d / self.denom;
        let step = (e * d).to_integer();
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * k as usize);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                coeffs.extend(std::iter::repeat_n(BigRational::zero(), (k - 1) as usize));
            }
            coeffs.push(c.clone());
        }
        Series::from_lattice(d, self.offset * k + step, coeffs, self.prec + e)
    }

    /// Cauchy product with precision `min(prec_f + val_g, prec_g + val_f)`.
    pub fn mul(&self, other: &Series) -> Series {
        let prec = (self.prec + other.valuation()).min(other.prec + self.valuation());
        let d = self.denom.lcm(&other.denom);
        if self.is_zero() || other.is_zero() {
            return Series::zero(prec);
        }
        let bound = index_bound(prec, d);
        let lo = self.offset * (d / self.denom) + other.offset * (d / other.denom);
        if lo >= bound {
            return Series::zero(prec);
        }
        let len = (bound - lo) as usize;
        if let (Some(a), Some(b)) = (self.fast_indexed(d), other.fast_indexed(d)) {
            if let Some(acc) = convolve_fast(&a, &b, lo, bound, len) {
                let coeffs = acc
                    .into_iter()
                    .map(|v| BigRational::from_integer(BigInt::from(v)))
                    .collect();
                return Series::from_lattice(d, lo, coeffs, prec);
            }
        }
        let a = self.indexed(d);
        let b = other.indexed(d);
        let mut coeffs = vec![BigRational::zero(); len];
        for &(i, x) in &a {
            for &(j, y) in &b {
                if i + j >= bound {
                    break;
                }
                coeffs[(i + j - lo) as usize] += x * y;
            }
        }
        Series::from_lattice(d, lo, coeffs, prec)
    }

    /// `self^k` by binary powering; `self^0` is `1` at the precision of `self`.
    pub fn pow(&self, k: u32) -> Series {
        let mut result = Series::one(self.prec);
        let mut base = self.clone();
        let mut e = k;
        let mut first = true;
        while e > 0 {
            if e & 1 == 1 {
                result = if first {
                    base.clone()
                } else {
                    result.mul(&base)
                };
                first = false;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplicative inverse, valid to precision `prec − 2·valuation`.
    pub fn invert(&self) -> Result<Series> {
        if self.is_zero() {
            return Err(Error::NotInvertible(self.prec));
        }
        let d = self.denom;
        let v = self.valuation();
        let lead = self.coeffs[0].clone();
        let prec = self.prec - v * 2;
        // h = self / (lead q^v), computed on indices 0..n.
        let n = (index_bound(self.prec - v, d)).max(0) as usize;
        let h: Vec<(usize, &BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(i, c)| !c.is_zero() && *i < n)
            .collect();

        let fast_lead = lead.is_integer() && lead.numer().abs().is_one();
        let fast = fast_lead
            && h.iter().all(|(_, c)| {
                c.is_integer() && c.numer().to_i64().is_some_and(|v| v.abs() < FAST_LIMIT)
            });
        let coeffs = if fast {
            let sign: i128 = if lead.is_positive() { 1 } else { -1 };
            let hv: Vec<(usize, i128)> = h
                .iter()
                .map(|(i, c)| (*i, sign * c.numer().to_i64().unwrap() as i128))
                .collect();
            invert_fast(&hv, n).map(|g| {
                g.into_iter()
                    .map(|x| BigRational::from_integer(BigInt::from(x * sign)))
                    .collect::<Vec<_>>()
            })
        } else {
            None
        };
        let coeffs = coeffs.unwrap_or_else(|| {
            let inv_lead = lead.recip();
            let mut g: Vec<BigRational> = Vec::with_capacity(n);
            for k in 0..n {
                if k == 0 {
                    g.push(BigRational::one());
                    continue;
                }
                let mut acc = BigRational::zero();
                for &(j, c) in &h {
                    if j > k {
                        break;
                    }
                    acc -= (c * &inv_lead) * &g[k - j];
                }
                g.push(acc);
            }
            g.into_iter().map(|x| x * &inv_lead).collect()
        });
        Ok(Series::from_lattice(d, -self.offset, coeffs, prec))
    }

    /// Substitutes `q ↦ q^k` for a positive rational `k`.
    pub fn rescale_variable(&self, k: Rat) -> Result<Series> {
        if k <= int(0) {
            return Err(Error::Domain(format!(
                "rescale factor must be positive, got {k}"
            )));
        }
        let (kn, kd) = (*k.numer(), *k.denom());
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * kn as usize);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                coeffs.extend(std::iter::repeat_n(BigRational::zero(), (kn - 1) as usize));
            }
            coeffs.push(c.clone());
        }
        Ok(Series::from_lattice(
            self.denom * kd,
            self.offset * kn,
            coeffs,
            self.prec * k,
        ))
    }

    /// Substitutes `q ↦ −q`; defined only for integer-exponent support.
    pub fn negate_variable(&self) -> Result<Series> {
        self.require_integer_support("negate_variable")?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if (self.offset + i as i64).is_odd() {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        Ok(Series {
            coeffs,
            ..self.clone()
        })
    }

    /// Subseries `Σ a(mj + r) q^j`.
    pub fn extract_progression(&self, m: i64, r: i64) -> Result<Series> {
        if m <= 0 || r < 0 || r >= m {
            return Err(Error::Domain(format!(
                "progression needs m > 0 and 0 <= r < m, got m={m}, r={r}"
            )));
        }
        self.require_integer_support("extract_progression")?;
        let prec = int(((self.prec - r) / m).ceil().to_integer());
        if self.is_zero() {
            return Ok(Series::zero(prec));
        }
        let lo = Integer::div_ceil(&(self.offset - r), &m);
        let hi = index_bound(prec, 1);
        let coeffs = (lo..hi.max(lo))
            .map(|j| self.lattice_coeff(m * j + r))
            .collect();
        Ok(Series::from_lattice(1, lo, coeffs, prec))
    }

    fn lattice_coeff(&self, i: i64) -> BigRational {
        usize::try_from(i - self.offset)
            .ok()
            .and_then(|k| self.coeffs.get(k))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `U_5`: keeps the coefficients at multiples of 5, `a(5n) q^n`.
    pub fn u5(&self) -> Result<Series> {
        self.extract_progression(5, 0)
    }

    /// Hecke-type operator at 5: `a(n) ↦ a(5n) + a(n/5)`.
    pub fn t5(&self) -> Result<Series> {
        self.require_integer_support("t5")?;
        if self.prec < int(5) {
            return Err(Error::Precision(format!(
                "t5 needs precision at least 5, got {}",
                self.prec
            )));
        }
        let prec = int((self.prec / 5).floor().to_integer());
        if self.is_zero() {
            return Ok(Series::zero(prec));
        }
        let hi = prec.to_integer();
        let lo = Integer::div_ceil(&self.offset, &5).min(self.offset * 5);
        let coeffs = (lo..hi.max(lo))
            .map(|n| {
                let mut c = self.lattice_coeff(5 * n);
                if n % 5 == 0 {
                    c += self.lattice_coeff(n / 5);
                }
                c
            })
            .collect();
        Ok(Series::from_lattice(1, lo, coeffs, prec))
    }

    /// Compares coefficients at every exponent below `n`.
    pub fn equals_to_order(&self, other: &Series, n: Rat) -> Result<Agreement> {
        if self.prec < n || other.prec < n {
            return Err(Error::Precision(format!(
                "comparison to order {n} needs both precisions >= {n}, have {} and {}",
                self.prec, other.prec
            )));
        }
        let mut a = self.terms().take_while(|(e, _)| *e < n).peekable();
        let mut b = other.terms().take_while(|(e, _)| *e < n).peekable();
        loop {
            let mismatch = match (a.peek(), b.peek()) {
                (None, None) => return Ok(Agreement::Equal),
                (Some(&(e, x)), None) => (e, x.clone(), BigRational::zero()),
                (None, Some(&(e, y))) => (e, BigRational::zero(), y.clone()),
                (Some(&(e, x)), Some(&(f, y))) => match e.cmp(&f) {
                    Ordering::Less => (e, x.clone(), BigRational::zero()),
                    Ordering::Greater => (f, BigRational::zero(), y.clone()),
                    Ordering::Equal => {
                        if x != y {
                            (e, x.clone(), y.clone())
                        } else {
                            a.next();
                            b.next();
                            continue;
                        }
                    }
                },
            };
            return Ok(Agreement::Mismatch {
                exponent: mismatch.0,
                lhs: mismatch.1,
                rhs: mismatch.2,
            });
        }
    }
}

fn convolve_fast(
    a: &[(i64, i128)],
    b: &[(i64, i128)],
    lo: i64,
    bound: i64,
    len: usize,
) -> Option<Vec<i128>> {
    let mut acc = vec![0i128; len];
    for &(i, x) in a {
        for &(j, y) in b {
            if i + j >= bound {
                break;
            }
            let slot = &mut acc[(i + j - lo) as usize];
            *slot = slot.checked_add(x.checked_mul(y)?)?;
        }
    }
    // Results feed later products; keep them inside the fast range.
    acc.iter()
        .all(|v| v.unsigned_abs() < FAST_LIMIT as u128)
        .then_some(acc)
}

fn invert_fast(h: &[(usize, i128)], n: usize) -> Option<Vec<i128>> {
    let mut g = vec![0i128; n];
    if n == 0 {
        return Some(g);
    }
    g[0] = 1;
    for k in 1..n {
        let mut acc = 0i128;
        for &(j, c) in h {
            if j > k {
                break;
            }
            acc = acc.checked_sub(c.checked_mul(g[k - j])?)?;
        }
        if acc.unsigned_abs() >= FAST_LIMIT as u128 {
            return None;
        }
        g[k] = acc;
    }
    Some(g)
}

struct Exp(Rat);

impl fmt::Display for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() && !self.0.is_negative() {
            write!(f, "{}", self.0)
        } else {
            write!(f, "({})", self.0)
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (e.is_zero(), unit) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "q^{}", Exp(e))?,
                (false, false) => write!(f, "{mag}*q^{}", Exp(e))?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(q^{})", Exp(self.prec))
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.negate()
    }
}
