use num_rational::BigRational;
use num_traits::Zero;

use super::{reduced_forms, theta_of_form, QuadForm};
use crate::error::{Error, Result};
use crate::series::{int, Rat, Series};

/// Writes `f` as a rational combination of the theta series of the
/// representatives of discriminant `d`, checked coefficientwise below `order`.
///
/// Rows are taken greedily in exponent order until the square system has
/// full rank; every remaining coefficient is then verified.
pub fn decompose_in_class_basis(
    f: &Series,
    d: i64,
    order: Rat,
) -> Result<Vec<(QuadForm, BigRational)>> {
    let reps: Vec<QuadForm> = reduced_forms(d)?
        .representatives
        .iter()
        .map(|r| r.form)
        .collect();
    let k = reps.len();
    if order < int(2 * k as i64 + 20) {
        return Err(Error::Precision(format!(
            "decomposition over {k} forms needs order >= {}, got {order}",
            2 * k + 20
        )));
    }
    if f.precision() < order {
        return Err(Error::Precision(format!(
            "series known to {} but decomposition order is {order}",
            f.precision()
        )));
    }
    if !f.has_integer_support() {
        return Err(Error::Domain(
            "class-basis decomposition needs integer exponents".into(),
        ));
    }
    let basis: Vec<Series> = reps.iter().map(|&q| theta_of_form(q, order)).collect();
    let top = order.ceil().to_integer();
    let row = |e: i64| -> Result<Vec<BigRational>> {
        let mut r = Vec::with_capacity(k + 1);
        for b in &basis {
            r.push(b.coefficient_at(int(e))?);
        }
        r.push(f.coefficient_at(int(e))?);
        Ok(r)
    };

    // Reduced row echelon rows, each with its pivot column.
    let mut pivots: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let lo = f.valuation().floor().to_integer().min(0);
    for e in lo..top {
        if pivots.len() == k {
            break;
        }
        let mut r = row(e)?;
        for (col, prow) in &pivots {
            if !r[*col].is_zero() {
                let factor = r[*col].clone();
                for (x, y) in r.iter_mut().zip(prow) {
                    *x -= &factor * y;
                }
            }
        }
        match r[..k].iter().position(|x| !x.is_zero()) {
            Some(col) => {
                let inv = r[col].recip();
                for x in r.iter_mut() {
                    *x *= &inv;
                }
                for (_, prow) in pivots.iter_mut() {
                    if !prow[col].is_zero() {
                        let factor = prow[col].clone();
                        for (x, y) in prow.iter_mut().zip(&r) {
                            *x -= &factor * y;
                        }
                    }
                }
                pivots.push((col, r));
            }
            None if !r[k].is_zero() => {
                return Err(Error::NotInSpan { exponent: int(e) });
            }
            None => {}
        }
    }
    if pivots.len() < k {
        return Err(Error::BasisDegenerate(d));
    }
    let mut x = vec![BigRational::zero(); k];
    for (col, r) in &pivots {
        x[*col] = r[k].clone();
    }

    let mut combo = Series::zero(order);
    for (b, c) in basis.iter().zip(&x) {
        if !c.is_zero() {
            combo = combo.add(&b.scale(c));
        }
    }
    if let crate::series::Agreement::Mismatch { exponent, .. } =
        combo.equals_to_order(&f.truncate(order), order)?
    {
        return Err(Error::NotInSpan { exponent });
    }
    Ok(reps.into_iter().zip(x).collect())
}
