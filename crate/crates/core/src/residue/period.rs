use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use super::laurent::LaurentPolynomial;
use crate::error::{Error, Result};
use crate::lattice::rational_json;
use crate::toric::{Fan, PatchCoordinates, Section};

pub const NORMALIZATION: &str = "(2*pi*i)^N omitted";

/// `c_m = CT(f^m)`, the torus period of `dz / (z (1 - t f))` up to `(2 pi i)^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodSeries {
    pub coeffs: Vec<BigRational>,
}

impl PeriodSeries {
    pub fn normalization(&self) -> &'static str {
        NORMALIZATION
    }

    /// `{"normalization": ..., "coeffs": ["1", "0", ...]}`
    pub fn to_json(&self) -> Value {
        json!({
            "normalization": NORMALIZATION,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn to_numbers(&self) -> Vec<Value> {
        self.coeffs.iter().map(rational_json).collect()
    }
}

/// Repeated full multiplication; `f` must not involve `t`.
pub fn period_series(f: &LaurentPolynomial, order: usize) -> Result<PeriodSeries> {
    if !f.is_zero() && !f.is_t_free() {
        return Err(Error::InvalidFamily("period series needs a t-free Laurent polynomial".into()));
    }
    let f = f.set_t_zero();
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = LaurentPolynomial::one(f.nvars());
    for m in 0..=order {
        if m > 0 {
            power = &power * &f;
        }
        coeffs.push(power.constant_term().at_zero());
        if power.is_zero() {
            coeffs.resize(order + 1, BigRational::zero());
            break;
        }
    }
    Ok(PeriodSeries { coeffs })
}

/// Laurent representative `sum c_nu z^nu` of an anticanonical section on the
/// chart of the first maximal cone. The constant term of its powers does not
/// depend on the chart.
pub fn hypersurface_laurent(fan: &Fan, f: &Section) -> Result<LaurentPolynomial> {
    let chart = PatchCoordinates::canonical(fan, &fan.max_cones()[0])?;
    Ok(chart.character_sum(fan, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::projective_ci_family;

    fn ints(s: &PeriodSeries) -> Vec<i64> {
        s.coeffs.iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn quintic_and_cubic() {
        let q = projective_ci_family(3, &[5]).unwrap().spec;
        let f = hypersurface_laurent(q.fan(), &q.sections()[0]).unwrap();
        let s = period_series(&f, 10).unwrap();
        assert_eq!(ints(&s), vec![1, 0, 0, 0, 0, 120, 0, 0, 0, 0, 113400]);

        let c = projective_ci_family(1, &[3]).unwrap().spec;
        let f = hypersurface_laurent(c.fan(), &c.sections()[0]).unwrap();
        assert_eq!(ints(&period_series(&f, 6).unwrap()), vec![1, 0, 0, 6, 0, 0, 90]);
    }

    #[test]
    fn zero_section() {
        let s = period_series(&LaurentPolynomial::zero(3), 3).unwrap();
        assert_eq!(ints(&s), vec![1, 0, 0, 0]);
        assert_eq!(
            serde_json::to_string(&s.to_json()).unwrap(),
            r#"{"coeffs":["1","0","0","0"],"normalization":"(2*pi*i)^N omitted"}"#
        );
    }

    #[test]
    fn t_dependent_input_is_rejected() {
        assert!(period_series(&LaurentPolynomial::t(2), 2).is_err());
    }
}
