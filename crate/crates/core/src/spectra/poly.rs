//! Real polynomials, characteristic polynomials via the Faddeev-LeVerrier
//! recursion, and root isolation by sign scan + bisection + Newton polish.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// Order guard for the characteristic polynomial: coefficients of integer
/// matrices stay exactly representable in f64 up to this order.
const CHAR_POLY_MAX_ORDER: usize = 12;

/// Dense real polynomial, coefficients from the constant term upward.
/// The representation is normalized: the leading coefficient is nonzero
/// (the zero polynomial is stored as `[0]`).
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        RealPolynomial { coeffs }
    }

    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> RealPolynomial {
        if self.coeffs.len() == 1 {
            return RealPolynomial::new(vec![0.0]);
        }
        RealPolynomial::new(
            self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| k as f64 * c).collect(),
        )
    }

    /// Largest absolute coefficient; scales the residual tolerance in
    /// root-finding.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().fold(0.0f64, |acc, c| acc.max(c.abs()))
    }
}

/// Characteristic polynomial `det(xI - M)` (monic) by the Faddeev-LeVerrier
/// trace recursion. Guarded to order <= 12 against coefficient blow-up.
pub fn char_poly(m: &SquareMatrix) -> Result<RealPolynomial> {
    let n = m.order();
    if n == 0 {
        return Err(Error::domain("characteristic polynomial requires order >= 1"));
    }
    if n > CHAR_POLY_MAX_ORDER {
        return Err(Error::capability(format!(
            "characteristic polynomial is limited to order {CHAR_POLY_MAX_ORDER}"
        )));
    }
    // M_1 = A, c_1 = -tr(M_1); M_{k+1} = A (M_k + c_k I), c_{k+1} = -tr(M_{k+1})/(k+1).
    let mut c = vec![0.0f64; n + 1];
    c[n] = 1.0;
    let mut mk = m.clone();
    for k in 1..=n {
        let ck = -mk.trace() / k as f64;
        c[n - k] = ck;
        if k < n {
            let mut shifted = mk.clone();
            for i in 0..n {
                shifted.set(i, i, shifted.get(i, i) + ck);
            }
            mk = m.mul(&shifted);
        }
    }
    Ok(RealPolynomial::new(c))
}

/// Largest root of `p` in `[lo, hi]` to absolute accuracy 1e-12, found by a
/// rightmost sign scan, bisection, and a Newton polish. Errors when no sign
/// change is bracketed.
pub fn largest_real_root(p: &RealPolynomial, lo: f64, hi: f64) -> Result<f64> {
    if lo >= hi || lo.is_nan() || hi.is_nan() {
        return Err(Error::domain("root bracket requires lo < hi"));
    }
    const STEPS: usize = 4096;
    let width = hi - lo;
    let f_hi = p.eval(hi);
    if f_hi == 0.0 {
        return Ok(hi);
    }
    // Scan right to left for the rightmost sign change.
    let mut bracket = None;
    let mut right = hi;
    let mut f_right = f_hi;
    for k in (0..STEPS).rev() {
        let left = lo + width * k as f64 / STEPS as f64;
        let f_left = p.eval(left);
        if f_left == 0.0 {
            bracket = Some((left, left));
            break;
        }
        if f_left.signum() != f_right.signum() {
            bracket = Some((left, right));
            break;
        }
        right = left;
        f_right = f_left;
    }
    let (mut a, mut b) = match bracket {
        Some(br) => br,
        None => {
            return Err(Error::domain(format!(
                "no sign change of the polynomial in [{lo}, {hi}]"
            )))
        }
    };
    if a == b {
        return Ok(a);
    }
    let mut fa = p.eval(a);
    for _ in 0..80 {
        if b - a <= 1e-13 {
            break;
        }
        let mid = 0.5 * (a + b);
        let fm = p.eval(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    // Newton polish, kept inside the bracket.
    let dp = p.derivative();
    let mut x = 0.5 * (a + b);
    for _ in 0..6 {
        let fx = p.eval(x);
        let dfx = dp.eval(x);
        if dfx == 0.0 {
            break;
        }
        let next = x - fx / dfx;
        if next < a || next > b {
            break;
        }
        if (next - x).abs() <= 1e-15 * x.abs().max(1.0) {
            x = next;
            break;
        }
        x = next;
    }
    Ok(x)
}
