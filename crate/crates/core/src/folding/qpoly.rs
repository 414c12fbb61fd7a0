//! Integer Laurent polynomials in one variable `q`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// `Σ coeffs[k] q^{low + k}`, kept normalized: no zero coefficient at either
/// end, and the zero polynomial has no coefficients and `low == 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    low: i32,
    coeffs: Vec<i128>,
}

impl QPoly {
    pub fn zero() -> QPoly {
        QPoly::default()
    }

    pub fn one() -> QPoly {
        QPoly::q_pow(0)
    }

    /// `q^n`; negative exponents are allowed.
    pub fn q_pow(n: i32) -> QPoly {
        QPoly { low: n, coeffs: vec![1] }
    }

    /// `q^a (q - 1)^b`, expanded.
    pub fn lines_and_cuts(a: u32, b: u32) -> QPoly {
        let mut p = QPoly::q_pow(a as i32);
        for _ in 0..b {
            p = p.times_q_minus_one();
        }
        p
    }

    /// Builds `Σ coeffs[k] q^{low + k}`.
    pub fn from_coeffs(low: i32, coeffs: Vec<i128>) -> QPoly {
        let mut p = QPoly { low, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a non-zero coefficient.
    pub fn degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Lowest exponent with a non-zero coefficient.
    pub fn low_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn coeff(&self, exp: i32) -> i128 {
        usize::try_from(exp - self.low)
            .ok()
            .and_then(|k| self.coeffs.get(k).copied())
            .unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs with non-zero coefficient, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.low + k as i32, c))
    }

    pub fn times_q(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        QPoly { low: self.low + 1, coeffs: self.coeffs.clone() }
    }

    pub fn times_q_minus_one(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![0i128; self.coeffs.len() + 1];
        for (k, &a) in self.coeffs.iter().enumerate() {
            c[k + 1] += a;
            c[k] -= a;
        }
        QPoly::from_coeffs(self.low, c)
    }

    /// Value at an integer `q`; `q = 0` requires no negative exponents.
    pub fn eval(&self, q: i128) -> Option<i128> {
        if self.is_zero() {
            return Some(0);
        }
        if self.low < 0 && q == 0 {
            return None;
        }
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(q)?.checked_add(c)?;
        }
        if self.low >= 0 {
            acc.checked_mul(q.checked_pow(self.low as u32)?)
        } else {
            let d = q.checked_pow(self.low.unsigned_abs())?;
            (acc % d == 0).then(|| acc / d)
        }
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> i128 {
        self.coeffs.iter().sum()
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.degree().unwrap().max(rhs.degree().unwrap());
        let coeffs = (low..=high).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        QPoly::from_coeffs(low, coeffs)
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(mut self) -> QPoly {
        for c in self.coeffs.iter_mut() {
            *c = -*c;
        }
        self
    }
}

impl Sub for QPoly {
    type Output = QPoly;

    fn sub(self, rhs: QPoly) -> QPoly {
        self + (-rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(self.low + rhs.low, c)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl fmt::Display for QPoly {
    /// Descending powers, e.g. `q^2 - 2q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<(i32, i128)> = self.terms().collect();
        for (n, &(e, c)) in terms.iter().rev().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            match (n, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mono = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            match (mag, mono.is_empty()) {
                (1, false) => f.write_str(&mono)?,
                (_, true) => write!(f, "{mag}")?,
                _ => write!(f, "{mag}{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn binom(n: u32, k: u32) -> i128 {
        (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
    }

    #[test]
    fn lines_and_cuts_expand_binomially() {
        let p = QPoly::lines_and_cuts(2, 3);
        for k in 0..=3u32 {
            let sign = if (3 - k) % 2 == 0 { 1 } else { -1 };
            assert_eq!(p.coeff(2 + k as i32), sign * binom(3, k));
        }
        assert_eq!(p.degree(), Some(5));
        assert_eq!(p.low_degree(), Some(2));
        assert_eq!(p.eval_at_one(), 0);
        assert_eq!(QPoly::lines_and_cuts(4, 0).eval_at_one(), 1);
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::one().to_string(), "1");
        assert_eq!(QPoly::lines_and_cuts(0, 2).to_string(), "q^2 - 2q + 1");
        assert_eq!((-QPoly::q_pow(1)).to_string(), "-q");
        assert_eq!(QPoly::from_coeffs(-1, vec![3, 0, 1]).to_string(), "q + 3q^-1");
    }

    #[test]
    fn cancellation_normalizes() {
        let p = QPoly::lines_and_cuts(1, 1) - QPoly::q_pow(2);
        assert_eq!(p, -QPoly::q_pow(1));
        assert!((p.clone() - p).is_zero());
    }

    #[test]
    fn eval_handles_negative_exponents() {
        let p = QPoly::from_coeffs(-2, vec![4, 0, 1]);
        assert_eq!(p.eval(2), Some(2));
        assert_eq!(p.eval(3), None);
        assert_eq!(p.eval(0), None);
    }

    proptest! {
        #[test]
        fn ring_laws(
            a in prop::collection::vec(-5i128..6, 0..5), la in -3i32..4,
            b in prop::collection::vec(-5i128..6, 0..5), lb in -3i32..4,
            c in prop::collection::vec(-5i128..6, 0..5),
        ) {
            let a = QPoly::from_coeffs(la, a);
            let b = QPoly::from_coeffs(lb, b);
            let c = QPoly::from_coeffs(0, c);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(a.times_q_minus_one(), &a * &QPoly::from_coeffs(0, vec![-1, 1]));
            prop_assert_eq!(a.times_q(), &a * &QPoly::q_pow(1));
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }
    }
}
