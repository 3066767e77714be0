//! Exact arithmetic in `Q(ζ)`, `ζ` a primitive `2p`-th root of unity.
//!
//! Elements are stored in the power basis `ζ^0, …, ζ^{p-2}` and kept reduced
//! modulo the `2p`-th cyclotomic polynomial
//! `Φ_{2p}(x) = 1 - x + x^2 - … + x^{p-1}`. Quantum dimensions of both
//! `Ver_p` and `Ver_p(SL(n))` live here.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::prime::{check_same, Prime};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    p: Prime,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[p={}](", self.p)?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}·ζ^{i}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl CycNum {
    /// Degree of the field over `Q`, `φ(2p) = p - 1`.
    pub fn degree(p: Prime) -> usize {
        p.as_usize() - 1
    }

    pub fn zero(p: Prime) -> Self {
        CycNum { p, coeffs: vec![BigRational::zero(); Self::degree(p)] }
    }

    pub fn from_integer(p: Prime, n: i64) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = BigRational::from_integer(BigInt::from(n));
        z
    }

    pub fn one(p: Prime) -> Self {
        Self::from_integer(p, 1)
    }

    /// `ζ^e` for any integer exponent.
    pub fn zeta_pow(p: Prime, e: i64) -> Self {
        let two_p = 2 * p.as_i64();
        let mut full = vec![BigRational::zero(); 2 * p.as_usize()];
        full[e.rem_euclid(two_p) as usize] = BigRational::one();
        Self::from_long(p, full)
    }

    /// Build from coefficients of an arbitrary-degree polynomial in `ζ`.
    pub fn from_coeffs(p: Prime, coeffs: Vec<BigRational>) -> Self {
        Self::from_long(p, coeffs)
    }

    pub fn from_integer_coeffs(p: Prime, coeffs: &[i64]) -> Self {
        Self::from_long(p, coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficients as integers, if every coefficient is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None }).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Whether the element lies in `Z[ζ]`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    fn from_long(p: Prime, mut long: Vec<BigRational>) -> Self {
        let p_us = p.as_usize();
        let deg = p_us - 1;
        // ζ^p = -1: fold exponents >= p down first, which keeps the
        // remaining reduction to degrees < 2p.
        let mut e = long.len();
        while e > p_us {
            e -= 1;
            let c = std::mem::take(&mut long[e]);
            if !c.is_zero() {
                let tgt = e - p_us;
                long[tgt] -= c;
            }
        }
        long.truncate(p_us.max(deg));
        long.resize(p_us, BigRational::zero());
        // ζ^{p-1} = Σ_{i<p-1} (-1)^{i+1} ζ^i
        let top = std::mem::take(&mut long[deg]);
        if !top.is_zero() {
            for (i, slot) in long.iter_mut().take(deg).enumerate() {
                if i % 2 == 0 {
                    *slot -= &top;
                } else {
                    *slot += &top;
                }
            }
        }
        long.truncate(deg);
        CycNum { p, coeffs: long }
    }

    pub fn add(&self, other: &CycNum) -> Result<CycNum> {
        check_same(self.p, other.p)?;
        Ok(CycNum { p: self.p, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &CycNum) -> Result<CycNum> {
        check_same(self.p, other.p)?;
        Ok(CycNum { p: self.p, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn neg(&self) -> CycNum {
        CycNum { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, s: &BigRational) -> CycNum {
        CycNum { p: self.p, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn scale_int(&self, s: i64) -> CycNum {
        self.scale(&BigRational::from_integer(BigInt::from(s)))
    }

    pub fn mul(&self, other: &CycNum) -> Result<CycNum> {
        check_same(self.p, other.p)?;
        let d = self.coeffs.len();
        let mut long = vec![BigRational::zero(); 2 * d];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    long[i + j] += a * b;
                }
            }
        }
        Ok(Self::from_long(self.p, long))
    }

    /// Exact field division by solving `other · x = self`.
    pub fn div(&self, other: &CycNum) -> Result<CycNum> {
        check_same(self.p, other.p)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.coeffs.len();
        // Column j of the multiplication matrix is other · ζ^j.
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        for j in 0..d {
            cols.push(other.mul(&Self::zeta_pow(self.p, j as i64))?.coeffs);
        }
        let mut aug: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..d).map(|c| cols[c][r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        for c in 0..d {
            let pr = (c..d)
                .find(|&r| !aug[r][c].is_zero())
                .expect("multiplication by a nonzero field element is invertible");
            aug.swap(c, pr);
            let s = aug[c][c].clone();
            for x in aug[c].iter_mut() {
                *x /= &s;
            }
            let pivot_row = aug[c].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == c || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        let coeffs = aug.into_iter().map(|mut row| row.pop().unwrap()).collect();
        let q = CycNum { p: self.p, coeffs };
        debug_assert_eq!(q.mul(other).unwrap(), *self);
        Ok(q)
    }

    /// Real part of the value at `ζ = exp(iπ/p)`. Display only.
    pub fn to_float(&self) -> f64 {
        let p = self.p.get() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let v = c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN);
                v * (std::f64::consts::PI * i as f64 / p).cos()
            })
            .sum()
    }

    /// Sum of a sequence of elements, all in characteristic `p`.
    pub fn sum<'a>(p: Prime, items: impl IntoIterator<Item = &'a CycNum>) -> Result<CycNum> {
        items.into_iter().try_fold(CycNum::zero(p), |acc, x| acc.add(x))
    }
}

/// The quantum integer `[n] = Σ_{j=0}^{n-1} ζ^{n-1-2j}`.
pub fn qint(n: i64, p: Prime) -> Result<CycNum> {
    if n < 0 {
        return Err(Error::OutOfRange { index: n, lo: 0, hi: i64::MAX });
    }
    let two_p = 2 * p.as_usize();
    let mut long = vec![BigRational::zero(); two_p];
    for j in 0..n {
        let e = (n - 1 - 2 * j).rem_euclid(two_p as i64) as usize;
        long[e] += BigRational::one();
    }
    Ok(CycNum::from_long(p, long))
}

/// `qint` for a raw prime, validating it.
pub fn qint_checked(n: i64, p: u32) -> Result<CycNum> {
    qint(n, Prime::new(p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pr(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    // Independent numerical evaluation at exp(iπ/p): real and imaginary parts.
    fn eval_complex(x: &CycNum) -> (f64, f64) {
        let p = x.prime().get() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in x.coeffs().iter().enumerate() {
            let v = c.numer().to_f64().unwrap() / c.denom().to_f64().unwrap();
            let t = std::f64::consts::PI * i as f64 / p;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }

    fn qint_numeric(n: i64, p: u32) -> f64 {
        let t = std::f64::consts::PI / p as f64;
        (n as f64 * t).sin() / t.sin()
    }

    #[test]
    fn qint_small_values() {
        let p = pr(5);
        assert_eq!(qint(0, p).unwrap(), CycNum::zero(p));
        assert_eq!(qint(1, p).unwrap(), CycNum::one(p));
        assert!(qint(5, p).unwrap().is_zero());
        assert_eq!(qint(4, p).unwrap(), qint(1, p).unwrap());
    }

    #[test]
    fn qint_matches_numeric_sine_ratio() {
        for p in [5u32, 7, 11, 13] {
            for n in 0..=2 * p as i64 {
                let (re, im) = eval_complex(&qint(n, pr(p)).unwrap());
                assert!((re - qint_numeric(n, p)).abs() < 1e-9, "p={p} n={n}");
                assert!(im.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn add_and_mul_examples() {
        let p = pr(5);
        let one = qint(1, p).unwrap();
        assert_eq!(one.add(&one).unwrap(), CycNum::from_integer(p, 2));
        let two = qint(2, p).unwrap();
        let expect = qint(1, p).unwrap().add(&qint(3, p).unwrap()).unwrap();
        assert_eq!(two.mul(&two).unwrap(), expect);
        assert!((two.to_float() - 1.618_033_988_749_895).abs() < 1e-12);
    }

    #[test]
    fn mismatched_prime_is_rejected() {
        let a = qint(2, pr(5)).unwrap();
        let b = qint(2, pr(7)).unwrap();
        assert_eq!(a.add(&b), Err(Error::MismatchedPrime(5, 7)));
        assert!(a.mul(&b).is_err());
        assert!(qint_checked(2, 9).is_err());
    }

    #[test]
    fn division_is_exact_inverse() {
        let p = pr(7);
        let a = qint(3, p).unwrap().mul(&qint(5, p).unwrap()).unwrap();
        let b = qint(5, p).unwrap();
        assert_eq!(a.div(&b).unwrap(), qint(3, p).unwrap());
        assert_eq!(a.div(&CycNum::zero(p)), Err(Error::DivisionByZero));
        // 1/[2] is not integral at p = 7
        let inv2 = CycNum::one(p).div(&qint(2, p).unwrap()).unwrap();
        assert_eq!(inv2.mul(&qint(2, p).unwrap()).unwrap(), CycNum::one(p));
    }

    #[test]
    fn zeta_order_is_two_p() {
        for p in [5u32, 7, 11] {
            let p = pr(p);
            assert_eq!(CycNum::zeta_pow(p, p.as_i64()), CycNum::from_integer(p, -1));
            assert_eq!(CycNum::zeta_pow(p, 2 * p.as_i64()), CycNum::one(p));
            assert_eq!(CycNum::zeta_pow(p, -1).mul(&CycNum::zeta_pow(p, 1)).unwrap(), CycNum::one(p));
        }
    }

    #[test]
    fn qint_symmetries() {
        for p in [5u32, 7, 11, 13] {
            let p = pr(p);
            assert!(qint(p.as_i64(), p).unwrap().is_zero());
            for k in 1..p.as_i64() {
                assert_eq!(qint(p.as_i64() - k, p).unwrap(), qint(k, p).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn truncated_product_rule(p in prop::sample::select(vec![5u32, 7, 11, 13]), m in 1i64..13, n in 1i64..13) {
            let pp = pr(p);
            prop_assume!(m + n <= p as i64);
            let lhs = qint(m, pp).unwrap().mul(&qint(n, pp).unwrap()).unwrap();
            let mut rhs = CycNum::zero(pp);
            for i in 1..=m.min(n) {
                rhs = rhs.add(&qint((m - n).abs() + 2 * i - 1, pp).unwrap()).unwrap();
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ring_axioms(a in prop::collection::vec(-5i64..5, 6), b in prop::collection::vec(-5i64..5, 6), c in prop::collection::vec(-5i64..5, 6)) {
            let p = pr(7);
            let (a, b, c) = (CycNum::from_integer_coeffs(p, &a), CycNum::from_integer_coeffs(p, &b), CycNum::from_integer_coeffs(p, &c));
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        }
    }
}
