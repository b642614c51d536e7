use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{IntPoly, Monomial};
use super::FieldError;

/// Element of `Q(e1, e2)` (or `Q(e1, e2, u, c)`), kept in lowest terms.
///
/// Numerator and denominator have coprime integer contents and the
/// denominator's lex-leading coefficient is positive, so structural equality
/// is equality of rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: IntPoly,
    den: IntPoly,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun { num: IntPoly::zero(2), den: IntPoly::one(2) }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        RatFun { num: IntPoly::constant(BigInt::from(n), 2), den: IntPoly::one(2) }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        RatFun { num: IntPoly::constant(n, 2), den: IntPoly::one(2) }
    }

    /// The rational number `n / d`.
    pub fn from_ratio(n: i64, d: i64) -> Result<Self, FieldError> {
        Self::new(IntPoly::constant(BigInt::from(n), 2), IntPoly::constant(BigInt::from(d), 2))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        let nv = p.nvars();
        RatFun { num: p, den: IntPoly::one(nv) }
    }

    pub fn e1() -> Self {
        Self::from_poly(IntPoly::var(0, 2))
    }

    pub fn e2() -> Self {
        Self::from_poly(IntPoly::var(1, 2))
    }

    /// Variable `k` of the four-variable field (`e1, e2, u, c`).
    pub fn var4(k: usize) -> Self {
        Self::from_poly(IntPoly::var(k, 4))
    }

    /// `a*e1 + b*e2`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_poly(IntPoly::linear(a, b))
    }

    /// `e1 + e2`.
    pub fn hbar() -> Self {
        Self::linear(1, 1)
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let nvars = num.nvars().max(den.nvars());
        if num.is_zero() {
            return Ok(RatFun { num: IntPoly::zero(nvars), den: IntPoly::one(nvars) });
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let (num, den) = if den.leading_coeff_sign_negative() { (num.neg(), den.neg()) } else { (num, den) };
        Ok(RatFun { num: num.with_nvars(nvars), den: den.with_nvars(nvars) })
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars().max(self.den.nvars())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Q`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn inv(&self) -> Result<RatFun, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let (n, d) = if self.num.leading_coeff_sign_negative() {
            (self.den.neg(), self.num.neg())
        } else {
            (self.den.clone(), self.num.clone())
        };
        Ok(RatFun { num: n, den: d })
    }

    pub fn checked_div(&self, other: &RatFun) -> Result<RatFun, FieldError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: u32) -> RatFun {
        if k == 0 {
            return RatFun::one();
        }
        RatFun { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// `self^k` for a signed exponent.
    pub fn powi(&self, k: i64) -> Result<RatFun, FieldError> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.inv()?.pow((-k) as u32))
        }
    }

    pub fn scale_int(&self, c: i64) -> RatFun {
        self * &RatFun::from_int(c)
    }

    /// Specializes `e2 := -e1`; errors when the denominator vanishes there.
    pub fn substitute_hbar_zero(&self) -> Result<RatFun, FieldError> {
        let d = self.den.at_hbar_zero();
        if d.is_zero() {
            let k = self.den.hbar_multiplicity();
            let factor = if k == 1 { "(e1 + e2)".to_string() } else { format!("(e1 + e2)^{k}") };
            return Err(FieldError::Pole { factor });
        }
        RatFun::new(self.num.at_hbar_zero(), d)
    }

    /// Evaluates at a rational point; `None` at a pole.
    pub fn eval_rational(&self, point: &[num_rational::BigRational]) -> Option<num_rational::BigRational> {
        let d = self.den.eval_rational(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rational(point) / d)
    }

    /// A monomial of the numerator that survives in `self`, used as a witness when nonzero.
    pub fn witness_monomial(&self) -> Option<String> {
        self.num.terms().first().map(|(m, c)| {
            let p = IntPoly::from_terms([(*m, c.clone())], self.nvars());
            p.to_string()
        })
    }

    fn add_impl(&self, other: &RatFun, negate: bool) -> RatFun {
        let nvars = self.nvars().max(other.nvars());
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let on = if negate { other.num.neg() } else { other.num.clone() };
        if self.den == other.den {
            let n = self.num.add(&on);
            if self.den.is_one() {
                let nv = n.nvars().max(nvars);
                return RatFun { num: n.with_nvars(nv), den: IntPoly::one(nv) };
            }
            return RatFun::new(n, self.den.clone()).expect("nonzero denominator");
        }
        let g = self.den.gcd(&other.den);
        let da = self.den.div_exact(&g).expect("gcd divides");
        let db = other.den.div_exact(&g).expect("gcd divides");
        let n = self.num.mul(&db).add(&on.mul(&da));
        if n.is_zero() {
            return RatFun::zero();
        }
        // Only factors of g can cancel.
        let h = n.gcd(&g);
        let (n, g2) = if h.is_one() {
            (n, g)
        } else {
            (n.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides"))
        };
        let den = da.mul(&db).mul(&g2);
        let (n, den) = if den.leading_coeff_sign_negative() { (n.neg(), den.neg()) } else { (n, den) };
        let nv = nvars.max(n.nvars()).max(den.nvars());
        RatFun { num: n.with_nvars(nv), den: den.with_nvars(nv) }
    }

    fn mul_impl(&self, other: &RatFun) -> RatFun {
        if self.is_zero() || other.is_zero() {
            return RatFun::zero();
        }
        let nvars = self.nvars().max(other.nvars());
        let g1 = if self.num.is_one() || other.den.is_one() { None } else { Some(self.num.gcd(&other.den)) };
        let g2 = if other.num.is_one() || self.den.is_one() { None } else { Some(other.num.gcd(&self.den)) };
        let (an, bd) = match &g1 {
            Some(g) if !g.is_one() => (self.num.div_exact(g).unwrap(), other.den.div_exact(g).unwrap()),
            _ => (self.num.clone(), other.den.clone()),
        };
        let (bn, ad) = match &g2 {
            Some(g) if !g.is_one() => (other.num.div_exact(g).unwrap(), self.den.div_exact(g).unwrap()),
            _ => (other.num.clone(), self.den.clone()),
        };
        let n = an.mul(&bn);
        let d = ad.mul(&bd);
        let (n, d) = if d.leading_coeff_sign_negative() { (n.neg(), d.neg()) } else { (n, d) };
        RatFun { num: n.with_nvars(nvars), den: d.with_nvars(nvars) }
    }

    /// Sum of a list of terms.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a RatFun>) -> RatFun {
        let mut acc = RatFun::zero();
        for x in items {
            acc += x;
        }
        acc
    }

    /// Degree-zero sign: negative leading numerator coefficient.
    fn numerator_negative(&self) -> bool {
        self.num.leading_coeff_sign_negative()
    }
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl PartialOrd for RatFun {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but deterministic total order on canonical forms.
impl Ord for RatFun {
    fn cmp(&self, other: &Self) -> Ordering {
        self.den.cmp(&other.den).then_with(|| self.num.cmp(&other.num))
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let multi_num = self.num.terms().len() > 1;
        let (sign, num) = if multi_num && self.numerator_negative() {
            ("-", self.num.neg())
        } else {
            ("", self.num.clone())
        };
        let num_s = if multi_num { format!("({num})") } else { num.to_string() };
        let den_s = if self.den.terms().len() > 1 {
            format!("({})", self.den)
        } else {
            let (m, c) = &self.den.terms()[0];
            let nfactors = m.0.iter().filter(|&&e| e > 0).count();
            if *m == Monomial::one() || (c.is_one() && nfactors == 1) {
                self.den.to_string()
            } else {
                format!("({})", self.den)
            }
        };
        write!(f, "{sign}{num_s}/{den_s}")
    }
}

impl From<i64> for RatFun {
    fn from(n: i64) -> Self {
        RatFun::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                $body(self, rhs)
            }
        }
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                $body(&self, &rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                $body(&self, rhs)
            }
        }
        impl $tr<RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RatFun, b: &RatFun| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &RatFun, b: &RatFun| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &RatFun, b: &RatFun| a.mul_impl(b));

impl AddAssign<&RatFun> for RatFun {
    fn add_assign(&mut self, rhs: &RatFun) {
        *self = self.add_impl(rhs, false);
    }
}

impl AddAssign<RatFun> for RatFun {
    fn add_assign(&mut self, rhs: RatFun) {
        *self = self.add_impl(&rhs, false);
    }
}

impl SubAssign<&RatFun> for RatFun {
    fn sub_assign(&mut self, rhs: &RatFun) {
        *self = self.add_impl(rhs, true);
    }
}

impl SubAssign<RatFun> for RatFun {
    fn sub_assign(&mut self, rhs: RatFun) {
        *self = self.add_impl(&rhs, true);
    }
}

impl MulAssign<&RatFun> for RatFun {
    fn mul_assign(&mut self, rhs: &RatFun) {
        *self = self.mul_impl(rhs);
    }
}

impl MulAssign<RatFun> for RatFun {
    fn mul_assign(&mut self, rhs: RatFun) {
        *self = self.mul_impl(&rhs);
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

/// Accumulates a product of polynomial factors over polynomial factors,
/// reducing once at the end.
#[derive(Clone, Debug)]
pub struct Fraction {
    num: IntPoly,
    den: IntPoly,
}

impl Default for Fraction {
    fn default() -> Self {
        Fraction { num: IntPoly::one(2), den: IntPoly::one(2) }
    }
}

impl Fraction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn times(&mut self, p: &IntPoly) -> &mut Self {
        self.num = self.num.mul(p);
        self
    }

    pub fn over(&mut self, p: &IntPoly) -> &mut Self {
        self.den = self.den.mul(p);
        self
    }

    pub fn times_int(&mut self, c: i64) -> &mut Self {
        self.num = self.num.scale(&BigInt::from(c));
        self
    }

    pub fn negate_if(&mut self, flag: bool) -> &mut Self {
        if flag {
            self.num = self.num.neg();
        }
        self
    }

    pub fn finish(&self) -> Result<RatFun, FieldError> {
        RatFun::new(self.num.clone(), self.den.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> RatFun {
        RatFun::linear(a, b)
    }

    #[test]
    fn canonical_strings() {
        let x = (q(1, 2)).checked_div(&q(1, -1)).unwrap();
        assert_eq!(x.to_string(), "(e1 + 2*e2)/(e1 - e2)");
        let y = q(0, -2).checked_div(&q(1, -1)).unwrap();
        assert_eq!(y.to_string(), "-2*e2/(e1 - e2)");
        let z = q(-1, -1).checked_div(&q(1, -1)).unwrap();
        assert_eq!(z.to_string(), "-(e1 + e2)/(e1 - e2)");
        let w = q(1, -1).checked_div(&q(2, 0)).unwrap();
        assert_eq!(w.to_string(), "(e1 - e2)/(2*e1)");
        assert_eq!(RatFun::from_ratio(-1, 2).unwrap().to_string(), "-1/2");
        assert_eq!(RatFun::from_ratio(4, -6).unwrap().to_string(), "-2/3");
    }

    #[test]
    fn denominator_sign_is_normalized() {
        let x = q(1, 0).checked_div(&q(-1, 1)).unwrap();
        assert_eq!(x.to_string(), "-e1/(e1 - e2)");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatFun::one().checked_div(&RatFun::zero()), Err(FieldError::DivisionByZero));
        assert!(RatFun::zero().inv().is_err());
    }

    #[test]
    fn hbar_zero_specialization() {
        let x = q(1, 2).checked_div(&q(1, -1)).unwrap();
        assert_eq!(x.substitute_hbar_zero().unwrap(), RatFun::from_ratio(-1, 2).unwrap());
        let p = RatFun::one().checked_div(&q(1, 1)).unwrap();
        match p.substitute_hbar_zero() {
            Err(FieldError::Pole { factor }) => assert_eq!(factor, "(e1 + e2)"),
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn sums_reduce() {
        let a = RatFun::one().checked_div(&q(1, 0)).unwrap();
        let b = RatFun::one().checked_div(&q(0, 1)).unwrap();
        let s = &a + &b;
        assert_eq!(s.to_string(), "(e1 + e2)/(e1*e2)");
        assert_eq!(&s - &a - &b, RatFun::zero());
    }
}
