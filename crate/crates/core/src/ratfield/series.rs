use super::{FieldError, RatFun};

/// Truncated series `c_0 + c_1 u^-1 + ... + c_O u^-O` over the rational field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries {
    coeffs: Vec<RatFun>,
}

impl USeries {
    /// The constant series `1` truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![RatFun::zero(); order + 1];
        coeffs[0] = RatFun::one();
        USeries { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<RatFun>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        USeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `u^-k`; zero beyond the truncation order is not implied.
    pub fn coeff(&self, k: usize) -> Option<&RatFun> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    /// Expansion of `(u - a) / (u - b)`, i.e. `1 + sum_k b^(k-1) (b - a) u^-k`.
    pub fn linear_quotient(a: &RatFun, b: &RatFun, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(RatFun::one());
        let diff = b - a;
        let mut bpow = RatFun::one();
        for _ in 1..=order {
            coeffs.push(&bpow * &diff);
            bpow = &bpow * b;
        }
        USeries { coeffs }
    }

    pub fn mul(&self, other: &USeries) -> USeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![RatFun::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        USeries { coeffs }
    }

    pub fn sub(&self, other: &USeries) -> USeries {
        let order = self.order().min(other.order());
        USeries { coeffs: (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect() }
    }

    pub fn scale(&self, c: &RatFun) -> USeries {
        USeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFun::is_zero)
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<USeries, FieldError> {
        let c0 = self.coeffs[0].inv()?;
        let n = self.order();
        let mut out: Vec<RatFun> = Vec::with_capacity(n + 1);
        out.push(c0.clone());
        for k in 1..=n {
            let mut acc = RatFun::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-(&acc * &c0));
        }
        Ok(USeries { coeffs: out })
    }
}

/// Expands `prod_k (u - a_k) / (u - b_k)` in `u^-1` up to `order`.
pub fn expand_linear_quotient(factors: &[(RatFun, RatFun)], order: usize) -> USeries {
    let mut acc = USeries::one(order);
    for (a, b) in factors {
        acc = acc.mul(&USeries::linear_quotient(a, b, order));
    }
    acc
}
