use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Maximum number of variables a polynomial may carry.
pub const MAX_VARS: usize = 4;

/// Display names, in order of decreasing lex priority.
pub const VAR_NAMES: [&str; MAX_VARS] = ["e1", "e2", "u", "c"];

/// Exponent vector. The derived order is lex with variable 1 most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u32; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(k: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[k] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut e = other.0;
        for (a, b) in e.iter_mut().zip(self.0.iter()) {
            *a -= b;
        }
        Monomial(e)
    }

    fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

/// Polynomial with integer coefficients in up to four variables.
///
/// Terms are kept sorted by decreasing lex order, with no zero coefficients.
/// `nvars` only affects display; arithmetic and comparison work on the
/// common embedding.
#[derive(Clone, Debug)]
pub struct IntPoly {
    terms: Vec<(Monomial, BigInt)>,
    nvars: usize,
}

impl PartialEq for IntPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for IntPoly {}

impl std::hash::Hash for IntPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl IntPoly {
    pub fn zero(nvars: usize) -> Self {
        IntPoly { terms: Vec::new(), nvars }
    }

    pub fn constant(c: BigInt, nvars: usize) -> Self {
        if c.is_zero() {
            Self::zero(nvars)
        } else {
            IntPoly { terms: vec![(Monomial::one(), c)], nvars }
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(BigInt::one(), nvars)
    }

    pub fn var(k: usize, nvars: usize) -> Self {
        assert!(k < nvars && nvars <= MAX_VARS, "variable index out of range");
        IntPoly { terms: vec![(Monomial::var(k), BigInt::one())], nvars }
    }

    /// Builds `a*e1 + b*e2`.
    pub fn linear(a: i64, b: i64) -> Self {
        let mut t = Vec::new();
        if a != 0 {
            t.push((Monomial::var(0), BigInt::from(a)));
        }
        if b != 0 {
            t.push((Monomial::var(1), BigInt::from(b)));
        }
        IntPoly { terms: t, nvars: 2 }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>, nvars: usize) -> Self {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(acc, nvars)
    }

    fn from_map(acc: BTreeMap<Monomial, BigInt>, nvars: usize) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        IntPoly { terms, nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn with_nvars(mut self, nvars: usize) -> Self {
        self.nvars = nvars.max(self.used_vars());
        self
    }

    /// Number of leading variables needed to represent this polynomial.
    pub fn used_vars(&self) -> usize {
        let mut k = 0;
        for (m, _) in &self.terms {
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    k = k.max(v + 1);
                }
            }
        }
        k
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coeff_sign_negative(&self) -> bool {
        self.terms.first().map(|(_, c)| c.is_negative()).unwrap_or(false)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[v]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
            nvars: self.nvars,
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.merge(other, true)
    }

    fn merge(&self, other: &IntPoly, negate: bool) -> IntPoly {
        let nvars = self.nvars.max(other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                std::cmp::Ordering::Less
            } else if j == b.len() {
                std::cmp::Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        IntPoly { terms: out, nvars }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let nvars = self.nvars.max(other.nvars);
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero(nvars);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1).with_nvars(nvars);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1).with_nvars(nvars);
        }
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero);
                *e += ca * cb;
            }
        }
        Self::from_map(acc, nvars)
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero(self.nvars);
        }
        IntPoly {
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
            nvars: self.nvars,
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut acc = IntPoly::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides every coefficient by `c`; `None` if some coefficient is not a multiple.
    pub fn div_scalar(&self, c: &BigInt) -> Option<IntPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, a) in &self.terms {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.push((*m, q));
        }
        Some(IntPoly { terms, nvars: self.nvars })
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((dm.quotient_of(m), q));
            }
            return Some(IntPoly { terms, nvars: self.nvars.max(d.nvars) });
        }
        let (dm, dc) = &d.terms[0];
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            if !dm.divides(&rm) {
                return None;
            }
            let (q, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            let qm = dm.quotient_of(&rm);
            rem = rem.sub(&d.mul_term(&qm, &q));
            quot.push((qm, q));
        }
        Some(IntPoly { terms: quot, nvars: self.nvars.max(d.nvars) })
    }

    /// Gcd of the integer coefficients, non-negative.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Substitutes `e2 := -e1` in a polynomial over `e1, e2`.
    pub fn at_hbar_zero(&self) -> IntPoly {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.0;
            let j = e[1];
            e[0] += j;
            e[1] = 0;
            let c = if j % 2 == 1 { -c } else { c.clone() };
            (Monomial(e), c)
        });
        IntPoly::from_terms(terms, self.nvars)
    }

    /// Evaluates at a point with rational coordinates.
    pub fn eval_rational(&self, point: &[num_rational::BigRational]) -> num_rational::BigRational {
        use num_rational::BigRational;
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[v].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficients as a polynomial in variable `v`, indexed by degree.
    pub fn to_univariate(&self, v: usize) -> Vec<IntPoly> {
        let deg = self.degree_in(v) as usize;
        let mut parts: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0;
            let k = e[v] as usize;
            e[v] = 0;
            parts[k].push((Monomial(e), c.clone()));
        }
        parts
            .into_iter()
            .map(|mut t| {
                t.sort_by(|a, b| b.0.cmp(&a.0));
                IntPoly { terms: t, nvars: self.nvars }
            })
            .collect()
    }

    pub fn from_univariate(v: usize, coeffs: &[IntPoly], nvars: usize) -> IntPoly {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (k, p) in coeffs.iter().enumerate() {
            for (m, c) in &p.terms {
                let mut e = m.0;
                e[v] += k as u32;
                *acc.entry(Monomial(e)).or_insert_with(BigInt::zero) += c;
            }
        }
        Self::from_map(acc, nvars)
    }

    /// Greatest common divisor in `Z[vars]`, with positive leading coefficient.
    ///
    /// `gcd(0, 0)` is `0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let nvars = self.nvars.max(other.nvars);
        let g = gcd_rec(self, other);
        g.normalize_sign().with_nvars(nvars)
    }

    /// Multiplies by -1 if the leading coefficient is negative.
    pub fn normalize_sign(self) -> IntPoly {
        if self.leading_coeff_sign_negative() {
            self.neg()
        } else {
            self
        }
    }

    /// Multiplicity of `e1 + e2` as a factor.
    pub fn hbar_multiplicity(&self) -> u32 {
        if self.is_zero() {
            return 0;
        }
        let h = IntPoly::linear(1, 1);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_exact(&h) {
            p = q;
            k += 1;
        }
        k
    }

    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = fmt_monomial(m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(VAR_NAMES[v].to_string()),
            _ => parts.push(format!("{}^{}", VAR_NAMES[v], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

fn first_var(p: &IntPoly) -> Option<usize> {
    (0..MAX_VARS).find(|&v| p.terms.iter().any(|(m, _)| m.0[v] > 0))
}

fn gcd_rec(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        let g = a.integer_content().gcd(&b.integer_content());
        return IntPoly::constant(g, a.nvars);
    }
    if a.used_vars() <= 2 && b.used_vars() <= 2 && a.is_homogeneous() && b.is_homogeneous() {
        return gcd_homogeneous(a, b);
    }
    let va = first_var(a).unwrap();
    let vb = first_var(b).unwrap();
    let v = va.min(vb);
    if a.degree_in(v) == 0 {
        return gcd_rec(a, &content_in(b, v));
    }
    if b.degree_in(v) == 0 {
        return gcd_rec(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_rec(&ca, &cb);
    let g = primitive_prs(&pa, &pb, v);
    c.mul(&g)
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &IntPoly, v: usize) -> IntPoly {
    let coeffs = p.to_univariate(v);
    let mut g = IntPoly::zero(p.nvars);
    for c in coeffs.iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, c);
        if g.is_one() {
            break;
        }
    }
    g.normalize_sign()
}

fn primitive_part_in(p: &IntPoly, v: usize) -> IntPoly {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").normalize_sign()
}

/// Gcd of two polynomials primitive in `v`, by primitive remainder sequence.
fn primitive_prs(a: &IntPoly, b: &IntPoly, v: usize) -> IntPoly {
    let (mut f, mut g) = if a.degree_in(v) >= b.degree_in(v) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    loop {
        let r = pseudo_remainder(&f, &g, v);
        if r.is_zero() {
            return primitive_part_in(&g, v);
        }
        if r.degree_in(v) == 0 {
            return IntPoly::one(a.nvars);
        }
        f = g;
        g = primitive_part_in(&r, v);
    }
}

/// Remainder of `f` by `g` in `v`, up to a factor from the coefficient ring.
fn pseudo_remainder(f: &IntPoly, g: &IntPoly, v: usize) -> IntPoly {
    let gc = g.to_univariate(v);
    let dg = gc.len() - 1;
    let lc = &gc[dg];
    let mut r = f.to_univariate(v);
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        for c in r.iter_mut() {
            *c = c.mul(lc);
        }
        for (k, gk) in gc.iter().enumerate() {
            let t = gk.mul(&lr);
            r[k + shift] = r[k + shift].sub(&t);
        }
        while r.last().map(|c| c.is_zero()).unwrap_or(false) {
            r.pop();
        }
    }
    IntPoly::from_univariate(v, &r, f.nvars)
}

/// Gcd of homogeneous polynomials in `e1, e2` through the dehomogenization `e2 = 1`.
fn gcd_homogeneous(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (sa, ra) = split_e2_power(a);
    let (sb, rb) = split_e2_power(b);
    let ua = dehomogenize(&ra);
    let ub = dehomogenize(&rb);
    let g = gcd_univariate(&ua, &ub);
    let d = g.degree_in(0);
    let terms = g.terms.iter().map(|(m, c)| {
        let k = m.0[0];
        let mut e = [0; MAX_VARS];
        e[0] = k;
        e[1] = d - k;
        (Monomial(e), c.clone())
    });
    let h = IntPoly::from_terms(terms, a.nvars);
    let mut e = [0; MAX_VARS];
    e[1] = sa.min(sb);
    h.mul_term(&Monomial(e), &BigInt::one())
}

fn split_e2_power(p: &IntPoly) -> (u32, IntPoly) {
    let s = p.terms.iter().map(|(m, _)| m.0[1]).min().unwrap_or(0);
    let mut e = [0; MAX_VARS];
    e[1] = s;
    let q = p.div_exact(&IntPoly { terms: vec![(Monomial(e), BigInt::one())], nvars: p.nvars }).unwrap();
    (s, q)
}

fn dehomogenize(p: &IntPoly) -> IntPoly {
    let terms = p.terms.iter().map(|(m, c)| {
        let mut e = m.0;
        e[1] = 0;
        (Monomial(e), c.clone())
    });
    IntPoly::from_terms(terms, p.nvars)
}

fn gcd_univariate(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        let g = a.integer_content().gcd(&b.integer_content());
        return IntPoly::constant(g, a.nvars);
    }
    let ca = a.integer_content();
    let cb = b.integer_content();
    let pa = a.div_scalar(&ca).unwrap();
    let pb = b.div_scalar(&cb).unwrap();
    let g = primitive_prs(&pa, &pb, 0);
    g.scale(&ca.gcd(&cb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: i64, b: i64) -> IntPoly {
        IntPoly::linear(a, b)
    }

    #[test]
    fn display_orders_terms_lex() {
        let p = lin(0, 2).add(&lin(1, 0));
        assert_eq!(p.to_string(), "e1 + 2*e2");
        assert_eq!(lin(1, -1).to_string(), "e1 - e2");
        assert_eq!(lin(1, 1).mul(&lin(1, 1)).to_string(), "e1^2 + 2*e1*e2 + e2^2");
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = lin(1, 1).mul(&lin(1, -1)).mul(&lin(2, 3));
        let g = lin(1, 1).mul(&lin(3, -1)).scale(&BigInt::from(6));
        assert_eq!(f.gcd(&g), lin(1, 1));
    }

    #[test]
    fn gcd_non_homogeneous() {
        let one = IntPoly::one(2);
        let a = lin(1, 0).add(&one).mul(&lin(0, 1).sub(&one));
        let b = lin(1, 0).add(&one).mul(&lin(1, 1));
        let g = a.gcd(&b);
        assert_eq!(g.to_string(), "e1 + 1");
    }

    #[test]
    fn gcd_four_variables() {
        let u = IntPoly::var(2, 4);
        let c = IntPoly::var(3, 4);
        let a = u.sub(&c).mul(&u.add(&lin(1, 0)));
        let b = u.sub(&c).mul(&c.add(&lin(0, 1)));
        assert_eq!(a.gcd(&b).to_string(), "u - c");
    }

    #[test]
    fn exact_division_detects_remainder() {
        let f = lin(1, 1).mul(&lin(1, -1));
        assert_eq!(f.div_exact(&lin(1, 1)), Some(lin(1, -1)));
        assert_eq!(f.div_exact(&lin(1, 2)), None);
    }

    #[test]
    fn hbar_zero_substitution() {
        let p = lin(1, 2);
        assert_eq!(p.at_hbar_zero().to_string(), "-e1");
        assert_eq!(lin(1, 1).mul(&lin(1, -1)).hbar_multiplicity(), 1);
    }
}
