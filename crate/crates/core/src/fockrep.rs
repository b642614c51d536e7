//! Operators on the level-one Fock space: the affine Lie algebra on Schur
//! functions, the Yangian of sl_N on Jack functions and the affine Yangian
//! on the fixed-point basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::cellforms::{cell_weight, pair_form};
use crate::partitions::{split_left_right, Partition, PartitionError};
use crate::ratfield::{expand_linear_quotient, FieldError, Fraction, RatFun, USeries};
use crate::symfun::{jack_table, SymFunError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    SymFun(#[from] SymFunError),
    #[error("index i = {i} out of range for N = {n}")]
    BadIndex { i: usize, n: usize },
    #[error("N = {0} is not supported here")]
    BadN(usize),
    #[error("the affine Lie algebra has no Cartan current")]
    NoCurrent,
    #[error("operator acts on the {expected} basis, got {got}")]
    WrongBasis { expected: Basis, got: Basis },
}

/// Basis a Fock vector is expanded in. `Jack` and `Fixed` are identified
/// componentwise (`P_lambda <-> b_lambda`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    Jack,
    #[serde(rename = "b")]
    Fixed,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Basis::Schur => "schur",
            Basis::Jack => "jack",
            Basis::Fixed => "b",
        };
        write!(f, "{s}")
    }
}

/// Finite linear combination of basis vectors, possibly of mixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVec {
    pub basis: Basis,
    terms: BTreeMap<Partition, RatFun>,
}

#[derive(Serialize)]
struct TermJson {
    partition: String,
    coeff: String,
}

#[derive(Serialize)]
struct FockVecJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

impl FockVec {
    pub fn zero(basis: Basis) -> Self {
        FockVec { basis, terms: BTreeMap::new() }
    }

    pub fn basis_vector(basis: Basis, p: Partition) -> Self {
        let mut v = Self::zero(basis);
        v.add_term(p, &RatFun::one());
        v
    }

    pub fn add_term(&mut self, p: Partition, c: &RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FockVec, c: &RatFun) {
        if c.is_zero() {
            return;
        }
        for (p, d) in &other.terms {
            self.add_term(p.clone(), &(c * d));
        }
    }

    pub fn scaled(&self, c: &RatFun) -> FockVec {
        let mut out = FockVec::zero(self.basis);
        out.add_scaled(self, c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<Partition, RatFun> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> RatFun {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same coefficients, relabelled basis (only meaningful for `Jack <-> Fixed`).
    pub fn relabel(&self, basis: Basis) -> FockVec {
        FockVec { basis, terms: self.terms.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let j = FockVecJson {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, c)| TermJson { partition: p.to_string(), coeff: c.to_string() }).collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }
}

/// Which algebra an operator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Chevalley generators of the affine Lie algebra, on Schur functions.
    AffineLie,
    /// Yangian of sl_N (`1 <= i <= N-1`), on Jack functions.
    YangianSl,
    /// Affine Yangian, on the fixed-point basis.
    AffineYangian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Raise,
    Lower,
    Cartan,
}

/// A single generator: `x^+_{i,r}`, `x^-_{i,r}` or `h_{i,r}` of a family.
/// For the affine Lie algebra `r` is ignored and must be 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Op {
    pub family: Family,
    pub kind: Kind,
    pub i: usize,
    pub r: u32,
}

impl Op {
    pub fn new(family: Family, kind: Kind, i: usize, r: u32) -> Self {
        Op { family, kind, i, r }
    }

    pub fn natural_basis(&self) -> Basis {
        match self.family {
            Family::AffineLie => Basis::Schur,
            Family::YangianSl => Basis::Jack,
            Family::AffineYangian => Basis::Fixed,
        }
    }

    pub fn validate(&self, n: usize) -> Result<(), FockError> {
        match self.family {
            Family::AffineLie => {
                if n == 0 {
                    return Err(FockError::BadN(n));
                }
                if self.i >= n {
                    return Err(FockError::BadIndex { i: self.i, n });
                }
            }
            Family::YangianSl => {
                if n < 2 {
                    return Err(FockError::BadN(n));
                }
                if self.i == 0 || self.i >= n {
                    return Err(FockError::BadIndex { i: self.i, n });
                }
            }
            Family::AffineYangian => {
                if n < 2 {
                    return Err(FockError::BadN(n));
                }
                if self.i >= n {
                    return Err(FockError::BadIndex { i: self.i, n });
                }
            }
        }
        Ok(())
    }

    /// Image of one basis vector, as `(partition, coefficient)` pairs.
    pub fn column(&self, lambda: &Partition, n: usize) -> Result<Vec<(Partition, RatFun)>, FockError> {
        self.validate(n)?;
        match (self.family, self.kind) {
            (Family::AffineLie, Kind::Raise) => Ok(lambda
                .removable_of_residue(self.i, n)
                .into_iter()
                .map(|c| (lambda.remove_cell(c).unwrap(), RatFun::one()))
                .collect()),
            (Family::AffineLie, Kind::Lower) => Ok(lambda
                .addable_of_residue(self.i, n)
                .into_iter()
                .map(|c| (lambda.add_cell(c).unwrap(), RatFun::one()))
                .collect()),
            (Family::AffineLie, Kind::Cartan) => {
                let h = lambda.addable_of_residue(self.i, n).len() as i64 - lambda.removable_of_residue(self.i, n).len() as i64;
                Ok(nonzero_diag(lambda, RatFun::from_int(h)))
            }
            (_, Kind::Raise) => raise_column(lambda, self.i, self.r, n, self.weight_shift()),
            (_, Kind::Lower) => lower_column(lambda, self.i, self.r, n, self.weight_shift()),
            (_, Kind::Cartan) => {
                let v = cartan_eigenvalue(self.family, lambda, self.i, self.r, n)?;
                Ok(nonzero_diag(lambda, v))
            }
        }
    }

    /// Shift added to `e1 x + e2 y` in the cell weight.
    fn weight_shift(&self) -> RatFun {
        match self.family {
            Family::YangianSl => sl_shift(self.i),
            _ => RatFun::zero(),
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, h) = match self.family {
            Family::AffineLie => {
                let s = match self.kind {
                    Kind::Raise => "e",
                    Kind::Lower => "f",
                    Kind::Cartan => "h",
                };
                return write!(f, "{s}_{}", self.i);
            }
            Family::YangianSl => ("X", "H"),
            Family::AffineYangian => ("x", "h"),
        };
        match self.kind {
            Kind::Raise => write!(f, "{x}+_{{{},{}}}", self.i, self.r),
            Kind::Lower => write!(f, "{x}-_{{{},{}}}", self.i, self.r),
            Kind::Cartan => write!(f, "{h}_{{{},{}}}", self.i, self.r),
        }
    }
}

fn nonzero_diag(lambda: &Partition, v: RatFun) -> Vec<(Partition, RatFun)> {
    if v.is_zero() {
        Vec::new()
    } else {
        vec![(lambda.clone(), v)]
    }
}

/// `(i/2)(e1 - e2)`.
pub fn sl_shift(i: usize) -> RatFun {
    RatFun::linear(i as i64, -(i as i64)).checked_div(&RatFun::from_int(2)).expect("2 is nonzero")
}

fn raise_column(lambda: &Partition, i: usize, r: u32, n: usize, shift: RatFun) -> Result<Vec<(Partition, RatFun)>, FockError> {
    let mut out = Vec::new();
    let adds = lambda.addable_of_residue(i, n);
    for c in lambda.removable_of_residue(i, n) {
        let mu = lambda.remove_cell(c)?;
        let w = (cell_weight(c) + &shift).pow(r);
        if w.is_zero() {
            continue;
        }
        let (_, ar) = split_left_right(&adds, c.x);
        let (_, rr) = split_left_right(&mu.removable_of_residue(i, n), c.x);
        let mut f = Fraction::new();
        for &a in &ar {
            f.times(&pair_form(c, a, 1)).over(&pair_form(c, a, 0));
        }
        for &b in &rr {
            f.times(&pair_form(c, b, -1)).over(&pair_form(c, b, 0));
        }
        out.push((mu, w * f.finish()?));
    }
    Ok(out)
}

fn lower_column(mu: &Partition, i: usize, r: u32, n: usize, shift: RatFun) -> Result<Vec<(Partition, RatFun)>, FockError> {
    let mut out = Vec::new();
    let rems = mu.removable_of_residue(i, n);
    for c in mu.addable_of_residue(i, n) {
        let lambda = mu.add_cell(c)?;
        let w = (cell_weight(c) + &shift).pow(r);
        if w.is_zero() {
            continue;
        }
        let (al, _) = split_left_right(&lambda.addable_of_residue(i, n), c.x);
        let (rl, _) = split_left_right(&rems, c.x);
        let mut f = Fraction::new();
        for &a in &al {
            f.times(&pair_form(c, a, 1)).over(&pair_form(c, a, 0));
        }
        for &b in &rl {
            f.times(&pair_form(c, b, -1)).over(&pair_form(c, b, 0));
        }
        out.push((lambda, w * f.finish()?));
    }
    Ok(out)
}

/// Factors `(a, b)` of the eigenvalue `prod (u - a)/(u - b)` of the Cartan
/// current on a basis vector: each addable `i`-cell contributes
/// `a = w - hbar`, each removable one `a = w + hbar`, with `b = w` its weight.
pub fn cartan_factors(family: Family, lambda: &Partition, i: usize, n: usize) -> Result<Vec<(RatFun, RatFun)>, FockError> {
    let op = Op::new(family, Kind::Cartan, i, 0);
    op.validate(n)?;
    if family == Family::AffineLie {
        return Err(FockError::NoCurrent);
    }
    let shift = op.weight_shift();
    let hb = RatFun::hbar();
    let mut out = Vec::new();
    for c in lambda.addable_of_residue(i, n) {
        let w = cell_weight(c) + &shift;
        out.push((&w - &hb, w));
    }
    for c in lambda.removable_of_residue(i, n) {
        let w = cell_weight(c) + &shift;
        out.push((&w + &hb, w));
    }
    Ok(out)
}

/// Eigenvalue series of `1 + hbar sum_r h_{i,r} u^{-r-1}` up to `order`.
pub fn cartan_series(family: Family, lambda: &Partition, i: usize, n: usize, order: usize) -> Result<USeries, FockError> {
    Ok(expand_linear_quotient(&cartan_factors(family, lambda, i, n)?, order))
}

/// Eigenvalue of `h_{i,r}` (coefficient of `u^{-r-1}` over `hbar`).
pub fn cartan_eigenvalue(family: Family, lambda: &Partition, i: usize, r: u32, n: usize) -> Result<RatFun, FockError> {
    let s = cartan_series(family, lambda, i, n, r as usize + 1)?;
    Ok(s.coeff(r as usize + 1).unwrap().checked_div(&RatFun::hbar())?)
}

/// Applies one generator to a vector in its natural basis (`Jack` and
/// `Fixed` are accepted interchangeably by both Yangian families).
pub fn act(op: &Op, v: &FockVec, n: usize) -> Result<FockVec, FockError> {
    let expected = op.natural_basis();
    let ok = v.basis == expected || (expected != Basis::Schur && v.basis != Basis::Schur);
    if !ok {
        return Err(FockError::WrongBasis { expected, got: v.basis });
    }
    let mut out = FockVec::zero(v.basis);
    for (lam, c) in v.terms() {
        for (mu, d) in op.column(lam, n)? {
            out.add_term(mu, &(c * &d));
        }
    }
    Ok(out)
}

/// Converts between Schur and Jack (or fixed-point) expansions.
pub fn change_basis(v: &FockVec, target: Basis, n: usize) -> Result<FockVec, FockError> {
    let src_schur = v.basis == Basis::Schur;
    let dst_schur = target == Basis::Schur;
    if src_schur == dst_schur {
        return Ok(v.relabel(target));
    }
    if !src_schur {
        let mut out = FockVec::zero(Basis::Schur);
        for (lam, c) in v.terms() {
            let t = jack_table(n, lam.size())?;
            let p = t.jack(lam);
            for (mu, d) in p.terms() {
                out.add_term(mu.clone(), &(c * d));
            }
        }
        return Ok(out);
    }
    let mut rest = v.clone();
    let mut out = FockVec::zero(target);
    // Unitriangularity: peel off the lex-largest shape of each degree.
    while let Some((lam, c)) = rest.terms().iter().next().map(|(p, c)| (p.clone(), c.clone())) {
        let t = jack_table(n, lam.size())?;
        let p = t.jack(&lam);
        out.add_term(lam.clone(), &c);
        for (mu, d) in p.terms() {
            rest.add_term(mu.clone(), &-(&c * d));
        }
    }
    Ok(out)
}

/// Coefficient `C(r, k) ((i/2)(e1 - e2))^(r-k)` relating the two Yangian
/// presentations: `X_{i,r} = sum_k coeff * x_{i,k}`.
pub fn guay_shift(i: usize, r: u32, k: u32) -> RatFun {
    if k > r {
        return RatFun::zero();
    }
    let binom = num_integer::binomial(BigInt::from(r), BigInt::from(k));
    RatFun::from_bigint(binom) * sl_shift(i).pow(r - k)
}

/// Column of `X^{+-}_{i,r}` assembled from the affine Yangian generators
/// `x^{+-}_{i,k}` through the binomial shift.
pub fn shifted_column(kind: Kind, i: usize, r: u32, lambda: &Partition, n: usize) -> Result<FockVec, FockError> {
    let mut out = FockVec::zero(Basis::Fixed);
    for k in 0..=r {
        let op = Op::new(Family::AffineYangian, kind, i, k);
        let c = guay_shift(i, r, k);
        for (mu, d) in op.column(lambda, n)? {
            out.add_term(mu, &(&c * &d));
        }
    }
    Ok(out)
}
