//! Gelfand-Tsetlin schemes for tensor products of fundamental sl_N-modules
//! and the Yangian action on them, matched against the Fock-space side.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::cellforms::pair_form;
use crate::partitions::{Cell, Partition, PartitionError};
use crate::ratfield::{expand_linear_quotient, hbar_prime, t_param, FieldError, Fraction, RatFun, USeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GzError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("N must be at least 2")]
    BadN,
    #[error("index out of range: {0}")]
    BadIndex(String),
    #[error("malformed block sequence: {0}")]
    BadSequence(String),
    #[error("malformed scheme: {0}")]
    BadScheme(String),
}

/// Nondecreasing integer sequence agreeing with `(1^N 2^N ...)` far out,
/// stored as its leading blocks `(r_s)^{p_s}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MSeq {
    pub n: usize,
    blocks: Vec<(i64, usize)>,
}

/// `m` value at position `a` (1-based) of the tail `(1^N 2^N ...)`.
fn tail_m(a: usize, n: usize) -> i64 {
    ((a - 1) / n + 1) as i64
}

impl MSeq {
    pub fn new(n: usize, blocks: Vec<(i64, usize)>) -> Result<Self, GzError> {
        if n < 2 {
            return Err(GzError::BadN);
        }
        if blocks.is_empty() {
            return Err(GzError::BadSequence("no blocks".into()));
        }
        for w in blocks.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(GzError::BadSequence("block values must increase".into()));
            }
        }
        if blocks.iter().any(|&(_, p)| p == 0 || p > n) {
            return Err(GzError::BadSequence(format!("block sizes must lie in 1..={n}")));
        }
        let total: usize = blocks.iter().map(|b| b.1).sum();
        if total % n != 0 {
            return Err(GzError::BadSequence(format!("total length {total} is not a multiple of {n}")));
        }
        let last = blocks.last().unwrap().0;
        if last >= tail_m(total + 1, n) {
            return Err(GzError::BadSequence("last block runs into the tail".into()));
        }
        Ok(MSeq { n, blocks })
    }

    pub fn blocks(&self) -> &[(i64, usize)] {
        &self.blocks
    }

    /// Number of blocks `l`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `p_s` (1-based `s`).
    pub fn size(&self, s: usize) -> usize {
        self.blocks[s - 1].1
    }

    /// `p_1 + ... + p_s`.
    pub fn prefix(&self, s: usize) -> usize {
        self.blocks[..s].iter().map(|b| b.1).sum()
    }

    /// `p_1 + ... + p_l`, a multiple of `N`.
    pub fn total(&self) -> usize {
        self.prefix(self.len())
    }

    /// `m_a` for any `a >= 1`.
    pub fn m_at(&self, a: usize) -> i64 {
        let mut end = 0;
        for &(r, p) in &self.blocks {
            end += p;
            if a <= end {
                return r;
            }
        }
        tail_m(a, self.n)
    }

    /// Block `s` and in-block index `p` of position `a <= total`, via
    /// `a = p_1 + ... + p_s - p + 1`.
    pub fn locate(&self, a: usize) -> Option<(usize, usize)> {
        let mut end = 0;
        for (k, &(_, ps)) in self.blocks.iter().enumerate() {
            end += ps;
            if a <= end {
                return Some((k + 1, end + 1 - a));
            }
        }
        None
    }

    /// `a_s = t r_s + hbar' (p_1 + ... + p_s - 3/2)`.
    pub fn a_const(&self, s: usize) -> RatFun {
        let r = self.blocks[s - 1].0;
        let half = RatFun::from_ratio(2 * self.prefix(s) as i64 - 3, 2).unwrap();
        t_param(self.n).scale_int(r) + hbar_prime() * half
    }
}

/// Zero-one pattern with entries `lambda^(s)_{i,p}`, `1 <= p <= i <= N`,
/// kept as the thresholds `i_p^(s) = min { i | lambda^(s)_{i,p} = 1 }`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GzScheme {
    pub n: usize,
    thresholds: Vec<Vec<usize>>,
}

impl GzScheme {
    /// Checks that row `N` of block `s` has `p_s` ones and that rows interlace.
    pub fn new(m: &MSeq, thresholds: Vec<Vec<usize>>) -> Result<Self, GzError> {
        if thresholds.len() != m.len() {
            return Err(GzError::BadScheme(format!("expected {} blocks, got {}", m.len(), thresholds.len())));
        }
        for (k, th) in thresholds.iter().enumerate() {
            if th.len() != m.size(k + 1) {
                return Err(GzError::BadScheme(format!("block {} needs {} thresholds", k + 1, m.size(k + 1))));
            }
            for (p, &t) in th.iter().enumerate() {
                if t < p + 1 || t > m.n {
                    return Err(GzError::BadScheme(format!("threshold {t} out of range at position {}", p + 1)));
                }
            }
            if th.windows(2).any(|w| w[0] >= w[1]) {
                return Err(GzError::BadScheme("thresholds must increase".into()));
            }
        }
        Ok(GzScheme { n: m.n, thresholds })
    }

    pub fn thresholds(&self) -> &[Vec<usize>] {
        &self.thresholds
    }

    pub fn blocks(&self) -> usize {
        self.thresholds.len()
    }

    /// `lambda^(s)_{i,p}`; zero when `p > i` or `p > p_s`.
    pub fn entry(&self, s: usize, i: usize, p: usize) -> u8 {
        match self.thresholds[s - 1].get(p.wrapping_sub(1)) {
            Some(&t) if p >= 1 && p <= i && t <= i => 1,
            _ => 0,
        }
    }

    /// `l_i^(s)`, the number of ones in row `i`.
    pub fn row_count(&self, s: usize, i: usize) -> usize {
        self.thresholds[s - 1].iter().filter(|&&t| t <= i).count()
    }

    /// `kappa^(s)_{i,p}`: one exactly when `p <= min(i, p_s)`.
    fn kappa(&self, s: usize, i: usize, p: usize) -> i64 {
        (p >= 1 && p <= i.min(self.thresholds[s - 1].len())) as i64
    }

    /// The scheme with entry `(s, i, p)` flipped, if still interlacing.
    pub fn flipped(&self, s: usize, i: usize, p: usize) -> Option<GzScheme> {
        if s == 0 || s > self.blocks() || i == 0 || i >= self.n || p == 0 || p > i {
            return None;
        }
        let ps = self.thresholds[s - 1].len();
        // Rows 1..N as explicit zero-one vectors.
        let mut rows: Vec<Vec<u8>> = (0..=self.n).map(|ii| (0..=ii).map(|pp| self.entry(s, ii, pp)).collect()).collect();
        rows[i][p] ^= 1;
        for ii in 2..=self.n {
            for pp in 1..ii {
                if !(rows[ii][pp] >= rows[ii - 1][pp] && rows[ii - 1][pp] >= rows[ii][pp + 1]) {
                    return None;
                }
            }
        }
        let mut th = Vec::with_capacity(ps);
        for pp in 1..=ps {
            th.push((pp..=self.n).find(|&ii| rows[ii][pp] == 1)?);
        }
        let mut out = self.clone();
        out.thresholds[s - 1] = th;
        Some(out)
    }

    /// Pairs `(s, p)` with `lambda^(s)_{i,p} = 0` that can be raised to one.
    pub fn raisable(&self, i: usize) -> Vec<(usize, usize)> {
        self.flippable(i, 0)
    }

    /// Pairs `(s, p)` with `lambda^(s)_{i,p} = 1` that can be lowered to zero.
    pub fn lowerable(&self, i: usize) -> Vec<(usize, usize)> {
        self.flippable(i, 1)
    }

    fn flippable(&self, i: usize, value: u8) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in 1..=self.blocks() {
            for p in 1..=i {
                if self.entry(s, i, p) == value && self.flipped(s, i, p).is_some() {
                    out.push((s, p));
                }
            }
        }
        out
    }
}

/// Block sequence and scheme of a partition. The block sequence is the
/// shortest one (with at least one block) after which `m(lambda)` agrees
/// with the tail.
pub fn partition_to_gz(lambda: &Partition, n: usize) -> Result<(MSeq, GzScheme), GzError> {
    if n < 2 {
        return Err(GzError::BadN);
    }
    let mut k = n;
    let (js, ms) = loop {
        let (js, ms) = lambda.jm_decomposition(n, lambda.len().max(k) + 1);
        let agrees = (k + 1..=ms.len()).all(|a| ms[a - 1] == tail_m(a, n));
        if agrees && ms[k - 1] < ms[k] {
            break (js, ms);
        }
        k += n;
    };
    let mut blocks: Vec<(i64, usize)> = Vec::new();
    for &m in &ms[..k] {
        match blocks.last_mut() {
            Some(b) if b.0 == m => b.1 += 1,
            _ => blocks.push((m, 1)),
        }
    }
    let mseq = MSeq::new(n, blocks)?;
    let mut thresholds = Vec::with_capacity(mseq.len());
    for s in 1..=mseq.len() {
        let end = mseq.prefix(s);
        thresholds.push((1..=mseq.size(s)).map(|p| js[end - p]).collect());
    }
    let scheme = GzScheme::new(&mseq, thresholds)?;
    Ok((mseq, scheme))
}

/// Inverse of [`partition_to_gz`]: `j_{p_1+...+p_s-p+1} = i_p^(s)`.
pub fn gz_to_partition(m: &MSeq, scheme: &GzScheme, n: usize) -> Result<Partition, GzError> {
    if m.n != n || scheme.n != n || scheme.blocks() != m.len() {
        return Err(GzError::BadScheme("block sequence and scheme disagree".into()));
    }
    let total = m.total();
    let mut parts = Vec::with_capacity(total);
    for a in 1..=total {
        let (s, p) = m.locate(a).unwrap();
        let j = scheme.thresholds[s - 1][p - 1] as i64;
        let v = j - n as i64 * m.m_at(a) + a as i64 - 1;
        if v < 0 {
            return Err(GzError::BadScheme(format!("negative part at position {a}")));
        }
        parts.push(v as usize);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(GzError::BadScheme("parts are not nonincreasing".into()));
    }
    Ok(Partition::new(parts)?)
}

/// `(a_s, nu^(s)_{i,p})` with `nu = hbar' (p - 1 - lambda^(s)_{i,p}) - a_s`.
pub fn gz_constants(m: &MSeq, scheme: &GzScheme, s: usize, i: usize, p: usize) -> Result<(RatFun, RatFun), GzError> {
    if s == 0 || s > m.len() || i == 0 || i > m.n || p == 0 || p > i {
        return Err(GzError::BadIndex(format!("(s, i, p) = ({s}, {i}, {p})")));
    }
    let a = m.a_const(s);
    Ok((a.clone(), nu(m, scheme, s, i, p, &a)))
}

fn nu(_m: &MSeq, scheme: &GzScheme, s: usize, i: usize, p: usize, a_s: &RatFun) -> RatFun {
    hbar_prime().scale_int(p as i64 - 1 - scheme.entry(s, i, p) as i64) - a_s
}

/// Scheme together with its block constants; everything below reads from it.
struct Frame<'a> {
    scheme: &'a GzScheme,
    a: Vec<RatFun>,
}

impl<'a> Frame<'a> {
    fn new(m: &MSeq, scheme: &'a GzScheme) -> Self {
        let a = (1..=m.len()).map(|s| m.a_const(s)).collect();
        Frame { scheme, a }
    }

    fn l(&self) -> usize {
        self.a.len()
    }

    /// `hbar' k - (a_s - a_t)`.
    fn form(&self, k: i64, s: usize, t: usize) -> RatFun {
        hbar_prime().scale_int(k) - (&self.a[s - 1] - &self.a[t - 1])
    }

    fn nu(&self, s: usize, i: usize, p: usize) -> RatFun {
        hbar_prime().scale_int(p as i64 - 1 - self.scheme.entry(s, i, p) as i64) - &self.a[s - 1]
    }

    fn k_plus(&self, s: usize, p: usize, t: usize, q: usize, i: usize) -> RatFun {
        self.form(p as i64 - q as i64 + self.scheme.kappa(t, i + 1, q), s, t)
    }

    fn l_plus(&self, s: usize, p: usize, t: usize, q: usize, i: usize) -> RatFun {
        self.form(p as i64 - q as i64 + self.scheme.entry(t, i + 1, q) as i64, s, t)
    }

    fn k_minus(&self, s: usize, p: usize, t: usize, q: usize, i: usize) -> RatFun {
        self.form(p as i64 - q as i64 - 1 + self.scheme.kappa(t, i - 1, q), s, t)
    }

    fn l_minus(&self, s: usize, p: usize, t: usize, q: usize, i: usize) -> RatFun {
        self.form(p as i64 - q as i64 - 1 + self.scheme.entry(t, i - 1, q) as i64, s, t)
    }

    fn gamma(&self, s: usize, p: usize, i: usize) -> RatFun {
        let mut acc = RatFun::one();
        for t in 1..=self.l() {
            for q in 1..=p {
                acc *= self.k_plus(s, p, t, q, i);
            }
            for q in p + 1..=i + 1 {
                acc *= self.l_plus(s, p, t, q, i);
            }
            for q in 1..p {
                acc *= self.k_minus(s, p, t, q, i);
            }
            for q in p..i {
                acc *= self.l_minus(s, p, t, q, i);
            }
        }
        acc
    }

    fn beta(&self, s: usize, p: usize, i: usize) -> Result<RatFun, FieldError> {
        let mut num = RatFun::one();
        let mut den = RatFun::one();
        for t in 1..=self.l() {
            for q in 1..=p {
                num *= self.l_plus(s, p, t, q, i);
                den *= self.k_plus(s, p, t, q, i);
            }
            for q in 1..p {
                num *= self.l_minus(s, p, t, q, i);
                den *= self.k_minus(s, p, t, q, i);
            }
        }
        num.checked_div(&den)
    }

    /// `prod_{(t, q) != (s, p), q <= i} (nu^(s)_{i,p} - nu^(t)_{i,q})`,
    /// optionally restricted to one block `t`.
    fn nu_gaps(&self, s: usize, p: usize, i: usize, only: Option<usize>) -> RatFun {
        let base = self.nu(s, i, p);
        let mut acc = RatFun::one();
        for t in 1..=self.l() {
            if only.is_some_and(|o| o != t) {
                continue;
            }
            for q in 1..=i {
                if (t, q) != (s, p) {
                    acc *= &base - &self.nu(t, i, q);
                }
            }
        }
        acc
    }
}

/// `(gamma^(s)_{i,p}, beta^(s)_{i,p})` on a scheme. `gamma` is meant for
/// raisable pairs and `beta` for lowerable ones; both are evaluated as the
/// plain products regardless.
pub fn nt_gamma_beta(m: &MSeq, scheme: &GzScheme, i: usize, p: usize, s: usize) -> Result<(RatFun, RatFun), GzError> {
    if i == 0 || i >= m.n || p == 0 || p > i || s == 0 || s > m.len() {
        return Err(GzError::BadIndex(format!("(s, i, p) = ({s}, {i}, {p})")));
    }
    let f = Frame::new(m, scheme);
    Ok((f.gamma(s, p, i), f.beta(s, p, i)?))
}

/// Which quotient of the two lemma-factor families is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorSide {
    /// `prod L_+ / prod (nu - nu')`, for raisable pairs.
    Raise,
    /// `prod L_- / prod (nu - nu')`, for lowerable pairs.
    Lower,
}

/// Block-`t` quotient of `L`-products by `nu`-gaps, evaluated term by term.
pub fn lemma_factor_direct(m: &MSeq, scheme: &GzScheme, side: FactorSide, s: usize, p: usize, t: usize, i: usize) -> Result<RatFun, GzError> {
    let f = Frame::new(m, scheme);
    let mut num = RatFun::one();
    match side {
        FactorSide::Raise => {
            for q in 1..=i + 1 {
                num *= f.l_plus(s, p, t, q, i);
            }
        }
        FactorSide::Lower => {
            for q in 1..i {
                num *= f.l_minus(s, p, t, q, i);
            }
        }
    }
    Ok(num.checked_div(&f.nu_gaps(s, p, i, Some(t)))?)
}

/// Closed form of [`lemma_factor_direct`], split by how the row counts of
/// block `t` change between rows `i` and `i +- 1`.
pub fn lemma_factor_closed(m: &MSeq, scheme: &GzScheme, side: FactorSide, s: usize, p: usize, t: usize, i: usize) -> Result<RatFun, GzError> {
    let f = Frame::new(m, scheme);
    let pi = p as i64;
    let ii = i as i64;
    let hp = hbar_prime();
    if t == s {
        return Ok(match side {
            FactorSide::Raise => (&hp * &hp).scale_int(pi - ii - 1),
            FactorSide::Lower => RatFun::from_ratio(-1, pi - ii - 1)?,
        });
    }
    let li = scheme.row_count(t, i) as i64;
    let out = match side {
        FactorSide::Raise => {
            let next = scheme.row_count(t, i + 1) as i64;
            if next == li {
                f.form(pi - ii - 1, s, t)
            } else if li == ii {
                f.form(pi - ii, s, t)
            } else {
                (f.form(pi - li, s, t) * f.form(pi - ii - 1, s, t)).checked_div(&f.form(pi - li - 1, s, t))?
            }
        }
        FactorSide::Lower => {
            let prev = scheme.row_count(t, i - 1) as i64;
            if prev == li {
                f.form(pi - ii - 1, s, t).inv()?
            } else if li == ii {
                f.form(pi - ii, s, t).inv()?
            } else {
                f.form(pi - li - 1, s, t).checked_div(&(f.form(pi - li, s, t) * f.form(pi - ii - 1, s, t)))?
            }
        }
    };
    Ok(out)
}

/// One pair of matrix elements between `lambda` and `mu = lambda \ cell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixElement {
    pub cell: Cell,
    pub mu: Partition,
    /// Position `(s, p)` of the flipped entry.
    pub block: usize,
    pub pos: usize,
    /// Coefficient of `xi_mu` in the raising operator on `xi_lambda`.
    pub e_tilde: RatFun,
    /// Coefficient of `xi_lambda` in the lowering operator on `xi_mu`.
    pub f_tilde: RatFun,
    /// `-hbar' (p - 2) + a_s`.
    pub pole: RatFun,
    /// Weight `w` with the level-`r` elements equal to `w^r` times the above.
    pub weight: RatFun,
}

impl MatrixElement {
    pub fn e_at(&self, r: u32) -> RatFun {
        self.weight.pow(r) * &self.e_tilde
    }

    pub fn f_at(&self, r: u32) -> RatFun {
        self.weight.pow(r) * &self.f_tilde
    }
}

/// Cell of `lambda` on row `p_1 + ... + p_s - p`; removable when the
/// entry is raisable, addable when lowerable.
fn cell_of(m: &MSeq, lambda: &Partition, s: usize, p: usize, removable: bool) -> Cell {
    let x = m.prefix(s) - p;
    let len = lambda.row(x);
    Cell::new(x, if removable { len - 1 } else { len })
}

/// Matrix elements of the raising and lowering generators at level zero, one
/// per removable `i`-cell of `lambda`, computed from the product formulas.
pub fn nt_matrix_elements(lambda: &Partition, i: usize, n: usize) -> Result<Vec<MatrixElement>, GzError> {
    if n < 2 {
        return Err(GzError::BadN);
    }
    if i == 0 || i >= n {
        return Err(GzError::BadIndex(format!("i = {i} for N = {n}")));
    }
    let (m, scheme) = partition_to_gz(lambda, n)?;
    let frame = Frame::new(&m, &scheme);
    let hb = RatFun::hbar();
    let mut out = Vec::new();
    for (s, p) in scheme.raisable(i) {
        let raised = scheme.flipped(s, i, p).unwrap();
        let up = Frame::new(&m, &raised);
        let e = frame.gamma(s, p, i).checked_div(&(&hb * &frame.nu_gaps(s, p, i, None)))?;
        let f = -up.beta(s, p, i)?.checked_div(&(&hb * &up.nu_gaps(s, p, i, None)))?;
        let cell = cell_of(&m, lambda, s, p, true);
        let mu = gz_to_partition(&m, &raised, n)?;
        let pole = -hbar_prime().scale_int(p as i64 - 2) + &frame.a[s - 1];
        let weight = -&pole + hb.scale_int(i as i64 - 1) * RatFun::from_ratio(1, 2)?;
        out.push(MatrixElement { cell, mu, block: s, pos: p, e_tilde: e, f_tilde: f, pole, weight });
    }
    Ok(out)
}

/// Right-hand side of the product identity for `e_tilde * f_tilde`:
/// addable `i`-cells of `lambda` and removable `i`-cells of `mu`, against
/// the removed cell.
pub fn cell_product(lambda: &Partition, cell: Cell, i: usize, n: usize) -> Result<RatFun, GzError> {
    let mu = lambda.remove_cell(cell)?;
    let mut f = Fraction::new();
    for a in lambda.addable_of_residue(i, n) {
        f.times(&pair_form(cell, a, 1)).over(&pair_form(cell, a, 0));
    }
    for b in mu.removable_of_residue(i, n) {
        f.times(&pair_form(cell, b, -1)).over(&pair_form(cell, b, 0));
    }
    Ok(f.finish()?)
}

/// Linear factors `(a, b)` standing for `(u - a)/(u - b)`.
pub type FactorList = Vec<(RatFun, RatFun)>;

/// Eigenvalue of `A_i(u)` on the scheme vector of `lambda`, as
/// `prod_{s, p <= i} (u - nu^(s)_{i,p}) / (u - hbar'(p - 1) + a_s)`.
pub fn nt_a_eigenvalue(lambda: &Partition, i: usize, n: usize) -> Result<FactorList, GzError> {
    if n < 2 {
        return Err(GzError::BadN);
    }
    if i == 0 || i > n {
        return Err(GzError::BadIndex(format!("i = {i} for N = {n}")));
    }
    let (m, scheme) = partition_to_gz(lambda, n)?;
    let frame = Frame::new(&m, &scheme);
    let mut out = Vec::new();
    for s in 1..=m.len() {
        for p in 1..=i {
            let den = hbar_prime().scale_int(p as i64 - 1) - &frame.a[s - 1];
            out.push((frame.nu(s, i, p), den));
        }
    }
    Ok(out)
}

/// Eigenvalue of `A_i(u)` on the Fock side without the twist: the product
/// over `a = 1..rN` of `(u + t m_a + hbar'(a - 3/2 + [j_a <= i])) / (u + t m_a + hbar'(a - 3/2))`,
/// with `rN` the block total of `lambda`.
pub fn uglov_a_eigenvalue_ratio(lambda: &Partition, i: usize, n: usize) -> Result<FactorList, GzError> {
    if n < 2 {
        return Err(GzError::BadN);
    }
    if i == 0 || i > n {
        return Err(GzError::BadIndex(format!("i = {i} for N = {n}")));
    }
    let (m, _) = partition_to_gz(lambda, n)?;
    let total = m.total();
    let (js, ms) = lambda.jm_decomposition(n, total);
    let t = t_param(n);
    let hp = hbar_prime();
    let mut out = Vec::with_capacity(total);
    for a in 1..=total {
        let base = t.scale_int(ms[a - 1]) + &hp * RatFun::from_ratio(2 * a as i64 - 3, 2)?;
        let shift = if js[a - 1] <= i { hp.clone() } else { RatFun::zero() };
        out.push((-(&base + &shift), -base));
    }
    Ok(out)
}

/// Roots minus poles, with trivial factors cancelled.
pub fn signed_roots(factors: &[(RatFun, RatFun)]) -> BTreeMap<RatFun, i64> {
    let mut acc: BTreeMap<RatFun, i64> = BTreeMap::new();
    for (a, b) in factors {
        *acc.entry(a.clone()).or_default() += 1;
        *acc.entry(b.clone()).or_default() -= 1;
    }
    acc.retain(|_, v| *v != 0);
    acc
}

/// `prod (u - a)/(u - b)` as an element of the four-variable field, `u` being
/// the third variable.
pub fn factors_as_ratfun(factors: &[(RatFun, RatFun)]) -> Result<RatFun, GzError> {
    let u = RatFun::var4(2);
    let mut num = RatFun::one();
    let mut den = RatFun::one();
    for (a, b) in factors {
        num *= &u - a;
        den *= &u - b;
    }
    Ok(num.checked_div(&den)?)
}

/// Factors of `f(u; r) = prod_{s=1}^r (u + (t + hbar' N)s - hbar') / (u + (t + hbar' N)s)`.
pub fn twist_factors(r: usize, n: usize) -> FactorList {
    let step = t_param(n) + hbar_prime().scale_int(n as i64);
    (1..=r as i64)
        .map(|s| {
            let b = -step.scale_int(s);
            (&b + &hbar_prime(), b)
        })
        .collect()
}

/// `f(u; r)` expanded in `u^-1` up to `order`.
pub fn twist_factor(r: usize, n: usize, order: usize) -> USeries {
    expand_linear_quotient(&twist_factors(r, n), order)
}

/// Factors of `g_i(u + shift) = prod_{k < i} f(u + shift - hbar' k; r)`.
pub fn g_factors(i: usize, r: usize, n: usize, shift: &RatFun) -> FactorList {
    let mut out = Vec::new();
    for k in 0..i as i64 {
        let d = shift - &hbar_prime().scale_int(k);
        for (a, b) in twist_factors(r, n) {
            out.push((a - &d, b - &d));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfield::parse_ratfun;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn empty_partition_scheme() {
        let (m, g) = partition_to_gz(&Partition::empty(), 2).unwrap();
        assert_eq!(m.blocks(), &[(1, 2)]);
        assert_eq!(g.thresholds(), &[vec![1, 2]]);
    }

    #[test]
    fn single_box_scheme() {
        let (m, g) = partition_to_gz(&p("1"), 2).unwrap();
        assert_eq!(m.blocks(), &[(0, 1), (1, 1)]);
        assert_eq!(g.thresholds(), &[vec![1], vec![1]]);
    }

    #[test]
    fn first_block_constant() {
        let (m, _) = partition_to_gz(&Partition::empty(), 2).unwrap();
        assert_eq!(m.a_const(1), parse_ratfun("(-e1 + 3*e2)/2").unwrap());
    }

    #[test]
    fn no_elements_without_cells() {
        assert!(nt_matrix_elements(&p("1"), 1, 2).unwrap().is_empty());
    }

    #[test]
    fn twist_trivial_and_first_order() {
        assert_eq!(twist_factor(0, 3, 4), USeries::one(4));
        let s = twist_factor(1, 2, 2);
        // f(u;1) = (u - 2 e1 - hbar')/(u - 2 e1) = 1 + hbar/(u - 2 e1).
        assert_eq!(s.coeff(1).unwrap(), &RatFun::hbar());
        assert_eq!(s.coeff(2).unwrap(), &parse_ratfun("2*e1^2 + 2*e1*e2").unwrap());
    }
}
