//! Fixed-point data of the cyclic quiver varieties: tangent characters,
//! Euler classes, the homology pairing and the generator action on fixed
//! point classes.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::cellforms::{cells_hook_divisible, cell_weight, lower_hook_form, pair_form, upper_hook_form};
use crate::fockrep::Kind;
use crate::partitions::{split_left_right, Cell, Partition, PartitionError};
use crate::ratfield::{FieldError, Fraction, IntPoly, RatFun};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("N = {0} is not supported here")]
    BadN(usize),
    #[error("index i = {i} out of range for N = {n}")]
    BadIndex { i: usize, n: usize },
    #[error("only raising and lowering generators act through correspondences")]
    NotACorrespondence,
    #[error("virtual character contains the trivial weight")]
    TrivialWeight,
}

/// Virtual torus character `sum n_(a,b) t1^a t2^b`, zero entries dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Character(BTreeMap<(i64, i64), i64>);

impl Character {
    pub fn zero() -> Self {
        Character::default()
    }

    pub fn monomial(a: i64, b: i64) -> Self {
        let mut c = Character::zero();
        c.add_mono(a, b, 1);
        c
    }

    /// `V = sum over cells of t1^x t2^y`.
    pub fn of_partition(lambda: &Partition) -> Self {
        let mut c = Character::zero();
        for cell in lambda.cells() {
            c.add_mono(cell.x as i64, cell.y as i64, 1);
        }
        c
    }

    pub fn add_mono(&mut self, a: i64, b: i64, k: i64) {
        let e = self.0.entry((a, b)).or_default();
        *e += k;
        if *e == 0 {
            self.0.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), i64> {
        &self.0
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (&(a, b), &k) in &other.0 {
            out.add_mono(a, b, k);
        }
        out
    }

    pub fn sub(&self, other: &Character) -> Character {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Character {
        Character(self.0.iter().map(|(&w, &c)| (w, c * k)).filter(|&(_, c)| c != 0).collect())
    }

    pub fn mul(&self, other: &Character) -> Character {
        let mut out = Character::zero();
        for (&(a, b), &k) in &self.0 {
            for (&(c, d), &l) in &other.0 {
                out.add_mono(a + c, b + d, k * l);
            }
        }
        out
    }

    pub fn dual(&self) -> Character {
        Character(self.0.iter().map(|(&(a, b), &k)| ((-a, -b), k)).collect())
    }

    /// Part with `b - a = i mod N`.
    pub fn component(&self, i: i64, n: usize) -> Character {
        Character(self.0.iter().filter(|(&(a, b), _)| (b - a - i).rem_euclid(n as i64) == 0).map(|(&w, &k)| (w, k)).collect())
    }

    /// Equivariant Euler class `prod (a e1 + b e2)^k`.
    pub fn euler(&self) -> Result<RatFun, QuiverError> {
        let mut f = Fraction::new();
        for (&(a, b), &k) in &self.0 {
            if a == 0 && b == 0 {
                return Err(QuiverError::TrivialWeight);
            }
            let form = IntPoly::linear(a, b);
            for _ in 0..k.unsigned_abs() {
                if k > 0 {
                    f.times(&form);
                } else {
                    f.over(&form);
                }
            }
        }
        Ok(f.finish()?)
    }

    pub fn rank(&self) -> i64 {
        self.0.values().sum()
    }
}

/// `t1 + t2 - t1 t2 - 1`.
fn q_factor() -> Character {
    let mut c = Character::zero();
    c.add_mono(1, 0, 1);
    c.add_mono(0, 1, 1);
    c.add_mono(1, 1, -1);
    c.add_mono(0, 0, -1);
    c
}

/// Weights `(l+1, -a)` and `(-l, a+1)` of every cell whose hook is divisible
/// by `N`.
pub fn tangent_weights(lambda: &Partition, n: usize) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for c in cells_hook_divisible(lambda, n) {
        let l = lambda.leg(c) as i64;
        let a = lambda.arm(c) as i64;
        out.push((l + 1, -a));
        out.push((-l, a + 1));
    }
    out
}

pub fn tangent_character(lambda: &Partition, n: usize) -> Character {
    let mut c = Character::zero();
    for (a, b) in tangent_weights(lambda, n) {
        c.add_mono(a, b, 1);
    }
    c
}

/// Tangent character rebuilt from the tautological bundles:
/// `((t1 + t2 - t1 t2 - 1) V* V + t1 t2 W* V + V* W)_0`.
pub fn tangent_character_tautological(lambda: &Partition, n: usize) -> Character {
    let v = Character::of_partition(lambda);
    let w = Character::monomial(0, 0);
    let t12 = Character::monomial(1, 1);
    q_factor().mul(&v.dual()).mul(&v).add(&t12.mul(&w.dual()).mul(&v)).add(&v.dual().mul(&w)).component(0, n)
}

/// Cell counts per residue.
pub fn v_dim(lambda: &Partition, n: usize) -> Vec<usize> {
    lambda.residue_counts(n)
}

/// `<[lambda], [mu]>`, via the signed Euler class of the tangent space.
pub fn h_form(lambda: &Partition, mu: &Partition, n: usize) -> Result<RatFun, QuiverError> {
    if n == 0 {
        return Err(QuiverError::BadN(n));
    }
    if lambda != mu {
        return Ok(RatFun::zero());
    }
    let weights = tangent_weights(lambda, n);
    let e = tangent_character(lambda, n).euler()?;
    let half_dim = weights.len() / 2;
    Ok(if half_dim % 2 == 1 { -e } else { e })
}

/// Closed product `prod (e1 (l+1) - e2 a)(e1 l - e2 (a+1))` for the diagonal.
pub fn h_form_closed(lambda: &Partition, n: usize) -> RatFun {
    let mut acc = IntPoly::one(2);
    for c in cells_hook_divisible(lambda, n) {
        acc = acc.mul(&lower_hook_form(lambda, c)).mul(&upper_hook_form(lambda, c));
    }
    RatFun::from_poly(acc)
}

/// Scalar `c` with `b'_lambda = c [lambda]`: one over the product of
/// `e1 (l+1) - e2 a` on cells with hook divisible by `N`.
pub fn b_prime_normalization(lambda: &Partition, n: usize) -> Result<RatFun, QuiverError> {
    let mut acc = IntPoly::one(2);
    for c in cells_hook_divisible(lambda, n) {
        acc = acc.mul(&lower_hook_form(lambda, c));
    }
    Ok(RatFun::from_poly(acc).inv()?)
}

/// Scalar `c` with `b_lambda = c [lambda]`, including the inversion sign.
pub fn b_normalization(lambda: &Partition, n: usize) -> Result<RatFun, QuiverError> {
    let c = b_prime_normalization(lambda, n)?;
    Ok(if lambda.epsilon_sign(n) == 1 { -c } else { c })
}

fn check(i: usize, n: usize) -> Result<(), QuiverError> {
    if n < 2 {
        return Err(QuiverError::BadN(n));
    }
    if i >= n {
        return Err(QuiverError::BadIndex { i, n });
    }
    Ok(())
}

fn parity(k: i64) -> bool {
    k.rem_euclid(2) == 1
}

/// Image of `[lambda]` under `x^+_{i,r}` or `x^-_{i,r}` in the fixed-point
/// class basis, with the signs `(-1)^{v_i - v_{i+1} + #A - #R}` and full
/// addable/removable products.
pub fn fixed_point_action(kind: Kind, i: usize, r: u32, lambda: &Partition, n: usize) -> Result<Vec<(Partition, RatFun)>, QuiverError> {
    check(i, n)?;
    let mut out = Vec::new();
    match kind {
        Kind::Raise => {
            let v = lambda.residue_counts(n);
            let adds = lambda.addable_of_residue(i, n);
            for c in lambda.removable_of_residue(i, n) {
                let mu = lambda.remove_cell(c)?;
                let rems = mu.removable_of_residue(i, n);
                let sign = v[i] as i64 - v[(i + 1) % n] as i64 + adds.len() as i64 - rems.len() as i64;
                let mut f = Fraction::new();
                for &a in &adds {
                    f.times(&pair_form(c, a, 1));
                }
                for &b in &rems {
                    f.over(&pair_form(c, b, 0));
                }
                f.negate_if(parity(sign));
                out.push((mu, cell_weight(c).pow(r) * f.finish()?));
            }
        }
        Kind::Lower => {
            let v = lambda.residue_counts(n);
            let rems = lambda.removable_of_residue(i, n);
            for c in lambda.addable_of_residue(i, n) {
                let big = lambda.add_cell(c)?;
                let adds = big.addable_of_residue(i, n);
                let sign = v[i] as i64 - v[(i + 1) % n] as i64 + 1 + adds.len() as i64 - rems.len() as i64;
                let mut f = Fraction::new();
                for &b in &rems {
                    f.times(&pair_form(c, b, -1));
                }
                for &a in &adds {
                    f.over(&pair_form(c, a, 0));
                }
                f.negate_if(parity(sign));
                out.push((big, cell_weight(c).pow(r) * f.finish()?));
            }
        }
        Kind::Cartan => return Err(QuiverError::NotACorrespondence),
    }
    out.retain(|(_, c)| !c.is_zero());
    Ok(out)
}

/// Same matrix elements, derived from the normal-bundle characters of the
/// Hecke correspondence: the coefficient is a sign times `c_1^r` times
/// `e(N) / e(T)` of the target fixed point.
pub fn fixed_point_action_geometric(kind: Kind, i: usize, r: u32, lambda: &Partition, n: usize) -> Result<Vec<(Partition, RatFun)>, QuiverError> {
    check(i, n)?;
    let mut out = Vec::new();
    match kind {
        Kind::Raise => {
            let v = lambda.residue_counts(n);
            let sign = (i == 0) as i64 - (v[i] as i64 - v[(i + n - 1) % n] as i64) + 1;
            for c in lambda.removable_of_residue(i, n) {
                let mu = lambda.remove_cell(c)?;
                let ratio = normal_minus_tangent(&mu, lambda, n, false).euler()?;
                let coeff = cell_weight(c).pow(r) * ratio;
                out.push((mu, if parity(sign) { -coeff } else { coeff }));
            }
        }
        Kind::Lower => {
            for c in lambda.addable_of_residue(i, n) {
                let big = lambda.add_cell(c)?;
                let v = big.residue_counts(n);
                let sign = v[i] as i64 - v[(i + 1) % n] as i64;
                let ratio = normal_minus_tangent(lambda, &big, n, true).euler()?;
                let coeff = cell_weight(c).pow(r) * ratio;
                out.push((big, if parity(sign) { -coeff } else { coeff }));
            }
        }
        Kind::Cartan => return Err(QuiverError::NotACorrespondence),
    }
    out.retain(|(_, c)| !c.is_zero());
    Ok(out)
}

/// Normal-bundle character of the correspondence at `(mu, lambda)`:
/// `((t1 + t2 - t1 t2 - 1) V_mu* V_lambda + t1 t2 W* V_lambda + V_mu* W - t1 t2)_0`.
pub fn normal_character(mu: &Partition, lambda: &Partition, n: usize) -> Character {
    let vm = Character::of_partition(mu);
    let vl = Character::of_partition(lambda);
    let w = Character::monomial(0, 0);
    let t12 = Character::monomial(1, 1);
    q_factor()
        .mul(&vm.dual())
        .mul(&vl)
        .add(&t12.mul(&w.dual()).mul(&vl))
        .add(&vm.dual().mul(&w))
        .sub(&t12)
        .component(0, n)
}

/// `N - T_mu` (or `N - T_lambda` when `at_lambda`), with both tangent spaces
/// taken from the tautological description.
pub fn normal_minus_tangent(mu: &Partition, lambda: &Partition, n: usize, at_lambda: bool) -> Character {
    let t = if at_lambda { tangent_character_tautological(lambda, n) } else { tangent_character_tautological(mu, n) };
    normal_character(mu, lambda, n).sub(&t)
}

/// Displayed closed form of `N - T_mu`, for the removed cell `c`:
/// `sum_A t^{c - a + (1,1)} - sum_{R_mu} t^{c - b}`.
pub fn normal_minus_tangent_closed(lambda: &Partition, c: Cell, n: usize, at_lambda: bool) -> Result<Character, QuiverError> {
    let i = c.residue(n);
    let mu = lambda.remove_cell(c)?;
    let (x, y) = (c.x as i64, c.y as i64);
    let mut out = Character::zero();
    for a in lambda.addable_of_residue(i, n) {
        let (xa, ya) = (a.x as i64, a.y as i64);
        if at_lambda {
            out.add_mono(xa - x, ya - y, -1);
        } else {
            out.add_mono(x - xa + 1, y - ya + 1, 1);
        }
    }
    for b in mu.removable_of_residue(i, n) {
        let (xb, yb) = (b.x as i64, b.y as i64);
        if at_lambda {
            out.add_mono(xb - x + 1, yb - y + 1, 1);
        } else {
            out.add_mono(x - xb, y - yb, -1);
        }
    }
    Ok(out)
}

/// Both character identities for the tautological bundles at `lambda`:
/// `((t1+t2-t1t2-1) V + W)_i = sum_A t^a - sum_R t^{b+(1,1)}` and its dual
/// `((t1+t2-t1t2-1) V* + t1 t2 W*)_{-i} = sum_A t^{(1,1)-a} - sum_R t^{-b}`.
pub fn vv_weight_identities(lambda: &Partition, i: usize, n: usize) -> bool {
    let v = Character::of_partition(lambda);
    let w = Character::monomial(0, 0);
    let lhs = q_factor().mul(&v).add(&w).component(i as i64, n);
    let lhs_dual = q_factor().mul(&v.dual()).add(&Character::monomial(1, 1).mul(&w.dual())).component(-(i as i64), n);
    let mut rhs = Character::zero();
    let mut rhs_dual = Character::zero();
    for a in lambda.addable_of_residue(i, n) {
        rhs.add_mono(a.x as i64, a.y as i64, 1);
        rhs_dual.add_mono(1 - a.x as i64, 1 - a.y as i64, 1);
    }
    for b in lambda.removable_of_residue(i, n) {
        rhs.add_mono(b.x as i64 + 1, b.y as i64 + 1, -1);
        rhs_dual.add_mono(-(b.x as i64), -(b.y as i64), -1);
    }
    lhs == rhs && lhs_dual == rhs_dual
}

/// Which renormalized basis a fixed-point matrix element is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `[lambda]` itself.
    Classes,
    /// `b'_lambda`, hook-normalized without sign.
    Primed,
    /// `b_lambda`, including the inversion sign.
    Signed,
    /// `b'_lambda` with the corrected sign statistic.
    Corrected,
}

fn scale_of(lambda: &Partition, n: usize, norm: Normalization) -> Result<RatFun, QuiverError> {
    match norm {
        Normalization::Classes => Ok(RatFun::one()),
        Normalization::Primed => b_prime_normalization(lambda, n),
        Normalization::Signed => b_normalization(lambda, n),
        Normalization::Corrected => {
            let c = b_prime_normalization(lambda, n)?;
            Ok(if lambda.corrected_sign(n) == 1 { -c } else { c })
        }
    }
}

/// Fixed-point action re-expressed in a renormalized basis: the coefficient
/// of `b_mu` in `x b_lambda` is `c_{mu lambda} norm(lambda) / norm(mu)`.
pub fn conjugated_action(kind: Kind, i: usize, r: u32, lambda: &Partition, n: usize, norm: Normalization) -> Result<Vec<(Partition, RatFun)>, QuiverError> {
    let src = scale_of(lambda, n, norm)?;
    fixed_point_action(kind, i, r, lambda, n)?
        .into_iter()
        .map(|(mu, c)| {
            let dst = scale_of(&mu, n, norm)?;
            Ok((mu, (c * &src).checked_div(&dst)?))
        })
        .collect()
}

/// Predicted matrix elements in the primed basis: split products over
/// cells on one side of the moved cell, with sign
/// `(-1)^{v_i - v_{i+1} + #A^l - #R^l}` (plus one for lowering).
pub fn primed_action_predicted(kind: Kind, i: usize, r: u32, lambda: &Partition, n: usize) -> Result<Vec<(Partition, RatFun)>, QuiverError> {
    check(i, n)?;
    let v = lambda.residue_counts(n);
    let base = v[i] as i64 - v[(i + 1) % n] as i64;
    let mut out = Vec::new();
    match kind {
        Kind::Raise => {
            let adds = lambda.addable_of_residue(i, n);
            for c in lambda.removable_of_residue(i, n) {
                let mu = lambda.remove_cell(c)?;
                let rems = mu.removable_of_residue(i, n);
                let (al, ar) = split_left_right(&adds, c.x);
                let (rl, rr) = split_left_right(&rems, c.x);
                let mut f = Fraction::new();
                for &a in &ar {
                    f.times(&pair_form(c, a, 1)).over(&pair_form(c, a, 0));
                }
                for &b in &rr {
                    f.times(&pair_form(c, b, -1)).over(&pair_form(c, b, 0));
                }
                f.negate_if(parity(base + al.len() as i64 - rl.len() as i64));
                out.push((mu, cell_weight(c).pow(r) * f.finish()?));
            }
        }
        Kind::Lower => {
            let rems = lambda.removable_of_residue(i, n);
            for c in lambda.addable_of_residue(i, n) {
                let big = lambda.add_cell(c)?;
                let adds = big.addable_of_residue(i, n);
                let (al, _) = split_left_right(&adds, c.x);
                let (rl, _) = split_left_right(&rems, c.x);
                let mut f = Fraction::new();
                for &a in &al {
                    f.times(&pair_form(c, a, 1)).over(&pair_form(c, a, 0));
                }
                for &b in &rl {
                    f.times(&pair_form(c, b, -1)).over(&pair_form(c, b, 0));
                }
                f.negate_if(parity(base + 1 + al.len() as i64 - rl.len() as i64));
                out.push((big, cell_weight(c).pow(r) * f.finish()?));
            }
        }
        Kind::Cartan => return Err(QuiverError::NotACorrespondence),
    }
    out.retain(|(_, c)| !c.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfield::parse_ratfun;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn tangent_examples() {
        assert!(tangent_weights(&p("1"), 2).is_empty());
        assert_eq!(tangent_weights(&p("2"), 2), vec![(1, -1), (0, 2)]);
        assert_eq!(tangent_weights(&p("1"), 1), vec![(1, 0), (0, 1)]);
    }

    #[test]
    fn form_examples() {
        assert_eq!(h_form(&p("1"), &p("1"), 2).unwrap(), RatFun::one());
        assert_eq!(h_form(&p("2"), &p("2"), 2).unwrap(), parse_ratfun("(e1 - e2)*(-2*e2)").unwrap());
        assert!(h_form(&p("2"), &p("1,1"), 2).unwrap().is_zero());
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(b_normalization(&Partition::empty(), 2).unwrap(), RatFun::from_int(-1));
        let s = if p("2").epsilon_sign(2) == 1 { -1 } else { 1 };
        assert_eq!(b_normalization(&p("2"), 2).unwrap(), parse_ratfun("1/(e1 - e2)").unwrap().scale_int(s));
    }

    #[test]
    fn lowering_empty_class() {
        let v = fixed_point_action(Kind::Lower, 0, 0, &Partition::empty(), 2).unwrap();
        assert_eq!(v, vec![(p("1"), RatFun::from_int(-1))]);
        assert!(fixed_point_action(Kind::Raise, 1, 2, &Partition::empty(), 2).unwrap().is_empty());
    }
}
