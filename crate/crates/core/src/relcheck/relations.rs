use std::fmt;

use serde::Serialize;

use super::engine::Expr;
use super::RelcheckError;
use crate::fockrep::{Family, Kind, Op};
use crate::ratfield::RatFun;

/// Position of the second index relative to the first in a shift relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Adj {
    /// `j` not in `{i-1, i, i+1}`.
    Far,
    Same,
    /// `j = i - 1`.
    Left,
    /// `j = i + 1`.
    Right,
    /// Any `j`, right-hand side governed by the Cartan entry (finite Yangian).
    Cartan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rel {
    CartanCommute,
    RaiseLower,
    CartanWeight,
    /// `[h_{i,r+1}, x_{j,s}] - [h_{i,r}, x_{j,s+1}]` against its right-hand side.
    CartanShift(Adj),
    /// Same with `x_i` in place of `h_i`.
    Shift(Adj),
    Serre,
    /// Second-order `N = 2` form of `CartanShift` between the two nodes.
    CartanShiftRank2,
    /// Second-order `N = 2` form of `Shift` between the two nodes.
    ShiftRank2,
}

impl Rel {
    pub fn name(&self) -> String {
        let adj = |a: &Adj| match a {
            Adj::Far => "far",
            Adj::Same => "same",
            Adj::Left => "left",
            Adj::Right => "right",
            Adj::Cartan => "cartan",
        };
        match self {
            Rel::CartanCommute => "cartan-commute".into(),
            Rel::RaiseLower => "raise-lower".into(),
            Rel::CartanWeight => "cartan-weight".into(),
            Rel::CartanShift(a) => format!("cartan-shift-{}", adj(a)),
            Rel::Shift(a) => format!("shift-{}", adj(a)),
            Rel::Serre => "serre".into(),
            Rel::CartanShiftRank2 => "cartan-shift-rank2".into(),
            Rel::ShiftRank2 => "shift-rank2".into(),
        }
    }
}

/// Deliberate corruptions of the `eps`-asymmetric right-hand sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Mutation {
    /// Negate the coefficient of `a x`.
    FlipFirst,
    /// Negate the coefficient of `x a`.
    FlipSecond,
    /// Exchange `e1` and `e2` in the right-hand side.
    SwapEps,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn kind(self) -> Kind {
        match self {
            Sign::Plus => Kind::Raise,
            Sign::Minus => Kind::Lower,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One relation with all indices fixed, to be checked on degrees `<= degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: Family,
    pub rel: Rel,
    pub n: usize,
    pub degree: usize,
    pub i: usize,
    pub j: usize,
    pub r: u32,
    pub s: u32,
    pub sign: Sign,
    /// Spectral indices of the repeated generator in a Serre relation.
    pub serre_r: Vec<u32>,
    pub mutation: Option<Mutation>,
}

impl RelationInstance {
    pub fn new(family: Family, rel: Rel, n: usize, degree: usize) -> Self {
        RelationInstance { family, rel, n, degree, i: 0, j: 0, r: 0, s: 0, sign: Sign::Plus, serre_r: Vec::new(), mutation: None }
    }

    pub fn label(&self) -> String {
        let mut out = format!("{} N={} i={} j={}", self.rel.name(), self.n, self.i, self.j);
        match self.rel {
            Rel::CartanCommute | Rel::RaiseLower => out += &format!(" r={} s={}", self.r, self.s),
            Rel::CartanWeight => out += &format!(" s={} sign={}", self.s, self.sign),
            Rel::Serre => {
                let rs: Vec<String> = self.serre_r.iter().map(|r| r.to_string()).collect();
                out += &format!(" r=({}) s={} sign={}", rs.join(","), self.s, self.sign);
            }
            _ => out += &format!(" r={} s={} sign={}", self.r, self.s, self.sign),
        }
        if self.family == Family::AffineLie {
            // Spectral indices are meaningless here.
            out = format!("{} N={} i={} j={}", self.rel.name(), self.n, self.i, self.j);
            if matches!(self.rel, Rel::CartanWeight | Rel::Serre) {
                out += &format!(" sign={}", self.sign);
            }
        }
        if let Some(m) = self.mutation {
            out += &format!(" mutation={m:?}");
        }
        out
    }

    fn bad(&self, why: &str) -> RelcheckError {
        RelcheckError::InvalidInstance(format!("{}: {why}", self.label()))
    }

    fn index_range(&self) -> (usize, usize) {
        match self.family {
            Family::YangianSl => (1, self.n),
            _ => (0, self.n),
        }
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        match self.family {
            Family::YangianSl => i.abs_diff(j) == 1,
            _ => i != j && ((i + 1) % n == j || (j + 1) % n == i),
        }
    }

    pub fn validate(&self) -> Result<(), RelcheckError> {
        let n = self.n;
        if n < 2 {
            return Err(RelcheckError::Unsupported(format!("N = {n}: only N >= 2 is supported")));
        }
        let (lo, hi) = self.index_range();
        if self.i < lo || self.i >= hi || self.j < lo || self.j >= hi {
            return Err(self.bad("index out of range"));
        }
        let (i, j) = (self.i, self.j);
        match self.family {
            Family::AffineYangian => {
                let ok_for_two = matches!(
                    self.rel,
                    Rel::CartanCommute
                        | Rel::RaiseLower
                        | Rel::CartanWeight
                        | Rel::CartanShift(Adj::Same)
                        | Rel::Shift(Adj::Same)
                        | Rel::Serre
                        | Rel::CartanShiftRank2
                        | Rel::ShiftRank2
                );
                if n == 2 && !ok_for_two {
                    return Err(self.bad("not a relation for N = 2"));
                }
                if n >= 3 && matches!(self.rel, Rel::CartanShiftRank2 | Rel::ShiftRank2) {
                    return Err(self.bad("only a relation for N = 2"));
                }
                match self.rel {
                    Rel::CartanShift(a) | Rel::Shift(a) => {
                        let ok = match a {
                            Adj::Far => i != j && !self.adjacent(i, j),
                            Adj::Same => i == j,
                            Adj::Left => j == (i + n - 1) % n,
                            Adj::Right => j == (i + 1) % n,
                            Adj::Cartan => false,
                        };
                        if !ok {
                            return Err(self.bad("second index does not match the relation"));
                        }
                    }
                    Rel::CartanShiftRank2 | Rel::ShiftRank2 if j != (i + 1) % n => {
                        return Err(self.bad("second index must be i+1"));
                    }
                    _ => {}
                }
            }
            Family::YangianSl => match self.rel {
                Rel::CartanShift(Adj::Cartan) | Rel::Shift(Adj::Cartan) => {}
                Rel::CartanShift(_) | Rel::Shift(_) | Rel::CartanShiftRank2 | Rel::ShiftRank2 => {
                    return Err(self.bad("not a finite Yangian relation"));
                }
                _ => {}
            },
            Family::AffineLie => {
                if !matches!(self.rel, Rel::CartanCommute | Rel::RaiseLower | Rel::CartanWeight | Rel::Serre) {
                    return Err(self.bad("not an affine Lie algebra relation"));
                }
                if self.r != 0 || self.s != 0 || self.serre_r.iter().any(|&r| r != 0) {
                    return Err(self.bad("spectral indices must be 0"));
                }
            }
        }
        if self.rel == Rel::Serre {
            if i == j {
                return Err(self.bad("Serre relation needs i != j"));
            }
            if self.serre_r.len() as i64 != 1 - self.cartan(i, j) {
                return Err(self.bad("wrong number of spectral indices"));
            }
        }
        if let Some(_m) = self.mutation {
            let ok = self.family == Family::AffineYangian && matches!(self.rel, Rel::CartanShift(Adj::Left | Adj::Right) | Rel::Shift(Adj::Left | Adj::Right));
            if !ok {
                return Err(self.bad("mutations apply only to the left/right shift relations"));
            }
        }
        Ok(())
    }

    /// Cartan matrix entry of the family.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if self.n == 2 && self.family != Family::YangianSl {
            -2
        } else if self.adjacent(i, j) {
            -1
        } else {
            0
        }
    }

    fn gen(&self, kind: Kind, i: usize, r: u32) -> Expr {
        let r = if self.family == Family::AffineLie { 0 } else { r };
        Expr::op(Op::new(self.family, kind, i, r))
    }

    fn h(&self, i: usize, r: u32) -> Expr {
        self.gen(Kind::Cartan, i, r)
    }

    fn x(&self, i: usize, r: u32) -> Expr {
        self.gen(self.sign.kind(), i, r)
    }

    /// The left factor of a shift relation: `h_i` or `x_i`.
    fn a(&self, r: u32) -> Expr {
        match self.rel {
            Rel::CartanShift(_) | Rel::CartanShiftRank2 => self.h(self.i, r),
            _ => self.x(self.i, r),
        }
    }

    /// Expression that must act as zero.
    pub fn expression(&self) -> Result<Expr, RelcheckError> {
        self.validate()?;
        let (i, j, r, s) = (self.i, self.j, self.r, self.s);
        let sg = RatFun::from_int(self.sign.value());
        let hbar = RatFun::hbar();
        let e1 = RatFun::e1();
        let e2 = RatFun::e2();
        let e = match self.rel {
            Rel::CartanCommute => self.h(i, r).comm(&self.h(j, s)),
            Rel::RaiseLower => {
                let lhs = self.gen(Kind::Raise, i, r).comm(&self.gen(Kind::Lower, j, s));
                if i == j {
                    lhs.sub(self.h(i, r + s))
                } else {
                    lhs
                }
            }
            Rel::CartanWeight => {
                let x = self.x(j, s);
                let c = RatFun::from_int(self.sign.value() * self.cartan(i, j));
                self.h(i, 0).comm(&x).sub(x.scale(&c))
            }
            Rel::CartanShift(adj) | Rel::Shift(adj) => {
                let lhs = self.a(r + 1).comm(&self.x(j, s)).sub(self.a(r).comm(&self.x(j, s + 1)));
                let a = self.a(r);
                let x = self.x(j, s);
                match adj {
                    Adj::Far => lhs,
                    Adj::Same => lhs.sub(a.anti(&x).scale(&(&sg * &hbar))),
                    Adj::Cartan => {
                        let c = &(&sg * &hbar) * &RatFun::from_ratio(self.cartan(i, j), 2).expect("nonzero");
                        lhs.sub(a.anti(&x).scale(&c))
                    }
                    Adj::Left | Adj::Right => {
                        // lhs + alpha a x + beta x a = 0
                        let first_is_e1 = (adj == Adj::Left) == (self.sign == Sign::Plus);
                        let (mut alpha, mut beta) = if first_is_e1 { (e1, e2) } else { (e2, e1) };
                        if self.sign == Sign::Minus {
                            alpha = -alpha;
                            beta = -beta;
                        }
                        match self.mutation {
                            Some(Mutation::FlipFirst) => alpha = -alpha,
                            Some(Mutation::FlipSecond) => beta = -beta,
                            Some(Mutation::SwapEps) => std::mem::swap(&mut alpha, &mut beta),
                            None => {}
                        }
                        lhs.add(a.mul(&x).scale(&alpha)).add(x.mul(&a).scale(&beta))
                    }
                }
            }
            Rel::CartanShiftRank2 | Rel::ShiftRank2 => {
                let two = RatFun::from_int(2);
                let sh = &sg * &hbar;
                self.a(r + 2)
                    .comm(&self.x(j, s))
                    .sub(self.a(r + 1).comm(&self.x(j, s + 1)).scale(&two))
                    .add(self.a(r).comm(&self.x(j, s + 2)))
                    .add(self.a(r + 1).anti(&self.x(j, s)).scale(&sh))
                    .sub(self.a(r).anti(&self.x(j, s + 1)).scale(&sh))
                    .add(self.a(r).comm(&self.x(j, s)).scale(&(&e1 * &e2)))
            }
            Rel::Serre => {
                let mut total = Expr::zero();
                for perm in permutations(self.serre_r.len()) {
                    let mut acc = self.x(j, s);
                    for &k in perm.iter().rev() {
                        acc = self.x(i, self.serre_r[k]).comm(&acc);
                    }
                    total = total.add(acc);
                }
                total
            }
        };
        Ok(e)
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Non-decreasing sequences of length `k` with entries in `0..=rmax`.
fn multisets(k: usize, rmax: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for mut p in multisets(k - 1, rmax) {
        let lo = p.last().copied().unwrap_or(0);
        for v in lo..=rmax {
            p.push(v);
            out.push(p.clone());
            p.pop();
        }
    }
    out
}

/// Every instance of a family's relations with spectral indices `<= rmax`, in a fixed order.
pub fn enumerate(family: Family, n: usize, degree: usize, rmax: u32) -> Result<Vec<RelationInstance>, RelcheckError> {
    if n < 2 {
        return Err(RelcheckError::Unsupported(format!("N = {n}: only N >= 2 is supported")));
    }
    let base = RelationInstance::new(family, Rel::CartanCommute, n, degree);
    let (lo, hi) = base.index_range();
    let rmax = if family == Family::AffineLie { 0 } else { rmax };
    let signs = [Sign::Plus, Sign::Minus];
    let mut rels = vec![Rel::CartanCommute, Rel::RaiseLower, Rel::CartanWeight];
    match family {
        Family::AffineYangian => {
            let adjs: &[Adj] = if n == 2 { &[Adj::Same] } else { &[Adj::Far, Adj::Same, Adj::Left, Adj::Right] };
            rels.extend(adjs.iter().map(|&a| Rel::CartanShift(a)));
            rels.extend(adjs.iter().map(|&a| Rel::Shift(a)));
            rels.push(Rel::Serre);
            if n == 2 {
                rels.push(Rel::CartanShiftRank2);
                rels.push(Rel::ShiftRank2);
            }
        }
        Family::YangianSl => {
            rels.push(Rel::CartanShift(Adj::Cartan));
            rels.push(Rel::Shift(Adj::Cartan));
            rels.push(Rel::Serre);
        }
        Family::AffineLie => rels.push(Rel::Serre),
    }
    let mut out = Vec::new();
    for rel in rels {
        for i in lo..hi {
            for j in lo..hi {
                let mut inst = RelationInstance { rel, i, j, ..base.clone() };
                if rel == Rel::Serre {
                    if i == j {
                        continue;
                    }
                    let k = (1 - inst.cartan(i, j)) as usize;
                    for rs in multisets(k, rmax) {
                        for s in 0..=rmax {
                            for sign in signs {
                                out.push(RelationInstance { serre_r: rs.clone(), s, sign, ..inst.clone() });
                            }
                        }
                    }
                    continue;
                }
                let sign_list: &[Sign] = if matches!(rel, Rel::CartanCommute | Rel::RaiseLower) { &signs[..1] } else { &signs };
                let r_list: Vec<u32> = if rel == Rel::CartanWeight { vec![0] } else { (0..=rmax).collect() };
                for &r in &r_list {
                    for s in 0..=rmax {
                        for &sign in sign_list {
                            inst.r = r;
                            inst.s = s;
                            inst.sign = sign;
                            if inst.validate().is_ok() {
                                out.push(inst.clone());
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The three corruptions of each left/right shift relation, for a mutation battery.
pub fn mutation_battery(n: usize, degree: usize, rmax: u32) -> Result<Vec<RelationInstance>, RelcheckError> {
    let mut out = Vec::new();
    for inst in enumerate(Family::AffineYangian, n, degree, rmax)? {
        if matches!(inst.rel, Rel::Shift(Adj::Left | Adj::Right)) {
            for m in [Mutation::FlipFirst, Mutation::FlipSecond, Mutation::SwapEps] {
                out.push(RelationInstance { mutation: Some(m), ..inst.clone() });
            }
        }
    }
    Ok(out)
}
