use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::fockrep::{FockError, Op};
use crate::partitions::Partition;
use crate::ratfield::RatFun;

/// `coeff * ops[0] ops[1] ... ops[k-1]`; the last operator acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub coeff: RatFun,
    pub ops: Vec<Op>,
}

/// Formal linear combination of operator words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expr {
    pub words: Vec<Word>,
}

impl Expr {
    pub fn zero() -> Self {
        Expr::default()
    }

    pub fn word(coeff: RatFun, ops: Vec<Op>) -> Self {
        let mut e = Expr::zero();
        e.push(coeff, ops);
        e
    }

    pub fn op(o: Op) -> Self {
        Expr::word(RatFun::one(), vec![o])
    }

    pub fn push(&mut self, coeff: RatFun, ops: Vec<Op>) {
        if !coeff.is_zero() {
            self.words.push(Word { coeff, ops });
        }
    }

    pub fn add(mut self, other: Expr) -> Expr {
        self.words.extend(other.words);
        self
    }

    pub fn sub(self, other: Expr) -> Expr {
        self.add(other.scale(&RatFun::from_int(-1)))
    }

    pub fn scale(self, c: &RatFun) -> Expr {
        let mut out = Expr::zero();
        for w in self.words {
            out.push(&w.coeff * c, w.ops);
        }
        out
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &Expr) -> Expr {
        let mut out = Expr::zero();
        for a in &self.words {
            for b in &other.words {
                let mut ops = a.ops.clone();
                ops.extend(b.ops.iter().copied());
                out.push(&a.coeff * &b.coeff, ops);
            }
        }
        out
    }

    /// `[self, other]`.
    pub fn comm(&self, other: &Expr) -> Expr {
        self.mul(other).sub(other.mul(self))
    }

    /// `self * other + other * self`.
    pub fn anti(&self, other: &Expr) -> Expr {
        self.mul(other).add(other.mul(self))
    }
}

type Column = Arc<Vec<(Partition, RatFun)>>;

/// Memoized operator columns, shareable across threads.
#[derive(Debug)]
pub struct ColumnCache {
    pub n: usize,
    map: RwLock<HashMap<(Op, Partition), Column>>,
}

impl ColumnCache {
    pub fn new(n: usize) -> Self {
        ColumnCache { n, map: RwLock::new(HashMap::new()) }
    }

    pub fn column(&self, op: &Op, lambda: &Partition) -> Result<Column, FockError> {
        let key = (*op, lambda.clone());
        if let Some(c) = self.map.read().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let col = Arc::new(op.column(lambda, self.n)?);
        Ok(self.map.write().unwrap().entry(key).or_insert(col).clone())
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Applies one word to a basis vector.
    pub fn apply_word(&self, ops: &[Op], lambda: &Partition) -> Result<BTreeMap<Partition, RatFun>, FockError> {
        let mut v: BTreeMap<Partition, RatFun> = BTreeMap::new();
        v.insert(lambda.clone(), RatFun::one());
        for op in ops.iter().rev() {
            let mut next: BTreeMap<Partition, RatFun> = BTreeMap::new();
            for (mu, c) in &v {
                for (nu, d) in self.column(op, mu)?.iter() {
                    *next.entry(nu.clone()).or_default() += c * d;
                }
            }
            next.retain(|_, c| !c.is_zero());
            v = next;
            if v.is_empty() {
                break;
            }
        }
        Ok(v)
    }

    /// Applies an expression to a basis vector, dropping zero coefficients.
    pub fn apply(&self, e: &Expr, lambda: &Partition) -> Result<BTreeMap<Partition, RatFun>, FockError> {
        let mut acc: BTreeMap<Partition, RatFun> = BTreeMap::new();
        for w in &e.words {
            for (mu, c) in self.apply_word(&w.ops, lambda)? {
                *acc.entry(mu).or_default() += &w.coeff * &c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(acc)
    }
}
