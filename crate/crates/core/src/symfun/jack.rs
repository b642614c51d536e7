use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::{uglov_form, SymBasis, SymFun, SymFunError};
use crate::cellforms::product_of_forms;
use crate::partitions::Partition;
use crate::ratfield::RatFun;

/// Jack(gl_N) functions of one degree, expanded in Schur functions.
#[derive(Debug)]
pub struct JackTable {
    pub n: usize,
    pub degree: usize,
    /// Partitions of `degree`, lexicographically descending.
    pub shapes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `coeffs[lambda][mu]`: coefficient of `s_mu` in `P_lambda`.
    coeffs: Vec<Vec<RatFun>>,
    norms: Vec<RatFun>,
}

impl JackTable {
    /// Gram-Schmidt on Schur functions along `order`, which must list every
    /// partition of `degree`, smallest first.
    fn build(n: usize, degree: usize, order: &[Partition]) -> Result<Self, SymFunError> {
        let shapes = Partition::all_of_size(degree);
        let index: HashMap<Partition, usize> = shapes.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        let k = shapes.len();
        let mut gram = vec![vec![RatFun::zero(); k]; k];
        for a in 0..k {
            for b in a..k {
                let sa = SymFun::basis_element(SymBasis::Schur, shapes[a].clone());
                let sb = SymFun::basis_element(SymBasis::Schur, shapes[b].clone());
                let v = uglov_form(&sa, &sb, n)?;
                gram[a][b] = v.clone();
                gram[b][a] = v;
            }
        }
        let mut coeffs = vec![Vec::new(); k];
        let mut norms = vec![RatFun::zero(); k];
        let mut done: Vec<usize> = Vec::new();
        for lam in order {
            let li = index[lam];
            let mut v = vec![RatFun::zero(); k];
            v[li] = RatFun::one();
            for &mi in &done {
                let pm: &Vec<RatFun> = &coeffs[mi];
                let mut ip = RatFun::zero();
                for (nu, c) in pm.iter().enumerate() {
                    if !c.is_zero() {
                        ip += c * &gram[li][nu];
                    }
                }
                if ip.is_zero() {
                    continue;
                }
                let t = ip.checked_div(&norms[mi])?;
                for (nu, c) in pm.iter().enumerate() {
                    if !c.is_zero() {
                        v[nu] -= &t * c;
                    }
                }
            }
            let mut nrm = RatFun::zero();
            for (nu, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    nrm += c * &gram[li][nu];
                }
            }
            norms[li] = nrm;
            coeffs[li] = v;
            done.push(li);
        }
        Ok(JackTable { n, degree, shapes, index, coeffs, norms })
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `P_lambda` in the Schur basis.
    pub fn jack(&self, lambda: &Partition) -> SymFun {
        let li = self.index[lambda];
        let items = self.coeffs[li].iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (self.shapes[k].clone(), c.clone()));
        SymFun::from_terms(SymBasis::Schur, self.degree, items).unwrap()
    }

    /// Coefficient of `s_mu` in `P_lambda`.
    pub fn coeff(&self, lambda: &Partition, mu: &Partition) -> RatFun {
        self.coeffs[self.index[lambda]][self.index[mu]].clone()
    }

    pub fn norm(&self, lambda: &Partition) -> RatFun {
        self.norms[self.index[lambda]].clone()
    }
}

type TableKey = (usize, usize);

static TABLES: OnceLock<RwLock<HashMap<TableKey, Arc<JackTable>>>> = OnceLock::new();

/// Jack(gl_N) table for one degree, memoized; the orthogonalization runs
/// along lex order from `(1^n)` upwards.
pub fn jack_table(n: usize, degree: usize) -> Result<Arc<JackTable>, SymFunError> {
    if n == 0 {
        return Err(SymFunError::BadN);
    }
    let lock = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = lock.read().unwrap().get(&(n, degree)) {
        return Ok(t.clone());
    }
    let mut order = Partition::all_of_size(degree);
    order.reverse();
    let t = Arc::new(JackTable::build(n, degree, &order)?);
    Ok(lock.write().unwrap().entry((n, degree)).or_insert(t).clone())
}

/// Uncached table built along an explicit order (smallest first).
pub fn jack_table_with_order(n: usize, degree: usize, order: &[Partition]) -> Result<JackTable, SymFunError> {
    if n == 0 {
        return Err(SymFunError::BadN);
    }
    JackTable::build(n, degree, order)
}

/// `P_lambda` for gl_N, in the Schur basis.
pub fn jack_gl_n(lambda: &Partition, n: usize) -> Result<SymFun, SymFunError> {
    Ok(jack_table(n, lambda.size())?.jack(lambda))
}

/// `<P_lambda, P_lambda>` from the Gram-Schmidt run.
pub fn jack_norm_gs(lambda: &Partition, n: usize) -> Result<RatFun, SymFunError> {
    Ok(jack_table(n, lambda.size())?.norm(lambda))
}

/// Closed product over cells with hook divisible by `N`:
/// `(e1 l - e2 (a+1)) / (e1 (l+1) - e2 a)`.
pub fn jack_norm_formula(lambda: &Partition, n: usize) -> Result<RatFun, SymFunError> {
    if n == 0 {
        return Err(SymFunError::BadN);
    }
    Ok(RatFun::new(product_of_forms(lambda, n, true), product_of_forms(lambda, n, false))?)
}
