//! Symmetric functions over `Q(e1, e2)`: Schur and power-sum bases, the
//! level-`N` form, Jack(gl_N) functions and their norms.

mod characters;
mod jack;
mod lemma;

pub use characters::{char_table, CharTable};
pub use jack::{jack_gl_n, jack_norm_formula, jack_norm_gs, jack_table, jack_table_with_order, JackTable};
pub use lemma::{lemma_ratio, lemma_ratio_sides, LemmaRatio, LemmaWhich};

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::partitions::{Partition, PartitionError};
use crate::ratfield::{FieldError, RatFun};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFunError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("N must be at least 1")]
    BadN,
    #[error("mixed degrees {0} and {1}")]
    MixedDegree(usize, usize),
    #[error("cell ({0}, {1}) is not a removable {2}-cell")]
    NotRemovable(usize, usize, usize),
    #[error("identity mismatch: {lhs} != {rhs}")]
    Mismatch { lhs: String, rhs: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymBasis {
    Schur,
    Power,
}

/// Homogeneous symmetric function, expanded in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFun {
    pub basis: SymBasis,
    pub degree: usize,
    terms: BTreeMap<Partition, RatFun>,
}

#[derive(Serialize)]
struct TermJson {
    partition: String,
    coeff: String,
}

#[derive(Serialize)]
struct SymFunJson {
    basis: SymBasis,
    degree: usize,
    terms: Vec<TermJson>,
}

impl SymFun {
    pub fn zero(basis: SymBasis, degree: usize) -> Self {
        SymFun { basis, degree, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: SymBasis, p: Partition) -> Self {
        let degree = p.size();
        let mut terms = BTreeMap::new();
        terms.insert(p, RatFun::one());
        SymFun { basis, degree, terms }
    }

    pub fn from_terms(basis: SymBasis, degree: usize, items: impl IntoIterator<Item = (Partition, RatFun)>) -> Result<Self, SymFunError> {
        let mut f = SymFun::zero(basis, degree);
        for (p, c) in items {
            f.add_term(p, &c)?;
        }
        Ok(f)
    }

    pub fn add_term(&mut self, p: Partition, c: &RatFun) -> Result<(), SymFunError> {
        if p.size() != self.degree {
            return Err(SymFunError::MixedDegree(self.degree, p.size()));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(p.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
        Ok(())
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

    pub fn to_json(&self) -> String {
        let j = SymFunJson {
            basis: self.basis,
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| TermJson { partition: p.to_string(), coeff: c.to_string() }).collect(),
        };
        serde_json::to_string(&j).expect("serializable")
    }

    pub fn to_power(&self) -> SymFun {
        match self.basis {
            SymBasis::Power => self.clone(),
            SymBasis::Schur => {
                let mut out = SymFun::zero(SymBasis::Power, self.degree);
                for (lam, c) in &self.terms {
                    let e = schur_to_power(lam);
                    for (rho, d) in &e.terms {
                        out.add_term(rho.clone(), &(c * d)).unwrap();
                    }
                }
                out
            }
        }
    }

    pub fn to_schur(&self) -> SymFun {
        match self.basis {
            SymBasis::Schur => self.clone(),
            SymBasis::Power => {
                let mut out = SymFun::zero(SymBasis::Schur, self.degree);
                for (rho, c) in &self.terms {
                    let e = power_to_schur(rho);
                    for (lam, d) in &e.terms {
                        out.add_term(lam.clone(), &(c * d)).unwrap();
                    }
                }
                out
            }
        }
    }
}

/// `s_lambda = sum_rho chi^lambda(rho) / z_rho * p_rho`.
pub fn schur_to_power(lambda: &Partition) -> SymFun {
    let n = lambda.size();
    let t = char_table(n);
    let mut out = SymFun::zero(SymBasis::Power, n);
    for rho in &t.shapes {
        let chi = t.chi(lambda, rho);
        if chi != 0 {
            let c = RatFun::new(
                crate::ratfield::IntPoly::constant(chi.into(), 2),
                crate::ratfield::IntPoly::constant(rho.z_factor(), 2),
            )
            .expect("z is positive");
            out.add_term(rho.clone(), &c).unwrap();
        }
    }
    out
}

/// `p_rho = sum_lambda chi^lambda(rho) s_lambda`.
pub fn power_to_schur(rho: &Partition) -> SymFun {
    let n = rho.size();
    let t = char_table(n);
    let mut out = SymFun::zero(SymBasis::Schur, n);
    for lam in &t.shapes {
        let chi = t.chi(lam, rho);
        if chi != 0 {
            out.add_term(lam.clone(), &RatFun::from_int(chi)).unwrap();
        }
    }
    out
}

/// `-e2 / e1`, the weight of each part divisible by `N` in the form.
pub fn form_parameter() -> RatFun {
    RatFun::linear(0, -1).checked_div(&RatFun::e1()).expect("e1 is nonzero")
}

/// `<f, g>` with `<p_lambda, p_mu> = delta z_lambda (-e2/e1)^{l_N(lambda)}`.
pub fn uglov_form(f: &SymFun, g: &SymFun, n: usize) -> Result<RatFun, SymFunError> {
    if n == 0 {
        return Err(SymFunError::BadN);
    }
    if f.degree != g.degree {
        return Ok(RatFun::zero());
    }
    let fp = f.to_power();
    let gp = g.to_power();
    let q = form_parameter();
    let mut acc = RatFun::zero();
    for (rho, a) in fp.terms() {
        if let Some(b) = gp.terms.get(rho) {
            let w = q.pow(rho.parts_divisible_by(n) as u32) * RatFun::from_bigint(rho.z_factor());
            acc += a * b * w;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schur_power_round_trip() {
        for n in 0..=6 {
            for lam in Partition::all_of_size(n) {
                let s = SymFun::basis_element(SymBasis::Schur, lam.clone());
                assert_eq!(s.to_power().to_schur(), s);
            }
        }
    }

    #[test]
    fn json_shape() {
        let mut f = SymFun::zero(SymBasis::Schur, 2);
        f.add_term("2".parse().unwrap(), &RatFun::one()).unwrap();
        f.add_term("1,1".parse().unwrap(), &RatFun::from_int(-3)).unwrap();
        assert_eq!(
            f.to_json(),
            r#"{"basis":"schur","degree":2,"terms":[{"partition":"2","coeff":"1"},{"partition":"1,1","coeff":"-3"}]}"#
        );
    }
}
