use super::{jack_norm_formula, SymFunError};
use crate::cellforms::{pair_form, product_of_forms};
use crate::partitions::{split_left_right, Cell, Partition};
use crate::ratfield::{Fraction, RatFun};

/// Which of the three cell-removal ratio identities to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaWhich {
    /// Ratio of the `e1 l - e2 (a+1)` products.
    Upper,
    /// Inverse ratio of the `e1 (l+1) - e2 a` products.
    Lower,
    /// Ratio of norms.
    Norm,
}

/// Both sides of a ratio identity: the hook-product side and the cell-product side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaRatio {
    pub hooks: RatFun,
    pub cells: RatFun,
}

/// Evaluates both sides for removing the removable `i`-cell `cell` from `lambda`.
pub fn lemma_ratio_sides(lambda: &Partition, i: usize, cell: Cell, n: usize, which: LemmaWhich) -> Result<LemmaRatio, SymFunError> {
    if n == 0 {
        return Err(SymFunError::BadN);
    }
    if cell.residue(n) != i || !lambda.removable_cells().contains(&cell) {
        return Err(SymFunError::NotRemovable(cell.x, cell.y, i));
    }
    let mu = lambda.remove_cell(cell)?;
    let adds = lambda.addable_of_residue(i, n);
    let rems = mu.removable_of_residue(i, n);
    let (al, ar) = split_left_right(&adds, cell.x);
    let (rl, rr) = split_left_right(&rems, cell.x);
    let sign_odd = (ar.len() + rr.len()) % 2 == 1;

    let hooks = match which {
        LemmaWhich::Upper => RatFun::new(product_of_forms(lambda, n, true), product_of_forms(&mu, n, true))?,
        LemmaWhich::Lower => RatFun::new(product_of_forms(&mu, n, false), product_of_forms(lambda, n, false))?,
        LemmaWhich::Norm => jack_norm_formula(lambda, n)?.checked_div(&jack_norm_formula(&mu, n)?)?,
    };

    let mut f = Fraction::new();
    match which {
        LemmaWhich::Upper => {
            f.negate_if(sign_odd);
            al.iter().for_each(|&c| {
                f.times(&pair_form(cell, c, 0));
            });
            rl.iter().for_each(|&c| {
                f.over(&pair_form(cell, c, -1));
            });
            ar.iter().for_each(|&c| {
                f.times(&pair_form(cell, c, 1));
            });
            rr.iter().for_each(|&c| {
                f.over(&pair_form(cell, c, 0));
            });
        }
        LemmaWhich::Lower => {
            f.negate_if(sign_odd);
            rl.iter().for_each(|&c| {
                f.times(&pair_form(cell, c, 0));
            });
            al.iter().for_each(|&c| {
                f.over(&pair_form(cell, c, 1));
            });
            rr.iter().for_each(|&c| {
                f.times(&pair_form(cell, c, -1));
            });
            ar.iter().for_each(|&c| {
                f.over(&pair_form(cell, c, 0));
            });
        }
        LemmaWhich::Norm => {
            for &c in &al {
                f.times(&pair_form(cell, c, 0)).over(&pair_form(cell, c, 1));
            }
            for &c in &ar {
                f.times(&pair_form(cell, c, 1)).over(&pair_form(cell, c, 0));
            }
            for &c in &rl {
                f.times(&pair_form(cell, c, 0)).over(&pair_form(cell, c, -1));
            }
            for &c in &rr {
                f.times(&pair_form(cell, c, -1)).over(&pair_form(cell, c, 0));
            }
        }
    }
    Ok(LemmaRatio { hooks, cells: f.finish()? })
}

/// Common value of both sides; a mismatch is reported as an error.
pub fn lemma_ratio(lambda: &Partition, i: usize, cell: Cell, n: usize, which: LemmaWhich) -> Result<RatFun, SymFunError> {
    let r = lemma_ratio_sides(lambda, i, cell, n, which)?;
    if r.hooks != r.cells {
        return Err(SymFunError::Mismatch { lhs: r.hooks.to_string(), rhs: r.cells.to_string() });
    }
    Ok(r.hooks)
}
