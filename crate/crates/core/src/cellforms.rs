//! Linear forms in `e1, e2` attached to cells and pairs of cells.

use crate::partitions::{Cell, Partition};
use crate::ratfield::{IntPoly, RatFun};

/// `e1 (x - x' + s) + e2 (y - y' + s)`.
pub fn pair_form(c: Cell, other: Cell, s: i64) -> IntPoly {
    let dx = c.x as i64 - other.x as i64 + s;
    let dy = c.y as i64 - other.y as i64 + s;
    IntPoly::linear(dx, dy)
}

/// `e1 x + e2 y`.
pub fn cell_weight(c: Cell) -> RatFun {
    RatFun::linear(c.x as i64, c.y as i64)
}

/// `e1 l - e2 (a + 1)` for a cell of `lambda`.
pub fn upper_hook_form(lambda: &Partition, c: Cell) -> IntPoly {
    IntPoly::linear(lambda.leg(c) as i64, -(lambda.arm(c) as i64 + 1))
}

/// `e1 (l + 1) - e2 a` for a cell of `lambda`.
pub fn lower_hook_form(lambda: &Partition, c: Cell) -> IntPoly {
    IntPoly::linear(lambda.leg(c) as i64 + 1, -(lambda.arm(c) as i64))
}

/// Cells of `lambda` whose hook length is divisible by `n`.
pub fn cells_hook_divisible(lambda: &Partition, n: usize) -> Vec<Cell> {
    lambda.cells().filter(|&c| lambda.hook(c) % n == 0).collect()
}

/// Product of `upper / lower` hook forms over cells with hook divisible by `n`.
pub fn product_of_forms(lambda: &Partition, n: usize, upper: bool) -> IntPoly {
    let mut acc = IntPoly::one(2);
    for c in cells_hook_divisible(lambda, n) {
        let f = if upper { upper_hook_form(lambda, c) } else { lower_hook_form(lambda, c) };
        acc = acc.mul(&f);
    }
    acc
}
