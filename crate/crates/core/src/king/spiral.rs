//! The explicit longest king snake paths on square boards.

use crate::cell::{Cell, CellPath};
use crate::error::{invalid, Result};

/// Appends the cells of the straight (or diagonal) run from `from` to `to`,
/// skipping `from` when it equals the current last cell.
fn run(cells: &mut Vec<Cell>, from: Cell, to: Cell) {
    let d = to - from;
    let steps = d.x.abs().max(d.y.abs());
    let unit = Cell::new(d.x.signum(), d.y.signum());
    for t in 0..=steps {
        let c = from + t * unit;
        if cells.last() != Some(&c) {
            cells.push(c);
        }
    }
}

/// Spiral snake path of length `n²/2 - 1` on the even `n x n` board.
pub fn build_even_king_spiral(n: u32) -> Result<CellPath> {
    if n == 0 || n % 2 == 1 {
        return Err(invalid(format!(
            "spiral needs a positive even side, got {n}"
        )));
    }
    let n = n as i32;
    let k = n / 2;
    let c = Cell::new;
    let mut cells = Vec::new();
    let mut i = 0;
    while i <= k - 3 {
        run(&mut cells, c(i, i), c(n - i - 2, i));
        run(&mut cells, c(n - i - 1, i + 1), c(n - i - 1, n - i - 2));
        run(&mut cells, c(n - i - 2, n - i - 1), c(i + 1, n - i - 1));
        run(&mut cells, c(i, n - i - 2), c(i, i + 3));
        run(&mut cells, c(i + 1, i + 2), c(i + 2, i + 2));
        i += 2;
    }
    if k % 2 == 0 {
        // The last ring stops short of the inner hook.
        let i = k - 2;
        run(&mut cells, c(i, i), c(n - i - 2, i));
        run(&mut cells, c(n - i - 1, i + 1), c(n - i - 1, n - i - 2));
        run(&mut cells, c(n - i - 2, n - i - 1), c(i + 1, n - i - 1));
        run(&mut cells, c(i, n - i - 2), c(i, n - i - 2));
    } else {
        run(&mut cells, c(k - 1, k - 1), c(k, k));
    }
    Ok(CellPath::open(cells))
}

/// Comb snake path of length `(n² - 1)/2` on the odd `n x n` board.
///
/// The even rows restricted to `1 <= x <= n - 2` are joined boustrophedon
/// through single connector cells in the outer columns.
pub fn build_odd_king_comb(n: u32) -> Result<CellPath> {
    if n.is_multiple_of(2) {
        return Err(invalid(format!("comb needs an odd side, got {n}")));
    }
    let n = n as i32;
    if n == 1 {
        return Ok(CellPath::open(vec![Cell::new(0, 0)]));
    }
    let mut cells = vec![Cell::new(0, 0)];
    for (r, y) in (0..n).step_by(2).enumerate() {
        let row = (1..=n - 2).map(|x| Cell::new(x, y));
        if r % 2 == 0 {
            cells.extend(row);
        } else {
            cells.extend(row.rev());
        }
        if y + 1 < n {
            let x = if r % 2 == 0 { n - 1 } else { 0 };
            cells.push(Cell::new(x, y + 1));
        }
    }
    // Final cap on the side where the last row ended.
    let last = *cells.last().expect("non-empty");
    let cap = if last.x == 1 { 0 } else { n - 1 };
    cells.push(Cell::new(cap, n - 1));
    Ok(CellPath::open(cells))
}
