//! Membership in finitely generated subgroups of the base `⊕_Z Z`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::WreathElement;

/// Decides whether `target` lies in the subgroup of `⊕_Z Z` generated by `gens`.
///
/// Coordinates are restricted to the union of supports, the generators are
/// brought to row echelon form over `Z` with gcd row operations, and the
/// target is reduced against the pivots column by column.
///
/// Panics if any input has a nonzero shift.
pub fn free_abelian_membership(target: &WreathElement, gens: &[WreathElement]) -> bool {
    assert!(
        target.is_base() && gens.iter().all(WreathElement::is_base),
        "free_abelian_membership expects base elements"
    );
    let columns: Vec<i64> = target
        .base()
        .keys()
        .chain(gens.iter().flat_map(|g| g.base().keys()))
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let dense = |e: &WreathElement| -> Vec<BigInt> {
        columns
            .iter()
            .map(|c| e.base().get(c).cloned().unwrap_or_default())
            .collect()
    };
    let mut rows: Vec<Vec<BigInt>> = gens.iter().map(dense).collect();
    let pivots = echelonize(&mut rows);

    let mut residual = dense(target);
    let mut next = pivots.iter().peekable();
    for col in 0..columns.len() {
        if residual[col].is_zero() {
            if next.peek().is_some_and(|&&(_, c)| c == col) {
                next.next();
            }
            continue;
        }
        match next.peek() {
            Some(&&(row, c)) if c == col => {
                next.next();
                let (q, r) = residual[col].div_rem(&rows[row][col]);
                if !r.is_zero() {
                    return false;
                }
                for (x, y) in residual.iter_mut().zip(&rows[row]).skip(col) {
                    *x -= &q * y;
                }
            }
            _ => return false,
        }
    }
    true
}

/// In-place row echelon form over `Z`. Returns `(row, column)` pivots with
/// strictly increasing columns; rows below the last pivot are zero.
fn echelonize(rows: &mut [Vec<BigInt>]) -> Vec<(usize, usize)> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..width {
        if top == rows.len() {
            break;
        }
        loop {
            // smallest nonzero magnitude in this column becomes the pivot
            let best = (top..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(top, best);
            let mut done = true;
            for r in top + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[top][col]);
                let (upper, lower) = rows.split_at_mut(r);
                for (x, y) in lower[0].iter_mut().zip(&upper[top]).skip(col) {
                    *x -= &q * y;
                }
                if !lower[0][col].is_zero() {
                    done = false;
                }
            }
            if done {
                pivots.push((top, col));
                top += 1;
                break;
            }
        }
    }
    pivots
}
