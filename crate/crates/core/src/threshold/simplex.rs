//! Exact feasibility for small systems `A x ≥ b`, `x ≥ 0` over the rationals.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A point with `A x ≥ b` and `x ≥ 0`, or `None` if the system is infeasible.
///
/// Phase one of the simplex method: every row gets a surplus and an
/// artificial variable, and the sum of artificials is driven to zero.
/// Bland's rule keeps the pivoting finite.
pub fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let vars = a.first().map_or(0, Vec::len);
    let surplus = vars;
    let artificial = vars + rows;
    let rhs = vars + 2 * rows;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows + 1);
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), vars);
        let flip = b[i].is_negative();
        let sign = |q: &BigRational| if flip { -q.clone() } else { q.clone() };
        let mut r = vec![BigRational::zero(); rhs + 1];
        for (j, q) in row.iter().enumerate() {
            r[j] = sign(q);
        }
        r[surplus + i] = sign(&-BigRational::one());
        r[artificial + i] = BigRational::one();
        r[rhs] = sign(&b[i]);
        t.push(r);
    }
    let mut obj = vec![BigRational::zero(); rhs + 1];
    for r in &t {
        for j in (0..artificial).chain([rhs]) {
            obj[j] += &r[j];
        }
    }
    t.push(obj);
    let mut basis: Vec<usize> = (artificial..artificial + rows).collect();

    loop {
        let Some(col) = (0..artificial).find(|&j| t[rows][j].is_positive()) else {
            break;
        };
        let mut pivot: Option<(usize, BigRational)> = None;
        for i in 0..rows {
            if t[i][col].is_positive() {
                let ratio = &t[i][rhs] / &t[i][col];
                let better = match &pivot {
                    None => true,
                    Some((p, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*p]),
                };
                if better {
                    pivot = Some((i, ratio));
                }
            }
        }
        // A positive reduced cost always has a positive column entry here,
        // since the objective row is a sum of constraint rows.
        let (p, _) = pivot.expect("phase one is bounded");
        let inv = t[p][col].recip();
        for q in t[p].iter_mut() {
            *q *= &inv;
        }
        let prow = t[p].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i != p && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, y) in r.iter_mut().zip(&prow) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        basis[p] = col;
    }

    if t[rows][rhs].is_positive() {
        return None;
    }
    let mut x = vec![BigRational::zero(); vars];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < vars {
            x[bv] = t[i][rhs].clone();
        }
    }
    Some(x)
}
