//! Hermite and Smith normal forms by unimodular row and column operations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `(g, x, y)` with `x·a + y·b = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let nr = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, nr);
        let ns = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, ns);
        let nt = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Row Hermite normal form: returns `(H, U)` with `H = U·A`, `U` unimodular,
/// pivots positive, entries above each pivot reduced into `[0, pivot)`, and
/// zero rows last.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut r = 0;
    for col in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        for i in r + 1..a.rows() {
            if h[(i, col)].is_zero() {
                continue;
            }
            let (pa, pb) = (h[(r, col)].clone(), h[(i, col)].clone());
            let (g, x, y) = ext_gcd(&pa, &pb);
            let (p, q) = (-(&pb / &g), &pa / &g);
            h.combine_rows(r, i, &x, &y, &p, &q);
            u.combine_rows(r, i, &x, &y, &p, &q);
        }
        if h[(r, col)].is_zero() {
            continue;
        }
        if h[(r, col)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h[(r, col)].clone();
        for i in 0..r {
            let q = -h[(i, col)].div_floor(&pivot);
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Shape predicate for [`hnf`] output.
pub fn is_hermite(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..h.rows() {
        match (0..h.cols()).find(|&j| !h[(i, j)].is_zero()) {
            None => seen_zero = true,
            Some(j) => {
                if seen_zero || last_pivot.is_some_and(|p| j <= p) || !h[(i, j)].is_positive() {
                    return false;
                }
                for k in 0..i {
                    if h[(k, j)].is_negative() || h[(k, j)] >= h[(i, j)] {
                        return false;
                    }
                }
                last_pivot = Some(j);
            }
        }
    }
    true
}

/// Canonical row basis of the lattice spanned by the rows of `m`.
pub fn hnf_basis(m: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf(m);
    let keep: Vec<usize> = (0..h.rows()).filter(|&i| !h.is_row_zero(i)).collect();
    h.select_rows(&keep)
}

pub fn rank(m: &IntMatrix) -> usize {
    hnf_basis(m).rows()
}

/// Whether `v` lies in the lattice spanned by the rows of `basis`, which must
/// be in Hermite form (e.g. from [`hnf_basis`]). Returns the coefficients.
pub fn hermite_coordinates(basis: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    if v.len() != basis.cols() {
        return None;
    }
    let mut rest = v.to_vec();
    let mut coeffs = vec![BigInt::zero(); basis.rows()];
    let mut row = 0;
    for j in 0..basis.cols() {
        let is_pivot = row < basis.rows()
            && !basis[(row, j)].is_zero()
            && (0..j).all(|k| basis[(row, k)].is_zero());
        if is_pivot {
            let (q, r) = rest[j].div_rem(&basis[(row, j)]);
            if !r.is_zero() {
                return None;
            }
            for k in j..basis.cols() {
                rest[k] -= &q * &basis[(row, k)];
            }
            coeffs[row] = q;
            row += 1;
        } else if !rest[j].is_zero() {
            return None;
        }
    }
    Some(coeffs)
}

pub fn row_span_contains(m: &IntMatrix, v: &[BigInt]) -> bool {
    hermite_coordinates(&hnf_basis(m), v).is_some()
}

/// Row basis (Hermite form) of `{y : y·m = 0}`.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf(m);
    let zero_rows: Vec<usize> = (0..h.rows()).filter(|&i| h.is_row_zero(i)).collect();
    hnf_basis(&u.select_rows(&zero_rows))
}

/// Row basis (Hermite form) of `{x : m·x = 0}`.
pub fn right_kernel(m: &IntMatrix) -> IntMatrix {
    left_kernel(&m.transpose())
}

/// Smith normal form: returns `(S, U, V)` with `S = U·A·V`, `U` and `V`
/// unimodular, `S` diagonal with nonnegative entries `d₁ | d₂ | …`.
pub fn snf(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !s[(i, j)].is_zero()
                        && best.map_or(true, |(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (s, u, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let pivot = s[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = -s[(i, t)].div_floor(&pivot);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = -s[(t, j)].div_floor(&pivot);
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s[(i, j)].is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => {
                    s.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (s, u, v)
}

/// Nonzero diagonal of a Smith form.
pub fn invariant_factors(s: &IntMatrix) -> Vec<BigInt> {
    (0..s.rows().min(s.cols()))
        .map(|i| s[(i, i)].clone())
        .take_while(|d| !d.is_zero())
        .collect()
}
