//! Independent checks for normal forms and a box brute force for abelian
//! systems.

use groupeq::lattice::{AbelianEquation, AbelianSystem, AbelianTerm, CongruenceBox, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub const BOX: i64 = 20;

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    IntMatrix::from_rows(&data)
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    assert_eq!(a.cols(), b.rows());
    let mut out = IntMatrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut acc = BigInt::zero();
            for k in 0..a.cols() {
                acc += &a[(i, k)] * &b[(k, j)];
            }
            out[(i, j)] = acc;
        }
    }
    out
}

/// Fraction-free elimination.
pub fn det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn unimodular(m: &IntMatrix) -> bool {
    det(m).abs().is_one()
}

/// Row echelon with positive pivots, strictly increasing pivot columns, zero
/// rows last, and entries above each pivot in `[0, pivot)`.
fn hermite_shape(h: &IntMatrix) -> bool {
    let mut last: Option<usize> = None;
    let mut zero_seen = false;
    for i in 0..h.rows() {
        match (0..h.cols()).find(|&j| !h[(i, j)].is_zero()) {
            None => zero_seen = true,
            Some(j) => {
                if zero_seen || last.is_some_and(|p| j <= p) || !h[(i, j)].is_positive() {
                    return false;
                }
                if (0..i).any(|k| h[(k, j)].is_negative() || h[(k, j)] >= h[(i, j)]) {
                    return false;
                }
                last = Some(j);
            }
        }
    }
    true
}

pub fn check_hnf(a: &IntMatrix) -> Result<(), String> {
    let (h, u) = groupeq::lattice::hnf(a);
    if mat_mul(&u, a) != h {
        return Err("H != U A".into());
    }
    if !unimodular(&u) {
        return Err("U not unimodular".into());
    }
    if !hermite_shape(&h) {
        return Err("H not in Hermite form".into());
    }
    Ok(())
}

pub fn check_snf(a: &IntMatrix) -> Result<(), String> {
    let (s, u, v) = groupeq::lattice::snf(a);
    if mat_mul(&mat_mul(&u, a), &v) != s {
        return Err("S != U A V".into());
    }
    if !unimodular(&u) || !unimodular(&v) {
        return Err("U or V not unimodular".into());
    }
    for i in 0..s.rows() {
        for j in 0..s.cols() {
            if i != j && !s[(i, j)].is_zero() {
                return Err("S not diagonal".into());
            }
        }
    }
    let d: Vec<BigInt> = (0..s.rows().min(s.cols())).map(|i| s[(i, i)].clone()).collect();
    if d.iter().any(|x| x.is_negative()) {
        return Err("negative invariant factor".into());
    }
    for w in d.windows(2) {
        let ok = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
        if !ok {
            return Err(format!("divisibility chain broken at {} | {}", w[0], w[1]));
        }
    }
    Ok(())
}

/// One variable over `ℤʳ`, with a planted point in a small box for half of
/// the equations.
pub fn random_abelian<R: Rng>(rng: &mut R) -> AbelianSystem {
    let r = rng.gen_range(1..=4);
    let mut sys = AbelianSystem::new(r, 1);
    let x0: Vec<i64> = (0..r).map(|_| rng.gen_range(-5..=5)).collect();
    for _ in 0..rng.gen_range(1..=2) {
        let m = loop {
            let m = random_matrix(rng, r, r, 3);
            if !det(&m).is_zero() {
                break m;
            }
        };
        let planted = rng.gen_bool(0.5);
        let rhs: Vec<BigInt> = (0..r)
            .map(|i| {
                if planted {
                    (0..r).map(|j| &m[(i, j)] * BigInt::from(x0[j])).sum()
                } else {
                    BigInt::from(rng.gen_range(-6..=6))
                }
            })
            .collect();
        sys.equations.push(AbelianEquation {
            terms: vec![AbelianTerm {
                var: 0,
                negated: false,
                matrix: Some(m),
            }],
            rhs,
        });
    }
    if rng.gen_bool(0.3) {
        sys.disequations.push(AbelianEquation {
            terms: vec![AbelianTerm {
                var: 0,
                negated: false,
                matrix: None,
            }],
            rhs: x0.iter().map(|&x| BigInt::from(x)).collect(),
        });
    }
    if rng.gen_bool(0.3) {
        let moduli: Vec<i64> = (0..r).map(|_| rng.gen_range(1..=3)).collect();
        let residue: Vec<i64> = moduli.iter().map(|&m| rng.gen_range(0..m)).collect();
        sys.constraints[0] = Some(vec![CongruenceBox::modular(&residue, &moduli).unwrap()]);
    }
    sys
}

fn term_value(t: &AbelianTerm, x: &[BigInt]) -> Vec<BigInt> {
    let v: Vec<BigInt> = match &t.matrix {
        Some(m) => (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| &m[(i, j)] * &x[j]).sum())
            .collect(),
        None => x.to_vec(),
    };
    if t.negated {
        v.into_iter().map(|a| -a).collect()
    } else {
        v
    }
}

fn lhs(eq: &AbelianEquation, xs: &[Vec<BigInt>], r: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); r];
    for t in &eq.terms {
        for (a, b) in acc.iter_mut().zip(term_value(t, &xs[t.var])) {
            *a += b;
        }
    }
    acc
}

pub fn abelian_holds(sys: &AbelianSystem, xs: &[Vec<BigInt>]) -> bool {
    sys.equations.iter().all(|e| lhs(e, xs, sys.rank) == e.rhs)
        && sys.disequations.iter().all(|e| lhs(e, xs, sys.rank) != e.rhs)
        && sys.constraints.iter().zip(xs).all(|(c, x)| match c {
            None => true,
            Some(boxes) => boxes.iter().any(|b| b.contains(x)),
        })
}

fn small(x: &BigInt) -> i64 {
    i64::try_from(x).expect("small entry")
}

/// Scans `[-BOX, BOX]^r` for the single variable.
pub fn abelian_brute_force(sys: &AbelianSystem) -> Option<Vec<BigInt>> {
    assert_eq!(sys.num_vars, 1);
    let r = sys.rank;
    let compile = |e: &AbelianEquation| {
        let mut m = vec![vec![0i64; r]; r];
        for t in &e.terms {
            let sign = if t.negated { -1 } else { 1 };
            for (i, row) in m.iter_mut().enumerate() {
                for (j, x) in row.iter_mut().enumerate() {
                    *x += sign
                        * match &t.matrix {
                            Some(a) => small(&a[(i, j)]),
                            None => i64::from(i == j),
                        };
                }
            }
        }
        (m, e.rhs.iter().map(small).collect::<Vec<i64>>())
    };
    let eqs: Vec<_> = sys.equations.iter().map(compile).collect();
    let neqs: Vec<_> = sys.disequations.iter().map(compile).collect();
    let apply = |m: &[Vec<i64>], x: &[i64]| -> Vec<i64> {
        m.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    };
    let mut x = vec![-BOX; r];
    loop {
        if eqs.iter().all(|(m, b)| apply(m, &x) == *b) && neqs.iter().all(|(m, b)| apply(m, &x) != *b) {
            let v: Vec<BigInt> = x.iter().map(|&a| BigInt::from(a)).collect();
            if abelian_holds(sys, std::slice::from_ref(&v)) {
                return Some(v);
            }
        }
        let mut i = 0;
        loop {
            if i == r {
                return None;
            }
            x[i] += 1;
            if x[i] <= BOX {
                break;
            }
            x[i] = -BOX;
            i += 1;
        }
    }
}

/// Certifies that the stacked equations `A x = b` have no integer solution
/// via a Smith form: some `(U b)_i` is not divisible by `d_i` or is nonzero
/// past the rank.
pub fn snf_certifies_unsat(sys: &AbelianSystem) -> bool {
    let r = sys.rank;
    let width = r * sys.num_vars;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut b: Vec<BigInt> = Vec::new();
    for eq in &sys.equations {
        let mut block = vec![vec![BigInt::zero(); width]; r];
        for t in &eq.terms {
            for j in 0..r {
                let mut e = vec![BigInt::zero(); r];
                e[j] = BigInt::one();
                for (i, v) in term_value(t, &e).into_iter().enumerate() {
                    block[i][t.var * r + j] += v;
                }
            }
        }
        rows.extend(block);
        b.extend(eq.rhs.iter().cloned());
    }
    let a = IntMatrix::from_row_vecs(rows, width).unwrap();
    let (s, u, v) = groupeq::lattice::snf(&a);
    if mat_mul(&mat_mul(&u, &a), &v) != s || !unimodular(&u) || !unimodular(&v) {
        return false;
    }
    let c: Vec<BigInt> = (0..u.rows())
        .map(|i| (0..u.cols()).map(|j| &u[(i, j)] * &b[j]).sum())
        .collect();
    (0..s.rows()).any(|i| {
        let d = if i < s.cols() { s[(i, i)].clone() } else { BigInt::zero() };
        if d.is_zero() {
            !c[i].is_zero()
        } else {
            !c[i].is_multiple_of(&d)
        }
    })
}

/// A random integral representation of `C₂`, `C₃` or `S₃` of rank at most
/// 4, assembled from trivial, sign and permutation blocks and conjugated by a
/// random unimodular matrix, with an invariant sublattice `W`.
pub struct MaschkeCase {
    pub group: std::sync::Arc<groupeq::finite::FiniteGroup>,
    pub matrices: Vec<IntMatrix>,
    pub w: IntMatrix,
}

fn perm_sign(p: &groupeq::perm::Perm) -> i64 {
    let even = p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0;
    if even {
        1
    } else {
        -1
    }
}

fn unimodular_pair<R: Rng>(rng: &mut R, r: usize) -> (IntMatrix, IntMatrix) {
    let mut p = IntMatrix::identity(r);
    let mut p_inv = IntMatrix::identity(r);
    if r < 2 {
        return (p, p_inv);
    }
    for _ in 0..rng.gen_range(0..=4) {
        let i = rng.gen_range(0..r);
        let j = (i + rng.gen_range(1..r)) % r;
        let c = BigInt::from(rng.gen_range(-2..=2));
        p.add_row_multiple(i, j, &c);
        p_inv.add_col_multiple(j, i, &-c);
    }
    (p, p_inv)
}

pub fn random_maschke<R: Rng>(rng: &mut R) -> MaschkeCase {
    use groupeq::zoo::{cyclic_perm_group, s3};
    let group = std::sync::Arc::new(match rng.gen_range(0..3) {
        0 => cyclic_perm_group(2),
        1 => cyclic_perm_group(3),
        _ => s3(),
    });
    let degree = group.degree().unwrap();
    let target = rng.gen_range(1..=4usize);
    // blocks: 0 trivial, 1 sign, 2 permutation
    let mut blocks: Vec<usize> = Vec::new();
    let mut r = 0;
    while r < target {
        let kind = if target - r >= degree { rng.gen_range(0..3) } else { rng.gen_range(0..2) };
        blocks.push(kind);
        r += if kind == 2 { degree } else { 1 };
    }
    let block_matrix = |x: usize| {
        let p = group.perm(x).unwrap();
        let mut m = IntMatrix::zeros(r, r);
        let mut at = 0;
        for &k in &blocks {
            match k {
                0 => m[(at, at)] = BigInt::one(),
                1 => m[(at, at)] = BigInt::from(perm_sign(p)),
                _ => {
                    for i in 0..degree {
                        m[(at + p.apply(i), at + i)] = BigInt::one();
                    }
                }
            }
            at += if k == 2 { degree } else { 1 };
        }
        m
    };
    let mut w_rows: Vec<Vec<BigInt>> = Vec::new();
    let mut at = 0;
    for &k in &blocks {
        let size = if k == 2 { degree } else { 1 };
        match rng.gen_range(0..3) {
            0 => {}
            1 => {
                let scale = BigInt::from(rng.gen_range(1..=3));
                for i in 0..size {
                    let mut v = vec![BigInt::zero(); r];
                    v[at + i] = scale.clone();
                    w_rows.push(v);
                }
            }
            _ if k == 2 => {
                let mut v = vec![BigInt::zero(); r];
                for i in 0..size {
                    v[at + i] = BigInt::one();
                }
                w_rows.push(v);
            }
            _ => {}
        }
        at += size;
    }
    let (p, p_inv) = unimodular_pair(rng, r);
    let mut matrices: Vec<IntMatrix> = (0..group.order())
        .map(|x| mat_mul(&mat_mul(&p, &block_matrix(x)), &p_inv))
        .collect();
    if groupeq::lattice::ZGModuleAction::new(group.clone(), matrices.clone()).is_err() {
        matrices = (0..group.order())
            .map(|x| mat_mul(&mat_mul(&p, &block_matrix(group.inv(x))), &p_inv))
            .collect();
    }
    let w_pre = IntMatrix::from_row_vecs(w_rows, r).unwrap();
    let w = mat_mul(&w_pre, &p.transpose());
    MaschkeCase { group, matrices, w }
}

fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    use num_rational::BigRational;
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                for j in 0..cols {
                    let v = &f * &m[rank][j];
                    m[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether `v` is an integer combination of the independent rows of `basis`.
pub fn in_lattice(basis: &IntMatrix, v: &[BigInt]) -> bool {
    use num_rational::BigRational;
    let k = basis.rows();
    let n = basis.cols();
    // solve basisᵀ c = v over ℚ
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigRational> =
                (0..k).map(|i| BigRational::from_integer(basis[(i, j)].clone())).collect();
            row.push(BigRational::from_integer(v[j].clone()));
            row
        })
        .collect();
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..k {
        let Some(p) = (rank..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=k {
                    let t = &f * &m[rank][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if (rank..n).any(|i| !m[i][k].is_zero()) {
        return false;
    }
    (0..rank).all(|i| m[i][k].is_integer())
}

/// Checks a complement `U` of `W` and returns the index of `U ⊕ W`.
pub fn check_complement(case: &MaschkeCase, u: &IntMatrix, index: &BigInt) -> Result<BigInt, String> {
    let r = case.w.cols();
    if u.cols() != r {
        return Err("complement of the wrong width".into());
    }
    if rational_rank(&u.row_vecs()) != u.rows() {
        return Err("complement basis is dependent".into());
    }
    for m in &case.matrices {
        for i in 0..u.rows() {
            let img: Vec<BigInt> = (0..r).map(|a| (0..r).map(|b| &m[(a, b)] * &u[(i, b)]).sum()).collect();
            if !in_lattice(u, &img) {
                return Err("complement is not invariant".into());
            }
        }
    }
    if u.rows() + case.w.rows() != r {
        return Err(format!("ranks {} + {} != {r}", u.rows(), case.w.rows()));
    }
    let mut rows = u.row_vecs();
    rows.extend(case.w.row_vecs());
    if rational_rank(&rows) != r {
        return Err("U and W intersect".into());
    }
    let d = det(&IntMatrix::from_row_vecs(rows, r).unwrap()).abs();
    if d.is_zero() {
        return Err("infinite index".into());
    }
    if &d != index {
        return Err(format!("reported index {index}, actual {d}"));
    }
    Ok(d)
}

pub fn rank_of(m: &IntMatrix) -> usize {
    rational_rank(&m.row_vecs())
}
