//! Exact determinants over commutative rings, and the Wronskian.

use super::scalar::{DetRing, DetStrategy, Field, Scalar};
use super::upoly::UniPoly;
use crate::error::{Error, Result};

fn check_square<T>(matrix: &[Vec<T>]) -> Result<usize> {
    let n = matrix.len();
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Dimension(format!(
                "row {i} has {} entries in a {n}-row matrix",
                row.len()
            )));
        }
    }
    Ok(n)
}

/// Determinant with the strategy the ring prefers.
pub fn det<T: DetRing>(matrix: &[Vec<T>]) -> Result<T> {
    let n = check_square(matrix)?;
    match T::det_strategy(n) {
        DetStrategy::Cofactor => Ok(cofactor_unchecked(matrix)),
        DetStrategy::Bareiss => bareiss_unchecked(matrix),
    }
}

/// Division-free Laplace expansion along successive rows.
///
/// Minors are memoized over column subsets, so the cost is `n 2^(n-1)`
/// ring multiplications instead of `n!`.
pub fn det_cofactor<T: Scalar>(matrix: &[Vec<T>]) -> Result<T> {
    check_square(matrix)?;
    Ok(cofactor_unchecked(matrix))
}

fn cofactor_unchecked<T: Scalar>(matrix: &[Vec<T>]) -> T {
    let n = matrix.len();
    if n == 0 {
        return T::one();
    }
    assert!(n < 24, "cofactor expansion limited to small matrices");
    // minors[s] = det of rows 0..popcount(s) restricted to the columns in s
    let mut minors: Vec<Option<T>> = vec![None; 1 << n];
    minors[0] = Some(T::one());
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for s in 1usize..(1 << n) {
        by_size[s.count_ones() as usize].push(s);
    }
    for k in 1..=n {
        let row = &matrix[k - 1];
        for &s in &by_size[k] {
            let mut acc = T::zero();
            let mut pos = 0usize;
            for (j, entry) in row.iter().enumerate() {
                if s & (1 << j) == 0 {
                    continue;
                }
                let sub = minors[s ^ (1 << j)].as_ref().expect("minor computed");
                if !entry.is_zero() && !sub.is_zero() {
                    let mut t = entry.clone();
                    t *= sub;
                    // column j sits at position `pos` of s; expanding along the
                    // last row of a k x k block gives sign (-1)^(k-1+pos)
                    if (k - 1 + pos).is_multiple_of(2) {
                        acc += &t;
                    } else {
                        acc -= &t;
                    }
                }
                pos += 1;
            }
            minors[s] = Some(acc);
        }
        // minors of size k-1 are no longer needed
        for &s in &by_size[k - 1] {
            minors[s] = None;
        }
    }
    minors[(1 << n) - 1].take().expect("full determinant")
}

/// Fraction-free Bareiss elimination with row pivoting.
pub fn det_bareiss<T: DetRing>(matrix: &[Vec<T>]) -> Result<T> {
    check_square(matrix)?;
    bareiss_unchecked(matrix)
}

fn bareiss_unchecked<T: DetRing>(matrix: &[Vec<T>]) -> Result<T> {
    let n = matrix.len();
    if n == 0 {
        return Ok(T::one());
    }
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let mut x = a[i][j].clone();
                x *= &a[k][k];
                let mut y = a[i][k].clone();
                y *= &a[k][j];
                x -= &y;
                a[i][j] = x.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Wronskian `det[f_j^{(i)}]`, row `i` holding the `i`-th derivatives.
pub fn wronskian<T: Field>(fns: &[UniPoly<T>]) -> Result<UniPoly<T>>
where
    UniPoly<T>: DetRing,
{
    if fns.is_empty() {
        return Err(Error::Arity("the Wronskian needs at least one function".into()));
    }
    let m = fns.len();
    let mut rows: Vec<Vec<UniPoly<T>>> = Vec::with_capacity(m);
    rows.push(fns.to_vec());
    for i in 1..m {
        let next = rows[i - 1].iter().map(UniPoly::derivative).collect();
        rows.push(next);
    }
    det(&rows)
}
