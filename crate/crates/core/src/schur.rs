//! Alternants, generalized Schur polynomials and both Jacobi–Trudi forms.
//!
//! Multivariate objects live in `z_1, ..., z_m`. Every ratio divides by an
//! alternant built with the same row order as its numerator, so sign
//! conventions for the Vandermonde determinant never leak into results.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::classical::{monic_sequence, recurrence, shift_parameter, Family};
use crate::eop::{EopResult, Route};
use crate::error::{Error, Result};
use crate::kernel::det::det;
use crate::kernel::rational::{binomial, factorial, int};
use crate::partitions::Partition;
use crate::{QMultiPoly, QPoly};

/// `det[φ_i(z_j)]`, row `i`, column `j`.
pub fn alternant(polys: &[QPoly], m: usize) -> Result<QMultiPoly> {
    if polys.len() != m {
        return Err(Error::Dimension(format!(
            "an alternant in {m} variables needs {m} functions, got {}",
            polys.len()
        )));
    }
    if m == 0 {
        return Ok(QMultiPoly::constant(0, int(1)));
    }
    let matrix: Vec<Vec<QMultiPoly>> = polys
        .iter()
        .map(|p| (0..m).map(|j| QMultiPoly::from_univariate(m, j, p)).collect())
        .collect();
    let d = det(&matrix)?;
    // a vanishing determinant comes back without a variable count
    Ok(if d.is_zero() { QMultiPoly::zero_in(m) } else { d })
}

/// The alternant of `1, z, ..., z^{m-1}`, equal to `∏_{i<j} (z_j - z_i)`.
pub fn vandermonde(m: usize) -> QMultiPoly {
    let monomials: Vec<QPoly> = (0..m).map(|k| QPoly::monomial(int(1), k)).collect();
    alternant(&monomials, m).expect("arity matches by construction")
}

/// `alternant(φ) / vandermonde(m)`, a symmetric polynomial.
pub fn symmetric_ratio(polys: &[QPoly], m: usize) -> Result<QMultiPoly> {
    alternant(polys, m)?.exact_divide(&vandermonde(m))
}

/// The ratio with all variables set equal; divides exactly first.
pub fn confluent_limit(polys: &[QPoly], m: usize) -> Result<QPoly> {
    Ok(symmetric_ratio(polys, m)?.substitute_diagonal())
}

/// Rows `Π_{λ_1+m-1}, Π_{λ_2+m-2}, ..., Π_{λ_m}`.
fn partition_rows(family: &Family, lambda: &Partition) -> Result<Vec<QPoly>> {
    let m = lambda.len();
    let top = lambda.parts().first().map_or(0, |p| p + m.saturating_sub(1));
    let seq = monic_sequence(family, top)?;
    Ok(lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &p)| seq[p + m - 1 - r].clone())
        .collect())
}

/// `Δ(Π_{m-1}, ..., Π_0 | Z)`, equal to `(-1)^{m(m-1)/2}` times the
/// Vandermonde determinant.
pub fn schur_denominator(family: &Family, m: usize) -> Result<QMultiPoly> {
    let zeros = Partition::new(vec![0; m])?;
    alternant(&partition_rows(family, &zeros)?, m)
}

/// `S_λ(Z) = Δ(Π_λ | Z) / Δ(Π_0 | Z)` in `m = len(λ)` variables.
pub fn generalized_schur(family: &Family, lambda: &Partition, m: usize) -> Result<QMultiPoly> {
    if lambda.len() != m {
        return Err(Error::Dimension(format!(
            "partition {lambda} has length {}, expected {m}",
            lambda.len()
        )));
    }
    let num = alternant(&partition_rows(family, lambda)?, m)?;
    num.exact_divide(&schur_denominator(family, m)?)
}

/// Confluent generalized Schur route: `S_λ(z) = W_λ(z) / ∏_{j<m} j!`.
pub fn eop_schur_confluent(family: &Family, lambda: &Partition) -> Result<EopResult> {
    let polynomial = generalized_schur(family, lambda, lambda.len())?.substitute_diagonal();
    Ok(EopResult {
        family: family.clone(),
        partition: lambda.clone(),
        polynomial,
        route: Route::SchurConfluent,
    })
}

/// `S_k^{(0,l)}(z) = C(k+l-1, k) Π_k^{a_{l-1}}(z)`; zero for `k < 0`.
pub fn column_schur_binomial(family: &Family, k: i64, l: usize) -> Result<QPoly> {
    if l == 0 {
        return Err(Error::Precondition("column Schur polynomials need l >= 1".into()));
    }
    if k < 0 {
        return Ok(QPoly::zero());
    }
    let k = k as usize;
    let shifted = shift_parameter(family, l - 1);
    let c = binomial((k + l - 1) as u64, k as u64);
    Ok(monic_sequence(&shifted, k)?[k].scale(&c))
}

/// `S_k^{(0,l)}(z) = (1/(l-1)!) d^{l-1}/dz^{l-1} Π_{k+l-1}(z)`; zero for `k < 0`.
pub fn column_schur_derivative(family: &Family, k: i64, l: usize) -> Result<QPoly> {
    if l == 0 {
        return Err(Error::Precondition("column Schur polynomials need l >= 1".into()));
    }
    if k < 0 {
        return Ok(QPoly::zero());
    }
    let n = k as usize + l - 1;
    let p = &monic_sequence(family, n)?[n];
    Ok(p.nth_derivative(l - 1).scale(&factorial((l - 1) as u64).recip()))
}

/// The column Schur polynomial `S_k^{(0,l)}(z)`. Both closed forms are
/// computed; a disagreement is reported as an error.
pub fn column_schur(family: &Family, k: i64, l: usize) -> Result<QPoly> {
    let a = column_schur_binomial(family, k, l)?;
    let b = column_schur_derivative(family, k, l)?;
    if a != b {
        return Err(Error::Precondition(format!(
            "column Schur forms disagree for {family}, k = {k}, l = {l}"
        )));
    }
    Ok(a)
}

/// Confluent column Schur polynomials `S_k^{(i,m)}(z)`.
///
/// Column `i = 0` is seeded from [`column_schur`]; higher columns come from
/// `S_k^{(i+1)} = S_{k+1}^{(i)} + p_{k+m-1} S_k^{(i)} + q_{k+m-1} S_{k-1}^{(i)}`.
/// `S_{-m}^{(i)} = 0` for every `i`; entries with `-m < k < 0` and `i > 0`
/// are whatever the recurrence produces.
#[derive(Clone, Debug)]
pub struct ColumnSchurTable {
    m: usize,
    entries: BTreeMap<(usize, i64), QPoly>,
}

impl ColumnSchurTable {
    /// Table with columns `0..=max_i` and rows `-m+1 ..= max_k` in every column.
    pub fn build(family: &Family, m: usize, max_k: i64, max_i: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Precondition("column Schur tables need m >= 1".into()));
        }
        let low = 1 - m as i64;
        let mut entries = BTreeMap::new();
        let top0 = max_k + max_i as i64;
        for k in low..=top0.max(low) {
            entries.insert((0, k), column_schur(family, k, m)?);
        }
        let mut table = Self { m, entries };
        for i in 0..max_i {
            let top = max_k + (max_i - i - 1) as i64;
            for k in low..=top.max(low) {
                // n = k + m - 1 >= 0 here
                let n = (k + m as i64 - 1) as usize;
                let rc = recurrence(family, n)?;
                let mut v = table.get(k + 1, i).clone();
                v += &table.get(k, i).scale(&rc.p);
                v += &table.get(k - 1, i).scale(&rc.q);
                table.entries.insert((i + 1, k), v);
            }
        }
        Ok(table)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `S_k^{(i,m)}`; zero at and below `k = -m`.
    ///
    /// Panics when `(k, i)` lies above the built range.
    pub fn get(&self, k: i64, i: usize) -> &QPoly {
        static ZERO: std::sync::OnceLock<QPoly> = std::sync::OnceLock::new();
        if k <= -(self.m as i64) {
            return ZERO.get_or_init(QPoly::zero);
        }
        self.entries
            .get(&(i, k))
            .unwrap_or_else(|| panic!("S_{k}^({i},{}) outside the built table", self.m))
    }

    pub fn try_get(&self, k: i64, i: usize) -> Option<&QPoly> {
        if k <= -(self.m as i64) {
            return Some(self.get(k, i));
        }
        self.entries.get(&(i, k))
    }
}

/// The table needed by the confluent generalized Jacobi–Trudi determinant
/// of `λ`, with `m = len(λ)`.
pub fn schur_table(family: &Family, lambda: &Partition, m: usize) -> Result<ColumnSchurTable> {
    if lambda.len() != m {
        return Err(Error::Dimension(format!(
            "partition {lambda} has length {}, expected {m}",
            lambda.len()
        )));
    }
    let max_k = lambda.parts().first().copied().unwrap_or(0) as i64;
    ColumnSchurTable::build(family, m, max_k, m.saturating_sub(1))
}

/// Component `j` (0-based) of the column vector `S_λ^{(i,m)}`: `S_{λ_j - j}^{(i,m)}`.
fn gjt_index(lambda: &Partition, j: usize) -> i64 {
    lambda.parts()[j] as i64 - j as i64
}

/// `det[S_{λ_r - r + 1}^{(i,m)}(z)]`, rows `r`, columns `i`; equals `S_λ(z)`.
pub fn eop_gjt_confluent(family: &Family, lambda: &Partition) -> Result<EopResult> {
    let m = lambda.len();
    let polynomial = if m == 0 {
        QPoly::one()
    } else {
        let table = schur_table(family, lambda, m)?;
        let matrix: Vec<Vec<QPoly>> = (0..m)
            .map(|r| (0..m).map(|i| table.get(gjt_index(lambda, r), i).clone()).collect())
            .collect();
        det(&matrix)?
    };
    Ok(EopResult {
        family: family.clone(),
        partition: lambda.clone(),
        polynomial,
        route: Route::GjtConfluent,
    })
}

/// Checks `S_λ^{(i+1,m)} = z S_λ^{(i,m)} + S_{λ+1}^{(i,m-1)}` componentwise.
pub fn recs_check(family: &Family, lambda: &Partition, i: usize) -> Result<bool> {
    let m = lambda.len();
    if m < 2 || i + 2 > m {
        return Err(Error::Precondition(format!(
            "the vector recursion needs 0 <= i <= m - 2, got i = {i}, m = {m}"
        )));
    }
    let max_k = lambda.parts()[0] as i64 + 1;
    let big = ColumnSchurTable::build(family, m, max_k, i + 1)?;
    let small = ColumnSchurTable::build(family, m - 1, max_k, i)?;
    let z = QPoly::variable();
    let plus = lambda.incremented();
    Ok((0..m).all(|j| {
        let k = gjt_index(lambda, j);
        let lhs = big.get(k, i + 1);
        let rhs = &(&z * big.get(k, i)) + small.get(gjt_index(&plus, j), i);
        *lhs == rhs
    }))
}

/// Multivariate `S_k^{(i,l)}(Z) = Δ(z^i Π_{k+l-1}, Π_{l-2}, ..., Π_0 | Z) / Δ(Π_{l-1}, ..., Π_0 | Z)`,
/// the divided difference of `z^i Π_{k+l-1}` over `z_1, ..., z_l`.
pub fn column_schur_multivariate(family: &Family, k: i64, i: usize, l: usize) -> Result<QMultiPoly> {
    if l == 0 {
        return Err(Error::Precondition("column Schur polynomials need l >= 1".into()));
    }
    let top_index = k + l as i64 - 1;
    if top_index < 0 {
        return Ok(QMultiPoly::zero_in(l));
    }
    let top_index = top_index as usize;
    let seq = monic_sequence(family, top_index.max(l - 1))?;
    let mut rows = vec![seq[top_index].shift_up(i)];
    rows.extend((0..l - 1).rev().map(|r| seq[r].clone()));
    alternant(&rows, l)?.exact_divide(&schur_denominator(family, l)?)
}

/// Both recursion relations for the multivariate table at `(k, i, m)`:
/// the three-term form and `S_k^{(i+1,m)}(Z) = z_1 S_k^{(i,m)}(Z) + S_{k+1}^{(i,m-1)}(z_2, ..., z_m)`.
pub fn multivariate_recursion_check(family: &Family, k: i64, i: usize, m: usize) -> Result<(bool, bool)> {
    if m < 2 {
        return Err(Error::Precondition("the mixed recursion needs m >= 2".into()));
    }
    let s = |kk: i64, ii: usize| column_schur_multivariate(family, kk, ii, m);
    let lhs = s(k, i + 1)?;
    let n = k + m as i64 - 1;
    let three_term = if n < 0 {
        lhs.is_zero()
    } else {
        let rc = recurrence(family, n as usize)?;
        let rhs = &(&s(k + 1, i)? + &s(k, i)?.scale(&rc.p)) + &s(k - 1, i)?.scale(&rc.q);
        lhs == rhs
    };
    let z1 = QMultiPoly::variable(m, 0);
    let tail = column_schur_multivariate(family, k + 1, i, m - 1)?.shift_variables(1, m);
    let mixed = lhs == &(&z1 * &s(k, i)?) + &tail;
    Ok((three_term, mixed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eop::eop_wronskian;
    use crate::kernel::det::wronskian;
    use crate::kernel::rational::{q, superfactorial};

    fn poly(cs: &[i64]) -> QPoly {
        QPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn z(m: usize, i: usize) -> QMultiPoly {
        QMultiPoly::variable(m, i)
    }

    #[test]
    fn alternant_examples() {
        let a = alternant(&[poly(&[1]), poly(&[0, 1])], 2).unwrap();
        assert_eq!(a, &z(2, 1) - &z(2, 0));
        let a = alternant(&[poly(&[1]), poly(&[0, 0, 1])], 2).unwrap();
        assert_eq!(a, &(&z(2, 1) * &z(2, 1)) - &(&z(2, 0) * &z(2, 0)));
        let monic = [poly(&[1]), poly(&[5, 1]), poly(&[-3, 2, 1])];
        assert_eq!(alternant(&monic, 3).unwrap(), vandermonde(3));
        assert!(matches!(alternant(&monic, 2), Err(Error::Dimension(_))));
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(1), QMultiPoly::constant(1, int(1)));
        assert_eq!(vandermonde(2), &z(2, 1) - &z(2, 0));
        let prod = &(&(&z(3, 1) - &z(3, 0)) * &(&z(3, 2) - &z(3, 0))) * &(&z(3, 2) - &z(3, 1));
        assert_eq!(vandermonde(3), prod);
    }

    #[test]
    fn ratio_examples() {
        let r = symmetric_ratio(&[poly(&[1]), poly(&[0, 0, 1])], 2).unwrap();
        assert_eq!(r, &z(2, 0) + &z(2, 1));
        let r = symmetric_ratio(&[poly(&[1]), poly(&[2, 1]), poly(&[0, 1, 1])], 3).unwrap();
        assert_eq!(r, QMultiPoly::constant(3, int(1)));
        // s_(1,0,0) with rows 1, z, z^3: complete homogeneous h_1 = e_1
        let r = symmetric_ratio(&[poly(&[1]), poly(&[0, 1]), poly(&[0, 0, 0, 1])], 3).unwrap();
        assert_eq!(r, &(&z(3, 0) + &z(3, 1)) + &z(3, 2));
        assert!(r.is_symmetric());
    }

    #[test]
    fn confluent_examples() {
        assert_eq!(
            confluent_limit(&[poly(&[1]), poly(&[0, 0, 1])], 2).unwrap(),
            poly(&[0, 2])
        );
        let h = Family::hermite();
        let seq = monic_sequence(&h, 2).unwrap();
        let c = confluent_limit(&[seq[1].clone(), seq[2].clone()], 2).unwrap();
        assert_eq!(c, eop_wronskian(&h, &p("1,1")).unwrap().polynomial);
        let fns = [poly(&[1, 2, 0, 1]), poly(&[0, 0, 3]), poly(&[-1, 0, 0, 0, 1])];
        let c = confluent_limit(&fns, 3).unwrap();
        assert_eq!(c.scale(&superfactorial(3)), wronskian(&fns).unwrap());
    }

    #[test]
    fn denominator_sign() {
        let lag = Family::laguerre(q(3, 2)).unwrap();
        for m in 1..=4usize {
            let d = schur_denominator(&lag, m).unwrap();
            let sign = if (m * (m - 1) / 2) % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(d, vandermonde(m).scale(&sign));
        }
    }

    #[test]
    fn generalized_schur_examples() {
        let jac = Family::jacobi(q(3, 4), q(3, 2)).unwrap();
        assert_eq!(
            generalized_schur(&jac, &p("0,0,0"), 3).unwrap(),
            QMultiPoly::constant(3, int(1))
        );
        let h = Family::hermite();
        let s = generalized_schur(&h, &p("1,1"), 2).unwrap();
        assert!(s.is_symmetric());
        assert_eq!(s.substitute_diagonal(), poly(&[1, 0, 2]).scale(&q(1, 2)));
        let lag = Family::laguerre(q(1, 2)).unwrap();
        let s = generalized_schur(&lag, &p("3"), 1).unwrap();
        assert_eq!(
            s,
            QMultiPoly::from_univariate(1, 0, &monic_sequence(&lag, 3).unwrap()[3])
        );
    }

    #[test]
    fn column_schur_examples() {
        let h = Family::hermite();
        let seq = monic_sequence(&h, 4).unwrap();
        assert_eq!(column_schur(&h, 4, 1).unwrap(), seq[4]);
        assert_eq!(column_schur(&h, 1, 2).unwrap(), poly(&[0, 2]));
        let jac = Family::jacobi(q(5, 2), q(3, 4)).unwrap();
        assert!(column_schur(&jac, -1, 3).unwrap().is_zero());
    }

    #[test]
    fn table_hermite_m2() {
        let h = Family::hermite();
        let t = ColumnSchurTable::build(&h, 2, 3, 1).unwrap();
        let seq = monic_sequence(&h, 4).unwrap();
        assert_eq!(t.get(2, 0), &seq[2].scale(&int(3)));
        // S_1^(1) = S_2^(0) + p_2 S_1^(0) + q_2 S_0^(0) = 3(z^2 - 1/2) + 0 + 1
        assert_eq!(t.get(1, 1), &QPoly::new(vec![q(-1, 2), int(0), int(3)]));
        assert!(t.get(-2, 1).is_zero());
        assert!(t.get(-1, 0).is_zero());
        // S_{-1}^(1) = S_0^(0) + p_1 S_{-1}^(0) + q_1 S_{-2}^(0) = 1
        assert_eq!(t.get(-1, 1), &QPoly::one());
    }

    #[test]
    fn table_matches_divided_difference_closed_form() {
        let jac = Family::jacobi(q(3, 2), q(5, 2)).unwrap();
        let m = 3;
        let t = ColumnSchurTable::build(&jac, m, 4, 2).unwrap();
        let seq = monic_sequence(&jac, 10).unwrap();
        let inv = factorial((m - 1) as u64).recip();
        for i in 0..=2usize {
            for k in (1 - m as i64)..=4 {
                let n = (k + m as i64 - 1) as usize;
                let closed = seq[n].shift_up(i).nth_derivative(m - 1).scale(&inv);
                assert_eq!(t.get(k, i), &closed, "k = {k}, i = {i}");
            }
        }
    }

    #[test]
    fn gjt_examples() {
        let h = Family::hermite();
        let lag = Family::laguerre(q(1, 2)).unwrap();
        assert_eq!(
            eop_gjt_confluent(&lag, &p("3")).unwrap().polynomial,
            monic_sequence(&lag, 3).unwrap()[3]
        );
        assert_eq!(
            eop_gjt_confluent(&h, &p("1,1")).unwrap().polynomial,
            poly(&[1, 0, 2]).scale(&q(1, 2))
        );
        assert_eq!(
            eop_gjt_confluent(&lag, &p("2,1")).unwrap().as_wronskian(),
            eop_wronskian(&lag, &p("2,1")).unwrap().polynomial
        );
    }

    #[test]
    fn recs_examples() {
        let h = Family::hermite();
        assert!(recs_check(&h, &p("1,1"), 0).unwrap());
        assert!(recs_check(&h, &p("0,0"), 0).unwrap());
        let lag = Family::laguerre(q(3, 2)).unwrap();
        assert!(recs_check(&lag, &p("2,1,0"), 1).unwrap());
        assert!(recs_check(&h, &p("1"), 0).is_err());
    }

    #[test]
    fn multivariate_table_satisfies_both_recursions() {
        let lag = Family::laguerre(q(7, 3)).unwrap();
        for m in 2..=3usize {
            for i in 0..m - 1 {
                for k in (1 - m as i64)..=2 {
                    let (a, b) = multivariate_recursion_check(&lag, k, i, m).unwrap();
                    assert!(a && b, "m = {m}, i = {i}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn multivariate_gjt_determinant() {
        let jac = Family::jacobi(q(3, 4), q(5, 2)).unwrap();
        for lambda in [p("1,1"), p("2,0"), p("2,1,1"), p("3,1,0")] {
            let m = lambda.len();
            let matrix: Vec<Vec<QMultiPoly>> = (0..m)
                .map(|r| {
                    (0..m)
                        .map(|i| column_schur_multivariate(&jac, gjt_index(&lambda, r), i, m).unwrap())
                        .collect()
                })
                .collect();
            assert_eq!(det(&matrix).unwrap(), generalized_schur(&jac, &lambda, m).unwrap());
        }
    }

    #[test]
    fn multivariate_column_confluent_limit() {
        let h = Family::hermite();
        for l in 1..=3usize {
            for k in 0..=3i64 {
                let s = column_schur_multivariate(&h, k, 0, l).unwrap();
                assert_eq!(s.substitute_diagonal(), column_schur(&h, k, l).unwrap());
            }
        }
    }
}
