//! Exceptional orthogonal polynomials `W_λ` by the Wronskian definition and
//! the Noumi-style Jacobi–Trudi determinant.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::classical::{g_function, monic_sequence, Family};
use crate::darboux::Chart;
use crate::error::{Error, Result};
use crate::kernel::det::{det, det_bareiss, wronskian};
use crate::kernel::jet::{JetOps, TaylorJet};
use crate::kernel::rational::{int, superfactorial};
use crate::kernel::real::{eval_qpoly, BigFloat, Real};
use crate::kernel::scalar::Scalar;
use crate::partitions::{partition_to_indices, Partition};
use crate::{schur, QPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    Wronskian,
    NoumiJt,
    SchurConfluent,
    GjtConfluent,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::Wronskian,
        Route::NoumiJt,
        Route::SchurConfluent,
        Route::GjtConfluent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Wronskian => "wronskian",
            Route::NoumiJt => "noumi-jt",
            Route::SchurConfluent => "schur-confluent",
            Route::GjtConfluent => "gjt-confluent",
        }
    }

    /// Schur routes produce `W_λ / ∏_{j<m} j!`.
    pub fn is_schur_normalized(self) -> bool {
        matches!(self, Route::SchurConfluent | Route::GjtConfluent)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown route `{s}`")))
    }
}

/// One route's polynomial. For the Schur routes `polynomial` is the Schur
/// normalization; [`EopResult::as_wronskian`] rescales every route to `W_λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct EopResult {
    pub family: Family,
    pub partition: Partition,
    pub polynomial: QPoly,
    pub route: Route,
}

impl EopResult {
    pub fn as_wronskian(&self) -> QPoly {
        if self.route.is_schur_normalized() {
            self.polynomial.scale(&superfactorial(self.partition.len()))
        } else {
            self.polynomial.clone()
        }
    }
}

/// `W(Π_{n_1}, ..., Π_{n_m} | z)` with `n = partition_to_indices(λ)`.
pub fn eop_wronskian(family: &Family, lambda: &Partition) -> Result<EopResult> {
    let polynomial = wronskian_poly(family, lambda)?;
    Ok(EopResult {
        family: family.clone(),
        partition: lambda.clone(),
        polynomial,
        route: Route::Wronskian,
    })
}

fn wronskian_poly(family: &Family, lambda: &Partition) -> Result<QPoly> {
    if lambda.is_empty() {
        return Ok(QPoly::one());
    }
    let indices = partition_to_indices(lambda);
    let top = *indices.as_slice().last().expect("nonempty");
    let seq = monic_sequence(family, top)?;
    let fns: Vec<QPoly> = indices.as_slice().iter().map(|&n| seq[n].clone()).collect();
    wronskian(&fns)
}

/// `det[g^{(i)}_{λ_j + i - j}]`, rows `i`, columns `j`.
pub fn eop_noumi_jt(family: &Family, lambda: &Partition) -> Result<EopResult> {
    let m = lambda.len();
    let parts = lambda.parts();
    let mut matrix = Vec::with_capacity(m);
    for i in 0..m {
        let row = (0..m)
            .map(|j| g_function(family, m, i, parts[j] as i64 + i as i64 - j as i64))
            .collect::<Result<Vec<_>>>()?;
        matrix.push(row);
    }
    let polynomial = if m == 0 { QPoly::one() } else { det(&matrix)? };
    Ok(EopResult {
        family: family.clone(),
        partition: lambda.clone(),
        polynomial,
        route: Route::NoumiJt,
    })
}

/// Dispatches on `route`.
pub fn eop_by_route(family: &Family, lambda: &Partition, route: Route) -> Result<EopResult> {
    match route {
        Route::Wronskian => eop_wronskian(family, lambda),
        Route::NoumiJt => eop_noumi_jt(family, lambda),
        Route::SchurConfluent => schur::eop_schur_confluent(family, lambda),
        Route::GjtConfluent => schur::eop_gjt_confluent(family, lambda),
    }
}

/// Checks `W(ψ_{n_1}, ..., ψ_{n_m} | x) = ψ_0^m (dz/dx)^{m(m-1)/2} W_λ(z(x))`
/// at each sample to relative `1e-20`. The `x`-Wronskian is formed
/// numerically from order-`(m-1)` Taylor jets of the full eigenfunctions.
///
/// The chart is the family's own variable change with unit frequency; the
/// identity does not depend on the frequency.
pub fn gauge_factorization_check(family: &Family, lambda: &Partition, sample_points: &[Rational]) -> Result<bool> {
    let chart = Chart::new(family.clone(), int(1))?;
    let tol = BigFloat::from_f64(1e-20);
    let w_lambda = wronskian_poly(family, lambda)?;
    let indices = partition_to_indices(lambda);
    let m = indices.len();
    let top = indices.as_slice().last().copied().unwrap_or(0);
    let seq = monic_sequence(family, top)?;
    for x in sample_points {
        let xr: BigFloat = chart.check_domain(x)?;
        let xj = TaylorJet::variable(xr, m.max(1));
        let z = chart.z(&xj);
        let psi0 = chart.psi0(&xj);
        // rows: derivative order; columns: eigenfunction
        let columns: Vec<TaylorJet<BigFloat>> = indices
            .as_slice()
            .iter()
            .map(|&n| psi0.clone() * z.eval_poly(&seq[n]))
            .collect();
        let matrix: Vec<Vec<BigFloat>> = (0..m)
            .map(|k| columns.iter().map(|c| c.derivative_value(k)).collect())
            .collect();
        let lhs = if m == 0 { BigFloat::one() } else { det_bareiss(&matrix)? };
        let zp = z.derivative_value(1);
        let power = (m * m.saturating_sub(1) / 2) as u32;
        let rhs = psi0.value().powr(&BigFloat::from_int(m as i64))
            * zp.powr(&BigFloat::from_int(power as i64))
            * eval_qpoly(&w_lambda, z.value());
        let scale = lhs.abs() + rhs.abs();
        if scale.is_zero() {
            continue;
        }
        if (lhs - rhs).abs() / scale > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{q, superfactorial};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn wronskian_examples() {
        let h = Family::hermite();
        let seq = monic_sequence(&h, 5).unwrap();
        assert_eq!(eop_wronskian(&h, &p("5")).unwrap().polynomial, seq[5]);
        let w = eop_wronskian(&h, &p("1,1")).unwrap().polynomial;
        assert_eq!(w, QPoly::new(vec![q(1, 2), int(0), int(1)]));
        for m in 1..=5 {
            let zeros = Partition::new(vec![0; m]).unwrap();
            let lag = Family::laguerre(q(3, 2)).unwrap();
            assert_eq!(
                eop_wronskian(&lag, &zeros).unwrap().polynomial,
                QPoly::constant(superfactorial(m))
            );
        }
    }

    #[test]
    fn noumi_examples() {
        let h = Family::hermite();
        assert_eq!(
            eop_noumi_jt(&h, &p("4")).unwrap().polynomial,
            monic_sequence(&h, 4).unwrap()[4]
        );
        assert_eq!(
            eop_noumi_jt(&h, &p("1,1")).unwrap().polynomial,
            QPoly::new(vec![q(1, 2), int(0), int(1)])
        );
        let lag = Family::laguerre(q(1, 2)).unwrap();
        assert_eq!(
            eop_noumi_jt(&lag, &p("2,1")).unwrap().polynomial,
            eop_wronskian(&lag, &p("2,1")).unwrap().polynomial
        );
    }

    #[test]
    fn gauge_examples() {
        let h = Family::hermite();
        let xs = [int(-1), q(1, 3), int(2)];
        assert!(gauge_factorization_check(&h, &p("1,1"), &xs).unwrap());
        let lag = Family::laguerre(q(3, 2)).unwrap();
        let xs = [q(1, 2), int(1), int(3)];
        assert!(gauge_factorization_check(&lag, &p("2"), &xs).unwrap());
        let jac = Family::jacobi(q(3, 4), q(5, 2)).unwrap();
        let xs = [q(1, 5), q(3, 5), q(7, 5)];
        assert!(gauge_factorization_check(&jac, &p("2,1,1"), &xs).unwrap());
        assert!(gauge_factorization_check(&jac, &p("3"), &xs).unwrap());
    }

    #[test]
    fn gauge_domain_error() {
        let lag = Family::laguerre(q(3, 2)).unwrap();
        assert!(matches!(
            gauge_factorization_check(&lag, &p("1"), &[int(-1)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.name().parse::<Route>().unwrap(), r);
        }
        assert!("cofactor".parse::<Route>().is_err());
    }
}
