//! Monic Hermite, Laguerre and Jacobi polynomials with exact coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::rational::{factorial, int, q};
use crate::kernel::sturm::{Endpoint, Interval};
use crate::{QPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Hermite,
    Laguerre,
    Jacobi,
}

/// A classical family together with its parameters.
///
/// Construction enforces `alpha > -1` (and `beta > -1` for Jacobi); every
/// other function relies on that.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    kind: FamilyKind,
    alpha: Rational,
    beta: Rational,
}

impl Family {
    pub fn hermite() -> Self {
        Self {
            kind: FamilyKind::Hermite,
            alpha: Rational::zero(),
            beta: Rational::zero(),
        }
    }

    pub fn laguerre(alpha: Rational) -> Result<Self> {
        check_above_minus_one("alpha", &alpha)?;
        Ok(Self {
            kind: FamilyKind::Laguerre,
            alpha,
            beta: Rational::zero(),
        })
    }

    pub fn jacobi(alpha: Rational, beta: Rational) -> Result<Self> {
        check_above_minus_one("alpha", &alpha)?;
        check_above_minus_one("beta", &beta)?;
        Ok(Self {
            kind: FamilyKind::Jacobi,
            alpha,
            beta,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// `alpha` for Laguerre and Jacobi; `None` for Hermite.
    pub fn alpha(&self) -> Option<&Rational> {
        match self.kind {
            FamilyKind::Hermite => None,
            _ => Some(&self.alpha),
        }
    }

    /// `beta` for Jacobi only.
    pub fn beta(&self) -> Option<&Rational> {
        match self.kind {
            FamilyKind::Jacobi => Some(&self.beta),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            FamilyKind::Hermite => "hermite",
            FamilyKind::Laguerre => "laguerre",
            FamilyKind::Jacobi => "jacobi",
        }
    }

    /// Named parameters, in a deterministic order.
    pub fn params(&self) -> BTreeMap<&'static str, Rational> {
        let mut out = BTreeMap::new();
        if let Some(a) = self.alpha() {
            out.insert("alpha", a.clone());
        }
        if let Some(b) = self.beta() {
            out.insert("beta", b.clone());
        }
        out
    }

    /// Natural domain of the polynomial variable `z`.
    pub fn z_domain(&self) -> Interval {
        match self.kind {
            FamilyKind::Hermite => Interval::real_line(),
            FamilyKind::Laguerre => Interval::new(Endpoint::Finite(int(0)), Endpoint::PosInfinity),
            FamilyKind::Jacobi => Interval::finite(int(-1), int(1)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Hermite => write!(f, "hermite"),
            FamilyKind::Laguerre => write!(f, "laguerre(alpha={})", self.alpha),
            FamilyKind::Jacobi => write!(f, "jacobi(alpha={}, beta={})", self.alpha, self.beta),
        }
    }
}

fn check_above_minus_one(name: &str, value: &Rational) -> Result<()> {
    if *value > int(-1) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} = {value} must exceed -1")))
    }
}

/// `z Π_n = Π_{n+1} + p_n Π_n + q_n Π_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    pub p: Rational,
    pub q: Rational,
}

pub fn recurrence(family: &Family, n: usize) -> Result<RecurrenceCoeffs> {
    let nn = int(n as i64);
    match family.kind {
        FamilyKind::Hermite => Ok(RecurrenceCoeffs {
            p: Rational::zero(),
            q: nn / int(2),
        }),
        FamilyKind::Laguerre => {
            let a = &family.alpha;
            Ok(RecurrenceCoeffs {
                p: int(2) * &nn + int(1) + a,
                q: &nn * (&nn + a),
            })
        }
        FamilyKind::Jacobi => jacobi_recurrence(&family.alpha, &family.beta, n),
    }
}

fn jacobi_recurrence(a: &Rational, b: &Rational, n: usize) -> Result<RecurrenceCoeffs> {
    let nn = int(n as i64);
    let s = a + b;
    let degenerate = |what: &str| {
        Error::ParameterDegeneracy(format!(
            "jacobi recurrence {what} vanishes at n = {n} for alpha = {a}, beta = {b}"
        ))
    };
    // (b^2 - a^2) / ((s + 2)(s)) cancels to (b - a)/(s + 2) at n = 0
    let p = if n == 0 {
        let den = &s + int(2);
        if den.is_zero() {
            return Err(degenerate("p denominator"));
        }
        (b - a) / den
    } else {
        let den = (int(2) * &nn + int(2) + &s) * (int(2) * &nn + &s);
        if den.is_zero() {
            return Err(degenerate("p denominator"));
        }
        (b * b - a * a) / den
    };
    let q = match n {
        0 => Rational::zero(),
        // (n + s) cancels against (2n - 1 + s) at n = 1
        1 => {
            let den = (&s + int(3)) * (&s + int(2)) * (&s + int(2));
            if den.is_zero() {
                return Err(degenerate("q denominator"));
            }
            int(4) * (a + int(1)) * (b + int(1)) / den
        }
        _ => {
            let t = int(2) * &nn + &s;
            let den = (&t + int(1)) * &t * &t * (&t - int(1));
            if den.is_zero() {
                return Err(degenerate("q denominator"));
            }
            int(4) * &nn * (&nn + a) * (&nn + b) * (&nn + &s) / den
        }
    };
    Ok(RecurrenceCoeffs { p, q })
}

type Cache = Mutex<HashMap<Family, Arc<Vec<QPoly>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Π_0, ..., Π_n` for `family`, memoized per family.
pub fn monic_sequence(family: &Family, n: usize) -> Result<Arc<Vec<QPoly>>> {
    if let Some(seq) = cache().lock().expect("cache poisoned").get(family) {
        if seq.len() > n {
            return Ok(Arc::clone(seq));
        }
    }
    let mut seq = vec![QPoly::one()];
    let z = QPoly::variable();
    for k in 0..n {
        let RecurrenceCoeffs { p, q } = recurrence(family, k)?;
        let mut next = &z * &seq[k];
        next -= &seq[k].scale(&p);
        if k > 0 {
            next -= &seq[k - 1].scale(&q);
        }
        seq.push(next);
    }
    let seq = Arc::new(seq);
    let mut guard = cache().lock().expect("cache poisoned");
    let keep = match guard.get(family) {
        Some(existing) if existing.len() >= seq.len() => Arc::clone(existing),
        _ => {
            guard.insert(family.clone(), Arc::clone(&seq));
            seq
        }
    };
    Ok(keep)
}

/// The monic polynomial `Π_n` of `family`.
pub fn monic_poly(family: &Family, n: usize) -> Result<QPoly> {
    Ok(monic_sequence(family, n)?[n].clone())
}

/// Parameter translation after `k` differentiations: Hermite is fixed,
/// Laguerre shifts `alpha`, Jacobi shifts both.
pub fn shift_parameter(family: &Family, k: usize) -> Family {
    let k = int(k as i64);
    match family.kind {
        FamilyKind::Hermite => family.clone(),
        FamilyKind::Laguerre => Family {
            alpha: &family.alpha + &k,
            ..family.clone()
        },
        FamilyKind::Jacobi => Family {
            kind: FamilyKind::Jacobi,
            alpha: &family.alpha + &k,
            beta: &family.beta + &k,
        },
    }
}

/// Whether `Π_n' = n Π_{n-1}` at the once-shifted parameter, exactly.
pub fn derivative_rule_check(family: &Family, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition("the derivative rule needs n >= 1".into()));
    }
    let lhs = monic_poly(family, n)?.derivative();
    let rhs = monic_poly(&shift_parameter(family, 1), n - 1)?.scale(&int(n as i64));
    Ok(lhs == rhs)
}

/// `A_n^k = n!/(n-k)!`, zero when `k > n`.
pub fn arrangement(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    factorial(n) / factorial(n - k)
}

/// `g_k^{(j)} = A_{k+m-1-j}^{m-1-j} Π_k` at the parameter shifted `m-1-j`
/// times; zero for `k < 0`.
pub fn g_function(family: &Family, m: usize, j: usize, k: i64) -> Result<QPoly> {
    if j >= m {
        return Err(Error::Index(format!("g-function row {j} outside 0..{m}")));
    }
    if k < 0 {
        return Ok(QPoly::zero());
    }
    let shifts = m - 1 - j;
    let k = k as usize;
    let coeff = arrangement((k + shifts) as u64, shifts as u64);
    Ok(monic_poly(&shift_parameter(family, shifts), k)?.scale(&coeff))
}

/// Converts a standard classical polynomial normalization to the monic one:
/// the leading coefficient of `H_n`, `L_n^α` and `P_n^{(α,β)}`.
pub fn standard_leading_coefficient(family: &Family, n: usize) -> Rational {
    match family.kind {
        FamilyKind::Hermite => (0..n).fold(Rational::one(), |acc, _| acc * int(2)),
        FamilyKind::Laguerre => {
            let s = if n.is_multiple_of(2) { int(1) } else { int(-1) };
            s / factorial(n as u64)
        }
        FamilyKind::Jacobi => {
            // Γ(2n+α+β+1) / (2^n n! Γ(n+α+β+1)) = prod_{k=1..n} (n+α+β+k) / (2^n n!)
            let s = &family.alpha + &family.beta;
            let num = (1..=n).fold(Rational::one(), |acc, k| acc * (int((n + k) as i64) + &s));
            num / (factorial(n as u64) * (0..n).fold(Rational::one(), |acc, _| acc * int(2)))
        }
    }
}

/// Parses `hermite`, `laguerre` or `jacobi` with the given parameters.
pub fn family_from_name(name: &str, alpha: Option<Rational>, beta: Option<Rational>) -> Result<Family> {
    match name {
        "hermite" => Ok(Family::hermite()),
        "laguerre" => Family::laguerre(alpha.unwrap_or_else(|| q(0, 1))),
        "jacobi" => Family::jacobi(alpha.unwrap_or_else(|| q(0, 1)), beta.unwrap_or_else(|| q(0, 1))),
        other => Err(Error::Parse(format!("unknown family `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[Rational]) -> QPoly {
        QPoly::new(cs.to_vec())
    }

    #[test]
    fn low_degree_examples() {
        assert_eq!(
            monic_poly(&Family::hermite(), 2).unwrap(),
            poly(&[q(-1, 2), int(0), int(1)])
        );
        let a = q(1, 2);
        let lag = Family::laguerre(a.clone()).unwrap();
        assert_eq!(monic_poly(&lag, 1).unwrap(), poly(&[-(a + int(1)), int(1)]));
        let jac = Family::jacobi(q(3, 4), q(5, 2)).unwrap();
        for f in [Family::hermite(), lag, jac] {
            assert_eq!(monic_poly(&f, 0).unwrap(), QPoly::one());
        }
    }

    #[test]
    fn hermite_matches_physicists_normalization() {
        // H_3 = 8z^3 - 12z, so the monic form is z^3 - 3z/2
        let h3 = monic_poly(&Family::hermite(), 3).unwrap();
        assert_eq!(h3, poly(&[int(0), q(-3, 2), int(0), int(1)]));
        assert_eq!(standard_leading_coefficient(&Family::hermite(), 3), int(8));
    }

    #[test]
    fn laguerre_matches_standard_normalization() {
        // L_2^α = ((α+1)(α+2) - 2(α+2)z + z^2)/2
        let a = q(3, 2);
        let f = Family::laguerre(a.clone()).unwrap();
        let expected = poly(&[(&a + int(1)) * (&a + int(2)), int(-2) * (&a + int(2)), int(1)]);
        assert_eq!(monic_poly(&f, 2).unwrap(), expected);
        assert_eq!(standard_leading_coefficient(&f, 2), q(1, 2));
    }

    #[test]
    fn jacobi_first_degree_and_cancelled_singularity() {
        // P_1^{(α,β)} = (α+1) + (α+β+2)(z-1)/2, monic root (β-α)/(α+β+2)
        let f = Family::jacobi(q(-1, 2), q(1, 2)).unwrap();
        assert_eq!(monic_poly(&f, 1).unwrap(), poly(&[q(-1, 2), int(1)]));
        // α + β = -1 makes the raw q_1 formula 0/0
        let g = Family::jacobi(q(-1, 2), q(-1, 2)).unwrap();
        let chebyshev = monic_poly(&g, 2).unwrap();
        assert_eq!(chebyshev, poly(&[q(-1, 2), int(0), int(1)]));
    }

    #[test]
    fn jacobi_legendre_case() {
        // monic P_2 = z^2 - 1/3
        let f = Family::jacobi(int(0), int(0)).unwrap();
        assert_eq!(monic_poly(&f, 2).unwrap(), poly(&[q(-1, 3), int(0), int(1)]));
        assert_eq!(standard_leading_coefficient(&f, 2), q(3, 2));
    }

    #[test]
    fn parameter_validation() {
        assert!(Family::laguerre(int(-1)).is_err());
        assert!(Family::jacobi(int(0), q(-3, 2)).is_err());
        assert!(Family::jacobi(q(-1, 2), q(-99, 100)).is_ok());
    }

    #[test]
    fn shifts() {
        assert_eq!(shift_parameter(&Family::hermite(), 5), Family::hermite());
        assert_eq!(
            shift_parameter(&Family::laguerre(q(1, 2)).unwrap(), 2),
            Family::laguerre(q(5, 2)).unwrap()
        );
        assert_eq!(
            shift_parameter(&Family::jacobi(int(1), int(2)).unwrap(), 1),
            Family::jacobi(int(2), int(3)).unwrap()
        );
    }

    #[test]
    fn derivative_rule_examples() {
        assert!(derivative_rule_check(&Family::hermite(), 2).unwrap());
        assert!(derivative_rule_check(&Family::laguerre(q(7, 3)).unwrap(), 1).unwrap());
        assert!(derivative_rule_check(&Family::jacobi(int(1), int(1)).unwrap(), 3).unwrap());
    }

    #[test]
    fn g_function_examples() {
        let h = Family::hermite();
        assert_eq!(g_function(&h, 1, 0, 4).unwrap(), monic_poly(&h, 4).unwrap());
        assert_eq!(g_function(&h, 2, 1, 1).unwrap(), QPoly::variable());
        assert_eq!(g_function(&h, 2, 0, 1).unwrap(), QPoly::monomial(int(2), 1));
        assert_eq!(g_function(&h, 3, 0, -1).unwrap(), QPoly::zero());
        assert!(matches!(g_function(&h, 2, 2, 0), Err(Error::Index(_))));
    }

    #[test]
    fn arrangement_numbers() {
        assert_eq!(arrangement(5, 0), int(1));
        assert_eq!(arrangement(5, 2), int(20));
        assert_eq!(arrangement(2, 3), int(0));
    }
}
