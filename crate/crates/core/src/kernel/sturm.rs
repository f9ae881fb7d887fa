//! Exact real-root counting with Sturm sequences over the rationals.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::rational::sign;
use crate::error::{Error, Result};
use crate::{QPoly, Rational};

/// One end of an open interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

/// Open interval `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lower: Endpoint,
    pub upper: Endpoint,
}

impl Interval {
    pub fn new(lower: Endpoint, upper: Endpoint) -> Self {
        Self { lower, upper }
    }

    pub fn real_line() -> Self {
        Self::new(Endpoint::NegInfinity, Endpoint::PosInfinity)
    }

    pub fn finite(a: Rational, b: Rational) -> Self {
        Self::new(Endpoint::Finite(a), Endpoint::Finite(b))
    }
}

/// Result of [`sturm_root_count`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootCount {
    /// Distinct real roots strictly inside the interval.
    pub interior: usize,
    /// The finite lower endpoint is itself a root.
    pub lower_is_root: bool,
    /// The finite upper endpoint is itself a root.
    pub upper_is_root: bool,
}

/// Canonical Sturm sequence `p, p', -rem(p_{k-1}, p_k), ...`.
///
/// Each remainder is rescaled by a positive constant, which keeps the
/// coefficients small without changing any sign pattern.
pub fn sturm_sequence(p: &QPoly) -> Vec<QPoly> {
    let normalize = |f: QPoly| -> QPoly {
        match f.leading_coeff() {
            Some(l) => {
                let s = l.abs().recip();
                f.scale(&s)
            }
            None => f,
        }
    };
    let mut seq = vec![normalize(p.clone())];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(normalize(d));
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2]
            .div_rem(&seq[n - 1])
            .expect("divisor in a Sturm chain is nonzero");
        if r.is_zero() {
            break;
        }
        seq.push(normalize(-r));
    }
    seq
}

fn sign_at(p: &QPoly, at: &Endpoint) -> i32 {
    let lead = p.leading_coeff().map(sign).unwrap_or(0);
    match at {
        Endpoint::PosInfinity => lead,
        Endpoint::NegInfinity => {
            if p.degree().unwrap_or(0).is_multiple_of(2) {
                lead
            } else {
                -lead
            }
        }
        Endpoint::Finite(x) => sign(&p.eval(x)),
    }
}

fn variations(seq: &[QPoly], at: &Endpoint) -> usize {
    let signs: Vec<i32> = seq.iter().map(|f| sign_at(f, at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Removes every factor `(z - a)` from `p`.
fn deflate(p: &QPoly, a: &Rational) -> QPoly {
    let lin = QPoly::new(vec![-a.clone(), Rational::from_integer(1.into())]);
    let mut p = p.clone();
    while p.eval(a).is_zero() && !p.is_zero() {
        p = p.exact_div(&lin).expect("root implies exact linear factor");
    }
    p
}

/// Number of distinct real roots of `p` strictly inside `interval`, and
/// whether the finite endpoints are roots.
pub fn sturm_root_count(p: &QPoly, interval: &Interval) -> Result<RootCount> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("root counting of the zero polynomial".into()));
    }
    if let (Endpoint::Finite(a), Endpoint::Finite(b)) = (&interval.lower, &interval.upper) {
        if a >= b {
            return Err(Error::Domain(format!("empty interval ({a}, {b})")));
        }
    }
    let mut reduced = p.clone();
    let mut lower_is_root = false;
    let mut upper_is_root = false;
    if let Endpoint::Finite(a) = &interval.lower {
        lower_is_root = p.eval(a).is_zero();
        reduced = deflate(&reduced, a);
    }
    if let Endpoint::Finite(b) = &interval.upper {
        upper_is_root = p.eval(b).is_zero();
        reduced = deflate(&reduced, b);
    }
    let seq = sturm_sequence(&reduced);
    let lo = variations(&seq, &interval.lower);
    let hi = variations(&seq, &interval.upper);
    Ok(RootCount {
        interior: lo.saturating_sub(hi),
        lower_is_root,
        upper_is_root,
    })
}

/// Rational intervals, each isolating one distinct real root in `interval`,
/// refined by bisection to width at most `width`.
pub fn isolate_roots(p: &QPoly, interval: &Interval, width: &Rational) -> Result<Vec<(Rational, Rational)>> {
    let count = sturm_root_count(p, interval)?;
    if count.interior == 0 {
        return Ok(Vec::new());
    }
    // Cauchy bound turns infinite endpoints into finite ones.
    let lead = p.leading_coeff().expect("nonzero").abs();
    let bound = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / lead.clone())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
        + Rational::from_integer(1.into());
    let lo = match &interval.lower {
        Endpoint::Finite(a) => a.clone(),
        _ => -bound.clone(),
    };
    let hi = match &interval.upper {
        Endpoint::Finite(b) => b.clone(),
        _ => bound,
    };
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let c = sturm_root_count(p, &Interval::finite(a.clone(), b.clone()))?;
        let n = c.interior;
        if n == 0 {
            continue;
        }
        if n == 1 && &(b.clone() - a.clone()) <= width {
            out.push((a, b));
            continue;
        }
        let mid = (a.clone() + b.clone()) / Rational::from_integer(2.into());
        if p.eval(&mid).is_zero() {
            out.push((mid.clone(), mid.clone()));
        }
        stack.push((mid.clone(), b));
        stack.push((a, mid));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, q};

    fn poly(cs: &[Rational]) -> QPoly {
        QPoly::new(cs.to_vec())
    }

    #[test]
    fn positive_quadratic_has_no_roots() {
        let p = poly(&[q(1, 2), int(0), int(1)]);
        let c = sturm_root_count(&p, &Interval::real_line()).unwrap();
        assert_eq!(c.interior, 0);
    }

    #[test]
    fn single_root_at_origin() {
        let p = poly(&[int(0), int(1)]);
        assert_eq!(sturm_root_count(&p, &Interval::real_line()).unwrap().interior, 1);
    }

    #[test]
    fn cubic_in_window() {
        // z(z-1)(z-2) = z^3 - 3z^2 + 2z
        let p = poly(&[int(0), int(2), int(-3), int(1)]);
        let c = sturm_root_count(&p, &Interval::finite(q(1, 2), q(3, 2))).unwrap();
        assert_eq!(c.interior, 1);
        assert!(!c.lower_is_root && !c.upper_is_root);
    }

    #[test]
    fn boundary_roots_are_flagged_not_counted() {
        let p = poly(&[int(0), int(2), int(-3), int(1)]);
        let c = sturm_root_count(&p, &Interval::finite(int(0), int(2))).unwrap();
        assert_eq!(c.interior, 1);
        assert!(c.lower_is_root && c.upper_is_root);
        let c = sturm_root_count(&p, &Interval::new(Endpoint::Finite(int(0)), Endpoint::PosInfinity)).unwrap();
        assert_eq!(c.interior, 2);
        assert!(c.lower_is_root);
    }

    #[test]
    fn multiple_roots_count_once() {
        // (z-1)^2 (z+1)
        let p = poly(&[int(1), int(-1), int(-1), int(1)]);
        assert_eq!(sturm_root_count(&p, &Interval::real_line()).unwrap().interior, 2);
    }

    #[test]
    fn zero_polynomial_is_degenerate() {
        assert!(matches!(
            sturm_root_count(&QPoly::zero(), &Interval::real_line()),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn isolation_brackets_roots() {
        let p = poly(&[int(0), int(2), int(-3), int(1)]);
        let roots = isolate_roots(&p, &Interval::real_line(), &q(1, 1000)).unwrap();
        assert_eq!(roots.len(), 3);
        for ((a, b), r) in roots.iter().zip([0, 1, 2]) {
            assert!(a <= &int(r) && &int(r) <= b);
        }
    }
}
