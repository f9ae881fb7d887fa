//! The three confining potentials, their Darboux–Crum extensions, and
//! numerical verification of the extended Schrödinger equations.
//!
//! Every eigenfunction is `ψ_n(x) = ψ_0(x) Π_n(z(x))`. Derivatives flow
//! through Taylor jets so residuals are limited only by working precision.

use num_traits::Zero;
use serde::Serialize;

use crate::classical::{monic_sequence, Family, FamilyKind};
use crate::eop::eop_wronskian;
use crate::error::{Error, Result};
use crate::kernel::det::wronskian;
use crate::kernel::jet::{Jet2, JetOps, TaylorJet};
use crate::kernel::rational::{from_f64_approx, int, q, to_f64};
use crate::kernel::real::{eval_qpoly, Real};
use crate::kernel::sturm::{isolate_roots, sturm_root_count};
use crate::partitions::{indices_to_partition, is_adler, Partition, SpectralIndices};
use crate::{QPoly, Rational};

/// A pole is declared when `|W(z)|` falls below this fraction of
/// `Σ |c_k| |z|^k`.
const POLE_RELATIVE: f64 = 1e-40;

/// The variable change `z(x)` and ground-state factor `ψ_0` of a family.
///
/// Hermite: `z = sqrt(ω/2) x`, `ψ_0 = exp(-z²/2)` on the real line.
/// Laguerre: `z = ω x²/2`, `ψ_0 = z^{(α+1/2)/2} e^{-z/2}` on `(0, ∞)`.
/// Jacobi: `z = cos 2x`, `ψ_0 = sin^{α+1/2} x cos^{β+1/2} x` on `(0, π/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    family: Family,
    omega: Rational,
}

impl Chart {
    pub fn new(family: Family, omega: Rational) -> Result<Self> {
        if omega <= Rational::zero() {
            return Err(Error::InvalidParameter(format!("omega = {omega} must be positive")));
        }
        Ok(Self { family, omega })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    fn alpha(&self) -> Rational {
        self.family.alpha().cloned().unwrap_or_else(Rational::zero)
    }

    fn beta(&self) -> Rational {
        self.family.beta().cloned().unwrap_or_else(Rational::zero)
    }

    /// Converts `x` to `R` after checking it lies inside the open domain.
    pub fn check_domain<R: Real>(&self, x: &Rational) -> Result<R> {
        let xr = R::from_rational(x);
        self.check_domain_real(&xr)?;
        Ok(xr)
    }

    pub fn check_domain_real<R: Real>(&self, x: &R) -> Result<()> {
        let inside = match self.family.kind() {
            FamilyKind::Hermite => true,
            FamilyKind::Laguerre => *x > R::zero(),
            FamilyKind::Jacobi => *x > R::zero() && *x < R::pi() / R::from_int(2),
        };
        if inside {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "x = {x} lies outside the {} domain",
                self.family.name()
            )))
        }
    }

    pub fn z<R: Real, J: JetOps<R>>(&self, x: &J) -> J {
        match self.family.kind() {
            FamilyKind::Hermite => {
                let c = R::from_rational(&(&self.omega / int(2))).sqrt();
                x.scale(&c)
            }
            FamilyKind::Laguerre => (x.clone() * x.clone()).scale(&R::from_rational(&(&self.omega / int(2)))),
            FamilyKind::Jacobi => x.scale(&R::from_int(2)).cos(),
        }
    }

    pub fn psi0<R: Real, J: JetOps<R>>(&self, x: &J) -> J {
        let half = q(1, 2);
        match self.family.kind() {
            FamilyKind::Hermite => {
                let z = self.z(x);
                (z.clone() * z).scale(&R::from_rational(&-half)).exp()
            }
            FamilyKind::Laguerre => {
                let z = self.z(x);
                let e = R::from_rational(&((self.alpha() + &half) / int(2)));
                z.powr(&e) * z.scale(&R::from_rational(&-half)).exp()
            }
            FamilyKind::Jacobi => {
                let a = R::from_rational(&(self.alpha() + &half));
                let b = R::from_rational(&(self.beta() + &half));
                x.sin().powr(&a) * x.cos().powr(&b)
            }
        }
    }

    /// Rational sampling window inside the domain: `z ∈ [-4, 4]` for
    /// Hermite, `z ∈ (0, 12)` for Laguerre, `x ∈ [1/50, 31/20]` for Jacobi.
    pub fn sampling_window(&self) -> (Rational, Rational) {
        let w = to_f64(&self.omega);
        match self.family.kind() {
            FamilyKind::Hermite => {
                let l = from_f64_approx(4.0 * (2.0 / w).sqrt());
                (-l.clone(), l)
            }
            FamilyKind::Laguerre => (Rational::zero(), from_f64_approx((24.0 / w).sqrt())),
            FamilyKind::Jacobi => (q(1, 50), q(31, 20)),
        }
    }
}

/// A confining potential with its parameters validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialSpec {
    chart: Chart,
}

impl PotentialSpec {
    /// `ω` is ignored for Jacobi. Laguerre needs `α > 1/2`, Jacobi
    /// `α, β > 1/2`.
    pub fn new(family: Family, omega: Rational) -> Result<Self> {
        let half = q(1, 2);
        let check = |name: &str, v: Option<&Rational>| match v {
            Some(v) if *v <= half => Err(Error::InvalidParameter(format!(
                "{name} = {v} must exceed 1/2 for the {} potential",
                family.name()
            ))),
            _ => Ok(()),
        };
        check("alpha", family.alpha())?;
        check("beta", family.beta())?;
        let omega = if family.kind() == FamilyKind::Jacobi {
            int(1)
        } else {
            omega
        };
        Ok(Self {
            chart: Chart::new(family, omega)?,
        })
    }

    pub fn harmonic(omega: Rational) -> Result<Self> {
        Self::new(Family::hermite(), omega)
    }

    pub fn isotonic(omega: Rational, alpha: Rational) -> Result<Self> {
        Self::new(Family::laguerre(alpha)?, omega)
    }

    pub fn trigonometric(alpha: Rational, beta: Rational) -> Result<Self> {
        Self::new(Family::jacobi(alpha, beta)?, int(1))
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn family(&self) -> &Family {
        &self.chart.family
    }

    pub fn omega(&self) -> &Rational {
        &self.chart.omega
    }
}

/// `V(x)` with ground level zero.
///
/// HO: `ω²x²/4 - ω/2`. IO: `ω²x²/4 + (α²-1/4)/x² - ω(α+1)`.
/// TDPT: `(α²-1/4)/sin²x + (β²-1/4)/cos²x - (α+β+1)²`, pairing `α` with
/// `sin x` as the gauge factor `sin^{α+1/2} x cos^{β+1/2} x` requires.
pub fn potential_value<R: Real>(spec: &PotentialSpec, x: &R) -> Result<R> {
    let chart = &spec.chart;
    chart.check_domain_real(x)?;
    let w = R::from_rational(&chart.omega);
    let quarter = q(1, 4);
    let x2 = x.clone() * x.clone();
    Ok(match chart.family.kind() {
        FamilyKind::Hermite => w.clone() * w.clone() * x2 / R::from_int(4) - w / R::from_int(2),
        FamilyKind::Laguerre => {
            let a = chart.alpha();
            let c = R::from_rational(&(&a * &a - &quarter));
            w.clone() * w.clone() * x2.clone() / R::from_int(4) + c / x2 - w * R::from_rational(&(a + int(1)))
        }
        FamilyKind::Jacobi => {
            let (a, b) = (chart.alpha(), chart.beta());
            let ca = R::from_rational(&(&a * &a - &quarter));
            let cb = R::from_rational(&(&b * &b - &quarter));
            let s = x.sin();
            let c = x.cos();
            let shift = R::from_rational(&((&a + &b + int(1)) * (&a + &b + int(1))));
            ca / (s.clone() * s) + cb / (c.clone() * c) - shift
        }
    })
}

/// `E_n`: `nω`, `2nω`, or `4n(α+β+1+n)`.
pub fn energy(spec: &PotentialSpec, n: usize) -> Rational {
    let nn = int(n as i64);
    let chart = &spec.chart;
    match chart.family.kind() {
        FamilyKind::Hermite => nn * &chart.omega,
        FamilyKind::Laguerre => int(2) * nn * &chart.omega,
        FamilyKind::Jacobi => int(4) * &nn * (chart.alpha() + chart.beta() + int(1) + &nn),
    }
}

/// `(ψ_0, ψ_0', ψ_0'')` at `x`.
pub fn gauge_factor<R: Real>(spec: &PotentialSpec, x: &R) -> Result<Jet2<R>> {
    spec.chart.check_domain_real(x)?;
    Ok(spec.chart.psi0(&Jet2::variable(x.clone())))
}

/// `ψ_n = ψ_0 Π_n(z)` at `x`.
pub fn eigenfunction<R: Real>(spec: &PotentialSpec, n: usize, x: &R) -> Result<Jet2<R>> {
    spec.chart.check_domain_real(x)?;
    let seq = monic_sequence(spec.family(), n)?;
    let xj = Jet2::variable(x.clone());
    Ok(spec.chart.psi0(&xj) * spec.chart.z(&xj).eval_poly(&seq[n]))
}

/// Jets at `x` of order 2: `(z, z', ψ_0)`.
struct LocalJets<R> {
    z: TaylorJet<R>,
    dz: TaylorJet<R>,
    psi0: TaylorJet<R>,
}

fn local_jets<R: Real>(chart: &Chart, x: &R) -> Result<LocalJets<R>> {
    chart.check_domain_real(x)?;
    let x3 = TaylorJet::variable(x.clone(), 3);
    let z3 = chart.z(&x3);
    Ok(LocalJets {
        z: z3.truncate(2),
        dz: z3.differentiate(),
        psi0: chart.psi0(&x3.truncate(2)),
    })
}

/// `W(z)` as a jet, or a pole error when it vanishes at working precision.
fn nonvanishing<R: Real>(w: &QPoly, z: &TaylorJet<R>, x: &R) -> Result<TaylorJet<R>> {
    let value = z.eval_poly(w);
    let zv = z.value().abs();
    let magnitude = w
        .coeffs()
        .iter()
        .rev()
        .fold(R::zero(), |acc, c| acc * zv.clone() + R::from_rational(c).abs());
    if value.value().abs() <= magnitude * R::from_f64(POLE_RELATIVE) {
        return Err(Error::Pole(format!("the Wronskian vanishes at x = {x}")));
    }
    Ok(value)
}

/// A potential extended by the state-deleting chain `N`.
#[derive(Clone, Debug)]
pub struct ExtendedPotential {
    pub base: PotentialSpec,
    pub indices: SpectralIndices,
    pub partition: Partition,
    /// `W_λ(z)`; the constant 1 for the empty chain.
    pub wronskian_poly: QPoly,
}

impl ExtendedPotential {
    pub fn new(base: &PotentialSpec, indices: &SpectralIndices) -> Result<Self> {
        let partition = indices_to_partition(indices);
        let wronskian_poly = eop_wronskian(base.family(), &partition)?.polynomial;
        Ok(Self {
            base: base.clone(),
            indices: indices.clone(),
            partition,
            wronskian_poly,
        })
    }

    fn m(&self) -> usize {
        self.indices.len()
    }

    /// `V(x) - 2 (ln W^{(N)})''` with `W^{(N)} = ψ_0^m (z')^{m(m-1)/2} W_λ(z)`.
    pub fn value<R: Real>(&self, x: &R) -> Result<R> {
        let v = potential_value(&self.base, x)?;
        if self.m() == 0 {
            return Ok(v);
        }
        let LocalJets { z, dz, psi0 } = local_jets(&self.base.chart, x)?;
        let w = nonvanishing(&self.wronskian_poly, &z, x)?;
        let m = self.m() as u32;
        let full = psi0.powi(m) * dz.powi(m * (m - 1) / 2) * w;
        Ok(v - R::from_int(2) * full.to_jet2().log_second_derivative())
    }

    /// `W(Π_{n_1}, ..., Π_{n_m}, Π_μ | z)`; fails when `μ ∈ N`.
    pub fn crum_numerator(&self, mu: usize) -> Result<QPoly> {
        if self.indices.contains(mu) {
            return Err(Error::Precondition(format!(
                "level {mu} is deleted by the chain {}",
                self.indices
            )));
        }
        let top = self.indices.as_slice().iter().copied().chain([mu]).max().unwrap_or(0);
        let seq = monic_sequence(self.base.family(), top)?;
        let fns: Vec<QPoly> = self
            .indices
            .as_slice()
            .iter()
            .chain([&mu])
            .map(|&n| seq[n].clone())
            .collect();
        wronskian(&fns)
    }

    /// `ψ_μ^{(N)}` with its Crum numerator precomputed.
    pub fn state(&self, mu: usize) -> Result<ExtendedState<'_>> {
        Ok(ExtendedState {
            potential: self,
            mu,
            numerator: self.crum_numerator(mu)?,
        })
    }

    pub fn eigenfunction<R: Real>(&self, mu: usize, x: &R) -> Result<Jet2<R>> {
        self.state(mu)?.eval(x)
    }
}

/// Extended eigenstate `ψ_μ^{(N)} = W^{(N,μ)} / W^{(N)}`.
#[derive(Clone, Debug)]
pub struct ExtendedState<'a> {
    potential: &'a ExtendedPotential,
    mu: usize,
    numerator: QPoly,
}

impl ExtendedState<'_> {
    pub fn level(&self) -> usize {
        self.mu
    }

    pub fn energy(&self) -> Rational {
        energy(&self.potential.base, self.mu)
    }

    /// `ψ_0 (z')^m W_{N,μ}(z) / W_N(z)`.
    pub fn eval<R: Real>(&self, x: &R) -> Result<Jet2<R>> {
        let p = self.potential;
        let LocalJets { z, dz, psi0 } = local_jets(&p.base.chart, x)?;
        let den = nonvanishing(&p.wronskian_poly, &z, x)?;
        let num = z.eval_poly(&self.numerator);
        let out = psi0 * dz.powi(p.m() as u32) * num / den;
        Ok(out.to_jet2())
    }

    /// `|ψ'' + (E - V^{(N)}) ψ| / (|ψ''| + |E ψ| + |V^{(N)} ψ| + floor)`.
    pub fn residual<R: Real>(&self, x: &R) -> Result<R> {
        let psi = self.eval(x)?;
        let v = self.potential.value(x)?;
        let e = R::from_rational(&self.energy());
        let lhs = psi.second_derivative.clone() + (e.clone() - v.clone()) * psi.value.clone();
        let scale =
            psi.second_derivative.abs() + (e * psi.value.clone()).abs() + (v * psi.value).abs() + R::from_f64(1e-300);
        Ok(lhs.abs() / scale)
    }
}

pub fn extended_potential<R: Real>(spec: &PotentialSpec, indices: &SpectralIndices, x: &R) -> Result<R> {
    ExtendedPotential::new(spec, indices)?.value(x)
}

pub fn extended_eigenfunction<R: Real>(
    spec: &PotentialSpec,
    indices: &SpectralIndices,
    mu: usize,
    x: &R,
) -> Result<Jet2<R>> {
    ExtendedPotential::new(spec, indices)?.eigenfunction(mu, x)
}

fn eigen_taylor<R: Real>(chart: &Chart, seq: &[QPoly], n: usize, x: &TaylorJet<R>) -> TaylorJet<R> {
    chart.psi0(x) * chart.z(x).eval_poly(&seq[n])
}

/// One Darboux step `φ_μ ← φ_μ' - (φ_ν'/φ_ν) φ_μ`, lowering the jet order by one.
fn darboux_step<R: Real>(seed: &TaylorJet<R>, target: &TaylorJet<R>, x: &R) -> Result<TaylorJet<R>> {
    if seed.value().is_zero() || !seed.value().is_finite() {
        return Err(Error::Pole(format!("the seed vanishes at x = {x}")));
    }
    let order = seed.order() - 1;
    let log_derivative = seed.differentiate() / seed.truncate(order);
    Ok(target.differentiate() - log_derivative * target.truncate(order))
}

/// `ψ_μ^{(ν)} = W(ψ_ν, ψ_μ | x) / ψ_ν` for `μ ≠ ν`; `μ = ν` is routed to
/// [`seed_image`].
pub fn one_step_dbt<R: Real>(spec: &PotentialSpec, nu: usize, mu: usize, x: &R) -> Result<Jet2<R>> {
    if nu == mu {
        return seed_image(spec, nu, x);
    }
    spec.chart.check_domain_real(x)?;
    let seq = monic_sequence(spec.family(), nu.max(mu))?;
    let xj = TaylorJet::variable(x.clone(), 3);
    let seed = eigen_taylor(&spec.chart, &seq, nu, &xj);
    let target = eigen_taylor(&spec.chart, &seq, mu, &xj);
    Ok(darboux_step(&seed, &target, x)?.to_jet2())
}

/// Image of the seed itself, `1/ψ_ν`.
pub fn seed_image<R: Real>(spec: &PotentialSpec, nu: usize, x: &R) -> Result<Jet2<R>> {
    let psi = eigenfunction(spec, nu, x)?;
    if psi.value.is_zero() {
        return Err(Error::Pole(format!("ψ_{nu} vanishes at x = {x}")));
    }
    Ok(Jet2::constant(R::one()) / psi)
}

/// `ψ_μ` carried through the Darboux steps `ν_1, ..., ν_m` in order.
pub fn chain_eigenfunction<R: Real>(
    spec: &PotentialSpec,
    indices: &SpectralIndices,
    mu: usize,
    x: &R,
) -> Result<Jet2<R>> {
    if indices.contains(mu) {
        return Err(Error::Precondition(format!(
            "level {mu} is deleted by the chain {indices}"
        )));
    }
    spec.chart.check_domain_real(x)?;
    let nus = indices.as_slice();
    let m = nus.len();
    let top = nus.iter().copied().chain([mu]).max().unwrap_or(0);
    let seq = monic_sequence(spec.family(), top)?;
    let xj = TaylorJet::variable(x.clone(), m + 2);
    let mut seeds: Vec<TaylorJet<R>> = nus.iter().map(|&n| eigen_taylor(&spec.chart, &seq, n, &xj)).collect();
    let mut target = eigen_taylor(&spec.chart, &seq, mu, &xj);
    for s in 0..m {
        let seed = seeds[s].clone();
        for later in seeds.iter_mut().skip(s + 1) {
            *later = darboux_step(&seed, later, x)?;
        }
        target = darboux_step(&seed, &target, x)?;
    }
    Ok(target.to_jet2())
}

/// Maximum relative residual of the extended Schrödinger equation over the
/// samples.
pub fn schrodinger_residual<R: Real>(
    spec: &PotentialSpec,
    indices: &SpectralIndices,
    mu: usize,
    sample_xs: &[Rational],
) -> Result<R> {
    let ext = ExtendedPotential::new(spec, indices)?;
    let state = ext.state(mu)?;
    let mut worst = R::zero();
    for x in sample_xs {
        let r = state.residual(&spec.chart.check_domain::<R>(x)?)?;
        if !r.is_finite() {
            return Err(Error::Pole(format!("non-finite residual at x = {x}")));
        }
        if r > worst {
            worst = r;
        }
    }
    Ok(worst)
}

/// Adler prediction against the Sturm count of `W_λ` in the open `z`-domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub predicted: bool,
    pub observed: bool,
    pub interior_roots: usize,
    pub lower_boundary_root: bool,
    pub upper_boundary_root: bool,
}

impl Regularity {
    pub fn agrees(&self) -> bool {
        self.predicted == self.observed
    }
}

/// Regularity of the chain `N` for a family, independent of the potential's
/// stricter parameter range.
pub fn classify_family(family: &Family, indices: &SpectralIndices) -> Result<Regularity> {
    let lambda = indices_to_partition(indices);
    let w = eop_wronskian(family, &lambda)?.polynomial;
    let count = sturm_root_count(&w, &family.z_domain())?;
    Ok(Regularity {
        predicted: is_adler(&lambda),
        observed: count.interior == 0,
        interior_roots: count.interior,
        lower_boundary_root: count.lower_is_root,
        upper_boundary_root: count.upper_is_root,
    })
}

pub fn classify_regularity(spec: &PotentialSpec, indices: &SpectralIndices) -> Result<Regularity> {
    classify_family(spec.family(), indices)
}

/// Base-2 van der Corput sequence `1/2, 1/4, 3/4, 1/8, ...`.
fn van_der_corput(mut k: u64) -> Rational {
    let mut num = 0i64;
    let mut den = 1i64;
    while k > 0 {
        num = 2 * num + (k & 1) as i64;
        den *= 2;
        k >>= 1;
    }
    q(num, den)
}

/// `count` deterministic interior points of the sampling window, skipping
/// any within `1e-3` (relative to the window's `z`-extent) of a real root
/// of `w`.
pub fn sample_points(chart: &Chart, w: &QPoly, count: usize) -> Result<Vec<Rational>> {
    let (a, b) = chart.sampling_window();
    let zf = |x: &Rational| chart.z(&Jet2::variable(to_f64(x))).value;
    let zscale = (zf(&b) - zf(&a)).abs();
    let roots: Vec<f64> = if w.degree().unwrap_or(0) == 0 {
        Vec::new()
    } else {
        isolate_roots(w, &chart.family().z_domain(), &q(1, 1 << 20))?
            .into_iter()
            .map(|(lo, hi)| to_f64(&((lo + hi) / int(2))))
            .collect()
    };
    let mut out = Vec::with_capacity(count);
    let mut k = 1u64;
    while out.len() < count {
        if k > 64 * count as u64 + 1024 {
            return Err(Error::Domain("too few pole-free sample points".into()));
        }
        let x = &a + (&b - &a) * van_der_corput(k);
        k += 1;
        let zx = zf(&x);
        if roots.iter().all(|r| (zx - r).abs() >= 1e-3 * zscale) {
            out.push(x);
        }
    }
    Ok(out)
}

/// Levels not deleted by `N`, lowest first.
pub fn surviving_levels(indices: &SpectralIndices, count: usize) -> Vec<usize> {
    (0..).filter(|n| !indices.contains(*n)).take(count).collect()
}

/// Jet-level evaluation of `W_λ(z(x))`, used when reporting where a grid
/// meets a pole.
pub fn wronskian_at<R: Real>(chart: &Chart, w: &QPoly, x: &R) -> Result<R> {
    chart.check_domain_real(x)?;
    let z = chart.z(&Jet2::variable(x.clone())).value;
    Ok(eval_qpoly(w, &z))
}
