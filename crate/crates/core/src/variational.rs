//! Euler operator, action integrals and null-Lagrangian certification.
//!
//! A Lagrangian of arity `N` is a function `Ψ(x, y, Dy)` with `x ∈ R³`,
//! `y ∈ R^N` and `Dy ∈ R^{N×3}` stored flat as `[i * 3 + α]`. Polynomial
//! Lagrangians use the variable layout of [`Vars`].
//!
//! The Euler operator is
//!
//! ```text
//! E_k = ∂²Ψ/∂x^γ∂y^k_γ + ∂²Ψ/∂y^j∂y^k_γ · y^j_γ + ∂²Ψ/∂y^j_β∂y^k_γ · y^j_βγ − ∂Ψ/∂y^k
//! ```
//!
//! so that `Ψ = ½|∇φ|²` yields `+Δφ`.

use std::fmt;
use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{bubble, Jet, Poly, PolyField};
use crate::quadrature::{ensure_exact, integrate_cube, required_order};
use crate::tensor::Vec3;

/// Normalized residual tolerance on the exact polynomial path.
pub const CLOSED_FORM_TOL: f64 = 1e-10;
/// Normalized residual tolerance on the finite-difference path.
pub const FD_TOL: f64 = 1e-6;
/// Relative tolerance on action differences, relative to `max(1, |action|)`.
pub const ACTION_TOL: f64 = 1e-12;

const FD_BASE_STEP: f64 = 1e-4;

/// Variable layout of a polynomial Lagrangian of arity `n`:
/// `x^α` first, then `y^i`, then `y^i_α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vars {
    pub n: usize,
}

impl Vars {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn count(&self) -> usize {
        3 + 4 * self.n
    }

    pub fn x(&self, a: usize) -> usize {
        a
    }

    pub fn y(&self, i: usize) -> usize {
        3 + i
    }

    pub fn p(&self, i: usize, a: usize) -> usize {
        3 + self.n + i * 3 + a
    }

    pub fn x_poly(&self, a: usize) -> Poly {
        Poly::var(self.count(), self.x(a))
    }

    pub fn y_poly(&self, i: usize) -> Poly {
        Poly::var(self.count(), self.y(i))
    }

    pub fn p_poly(&self, i: usize, a: usize) -> Poly {
        Poly::var(self.count(), self.p(i, a))
    }

    /// Packs `(x, y, Dy)` into one argument vector.
    pub fn pack(&self, x: &Vec3, y: &[f64], p: &[f64]) -> Vec<f64> {
        let mut z = Vec::with_capacity(self.count());
        z.extend_from_slice(x);
        z.extend_from_slice(y);
        z.extend_from_slice(p);
        z
    }
}

pub type ScalarFn = dyn Fn(&[f64], &[f64], &[f64]) -> f64 + Send + Sync;
type LocalFn<'a> = dyn Fn(&[f64], &[f64], &[f64]) -> f64 + 'a;

struct PolyLagrangian {
    psi: Poly,
    // ∂Ψ/∂y^k
    d_y: Vec<Poly>,
    // Σ_γ ∂²Ψ/∂x^γ∂y^k_γ
    d_xp: Vec<Poly>,
    // ∂²Ψ/∂y^j∂y^k_γ at [(j * n + k) * 3 + γ]
    d_yp: Vec<Poly>,
    // ∂²Ψ/∂y^j_β∂y^k_γ at [(j * 3 + β) * 3n + k * 3 + γ]
    d_pp: Vec<Poly>,
}

#[derive(Clone)]
enum Kind {
    Polynomial(Arc<PolyLagrangian>),
    Function { f: Arc<ScalarFn>, degree: Option<u32> },
}

/// A Lagrangian density `Ψ(x, y, Dy)`.
#[derive(Clone)]
pub struct LagrangianEvaluator {
    arity: usize,
    kind: Kind,
}

impl fmt::Debug for LagrangianEvaluator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LagrangianEvaluator")
            .field("arity", &self.arity)
            .field("closed_form", &self.is_closed_form())
            .field("degree", &self.degree())
            .finish()
    }
}

impl LagrangianEvaluator {
    /// Exact polynomial Lagrangian in the layout of [`Vars`]; all derivatives
    /// needed by the Euler operator are precomputed.
    pub fn polynomial(arity: usize, psi: Poly) -> Result<Self> {
        let v = Vars::new(arity);
        if psi.nvars() != v.count() {
            return Err(Error::Arity {
                expected: v.count(),
                found: psi.nvars(),
            });
        }
        let d_p: Vec<Poly> = (0..arity)
            .flat_map(|k| (0..3).map(move |g| (k, g)))
            .map(|(k, g)| psi.diff(v.p(k, g)))
            .collect();
        let d_y = (0..arity).map(|k| psi.diff(v.y(k))).collect();
        let d_xp = (0..arity)
            .map(|k| {
                let mut acc = Poly::zero(v.count());
                for g in 0..3 {
                    acc = &acc + &d_p[k * 3 + g].diff(v.x(g));
                }
                acc
            })
            .collect();
        let mut d_yp = Vec::with_capacity(arity * arity * 3);
        for j in 0..arity {
            for k in 0..arity {
                for g in 0..3 {
                    d_yp.push(d_p[k * 3 + g].diff(v.y(j)));
                }
            }
        }
        let mut d_pp = Vec::with_capacity(9 * arity * arity);
        for j in 0..arity {
            for b in 0..3 {
                for kg in &d_p {
                    d_pp.push(kg.diff(v.p(j, b)));
                }
            }
        }
        Ok(Self {
            arity,
            kind: Kind::Polynomial(Arc::new(PolyLagrangian {
                psi,
                d_y,
                d_xp,
                d_yp,
                d_pp,
            })),
        })
    }

    /// Black-box Lagrangian evaluated through finite differences.
    ///
    /// `degree` bounds the total polynomial degree of `Ψ` in all of its
    /// arguments; it is needed only for exact action quadrature.
    pub fn function<F>(arity: usize, degree: Option<u32>, f: F) -> Self
    where
        F: Fn(&[f64], &[f64], &[f64]) -> f64 + Send + Sync + 'static,
    {
        Self {
            arity,
            kind: Kind::Function { f: Arc::new(f), degree },
        }
    }

    /// The same Lagrangian with its closed form hidden, forcing the
    /// finite-difference path.
    pub fn as_black_box(&self) -> Self {
        match &self.kind {
            Kind::Function { .. } => self.clone(),
            Kind::Polynomial(pl) => {
                let pl = Arc::clone(pl);
                let v = Vars::new(self.arity);
                let degree = pl.psi.degree();
                Self::function(self.arity, Some(degree), move |x, y, p| {
                    pl.psi.eval(&v.pack(&[x[0], x[1], x[2]], y, p))
                })
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_closed_form(&self) -> bool {
        matches!(self.kind, Kind::Polynomial(_))
    }

    /// Total degree of `Ψ` in `(x, y, Dy)` when known.
    pub fn degree(&self) -> Option<u32> {
        match &self.kind {
            Kind::Polynomial(pl) => Some(pl.psi.degree()),
            Kind::Function { degree, .. } => *degree,
        }
    }

    /// The polynomial `Ψ`, if this is a closed-form Lagrangian.
    pub fn polynomial_form(&self) -> Option<&Poly> {
        match &self.kind {
            Kind::Polynomial(pl) => Some(&pl.psi),
            Kind::Function { .. } => None,
        }
    }

    pub fn eval(&self, x: &Vec3, y: &[f64], p: &[f64]) -> f64 {
        match &self.kind {
            Kind::Polynomial(pl) => pl.psi.eval(&Vars::new(self.arity).pack(x, y, p)),
            Kind::Function { f, .. } => f(x, y, p),
        }
    }

    /// `Ψ(x, y(x), Dy(x))`.
    pub fn eval_on(&self, y: &PolyField, x: &Vec3) -> f64 {
        let jet = y.jet(x);
        self.eval(x, &jet.value, &jet.grad)
    }

    fn check_field(&self, y: &PolyField) -> Result<()> {
        if y.arity() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                found: y.arity(),
            });
        }
        Ok(())
    }
}

/// Euler operator evaluated at one point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EulerResidual {
    pub values: Vec<f64>,
    /// `1 + max_k max(Σ_γ |T_kγ|, |∂Ψ/∂y^k|) + |Ψ|` where `T_kγ` is the full
    /// second-derivative term of component `k` for direction `γ`.
    pub scale: f64,
}

impl EulerResidual {
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn normalized(&self) -> f64 {
        self.max_abs() / self.scale
    }
}

/// `E_k(Ψ)` along the field `y` at `x`: exact for polynomial Lagrangians,
/// finite differences otherwise.
pub fn euler_residual(l: &LagrangianEvaluator, y: &PolyField, x: &Vec3) -> Result<EulerResidual> {
    l.check_field(y)?;
    let jet = y.jet(x);
    match &l.kind {
        Kind::Polynomial(pl) => Ok(closed_form(pl, l.arity, x, &jet)),
        Kind::Function { f, .. } => fd_residual(f.as_ref(), l.arity, x, &jet),
    }
}

/// Finite-difference evaluation of `E_k(Ψ)` regardless of the Lagrangian kind.
pub fn euler_residual_fd(l: &LagrangianEvaluator, y: &PolyField, x: &Vec3) -> Result<EulerResidual> {
    l.check_field(y)?;
    let jet = y.jet(x);
    match &l.kind {
        Kind::Polynomial(pl) => {
            let v = Vars::new(l.arity);
            let f = |x: &[f64], y: &[f64], p: &[f64]| pl.psi.eval(&v.pack(&[x[0], x[1], x[2]], y, p));
            fd_residual(&f, l.arity, x, &jet)
        }
        Kind::Function { f, .. } => fd_residual(f.as_ref(), l.arity, x, &jet),
    }
}

fn closed_form(pl: &PolyLagrangian, n: usize, x: &Vec3, jet: &Jet) -> EulerResidual {
    let v = Vars::new(n);
    let z = v.pack(x, &jet.value, &jet.grad);
    let ev = |p: &Poly| if p.is_zero() { 0.0 } else { p.eval(&z) };
    let d_yp: Vec<f64> = pl.d_yp.iter().map(ev).collect();
    let d_pp: Vec<f64> = pl.d_pp.iter().map(ev).collect();
    let mut values = vec![0.0; n];
    let mut worst = 0.0f64;
    for (k, value) in values.iter_mut().enumerate() {
        let mut t_abs = 0.0;
        let mut total = 0.0;
        for g in 0..3 {
            let mut t = 0.0;
            for j in 0..n {
                t += d_yp[(j * n + k) * 3 + g] * jet.grad[j * 3 + g];
                for b in 0..3 {
                    t += d_pp[(j * 3 + b) * 3 * n + k * 3 + g] * jet.hess_at(j, b, g);
                }
            }
            t_abs += t.abs();
            total += t;
        }
        let xp = ev(&pl.d_xp[k]);
        let dy = ev(&pl.d_y[k]);
        *value = total + xp - dy;
        worst = worst.max(t_abs + xp.abs()).max(dy.abs());
    }
    EulerResidual {
        values,
        scale: 1.0 + worst + pl.psi.eval(&z).abs(),
    }
}

fn fd_residual(f: &LocalFn, n: usize, x: &Vec3, jet: &Jet) -> Result<EulerResidual> {
    let v = Vars::new(n);
    let z0 = v.pack(x, &jet.value, &jet.grad);
    let eval = |z: &[f64]| -> Result<f64> {
        let r = f(&z[..3], &z[3..3 + n], &z[3 + n..]);
        if r.is_finite() {
            Ok(r)
        } else {
            Err(Error::NonFiniteEvaluation)
        }
    };
    let psi0 = eval(&z0)?;
    let zmax = z0.iter().fold(0.0f64, |m, v| m.max(v.abs()));

    let mut values = vec![0.0; n];
    let mut worst = 0.0f64;
    for (k, value) in values.iter_mut().enumerate() {
        let mut t_abs = 0.0;
        let mut total = 0.0;
        for g in 0..3 {
            // direction of the total x^γ-derivative in (x, y, Dy) space
            let mut d = vec![0.0; v.count()];
            d[v.x(g)] = 1.0;
            for j in 0..n {
                d[v.y(j)] = jet.grad[j * 3 + g];
                for b in 0..3 {
                    d[v.p(j, b)] = jet.hess_at(j, b, g);
                }
            }
            let t = mixed_derivative(&eval, &z0, &d, v.p(k, g), zmax)?;
            t_abs += t.abs();
            total += t;
        }
        let dy = first_derivative(&eval, &z0, v.y(k))?;
        *value = total - dy;
        worst = worst.max(t_abs).max(dy.abs());
    }
    Ok(EulerResidual {
        values,
        scale: 1.0 + worst + psi0.abs(),
    })
}

fn step_for(value: f64) -> Result<f64> {
    let h = FD_BASE_STEP * (1.0 + value.abs());
    if value + 0.25 * h == value {
        return Err(Error::StepUnderflow { value });
    }
    Ok(h)
}

fn richardson(coarse: f64, fine: f64) -> f64 {
    (4.0 * fine - coarse) / 3.0
}

fn first_derivative(eval: &impl Fn(&[f64]) -> Result<f64>, z0: &[f64], var: usize) -> Result<f64> {
    let h = step_for(z0[var])?;
    let mut z = z0.to_vec();
    let mut central = |h: f64| -> Result<f64> {
        z[var] = z0[var] + h;
        let fp = eval(&z)?;
        z[var] = z0[var] - h;
        let fm = eval(&z)?;
        z[var] = z0[var];
        Ok((fp - fm) / (2.0 * h))
    };
    let coarse = central(h)?;
    let fine = central(0.5 * h)?;
    Ok(richardson(coarse, fine))
}

/// `∂_d ∂_{var} Ψ` with `d` an arbitrary direction.
fn mixed_derivative(
    eval: &impl Fn(&[f64]) -> Result<f64>,
    z0: &[f64],
    d: &[f64],
    var: usize,
    zmax: f64,
) -> Result<f64> {
    let dnorm = d.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if dnorm == 0.0 {
        return Ok(0.0);
    }
    let s = step_for(zmax)?;
    let t = step_for(z0[var])?;
    let mut z = z0.to_vec();
    let mut stencil = |s: f64, t: f64| -> Result<f64> {
        let mut acc = 0.0;
        for (a, b, sign) in [(1.0, 1.0, 1.0), (1.0, -1.0, -1.0), (-1.0, 1.0, -1.0), (-1.0, -1.0, 1.0)] {
            for (i, zi) in z.iter_mut().enumerate() {
                *zi = z0[i] + a * s * d[i] / dnorm;
            }
            z[var] += b * t;
            acc += sign * eval(&z)?;
        }
        Ok(acc / (4.0 * s * t))
    };
    let coarse = stencil(s, t)?;
    let fine = stencil(0.5 * s, 0.5 * t)?;
    Ok(dnorm * richardson(coarse, fine))
}

/// Per-variable polynomial degree of `x ↦ Ψ(x, y(x), Dy(x))`.
pub fn action_degree(l: &LagrangianEvaluator, y: &PolyField) -> Result<u32> {
    l.check_field(y)?;
    match &l.kind {
        Kind::Polynomial(pl) => {
            let integrand = compose_along(&pl.psi, l.arity, y);
            Ok((0..3).map(|a| integrand.degree_in(a)).max().unwrap_or(0))
        }
        Kind::Function { degree: Some(d), .. } => {
            let per_var = (0..3).map(|a| y.degree_in(a)).max().unwrap_or(0).max(1);
            Ok(d * per_var)
        }
        Kind::Function { degree: None, .. } => Err(Error::UnknownDegree),
    }
}

fn compose_along(psi: &Poly, n: usize, y: &PolyField) -> Poly {
    let mut images: Vec<Poly> = (0..3).map(|a| Poly::var(3, a)).collect();
    images.extend(y.components().iter().cloned());
    images.extend(y.gradient_polys().iter().cloned());
    debug_assert_eq!(images.len(), Vars::new(n).count());
    psi.compose(&images)
}

/// `∫_{[0,1]³} Ψ(x, y(x), Dy(x)) dv` by Gauss–Legendre quadrature of the
/// given order; fails when the order is not exact for the integrand.
pub fn action_integral(l: &LagrangianEvaluator, y: &PolyField, order: usize) -> Result<f64> {
    let degree = action_degree(l, y)?;
    ensure_exact(order, degree)?;
    Ok(integrate_cube(order, |x| l.eval_on(y, x)))
}

/// `|action(y + b·w) − action(y)|` with `b` the bubble of the unit cube.
pub fn boundary_dependence_test(l: &LagrangianEvaluator, y: &PolyField, w: &PolyField, order: usize) -> Result<f64> {
    let perturbed = y.add(&w.times(&bubble()))?;
    Ok((action_integral(l, &perturbed, order)? - action_integral(l, y, order)?).abs())
}

/// How certification samples test fields.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldKind {
    #[default]
    General,
    /// Components `start..start + 3` are gradients of scalar polynomials.
    CurlFreeBlock { start: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertifyOptions {
    pub fields: FieldKind,
    /// Overrides the path-dependent residual tolerance.
    pub residual_tol: Option<f64>,
    pub action_tol: f64,
    /// Quadrature order; chosen from the degree bound when absent.
    pub order: Option<usize>,
    pub boundary_pairs: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            fields: FieldKind::General,
            residual_tol: None,
            action_tol: ACTION_TOL,
            order: None,
            boundary_pairs: 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NullCertificate {
    pub max_normalized_residual: f64,
    pub trials: usize,
    /// `|Δaction| / max(1, |action(y)|)` for each boundary-dependence pair.
    pub boundary_action_deltas: Vec<f64>,
    pub residual_tolerance: f64,
    pub action_tolerance: f64,
    pub closed_form: bool,
    pub passed: bool,
}

impl fmt::Display for NullCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "residual  max {:.3e} over {} trials (tol {:.1e}, {})",
            self.max_normalized_residual,
            self.trials,
            self.residual_tolerance,
            if self.closed_form {
                "closed form"
            } else {
                "finite differences"
            }
        )?;
        for (i, d) in self.boundary_action_deltas.iter().enumerate() {
            writeln!(f, "action    pair {i}: {d:.3e} (tol {:.1e})", self.action_tolerance)?;
        }
        write!(f, "verdict: {}", if self.passed { "null" } else { "not null" })
    }
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    // splitmix64 finalizer keeps neighbouring streams uncorrelated
    let mut z = seed ^ stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    ChaCha8Rng::seed_from_u64(z ^ (z >> 31))
}

fn random_field(rng: &mut ChaCha8Rng, arity: usize, degree: u32, kind: FieldKind) -> Result<PolyField> {
    let general = PolyField::random(arity, degree, rng);
    match kind {
        FieldKind::General => Ok(general),
        FieldKind::CurlFreeBlock { start } => {
            check_block(arity, start)?;
            let chi = Poly::random(3, degree + 1, rng);
            let grad = PolyField::gradient_of(&chi)?;
            Ok(splice(&general, &grad, start))
        }
    }
}

fn check_block(arity: usize, start: usize) -> Result<()> {
    if start + 3 > arity {
        return Err(Error::Invalid(format!(
            "curl-free block {start}..{} exceeds arity {arity}",
            start + 3
        )));
    }
    Ok(())
}

fn splice(base: &PolyField, block: &PolyField, start: usize) -> PolyField {
    let mut comps = base.components().to_vec();
    comps[start..start + 3].clone_from_slice(block.components());
    PolyField::new(comps).expect("three variables")
}

/// Perturbation vanishing on the boundary; curl-free blocks stay gradients.
fn random_perturbation(rng: &mut ChaCha8Rng, arity: usize, kind: FieldKind) -> Result<PolyField> {
    let b = bubble();
    let general = PolyField::random(arity, 1, rng).times(&b);
    match kind {
        FieldKind::General => Ok(general),
        FieldKind::CurlFreeBlock { start } => {
            check_block(arity, start)?;
            let omega = Poly::random(3, 1, rng);
            let grad = PolyField::gradient_of(&(&(&b * &b) * &omega))?;
            Ok(splice(&general, &grad, start))
        }
    }
}

/// Randomized certification of `E_k(Ψ) ≡ 0`: residuals on `trials` random
/// fields at random points plus action invariance under interior
/// perturbations. Deterministic for a given seed.
pub fn certify_null(
    l: &LagrangianEvaluator,
    trials: usize,
    degree: u32,
    seed: u64,
    options: &CertifyOptions,
) -> Result<NullCertificate> {
    if trials == 0 {
        return Err(Error::Invalid("at least one trial is required".into()));
    }
    if degree < 2 {
        return Err(Error::Invalid("test fields need degree at least 2".into()));
    }
    let residual_tol = options
        .residual_tol
        .unwrap_or(if l.is_closed_form() { CLOSED_FORM_TOL } else { FD_TOL });

    let residuals: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t as u64);
            let y = random_field(&mut rng, l.arity, degree, options.fields)?;
            let x = [
                rng.random_range(0.0..1.0),
                rng.random_range(0.0..1.0),
                rng.random_range(0.0..1.0),
            ];
            Ok(euler_residual(l, &y, &x)?.normalized())
        })
        .collect::<Result<_>>()?;
    let max_normalized_residual = residuals.iter().fold(0.0f64, |m, r| m.max(*r));

    let deltas: Vec<f64> = (0..options.boundary_pairs)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, (trials + t) as u64);
            let y = random_field(&mut rng, l.arity, degree, options.fields)?;
            let w = random_perturbation(&mut rng, l.arity, options.fields)?;
            let perturbed = y.add(&w)?;
            let needed = required_order(action_degree(l, &y)?.max(action_degree(l, &perturbed)?));
            let order = options.order.unwrap_or(needed);
            let base = action_integral(l, &y, order)?;
            let moved = action_integral(l, &perturbed, order)?;
            Ok((moved - base).abs() / base.abs().max(1.0))
        })
        .collect::<Result<_>>()?;

    let passed = max_normalized_residual <= residual_tol && deltas.iter().all(|d| *d <= options.action_tol);
    Ok(NullCertificate {
        max_normalized_residual,
        trials,
        boundary_action_deltas: deltas,
        residual_tolerance: residual_tol,
        action_tolerance: options.action_tol,
        closed_form: l.is_closed_form(),
        passed,
    })
}

/// `Ψ = ½ Σ_ab q(a, b) ℓ_a ℓ_b` for linear forms `ℓ_a` in the layout of [`Vars`].
pub fn quadratic_lagrangian(
    arity: usize,
    lin: &[Poly],
    q: impl Fn(usize, usize) -> f64,
) -> Result<LagrangianEvaluator> {
    let nv = Vars::new(arity).count();
    let mut psi = Poly::zero(nv);
    for (a, la) in lin.iter().enumerate() {
        for (b, lb) in lin.iter().enumerate() {
            let c = q(a, b);
            if c != 0.0 {
                psi = &psi + &(la * lb).scale(0.5 * c);
            }
        }
    }
    LagrangianEvaluator::polynomial(arity, psi)
}

/// `½ Σ_{i,α} (y^i_α)²` over the components `start..start + len`.
pub fn dirichlet(arity: usize, start: usize, len: usize) -> Result<LagrangianEvaluator> {
    let v = Vars::new(arity);
    let mut psi = Poly::zero(v.count());
    for i in start..start + len {
        for a in 0..3 {
            let p = v.p_poly(i, a);
            psi = &psi + &(&p * &p).scale(0.5);
        }
    }
    LagrangianEvaluator::polynomial(arity, psi)
}
