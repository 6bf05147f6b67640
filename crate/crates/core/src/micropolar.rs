//! Linear micropolar (Cosserat) elasticity and its null Lagrangians.
//!
//! Kinematics: `ε_ij = u_i,j + ᴇ_kij φ_k`, `κ_ij = φ_i,j`. Stored energy
//! `½ ε·A[ε] + ½ κ·B[κ] + ε·D[κ]` with `A_ijkl = A_klij`, `B_ijkl = B_klij`.
//! As a Lagrangian the field is `y = (u, φ)` of arity six.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyField, PolyMatrix};
use crate::quadrature::{ensure_exact, integrate_cube_boundary};
use crate::report::{ConditionReport, DEFAULT_TOL_ABS};
use crate::symmetry::{check_symmetry, LinearConstraints, SymmetryClass};
use crate::tensor::{delta, flat, levi_civita, Matrix3, Tensor4, TensorData, Vec3};
use crate::variational::{quadratic_lagrangian, LagrangianEvaluator, Vars};

/// Largest tolerated `|A_ijkl - A_klij|` at construction.
pub const MAJOR_SYMMETRY_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MicropolarModuli {
    a: Tensor4,
    b: Tensor4,
    d: Tensor4,
}

impl MicropolarModuli {
    pub fn new(a: Tensor4, b: Tensor4, d: Tensor4) -> Result<Self> {
        for (what, t) in [("A", &a), ("B", &b), ("D", &d)] {
            if let Some(index) = t.0.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFinite {
                    what: what.into(),
                    index,
                });
            }
        }
        for (what, t) in [("A", &a), ("B", &b)] {
            let violation = check_symmetry(t, &SymmetryClass::major());
            if violation > MAJOR_SYMMETRY_TOL {
                return Err(Error::Symmetry {
                    what: what.into(),
                    relation: "T_klij = T_ijkl".into(),
                    violation,
                });
            }
        }
        Ok(Self { a, b, d })
    }

    pub fn zero() -> Self {
        Self {
            a: Tensor4::zeros(),
            b: Tensor4::zeros(),
            d: Tensor4::zeros(),
        }
    }

    /// Model with only the wryness tensor `B`.
    pub fn wryness_only(b: Tensor4) -> Result<Self> {
        Self::new(Tensor4::zeros(), b, Tensor4::zeros())
    }

    pub fn a(&self) -> &Tensor4 {
        &self.a
    }

    pub fn b(&self) -> &Tensor4 {
        &self.b
    }

    pub fn d(&self) -> &Tensor4 {
        &self.d
    }
}

/// Non-chiral isotropic constants.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsotropicParams {
    pub lambda: f64,
    pub mu: f64,
    pub kappa: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub beta3: f64,
}

impl IsotropicParams {
    /// `A_ijkl = λ δ_ij δ_kl + (μ + κ) δ_ik δ_jl + μ δ_il δ_jk`, likewise `B` with `β₁, β₂, β₃`; `D = 0`.
    pub fn moduli(&self) -> Result<MicropolarModuli> {
        MicropolarModuli::new(
            Tensor4::isotropic(self.lambda, self.mu + self.kappa, self.mu),
            Tensor4::isotropic(self.beta1, self.beta2, self.beta3),
            Tensor4::zeros(),
        )
    }

    pub fn positive_definite(&self) -> bool {
        let Self {
            lambda,
            mu,
            kappa,
            beta1,
            beta2,
            beta3,
        } = *self;
        kappa > 0.0
            && 2.0 * mu + kappa > 0.0
            && 3.0 * lambda + 2.0 * mu + kappa > 0.0
            && 3.0 * beta1 + beta2 + beta3 > 0.0
            && beta2 + beta3 > 0.0
            && beta2 - beta3 > 0.0
    }
}

/// Hemitropic (chiral isotropic) constants.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HemitropicParams {
    pub lambda: f64,
    pub mu: f64,
    pub kappa: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub beta3: f64,
    pub zeta: f64,
    pub nu: f64,
    pub rho: f64,
}

impl HemitropicParams {
    /// Parameters obeying `μ = -λ, κ = λ, β₃ = -β₁, β₂ = 0, ν = -ζ, ρ = ζ`.
    pub fn constrained(lambda: f64, beta1: f64, zeta: f64) -> Self {
        Self {
            lambda,
            mu: -lambda,
            kappa: lambda,
            beta1,
            beta2: 0.0,
            beta3: -beta1,
            zeta,
            nu: -zeta,
            rho: zeta,
        }
    }

    pub fn isotropic_part(&self) -> IsotropicParams {
        IsotropicParams {
            lambda: self.lambda,
            mu: self.mu,
            kappa: self.kappa,
            beta1: self.beta1,
            beta2: self.beta2,
            beta3: self.beta3,
        }
    }

    /// Isotropic `A`, `B` plus `D_ijkl = ζ δ_ij δ_kl + (ν + ρ) δ_ik δ_jl + ν δ_il δ_jk`.
    pub fn moduli(&self) -> Result<MicropolarModuli> {
        let iso = self.isotropic_part().moduli()?;
        MicropolarModuli::new(iso.a, iso.b, Tensor4::isotropic(self.zeta, self.nu + self.rho, self.nu))
    }

    /// The six inequalities listed for the hemitropic case. They carry no
    /// condition coupling `ζ, ν, ρ`, so they are necessary but possibly not
    /// sufficient.
    pub fn positive_definite(&self) -> bool {
        self.isotropic_part().positive_definite()
    }
}

/// Parameter sets with a positive-definiteness test.
pub trait PositiveDefinite {
    fn positive_definite(&self) -> bool;
}

impl PositiveDefinite for IsotropicParams {
    fn positive_definite(&self) -> bool {
        IsotropicParams::positive_definite(self)
    }
}

impl PositiveDefinite for HemitropicParams {
    fn positive_definite(&self) -> bool {
        HemitropicParams::positive_definite(self)
    }
}

pub fn positive_definite(p: &impl PositiveDefinite) -> bool {
    p.positive_definite()
}

/// `(ε, κ)` as exact polynomial fields.
pub fn strain_wryness(u: &PolyField, phi: &PolyField) -> Result<(PolyMatrix, PolyMatrix)> {
    for f in [u, phi] {
        if f.arity() != 3 {
            return Err(Error::Arity {
                expected: 3,
                found: f.arity(),
            });
        }
    }
    let e = levi_civita();
    let ug = u.gradient_polys();
    let pg = phi.gradient_polys();
    let eps = PolyMatrix::from_fn(|i, j| {
        let mut p = ug[i * 3 + j].clone();
        for k in 0..3 {
            let c = e.get(k, i, j);
            if c != 0.0 {
                p = &p + &phi.component(k).scale(c);
            }
        }
        p
    });
    let kap = PolyMatrix::from_fn(|i, j| pg[i * 3 + j].clone());
    Ok((eps, kap))
}

/// `½ ε·A[ε] + ½ κ·B[κ] + ε·D[κ]`.
pub fn energy_density(m: &MicropolarModuli, eps: &Matrix3, kap: &Matrix3) -> f64 {
    0.5 * m.a.bilinear(eps, eps) + 0.5 * m.b.bilinear(kap, kap) + m.d.bilinear(eps, kap)
}

/// `σ = A[ε] + D[κ]`, `μ_ij = B_ijkl κ_kl + D_klij ε_kl`.
pub fn constitutive(m: &MicropolarModuli, eps: &Matrix3, kap: &Matrix3) -> (Matrix3, Matrix3) {
    let sigma = m.a.apply(eps) + m.d.apply(kap);
    let mu = m.b.apply(kap) + m.d.major_transpose().apply(eps);
    (sigma, mu)
}

/// Stress and couple stress as polynomial fields.
pub fn stress_fields(m: &MicropolarModuli, u: &PolyField, phi: &PolyField) -> Result<(PolyMatrix, PolyMatrix)> {
    let (eps, kap) = strain_wryness(u, phi)?;
    let contract = |t: &Tensor4, f: &PolyMatrix, i: usize, j: usize, transpose: bool| {
        let mut acc = Poly::zero(3);
        for k in 0..3 {
            for l in 0..3 {
                let c = if transpose {
                    t.get(k, l, i, j)
                } else {
                    t.get(i, j, k, l)
                };
                if c != 0.0 {
                    acc = &acc + &f.get(k, l).scale(c);
                }
            }
        }
        acc
    };
    let sigma = PolyMatrix::from_fn(|i, j| &contract(&m.a, &eps, i, j, false) + &contract(&m.d, &kap, i, j, false));
    let mu = PolyMatrix::from_fn(|i, j| &contract(&m.b, &kap, i, j, false) + &contract(&m.d, &eps, i, j, true));
    Ok((sigma, mu))
}

/// `(σ_ij,j , μ_ij,j − ᴇ_ijk σ_jk)` at `x`: the equilibrium equations without loads.
pub fn balance_residual(m: &MicropolarModuli, u: &PolyField, phi: &PolyField, x: &Vec3) -> Result<[f64; 6]> {
    let (sigma, mu) = stress_fields(m, u, phi)?;
    let e = levi_civita();
    let ds = sigma.divergence();
    let dm = mu.divergence();
    let s = sigma.eval(x);
    let mut out = [0.0; 6];
    for i in 0..3 {
        out[i] = ds[i].eval(x);
        let mut couple = dm[i].eval(x);
        for j in 0..3 {
            for k in 0..3 {
                couple -= e.get(i, j, k) * s[(j, k)];
            }
        }
        out[3 + i] = couple;
    }
    Ok(out)
}

/// The micropolar energy as a closed-form Lagrangian in `y = (u, φ)`.
pub fn micropolar_lagrangian(m: &MicropolarModuli) -> Result<LagrangianEvaluator> {
    let v = Vars::new(6);
    let e = levi_civita();
    // linear forms: ε_ij at 0..9, κ_ij at 9..18
    let mut lin = Vec::with_capacity(18);
    for i in 0..3 {
        for j in 0..3 {
            let mut p = v.p_poly(i, j);
            for k in 0..3 {
                let c = e.get(k, i, j);
                if c != 0.0 {
                    p = &p + &v.y_poly(3 + k).scale(c);
                }
            }
            lin.push(p);
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            lin.push(v.p_poly(3 + i, j));
        }
    }
    quadratic_lagrangian(6, &lin, |a, b| match (a < 9, b < 9) {
        (true, true) => m.a.0[a * 9 + b],
        (false, false) => m.b.0[(a - 9) * 9 + (b - 9)],
        (true, false) => m.d.0[a * 9 + (b - 9)],
        (false, true) => m.d.0[b * 9 + (a - 9)],
    })
}

/// `T_ijkl + T_ilkj = 0` as equations on the 81 entries.
fn swap24_anti_rows() -> LinearConstraints {
    let mut lc = LinearConstraints::new(81);
    lc.push_class(&SymmetryClass::swap24_anti());
    lc
}

/// `ᴇ_mkl D_klin − ᴇ_ijk D_jkmn = 0` for all free `m, i, n`.
pub fn symm2_rows() -> LinearConstraints {
    let e = levi_civita();
    let mut lc = LinearConstraints::new(81);
    for m in 0..3 {
        for i in 0..3 {
            for n in 0..3 {
                let mut terms = Vec::new();
                for k in 0..3 {
                    for l in 0..3 {
                        terms.push((flat(&[k, l, i, n]), e.get(m, k, l)));
                        terms.push((flat(&[k, l, m, n]), -e.get(i, k, l)));
                    }
                }
                lc.push(terms);
            }
        }
    }
    lc
}

/// `ᴇ_mkl A_ijkl = 0` for all free `i, j, m`.
fn symm3_rows() -> LinearConstraints {
    let e = levi_civita();
    let mut lc = LinearConstraints::new(81);
    for i in 0..3 {
        for j in 0..3 {
            for m in 0..3 {
                lc.push((0..9).map(|kl| (flat(&[i, j, kl / 3, kl % 3]), e.get(m, kl / 3, kl % 3))));
            }
        }
    }
    lc
}

fn distinct_triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..27)
        .map(|p| (p / 9, (p / 3) % 3, p % 3))
        .filter(|&(i, j, k)| i != j && j != k && k != i)
}

fn claim1_b_rows() -> LinearConstraints {
    let mut lc = LinearConstraints::new(81);
    for (i, j, k) in distinct_triples() {
        lc.push([(flat(&[i, j, j, i]), 1.0), (flat(&[i, k, k, i]), 1.0)]);
    }
    lc
}

fn claim1_c_rows() -> LinearConstraints {
    let mut lc = LinearConstraints::new(81);
    for (i, j, k) in distinct_triples() {
        lc.push([
            (flat(&[i, j, j, k]), 1.0),
            (flat(&[k, i, k, k]), -1.0),
            (flat(&[j, i, j, k]), -1.0),
        ]);
    }
    lc
}

/// `{D_ijkl + D_ilkj = 0, ᴇ_mkl D_klin − ᴇ_ijk D_jkmn = 0}`.
pub fn claim1_set1() -> LinearConstraints {
    let mut lc = swap24_anti_rows();
    lc.extend(&symm2_rows());
    lc
}

/// The three-part system (a) antisymmetry, (b) `D_ijji = −D_ikki`,
/// (c) `D_ijjk = D_kikk + D_jijk`, for distinct `i, j, k`.
pub fn claim1_set2() -> LinearConstraints {
    let mut lc = swap24_anti_rows();
    lc.extend(&claim1_b_rows());
    lc.extend(&claim1_c_rows());
    lc
}

/// Equations that pin down an admissible `A`: major symmetry, antisymmetry
/// under `j ↔ l` and `ᴇ_mkl A_ijkl = 0`. Their only solution is `A = 0`.
pub fn stretch_null_system() -> LinearConstraints {
    let mut lc = LinearConstraints::new(81);
    lc.push_class(&SymmetryClass::major());
    lc.extend(&swap24_anti_rows());
    lc.extend(&symm3_rows());
    lc
}

fn norm(t: &Tensor4) -> f64 {
    t.norm_inf()
}

/// The sufficient conditions for a null micropolar energy.
pub fn check_null_sufficient(m: &MicropolarModuli) -> ConditionReport {
    check_null_sufficient_tol(m, DEFAULT_TOL_ABS)
}

pub fn check_null_sufficient_tol(m: &MicropolarModuli, tol: f64) -> ConditionReport {
    let mut r = ConditionReport::new();
    let anti = swap24_anti_rows();
    r.push("A_ijkl + A_ilkj = 0", anti.max_residual(&m.a.0), norm(&m.a), tol);
    r.push("B_ijkl + B_ilkj = 0", anti.max_residual(&m.b.0), norm(&m.b), tol);
    r.push("D_ijkl + D_ilkj = 0", anti.max_residual(&m.d.0), norm(&m.d), tol);
    r.push(
        "ᴇ_mkl D_klin - ᴇ_ijk D_jkmn = 0",
        symm2_rows().max_residual(&m.d.0),
        norm(&m.d),
        tol,
    );
    r.push("ᴇ_mkl A_ijkl = 0", symm3_rows().max_residual(&m.a.0), norm(&m.a), tol);
    r.push("A = 0", norm(&m.a), norm(&m.a), tol);
    r
}

/// Conditions (a), (b), (c) of the three-part system equivalent to
/// `D_ijkl + D_ilkj = 0` together with `ᴇ_mkl D_klin = ᴇ_ijk D_jkmn`.
pub fn check_claim1(d: &Tensor4) -> ConditionReport {
    check_claim1_tol(d, DEFAULT_TOL_ABS)
}

pub fn check_claim1_tol(d: &Tensor4, tol: f64) -> ConditionReport {
    let mut r = ConditionReport::new();
    r.push(
        "(a) D_ijkl = -D_ilkj",
        swap24_anti_rows().max_residual(&d.0),
        norm(d),
        tol,
    );
    r.push("(b) D_ijji = -D_ikki", claim1_b_rows().max_residual(&d.0), norm(d), tol);
    r.push(
        "(c) D_ijjk = D_kikk + D_jijk",
        claim1_c_rows().max_residual(&d.0),
        norm(d),
        tol,
    );
    r
}

/// Whether set 1 and set 2 agree on `d` (both hold or both fail).
pub fn claim1_equivalence_probe(d: &Tensor4) -> bool {
    let tol = DEFAULT_TOL_ABS * norm(d).max(1.0);
    let set1 = claim1_set1().max_residual(&d.0) <= tol;
    let set2 = claim1_set2().max_residual(&d.0) <= tol;
    set1 == set2
}

/// Conditions for a centrosymmetric (`D = 0`) energy of the Rund family.
pub fn check_centrosymmetric_rund(a: &Tensor4, b: &Tensor4) -> ConditionReport {
    check_centrosymmetric_rund_tol(a, b, DEFAULT_TOL_ABS)
}

pub fn check_centrosymmetric_rund_tol(a: &Tensor4, b: &Tensor4, tol: f64) -> ConditionReport {
    let mut r = ConditionReport::new();
    r.push("A = 0", norm(a), norm(a), tol);
    for (name, class) in [
        ("B_ilkj = -B_ijkl", SymmetryClass::swap24_anti()),
        ("B_kjil = -B_ijkl", SymmetryClass::swap13_anti()),
        ("B_ijkl = 0 if i = k or j = l", SymmetryClass::zero_if_ik_or_jl()),
        ("B_ijkl = B_klij", SymmetryClass::major()),
    ] {
        r.push(name, check_symmetry(b, &class), norm(b), tol);
    }
    r
}

/// `B = B̂ + B̃ + B̊`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BSplit {
    pub b_hat: Tensor4,
    pub b_tilde: Tensor4,
    pub b_ring: Tensor4,
}

impl BSplit {
    pub fn reassemble(&self) -> Tensor4 {
        self.b_hat + self.b_tilde + self.b_ring
    }
}

/// `B̂ = ¼(B + B_klij + B_ilkj + B_kjil)`, `B̃ = ¼(B + B_klij − B_ilkj − B_kjil)`,
/// `B̊ = ½(B − B_klij)`.
pub fn split_b(b: &Tensor4) -> BSplit {
    let major = b.major_transpose();
    let s24 = b.swap24();
    let s13 = b.swap13();
    BSplit {
        b_hat: Tensor4::from_fn(|i, j, k, l| {
            0.25 * (b.get(i, j, k, l) + major.get(i, j, k, l) + s24.get(i, j, k, l) + s13.get(i, j, k, l))
        }),
        b_tilde: Tensor4::from_fn(|i, j, k, l| {
            0.25 * (b.get(i, j, k, l) + major.get(i, j, k, l) - s24.get(i, j, k, l) - s13.get(i, j, k, l))
        }),
        b_ring: Tensor4::from_fn(|i, j, k, l| 0.5 * (b.get(i, j, k, l) - major.get(i, j, k, l))),
    }
}

/// The eighteen entries of `B̃` whose vanishing is equivalent to `B̃ = 0`,
/// as 1-based index strings in display order.
pub const CAUCHY_ANALOGUE_ENTRIES: [[usize; 4]; 18] = [
    [2, 2, 3, 3],
    [1, 2, 3, 3],
    [1, 3, 2, 2],
    [2, 1, 3, 3],
    [1, 1, 3, 3],
    [2, 3, 1, 1],
    [3, 1, 2, 2],
    [3, 2, 1, 1],
    [1, 1, 2, 2],
    [3, 1, 1, 3],
    [3, 1, 2, 3],
    [2, 1, 3, 2],
    [3, 2, 1, 3],
    [1, 2, 2, 1],
    [1, 2, 3, 1],
    [2, 3, 1, 2],
    [1, 3, 2, 1],
    [2, 3, 3, 2],
];

/// Value of every Cauchy-analogue entry, labelled `B~_ijkl`.
pub fn cauchy_analogue_table(b_tilde: &Tensor4) -> Vec<(String, f64)> {
    CAUCHY_ANALOGUE_ENTRIES
        .iter()
        .map(|[i, j, k, l]| (format!("B~_{i}{j}{k}{l}"), b_tilde.get(i - 1, j - 1, k - 1, l - 1)))
        .collect()
}

pub fn cauchy_analogue(b_tilde: &Tensor4) -> ConditionReport {
    cauchy_analogue_tol(b_tilde, DEFAULT_TOL_ABS)
}

pub fn cauchy_analogue_tol(b_tilde: &Tensor4, tol: f64) -> ConditionReport {
    let mut r = ConditionReport::new();
    let scale = norm(b_tilde);
    for (name, v) in cauchy_analogue_table(b_tilde) {
        r.push(format!("{name} = 0"), v.abs(), scale, tol);
    }
    r
}

/// Structure of the space of tensors with the symmetries of `B̃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TildeStructure {
    /// Entries forced to vanish (`i = k` or `j = l`).
    pub zero_entries: usize,
    /// Remaining entries counted up to the sign pairing `B̃_ilkj = −B̃_ijkl`.
    pub independent_entries: usize,
    /// Dimension of the solution space of all tilde relations.
    pub dimension: usize,
}

pub fn tilde_structure() -> TildeStructure {
    let class = SymmetryClass::tilde();
    let zero_entries = class.structural_zero_count();
    let mut lc = LinearConstraints::new(81);
    lc.push_class(&class);
    TildeStructure {
        zero_entries,
        independent_entries: (81 - zero_entries) / 2,
        dimension: lc.projector().rank(),
    }
}

/// `½ ∮ B̃_ijkl φ_i,j φ_k n_l dσ` over the boundary of the unit cube.
pub fn surface_potential(b_tilde: &Tensor4, phi: &PolyField, order: usize) -> Result<f64> {
    if phi.arity() != 3 {
        return Err(Error::Arity {
            expected: 3,
            found: phi.arity(),
        });
    }
    let degree = (0..3).map(|a| phi.degree_in(a)).max().unwrap_or(0);
    ensure_exact(order, 2 * degree)?;
    Ok(0.5
        * integrate_cube_boundary(order, |x, n| {
            let jet = phi.jet(x);
            let mut s = 0.0;
            for pos in 0..81 {
                let c = b_tilde.0[pos];
                if c == 0.0 {
                    continue;
                }
                let (i, j, k, l) = (pos / 27, (pos / 9) % 3, (pos / 3) % 3, pos % 3);
                s += c * jet.grad[i * 3 + j] * jet.value[k] * n[l];
            }
            s
        }))
}

/// `C₀ [(tr κ)² − κ_ij κ_ji]`.
pub fn null_lagrangian_iso(c0: f64, kap: &Matrix3) -> f64 {
    let tr = kap.trace();
    c0 * (tr * tr - kap.dot_transpose())
}

/// Wryness tensor with `½ κ·B[κ] = C₀ [(tr κ)² − κ_ij κ_ji]`.
pub fn iso_null_b(c0: f64) -> Tensor4 {
    Tensor4::isotropic(2.0 * c0, 0.0, -2.0 * c0)
}

/// Closed-form Lagrangian of [`null_lagrangian_iso`] in `y = (u, φ)`.
pub fn iso_null_lagrangian(c0: f64) -> Result<LagrangianEvaluator> {
    micropolar_lagrangian(&MicropolarModuli::wryness_only(iso_null_b(c0))?)
}

/// Coefficients left after imposing the hemitropic null constraints.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HemitropicReduction {
    pub lambda_eff: f64,
    pub beta1_eff: f64,
    pub zeta_eff: f64,
}

/// Constraint chain for a hemitropic null Lagrangian followed by the final
/// requirement `λ = ζ = 0`.
pub fn hemitropic_null_family(p: &HemitropicParams) -> (ConditionReport, HemitropicReduction) {
    hemitropic_null_family_tol(p, DEFAULT_TOL_ABS)
}

pub fn hemitropic_null_family_tol(p: &HemitropicParams, tol: f64) -> (ConditionReport, HemitropicReduction) {
    let scale = [p.lambda, p.mu, p.kappa, p.beta1, p.beta2, p.beta3, p.zeta, p.nu, p.rho]
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()));
    let mut r = ConditionReport::new();
    for (name, v) in [
        ("mu + lambda = 0", p.mu + p.lambda),
        ("mu + kappa = 0", p.mu + p.kappa),
        ("beta3 + beta1 = 0", p.beta3 + p.beta1),
        ("beta2 = 0", p.beta2),
        ("nu + zeta = 0", p.nu + p.zeta),
        ("nu + rho = 0", p.nu + p.rho),
        ("lambda = 0", p.lambda),
        ("zeta = 0", p.zeta),
    ] {
        r.push(name, v.abs(), scale, tol);
    }
    (
        r,
        HemitropicReduction {
            lambda_eff: p.lambda,
            beta1_eff: p.beta1,
            zeta_eff: p.zeta,
        },
    )
}

/// `δ_ij δ_kl − δ_il δ_jk`, the form shared by every reduced hemitropic tensor.
pub fn trace_minus_transpose() -> Tensor4 {
    Tensor4::from_fn(|i, j, k, l| delta(i, j) * delta(k, l) - delta(i, l) * delta(j, k))
}
