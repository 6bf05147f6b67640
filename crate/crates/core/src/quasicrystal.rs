//! Phonon–phason elasticity of quasicrystals (three phason components).
//!
//! Distortions `γ = ∇uᵖ`, `κ = ∇uˢ`; energy `½ γ·C[γ] + ½ κ·E[κ] + γ·D[κ]`.
//! As a Lagrangian the field is `y = (uᵖ, uˢ)` of arity six.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::PolyField;
use crate::report::{ConditionReport, DEFAULT_TOL_ABS};
use crate::symmetry::{check_symmetry, LinearConstraints, SymmetryClass};
use crate::tensor::{flat, unflat, Matrix3, Tensor4, TensorData, Vec3};
use crate::variational::{quadratic_lagrangian, LagrangianEvaluator, Vars};

/// Largest tolerated violation of the constructor symmetries.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// `C_ijkl = C_klij = C_ijlk = C_jikl`.
pub fn phonon_class() -> SymmetryClass {
    SymmetryClass::all_of(
        "PHONON",
        &[
            SymmetryClass::major(),
            SymmetryClass::minor_right(),
            SymmetryClass::minor_left(),
        ],
    )
}

/// `D_ijkl = D_jikl`.
pub fn coupling_class() -> SymmetryClass {
    SymmetryClass::all_of("COUPLING", &[SymmetryClass::minor_left()])
}

/// `E_ijkl = E_klij`.
pub fn phason_class() -> SymmetryClass {
    SymmetryClass::all_of("PHASON", &[SymmetryClass::major()])
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QcModuli {
    c: Tensor4,
    d: Tensor4,
    e: Tensor4,
}

fn validate(what: &str, t: &Tensor4, class: &SymmetryClass) -> Result<()> {
    if let Some(index) = t.0.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            what: what.into(),
            index,
        });
    }
    for (rel, violation) in class.relations.iter().zip(class.violations(t)) {
        if violation > SYMMETRY_TOL {
            return Err(Error::Symmetry {
                what: what.into(),
                relation: rel.to_string(),
                violation,
            });
        }
    }
    Ok(())
}

impl QcModuli {
    pub fn new(c: Tensor4, d: Tensor4, e: Tensor4) -> Result<Self> {
        validate("C", &c, &phonon_class())?;
        validate("D", &d, &coupling_class())?;
        validate("E", &e, &phason_class())?;
        Ok(Self { c, d, e })
    }

    pub fn zero() -> Self {
        Self {
            c: Tensor4::zeros(),
            d: Tensor4::zeros(),
            e: Tensor4::zeros(),
        }
    }

    /// Model with only the phason tensor.
    pub fn phason_only(e: Tensor4) -> Result<Self> {
        Self::new(Tensor4::zeros(), Tensor4::zeros(), e)
    }

    pub fn c(&self) -> &Tensor4 {
        &self.c
    }

    pub fn d(&self) -> &Tensor4 {
        &self.d
    }

    pub fn e(&self) -> &Tensor4 {
        &self.e
    }
}

/// `½ γ·C[γ] + ½ κ·E[κ] + γ·D[κ]`.
pub fn qc_energy(m: &QcModuli, gamma: &Matrix3, kappa: &Matrix3) -> f64 {
    0.5 * m.c.bilinear(gamma, gamma) + 0.5 * m.e.bilinear(kappa, kappa) + m.d.bilinear(gamma, kappa)
}

/// `σᵖ = C[γ] + D[κ]`, `σˢ_ij = D_klij γ_kl + E_ijkl κ_kl`.
pub fn qc_constitutive(m: &QcModuli, gamma: &Matrix3, kappa: &Matrix3) -> (Matrix3, Matrix3) {
    (
        m.c.apply(gamma) + m.d.apply(kappa),
        m.d.major_transpose().apply(gamma) + m.e.apply(kappa),
    )
}

/// Left-hand sides of the equilibrium equations with body forces:
/// `C_ijkl uᵖ_k,lj + D_ijkl uˢ_k,lj + fᵖ_i` and
/// `D_klij uᵖ_k,lj + E_ijkl uˢ_k,lj + fˢ_i`.
pub fn qc_equilibrium_residual(
    m: &QcModuli,
    u_p: &PolyField,
    u_s: &PolyField,
    f_p: &PolyField,
    f_s: &PolyField,
    x: &Vec3,
) -> Result<(Vec3, Vec3)> {
    for f in [u_p, u_s, f_p, f_s] {
        if f.arity() != 3 {
            return Err(Error::Arity {
                expected: 3,
                found: f.arity(),
            });
        }
    }
    let jp = u_p.jet(x);
    let js = u_s.jet(x);
    let fp = f_p.eval(x);
    let fs = f_s.eval(x);
    let mut rp = [0.0; 3];
    let mut rs = [0.0; 3];
    for i in 0..3 {
        let mut a = fp[i];
        let mut b = fs[i];
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    let hp = jp.hess_at(k, l, j);
                    let hs = js.hess_at(k, l, j);
                    a += m.c.get(i, j, k, l) * hp + m.d.get(i, j, k, l) * hs;
                    b += m.d.get(k, l, i, j) * hp + m.e.get(i, j, k, l) * hs;
                }
            }
        }
        rp[i] = a;
        rs[i] = b;
    }
    Ok((rp, rs))
}

/// The symmetry class every admissible phason tensor of a null energy obeys.
pub fn admissible_phason_class() -> SymmetryClass {
    SymmetryClass::tilde()
}

/// Conditions for the energy to be a null Lagrangian of the Rund family.
pub fn check_qc_null(m: &QcModuli) -> ConditionReport {
    check_qc_null_tol(m, DEFAULT_TOL_ABS)
}

pub fn check_qc_null_tol(m: &QcModuli, tol: f64) -> ConditionReport {
    let mut r = ConditionReport::new();
    r.push("C = 0", m.c.norm_inf(), m.c.norm_inf(), tol);
    r.push("D = 0", m.d.norm_inf(), m.d.norm_inf(), tol);
    let scale = m.e.norm_inf();
    for (name, class) in [
        ("E_ijkl = E_klij", SymmetryClass::major()),
        ("E_ijkl = -E_kjil", SymmetryClass::swap13_anti()),
        ("E_ijkl = -E_ilkj", SymmetryClass::swap24_anti()),
        ("E_ijkl = 0 if i = k or j = l", SymmetryClass::zero_if_ik_or_jl()),
    ] {
        r.push(name, check_symmetry(&m.e, &class), scale, tol);
    }
    r
}

/// Phason tensor generated from seed entries (0-based indices) by closing
/// under the admissible symmetry class. Seeds that force one entry to two
/// different values are rejected.
pub fn admissible_phason_from_seeds(seeds: &[([usize; 4], f64)]) -> Result<Tensor4> {
    let class = admissible_phason_class();
    let mut assigned: BTreeMap<usize, f64> = BTreeMap::new();
    for (idx, value) in seeds {
        if idx.iter().any(|&i| i > 2) {
            return Err(Error::Invalid(format!("seed index {idx:?} out of range")));
        }
        if !value.is_finite() {
            return Err(Error::NonFinite {
                what: "seed".into(),
                index: flat(idx),
            });
        }
        let orbit = class.orbit(idx);
        let forced_zero = orbit
            .iter()
            .any(|(image, s)| class.zero_predicate(image) || (image.as_slice() == idx.as_slice() && *s < 0.0));
        for (image, s) in &orbit {
            let target = if forced_zero { 0.0 } else { s * value };
            let pos = flat(image);
            if forced_zero && *value != 0.0 {
                return Err(Error::SeedConflict {
                    index: idx.to_vec(),
                    first: *value,
                    second: 0.0,
                });
            }
            match assigned.get(&pos) {
                Some(&prev) if prev != target => {
                    return Err(Error::SeedConflict {
                        index: unflat(pos, 4),
                        first: prev,
                        second: target,
                    });
                }
                _ => {
                    assigned.insert(pos, target);
                }
            }
        }
    }
    let mut e = Tensor4::zeros();
    for (pos, v) in assigned {
        e.0[pos] = v;
    }
    Ok(e)
}

/// `(C-Sym)` for `C` together with `C_ijkl = -C_kjil`; only `C = 0` solves it.
pub fn phonon_null_system() -> LinearConstraints {
    let mut lc = LinearConstraints::new(81);
    lc.push_class(&phonon_class());
    lc.push_class(&SymmetryClass::swap13_anti());
    lc
}

/// `D_ijkl = D_jikl` with the coupling conditions read off the determinant
/// comparison (major symmetry, both antisymmetries, zero if `j = l`); only
/// `D = 0` solves it.
pub fn coupling_null_system() -> LinearConstraints {
    let mut lc = LinearConstraints::new(81);
    lc.push_class(&coupling_class());
    lc.push_class(&SymmetryClass::major());
    lc.push_class(&SymmetryClass::swap13_anti());
    lc.push_class(&SymmetryClass::swap24_anti());
    lc.push_class(&SymmetryClass::zero_if_jl());
    lc
}

/// The energy as a closed-form Lagrangian in `y = (uᵖ, uˢ)`.
pub fn qc_lagrangian(m: &QcModuli) -> Result<LagrangianEvaluator> {
    let v = Vars::new(6);
    let lin: Vec<_> = (0..18).map(|a| v.p_poly(a / 3, a % 3)).collect();
    quadratic_lagrangian(6, &lin, |a, b| match (a < 9, b < 9) {
        (true, true) => m.c.0[a * 9 + b],
        (false, false) => m.e.0[(a - 9) * 9 + (b - 9)],
        (true, false) => m.d.0[a * 9 + (b - 9)],
        (false, true) => m.d.0[b * 9 + (a - 9)],
    })
}
