//! Linear electro-magneto-elasticity.
//!
//! Enthalpy `H = ½ Cε:ε − ½ Ee·e − ½ Bh·h − Pε·e − Qε·h − Ae·h` with
//! `e = −∇φ`, `h = −∇ψ` and `ε = ∇u`. Rank-3 couplings contract as
//! `(Pε)_k = P_kij ε_ij` and `(Pᵀe)_ij = P_kij e_k`. As a Lagrangian the
//! field is `y = (u, φ, ψ)` of arity five.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{ConditionReport, DEFAULT_TOL_ABS};
use crate::symmetry::{LinearConstraints, Relation, SymmetryClass};
use crate::tensor::{Matrix3, Tensor3, Tensor4, TensorData, Vec3};
use crate::variational::{quadratic_lagrangian, LagrangianEvaluator, Vars};

/// Largest tolerated violation of the constructor symmetries.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// `C_ijkl = C_jikl = C_klij`.
pub fn elastic_class() -> SymmetryClass {
    SymmetryClass::all_of("EM_ELASTIC", &[SymmetryClass::minor_left(), SymmetryClass::major()])
}

/// `P_kij = P_kji`.
pub fn piezo_class() -> SymmetryClass {
    SymmetryClass::new(
        "PIEZO",
        3,
        vec![Relation::Permutation {
            perm: vec![0, 2, 1],
            sign: 1.0,
        }],
    )
}

/// `P_kij = −P_jik` and `P_kij = 0` if `j = k`.
pub fn piezo_null_class() -> SymmetryClass {
    SymmetryClass::new(
        "PIEZO_NULL",
        3,
        vec![
            Relation::Permutation {
                perm: vec![2, 1, 0],
                sign: -1.0,
            },
            Relation::ZeroIf { pairs: vec![(0, 2)] },
        ],
    )
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EmModuli {
    c: Tensor4,
    p: Tensor3,
    q: Tensor3,
    ediel: Matrix3,
    bperm: Matrix3,
    acpl: Matrix3,
}

fn check_finite(what: &str, data: &[f64]) -> Result<()> {
    match data.iter().position(|v| !v.is_finite()) {
        Some(index) => Err(Error::NonFinite {
            what: what.into(),
            index,
        }),
        None => Ok(()),
    }
}

fn check_class(what: &str, t: &dyn TensorData, class: &SymmetryClass) -> Result<()> {
    check_finite(what, t.as_slice())?;
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

fn check_symmetric_matrix(what: &str, m: &Matrix3) -> Result<()> {
    check_finite(what, m.as_slice())?;
    let violation = (*m - m.transpose()).norm_inf();
    if violation > SYMMETRY_TOL {
        return Err(Error::Symmetry {
            what: what.into(),
            relation: "M_ji = M_ij".into(),
            violation,
        });
    }
    Ok(())
}

impl EmModuli {
    pub fn new(c: Tensor4, p: Tensor3, q: Tensor3, ediel: Matrix3, bperm: Matrix3, acpl: Matrix3) -> Result<Self> {
        check_class("C", &c, &elastic_class())?;
        check_class("P", &p, &piezo_class())?;
        check_class("Q", &q, &piezo_class())?;
        check_symmetric_matrix("Ediel", &ediel)?;
        check_symmetric_matrix("Bperm", &bperm)?;
        check_symmetric_matrix("Acpl", &acpl)?;
        Ok(Self {
            c,
            p,
            q,
            ediel,
            bperm,
            acpl,
        })
    }

    pub fn zero() -> Self {
        Self {
            c: Tensor4::zeros(),
            p: Tensor3::zeros(),
            q: Tensor3::zeros(),
            ediel: Matrix3::zeros(),
            bperm: Matrix3::zeros(),
            acpl: Matrix3::zeros(),
        }
    }

    pub fn c(&self) -> &Tensor4 {
        &self.c
    }

    pub fn p(&self) -> &Tensor3 {
        &self.p
    }

    pub fn q(&self) -> &Tensor3 {
        &self.q
    }

    pub fn ediel(&self) -> &Matrix3 {
        &self.ediel
    }

    pub fn bperm(&self) -> &Matrix3 {
        &self.bperm
    }

    pub fn acpl(&self) -> &Matrix3 {
        &self.acpl
    }

    pub fn with_c(self, c: Tensor4) -> Result<Self> {
        Self::new(c, self.p, self.q, self.ediel, self.bperm, self.acpl)
    }

    pub fn with_p(self, p: Tensor3) -> Result<Self> {
        Self::new(self.c, p, self.q, self.ediel, self.bperm, self.acpl)
    }

    pub fn with_q(self, q: Tensor3) -> Result<Self> {
        Self::new(self.c, self.p, q, self.ediel, self.bperm, self.acpl)
    }

    pub fn with_ediel(self, ediel: Matrix3) -> Result<Self> {
        Self::new(self.c, self.p, self.q, ediel, self.bperm, self.acpl)
    }

    pub fn with_bperm(self, bperm: Matrix3) -> Result<Self> {
        Self::new(self.c, self.p, self.q, self.ediel, bperm, self.acpl)
    }

    pub fn with_acpl(self, acpl: Matrix3) -> Result<Self> {
        Self::new(self.c, self.p, self.q, self.ediel, self.bperm, acpl)
    }
}

fn quad(m: &Matrix3, a: &Vec3, b: &Vec3) -> f64 {
    let mb = m.mul_vec(*b);
    a.iter().zip(mb).map(|(x, y)| x * y).sum()
}

fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `½ Cε:ε − ½ Ee·e − ½ Bh·h − Pε·e − Qε·h − Ae·h`.
pub fn em_enthalpy(m: &EmModuli, eps: &Matrix3, e: &Vec3, h: &Vec3) -> f64 {
    0.5 * m.c.bilinear(eps, eps)
        - 0.5 * quad(&m.ediel, e, e)
        - 0.5 * quad(&m.bperm, h, h)
        - dot(&m.p.contract_last2(eps), e)
        - dot(&m.q.contract_last2(eps), h)
        - quad(&m.acpl, e, h)
}

/// `σ = Cε − Pᵀe − Qᵀh`, `d = Pε + Ee + Ah`, `b = Qε + Ae + Bh`.
pub fn em_constitutive(m: &EmModuli, eps: &Matrix3, e: &Vec3, h: &Vec3) -> (Matrix3, Vec3, Vec3) {
    let sigma = m.c.apply(eps) - m.p.adjoint_apply(*e) - m.q.adjoint_apply(*h);
    let add = |a: Vec3, b: Vec3, c: Vec3| -> Vec3 { std::array::from_fn(|i| a[i] + b[i] + c[i]) };
    let d = add(m.p.contract_last2(eps), m.ediel.mul_vec(*e), m.acpl.mul_vec(*h));
    let b = add(m.q.contract_last2(eps), m.acpl.mul_vec(*e), m.bperm.mul_vec(*h));
    (sigma, d, b)
}

/// Conditions for a null enthalpy of the Rund family; with the constructor
/// symmetries they hold only for the zero model.
pub fn check_em_null(m: &EmModuli) -> ConditionReport {
    check_em_null_tol(m, DEFAULT_TOL_ABS)
}

pub fn check_em_null_tol(m: &EmModuli, tol: f64) -> ConditionReport {
    let mut r = ConditionReport::new();
    r.push("C = 0", m.c.norm_inf(), m.c.norm_inf(), tol);
    r.push("Ediel = 0", m.ediel.norm_inf(), m.ediel.norm_inf(), tol);
    r.push("Bperm = 0", m.bperm.norm_inf(), m.bperm.norm_inf(), tol);
    let null = piezo_null_class();
    for (name, t) in [("P", &m.p), ("Q", &m.q)] {
        let v = null.violations(t);
        r.push(format!("{name}_kij = -{name}_jik"), v[0], t.norm_inf(), tol);
        r.push(format!("{name}_kij = 0 if j = k"), v[1], t.norm_inf(), tol);
    }
    let anti = (m.acpl + m.acpl.transpose()).norm_inf();
    r.push("Acpl_ij = -Acpl_ji", anti, m.acpl.norm_inf(), tol);
    r
}

/// Equation systems whose only solutions are zero moduli: constructor
/// symmetries plus the determinant conditions, one per modulus, in the order
/// `C, P, Q, Ediel, Bperm, Acpl`.
pub fn em_null_systems() -> [(&'static str, LinearConstraints); 6] {
    let mut c = LinearConstraints::new(81);
    c.push_class(&elastic_class());
    c.push_class(&SymmetryClass::swap24_anti());
    c.push_class(&SymmetryClass::swap13_anti());
    let piezo = || {
        let mut lc = LinearConstraints::new(27);
        lc.push_class(&piezo_class());
        lc.push_class(&piezo_null_class());
        lc
    };
    // symmetric, and antisymmetric as a 2x2 determinant in (α, β)
    let sym_anti = || {
        let mut lc = LinearConstraints::new(9);
        for i in 0..3 {
            for j in 0..3 {
                lc.push([(i * 3 + j, 1.0), (j * 3 + i, -1.0)]);
                lc.push([(i * 3 + j, 1.0), (j * 3 + i, 1.0)]);
            }
        }
        lc
    };
    [
        ("C", c),
        ("P", piezo()),
        ("Q", piezo()),
        ("Ediel", sym_anti()),
        ("Bperm", sym_anti()),
        ("Acpl", sym_anti()),
    ]
}

/// Which potential the piezomagnetic term couples to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PiezomagneticCoupling {
    /// `Qε·h`: `Q` couples strain to the magnetic potential.
    #[default]
    MagneticPotential,
    /// `Q_kij φ_,k u_i,j` read literally from the doubled-enthalpy form:
    /// `Q` couples to the electric potential. For audits only.
    ElectricPotentialLiteral,
}

/// The enthalpy as a closed-form Lagrangian in `y = (u, φ, ψ)`.
pub fn em_lagrangian(m: &EmModuli, coupling: PiezomagneticCoupling) -> Result<LagrangianEvaluator> {
    let v = Vars::new(5);
    // ∇u at 0..9, ∇φ at 9..12, ∇ψ at 12..15
    let lin: Vec<_> = (0..15).map(|a| v.p_poly(a / 3, a % 3)).collect();
    let qphi = coupling == PiezomagneticCoupling::ElectricPotentialLiteral;
    let q = |a: usize, b: usize| -> f64 {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        match (a, b) {
            (a, b) if b < 9 => m.c.0[a * 9 + b],
            (a, b) if a < 9 && b < 12 => {
                let (i, j, k) = (a / 3, a % 3, b - 9);
                m.p.get(k, i, j) + if qphi { m.q.get(k, i, j) } else { 0.0 }
            }
            (a, b) if a < 9 => {
                let (i, j, k) = (a / 3, a % 3, b - 12);
                if qphi {
                    0.0
                } else {
                    m.q.get(k, i, j)
                }
            }
            (a, b) if b < 12 => -m.ediel[(a - 9, b - 9)],
            (a, b) if a < 12 => -m.acpl[(a - 9, b - 12)],
            (a, b) => -m.bperm[(a - 12, b - 12)],
        }
    };
    quadratic_lagrangian(5, &lin, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn random_model(r: &mut ChaCha8Rng) -> EmModuli {
        let c = Tensor4::from_slice(&elastic_class().project(&Tensor4::random(r).0)).unwrap();
        let p = Tensor3::from_slice(&piezo_class().project(&Tensor3::random(r).0)).unwrap();
        let q = Tensor3::from_slice(&piezo_class().project(&Tensor3::random(r).0)).unwrap();
        let sym = |m: Matrix3| m.sym();
        EmModuli::new(
            c,
            p,
            q,
            sym(Matrix3::random(r)),
            sym(Matrix3::random(r)),
            sym(Matrix3::random(r)),
        )
        .unwrap()
    }

    #[test]
    fn enthalpy_examples() {
        let e1 = [1.0, 0.0, 0.0];
        assert_eq!(em_enthalpy(&EmModuli::zero(), &Matrix3::identity(), &e1, &e1), 0.0);
        let m = EmModuli::zero().with_ediel(Matrix3::identity()).unwrap();
        assert_eq!(em_enthalpy(&m, &Matrix3::zeros(), &e1, &[0.0; 3]), -0.5);
        let m = EmModuli::zero().with_acpl(Matrix3::identity()).unwrap();
        assert_eq!(em_enthalpy(&m, &Matrix3::zeros(), &e1, &e1), -1.0);
    }

    #[test]
    fn constitutive_examples() {
        let mut p = Tensor3::zeros();
        p.set(0, 0, 0, 1.0);
        let m = EmModuli::zero().with_p(p).unwrap();
        let mut eps = Matrix3::zeros();
        eps[(0, 0)] = 1.0;
        let (_, d, _) = em_constitutive(&m, &eps, &[0.0; 3], &[0.0; 3]);
        assert_eq!(d, [1.0, 0.0, 0.0]);
        let m = EmModuli::zero().with_ediel(Matrix3::identity()).unwrap();
        let (_, d, _) = em_constitutive(&m, &Matrix3::zeros(), &[0.3, -0.2, 0.1], &[0.0; 3]);
        assert_eq!(d, [0.3, -0.2, 0.1]);
    }

    #[test]
    fn constitutive_is_gradient_of_enthalpy() {
        let mut r = rng(4);
        let m = random_model(&mut r);
        let eps = Matrix3::random(&mut r);
        let e: Vec3 = [0.2, -0.7, 0.4];
        let h: Vec3 = [-0.1, 0.5, 0.9];
        let (sigma, d, b) = em_constitutive(&m, &eps, &e, &h);
        let step = 1e-6;
        for i in 0..3 {
            let mut ep = e;
            let mut em = e;
            ep[i] += step;
            em[i] -= step;
            let g = (em_enthalpy(&m, &eps, &ep, &h) - em_enthalpy(&m, &eps, &em, &h)) / (2.0 * step);
            assert!((g + d[i]).abs() < 1e-8);
            let mut hp = h;
            let mut hm = h;
            hp[i] += step;
            hm[i] -= step;
            let g = (em_enthalpy(&m, &eps, &e, &hp) - em_enthalpy(&m, &eps, &e, &hm)) / (2.0 * step);
            assert!((g + b[i]).abs() < 1e-8);
        }
        // adjoint identity ε·(Pᵀe) = (Pε)·e
        let lhs = eps.dot(&m.p.adjoint_apply(e));
        let rhs = dot(&m.p.contract_last2(&eps), &e);
        assert!((lhs - rhs).abs() < 1e-14);
        let mut de = eps;
        de[(1, 2)] += step;
        let mut dm = eps;
        dm[(1, 2)] -= step;
        let g = (em_enthalpy(&m, &de, &e, &h) - em_enthalpy(&m, &dm, &e, &h)) / (2.0 * step);
        // only C is minor symmetric on the left, so compare against the full gradient
        let grad = m.c.apply(&eps)[(1, 2)] - m.p.adjoint_apply(e)[(1, 2)] - m.q.adjoint_apply(h)[(1, 2)];
        assert!((g - grad).abs() < 1e-8);
        assert!((sigma[(1, 2)] - grad).abs() < 1e-15);
    }

    #[test]
    fn null_check_examples() {
        assert!(check_em_null(&EmModuli::zero()).passed);
        let mut p = Tensor3::zeros();
        p.set(0, 0, 0, 1.0);
        assert!(!check_em_null(&EmModuli::zero().with_p(p).unwrap()).passed);
        let r = check_em_null(&EmModuli::zero().with_acpl(Matrix3::identity()).unwrap());
        assert!(!r.get("Acpl_ij = -Acpl_ji").unwrap().passed);
    }

    #[test]
    fn every_system_is_trivial() {
        for (name, lc) in em_null_systems() {
            assert_eq!(lc.projector().rank(), 0, "{name}");
        }
    }

    #[test]
    fn lagrangian_matches_enthalpy() {
        let mut r = rng(12);
        let m = random_model(&mut r);
        let l = em_lagrangian(&m, PiezomagneticCoupling::MagneticPotential).unwrap();
        let y = PolyField::random(5, 2, &mut r);
        let x = [0.4, 0.1, 0.8];
        let jet = y.jet(&x);
        let eps = jet.grad_block(0);
        let e: Vec3 = std::array::from_fn(|a| -jet.grad[9 + a]);
        let h: Vec3 = std::array::from_fn(|a| -jet.grad[12 + a]);
        assert!((l.eval_on(&y, &x) - em_enthalpy(&m, &eps, &e, &h)).abs() < 1e-13);

        let lit = em_lagrangian(&m, PiezomagneticCoupling::ElectricPotentialLiteral).unwrap();
        let shifted =
            em_enthalpy(&m.with_q(Tensor3::zeros()).unwrap(), &eps, &e, &h) - dot(&m.q.contract_last2(&eps), &e);
        assert!((lit.eval_on(&y, &x) - shifted).abs() < 1e-13);
    }
}
