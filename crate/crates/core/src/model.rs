//! Material model files.
//!
//! Tensors are flat row-major arrays (81, 27 or 9 numbers) and the `model`
//! field selects the variant. Unknown fields are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::em_elast::{check_em_null_tol, em_lagrangian, EmModuli, PiezomagneticCoupling};
use crate::error::{Error, Result};
use crate::micropolar::{
    check_null_sufficient_tol, micropolar_lagrangian, HemitropicParams, IsotropicParams, MicropolarModuli,
};
use crate::quasicrystal::{check_qc_null_tol, qc_lagrangian, QcModuli};
use crate::report::ConditionReport;
use crate::tensor::{Matrix3, Tensor3, Tensor4, TensorData};
use crate::variational::LagrangianEvaluator;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelFile {
    Micropolar {
        #[serde(rename = "A")]
        a: Vec<f64>,
        #[serde(rename = "B")]
        b: Vec<f64>,
        #[serde(rename = "D")]
        d: Vec<f64>,
    },
    MicropolarIsotropic(IsotropicParams),
    MicropolarHemitropic(HemitropicParams),
    Quasicrystal {
        #[serde(rename = "C")]
        c: Vec<f64>,
        #[serde(rename = "D")]
        d: Vec<f64>,
        #[serde(rename = "E")]
        e: Vec<f64>,
    },
    EmElast {
        #[serde(rename = "C")]
        c: Vec<f64>,
        #[serde(rename = "P")]
        p: Vec<f64>,
        #[serde(rename = "Q")]
        q: Vec<f64>,
        #[serde(rename = "Ediel")]
        ediel: Vec<f64>,
        #[serde(rename = "Bperm")]
        bperm: Vec<f64>,
        #[serde(rename = "Acpl")]
        acpl: Vec<f64>,
    },
}

/// A validated model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MaterialModel {
    Micropolar(MicropolarModuli),
    Quasicrystal(QcModuli),
    EmElast(EmModuli),
}

fn sized(what: &str, data: &[f64], expected: usize) -> Result<()> {
    if data.len() != expected {
        return Err(Error::Length {
            what: what.into(),
            expected,
            found: data.len(),
        });
    }
    Ok(())
}

fn t4(what: &str, data: &[f64]) -> Result<Tensor4> {
    sized(what, data, 81)?;
    Tensor4::from_slice(data)
}

fn t3(what: &str, data: &[f64]) -> Result<Tensor3> {
    sized(what, data, 27)?;
    Tensor3::from_slice(data)
}

fn m3(what: &str, data: &[f64]) -> Result<Matrix3> {
    sized(what, data, 9)?;
    Matrix3::from_slice(data)
}

impl ModelFile {
    pub fn build(&self) -> Result<MaterialModel> {
        Ok(match self {
            ModelFile::Micropolar { a, b, d } => {
                MaterialModel::Micropolar(MicropolarModuli::new(t4("A", a)?, t4("B", b)?, t4("D", d)?)?)
            }
            ModelFile::MicropolarIsotropic(p) => MaterialModel::Micropolar(p.moduli()?),
            ModelFile::MicropolarHemitropic(p) => MaterialModel::Micropolar(p.moduli()?),
            ModelFile::Quasicrystal { c, d, e } => {
                MaterialModel::Quasicrystal(QcModuli::new(t4("C", c)?, t4("D", d)?, t4("E", e)?)?)
            }
            ModelFile::EmElast {
                c,
                p,
                q,
                ediel,
                bperm,
                acpl,
            } => MaterialModel::EmElast(EmModuli::new(
                t4("C", c)?,
                t3("P", p)?,
                t3("Q", q)?,
                m3("Ediel", ediel)?,
                m3("Bperm", bperm)?,
                m3("Acpl", acpl)?,
            )?),
        })
    }
}

impl From<&MaterialModel> for ModelFile {
    fn from(m: &MaterialModel) -> Self {
        match m {
            MaterialModel::Micropolar(m) => ModelFile::Micropolar {
                a: m.a().0.to_vec(),
                b: m.b().0.to_vec(),
                d: m.d().0.to_vec(),
            },
            MaterialModel::Quasicrystal(m) => ModelFile::Quasicrystal {
                c: m.c().0.to_vec(),
                d: m.d().0.to_vec(),
                e: m.e().0.to_vec(),
            },
            MaterialModel::EmElast(m) => ModelFile::EmElast {
                c: m.c().0.to_vec(),
                p: m.p().0.to_vec(),
                q: m.q().0.to_vec(),
                ediel: m.ediel().as_slice().to_vec(),
                bperm: m.bperm().as_slice().to_vec(),
                acpl: m.acpl().as_slice().to_vec(),
            },
        }
    }
}

impl MaterialModel {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<ModelFile>(text)?.build()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Explicit-tensor JSON; floats are written in shortest round-trip form so
    /// reloading is bit-exact.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ModelFile::from(self)).expect("plain data serializes")
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MaterialModel::Micropolar(_) => "micropolar",
            MaterialModel::Quasicrystal(_) => "quasicrystal",
            MaterialModel::EmElast(_) => "em_elast",
        }
    }

    /// Number of field components `y`.
    pub fn arity(&self) -> usize {
        match self {
            MaterialModel::EmElast(_) => 5,
            _ => 6,
        }
    }

    /// The null-Lagrangian condition system of the model family.
    pub fn check(&self, tol: f64) -> ConditionReport {
        match self {
            MaterialModel::Micropolar(m) => check_null_sufficient_tol(m, tol),
            MaterialModel::Quasicrystal(m) => check_qc_null_tol(m, tol),
            MaterialModel::EmElast(m) => check_em_null_tol(m, tol),
        }
    }

    pub fn lagrangian(&self) -> Result<LagrangianEvaluator> {
        match self {
            MaterialModel::Micropolar(m) => micropolar_lagrangian(m),
            MaterialModel::Quasicrystal(m) => qc_lagrangian(m),
            MaterialModel::EmElast(m) => em_lagrangian(m, PiezomagneticCoupling::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeros(n: usize) -> String {
        serde_json::to_string(&vec![0.0; n]).unwrap()
    }

    #[test]
    fn loads_every_variant() {
        let mp = format!(r#"{{"model":"micropolar","A":{0},"B":{0},"D":{0}}}"#, zeros(81));
        assert!(matches!(
            MaterialModel::from_json(&mp).unwrap(),
            MaterialModel::Micropolar(_)
        ));
        let iso = r#"{"model":"micropolar_isotropic","lambda":1,"mu":1,"kappa":1,"beta1":0,"beta2":0,"beta3":0}"#;
        assert!(!MaterialModel::from_json(iso).unwrap().check(1e-12).passed);
        let hemi = r#"{"model":"micropolar_hemitropic","lambda":0,"mu":0,"kappa":0,"beta1":0,"beta2":0,"beta3":0,"zeta":0,"nu":0,"rho":0}"#;
        assert!(MaterialModel::from_json(hemi).unwrap().check(1e-12).passed);
        let qc = format!(r#"{{"model":"quasicrystal","C":{0},"D":{0},"E":{0}}}"#, zeros(81));
        assert_eq!(MaterialModel::from_json(&qc).unwrap().kind(), "quasicrystal");
        let em = format!(
            r#"{{"model":"em_elast","C":{},"P":{},"Q":{},"Ediel":{},"Bperm":{},"Acpl":{}}}"#,
            zeros(81),
            zeros(27),
            zeros(27),
            zeros(9),
            zeros(9),
            zeros(9)
        );
        let m = MaterialModel::from_json(&em).unwrap();
        assert_eq!(m.arity(), 5);
        assert!(m.check(1e-12).passed);
    }

    #[test]
    fn rejects_bad_files() {
        let short = format!(
            r#"{{"model":"micropolar","A":{},"B":{1},"D":{1}}}"#,
            zeros(80),
            zeros(81)
        );
        let msg = MaterialModel::from_json(&short).unwrap_err().to_string();
        assert!(msg.contains("length"), "{msg}");
        let extra = format!(r#"{{"model":"micropolar","A":{0},"B":{0},"D":{0},"x":1}}"#, zeros(81));
        assert!(MaterialModel::from_json(&extra).is_err());
        let mut a = vec![0.0; 81];
        a[1] = 1.0;
        let asym = format!(
            r#"{{"model":"micropolar","A":{},"B":{1},"D":{1}}}"#,
            serde_json::to_string(&a).unwrap(),
            zeros(81)
        );
        assert!(matches!(MaterialModel::from_json(&asym), Err(Error::Symmetry { .. })));
        assert!(MaterialModel::from_json(r#"{"model":"liquid_crystal"}"#).is_err());
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let b: Vec<f64> = (0..81).map(|i| ((i * 7919 % 81) as f64).sqrt() / 3.0).collect();
        let b = Tensor4::from_slice(&b).unwrap();
        let b = b + b.major_transpose();
        let m = MaterialModel::Micropolar(MicropolarModuli::wryness_only(b).unwrap());
        let back = MaterialModel::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        let MaterialModel::Micropolar(x) = back else {
            unreachable!()
        };
        assert!(x.b().0.iter().zip(b.0).all(|(u, v)| u.to_bits() == v.to_bits()));
    }
}
