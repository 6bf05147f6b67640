//! Electro-magneto-elasticity admits no nonzero null enthalpy.

use nulllag::em_elast::{check_em_null, em_lagrangian, em_null_systems, EmModuli, PiezomagneticCoupling};
use nulllag::tensor::Matrix3;
use nulllag::variational::{certify_null, CertifyOptions};

fn main() -> nulllag::Result<()> {
    for (name, system) in em_null_systems() {
        println!("{name:>6}: kernel dimension {}", system.projector().rank());
    }

    let m = EmModuli::zero().with_acpl(Matrix3::identity())?;
    let report = check_em_null(&m);
    println!("\nA = I:\n{report}");
    for coupling in [
        PiezomagneticCoupling::MagneticPotential,
        PiezomagneticCoupling::ElectricPotentialLiteral,
    ] {
        let cert = certify_null(&em_lagrangian(&m, coupling)?, 16, 3, 1, &CertifyOptions::default())?;
        println!("{coupling:?}: null = {}", cert.passed);
    }
    Ok(())
}
