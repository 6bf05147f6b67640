//! The isotropic null Lagrangian C0 [(tr k)^2 - k_ij k_ji] and its certificate.

use nulllag::micropolar::{iso_null_lagrangian, null_lagrangian_iso};
use nulllag::tensor::{invariants2, Matrix3};
use nulllag::variational::{certify_null, CertifyOptions};

fn main() -> nulllag::Result<()> {
    println!("Psi(I, C0 = 1) = {}", null_lagrangian_iso(1.0, &Matrix3::identity()));
    let k = Matrix3::from_fn(|i, j| 0.1 * (i as f64) - 0.3 * (j as f64) + 0.05 * ((i * j) as f64));
    println!(
        "Psi = {} vs 2 I2 = {}",
        null_lagrangian_iso(0.7, &k),
        2.0 * 0.7 * invariants2(&k).i2
    );

    let cert = certify_null(&iso_null_lagrangian(0.7)?, 32, 3, 11, &CertifyOptions::default())?;
    println!("{cert}");
    Ok(())
}
