//! Quasicrystal energies whose only nonzero part is an admissible phason tensor.

use nulllag::poly::PolyField;
use nulllag::quasicrystal::{
    admissible_phason_from_seeds, check_qc_null, coupling_null_system, phonon_null_system, qc_equilibrium_residual,
    qc_lagrangian, QcModuli,
};
use nulllag::variational::{certify_null, CertifyOptions};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> nulllag::Result<()> {
    println!("phonon system kernel: {}", phonon_null_system().projector().rank());
    println!("coupling system kernel: {}", coupling_null_system().projector().rank());

    // E_1223 = 1 (0-based [0,1,1,2]) and E_1321 = -0.5
    let e = admissible_phason_from_seeds(&[([0, 1, 1, 2], 1.0), ([0, 2, 1, 0], -0.5)])?;
    println!("nonzero entries: {}", e.0.iter().filter(|v| **v != 0.0).count());
    let m = QcModuli::phason_only(e)?;
    println!("{}", check_qc_null(&m));

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (u_p, u_s) = (PolyField::random(3, 3, &mut rng), PolyField::random(3, 3, &mut rng));
    let zero = PolyField::zero(3);
    let (_, r_s) = qc_equilibrium_residual(&m, &u_p, &u_s, &zero, &zero, &[0.3, 0.4, 0.5])?;
    println!("phason equilibrium residual without body force: {r_s:?}");

    println!(
        "{}",
        certify_null(&qc_lagrangian(&m)?, 32, 3, 9, &CertifyOptions::default())?
    );
    Ok(())
}
