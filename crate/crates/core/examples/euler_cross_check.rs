//! Closed-form and finite-difference Euler operators side by side.

use nulllag::micropolar::{micropolar_lagrangian, MicropolarModuli};
use nulllag::poly::PolyField;
use nulllag::tensor::Tensor4;
use nulllag::variational::{action_integral, boundary_dependence_test, dirichlet, euler_residual, euler_residual_fd};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> nulllag::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let m = MicropolarModuli::new(
        Tensor4::random_major_symmetric(&mut rng),
        Tensor4::random_major_symmetric(&mut rng),
        Tensor4::random(&mut rng),
    )?;
    let l = micropolar_lagrangian(&m)?;
    let y = PolyField::random(6, 3, &mut rng);
    let x = [0.25, 0.5, 0.75];
    let exact = euler_residual(&l, &y, &x)?;
    let fd = euler_residual_fd(&l.as_black_box(), &y, &x)?;
    for (k, (a, b)) in exact.values.iter().zip(&fd.values).enumerate() {
        println!("E_{k}: {a:>12.8} {b:>12.8}");
    }

    // the Dirichlet energy of u: Euler operator is the Laplacian
    let d = dirichlet(3, 0, 3)?;
    let u = PolyField::random(3, 2, &mut rng);
    println!("Dirichlet action {:.6}", action_integral(&d, &u, 3)?);
    let w = PolyField::random(3, 1, &mut rng).times(&nulllag::poly::bubble());
    println!(
        "action change under an interior perturbation: {:.3e}",
        boundary_dependence_test(&d, &u, &w, 6)?
    );
    Ok(())
}
