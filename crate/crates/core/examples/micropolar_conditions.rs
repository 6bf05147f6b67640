//! Null-Lagrangian conditions for centrosymmetric micropolar energies.

use nulllag::micropolar::{
    check_claim1, check_null_sufficient, claim1_equivalence_probe, claim1_set1, claim1_set2, stretch_null_system,
    IsotropicParams, MicropolarModuli,
};
use nulllag::tensor::Tensor4;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> nulllag::Result<()> {
    let iso = IsotropicParams {
        lambda: 1.0,
        mu: 1.0,
        kappa: 1.0,
        ..Default::default()
    };
    println!(
        "isotropic model, lambda = mu = kappa = 1:\n{}\n",
        check_null_sufficient(&iso.moduli()?)
    );

    // a coupling tensor from the solution space of the D relations
    let d = Tensor4::from_slice(
        &claim1_set1()
            .projector()
            .project(&Tensor4::random(&mut ChaCha8Rng::seed_from_u64(1)).0),
    )?;
    let m = MicropolarModuli::new(Tensor4::zeros(), Tensor4::zeros(), d)?;
    println!(
        "A = B = 0, D in the kernel: pass = {}",
        check_null_sufficient(&m).passed
    );
    println!("Claim 1 on that D: pass = {}", check_claim1(&d).passed);

    let (p1, p2) = (claim1_set1().projector(), claim1_set2().projector());
    println!("kernel dimensions: {} and {}", p1.rank(), p2.rank());
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let agree = (0..1000).all(|_| claim1_equivalence_probe(&Tensor4::random(&mut rng)));
    println!("equivalence probe on 1000 random tensors: {agree}");
    println!(
        "stretch system kernel dimension: {}",
        stretch_null_system().projector().rank()
    );
    Ok(())
}
