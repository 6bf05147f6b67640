//! Decomposition of the wryness tensor and the surface form of its null part.

use nulllag::micropolar::{cauchy_analogue_table, split_b, surface_potential, tilde_structure};
use nulllag::poly::PolyField;
use nulllag::quadrature::integrate_cube;
use nulllag::tensor::{Matrix3, Tensor4};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> nulllag::Result<()> {
    let b = Tensor4::isotropic(1.0, 0.0, 2.0);
    let s = split_b(&b);
    for (name, v) in cauchy_analogue_table(&s.b_tilde).iter().take(4) {
        println!("{name} = {v}");
    }
    println!("B ring vanishes: {}", s.b_ring.is_zero());
    println!("{:?}", tilde_structure());

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let b = split_b(&Tensor4::random_major_symmetric(&mut rng)).b_tilde;
    let phi = PolyField::random(3, 2, &mut rng);
    let volume = 0.5
        * integrate_cube(4, |x| {
            let k: Matrix3 = phi.jet(x).grad_block(0);
            b.bilinear(&k, &k)
        });
    let surface = surface_potential(&b, &phi, 4)?;
    println!("volume {volume:.15} surface {surface:.15}");
    Ok(())
}
