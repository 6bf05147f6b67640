//! Null Lagrangians built from three arbitrary generator polynomials.

use nulllag::poly::Poly;
use nulllag::rund::{
    appendix_identity_residuals, build_null_lagrangian, micropolar_block_view, rund_coefficients, GeneratorSet,
};
use nulllag::variational::{certify_null, CertifyOptions};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> nulllag::Result<()> {
    // S1 = y5, S2 = -y4: the 2x2 minor of grad(phi) in the (1, 2) plane
    let minor = GeneratorSet::new(6, [Poly::var(9, 7), Poly::monomial(9, 6, 1, -1.0), Poly::zero(9)])?;
    let c = rund_coefficients(&minor, &[0.0; 3], &[0.0; 6])?;
    println!("D(1,2;4,5) = {}  D(1,2;5,4) = {}", c.d2(0, 1, 3, 4), c.d2(0, 1, 4, 3));
    let blocks = micropolar_block_view(&minor, &[0.0; 3], &[0.0; 6])?;
    println!("u block zero: {}", blocks.d2_uu.iter().all(|v| *v == 0.0));

    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let g = GeneratorSet::random(6, 2, &mut rng);
    let r = appendix_identity_residuals(&g, &[0.2, 0.7, 0.4], &[0.3, -0.1, 0.5, 0.9, -0.6, 0.2])?;
    println!("coefficient identities: {:.2e} (scale {:.2})", r.normalized(), r.scale);

    let cert = certify_null(&build_null_lagrangian(&g), 16, 3, 5, &CertifyOptions::default())?;
    println!("{cert}");
    println!("\ngenerator file:\n{}", minor.to_json());
    Ok(())
}
