//! Tensor algebra in dimension three: contractions, index permutations and
//! symmetry classes.

use nulllag::symmetry::{check_symmetry, SymmetryClass};
use nulllag::tensor::{invariants2, levi_civita, Matrix3, Tensor4};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let e = levi_civita();
    println!(
        "e_123 = {}, e_213 = {}, e_112 = {}",
        e.get(0, 1, 2),
        e.get(1, 0, 2),
        e.get(0, 0, 1)
    );

    let m = Matrix3::from_fn(|i, j| (i * 3 + j) as f64);
    println!(
        "transposer[M] == M^T: {}",
        Tensor4::transposer().apply(&m) == m.transpose()
    );
    println!(
        "trace pairing[I] = {:?}",
        Tensor4::trace_pairing().apply(&Matrix3::identity()).0
    );

    let inv = invariants2(&Matrix3::skew_from_axial([0.0, 0.0, 1.0]));
    println!(
        "skew(e3): trace {} I2 {} M.M^T {}",
        inv.trace, inv.i2, inv.dot_transpose
    );

    // projecting onto a class makes it hold exactly
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let t = Tensor4::random(&mut rng);
    for class in [SymmetryClass::major(), SymmetryClass::tilde()] {
        let p = Tensor4::from_slice(&class.project(&t.0)).unwrap();
        println!(
            "{:>6}: random {:.3e} -> projected {:.1e}",
            class.name,
            check_symmetry(&t, &class),
            check_symmetry(&p, &class)
        );
    }
    println!(
        "structural zeros of the tilde class: {}",
        SymmetryClass::tilde().structural_zero_count()
    );
}
