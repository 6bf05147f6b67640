//! Randomized invariants across the library.

use nulllag::em_elast::{em_enthalpy, em_lagrangian, EmModuli, PiezomagneticCoupling};
use nulllag::micropolar::{
    balance_residual, cauchy_analogue, check_centrosymmetric_rund, claim1_equivalence_probe, micropolar_lagrangian,
    null_lagrangian_iso, split_b, IsotropicParams, MicropolarModuli,
};
use nulllag::poly::{monomials_up_to, Poly, PolyField};
use nulllag::quadrature::integrate_cube;
use nulllag::quasicrystal::{qc_energy, QcModuli};
use nulllag::rund::{micropolar_block_view, rund_coefficients, GeneratorSet};
use nulllag::symmetry::{check_symmetry, SymmetryClass};
use nulllag::tensor::{invariants2, Matrix3, Tensor3, Tensor4, TensorData, Vec3};
use nulllag::variational::{action_integral, certify_null, euler_residual, euler_residual_fd, CertifyOptions};
use proptest::prelude::*;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn point(r: &mut ChaCha8Rng) -> Vec3 {
    [
        r.random_range(0.0..1.0),
        r.random_range(0.0..1.0),
        r.random_range(0.0..1.0),
    ]
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn second_invariant_identity(seed in any::<u64>()) {
        let m = Matrix3::random(&mut rng(seed));
        let inv = invariants2(&m);
        prop_assert!(rel(inv.trace * inv.trace - inv.dot_transpose, 2.0 * inv.i2) <= 1e-13);
        let s = m.sym() + m.skew();
        prop_assert_eq!(s, m);
    }

    #[test]
    fn adjoint_identity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (t, m, n) = (Tensor4::random(&mut r), Matrix3::random(&mut r), Matrix3::random(&mut r));
        prop_assert!(rel(m.dot(&t.apply(&n)), n.dot(&t.major_transpose().apply(&m))) <= 1e-13);
        prop_assert_eq!(t.swap24().swap24(), t);
        prop_assert_eq!(t.swap13().swap13(), t);
        prop_assert_eq!(t.major_transpose().major_transpose(), t);
    }

    #[test]
    fn projection_satisfies_class(seed in any::<u64>(), which in 0usize..5) {
        let class = [
            SymmetryClass::major(),
            SymmetryClass::minor_left(),
            SymmetryClass::swap24_anti(),
            SymmetryClass::tilde(),
            SymmetryClass::zero_if_ik_or_jl(),
        ][which].clone();
        let t = Tensor4::random(&mut rng(seed));
        let p = Tensor4::from_slice(&class.project(&t.0)).unwrap();
        prop_assert_eq!(check_symmetry(&p, &class), 0.0);
    }

    #[test]
    fn wryness_split_properties(seed in any::<u64>()) {
        let mut r = rng(seed);
        let b = Tensor4::random_major_symmetric(&mut r);
        let s = split_b(&b);
        prop_assert!(s.reassemble().max_abs_diff(&b) <= 1e-15 * b.norm_inf().max(1.0));
        prop_assert!(check_centrosymmetric_rund(&Tensor4::zeros(), &s.b_tilde).passed);
        prop_assert!(!cauchy_analogue(&s.b_tilde).passed);
        prop_assert!(cauchy_analogue(&split_b(&s.b_hat).b_tilde).passed);

        let l = micropolar_lagrangian(&MicropolarModuli::wryness_only(s.b_tilde).unwrap()).unwrap();
        let y = PolyField::random(6, 3, &mut r);
        prop_assert!(euler_residual(&l, &y, &point(&mut r)).unwrap().normalized() <= 1e-10);
    }

    #[test]
    fn claim1_probe(seed in any::<u64>()) {
        prop_assert!(claim1_equivalence_probe(&Tensor4::random(&mut rng(seed))));
    }

    #[test]
    fn isotropic_tilde_part_does_not_change_equilibrium(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut c = || r.random_range(-1.0..1.0);
        let p = IsotropicParams { lambda: c(), mu: c(), kappa: c(), beta1: c(), beta2: c(), beta3: c() };
        let full = p.moduli().unwrap();
        let hat = MicropolarModuli::new(*full.a(), split_b(full.b()).b_hat, *full.d()).unwrap();
        let (lf, lh) = (micropolar_lagrangian(&full).unwrap(), micropolar_lagrangian(&hat).unwrap());
        let y = PolyField::random(6, 3, &mut r);
        let x = point(&mut r);
        let (ef, eh) = (euler_residual(&lf, &y, &x).unwrap(), euler_residual(&lh, &y, &x).unwrap());
        for (a, b) in ef.values.iter().zip(&eh.values) {
            prop_assert!((a - b).abs() / ef.scale <= 1e-10);
        }
    }

    #[test]
    fn iso_null_is_twice_i2(seed in any::<u64>(), c0 in -3.0f64..3.0) {
        let k = Matrix3::random(&mut rng(seed));
        prop_assert!(rel(null_lagrangian_iso(c0, &k), 2.0 * c0 * invariants2(&k).i2) <= 1e-13);
    }

    #[test]
    fn euler_operator_is_the_balance_law(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = MicropolarModuli::new(
            Tensor4::random_major_symmetric(&mut r),
            Tensor4::random_major_symmetric(&mut r),
            Tensor4::random(&mut r),
        ).unwrap();
        let (u, phi) = (PolyField::random(3, 3, &mut r), PolyField::random(3, 3, &mut r));
        let x = point(&mut r);
        let e = euler_residual(&micropolar_lagrangian(&m).unwrap(), &PolyField::concat(&[&u, &phi]), &x).unwrap();
        let b = balance_residual(&m, &u, &phi, &x).unwrap();
        for (a, b) in e.values.iter().zip(b) {
            prop_assert!((a - b).abs() / e.scale <= 1e-10);
        }
    }

    #[test]
    fn qc_energy_splits_without_coupling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = Tensor4::from_slice(&nulllag::quasicrystal::phonon_class().project(&Tensor4::random(&mut r).0)).unwrap();
        let e = Tensor4::random_major_symmetric(&mut r);
        let (g, k) = (Matrix3::random(&mut r), Matrix3::random(&mut r));
        let full = QcModuli::new(c, Tensor4::zeros(), e).unwrap();
        let phonon = QcModuli::new(c, Tensor4::zeros(), Tensor4::zeros()).unwrap();
        let phason = QcModuli::phason_only(e).unwrap();
        prop_assert_eq!(qc_energy(&full, &g, &k), qc_energy(&phonon, &g, &k) + qc_energy(&phason, &g, &k));
    }

    #[test]
    fn em_enthalpy_has_constant_hessian(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sym = |m: Matrix3| m.sym();
        let c = Tensor4::from_slice(&nulllag::em_elast::elastic_class().project(&Tensor4::random(&mut r).0)).unwrap();
        let pz = |r: &mut ChaCha8Rng| Tensor3::from_slice(&nulllag::em_elast::piezo_class().project(&Tensor3::random(r).0)).unwrap();
        let (p, q) = (pz(&mut r), pz(&mut r));
        let m = EmModuli::new(c, p, q, sym(Matrix3::random(&mut r)), sym(Matrix3::random(&mut r)), sym(Matrix3::random(&mut r))).unwrap();
        // H along z0 + s a + t b; its mixed second difference must not depend on z0
        let vec15 = |r: &mut ChaCha8Rng| -> Vec<f64> { (0..15).map(|_| r.random_range(-1.0..1.0)).collect() };
        let (a, b) = (vec15(&mut r), vec15(&mut r));
        let h = |z: &[f64]| {
            let eps = Matrix3::from_slice(&z[..9]).unwrap();
            em_enthalpy(&m, &eps, &[z[9], z[10], z[11]], &[z[12], z[13], z[14]])
        };
        let mixed = |z0: &[f64]| {
            let at = |s: f64, t: f64| -> f64 {
                let z: Vec<f64> = (0..15).map(|i| z0[i] + s * a[i] + t * b[i]).collect();
                h(&z)
            };
            let d = 1e-3;
            (at(d, d) - at(d, -d) - at(-d, d) + at(-d, -d)) / (4.0 * d * d)
        };
        let (z1, z2) = (vec15(&mut r), vec15(&mut r));
        prop_assert!((mixed(&z1) - mixed(&z2)).abs() <= 1e-8);
    }

    #[test]
    fn rund_coefficient_structure(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = GeneratorSet::random(6, 2, &mut r);
        let x = point(&mut r);
        let y: Vec<f64> = (0..6).map(|_| r.random_range(-1.0..1.0)).collect();
        let c = rund_coefficients(&g, &x, &y).unwrap();
        for a1 in 0..3 {
            for a2 in 0..3 {
                for i1 in 0..6 {
                    for i2 in 0..6 {
                        prop_assert_eq!(c.d2(a1, a2, i1, i2) + c.d2(a2, a1, i1, i2), 0.0);
                        prop_assert_eq!(c.d2(a1, a2, i1, i2), c.d2(a2, a1, i2, i1));
                    }
                }
            }
        }
        prop_assert_eq!(micropolar_block_view(&g, &x, &y).unwrap().reassemble(), c);

        // generators free of u give a vanishing u block
        let map: Vec<usize> = vec![0, 1, 2, 6, 7, 8];
        let s = std::array::from_fn(|_| Poly::random_dyadic(6, 2, &mut r).embed(9, &map));
        let phi_only = GeneratorSet::new(6, s).unwrap();
        prop_assert!(micropolar_block_view(&phi_only, &x, &y).unwrap().d2_uu.iter().all(|v| *v == 0.0));
    }

    #[test]
    fn closed_form_and_fd_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = MicropolarModuli::new(
            Tensor4::random_major_symmetric(&mut r),
            Tensor4::random_major_symmetric(&mut r),
            Tensor4::random(&mut r),
        ).unwrap();
        let l = micropolar_lagrangian(&m).unwrap();
        let y = PolyField::random(6, 3, &mut r);
        let x = point(&mut r);
        let (a, b) = (euler_residual(&l, &y, &x).unwrap(), euler_residual_fd(&l.as_black_box(), &y, &x).unwrap());
        let diff = a.values.iter().zip(&b.values).fold(0.0f64, |d, (p, q)| d.max((p - q).abs()));
        prop_assert!(diff / a.scale <= 1e-5);
    }

    #[test]
    fn em_vacuous_model_is_null(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = em_lagrangian(&EmModuli::zero(), PiezomagneticCoupling::default()).unwrap();
        let y = PolyField::random(5, 3, &mut r);
        prop_assert_eq!(euler_residual(&l, &y, &point(&mut r)).unwrap().max_abs(), 0.0);
    }
}

#[test]
fn quadrature_integrates_monomials_exactly() {
    for order in 1..=6usize {
        let top = 2 * order as u32 - 1;
        for e in monomials_up_to(3, top) {
            if e.iter().any(|&k| k > top) {
                continue;
            }
            let got = integrate_cube(order, |x| (0..3).map(|i| x[i].powi(e[i] as i32)).product());
            let exact: f64 = e.iter().map(|&k| 1.0 / (k as f64 + 1.0)).product();
            assert!(rel(got, exact) <= 1e-14, "order {order} exps {e:?}");
        }
    }
    // through the action: Ψ = ½|∇u|² for u = x₁x₂ integrates to 1/3
    let mut terms = Poly::zero(3);
    terms.add_term(vec![1, 1, 0], 1.0);
    let u = PolyField::new(vec![terms]).unwrap();
    let l = nulllag::variational::dirichlet(1, 0, 1).unwrap();
    assert!(rel(action_integral(&l, &u, 2).unwrap(), 1.0 / 3.0) <= 1e-14);
}

#[test]
fn certificates_are_seed_deterministic() {
    let l = micropolar_lagrangian(&MicropolarModuli::wryness_only(Tensor4::isotropic(1.0, 0.5, 0.2)).unwrap()).unwrap();
    let a = certify_null(&l, 8, 3, 77, &CertifyOptions::default()).unwrap();
    let b = certify_null(&l, 8, 3, 77, &CertifyOptions::default()).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let c = certify_null(&l, 8, 3, 78, &CertifyOptions::default()).unwrap();
    assert_ne!(a.max_normalized_residual, c.max_normalized_residual);
}

#[test]
fn tensor_json_round_trip_is_bit_exact() {
    let mut r = rng(99);
    for _ in 0..100 {
        let t = Tensor4::random(&mut r);
        let back: Tensor4 = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert!(t.0.iter().zip(back.0).all(|(a, b)| a.to_bits() == b.to_bits()));
    }
}
