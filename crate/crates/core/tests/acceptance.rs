//! Acceptance criteria 1 to 10. Each test writes one `PASS`/`FAIL` line to
//! stdout (bypassing output capture) and then asserts its verdict.

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use nulllag::em_elast::{elastic_class, em_lagrangian, em_null_systems, piezo_class, EmModuli, PiezomagneticCoupling};
use nulllag::micropolar::{
    claim1_equivalence_probe, claim1_set1, claim1_set2, iso_null_lagrangian, micropolar_lagrangian,
    null_lagrangian_iso, split_b, stretch_null_system, surface_potential, HemitropicParams, MicropolarModuli,
};
use nulllag::model::MaterialModel;
use nulllag::poly::PolyField;
use nulllag::quadrature::{integrate_cube, required_order};
use nulllag::quasicrystal::{
    admissible_phason_class, admissible_phason_from_seeds, coupling_class, coupling_null_system, phonon_class,
    phonon_null_system, qc_equilibrium_residual, qc_lagrangian, QcModuli,
};
use nulllag::rund::{build_null_lagrangian, GeneratorSet, IdentityPolys};
use nulllag::symmetry::{LinearConstraints, SymmetryClass};
use nulllag::tensor::{invariants2, Matrix3, Tensor3, Tensor4, TensorData, Vec3};
use nulllag::variational::{
    certify_null, euler_residual, euler_residual_fd, CertifyOptions, FieldKind, LagrangianEvaluator,
};
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

fn verdict(n: u32, title: &str, passed: bool, detail: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(
        out,
        "criterion {n:>2} {:<4} {title}: {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    drop(out);
    assert!(passed, "criterion {n} ({title}) failed: {detail}");
}

fn project(class: &SymmetryClass, t: &dyn TensorData) -> Vec<f64> {
    class.project(t.as_slice())
}

#[test]
fn criterion_01_claim1_equivalence() {
    let (p1, p2) = (claim1_set1().projector(), claim1_set2().projector());
    let mut r = rng(1);
    let mut probe_ok = 0;
    let mut worst: f64 = 0.0;
    let trials = 10_000;
    for _ in 0..trials {
        let t = Tensor4::random(&mut r);
        if claim1_equivalence_probe(&t) {
            probe_ok += 1;
        }
        let (a, b) = (p1.project(&t.0), p2.project(&t.0));
        worst = a.iter().zip(&b).fold(worst, |w, (x, y)| w.max((x - y).abs()));
    }
    verdict(
        1,
        "Claim 1 equivalence",
        probe_ok == trials && worst <= 1e-13,
        &format!("probe true on {probe_ok}/{trials}, max projection difference {worst:.1e}"),
    );
}

#[test]
fn criterion_02_forced_zero() {
    let mut r = rng(2);
    // matrix moduli carry no class; they are symmetrized below
    let mut systems: Vec<(String, LinearConstraints, Option<SymmetryClass>)> = vec![
        (
            "micropolar A".into(),
            stretch_null_system(),
            Some(SymmetryClass::major()),
        ),
        ("quasicrystal C".into(), phonon_null_system(), Some(phonon_class())),
        ("quasicrystal D".into(), coupling_null_system(), Some(coupling_class())),
    ];
    for (name, lc) in em_null_systems() {
        let class = match lc.dim() {
            81 => Some(elastic_class()),
            27 => Some(piezo_class()),
            _ => None,
        };
        systems.push((format!("EM {name}"), lc, class));
    }
    let mut worst: f64 = 0.0;
    let mut ranks = Vec::new();
    for (name, lc, class) in &systems {
        let p = lc.projector();
        ranks.push(format!("{name}:{}", p.rank()));
        for _ in 0..100 {
            let raw: Vec<f64> = (0..lc.dim()).map(|_| r.random_range(-1.0..1.0)).collect();
            let t: Vec<f64> = match class {
                Some(c) => c.project(&raw),
                None => Matrix3::from_slice(&raw).unwrap().sym().as_slice().to_vec(),
            };
            worst = p.project(&t).iter().fold(worst, |w, v| w.max(v.abs()));
        }
    }
    verdict(
        2,
        "forced-zero systems",
        worst <= 1e-14,
        &format!("max |projection| {worst:.1e}; kernel dims {}", ranks.join(" ")),
    );
}

#[test]
fn criterion_03_micropolar_tilde_null() {
    let mut r = rng(3);
    let (mut worst_res, mut worst_act): (f64, f64) = (0.0, 0.0);
    let (mut tilde_pass, mut hat_fail, mut hat_checked) = (0, 0, 0);
    for i in 0..100u64 {
        let b = Tensor4::random_major_symmetric(&mut r);
        let s = split_b(&b);
        let l = micropolar_lagrangian(&MicropolarModuli::wryness_only(s.b_tilde).unwrap()).unwrap();
        let c = certify_null(&l, 16, 3, 300 + i, &CertifyOptions::default()).unwrap();
        worst_res = worst_res.max(c.max_normalized_residual);
        worst_act = c.boundary_action_deltas.iter().fold(worst_act, |w, d| w.max(*d));
        if c.passed && c.max_normalized_residual <= 1e-10 {
            tilde_pass += 1;
        }
        if s.b_hat.0.iter().any(|v| v.abs() > 1e-6) {
            hat_checked += 1;
            let l = micropolar_lagrangian(&MicropolarModuli::wryness_only(s.b_hat).unwrap()).unwrap();
            if !certify_null(&l, 16, 3, 300 + i, &CertifyOptions::default())
                .unwrap()
                .passed
            {
                hat_fail += 1;
            }
        }
    }
    verdict(
        3,
        "micropolar tilde part is null",
        tilde_pass == 100 && worst_act <= 1e-12 && hat_fail == hat_checked,
        &format!(
            "tilde certified {tilde_pass}/100 (max residual {worst_res:.1e}, max action delta {worst_act:.1e}); hat rejected {hat_fail}/{hat_checked}"
        ),
    );
}

#[test]
fn criterion_04_isotropic_null() {
    let cert = certify_null(&iso_null_lagrangian(1.0).unwrap(), 64, 3, 4, &CertifyOptions::default()).unwrap();
    let spot = null_lagrangian_iso(1.0, &Matrix3::identity());
    let mut r = rng(4);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let k = Matrix3::random(&mut r);
        let c0 = r.random_range(-2.0..2.0);
        let (a, b) = (null_lagrangian_iso(c0, &k), 2.0 * c0 * invariants2(&k).i2);
        worst = worst.max((a - b).abs() / a.abs().max(b.abs()).max(1e-300));
    }
    verdict(
        4,
        "isotropic null Lagrangian",
        cert.passed && spot == 6.0 && worst <= 1e-13,
        &format!(
            "certificate {} (residual {:.1e}), Psi(I, 1) = {spot}, 2 C0 I2 identity {worst:.1e}",
            cert.passed, cert.max_normalized_residual
        ),
    );
}

#[test]
fn criterion_05_hemitropic_iff() {
    let curl_free = CertifyOptions {
        fields: FieldKind::CurlFreeBlock { start: 3 },
        ..CertifyOptions::default()
    };
    let (mut passes, mut fails) = (0, 0);
    let mut gradient_ok = true;
    let mut rows = Vec::new();
    for lambda in [-1.0, 0.0, 1.0] {
        for zeta in [-1.0, 0.0, 1.0] {
            let l = micropolar_lagrangian(&HemitropicParams::constrained(lambda, 1.0, zeta).moduli().unwrap()).unwrap();
            let general = certify_null(&l, 32, 3, 5, &CertifyOptions::default()).unwrap();
            if general.passed {
                passes += 1;
            } else {
                fails += 1;
            }
            let expect_pass = lambda == 0.0 && zeta == 0.0;
            if general.passed != expect_pass {
                gradient_ok = false;
            }
            if !expect_pass {
                let g = certify_null(&l, 32, 3, 5, &curl_free).unwrap();
                rows.push(format!(
                    "({lambda},{zeta})={}",
                    if g.passed { "null" } else { "not null" }
                ));
                gradient_ok &= g.passed;
            }
        }
    }
    verdict(
        5,
        "hemitropic iff",
        passes == 1 && fails == 8 && gradient_ok,
        &format!(
            "general fields: {passes} pass, {fails} fail; curl-free fields: {}",
            rows.join(" ")
        ),
    );
}

#[test]
fn criterion_06_divergence_identity() {
    let mut r = rng(6);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let b = split_b(&Tensor4::random_major_symmetric(&mut r)).b_tilde;
        let phi = PolyField::random(3, 3, &mut r);
        let degree = 2 * (0..3).map(|a| phi.degree_in(a)).max().unwrap();
        let order = required_order(degree);
        let volume = 0.5
            * integrate_cube(order, |x| {
                let k = phi.jet(x).grad_block(0);
                b.bilinear(&k, &k)
            });
        let surface = surface_potential(&b, &phi, order).unwrap();
        worst = worst.max((volume - surface).abs() / volume.abs().max(surface.abs()).max(1.0));
    }
    verdict(
        6,
        "divergence-theorem identity",
        worst <= 1e-12,
        &format!("max relative gap {worst:.1e}"),
    );
}

#[test]
fn criterion_07_rund_construction() {
    let mut r = rng(7);
    let (mut certified, mut worst_res, mut worst_id): (usize, f64, f64) = (0, 0.0, 0.0);
    for i in 0..100u64 {
        let degree = r.random_range(1..=2);
        let g = GeneratorSet::random(6, degree, &mut r);
        let c = certify_null(&build_null_lagrangian(&g), 8, 3, 700 + i, &CertifyOptions::default()).unwrap();
        if c.passed {
            certified += 1;
        }
        worst_res = worst_res.max(c.max_normalized_residual);
        let ids = IdentityPolys::new(&g);
        for _ in 0..50 {
            let x = point(&mut r);
            let y: Vec<f64> = (0..6).map(|_| r.random_range(-1.0..1.0)).collect();
            worst_id = worst_id.max(ids.eval(&x, &y).unwrap().normalized());
        }
    }
    verdict(
        7,
        "Rund construction",
        certified == 100 && worst_id <= 1e-9,
        &format!("certified {certified}/100 (max FD residual {worst_res:.1e}), max identity residual {worst_id:.1e}"),
    );
}

#[test]
fn criterion_08_quasicrystal_family() {
    // orbit representatives with i != k and j != l
    let reps: Vec<[usize; 4]> = (0..81)
        .map(|p| [p / 27, (p / 9) % 3, (p / 3) % 3, p % 3])
        .filter(|[i, j, k, l]| i != k && j != l)
        .collect();
    let mut r = rng(8);
    let (mut certified, mut worst_rs): (usize, f64) = (0, 0.0);
    let models = 20;
    let mut pattern_ok = true;
    let class = admissible_phason_class();
    for m in 0..models {
        let mut seeds = Vec::new();
        let mut e = Tensor4::zeros();
        for _ in 0..3 {
            let idx = reps[r.random_range(0..reps.len())];
            let v = r.random_range(-1.0..1.0);
            let mut trial = seeds.clone();
            trial.push((idx, v));
            if let Ok(t) = admissible_phason_from_seeds(&trial) {
                seeds = trial;
                e = t;
            }
        }
        for (p, v) in e.0.iter().enumerate() {
            let [i, j, k, l] = [p / 27, (p / 9) % 3, (p / 3) % 3, p % 3];
            if (i == k || j == l) && *v != 0.0 {
                pattern_ok = false;
            }
        }
        let q = QcModuli::phason_only(e).unwrap();
        let c = certify_null(&qc_lagrangian(&q).unwrap(), 16, 3, 800 + m, &CertifyOptions::default()).unwrap();
        if c.passed && c.max_normalized_residual <= 1e-10 {
            certified += 1;
        }
        let (u_p, u_s) = (PolyField::random(3, 3, &mut r), PolyField::random(3, 3, &mut r));
        let zero = PolyField::zero(3);
        let (_, rs) = qc_equilibrium_residual(&q, &u_p, &u_s, &zero, &zero, &point(&mut r)).unwrap();
        worst_rs = rs.iter().fold(worst_rs, |w, v| w.max(v.abs()));
    }
    // structural zeros of the admissible class are exactly the i = k or j = l entries
    let mut lc = LinearConstraints::new(81);
    lc.push_class(&class);
    let generic = lc.projector().project(&Tensor4::random(&mut r).0);
    let zero_count = generic.iter().filter(|v| v.abs() < 1e-14).count();
    for (p, v) in generic.iter().enumerate() {
        let [i, j, k, l] = [p / 27, (p / 9) % 3, (p / 3) % 3, p % 3];
        if (v.abs() < 1e-14) != (i == k || j == l) {
            pattern_ok = false;
        }
    }
    verdict(
        8,
        "quasicrystal null family",
        certified == models as usize && worst_rs <= 1e-10 && pattern_ok && zero_count == 45,
        &format!(
            "certified {certified}/{models}, max |r_s| {worst_rs:.1e}, zero pattern matches: {pattern_ok} ({zero_count} zeros)"
        ),
    );
}

fn random_family_model(r: &mut ChaCha8Rng, family: usize) -> LagrangianEvaluator {
    match family {
        0 => micropolar_lagrangian(
            &MicropolarModuli::new(
                Tensor4::random_major_symmetric(r),
                Tensor4::random_major_symmetric(r),
                Tensor4::random(r),
            )
            .unwrap(),
        )
        .unwrap(),
        1 => {
            let c = Tensor4::from_slice(&project(&phonon_class(), &Tensor4::random(r))).unwrap();
            let d = Tensor4::from_slice(&project(&coupling_class(), &Tensor4::random(r))).unwrap();
            qc_lagrangian(&QcModuli::new(c, d, Tensor4::random_major_symmetric(r)).unwrap()).unwrap()
        }
        _ => {
            let c = Tensor4::from_slice(&project(&elastic_class(), &Tensor4::random(r))).unwrap();
            let p = Tensor3::from_slice(&project(&piezo_class(), &Tensor3::random(r))).unwrap();
            let q = Tensor3::from_slice(&project(&piezo_class(), &Tensor3::random(r))).unwrap();
            let m = EmModuli::new(
                c,
                p,
                q,
                Matrix3::random(r).sym(),
                Matrix3::random(r).sym(),
                Matrix3::random(r).sym(),
            )
            .unwrap();
            em_lagrangian(&m, PiezomagneticCoupling::default()).unwrap()
        }
    }
}

#[test]
fn criterion_09_euler_cross_validation() {
    let mut r = rng(9);
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let l = random_family_model(&mut r, i % 3);
        let y = PolyField::random(l.arity(), 3, &mut r);
        let x = point(&mut r);
        let a = euler_residual(&l, &y, &x).unwrap();
        let b = euler_residual_fd(&l.as_black_box(), &y, &x).unwrap();
        let d = a
            .values
            .iter()
            .zip(&b.values)
            .fold(0.0f64, |m, (p, q)| m.max((p - q).abs()));
        worst = worst.max(d / a.scale);
    }
    verdict(
        9,
        "Euler operator cross-validation",
        worst <= 1e-5,
        &format!("max normalized gap {worst:.1e} over 50 models"),
    );
}

#[test]
fn criterion_10_cli_contract() {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let certify = |file: &str| {
        Command::new(env!("CARGO_BIN_EXE_nulllag"))
            .args(["certify", data.join(file).to_str().unwrap(), "--trials", "16"])
            .output()
            .unwrap()
    };
    let codes: Vec<Option<i32>> = [
        "generators_minor.json",
        "em_coupling_only.json",
        "micropolar_tilde_null.json",
    ]
    .iter()
    .map(|f| certify(f).status.code())
    .collect();
    let codes_ok = codes == [Some(0), Some(1), Some(0)];

    let mut r = rng(10);
    let mut round_trip = true;
    for family in 0..3 {
        for _ in 0..10 {
            let model = match family {
                0 => MaterialModel::Micropolar(
                    MicropolarModuli::new(
                        Tensor4::random_major_symmetric(&mut r),
                        Tensor4::random_major_symmetric(&mut r),
                        Tensor4::random(&mut r),
                    )
                    .unwrap(),
                ),
                1 => {
                    MaterialModel::Quasicrystal(QcModuli::phason_only(Tensor4::random_major_symmetric(&mut r)).unwrap())
                }
                _ => MaterialModel::EmElast(EmModuli::zero().with_acpl(Matrix3::random(&mut r).sym()).unwrap()),
            };
            let text = model.to_json();
            let back = MaterialModel::from_json(&text).unwrap();
            round_trip &= back == model && back.to_json() == text;
        }
    }
    let (a, b) = (
        certify("micropolar_wryness_iso.json"),
        certify("micropolar_wryness_iso.json"),
    );
    let deterministic = a.stdout == b.stdout && !a.stdout.is_empty();
    verdict(
        10,
        "CLI contract",
        codes_ok && round_trip && deterministic,
        &format!("certify exit codes {codes:?}, bit-exact round trip {round_trip}, deterministic {deterministic}"),
    );
}
