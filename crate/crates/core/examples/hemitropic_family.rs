//! Hemitropic models after imposing the derived null constraints, certified
//! with general and with curl-free microrotation fields.

use nulllag::micropolar::{hemitropic_null_family, micropolar_lagrangian, HemitropicParams};
use nulllag::variational::{certify_null, CertifyOptions, FieldKind};

fn main() -> nulllag::Result<()> {
    let curl_free = CertifyOptions {
        fields: FieldKind::CurlFreeBlock { start: 3 },
        ..CertifyOptions::default()
    };
    println!("lambda  zeta   conditions  general   curl-free");
    for lambda in [-1.0, 0.0, 1.0] {
        for zeta in [-1.0, 0.0, 1.0] {
            let p = HemitropicParams::constrained(lambda, 0.5, zeta);
            let (report, _) = hemitropic_null_family(&p);
            let l = micropolar_lagrangian(&p.moduli()?)?;
            let general = certify_null(&l, 16, 3, 3, &CertifyOptions::default())?;
            let gradient = certify_null(&l, 16, 3, 3, &curl_free)?;
            println!(
                "{lambda:>6} {zeta:>5}   {:<10}  {:.2e}  {:.2e}",
                report.passed, general.max_normalized_residual, gradient.max_normalized_residual
            );
        }
    }
    Ok(())
}
