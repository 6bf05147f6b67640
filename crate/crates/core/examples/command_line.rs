//! The `nulllag` subcommands driven in-process on the bundled model files.

use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let runs: [&[&str]; 4] = [
        &["check", "micropolar_isotropic.json"],
        &["split", "micropolar_wryness_iso.json"],
        &["certify", "generators_minor.json", "--trials", "8"],
        &["certify", "em_coupling_only.json", "--trials", "8"],
    ];
    for args in runs {
        let mut argv = vec![
            "nulllag".to_string(),
            args[0].to_string(),
            data.join(args[1]).display().to_string(),
        ];
        argv.extend(args[2..].iter().map(|s| s.to_string()));
        argv.extend(["--format".into(), "text".into()]);
        let mut out = Vec::new();
        let code = nulllag::cli::run(&argv, &mut out, &mut std::io::stderr());
        println!(
            "$ nulllag {}\n{}exit {code}\n",
            args.join(" "),
            String::from_utf8_lossy(&out)
        );
    }
}
