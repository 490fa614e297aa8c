//! Running a named experiment from a configuration string, as the `dps`
//! binary does.
//!
//!     cargo run --release --example run_experiment -- fig4

use dirac_wigner::experiments::{run, RunConfig};

fn main() -> dirac_wigner::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "fig5".into());
    let mut cfg = RunConfig::from_toml_str("n = 512\ncsv = false\n")?;
    cfg.out_dir = std::env::temp_dir().join("dirac-wigner-runs");
    let report = run(&name, &cfg)?;
    print!("{}", report.to_text());
    for path in &report.artifacts {
        println!("wrote {}", path.display());
    }
    Ok(())
}
