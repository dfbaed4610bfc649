//! Loading a TOML manifold document and producing reports.

use crcheck::manifold_file::ManifoldSpec;
use crcheck::report::{cmd_discs, cmd_minimal, cmd_validate, summary, RunConfig};

const DOC: &str = r#"
name = "heisenberg"
n = 2
polynomials = ["2*z1*zb1 - z2 - zb2"]
base_points = [["0", "0"], ["1", "1+I"], ["I", "1-2*I"]]
"#;

fn main() -> crcheck::error::Result<()> {
    let spec = ManifoldSpec::from_toml(DOC)?;
    let config = RunConfig::default();
    print!("{}", summary(&cmd_validate(&spec, &config)?));
    print!("{}", summary(&cmd_minimal(&spec, &[], &config)?));
    let discs = cmd_discs(&spec, &config)?;
    print!("{}", summary(&discs));
    println!("JSON report: {} bytes", discs.to_json().len());

    let broken = ManifoldSpec { polynomials: vec!["z1 + ".into()], ..spec };
    if let Err(e) = cmd_validate(&broken, &config) {
        println!("{e}");
    }
    Ok(())
}
