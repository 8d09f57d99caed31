#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const BIN: &str = env!("CARGO_BIN_EXE_taxicab");

/// Set to any value to rewrite the golden files instead of comparing.
pub const BLESS_ENV: &str = "TAXICAB_BLESS";

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("TAXI_QUAD_TOL").output().expect("spawn taxicab")
}

/// A command whose output is pinned by a golden file.
pub struct Golden {
    pub name: &'static str,
    pub args: Vec<String>,
    /// True when the output is an SVG written via `--out`.
    pub svg: bool,
}

fn cmd(name: &'static str, args: &[&str]) -> Golden {
    Golden { name, args: args.iter().map(|s| s.to_string()).collect(), svg: false }
}

fn plot(name: &'static str, shape: &str) -> Golden {
    let args = vec!["plot".into(), "--shape".into(), shape.into(), "--mirror".into()];
    Golden { name, args, svg: true }
}

pub fn goldens() -> Vec<Golden> {
    vec![
        cmd("measure_sphere_volume.json", &[
            "measure", "--quantity", "volume", "--shape", r#"{"shape":"sphere","params":{"r":1}}"#, "--oracle", "100000", "--json",
        ]),
        cmd("measure_quarter_circle.json", &[
            "measure", "--quantity", "arclength", "--profile", r#"{"catalog":"euclidean_circle_quadrant","params":{"r":1}}"#, "--json",
        ]),
        cmd("measure_area_scale.json", &[
            "measure", "--quantity", "area_scale", "--alpha", "0.7853981633974483", "--beta", "0", "--json",
        ]),
        cmd("measure_octagon_surface.csv", &[
            "measure", "--quantity", "surface", "--shape", r#"{"shape":"ellipsoid","params":{"a":2,"b":1.5,"s":5}}"#, "--oracle", "1000",
        ]),
        cmd("verify.csv", &["verify"]),
        cmd("table_quarter_circle.csv", &[
            "table", "--quantity", "arclength", "--profile", r#"{"catalog":"euclidean_circle_quadrant","params":{"r":1}}"#, "--ns", "10,100,1000",
        ]),
        plot("plot_circle.svg", r#"{"shape":"circle","params":{"r":1}}"#),
        plot("plot_sphere.svg", r#"{"shape":"sphere","params":{"r":2}}"#),
        plot("plot_cylinder.svg", r#"{"shape":"cylinder","params":{"r":1,"h":2}}"#),
        plot("plot_paraboloid.svg", r#"{"shape":"paraboloid","params":{"a":1,"h":3}}"#),
        plot("plot_ellipsoid.svg", r#"{"shape":"ellipsoid","params":{"a":2,"b":1.5,"s":5}}"#),
    ]
}

impl Golden {
    /// Runs the command once; `tag` keeps concurrent SVG outputs apart.
    pub fn produce(&self, tag: &str) -> Result<Vec<u8>, String> {
        let mut args = self.args.clone();
        let out_path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(format!("{tag}-{}", self.name));
        if self.svg {
            args.push("--out".into());
            args.push(out_path.display().to_string());
        }
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = run(&refs);
        if !out.status.success() {
            return Err(format!("{} exited {:?}: {}", self.name, out.status.code(), String::from_utf8_lossy(&out.stderr)));
        }
        if self.svg {
            fs::read(&out_path).map_err(|e| format!("{}: {e}", out_path.display()))
        } else {
            Ok(out.stdout)
        }
    }

    /// Compares `bytes` with the stored golden file, or rewrites it when blessing.
    pub fn check(&self, bytes: &[u8]) -> Result<(), String> {
        let path = golden_dir().join(self.name);
        if std::env::var_os(BLESS_ENV).is_some() {
            fs::write(&path, bytes).map_err(|e| e.to_string())?;
            return Ok(());
        }
        let want = fs::read(&path).map_err(|e| format!("{}: {e} (run with {BLESS_ENV}=1 to create)", path.display()))?;
        if want != bytes {
            return Err(format!("{} differs from golden", self.name));
        }
        Ok(())
    }
}
