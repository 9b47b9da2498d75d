//! Running a scenario file through the library, as `extscope run` does.
//!
//! `cargo run --example scenario_file -- scenarios/two_plane_union.toml`

fn main() {
    let file = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "scenarios/two_plane_union.toml".into());
    let code = extscope::cli::main_with_args(["extscope", "run", file.as_str()]);
    std::process::exit(code);
}
