//! Runs the command-line front end in-process on the bundled scenario,
//! the same as invoking the `fcl-rel` binary.
//!
//!     cargo run --example cli_tour

use std::io;
use std::path::Path;

use fcl_reliability::cli::run;

fn main() {
    let scn = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios/paper_repro.scn");
    let scn = scn.to_str().expect("utf-8 path");
    let commands: [&[&str]; 5] = [
        &["mttf", "--scenario", scn],
        &["compare", "--scenario", scn],
        &["region", "--tj", "106.2", "--tjh", "44.9"],
        &["cost", "--scenario", scn, "--rank"],
        &[
            "sweep",
            "--scenario",
            scn,
            "--param",
            "t_a",
            "--from",
            "-20",
            "--to",
            "60",
            "--steps",
            "5",
        ],
    ];
    for args in commands {
        println!("$ fcl-rel {}", args.join(" "));
        let code = run(
            std::iter::once("fcl-rel").chain(args.iter().copied()),
            &mut io::stdout(),
            &mut io::stderr(),
        );
        println!("(exit {code})\n");
    }
}
