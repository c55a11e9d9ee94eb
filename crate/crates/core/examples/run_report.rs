// Builds the same JSON reports the command-line tool prints.
//
//     cargo run --example run_report

use toric_degen::builtin;
use toric_degen::cli::commands;
use toric_degen::cli::render_human;

fn main() {
    let spec = builtin::family("two-cubics").unwrap();
    let report = commands::degenerate(&spec);
    print!("{}", render_human(&report.to_json()));
    println!("{}", serde_json::to_string_pretty(&report.results.values["betti"]).unwrap());
    assert_eq!(report.exit_code(), 0);
}
