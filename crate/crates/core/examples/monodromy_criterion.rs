// The monodromy criterion report for the builtin families.
//
//     cargo run --example monodromy_criterion

use toric_degen::builtin;
use toric_degen::residue::verify_max_monodromy_criterion;

fn main() {
    for name in ["cubic-curve", "quintic", "two-cubics", "empty"] {
        let spec = builtin::family(name).unwrap();
        let report = verify_max_monodromy_criterion(&spec);
        println!("{name} (n = {}, k = {}): {}", report.n, report.k, report.verdict);
        for c in &report.conditions {
            println!("  {:<15} {:<8} {}", c.id, c.verdict.status, c.verdict.reason);
        }
        assert_eq!(report.satisfied, name != "empty");
    }
}
