// Constant-term period series of the Fermat quintic and cubic.
//
//     cargo run --example period_series

use toric_degen::builtin;
use toric_degen::residue::{hypersurface_laurent, period_series};

fn main() {
    for (name, order) in [("cubic-curve", 9), ("quintic", 10)] {
        let spec = builtin::family(name).unwrap();
        let f = hypersurface_laurent(spec.fan(), &spec.sections()[0]).unwrap();
        let s = period_series(&f, order).unwrap();
        let coeffs: Vec<String> = s.coeffs.iter().map(ToString::to_string).collect();
        println!("{name}: f = {f}");
        println!("  [{}]  ({})", coeffs.join(", "), s.normalization());
    }
}
