//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//! Custom harness, so the lines show without `--nocapture`.

use cherednik::selftest;

fn main() {
    let criteria: [fn() -> selftest::CriterionResult; 10] = [
        selftest::saito_flatness,
        selftest::saito_derivatives_singular,
        selftest::shift_families,
        selftest::top_pairing,
        selftest::route_equivalence,
        selftest::isotypic_dimensions,
        selftest::d_zero_singular,
        selftest::complex_groups,
        selftest::property_suites,
        selftest::type_a_example,
    ];
    let mut failed = 0;
    for run in criteria {
        let r = run();
        println!("{r}");
        failed += usize::from(!r.passed);
    }
    println!("acceptance: {failed} failed");
    std::process::exit(i32::from(failed > 0));
}
