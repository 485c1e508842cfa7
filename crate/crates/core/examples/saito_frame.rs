//! Flat coordinates of the orbit space and the flat metric `eta = d g / d t^1`.
//!
//! `cargo run --example saito_frame -- D4`

use cherednik::saito::{saito_frame, verify_saito};
use cherednik::{GroupSpec, RootSystem};

fn main() -> cherednik::Result<()> {
    let spec: GroupSpec = std::env::args().nth(1).as_deref().unwrap_or("B3").parse()?;
    let rs = RootSystem::from_spec(spec)?;
    let frame = saito_frame(&rs)?;
    println!("{spec}: degrees {:?}, h = {}", frame.degrees, frame.h);
    for (a, t) in frame.t.iter().enumerate() {
        println!("t{} = {t}", a + 1);
    }
    let report = verify_saito(&rs, &frame);
    let eta = report.eta.as_ref().expect("metric rewritten in flat coordinates");
    println!("eta:");
    for row in eta.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  [{}]", cells.join(", "));
    }
    println!("flat: {}", report.ok());
    Ok(())
}
