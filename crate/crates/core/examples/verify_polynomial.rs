//! Read a polynomial from JSON and test it against the Dunkl operators.
//!
//! `cargo run --example verify_polynomial -- B2 1/4 poly.json`

use cherednik::dunkl::is_singular;
use cherednik::field::parse_rational;
use cherednik::serial::{poly_from_str, poly_to_string};
use cherednik::{GroupSpec, MultiPoly, RootSystem, Scalar};

fn main() -> cherednik::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec: GroupSpec = args.next().as_deref().unwrap_or("B2").parse()?;
    let c = Scalar::from(parse_rational(args.next().as_deref().unwrap_or("1/4"))?);
    let rs = RootSystem::from_spec(spec)?;
    let p = match args.next() {
        Some(path) => poly_from_str(&std::fs::read_to_string(path)?)?,
        None => {
            let p = MultiPoly::var(rs.ambient_dim(), 0);
            println!("no file given, using\n{}", poly_to_string(&p));
            p
        }
    };
    let cert = is_singular(&rs, &c, &p)?;
    for (i, r) in cert.residuals.iter().enumerate() {
        println!("nabla_{} p = {r}", i + 1);
    }
    println!("singular at c = {c}: {}", cert.singular);
    Ok(())
}
