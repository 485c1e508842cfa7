//! Singular polynomials from the shift recursion, certified against the
//! Dunkl operators directly.
//!
//! `cargo run --example singular_family -- B3 2 1`

use cherednik::saito::saito_frame;
use cherednik::shift::certified_family;
use cherednik::{GroupSpec, RootSystem};

fn main() -> cherednik::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec: GroupSpec = args.next().as_deref().unwrap_or("B2").parse()?;
    let beta: usize = args.next().map_or(Ok(1), |s| s.parse()).expect("beta is an integer");
    let m: u32 = args.next().map_or(Ok(1), |s| s.parse()).expect("m is an integer");

    let rs = RootSystem::from_spec(spec)?;
    let frame = saito_frame(&rs)?;
    let fam = certified_family(&rs, &frame, beta, m)?.normalized();
    println!("{spec}, beta = {beta}, m = {m}: singular at c = {}", fam.c);
    for (i, q) in fam.q.iter().enumerate() {
        println!("q{} = {q}", i + 1);
    }
    println!("Q = {}", fam.potential);
    let cert = fam.certificate.as_ref().unwrap();
    println!("{cert:#?}");
    assert!(cert.ok(rs.rank()));
    Ok(())
}
