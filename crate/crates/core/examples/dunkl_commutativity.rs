//! The Dunkl operators commute: random polynomials, random parameters.

use cherednik::dunkl::check_commutativity;
use cherednik::{build_root_system, GroupType, MultiPoly, Scalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() -> cherednik::Result<()> {
    let mut rng = StdRng::seed_from_u64(7);
    for (kind, n) in [(GroupType::A, 3), (GroupType::B, 3), (GroupType::D, 4)] {
        let rs = build_root_system(kind, n)?;
        let nx = rs.ambient_dim();
        let samples: Vec<MultiPoly> = (0..10)
            .map(|_| {
                MultiPoly::from_terms(
                    nx,
                    (0..3).map(|_| {
                        let e: Vec<u32> = (0..nx).map(|_| rng.gen_range(0..3)).collect();
                        (e, Scalar::int(rng.gen_range(-4..=4)))
                    }),
                )
            })
            .collect();
        let c = Scalar::frac(rng.gen_range(-5..=5), rng.gen_range(1..=5));
        let report = check_commutativity(&rs, &c, &samples)?;
        println!("{} c = {c}: {} commutators, {} nonzero", rs.spec(), report.pairs_checked, report.violations.len());
    }
    Ok(())
}
