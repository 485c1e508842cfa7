//! Invariant polynomial twisted periods: the space of solutions of a fixed
//! degree, and a check of the equations on a known solution.

use cherednik::shift::{homogeneous_twisted_periods, twisted_period_pde_check};
use cherednik::{build_root_system, GroupType, MultiPoly, Scalar};

fn main() -> cherednik::Result<()> {
    let cases = [(GroupType::A, 2, (1, 3), 2), (GroupType::A, 2, (1, 2), 2), (GroupType::D, 4, (1, 2), 4)];
    for (kind, n, (p, q), degree) in cases {
        let rs = build_root_system(kind, n)?;
        let nu = Scalar::frac(p, q);
        let sols = homogeneous_twisted_periods(&rs, &nu, degree)?;
        println!("{} nu = {nu} degree {degree}: dimension {}", rs.spec(), sols.len());
        for s in &sols {
            println!("  {s}");
        }
    }

    let b2 = build_root_system(GroupType::B, 2)?;
    let r2 = &MultiPoly::var(2, 0).pow(2) + &MultiPoly::var(2, 1).pow(2);
    for nu in [Scalar::frac(1, 4), Scalar::frac(1, 3)] {
        println!("B2: x1^2 + x2^2 solves the system at nu = {nu}: {}", twisted_period_pde_check(&b2, &r2, &nu)?);
    }
    Ok(())
}
