//! Closed-form twisted periods from the residue expansions, and their
//! gradients annihilated by the Dunkl operators at `c = nu`.

use cherednik::dunkl::all_singular;
use cherednik::residues::{residue_parameter, residue_twisted_period, ResidueKind};
use cherednik::{build_root_system, GroupType, MultiPoly, Scalar};

fn main() -> cherednik::Result<()> {
    let cases = [
        (ResidueKind::A, GroupType::A, 2, 1, 1),
        (ResidueKind::B, GroupType::B, 3, 2, 1),
        (ResidueKind::DInfinity, GroupType::D, 4, 2, 0),
        (ResidueKind::DZero, GroupType::D, 4, 0, 1),
    ];
    for (kind, ty, n, s, m) in cases {
        let p = residue_twisted_period(kind, n, s, m)?;
        let nu = residue_parameter(kind, n, s, m);
        let rs = build_root_system(ty, n)?;
        let grad: Vec<MultiPoly> = (0..p.nvars()).map(|i| p.diff(i)).collect();
        let ok = all_singular(&rs, &Scalar::from(nu.clone()), &grad)?;
        println!("{kind} n={n} s={s} m={m}: nu = {nu}, degree {:?}, gradient singular: {ok}", p.total_degree());
        if p.len() <= 12 {
            println!("  {p}");
        }
    }
    Ok(())
}
