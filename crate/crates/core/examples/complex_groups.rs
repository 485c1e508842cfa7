//! Singular polynomials for `G(l, 1, n)` over the cyclotomic field.

use cherednik::residues::{
    complex_family_singular, complex_group_action_check, complex_singular_family, ComplexGroupSpec,
};

fn main() -> cherednik::Result<()> {
    for (n, ell, q, s, m) in [(2, 3, 1, 0, 1), (3, 2, 1, 1, 0), (2, 4, 3, 1, 1)] {
        let spec = ComplexGroupSpec::new(n, ell, q, s, m)?;
        let fs = complex_singular_family(&spec);
        let params: Vec<String> = spec.parameters().iter().map(ToString::to_string).collect();
        println!("G({ell},1,{n}) q={q} s={s} m={m}: nu = {}, c_b = [{}]", spec.nu(), params.join(", "));
        for (j, f) in fs.iter().enumerate() {
            println!("  f{} = {f}", j + 1);
        }
        println!(
            "  singular: {}, equivariant: {}",
            complex_family_singular(&spec, &fs)?,
            complex_group_action_check(&spec, &fs)
        );
    }

    let op = ComplexGroupSpec::new(2, 3, 1, 0, 0)?.operator();
    let x = cherednik::MultiPoly::var(2, 0);
    println!("nabla_1 x1^2 = {}", op.apply(0, &x.pow(2))?);
    Ok(())
}
