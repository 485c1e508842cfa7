//! Root systems of the classical types: positive roots, degrees and the
//! Coxeter number, with the identity `|R+| = n h / 2`.

use cherednik::{build_root_system, GroupType};

fn main() -> cherednik::Result<()> {
    for (kind, n) in [(GroupType::A, 3), (GroupType::B, 3), (GroupType::D, 4)] {
        let rs = build_root_system(kind, n)?;
        println!(
            "{}: {} positive roots, degrees {:?}, h = {}",
            rs.spec(),
            rs.roots().len(),
            rs.degrees(),
            rs.coxeter_number()
        );
        assert_eq!(rs.roots().len() * 2, n * rs.coxeter_number() as usize);
        for root in rs.simple_roots() {
            let v: Vec<String> = root.vector.iter().map(ToString::to_string).collect();
            println!("  simple ({})", v.join(", "));
        }
    }
    Ok(())
}
