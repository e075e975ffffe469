//! Admissible lattice paths in the triangle under the line px + qy = pq,
//! and the semigroups they encode.
//!
//!     cargo run --example lattice_paths -- 4 9

use nsg::paths::{admissible_paths, count_admissible, semigroup_from_path, verify_path_recursions, PathSystem};

fn main() -> nsg::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer"));
    let p = args.next().unwrap_or(4);
    let q = args.next().unwrap_or(9);
    let sys = PathSystem::new(p, q)?;

    println!("{} lattice points, {} non-empty admissible paths", sys.points().len(), count_admissible(&sys));
    for path in admissible_paths(&sys) {
        let s = semigroup_from_path(&sys, &path)?;
        let tag = if s.is_symmetric() {
            "sym"
        } else if s.is_pseudo_symmetric() {
            "psym"
        } else {
            ""
        };
        println!("  rows {:<10} corners {:<24} {s} {tag}", format!("{:?}", path.rows()), path.to_string());
    }

    let report = verify_path_recursions(sys.p(), 40)?;
    println!("recursions up to q=40: {}", if report.passed() { "hold" } else { "FAIL" });
    Ok(())
}
