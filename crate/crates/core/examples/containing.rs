//! Numerical semigroups containing both p and q (any multiplicity).
//!
//!     cargo run --example containing -- 4 15

use nsg::{ClassFilter, Enumerator};

fn main() -> nsg::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer"));
    let p = args.next().unwrap_or(4);
    let q = args.next().unwrap_or(15);
    let en = Enumerator::default();

    let all = en.enumerate_containing(p, q, ClassFilter::All)?;
    println!("N({p},{q}) = {}", all.len());
    for f in [ClassFilter::Medim, ClassFilter::Sym, ClassFilter::Psym] {
        println!("  {f:<5} {}", en.count_containing(p, q, f)?);
    }
    for s in all.iter().filter(|s| s.is_symmetric()) {
        println!("  sym  {s}  genus {}  frobenius {}", s.genus(), s.frobenius_signed());
    }
    Ok(())
}
