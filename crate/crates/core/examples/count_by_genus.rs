//! Counts of semigroups with given multiplicity and genus, split by class.
//!
//!     cargo run --example count_by_genus -- 5 20 4

use nsg::{ClassFilter, Enumerator};

fn main() -> nsg::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer"));
    let p = args.next().unwrap_or(4);
    let g_max = args.next().unwrap_or(20);
    let workers = args.next().unwrap_or(1) as usize;
    let en = Enumerator::with_workers(workers);

    let classes = [ClassFilter::All, ClassFilter::Medim, ClassFilter::Sym, ClassFilter::Psym];
    let tables: Vec<_> = classes.iter().map(|&f| en.genus_table(p, 0..=g_max, f)).collect::<nsg::Result<_>>()?;
    println!("{:>4} {:>8} {:>8} {:>8} {:>8} {:>10}", "g", "all", "medim", "sym", "psym", "cumulative");
    for g in 0..=g_max {
        let row: Vec<u64> = tables.iter().map(|t| t.get(g).unwrap()).collect();
        let h = en.cumulative_by_genus(p, g)?;
        println!("{g:>4} {:>8} {:>8} {:>8} {:>8} {h:>10}", row[0], row[1], row[2], row[3]);
    }
    Ok(())
}
