//! Build a semigroup from generators and read off its invariants.
//!
//!     cargo run --example classify -- 4 9 14

use nsg::Semigroup;

fn main() -> nsg::Result<()> {
    let gens: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("generator")).collect();
    let gens = if gens.is_empty() { vec![4, 9, 14] } else { gens };
    let p = *gens.iter().min().unwrap();
    let s = Semigroup::from_generators(&gens, p)?;

    println!("semigroup        {s}");
    println!("apery coords mu  {:?}", s.mu());
    println!("apery set        {:?}", s.apery());
    println!("genus            {}", s.genus());
    println!("frobenius        {}", s.frobenius_signed());
    println!("gaps             {:?}", s.gaps());
    println!("embedding dim    {}", s.embedding_dimension());
    let c = s.classify();
    println!("symmetric        {}", c.symmetric);
    println!("pseudo-symmetric {}", c.pseudo_symmetric);
    println!("max embedding    {}", c.max_embedding_dim);
    Ok(())
}
