//! The cone of Apéry coordinates for a fixed multiplicity: inequalities,
//! vertex, edges of the homogeneous cone and the pseudo-symmetric loci.
//!
//!     cargo run --example cone -- 5

use nsg::cone::{build_cone, edges_of_cone_star, in_some_sigma_locus, sigma_star_set};
use nsg::enumeration::{enumerate_by_genus, ClassFilter};
use nsg::quasipoly::format_rational;

fn main() -> nsg::Result<()> {
    let p: u64 = std::env::args().nth(1).map_or(4, |a| a.parse().expect("p"));
    let cone = build_cone(p)?;

    println!("{} facets in dimension {}", cone.facet_count(), cone.dim());
    for ineq in cone.inequalities() {
        println!("  {ineq}");
    }
    let vertex: Vec<String> = cone.vertex().iter().map(format_rational).collect();
    println!("vertex ({})", vertex.join(", "));
    println!("edges  {}", edges_of_cone_star(p)?);

    let loci = sigma_star_set(p)?;
    println!("{} pseudo-symmetric loci", loci.len());
    for locus in &loci {
        let eqs: Vec<String> = locus.equations.iter().map(|e| e.to_string()).collect();
        println!("  sigma {:?}: {}", locus.sigma, eqs.join(", "));
    }

    // Every pseudo-symmetric point of small genus lies on one of the loci.
    for g in 1..=8 {
        for s in enumerate_by_genus(p, g, ClassFilter::Psym)? {
            assert!(in_some_sigma_locus(&loci, s.mu())?);
            println!("  g={g} {s} mu={:?} interior={}", s.mu(), cone.contains_interior(s.mu())?);
        }
    }
    Ok(())
}
