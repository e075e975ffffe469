//! Fit genus counts by a quasi-polynomial whose period comes from the
//! edges of the cone, then sum it.
//!
//!     cargo run --example quasi_polynomial -- 4

use nsg::enumeration::{count_by_genus, ClassFilter};
use nsg::quasipoly::{fit_counts, leading_coefficient_report, predict_quasi_period, AlphaForm};

fn main() -> nsg::Result<()> {
    let p: u64 = std::env::args().nth(1).map_or(4, |a| a.parse().expect("p"));
    let period = predict_quasi_period(p, &AlphaForm::ones(p))? as usize;
    let degree = p as usize - 2;
    let samples = period * (degree + 3);
    println!("predicted period {period}, degree {degree}, {samples} samples");

    let values: Vec<u64> = (0..samples as u64).map(|g| count_by_genus(p, g, ClassFilter::All)).collect::<nsg::Result<_>>()?;
    let qp = fit_counts(&values, period, degree)?;
    if period <= 12 {
        println!("G({p}, n):\n{qp}");
    }
    let lead = leading_coefficient_report(&qp);
    println!("leading coefficients constant: {}", lead.is_constant());

    let h = qp.partial_sum();
    println!("cumulative H({p}, n) has degree {:?}", h.degree());
    println!("H({p}, 100) = {}", nsg::quasipoly::format_rational(&h.evaluate(100)));
    Ok(())
}
