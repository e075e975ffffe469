//! Closed forms for small multiplicities and the growth of N(p, q).
//!
//!     cargo run --example asymptotics

use nsg::enumeration::{count_by_genus, count_containing, ClassFilter};
use nsg::paths::closed_form::ClosedForm;
use nsg::quasipoly::{asymptotic_ratio_check, format_rational, rational};

fn main() -> nsg::Result<()> {
    for form in ClosedForm::ALL {
        let (p, filter) = match form {
            ClosedForm::G3 => (3, ClassFilter::All),
            ClosedForm::G4 | ClosedForm::G4Cases => (4, ClassFilter::All),
            ClosedForm::G5 => (5, ClassFilter::All),
            ClosedForm::Gsym3 => (3, ClassFilter::Sym),
            ClosedForm::Gsym4 => (4, ClassFilter::Sym),
            ClosedForm::Gsym5 => (5, ClassFilter::Sym),
            ClosedForm::N3 => {
                let ok = (1..=60u64).filter(|q| q % 3 != 0).all(|q| {
                    form.evaluate(q).ok() == count_containing(3, q, ClassFilter::All).ok()
                });
                println!("{form:<8} q <= 60 agrees: {ok}");
                continue;
            }
        };
        let ok = (0..=30u64).all(|g| form.evaluate(g).ok() == count_by_genus(p, g, filter).ok());
        println!("{form:<8} g <= 30 agrees: {ok}");
    }

    let qs = (100..=160u64).filter(|q| q % 3 != 0);
    let report = asymptotic_ratio_check(
        |q| count_containing(3, q, ClassFilter::All),
        2,
        &(rational(1) / rational(12)),
        &(rational(61) / rational(100)),
        qs,
    )?;
    for row in report.rows.iter().step_by(10) {
        let ratio = row.value as f64 / (row.q * row.q) as f64;
        println!("N(3,{}) = {:>5}  N/q^2 = {ratio:.6}  |dev| * q = {}", row.q, row.value, format_rational(&row.scaled()));
    }
    println!("limit 1/12 = {:.6}, bound holds: {}", 1.0 / 12.0, report.passed());
    Ok(())
}
