//! Explicit formulas for small multiplicities, evaluated in exact rational
//! arithmetic and floored at the end.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Integer, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Known closed forms. `G4Cases` is the six-branch form of `G4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    G3,
    G4,
    G4Cases,
    Gsym3,
    Gsym4,
    G5,
    Gsym5,
    N3,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 8] = [
        ClosedForm::G3,
        ClosedForm::G4,
        ClosedForm::G4Cases,
        ClosedForm::Gsym3,
        ClosedForm::Gsym4,
        ClosedForm::G5,
        ClosedForm::Gsym5,
        ClosedForm::N3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::G3 => "G3",
            ClosedForm::G4 => "G4",
            ClosedForm::G4Cases => "G4Cases",
            ClosedForm::Gsym3 => "Gsym3",
            ClosedForm::Gsym4 => "Gsym4",
            ClosedForm::G5 => "G5",
            ClosedForm::Gsym5 => "Gsym5",
            ClosedForm::N3 => "N3",
        }
    }

    /// The formula's value before the final floor.
    pub fn exact(self, n: u64) -> Result<BigRational> {
        let x = BigRational::from_integer(BigInt::from(n));
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let one = || r(1, 1);
        Ok(match self {
            ClosedForm::G3 => (&x / r(3, 1)).floor() + one(),
            ClosedForm::G4 => (&x * &x / r(12, 1) + &x / r(2, 1)).floor() + one(),
            ClosedForm::G4Cases => {
                let c = [r(1, 1), r(5, 12), r(2, 3), r(3, 4), r(2, 3), r(5, 12)];
                &x * &x / r(12, 1) + &x / r(2, 1) + c[(n % 6) as usize].clone()
            }
            ClosedForm::Gsym3 => r((n % 3 != 2) as i64, 1),
            ClosedForm::Gsym4 => (&x / r(3, 1)).floor() + one(),
            ClosedForm::G5 => {
                let (slope, constant) = g5_remainder(n);
                &x * &x * &x / r(135, 1) + r(4, 45) * &x * &x + slope * &x + constant
            }
            ClosedForm::Gsym5 => {
                if n % 5 == 3 {
                    BigRational::zero()
                } else {
                    &x / r(6, 1) + gsym5_remainder(n)?
                }
            }
            ClosedForm::N3 => {
                if n.gcd(&3) != 1 {
                    return Err(Error::NotCoprime(3, n));
                }
                (&x * &x / r(12, 1) + &x / r(2, 1)).floor() + one()
            }
        })
    }

    pub fn evaluate(self, n: u64) -> Result<u64> {
        self.exact(n)?.floor().to_integer().to_u64().ok_or(Error::Overflow)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedForm::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFormula(s.to_string()))
    }
}

pub fn closed_form_reference(name: &str, arg: u64) -> Result<u64> {
    name.parse::<ClosedForm>()?.evaluate(arg)
}

/// `(num, den)`.
type Frac = (i64, i64);

/// Per-residue data for the multiplicity-5 formulas, indexed by `g mod 30`:
/// `R(i) = a g + b` as `(a, b)` and the `S(i)` constant, absent when
/// `i = 3 mod 5`.
#[rustfmt::skip]
const RESIDUES_5: [(Frac, Frac, Option<Frac>); 30] = [
    ((7, 15),  (1, 1),     Some((1, 1))),
    ((1, 3),   (77, 135),  Some((5, 6))),
    ((19, 45), (20, 27),   Some((2, 3))),
    ((3, 10),  (1, 10),    None),
    ((2, 5),   (68, 135),  Some((4, 3))),
    ((29, 90), (13, 54),   Some((1, 6))),
    ((13, 30), (3, 5),     Some((1, 1))),
    ((11, 30), (29, 54),   Some((5, 6))),
    ((16, 45), (91, 135),  None),
    ((3, 10),  (7, 10),    Some((1, 2))),
    ((7, 15),  (28, 27),   Some((4, 3))),
    ((13, 45), (28, 135),  Some((1, 6))),
    ((7, 15),  (4, 5),     Some((1, 1))),
    ((3, 10),  (-53, 270), None),
    ((16, 45), (37, 135),  Some((2, 3))),
    ((11, 30), (1, 2),     Some((1, 2))),
    ((13, 30), (131, 135), Some((4, 3))),
    ((29, 90), (119, 270), Some((1, 6))),
    ((2, 5),   (4, 5),     None),
    ((3, 10),  (109, 270), Some((5, 6))),
    ((19, 45), (20, 27),   Some((2, 3))),
    ((1, 3),   (1, 5),     Some((1, 2))),
    ((7, 15),  (113, 135), Some((4, 3))),
    ((23, 90), (-7, 270),  None),
    ((2, 5),   (4, 5),     Some((1, 1))),
    ((11, 30), (29, 54),   Some((5, 6))),
    ((7, 18),  (82, 135),  Some((2, 3))),
    ((11, 30), (1, 2),     Some((1, 2))),
    ((2, 5),   (68, 135),  None),
    ((23, 90), (47, 270),  Some((1, 6))),
];

fn ratio((a, b): (i64, i64)) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// `R(g mod 30)` as `(slope, constant)`.
pub fn g5_remainder(g: u64) -> (BigRational, BigRational) {
    let (slope, constant, _) = RESIDUES_5[(g % 30) as usize];
    (ratio(slope), ratio(constant))
}

/// `S(g mod 30)`; undefined on the `g = 3 mod 5` rows.
pub fn gsym5_remainder(g: u64) -> Result<BigRational> {
    RESIDUES_5[(g % 30) as usize]
        .2
        .map(ratio)
        .ok_or(Error::UndefinedBranch("Gsym5".into(), g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let g4: Vec<u64> = (0..9).map(|g| closed_form_reference("G4", g).unwrap()).collect();
        assert_eq!(g4, vec![1, 1, 2, 3, 4, 5, 7, 8, 10]);
        let g3: Vec<u64> = (0..9).map(|g| closed_form_reference("G3", g).unwrap()).collect();
        assert_eq!(g3, vec![1, 1, 1, 2, 2, 2, 3, 3, 3]);
        assert_eq!(closed_form_reference("N3", 7), Ok(8));
    }

    #[test]
    fn g4_forms_agree_and_are_integral() {
        for g in 0..200 {
            let cases = ClosedForm::G4Cases.exact(g).unwrap();
            assert!(cases.is_integer(), "g = {g}");
            assert_eq!(cases, ClosedForm::G4.exact(g).unwrap());
        }
    }

    #[test]
    fn g5_is_integral() {
        for g in 0..120 {
            assert!(ClosedForm::G5.exact(g).unwrap().is_integer(), "g = {g}");
            assert!(ClosedForm::Gsym5.exact(g).unwrap().is_integer(), "g = {g}");
        }
    }

    #[test]
    fn errors() {
        assert_eq!(closed_form_reference("G6", 1), Err(Error::UnknownFormula("G6".into())));
        assert_eq!(closed_form_reference("N3", 6), Err(Error::NotCoprime(3, 6)));
        assert_eq!(gsym5_remainder(8), Err(Error::UndefinedBranch("Gsym5".into(), 8)));
        assert_eq!(closed_form_reference("Gsym5", 8), Ok(0));
    }
}
