//! Small exact-arithmetic helpers shared by the lattice and character modules.
//!
//! Everything in this crate computes over `BigInt`/`BigRational`; floating
//! point is never used.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

/// Dot product of a rational vector with an integer vector of equal length.
pub fn dot_rat_int(a: &[Rat], b: &[i64]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if *y != 0 {
            acc += x * rat(*y);
        }
    }
    acc
}

pub fn dot_rat_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Exact integer value of a rational known to be integral.
pub fn rat_to_int(r: &Rat) -> Result<Int> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NotInLattice(format!("pairing value {r} is not an integer")))
    }
}

pub fn is_even(n: &Int) -> bool {
    (n % int(2)).is_zero()
}

/// Least common multiple of the denominators appearing in `vecs`.
pub fn common_denominator<'a>(vecs: impl Iterator<Item = &'a [Rat]>) -> Int {
    let mut d = Int::one();
    for v in vecs {
        for x in v {
            d = num_integer::lcm(d, x.denom().clone());
        }
    }
    d.abs()
}

/// Parse a rational written as `a` or `a/b` (ASCII, optional sign).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    t.parse::<Rat>().map_err(|e| Error::Parse(format!("bad rational `{t}`: {e}")))
}

/// Canonical text form: `a` for integers, `a/b` otherwise.
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

pub fn parse_rat_vector(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(parse_rat).collect()
}

pub fn rat_vec_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("-1/2").unwrap(), rat_frac(-1, 2));
        assert_eq!(parse_rat(" 7/14 ").unwrap(), rat_frac(1, 2));
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn rational_round_trip_is_canonical() {
        for s in ["0", "5", "-3", "1/2", "-7/3"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_string(&r), s);
        }
    }

    #[test]
    fn dot_products_are_exact() {
        let a = vec![rat_frac(1, 2), rat_frac(1, 2), rat(0)];
        assert_eq!(dot_rat_int(&a, &[1, 1, -4]), rat(1));
    }

    #[test]
    fn common_denominator_is_lcm() {
        let v1 = vec![rat_frac(1, 2), rat(3)];
        let v2 = vec![rat_frac(2, 3)];
        let d = common_denominator([v1.as_slice(), v2.as_slice()].into_iter());
        assert_eq!(d, int(6));
    }

    #[test]
    fn mu_vector_parsing() {
        let v = parse_rat_vector("1,0,-1/2").unwrap();
        assert_eq!(v, vec![rat(1), rat(0), rat_frac(-1, 2)]);
    }
}
