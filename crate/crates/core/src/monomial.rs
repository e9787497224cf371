//! Monomials living in a single tensor slot, with their graded-commutative
//! normal form.
//!
//! A [`FactorMonomial`] is formal data: it stores sorted `(generator,
//! exponent)` pairs and does not know the coefficient field. Whether an
//! odd-degree square collapses to zero depends on the field characteristic,
//! so that rule is applied by the normalizing operations here and by element
//! construction, never by the container itself.

use std::cmp::Ordering;
use std::fmt;

use crate::context::Generator;
use crate::scalar::Field;

/// A multiplicative sign produced by reordering graded factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^parity`.
    pub fn from_parity(parity: u64) -> Sign {
        if parity.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// A product of generators inside one tensor slot, in canonical order.
///
/// Invariants: factor names are strictly increasing and every exponent is at
/// least one. The empty product is the slot unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorMonomial {
    factors: Vec<(Generator, u32)>,
}

impl FactorMonomial {
    /// The slot unit 1.
    pub fn unit() -> FactorMonomial {
        FactorMonomial {
            factors: Vec::new(),
        }
    }

    /// A single generator to the first power.
    pub fn generator(g: &Generator) -> FactorMonomial {
        FactorMonomial {
            factors: vec![(g.clone(), 1)],
        }
    }

    /// `g^exp`, the unit when `exp` is zero.
    pub fn power(g: &Generator, exp: u32) -> FactorMonomial {
        if exp == 0 {
            FactorMonomial::unit()
        } else {
            FactorMonomial {
                factors: vec![(g.clone(), exp)],
            }
        }
    }

    /// Builds from pairs that are already strictly name-sorted with positive
    /// exponents. Violations are a caller bug.
    pub fn from_sorted_factors(factors: Vec<(Generator, u32)>) -> FactorMonomial {
        assert!(
            factors.windows(2).all(|w| w[0].0.name() < w[1].0.name()),
            "factor names must be strictly increasing"
        );
        assert!(
            factors.iter().all(|&(_, e)| e >= 1),
            "exponents must be positive"
        );
        FactorMonomial { factors }
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total degree, counting multiplicity.
    pub fn degree(&self) -> u64 {
        self.factors
            .iter()
            .map(|(g, e)| u64::from(g.degree()) * u64::from(*e))
            .sum()
    }

    pub fn exponent_of(&self, name: &str) -> u32 {
        self.factors
            .iter()
            .find(|(g, _)| g.name() == name)
            .map_or(0, |&(_, e)| e)
    }

    /// Slotwise divisibility: every factor of `self` appears in `other` with
    /// at least the same exponent.
    pub fn divides(&self, other: &FactorMonomial) -> bool {
        self.factors
            .iter()
            .all(|(g, e)| other.exponent_of(g.name()) >= *e)
    }

    /// True when some odd-degree generator carries exponent two or more.
    pub fn has_odd_square(&self) -> bool {
        self.factors.iter().any(|(g, e)| g.is_odd() && *e >= 2)
    }

    /// Whether this formal monomial is nonzero over the field: odd squares
    /// vanish unless the characteristic is two.
    pub fn is_nonzero_over(&self, field: Field) -> bool {
        field.has_characteristic_two() || !self.has_odd_square()
    }
}

impl Ord for FactorMonomial {
    /// The unit sorts after every non-unit; non-units compare by their factor
    /// lists. This puts words with early occupied slots first when words are
    /// compared slot by slot.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_unit(), other.is_unit()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => self.factors.cmp(&other.factors),
        }
    }
}

impl PartialOrd for FactorMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FactorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for (g, e) in &self.factors {
            write!(f, "{}", g.name())?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Normalizes a written product of generators into canonical order.
///
/// The sign is `(-1)^e` where `e` counts inversion pairs weighted by degree:
/// the parity accumulated by stably sorting the sequence by name, picking up
/// `deg(u)*deg(v)` whenever `u` moves past `v`. Returns `None` for the
/// monomial when the result contains an odd-degree square and the field does
/// not have characteristic two.
pub fn normalize_factor(gens: &[Generator], field: Field) -> (Sign, Option<FactorMonomial>) {
    let mut parity = 0u64;
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            if gens[i].name() > gens[j].name() {
                parity += u64::from(gens[i].degree() % 2) * u64::from(gens[j].degree() % 2);
            }
        }
    }
    let sign = Sign::from_parity(parity);

    let mut sorted: Vec<&Generator> = gens.iter().collect();
    sorted.sort_by(|a, b| a.name().cmp(b.name()));
    let mut factors: Vec<(Generator, u32)> = Vec::new();
    for g in sorted {
        match factors.last_mut() {
            Some((last, e)) if last.name() == g.name() => *e += 1,
            _ => factors.push(((*g).clone(), 1)),
        }
    }
    let monomial = FactorMonomial { factors };
    if monomial.is_nonzero_over(field) {
        (sign, Some(monomial))
    } else {
        (sign, None)
    }
}

/// Multiplies two canonical monomials within one slot, over the given field.
///
/// The sign moves every factor of `v` past the factors of `u` with greater
/// name, without expanding either power: each crossing contributes the
/// product of the two block degrees.
pub fn mul_monomials(
    u: &FactorMonomial,
    v: &FactorMonomial,
    field: Field,
) -> (Sign, Option<FactorMonomial>) {
    let mut parity = 0u64;
    for (g, ge) in u.factors() {
        let g_par = u64::from(g.degree() % 2) * u64::from(ge % 2);
        for (h, he) in v.factors() {
            if h.name() < g.name() {
                parity += g_par * u64::from(h.degree() % 2) * u64::from(he % 2);
            }
        }
    }
    let sign = Sign::from_parity(parity);

    let mut factors: Vec<(Generator, u32)> = Vec::new();
    let (mut iu, mut iv) = (0, 0);
    while iu < u.factors.len() || iv < v.factors.len() {
        let next = match (u.factors.get(iu), v.factors.get(iv)) {
            (Some((gu, eu)), Some((gv, ev))) => match gu.name().cmp(gv.name()) {
                Ordering::Less => {
                    iu += 1;
                    (gu.clone(), *eu)
                }
                Ordering::Greater => {
                    iv += 1;
                    (gv.clone(), *ev)
                }
                Ordering::Equal => {
                    iu += 1;
                    iv += 1;
                    (gu.clone(), eu + ev)
                }
            },
            (Some((gu, eu)), None) => {
                iu += 1;
                (gu.clone(), *eu)
            }
            (None, Some((gv, ev))) => {
                iv += 1;
                (gv.clone(), *ev)
            }
            (None, None) => unreachable!(),
        };
        factors.push(next);
    }
    let monomial = FactorMonomial { factors };
    if monomial.is_nonzero_over(field) {
        (sign, Some(monomial))
    } else {
        (sign, None)
    }
}
