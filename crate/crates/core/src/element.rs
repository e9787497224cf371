//! Elements of the tensor power: normalized linear combinations of words.

use std::collections::BTreeMap;

use crate::error::AlgebraError;
use crate::scalar::{Field, Scalar};
use crate::word::TensorWord;

/// A finite linear combination of tensor words with nonzero coefficients,
/// keyed by word in canonical order.
///
/// Two elements are equal exactly when they are the same map, so structural
/// equality is mathematical equality. Words that vanish over the carrier
/// field (odd squares away from characteristic two) are dropped on entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    arity: usize,
    field: Field,
    terms: BTreeMap<TensorWord, Scalar>,
}

impl Element {
    pub fn zero(arity: usize, field: Field) -> Element {
        Element {
            arity,
            field,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit: coefficient one on the all-unit word.
    pub fn one(arity: usize, field: Field) -> Element {
        let mut terms = BTreeMap::new();
        terms.insert(TensorWord::unit(arity), field.one());
        Element {
            arity,
            field,
            terms,
        }
    }

    /// Builds an element from term pairs, merging duplicate words and
    /// dropping zero coefficients and field-vanishing words.
    pub fn from_terms(
        arity: usize,
        field: Field,
        terms: impl IntoIterator<Item = (TensorWord, Scalar)>,
    ) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(arity, field);
        for (word, coeff) in terms {
            out.add_term(word, coeff)?;
        }
        Ok(out)
    }

    /// Adds one term in place, maintaining all invariants.
    pub fn add_term(&mut self, word: TensorWord, coeff: Scalar) -> Result<(), AlgebraError> {
        if word.arity() != self.arity {
            return Err(AlgebraError::ArityMismatch {
                left: self.arity,
                right: word.arity(),
            });
        }
        if coeff.field() != self.field {
            return Err(AlgebraError::FieldMismatch {
                left: self.field,
                right: coeff.field(),
            });
        }
        if coeff.is_zero() || !word.is_nonzero_over(self.field) {
            return Ok(());
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff)?;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &TensorWord) -> Option<&Scalar> {
        self.terms.get(word)
    }

    fn check_compatible(&self, rhs: &Element) -> Result<(), AlgebraError> {
        if self.arity != rhs.arity {
            return Err(AlgebraError::ArityMismatch {
                left: self.arity,
                right: rhs.arity,
            });
        }
        if self.field != rhs.field {
            return Err(AlgebraError::FieldMismatch {
                left: self.field,
                right: rhs.field,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Element) -> Result<Element, AlgebraError> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (word, coeff) in rhs.terms() {
            out.add_term(word.clone(), coeff.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Element) -> Result<Element, AlgebraError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Element {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c.neg()))
            .collect();
        Element {
            arity: self.arity,
            field: self.field,
            terms,
        }
    }

    /// Scalar multiple. A zero scalar yields the zero element.
    pub fn scale(&self, c: &Scalar) -> Result<Element, AlgebraError> {
        if c.field() != self.field {
            return Err(AlgebraError::FieldMismatch {
                left: self.field,
                right: c.field(),
            });
        }
        if c.is_zero() {
            return Ok(Element::zero(self.arity, self.field));
        }
        let mut terms = BTreeMap::new();
        for (word, coeff) in &self.terms {
            terms.insert(word.clone(), coeff.mul(c)?);
        }
        Ok(Element {
            arity: self.arity,
            field: self.field,
            terms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Generator;
    use crate::monomial::FactorMonomial;

    fn a_word(arity: usize, position: usize) -> TensorWord {
        let a = Generator::new("a", 1).unwrap();
        TensorWord::with_slots(arity, &[(position, FactorMonomial::generator(&a))]).unwrap()
    }

    #[test]
    fn opposite_terms_cancel_to_zero() {
        let q = Field::Rationals;
        let w = a_word(2, 1);
        let x = Element::from_terms(2, q, [(w.clone(), q.one()), (w, q.integer(-1))]).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn distinct_words_stay_separate() {
        let q = Field::Rationals;
        let x =
            Element::from_terms(2, q, [(a_word(2, 1), q.one()), (a_word(2, 2), q.one())]).unwrap();
        assert_eq!(x.term_count(), 2);
        assert_eq!(x.coefficient(&a_word(2, 1)), Some(&q.one()));
    }

    #[test]
    fn vanishing_words_are_dropped_on_entry() {
        let a = Generator::new("a", 1).unwrap();
        let sq = TensorWord::with_slots(2, &[(1, FactorMonomial::power(&a, 2))]).unwrap();
        let q = Field::Rationals;
        let x = Element::from_terms(2, q, [(sq.clone(), q.one())]).unwrap();
        assert!(x.is_zero());
        let f2 = Field::Prime(2);
        let y = Element::from_terms(2, f2, [(sq, f2.one())]).unwrap();
        assert_eq!(y.term_count(), 1);
    }

    #[test]
    fn mixing_arities_or_fields_fails() {
        let q = Field::Rationals;
        let x = Element::one(2, q);
        let y = Element::one(3, q);
        assert!(x.add(&y).is_err());
        let z = Element::one(2, Field::Prime(2));
        assert!(x.add(&z).is_err());
        assert!(x.scale(&Field::Prime(2).one()).is_err());
    }

    #[test]
    fn characteristic_wraps_coefficients() {
        let f3 = Field::Prime(3);
        let w = a_word(2, 1);
        let mut x = Element::zero(2, f3);
        for _ in 0..3 {
            x.add_term(w.clone(), f3.one()).unwrap();
        }
        assert!(x.is_zero());
    }

    #[test]
    fn scaling_by_zero_clears() {
        let q = Field::Rationals;
        let x = Element::one(2, q);
        assert!(x.scale(&q.zero()).unwrap().is_zero());
        let y = x.scale(&q.integer(5)).unwrap();
        assert_eq!(y.coefficient(&TensorWord::unit(2)), Some(&q.integer(5)));
    }
}
