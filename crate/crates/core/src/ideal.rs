//! Ideals generated by tensor words, with reduction and containment.
//!
//! For an ideal generated by pure tensor words inside the tensor power of a
//! free graded-commutative algebra, a basis word lies in the ideal exactly
//! when some generator divides it slot by slot. Reduction therefore deletes
//! the divisible terms of an element and is a projection onto the span of
//! the surviving words.

use crate::context::Generator;
use crate::element::Element;
use crate::error::AlgebraError;
use crate::monomial::FactorMonomial;
use crate::word::TensorWord;

/// `g` divides `w` when every slot of `g` divides the matching slot of `w`.
pub fn divides(g: &TensorWord, w: &TensorWord) -> Result<bool, AlgebraError> {
    if g.arity() != w.arity() {
        return Err(AlgebraError::ArityMismatch {
            left: g.arity(),
            right: w.arity(),
        });
    }
    Ok(g.slots()
        .iter()
        .zip(w.slots())
        .all(|(gs, ws)| gs.divides(ws)))
}

/// An ideal presented by pure tensor word generators, all of one arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    arity: usize,
    generators: Vec<TensorWord>,
}

impl MonomialIdeal {
    /// Wraps the generator words, which are kept in the given order.
    pub fn new(arity: usize, generators: Vec<TensorWord>) -> Result<MonomialIdeal, AlgebraError> {
        if generators.is_empty() {
            return Err(AlgebraError::EmptyIdeal);
        }
        for g in &generators {
            if g.arity() != arity {
                return Err(AlgebraError::ArityMismatch {
                    left: arity,
                    right: g.arity(),
                });
            }
        }
        Ok(MonomialIdeal { arity, generators })
    }

    /// Extracts generator words from elements that must each be a single
    /// tensor word; the coefficient is immaterial since any nonzero scalar
    /// is a unit.
    pub fn from_monomial_elements(
        arity: usize,
        elements: &[Element],
    ) -> Result<MonomialIdeal, AlgebraError> {
        let mut generators = Vec::with_capacity(elements.len());
        for e in elements {
            if e.term_count() != 1 {
                let got = crate::render::render_element(e, crate::render::TensorStyle::Ascii);
                return Err(AlgebraError::NotMonomial { got });
            }
            let (word, _) = e.terms().next().expect("one term");
            generators.push(word.clone());
        }
        MonomialIdeal::new(arity, generators)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[TensorWord] {
        &self.generators
    }

    /// Indices of the generators dividing `w`, in generator order.
    pub fn dividing_generators(&self, w: &TensorWord) -> Result<Vec<usize>, AlgebraError> {
        let mut hits = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            if divides(g, w)? {
                hits.push(i);
            }
        }
        Ok(hits)
    }

    /// Whether the basis word `w` lies in the ideal.
    pub fn contains_word(&self, w: &TensorWord) -> Result<bool, AlgebraError> {
        for g in &self.generators {
            if divides(g, w)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The canonical representative of `x` modulo the ideal: the sum of the
    /// terms of `x` whose words no generator divides.
    pub fn reduce(&self, x: &Element) -> Result<Element, AlgebraError> {
        if x.arity() != self.arity {
            return Err(AlgebraError::ArityMismatch {
                left: self.arity,
                right: x.arity(),
            });
        }
        let mut out = Element::zero(x.arity(), x.field());
        for (word, coeff) in x.terms() {
            if !self.contains_word(word)? {
                out.add_term(word.clone(), coeff.clone())?;
            }
        }
        Ok(out)
    }

    /// Whether `x` and `y` agree modulo the ideal.
    pub fn congruent(&self, x: &Element, y: &Element) -> Result<bool, AlgebraError> {
        Ok(self.reduce(&x.sub(y)?)?.is_zero())
    }

    /// Whether every generator of `other` lies in this ideal, which for word
    /// generators decides containment of the whole ideal.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool, AlgebraError> {
        for g in &other.generators {
            if !self.contains_word(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The ideal `<g^2 (x) 1 ... 1, g (x) ... (x) g (x) 1 ... 1>` with the run of
/// `g` filling the first `k - 1` slots. Requires `2 <= k <= n`.
pub fn chain_ideal(g: &Generator, k: usize, n: usize) -> Result<MonomialIdeal, AlgebraError> {
    if k < 2 || k > n {
        return Err(AlgebraError::RunLengthOutOfRange { k, arity: n });
    }
    let square = TensorWord::with_slots(n, &[(1, FactorMonomial::power(g, 2))])?;
    let run_slots: Vec<(usize, FactorMonomial)> =
        (1..k).map(|i| (i, FactorMonomial::generator(g))).collect();
    let run = TensorWord::with_slots(n, &run_slots)?;
    MonomialIdeal::new(n, vec![square, run])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Generator;
    use crate::products::{chain_product, embed, mul};
    use crate::scalar::Field;

    fn gen(name: &str, degree: u32) -> Generator {
        Generator::new(name, degree).unwrap()
    }

    fn word(arity: usize, entries: &[(usize, FactorMonomial)]) -> TensorWord {
        TensorWord::with_slots(arity, entries).unwrap()
    }

    fn mono(g: &Generator) -> FactorMonomial {
        FactorMonomial::generator(g)
    }

    #[test]
    fn divisibility_is_slot_by_slot() {
        let a = gen("a", 1);
        let b = gen("b", 2);
        let g = word(3, &[(1, mono(&a))]);
        let w = word(3, &[(1, mono(&a)), (3, mono(&b))]);
        assert!(divides(&g, &w).unwrap());
        assert!(!divides(&w, &g).unwrap());
        // The unit word divides everything.
        assert!(divides(&TensorWord::unit(3), &w).unwrap());
        // Same generator, wrong slot.
        let g2 = word(3, &[(2, mono(&a))]);
        assert!(!divides(&g2, &w).unwrap());
        // Exponents matter.
        let sq = word(3, &[(1, FactorMonomial::power(&a, 2))]);
        assert!(!divides(&sq, &w).unwrap());
        assert!(divides(&g, &sq).unwrap());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = gen("a", 1);
        let g = word(2, &[(1, mono(&a))]);
        let w = word(3, &[(1, mono(&a))]);
        assert!(divides(&g, &w).is_err());
    }

    #[test]
    fn reduction_deletes_exactly_the_divisible_terms() {
        let q = Field::Rationals;
        let a = gen("a", 1);
        let ideal = chain_ideal(&a, 4, 4).unwrap();
        let chain = chain_product(&a, 4, None, q).unwrap();
        let reduced = ideal.reduce(&chain).unwrap();
        // Words with a in slot 1 twice or more, or starting a(x)a(x)a, drop.
        let expected = Element::from_terms(
            4,
            q,
            [
                (
                    word(4, &[(2, mono(&a)), (3, mono(&a)), (4, mono(&a))]),
                    q.integer(-1),
                ),
                (
                    word(4, &[(1, mono(&a)), (3, mono(&a)), (4, mono(&a))]),
                    q.one(),
                ),
                (
                    word(4, &[(1, mono(&a)), (2, mono(&a)), (4, mono(&a))]),
                    q.integer(-1),
                ),
            ],
        )
        .unwrap();
        assert_eq!(reduced, expected);
    }

    #[test]
    fn reduction_is_idempotent_and_linear_on_samples() {
        let f2 = Field::Prime(2);
        let a = gen("a", 2);
        let ideal = chain_ideal(&a, 3, 4).unwrap();
        let x = chain_product(&a, 4, None, f2).unwrap();
        let y = embed(&a, 3, 4, f2).unwrap();
        let rx = ideal.reduce(&x).unwrap();
        assert_eq!(ideal.reduce(&rx).unwrap(), rx);
        let sum = ideal.reduce(&x.add(&y).unwrap()).unwrap();
        assert_eq!(sum, rx.add(&ideal.reduce(&y).unwrap()).unwrap());
    }

    #[test]
    fn generators_reduce_to_zero_from_either_side() {
        let q = Field::Rationals;
        let a = gen("a", 2);
        let b = gen("b", 1);
        let ideal = chain_ideal(&a, 3, 3).unwrap();
        for g in ideal.generators() {
            let ge = Element::from_terms(3, q, [(g.clone(), q.one())]).unwrap();
            let u = embed(&b, 3, 3, q).unwrap();
            assert!(ideal.reduce(&mul(&ge, &u).unwrap()).unwrap().is_zero());
            assert!(ideal.reduce(&mul(&u, &ge).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn congruence_ignores_ideal_terms() {
        let q = Field::Rationals;
        let a = gen("a", 1);
        let ideal = chain_ideal(&a, 2, 2).unwrap();
        // a_1 and 0 agree modulo <a^2 (x) 1, a (x) 1>.
        let a1 = embed(&a, 1, 2, q).unwrap();
        assert!(ideal.congruent(&a1, &Element::zero(2, q)).unwrap());
        // a_2 does not.
        let a2 = embed(&a, 2, 2, q).unwrap();
        assert!(!ideal.congruent(&a2, &Element::zero(2, q)).unwrap());
        assert!(ideal.congruent(&a1.add(&a2).unwrap(), &a2).unwrap());
    }

    #[test]
    fn run_ideals_shrink_as_the_run_lengthens() {
        let a = gen("a", 1);
        for n in 2..=10 {
            for k in 2..n {
                let wider = chain_ideal(&a, k, n).unwrap();
                let narrower = chain_ideal(&a, k + 1, n).unwrap();
                assert!(wider.contains(&narrower).unwrap(), "k={k} n={n}");
                assert!(!narrower.contains(&wider).unwrap(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn containment_is_reflexive() {
        let a = gen("a", 1);
        let ideal = chain_ideal(&a, 3, 5).unwrap();
        assert!(ideal.contains(&ideal).unwrap());
    }

    #[test]
    fn run_length_bounds_are_enforced() {
        let a = gen("a", 1);
        assert!(chain_ideal(&a, 1, 4).is_err());
        assert!(chain_ideal(&a, 5, 4).is_err());
        assert!(chain_ideal(&a, 2, 2).is_ok());
    }

    #[test]
    fn monomial_extraction_rejects_sums() {
        let q = Field::Rationals;
        let a = gen("a", 1);
        let single = embed(&a, 1, 2, q).unwrap();
        let ideal =
            MonomialIdeal::from_monomial_elements(2, std::slice::from_ref(&single)).unwrap();
        assert_eq!(ideal.generators().len(), 1);
        let sum = single.add(&embed(&a, 2, 2, q).unwrap()).unwrap();
        assert!(matches!(
            MonomialIdeal::from_monomial_elements(2, &[sum]),
            Err(AlgebraError::NotMonomial { .. })
        ));
        assert!(matches!(
            MonomialIdeal::from_monomial_elements(2, &[]),
            Err(AlgebraError::EmptyIdeal)
        ));
    }
}
