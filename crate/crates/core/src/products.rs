//! Multiplication in the tensor power and the positional constructions built
//! from it: embeddings, zero-divisors, and chain products.
//!
//! The product of pure tensors interleaves factors, so it carries the sign
//! `(-1)^e` where `e` sums `deg(u_i) * deg(v_j)` over every pair with `i > j`:
//! each factor of the right word moves left past the later slots of the left
//! word before the slotwise products are taken.

use crate::context::Generator;
use crate::element::Element;
use crate::error::AlgebraError;
use crate::monomial::{mul_monomials, FactorMonomial, Sign};
use crate::scalar::Field;
use crate::word::TensorWord;

/// The class with `g` placed at the 1-based `position` and units elsewhere.
pub fn embed(
    g: &Generator,
    position: usize,
    arity: usize,
    field: Field,
) -> Result<Element, AlgebraError> {
    let word = TensorWord::with_slots(arity, &[(position, FactorMonomial::generator(g))])?;
    Element::from_terms(arity, field, [(word, field.one())])
}

/// Koszul sign of the interleaving when multiplying basis words `u * v`.
pub fn word_sign(u: &TensorWord, v: &TensorWord) -> Result<Sign, AlgebraError> {
    if u.arity() != v.arity() {
        return Err(AlgebraError::ArityMismatch {
            left: u.arity(),
            right: v.arity(),
        });
    }
    let mut parity = 0u64;
    let mut u_suffix_parity = 0u64;
    // Walk j from the last slot to the first, keeping the degree parity of
    // u's slots strictly after j.
    for j in (0..v.arity()).rev() {
        if j + 1 < u.arity() {
            u_suffix_parity += u.slots()[j + 1].degree() % 2;
        }
        parity += (v.slots()[j].degree() % 2) * (u_suffix_parity % 2);
    }
    Ok(Sign::from_parity(parity))
}

/// The bilinear product of two elements.
pub fn mul(x: &Element, y: &Element) -> Result<Element, AlgebraError> {
    if x.arity() != y.arity() {
        return Err(AlgebraError::ArityMismatch {
            left: x.arity(),
            right: y.arity(),
        });
    }
    if x.field() != y.field() {
        return Err(AlgebraError::FieldMismatch {
            left: x.field(),
            right: y.field(),
        });
    }
    let field = x.field();
    let mut out = Element::zero(x.arity(), field);
    for (u, cu) in x.terms() {
        for (v, cv) in y.terms() {
            let mut sign = word_sign(u, v)?;
            let mut slots = Vec::with_capacity(u.arity());
            let mut vanished = false;
            for (mu, mv) in u.slots().iter().zip(v.slots()) {
                let (slot_sign, product) = mul_monomials(mu, mv, field);
                match product {
                    Some(m) => {
                        sign = sign * slot_sign;
                        slots.push(m);
                    }
                    None => {
                        vanished = true;
                        break;
                    }
                }
            }
            if vanished {
                continue;
            }
            let mut coeff = cu.mul(cv)?;
            if sign.is_negative() {
                coeff = coeff.neg();
            }
            out.add_term(TensorWord::new(slots), coeff)?;
        }
    }
    Ok(out)
}

/// The difference of the two positional classes of `g`, a zero-divisor of the
/// tensor power whenever `g` squares to zero.
pub fn zero_divisor(
    g: &Generator,
    i: usize,
    j: usize,
    arity: usize,
    field: Field,
) -> Result<Element, AlgebraError> {
    if i == j {
        return Err(AlgebraError::EqualPositions { position: i });
    }
    embed(g, i, arity, field)?.sub(&embed(g, j, arity, field)?)
}

/// The product of zero-divisor differences anchored at the first position:
/// `(g_1 - g_2)(g_1 - g_3) ... (g_1 - g_n)`, optionally preceded by the
/// factor `(prefix_1 - prefix_2)`. Requires arity at least two.
pub fn chain_product(
    g: &Generator,
    arity: usize,
    prefix: Option<&Generator>,
    field: Field,
) -> Result<Element, AlgebraError> {
    if arity < 2 {
        return Err(AlgebraError::ArityTooSmall { arity, min: 2 });
    }
    let mut acc = match prefix {
        Some(p) => {
            if p.name() == g.name() {
                return Err(AlgebraError::PrefixEqualsChain {
                    name: g.name().to_owned(),
                });
            }
            let head = zero_divisor(p, 1, 2, arity, field)?;
            mul(&head, &zero_divisor(g, 1, 2, arity, field)?)?
        }
        None => zero_divisor(g, 1, 2, arity, field)?,
    };
    for k in 3..=arity {
        acc = mul(&acc, &zero_divisor(g, 1, k, arity, field)?)?;
    }
    Ok(acc)
}
