//! Expression trees over the tensor power, and their evaluation.

use crate::context::ContextSpec;
use crate::element::Element;
use crate::error::AlgebraError;
use crate::monomial::{mul_monomials, FactorMonomial, Sign};
use crate::products::{embed, mul};
use crate::word::TensorWord;

/// One written tensor slot: generator names with exponents, in source order.
/// An empty list is the unit slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotExpr {
    pub factors: Vec<(String, u32)>,
}

/// A parsed expression, prior to evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// An integer or integer-quotient coefficient, as decimal digits.
    ScalarLit {
        numer: String,
        denom: Option<String>,
    },
    /// A generator placed at a 1-based tensor position.
    Positional {
        name: String,
        position: usize,
    },
    /// A full tensor word, one slot expression per position.
    Word(Vec<SlotExpr>),
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Negation(Box<Expr>),
    Parenthesized(Box<Expr>),
}

/// Evaluates an expression to a normalized element of the context's tensor
/// power.
pub fn evaluate(expr: &Expr, spec: &ContextSpec) -> Result<Element, AlgebraError> {
    let n = spec.arity();
    let field = spec.field();
    match expr {
        Expr::ScalarLit { numer, denom } => {
            let mut value = field
                .integer_from_decimal(numer)
                .expect("literal digits form an integer");
            if let Some(d) = denom {
                let d = field
                    .integer_from_decimal(d)
                    .expect("literal digits form an integer");
                value = value.mul(&d.inv()?)?;
            }
            Element::from_terms(n, field, [(TensorWord::unit(n), value)])
        }
        Expr::Positional { name, position } => {
            let g = spec.context().generator(name)?;
            embed(g, *position, n, field)
        }
        Expr::Word(slots) => {
            if slots.len() != n {
                return Err(AlgebraError::ArityMismatch {
                    left: n,
                    right: slots.len(),
                });
            }
            let mut parity_is_odd = false;
            let mut monomials = Vec::with_capacity(n);
            for slot in slots {
                let mut acc = FactorMonomial::unit();
                for (name, exp) in &slot.factors {
                    let g = spec.context().generator(name)?;
                    let block = FactorMonomial::power(g, *exp);
                    let (sign, product) = mul_monomials(&acc, &block, field);
                    match product {
                        Some(m) => {
                            parity_is_odd ^= sign == Sign::Minus;
                            acc = m;
                        }
                        None => return Ok(Element::zero(n, field)),
                    }
                }
                monomials.push(acc);
            }
            let word = TensorWord::new(monomials);
            Element::from_terms(n, field, [(word, field.sign(parity_is_odd))])
        }
        Expr::Sum(x, y) => evaluate(x, spec)?.add(&evaluate(y, spec)?),
        Expr::Difference(x, y) => evaluate(x, spec)?.sub(&evaluate(y, spec)?),
        Expr::Product(x, y) => mul(&evaluate(x, spec)?, &evaluate(y, spec)?),
        Expr::Negation(x) => Ok(evaluate(x, spec)?.neg()),
        Expr::Parenthesized(x) => evaluate(x, spec),
    }
}
