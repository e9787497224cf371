//! Basis words of the n-fold tensor power: one monomial per slot.

use std::fmt;

use crate::error::AlgebraError;
use crate::monomial::FactorMonomial;
use crate::scalar::Field;

/// A pure tensor of slot monomials, the basis word of an element.
///
/// Like [`FactorMonomial`], a word is formal data; field-dependent vanishing
/// is decided where words enter elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorWord {
    slots: Vec<FactorMonomial>,
}

impl TensorWord {
    /// Wraps the given slots. Arity is their count and must be positive.
    pub fn new(slots: Vec<FactorMonomial>) -> TensorWord {
        assert!(!slots.is_empty(), "a tensor word needs at least one slot");
        TensorWord { slots }
    }

    /// The word with unit in every slot.
    pub fn unit(arity: usize) -> TensorWord {
        TensorWord::new(vec![FactorMonomial::unit(); arity])
    }

    /// The unit word with the given entries placed at 1-based positions.
    /// Positions must be distinct; out-of-range positions are an error.
    pub fn with_slots(
        arity: usize,
        entries: &[(usize, FactorMonomial)],
    ) -> Result<TensorWord, AlgebraError> {
        let mut slots = vec![FactorMonomial::unit(); arity.max(1)];
        if arity == 0 {
            return Err(AlgebraError::ArityTooSmall { arity, min: 1 });
        }
        for (position, monomial) in entries {
            let position = *position;
            if position == 0 || position > arity {
                return Err(AlgebraError::PositionOutOfRange { position, arity });
            }
            assert!(
                slots[position - 1].is_unit(),
                "duplicate position {position}"
            );
            slots[position - 1] = monomial.clone();
        }
        Ok(TensorWord { slots })
    }

    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[FactorMonomial] {
        &self.slots
    }

    pub fn is_unit(&self) -> bool {
        self.slots.iter().all(FactorMonomial::is_unit)
    }

    /// Total degree across all slots.
    pub fn degree(&self) -> u64 {
        self.slots.iter().map(FactorMonomial::degree).sum()
    }

    /// Whether the word is nonzero over the field in every slot.
    pub fn is_nonzero_over(&self, field: Field) -> bool {
        self.slots.iter().all(|m| m.is_nonzero_over(field))
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, slot) in self.slots.iter().enumerate() {
            if i > 0 {
                write!(f, "(x)")?;
            }
            write!(f, "{slot}")?;
        }
        Ok(())
    }
}
