//! Plain-text rendering of words and elements.
//!
//! Output is designed to re-parse: terms come in canonical word order, slot
//! separators are `(x)` or `⊗`, coefficients of magnitude one are omitted,
//! and a single-slot word is rendered in bracket form.

use crate::element::Element;
use crate::scalar::{rational_parts, Scalar};
use crate::word::TensorWord;

/// Which tensor separator to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TensorStyle {
    #[default]
    Ascii,
    Utf8,
}

impl TensorStyle {
    pub fn separator(self) -> &'static str {
        match self {
            TensorStyle::Ascii => "(x)",
            TensorStyle::Utf8 => "⊗",
        }
    }
}

pub fn render_word(word: &TensorWord, style: TensorStyle) -> String {
    if word.arity() == 1 {
        return format!("[{}]", word.slots()[0]);
    }
    word.slots()
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(style.separator())
}

/// The sign of a term and its magnitude rendering, with `None` for a
/// magnitude of one. Prime-field values print as bare residues and never
/// carry a sign.
fn coefficient_parts(coeff: &Scalar) -> (bool, Option<String>) {
    match coeff {
        Scalar::Rational(r) => {
            let (negative, magnitude) = rational_parts(r);
            let magnitude = if magnitude == "1" {
                None
            } else {
                Some(magnitude)
            };
            (negative, magnitude)
        }
        Scalar::Mod { value, .. } => {
            let magnitude = if *value == 1 {
                None
            } else {
                Some(value.to_string())
            };
            (false, magnitude)
        }
    }
}

pub fn render_element(x: &Element, style: TensorStyle) -> String {
    if x.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, (word, coeff)) in x.terms().enumerate() {
        let (negative, magnitude) = coefficient_parts(coeff);
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let rendered_word = if word.is_unit() {
            None
        } else {
            Some(render_word(word, style))
        };
        match (magnitude, rendered_word) {
            (None, None) => out.push('1'),
            (None, Some(w)) => out.push_str(&w),
            (Some(m), None) => out.push_str(&m),
            (Some(m), Some(w)) => {
                out.push_str(&m);
                out.push('*');
                out.push_str(&w);
            }
        }
    }
    out
}
