//! Verifiers and term certificates for three congruence claims about chain
//! products of positional zero-divisor differences.
//!
//! Each claim states that the chain product reduces, modulo an ideal of
//! tensor words, to a short closed form:
//!
//! * the first-part claim in its original form, against the ideal whose run
//!   generator fills the first `n - 1` slots. It holds for arity two and
//!   three and fails from arity four on, where interior terms with a single
//!   unit slot survive reduction;
//! * the corrected first-part claim, against the smaller-run ideal whose run
//!   generator fills only the first two slots, which absorbs every interior
//!   term;
//! * the second-part claim, for a chain preceded by a prefix factor in a
//!   second generator, against the ideal that also contains the mixed
//!   products in the first two slots.
//!
//! A [`TermRecord`] certificate lists every index choice of the expanded
//! chain with its sign exponent and its fate under reduction; the signed sum
//! of all records must rebuild the chain product, which is asserted whenever
//! a certificate is produced. Records compute signs by counting
//! degree-weighted inversions, a path independent of the pairwise Koszul
//! multiplication used by [`chain_product`], so the assertion cross-checks
//! the two sign conventions against each other on every run.

use std::collections::BTreeMap;
use std::fmt;

use crate::context::Generator;
use crate::element::Element;
use crate::error::AlgebraError;
use crate::ideal::{chain_ideal, MonomialIdeal};
use crate::monomial::{FactorMonomial, Sign};
use crate::products::chain_product;
use crate::scalar::{Field, Scalar};
use crate::word::TensorWord;

/// The three verifiable claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// First congruence, original form: run ideal of length `n - 1`.
    OriginalFirstPart,
    /// First congruence, corrected form: run ideal of length two.
    CorrectedFirstPart,
    /// Second congruence: prefixed chain against the mixed-product ideal.
    SecondPart,
}

impl Claim {
    pub fn id(self) -> &'static str {
        match self {
            Claim::OriginalFirstPart => "original-first-part",
            Claim::CorrectedFirstPart => "corrected-first-part",
            Claim::SecondPart => "second-part",
        }
    }

    pub fn takes_prefix(self) -> bool {
        self == Claim::SecondPart
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// The fate of one expanded term under reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// No ideal generator divides the word; it survives reduction.
    Survives,
    /// At least one generator divides the word. `generator_index` is the
    /// first one in the ideal's stated order; `multi_divisible` reports
    /// whether others divide it too.
    Absorbed {
        generator_index: usize,
        generator: TensorWord,
        multi_divisible: bool,
    },
}

/// One term of the fully expanded chain product.
///
/// `indices` lists the position chosen from each factor, prefix first when
/// present. `epsilon` is the sign exponent: the number of negative choices
/// plus the degree-weighted inversion count of the resulting factor
/// sequence, so the term contributes `(-1)^epsilon * word`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermRecord {
    indices: Vec<usize>,
    epsilon: u64,
    word: TensorWord,
    classification: Classification,
}

impl TermRecord {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn epsilon(&self) -> u64 {
        self.epsilon
    }

    pub fn sign(&self) -> Sign {
        Sign::from_parity(self.epsilon)
    }

    pub fn word(&self) -> &TensorWord {
        &self.word
    }

    pub fn classification(&self) -> &Classification {
        &self.classification
    }

    pub fn survives(&self) -> bool {
        self.classification == Classification::Survives
    }
}

/// The outcome of verifying one claim instance.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    claim: Claim,
    arity: usize,
    degrees: BTreeMap<String, u32>,
    field: Field,
    holds: bool,
    residual: Element,
    certificate: Vec<TermRecord>,
}

impl VerificationReport {
    pub fn claim(&self) -> Claim {
        self.claim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Generator degrees by name.
    pub fn degrees(&self) -> &BTreeMap<String, u32> {
        &self.degrees
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    /// The reduced difference between the chain product and the claimed
    /// closed form. Zero exactly when the claim holds.
    pub fn residual(&self) -> &Element {
        &self.residual
    }

    pub fn certificate(&self) -> &[TermRecord] {
        &self.certificate
    }
}

/// The ideal a claim reduces against.
pub fn claim_ideal(
    claim: Claim,
    chain: &Generator,
    prefix: Option<&Generator>,
    n: usize,
) -> Result<MonomialIdeal, AlgebraError> {
    check_prefix(claim, chain, prefix)?;
    if n < 2 {
        return Err(AlgebraError::ArityTooSmall { arity: n, min: 2 });
    }
    match claim {
        Claim::OriginalFirstPart => chain_ideal(chain, n, n),
        Claim::CorrectedFirstPart => {
            let square = square_word(chain, n)?;
            let run = TensorWord::with_slots(
                n,
                &[
                    (1, FactorMonomial::generator(chain)),
                    (2, FactorMonomial::generator(chain)),
                ],
            )?;
            MonomialIdeal::new(n, vec![square, run])
        }
        Claim::SecondPart => {
            let b = prefix.expect("prefix checked above");
            let mixed = mixed_monomial(chain, b);
            let square = square_word(chain, n)?;
            let mixed_first = TensorWord::with_slots(n, &[(1, mixed.clone())])?;
            let mixed_second = TensorWord::with_slots(n, &[(2, mixed)])?;
            MonomialIdeal::new(n, vec![square, mixed_first, mixed_second])
        }
    }
}

/// The closed form a claim equates the chain product with, modulo the ideal.
pub fn claim_rhs(
    claim: Claim,
    chain: &Generator,
    prefix: Option<&Generator>,
    n: usize,
    field: Field,
) -> Result<Element, AlgebraError> {
    check_prefix(claim, chain, prefix)?;
    if n < 2 {
        return Err(AlgebraError::ArityTooSmall { arity: n, min: 2 });
    }
    let a = FactorMonomial::generator(chain);
    match claim {
        // (-1)^n ((a at 1) - (a at 2)) followed by a in slots 3..=n.
        Claim::OriginalFirstPart | Claim::CorrectedFirstPart => {
            let tail: Vec<(usize, FactorMonomial)> = (3..=n).map(|i| (i, a.clone())).collect();
            let mut first = vec![(1, a.clone())];
            first.extend(tail.clone());
            let mut second = vec![(2, a.clone())];
            second.extend(tail);
            let sign = field.sign(n % 2 == 1);
            Element::from_terms(
                n,
                field,
                [
                    (TensorWord::with_slots(n, &first)?, sign.clone()),
                    (TensorWord::with_slots(n, &second)?, sign.neg()),
                ],
            )
        }
        // (-1)^(n+1) ((b at 1) + (-1)^(|a||b|) (a at 1, b at 2)) with a
        // filling the remaining slots.
        Claim::SecondPart => {
            let bg = prefix.expect("prefix checked above");
            let b = FactorMonomial::generator(bg);
            let mut first = vec![(1, b.clone())];
            first.extend((2..=n).map(|i| (i, a.clone())));
            let mut second = vec![(1, a.clone()), (2, b)];
            second.extend((3..=n).map(|i| (i, a.clone())));
            let sign = field.sign(n.is_multiple_of(2));
            let koszul = field.sign(chain.is_odd() && bg.is_odd());
            Element::from_terms(
                n,
                field,
                [
                    (TensorWord::with_slots(n, &first)?, sign.clone()),
                    (TensorWord::with_slots(n, &second)?, sign.mul(&koszul)?),
                ],
            )
        }
    }
}

/// Expands the chain product term by term and classifies every term against
/// the claim's ideal.
pub fn certificate(
    claim: Claim,
    chain: &Generator,
    prefix: Option<&Generator>,
    n: usize,
    field: Field,
) -> Result<Vec<TermRecord>, AlgebraError> {
    let ideal = claim_ideal(claim, chain, prefix, n)?;
    enumerate_records(chain, effective_prefix(claim, prefix), n, field, &ideal)
}

/// Verifies one claim instance: reduces the difference between the chain
/// product and the claimed closed form, and attaches the full certificate.
pub fn verify_claim(
    claim: Claim,
    chain: &Generator,
    prefix: Option<&Generator>,
    n: usize,
    field: Field,
) -> Result<VerificationReport, AlgebraError> {
    let ideal = claim_ideal(claim, chain, prefix, n)?;
    let used_prefix = effective_prefix(claim, prefix);
    let certificate = enumerate_records(chain, used_prefix, n, field, &ideal)?;
    let lhs = chain_product(chain, n, used_prefix, field)?;
    let rhs = claim_rhs(claim, chain, prefix, n, field)?;
    let residual = ideal.reduce(&lhs.sub(&rhs)?)?;
    let mut degrees = BTreeMap::new();
    degrees.insert(chain.name().to_owned(), chain.degree());
    if let Some(b) = used_prefix {
        degrees.insert(b.name().to_owned(), b.degree());
    }
    Ok(VerificationReport {
        claim,
        arity: n,
        degrees,
        field,
        holds: residual.is_zero(),
        residual,
        certificate,
    })
}

/// First-part claim in its original form. Expected to fail for `n >= 4`.
pub fn check_original_first_part(
    a: &Generator,
    n: usize,
    field: Field,
) -> Result<VerificationReport, AlgebraError> {
    verify_claim(Claim::OriginalFirstPart, a, None, n, field)
}

/// First-part claim in its corrected form.
pub fn verify_corrected_first_part(
    a: &Generator,
    n: usize,
    field: Field,
) -> Result<VerificationReport, AlgebraError> {
    verify_claim(Claim::CorrectedFirstPart, a, None, n, field)
}

/// Second-part claim for a chain in `a` prefixed by one factor in `b`.
pub fn verify_second_part(
    a: &Generator,
    b: &Generator,
    n: usize,
    field: Field,
) -> Result<VerificationReport, AlgebraError> {
    verify_claim(Claim::SecondPart, a, Some(b), n, field)
}

/// The residual of the original first-part claim, as ordered term pairs.
/// Empty for arity two and three; for larger arity it consists of the words
/// with a single interior unit slot.
pub fn residual_profile(
    a: &Generator,
    n: usize,
    field: Field,
) -> Result<Vec<(TensorWord, Scalar)>, AlgebraError> {
    let report = check_original_first_part(a, n, field)?;
    Ok(report
        .residual()
        .terms()
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect())
}

fn check_prefix(
    claim: Claim,
    chain: &Generator,
    prefix: Option<&Generator>,
) -> Result<(), AlgebraError> {
    match (claim.takes_prefix(), prefix) {
        (true, None) => Err(AlgebraError::MissingPrefixGenerator {
            claim: claim.id().into(),
        }),
        (false, Some(_)) => Err(AlgebraError::UnexpectedPrefixGenerator {
            claim: claim.id().into(),
        }),
        (true, Some(b)) if b.name() == chain.name() => Err(AlgebraError::PrefixEqualsChain {
            name: chain.name().into(),
        }),
        _ => Ok(()),
    }
}

fn effective_prefix(claim: Claim, prefix: Option<&Generator>) -> Option<&Generator> {
    if claim.takes_prefix() {
        prefix
    } else {
        None
    }
}

fn square_word(g: &Generator, n: usize) -> Result<TensorWord, AlgebraError> {
    TensorWord::with_slots(n, &[(1, FactorMonomial::power(g, 2))])
}

fn mixed_monomial(a: &Generator, b: &Generator) -> FactorMonomial {
    let mut pair = vec![(a.clone(), 1), (b.clone(), 1)];
    pair.sort_by(|x, y| x.0.name().cmp(y.0.name()));
    FactorMonomial::from_sorted_factors(pair)
}

/// Walks every index tuple of the expanded chain in lexicographic order.
///
/// Tuple coordinates take the value 1 or the alternative position of their
/// factor; the sign exponent counts negative choices and degree-weighted
/// inversions of the flattened `(position, generator)` sequence. The signed
/// sum of all records is asserted to equal the chain product itself.
fn enumerate_records(
    chain: &Generator,
    prefix: Option<&Generator>,
    n: usize,
    field: Field,
    ideal: &MonomialIdeal,
) -> Result<Vec<TermRecord>, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::ArityTooSmall { arity: n, min: 2 });
    }
    let m = (n - 1) + usize::from(prefix.is_some());
    assert!(
        m < 63,
        "certificate enumeration supports at most 62 factors"
    );
    let mut records = Vec::with_capacity(1usize << m);
    for code in 0..(1u64 << m) {
        // The leading factor maps to the most significant bit so that codes
        // enumerate index tuples lexicographically.
        let choice = |slot: usize| (code >> (m - 1 - slot)) & 1 == 1;
        let mut indices = Vec::with_capacity(m);
        let mut flat: Vec<(usize, &Generator)> = Vec::with_capacity(m);
        let mut epsilon = 0u64;
        let mut next = 0;
        if let Some(b) = prefix {
            if choice(next) {
                indices.push(2);
                flat.push((2, b));
                epsilon += 1;
            } else {
                indices.push(1);
                flat.push((1, b));
            }
            next += 1;
        }
        for k in 1..n {
            if choice(next) {
                indices.push(k + 1);
                flat.push((k + 1, chain));
                epsilon += 1;
            } else {
                indices.push(1);
                flat.push((1, chain));
            }
            next += 1;
        }
        for i in 0..flat.len() {
            for j in (i + 1)..flat.len() {
                let (pi, gi) = flat[i];
                let (pj, gj) = flat[j];
                if (pi, gi.name()) > (pj, gj.name()) {
                    epsilon += u64::from(gi.degree()) * u64::from(gj.degree());
                }
            }
        }
        let word = group_into_word(&flat, n);
        let hits = ideal.dividing_generators(&word)?;
        let classification = match hits.split_first() {
            None => Classification::Survives,
            Some((&first, rest)) => Classification::Absorbed {
                generator_index: first,
                generator: ideal.generators()[first].clone(),
                multi_divisible: !rest.is_empty(),
            },
        };
        records.push(TermRecord {
            indices,
            epsilon,
            word,
            classification,
        });
    }

    let mut reassembled = Element::zero(n, field);
    for r in &records {
        reassembled.add_term(r.word.clone(), field.sign(r.epsilon % 2 == 1))?;
    }
    let lhs = chain_product(chain, n, prefix, field)?;
    assert!(
        reassembled == lhs,
        "signed certificate sum must rebuild the chain product"
    );
    Ok(records)
}

fn group_into_word(flat: &[(usize, &Generator)], n: usize) -> TensorWord {
    let mut slots: Vec<Vec<&Generator>> = vec![Vec::new(); n];
    for (pos, g) in flat {
        slots[pos - 1].push(g);
    }
    let monomials = slots
        .into_iter()
        .map(|mut gens| {
            gens.sort_by(|x, y| x.name().cmp(y.name()));
            let mut factors: Vec<(Generator, u32)> = Vec::new();
            for g in gens {
                match factors.last_mut() {
                    Some((last, e)) if last.name() == g.name() => *e += 1,
                    _ => factors.push((g.clone(), 1)),
                }
            }
            FactorMonomial::from_sorted_factors(factors)
        })
        .collect();
    TensorWord::new(monomials)
}
