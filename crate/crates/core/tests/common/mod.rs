//! Shared test oracle.
//!
//! Everything here recomputes results from first principles. Products are
//! formed by flattening both words into (slot, generator) atom sequences,
//! concatenating, and insertion-sorting with degree-weighted transposition
//! counting. Ideal membership is decided by enumerating complementary-degree
//! multipliers. Neither path shares code with the library's slotwise
//! multiplication or divisibility routines.

// Each integration test target compiles this module separately and uses a
// different slice of it.
#![allow(dead_code)]

use koszul::context::Generator;
use koszul::element::Element;
use koszul::monomial::{FactorMonomial, Sign};
use koszul::scalar::{Field, Scalar};
use koszul::word::TensorWord;

use rand::rngs::StdRng;
use rand::Rng;

/// One generator occurrence inside a tensor word, exponents expanded.
type Atom = (usize, Generator);

fn word_atoms(w: &TensorWord) -> Vec<Atom> {
    let mut atoms = Vec::new();
    for (slot, monomial) in w.slots().iter().enumerate() {
        for (g, e) in monomial.factors() {
            for _ in 0..*e {
                atoms.push((slot, g.clone()));
            }
        }
    }
    atoms
}

/// Stable insertion sort by (slot, name); every transposition of adjacent
/// atoms contributes the product of their degrees to the crossing count.
fn sort_atoms_counting(atoms: &mut [Atom]) -> u64 {
    let mut crossings = 0u64;
    for i in 1..atoms.len() {
        let mut j = i;
        while j > 0 {
            let prev = &atoms[j - 1];
            let cur = &atoms[j];
            if (prev.0, prev.1.name()) > (cur.0, cur.1.name()) {
                crossings += u64::from(prev.1.degree()) * u64::from(cur.1.degree());
                atoms.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
    crossings
}

fn assemble_word(arity: usize, atoms: Vec<Atom>, field: Field) -> Option<TensorWord> {
    let mut slots: Vec<Vec<(Generator, u32)>> = vec![Vec::new(); arity];
    for (slot, g) in atoms {
        let bucket = &mut slots[slot];
        match bucket.last_mut() {
            Some((last, e)) if *last == g => *e += 1,
            _ => bucket.push((g, 1)),
        }
    }
    let squares_vanish = !field.has_characteristic_two();
    for bucket in &slots {
        for (g, e) in bucket {
            if *e >= 2 && g.degree() % 2 == 1 && squares_vanish {
                return None;
            }
        }
    }
    Some(TensorWord::new(
        slots
            .into_iter()
            .map(FactorMonomial::from_sorted_factors)
            .collect(),
    ))
}

/// Multiplies two tensor words by atom interleaving. Returns the sign and
/// the canonical product word, or None when the product vanishes.
pub fn oracle_mul_words(
    u: &TensorWord,
    v: &TensorWord,
    field: Field,
) -> Option<(Sign, TensorWord)> {
    assert_eq!(u.arity(), v.arity());
    let mut atoms = word_atoms(u);
    atoms.extend(word_atoms(v));
    let crossings = sort_atoms_counting(&mut atoms);
    let word = assemble_word(u.arity(), atoms, field)?;
    Some((Sign::from_parity(crossings), word))
}

/// Bilinear extension of [`oracle_mul_words`].
pub fn oracle_mul(x: &Element, y: &Element) -> Element {
    assert_eq!(x.arity(), y.arity());
    assert_eq!(x.field(), y.field());
    let mut out = Element::zero(x.arity(), x.field());
    for (u, cu) in x.terms() {
        for (v, cv) in y.terms() {
            if let Some((sign, w)) = oracle_mul_words(u, v, x.field()) {
                let mut coeff = cu.mul(cv).expect("same field");
                if sign.is_negative() {
                    coeff = coeff.neg();
                }
                out.add_term(w, coeff).expect("same arity and field");
            }
        }
    }
    out
}

/// All slot monomials over name-sorted generators whose degree is at most
/// `budget`. Odd generators cap at exponent 1 unless the characteristic is 2.
fn slot_monomials(gens: &[Generator], budget: u64, field: Field) -> Vec<FactorMonomial> {
    fn go(
        gens: &[Generator],
        budget: u64,
        field: Field,
        acc: &mut Vec<(Generator, u32)>,
        out: &mut Vec<FactorMonomial>,
    ) {
        match gens.split_first() {
            None => out.push(FactorMonomial::from_sorted_factors(acc.clone())),
            Some((g, rest)) => {
                let degree = u64::from(g.degree());
                assert!(degree > 0, "degree-0 generators make enumeration unbounded");
                let mut cap = budget / degree;
                if g.degree() % 2 == 1 && !field.has_characteristic_two() {
                    cap = cap.min(1);
                }
                for e in 0..=cap {
                    if e > 0 {
                        acc.push((g.clone(), e as u32));
                    }
                    go(rest, budget - e * degree, field, acc, out);
                    if e > 0 {
                        acc.pop();
                    }
                }
            }
        }
    }
    let mut sorted = gens.to_vec();
    sorted.sort_by(|a, b| a.name().cmp(b.name()));
    let mut out = Vec::new();
    go(&sorted, budget, field, &mut Vec::new(), &mut out);
    out
}

/// All canonical tensor words over the generators with total degree at most
/// `max_degree`, valid over the field.
pub fn enumerate_words(
    gens: &[Generator],
    arity: usize,
    max_degree: u64,
    field: Field,
) -> Vec<TensorWord> {
    fn go(
        gens: &[Generator],
        remaining_slots: usize,
        budget: u64,
        field: Field,
        acc: &mut Vec<FactorMonomial>,
        out: &mut Vec<TensorWord>,
    ) {
        if remaining_slots == 0 {
            out.push(TensorWord::new(acc.clone()));
            return;
        }
        for m in slot_monomials(gens, budget, field) {
            let spent = m.degree();
            acc.push(m);
            go(gens, remaining_slots - 1, budget - spent, field, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(gens, arity, max_degree, field, &mut Vec::new(), &mut out);
    out
}

/// Decides ideal membership by brute force: `w` lies in the ideal exactly
/// when some multiplier word of complementary degree times some generator
/// reproduces `w` up to sign.
pub fn span_contains(
    ideal_gens: &[TensorWord],
    w: &TensorWord,
    gens: &[Generator],
    field: Field,
) -> bool {
    for g in ideal_gens {
        if g.degree() > w.degree() {
            continue;
        }
        let complement = w.degree() - g.degree();
        for m in enumerate_words(gens, w.arity(), complement, field) {
            if m.degree() != complement {
                continue;
            }
            if let Some((_, product)) = oracle_mul_words(&m, g, field) {
                if product == *w {
                    return true;
                }
            }
        }
    }
    false
}

/// Random nonzero scalar: small fractions over the rationals, a nonzero
/// residue over a prime field.
pub fn random_scalar(rng: &mut StdRng, field: Field) -> Scalar {
    match field {
        Field::Rationals => {
            let mut numer = 0i64;
            while numer == 0 {
                numer = rng.gen_range(-9..=9);
            }
            let denom = rng.gen_range(1..=9i64);
            field
                .integer(numer)
                .mul(&field.integer(denom).inv().expect("nonzero"))
                .expect("same field")
        }
        Field::Prime(p) => field.integer(rng.gen_range(1..p as i64)),
    }
}

/// Random canonical tensor word valid over the field.
pub fn random_word(rng: &mut StdRng, gens: &[Generator], arity: usize, field: Field) -> TensorWord {
    let mut sorted = gens.to_vec();
    sorted.sort_by(|a, b| a.name().cmp(b.name()));
    let slots = (0..arity)
        .map(|_| {
            let factors: Vec<(Generator, u32)> = sorted
                .iter()
                .filter_map(|g| {
                    let cap = if g.degree() % 2 == 1 && !field.has_characteristic_two() {
                        1
                    } else {
                        3
                    };
                    let e = rng.gen_range(0..=cap);
                    (e > 0).then(|| (g.clone(), e))
                })
                .collect();
            FactorMonomial::from_sorted_factors(factors)
        })
        .collect();
    TensorWord::new(slots)
}

/// Random element with at most `max_terms` terms.
pub fn random_element(
    rng: &mut StdRng,
    gens: &[Generator],
    arity: usize,
    field: Field,
    max_terms: usize,
) -> Element {
    let mut out = Element::zero(arity, field);
    let terms = rng.gen_range(0..=max_terms);
    for _ in 0..terms {
        let word = random_word(rng, gens, arity, field);
        let coeff = random_scalar(rng, field);
        out.add_term(word, coeff)
            .expect("canonical word over this field");
    }
    out
}
