//! Stable JSON forms of elements, certificates, and verification reports.
//!
//! Coefficients are strings (exact values do not fit JSON numbers), a slot is
//! a list of `[name, exponent]` pairs, and a word is the list of its slots.
//! Key order and array order are deterministic, so equal values serialize to
//! identical bytes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::claims::{Classification, TermRecord, VerificationReport};
use crate::element::Element;
use crate::word::TensorWord;

type SlotsJson = Vec<Vec<(String, u32)>>;

fn word_slots(word: &TensorWord) -> SlotsJson {
    word.slots()
        .iter()
        .map(|m| {
            m.factors()
                .iter()
                .map(|(g, e)| (g.name().to_owned(), *e))
                .collect()
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct TermJson {
    pub coeff: String,
    pub slots: SlotsJson,
}

#[derive(Debug, Serialize)]
pub struct ElementJson {
    pub arity: usize,
    pub field: String,
    pub terms: Vec<TermJson>,
}

impl ElementJson {
    pub fn from_element(x: &Element) -> ElementJson {
        ElementJson {
            arity: x.arity(),
            field: x.field().to_string(),
            terms: x
                .terms()
                .map(|(word, coeff)| TermJson {
                    coeff: coeff.to_string(),
                    slots: word_slots(word),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub enum ClassJson {
    #[serde(rename = "survives")]
    Survives,
    #[serde(rename = "absorbed")]
    Absorbed {
        generator_index: usize,
        generator: SlotsJson,
        multi_divisible: bool,
    },
}

#[derive(Debug, Serialize)]
pub struct RecordJson {
    pub indices: Vec<usize>,
    pub epsilon: u64,
    pub word: SlotsJson,
    pub class: ClassJson,
}

impl RecordJson {
    pub fn from_record(record: &TermRecord) -> RecordJson {
        let class = match record.classification() {
            Classification::Survives => ClassJson::Survives,
            Classification::Absorbed {
                generator_index,
                generator,
                multi_divisible,
            } => ClassJson::Absorbed {
                generator_index: *generator_index,
                generator: word_slots(generator),
                multi_divisible: *multi_divisible,
            },
        };
        RecordJson {
            indices: record.indices().to_vec(),
            epsilon: record.epsilon(),
            word: word_slots(record.word()),
            class,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub claim: String,
    pub n: usize,
    pub degrees: BTreeMap<String, u32>,
    pub field: String,
    pub holds: bool,
    pub residual: ElementJson,
    pub certificate: Vec<RecordJson>,
}

impl ReportJson {
    pub fn from_report(report: &VerificationReport) -> ReportJson {
        ReportJson {
            claim: report.claim().id().to_owned(),
            n: report.arity(),
            degrees: report.degrees().clone(),
            field: report.field().to_string(),
            holds: report.holds(),
            residual: ElementJson::from_element(report.residual()),
            certificate: report
                .certificate()
                .iter()
                .map(RecordJson::from_record)
                .collect(),
        }
    }
}

/// One row of a sweep in JSON form.
#[derive(Debug, Serialize)]
pub struct SweepRowJson {
    pub claim: String,
    pub n: usize,
    pub degrees: BTreeMap<String, u32>,
    pub field: String,
    pub holds: bool,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::{check_original_first_part, Claim};
    use crate::context::Generator;
    use crate::scalar::Field;

    #[test]
    fn residual_terms_serialize_with_unit_slots_as_empty_lists() {
        let a = Generator::new("a", 1).unwrap();
        let report = check_original_first_part(&a, 4, Field::Rationals).unwrap();
        let json = to_json(&ElementJson::from_element(report.residual()));
        assert_eq!(
            json,
            r#"{"arity":4,"field":"Q","terms":[{"coeff":"-1","slots":[[["a",1]],[["a",1]],[],[["a",1]]]}]}"#
        );
    }

    #[test]
    fn reports_serialize_deterministically() {
        let a = Generator::new("a", 1).unwrap();
        let report = check_original_first_part(&a, 4, Field::Prime(2)).unwrap();
        let first = to_json(&ReportJson::from_report(&report));
        let again = to_json(&ReportJson::from_report(
            &check_original_first_part(&a, 4, Field::Prime(2)).unwrap(),
        ));
        assert_eq!(first, again);
        assert!(first.contains(r#""claim":"original-first-part""#));
        assert!(first.contains(r#""holds":false"#));
        assert!(first.contains(r#""class":"survives""#));
        assert!(first.contains(r#""class":{"absorbed""#));
    }

    #[test]
    fn claim_ids_are_stable() {
        assert_eq!(Claim::OriginalFirstPart.id(), "original-first-part");
        assert_eq!(Claim::CorrectedFirstPart.id(), "corrected-first-part");
        assert_eq!(Claim::SecondPart.id(), "second-part");
    }
}
