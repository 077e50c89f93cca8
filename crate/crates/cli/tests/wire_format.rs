//! Spec files round-trip and scalars survive serialization exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use hopfcyc::exactla::{FieldSpec, Scalar};
use hopfcyc::hopf::corpus::{standard_corpus, taft_in};
use hopfcyc_cli::commands::{cmd_corpus, Options};
use hopfcyc_cli::spec::{parse_value, value_of, SpecFile};

fn round_trip(spec: &SpecFile) {
    let text = spec.to_json();
    let back = SpecFile::parse(&text).unwrap();
    assert_eq!(&back, spec);
    assert_eq!(back.to_json(), text);
}

#[test]
fn corpus_files_round_trip() {
    let opts = Options::default();
    for name in ["trivial", "group:C2", "group:S3", "fun:S3", "sweedler", "taft"] {
        round_trip(&cmd_corpus(name, None, &opts).unwrap());
    }
    for name in ["scalars", "dual-regular", "group-trivial:C3", "regular-module", "beta"] {
        round_trip(&cmd_corpus(name, Some("sweedler"), &opts).unwrap());
    }
}

#[test]
fn hopf_data_survives_the_wire() {
    let mut all = standard_corpus();
    all.push(taft_in(4, FieldSpec::cyclotomic(4).unwrap()).unwrap());
    for h in all {
        let spec = hopfcyc_cli::spec::HopfSpec::from_data(h.data());
        let back = spec.to_data().unwrap();
        assert_eq!(&back, h.data(), "{}", h.name());
    }
}

#[test]
fn unknown_fields_are_rejected() {
    let text = cmd_corpus("trivial", None, &Options::default()).unwrap().to_json();
    let bad = text.replacen("\"name\"", "\"extra\": 1,\n  \"name\"", 1);
    assert!(SpecFile::parse(&bad).is_err());
}

fn scalar(order: u32) -> impl Strategy<Value = Scalar> {
    let f = FieldSpec::cyclotomic(order).unwrap();
    prop::collection::vec((-1000i64..=1000, 1i64..=97), f.degree()).prop_map(move |cs| {
        Scalar::from_coeffs(f, cs.into_iter().map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect())
    })
}

proptest! {
    #[test]
    fn scalars_round_trip(x in prop::sample::select(vec![1u32, 3, 4, 5, 8]).prop_flat_map(scalar)) {
        let back = parse_value(&value_of(&x), x.field(), &|| "entry".to_string()).unwrap();
        prop_assert_eq!(back, x);
    }
}
