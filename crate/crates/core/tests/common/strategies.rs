use proptest::prelude::*;
use radii_core::family::FunctionFamily;
use radii_core::normalize::{Form, NormalizedFunction};

/// Families with real zeros only, each in every form it supports.
pub fn function() -> impl Strategy<Value = NormalizedFunction> {
    let fam = prop_oneof![
        (0.3..2.0f64, 0.3..3.0f64).prop_map(|(r, b)| FunctionFamily::wright(r, b).unwrap()),
        prop_oneof![
            Just((3.0, 1.0, 1.0)),
            Just((3.0, 1.5, 2.0)),
            Just((6.0, 1.0, 1.0))
        ]
        .prop_map(|(m, n, a)| FunctionFamily::mittag_leffler(m, n, a).unwrap()),
        (0.05..0.95f64, any::<bool>()).prop_map(|(u, neg)| FunctionFamily::lommel(if neg {
            -u / 2.0
        } else {
            u
        })
        .unwrap()),
        (-0.49..0.49f64).prop_map(|b| FunctionFamily::struve(b).unwrap()),
        Just(FunctionFamily::ramanujan(1.0, 0.5, 1.0).unwrap()),
    ];
    let form = prop_oneof![Just(Form::F), Just(Form::G), Just(Form::H)];
    (fam, form).prop_map(|(f, form)| NormalizedFunction::new(f, form).unwrap())
}
