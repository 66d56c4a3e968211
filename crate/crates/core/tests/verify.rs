use num_traits::Zero;

use graphcx::feynman::{theta_coefficient, FeynmanTransform, Operad};
use graphcx::verify::{
    verify_dsquared, verify_nontriviality, verify_propzero, verify_theta_coefficient, verify_wheel_cycle, Certificate,
    Verdict,
};

fn reproduces(c: &Certificate) {
    let text = serde_json::to_string(c).unwrap();
    let back: Certificate = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, c);
    let again = back.rerun().unwrap();
    assert_eq!(again.verdict, c.verdict, "{}", c.claim);
    assert_eq!(again.witness, c.witness, "{}", c.claim);
}

#[test]
fn certificates_rerun_to_the_same_verdict() {
    for c in [
        verify_wheel_cycle(1).unwrap(),
        verify_wheel_cycle(2).unwrap(),
        verify_theta_coefficient(1).unwrap(),
        verify_propzero(1).unwrap(),
        verify_dsquared(Operad::Com, 3, 0).unwrap(),
        verify_dsquared(Operad::HLie, 1, 4).unwrap(),
        verify_nontriviality(1, true).unwrap(),
    ] {
        assert_eq!(c.verdict, Verdict::Pass, "{}: {}", c.claim, c.witness);
        reproduces(&c);
    }
}

#[test]
fn certificate_layout() {
    let c = verify_theta_coefficient(1).unwrap();
    let v: serde_json::Value = serde_json::to_value(&c).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["claim", "ms", "params", "verdict", "witness"]);
    assert_eq!(v["verdict"], "PASS");
}

#[test]
fn routes_agree_at_genus_three() {
    let pipeline = verify_nontriviality(1, false).unwrap();
    let brute = verify_nontriviality(1, true).unwrap();
    assert_eq!(pipeline.verdict, brute.verdict);
    assert_eq!(brute.verdict, Verdict::Pass);
}

/// Every triangle of the genus three wheel lands on the same multiple of β.
#[test]
fn triangles_contribute_equally() {
    let t = FeynmanTransform::new(Operad::HLie);
    let c = theta_coefficient(&t, 1).unwrap();
    assert_eq!(c.per_nest.len(), 4);
    assert!(c
        .per_nest
        .iter()
        .all(|(nest, x)| nest.len() == 3 && *x == c.per_nest[0].1));
    assert!(!c.coefficient.is_zero());
    assert_eq!(c.coefficient, &c.per_nest[0].1 * graphcx::Q::from_integer(4.into()));
}

#[test]
fn out_of_range_parameters_are_errors() {
    assert!(verify_theta_coefficient(0).is_err());
    assert!(verify_theta_coefficient(4).is_err());
    assert!(verify_nontriviality(3, true).is_err());
}
