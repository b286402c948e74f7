use kostant_core::hecke::expr::{evaluate, format_value};
use kostant_core::Hecke;
use std::sync::OnceLock;

fn s7() -> &'static Hecke {
    static H: OnceLock<Hecke> = OnceLock::new();
    H.get_or_init(|| Hecke::new(7).unwrap())
}

#[test]
fn kl_product_three_terms() {
    let hk = s7();
    let v = evaluate(hk, "C: C(6,5)*C(1,2,4,3,2,5,6)").unwrap();
    assert_eq!(format_value(hk, &v), "C'(1,2,3,2,6)+C'(1,2,3,2,5,6,5)+C'(1,2,4,5,6,5,4,3,2)");
}

#[test]
fn dual_times_kl_two_terms() {
    let hk = s7();
    let v = evaluate(hk, "D: D(1,2,4,3,2,1,5,6,5,4)*C(6,5)").unwrap();
    assert_eq!(format_value(hk, &v), "D'(1,2,4,3,2,1,5,6,5,4)+(v+v^-1)D'(1,2,4,3,2,1,5,4,6,5,4)");
}

#[test]
fn graded_multiplicity_cubic() {
    let hk = s7();
    let v = evaluate(hk, "coeff(C(1,3,4,3,6)*C(1,2,3,4,5,6,5,4,3,2,1), 1,3,4,3,6)").unwrap();
    assert_eq!(format_value(hk, &v), "v^3 + 3*v + 3*v^(-1) + v^(-3)");
}

#[test]
fn identity_in_standard_basis() {
    let hk = s7();
    assert_eq!(format_value(hk, &evaluate(hk, "H: H()").unwrap()), "H()");
}
