use quadric_core::lie::basis;
use quadric_core::moment::{check_descent, verify_orbit_relations};

#[test]
fn orbit_relations_k3() {
    let checks = verify_orbit_relations(3);
    assert!(checks.len() >= 10);
    for c in checks {
        assert!(c.passed, "{}: {}", c.id, c.residue);
    }
}

#[test]
fn descent_k3() {
    for (label, xi) in basis(3) {
        assert!(check_descent(&xi).is_zero(), "{label}");
    }
}
