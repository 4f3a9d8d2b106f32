//! Property tests for the algebraic invariants of the Pauli layer, the
//! stabilizer expectation machinery, and the graph/code glue.

mod common;

use common::random_stabilizer_state;
use proptest::prelude::*;
use qfikit::bits::BitVec;
use qfikit::constructions::{steane_code, toric_code};
use qfikit::hamiltonian::PauliHamiltonian;
use qfikit::pauli::PauliOperator;
use qfikit::qfi::qfi_stabilizer;
use qfikit::tanner::partition_equivalence_classes;

fn arb_pauli(n: usize) -> impl Strategy<Value = PauliOperator> {
    (
        proptest::collection::vec(any::<bool>(), n),
        proptest::collection::vec(any::<bool>(), n),
        0u8..4,
    )
        .prop_map(move |(x, z, phase)| {
            PauliOperator::from_parts(n, BitVec::from_bools(&x), BitVec::from_bools(&z), phase)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mul_is_associative(a in arb_pauli(8), b in arb_pauli(8), c in arb_pauli(8)) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn commutes_equals_symplectic_form(a in arb_pauli(6), b in arb_pauli(6)) {
        let form = (a.x_bits().and_count(b.z_bits()) + a.z_bits().and_count(b.x_bits())) & 1;
        prop_assert_eq!(a.commutes_with(&b).unwrap(), form == 0);
        // and the product order only differs by the symplectic sign
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        let rel = ab.phase_relative_to(&ba).unwrap();
        prop_assert_eq!(rel, if form == 0 { 0 } else { 2 });
    }

    #[test]
    fn weight_is_subadditive(a in arb_pauli(10), b in arb_pauli(10)) {
        let ab = a.mul(&b).unwrap();
        prop_assert!(ab.weight() <= a.weight() + b.weight());
    }

    #[test]
    fn parse_format_round_trips(p in arb_pauli(12)) {
        let text = p.to_string();
        let back: PauliOperator = text.parse().unwrap();
        prop_assert_eq!(p, back);
    }

    #[test]
    fn adjoint_is_involutive_and_squares_identity(p in arb_pauli(7)) {
        prop_assert_eq!(p.adjoint().adjoint(), p.clone());
        prop_assert!(p.mul(&p.adjoint()).unwrap().is_identity());
    }
}

#[test]
fn generator_expectations_match_signs() {
    for seed in 0..20 {
        let st = random_stabilizer_state(6, seed);
        for (g, &s) in st.generators().iter().zip(st.signs()) {
            assert_eq!(st.expectation(g).unwrap(), s);
        }
    }
}

#[test]
fn expectation_squares_to_membership_indicator() {
    // exp(P)^2 == 1 iff +-P is in the signed group; anticommutation with any
    // generator forces 0
    let mut rng_seed = 0;
    for _ in 0..10 {
        rng_seed += 1;
        let st = random_stabilizer_state(5, rng_seed);
        for g in st.generators() {
            assert_eq!(st.expectation(g).unwrap().abs(), 1);
            let flipped = g.mul_phase(2);
            assert_eq!(st.expectation(&flipped).unwrap().abs(), 1);
        }
    }
}

#[test]
fn equivalence_classes_are_transitive_and_bound_qfi() {
    // On a code state with d >= 2K+1, within-class pairwise products are
    // stabilizers and the class-size bound sum_l |A_l|^2 dominates the QFI.
    use qfikit::state::LogicalBasis;
    for (code, state) in [
        {
            let c = toric_code(3, 3).unwrap();
            let s = c.state(&[LogicalBasis::XPlus, LogicalBasis::XPlus]).unwrap();
            (c, s)
        },
        {
            let c = steane_code();
            let s = c.state(&[LogicalBasis::XPlus]).unwrap();
            (c, s)
        },
    ] {
        let n = code.num_qubits();
        let terms: Vec<(f64, PauliOperator)> = (0..n)
            .map(|q| (1.0, PauliOperator::single(n, q, qfikit::pauli::PauliKind::Z)))
            .collect();
        let h = PauliHamiltonian::new(n, terms).unwrap();
        let classes = partition_equivalence_classes(&code, &h).unwrap();
        // transitivity: all pairs inside a class multiply to a check element
        let group = {
            let mut space = qfikit::bits::RowSpace::new(2 * n);
            for g in code.check_generators() {
                space.insert(&g.symplectic());
            }
            space
        };
        for block in &classes.classes {
            for (ai, &a) in block.iter().enumerate() {
                for &b in &block[ai + 1..] {
                    let prod = h.terms()[a].1.mul(&h.terms()[b].1).unwrap();
                    assert!(group.contains(&prod.symplectic()));
                }
            }
        }
        let bound: f64 = classes
            .classes
            .iter()
            .map(|b| (b.len() * b.len()) as f64)
            .sum();
        let qfi = qfi_stabilizer(&state, &h).unwrap().value;
        assert!(
            qfi <= bound + 1e-9,
            "class bound violated: qfi {qfi} > sum |A_l|^2 = {bound}"
        );
    }
}

#[test]
fn coset_minimized_logicals_keep_symplectic_pairing() {
    for (lx, ly) in [(2, 2), (3, 3), (4, 2)] {
        let code = toric_code(lx, ly).unwrap();
        for (a, pa) in code.logicals().iter().enumerate() {
            for (b, pb) in code.logicals().iter().enumerate() {
                assert_eq!(pa.x.commutes_with(&pb.z).unwrap(), a != b);
                assert!(pa.x.commutes_with(&pb.x).unwrap());
                assert!(pa.z.commutes_with(&pb.z).unwrap());
            }
        }
    }
}
