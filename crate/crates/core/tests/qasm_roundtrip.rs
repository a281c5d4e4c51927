use fermix_core::oracle::ExcitationKind;
use fermix_core::{emit_qasm, read_qasm, synthesize, ExcitationSpec, Method};

#[test]
fn synthesized_circuits_survive_a_qasm_round_trip() {
    let specs = [
        (ExcitationKind::SingleQubit, vec![0, 1]),
        (ExcitationKind::DoubleQubit, vec![0, 1, 2, 3]),
        (ExcitationKind::SingleFermionic, vec![0, 4]),
        (ExcitationKind::DoubleFermionic, vec![0, 2, 5, 7]),
    ];
    for (kind, indices) in specs {
        let spec = ExcitationSpec::minimal(kind, &indices, -0.4321).unwrap();
        for method in [Method::Optimized, Method::Standard] {
            let circuit = synthesize(&spec, method).unwrap();
            let text = emit_qasm(&circuit);
            assert_eq!(read_qasm(&text).unwrap(), circuit, "{kind} {method}");
            let two_qubit = text
                .lines()
                .filter(|l| l.starts_with("cx ") || l.starts_with("cz "))
                .count();
            assert_eq!(two_qubit, circuit.resources().cnot_count);
        }
    }
}
