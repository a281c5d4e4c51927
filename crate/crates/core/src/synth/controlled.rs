use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

/// Whether a control fires on `|1⟩` or on `|0⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

/// Two-qubit gate used to flip the target rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Entangler {
    #[default]
    Cnot,
    Cz,
}

impl Entangler {
    fn gate(self, control: usize, target: usize) -> Gate {
        match self {
            Entangler::Cnot => Gate::cnot(control, target),
            Entangler::Cz => Gate::Cz(control, target),
        }
    }
}

/// Order of the two halves of each recursion step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Ordering {
    /// Rotation, entangler, rotation, entangler.
    #[default]
    RotationFirst,
    /// Entangler, rotation, entangler, rotation.
    EntanglerFirst,
}

/// Controls and target of a multi-controlled `R_y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlSpec {
    controls: Vec<(usize, Polarity)>,
    target: usize,
}

impl ControlSpec {
    /// Controls are used in the given order; the last one is split off first.
    pub fn new(controls: Vec<(usize, Polarity)>, target: usize) -> Result<Self> {
        let mut seen = controls.iter().map(|&(q, _)| q).collect::<Vec<_>>();
        seen.push(target);
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidControls(format!("qubit {} used twice", w[0])));
        }
        Ok(Self { controls, target })
    }

    /// All controls positive.
    pub fn positive(controls: &[usize], target: usize) -> Result<Self> {
        Self::new(
            controls.iter().map(|&q| (q, Polarity::Positive)).collect(),
            target,
        )
    }

    pub fn controls(&self) -> &[(usize, Polarity)] {
        &self.controls
    }

    pub fn target(&self) -> usize {
        self.target
    }
}

/// `R_y(θ)` on the target, applied only when every control matches its polarity.
///
/// Built from `2^m` uniformly-controlled rotations `R_y(±θ/2^m)` interleaved
/// with entanglers, with adjacent duplicate entanglers cancelled; uses CNOTs
/// and the rotation-first ordering.
pub fn build_multi_controlled_ry(
    theta: f64,
    spec: &ControlSpec,
    n_qubits: usize,
) -> Result<Circuit> {
    build_multi_controlled_ry_with(
        theta,
        spec,
        n_qubits,
        Entangler::Cnot,
        Ordering::RotationFirst,
    )
}

/// [`build_multi_controlled_ry`] with an explicit entangler and ordering.
pub fn build_multi_controlled_ry_with(
    theta: f64,
    spec: &ControlSpec,
    n_qubits: usize,
    entangler: Entangler,
    ordering: Ordering,
) -> Result<Circuit> {
    if !theta.is_finite() {
        return Err(Error::NonFiniteAngle(theta));
    }
    let mut circuit = Circuit::new(n_qubits)?;
    circuit.extend(controlled_ry_gates(theta, spec, entangler, ordering))?;
    Ok(circuit)
}

/// Gate list of a multi-controlled `R_y`, negative controls conjugated by X.
pub(crate) fn controlled_ry_gates(
    theta: f64,
    spec: &ControlSpec,
    entangler: Entangler,
    ordering: Ordering,
) -> Vec<Gate> {
    let flips: Vec<Gate> = spec
        .controls
        .iter()
        .filter(|(_, p)| *p == Polarity::Negative)
        .map(|&(q, _)| Gate::X(q))
        .collect();
    let controls: Vec<usize> = spec.controls.iter().map(|&(q, _)| q).collect();
    let mut raw = Vec::new();
    recurse(theta, &controls, spec.target, entangler, ordering, &mut raw);

    let mut gates = flips.clone();
    gates.extend(cancel_entangler_runs(raw, spec.target));
    gates.extend(flips);
    gates
}

fn recurse(
    theta: f64,
    controls: &[usize],
    target: usize,
    entangler: Entangler,
    ordering: Ordering,
    out: &mut Vec<Gate>,
) {
    let Some((&last, rest)) = controls.split_last() else {
        out.push(Gate::Ry(theta, target));
        return;
    };
    let flip = entangler.gate(last, target);
    let half = theta / 2.0;
    match ordering {
        Ordering::RotationFirst => {
            recurse(half, rest, target, entangler, Ordering::RotationFirst, out);
            out.push(flip);
            recurse(
                -half,
                rest,
                target,
                entangler,
                Ordering::EntanglerFirst,
                out,
            );
            out.push(flip);
        }
        Ordering::EntanglerFirst => {
            out.push(flip);
            recurse(-half, rest, target, entangler, Ordering::RotationFirst, out);
            out.push(flip);
            recurse(half, rest, target, entangler, Ordering::EntanglerFirst, out);
        }
    }
}

/// Entanglers onto a common target commute, so inside each run of consecutive
/// ones only those occurring an odd number of times survive.
fn cancel_entangler_runs(gates: Vec<Gate>, target: usize) -> Vec<Gate> {
    let mut out = Vec::with_capacity(gates.len());
    let mut run: Vec<Gate> = Vec::new();
    let flush = |run: &mut Vec<Gate>, out: &mut Vec<Gate>| {
        let mut survivors: Vec<(Gate, usize)> = Vec::new();
        for g in run.drain(..) {
            match survivors.iter_mut().find(|(s, _)| *s == g) {
                Some((_, count)) => *count += 1,
                None => survivors.push((g, 1)),
            }
        }
        out.extend(
            survivors
                .into_iter()
                .filter(|(_, c)| c % 2 == 1)
                .map(|(g, _)| g),
        );
    };
    for gate in gates {
        if gate.is_two_qubit() && gate.acts_on(target) {
            run.push(gate);
        } else {
            flush(&mut run, &mut out);
            out.push(gate);
        }
    }
    flush(&mut run, &mut out);
    out
}
