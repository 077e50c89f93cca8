//! One-entry corruptions of Hopf data, for exercising the validator.

use std::fmt;

use crate::exactla::Scalar;
use crate::report::Check;
use crate::HopfError;

use super::algebra::{validate_hopf, HopfData};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Mult,
    Unit,
    Comult,
    Counit,
    Antipode,
}

impl Part {
    pub const ALL: [Part; 5] = [Part::Mult, Part::Unit, Part::Comult, Part::Counit, Part::Antipode];

    pub fn len(self, d: usize) -> usize {
        match self {
            Part::Mult | Part::Comult => d * d * d,
            Part::Unit | Part::Counit => d,
            Part::Antipode => d * d,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::Mult => "mult",
            Part::Unit => "unit",
            Part::Comult => "comult",
            Part::Counit => "counit",
            Part::Antipode => "antipode",
        })
    }
}

/// Adds `by` to entry `idx` (in storage order) of one structure tensor.
pub fn corrupt(h: &HopfData, part: Part, idx: usize, by: &Scalar) -> HopfData {
    let d = h.dim;
    let mut out = h.clone();
    match part {
        Part::Mult | Part::Comult => {
            let t = if part == Part::Mult { &mut out.mult } else { &mut out.comult };
            let (i, j, k) = (idx / (d * d), (idx / d) % d, idx % d);
            let x = t.get(i, j, k) + by;
            t.set(i, j, k, x);
        }
        Part::Unit => out.unit[idx] = &out.unit[idx] + by,
        Part::Counit => out.counit[idx] = &out.counit[idx] + by,
        Part::Antipode => {
            let (i, j) = (idx / d, idx % d);
            let x = out.antipode.get(i, j) + by;
            out.antipode.set(i, j, x);
        }
    }
    out.name = format!("{} [{part} {idx} + {by}]", h.name);
    out
}

/// Outcome of one corruption: the first failing check, if any.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub part: Part,
    pub index: usize,
    pub caught: Option<Check>,
}

/// Corrupts every `stride`-th entry of every structure tensor by `+1` and
/// validates each result.
pub fn mutation_sweep(h: &HopfData, stride: usize) -> Result<Vec<Mutation>, HopfError> {
    let one = Scalar::one();
    let mut out = Vec::new();
    for part in Part::ALL {
        for index in (0..part.len(h.dim)).step_by(stride.max(1)) {
            let rep = validate_hopf(&corrupt(h, part, index, &one))?;
            out.push(Mutation { part, index, caught: rep.failures().next().cloned() });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::corpus::{sweedler, trivial};

    #[test]
    fn corrupted_mult_fails_associativity_or_more() {
        let h = sweedler();
        let bad = corrupt(h.data(), Part::Mult, 5, &Scalar::one());
        let rep = validate_hopf(&bad).unwrap();
        let c = rep.failures().next().expect("caught");
        assert!(c.witness.is_some());
    }

    #[test]
    fn every_entry_of_trivial_is_caught() {
        let sweep = mutation_sweep(trivial().data(), 1).unwrap();
        assert_eq!(sweep.len(), 5);
        assert!(sweep.iter().all(|m| m.caught.as_ref().is_some_and(|c| c.witness.is_some())));
    }
}
