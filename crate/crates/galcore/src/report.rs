//! Validation reports. Checks never stop at the first problem; every
//! violated instance of an axiom is collected with its witnesses so a
//! failing structure can be diagnosed in one pass.

use std::fmt;

/// Which side of a connection a witness lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    P,
    Q,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::P => write!(f, "P"),
            Side::Q => write!(f, "Q"),
        }
    }
}

/// One violated axiom instance, with the elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// x is not below itself.
    Irreflexive { x: usize },
    /// x <= y and y <= x for distinct x, y.
    Antisymmetry { x: usize, y: usize },
    /// x <= y and y <= z but not x <= z.
    Transitivity { x: usize, y: usize, z: usize },
    /// lo <= hi in the domain but map(hi) is not below map(lo).
    NotAntitone { side: Side, lo: usize, hi: usize },
    /// The round trip does not sit above x: on side P, not x <= g(f(x)).
    NotInflationary { side: Side, x: usize },
    /// p <= g(q) and q <= f(p) disagree.
    AdjointMismatch { p: usize, q: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Irreflexive { x } => write!(f, "reflexivity fails at {x}"),
            Violation::Antisymmetry { x, y } => {
                write!(f, "antisymmetry fails at {x} and {y}")
            }
            Violation::Transitivity { x, y, z } => {
                write!(f, "transitivity fails at {x} <= {y} <= {z}")
            }
            Violation::NotAntitone { side, lo, hi } => {
                write!(f, "map on side {side} is not antitone at {lo} <= {hi}")
            }
            Violation::NotInflationary { side, x } => {
                write!(f, "round trip on side {side} does not dominate {x}")
            }
            Violation::AdjointMismatch { p, q } => {
                write!(f, "adjoint condition fails at p={p}, q={q}")
            }
        }
    }
}

/// Outcome of a structural check: valid iff no violations were found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            writeln!(f, "{} violation(s):", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  {v}")?;
            }
            Ok(())
        }
    }
}
