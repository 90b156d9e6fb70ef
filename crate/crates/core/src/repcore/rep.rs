use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::qlinalg::QMatrix;
use crate::Rational;

use super::RepError;

/// How a generator participates in weight bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Raising,
    Lowering,
    Cartan,
    Other,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Raising => "raising",
            Role::Lowering => "lowering",
            Role::Cartan => "cartan",
            Role::Other => "other",
        })
    }
}

/// A Lie-algebra element acting on `V` by `matrix` in the standard basis
/// `e_1..e_n`: column `i` holds the image of `e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub role: Role,
    pub matrix: QMatrix,
}

/// Names of a raising/lowering/cartan triple claimed to satisfy the sl₂
/// relations `[E,F]=H`, `[H,E]=2E`, `[H,F]=-2F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sl2Triple {
    pub raising: String,
    pub lowering: String,
    pub cartan: String,
}

impl Sl2Triple {
    pub fn new(raising: &str, lowering: &str, cartan: &str) -> Self {
        Sl2Triple {
            raising: raising.into(),
            lowering: lowering.into(),
            cartan: cartan.into(),
        }
    }
}

impl fmt::Display for Sl2Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.raising, self.lowering, self.cartan)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoVariables,
    MatrixShape { generator: String, rows: usize, cols: usize },
    DuplicateName(String),
    NoCartan,
    CartanNotDiagonal(String),
    CartanNotInteger(String),
    UnknownTripleMember { triple: Sl2Triple, name: String },
    TripleRole { triple: Sl2Triple, name: String, expected: Role },
    BracketEF(Sl2Triple),
    BracketHE(Sl2Triple),
    BracketHF(Sl2Triple),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoVariables => write!(f, "representation space has dimension 0"),
            Violation::MatrixShape { generator, rows, cols } => {
                write!(f, "generator {generator}: matrix is {rows}x{cols}")
            }
            Violation::DuplicateName(n) => write!(f, "duplicate generator name {n}"),
            Violation::NoCartan => write!(f, "no cartan generator"),
            Violation::CartanNotDiagonal(n) => write!(f, "{n}: cartan not diagonal"),
            Violation::CartanNotInteger(n) => write!(f, "{n}: cartan not integer"),
            Violation::UnknownTripleMember { triple, name } => {
                write!(f, "triple {triple}: unknown generator {name}")
            }
            Violation::TripleRole { triple, name, expected } => {
                write!(f, "triple {triple}: {name} must have role {expected}")
            }
            Violation::BracketEF(t) => write!(f, "triple {t}: [E,F]≠H"),
            Violation::BracketHE(t) => write!(f, "triple {t}: [H,E]≠2E"),
            Violation::BracketHF(t) => write!(f, "triple {t}: [H,F]≠-2F"),
        }
    }
}

/// A representation of a Lie algebra on `V = Q^n` through tagged generator
/// matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSpec {
    n: usize,
    generators: Vec<Generator>,
    sl2_triples: Vec<Sl2Triple>,
}

impl RepSpec {
    /// Assembles a representation without checking it; see [`RepSpec::validate`].
    pub fn new(n: usize, generators: Vec<Generator>, sl2_triples: Vec<Sl2Triple>) -> Self {
        RepSpec {
            n,
            generators,
            sl2_triples,
        }
    }

    /// [`RepSpec::new`] followed by [`RepSpec::validate`].
    pub fn validated(
        n: usize,
        generators: Vec<Generator>,
        sl2_triples: Vec<Sl2Triple>,
    ) -> Result<Self, RepError> {
        let rep = Self::new(n, generators, sl2_triples);
        rep.validate().map_err(RepError::Invalid)?;
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn sl2_triples(&self) -> &[Sl2Triple] {
        &self.sl2_triples
    }

    pub fn generator_index(&self, name: &str) -> Result<usize, RepError> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| RepError::UnknownGenerator(name.to_string()))
    }

    pub fn generator(&self, name: &str) -> Result<&Generator, RepError> {
        self.generator_index(name).map(|i| &self.generators[i])
    }

    pub fn indices_with_role(&self, role: Role) -> impl Iterator<Item = usize> + '_ {
        self.generators
            .iter()
            .enumerate()
            .filter(move |(_, g)| g.role == role)
            .map(|(i, _)| i)
    }

    /// Integer diagonals of the cartan generators, in generator order.
    ///
    /// Only meaningful after [`RepSpec::validate`] succeeds; non-integer or
    /// out-of-range entries read as `None`.
    pub fn cartan_diagonals(&self) -> Vec<Option<Vec<i64>>> {
        self.indices_with_role(Role::Cartan)
            .map(|i| {
                let m = &self.generators[i].matrix;
                (0..self.n).map(|k| m.get(k, k).to_i64()).collect()
            })
            .collect()
    }

    /// Checks shapes, cartan diagonality and integrality, and the bracket
    /// relations of each declared sl₂ triple.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        if self.n == 0 {
            out.push(Violation::NoVariables);
        }
        let mut seen = HashSet::new();
        let mut shapes_ok = true;
        for g in &self.generators {
            if !seen.insert(g.name.as_str()) {
                out.push(Violation::DuplicateName(g.name.clone()));
            }
            if g.matrix.rows() != self.n || g.matrix.cols() != self.n {
                shapes_ok = false;
                out.push(Violation::MatrixShape {
                    generator: g.name.clone(),
                    rows: g.matrix.rows(),
                    cols: g.matrix.cols(),
                });
                continue;
            }
            if g.role == Role::Cartan {
                if !g.matrix.is_diagonal() {
                    out.push(Violation::CartanNotDiagonal(g.name.clone()));
                } else if (0..self.n).any(|k| g.matrix.get(k, k).to_i64().is_none()) {
                    out.push(Violation::CartanNotInteger(g.name.clone()));
                }
            }
        }
        if !self.generators.iter().any(|g| g.role == Role::Cartan) {
            out.push(Violation::NoCartan);
        }
        for t in &self.sl2_triples {
            let mut members = Vec::new();
            for (name, role) in [
                (&t.raising, Role::Raising),
                (&t.lowering, Role::Lowering),
                (&t.cartan, Role::Cartan),
            ] {
                match self.generators.iter().find(|g| &g.name == name) {
                    None => out.push(Violation::UnknownTripleMember {
                        triple: t.clone(),
                        name: name.clone(),
                    }),
                    Some(g) => {
                        if g.role != role {
                            out.push(Violation::TripleRole {
                                triple: t.clone(),
                                name: name.clone(),
                                expected: role,
                            });
                        }
                        members.push(&g.matrix);
                    }
                }
            }
            if members.len() != 3 || !shapes_ok {
                continue;
            }
            let (e, f, h) = (members[0], members[1], members[2]);
            let two = Rational::from_integer(2);
            if e.bracket(f) != *h {
                out.push(Violation::BracketEF(t.clone()));
            }
            if h.bracket(e) != e.scale(&two) {
                out.push(Violation::BracketHE(t.clone()));
            }
            if h.bracket(f) != f.scale(&-two) {
                out.push(Violation::BracketHF(t.clone()));
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }
}
