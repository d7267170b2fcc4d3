use std::fmt;

use serde::Serialize;

use super::{Lattice, TruthValue};

/// Grid used to sample the built-in unit-interval lattices.
pub const VALIDATION_GRID: usize = 101;

/// Outcome of one identity or axiom over all sampled tuples.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub tuples: usize,
    /// The first failing tuple, formatted with the lattice's value syntax.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{status} {:<38} {}", self.id, self.statement)?;
        if let Some(w) = &self.witness {
            write!(f, "  witness ({})", w.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub lattice: String,
    /// `exhaustive` for finite carriers, `grid:<n>` for the unit interval.
    pub coverage: String,
    pub checks: Vec<IdentityCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn check(&self, id: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice {} ({})", self.lattice, self.coverage)?;
        for check in &self.checks {
            writeln!(f, "  {check}")?;
        }
        let verdict = if self.passed() {
            "all identities hold"
        } else {
            "VIOLATIONS FOUND"
        };
        write!(f, "{verdict}")
    }
}

/// Checks every residuated-lattice axiom and the derived identities.
///
/// Finite carriers are checked exhaustively; unit-interval lattices on a
/// uniform 101-point grid. Failures are reported, never raised.
pub fn validate_lattice(lattice: &Lattice) -> ValidationReport {
    validate_on(lattice, &lattice.samples(VALIDATION_GRID))
}

/// Same as [`validate_lattice`] over an explicit sample set.
pub fn validate_on(lattice: &Lattice, samples: &[TruthValue]) -> ValidationReport {
    let l = lattice;
    let le = |a, b| l.leq_unchecked(a, b);
    let eq = |a, b| l.eq(a, b);
    let t = |a, b| l.tensor_unchecked(a, b);
    let r = |a, b| l.residuum_unchecked(a, b);
    let m = |a, b| l.meet_unchecked(a, b);
    let j = |a, b| l.join_unchecked(a, b);
    let (zero, one) = (l.bottom(), l.top());

    let mut checks = Vec::new();
    let mut run = |id, statement, arity, pred: &dyn Fn(&[TruthValue]) -> bool| {
        checks.push(check_tuples(l, samples, id, statement, arity, pred));
    };

    run(
        "partial-order",
        "≤ is reflexive, antisymmetric and transitive",
        3,
        &|v| {
            let (a, b, c) = (v[0], v[1], v[2]);
            le(a, a)
                && (!(le(a, b) && le(b, a)) || eq(a, b))
                && (!(le(a, b) && le(b, c)) || le(a, c))
        },
    );
    run("bounds", "0 ≤ a ≤ 1", 1, &|v| {
        le(zero, v[0]) && le(v[0], one)
    });
    run(
        "meet-is-glb",
        "a ∧ b is the greatest lower bound",
        3,
        &|v| {
            let (a, b, c) = (v[0], v[1], v[2]);
            let ab = m(a, b);
            le(ab, a) && le(ab, b) && (!(le(c, a) && le(c, b)) || le(c, ab))
        },
    );
    run("join-is-lub", "a ∨ b is the least upper bound", 3, &|v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        let ab = j(a, b);
        le(a, ab) && le(b, ab) && (!(le(a, c) && le(b, c)) || le(ab, c))
    });
    run("tensor-commutative", "a ⊗ b = b ⊗ a", 2, &|v| {
        eq(t(v[0], v[1]), t(v[1], v[0]))
    });
    run(
        "tensor-associative",
        "(a ⊗ b) ⊗ c = a ⊗ (b ⊗ c)",
        3,
        &|v| eq(t(t(v[0], v[1]), v[2]), t(v[0], t(v[1], v[2]))),
    );
    run("tensor-unit", "a ⊗ 1 = a", 1, &|v| {
        eq(t(v[0], one), v[0]) && eq(t(one, v[0]), v[0])
    });
    run(
        "tensor-monotone",
        "a ≤ b implies a ⊗ c ≤ b ⊗ c",
        3,
        &|v| !le(v[0], v[1]) || le(t(v[0], v[2]), t(v[1], v[2])),
    );
    run("adjunction", "a ⊗ b ≤ c iff a ≤ b → c", 3, &|v| {
        le(t(v[0], v[1]), v[2]) == le(v[0], r(v[1], v[2]))
    });
    run("exchange", "(a ⊗ b) → c = a → (b → c)", 3, &|v| {
        eq(r(t(v[0], v[1]), v[2]), r(v[0], r(v[1], v[2])))
    });
    run(
        "tensor-distributes-over-join",
        "a ⊗ (b ∨ c) = (a ⊗ b) ∨ (a ⊗ c)",
        3,
        &|v| eq(t(v[0], j(v[1], v[2])), j(t(v[0], v[1]), t(v[0], v[2]))),
    );
    run(
        "residuum-preserves-meet",
        "a → (b ∧ c) = (a → b) ∧ (a → c)",
        3,
        &|v| eq(r(v[0], m(v[1], v[2])), m(r(v[0], v[1]), r(v[0], v[2]))),
    );
    run(
        "residuum-antitone-join",
        "(a ∨ b) → c = (a → c) ∧ (b → c)",
        3,
        &|v| eq(r(j(v[0], v[1]), v[2]), m(r(v[0], v[2]), r(v[1], v[2]))),
    );
    run(
        "tensor-meet-inequality",
        "a ⊗ (b ∧ c) ≤ (a ⊗ b) ∧ (a ⊗ c)",
        3,
        &|v| le(t(v[0], m(v[1], v[2])), m(t(v[0], v[1]), t(v[0], v[2]))),
    );
    run(
        "residuum-join-inequality",
        "(a → b) ∨ (a → c) ≤ a → (b ∨ c)",
        3,
        &|v| le(j(r(v[0], v[1]), r(v[0], v[2])), r(v[0], j(v[1], v[2]))),
    );
    run(
        "residuum-meet-antecedent-inequality",
        "(a → c) ∨ (b → c) ≤ (a ∧ b) → c",
        3,
        &|v| le(j(r(v[0], v[2]), r(v[1], v[2])), r(m(v[0], v[1]), v[2])),
    );

    ValidationReport {
        lattice: lattice.name(),
        coverage: if lattice.is_unit_interval() {
            format!("grid:{}", samples.len())
        } else {
            "exhaustive".to_string()
        },
        checks,
    }
}

fn check_tuples(
    lattice: &Lattice,
    samples: &[TruthValue],
    id: &'static str,
    statement: &'static str,
    arity: usize,
    pred: &dyn Fn(&[TruthValue]) -> bool,
) -> IdentityCheck {
    let n = samples.len();
    let total = n.pow(arity as u32);
    let mut tuple = vec![samples[0]; arity];
    for index in 0..total {
        let mut rest = index;
        for slot in (0..arity).rev() {
            tuple[slot] = samples[rest % n];
            rest /= n;
        }
        if !pred(&tuple) {
            return IdentityCheck {
                id,
                statement,
                passed: false,
                tuples: index + 1,
                witness: Some(tuple.iter().map(|&v| lattice.format_value(v)).collect()),
            };
        }
    }
    IdentityCheck {
        id,
        statement,
        passed: true,
        tuples: total,
        witness: None,
    }
}
