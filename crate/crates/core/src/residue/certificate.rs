use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{validate, GraphRepresentation};
use crate::residue::linalg;
use crate::residue::system::{
    build_system, classify_with_basis, solution_space, ResidueSystem, VariableClass, VariableKind,
};

/// Draws tried before giving up.
pub const MAX_ATTEMPTS: u32 = 64;
/// Basis coefficients are drawn from `-COEFF_RANGE..=COEFF_RANGE`.
const COEFF_RANGE: i64 = 3;

/// An exact complex number `re + i im`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexQ {
    pub re: BigRational,
    pub im: BigRational,
}

impl ComplexQ {
    pub fn zero() -> Self {
        ComplexQ {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `Im(conj(self) * other)`; zero iff the two are real multiples of
    /// each other.
    pub fn cross(&self, other: &ComplexQ) -> BigRational {
        &self.re * &other.im - &self.im * &other.re
    }
}

impl fmt::Display for ComplexQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

/// Why the residues at a vertex can be chosen nonzero and summing to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexCondition {
    /// The values span the plane over the reals.
    Spanning,
    /// Exactly two values are nonzero.
    TwoNonzero,
    /// A single residue, necessarily zero.
    SinglePole,
    /// No residues at all.
    NoResidues,
}

impl VertexCondition {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexCondition::Spanning => "spanning",
            VertexCondition::TwoNonzero => "two_nonzero",
            VertexCondition::SinglePole => "single_pole",
            VertexCondition::NoResidues => "no_residues",
        }
    }
}

/// An exact solution of the residue system meeting every nonvanishing and
/// vertex condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueCertificate {
    pub variables: Vec<VariableKind>,
    pub values: Vec<ComplexQ>,
    pub nonzero: Vec<bool>,
    pub vertex_conditions: Vec<VertexCondition>,
    /// For `k = 2` the vertex rows are a sufficient condition only.
    pub sufficient_only: bool,
    /// Per pole: for `k = 2`, an order-2 pole whose value is the holonomy of
    /// the cylinder's waist curve.
    pub waist_curve_poles: Vec<bool>,
    /// The seed of the successful draw.
    pub seed: u64,
    pub attempts: u32,
}

impl ResidueCertificate {
    /// Row-by-row residuals of the assignment; all zero for a genuine
    /// solution.
    pub fn residuals(&self, system: &ResidueSystem) -> Vec<ComplexQ> {
        system
            .rows()
            .iter()
            .map(|row| {
                let mut acc = ComplexQ::zero();
                for (&c, v) in row.iter().zip(&self.values) {
                    if c != 0 {
                        let c = BigRational::from_integer(c.into());
                        acc.re += &c * &v.re;
                        acc.im += &c * &v.im;
                    }
                }
                acc
            })
            .collect()
    }

    /// Re-checks every invariant against `system`.
    pub fn verify(&self, system: &ResidueSystem) -> bool {
        if self.values.len() != system.column_count() || self.variables != system.variables() {
            return false;
        }
        if !self.residuals(system).iter().all(ComplexQ::is_zero) {
            return false;
        }
        let stratum = system.rep().stratum();
        let k = i64::from(stratum.k());
        let required_ok = self.variables.iter().zip(&self.values).all(|(var, v)| match var {
            VariableKind::EdgeEnd { .. } => !v.is_zero(),
            VariableKind::Pole { pole } => stratum.poles()[*pole] != k || !v.is_zero(),
        });
        let flags_ok = self
            .values
            .iter()
            .zip(&self.nonzero)
            .all(|(v, &nz)| nz == !v.is_zero());
        let vertices_ok = self
            .vertex_conditions
            .iter()
            .enumerate()
            .all(|(i, &cond)| vertex_meets(&self.values, system.vertex_variables(i), cond));
        required_ok && flags_ok && vertices_ok && self.vertex_conditions.len() == system.rep().level() + 1
    }
}

fn vertex_meets(values: &[ComplexQ], vars: &[usize], cond: VertexCondition) -> bool {
    let nonzero = vars.iter().filter(|&&x| !values[x].is_zero()).count();
    match cond {
        VertexCondition::Spanning => vars.iter().any(|&a| {
            vars.iter()
                .any(|&b| !values[a].cross(&values[b]).is_zero())
        }),
        VertexCondition::TwoNonzero => nonzero == 2,
        VertexCondition::SinglePole => vars.len() == 1,
        VertexCondition::NoResidues => vars.is_empty(),
    }
}

/// Searches for a residue certificate.
///
/// Real and imaginary parts are independent integer combinations of the
/// null-space basis, drawn from `ChaCha8Rng` seeded with `seed + attempt`.
pub fn realize_residues(rep: &GraphRepresentation, seed: u64) -> Result<ResidueCertificate> {
    let stratum = rep.stratum();
    stratum.require_k12()?;
    let violations = validate(rep);
    if let Some(v) = violations.first() {
        return Err(Error::MalformedInput(format!("invalid representation: {v}")));
    }
    let system = build_system(rep);
    let basis = solution_space(&system);
    let classes = classify_with_basis(&system, &basis);
    let k = i64::from(stratum.k());

    for (x, var) in system.variables().iter().enumerate() {
        let required = match var {
            VariableKind::EdgeEnd { .. } => true,
            VariableKind::Pole { pole } => stratum.poles()[*pole] == k,
        };
        if required && classes[x] == VariableClass::IdenticallyZero {
            return Err(Error::DegenerateVariable {
                variable: var.to_string(),
            });
        }
    }

    let vertices = rep.level() + 1;
    let mut conditions = Vec::with_capacity(vertices);
    for i in 0..vertices {
        let vars = system.vertex_variables(i);
        let projected: Vec<Vec<BigRational>> = basis
            .iter()
            .map(|b| vars.iter().map(|&x| b[x].clone()).collect())
            .collect();
        let r = if vars.is_empty() {
            0
        } else {
            linalg::rank(projected)
        };
        let live = vars
            .iter()
            .filter(|&&x| classes[x] == VariableClass::GenericallyNonzero)
            .count();
        let cond = match (r, vars.len()) {
            (r, _) if r >= 2 => VertexCondition::Spanning,
            (1, _) if live == 2 => VertexCondition::TwoNonzero,
            (0, 0) => VertexCondition::NoResidues,
            (0, 1) => VertexCondition::SinglePole,
            _ => return Err(Error::UnsatisfiableVertex { vertex: i }),
        };
        conditions.push(cond);
    }

    let waist_curve_poles: Vec<bool> = stratum
        .poles()
        .iter()
        .map(|&b| stratum.k() == 2 && b == 2)
        .collect();

    for attempt in 0..MAX_ATTEMPTS {
        let used = seed.wrapping_add(u64::from(attempt));
        let mut rng = ChaCha8Rng::seed_from_u64(used);
        let re = combine(&basis, system.column_count(), &mut rng);
        let im = combine(&basis, system.column_count(), &mut rng);
        let values: Vec<ComplexQ> = re
            .into_iter()
            .zip(im)
            .map(|(re, im)| ComplexQ { re, im })
            .collect();
        let live_ok = classes
            .iter()
            .zip(&values)
            .all(|(c, v)| *c == VariableClass::IdenticallyZero || !v.is_zero());
        let vertices_ok = conditions
            .iter()
            .enumerate()
            .all(|(i, &c)| vertex_meets(&values, system.vertex_variables(i), c));
        if live_ok && vertices_ok {
            let nonzero = values.iter().map(|v| !v.is_zero()).collect();
            return Ok(ResidueCertificate {
                variables: system.variables().to_vec(),
                values,
                nonzero,
                vertex_conditions: conditions,
                sufficient_only: stratum.k() == 2,
                waist_curve_poles,
                seed: used,
                attempts: attempt + 1,
            });
        }
    }
    Err(Error::RetryCapExceeded {
        attempts: MAX_ATTEMPTS,
    })
}

fn combine(basis: &[Vec<BigRational>], columns: usize, rng: &mut ChaCha8Rng) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); columns];
    for b in basis {
        let c: i64 = rng.gen_range(-COEFF_RANGE..=COEFF_RANGE);
        if c == 0 {
            continue;
        }
        let c = BigRational::from_integer(c.into());
        for (o, x) in out.iter_mut().zip(b) {
            if !x.is_zero() {
                *o += &c * x;
            }
        }
    }
    out
}
