//! Exact-arithmetic verification of module structure on Jacobians of
//! invariant polynomials.
//!
//! A Lie-algebra representation on `V = Q^n` is given by tagged generator
//! matrices ([`repcore::RepSpec`]). It induces actions on the polynomial ring
//! `A = Q[x1..xn]` and on `A ⊗ V`. On top of that the crate provides:
//!
//! * the map `f ⊗ e_i ↦ ∂f/∂x_i` and an exhaustive check that it intertwines
//!   every generator ([`jacmod::check_intertwining_phi`]);
//! * the quotient map `V → J(f)` for invariant `f`, highest-weight
//!   decomposition of invariant subspaces, and the containment of the
//!   highest weights of `J(f)` in those of `A_1` ([`jacmod::yau_check`]);
//! * invariant-polynomial computation with a Cayley–Sylvester counting oracle
//!   ([`modanalysis`]);
//! * the sl₂ mirror map `f ⊗ x_i ↦ c_i ∂f/∂x_{i'}` solved from its
//!   intertwining equations ([`jacmod::equivariant_mirror_map`]).
//!
//! Everything is computed over `Q` with no floating point.

pub mod jacmod;
pub mod modanalysis;
pub mod polyring;
pub mod qlinalg;
pub mod repcore;
pub mod repfile;

pub use polyring::{parse_poly, Monomial, Poly, Rational};
pub use qlinalg::{QMatrix, Subspace};
pub use repcore::RepSpec;

/// Default bound on the dimension of a graded piece `A_d`.
pub const DEFAULT_DIM_CAP: usize = 20_000;

/// Search budget for Kempf witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempfBudget {
    /// Largest absolute coefficient in the deterministic enumeration.
    pub max_height: u32,
    /// Cap on the number of deterministic candidates tried.
    pub max_candidates: usize,
    /// Number of seeded random rational combinations tried afterwards.
    pub random_trials: usize,
    pub seed: u64,
}

impl Default for KempfBudget {
    fn default() -> Self {
        KempfBudget {
            max_height: 3,
            max_candidates: 4096,
            random_trials: 64,
            seed: 0x5eed,
        }
    }
}

/// Limits shared by the checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub dim_cap: usize,
    pub kempf: KempfBudget,
    /// Degrees `1..=mirror_max_degree` supply the equations that determine
    /// the mirror-map coefficients.
    pub mirror_max_degree: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            dim_cap: DEFAULT_DIM_CAP,
            kempf: KempfBudget::default(),
            mirror_max_degree: 3,
        }
    }
}
