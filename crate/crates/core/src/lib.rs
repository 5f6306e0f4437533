//! Exact representation theory of tensor powers of the spinor representation
//! of `so(2n+1)` (root system `B_n`), together with the character measure on
//! irreducible components and its Poisson-type limit near the boundary of the
//! weight diagram.
//!
//! All weights are stored in doubled orthogonal coordinates (`λ_i = 2·λ̃_i`),
//! so the spinor weights are the vertices `{±1}^n` of a cube and every
//! character is a Laurent polynomial with integer exponents in `y_i = e^{t_i}`.
//!
//! Modules, bottom-up:
//!
//! - [`rootsys`]: weights, boundary offsets `s`, Weyl groups of `B_n` and `A_{n-1}`.
//! - [`exactalg`]: big-integer factorials, rationals, Laurent polynomials.
//! - [`characters`]: spinor character, Weyl alternants, Freudenthal oracle,
//!   `sl_n` characters of the boundary slice.
//! - [`multiplicities`]: closed-form tensor-power multiplicities, their
//!   asymptotics, and an iterated Brauer–Klimyk oracle.
//! - [`measure`]: Plancherel and character measures, exact tables and sampling.
//! - [`limitlaw`]: the boundary limit density and convergence diagnostics.
//! - [`cli`]: the `spinorpow` command line front end.
//!
//! See the crate's `examples/` directory for one runnable program per capability.

pub mod characters;
pub mod cli;
pub mod error;
pub mod exactalg;
pub mod limitlaw;
pub mod measure;
pub mod multiplicities;
pub mod output;
pub mod rootsys;

pub use error::{Error, Result};
