//! Stabilizer-formalism toolkit for quantum metrology.
//!
//! The crate computes exact quantum Fisher information (QFI) of stabilizer
//! states under Pauli-sum Hamiltonians, builds the code families that realize
//! Heisenberg-limited scaling (repetition/GHZ, asymmetric toric, classical
//! LDPC graph codes), and checks the circuit-depth and code-distance upper
//! bounds that rule the scaling out for shallow circuits and well-protected
//! codes.
//!
//! Two independent QFI routes are provided and cross-checked everywhere:
//!
//! - [`qfi::qfi_stabilizer`]: exact correlation-function sum on the tableau,
//!   no statevector ever built, usable to thousands of qubits;
//! - [`dense::qfi_pure_dense`] / [`dense::qfi_mixed_dense`]: statevector and
//!   eigendecomposition oracles for desk-scale verification.
//!
//! QFI convention: `F(psi, H) = <H^2> - <H>^2` for pure states (no factor 4).

pub mod bits;
pub mod clifford;
pub mod constructions;
pub mod css;
pub mod dense;
pub mod distance;
pub mod error;
pub mod graph;
pub mod hamiltonian;
pub mod io;
pub mod lightcone;
pub mod pauli;
pub mod qfi;
pub mod state;
pub mod tanner;

pub use error::{Error, Result};
pub use hamiltonian::{LocalityProfile, PauliHamiltonian};
pub use pauli::{PauliKind, PauliOperator};
pub use state::StabilizerState;
pub use css::{CssCode, StabilizerCode};
