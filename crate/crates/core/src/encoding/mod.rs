//! Quantum message bases for cyclic permutation channels.

mod basis;
mod fkm;
mod state;

pub use basis::{
    encode_message, irrep_label, message_basis_cyclic, message_basis_cyclic_bounded,
    orbit_fourier_basis, root_of_unity, BasisEntry, BasisExport, EntryExport, FourierState,
    MessageBasis,
};
pub use fkm::{fkm_representatives, fkm_representatives_bounded, Necklaces};
pub use state::{AmplitudeRecord, StateVector};
