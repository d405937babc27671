//! Explicit highest-weight modules and the Lie algebra's Chevalley basis.

mod blockop;
mod chevalley;
mod kspace;
mod module;

pub use blockop::{BlockOp, DenseBlock};
pub use chevalley::{chevalley_basis_from_adjoint, ChevalleyBasis, LieVector};
pub use kspace::{
    fusion_via_kspace, kspace, pairing_report, raising_escapes_kspace, zero_weight_report, PairingReport, Subspace,
    ZeroWeightReport,
};
pub use module::{build_module, build_module_with, ExplicitModule, ModuleSkeleton, DEFAULT_DIMENSION_CAP};
