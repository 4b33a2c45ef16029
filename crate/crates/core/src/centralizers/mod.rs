//! Centralizers, regularity, Jordan decomposition and Kostant–Rallis slices
//! inside the matrix models.

mod group;
mod jordan;
mod lie;
mod sampling;
mod slice;

pub use group::{group_centralizer_info, CentralizerReport, CommutationSystem, GroupInfo};
pub use jordan::{jordan_decompose, JordanPair};
pub use lie::{is_abelian, is_regular, is_regular_with, lie_centralizer, nonabelian_witness, regular_centralizer_dim, Ambient};
pub use sampling::{
    cayley, centralizer_commutativity, random_cartan_point, random_p, random_translate, sample_regular, sparse_nilpotent,
    CommutativityReport, Sample, SampleSource,
};
pub use slice::{kostant_rallis_slice, random_qi, solve_invariants, triangular_order, verify_slice, KrSlice, SliceVerification};
