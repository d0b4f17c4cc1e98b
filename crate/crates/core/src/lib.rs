//! Exact character theory for the symmetric groups `S_n` and the wreath
//! products `G ≀ S_n` with `G` finite abelian.
//!
//! The central objects are boundary sequences of partitions. Peeling a ribbon
//! is a swap of two letters in that word, the `r`-quotient is a
//! de-interlacing of it, and the Murnaghan-Nakayama rule becomes a signed
//! count of swap sequences. On top of that the crate computes the `r`-sign
//! relating zero-colored wreath characters to symmetric group characters at
//! `rμ`, and sweeps that identity exhaustively over small cases.

pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod partition;
pub mod quotient;
pub mod ribbons;
pub mod signs;
pub mod verify;

pub use characters::{
    centralizer_order, character_table, chi_sn, class_size, psi_wreath, psi_zero_colored,
    AbelianGroupSpec, CharacterTable, ColoredCycleType,
};
pub use cyclotomic::CyclotomicInt;
pub use error::{Error, Result};
pub use partition::{
    anchor_position, beta_numbers, boundary_sequence, dimension, partition_from_boundary,
    partitions_of, row_color_sequence, BoundarySequence, Composition, Partition, RowColorSequence,
};
pub use quotient::{
    enumerate_par_r, phi_r, r_core, r_quotient, rpartite_partitions, RPartitePartition,
};
pub use ribbons::{
    enumerate_mu_peelings, enumerate_rpartite_tableaux, peel, peel_candidates, peel_mod, PeelStep,
    PeelTrace, RPartiteRibbonTableau, TableauEntry,
};
pub use signs::{
    d_r_distance, inv_r, sign2_closed, sign_r, sign_report, sign_report_at, SignReport,
};
pub use verify::{
    verify_degree_fact, verify_identity, verify_identity_abelian, Failure, VerificationReport,
    VerifyOptions,
};
