//! Exact invariants of monomial ideals over a polynomial ring.
//!
//! The crate computes irredundant primary decompositions, associated primes,
//! the size and bigsize invariants, depth through lcm-lattice homology with
//! an independent Taylor-complex oracle, and exact Stanley depth through
//! interval partitions of the characteristic poset. A corpus layer generates
//! ideal families and checks the depth and Stanley-depth theorems that hold
//! for them, reporting violations as replayable instances.

pub mod decomp;
pub mod error;
pub mod format;
pub mod homology;
pub mod ideal;
pub mod lattice;
pub mod modify;
pub mod ring;
pub mod sdepth;
pub mod verify;

pub use decomp::{
    associated_primes, has_minimal_depth, is_star_condition, primary_decomposition, size_bigsize,
    Decomposition, MonomialPrime, PrimaryComponent, SizeReport,
};
pub use error::{Error, Result};
pub use format::{parse_ideal, render_ideal, render_ideal_inline, IdealJson};
pub use homology::{
    betti_lcm, betti_lcm_with, betti_taylor, depth_ideal, depth_ideal_with, depth_quotient,
    depth_quotient_with, order_complex_homology, BettiConfig, BettiTable, FieldChar,
};
pub use ideal::{lexsegment, minimalize, MonomialIdeal};
pub use lattice::{lcm_lattice, LcmLattice};
pub use modify::{modify_trivial, substitute, substitute_monomial, Alpha};
pub use ring::{Monomial, Ring};
pub use sdepth::{
    admits_partition, certify_partition, char_poset, sdepth_ideal, sdepth_quotient,
    CertificateError, CertifyOutcome, CharacteristicPoset, Interval, IntervalPartition,
    PartitionSearch, PosetMode, SdepthConfig, SdepthResult,
};
pub use verify::{run_suite, CheckResult, CheckStatus, CorpusSpec, SuiteName, SuiteReport};
