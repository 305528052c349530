//! Synchronization analysis for networks of diffusively coupled nonlinear
//! oscillators with per-node parameter mismatch.
//!
//! The crate is organized around the pipeline used by the `netsync` CLI:
//!
//! * [`graph`] — undirected weighted topologies, their Laplacians and spectra;
//! * [`dynamics`] — the node model interface (nominal field `f`, mismatch
//!   channel `G`), the Lorenz instance, mismatch sampling, and the open-loop
//!   network right-hand side;
//! * [`integrate`] — fixed-step RK4 with an observer hook for metric logging;
//! * [`certify`] — Lyapunov-type certificates: the synchronization margin
//!   λ*, the ultimate error bound, pinned-decay feasibility, and Monte Carlo
//!   validators for the bound matrices;
//! * [`control`] — reference system, pinning feedback with decentralized
//!   mismatch estimation, and the closed-loop right-hand side.
//!
//! All operations are deterministic: sampling is driven by explicit seeds and
//! parallel evaluation is structured so results do not depend on the worker
//! count (see [`threading`]).

pub mod certify;
pub mod control;
pub mod dynamics;
pub mod graph;
pub mod integrate;
pub mod threading;
