//! Counters reported by the incremental structures.

use alloc::vec::Vec;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Full rebuilds after the initial build (exact mode).
    pub full_rebuilds: usize,
    /// Rebuilds of the certificate over an unchanged sparsifier.
    pub partial_rebuilds: usize,
    /// Entries into the mode where only the degree heap is maintained.
    pub special_steps: usize,
    /// Threshold halvings in single-sample mode.
    pub rebuild_steps: usize,
    /// Largest number of edges held at once by the incremental structure.
    pub max_stored_edges: usize,
    /// Insertions per phase; a phase ends at each rebuild.
    pub phase_insertions: Vec<usize>,
    /// `(vertices, edges)` of each sparsifier built.
    pub sparsifier_sizes: Vec<(usize, usize)>,
    /// `(superphase, λ_H)` at every certificate build; superphase `j` starts
    /// with the `j`-th full rebuild, 0 being the initial build.
    pub lambda_h_history: Vec<(usize, usize)>,
    /// Reference minimum cut value at each full rebuild, starting with the
    /// initial build.
    pub lambda_star_history: Vec<usize>,
    /// Tracker constructions, including the first.
    pub tracker_builds: usize,
    /// Queries that found no qualifying sampled level.
    pub top_level_fallbacks: usize,
}

impl RunStats {
    pub(crate) fn note_stored(&mut self, edges: usize) {
        self.max_stored_edges = self.max_stored_edges.max(edges);
    }

    pub(crate) fn close_phase(&mut self, insertions: usize) {
        self.phase_insertions.push(insertions);
    }
}
