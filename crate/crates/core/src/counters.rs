//! Per-thread operation counters.
//!
//! With the `instrument` feature the inversion routines record loop trip
//! counts, digit-by-number multiplications and trace allocations here. Without
//! it every hook compiles to nothing and [`snapshot`] always reads zero.

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Counters {
    /// Iterations of the Koç-family digit loop.
    pub koc_iterations: u64,
    /// Digit-by-number multiplications performed by Koç-family runs.
    pub koc_digit_mults: u64,
    /// Iterations of the radix (carry recurrence) digit loop.
    pub radix_iterations: u64,
    /// Digit-by-number multiplications performed by radix-family runs,
    /// including the one in the initialization.
    pub radix_digit_mults: u64,
    /// Number of traces allocated.
    pub traces: u64,
}

#[cfg(feature = "instrument")]
mod imp {
    use super::Counters;
    use std::cell::Cell;

    thread_local! {
        static COUNTERS: Cell<Counters> = Cell::new(Counters::default());
    }

    pub fn snapshot() -> Counters {
        COUNTERS.with(|c| c.get())
    }

    pub fn reset() {
        COUNTERS.with(|c| c.set(Counters::default()));
    }

    #[inline]
    pub(crate) fn bump(f: impl FnOnce(&mut Counters)) {
        COUNTERS.with(|c| {
            let mut v = c.get();
            f(&mut v);
            c.set(v);
        });
    }
}

#[cfg(not(feature = "instrument"))]
mod imp {
    use super::Counters;

    pub fn snapshot() -> Counters {
        Counters::default()
    }

    pub fn reset() {}

    #[inline(always)]
    pub(crate) fn bump(_f: impl FnOnce(&mut Counters)) {}
}

pub use imp::{reset, snapshot};
pub(crate) use imp::bump;

/// Whether the counters are live in this build.
pub const ENABLED: bool = cfg!(feature = "instrument");
