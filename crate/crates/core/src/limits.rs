//! Size caps for the exponential-time engines.

/// Caps applied by the counting, choosability and Alon–Tarsi engines.
///
/// The defaults keep every query at desk scale. Raising a cap is allowed but
/// has to go through [`Limits::may_not_terminate`], which makes the intent
/// explicit at the call site.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum order for exact counting, sampling and chromatic number.
    pub count_max_n: usize,
    /// Maximum order for list chromatic number / brute-force choosability.
    pub choose_max_n: usize,
    /// Maximum arc count for Alon–Tarsi enumeration.
    pub alon_tarsi_max_edges: usize,
    /// Maximum number of colourings enumerated explicitly in the ratio checks.
    pub enumerate_max_colorings: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            count_max_n: 64,
            choose_max_n: 12,
            alon_tarsi_max_edges: 30,
            enumerate_max_colorings: 5_000_000,
        }
    }
}

impl Limits {
    /// Lifts every cap. Queries made with these limits may not terminate in
    /// any reasonable time.
    pub fn may_not_terminate() -> Self {
        Limits {
            count_max_n: usize::MAX,
            choose_max_n: usize::MAX,
            alon_tarsi_max_edges: usize::MAX,
            enumerate_max_colorings: usize::MAX,
        }
    }

    pub(crate) fn check(&self, what: &'static str, actual: usize, cap: usize) -> crate::Result<()> {
        if actual > cap {
            return Err(crate::Error::SizeCap { what, actual, cap });
        }
        Ok(())
    }
}
