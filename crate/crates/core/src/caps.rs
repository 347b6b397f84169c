use serde::{Deserialize, Serialize};

/// Resource caps for exact computations.
///
/// Every brute-force operation refuses to run past its cap instead of
/// degrading; the caps are recorded in JSON reports so a run is
/// reproducible from its output alone.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group order for full element enumeration.
    pub element_cap: u128,
    /// Largest group order for subgroup-lattice computations.
    pub lattice_cap: u128,
    /// Largest group order for the streaming normalizer scan.
    pub normalizer_cap: u128,
    /// Largest permutation degree for coset actions and file input.
    pub degree_cap: usize,
    /// Largest point count for affine semidirect constructions.
    pub affine_point_cap: u128,
    /// Search bound for prime scans.
    pub prime_search_bound: u64,
    /// Random attempts per module split before giving up.
    pub meataxe_budget: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            element_cap: 10_000,
            lattice_cap: 5_000,
            normalizer_cap: 10_000_000,
            degree_cap: 100_000,
            affine_point_cap: 50_000,
            prime_search_bound: 1_000_000,
            meataxe_budget: 200,
        }
    }
}

impl Caps {
    /// Apply environment overrides (used by the CLI; names documented in `--help`).
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        fn get<T: std::str::FromStr>(name: &str, into: &mut T) {
            if let Ok(v) = std::env::var(name) {
                if let Ok(parsed) = v.parse::<T>() {
                    *into = parsed;
                }
            }
        }
        get("GROUPTK_ELEMENT_CAP", &mut caps.element_cap);
        get("GROUPTK_LATTICE_CAP", &mut caps.lattice_cap);
        get("GROUPTK_NORMALIZER_CAP", &mut caps.normalizer_cap);
        get("GROUPTK_DEGREE_CAP", &mut caps.degree_cap);
        get("GROUPTK_AFFINE_POINT_CAP", &mut caps.affine_point_cap);
        get("GROUPTK_PRIME_SEARCH_BOUND", &mut caps.prime_search_bound);
        get("GROUPTK_MEATAXE_BUDGET", &mut caps.meataxe_budget);
        caps
    }
}
