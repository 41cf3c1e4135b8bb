/// Size limits applied when building groups and subgroup lattices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// largest group order accepted for lattice enumeration
    pub order_cap: usize,
    /// largest subgroup count before enumeration gives up
    pub lattice_cap: usize,
    /// largest permutation-group closure
    pub closure_cap: usize,
}

impl Limits {
    pub const DEFAULT_ORDER_CAP: usize = 128;
    pub const ENV_ORDER_CAP: &'static str = "CHARPOSET_CAP";

    /// Defaults, with the order cap taken from `CHARPOSET_CAP` when set.
    pub fn from_env() -> Self {
        let mut l = Self::default();
        if let Some(cap) = std::env::var(Self::ENV_ORDER_CAP)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            l.order_cap = cap;
        }
        l
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: Self::DEFAULT_ORDER_CAP,
            lattice_cap: 20_000,
            closure_cap: 512,
        }
    }
}
