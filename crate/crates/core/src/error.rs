use thiserror::Error;

/// Errors raised by the evaluators, the root finder and the CLI front end.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// `z` lies within the pole gate of the lattice point `2*pi*i*k / log(base)`.
    #[error("pole: z is {distance:.3e} from the pole 2*pi*i*{lattice_index}/log({base}) of the term 1/({base}^z - 1)")]
    Pole {
        base: u64,
        lattice_index: i64,
        distance: f64,
    },

    /// `1 - 2^(1-z)` is too small to divide by.
    #[error("singular prefactor: |1 - 2^(1-z)| = {magnitude:.3e} at z = {re}{im:+}i")]
    SingularPrefactor { re: f64, im: f64, magnitude: f64 },

    #[error("outside the Laurent convergence disk: |z| = {abs_z} must be below 2*pi/log({largest_base}) = {radius}")]
    OutsideLaurentDisk {
        abs_z: f64,
        largest_base: u64,
        radius: f64,
    },

    #[error("contour error: {0}")]
    Contour(String),

    /// Adjacent samples on a contour differ in phase by more than pi/2.
    #[error("contour resolution too coarse with {samples} samples (phase step {max_step:.3} rad); use more samples")]
    Resolution { samples: usize, max_step: f64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors that come from the mathematics (poles, domains, contours)
    /// rather than from malformed arguments.
    pub fn is_mathematical(&self) -> bool {
        !matches!(self, Error::InvalidInput(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
