//! Float method shims for `no_std` builds.

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("snormed-core requires either the `std` or the `libm` feature");

#[cfg(not(feature = "std"))]
pub(crate) trait FloatShim: Sized {
    fn sqrt(self) -> Self;
    fn cos(self) -> Self;
    fn sin(self) -> Self;
    fn powf(self, e: Self) -> Self;
    fn round(self) -> Self;
}

#[cfg(not(feature = "std"))]
impl FloatShim for f64 {
    fn sqrt(self) -> f64 {
        libm::sqrt(self)
    }
    fn cos(self) -> f64 {
        libm::cos(self)
    }
    fn sin(self) -> f64 {
        libm::sin(self)
    }
    fn powf(self, e: f64) -> f64 {
        libm::pow(self, e)
    }
    fn round(self) -> f64 {
        libm::round(self)
    }
}
