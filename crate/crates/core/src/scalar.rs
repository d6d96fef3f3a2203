//! Scalar types that can carry a regular-genus value.
//!
//! Genus values are integers for bipartite graphs and half-integers otherwise,
//! so every computation is done on the exact doubled value and converted once.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};

pub trait GenusScalar: Num + Clone + PartialOrd + Debug + Display {
    /// The value `twice / 2`.
    fn from_halves(twice: i64) -> Self;

    fn is_integral(&self) -> bool;
}

impl<T> GenusScalar for Ratio<T>
where
    T: Integer + Clone + FromPrimitive + Debug + Display,
{
    fn from_halves(twice: i64) -> Self {
        let numer = T::from_i64(twice).expect("genus value fits the integer type");
        Ratio::new(numer, T::from_u8(2).unwrap())
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

macro_rules! impl_float_genus {
    ($f:ty) => {
        impl GenusScalar for $f {
            fn from_halves(twice: i64) -> Self {
                twice as $f / 2.0
            }

            fn is_integral(&self) -> bool {
                self.fract() == 0.0
            }
        }
    };
}

impl_float_genus!(f32);
impl_float_genus!(f64);
