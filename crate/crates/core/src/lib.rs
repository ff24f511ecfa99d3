//! Exact arithmetic for Cantor's transfinite numbers.
//!
//! * [`ordinal`]: ordinals below ε₀ in Cantor normal form.
//! * [`cardinal`]: finite cardinals and alephs, with the continuum hypothesis
//!   as a switch.
//! * [`countability`]: explicit one-to-one correspondences with ℕ, plus the
//!   diagonal construction.
//! * [`omega_order`]: rearrangements of ℕ of any order type below ω^ω.
//! * [`derived`]: closed countable sets and their transfinite derived sets.
//! * [`real`]: fundamental-sequence reals with explicit moduli.
//! * [`expr`] and [`real_expr`]: the expression language, used by [`cli`].
//!
//! ```
//! use transfinitum::{OmegaOrder, Ordinal};
//!
//! let w = Ordinal::omega();
//! let a = &(&w + &Ordinal::one()) * &Ordinal::from(2u32);
//! assert_eq!(a.to_string(), "w*2 + 1");
//!
//! let order = OmegaOrder::new("w*2".parse().unwrap()).unwrap();
//! assert_eq!(order.show_prefix(3), "1, 3, 5, ..., 2, 4, 6, ...");
//! ```

pub mod cardinal;
pub mod cli;
pub mod countability;
pub mod derived;
pub mod expr;
pub mod json;
pub mod omega_order;
pub mod ordinal;
pub mod real;
pub mod real_expr;

pub use cardinal::{Cardinal, CardinalConfig, CardinalOrdering};
pub use derived::SetTerm;
pub use expr::{eval, eval_str, parse, Expr, Truth, Value};
pub use omega_order::OmegaOrder;
pub use ordinal::{Ordinal, OrdinalKind};
pub use real::FundamentalSeq;
