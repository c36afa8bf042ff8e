//! Zeckendorf decomposition and the exact behaviour of the summand count
//! `L(n)` between consecutive integers.
//!
//! * [`rep`]: decomposition, recomposition and successor on representations.
//! * [`step`]: `L(n)`, `f(n) = L(n+1) - L(n)` and its sign classification.
//! * [`phi`] and [`sets`]: exact `⌊mφ⌋` arithmetic and the closed-form sets
//!   where `L` rises, falls, peaks, or contains a given summand.
//! * [`verify`]: brute-force sweeps that check the closed forms against `L`.

pub mod cli;
pub mod error;
pub mod fib;
pub mod phi;
pub mod rep;
pub mod sets;
pub mod step;
pub mod verify;

pub use error::{Error, Result};
pub use fib::{FibTable, MAX_FIB_INDEX};
pub use phi::{floor_div_phi, floor_n_phi, floor_shifted, isqrt_u128, PHI_INPUT_MAX};
pub use rep::{decompose, recompose, successor, ZeckRep};
pub use sets::{
    elements_up_to, first_elements, membership, s1_element, s2_element, s3_element, zk_elements,
    zpair_elements, SetCursor, SetId,
};
pub use step::{classify_step, deep_witness, step, summand_count, StepClass, Witness};
