//! Algebraic coding theory over finite fields.
//!
//! The crate provides exact arithmetic in GF(p^r), dense matrices and
//! polynomials over those fields, a [`LinearCode`] type with the usual
//! constructors and transforms, evaluation codes built from point sets and
//! polynomial spans (including Reed–Solomon, Reed–Muller, Cartesian and toric
//! codes), the classical Hamming, cyclic, quasi-cyclic and LDPC families,
//! syndrome decoding, and Tamo–Barg locally recoverable codes.
//!
//! ```
//! use algcode::{hamming_code, syndrome_decode};
//!
//! let h = hamming_code(2, 3).unwrap();
//! let word = h.encode(&[1, 0, 1, 0]).unwrap();
//! assert_eq!(word, vec![0, 1, 0, 1, 0, 1, 0]);
//! let mut noisy = word.clone();
//! noisy[4] = 1;
//! assert_eq!(syndrome_decode(&h, &noisy, 3).unwrap(), word);
//! ```

pub mod code;
pub mod decode;
pub mod error;
pub mod evalcode;
pub mod expr;
pub mod families;
pub mod galois;
pub mod io;
pub mod lrc;
pub mod matrix;
pub mod multipoly;
pub mod upoly;

pub use code::{LinearCode, DEFAULT_ENUMERATION_BOUND};
pub use decode::{syndrome_decode, SyndromeTable};
pub use error::{Error, Result};
pub use evalcode::EvaluationCode;
pub use families::{cyclic_code, hamming_code, quasi_cyclic_code, rand_ldpc};
pub use galois::{FieldElement, FieldSpec};
pub use io::CodeFile;
pub use lrc::{is_good_polynomial, LocallyRecoverableCode, LrcParams};
pub use matrix::MatrixGF;
pub use multipoly::{
    bm_vanishing_ideal, Monomial, MonomialOrder, MultiPoly, PointSet, VanishingIdeal,
};
pub use upoly::UniPoly;
