//! Hypergeometric factorization of zeta functions of monomial deformations
//! of Fermat-type hypersurfaces, with independent verification oracles.
//!
//! The central object is the one-parameter family
//!
//! ```text
//! F_λ(T) = c_1·T^{a_1} + … + c_{n+1}·T^{a_{n+1}} − λ·T_1⋯T_{n+1}
//! ```
//!
//! of degree-(n+1) hypersurfaces X_λ ⊂ P^n over F_q. The library
//!
//! * counts points on X_λ over extensions F_{q^r} (brute enumeration and a
//!   stratified character-sum oracle),
//! * predicts the same counts from finite-field hypergeometric sums attached
//!   to a small set of *spectral pieces*,
//! * assembles the interesting factor P(T) of the zeta function and
//!   classifies the weights of its reciprocal roots, and
//! * decides ordinarity and computes the p-adic unit root of P via a
//!   truncated deformation series.
//!
//! # Example: a deformed cubic over F_7
//!
//! ```
//! use hgzeta::chargauss::CharTower;
//! use hgzeta::count::brute_count;
//! use hgzeta::family::FamilySpec;
//! use hgzeta::intlin::IntMatrix;
//! use hgzeta::padic::{unit_root, PadicCtx};
//! use hgzeta::zetafac::{assemble_p, build_pieces, compute_u_terms, predicted_count};
//! use rug::Integer;
//!
//! // x³ + y³ + z³ − λ·xyz in P² over F_7, with exponent vectors as columns.
//! let mut a = IntMatrix::zero(3, 3);
//! for i in 0..3 {
//!     a.set(i, i, Integer::from(3));
//! }
//! let spec = FamilySpec::new(2, 7, 1, a, &[1, 1, 1])?;
//! assert_eq!(spec.alpha.alphas, vec![1, 1, 1]);
//!
//! let lam = spec.lambda_from_int(2);
//! assert!(spec.lambda_admissible(lam));
//!
//! // Hypergeometric prediction vs. exhaustive count over F_7 and F_49.
//! let tower = CharTower::new(7, 1, 6, 256);
//! let tbl1 = tower.level(1)?;
//! let pieces = build_pieces(&spec, lam, &tbl1)?;
//! let u_terms = compute_u_terms(&spec, lam, &pieces, &tbl1);
//! for r in 1..=2 {
//!     let tbl_r = tower.level(r)?;
//!     let predicted = predicted_count(&spec, lam, &pieces, &u_terms, &tbl_r)?;
//!     let brute = brute_count(&spec, lam, r, 1_000_000)?.total;
//!     assert_eq!(predicted, brute);
//! }
//!
//! // The middle factor of the zeta function: 1 + T + 7T² here.
//! let p_factor = assemble_p(&spec, lam, &tower, 6)?;
//! assert_eq!(p_factor.coefficients, vec![1, 1, 7]);
//!
//! // The fiber is ordinary, so P has a p-adic unit reciprocal root.
//! let ctx = PadicCtx::new(&spec.field, 4);
//! assert!(unit_root(&spec, &ctx, lam)?.is_some());
//! # Ok::<(), hgzeta::Error>(())
//! ```

pub mod algval;
pub mod chargauss;
pub mod config;
pub mod count;
pub mod error;
pub mod family;
pub mod ffield;
pub mod hgff;
pub mod intlin;
pub mod padic;
pub mod report;
pub mod zetafac;

pub use error::{Error, Result};
