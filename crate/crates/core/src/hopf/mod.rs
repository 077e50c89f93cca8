//! Finite-dimensional Hopf algebras: validation, Haar data, duality and
//! the examples used throughout.

mod algebra;
pub mod corpus;
mod dual;
pub mod fourier;
pub mod haar;
pub mod mutate;
pub mod radford;

pub use algebra::{validate_hopf, CoproductTerm, HopfAlgebra, HopfData, HopfSummary};
pub use corpus::{corpus, standard_corpus, CorpusName, Group};
pub use dual::{dual_data, dual_hopf};
pub use fourier::{fourier, normalized_duality, pontrjagin, FourierMaps, Pontrjagin};
pub use haar::{haar_data, left_integral, Functional, HaarData};
pub use radford::{left_harpoon, radford_check, right_harpoon, RadfordResult};
