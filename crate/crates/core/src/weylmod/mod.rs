//! `V(ω_1)^{⊗k} ⊗ A_k` as a `(sl_{n+1}[t], S_k)`-bimodule: the current
//! action, the contravariant forms, highest-weight invariants and the
//! pairing onto `M_{k,ξ}`.

mod checks;
mod current;
mod forms;
mod highest;
mod tensor;

pub use checks::*;
pub use current::{act_current, act_matrix_unit, CurrentGenerator};
pub use forms::{e_vector, form_k, gram_data, gram_nondegeneracy_check, pair, wedge, GramData};
pub use highest::{
    e_vector_default, highest_weight_dimension, highest_weight_space, hw_vectors, hw_vectors_of_content, minimal_n,
    schur_weyl_dimension_check, wedge_model_check, weight_space_decomposition, weight_words,
};
pub use tensor::{TensorElement, TermRecord, Word};
