//! Exact polynomial arithmetic in `q` over `Z`, `Q` and `F_p`.

pub mod coeff;
pub mod cyclotomic;
pub mod dense;
pub mod lemmas;
pub mod poly;
pub mod qnum;
pub mod ring;

pub use cyclotomic::{cyclotomic, cyclotomic_in};
pub use lemmas::{
    qlucas_direct_table, qlucas_predicts_unit, split_phi, verify_congruence, verify_cyclotomic_gcd,
    GcdClassification,
};
pub use poly::Poly;
pub use qnum::{q_binomial, q_factorial, q_integer};
pub use ring::{euler_phi, is_prime, primes_up_to, split_prime_power, CoeffRing};
