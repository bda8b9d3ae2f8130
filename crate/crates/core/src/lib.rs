pub mod algebra;
pub mod field;
pub mod groebner;
pub mod poly;
pub mod regular;
pub mod scenario;
pub mod valuation;
