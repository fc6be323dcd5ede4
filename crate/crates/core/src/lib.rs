pub mod algebra;
pub mod cyclotomic;
pub mod dunkl;
pub mod error;
pub mod expr;
pub mod group;
pub mod matrix;
pub mod mpoly;
pub mod par;
pub mod random;
pub mod rational;
pub mod sl2;
pub mod structure;
pub mod supertrace;
pub mod verify;
