pub mod scalars;
pub mod linalg;
pub mod upoly;
pub mod mpoly;
pub mod algebra;
pub mod dual;
pub mod error;
pub mod calculi;
pub mod fodc;
pub mod exterior;
pub mod hodge;
pub mod sphere;
pub mod verify;
