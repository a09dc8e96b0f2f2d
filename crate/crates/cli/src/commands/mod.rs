pub mod analyze;
pub mod batch;
pub mod gen;
pub mod verify;
