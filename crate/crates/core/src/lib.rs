pub mod error;
pub mod exact;
pub mod stern;
pub mod boxfn;
pub mod oplus;
pub mod fibrep;
pub mod sigma_binet;
pub mod verify;
pub mod cli;
