pub mod context;
pub mod error;
pub mod fusion;
pub mod linalg;
pub mod rational;
pub mod reduction;
pub mod repbuilder;
pub mod rootsystem;
pub mod tensor;
pub mod weights;

pub use error::{Error, Result};
pub use rational::Rational;
pub use rootsystem::{Family, LieType, OrthoVec, Root, RootRef, RootSystem, Weight};
pub use context::{LieContext, ResultStore};
