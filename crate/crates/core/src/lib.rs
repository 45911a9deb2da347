pub mod catalog;
pub mod classifier;
pub mod enumerator;
pub mod numtheory;
pub mod reference;
pub mod verify;
