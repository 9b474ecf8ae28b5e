pub mod chartable;
pub mod count;
pub mod encode;
pub mod representatives;
pub mod scaling;
pub mod simulate;
pub mod verify;
