//! placeholder
pub struct IsometryBudget;
