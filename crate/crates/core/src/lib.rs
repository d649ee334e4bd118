pub mod perm;
pub mod poly;
pub mod signed;
pub mod enumerate;
pub mod identities;
pub mod bijections;
pub mod series;
pub mod orthopoly;
pub mod numbers;
