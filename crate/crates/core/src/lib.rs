//! Exact symbolic-numeric toolkit for germs of codimension-one holomorphic
//! webs: contact lifts, criminants and discriminants, polynomial first
//! integrals by elimination, and Levi-flat hypersurfaces tangent to webs.

pub mod clairaut;
pub mod cli;
pub mod contact;
pub mod elimination;
pub mod numeric;
pub mod poly;
pub mod web;
