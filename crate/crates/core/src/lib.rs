pub mod algebra;
pub mod chain;
pub mod simplicial;
pub mod cech;
pub mod integrality;
pub mod lie;
