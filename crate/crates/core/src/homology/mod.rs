//! Chain complexes, resolutions, and Ext/Tor dimensions.

mod complex;
mod coresolution;
mod exttor;
mod resolution;

pub use complex::{ChainComplex, Exactness};
pub use coresolution::{ext_dims_injective, injective_coresolution, splice, splice_unchecked, InjectiveCoresolution};
pub use exttor::{
    ext_dims, ext_dims_res, hom_differential, tensor_differential, tor_dims, tor_dims_res,
    Certificate, ExtTorTable, Vanishing,
};
pub use resolution::{free_resolution, FreeResolution, PERIODICITY_DIM_CAP};
