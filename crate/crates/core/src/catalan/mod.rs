//! Catalan families: binary trees, Dyck paths, planar forests, the maps
//! between them, and a brute-force Tamari order.

mod dyck;
mod forest;
mod rotation;
mod tree;

pub use dyck::{dyck_from_tree, tree_from_dyck, DyckError, DyckPath, Step};
pub use forest::{
    dec_forest_of_tree, inc_forest_of_tree, tree_from_dec_forest, tree_from_inc_forest,
    ForestError, PlanarForest,
};
pub use rotation::{tamari_leq_bruteforce, RotationOracle};
pub use tree::{enumerate_trees, BinaryTree, TreeError};
