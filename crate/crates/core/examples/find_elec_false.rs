//! Finds the first graph, enumerating by vertex count and then by edge mask,
//! whose electrification is not hyperbolic, and prints it in `.gg` form.

#[path = "../tests/common/mod.rs"]
mod common;

use gpr_core::squares::SquareStructure;

fn main() {
    for n in 4..=8usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0u64..1 << pairs {
            let g = common::graph_from_mask(n, mask);
            if SquareStructure::new(&g).electrification_hyperbolic().hyperbolic {
                continue;
            }
            assert!(!common::brute_electrification_hyperbolic(&g), "oracle disagrees on mask {mask}");
            println!("# n = {n}, mask = {mask}");
            print!("{}", g.to_gg());
            return;
        }
        eprintln!("none on {n} vertices");
    }
}
